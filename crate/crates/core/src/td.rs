//! Tree decompositions: the data model, a validator for the two defining
//! conditions (every vertex's bags induce a nonempty connected subtree;
//! every edge lies inside some bag), width, and the constructive
//! decompositions used as width certificates.

use crate::bits::BitSet;
use crate::graphs::Graph;
use crate::subsets::KSubset;
use crate::{Error, Result};
use std::fmt;

/// A tree of bags over the vertices of a host graph. Bag node ids are
/// `0..bags.len()`; bag contents are 0-based host vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<Vec<usize>>,
    tree_edges: Vec<(usize, usize)>,
    host_vertices: usize,
}

impl TreeDecomposition {
    /// Builds a decomposition, checking the structural invariants: at least
    /// one bag, bag contents inside the host vertex range, and tree edges
    /// forming a tree on the bag nodes. Bags are sorted and deduplicated.
    pub fn new(
        bags: Vec<Vec<usize>>,
        tree_edges: Vec<(usize, usize)>,
        host_vertices: usize,
    ) -> Result<Self> {
        if bags.is_empty() {
            return Err(Error::invalid(
                "a tree decomposition needs at least one bag",
            ));
        }
        let nb = bags.len();
        let mut bags = bags;
        for bag in &mut bags {
            bag.sort_unstable();
            bag.dedup();
            if let Some(&v) = bag.last() {
                if v >= host_vertices {
                    return Err(Error::invalid(format!(
                        "bag vertex {v} outside host range 0..{host_vertices}"
                    )));
                }
            }
        }
        if tree_edges.len() + 1 != nb {
            return Err(Error::invalid(format!(
                "{} tree edges cannot form a tree on {nb} bags",
                tree_edges.len()
            )));
        }
        // Connectivity check via union-find.
        let mut parent: Vec<usize> = (0..nb).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in &tree_edges {
            if a >= nb || b >= nb {
                return Err(Error::invalid(format!(
                    "tree edge ({a},{b}) outside bag range 0..{nb}"
                )));
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Err(Error::invalid(format!(
                    "tree edge ({a},{b}) closes a cycle"
                )));
            }
            parent[ra] = rb;
        }
        let mut tree_edges = tree_edges;
        for e in &mut tree_edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        tree_edges.sort_unstable();
        Ok(TreeDecomposition {
            bags,
            tree_edges,
            host_vertices,
        })
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    pub fn host_vertices(&self) -> usize {
        self.host_vertices
    }

    /// Max bag size minus one. A single empty bag gives -1, the convention
    /// for the empty graph.
    pub fn width(&self) -> i64 {
        self.bags.iter().map(|b| b.len() as i64).max().unwrap_or(0) - 1
    }

    /// Checks the two defining conditions against a host graph. Vertices are
    /// scanned in ascending order, then edges in lexicographic order, and the
    /// first failure is reported.
    pub fn validate(&self, g: &Graph) -> Result<Verdict> {
        if g.n_vertices() != self.host_vertices {
            return Err(Error::invalid(format!(
                "decomposition over {} vertices validated against a graph with {}",
                self.host_vertices,
                g.n_vertices()
            )));
        }
        let nb = self.bags.len();
        let mut containing: Vec<BitSet> = vec![BitSet::new(nb); self.host_vertices];
        for (b, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                containing[v].insert(b);
            }
        }
        let mut tree_adj: Vec<Vec<usize>> = vec![Vec::new(); nb];
        for &(a, b) in &self.tree_edges {
            tree_adj[a].push(b);
            tree_adj[b].push(a);
        }
        // Condition (i): occurrences nonempty and connected in the tree.
        for (v, occ) in containing.iter().enumerate() {
            let count = occ.len();
            let Some(start) = occ.iter().next() else {
                return Ok(Verdict::Violation(Violation::VertexInNoBag { vertex: v }));
            };
            let mut seen = BitSet::new(nb);
            seen.insert(start);
            let mut stack = vec![start];
            let mut reached = 1;
            while let Some(node) = stack.pop() {
                for &next in &tree_adj[node] {
                    if occ.contains(next) && !seen.contains(next) {
                        seen.insert(next);
                        reached += 1;
                        stack.push(next);
                    }
                }
            }
            if reached != count {
                return Ok(Verdict::Violation(Violation::VertexDisconnected {
                    vertex: v,
                }));
            }
        }
        // Condition (ii): every host edge inside some bag.
        for (u, w) in g.edges() {
            if containing[u].is_disjoint(&containing[w]) {
                return Ok(Verdict::Violation(Violation::EdgeNotCovered { u, w }));
            }
        }
        Ok(Verdict::Valid)
    }
}

/// Outcome of [`TreeDecomposition::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Violation(Violation),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// First failing vertex or edge; messages print 1-based ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Condition (i): the vertex appears in no bag.
    VertexInNoBag { vertex: usize },
    /// Condition (i): the bags holding the vertex are disconnected in the tree.
    VertexDisconnected { vertex: usize },
    /// Condition (ii): no bag contains both endpoints.
    EdgeNotCovered { u: usize, w: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexInNoBag { vertex } => {
                write!(f, "condition (i): vertex {} appears in no bag", vertex + 1)
            }
            Violation::VertexDisconnected { vertex } => write!(
                f,
                "condition (i): bags containing vertex {} are disconnected",
                vertex + 1
            ),
            Violation::EdgeNotCovered { u, w } => write!(
                f,
                "condition (ii): edge {{{},{}}} is in no bag",
                u + 1,
                w + 1
            ),
        }
    }
}

/// Star decomposition from an independent set `s`: a center bag `V \ s` with
/// one leaf bag `{v} ∪ N(v)` per `v ∈ s`. Always valid; its width is
/// `max(|V| - |s| - 1, max_{v ∈ s} deg(v))`, which realizes the bound
/// `tw(G) <= max(Δ(G), |V(G)| - α(G) - 1)` when `s` is maximum.
pub fn build_star_decomposition(g: &Graph, s: &[usize]) -> Result<TreeDecomposition> {
    let n = g.n_vertices();
    let mut in_s = BitSet::new(n.max(1));
    for &v in s {
        if v >= n {
            return Err(Error::invalid(format!(
                "independent-set vertex {v} outside 0..{n}"
            )));
        }
        in_s.insert(v);
    }
    if !g.is_independent_set(s) {
        return Err(Error::invalid(
            "star decomposition requires an independent set",
        ));
    }
    let center: Vec<usize> = (0..n).filter(|&v| !in_s.contains(v)).collect();
    let mut bags = vec![center];
    let mut tree_edges = Vec::with_capacity(s.len());
    for &v in s {
        let mut bag: Vec<usize> = g.neighbors(v).collect();
        bag.push(v);
        tree_edges.push((0, bags.len()));
        bags.push(bag);
    }
    TreeDecomposition::new(bags, tree_edges, n)
}

/// Fill-in construction from an elimination order: the bag of `v` is `{v}`
/// plus the neighbors of `v` that come later in the order within the
/// progressively filled graph; each bag hangs off the bag of its earliest
/// later neighbor.
pub fn decomposition_from_elimination_order(
    g: &Graph,
    order: &[usize],
) -> Result<TreeDecomposition> {
    let n = g.n_vertices();
    if order.len() != n {
        return Err(Error::invalid(format!(
            "elimination order has {} entries for {n} vertices",
            order.len()
        )));
    }
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || position[v] != usize::MAX {
            return Err(Error::invalid("elimination order is not a permutation"));
        }
        position[v] = i;
    }
    if n == 0 {
        return TreeDecomposition::new(vec![vec![]], vec![], 0);
    }

    let mut fill: Vec<BitSet> = (0..n).map(|v| g.adj_row(v).clone()).collect();
    let mut bags: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut tree_edges = Vec::with_capacity(n - 1);
    let mut eliminated = BitSet::new(n);
    for (i, &v) in order.iter().enumerate() {
        let mut later = fill[v].clone();
        later.difference_with(&eliminated);
        let later: Vec<usize> = later.iter().collect();
        // Later neighbors become a clique in the filled graph.
        for (a_idx, &a) in later.iter().enumerate() {
            for &b in &later[a_idx + 1..] {
                if !fill[a].contains(b) {
                    fill[a].insert(b);
                    fill[b].insert(a);
                }
            }
        }
        eliminated.insert(v);
        let parent = later.iter().copied().min_by_key(|&u| position[u]);
        let mut bag = later;
        bag.push(v);
        let node = bags.len();
        bags.push(bag);
        match parent {
            // Attach to the earliest-eliminated later neighbor's bag.
            Some(u) => tree_edges.push((node, position[u])),
            // No later neighbor: tie to the next bag to keep one tree.
            None if i + 1 < n => tree_edges.push((node, i + 1)),
            None => {}
        }
    }
    TreeDecomposition::new(bags, tree_edges, n)
}

/// Hand-pinned optimal-width decompositions for the two sporadic Johnson
/// complements. Both share one shape: a core bag `X`, one layer of bags
/// swapping a single vertex, and two leaf bags swapping two.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JohnsonWitness {
    /// The complement of `J(5,3)` (the Petersen graph), width 4.
    N5K3,
    /// The complement of `J(6,3)`, width 14.
    N6K3,
}

/// Builds the witness decomposition together with its host graph.
pub fn johnson_complement_witness(which: JohnsonWitness) -> (Graph, TreeDecomposition) {
    let n = match which {
        JohnsonWitness::N5K3 => 5,
        JohnsonWitness::N6K3 => 6,
    };
    let g = crate::graphs::build_johnson_complement(n, 3).expect("desk-scale build");
    let labels = g.labels().expect("built graphs are labelled");

    let vid = |elems: &[u32]| -> usize {
        let s = KSubset::new(n, elems).expect("witness subset");
        labels
            .iter()
            .position(|l| *l == s)
            .expect("subset is a vertex")
    };

    // The five 3-subsets kept outside the core bag.
    let outside = [
        vid(&[1, 2, 3]),
        vid(&[1, 2, 4]),
        vid(&[1, 2, 5]),
        vid(&[1, 3, 5]),
        vid(&[1, 4, 5]),
    ];
    let core: Vec<usize> = (0..g.n_vertices())
        .filter(|v| !outside.contains(v))
        .collect();
    let core_without = |drop: &[usize]| -> Vec<usize> {
        core.iter().copied().filter(|v| !drop.contains(v)).collect()
    };
    let with = |mut bag: Vec<usize>, add: &[usize]| {
        bag.extend_from_slice(add);
        bag
    };

    let x134 = vid(&[1, 3, 4]);
    let x235 = vid(&[2, 3, 5]);
    let x245 = vid(&[2, 4, 5]);

    // Node 0: {1,2,5} joins, {2,4,5} leaves.  Node 1: the core X.
    // Nodes 2/4 swap in {1,2,3}/{1,2,4} for {1,3,4}; their leaves 3/5 add
    // {1,4,5}/{1,3,5} while also dropping {2,4,5}/{2,3,5}.
    let bags = vec![
        with(core_without(&[x245]), &[vid(&[1, 2, 5])]),
        core.clone(),
        with(core_without(&[x134]), &[vid(&[1, 2, 3])]),
        with(
            core_without(&[x134, x245]),
            &[vid(&[1, 2, 3]), vid(&[1, 4, 5])],
        ),
        with(core_without(&[x134]), &[vid(&[1, 2, 4])]),
        with(
            core_without(&[x134, x235]),
            &[vid(&[1, 2, 4]), vid(&[1, 3, 5])],
        ),
    ];
    let tree_edges = vec![(0, 1), (1, 2), (2, 3), (1, 4), (4, 5)];
    let nv = g.n_vertices();
    let td = TreeDecomposition::new(bags, tree_edges, nv).expect("witness shape is a tree");
    (g, td)
}
