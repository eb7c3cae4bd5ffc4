//! Explicit construction of generalized Kneser graphs `K(n,k,t)`, Johnson
//! graphs `J(n,k)` and their complements, with vertices labelled by
//! k-subsets in colex-rank order, plus the degree and independence-number
//! facts that drive the treewidth formulas.

use crate::bits::BitSet;
use crate::subsets::{binomial, KSubset};
use crate::{Error, Result};
use num::bigint::BigUint;
use num::traits::Zero;

/// Parameters `(n, k, t)` of a generalized Kneser graph, `1 <= t < k <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamTriple {
    n: u32,
    k: u32,
    t: u32,
}

impl ParamTriple {
    pub fn new(n: u32, k: u32, t: u32) -> Result<Self> {
        if !(1 <= t && t < k && k <= n) {
            return Err(Error::invalid(format!(
                "parameters must satisfy 1 <= t < k <= n, got (n,k,t) = ({n},{k},{t})"
            )));
        }
        Ok(ParamTriple { n, k, t })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn t(&self) -> u32 {
        self.t
    }
}

/// Which graph family an explicit graph was built as.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyTag {
    GeneralizedKneser { n: u32, k: u32, t: u32 },
    Johnson { n: u32, k: u32 },
    JohnsonComplement { n: u32, k: u32 },
    Generic,
}

/// Finite simple undirected graph. Vertex ids are `0..n_vertices`; when the
/// graph was built from a subset family, vertex `i` carries the k-subset of
/// colex rank `i + 1` as its label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BitSet>,
    n_edges: usize,
    labels: Option<Vec<KSubset>>,
    family: FamilyTag,
}

impl Graph {
    /// An edgeless generic graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BitSet::new(n); n],
            n_edges: 0,
            labels: None,
            family: FamilyTag::Generic,
        }
    }

    /// A generic graph from an explicit edge list (0-based endpoints).
    /// Self-loops and duplicate edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n_vertices();
        if u >= n || v >= n {
            return Err(Error::invalid(format!(
                "edge ({u},{v}) outside vertex range 0..{n}"
            )));
        }
        if u == v {
            return Err(Error::invalid(format!("self-loop at vertex {u}")));
        }
        if self.adj[u].contains(v) {
            return Err(Error::invalid(format!("duplicate edge ({u},{v})")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.n_edges += 1;
        Ok(())
    }

    pub fn n_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn n_edges(&self) -> usize {
        self.n_edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n_vertices())
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    /// All edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n_edges);
        for u in 0..self.n_vertices() {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn family(&self) -> FamilyTag {
        self.family
    }

    pub(crate) fn set_family(&mut self, family: FamilyTag, labels: Option<Vec<KSubset>>) {
        self.family = family;
        self.labels = labels;
    }

    pub fn labels(&self) -> Option<&[KSubset]> {
        self.labels.as_deref()
    }

    pub(crate) fn adj_row(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn is_independent_set(&self, vertices: &[usize]) -> bool {
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                if self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// The complement graph on the same labelled vertex set. Johnson tags
    /// flip to Johnson-complement tags and back; other tags drop to generic.
    pub fn complement(&self) -> Graph {
        let n = self.n_vertices();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).expect("fresh edge");
                }
            }
        }
        let family = match self.family {
            FamilyTag::Johnson { n, k } => FamilyTag::JohnsonComplement { n, k },
            FamilyTag::JohnsonComplement { n, k } => FamilyTag::Johnson { n, k },
            _ => FamilyTag::Generic,
        };
        g.set_family(family, self.labels.clone());
        g
    }
}

/// Default cap on explicit graph size. `C(24,3) = 2024`, the smallest
/// certificate instance for the `t >= 2` treewidth formula, fits under it.
pub const DEFAULT_VERTEX_CAP: u64 = 5000;

/// All k-subset masks of `[n]` in colex order, which on masks is plain
/// numeric order.
fn colex_masks(n: u32, k: u32) -> Vec<u64> {
    let count = binomial(n.into(), k.into());
    let count = u64::try_from(&count).expect("vertex count checked against cap");
    let mut out = Vec::with_capacity(count as usize);
    if k == 0 {
        out.push(0);
        return out;
    }
    let mut mask = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    for _ in 0..count {
        out.push(mask);
        // Gosper's hack: next mask with the same popcount.
        let c = mask & mask.wrapping_neg();
        let r = mask.wrapping_add(c);
        mask = ((r ^ mask) >> 2).wrapping_div(c) | r;
    }
    out
}

fn check_cap(n: u32, k: u32, cap: u64) -> Result<()> {
    let count = binomial(n.into(), k.into());
    if count > BigUint::from(cap) {
        return Err(Error::resource(format!(
            "C({n},{k}) = {count} vertices exceeds the explicit-graph cap of {cap}"
        )));
    }
    Ok(())
}

/// Builds a subset-labelled graph whose edges are decided by the pairwise
/// intersection size of the labels.
fn build_subset_graph(
    n: u32,
    k: u32,
    cap: u64,
    family: FamilyTag,
    adjacent: impl Fn(u32) -> bool,
) -> Result<Graph> {
    check_cap(n, k, cap)?;
    let masks = colex_masks(n, k);
    let nv = masks.len();
    let mut g = Graph::new(nv);
    for i in 0..nv {
        for j in i + 1..nv {
            if adjacent((masks[i] & masks[j]).count_ones()) {
                g.add_edge(i, j)?;
            }
        }
    }
    let labels: Result<Vec<KSubset>> = masks.iter().map(|&m| KSubset::from_mask(n, m)).collect();
    g.set_family(family, Some(labels?));
    Ok(g)
}

/// `K(n,k,t)`: vertices are the k-subsets of `[n]` in colex order, `A ~ B`
/// iff `|A ∩ B| < t`.
pub fn build_generalized_kneser(p: ParamTriple) -> Result<Graph> {
    build_generalized_kneser_with_cap(p, DEFAULT_VERTEX_CAP)
}

pub fn build_generalized_kneser_with_cap(p: ParamTriple, cap: u64) -> Result<Graph> {
    build_subset_graph(
        p.n,
        p.k,
        cap,
        FamilyTag::GeneralizedKneser {
            n: p.n,
            k: p.k,
            t: p.t,
        },
        |meet| meet < p.t,
    )
}

/// `J(n,k)`: `A ~ B` iff `|A ∩ B| = k - 1`.
pub fn build_johnson(n: u32, k: u32) -> Result<Graph> {
    build_johnson_with_cap(n, k, DEFAULT_VERTEX_CAP)
}

pub fn build_johnson_with_cap(n: u32, k: u32, cap: u64) -> Result<Graph> {
    if !(1 <= k && k <= n) {
        return Err(Error::invalid(format!(
            "Johnson graph needs 1 <= k <= n, got (n,k) = ({n},{k})"
        )));
    }
    build_subset_graph(n, k, cap, FamilyTag::Johnson { n, k }, |meet| meet + 1 == k)
}

/// The complement of the Johnson graph: `A ~ B` iff `|A ∩ B| <= k - 2`.
/// Identical to `K(n,k,k-1)` as an edge set.
pub fn build_johnson_complement(n: u32, k: u32) -> Result<Graph> {
    build_johnson_complement_with_cap(n, k, DEFAULT_VERTEX_CAP)
}

pub fn build_johnson_complement_with_cap(n: u32, k: u32, cap: u64) -> Result<Graph> {
    if !(1 <= k && k <= n) {
        return Err(Error::invalid(format!(
            "Johnson complement needs 1 <= k <= n, got (n,k) = ({n},{k})"
        )));
    }
    build_subset_graph(n, k, cap, FamilyTag::JohnsonComplement { n, k }, |meet| {
        meet + 1 < k
    })
}

/// Closed-form maximum degree of `K(n,k,t)`, which is regular:
/// `sum_{i=0}^{t-1} C(k,i) C(n-k,k-i)`.
pub fn degree_formula(p: ParamTriple) -> BigUint {
    let mut acc = BigUint::zero();
    for i in 0..p.t {
        acc += binomial(p.k.into(), i.into())
            * binomial((p.n - p.k).into(), i64::from(p.k) - i64::from(i));
    }
    acc
}

/// The independence number `C(n-t, k-t)` predicted for `K(n,k,t)` by the
/// Erdős–Ko–Rado theorem, with the flag recording whether its hypothesis
/// `n >= (t+1)(k-t+1)` holds. Below the threshold the value is still
/// reported but is not guaranteed to be the independence number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EkrBound {
    pub value: BigUint,
    pub applicable: bool,
}

pub fn ekr_independence_number(p: ParamTriple) -> EkrBound {
    EkrBound {
        value: binomial((p.n - p.t).into(), i64::from(p.k) - i64::from(p.t)),
        applicable: u64::from(p.n) >= u64::from(p.t + 1) * u64::from(p.k - p.t + 1),
    }
}

/// For a subset-labelled Kneser-family graph, the vertices whose label
/// contains `{1,..,t}` — a t-intersecting star, hence an independent set.
/// When the EKR hypothesis holds this star is maximum. `None` for graphs
/// without a Kneser-family tag or labels.
pub fn ekr_star_independent_set(g: &Graph) -> Option<Vec<usize>> {
    let t = match g.family() {
        FamilyTag::GeneralizedKneser { t, .. } => t,
        FamilyTag::JohnsonComplement { k, .. } => k.checked_sub(1)?,
        _ => return None,
    };
    let labels = g.labels()?;
    Some(
        labels
            .iter()
            .enumerate()
            .filter(|(_, s)| (1..=t).all(|e| s.contains(e)))
            .map(|(i, _)| i)
            .collect(),
    )
}

/// Cap for the exact maximum-independent-set search.
pub const INDEPENDENCE_MAX_VERTICES: usize = 40;

/// Exact maximum independent set size by branch and bound over neighbor
/// bitsets, capped at [`INDEPENDENCE_MAX_VERTICES`] vertices.
pub fn brute_force_independence(g: &Graph) -> Result<usize> {
    let n = g.n_vertices();
    if n > INDEPENDENCE_MAX_VERTICES {
        return Err(Error::resource(format!(
            "independence search on {n} vertices exceeds the {INDEPENDENCE_MAX_VERTICES}-vertex cap"
        )));
    }
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u))
        .collect();
    let mut best = 0usize;
    mis_search(&adj, (1u64 << n) - 1, 0, &mut best);
    Ok(best)
}

fn mis_search(adj: &[u64], candidates: u64, size: usize, best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + candidates.count_ones() as usize <= *best {
        return;
    }
    // Pivot on the candidate of maximum degree within the candidate set;
    // a candidate with no remaining conflicts is taken unconditionally.
    let mut pivot = usize::MAX;
    let mut pivot_deg = 0;
    let mut m = candidates;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let d = (adj[v] & candidates).count_ones();
        if d == 0 {
            mis_search(adj, candidates & !(1 << v), size + 1, best);
            return;
        }
        if pivot == usize::MAX || d > pivot_deg {
            pivot = v;
            pivot_deg = d;
        }
    }
    mis_search(
        adj,
        candidates & !(1 << pivot) & !adj[pivot],
        size + 1,
        best,
    );
    mis_search(adj, candidates & !(1 << pivot), size, best);
}

/// Cap for the canonical-form isomorphism check.
pub const ISOMORPHISM_MAX_VERTICES: usize = 16;

/// Isomorphism test by canonical relabelling, capped at
/// [`ISOMORPHISM_MAX_VERTICES`] vertices. Only meant for fixtures.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    let n = a.n_vertices();
    if n != b.n_vertices() || a.n_edges() != b.n_edges() {
        return Ok(false);
    }
    if n > ISOMORPHISM_MAX_VERTICES {
        return Err(Error::resource(format!(
            "isomorphism check on {n} vertices exceeds the {ISOMORPHISM_MAX_VERTICES}-vertex cap"
        )));
    }
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a) == canonical_form(b))
}

/// Canonical form: the lexicographically minimal column encoding of the
/// adjacency matrix over all vertex orderings. Column `l` holds the bits
/// between the vertex placed at position `l` and positions `0..l`, so the
/// encoding grows one column per placement and prefix comparison against the
/// incumbent is sound.
fn canonical_form(g: &Graph) -> Vec<u32> {
    let n = g.n_vertices();
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |m, u| m | 1 << u))
        .collect();

    struct Search<'a> {
        adj: &'a [u32],
        n: usize,
        placement: Vec<usize>,
        cols: Vec<u32>,
        used: u32,
        best: Option<Vec<u32>>,
    }

    impl Search<'_> {
        fn run(&mut self) {
            if self.placement.len() == self.n {
                if self.best.as_ref().is_none_or(|b| self.cols < *b) {
                    self.best = Some(self.cols.clone());
                }
                return;
            }
            let l = self.placement.len();
            for v in 0..self.n {
                if self.used >> v & 1 == 1 {
                    continue;
                }
                let mut col = 0u32;
                for (i, &p) in self.placement.iter().enumerate() {
                    if self.adj[v] >> p & 1 == 1 {
                        col |= 1 << i;
                    }
                }
                // Prefix already beaten by the incumbent: prune.
                if let Some(b) = &self.best {
                    if (self.cols.as_slice(), col) > (&b[..l], b[l]) {
                        continue;
                    }
                }
                self.placement.push(v);
                self.cols.push(col);
                self.used |= 1 << v;
                self.run();
                self.placement.pop();
                self.cols.pop();
                self.used &= !(1 << v);
            }
        }
    }

    let mut s = Search {
        adj: &adj,
        n,
        placement: Vec::with_capacity(n),
        cols: Vec::with_capacity(n),
        used: 0,
        best: None,
    };
    s.run();
    s.best.unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subsets::colex_rank;

    fn petersen() -> Graph {
        build_generalized_kneser(ParamTriple::new(5, 2, 1).unwrap()).unwrap()
    }

    /// Brute-force edge oracle: rebuild the edge set straight from subset
    /// intersections, independent of the construction path.
    fn count_edges_by_intersection(n: u32, k: u32, pred: impl Fn(u32) -> bool) -> usize {
        let mut subsets = Vec::new();
        for mask in 0u64..(1 << n) {
            if mask.count_ones() == k {
                subsets.push(mask);
            }
        }
        let mut edges = 0;
        for i in 0..subsets.len() {
            for j in i + 1..subsets.len() {
                if pred((subsets[i] & subsets[j]).count_ones()) {
                    edges += 1;
                }
            }
        }
        edges
    }

    #[test]
    fn petersen_shape() {
        let g = petersen();
        assert_eq!(g.n_vertices(), 10);
        assert_eq!(g.n_edges(), 15);
        assert_eq!(g.n_edges(), count_edges_by_intersection(5, 2, |m| m < 1));
        for v in 0..10 {
            assert_eq!(g.degree(v), 3);
        }
        assert_eq!(
            g.family(),
            FamilyTag::GeneralizedKneser { n: 5, k: 2, t: 1 }
        );
    }

    #[test]
    fn kneser_6_3_2_shape() {
        let g = build_generalized_kneser(ParamTriple::new(6, 3, 2).unwrap()).unwrap();
        assert_eq!(g.n_vertices(), 20);
        assert_eq!(g.n_edges(), 100);
        assert_eq!(g.n_edges(), count_edges_by_intersection(6, 3, |m| m < 2));
        for v in 0..20 {
            assert_eq!(g.degree(v), 10);
        }
        assert_eq!(
            BigUint::from(g.max_degree()),
            degree_formula(ParamTriple::new(6, 3, 2).unwrap())
        );
    }

    #[test]
    fn k_subsets_of_k_plus_one_are_edgeless() {
        // Any two distinct k-subsets of [k+1] meet in k-1 >= t elements.
        for k in 2u32..=5 {
            for t in 1..k {
                let g = build_generalized_kneser(ParamTriple::new(k + 1, k, t).unwrap()).unwrap();
                assert_eq!(g.n_vertices() as u32, k + 1);
                assert_eq!(g.n_edges(), 0);
            }
        }
    }

    #[test]
    fn vertex_labels_follow_colex_rank() {
        let g = build_johnson_complement(6, 3).unwrap();
        let labels = g.labels().unwrap();
        assert_eq!(labels.len(), 20);
        for (i, s) in labels.iter().enumerate() {
            assert_eq!(colex_rank(s), i as u64 + 1);
        }
    }

    #[test]
    fn johnson_complement_examples() {
        let g = build_johnson_complement(4, 2).unwrap();
        assert_eq!(g.n_vertices(), 6);
        assert_eq!(g.n_edges(), 3);
        for v in 0..6 {
            assert_eq!(g.degree(v), 1);
        }
        let single = build_johnson_complement(4, 4).unwrap();
        assert_eq!(single.n_vertices(), 1);
        assert_eq!(single.n_edges(), 0);
    }

    #[test]
    fn johnson_complement_matches_gkneser_with_t_k_minus_1() {
        for (n, k) in [(5u32, 3u32), (6, 3), (6, 2), (7, 2)] {
            let jc = build_johnson_complement(n, k).unwrap();
            let gk = build_generalized_kneser(ParamTriple::new(n, k, k - 1).unwrap()).unwrap();
            assert_eq!(jc.edges(), gk.edges());
        }
    }

    #[test]
    fn johnson_complement_is_complement_of_johnson() {
        let j = build_johnson(6, 3).unwrap();
        assert_eq!(j.n_edges(), 90);
        let jc = build_johnson_complement(6, 3).unwrap();
        let compl = j.complement();
        assert_eq!(compl.edges(), jc.edges());
        assert_eq!(compl.family(), jc.family());
    }

    #[test]
    fn complement_is_an_involution() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (0, 5)]).unwrap();
        assert_eq!(g.complement().complement(), g);
        let k4 = Graph::new(4).complement();
        assert_eq!(k4.n_edges(), 6);
    }

    #[test]
    fn cap_is_enforced_and_named() {
        let p = ParamTriple::new(24, 4, 2).unwrap();
        let err = build_generalized_kneser(p).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("5000"), "cap missing from: {msg}");
        assert!(
            build_generalized_kneser_with_cap(ParamTriple::new(24, 3, 2).unwrap(), 5000).is_ok()
        );
    }

    #[test]
    fn degree_formula_examples() {
        assert_eq!(
            degree_formula(ParamTriple::new(5, 2, 1).unwrap()),
            BigUint::from(3u32)
        );
        assert_eq!(
            degree_formula(ParamTriple::new(6, 3, 2).unwrap()),
            BigUint::from(10u32)
        );
        assert_eq!(
            degree_formula(ParamTriple::new(24, 3, 2).unwrap()),
            BigUint::from(1960u32)
        );
    }

    #[test]
    fn degree_formula_matches_every_explicit_degree() {
        for (n, k, t) in [
            (5u32, 2u32, 1u32),
            (6, 3, 2),
            (6, 3, 1),
            (7, 3, 2),
            (6, 4, 3),
        ] {
            let p = ParamTriple::new(n, k, t).unwrap();
            let g = build_generalized_kneser(p).unwrap();
            let expect = degree_formula(p);
            for v in 0..g.n_vertices() {
                assert_eq!(
                    BigUint::from(g.degree(v)),
                    expect,
                    "K({n},{k},{t}) vertex {v}"
                );
            }
            // Edge count = |V| * degree / 2.
            assert_eq!(
                BigUint::from(2 * g.n_edges()),
                BigUint::from(g.n_vertices()) * expect
            );
        }
    }

    #[test]
    fn ekr_examples() {
        let b = ekr_independence_number(ParamTriple::new(5, 2, 1).unwrap());
        assert_eq!(b.value, BigUint::from(4u32));
        assert!(b.applicable);
        let b = ekr_independence_number(ParamTriple::new(6, 3, 2).unwrap());
        assert_eq!(b.value, BigUint::from(4u32));
        assert!(b.applicable);
        let b = ekr_independence_number(ParamTriple::new(4, 3, 2).unwrap());
        assert_eq!(b.value, BigUint::from(2u32));
        assert!(!b.applicable);
    }

    #[test]
    fn ekr_star_is_independent_and_maximum_on_petersen() {
        let g = petersen();
        let star = ekr_star_independent_set(&g).unwrap();
        assert_eq!(star.len(), 4);
        assert!(g.is_independent_set(&star));
        assert_eq!(brute_force_independence(&g).unwrap(), 4);
    }

    #[test]
    fn brute_force_independence_examples() {
        let k5 = Graph::new(5).complement();
        assert_eq!(brute_force_independence(&k5).unwrap(), 1);
        let edgeless = Graph::new(6);
        assert_eq!(brute_force_independence(&edgeless).unwrap(), 6);
        let over = Graph::new(41);
        assert!(brute_force_independence(&over).is_err());
    }

    #[test]
    fn johnson_complement_5_3_is_petersen() {
        let jc = build_johnson_complement(5, 3).unwrap();
        assert!(are_isomorphic(&jc, &petersen()).unwrap());
        // Degree+girth sanity on the same fixture: 3-regular.
        for v in 0..10 {
            assert_eq!(jc.degree(v), 3);
        }
    }

    #[test]
    fn non_isomorphic_pairs_are_rejected() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!are_isomorphic(&path, &star).unwrap());
        let relabelled = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert!(are_isomorphic(&path, &relabelled).unwrap());
    }

    #[test]
    fn param_triple_validation() {
        assert!(ParamTriple::new(5, 2, 1).is_ok());
        assert!(ParamTriple::new(5, 2, 2).is_err());
        assert!(ParamTriple::new(5, 6, 1).is_err());
        assert!(ParamTriple::new(5, 2, 0).is_err());
    }
}
