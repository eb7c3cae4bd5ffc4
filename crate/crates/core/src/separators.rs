//! Balanced separators: a set `X` is a p-separator when no component of
//! `G - X` has more than `p * |V(G - X)|` vertices. Note the normalization
//! by the vertex count of `G - X`, not of `G`. All balance comparisons are
//! exact rational arithmetic; no floating point.

use crate::graphs::Graph;
use crate::{Error, Result};
use num::rational::Ratio;

/// Exact rational, used for the balance parameter `p`.
pub type Frac = Ratio<u64>;

fn check_p_range(p: Frac) -> Result<()> {
    if p < Frac::new(2, 3) || p >= Frac::new(1, 1) {
        return Err(Error::invalid(format!(
            "balance parameter p = {p} outside [2/3, 1)"
        )));
    }
    Ok(())
}

/// Outcome of a p-separator check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorCheck {
    /// The candidate separator, sorted ascending.
    pub separator: Vec<usize>,
    pub p: Frac,
    /// Component sizes of `G - X`, descending.
    pub component_sizes: Vec<usize>,
    /// Every component size is at most `p * |V(G - X)|` (exact comparison).
    pub balanced: bool,
}

impl SeparatorCheck {
    /// Number of vertices left after removing the separator.
    pub fn remaining_vertices(&self) -> usize {
        self.component_sizes.iter().sum()
    }

    /// Greedy attempt to split the components into two parts, each of total
    /// size at most `p * |V(G - X)|`: components are placed largest-first
    /// onto the lighter side. Returns the part sizes when the greedy split
    /// succeeds. An empirical helper, not a certified bipartition.
    pub fn bipartition_sizes(&self) -> Option<(usize, usize)> {
        let total = self.remaining_vertices();
        let (mut a, mut b) = (0usize, 0usize);
        for &c in &self.component_sizes {
            if a <= b {
                a += c;
            } else {
                b += c;
            }
        }
        let fits = |part: usize| (part as u64) * self.p.denom() <= self.p.numer() * total as u64;
        (fits(a) && fits(b)).then_some((a, b))
    }
}

/// Components of `G - X` and the exact balance verdict for `2/3 <= p < 1`.
pub fn check_p_separator(g: &Graph, x: &[usize], p: Frac) -> Result<SeparatorCheck> {
    check_p_range(p)?;
    let n = g.n_vertices();
    let mut separator: Vec<usize> = x.to_vec();
    separator.sort_unstable();
    separator.dedup();
    if let Some(&v) = separator.last() {
        if v >= n {
            return Err(Error::invalid(format!(
                "separator vertex {v} outside 0..{n}"
            )));
        }
    }
    let mut component_sizes = component_sizes_without(g, &separator);
    component_sizes.sort_unstable_by(|a, b| b.cmp(a));
    let total: usize = component_sizes.iter().sum();
    let balanced = component_sizes
        .iter()
        .all(|&c| (c as u64) * p.denom() <= p.numer() * (total as u64));
    Ok(SeparatorCheck {
        separator,
        p,
        component_sizes,
        balanced,
    })
}

fn component_sizes_without(g: &Graph, removed: &[usize]) -> Vec<usize> {
    let n = g.n_vertices();
    let mut blocked = vec![false; n];
    for &v in removed {
        blocked[v] = true;
    }
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    let mut stack = Vec::new();
    for start in 0..n {
        if blocked[start] || seen[start] {
            continue;
        }
        seen[start] = true;
        stack.push(start);
        let mut size = 0;
        while let Some(v) = stack.pop() {
            size += 1;
            for u in g.neighbors(v) {
                if !blocked[u] && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        sizes.push(size);
    }
    sizes
}

/// Cap for the exhaustive minimum-separator search.
pub const SEPARATOR_SEARCH_MAX_VERTICES: usize = 16;

/// Smallest size of a p-separator, by exhaustive search over vertex subsets
/// in increasing size. Capped at [`SEPARATOR_SEARCH_MAX_VERTICES`] vertices.
///
/// Every graph has a p-separator of order `tw(G) + 1`, so the result never
/// exceeds that.
pub fn min_p_separator_order(g: &Graph, p: Frac) -> Result<usize> {
    check_p_range(p)?;
    let n = g.n_vertices();
    if n > SEPARATOR_SEARCH_MAX_VERTICES {
        return Err(Error::resource(format!(
            "separator search on {n} vertices exceeds the {SEPARATOR_SEARCH_MAX_VERTICES}-vertex cap"
        )));
    }
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |m, u| m | 1 << u))
        .collect();
    let full: u32 = ((1u64 << n) - 1) as u32;
    // Bucket subsets by size, then scan sizes ascending.
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for mask in 0..=full {
        by_size[mask.count_ones() as usize].push(mask);
    }
    for (size, masks) in by_size.iter().enumerate() {
        for &x in masks {
            if is_balanced_mask(&adj, full, x, p) {
                return Ok(size);
            }
        }
    }
    // X = V(G) always balances vacuously, so the loop returned by now.
    unreachable!("the full vertex set is always a p-separator");
}

fn is_balanced_mask(adj: &[u32], full: u32, x: u32, p: Frac) -> bool {
    let remaining = full & !x;
    let total = u64::from(remaining.count_ones());
    let mut unseen = remaining;
    while unseen != 0 {
        let start = unseen.trailing_zeros() as usize;
        let mut comp = 1u32 << start;
        loop {
            let mut grow = 0u32;
            let mut m = comp;
            while m != 0 {
                grow |= adj[m.trailing_zeros() as usize];
                m &= m - 1;
            }
            grow &= remaining & !comp;
            if grow == 0 {
                break;
            }
            comp |= grow;
        }
        if u64::from(comp.count_ones()) * p.denom() > p.numer() * total {
            return false;
        }
        unseen &= !comp;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{exact_tw, Budget};
    use crate::graphs::{build_generalized_kneser, Graph, ParamTriple};

    fn petersen() -> Graph {
        build_generalized_kneser(ParamTriple::new(5, 2, 1).unwrap()).unwrap()
    }

    fn p23() -> Frac {
        Frac::new(2, 3)
    }

    #[test]
    fn p_range_is_enforced() {
        let g = petersen();
        assert!(check_p_separator(&g, &[], Frac::new(1, 2)).is_err());
        assert!(check_p_separator(&g, &[], Frac::new(1, 1)).is_err());
        assert!(check_p_separator(&g, &[], Frac::new(3, 4)).is_ok());
        assert!(min_p_separator_order(&g, Frac::new(1, 2)).is_err());
    }

    #[test]
    fn empty_separator_of_a_connected_graph_is_never_balanced() {
        let g = petersen();
        let check = check_p_separator(&g, &[], p23()).unwrap();
        assert!(!check.balanced);
        assert_eq!(check.component_sizes, vec![10]);
    }

    #[test]
    fn full_separator_is_vacuously_balanced() {
        let g = petersen();
        let all: Vec<usize> = (0..10).collect();
        let check = check_p_separator(&g, &all, p23()).unwrap();
        assert!(check.balanced);
        assert!(check.component_sizes.is_empty());
        assert_eq!(check.remaining_vertices(), 0);
    }

    #[test]
    fn component_sizes_sum_to_remaining_vertices() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (3, 4), (5, 6)]).unwrap();
        let check = check_p_separator(&g, &[1], p23()).unwrap();
        assert_eq!(check.remaining_vertices(), 6);
        assert_eq!(check.component_sizes, vec![2, 2, 1, 1]);
        // 2 <= (2/3)*6 = 4: balanced.
        assert!(check.balanced);
    }

    #[test]
    fn singleton_component_is_not_balanced_under_exact_rationals() {
        // One leftover vertex: 1 > (2/3)*1, so even this is unbalanced.
        let k5 = Graph::new(5).complement();
        let check = check_p_separator(&k5, &[0, 1, 2, 3], p23()).unwrap();
        assert_eq!(check.component_sizes, vec![1]);
        assert!(!check.balanced);
        // Exhaustively, only X = V(K_5) balances: order 5 = tw + 1.
        assert_eq!(min_p_separator_order(&k5, p23()).unwrap(), 5);
    }

    #[test]
    fn edgeless_graphs_need_no_separator() {
        let g = Graph::new(6);
        assert_eq!(min_p_separator_order(&g, p23()).unwrap(), 0);
        let single = Graph::new(1);
        // 1 > (2/3)*1: the lone vertex must be removed.
        assert_eq!(min_p_separator_order(&single, p23()).unwrap(), 1);
    }

    #[test]
    fn min_order_respects_treewidth_plus_one_on_fixtures() {
        let budget = Budget::default();
        for g in [
            petersen(),
            Graph::new(5).complement(),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap(),
        ] {
            let tw = exact_tw(&g, &budget).unwrap().exact_value().unwrap();
            let min_order = min_p_separator_order(&g, p23()).unwrap();
            assert!(
                min_order as i64 <= tw + 1,
                "order {min_order} vs tw {tw} on {} vertices",
                g.n_vertices()
            );
        }
    }

    #[test]
    fn balance_is_not_monotone_under_supersets() {
        // Balance does not survive growing the separator: the threshold is
        // normalized by |V(G - X)|, which shrinks with X. Witness: an edge
        // plus an isolated vertex. X = {} leaves components {2,1} against
        // threshold (2/3)*3 = 2, balanced; absorbing the singleton into X
        // leaves {2} against (2/3)*2, unbalanced.
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(check_p_separator(&g, &[], p23()).unwrap().balanced);
        assert!(!check_p_separator(&g, &[2], p23()).unwrap().balanced);
    }

    #[test]
    fn search_cap_is_a_resource_error() {
        let g = Graph::new(17);
        assert!(min_p_separator_order(&g, p23()).is_err());
    }

    #[test]
    fn bipartition_helper_reports_two_small_sides() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (3, 4), (5, 6)]).unwrap();
        let check = check_p_separator(&g, &[1], p23()).unwrap();
        let (a, b) = check.bipartition_sizes().unwrap();
        assert_eq!(a + b, 6);
        assert!(a * 3 <= 12 && b * 3 <= 12);
    }
}
