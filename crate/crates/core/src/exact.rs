//! Exact treewidth for desk-scale graphs, with elimination-order
//! certificates, plus cheap lower and upper bounds for sandwiching anything
//! larger.
//!
//! The exact core is dynamic programming over vertex subsets: with `f(S)`
//! the best width achievable when the vertices of `S` are eliminated first,
//! `f(S) = min_{v in S} max(f(S \ v), q(S \ v, v))` where `q(S, v)` counts
//! the vertices outside `S ∪ {v}` reachable from `v` through `S`. The table
//! fits in memory up to 26 vertices; a branch-and-bound search over
//! elimination prefixes covers 27..=35, and beyond that only bounds are
//! offered.

use crate::graphs::Graph;
use crate::{Error, Result};
use std::collections::HashSet;
use std::time::{Duration, Instant};

/// Time/memory limits for one exact solve.
#[derive(Clone, Debug)]
pub struct Budget {
    pub time_limit: Duration,
    pub memory_limit_bytes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            time_limit: Duration::from_secs(60),
            memory_limit_bytes: 2 << 30,
        }
    }
}

impl Budget {
    pub fn with_time(seconds: u64) -> Self {
        Budget {
            time_limit: Duration::from_secs(seconds),
            ..Budget::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwStatus {
    /// `lower == upper`, certificate reproduces the value.
    Exact,
    /// The budget ran out; the interval is still valid.
    Bounds,
}

/// Outcome of a treewidth computation.
#[derive(Clone, Debug)]
pub struct TwResult {
    pub lower: i64,
    pub upper: i64,
    /// Elimination order achieving `upper` via the fill-in construction.
    pub certificate: Option<Vec<usize>>,
    pub status: TwStatus,
}

impl TwResult {
    pub fn exact_value(&self) -> Option<i64> {
        (self.status == TwStatus::Exact).then_some(self.upper)
    }

    fn exact(value: i64, order: Vec<usize>) -> Self {
        TwResult {
            lower: value,
            upper: value,
            certificate: Some(order),
            status: TwStatus::Exact,
        }
    }
}

/// Largest graph the subset table is attempted on.
pub const SUBSET_DP_MAX_VERTICES: usize = 26;
/// Largest graph the exact solver accepts at all.
pub const EXACT_MAX_VERTICES: usize = 35;

/// A treewidth lower bound: the max of the degeneracy and a
/// minor-min-degree bound obtained by contracting a minimum-degree vertex
/// into its least-degree neighbor.
pub fn lower_bound(g: &Graph) -> i64 {
    let n = g.n_vertices();
    if n == 0 {
        return -1;
    }
    let rows: Vec<Vec<u64>> = (0..n)
        .map(|v| {
            let mut row = vec![0u64; n.div_ceil(64)];
            for u in g.neighbors(v) {
                row[u / 64] |= 1 << (u % 64);
            }
            row
        })
        .collect();
    let degeneracy = {
        let mut rows = rows.clone();
        let mut alive: Vec<bool> = vec![true; n];
        let mut best = 0usize;
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| alive[v])
                .min_by_key(|&v| row_len(&rows[v]))
                .expect("alive vertex");
            best = best.max(row_len(&rows[v]));
            remove_vertex(&mut rows, &mut alive, v);
        }
        best
    };
    let contraction_bound = {
        let mut rows = rows;
        let mut alive: Vec<bool> = vec![true; n];
        let mut best = 0usize;
        while let Some(v) = (0..n)
            .filter(|&v| alive[v] && row_len(&rows[v]) > 0)
            .min_by_key(|&v| row_len(&rows[v]))
        {
            best = best.max(row_len(&rows[v]));
            let u = iter_row(&rows[v])
                .min_by_key(|&u| row_len(&rows[u]))
                .expect("v has a neighbor");
            // Contract v into u.
            let vrow = rows[v].clone();
            for (w, b) in rows[u].iter_mut().zip(vrow) {
                *w |= b;
            }
            rows[u][u / 64] &= !(1 << (u % 64));
            rows[u][v / 64] &= !(1 << (v % 64));
            for w in iter_row(&rows[u]).collect::<Vec<_>>() {
                rows[w][u / 64] |= 1 << (u % 64);
            }
            remove_vertex(&mut rows, &mut alive, v);
        }
        best
    };
    degeneracy.max(contraction_bound) as i64
}

fn row_len(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

fn iter_row(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(wi, &w)| {
        std::iter::successors(Some(w), |&m| Some(m & m.wrapping_sub(1)))
            .take_while(|&m| m != 0)
            .map(move |m| wi * 64 + m.trailing_zeros() as usize)
    })
}

fn remove_vertex(rows: &mut [Vec<u64>], alive: &mut [bool], v: usize) {
    alive[v] = false;
    let vrow = rows[v].clone();
    for u in iter_row(&vrow) {
        rows[u][v / 64] &= !(1 << (v % 64));
    }
    rows[v].fill(0);
}

/// Above this size, the greedy elimination switches from minimum fill-in to
/// minimum degree; recomputing fill counts each round is quadratic in the
/// neighborhood and useless at Kneser scale.
pub const MIN_FILL_MAX_VERTICES: usize = 128;

/// Greedy elimination upper bound with certificate: minimum fill-in on small
/// graphs, minimum degree beyond [`MIN_FILL_MAX_VERTICES`]. Ties break to
/// the smaller vertex id.
pub fn upper_bound_heuristic(g: &Graph) -> TwResult {
    let n = g.n_vertices();
    if n == 0 {
        return TwResult::exact(-1, vec![]);
    }
    let use_fill = n <= MIN_FILL_MAX_VERTICES;
    let mut rows: Vec<Vec<u64>> = (0..n)
        .map(|v| {
            let mut row = vec![0u64; n.div_ceil(64)];
            for u in g.neighbors(v) {
                row[u / 64] |= 1 << (u % 64);
            }
            row
        })
        .collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    let mut width = 0usize;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| {
                if use_fill {
                    (fill_count(&rows, v), row_len(&rows[v]), v)
                } else {
                    (row_len(&rows[v]), 0, v)
                }
            })
            .expect("alive vertex");
        width = width.max(row_len(&rows[v]));
        // Eliminate: remaining neighbors become a clique.
        let nbrs: Vec<usize> = iter_row(&rows[v]).collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                rows[a][b / 64] |= 1 << (b % 64);
                rows[b][a / 64] |= 1 << (a % 64);
            }
        }
        remove_vertex(&mut rows, &mut alive, v);
        order.push(v);
    }
    let lower = lower_bound(g);
    let upper = width as i64;
    TwResult {
        lower,
        upper,
        certificate: Some(order),
        status: if lower == upper {
            TwStatus::Exact
        } else {
            TwStatus::Bounds
        },
    }
}

/// Number of fill edges eliminating `v` would create.
fn fill_count(rows: &[Vec<u64>], v: usize) -> usize {
    let nbrs: Vec<usize> = iter_row(&rows[v]).collect();
    let mut missing = 0;
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if rows[a][b / 64] >> (b % 64) & 1 == 0 {
                missing += 1;
            }
        }
    }
    missing
}

/// Exact treewidth with an elimination-order certificate. Falls back to a
/// `Bounds` result when the budget runs out; errors above
/// [`EXACT_MAX_VERTICES`] vertices.
///
/// Deterministic for a fixed budget configuration the solve fits in: ties
/// always resolve to the smallest vertex id.
pub fn exact_tw(g: &Graph, budget: &Budget) -> Result<TwResult> {
    let n = g.n_vertices();
    if n > EXACT_MAX_VERTICES {
        return Err(Error::resource(format!(
            "exact treewidth on {n} vertices exceeds the {EXACT_MAX_VERTICES}-vertex cap"
        )));
    }
    if n == 0 {
        return Ok(TwResult::exact(-1, vec![]));
    }
    let heuristic = upper_bound_heuristic(g);
    if heuristic.status == TwStatus::Exact {
        return Ok(heuristic);
    }
    let deadline = Instant::now() + budget.time_limit;
    if n <= SUBSET_DP_MAX_VERTICES && (1u64 << n) + (64 << 10) <= budget.memory_limit_bytes {
        match subset_dp(g, deadline) {
            Some((value, order)) => {
                debug_assert!(value >= heuristic.lower && value <= heuristic.upper);
                return Ok(TwResult::exact(value, order));
            }
            None => return Ok(heuristic),
        }
    }
    Ok(branch_and_bound(g, heuristic, deadline, budget))
}

/// `q(S, v)` on one-word masks: vertices outside `S ∪ {v}` seen from the
/// component of `v` in `G[S ∪ {v}]`.
#[inline]
fn q_value(adj: &[u64], s: u64, v: usize) -> u32 {
    let mut comp = 1u64 << v;
    let mut nbrs = adj[v];
    loop {
        let grow = nbrs & s & !comp;
        if grow == 0 {
            break;
        }
        comp |= grow;
        let mut m = grow;
        while m != 0 {
            nbrs |= adj[m.trailing_zeros() as usize];
            m &= m - 1;
        }
    }
    (nbrs & !s & !(1u64 << v)).count_ones()
}

/// Full subset table. Returns the value and an optimal elimination order, or
/// `None` if the deadline passes first.
fn subset_dp(g: &Graph, deadline: Instant) -> Option<(i64, Vec<usize>)> {
    let n = g.n_vertices();
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u))
        .collect();
    let full: u64 = (1 << n) - 1;
    // f[s] holds value + 1 so that 0 encodes the -1 of the empty prefix.
    let mut f = vec![0u8; (full + 1) as usize];
    for s in 1..=full {
        if s & 0xffff == 0 && Instant::now() > deadline {
            return None;
        }
        let mut best = u8::MAX;
        let mut m = s;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let s2 = s & !(1u64 << v);
            let val = f[s2 as usize].max(q_value(&adj, s2, v) as u8 + 1);
            if val < best {
                best = val;
            }
        }
        f[s as usize] = best;
    }
    let value = i64::from(f[full as usize]) - 1;
    // Walk the table back from the full set; the v chosen at S is the last
    // eliminated vertex of the prefix S. Smallest id wins ties.
    let mut order = vec![0usize; n];
    let mut s = full;
    for slot in (0..n).rev() {
        let target = f[s as usize];
        let mut m = s;
        let mut chosen = None;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let s2 = s & !(1u64 << v);
            if f[s2 as usize].max(q_value(&adj, s2, v) as u8 + 1) == target {
                chosen = Some(v);
                break;
            }
        }
        let v = chosen.expect("table minimizer exists");
        order[slot] = v;
        s &= !(1u64 << v);
    }
    Some((value, order))
}

/// Iterative deepening over elimination prefixes for 27..=35 vertices: for
/// each candidate width `w`, search for an order whose `q` values all stay
/// at most `w`, memoizing refuted prefixes.
fn branch_and_bound(
    g: &Graph,
    heuristic: TwResult,
    deadline: Instant,
    budget: &Budget,
) -> TwResult {
    let n = g.n_vertices();
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u))
        .collect();
    let full: u64 = (1 << n) - 1;
    let memo_cap = (budget.memory_limit_bytes / 64) as usize;
    let mut proven_lower = heuristic.lower;
    let upper = heuristic.upper;

    for w in heuristic.lower..upper {
        let mut dead: HashSet<u64> = HashSet::new();
        let mut prefix = Vec::with_capacity(n);
        match search(
            &adj,
            full,
            0,
            w as u32,
            &mut dead,
            &mut prefix,
            deadline,
            memo_cap,
        ) {
            Outcome::Found => {
                return TwResult::exact(w, prefix);
            }
            Outcome::Refuted => {
                proven_lower = w + 1;
            }
            Outcome::BudgetExhausted => {
                return TwResult {
                    lower: proven_lower,
                    upper,
                    certificate: heuristic.certificate,
                    status: TwStatus::Bounds,
                };
            }
        }
    }
    // Every width below the heuristic refuted: the heuristic order is optimal.
    TwResult::exact(upper, heuristic.certificate.expect("heuristic certificate"))
}

enum Outcome {
    Found,
    Refuted,
    BudgetExhausted,
}

#[allow(clippy::too_many_arguments)]
fn search(
    adj: &[u64],
    full: u64,
    s: u64,
    w: u32,
    dead: &mut HashSet<u64>,
    prefix: &mut Vec<usize>,
    deadline: Instant,
    memo_cap: usize,
) -> Outcome {
    if s == full {
        return Outcome::Found;
    }
    if dead.contains(&s) {
        return Outcome::Refuted;
    }
    if dead.len() & 0x3ff == 0 && Instant::now() > deadline {
        return Outcome::BudgetExhausted;
    }
    if dead.len() >= memo_cap {
        return Outcome::BudgetExhausted;
    }
    let mut m = full & !s;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        if q_value(adj, s, v) <= w {
            prefix.push(v);
            match search(adj, full, s | 1 << v, w, dead, prefix, deadline, memo_cap) {
                Outcome::Found => return Outcome::Found,
                Outcome::BudgetExhausted => return Outcome::BudgetExhausted,
                Outcome::Refuted => {
                    prefix.pop();
                }
            }
        }
    }
    dead.insert(s);
    Outcome::Refuted
}
