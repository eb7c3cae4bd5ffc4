//! Canonical k-subsets of `[n] = {1,..,n}` in colexicographic order, set
//! families with shadows, and the restriction/starring operators used when
//! reasoning about separators of Kneser graphs.
//!
//! A subset is stored as a bitmask (bit `i-1` set iff element `i` is in the
//! subset), which makes colex comparison of equal-cardinality subsets a plain
//! integer comparison. Ground sets are capped at 64 elements; everything that
//! needs larger `n` in this crate is formula-level arithmetic that never
//! materializes subsets.

use crate::{Error, Result};
use num::bigint::BigUint;
use num::traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

/// Largest supported ground set. One machine word per subset.
pub const MAX_GROUND_SET: u32 = 64;

/// A k-element subset of `[n]`, with `n` carried alongside.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct KSubset {
    n: u32,
    mask: u64,
}

impl KSubset {
    /// Builds a subset from 1-based elements. Duplicates and values outside
    /// `1..=n` are rejected.
    pub fn new(n: u32, elements: &[u32]) -> Result<Self> {
        if n > MAX_GROUND_SET {
            return Err(Error::invalid(format!(
                "ground set size {n} exceeds the {MAX_GROUND_SET}-element cap"
            )));
        }
        let mut mask = 0u64;
        for &e in elements {
            if e < 1 || e > n {
                return Err(Error::invalid(format!("element {e} outside 1..={n}")));
            }
            let bit = 1u64 << (e - 1);
            if mask & bit != 0 {
                return Err(Error::invalid(format!("duplicate element {e}")));
            }
            mask |= bit;
        }
        Ok(KSubset { n, mask })
    }

    /// Builds a subset directly from its bitmask.
    pub fn from_mask(n: u32, mask: u64) -> Result<Self> {
        if n > MAX_GROUND_SET {
            return Err(Error::invalid(format!(
                "ground set size {n} exceeds the {MAX_GROUND_SET}-element cap"
            )));
        }
        if n < 64 && mask >> n != 0 {
            return Err(Error::invalid(format!(
                "mask {mask:#x} has bits outside the {n}-element ground set"
            )));
        }
        Ok(KSubset { n, mask })
    }

    pub fn empty(n: u32) -> Result<Self> {
        Self::from_mask(n, 0)
    }

    pub fn ground_set(&self) -> u32 {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// Cardinality of the subset.
    pub fn len(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    /// 1-based elements in increasing order.
    pub fn elements(&self) -> Vec<u32> {
        (1..=self.n).filter(|&e| self.contains(e)).collect()
    }

    pub fn contains(&self, element: u32) -> bool {
        element >= 1 && element <= self.n && self.mask >> (element - 1) & 1 == 1
    }

    pub fn is_subset_of(&self, other: &KSubset) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn intersection_size(&self, other: &KSubset) -> u32 {
        (self.mask & other.mask).count_ones()
    }

    /// `[n] \ self`.
    pub fn complement(&self) -> KSubset {
        let full = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        KSubset {
            n: self.n,
            mask: full & !self.mask,
        }
    }

    /// `self \ other`.
    pub fn difference(&self, other: &KSubset) -> KSubset {
        KSubset {
            n: self.n,
            mask: self.mask & !other.mask,
        }
    }
}

impl fmt::Debug for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Colex order: `a < b` iff `max(a \ b) < max(b \ a)`. Only defined between
/// subsets of equal cardinality over the same ground set.
///
/// On bitmasks this is exactly numeric order, since the highest differing bit
/// belongs to the larger subset.
pub fn colex_compare(a: &KSubset, b: &KSubset) -> Result<Ordering> {
    if a.n != b.n {
        return Err(Error::invalid(format!(
            "colex comparison across ground sets [{}] and [{}]",
            a.n, b.n
        )));
    }
    if a.len() != b.len() {
        return Err(Error::invalid(format!(
            "colex comparison of a {}-subset with a {}-subset",
            a.len(),
            b.len()
        )));
    }
    Ok(a.mask.cmp(&b.mask))
}

/// 1-based position of `a` among the k-subsets of its ground set in colex
/// order: `1 + sum_i C(a_i - 1, i)` over the sorted elements `a_1 < .. < a_k`.
pub fn colex_rank(a: &KSubset) -> u64 {
    let mut rank = 1u64;
    for (i, e) in a.elements().iter().enumerate() {
        rank += binom_u64(u64::from(e - 1), i as u64 + 1);
    }
    rank
}

/// Inverse of [`colex_rank`]: the k-subset of `[n]` at 1-based colex position
/// `r`, for `1 <= r <= C(n,k)`.
pub fn colex_unrank(r: u64, n: u32, k: u32) -> Result<KSubset> {
    if n > MAX_GROUND_SET {
        return Err(Error::invalid(format!(
            "ground set size {n} exceeds the {MAX_GROUND_SET}-element cap"
        )));
    }
    let total = binom_u64(u64::from(n), u64::from(k));
    if r < 1 || r > total {
        return Err(Error::invalid(format!(
            "colex rank {r} outside 1..={total} for C({n},{k})"
        )));
    }
    let mut value = r - 1;
    let mut mask = 0u64;
    for i in (1..=u64::from(k)).rev() {
        // Largest c with C(c, i) <= value; element is c+1.
        let mut c = i - 1;
        while binom_u64(c + 1, i) <= value {
            c += 1;
        }
        value -= binom_u64(c, i);
        mask |= 1u64 << c;
    }
    KSubset::from_mask(n, mask)
}

/// A duplicate-free family of subsets over a common ground set, kept sorted
/// by cardinality and then colex position.
#[derive(Clone, PartialEq, Eq)]
pub struct SetFamily {
    n: u32,
    members: Vec<KSubset>,
}

impl SetFamily {
    pub fn empty(n: u32) -> Self {
        SetFamily {
            n,
            members: Vec::new(),
        }
    }

    /// Builds a family, deduplicating members. All members must share the
    /// ground set `n`.
    pub fn new(n: u32, members: impl IntoIterator<Item = KSubset>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for m in members {
            if m.ground_set() != n {
                return Err(Error::invalid(format!(
                    "family over [{n}] cannot hold a subset of [{}]",
                    m.ground_set()
                )));
            }
            if seen.insert(m.mask()) {
                out.push(m);
            }
        }
        out.sort_by_key(|s| (s.len(), s.mask()));
        Ok(SetFamily { n, members: out })
    }

    pub fn ground_set(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[KSubset] {
        &self.members
    }

    pub fn contains(&self, s: &KSubset) -> bool {
        s.ground_set() == self.n && self.members.iter().any(|m| m.mask() == s.mask())
    }

    /// The common cardinality of all members, when there is one. Empty
    /// families report `None`.
    pub fn uniformity(&self) -> Option<u32> {
        let first = self.members.first()?.len();
        self.members
            .iter()
            .all(|m| m.len() == first)
            .then_some(first)
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.members.iter()).finish()
    }
}

/// The first `m` k-subsets of `[n]` in colex order.
pub fn first_family(m: u64, n: u32, k: u32) -> Result<SetFamily> {
    let total = binom_u64(u64::from(n), u64::from(k));
    if m > total {
        return Err(Error::invalid(format!(
            "first family size {m} exceeds C({n},{k}) = {total}"
        )));
    }
    let members: Result<Vec<KSubset>> = (1..=m).map(|r| colex_unrank(r, n, k)).collect();
    SetFamily::new(n, members?)
}

/// The g-shadow: all g-subsets contained in some member of `f`, in colex
/// order. Every member must have cardinality at least `g`.
pub fn shadow(f: &SetFamily, g: u32) -> Result<SetFamily> {
    let mut out = HashSet::new();
    for m in f.members() {
        if m.len() < g {
            return Err(Error::invalid(format!(
                "{g}-shadow of a family containing the smaller set {m}"
            )));
        }
        collect_subsets(m.mask(), g, &mut out);
    }
    SetFamily::new(
        f.ground_set(),
        out.into_iter()
            .map(|mask| KSubset::from_mask(f.ground_set(), mask).expect("mask from member")),
    )
}

/// Pushes all g-element submasks of `mask` into `out`.
fn collect_subsets(mask: u64, g: u32, out: &mut HashSet<u64>) {
    fn rec(rest: u64, chosen: u64, g: u32, out: &mut HashSet<u64>) {
        if g == 0 {
            out.insert(chosen);
            return;
        }
        if (rest.count_ones()) < g {
            return;
        }
        let low = rest & rest.wrapping_neg();
        rec(rest & !low, chosen | low, g - 1, out);
        rec(rest & !low, chosen, g, out);
    }
    rec(mask, 0, g, out);
}

/// `|shadow(first_family(m,n,k), g)|`. By the Kruskal–Katona theorem this is
/// the minimum g-shadow size over all m-element families of k-subsets.
///
/// Computed by materializing the first family rather than via the cascade
/// formula; exact at every desk-scale size this crate builds.
pub fn min_shadow_size(m: u64, n: u32, k: u32, g: u32) -> Result<u64> {
    if g >= k {
        return Err(Error::invalid(format!(
            "shadow cardinality g = {g} must be below k = {k}"
        )));
    }
    Ok(shadow(&first_family(m, n, k)?, g)?.len() as u64)
}

/// Union of the g-shadows of several uniform layers of distinct
/// cardinalities, each of which must exceed `g`.
pub fn layered_shadow(layers: &[SetFamily], g: u32) -> Result<SetFamily> {
    let mut n = None;
    let mut seen_sizes = HashSet::new();
    for layer in layers {
        match n {
            None => n = Some(layer.ground_set()),
            Some(n0) if n0 != layer.ground_set() => {
                return Err(Error::invalid("layers over different ground sets"))
            }
            _ => {}
        }
        if layer.is_empty() {
            continue;
        }
        let Some(card) = layer.uniformity() else {
            return Err(Error::invalid("layered shadow of a non-uniform layer"));
        };
        if card <= g {
            return Err(Error::invalid(format!(
                "layer cardinality {card} not above shadow cardinality {g}"
            )));
        }
        if !seen_sizes.insert(card) {
            return Err(Error::invalid(format!(
                "two layers share cardinality {card}"
            )));
        }
    }
    let n = n.unwrap_or(0);
    let mut members = Vec::new();
    for layer in layers {
        members.extend_from_slice(shadow(layer, g)?.members());
    }
    SetFamily::new(n, members)
}

/// Splits `f` into the members containing `x` and the rest. The two parts
/// are disjoint and their union is `f`.
pub fn restrict(f: &SetFamily, x: &KSubset) -> (SetFamily, SetFamily) {
    let (with, without): (Vec<KSubset>, Vec<KSubset>) =
        f.members().iter().partition(|m| x.is_subset_of(m));
    let f_x = SetFamily::new(f.ground_set(), with).expect("members of f");
    let f_minus_x = SetFamily::new(f.ground_set(), without).expect("members of f");
    (f_x, f_minus_x)
}

/// One cardinality class of a starred complement: the members `F* = (comp F) \ x`
/// with `|x ∩ comp F| = |x| - class`, which all have size `n - k - |x| + class`.
#[derive(Clone, Debug)]
pub struct StarClass {
    pub class: u32,
    pub family: SetFamily,
}

/// Strips `x` from every member of a family that contains it: `F -> F \ x`.
/// Output size equals input size. Errors if a member does not contain `x`.
pub fn star_reduce_containing(f: &SetFamily, x: &KSubset) -> Result<SetFamily> {
    let mut members = Vec::with_capacity(f.len());
    for m in f.members() {
        if !x.is_subset_of(m) {
            return Err(Error::invalid(format!(
                "star reduction of {m}, which does not contain {x}"
            )));
        }
        members.push(m.difference(x));
    }
    let out = SetFamily::new(f.ground_set(), members)?;
    debug_assert_eq!(out.len(), f.len());
    Ok(out)
}

/// The starred complement: each member `F` maps to `(comp F) \ x`, landing in
/// the cardinality class `a = |x| - |x ∩ comp F|`. Classes are reported
/// separately (ascending, empty classes omitted) so per-class counts stay
/// visible; an empty family yields no classes.
pub fn star_reduce_complement(f: &SetFamily, x: &KSubset) -> Result<Vec<StarClass>> {
    let t = x.len();
    let mut by_class: Vec<Vec<KSubset>> = vec![Vec::new(); t as usize + 1];
    for m in f.members() {
        let cbar = m.complement();
        let a = t - x.intersection_size(&cbar);
        by_class[a as usize].push(cbar.difference(x));
    }
    let mut out = Vec::new();
    for (a, members) in by_class.into_iter().enumerate() {
        if !members.is_empty() {
            out.push(StarClass {
                class: a as u32,
                family: SetFamily::new(f.ground_set(), members)?,
            });
        }
    }
    Ok(out)
}

/// Exact binomial coefficient `C(n,k)` as a big integer; `0` for `k < 0` or
/// `k > n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `C(n,k)` in a machine word. Callers stay within `n <= 64`, where every
/// value fits; intermediate products go through `u128`.
pub(crate) fn binom_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflow: ground set above 64")
}
