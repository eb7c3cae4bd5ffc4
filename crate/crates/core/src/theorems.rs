//! Closed-form treewidth predictions for the Kneser families, their
//! applicability thresholds, and the supporting counting inequalities.
//! Everything here is exact integer or rational arithmetic; the inequalities
//! live near their thresholds, where rounding would lie.

use crate::graphs::ParamTriple;
use crate::separators::Frac;
use crate::subsets::binomial;
use crate::{Error, Result};
use num::bigint::{BigInt, BigUint};
use num::traits::Zero;
use std::fmt;

/// A closed-form treewidth prediction. When `applicable` is false the value
/// is still reported, but lies outside the hypothesis of the formula — the
/// Petersen graph is the canonical case where the prediction then misses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaVerdict {
    pub predicted_tw: BigInt,
    pub applicable: bool,
    /// Human-readable description of the hypothesis that was checked.
    pub threshold_used: String,
    /// Which piece of the piecewise Johnson-complement formula fired.
    pub regime: Option<JohnsonCase>,
}

/// The five pieces of the Johnson-complement treewidth formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JohnsonCase {
    /// k=2, n=4: three disjoint edges, treewidth 1.
    Matching42,
    /// k=3, n=6: treewidth 14.
    Sporadic63,
    /// k=3, n=5 or k=2, n=5: the Petersen graph, treewidth 4.
    Petersen5,
    /// k>=4 with n>=2k, or k in {2,3} with n>=k+4: C(n,k) - n + k - 2.
    LargeN,
    /// k>=4 with n<2k: C(n,k) - k - 2.
    SmallN,
}

impl fmt::Display for JohnsonCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            JohnsonCase::Matching42 => "k=2,n=4",
            JohnsonCase::Sporadic63 => "k=3,n=6",
            JohnsonCase::Petersen5 => "n=5",
            JohnsonCase::LargeN => "general large-n",
            JohnsonCase::SmallN => "k>=4,n<2k",
        };
        f.write_str(s)
    }
}

fn big(u: BigUint) -> BigInt {
    BigInt::from(u)
}

/// `C(n,k)` tolerating negative or oversized indices (result 0).
fn binom_signed(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    binomial(n as u64, k)
}

/// Applicability threshold of the generalized-Kneser treewidth formula:
/// `2(k-t)(t+1)C(k,t) + k + t + 1`. At `t = 1` this evaluates to
/// `4k^2 - 3k + 2`, the threshold of the plain-Kneser result. Saturates at
/// `u64::MAX` when the exact value does not fit.
pub fn threshold_n0(k: u32, t: u32) -> u64 {
    let exact = BigUint::from(2u32)
        * BigUint::from(k - t)
        * BigUint::from(t + 1)
        * binomial(k.into(), i64::from(t))
        + BigUint::from(k)
        + BigUint::from(t)
        + BigUint::from(1u32);
    u64::try_from(&exact).unwrap_or(u64::MAX)
}

/// Threshold `max(k+4, 2k)` above which the general-case Johnson-complement
/// formula is proved directly.
pub fn johnson_threshold(k: u32) -> u64 {
    u64::from(k + 4).max(2 * u64::from(k))
}

/// Threshold `ceil((k-t)(k+1)/(1-p)) + 2t` for the balance-mass inequality.
pub fn shadow_mass_threshold(k: u32, t: u32, p: Frac) -> Result<u64> {
    check_prob(p)?;
    let product = u64::from(k - t) * u64::from(k + 1);
    // 1/(1-p) = den/(den-num).
    let num = product * p.denom();
    let den = p.denom() - p.numer();
    Ok(num.div_ceil(den) + 2 * u64::from(t))
}

fn check_prob(p: Frac) -> Result<()> {
    if p < Frac::new(2, 3) || p >= Frac::new(1, 1) {
        return Err(Error::invalid(format!(
            "balance parameter p = {p} outside [2/3, 1)"
        )));
    }
    Ok(())
}

/// Treewidth prediction `C(n,k) - C(n-t,k-t) - 1` for `K(n,k,t)`.
/// Applicable for `t >= 2` once `n >= threshold_n0(k,t)`; for `t = 1` the
/// same bound reads `n >= 4k^2-3k+2`.
pub fn tw_formula_gkneser(p: ParamTriple) -> FormulaVerdict {
    let (n, k, t) = (p.n(), p.k(), p.t());
    let predicted = big(binomial(n.into(), k.into()))
        - big(binomial((n - t).into(), i64::from(k) - i64::from(t)))
        - 1;
    let n0 = threshold_n0(k, t);
    let threshold_used = if t == 1 {
        format!("n >= 4k^2-3k+2 = {n0}")
    } else {
        format!("n >= 2(k-t)(t+1)C(k,t)+k+t+1 = {n0}")
    };
    FormulaVerdict {
        predicted_tw: predicted,
        applicable: u64::from(n) >= n0,
        threshold_used,
        regime: None,
    }
}

/// The piecewise treewidth of the Johnson complement, for `k >= 2` and
/// `n >= k+2`. Earlier cases in the listing win; the returned regime says
/// which one fired.
pub fn tw_formula_johnson_complement(n: u32, k: u32) -> Result<FormulaVerdict> {
    if k < 2 {
        return Err(Error::invalid(format!(
            "Johnson-complement formula needs k >= 2, got k = {k}"
        )));
    }
    if n < k + 2 {
        return Err(Error::invalid(format!(
            "the Johnson complement is an empty graph for n < k+2, got (n,k) = ({n},{k})"
        )));
    }
    let c = |kk: u32| big(binomial(n.into(), i64::from(kk)));
    let (case, predicted) = if k == 2 && n == 4 {
        (JohnsonCase::Matching42, BigInt::from(1))
    } else if k == 3 && n == 6 {
        (JohnsonCase::Sporadic63, BigInt::from(14))
    } else if (k == 3 || k == 2) && n == 5 {
        (JohnsonCase::Petersen5, BigInt::from(4))
    } else if u64::from(n) >= johnson_threshold(k) {
        (
            JohnsonCase::LargeN,
            c(k) - BigInt::from(n) + BigInt::from(k) - 2,
        )
    } else {
        debug_assert!(k >= 4 && n < 2 * k);
        (JohnsonCase::SmallN, c(k) - BigInt::from(k) - 2)
    };
    Ok(FormulaVerdict {
        predicted_tw: predicted,
        applicable: true,
        threshold_used: "n >= k+2".to_string(),
        regime: Some(case),
    })
}

/// The gap inequality behind the separator counting argument, cleared of
/// fractions: `C(n-t,k-t) > 2 C(k,t) (C(n-t,k-t) - C(n-2t-1,k-t))`.
/// Guaranteed to hold for `n >= threshold_n0(k,t)`.
pub fn binomial_gap_inequality(n: u32, k: u32, t: u32) -> bool {
    let lhs = binom_signed(i64::from(n) - i64::from(t), i64::from(k) - i64::from(t));
    let whole = &lhs;
    let reduced = binom_signed(
        i64::from(n) - 2 * i64::from(t) - 1,
        i64::from(k) - i64::from(t),
    );
    let factor = BigUint::from(2u32) * binomial(k.into(), i64::from(t));
    // whole > factor * (whole - reduced), kept in unsigned arithmetic.
    if reduced >= *whole {
        return true;
    }
    *whole > factor * (whole - &reduced)
}

/// The balance-mass inequality: for `2/3 <= p < 1`,
/// `(1-p) C(n-t,k-t) >= (k+1) sum_{a=0}^{t-2} C(n-2t-1, n-k-t+a) + t(k+1)
/// C(n-2t-1, n-k-1)`.
/// Guaranteed for `n >= shadow_mass_threshold(k,t,p)`; `t = 1` makes the sum
/// empty. Exact rational comparison.
pub fn shadow_mass_inequality(n: u32, k: u32, t: u32, p: Frac) -> Result<bool> {
    check_prob(p)?;
    let (ni, ki, ti) = (i64::from(n), i64::from(k), i64::from(t));
    let level = binom_signed(ni - ti, ki - ti);
    // lhs = (1-p) * level, compared after clearing the denominator.
    let lhs = BigUint::from(p.denom() - p.numer()) * level;
    let mut rhs = BigUint::zero();
    for a in 0..=ti - 2 {
        rhs += binom_signed(ni - 2 * ti - 1, ni - ki - ti + a);
    }
    rhs *= BigUint::from(k + 1);
    rhs += BigUint::from(t) * BigUint::from(k + 1) * binom_signed(ni - 2 * ti - 1, ni - ki - 1);
    rhs *= BigUint::from(*p.denom());
    Ok(lhs >= rhs)
}

/// Dominance of the independence-number bound over the degree bound:
/// `|V| - Δ - α - 1 = sum_{i=t}^{k} C(k,i) C(n-k,k-i) - C(n-t,k-t) - 1 >= 0`.
pub fn upper_bound_dominance(n: u32, k: u32, t: u32) -> bool {
    let mut tail = BigUint::zero();
    for i in t..=k {
        tail += binomial(k.into(), i64::from(i))
            * binom_signed(i64::from(n) - i64::from(k), i64::from(k) - i64::from(i));
    }
    let alpha = binom_signed(i64::from(n) - i64::from(t), i64::from(k) - i64::from(t));
    tail >= alpha + BigUint::from(1u32)
}
