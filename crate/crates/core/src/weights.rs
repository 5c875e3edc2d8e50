//! Weight of a semigroup and the bounds that tie it to the even-gap count.
//!
//! The weight `w(H) = Σ (ℓ_i − i)` is computed from the gaps and,
//! independently, as `(3g² + g)/2 − S(H)` where `S(H)` is the sum of the
//! first g non-gaps. The two must agree for every semigroup.

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{arg, Error, Result};
use crate::hyperelliptic::{is_gamma_hyperelliptic, is_hyperelliptic_up_to};
use crate::profile::StructureProfile;

/// `n(n−1)/2` for every integer n, so `C(−1, 2) = 1` and `C(−2, 2) = 3`.
///
/// The lower weight bound `C(g − 2ρ, 2)` is the polynomial
/// `(g² + g)·3/2 − (g² + (2ρ+1)g − 2ρ² − ρ)` in disguise, and only the
/// polynomial reading keeps its equality case exact when `g < 2ρ`.
pub fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightReport {
    pub genus: u64,
    pub rho: u64,
    pub w: i64,
    /// `S(H) = m_1 + … + m_g`.
    pub s_sum: i64,
    pub lower: i64,
    pub upper: i64,
    pub hits_lower: bool,
    pub hits_upper: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub char_weight_flags: Option<CharWeightFlags>,
}

/// Evaluation of the weight characterizations for one γ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharWeightFlags {
    pub gamma: u64,
    /// `w ≥ C(g − 2γ, 2)`.
    pub cw_ii: bool,
    /// `C(g − 2γ, 2) ≤ w ≤ C(g − 2γ, 2) + 2γ²`.
    pub cw1_ii: bool,
    /// `C(g − 2γ, 2) ≤ w < C(g − 2γ + 2, 2)`.
    pub cw1_iii: bool,
    pub gamma_hyperelliptic: bool,
    /// t-hyperelliptic for some `t ≤ γ`.
    pub hyperelliptic_up_to: bool,
}

/// Weight from the gap list.
pub fn weight_from_gaps(gaps: &[u64]) -> i64 {
    gaps.iter()
        .zip(1u64..)
        .map(|(&l, i)| l as i64 - i as i64)
        .sum()
}

/// Weight from the non-gap sum: `(3g² + g)/2 − S(H)`.
pub fn weight_from_nongap_sum(genus: u64, s_sum: u64) -> i64 {
    let g = genus as i64;
    (3 * g * g + g) / 2 - s_sum as i64
}

/// Both weight formulas must give the same value.
pub fn reconcile(from_gaps: i64, from_nongaps: i64) -> Result<i64> {
    if from_gaps == from_nongaps {
        Ok(from_gaps)
    } else {
        Err(Error::InvariantViolation(format!(
            "gap-sum weight {from_gaps} differs from non-gap weight {from_nongaps}"
        )))
    }
}

pub fn weight(p: &StructureProfile) -> Result<WeightReport> {
    let g = p.genus();
    let s_sum = p.nongap_sum();
    let w = reconcile(weight_from_gaps(p.gaps()), weight_from_nongap_sum(g, s_sum))?;
    let (lower, upper) = if g == 0 {
        (0, 0)
    } else {
        weight_bounds(g, p.rho())?
    };
    Ok(WeightReport {
        genus: g,
        rho: p.rho(),
        w,
        s_sum: s_sum as i64,
        lower,
        upper,
        hits_lower: w == lower,
        hits_upper: w == upper,
        char_weight_flags: None,
    })
}

/// Lower and upper weight bounds for genus g with ρ even gaps.
///
/// Lower: `C(g − 2ρ, 2)`. Upper: `C(g − 2ρ, 2) + 2ρ²` when `g ≥ 2ρ`,
/// otherwise `C(g + 2ρ, 2) − 4g − 6ρ² + 8ρ`.
pub fn weight_bounds(genus: u64, rho: u64) -> Result<(i64, i64)> {
    if genus == 0 {
        return arg("weight bounds need genus at least 1");
    }
    if 2 * genus < 3 * rho {
        return Err(Error::Infeasible { genus, rho });
    }
    let (g, r) = (genus as i64, rho as i64);
    let lower = binom2(g - 2 * r);
    let upper = if g >= 2 * r {
        lower + 2 * r * r
    } else {
        binom2(g + 2 * r) - 4 * g - 6 * r * r + 8 * r
    };
    Ok((lower, upper))
}

/// Admissible `J` for the closed-form weight of semigroups with `f_1 = 4`:
/// `max{1, ⌈(3ρ+2−g)/2⌉} ≤ J ≤ min{ρ+1, ⌊(g−ρ+3)/2⌋}`.
///
/// The same range serves both parities of g; it reproduces the exact set of
/// odd-non-gap layouts for every genus checked.
pub fn quartic_j_range(genus: u64, rho: u64) -> RangeInclusive<i64> {
    let (g, r) = (genus as i64, rho as i64);
    let lo = 1.max((3 * r + 2 - g + 1).div_euclid(2));
    let hi = (r + 1).min((g - r + 3).div_euclid(2));
    lo..=hi
}

fn check_quartic(genus: u64, rho: u64, j: i64) -> Result<()> {
    if rho == 0 || genus < 2 * rho {
        return arg(format!(
            "f_1 = 4 family needs rho >= 1 and g >= 2 rho (g = {genus}, rho = {rho})"
        ));
    }
    let range = quartic_j_range(genus, rho);
    if !range.contains(&j) {
        return arg(format!("J = {j} outside {range:?}"));
    }
    Ok(())
}

/// `C(g−2ρ, 2) + 2ρ² + 4ρ + 6 + 4J² − (4ρ+10)J`.
pub fn weight_formula_quartic(genus: u64, rho: u64, j: i64) -> Result<i64> {
    check_quartic(genus, rho, j)?;
    let (g, r) = (genus as i64, rho as i64);
    Ok(binom2(g - 2 * r) + 2 * r * r + 4 * r + 6 + 4 * j * j - (4 * r + 10) * j)
}

/// The odd non-gaps `{u_ρ, …, u_1}` (ascending) of the `f_1 = 4` semigroup
/// labelled by `J`.
pub fn quartic_layout(genus: u64, rho: u64, j: i64) -> Result<Vec<u64>> {
    check_quartic(genus, rho, j)?;
    let (g, r) = (genus as i64, rho as i64);
    let mut u: Vec<u64> = (1..=r - j + 1)
        .map(|i| 2 * g - 4 * r + 4 * j - 7 + 4 * i)
        .chain((1..j).map(|i| 2 * g - 4 * j + 3 + 4 * i))
        .map(|x| x as u64)
        .collect();
    u.sort_unstable();
    Ok(u)
}

/// `4 + 32C` is a perfect square: the offsets `2C` above the minimum that
/// the `f_1 = 4` weights attain.
pub fn quartic_offset_attained(c: u64) -> bool {
    let n = 4 + 32 * c;
    let s = n.isqrt();
    s * s == n
}

/// Weight of the multiplicity-3 semigroup labelled by `s`:
/// `g(g−1)/3 + 3s² − gs − s` when `g ≡ 0, 1 (mod 3)`, and
/// `g(g−2)/3 + 3s² − gs + s` when `g ≡ 2 (mod 3)`; `0 ≤ s ≤ (g − g mod 3)/3`.
pub fn weight_formula_triadic(genus: u64, s: u64) -> Result<i64> {
    let r3 = genus % 3;
    if s > (genus - r3) / 3 {
        return arg(format!("s = {s} outside 0..={}", (genus - r3) / 3));
    }
    let (g, s) = (genus as i64, s as i64);
    Ok(if r3 == 2 {
        g * (g - 2) / 3 + 3 * s * s - g * s + s
    } else {
        g * (g - 1) / 3 + 3 * s * s - g * s - s
    })
}

/// Smallest genus from which the weight characterizations hold for γ.
pub fn bound_g_threshold(gamma: u64) -> u64 {
    match gamma {
        0..=2 => (12 * gamma).saturating_sub(1).max(1),
        3 | 5 => 11 * gamma + 1,
        4 | 6 => (21 * (gamma - 4) + 88) / 2,
        _ => gamma * gamma + 4 * gamma + 3,
    }
}

pub fn classify_weight(p: &StructureProfile, gamma: u64) -> Result<WeightReport> {
    let mut report = weight(p)?;
    report.char_weight_flags = Some(char_weight_flags(p, report.w, gamma));
    Ok(report)
}

pub fn char_weight_flags(p: &StructureProfile, w: i64, gamma: u64) -> CharWeightFlags {
    let (g, t) = (p.genus() as i64, gamma as i64);
    let lo = binom2(g - 2 * t);
    CharWeightFlags {
        gamma,
        cw_ii: w >= lo,
        cw1_ii: lo <= w && w <= lo + 2 * t * t,
        cw1_iii: lo <= w && w < binom2(g - 2 * t + 2),
        gamma_hyperelliptic: is_gamma_hyperelliptic(p, gamma),
        hyperelliptic_up_to: is_hyperelliptic_up_to(p, gamma),
    }
}

/// Residue class, ρ-threshold and cap of the optimal weight bound for large
/// even-gap counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptWeightCap {
    /// `r ∈ {1, …, 6}` with `g ≡ r (mod 6)`.
    pub residue: u64,
    /// `c = (g − 5)/6` if r = 5, else `(g − r)/6 − 1`.
    pub threshold: i64,
    /// `g(g−2)/3` for r ∈ {2, 5}, else `g(g−1)/3`.
    pub cap: i64,
}

pub fn opt_weight_cap(genus: u64) -> Result<OptWeightCap> {
    if genus < 11 {
        return Err(Error::OutOfHypothesis(format!(
            "optimal weight cap needs g >= 11, got {genus}"
        )));
    }
    let g = genus as i64;
    let residue = match genus % 6 {
        0 => 6,
        r => r,
    };
    let r = residue as i64;
    let threshold = if residue == 5 {
        (g - 5) / 6
    } else {
        (g - r) / 6 - 1
    };
    let cap = if matches!(residue, 2 | 5) {
        g * (g - 2) / 3
    } else {
        g * (g - 1) / 3
    };
    Ok(OptWeightCap {
        residue,
        threshold,
        cap,
    })
}

/// Generators of the unique semigroup attaining [`OptWeightCap::cap`]:
/// `⟨3, g+2, 2g+1⟩` for r ∈ {2, 5}, `⟨3, g+1⟩` otherwise.
pub fn opt_weight_extremal(genus: u64) -> Vec<u64> {
    if matches!(genus % 6, 2 | 5) {
        vec![3, genus + 2, 2 * genus + 1]
    } else {
        vec![3, genus + 1]
    }
}

/// Three-branch aggregate weight cap for `g ≥ 11` and `ρ ≥ 1`:
/// `(g² − 5g + 10)/2` when `ρ ≤ c`, the minimum of that and `g(g−1)/3` when
/// `c < ρ ≤ (g−3)/2`, and `g(g−1)/3` above. Since weights are integers the
/// fractional cap is floored.
pub fn oliv_cap(genus: u64, rho: u64) -> Result<i64> {
    let OptWeightCap { threshold, .. } = opt_weight_cap(genus)?;
    if rho == 0 {
        return Err(Error::OutOfHypothesis(
            "aggregate cap needs rho >= 1".into(),
        ));
    }
    let (g, r) = (genus as i64, rho as i64);
    let low_rho = (g * g - 5 * g + 10) / 2;
    let third = g * (g - 1) / 3;
    Ok(if r <= threshold {
        low_rho
    } else if 2 * r <= g - 3 {
        low_rho.min(third)
    } else {
        third
    })
}
