//! γ-hyperellipticity and the non-gap conditions that characterize it.
//!
//! A semigroup is γ-hyperelliptic when it has exactly γ even elements in
//! `[2, 4γ]` and its (γ+1)-th non-gap is `4γ + 2`. For large genus this is
//! equivalent to a single value of `m_{2γ+1}`, to the position of `g - 1`
//! or `g - 2` in the non-gap sequence, and to `ρ(H) = γ`.

use serde::{Deserialize, Serialize};

use crate::profile::StructureProfile;

/// Parameters for the "t-hyperelliptic for some t ≤ γ" family of tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperellipticParams {
    pub gamma: u64,
    pub genus: u64,
}

impl HyperellipticParams {
    pub fn new(genus: u64, gamma: u64) -> Self {
        HyperellipticParams { gamma, genus }
    }

    /// `r = ⌊(g+1)/2⌋ − γ − 1`, the index whose non-gap sits at `g - 2`
    /// (g even) or `g - 1` (g odd) in a γ-hyperelliptic semigroup. `None`
    /// when it would be below 1.
    pub fn r(&self) -> Option<u64> {
        self.genus.div_ceil(2)
            .checked_sub(self.gamma + 1)
            .filter(|&r| r >= 1)
    }
}

/// (E1) exactly γ even elements in `[2, 4γ]`, and (E2) `m_{γ+1} = 4γ + 2`.
/// For γ = 0 this reduces to `m_1 = 2`.
pub fn is_gamma_hyperelliptic(p: &StructureProfile, gamma: u64) -> bool {
    e1_holds(p, gamma) && p.m(gamma + 1) == 4 * gamma + 2
}

pub fn e1_holds(p: &StructureProfile, gamma: u64) -> bool {
    p.even_nongaps_up_to(4 * gamma) == gamma
}

/// (E2'): `4γ + 2 ∈ H`.
pub fn e2_prime_holds(p: &StructureProfile, gamma: u64) -> bool {
    let n = 4 * gamma + 2;
    n >= p.conductor() || p.gaps().binary_search(&n).is_err()
}

/// H is t-hyperelliptic for some `t ∈ {0, …, γ}`.
pub fn is_hyperelliptic_up_to(p: &StructureProfile, gamma: u64) -> bool {
    (0..=gamma).any(|t| is_gamma_hyperelliptic(p, t))
}

/// The unique γ for which H is γ-hyperelliptic, if any. Only `γ = ρ(H)` can
/// qualify, so a single predicate evaluation suffices; see
/// [`gamma_hyperelliptic_scan`] for the exhaustive variant.
pub fn gamma_hyperelliptic(p: &StructureProfile) -> Option<u64> {
    let rho = p.rho();
    is_gamma_hyperelliptic(p, rho).then_some(rho)
}

/// Every γ in `0..=g` for which the predicate holds.
pub fn gamma_hyperelliptic_scan(p: &StructureProfile) -> Vec<u64> {
    (0..=p.genus())
        .filter(|&gamma| is_gamma_hyperelliptic(p, gamma))
        .collect()
}

/// `m_{2γ+1} = 6γ + 2`.
pub fn p2_holds(p: &StructureProfile, gamma: u64) -> bool {
    p.m(2 * gamma + 1) == 6 * gamma + 2
}

/// `m_{2γ+1} ≤ 6γ + 2`.
pub fn p2_weak(p: &StructureProfile, gamma: u64) -> bool {
    p.m(2 * gamma + 1) <= 6 * gamma + 2
}

/// `m_r = g − 2` when g is even, `m_r = g − 1` when g is odd. False when
/// `r < 1`.
pub fn p3_holds(p: &StructureProfile, gamma: u64) -> bool {
    let g = p.genus();
    match HyperellipticParams::new(g, gamma).r() {
        Some(r) => p.m(r) + 2 == g + (g % 2),
        None => false,
    }
}

/// `m_r ≤ g − 1 < m_{r+1}`. False when `r < 1`.
pub fn p3_weak(p: &StructureProfile, gamma: u64) -> bool {
    let g = p.genus();
    match HyperellipticParams::new(g, gamma).r() {
        Some(r) => p.m(r) < g && g - 1 < p.m(r + 1),
        None => false,
    }
}

/// `m_r ≤ g − 2` (g even) or `m_r ≤ g − 1` (g odd).
pub fn p3_upper(p: &StructureProfile, gamma: u64) -> bool {
    let g = p.genus();
    match HyperellipticParams::new(g, gamma).r() {
        Some(r) => p.m(r) + 2 <= g + (g % 2),
        None => false,
    }
}

/// `m_r ≤ g − 1`.
pub fn p3_upper_weak(p: &StructureProfile, gamma: u64) -> bool {
    let g = p.genus();
    match HyperellipticParams::new(g, gamma).r() {
        Some(r) => p.m(r) < g,
        None => false,
    }
}
