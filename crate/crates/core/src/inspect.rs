//! A complete, serializable summary of one semigroup.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::hyperelliptic::{
    e1_holds, e2_prime_holds, gamma_hyperelliptic, is_gamma_hyperelliptic, p2_holds, p3_holds,
    p3_weak,
};
use crate::semigroup::NumericalSemigroup;
use crate::weights::{char_weight_flags, weight};

/// Predicates evaluated at `γ = ρ(H)`, the only γ for which H can be
/// γ-hyperelliptic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicateFlags {
    pub gamma: u64,
    pub e1: bool,
    pub e2: bool,
    pub e2_prime: bool,
    pub m_2gamma_plus_1: bool,
    pub m_r_position: bool,
    pub m_r_position_weak: bool,
    pub weight_window: bool,
    pub weight_below_next: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InspectRecord {
    pub generators: Vec<u64>,
    pub genus: u64,
    pub gaps: Vec<u64>,
    pub conductor: u64,
    /// `m_1, …, m_{g+1}`.
    pub m: Vec<u64>,
    pub rho: u64,
    /// `u_1, …, u_ρ`, descending.
    pub u: Vec<u64>,
    /// `f_1, …, f_{g-ρ}`.
    pub f: Vec<u64>,
    pub weight: i64,
    pub lower_bound: i64,
    pub upper_bound: i64,
    pub gamma_hyperelliptic: Option<u64>,
    pub predicates: PredicateFlags,
}

impl InspectRecord {
    pub fn new(h: &NumericalSemigroup) -> Result<Self> {
        let p = h.profile();
        let g = p.genus();
        let rho = p.rho();
        let w = weight(&p)?;
        let cw = char_weight_flags(&p, w.w, rho);
        Ok(InspectRecord {
            generators: h.min_generators().to_vec(),
            genus: g,
            gaps: p.gaps().to_vec(),
            conductor: p.conductor(),
            m: (1..=g + 1).map(|i| p.m(i)).collect(),
            rho,
            u: (1..=rho).map(|j| p.u(j)).collect(),
            f: (1..=g - rho).map(|i| p.f(i)).collect(),
            weight: w.w,
            lower_bound: w.lower,
            upper_bound: w.upper,
            gamma_hyperelliptic: gamma_hyperelliptic(&p),
            predicates: PredicateFlags {
                gamma: rho,
                e1: e1_holds(&p, rho),
                e2: is_gamma_hyperelliptic(&p, rho),
                e2_prime: e2_prime_holds(&p, rho),
                m_2gamma_plus_1: p2_holds(&p, rho),
                m_r_position: p3_holds(&p, rho),
                m_r_position_weak: p3_weak(&p, rho),
                weight_window: cw.cw1_ii,
                weight_below_next: cw.cw1_iii,
            },
        })
    }

    /// Aligned `key  value` lines.
    pub fn to_table(&self) -> String {
        fn list(v: &[u64]) -> String {
            v.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
        }
        let q = &self.predicates;
        let rows: Vec<(&str, String)> = vec![
            ("generators", list(&self.generators)),
            ("genus", self.genus.to_string()),
            ("conductor", self.conductor.to_string()),
            ("gaps", list(&self.gaps)),
            ("m", list(&self.m)),
            ("rho", self.rho.to_string()),
            ("u", list(&self.u)),
            ("f", list(&self.f)),
            ("weight", self.weight.to_string()),
            (
                "bounds",
                format!("{}..{}", self.lower_bound, self.upper_bound),
            ),
            (
                "gamma_hyperelliptic",
                self.gamma_hyperelliptic
                    .map_or_else(|| "none".to_string(), |g| g.to_string()),
            ),
            ("e1", q.e1.to_string()),
            ("e2", q.e2.to_string()),
            ("e2_prime", q.e2_prime.to_string()),
            ("m_2gamma_plus_1", q.m_2gamma_plus_1.to_string()),
            ("m_r_position", q.m_r_position.to_string()),
            ("m_r_position_weak", q.m_r_position_weak.to_string()),
            ("weight_window", q.weight_window.to_string()),
            ("weight_below_next", q.weight_below_next.to_string()),
        ];
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        rows.iter()
            .map(|(k, v)| format!("{k:<width$}  {v}\n"))
            .collect()
    }
}
