use num_integer::Integer;

use crate::semigroup::NumericalSemigroup;

/// Derived sequences of a semigroup: non-gaps `m_i`, even non-gaps `f_i`,
/// the odd non-gaps `u_j` in `[1, 2g-1]`, the even-gap count `ρ` and the
/// gcd chain `d_i`. All indices are 1-based.
///
/// Beyond the stored prefix the sequences are determined by the genus:
/// `m_i = g + i` once `i ≥ c - g`, every even number above `2g` is a non-gap,
/// and `d_i = 1` from `i = g + 1` on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureProfile {
    genus: u64,
    conductor: u64,
    gaps: Vec<u64>,
    /// `m_1, …, m_{g+1}`.
    nongaps: Vec<u64>,
    /// Even non-gaps in `[2, 2g]`, i.e. `f_1, …, f_{g-ρ}`.
    even: Vec<u64>,
    /// Odd non-gaps in `[1, 2g-1]`, ascending: `u_ρ, …, u_1`.
    odd: Vec<u64>,
    rho: u64,
    /// `d_1, …, d_{g+1}`.
    gcds: Vec<u64>,
}

impl StructureProfile {
    pub fn new(h: &NumericalSemigroup) -> Self {
        let g = h.genus();
        let nongaps: Vec<u64> = (1..)
            .filter(|&n| h.contains(n))
            .take(g as usize + 1)
            .collect();
        let even: Vec<u64> = (1..=g).map(|k| 2 * k).filter(|&n| h.contains(n)).collect();
        let odd: Vec<u64> = (0..g)
            .map(|k| 2 * k + 1)
            .filter(|&n| h.contains(n))
            .collect();
        let rho = h.gaps().iter().filter(|&&l| l % 2 == 0).count() as u64;
        let gcds = nongaps
            .iter()
            .scan(0u64, |d, &m| {
                *d = d.gcd(&m);
                Some(*d)
            })
            .collect();
        StructureProfile {
            genus: g,
            conductor: h.conductor(),
            gaps: h.gaps().to_vec(),
            nongaps,
            even,
            odd,
            rho,
            gcds,
        }
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Number of even gaps.
    pub fn rho(&self) -> u64 {
        self.rho
    }

    /// `m_i`, the i-th positive non-gap.
    ///
    /// Panics if `i == 0`.
    pub fn m(&self, i: u64) -> u64 {
        assert!(i >= 1, "m_0 is not defined");
        match self.nongaps.get(i as usize - 1) {
            Some(&m) => m,
            None => self.genus + i,
        }
    }

    /// `f_i`, the i-th positive even non-gap. Panics if `i == 0`.
    pub fn f(&self, i: u64) -> u64 {
        assert!(i >= 1, "f_0 is not defined");
        match self.even.get(i as usize - 1) {
            Some(&f) => f,
            None => 2 * self.genus + 2 * (i - self.even.len() as u64),
        }
    }

    /// `u_j` with `u_ρ < … < u_1`, so `u_1` is the largest odd non-gap below
    /// `2g`. Panics unless `1 ≤ j ≤ ρ`.
    pub fn u(&self, j: u64) -> u64 {
        assert!(
            j >= 1 && j <= self.rho,
            "u_{j} is out of range 1..={}",
            self.rho
        );
        self.odd[(self.rho - j) as usize]
    }

    /// The odd non-gaps below `2g`, ascending (`u_ρ` first).
    pub fn odd_nongaps(&self) -> &[u64] {
        &self.odd
    }

    /// `d_i = gcd(m_1, …, m_i)`. Panics if `i == 0`.
    pub fn d(&self, i: u64) -> u64 {
        assert!(i >= 1, "d_0 is not defined");
        self.gcds.get(i as usize - 1).copied().unwrap_or(1)
    }

    /// `S(H) = m_1 + … + m_g`.
    pub fn nongap_sum(&self) -> u64 {
        self.nongaps.iter().take(self.genus as usize).sum()
    }

    /// Number of even non-gaps in `[2, bound]`.
    pub fn even_nongaps_up_to(&self, bound: u64) -> u64 {
        if bound <= 2 * self.genus {
            self.even.partition_point(|&f| f <= bound) as u64
        } else {
            self.even.len() as u64 + (bound - 2 * self.genus) / 2
        }
    }
}

impl NumericalSemigroup {
    pub fn profile(&self) -> StructureProfile {
        StructureProfile::new(self)
    }
}
