//! Doubling of finite integer sets and the inequalities it yields on
//! non-gap sequences.
//!
//! Each check here has an invariant-fault channel: the inequality is a
//! theorem under its hypotheses, so a violation is reported as
//! [`Error::InvariantViolation`] and points at a bug in the sieve or in the
//! sumset code.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{arg, Error, Result};
use crate::profile::StructureProfile;

/// `2K = {a + b : a, b ∈ K}`, ascending.
pub fn double_sumset(k: &[i64]) -> Vec<i64> {
    let mut out = BTreeSet::new();
    for (x, &a) in k.iter().enumerate() {
        for &b in &k[x..] {
            out.insert(a + b);
        }
    }
    out.into_iter().collect()
}

/// A set `K = {0 < m_1 < … < m_i}` together with its doubling and, when
/// `m_i > 0`, the size of the doubling of `{m_1, …, m_i}` modulo `m_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumsetInstance {
    pub k: Vec<i64>,
    pub i: usize,
    pub double: Vec<i64>,
    pub residue_double_size: usize,
}

impl SumsetInstance {
    pub fn new(k: Vec<i64>) -> Result<Self> {
        if k.first() != Some(&0) || k.windows(2).any(|w| w[0] >= w[1]) {
            return arg("K must be strictly increasing and start at 0");
        }
        let i = k.len() - 1;
        let double = double_sumset(&k);
        let residue_double_size = match k.last() {
            Some(&top) if top > 0 => residue_double_size(&k[1..], top as u64),
            _ => 0,
        };
        Ok(SumsetInstance {
            k,
            i,
            double,
            residue_double_size,
        })
    }
}

/// `#2K̃` where `K̃` is the image of `elems` in `ℤ/modulus`.
pub fn residue_double_size(elems: &[i64], modulus: u64) -> usize {
    let m = modulus as i64;
    let residues: BTreeSet<i64> = elems.iter().map(|&a| a.rem_euclid(m)).collect();
    let residues: Vec<i64> = residues.into_iter().collect();
    let mut hit = vec![false; modulus as usize];
    for (x, &a) in residues.iter().enumerate() {
        for &b in &residues[x..] {
            hit[((a + b) % m) as usize] = true;
        }
    }
    hit.iter().filter(|&&h| h).count()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreimanCheck {
    pub i: usize,
    pub b: i64,
    pub double_size: usize,
    /// `2i + 2 + b`.
    pub bound: usize,
}

/// For `K = {0 < m_1 < … < m_i}` with `gcd(m_1, …, m_i) = 1`,
/// `0 ≤ b < i − 1` and `m_i ≥ i + 1 + b`: `#2K ≥ 2i + 2 + b`.
///
/// Unmet preconditions are an [`Error::Argument`]; a failing inequality is
/// an [`Error::InvariantViolation`].
pub fn freiman_check(k: &[i64], b: i64) -> Result<FreimanCheck> {
    if k.first() != Some(&0) || k.windows(2).any(|w| w[0] >= w[1]) || k.len() < 2 {
        return arg("K must be 0 < m_1 < … < m_i with i >= 1");
    }
    let i = k.len() - 1;
    let gcd = k[1..].iter().fold(0i64, |d, &x| d.gcd(&x));
    if gcd != 1 {
        return arg(format!("gcd(m_1, …, m_i) = {gcd}, need 1"));
    }
    if b < 0 || b >= i as i64 - 1 {
        return arg(format!("b = {b} outside 0 <= b < {}", i as i64 - 1));
    }
    if k[i] < i as i64 + 1 + b {
        return arg(format!(
            "m_i = {} below i + 1 + b = {}",
            k[i],
            i as i64 + 1 + b
        ));
    }
    let double_size = double_sumset(k).len();
    freiman_verdict(i, b, double_size)
}

fn freiman_verdict(i: usize, b: i64, double_size: usize) -> Result<FreimanCheck> {
    let bound = 2 * i + 2 + b as usize;
    if double_size < bound {
        return Err(Error::InvariantViolation(format!(
            "#2K = {double_size} < 2i + 2 + b = {bound} (i = {i}, b = {b})"
        )));
    }
    Ok(FreimanCheck {
        i,
        b,
        double_size,
        bound,
    })
}

/// Runs the Freiman inequality on every admissible `(i, b)` for
/// `K = {0, m_1, …, m_i}` of `p`, `2 ≤ i ≤ max_i`, skipping `i` with
/// `d_i ≠ 1`. Doublings are built incrementally. Returns the number of
/// `(i, b)` pairs checked.
pub fn freiman_sweep(p: &StructureProfile, max_i: u64) -> Result<u64> {
    // Bitset over [0, 2 m_max].
    let top = p.m(max_i.max(1)) as usize;
    let mut in_k = vec![false; top + 1];
    let mut doubled = vec![false; 2 * top + 1];
    let mut members: Vec<usize> = vec![0];
    in_k[0] = true;
    doubled[0] = true;
    let mut size = 1usize;
    let mut checked = 0;
    for i in 1..=max_i {
        let m = p.m(i) as usize;
        in_k[m] = true;
        members.push(m);
        for &a in &members {
            if !doubled[a + m] {
                doubled[a + m] = true;
                size += 1;
            }
        }
        if i < 2 || p.d(i) != 1 {
            continue;
        }
        let b_max = (i as i64 - 2).min(m as i64 - i as i64 - 1);
        for b in 0..=b_max {
            freiman_verdict(i as usize, b, size)?;
            checked += 1;
        }
    }
    Ok(checked)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CastelnuovoCheck {
    pub i: u64,
    /// `2 m_i`.
    pub double_m_i: u64,
    /// `m_{3i−1}`.
    pub m_3i_minus_1: u64,
    pub d_i: u64,
    pub hypothesis_met: bool,
}

impl CastelnuovoCheck {
    pub fn holds(&self) -> bool {
        self.double_m_i >= self.m_3i_minus_1
    }
}

/// Raw values of `2 m_i ≥ m_{3i−1}` without checking hypotheses.
pub fn castelnuovo_values(p: &StructureProfile, i: u64) -> Result<CastelnuovoCheck> {
    if i == 0 {
        return arg("index starts at 1");
    }
    let d_i = p.d(i);
    Ok(CastelnuovoCheck {
        i,
        double_m_i: 2 * p.m(i),
        m_3i_minus_1: p.m(3 * i - 1),
        d_i,
        hypothesis_met: d_i == 1 && i <= p.genus() + 1,
    })
}

/// `2 m_i ≥ m_{3i−1}` whenever `d_i = 1` and `i ≤ g + 1`.
///
/// Returns [`Error::OutOfHypothesis`] when the hypotheses fail; callers who
/// want the raw numbers anyway use [`castelnuovo_values`].
pub fn castelnuovo_check(p: &StructureProfile, i: u64) -> Result<CastelnuovoCheck> {
    let c = castelnuovo_values(p, i)?;
    if !c.hypothesis_met {
        return Err(Error::OutOfHypothesis(format!(
            "need d_i = 1 and i <= g + 1 (i = {i}, d_i = {}, g = {})",
            c.d_i,
            p.genus()
        )));
    }
    if !c.holds() {
        return Err(Error::InvariantViolation(format!(
            "2 m_{i} = {} < m_{} = {}",
            c.double_m_i,
            3 * i - 1,
            c.m_3i_minus_1
        )));
    }
    Ok(c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueBound {
    pub i: u64,
    /// `N = #2K̃` for `K̃ = {m_1, …, m_i} mod m_i`.
    pub n: u64,
    pub double_m_i: u64,
    /// `m_{i+N}`.
    pub m_i_plus_n: u64,
}

/// `2 m_i ≥ m_{i+N}` for `2 ≤ i ≤ g − 2`.
pub fn residue_sumset_bound(p: &StructureProfile, i: u64) -> Result<ResidueBound> {
    let g = p.genus();
    if i < 2 || i + 2 > g {
        return arg(format!("need 2 <= i <= g - 2 (i = {i}, g = {g})"));
    }
    let elems: Vec<i64> = (1..=i).map(|k| p.m(k) as i64).collect();
    let modulus = p.m(i);
    let n = residue_double_size(&elems, modulus) as u64;
    let r = ResidueBound {
        i,
        n,
        double_m_i: 2 * modulus,
        m_i_plus_n: p.m(i + n),
    };
    if r.double_m_i < r.m_i_plus_n {
        return Err(Error::InvariantViolation(format!(
            "2 m_{i} = {} < m_{} = {}",
            r.double_m_i,
            i + n,
            r.m_i_plus_n
        )));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::NumericalSemigroup;

    fn p(gens: &[u64]) -> StructureProfile {
        NumericalSemigroup::from_generators(gens).unwrap().profile()
    }

    #[test]
    fn doubling_examples() {
        assert_eq!(double_sumset(&[0, 1, 2]), vec![0, 1, 2, 3, 4]);
        assert_eq!(double_sumset(&[0, 2, 3]), vec![0, 2, 3, 4, 5, 6]);
        let k = [0, 5, 10, 15, 18, 20];
        let d = double_sumset(&k);
        assert!(d.len() >= 2 * 5 + 2 + 3);
    }

    #[test]
    fn freiman_examples() {
        let c = freiman_check(&[0, 2, 3], 0).unwrap();
        assert_eq!((c.double_size, c.bound), (6, 6));
        let c = freiman_check(&[0, 3, 5, 6, 7], 2).unwrap();
        assert_eq!(
            double_sumset(&[0, 3, 5, 6, 7]),
            vec![0, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14]
        );
        assert_eq!((c.double_size, c.bound), (12, 12));
        for b in 0..2 {
            assert!(matches!(
                freiman_check(&[0, 4, 6, 8], b),
                Err(Error::Argument(_))
            ));
        }
        // b too large, m_i too small.
        assert!(matches!(
            freiman_check(&[0, 2, 3], 1),
            Err(Error::Argument(_))
        ));
        assert!(matches!(
            freiman_check(&[0, 1, 2, 3], 1),
            Err(Error::Argument(_))
        ));
        let c = freiman_check(&[0, 5, 10, 15, 18, 20], 3).unwrap();
        assert!(c.double_size >= 15);
    }

    #[test]
    fn castelnuovo_examples() {
        let c = castelnuovo_check(&p(&[5, 18]), 5).unwrap();
        assert_eq!((c.double_m_i, c.m_3i_minus_1), (40, 40));
        let c = castelnuovo_check(&p(&[2, 3]), 2).unwrap();
        assert_eq!((c.double_m_i, c.m_3i_minus_1), (6, 6));

        let q = p(&[4, 6, 17]);
        assert!(matches!(
            castelnuovo_check(&q, 3),
            Err(Error::OutOfHypothesis(_))
        ));
        let raw = castelnuovo_values(&q, 3).unwrap();
        assert_eq!((raw.d_i, raw.double_m_i, raw.m_3i_minus_1), (2, 16, 17));
        assert!(!raw.holds());
        // 2 m_3 = m_7 for this one.
        assert_eq!(2 * q.m(3), q.m(7));
    }

    #[test]
    fn residue_examples() {
        let r = residue_sumset_bound(&p(&[4, 10, 13]), 3).unwrap();
        // {4, 8, 0} mod 10 doubles to {0, 4, 6, 8, 2}.
        assert_eq!(r.n, 5);
        assert!(r.double_m_i >= r.m_i_plus_n);

        let r = residue_sumset_bound(&p(&[5, 18]), 5).unwrap();
        assert_eq!(r.n, 9);
        assert_eq!((r.double_m_i, r.m_i_plus_n), (40, 40));

        let q = p(&[2, 25]);
        for i in 2..=q.genus() - 2 {
            let r = residue_sumset_bound(&q, i).unwrap();
            assert!(r.double_m_i >= r.m_i_plus_n);
        }
        assert!(residue_sumset_bound(&q, 1).is_err());
        assert!(residue_sumset_bound(&q, 11).is_err());
    }

    #[test]
    fn sweep_matches_direct_checks() {
        let q = p(&[5, 18]);
        let g = q.genus();
        let mut direct = 0;
        for i in 2..=g + 1 {
            if q.d(i) != 1 {
                continue;
            }
            let k: Vec<i64> = std::iter::once(0)
                .chain((1..=i).map(|j| q.m(j) as i64))
                .collect();
            for b in 0..(i as i64 - 1) {
                if k[i as usize] >= i as i64 + 1 + b {
                    freiman_check(&k, b).unwrap();
                    direct += 1;
                }
            }
        }
        assert_eq!(freiman_sweep(&q, g + 1).unwrap(), direct);
    }

    #[test]
    fn instance_fields() {
        let s = SumsetInstance::new(vec![0, 5, 10, 15, 18, 20]).unwrap();
        assert_eq!(s.i, 5);
        assert_eq!(s.residue_double_size, 9);
        assert!(SumsetInstance::new(vec![1, 2]).is_err());
    }
}
