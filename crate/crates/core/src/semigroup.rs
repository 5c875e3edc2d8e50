//! Canonical representation of a numerical semigroup.
//!
//! A semigroup `H ⊆ ℕ` with finite complement is stored as a membership
//! bitmap over `[0, conductor)`; every integer at or above the conductor is a
//! member. Gaps and the minimal generating set are computed once at
//! construction and the value is immutable afterwards.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::bitset::Bits;
use crate::error::{arg, Error, Result};

/// Sieve length at which `from_generators` gives up. Keeps pathological
/// inputs such as `⟨1000, 1001⟩` from allocating without bound.
pub const MAX_SIEVE: u64 = 1 << 26;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    below_conductor: Bits,
    gaps: Vec<u64>,
    conductor: u64,
    min_generators: Vec<u64>,
}

impl NumericalSemigroup {
    /// `ℕ` itself, the unique semigroup of genus 0.
    pub fn naturals() -> Self {
        Self::from_membership(Bits::new(0), 0)
    }

    /// Smallest additively closed subset of `ℕ` containing `0` and `gens`.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return arg("generator list is empty");
        }
        if gens.contains(&0) {
            return arg("generators must be positive");
        }
        let gcd = gens.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if gcd != 1 {
            return Err(Error::InfiniteComplement { gcd });
        }
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let smallest = gens[0];
        if smallest == 1 {
            return Ok(Self::naturals());
        }

        // Once `smallest` consecutive integers are members, everything after is.
        let mut member: Vec<bool> = Vec::with_capacity(4 * smallest as usize);
        let mut run = 0u64;
        let mut n = 0u64;
        let conductor = loop {
            if n > MAX_SIEVE {
                return arg(format!("conductor exceeds the sieve limit {MAX_SIEVE}"));
            }
            let inside = n == 0
                || gens
                    .iter()
                    .take_while(|&&a| a <= n)
                    .any(|&a| member[(n - a) as usize]);
            member.push(inside);
            run = if inside { run + 1 } else { 0 };
            if run == smallest {
                break n + 1 - smallest;
            }
            n += 1;
        };

        let mut bits = Bits::new(conductor as usize);
        for (i, &m) in member.iter().take(conductor as usize).enumerate() {
            if m {
                bits.set(i);
            }
        }
        Ok(Self::from_membership(bits, conductor))
    }

    /// Builds the semigroup whose gap set is exactly `gaps`, or `None` when
    /// the complement of `gaps` is not closed under addition.
    pub fn from_gaps(gaps: &[u64]) -> Option<Self> {
        let mut gaps = gaps.to_vec();
        gaps.sort_unstable();
        gaps.dedup();
        if gaps.first() == Some(&0) {
            return None;
        }
        let conductor = gaps.last().map_or(0, |&l| l + 1);
        let mut bits = Bits::new(conductor as usize);
        bits.set_range(0, conductor as usize);
        for &l in &gaps {
            bits.clear(l as usize);
        }
        // Closure: a gap may not be a sum of two members.
        for &l in &gaps {
            if (1..=l / 2).any(|a| bits.get(a as usize) && bits.get((l - a) as usize)) {
                return None;
            }
        }
        Some(Self::from_membership(bits, conductor))
    }

    /// Assumes `below_conductor` already describes an additively closed set
    /// whose largest non-member is `conductor - 1`.
    pub(crate) fn from_membership(below_conductor: Bits, conductor: u64) -> Self {
        debug_assert_eq!(below_conductor.len() as u64, conductor);
        let gaps: Vec<u64> = (1..conductor)
            .filter(|&n| !below_conductor.get(n as usize))
            .collect();
        let min_generators = minimal_generators(&below_conductor, conductor);
        NumericalSemigroup {
            below_conductor,
            gaps,
            conductor,
            min_generators,
        }
    }

    #[inline]
    pub fn contains(&self, n: u64) -> bool {
        n >= self.conductor || self.below_conductor.get(n as usize)
    }

    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Largest gap, or `None` for `ℕ`.
    pub fn frobenius(&self) -> Option<u64> {
        self.gaps.last().copied()
    }

    pub fn min_generators(&self) -> &[u64] {
        &self.min_generators
    }

    /// Multiplicity `m_1`, the smallest positive element.
    pub fn multiplicity(&self) -> u64 {
        self.min_generators[0]
    }

    /// The `i`-th positive element `m_i` (1-indexed).
    pub fn nongap(&self, i: u64) -> Result<u64> {
        if i == 0 {
            return arg("non-gap index starts at 1");
        }
        let g = self.genus();
        let below = self.conductor.saturating_sub(1) - g.min(self.conductor.saturating_sub(1));
        if i > below {
            return Ok(g + i);
        }
        let mut seen = 0;
        for n in 1..self.conductor {
            if self.below_conductor.get(n as usize) {
                seen += 1;
                if seen == i {
                    return Ok(n);
                }
            }
        }
        unreachable!("non-gap count below the conductor is inconsistent")
    }

    /// `gcd(m_1, …, m_i)`.
    pub fn gcd_chain(&self, i: u64) -> Result<u64> {
        if i == 0 {
            return arg("gcd chain index starts at 1");
        }
        let mut d = 0u64;
        for k in 1..=i {
            d = d.gcd(&self.nongap(k)?);
            if d == 1 {
                break;
            }
        }
        Ok(d)
    }

    /// Removes a minimal generator `x` larger than the Frobenius number,
    /// giving a semigroup of genus one more. This is the child step of the
    /// semigroup tree.
    pub fn remove_generator(&self, x: u64) -> Result<Self> {
        let frob = self.frobenius();
        if frob.is_some_and(|f| x <= f) || self.min_generators.binary_search(&x).is_err() {
            return arg(format!(
                "{x} is not a minimal generator above the Frobenius number"
            ));
        }
        let conductor = x + 1;
        let mut bits = Bits::new(conductor as usize);
        for i in self.below_conductor.iter_ones() {
            bits.set(i);
        }
        bits.set_range(self.conductor as usize, x as usize);
        Ok(Self::from_membership(bits, conductor))
    }

    /// Inverse of [`remove_generator`](Self::remove_generator): adds the
    /// Frobenius number back. `None` for `ℕ`.
    pub fn parent(&self) -> Option<Self> {
        let frob = self.frobenius()?;
        let conductor = self.gaps.iter().rev().nth(1).map_or(0, |&l| l + 1);
        let mut bits = Bits::new(conductor as usize);
        for i in self
            .below_conductor
            .iter_ones()
            .take_while(|&i| (i as u64) < conductor)
        {
            bits.set(i);
        }
        debug_assert!(frob >= conductor);
        Some(Self::from_membership(bits, conductor))
    }

    /// Minimal generators larger than the Frobenius number; removing any one
    /// of them yields a child in the semigroup tree.
    pub fn effective_generators(&self) -> &[u64] {
        let start = match self.frobenius() {
            Some(f) => self.min_generators.partition_point(|&x| x <= f),
            None => 0,
        };
        &self.min_generators[start..]
    }
}

/// Minimal generators are the positive members that are not a sum of two
/// positive members. All of them lie below `conductor + m_1 + 1`.
fn minimal_generators(below_conductor: &Bits, conductor: u64) -> Vec<u64> {
    let m1 = (1..=conductor)
        .find(|&n| n >= conductor || below_conductor.get(n as usize))
        .unwrap_or(1)
        .max(1);
    let limit = (conductor + m1 + 1) as usize;
    let mut positive = Bits::new(limit);
    for n in 1..limit {
        if n as u64 >= conductor || below_conductor.get(n) {
            positive.set(n);
        }
    }
    let mut sums = Bits::new(limit);
    for a in positive.iter_ones() {
        if 2 * a >= limit {
            break;
        }
        sums.or_shifted(&positive, a);
    }
    let mut gens = positive;
    gens.and_not(&sums);
    gens.iter_ones().map(|n| n as u64).collect()
}

impl Ord for NumericalSemigroup {
    /// Genus first, then the minimal generating set lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.genus()
            .cmp(&other.genus())
            .then_with(|| self.min_generators.cmp(&other.min_generators))
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, g) in self.min_generators.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.min_generators.serialize(s)
    }
}

impl<'de> Deserialize<'de> for NumericalSemigroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let gens = Vec::<u64>::deserialize(d)?;
        NumericalSemigroup::from_generators(&gens).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn smallest_nontrivial() {
        let s = h(&[2, 3]);
        assert_eq!(s.gaps(), &[1]);
        assert_eq!(s.genus(), 1);
        assert_eq!(s.conductor(), 2);
        assert_eq!(s.min_generators(), &[2, 3]);
    }

    #[test]
    fn quartic_seven() {
        let s = h(&[4, 7]);
        assert_eq!(s.genus(), 9);
        assert_eq!(s.gaps(), &[1, 2, 3, 5, 6, 9, 10, 13, 17]);
    }

    #[test]
    fn three_generators() {
        let s = h(&[4, 10, 13]);
        assert_eq!(s.genus(), 10);
        assert_eq!(s.gaps(), &[1, 2, 3, 5, 6, 7, 9, 11, 15, 19]);
    }

    #[test]
    fn redundant_generators_are_dropped() {
        assert_eq!(h(&[4, 8, 10, 13, 4]).min_generators(), &[4, 10, 13]);
        assert_eq!(h(&[3, 5, 1]), NumericalSemigroup::naturals());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            NumericalSemigroup::from_generators(&[]),
            Err(Error::Argument(_))
        ));
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::InfiniteComplement { gcd: 2 })
        );
        assert!(NumericalSemigroup::from_generators(&[0, 1]).is_err());
    }

    #[test]
    fn naturals_shape() {
        let n = NumericalSemigroup::naturals();
        assert_eq!(n.genus(), 0);
        assert_eq!(n.conductor(), 0);
        assert_eq!(n.min_generators(), &[1]);
        assert_eq!(n.frobenius(), None);
        assert_eq!(n.nongap(5).unwrap(), 5);
        assert_eq!(n.effective_generators(), &[1]);
    }

    #[test]
    fn nongap_indexing() {
        assert_eq!(h(&[4, 7]).nongap(3).unwrap(), 8);
        assert_eq!(h(&[2, 21]).nongap(10).unwrap(), 20);
        assert!(h(&[2, 3]).nongap(0).is_err());
        // Past the conductor the i-th non-gap is g + i.
        let s = h(&[4, 10, 13]);
        for k in 2..12 {
            let i = s.genus() + k;
            assert_eq!(s.nongap(i).unwrap(), 2 * s.genus() + k);
            assert_eq!(2 * s.nongap(i).unwrap(), s.nongap(3 * i - k).unwrap());
        }
    }

    #[test]
    fn gcd_chain_examples() {
        assert_eq!(h(&[4, 6, 17]).gcd_chain(3).unwrap(), 2);
        assert_eq!(h(&[2, 3]).gcd_chain(2).unwrap(), 1);
        assert_eq!(h(&[5, 18]).gcd_chain(5).unwrap(), 1);
        assert_eq!(h(&[5, 18]).gcd_chain(3).unwrap(), 5);
    }

    #[test]
    fn from_gaps_checks_closure() {
        assert_eq!(
            NumericalSemigroup::from_gaps(&[1, 2, 3, 5, 6, 9, 10, 13, 17]),
            Some(h(&[4, 7]))
        );
        // 4 = 2 + 2 would be a member.
        assert_eq!(NumericalSemigroup::from_gaps(&[1, 3, 4]), None);
        assert_eq!(
            NumericalSemigroup::from_gaps(&[]),
            Some(NumericalSemigroup::naturals())
        );
    }

    #[test]
    fn tree_step_and_parent() {
        let s = h(&[2, 3]);
        let kids: Vec<_> = s
            .effective_generators()
            .iter()
            .map(|&x| s.remove_generator(x).unwrap())
            .collect();
        assert_eq!(kids.len(), 2);
        assert_eq!(kids[0], h(&[3, 4, 5]));
        assert_eq!(kids[1], h(&[2, 5]));
        for k in &kids {
            assert_eq!(k.parent().as_ref(), Some(&s));
        }
        assert!(s.remove_generator(4).is_err());
        assert!(kids[1].remove_generator(2).is_err());
    }

    #[test]
    fn display_and_serde() {
        let s = h(&[4, 10, 13]);
        assert_eq!(s.to_string(), "<4,10,13>");
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "[4,10,13]");
        let back: NumericalSemigroup = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }
}
