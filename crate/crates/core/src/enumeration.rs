//! Exhaustive generation of semigroups by genus.
//!
//! The semigroup tree has `ℕ` at the root; the children of `H` are the
//! semigroups `H ∖ {x}` for each minimal generator `x` above the Frobenius
//! number. Every semigroup of genus g sits at depth g exactly once. A slow
//! subset-closure search serves as an independent oracle at small genus.

use std::ops::RangeInclusive;

use crate::error::{arg, Result};
use crate::semigroup::NumericalSemigroup;

/// Oracle refuses genera above this.
pub const BRUTE_FORCE_MAX_GENUS: u64 = 12;

/// Default cap on tree enumeration depth; `NSG_MAX_GENUS` overrides it.
pub const DEFAULT_MAX_GENUS: u64 = 26;

pub fn max_genus_from_env() -> u64 {
    std::env::var("NSG_MAX_GENUS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_GENUS)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationNode {
    pub semigroup: NumericalSemigroup,
}

impl EnumerationNode {
    pub fn root() -> Self {
        EnumerationNode {
            semigroup: NumericalSemigroup::naturals(),
        }
    }

    /// Largest gap, `-1` at the root.
    pub fn frobenius(&self) -> i64 {
        self.semigroup.frobenius().map_or(-1, |f| f as i64)
    }

    /// Minimal generators above the Frobenius number.
    pub fn effective_generators(&self) -> &[u64] {
        self.semigroup.effective_generators()
    }

    pub fn genus(&self) -> u64 {
        self.semigroup.genus()
    }

    /// Children ordered by the removed generator, ascending.
    pub fn children(&self) -> Vec<EnumerationNode> {
        self.effective_generators()
            .iter()
            .map(|&x| EnumerationNode {
                semigroup: self
                    .semigroup
                    .remove_generator(x)
                    .expect("effective generators are removable"),
            })
            .collect()
    }
}

/// Depth-first walk yielding every semigroup whose genus lies in `genus`.
pub struct GenusWalk {
    stack: Vec<EnumerationNode>,
    genus: RangeInclusive<u64>,
}

impl GenusWalk {
    pub fn new(genus: RangeInclusive<u64>) -> Self {
        GenusWalk {
            stack: vec![EnumerationNode::root()],
            genus,
        }
    }
}

impl Iterator for GenusWalk {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<NumericalSemigroup> {
        while let Some(node) = self.stack.pop() {
            let g = node.genus();
            if g < *self.genus.end() {
                let kids = node.children();
                self.stack.extend(kids.into_iter().rev());
            }
            if self.genus.contains(&g) {
                return Some(node.semigroup);
            }
        }
        None
    }
}

/// Every semigroup of genus exactly `g`, depth-first.
pub fn enumerate_genus(g: u64) -> GenusWalk {
    GenusWalk::new(g..=g)
}

/// Number of semigroups of each genus `0..=max_genus`.
pub fn count_by_genus(max_genus: u64) -> Vec<u64> {
    let mut counts = vec![0u64; max_genus as usize + 1];
    for h in GenusWalk::new(0..=max_genus) {
        counts[h.genus() as usize] += 1;
    }
    counts
}

/// Independent oracle: every g-subset of `[1, 2g − 1]` that contains 1 and
/// whose complement in ℕ is additively closed. The gaps of a genus-g
/// semigroup all lie below `2g` because `m_g = 2g`.
pub fn brute_force_enumerate(g: u64) -> Result<Vec<NumericalSemigroup>> {
    if g > BRUTE_FORCE_MAX_GENUS {
        return arg(format!(
            "brute-force oracle is capped at genus {BRUTE_FORCE_MAX_GENUS}"
        ));
    }
    if g == 0 {
        return Ok(vec![NumericalSemigroup::naturals()]);
    }
    let top = 2 * g - 1;
    let mut out = Vec::new();
    let mut chosen: Vec<u64> = vec![1];
    subsets(2, top, g as usize, &mut chosen, &mut |gaps| {
        if closed_complement(gaps, top) {
            out.push(NumericalSemigroup::from_gaps(gaps).expect("closure was checked directly"));
        }
    });
    out.sort();
    Ok(out)
}

fn subsets(
    next: u64,
    top: u64,
    want: usize,
    chosen: &mut Vec<u64>,
    visit: &mut impl FnMut(&[u64]),
) {
    if chosen.len() == want {
        visit(chosen);
        return;
    }
    let remaining = want - chosen.len();
    if next > top || (top - next + 1) < remaining as u64 {
        return;
    }
    chosen.push(next);
    subsets(next + 1, top, want, chosen, visit);
    chosen.pop();
    subsets(next + 1, top, want, chosen, visit);
}

/// `ℕ ∖ gaps` is closed under addition. Sums at or above `top + 1` are
/// members automatically, so only sums landing on a gap matter.
fn closed_complement(gaps: &[u64], top: u64) -> bool {
    let mut member = vec![true; top as usize + 1];
    for &l in gaps {
        member[l as usize] = false;
    }
    for a in 1..=top {
        if !member[a as usize] {
            continue;
        }
        for b in a..=top - a {
            if member[b as usize] && !member[(a + b) as usize] {
                return false;
            }
        }
    }
    true
}
