//! Exhaustive verification of the characterizations and inequalities over
//! every semigroup in a genus range.
//!
//! Each [`TheoremId`] names one statement. For every semigroup the verifier
//! evaluates all arms of the statement; an equivalence fails when its arms
//! disagree, an inequality when it is violated. Genus hypotheses are
//! checked per genus and genera outside them are skipped unless
//! `probe_outside` is set, which is how sharpness witnesses are reproduced.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::{map_reduce, Execution};
use crate::hyperelliptic::{
    e1_holds, e2_prime_holds, is_gamma_hyperelliptic, is_hyperelliptic_up_to, p2_holds, p2_weak,
    p3_holds, p3_upper, p3_upper_weak, p3_weak,
};
use crate::profile::StructureProfile;
use crate::semigroup::NumericalSemigroup;
use crate::sumsets::{castelnuovo_check, freiman_sweep, residue_sumset_bound};
use crate::weights::{
    bound_g_threshold, char_weight_flags, oliv_cap, opt_weight_cap, opt_weight_extremal,
    quartic_j_range, quartic_layout, weight, weight_formula_quartic, weight_formula_triadic,
    weight_from_gaps, weight_from_nongap_sum,
};

macro_rules! theorem_ids {
    ($($variant:ident => $name:literal),* $(,)?) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum TheoremId { $($variant),* }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant),*];

            pub fn as_str(&self) -> &'static str {
                match self { $(TheoremId::$variant => $name),* }
            }
        }

        impl FromStr for TheoremId {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(TheoremId::$variant),)*
                    other => Err(Error::UnknownTheorem(other.to_string())),
                }
            }
        }
    };
}

theorem_ids! {
    Char1 => "char1",
    Char2 => "char2",
    Char3 => "char3",
    Char4 => "char4",
    CharWeight => "char-weight",
    CharWeight1 => "char-weight1",
    NongapGrowth => "nongap-growth",
    EvenStructure => "even-structure",
    GammaUniqueness => "gamma-uniqueness",
    Feto1 => "feto1",
    Feto2 => "feto2",
    DesOdd1 => "des-odd-1",
    EvenBounds => "even-bounds",
    BoundsIv => "bounds-iv",
    WeightDual => "weight-dual",
    BoWeight => "bo-weight",
    ClosedFormWeight => "closed-form-weight",
    OptWeight => "opt-weight",
    Oliv => "oliv",
    Jenkins => "jenkins",
    Castelnuovo => "castelnuovo",
    Freiman => "freiman",
    ResidueSumset => "residue-sumset",
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for TheoremId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl TheoremId {
    /// Statements parameterized by γ.
    pub fn uses_gamma(&self) -> bool {
        matches!(
            self,
            TheoremId::Char1
                | TheoremId::Char2
                | TheoremId::Char3
                | TheoremId::Char4
                | TheoremId::CharWeight
                | TheoremId::CharWeight1
        )
    }

    /// Whether genus g satisfies the statement's genus hypothesis. Genus 0
    /// never does.
    pub fn genus_in_hypothesis(&self, gamma: u64, g: u64) -> bool {
        if g == 0 {
            return false;
        }
        match self {
            TheoremId::Char1 | TheoremId::Char2 => gamma == 0 || g >= 6 * gamma + 4,
            TheoremId::Char3 | TheoremId::Char4 => g == 6 * gamma + 5 || g >= 6 * gamma + 7,
            TheoremId::CharWeight | TheoremId::CharWeight1 => g >= bound_g_threshold(gamma),
            TheoremId::OptWeight | TheoremId::Oliv => g >= 11,
            _ => true,
        }
    }

    /// Readings adopted where a statement is ambiguous or its equality case
    /// needs a corrected family. Embedded in every report for that statement.
    pub fn notes(&self) -> Vec<&'static str> {
        let mut notes = Vec::new();
        match self {
            TheoremId::Char3 | TheoremId::Char4 => {
                notes.push(
                    "r = floor((g+1)/2) - gamma - 1",
                );
                notes.push("genus hypothesis g = 6gamma+5 or g >= 6gamma+7; probe g = 6gamma+6 with --probe-outside");
            }
            TheoremId::BoWeight
            | TheoremId::CharWeight
            | TheoremId::CharWeight1
            | TheoremId::Feto2 => {
                notes.push("C(n,2) = n(n-1)/2 for every integer n, so C(-1,2) = 1");
            }
            TheoremId::OptWeight | TheoremId::Oliv => {
                notes.push("r in {1..6} with g = r (mod 6), so g = 0 (mod 6) takes r = 6; c = (g-5)/6 if r = 5, else (g-r)/6 - 1");
            }
            TheoremId::ClosedFormWeight => {
                notes.push("J ranges over max{1, ceil((3rho+2-g)/2)} ..= min{rho+1, floor((g-rho+3)/2)} for both parities of g");
            }
            TheoremId::Freiman => {
                notes.push("K = {0, m_1, ..., m_i} for 2 <= i <= g+1 with d_i = 1")
            }
            _ => {}
        }
        if matches!(self, TheoremId::BoWeight) {
            notes.push("upper equality family <4, 4rho+2, 2g-4rho+1>; <4, 4rho, 2g-4rho+1> does not have genus g");
        }
        if matches!(self, TheoremId::Oliv) {
            notes.push("first branch read as (g^2-5g+10)/2; fractional caps are floored since weights are integers");
        }
        notes
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    FailsWithWitnesses,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    pub genus: u64,
    pub generators: Vec<u64>,
    /// Which arms disagreed, or which inequality failed.
    pub detail: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusTally {
    pub genus: u64,
    pub in_hypothesis: bool,
    pub checked: u64,
    pub failures: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<u64>,
    pub genus_range: (u64, u64),
    pub probe_outside: bool,
    pub checked: u64,
    pub counterexamples: Vec<Counterexample>,
    pub per_genus: Vec<GenusTally>,
    pub status: Status,
    pub notes: Vec<String>,
}

impl TheoremReport {
    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn has_witness(&self, generators: &[u64]) -> bool {
        self.counterexamples
            .iter()
            .any(|c| c.generators == generators)
    }

    /// Combines reports for the same statement over different genera.
    /// Counts add and witness lists concatenate, so the result does not
    /// depend on merge order.
    pub fn merge(mut self, other: TheoremReport) -> Result<TheoremReport> {
        if self.theorem_id != other.theorem_id || self.gamma != other.gamma {
            return Err(Error::Argument(
                "only reports for the same statement and gamma can be merged".into(),
            ));
        }
        self.genus_range = (
            self.genus_range.0.min(other.genus_range.0),
            self.genus_range.1.max(other.genus_range.1),
        );
        self.probe_outside |= other.probe_outside;
        self.checked += other.checked;
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples.sort();
        self.counterexamples.dedup();
        let mut per: BTreeMap<u64, GenusTally> =
            self.per_genus.into_iter().map(|t| (t.genus, t)).collect();
        for t in other.per_genus {
            let e = per.entry(t.genus).or_insert(GenusTally {
                genus: t.genus,
                in_hypothesis: t.in_hypothesis,
                ..Default::default()
            });
            e.checked += t.checked;
            e.failures += t.failures;
        }
        self.per_genus = per.into_values().collect();
        self.status = if self.counterexamples.is_empty() {
            Status::Holds
        } else {
            Status::FailsWithWitnesses
        };
        Ok(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub gamma: u64,
    pub genus: RangeInclusive<u64>,
    pub probe_outside: bool,
    pub execution: Execution,
}

impl VerifyOptions {
    pub fn new(gamma: u64, genus: RangeInclusive<u64>) -> Self {
        VerifyOptions {
            gamma,
            genus,
            probe_outside: false,
            execution: Execution::Auto,
        }
    }

    pub fn probe(mut self) -> Self {
        self.probe_outside = true;
        self
    }

    pub fn execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }
}

/// Outcome of one statement on one semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// The statement's per-semigroup hypothesis does not apply.
    NotApplicable,
    Holds,
    Fails(String),
}

fn arms(named: &[(&str, bool)]) -> Outcome {
    if named.windows(2).all(|w| w[0].1 == w[1].1) {
        Outcome::Holds
    } else {
        Outcome::Fails(
            named
                .iter()
                .map(|(n, v)| format!("{n}={v}"))
                .collect::<Vec<_>>()
                .join(" "),
        )
    }
}

/// Collects violated conditions; holds when there are none.
#[derive(Default)]
struct Conditions(Vec<String>);

impl Conditions {
    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.0.push(what());
        }
    }

    fn outcome(self) -> Outcome {
        if self.0.is_empty() {
            Outcome::Holds
        } else {
            Outcome::Fails(self.0.join("; "))
        }
    }
}

fn from_error(e: Error) -> Outcome {
    Outcome::Fails(e.to_string())
}

/// Evaluates `id` at γ on one semigroup, ignoring the genus hypothesis.
pub fn check(id: TheoremId, gamma: u64, h: &NumericalSemigroup, p: &StructureProfile) -> Outcome {
    let g = p.genus();
    let rho = p.rho();
    if g == 0 {
        return Outcome::NotApplicable;
    }
    match id {
        TheoremId::Char1 => arms(&[
            ("(i)", is_gamma_hyperelliptic(p, gamma)),
            ("(ii)", p2_holds(p, gamma)),
        ]),
        TheoremId::Char2 => arms(&[
            ("(i)", is_hyperelliptic_up_to(p, gamma)),
            ("(ii)", p2_weak(p, gamma)),
            ("(iii)", rho <= gamma),
        ]),
        TheoremId::Char3 => arms(&[
            ("(i)", is_gamma_hyperelliptic(p, gamma)),
            ("(ii)", p3_holds(p, gamma)),
            ("(iii)", p3_weak(p, gamma)),
        ]),
        TheoremId::Char4 => arms(&[
            ("(i)", is_hyperelliptic_up_to(p, gamma)),
            ("(ii)", p3_upper(p, gamma)),
            ("(iii)", p3_upper_weak(p, gamma)),
            ("(iv)", rho <= gamma),
        ]),
        TheoremId::CharWeight | TheoremId::CharWeight1 => {
            let w = match weight(p) {
                Ok(r) => r.w,
                Err(e) => return from_error(e),
            };
            let f = char_weight_flags(p, w, gamma);
            if id == TheoremId::CharWeight {
                arms(&[("(i)", f.hyperelliptic_up_to), ("(ii)", f.cw_ii)])
            } else {
                arms(&[
                    ("(i)", f.gamma_hyperelliptic),
                    ("(ii)", f.cw1_ii),
                    ("(iii)", f.cw1_iii),
                ])
            }
        }
        TheoremId::NongapGrowth => check_nongap_growth(p),
        TheoremId::EvenStructure => check_even_structure(p),
        TheoremId::GammaUniqueness => check_gamma_uniqueness(p),
        TheoremId::Feto1 => {
            let mut c = Conditions::default();
            c.require(2 * g >= 3 * rho, || {
                format!("2g = {} < 3rho = {}", 2 * g, 3 * rho)
            });
            c.outcome()
        }
        TheoremId::Feto2 => {
            if rho == 0 || g + 1 > 2 * rho {
                return Outcome::NotApplicable;
            }
            let mut c = Conditions::default();
            let u = p.u(rho);
            c.require(u + 2 * g > 4 * rho, || {
                format!(
                    "u_rho = {u} < 4rho - 2g + 1 = {}",
                    4 * rho as i64 - 2 * g as i64 + 1
                )
            });
            c.outcome()
        }
        TheoremId::DesOdd1 => {
            if rho == 0 {
                return Outcome::NotApplicable;
            }
            let u = p.u(rho) as i64;
            let bound = (2 * g as i64 - 4 * rho as i64 + 1).max(3);
            let mut c = Conditions::default();
            c.require(u >= bound, || format!("u_rho = {u} < {bound}"));
            c.outcome()
        }
        TheoremId::EvenBounds => check_even_bounds(p),
        TheoremId::BoundsIv => {
            if rho == 0 {
                return Outcome::NotApplicable;
            }
            let mut c = Conditions::default();
            for j in 1..=rho {
                let u = p.u(j) as i64;
                let (lo, hi) = (
                    2 * g as i64 - 4 * j as i64 + 1,
                    2 * g as i64 - 2 * j as i64 + 1,
                );
                c.require(lo <= u && u <= hi, || {
                    format!("u_{j} = {u} outside [{lo}, {hi}]")
                });
            }
            c.outcome()
        }
        TheoremId::WeightDual => {
            let a = weight_from_gaps(p.gaps());
            let b = weight_from_nongap_sum(g, p.nongap_sum());
            let mut c = Conditions::default();
            c.require(a == b, || {
                format!("gap-sum weight {a} != non-gap weight {b}")
            });
            c.outcome()
        }
        TheoremId::BoWeight => check_bo_weight(h, p),
        TheoremId::ClosedFormWeight => check_closed_form_weight(h, p),
        TheoremId::OptWeight => {
            let cap = match opt_weight_cap(g) {
                Ok(c) => c,
                Err(_) => return Outcome::NotApplicable,
            };
            if rho as i64 <= cap.threshold {
                return Outcome::NotApplicable;
            }
            let w = match weight(p) {
                Ok(r) => r.w,
                Err(e) => return from_error(e),
            };
            let extremal = h.min_generators() == opt_weight_extremal(g).as_slice();
            let mut c = Conditions::default();
            c.require(w <= cap.cap, || {
                format!(
                    "w = {w} > cap {} (rho = {rho} > c = {})",
                    cap.cap, cap.threshold
                )
            });
            c.require((w == cap.cap) == extremal, || {
                format!("w = {w}, cap {}, extremal = {extremal}", cap.cap)
            });
            c.outcome()
        }
        TheoremId::Oliv => {
            if rho == 0 || g < 11 {
                return Outcome::NotApplicable;
            }
            let cap = oliv_cap(g, rho).expect("g >= 11 and rho >= 1");
            let w = match weight(p) {
                Ok(r) => r.w,
                Err(e) => return from_error(e),
            };
            let mut c = Conditions::default();
            c.require(w <= cap, || {
                format!("w = {w} > aggregate cap {cap} (rho = {rho})")
            });
            c.outcome()
        }
        TheoremId::Jenkins => {
            let gens = h.min_generators();
            let mut c = Conditions::default();
            for (x, &a) in gens.iter().enumerate() {
                for &b in &gens[x + 1..] {
                    if num_integer::gcd(a, b) == 1 {
                        c.require(2 * g <= (a - 1) * (b - 1), || {
                            format!("2g = {} > ({a}-1)({b}-1)", 2 * g)
                        });
                    }
                }
            }
            c.outcome()
        }
        TheoremId::Castelnuovo => {
            for i in 1..=g + 1 {
                if p.d(i) != 1 {
                    continue;
                }
                if let Err(e) = castelnuovo_check(p, i) {
                    return from_error(e);
                }
            }
            Outcome::Holds
        }
        TheoremId::Freiman => match freiman_sweep(p, g + 1) {
            Ok(0) => Outcome::NotApplicable,
            Ok(_) => Outcome::Holds,
            Err(e) => from_error(e),
        },
        TheoremId::ResidueSumset => {
            if g < 4 {
                return Outcome::NotApplicable;
            }
            for i in 2..=g - 2 {
                if let Err(e) = residue_sumset_bound(p, i) {
                    return from_error(e);
                }
            }
            Outcome::Holds
        }
    }
}

fn check_nongap_growth(p: &StructureProfile) -> Outcome {
    let g = p.genus();
    let mut c = Conditions::default();
    if p.m(1) == 2 {
        for i in 1..=g {
            c.require(p.m(i) == 2 * i, || {
                format!("m_{i} = {} != {}", p.m(i), 2 * i)
            });
        }
    } else {
        for i in 1..=g.saturating_sub(2) {
            c.require(p.m(i) > 2 * i, || {
                format!("m_{i} = {} < {}", p.m(i), 2 * i + 1)
            });
        }
        if g >= 2 {
            c.require(p.m(g - 1) + 2 >= 2 * g, || {
                format!("m_(g-1) = {} < 2g - 2", p.m(g - 1))
            });
        }
    }
    c.require(p.m(g) == 2 * g, || format!("m_g = {} != 2g", p.m(g)));
    c.outcome()
}

fn check_even_structure(p: &StructureProfile) -> Outcome {
    let (g, rho) = (p.genus(), p.rho());
    let mut c = Conditions::default();
    let stray = p.gaps().iter().find(|&&l| l % 2 == 0 && l >= 4 * rho);
    c.require(stray.is_none(), || {
        format!("even gap {} at or above 4rho = {}", stray.unwrap(), 4 * rho)
    });
    if rho >= 1 {
        c.require(p.f(rho) == 4 * rho, || {
            format!("f_rho = {} != 4rho", p.f(rho))
        });
    }
    c.require(p.f(g - rho) == 2 * g, || {
        format!("f_(g-rho) = {} != 2g", p.f(g - rho))
    });
    if g >= 4 * rho {
        for i in 1..=rho {
            c.require(p.m(i) == p.f(i), || {
                format!("m_{i} = {} != f_{i} = {}", p.m(i), p.f(i))
            });
        }
    }
    c.outcome()
}

fn check_gamma_uniqueness(p: &StructureProfile) -> Outcome {
    let (g, rho) = (p.genus(), p.rho());
    let mut c = Conditions::default();
    let hyper: Vec<u64> = (0..=g).filter(|&t| is_gamma_hyperelliptic(p, t)).collect();
    c.require(hyper.iter().all(|&t| t == rho), || {
        format!("gamma-hyperelliptic for {hyper:?} but rho = {rho}")
    });
    c.require(hyper.len() <= 1, || format!("several gammas {hyper:?}"));
    c.require(is_gamma_hyperelliptic(p, 0) == (rho == 0), || {
        "hyperelliptic does not match rho = 0".into()
    });
    let e1e2: Vec<u64> = (0..=2 * g)
        .filter(|&t| e1_holds(p, t) && e2_prime_holds(p, t))
        .collect();
    c.require(e1e2 == [rho], || {
        format!("(E1)+(E2') hold for {e1e2:?}, expected exactly [{rho}]")
    });
    c.outcome()
}

fn check_even_bounds(p: &StructureProfile) -> Outcome {
    let (g, rho) = (p.genus(), p.rho());
    if rho == 0 {
        return Outcome::NotApplicable;
    }
    let mut c = Conditions::default();
    let f1 = p.f(1);
    if f1 == 4 {
        for i in 1..=rho {
            c.require(p.f(i) == 4 * i, || {
                format!("(i) f_{i} = {} != {}", p.f(i), 4 * i)
            });
        }
    }
    if f1 >= 6 {
        for i in 1..=rho.saturating_sub(2) {
            c.require(p.f(i) >= 4 * i + 2, || {
                format!("(ii) f_{i} = {} < {}", p.f(i), 4 * i + 2)
            });
        }
        if rho >= 2 {
            c.require(p.f(rho - 1) + 4 >= 4 * rho, || {
                format!("(ii) f_(rho-1) = {} < 4rho - 4", p.f(rho - 1))
            });
        }
        c.require(p.f(rho) == 4 * rho, || {
            format!("(ii) f_rho = {} != 4rho", p.f(rho))
        });
    }
    for i in 1..=g - rho + 1 {
        c.require(p.f(i) <= 2 * rho + 2 * i, || {
            format!("(iii) f_{i} = {} > 2rho + 2i = {}", p.f(i), 2 * rho + 2 * i)
        });
    }
    c.outcome()
}

fn check_bo_weight(h: &NumericalSemigroup, p: &StructureProfile) -> Outcome {
    let (g, rho) = (p.genus(), p.rho());
    if rho == 0 {
        return Outcome::NotApplicable;
    }
    let r = match weight(p) {
        Ok(r) => r,
        Err(e) => return from_error(e),
    };
    let mut c = Conditions::default();
    c.require(r.lower <= r.w, || format!("(i) w = {} < {}", r.w, r.lower));
    c.require(r.w <= r.upper, || {
        format!("(ii)/(iii) w = {} > {}", r.w, r.upper)
    });
    let lower_shape = p.f(1) == 2 * rho + 2 && p.u(rho) == 2 * g - 2 * rho + 1;
    c.require(r.hits_lower == lower_shape, || {
        format!(
            "(i) equality {} but f_1/u_rho shape {}",
            r.hits_lower, lower_shape
        )
    });
    if g >= 2 * rho {
        let is_family = [4, 4 * rho + 2, 2 * g - 4 * rho + 1]
            .iter()
            .all(|&x| h.contains(x))
            && NumericalSemigroup::from_generators(&[4, 4 * rho + 2, 2 * g - 4 * rho + 1])
                .is_ok_and(|f| &f == h);
        c.require(r.hits_upper == is_family, || {
            format!(
                "(ii) equality {} but family member {}",
                r.hits_upper, is_family
            )
        });
    }
    c.outcome()
}

fn check_closed_form_weight(h: &NumericalSemigroup, p: &StructureProfile) -> Outcome {
    let (g, rho) = (p.genus(), p.rho());
    let w = match weight(p) {
        Ok(r) => r.w,
        Err(e) => return from_error(e),
    };
    let mut c = Conditions::default();
    let mut applied = false;
    if rho >= 1 && p.f(1) == 4 {
        applied = true;
        c.require(g >= 2 * rho, || format!("f_1 = 4 but g = {g} < 2rho"));
        if g >= 2 * rho {
            let layouts: Vec<(i64, Vec<u64>)> = quartic_j_range(g, rho)
                .map(|j| (j, quartic_layout(g, rho, j).expect("j in range")))
                .collect();
            let hit = layouts
                .iter()
                .find(|(_, u)| u.as_slice() == p.odd_nongaps());
            match hit {
                Some(&(j, _)) => {
                    let fw = weight_formula_quartic(g, rho, j).expect("j in range");
                    c.require(fw == w, || format!("J = {j} formula {fw} != w = {w}"));
                }
                None => c.require(false, || {
                    format!("odd non-gaps {:?} match no J layout", p.odd_nongaps())
                }),
            }
            let base = crate::weights::binom2(g as i64 - 2 * rho as i64);
            let (r2, r) = ((rho * rho) as i64, rho as i64);
            c.require(base + r2 - r <= w && w <= base + 2 * r2, || {
                format!("w = {w} outside [{}, {}]", base + r2 - r, base + 2 * r2)
            });
            let min_family = [4, 4 * rho + 2, 2 * g - 2 * rho + 1, 2 * g - 2 * rho + 3];
            let is_min = NumericalSemigroup::from_generators(&min_family).is_ok_and(|f| &f == h);
            c.require((w == base + r2 - r) == is_min, || {
                format!(
                    "lower equality {} but family member {is_min}",
                    w == base + r2 - r
                )
            });
        }
    }
    if p.m(1) == 3 {
        applied = true;
        c.require(g + 1 >= 2 * rho && g <= 2 * rho + 1, || {
            format!("u_rho = 3 but g = {g} outside 2rho-1..=2rho+1")
        });
        let s_max = (g - g % 3) / 3;
        let values: Vec<i64> = (0..=s_max)
            .map(|s| weight_formula_triadic(g, s).expect("s in range"))
            .collect();
        c.require(values.contains(&w), || {
            format!("w = {w} not among {values:?}")
        });
        let cap = values[0];
        c.require(w <= cap, || format!("w = {w} > {cap}"));
        let extremal = if g % 3 == 2 {
            vec![3, g + 2, 2 * g + 1]
        } else {
            vec![3, g + 1]
        };
        c.require(
            (w == cap) == (h.min_generators() == extremal.as_slice()),
            || format!("equality at w = {w} does not match {extremal:?}"),
        );
    }
    if applied {
        c.outcome()
    } else {
        Outcome::NotApplicable
    }
}

#[derive(Default)]
struct Tally {
    per_genus: BTreeMap<u64, (u64, u64)>,
    counterexamples: Vec<Counterexample>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        for (g, (c, f)) in other.per_genus {
            let e = self.per_genus.entry(g).or_default();
            e.0 += c;
            e.1 += f;
        }
        self.counterexamples.extend(other.counterexamples);
        self
    }
}

/// Runs `id` over every semigroup with genus in `opts.genus`.
pub fn verify_theorem(id: TheoremId, opts: &VerifyOptions) -> TheoremReport {
    let gamma = opts.gamma;
    let lo = (*opts.genus.start()).max(1);
    let hi = *opts.genus.end();
    let active: Vec<u64> = (lo..=hi)
        .filter(|&g| opts.probe_outside || id.genus_in_hypothesis(gamma, g))
        .collect();

    let tally = match (active.first(), active.last()) {
        (Some(&a), Some(&b)) => map_reduce(
            a..=b,
            opts.execution,
            Tally::default,
            |h| {
                let g = h.genus();
                let mut t = Tally::default();
                if !active.contains(&g) {
                    return t;
                }
                let p = h.profile();
                match check(id, gamma, h, &p) {
                    Outcome::NotApplicable => {}
                    Outcome::Holds => {
                        t.per_genus.insert(g, (1, 0));
                    }
                    Outcome::Fails(detail) => {
                        t.per_genus.insert(g, (1, 1));
                        t.counterexamples.push(Counterexample {
                            genus: g,
                            generators: h.min_generators().to_vec(),
                            detail,
                        });
                    }
                }
                t
            },
            Tally::merge,
        ),
        _ => Tally::default(),
    };

    let mut counterexamples = tally.counterexamples;
    counterexamples.sort();
    let per_genus = (lo..=hi)
        .map(|g| {
            let (checked, failures) = tally.per_genus.get(&g).copied().unwrap_or((0, 0));
            GenusTally {
                genus: g,
                in_hypothesis: id.genus_in_hypothesis(gamma, g),
                checked,
                failures,
            }
        })
        .collect();
    TheoremReport {
        theorem_id: id,
        gamma: id.uses_gamma().then_some(gamma),
        genus_range: (*opts.genus.start(), hi),
        probe_outside: opts.probe_outside,
        checked: tally.per_genus.values().map(|v| v.0).sum(),
        status: if counterexamples.is_empty() {
            Status::Holds
        } else {
            Status::FailsWithWitnesses
        },
        counterexamples,
        per_genus,
        notes: id.notes().into_iter().map(String::from).collect(),
    }
}

/// Every statement evaluated once on one semigroup, γ-parameterized ones
/// for `γ ∈ gammas`. Returns the number of failing evaluations.
pub fn evaluate_all(h: &NumericalSemigroup, gammas: RangeInclusive<u64>) -> u64 {
    let p = h.profile();
    let mut failures = 0;
    for &id in TheoremId::ALL {
        let gs = if id.uses_gamma() {
            gammas.clone()
        } else {
            0..=0
        };
        for gamma in gs {
            if id.genus_in_hypothesis(gamma, p.genus())
                && matches!(check(id, gamma, h, &p), Outcome::Fails(_))
            {
                failures += 1;
            }
        }
    }
    failures
}
