//! Named semigroup families that attain or witness the sharpness of the
//! bounds. Constructing a member also checks the statistics the family is
//! known for; a mismatch is an invariant fault.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{arg, Error, Result};
use crate::profile::StructureProfile;
use crate::semigroup::NumericalSemigroup;
use crate::weights::{binom2, weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum FamilySpec {
    /// `⟨4, I⟩` with `I = 4γ + 3` (γ odd) or `4γ + 5` (γ even).
    QuarticSharp { gamma: u64 },
    /// `⟨3, g + 1⟩`, `g ≢ 2 (mod 3)`.
    Triadic { genus: u64 },
    /// `⟨3, g + 2, 2g + 1⟩`, `g ≡ 2 (mod 3)`.
    TriadicR2 { genus: u64 },
    /// `⟨4, 4ρ + 2, 2g − 4ρ + 1⟩`, the maximum weight for `g ≥ 2ρ`.
    MaxWeight { genus: u64, rho: u64 },
    /// `⟨4, 4ρ + 2, 2g − 2ρ + 1, 2g − 2ρ + 3⟩`, minimum weight with `f_1 = 4`.
    MinWeightF4 { genus: u64, rho: u64 },
    /// `⟨2, 2g + 1⟩`.
    Hyperelliptic { genus: u64 },
    /// `MaxWeight` with `ρ = γ + 1`, for `γ ≥ 7` and
    /// `max{4γ + 4, (γ² + 6γ − 3)/2} < g ≤ γ² + 4γ + 2`.
    SharpWeightQuartic { gamma: u64, genus: u64 },
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::QuarticSharp { .. } => "quartic_sharp",
            FamilySpec::Triadic { .. } => "triadic",
            FamilySpec::TriadicR2 { .. } => "triadic_r2",
            FamilySpec::MaxWeight { .. } => "max_weight",
            FamilySpec::MinWeightF4 { .. } => "min_weight_f4",
            FamilySpec::Hyperelliptic { .. } => "hyperelliptic",
            FamilySpec::SharpWeightQuartic { .. } => "sharp_weight_quartic",
        }
    }

    /// Builds a spec from a family name and an integer parameter map with
    /// keys among `gamma`, `genus`, `rho`.
    pub fn from_params(name: &str, params: &BTreeMap<String, u64>) -> Result<Self> {
        let get = |key: &str| {
            params
                .get(key)
                .copied()
                .ok_or_else(|| Error::Argument(format!("family `{name}` needs `{key}`")))
        };
        Ok(match name {
            "quartic_sharp" => FamilySpec::QuarticSharp {
                gamma: get("gamma")?,
            },
            "triadic" => FamilySpec::Triadic {
                genus: get("genus")?,
            },
            "triadic_r2" => FamilySpec::TriadicR2 {
                genus: get("genus")?,
            },
            "max_weight" => FamilySpec::MaxWeight {
                genus: get("genus")?,
                rho: get("rho")?,
            },
            "min_weight_f4" => FamilySpec::MinWeightF4 {
                genus: get("genus")?,
                rho: get("rho")?,
            },
            "hyperelliptic" => FamilySpec::Hyperelliptic {
                genus: get("genus")?,
            },
            "sharp_weight_quartic" => FamilySpec::SharpWeightQuartic {
                gamma: get("gamma")?,
                genus: get("genus")?,
            },
            other => return arg(format!("unknown family `{other}`")),
        })
    }

    pub fn generators(&self) -> Result<Vec<u64>> {
        Ok(match *self {
            FamilySpec::QuarticSharp { gamma } => {
                let i = if gamma % 2 == 1 {
                    4 * gamma + 3
                } else {
                    4 * gamma + 5
                };
                vec![4, i]
            }
            FamilySpec::Triadic { genus } => {
                if genus % 3 == 2 {
                    return arg("triadic needs g ≢ 2 (mod 3)");
                }
                vec![3, genus + 1]
            }
            FamilySpec::TriadicR2 { genus } => {
                if genus % 3 != 2 {
                    return arg("triadic_r2 needs g ≡ 2 (mod 3)");
                }
                vec![3, genus + 2, 2 * genus + 1]
            }
            FamilySpec::MaxWeight { genus, rho } => {
                if rho == 0 || genus < 2 * rho {
                    return arg("max_weight needs rho >= 1 and g >= 2 rho");
                }
                vec![4, 4 * rho + 2, 2 * genus - 4 * rho + 1]
            }
            FamilySpec::MinWeightF4 { genus, rho } => {
                if rho == 0 || genus < 2 * rho {
                    return arg("min_weight_f4 needs rho >= 1 and g >= 2 rho");
                }
                vec![
                    4,
                    4 * rho + 2,
                    2 * genus - 2 * rho + 1,
                    2 * genus - 2 * rho + 3,
                ]
            }
            FamilySpec::Hyperelliptic { genus } => vec![2, 2 * genus + 1],
            FamilySpec::SharpWeightQuartic { gamma, genus } => {
                if gamma < 7 {
                    return arg("sharp_weight_quartic needs gamma >= 7");
                }
                let floor = (4 * gamma + 4).max((gamma * gamma + 6 * gamma - 3) / 2);
                if genus <= floor || genus > gamma * gamma + 4 * gamma + 2 {
                    return arg(format!(
                        "sharp_weight_quartic needs {floor} < g <= {}",
                        gamma * gamma + 4 * gamma + 2
                    ));
                }
                let rho = gamma + 1;
                vec![4, 4 * rho + 2, 2 * genus - 4 * rho + 1]
            }
        })
    }

    /// Predicted genus, ρ and weight; `None` where the family does not pin
    /// the value down.
    fn predictions(&self) -> (Option<u64>, Option<u64>, Option<i64>) {
        let sg = |g: u64| g as i64;
        match *self {
            FamilySpec::QuarticSharp { gamma } => {
                if gamma % 2 == 1 {
                    (Some(6 * gamma + 3), Some(2 * gamma + 1), None)
                } else {
                    (Some(6 * gamma + 6), Some(2 * gamma + 2), None)
                }
            }
            FamilySpec::Triadic { genus } => {
                (Some(genus), None, Some(sg(genus) * (sg(genus) - 1) / 3))
            }
            FamilySpec::TriadicR2 { genus } => {
                (Some(genus), None, Some(sg(genus) * (sg(genus) - 2) / 3))
            }
            FamilySpec::MaxWeight { genus, rho } => {
                let r = rho as i64;
                (
                    Some(genus),
                    Some(rho),
                    Some(binom2(sg(genus) - 2 * r) + 2 * r * r),
                )
            }
            FamilySpec::MinWeightF4 { genus, rho } => {
                let r = rho as i64;
                (
                    Some(genus),
                    Some(rho),
                    Some(binom2(sg(genus) - 2 * r) + r * r - r),
                )
            }
            FamilySpec::Hyperelliptic { genus } => (Some(genus), Some(0), Some(binom2(sg(genus)))),
            FamilySpec::SharpWeightQuartic { gamma, genus } => {
                let r = gamma as i64 + 1;
                (
                    Some(genus),
                    Some(gamma + 1),
                    Some(binom2(sg(genus) - 2 * r) + 2 * r * r),
                )
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::QuarticSharp { gamma } => write!(f, "quartic_sharp(gamma={gamma})"),
            FamilySpec::Triadic { genus } => write!(f, "triadic(genus={genus})"),
            FamilySpec::TriadicR2 { genus } => write!(f, "triadic_r2(genus={genus})"),
            FamilySpec::MaxWeight { genus, rho } => {
                write!(f, "max_weight(genus={genus}, rho={rho})")
            }
            FamilySpec::MinWeightF4 { genus, rho } => {
                write!(f, "min_weight_f4(genus={genus}, rho={rho})")
            }
            FamilySpec::Hyperelliptic { genus } => write!(f, "hyperelliptic(genus={genus})"),
            FamilySpec::SharpWeightQuartic { gamma, genus } => {
                write!(f, "sharp_weight_quartic(gamma={gamma}, genus={genus})")
            }
        }
    }
}

/// Builds the family member and checks its predicted statistics.
///
/// Parameters for which the generators collapse to a semigroup of a
/// different genus or ρ (e.g. `max_weight` at g = 5, ρ = 2) are rejected as
/// outside the family range; a wrong weight for a correctly shaped member
/// is an invariant fault.
pub fn family(spec: FamilySpec) -> Result<NumericalSemigroup> {
    let gens = spec.generators()?;
    let h = NumericalSemigroup::from_generators(&gens)?;
    let p = StructureProfile::new(&h);
    let (genus, rho, w) = spec.predictions();
    if genus.is_some_and(|g| g != p.genus()) || rho.is_some_and(|r| r != p.rho()) {
        return arg(format!(
            "{spec} has no member: {h} has genus {} and rho {}",
            p.genus(),
            p.rho()
        ));
    }
    if let Some(expected) = w {
        let got = weight(&p)?.w;
        if got != expected {
            return Err(Error::InvariantViolation(format!(
                "{spec}: {h} has weight {got}, expected {expected}"
            )));
        }
    }
    if let FamilySpec::QuarticSharp { gamma } = spec {
        let (idx, val) = if gamma % 2 == 1 {
            (2 * gamma + 1, 6 * gamma + 2)
        } else {
            (2 * gamma + 2, 6 * gamma + 5)
        };
        if p.m(idx) != val {
            return Err(Error::InvariantViolation(format!(
                "{spec}: m_{idx} = {}, expected {val}",
                p.m(idx)
            )));
        }
    }
    Ok(h)
}
