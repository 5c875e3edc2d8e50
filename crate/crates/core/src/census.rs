//! Per-genus aggregate statistics over the semigroup tree.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::{map_reduce, Execution};
use crate::hyperelliptic::gamma_hyperelliptic;
use crate::profile::StructureProfile;
use crate::semigroup::NumericalSemigroup;
use crate::weights::weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CensusFilter {
    Rho(u64),
    GammaHyperelliptic(u64),
    /// Smallest even non-gap.
    F1(u64),
    /// Multiplicity.
    M1(u64),
}

impl CensusFilter {
    pub fn accepts(&self, p: &StructureProfile) -> bool {
        match *self {
            CensusFilter::Rho(r) => p.rho() == r,
            CensusFilter::GammaHyperelliptic(g) => gamma_hyperelliptic(p) == Some(g),
            CensusFilter::F1(f) => p.f(1) == f,
            CensusFilter::M1(m) => p.m(1) == m,
        }
    }
}

impl FromStr for CensusFilter {
    type Err = Error;

    /// `rho=K`, `gamma-hyperelliptic=G`, `f1=F` or `m1=M`.
    fn from_str(s: &str) -> Result<Self> {
        let (key, value) = s
            .split_once('=')
            .ok_or_else(|| Error::Argument(format!("filter `{s}` is not key=value")))?;
        let value: u64 = value
            .trim()
            .parse()
            .map_err(|_| Error::Argument(format!("filter value in `{s}` is not an integer")))?;
        match key.trim() {
            "rho" => Ok(CensusFilter::Rho(value)),
            "gamma-hyperelliptic" | "gamma" => Ok(CensusFilter::GammaHyperelliptic(value)),
            "f1" => Ok(CensusFilter::F1(value)),
            "m1" => Ok(CensusFilter::M1(value)),
            other => Err(Error::Argument(format!("unknown filter key `{other}`"))),
        }
    }
}

impl fmt::Display for CensusFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusFilter::Rho(v) => write!(f, "rho={v}"),
            CensusFilter::GammaHyperelliptic(v) => write!(f, "gamma-hyperelliptic={v}"),
            CensusFilter::F1(v) => write!(f, "f1={v}"),
            CensusFilter::M1(v) => write!(f, "m1={v}"),
        }
    }
}

/// Weight together with the lexicographically smallest generator list
/// attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightWitness {
    pub weight: i64,
    pub generators: Vec<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub genus: u64,
    pub count: u64,
    pub rho_histogram: BTreeMap<u64, u64>,
    /// γ → number of γ-hyperelliptic semigroups.
    pub gamma_counts: BTreeMap<u64, u64>,
    pub weight_histogram: BTreeMap<i64, u64>,
    pub min_weight: Option<WeightWitness>,
    pub max_weight: Option<WeightWitness>,
}

impl CensusRow {
    fn single(h: &NumericalSemigroup, p: &StructureProfile) -> Self {
        let w = weight(p).expect("weight formulas agree").w;
        let witness = WeightWitness {
            weight: w,
            generators: h.min_generators().to_vec(),
        };
        let mut row = CensusRow {
            genus: p.genus(),
            count: 1,
            min_weight: Some(witness.clone()),
            max_weight: Some(witness),
            ..Default::default()
        };
        row.rho_histogram.insert(p.rho(), 1);
        if let Some(g) = gamma_hyperelliptic(p) {
            row.gamma_counts.insert(g, 1);
        }
        row.weight_histogram.insert(w, 1);
        row
    }

    fn merge(mut self, other: CensusRow) -> CensusRow {
        self.count += other.count;
        for (k, v) in other.rho_histogram {
            *self.rho_histogram.entry(k).or_default() += v;
        }
        for (k, v) in other.gamma_counts {
            *self.gamma_counts.entry(k).or_default() += v;
        }
        for (k, v) in other.weight_histogram {
            *self.weight_histogram.entry(k).or_default() += v;
        }
        self.min_weight = pick(self.min_weight, other.min_weight, |a, b| {
            (a.weight, &a.generators) <= (b.weight, &b.generators)
        });
        self.max_weight = pick(self.max_weight, other.max_weight, |a, b| {
            a.weight > b.weight || (a.weight == b.weight && a.generators <= b.generators)
        });
        self
    }
}

fn pick(
    a: Option<WeightWitness>,
    b: Option<WeightWitness>,
    first_wins: impl Fn(&WeightWitness, &WeightWitness) -> bool,
) -> Option<WeightWitness> {
    match (a, b) {
        (Some(a), Some(b)) => Some(if first_wins(&a, &b) { a } else { b }),
        (a, b) => a.or(b),
    }
}

/// One row per genus `0..=max_genus`, keeping only semigroups accepted by
/// every filter.
pub fn census(max_genus: u64, filters: &[CensusFilter], execution: Execution) -> Vec<CensusRow> {
    let merged: BTreeMap<u64, CensusRow> = map_reduce(
        0..=max_genus,
        execution,
        BTreeMap::new,
        |h| {
            let p = h.profile();
            let mut m = BTreeMap::new();
            if filters.iter().all(|f| f.accepts(&p)) {
                m.insert(p.genus(), CensusRow::single(h, &p));
            }
            m
        },
        |mut a, b| {
            for (g, row) in b {
                let merged = match a.remove(&g) {
                    Some(existing) => existing.merge(row),
                    None => row,
                };
                a.insert(g, merged);
            }
            a
        },
    );
    (0..=max_genus)
        .map(|g| {
            merged.get(&g).cloned().unwrap_or(CensusRow {
                genus: g,
                ..Default::default()
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_up_to_four() {
        let rows = census(4, &[], Execution::Sequential);
        let counts: Vec<u64> = rows.iter().map(|r| r.count).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 7]);
    }

    #[test]
    fn quartic_weights_at_ten() {
        let rows = census(
            10,
            &[CensusFilter::Rho(2), CensusFilter::F1(4)],
            Execution::Auto,
        );
        let weights: Vec<i64> = rows[10].weight_histogram.keys().copied().collect();
        assert_eq!(weights, vec![17, 19, 23]);
        assert_eq!(
            rows[10].max_weight.as_ref().unwrap().generators,
            vec![4, 10, 13]
        );
        assert_eq!(
            rows[10].min_weight.as_ref().unwrap().generators,
            vec![4, 10, 17, 19]
        );
    }

    #[test]
    fn hyperelliptic_filter() {
        let rows = census(10, &["rho=0".parse().unwrap()], Execution::Sequential);
        assert!(rows.iter().all(|r| r.count == 1));
        assert_eq!(
            rows[10].max_weight.as_ref().unwrap().generators,
            vec![2, 21]
        );
    }

    #[test]
    fn filter_parsing() {
        assert_eq!(
            "gamma-hyperelliptic=1".parse::<CensusFilter>().unwrap(),
            CensusFilter::GammaHyperelliptic(1)
        );
        assert!("rho".parse::<CensusFilter>().is_err());
        assert!("rho=x".parse::<CensusFilter>().is_err());
        assert!("weight=3".parse::<CensusFilter>().is_err());
        assert_eq!(CensusFilter::F1(4).to_string(), "f1=4");
    }

    #[test]
    fn modes_agree() {
        assert_eq!(
            census(9, &[], Execution::Sequential),
            census(9, &[], Execution::Parallel { threads: Some(2) })
        );
    }
}
