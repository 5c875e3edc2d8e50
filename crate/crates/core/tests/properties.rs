use nsg_core::inspect::InspectRecord;
use nsg_core::weights::{weight_from_gaps, weight_from_nongap_sum};
use nsg_core::{NumericalSemigroup, StructureProfile};
use proptest::prelude::*;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn generator_lists() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(2u64..40, 2..6)
        .prop_filter("coprime", |v| v.iter().fold(0, |d, &x| gcd(d, x)) == 1)
}

/// Membership by dynamic programming over small sums.
fn naive_members(gens: &[u64], limit: u64) -> Vec<bool> {
    let mut member = vec![false; limit as usize + 1];
    member[0] = true;
    for n in 1..=limit as usize {
        member[n] = gens
            .iter()
            .any(|&a| n >= a as usize && member[n - a as usize]);
    }
    member
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn gaps_match_dynamic_programming(gens in generator_lists()) {
        let h = NumericalSemigroup::from_generators(&gens).unwrap();
        let limit = h.conductor() + 2 * gens.iter().max().unwrap();
        let member = naive_members(&gens, limit);
        let gaps: Vec<u64> = (1..=limit).filter(|&n| !member[n as usize]).collect();
        prop_assert_eq!(h.gaps(), gaps.as_slice());
        prop_assert_eq!(h.frobenius(), gaps.last().copied());
    }

    #[test]
    fn minimal_generators_regenerate(gens in generator_lists()) {
        let h = NumericalSemigroup::from_generators(&gens).unwrap();
        let again = NumericalSemigroup::from_generators(h.min_generators()).unwrap();
        prop_assert_eq!(&again, &h);
        for (i, &x) in h.min_generators().iter().enumerate() {
            let mut rest = h.min_generators().to_vec();
            rest.remove(i);
            let member = naive_members(&rest, x);
            prop_assert!(!member[x as usize], "{} is redundant in {}", x, h);
        }
        prop_assert_eq!(NumericalSemigroup::from_gaps(h.gaps()).unwrap(), h);
    }

    #[test]
    fn structural_invariants(gens in generator_lists()) {
        let h = NumericalSemigroup::from_generators(&gens).unwrap();
        let p = StructureProfile::new(&h);
        let g = p.genus();
        prop_assume!(g >= 1);
        prop_assert_eq!(p.m(g), 2 * g);
        prop_assert!(2 * g >= 3 * p.rho());
        prop_assert_eq!(p.f(g - p.rho()), 2 * g);
        prop_assert_eq!(p.d(g + 1), 1);
        prop_assert_eq!(p.conductor(), h.frobenius().unwrap() + 1);
        prop_assert_eq!(weight_from_gaps(p.gaps()), weight_from_nongap_sum(g, p.nongap_sum()));
        prop_assert_eq!(h.nongap(g + 7).unwrap(), 2 * g + 7);
    }

    #[test]
    fn tree_parent_inverts_child(gens in generator_lists()) {
        let h = NumericalSemigroup::from_generators(&gens).unwrap();
        for &x in h.effective_generators() {
            let child = h.remove_generator(x).unwrap();
            prop_assert_eq!(child.genus(), h.genus() + 1);
            prop_assert_eq!(child.frobenius(), Some(x));
            prop_assert_eq!(child.parent().unwrap(), h.clone());
        }
    }

    #[test]
    fn serialization_round_trips(gens in generator_lists()) {
        let h = NumericalSemigroup::from_generators(&gens).unwrap();
        let json = serde_json::to_string(&h).unwrap();
        prop_assert_eq!(serde_json::from_str::<NumericalSemigroup>(&json).unwrap(), h.clone());
        let rec = InspectRecord::new(&h).unwrap();
        let json = serde_json::to_string(&rec).unwrap();
        prop_assert_eq!(serde_json::from_str::<InspectRecord>(&json).unwrap(), rec);
    }
}

#[test]
fn rejects_bad_generator_lists() {
    assert!(NumericalSemigroup::from_generators(&[]).is_err());
    assert!(NumericalSemigroup::from_generators(&[0, 3]).is_err());
    let err = NumericalSemigroup::from_generators(&[4, 6]).unwrap_err();
    assert!(err.to_string().contains("complement is infinite"));
    assert!(NumericalSemigroup::from_gaps(&[2]).is_none());
    assert!(NumericalSemigroup::from_gaps(&[1, 2, 4, 8]).is_none());
}
