//! Property-based invariants for the exact arithmetic layer, plus a
//! shared-across-threads usage check.

use std::sync::Arc;

use proptest::prelude::*;

use chartab::cyclotomic::{CycNum, Rational};
use chartab::derivation::{self, GroupId};

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn arb_cyc() -> impl Strategy<Value = CycNum> {
    let conductor = prop::sample::select(vec![1u64, 3, 4, 5, 7, 8, 9, 11, 12]);
    (conductor, prop::collection::vec((0i64..12, arb_rational()), 0..4)).prop_map(|(n, terms)| {
        let terms: Vec<(i64, Rational)> = terms;
        CycNum::make(n, &terms).expect("positive conductor")
    })
}

proptest! {
    #[test]
    fn canonical_form_is_stable(x in arb_cyc()) {
        let terms: Vec<(i64, Rational)> = x
            .coeffs()
            .iter()
            .enumerate()
            .map(|(e, c)| (e as i64, c.clone()))
            .collect();
        let rebuilt = CycNum::make(x.conductor(), &terms).unwrap();
        prop_assert_eq!(rebuilt, x);
    }

    #[test]
    fn conjugation_is_an_involution_and_automorphism(x in arb_cyc(), y in arb_cyc()) {
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!(x.add(&y).conj(), x.conj().add(&y.conj()));
        prop_assert_eq!(x.mul(&y).conj(), x.conj().mul(&y.conj()));
    }

    #[test]
    fn addition_and_multiplication_commute_and_distribute(
        x in arb_cyc(), y in arb_cyc(), z in arb_cyc()
    ) {
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
    }

    #[test]
    fn literals_round_trip(x in arb_cyc()) {
        let text = x.to_string();
        let back: CycNum = text.parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn subtraction_inverts_addition(x in arb_cyc(), y in arb_cyc()) {
        prop_assert_eq!(x.add(&y).sub(&y), x.clone());
    }
}

#[test]
fn values_and_tables_are_shareable_across_threads() {
    let outcome = Arc::new(
        derivation::derive_from_fixture_text(GroupId::G9, include_str!("../fixtures/g9.gens"))
            .expect("derivation succeeds"),
    );
    let handles: Vec<_> = (0..4)
        .map(|i| {
            let out = Arc::clone(&outcome);
            std::thread::spawn(move || {
                let a = &out.table.rows[i % out.table.rows.len()];
                let b = &out.table.rows[(i + 1) % out.table.rows.len()];
                a.inner_product(b).unwrap().to_string()
            })
        })
        .collect();
    let results: Vec<String> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    assert_eq!(results, vec!["0", "0", "0", "0"]);
}
