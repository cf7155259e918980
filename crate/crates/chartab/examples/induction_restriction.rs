//! Induction and restriction along the point-stabilizer chain, with a
//! Frobenius reciprocity spot check computed from both sides.

use chartab::derivation::{self, GroupId};
use chartab::indres::{induce, restrict};

fn main() {
    let outcome = derivation::derive_from_fixture_text(
        GroupId::G12,
        include_str!("../fixtures/g12.gens"),
    )
    .expect("derivation succeeds");
    let child = outcome.chain.as_deref().expect("stabilizer outcome");
    let fusion = outcome
        .group
        .fusion_from(&child.group)
        .expect("fusion well defined");
    println!(
        "class fusion of the 11-point stabilizer into the 12-point group: {fusion:?}"
    );

    // Induce the trivial character: the permutation character plus one.
    let trivial = &child.table.rows[0];
    let induced = induce(trivial, &fusion, &outcome.frame).unwrap();
    println!(
        "trivial character induced: degree {} values {:?}",
        induced.degree(),
        induced
            .values()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );

    // Frobenius reciprocity: <chi induced, phi> = <chi, phi restricted>
    // for every pair of irreducible rows.
    let mut checked = 0;
    for chi in &child.table.rows {
        for phi in &outcome.table.rows {
            let lhs = induce(chi, &fusion, &outcome.frame)
                .unwrap()
                .inner_product(phi)
                .unwrap();
            let rhs = chi
                .inner_product(&restrict(phi, &fusion, &child.frame).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
            checked += 1;
        }
    }
    println!("Frobenius reciprocity verified exactly on {checked} pairs");
}
