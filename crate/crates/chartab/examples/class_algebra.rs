//! Class multiplication coefficients and the central-character check: an
//! independent verification of a derived table against the group itself.

use chartab::classfun::central_check_pairs;
use chartab::derivation::{self, GroupId};

fn main() {
    let outcome = derivation::derive_from_fixture_text(
        GroupId::G10,
        include_str!("../fixtures/g10.gens"),
    )
    .expect("derivation succeeds");
    let g = &outcome.group;

    // A few structure constants of the class algebra.
    let labels: Vec<&str> = g.classes().iter().map(|c| c.label.as_str()).collect();
    println!("some class multiplication coefficients of {}:", outcome.frame.name);
    for (j, k, l) in [(1usize, 1usize, 0usize), (1, 2, 2), (3, 3, 0), (6, 7, 0)] {
        println!(
            "  a({}, {}; {}) = {}",
            labels[j],
            labels[k],
            labels[l],
            g.class_mult_coeff(j, k, l)
        );
    }

    // Central characters w(c) = |c| chi(c) / chi(1) are algebraic integers
    // and multiplicative over the class algebra.
    let pairs = central_check_pairs(outcome.frame.len(), g.order(), 20);
    let report = outcome
        .table
        .central_character_check(g, &pairs)
        .expect("check runs");
    println!(
        "central character check on {} pairs: integrality violations {}, product violations {}",
        report.pairs_checked.len(),
        report.integrality_violations.len(),
        report.product_violations.len()
    );
}
