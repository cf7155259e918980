//! Schur orthogonality as an exact verification: both relations on a
//! derived table, and a deliberately corrupted table showing how
//! violations are reported.

use chartab::classfun::{CharacterTable, ClassFunction};
use chartab::cyclotomic::CycNum;
use chartab::derivation::{self, GroupId};

fn main() {
    let outcome = derivation::derive_from_fixture_text(
        GroupId::G10,
        include_str!("../fixtures/g10.gens"),
    )
    .expect("derivation succeeds");
    let report = outcome.table.verify_orthogonality().unwrap();
    println!(
        "derived table: {} row violations, {} column violations",
        report.row_violations.len(),
        report.column_violations.len()
    );

    // Flip one sign and watch both relations fail.
    let mut rows = outcome.table.rows.clone();
    let mut values = rows[2].values().to_vec();
    assert!(!values[1].is_zero());
    values[1] = values[1].mul(&CycNum::from_integer(-1));
    rows[2] = ClassFunction::new(outcome.frame.clone(), values);
    let corrupted = CharacterTable::new(
        outcome.frame.clone(),
        rows,
        outcome.table.row_labels.clone(),
    );
    let report = corrupted.verify_orthogonality().unwrap();
    println!(
        "after flipping one sign: {} row violations, {} column violations",
        report.row_violations.len(),
        report.column_violations.len()
    );
    for v in report.row_violations.iter().take(3) {
        println!(
            "  rows {} and {}: inner product {} (expected {})",
            v.first, v.second, v.got, v.expected
        );
    }
}
