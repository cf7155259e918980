//! Derive the character table of one of the four groups and print the
//! table, the step log, and the divergences detected against the bundled
//! reference tables.
//!
//! Usage: cargo run --example derive_table [g9|g10|g11|g12]

use chartab::derivation::{self, export, GroupId};

fn fixture(id: GroupId) -> &'static str {
    match id {
        GroupId::G9 => include_str!("../fixtures/g9.gens"),
        GroupId::G10 => include_str!("../fixtures/g10.gens"),
        GroupId::G11 => include_str!("../fixtures/g11.gens"),
        GroupId::G12 => include_str!("../fixtures/g12.gens"),
    }
}

fn main() {
    let choice = std::env::args().nth(1).unwrap_or_else(|| "g12".into());
    let id = GroupId::parse(&choice).expect("expected g9, g10, g11 or g12");
    let started = std::time::Instant::now();
    let mut outcome =
        derivation::derive_from_fixture_text(id, fixture(id)).expect("derivation succeeds");
    let cmp = derivation::compare_with_golden(&mut outcome).expect("comparison runs");
    println!("{}", export::table_to_text(&outcome.table));
    println!("{}", outcome.log.render_text());
    println!(
        "golden table matched: {} ({} documented errata detected, {} divergences logged)",
        cmp.matched,
        cmp.detected_errata.len(),
        outcome.log.divergences.len()
    );
    println!("elapsed: {:?}", started.elapsed());
}
