//! Structural corollaries read off the finished character tables: the
//! kernels of all irreducibles, the unique index-2 normal subgroup of the
//! ten-point group, and simplicity of the groups on 11 and 12 points.

use chartab::derivation::{self, structure_report, GroupId};

fn main() {
    let fixtures: [(GroupId, &str); 4] = [
        (GroupId::G9, include_str!("../fixtures/g9.gens")),
        (GroupId::G10, include_str!("../fixtures/g10.gens")),
        (GroupId::G11, include_str!("../fixtures/g11.gens")),
        (GroupId::G12, include_str!("../fixtures/g12.gens")),
    ];
    for (id, text) in fixtures {
        let outcome =
            derivation::derive_from_fixture_text(id, text).expect("derivation succeeds");
        let report = structure_report(&outcome.table);
        println!("{} (order {}): {}", report.group, report.order, report.verdict);
        for k in &report.kernels {
            if k.kernel_order > 1 {
                println!(
                    "  kernel of {} (degree {}): classes {:?}, order {}",
                    k.row, k.degree, k.kernel_classes, k.kernel_order
                );
            }
        }
        println!();
    }
}
