//! Enumerate each group from its generator fixture, verify sharp
//! transitivity, and print the conjugacy class data that the bundled
//! class tables record.

use chartab::derivation::{compare_classes, load_classes, GroupId};
use chartab::permgroup::{parse_fixture, GroupData, DEFAULT_CLOSURE_CAP};

fn main() {
    let fixtures: [(GroupId, &str); 4] = [
        (GroupId::G9, include_str!("../fixtures/g9.gens")),
        (GroupId::G10, include_str!("../fixtures/g10.gens")),
        (GroupId::G11, include_str!("../fixtures/g11.gens")),
        (GroupId::G12, include_str!("../fixtures/g12.gens")),
    ];
    for (id, text) in fixtures {
        let (_, gens) = parse_fixture(text).expect("fixture parses");
        let g = GroupData::closure(&gens, DEFAULT_CLOSURE_CAP).expect("closure fits");
        let k = id.transitivity();
        let rep = g.verify_sharp_transitivity(k);
        println!(
            "{}: order {}, sharply {k}-transitive: {}",
            id.name(),
            g.order(),
            rep.ok
        );
        for c in g.classes() {
            println!(
                "  {:<12} size {:>6} element order {:>2} real {}",
                c.label, c.size, c.element_order, c.real
            );
        }
        let cmp = compare_classes(&g, &load_classes(id));
        println!("  matches the recorded class table: {}\n", cmp.matched);
    }
}
