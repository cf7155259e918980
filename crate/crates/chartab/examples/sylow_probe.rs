//! Sylow subgroup invariants used by the class-count arguments: orders,
//! abelianness, exponents, element-order censuses and orbit structures.

use chartab::permgroup::{parse_fixture, GroupData, DEFAULT_CLOSURE_CAP};

fn main() {
    let fixtures: [(&str, &str, &[u64]); 4] = [
        ("G9", include_str!("../fixtures/g9.gens"), &[2, 3]),
        ("G10", include_str!("../fixtures/g10.gens"), &[2, 3, 5]),
        ("G11", include_str!("../fixtures/g11.gens"), &[2, 3, 11]),
        ("G12", include_str!("../fixtures/g12.gens"), &[2, 3, 5, 11]),
    ];
    for (name, text, primes) in fixtures {
        let (_, gens) = parse_fixture(text).unwrap();
        let g = GroupData::closure(&gens, DEFAULT_CLOSURE_CAP).unwrap();
        println!("{name} (order {}):", g.order());
        for &p in primes {
            let report = g.sylow_probe(p, 0).expect("prime divides the order");
            println!(
                "  p = {p:>2}: order {:>3}, abelian {:<5}, exponent {:>2}, orbits {:?}, element orders {:?}",
                report.order,
                report.abelian,
                report.exponent,
                report.orbit_sizes,
                report.element_order_census
            );
        }
    }
    println!();
    println!("note: the Sylow 3-subgroup of G12 has order 27, is non-abelian");
    println!("and has exponent 3, which pins it as the Heisenberg group over");
    println!("the field of three elements; in particular G12 has no elements");
    println!("of order 9.");
}
