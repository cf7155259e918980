//! Operation-level integration tests: stabilizer chains, class fusion,
//! induction and restriction, kernels, Sylow probes and determinism of
//! the derivation pipeline.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::One;

use chartab::classfun::{perm_character, reduce_by_known, ClassFrame, ClassFunction};
use chartab::cyclotomic::{rat_frac, CycNum};
use chartab::derivation::{self, compare_table, export, load_table, GroupId};
use chartab::indres::{induce, restrict};
use chartab::permgroup::{parse_fixture, GroupData, DEFAULT_CLOSURE_CAP};

fn group(id: GroupId) -> &'static GroupData {
    static CELL: OnceLock<Vec<(GroupId, GroupData)>> = OnceLock::new();
    let all = CELL.get_or_init(|| {
        [
            (GroupId::G9, include_str!("../fixtures/g9.gens")),
            (GroupId::G10, include_str!("../fixtures/g10.gens")),
            (GroupId::G11, include_str!("../fixtures/g11.gens")),
            (GroupId::G12, include_str!("../fixtures/g12.gens")),
        ]
        .iter()
        .map(|(id, text)| {
            let (_, gens) = parse_fixture(text).unwrap();
            (*id, GroupData::closure(&gens, DEFAULT_CLOSURE_CAP).unwrap())
        })
        .collect()
    });
    all.iter().find(|(gid, _)| *gid == id).map(|(_, g)| g).unwrap()
}

#[test]
fn stabilizer_chain_orders_and_transitivity() {
    let g12 = group(GroupId::G12);
    let s11 = g12.stabilizer(&[12]).unwrap().restricted_dropping(&[12]).unwrap();
    assert_eq!(s11.order(), 7920);
    assert!(s11.verify_sharp_transitivity(4).ok);

    let g10 = group(GroupId::G10);
    let s9 = g10.stabilizer(&[10]).unwrap();
    assert_eq!(s9.order(), 72);

    let g9 = group(GroupId::G9);
    assert_eq!(g9.stabilizer(&[1, 2]).unwrap().order(), 1);
}

#[test]
fn fusion_of_four_cycle_classes() {
    // One class of type 4^2 in the stabilizer fuses into the small
    // 12-point... the G10 class 4^2_A; the other two fuse into 4^2_B.
    let g10 = group(GroupId::G10);
    let h9 = g10
        .stabilizer(&[10])
        .unwrap()
        .restricted_dropping(&[10])
        .unwrap();
    let fusion = g10.fusion_from(&h9).unwrap();
    assert!(g10.fusion_well_defined(&h9).unwrap());
    let g10_4a = g10.classes().iter().position(|c| c.label == "4^2_A").unwrap();
    let g10_4b = g10.classes().iter().position(|c| c.label == "4^2_B").unwrap();
    let images: Vec<usize> = h9
        .classes()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.label.starts_with("4^2"))
        .map(|(i, _)| fusion[i])
        .collect();
    assert_eq!(images.iter().filter(|&&t| t == g10_4a).count(), 1);
    assert_eq!(images.iter().filter(|&&t| t == g10_4b).count(), 2);
    // Identity fuses to identity.
    assert_eq!(fusion[0], 0);

    // Both 4^2 classes of G10 fuse into the single 4^2 class of G11.
    let g11 = group(GroupId::G11);
    let h10 = g11
        .stabilizer(&[11])
        .unwrap()
        .restricted_dropping(&[11])
        .unwrap();
    let fusion = g11.fusion_from(&h10).unwrap();
    assert!(g11.fusion_well_defined(&h10).unwrap());
    let g11_4 = g11.classes().iter().position(|c| c.label == "4^2").unwrap();
    for (i, c) in h10.classes().iter().enumerate() {
        if c.label.starts_with("4^2") {
            assert_eq!(fusion[i], g11_4);
        }
    }

    // The last chain link, exhaustively as well.
    let g12 = group(GroupId::G12);
    let h11 = g12
        .stabilizer(&[12])
        .unwrap()
        .restricted_dropping(&[12])
        .unwrap();
    assert!(g12.fusion_well_defined(&h11).unwrap());
}

#[test]
fn class_size_times_centralizer_is_group_order() {
    let g = group(GroupId::G10);
    for (i, e) in g.elements().iter().enumerate().step_by(97) {
        let centralizer = g
            .elements()
            .iter()
            .filter(|x| x.then(e) == e.then(x))
            .count() as u64;
        let class = g.class_of(e).unwrap();
        assert_eq!(
            g.classes()[class].size * centralizer,
            g.order(),
            "element {i}"
        );
    }
}

#[test]
fn permutation_character_values_on_g12() {
    let g12 = group(GroupId::G12);
    let frame = ClassFrame::from_group("G12", g12);
    let chi = perm_character(frame.clone(), g12).unwrap();
    assert_eq!(chi.degree_integer().unwrap(), BigInt::from(11));
    let at = |label: &str| chi.value(frame.class_by_label(label).unwrap()).clone();
    assert_eq!(at("2^4"), CycNum::from_integer(3));
    assert_eq!(at("2^6"), CycNum::from_integer(-1));
}

#[test]
fn induction_scales_degree_by_index() {
    let out = derivation::derive_from_fixture_text(
        GroupId::G11,
        include_str!("../fixtures/g11.gens"),
    )
    .unwrap();
    let child = out.chain.as_deref().unwrap();
    let fusion = out.group.fusion_from(&child.group).unwrap();
    let index = BigInt::from(out.group.order() / child.group.order());
    for chi in &child.table.rows {
        let induced = induce(chi, &fusion, &out.frame).unwrap();
        assert_eq!(
            induced.degree_integer().unwrap(),
            chi.degree_integer().unwrap() * &index
        );
    }
}

#[test]
fn restriction_of_the_permutation_character() {
    let out = derivation::derive_from_fixture_text(
        GroupId::G12,
        include_str!("../fixtures/g12.gens"),
    )
    .unwrap();
    let child = out.chain.as_deref().unwrap();
    let fusion = out.group.fusion_from(&child.group).unwrap();
    // Restrict the degree-11 permutation character: it decomposes over the
    // stabilizer as trivial plus the degree-10 permutation character.
    let chi1 = out
        .table
        .rows
        .iter()
        .find(|r| r.degree_integer() == Some(BigInt::from(11)) && {
            let v = r.values();
            v.iter().filter(|x| **x == CycNum::from_integer(3)).count() >= 2
        })
        .expect("the permutation character row");
    let down = restrict(chi1, &fusion, &child.frame).unwrap();
    assert_eq!(down.degree_integer().unwrap(), BigInt::from(11));
    let triv = &child.table.rows[0];
    let ten = &child.table.rows[1];
    assert_eq!(down.inner_product(triv).unwrap(), CycNum::one());
    assert_eq!(down.inner_product(ten).unwrap(), CycNum::one());
    assert_eq!(down.norm().unwrap(), CycNum::from_integer(2));
    // Trivial restricts to trivial.
    let trivial_down = restrict(&out.table.rows[0], &fusion, &child.frame).unwrap();
    assert!(trivial_down.values().iter().all(|v| *v == CycNum::one()));
}

#[test]
fn reduce_by_known_rejects_fractional_multiplicities() {
    let g9 = group(GroupId::G9);
    let frame = ClassFrame::from_group("G9", g9);
    let triv = ClassFunction::trivial(frame.clone());
    let half = ClassFunction::new(
        frame.clone(),
        triv.values()
            .iter()
            .map(|v| v.scale(&rat_frac(1, 2)))
            .collect(),
    );
    assert!(reduce_by_known(&half, &[&triv]).is_err());
}

#[test]
fn sylow_probe_invariants() {
    let g12 = group(GroupId::G12);
    let s3 = g12.sylow_probe(3, 0).unwrap();
    assert_eq!(s3.order, 27);
    assert!(!s3.abelian);
    assert_eq!(s3.exponent, 3);
    let s2 = g12.sylow_probe(2, 0).unwrap();
    assert_eq!(s2.order, 64);
    assert_eq!(s2.orbit_sizes, vec![8, 4]);
    let g10 = group(GroupId::G10);
    let t2 = g10.sylow_probe(2, 0).unwrap();
    assert_eq!(t2.order, 16);
    assert_eq!(t2.orbit_sizes, vec![8, 2]);
    // Different seeds give conjugate subgroups with identical invariants.
    let t2b = g10.sylow_probe(2, 5).unwrap();
    assert_eq!(t2.element_order_census, t2b.element_order_census);
}

#[test]
fn kernel_classes_of_the_g10_linear_character() {
    let out = derivation::derive_from_fixture_text(
        GroupId::G10,
        include_str!("../fixtures/g10.gens"),
    )
    .unwrap();
    let linear = out
        .table
        .rows
        .iter()
        .find(|r| {
            r.degree_integer() == Some(BigInt::one())
                && r.values().iter().any(|v| *v != CycNum::one())
        })
        .unwrap();
    let kernel = linear.kernel_classes();
    let labels: Vec<&str> = kernel
        .iter()
        .map(|&c| out.frame.classes[c].label.as_str())
        .collect();
    assert_eq!(labels, vec!["1^10", "2^4", "3^3", "4^2_A", "5^2"]);
    let order: u64 = kernel.iter().map(|&c| out.frame.classes[c].size).sum();
    assert_eq!(order, 360);
}

#[test]
fn corrupted_golden_table_is_rejected() {
    let out = derivation::derive_from_fixture_text(
        GroupId::G10,
        include_str!("../fixtures/g10.gens"),
    )
    .unwrap();
    let mut golden = load_table(GroupId::G10);
    golden.characters[7].values[1] = "-7".into();
    let cmp = compare_table(&out.table, &golden).unwrap();
    assert!(!cmp.matched);
    assert!(!cmp.mismatches.is_empty());
}

#[test]
fn derivation_is_deterministic() {
    let run = || {
        let mut out = derivation::derive_from_fixture_text(
            GroupId::G10,
            include_str!("../fixtures/g10.gens"),
        )
        .unwrap();
        derivation::compare_with_golden(&mut out).unwrap();
        (
            out.log.render_text(),
            out.log.render_json(),
            export::table_to_text(&out.table),
            export::table_to_json(&out.table),
            export::table_to_csv(&out.table),
        )
    };
    let a = run();
    let b = run();
    assert_eq!(a, b);
}

#[test]
fn derivation_is_fixture_independent() {
    // Conjugating the generators relabels points and scrambles every
    // internal class-representative choice; the derived table must still
    // match the golden one. The verifier, not the particular generator
    // set, is what certifies a fixture.
    use chartab::permgroup::Perm;
    for (id, text, conjugator) in [
        (
            GroupId::G10,
            include_str!("../fixtures/g10.gens"),
            "(1,7,3)(2,9)(4,10,6,5)",
        ),
        (
            GroupId::G11,
            include_str!("../fixtures/g11.gens"),
            "(1,11)(2,5,9)(3,8,4,10)",
        ),
        (
            GroupId::G12,
            include_str!("../fixtures/g12.gens"),
            "(1,12,5)(2,8)(3,11,4)(6,9,10,7)",
        ),
    ] {
        let (degree, gens) = parse_fixture(text).unwrap();
        let c = Perm::parse(conjugator, degree).unwrap();
        let conjugated: Vec<Perm> = gens.iter().map(|g| g.conjugated_by(&c)).collect();
        let group = GroupData::closure(&conjugated, DEFAULT_CLOSURE_CAP).unwrap();
        let mut outcome = derivation::derive(id, group).unwrap();
        let cmp = derivation::compare_with_golden(&mut outcome).unwrap();
        assert!(cmp.matched, "{}: {:?}", id.name(), cmp.mismatches);
    }
}

#[test]
fn derive_rejects_wrong_degree_fixture() {
    match derivation::derive_from_fixture_text(GroupId::G12, include_str!("../fixtures/g11.gens"))
    {
        Err(err) => assert!(err.to_string().contains("degree")),
        Ok(_) => panic!("expected a degree mismatch error"),
    }
}
