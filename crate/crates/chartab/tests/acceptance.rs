//! Acceptance suite: one test per acceptance criterion, each printing a
//! pass line when its checks hold exactly.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use std::collections::BTreeSet;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use chartab::classfun::{central_check_pairs, SquareMode};
use chartab::cyclotomic::{rat_frac, CycNum, Rational};
use chartab::derivation::reference::expected_divergences;
use chartab::derivation::solvers::solve_degree_pair;
use chartab::derivation::{
    self, compare_classes, compare_table, load_classes, load_table, structure_report,
    DerivationOutcome, GroupId,
};
use chartab::indres::{induce, restrict, sym_character_table, MnEvaluator, Partition};
use chartab::permgroup::{parse_fixture, GroupData, DEFAULT_CLOSURE_CAP};

const FIXTURES: [(GroupId, &str); 4] = [
    (GroupId::G9, include_str!("../fixtures/g9.gens")),
    (GroupId::G10, include_str!("../fixtures/g10.gens")),
    (GroupId::G11, include_str!("../fixtures/g11.gens")),
    (GroupId::G12, include_str!("../fixtures/g12.gens")),
];


struct Derived {
    outcomes: Vec<(GroupId, DerivationOutcome)>,
}

fn derived() -> &'static Derived {
    static CELL: OnceLock<Derived> = OnceLock::new();
    CELL.get_or_init(|| {
        let outcomes = FIXTURES
            .iter()
            .map(|(id, text)| {
                let start = Instant::now();
                let mut outcome = derivation::derive_from_fixture_text(*id, text)
                    .unwrap_or_else(|e| panic!("derivation of {} failed: {e}", id.name()));
                derivation::compare_with_golden(&mut outcome)
                    .unwrap_or_else(|e| panic!("golden comparison of {} failed: {e}", id.name()));
                let elapsed = start.elapsed();
                assert!(
                    elapsed < Duration::from_secs(15),
                    "{} derivation took {elapsed:?}",
                    id.name()
                );
                (*id, outcome)
            })
            .collect();
        Derived { outcomes }
    })
}

fn outcome(id: GroupId) -> &'static DerivationOutcome {
    derived()
        .outcomes
        .iter()
        .find(|(oid, _)| *oid == id)
        .map(|(_, o)| o)
        .expect("derived")
}

#[test]
fn criterion_1_conjugacy_class_reproduction() {
    let start = Instant::now();
    for (id, text) in FIXTURES {
        let (_, gens) = parse_fixture(text).expect("fixture parses");
        let g = GroupData::closure(&gens, DEFAULT_CLOSURE_CAP).expect("closure");
        let rep = g.verify_sharp_transitivity(id.transitivity());
        assert!(rep.ok, "{}: {:?}", id.name(), rep.reason);
        let cmp = compare_classes(&g, &load_classes(id));
        assert!(cmp.matched, "{}: {:?}", id.name(), cmp.mismatches);
        // Spot checks straight from the recorded class tables.
        match id {
            GroupId::G9 => {
                let sizes: Vec<u64> = g.classes().iter().map(|c| c.size).collect();
                assert_eq!(sizes, vec![1, 9, 8, 18, 18, 18]);
            }
            GroupId::G12 => {
                assert_eq!(g.classes().len(), 15);
                assert_eq!(g.classes().iter().map(|c| c.size).sum::<u64>(), 95040);
                let nonreal: Vec<_> = g.classes().iter().filter(|c| !c.real).collect();
                assert_eq!(nonreal.len(), 2);
                for c in nonreal {
                    assert_eq!(c.size, 8640);
                    assert_eq!(c.element_order, 11);
                }
            }
            _ => {}
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(10),
        "enumeration of all four groups took {elapsed:?}"
    );
    println!(
        "[PASS] criterion 1: class data of G9-G12 equals the recorded tables exactly ({elapsed:?})"
    );
}

#[test]
fn criterion_2_character_table_reproduction() {
    for (id, _) in FIXTURES {
        let out = outcome(id);
        let gold = load_table(id);
        let cmp = compare_table(&out.table, &gold).expect("comparison runs");
        assert!(cmp.matched, "{}: {:?}", id.name(), cmp.mismatches);
        // The golden files carry the omega and beta literals; spot check
        // that the irrational values really appear in the derived tables:
        // sqrt(-2) in tables 6 and 7, the Gauss sum in tables 7 and 8.
        let contains = |value: &CycNum| {
            out.table
                .rows
                .iter()
                .any(|r| r.values().iter().any(|v| v == value))
        };
        let omega = chartab::cyclotomic::sqrt_minus_two();
        let beta = CycNum::gauss_quadratic(11).unwrap();
        match id {
            GroupId::G9 => {}
            GroupId::G10 => assert!(contains(&omega), "G10 table should contain sqrt(-2)"),
            GroupId::G11 => {
                assert!(contains(&omega), "G11 table should contain sqrt(-2)");
                assert!(contains(&beta), "G11 table should contain the Gauss sum");
            }
            GroupId::G12 => assert!(contains(&beta), "G12 table should contain the Gauss sum"),
        }
        // Table 8 carries four documented errata cells; they must be
        // detected, not silently absorbed.
        let expected_errata = if id == GroupId::G12 { 4 } else { 0 };
        assert_eq!(
            cmp.detected_errata.len(),
            expected_errata,
            "{}",
            id.name()
        );
    }
    println!("[PASS] criterion 2: derived tables equal the recorded tables 5-8 entry for entry (with the four documented table-8 errata cells detected)");
}

#[test]
fn criterion_3_orthogonality() {
    for (id, _) in FIXTURES {
        let out = outcome(id);
        let report = out.table.verify_orthogonality().expect("verification");
        assert!(
            report.ok(),
            "{}: {:?} {:?}",
            id.name(),
            report.row_violations,
            report.column_violations
        );
    }
    println!("[PASS] criterion 3: both orthogonality relations hold exactly for every derived table");
}

#[test]
fn criterion_4_class_algebra_consistency() {
    // All unordered pairs for the two small groups.
    for id in [GroupId::G9, GroupId::G10] {
        let out = outcome(id);
        let pairs = central_check_pairs(out.frame.len(), out.group.order(), 20);
        let expected = out.frame.len() * (out.frame.len() + 1) / 2;
        assert_eq!(pairs.len(), expected, "{} uses all pairs", id.name());
        let report = out
            .table
            .central_character_check(&out.group, &pairs)
            .expect("check runs");
        assert!(report.ok(), "{}: {report:?}", id.name());
    }
    // At least 20 deterministic pairs for the two large groups.
    let start = Instant::now();
    for id in [GroupId::G11, GroupId::G12] {
        let out = outcome(id);
        let pairs = central_check_pairs(out.frame.len(), out.group.order(), 20);
        assert!(pairs.len() >= 20, "{}", id.name());
        let report = out
            .table
            .central_character_check(&out.group, &pairs)
            .expect("check runs");
        assert!(report.ok(), "{}: {report:?}", id.name());
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!(
        "[PASS] criterion 4: central characters are integral and multiplicative on every checked class pair ({elapsed:?} for G11/G12)"
    );
}

#[test]
fn criterion_5_intermediate_value_replay() {
    // Every recorded inner product and intermediate row is replayed by
    // the derivation scripts; a derivation only succeeds if each one
    // matches, or is a registered erratum verified against its
    // documented correction. Here: the divergence sets must equal the
    // registry exactly.
    for (id, _) in FIXTURES {
        let out = outcome(id);
        let found: BTreeSet<&str> = out.log.divergence_ids().into_iter().collect();
        let expected: BTreeSet<&str> = expected_divergences(id.name()).iter().copied().collect();
        assert_eq!(
            found,
            expected,
            "{}: divergences found {found:?}, expected {expected:?}",
            id.name()
        );
    }
    // The 5x5 Gram matrix replay is a hard check inside the G12 script;
    // its success is visible as the logged step.
    assert!(outcome(GroupId::G12)
        .log
        .steps
        .iter()
        .any(|s| s.action.contains("Gram matrix")
            && s.checks.iter().any(|c| c.contains("all 25 inner products"))));
    println!("[PASS] criterion 5: every recorded intermediate value replays exactly, except the documented divergences, each detected and logged");
}

#[test]
fn criterion_6_degree_equation_and_column_solutions() {
    assert_eq!(solve_degree_pair(712, 2).unwrap(), vec![10, 16]);
    let g11 = outcome(GroupId::G11);
    let column_checks: Vec<&String> = g11
        .log
        .steps
        .iter()
        .flat_map(|s| s.checks.iter())
        .collect();
    assert!(
        column_checks
            .iter()
            .any(|c| c.contains("column 2^4: accepted (-2, 0)")),
        "accepted solution (-2, 0) not recorded: {column_checks:?}"
    );
    assert!(
        column_checks
            .iter()
            .any(|c| c.contains("rejected (78/89, -160/89)")),
        "rejected candidate 78/89 not recorded"
    );
    println!("[PASS] criterion 6: 712 = 2(10^2 + 16^2) uniquely; column 2^4 solves to (-2, 0) with (78/89, -160/89) rejected by the integrality filter");
}

#[test]
fn criterion_7_murnaghan_nakayama_oracle() {
    let start = Instant::now();
    let mut evaluator = MnEvaluator::new();
    for n in 1..=7u32 {
        let identity = Partition::new(&vec![1; n as usize]);
        let mut sum_sq = BigInt::zero();
        for lam in Partition::all_of(n) {
            let d = evaluator.value(&lam, &identity).unwrap();
            sum_sq += &d * &d;
        }
        let factorial: BigInt = (1..=n as i64).product::<i64>().into();
        assert_eq!(sum_sq, factorial, "sum of squared degrees in Sym({n})");
        let (_, table) = sym_character_table(n).unwrap();
        let report = table.verify_orthogonality().unwrap();
        assert!(report.ok(), "Sym({n}) orthogonality: {report:?}");
    }
    let identity12 = Partition::new(&[1; 12]);
    let partitions = Partition::all_of(12);
    assert_eq!(partitions.len(), 77);
    for lam in &partitions {
        let d = evaluator.value(lam, &identity12).unwrap();
        assert_eq!(
            d.to_biguint().expect("positive degree"),
            lam.hook_degree(),
            "degree of {lam}"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    println!(
        "[PASS] criterion 7: Sym(n) tables exact for n <= 7 and all 77 degree-12 degrees match the hook length formula ({elapsed:?})"
    );
}

#[test]
fn criterion_8_structural_corollaries() {
    let g10 = structure_report(&outcome(GroupId::G10).table);
    assert!(!g10.simple);
    assert_eq!(g10.proper_kernel_orders, vec![360]);
    assert_eq!(g10.index_two_nonsplit_witness, Some(true));
    for id in [GroupId::G11, GroupId::G12] {
        let report = structure_report(&outcome(id).table);
        assert!(report.simple, "{}: {report:?}", id.name());
        assert!(report
            .kernels
            .iter()
            .all(|k| k.kernel_order == 1));
    }
    println!("[PASS] criterion 8: G10 has the unique index-2 kernel with no outside involutions; G11 and G12 are simple");
}

#[test]
fn criterion_9_property_suites() {
    // Exact field axioms on 1000 pseudo-random triples.
    let mut state = 0x1234_5678_9abc_def0u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let random_cyc = |rng: &mut dyn FnMut() -> u64| {
        let conductors = [1u64, 3, 4, 5, 7, 8, 9, 11, 12];
        let n = conductors[(rng()) as usize % conductors.len()];
        let terms: Vec<(i64, Rational)> = (0..=(rng() % 3))
            .map(|_| {
                let e = (rng() % n) as i64;
                let num = (rng() % 7) as i64 - 3;
                let den = (rng() % 3) as i64 + 1;
                (e, rat_frac(num, den))
            })
            .collect();
        CycNum::make(n, &terms).expect("valid conductor")
    };
    let one = CycNum::one();
    for i in 0..1000 {
        let a = random_cyc(&mut next);
        let b = random_cyc(&mut next);
        let c = random_cyc(&mut next);
        // Associativity and commutativity.
        assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(a.mul(&b), b.mul(&a));
        // Distributivity.
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        // Inverses of nonzero values.
        if !a.is_zero() {
            assert_eq!(a.mul(&a.inv().unwrap()), one);
        }
        // Conjugation is a ring automorphism.
        assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
        assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        // x conj(x) is numerically a nonnegative real.
        let norm = a.mul(&a.conj());
        let (re, im) = norm.numeric();
        assert!(im.abs() < 1e-9, "iteration {i}: norm has imaginary part {im}");
        assert!(re > -1e-9, "iteration {i}: norm is negative: {re}");
    }

    // Frobenius reciprocity on ten deterministic row pairs per chain link.
    for id in [GroupId::G10, GroupId::G11, GroupId::G12] {
        let out = outcome(id);
        let child = out.chain.as_deref().expect("chain");
        let fusion = out.group.fusion_from(&child.group).expect("fusion");
        let mut checked = 0;
        let mut k = 0usize;
        while checked < 10 {
            let chi = &child.table.rows[(k * 7 + 3) % child.table.rows.len()];
            let phi = &out.table.rows[(k * 5 + 1) % out.table.rows.len()];
            let lhs = induce(chi, &fusion, &out.frame)
                .unwrap()
                .inner_product(phi)
                .unwrap();
            let rhs = chi
                .inner_product(&restrict(phi, &fusion, &child.frame).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs, "{}: reciprocity pair {k}", id.name());
            checked += 1;
            k += 1;
        }
    }

    // Symmetric/antisymmetric square degree identities, and their pointwise
    // sum against the tensor square.
    for (id, _) in FIXTURES {
        let out = outcome(id);
        for chi in &out.table.rows {
            let d = chi.degree_integer().unwrap();
            let sym = chi.sym_alt_square(SquareMode::Symmetric);
            let alt = chi.sym_alt_square(SquareMode::Antisymmetric);
            let two = BigInt::from(2);
            assert_eq!(
                sym.degree_integer().unwrap() * &two,
                &d * (&d + BigInt::one())
            );
            assert_eq!(
                alt.degree_integer().unwrap() * &two,
                &d * (&d - BigInt::one())
            );
            let sum = sym.add(&alt).unwrap();
            let tensor = chi.tensor(chi).unwrap();
            assert_eq!(sum.values(), tensor.values());
        }
        // Real rows match real classes (criterion text: 6, 6, 6, 13).
        let real_rows = out.table.real_row_count();
        let real_classes = out.frame.classes.iter().filter(|c| c.real).count();
        assert_eq!(real_rows, real_classes, "{}", id.name());
        let expected = match id {
            GroupId::G9 => 6,
            GroupId::G10 => 6,
            GroupId::G11 => 6,
            GroupId::G12 => 13,
        };
        assert_eq!(real_rows, expected, "{}", id.name());
    }
    println!("[PASS] criterion 9: field axioms (1000 triples), Frobenius reciprocity (10 pairs per link) and square degree identities all hold exactly");
}
