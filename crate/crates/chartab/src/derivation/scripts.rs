//! The derivation scripts: fixed sequences of constructive moves that
//! assemble each group's character table, re-verifying every recorded
//! intermediate value along the way.
//!
//! Each script consumes an enumerated group that has already passed the
//! sharp-transitivity verification, derives the table of its point
//! stabilizer recursively, and logs every step. Recorded reference
//! values that fail to reproduce are either registered errata (logged as
//! divergences, with the recomputed value validated against the
//! documented correction) or hard errors.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::classfun::{
    perm_character, reduce_by_known, CharacterTable, ClassFrame, ClassFunction, SquareMode,
};
use crate::cyclotomic::CycNum;
use crate::derivation::log::DerivationLog;
use crate::derivation::reference::{errata, Replay};
use crate::derivation::solvers::{resolve_overlap_system, solve_conjugate_columns, solve_degree_pair};
use crate::derivation::{canonicalize_table, DerivationOutcome, GroupId};
use crate::error::DerivationError;
use crate::indres::{induce, restrict_sym_character, Partition};
use crate::permgroup::{GroupData, Perm};

fn check_err(step: &str, message: String) -> DerivationError {
    DerivationError::Check {
        step: step.to_string(),
        message,
    }
}

fn ip(a: &ClassFunction, b: &ClassFunction) -> Result<CycNum, DerivationError> {
    a.inner_product(b).map_err(DerivationError::ClassFun)
}

fn require_norm_one(name: &str, chi: &ClassFunction) -> Result<(), DerivationError> {
    let norm = chi.norm().map_err(DerivationError::ClassFun)?;
    if norm != CycNum::one() {
        return Err(check_err(name, format!("norm is {norm}, not 1")));
    }
    let degree = chi
        .degree_integer()
        .ok_or_else(|| check_err(name, "degree not integral".into()))?;
    if degree <= BigInt::zero() {
        return Err(check_err(name, format!("degree {degree} not positive")));
    }
    Ok(())
}

fn verify_sharp(g: &GroupData, k: usize, name: &str) -> Result<(), DerivationError> {
    let report = g.verify_sharp_transitivity(k);
    if !report.ok {
        return Err(DerivationError::Fixture(format!(
            "{name} is not sharply {k}-transitive: {}",
            report.reason.unwrap_or_default()
        )));
    }
    Ok(())
}

fn assemble(
    frame: &Arc<ClassFrame>,
    rows: Vec<ClassFunction>,
    log: &mut DerivationLog,
) -> Result<CharacterTable, DerivationError> {
    let labels: Vec<String> = (0..rows.len()).map(|i| format!("chi_{i}")).collect();
    let table = CharacterTable::new(frame.clone(), rows, labels);
    let report = table
        .verify_orthogonality()
        .map_err(DerivationError::ClassFun)?;
    if !report.ok() {
        return Err(check_err(
            "orthogonality",
            format!(
                "{} row and {} column violations: {:?} {:?}",
                report.row_violations.len(),
                report.column_violations.len(),
                report.row_violations.first(),
                report.column_violations.first()
            ),
        ));
    }
    let sum_sq: Option<BigInt> = table.sum_of_squared_degrees();
    if sum_sq != Some(BigInt::from(frame.order)) {
        return Err(check_err(
            "degrees",
            "sum of squared degrees differs from the group order".into(),
        ));
    }
    log.step(
        "assemble and verify the complete table",
        "ref/orthogonality",
        "table",
        table.rows.len(),
        1,
        vec![
            "both orthogonality relations hold exactly for all pairs".into(),
            "sum of squared degrees equals the group order".into(),
        ],
    );
    Ok(canonicalize_table(table))
}

/// Hardcoded five-row quaternion character table over the class order
/// (identity, central involution, three order-4 classes).
const Q8_TABLE: [[i64; 5]; 5] = [
    [1, 1, 1, 1, 1],
    [1, 1, 1, -1, -1],
    [1, 1, -1, 1, -1],
    [1, 1, -1, -1, 1],
    [2, -2, 0, 0, 0],
];

pub fn derive_g9(g: GroupData) -> Result<DerivationOutcome, DerivationError> {
    verify_sharp(&g, 2, "G9")?;
    let frame = ClassFrame::from_group("G9", &g);
    let mut log = DerivationLog::new("G9");
    log.step(
        "verify sharp 2-transitivity of the fixture",
        "ref/setup",
        "G9",
        g.order(),
        "-",
        vec!["order 72 = 9*8, transitive on pairs, trivial two-point stabilizer".into()],
    );

    // The regular normal subgroup: the identity plus all fixed-point-free
    // elements.
    let elements = g.elements().to_vec();
    let n_set: Vec<&Perm> = elements
        .iter()
        .filter(|e| e.is_identity() || e.fixed_points() == 0)
        .collect();
    if n_set.len() != 9 {
        return Err(DerivationError::Fixture(format!(
            "expected a regular normal subgroup of order 9, found {} candidates",
            n_set.len()
        )));
    }
    for a in &n_set {
        for b in &n_set {
            let prod = a.then(b);
            if !n_set.iter().any(|x| **x == prod) {
                return Err(DerivationError::Fixture(
                    "fixed-point-free elements do not close into a subgroup".into(),
                ));
            }
        }
    }
    log.step(
        "identify the regular normal subgroup N of order 9",
        "ref/G9/normal-subgroup",
        "N",
        9,
        "-",
        vec!["N = identity plus the eight fixed-point-free elements; closed under products".into()],
    );

    // Cosets of N and the quotient group of order 8.
    let coset_rep = |x: &Perm| -> Perm {
        n_set
            .iter()
            .map(|n| x.then(n))
            .min()
            .expect("nonempty coset")
    };
    let mut reps: Vec<Perm> = elements.iter().map(coset_rep).collect();
    reps.sort_unstable();
    reps.dedup();
    if reps.len() != 8 {
        return Err(DerivationError::Fixture(format!(
            "quotient has order {}, expected 8",
            reps.len()
        )));
    }
    let rep_index = |x: &Perm| -> usize {
        let r = coset_rep(x);
        reps.iter().position(|y| *y == r).expect("coset rep")
    };
    // Quotient multiplication table and element orders.
    let qmul: Vec<Vec<usize>> = reps
        .iter()
        .map(|a| reps.iter().map(|b| rep_index(&a.then(b))).collect())
        .collect();
    let identity_q = rep_index(&Perm::identity(g.degree()));
    let qorder = |mut x: usize| -> u64 {
        let mut o = 1;
        let start = x;
        while x != identity_q {
            x = qmul[x][start];
            o += 1;
        }
        o
    };
    let orders: Vec<u64> = (0..8).map(qorder).collect();
    let involutions = orders.iter().filter(|&&o| o == 2).count();
    let fours = orders.iter().filter(|&&o| o == 4).count();
    if involutions != 1 || fours != 6 {
        return Err(DerivationError::Fixture(format!(
            "quotient is not the quaternion group (order census: one involution expected, found {involutions}, order-4 elements {fours})"
        )));
    }
    // Quotient conjugacy classes.
    let mut qclass = [usize::MAX; 8];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let qinv = |x: usize| (0..8).find(|&y| qmul[x][y] == identity_q).expect("inverse");
    for x in 0..8 {
        if qclass[x] != usize::MAX {
            continue;
        }
        let cid = classes.len();
        let mut members = Vec::new();
        for s in 0..8 {
            let y = qmul[qmul[qinv(s)][x]][s];
            if qclass[y] == usize::MAX {
                qclass[y] = cid;
                members.push(y);
            }
        }
        classes.push(members);
    }
    if classes.len() != 5 {
        return Err(DerivationError::Fixture(
            "quotient does not have five conjugacy classes".into(),
        ));
    }
    // Map quotient classes onto the fixture column order
    // (identity, involution, then order-4 classes by smallest member).
    let mut order4: Vec<usize> = (0..5)
        .filter(|&c| orders[classes[c][0]] == 4)
        .collect();
    order4.sort_by_key(|&c| classes[c].iter().min().copied());
    let col_of_class = |c: usize| -> usize {
        if orders[classes[c][0]] == 1 {
            0
        } else if orders[classes[c][0]] == 2 {
            1
        } else {
            2 + order4.iter().position(|&x| x == c).expect("order-4 class")
        }
    };
    log.step(
        "form the quotient by N and recognize the quaternion group",
        "ref/G9/quotient",
        "G9/N",
        8,
        "-",
        vec!["order 8, one involution, six elements of order 4, five classes".into()],
    );

    // Lift the five quaternion characters through the quotient map.
    let mut rows = Vec::new();
    for chi in &Q8_TABLE {
        let values: Vec<CycNum> = g
            .classes()
            .iter()
            .map(|c| {
                let col = col_of_class(qclass[rep_index(&c.rep)]);
                CycNum::from_integer(chi[col])
            })
            .collect();
        rows.push(ClassFunction::new(frame.clone(), values));
    }
    for (i, row) in rows.iter().enumerate() {
        require_norm_one(&format!("lift {i}"), row)?;
    }
    log.step(
        "lift the five quaternion characters through the quotient",
        "ref/tables/5",
        "chi_0..chi_4",
        "1,1,1,1,2",
        1,
        vec!["every lift has norm 1".into()],
    );

    // The permutation character of the 2-transitive action.
    let chi5 = perm_character(frame.clone(), &g).map_err(DerivationError::ClassFun)?;
    {
        let mut replay = Replay::new(&mut log);
        replay.row("G9 permutation character", &chi5, &[8, 0, -1, 0, 0, 0])?;
    }
    log.step(
        "append the permutation character of the 2-transitive action",
        "ref/tables/5",
        "chi_5",
        8,
        1,
        vec!["fix(g) - 1 has norm 1".into()],
    );
    rows.push(chi5);

    let table = assemble(&frame, rows, &mut log)?;
    Ok(DerivationOutcome {
        id: GroupId::G9,
        group: g,
        frame,
        table,
        log,
        chain: None,
    })
}

pub fn derive_g10(g: GroupData) -> Result<DerivationOutcome, DerivationError> {
    verify_sharp(&g, 3, "G10")?;
    let frame = ClassFrame::from_group("G10", &g);
    let mut log = DerivationLog::new("G10");
    log.step(
        "verify sharp 3-transitivity of the fixture",
        "ref/setup",
        "G10",
        g.order(),
        "-",
        vec![],
    );

    let sub = g
        .stabilizer(&[g.degree()])?
        .restricted_dropping(&[g.degree()])?;
    let child = derive_g9(sub)?;
    let fusion = g.fusion_from(&child.group)?;
    log.step(
        "derive the point-stabilizer table and its class fusion",
        "ref/G10/stabilizer",
        "G9 table",
        child.group.order(),
        "-",
        vec![format!("fusion map: {fusion:?}")],
    );

    let chi0 = ClassFunction::trivial(frame.clone());
    let chi2 = perm_character(frame.clone(), &g).map_err(DerivationError::ClassFun)?;
    {
        let mut replay = Replay::new(&mut log);
        replay.row(
            "G10 permutation character",
            &chi2,
            &[9, 1, 0, 1, 1, -1, -1, -1],
        )?;
    }
    log.step(
        "permutation character of the 3-transitive action",
        "ref/G10/perm",
        "chi_2",
        9,
        1,
        vec![],
    );

    // Induce the three nontrivial linear characters and the 2-dimensional
    // character of the stabilizer.
    let linears: Vec<&ClassFunction> = child
        .table
        .rows
        .iter()
        .filter(|r| {
            r.degree_integer() == Some(BigInt::one())
                && r.values().iter().any(|v| *v != CycNum::one())
        })
        .collect();
    let two_dim = child
        .table
        .rows
        .iter()
        .find(|r| r.degree_integer() == Some(BigInt::from(2)))
        .ok_or_else(|| check_err("G10 induction", "no 2-dimensional stabilizer row".into()))?;
    if linears.len() != 3 {
        return Err(check_err(
            "G10 induction",
            format!("expected 3 nontrivial linear rows, found {}", linears.len()),
        ));
    }
    let col_4a = frame
        .class_by_label("4^2_A")
        .ok_or_else(|| check_err("G10 induction", "class 4^2_A missing".into()))?;
    let induced: Vec<ClassFunction> = linears
        .iter()
        .map(|chi| induce(chi, &fusion, &frame))
        .collect::<Result<_, _>>()?;
    let minus_two = CycNum::from_integer(-2);
    let chi_a = induced
        .iter()
        .find(|r| *r.value(col_4a) == minus_two)
        .cloned()
        .ok_or_else(|| check_err("G10 induction", "no induced row with -2 on 4^2_A".into()))?;
    let chi_b = induced
        .iter()
        .find(|r| *r.value(col_4a) == CycNum::from_integer(2))
        .cloned()
        .ok_or_else(|| check_err("G10 induction", "no induced row with 2 on 4^2_A".into()))?;
    let chi_c = induce(two_dim, &fusion, &frame)?;
    {
        let mut replay = Replay::new(&mut log);
        replay.row("induced chi_A", &chi_a, &[10, 2, 1, -2, 0, 0, 0, 0])?;
        replay.row("induced chi_B", &chi_b, &[10, 2, 1, 2, -2, 0, 0, 0])?;
        replay.row("induced chi_C", &chi_c, &[20, -4, 2, 0, 0, 0, 0, 0])?;
        replay.int("<chi_A, chi_A>", &ip(&chi_a, &chi_a)?, 1)?;
        replay.int("<chi_B, chi_B>", &ip(&chi_b, &chi_b)?, 2)?;
        replay.int("<chi_C, chi_C>", &ip(&chi_c, &chi_c)?, 2)?;
    }
    log.step(
        "induce the stabilizer characters of degree 1 and 2",
        "ref/G10/induction",
        "chi_A, chi_B, chi_C",
        "10,10,20",
        "1,2,2",
        vec!["chi_A is irreducible; relabel it chi_4".into()],
    );
    let chi4 = chi_a.clone();

    let chi_d = chi2.sym_alt_square(SquareMode::Antisymmetric);
    let chi_e = chi4.sym_alt_square(SquareMode::Antisymmetric);
    {
        let mut replay = Replay::new(&mut log);
        replay.row("chi_D (antisymmetric square of chi_2)", &chi_d, &[36, -4, 0, 0, 0, 1, 0, 0])?;
        replay.int("<chi_D, chi_D>", &ip(&chi_d, &chi_d)?, 3)?;
        replay.int("<chi_C, chi_D>", &ip(&chi_c, &chi_d)?, 2)?;
        replay.row_diverging(
            errata::G10_CHI_E_EIGHT_COLUMNS,
            "chi_E (antisymmetric square of chi_4)",
            &chi_e,
            &[45, -3, 0, 1, -1, 0, 0, 0],
            &[45, -3, 0, 1, -1, 0, 1, 1],
            "the recorded row is inconsistent with its own recorded norm of 4; the corrected values follow from the square of chi_4 at the order-8 classes",
        )?;
        replay.int("<chi_E, chi_E>", &ip(&chi_e, &chi_e)?, 4)?;
    }
    log.step(
        "antisymmetric squares of chi_2 and chi_4",
        "ref/G10/squares",
        "chi_D, chi_E",
        "36,45",
        "3,4",
        vec![],
    );

    let chi7 = chi_d.sub(&chi_c).map_err(DerivationError::ClassFun)?;
    require_norm_one("chi_7", &chi7)?;
    let chi3 = chi_e
        .sub(&chi7)
        .and_then(|x| x.sub(&chi_c))
        .map_err(DerivationError::ClassFun)?;
    let alt_route = chi_e.sub(&chi_d).map_err(DerivationError::ClassFun)?;
    if chi3.values() != alt_route.values() {
        return Err(check_err("chi_3", "the two subtraction routes disagree".into()));
    }
    require_norm_one("chi_3", &chi3)?;
    {
        let mut replay = Replay::new(&mut log);
        replay.row("chi_7 = chi_D - chi_C", &chi7, &[16, 0, -2, 0, 0, 1, 0, 0])?;
        replay.int("<chi_7, chi_E>", &ip(&chi7, &chi_e)?, 1)?;
        replay.int("<chi_B, chi_E>", &ip(&chi_b, &chi_e)?, 1)?;
        replay.int("<chi_C, chi_E>", &ip(&chi_c, &chi_e)?, 2)?;
        replay.row("chi_3 = chi_E - chi_7 - chi_C", &chi3, &[9, 1, 0, 1, -1, -1, 1, 1])?;
        replay.int("<chi_B, chi_3>", &ip(&chi_b, &chi3)?, 1)?;
    }
    let chi1 = chi_b.sub(&chi3).map_err(DerivationError::ClassFun)?;
    require_norm_one("chi_1", &chi1)?;
    if chi1.degree_integer() != Some(BigInt::one()) {
        return Err(check_err("chi_1", "expected a linear character".into()));
    }
    log.step(
        "subtract known constituents to reach chi_7, chi_3 and chi_1",
        "ref/G10/subtractions",
        "chi_7, chi_3, chi_1",
        "16,9,1",
        1,
        vec!["each difference has norm 1 and positive degree".into()],
    );

    // The remaining two rows form a complex conjugate pair.
    let known = [&chi0, &chi1, &chi2, &chi3, &chi4, &chi7];
    let sum_sq: u64 = known
        .iter()
        .map(|r| {
            let d = r.degree_integer().expect("integral degree").to_u64().unwrap();
            d * d
        })
        .sum();
    let degrees = solve_degree_pair(g.order() - sum_sq, 1)?;
    log.step(
        "degree equation for the final conjugate pair",
        "ref/G10/degrees",
        "d",
        degrees[0],
        "-",
        vec![format!(
            "{} - {} = {} = 2 d^2 has the unique solution d = {}",
            g.order(),
            sum_sq,
            g.order() - sum_sq,
            degrees[0]
        )],
    );
    let solution = solve_conjugate_columns(&frame, &known, &degrees)?;
    let checks = solution.log.clone();
    log.step(
        "solve the column relations for the conjugate pair",
        "ref/G10/columns",
        "chi_5, chi_6",
        degrees[0],
        1,
        checks,
    );
    for row in &solution.rows {
        require_norm_one("conjugate pair row", row)?;
    }

    let rows = vec![
        chi0,
        chi1,
        chi2,
        chi3,
        chi4,
        solution.rows[0].clone(),
        solution.rows[1].clone(),
        chi7,
    ];
    let table = assemble(&frame, rows, &mut log)?;
    Ok(DerivationOutcome {
        id: GroupId::G10,
        group: g,
        frame,
        table,
        log,
        chain: Some(Box::new(child)),
    })
}

pub fn derive_g11(g: GroupData) -> Result<DerivationOutcome, DerivationError> {
    verify_sharp(&g, 4, "G11")?;
    let frame = ClassFrame::from_group("G11", &g);
    let mut log = DerivationLog::new("G11");
    log.step(
        "verify sharp 4-transitivity of the fixture",
        "ref/setup",
        "G11",
        g.order(),
        "-",
        vec![],
    );

    let sub = g
        .stabilizer(&[g.degree()])?
        .restricted_dropping(&[g.degree()])?;
    let child = derive_g10(sub)?;
    let fusion = g.fusion_from(&child.group)?;
    log.step(
        "derive the point-stabilizer table and its class fusion",
        "ref/G11/stabilizer",
        "G10 table",
        child.group.order(),
        "-",
        vec![format!("fusion map: {fusion:?}")],
    );

    let chi0 = ClassFunction::trivial(frame.clone());
    let chi1 = perm_character(frame.clone(), &g).map_err(DerivationError::ClassFun)?;
    let chi_s = chi1.sym_alt_square(SquareMode::Symmetric);
    let chi_a = chi1.sym_alt_square(SquareMode::Antisymmetric);
    {
        let mut replay = Replay::new(&mut log);
        replay.row(
            "G11 permutation character",
            &chi1,
            &[10, 2, 1, 2, 0, -1, 0, 0, -1, -1],
        )?;
        replay.row("chi_S", &chi_s, &[55, 7, 1, 3, 0, 1, 1, 1, 0, 0])?;
        replay.row("chi_A", &chi_a, &[45, -3, 0, 1, 0, 0, -1, -1, 1, 1])?;
        replay.int("<chi_S, chi_S>", &ip(&chi_s, &chi_s)?, 3)?;
        replay.int("<chi_A, chi_A>", &ip(&chi_a, &chi_a)?, 1)?;
        replay.int("<chi_S, chi_0>", &ip(&chi_s, &chi0)?, 1)?;
        replay.int("<chi_S, chi_1>", &ip(&chi_s, &chi1)?, 1)?;
    }
    let chi8 = chi_a;
    let (chi7, mults) =
        reduce_by_known(&chi_s, &[&chi0, &chi1]).map_err(DerivationError::ClassFun)?;
    if mults != vec![BigInt::one(), BigInt::one()] {
        return Err(check_err("chi_7", "unexpected multiplicities in chi_S".into()));
    }
    require_norm_one("chi_7", &chi7)?;
    {
        let mut replay = Replay::new(&mut log);
        replay.row("chi_7 = chi_S - chi_0 - chi_1", &chi7, &[44, 4, -1, 0, -1, 1, 0, 0, 0, 0])?;
    }
    log.step(
        "squares of the permutation character",
        "ref/G11/squares",
        "chi_7, chi_8",
        "44,45",
        1,
        vec!["chi_8 = antisymmetric part; chi_7 = symmetric part minus chi_0 and chi_1".into()],
    );

    // Induce the nontrivial linear character of the stabilizer.
    let linear = child
        .table
        .rows
        .iter()
        .find(|r| {
            r.degree_integer() == Some(BigInt::one())
                && r.values().iter().any(|v| *v != CycNum::one())
        })
        .ok_or_else(|| check_err("G11 induction", "stabilizer linear row missing".into()))?;
    let chi4 = induce(linear, &fusion, &frame)?;
    require_norm_one("chi_4", &chi4)?;
    let chi9 = chi4.sym_alt_square(SquareMode::Antisymmetric);
    require_norm_one("chi_9", &chi9)?;
    {
        let mut replay = Replay::new(&mut log);
        replay.row("chi_4 (induced linear)", &chi4, &[11, 3, 2, -1, 1, 0, -1, -1, 0, 0])?;
        replay.row(
            "chi_9 (antisymmetric square of chi_4)",
            &chi9,
            &[55, -1, 1, -1, 0, -1, 1, 1, 0, 0],
        )?;
    }
    log.step(
        "induce the stabilizer linear character and take its antisymmetric square",
        "ref/G11/induction",
        "chi_4, chi_9",
        "11,55",
        1,
        vec![],
    );

    let known = [&chi0, &chi1, &chi4, &chi7, &chi8, &chi9];
    let sum_sq: u64 = known
        .iter()
        .map(|r| {
            let d = r.degree_integer().expect("integral degree").to_u64().unwrap();
            d * d
        })
        .sum();
    let residual = g.order() - sum_sq;
    let degrees = solve_degree_pair(residual, 2)?;
    if degrees != vec![10, 16] {
        return Err(check_err(
            "degree equation",
            format!("expected degrees 10 and 16, found {degrees:?}"),
        ));
    }
    log.step(
        "degree equation for the two conjugate pairs",
        "ref/G11/degrees",
        "d_1, d_2",
        "10,16",
        "-",
        vec![format!(
            "residual {residual} = 2(d_1^2 + d_2^2); {} = 10^2 + 16^2 is the unique representation",
            residual / 2
        )],
    );
    let solution = solve_conjugate_columns(&frame, &known, &degrees)?;
    if !solution
        .log
        .iter()
        .any(|line| line.contains("78/89") && line.contains("rejected"))
    {
        return Err(check_err(
            "column 2^4",
            "expected the non-integral candidate 78/89 to be found and rejected".into(),
        ));
    }
    let checks = solution.log.clone();
    log.step(
        "solve the column relations for both conjugate pairs",
        "ref/G11/columns",
        "chi_2, chi_3, chi_5, chi_6",
        "10,10,16,16",
        1,
        checks,
    );
    let pair10 = (&solution.rows[0], &solution.rows[1]);
    let pair16 = (&solution.rows[2], &solution.rows[3]);
    {
        // The solved values: -2, 1, 0, 0, 1 for the 10-pair; 0, -2, 0, 1, 0
        // for the 16-pair; sqrt(-2) resp. the Gauss sum on the non-real
        // columns.
        let alpha = crate::cyclotomic::sqrt_minus_two();
        let beta = CycNum::gauss_quadratic(11)?;
        let mut replay = Replay::new(&mut log);
        let b = beta.to_string();
        let bb = beta.conj().to_string();
        let a = alpha.to_string();
        let ab = alpha.conj().to_string();
        replay.row_literals_up_to_pair_orientation(
            "solved 10-dimensional pair",
            pair10.0,
            &["10", "-2", "1", "0", "0", "1", &a, &ab, "-1", "-1"],
        )?;
        replay.row_literals_up_to_pair_orientation(
            "solved 16-dimensional pair",
            pair16.0,
            &["16", "0", "-2", "0", "1", "0", "0", "0", &b, &bb],
        )?;
    }

    let rows = vec![
        chi0,
        chi1,
        pair10.0.clone(),
        pair10.1.clone(),
        chi4,
        pair16.0.clone(),
        pair16.1.clone(),
        chi7,
        chi8,
        chi9,
    ];
    let table = assemble(&frame, rows, &mut log)?;
    Ok(DerivationOutcome {
        id: GroupId::G11,
        group: g,
        frame,
        table,
        log,
        chain: Some(Box::new(child)),
    })
}

pub fn derive_g12(g: GroupData) -> Result<DerivationOutcome, DerivationError> {
    verify_sharp(&g, 5, "G12")?;
    let frame = ClassFrame::from_group("G12", &g);
    let mut log = DerivationLog::new("G12");
    log.step(
        "verify sharp 5-transitivity of the fixture",
        "ref/setup",
        "G12",
        g.order(),
        "-",
        vec![],
    );

    let sub = g
        .stabilizer(&[g.degree()])?
        .restricted_dropping(&[g.degree()])?;
    let child = derive_g11(sub)?;
    let fusion = g.fusion_from(&child.group)?;
    log.step(
        "derive the point-stabilizer table and its class fusion",
        "ref/G12/stabilizer",
        "G11 table",
        child.group.order(),
        "-",
        vec![format!("fusion map: {fusion:?}")],
    );

    let chi0 = ClassFunction::trivial(frame.clone());
    let chi1 = perm_character(frame.clone(), &g).map_err(DerivationError::ClassFun)?;
    {
        let mut replay = Replay::new(&mut log);
        replay.row_diverging(
            errata::G12_INTERMEDIATE_CHI1,
            "G12 permutation character",
            &chi1,
            &[11, -1, 3, 2, -1, 3, -1, 1, 0, -1, -1, 1, -1, 0, 0],
            &[11, 3, -1, 2, -1, 3, -1, 1, 0, -1, 1, -1, -1, 0, 0],
            "the recorded intermediate row transposes the column pairs (2^4, 2^6) and (2^18^1, 4^18^1); the final reference table agrees with fix(g) - 1",
        )?;
    }
    let chi_s = chi1.sym_alt_square(SquareMode::Symmetric);
    let chi_a = chi1.sym_alt_square(SquareMode::Antisymmetric);
    {
        let mut replay = Replay::new(&mut log);
        replay.row(
            "chi_S",
            &chi_s,
            &[66, 10, 6, 3, 0, 6, 2, 1, 1, 0, 2, 0, 1, 0, 0],
        )?;
        replay.row(
            "chi_A",
            &chi_a,
            &[55, -1, -5, 1, 1, 3, -1, 0, -1, 1, -1, 1, 0, 0, 0],
        )?;
        replay.int("<chi_S, chi_S>", &ip(&chi_s, &chi_s)?, 3)?;
        replay.int("<chi_A, chi_A>", &ip(&chi_a, &chi_a)?, 1)?;
        replay.int("<chi_S, chi_0>", &ip(&chi_s, &chi0)?, 1)?;
        replay.int("<chi_S, chi_1>", &ip(&chi_s, &chi1)?, 1)?;
    }
    let chi8 = chi_a;
    let (chi6, mults) =
        reduce_by_known(&chi_s, &[&chi0, &chi1]).map_err(DerivationError::ClassFun)?;
    if mults != vec![BigInt::one(), BigInt::one()] {
        return Err(check_err("chi_6", "unexpected multiplicities in chi_S".into()));
    }
    require_norm_one("chi_6", &chi6)?;
    require_norm_one("chi_8", &chi8)?;
    {
        let mut replay = Replay::new(&mut log);
        replay.row(
            "chi_6 = chi_S - chi_0 - chi_1",
            &chi6,
            &[54, 6, 6, 0, 0, 2, 2, -1, 0, 0, 0, 0, 1, -1, -1],
        )?;
    }
    log.step(
        "permutation character and its squares",
        "ref/G12/squares",
        "chi_1, chi_6, chi_8",
        "11,54,55",
        1,
        vec![],
    );

    // Inductions from the stabilizer.
    let child_rows = &child.table.rows;
    let find_row = |pred: &dyn Fn(&ClassFunction) -> bool, what: &str| -> Result<&ClassFunction, DerivationError> {
        child_rows
            .iter()
            .find(|r| pred(r))
            .ok_or_else(|| check_err("G12 induction", format!("missing stabilizer row: {what}")))
    };
    let is_deg = |r: &ClassFunction, d: i64| r.degree_integer() == Some(BigInt::from(d));
    let trivial_row = find_row(&|r| r.values().iter().all(|v| *v == CycNum::one()), "trivial")?;
    let ten_integer = find_row(
        &|r| is_deg(r, 10) && r.values().iter().all(CycNum::is_rational),
        "integer-valued degree 10",
    )?;
    let ten_complex = find_row(
        &|r| is_deg(r, 10) && r.values().iter().any(|v| !v.is_rational()),
        "complex degree 10",
    )?;
    let sixteen_complex = find_row(
        &|r| is_deg(r, 16) && r.values().iter().any(|v| !v.is_rational()),
        "complex degree 16",
    )?;
    let fifty_five = find_row(&|r| is_deg(r, 55), "degree 55")?;

    let ind_trivial = induce(trivial_row, &fusion, &frame)?;
    let expect_perm = chi0.add(&chi1).map_err(DerivationError::ClassFun)?;
    if ind_trivial.values() != expect_perm.values() {
        return Err(check_err(
            "induction of the trivial character",
            "does not equal chi_0 + chi_1".into(),
        ));
    }
    let ind_ten = induce(ten_integer, &fusion, &frame)?;
    let expect_ten = chi1
        .add(&chi6)
        .and_then(|x| x.add(&chi8))
        .map_err(DerivationError::ClassFun)?;
    if ind_ten.values() != expect_ten.values() {
        return Err(check_err(
            "induction of the integer-valued 10",
            "does not equal chi_1 + chi_6 + chi_8".into(),
        ));
    }
    let chi12 = induce(ten_complex, &fusion, &frame)?;
    require_norm_one("chi_12", &chi12)?;
    let chi_v = induce(fifty_five, &fusion, &frame)?;
    let chi_b = induce(sixteen_complex, &fusion, &frame)?;
    {
        let beta = CycNum::gauss_quadratic(11)?;
        let b = beta.to_string();
        let bb = beta.conj().to_string();
        let mut replay = Replay::new(&mut log);
        replay.row_diverging(
            errata::G12_CHI12_SIX_COLUMNS,
            "chi_12 (induced complex 10)",
            &chi12,
            &[120, -8, 0, 3, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1, -1],
            &[120, -8, 0, 3, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, -1],
            "the recorded row transposes the column pair (2^13^16^1, 6^2): induction from the stabilizer vanishes on the fixed-point-free class 6^2",
        )?;
        replay.row_diverging(
            errata::G12_CHI_V_COLUMNS,
            "chi_V (induced 55)",
            &chi_v,
            &[660, -4, 0, 3, 0, 0, -4, 0, 0, -1, 2, 0, 0, 0, 0],
            &[660, -4, 0, 3, 0, -4, 0, 0, -1, 0, 2, 0, 0, 0, 0],
            "the recorded row transposes the column pairs (4^2, 2^24^2) and (2^13^16^1, 6^2): induction vanishes on fixed-point-free classes",
        )?;
        replay.row_literals_up_to_pair_orientation(
            "chi_B (induced complex 16)",
            &chi_b,
            &[
                "192", "0", "0", "-6", "0", "0", "0", "2", "0", "0", "0", "0", "0", &b, &bb,
            ],
        )?;
        replay.int("<chi_12, chi_12>", &ip(&chi12, &chi12)?, 1)?;
        replay.int("<chi_B, chi_B>", &ip(&chi_b, &chi_b)?, 2)?;
        replay.int("<chi_V, chi_V>", &ip(&chi_v, &chi_v)?, 6)?;
        replay.int("<chi_V, chi_12>", &ip(&chi_v, &chi12)?, 1)?;
    }
    log.step(
        "induce from the stabilizer",
        "ref/G12/induction",
        "chi_12, chi_V, chi_B",
        "120,660,192",
        "1,6,2",
        vec![
            "trivial induces to chi_0 + chi_1".into(),
            "the integer-valued 10 induces to chi_1 + chi_6 + chi_8".into(),
        ],
    );

    // Restrictions of symmetric-group characters by partition.
    let restrict = |parts: &[u32]| -> Result<ClassFunction, DerivationError> {
        restrict_sym_character(&Partition::new(parts), &frame).map_err(DerivationError::IndRes)
    };
    let r93 = restrict(&[9, 3])?;
    let r_lambda_a = restrict(&[9, 1, 1, 1])?;
    let r84 = restrict(&[8, 4])?;
    let r75 = restrict(&[7, 5])?;
    let r_lambda_b = restrict(&[8, 1, 1, 1, 1])?;
    {
        let mut replay = Replay::new(&mut log);
        replay.row(
            "restriction of 9,3",
            &r93,
            &[154, 10, -6, 1, 4, -2, -2, -1, 1, 0, 0, 0, -1, 0, 0],
        )?;
        replay.row(
            "restriction of 9,1,1,1",
            &r_lambda_a,
            &[165, -11, 5, 3, 3, 1, 1, 0, 1, -1, -1, -1, 0, 0, 0],
        )?;
        replay.row(
            "restriction of 8,4",
            &r84,
            &[275, 11, 15, 5, -4, -1, 3, 0, -1, 0, -1, 1, 0, 0, 0],
        )?;
        replay.row(
            "restriction of 7,5",
            &r75,
            &[297, 9, -15, 0, 0, 5, -3, 2, 0, 0, -1, -1, 0, 0, 0],
        )?;
        replay.row_diverging(
            errata::G12_LAMBDA_B_SIX_COLUMNS,
            "restriction of 8,1,1,1,1",
            &r_lambda_b,
            &[330, -6, 10, 6, -3, -2, -2, 0, 1, 0, 0, 0, 0, 0, 0],
            &[330, -6, 10, 6, -3, -2, -2, 0, 0, 1, 0, 0, 0, 0, 0],
            "the recorded row transposes the column pair (2^13^16^1, 6^2)",
        )?;
    }

    // The degree-320 compound is recorded under the label 3,2,1, which is
    // not a partition of 12. Locate the actual partition by exhaustive
    // search over all 77 partitions of 12 against the recorded row.
    let recorded_320: Vec<CycNum> = [
        "320", "0", "0", "-4", "-4", "0", "0", "0", "0", "0", "0", "0", "0", "1", "1",
    ]
    .iter()
    .map(|s| s.parse().map_err(DerivationError::Cyc))
    .collect::<Result<_, _>>()?;
    let matching: Vec<Partition> = Partition::all_of(12)
        .into_iter()
        .filter(|lam| {
            restrict_sym_character(lam, &frame)
                .map(|r| r.values() == recorded_320.as_slice())
                .unwrap_or(false)
        })
        .collect();
    // The two matches are a conjugate pair: all classes here are even
    // permutations, so conjugate partitions restrict identically.
    let expected: Vec<Partition> = vec![
        Partition::new(&[9, 2, 1]),
        Partition::new(&[3, 2, 1, 1, 1, 1, 1, 1, 1]),
    ];
    if matching != expected {
        return Err(check_err(
            "chi_E",
            format!("expected the conjugate pair 9,2,1 / 3,2,1^7, search found {matching:?}"),
        ));
    }
    let chi_e = restrict_sym_character(&matching[0], &frame)?;
    log.diverge(
        errata::G12_CHI_E_UNLABELED,
        "restriction table, degree-320 row",
        "labeled as the restriction of the partition character 3,2,1",
        "3,2,1 is not a partition of 12; exhaustive search identifies 9,2,1 and its conjugate 3,2,1,1,1,1,1,1,1",
        "the recorded label drops the trailing ones of 3,2,1^7; the row is used as the restriction of 9,2,1, which equals it entrywise",
    );
    log.step(
        "restrict six partition characters, identifying the mislabeled one by search",
        "ref/G12/restrictions",
        "six compounds",
        "154,165,275,297,320,330",
        "-",
        vec![
            "exhaustive search over all 77 partitions of 12 matches the degree-320 row to 9,2,1 and its conjugate".into(),
        ],
    );

    // chi_5 from the restriction of 9,1,1,1.
    {
        let mut replay = Replay::new(&mut log);
        replay.int("<lambda_A, lambda_A>", &ip(&r_lambda_a, &r_lambda_a)?, 2)?;
        replay.int("<lambda_A, chi_12>", &ip(&r_lambda_a, &chi12)?, 1)?;
    }
    let chi5 = r_lambda_a.sub(&chi12).map_err(DerivationError::ClassFun)?;
    require_norm_one("chi_5", &chi5)?;
    {
        let mut replay = Replay::new(&mut log);
        replay.row(
            "chi_5 = restriction of 9,1,1,1 minus chi_12",
            &chi5,
            &[45, -3, 5, 0, 3, 1, 1, 0, 0, -1, -1, -1, 0, 1, 1],
        )?;
    }

    // chi_2 from the restrictions of 8,1,1,1,1 and 8,4.
    let chi_x = r_lambda_b.sub(&chi12).map_err(DerivationError::ClassFun)?;
    let chi_y = r84.sub(&chi6).map_err(DerivationError::ClassFun)?;
    {
        let mut replay = Replay::new(&mut log);
        replay.int("<lambda_B, lambda_B>", &ip(&r_lambda_b, &r_lambda_b)?, 3)?;
        replay.int("<lambda_B, chi_12>", &ip(&r_lambda_b, &chi12)?, 1)?;
        replay.int("<8,4 restriction, itself>", &ip(&r84, &r84)?, 4)?;
        replay.int("<8,4 restriction, chi_6>", &ip(&r84, &chi6)?, 1)?;
        replay.row(
            "chi_X = restriction of 8,1,1,1,1 minus chi_12",
            &chi_x,
            &[210, 2, 10, 3, -3, -2, -2, 0, -1, 1, 0, 0, 0, 1, 1],
        )?;
        replay.row(
            "chi_Y = restriction of 8,4 minus chi_6",
            &chi_y,
            &[221, 5, 9, 5, -4, -3, 1, 1, -1, 0, -1, 1, -1, 1, 1],
        )?;
        replay.int("<chi_X, chi_X>", &ip(&chi_x, &chi_x)?, 2)?;
        replay.int("<chi_Y, chi_Y>", &ip(&chi_y, &chi_y)?, 3)?;
        replay.int("<chi_X, chi_Y>", &ip(&chi_x, &chi_y)?, 2)?;
    }
    let chi2 = chi_y.sub(&chi_x).map_err(DerivationError::ClassFun)?;
    require_norm_one("chi_2", &chi2)?;
    {
        let mut replay = Replay::new(&mut log);
        replay.row(
            "chi_2 = chi_Y - chi_X",
            &chi2,
            &[11, 3, -1, 2, -1, -1, 3, 1, 0, -1, -1, 1, -1, 0, 0],
        )?;
    }

    // chi_9 via the squares of chi_2.
    let chi2_sym = chi2.sym_alt_square(SquareMode::Symmetric);
    let expect_sym = chi0
        .add(&chi2)
        .and_then(|x| x.add(&chi6))
        .map_err(DerivationError::ClassFun)?;
    if chi2_sym.values() != expect_sym.values() {
        return Err(check_err(
            "symmetric square of chi_2",
            "does not equal chi_0 + chi_2 + chi_6".into(),
        ));
    }
    let chi9 = chi2.sym_alt_square(SquareMode::Antisymmetric);
    require_norm_one("chi_9", &chi9)?;
    {
        let mut replay = Replay::new(&mut log);
        replay.row_diverging(
            errata::G12_CHI9_FOUR_COLUMNS,
            "chi_9 (antisymmetric square of chi_2)",
            &chi9,
            &[55, -1, -5, 1, 1, 3, -1, 0, -1, 1, 1, -1, 0, 0, 0],
            &[55, -1, -5, 1, 1, -1, 3, 0, -1, 1, 1, -1, 0, 0, 0],
            "the recorded row transposes the column pair (4^2, 2^24^2); as recorded, the final table fails column orthogonality between 4^2 and 2^18^1",
        )?;
    }
    log.step(
        "subtractions and squares produce chi_5, chi_2 and chi_9",
        "ref/G12/subtractions",
        "chi_5, chi_2, chi_9",
        "45,11,55",
        1,
        vec!["symmetric square of chi_2 equals chi_0 + chi_2 + chi_6".into()],
    );

    // Restriction-multiplicity table against all eight known irreducibles.
    let knowns: Vec<(&str, &ClassFunction)> = vec![
        ("chi_0", &chi0),
        ("chi_1", &chi1),
        ("chi_2", &chi2),
        ("chi_5", &chi5),
        ("chi_6", &chi6),
        ("chi_8", &chi8),
        ("chi_9", &chi9),
        ("chi_12", &chi12),
    ];
    let compound_list: Vec<(&str, &ClassFunction)> = vec![
        ("9,3", &r93),
        ("lambda_A", &r_lambda_a),
        ("8,4", &r84),
        ("7,5", &r75),
        ("chi_E", &chi_e),
        ("lambda_B", &r_lambda_b),
        ("chi_V", &chi_v),
    ];
    let recorded_mults: [[i64; 8]; 7] = [
        [0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 1],
        [0, 0, 1, 0, 1, 0, 0, 0],
        [0, 1, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 1, 0, 0, 0, 1],
    ];
    let mut mult_checks = Vec::new();
    for (ci, (cname, compound)) in compound_list.iter().enumerate() {
        for (ki, (kname, known)) in knowns.iter().enumerate() {
            let m = ip(compound, known)?;
            let recorded = recorded_mults[ci][ki];
            let location = format!("<{cname}, {kname}>");
            let mut replay = Replay::new(&mut log);
            match (ci, ki) {
                // 7,5 row: the recorded 1 under chi_6 belongs under chi_8.
                (3, 4) => replay.int_diverging(
                    errata::G12_RESTRICTION_75,
                    &location,
                    &m,
                    1,
                    0,
                    "the constituent of the 7,5 restriction recorded under chi_6 is actually chi_8",
                )?,
                (3, 5) => replay.int(&location, &m, 1)?,
                // chi_V row: the recorded 1 under chi_5 belongs under chi_9.
                (6, 3) => replay.int_diverging(
                    errata::G12_RESTRICTION_V,
                    &location,
                    &m,
                    1,
                    0,
                    "the constituent of the induced 55 recorded under chi_5 is actually chi_9",
                )?,
                (6, 6) => replay.int(&location, &m, 1)?,
                _ => replay.int(&location, &m, recorded)?,
            }
            mult_checks.push(format!("{location} = {m}"));
        }
    }
    log.step(
        "inner products of every compound with the known irreducibles",
        "ref/G12/restriction-table",
        "multiplicity table",
        "-",
        "-",
        mult_checks,
    );

    // The five overlapping compounds.
    let known_refs: Vec<&ClassFunction> = knowns.iter().map(|(_, k)| *k).collect();
    let chi_c = r93.clone();
    let (chi_d, d_mults) =
        reduce_by_known(&r75, &known_refs).map_err(DerivationError::ClassFun)?;
    if d_mults.iter().sum::<BigInt>() != BigInt::from(2) {
        return Err(check_err("chi_D", "expected two known constituents in 7,5".into()));
    }
    let (chi_f, _) = reduce_by_known(&r_lambda_b, &known_refs).map_err(DerivationError::ClassFun)?;
    let (chi_w, _) = reduce_by_known(&chi_v, &known_refs).map_err(DerivationError::ClassFun)?;
    {
        let mut replay = Replay::new(&mut log);
        replay.row_diverging(
            errata::G12_CHI_D_THREE_CUBED,
            "chi_D (7,5 restriction minus its known constituents)",
            &chi_d,
            &[231, 7, -9, -1, 0, -1, -1, 1, 1, 0, -1, -1, 1, 0, 0],
            &[231, 7, -9, -3, 0, -1, -1, 1, 1, 0, -1, -1, 1, 0, 0],
            "the recorded value -1 at 3^3 is inconsistent with the recorded Gram matrix; the subtraction forces -3",
        )?;
        replay.row(
            "chi_F (8,1,1,1,1 restriction minus chi_12)",
            &chi_f,
            &[210, 2, 10, 3, -3, -2, -2, 0, -1, 1, 0, 0, 0, 1, 1],
        )?;
        replay.row(
            "chi_W (induced 55 minus its known constituents)",
            &chi_w,
            &[485, 5, 5, -1, -1, -3, -3, 0, -1, -1, 1, 1, 0, 1, 1],
        )?;
    }

    let compounds = [chi_c, chi_d, chi_e, chi_f, chi_w];
    let recorded_gram: [[i64; 5]; 5] = [
        [2, 1, 0, 0, 1],
        [1, 2, 1, 0, 1],
        [0, 1, 2, 1, 2],
        [0, 0, 1, 2, 2],
        [1, 1, 2, 2, 4],
    ];
    let names = ["chi_C", "chi_D", "chi_E", "chi_F", "chi_W"];
    for i in 0..5 {
        for j in 0..5 {
            let m = ip(&compounds[i], &compounds[j])?;
            let mut replay = Replay::new(&mut log);
            replay.int(
                &format!("gram <{}, {}>", names[i], names[j]),
                &m,
                recorded_gram[i][j],
            )?;
        }
    }
    log.step(
        "Gram matrix of the five overlapping compounds",
        "ref/G12/gram",
        "5x5 matrix",
        "-",
        "-",
        vec!["all 25 inner products equal the recorded matrix".into()],
    );

    let resolution = resolve_overlap_system(&compounds)?;
    // Parts sorted by degree: 55, 66, 99, 144, 176.
    let expect_degrees: Vec<BigInt> = [55i64, 66, 99, 144, 176]
        .iter()
        .map(|&d| BigInt::from(d))
        .collect();
    if resolution.part_degrees != expect_degrees {
        return Err(check_err(
            "overlap resolution",
            format!("unexpected part degrees {:?}", resolution.part_degrees),
        ));
    }
    // Resolved incidence vs the recorded decomposition system. With parts
    // indexed by ascending degree (55, 66, 99, 144, 176) the recorded
    // system reads C = {99, 55}, D = {55, 176}, E = {176, 144},
    // F = {176, 66}, W = {99, 176, 144, 66}.
    let recorded_f: Vec<usize> = vec![1, 4]; // degrees 66 and 176
    let resolved_f = resolution.incidence[3].clone();
    if resolved_f == recorded_f {
        return Err(check_err(
            "overlap resolution",
            "expected the resolved chi_F to differ from the recorded system".into(),
        ));
    }
    if resolved_f != vec![1, 3] {
        return Err(check_err(
            "overlap resolution",
            format!("chi_F resolved to parts {resolved_f:?}, expected degrees 66 and 144"),
        ));
    }
    log.diverge(
        errata::G12_CHI_F_DECOMPOSITION,
        "decomposition of chi_F",
        "chi_F = gamma + epsilon (parts of degree 176 and 66)",
        "chi_F = delta + epsilon (parts of degree 144 and 66)",
        "degree accounting (176 + 66 = 242 != 210 = 144 + 66) and the Gram matrix entry <chi_D, chi_F> = 0 both force the computed reading; the recorded alpha-extraction formula is consistent with it",
    );
    // The recorded extraction formula for alpha (the degree-99 part).
    let half = crate::cyclotomic::rat_frac(1, 2);
    let alpha_formula = {
        let w = &compounds[4];
        let f = &compounds[3];
        let c = &compounds[0];
        let d = &compounds[1];
        let diff = w
            .sub(f)
            .and_then(|x| x.add(c))
            .and_then(|x| x.sub(d))
            .map_err(DerivationError::ClassFun)?;
        ClassFunction::new(
            frame.clone(),
            diff.values().iter().map(|v| v.scale(&half)).collect(),
        )
    };
    let alpha = &resolution.parts[2];
    if alpha_formula.values() != alpha.values() {
        return Err(check_err(
            "alpha extraction",
            "(chi_W - chi_F + chi_C - chi_D)/2 differs from the resolved degree-99 part".into(),
        ));
    }
    let chi7 = resolution.parts[0].clone(); // 55
    let chi10 = resolution.parts[1].clone(); // 66
    let chi11 = resolution.parts[2].clone(); // 99
    let chi13 = resolution.parts[3].clone(); // 144
    let chi14 = resolution.parts[4].clone(); // 176
    log.step(
        "resolve the overlap system into five new irreducibles",
        "ref/G12/overlap",
        "chi_7, chi_10, chi_11, chi_13, chi_14",
        "55,66,99,144,176",
        1,
        vec![
            format!(
                "{} incidence hypotheses examined, {} consistent, one distinct solution",
                resolution.hypotheses_considered, resolution.consistent_hypotheses
            ),
            "alpha matches the recorded extraction formula (chi_W - chi_F + chi_C - chi_D)/2".into(),
        ],
    );

    // The last conjugate pair from the induced complex 16.
    let all_known: Vec<&ClassFunction> = vec![
        &chi0, &chi1, &chi2, &chi5, &chi6, &chi7, &chi8, &chi9, &chi10, &chi11, &chi12, &chi13,
        &chi14,
    ];
    let (chi3, b_mults) = reduce_by_known(&chi_b, &all_known).map_err(DerivationError::ClassFun)?;
    let chi14_mult = &b_mults[12];
    if *chi14_mult != BigInt::one() || b_mults.iter().sum::<BigInt>() != BigInt::one() {
        return Err(check_err(
            "chi_3",
            "chi_B should contain exactly one known constituent, chi_14".into(),
        ));
    }
    require_norm_one("chi_3", &chi3)?;
    let chi4 = chi3.conj();
    log.step(
        "subtract chi_14 from the induced complex 16 and conjugate",
        "ref/G12/final-pair",
        "chi_3, chi_4",
        16,
        1,
        vec!["<chi_B, chi_14> = 1; the residual and its conjugate complete the table".into()],
    );

    let rows = vec![
        chi0, chi1, chi2, chi3, chi4, chi5, chi6, chi7, chi8, chi9, chi10, chi11, chi12, chi13,
        chi14,
    ];
    let table = assemble(&frame, rows, &mut log)?;

    // Identify the restrictions of 10,2 and 10,1,1 among the final rows
    // (their recorded labels use a pre-relabeling numbering).
    for parts in [[10u32, 2, 0], [10, 1, 1]] {
        let lam = Partition::new(&parts);
        let r = restrict_sym_character(&lam, &frame).map_err(DerivationError::IndRes)?;
        let found = table
            .rows
            .iter()
            .zip(table.row_labels.iter())
            .find(|(row, _)| row.values() == r.values())
            .map(|(_, label)| label.clone());
        match found {
            Some(label) => log.note(format!(
                "the restriction of the partition character {lam} equals final row {label}"
            )),
            None => log.note(format!(
                "the restriction of the partition character {lam} matches no final row"
            )),
        }
    }

    Ok(DerivationOutcome {
        id: GroupId::G12,
        group: g,
        frame,
        table,
        log,
        chain: Some(Box::new(child)),
    })
}
