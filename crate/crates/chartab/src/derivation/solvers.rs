//! The three solving operations used by the derivations: the degree
//! equation, completion of conjugate character pairs from the column
//! relations, and resolution of overlapping compound characters from a
//! Gram matrix.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::classfun::{ClassFrame, ClassFunction};
use crate::cyclotomic::{CycNum, Rational};
use crate::error::DerivationError;

/// All ways of writing `target` as a multiset of `count` positive squares,
/// each returned multiset sorted ascending.
pub fn square_representations(target: u64, count: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(target: u64, count: usize, min: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if count == 0 {
            if target == 0 {
                out.push(current.clone());
            }
            return;
        }
        let mut d = min;
        while d * d * count as u64 <= target {
            if d * d <= target {
                current.push(d);
                rec(target - d * d, count - 1, d, current, out);
                current.pop();
            }
            d += 1;
        }
    }
    rec(target, count, 1, &mut current, &mut out);
    out
}

/// Splits the residual sum of squared degrees across conjugate pairs:
/// `residual = 2 (d_1^2 + ... + d_count^2)` must have exactly one
/// representation, which is returned sorted ascending.
pub fn solve_degree_pair(residual: u64, pair_count: usize) -> Result<Vec<u64>, DerivationError> {
    if !residual.is_multiple_of(2) {
        return Err(DerivationError::DegreeEquation { found: 0 });
    }
    let reps = square_representations(residual / 2, pair_count);
    if reps.len() != 1 {
        return Err(DerivationError::DegreeEquation { found: reps.len() });
    }
    Ok(reps[0].clone())
}

/// Result of completing the final conjugate pairs of a table.
pub struct ColumnSolution {
    /// New rows, one conjugate pair per requested degree: the first row of
    /// each pair carries the positive-imaginary value on the first class
    /// of each non-real class pair.
    pub rows: Vec<ClassFunction>,
    /// Human-readable record of each column system, including rejected
    /// candidate solutions.
    pub log: Vec<String>,
}

/// Solves for the remaining conjugate pairs of irreducible rows using the
/// column orthogonality relations.
///
/// Per real class there is one linear relation (the column against the
/// identity column) and one quadratic relation (the column norm); the
/// rational solutions are filtered down to rational integers. Per
/// non-real class pair the unknowns are conjugate values in the quadratic
/// subfield of Q(zeta_m) fixed by the power map of the class; traces come
/// from column relations against the solved real columns and norms from
/// the column norm, with an algebraic-integrality filter.
pub fn solve_conjugate_columns(
    frame: &Arc<ClassFrame>,
    known: &[&ClassFunction],
    pair_degrees: &[u64],
) -> Result<ColumnSolution, DerivationError> {
    let identity = frame.identity_class();
    let npairs = pair_degrees.len();
    if npairs == 0 || npairs > 2 {
        return Err(DerivationError::ColumnSolve {
            column: "-".into(),
            message: format!("{npairs} conjugate pairs unsupported"),
        });
    }
    let mut log = Vec::new();
    let col_err = |column: &str, message: String| DerivationError::ColumnSolve {
        column: column.into(),
        message,
    };

    let known_rational_at = |c: usize, column: &str| -> Result<Vec<Rational>, DerivationError> {
        known
            .iter()
            .map(|chi| {
                chi.value(c).as_rational().ok_or_else(|| {
                    col_err(
                        column,
                        format!("known character value {} is irrational", chi.value(c)),
                    )
                })
            })
            .collect()
    };
    let known_degrees: Vec<Rational> = known
        .iter()
        .map(|chi| chi.degree().as_rational().expect("integral degree"))
        .collect();

    // Partition the classes.
    let mut real_classes = Vec::new();
    let mut nonreal_pairs = Vec::new();
    for (c, fc) in frame.classes.iter().enumerate() {
        if c == identity {
            continue;
        }
        if fc.real {
            real_classes.push(c);
        } else if c < fc.inverse_class {
            nonreal_pairs.push((c, fc.inverse_class));
        }
    }

    // values[p][c] for the first row of pair p.
    let mut values: Vec<Vec<CycNum>> =
        vec![vec![CycNum::zero(); frame.len()]; npairs];
    for (p, &d) in pair_degrees.iter().enumerate() {
        values[p][identity] = CycNum::from_integer(d as i64);
    }

    // --- real class columns ---
    for &c in &real_classes {
        let label = frame.classes[c].label.clone();
        // Values on a real class must be rational: every power map
        // coprime to the element order has to fix the class.
        let m = frame.classes[c].element_order;
        let stable = (1..m)
            .filter(|k| k.gcd(&m) == 1)
            .all(|k| frame.power_class(c, k) == c);
        if !stable {
            return Err(col_err(
                &label,
                "class is not rational (power map moves it); unsupported".into(),
            ));
        }
        let k_at = known_rational_at(c, &label)?;
        let s1: Rational = known_degrees
            .iter()
            .zip(k_at.iter())
            .map(|(d, v)| d * v)
            .sum();
        let s2: Rational = k_at.iter().map(|v| v * v).sum();
        let budget = Rational::from_integer(BigInt::from(frame.centralizer_order(c))) - s2;
        // 2 sum d_p v_p = -s1 ; 2 sum v_p^2 = budget
        let candidates: Vec<Vec<Rational>> = match npairs {
            1 => {
                let d = Rational::from_integer(BigInt::from(pair_degrees[0]));
                let v = -s1.clone() / (Rational::from_integer(BigInt::from(2)) * d);
                let two = Rational::from_integer(BigInt::from(2));
                if &two * &v * &v != budget {
                    return Err(col_err(
                        &label,
                        format!("linear solution {v} violates the column norm"),
                    ));
                }
                vec![vec![v]]
            }
            2 => {
                let d1 = Rational::from_integer(BigInt::from(pair_degrees[0]));
                let d2 = Rational::from_integer(BigInt::from(pair_degrees[1]));
                // v1 = (t - d2 v2)/d1 with t = -s1/2
                let t = -s1.clone() / Rational::from_integer(BigInt::from(2));
                // 2(v1^2 + v2^2) = budget
                let two = Rational::from_integer(BigInt::from(2));
                let a = &two * (&d2 * &d2 / (&d1 * &d1) + Rational::one());
                let b = -&two * &two * &t * &d2 / (&d1 * &d1);
                let cc = &two * &t * &t / (&d1 * &d1) - budget.clone();
                rational_quadratic_roots(&a, &b, &cc)
                    .into_iter()
                    .map(|v2| {
                        let v1 = (&t - &d2 * &v2) / &d1;
                        vec![v1, v2]
                    })
                    .collect()
            }
            _ => unreachable!(),
        };
        if candidates.is_empty() {
            return Err(col_err(&label, "no rational solutions".into()));
        }
        let mut admissible = Vec::new();
        for cand in &candidates {
            let ok = cand.iter().all(|v| v.denom().is_one());
            let rendered = cand
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ");
            if ok {
                log.push(format!("column {label}: accepted ({rendered})"));
                admissible.push(cand.clone());
            } else {
                log.push(format!(
                    "column {label}: rejected ({rendered}): not expressible as a sum of roots of unity (integrality filter)"
                ));
            }
        }
        if admissible.len() != 1 {
            return Err(col_err(
                &label,
                format!("{} admissible solutions after filtering", admissible.len()),
            ));
        }
        for (p, v) in admissible[0].iter().enumerate() {
            values[p][c] = CycNum::from_rational(v.clone());
        }
    }

    // --- non-real class pair columns ---
    // First pass: per column pair, enumerate every candidate assignment
    // admitted by the trace system, the column norm, and the
    // algebraic-integrality filter.
    struct Pending {
        c: usize,
        cbar: usize,
        candidates: Vec<Vec<CycNum>>,
    }
    let mut pending: Vec<Pending> = Vec::new();
    for &(c, cbar) in &nonreal_pairs {
        let label = frame.classes[c].label.clone();
        let m = frame.classes[c].element_order;
        let units: Vec<u64> = (1..m).filter(|k| k.gcd(&m) == 1).collect();
        let stabilizer: Vec<u64> = units
            .iter()
            .copied()
            .filter(|&k| frame.power_class(c, k) == c)
            .collect();
        if stabilizer.len() * 2 != units.len() {
            return Err(col_err(
                &label,
                "value field is not quadratic; unsupported".into(),
            ));
        }
        // Gauss period generating the quadratic value field.
        let mut theta = CycNum::zero();
        for &k in &stabilizer {
            theta = theta.add(&CycNum::make(m, &[(k as i64, Rational::one())]).expect("valid"));
        }
        if theta.is_rational() {
            return Err(col_err(&label, "degenerate period; unsupported".into()));
        }
        let tr_theta = theta
            .add(&theta.conj())
            .as_rational()
            .expect("trace is rational");
        let n_theta = theta
            .mul(&theta.conj())
            .as_rational()
            .expect("norm is rational");

        // Linear system for the traces t_p: rows (coefficients, rhs).
        let mut system: Vec<(Vec<Rational>, Rational)> = Vec::new();
        let k_at = known_rational_at(c, &label)?;
        let s1: Rational = known_degrees
            .iter()
            .zip(k_at.iter())
            .map(|(d, v)| d * v)
            .sum();
        system.push((
            pair_degrees
                .iter()
                .map(|&d| Rational::from_integer(BigInt::from(d)))
                .collect(),
            -s1,
        ));
        for &rc in &real_classes {
            let k_rc = known_rational_at(rc, &label)?;
            let s: Rational = k_rc
                .iter()
                .zip(k_at.iter())
                .map(|(a, b)| a * b)
                .sum();
            let coeffs: Vec<Rational> = (0..npairs)
                .map(|p| values[p][rc].as_rational().expect("real column solved"))
                .collect();
            system.push((coeffs, -s));
        }
        let traces = solve_unique_rational(&system)
            .ok_or_else(|| col_err(&label, "trace system has no unique solution".into()))?;

        let s2: Rational = k_at.iter().map(|v| v * v).sum();
        let budget = Rational::from_integer(BigInt::from(frame.centralizer_order(c))) - s2;

        // x_p = r_p + s_p * theta with 2 r_p + s_p tr = t_p;
        // norm n_p = r^2 + r s tr + s^2 n_theta; sum 2 n_p = budget.
        let disc = Rational::from_integer(BigInt::from(4)) * &n_theta - &tr_theta * &tr_theta;
        assert!(disc.is_positive(), "imaginary quadratic field expected");
        let bound = ((&budget * Rational::from_integer(BigInt::from(8)) / &disc)
            .to_f64()
            .unwrap_or(64.0)
            .abs()
            .sqrt()
            .ceil() as i64)
            + 2;
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let mut candidates: Vec<Vec<CycNum>> = Vec::new();
        let mut search = vec![0i64; npairs];
        enumerate_grid(&mut search, bound, &mut |s_num: &[i64]| {
            // s_p = s_num / 2 to admit half-integer coordinates.
            let mut xs = Vec::with_capacity(npairs);
            let mut total = Rational::zero();
            for (p, &sn) in s_num.iter().enumerate() {
                let s = Rational::from_integer(BigInt::from(sn)) * &half;
                let r = (&traces[p] - &s * &tr_theta) * &half;
                let n = &r * &r + &r * &s * &tr_theta + &s * &s * &n_theta;
                total += Rational::from_integer(BigInt::from(2)) * &n;
                let x = CycNum::from_rational(r).add(&theta.scale(&s));
                xs.push(x);
            }
            if total != budget {
                return;
            }
            if !xs.iter().all(CycNum::has_integral_coefficients) {
                return;
            }
            // Canonical orientation: positive imaginary part first.
            let oriented: Vec<CycNum> = xs
                .iter()
                .map(|x| if x.imag_sign() < 0 { x.conj() } else { x.clone() })
                .collect();
            if !candidates.iter().any(|prev| prev == &oriented) {
                candidates.push(oriented);
            }
        });
        pending.push(Pending {
            c,
            cbar,
            candidates,
        });
    }

    // Second pass: fix the uniquely determined columns and use exact
    // orthogonality against every already-solved column to cut down the
    // rest, until all pair columns are determined.
    let mut solved_cols: Vec<usize> = vec![identity];
    solved_cols.extend(real_classes.iter().copied());
    while !pending.is_empty() {
        // Filter every pending column's candidates against solved columns
        // and the conjugate-column relation.
        for pend in &mut pending {
            let c = pend.c;
            let cbar = pend.cbar;
            let label = frame.classes[c].label.clone();
            pend.candidates.retain(|cand| {
                // Relation of column c against each solved column.
                for &sc in &solved_cols {
                    let mut acc = CycNum::zero();
                    for chi in known {
                        acc = acc.add(&chi.value(sc).mul(&chi.value(c).conj()));
                    }
                    for (p, x) in cand.iter().enumerate() {
                        let w = &values[p][sc];
                        acc = acc.add(&w.mul(&x.conj()));
                        acc = acc.add(&w.conj().mul(x));
                    }
                    if !acc.is_zero() {
                        log.push(format!(
                            "column {label}: candidate rejected by orthogonality against column {}",
                            frame.classes[sc].label
                        ));
                        return false;
                    }
                }
                // Relation of column c against its conjugate column.
                let mut acc = CycNum::zero();
                for chi in known {
                    acc = acc.add(&chi.value(cbar).mul(&chi.value(c).conj()));
                }
                for x in cand {
                    // Row values at cbar are the conjugates.
                    acc = acc.add(&x.conj().mul(&x.conj()));
                    acc = acc.add(&x.mul(x));
                }
                if !acc.is_zero() {
                    log.push(format!(
                        "column {label}: candidate rejected by orthogonality against its conjugate column"
                    ));
                    return false;
                }
                true
            });
        }
        // Commit columns that are now unique.
        let mut progressed = false;
        pending.retain(|pend| {
            if pend.candidates.len() == 1 {
                let cand = &pend.candidates[0];
                let label = &frame.classes[pend.c].label;
                log.push(format!(
                    "column {label}: accepted ({})",
                    cand.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(", ")
                ));
                for (p, x) in cand.iter().enumerate() {
                    values[p][pend.c] = x.clone();
                    values[p][pend.cbar] = x.conj();
                }
                solved_cols.push(pend.c);
                solved_cols.push(pend.cbar);
                progressed = true;
                false
            } else {
                true
            }
        });
        if !progressed {
            let worst = pending
                .iter()
                .map(|p| {
                    format!(
                        "{}: {} candidates",
                        frame.classes[p.c].label,
                        p.candidates.len()
                    )
                })
                .collect::<Vec<_>>()
                .join("; ");
            return Err(col_err(
                "-",
                format!("column system did not resolve ({worst})"),
            ));
        }
    }

    let mut rows = Vec::new();
    for vals in values {
        let row = ClassFunction::new(frame.clone(), vals);
        let conj = row.conj();
        rows.push(row);
        rows.push(conj);
    }
    Ok(ColumnSolution { rows, log })
}

fn enumerate_grid(current: &mut Vec<i64>, bound: i64, visit: &mut impl FnMut(&[i64])) {
    fn rec(idx: usize, current: &mut Vec<i64>, bound: i64, visit: &mut impl FnMut(&[i64])) {
        if idx == current.len() {
            visit(current);
            return;
        }
        for v in -bound..=bound {
            current[idx] = v;
            rec(idx + 1, current, bound, visit);
        }
    }
    rec(0, current, bound, visit);
}

/// Rational roots of `a x^2 + b x + c = 0` (a != 0). Irrational roots are
/// not returned; the callers treat them as inadmissible.
fn rational_quadratic_roots(a: &Rational, b: &Rational, c: &Rational) -> Vec<Rational> {
    let four = Rational::from_integer(BigInt::from(4));
    let two = Rational::from_integer(BigInt::from(2));
    let disc = b * b - four * a * c;
    if disc.is_negative() {
        return vec![];
    }
    let Some(sqrt) = rational_sqrt(&disc) else {
        return vec![];
    };
    let r1 = (-b.clone() + &sqrt) / (&two * a);
    let r2 = (-b.clone() - &sqrt) / (&two * a);
    if r1 == r2 {
        vec![r1]
    } else {
        vec![r1, r2]
    }
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let num = q.numer().sqrt();
    let den = q.denom().sqrt();
    if &(&num * &num) == q.numer() && &(&den * &den) == q.denom() {
        Some(Rational::new(num, den))
    } else {
        None
    }
}

/// Solves a (possibly overdetermined) rational linear system; returns the
/// unique solution if the system is consistent with full column rank.
fn solve_unique_rational(system: &[(Vec<Rational>, Rational)]) -> Option<Vec<Rational>> {
    let rows = system.len();
    let cols = system[0].0.len();
    let mut aug: Vec<Vec<Rational>> = system
        .iter()
        .map(|(coeffs, rhs)| {
            let mut r = coeffs.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut pr = 0;
    for col in 0..cols {
        let Some(sel) = (pr..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(pr, sel);
        let inv = Rational::one() / aug[pr][col].clone();
        for x in col..=cols {
            aug[pr][x] = &aug[pr][x] * &inv;
        }
        for r in 0..rows {
            if r != pr && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for x in col..=cols {
                    aug[r][x] = &aug[r][x] - &f * &aug[pr][x];
                }
            }
        }
        pivots.push((pr, col));
        pr += 1;
    }
    if pivots.len() != cols {
        return None;
    }
    for r in pr..rows {
        if !aug[r][cols].is_zero() {
            return None;
        }
    }
    let mut sol = vec![Rational::zero(); cols];
    for (r, c) in pivots {
        sol[c] = aug[r][cols].clone();
    }
    Some(sol)
}

/// Result of resolving a system of compound characters that overlap in
/// distinct irreducibles.
pub struct OverlapResolution {
    /// Extracted irreducibles, sorted by degree ascending.
    pub parts: Vec<ClassFunction>,
    pub part_degrees: Vec<BigInt>,
    /// `incidence[i]` lists, per input compound, the indices into `parts`.
    pub incidence: Vec<Vec<usize>>,
    pub hypotheses_considered: usize,
    pub consistent_hypotheses: usize,
}

/// Determines the unique decomposition of compound characters into shared
/// distinct irreducibles consistent with both the recomputed Gram matrix
/// and the compound degrees, then extracts each irreducible as an exact
/// linear combination of the compounds.
pub fn resolve_overlap_system(
    compounds: &[ClassFunction],
) -> Result<OverlapResolution, DerivationError> {
    let n = compounds.len();
    let overlap_err = |m: String| DerivationError::Overlap(m);
    // Recompute the Gram matrix; entries must be rational integers.
    let mut gram = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let v = compounds[i]
                .inner_product(&compounds[j])
                .map_err(DerivationError::ClassFun)?;
            gram[i][j] = v
                .as_integer()
                .and_then(|b| b.to_i64())
                .ok_or_else(|| overlap_err(format!("gram entry ({i},{j}) = {v} not integral")))?;
        }
    }
    let degrees: Vec<BigInt> = compounds
        .iter()
        .map(|c| {
            c.degree_integer()
                .ok_or_else(|| overlap_err("compound with non-integral degree".into()))
        })
        .collect::<Result<_, _>>()?;

    // Enumerate incidence hypotheses: compound i is a union of gram[i][i]
    // distinct abstract parts with |S_i meet S_j| = gram[i][j].
    let mut hypotheses: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut sets: Vec<Vec<usize>> = Vec::new();
    fn extend(
        i: usize,
        n: usize,
        gram: &[Vec<i64>],
        universe: usize,
        sets: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if i == n {
            out.push(sets.clone());
            return;
        }
        let size = gram[i][i] as usize;
        // Choose the overlap with the existing universe.
        let mut chosen: Vec<usize> = Vec::new();
        fn pick(
            start: usize,
            universe: usize,
            size: usize,
            i: usize,
            n: usize,
            gram: &[Vec<i64>],
            chosen: &mut Vec<usize>,
            sets: &mut Vec<Vec<usize>>,
            out: &mut Vec<Vec<Vec<usize>>>,
        ) {
            // Prune: overlap with each previous set must not exceed target.
            for (j, s) in sets.iter().enumerate() {
                let inter = chosen.iter().filter(|x| s.contains(x)).count();
                if inter > gram[i][j] as usize {
                    return;
                }
            }
            if chosen.len() <= size {
                // Complete with fresh parts.
                let fresh = size - chosen.len();
                let consistent = sets.iter().enumerate().all(|(j, s)| {
                    let inter = chosen.iter().filter(|x| s.contains(x)).count();
                    inter == gram[i][j] as usize
                });
                if consistent {
                    let mut set = chosen.clone();
                    for f in 0..fresh {
                        set.push(universe + f);
                    }
                    sets.push(set);
                    extend(i + 1, n, gram, universe + fresh, sets, out);
                    sets.pop();
                }
            }
            if chosen.len() == size {
                return;
            }
            for next in start..universe {
                chosen.push(next);
                pick(next + 1, universe, size, i, n, gram, chosen, sets, out);
                chosen.pop();
            }
        }
        pick(0, universe, size, i, n, gram, &mut chosen, sets, out);
    }
    extend(0, n, &gram, 0, &mut sets, &mut hypotheses);
    let hypotheses_considered = hypotheses.len();

    // Validate each hypothesis: unique positive integral part degrees and
    // an exact extraction of every part.
    let mut solutions: Vec<(Vec<ClassFunction>, Vec<BigInt>, Vec<Vec<usize>>)> = Vec::new();
    let mut consistent = 0;
    'hypo: for sets in &hypotheses {
        let nparts = sets.iter().flat_map(|s| s.iter().copied()).max().map_or(0, |m| m + 1);
        // Solve for part degrees: incidence * d = degrees.
        let system: Vec<(Vec<Rational>, Rational)> = (0..n)
            .map(|i| {
                let coeffs = (0..nparts)
                    .map(|p| {
                        if sets[i].contains(&p) {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect();
                (coeffs, Rational::from_integer(degrees[i].clone()))
            })
            .collect();
        let Some(dsol) = solve_unique_rational(&system) else {
            continue;
        };
        if !dsol
            .iter()
            .all(|d| d.denom().is_one() && d.numer().is_positive())
        {
            continue;
        }
        // Extract each part as a rational combination of the compounds.
        let mut parts = Vec::with_capacity(nparts);
        for p in 0..nparts {
            // Solve sum_i y_i * row_i = e_p over the incidence matrix.
            let sys: Vec<(Vec<Rational>, Rational)> = (0..nparts)
                .map(|q| {
                    let coeffs = (0..n)
                        .map(|i| {
                            if sets[i].contains(&q) {
                                Rational::one()
                            } else {
                                Rational::zero()
                            }
                        })
                        .collect();
                    let rhs = if q == p {
                        Rational::one()
                    } else {
                        Rational::zero()
                    };
                    (coeffs, rhs)
                })
                .collect();
            let Some(y) = solve_unique_rational(&sys) else {
                continue 'hypo;
            };
            let mut part = ClassFunction::zero(compounds[0].frame().clone());
            for (i, coeff) in y.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let scaled = ClassFunction::new(
                    compounds[i].frame().clone(),
                    compounds[i].values().iter().map(|v| v.scale(coeff)).collect(),
                );
                part = part.add(&scaled).map_err(DerivationError::ClassFun)?;
            }
            parts.push(part);
        }
        // Checks: norm one, matching positive degree, exact reconstruction.
        for (p, part) in parts.iter().enumerate() {
            let norm = part.norm().map_err(DerivationError::ClassFun)?;
            if norm != CycNum::one() {
                continue 'hypo;
            }
            if part.degree_integer().as_ref() != Some(dsol[p].numer()) {
                continue 'hypo;
            }
        }
        for (i, set) in sets.iter().enumerate() {
            let mut sum = ClassFunction::zero(compounds[0].frame().clone());
            for &p in set {
                sum = sum.add(&parts[p]).map_err(DerivationError::ClassFun)?;
            }
            if sum.values() != compounds[i].values() {
                continue 'hypo;
            }
        }
        consistent += 1;
        // Canonical form: parts sorted by degree.
        let mut order: Vec<usize> = (0..nparts).collect();
        order.sort_by_key(|&p| dsol[p].numer().clone());
        let sorted_parts: Vec<ClassFunction> = order.iter().map(|&p| parts[p].clone()).collect();
        let sorted_degrees: Vec<BigInt> = order.iter().map(|&p| dsol[p].numer().clone()).collect();
        let renumber: Vec<usize> = {
            let mut r = vec![0; nparts];
            for (new, &old) in order.iter().enumerate() {
                r[old] = new;
            }
            r
        };
        let incidence: Vec<Vec<usize>> = sets
            .iter()
            .map(|s| {
                let mut v: Vec<usize> = s.iter().map(|&p| renumber[p]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        let duplicate = solutions.iter().any(|(prev, _, _)| {
            prev.len() == sorted_parts.len()
                && prev
                    .iter()
                    .zip(sorted_parts.iter())
                    .all(|(a, b)| a.values() == b.values())
        });
        if !duplicate {
            solutions.push((sorted_parts, sorted_degrees, incidence));
        }
    }
    match solutions.len() {
        0 => Err(overlap_err(format!(
            "no consistent assignment ({hypotheses_considered} hypotheses examined): unresolvable overlap"
        ))),
        1 => {
            let (parts, part_degrees, incidence) = solutions.pop().expect("one solution");
            Ok(OverlapResolution {
                parts,
                part_degrees,
                incidence,
                hypotheses_considered,
                consistent_hypotheses: consistent,
            })
        }
        n => Err(overlap_err(format!("{n} distinct consistent resolutions"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_equation_unique_case() {
        assert_eq!(solve_degree_pair(712, 2).unwrap(), vec![10, 16]);
        assert_eq!(solve_degree_pair(16, 2).unwrap(), vec![2, 2]);
        assert_eq!(solve_degree_pair(200, 1).unwrap(), vec![10]);
    }

    #[test]
    fn degree_equation_ambiguous_case() {
        // 50 = 1 + 49 = 25 + 25 admits two representations, so the
        // derivation cannot proceed from it.
        let reps50 = square_representations(50, 2);
        assert_eq!(reps50, vec![vec![1, 7], vec![5, 5]]);
        let err = solve_degree_pair(100, 2).unwrap_err();
        match err {
            DerivationError::DegreeEquation { found } => assert_eq!(found, 2),
            other => panic!("unexpected error {other:?}"),
        }
        assert_eq!(square_representations(8, 2), vec![vec![2, 2]]);
    }

    #[test]
    fn rational_sqrt_detection() {
        use crate::cyclotomic::rat_frac;
        assert_eq!(rational_sqrt(&rat_frac(9, 4)), Some(rat_frac(3, 2)));
        assert_eq!(rational_sqrt(&rat_frac(2, 1)), None);
        assert_eq!(rational_sqrt(&rat_frac(-1, 1)), None);
    }
}
