//! Class functions over exact cyclotomic numbers.
//!
//! A [`ClassFrame`] captures just enough of a group's class structure to
//! compute with characters: class sizes, element orders, power maps and
//! realness. Frames come from an enumerated [`GroupData`] or, for the
//! symmetric groups, are synthesized from partition combinatorics.
//!
//! On top of a frame, [`ClassFunction`] provides the standard inner
//! product, permutation characters, tensor and symmetric/antisymmetric
//! squares, reduction by known irreducibles, and [`CharacterTable`] the
//! row/column orthogonality and class-algebra verifications.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;

use num_traits::{One, Signed, Zero};

use crate::cyclotomic::{CycNum, Rational};
use crate::error::ClassFunError;
use crate::permgroup::{cycle_type_label, GroupData};

/// One conjugacy class as seen by character arithmetic.
#[derive(Clone, Debug)]
pub struct FrameClass {
    pub label: String,
    pub size: u64,
    pub element_order: u64,
    /// Cycle lengths including fixed points, descending.
    pub cycle_type: Vec<u32>,
    pub inverse_class: usize,
    pub real: bool,
    /// `power_classes[k]` is the class of `rep^k` for `0 <= k < element_order`.
    pub power_classes: Vec<usize>,
}

/// Class structure of a fixed group, shared immutably by class functions.
#[derive(Clone, Debug)]
pub struct ClassFrame {
    pub name: String,
    pub order: u64,
    pub classes: Vec<FrameClass>,
}

impl ClassFrame {
    pub fn from_group(name: &str, g: &GroupData) -> Arc<ClassFrame> {
        let classes = g
            .classes()
            .iter()
            .enumerate()
            .map(|(ci, c)| FrameClass {
                label: c.label.clone(),
                size: c.size,
                element_order: c.element_order,
                cycle_type: c.cycle_type.clone(),
                inverse_class: c.inverse_class,
                real: c.real,
                power_classes: (0..c.element_order)
                    .map(|k| g.power_class(ci, k))
                    .collect(),
            })
            .collect();
        Arc::new(ClassFrame {
            name: name.to_string(),
            order: g.order(),
            classes,
        })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn centralizer_order(&self, class: usize) -> u64 {
        self.order / self.classes[class].size
    }

    pub fn power_class(&self, class: usize, k: u64) -> usize {
        let c = &self.classes[class];
        c.power_classes[(k % c.element_order) as usize]
    }

    pub fn class_by_label(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }

    /// Indices of the identity class (order-1 class, always present).
    pub fn identity_class(&self) -> usize {
        self.classes
            .iter()
            .position(|c| c.element_order == 1)
            .expect("identity class present")
    }

    fn compatible(a: &Arc<ClassFrame>, b: &Arc<ClassFrame>) -> bool {
        Arc::ptr_eq(a, b)
            || (a.order == b.order
                && a.classes.len() == b.classes.len()
                && a.classes
                    .iter()
                    .zip(b.classes.iter())
                    .all(|(x, y)| x.label == y.label && x.size == y.size))
    }
}

/// A vector of exact cyclotomic values indexed by the conjugacy classes of
/// a fixed frame.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    frame: Arc<ClassFrame>,
    values: Vec<CycNum>,
}

impl ClassFunction {
    pub fn new(frame: Arc<ClassFrame>, values: Vec<CycNum>) -> Self {
        assert_eq!(frame.len(), values.len(), "one value per class");
        ClassFunction { frame, values }
    }

    pub fn from_integers(frame: Arc<ClassFrame>, values: &[i64]) -> Self {
        ClassFunction::new(
            frame,
            values.iter().map(|&v| CycNum::from_integer(v)).collect(),
        )
    }

    pub fn trivial(frame: Arc<ClassFrame>) -> Self {
        let n = frame.len();
        ClassFunction::new(frame, vec![CycNum::one(); n])
    }

    pub fn zero(frame: Arc<ClassFrame>) -> Self {
        let n = frame.len();
        ClassFunction::new(frame, vec![CycNum::zero(); n])
    }

    pub fn frame(&self) -> &Arc<ClassFrame> {
        &self.frame
    }

    pub fn values(&self) -> &[CycNum] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &CycNum {
        &self.values[class]
    }

    /// Value at the identity class.
    pub fn degree(&self) -> CycNum {
        self.values[self.frame.identity_class()].clone()
    }

    pub fn degree_integer(&self) -> Option<BigInt> {
        self.degree().as_integer()
    }

    fn check_frame(&self, other: &ClassFunction) -> Result<(), ClassFunError> {
        if ClassFrame::compatible(&self.frame, &other.frame) {
            Ok(())
        } else {
            Err(ClassFunError::FrameMismatch)
        }
    }

    /// The standard inner product
    /// `sum_i chi(g_i) * conj(phi(g_i)) / |C_G(g_i)|`, computed exactly.
    pub fn inner_product(&self, other: &ClassFunction) -> Result<CycNum, ClassFunError> {
        self.check_frame(other)?;
        let mut acc = CycNum::zero();
        for (i, (v, w)) in self.values.iter().zip(other.values.iter()).enumerate() {
            if v.is_zero() || w.is_zero() {
                continue;
            }
            let term = v.mul(&w.conj()).scale(&Rational::new(
                BigInt::one(),
                BigInt::from(self.frame.centralizer_order(i)),
            ));
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    pub fn norm(&self) -> Result<CycNum, ClassFunError> {
        self.inner_product(self)
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction, ClassFunError> {
        self.check_frame(other)?;
        Ok(ClassFunction::new(
            self.frame.clone(),
            self.values
                .iter()
                .zip(other.values.iter())
                .map(|(a, b)| a.add(b))
                .collect(),
        ))
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction, ClassFunError> {
        self.check_frame(other)?;
        Ok(ClassFunction::new(
            self.frame.clone(),
            self.values
                .iter()
                .zip(other.values.iter())
                .map(|(a, b)| a.sub(b))
                .collect(),
        ))
    }

    /// Pointwise product (the character of the tensor product).
    pub fn tensor(&self, other: &ClassFunction) -> Result<ClassFunction, ClassFunError> {
        self.check_frame(other)?;
        Ok(ClassFunction::new(
            self.frame.clone(),
            self.values
                .iter()
                .zip(other.values.iter())
                .map(|(a, b)| a.mul(b))
                .collect(),
        ))
    }

    /// Complex-conjugate character.
    pub fn conj(&self) -> ClassFunction {
        ClassFunction::new(
            self.frame.clone(),
            self.values.iter().map(CycNum::conj).collect(),
        )
    }

    pub fn is_real_valued(&self) -> bool {
        self.values.iter().all(CycNum::is_real)
    }

    /// Symmetric or antisymmetric part of the square:
    /// `(chi(g)^2 + chi(g^2)) / 2` resp. `(chi(g)^2 - chi(g^2)) / 2`.
    pub fn sym_alt_square(&self, mode: SquareMode) -> ClassFunction {
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let values = (0..self.frame.len())
            .map(|c| {
                let sq = self.values[c].mul(&self.values[c]);
                let at_square = &self.values[self.frame.power_class(c, 2)];
                let combined = match mode {
                    SquareMode::Symmetric => sq.add(at_square),
                    SquareMode::Antisymmetric => sq.sub(at_square),
                };
                combined.scale(&half)
            })
            .collect();
        ClassFunction::new(self.frame.clone(), values)
    }

    /// Classes on which the character attains its degree (the kernel of the
    /// underlying representation, as a union of classes).
    pub fn kernel_classes(&self) -> BTreeSet<usize> {
        let d = self.degree();
        (0..self.frame.len())
            .filter(|&c| self.values[c] == d)
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SquareMode {
    Symmetric,
    Antisymmetric,
}

/// Permutation character of a 2-transitive action: `fix(g) - 1` on each
/// class. Errs (with the computed norm) when the result is not irreducible,
/// i.e. the action was not 2-transitive.
pub fn perm_character(
    frame: Arc<ClassFrame>,
    g: &GroupData,
) -> Result<ClassFunction, ClassFunError> {
    let values = g
        .classes()
        .iter()
        .map(|c| CycNum::from_integer(c.rep.fixed_points() as i64 - 1))
        .collect();
    let chi = ClassFunction::new(frame, values);
    let norm = chi.norm()?;
    if norm != CycNum::one() {
        return Err(ClassFunError::NotTwoTransitive(norm.to_string()));
    }
    Ok(chi)
}

/// Subtracts each known irreducible with its multiplicity
/// `<compound, chi_i>` from the compound. Multiplicities must be
/// nonnegative rational integers; anything else signals a mistake upstream.
pub fn reduce_by_known(
    compound: &ClassFunction,
    known: &[&ClassFunction],
) -> Result<(ClassFunction, Vec<BigInt>), ClassFunError> {
    let mut residual = compound.clone();
    let mut multiplicities = Vec::with_capacity(known.len());
    for (i, chi) in known.iter().enumerate() {
        let m = compound.inner_product(chi)?;
        let Some(m_int) = m.as_integer() else {
            return Err(ClassFunError::BadMultiplicity {
                name: format!("known[{i}]"),
                value: m.to_string(),
            });
        };
        if m_int.is_negative() {
            return Err(ClassFunError::BadMultiplicity {
                name: format!("known[{i}]"),
                value: m_int.to_string(),
            });
        }
        if !m_int.is_zero() {
            let scaled = ClassFunction::new(
                chi.frame().clone(),
                chi.values()
                    .iter()
                    .map(|v| v.scale(&Rational::from_integer(m_int.clone())))
                    .collect(),
            );
            residual = residual.sub(&scaled)?;
        }
        multiplicities.push(m_int);
    }
    Ok((residual, multiplicities))
}

/// An ordered list of irreducible class functions with shared class frame.
#[derive(Clone)]
pub struct CharacterTable {
    pub frame: Arc<ClassFrame>,
    pub rows: Vec<ClassFunction>,
    pub row_labels: Vec<String>,
}

impl CharacterTable {
    pub fn new(frame: Arc<ClassFrame>, rows: Vec<ClassFunction>, row_labels: Vec<String>) -> Self {
        assert_eq!(rows.len(), row_labels.len());
        CharacterTable {
            frame,
            rows,
            row_labels,
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Checks both Schur orthogonality relations exactly: rows
    /// `<chi_r, chi_s> = delta_rs` and columns
    /// `sum_i chi_i(g_r) conj(chi_i(g_s)) = delta_rs |C(g_r)|`.
    pub fn verify_orthogonality(&self) -> Result<OrthogonalityReport, ClassFunError> {
        let mut report = OrthogonalityReport::default();
        for r in 0..self.rows.len() {
            for s in r..self.rows.len() {
                let got = self.rows[r].inner_product(&self.rows[s])?;
                let expected = if r == s { CycNum::one() } else { CycNum::zero() };
                if got != expected {
                    report.row_violations.push(RelationViolation {
                        first: self.row_labels[r].clone(),
                        second: self.row_labels[s].clone(),
                        got: got.to_string(),
                        expected: expected.to_string(),
                    });
                }
            }
        }
        for r in 0..self.frame.len() {
            for s in r..self.frame.len() {
                let mut acc = CycNum::zero();
                for row in &self.rows {
                    acc = acc.add(&row.value(r).mul(&row.value(s).conj()));
                }
                let expected = if r == s {
                    CycNum::from_integer(self.frame.centralizer_order(r) as i64)
                } else {
                    CycNum::zero()
                };
                if acc != expected {
                    report.column_violations.push(RelationViolation {
                        first: self.frame.classes[r].label.clone(),
                        second: self.frame.classes[s].label.clone(),
                        got: acc.to_string(),
                        expected: expected.to_string(),
                    });
                }
            }
        }
        Ok(report)
    }

    /// Number of rows taking only real values; equals the number of real
    /// classes for a complete table.
    pub fn real_row_count(&self) -> usize {
        self.rows.iter().filter(|r| r.is_real_valued()).count()
    }

    pub fn sum_of_squared_degrees(&self) -> Option<BigInt> {
        self.rows
            .iter()
            .map(|r| r.degree_integer())
            .try_fold(BigInt::zero(), |acc, d| d.map(|d| acc + &d * &d))
    }

    /// Class-algebra consistency: for each row, the central character
    /// `w(c) = |c| chi(c) / chi(1)` must have integral power-basis
    /// coefficients and satisfy `w(j) w(k) = sum_l a_jkl w(l)` with the
    /// coefficients counted in the enumerated group.
    pub fn central_character_check(
        &self,
        g: &GroupData,
        pairs: &[(usize, usize)],
    ) -> Result<CentralCharacterReport, ClassFunError> {
        let k = self.frame.len();
        let mut report = CentralCharacterReport {
            pairs_checked: pairs.to_vec(),
            ..Default::default()
        };
        // Central characters per row.
        let mut omegas: Vec<Vec<CycNum>> = Vec::with_capacity(self.rows.len());
        for (ri, row) in self.rows.iter().enumerate() {
            let degree = row.degree();
            let inv_degree = degree.inv()?;
            let omega: Vec<CycNum> = (0..k)
                .map(|c| {
                    row.value(c)
                        .mul(&inv_degree)
                        .scale(&Rational::from_integer(BigInt::from(
                            self.frame.classes[c].size,
                        )))
                })
                .collect();
            for (c, w) in omega.iter().enumerate() {
                if !w.has_integral_coefficients() {
                    report.integrality_violations.push(format!(
                        "row {} class {}: {} is not an algebraic integer",
                        self.row_labels[ri], self.frame.classes[c].label, w
                    ));
                }
            }
            omegas.push(omega);
        }
        for &(j, kk) in pairs {
            let coeffs: Vec<u64> = (0..k).map(|l| class_mult_vector(g, j, kk, l)).collect();
            for (ri, omega) in omegas.iter().enumerate() {
                let lhs = omega[j].mul(&omega[kk]);
                let mut rhs = CycNum::zero();
                for (l, &a) in coeffs.iter().enumerate() {
                    if a != 0 {
                        rhs = rhs.add(&omega[l].scale(&Rational::from_integer(BigInt::from(a))));
                    }
                }
                if lhs != rhs {
                    report.product_violations.push(format!(
                        "row {} pair ({}, {}): w_j w_k = {} but sum a_jkl w_l = {}",
                        self.row_labels[ri],
                        self.frame.classes[j].label,
                        self.frame.classes[kk].label,
                        lhs,
                        rhs
                    ));
                }
            }
        }
        Ok(report)
    }
}

fn class_mult_vector(g: &GroupData, j: usize, k: usize, l: usize) -> u64 {
    // a_jkl is symmetric in (j, k); iterate over the smaller class.
    if g.classes()[j].size <= g.classes()[k].size {
        g.class_mult_coeff(j, k, l)
    } else {
        g.class_mult_coeff(k, j, l)
    }
}

/// Deterministic pair sample for the class-algebra check: all unordered
/// pairs for small groups, otherwise `count` pseudo-random pairs from a
/// fixed-seed generator.
pub fn central_check_pairs(num_classes: usize, group_order: u64, count: usize) -> Vec<(usize, usize)> {
    if group_order <= 10_000 {
        let mut pairs = Vec::new();
        for j in 0..num_classes {
            for k in j..num_classes {
                pairs.push((j, k));
            }
        }
        return pairs;
    }
    let mut state: u64 = 0x5eed_cab1_e5ca_7ab1 ^ group_order;
    let mut next = move || {
        // splitmix64
        state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    };
    let mut pairs = Vec::with_capacity(count);
    let mut seen = BTreeSet::new();
    while pairs.len() < count {
        let j = (next() % num_classes as u64) as usize;
        let k = (next() % num_classes as u64) as usize;
        let key = (j.min(k), j.max(k));
        if seen.insert(key) {
            pairs.push(key);
        }
    }
    pairs
}

#[derive(Clone, Debug, Default)]
pub struct RelationViolation {
    pub first: String,
    pub second: String,
    pub got: String,
    pub expected: String,
}

#[derive(Clone, Debug, Default)]
pub struct OrthogonalityReport {
    pub row_violations: Vec<RelationViolation>,
    pub column_violations: Vec<RelationViolation>,
}

impl OrthogonalityReport {
    pub fn ok(&self) -> bool {
        self.row_violations.is_empty() && self.column_violations.is_empty()
    }
}

#[derive(Clone, Debug, Default)]
pub struct CentralCharacterReport {
    pub pairs_checked: Vec<(usize, usize)>,
    pub integrality_violations: Vec<String>,
    pub product_violations: Vec<String>,
}

impl CentralCharacterReport {
    pub fn ok(&self) -> bool {
        self.integrality_violations.is_empty() && self.product_violations.is_empty()
    }
}

/// Synthetic frame for a multiset of classes; used for symmetric-group
/// tables where no enumerated group is wanted. `classes` supplies
/// `(label, size, cycle_type)`; every class is real with power maps
/// computed from cycle types.
pub fn synthetic_frame(
    name: &str,
    order: u64,
    classes: Vec<(String, u64, Vec<u32>)>,
) -> Arc<ClassFrame> {
    let degree: u32 = classes
        .first()
        .map(|(_, _, ct)| ct.iter().sum())
        .unwrap_or(0);
    let type_index: Vec<Vec<u32>> = classes.iter().map(|(_, _, ct)| ct.clone()).collect();
    let find = |ct: &[u32]| -> usize {
        type_index
            .iter()
            .position(|t| t == ct)
            .expect("power type present among classes")
    };
    let frame_classes = classes
        .iter()
        .map(|(label, size, ct)| {
            let element_order = ct.iter().fold(1u64, |acc, &l| {
                num_integer::lcm(acc, l as u64)
            });
            let power_classes = (0..element_order)
                .map(|k| {
                    if k == 0 {
                        find(&identity_type(degree))
                    } else {
                        find(&power_cycle_type(ct, k))
                    }
                })
                .collect();
            FrameClass {
                label: label.clone(),
                size: *size,
                element_order,
                cycle_type: ct.clone(),
                inverse_class: find(ct),
                real: true,
                power_classes,
            }
        })
        .collect();
    Arc::new(ClassFrame {
        name: name.to_string(),
        order,
        classes: frame_classes,
    })
}

fn identity_type(degree: u32) -> Vec<u32> {
    vec![1; degree as usize]
}

/// Cycle type of the k-th power: a cycle of length l splits into gcd(l, k)
/// cycles of length l / gcd(l, k).
pub fn power_cycle_type(ct: &[u32], k: u64) -> Vec<u32> {
    let mut out = Vec::new();
    for &l in ct {
        let g = num_integer::gcd(l as u64, k) as u32;
        for _ in 0..g {
            out.push(l / g);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Label helper re-exported for frames built away from a `GroupData`.
pub fn frame_class_label(ct: &[u32]) -> String {
    let degree: u32 = ct.iter().sum();
    cycle_type_label(ct, degree as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::Perm;

    fn g9() -> GroupData {
        let gens: Vec<Perm> = [
            "(1,2,3)(4,5,6)(7,8,9)",
            "(1,4,7)(2,5,8)(3,6,9)",
            "(2,4,3,7)(5,6,9,8)",
            "(2,5,3,9)(4,8,7,6)",
        ]
        .iter()
        .map(|s| Perm::parse(s, 9).unwrap())
        .collect();
        GroupData::closure(&gens, 1000).unwrap()
    }

    #[test]
    fn trivial_character_has_norm_one() {
        let g = g9();
        let frame = ClassFrame::from_group("G9", &g);
        let chi = ClassFunction::trivial(frame);
        assert_eq!(chi.norm().unwrap(), CycNum::one());
    }

    #[test]
    fn perm_character_of_g9() {
        let g = g9();
        let frame = ClassFrame::from_group("G9", &g);
        let chi = perm_character(frame.clone(), &g).unwrap();
        assert_eq!(chi.degree_integer().unwrap(), BigInt::from(8));
        // Value at the 3^3 class is -1 (fixed-point-free elements).
        let c33 = frame.class_by_label("3^3").unwrap();
        assert_eq!(chi.value(c33), &CycNum::from_integer(-1));
        // Tensor with trivial leaves it unchanged.
        let triv = ClassFunction::trivial(frame);
        assert_eq!(
            chi.tensor(&triv).unwrap().values().to_vec(),
            chi.values().to_vec()
        );
    }

    #[test]
    fn perm_character_rejects_intransitive_action() {
        let c = Perm::parse("(1,2,3,4,5,6,7,8,9,10,11,12)", 12).unwrap();
        let g = GroupData::closure(&[c], 100).unwrap();
        let frame = ClassFrame::from_group("C12", &g);
        assert!(matches!(
            perm_character(frame, &g),
            Err(ClassFunError::NotTwoTransitive(_))
        ));
    }

    #[test]
    fn symmetric_square_of_trivial_is_trivial() {
        let g = g9();
        let frame = ClassFrame::from_group("G9", &g);
        let triv = ClassFunction::trivial(frame);
        let sym = triv.sym_alt_square(SquareMode::Symmetric);
        assert_eq!(sym.values().to_vec(), triv.values().to_vec());
        let alt = triv.sym_alt_square(SquareMode::Antisymmetric);
        assert!(alt.values().iter().all(CycNum::is_zero));
    }

    #[test]
    fn reduce_by_self_gives_zero_residual() {
        let g = g9();
        let frame = ClassFrame::from_group("G9", &g);
        let chi = perm_character(frame, &g).unwrap();
        let (residual, mult) = reduce_by_known(&chi, &[&chi]).unwrap();
        assert_eq!(mult, vec![BigInt::one()]);
        assert!(residual.values().iter().all(CycNum::is_zero));
    }

    #[test]
    fn kernel_of_trivial_is_everything() {
        let g = g9();
        let frame = ClassFrame::from_group("G9", &g);
        let triv = ClassFunction::trivial(frame.clone());
        assert_eq!(triv.kernel_classes().len(), frame.len());
    }

    #[test]
    fn operations_reject_mismatched_groups() {
        let g = g9();
        let frame9 = ClassFrame::from_group("G9", &g);
        let c = Perm::parse("(1,2,3,4,5,6,7,8,9,10,11,12)", 12).unwrap();
        let g12 = GroupData::closure(&[c], 100).unwrap();
        let frame12 = ClassFrame::from_group("C12", &g12);
        let a = ClassFunction::trivial(frame9);
        let b = ClassFunction::trivial(frame12);
        assert!(matches!(
            a.inner_product(&b),
            Err(ClassFunError::FrameMismatch)
        ));
        assert!(matches!(a.tensor(&b), Err(ClassFunError::FrameMismatch)));
        assert!(matches!(a.add(&b), Err(ClassFunError::FrameMismatch)));
    }

    #[test]
    fn central_check_pair_selection() {
        let all = central_check_pairs(6, 72, 20);
        assert_eq!(all.len(), 21); // 6*7/2 unordered pairs
        let sampled = central_check_pairs(15, 95040, 20);
        assert_eq!(sampled.len(), 20);
        assert_eq!(sampled, central_check_pairs(15, 95040, 20));
    }

    #[test]
    fn power_cycle_types() {
        assert_eq!(power_cycle_type(&[8, 2, 1, 1], 2), vec![4, 4, 1, 1, 1, 1]);
        assert_eq!(power_cycle_type(&[6, 3, 2, 1], 2), vec![3, 3, 3, 1, 1, 1]);
        assert_eq!(power_cycle_type(&[11, 1], 11), vec![1; 12]);
    }
}
