//! Induction along the stabilizer chain and symmetric-group character
//! values.
//!
//! Induction uses the centralizer-order formula through a class fusion
//! map; restriction composes with the fusion map. Symmetric-group
//! character values are computed by the Murnaghan-Nakayama recursion
//! (signed border-strip removal) with memoization, with the hook length
//! formula as an independent degree oracle.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::classfun::{synthetic_frame, CharacterTable, ClassFrame, ClassFunction};
use crate::cyclotomic::{CycNum, Rational};
use crate::error::IndResError;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts into weakly decreasing order; zero parts are
    /// dropped.
    pub fn new(parts: &[u32]) -> Partition {
        let mut parts: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition { parts: vec![] };
        }
        let cols = self.parts[0] as usize;
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p as usize >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// All partitions of n in reverse lexicographic order, `(n)` first.
    pub fn all_of(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: current.clone(),
                });
                return;
            }
            let top = remaining.min(max);
            for next in (1..=top).rev() {
                current.push(next);
                rec(remaining - next, next, current, out);
                current.pop();
            }
        }
        rec(n, n, &mut current, &mut out);
        out
    }

    /// Sign of the conjugacy class with this cycle type:
    /// `(-1)^(weight - parts)`.
    pub fn class_sign(&self) -> i32 {
        if (self.weight() as usize - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Centralizer order of the class with this cycle type in Sym(weight):
    /// `prod l^(m_l) m_l!`.
    pub fn centralizer_order(&self) -> BigUint {
        let mut by_len: HashMap<u32, u32> = HashMap::new();
        for &p in &self.parts {
            *by_len.entry(p).or_insert(0) += 1;
        }
        let mut z = BigUint::one();
        for (l, m) in by_len {
            for _ in 0..m {
                z *= BigUint::from(l);
            }
            z *= factorial(m as u64);
        }
        z
    }

    /// Degree of the Sym(n) irreducible labeled by this partition, via the
    /// hook length formula.
    pub fn hook_degree(&self) -> BigUint {
        let n = self.weight() as u64;
        let conj = self.conjugate();
        let mut denom = BigUint::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 1..=row as usize {
                let arm = row as u64 - j as u64;
                let leg = conj.parts[j - 1] as u64 - (i as u64 + 1);
                denom *= BigUint::from(arm + leg + 1);
            }
        }
        factorial(n) / denom
    }
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let txt: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "{}", txt.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = IndResError;

    /// Comma-separated parts, e.g. `9,1,1,1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Result<Vec<u32>, _> = s
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect();
        match parts {
            Ok(p) if !p.is_empty() && p.iter().all(|&x| x > 0) => Ok(Partition::new(&p)),
            _ => Err(IndResError::BadFusion(format!("bad partition `{s}`"))),
        }
    }
}

/// Memoizing evaluator for Murnaghan-Nakayama character values.
#[derive(Default)]
pub struct MnEvaluator {
    memo: HashMap<(Vec<u32>, Vec<u32>), BigInt>,
}

impl MnEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Value of the Sym(n) irreducible character labeled `lambda` on the
    /// class of cycle type `mu`.
    pub fn value(&mut self, lambda: &Partition, mu: &Partition) -> Result<BigInt, IndResError> {
        if lambda.weight() != mu.weight() {
            return Err(IndResError::WeightMismatch(lambda.weight(), mu.weight()));
        }
        Ok(self.eval(lambda.parts(), mu.parts()))
    }

    fn eval(&mut self, lambda: &[u32], mu: &[u32]) -> BigInt {
        if mu.is_empty() {
            return BigInt::one();
        }
        let key = (lambda.to_vec(), mu.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        // Remove a border strip for the largest remaining part of mu.
        let strip = mu[0];
        let rest = &mu[1..];
        let mut total = BigInt::zero();
        for (nu, height) in remove_border_strips(lambda, strip) {
            let sub = self.eval(&nu, rest);
            if height % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// All ways of removing a border strip of the given size, as
/// (remaining partition, strip height). Uses the beta-number encoding:
/// strips of size r correspond to beta-numbers b with b - r free.
fn remove_border_strips(lambda: &[u32], size: u32) -> Vec<(Vec<u32>, u32)> {
    let m = lambda.len();
    let beta: Vec<i64> = (0..m)
        .map(|i| lambda[i] as i64 + (m - 1 - i) as i64)
        .collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        let target = b - size as i64;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        // Height: beta entries strictly between target and b.
        let height = beta
            .iter()
            .filter(|&&x| x > target && x < b)
            .count() as u32;
        let mut new_beta: Vec<i64> = beta.clone();
        new_beta[i] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let nu: Vec<u32> = new_beta
            .iter()
            .enumerate()
            .map(|(j, &x)| (x - (m - 1 - j) as i64) as u32)
            .filter(|&p| p > 0)
            .collect();
        out.push((nu, height));
    }
    out
}

/// Convenience one-shot evaluation.
pub fn mn_value(lambda: &Partition, mu: &Partition) -> Result<BigInt, IndResError> {
    MnEvaluator::new().value(lambda, mu)
}

/// The full character table of Sym(n): rows and classes are both indexed
/// by partitions of n in the order of [`Partition::all_of`].
pub fn sym_character_table(n: u32) -> Result<(Vec<Partition>, CharacterTable), IndResError> {
    let partitions = Partition::all_of(n);
    let order = factorial(n as u64);
    let classes: Vec<(String, u64, Vec<u32>)> = partitions
        .iter()
        .map(|mu| {
            let size = (&order / mu.centralizer_order())
                .to_u64()
                .expect("class size fits u64");
            let label = mu.to_string();
            (label, size, mu.parts().to_vec())
        })
        .collect();
    let frame = synthetic_frame(
        &format!("Sym({n})"),
        order.to_u64().expect("order fits u64"),
        classes,
    );
    let mut evaluator = MnEvaluator::new();
    let mut rows = Vec::with_capacity(partitions.len());
    let mut labels = Vec::with_capacity(partitions.len());
    for lambda in &partitions {
        let values: Vec<CycNum> = partitions
            .iter()
            .map(|mu| {
                evaluator
                    .value(lambda, mu)
                    .map(|v| CycNum::from_rational(Rational::from_integer(v)))
            })
            .collect::<Result<_, _>>()?;
        rows.push(ClassFunction::new(frame.clone(), values));
        labels.push(format!("chi_({lambda})"));
    }
    Ok((
        partitions,
        CharacterTable::new(frame, rows, labels),
    ))
}

/// Restriction of the Sym(n) character labeled `lambda` to a permutation
/// group frame on n points: the value on each class is the MN value at the
/// full cycle type of the class (fixed points padded as parts of size 1).
pub fn restrict_sym_character(
    lambda: &Partition,
    frame: &Arc<ClassFrame>,
) -> Result<ClassFunction, IndResError> {
    let mut evaluator = MnEvaluator::new();
    let values: Vec<CycNum> = frame
        .classes
        .iter()
        .map(|c| {
            let mu = Partition::new(&c.cycle_type);
            evaluator
                .value(lambda, &mu)
                .map(|v| CycNum::from_rational(Rational::from_integer(v)))
        })
        .collect::<Result<_, _>>()?;
    Ok(ClassFunction::new(frame.clone(), values))
}

/// Induction of a class function of the subgroup H to the overgroup G
/// through the class fusion map:
/// `(chi ^ G)(x) = |C_G(x)| * sum over H-classes c fusing to x of
/// chi(c) / |C_H(c)|`.
pub fn induce(
    chi: &ClassFunction,
    fusion: &[usize],
    g_frame: &Arc<ClassFrame>,
) -> Result<ClassFunction, IndResError> {
    let h_frame = chi.frame();
    if fusion.len() != h_frame.len() {
        return Err(IndResError::BadFusion(format!(
            "fusion map has {} entries for {} classes",
            fusion.len(),
            h_frame.len()
        )));
    }
    if fusion.iter().any(|&t| t >= g_frame.len()) {
        return Err(IndResError::BadFusion("fusion target out of range".into()));
    }
    let mut values = vec![CycNum::zero(); g_frame.len()];
    for (c, &target) in fusion.iter().enumerate() {
        let term = chi.value(c).scale(&BigRational::new(
            BigInt::one(),
            BigInt::from(h_frame.centralizer_order(c)),
        ));
        values[target] = values[target].add(&term);
    }
    for (x, v) in values.iter_mut().enumerate() {
        *v = v.scale(&BigRational::from_integer(BigInt::from(
            g_frame.centralizer_order(x),
        )));
    }
    Ok(ClassFunction::new(g_frame.clone(), values))
}

/// Restriction of a class function of G to the subgroup H: composition
/// with the fusion map.
pub fn restrict(
    chi: &ClassFunction,
    fusion: &[usize],
    h_frame: &Arc<ClassFrame>,
) -> Result<ClassFunction, IndResError> {
    if fusion.len() != h_frame.len() {
        return Err(IndResError::BadFusion(format!(
            "fusion map has {} entries for {} classes",
            fusion.len(),
            h_frame.len()
        )));
    }
    let values = fusion.iter().map(|&t| chi.value(t).clone()).collect();
    Ok(ClassFunction::new(h_frame.clone(), values))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn partition_basics() {
        let lam = Partition::new(&[1, 9, 1, 1]);
        assert_eq!(lam.parts(), &[9, 1, 1, 1]);
        assert_eq!(lam.weight(), 12);
        assert_eq!(lam.to_string(), "9,1,1,1");
        assert_eq!(p("9,1,1,1"), lam);
        assert!(Partition::from_str("2,0,1").is_err());
        assert_eq!(Partition::all_of(12).len(), 77);
        assert_eq!(p("6,3,2,1").conjugate(), p("4,3,2,1,1,1"));
    }

    #[test]
    fn mn_examples() {
        assert_eq!(
            mn_value(&p("11,1"), &Partition::new(&[1; 12])).unwrap(),
            BigInt::from(11)
        );
        assert_eq!(
            mn_value(&p("9,3"), &p("2,2,2,2,1,1,1,1")).unwrap(),
            BigInt::from(10)
        );
        // The one-row partition labels the trivial character.
        for mu in Partition::all_of(7) {
            assert_eq!(mn_value(&p("7"), &mu).unwrap(), BigInt::one());
        }
        assert!(mn_value(&p("2,1"), &p("4")).is_err());
    }

    #[test]
    fn hook_degrees_match_known_values() {
        for (lam, expected) in [
            ("11,1", 11u64),
            ("10,2", 54),
            ("10,1,1", 55),
            ("9,3", 154),
            ("9,1,1,1", 165),
            ("8,4", 275),
            ("7,5", 297),
            ("8,1,1,1,1", 330),
        ] {
            assert_eq!(p(lam).hook_degree(), BigUint::from(expected), "{lam}");
        }
    }

    #[test]
    fn degrees_match_hook_formula_small() {
        let mut ev = MnEvaluator::new();
        for n in 1..=8u32 {
            let identity = Partition::new(&vec![1; n as usize]);
            for lam in Partition::all_of(n) {
                let deg = ev.value(&lam, &identity).unwrap();
                assert_eq!(
                    deg.to_biguint().unwrap(),
                    lam.hook_degree(),
                    "degree of {lam} in Sym({n})"
                );
            }
        }
    }

    #[test]
    fn sum_of_squared_degrees_is_factorial() {
        let mut ev = MnEvaluator::new();
        for n in 1..=7u32 {
            let identity = Partition::new(&vec![1; n as usize]);
            let total: BigInt = Partition::all_of(n)
                .iter()
                .map(|lam| {
                    let d = ev.value(lam, &identity).unwrap();
                    &d * &d
                })
                .sum();
            assert_eq!(total.to_biguint().unwrap(), factorial(n as u64));
        }
    }

    #[test]
    fn conjugate_duality() {
        let mut ev = MnEvaluator::new();
        for n in [5u32, 6] {
            for lam in Partition::all_of(n) {
                let lam_conj = lam.conjugate();
                for mu in Partition::all_of(n) {
                    let lhs = ev.value(&lam_conj, &mu).unwrap();
                    let rhs = ev.value(&lam, &mu).unwrap() * BigInt::from(mu.class_sign());
                    assert_eq!(lhs, rhs, "duality for {lam} at {mu}");
                }
            }
        }
    }

    #[test]
    fn sym_tables_are_orthogonal() {
        for n in 2..=5u32 {
            let (_, table) = sym_character_table(n).unwrap();
            let report = table.verify_orthogonality().unwrap();
            assert!(report.ok(), "Sym({n}): {report:?}");
        }
    }

    #[test]
    fn centralizer_orders() {
        // z of (2,2,1,1,1,1) in Sym(8): 2^2 * 2! * 1^4 * 4! = 192.
        assert_eq!(
            p("2,2,1,1,1,1").centralizer_order(),
            BigUint::from(192u64)
        );
        assert_eq!(p("12").centralizer_order(), BigUint::from(12u64));
    }
}
