//! Exact arithmetic in cyclotomic fields Q(zeta_n).
//!
//! Every character value in this crate is a [`CycNum`]: a rational linear
//! combination of powers of a fixed primitive n-th root of unity, stored in
//! the power basis `1, zeta, ..., zeta^(phi(n)-1)` after reduction modulo the
//! n-th cyclotomic polynomial. Values are kept in canonical form:
//!
//! * the conductor is minimal (a value representable in a smaller field is
//!   stored there, rationals at conductor 1), and never congruent to
//!   2 mod 4;
//! * coefficients are reduced modulo Phi_n.
//!
//! Canonical form makes structural equality coincide with mathematical
//! equality, which the orthogonality checks rely on.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::CycError;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Euler's totient for small arguments.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn divisors(n: u64) -> Vec<u64> {
    let mut ds: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    ds.sort_unstable();
    ds
}

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
///
/// Computed by exact division of x^n - 1 by the product of Phi_d over the
/// proper divisors d of n; results are cached process-wide.
fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    static CACHE: RwLock<Option<HashMap<u64, Vec<BigInt>>>> = RwLock::new(None);
    if let Some(map) = CACHE.read().unwrap().as_ref() {
        if let Some(p) = map.get(&n) {
            return p.clone();
        }
    }
    let poly = if n == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        // x^n - 1
        let mut num = vec![BigInt::zero(); (n + 1) as usize];
        num[0] = BigInt::from(-1);
        num[n as usize] = BigInt::one();
        for d in divisors(n) {
            if d == n {
                continue;
            }
            let phi_d = cyclotomic_poly(d);
            num = int_poly_exact_div(&num, &phi_d);
        }
        num
    };
    CACHE
        .write()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .insert(n, poly.clone());
    poly
}

/// Exact division of integer polynomials (remainder must vanish).
fn int_poly_exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, dc) in den.iter().enumerate() {
            let idx = i - dd + j;
            rem[idx] = &rem[idx] - &c * dc;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "division not exact");
    quot
}

/// An exact element of a cyclotomic field, in canonical form.
///
/// `coeffs` has length `phi(conductor)` and gives the coordinates in the
/// power basis of a fixed primitive root `zeta_conductor = e^(2*pi*i/n)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    conductor: u64,
    coeffs: Vec<Rational>,
}

impl CycNum {
    pub fn zero() -> Self {
        CycNum {
            conductor: 1,
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        CycNum::from_integer(1)
    }

    pub fn from_integer(k: i64) -> Self {
        CycNum {
            conductor: 1,
            coeffs: vec![rat(k)],
        }
    }

    pub fn from_rational(q: Rational) -> Self {
        CycNum {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    /// A primitive n-th root of unity, `E(n)`.
    pub fn root_of_unity(n: u64) -> Result<Self, CycError> {
        CycNum::make(n, &[(1, Rational::one())])
    }

    /// Builds `sum c_k * zeta_n^(e_k)` and canonicalizes.
    ///
    /// Exponents may be any integers; they are reduced modulo `n`.
    pub fn make(conductor: u64, terms: &[(i64, Rational)]) -> Result<Self, CycError> {
        if conductor == 0 {
            return Err(CycError::BadConductor(conductor));
        }
        let n = conductor;
        let mut expvec = vec![Rational::zero(); n as usize];
        for (e, c) in terms {
            let idx = e.rem_euclid(n as i64) as usize;
            expvec[idx] += c;
        }
        Ok(CycNum::from_exponent_vector(n, expvec))
    }

    /// Canonicalizes a full exponent vector (length n) at conductor n.
    fn from_exponent_vector(n: u64, expvec: Vec<Rational>) -> Self {
        let coeffs = reduce_mod_cyclotomic(n, expvec);
        CycNum { conductor: n, coeffs }.minimized()
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Power-basis coefficients (length `phi(conductor)`).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    /// The rational value, if the number is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.conductor == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Returns `Some(k)` iff the value is a rational integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().and_then(|q| {
            if q.denom().is_one() {
                Some(q.numer().clone())
            } else {
                None
            }
        })
    }

    pub fn is_rational_integer(&self) -> bool {
        self.as_integer().is_some()
    }

    /// True when every power-basis coefficient is a rational integer.
    ///
    /// For the conductors arising here this is the algebraic-integer test
    /// used by the central-character and column-solution filters.
    pub fn has_integral_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    fn lift_exponent_vector(&self, m: u64) -> Vec<Rational> {
        debug_assert!(m.is_multiple_of(self.conductor));
        let stride = m / self.conductor;
        let mut ev = vec![Rational::zero(); m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                ev[(i as u64 * stride) as usize] = c.clone();
            }
        }
        ev
    }

    pub fn add(&self, other: &CycNum) -> CycNum {
        let m = lcm_conductor(self.conductor, other.conductor);
        let mut ev = self.lift_exponent_vector(m);
        for (i, c) in other.lift_exponent_vector(m).into_iter().enumerate() {
            ev[i] += c;
        }
        CycNum::from_exponent_vector(m, ev)
    }

    pub fn neg(&self) -> CycNum {
        CycNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &CycNum) -> CycNum {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &CycNum) -> CycNum {
        // Fast paths keep the bulk of table arithmetic in plain rationals.
        if self.conductor == 1 {
            if self.coeffs[0].is_zero() {
                return CycNum::zero();
            }
            return CycNum {
                conductor: other.conductor,
                coeffs: other.coeffs.iter().map(|c| c * &self.coeffs[0]).collect(),
            }
            .minimized();
        }
        if other.conductor == 1 {
            return other.mul(self);
        }
        let m = lcm_conductor(self.conductor, other.conductor);
        let a = self.lift_exponent_vector(m);
        let b = other.lift_exponent_vector(m);
        let mut ev = vec![Rational::zero(); m as usize];
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let k = (i + j) % m as usize;
                ev[k] += ca * cb;
            }
        }
        CycNum::from_exponent_vector(m, ev)
    }

    pub fn scale(&self, q: &Rational) -> CycNum {
        CycNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
        .minimized()
    }

    /// Multiplicative inverse of a nonzero value.
    pub fn inv(&self) -> Result<CycNum, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        if self.conductor == 1 {
            return Ok(CycNum::from_rational(
                Rational::one() / self.coeffs[0].clone(),
            ));
        }
        let n = self.conductor;
        let phi: Vec<Rational> = cyclotomic_poly(n)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        let (g, u) = poly_half_ext_gcd(&self.coeffs, &phi);
        // g is a nonzero constant since Phi_n is irreducible over Q.
        debug_assert!(poly_degree(&g) == Some(0));
        let scale = Rational::one() / g[0].clone();
        let mut inv_coeffs = poly_rem(&poly_scale(&u, &scale), &phi);
        inv_coeffs.resize(euler_phi(n) as usize, Rational::zero());
        Ok(CycNum {
            conductor: n,
            coeffs: inv_coeffs,
        }
        .minimized())
    }

    pub fn div(&self, other: &CycNum) -> Result<CycNum, CycError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Image under the Galois automorphism `zeta_n -> zeta_n^k`, gcd(k, n) = 1.
    pub fn galois(&self, k: u64) -> Result<CycNum, CycError> {
        let n = self.conductor;
        let k = k % n.max(1);
        if n == 1 {
            return Ok(self.clone());
        }
        if k.gcd(&n) != 1 {
            return Err(CycError::GaloisNotCoprime { k, conductor: n });
        }
        let mut ev = vec![Rational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                ev[((i as u64 * k) % n) as usize] += c;
            }
        }
        Ok(CycNum::from_exponent_vector(n, ev))
    }

    /// Complex conjugation, `zeta_n -> zeta_n^(-1)`. Fixes exactly the reals.
    pub fn conj(&self) -> CycNum {
        if self.conductor == 1 {
            return self.clone();
        }
        self.galois(self.conductor - 1)
            .expect("n-1 is coprime to n")
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Quadratic Gauss sum: the sum of `zeta_p^t` over quadratic residues
    /// t mod p, which equals `(-1 + sqrt(-p))/2` for a prime p = 3 mod 4.
    pub fn gauss_quadratic(p: u64) -> Result<Self, CycError> {
        if p < 3 || !is_prime(p) || p % 4 != 3 {
            return Err(CycError::BadGaussPrime(p));
        }
        let mut terms = Vec::new();
        for t in 1..p {
            if is_quadratic_residue(t, p) {
                terms.push((t as i64, Rational::one()));
            }
        }
        CycNum::make(p, &terms)
    }

    /// Floating-point evaluation at `zeta_n = e^(2*pi*i/n)`.
    ///
    /// Used only to orient conjugate pairs deterministically, never for
    /// arithmetic.
    pub fn numeric(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cf = c.to_f64().expect("rational fits in f64");
            let theta = 2.0 * std::f64::consts::PI * (i as f64) / n;
            re += cf * theta.cos();
            im += cf * theta.sin();
        }
        (re, im)
    }

    /// Sign of the imaginary part: -1, 0 or 1.
    pub fn imag_sign(&self) -> i32 {
        if self.is_real() {
            return 0;
        }
        let (_, im) = self.numeric();
        assert!(
            im.abs() > 1e-9,
            "imaginary part too small to classify numerically: {self}"
        );
        if im > 0.0 {
            1
        } else {
            -1
        }
    }

    /// Deterministic total order on canonical forms, used for sorting only.
    pub fn canonical_cmp(&self, other: &CycNum) -> Ordering {
        self.conductor
            .cmp(&other.conductor)
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }

    fn minimized(self) -> CycNum {
        let n = self.conductor;
        if n == 1 {
            return self;
        }
        if self.coeffs.iter().all(Zero::is_zero) {
            return CycNum::zero();
        }
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            return CycNum {
                conductor: 1,
                coeffs: vec![self.coeffs[0].clone()],
            };
        }
        for d in divisors(n) {
            if d == n && n % 4 != 2 {
                return self;
            }
            if d == 1 || (d > 2 && d % 4 != 2) {
                if let Some(coeffs) = rewrite_in_subfield(n, d, &self.coeffs) {
                    return CycNum { conductor: d, coeffs };
                }
            }
        }
        self
    }
}

fn lcm_conductor(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn is_quadratic_residue(t: u64, p: u64) -> bool {
    (1..p).any(|s| s * s % p == t)
}

/// Reduces a length-n exponent vector to the power basis modulo Phi_n.
fn reduce_mod_cyclotomic(n: u64, mut expvec: Vec<Rational>) -> Vec<Rational> {
    let phi = euler_phi(n) as usize;
    let poly = cyclotomic_poly(n);
    for i in (phi..n as usize).rev() {
        if expvec[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut expvec[i], Rational::zero());
        // zeta^i = -c * (Phi_n(zeta) - zeta^phi * lead) shifted; subtract c * Phi * x^(i-phi)
        for (j, pc) in poly.iter().enumerate().take(phi) {
            expvec[i - phi + j] -= &c * Rational::from_integer(pc.clone());
        }
    }
    expvec.truncate(phi);
    expvec
}

/// Attempts to rewrite power-basis coefficients at conductor n in the power
/// basis at conductor d (a divisor of n). Returns None when the value does
/// not lie in Q(zeta_d).
fn rewrite_in_subfield(n: u64, d: u64, coeffs: &[Rational]) -> Option<Vec<Rational>> {
    let phi_n = euler_phi(n) as usize;
    let phi_d = euler_phi(d) as usize;
    // Embedding matrix: column j is zeta_d^j expressed at conductor n.
    let cols = embedding_columns(n, d);
    // Solve cols * a = coeffs by Gaussian elimination.
    let mut aug: Vec<Vec<Rational>> = (0..phi_n)
        .map(|r| {
            let mut row: Vec<Rational> = (0..phi_d).map(|c| cols[c][r].clone()).collect();
            row.push(coeffs[r].clone());
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..phi_d {
        let Some(sel) = (pivot_row..phi_n).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(pivot_row, sel);
        let inv = Rational::one() / aug[pivot_row][col].clone();
        for c in col..=phi_d {
            aug[pivot_row][c] = &aug[pivot_row][c] * &inv;
        }
        for r in 0..phi_n {
            if r != pivot_row && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in col..=phi_d {
                    aug[r][c] = &aug[r][c] - &f * &aug[pivot_row][c];
                }
            }
        }
        pivots.push((pivot_row, col));
        pivot_row += 1;
    }
    // Inconsistent if any zero row has nonzero rhs.
    for r in pivot_row..phi_n {
        if !aug[r][phi_d].is_zero() {
            return None;
        }
    }
    let mut solution = vec![Rational::zero(); phi_d];
    for (r, c) in pivots {
        solution[c] = aug[r][phi_d].clone();
    }
    Some(solution)
}

fn embedding_columns(n: u64, d: u64) -> Vec<Vec<Rational>> {
    static CACHE: RwLock<Option<HashMap<(u64, u64), Vec<Vec<Rational>>>>> = RwLock::new(None);
    if let Some(map) = CACHE.read().unwrap().as_ref() {
        if let Some(m) = map.get(&(n, d)) {
            return m.clone();
        }
    }
    let phi_d = euler_phi(d) as usize;
    let stride = n / d;
    let cols: Vec<Vec<Rational>> = (0..phi_d)
        .map(|j| {
            let mut ev = vec![Rational::zero(); n as usize];
            ev[(j as u64 * stride % n) as usize] = Rational::one();
            reduce_mod_cyclotomic(n, ev)
        })
        .collect();
    CACHE
        .write()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .insert((n, d), cols.clone());
    cols
}

// ---- dense polynomial helpers over Q (constant term first) ----

fn poly_degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn poly_scale(p: &[Rational], s: &Rational) -> Vec<Rational> {
    p.iter().map(|c| c * s).collect()
}

fn poly_rem(a: &[Rational], m: &[Rational]) -> Vec<Rational> {
    let md = poly_degree(m).expect("nonzero modulus");
    let lead_inv = Rational::one() / m[md].clone();
    let mut r = a.to_vec();
    while let Some(rd) = poly_degree(&r) {
        if rd < md {
            break;
        }
        let f = &r[rd] * &lead_inv;
        for (j, mc) in m.iter().enumerate().take(md + 1) {
            r[rd - md + j] = &r[rd - md + j] - &f * mc;
        }
    }
    r.truncate(md);
    r.resize(md, Rational::zero());
    r
}

/// Returns (g, u) with u*a = g mod m and g = gcd(a, m).
fn poly_half_ext_gcd(a: &[Rational], m: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    let mut u0 = vec![Rational::zero()];
    let mut u1 = vec![Rational::one()];
    while poly_degree(&r1).is_some() {
        let (q, r) = poly_divmod(&r0, &r1);
        let u = poly_sub(&u0, &poly_mul(&q, &u1));
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u;
    }
    (r0, u0)
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let bd = poly_degree(b).expect("division by zero polynomial");
    let lead_inv = Rational::one() / b[bd].clone();
    let mut r = a.to_vec();
    let mut q = vec![Rational::zero(); a.len().saturating_sub(bd) + 1];
    while let Some(rd) = poly_degree(&r) {
        if rd < bd {
            break;
        }
        let f = &r[rd] * &lead_inv;
        q[rd - bd] = f.clone();
        for (j, bc) in b.iter().enumerate().take(bd + 1) {
            r[rd - bd + j] = &r[rd - bd + j] - &f * bc;
        }
    }
    (q, r)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len()];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] = &out[i + j] + ca * cb;
            }
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = a.to_vec();
    out.resize(a.len().max(b.len()), Rational::zero());
    for (i, cb) in b.iter().enumerate() {
        out[i] = &out[i] - cb;
    }
    out
}

// ---- canonical literal grammar ----

impl fmt::Display for CycNum {
    /// Canonical literal: terms in increasing exponent order, zero terms
    /// omitted, `E(n)` for the root of unity, e.g. `E(8)+E(8)^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = if e == 0 {
                format!("{c}")
            } else {
                let base = if e == 1 {
                    format!("E({})", self.conductor)
                } else {
                    format!("E({})^{}", self.conductor, e)
                };
                if c.is_one() {
                    base
                } else if (-c.clone()).is_one() {
                    format!("-{base}")
                } else {
                    format!("{c}*{base}")
                }
            };
            if out.is_empty() || term.starts_with('-') {
                out.push_str(&term);
            } else {
                out.push('+');
                out.push_str(&term);
            }
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for CycNum {
    type Err = CycError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_literal(s)
    }
}

fn parse_literal(s: &str) -> Result<CycNum, CycError> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(CycError::Parse("empty literal".into()));
    }
    let bad = |msg: &str| CycError::Parse(format!("{msg} in `{s}`"));
    let mut terms: Vec<(u64, i64, Rational)> = Vec::new(); // (conductor, exponent, coeff)
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = Rational::one();
        if bytes[i] == b'+' {
            i += 1;
        } else if bytes[i] == b'-' {
            sign = -sign;
            i += 1;
        }
        // optional rational coefficient
        let start = i;
        while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'/') {
            i += 1;
        }
        let mut coeff = sign;
        if i > start {
            let txt = &s[start..i];
            let q = parse_rational(txt).ok_or_else(|| bad("bad rational"))?;
            coeff *= q;
        }
        if i < bytes.len() && bytes[i] == b'*' {
            i += 1;
        }
        if i < bytes.len() && bytes[i] == b'E' {
            if i + 1 >= bytes.len() || bytes[i + 1] != b'(' {
                return Err(bad("expected E("));
            }
            i += 2;
            let nstart = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: u64 = s[nstart..i].parse().map_err(|_| bad("bad conductor"))?;
            if i >= bytes.len() || bytes[i] != b')' {
                return Err(bad("expected )"));
            }
            i += 1;
            let mut exp: i64 = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let estart = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                exp = s[estart..i].parse().map_err(|_| bad("bad exponent"))?;
            }
            terms.push((n, exp, coeff));
        } else {
            if i == start {
                return Err(bad("expected term"));
            }
            terms.push((1, 0, coeff));
        }
    }
    let conductor = terms.iter().fold(1u64, |acc, (n, _, _)| acc.lcm(n));
    let lifted: Vec<(i64, Rational)> = terms
        .into_iter()
        .map(|(n, e, c)| (e * (conductor / n) as i64, c))
        .collect();
    CycNum::make(conductor, &lifted)
}

fn parse_rational(txt: &str) -> Option<Rational> {
    if let Some((n, d)) = txt.split_once('/') {
        let n: BigInt = n.parse().ok()?;
        let d: BigInt = d.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rational::new(n, d))
    } else {
        let n: BigInt = txt.parse().ok()?;
        Some(Rational::from_integer(n))
    }
}

/// `sqrt(-2) = E(8) + E(8)^3`, the omega of the reference tables.
pub fn sqrt_minus_two() -> CycNum {
    CycNum::make(8, &[(1, Rational::one()), (3, Rational::one())]).expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> CycNum {
        s.parse().expect("parse")
    }

    #[test]
    fn rational_embedding_has_conductor_one() {
        let five = CycNum::make(1, &[(0, rat(5))]).unwrap();
        assert_eq!(five.conductor(), 1);
        assert_eq!(five.as_integer().unwrap(), BigInt::from(5));
    }

    #[test]
    fn sqrt_minus_two_squares_to_minus_two() {
        let w = sqrt_minus_two();
        assert_eq!(w.conductor(), 8);
        assert_eq!(w.mul(&w), CycNum::from_integer(-2));
    }

    #[test]
    fn conductor_is_minimized_on_construction() {
        // zeta_4^0 with a zero zeta_4 term is rational.
        let x = CycNum::make(4, &[(0, rat(1)), (1, rat(0))]).unwrap();
        assert_eq!(x.conductor(), 1);
        assert_eq!(x, CycNum::one());
        // zeta_8^2 = i lives at conductor 4.
        let y = CycNum::make(8, &[(2, rat(1))]).unwrap();
        assert_eq!(y.conductor(), 4);
        // 1 + zeta_3 + zeta_3^2 = 0.
        let z = CycNum::make(3, &[(0, rat(1)), (1, rat(1)), (2, rat(1))]).unwrap();
        assert!(z.is_zero());
        // Conductors congruent to 2 mod 4 are never canonical:
        // zeta_6 = 1 + zeta_3 and zeta_2 = -1.
        let w = CycNum::make(6, &[(1, rat(1))]).unwrap();
        assert_eq!(w.conductor(), 3);
        assert_eq!(w, CycNum::make(3, &[(0, rat(1)), (1, rat(1))]).unwrap());
        assert_eq!(CycNum::root_of_unity(2).unwrap(), CycNum::from_integer(-1));
    }

    #[test]
    fn zero_conductor_rejected() {
        assert!(CycNum::make(0, &[]).is_err());
    }

    #[test]
    fn addition_examples() {
        let w = sqrt_minus_two();
        assert!(w.add(&w.neg()).is_zero());
        let beta = CycNum::gauss_quadratic(11).unwrap();
        let sum = beta.add(&beta.conj());
        assert_eq!(sum, CycNum::from_integer(-1));
        assert_eq!(
            CycNum::from_integer(3).add(&CycNum::from_integer(4)),
            CycNum::from_integer(7)
        );
    }

    #[test]
    fn multiplication_examples() {
        let beta = CycNum::gauss_quadratic(11).unwrap();
        // Norm of beta: beta * conj(beta) = 3.
        assert_eq!(beta.mul(&beta.conj()), CycNum::from_integer(3));
        let x = c("E(8)+E(8)^3");
        assert_eq!(x.mul(&CycNum::one()), x);
    }

    #[test]
    fn gauss_sum_minimal_polynomials() {
        let b11 = CycNum::gauss_quadratic(11).unwrap();
        // x^2 + x + 3 = 0
        assert!(b11
            .mul(&b11)
            .add(&b11)
            .add(&CycNum::from_integer(3))
            .is_zero());
        let b7 = CycNum::gauss_quadratic(7).unwrap();
        // x^2 + x + 2 = 0
        assert!(b7.mul(&b7).add(&b7).add(&CycNum::from_integer(2)).is_zero());
        let b3 = CycNum::gauss_quadratic(3).unwrap();
        assert_eq!(b3, CycNum::root_of_unity(3).unwrap());
        assert!(CycNum::gauss_quadratic(5).is_err());
        assert!(CycNum::gauss_quadratic(9).is_err());
    }

    #[test]
    fn conjugation_examples() {
        let w = sqrt_minus_two();
        assert_eq!(w.conj(), w.neg());
        let q = CycNum::from_rational(rat_frac(7, 3));
        assert_eq!(q.conj(), q);
        let z11 = CycNum::root_of_unity(11).unwrap();
        assert_eq!(z11.conj(), z11.galois(10).unwrap());
        assert_eq!(w.conj().conj(), w);
    }

    #[test]
    fn rational_integer_detection() {
        assert_eq!(
            CycNum::from_integer(-2).as_integer().unwrap(),
            BigInt::from(-2)
        );
        assert!(CycNum::from_rational(rat_frac(78, 89)).as_integer().is_none());
        assert!(sqrt_minus_two().as_integer().is_none());
    }

    #[test]
    fn numeric_evaluation() {
        let (re, im) = sqrt_minus_two().numeric();
        assert!(re.abs() < 1e-12);
        assert!((im - 2.0_f64.sqrt()).abs() < 1e-12);
        let (re, im) = CycNum::one().numeric();
        assert!((re - 1.0).abs() < 1e-12 && im.abs() < 1e-12);
        let (re, im) = CycNum::gauss_quadratic(11).unwrap().numeric();
        assert!((re + 0.5).abs() < 1e-9);
        assert!((im - 11.0_f64.sqrt() / 2.0).abs() < 1e-9);
    }

    #[test]
    fn literals_round_trip() {
        assert_eq!(sqrt_minus_two().to_string(), "E(8)+E(8)^3");
        assert_eq!(CycNum::zero().to_string(), "0");
        assert_eq!(CycNum::from_rational(rat_frac(-1, 2)).to_string(), "-1/2");
        let beta = CycNum::gauss_quadratic(11).unwrap();
        assert_eq!(
            beta.to_string(),
            "E(11)+E(11)^3+E(11)^4+E(11)^5+E(11)^9"
        );
        assert_eq!(
            beta.conj().to_string(),
            "-1-E(11)-E(11)^3-E(11)^4-E(11)^5-E(11)^9"
        );
        for v in [
            beta.clone(),
            beta.conj(),
            sqrt_minus_two(),
            CycNum::from_integer(-7),
            CycNum::from_rational(rat_frac(5, 3)),
            CycNum::zero(),
        ] {
            let back: CycNum = v.to_string().parse().unwrap();
            assert_eq!(back, v);
        }
    }

    #[test]
    fn inverse_of_nonzero() {
        let vals = [
            sqrt_minus_two(),
            CycNum::gauss_quadratic(11).unwrap(),
            c("1+E(4)"),
            CycNum::from_rational(rat_frac(-3, 7)),
        ];
        for v in vals {
            assert_eq!(v.mul(&v.inv().unwrap()), CycNum::one());
        }
        assert!(CycNum::zero().inv().is_err());
    }

    #[test]
    fn imag_sign_orients_conjugate_pairs() {
        let w = sqrt_minus_two();
        assert_eq!(w.imag_sign(), 1);
        assert_eq!(w.conj().imag_sign(), -1);
        assert_eq!(CycNum::from_integer(3).imag_sign(), 0);
        let beta = CycNum::gauss_quadratic(11).unwrap();
        assert_eq!(beta.imag_sign(), 1);
    }

    #[test]
    fn recanonicalization_is_identity() {
        let vals = [sqrt_minus_two(), CycNum::gauss_quadratic(11).unwrap()];
        for v in vals {
            let terms: Vec<(i64, Rational)> = v
                .coeffs()
                .iter()
                .enumerate()
                .map(|(e, c)| (e as i64, c.clone()))
                .collect();
            assert_eq!(CycNum::make(v.conductor(), &terms).unwrap(), v);
        }
    }
}
