use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Laurent polynomial in `q` with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(One::is_one)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    /// `±q^k` for some `k`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    /// `f(q) ↦ f(q^d)`.
    pub fn substitute_power(&self, d: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e * d, c.clone()))
                .collect(),
        }
    }

    /// Bar involution `q ↦ q⁻¹`.
    pub fn bar(&self) -> Self {
        self.substitute_power(-1)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, x)| (e, x * c)).collect(),
        }
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Formal derivative `d/dq`.
    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(&e, c)| (e - 1, c * BigInt::from(e))),
        )
    }

    pub fn eval_rational(&self, q: &BigRational) -> BigRational {
        self.terms
            .iter()
            .map(|(&e, c)| BigRational::from_integer(c.clone()) * pow_rational(q, e))
            .sum()
    }

    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder in `ℤ[q, q⁻¹]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let ds = divisor.min_exp().expect("nonzero");
        let ns = self.min_exp().expect("nonzero");
        let d = to_dense(&divisor.shift(-ds));
        let n = to_dense(&self.shift(-ns));
        let (q, r) = dense_divrem(&n, &d)?;
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(from_dense(&q).shift(ns - ds))
    }

    /// Greatest common divisor in `ℤ[q, q⁻¹]`, normalized to lowest exponent 0
    /// with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalize_unit();
        }
        if other.is_zero() {
            return self.normalize_unit();
        }
        let a = to_dense(&self.shift(-self.min_exp().unwrap()));
        let b = to_dense(&other.shift(-other.min_exp().unwrap()));
        let g = dense_gcd(a, b);
        from_dense(&g).normalize_unit()
    }

    /// Representative of `self` up to units `±q^k`: lowest exponent 0,
    /// positive leading coefficient.
    pub fn normalize_unit(&self) -> Self {
        let Some(lo) = self.min_exp() else {
            return Self::zero();
        };
        let shifted = self.shift(-lo);
        if shifted.leading_coeff().is_some_and(Signed::is_negative) {
            -shifted
        } else {
            shifted
        }
    }
}

fn pow_rational(q: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { q.recip() } else { q.clone() };
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

// Dense coefficient vectors, index = exponent, for polynomials with no
// negative exponents.
fn to_dense(p: &LaurentPoly) -> Vec<BigInt> {
    let hi = p.max_exp().unwrap_or(0).max(0) as usize;
    let mut v = vec![BigInt::zero(); hi + 1];
    for (e, c) in p.terms() {
        v[e as usize] = c.clone();
    }
    v
}

fn from_dense(v: &[BigInt]) -> LaurentPoly {
    LaurentPoly::from_terms(v.iter().enumerate().map(|(e, c)| (e as i64, c.clone())))
}

fn trim(v: &mut Vec<BigInt>) {
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn degree(v: &[BigInt]) -> Option<usize> {
    v.iter().rposition(|c| !c.is_zero())
}

/// Long division in `ℤ[q]`; `None` if some step needs a non-integral quotient.
fn dense_divrem(n: &[BigInt], d: &[BigInt]) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
    let dd = degree(d)?;
    let lead = &d[dd];
    let mut r = n.to_vec();
    let mut q = vec![BigInt::zero(); n.len().max(1)];
    while let Some(rd) = degree(&r) {
        if rd < dd {
            break;
        }
        let (quot, rem) = r[rd].div_rem(lead);
        if !rem.is_zero() {
            return None;
        }
        let shift = rd - dd;
        for (k, c) in d.iter().enumerate().take(dd + 1) {
            r[k + shift] -= &quot * c;
        }
        q[shift] = quot;
    }
    trim(&mut r);
    trim(&mut q);
    Some((q, r))
}

fn dense_content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn dense_primitive(v: &[BigInt]) -> Vec<BigInt> {
    let c = dense_content(v);
    if c.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder `lc(b)^(deg a − deg b + 1) · a mod b`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = degree(b).expect("nonzero divisor");
    let lead = b[db].clone();
    let mut r = a.to_vec();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let top = r[dr].clone();
        for c in r.iter_mut() {
            *c *= &lead;
        }
        let shift = dr - db;
        for (k, c) in b.iter().enumerate().take(db + 1) {
            r[k + shift] -= &top * c;
        }
    }
    trim(&mut r);
    r
}

/// Primitive polynomial remainder sequence gcd in `ℤ[q]`.
fn dense_gcd(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let content = dense_content(&a).gcd(&dense_content(&b));
    let mut a = dense_primitive(&a);
    let mut b = dense_primitive(&b);
    if degree(&a) < degree(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    while degree(&b).is_some() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = if degree(&r).is_some() {
            dense_primitive(&r)
        } else {
            r
        };
    }
    a.iter().map(|c| c * &content).collect()
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || e == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}
