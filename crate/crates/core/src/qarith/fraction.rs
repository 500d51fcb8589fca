use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// Element of `ℚ(q)` as a reduced quotient of Laurent polynomials.
///
/// Canonical form: numerator and denominator share no nonunit factor, the
/// denominator has lowest exponent 0 and a positive leading coefficient.
/// Structural equality is therefore equality in `ℚ(q)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QFraction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl QFraction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Shape("zero denominator".into()));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        // Denominators are usually units; skip the gcd then.
        let (mut num, mut den) = if den.is_unit() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let lo = den.min_exp().expect("nonzero denominator");
        num = num.shift(-lo);
        den = den.shift(-lo);
        if den.leading_coeff().is_some_and(Signed::is_negative) {
            num = -num;
            den = -den;
        }
        QFraction { num, den }
    }

    pub fn zero() -> Self {
        QFraction {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        QFraction {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(n))
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::from_poly(LaurentPoly::monomial(1, e))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the fraction lies in `ℤ[q, q⁻¹]`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.is_laurent().then_some(&self.num)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, n: u32) -> Self {
        QFraction {
            num: self.num.pow(n),
            den: self.den.pow(n),
        }
    }

    pub fn bar(&self) -> Self {
        Self::reduce(self.num.bar(), self.den.bar())
    }

    /// `f(1)`; fails when the denominator vanishes at 1.
    pub fn value_at_one(&self) -> Result<BigRational> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        Ok(BigRational::new(self.num.eval_at_one(), d))
    }

    /// `f′(1)` by the quotient rule.
    pub fn derivative_at_one(&self) -> Result<BigRational> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        let n = self.num.eval_at_one();
        let dn = self.num.derivative().eval_at_one();
        let dd = self.den.derivative().eval_at_one();
        Ok(BigRational::new(dn * &d - n * dd, &d * &d))
    }

    pub fn eval_rational(&self, q: &BigRational) -> Option<BigRational> {
        let d = self.den.eval_rational(q);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_rational(q) / d)
    }
}

impl From<LaurentPoly> for QFraction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for QFraction {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Default for QFraction {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for QFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for QFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QFraction({self})")
    }
}

impl Add for &QFraction {
    type Output = QFraction;
    fn add(self, rhs: &QFraction) -> QFraction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return QFraction::reduce(&self.num + &rhs.num, self.den.clone());
        }
        QFraction::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Neg for &QFraction {
    type Output = QFraction;
    fn neg(self) -> QFraction {
        QFraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for QFraction {
    type Output = QFraction;
    fn neg(self) -> QFraction {
        -&self
    }
}

impl Sub for &QFraction {
    type Output = QFraction;
    fn sub(self, rhs: &QFraction) -> QFraction {
        self + &(-rhs)
    }
}

impl Mul for &QFraction {
    type Output = QFraction;
    fn mul(self, rhs: &QFraction) -> QFraction {
        if self.is_zero() || rhs.is_zero() {
            return QFraction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QFraction::from_poly(&self.num * &rhs.num);
        }
        QFraction::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &QFraction {
    type Output = QFraction;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &QFraction) -> QFraction {
        self * &rhs.recip().expect("division by zero in Q(q)")
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for QFraction {
            type Output = QFraction;
            fn $m(self, rhs: QFraction) -> QFraction {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div);

impl QFraction {
    pub fn scale_int(&self, c: &BigInt) -> Self {
        Self::reduce(self.num.scale(c), self.den.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn arb_frac() -> impl Strategy<Value = QFraction> {
        let poly = proptest::collection::vec((-3i64..=3, -4i64..=4), 0..4).prop_map(|t| lp(&t));
        (poly.clone(), poly)
            .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| QFraction::new(n, d).unwrap())
    }

    #[test]
    fn reduction_is_canonical() {
        // (q² − 1) / (q − 1) = q + 1
        let f = QFraction::new(lp(&[(2, 1), (0, -1)]), lp(&[(1, 1), (0, -1)])).unwrap();
        assert_eq!(f, QFraction::from_poly(lp(&[(1, 1), (0, 1)])));
        // q / (−q³) = −q⁻²
        let f = QFraction::new(lp(&[(1, 1)]), lp(&[(3, -1)])).unwrap();
        assert_eq!(f, QFraction::q_pow(-2).scale_int(&BigInt::from(-1)));
        // 2 / (4q + 2) = 1 / (2q + 1)
        let f = QFraction::new(lp(&[(0, 2)]), lp(&[(1, 4), (0, 2)])).unwrap();
        assert_eq!(f.numerator(), &LaurentPoly::one());
        assert_eq!(f.denominator(), &lp(&[(1, 2), (0, 1)]));
        assert!(QFraction::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn specialization() {
        let f = QFraction::new(lp(&[(3, 1)]), lp(&[(1, 1), (-1, 1)])).unwrap();
        assert_eq!(
            f.value_at_one().unwrap(),
            BigRational::new(1.into(), 2.into())
        );
        let pole = QFraction::new(LaurentPoly::one(), lp(&[(1, 1), (0, -1)])).unwrap();
        assert_eq!(pole.value_at_one(), Err(Error::PoleAtOne));
        assert_eq!(pole.derivative_at_one(), Err(Error::PoleAtOne));
        assert_eq!(
            QFraction::q_pow(5).derivative_at_one().unwrap(),
            BigRational::from_integer(5.into())
        );
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_frac(), b in arb_frac(), c in arb_frac()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            if !a.is_zero() {
                prop_assert!((&a / &a).is_one());
            }
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_frac(), b in arb_frac()) {
            let q = BigRational::new(3.into(), 7.into());
            if let (Some(x), Some(y), Some(z)) =
                (a.eval_rational(&q), b.eval_rational(&q), (&a * &b).eval_rational(&q))
            {
                prop_assert_eq!(x * y, z);
            }
        }
    }
}
