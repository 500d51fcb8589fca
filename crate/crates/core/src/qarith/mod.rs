//! Exact q-arithmetic.
//!
//! q-integers use the balanced convention
//! `[n]_{q^d} = (q^{dn} − q^{−dn}) / (q^d − q^{−d})`, which is invariant
//! under `q ↦ q⁻¹` and matches the commutator `(K − K⁻¹)/(q_i − q_i⁻¹)`.

mod fraction;
mod laurent;

pub use fraction::QFraction;
pub use laurent::LaurentPoly;

use num_rational::BigRational;

use crate::error::Result;

/// `[n]_{q^d} = q^{d(n−1)} + q^{d(n−3)} + … + q^{−d(n−1)}`.
pub fn q_int(n: u32, d: u32) -> LaurentPoly {
    let n = i64::from(n);
    let d = i64::from(d);
    LaurentPoly::from_terms((0..n).map(|k| (d * (n - 1 - 2 * k), 1)))
}

pub fn q_factorial(n: u32, d: u32) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, k| &acc * &q_int(k, d))
}

/// `[n]! / ([k]! [n−k]!)`; zero outside `0 ≤ k ≤ n`.
pub fn q_binomial(n: u32, k: i64, d: u32) -> LaurentPoly {
    if k < 0 || k > i64::from(n) {
        return LaurentPoly::zero();
    }
    let k = k as u32;
    let den = &q_factorial(k, d) * &q_factorial(n - k, d);
    q_factorial(n, d)
        .div_exact(&den)
        .expect("q-binomial coefficients are Laurent polynomials")
}

/// `c_n = q^{d·n(n+1)/2} / [n]_{q^d}!` for `n = 0..=max`.
pub fn exp_q_coefficients(max: u32, d: u32) -> Vec<QFraction> {
    (0..=max)
        .map(|n| {
            let e = i64::from(d) * i64::from(n) * (i64::from(n) + 1) / 2;
            QFraction::new(LaurentPoly::monomial(1, e), q_factorial(n, d))
                .expect("q-factorials are nonzero")
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Specialization {
    Value,
    Derivative,
}

/// `f(1)` or `f′(1)`.
pub fn specialize(f: &QFraction, order: Specialization) -> Result<BigRational> {
    match order {
        Specialization::Value => f.value_at_one(),
        Specialization::Derivative => f.derivative_at_one(),
    }
}
