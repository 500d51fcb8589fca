//! Torus-invariant prime strata of `U^w₋`.
//!
//! The strata are indexed by the Bruhat interval `W^{≤w}`. For each `y ≤ w`
//! the stratum is a torus of dimension `dim E₋₁(w⁻¹y)`, the number of
//! independent weights in `P_{y,w} = {λ ∈ P : (y + w)λ = 0}`. The same number
//! is the codimension of the symplectic leaves in the open Richardson variety
//! `R_{y,w}`, whose dimension is `ℓ(w) − ℓ(y)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::linalg;
use crate::rootdata::{mat_add, mat_vec, RootSystem, Weight};
use crate::weyl::{bruhat_interval, bruhat_leq, WeylElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// One row of the stratification report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumRecord {
    pub y: WeylElement,
    pub length_y: usize,
    /// `dim E₋₁(w⁻¹y)`.
    pub stratum_dim: usize,
    /// `ℓ(w) − ℓ(y)`.
    pub richardson_dim: usize,
    pub leaf_dim: usize,
    pub lattice_basis: Vec<Weight>,
    /// `dim E₊₁(w⁻¹y)`.
    pub double_dim: usize,
}

impl StratumRecord {
    /// Checks the row's internal consistency; returns a description of the
    /// first violation.
    pub fn check(&self) -> std::result::Result<(), String> {
        if self.stratum_dim != self.lattice_basis.len() {
            return Err(format!(
                "y = {}: stratum_dim {} but lattice rank {}",
                self.y,
                self.stratum_dim,
                self.lattice_basis.len()
            ));
        }
        if !self.leaf_dim.is_multiple_of(2) {
            return Err(format!(
                "y = {}: odd leaf dimension {}",
                self.y, self.leaf_dim
            ));
        }
        if self.stratum_dim % 2 != self.richardson_dim % 2 {
            return Err(format!("y = {}: parity mismatch", self.y));
        }
        if self.leaf_dim + self.stratum_dim != self.richardson_dim {
            return Err(format!("y = {}: dimensions do not add up", self.y));
        }
        Ok(())
    }
}

/// `dim ker(M(x) − sign·I)` by exact elimination.
pub fn eigenspace_dim(x: &WeylElement, sign: Sign) -> usize {
    let n = x.root_system().rank();
    let s = sign.value();
    let shifted: Vec<Vec<i64>> = x
        .matrix()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &v)| if i == j { v - s } else { v })
                .collect()
        })
        .collect();
    n - linalg::rank(&linalg::to_big(&shifted))
}

fn w_inverse_y(w: &WeylElement, y: &WeylElement) -> Result<WeylElement> {
    w.inverse().mul(y)
}

/// Dimension of the stratum over the prime indexed by `y`: `dim E₋₁(w⁻¹y)`.
pub fn stratum_dimension(w: &WeylElement, y: &WeylElement) -> Result<usize> {
    if !bruhat_leq(y, w)? {
        return Err(Error::NotBelow {
            y: y.word().to_vec(),
            w: w.word().to_vec(),
        });
    }
    Ok(eigenspace_dim(&w_inverse_y(w, y)?, Sign::Minus))
}

/// Basis of `P_{y,w} = ker(M(y) + M(w)) ∩ P`, primitive and in Hermite normal form.
pub fn kernel_lattice_basis(y: &WeylElement, w: &WeylElement) -> Result<Vec<Weight>> {
    if *y.root_system() != *w.root_system() {
        return Err(Error::MixedRootSystems(
            y.root_system().name(),
            w.root_system().name(),
        ));
    }
    let n = y.root_system().rank();
    let sum = mat_add(y.matrix(), w.matrix());
    let cleared: linalg::BigMatrix = linalg::rational_kernel(&sum)
        .iter()
        .map(|v| linalg::clear_denominators(v))
        .collect();
    let saturated = linalg::saturate(&cleared, n);
    Ok(saturated
        .into_iter()
        .map(|row| {
            Weight(
                row.iter()
                    .map(|x| x.to_i64().expect("small entries"))
                    .collect(),
            )
        })
        .collect())
}

/// The exponent `−<(y + w)λ, ν + wμ>` of the commutation factor between
/// `a_λ` and the generator of weight data `(μ, ν)`.
pub fn commutation_exponent(
    rs: &RootSystem,
    y: &WeylElement,
    w: &WeylElement,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
) -> Result<BigRational> {
    for v in [lambda, mu, nu] {
        rs.check_len(v.rank())?;
    }
    let sum = mat_add(y.matrix(), w.matrix());
    let left = Weight(mat_vec(&sum, &lambda.0));
    let w_mu = mat_vec(w.matrix(), &mu.0);
    let right = Weight(nu.0.iter().zip(w_mu).map(|(a, b)| a + b).collect());
    Ok(-rs.pair(&left, &right)?)
}

/// Weight `2·yλ` of the normal element `a_λ` under the right torus action.
pub fn normal_element_weight(y: &WeylElement, lambda: &Weight) -> Result<Weight> {
    y.root_system().check_len(lambda.rank())?;
    Ok(Weight(
        mat_vec(y.matrix(), &lambda.0)
            .into_iter()
            .map(|c| 2 * c)
            .collect(),
    ))
}

/// `dim E₊₁(w⁻¹y)`, the stratum dimension for the pair `(y, w)` in the
/// quantized coordinate ring. No Bruhat condition applies.
pub fn double_bruhat_stratum_dim(y: &WeylElement, w: &WeylElement) -> Result<usize> {
    Ok(eigenspace_dim(&w_inverse_y(w, y)?, Sign::Plus))
}

fn record(w: &WeylElement, y: &WeylElement) -> Result<StratumRecord> {
    let x = w_inverse_y(w, y)?;
    let stratum_dim = eigenspace_dim(&x, Sign::Minus);
    let richardson_dim = w.length() - y.length();
    let leaf_dim = richardson_dim.checked_sub(stratum_dim).ok_or_else(|| {
        Error::Shape(format!(
            "codimension {stratum_dim} exceeds dimension {richardson_dim} at y = {y}"
        ))
    })?;
    Ok(StratumRecord {
        y: y.clone(),
        length_y: y.length(),
        stratum_dim,
        richardson_dim,
        leaf_dim,
        lattice_basis: kernel_lattice_basis(y, w)?,
        double_dim: eigenspace_dim(&x, Sign::Plus),
    })
}

/// One record per `y ≤ w`, sorted by `(ℓ(y), canonical word)`.
pub fn stratification_report(w: &WeylElement, cap: usize) -> Result<Vec<StratumRecord>> {
    let interval = bruhat_interval(w, cap)?;
    interval.elements.iter().map(|y| record(w, y)).collect()
}

/// Big-integer coordinates of a weight.
pub fn weight_to_big(v: &Weight) -> Vec<BigInt> {
    v.0.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{root_system, Series};
    use crate::weyl::{all_elements, element_from_word, longest_element, DEFAULT_INTERVAL_CAP};
    use num_traits::Zero;
    use std::sync::Arc;

    fn sys(s: Series, n: usize) -> Arc<RootSystem> {
        Arc::new(root_system(s, n).unwrap())
    }

    fn el(rs: &Arc<RootSystem>, w: &[usize]) -> WeylElement {
        element_from_word(rs, w).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn eigenspace_examples() {
        let a2 = sys(Series::A, 2);
        assert_eq!(eigenspace_dim(&el(&a2, &[]), Sign::Minus), 0);
        assert_eq!(eigenspace_dim(&el(&a2, &[1, 2, 1]), Sign::Minus), 1);
        assert_eq!(eigenspace_dim(&el(&a2, &[1, 2]), Sign::Minus), 0);
    }

    #[test]
    fn stratum_dimension_examples() {
        let a1 = sys(Series::A, 1);
        assert_eq!(stratum_dimension(&el(&a1, &[1]), &el(&a1, &[])).unwrap(), 1);
        let a2 = sys(Series::A, 2);
        let w0 = el(&a2, &[1, 2, 1]);
        assert_eq!(stratum_dimension(&w0, &el(&a2, &[1])).unwrap(), 0);
        assert_eq!(stratum_dimension(&w0, &w0).unwrap(), 0);
        assert!(matches!(
            stratum_dimension(&el(&a2, &[1]), &el(&a2, &[2])),
            Err(Error::NotBelow { .. })
        ));
    }

    #[test]
    fn kernel_lattice_examples() {
        let a2 = sys(Series::A, 2);
        let e = el(&a2, &[]);
        assert_eq!(
            kernel_lattice_basis(&e, &el(&a2, &[1, 2, 1])).unwrap(),
            vec![Weight(vec![1, 1])]
        );
        assert!(kernel_lattice_basis(&e, &e).unwrap().is_empty());
        let a1 = sys(Series::A, 1);
        assert_eq!(
            kernel_lattice_basis(&el(&a1, &[]), &el(&a1, &[1])).unwrap(),
            vec![Weight(vec![1])]
        );
    }

    #[test]
    fn kernel_lattice_is_saturated() {
        // compare against the integer kernel computed by a unimodular transform
        let b3 = sys(Series::B, 3);
        let all = all_elements(&b3).unwrap();
        for y in all.iter().step_by(3) {
            for w in all.iter().step_by(4) {
                let basis = kernel_lattice_basis(y, w).unwrap();
                let sum = linalg::to_big(&mat_add(y.matrix(), w.matrix()));
                let direct = linalg::integer_kernel(&sum, 3);
                let ours: linalg::BigMatrix = basis.iter().map(weight_to_big).collect();
                assert_eq!(ours, direct, "y = {y}, w = {w}");
            }
        }
    }

    #[test]
    fn commutation_examples() {
        let a1 = sys(Series::A, 1);
        let om = Weight(vec![1]);
        let (e1, s) = (el(&a1, &[]), el(&a1, &[1]));
        assert_eq!(
            commutation_exponent(&a1, &e1, &s, &om, &om, &om).unwrap(),
            rat(0, 1)
        );
        let a2 = sys(Series::A, 2);
        let w1 = Weight(vec![1, 0]);
        let y = el(&a2, &[1]);
        let w0 = el(&a2, &[1, 2, 1]);
        assert_eq!(
            commutation_exponent(&a2, &y, &w0, &w1, &w1, &w1).unwrap(),
            rat(1, 3)
        );
        assert!(commutation_exponent(&a2, &y, &w0, &Weight(vec![1]), &w1, &w1).is_err());
    }

    #[test]
    fn lattice_vectors_commute_with_everything() {
        let a2 = sys(Series::A, 2);
        let all = all_elements(&a2).unwrap();
        let probes: Vec<Weight> = (-2..=2)
            .flat_map(|a| (-2..=2).map(move |b| Weight(vec![a, b])))
            .collect();
        for w in &all {
            for y in all.iter().filter(|y| bruhat_leq(y, w).unwrap()) {
                for lam in kernel_lattice_basis(y, w).unwrap() {
                    for mu in probes.iter().step_by(3) {
                        for nu in probes.iter().step_by(4) {
                            let c = commutation_exponent(&a2, y, w, &lam, mu, nu).unwrap();
                            assert!(c.is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn normal_weights() {
        let a2 = sys(Series::A, 2);
        let lam = Weight(vec![3, -1]);
        assert_eq!(
            normal_element_weight(&el(&a2, &[]), &lam).unwrap(),
            Weight(vec![6, -2])
        );
        assert_eq!(
            normal_element_weight(&el(&a2, &[1]), &Weight(vec![1, 0])).unwrap(),
            Weight(vec![-2, 2])
        );
        assert_eq!(
            normal_element_weight(&el(&a2, &[2, 1]), &Weight::zero(2)).unwrap(),
            Weight::zero(2)
        );
    }

    #[test]
    fn double_bruhat_examples() {
        let a2 = sys(Series::A, 2);
        let e = el(&a2, &[]);
        let w0 = el(&a2, &[1, 2, 1]);
        assert_eq!(double_bruhat_stratum_dim(&w0, &w0).unwrap(), 2);
        assert_eq!(double_bruhat_stratum_dim(&e, &w0).unwrap(), 1);
        assert_eq!(double_bruhat_stratum_dim(&e, &el(&a2, &[1, 2])).unwrap(), 0);
    }

    #[test]
    fn a2_reports() {
        let a2 = sys(Series::A, 2);
        let report = stratification_report(&longest_element(&a2), DEFAULT_INTERVAL_CAP).unwrap();
        let rows: Vec<(String, usize, usize)> = report
            .iter()
            .map(|r| (r.y.to_string(), r.stratum_dim, r.richardson_dim))
            .collect();
        assert_eq!(
            rows,
            vec![
                ("e".into(), 1, 3),
                ("1".into(), 0, 2),
                ("2".into(), 0, 2),
                ("12".into(), 1, 1),
                ("21".into(), 1, 1),
                ("121".into(), 0, 0),
            ]
        );
        let report = stratification_report(&el(&a2, &[1, 2]), DEFAULT_INTERVAL_CAP).unwrap();
        let dims: Vec<usize> = report.iter().map(|r| r.stratum_dim).collect();
        assert_eq!(dims, vec![0, 1, 1, 0]);
        let report = stratification_report(&el(&a2, &[]), DEFAULT_INTERVAL_CAP).unwrap();
        assert_eq!(report.len(), 1);
        assert_eq!(
            (
                report[0].stratum_dim,
                report[0].richardson_dim,
                report[0].leaf_dim
            ),
            (0, 0, 0)
        );
        for r in &report {
            r.check().unwrap();
        }
    }

    #[test]
    fn eigenspaces_bounded_by_rank() {
        let b3 = sys(Series::B, 3);
        for x in all_elements(&b3).unwrap() {
            let plus = eigenspace_dim(&x, Sign::Plus);
            let minus = eigenspace_dim(&x, Sign::Minus);
            assert!(plus + minus <= 3);
            let involution =
                crate::rootdata::is_identity(&crate::rootdata::mat_mul(x.matrix(), x.matrix()));
            assert_eq!(plus + minus == 3, involution, "{x}");
        }
    }

    #[test]
    fn record_check_catches_inconsistency() {
        let a2 = sys(Series::A, 2);
        let mut r =
            stratification_report(&longest_element(&a2), DEFAULT_INTERVAL_CAP).unwrap()[0].clone();
        r.check().unwrap();
        r.lattice_basis.clear();
        assert!(r.check().is_err());
    }
}
