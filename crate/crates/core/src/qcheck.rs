//! Small explicit representations of `U_q(sl2)` and `U_q(sl3)` over `ℚ(q)`,
//! with exact checks of the defining relations, the rank-one R-matrix
//! `R^s = exp_q((1 − q⁻²) X⁺ ⊗ X⁻)` and its contractions.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qarith::{exp_q_coefficients, q_binomial, q_int, LaurentPoly, QFraction};
use crate::rootdata::{Root, RootSystem, Weight};

pub const MAX_SL2_HIGHEST_WEIGHT: u32 = 12;
pub const MAX_TENSOR_FACTOR: u32 = 8;

/// Dense square matrix over `ℚ(q)`.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    n: usize,
    data: Vec<QFraction>,
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{}", self.n, self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl QMatrix {
    pub fn zero(n: usize) -> Self {
        QMatrix {
            n,
            data: vec![QFraction::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, QFraction::one());
        }
        m
    }

    pub fn diagonal(entries: Vec<QFraction>) -> Self {
        let mut m = Self::zero(entries.len());
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &QFraction {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: QFraction) {
        self.data[i * self.n + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(QFraction::is_zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &QFraction)> {
        self.data
            .iter()
            .enumerate()
            .map(move |(k, v)| (k / self.n, k % self.n, v))
    }

    pub fn scale(&self, c: &QFraction) -> Self {
        QMatrix {
            n: self.n,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.n), |acc, _| &acc * self)
    }

    /// Kronecker product; basis `(i, j)` of the result sits at `i·dim(rhs) + j`.
    pub fn kron(&self, rhs: &QMatrix) -> Self {
        let m = rhs.n;
        let mut out = Self::zero(self.n * m);
        for (i, j, a) in self.entries() {
            if a.is_zero() {
                continue;
            }
            for (k, l, b) in rhs.entries() {
                if !b.is_zero() {
                    out.set(i * m + k, j * m + l, a * b);
                }
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries().all(|(i, j, v)| i == j || v.is_zero())
    }

    /// True when all nonzero entries sit strictly above the diagonal
    /// after adding the identity back.
    pub fn is_unipotent_upper(&self) -> bool {
        self.entries().all(|(i, j, v)| match i.cmp(&j) {
            std::cmp::Ordering::Equal => v.is_one(),
            std::cmp::Ordering::Greater => v.is_zero(),
            std::cmp::Ordering::Less => true,
        })
    }

    /// Determinant by Gaussian elimination over `ℚ(q)`.
    pub fn determinant(&self) -> QFraction {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = QFraction::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r * n + c].is_zero()) else {
                return QFraction::zero();
            };
            if p != c {
                for j in 0..n {
                    a.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let pivot = a[c * n + c].clone();
            det = &det * &pivot;
            for r in c + 1..n {
                if a[r * n + c].is_zero() {
                    continue;
                }
                let f = &a[r * n + c] / &pivot;
                for j in c..n {
                    let v = &f * &a[c * n + j];
                    a[r * n + j] = &a[r * n + j] - &v;
                }
            }
        }
        det
    }

    pub fn all_laurent(&self) -> bool {
        self.data.iter().all(QFraction::is_laurent)
    }

    /// Entrywise `f(1)`.
    pub fn specialize(&self) -> Result<Vec<Vec<BigRational>>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).value_at_one()).collect())
            .collect()
    }

    /// Entrywise `f′(1)`.
    pub fn specialize_derivative(&self) -> Result<Vec<Vec<BigRational>>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.get(i, j).derivative_at_one())
                    .collect()
            })
            .collect()
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.n, rhs.n, "matrix sizes differ");
        let n = self.n;
        let mut out = QMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.data[k * n + j];
                    if !b.is_zero() {
                        out.data[i * n + j] = &out.data[i * n + j] + &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl Add for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.n, rhs.n, "matrix sizes differ");
        QMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.n, rhs.n, "matrix sizes differ");
        QMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// Generators of a finite-dimensional type 1 module, in a weight basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepData {
    pub dimension: usize,
    pub x_plus: Vec<QMatrix>,
    pub x_minus: Vec<QMatrix>,
    pub k: Vec<QMatrix>,
    pub k_inv: Vec<QMatrix>,
    /// Weight of each basis vector; index 0 is the highest weight vector.
    pub weights: Vec<Weight>,
}

impl RepData {
    pub fn rank(&self) -> usize {
        self.x_plus.len()
    }

    /// Builds `K_i^{±1}` from the weight labels: `K_i v = q^{<λ, α_i>} v`.
    fn with_weights(
        rs: &RootSystem,
        x_plus: Vec<QMatrix>,
        x_minus: Vec<QMatrix>,
        weights: Vec<Weight>,
    ) -> Result<Self> {
        let mut k = Vec::new();
        let mut k_inv = Vec::new();
        for i in 1..=rs.rank() {
            let exps = weights
                .iter()
                .map(|w| weight_exponent(rs, w, i))
                .collect::<Result<Vec<i64>>>()?;
            k.push(QMatrix::diagonal(
                exps.iter().map(|&e| QFraction::q_pow(e)).collect(),
            ));
            k_inv.push(QMatrix::diagonal(
                exps.iter().map(|&e| QFraction::q_pow(-e)).collect(),
            ));
        }
        Ok(RepData {
            dimension: weights.len(),
            x_plus,
            x_minus,
            k,
            k_inv,
            weights,
        })
    }
}

/// `<λ, α_i>` as an integer; it equals `d_i λ_i`.
fn weight_exponent(rs: &RootSystem, w: &Weight, i: usize) -> Result<i64> {
    let alpha = rs.root_to_weight(&Root::simple(rs.rank(), i));
    let p = rs.pair(w, &alpha)?;
    if !p.is_integer() {
        return Err(Error::Shape(format!("non-integral pairing {p}")));
    }
    Ok(p.to_integer().try_into().expect("small pairing"))
}

fn sl2() -> RootSystem {
    crate::rootdata::root_system(crate::rootdata::Series::A, 1).expect("A1 exists")
}

fn sl3() -> RootSystem {
    crate::rootdata::root_system(crate::rootdata::Series::A, 2).expect("A2 exists")
}

fn frac(p: LaurentPoly) -> QFraction {
    QFraction::from_poly(p)
}

/// The `(n+1)`-dimensional irreducible `U_q(sl2)`-module with basis `v_0..v_n`.
pub fn uqsl2_rep(n: u32) -> Result<RepData> {
    if n > MAX_SL2_HIGHEST_WEIGHT {
        return Err(Error::SizeGuard {
            size: n as usize,
            max: MAX_SL2_HIGHEST_WEIGHT as usize,
        });
    }
    let dim = n as usize + 1;
    let mut xp = QMatrix::zero(dim);
    let mut xm = QMatrix::zero(dim);
    for m in 0..dim {
        let mu = m as u32;
        if m > 0 {
            xp.set(m - 1, m, frac(q_int(n - mu + 1, 1)));
        }
        if m < dim - 1 {
            xm.set(m + 1, m, frac(q_int(mu + 1, 1)));
        }
    }
    let weights = (0..dim)
        .map(|m| Weight(vec![i64::from(n) - 2 * m as i64]))
        .collect();
    RepData::with_weights(&sl2(), vec![xp], vec![xm], weights)
}

/// The 3-dimensional vector representation of `U_q(sl3)`.
pub fn uqsl3_vector_rep() -> Result<RepData> {
    let mut xm1 = QMatrix::zero(3);
    let mut xm2 = QMatrix::zero(3);
    xm1.set(1, 0, QFraction::one());
    xm2.set(2, 1, QFraction::one());
    let mut xp1 = QMatrix::zero(3);
    let mut xp2 = QMatrix::zero(3);
    xp1.set(0, 1, QFraction::one());
    xp2.set(1, 2, QFraction::one());
    let weights = vec![Weight(vec![1, 0]), Weight(vec![-1, 1]), Weight(vec![0, -1])];
    RepData::with_weights(&sl3(), vec![xp1, xp2], vec![xm1, xm2], weights)
}

/// Pass/fail per family of defining relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RelationReport {
    /// `K_i K_i⁻¹ = 1` and `K_i K_j = K_j K_i`.
    pub torus: bool,
    /// `K_i X^±_j K_i⁻¹ = q_i^{±c_ij} X^±_j`.
    pub conjugation: bool,
    /// `(q_i − q_i⁻¹)[X⁺_i, X⁻_j] = δ_ij (K_i − K_i⁻¹)`.
    pub commutator: bool,
    /// Quantum Serre relations for `i ≠ j`.
    pub serre: bool,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.torus && self.conjugation && self.commutator && self.serre
    }

    pub fn families(&self) -> [(&'static str, bool); 4] {
        [
            ("torus", self.torus),
            ("conjugation", self.conjugation),
            ("commutator", self.commutator),
            ("serre", self.serre),
        ]
    }
}

fn check_shapes(rep: &RepData, rs: &RootSystem) -> Result<()> {
    let r = rs.rank();
    for (name, family) in [
        ("X+", &rep.x_plus),
        ("X-", &rep.x_minus),
        ("K", &rep.k),
        ("K^-1", &rep.k_inv),
    ] {
        if family.len() != r {
            return Err(Error::Shape(format!(
                "{name}: {} generators for rank {r}",
                family.len()
            )));
        }
        if let Some(m) = family.iter().find(|m| m.size() != rep.dimension) {
            return Err(Error::Shape(format!(
                "{name}: {0}x{0} matrix in a {1}-dimensional module",
                m.size(),
                rep.dimension
            )));
        }
    }
    if rep.weights.len() != rep.dimension {
        return Err(Error::Shape(format!(
            "{} weight labels for dimension {}",
            rep.weights.len(),
            rep.dimension
        )));
    }
    Ok(())
}

/// Checks every defining relation of `U_q(g)` on `rep`, exactly.
pub fn verify_relations(rep: &RepData, rs: &RootSystem) -> Result<RelationReport> {
    check_shapes(rep, rs)?;
    let r = rs.rank();
    let dim = rep.dimension;
    let id = QMatrix::identity(dim);
    let c = rs.cartan();
    let d = rs.symmetrizers();

    let mut torus = true;
    for i in 0..r {
        torus &= &rep.k[i] * &rep.k_inv[i] == id && &rep.k_inv[i] * &rep.k[i] == id;
        for j in 0..r {
            torus &= &rep.k[i] * &rep.k[j] == &rep.k[j] * &rep.k[i];
        }
    }

    let mut conjugation = true;
    for i in 0..r {
        for j in 0..r {
            let e = d[i] * c[i][j];
            let lhs_p = &(&rep.k[i] * &rep.x_plus[j]) * &rep.k_inv[i];
            let lhs_m = &(&rep.k[i] * &rep.x_minus[j]) * &rep.k_inv[i];
            conjugation &= lhs_p == rep.x_plus[j].scale(&QFraction::q_pow(e));
            conjugation &= lhs_m == rep.x_minus[j].scale(&QFraction::q_pow(-e));
        }
    }

    let mut commutator = true;
    for i in 0..r {
        let qi = QFraction::q_pow(d[i]);
        let qi_diff = &qi - &QFraction::q_pow(-d[i]);
        for j in 0..r {
            let bracket = &(&rep.x_plus[i] * &rep.x_minus[j]) - &(&rep.x_minus[j] * &rep.x_plus[i]);
            let lhs = bracket.scale(&qi_diff);
            let rhs = if i == j {
                &rep.k[i] - &rep.k_inv[i]
            } else {
                QMatrix::zero(dim)
            };
            commutator &= lhs == rhs;
        }
    }

    let mut serre = true;
    for i in 0..r {
        for j in 0..r {
            if i == j {
                continue;
            }
            let top = u32::try_from(1 - c[i][j]).expect("off-diagonal Cartan entries are ≤ 0");
            let di = u32::try_from(d[i]).expect("positive symmetrizer");
            for gens in [&rep.x_plus, &rep.x_minus] {
                let mut sum = QMatrix::zero(dim);
                for k in 0..=top {
                    let mut coeff = frac(q_binomial(top, i64::from(k), di));
                    if k % 2 == 1 {
                        coeff = -coeff;
                    }
                    let term = &(&gens[i].pow(k) * &gens[j]) * &gens[i].pow(top - k);
                    sum = &sum + &term.scale(&coeff);
                }
                serre &= sum.is_zero();
            }
        }
    }

    Ok(RelationReport {
        torus,
        conjugation,
        commutator,
        serre,
    })
}

/// `K_i` is diagonal with entries `q^{<λ, α_i>}` and `X^±_i` shifts weights by `±α_i`.
pub fn check_weight_grading(rep: &RepData, rs: &RootSystem) -> Result<bool> {
    check_shapes(rep, rs)?;
    let r = rs.rank();
    for i in 1..=r {
        let k = &rep.k[i - 1];
        if !k.is_diagonal() {
            return Ok(false);
        }
        for (b, w) in rep.weights.iter().enumerate() {
            if *k.get(b, b) != QFraction::q_pow(weight_exponent(rs, w, i)?) {
                return Ok(false);
            }
        }
        let alpha = rs.root_to_weight(&Root::simple(r, i));
        for (gen, sign) in [(&rep.x_plus[i - 1], 1), (&rep.x_minus[i - 1], -1)] {
            for (a, b, v) in gen.entries() {
                if v.is_zero() {
                    continue;
                }
                let shifted: Vec<i64> = rep.weights[b]
                    .0
                    .iter()
                    .zip(&alpha.0)
                    .map(|(x, y)| x + sign * y)
                    .collect();
                if rep.weights[a].0 != shifted {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn check_tensor_size(n: u32, m: u32) -> Result<()> {
    for s in [n, m] {
        if s > MAX_TENSOR_FACTOR {
            return Err(Error::SizeGuard {
                size: s as usize,
                max: MAX_TENSOR_FACTOR as usize,
            });
        }
    }
    Ok(())
}

/// `1 − q⁻²`.
fn r_argument_scalar() -> QFraction {
    &QFraction::one() - &QFraction::q_pow(-2)
}

/// `R^s = Σ_k c_k (1 − q⁻²)^k (X⁺)^k ⊗ (X⁻)^k` on `V(n) ⊗ V(m)`, with
/// `c_k` the coefficients of `exp_q`. The basis `v_i ⊗ v_j` sits at
/// `i·(m+1) + j`.
pub fn rmatrix_on_tensor(n: u32, m: u32) -> Result<QMatrix> {
    check_tensor_size(n, m)?;
    let left = uqsl2_rep(n)?;
    let right = uqsl2_rep(m)?;
    let top = n.min(m);
    let coeffs = exp_q_coefficients(top, 1);
    let base = r_argument_scalar();
    let mut r = QMatrix::zero(left.dimension * right.dimension);
    for (k, c) in coeffs.iter().enumerate() {
        let k = k as u32;
        let scalar = c * &base.pow(k);
        let term = left.x_plus[0].pow(k).kron(&right.x_minus[0].pow(k));
        r = &r + &term.scale(&scalar);
    }
    Ok(r)
}

/// Inverse of a unipotent matrix as the finite series `Σ (I − R)^k`.
pub fn unipotent_inverse(r: &QMatrix) -> QMatrix {
    let id = QMatrix::identity(r.size());
    let minus_nil = &id - r;
    let mut term = id.clone();
    let mut acc = id;
    for _ in 0..r.size() {
        term = &term * &minus_nil;
        if term.is_zero() {
            break;
        }
        acc = &acc + &term;
    }
    acc
}

/// One operator of the contraction `(v_j^* ⊗ id)(R^s (v_n ⊗ ·))` on `V(m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiTerm {
    pub j: u32,
    /// `n − j`; the operator is `scalar · (X⁻)^power`.
    pub power: u32,
    /// `c_k (1 − q⁻²)^k ((X⁺)^k)_{j,n}` with `k = power`.
    pub scalar: QFraction,
    /// Read off from the R-matrix.
    pub operator: QMatrix,
}

/// Contractions of `R^s` against the lowest weight vector `v_n` of `V(n)`,
/// for `j = n, …, 0`.
pub fn phi_slice(n: u32, m: u32) -> Result<Vec<PhiTerm>> {
    check_tensor_size(n, m)?;
    let r = rmatrix_on_tensor(n, m)?;
    let left = uqsl2_rep(n)?;
    let coeffs = exp_q_coefficients(n, 1);
    let base = r_argument_scalar();
    let dm = m as usize + 1;
    let nn = n as usize;
    let mut out = Vec::with_capacity(nn + 1);
    for j in (0..=nn).rev() {
        let mut op = QMatrix::zero(dm);
        for a in 0..dm {
            for b in 0..dm {
                op.set(a, b, r.get(j * dm + a, nn * dm + b).clone());
            }
        }
        let k = (nn - j) as u32;
        let raise = left.x_plus[0].pow(k);
        let scalar = &(&coeffs[k as usize] * &base.pow(k)) * raise.get(j, nn);
        out.push(PhiTerm {
            j: j as u32,
            power: k,
            scalar,
            operator: op,
        });
    }
    Ok(out)
}

/// At `q = 1` the generators of `uqsl2_rep(n)` become `e`, `f` and
/// `h = dK/dq|_{q=1} = diag(n − 2m)`; checks `[e, f] = h`.
pub fn classical_sl2_check(n: u32) -> Result<bool> {
    let rep = uqsl2_rep(n)?;
    let e = rep.x_plus[0].specialize()?;
    let f = rep.x_minus[0].specialize()?;
    let h = rep.k[0].specialize_derivative()?;
    let dim = rep.dimension;
    let mul = |a: &Vec<Vec<BigRational>>, b: &Vec<Vec<BigRational>>| -> Vec<Vec<BigRational>> {
        (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| (0..dim).map(|k| &a[i][k] * &b[k][j]).sum())
                    .collect()
            })
            .collect()
    };
    let ef = mul(&e, &f);
    let fe = mul(&f, &e);
    let ok = (0..dim).all(|i| {
        (0..dim).all(|j| {
            let expected = if i == j {
                BigRational::from_integer((i64::from(n) - 2 * i as i64).into())
            } else {
                BigRational::zero()
            };
            &ef[i][j] - &fe[i][j] == expected && h[i][j] == expected
        })
    });
    // K itself specializes to the identity
    let k1 = rep.k[0].specialize()?;
    let unit = (0..dim).all(|i| {
        (0..dim).all(|j| {
            k1[i][j]
                == if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
        })
    });
    Ok(ok && unit)
}
