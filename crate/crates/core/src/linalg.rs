//! Exact linear algebra over ℤ and ℚ for small dense matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type BigMatrix = Vec<Vec<BigInt>>;

pub fn to_big(a: &[Vec<i64>]) -> BigMatrix {
    a.iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Fraction-free (Bareiss) elimination. Returns the rank and, for square
/// input, the determinant.
fn bareiss(a: &BigMatrix) -> (usize, BigInt) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m = a.clone();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            sign = -sign;
        }
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let v = &m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j];
                m[i][j] = v / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    let det = if rows == cols && rank == rows {
        if rows == 0 {
            BigInt::one()
        } else {
            sign * &m[rows - 1][cols - 1]
        }
    } else {
        BigInt::zero()
    };
    (rank, det)
}

pub fn rank(a: &BigMatrix) -> usize {
    bareiss(a).0
}

pub fn determinant(a: &BigMatrix) -> BigInt {
    bareiss(a).1
}

fn to_rational(a: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    a.iter()
        .map(|row| {
            row.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect()
}

/// Reduced row echelon form over ℚ, returning the pivot columns.
fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let v = &f * &m[r][j];
                    m[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn inverse_rational(a: &[Vec<i64>]) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut aug: Vec<Vec<BigRational>> = to_rational(a)
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Basis of the rational null space `{x : A x = 0}`, one vector per free column.
pub fn rational_kernel(a: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut m = to_rational(a);
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Scales a rational vector to a primitive integer vector.
pub fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    primitive(&ints)
}

pub fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = content(v);
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

fn row_sub(m: &mut [Vec<BigInt>], target: usize, source: usize, factor: &BigInt) {
    if factor.is_zero() {
        return;
    }
    let src = m[source].clone();
    for (t, s) in m[target].iter_mut().zip(src) {
        *t -= factor * s;
    }
}

/// Row-style Hermite normal form with a unimodular transform `U` such that
/// `U · A = H`. `H` keeps all rows (zero rows last); pivots are positive and
/// entries above each pivot lie in `[0, pivot)`.
pub fn hermite_with_transform(a: &BigMatrix) -> (BigMatrix, BigMatrix) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut h = a.clone();
    let mut u: BigMatrix = (0..rows)
        .map(|i| {
            (0..rows)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let pick = (r..rows)
                .filter(|&i| !h[i][c].is_zero())
                .min_by(|&i, &j| h[i][c].abs().cmp(&h[j][c].abs()));
            let Some(p) = pick else { break };
            h.swap(p, r);
            u.swap(p, r);
            let mut done = true;
            for i in r + 1..rows {
                if h[i][c].is_zero() {
                    continue;
                }
                let q = h[i][c].div_floor(&h[r][c]);
                row_sub(&mut h, i, r, &q);
                row_sub(&mut u, i, r, &q);
                if !h[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[r][c].is_zero() {
            continue;
        }
        if h[r][c].is_negative() {
            for x in h[r].iter_mut().chain(u[r].iter_mut()) {
                *x = -x.clone();
            }
        }
        for i in 0..r {
            let q = h[i][c].div_floor(&h[r][c]);
            row_sub(&mut h, i, r, &q);
            row_sub(&mut u, i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

/// Nonzero rows of the Hermite normal form of the row lattice of `a`.
pub fn hermite_normal_form(a: &BigMatrix) -> BigMatrix {
    let (h, _) = hermite_with_transform(a);
    h.into_iter()
        .filter(|row| row.iter().any(|x| !x.is_zero()))
        .collect()
}

/// Basis of `{x ∈ ℤⁿ : A x = 0}` in Hermite normal form. `ncols` is needed
/// when `a` has no rows.
pub fn integer_kernel(a: &BigMatrix, ncols: usize) -> BigMatrix {
    // U · Aᵀ = H; rows of U against zero rows of H span the kernel of A.
    let at: BigMatrix = (0..ncols)
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect();
    if a.is_empty() {
        let id: BigMatrix = (0..ncols)
            .map(|i| (0..ncols).map(|j| BigInt::from(u8::from(i == j))).collect())
            .collect();
        return hermite_normal_form(&id);
    }
    let (h, u) = hermite_with_transform(&at);
    let kernel: BigMatrix = h
        .iter()
        .zip(u)
        .filter(|(row, _)| row.iter().all(Zero::is_zero))
        .map(|(_, urow)| urow)
        .collect();
    hermite_normal_form(&kernel)
}

/// Saturation `(ℚ-span of rows) ∩ ℤⁿ`, in Hermite normal form.
pub fn saturate(rows: &BigMatrix, ncols: usize) -> BigMatrix {
    if rows.is_empty() {
        return Vec::new();
    }
    let complement = integer_kernel(rows, ncols);
    integer_kernel(&complement, ncols)
}
