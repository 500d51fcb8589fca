//! Cartan data for the finite crystallographic root systems.
//!
//! Nodes follow the Bourbaki labeling. The Cartan matrix uses
//! `c_ij = <α_i^∨, α_j>`, so the j-th column of `cartan` lists the
//! fundamental-weight coordinates of `α_j`. The symmetrizers satisfy
//! `d_i = <α_i, α_i> / 2` with short roots of square length 2.
//!
//! | series | rank   | diagram (Bourbaki)                         | d          |
//! |--------|--------|--------------------------------------------|------------|
//! | A      | 1..=8  | 1 - 2 - ... - n                            | all 1      |
//! | B      | 2..=8  | 1 - ... - (n-1) => n   (α_n short)         | 2,..,2,1   |
//! | C      | 2..=8  | 1 - ... - (n-1) <= n   (α_n long)          | 1,..,1,2   |
//! | D      | 4..=8  | 1 - ... - (n-2), (n-2) - (n-1), (n-2) - n  | all 1      |
//! | E      | 6,7,8  | 1 - 3 - 4 - 5 - ... - n, 2 - 4             | all 1      |
//! | F      | 4      | 1 - 2 => 3 - 4          (α_1, α_2 long)    | 2,2,1,1    |
//! | G      | 2      | 1 <= 2                  (α_2 long)         | 1,3        |

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;

pub const MAX_RANK: usize = 8;

/// Integer matrix stored row-major.
pub type IntMatrix = Vec<Vec<i64>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Result<Self> {
        Ok(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return Err(Error::UnknownSeries(c.to_string())),
        })
    }

    fn rank_ok(self, rank: usize) -> bool {
        match self {
            Series::A => (1..=MAX_RANK).contains(&rank),
            Series::B | Series::C => (2..=MAX_RANK).contains(&rank),
            Series::D => (4..=MAX_RANK).contains(&rank),
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        }
    }
}

/// Weight in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Weight(v)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }
}

/// Root in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Root(v)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    series: Series,
    rank: usize,
    cartan: IntMatrix,
    symmetrizers: Vec<i64>,
    gram: Vec<Vec<BigRational>>,
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for RootSystem {
    type Err = Error;

    /// Parses names like `A2`, `e8`, `G2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::UnknownSeries(String::new()))?;
        let series =
            Series::from_letter(letter).map_err(|_| Error::UnknownSeries(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownSeries(s.to_string()))?;
        root_system(series, rank)
    }
}

/// Builds the root system of the given simple type.
pub fn root_system(series: Series, rank: usize) -> Result<RootSystem> {
    if !series.rank_ok(rank) {
        return Err(Error::RankOutOfRange {
            series: series.letter(),
            rank,
        });
    }
    let n = rank;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut d = vec![1i64; n];
    // simple edge between nodes a and b (1-based)
    let link = |c: &mut IntMatrix, a: usize, b: usize| {
        c[a - 1][b - 1] = -1;
        c[b - 1][a - 1] = -1;
    };
    match series {
        Series::A => {
            for i in 1..n {
                link(&mut c, i, i + 1);
            }
        }
        Series::B => {
            for i in 1..n {
                link(&mut c, i, i + 1);
            }
            c[n - 1][n - 2] = -2;
            for di in d.iter_mut().take(n - 1) {
                *di = 2;
            }
        }
        Series::C => {
            for i in 1..n {
                link(&mut c, i, i + 1);
            }
            c[n - 2][n - 1] = -2;
            d[n - 1] = 2;
        }
        Series::D => {
            for i in 1..n - 1 {
                link(&mut c, i, i + 1);
            }
            link(&mut c, n - 2, n);
        }
        Series::E => {
            link(&mut c, 1, 3);
            link(&mut c, 2, 4);
            for i in 3..n {
                link(&mut c, i, i + 1);
            }
        }
        Series::F => {
            link(&mut c, 1, 2);
            link(&mut c, 2, 3);
            link(&mut c, 3, 4);
            c[2][1] = -2;
            d = vec![2, 2, 1, 1];
        }
        Series::G => {
            c[0][1] = -3;
            c[1][0] = -1;
            d = vec![1, 3];
        }
    }
    let gram = gram_matrix(&c, &d);
    Ok(RootSystem {
        series,
        rank,
        cartan: c,
        symmetrizers: d,
        gram,
    })
}

/// `G = diag(d) · C⁻¹`, which is the unique matrix with `(G C)_ij = δ_ij d_j`.
fn gram_matrix(cartan: &IntMatrix, d: &[i64]) -> Vec<Vec<BigRational>> {
    let inv = linalg::inverse_rational(cartan).expect("Cartan matrices are invertible");
    inv.into_iter()
        .zip(d)
        .map(|(row, &di)| {
            row.into_iter()
                .map(|x| x * BigRational::from_integer(BigInt::from(di)))
                .collect()
        })
        .collect()
}

impl RootSystem {
    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    pub fn gram(&self) -> &[Vec<BigRational>] {
        &self.gram
    }

    pub fn name(&self) -> String {
        self.to_string()
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank,
            });
        }
        Ok(())
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                actual: len,
            });
        }
        Ok(())
    }

    /// The invariant form `<λ, μ> = λᵀ G μ` on ω-coordinates.
    pub fn pair(&self, lambda: &Weight, mu: &Weight) -> Result<BigRational> {
        self.check_len(lambda.rank())?;
        self.check_len(mu.rank())?;
        let mut acc = BigRational::zero();
        for (i, &li) in lambda.0.iter().enumerate() {
            if li == 0 {
                continue;
            }
            for (j, &mj) in mu.0.iter().enumerate() {
                if mj == 0 {
                    continue;
                }
                acc += &self.gram[i][j] * BigRational::from_integer(BigInt::from(li * mj));
            }
        }
        Ok(acc)
    }

    /// ω-coordinates of a root: multiplies by the Cartan matrix.
    pub fn root_to_weight(&self, root: &Root) -> Weight {
        Weight(
            (0..self.rank)
                .map(|k| (0..self.rank).map(|j| self.cartan[k][j] * root.0[j]).sum())
                .collect(),
        )
    }

    /// Matrix of `s_i λ = λ − <λ, α_i^∨> α_i` on ω-coordinates (1-based `i`).
    pub fn reflection_matrix(&self, i: usize) -> Result<IntMatrix> {
        self.check_index(i)?;
        let mut m = identity(self.rank);
        for (k, row) in m.iter_mut().enumerate() {
            row[i - 1] -= self.cartan[k][i - 1];
        }
        Ok(m)
    }

    /// Matrix of `s_i β = β − <α_i^∨, β> α_i` on α-coordinates (1-based `i`).
    pub fn root_reflection_matrix(&self, i: usize) -> Result<IntMatrix> {
        self.check_index(i)?;
        let mut m = identity(self.rank);
        for j in 0..self.rank {
            m[i - 1][j] -= self.cartan[i - 1][j];
        }
        Ok(m)
    }

    pub fn reflect_root(&self, i: usize, root: &Root) -> Root {
        let coroot_pairing: i64 = (0..self.rank)
            .map(|j| self.cartan[i - 1][j] * root.0[j])
            .sum();
        let mut out = root.0.clone();
        out[i - 1] -= coroot_pairing;
        Root(out)
    }

    /// Positive roots by closure of the simple roots under simple reflections,
    /// sorted by height and then lexicographically.
    pub fn positive_roots(&self) -> Vec<Root> {
        let mut found: Vec<Root> = (1..=self.rank)
            .map(|i| Root::simple(self.rank, i))
            .collect();
        let mut seen: std::collections::HashSet<Root> = found.iter().cloned().collect();
        let mut frontier = found.clone();
        while let Some(beta) = frontier.pop() {
            for i in 1..=self.rank {
                let image = self.reflect_root(i, &beta);
                if image.is_positive() && seen.insert(image.clone()) {
                    found.push(image.clone());
                    frontier.push(image);
                }
            }
        }
        found.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.0.cmp(&b.0)));
        found
    }
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let inner = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..inner).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &IntMatrix, v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn mat_add(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn determinant(a: &IntMatrix) -> BigInt {
    linalg::determinant(&linalg::to_big(a))
}

pub(crate) fn is_identity(a: &IntMatrix) -> bool {
    a.iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)))
}
