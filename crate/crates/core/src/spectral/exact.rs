//! Exact integer linear algebra for deciding spectral threshold ties.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Square integer matrix stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        IntMatrix { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
///
/// Every intermediate entry is a minor of the input, so the division by the
/// previous pivot is exact.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.n;
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(m.get(i, j))).collect())
        .collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Definiteness class of a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Definiteness {
    PositiveDefinite,
    /// Positive semidefinite with a nontrivial kernel.
    SingularSemidefinite,
    /// Has a negative eigenvalue.
    Indefinite,
}

/// Classifies a symmetric integer matrix by exact symmetric Gaussian
/// elimination over the rationals.
///
/// A symmetric matrix is positive semidefinite iff eliminating along the
/// diagonal never meets a negative pivot, and every zero pivot has a zero
/// row in the current Schur complement.
pub fn classify_semidefinite(m: &IntMatrix) -> Definiteness {
    debug_assert!(m.is_symmetric());
    let n = m.n;
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(BigInt::from(m.get(i, j))))
                .collect()
        })
        .collect();
    let mut singular = false;
    for k in 0..n {
        let pivot = a[k][k].clone();
        if pivot.is_negative() {
            return Definiteness::Indefinite;
        }
        if pivot.is_zero() {
            if (k + 1..n).any(|j| !a[k][j].is_zero()) {
                return Definiteness::Indefinite;
            }
            singular = true;
            continue;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = &a[i][k] / &pivot;
            for j in k + 1..n {
                if a[k][j].is_zero() {
                    continue;
                }
                let delta = &factor * &a[k][j];
                a[i][j] -= delta;
            }
        }
    }
    if singular {
        Definiteness::SingularSemidefinite
    } else {
        Definiteness::PositiveDefinite
    }
}
