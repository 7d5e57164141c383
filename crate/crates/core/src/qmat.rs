//! Exact linear algebra over the rationals (row-major matrices).

use num_traits::{One, Zero};

use crate::arith::Rational;

pub type QMatrix = Vec<Vec<Rational>>;

pub fn det(m: &QMatrix) -> Rational {
    let n = m.len();
    let mut a = m.clone();
    let mut acc = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            a.swap(p, k);
            acc = -acc;
        }
        let piv = a[k][k].clone();
        acc *= &piv;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &piv;
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    acc
}

pub fn trace(m: &QMatrix) -> Rational {
    (0..m.len()).fold(Rational::zero(), |acc, i| acc + &m[i][i])
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(m: &QMatrix) -> Option<QMatrix> {
    let n = m.len();
    let mut a: QMatrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(p, k);
        let inv = a[k][k].recip();
        for x in a[k].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != k && !a[i][k].is_zero() {
                let f = a[i][k].clone();
                for j in 0..2 * n {
                    let t = &f * &a[k][j];
                    a[i][j] -= t;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec(m: &QMatrix, v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn mat_mul(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b).map(|(x, r)| x * &r[j]).sum())
                .collect()
        })
        .collect()
}

pub fn from_columns(cols: &[Vec<Rational>]) -> QMatrix {
    if cols.is_empty() {
        return Vec::new();
    }
    (0..cols[0].len())
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect()
}

/// Coefficients `c` with `sum c_k * vectors[k] = target`, if the target lies
/// in the span. The vectors must be linearly independent.
pub fn express(vectors: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let k = vectors.len();
    let n = target.len();
    // Augmented system with the vectors as columns.
    let mut a: QMatrix = (0..n)
        .map(|i| {
            let mut r: Vec<Rational> = vectors.iter().map(|v| v[i].clone()).collect();
            r.push(target[i].clone());
            r
        })
        .collect();
    let mut row = 0;
    let mut pivots = Vec::new();
    for col in 0..k {
        let Some(p) = (row..n).find(|&i| !a[i][col].is_zero()) else {
            return None;
        };
        a.swap(p, row);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != row && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in 0..=k {
                    let t = &f * &a[row][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(row);
        row += 1;
    }
    if (row..n).any(|i| !a[i][k].is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&r| a[r][k].clone()).collect())
}
