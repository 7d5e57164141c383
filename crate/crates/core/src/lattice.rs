//! Dense matrices over a Euclidean domain: fraction-free determinants,
//! adjugates and the column Hermite normal form used as the canonical
//! representation of every lattice in the crate.
//!
//! Matrices are row-major `Vec<Vec<_>>`. A lattice in `D^n` is given by its
//! generators as columns.

use crate::domain::EuclideanDomain;

pub type Matrix<E> = Vec<Vec<E>>;

pub fn identity<D: EuclideanDomain>(d: &D, n: usize) -> Matrix<D::Elem> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { d.one() } else { d.zero() }).collect())
        .collect()
}

pub fn transpose<E: Clone>(m: &Matrix<E>) -> Matrix<E> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Columns of a row-major matrix.
pub fn columns<E: Clone>(m: &Matrix<E>) -> Vec<Vec<E>> {
    transpose(m)
}

pub fn from_columns<E: Clone>(cols: &[Vec<E>]) -> Matrix<E> {
    transpose(&cols.to_vec())
}

pub fn mat_mul<D: EuclideanDomain>(d: &D, a: &Matrix<D::Elem>, b: &Matrix<D::Elem>) -> Matrix<D::Elem> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(d.zero(), |acc, k| d.add(&acc, &d.mul(&row[k], &b[k][j]))))
                .collect()
        })
        .collect()
}

pub fn mat_vec<D: EuclideanDomain>(d: &D, a: &Matrix<D::Elem>, v: &[D::Elem]) -> Vec<D::Elem> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(d.zero(), |acc, (x, y)| d.add(&acc, &d.mul(x, y)))
        })
        .collect()
}

pub fn scale_matrix<D: EuclideanDomain>(d: &D, m: &Matrix<D::Elem>, c: &D::Elem) -> Matrix<D::Elem> {
    m.iter().map(|row| row.iter().map(|x| d.mul(x, c)).collect()).collect()
}

/// Determinant by Bareiss fraction-free elimination.
pub fn det<D: EuclideanDomain>(d: &D, m: &Matrix<D::Elem>) -> D::Elem {
    let n = m.len();
    if n == 0 {
        return d.one();
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = d.one();
    for k in 0..n - 1 {
        if d.is_zero(&a[k][k]) {
            match (k + 1..n).find(|&i| !d.is_zero(&a[i][k])) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return d.zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = d.sub(&d.mul(&a[i][j], &a[k][k]), &d.mul(&a[i][k], &a[k][j]));
                a[i][j] = d.exact_div(&num, &prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let r = a[n - 1][n - 1].clone();
    if negate {
        d.neg(&r)
    } else {
        r
    }
}

fn minor<E: Clone>(m: &Matrix<E>, row: usize, col: usize) -> Matrix<E> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != row)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|(j, _)| *j != col)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

/// Classical adjugate: `m * adj(m) = det(m) * I`.
pub fn adjugate<D: EuclideanDomain>(d: &D, m: &Matrix<D::Elem>) -> Matrix<D::Elem> {
    let n = m.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = det(d, &minor(m, j, i));
                    if (i + j) % 2 == 1 {
                        d.neg(&c)
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect()
}

fn axpy<D: EuclideanDomain>(d: &D, a: &D::Elem, x: &[D::Elem], b: &D::Elem, y: &[D::Elem]) -> Vec<D::Elem> {
    x.iter()
        .zip(y)
        .map(|(xi, yi)| d.add(&d.mul(a, xi), &d.mul(b, yi)))
        .collect()
}

/// Column Hermite normal form of the lattice spanned by `gens` (vectors of
/// length `n`): upper triangular, unit-normal diagonal, and entries above
/// the diagonal reduced modulo the diagonal entry of their row. Returns
/// `None` when the generators do not span a rank-`n` lattice.
///
/// `modulus`, when given, must be a nonzero element `m` with `m * D^n`
/// contained in the lattice; intermediate entries are then kept reduced
/// modulo `m`.
pub fn hnf<D: EuclideanDomain>(
    d: &D,
    n: usize,
    gens: &[Vec<D::Elem>],
    modulus: Option<&D::Elem>,
) -> Option<Matrix<D::Elem>> {
    let mut work: Vec<Vec<D::Elem>> = gens
        .iter()
        .filter(|g| g.iter().any(|x| !d.is_zero(x)))
        .cloned()
        .collect();
    let mut cols: Vec<Vec<D::Elem>> = vec![Vec::new(); n];
    for i in (0..n).rev() {
        if let Some(m) = modulus {
            for col in work.iter_mut() {
                for x in col.iter_mut().take(i + 1) {
                    *x = d.rem(x, m);
                }
            }
            for k in 0..=i {
                let mut e = vec![d.zero(); n];
                e[k] = m.clone();
                work.push(e);
            }
            work.retain(|g| g.iter().any(|x| !d.is_zero(x)));
        }
        let best = work
            .iter()
            .enumerate()
            .filter(|(_, c)| !d.is_zero(&c[i]))
            .min_by_key(|(_, c)| d.abv(&c[i]))
            .map(|(k, _)| k)?;
        let mut piv = work.swap_remove(best);
        for c in work.iter_mut() {
            if d.is_zero(&c[i]) {
                continue;
            }
            let (g, u, v) = d.gcd_ext(&piv[i], &c[i]);
            let a = d.exact_div(&piv[i], &g).unwrap();
            let b = d.exact_div(&c[i], &g).unwrap();
            let new_piv = axpy(d, &u, &piv, &v, c);
            let new_c = axpy(d, &a, c, &d.neg(&b), &piv);
            piv = new_piv;
            *c = new_c;
        }
        let (_, unit) = d.normal_part(&piv[i]);
        let inv = d.unit_inverse(&unit);
        piv = piv.iter().map(|x| d.mul(x, &inv)).collect();
        if let Some(m) = modulus {
            for x in piv.iter_mut().take(i) {
                *x = d.rem(x, m);
            }
        }
        cols[i] = piv;
        work.retain(|g| g.iter().any(|x| !d.is_zero(x)));
    }
    for j in 0..n {
        for i in (0..j).rev() {
            let (q, _) = d.div_rem(&cols[j][i], &cols[i][i]);
            if !d.is_zero(&q) {
                let nq = d.neg(&q);
                let ci = cols[i].clone();
                cols[j] = axpy(d, &d.one(), &cols[j], &nq, &ci);
            }
        }
    }
    Some(from_columns(&cols))
}

/// Solves `h x = v` for upper-triangular `h` with nonzero diagonal; `None`
/// when the solution is not integral over the domain.
pub fn solve_upper<D: EuclideanDomain>(d: &D, h: &Matrix<D::Elem>, v: &[D::Elem]) -> Option<Vec<D::Elem>> {
    let n = h.len();
    let mut x = vec![d.zero(); n];
    for i in (0..n).rev() {
        let mut s = v[i].clone();
        for k in i + 1..n {
            s = d.sub(&s, &d.mul(&h[i][k], &x[k]));
        }
        x[i] = d.exact_div(&s, &h[i][i])?;
    }
    Some(x)
}

/// Content: unit-normal gcd of all entries.
pub fn content<D: EuclideanDomain>(d: &D, m: &Matrix<D::Elem>) -> D::Elem {
    m.iter().flatten().fold(d.zero(), |g, x| d.gcd(&g, x))
}
