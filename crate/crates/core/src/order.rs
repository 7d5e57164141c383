//! Orders: free modules of finite rank over a Euclidean domain with an
//! integral multiplication table.
//!
//! [`Order`] is the domain-generic structure that ideals are built on; it only
//! knows its structure constants. [`OrderBasis`] attaches an order over `Z`
//! to a number field through a rational change of basis from the power
//! basis, and carries validation and the maximality certificate.

use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::arith::{factor_integer, is_squarefree, Integer, Rational};
use crate::domain::{EuclideanDomain, Integers};
use crate::error::{Error, Result};
use crate::lattice::{self, Matrix};
use crate::number_field::{expect_integer, NfElement, NumberField};
use crate::poly::{factor_mod_p, Polynomial};
use crate::qmat::{self, QMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Maximality {
    Unknown,
    Maximal(String),
    NotMaximal(String),
}

/// A power generator `theta` of a suborder `D[theta]` of finite index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerGenerator<D: EuclideanDomain> {
    /// Coordinates of `theta` in the order basis.
    pub coords: Vec<D::Elem>,
    /// Monic minimal polynomial of `theta` over the domain, lowest degree first.
    pub minpoly: Vec<D::Elem>,
    /// Unit-normal index `[O : D[theta]]`.
    pub index: D::Elem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Order<D: EuclideanDomain> {
    domain: D,
    table: Vec<Vec<Vec<D::Elem>>>,
    one: Vec<D::Elem>,
    generator: Option<PowerGenerator<D>>,
    maximality: Maximality,
    label: String,
}

impl<D: EuclideanDomain> Order<D> {
    /// `table[i][j]` holds the coordinates of `e_i * e_j`; `one` those of the
    /// identity. Checks commutativity, associativity and the identity law.
    pub fn new(domain: D, table: Vec<Vec<Vec<D::Elem>>>, one: Vec<D::Elem>, label: impl Into<String>) -> Result<Self> {
        let n = one.len();
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|c| c.len() != n)) {
            return Err(Error::InvalidOrder("multiplication table has the wrong shape".into()));
        }
        let order = Self {
            domain,
            table,
            one,
            generator: None,
            maximality: Maximality::Unknown,
            label: label.into(),
        };
        for i in 0..n {
            let ei = order.basis_element(i);
            if order.mul(&order.one, &ei) != ei {
                return Err(Error::InvalidOrder(format!("identity fails on basis element {i}")));
            }
            for j in 0..n {
                if order.table[i][j] != order.table[j][i] {
                    return Err(Error::InvalidOrder("multiplication is not commutative".into()));
                }
                let ej = order.basis_element(j);
                for k in 0..n {
                    let ek = order.basis_element(k);
                    if order.mul(&order.mul(&ei, &ej), &ek) != order.mul(&ei, &order.mul(&ej, &ek)) {
                        return Err(Error::InvalidOrder("multiplication is not associative".into()));
                    }
                }
            }
        }
        Ok(order)
    }

    pub fn with_generator(mut self, coords: Vec<D::Elem>, minpoly: Vec<D::Elem>) -> Result<Self> {
        let d = &self.domain;
        let n = self.rank();
        if minpoly.len() != n + 1 || minpoly[n] != d.one() {
            return Err(Error::InvalidOrder(
                "generator minimal polynomial must be monic of full degree".into(),
            ));
        }
        if !self.is_zero(&self.eval_poly(&minpoly, &coords)) {
            return Err(Error::InvalidOrder(
                "generator does not satisfy its minimal polynomial".into(),
            ));
        }
        let mut powers = Vec::with_capacity(n);
        let mut acc = self.one.clone();
        for _ in 0..n {
            powers.push(acc.clone());
            acc = self.mul(&acc, &coords);
        }
        let index = d.normalize(&lattice::det(d, &lattice::from_columns(&powers)));
        if d.is_zero(&index) {
            return Err(Error::InvalidOrder("generator powers are linearly dependent".into()));
        }
        self.generator = Some(PowerGenerator { coords, minpoly, index });
        Ok(self)
    }

    pub fn with_maximality(mut self, m: Maximality) -> Self {
        self.maximality = m;
        self
    }

    pub fn domain(&self) -> &D {
        &self.domain
    }

    pub fn rank(&self) -> usize {
        self.one.len()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn maximality(&self) -> &Maximality {
        &self.maximality
    }

    pub fn is_maximal(&self) -> bool {
        matches!(self.maximality, Maximality::Maximal(_))
    }

    pub fn generator(&self) -> Option<&PowerGenerator<D>> {
        self.generator.as_ref()
    }

    pub fn table(&self) -> &[Vec<Vec<D::Elem>>] {
        &self.table
    }

    pub fn one(&self) -> Vec<D::Elem> {
        self.one.clone()
    }

    pub fn zero(&self) -> Vec<D::Elem> {
        vec![self.domain.zero(); self.rank()]
    }

    pub fn basis_element(&self, k: usize) -> Vec<D::Elem> {
        let mut v = self.zero();
        v[k] = self.domain.one();
        v
    }

    pub fn is_zero(&self, x: &[D::Elem]) -> bool {
        x.iter().all(|c| self.domain.is_zero(c))
    }

    pub fn from_scalar(&self, c: &D::Elem) -> Vec<D::Elem> {
        self.scale(c, &self.one)
    }

    pub fn add(&self, x: &[D::Elem], y: &[D::Elem]) -> Vec<D::Elem> {
        x.iter().zip(y).map(|(a, b)| self.domain.add(a, b)).collect()
    }

    pub fn sub(&self, x: &[D::Elem], y: &[D::Elem]) -> Vec<D::Elem> {
        x.iter().zip(y).map(|(a, b)| self.domain.sub(a, b)).collect()
    }

    pub fn scale(&self, c: &D::Elem, x: &[D::Elem]) -> Vec<D::Elem> {
        x.iter().map(|a| self.domain.mul(c, a)).collect()
    }

    pub fn mul(&self, x: &[D::Elem], y: &[D::Elem]) -> Vec<D::Elem> {
        let d = &self.domain;
        let mut out = self.zero();
        for (i, xi) in x.iter().enumerate() {
            if d.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if d.is_zero(yj) {
                    continue;
                }
                let c = d.mul(xi, yj);
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    if !d.is_zero(t) {
                        *o = d.add(o, &d.mul(&c, t));
                    }
                }
            }
        }
        out
    }

    /// Horner evaluation of a polynomial with coefficients in the domain.
    pub fn eval_poly(&self, coeffs: &[D::Elem], x: &[D::Elem]) -> Vec<D::Elem> {
        let mut acc = self.zero();
        for c in coeffs.iter().rev() {
            acc = self.add(&self.mul(&acc, x), &self.from_scalar(c));
        }
        acc
    }

    /// Matrix of multiplication by `x`; column `j` holds `x * e_j`.
    pub fn lmul(&self, x: &[D::Elem]) -> Matrix<D::Elem> {
        let cols: Vec<Vec<D::Elem>> = (0..self.rank()).map(|j| self.mul(x, &self.basis_element(j))).collect();
        lattice::from_columns(&cols)
    }

    pub fn norm(&self, x: &[D::Elem]) -> D::Elem {
        lattice::det(&self.domain, &self.lmul(x))
    }

    pub fn trace(&self, x: &[D::Elem]) -> D::Elem {
        let m = self.lmul(x);
        (0..self.rank()).fold(self.domain.zero(), |acc, i| self.domain.add(&acc, &m[i][i]))
    }

    /// `N(x) / x`, an element of the order because `x` satisfies its
    /// characteristic polynomial.
    pub fn norm_cofactor(&self, x: &[D::Elem]) -> Vec<D::Elem> {
        let adj = lattice::adjugate(&self.domain, &self.lmul(x));
        lattice::mat_vec(&self.domain, &adj, &self.one)
    }

    /// Discriminant `det(trace(e_i e_j))`.
    pub fn discriminant(&self) -> D::Elem {
        let n = self.rank();
        let m: Matrix<D::Elem> = (0..n)
            .map(|i| (0..n).map(|j| self.trace(&self.table[i][j])).collect())
            .collect();
        lattice::det(&self.domain, &m)
    }

    pub fn format_element(&self, x: &[D::Elem]) -> Vec<String> {
        x.iter().map(|c| self.domain.format(c)).collect()
    }
}

/// An order in a number field, given by a `Z`-basis of field elements.
#[derive(Clone, Debug)]
pub struct OrderBasis {
    field: NumberField,
    basis: Vec<NfElement>,
    basis_matrix: QMatrix,
    inverse: QMatrix,
    index: Rational,
    order: Arc<Order<Integers>>,
}

impl PartialEq for OrderBasis {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.basis == other.basis
    }
}

impl OrderBasis {
    /// The maximal order of `Q(sqrt d)`: `{1, sqrt d}` when `d = 2, 3 (mod 4)`
    /// and `{1, (1 + sqrt d)/2}` when `d = 1 (mod 4)`.
    pub fn quadratic_maximal(d: i64) -> Result<Self> {
        if d == 0 || d == 1 || !is_squarefree(&Integer::from(d)) {
            return Err(Error::InvalidInput(format!(
                "{d} is not a squarefree integer other than 0, 1"
            )));
        }
        let field = NumberField::quadratic(d)?;
        let omega = if d.rem_euclid(4) == 1 {
            field.element(vec![
                Rational::new(1.into(), 2.into()),
                Rational::new(1.into(), 2.into()),
            ])?
        } else {
            field.gen()
        };
        let basis = vec![field.one(), omega];
        let ob = Self::from_basis(&field, &basis)?.with_certified_maximality()?;
        if !ob.order.is_maximal() {
            return Err(Error::Internal(format!(
                "closed-form order of Q(sqrt {d}) failed certification"
            )));
        }
        Ok(ob)
    }

    /// The maximal order of a quadratic field given by any monic integral
    /// `x^2 + b x + c`, via `sqrt(d0) = (2x + b) / k` where `b^2 - 4c = k^2 d0`
    /// with `d0` squarefree.
    pub fn quadratic_maximal_of(field: &NumberField) -> Result<Self> {
        let f = field.defining_poly();
        let coeffs = f.to_integer().filter(|_| field.degree() == 2).ok_or_else(|| {
            Error::Unsupported(format!(
                "closed-form maximal order needs a monic integral quadratic, got {f}"
            ))
        })?;
        let (c, b) = (&coeffs.coeffs()[0], &coeffs.coeffs()[1]);
        let disc = b * b - Integer::from(4) * c;
        let mut k = Integer::from(1);
        let mut d0 = if disc.is_negative() {
            Integer::from(-1)
        } else {
            Integer::from(1)
        };
        for (p, e) in factor_integer(&disc.abs())? {
            k *= p.pow(e / 2);
            if e % 2 == 1 {
                d0 *= p;
            }
        }
        let sqrt_d0 = field.element(vec![
            Rational::new(b.clone(), k.clone()),
            Rational::new(Integer::from(2), k),
        ])?;
        let omega = if (&d0 - 1i32) % 4i32 == Integer::zero() {
            let half = Rational::new(1.into(), 2.into());
            field.scale(&half, &field.add(&field.one(), &sqrt_d0))
        } else {
            sqrt_d0
        };
        let ob = Self::from_basis(field, &[field.one(), omega])?.with_certified_maximality()?;
        if !ob.is_maximal() {
            return Err(Error::Internal(format!(
                "closed-form order of Q[x]/({f}) failed certification"
            )));
        }
        Ok(ob)
    }

    /// `Z` inside `Q`.
    pub fn rationals() -> Self {
        let field = NumberField::rationals();
        let basis = vec![field.one()];
        Self::from_basis(&field, &basis)
            .and_then(Self::with_certified_maximality)
            .expect("Z is a valid order")
    }

    /// Validates a user-supplied basis: invertible, contains 1, closed under
    /// multiplication with integer structure constants, all elements
    /// integral. Maximality is left undetermined.
    pub fn from_basis(field: &NumberField, basis: &[NfElement]) -> Result<Self> {
        let n = field.degree();
        if basis.len() != n {
            return Err(Error::InvalidOrder(format!(
                "expected {n} basis elements, got {}",
                basis.len()
            )));
        }
        for (k, b) in basis.iter().enumerate() {
            if !field.is_integral(b) {
                return Err(Error::InvalidOrder(format!("basis element {k} ({b}) is not integral")));
            }
        }
        let cols: Vec<Vec<Rational>> = basis.iter().map(|b| b.coords().to_vec()).collect();
        let basis_matrix = qmat::from_columns(&cols);
        let inverse = qmat::inverse(&basis_matrix)
            .ok_or_else(|| Error::InvalidOrder("basis elements are linearly dependent".into()))?;
        let coords_of = |x: &NfElement, what: &str| -> Result<Vec<Integer>> {
            qmat::mat_vec(&inverse, x.coords())
                .iter()
                .map(expect_integer)
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::InvalidOrder(format!("{what} is not in the Z-span of the basis")))
        };
        let one = coords_of(&field.one(), "1")?;
        let mut table = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                table[i][j] = coords_of(&field.mul(&basis[i], &basis[j]), &format!("product b{i}*b{j}"))?;
            }
        }
        let index = qmat::det(&basis_matrix).abs().recip();
        let label = format!("order of Q[x]/({})", field.defining_poly());
        let mut order = Order::new(Integers, table, one, label)?;

        // Prefer the field generator as power generator, otherwise any basis
        // element generating a suborder of finite index; keep the smallest index.
        let mut candidates = vec![field.gen()];
        candidates.extend(basis.iter().cloned());
        let mut best: Option<Order<Integers>> = None;
        for theta in candidates {
            let Ok(coords) = coords_of(&theta, "generator") else {
                continue;
            };
            let Some(minpoly) = field.minpoly(&theta).to_integer() else {
                continue;
            };
            if minpoly.degree() != Some(n) {
                continue;
            }
            if let Ok(o) = order.clone().with_generator(coords, minpoly.into_coeffs()) {
                let better = match &best {
                    None => true,
                    Some(b) => o.generator().unwrap().index < b.generator().unwrap().index,
                };
                if better {
                    best = Some(o);
                }
            }
        }
        if let Some(b) = best {
            order = b;
        }
        Ok(Self {
            field: field.clone(),
            basis: basis.to_vec(),
            basis_matrix,
            inverse,
            index,
            order: Arc::new(order),
        })
    }

    /// Runs [`Self::maximality_certificate`] and records the outcome; an
    /// inapplicable certificate leaves maximality unknown.
    pub fn with_certified_maximality(mut self) -> Result<Self> {
        let m = match self.maximality_certificate() {
            Ok(true) => Maximality::Maximal(self.maximality_evidence()),
            Ok(false) => Maximality::NotMaximal("fails the Dedekind criterion".into()),
            Err(Error::Inapplicable(_)) => Maximality::Unknown,
            Err(e) => return Err(e),
        };
        self.order = Arc::new((*self.order).clone().with_maximality(m));
        Ok(self)
    }

    fn maximality_evidence(&self) -> String {
        let disc = self.discriminant();
        let bad: Vec<String> = self.squared_primes().iter().map(ToString::to_string).collect();
        if bad.is_empty() {
            format!("discriminant {disc} has no square prime factor")
        } else {
            format!("p-maximal by the Dedekind criterion at p = {}", bad.join(", "))
        }
    }

    fn squared_primes(&self) -> Vec<Integer> {
        let disc = self.discriminant().abs();
        factor_integer(&disc)
            .map(|f| f.into_iter().filter(|(_, e)| *e >= 2).map(|(p, _)| p).collect())
            .unwrap_or_default()
    }

    /// Whether the order is `p`-maximal at every prime `p` with `p^2` dividing
    /// its discriminant, decided by the Dedekind criterion on the minimal
    /// polynomial of a power generator whose index is prime to `p`.
    pub fn maximality_certificate(&self) -> Result<bool> {
        for p in self.squared_primes() {
            let gen = self
                .order
                .generator()
                .filter(|g| !(&g.index % &p).is_zero())
                .ok_or_else(|| {
                    Error::Inapplicable(format!(
                        "no power generator of index prime to {p}; Dedekind criterion does not apply"
                    ))
                })?;
            if !dedekind_criterion(&Polynomial::new(gen.minpoly.clone()), &p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn basis(&self) -> &[NfElement] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> &QMatrix {
        &self.basis_matrix
    }

    /// `[O : Z[a]]` as a rational (`1 / |det|` of the change of basis); an
    /// integer whenever the generator lies in the order.
    pub fn index(&self) -> &Rational {
        &self.index
    }

    pub fn order(&self) -> &Arc<Order<Integers>> {
        &self.order
    }

    pub fn degree(&self) -> usize {
        self.field.degree()
    }

    pub fn is_maximal(&self) -> bool {
        self.order.is_maximal()
    }

    pub fn discriminant(&self) -> Integer {
        self.order.discriminant()
    }

    /// Coordinates of a field element in the order basis.
    pub fn coords(&self, x: &NfElement) -> Result<Vec<Integer>> {
        qmat::mat_vec(&self.inverse, x.coords())
            .iter()
            .map(expect_integer)
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::NotInOrder(x.to_string()))
    }

    pub fn to_field(&self, coords: &[Integer]) -> NfElement {
        let v: Vec<Rational> = coords.iter().map(|c| Rational::from_integer(c.clone())).collect();
        self.field
            .element(qmat::mat_vec(&self.basis_matrix, &v))
            .expect("dimension matches")
    }

    /// Imaginary quadratic, or `Q` itself: the cases with a positive definite
    /// norm form.
    pub fn is_definite(&self) -> bool {
        match self.degree() {
            1 => true,
            2 => self.discriminant().is_negative(),
            _ => false,
        }
    }
}

/// Dedekind's criterion: `Z[theta]` with `theta` a root of monic `g` is
/// `p`-maximal iff `gcd(F, G, H) = 1` mod `p`, where `g = prod t_i^e_i`
/// mod `p`, `G = prod t_i`, `H = g / G` lifted and `F = (G H - g) / p`.
pub fn dedekind_criterion(g: &Polynomial<Integer>, p: &Integer) -> Result<bool> {
    use num_traits::ToPrimitive;
    let pu = p
        .to_u64()
        .ok_or_else(|| Error::Unsupported(format!("prime {p} too large")))?;
    let gbar = g.reduce_mod(pu);
    let factors = factor_mod_p(&gbar)?;
    let radical = factors
        .iter()
        .fold(Polynomial::constant(crate::arith::Fp::one(pu)), |acc, (t, _)| {
            acc.mul(t)
        });
    let cofactor = gbar.div_rem(&radical)?.0;
    let lifted = radical.lift().mul(&cofactor.lift());
    let diff = lifted.sub(g);
    let f = Polynomial::new(diff.coeffs().iter().map(|c| c / p).collect::<Vec<_>>());
    if !diff.coeffs().iter().all(|c| (c % p).is_zero()) {
        return Err(Error::Internal("Dedekind criterion: G*H - g not divisible by p".into()));
    }
    let fbar = f.reduce_mod(pu);
    let g1 = radical.gcd(&cofactor)?;
    let common = if fbar.is_zero() { g1 } else { g1.gcd(&fbar)? };
    Ok(common.degree() == Some(0))
}

/// Integer discriminant helper used in tests and examples.
pub fn expected_quadratic_discriminant(d: i64) -> Integer {
    if d.rem_euclid(4) == 1 {
        Integer::from(d)
    } else {
        Integer::from(4 * d)
    }
}

impl OrderBasis {
    /// Element of the order from integer coordinates.
    pub fn element(&self, coords: &[i64]) -> Vec<Integer> {
        coords.iter().map(|&c| Integer::from(c)).collect()
    }

    /// One in order coordinates.
    pub fn one(&self) -> Vec<Integer> {
        self.order.one()
    }
}
