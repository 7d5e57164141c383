//! Number fields `Q[X]/(f)` presented by their power basis `1, a, ..., a^(n-1)`.
//!
//! Elements are coordinate vectors in the power basis. Trace and norm are the
//! trace and determinant of the multiplication-by-`x` matrix; conjugates are
//! never formed.

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{Integer, Rational};
use crate::error::{Error, Result};
use crate::poly::{is_irreducible_q, Irreducibility, IrreducibilityCertificate, Polynomial};
use crate::qmat::{self, QMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    poly: Polynomial<Rational>,
    certificate: IrreducibilityCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NfElement {
    coords: Vec<Rational>,
}

impl NfElement {
    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn to_poly(&self) -> Polynomial<Rational> {
        Polynomial::new(self.coords.clone())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for NfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_poly().to_string_in('a'))
    }
}

impl NumberField {
    /// Builds `Q[X]/(f)` for a monic irreducible `f`, storing the
    /// irreducibility certificate.
    pub fn new(f: Polynomial<Rational>) -> Result<Self> {
        if f.degree().unwrap_or(0) == 0 {
            return Err(Error::InvalidInput(format!(
                "defining polynomial {f} must have degree at least 1"
            )));
        }
        if !f.is_monic() {
            return Err(Error::InvalidInput(format!("defining polynomial {f} is not monic")));
        }
        match is_irreducible_q(&f)? {
            Irreducibility::Irreducible(certificate) => Ok(Self { poly: f, certificate }),
            Irreducibility::Reducible(g) => Err(Error::Reducible(format!("{f} has the factor {g}"))),
        }
    }

    /// `Q` itself, as `Q[X]/(X)`.
    pub fn rationals() -> Self {
        Self::new(Polynomial::new(vec![Rational::zero(), Rational::one()])).unwrap()
    }

    /// `Q(sqrt d)` as `Q[X]/(X^2 - d)`.
    pub fn quadratic(d: i64) -> Result<Self> {
        Self::new(crate::poly::qpoly(&[-d, 0, 1]))
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap()
    }

    pub fn defining_poly(&self) -> &Polynomial<Rational> {
        &self.poly
    }

    pub fn certificate(&self) -> &IrreducibilityCertificate {
        &self.certificate
    }

    pub fn element(&self, coords: Vec<Rational>) -> Result<NfElement> {
        if coords.len() != self.degree() {
            return Err(Error::InvalidInput(format!(
                "element needs {} coordinates, got {}",
                self.degree(),
                coords.len()
            )));
        }
        Ok(NfElement { coords })
    }

    pub fn from_ints(&self, coords: &[i64]) -> NfElement {
        let mut c: Vec<Rational> = coords.iter().map(|&x| Rational::from_integer(x.into())).collect();
        c.resize(self.degree(), Rational::zero());
        NfElement { coords: c }
    }

    /// Reduces an arbitrary polynomial in the generator modulo `f`.
    pub fn from_poly(&self, p: &Polynomial<Rational>) -> NfElement {
        let r = p.rem(&self.poly).expect("monic modulus");
        let mut coords = r.into_coeffs();
        coords.resize(self.degree(), Rational::zero());
        NfElement { coords }
    }

    pub fn from_rational(&self, c: Rational) -> NfElement {
        self.from_poly(&Polynomial::constant(c))
    }

    pub fn zero(&self) -> NfElement {
        NfElement {
            coords: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> NfElement {
        self.from_rational(Rational::one())
    }

    /// The generator `a`, a root of the defining polynomial.
    pub fn gen(&self) -> NfElement {
        self.from_poly(&Polynomial::monomial(Rational::one(), 1))
    }

    /// The power basis `1, a, ..., a^(n-1)`.
    pub fn power_basis(&self) -> Vec<NfElement> {
        (0..self.degree())
            .map(|k| self.from_poly(&Polynomial::monomial(Rational::one(), k)))
            .collect()
    }

    pub fn add(&self, x: &NfElement, y: &NfElement) -> NfElement {
        NfElement {
            coords: x.coords.iter().zip(&y.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, x: &NfElement, y: &NfElement) -> NfElement {
        NfElement {
            coords: x.coords.iter().zip(&y.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Rational, x: &NfElement) -> NfElement {
        NfElement {
            coords: x.coords.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, x: &NfElement, y: &NfElement) -> NfElement {
        self.from_poly(&x.to_poly().mul(&y.to_poly()))
    }

    pub fn pow(&self, x: &NfElement, e: u32) -> NfElement {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    /// Inverse via the extended gcd of the coordinate polynomial with `f`.
    pub fn inv(&self, x: &NfElement) -> Result<NfElement> {
        if x.is_zero() {
            return Err(Error::DivisionByZero("inverse of zero field element".into()));
        }
        let (g, u, _) = x.to_poly().gcd_ext(&self.poly)?;
        if g.degree() != Some(0) {
            return Err(Error::Internal(format!("{} shares a factor with {}", x, self.poly)));
        }
        Ok(self.from_poly(&u))
    }

    /// Matrix of multiplication by `x`; column `j` holds `x * a^j`.
    pub fn lmul_matrix(&self, x: &NfElement) -> QMatrix {
        let cols: Vec<Vec<Rational>> = self.power_basis().iter().map(|b| self.mul(x, b).coords).collect();
        qmat::from_columns(&cols)
    }

    pub fn trace(&self, x: &NfElement) -> Rational {
        qmat::trace(&self.lmul_matrix(x))
    }

    pub fn norm(&self, x: &NfElement) -> Rational {
        qmat::det(&self.lmul_matrix(x))
    }

    /// Minimal polynomial over `Q`: the first linear dependency among
    /// `1, x, x^2, ...`.
    pub fn minpoly(&self, x: &NfElement) -> Polynomial<Rational> {
        let mut powers = vec![self.one().coords];
        loop {
            let next = self.mul(
                &NfElement {
                    coords: powers.last().unwrap().clone(),
                },
                x,
            );
            if let Some(c) = qmat::express(&powers, &next.coords) {
                let mut coeffs: Vec<Rational> = c.into_iter().map(|v| -v).collect();
                coeffs.push(Rational::one());
                return Polynomial::new(coeffs);
            }
            powers.push(next.coords);
        }
    }

    /// Whether `x` is a root of a monic integer polynomial, decided on the
    /// minimal polynomial (Gauss's lemma).
    pub fn is_integral(&self, x: &NfElement) -> bool {
        self.minpoly(x).to_integer().is_some()
    }

    /// `M[i][j] = trace(b_i * b_j)`.
    pub fn trace_form(&self, basis: &[NfElement]) -> Result<QMatrix> {
        if basis.len() != self.degree() {
            return Err(Error::InvalidInput(format!(
                "trace form needs {} basis elements, got {}",
                self.degree(),
                basis.len()
            )));
        }
        Ok(basis
            .iter()
            .map(|bi| basis.iter().map(|bj| self.trace(&self.mul(bi, bj))).collect())
            .collect())
    }

    pub fn discriminant(&self, basis: &[NfElement]) -> Result<Rational> {
        Ok(qmat::det(&self.trace_form(basis)?))
    }

    /// Discriminant of the power basis.
    pub fn poly_discriminant(&self) -> Rational {
        self.discriminant(&self.power_basis()).unwrap()
    }

    /// Parses an element written as a polynomial in `x` (the generator).
    pub fn parse_element(&self, text: &str) -> Result<NfElement> {
        Ok(self.from_poly(&crate::poly::parse_poly(text, 'x')?))
    }

    pub fn element_from_strings(&self, coords: &[String]) -> Result<NfElement> {
        let c = coords
            .iter()
            .map(|s| crate::arith::parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        self.element(c)
    }
}

/// Integer view of a rational known to be integral.
pub(crate) fn expect_integer(q: &Rational) -> Option<Integer> {
    q.is_integer().then(|| q.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::poly::qpoly;

    fn cubic() -> NumberField {
        NumberField::new(qpoly(&[8, -2, 1, 1])).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(NumberField::quadratic(-1).unwrap().degree(), 2);
        assert!(matches!(NumberField::quadratic(1), Err(Error::Reducible(_))));
        assert_eq!(cubic().degree(), 3);
        assert!(NumberField::new(qpoly(&[1, 2])).is_err());
        assert_eq!(NumberField::rationals().degree(), 1);
    }

    #[test]
    fn element_arithmetic() {
        let k = NumberField::quadratic(-1).unwrap();
        let i = k.gen();
        assert_eq!(k.mul(&i, &i), k.from_ints(&[-1]));
        assert_eq!(k.mul(&k.from_ints(&[2, 1]), &k.from_ints(&[2, -1])), k.from_ints(&[5]));
        let k5 = NumberField::quadratic(-5).unwrap();
        let inv = k5.inv(&k5.gen()).unwrap();
        assert_eq!(inv.coords(), &[rat(0, 1), rat(-1, 5)]);
        assert!(k5.inv(&k5.zero()).is_err());
    }

    #[test]
    fn minimal_polynomials() {
        let k = NumberField::quadratic(5).unwrap();
        assert_eq!(k.minpoly(&k.one()), qpoly(&[-1, 1]));
        let phi = k.element(vec![rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(k.minpoly(&phi), qpoly(&[-1, -1, 1]));
        let c = cubic();
        let a = c.gen();
        let x = c.scale(&rat(1, 2), &c.add(&a, &c.mul(&a, &a)));
        let m = c.minpoly(&x);
        assert_eq!(m.degree(), Some(3));
        assert!(m.to_integer().is_some());
        assert_eq!(c.minpoly(&a), *c.defining_poly());
    }

    #[test]
    fn trace_and_norm() {
        let k = NumberField::quadratic(-1).unwrap();
        assert_eq!(k.trace(&k.from_ints(&[3])), rat(6, 1));
        assert_eq!(k.norm(&k.from_ints(&[2, 1])), rat(5, 1));
        assert_eq!(cubic().trace(&cubic().gen()), rat(-1, 1));
    }

    #[test]
    fn trace_forms() {
        let k = NumberField::quadratic(-1).unwrap();
        let tf = k.trace_form(&k.power_basis()).unwrap();
        assert_eq!(tf, vec![vec![rat(2, 1), rat(0, 1)], vec![rat(0, 1), rat(-2, 1)]]);
        assert_eq!(k.discriminant(&k.power_basis()).unwrap(), rat(-4, 1));
        let k5 = NumberField::quadratic(5).unwrap();
        let phi = k5.element(vec![rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(k5.discriminant(&[k5.one(), phi]).unwrap(), rat(5, 1));
        let q = NumberField::rationals();
        assert_eq!(q.trace_form(&[q.one()]).unwrap(), vec![vec![rat(1, 1)]]);
        assert_eq!(cubic().poly_discriminant(), rat(-2012, 1));
    }

    #[test]
    fn integrality() {
        let k5 = NumberField::quadratic(5).unwrap();
        assert!(k5.is_integral(&k5.element(vec![rat(1, 2), rat(1, 2)]).unwrap()));
        assert!(!k5.is_integral(&k5.from_rational(rat(1, 2))));
        let c = cubic();
        let a = c.gen();
        let x = c.scale(&rat(1, 2), &c.add(&a, &c.mul(&a, &a)));
        assert!(c.is_integral(&x));
        assert!(!c.is_integral(&c.scale(&rat(1, 2), &a)));
    }
}
