//! Quadratic function fields `F_q(t)(y)` with `y^2 = f(t)`.
//!
//! For odd prime `q` and `f` monic squarefree of degree 3 the order
//! `F_q[t][y]` is the integral closure of `F_q[t]`: its discriminant `4f` is
//! squarefree. The infinite place ramifies, units are constants, and ideal
//! classes are computed exactly by the same pipeline as for number fields.

use std::sync::Arc;

use crate::class_group::class_number;
use crate::domain::{EuclideanDomain, FpPoly, PolyRingFp};
use crate::error::{Error, Result};
use crate::order::{Maximality, Order};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionFieldQuadratic {
    ring: PolyRingFp,
    f: FpPoly,
}

impl FunctionFieldQuadratic {
    pub fn new(q: u64, f: FpPoly) -> Result<Self> {
        if q == 2 {
            return Err(Error::Unsupported(
                "characteristic 2 (Artin-Schreier extensions)".into(),
            ));
        }
        let ring = PolyRingFp::new(q)?;
        if f.modulus() != Some(q) && !f.is_zero() {
            return Err(Error::InvalidInput(format!("f has coefficients outside F_{q}")));
        }
        if !f.is_monic() {
            return Err(Error::InvalidInput(format!("f = {} must be monic", ring.format(&f))));
        }
        if f.degree() != Some(3) {
            return Err(Error::Unsupported(format!(
                "only cubic f is supported, got degree {}",
                f.degree().unwrap_or(0)
            )));
        }
        let g = f.gcd(&f.derivative())?;
        if g.degree() != Some(0) {
            return Err(Error::InvalidInput(format!(
                "f = {} is not squarefree (shares {} with f')",
                ring.format(&f),
                ring.format(&g)
            )));
        }
        Ok(Self { ring, f })
    }

    /// Parses `f` in the variable `t` over `F_q`.
    pub fn parse(q: u64, f: &str) -> Result<Self> {
        let ring = PolyRingFp::new(q)?;
        let f = ring.parse(f)?;
        Self::new(q, f)
    }

    pub fn q(&self) -> u64 {
        self.ring.characteristic()
    }

    pub fn f(&self) -> &FpPoly {
        &self.f
    }

    pub fn ring(&self) -> &PolyRingFp {
        &self.ring
    }

    /// The maximal order `F_q[t][y]` in the basis `{1, y}`.
    pub fn order(&self) -> Result<Arc<Order<PolyRingFp>>> {
        let r = &self.ring;
        let (zero, one) = (r.zero(), r.one());
        let table = vec![
            vec![vec![one.clone(), zero.clone()], vec![zero.clone(), one.clone()]],
            vec![vec![zero.clone(), one.clone()], vec![self.f.clone(), zero.clone()]],
        ];
        let label = format!("F{}[t][y]/(y^2 - ({}))", self.q(), r.format(&self.f));
        let order = Order::new(*r, table, vec![one.clone(), zero.clone()], label)?
            .with_generator(vec![zero.clone(), one.clone()], vec![r.neg(&self.f), zero, one])?
            .with_maximality(Maximality::Maximal(format!(
                "discriminant 4({}) is squarefree",
                r.format(&self.f)
            )));
        Ok(Arc::new(order))
    }

    pub fn class_number(&self) -> Result<usize> {
        class_number(&self.order()?)
    }
}

/// `F_q[t]` as an order of rank one over itself.
pub fn base_order(q: u64) -> Result<Arc<Order<PolyRingFp>>> {
    let r = PolyRingFp::new(q)?;
    let order = Order::new(r, vec![vec![vec![r.one()]]], vec![r.one()], format!("F{q}[t]"))?
        .with_generator(vec![r.t()], vec![r.neg(&r.t()), r.one()])?
        .with_maximality(Maximality::Maximal("principal ideal domain".into()));
    Ok(Arc::new(order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::{primes_above, IntegralIdeal};

    #[test]
    fn construction() {
        assert!(FunctionFieldQuadratic::parse(5, "t^3 + t + 1").is_ok());
        assert!(FunctionFieldQuadratic::parse(3, "t^3 - t").is_ok());
        assert!(matches!(
            FunctionFieldQuadratic::parse(3, "t^3"),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            FunctionFieldQuadratic::parse(2, "t^3 + t + 1"),
            Err(Error::Unsupported(_))
        ));
        assert!(FunctionFieldQuadratic::parse(4, "t^3 + 1").is_err());
        let ff = FunctionFieldQuadratic::parse(5, "t^3 + t + 1").unwrap();
        let o = ff.order().unwrap();
        assert!(o.is_maximal());
        let four_f = ff.ring().mul(&ff.ring().from_i64(4), ff.f());
        assert_eq!(o.discriminant(), four_f);
    }

    #[test]
    fn class_numbers() {
        let ff = FunctionFieldQuadratic::parse(5, "t^3 + t + 1").unwrap();
        assert_eq!(ff.class_number().unwrap(), 9);
        assert_eq!(class_number(&base_order(3).unwrap()).unwrap(), 1);
    }

    #[test]
    fn primes_split_degree_two() {
        let ff = FunctionFieldQuadratic::parse(3, "t^3 - t + 1").unwrap();
        let o = ff.order().unwrap();
        let r = ff.ring();
        for p in r.monic_of_degree(1).into_iter().chain(r.monic_of_degree(2)) {
            if !r.is_prime(&p) {
                continue;
            }
            let primes = primes_above(&o, &p).unwrap();
            let total: u32 = primes.iter().map(|q| q.ramification * q.residue_degree).sum();
            assert_eq!(total, 2);
            for q in &primes {
                assert_eq!(q.ideal.norm().unwrap(), r.pow(&p, q.residue_degree));
                assert!(!q.ideal.is_unit());
                assert!(q.ideal.contains_ideal(&IntegralIdeal::scalar(&o, &p)));
            }
        }
    }
}
