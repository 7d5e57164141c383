//! Fractional ideals `I / d` with `I` an integral ideal and `d` a nonzero
//! unit-normal element of the base domain.
//!
//! Normal form: `d` and the content of `I` are coprime, so equal fractional
//! ideals have equal representations. The zero ideal is `(0, 1)`.

use std::sync::Arc;

use crate::domain::EuclideanDomain;
use crate::error::{Error, Result};
use crate::ideals::{same_order, IntegralIdeal};
use crate::lattice;
use crate::order::Order;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FractionalIdeal<D: EuclideanDomain> {
    num: IntegralIdeal<D>,
    den: D::Elem,
}

impl<D: EuclideanDomain> FractionalIdeal<D> {
    pub fn new(num: IntegralIdeal<D>, den: D::Elem) -> Result<Self> {
        let d = num.order().domain().clone();
        if d.is_zero(&den) {
            return Err(Error::DivisionByZero("fractional ideal with zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self { num, den: d.one() });
        }
        let den = d.normalize(&den);
        let g = d.gcd(&den, &num.content());
        let num = num.div_scalar(&g).expect("g divides the content");
        let den = d.exact_div(&den, &g).expect("g divides the denominator");
        Ok(Self { num, den })
    }

    pub fn from_integral(num: IntegralIdeal<D>) -> Self {
        let one = num.order().domain().one();
        Self { num, den: one }
    }

    pub fn unit(order: &Arc<Order<D>>) -> Self {
        Self::from_integral(IntegralIdeal::unit(order))
    }

    pub fn zero(order: &Arc<Order<D>>) -> Self {
        Self::from_integral(IntegralIdeal::zero(order))
    }

    pub fn num(&self) -> &IntegralIdeal<D> {
        &self.num
    }

    pub fn den(&self) -> &D::Elem {
        &self.den
    }

    pub fn order(&self) -> &Arc<Order<D>> {
        self.num.order()
    }

    fn domain(&self) -> &D {
        self.num.order().domain()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.num.is_unit() && self.den == self.domain().one()
    }

    pub fn is_integral(&self) -> bool {
        self.den == self.domain().one()
    }

    /// Whether `x / c` (order coordinates over a nonzero domain element)
    /// lies in the ideal.
    pub fn contains_fraction(&self, x: &[D::Elem], c: &D::Elem) -> bool {
        let d = self.domain();
        let scaled: Vec<D::Elem> = x.iter().map(|v| d.mul(v, &self.den)).collect();
        self.num.scale(c).contains(&scaled)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if same_order(self.order(), other.order()) {
            Ok(())
        } else {
            Err(Error::MixedOrders)
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let den = self.domain().mul(&self.den, &other.den);
        Self::new(self.num.mul(&other.num)?, den)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let d = self.domain();
        let num = self.num.scale(&other.den).add(&other.num.scale(&self.den))?;
        Self::new(num, d.mul(&self.den, &other.den))
    }

    /// The colon `{x : x * other ⊆ self}`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero("fractional ideal division by zero".into()));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        // (A/a) : (B/b) = (b/a) (A : B).
        let (num, den) = colon(&self.num, &other.num)?;
        let d = self.domain();
        Self::new(num.scale(&other.den), d.mul(&self.den, &den))
    }

    /// `1 / I`, with the convention that the zero ideal is its own inverse.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        Self::unit(self.order()).div(self)
    }
}

/// `(A : B)` for nonzero integral ideals, as `(N, e)` meaning `N / e`.
///
/// `x` lies in the colon iff `H_A^{-1} M_k x` is integral for the
/// multiplication matrices `M_k` of the basis of `B`. With `C` the stacked
/// rows of `adj(H_A) M_k` and `S` an HNF basis of the row lattice of `C`,
/// that is `S^T x ∈ det(H_A) D^n`, so the colon is
/// `det(H_A) adj(S)^T D^n / det(S)`.
fn colon<D: EuclideanDomain>(a: &IntegralIdeal<D>, b: &IntegralIdeal<D>) -> Result<(IntegralIdeal<D>, D::Elem)> {
    let order = a.order();
    let d = order.domain();
    let n = order.rank();
    let ha = a
        .hnf()
        .ok_or_else(|| Error::ZeroIdeal("colon of the zero ideal".into()))?;
    let det_a = lattice::det(d, ha);
    let adj_a = lattice::adjugate(d, ha);
    let mut row_gens = Vec::new();
    for beta in b.basis() {
        let c = lattice::mat_mul(d, &adj_a, &order.lmul(&beta));
        row_gens.extend(c);
    }
    let s =
        lattice::hnf(d, n, &row_gens, None).ok_or_else(|| Error::Internal("colon system has deficient rank".into()))?;
    let det_s = lattice::det(d, &s);
    let adj_t = lattice::transpose(&lattice::adjugate(d, &s));
    let cols: Vec<Vec<D::Elem>> = lattice::columns(&lattice::scale_matrix(d, &adj_t, &det_a));
    let num = IntegralIdeal::from_generators(order, &cols);
    Ok((num, det_s))
}
