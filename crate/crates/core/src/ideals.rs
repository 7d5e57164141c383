//! Integral ideals of an order as lattices in column Hermite normal form.
//!
//! Two ideals of the same order are equal exactly when their HNF matrices
//! are equal. Divisibility is containment; in a non-maximal order this is a
//! convention rather than a theorem, see [`IntegralIdeal::divides`].

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::domain::EuclideanDomain;
use crate::error::{Error, Result};
use crate::lattice::{self, Matrix};
use crate::order::Order;

#[derive(Clone, Debug)]
pub struct IntegralIdeal<D: EuclideanDomain> {
    order: Arc<Order<D>>,
    /// `None` marks the zero ideal.
    hnf: Option<Matrix<D::Elem>>,
}

impl<D: EuclideanDomain> PartialEq for IntegralIdeal<D> {
    fn eq(&self, other: &Self) -> bool {
        self.hnf == other.hnf && same_order(&self.order, &other.order)
    }
}

impl<D: EuclideanDomain> Eq for IntegralIdeal<D> {}

impl<D: EuclideanDomain> Hash for IntegralIdeal<D> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.hnf.hash(state);
    }
}

impl<D: EuclideanDomain> PartialOrd for IntegralIdeal<D> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: zero ideal first, then by absolute norm, then HNF
/// lexicographically (row-major).
impl<D: EuclideanDomain> Ord for IntegralIdeal<D> {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.hnf, &other.hnf) {
            (None, None) => Ordering::Equal,
            (None, _) => Ordering::Less,
            (_, None) => Ordering::Greater,
            (Some(a), Some(b)) => self.abs_norm().cmp(&other.abs_norm()).then_with(|| a.cmp(b)),
        }
    }
}

pub(crate) fn same_order<D: EuclideanDomain>(a: &Arc<Order<D>>, b: &Arc<Order<D>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<D: EuclideanDomain> IntegralIdeal<D> {
    pub fn zero(order: &Arc<Order<D>>) -> Self {
        Self {
            order: order.clone(),
            hnf: None,
        }
    }

    pub fn unit(order: &Arc<Order<D>>) -> Self {
        let d = order.domain();
        Self {
            order: order.clone(),
            hnf: Some(lattice::identity(d, order.rank())),
        }
    }

    /// The ideal `c O` for a domain element `c`.
    pub fn scalar(order: &Arc<Order<D>>, c: &D::Elem) -> Self {
        let d = order.domain();
        if d.is_zero(c) {
            return Self::zero(order);
        }
        let c = d.normalize(c);
        let n = order.rank();
        let hnf = (0..n)
            .map(|i| (0..n).map(|j| if i == j { c.clone() } else { d.zero() }).collect())
            .collect();
        Self {
            order: order.clone(),
            hnf: Some(hnf),
        }
    }

    /// The smallest ideal containing `gens` (order coordinates). An empty or
    /// all-zero list gives the zero ideal.
    pub fn from_generators(order: &Arc<Order<D>>, gens: &[Vec<D::Elem>]) -> Self {
        let d = order.domain();
        let n = order.rank();
        let nonzero: Vec<&Vec<D::Elem>> = gens.iter().filter(|g| !order.is_zero(g)).collect();
        if nonzero.is_empty() {
            return Self::zero(order);
        }
        // Any nonzero norm lies in the ideal, so their gcd does too.
        let modulus = nonzero.iter().fold(d.zero(), |m, g| d.gcd(&m, &order.norm(g)));
        let mut cols = Vec::with_capacity(nonzero.len() * n);
        for g in nonzero {
            for k in 0..n {
                cols.push(order.mul(g, &order.basis_element(k)));
            }
        }
        Self::from_module_generators(order, &cols, Some(&modulus))
    }

    pub fn principal(order: &Arc<Order<D>>, x: &[D::Elem]) -> Self {
        Self::from_generators(order, &[x.to_vec()])
    }

    /// HNF of a set of vectors already known to span an `O`-module.
    fn from_module_generators(order: &Arc<Order<D>>, cols: &[Vec<D::Elem>], modulus: Option<&D::Elem>) -> Self {
        let hnf = lattice::hnf(order.domain(), order.rank(), cols, modulus);
        Self {
            order: order.clone(),
            hnf,
        }
    }

    /// Wraps an HNF matrix after checking the canonical shape and closure
    /// under multiplication by the order.
    pub fn from_hnf(order: &Arc<Order<D>>, hnf: Matrix<D::Elem>) -> Result<Self> {
        let d = order.domain();
        let n = order.rank();
        if hnf.len() != n || hnf.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput(format!("HNF must be {n}x{n}")));
        }
        let canonical = lattice::hnf(d, n, &lattice::columns(&hnf), None);
        if canonical.as_ref() != Some(&hnf) {
            return Err(Error::InvalidInput("matrix is not in Hermite normal form".into()));
        }
        let ideal = Self {
            order: order.clone(),
            hnf: Some(hnf),
        };
        if !ideal.is_module() {
            return Err(Error::InvalidInput(
                "lattice is not closed under multiplication by the order".into(),
            ));
        }
        Ok(ideal)
    }

    pub fn order(&self) -> &Arc<Order<D>> {
        &self.order
    }

    pub fn hnf(&self) -> Option<&Matrix<D::Elem>> {
        self.hnf.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.hnf.is_none()
    }

    pub fn is_unit(&self) -> bool {
        let d = self.order.domain();
        self.hnf
            .as_ref()
            .is_some_and(|h| (0..h.len()).all(|i| h[i][i] == d.one()))
    }

    fn nonzero_hnf(&self) -> Result<&Matrix<D::Elem>> {
        self.hnf
            .as_ref()
            .ok_or_else(|| Error::ZeroIdeal("operation needs a nonzero ideal".into()))
    }

    /// Columns of the HNF, a `D`-basis of the ideal.
    pub fn basis(&self) -> Vec<Vec<D::Elem>> {
        self.hnf.as_ref().map(lattice::columns).unwrap_or_default()
    }

    /// Norm as a unit-normal domain element: the product of the diagonal.
    pub fn norm(&self) -> Result<D::Elem> {
        let h = self.nonzero_hnf()?;
        let d = self.order.domain();
        Ok((0..h.len()).fold(d.one(), |acc, i| d.mul(&acc, &h[i][i])))
    }

    /// Cardinality of `O / I`; zero for the zero ideal.
    pub fn abs_norm(&self) -> num_bigint::BigInt {
        match self.norm() {
            Ok(n) => self.order.domain().abv(&n),
            Err(_) => 0.into(),
        }
    }

    pub fn contains(&self, x: &[D::Elem]) -> bool {
        match &self.hnf {
            None => self.order.is_zero(x),
            Some(h) => lattice::solve_upper(self.order.domain(), h, x).is_some(),
        }
    }

    /// `other` is a subset of `self`.
    pub fn contains_ideal(&self, other: &Self) -> bool {
        other.basis().iter().all(|c| self.contains(c))
    }

    /// `self | other`, defined as `other` contained in `self`.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.check_same(other)?;
        if self.is_zero() {
            return Err(Error::ZeroIdeal("zero ideal as divisor".into()));
        }
        Ok(self.contains_ideal(other))
    }

    fn is_module(&self) -> bool {
        let basis = self.basis();
        (0..self.order.rank()).all(|k| {
            let e = self.order.basis_element(k);
            basis.iter().all(|c| self.contains(&self.order.mul(&e, c)))
        })
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if same_order(&self.order, &other.order) {
            Ok(())
        } else {
            Err(Error::MixedOrders)
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let (Some(_), Some(_)) = (&self.hnf, &other.hnf) else {
            return Ok(Self::zero(&self.order));
        };
        let d = self.order.domain();
        let modulus = d.mul(&self.norm()?, &other.norm()?);
        let mut cols = Vec::new();
        for a in self.basis() {
            for b in other.basis() {
                cols.push(self.order.mul(&a, &b));
            }
        }
        Ok(Self::from_module_generators(&self.order, &cols, Some(&modulus)))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        match (&self.hnf, &other.hnf) {
            (None, _) => Ok(other.clone()),
            (_, None) => Ok(self.clone()),
            _ => {
                let d = self.order.domain();
                let modulus = d.gcd(&self.norm()?, &other.norm()?);
                let mut cols = self.basis();
                cols.extend(other.basis());
                Ok(Self::from_module_generators(&self.order, &cols, Some(&modulus)))
            }
        }
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::unit(&self.order);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `c I` for a domain element `c`.
    pub fn scale(&self, c: &D::Elem) -> Self {
        let d = self.order.domain();
        match &self.hnf {
            Some(h) if !d.is_zero(c) => {
                let cols: Vec<Vec<D::Elem>> = lattice::columns(h)
                    .iter()
                    .map(|col| col.iter().map(|x| d.mul(x, c)).collect())
                    .collect();
                Self::from_module_generators(&self.order, &cols, None)
            }
            _ => Self::zero(&self.order),
        }
    }

    /// `I / c` when every basis vector is divisible by `c`.
    pub fn div_scalar(&self, c: &D::Elem) -> Option<Self> {
        let d = self.order.domain();
        let h = self.hnf.as_ref()?;
        let cols = lattice::columns(h)
            .iter()
            .map(|col| col.iter().map(|x| d.exact_div(x, c)).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        Some(Self::from_module_generators(&self.order, &cols, None))
    }

    /// Unit-normal gcd of all HNF entries: the largest `c` with `I ⊆ c O`.
    pub fn content(&self) -> D::Elem {
        match &self.hnf {
            Some(h) => lattice::content(self.order.domain(), h),
            None => self.order.domain().zero(),
        }
    }

    /// Largest `k` with `P^k ⊇ I`; `I` must be nonzero and `P` proper.
    pub fn valuation(&self, p: &Self) -> Result<u32> {
        self.check_same(p)?;
        self.nonzero_hnf()?;
        if p.is_unit() || p.is_zero() {
            return Err(Error::InvalidInput("valuation at a unit or zero ideal".into()));
        }
        let mut k = 0;
        let mut power = p.clone();
        while power.contains_ideal(self) {
            k += 1;
            power = power.mul(p)?;
        }
        Ok(k)
    }

    pub fn format_hnf(&self) -> Vec<Vec<String>> {
        let d = self.order.domain();
        self.hnf
            .as_ref()
            .map(|h| h.iter().map(|r| r.iter().map(|x| d.format(x)).collect()).collect())
            .unwrap_or_default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeIdealData<D: EuclideanDomain> {
    pub ideal: IntegralIdeal<D>,
    /// Unit-normal prime of the domain below the ideal.
    pub p: D::Elem,
    pub residue_degree: u32,
    pub ramification: u32,
}

/// Prime ideals above `p` by Kummer–Dedekind on a power generator whose
/// index is prime to `p`, sorted by HNF.
pub fn primes_above<D: EuclideanDomain>(order: &Arc<Order<D>>, p: &D::Elem) -> Result<Vec<PrimeIdealData<D>>> {
    let d = order.domain();
    let p = d.normalize(p);
    if !d.is_prime(&p) {
        return Err(Error::InvalidInput(format!("{} is not prime", d.format(&p))));
    }
    let gen = order.generator().filter(|g| !d.divides(&p, &g.index)).ok_or_else(|| {
        Error::Inapplicable(format!(
            "{} divides the index of every known power generator",
            d.format(&p)
        ))
    })?;
    let p_elem = order.from_scalar(&p);
    let mut out = Vec::new();
    let mut total = 0u32;
    for (g, e) in d.factor_mod_prime(&gen.minpoly, &p)? {
        let f = (g.len() - 1) as u32;
        let g_theta = order.eval_poly(&g, &gen.coords);
        let ideal = IntegralIdeal::from_generators(order, &[p_elem.clone(), g_theta]);
        if ideal.norm()? != d.pow(&p, f) {
            return Err(Error::Internal(format!(
                "prime above {} has norm {} instead of p^{f}",
                d.format(&p),
                d.format(&ideal.norm()?)
            )));
        }
        total += e * f;
        out.push(PrimeIdealData {
            ideal,
            p: p.clone(),
            residue_degree: f,
            ramification: e,
        });
    }
    if total as usize != order.rank() {
        return Err(Error::Internal("sum of e*f differs from the degree".into()));
    }
    out.sort_by(|a, b| a.ideal.hnf.cmp(&b.ideal.hnf));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFactorization<D: EuclideanDomain> {
    pub factors: Vec<(PrimeIdealData<D>, u32)>,
}

impl<D: EuclideanDomain> IdealFactorization<D> {
    /// Product of the prime powers, the unit ideal when empty.
    pub fn product(&self, order: &Arc<Order<D>>) -> Result<IntegralIdeal<D>> {
        let mut acc = IntegralIdeal::unit(order);
        for (p, e) in &self.factors {
            acc = acc.mul(&p.ideal.pow(*e)?)?;
        }
        Ok(acc)
    }
}

/// Canonical prime factorization, primes sorted by the prime below and then
/// HNF. Refuses orders not certified maximal.
pub fn factor_ideal<D: EuclideanDomain>(ideal: &IntegralIdeal<D>) -> Result<IdealFactorization<D>> {
    let order = ideal.order();
    if !order.is_maximal() {
        return Err(Error::NotMaximal("ideal factorization requires a maximal order".into()));
    }
    let norm = ideal.norm()?;
    let d = order.domain();
    let mut factors = Vec::new();
    for (p, _) in d.factor(&norm)? {
        for prime in primes_above(order, &p)? {
            let v = ideal.valuation(&prime.ideal)?;
            if v > 0 {
                factors.push((prime, v));
            }
        }
    }
    factors.sort_by(|(a, _), (b, _)| a.p.cmp(&b.p).then_with(|| a.ideal.hnf.cmp(&b.ideal.hnf)));
    let fact = IdealFactorization { factors };
    if fact.product(order)? != *ideal {
        return Err(Error::Internal("factorization does not reproduce the ideal".into()));
    }
    Ok(fact)
}

/// Every ideal of the given norm (a nonzero domain element), by enumerating
/// HNF matrices with that diagonal product and keeping the `O`-modules.
/// Sorted canonically.
pub fn ideals_of_norm<D: EuclideanDomain>(order: &Arc<Order<D>>, norm: &D::Elem) -> Result<Vec<IntegralIdeal<D>>> {
    let d = order.domain();
    if d.is_zero(norm) {
        return Err(Error::ZeroIdeal("norm zero".into()));
    }
    let n = order.rank();
    let norm = d.normalize(norm);
    let mut diagonals: Vec<Vec<D::Elem>> = vec![Vec::new()];
    for i in 0..n {
        let mut next = Vec::new();
        for diag in &diagonals {
            let used = diag.iter().fold(d.one(), |acc, x| d.mul(&acc, x));
            let rest = d.exact_div(&norm, &used).expect("partial product divides the norm");
            if i == n - 1 {
                let mut v = diag.clone();
                v.push(rest);
                next.push(v);
            } else {
                for c in d.divisors(&rest)? {
                    let mut v = diag.clone();
                    v.push(c);
                    next.push(v);
                }
            }
        }
        diagonals = next;
    }
    let mut out = Vec::new();
    for diag in diagonals {
        let mut mats: Vec<Matrix<D::Elem>> = vec![(0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { diag[i].clone() } else { d.zero() })
                    .collect()
            })
            .collect()];
        for i in 0..n {
            let residues = d.residues(&diag[i]);
            for j in i + 1..n {
                mats = mats
                    .into_iter()
                    .flat_map(|m| {
                        residues.iter().map(move |r| {
                            let mut m = m.clone();
                            m[i][j] = r.clone();
                            m
                        })
                    })
                    .collect();
            }
        }
        for m in mats {
            let ideal = IntegralIdeal {
                order: order.clone(),
                hnf: Some(m),
            };
            if ideal.is_module() {
                out.push(ideal);
            }
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, Integer};
    use crate::domain::Integers;
    use crate::order::OrderBasis;

    fn ideal(o: &OrderBasis, gens: &[&[i64]]) -> IntegralIdeal<Integers> {
        let gens: Vec<Vec<Integer>> = gens.iter().map(|g| o.element(g)).collect();
        IntegralIdeal::from_generators(o.order(), &gens)
    }

    #[test]
    fn generators_and_norms() {
        let gi = OrderBasis::quadratic_maximal(-1).unwrap();
        assert!(ideal(&gi, &[&[1, 0]]).is_unit());
        assert_eq!(ideal(&gi, &[&[2, 1]]).norm().unwrap(), int(5));
        let m5 = OrderBasis::quadratic_maximal(-5).unwrap();
        let p2 = ideal(&m5, &[&[2, 0], &[1, 1]]);
        assert_eq!(p2.norm().unwrap(), int(2));
        assert_eq!(ideal(&m5, &[&[6, 0]]).norm().unwrap(), int(36));
        assert!(IntegralIdeal::from_generators(m5.order(), &[]).is_zero());
        assert!(ideal(&m5, &[&[0, 0]]).norm().is_err());
        // Generator order and redundancy do not matter.
        assert_eq!(ideal(&m5, &[&[1, 1], &[2, 0], &[3, 1]]), p2);
    }

    #[test]
    fn products_and_sums() {
        let m5 = OrderBasis::quadratic_maximal(-5).unwrap();
        let p2 = ideal(&m5, &[&[2, 0], &[1, 1]]);
        assert_eq!(p2.mul(&p2).unwrap(), ideal(&m5, &[&[2, 0]]));
        let unit = IntegralIdeal::unit(m5.order());
        assert_eq!(unit.mul(&p2).unwrap(), p2);
        let gi = OrderBasis::quadratic_maximal(-1).unwrap();
        let a = ideal(&gi, &[&[2, 1]]);
        let b = ideal(&gi, &[&[2, -1]]);
        assert_eq!(a.mul(&b).unwrap(), ideal(&gi, &[&[5, 0]]));
        assert!(a.add(&b).unwrap().is_unit());
        assert!(matches!(a.mul(&p2), Err(Error::MixedOrders)));
    }

    #[test]
    fn divisibility_is_containment() {
        let m5 = OrderBasis::quadratic_maximal(-5).unwrap();
        let p2 = ideal(&m5, &[&[2, 0], &[1, 1]]);
        assert!(p2.divides(&p2).unwrap());
        assert!(p2.divides(&ideal(&m5, &[&[2, 0]])).unwrap());
        let gi = OrderBasis::quadratic_maximal(-1).unwrap();
        let a = ideal(&gi, &[&[2, 1]]);
        assert!(a.divides(&ideal(&gi, &[&[5, 0]])).unwrap());
        assert!(!a.divides(&ideal(&gi, &[&[3, 0]])).unwrap());
    }

    #[test]
    fn kummer_dedekind() {
        let gi = OrderBasis::quadratic_maximal(-1).unwrap();
        let five = primes_above(gi.order(), &int(5)).unwrap();
        assert_eq!(five.len(), 2);
        assert!(five.iter().all(|p| p.residue_degree == 1 && p.ramification == 1));
        let three = primes_above(gi.order(), &int(3)).unwrap();
        assert_eq!((three.len(), three[0].residue_degree), (1, 2));
        assert_eq!(three[0].ideal, ideal(&gi, &[&[3, 0]]));
        let m5 = OrderBasis::quadratic_maximal(-5).unwrap();
        let two = primes_above(m5.order(), &int(2)).unwrap();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].ramification, 2);
        assert_eq!(two[0].ideal, ideal(&m5, &[&[2, 0], &[1, 1]]));
    }

    #[test]
    fn unique_factorization_examples() {
        let m5 = OrderBasis::quadratic_maximal(-5).unwrap();
        let six = ideal(&m5, &[&[6, 0]]);
        let f = factor_ideal(&six).unwrap();
        let shape: Vec<(Integer, u32)> = f.factors.iter().map(|(p, e)| (p.p.clone(), *e)).collect();
        assert_eq!(shape, vec![(int(2), 2), (int(3), 1), (int(3), 1)]);
        let gi = OrderBasis::quadratic_maximal(-1).unwrap();
        assert!(factor_ideal(&IntegralIdeal::unit(gi.order()))
            .unwrap()
            .factors
            .is_empty());
        assert_eq!(factor_ideal(&ideal(&gi, &[&[5, 0]])).unwrap().factors.len(), 2);
    }

    #[test]
    fn non_maximal_orders_are_refused() {
        let k = crate::number_field::NumberField::quadratic(-3).unwrap();
        let o = OrderBasis::from_basis(&k, &[k.one(), k.gen()])
            .unwrap()
            .with_certified_maximality()
            .unwrap();
        assert!(!o.is_maximal());
        let i = ideal(&o, &[&[2, 0], &[1, 1]]);
        assert!(matches!(factor_ideal(&i), Err(Error::NotMaximal(_))));
    }

    #[test]
    fn enumeration_by_norm() {
        let gi = OrderBasis::quadratic_maximal(-1).unwrap();
        let counts: Vec<usize> = (1..=10)
            .map(|n| ideals_of_norm(gi.order(), &int(n)).unwrap().len())
            .collect();
        // Number of ideals of norm n in Z[i]: sum over d | n of chi_4(d).
        assert_eq!(counts, vec![1, 1, 0, 1, 2, 0, 0, 1, 1, 2]);
        for n in 1..=20 {
            for i in ideals_of_norm(gi.order(), &int(n)).unwrap() {
                assert_eq!(i.norm().unwrap(), int(n));
                assert_eq!(IntegralIdeal::from_generators(gi.order(), &i.basis()), i);
            }
        }
    }
}
