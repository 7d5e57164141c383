//! Admissible absolute values and the pigeonhole construction behind the
//! finiteness of the class group.
//!
//! An absolute value on a Euclidean domain is admissible when, for every
//! `ε > 0`, any finite family can be split into `card(ε)` parts such that
//! remainders modulo `b` in the same part differ by less than `ε |b|`.
//! [`FinsetApprox`] turns this into a finite set `S` with the property that
//! for all `a` and nonzero `b` in an order there are `r ∈ S` and `q` with
//! `|N(r a - q b)| < |N(b)|`.

use std::collections::{BTreeSet, HashMap};

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{Integer, Rational};
use crate::domain::{EuclideanDomain, Integers, PolyRingFp};
use crate::error::{Error, Result};
use crate::order::Order;

pub trait Admissible: EuclideanDomain {
    /// Number of parts needed at precision `ε`.
    fn card(&self, eps: &Rational) -> Result<Integer>;

    /// Part index in `[0, card(ε))` of the remainder `r` of something
    /// modulo `b` (so `r` is already canonical).
    fn bucket(&self, eps: &Rational, b: &Self::Elem, r: &Self::Elem) -> Integer;

    /// Whether `|x + y| <= max(|x|, |y|)`.
    fn is_ultrametric(&self) -> bool;

    /// The smallest precision of the form this instance prefers with
    /// `card(ε)^n >= bound`, so that `ε^n * bound <= 1`.
    fn epsilon_for(&self, bound: &Integer, n: usize) -> Rational;

    /// `count` pairwise distinct elements, in a fixed order.
    fn distinct_elements(&self, count: usize) -> Vec<Self::Elem>;

    /// Assigns each element of `values` a part so that same-part remainders
    /// modulo `b` are within `ε |b|` of each other.
    fn partition(&self, eps: &Rational, b: &Self::Elem, values: &[Self::Elem]) -> Result<Vec<Integer>> {
        check_eps(eps)?;
        if self.is_zero(b) {
            return Err(Error::DivisionByZero("partition modulo zero".into()));
        }
        Ok(values.iter().map(|a| self.bucket(eps, b, &self.rem(a, b))).collect())
    }
}

fn check_eps(eps: &Rational) -> Result<()> {
    if eps.is_positive() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("precision must be positive, got {eps}")))
    }
}

/// `⌈1/ε⌉`.
pub fn card_z(eps: &Rational) -> Result<Integer> {
    check_eps(eps)?;
    Ok(crate::arith::ceil(&eps.recip()))
}

/// Least `c >= 0` with `q^{-c} <= ε`, by exact comparison.
pub fn card_exponent_fq(q: u64, eps: &Rational) -> Result<u32> {
    check_eps(eps)?;
    if q < 2 {
        return Err(Error::InvalidInput(format!("field size {q} must be at least 2")));
    }
    let mut c = 0;
    let mut qc = Integer::one();
    // q^{-c} <= n/d  iff  d <= n * q^c.
    while eps.denom() > &(eps.numer() * &qc) {
        qc *= q;
        c += 1;
    }
    Ok(c)
}

/// `q^c` with `c` from [`card_exponent_fq`]: the number of possible values
/// of the top `c` coefficients.
pub fn card_fq(q: u64, eps: &Rational) -> Result<Integer> {
    Ok(Integer::from(q).pow(card_exponent_fq(q, eps)?))
}

impl Admissible for Integers {
    fn card(&self, eps: &Rational) -> Result<Integer> {
        card_z(eps)
    }

    fn bucket(&self, eps: &Rational, b: &Integer, r: &Integer) -> Integer {
        // floor(r / (ε |b|)) with r in [0, |b|).
        (r * eps.denom()).div_floor(&(eps.numer() * b.abs()))
    }

    fn is_ultrametric(&self) -> bool {
        false
    }

    fn epsilon_for(&self, bound: &Integer, n: usize) -> Rational {
        let mut m = Integer::one();
        while m.pow(n as u32) < *bound {
            m += 1;
        }
        Rational::new(Integer::one(), m)
    }

    fn distinct_elements(&self, count: usize) -> Vec<Integer> {
        (0..count).map(Integer::from).collect()
    }
}

impl Admissible for PolyRingFp {
    fn card(&self, eps: &Rational) -> Result<Integer> {
        card_fq(self.characteristic(), eps)
    }

    fn bucket(&self, eps: &Rational, b: &Self::Elem, r: &Self::Elem) -> Integer {
        let c = card_exponent_fq(self.characteristic(), eps).expect("validated precision") as usize;
        let deg = b.degree().expect("nonzero modulus");
        // Top c coefficients below the degree of b, read as a base-q number.
        let q = self.characteristic();
        let mut key = Integer::zero();
        for k in 1..=c {
            key *= q;
            if let Some(i) = deg.checked_sub(k) {
                key += r.coeff(i).map_or(0, |x| x.value());
            }
        }
        key
    }

    fn is_ultrametric(&self) -> bool {
        true
    }

    fn epsilon_for(&self, bound: &Integer, n: usize) -> Rational {
        let q = Integer::from(self.characteristic());
        let mut qc = Integer::one();
        while qc.pow(n as u32) < *bound {
            qc *= &q;
        }
        Rational::new(Integer::one(), qc)
    }

    fn distinct_elements(&self, count: usize) -> Vec<Self::Elem> {
        (0..count as u64).map(|k| self.nth_element(k)).collect()
    }
}

/// Exact check of the partition contract.
pub fn verify_partition<D: Admissible>(
    d: &D,
    eps: &Rational,
    b: &D::Elem,
    values: &[D::Elem],
    parts: &[Integer],
) -> Result<bool> {
    let card = d.card(eps)?;
    if parts.len() != values.len() || parts.iter().any(|p| p.is_negative() || *p >= card) {
        return Ok(false);
    }
    let rems: Vec<D::Elem> = values.iter().map(|a| d.rem(a, b)).collect();
    let limit = eps.numer() * d.abv(b);
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if parts[i] == parts[j] && d.abv(&d.sub(&rems[i], &rems[j])) * eps.denom() >= limit {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The finite set of multipliers produced by the pigeonhole argument for a
/// given order.
#[derive(Clone, Debug)]
pub struct FinsetApprox<D: Admissible> {
    /// Product over rows of the row bound on the structure constants.
    pub bound: Integer,
    pub epsilon: Rational,
    pub card: Integer,
    /// `card^n + 1` distinct grid elements.
    pub grid: Vec<D::Elem>,
    /// Differences `g_j - g_i` for `j > i`, sorted and deduplicated.
    pub set: Vec<D::Elem>,
}

/// Builds the set from the structure constants `T_k[i][j]`: with `R_i` the
/// row bound (sum of absolute values, or their maximum when ultrametric),
/// `|N(z)| <= max|z_i|^n * prod R_i`, so `ε^n * prod R_i <= 1` suffices.
pub fn finset_approx<D: Admissible>(order: &Order<D>) -> Result<FinsetApprox<D>> {
    let d = order.domain();
    let n = order.rank();
    let mut bound = Integer::one();
    for i in 0..n {
        let mut row = Integer::zero();
        for k in 0..n {
            let lk = order.lmul(&order.basis_element(k));
            for x in &lk[i] {
                let a = d.abv(x);
                if d.is_ultrametric() {
                    row = row.max(a);
                } else {
                    row += a;
                }
            }
        }
        bound *= row;
    }
    let epsilon = d.epsilon_for(&bound, n);
    let card = d.card(&epsilon)?;
    let size = card
        .pow(n as u32)
        .to_usize()
        .filter(|s| *s < 1 << 24)
        .ok_or_else(|| Error::Unsupported(format!("pigeonhole grid of size {card}^{n} is too large")))?;
    let grid = d.distinct_elements(size + 1);
    let mut set = BTreeSet::new();
    for j in 0..grid.len() {
        for i in 0..j {
            set.insert(d.sub(&grid[j], &grid[i]));
        }
    }
    Ok(FinsetApprox {
        bound,
        epsilon,
        card,
        grid,
        set: set.into_iter().collect(),
    })
}

impl<D: Admissible> FinsetApprox<D> {
    /// `M`, the product of the set. Can be very large.
    pub fn product(&self, d: &D) -> D::Elem {
        self.set.iter().fold(d.one(), |acc, x| d.mul(&acc, x))
    }

    /// Unit-normal primes dividing `M`, sorted.
    pub fn prime_support(&self, d: &D) -> Result<Vec<D::Elem>> {
        let mut primes = BTreeSet::new();
        let normals: BTreeSet<D::Elem> = self.set.iter().map(|x| d.normalize(x)).collect();
        for x in normals {
            for (p, _) in d.factor(&x)? {
                primes.insert(p);
            }
        }
        Ok(primes.into_iter().collect())
    }

    pub fn contains(&self, r: &D::Elem) -> bool {
        self.set.binary_search(r).is_ok()
    }
}

/// `(q, r)` with `r` in the set and `|N(r a - q b)| < |N(b)|`.
pub fn norm_reduction_step<D: Admissible>(
    order: &Order<D>,
    approx: &FinsetApprox<D>,
    a: &[D::Elem],
    b: &[D::Elem],
) -> Result<(Vec<D::Elem>, D::Elem)> {
    let d = order.domain();
    if order.is_zero(b) {
        return Err(Error::DivisionByZero("norm reduction by zero".into()));
    }
    let target = d.abv(&order.norm(b));
    let check = |q: &[D::Elem], r: &D::Elem| {
        let diff = order.sub(&order.scale(r, a), &order.mul(q, b));
        d.abv(&order.norm(&diff)) < target
    };
    // a / b = y / beta with y = a * N(b)/b and beta = N(b).
    let beta = order.norm(b);
    let y = order.mul(a, &order.norm_cofactor(b));
    let mut seen: HashMap<Vec<Integer>, (usize, Vec<D::Elem>)> = HashMap::new();
    for (j, g) in approx.grid.iter().enumerate() {
        let mut quot = Vec::with_capacity(y.len());
        let mut key = Vec::with_capacity(y.len());
        for yi in &y {
            let (qi, ri) = d.div_rem(&d.mul(g, yi), &beta);
            key.push(d.bucket(&approx.epsilon, &beta, &ri));
            quot.push(qi);
        }
        if let Some((i, qi)) = seen.get(&key) {
            let r = d.sub(g, &approx.grid[*i]);
            let q = order.sub(&quot, qi);
            if check(&q, &r) {
                return Ok((q, r));
            }
            break;
        }
        seen.insert(key, (j, quot));
    }
    // Fallback: every multiplier with the floor quotient and its neighbours.
    for r in &approx.set {
        let base: Vec<D::Elem> = y.iter().map(|yi| d.div_rem(&d.mul(r, yi), &beta).0).collect();
        for mask in 0..(1u32 << base.len()) {
            let q: Vec<D::Elem> = base
                .iter()
                .enumerate()
                .map(|(i, x)| {
                    if mask >> i & 1 == 1 {
                        d.add(x, &d.one())
                    } else {
                        x.clone()
                    }
                })
                .collect();
            if check(&q, r) {
                return Ok((q, r.clone()));
            }
        }
    }
    Err(Error::Internal("norm reduction step found no multiplier".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::order::OrderBasis;

    #[test]
    fn cards() {
        assert_eq!(card_z(&rat(1, 1)).unwrap(), int(1));
        assert_eq!(card_z(&rat(1, 4)).unwrap(), int(4));
        assert_eq!(card_z(&rat(2, 7)).unwrap(), int(4));
        assert!(card_z(&rat(0, 1)).is_err());
        assert_eq!(card_fq(3, &rat(1, 1)).unwrap(), int(1));
        assert_eq!(card_fq(3, &rat(1, 9)).unwrap(), int(9));
        assert_eq!(card_fq(2, &rat(1, 2)).unwrap(), int(2));
        assert_eq!(card_fq(3, &rat(1, 10)).unwrap(), int(27));
        assert!(card_fq(3, &rat(-1, 2)).is_err());
    }

    #[test]
    fn partitions() {
        let z = Integers;
        let values: Vec<Integer> = (0..10).map(int).collect();
        let parts = z.partition(&rat(1, 2), &int(10), &values).unwrap();
        assert_eq!(parts, [0, 0, 0, 0, 0, 1, 1, 1, 1, 1].map(int).to_vec());
        assert!(z.partition(&rat(1, 2), &int(10), &[]).unwrap().is_empty());

        let f2 = PolyRingFp::new(2).unwrap();
        let b = f2.poly(&[1, 1, 1]);
        let values = vec![f2.poly(&[1]), f2.poly(&[0, 1]), f2.poly(&[1, 1]), f2.zero()];
        let parts = f2.partition(&rat(1, 2), &b, &values).unwrap();
        assert_eq!(parts, [0, 1, 1, 0].map(int).to_vec());
        assert!(verify_partition(&f2, &rat(1, 2), &b, &values, &parts).unwrap());
        assert!(!verify_partition(&f2, &rat(1, 2), &b, &values, &[0, 0, 1, 1].map(int)).unwrap());
    }

    #[test]
    fn approximation_sets() {
        let z = OrderBasis::rationals();
        let s = finset_approx(z.order()).unwrap();
        assert_eq!(s.set, vec![int(1)]);
        assert_eq!(s.product(&Integers), int(1));

        let gi = OrderBasis::quadratic_maximal(-1).unwrap();
        let s = finset_approx(gi.order()).unwrap();
        assert_eq!(s.bound, int(4));
        assert_eq!(s.set, (1..=4).map(int).collect::<Vec<_>>());
        assert_eq!(s.prime_support(&Integers).unwrap(), vec![int(2), int(3)]);
    }

    #[test]
    fn reduction_examples() {
        for (d, a, b) in [(-1, [3, 2], [2, 0]), (-5, [1, 1], [2, 0]), (-1, [0, 0], [1, 1])] {
            let o = OrderBasis::quadratic_maximal(d).unwrap();
            let s = finset_approx(o.order()).unwrap();
            let (a, b) = (o.element(&a), o.element(&b));
            let (q, r) = norm_reduction_step(o.order(), &s, &a, &b).unwrap();
            assert!(s.contains(&r));
            let diff = o.order().sub(&o.order().scale(&r, &a), &o.order().mul(&q, &b));
            assert!(o.order().norm(&diff).abs() < o.order().norm(&b).abs());
        }
    }
}
