//! Euclidean base rings an order is built over: the integers and `F_p[t]`.
//!
//! A domain is a value (it carries `p` for `F_p[t]`), and elements are
//! manipulated through it. Every element has a unit-normal associate
//! (positive integers, monic polynomials); lattices and ideals are always
//! stored in unit-normal form so that equality is structural.

use std::fmt;
use std::hash::Hash;

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{self, factor_integer, Fp, Integer};
use crate::error::{Error, Result};
use crate::poly::{factor_mod_p, parse_poly, Polynomial};

pub trait EuclideanDomain: Clone + fmt::Debug + PartialEq + Eq + Send + Sync {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Ord + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    /// Euclidean division with the canonical remainder: `[0, |b|)` for the
    /// integers, degree below `deg b` for polynomials. `b` must be nonzero.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);

    /// The absolute value into the non-negative integers: `|a|`, or
    /// `p^deg a` with `|0| = 0`.
    fn abv(&self, a: &Self::Elem) -> Integer;

    /// `(n, u)` with `a = u * n`, `u` a unit and `n` unit-normal.
    fn normal_part(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem);

    fn unit_inverse(&self, u: &Self::Elem) -> Self::Elem;

    /// Factorization of a nonzero element into unit-normal primes, sorted.
    fn factor(&self, a: &Self::Elem) -> Result<Vec<(Self::Elem, u32)>>;

    /// The canonical residues modulo a nonzero `m`.
    fn residues(&self, m: &Self::Elem) -> Vec<Self::Elem>;

    /// Factors a monic polynomial with coefficients in this domain modulo a
    /// prime. Returns monic lifts of the irreducible factors and their
    /// multiplicities; the residue degree of a factor is its degree.
    fn factor_mod_prime(&self, poly: &[Self::Elem], prime: &Self::Elem) -> Result<Vec<(Vec<Self::Elem>, u32)>>;

    /// Unit-normal elements whose absolute value is exactly `v`.
    fn normal_elements_of_abv(&self, v: &Integer) -> Vec<Self::Elem>;
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;
    fn name(&self) -> String;

    // Provided helpers.

    fn rem(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.div_rem(a, b).1
    }

    fn normalize(&self, a: &Self::Elem) -> Self::Elem {
        self.normal_part(a).0
    }

    fn is_unit(&self, a: &Self::Elem) -> bool {
        !self.is_zero(a) && self.normalize(a) == self.one()
    }

    /// `a / b` when `b` divides `a`.
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(b) {
            return None;
        }
        let (q, r) = self.div_rem(a, b);
        self.is_zero(&r).then_some(q)
    }

    fn divides(&self, d: &Self::Elem, a: &Self::Elem) -> bool {
        if self.is_zero(d) {
            return self.is_zero(a);
        }
        self.is_zero(&self.rem(a, d))
    }

    /// `(g, u, v)` with `g` the unit-normal gcd and `u*a + v*b = g`.
    fn gcd_ext(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem, Self::Elem) {
        if !self.is_zero(a) && self.divides(a, b) {
            let (n, u) = self.normal_part(a);
            return (n, self.unit_inverse(&u), self.zero());
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !self.is_zero(&r1) {
            let (q, r) = self.div_rem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = self.sub(&t0, &self.mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if self.is_zero(&r0) {
            return (r0, self.zero(), self.zero());
        }
        let (g, u) = self.normal_part(&r0);
        let ui = self.unit_inverse(&u);
        (g, self.mul(&s0, &ui), self.mul(&t0, &ui))
    }

    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.gcd_ext(a, b).0
    }

    fn pow(&self, a: &Self::Elem, e: u32) -> Self::Elem {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    /// Unit-normal divisors of a nonzero element, sorted.
    fn divisors(&self, a: &Self::Elem) -> Result<Vec<Self::Elem>> {
        let mut out = vec![self.one()];
        for (p, e) in self.factor(a)? {
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for d in &out {
                let mut x = d.clone();
                for _ in 0..=e {
                    next.push(x.clone());
                    x = self.mul(&x, &p);
                }
            }
            out = next;
        }
        out.sort();
        Ok(out)
    }

    fn is_prime(&self, a: &Self::Elem) -> bool {
        match self.factor(a) {
            Ok(f) => f.len() == 1 && f[0].1 == 1,
            Err(_) => false,
        }
    }
}

/// The rational integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Integers;

impl EuclideanDomain for Integers {
    type Elem = Integer;

    fn zero(&self) -> Integer {
        Integer::zero()
    }
    fn one(&self) -> Integer {
        Integer::one()
    }
    fn from_i64(&self, v: i64) -> Integer {
        Integer::from(v)
    }
    fn is_zero(&self, a: &Integer) -> bool {
        Zero::is_zero(a)
    }
    fn add(&self, a: &Integer, b: &Integer) -> Integer {
        a + b
    }
    fn sub(&self, a: &Integer, b: &Integer) -> Integer {
        a - b
    }
    fn mul(&self, a: &Integer, b: &Integer) -> Integer {
        a * b
    }
    fn neg(&self, a: &Integer) -> Integer {
        -a
    }
    fn div_rem(&self, a: &Integer, b: &Integer) -> (Integer, Integer) {
        let r = a.mod_floor(&b.abs());
        let q = (a - &r) / b;
        (q, r)
    }
    fn abv(&self, a: &Integer) -> Integer {
        a.abs()
    }
    fn normal_part(&self, a: &Integer) -> (Integer, Integer) {
        if a.is_negative() {
            (-a, -Integer::one())
        } else {
            (a.clone(), Integer::one())
        }
    }
    fn unit_inverse(&self, u: &Integer) -> Integer {
        u.clone()
    }
    fn factor(&self, a: &Integer) -> Result<Vec<(Integer, u32)>> {
        factor_integer(&a.abs())
    }
    fn residues(&self, m: &Integer) -> Vec<Integer> {
        let m = m.abs().to_i64().expect("residue system too large");
        (0..m).map(Integer::from).collect()
    }
    fn factor_mod_prime(&self, poly: &[Integer], prime: &Integer) -> Result<Vec<(Vec<Integer>, u32)>> {
        let p = prime
            .to_u64()
            .filter(|p| arith::is_prime_u64(*p))
            .ok_or_else(|| Error::InvalidInput(format!("{prime} is not a supported prime")))?;
        let f = Polynomial::new(poly.to_vec()).reduce_mod(p);
        Ok(factor_mod_p(&f)?
            .into_iter()
            .map(|(g, e)| (g.lift().into_coeffs(), e))
            .collect())
    }
    fn normal_elements_of_abv(&self, v: &Integer) -> Vec<Integer> {
        if v.is_positive() {
            vec![v.clone()]
        } else {
            Vec::new()
        }
    }
    fn format(&self, a: &Integer) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<Integer> {
        arith::parse_integer(s)
    }
    fn name(&self) -> String {
        "Z".into()
    }
}

/// The polynomial ring `F_p[t]` with the degree absolute value `p^deg`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolyRingFp {
    p: u64,
}

pub type FpPoly = Polynomial<Fp>;

impl PolyRingFp {
    pub fn new(p: u64) -> Result<Self> {
        Fp::new(0, p)?;
        Ok(Self { p })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn poly(&self, coeffs: &[i64]) -> FpPoly {
        crate::poly::fpoly(coeffs, self.p)
    }

    pub fn t(&self) -> FpPoly {
        self.poly(&[0, 1])
    }

    /// All polynomials of degree below `n`, in base-`p` digit order
    /// (so the zero polynomial comes first).
    pub fn polys_below_degree(&self, n: usize) -> Vec<FpPoly> {
        let count = self.p.pow(n as u32);
        (0..count)
            .map(|mut k| {
                let mut c = Vec::with_capacity(n);
                for _ in 0..n {
                    c.push(Fp::reduce((k % self.p) as i128, self.p));
                    k /= self.p;
                }
                Polynomial::new(c)
            })
            .collect()
    }

    /// Monic polynomials of exactly degree `n`.
    pub fn monic_of_degree(&self, n: usize) -> Vec<FpPoly> {
        let lead = Polynomial::monomial(Fp::one(self.p), n);
        self.polys_below_degree(n).into_iter().map(|g| g.add(&lead)).collect()
    }

    /// The `k`-th element in the enumeration ordered by degree then digits.
    pub fn nth_element(&self, k: u64) -> FpPoly {
        let mut c = Vec::new();
        let mut k = k;
        while k > 0 {
            c.push(Fp::reduce((k % self.p) as i128, self.p));
            k /= self.p;
        }
        Polynomial::new(c)
    }
}

impl EuclideanDomain for PolyRingFp {
    type Elem = FpPoly;

    fn zero(&self) -> FpPoly {
        Polynomial::zero()
    }
    fn one(&self) -> FpPoly {
        Polynomial::constant(Fp::one(self.p))
    }
    fn from_i64(&self, v: i64) -> FpPoly {
        Polynomial::constant(Fp::reduce(v as i128, self.p))
    }
    fn is_zero(&self, a: &FpPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        a.add(b)
    }
    fn sub(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        a.sub(b)
    }
    fn mul(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        a.mul(b)
    }
    fn neg(&self, a: &FpPoly) -> FpPoly {
        a.neg()
    }
    fn div_rem(&self, a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly) {
        a.div_rem(b).expect("division by nonzero polynomial over a field")
    }
    fn abv(&self, a: &FpPoly) -> Integer {
        match a.degree() {
            None => Integer::zero(),
            Some(d) => Integer::from(self.p).pow(d as u32),
        }
    }
    fn normal_part(&self, a: &FpPoly) -> (FpPoly, FpPoly) {
        match a.leading() {
            None => (a.clone(), self.one()),
            Some(c) => (a.monic(), Polynomial::constant(*c)),
        }
    }
    fn unit_inverse(&self, u: &FpPoly) -> FpPoly {
        Polynomial::constant(u.coeffs()[0].inverse().expect("unit"))
    }
    fn factor(&self, a: &FpPoly) -> Result<Vec<(FpPoly, u32)>> {
        if a.is_zero() {
            return Err(Error::InvalidInput("cannot factor zero".into()));
        }
        if a.degree() == Some(0) {
            return Ok(Vec::new());
        }
        factor_mod_p(a)
    }
    fn residues(&self, m: &FpPoly) -> Vec<FpPoly> {
        self.polys_below_degree(m.degree().expect("nonzero modulus"))
    }
    fn factor_mod_prime(&self, poly: &[FpPoly], prime: &FpPoly) -> Result<Vec<(Vec<FpPoly>, u32)>> {
        let monic_x = |s: &FpPoly| vec![s.neg(), self.one()];
        match poly.len() {
            2 => Ok(vec![(poly.to_vec(), 1)]),
            3 => {
                // Roots of X^2 + b X + c in the residue field F_p[t]/(prime).
                let eval = |s: &FpPoly| {
                    let v = s.mul(s).add(&poly[1].mul(s)).add(&poly[0]);
                    self.rem(&v, prime)
                };
                let roots: Vec<FpPoly> = self.residues(prime).into_iter().filter(|s| eval(s).is_zero()).collect();
                Ok(match roots.as_slice() {
                    [] => vec![(poly.to_vec(), 1)],
                    [r] => vec![(monic_x(r), 2)],
                    [r, s] => vec![(monic_x(r), 1), (monic_x(s), 1)],
                    _ => return Err(Error::Internal("quadratic with three roots".into())),
                })
            }
            n => Err(Error::Unsupported(format!(
                "residue factorization of degree {} over F_p[t]",
                n.saturating_sub(1)
            ))),
        }
    }
    fn normal_elements_of_abv(&self, v: &Integer) -> Vec<FpPoly> {
        let mut k = 0;
        let mut acc = Integer::from(1);
        while &acc < v {
            acc *= self.p;
            k += 1;
        }
        if &acc == v {
            self.monic_of_degree(k)
        } else {
            Vec::new()
        }
    }
    fn format(&self, a: &FpPoly) -> String {
        a.to_string_in('t')
    }
    fn parse(&self, s: &str) -> Result<FpPoly> {
        let q = parse_poly(s, 't')?;
        let p = Integer::from(self.p);
        let coeffs = q
            .coeffs()
            .iter()
            .map(|c| {
                let d = Fp::from_integer(c.denom(), self.p);
                let inv = d
                    .inverse()
                    .map_err(|_| Error::Parse(format!("denominator divisible by {p} in {s:?}")))?;
                Ok(Fp::from_integer(c.numer(), self.p).mul(inv))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::new(coeffs))
    }
    fn name(&self) -> String {
        format!("F{}[t]", self.p)
    }
}
