//! Dense univariate polynomials over exact scalars.
//!
//! Coefficients are stored lowest degree first and never carry a trailing
//! zero, so the zero polynomial is the empty vector and structural equality
//! is polynomial equality.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{self, divisors, is_prime_u64, Fp, Integer, Rational};
use crate::error::{Error, Result};

/// Scalar ring a polynomial can be built over.
///
/// `zero_like`/`one_like` exist because prime-field residues carry their
/// modulus, so there is no context-free zero.
pub trait Coeff: Clone + PartialEq + Eq + fmt::Debug + fmt::Display {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Inverse when it exists in the coefficient ring (units of `Z` are `±1`).
    fn try_inv(&self) -> Option<Self>;
}

/// Coefficient rings that are fields: every nonzero element is invertible.
pub trait FieldCoeff: Coeff {}

impl Coeff for Integer {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Integer::zero()
    }
    fn one_like(&self) -> Self {
        Integer::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_inv(&self) -> Option<Self> {
        (self.abs().is_one()).then(|| self.clone())
    }
}

impl Coeff for Rational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}
impl FieldCoeff for Rational {}

impl Coeff for Fp {
    fn is_zero(&self) -> bool {
        Fp::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Fp::zero(self.modulus())
    }
    fn one_like(&self) -> Self {
        Fp::one(self.modulus())
    }
    fn add(&self, o: &Self) -> Self {
        Fp::add(*self, *o)
    }
    fn sub(&self, o: &Self) -> Self {
        Fp::sub(*self, *o)
    }
    fn mul(&self, o: &Self) -> Self {
        Fp::mul(*self, *o)
    }
    fn neg(&self) -> Self {
        Fp::neg(*self)
    }
    fn try_inv(&self) -> Option<Self> {
        self.inverse().ok()
    }
}
impl FieldCoeff for Fp {}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<S> {
    coeffs: Vec<S>,
}

impl<S: Coeff> Polynomial<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// `c * X^k`.
    pub fn monomial(c: S, k: usize) -> Self {
        let mut v = vec![c.zero_like(); k];
        v.push(c);
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    /// Coefficient of `X^i`, `None` past the degree.
    pub fn coeff(&self, i: usize) -> Option<&S> {
        self.coeffs.get(i)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| *c == c.one_like())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(Coeff::neg).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let one = match self.coeffs.first() {
            Some(c) => Self::constant(c.one_like()),
            None => return if e == 0 { panic!("0^0") } else { Self::zero() },
        };
        (0..e).fold(one, |acc, _| acc.mul(self))
    }

    /// Horner evaluation at a scalar.
    pub fn eval(&self, x: &S) -> S {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut k = c.zero_like();
            for _ in 0..i {
                k = k.add(c);
            }
            out.push(k);
        }
        Self::new(out)
    }

    /// Division with remainder `self = q*b + r`, `deg r < deg b`. The leading
    /// coefficient of `b` must be a unit (any nonzero over a field, `±1` over
    /// the integers).
    pub fn div_rem(&self, b: &Self) -> Result<(Self, Self)> {
        let lead = b
            .leading()
            .ok_or_else(|| Error::DivisionByZero("polynomial division by zero".into()))?;
        let inv = lead
            .try_inv()
            .ok_or_else(|| Error::InvalidInput(format!("divisor leading coefficient {lead} is not a unit")))?;
        let db = b.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= db {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![lead.zero_like(); r.len() - db];
        for k in (0..q.len()).rev() {
            let c = r[k + db].mul(&inv);
            if !c.is_zero() {
                for (j, bj) in b.coeffs.iter().enumerate() {
                    r[k + j] = r[k + j].sub(&c.mul(bj));
                }
            }
            q[k] = c;
        }
        r.truncate(db);
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn rem(&self, b: &Self) -> Result<Self> {
        Ok(self.div_rem(b)?.1)
    }

    /// Whether `b` divides `self` exactly (requires a unit leading coefficient on `b`).
    pub fn divides_by(&self, b: &Self) -> Result<bool> {
        Ok(self.rem(b)?.is_zero())
    }

    pub fn map<T: Coeff>(&self, f: impl Fn(&S) -> T) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    pub fn to_string_in(&self, var: char) -> String {
        format_poly(&self.coeffs, var)
    }
}

impl<S: FieldCoeff> Polynomial<S> {
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(c) => self.scale(&c.try_inv().expect("field")),
        }
    }

    /// Monic gcd; fails when both inputs are zero.
    pub fn gcd(&self, o: &Self) -> Result<Self> {
        Ok(self.gcd_ext(o)?.0)
    }

    /// `(g, u, v)` with `g` monic and `u*self + v*o = g`.
    pub fn gcd_ext(&self, o: &Self) -> Result<(Self, Self, Self)> {
        if self.is_zero() && o.is_zero() {
            return Err(Error::InvalidInput("gcd of two zero polynomials".into()));
        }
        let unit = self.leading().or(o.leading()).unwrap().one_like();
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::constant(unit.clone()), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::constant(unit));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = r0.leading().unwrap().try_inv().unwrap();
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }
}

/// Degree first, then coefficients from the top down.
impl<S: Coeff + Ord> Ord for Polynomial<S> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl<S: Coeff + Ord> PartialOrd for Polynomial<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<S: Coeff> fmt::Display for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(&self.coeffs, 'x'))
    }
}

fn format_poly<S: Coeff>(coeffs: &[S], var: char) -> String {
    if coeffs.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let text = c.to_string();
        let (neg, mag) = match text.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, text),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if k == 0 {
            out.push_str(&mag);
        } else if mag == "1" {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    out
}

/// Parses text such as `"x^2 + 5"`, `"t^3 - t + 1"` or `"1/2*x^2 - 3x"` in
/// the named variable. Whitespace is ignored.
pub fn parse_poly(text: &str, var: char) -> Result<Polynomial<Rational>> {
    let s: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |msg: &str| Error::Parse(format!("{msg} in polynomial {text:?}"));
    if s.is_empty() {
        return Err(err("empty input"));
    }
    let mut terms: Vec<(Rational, usize)> = Vec::new();
    let mut i = 0;
    let read_int = |i: &mut usize| -> Option<Integer> {
        let start = *i;
        while *i < s.len() && s[*i].is_ascii_digit() {
            *i += 1;
        }
        (start < *i).then(|| s[start..*i].iter().collect::<String>().parse().unwrap())
    };
    while i < s.len() {
        let mut sign = Rational::one();
        if s[i] == '+' || s[i] == '-' {
            if s[i] == '-' {
                sign = -sign;
            }
            i += 1;
        } else if !terms.is_empty() {
            return Err(err("expected '+' or '-'"));
        }
        let mut coeff: Option<Rational> = None;
        if let Some(n) = read_int(&mut i) {
            let mut c = Rational::from_integer(n);
            if i < s.len() && s[i] == '/' {
                i += 1;
                let d = read_int(&mut i).ok_or_else(|| err("missing denominator"))?;
                if Zero::is_zero(&d) {
                    return Err(err("zero denominator"));
                }
                c /= Rational::from_integer(d);
            }
            coeff = Some(c);
            if i < s.len() && s[i] == '*' {
                i += 1;
                if i >= s.len() || s[i] != var {
                    return Err(err("expected variable after '*'"));
                }
            }
        }
        let mut exp = 0usize;
        if i < s.len() && s[i] == var {
            i += 1;
            exp = 1;
            if i < s.len() && s[i] == '^' {
                i += 1;
                exp = read_int(&mut i)
                    .ok_or_else(|| err("missing exponent"))?
                    .to_usize()
                    .filter(|e| *e <= 4096)
                    .ok_or_else(|| err("exponent too large"))?;
            }
        } else if coeff.is_none() {
            return Err(err("expected a term"));
        }
        terms.push((sign * coeff.unwrap_or_else(Rational::one), exp));
    }
    let deg = terms.iter().map(|t| t.1).max().unwrap_or(0);
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (c, e) in terms {
        coeffs[e] += c;
    }
    Ok(Polynomial::new(coeffs))
}

impl Polynomial<Rational> {
    /// Integer polynomial when every coefficient is integral.
    pub fn to_integer(&self) -> Option<Polynomial<Integer>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(Polynomial::new)
    }

    /// Scales by the positive rational making the result a primitive integer
    /// polynomial with positive leading coefficient.
    pub fn primitive_part(&self) -> Polynomial<Integer> {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let den = self.coeffs.iter().fold(Integer::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<Integer> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(Integer::zero(), |g, c| g.gcd(c));
        let sign = if ints.last().unwrap().is_negative() { -1 } else { 1 };
        Polynomial::new(ints.iter().map(|c| c / &g * sign).collect())
    }
}

impl Polynomial<Integer> {
    pub fn to_rational(&self) -> Polynomial<Rational> {
        self.map(|c| Rational::from_integer(c.clone()))
    }

    pub fn reduce_mod(&self, p: u64) -> Polynomial<Fp> {
        self.map(|c| Fp::from_integer(c, p))
    }

    /// `q^deg * f(a/q)`; zero exactly when `a/q` is a root.
    fn homogeneous_eval(&self, num: &Integer, den: &Integer) -> Integer {
        let n = self.coeffs.len() - 1;
        let mut acc = Integer::zero();
        let mut num_pow = Integer::one();
        let mut den_pows = vec![Integer::one(); n + 1];
        for i in 1..=n {
            den_pows[i] = &den_pows[i - 1] * den;
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += c * &num_pow * &den_pows[n - i];
            num_pow *= num;
        }
        acc
    }
}

impl Polynomial<Fp> {
    /// Lift to integers with residues in `[0, p)`.
    pub fn lift(&self) -> Polynomial<Integer> {
        self.map(|c| Integer::from(c.value()))
    }

    pub fn modulus(&self) -> Option<u64> {
        self.coeffs.first().map(Fp::modulus)
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, e: &Integer, m: &Self) -> Result<Self> {
        let p = m.modulus().expect("nonzero modulus");
        let mut base = self.rem(m)?;
        let mut acc = Polynomial::constant(Fp::one(p)).rem(m)?;
        for bit in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m)?;
            if e.bit(bit) {
                acc = acc.mul(&base).rem(m)?;
            }
        }
        base = acc;
        Ok(base)
    }
}

/// Exact quotient `a / b` of polynomials over a field; errors if not exact.
fn exact_div<S: FieldCoeff>(a: &Polynomial<S>, b: &Polynomial<S>) -> Result<Polynomial<S>> {
    let (q, r) = a.div_rem(b)?;
    if !r.is_zero() {
        return Err(Error::Internal("inexact polynomial division".into()));
    }
    Ok(q)
}

/// Factorization of a nonzero polynomial over `F_p` into monic irreducible
/// factors with multiplicities, sorted by degree then coefficients. The
/// leading coefficient of `f` is the unit left over.
///
/// Squarefree decomposition, distinct-degree splitting, then equal-degree
/// splitting with a deterministic enumeration of splitting polynomials. The
/// result is certified by re-multiplication before it is returned.
pub fn factor_mod_p(f: &Polynomial<Fp>) -> Result<Vec<(Polynomial<Fp>, u32)>> {
    let p = f
        .modulus()
        .ok_or_else(|| Error::InvalidInput("cannot factor the zero polynomial".into()))?;
    let monic = f.monic();
    let mut out = Vec::new();
    for (part, e) in squarefree_decomposition(&monic, p)? {
        for (group, d) in distinct_degree(&part, p)? {
            for irr in equal_degree(&group, d, p)? {
                out.push((irr, e));
            }
        }
    }
    out.sort();
    let mut prod = Polynomial::constant(Fp::one(p));
    for (g, e) in &out {
        prod = prod.mul(&g.pow(*e));
    }
    if prod != monic {
        return Err(Error::Internal(format!("factor_mod_p failed to certify {f}")));
    }
    Ok(out)
}

fn squarefree_decomposition(f: &Polynomial<Fp>, p: u64) -> Result<Vec<(Polynomial<Fp>, u32)>> {
    let one = Polynomial::constant(Fp::one(p));
    if f.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut c = f.gcd(&f.derivative())?;
    let mut w = exact_div(f, &c)?;
    let mut i = 1u32;
    while w != one {
        let y = w.gcd(&c)?;
        let z = exact_div(&w, &y)?;
        if z != one {
            out.push((z, i));
        }
        i += 1;
        c = exact_div(&c, &y)?;
        w = y;
    }
    if c != one {
        // c is a polynomial in X^p; take the p-th root coefficientwise.
        let root = Polynomial::new(c.coeffs().iter().step_by(p as usize).copied().collect());
        for (g, e) in squarefree_decomposition(&root, p)? {
            out.push((g, e * p as u32));
        }
    }
    Ok(out)
}

fn distinct_degree(f: &Polynomial<Fp>, p: u64) -> Result<Vec<(Polynomial<Fp>, usize)>> {
    let one = Polynomial::constant(Fp::one(p));
    let x = Polynomial::monomial(Fp::one(p), 1);
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(&Integer::from(p), &rest)?;
        let g = rest.gcd(&h.sub(&x))?;
        if g != one {
            rest = exact_div(&rest, &g)?;
            h = h.rem(&rest)?;
            out.push((g, d));
        }
        d += 1;
    }
    if rest != one {
        let deg = rest.degree().unwrap();
        out.push((rest, deg));
    }
    Ok(out)
}

/// The `k`-th polynomial of degree `< n` in base-`p` digit order.
fn nth_poly(mut k: u64, n: usize, p: u64) -> Polynomial<Fp> {
    let mut c = Vec::with_capacity(n);
    for _ in 0..n {
        c.push(Fp::reduce((k % p) as i128, p));
        k /= p;
    }
    Polynomial::new(c)
}

fn equal_degree(f: &Polynomial<Fp>, d: usize, p: u64) -> Result<Vec<Polynomial<Fp>>> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let one = Polynomial::constant(Fp::one(p));
    let q_d = Integer::from(p).pow(d as u32);
    let half = (&q_d - 1u32) / 2u32;
    let mut k = p;
    loop {
        let a = nth_poly(k, n, p);
        k += 1;
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let probe = if p == 2 {
            // Trace to F_2: a + a^2 + ... + a^(2^(d-1)).
            let mut t = a.rem(f)?;
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f)?;
                acc = acc.add(&t);
            }
            acc
        } else {
            a.pow_mod(&half, f)?.sub(&one)
        };
        if probe.is_zero() {
            continue;
        }
        let g = f.gcd(&probe)?;
        if g != one && g != *f {
            let mut out = equal_degree(&g, d, p)?;
            out.extend(equal_degree(&exact_div(f, &g)?, d, p)?);
            return Ok(out);
        }
    }
}

/// Whether `f` is irreducible over `F_p` (degree at least one).
pub fn is_irreducible_mod_p(f: &Polynomial<Fp>) -> Result<bool> {
    if f.degree().unwrap_or(0) == 0 {
        return Ok(false);
    }
    let fs = factor_mod_p(f)?;
    Ok(fs.len() == 1 && fs[0].1 == 1)
}

/// All rational roots of a nonzero integer polynomial, ascending.
///
/// Candidates are `a/q` with `a` dividing the trailing nonzero coefficient
/// and `q` dividing the leading coefficient; each is confirmed by exact
/// evaluation.
pub fn rational_roots(f: &Polynomial<Integer>) -> Result<Vec<Rational>> {
    if f.is_zero() {
        return Err(Error::InvalidInput("rational_roots of the zero polynomial".into()));
    }
    let shift = f.coeffs().iter().take_while(|c| Zero::is_zero(*c)).count();
    let g = Polynomial::new(f.coeffs()[shift..].to_vec());
    let mut roots = Vec::new();
    if shift > 0 {
        roots.push(Rational::zero());
    }
    if g.degree().unwrap_or(0) > 0 {
        let nums = divisors(&g.coeffs()[0].abs())?;
        let dens = divisors(&g.leading().unwrap().abs())?;
        for q in &dens {
            for a in &nums {
                if !a.gcd(q).is_one() {
                    continue;
                }
                for signed in [a.clone(), -a] {
                    if Zero::is_zero(&g.homogeneous_eval(&signed, q)) {
                        roots.push(Rational::new(signed, q.clone()));
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrreducibilityCertificate {
    /// Degree one.
    Linear,
    /// Degree two or three without a rational root.
    NoRationalRoot,
    /// Irreducible modulo this odd prime, which does not divide the leading
    /// coefficient of the primitive integer form.
    ModPrime(u64),
    /// Exhaustive search for integer factors of every degree up to half.
    FactorSearch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible(IrreducibilityCertificate),
    /// Reducible, with a monic proper factor.
    Reducible(Polynomial<Rational>),
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible(_))
    }
}

const CERTIFY_PRIMES_UP_TO: u64 = 400;
const FACTOR_SEARCH_MAX_DEGREE: usize = 8;

/// Irreducibility over `Q` with a certificate.
pub fn is_irreducible_q(f: &Polynomial<Rational>) -> Result<Irreducibility> {
    let n = match f.degree() {
        None | Some(0) => {
            return Err(Error::InvalidInput(format!(
                "irreducibility of constant polynomial {f}"
            )))
        }
        Some(n) => n,
    };
    if n == 1 {
        return Ok(Irreducibility::Irreducible(IrreducibilityCertificate::Linear));
    }
    let g = f.primitive_part();
    if let Some(r) = rational_roots(&g)?.pop() {
        let factor = Polynomial::new(vec![-r, Rational::one()]);
        return Ok(Irreducibility::Reducible(factor));
    }
    if n <= 3 {
        return Ok(Irreducibility::Irreducible(IrreducibilityCertificate::NoRationalRoot));
    }
    let lead = g.leading().unwrap().clone();
    for p in (3..CERTIFY_PRIMES_UP_TO).filter(|p| is_prime_u64(*p)) {
        if Zero::is_zero(&(&lead % p)) {
            continue;
        }
        if is_irreducible_mod_p(&g.reduce_mod(p))? {
            return Ok(Irreducibility::Irreducible(IrreducibilityCertificate::ModPrime(p)));
        }
    }
    if n > FACTOR_SEARCH_MAX_DEGREE {
        return Err(Error::Unsupported(format!(
            "cannot certify irreducibility of degree-{n} polynomial {f}"
        )));
    }
    for k in 2..=n / 2 {
        if let Some(h) = kronecker_factor(&g, k)? {
            return Ok(Irreducibility::Reducible(h.to_rational().monic()));
        }
    }
    Ok(Irreducibility::Irreducible(IrreducibilityCertificate::FactorSearch))
}

/// Kronecker's method: a degree-`k` integer factor of `g` (which has no
/// integer roots) takes values dividing `g` at `k + 1` integer points.
fn kronecker_factor(g: &Polynomial<Integer>, k: usize) -> Result<Option<Polynomial<Integer>>> {
    let mut points: Vec<(Integer, Integer)> = (-12i64..=12)
        .map(|x| {
            let x = Integer::from(x);
            let v = g.eval(&x);
            (x, v)
        })
        .collect();
    points.sort_by_key(|(_, v)| divisors(&v.abs()).map(|d| d.len()).unwrap_or(usize::MAX));
    points.truncate(k + 1);
    let choices: Vec<Vec<Integer>> = points
        .iter()
        .enumerate()
        .map(|(i, (_, v))| {
            let ds = divisors(&v.abs())?;
            Ok(if i == 0 {
                ds
            } else {
                ds.iter().flat_map(|d| [d.clone(), -d]).collect()
            })
        })
        .collect::<Result<_>>()?;
    let xs: Vec<Rational> = points.iter().map(|(x, _)| Rational::from_integer(x.clone())).collect();
    let target = g.to_rational();
    let mut idx = vec![0usize; k + 1];
    loop {
        let ys: Vec<Rational> = idx
            .iter()
            .zip(&choices)
            .map(|(i, c)| Rational::from_integer(c[*i].clone()))
            .collect();
        let h = interpolate(&xs, &ys);
        if h.degree() == Some(k) {
            if let Some(hi) = h.to_integer() {
                if target.divides_by(&h)? {
                    return Ok(Some(hi));
                }
            }
        }
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(None);
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Lagrange interpolation through distinct nodes.
fn interpolate(xs: &[Rational], ys: &[Rational]) -> Polynomial<Rational> {
    let mut acc = Polynomial::zero();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut basis = Polynomial::constant(Rational::one());
        let mut denom = Rational::one();
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                basis = basis.mul(&Polynomial::new(vec![-xj.clone(), Rational::one()]));
                denom *= xi - xj;
            }
        }
        acc = acc.add(&basis.scale(&(yi / denom)));
    }
    acc
}

/// Integer polynomial from small coefficients, lowest degree first.
pub fn zpoly(c: &[i64]) -> Polynomial<Integer> {
    Polynomial::new(c.iter().map(|&v| arith::int(v)).collect())
}

/// Rational polynomial from small integer coefficients, lowest degree first.
pub fn qpoly(c: &[i64]) -> Polynomial<Rational> {
    zpoly(c).to_rational()
}

/// Polynomial over `F_p` from small coefficients, lowest degree first.
pub fn fpoly(c: &[i64], p: u64) -> Polynomial<Fp> {
    Polynomial::new(c.iter().map(|&v| Fp::reduce(v as i128, p)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn divmod_examples() {
        let (q, r) = qpoly(&[1, 0, 1]).div_rem(&qpoly(&[1, 0, 1])).unwrap();
        assert_eq!((q, r), (qpoly(&[1]), Polynomial::zero()));
        let (q, r) = zpoly(&[0, 0, 0, 1]).div_rem(&zpoly(&[1, 0, 1])).unwrap();
        assert_eq!((q, r), (zpoly(&[0, 1]), zpoly(&[0, -1])));
        let (q, r) = fpoly(&[0, 1, 1], 2).div_rem(&fpoly(&[1, 1], 2)).unwrap();
        assert_eq!((q, r), (fpoly(&[0, 1], 2), Polynomial::zero()));
    }

    #[test]
    fn divmod_errors() {
        assert!(matches!(
            zpoly(&[1, 1]).div_rem(&Polynomial::zero()),
            Err(Error::DivisionByZero(_))
        ));
        assert!(matches!(
            zpoly(&[1, 1]).div_rem(&zpoly(&[1, 2])),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn gcd_examples() {
        let f = qpoly(&[3, 0, 6]);
        assert_eq!(f.gcd(&Polynomial::zero()).unwrap(), f.monic());
        assert_eq!(qpoly(&[-1, 0, 1]).gcd(&qpoly(&[1, -2, 1])).unwrap(), qpoly(&[-1, 1]));
        assert_eq!(qpoly(&[1, 0, 1]).gcd(&qpoly(&[0, 1, 1])).unwrap(), qpoly(&[1]));
        assert!(Polynomial::<Rational>::zero().gcd(&Polynomial::zero()).is_err());
    }

    #[test]
    fn gcd_ext_bezout() {
        let a = qpoly(&[2, -3, 0, 1]);
        let b = qpoly(&[-1, 0, 1]);
        let (g, u, v) = a.gcd_ext(&b).unwrap();
        assert_eq!(u.mul(&a).add(&v.mul(&b)), g);
        assert_eq!(g, qpoly(&[-1, 1]));
    }

    #[test]
    fn factor_mod_p_examples() {
        assert_eq!(
            factor_mod_p(&fpoly(&[0, 0, 1], 2)).unwrap(),
            vec![(fpoly(&[0, 1], 2), 2)]
        );
        assert_eq!(
            factor_mod_p(&fpoly(&[1, 0, 1], 5)).unwrap(),
            vec![(fpoly(&[2, 1], 5), 1), (fpoly(&[3, 1], 5), 1)]
        );
        assert_eq!(
            factor_mod_p(&fpoly(&[1, 0, 1], 3)).unwrap(),
            vec![(fpoly(&[1, 0, 1], 3), 1)]
        );
        assert!(factor_mod_p(&Polynomial::zero()).is_err());
    }

    #[test]
    fn factor_mod_p_handles_pth_powers() {
        // (x^3 + 2)^3 (x + 1)^2 over F_3 has derivative structure needing p-th roots.
        let base = fpoly(&[2, 0, 0, 1], 3).pow(3).mul(&fpoly(&[1, 1], 3).pow(2));
        let fs = factor_mod_p(&base).unwrap();
        let mut prod = fpoly(&[1], 3);
        for (g, e) in &fs {
            assert!(is_irreducible_mod_p(g).unwrap());
            prod = prod.mul(&g.pow(*e));
        }
        assert_eq!(prod, base);
    }

    fn all_monic(deg: usize, p: u64) -> Vec<Polynomial<Fp>> {
        (0..p.pow(deg as u32))
            .map(|k| {
                let mut c = nth_poly(k, deg, p).into_coeffs();
                c.resize(deg, Fp::zero(p));
                c.push(Fp::one(p));
                Polynomial::new(c)
            })
            .collect()
    }

    #[test]
    fn factor_mod_p_round_trip_exhaustive() {
        for p in [2u64, 3] {
            for deg in 1..=4 {
                for f in all_monic(deg, p) {
                    let fs = factor_mod_p(&f).unwrap();
                    let mut prod = fpoly(&[1], p);
                    for (g, e) in &fs {
                        assert!(g.is_monic());
                        // Irreducibility by exhaustive divisor search.
                        let dg = g.degree().unwrap();
                        for dd in 1..=dg / 2 {
                            for h in all_monic(dd, p) {
                                assert!(!g.divides_by(&h).unwrap(), "{g} has factor {h}");
                            }
                        }
                        prod = prod.mul(&g.pow(*e));
                    }
                    assert_eq!(prod, f);
                }
            }
        }
    }

    #[test]
    fn rational_roots_examples() {
        assert_eq!(rational_roots(&zpoly(&[0, 1])).unwrap(), vec![rat(0, 1)]);
        assert_eq!(
            rational_roots(&zpoly(&[-1, -1, 2])).unwrap(),
            vec![rat(-1, 2), rat(1, 1)]
        );
        assert!(rational_roots(&zpoly(&[-2, 0, 1])).unwrap().is_empty());
        assert!(rational_roots(&Polynomial::zero()).is_err());
    }

    #[test]
    fn irreducibility_examples() {
        assert_eq!(
            is_irreducible_q(&qpoly(&[1, 0, 1])).unwrap(),
            Irreducibility::Irreducible(IrreducibilityCertificate::NoRationalRoot)
        );
        assert_eq!(
            is_irreducible_q(&qpoly(&[-1, 0, 1])).unwrap(),
            Irreducibility::Reducible(qpoly(&[-1, 1]))
        );
        assert!(is_irreducible_q(&qpoly(&[8, -2, 1, 1])).unwrap().is_irreducible());
        assert!(is_irreducible_q(&qpoly(&[5])).is_err());
    }

    #[test]
    fn irreducibility_without_roots_or_mod_p_certificate() {
        // x^4 + 1 is reducible mod every prime but irreducible over Q.
        assert_eq!(
            is_irreducible_q(&qpoly(&[1, 0, 0, 0, 1])).unwrap(),
            Irreducibility::Irreducible(IrreducibilityCertificate::FactorSearch)
        );
        // (x^2 + 1)(x^2 + 2) has no rational roots.
        let f = qpoly(&[1, 0, 1]).mul(&qpoly(&[2, 0, 1]));
        match is_irreducible_q(&f).unwrap() {
            Irreducibility::Reducible(h) => assert!(f.divides_by(&h).unwrap()),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            is_irreducible_q(&qpoly(&[2, 0, 0, 0, 0, 1])).unwrap(),
            Irreducibility::Irreducible(IrreducibilityCertificate::ModPrime(_))
        ));
    }

    #[test]
    fn text_round_trip() {
        for (src, var) in [("x^2 + 5", 'x'), ("t^3 - t + 1", 't'), ("-1/2*x^3 + 2*x - 7", 'x')] {
            let f = parse_poly(src, var).unwrap();
            assert_eq!(f.to_string_in(var), src);
        }
        assert_eq!(parse_poly(" x ^2+5 ", 'x').unwrap(), qpoly(&[5, 0, 1]));
        assert_eq!(parse_poly("x^3+x^2-2x+8", 'x').unwrap(), qpoly(&[8, -2, 1, 1]));
        assert_eq!(parse_poly("3/2x - x", 'x').unwrap(), parse_poly("1/2*x", 'x').unwrap());
        assert!(parse_poly("x^2 +", 'x').is_err());
        assert!(parse_poly("y^2", 'x').is_err());
        assert!(parse_poly("", 'x').is_err());
        assert_eq!(fpoly(&[4, 0, 1], 5).to_string_in('t'), "t^2 + 4");
    }

    #[test]
    fn derivative_and_eval() {
        let f = zpoly(&[1, 2, 3]);
        assert_eq!(f.derivative(), zpoly(&[2, 6]));
        assert_eq!(f.eval(&arith::int(2)), arith::int(17));
    }
}
