//! Exact scalars: arbitrary-precision integers and rationals, and residues
//! modulo a prime.
//!
//! Integers and rationals are the `num` big-number types; rationals are kept
//! reduced with a positive denominator by construction, so structural
//! equality coincides with equality of values.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;
/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}

pub fn rat_from_int(n: Integer) -> Rational {
    Rational::from_integer(n)
}

/// Extended gcd: returns `(g, u, v)` with `g = gcd(a, b) >= 0` and
/// `u*a + v*b = g`. `gcd(0, 0) = 0` with cofactors `(0, 0)`.
pub fn gcd_ext(a: &Integer, b: &Integer) -> (Integer, Integer, Integer) {
    if !a.is_zero() && (b % a).is_zero() {
        return (a.abs(), a.signum(), Integer::zero());
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Integer::one(), Integer::zero());
    let (mut t0, mut t1) = (Integer::zero(), Integer::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let s = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, s);
        let t = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t);
    }
    if r0.is_negative() {
        (-r0, -s0, -t0)
    } else if r0.is_zero() {
        (r0, Integer::zero(), Integer::zero())
    } else {
        (r0, s0, t0)
    }
}

/// Deterministic primality by trial division. Desk-scale inputs only.
pub fn is_prime(n: &Integer) -> bool {
    if n < &int(2) {
        return false;
    }
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    let mut d = int(2);
    while &(&d * &d) <= n {
        if (n % &d).is_zero() {
            return false;
        }
        d += 1;
    }
    true
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization by trial division, primes strictly increasing.
pub fn factor_integer(n: &Integer) -> Result<Vec<(Integer, u32)>> {
    if !n.is_positive() {
        return Err(Error::InvalidInput(format!(
            "factor_integer needs a positive argument, got {n}"
        )));
    }
    let mut rest = n.clone();
    let mut out = Vec::new();
    let mut push = |p: Integer, rest: &mut Integer| {
        let mut e = 0u32;
        while (&*rest % &p).is_zero() {
            *rest /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(int(2), &mut rest);
    let mut d = int(3);
    while &d * &d <= rest {
        push(d.clone(), &mut rest);
        d += 2;
    }
    if rest > Integer::one() {
        out.push((rest, 1));
    }
    Ok(out)
}

/// All positive divisors of `n > 0`, ascending.
pub fn divisors(n: &Integer) -> Result<Vec<Integer>> {
    let mut out = vec![Integer::one()];
    for (p, e) in factor_integer(n)? {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pk = Integer::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

/// Whether `n` has no repeated prime factor; `n` may be negative.
pub fn is_squarefree(n: &Integer) -> bool {
    if n.is_zero() {
        return false;
    }
    factor_integer(&n.abs())
        .map(|f| f.iter().all(|(_, e)| *e == 1))
        .unwrap_or(false)
}

/// Exact integer square root when `n` is a perfect square.
pub fn exact_sqrt(n: &Integer) -> Option<Integer> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Ceiling of a rational.
pub fn ceil(x: &Rational) -> Integer {
    x.ceil().to_integer()
}

pub fn parse_integer(s: &str) -> Result<Integer> {
    Integer::from_str(s.trim()).map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
}

/// Parses `"a"` or `"a/b"`; the result is reduced.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_integer(s).map_err(|_| bad())?)),
        Some((n, d)) => {
            let n = parse_integer(n).map_err(|_| bad())?;
            let d = parse_integer(d).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// An element of the prime field `F_p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    /// `modulus` must be prime; it is checked once here so that arithmetic
    /// can stay infallible.
    pub fn new(value: i64, modulus: u64) -> Result<Self> {
        if !is_prime_u64(modulus) || modulus > u32::MAX as u64 {
            return Err(Error::InvalidInput(format!(
                "{modulus} is not a supported prime modulus"
            )));
        }
        Ok(Self::reduce(value as i128, modulus))
    }

    pub(crate) fn reduce(value: i128, modulus: u64) -> Self {
        let m = modulus as i128;
        Self {
            value: value.rem_euclid(m) as u64,
            modulus,
        }
    }

    pub fn from_integer(n: &Integer, modulus: u64) -> Self {
        let r = n.mod_floor(&Integer::from(modulus));
        Self {
            value: r.to_u64().expect("residue fits"),
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn zero(modulus: u64) -> Self {
        Self { value: 0, modulus }
    }

    pub fn one(modulus: u64) -> Self {
        Self { value: 1, modulus }
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn add(self, o: Self) -> Self {
        debug_assert_eq!(self.modulus, o.modulus);
        Self::reduce(self.value as i128 + o.value as i128, self.modulus)
    }

    pub fn sub(self, o: Self) -> Self {
        debug_assert_eq!(self.modulus, o.modulus);
        Self::reduce(self.value as i128 - o.value as i128, self.modulus)
    }

    pub fn mul(self, o: Self) -> Self {
        debug_assert_eq!(self.modulus, o.modulus);
        Self {
            value: ((self.value as u128 * o.value as u128) % self.modulus as u128) as u64,
            modulus: self.modulus,
        }
    }

    pub fn neg(self) -> Self {
        Self::reduce(-(self.value as i128), self.modulus)
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inverse(self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("inverse of 0 in F_p".into()));
        }
        let (_, u, _) = gcd_ext(&int(self.value as i64), &int(self.modulus as i64));
        Ok(Self::from_integer(&u, self.modulus))
    }
}

/// `a^{-1}` in `F_p`.
pub fn mod_inverse(a: Fp) -> Result<Fp> {
    a.inverse()
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_ext_examples() {
        assert_eq!(gcd_ext(&int(0), &int(0)), (int(0), int(0), int(0)));
        assert_eq!(gcd_ext(&int(6), &int(4)), (int(2), int(1), int(-1)));
        for n in [-7, 0, 1, 12, 1000] {
            assert_eq!(gcd_ext(&int(1), &int(n)), (int(1), int(1), int(0)));
        }
    }

    #[test]
    fn gcd_ext_exhaustive_small() {
        for a in -50..=50 {
            for b in -50..=50 {
                let (g, u, v) = gcd_ext(&int(a), &int(b));
                assert!(g >= int(0));
                assert_eq!(&u * a + &v * b, g);
                if !g.is_zero() {
                    assert!((int(a) % &g).is_zero() && (int(b) % &g).is_zero());
                    assert_eq!(g, int(a).gcd(&int(b)));
                }
            }
        }
    }

    #[test]
    fn factor_integer_examples() {
        assert!(factor_integer(&int(1)).unwrap().is_empty());
        assert_eq!(factor_integer(&int(20)).unwrap(), vec![(int(2), 2), (int(5), 1)]);
        assert_eq!(factor_integer(&int(97)).unwrap(), vec![(int(97), 1)]);
        assert!(factor_integer(&int(0)).is_err());
        assert!(factor_integer(&int(-4)).is_err());
    }

    #[test]
    fn factor_integer_round_trip() {
        for n in 1..=100_000i64 {
            let f = factor_integer(&int(n)).unwrap();
            let mut prod = int(1);
            let mut last = int(1);
            for (p, e) in &f {
                assert!(p > &last && is_prime(p));
                last = p.clone();
                prod *= p.pow(*e);
            }
            assert_eq!(prod, int(n));
        }
    }

    #[test]
    fn mod_inverse_examples() {
        let inv = |a, p| mod_inverse(Fp::new(a, p).unwrap()).unwrap().value();
        assert_eq!(inv(1, 5), 1);
        assert_eq!(inv(2, 5), 3);
        assert_eq!(inv(4, 7), 2);
        assert!(mod_inverse(Fp::zero(7)).is_err());
        assert!(Fp::new(1, 9).is_err());
    }

    #[test]
    fn rational_parsing_round_trips() {
        for s in ["0", "-3", "1/2", "-7/3", "12345678901234567890/7"] {
            assert_eq!(parse_rational(s).unwrap().to_string(), s);
        }
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert_eq!(parse_rational("3/-6").unwrap().to_string(), "-1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn rational_equality_is_cross_multiplication() {
        for a in -6..=6i64 {
            for b in 1..=6i64 {
                for c in -6..=6i64 {
                    for d in 1..=6i64 {
                        assert_eq!(rat(a, b) == rat(c, d), a * d == b * c);
                    }
                }
            }
        }
    }

    #[test]
    fn divisors_and_squarefree() {
        assert_eq!(divisors(&int(12)).unwrap(), [1, 2, 3, 4, 6, 12].map(int));
        assert!(is_squarefree(&int(-5)));
        assert!(!is_squarefree(&int(20)));
        assert_eq!(exact_sqrt(&int(49)), Some(int(7)));
        assert_eq!(exact_sqrt(&int(50)), None);
    }
}
