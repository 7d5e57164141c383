//! Independent oracles. None of them calls into the library's ideal or
//! class-group code.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Primitive positive definite form `a x^2 + b x y + c y^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Form {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl Form {
    pub fn disc(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    fn normalize(self) -> Form {
        let Form { a, b, .. } = self;
        let d = self.disc();
        // b' in (-a, a], b' = b mod 2a.
        let r = (a - b).div_euclid(2 * a);
        let b = b + 2 * r * a;
        Form {
            a,
            b,
            c: (b * b - d) / (4 * a),
        }
    }

    pub fn reduce(self) -> Form {
        let mut f = self.normalize();
        while f.a > f.c {
            f = Form {
                a: f.c,
                b: -f.b,
                c: f.a,
            }
            .normalize();
        }
        if f.a == f.c && f.b < 0 {
            f.b = -f.b;
        }
        f
    }

    pub fn is_reduced(&self) -> bool {
        self.b.abs() <= self.a && self.a <= self.c && !((self.b.abs() == self.a || self.a == self.c) && self.b < 0)
    }
}

/// Reduced primitive forms of discriminant `d < 0`, sorted.
pub fn reduced_forms(d: i64) -> Vec<Form> {
    assert!(d < 0 && d.rem_euclid(4) <= 1);
    let mut out = Vec::new();
    let mut a = 1;
    while 3 * a * a <= -d {
        for b in -a + 1..=a {
            let num = b * b - d;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            let f = Form { a, b, c };
            if c >= a && f.is_reduced() && a.gcd(&b).gcd(&c) == 1 {
                out.push(f);
            }
        }
        a += 1;
    }
    out.sort();
    out
}

/// `(g, x, y)` with `x a + y b = g = gcd(a, b) >= 0`.
fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1, mut s0, mut s1, mut t0, mut t1) = (a, b, 1, 0, 0, 1);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Gaussian composition (Shanks), reduced.
pub fn compose(f1: Form, f2: Form) -> Form {
    let (f1, f2) = if f1.a > f2.a { (f2, f1) } else { (f1, f2) };
    let d = f1.disc();
    let s = (f1.b + f2.b) / 2;
    let n = f2.b - s;
    let (y1, dd) = if f2.a % f1.a == 0 {
        (0, f1.a)
    } else {
        let (g, u, _) = ext_gcd(f2.a, f1.a);
        (u, g)
    };
    let (x2, y2, d1) = if s % dd == 0 {
        (0, -1, dd)
    } else {
        let (g, x, y) = ext_gcd(s, dd);
        (x, -y, g)
    };
    let v1 = f1.a / d1;
    let v2 = f2.a / d1;
    let r = (y1 * y2 * n - x2 * f2.c).rem_euclid(v1);
    let b3 = f2.b + 2 * v2 * r;
    let a3 = v1 * v2;
    let c3 = (b3 * b3 - d) / (4 * a3);
    Form { a: a3, b: b3, c: c3 }.reduce()
}

pub fn principal_form(d: i64) -> Form {
    let b = d.rem_euclid(2);
    Form {
        a: 1,
        b,
        c: (b * b - d) / 4,
    }
}

/// Invariant factors `d_1 | d_2 | ...` (trivial ones dropped) of the form
/// class group, from the orders of its elements' p-power torsion.
pub fn form_class_group(d: i64) -> (usize, Vec<u64>) {
    let forms = reduced_forms(d);
    let id = principal_form(d).reduce();
    let h = forms.len();
    let power = |f: Form, k: u64| (0..k).fold(id, |acc, _| compose(acc, f));
    let mut primes = Vec::new();
    let mut m = h as u64;
    let mut p = 2;
    while m > 1 {
        if m % p == 0 {
            primes.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    // Per prime: r_k = #{exponents >= k} from |G[p^k]| = p^{sum min(e_i, k)}.
    let mut factors: Vec<u64> = Vec::new();
    for p in primes {
        let mut logs = vec![0u32];
        let mut k = 1;
        loop {
            let pk = p.pow(k);
            let count = forms.iter().filter(|f| power(**f, pk) == id).count() as u64;
            let mut l = 0;
            let mut c = count;
            while c > 1 {
                c /= p;
                l += 1;
            }
            if l == *logs.last().unwrap() {
                break;
            }
            logs.push(l);
            k += 1;
        }
        let ranks: Vec<u32> = logs.windows(2).map(|w| w[1] - w[0]).collect();
        // ranks[k-1] = number of cyclic p-parts of exponent >= k.
        let mut exps = Vec::new();
        for (k, r) in ranks.iter().enumerate() {
            let next = ranks.get(k + 1).copied().unwrap_or(0);
            for _ in 0..(r - next) {
                exps.push(p.pow(k as u32 + 1));
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        for (i, q) in exps.into_iter().enumerate() {
            if factors.len() <= i {
                factors.push(1);
            }
            factors[i] *= q;
        }
    }
    factors.sort_unstable();
    (h, factors)
}

/// Discriminant of the maximal order of `Q(sqrt(d))`, `d` squarefree.
pub fn field_discriminant(d: i64) -> i64 {
    if d.rem_euclid(4) == 1 {
        d
    } else {
        4 * d
    }
}

pub fn squarefree(n: i64) -> bool {
    let n = n.abs();
    let mut p = 2;
    while p * p <= n {
        if n % (p * p) == 0 {
            return false;
        }
        p += 1;
    }
    n != 0
}

/// Squarefree `d < 0` whose field discriminant has absolute value at most
/// `bound`.
pub fn imaginary_quadratic_d(bound: i64) -> Vec<i64> {
    (1..=bound)
        .map(|k| -k)
        .filter(|d| squarefree(*d) && field_discriminant(*d).abs() <= bound)
        .collect()
}

fn legendre(a: u64, q: u64) -> i64 {
    let a = a % q;
    if a == 0 {
        return 0;
    }
    let mut r = 1u64;
    let (mut base, mut e) = (a, (q - 1) / 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % q;
        }
        base = base * base % q;
        e >>= 1;
    }
    if r == 1 {
        1
    } else {
        -1
    }
}

/// Points of the smooth projective model of `y^2 = f(t)` over `F_q`, with
/// `f` given by coefficients (constant first) of odd degree: one point at
/// infinity.
pub fn projective_points(q: u64, f: &[u64]) -> u64 {
    assert!(f.len() % 2 == 0, "odd degree");
    let mut count = 1;
    for x in 0..q {
        let v = f.iter().rev().fold(0, |acc, c| (acc * x + c) % q);
        count += (1 + legendre(v, q)) as u64;
    }
    count
}

/// Monic squarefree cubics over `F_q`, as coefficient lists.
pub fn squarefree_monic_cubics(q: u64) -> Vec<[u64; 4]> {
    let mut out = Vec::new();
    for c0 in 0..q {
        for c1 in 0..q {
            for c2 in 0..q {
                let f = [c0, c1, c2, 1];
                // Squarefree iff no double root in any extension; for a cubic
                // iff the discriminant is nonzero.
                let (a, b, c) = (c2 as i64, c1 as i64, c0 as i64);
                let disc = a * a * b * b - 4 * b * b * b - 4 * a * a * a * c - 27 * c * c + 18 * a * b * c;
                if disc.rem_euclid(q as i64) != 0 {
                    out.push(f);
                }
            }
        }
    }
    out
}

pub fn format_fq_poly(f: &[u64]) -> String {
    let mut terms = Vec::new();
    for (i, c) in f.iter().enumerate().rev() {
        if *c != 0 {
            terms.push(format!("{c}*t^{i}"));
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn divisors_of(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(1);
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out
}

/// Rational roots by evaluating every candidate `± u / v`, `u` dividing the
/// lowest nonzero coefficient and `v` the leading one. Sorted, distinct.
pub fn brute_force_rational_roots(coeffs: &[i64]) -> Vec<BigRational> {
    let mut c: Vec<BigInt> = coeffs.iter().map(|&x| BigInt::from(x)).collect();
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    assert!(!c.is_empty(), "zero polynomial");
    let mut roots = BTreeSet::new();
    let low = c.iter().position(|x| !x.is_zero()).unwrap();
    if low > 0 {
        roots.insert(BigRational::zero());
    }
    let lead = c.last().unwrap().clone();
    let eval = |x: &BigRational| {
        c.iter().rev().fold(BigRational::zero(), |acc, k| {
            acc * x + BigRational::from_integer(k.clone())
        })
    };
    for u in divisors_of(&c[low]) {
        for v in divisors_of(&lead) {
            for s in [1, -1] {
                let x = BigRational::new(u.clone() * s, v.clone());
                if eval(&x).is_zero() {
                    roots.insert(x);
                }
            }
        }
    }
    roots.into_iter().collect()
}

/// Counts of Gaussian-integer ideals by norm: `sum_{d | n} chi_4(d)`.
pub fn gaussian_ideal_count(n: i64) -> i64 {
    (1..=n)
        .filter(|d| n % d == 0)
        .map(|d| match d % 4 {
            1 => 1,
            3 => -1,
            _ => 0,
        })
        .sum()
}

/// Factorization of a positive integer by trial division.
pub fn factor_small(mut n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    let mut p = 2;
    while p * p <= n {
        while n % p == 0 {
            *out.entry(p).or_default() += 1;
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        *out.entry(n).or_default() += 1;
    }
    out
}
