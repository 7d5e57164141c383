//! Ideal class groups.
//!
//! Every class contains an ideal dividing `⟨M⟩`, where `M` is the product of
//! the set from [`finset_approx`], so the classes of the primes above the
//! prime factors of `M` generate the group. In the definite cases (the base
//! domain itself, imaginary quadratic fields, and `y^2 = f` with `deg f`
//! odd) principality is decidable by a finite search and the group is
//! computed exactly. Elsewhere only an upper bound is reported.

use std::collections::BTreeMap;

use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::admissible::{finset_approx, Admissible};
use crate::arith::{exact_sqrt, Integer};
use crate::domain::{EuclideanDomain, Integers, PolyRingFp};
use crate::error::{Error, Result};
use crate::fractional::FractionalIdeal;
use crate::ideals::{ideals_of_norm, primes_above, IntegralIdeal, PrimeIdealData};
use crate::order::Order;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Principality<E> {
    /// A generator, in order coordinates.
    Principal(Vec<E>),
    NotPrincipal,
    /// No generator within the search bound; the search is incomplete.
    NotFoundWithinBound,
    /// No search method applies.
    Inconclusive,
}

impl<E> Principality<E> {
    pub fn is_principal(&self) -> bool {
        matches!(self, Principality::Principal(_))
    }

    /// `Some(answer)` when the outcome is decided.
    pub fn decided(&self) -> Option<bool> {
        match self {
            Principality::Principal(_) => Some(true),
            Principality::NotPrincipal => Some(false),
            _ => None,
        }
    }
}

/// Domains with a norm-equation search for generators of ideals.
pub trait NormSearch: Admissible {
    /// Whether [`NormSearch::find_generator`] is complete for `order`.
    fn is_definite(order: &Order<Self>) -> bool;

    /// Searches the nonzero ideal for an element whose norm generates the
    /// ideal norm. `bound` limits the search in indefinite cases.
    fn find_generator(ideal: &IntegralIdeal<Self>, bound: u64) -> Result<Principality<Self::Elem>>;
}

/// Principality test, with a generator as witness when principal.
pub fn is_principal<D: NormSearch>(ideal: &IntegralIdeal<D>, bound: u64) -> Result<Principality<D::Elem>> {
    let h = ideal
        .hnf()
        .ok_or_else(|| Error::ZeroIdeal("principality of the zero ideal".into()))?;
    if ideal.order().rank() == 1 {
        return Ok(Principality::Principal(vec![h[0][0].clone()]));
    }
    D::find_generator(ideal, bound)
}

/// The binary norm form `A s^2 + B s w + C w^2` on the HNF basis.
fn norm_form<D: EuclideanDomain>(order: &Order<D>, c0: &[D::Elem], c1: &[D::Elem]) -> (D::Elem, D::Elem, D::Elem) {
    let d = order.domain();
    let a = order.norm(c0);
    let c = order.norm(c1);
    let b = d.sub(&d.sub(&order.norm(&order.add(c0, c1)), &a), &c);
    (a, b, c)
}

impl NormSearch for Integers {
    fn is_definite(order: &Order<Self>) -> bool {
        order.rank() == 1 || (order.rank() == 2 && order.discriminant().is_negative())
    }

    fn find_generator(ideal: &IntegralIdeal<Self>, bound: u64) -> Result<Principality<Integer>> {
        let order = ideal.order();
        let t = ideal.norm()?;
        let basis = ideal.basis();
        if order.rank() != 2 {
            // Box search over small coordinates.
            let b = bound.min(6) as i64;
            let n = order.rank();
            let mut coeffs = vec![-b; n];
            loop {
                let x = basis.iter().zip(&coeffs).fold(order.zero(), |acc, (col, &k)| {
                    order.add(&acc, &order.scale(&Integer::from(k), col))
                });
                if order.norm(&x).abs() == t {
                    return Ok(Principality::Principal(x));
                }
                let mut i = 0;
                while i < n && coeffs[i] == b {
                    coeffs[i] = -b;
                    i += 1;
                }
                if i == n {
                    return Ok(Principality::Inconclusive);
                }
                coeffs[i] += 1;
            }
        }
        let (c0, c1) = (&basis[0], &basis[1]);
        let (a, b, c) = norm_form(order, c0, c1);
        let gap = Integer::from(4) * &a * &c - &b * &b;
        let witness = |s: &Integer, w: &Integer| order.add(&order.scale(s, c0), &order.scale(w, c1));
        // Solutions s of A s^2 + (B w) s + (C w^2 - target) = 0.
        let solve = |w: &Integer, target: &Integer| -> Option<Integer> {
            let bw = &b * w;
            let disc = &bw * &bw - Integer::from(4) * &a * (&c * w * w - target);
            let r = exact_sqrt(&disc)?;
            let two_a = Integer::from(2) * &a;
            [-&bw + &r, -&bw - &r].into_iter().find_map(|num| {
                let (q, rem) = (&num / &two_a, &num % &two_a);
                rem.is_zero().then_some(q)
            })
        };
        if gap.is_positive() {
            // Definite: w^2 <= 4 A T / (4 A C - B^2).
            let wmax = (Integer::from(4) * &a * &t / &gap).sqrt();
            let mut w = -wmax.clone();
            while w <= wmax {
                if let Some(s) = solve(&w, &t) {
                    return Ok(Principality::Principal(witness(&s, &w)));
                }
                w += 1;
            }
            return Ok(Principality::NotPrincipal);
        }
        for k in 0..=bound as i64 {
            for w in [Integer::from(k), Integer::from(-k)] {
                for target in [t.clone(), -t.clone()] {
                    if let Some(s) = solve(&w, &target) {
                        return Ok(Principality::Principal(witness(&s, &w)));
                    }
                }
            }
        }
        Ok(Principality::NotFoundWithinBound)
    }
}

/// `f` when `order` is `F_q[t][y]` with `y^2 = f` in the basis `{1, y}`.
pub(crate) fn hyperelliptic_f(order: &Order<PolyRingFp>) -> Option<crate::domain::FpPoly> {
    if order.rank() != 2 || order.one() != order.basis_element(0) {
        return None;
    }
    let yy = &order.table()[1][1];
    yy[1].is_zero().then(|| yy[0].clone())
}

impl NormSearch for PolyRingFp {
    fn is_definite(order: &Order<Self>) -> bool {
        order.rank() == 1 || hyperelliptic_f(order).is_some_and(|f| f.degree().is_some_and(|d| d % 2 == 1))
    }

    fn find_generator(ideal: &IntegralIdeal<Self>, _bound: u64) -> Result<Principality<Self::Elem>> {
        let order = ideal.order();
        let d = order.domain();
        let f = match hyperelliptic_f(order) {
            Some(f) if Self::is_definite(order) => f,
            _ => return Ok(Principality::Inconclusive),
        };
        let target = ideal.norm()?;
        let h = ideal.hnf().expect("nonzero");
        let (a, b, c) = (&h[0][0], &h[0][1], &h[1][1]);
        let deg = |x: &Self::Elem| x.degree().expect("nonzero") as i64;
        let nd = deg(&target);
        let deg_f = deg(&f);
        // N(u + v y) = u^2 - f v^2 has degree max(2 deg u, deg f + 2 deg v)
        // since the two degrees have different parity.
        let (w_degrees, u_max): (Vec<i64>, i64) = if nd % 2 == 0 {
            // v = 0 or deg f + 2 deg v < nd.
            let vmax = (nd - deg_f - 1).div_euclid(2);
            let mut ws = vec![-1];
            ws.extend(0..=vmax - deg(c));
            (ws, nd / 2)
        } else {
            // deg f + 2 deg v = nd and 2 deg u < nd.
            if nd < deg_f || (nd - deg_f) / 2 < deg(c) {
                return Ok(Principality::NotPrincipal);
            }
            (vec![(nd - deg_f) / 2 - deg(c)], (nd - 1) / 2)
        };
        for wd in w_degrees {
            // All w of degree exactly wd, or just zero.
            let ws: Vec<Self::Elem> = if wd < 0 {
                vec![d.zero()]
            } else {
                (1..d.characteristic())
                    .flat_map(|lead| {
                        let unit = d.poly(&[lead as i64]);
                        d.monic_of_degree(wd as usize).into_iter().map(move |m| m.mul(&unit))
                    })
                    .collect()
            };
            for w in ws {
                let v = d.mul(&w, c);
                let u0 = d.rem(&d.mul(&w, b), a);
                let ks = if u_max >= deg(a) {
                    d.polys_below_degree((u_max - deg(a) + 1) as usize)
                } else {
                    vec![d.zero()]
                };
                for k in ks {
                    let u = d.add(&u0, &d.mul(&k, a));
                    let x = vec![u, v.clone()];
                    let n = order.norm(&x);
                    if !d.is_zero(&n) && d.normalize(&n) == target {
                        return Ok(Principality::Principal(x));
                    }
                }
            }
        }
        Ok(Principality::NotPrincipal)
    }
}

#[derive(Clone, Debug)]
pub struct ClassGroupOptions {
    /// Search radius for principality in indefinite cases.
    pub search_bound: u64,
}

impl Default for ClassGroupOptions {
    fn default() -> Self {
        Self { search_bound: 50 }
    }
}

#[derive(Clone, Debug)]
pub struct ClassGroup<D: EuclideanDomain> {
    /// Canonical representatives, the unit ideal first.
    pub representatives: Vec<IntegralIdeal<D>>,
    /// `table[i][j]` is the index of the class of `rep_i * rep_j`.
    pub table: Vec<Vec<usize>>,
    /// Invariant factors `d_1 | d_2 | ...`, all greater than 1.
    pub invariant_factors: Vec<u64>,
    /// Prime ideals above the primes dividing `M`.
    pub generators: Vec<PrimeIdealData<D>>,
    search_bound: u64,
    inverses: Vec<IntegralIdeal<D>>,
}

#[derive(Clone, Debug)]
pub struct ClassGroupBound<D: EuclideanDomain> {
    /// Upper bound on the class number: the number of ideals dividing `⟨M⟩`.
    pub upper_bound: Integer,
    /// Prime ideals dividing `⟨M⟩` with their exponents, where computable.
    pub divisor_primes: Vec<(PrimeIdealData<D>, u32)>,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub enum ClassGroupResult<D: EuclideanDomain> {
    Exact(ClassGroup<D>),
    BoundOnly(ClassGroupBound<D>),
}

impl<D: EuclideanDomain> ClassGroupResult<D> {
    pub fn exact(self) -> Result<ClassGroup<D>> {
        match self {
            ClassGroupResult::Exact(g) => Ok(g),
            ClassGroupResult::BoundOnly(b) => Err(Error::Unsupported(format!(
                "exact class group unavailable ({}); class number is at most {}",
                b.reason, b.upper_bound
            ))),
        }
    }
}

impl<D: NormSearch> ClassGroup<D> {
    pub fn class_number(&self) -> usize {
        self.representatives.len()
    }

    /// Index of the class of a nonzero ideal.
    pub fn class_of(&self, ideal: &IntegralIdeal<D>) -> Result<usize> {
        find_class(ideal, &self.inverses, self.search_bound)?
            .ok_or_else(|| Error::Internal("ideal lies in no computed class".into()))
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn inverse(&self, i: usize) -> usize {
        (0..self.table.len())
            .find(|&j| self.table[i][j] == 0)
            .expect("group has inverses")
    }
}

/// `I ~ J` iff the numerator of `I J^{-1}` is principal.
fn equivalent_to<D: NormSearch>(ideal: &IntegralIdeal<D>, inverse_num: &IntegralIdeal<D>, bound: u64) -> Result<bool> {
    let prod = ideal.mul(inverse_num)?;
    match is_principal(&prod, bound)?.decided() {
        Some(b) => Ok(b),
        None => Err(Error::Unsupported("principality is undecidable by search here".into())),
    }
}

fn find_class<D: NormSearch>(
    ideal: &IntegralIdeal<D>,
    inverses: &[IntegralIdeal<D>],
    bound: u64,
) -> Result<Option<usize>> {
    for (i, inv) in inverses.iter().enumerate() {
        if equivalent_to(ideal, inv, bound)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

fn inverse_numerator<D: NormSearch>(ideal: &IntegralIdeal<D>) -> Result<IntegralIdeal<D>> {
    Ok(FractionalIdeal::from_integral(ideal.clone()).inv()?.num().clone())
}

/// Ideals with absolute norm `v`, sorted.
fn ideals_of_abs_norm<D: EuclideanDomain>(
    order: &std::sync::Arc<Order<D>>,
    v: &Integer,
) -> Result<Vec<IntegralIdeal<D>>> {
    let mut out = Vec::new();
    for n in order.domain().normal_elements_of_abv(v) {
        out.extend(ideals_of_norm(order, &n)?);
    }
    out.sort();
    Ok(out)
}

/// The smallest ideal (by norm, then HNF) in the class of `ideal`.
fn canonical_representative<D: NormSearch>(ideal: &IntegralIdeal<D>, bound: u64) -> Result<IntegralIdeal<D>> {
    let inv = inverse_numerator(ideal)?;
    let limit = ideal.abs_norm();
    let mut v = Integer::one();
    while v <= limit {
        for k in ideals_of_abs_norm(ideal.order(), &v)? {
            if equivalent_to(&k, &inv, bound)? {
                return Ok(k);
            }
        }
        v += 1;
    }
    Ok(ideal.clone())
}

/// Exponent of the prime `p` in `M`, the product of the approximation set.
fn valuation_in_product<D: EuclideanDomain>(d: &D, set: &[D::Elem], p: &D::Elem) -> u32 {
    set.iter()
        .map(|x| {
            let mut x = x.clone();
            let mut k = 0;
            while let Some(q) = d.exact_div(&x, p) {
                x = q;
                k += 1;
            }
            k
        })
        .sum()
}

/// The class group, exactly in definite cases and as a bound otherwise.
pub fn class_group_compute<D: NormSearch>(
    order: &std::sync::Arc<Order<D>>,
    options: &ClassGroupOptions,
) -> Result<ClassGroupResult<D>> {
    if !order.is_maximal() {
        return Err(Error::NotMaximal(
            "class groups are computed for maximal orders only".into(),
        ));
    }
    let d = order.domain();
    let approx = finset_approx(order)?;
    let primes = approx.prime_support(d)?;
    if !D::is_definite(order) {
        return bound_only(order, &approx.set, &primes);
    }
    let bound = options.search_bound;
    let mut generators: Vec<PrimeIdealData<D>> = Vec::new();
    for p in &primes {
        generators.extend(primes_above(order, p)?);
    }
    generators.sort_by(|a, b| a.ideal.cmp(&b.ideal));

    let mut reps = vec![IntegralIdeal::unit(order)];
    let mut inverses = vec![IntegralIdeal::unit(order)];
    for g in &generators {
        if find_class(&g.ideal, &inverses, bound)?.is_some() {
            continue;
        }
        // Close the group under multiplication by the new generator.
        let mut frontier: Vec<usize> = (0..reps.len()).collect();
        while let Some(i) = frontier.pop() {
            let y = reps[i].mul(&g.ideal)?;
            if find_class(&y, &inverses, bound)?.is_none() {
                let canon = canonical_representative(&y, bound)?;
                inverses.push(inverse_numerator(&canon)?);
                reps.push(canon);
                frontier.push(reps.len() - 1);
            }
        }
    }
    // Unit ideal first, then canonical order.
    let mut order_idx: Vec<usize> = (1..reps.len()).collect();
    order_idx.sort_by(|&a, &b| reps[a].cmp(&reps[b]));
    order_idx.insert(0, 0);
    let reps: Vec<IntegralIdeal<D>> = order_idx.iter().map(|&i| reps[i].clone()).collect();
    let inverses: Vec<IntegralIdeal<D>> = order_idx.iter().map(|&i| inverses[i].clone()).collect();

    let h = reps.len();
    let table: Vec<Vec<usize>> = (0..h)
        .into_par_iter()
        .map(|i| {
            (0..h)
                .map(|j| {
                    let prod = reps[i].mul(&reps[j])?;
                    find_class(&prod, &inverses, bound)?
                        .ok_or_else(|| Error::Internal("class group not closed under products".into()))
                })
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let invariant_factors = invariant_factors(&table)?;
    Ok(ClassGroupResult::Exact(ClassGroup {
        representatives: reps,
        table,
        invariant_factors,
        generators,
        search_bound: bound,
        inverses,
    }))
}

fn bound_only<D: NormSearch>(
    order: &std::sync::Arc<Order<D>>,
    set: &[D::Elem],
    primes: &[D::Elem],
) -> Result<ClassGroupResult<D>> {
    let d = order.domain();
    let n = order.rank() as u32;
    let mut upper = Integer::one();
    let mut divisor_primes = Vec::new();
    for p in primes {
        let v = valuation_in_product(d, set, p);
        match primes_above(order, p) {
            Ok(ps) => {
                for prime in ps {
                    let e = v * prime.ramification;
                    upper *= Integer::from(e + 1);
                    divisor_primes.push((prime, e));
                }
            }
            Err(Error::Inapplicable(_)) => {
                upper *= Integer::from(v * n + 1).pow(n);
            }
            Err(e) => return Err(e),
        }
    }
    Ok(ClassGroupResult::BoundOnly(ClassGroupBound {
        upper_bound: upper,
        divisor_primes,
        reason: "principality search is incomplete for this order".into(),
    }))
}

/// Invariant factors of a finite abelian group from its multiplication
/// table (identity at index 0), via the sizes of the `p^k`-torsion.
pub fn invariant_factors(table: &[Vec<usize>]) -> Result<Vec<u64>> {
    let h = table.len() as u64;
    let power = |mut g: usize, mut e: u64| {
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = table[acc][g];
            }
            g = table[g][g];
            e >>= 1;
        }
        acc
    };
    let factors = crate::arith::factor_integer(&Integer::from(h))?;
    // For each prime, the exponents of the cyclic p-parts, largest first.
    let mut parts: Vec<Vec<u64>> = Vec::new();
    for (p, _) in factors {
        let p = p.to_u64().expect("small group order");
        let mut ranks = Vec::new();
        let mut prev = 1u64;
        let mut pk = p;
        loop {
            let count = (0..table.len()).filter(|&g| power(g, pk) == 0).count() as u64;
            let mut r = 0;
            let mut ratio = count / prev;
            while ratio > 1 {
                ratio /= p;
                r += 1;
            }
            if r == 0 {
                break;
            }
            ranks.push(r);
            prev = count;
            pk *= p;
        }
        // ranks[k] = number of cyclic factors of order >= p^{k+1}.
        let mut cyclic = Vec::new();
        for (k, &r) in ranks.iter().enumerate() {
            let next = ranks.get(k + 1).copied().unwrap_or(0);
            for _ in 0..r - next {
                cyclic.push(p.pow(k as u32 + 1));
            }
        }
        cyclic.sort_unstable_by(|a, b| b.cmp(a));
        parts.push(cyclic);
    }
    let len = parts.iter().map(Vec::len).max().unwrap_or(0);
    let mut out: Vec<u64> = (0..len)
        .map(|i| parts.iter().map(|c| c.get(i).copied().unwrap_or(1)).product())
        .collect();
    out.reverse();
    if out.iter().product::<u64>() != h {
        return Err(Error::Internal(
            "invariant factors do not multiply to the group order".into(),
        ));
    }
    Ok(out)
}

/// The class number in a definite case.
pub fn class_number<D: NormSearch>(order: &std::sync::Arc<Order<D>>) -> Result<usize> {
    Ok(class_group_compute(order, &ClassGroupOptions::default())?
        .exact()?
        .class_number())
}

/// Checks at desk scale that the class number is one exactly when every
/// prime ideal dividing `⟨M⟩`, and every prime of norm at most
/// `norm_bound`, is principal. Returns whether the class number is one.
pub fn class_number_is_one_iff_pid_check<D: NormSearch>(
    order: &std::sync::Arc<Order<D>>,
    norm_bound: u64,
) -> Result<bool> {
    let options = ClassGroupOptions::default();
    let group = class_group_compute(order, &options)?.exact()?;
    let d = order.domain();
    let mut primes: BTreeMap<Vec<Vec<D::Elem>>, IntegralIdeal<D>> = BTreeMap::new();
    for g in &group.generators {
        primes.insert(g.ideal.hnf().cloned().unwrap_or_default(), g.ideal.clone());
    }
    for v in 2..=norm_bound {
        for p in d.normal_elements_of_abv(&Integer::from(v)) {
            if !d.is_prime(&p) {
                continue;
            }
            for prime in primes_above(order, &p)? {
                primes.insert(prime.ideal.hnf().cloned().unwrap_or_default(), prime.ideal);
            }
        }
    }
    let ideals: Vec<IntegralIdeal<D>> = primes.into_values().collect();
    let all_principal = ideals
        .par_iter()
        .map(|i| Ok(is_principal(i, options.search_bound)?.is_principal()))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|b| b);
    let h_one = group.class_number() == 1;
    if h_one != all_principal {
        return Err(Error::Internal(format!(
            "class number one is {h_one} but all sampled primes principal is {all_principal}"
        )));
    }
    Ok(h_one)
}
