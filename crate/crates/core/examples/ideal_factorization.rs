//! Two factorizations of 6 in Z[sqrt(-5)] become one factorization into
//! prime ideals.

use dedekind::ideals::{factor_ideal, IntegralIdeal};
use dedekind::order::OrderBasis;

fn main() -> dedekind::Result<()> {
    let o = OrderBasis::quadratic_maximal(-5)?;
    let elements = [
        ("2", [2, 0]),
        ("3", [3, 0]),
        ("1+sqrt(-5)", [1, 1]),
        ("1-sqrt(-5)", [1, -1]),
    ];
    for (name, x) in elements {
        let ideal = IntegralIdeal::principal(o.order(), &o.element(&x));
        let parts: Vec<String> = factor_ideal(&ideal)?
            .factors
            .iter()
            .map(|(p, e)| format!("P({}, f={}, hnf {:?})^{e}", p.p, p.residue_degree, p.ideal.format_hnf()))
            .collect();
        println!("({name}) = {}", parts.join(" * "));
    }
    let six = IntegralIdeal::principal(o.order(), &o.element(&[6, 0]));
    let f = factor_ideal(&six)?;
    println!(
        "(6) has {} prime factors; product check: {}",
        f.factors.len(),
        f.product(o.order())? == six
    );
    Ok(())
}
