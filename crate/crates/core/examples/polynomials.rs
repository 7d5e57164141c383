//! Exact integers, rationals and polynomials: Bezout cofactors, factoring
//! modulo a prime, rational roots and an irreducibility certificate.

use dedekind::arith::{factor_integer, gcd_ext, int};
use dedekind::poly::{factor_mod_p, fpoly, is_irreducible_q, qpoly, rational_roots, zpoly};

fn main() -> dedekind::Result<()> {
    let (g, u, v) = gcd_ext(&int(240), &int(46));
    println!("gcd(240, 46) = {g} = {u}*240 + {v}*46");

    let n = int(360_360);
    let factors: Vec<String> = factor_integer(&n)?.iter().map(|(p, e)| format!("{p}^{e}")).collect();
    println!("{n} = {}", factors.join(" * "));

    let f = fpoly(&[1, 0, 0, 0, 1], 3);
    for (g, e) in factor_mod_p(&f)? {
        println!("x^4 + 1 mod 3 has factor ({g})^{e}");
    }

    let h = zpoly(&[-2, -3, 2]);
    println!(
        "rational roots of {h}: {:?}",
        rational_roots(&h)?.iter().map(|r| r.to_string()).collect::<Vec<_>>()
    );

    let cubic = qpoly(&[8, -2, 1, 1]);
    println!("{cubic}: {:?}", is_irreducible_q(&cubic)?);
    Ok(())
}
