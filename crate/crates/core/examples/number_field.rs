//! Arithmetic in `Q(a)` with `a^3 + a^2 - 2a + 8 = 0`: products, inverses,
//! traces, norms and minimal polynomials.

use dedekind::arith::rat;
use dedekind::number_field::NumberField;
use dedekind::poly::parse_poly;

fn main() -> dedekind::Result<()> {
    let k = NumberField::new(parse_poly("x^3 + x^2 - 2x + 8", 'x')?)?;
    let a = k.gen();
    let x = k.add(&a, &k.scale(&rat(1, 2), &k.pow(&a, 2)));
    println!("field of degree {} ({:?})", k.degree(), k.certificate());
    println!("x = {x}");
    println!("x^2 = {}", k.mul(&x, &x));
    println!("1/x = {}", k.inv(&x)?);
    println!("trace(x) = {}, norm(x) = {}", k.trace(&x), k.norm(&x));
    println!("minpoly(x) = {}", k.minpoly(&x));
    println!("x integral: {}", k.is_integral(&x));
    println!("power basis discriminant = {}", k.poly_discriminant());
    Ok(())
}
