//! Fractional ideals: inverses in a maximal order, and their failure in
//! the non-maximal order Z[sqrt(-3)].

use dedekind::arith::int;
use dedekind::fractional::FractionalIdeal;
use dedekind::ideals::IntegralIdeal;
use dedekind::number_field::NumberField;
use dedekind::order::OrderBasis;

fn main() -> dedekind::Result<()> {
    let o = OrderBasis::quadratic_maximal(-5)?;
    let p2 = IntegralIdeal::from_generators(o.order(), &[o.element(&[2, 0]), o.element(&[1, 1])]);
    let p2 = FractionalIdeal::from_integral(p2);
    let inv = p2.inv()?;
    println!("P2^-1 = {:?} / {}", inv.num().format_hnf(), inv.den());
    println!("P2 * P2^-1 = (1): {}", p2.mul(&inv)?.is_unit());
    let half = FractionalIdeal::new(IntegralIdeal::unit(o.order()), int(2))?;
    println!("(1/2) * P2^2 = (1): {}", half.mul(&p2.mul(&p2)?)?.is_unit());

    let k = NumberField::quadratic(-3)?;
    let z = OrderBasis::from_basis(&k, &k.power_basis())?.with_certified_maximality()?;
    let i = IntegralIdeal::from_generators(z.order(), &[z.element(&[2, 0]), z.element(&[1, 1])]);
    let i = FractionalIdeal::from_integral(i);
    let prod = i.mul(&i.inv()?)?;
    println!("in Z[sqrt(-3)]: I * I^-1 = I: {}, = (1): {}", prod == i, prod.is_unit());
    Ok(())
}
