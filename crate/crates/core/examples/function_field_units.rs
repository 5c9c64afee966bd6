//! Units of F_2(x) as vectors of exponents over the monic irreducibles.

use indecomp::fields::{factor_poly2, unit_exponent_vector, Poly2};

fn main() {
    let f = Poly2::from_exponents(&[3, 1]);
    let g = Poly2::from_exponents(&[1, 0]);
    println!(
        "{f} = {:?}",
        factor_poly2(&f)
            .iter()
            .map(|(p, e)| format!("({p})^{e}"))
            .collect::<Vec<_>>()
    );
    let v = unit_exponent_vector(&f, &g).unwrap();
    println!("({f}) / ({g}) -> {v}");

    let h = Poly2::from_exponents(&[8, 4, 3, 1, 0]);
    let w = unit_exponent_vector(&h, &f).unwrap();
    println!("({h}) / ({f}) -> {w}");
    let sum = v.add(&w);
    let direct = unit_exponent_vector(&f.mul(&h), &g.mul(&f)).unwrap();
    println!("sum {sum} equals the product's vector: {}", sum == direct);
    let (num, den) = sum.to_fraction();
    println!("back to a fraction: ({num}) / ({den})");
}
