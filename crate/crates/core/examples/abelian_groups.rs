//! Invariant factors, primary parts and reconstruction from element orders.

use indecomp::groups::AbelianGroup;

fn main() {
    let g = AbelianGroup::from_cyclic_orders(&[4, 6, 10]);
    println!("C_4 x C_6 x C_10 = {g}");
    println!("primary parts: {:?}", g.primary_decomposition());
    println!("indecomposable: {}", g.is_indecomposable());

    let counts = g.order_counts();
    println!("elements by order: {counts:?}");
    let back = AbelianGroup::from_order_counts(&counts).unwrap();
    println!("rebuilt from counts: {back}");

    for n in [8, 12, 49, 1] {
        let c = AbelianGroup::cyclic(n);
        println!("C_{n}: indecomposable = {}", c.is_indecomposable());
    }
}
