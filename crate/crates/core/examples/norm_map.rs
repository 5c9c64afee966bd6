//! The norm from F_{q^d} to F_q: fibers and its restriction to F_q.

use std::collections::BTreeMap;

use indecomp::fields::FieldTower;

fn main() {
    let tower = FieldTower::new(3, 2).unwrap();
    let ext = tower.ext();
    println!("F_9 = F_3[x]/({})", ext.modulus());

    let mut fibers: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for a in ext.elements().filter(|a| a.0 != 0) {
        fibers
            .entry(ext.render(tower.norm(a)))
            .or_default()
            .push(ext.render(a));
    }
    for (n, preimages) in &fibers {
        println!("N^-1({n}) = {{{}}}", preimages.join(", "));
    }

    for (q, d) in [(2, 4), (4, 2), (3, 3), (5, 2), (16, 2)] {
        let tower = FieldTower::new(q, d).unwrap();
        let ext = tower.ext();
        let ok = tower
            .base_elements()
            .into_iter()
            .filter(|a| a.0 != 0)
            .all(|a| tower.norm(a) == ext.pow(a, d as u64));
        println!("F_{q}^{d}: norm on F_{q}^x is the {d}-th power map: {ok}");
    }
}
