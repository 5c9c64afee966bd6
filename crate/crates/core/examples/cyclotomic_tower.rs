//! Where q^{n_i} - 1 stops being a power of p, with n_i = ord_{p^i}(q).

use indecomp::fields::tower_obstruction;
use indecomp::search::primes_up_to;

fn main() {
    for (q, p) in [(3, 5), (2, 3), (2, 7), (3, 2), (17, 2)] {
        let ob = tower_obstruction(q, p, 64).unwrap();
        println!(
            "q = {q}, p = {p}: i = {}, n_i = {}, {q}^{} - 1 = {}",
            ob.i, ob.n_i, ob.n_i, ob.value
        );
    }

    let primes = primes_up_to(50);
    let mut worst = (0, 0, 0);
    for &q in &primes {
        for &p in &primes {
            if p != q {
                let i = tower_obstruction(q, p, 64).unwrap().i;
                if i > worst.2 {
                    worst = (q, p, i);
                }
            }
        }
    }
    println!(
        "largest i over primes <= 50: {} at q = {}, p = {}",
        worst.2, worst.0, worst.1
    );
}
