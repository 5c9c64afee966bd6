//! Primitive prime divisors of a^t - 1.

use indecomp::search::{bang_scan, primitive_prime_divisor_unchecked, SearchOptions};

fn main() {
    let opts = SearchOptions::default();
    let report = bang_scan(10, 10, &opts).unwrap();
    println!(
        "{} pairs with 3 <= a, t <= 10 have a primitive divisor",
        report.findings.len()
    );
    for w in report.findings.iter().filter(|w| w.a == 3) {
        println!("  3^{} - 1: {}", w.t, w.witness);
    }

    for (a, t) in [(2, 6), (2, 5), (2, 2), (3, 2)] {
        match primitive_prime_divisor_unchecked(a, t, &opts).unwrap() {
            Some(l) => println!("{a}^{t} - 1: {l}"),
            None => println!("{a}^{t} - 1: none"),
        }
    }
}
