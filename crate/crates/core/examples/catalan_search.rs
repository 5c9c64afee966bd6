//! Consecutive perfect powers and consecutive prime powers.

use indecomp::search::{catalan_scan, consecutive_prime_powers, SearchOptions};

fn main() {
    let opts = SearchOptions::default();

    let catalan = catalan_scan(100_000_000, &opts).unwrap();
    println!("x^u - y^v = 1 with x^u <= 10^8:");
    for s in &catalan.findings {
        println!("  {}^{} - {}^{} = 1", s.x, s.u, s.y, s.v);
    }

    let pairs = consecutive_prime_powers(1_000_000, &opts).unwrap();
    println!("\nconsecutive prime powers up to 10^6:");
    for p in &pairs.findings {
        let note = if p.both_higher_powers() {
            "  <- both proper powers"
        } else {
            ""
        };
        println!(
            "  {:>7} = {}^{}, {:>7} = {}^{}{note}",
            p.a, p.a_prime, p.a_exponent, p.b, p.b_prime, p.b_exponent
        );
    }
}
