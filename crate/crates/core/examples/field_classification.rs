//! Which finite fields have an indecomposable multiplicative group.
//!
//! ```text
//! cargo run --example field_classification -- 1000000
//! ```

use indecomp::nt::{classify_field, is_fermat_prime, is_mersenne_prime};
use indecomp::search::{scan_indecomposable_fields, SearchOptions};

fn main() {
    let bound: u64 = std::env::args()
        .nth(1)
        .map(|s| s.replace('_', "").parse().expect("a numeric bound"))
        .unwrap_or(1_000_000);

    for (p, r) in [(2, 1), (3, 2), (257, 1), (2, 7), (7, 1), (2, 4)] {
        let class = classify_field(p, r).unwrap();
        println!("p = {p}, r = {r}: {class}");
    }

    let report = scan_indecomposable_fields(bound, &SearchOptions::default()).unwrap();
    println!(
        "\n{} fields of order <= {bound} in {} ms:",
        report.findings.len(),
        report.elapsed_ms
    );
    for q in &report.findings {
        let why = if *q == 2 {
            "trivial unit group"
        } else if *q == 9 {
            "8 = 2^3"
        } else if is_fermat_prime(*q) {
            "Fermat prime"
        } else if is_mersenne_prime(q - 1) {
            "one more than a Mersenne prime"
        } else {
            "unexpected"
        };
        println!("  {q:>8}  {why}");
    }
}
