//! Unit groups of the primary rings with cyclic units, by exhaustive search
//! and by closed formula.

use indecomp::frings::{
    parse_ring_spec, pearson_schneider_match, units_bruteforce, units_structural, RingOptions,
};

fn main() {
    let opts = RingOptions::default();
    let specs = [
        "GF(16)",
        "Z/27",
        "Z/4",
        "Z/8",
        "GF(5)[x]/(x^2)",
        "GF(4)[x]/(x^2)",
        "GF(2)[x]/(x^3)",
        "Z/4[x]/(2x,x^2-2)",
    ];
    println!(
        "{:<20} {:<16} {:<16} case",
        "ring", "brute force", "formula"
    );
    for text in specs {
        let spec = parse_ring_spec(text).unwrap();
        let (units, brute) = units_bruteforce(&spec, &opts).unwrap();
        let formula = units_structural(&spec).unwrap();
        assert_eq!(brute.order(), units.len() as u128);
        let case = pearson_schneider_match(&spec)
            .unwrap()
            .map_or("-".to_string(), |c| c.label());
        println!(
            "{:<20} {:<16} {:<16} {case}",
            spec.to_string(),
            brute.to_string(),
            formula.to_string()
        );
    }
}
