//! Ring reports as JSON, and the rings whose unit group is indecomposable.

use std::collections::BTreeMap;

use indecomp::frings::{classify_ring, expressible_specs, parse_ring_spec, RingClassifier};

fn main() {
    for text in [
        "Z/4",
        "Z/2 * GF(9)",
        "Z/3 * Z/3",
        "GF(257)",
        "Z/2 * Z/2[x]/(x^2 + 1)",
    ] {
        let report = classify_ring(&parse_ring_spec(text).unwrap()).unwrap();
        println!("{}", serde_json::to_string(&report).unwrap());
    }

    let classifier = RingClassifier::default();
    let specs = expressible_specs(64);
    let hits: Vec<_> = specs
        .iter()
        .map(|s| classifier.classify(s).unwrap())
        .filter(|r| r.units_indecomposable)
        .collect();
    println!(
        "\n{} of {} specs of order <= 64 have indecomposable units",
        hits.len(),
        specs.len()
    );
    let mut by_case: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for r in &hits {
        let case = r.matched_case.clone().unwrap_or_else(|| "unmatched".into());
        by_case.entry(case).or_default().push(r.spec.to_string());
    }
    for (case, members) in &by_case {
        println!(
            "  {case:<40} {:>4} specs, e.g. {}",
            members.len(),
            members[members.len() - 1]
        );
    }
}
