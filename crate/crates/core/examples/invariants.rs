//! Invariants separating the four products: group-likes, skew-primitive
//! dimensions, (co)commutativity and the zX relation.

use hopf_bicross::bicrossed::{build_bicrossed, Presentation};
use hopf_bicross::pairing::{find_matched_pairs, Factors};
use hopf_bicross::SolveOptions;

fn main() {
    let f = Factors::new();
    let search = find_matched_pairs(&f, SolveOptions::default()).expect("the staged system reduces");
    for pair in &search.pairs {
        let name = Presentation::expected_for(pair).map_or_else(|| pair.name(), |p| p.name().to_string());
        let product = build_bicrossed(&f, pair, &name).expect("matched pair");
        let report = product
            .invariant_report(&f, SolveOptions::default())
            .expect("finite systems");
        println!("{}", report.to_markdown());
    }
}
