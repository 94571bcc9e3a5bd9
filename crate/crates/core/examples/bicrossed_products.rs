//! The four 32-dimensional bicrossed products and their presentations.

use hopf_bicross::bicrossed::theorem_report;
use hopf_bicross::pairing::{find_matched_pairs, Factors};
use hopf_bicross::SolveOptions;

fn main() {
    let f = Factors::new();
    let search = find_matched_pairs(&f, SolveOptions::default()).expect("the staged system reduces");
    let (products, report) = theorem_report(&f, &search.pairs).expect("every pair is matched");
    for p in &products {
        println!("{}: zX = {}", p.algebra.name, p.zx_signature(&f));
    }
    println!();
    print!("{}", report.to_markdown());
}
