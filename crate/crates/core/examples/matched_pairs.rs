//! The matched-pair search: every (▷, ◁) satisfying the module-coalgebra,
//! compatibility and exchange conditions, re-checked by direct evaluation.

use hopf_bicross::pairing::{find_matched_pairs, Factors};
use hopf_bicross::SolveOptions;

fn main() {
    let f = Factors::new();
    let search = find_matched_pairs(&f, SolveOptions::default()).expect("the staged system reduces");
    println!("{} matched pairs ({} solver nodes)", search.pairs.len(), search.nodes);
    for pair in &search.pairs {
        println!("\n{pair}: re-check {}", if pair.is_valid() { "pass" } else { "FAIL" });
        println!("A = ◁G on (z, gz, hz, ghz):\n{}", pair.matrix_a(&f));
        let z = f.x("z");
        println!(
            "z▷X = {}, z◁X = {}",
            pair.left.render_entry(&f, z, f.a("X")),
            pair.right.render_entry(&f, z, f.a("X"))
        );
    }
}
