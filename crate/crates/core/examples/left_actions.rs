//! All left module-coalgebra actions ▷ : H8 ⊗ H4 → H4, matched two-way
//! against the sixteen published families.

use hopf_bicross::pairing::{enumerate_left_actions, Factors};
use hopf_bicross::{Scalar, SolveOptions};

fn main() {
    let f = Factors::new();
    let e = enumerate_left_actions(&f, SolveOptions::default()).expect("the left system reduces");
    println!(
        "{} constraints in {} unknowns -> {} branches ({} nodes)",
        e.system.len(),
        e.solutions.unknowns.len(),
        e.solutions.len(),
        e.solutions.nodes
    );
    for (k, (branch, family)) in e.solutions.branches.iter().zip(&e.families).enumerate() {
        let free: Vec<&str> = branch.free.iter().map(|&v| e.solutions.unknowns.name(v)).collect();
        println!(
            "  branch {k:>2}: {:<4} free [{}]{}",
            family.as_ref().map_or("?".to_string(), |fam| fam.name()),
            free.join(", "),
            if e.splits_on_imaginary_unit(k) {
                "  (γ² = −1 split)"
            } else {
                ""
            }
        );
    }
    let k = e
        .families
        .iter()
        .position(|fam| fam.as_ref().is_some_and(|f| f.name() == "▷3c"))
        .expect("present");
    println!(
        "\n▷3c at parameter 1:\n{}",
        e.sample(k, &Scalar::from_int(1)).render(&f)
    );
}
