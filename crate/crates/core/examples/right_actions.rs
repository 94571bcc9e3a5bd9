//! Right module-coalgebra actions ◁ : H8 ⊗ H4 → H8: the two published
//! examples, their matrices A and B, and the (irreducible) enumeration.

use hopf_bicross::pairing::{
    check_right_module_coalgebra, enumerate_right_actions, right_antidiagonal, right_trivial, Factors,
};
use hopf_bicross::SolveOptions;

fn main() {
    let f = Factors::new();
    for (name, action) in [
        ("trivial", right_trivial(&f)),
        ("anti-diagonal", right_antidiagonal(&f)),
    ] {
        let violations = check_right_module_coalgebra(&f, &action);
        println!("{name} ◁: {} violations", violations.len());
        println!("A =\n{}B =\n{}", action.matrix_a(&f), action.matrix_b(&f));
    }
    let opts = SolveOptions {
        allow_residual: true,
        ..SolveOptions::default()
    };
    let e = enumerate_right_actions(&f, opts).expect("the group-like rows reduce");
    println!(
        "enumeration: {} branches, complete: {}; trivial in branch {:?}, anti-diagonal in branch {:?}",
        e.solutions.len(),
        e.is_complete(),
        e.locate(&right_trivial(&f)),
        e.locate(&right_antidiagonal(&f))
    );
}
