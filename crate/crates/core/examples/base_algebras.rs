//! The Sweedler algebra H4, the Kac–Paljutkin algebra H8 and H8⊗H4, with
//! every Hopf axiom and every defining identity checked exactly.

use hopf_bicross::catalog::presentation_facts;
use hopf_bicross::{build_h4, build_h8, tensor_product};

fn main() {
    let (h4, h8) = (build_h4(), build_h8());
    let tensor = tensor_product(&h8, &h4);
    for h in [&h4, &h8, &tensor] {
        print!("{}", h.verify_axioms());
        for fact in presentation_facts(h).expect("labels exist") {
            println!("  [{}] {}", if fact.holds { "pass" } else { "FAIL" }, fact.label);
        }
    }
    let z = h8.elem("z").expect("basis label");
    println!("Δ(z) = {}", h8.render_tensor(&z.comultiply()));
    println!("z² = {}", z.pow(2));
    let x = h4.elem("X").expect("basis label");
    println!("S(X) = {}, Δ(X) = {}", x.antipode(), h4.render_tensor(&x.comultiply()));
}
