//! Group-like and skew-primitive elements, found by solving polynomial
//! systems rather than read off the presentation.

use hopf_bicross::{build_h4, build_h8, SolveOptions};

fn main() {
    for h in [build_h4(), build_h8()] {
        let g = h.grouplikes(SolveOptions::default()).expect("finite system");
        let labels: Vec<String> = g.iter().map(|e| e.to_string()).collect();
        println!("G({}) = {{{}}}", h.name, labels.join(", "));
        for a in &g {
            for b in &g {
                let p = h.skew_primitives(a, b).expect("linear system");
                let span: Vec<String> = p.iter().map(|e| e.to_string()).collect();
                println!("  dim P({a}, {b}) = {}  span {{{}}}", p.len(), span.join(", "));
            }
        }
    }
}
