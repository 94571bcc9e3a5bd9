//! The case-splitting polynomial solver on the published A- and
//! B-equation sets, with the provenance of every branch.

use hopf_bicross::pairing::{a_equation_system, b_equation_system};
use hopf_bicross::{solve, SolveOptions};

fn main() {
    for (title, (system, vars)) in [
        ("(a, b, c, d)", a_equation_system()),
        ("(p, q, r, s)", b_equation_system()),
    ] {
        let set = solve(&system, SolveOptions::default()).expect("the system reduces");
        println!(
            "{title}: {} constraints, {} solutions, {} nodes",
            system.len(),
            set.len(),
            set.nodes
        );
        for branch in &set.branches {
            let values: Vec<String> = vars.iter().map(|&v| branch.value(v).render(&system.unknowns)).collect();
            let path: Vec<String> = branch.path.iter().map(|s| format!("{} [{}]", s.case, s.rule)).collect();
            println!(
                "  ({})  via {}",
                values.join(", "),
                if path.is_empty() {
                    "-".into()
                } else {
                    path.join(" → ")
                }
            );
        }
    }
}
