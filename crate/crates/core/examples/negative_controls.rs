//! Candidates that are not matched pairs, and the witness each one fails on.

use hopf_bicross::pairing::{right_antidiagonal, right_trivial, Factors, GxFamily, LeftFamily, MatchedPair, XFamily};
use hopf_bicross::Scalar;

fn main() {
    let f = Factors::new();
    let zero = Scalar::from_int(0);
    let candidates = [
        (
            "▷1a with the anti-diagonal ◁",
            LeftFamily::new(XFamily::One, GxFamily::A, zero.clone(), zero.clone()),
            right_antidiagonal(&f),
        ),
        (
            "▷2b with α = 1 and the trivial ◁",
            LeftFamily::new(XFamily::Two, GxFamily::B, Scalar::from_int(1), zero.clone()),
            right_trivial(&f),
        ),
    ];
    for (title, left, right) in candidates {
        let pair = MatchedPair::new(&f, left.table(&f), right);
        println!("{title}: {} violation(s)", pair.violations.len());
        for v in pair.violations.iter().take(2) {
            println!("  {v}   [{}]", v.condition.formula());
        }
        // Witnesses on (x, X, X) come from X² = 0: x▷(XX) = 0 forces α = 0.
        for v in pair
            .violations
            .iter()
            .filter(|v| v.inputs.ends_with(&["X".to_string(), "X".to_string()]))
        {
            println!("  {v}   (from X² = 0)");
        }
    }
}
