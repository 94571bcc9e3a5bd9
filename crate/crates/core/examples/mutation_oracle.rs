//! Perturbing a single structure constant of H8 breaks at least one axiom.

use hopf_bicross::{build_h8, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let h8 = build_h8();
    let n = h8.dim();
    for _ in 0..10 {
        let mut m = h8.clone();
        let (i, j, k) = (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
        let delta = Scalar::frac(rng.random_range(1..4), rng.random_range(1..3));
        let comul = rng.random_bool(0.5);
        if comul {
            let c = m.comul_coeff(i, j, k) + delta;
            m.set_comul_coeff(i, j, k, c);
        } else {
            let c = m.mul_coeff(i, j, k) + delta;
            m.set_mul_coeff(i, j, k, c);
        }
        let failed: Vec<String> = m.verify_axioms().failed().iter().map(|a| a.to_string()).collect();
        println!(
            "{}({}, {}; {}) perturbed -> fails {}",
            if comul { "Δ" } else { "m" },
            h8.label(i),
            h8.label(j),
            h8.label(k),
            failed.join(", ")
        );
    }
}
