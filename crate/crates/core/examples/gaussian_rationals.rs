//! Exact arithmetic in Q(i): the ground field of every computation.

use hopf_bicross::Scalar;

fn main() {
    let i = Scalar::i();
    let half = Scalar::frac(1, 2);
    println!("i² = {}", &i * &i);
    println!(
        "(1/2 + i/3)⁻¹ = {}",
        Scalar::gaussian(1, 2, 1, 3).inv().expect("nonzero")
    );
    println!(
        "√(−1) = {}",
        (-Scalar::from_int(1)).sqrt().expect("a Gaussian rational square")
    );
    println!(
        "√(2i) = {}",
        Scalar::gaussian(0, 1, 2, 1).sqrt().expect("(1 + i)² = 2i")
    );
    println!("√2 in Q(i)? {:?}", Scalar::from_int(2).sqrt());
    println!("(1/2)⁴ = {}", half.pow(4));

    let z: Scalar = "3/4-5/2i".parse().expect("scalar literal");
    println!("parsed {z}, conjugate {}, norm {}", z.conj(), z.norm());
    println!("JSON form {}", serde_json::to_string(&z).expect("serializable"));
}
