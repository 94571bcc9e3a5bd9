//! Rank, kernels, inverses and Kronecker products without rounding.

use hopf_bicross::{Matrix, Scalar, Solve, Vector};

fn main() {
    let s = Scalar::frac;
    let half = || s(1, 2);
    // The circulant matrix of the solution (1/2, 1/2, 1/2, −1/2) of the A-equations.
    let a = hopf_bicross::pairing::circulant(&half(), &half(), &half(), &-half());
    println!("A =\n{a}");
    println!("rank A = {}", a.rank());
    let a2 = a.mul(&a).expect("square");
    println!("A² = identity? {}", a2 == Matrix::identity(4));
    println!("A⁻¹ = A? {}", a.inverse().expect("invertible") == a);

    let singular = Matrix::from_rows(vec![
        vec![s(1, 1), s(2, 1), s(3, 1)],
        vec![s(2, 1), s(4, 1), s(6, 1)],
        vec![s(0, 1), Scalar::i(), s(1, 1)],
    ])
    .expect("rectangular rows");
    println!("rank = {}, kernel = {:?}", singular.rank(), singular.kernel());
    let b = Vector::from_vec(vec![s(1, 1), s(2, 1), s(0, 1)]);
    match singular.solve(&b).expect("shapes agree") {
        Solve::Solution(x) => println!("particular solution {x:?}"),
        Solve::Inconsistent => println!("inconsistent"),
    }

    let k = Matrix::identity(2).kron(&Matrix::diag(&[s(1, 1), -s(1, 1)]));
    println!("I₂ ⊗ diag(1, −1) =\n{k}");
}
