//! Exact computer algebra for the matched pairs between Sweedler's Hopf
//! algebra `H4` and the Kac-Paljutkin algebra `H8`, and for the bicrossed
//! products they generate.
//!
//! Everything is computed over the Gaussian rationals with no rounding:
//! structure constants, axiom checks, the polynomial systems describing
//! module coalgebra structures and matched pairs, and their solution sets.

pub mod bicrossed;
pub mod catalog;
pub mod cli;
pub mod hopf;
pub mod linalg;
pub mod pairing;
pub mod poly;
pub mod scalar;
pub mod solve;

pub use catalog::{build_h4, build_h8, Presentation};
pub use hopf::{tensor_product, AxiomReport, Element, HopfAlgebraData};
pub use linalg::{Matrix, Solve, Vector};
pub use poly::{Poly, Unknowns, Var};
pub use scalar::Scalar;
pub use solve::{solve, PolySystem, SolutionSet, SolveOptions};
