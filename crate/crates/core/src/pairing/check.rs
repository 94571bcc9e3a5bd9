//! Direct evaluation of the axioms on concrete actions.
//!
//! This is a second, independent implementation of the conditions compiled
//! in [`super::systems`]: it works with scalar vectors and sparse tensors
//! instead of polynomial constraints, so a bug in constraint generation
//! cannot hide a wrong answer from the solver.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::tables::{ConcreteAction, Factors, Side};
use crate::hopf::{accumulate, HopfAlgebraData, Tensor2};
use crate::linalg::Vector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    /// `x▷1 = ε(x)1` and `1◁a = ε(a)1`.
    Normalization,
    /// `1▷a = a`, `(xy)▷a = x▷(y▷a)`.
    LeftModule,
    /// `Δ(x▷a) = Σ x1▷a1 ⊗ x2▷a2`, `ε(x▷a) = ε(x)ε(a)`.
    LeftCoalgebra,
    /// `x◁1 = x`, `x◁(ab) = (x◁a)◁b`.
    RightModule,
    /// `Δ(x◁a) = Σ x1◁a1 ⊗ x2◁a2`, `ε(x◁a) = ε(x)ε(a)`.
    RightCoalgebra,
    /// `x▷(ab) = Σ (x1▷a1)((x2◁a2)▷b)`.
    LeftCompatibility,
    /// `(xy)◁a = Σ (x◁(y1▷a1))(y2◁a2)`.
    RightCompatibility,
    /// `Σ x1◁a1 ⊗ x2▷a2 = Σ x2◁a2 ⊗ x1▷a1`.
    Exchange,
}

impl Condition {
    pub fn formula(self) -> &'static str {
        match self {
            Condition::Normalization => "x▷1 = ε(x)1, 1◁a = ε(a)1",
            Condition::LeftModule => "1▷a = a, (xy)▷a = x▷(y▷a)",
            Condition::LeftCoalgebra => "Δ(x▷a) = Σ x1▷a1 ⊗ x2▷a2, ε(x▷a) = ε(x)ε(a)",
            Condition::RightModule => "x◁1 = x, x◁(ab) = (x◁a)◁b",
            Condition::RightCoalgebra => "Δ(x◁a) = Σ x1◁a1 ⊗ x2◁a2, ε(x◁a) = ε(x)ε(a)",
            Condition::LeftCompatibility => "x▷(ab) = Σ (x1▷a1)((x2◁a2)▷b)",
            Condition::RightCompatibility => "(xy)◁a = Σ (x◁(y1▷a1))(y2◁a2)",
            Condition::Exchange => "Σ x1◁a1 ⊗ x2▷a2 = Σ x2◁a2 ⊗ x1▷a1",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Condition::Normalization => "normalization",
            Condition::LeftModule => "left-module",
            Condition::LeftCoalgebra => "left-coalgebra",
            Condition::RightModule => "right-module",
            Condition::RightCoalgebra => "right-coalgebra",
            Condition::LeftCompatibility => "left-compatibility",
            Condition::RightCompatibility => "right-compatibility",
            Condition::Exchange => "exchange",
        };
        f.write_str(name)
    }
}

/// A basis tuple on which a condition fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub condition: Condition,
    pub inputs: Vec<String>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails on ({})", self.condition, self.inputs.join(", "))
    }
}

fn outer(u: &Vector, v: &Vector) -> Tensor2 {
    let mut t = Tensor2::new();
    for (i, a) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (j, b) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            accumulate(&mut t, (i, j), a * b);
        }
    }
    t
}

fn add_into(t: &mut Tensor2, c: &crate::scalar::Scalar, other: &Tensor2) {
    for (k, v) in other {
        accumulate(t, *k, c * v);
    }
}

fn e(h: &HopfAlgebraData, i: usize) -> Vector {
    Vector::unit(h.dim(), i)
}

fn labels(parts: &[&str]) -> Vec<String> {
    parts.iter().map(|s| s.to_string()).collect()
}

/// Violations of the left module-coalgebra axioms for `▷`.
pub fn check_left_module_coalgebra(f: &Factors, left: &ConcreteAction) -> Vec<Violation> {
    assert_eq!(left.side, Side::Left);
    let (h4, h8) = (&f.h4, &f.h8);
    let mut out = Vec::new();
    for a in 0..h4.dim() {
        if left.apply(h8.unit_vector(), &e(h4, a)) != e(h4, a) {
            out.push(Violation {
                condition: Condition::LeftModule,
                inputs: labels(&["1", h4.label(a)]),
            });
        }
    }
    for x in 0..h8.dim() {
        if left.apply(&e(h8, x), h4.unit_vector()) != h4.unit_vector().scale(&h8.counit_vector()[x]) {
            out.push(Violation {
                condition: Condition::Normalization,
                inputs: labels(&[h8.label(x), "1"]),
            });
        }
        for y in 0..h8.dim() {
            let xy = h8.mul_vec(&e(h8, x), &e(h8, y));
            for a in 0..h4.dim() {
                let lhs = left.apply(&xy, &e(h4, a));
                let rhs = left.apply(&e(h8, x), &left.apply(&e(h8, y), &e(h4, a)));
                if lhs != rhs {
                    out.push(Violation {
                        condition: Condition::LeftModule,
                        inputs: labels(&[h8.label(x), h8.label(y), h4.label(a)]),
                    });
                }
            }
        }
        for a in 0..h4.dim() {
            let image = left.apply(&e(h8, x), &e(h4, a));
            let lhs = h4.comul_vec(&image);
            let mut rhs = Tensor2::new();
            for ((x1, x2), c) in h8.comul_vec(&e(h8, x)) {
                for ((a1, a2), d) in h4.comul_vec(&e(h4, a)) {
                    let t = outer(&left.apply(&e(h8, x1), &e(h4, a1)), &left.apply(&e(h8, x2), &e(h4, a2)));
                    add_into(&mut rhs, &(&c * &d), &t);
                }
            }
            let counit_ok = h4.counit_of(&image) == &h8.counit_vector()[x] * &h4.counit_vector()[a];
            if lhs != rhs || !counit_ok {
                out.push(Violation {
                    condition: Condition::LeftCoalgebra,
                    inputs: labels(&[h8.label(x), h4.label(a)]),
                });
            }
        }
    }
    out
}

/// Violations of the right module-coalgebra axioms for `◁`.
pub fn check_right_module_coalgebra(f: &Factors, right: &ConcreteAction) -> Vec<Violation> {
    assert_eq!(right.side, Side::Right);
    let (h4, h8) = (&f.h4, &f.h8);
    let mut out = Vec::new();
    for x in 0..h8.dim() {
        if right.apply(&e(h8, x), h4.unit_vector()) != e(h8, x) {
            out.push(Violation {
                condition: Condition::RightModule,
                inputs: labels(&[h8.label(x), "1"]),
            });
        }
    }
    for a in 0..h4.dim() {
        if right.apply(h8.unit_vector(), &e(h4, a)) != h8.unit_vector().scale(&h4.counit_vector()[a]) {
            out.push(Violation {
                condition: Condition::Normalization,
                inputs: labels(&["1", h4.label(a)]),
            });
        }
    }
    for x in 0..h8.dim() {
        for a in 0..h4.dim() {
            for b in 0..h4.dim() {
                let ab = h4.mul_vec(&e(h4, a), &e(h4, b));
                let lhs = right.apply(&e(h8, x), &ab);
                let rhs = right.apply(&right.apply(&e(h8, x), &e(h4, a)), &e(h4, b));
                if lhs != rhs {
                    out.push(Violation {
                        condition: Condition::RightModule,
                        inputs: labels(&[h8.label(x), h4.label(a), h4.label(b)]),
                    });
                }
            }
            let image = right.apply(&e(h8, x), &e(h4, a));
            let lhs = h8.comul_vec(&image);
            let mut rhs = Tensor2::new();
            for ((x1, x2), c) in h8.comul_vec(&e(h8, x)) {
                for ((a1, a2), d) in h4.comul_vec(&e(h4, a)) {
                    let t = outer(
                        &right.apply(&e(h8, x1), &e(h4, a1)),
                        &right.apply(&e(h8, x2), &e(h4, a2)),
                    );
                    add_into(&mut rhs, &(&c * &d), &t);
                }
            }
            let counit_ok = h8.counit_of(&image) == &h8.counit_vector()[x] * &h4.counit_vector()[a];
            if lhs != rhs || !counit_ok {
                out.push(Violation {
                    condition: Condition::RightCoalgebra,
                    inputs: labels(&[h8.label(x), h4.label(a)]),
                });
            }
        }
    }
    out
}

/// Violations of the compatibility conditions between `▷` and `◁`
/// (normalization, left and right compatibility, exchange).
pub fn check_compatibility(f: &Factors, left: &ConcreteAction, right: &ConcreteAction) -> Vec<Violation> {
    let (h4, h8) = (&f.h4, &f.h8);
    let mut out = Vec::new();
    for x in 0..h8.dim() {
        if left.apply(&e(h8, x), h4.unit_vector()) != h4.unit_vector().scale(&h8.counit_vector()[x]) {
            out.push(Violation {
                condition: Condition::Normalization,
                inputs: labels(&[h8.label(x), "1"]),
            });
        }
    }
    for a in 0..h4.dim() {
        if right.apply(h8.unit_vector(), &e(h4, a)) != h8.unit_vector().scale(&h4.counit_vector()[a]) {
            out.push(Violation {
                condition: Condition::Normalization,
                inputs: labels(&["1", h4.label(a)]),
            });
        }
    }
    for x in 0..h8.dim() {
        let dx = h8.comul_vec(&e(h8, x));
        for a in 0..h4.dim() {
            let da = h4.comul_vec(&e(h4, a));
            // Exchange, as elements of H8 ⊗ H4.
            let mut lhs = Tensor2::new();
            let mut rhs = Tensor2::new();
            for ((x1, x2), c) in &dx {
                for ((a1, a2), d) in &da {
                    let cd = c * d;
                    let moved = right.apply(&e(h8, *x1), &e(h4, *a1));
                    let acted = left.apply(&e(h8, *x2), &e(h4, *a2));
                    add_into(&mut lhs, &cd, &outer(&moved, &acted));
                    let moved = right.apply(&e(h8, *x2), &e(h4, *a2));
                    let acted = left.apply(&e(h8, *x1), &e(h4, *a1));
                    add_into(&mut rhs, &cd, &outer(&moved, &acted));
                }
            }
            if lhs != rhs {
                out.push(Violation {
                    condition: Condition::Exchange,
                    inputs: labels(&[h8.label(x), h4.label(a)]),
                });
            }
            // Left compatibility.
            for b in 0..h4.dim() {
                let lhs = left.apply(&e(h8, x), &h4.mul_vec(&e(h4, a), &e(h4, b)));
                let mut rhs = Vector::zeros(h4.dim());
                for ((x1, x2), c) in &dx {
                    for ((a1, a2), d) in &da {
                        let first = left.apply(&e(h8, *x1), &e(h4, *a1));
                        let moved = right.apply(&e(h8, *x2), &e(h4, *a2));
                        let second = left.apply(&moved, &e(h4, b));
                        rhs.axpy(&(c * d), &h4.mul_vec(&first, &second));
                    }
                }
                if lhs != rhs {
                    out.push(Violation {
                        condition: Condition::LeftCompatibility,
                        inputs: labels(&[h8.label(x), h4.label(a), h4.label(b)]),
                    });
                }
            }
        }
    }
    for x in 0..h8.dim() {
        for y in 0..h8.dim() {
            let dy = h8.comul_vec(&e(h8, y));
            let xy = h8.mul_vec(&e(h8, x), &e(h8, y));
            for a in 0..h4.dim() {
                let lhs = right.apply(&xy, &e(h4, a));
                let mut rhs = Vector::zeros(h8.dim());
                for ((y1, y2), c) in &dy {
                    for ((a1, a2), d) in h4.comul_vec(&e(h4, a)) {
                        let acted = left.apply(&e(h8, *y1), &e(h4, a1));
                        let first = right.apply(&e(h8, x), &acted);
                        let second = right.apply(&e(h8, *y2), &e(h4, a2));
                        rhs.axpy(&(c * &d), &h8.mul_vec(&first, &second));
                    }
                }
                if lhs != rhs {
                    out.push(Violation {
                        condition: Condition::RightCompatibility,
                        inputs: labels(&[h8.label(x), h8.label(y), h4.label(a)]),
                    });
                }
            }
        }
    }
    out
}

/// Every violation of the matched-pair conditions, including the
/// module-coalgebra axioms of both actions.
pub fn check_matched_pair(f: &Factors, left: &ConcreteAction, right: &ConcreteAction) -> Vec<Violation> {
    let mut out = check_left_module_coalgebra(f, left);
    out.extend(check_right_module_coalgebra(f, right));
    out.extend(check_compatibility(f, left, right));
    out
}
