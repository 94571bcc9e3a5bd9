//! The published action families, used as reference data and for
//! classifying solver branches.
//!
//! Every left action found is determined by two characters of `H8` and two
//! parameters: on `X`,
//!
//! ```text
//! x▷X = χ(x) X + c (χ(x) − ε(x)) (G − 1)
//! ```
//!
//! for a character `χ` (an algebra map `H8 -> k`) and a scalar `c`, and the
//! same shape on `GX` with a second character and scalar. `H8` has four
//! characters, `(g, h, z) ↦ (1, 1, 1), (1, 1, −1), (−1, −1, i), (−1, −1, −i)`,
//! which give the families `▷1..▷4` on `X` and `▷a..▷d` on `GX`. The
//! published parameter `α` (resp. `β`) is the `(G−1)`-coefficient of `z▷X`
//! in `▷2` and of `g▷X` in `▷3`, `▷4`, which is `c = −α/2` in all three.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::tables::{ConcreteAction, Factors, Side};
use crate::linalg::Vector;
use crate::poly::{Poly, Unknowns, Var};
use crate::scalar::Scalar;
use crate::solve::PolySystem;

/// Family of the action on `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum XFamily {
    #[serde(rename = "▷1")]
    One,
    #[serde(rename = "▷2")]
    Two,
    #[serde(rename = "▷3")]
    Three,
    #[serde(rename = "▷4")]
    Four,
}

/// Family of the action on `GX`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GxFamily {
    #[serde(rename = "▷a")]
    A,
    #[serde(rename = "▷b")]
    B,
    #[serde(rename = "▷c")]
    C,
    #[serde(rename = "▷d")]
    D,
}

impl XFamily {
    pub const ALL: [XFamily; 4] = [XFamily::One, XFamily::Two, XFamily::Three, XFamily::Four];

    fn index(self) -> usize {
        self as usize
    }
}

impl GxFamily {
    pub const ALL: [GxFamily; 4] = [GxFamily::A, GxFamily::B, GxFamily::C, GxFamily::D];

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for XFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "▷{}", self.index() + 1)
    }
}

impl fmt::Display for GxFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "▷{}", ['a', 'b', 'c', 'd'][self.index()])
    }
}

/// Values of the character number `k` on `(g, h, z)`.
pub fn character_on_generators(k: usize) -> [Scalar; 3] {
    let (one, i) = (Scalar::one(), Scalar::i());
    match k {
        0 => [one.clone(), one.clone(), one],
        1 => [one.clone(), one.clone(), -one],
        2 => [-one.clone(), -one, i],
        3 => [-one.clone(), -one, -i],
        _ => panic!("H8 has four characters"),
    }
}

/// The character number `k` on the whole basis `(1, g, h, gh, z, gz, hz, ghz)`.
pub fn character(f: &Factors, k: usize) -> Vector {
    let [g, h, z] = character_on_generators(k);
    let mut v = Vector::zeros(f.h8.dim());
    for label in f.h8.basis() {
        let mut c = Scalar::one();
        for ch in label.chars() {
            match ch {
                'g' => c *= &g,
                'h' => c *= &h,
                'z' => c *= &z,
                _ => {}
            }
        }
        v[f.x(label)] = c;
    }
    v
}

/// A member of one of the 16 published left-action families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeftFamily {
    pub x: XFamily,
    pub gx: GxFamily,
    /// Parameter of the `X` family (zero for `▷1`).
    pub alpha: Scalar,
    /// Parameter of the `GX` family (zero for `▷a`).
    pub beta: Scalar,
}

impl LeftFamily {
    pub fn new(x: XFamily, gx: GxFamily, alpha: Scalar, beta: Scalar) -> Self {
        LeftFamily { x, gx, alpha, beta }
    }

    /// Short name such as `▷3c`.
    pub fn name(&self) -> String {
        format!("{}{}", self.x, &self.gx.to_string()["▷".len()..])
    }

    /// The concrete table of this family member.
    pub fn table(&self, f: &Factors) -> ConcreteAction {
        let chi_x = character(f, self.x.index());
        let chi_gx = character(f, self.gx.index());
        let half = Scalar::frac(1, 2);
        let c_x = -(&self.alpha * &half);
        let c_gx = -(&self.beta * &half);
        let (one, g, x, gx) = (f.a("1"), f.a("G"), f.a("X"), f.a("GX"));
        let eps8 = f.h8.counit_vector().clone();
        ConcreteAction::from_fn(Side::Left, f, |h, a| {
            let mut v = Vector::zeros(4);
            if a == one {
                v[one] = eps8[h].clone();
            } else if a == g {
                v[g] = eps8[h].clone();
            } else {
                let (chi, c, target) = if a == x {
                    (&chi_x, &c_x, x)
                } else {
                    (&chi_gx, &c_gx, gx)
                };
                let shift = c * &(&chi[h] - &eps8[h]);
                v[target] = chi[h].clone();
                v[g] = shift.clone();
                v[one] = -shift;
            }
            v
        })
    }
}

impl fmt::Display for LeftFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (α = {}, β = {})", self.name(), self.alpha, self.beta)
    }
}

/// Classifies a concrete left action into one of the 16 families, if it is one.
pub fn classify_left(f: &Factors, action: &ConcreteAction) -> Option<LeftFamily> {
    let (g, h, z) = (f.x("g"), f.x("h"), f.x("z"));
    let (big_g, x, gx) = (f.a("G"), f.a("X"), f.a("GX"));
    let find_character = |target: usize| {
        let values = [g, h, z].map(|e| action.get(e, target)[target].clone());
        (0..4).find(|&k| character_on_generators(k) == values)
    };
    let kx = find_character(x)?;
    let kgx = find_character(gx)?;
    // Read the parameter from the generator whose character value differs from ε.
    let param = |k: usize, target: usize| -> Scalar {
        let probe = if k == 1 { z } else { g };
        match k {
            0 => Scalar::zero(),
            _ => action.get(probe, target)[big_g].clone(),
        }
    };
    let candidate = LeftFamily::new(XFamily::ALL[kx], GxFamily::ALL[kgx], param(kx, x), param(kgx, gx));
    (candidate.table(f) == *action).then_some(candidate)
}

/// The trivial right action `x◁a = ε(a)x`.
pub fn right_trivial(f: &Factors) -> ConcreteAction {
    let eps4 = f.h4.counit_vector().clone();
    ConcreteAction::from_fn(Side::Right, f, |x, a| Vector::unit(f.h8.dim(), x).scale(&eps4[a]))
}

/// The right action in which `G` swaps `z ↔ ghz` and `gz ↔ hz`, fixes the
/// group-likes, and `X` acts by zero (anti-diagonal `A`, `B = 0`).
pub fn right_antidiagonal(f: &Factors) -> ConcreteAction {
    fn swap(label: &str) -> &str {
        match label {
            "z" => "ghz",
            "ghz" => "z",
            "gz" => "hz",
            "hz" => "gz",
            other => other,
        }
    }
    let (one, g, x, gx) = (f.a("1"), f.a("G"), f.a("X"), f.a("GX"));
    ConcreteAction::from_fn(Side::Right, f, |e, a| {
        let dim = f.h8.dim();
        if a == one {
            Vector::unit(dim, e)
        } else if a == g {
            Vector::unit(dim, f.x(swap(f.h8.label(e))))
        } else {
            debug_assert!(a == x || a == gx);
            Vector::zeros(dim)
        }
    })
}

/// How a right action relates to the two published examples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RightKind {
    Trivial,
    AntiDiagonal,
    Other,
}

impl fmt::Display for RightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RightKind::Trivial => "trivial (A = E, B = 0)",
            RightKind::AntiDiagonal => "anti-diagonal A, B = 0",
            RightKind::Other => "other",
        })
    }
}

pub fn classify_right(f: &Factors, action: &ConcreteAction) -> RightKind {
    if *action == right_trivial(f) {
        RightKind::Trivial
    } else if *action == right_antidiagonal(f) {
        RightKind::AntiDiagonal
    } else {
        RightKind::Other
    }
}

/// A matrix of the shape that `◁G` (or `◁X`) takes on `(z, gz, hz, ghz)`
/// once compatibility with `gz = zh`, `hz = zg` is imposed:
///
/// ```text
/// a b c d
/// b a d c
/// c d a b
/// d c b a
/// ```
pub fn circulant(a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar) -> crate::linalg::Matrix {
    let rows = [[a, b, c, d], [b, a, d, c], [c, d, a, b], [d, c, b, a]];
    crate::linalg::Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| x.clone()).collect()).collect())
        .expect("4x4")
}

/// A labelled equation in four unknowns.
type Equation = (&'static str, fn(&[Poly; 4]) -> Poly);

fn quadratic_system(names: [&str; 4], equations: &[Equation]) -> (PolySystem, [Var; 4]) {
    let mut u = Unknowns::new();
    let vars = names.map(|n| u.var(n));
    let p = vars.map(Poly::var);
    let mut s = PolySystem::new(u);
    for (origin, eq) in equations {
        s.push(eq(&p), *origin);
    }
    (s, vars)
}

fn k(n: i64) -> Poly {
    Poly::constant(Scalar::from(n))
}

/// The published equation set for the entries `(a, b, c, d)` of a circulant
/// `A` with `A² = E`, compatible with `z²◁G = z²` and `z▷G² = 1`.
pub fn a_equation_system() -> (PolySystem, [Var; 4]) {
    quadratic_system(
        ["a", "b", "c", "d"],
        &[
            ("a+b+c+d = 1", |p| p[0].add(&p[1]).add(&p[2]).add(&p[3]).sub(&k(1))),
            ("a²+b²+c²+d² = 1", |p| {
                p[0].pow(2)
                    .add(&p[1].pow(2))
                    .add(&p[2].pow(2))
                    .add(&p[3].pow(2))
                    .sub(&k(1))
            }),
            ("ac+bd = 0", |p| p[0].mul(&p[2]).add(&p[1].mul(&p[3]))),
            ("ab+cd = 0", |p| p[0].mul(&p[1]).add(&p[2].mul(&p[3]))),
            ("ad+bc = 0", |p| p[0].mul(&p[3]).add(&p[1].mul(&p[2]))),
            ("a²+2bc+d² = 1", |p| {
                p[0].pow(2)
                    .add(&p[1].mul(&p[2]).mul(&k(2)))
                    .add(&p[3].pow(2))
                    .sub(&k(1))
            }),
            ("(a+d)(b+c) = 0", |p| p[0].add(&p[3]).mul(&p[1].add(&p[2]))),
            ("b²+2ad+c² = 0", |p| {
                p[1].pow(2).add(&p[0].mul(&p[3]).mul(&k(2))).add(&p[2].pow(2))
            }),
        ],
    )
}

/// The published equation set for the entries `(p, q, r, s)` of a circulant
/// `B` with `B² = 0`, compatible with `z²◁X = 0` (for the first `A`).
pub fn b_equation_system() -> (PolySystem, [Var; 4]) {
    quadratic_system(
        ["p", "q", "r", "s"],
        &[
            ("2p+q+r = 0", |p| p[0].mul(&k(2)).add(&p[1]).add(&p[2])),
            ("p = s", |p| p[0].sub(&p[3])),
            ("p²+q²+r²+s² = 0", |p| {
                p[0].pow(2).add(&p[1].pow(2)).add(&p[2].pow(2)).add(&p[3].pow(2))
            }),
            ("pq+rs = 0", |p| p[0].mul(&p[1]).add(&p[2].mul(&p[3]))),
            ("ps+qr = 0", |p| p[0].mul(&p[3]).add(&p[1].mul(&p[2]))),
        ],
    )
}
