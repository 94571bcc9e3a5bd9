//! Action tables: bilinear maps `H8 ⊗ H4 -> H4` (left, `▷`) and
//! `H8 ⊗ H4 -> H8` (right, `◁`), stored on basis pairs.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::catalog::{build_h4, build_h8};
use crate::hopf::HopfAlgebraData;
use crate::linalg::{Matrix, Vector};
use crate::poly::{Poly, Unknowns, Var};
use crate::scalar::Scalar;
use crate::solve::Branch;

pub const ACTION_SCHEMA: &str = "action/v1";

/// The two factors: `A = H4` (acted on from the left) and `H = H8` (acted on from the right).
#[derive(Debug, Clone)]
pub struct Factors {
    pub h4: HopfAlgebraData,
    pub h8: HopfAlgebraData,
}

impl Factors {
    pub fn new() -> Self {
        Factors {
            h4: build_h4(),
            h8: build_h8(),
        }
    }

    /// Index of an `H8` basis label; panics on unknown labels.
    pub fn x(&self, label: &str) -> usize {
        self.h8
            .index_of(label)
            .unwrap_or_else(|| panic!("no H8 basis element {label:?}"))
    }

    /// Index of an `H4` basis label; panics on unknown labels.
    pub fn a(&self, label: &str) -> usize {
        self.h4
            .index_of(label)
            .unwrap_or_else(|| panic!("no H4 basis element {label:?}"))
    }
}

impl Default for Factors {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `▷ : H8 ⊗ H4 -> H4`
    Left,
    /// `◁ : H8 ⊗ H4 -> H8`
    Right,
}

impl Side {
    pub fn symbol(self) -> &'static str {
        match self {
            Side::Left => "▷",
            Side::Right => "◁",
        }
    }

    fn prefix(self) -> &'static str {
        match self {
            Side::Left => "L",
            Side::Right => "R",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// Coefficient vector of a polynomial-valued element.
pub type PolyVec = Vec<Poly>;

/// An action whose coefficients are polynomials in named unknowns; a
/// concrete action is the special case of constant polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionTable {
    pub side: Side,
    n_x: usize,
    n_a: usize,
    out_dim: usize,
    /// `entries[x * n_a + a]`: coefficients of `x▷a` (in H4) or `x◁a` (in H8).
    entries: Vec<PolyVec>,
}

impl ActionTable {
    fn from_fn(side: Side, f: &Factors, mut entry: impl FnMut(usize, usize) -> PolyVec) -> Self {
        let (n_x, n_a) = (f.h8.dim(), f.h4.dim());
        let out_dim = match side {
            Side::Left => n_a,
            Side::Right => n_x,
        };
        let entries = (0..n_x)
            .flat_map(|x| (0..n_a).map(move |a| (x, a)))
            .map(|(x, a)| {
                let e = entry(x, a);
                assert_eq!(e.len(), out_dim);
                e
            })
            .collect();
        ActionTable {
            side,
            n_x,
            n_a,
            out_dim,
            entries,
        }
    }

    /// The fully symbolic table. The normalization `x▷1 = ε(x)1` (left) or
    /// `1◁a = ε(a)1` (right) is built in; every other coefficient is an
    /// unknown named `L[x,a|k]` / `R[x,a|k]` (coefficient of basis `k` in the
    /// image of `x ⊗ a`).
    ///
    /// Unknowns of the generators `g, h, z` are registered first so that the
    /// solver, which eliminates the most recently registered unknowns first,
    /// expresses everything through them.
    pub fn symbolic(side: Side, f: &Factors, unknowns: &mut Unknowns) -> Self {
        let (h4, h8) = (&f.h4, &f.h8);
        let one8 = f.x("1");
        let one4 = f.a("1");
        let out = match side {
            Side::Left => h4,
            Side::Right => h8,
        };
        let fixed = |x: usize, a: usize| match side {
            Side::Left => a == one4,
            Side::Right => x == one8,
        };
        // Registration order: generator rows first.
        let x_order: Vec<usize> = ["g", "h", "z", "1", "gh", "gz", "hz", "ghz"]
            .iter()
            .map(|l| f.x(l))
            .collect();
        let a_order: Vec<usize> = ["G", "X", "1", "GX"].iter().map(|l| f.a(l)).collect();
        let mut vars: BTreeMap<(usize, usize, usize), Var> = BTreeMap::new();
        for &x in &x_order {
            for &a in &a_order {
                if fixed(x, a) {
                    continue;
                }
                for k in 0..out.dim() {
                    let name = format!("{}[{},{}|{}]", side.prefix(), h8.label(x), h4.label(a), out.label(k));
                    vars.insert((x, a, k), unknowns.var(&name));
                }
            }
        }
        Self::from_fn(side, f, |x, a| {
            if fixed(x, a) {
                let c = match side {
                    Side::Left => h8.counit_vector()[x].clone(),
                    Side::Right => h4.counit_vector()[a].clone(),
                };
                return out
                    .unit_vector()
                    .scale(&c)
                    .iter()
                    .cloned()
                    .map(Poly::constant)
                    .collect();
            }
            (0..out.dim()).map(|k| Poly::var(vars[&(x, a, k)])).collect()
        })
    }

    /// A table with constant coefficients.
    pub fn from_concrete(c: &ConcreteAction, f: &Factors) -> Self {
        Self::from_fn(c.side, f, |x, a| {
            c.get(x, a).iter().cloned().map(Poly::constant).collect()
        })
    }

    pub fn get(&self, x: usize, a: usize) -> &[Poly] {
        &self.entries[x * self.n_a + a]
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    /// Replaces `x▷a` (or `x◁a`) by the given coefficients.
    pub fn set(&mut self, x: usize, a: usize, value: PolyVec) {
        assert_eq!(value.len(), self.out_dim);
        self.entries[x * self.n_a + a] = value;
    }

    /// Bilinear extension to polynomial-valued arguments.
    pub fn act(&self, x: &[Poly], a: &[Poly]) -> PolyVec {
        let mut out = vec![Poly::zero(); self.out_dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
            for (j, aj) in a.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
                let c = xi.mul(aj);
                for (k, e) in self.get(i, j).iter().enumerate() {
                    if !e.is_zero() {
                        out[k].add_assign(&c.mul(e));
                    }
                }
            }
        }
        out
    }

    /// `x ⊗ v` acted on with `x` a basis element of H8 (left side).
    pub fn act_basis_left(&self, x: usize, a: &[Poly]) -> PolyVec {
        let mut out = vec![Poly::zero(); self.out_dim];
        for (j, aj) in a.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
            for (k, e) in self.get(x, j).iter().enumerate() {
                if !e.is_zero() {
                    out[k].add_assign(&aj.mul(e));
                }
            }
        }
        out
    }

    /// `v ⊗ a` acted on with `a` a basis element of H4.
    pub fn act_basis_right(&self, x: &[Poly], a: usize) -> PolyVec {
        let mut out = vec![Poly::zero(); self.out_dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
            for (k, e) in self.get(i, a).iter().enumerate() {
                if !e.is_zero() {
                    out[k].add_assign(&xi.mul(e));
                }
            }
        }
        out
    }

    /// Applies a branch's substitution to every coefficient.
    pub fn substitute(&self, branch: &Branch) -> ActionTable {
        let mut out = self.clone();
        for e in out.entries.iter_mut().flatten() {
            *e = e.substitute_all(&branch.substitution);
        }
        out
    }

    /// Evaluates every coefficient at a concrete point.
    pub fn eval(&self, at: &BTreeMap<Var, Scalar>) -> Option<ConcreteAction> {
        let entries = self
            .entries
            .iter()
            .map(|e| {
                e.iter()
                    .map(|p| p.eval(at))
                    .collect::<Option<Vec<_>>>()
                    .map(Vector::from_vec)
            })
            .collect::<Option<Vec<_>>>()?;
        Some(ConcreteAction {
            side: self.side,
            n_a: self.n_a,
            entries,
        })
    }

    /// The concrete action, if no coefficient mentions an unknown.
    pub fn to_concrete(&self) -> Option<ConcreteAction> {
        self.eval(&BTreeMap::new())
    }

    /// The values the table's unknowns must take for the table to equal
    /// `concrete`, or `None` if a fixed coefficient disagrees. Only tables
    /// whose coefficients are constants or bare unknowns (as produced by
    /// [`ActionTable::symbolic`]) are supported.
    pub fn assignment(&self, concrete: &ConcreteAction) -> Option<BTreeMap<Var, Scalar>> {
        let mut at = BTreeMap::new();
        for (entry, target) in self.entries.iter().zip(&concrete.entries) {
            for (p, c) in entry.iter().zip(target.iter()) {
                if let Some(k) = p.as_constant() {
                    if &k != c {
                        return None;
                    }
                    continue;
                }
                let vars = p.vars();
                assert!(
                    vars.len() == 1 && p.num_terms() == 1 && p.degree() == 1,
                    "assignment needs a symbolic table"
                );
                let v = *vars.iter().next().expect("one unknown");
                if at.insert(v, c.clone()).is_some_and(|old| &old != c) {
                    return None;
                }
            }
        }
        Some(at)
    }

    /// Unknowns occurring in the rows of the given acting elements.
    pub fn row_vars(&self, xs: &[usize]) -> std::collections::BTreeSet<Var> {
        xs.iter()
            .flat_map(|&x| (0..self.n_a).flat_map(move |a| self.get(x, a).iter()))
            .flat_map(|p| p.vars())
            .collect()
    }

    /// Unknowns occurring in the table.
    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.entries.iter().flatten().flat_map(|p| p.vars()).collect();
        vs.sort();
        vs.dedup();
        vs
    }
}

/// An action with scalar coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcreteAction {
    pub side: Side,
    n_a: usize,
    entries: Vec<Vector>,
}

impl ConcreteAction {
    /// Builds an action from a function on basis pairs.
    pub fn from_fn(side: Side, f: &Factors, mut entry: impl FnMut(usize, usize) -> Vector) -> Self {
        let (n_x, n_a) = (f.h8.dim(), f.h4.dim());
        let entries = (0..n_x)
            .flat_map(|x| (0..n_a).map(move |a| (x, a)))
            .map(|(x, a)| entry(x, a))
            .collect();
        ConcreteAction { side, n_a, entries }
    }

    pub fn get(&self, x: usize, a: usize) -> &Vector {
        &self.entries[x * self.n_a + a]
    }

    pub fn set(&mut self, x: usize, a: usize, v: Vector) {
        self.entries[x * self.n_a + a] = v;
    }

    /// Bilinear extension: `x ▷ a` or `x ◁ a` for arbitrary coordinate vectors.
    pub fn apply(&self, x: &Vector, a: &Vector) -> Vector {
        let out_dim = self.entries[0].len();
        let mut out = Vector::zeros(out_dim);
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, aj) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                out.axpy(&(xi * aj), self.get(i, j));
            }
        }
        out
    }

    /// The 4×4 matrix of `◁G` on `(z, gz, hz, ghz)`: column `j` holds the
    /// coordinates of `(j-th element)◁G` in that basis.
    pub fn matrix_a(&self, f: &Factors) -> Matrix {
        self.z_block(f, f.a("G"))
    }

    /// The 4×4 matrix of `◁X` on `(z, gz, hz, ghz)`.
    pub fn matrix_b(&self, f: &Factors) -> Matrix {
        self.z_block(f, f.a("X"))
    }

    fn z_block(&self, f: &Factors, a: usize) -> Matrix {
        assert_eq!(self.side, Side::Right, "A and B are views of a right action");
        let zs: Vec<usize> = ["z", "gz", "hz", "ghz"].iter().map(|l| f.x(l)).collect();
        let mut m = Matrix::zeros(4, 4);
        for (col, &x) in zs.iter().enumerate() {
            for (row, &k) in zs.iter().enumerate() {
                m[(row, col)] = self.get(x, a)[k].clone();
            }
        }
        m
    }

    /// The image of a labelled pair, rendered in the target basis.
    pub fn render_entry(&self, f: &Factors, x: usize, a: usize) -> String {
        let target = match self.side {
            Side::Left => &f.h4,
            Side::Right => &f.h8,
        };
        crate::hopf::render_terms(
            self.get(x, a)
                .iter()
                .enumerate()
                .map(|(k, c)| (c, target.label(k).to_string())),
        )
    }

    /// Every assignment of the table as one text line per basis pair.
    pub fn render(&self, f: &Factors) -> String {
        let mut out = String::new();
        for x in 0..f.h8.dim() {
            for a in 0..f.h4.dim() {
                out.push_str(&format!(
                    "{}{}{} = {}\n",
                    f.h8.label(x),
                    self.side.symbol(),
                    f.h4.label(a),
                    self.render_entry(f, x, a)
                ));
            }
        }
        out
    }

    pub fn to_json(&self, f: &Factors) -> ActionJson {
        let mut entries = Vec::new();
        for x in 0..f.h8.dim() {
            for a in 0..f.h4.dim() {
                entries.push((x, a, self.get(x, a).as_slice().to_vec()));
            }
        }
        ActionJson {
            schema: ACTION_SCHEMA.into(),
            side: self.side,
            acting: f.h8.basis().to_vec(),
            acted: f.h4.basis().to_vec(),
            entries,
        }
    }

    pub fn from_json(data: &ActionJson, f: &Factors) -> Result<Self, String> {
        if data.schema != ACTION_SCHEMA {
            return Err(format!("unsupported schema {:?}", data.schema));
        }
        let out_dim = match data.side {
            Side::Left => f.h4.dim(),
            Side::Right => f.h8.dim(),
        };
        let mut table: BTreeMap<(usize, usize), Vector> = BTreeMap::new();
        for (x, a, coeffs) in &data.entries {
            if *x >= f.h8.dim() || *a >= f.h4.dim() || coeffs.len() != out_dim {
                return Err(format!("malformed entry for ({x}, {a})"));
            }
            table.insert((*x, *a), Vector::from_vec(coeffs.clone()));
        }
        Ok(Self::from_fn(data.side, f, |x, a| {
            table.get(&(x, a)).cloned().unwrap_or_else(|| Vector::zeros(out_dim))
        }))
    }
}

/// The `action/v1` document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionJson {
    pub schema: String,
    pub side: Side,
    pub acting: Vec<String>,
    pub acted: Vec<String>,
    pub entries: Vec<(usize, usize, Vec<Scalar>)>,
}

/// `Σ_k v_k e_k` for a scalar vector.
pub fn constant_vec(v: &Vector) -> PolyVec {
    v.iter().cloned().map(Poly::constant).collect()
}

/// The basis vector `e_i` as a polynomial vector.
pub fn basis_vec(dim: usize, i: usize) -> PolyVec {
    (0..dim)
        .map(|k| if k == i { Poly::one() } else { Poly::zero() })
        .collect()
}

/// Product of polynomial-valued elements of `h`.
pub fn mul_poly(h: &HopfAlgebraData, u: &[Poly], v: &[Poly]) -> PolyVec {
    let mut out = vec![Poly::zero(); h.dim()];
    for (i, ui) in u.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
        for (j, vj) in v.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
            let c = ui.mul(vj);
            for (k, d) in h.product_terms(i, j) {
                out[*k].add_scaled(d, &c);
            }
        }
    }
    out
}

/// Product of a scalar basis product `e_i e_j` as a polynomial vector.
pub fn product_vec(h: &HopfAlgebraData, i: usize, j: usize) -> PolyVec {
    let mut out = vec![Poly::zero(); h.dim()];
    for (k, c) in h.product_terms(i, j) {
        out[*k] = Poly::constant(c.clone());
    }
    out
}
