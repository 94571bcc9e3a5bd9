//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! Multiplication and comultiplication are stored sparsely (only nonzero
//! coefficients); elements are dense coordinate vectors over the labelled
//! basis. Every axiom check is exact and reports the basis tuples on which it
//! fails.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{Matrix, Vector};
use crate::poly::{Poly, Unknowns};
use crate::scalar::Scalar;
use crate::solve::{solve, PolySystem, SolveError, SolveOptions};

pub const SCHEMA: &str = "hopf-algebra/v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("elements belong to different algebras ({0} vs {1})")]
    AlgebraMismatch(String, String),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),
    #[error("malformed structure data: {0}")]
    Malformed(String),
    #[error("group-like search: {0}")]
    Solve(#[from] SolveError),
}

/// Sparse element of `H ⊗ H`: `(i, j) -> coefficient of e_i ⊗ e_j`.
pub type Tensor2 = BTreeMap<(usize, usize), Scalar>;
/// Sparse element of `H ⊗ H ⊗ H`.
pub type Tensor3 = BTreeMap<(usize, usize, usize), Scalar>;

/// Adds `c` at `key`, dropping the entry when it cancels.
pub fn accumulate<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// A Hopf algebra over `Q(i)` in structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfAlgebraData {
    pub name: String,
    basis: Vec<String>,
    /// Index `i * dim + j`: nonzero `(k, c)` with `e_i e_j = Σ c e_k`.
    mul: Vec<Vec<(usize, Scalar)>>,
    unit: Vector,
    /// `Δ(e_i) = Σ c e_j ⊗ e_k` as `(j, k, c)`.
    comul: Vec<Vec<(usize, usize, Scalar)>>,
    counit: Vector,
    /// Column `j` holds `S(e_j)`.
    antipode: Matrix,
}

impl HopfAlgebraData {
    /// Assembles an algebra from coordinate lists; repeated entries are summed.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        mul: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        unit: Vector,
        comul: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        counit: Vector,
        antipode: Matrix,
    ) -> Result<Self, HopfError> {
        let dim = basis.len();
        if dim == 0 {
            return Err(HopfError::Malformed("empty basis".into()));
        }
        let mut seen = BTreeSet::new();
        for label in &basis {
            if !seen.insert(label.as_str()) {
                return Err(HopfError::DuplicateLabel(label.clone()));
            }
        }
        let check = |index: usize| {
            if index < dim {
                Ok(())
            } else {
                Err(HopfError::IndexOutOfRange { index, dim })
            }
        };
        let mut mul_acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); dim * dim];
        for (i, j, k, c) in mul {
            check(i)?;
            check(j)?;
            check(k)?;
            accumulate(&mut mul_acc[i * dim + j], k, c);
        }
        let mut comul_acc: Vec<Tensor2> = vec![BTreeMap::new(); dim];
        for (i, j, k, c) in comul {
            check(i)?;
            check(j)?;
            check(k)?;
            accumulate(&mut comul_acc[i], (j, k), c);
        }
        if unit.len() != dim || counit.len() != dim {
            return Err(HopfError::Malformed("unit/counit length differs from dimension".into()));
        }
        if antipode.rows() != dim || antipode.cols() != dim {
            return Err(HopfError::Malformed("antipode is not dim x dim".into()));
        }
        Ok(HopfAlgebraData {
            name: name.into(),
            basis,
            mul: mul_acc.into_iter().map(|m| m.into_iter().collect()).collect(),
            unit,
            comul: comul_acc
                .into_iter()
                .map(|t| t.into_iter().map(|((j, k), c)| (j, k, c)).collect())
                .collect(),
            counit,
            antipode,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == label)
    }

    pub fn unit_vector(&self) -> &Vector {
        &self.unit
    }

    pub fn counit_vector(&self) -> &Vector {
        &self.counit
    }

    pub fn antipode_matrix(&self) -> &Matrix {
        &self.antipode
    }

    /// Nonzero `(k, c)` with `e_i e_j = Σ c e_k`.
    pub fn product_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mul[i * self.dim() + j]
    }

    /// Nonzero `(j, k, c)` with `Δ(e_i) = Σ c e_j ⊗ e_k`.
    pub fn coproduct_terms(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comul[i]
    }

    /// Coefficient of `e_k` in `e_i e_j`.
    pub fn mul_coeff(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.product_terms(i, j)
            .iter()
            .find(|(l, _)| *l == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    /// Overwrites the coefficient of `e_k` in `e_i e_j` (used for mutation testing).
    pub fn set_mul_coeff(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        let dim = self.dim();
        let entry = &mut self.mul[i * dim + j];
        entry.retain(|(l, _)| *l != k);
        if !c.is_zero() {
            entry.push((k, c));
            entry.sort_by_key(|(l, _)| *l);
        }
    }

    /// Coefficient of `e_j ⊗ e_k` in `Δ(e_i)`.
    pub fn comul_coeff(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.comul[i]
            .iter()
            .find(|(a, b, _)| (*a, *b) == (j, k))
            .map(|(_, _, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    pub fn set_comul_coeff(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        let entry = &mut self.comul[i];
        entry.retain(|(a, b, _)| (*a, *b) != (j, k));
        if !c.is_zero() {
            entry.push((j, k, c));
            entry.sort_by_key(|(a, b, _)| (*a, *b));
        }
    }

    // ---- elements -------------------------------------------------------

    pub fn element(&self, coords: Vector) -> Result<Element<'_>, HopfError> {
        if coords.len() != self.dim() {
            return Err(HopfError::Malformed(format!(
                "element of length {} in algebra of dimension {}",
                coords.len(),
                self.dim()
            )));
        }
        Ok(Element { algebra: self, coords })
    }

    /// The basis element `e_i`.
    pub fn basis_element(&self, i: usize) -> Element<'_> {
        Element {
            algebra: self,
            coords: Vector::unit(self.dim(), i),
        }
    }

    /// The basis element with the given label.
    pub fn elem(&self, label: &str) -> Result<Element<'_>, HopfError> {
        self.index_of(label)
            .map(|i| self.basis_element(i))
            .ok_or_else(|| HopfError::UnknownLabel(label.to_string()))
    }

    /// Linear combination of labelled basis elements.
    pub fn combination(&self, terms: &[(Scalar, &str)]) -> Result<Element<'_>, HopfError> {
        let mut coords = Vector::zeros(self.dim());
        for (c, label) in terms {
            let i = self
                .index_of(label)
                .ok_or_else(|| HopfError::UnknownLabel(label.to_string()))?;
            coords[i] += c;
        }
        Ok(Element { algebra: self, coords })
    }

    pub fn one(&self) -> Element<'_> {
        Element {
            algebra: self,
            coords: self.unit.clone(),
        }
    }

    pub fn zero(&self) -> Element<'_> {
        Element {
            algebra: self,
            coords: Vector::zeros(self.dim()),
        }
    }

    fn owns(&self, x: &Element<'_>) -> Result<(), HopfError> {
        if std::ptr::eq(self, x.algebra) || self == x.algebra {
            Ok(())
        } else {
            Err(HopfError::AlgebraMismatch(self.name.clone(), x.algebra.name.clone()))
        }
    }

    /// `x · y`.
    pub fn multiply<'a>(&'a self, x: &Element<'_>, y: &Element<'_>) -> Result<Element<'a>, HopfError> {
        self.owns(x)?;
        self.owns(y)?;
        Ok(Element {
            algebra: self,
            coords: self.mul_vec(&x.coords, &y.coords),
        })
    }

    /// `Δ(x)` as a sparse tensor.
    pub fn comultiply(&self, x: &Element<'_>) -> Result<Tensor2, HopfError> {
        self.owns(x)?;
        Ok(self.comul_vec(&x.coords))
    }

    pub fn mul_vec(&self, x: &Vector, y: &Vector) -> Vector {
        let dim = self.dim();
        let mut out = Vector::zeros(dim);
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let xy = xi * yj;
                for (k, c) in self.product_terms(i, j) {
                    out[*k] += &(&xy * c);
                }
            }
        }
        out
    }

    pub fn comul_vec(&self, x: &Vector) -> Tensor2 {
        let mut out = Tensor2::new();
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, k, c) in &self.comul[i] {
                accumulate(&mut out, (*j, *k), xi * c);
            }
        }
        out
    }

    pub fn counit_of(&self, x: &Vector) -> Scalar {
        x.iter().zip(self.counit.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn antipode_of(&self, x: &Vector) -> Vector {
        self.antipode.mul_vec(x).expect("antipode is dim x dim")
    }

    /// Product in `H ⊗ H` (componentwise).
    pub fn mul_tensor(&self, a: &Tensor2, b: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::new();
        for ((i1, i2), c) in a {
            for ((j1, j2), d) in b {
                let cd = c * d;
                for (k1, e1) in self.product_terms(*i1, *j1) {
                    for (k2, e2) in self.product_terms(*i2, *j2) {
                        accumulate(&mut out, (*k1, *k2), &(&cd * e1) * e2);
                    }
                }
            }
        }
        out
    }

    fn dense_to_tensor(x: &Vector, y: &Vector) -> Tensor2 {
        let mut out = Tensor2::new();
        for (i, a) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                accumulate(&mut out, (i, j), a * b);
            }
        }
        out
    }

    fn vector_of(&self, map: &BTreeMap<usize, Scalar>) -> Vector {
        let mut v = Vector::zeros(self.dim());
        for (k, c) in map {
            v[*k] = c.clone();
        }
        v
    }

    fn product_basis(&self, i: usize, j: usize) -> BTreeMap<usize, Scalar> {
        self.product_terms(i, j).iter().cloned().collect()
    }

    fn product_sparse(&self, x: &BTreeMap<usize, Scalar>, j: usize, left: bool) -> BTreeMap<usize, Scalar> {
        let mut out = BTreeMap::new();
        for (i, c) in x {
            let terms = if left {
                self.product_terms(*i, j)
            } else {
                self.product_terms(j, *i)
            };
            for (k, d) in terms {
                accumulate(&mut out, *k, c * d);
            }
        }
        out
    }

    // ---- axioms ---------------------------------------------------------

    /// Checks all seven Hopf axioms exactly on every basis tuple.
    pub fn verify_axioms(&self) -> AxiomReport {
        let dim = self.dim();
        let label = |i: usize| self.basis[i].clone();
        let mut checks = Vec::new();

        // Associativity.
        let witnesses: Vec<Witness> = (0..dim)
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut found = Vec::new();
                for j in 0..dim {
                    let ij = self.product_basis(i, j);
                    for k in 0..dim {
                        let lhs = self.product_sparse(&ij, k, true);
                        let rhs = self.product_sparse(&self.product_basis(j, k), i, false);
                        if lhs != rhs {
                            found.push(Witness::new(vec![label(i), label(j), label(k)], "(ab)c != a(bc)"));
                        }
                    }
                }
                found
            })
            .collect();
        checks.push(AxiomCheck::new(Axiom::Associativity, witnesses));

        // Unit.
        let mut witnesses = Vec::new();
        for i in 0..dim {
            let e = Vector::unit(dim, i);
            if self.mul_vec(&self.unit, &e) != e {
                witnesses.push(Witness::new(vec![label(i)], "1*a != a"));
            }
            if self.mul_vec(&e, &self.unit) != e {
                witnesses.push(Witness::new(vec![label(i)], "a*1 != a"));
            }
        }
        checks.push(AxiomCheck::new(Axiom::Unit, witnesses));

        // Coassociativity.
        let witnesses: Vec<Witness> = (0..dim)
            .into_par_iter()
            .filter_map(|i| {
                let mut left = Tensor3::new();
                let mut right = Tensor3::new();
                for (j, k, c) in &self.comul[i] {
                    for (a, b, d) in &self.comul[*j] {
                        accumulate(&mut left, (*a, *b, *k), c * d);
                    }
                    for (a, b, d) in &self.comul[*k] {
                        accumulate(&mut right, (*j, *a, *b), c * d);
                    }
                }
                (left != right).then(|| Witness::new(vec![label(i)], "(Δ⊗id)Δ != (id⊗Δ)Δ"))
            })
            .collect();
        checks.push(AxiomCheck::new(Axiom::Coassociativity, witnesses));

        // Counit.
        let mut witnesses = Vec::new();
        for i in 0..dim {
            let mut left = Vector::zeros(dim);
            let mut right = Vector::zeros(dim);
            for (j, k, c) in &self.comul[i] {
                left[*k] += &(c * &self.counit[*j]);
                right[*j] += &(c * &self.counit[*k]);
            }
            let e = Vector::unit(dim, i);
            if left != e {
                witnesses.push(Witness::new(vec![label(i)], "(ε⊗id)Δ(a) != a"));
            }
            if right != e {
                witnesses.push(Witness::new(vec![label(i)], "(id⊗ε)Δ(a) != a"));
            }
        }
        checks.push(AxiomCheck::new(Axiom::Counit, witnesses));

        // Δ is an algebra map.
        let mut witnesses: Vec<Witness> = (0..dim)
            .into_par_iter()
            .flat_map_iter(|i| {
                let di = self.comul_vec(&Vector::unit(dim, i));
                let mut found = Vec::new();
                for j in 0..dim {
                    let dj = self.comul_vec(&Vector::unit(dim, j));
                    let lhs = self.comul_vec(&self.vector_of(&self.product_basis(i, j)));
                    if lhs != self.mul_tensor(&di, &dj) {
                        found.push(Witness::new(vec![label(i), label(j)], "Δ(ab) != Δ(a)Δ(b)"));
                    }
                }
                found
            })
            .collect();
        if self.comul_vec(&self.unit) != Self::dense_to_tensor(&self.unit, &self.unit) {
            witnesses.push(Witness::new(vec!["1".into()], "Δ(1) != 1⊗1"));
        }
        checks.push(AxiomCheck::new(Axiom::ComultiplicationMultiplicative, witnesses));

        // ε is an algebra map.
        let mut witnesses = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                let lhs = self.counit_of(&self.vector_of(&self.product_basis(i, j)));
                if lhs != &self.counit[i] * &self.counit[j] {
                    witnesses.push(Witness::new(vec![label(i), label(j)], "ε(ab) != ε(a)ε(b)"));
                }
            }
        }
        if !self.counit_of(&self.unit).is_one() {
            witnesses.push(Witness::new(vec!["1".into()], "ε(1) != 1"));
        }
        checks.push(AxiomCheck::new(Axiom::CounitMultiplicative, witnesses));

        // Antipode.
        let mut witnesses = Vec::new();
        for i in 0..dim {
            let mut left = Vector::zeros(dim);
            let mut right = Vector::zeros(dim);
            for (j, k, c) in &self.comul[i] {
                let sj = self.antipode.column(*j);
                let sk = self.antipode.column(*k);
                left.axpy(c, &self.mul_vec(&sj, &Vector::unit(dim, *k)));
                right.axpy(c, &self.mul_vec(&Vector::unit(dim, *j), &sk));
            }
            let expected = self.unit.scale(&self.counit[i]);
            if left != expected {
                witnesses.push(Witness::new(vec![label(i)], "S(a1)a2 != ε(a)1"));
            }
            if right != expected {
                witnesses.push(Witness::new(vec![label(i)], "a1S(a2) != ε(a)1"));
            }
        }
        checks.push(AxiomCheck::new(Axiom::Antipode, witnesses));

        AxiomReport {
            algebra: self.name.clone(),
            dim,
            checks,
        }
    }

    // ---- invariants -----------------------------------------------------

    pub fn is_grouplike(&self, x: &Element<'_>) -> bool {
        self.owns(x).is_ok()
            && self.counit_of(&x.coords).is_one()
            && self.comul_vec(&x.coords) == Self::dense_to_tensor(&x.coords, &x.coords)
    }

    /// The polynomial system `Δ(x) = x ⊗ x`, `ε(x) = 1` in the coordinates of `x`.
    pub fn grouplike_system(&self) -> PolySystem {
        let dim = self.dim();
        let mut unknowns = Unknowns::new();
        let vars: Vec<Poly> = self
            .basis
            .iter()
            .map(|b| Poly::var(unknowns.var(&format!("x[{b}]"))))
            .collect();
        let mut system = PolySystem::new(unknowns);
        let mut lhs: BTreeMap<(usize, usize), Poly> = BTreeMap::new();
        for (i, v) in vars.iter().enumerate() {
            for (j, k, c) in &self.comul[i] {
                lhs.entry((*j, *k)).or_insert_with(Poly::zero).add_scaled(c, v);
            }
        }
        for j in 0..dim {
            for k in 0..dim {
                let delta = lhs.remove(&(j, k)).unwrap_or_else(Poly::zero);
                system.push(
                    delta.sub(&vars[j].mul(&vars[k])),
                    format!("Δ(x)[{}⊗{}]", self.basis[j], self.basis[k]),
                );
            }
        }
        let mut eps = Poly::constant(-Scalar::one());
        for (v, c) in vars.iter().zip(self.counit.iter()) {
            eps.add_scaled(c, v);
        }
        system.push(eps, "ε(x) = 1");
        system
    }

    /// All group-like elements, found by solving [`Self::grouplike_system`].
    pub fn grouplikes(&self, opts: SolveOptions) -> Result<Vec<Element<'_>>, HopfError> {
        let system = self.grouplike_system();
        let set = solve(&system, opts)?;
        let mut out = Vec::new();
        for branch in &set.branches {
            if !branch.is_point() {
                let residual = vec![format!(
                    "non-isolated group-like branch: {}",
                    branch.fingerprint(&set.unknowns)
                )];
                return Err(HopfError::Solve(SolveError::Irreducible { residual }));
            }
            let at = branch.sample(&Scalar::zero());
            let coords: Vector = set.unknowns.vars().map(|v| at[&v].clone()).collect();
            let x = Element { algebra: self, coords };
            debug_assert!(self.is_grouplike(&x));
            out.push(x);
        }
        out.sort_by(|a, b| {
            b.coords
                .iter()
                .map(|c| !c.is_zero())
                .cmp(a.coords.iter().map(|c| !c.is_zero()))
        });
        Ok(out)
    }

    /// Basis of `P_{a,b}(H) = {x : Δ(x) = x⊗a + b⊗x}`.
    pub fn skew_primitives(&self, a: &Element<'_>, b: &Element<'_>) -> Result<Vec<Element<'_>>, HopfError> {
        self.owns(a)?;
        self.owns(b)?;
        let dim = self.dim();
        let mut m = Matrix::zeros(dim * dim, dim);
        for i in 0..dim {
            let e = Vector::unit(dim, i);
            let mut col = self.comul_vec(&e);
            for ((j, k), c) in Self::dense_to_tensor(&e, &a.coords) {
                accumulate(&mut col, (j, k), -c);
            }
            for ((j, k), c) in Self::dense_to_tensor(&b.coords, &e) {
                accumulate(&mut col, (j, k), -c);
            }
            for ((j, k), c) in col {
                m[(j * dim + k, i)] = c;
            }
        }
        Ok(m.kernel()
            .into_iter()
            .map(|coords| Element { algebra: self, coords })
            .collect())
    }

    /// Whether the algebra is commutative.
    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..self.dim()).all(|j| self.product_terms(i, j) == self.product_terms(j, i)))
    }

    /// Whether the coalgebra is cocommutative.
    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim()).all(|i| {
            let d: Tensor2 = self.comul[i].iter().map(|(j, k, c)| ((*j, *k), c.clone())).collect();
            let flipped: Tensor2 = self.comul[i].iter().map(|(j, k, c)| ((*k, *j), c.clone())).collect();
            d == flipped
        })
    }

    /// Whether `other` has the same basis labels and structure constants
    /// (the name is ignored).
    pub fn same_structure(&self, other: &HopfAlgebraData) -> bool {
        self.basis == other.basis
            && self.mul == other.mul
            && self.unit == other.unit
            && self.comul == other.comul
            && self.counit == other.counit
            && self.antipode == other.antipode
    }

    /// Renders a tensor using basis labels.
    pub fn render_tensor(&self, t: &Tensor2) -> String {
        render_terms(
            t.iter()
                .map(|((j, k), c)| (c, format!("{}⊗{}", self.basis[*j], self.basis[*k]))),
        )
    }

    // ---- serialization --------------------------------------------------

    pub fn to_json(&self) -> HopfAlgebraJson {
        let dim = self.dim();
        let mut mul = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in self.product_terms(i, j) {
                    mul.push((i, j, *k, c.clone()));
                }
            }
        }
        let mut comul = Vec::new();
        for (i, terms) in self.comul.iter().enumerate() {
            for (j, k, c) in terms {
                comul.push((i, *j, *k, c.clone()));
            }
        }
        let mut antipode = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                // S(e_i) has coefficient antipode[(j, i)] on e_j.
                let c = &self.antipode[(j, i)];
                if !c.is_zero() {
                    antipode.push((i, j, c.clone()));
                }
            }
        }
        HopfAlgebraJson {
            schema: SCHEMA.to_string(),
            name: self.name.clone(),
            dim,
            basis: self.basis.clone(),
            unit: self.unit.as_slice().to_vec(),
            counit: self.counit.as_slice().to_vec(),
            mul,
            comul,
            antipode,
        }
    }

    pub fn from_json(data: &HopfAlgebraJson) -> Result<Self, HopfError> {
        if data.schema != SCHEMA {
            return Err(HopfError::Malformed(format!("unsupported schema {:?}", data.schema)));
        }
        if data.dim != data.basis.len() {
            return Err(HopfError::Malformed("dim differs from basis length".into()));
        }
        let dim = data.dim;
        let mut antipode = Matrix::zeros(dim, dim);
        for (i, j, c) in &data.antipode {
            if *i >= dim || *j >= dim {
                return Err(HopfError::IndexOutOfRange {
                    index: (*i).max(*j),
                    dim,
                });
            }
            antipode[(*j, *i)] += c;
        }
        HopfAlgebraData::new(
            data.name.clone(),
            data.basis.clone(),
            data.mul.iter().cloned(),
            Vector::from_vec(data.unit.clone()),
            data.comul.iter().cloned(),
            Vector::from_vec(data.counit.clone()),
            antipode,
        )
    }
}

/// The `hopf-algebra/v1` document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfAlgebraJson {
    pub schema: String,
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<Scalar>,
    pub counit: Vec<Scalar>,
    pub mul: Vec<(usize, usize, usize, Scalar)>,
    pub comul: Vec<(usize, usize, usize, Scalar)>,
    pub antipode: Vec<(usize, usize, Scalar)>,
}

/// `H1 ⊗ H2` with componentwise structure; basis `a⊗b` in row-major order.
pub fn tensor_product(h1: &HopfAlgebraData, h2: &HopfAlgebraData) -> HopfAlgebraData {
    let (d1, d2) = (h1.dim(), h2.dim());
    let idx = |a: usize, b: usize| a * d2 + b;
    let basis = h1
        .basis
        .iter()
        .flat_map(|a| h2.basis.iter().map(move |b| format!("{a}⊗{b}")))
        .collect();
    let mut mul = Vec::new();
    for (i1, j1) in (0..d1).flat_map(|i| (0..d1).map(move |j| (i, j))) {
        for (i2, j2) in (0..d2).flat_map(|i| (0..d2).map(move |j| (i, j))) {
            for (k1, c1) in h1.product_terms(i1, j1) {
                for (k2, c2) in h2.product_terms(i2, j2) {
                    mul.push((idx(i1, i2), idx(j1, j2), idx(*k1, *k2), c1 * c2));
                }
            }
        }
    }
    let mut comul = Vec::new();
    for i1 in 0..d1 {
        for i2 in 0..d2 {
            for (a1, a2, c1) in h1.coproduct_terms(i1) {
                for (b1, b2, c2) in h2.coproduct_terms(i2) {
                    comul.push((idx(i1, i2), idx(*a1, *b1), idx(*a2, *b2), c1 * c2));
                }
            }
        }
    }
    HopfAlgebraData::new(
        format!("{}⊗{}", h1.name, h2.name),
        basis,
        mul,
        h1.unit.kron(&h2.unit),
        comul,
        h1.counit.kron(&h2.counit),
        h1.antipode.kron(&h2.antipode),
    )
    .expect("tensor product of well-formed algebras is well-formed")
}

// ---- elements ---------------------------------------------------------------

/// An element of a specific algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct Element<'a> {
    algebra: &'a HopfAlgebraData,
    coords: Vector,
}

impl<'a> Element<'a> {
    pub fn algebra(&self) -> &'a HopfAlgebraData {
        self.algebra
    }

    pub fn coords(&self) -> &Vector {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    pub fn try_mul(&self, other: &Element<'_>) -> Result<Element<'a>, HopfError> {
        self.algebra.multiply(self, other)
    }

    pub fn try_add(&self, other: &Element<'_>) -> Result<Element<'a>, HopfError> {
        self.algebra.owns(other)?;
        Ok(Element {
            algebra: self.algebra,
            coords: self.coords.add(&other.coords).expect("same dimension"),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Element<'a> {
        Element {
            algebra: self.algebra,
            coords: self.coords.scale(c),
        }
    }

    pub fn pow(&self, e: u32) -> Element<'a> {
        let mut out = self.algebra.one();
        for _ in 0..e {
            out = self.algebra.multiply(&out, self).expect("same algebra");
        }
        out
    }

    pub fn counit(&self) -> Scalar {
        self.algebra.counit_of(&self.coords)
    }

    pub fn antipode(&self) -> Element<'a> {
        Element {
            algebra: self.algebra,
            coords: self.algebra.antipode_of(&self.coords),
        }
    }

    pub fn comultiply(&self) -> Tensor2 {
        self.algebra.comul_vec(&self.coords)
    }

    /// Coefficient on the labelled basis element (zero for unknown labels).
    pub fn coeff(&self, label: &str) -> Scalar {
        self.algebra
            .index_of(label)
            .map(|i| self.coords[i].clone())
            .unwrap_or_else(Scalar::zero)
    }
}

impl<'a> Add for &Element<'a> {
    type Output = Element<'a>;
    /// Panics when the operands live in different algebras; see [`Element::try_add`].
    fn add(self, rhs: &Element<'a>) -> Element<'a> {
        self.try_add(rhs).expect("operands in the same algebra")
    }
}

impl<'a> Sub for &Element<'a> {
    type Output = Element<'a>;
    fn sub(self, rhs: &Element<'a>) -> Element<'a> {
        self.try_add(&rhs.scale(&-Scalar::one()))
            .expect("operands in the same algebra")
    }
}

impl<'a> Mul for &Element<'a> {
    type Output = Element<'a>;
    /// Panics when the operands live in different algebras; see [`Element::try_mul`].
    fn mul(self, rhs: &Element<'a>) -> Element<'a> {
        self.try_mul(rhs).expect("operands in the same algebra")
    }
}

impl<'a> Neg for &Element<'a> {
    type Output = Element<'a>;
    fn neg(self) -> Element<'a> {
        self.scale(&-Scalar::one())
    }
}

/// Renders `Σ c * label`, e.g. `1/2*1 + 1/2*g - i*gz`.
pub fn render_terms<'s>(terms: impl Iterator<Item = (&'s Scalar, String)>) -> String {
    let mut out = String::new();
    for (c, label) in terms {
        if c.is_zero() {
            continue;
        }
        let (neg, mag) = if c.im().is_zero() && c.re() < &Zero::zero() || c.re().is_zero() && c.im() < &Zero::zero() {
            (true, -c.clone())
        } else {
            (false, c.clone())
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let text = mag.to_string();
        if mag.is_one() {
            out.push_str(&label);
        } else if mag.is_real() || mag.re().is_zero() {
            out.push_str(&format!("{text}*{label}"));
        } else {
            out.push_str(&format!("({text})*{label}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Element<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = render_terms(
            self.coords
                .iter()
                .enumerate()
                .map(|(i, c)| (c, self.algebra.basis[i].clone())),
        );
        f.write_str(&text)
    }
}

impl fmt::Debug for Element<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({}: {})", self.algebra.name, self)
    }
}

// ---- reports ----------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    ComultiplicationMultiplicative,
    CounitMultiplicative,
    Antipode,
}

impl Axiom {
    pub const ALL: [Axiom; 7] = [
        Axiom::Associativity,
        Axiom::Unit,
        Axiom::Coassociativity,
        Axiom::Counit,
        Axiom::ComultiplicationMultiplicative,
        Axiom::CounitMultiplicative,
        Axiom::Antipode,
    ];

    pub fn description(self) -> &'static str {
        match self {
            Axiom::Associativity => "(ab)c = a(bc)",
            Axiom::Unit => "1a = a = a1",
            Axiom::Coassociativity => "(Δ⊗id)Δ = (id⊗Δ)Δ",
            Axiom::Counit => "(ε⊗id)Δ = id = (id⊗ε)Δ",
            Axiom::ComultiplicationMultiplicative => "Δ(ab) = Δ(a)Δ(b), Δ(1) = 1⊗1",
            Axiom::CounitMultiplicative => "ε(ab) = ε(a)ε(b), ε(1) = 1",
            Axiom::Antipode => "m(S⊗id)Δ = uε = m(id⊗S)Δ",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::Associativity => "associativity",
            Axiom::Unit => "unit",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counit => "counit",
            Axiom::ComultiplicationMultiplicative => "comultiplication-multiplicative",
            Axiom::CounitMultiplicative => "counit-multiplicative",
            Axiom::Antipode => "antipode",
        };
        f.write_str(name)
    }
}

/// A basis tuple on which an axiom fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub basis: Vec<String>,
    pub detail: String,
}

impl Witness {
    pub fn new(basis: Vec<String>, detail: &str) -> Self {
        Witness {
            basis,
            detail: detail.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
}

impl AxiomCheck {
    fn new(axiom: Axiom, witnesses: Vec<Witness>) -> Self {
        AxiomCheck {
            axiom,
            passed: witnesses.is_empty(),
            witnesses,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub algebra: String,
    pub dim: usize,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> Vec<Axiom> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.axiom).collect()
    }

    pub fn passed(&self, axiom: Axiom) -> bool {
        self.checks.iter().any(|c| c.axiom == axiom && c.passed)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (dim {})", self.algebra, self.dim)?;
        for c in &self.checks {
            write!(
                f,
                "  {:<34} {}",
                c.axiom.to_string(),
                if c.passed { "pass" } else { "FAIL" }
            )?;
            if let Some(w) = c.witnesses.first() {
                write!(
                    f,
                    "  [{} witness(es), e.g. {}: {}]",
                    c.witnesses.len(),
                    w.basis.join(", "),
                    w.detail
                )?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The group algebra of Z2 = {1, t}.
    fn z2() -> HopfAlgebraData {
        let s = Scalar::one;
        HopfAlgebraData::new(
            "kZ2",
            vec!["1".into(), "t".into()],
            vec![(0, 0, 0, s()), (0, 1, 1, s()), (1, 0, 1, s()), (1, 1, 0, s())],
            Vector::unit(2, 0),
            vec![(0, 0, 0, s()), (1, 1, 1, s())],
            Vector::from_vec(vec![s(), s()]),
            Matrix::identity(2),
        )
        .unwrap()
    }

    #[test]
    fn group_algebra_is_hopf() {
        let h = z2();
        let report = h.verify_axioms();
        assert!(report.all_passed(), "{report}");
        assert_eq!(report.checks.len(), 7);
    }

    #[test]
    fn mutation_is_detected() {
        let mut h = z2();
        h.set_mul_coeff(1, 1, 1, Scalar::one());
        let report = h.verify_axioms();
        assert!(!report.all_passed());
        assert!(!report.checks.iter().find(|c| !c.passed).unwrap().witnesses.is_empty());
    }

    #[test]
    fn grouplikes_of_group_algebra() {
        let h = z2();
        let g = h.grouplikes(SolveOptions::default()).unwrap();
        assert_eq!(g.len(), 2);
        assert!(g.iter().all(|x| h.is_grouplike(x)));
        // t - 1 is not group-like; its skew-primitive space P_{1,t} is spanned by 1 - t.
        let one = h.one();
        let t = h.elem("t").unwrap();
        assert!(!h.is_grouplike(&(&t - &one)));
        assert_eq!(h.skew_primitives(&one, &t).unwrap().len(), 1);
        assert_eq!(h.skew_primitives(&t, &t).unwrap().len(), 0);
    }

    #[test]
    fn tensor_square_and_json() {
        let h = tensor_product(&z2(), &z2());
        assert_eq!(h.dim(), 4);
        assert_eq!(h.basis()[3], "t⊗t");
        assert!(h.verify_axioms().all_passed());
        let json = serde_json::to_string(&h.to_json()).unwrap();
        let back: HopfAlgebraJson = serde_json::from_str(&json).unwrap();
        assert_eq!(HopfAlgebraData::from_json(&back).unwrap(), h);
        assert!(h.is_commutative() && h.is_cocommutative());
    }

    #[test]
    fn rendering() {
        let h = z2();
        let x = h
            .combination(&[(Scalar::frac(1, 2), "1"), (-Scalar::i(), "t")])
            .unwrap();
        assert_eq!(x.to_string(), "1/2*1 - i*t");
        assert_eq!(h.zero().to_string(), "0");
        assert_eq!(h.render_tensor(&h.comultiply(&h.one()).unwrap()), "1⊗1");
    }
}
