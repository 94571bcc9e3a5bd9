//! Polynomial constraint solving by elimination and case splitting.
//!
//! The solver only uses solution-preserving steps:
//!
//! 1. an unknown that occurs as a bare linear term `c*x` (constant `c`) is
//!    eliminated by substitution;
//! 2. a factorable constraint `f*g = 0` splits into the branches `f = 0` and
//!    `g = 0` (monomial factors, products of two affine forms, and
//!    `x*c + r` with `c | r`);
//! 3. a univariate quadratic splits on its two roots when the discriminant is
//!    a square in `Q(i)`;
//! 4. branches containing a nonzero constant are pruned.
//!
//! Each closed branch is a triangular substitution expressing the eliminated
//! unknowns in terms of the remaining free ones. The returned branch list is
//! deduplicated and branches contained in another branch are dropped, so the
//! union of the output is exactly the solution set of the input system.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::poly::{Poly, Unknowns, Var};
use crate::scalar::Scalar;

pub const DEFAULT_SPLIT_BUDGET: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("irreducible system: {} residual constraint(s), e.g. {}", residual.len(), residual.first().map(String::as_str).unwrap_or("?"))]
    Irreducible { residual: Vec<String> },
    #[error("split budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotASquare;

/// Square root in `Q(i)` with the canonical sign (`re > 0`, or `re = 0` and `im >= 0`).
pub fn gaussian_sqrt(s: &Scalar) -> Result<Scalar, NotASquare> {
    s.sqrt().ok_or(NotASquare)
}

/// A labelled constraint `poly = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub poly: Poly,
    pub origin: String,
}

/// A finite set of polynomial equations over `Q(i)`.
#[derive(Debug, Clone, Default)]
pub struct PolySystem {
    pub unknowns: Unknowns,
    pub constraints: Vec<Constraint>,
}

impl PolySystem {
    pub fn new(unknowns: Unknowns) -> Self {
        PolySystem {
            unknowns,
            constraints: Vec::new(),
        }
    }

    /// Adds `poly = 0`; zero polynomials are dropped.
    pub fn push(&mut self, poly: Poly, origin: impl Into<String>) {
        if !poly.is_zero() {
            self.constraints.push(Constraint {
                poly,
                origin: origin.into(),
            });
        }
    }

    pub fn extend(&mut self, other: PolySystem) {
        self.constraints.extend(other.constraints);
    }

    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    /// Constraints that do not vanish under `branch`.
    pub fn violations(&self, branch: &Branch) -> Vec<&Constraint> {
        self.constraints
            .iter()
            .filter(|c| !substitute(&c.poly, branch).is_zero())
            .collect()
    }

    /// Constraints that do not vanish at the concrete point `at`.
    pub fn violations_at(&self, at: &BTreeMap<Var, Scalar>) -> Vec<&Constraint> {
        self.constraints
            .iter()
            .filter(|c| c.poly.eval(at).is_none_or(|v| !v.is_zero()))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SplitRule {
    /// `m * g = 0` with `m` a monomial.
    MonomialFactor,
    /// A product of two lower-degree factors.
    Factorization,
    /// Roots of a univariate quadratic.
    QuadraticRoots,
}

impl fmt::Display for SplitRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplitRule::MonomialFactor => "monomial-factor",
            SplitRule::Factorization => "factorization",
            SplitRule::QuadraticRoots => "quadratic-roots",
        })
    }
}

/// One case split: the constraint that was split and the alternatives.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitRecord {
    pub rule: SplitRule,
    pub constraint: String,
    pub cases: Vec<String>,
}

/// The case taken at one split along a branch's path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitStep {
    pub rule: SplitRule,
    pub constraint: String,
    pub case: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    /// Eliminated unknown -> value in terms of `free` only.
    pub substitution: BTreeMap<Var, Poly>,
    pub free: Vec<Var>,
    /// Constraints left unresolved; empty for a closed branch.
    pub residual: Vec<Poly>,
    pub path: Vec<SplitStep>,
}

impl Branch {
    /// The branch that leaves every unknown free.
    pub fn identity(unknowns: &Unknowns) -> Self {
        Branch {
            substitution: BTreeMap::new(),
            free: unknowns.vars().collect(),
            residual: Vec::new(),
            path: Vec::new(),
        }
    }

    pub fn is_closed(&self) -> bool {
        self.residual.is_empty()
    }

    pub fn is_point(&self) -> bool {
        self.is_closed() && self.free.is_empty()
    }

    pub fn value(&self, v: Var) -> Poly {
        self.substitution.get(&v).cloned().unwrap_or_else(|| Poly::var(v))
    }

    /// Concrete assignment obtained by fixing the free unknowns.
    pub fn instantiate(&self, free_values: &BTreeMap<Var, Scalar>) -> Option<BTreeMap<Var, Scalar>> {
        let mut at: BTreeMap<Var, Scalar> = BTreeMap::new();
        for &v in &self.free {
            at.insert(v, free_values.get(&v)?.clone());
        }
        for (&v, p) in &self.substitution {
            let x = p.eval(&at)?;
            at.insert(v, x);
        }
        Some(at)
    }

    /// Assigns `value` to every free unknown.
    pub fn sample(&self, value: &Scalar) -> BTreeMap<Var, Scalar> {
        let free = self.free.iter().map(|&v| (v, value.clone())).collect();
        self.instantiate(&free).expect("all free unknowns assigned")
    }

    /// Whether the concrete point `at` (all unknowns assigned) lies in this branch.
    pub fn contains_point(&self, at: &BTreeMap<Var, Scalar>) -> bool {
        let Some(free_at): Option<BTreeMap<Var, Scalar>> =
            self.free.iter().map(|&v| at.get(&v).map(|x| (v, x.clone()))).collect()
        else {
            return false;
        };
        self.substitution
            .iter()
            .all(|(v, p)| p.eval(&free_at).as_ref() == at.get(v))
            && self
                .residual
                .iter()
                .all(|r| r.eval(&free_at).is_some_and(|x| x.is_zero()))
    }

    /// Whether every point of `self` also lies in `other`.
    pub fn subsumed_by(&self, other: &Branch) -> bool {
        if !self.is_closed() {
            return false;
        }
        let image: BTreeMap<Var, Poly> = other.free.iter().map(|&v| (v, self.value(v))).collect();
        other
            .substitution
            .iter()
            .all(|(&v, p)| self.value(v).sub(&p.substitute_all(&image)).is_zero())
            && other.residual.iter().all(|r| r.substitute_all(&image).is_zero())
    }

    /// Canonical text form, unknowns ordered by name.
    pub fn fingerprint(&self, unknowns: &Unknowns) -> String {
        let mut parts: Vec<String> = self
            .substitution
            .iter()
            .map(|(&v, p)| format!("{}={}", unknowns.name(v), p.render(unknowns)))
            .collect();
        parts.sort();
        let mut free: Vec<&str> = self.free.iter().map(|&v| unknowns.name(v)).collect();
        free.sort();
        let mut residual: Vec<String> = self.residual.iter().map(|r| r.render(unknowns)).collect();
        residual.sort();
        format!(
            "{} | free {} | residual {}",
            parts.join(", "),
            free.join(","),
            residual.join(";")
        )
    }
}

/// Applies a branch's substitution to a polynomial.
pub fn substitute(expr: &Poly, branch: &Branch) -> Poly {
    expr.substitute_all(&branch.substitution)
}

#[derive(Debug, Clone)]
pub struct SolutionSet {
    pub unknowns: Unknowns,
    pub branches: Vec<Branch>,
    /// Every split performed, in exploration order.
    pub log: Vec<SplitRecord>,
    pub nodes: usize,
}

impl SolutionSet {
    pub fn closed(&self) -> impl Iterator<Item = &Branch> {
        self.branches.iter().filter(|b| b.is_closed())
    }

    pub fn is_empty(&self) -> bool {
        self.branches.is_empty()
    }

    pub fn len(&self) -> usize {
        self.branches.len()
    }

    /// Index of the branch containing `at`, if any.
    pub fn locate(&self, at: &BTreeMap<Var, Scalar>) -> Option<usize> {
        self.branches.iter().position(|b| b.contains_point(at))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    pub split_budget: usize,
    /// Keep stuck branches with their residual instead of failing.
    pub allow_residual: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            split_budget: DEFAULT_SPLIT_BUDGET,
            allow_residual: false,
        }
    }
}

impl SolveOptions {
    pub fn with_budget(split_budget: usize) -> Self {
        SolveOptions {
            split_budget,
            ..Self::default()
        }
    }
}

/// Solves `system` completely.
pub fn solve(system: &PolySystem, opts: SolveOptions) -> Result<SolutionSet, SolveError> {
    let root = Branch::identity(&system.unknowns);
    let polys: Vec<Poly> = system.constraints.iter().map(|c| c.poly.clone()).collect();
    let mut log = Vec::new();
    let mut nodes = 0;
    let branches = explore(&root, polys, &system.unknowns, opts, &mut log, &mut nodes)?;
    Ok(SolutionSet {
        unknowns: system.unknowns.clone(),
        branches: canonicalize(branches, &system.unknowns),
        log,
        nodes,
    })
}

/// Solves `extra` on top of every closed branch of `set`.
///
/// `extra.unknowns` must extend the registry of `set`. The result is the
/// solution set of the union of both systems.
pub fn refine(set: &SolutionSet, extra: &PolySystem, opts: SolveOptions) -> Result<SolutionSet, SolveError> {
    let unknowns = &extra.unknowns;
    debug_assert!(set.unknowns.vars().all(|v| set.unknowns.name(v) == unknowns.name(v)));
    let mut log = set.log.clone();
    let mut nodes = set.nodes;
    let mut out = Vec::new();
    for branch in &set.branches {
        let mut start = branch.clone();
        let known: BTreeSet<Var> = start.free.iter().copied().collect();
        start.free.extend(
            unknowns
                .vars()
                .filter(|v| !known.contains(v) && !start.substitution.contains_key(v)),
        );
        let residual = std::mem::take(&mut start.residual);
        let polys = extra
            .constraints
            .iter()
            .map(|c| substitute(&c.poly, &start))
            .chain(residual)
            .collect();
        out.extend(explore(&start, polys, unknowns, opts, &mut log, &mut nodes)?);
    }
    Ok(SolutionSet {
        unknowns: unknowns.clone(),
        branches: canonicalize(out, unknowns),
        log,
        nodes,
    })
}

/// Adds `extra` to every branch of `set` without solving it: the
/// constraints are substituted and kept as residuals. Branches on which
/// some constraint reduces to a nonzero constant are dropped.
pub fn defer(set: &SolutionSet, extra: &PolySystem) -> SolutionSet {
    let unknowns = &extra.unknowns;
    let mut branches = Vec::new();
    for branch in &set.branches {
        let mut b = branch.clone();
        let known: BTreeSet<Var> = b.free.iter().copied().collect();
        b.free.extend(
            unknowns
                .vars()
                .filter(|v| !known.contains(v) && !b.substitution.contains_key(v)),
        );
        let polys: Vec<Poly> = extra.constraints.iter().map(|c| substitute(&c.poly, &b)).collect();
        let Some(residual) = normalize(b.residual.drain(..).chain(polys).collect()) else {
            continue;
        };
        b.residual = residual;
        branches.push(b);
    }
    SolutionSet {
        unknowns: unknowns.clone(),
        branches: canonicalize(branches, unknowns),
        log: set.log.clone(),
        nodes: set.nodes,
    }
}

struct Node {
    subst: BTreeMap<Var, Poly>,
    constraints: Vec<Poly>,
    path: Vec<SplitStep>,
}

enum Step {
    Assign(Var, Poly),
    Split(SplitRule, Vec<Poly>),
}

fn explore(
    start: &Branch,
    constraints: Vec<Poly>,
    unknowns: &Unknowns,
    opts: SolveOptions,
    log: &mut Vec<SplitRecord>,
    nodes: &mut usize,
) -> Result<Vec<Branch>, SolveError> {
    let mut out = Vec::new();
    let mut stack = vec![Node {
        subst: start.substitution.clone(),
        constraints,
        path: start.path.clone(),
    }];
    while let Some(mut node) = stack.pop() {
        *nodes += 1;
        if *nodes > opts.split_budget {
            return Err(SolveError::BudgetExhausted {
                budget: opts.split_budget,
            });
        }
        // `normalize` returns `None` for an inconsistent node, which is dropped.
        while let Some(cs) = normalize(std::mem::take(&mut node.constraints)) {
            node.constraints = cs;
            if node.constraints.is_empty() {
                out.push(close(node, start, Vec::new()));
                break;
            }
            if propagate_constants(&mut node) {
                continue;
            }
            match pick_constraint(&node.constraints) {
                Some((_, Step::Assign(v, value))) => assign(&mut node, v, &value),
                Some((pick, Step::Split(rule, cases))) => {
                    let constraint = node.constraints[pick].render(unknowns);
                    let rendered: Vec<String> = cases.iter().map(|c| format!("{} = 0", c.render(unknowns))).collect();
                    log.push(SplitRecord {
                        rule,
                        constraint: format!("{constraint} = 0"),
                        cases: rendered.clone(),
                    });
                    for (case, label) in cases.into_iter().zip(rendered).rev() {
                        let mut constraints = node.constraints.clone();
                        constraints[pick] = case;
                        let mut path = node.path.clone();
                        path.push(SplitStep {
                            rule,
                            constraint: format!("{constraint} = 0"),
                            case: label,
                        });
                        stack.push(Node {
                            subst: node.subst.clone(),
                            constraints,
                            path,
                        });
                    }
                    break;
                }
                None => {
                    if opts.allow_residual {
                        let residual = std::mem::take(&mut node.constraints);
                        out.push(close(node, start, residual));
                        break;
                    }
                    let mut residual: Vec<String> = node
                        .constraints
                        .iter()
                        .map(|c| format!("{} = 0", c.render(unknowns)))
                        .collect();
                    residual.sort_by_key(String::len);
                    return Err(SolveError::Irreducible { residual });
                }
            }
        }
    }
    Ok(out)
}

fn close(node: Node, start: &Branch, residual: Vec<Poly>) -> Branch {
    let free = start
        .free
        .iter()
        .copied()
        .filter(|v| !node.subst.contains_key(v))
        .collect();
    Branch {
        substitution: node.subst,
        free,
        residual,
        path: node.path,
    }
}

fn normalize(constraints: Vec<Poly>) -> Option<Vec<Poly>> {
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(constraints.len());
    for c in constraints {
        if c.is_zero() {
            continue;
        }
        if c.is_constant() {
            return None;
        }
        let m = c.monic();
        if seen.insert(m.clone()) {
            out.push(m);
        }
    }
    Some(out)
}

fn assign(node: &mut Node, v: Var, value: &Poly) {
    for c in node.constraints.iter_mut() {
        if c.contains(v) {
            *c = c.substitute(v, value);
        }
    }
    for rhs in node.subst.values_mut() {
        if rhs.contains(v) {
            *rhs = rhs.substitute(v, value);
        }
    }
    node.subst.insert(v, value.clone());
}

/// Performs every elimination whose value is a constant (constraints
/// `c*x + d` and `x^k`) in one pass. These are the lowest-degree
/// eliminations, so batching them keeps the elimination policy while
/// avoiding a full rescan of the constraint list per unknown. Returns
/// whether any assignment was made.
fn propagate_constants(node: &mut Node) -> bool {
    let mut changed = false;
    for k in 0..node.constraints.len() {
        let p = &node.constraints[k];
        if p.num_terms() > 2 || p.degree() == 0 {
            continue;
        }
        let mut vars = p.vars().into_iter();
        let (Some(_), None) = (vars.next(), vars.next()) else {
            continue;
        };
        if let Some((v, value)) = elimination(p) {
            if value.is_constant() || value.is_zero() {
                assign(node, v, &value);
                changed = true;
            }
        }
    }
    changed
}

/// Order in which constraints are considered: fewest unknowns, then fewest terms.
fn constraint_key(p: &Poly) -> (usize, usize, u32) {
    (p.vars().len(), p.num_terms(), p.degree())
}

/// Chooses the next step. Eliminations with a value of degree at most one
/// come first (lowest degree wins), then splits on the smallest constraint
/// that admits one, and only then eliminations with higher-degree values:
/// substituting a quadratic value multiplies the size of every constraint
/// it touches, while a split keeps the branches small.
fn pick_constraint(constraints: &[Poly]) -> Option<(usize, Step)> {
    let mut order: Vec<(usize, (usize, usize, u32))> = constraints
        .iter()
        .enumerate()
        .map(|(k, p)| (k, constraint_key(p)))
        .collect();
    order.sort_by_key(|&(k, key)| (key, k));
    let mut best: Option<(u32, usize, Var, Poly)> = None;
    for &(k, _) in &order {
        if let Some((v, value)) = elimination(&constraints[k]) {
            let d = value.degree();
            if best.as_ref().is_none_or(|(bd, ..)| d < *bd) {
                best = Some((d, k, v, value));
                if d == 0 {
                    break;
                }
            }
        }
    }
    if let Some((d, k, v, value)) = best.clone() {
        if d <= 1 {
            return Some((k, Step::Assign(v, value)));
        }
    }
    if let Some(found) = order.iter().find_map(|&(k, _)| split(&constraints[k]).map(|s| (k, s))) {
        return Some(found);
    }
    best.map(|(_, k, v, value)| (k, Step::Assign(v, value)))
}

/// `c*x + rest = 0` with `c` constant and `x` absent from `rest`: `x = -rest/c`.
/// Prefers the highest-indexed unknown (keeping earlier ones free), then the
/// lowest-degree value.
fn elimination(p: &Poly) -> Option<(Var, Poly)> {
    let content = p.monomial_content();
    if !content.is_one() {
        if let [(v, _)] = content.factors() {
            if p.num_terms() == 1 {
                return Some((*v, Poly::zero()));
            }
        }
        return None;
    }
    let mut best: Option<(Var, Scalar, Poly)> = None;
    for v in p.vars().into_iter().rev() {
        if let Some((c, rest)) = p.isolate(v) {
            let better = match &best {
                None => true,
                Some((_, _, r)) => rest.degree() < r.degree(),
            };
            if better {
                best = Some((v, c, rest));
            }
        }
    }
    best.map(|(v, c, rest)| (v, rest.scale(&(-c.inv().expect("nonzero")))))
}

/// A case split on a single constraint, if any splitting rule applies.
fn split(p: &Poly) -> Option<Step> {
    // Monomial content: x^a y^b * g = 0.
    let content = p.monomial_content();
    if !content.is_one() {
        let mut cases: Vec<Poly> = content.factors().iter().map(|&(v, _)| Poly::var(v)).collect();
        let cofactor = p.div_monomial(&content).expect("content divides");
        if !cofactor.is_constant() {
            cases.push(cofactor);
        }
        return Some(Step::Split(SplitRule::MonomialFactor, cases));
    }
    if let Some(factors) = factor_quadratic(p) {
        let rule = if p.vars().len() == 1 {
            SplitRule::QuadraticRoots
        } else {
            SplitRule::Factorization
        };
        return Some(Step::Split(rule, factors));
    }
    linear_in_some_var(p).map(|cases| Step::Split(SplitRule::Factorization, cases))
}

/// Splits a degree-2 polynomial into two affine factors when possible.
fn factor_quadratic(p: &Poly) -> Option<Vec<Poly>> {
    if p.degree() != 2 {
        return None;
    }
    for v in p.vars() {
        let coeffs = p.coefficients_in(v);
        if coeffs.len() != 3 {
            continue;
        }
        let a = coeffs[2].as_constant()?;
        let (b, c) = (&coeffs[1], &coeffs[0]);
        // p = a v^2 + b v + c, roots v = (-b ± m) / 2a with m^2 = b^2 - 4ac.
        let disc = b.mul(b).sub(&c.scale(&(Scalar::from_int(4) * &a)));
        let m = affine_sqrt(&disc)?;
        let two_a_inv = (Scalar::from_int(2) * &a).inv().expect("a != 0");
        let root = |sign: i64| b.neg().add(&m.scale(&Scalar::from_int(sign))).scale(&two_a_inv);
        let (r1, r2) = (root(1), root(-1));
        let f1 = Poly::var(v).sub(&r1);
        if r1 == r2 {
            return Some(vec![f1]);
        }
        return Some(vec![f1, Poly::var(v).sub(&r2)]);
    }
    None
}

/// `m` affine with `m^2 = d`, if one exists (`d` of degree <= 2).
fn affine_sqrt(d: &Poly) -> Option<Poly> {
    if d.is_zero() {
        return Some(Poly::zero());
    }
    if let Some(c) = d.as_constant() {
        return c.sqrt().map(Poly::constant);
    }
    if d.degree() != 2 {
        return None;
    }
    let y = d.vars().into_iter().find(|&y| d.degree_in(y) == 2)?;
    let coeffs = d.coefficients_in(y);
    let lead = coeffs[2].as_constant()?.sqrt()?;
    // d = lead^2 y^2 + 2 lead y * rest + rest^2.
    let half_inv = (Scalar::from_int(2) * &lead).inv().expect("nonzero");
    let rest = coeffs[1].scale(&half_inv);
    let m = Poly::var(y).scale(&lead).add(&rest);
    (m.mul(&m) == *d).then_some(m)
}

/// `p = x*c + r` with `c | r` gives the split `c = 0 | x + r/c = 0`.
fn linear_in_some_var(p: &Poly) -> Option<Vec<Poly>> {
    for v in p.vars().into_iter().rev() {
        if p.degree_in(v) != 1 {
            continue;
        }
        let (high, low) = p.split_linear(v);
        if high.is_constant() {
            continue;
        }
        if let Some(q) = low.div_exact(&high) {
            return Some(vec![high, Poly::var(v).add(&q)]);
        }
    }
    None
}

fn canonicalize(mut branches: Vec<Branch>, unknowns: &Unknowns) -> Vec<Branch> {
    for b in branches.iter_mut() {
        b.free.sort();
        b.residual.sort_by_cached_key(|r| r.render(unknowns));
    }
    let mut keyed: Vec<(String, Branch)> = branches.into_iter().map(|b| (b.fingerprint(unknowns), b)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    let branches: Vec<Branch> = keyed.into_iter().map(|(_, b)| b).collect();
    // Drop branches contained in another; among mutually contained ones keep the first.
    let n = branches.len();
    let mut keep = vec![true; n];
    for i in 0..n {
        for j in 0..n {
            if i == j || !keep[j] || !keep[i] {
                continue;
            }
            if branches[i].subsumed_by(&branches[j]) && (!branches[j].subsumed_by(&branches[i]) || j < i) {
                keep[i] = false;
            }
        }
    }
    branches
        .into_iter()
        .zip(keep)
        .filter_map(|(b, k)| k.then_some(b))
        .collect()
}

/// Convenience for tests and examples: `x - value` as a constraint polynomial.
pub fn equals(v: Var, value: &Scalar) -> Poly {
    Poly::var(v).sub(&Poly::constant(value.clone()))
}

/// `true` when every closed branch annihilates every constraint of `system`.
pub fn is_sound(set: &SolutionSet, system: &PolySystem) -> bool {
    set.closed().all(|b| system.violations(b).is_empty())
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} substitutions, {} free", self.substitution.len(), self.free.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn sys(names: &[&str]) -> (PolySystem, Vec<Poly>) {
        let mut u = Unknowns::new();
        let vars = names.iter().map(|n| Poly::var(u.var(n))).collect();
        (PolySystem::new(u), vars)
    }

    fn points(set: &SolutionSet) -> Vec<Vec<Scalar>> {
        set.branches
            .iter()
            .map(|b| {
                assert!(b.is_point());
                let at = b.sample(&Scalar::zero());
                set.unknowns.vars().map(|v| at[&v].clone()).collect()
            })
            .collect()
    }

    #[test]
    fn idempotent_scalar() {
        let (mut s, v) = sys(&["x"]);
        s.push(v[0].mul(&v[0]).sub(&v[0]), "x^2 = x");
        let set = solve(&s, SolveOptions::default()).unwrap();
        let mut pts = points(&set);
        pts.sort_by(|a, b| a[0].canonical_cmp(&b[0]));
        assert_eq!(pts, vec![vec![Scalar::zero()], vec![Scalar::one()]]);
        assert!(is_sound(&set, &s));
    }

    #[test]
    fn imaginary_roots() {
        let (mut s, v) = sys(&["gamma"]);
        s.push(v[0].mul(&v[0]).add(&Poly::one()), "gamma^2 = -1");
        let set = solve(&s, SolveOptions::default()).unwrap();
        assert_eq!(set.len(), 2);
        assert_eq!(set.log.len(), 1);
        assert_eq!(set.log[0].rule, SplitRule::QuadraticRoots);
        let mut roots: Vec<Scalar> = points(&set).into_iter().map(|p| p[0].clone()).collect();
        roots.sort_by(|a, b| a.canonical_cmp(b));
        assert_eq!(roots, vec![-Scalar::i(), Scalar::i()]);
    }

    #[test]
    fn inconsistent_system_is_empty() {
        let (mut s, v) = sys(&["x"]);
        s.push(v[0].clone(), "x = 0");
        s.push(v[0].sub(&Poly::one()), "x = 1");
        assert!(solve(&s, SolveOptions::default()).unwrap().is_empty());
    }

    #[test]
    fn irreducible_is_reported() {
        let (mut s, v) = sys(&["x", "y"]);
        // x^2 + y^2 - 1 has no rational parametrization by these rules.
        s.push(v[0].mul(&v[0]).add(&v[1].mul(&v[1])).sub(&Poly::one()), "circle");
        match solve(&s, SolveOptions::default()) {
            Err(SolveError::Irreducible { residual }) => assert_eq!(residual.len(), 1),
            other => panic!("expected irreducible, got {other:?}"),
        }
        let open = solve(
            &s,
            SolveOptions {
                allow_residual: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(open.len(), 1);
        assert!(!open.branches[0].is_closed());
    }

    #[test]
    fn budget_is_enforced() {
        let (mut s, v) = sys(&["a", "b", "c", "d"]);
        for x in &v {
            s.push(x.mul(x).sub(x), "idempotent");
        }
        assert_eq!(
            solve(&s, SolveOptions::with_budget(3)).unwrap_err(),
            SolveError::BudgetExhausted { budget: 3 }
        );
        assert_eq!(solve(&s, SolveOptions::default()).unwrap().len(), 16);
    }

    #[test]
    fn free_parameters_survive() {
        let (mut s, v) = sys(&["alpha", "beta"]);
        // alpha = (1+i) beta
        s.push(v[0].sub(&v[1].scale(&"1+i".parse().unwrap())), "link");
        let set = solve(&s, SolveOptions::default()).unwrap();
        assert_eq!(set.len(), 1);
        let b = &set.branches[0];
        assert_eq!(b.free, vec![Var(0)]);
        assert_eq!(b.substitution[&Var(1)].render(&set.unknowns), "(1/2-1/2i)*alpha");
    }

    #[test]
    fn substitution_examples() {
        let (s, v) = sys(&["x", "y"]);
        let mut b = Branch::identity(&s.unknowns);
        let xy = v[0].mul(&v[1]);
        assert_eq!(substitute(&xy, &b), xy);
        b.substitution.insert(Var(0), Poly::zero());
        assert!(substitute(&xy, &b).is_zero());
    }

    #[test]
    fn subsumed_points_are_absorbed() {
        let (mut s, v) = sys(&["x", "y"]);
        // x*y = 0 and x*(x-1) = 0: {x=0, y free} ∪ {x=1, y=0}
        s.push(v[0].mul(&v[1]), "xy");
        s.push(v[0].mul(&v[0]).sub(&v[0]), "x idempotent");
        let set = solve(&s, SolveOptions::default()).unwrap();
        assert_eq!(set.len(), 2, "{:?}", set.branches);
        assert!(is_sound(&set, &s));
    }

    #[test]
    fn affine_factorization() {
        let (mut s, v) = sys(&["x", "y"]);
        // (x + y - 1)(x - 2y) = 0 and y^2 = y
        let f = v[0]
            .add(&v[1])
            .sub(&Poly::one())
            .mul(&v[0].sub(&v[1].scale(&Scalar::from_int(2))));
        s.push(f, "product");
        s.push(v[1].mul(&v[1]).sub(&v[1]), "y idempotent");
        let set = solve(&s, SolveOptions::default()).unwrap();
        assert!(is_sound(&set, &s));
        assert_eq!(set.len(), 4);
        for (x, y) in [(1, 0), (0, 0), (0, 1), (2, 1)] {
            let at = [(Var(0), Scalar::from_int(x)), (Var(1), Scalar::from_int(y))]
                .into_iter()
                .collect();
            assert!(set.locate(&at).is_some(), "missing ({x},{y})");
        }
    }
}
