//! Bicrossed products `H4 ⋈ H8` of the matched pairs, the published
//! presentations of the four resulting 32-dimensional Hopf algebras, and
//! invariants that tell them apart.
//!
//! The product lives on `H4 ⊗ H8` with basis labels such as `X⊗gz`:
//!
//! ```text
//! (a⊗x)(b⊗y) = Σ a(x1▷b1) ⊗ (x2◁b2)y
//! Δ(a⊗x)     = Σ (a1⊗x1) ⊗ (a2⊗x2)
//! ε(a⊗x)     = ε(a)ε(x)
//! S(a⊗x)     = (1⊗S(x))(S(a)⊗1)
//! ```
//!
//! The antipode formula is not trusted: every product is run through the
//! full axiom check.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hopf::{accumulate, render_terms, Axiom, AxiomReport, HopfAlgebraData, HopfError, Tensor2, Witness};
use crate::linalg::{Matrix, Vector};
use crate::pairing::{Factors, MatchedPair, RightKind, Violation, XFamily};
use crate::scalar::Scalar;
use crate::solve::{SolveError, SolveOptions};

pub const THEOREM_REPORT_SCHEMA: &str = "theorem-report/v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BicrossedError {
    #[error("not a matched pair: {} violation(s), first {}", .0.len(), .0.first().map(|v| v.to_string()).unwrap_or_default())]
    NotMatched(Vec<Violation>),
    #[error("the product fails the {axiom} axiom, e.g. on ({})", .witness.basis.join(", "))]
    AxiomFailure { axiom: Axiom, witness: Witness },
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// The four published presentations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Presentation {
    /// The tensor product `H8 ⊗ H4` (all cross relations commute).
    #[serde(rename = "H8⊗H4")]
    Tensor,
    #[serde(rename = "H32,1")]
    H32_1,
    #[serde(rename = "H32,2")]
    H32_2,
    #[serde(rename = "H32,3")]
    H32_3,
}

impl Presentation {
    pub const ALL: [Presentation; 4] = [
        Presentation::Tensor,
        Presentation::H32_1,
        Presentation::H32_2,
        Presentation::H32_3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Presentation::Tensor => "H8⊗H4",
            Presentation::H32_1 => "H32,1",
            Presentation::H32_2 => "H32,2",
            Presentation::H32_3 => "H32,3",
        }
    }

    /// The presentation a matched pair is expected to produce, by left family.
    pub fn expected_for(pair: &MatchedPair) -> Option<Presentation> {
        let family = pair.family.as_ref()?;
        Some(match (family.x, pair.right_kind) {
            (XFamily::One, RightKind::Trivial) => Presentation::Tensor,
            (XFamily::Two, RightKind::Trivial) => Presentation::H32_1,
            (XFamily::Three, RightKind::AntiDiagonal) => Presentation::H32_2,
            (XFamily::Four, RightKind::AntiDiagonal) => Presentation::H32_3,
            _ => return None,
        })
    }

    /// Every relation of the presentation, in generators `g, h, z` (of
    /// `H8`) and `G, X` (of `H4`).
    pub fn relations(self) -> Vec<Relation> {
        let half = Scalar::frac(1, 2);
        let one = Scalar::one();
        let i = Scalar::i();
        let mut rels = vec![
            Relation::equal("g²=1", "gg", "1"),
            Relation::equal("h²=1", "hh", "1"),
            Relation::equal("G²=1", "GG", "1"),
            Relation::equal("gh=hg", "gh", "hg"),
            Relation::equal("gz=zh", "gz", "zh"),
            Relation::equal("hz=zg", "hz", "zg"),
            Relation::new(
                "z²=½(1+g+h−gh)",
                &[(one.clone(), "zz")],
                &[
                    (half.clone(), "1"),
                    (half.clone(), "g"),
                    (half.clone(), "h"),
                    (-half, "gh"),
                ],
            ),
            Relation::new("X²=0", &[(one.clone(), "XX")], &[]),
            Relation::new("GX=−XG", &[(one.clone(), "GX")], &[(-one.clone(), "XG")]),
            Relation::equal("gG=Gg", "gG", "Gg"),
            Relation::equal("hG=Gh", "hG", "Gh"),
        ];
        let sign = |negate: bool| if negate { -one.clone() } else { one.clone() };
        let twisted = matches!(self, Presentation::H32_2 | Presentation::H32_3);
        if twisted {
            rels.push(Relation::equal("gzG=Ghz", "gzG", "Ghz"));
        } else {
            rels.push(Relation::equal("zG=Gz", "zG", "Gz"));
        }
        let (g_label, h_label) = if twisted {
            ("gX=−Xg", "hX=−Xh")
        } else {
            ("gX=Xg", "hX=Xh")
        };
        rels.push(Relation::new(g_label, &[(one.clone(), "gX")], &[(sign(twisted), "Xg")]));
        rels.push(Relation::new(h_label, &[(one.clone(), "hX")], &[(sign(twisted), "Xh")]));
        rels.push(match self {
            Presentation::Tensor => Relation::equal("zX=Xz", "zX", "Xz"),
            Presentation::H32_1 => Relation::new("zX=−Xz", &[(one.clone(), "zX")], &[(-one.clone(), "Xz")]),
            Presentation::H32_2 => Relation::new("zX=iXgz", &[(one.clone(), "zX")], &[(i.clone(), "Xgz")]),
            Presentation::H32_3 => Relation::new("zX=−iXgz", &[(one.clone(), "zX")], &[(-i, "Xgz")]),
        });
        for r in &mut rels {
            r.label = format!("{}: {}", self.name(), r.label);
        }
        rels
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `Σ c·word = Σ c·word` in the generators `g, h, z, G, X`; the empty word
/// or `1` is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub label: String,
    pub lhs: Vec<(Scalar, String)>,
    pub rhs: Vec<(Scalar, String)>,
}

impl Relation {
    pub fn new(label: &str, lhs: &[(Scalar, &str)], rhs: &[(Scalar, &str)]) -> Self {
        let own = |side: &[(Scalar, &str)]| side.iter().map(|(c, w)| (c.clone(), w.to_string())).collect();
        Relation {
            label: label.to_string(),
            lhs: own(lhs),
            rhs: own(rhs),
        }
    }

    /// `lhs = rhs` for two words.
    pub fn equal(label: &str, lhs: &str, rhs: &str) -> Self {
        Relation::new(label, &[(Scalar::one(), lhs)], &[(Scalar::one(), rhs)])
    }
}

/// The verdict on one relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationCheck {
    pub relation: String,
    pub holds: bool,
    /// `lhs − rhs` in the product basis when the relation fails.
    pub witness: Option<String>,
}

/// A bicrossed product together with the pair it was built from.
#[derive(Debug, Clone)]
pub struct BicrossedProduct {
    pub algebra: HopfAlgebraData,
    pub pair: MatchedPair,
    /// Axiom report of the product (all passed, or construction fails).
    pub axioms: AxiomReport,
    n_h: usize,
}

fn product_index(n_h: usize, a: usize, x: usize) -> usize {
    a * n_h + x
}

/// Builds the bicrossed product of a matched pair and verifies it.
pub fn build_bicrossed(f: &Factors, pair: &MatchedPair, name: &str) -> Result<BicrossedProduct, BicrossedError> {
    if !pair.is_valid() {
        return Err(BicrossedError::NotMatched(pair.violations.clone()));
    }
    let algebra = assemble(f, pair, name)?;
    let axioms = algebra.verify_axioms();
    if let Some(check) = axioms.checks.iter().find(|c| !c.passed) {
        return Err(BicrossedError::AxiomFailure {
            axiom: check.axiom,
            witness: check
                .witnesses
                .first()
                .cloned()
                .unwrap_or_else(|| Witness::new(Vec::new(), "")),
        });
    }
    Ok(BicrossedProduct {
        algebra,
        pair: pair.clone(),
        axioms,
        n_h: f.h8.dim(),
    })
}

/// Structure constants of the product, without verification.
pub fn assemble(f: &Factors, pair: &MatchedPair, name: &str) -> Result<HopfAlgebraData, HopfError> {
    let (h4, h8) = (&f.h4, &f.h8);
    let (n_a, n_h) = (h4.dim(), h8.dim());
    let idx = |a: usize, x: usize| product_index(n_h, a, x);
    let basis: Vec<String> = (0..n_a)
        .flat_map(|a| (0..n_h).map(move |x| (a, x)))
        .map(|(a, x)| format!("{}⊗{}", h4.label(a), h8.label(x)))
        .collect();
    // The cross term x·b = Σ (x1▷b1) ⊗ (x2◁b2), for basis x ∈ H8, b ∈ H4.
    let mut cross: Vec<Tensor2> = vec![Tensor2::new(); n_h * n_a];
    for x in 0..n_h {
        for b in 0..n_a {
            let t = &mut cross[x * n_a + b];
            for (x1, x2, c) in h8.coproduct_terms(x) {
                for (b1, b2, d) in h4.coproduct_terms(b) {
                    let acted = pair.left.apply(&Vector::unit(n_h, *x1), &Vector::unit(n_a, *b1));
                    let moved = pair.right.apply(&Vector::unit(n_h, *x2), &Vector::unit(n_a, *b2));
                    let cd = c * d;
                    for (k, u) in acted.iter().enumerate().filter(|(_, u)| !u.is_zero()) {
                        for (l, v) in moved.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                            accumulate(t, (k, l), &(&cd * u) * v);
                        }
                    }
                }
            }
        }
    }
    let mut mul = Vec::new();
    for (a, x) in (0..n_a).flat_map(|a| (0..n_h).map(move |x| (a, x))) {
        for (b, y) in (0..n_a).flat_map(|b| (0..n_h).map(move |y| (b, y))) {
            let mut out = Tensor2::new();
            for ((k, l), c) in &cross[x * n_a + b] {
                for (p, d) in h4.product_terms(a, *k) {
                    for (q, e) in h8.product_terms(*l, y) {
                        accumulate(&mut out, (*p, *q), &(c * d) * e);
                    }
                }
            }
            mul.extend(out.into_iter().map(|((p, q), c)| (idx(a, x), idx(b, y), idx(p, q), c)));
        }
    }
    let mut comul = Vec::new();
    for a in 0..n_a {
        for x in 0..n_h {
            for (a1, a2, c) in h4.coproduct_terms(a) {
                for (x1, x2, d) in h8.coproduct_terms(x) {
                    comul.push((idx(a, x), idx(*a1, *x1), idx(*a2, *x2), c * d));
                }
            }
        }
    }
    let unit = h4.unit_vector().kron(h8.unit_vector());
    let counit = h4.counit_vector().kron(h8.counit_vector());
    let provisional = HopfAlgebraData::new(
        name,
        basis.clone(),
        mul.clone(),
        unit.clone(),
        comul.clone(),
        counit.clone(),
        Matrix::identity(n_a * n_h),
    )?;
    // S(a⊗x) = (1⊗S(x))(S(a)⊗1).
    let one_a = h4.unit_vector();
    let one_h = h8.unit_vector();
    let columns: Vec<Vector> = (0..n_a)
        .flat_map(|a| (0..n_h).map(move |x| (a, x)))
        .map(|(a, x)| {
            let sx = one_a.kron(&h8.antipode_of(&Vector::unit(n_h, x)));
            let sa = h4.antipode_of(&Vector::unit(n_a, a)).kron(one_h);
            provisional.mul_vec(&sx, &sa)
        })
        .collect();
    let antipode = Matrix::from_columns(n_a * n_h, &columns).expect("square");
    HopfAlgebraData::new(name, basis, mul, unit, comul, counit, antipode)
}

impl BicrossedProduct {
    /// `a ↦ a⊗1`.
    pub fn embed_left(&self, f: &Factors, a: &Vector) -> Vector {
        a.kron(f.h8.unit_vector())
    }

    /// `x ↦ 1⊗x`.
    pub fn embed_right(&self, f: &Factors, x: &Vector) -> Vector {
        f.h4.unit_vector().kron(x)
    }

    /// The image of a generator `g, h, z` (via `1⊗x`) or `G, X` (via `a⊗1`).
    pub fn generator(&self, f: &Factors, symbol: char) -> Option<Vector> {
        let label = symbol.to_string();
        if let Some(x) = f.h8.index_of(&label) {
            return Some(self.embed_right(f, &Vector::unit(f.h8.dim(), x)));
        }
        f.h4.index_of(&label)
            .map(|a| self.embed_left(f, &Vector::unit(f.h4.dim(), a)))
    }

    /// Evaluates a word in the generators; `""` and `"1"` are the unit.
    pub fn word(&self, f: &Factors, word: &str) -> Option<Vector> {
        let mut acc = self.algebra.unit_vector().clone();
        if word == "1" {
            return Some(acc);
        }
        for ch in word.chars() {
            acc = self.algebra.mul_vec(&acc, &self.generator(f, ch)?);
        }
        Some(acc)
    }

    fn side(&self, f: &Factors, terms: &[(Scalar, String)]) -> Option<Vector> {
        let mut v = Vector::zeros(self.algebra.dim());
        for (c, w) in terms {
            v.axpy(c, &self.word(f, w)?);
        }
        Some(v)
    }

    /// Checks a single relation.
    pub fn check_relation(&self, f: &Factors, relation: &Relation) -> RelationCheck {
        let lhs = self.side(f, &relation.lhs);
        let rhs = self.side(f, &relation.rhs);
        let (holds, witness) = match (lhs, rhs) {
            (Some(l), Some(r)) => {
                let diff = l.sub(&r).expect("same dimension");
                (diff.is_zero(), (!diff.is_zero()).then(|| self.render(&diff)))
            }
            _ => (false, Some("unknown generator".to_string())),
        };
        RelationCheck {
            relation: relation.label.clone(),
            holds,
            witness,
        }
    }

    /// Checks every relation of a presentation.
    pub fn verify_presentation(&self, f: &Factors, which: Presentation) -> Vec<RelationCheck> {
        which.relations().iter().map(|r| self.check_relation(f, r)).collect()
    }

    /// The presentations all of whose relations hold.
    pub fn satisfied_presentations(&self, f: &Factors) -> Vec<Presentation> {
        Presentation::ALL
            .into_iter()
            .filter(|&p| self.verify_presentation(f, p).iter().all(|c| c.holds))
            .collect()
    }

    pub fn render(&self, v: &Vector) -> String {
        render_terms(
            v.iter()
                .enumerate()
                .map(|(k, c)| (c, self.algebra.label(k).to_string())),
        )
    }

    /// Failures of: `ι_A`, `ι_H` being algebra and coalgebra maps, and the
    /// factorization `(a⊗1)(1⊗x) = a⊗x`. Empty when all hold.
    pub fn structure_failures(&self, f: &Factors) -> Vec<String> {
        let (h4, h8, e) = (&f.h4, &f.h8, &self.algebra);
        let mut out = Vec::new();
        let mut check_embedding = |h: &HopfAlgebraData, embed: &dyn Fn(&Vector) -> Vector, name: &str| {
            for i in 0..h.dim() {
                let ei = Vector::unit(h.dim(), i);
                for j in 0..h.dim() {
                    let ej = Vector::unit(h.dim(), j);
                    if embed(&h.mul_vec(&ei, &ej)) != e.mul_vec(&embed(&ei), &embed(&ej)) {
                        out.push(format!(
                            "{name} is not multiplicative on ({}, {})",
                            h.label(i),
                            h.label(j)
                        ));
                    }
                }
                let mut image = Tensor2::new();
                for ((j, k), c) in h.comul_vec(&ei) {
                    let (u, v) = (embed(&Vector::unit(h.dim(), j)), embed(&Vector::unit(h.dim(), k)));
                    for (p, up) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                        for (q, vq) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                            accumulate(&mut image, (p, q), &(&c * up) * vq);
                        }
                    }
                }
                if e.comul_vec(&embed(&ei)) != image {
                    out.push(format!("{name} is not comultiplicative on {}", h.label(i)));
                }
                if e.counit_of(&embed(&ei)) != h.counit_of(&ei) {
                    out.push(format!("{name} does not preserve the counit on {}", h.label(i)));
                }
            }
            if embed(h.unit_vector()) != *e.unit_vector() {
                out.push(format!("{name} does not preserve the unit"));
            }
        };
        check_embedding(h4, &|a: &Vector| self.embed_left(f, a), "ι_A");
        check_embedding(h8, &|x: &Vector| self.embed_right(f, x), "ι_H");
        for a in 0..h4.dim() {
            for x in 0..h8.dim() {
                let lhs = e.mul_vec(
                    &self.embed_left(f, &Vector::unit(h4.dim(), a)),
                    &self.embed_right(f, &Vector::unit(h8.dim(), x)),
                );
                if lhs != Vector::unit(e.dim(), product_index(self.n_h, a, x)) {
                    out.push(format!("(a⊗1)(1⊗x) ≠ a⊗x for ({}, {})", h4.label(a), h8.label(x)));
                }
            }
        }
        if e.antipode_matrix().inverse().is_err() {
            out.push("antipode is not invertible".to_string());
        }
        out
    }

    /// `zX` in the product, rendered: the relation type that distinguishes
    /// the four products.
    pub fn zx_signature(&self, f: &Factors) -> String {
        self.render(&self.word(f, "zX").expect("generators exist"))
    }

    /// Invariants of the product.
    pub fn invariant_report(&self, f: &Factors, opts: SolveOptions) -> Result<InvariantReport, BicrossedError> {
        let e = &self.algebra;
        let grouplikes = e.grouplikes(opts)?;
        let labels: Vec<String> = grouplikes.iter().map(|g| g.to_string()).collect();
        let mut skew = Vec::new();
        for (a, la) in grouplikes.iter().zip(&labels) {
            for (b, lb) in grouplikes.iter().zip(&labels) {
                skew.push(SkewPrimitiveDim {
                    a: la.clone(),
                    b: lb.clone(),
                    dim: e.skew_primitives(a, b)?.len(),
                });
            }
        }
        Ok(InvariantReport {
            name: e.name.clone(),
            dim: e.dim(),
            grouplike_count: grouplikes.len(),
            grouplikes: labels,
            skew_primitive_dims: skew,
            commutative: e.is_commutative(),
            cocommutative: e.is_cocommutative(),
            zx: self.zx_signature(f),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewPrimitiveDim {
    pub a: String,
    pub b: String,
    pub dim: usize,
}

/// Distinguishing invariants of a product (not an isomorphism test).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub name: String,
    pub dim: usize,
    pub grouplike_count: usize,
    pub grouplikes: Vec<String>,
    /// `dim P_{a,b}` for every ordered pair of group-likes.
    pub skew_primitive_dims: Vec<SkewPrimitiveDim>,
    pub commutative: bool,
    pub cocommutative: bool,
    /// `zX` expressed in the product basis.
    pub zx: String,
}

impl InvariantReport {
    pub fn to_markdown(&self) -> String {
        let mut s = format!("## Invariants of {}\n\n", self.name);
        s.push_str(&format!("- dimension: {}\n", self.dim));
        s.push_str(&format!(
            "- group-likes ({}): {}\n",
            self.grouplike_count,
            self.grouplikes.join(", ")
        ));
        s.push_str(&format!("- commutative: {}\n", self.commutative));
        s.push_str(&format!("- cocommutative: {}\n", self.cocommutative));
        s.push_str(&format!("- zX = {}\n", self.zx));
        let nontrivial: Vec<String> = self
            .skew_primitive_dims
            .iter()
            .filter(|d| d.a != d.b && d.dim > 1)
            .map(|d| format!("P({}, {}) = {}", d.a, d.b, d.dim))
            .collect();
        s.push_str(&format!(
            "- skew-primitive spaces of dimension > 1: {}\n",
            if nontrivial.is_empty() {
                "none".to_string()
            } else {
                nontrivial.join("; ")
            }
        ));
        s
    }
}

/// One row of the theorem report: a matched pair, its product, and the
/// presentation checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremRow {
    pub pair: String,
    pub product: String,
    pub expected: Option<Presentation>,
    /// Presentations all of whose relations hold in the product.
    pub satisfied: Vec<Presentation>,
    pub axioms_pass: bool,
    pub structure_failures: Vec<String>,
    /// For the trivial pair: whether the product equals `H4 ⊗ H8` constant by constant.
    pub equals_tensor_product: Option<bool>,
    pub relations: Vec<RelationCheck>,
    pub zx: String,
}

impl TheoremRow {
    pub fn passes(&self) -> bool {
        self.axioms_pass
            && self.structure_failures.is_empty()
            && self.relations.iter().all(|r| r.holds)
            && self.expected.is_some_and(|p| self.satisfied == vec![p])
            && self.equals_tensor_product != Some(false)
    }
}

/// The full classification check: four matched pairs, four products, four
/// presentations, pairwise distinct `zX` relations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub schema: String,
    pub matched_pairs: usize,
    pub rows: Vec<TheoremRow>,
}

impl TheoremReport {
    pub fn passes(&self) -> bool {
        let mut zx: Vec<&str> = self.rows.iter().map(|r| r.zx.as_str()).collect();
        zx.sort();
        zx.dedup();
        self.matched_pairs == 4 && self.rows.len() == 4 && self.rows.iter().all(TheoremRow::passes) && zx.len() == 4
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::from("# Factorizations through H8 and H4\n\n");
        s.push_str(&format!("matched pairs found: {}\n\n", self.matched_pairs));
        s.push_str("| matched pair | product | presentation | axioms | relations | zX | ≡ tensor product |\n");
        s.push_str("|---|---|---|---|---|---|---|\n");
        for r in &self.rows {
            let holds = r.relations.iter().filter(|c| c.holds).count();
            s.push_str(&format!(
                "| {} | {} | {} | {} | {}/{} | {} | {} |\n",
                r.pair,
                r.product,
                r.expected.map_or("none".to_string(), |p| p.to_string()),
                if r.axioms_pass { "pass" } else { "FAIL" },
                holds,
                r.relations.len(),
                r.zx,
                match r.equals_tensor_product {
                    Some(true) => "yes",
                    Some(false) => "NO",
                    None => "-",
                }
            ));
        }
        for r in &self.rows {
            s.push_str(&format!("\n## {} ({})\n\n", r.product, r.pair));
            for c in &r.relations {
                match &c.witness {
                    None => s.push_str(&format!("- [pass] {}\n", c.relation)),
                    Some(w) => s.push_str(&format!("- [FAIL] {}: lhs − rhs = {}\n", c.relation, w)),
                }
            }
            for failure in &r.structure_failures {
                s.push_str(&format!("- [FAIL] {failure}\n"));
            }
        }
        s.push_str(&format!("\nverdict: {}\n", if self.passes() { "pass" } else { "FAIL" }));
        s
    }
}

/// Builds and checks the product of one matched pair.
pub fn theorem_row(f: &Factors, pair: &MatchedPair) -> Result<(BicrossedProduct, TheoremRow), BicrossedError> {
    let expected = Presentation::expected_for(pair);
    let name = expected.map_or_else(|| format!("H4⋈H8 ({})", pair.name()), |p| p.name().to_string());
    let product = build_bicrossed(f, pair, &name)?;
    let relations = expected.map_or_else(Vec::new, |p| product.verify_presentation(f, p));
    let equals_tensor_product = (expected == Some(Presentation::Tensor)).then(|| {
        product
            .algebra
            .same_structure(&crate::hopf::tensor_product(&f.h4, &f.h8))
    });
    let row = TheoremRow {
        pair: pair.name(),
        product: name,
        expected,
        satisfied: product.satisfied_presentations(f),
        axioms_pass: product.axioms.all_passed(),
        structure_failures: product.structure_failures(f),
        equals_tensor_product,
        relations,
        zx: product.zx_signature(f),
    };
    Ok((product, row))
}

/// Builds the theorem report from a list of matched pairs.
pub fn theorem_report(
    f: &Factors,
    pairs: &[MatchedPair],
) -> Result<(Vec<BicrossedProduct>, TheoremReport), BicrossedError> {
    let mut products = Vec::new();
    let mut rows = Vec::new();
    for pair in pairs {
        let (product, row) = theorem_row(f, pair)?;
        products.push(product);
        rows.push(row);
    }
    Ok((
        products,
        TheoremReport {
            schema: THEOREM_REPORT_SCHEMA.into(),
            matched_pairs: pairs.len(),
            rows,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairing::{right_trivial, GxFamily, LeftFamily};

    fn trivial_pair(f: &Factors) -> MatchedPair {
        let left = LeftFamily::new(XFamily::One, GxFamily::A, Scalar::zero(), Scalar::zero()).table(f);
        MatchedPair::new(f, left, right_trivial(f))
    }

    #[test]
    fn trivial_pair_gives_the_tensor_product() {
        let f = Factors::new();
        let e = build_bicrossed(&f, &trivial_pair(&f), "E").unwrap();
        assert!(e.algebra.same_structure(&crate::hopf::tensor_product(&f.h4, &f.h8)));
        assert!(e.structure_failures(&f).is_empty());
        assert_eq!(e.zx_signature(&f), "X⊗z");
    }

    #[test]
    fn non_matched_pairs_are_refused() {
        let f = Factors::new();
        let left = LeftFamily::new(XFamily::Two, GxFamily::B, Scalar::one(), -Scalar::one()).table(&f);
        let pair = MatchedPair::new(&f, left, right_trivial(&f));
        assert!(matches!(
            build_bicrossed(&f, &pair, "E"),
            Err(BicrossedError::NotMatched(_))
        ));
    }

    #[test]
    fn presentations_have_distinct_zx_relations() {
        let labels: Vec<String> = Presentation::ALL
            .iter()
            .map(|p| p.relations().last().unwrap().label.clone())
            .collect();
        assert_eq!(
            labels,
            ["H8⊗H4: zX=Xz", "H32,1: zX=−Xz", "H32,2: zX=iXgz", "H32,3: zX=−iXgz"]
        );
    }
}
