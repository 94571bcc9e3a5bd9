//! Module-coalgebra actions between `H4` and `H8` and their matched pairs.
//!
//! The left action `▷ : H8 ⊗ H4 -> H4` and the right action
//! `◁ : H8 ⊗ H4 -> H8` are stored as tables on basis pairs whose
//! coefficients are unknowns. The axioms are compiled into polynomial
//! systems ([`left_module_coalgebra_system`], [`matched_pair_system`], ...)
//! and solved exactly. Every answer is re-checked by direct evaluation
//! ([`check_matched_pair`]), independently of the compiled constraints.

mod check;
mod families;
mod systems;
mod tables;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

pub use check::{
    check_compatibility, check_left_module_coalgebra, check_matched_pair, check_right_module_coalgebra, Condition,
    Violation,
};
pub use families::{
    a_equation_system, b_equation_system, character, character_on_generators, circulant, classify_left, classify_right,
    right_antidiagonal, right_trivial, GxFamily, LeftFamily, RightKind, XFamily,
};
pub use systems::{
    compatibility_system, exchange_system, left_module_coalgebra_system, matched_pair_system,
    right_module_coalgebra_system,
};
pub use tables::{
    basis_vec, constant_vec, mul_poly, product_vec, ActionJson, ActionTable, ConcreteAction, Factors, PolyVec, Side,
    ACTION_SCHEMA,
};

use crate::linalg::Matrix;
use crate::poly::Unknowns;
use crate::scalar::Scalar;
use crate::solve::{defer, refine, solve, Branch, PolySystem, SolutionSet, SolveError, SolveOptions, SplitRule};

pub const MATCHED_PAIR_SCHEMA: &str = "matched-pair/v1";
pub const SOLUTIONS_SCHEMA: &str = "solutions/v1";

/// Result of solving the left module-coalgebra system.
#[derive(Debug, Clone)]
pub struct LeftEnumeration {
    pub table: ActionTable,
    pub system: PolySystem,
    pub solutions: SolutionSet,
    /// For each branch, the published family it coincides with.
    pub families: Vec<Option<LeftFamily>>,
}

impl LeftEnumeration {
    /// The concrete action of branch `k` with every free parameter set to `value`.
    pub fn sample(&self, k: usize, value: &Scalar) -> ConcreteAction {
        let branch = &self.solutions.branches[k];
        self.table
            .substitute(branch)
            .eval(&branch.sample(value))
            .expect("closed branch")
    }

    /// Index of the branch containing a concrete action.
    pub fn locate(&self, action: &ConcreteAction) -> Option<usize> {
        self.solutions.locate(&self.table.assignment(action)?)
    }

    /// Whether some branch was reached through a `γ² = −1` root split.
    pub fn splits_on_imaginary_unit(&self, k: usize) -> bool {
        self.solutions.branches[k]
            .path
            .iter()
            .any(|s| s.rule == SplitRule::QuadraticRoots && s.case.contains('i'))
    }
}

/// Two-way match of a branch against the published families: a sample of
/// the branch must classify as a family, and that family's instance at
/// parameter 1 must lie in the branch.
fn match_family(f: &Factors, table: &ActionTable, branch: &Branch) -> Option<LeftFamily> {
    let sample = table.substitute(branch).eval(&branch.sample(&Scalar::one()))?;
    let family = classify_left(f, &sample)?;
    let reference = LeftFamily::new(family.x, family.gx, Scalar::one(), Scalar::one());
    let reference = LeftFamily {
        alpha: if family.x == XFamily::One {
            Scalar::from(0)
        } else {
            reference.alpha
        },
        beta: if family.gx == GxFamily::A {
            Scalar::from(0)
        } else {
            reference.beta
        },
        ..reference
    };
    let at = table.assignment(&reference.table(f))?;
    branch.contains_point(&at).then_some(family)
}

/// Solves the left module-coalgebra system over the fully symbolic table.
pub fn enumerate_left_actions(f: &Factors, opts: SolveOptions) -> Result<LeftEnumeration, SolveError> {
    let mut unknowns = Unknowns::new();
    let table = ActionTable::symbolic(Side::Left, f, &mut unknowns);
    let system = left_module_coalgebra_system(f, &table, &unknowns);
    let solutions = solve(&system, opts)?;
    let families = solutions.branches.iter().map(|b| match_family(f, &table, b)).collect();
    Ok(LeftEnumeration {
        table,
        system,
        solutions,
        families,
    })
}

/// Result of solving the right module-coalgebra system.
#[derive(Debug, Clone)]
pub struct RightEnumeration {
    pub table: ActionTable,
    pub system: PolySystem,
    pub solutions: SolutionSet,
}

impl RightEnumeration {
    /// Whether every branch closed (no residual constraints left).
    pub fn is_complete(&self) -> bool {
        self.solutions.branches.iter().all(Branch::is_closed)
    }

    pub fn locate(&self, action: &ConcreteAction) -> Option<usize> {
        self.solutions.locate(&self.table.assignment(action)?)
    }
}

/// Enumerates right actions in two stages.
///
/// The constraints that only involve the rows of the group-likes
/// `g, h, gh` are solved exactly (each image of a group-like is a
/// group-like or a skew-primitive, so this part splits into finitely many
/// branches). The remaining constraints, on the rows of `z, gz, hz, ghz`,
/// describe a positive-dimensional variety the case-splitting solver cannot
/// reduce; they are attached to every branch as residual constraints. The
/// enumeration is therefore complete only if no residual is left, which
/// [`RightEnumeration::is_complete`] reports.
pub fn enumerate_right_actions(f: &Factors, opts: SolveOptions) -> Result<RightEnumeration, SolveError> {
    let mut unknowns = Unknowns::new();
    let table = ActionTable::symbolic(Side::Right, f, &mut unknowns);
    let system = right_module_coalgebra_system(f, &table, &unknowns);
    let grouplike_rows = table.row_vars(&[f.x("g"), f.x("h"), f.x("gh")]);
    let (mut first, mut rest) = (PolySystem::new(unknowns.clone()), PolySystem::new(unknowns.clone()));
    for c in &system.constraints {
        let target = if c.poly.vars().is_subset(&grouplike_rows) {
            &mut first
        } else {
            &mut rest
        };
        target.push(c.poly.clone(), c.origin.clone());
    }
    let solved = solve(&first, opts)?;
    let solutions = if opts.allow_residual {
        defer(&solved, &rest)
    } else {
        refine(&solved, &rest, opts)?
    };
    Ok(RightEnumeration {
        table,
        system,
        solutions,
    })
}

/// A matched pair found by the search, with its independent re-check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchedPair {
    pub left: ConcreteAction,
    pub right: ConcreteAction,
    pub family: Option<LeftFamily>,
    pub right_kind: RightKind,
    /// Violations found by direct evaluation; empty for a genuine pair.
    pub violations: Vec<Violation>,
}

impl MatchedPair {
    /// Builds a candidate from two concrete actions and checks it.
    pub fn new(f: &Factors, left: ConcreteAction, right: ConcreteAction) -> Self {
        let violations = check_matched_pair(f, &left, &right);
        MatchedPair {
            family: classify_left(f, &left),
            right_kind: classify_right(f, &right),
            left,
            right,
            violations,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Short name such as `▷3c / anti-diagonal`.
    pub fn name(&self) -> String {
        let left = self.family.as_ref().map_or("▷?".to_string(), LeftFamily::name);
        let right = match self.right_kind {
            RightKind::Trivial => "trivial",
            RightKind::AntiDiagonal => "anti-diagonal",
            RightKind::Other => "other",
        };
        format!("{left} / {right}")
    }

    /// `◁G` on `(z, gz, hz, ghz)`.
    pub fn matrix_a(&self, f: &Factors) -> Matrix {
        self.right.matrix_a(f)
    }

    /// `◁X` on `(z, gz, hz, ghz)`.
    pub fn matrix_b(&self, f: &Factors) -> Matrix {
        self.right.matrix_b(f)
    }

    pub fn to_json(&self, f: &Factors) -> MatchedPairJson {
        let rows = |m: Matrix| (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        MatchedPairJson {
            schema: MATCHED_PAIR_SCHEMA.into(),
            name: self.name(),
            family: self.family.as_ref().map(LeftFamily::name),
            right_kind: self.right_kind,
            left: self.left.to_json(f),
            right: self.right.to_json(f),
            digest: Digest {
                matrix_a: rows(self.matrix_a(f)),
                matrix_b: rows(self.matrix_b(f)),
                conditions: CONDITIONS.iter().map(|c| c.to_string()).collect(),
                violations: self.violations.clone(),
            },
        }
    }

    pub fn from_json(data: &MatchedPairJson, f: &Factors) -> Result<Self, String> {
        if data.schema != MATCHED_PAIR_SCHEMA {
            return Err(format!("unsupported schema {:?}", data.schema));
        }
        let left = ConcreteAction::from_json(&data.left, f)?;
        let right = ConcreteAction::from_json(&data.right, f)?;
        if left.side != Side::Left || right.side != Side::Right {
            return Err("actions stored on the wrong sides".into());
        }
        Ok(MatchedPair::new(f, left, right))
    }
}

impl fmt::Display for MatchedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())?;
        if !self.is_valid() {
            write!(f, " ({} violations)", self.violations.len())?;
        }
        Ok(())
    }
}

const CONDITIONS: [Condition; 8] = [
    Condition::Normalization,
    Condition::LeftModule,
    Condition::LeftCoalgebra,
    Condition::RightModule,
    Condition::RightCoalgebra,
    Condition::LeftCompatibility,
    Condition::RightCompatibility,
    Condition::Exchange,
];

/// The `matched-pair/v1` document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchedPairJson {
    pub schema: String,
    pub name: String,
    pub family: Option<String>,
    pub right_kind: RightKind,
    pub left: ActionJson,
    pub right: ActionJson,
    pub digest: Digest,
}

/// Verification digest of a matched pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Digest {
    /// `◁G` on `(z, gz, hz, ghz)`, row by row.
    pub matrix_a: Vec<Vec<Scalar>>,
    /// `◁X` on `(z, gz, hz, ghz)`, row by row.
    pub matrix_b: Vec<Vec<Scalar>>,
    /// Conditions re-checked by direct evaluation on all basis tuples.
    pub conditions: Vec<String>,
    pub violations: Vec<Violation>,
}

/// Outcome of the matched-pair search.
#[derive(Debug, Clone)]
pub struct MatchedPairSearch {
    pub left: LeftEnumeration,
    /// Closed branches of the combined system, one per surviving candidate.
    pub branches: Vec<Branch>,
    pub unknowns: Unknowns,
    pub pairs: Vec<MatchedPair>,
    /// Solver nodes visited across all stages.
    pub nodes: usize,
}

/// Finds every matched pair `(▷, ◁)`.
///
/// The union of the left, right and matched-pair systems is solved in
/// stages, each a solution-preserving refinement of the previous one:
///
/// 1. the left module-coalgebra system over the symbolic `▷`;
/// 2. per left branch, the right module-coalgebra system and the exchange
///    condition over the symbolic `◁`;
/// 3. per surviving branch, left and right compatibility, generated on the
///    partially solved tables (so the constraints stay small).
///
/// Every closed point is then re-checked by direct evaluation.
pub fn find_matched_pairs(f: &Factors, opts: SolveOptions) -> Result<MatchedPairSearch, SolveError> {
    let left = enumerate_left_actions(f, opts)?;
    let mut unknowns = left.solutions.unknowns.clone();
    let right_table = ActionTable::symbolic(Side::Right, f, &mut unknowns);
    let right_system = right_module_coalgebra_system(f, &right_table, &unknowns);
    let mut nodes = left.solutions.nodes;
    let mut branches = Vec::new();
    for branch in &left.solutions.branches {
        let single = single_branch(&left.solutions.unknowns, branch);
        let mut stage = exchange_system(f, &left.table.substitute(branch), &right_table, &unknowns);
        stage.extend(right_system.clone());
        let survivors = refine(&single, &stage, opts)?;
        nodes += survivors.nodes;
        for b in &survivors.branches {
            let (l, r) = (left.table.substitute(b), right_table.substitute(b));
            let stage = compatibility_system(f, &l, &r, &unknowns);
            let done = refine(&single_branch(&unknowns, b), &stage, opts)?;
            nodes += done.nodes;
            branches.extend(done.branches);
        }
    }
    let mut pairs: Vec<(MatchedPair, Branch)> = branches
        .into_iter()
        .map(|b| {
            let at = b.sample(&Scalar::from(0));
            let l = left.table.substitute(&b).eval(&at).expect("closed branch");
            let r = right_table.substitute(&b).eval(&at).expect("closed branch");
            (MatchedPair::new(f, l, r), b)
        })
        .collect();
    pairs.sort_by_key(|(p, _)| p.family.as_ref().map(|fam| (fam.x, fam.gx)));
    let (pairs, branches) = pairs.into_iter().unzip();
    Ok(MatchedPairSearch {
        left,
        branches,
        unknowns,
        pairs,
        nodes,
    })
}

fn single_branch(unknowns: &Unknowns, branch: &Branch) -> SolutionSet {
    SolutionSet {
        unknowns: unknowns.clone(),
        branches: vec![branch.clone()],
        log: Vec::new(),
        nodes: 0,
    }
}

/// The `solutions/v1` document: every branch of an enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionsJson {
    pub schema: String,
    pub side: Side,
    pub unknowns: usize,
    pub constraints: usize,
    pub nodes: usize,
    pub complete: bool,
    pub branches: Vec<BranchJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchJson {
    pub family: Option<String>,
    pub free: Vec<String>,
    /// `unknown = value`, sorted by unknown name; unknowns fixed to zero are omitted.
    pub values: Vec<(String, String)>,
    pub zero: usize,
    pub residual: Vec<String>,
    pub path: Vec<String>,
}

fn branch_json(unknowns: &Unknowns, branch: &Branch, family: Option<String>) -> BranchJson {
    let mut values: Vec<(String, String)> = branch
        .substitution
        .iter()
        .filter(|(_, p)| !p.is_zero())
        .map(|(&v, p)| (unknowns.name(v).to_string(), p.render(unknowns)))
        .collect();
    values.sort();
    let mut free: Vec<String> = branch.free.iter().map(|&v| unknowns.name(v).to_string()).collect();
    free.sort();
    BranchJson {
        family,
        free,
        zero: branch.substitution.values().filter(|p| p.is_zero()).count(),
        values,
        residual: branch
            .residual
            .iter()
            .map(|r| format!("{} = 0", r.render(unknowns)))
            .collect(),
        path: branch
            .path
            .iter()
            .map(|s| format!("{:?}: {}", s.rule, s.case))
            .collect(),
    }
}

impl LeftEnumeration {
    pub fn to_json(&self) -> SolutionsJson {
        let u = &self.solutions.unknowns;
        SolutionsJson {
            schema: SOLUTIONS_SCHEMA.into(),
            side: Side::Left,
            unknowns: u.len(),
            constraints: self.system.len(),
            nodes: self.solutions.nodes,
            complete: true,
            branches: self
                .solutions
                .branches
                .iter()
                .zip(&self.families)
                .map(|(b, fam)| branch_json(u, b, fam.as_ref().map(LeftFamily::name)))
                .collect(),
        }
    }
}

impl RightEnumeration {
    pub fn to_json(&self, f: &Factors) -> SolutionsJson {
        let u = &self.solutions.unknowns;
        let mut names: BTreeMap<usize, String> = BTreeMap::new();
        for (kind, action) in [("trivial", right_trivial(f)), ("anti-diagonal", right_antidiagonal(f))] {
            if let Some(k) = self.locate(&action) {
                names
                    .entry(k)
                    .and_modify(|n| *n = format!("{n}, {kind}"))
                    .or_insert_with(|| kind.to_string());
            }
        }
        SolutionsJson {
            schema: SOLUTIONS_SCHEMA.into(),
            side: Side::Right,
            unknowns: u.len(),
            constraints: self.system.len(),
            nodes: self.solutions.nodes,
            complete: self.is_complete(),
            branches: self
                .solutions
                .branches
                .iter()
                .enumerate()
                .map(|(k, b)| branch_json(u, b, names.get(&k).cloned()))
                .collect(),
        }
    }
}
