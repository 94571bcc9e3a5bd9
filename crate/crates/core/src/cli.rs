//! The `hopf` command line: each pipeline stage as a subcommand writing
//! versioned JSON artifacts and a JSON or markdown report.
//!
//! Exit codes depend only on mathematical outcomes: `0` everything verified,
//! `1` a mathematical check failed, `2` an I/O or input error, `3` the solver
//! could not reduce a system. Artifacts are written atomically (temporary
//! file plus rename) and contain nothing run-dependent, so identical
//! configurations produce byte-identical outputs.

use std::fmt;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bicrossed::{theorem_report, BicrossedError, BicrossedProduct, InvariantReport};
use crate::catalog::{build_h4, build_h8, presentation_facts, Fact};
use crate::hopf::{tensor_product, AxiomReport, HopfAlgebraData, HopfAlgebraJson, HopfError};
use crate::pairing::{
    check_left_module_coalgebra, check_right_module_coalgebra, enumerate_left_actions, enumerate_right_actions,
    find_matched_pairs, right_antidiagonal, right_trivial, ActionJson, ConcreteAction, Factors, MatchedPair,
    MatchedPairJson, Side, Violation,
};
use crate::solve::{SolveError, SolveOptions, DEFAULT_SPLIT_BUDGET};

/// Environment variable that overrides `--budget`.
pub const BUDGET_ENV: &str = "HOPF_BUDGET";

pub const CATALOG_REPORT_SCHEMA: &str = "catalog-report/v1";
pub const ENUMERATION_REPORT_SCHEMA: &str = "enumeration-report/v1";
pub const ACTION_REPORT_SCHEMA: &str = "action-report/v1";
pub const MATCHED_PAIRS_REPORT_SCHEMA: &str = "matched-pairs-report/v1";
pub const PRODUCT_REPORT_SCHEMA: &str = "product-report/v1";

#[derive(Debug, Parser)]
#[command(name = "hopf", version)]
#[command(about = "Exact verification of the matched pairs of H4 and H8 and their bicrossed products")]
pub struct Cli {
    /// Directory receiving all artifacts
    #[arg(long, global = true, default_value = "hopf-out")]
    pub out: PathBuf,

    /// Solver split budget (nodes); HOPF_BUDGET overrides it
    #[arg(long, global = true, default_value_t = DEFAULT_SPLIT_BUDGET, value_parser = positive)]
    pub budget: usize,

    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Replay a stored artifact (algebra, action or matched pair)
    #[arg(long, global = true)]
    pub load: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgebraArg {
    H4,
    H8,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The base algebras H4, H8 and H8⊗H4
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
    /// Module-coalgebra actions
    Actions {
        #[command(subcommand)]
        action: ActionsCommand,
    },
    /// Matched pairs (▷, ◁)
    MatchedPairs {
        #[command(subcommand)]
        action: PairsCommand,
    },
    /// Bicrossed products of matched pairs
    Product {
        #[command(subcommand)]
        action: ProductCommand,
    },
    /// The full classification pipeline
    Theorem {
        #[command(subcommand)]
        action: TheoremCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// Build the algebras (or load one) and check every Hopf axiom
    Verify {
        #[arg(long, value_enum, default_value_t = AlgebraArg::All)]
        algebra: AlgebraArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum ActionsCommand {
    /// Solve the module-coalgebra system of one side
    Enumerate {
        #[arg(long, value_enum)]
        side: SideArg,
    },
    /// Check a stored action (requires --load)
    Check,
}

#[derive(Debug, Subcommand)]
pub enum PairsCommand {
    /// Search every matched pair
    Find,
    /// Re-check a stored matched pair (requires --load)
    Check,
}

#[derive(Debug, Subcommand)]
pub enum ProductCommand {
    /// Build the products of all matched pairs, or of the pair given by --load
    Build,
}

#[derive(Debug, Subcommand)]
pub enum TheoremCommand {
    /// Enumerate, match, build and verify every presentation
    Check,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("the budget must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

/// Resolved configuration of one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub out: PathBuf,
    pub budget: usize,
    pub format: Format,
    pub load: Option<PathBuf>,
}

impl RunConfig {
    /// Applies the `HOPF_BUDGET` override to the parsed flags.
    pub fn resolve(cli: &Cli, budget_env: Option<&str>) -> Result<Self, CliError> {
        let budget = match budget_env {
            Some(text) => positive(text.trim()).map_err(|e| CliError::Input(format!("{BUDGET_ENV}={text:?}: {e}")))?,
            None => cli.budget,
        };
        Ok(RunConfig {
            out: cli.out.clone(),
            budget,
            format: cli.format,
            load: cli.load.clone(),
        })
    }

    fn solve_options(&self) -> SolveOptions {
        SolveOptions::with_budget(self.budget)
    }

    fn load_path(&self) -> Result<&Path, CliError> {
        self.load
            .as_deref()
            .ok_or_else(|| CliError::Input("this command needs --load FILE".into()))
    }
}

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Verified = 0,
    MathFailure = 1,
    Io = 2,
    Irreducible = 3,
}

impl Outcome {
    pub fn code(self) -> u8 {
        self as u8
    }

    fn from_check(ok: bool) -> Self {
        if ok {
            Outcome::Verified
        } else {
            Outcome::MathFailure
        }
    }
}

impl From<Outcome> for ExitCode {
    fn from(o: Outcome) -> Self {
        ExitCode::from(o.code())
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("{0}")]
    Math(String),
}

impl CliError {
    pub fn outcome(&self) -> Outcome {
        match self {
            CliError::Io { .. } | CliError::Input(_) => Outcome::Io,
            CliError::Solve(_) => Outcome::Irreducible,
            CliError::Math(_) => Outcome::MathFailure,
        }
    }
}

impl From<BicrossedError> for CliError {
    fn from(e: BicrossedError) -> Self {
        match e {
            BicrossedError::Solve(s) | BicrossedError::Hopf(HopfError::Solve(s)) => CliError::Solve(s),
            other => CliError::Math(other.to_string()),
        }
    }
}

impl From<HopfError> for CliError {
    fn from(e: HopfError) -> Self {
        match e {
            HopfError::Solve(s) => CliError::Solve(s),
            other => CliError::Math(other.to_string()),
        }
    }
}

/// Entry point of the `hopf` binary.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let env = std::env::var(BUDGET_ENV).ok();
    run(&cli, env.as_deref()).into()
}

/// Runs one command; the budget override is passed in explicitly.
pub fn run(cli: &Cli, budget_env: Option<&str>) -> Outcome {
    let result = RunConfig::resolve(cli, budget_env).and_then(|config| dispatch(&cli.command, &config));
    match result {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            e.outcome()
        }
    }
}

fn dispatch(command: &Command, config: &RunConfig) -> Result<Outcome, CliError> {
    match command {
        Command::Catalog {
            action: CatalogCommand::Verify { algebra },
        } => cmd_catalog_verify(config, *algebra),
        Command::Actions {
            action: ActionsCommand::Enumerate { side },
        } => cmd_enumerate(
            config,
            match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            },
        ),
        Command::Actions {
            action: ActionsCommand::Check,
        } => cmd_action_check(config),
        Command::MatchedPairs {
            action: PairsCommand::Find,
        } => cmd_matched_pairs(config),
        Command::MatchedPairs {
            action: PairsCommand::Check,
        } => cmd_pair_check(config),
        Command::Product {
            action: ProductCommand::Build,
        } => cmd_product(config),
        Command::Theorem {
            action: TheoremCommand::Check,
        } => cmd_theorem_check(config),
    }
}

// ---- I/O ----------------------------------------------------------------------

/// Writes `bytes` to `path` through a temporary file in the same directory.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let io = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let dir = path
        .parent()
        .filter(|d| !d.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    fs::create_dir_all(dir).map_err(io)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(bytes).map_err(io)?;
    #[cfg(unix)]
    {
        use std::os::unix::fs::PermissionsExt;
        tmp.as_file()
            .set_permissions(fs::Permissions::from_mode(0o644))
            .map_err(io)?;
    }
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| CliError::Input(e.to_string()))?;
    text.push('\n');
    write_atomic(path, text.as_bytes())
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Writes a report as `<stem>.json` or `<stem>.md` according to the format.
fn write_report<T: Serialize>(
    config: &RunConfig,
    stem: &str,
    value: &T,
    markdown: impl FnOnce() -> String,
) -> Result<(), CliError> {
    match config.format {
        Format::Json => write_json(&config.out.join(format!("{stem}.json")), value),
        Format::Markdown => write_atomic(&config.out.join(format!("{stem}.md")), markdown().as_bytes()),
    }
}

/// File-name form of a display name: `H32,2` -> `h32-2`, `H8⊗H4` -> `h8xh4`.
pub fn slug(name: &str) -> String {
    let mut out = String::new();
    for c in name.chars() {
        match c {
            '⊗' => out.push('x'),
            c if c.is_ascii_alphanumeric() => out.push(c.to_ascii_lowercase()),
            _ => {
                if !out.is_empty() && !out.ends_with('-') {
                    out.push('-');
                }
            }
        }
    }
    out.trim_end_matches('-').to_string()
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

// ---- catalog ------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraReport {
    pub name: String,
    pub dim: usize,
    pub axioms: AxiomReport,
    pub facts: Vec<Fact>,
}

impl AlgebraReport {
    pub fn new(h: &HopfAlgebraData) -> Result<Self, CliError> {
        Ok(AlgebraReport {
            name: h.name.clone(),
            dim: h.dim(),
            axioms: h.verify_axioms(),
            facts: presentation_facts(h)?,
        })
    }

    pub fn passes(&self) -> bool {
        self.axioms.all_passed() && self.facts.iter().all(|f| f.holds)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogReport {
    pub schema: String,
    pub algebras: Vec<AlgebraReport>,
}

impl CatalogReport {
    pub fn passes(&self) -> bool {
        self.algebras.iter().all(AlgebraReport::passes)
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::from("# Axiom verification\n");
        for a in &self.algebras {
            s.push_str(&format!("\n## {} (dimension {})\n\n", a.name, a.dim));
            for c in &a.axioms.checks {
                s.push_str(&format!(
                    "- [{}] {}: {}",
                    pass(c.passed),
                    c.axiom,
                    c.axiom.description()
                ));
                if let Some(w) = c.witnesses.first() {
                    s.push_str(&format!(" — fails on ({}): {}", w.basis.join(", "), w.detail));
                }
                s.push('\n');
            }
            for f in &a.facts {
                s.push_str(&format!("- [{}] {}", pass(f.holds), f.label));
                if !f.holds {
                    s.push_str(&format!(" — lhs = {}, rhs = {}", f.lhs, f.rhs));
                }
                s.push('\n');
            }
        }
        s.push_str(&format!("\nverdict: {}\n", pass(self.passes())));
        s
    }
}

/// `catalog verify`: builds H4, H8 and H8⊗H4 (or loads one algebra), writes
/// their `hopf-algebra/v1` files and the axiom report.
pub fn cmd_catalog_verify(config: &RunConfig, which: AlgebraArg) -> Result<Outcome, CliError> {
    let algebras = match &config.load {
        Some(path) => {
            let data: HopfAlgebraJson = read_json(path)?;
            let h =
                HopfAlgebraData::from_json(&data).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            vec![h]
        }
        None => {
            let (h4, h8) = (build_h4(), build_h8());
            let tensor = tensor_product(&h8, &h4);
            let all = vec![h4, h8, tensor];
            match which {
                AlgebraArg::All => all,
                AlgebraArg::H4 => all.into_iter().take(1).collect(),
                AlgebraArg::H8 => all.into_iter().skip(1).take(1).collect(),
            }
        }
    };
    let mut report = CatalogReport {
        schema: CATALOG_REPORT_SCHEMA.into(),
        algebras: Vec::new(),
    };
    for h in &algebras {
        if config.load.is_none() {
            write_json(&config.out.join(format!("{}.json", slug(&h.name))), &h.to_json())?;
        }
        let r = AlgebraReport::new(h)?;
        println!(
            "{:<8} dim {:>2}  axioms {}  facts {}/{}",
            r.name,
            r.dim,
            pass(r.axioms.all_passed()),
            r.facts.iter().filter(|f| f.holds).count(),
            r.facts.len()
        );
        report.algebras.push(r);
    }
    write_report(config, "catalog-report", &report, || report.to_markdown())?;
    Ok(Outcome::from_check(report.passes()))
}

// ---- actions --------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchSummary {
    pub index: usize,
    pub family: Option<String>,
    pub free: Vec<String>,
    /// Whether the branch was reached through the root split `γ² = −1`.
    pub imaginary_unit_split: bool,
    pub residual: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub schema: String,
    pub side: Side,
    pub solutions_file: String,
    pub branches: usize,
    pub complete: bool,
    pub nodes: usize,
    pub summary: Vec<BranchSummary>,
    /// Reference actions and the branch containing each.
    pub located: Vec<(String, Option<usize>)>,
}

impl EnumerationReport {
    pub fn to_markdown(&self) -> String {
        let mut s = format!(
            "# {} module-coalgebra actions\n\n",
            match self.side {
                Side::Left => "Left",
                Side::Right => "Right",
            }
        );
        s.push_str(&format!(
            "- branches: {}\n- complete: {}\n- solver nodes: {}\n- solutions: {}\n",
            self.branches, self.complete, self.nodes, self.solutions_file
        ));
        for (name, at) in &self.located {
            s.push_str(&format!(
                "- {name}: {}\n",
                at.map_or("not found".to_string(), |k| format!("branch {k}"))
            ));
        }
        s.push_str("\n| branch | family | free | γ² = −1 split | residual |\n|---|---|---|---|---|\n");
        for b in &self.summary {
            s.push_str(&format!(
                "| {} | {} | {} | {} | {} |\n",
                b.index,
                b.family.as_deref().unwrap_or("-"),
                match b.free.len() {
                    0 => "-".to_string(),
                    1..=4 => b.free.join(", "),
                    n => format!("{n} unknowns"),
                },
                if b.imaginary_unit_split { "yes" } else { "no" },
                b.residual
            ));
        }
        s
    }
}

/// `actions enumerate`: solves the module-coalgebra system of one side and
/// writes the `solutions/v1` document. The right side carries residual
/// constraints the solver cannot reduce, which exits with code 3.
pub fn cmd_enumerate(config: &RunConfig, side: Side) -> Result<Outcome, CliError> {
    let f = Factors::new();
    let file = match side {
        Side::Left => "solutions-left.json",
        Side::Right => "solutions-right.json",
    };
    let report = match side {
        Side::Left => {
            let e = enumerate_left_actions(&f, config.solve_options())?;
            write_json(&config.out.join(file), &e.to_json())?;
            let json = e.to_json();
            EnumerationReport {
                schema: ENUMERATION_REPORT_SCHEMA.into(),
                side,
                solutions_file: file.into(),
                branches: json.branches.len(),
                complete: json.complete,
                nodes: json.nodes,
                summary: json
                    .branches
                    .iter()
                    .enumerate()
                    .map(|(k, b)| BranchSummary {
                        index: k,
                        family: b.family.clone(),
                        free: b.free.clone(),
                        imaginary_unit_split: e.splits_on_imaginary_unit(k),
                        residual: b.residual.len(),
                    })
                    .collect(),
                located: Vec::new(),
            }
        }
        Side::Right => {
            let opts = SolveOptions {
                allow_residual: true,
                ..config.solve_options()
            };
            let e = enumerate_right_actions(&f, opts)?;
            let json = e.to_json(&f);
            write_json(&config.out.join(file), &json)?;
            EnumerationReport {
                schema: ENUMERATION_REPORT_SCHEMA.into(),
                side,
                solutions_file: file.into(),
                branches: json.branches.len(),
                complete: json.complete,
                nodes: json.nodes,
                summary: json
                    .branches
                    .iter()
                    .enumerate()
                    .map(|(k, b)| BranchSummary {
                        index: k,
                        family: b.family.clone(),
                        free: b.free.clone(),
                        imaginary_unit_split: false,
                        residual: b.residual.len(),
                    })
                    .collect(),
                located: vec![
                    ("trivial ◁".into(), e.locate(&right_trivial(&f))),
                    ("anti-diagonal ◁".into(), e.locate(&right_antidiagonal(&f))),
                ],
            }
        }
    };
    let families = report.summary.iter().filter(|b| b.family.is_some()).count();
    println!(
        "{} side: {} branches ({} matched to named families), complete: {}",
        match side {
            Side::Left => "left",
            Side::Right => "right",
        },
        report.branches,
        families,
        report.complete
    );
    write_report(
        config,
        &format!("enumeration-{}", if side == Side::Left { "left" } else { "right" }),
        &report,
        || report.to_markdown(),
    )?;
    if report.complete {
        Ok(Outcome::Verified)
    } else {
        eprintln!("the system is irreducible: branches keep residual constraints");
        Ok(Outcome::Irreducible)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionReport {
    pub schema: String,
    pub side: Side,
    pub family: Option<String>,
    pub violations: Vec<Violation>,
}

impl ActionReport {
    pub fn to_markdown(&self) -> String {
        let mut s = format!(
            "# Stored {:?} action\n\n- family: {}\n- module coalgebra: {}\n",
            self.side,
            self.family.as_deref().unwrap_or("-"),
            pass(self.violations.is_empty())
        );
        for v in &self.violations {
            s.push_str(&format!("- [FAIL] {v}\n"));
        }
        s
    }
}

/// `actions check --load FILE`: checks a stored `action/v1` table.
pub fn cmd_action_check(config: &RunConfig) -> Result<Outcome, CliError> {
    let path = config.load_path()?;
    let f = Factors::new();
    let data: ActionJson = read_json(path)?;
    let action =
        ConcreteAction::from_json(&data, &f).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let (violations, family) = match action.side {
        Side::Left => (
            check_left_module_coalgebra(&f, &action),
            crate::pairing::classify_left(&f, &action).map(|fam| fam.name()),
        ),
        Side::Right => (
            check_right_module_coalgebra(&f, &action),
            Some(crate::pairing::classify_right(&f, &action).to_string()),
        ),
    };
    let report = ActionReport {
        schema: ACTION_REPORT_SCHEMA.into(),
        side: action.side,
        family,
        violations,
    };
    println!(
        "module coalgebra: {} ({} violations)",
        pass(report.violations.is_empty()),
        report.violations.len()
    );
    write_report(config, "action-report", &report, || report.to_markdown())?;
    Ok(Outcome::from_check(report.violations.is_empty()))
}

// ---- matched pairs --------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairSummary {
    pub name: String,
    pub file: String,
    pub valid: bool,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairsReport {
    pub schema: String,
    pub count: usize,
    pub nodes: usize,
    pub pairs: Vec<PairSummary>,
}

impl PairsReport {
    pub fn passes(&self) -> bool {
        self.pairs.iter().all(|p| p.valid)
    }

    pub fn to_markdown(&self) -> String {
        let mut s = format!(
            "# Matched pairs\n\n- found: {}\n- solver nodes: {}\n\n",
            self.count, self.nodes
        );
        s.push_str("| pair | re-check | file |\n|---|---|---|\n");
        for p in &self.pairs {
            s.push_str(&format!("| {} | {} | {} |\n", p.name, pass(p.valid), p.file));
        }
        for p in self.pairs.iter().filter(|p| !p.valid) {
            s.push_str(&format!("\n## {}\n\n", p.name));
            for v in &p.violations {
                s.push_str(&format!("- [FAIL] {v}\n"));
            }
        }
        s
    }
}

fn pair_summary(pair: &MatchedPair, file: String) -> PairSummary {
    PairSummary {
        name: pair.name(),
        file,
        valid: pair.is_valid(),
        violations: pair.violations.clone(),
    }
}

fn write_pairs(config: &RunConfig, f: &Factors, pairs: &[MatchedPair]) -> Result<Vec<PairSummary>, CliError> {
    let mut out = Vec::new();
    for pair in pairs {
        let file = format!("matched-pairs/{}.json", slug(&pair.name()));
        write_json(&config.out.join(&file), &pair.to_json(f))?;
        out.push(pair_summary(pair, file));
    }
    Ok(out)
}

/// `matched-pairs find`: solves the combined system and writes one
/// `matched-pair/v1` file per pair.
pub fn cmd_matched_pairs(config: &RunConfig) -> Result<Outcome, CliError> {
    let f = Factors::new();
    let search = find_matched_pairs(&f, config.solve_options())?;
    let report = PairsReport {
        schema: MATCHED_PAIRS_REPORT_SCHEMA.into(),
        count: search.pairs.len(),
        nodes: search.nodes,
        pairs: write_pairs(config, &f, &search.pairs)?,
    };
    for p in &report.pairs {
        println!("{:<28} {}", p.name, pass(p.valid));
    }
    write_report(config, "matched-pairs-report", &report, || report.to_markdown())?;
    Ok(Outcome::from_check(report.passes()))
}

/// `matched-pairs check --load FILE`: re-checks a stored pair by direct evaluation.
pub fn cmd_pair_check(config: &RunConfig) -> Result<Outcome, CliError> {
    let f = Factors::new();
    let pair = load_pair(config.load_path()?, &f)?;
    let report = PairsReport {
        schema: MATCHED_PAIRS_REPORT_SCHEMA.into(),
        count: 1,
        nodes: 0,
        pairs: vec![pair_summary(&pair, config.load_path()?.display().to_string())],
    };
    println!("{}: {}", pair.name(), pass(pair.is_valid()));
    for v in &pair.violations {
        println!("  {v}");
    }
    write_report(config, "pair-check", &report, || report.to_markdown())?;
    Ok(Outcome::from_check(pair.is_valid()))
}

fn load_pair(path: &Path, f: &Factors) -> Result<MatchedPair, CliError> {
    let data: MatchedPairJson = read_json(path)?;
    MatchedPair::from_json(&data, f).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

// ---- products -------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductSummary {
    pub name: String,
    pub pair: String,
    pub file: String,
    pub axioms: AxiomReport,
    pub structure_failures: Vec<String>,
    pub invariants: InvariantReport,
}

impl ProductSummary {
    pub fn passes(&self) -> bool {
        self.axioms.all_passed() && self.structure_failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductReport {
    pub schema: String,
    pub products: Vec<ProductSummary>,
}

impl ProductReport {
    pub fn passes(&self) -> bool {
        self.products.iter().all(ProductSummary::passes)
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::from("# Bicrossed products\n");
        for p in &self.products {
            s.push_str(&format!("\n## {} from {}\n\n- file: {}\n", p.name, p.pair, p.file));
            s.push_str(&format!("- Hopf axioms: {}\n", pass(p.axioms.all_passed())));
            for failure in &p.structure_failures {
                s.push_str(&format!("- [FAIL] {failure}\n"));
            }
            s.push('\n');
            s.push_str(&p.invariants.to_markdown());
        }
        s
    }
}

/// Writes a product's algebra and invariant report; returns its summary.
fn write_product(config: &RunConfig, f: &Factors, product: &BicrossedProduct) -> Result<ProductSummary, CliError> {
    let stem = slug(&product.algebra.name);
    let file = format!("products/{stem}.json");
    write_json(&config.out.join(&file), &product.algebra.to_json())?;
    let invariants = product.invariant_report(f, config.solve_options())?;
    write_report(config, &format!("invariants/{stem}"), &invariants, || {
        invariants.to_markdown()
    })?;
    Ok(ProductSummary {
        name: product.algebra.name.clone(),
        pair: product.pair.name(),
        file,
        axioms: product.axioms.clone(),
        structure_failures: product.structure_failures(f),
        invariants,
    })
}

/// `product build`: the bicrossed product of every matched pair, or of the
/// pair stored in `--load`.
pub fn cmd_product(config: &RunConfig) -> Result<Outcome, CliError> {
    let f = Factors::new();
    let pairs = match &config.load {
        Some(path) => vec![load_pair(path, &f)?],
        None => find_matched_pairs(&f, config.solve_options())?.pairs,
    };
    let (products, _) = theorem_report(&f, &pairs)?;
    let mut report = ProductReport {
        schema: PRODUCT_REPORT_SCHEMA.into(),
        products: Vec::new(),
    };
    for product in &products {
        let summary = write_product(config, &f, product)?;
        println!(
            "{:<8} from {:<28} {}",
            summary.name,
            summary.pair,
            pass(summary.passes())
        );
        report.products.push(summary);
    }
    write_report(config, "product-report", &report, || report.to_markdown())?;
    Ok(Outcome::from_check(report.passes()))
}

// ---- theorem --------------------------------------------------------------------

/// `theorem check`: the full pipeline. Writes the matched pairs, the four
/// products, their invariant reports and the theorem report; succeeds iff
/// exactly four pairs are found and every presentation relation holds.
pub fn cmd_theorem_check(config: &RunConfig) -> Result<Outcome, CliError> {
    let f = Factors::new();
    let search = find_matched_pairs(&f, config.solve_options())?;
    write_pairs(config, &f, &search.pairs)?;
    let (products, report) = theorem_report(&f, &search.pairs)?;
    for product in &products {
        write_product(config, &f, product)?;
    }
    write_report(config, "theorem-report", &report, || report.to_markdown())?;
    for row in &report.rows {
        let holds = row.relations.iter().filter(|r| r.holds).count();
        println!(
            "{:<28} -> {:<8} relations {:>2}/{:<2} {}",
            row.pair,
            row.product,
            holds,
            row.relations.len(),
            pass(row.passes())
        );
    }
    println!(
        "matched pairs: {}, verdict: {}",
        report.matched_pairs,
        pass(report.passes())
    );
    Ok(Outcome::from_check(report.passes()))
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Markdown => "markdown",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("hopf").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn slugs_are_file_safe() {
        assert_eq!(slug("H32,2"), "h32-2");
        assert_eq!(slug("H8⊗H4"), "h8xh4");
        assert_eq!(slug("▷3c / anti-diagonal"), "3c-anti-diagonal");
    }

    #[test]
    fn budget_env_overrides_the_flag() {
        let cli = parse(&["--budget", "7", "theorem", "check"]);
        assert_eq!(RunConfig::resolve(&cli, None).unwrap().budget, 7);
        assert_eq!(RunConfig::resolve(&cli, Some("11")).unwrap().budget, 11);
        assert!(RunConfig::resolve(&cli, Some("0")).is_err());
        assert!(Cli::try_parse_from(["hopf", "--budget", "0", "theorem", "check"]).is_err());
    }

    #[test]
    fn solver_failures_map_to_exit_three() {
        let e = CliError::from(BicrossedError::Solve(SolveError::BudgetExhausted { budget: 1 }));
        assert_eq!(e.outcome(), Outcome::Irreducible);
        assert_eq!(CliError::Input("x".into()).outcome(), Outcome::Io);
    }
}
