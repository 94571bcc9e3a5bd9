//! The Sweedler algebra `H4` and the Kac–Paljutkin algebra `H8`, built from
//! generators and relations by normal-form rewriting.
//!
//! A [`Presentation`] lists oriented rewrite rules `word -> Σ c·word`. Words
//! are rewritten until no left-hand side occurs; the surviving words are the
//! PBW-style basis. Coproduct, counit and antipode are given on generators and
//! extended (anti-)multiplicatively, then tabulated into structure constants.
//! Nothing is trusted: the tabulated algebra is re-checked by
//! [`HopfAlgebraData::verify_axioms`].

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hopf::{accumulate, Element, HopfAlgebraData, HopfError, Tensor2};
use crate::linalg::{Matrix, Vector};
use crate::scalar::Scalar;

/// Default number of rewrite steps before [`Presentation::normalize`] gives up.
pub const DEFAULT_STEP_BUDGET: usize = 10_000;

pub type Word = Vec<usize>;
/// Linear combination of words.
pub type Combination = BTreeMap<Word, Scalar>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("rewriting of {word:?} did not terminate within {budget} steps")]
    NonTerminating { word: String, budget: usize },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(char),
    #[error("word {0:?} normalizes outside the declared basis")]
    NotInBasis(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

/// Which redex to rewrite first; normal forms must not depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

#[derive(Debug, Clone)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Vec<(Scalar, Word)>,
}

/// Generators, rewrite rules, normal-form basis and the coalgebra data on generators.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub name: String,
    /// Single-character generator names.
    pub generators: Vec<char>,
    pub rules: Vec<Rule>,
    pub basis: Vec<Word>,
    /// `Δ(generator)` as `(c, left word, right word)`.
    pub coproduct: Vec<Vec<(Scalar, Word, Word)>>,
    pub counit: Vec<Scalar>,
    pub antipode: Vec<Vec<(Scalar, Word)>>,
}

impl Presentation {
    /// Parses a word such as `"ghz"`; `"1"` and `""` are the empty word.
    pub fn word(&self, text: &str) -> Result<Word, CatalogError> {
        if text == "1" {
            return Ok(Vec::new());
        }
        text.chars()
            .map(|ch| {
                self.generators
                    .iter()
                    .position(|&g| g == ch)
                    .ok_or(CatalogError::UnknownGenerator(ch))
            })
            .collect()
    }

    /// Label of a word, `"1"` for the empty word.
    pub fn label(&self, word: &[usize]) -> String {
        if word.is_empty() {
            "1".to_string()
        } else {
            word.iter().map(|&g| self.generators[g]).collect()
        }
    }

    pub fn basis_labels(&self) -> Vec<String> {
        self.basis.iter().map(|w| self.label(w)).collect()
    }

    /// Normal form of `word` (leftmost rewriting, default budget).
    pub fn normalize(&self, word: &[usize]) -> Result<Combination, CatalogError> {
        self.normalize_with(word, Strategy::Leftmost, DEFAULT_STEP_BUDGET)
    }

    /// Normal form of a word given as text, e.g. `"zg"`.
    pub fn normalize_str(&self, text: &str) -> Result<Combination, CatalogError> {
        self.normalize(&self.word(text)?)
    }

    pub fn normalize_with(
        &self,
        word: &[usize],
        strategy: Strategy,
        budget: usize,
    ) -> Result<Combination, CatalogError> {
        let mut out = Combination::new();
        let mut work: Vec<(Word, Scalar)> = vec![(word.to_vec(), Scalar::one())];
        let mut steps = 0;
        while let Some((w, c)) = work.pop() {
            match self.find_redex(&w, strategy) {
                None => accumulate(&mut out, w, c),
                Some((pos, rule)) => {
                    steps += 1;
                    if steps > budget {
                        return Err(CatalogError::NonTerminating {
                            word: self.label(word),
                            budget,
                        });
                    }
                    for (d, replacement) in &rule.rhs {
                        let mut next = w[..pos].to_vec();
                        next.extend_from_slice(replacement);
                        next.extend_from_slice(&w[pos + rule.lhs.len()..]);
                        work.push((next, &c * d));
                    }
                }
            }
        }
        Ok(out)
    }

    fn find_redex(&self, w: &[usize], strategy: Strategy) -> Option<(usize, &Rule)> {
        let matches_at = |pos: usize| {
            self.rules
                .iter()
                .find(|r| w.len() >= pos + r.lhs.len() && w[pos..pos + r.lhs.len()] == r.lhs[..])
                .map(|r| (pos, r))
        };
        match strategy {
            Strategy::Leftmost => (0..w.len()).find_map(matches_at),
            Strategy::Rightmost => (0..w.len()).rev().find_map(matches_at),
        }
    }

    /// All words of length at most `max_len`, shortest first.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        let n = self.generators.len();
        let mut out = vec![Vec::new()];
        let mut layer: Vec<Word> = vec![Vec::new()];
        for _ in 0..max_len {
            layer = layer
                .iter()
                .flat_map(|w| {
                    (0..n).map(move |g| {
                        let mut next = w.clone();
                        next.push(g);
                        next
                    })
                })
                .collect();
            out.extend(layer.iter().cloned());
        }
        out
    }

    /// Words (up to `max_len`) whose leftmost and rightmost normal forms differ.
    pub fn confluence_failures(&self, max_len: usize) -> Result<Vec<String>, CatalogError> {
        let mut bad = Vec::new();
        for w in self.words_up_to(max_len) {
            let left = self.normalize_with(&w, Strategy::Leftmost, DEFAULT_STEP_BUDGET)?;
            let right = self.normalize_with(&w, Strategy::Rightmost, DEFAULT_STEP_BUDGET)?;
            if left != right {
                bad.push(self.label(&w));
            }
        }
        Ok(bad)
    }

    /// Words (up to `max_len`) for which normalizing the normal form changes it,
    /// or whose normal form leaves the declared basis.
    pub fn projection_failures(&self, max_len: usize) -> Result<Vec<String>, CatalogError> {
        let mut bad = Vec::new();
        for w in self.words_up_to(max_len) {
            let nf = self.normalize(&w)?;
            let mut again = Combination::new();
            for (u, c) in &nf {
                for (v, d) in self.normalize(u)? {
                    accumulate(&mut again, v, c * &d);
                }
            }
            if again != nf || nf.keys().any(|u| !self.basis.contains(u)) {
                bad.push(self.label(&w));
            }
        }
        Ok(bad)
    }

    fn coords(&self, comb: &Combination) -> Result<Vec<(usize, Scalar)>, CatalogError> {
        comb.iter()
            .map(|(w, c)| {
                self.basis
                    .iter()
                    .position(|b| b == w)
                    .map(|i| (i, c.clone()))
                    .ok_or_else(|| CatalogError::NotInBasis(self.label(w)))
            })
            .collect()
    }

    fn multiply_words(&self, a: &[usize], b: &[usize]) -> Result<Combination, CatalogError> {
        let mut w = a.to_vec();
        w.extend_from_slice(b);
        self.normalize(&w)
    }

    /// Tabulates structure constants on the normal-form basis.
    pub fn build(&self) -> Result<HopfAlgebraData, CatalogError> {
        let dim = self.basis.len();
        let mut mul = Vec::new();
        for (i, a) in self.basis.iter().enumerate() {
            for (j, b) in self.basis.iter().enumerate() {
                for (k, c) in self.coords(&self.multiply_words(a, b)?)? {
                    mul.push((i, j, k, c));
                }
            }
        }

        let mut comul = Vec::new();
        let mut counit = Vector::zeros(dim);
        let mut antipode = Matrix::zeros(dim, dim);
        for (i, w) in self.basis.iter().enumerate() {
            // Δ(g1…gk) = Δ(g1)…Δ(gk) in H ⊗ H.
            let mut delta: BTreeMap<(Word, Word), Scalar> = BTreeMap::new();
            delta.insert((Vec::new(), Vec::new()), Scalar::one());
            let mut eps = Scalar::one();
            // S(g1…gk) = S(gk)…S(g1).
            let mut s: Combination = [(Vec::new(), Scalar::one())].into_iter().collect();
            for &g in w {
                let mut next = BTreeMap::new();
                for ((l, r), c) in &delta {
                    for (d, gl, gr) in &self.coproduct[g] {
                        let left = self.multiply_words(l, gl)?;
                        let right = self.multiply_words(r, gr)?;
                        for (lw, lc) in &left {
                            for (rw, rc) in &right {
                                accumulate(&mut next, (lw.clone(), rw.clone()), &(&(c * d) * lc) * rc);
                            }
                        }
                    }
                }
                delta = next;
                eps *= &self.counit[g];
                let mut next = Combination::new();
                for (d, sg) in &self.antipode[g] {
                    for (u, c) in &s {
                        for (v, e) in self.multiply_words(sg, u)? {
                            accumulate(&mut next, v, &(d * c) * &e);
                        }
                    }
                }
                s = next;
            }
            for ((l, r), c) in delta {
                let li = self.coords(&[(l, Scalar::one())].into_iter().collect())?[0].0;
                let ri = self.coords(&[(r, Scalar::one())].into_iter().collect())?[0].0;
                comul.push((i, li, ri, c));
            }
            counit[i] = eps;
            for (k, c) in self.coords(&s)? {
                antipode[(k, i)] = c;
            }
        }
        let unit_index = self.coords(&[(Vec::new(), Scalar::one())].into_iter().collect())?[0].0;
        Ok(HopfAlgebraData::new(
            self.name.clone(),
            self.basis_labels(),
            mul,
            Vector::unit(dim, unit_index),
            comul,
            counit,
            antipode,
        )?)
    }

    /// Renders a combination with word labels.
    pub fn render(&self, comb: &Combination) -> String {
        crate::hopf::render_terms(comb.iter().map(|(w, c)| (c, self.label(w))))
    }

    /// Sweedler's algebra: `G² = 1, X² = 0, XG = −GX`, `G` group-like,
    /// `Δ(X) = X⊗G + 1⊗X`, `S(X) = GX`.
    pub fn h4() -> Presentation {
        let (g, x) = (0, 1);
        let one = Scalar::one;
        Presentation {
            name: "H4".into(),
            generators: vec!['G', 'X'],
            rules: vec![
                Rule {
                    lhs: vec![g, g],
                    rhs: vec![(one(), vec![])],
                },
                Rule {
                    lhs: vec![x, x],
                    rhs: vec![],
                },
                Rule {
                    lhs: vec![x, g],
                    rhs: vec![(-one(), vec![g, x])],
                },
            ],
            basis: vec![vec![], vec![g], vec![x], vec![g, x]],
            coproduct: vec![
                vec![(one(), vec![g], vec![g])],
                vec![(one(), vec![x], vec![g]), (one(), vec![], vec![x])],
            ],
            counit: vec![one(), Scalar::zero()],
            antipode: vec![vec![(one(), vec![g])], vec![(one(), vec![g, x])]],
        }
    }

    /// The Kac–Paljutkin algebra: `g² = h² = 1, gh = hg, gz = zh, hz = zg`,
    /// `z² = ½(1 + g + h − gh)`, `g, h` group-like, `Δ(z) = J(z⊗z)` with
    /// `J = ½(1⊗1 + g⊗1 + 1⊗h − g⊗h)`, `ε(z) = 1`, `S(z) = z`.
    pub fn h8() -> Presentation {
        let (g, h, z) = (0, 1, 2);
        let one = Scalar::one;
        let half = || Scalar::frac(1, 2);
        Presentation {
            name: "H8".into(),
            generators: vec!['g', 'h', 'z'],
            rules: vec![
                Rule {
                    lhs: vec![g, g],
                    rhs: vec![(one(), vec![])],
                },
                Rule {
                    lhs: vec![h, h],
                    rhs: vec![(one(), vec![])],
                },
                Rule {
                    lhs: vec![h, g],
                    rhs: vec![(one(), vec![g, h])],
                },
                Rule {
                    lhs: vec![z, g],
                    rhs: vec![(one(), vec![h, z])],
                },
                Rule {
                    lhs: vec![z, h],
                    rhs: vec![(one(), vec![g, z])],
                },
                Rule {
                    lhs: vec![z, z],
                    rhs: vec![
                        (half(), vec![]),
                        (half(), vec![g]),
                        (half(), vec![h]),
                        (-half(), vec![g, h]),
                    ],
                },
            ],
            basis: vec![
                vec![],
                vec![g],
                vec![h],
                vec![g, h],
                vec![z],
                vec![g, z],
                vec![h, z],
                vec![g, h, z],
            ],
            coproduct: vec![
                vec![(one(), vec![g], vec![g])],
                vec![(one(), vec![h], vec![h])],
                vec![
                    (half(), vec![z], vec![z]),
                    (half(), vec![g, z], vec![z]),
                    (half(), vec![z], vec![h, z]),
                    (-half(), vec![g, z], vec![h, z]),
                ],
            ],
            counit: vec![one(), one(), one()],
            antipode: vec![vec![(one(), vec![g])], vec![(one(), vec![h])], vec![(one(), vec![z])]],
        }
    }
}

/// `H4` with basis `(1, G, X, GX)`.
pub fn build_h4() -> HopfAlgebraData {
    Presentation::h4().build().expect("the H4 presentation is well-formed")
}

/// `H8` with basis `(1, g, h, gh, z, gz, hz, ghz)`.
pub fn build_h8() -> HopfAlgebraData {
    Presentation::h8().build().expect("the H8 presentation is well-formed")
}

/// A defining identity of `H4` or `H8`, evaluated in a tabulated algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fact {
    pub label: String,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
}

impl Fact {
    fn elements(label: &str, lhs: &Element<'_>, rhs: &Element<'_>) -> Self {
        Fact {
            label: label.into(),
            holds: lhs.coords() == rhs.coords(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    fn tensors(h: &HopfAlgebraData, label: &str, lhs: &Tensor2, rhs: &Tensor2) -> Self {
        let nonzero = |t: &Tensor2| -> Tensor2 {
            t.iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (*k, c.clone()))
                .collect()
        };
        Fact {
            label: label.into(),
            holds: nonzero(lhs) == nonzero(rhs),
            lhs: h.render_tensor(lhs),
            rhs: h.render_tensor(rhs),
        }
    }
}

fn tensor(h: &HopfAlgebraData, terms: &[(Scalar, &str, &str)]) -> Result<Tensor2, HopfError> {
    let index = |l: &str| h.index_of(l).ok_or_else(|| HopfError::UnknownLabel(l.to_string()));
    let mut t = Tensor2::new();
    for (c, a, b) in terms {
        accumulate(&mut t, (index(a)?, index(b)?), c.clone());
    }
    Ok(t)
}

/// The identities of the presentation an algebra's basis belongs to.
///
/// Algebras whose basis is neither the `H4` nor the `H8` basis have no
/// presentation facts; the list is empty.
pub fn presentation_facts(h: &HopfAlgebraData) -> Result<Vec<Fact>, HopfError> {
    let one = Scalar::one;
    let half = || Scalar::frac(1, 2);
    if h.basis() == Presentation::h8().basis_labels() {
        let (g, hh, z) = (h.elem("g")?, h.elem("h")?, h.elem("z")?);
        let z2 = h.combination(&[(half(), "1"), (half(), "g"), (half(), "h"), (-half(), "gh")])?;
        let delta_z = tensor(
            h,
            &[
                (half(), "z", "z"),
                (half(), "gz", "z"),
                (half(), "z", "hz"),
                (-half(), "gz", "hz"),
            ],
        )?;
        return Ok(vec![
            Fact::elements("H8: g² = 1", &g.pow(2), &h.one()),
            Fact::elements("H8: h² = 1", &hh.pow(2), &h.one()),
            Fact::elements("H8: gh = hg", &(&g * &hh), &(&hh * &g)),
            Fact::elements("H8: gz = zh", &(&g * &z), &(&z * &hh)),
            Fact::elements("H8: hz = zg", &(&hh * &z), &(&z * &g)),
            Fact::elements("H8: z² = ½(1 + g + h − gh)", &z.pow(2), &z2),
            Fact::elements("H8: z⁴ = 1", &z.pow(4), &h.one()),
            Fact::tensors(h, "H8: Δ(z) = ½(z⊗z + gz⊗z + z⊗hz − gz⊗hz)", &z.comultiply(), &delta_z),
            Fact::elements("H8: S(z) = z", &z.antipode(), &z),
        ]);
    }
    if h.basis() == Presentation::h4().basis_labels() {
        let (g, x) = (h.elem("G")?, h.elem("X")?);
        let delta_x = tensor(h, &[(one(), "X", "G"), (one(), "1", "X")])?;
        return Ok(vec![
            Fact::elements("H4: G² = 1", &g.pow(2), &h.one()),
            Fact::elements("H4: X² = 0", &x.pow(2), &h.zero()),
            Fact::elements("H4: XG = −GX", &(&x * &g), &-&(&g * &x)),
            Fact::tensors(h, "H4: Δ(X) = X⊗G + 1⊗X", &x.comultiply(), &delta_x),
            Fact::elements("H4: S(X) = GX", &x.antipode(), &h.elem("GX")?),
        ]);
    }
    Ok(Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comb(p: &Presentation, terms: &[(Scalar, &str)]) -> Combination {
        let mut out = Combination::new();
        for (c, w) in terms {
            accumulate(&mut out, p.word(w).unwrap(), c.clone());
        }
        out
    }

    #[test]
    fn rewriting_examples() {
        let p8 = Presentation::h8();
        assert_eq!(p8.normalize_str("zg").unwrap(), comb(&p8, &[(Scalar::one(), "hz")]));
        let half = Scalar::frac(1, 2);
        assert_eq!(
            p8.normalize_str("zz").unwrap(),
            comb(
                &p8,
                &[
                    (half.clone(), "1"),
                    (half.clone(), "g"),
                    (half.clone(), "h"),
                    (-half, "gh")
                ]
            )
        );
        let p4 = Presentation::h4();
        assert!(p4.normalize_str("XX").unwrap().is_empty());
        assert_eq!(p4.normalize_str("XG").unwrap(), comb(&p4, &[(-Scalar::one(), "GX")]));
    }

    #[test]
    fn presentations_are_confluent_projections() {
        for p in [Presentation::h4(), Presentation::h8()] {
            assert!(p.confluence_failures(4).unwrap().is_empty(), "{}", p.name);
            assert!(p.projection_failures(4).unwrap().is_empty(), "{}", p.name);
        }
    }

    #[test]
    fn looping_rules_hit_the_budget() {
        let mut p = Presentation::h4();
        p.rules.push(Rule {
            lhs: vec![0, 1],
            rhs: vec![(-Scalar::one(), vec![1, 0])],
        });
        assert!(matches!(
            p.normalize_with(&[1, 0], Strategy::Leftmost, 50),
            Err(CatalogError::NonTerminating { .. })
        ));
    }

    #[test]
    fn builders_pass_axioms() {
        for h in [build_h4(), build_h8()] {
            let report = h.verify_axioms();
            assert!(report.all_passed(), "{report}");
        }
    }

    #[test]
    fn presentation_facts_hold() {
        for h in [build_h4(), build_h8()] {
            let facts = presentation_facts(&h).unwrap();
            assert!(!facts.is_empty());
            for fact in facts {
                assert!(fact.holds, "{}: {} vs {}", fact.label, fact.lhs, fact.rhs);
            }
        }
        let t = crate::hopf::tensor_product(&build_h8(), &build_h4());
        assert!(presentation_facts(&t).unwrap().is_empty());
    }

    #[test]
    fn h4_data() {
        let h4 = build_h4();
        assert_eq!(h4.basis(), ["1", "G", "X", "GX"]);
        let x = h4.elem("X").unwrap();
        let g = h4.elem("G").unwrap();
        assert_eq!(&x * &g, -&h4.elem("GX").unwrap());
        assert_eq!(x.antipode(), h4.elem("GX").unwrap());
        let counit: Vec<Scalar> = h4.counit_vector().iter().cloned().collect();
        assert_eq!(counit, [1, 1, 0, 0].map(Scalar::from_int));
        assert_eq!(h4.render_tensor(&x.comultiply()), "1⊗X + X⊗G");
    }

    #[test]
    fn h8_data() {
        let h8 = build_h8();
        let z = h8.elem("z").unwrap();
        assert_eq!(z.pow(4), h8.one());
        assert_eq!(
            h8.render_tensor(&z.comultiply()),
            "1/2*z⊗z + 1/2*z⊗hz + 1/2*gz⊗z - 1/2*gz⊗hz"
        );
        let (g, h) = (h8.elem("g").unwrap(), h8.elem("h").unwrap());
        assert_eq!(&g * &z, &z * &h);
        // Structure constants have denominators in {1, 2} and no imaginary parts.
        let json = h8.to_json();
        for (_, _, _, c) in json.mul.iter().chain(json.comul.iter()) {
            assert!(c.is_real());
            assert!([1, 2].map(num_bigint::BigInt::from).contains(c.re().denom()));
        }
    }
}
