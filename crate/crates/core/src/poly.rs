//! Sparse multivariate polynomials over `Q(i)` in named unknowns.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// Index of an unknown inside an [`Unknowns`] registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Var(pub u32);

/// Name registry for the unknowns of a system.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Unknowns {
    names: Vec<String>,
    index: HashMap<String, Var>,
}

impl Unknowns {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the unknown called `name`, registering it on first use.
    pub fn var(&mut self, name: &str) -> Var {
        if let Some(&v) = self.index.get(name) {
            return v;
        }
        let v = Var(self.names.len() as u32);
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), v);
        v
    }

    pub fn lookup(&self, name: &str) -> Option<Var> {
        self.index.get(name).copied()
    }

    pub fn name(&self, v: Var) -> &str {
        &self.names[v.0 as usize]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        (0..self.names.len() as u32).map(Var)
    }
}

/// A monomial as a sorted list of `(variable, exponent)` pairs, exponents > 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.binary_search_by_key(&v, |&(w, _)| w).map_or(0, |k| self.0[k].1)
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            let d = if j < other.0.len() && other.0[j].0 == v {
                j += 1;
                other.0[j - 1].1
            } else {
                0
            };
            match e.cmp(&d) {
                Ordering::Less => return None,
                Ordering::Equal => {}
                Ordering::Greater => out.push((v, e - d)),
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Splits off the power of `v`: `self = v^e * rest`.
    pub fn split_var(&self, v: Var) -> (u32, Monomial) {
        match self.0.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(k) => {
                let mut rest = self.0.clone();
                let (_, e) = rest.remove(k);
                (e, Monomial(rest))
            }
            Err(_) => (0, self.clone()),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .filter_map(|&(v, e)| {
                    let d = other.exponent(v);
                    (d > 0).then(|| (v, e.min(d)))
                })
                .collect(),
        )
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order with lower-indexed unknowns ranking higher.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0) {
                if a.0 != b.0 {
                    // The monomial containing the lower-indexed unknown is larger.
                    return b.0.cmp(&a.0);
                }
                if a.1 != b.1 {
                    return a.1.cmp(&b.1);
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in canonical form: no zero coefficients, monomials ordered.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn one() -> Self {
        Poly::constant(Scalar::one())
    }

    pub fn var(v: Var) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::var(v), Scalar::one());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Scalar> {
        if self.is_zero() {
            Some(Scalar::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().next_back().map_or(0, Monomial::degree)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|&(v, _)| v))
            .collect()
    }

    pub fn contains(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some((_, c)) if !c.is_one() => self.scale(&c.inv().expect("nonzero coefficient")),
            _ => self.clone(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Poly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Poly) {
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a * c);
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), other);
        out
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Scalar::one())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Replaces `v` by `value`.
    pub fn substitute(&self, v: Var, value: &Poly) -> Poly {
        if !self.contains(v) {
            return self.clone();
        }
        let mut powers: Vec<Poly> = vec![Poly::one()];
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(v);
            if e == 0 {
                out.add_term(rest, c.clone());
                continue;
            }
            while powers.len() <= e as usize {
                let next = powers.last().unwrap().mul(value);
                powers.push(next);
            }
            for (pm, pc) in &powers[e as usize].terms {
                out.add_term(rest.mul(pm), c * pc);
            }
        }
        out
    }

    /// Simultaneous substitution of several unknowns.
    pub fn substitute_all(&self, values: &BTreeMap<Var, Poly>) -> Poly {
        let mut out = Poly::zero();
        let mut cache: HashMap<(Var, u32), Poly> = HashMap::new();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            let mut kept = Monomial::one();
            for &(v, e) in m.factors() {
                match values.get(&v) {
                    Some(val) => {
                        let p = cache.entry((v, e)).or_insert_with(|| val.pow(e));
                        term = term.mul(p);
                    }
                    None => kept = kept.mul(&Monomial(vec![(v, e)])),
                }
            }
            if !kept.is_one() {
                term = term.mul(&Poly::from_terms([(kept, Scalar::one())]));
            }
            out.add_assign(&term);
        }
        out
    }

    /// Evaluates at a full assignment; unknowns missing from `values` are an error.
    pub fn eval(&self, values: &BTreeMap<Var, Scalar>) -> Option<Scalar> {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.factors() {
                t = &t * &values.get(&v)?.pow(e);
            }
            acc += &t;
        }
        Some(acc)
    }

    /// For `v` occurring only as the bare linear term `c*v`, returns
    /// `(c, self - c*v)`.
    pub fn isolate(&self, v: Var) -> Option<(Scalar, Poly)> {
        let mut coeff = None;
        for (m, c) in &self.terms {
            match m.exponent(v) {
                0 => {}
                1 if m.factors().len() == 1 => coeff = Some(c.clone()),
                _ => return None,
            }
        }
        let c = coeff?;
        let mut rest = self.clone();
        rest.terms.remove(&Monomial::var(v));
        Some((c, rest))
    }

    /// Writes `self = v * high + low` where `low` does not contain `v`;
    /// only meaningful when `degree_in(v) == 1`.
    pub fn split_linear(&self, v: Var) -> (Poly, Poly) {
        let mut high = Poly::zero();
        let mut low = Poly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(v);
            match e {
                0 => low.add_term(rest, c.clone()),
                1 => high.add_term(rest, c.clone()),
                _ => panic!("split_linear on a term of degree {e}"),
            }
        }
        (high, low)
    }

    /// Coefficients of `v^0`, `v^1`, `v^2`, ... as polynomials in the rest.
    pub fn coefficients_in(&self, v: Var) -> Vec<Poly> {
        let mut out = vec![Poly::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(v);
            out[e as usize].add_term(rest, c.clone());
        }
        out
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        it.fold(first.clone(), |g, m| g.gcd(m))
    }

    pub fn div_monomial(&self, m: &Monomial) -> Option<Poly> {
        let mut out = Poly::zero();
        for (t, c) in &self.terms {
            out.add_term(t.div(m)?, c.clone());
        }
        Some(out)
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (lm, lc) = divisor.leading()?;
        let lc_inv = lc.inv().ok()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.leading() {
            let qm = m.div(lm)?;
            let qc = c * &lc_inv;
            let step = Poly::from_terms([(qm, qc)]);
            rem = rem.sub(&step.mul(divisor));
            quot.add_assign(&step);
        }
        Some(quot)
    }

    /// Renders with the unknown names from `unknowns`, highest monomial first.
    pub fn render(&self, unknowns: &Unknowns) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let coeff = if m.is_one() {
                c.to_string()
            } else if c.is_one() {
                String::new()
            } else if (-c).is_one() {
                "-".into()
            } else if c.is_real() || c.re().is_zero() {
                format!("{c}*")
            } else {
                format!("({c})*")
            };
            if k > 0 {
                if let Some(stripped) = coeff.strip_prefix('-') {
                    out.push_str(" - ");
                    out.push_str(stripped);
                } else {
                    out.push_str(" + ");
                    out.push_str(&coeff);
                }
            } else {
                out.push_str(&coeff);
            }
            let mut first = true;
            for &(v, e) in m.factors() {
                if !first {
                    out.push('*');
                }
                first = false;
                out.push_str(unknowns.name(v));
                if e > 1 {
                    let _ = write!(out, "^{e}");
                }
            }
        }
        out
    }
}

impl From<Scalar> for Poly {
    fn from(c: Scalar) -> Self {
        Poly::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn setup() -> (Unknowns, Poly, Poly, Poly) {
        let mut u = Unknowns::new();
        let x = Poly::var(u.var("x"));
        let y = Poly::var(u.var("y"));
        let z = Poly::var(u.var("z"));
        (u, x, y, z)
    }

    #[test]
    fn substitution_annihilates() {
        let (u, x, y, _) = setup();
        let xy = x.mul(&y);
        assert!(xy.substitute(u.lookup("x").unwrap(), &Poly::zero()).is_zero());
    }

    #[test]
    fn render_is_readable() {
        let (u, x, y, _) = setup();
        let p = x
            .mul(&x)
            .scale(&Scalar::frac(1, 2))
            .sub(&y)
            .add(&Poly::constant(Scalar::i()));
        assert_eq!(p.render(&u), "1/2*x^2 - y + i");
        let q = x.scale(&"1+i".parse().unwrap());
        assert_eq!(q.render(&u), "(1+i)*x");
    }

    #[test]
    fn isolate_and_content() {
        let (u, x, y, _) = setup();
        let vx = u.lookup("x").unwrap();
        let p = x.scale(&Scalar::from_int(2)).add(&y.mul(&y));
        let (c, rest) = p.isolate(vx).unwrap();
        assert_eq!(c, Scalar::from_int(2));
        assert_eq!(rest, y.mul(&y));
        assert!(x.mul(&y).add(&x).isolate(vx).is_none());
        let q = x.mul(&x).mul(&y).sub(&x.mul(&y));
        assert_eq!(
            q.monomial_content(),
            Monomial::var(vx).mul(&Monomial::var(u.lookup("y").unwrap()))
        );
    }

    #[test]
    fn exact_division() {
        let (_, x, y, z) = setup();
        let a = x.add(&y).sub(&Poly::one());
        let b = x.sub(&z.scale(&Scalar::i()));
        assert_eq!(a.mul(&b).div_exact(&a), Some(b.clone()));
        assert_eq!(a.mul(&b).add(&Poly::one()).div_exact(&a), None);
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec(((0u32..3, 0u32..3, 0u32..2), -4i64..5), 0..6).prop_map(|ts| {
            Poly::from_terms(ts.into_iter().map(|((a, b, c), k)| {
                let mut m = Vec::new();
                for (v, e) in [(0, a), (1, b), (2, c)] {
                    if e > 0 {
                        m.push((Var(v), e));
                    }
                }
                (Monomial(m), Scalar::from_int(k))
            }))
        })
    }

    fn point() -> BTreeMap<Var, Scalar> {
        [
            (Var(0), Scalar::frac(1, 3)),
            (Var(1), Scalar::i()),
            (Var(2), Scalar::from_int(-2)),
        ]
        .into_iter()
        .collect()
    }

    proptest! {
        #[test]
        fn ring_laws_hold_pointwise(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            let at = point();
            let e = |f: &Poly| f.eval(&at).unwrap();
            prop_assert_eq!(e(&p.mul(&q.add(&r))), &e(&p) * &(&e(&q) + &e(&r)));
            prop_assert_eq!(p.mul(&q), q.mul(&p));
            prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        }

        #[test]
        fn substitution_commutes_with_evaluation(p in arb_poly(), q in arb_poly()) {
            let at = point();
            let mut moved = at.clone();
            moved.insert(Var(0), q.eval(&at).unwrap());
            prop_assert_eq!(p.substitute(Var(0), &q).eval(&at).unwrap(), p.eval(&moved).unwrap());
        }

        #[test]
        fn division_recovers_factor(p in arb_poly(), q in arb_poly()) {
            prop_assume!(!q.is_zero());
            prop_assert_eq!(p.mul(&q).div_exact(&q), Some(p));
        }
    }
}
