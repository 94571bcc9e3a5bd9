//! Compilation of the module-coalgebra and matched-pair axioms into
//! polynomial systems over the table unknowns.
//!
//! Every axiom is instantiated on all basis tuples; each coefficient of the
//! difference of the two sides becomes one constraint.

use std::collections::BTreeMap;

use super::tables::{basis_vec, constant_vec, mul_poly, product_vec, ActionTable, Factors, PolyVec, Side};
use crate::hopf::HopfAlgebraData;
use crate::poly::{Poly, Unknowns};
use crate::solve::PolySystem;

type PolyTensor = BTreeMap<(usize, usize), Poly>;

fn push_vec(system: &mut PolySystem, diff: PolyVec, target: &HopfAlgebraData, origin: &str) {
    for (k, p) in diff.into_iter().enumerate() {
        if !p.is_zero() {
            system.push(p, format!("{origin} [{}]", target.label(k)));
        }
    }
}

fn push_tensor(
    system: &mut PolySystem,
    diff: PolyTensor,
    left: &HopfAlgebraData,
    right: &HopfAlgebraData,
    origin: &str,
) {
    for ((j, k), p) in diff {
        if !p.is_zero() {
            system.push(p, format!("{origin} [{}⊗{}]", left.label(j), right.label(k)));
        }
    }
}

fn sub_vec(a: &[Poly], b: &[Poly]) -> PolyVec {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

fn add_outer(t: &mut PolyTensor, c: &crate::scalar::Scalar, u: &[Poly], v: &[Poly]) {
    for (j, uj) in u.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
        for (k, vk) in v.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
            t.entry((j, k)).or_insert_with(Poly::zero).add_scaled(c, &uj.mul(vk));
        }
    }
}

fn comul_poly(h: &HopfAlgebraData, v: &[Poly]) -> PolyTensor {
    let mut t = PolyTensor::new();
    for (i, vi) in v.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
        for (j, k, c) in h.coproduct_terms(i) {
            t.entry((*j, *k)).or_insert_with(Poly::zero).add_scaled(c, vi);
        }
    }
    t
}

fn counit_poly(h: &HopfAlgebraData, v: &[Poly]) -> Poly {
    let mut out = Poly::zero();
    for (vi, e) in v.iter().zip(h.counit_vector().iter()) {
        out.add_scaled(e, vi);
    }
    out
}

fn tensor_sub(mut a: PolyTensor, b: PolyTensor) -> PolyTensor {
    for (key, p) in b {
        let e = a.entry(key).or_insert_with(Poly::zero);
        *e = e.sub(&p);
    }
    a
}

/// `H4` as a left `H8`-module coalgebra under `▷`:
/// `1▷a = a`, `(xy)▷a = x▷(y▷a)`, `Δ(x▷a) = Σ x1▷a1 ⊗ x2▷a2`,
/// `ε(x▷a) = ε(x)ε(a)`, and `x▷1 = ε(x)1`.
pub fn left_module_coalgebra_system(f: &Factors, left: &ActionTable, unknowns: &Unknowns) -> PolySystem {
    assert_eq!(left.side, Side::Left);
    let (h4, h8) = (&f.h4, &f.h8);
    let mut s = PolySystem::new(unknowns.clone());
    let one8 = f.x("1");
    for a in 0..h4.dim() {
        let ea = basis_vec(h4.dim(), a);
        let lhs = left.get(one8, a).to_vec();
        push_vec(&mut s, sub_vec(&lhs, &ea), h4, &format!("unit: 1▷{}", h4.label(a)));
    }
    for x in 0..h8.dim() {
        let eps = h8.counit_vector()[x].clone();
        let expected = constant_vec(&h4.unit_vector().scale(&eps));
        push_vec(
            &mut s,
            sub_vec(left.get(x, f.a("1")), &expected),
            h4,
            &format!("normalization: {}▷1", h8.label(x)),
        );
    }
    for x in 0..h8.dim() {
        for y in 0..h8.dim() {
            let xy = product_vec(h8, x, y);
            for a in 0..h4.dim() {
                let ea = basis_vec(h4.dim(), a);
                let lhs = left.act(&xy, &ea);
                let rhs = left.act_basis_left(x, left.get(y, a));
                push_vec(
                    &mut s,
                    sub_vec(&lhs, &rhs),
                    h4,
                    &format!("module: ({}{})▷{}", h8.label(x), h8.label(y), h4.label(a)),
                );
            }
        }
    }
    for x in 0..h8.dim() {
        for a in 0..h4.dim() {
            let v = left.get(x, a);
            let lhs = comul_poly(h4, v);
            let mut rhs = PolyTensor::new();
            for (x1, x2, c) in h8.coproduct_terms(x) {
                for (a1, a2, d) in h4.coproduct_terms(a) {
                    add_outer(&mut rhs, &(c * d), left.get(*x1, *a1), left.get(*x2, *a2));
                }
            }
            push_tensor(
                &mut s,
                tensor_sub(lhs, rhs),
                h4,
                h4,
                &format!("coalgebra: Δ({}▷{})", h8.label(x), h4.label(a)),
            );
            let eps = counit_poly(h4, v).sub(&Poly::constant(&h8.counit_vector()[x] * &h4.counit_vector()[a]));
            if !eps.is_zero() {
                s.push(eps, format!("counit: ε({}▷{})", h8.label(x), h4.label(a)));
            }
        }
    }
    s
}

/// `H8` as a right `H4`-module coalgebra under `◁`:
/// `x◁1 = x`, `x◁(ab) = (x◁a)◁b`, `Δ(x◁a) = Σ x1◁a1 ⊗ x2◁a2`,
/// `ε(x◁a) = ε(x)ε(a)`, and `1◁a = ε(a)1`.
pub fn right_module_coalgebra_system(f: &Factors, right: &ActionTable, unknowns: &Unknowns) -> PolySystem {
    assert_eq!(right.side, Side::Right);
    let (h4, h8) = (&f.h4, &f.h8);
    let mut s = PolySystem::new(unknowns.clone());
    let one4 = f.a("1");
    for x in 0..h8.dim() {
        let ex = basis_vec(h8.dim(), x);
        push_vec(
            &mut s,
            sub_vec(right.get(x, one4), &ex),
            h8,
            &format!("unit: {}◁1", h8.label(x)),
        );
    }
    for a in 0..h4.dim() {
        let eps = h4.counit_vector()[a].clone();
        let expected = constant_vec(&h8.unit_vector().scale(&eps));
        push_vec(
            &mut s,
            sub_vec(right.get(f.x("1"), a), &expected),
            h8,
            &format!("normalization: 1◁{}", h4.label(a)),
        );
    }
    for x in 0..h8.dim() {
        let ex = basis_vec(h8.dim(), x);
        for a in 0..h4.dim() {
            for b in 0..h4.dim() {
                let ab = product_vec(h4, a, b);
                let lhs = right.act(&ex, &ab);
                let rhs = right.act_basis_right(right.get(x, a), b);
                push_vec(
                    &mut s,
                    sub_vec(&lhs, &rhs),
                    h8,
                    &format!("module: {}◁({}{})", h8.label(x), h4.label(a), h4.label(b)),
                );
            }
        }
    }
    for x in 0..h8.dim() {
        for a in 0..h4.dim() {
            let v = right.get(x, a);
            let lhs = comul_poly(h8, v);
            let mut rhs = PolyTensor::new();
            for (x1, x2, c) in h8.coproduct_terms(x) {
                for (a1, a2, d) in h4.coproduct_terms(a) {
                    add_outer(&mut rhs, &(c * d), right.get(*x1, *a1), right.get(*x2, *a2));
                }
            }
            push_tensor(
                &mut s,
                tensor_sub(lhs, rhs),
                h8,
                h8,
                &format!("coalgebra: Δ({}◁{})", h8.label(x), h4.label(a)),
            );
            let eps = counit_poly(h8, v).sub(&Poly::constant(&h8.counit_vector()[x] * &h4.counit_vector()[a]));
            if !eps.is_zero() {
                s.push(eps, format!("counit: ε({}◁{})", h8.label(x), h4.label(a)));
            }
        }
    }
    s
}

/// The compatibility conditions between `▷` and `◁`:
///
/// * normalization: `x▷1 = ε(x)1`, `1◁a = ε(a)1`;
/// * left compatibility: `x▷(ab) = Σ (x1▷a1)((x2◁a2)▷b)`;
/// * right compatibility: `(xy)◁a = Σ (x◁(y1▷a1))(y2◁a2)`;
/// * exchange: `Σ x1◁a1 ⊗ x2▷a2 = Σ x2◁a2 ⊗ x1▷a1`.
pub fn matched_pair_system(f: &Factors, left: &ActionTable, right: &ActionTable, unknowns: &Unknowns) -> PolySystem {
    assert_eq!(left.side, Side::Left);
    assert_eq!(right.side, Side::Right);
    let (h4, h8) = (&f.h4, &f.h8);
    let mut s = PolySystem::new(unknowns.clone());
    let (one4, one8) = (f.a("1"), f.x("1"));
    for x in 0..h8.dim() {
        let expected = constant_vec(&h4.unit_vector().scale(&h8.counit_vector()[x]));
        push_vec(
            &mut s,
            sub_vec(left.get(x, one4), &expected),
            h4,
            &format!("normalization: {}▷1", h8.label(x)),
        );
    }
    for a in 0..h4.dim() {
        let expected = constant_vec(&h8.unit_vector().scale(&h4.counit_vector()[a]));
        push_vec(
            &mut s,
            sub_vec(right.get(one8, a), &expected),
            h8,
            &format!("normalization: 1◁{}", h4.label(a)),
        );
    }
    s.extend(exchange_system(f, left, right, unknowns));
    s.extend(compatibility_system(f, left, right, unknowns));
    s
}

/// The exchange condition `Σ x1◁a1 ⊗ x2▷a2 = Σ x2◁a2 ⊗ x1▷a1` alone.
pub fn exchange_system(f: &Factors, left: &ActionTable, right: &ActionTable, unknowns: &Unknowns) -> PolySystem {
    let (h4, h8) = (&f.h4, &f.h8);
    let mut s = PolySystem::new(unknowns.clone());
    for x in 0..h8.dim() {
        for a in 0..h4.dim() {
            let mut diff = PolyTensor::new();
            for (x1, x2, c) in h8.coproduct_terms(x) {
                for (a1, a2, d) in h4.coproduct_terms(a) {
                    let cd = c * d;
                    add_outer(&mut diff, &cd, right.get(*x1, *a1), left.get(*x2, *a2));
                    add_outer(&mut diff, &-cd, right.get(*x2, *a2), left.get(*x1, *a1));
                }
            }
            push_tensor(
                &mut s,
                diff,
                h8,
                h4,
                &format!("exchange: ({}, {})", h8.label(x), h4.label(a)),
            );
        }
    }
    s
}

/// Left and right compatibility alone.
pub fn compatibility_system(f: &Factors, left: &ActionTable, right: &ActionTable, unknowns: &Unknowns) -> PolySystem {
    let (h4, h8) = (&f.h4, &f.h8);
    let mut s = PolySystem::new(unknowns.clone());
    for x in 0..h8.dim() {
        for a in 0..h4.dim() {
            for b in 0..h4.dim() {
                let ab = product_vec(h4, a, b);
                let lhs = left.act_basis_left(x, &ab);
                let mut rhs = vec![Poly::zero(); h4.dim()];
                for (x1, x2, c) in h8.coproduct_terms(x) {
                    for (a1, a2, d) in h4.coproduct_terms(a) {
                        let moved = right.get(*x2, *a2);
                        let acted = left.act_basis_right(moved, b);
                        let term = mul_poly(h4, left.get(*x1, *a1), &acted);
                        let cd = c * d;
                        for (r, t) in rhs.iter_mut().zip(&term) {
                            r.add_scaled(&cd, t);
                        }
                    }
                }
                push_vec(
                    &mut s,
                    sub_vec(&lhs, &rhs),
                    h4,
                    &format!("left compatibility: {}▷({}{})", h8.label(x), h4.label(a), h4.label(b)),
                );
            }
        }
    }
    for x in 0..h8.dim() {
        for y in 0..h8.dim() {
            let xy = product_vec(h8, x, y);
            for a in 0..h4.dim() {
                let lhs = right.act_basis_right(&xy, a);
                let mut rhs = vec![Poly::zero(); h8.dim()];
                for (y1, y2, c) in h8.coproduct_terms(y) {
                    for (a1, a2, d) in h4.coproduct_terms(a) {
                        let acted = left.get(*y1, *a1);
                        let moved = right.act(&basis_vec(h8.dim(), x), acted);
                        let term = mul_poly(h8, &moved, right.get(*y2, *a2));
                        let cd = c * d;
                        for (r, t) in rhs.iter_mut().zip(&term) {
                            r.add_scaled(&cd, t);
                        }
                    }
                }
                push_vec(
                    &mut s,
                    sub_vec(&lhs, &rhs),
                    h8,
                    &format!("right compatibility: ({}{})◁{}", h8.label(x), h8.label(y), h4.label(a)),
                );
            }
        }
    }
    s
}
