//! Ideal quotient, intersection and saturation via elimination.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyalg::{Monomial, MonomialOrder, PolyRing, Polynomial};
use crate::scalar::Scalar;

use super::{ideal_eq, standard_basis, Ideal};

/// Internal name for the elimination variable; `@` cannot appear in parsed
/// input, so no user ring can collide with it.
const ELIM_VAR: &str = "@t";

fn extended_ring(ring: &Arc<PolyRing>) -> Arc<PolyRing> {
    let mut names: Vec<String> = vec![ELIM_VAR.to_string()];
    names.extend(ring.var_names().iter().cloned());
    PolyRing::new(&names).expect("extended ring")
}

/// Inject `p` into the extended ring (exponent 0 on the new first variable).
fn lift<C: Scalar>(p: &Polynomial<C>, big: &Arc<PolyRing>) -> Polynomial<C> {
    Polynomial::from_terms(
        big,
        p.terms().map(|(m, c)| {
            let mut exps = vec![0u32];
            exps.extend_from_slice(m.exps());
            (Monomial::from_exps(exps), c.clone())
        }),
    )
}

/// Project back, returning `None` when the elimination variable occurs.
fn project<C: Scalar>(p: &Polynomial<C>, small: &Arc<PolyRing>) -> Option<Polynomial<C>> {
    let mut terms = Vec::new();
    for (m, c) in p.terms() {
        if m.exps()[0] != 0 {
            return None;
        }
        terms.push((Monomial::from_exps(m.exps()[1..].to_vec()), c.clone()));
    }
    Some(Polynomial::from_terms(small, terms))
}

/// `I ∩ J` via the classical `t*I + (1-t)*J` elimination.
pub fn ideal_intersect<C: Scalar>(a: &Ideal<C>, b: &Ideal<C>) -> Result<Ideal<C>> {
    let ring = a.ring().clone();
    let big = extended_ring(&ring);
    let t = Polynomial::<C>::var(&big, 0);
    let one_minus_t = &Polynomial::constant(&big, C::one()) - &t;
    let mut gens = Vec::new();
    for g in a.gens() {
        gens.push(&t * &lift(g, &big));
    }
    for g in b.gens() {
        gens.push(&one_minus_t * &lift(g, &big));
    }
    let big_ideal = Ideal::new(&big, gens)?;
    let sb = standard_basis(&big_ideal, MonomialOrder::Elim { block: 1 }, None)?;
    let mut out = Vec::new();
    for p in &sb.basis {
        if let Some(q) = project(p, &ring) {
            out.push(q);
        }
    }
    Ideal::new(&ring, out)
}

/// Exact division `p / g`, failing if `g` does not divide `p`.
fn exact_divide<C: Scalar>(p: &Polynomial<C>, g: &Polynomial<C>) -> Result<Polynomial<C>> {
    let ord = MonomialOrder::DegRevLex;
    let ring = p.ring().clone();
    let (gc, gm) = g.leading_term(&ord)?;
    let mut q = Polynomial::zero(&ring);
    let mut h = p.clone();
    while !h.is_zero() {
        let (hc, hm) = h.leading_term(&ord).unwrap();
        if !gm.divides(&hm) {
            return Err(Error::Shape("inexact polynomial division".into()));
        }
        let c = hc / gc.clone();
        let m = gm.quotient(&hm);
        let t = Polynomial::term(&ring, c, m);
        q = &q + &t;
        h = &h - &g.try_mul(&t)?;
    }
    Ok(q)
}

/// Ideal quotient `(I : g)` via `(I ∩ (g)) / g`.
pub fn ideal_quotient<C: Scalar>(ideal: &Ideal<C>, g: &Polynomial<C>) -> Result<Ideal<C>> {
    if g.is_zero() {
        return Err(Error::Shape("quotient by the zero polynomial".into()));
    }
    if ideal.is_zero_ideal() {
        return Ideal::new(ideal.ring(), vec![]);
    }
    let principal = Ideal::new(ideal.ring(), vec![g.clone()])?;
    let inter = ideal_intersect(ideal, &principal)?;
    let mut gens = Vec::new();
    for p in inter.gens() {
        gens.push(exact_divide(p, g)?);
    }
    Ideal::new(ideal.ring(), gens)
}

/// `(I : J)` as the intersection of the quotients by the generators.
pub fn ideal_quotient_ideal<C: Scalar>(ideal: &Ideal<C>, j: &Ideal<C>) -> Result<Ideal<C>> {
    let mut acc: Option<Ideal<C>> = None;
    for g in j.gens() {
        let q = ideal_quotient(ideal, g)?;
        acc = Some(match acc {
            None => q,
            Some(a) => ideal_intersect(&a, &q)?,
        });
    }
    match acc {
        Some(a) => Ok(a),
        // (I : (0)) is the whole ring, but the spec requires J != (0).
        None => Err(Error::Shape("saturation/quotient by the zero ideal".into())),
    }
}

/// Saturation `(I : J^∞)` by iterating quotients until the ideal
/// stabilizes; stabilization is full ideal equality via mutual membership.
pub fn saturate<C: Scalar>(ideal: &Ideal<C>, j: &Ideal<C>) -> Result<Ideal<C>> {
    let mut current = ideal.clone();
    loop {
        let next = ideal_quotient_ideal(&current, j)?;
        if ideal_eq(&current, &next)? {
            return Ok(current);
        }
        current = next;
    }
}
