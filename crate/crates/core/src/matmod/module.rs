//! Finitely presented modules: cokernel presentations, tensor products,
//! and local length via a position-over-term Mora standard basis.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::Colength;
use crate::polyalg::{same_ring, Monomial, MonomialOrder, PolyRing, Polynomial};
use crate::scalar::Scalar;

use super::PolyMatrix;

/// Presentation of the cokernel `F^p / M`, where the columns of the
/// presentation matrix generate the submodule `M`.
#[derive(Debug, Clone)]
pub struct ModulePresentation<C: Scalar> {
    pub ring: Arc<PolyRing>,
    pub rank: usize,
    pub matrix: PolyMatrix<C>,
}

impl<C: Scalar> ModulePresentation<C> {
    pub fn new(matrix: PolyMatrix<C>) -> Self {
        ModulePresentation {
            ring: matrix.ring().clone(),
            rank: matrix.rows(),
            matrix,
        }
    }
}

/// Presentation of `coker(A) ⊗ coker(B)`: ambient rank `p_A * p_B`,
/// presentation matrix the block `[A ⊗ I | I ⊗ B]`.
pub fn tensor_presentation<C: Scalar>(
    a: &ModulePresentation<C>,
    b: &ModulePresentation<C>,
) -> Result<ModulePresentation<C>> {
    if !same_ring(&a.ring, &b.ring) {
        return Err(Error::RingMismatch);
    }
    let ring = a.ring.clone();
    let (pa, qa) = (a.rank, a.matrix.cols());
    let (pb, qb) = (b.rank, b.matrix.cols());
    let rows = pa * pb;
    let cols = qa * pb + pa * qb;
    let zero = Polynomial::zero(&ring);
    let mut entries = vec![zero; rows * cols];
    // Row index (i, j) <-> i * pb + j with i < pa, j < pb.
    // Block A ⊗ I: column (c, j) for c < qa, j < pb.
    for i in 0..pa {
        for j in 0..pb {
            let r = i * pb + j;
            for c in 0..qa {
                entries[r * cols + c * pb + j] = a.matrix.entry(i, c).clone();
            }
            for c in 0..qb {
                entries[r * cols + qa * pb + i * qb + c] = b.matrix.entry(j, c).clone();
            }
        }
    }
    Ok(ModulePresentation::new(PolyMatrix::new(
        &ring, rows, cols, entries,
    )?))
}

/// An element of a free module, sparse over (component, monomial) pairs.
/// Term order: position-over-term with the component index as primary key
/// (lower component leads), then the local order on monomials.
#[derive(Debug, Clone, PartialEq)]
struct PolyVec<C: Scalar> {
    ring: Arc<PolyRing>,
    rank: usize,
    terms: BTreeMap<(usize, Monomial), C>,
}

type ModTerm = (usize, Monomial);

impl<C: Scalar> PolyVec<C> {
    fn zero(ring: &Arc<PolyRing>, rank: usize) -> Self {
        PolyVec {
            ring: ring.clone(),
            rank,
            terms: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, t: ModTerm, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&t) {
            None => {
                self.terms.insert(t, c);
            }
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(t, s);
                }
            }
        }
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    fn mul_term(&self, c: &C, m: &Monomial) -> Self {
        let mut out = Self::zero(&self.ring, self.rank);
        for ((comp, mm), a) in &self.terms {
            out.terms
                .insert((*comp, mm.mul(m)), a.clone() * c.clone());
        }
        out
    }

    fn neg(&self) -> Self {
        let mut out = Self::zero(&self.ring, self.rank);
        for (t, c) in &self.terms {
            out.terms.insert(t.clone(), -c.clone());
        }
        out
    }

    fn cmp_terms(ord: &MonomialOrder, a: &ModTerm, b: &ModTerm) -> std::cmp::Ordering {
        // Lower component index leads.
        b.0.cmp(&a.0).then_with(|| ord.cmp(&a.1, &b.1))
    }

    fn leading_term(&self, ord: &MonomialOrder) -> Option<(C, ModTerm)> {
        self.terms
            .keys()
            .max_by(|a, b| Self::cmp_terms(ord, a, b))
            .map(|t| (self.terms[t].clone(), t.clone()))
    }

    fn max_degree(&self) -> u64 {
        self.terms
            .keys()
            .map(|(_, m)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    fn ecart(&self, ord: &MonomialOrder) -> u64 {
        match self.leading_term(ord) {
            Some((_, (_, m))) => self.max_degree() - m.total_degree(),
            None => 0,
        }
    }

    fn monic(&self, ord: &MonomialOrder) -> Self {
        match self.leading_term(ord) {
            Some((c, _)) => {
                let inv = c.inv();
                let mut out = Self::zero(&self.ring, self.rank);
                for (t, a) in &self.terms {
                    out.terms.insert(t.clone(), a.clone() * inv.clone());
                }
                out
            }
            None => self.clone(),
        }
    }
}

/// Mora weak normal form for module elements.
fn mora_nf_vec<C: Scalar>(
    p: &PolyVec<C>,
    basis: &[PolyVec<C>],
    ord: &MonomialOrder,
) -> PolyVec<C> {
    let mut reducers = basis.to_vec();
    let mut h = p.clone();
    loop {
        if h.is_zero() {
            return h;
        }
        let (hc, (hcomp, hm)) = h.leading_term(ord).unwrap();
        let mut best: Option<(u64, usize)> = None;
        for (i, g) in reducers.iter().enumerate() {
            let (_, (gcomp, gm)) = g.leading_term(ord).unwrap();
            if gcomp == hcomp && gm.divides(&hm) {
                let e = g.ecart(ord);
                if best.map(|(be, _)| e < be).unwrap_or(true) {
                    best = Some((e, i));
                }
            }
        }
        let Some((ge, gi)) = best else {
            return h;
        };
        if ge > h.ecart(ord) {
            reducers.push(h.clone());
        }
        let g = reducers[gi].clone();
        let (gc, (_, gm)) = g.leading_term(ord).unwrap();
        let c = hc / gc;
        let q = gm.quotient(&hm);
        h = h.add(&g.mul_term(&c, &q).neg());
    }
}

/// Standard basis of a column module under the local POT order, Mora-style.
fn module_standard_basis<C: Scalar>(
    gens: Vec<PolyVec<C>>,
    ord: &MonomialOrder,
) -> Vec<PolyVec<C>> {
    let mut basis: Vec<PolyVec<C>> = gens
        .into_iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic(ord))
        .collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    while let Some(pos) = pick_pair(&basis, &pairs, ord) {
        let (i, j) = pairs.swap_remove(pos);
        let (_, (ci, mi)) = basis[i].leading_term(ord).unwrap();
        let (_, (cj, mj)) = basis[j].leading_term(ord).unwrap();
        if ci != cj {
            continue;
        }
        let l = mi.lcm(&mj);
        let a = basis[i].mul_term(&C::one(), &mi.quotient(&l));
        let b = basis[j].mul_term(&C::one(), &mj.quotient(&l));
        let s = a.add(&b.neg());
        let r = mora_nf_vec(&s, &basis, ord);
        if r.is_zero() {
            continue;
        }
        let r = r.monic(ord);
        let idx = basis.len();
        basis.push(r);
        for k in 0..idx {
            pairs.push((k, idx));
        }
    }
    basis
}

fn pick_pair<C: Scalar>(
    basis: &[PolyVec<C>],
    pairs: &[(usize, usize)],
    ord: &MonomialOrder,
) -> Option<usize> {
    let mut best: Option<(u64, usize)> = None;
    for (idx, &(i, j)) in pairs.iter().enumerate() {
        let (_, (_, mi)) = basis[i].leading_term(ord).unwrap();
        let (_, (_, mj)) = basis[j].leading_term(ord).unwrap();
        let d = mi.lcm(&mj).total_degree();
        if best.map(|(bd, _)| d < bd).unwrap_or(true) {
            best = Some((d, idx));
        }
    }
    best.map(|(_, idx)| idx)
}

/// Length of the cokernel over the local ring at the origin: the number of
/// standard (monomial, component) pairs; `Infinite` when unbounded.
pub fn module_colength<C: Scalar>(p: &ModulePresentation<C>) -> Result<Colength> {
    let ord = MonomialOrder::NegDegRevLex;
    let ring = &p.ring;
    let nvars = ring.nvars();
    let mut gens = Vec::new();
    for c in 0..p.matrix.cols() {
        let mut v = PolyVec::zero(ring, p.rank);
        for r in 0..p.rank {
            for (m, coef) in p.matrix.entry(r, c).terms() {
                v.add_term((r, m.clone()), coef.clone());
            }
        }
        gens.push(v);
    }
    let basis = module_standard_basis(gens, &ord);
    // Per-component staircase count.
    let mut total = 0u64;
    for comp in 0..p.rank {
        let lms: Vec<Monomial> = basis
            .iter()
            .filter_map(|b| {
                let (_, (c, m)) = b.leading_term(&ord).unwrap();
                if c == comp {
                    Some(m)
                } else {
                    None
                }
            })
            .collect();
        if lms.is_empty() {
            return Ok(Colength::Infinite);
        }
        match crate::groebner::staircase(&lms, nvars) {
            Colength::Finite(v) => total += v,
            Colength::Infinite => return Ok(Colength::Infinite),
        }
    }
    Ok(Colength::Finite(total))
}
