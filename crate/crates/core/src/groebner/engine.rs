//! Buchberger's algorithm and Mora's tangent-cone variant, sharing one
//! pair-processing loop.  Deterministic: pairs are handled in normal
//! strategy order (lcm degree, then lcm under the term order).

use crate::error::{Error, Result};
use crate::polyalg::{Monomial, MonomialOrder, Polynomial};
use crate::scalar::Scalar;

/// Full multivariate division remainder; no remainder term is divisible by
/// any basis leading term.  Requires a global order to terminate.
pub fn division_normal_form<C: Scalar>(
    p: &Polynomial<C>,
    basis: &[Polynomial<C>],
    ord: &MonomialOrder,
) -> Polynomial<C> {
    let ring = p.ring().clone();
    let mut rem = Polynomial::zero(&ring);
    let mut h = p.clone();
    let leads: Vec<(C, Monomial)> = basis
        .iter()
        .map(|g| g.leading_term(ord).expect("nonzero basis element"))
        .collect();
    'outer: while !h.is_zero() {
        let (hc, hm) = h.leading_term(ord).unwrap();
        for (g, (gc, gm)) in basis.iter().zip(&leads) {
            if gm.divides(&hm) {
                let c = hc.clone() / gc.clone();
                let q = gm.quotient(&hm);
                h = &h - &g.mul_term(&c, &q);
                continue 'outer;
            }
        }
        // Move the irreducible leading term to the remainder.
        let t = Polynomial::term(&ring, hc, hm);
        rem = &rem + &t;
        h = &h - &t;
    }
    rem
}

/// Mora's weak normal form with écart-guided reducer selection.  The
/// returned remainder has an irreducible *leading* term (or is zero);
/// `u*p = sum(a_i g_i) + rem` for some local unit `u`.
pub fn mora_normal_form<C: Scalar>(
    p: &Polynomial<C>,
    basis: &[Polynomial<C>],
    ord: &MonomialOrder,
) -> Polynomial<C> {
    let mut reducers: Vec<Polynomial<C>> = basis.to_vec();
    let mut h = p.clone();
    loop {
        if h.is_zero() {
            return h;
        }
        let (hc, hm) = h.leading_term(ord).unwrap();
        // Candidates dividing LM(h), minimal écart first.
        let mut best: Option<(u64, usize)> = None;
        for (i, g) in reducers.iter().enumerate() {
            let gm = g.leading_monomial(ord).unwrap();
            if gm.divides(&hm) {
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
            // Remember the intermediate result: Mora's termination device.
            reducers.push(h.clone());
        }
        let g = reducers[gi].clone();
        let (gc, gm) = g.leading_term(ord).unwrap();
        let c = hc / gc;
        let q = gm.quotient(&hm);
        h = &h - &g.mul_term(&c, &q);
    }
}

fn normal_form<C: Scalar>(
    p: &Polynomial<C>,
    basis: &[Polynomial<C>],
    ord: &MonomialOrder,
) -> Polynomial<C> {
    if ord.is_local() {
        mora_normal_form(p, basis, ord)
    } else {
        division_normal_form(p, basis, ord)
    }
}

fn s_polynomial<C: Scalar>(
    f: &Polynomial<C>,
    g: &Polynomial<C>,
    ord: &MonomialOrder,
) -> Polynomial<C> {
    let (fc, fm) = f.leading_term(ord).unwrap();
    let (gc, gm) = g.leading_term(ord).unwrap();
    let l = fm.lcm(&gm);
    let a = f.mul_term(&(C::one() / fc), &fm.quotient(&l));
    let b = g.mul_term(&(C::one() / gc), &gm.quotient(&l));
    &a - &b
}

/// The shared Buchberger/Mora completion loop.
pub(super) fn basis_loop<C: Scalar>(
    gens: &[Polynomial<C>],
    ord: &MonomialOrder,
    cap: Option<u64>,
) -> Result<Vec<Polynomial<C>>> {
    let mut basis: Vec<Polynomial<C>> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.monic(ord));
        }
    }
    if basis.is_empty() {
        return Ok(basis);
    }
    let ring = basis[0].ring().clone();

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }

    let lcm_of = |basis: &[Polynomial<C>], i: usize, j: usize| -> Monomial {
        let mi = basis[i].leading_monomial(ord).unwrap();
        let mj = basis[j].leading_monomial(ord).unwrap();
        mi.lcm(&mj)
    };

    while !pairs.is_empty() {
        // Normal strategy: smallest lcm first (degree, then term order).
        let mut pick = 0;
        let mut pick_lcm = lcm_of(&basis, pairs[0].0, pairs[0].1);
        for (idx, &(i, j)) in pairs.iter().enumerate().skip(1) {
            let l = lcm_of(&basis, i, j);
            let better = match l.total_degree().cmp(&pick_lcm.total_degree()) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => {
                    ord.cmp(&l, &pick_lcm) == std::cmp::Ordering::Less
                }
            };
            if better {
                pick = idx;
                pick_lcm = l;
            }
        }
        let (i, j) = pairs.swap_remove(pick);

        if let Some(c) = cap {
            if pick_lcm.total_degree() > c {
                return Err(Error::CapExceeded { cap: c });
            }
        }

        let mi = basis[i].leading_monomial(ord).unwrap();
        let mj = basis[j].leading_monomial(ord).unwrap();
        // Buchberger's product criterion.
        if mi.coprime(&mj) {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], ord);
        let r = normal_form(&s, &basis, ord);
        if r.is_zero() {
            continue;
        }
        let r = r.monic(ord);
        let new_idx = basis.len();
        basis.push(r);
        for k in 0..new_idx {
            pairs.push((k, new_idx));
        }
        let _ = ring;
    }

    Ok(minimalize(basis, ord))
}

/// Drop elements whose leading monomial is divisible by another's; for
/// global orders additionally tail-reduce to the unique reduced basis.
/// (Tail reduction under a local order need not terminate, so Mora bases
/// are only head-minimal.)
fn minimalize<C: Scalar>(mut basis: Vec<Polynomial<C>>, ord: &MonomialOrder) -> Vec<Polynomial<C>> {
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let mi = basis[i].leading_monomial(ord).unwrap();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let mj = basis[j].leading_monomial(ord).unwrap();
            if mj.divides(&mi) && !(mi == mj && j > i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut out: Vec<Polynomial<C>> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(p, k)| if k { Some(p) } else { None })
        .collect();
    // Deterministic order: by leading monomial, ascending.
    out.sort_by(|a, b| {
        ord.cmp(
            &a.leading_monomial(ord).unwrap(),
            &b.leading_monomial(ord).unwrap(),
        )
    });
    if !ord.is_local() {
        for i in 0..out.len() {
            let others: Vec<Polynomial<C>> = out
                .iter()
                .enumerate()
                .filter_map(|(j, p)| if j != i { Some(p.clone()) } else { None })
                .collect();
            out[i] = division_normal_form(&out[i], &others, ord).monic(ord);
        }
    }
    out
}
