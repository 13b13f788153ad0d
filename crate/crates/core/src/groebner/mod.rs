//! Basis engines and the ideal toolkit: Buchberger for global orders, Mora
//! for local orders; normal form, membership, colength, Krull dimension,
//! ideal quotient and saturation.

mod engine;
mod ops;
mod staircase;

pub use engine::{division_normal_form, mora_normal_form};
pub use ops::{ideal_intersect, ideal_quotient, ideal_quotient_ideal, saturate};
pub use staircase::staircase_count as staircase;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyalg::{same_ring, Monomial, MonomialOrder, PolyRing, Polynomial};
use crate::scalar::Scalar;

/// Local-at-origin versus global computation mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Local,
    Global,
}

impl Mode {
    pub fn order(&self) -> MonomialOrder {
        match self {
            Mode::Local => MonomialOrder::NegDegRevLex,
            Mode::Global => MonomialOrder::DegRevLex,
        }
    }
}

/// A finite or infinite colength/length value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl Colength {
    pub fn finite(&self) -> Option<u64> {
        match self {
            Colength::Finite(v) => Some(*v),
            Colength::Infinite => None,
        }
    }
}

/// An ideal given by a finite generating set (zero generators dropped).
#[derive(Debug, Clone)]
pub struct Ideal<C: Scalar> {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial<C>>,
}

impl<C: Scalar> Ideal<C> {
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Polynomial<C>>) -> Result<Self> {
        for g in &gens {
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<C>] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Concatenate generating sets (same ring).
    pub fn sum(&self, other: &Ideal<C>) -> Result<Ideal<C>> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn plus(&self, extra: &[Polynomial<C>]) -> Result<Ideal<C>> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }
}

/// A Gröbner basis (global order) or Mora standard basis (local order).
#[derive(Debug, Clone)]
pub struct StandardBasis<C: Scalar> {
    pub ideal: Ideal<C>,
    pub order: MonomialOrder,
    pub basis: Vec<Polynomial<C>>,
    pub local: bool,
}

impl<C: Scalar> StandardBasis<C> {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|p| p.leading_monomial(&self.order).expect("nonzero basis"))
            .collect()
    }

    /// Weak normal form: zero iff membership (in the localization for
    /// local orders).  For global orders this is the full remainder.
    pub fn normal_form(&self, p: &Polynomial<C>) -> Polynomial<C> {
        if self.local {
            mora_normal_form(p, &self.basis, &self.order)
        } else {
            division_normal_form(p, &self.basis, &self.order)
        }
    }

    /// The localized ideal contains a unit (basis has a constant lead term).
    pub fn contains_unit(&self) -> bool {
        self.basis.iter().any(|p| {
            p.leading_monomial(&self.order)
                .map(|m| m.is_one())
                .unwrap_or(false)
        })
    }
}

/// Compute a standard basis of `ideal` under `ord`.
///
/// `cap`, when set, bounds the total degree of S-pair lcms; hitting it is a
/// hard error, never a silent truncation.
pub fn standard_basis<C: Scalar>(
    ideal: &Ideal<C>,
    ord: MonomialOrder,
    cap: Option<u64>,
) -> Result<StandardBasis<C>> {
    let basis = engine::basis_loop(ideal.gens(), &ord, cap)?;
    Ok(StandardBasis {
        ideal: ideal.clone(),
        order: ord,
        basis,
        local: ord.is_local(),
    })
}

/// Membership test under the given mode's order.
pub fn membership<C: Scalar>(p: &Polynomial<C>, ideal: &Ideal<C>, mode: Mode) -> Result<bool> {
    if !same_ring(p.ring(), ideal.ring()) {
        return Err(Error::RingMismatch);
    }
    if p.is_zero() {
        return Ok(true);
    }
    let sb = standard_basis(ideal, mode.order(), None)?;
    Ok(sb.normal_form(p).is_zero())
}

/// Ideal equality by mutual membership of generators (global).
pub fn ideal_eq<C: Scalar>(a: &Ideal<C>, b: &Ideal<C>) -> Result<bool> {
    let sa = standard_basis(a, MonomialOrder::DegRevLex, None)?;
    let sb = standard_basis(b, MonomialOrder::DegRevLex, None)?;
    Ok(a.gens().iter().all(|g| sb.normal_form(g).is_zero())
        && b.gens().iter().all(|g| sa.normal_form(g).is_zero()))
}

/// Number of standard monomials of `ideal` under the mode's order.
pub fn colength<C: Scalar>(ideal: &Ideal<C>, mode: Mode) -> Result<Colength> {
    let sb = standard_basis(ideal, mode.order(), None)?;
    Ok(staircase::staircase_count(
        &sb.leading_monomials(),
        ideal.ring().nvars(),
    ))
}

/// Krull dimension of `ring/ideal` (local: dimension of the germ at the
/// origin), from maximal independent variable sets of the leading-term
/// ideal.  The unit ideal reports the sentinel -1 ("empty").
pub fn krull_dimension<C: Scalar>(ideal: &Ideal<C>, mode: Mode) -> Result<i64> {
    let sb = standard_basis(ideal, mode.order(), None)?;
    if sb.contains_unit() {
        return Ok(-1);
    }
    Ok(staircase::independent_set_dimension(
        &sb.leading_monomials(),
        ideal.ring().nvars(),
    ))
}
