//! Sparse polynomials with exact coefficients in canonical form.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;


use super::{same_ring, Monomial, MonomialOrder, PolyRing};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A multivariate polynomial.  Zero coefficients are never stored, so equal
/// polynomials have identical term maps.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<C: Scalar> {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> Polynomial<C> {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: C) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.nvars()), c);
        }
        p
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        assert!(i < ring.nvars(), "variable index out of range");
        Self::term(ring, C::one(), Monomial::var(ring.nvars(), i, 1))
    }

    pub fn term(ring: &Arc<PolyRing>, c: C, m: Monomial) -> Self {
        assert_eq!(m.nvars(), ring.nvars());
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(
        ring: &Arc<PolyRing>,
        it: I,
    ) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| m.is_one())
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        if !same_ring(&self.ring, &rhs.ring) {
            return Err(Error::RingMismatch);
        }
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&rhs.clone().neg())
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if !same_ring(&self.ring, &rhs.ring) {
            return Err(Error::RingMismatch);
        }
        let mut out = Self::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::constant(&self.ring, C::one());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let mut out = Self::zero(&self.ring);
        for (m, a) in &self.terms {
            out.terms.insert(m.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn mul_term(&self, c: &C, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let mut out = Self::zero(&self.ring);
        for (ma, a) in &self.terms {
            out.terms.insert(ma.mul(m), a.clone() * c.clone());
        }
        out
    }

    /// Formal partial derivative with respect to variable `v`.
    pub fn derivative(&self, v: usize) -> Self {
        assert!(v < self.ring.nvars(), "variable index out of range");
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exps()[v];
            if e > 0 {
                let mut exps = m.exps().to_vec();
                exps[v] = e - 1;
                out.add_term(
                    Monomial::from_exps(exps),
                    c.clone() * C::from_int(e as i64),
                );
            }
        }
        out
    }

    /// Ring-map pullback: every variable of `self.ring` is sent to the
    /// corresponding image in `target`.
    pub fn substitute(
        &self,
        images: &[Polynomial<C>],
        target: &Arc<PolyRing>,
    ) -> Result<Polynomial<C>> {
        if images.len() != self.ring.nvars() {
            return Err(Error::IncompleteMap {
                expected: self.ring.nvars(),
                got: images.len(),
            });
        }
        for im in images {
            if !same_ring(&im.ring, target) {
                return Err(Error::RingMismatch);
            }
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    prod = &prod * &images[i].pow(e);
                }
            }
            out = &out + &prod;
        }
        Ok(out)
    }

    /// Minimum total degree among terms; `None` for the zero polynomial
    /// (order +infinity).
    pub fn order_of_vanishing(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.total_degree()).min()
    }

    /// Maximum total degree among terms; `None` for zero.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn leading_term(&self, ord: &MonomialOrder) -> Result<(C, Monomial)> {
        let m = self
            .terms
            .keys()
            .max_by(|a, b| ord.cmp(a, b))
            .ok_or(Error::ZeroPolynomial)?;
        Ok((self.terms[m].clone(), m.clone()))
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Result<Monomial> {
        Ok(self.leading_term(ord)?.1)
    }

    /// Difference of maximal degree and leading-term degree; the quantity
    /// Mora's reduction bounds.
    pub fn ecart(&self, ord: &MonomialOrder) -> u64 {
        match (self.total_degree(), self.leading_term(ord)) {
            (Some(d), Ok((_, m))) => d - m.total_degree(),
            _ => 0,
        }
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Constant term.
    pub fn constant_coeff(&self) -> C {
        self.coeff(&Monomial::one(self.ring.nvars()))
    }

    /// Scale so the coefficient of the leading monomial is one.
    pub fn monic(&self, ord: &MonomialOrder) -> Self {
        match self.leading_term(ord) {
            Ok((c, _)) => self.scale(&c.inv()),
            Err(_) => self.clone(),
        }
    }
}

impl<C: Scalar> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        let ring = self.ring.clone();
        let mut out = Polynomial::zero(&ring);
        for (m, c) in self.terms {
            out.terms.insert(m, -c);
        }
        out
    }
}

impl<'a, C: Scalar> Add for &'a Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl<'a, C: Scalar> Sub for &'a Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl<'a, C: Scalar> Mul for &'a Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl<C: Scalar> fmt::Display for Polynomial<C> {
    /// Canonical text form; parsing the output reproduces the polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Deterministic order: degrevlex descending.
        let ord = MonomialOrder::DegRevLex;
        let mut monos: Vec<&Monomial> = self.terms.keys().collect();
        monos.sort_by(|a, b| ord.cmp(b, a));
        let one = C::one();
        let minus_one = -C::one();
        for (i, m) in monos.iter().enumerate() {
            let c = &self.terms[*m];
            let cs = c.to_string();
            let negative = cs.starts_with('-');
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = if negative { &cs[1..] } else { &cs[..] };
            let coeff_is_unit = *c == one || *c == minus_one;
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                let mut first = true;
                if !coeff_is_unit {
                    write!(f, "{abs}")?;
                    first = false;
                }
                for (vi, &e) in m.exps().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    write!(f, "{}", self.ring.var_name(vi))?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
