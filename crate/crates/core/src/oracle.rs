//! Independent brute-force checkers used by the acceptance suite:
//! truncation-based colength (exact linear algebra on monomial bases) and
//! resultant-based plane intersection multiplicity.  Nothing here touches
//! the standard-basis engines.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::matmod::{ModulePresentation, PolyMatrix};
use crate::polyalg::{Monomial, Polynomial, PolyRing};
use crate::rng::SplitMix64;
use crate::scalar::Scalar;

/// Result of a stabilized truncation computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncationResult {
    pub value: u64,
    /// First degree `N` with `dim(F/(M + m^N F)) = dim(F/(M + m^{N+1} F))`.
    pub stabilized_at: u32,
    pub cap: u32,
}

/// All monomials of total degree < `bound` in `nvars` variables,
/// deterministic order.
fn monomials_below(nvars: usize, bound: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == exps.len() {
            out.push(Monomial::from_exps(exps.clone()));
            return;
        }
        for e in 0..=left {
            exps[i] = e;
            rec(i + 1, left - e, exps, out);
        }
        exps[i] = 0;
    }
    if bound == 0 {
        return out;
    }
    rec(0, bound - 1, &mut exps, &mut out);
    out
}

/// Row-echelon rank by exact Gaussian elimination.
pub(crate) fn rank<C: Scalar>(mut rows: Vec<Vec<C>>) -> usize {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    let mut col = 0;
    while col < ncols && rank < rows.len() {
        let pivot = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
        let Some(p) = pivot else {
            col += 1;
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone() * inv.clone();
            for c in col..ncols {
                let delta = rows[rank][c].clone() * factor.clone();
                rows[r][c] = rows[r][c].clone() - delta;
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

fn truncated_dimension<C: Scalar>(p: &ModulePresentation<C>, n_deg: u32) -> u64 {
    let nvars = p.ring.nvars();
    let basis = monomials_below(nvars, n_deg);
    let total = basis.len() * p.rank;
    let index = |comp: usize, m: &Monomial| -> Option<usize> {
        basis
            .iter()
            .position(|b| b == m)
            .map(|i| comp * basis.len() + i)
    };
    let mut rows = Vec::new();
    for c in 0..p.matrix.cols() {
        for alpha in &basis {
            let mut row = vec![C::zero(); total];
            let mut nonzero = false;
            for r in 0..p.rank {
                let prod = p.matrix.entry(r, c).mul_term(&C::one(), alpha);
                for (m, coef) in prod.terms() {
                    if m.total_degree() < n_deg as u64 {
                        if let Some(i) = index(r, m) {
                            row[i] = coef.clone();
                            nonzero = true;
                        }
                    }
                }
            }
            if nonzero {
                rows.push(row);
            }
        }
    }
    total as u64 - rank(rows) as u64
}

/// Truncation colength of a finitely presented module: the first value of
/// `dim F/(M + m^N F)` repeated for consecutive `N`.
pub fn colength_truncation_module<C: Scalar>(
    p: &ModulePresentation<C>,
    cap: u32,
) -> Result<TruncationResult> {
    if cap < 2 {
        return Err(Error::Shape("truncation cap must be at least 2".into()));
    }
    let mut prev: Option<u64> = None;
    for n in 2..=cap {
        let d = truncated_dimension(p, n);
        if prev == Some(d) {
            return Ok(TruncationResult {
                value: d,
                stabilized_at: n - 1,
                cap,
            });
        }
        prev = Some(d);
    }
    Err(Error::NotStabilized { cap })
}

/// Truncation colength of an ideal (rank-one module).
pub fn colength_truncation<C: Scalar>(ideal: &Ideal<C>, cap: u32) -> Result<TruncationResult> {
    let ring = ideal.ring().clone();
    let gens: Vec<Polynomial<C>> = if ideal.gens().is_empty() {
        vec![Polynomial::zero(&ring)]
    } else {
        ideal.gens().to_vec()
    };
    let cols = gens.len();
    let m = PolyMatrix::new(&ring, 1, cols, gens)?;
    colength_truncation_module(&ModulePresentation::new(m), cap)
}

// ---------------------------------------------------------------------------
// Resultant-based intersection multiplicity for plane curves.

/// Univariate dense polynomial over the field, ascending coefficients.
fn interpolate<C: Scalar>(points: &[(C, C)]) -> Vec<C> {
    // Lagrange interpolation; sizes here are small.
    let n = points.len();
    let mut coeffs = vec![C::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // Basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut basis = vec![C::one()];
        let mut denom = C::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            // basis *= (x - x_j)
            let mut next = vec![C::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] = next[k + 1].clone() + b.clone();
                next[k] = next[k].clone() - b.clone() * xj.clone();
            }
            basis = next;
            denom = denom * (xi.clone() - xj.clone());
        }
        let scale = yi.clone() / denom;
        for (k, b) in basis.iter().enumerate() {
            coeffs[k] = coeffs[k].clone() + b.clone() * scale.clone();
        }
    }
    coeffs
}

/// Coefficients of `p` as a polynomial in variable `var`, entries are
/// polynomials in the other variables.
fn coeffs_in_var<C: Scalar>(p: &Polynomial<C>, var: usize) -> Vec<Polynomial<C>> {
    let ring = p.ring().clone();
    let deg = p
        .terms()
        .map(|(m, _)| m.exps()[var])
        .max()
        .unwrap_or(0) as usize;
    let mut out = vec![Polynomial::zero(&ring); deg + 1];
    for (m, c) in p.terms() {
        let e = m.exps()[var] as usize;
        let mut exps = m.exps().to_vec();
        exps[var] = 0;
        out[e] = &out[e] + &Polynomial::term(&ring, c.clone(), Monomial::from_exps(exps));
    }
    out
}

fn eval_univariate<C: Scalar>(p: &Polynomial<C>, var: usize, value: &C) -> C {
    // `p` must only involve `var`.
    let mut acc = C::zero();
    let coeffs = coeffs_in_var(p, var);
    for c in coeffs.iter().rev() {
        debug_assert!(c.is_constant());
        acc = acc * value.clone() + c.constant_coeff();
    }
    acc
}

fn trim<C: Scalar>(mut v: Vec<C>) -> Vec<C> {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

/// Remainder of dense univariate division (ascending coefficients).
fn rem_univariate<C: Scalar>(f: &[C], g: &[C]) -> Vec<C> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    let lg = g[dg].clone();
    while r.len() > dg {
        let dr = r.len() - 1;
        let q = r[dr].clone() / lg.clone();
        for k in 0..=dg {
            let delta = g[k].clone() * q.clone();
            r[dr - dg + k] = r[dr - dg + k].clone() - delta;
        }
        // The top term cancels exactly; trim it (and any further zeros).
        r[dr] = C::zero();
        r = trim(r);
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Resultant of two univariate coefficient vectors (nonzero, trimmed) by
/// the Euclidean remainder sequence.
fn resultant_univariate<C: Scalar>(f: &[C], g: &[C]) -> C {
    let mut f = f.to_vec();
    let mut g = g.to_vec();
    let mut acc = C::one();
    loop {
        let m = f.len() - 1;
        let n = g.len() - 1;
        if n == 0 {
            return acc * pow_scalar(&g[0], m as u32);
        }
        if m == 0 {
            return acc * pow_scalar(&f[0], n as u32);
        }
        if m < n {
            if (m * n) % 2 == 1 {
                acc = -acc;
            }
            std::mem::swap(&mut f, &mut g);
            continue;
        }
        let r = trim(rem_univariate(&f, &g));
        if r.is_empty() {
            return C::zero();
        }
        let rho = r.len() - 1;
        if (m * n) % 2 == 1 {
            acc = -acc;
        }
        acc = acc * pow_scalar(&g[n], (m - rho) as u32);
        f = g;
        g = r;
    }
}

fn pow_scalar<C: Scalar>(c: &C, e: u32) -> C {
    let mut out = C::one();
    for _ in 0..e {
        out = out * c.clone();
    }
    out
}


fn run_resultant_trial<C: Scalar>(
    f: &Polynomial<C>,
    g: &Polynomial<C>,
    rng: &mut SplitMix64,
) -> Result<u64> {
    let ring: Arc<PolyRing> = f.ring().clone();
    let df = f.total_degree().unwrap_or(0);
    let dg = g.total_degree().unwrap_or(0);
    // Generic linear coordinate change x -> x + a*y, y -> b*x + y with the
    // y-leading coefficients of both images constant.
    let mut attempt = 0;
    let (ft, gt) = loop {
        attempt += 1;
        if attempt > 64 {
            return Err(Error::RetryExhausted(
                "generic coordinate change for resultant".into(),
            ));
        }
        let a = C::from_int(rng.int_in(25));
        let b = C::from_int(rng.int_in(25));
        let x = Polynomial::var(&ring, 0);
        let y = Polynomial::var(&ring, 1);
        let ix = &x + &y.scale(&a);
        let iy = &x.scale(&b) + &y;
        let ft = f.substitute(&[ix.clone(), iy.clone()], &ring)?;
        let gt = g.substitute(&[ix, iy], &ring)?;
        let ok = |p: &Polynomial<C>, d: u64| {
            let cs = coeffs_in_var(p, 1);
            cs.len() as u64 == d + 1 && cs.last().map(|c| c.is_constant()).unwrap_or(false)
        };
        if ok(&ft, df) && ok(&gt, dg) {
            break (ft, gt);
        }
    };

    // Evaluate Res_y at D+1 points of x and interpolate.
    let bound = (df * dg) as usize;
    let fc = coeffs_in_var(&ft, 1);
    let gc = coeffs_in_var(&gt, 1);
    let mut points = Vec::with_capacity(bound + 1);
    for k in 0..=bound as i64 {
        let xk = C::from_int(k + 1);
        let fv: Vec<C> = fc.iter().map(|c| eval_univariate(c, 0, &xk)).collect();
        let gv: Vec<C> = gc.iter().map(|c| eval_univariate(c, 0, &xk)).collect();
        points.push((xk, resultant_univariate(&trim(fv), &trim(gv))));
    }
    let res = interpolate(&points);
    let ord = res.iter().position(|c| !c.is_zero());
    match ord {
        Some(o) => Ok(o as u64),
        None => Err(Error::InfiniteColength(
            "resultant vanishes identically: common component".into(),
        )),
    }
}

/// Intersection multiplicity at the origin of two plane curves via a
/// seeded generic coordinate change and a univariate resultant.  Two
/// independent seeds must agree.
pub fn imult_resultant<C: Scalar>(
    f: &Polynomial<C>,
    g: &Polynomial<C>,
    seed: u64,
) -> Result<u64> {
    if f.ring().nvars() != 2 {
        return Err(Error::Shape("imult oracle needs a two-variable ring".into()));
    }
    if f.is_zero() || g.is_zero() {
        return Err(Error::InfiniteColength("zero curve".into()));
    }
    let mut r1 = SplitMix64::new(seed);
    let mut r2 = SplitMix64::new(seed.wrapping_add(0x9e3779b9));
    let v1 = run_resultant_trial(f, g, &mut r1)?;
    let v2 = run_resultant_trial(f, g, &mut r2)?;
    if v1 != v2 {
        return Err(Error::OracleDisagreement(v1, v2));
    }
    Ok(v1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::Mode;
    use crate::polyalg::parse_poly;
    use crate::QPoly;

    fn setup(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(vars).unwrap()
    }

    fn p(t: &str, r: &Arc<PolyRing>) -> QPoly {
        parse_poly(t, r).unwrap()
    }

    #[test]
    fn truncation_staircase_examples() {
        let r = setup(&["x", "y"]);
        let i = Ideal::new(&r, vec![p("x^2", &r), p("y^2", &r)]).unwrap();
        let t = colength_truncation(&i, 10).unwrap();
        assert_eq!(t.value, 4);
        assert!(t.stabilized_at <= 3);

        let r3 = setup(&["x", "y", "z"]);
        let m = Ideal::new(&r3, vec![p("x", &r3), p("y", &r3), p("z", &r3)]).unwrap();
        assert_eq!(colength_truncation(&m, 10).unwrap().value, 1);
    }

    #[test]
    fn truncation_sees_local_value_only() {
        let r = setup(&["x"]);
        let i = Ideal::new(&r, vec![p("x^2 - x^3", &r)]).unwrap();
        assert_eq!(colength_truncation(&i, 10).unwrap().value, 2);
    }

    #[test]
    fn truncation_cap_is_a_distinct_outcome() {
        let r = setup(&["x", "y"]);
        let i = Ideal::new(&r, vec![p("x", &r)]).unwrap();
        match colength_truncation(&i, 6) {
            Err(Error::NotStabilized { cap: 6 }) => {}
            other => panic!("expected NotStabilized, got {other:?}"),
        }
    }

    #[test]
    fn resultant_transverse_lines() {
        let r = setup(&["t", "z"]);
        assert_eq!(imult_resultant(&p("t", &r), &p("z", &r), 1).unwrap(), 1);
    }

    #[test]
    fn resultant_cusp_against_line() {
        let r = setup(&["t", "z"]);
        assert_eq!(
            imult_resultant(&p("z^2 - t^3", &r), &p("z", &r), 1).unwrap(),
            3
        );
    }

    #[test]
    fn resultant_agrees_with_paper_arithmetic() {
        let r = setup(&["t", "z"]);
        let f = p("z^2 (2t^5 + 3z^3)", &r);
        let g = p("-3t^11 + 2z^5", &r);
        assert_eq!(imult_resultant(&f, &g, 7).unwrap(), 47);
    }

    #[test]
    fn truncation_agrees_with_groebner_on_small_corpus() {
        let r = setup(&["x", "y"]);
        for gens in [
            vec!["x^2", "y^3"],
            vec!["x^2 - y^3", "x y"],
            vec!["x + y^2", "y^4"],
            vec!["x^3 - y^2", "y^3 - x^2"],
        ] {
            let i = Ideal::new(&r, gens.iter().map(|g| p(g, &r)).collect()).unwrap();
            let a = crate::groebner::colength(&i, Mode::Local)
                .unwrap()
                .finite()
                .unwrap();
            let b = colength_truncation(&i, 30).unwrap().value;
            assert_eq!(a, b, "gens {gens:?}");
        }
    }
}
