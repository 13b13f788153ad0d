//! The domain layer: special loci, geometry diagnostics, the ICIS index
//! and Chern formula, polar curves, normalization pullback, plane-curve
//! intersection multiplicity, and the surface-case pipeline.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{
    colength, krull_dimension, membership, saturate, standard_basis, Colength, Ideal, Mode,
};
use crate::matmod::{jacobian_matrix, PolyMatrix};
use crate::polyalg::{same_ring, PolyRing, Polynomial};
use crate::rng::SplitMix64;
use crate::scalar::Scalar;


/// A user-supplied parametrization of the germ: `source_ring` has `d`
/// variables, `images` has one polynomial per ambient variable.
#[derive(Debug, Clone)]
pub struct NormalizationMap<C: Scalar> {
    pub source_ring: Arc<PolyRing>,
    pub images: Vec<Polynomial<C>>,
}

/// The germ `(X, 0)` with its ambient ring, defining equations, and
/// declared dimension.
#[derive(Debug, Clone)]
pub struct VarietyInput<C: Scalar> {
    pub ring: Arc<PolyRing>,
    pub gens: Vec<Polynomial<C>>,
    pub dim: u64,
    pub normalization: Option<NormalizationMap<C>>,
    pub singular_override: Option<Ideal<C>>,
}

impl<C: Scalar> VarietyInput<C> {
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Polynomial<C>>, dim: u64) -> Result<Self> {
        let n = ring.nvars() as u64;
        if dim < 1 || dim > n {
            return Err(Error::Collection(format!(
                "declared dimension {dim} outside 1..={n}"
            )));
        }
        if gens.is_empty() && dim != n {
            return Err(Error::Collection(
                "no defining equations but declared dimension below the ambient".into(),
            ));
        }
        for g in &gens {
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
        }
        Ok(VarietyInput {
            ring: ring.clone(),
            gens,
            dim,
            normalization: None,
            singular_override: None,
        })
    }

    pub fn with_normalization(mut self, map: NormalizationMap<C>) -> Result<Self> {
        if map.source_ring.nvars() as u64 != self.dim {
            return Err(Error::IncompleteMap {
                expected: self.dim as usize,
                got: map.source_ring.nvars(),
            });
        }
        if map.images.len() != self.ring.nvars() {
            return Err(Error::IncompleteMap {
                expected: self.ring.nvars(),
                got: map.images.len(),
            });
        }
        for im in &map.images {
            if !same_ring(im.ring(), &map.source_ring) {
                return Err(Error::RingMismatch);
            }
        }
        self.normalization = Some(map);
        Ok(self)
    }
}

/// One block of the collection: `k` and its `d - k + 1` covectors.
#[derive(Debug, Clone)]
pub struct SubCollection<C: Scalar> {
    pub k: u64,
    pub forms: Vec<Vec<Polynomial<C>>>,
}

/// The full collection of 1-forms, partitioned by the `k_i`.
#[derive(Debug, Clone)]
pub struct FormCollection<C: Scalar> {
    pub parts: Vec<SubCollection<C>>,
}

impl<C: Scalar> FormCollection<C> {
    pub fn new(parts: Vec<SubCollection<C>>, x: &VarietyInput<C>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Collection("empty collection".into()));
        }
        let d = x.dim;
        let total: u64 = parts.iter().map(|p| p.k).sum();
        if total != d {
            return Err(Error::Collection(format!(
                "partition sums to {total}, declared dimension is {d}"
            )));
        }
        for (i, p) in parts.iter().enumerate() {
            if p.k < 1 {
                return Err(Error::Collection(format!("k must be positive in block {i}")));
            }
            let expect = (d - p.k + 1) as usize;
            if p.forms.len() != expect {
                return Err(Error::Collection(format!(
                    "block {i} has {} forms, expected d - k + 1 = {expect}",
                    p.forms.len()
                )));
            }
            for f in &p.forms {
                if f.len() != x.ring.nvars() {
                    return Err(Error::Collection(format!(
                        "covector of length {} in a {}-variable ring",
                        f.len(),
                        x.ring.nvars()
                    )));
                }
                for e in f {
                    if !same_ring(e.ring(), &x.ring) {
                        return Err(Error::RingMismatch);
                    }
                }
            }
        }
        Ok(FormCollection { parts })
    }

    /// `(k_i, number of forms)` per block — the data `generic_linear_collection`
    /// needs to reproduce the layout.
    pub fn shape(&self) -> Vec<(u64, usize)> {
        self.parts.iter().map(|p| (p.k, p.forms.len())).collect()
    }
}

/// Dimension diagnostics for the nested special loci.
#[derive(Debug, Clone, Serialize)]
pub struct GeometryReport {
    pub prefix_dims: Vec<i64>,
    pub expected_dims: Vec<i64>,
    pub isolated: bool,
    #[serde(skip)]
    pub singular_dim: i64,
    /// Per prefix: the locus lies inside the singular set (saturation by
    /// the singular ideal kills it near the origin).
    #[serde(skip)]
    pub inside_singular: Vec<bool>,
}

/// One labelled term of a Chern computation.
#[derive(Debug, Clone, Serialize)]
pub struct TermReport {
    pub label: String,
    pub value: i64,
    pub seed: u64,
}

/// Full record of a Chern pipeline run.
#[derive(Debug, Clone, Serialize)]
pub struct ChernReport {
    pub method: String,
    pub terms: Vec<TermReport>,
    pub geometry: GeometryReport,
    #[serde(rename = "final")]
    pub final_value: i64,
    pub seeds: Vec<u64>,
    pub warnings: Vec<String>,
}

/// `I(X)` plus the `(n - d)`-minors of the Jacobian of `F`; the unit ideal
/// for a smooth presentation.  The override field wins when set.
pub fn singular_locus_ideal<C: Scalar>(x: &VarietyInput<C>) -> Result<Ideal<C>> {
    if let Some(s) = &x.singular_override {
        return Ok(s.clone());
    }
    let n = x.ring.nvars() as u64;
    if x.gens.is_empty() || n == x.dim {
        // Smooth ambient space: empty singular locus.
        return Ideal::new(&x.ring, vec![Polynomial::constant(&x.ring, C::one())]);
    }
    let jac = jacobian_matrix(&x.gens)?;
    let k = (n - x.dim) as usize;
    let minors = jac.minors(k);
    Ideal::new(&x.ring, x.gens.iter().cloned().chain(minors).collect())
}

/// Maximal minors of the Jacobian augmented by one block of covectors.
fn augmented_minors<C: Scalar>(
    x: &VarietyInput<C>,
    forms: &[Vec<Polynomial<C>>],
) -> Result<Vec<Polynomial<C>>> {
    let n = x.ring.nvars();
    let mat = if x.gens.is_empty() {
        let entries: Vec<Polynomial<C>> = forms.iter().flat_map(|f| f.iter().cloned()).collect();
        if entries.is_empty() {
            return Ok(Vec::new());
        }
        PolyMatrix::new(&x.ring, forms.len(), n, entries)?
    } else {
        jacobian_matrix(&x.gens)?.augment(forms)?
    };
    Ok(mat.maximal_minors().gens().to_vec())
}

/// `I(X)` plus the augmented-minor ideals of the first `prefix` blocks.
pub fn special_locus_ideal<C: Scalar>(
    x: &VarietyInput<C>,
    c: &FormCollection<C>,
    prefix: usize,
) -> Result<Ideal<C>> {
    if prefix < 1 || prefix > c.parts.len() {
        return Err(Error::Collection(format!(
            "prefix {prefix} outside 1..={}",
            c.parts.len()
        )));
    }
    let mut gens = x.gens.clone();
    for part in &c.parts[..prefix] {
        gens.extend(augmented_minors(x, &part.forms)?);
    }
    Ideal::new(&x.ring, gens)
}

fn is_locally_unit<C: Scalar>(ideal: &Ideal<C>) -> Result<bool> {
    Ok(standard_basis(ideal, Mode::Local.order(), None)?.contains_unit())
}

/// Dimension/isolation diagnostics.  Each block's degeneracy locus is
/// taken with its singular-set components saturated away — the pieces the
/// index and polar constructions actually consume — and the prefix locus
/// is their intersection; violations are report fields.
pub fn geometry_checks<C: Scalar>(
    x: &VarietyInput<C>,
    c: &FormCollection<C>,
) -> Result<GeometryReport> {
    let sing = singular_locus_ideal(x)?;
    let singular_dim = krull_dimension(&sing, Mode::Local)?;
    let mut prefix_dims = Vec::new();
    let mut expected_dims = Vec::new();
    let mut inside_singular = Vec::new();
    let mut acc_k: i64 = 0;
    let mut acc = Ideal::new(&x.ring, x.gens.clone())?;
    for part in &c.parts {
        acc_k += part.k as i64;
        let raw = Ideal::new(&x.ring, x.gens.clone())?.plus(&augmented_minors(x, &part.forms)?)?;
        let sat = saturate(&raw, &sing)?;
        inside_singular.push(is_locally_unit(&sat)? && !is_locally_unit(&raw)?);
        acc = acc.sum(&sat)?;
        prefix_dims.push(krull_dimension(&acc, Mode::Local)?);
        expected_dims.push(x.dim as i64 - acc_k);
    }
    let isolated = prefix_dims.last().map(|&d| d <= 0).unwrap_or(false);
    Ok(GeometryReport {
        prefix_dims,
        expected_dims,
        isolated,
        singular_dim,
        inside_singular,
    })
}

/// The index: local colength of the full special-locus ideal.
pub fn ind_point<C: Scalar>(x: &VarietyInput<C>, c: &FormCollection<C>) -> Result<Colength> {
    let full = special_locus_ideal(x, c, c.parts.len())?;
    colength(&full, Mode::Local)
}

/// Seed-reproducible generic constant collection of the given shape:
/// integer entries in `[-bound, bound]`, covectors of each block verified
/// linearly independent (bounded redraws).
pub fn generic_linear_collection<C: Scalar>(
    ring: &Arc<PolyRing>,
    shape: &[(u64, usize)],
    seed: u64,
    bound: i64,
) -> Result<FormCollection<C>> {
    if bound < 1 {
        return Err(Error::Collection("coefficient bound must be >= 1".into()));
    }
    let n = ring.nvars();
    let mut rng = SplitMix64::new(seed);
    let mut parts = Vec::new();
    for &(k, nforms) in shape {
        if nforms > n {
            return Err(Error::Collection(format!(
                "{nforms} independent covectors cannot exist in {n} variables"
            )));
        }
        let mut attempt = 0;
        let forms = loop {
            attempt += 1;
            if attempt > 32 {
                return Err(Error::RetryExhausted(
                    "independent generic covectors".into(),
                ));
            }
            let rows: Vec<Vec<C>> = (0..nforms)
                .map(|_| (0..n).map(|_| C::from_int(rng.int_in(bound))).collect())
                .collect();
            if crate::oracle::rank(rows.clone()) == nforms {
                break rows;
            }
        };
        parts.push(SubCollection {
            k,
            forms: forms
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|c| Polynomial::constant(ring, c))
                        .collect()
                })
                .collect(),
        });
    }
    Ok(FormCollection { parts })
}

/// Min-and-agree policy over `trials` seeded generic draws: the accepted
/// value is the minimum; any spread is recorded as a warning.
fn generic_trials(
    label: &str,
    seed: u64,
    trials: u32,
    mut term: impl FnMut(u64) -> Result<i64>,
    terms: &mut Vec<TermReport>,
    seeds: &mut Vec<u64>,
    warnings: &mut Vec<String>,
) -> Result<i64> {
    let trials = trials.max(1);
    let mut values = Vec::new();
    for t in 0..trials {
        let s = seed.wrapping_add(1 + t as u64);
        let v = term(s)?;
        terms.push(TermReport {
            label: format!("{label}[{t}]"),
            value: v,
            seed: s,
        });
        seeds.push(s);
        values.push(v);
    }
    let min = *values.iter().min().expect("at least one trial");
    if values.iter().any(|&v| v != min) {
        warnings.push(format!(
            "generic trials disagree for {label}: {values:?}; accepted the minimum {min}"
        ));
    }
    Ok(min)
}

/// `Ch = ind(omega) - ind(generic l)` for an isolated complete intersection
/// presentation.
pub fn chern_icis<C: Scalar>(
    x: &VarietyInput<C>,
    c: &FormCollection<C>,
    seed: u64,
    trials: u32,
    bound: i64,
) -> Result<ChernReport> {
    let n = x.ring.nvars() as u64;
    let expected = (n - x.dim) as usize;
    if x.gens.len() != expected {
        return Err(Error::NotCompleteIntersection {
            expected,
            got: x.gens.len(),
        });
    }
    let geometry = geometry_checks(x, c)?;
    if !geometry.isolated {
        return Err(Error::NotIsolated {
            dim: *geometry.prefix_dims.last().unwrap(),
        });
    }
    let ind = ind_point(x, c)?
        .finite()
        .ok_or_else(|| Error::InfiniteColength("the index of the input collection".into()))?
        as i64;
    let mut terms = vec![TermReport {
        label: "ind".into(),
        value: ind,
        seed,
    }];
    let mut seeds = vec![seed];
    let mut warnings = Vec::new();
    let shape = c.shape();
    let generic = generic_trials(
        "generic",
        seed,
        trials,
        |s| {
            let l: FormCollection<C> = generic_linear_collection(&x.ring, &shape, s, bound)?;
            ind_point(x, &l)?
                .finite()
                .map(|v| v as i64)
                .ok_or_else(|| Error::InfiniteColength("a generic index trial".into()))
        },
        &mut terms,
        &mut seeds,
        &mut warnings,
    )?;
    Ok(ChernReport {
        method: "icis".into(),
        final_value: ind - generic,
        terms,
        geometry,
        seeds,
        warnings,
    })
}

/// Relative polar curve of a pair of forms on a hypersurface surface in
/// three variables: the augmented-determinant locus with the singular-set
/// components saturated away.
pub fn polar_curve_ideal<C: Scalar>(
    x: &VarietyInput<C>,
    pair: &[Vec<Polynomial<C>>],
) -> Result<Ideal<C>> {
    surface_hypotheses(x)?;
    if pair.len() != 2 {
        return Err(Error::Collection(format!(
            "polar pair needs 2 forms, got {}",
            pair.len()
        )));
    }
    let minors = augmented_minors(x, pair)?;
    let f_ideal = Ideal::new(&x.ring, x.gens.clone())?;
    let det = minors
        .first()
        .cloned()
        .unwrap_or_else(|| Polynomial::zero(&x.ring));
    if membership(&det, &f_ideal, Mode::Global)? {
        return Err(Error::DegeneratePair);
    }
    let raw = f_ideal.plus(&minors)?;
    saturate(&raw, &singular_locus_ideal(x)?)
}

/// Local intersection multiplicity of two plane curves at the origin.
pub fn imult_plane<C: Scalar>(f: &Polynomial<C>, g: &Polynomial<C>) -> Result<Colength> {
    if f.ring().nvars() != 2 {
        return Err(Error::Shape(
            "intersection multiplicity needs a two-variable ring".into(),
        ));
    }
    if !same_ring(f.ring(), g.ring()) {
        return Err(Error::RingMismatch);
    }
    let i = Ideal::new(f.ring(), vec![f.clone(), g.clone()])?;
    colength(&i, Mode::Local)
}

/// Which of the two surface formulas to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Colength,
    Normalization,
    Both,
}

fn surface_hypotheses<C: Scalar>(x: &VarietyInput<C>) -> Result<()> {
    if x.ring.nvars() != 3 || x.dim != 2 || x.gens.len() != 1 {
        return Err(Error::Shape(
            "surface pipeline needs a single equation in three variables with dimension 2".into(),
        ));
    }
    Ok(())
}

/// Pull an ideal back through the normalization map.
fn pullback_ideal<C: Scalar>(i: &Ideal<C>, map: &NormalizationMap<C>) -> Result<Ideal<C>> {
    let gens = i
        .gens()
        .iter()
        .map(|g| g.substitute(&map.images, &map.source_ring))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&map.source_ring, gens)
}

/// One intersection term of the surface formula for a pair of polar ideals.
fn surface_term<C: Scalar>(
    x: &VarietyInput<C>,
    route: Route,
    pair_a: &[Vec<Polynomial<C>>],
    pair_b: &[Vec<Polynomial<C>>],
) -> Result<i64> {
    let ia = polar_curve_ideal(x, pair_a)?;
    let ib = polar_curve_ideal(x, pair_b)?;
    // Empty polar curves meet nothing.
    if is_locally_unit(&ia)? || is_locally_unit(&ib)? {
        return Ok(0);
    }
    let value = |i: &Ideal<C>, what: &str| -> Result<i64> {
        colength(i, Mode::Local)?
            .finite()
            .map(|v| v as i64)
            .ok_or_else(|| Error::InfiniteColength(what.into()))
    };
    match route {
        Route::Colength => value(&ia.sum(&ib)?, "a polar intersection term"),
        Route::Normalization => {
            let map = x.normalization.as_ref().ok_or(Error::MissingNormalization)?;
            let pa = pullback_ideal(&ia, map)?;
            let pb = pullback_ideal(&ib, map)?;
            value(&pa.sum(&pb)?, "a pulled-back polar intersection term")
        }
        Route::Both => {
            let c = surface_term(x, Route::Colength, pair_a, pair_b)?;
            let n = surface_term(x, Route::Normalization, pair_a, pair_b)?;
            if c != n {
                return Err(Error::RouteDisagreement {
                    colength_route: c,
                    normalization_route: n,
                });
            }
            Ok(c)
        }
    }
}

/// The surface pipeline: intersection of the two polar curves, minus the
/// same quantity for seeded generic pairs.
pub fn chern_surface<C: Scalar>(
    x: &VarietyInput<C>,
    c: &FormCollection<C>,
    seed: u64,
    trials: u32,
    bound: i64,
    route: Route,
) -> Result<ChernReport> {
    surface_hypotheses(x)?;
    if c.parts.len() != 2 || c.parts.iter().any(|p| p.k != 1) {
        return Err(Error::Collection(
            "surface pipeline needs two blocks with k = (1, 1)".into(),
        ));
    }
    let geometry = geometry_checks(x, c)?;
    if !geometry.isolated {
        return Err(Error::NotIsolated {
            dim: *geometry.prefix_dims.last().unwrap(),
        });
    }
    let main = surface_term(x, route, &c.parts[0].forms, &c.parts[1].forms)?;
    let mut terms = vec![TermReport {
        label: "main".into(),
        value: main,
        seed,
    }];
    let mut seeds = vec![seed];
    let mut warnings = Vec::new();
    let shape = c.shape();
    let generic = generic_trials(
        "generic",
        seed,
        trials,
        |s| {
            let l: FormCollection<C> = generic_linear_collection(&x.ring, &shape, s, bound)?;
            match surface_term(x, route, &l.parts[0].forms, &l.parts[1].forms) {
                Err(Error::DegeneratePair) => Err(Error::RetryExhausted(
                    "generic pair was degenerate; rerun with another seed".into(),
                )),
                other => other,
            }
        },
        &mut terms,
        &mut seeds,
        &mut warnings,
    )?;
    let method = match route {
        Route::Colength => "surface-colength",
        Route::Normalization => "surface-normalization",
        Route::Both => {
            warnings.push("route both: colength and normalization agree".into());
            "surface-colength"
        }
    };
    Ok(ChernReport {
        method: method.into(),
        final_value: main - generic,
        terms,
        geometry,
        seeds,
        warnings,
    })
}
