//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (run with `cargo test --test acceptance -- --nocapture`
//! to see the lines for passing criteria).

use std::sync::Arc;
use std::time::Instant;

use chernlocal::chern::{
    chern_icis, chern_surface, generic_linear_collection, imult_plane, ind_point,
    polar_curve_ideal, FormCollection, Route, SubCollection, VarietyInput,
};
use chernlocal::cli::{cmd_compute, ComputeOptions, Format};
use chernlocal::groebner::{
    colength, standard_basis, Colength, Ideal, Mode,
};
use chernlocal::matmod::{
    jacobian_matrix, module_colength, tensor_presentation, ModulePresentation, PolyMatrix,
};
use chernlocal::oracle::{colength_truncation, imult_resultant};
use chernlocal::polyalg::{parse_poly, Monomial, PolyRing};
use chernlocal::rng::SplitMix64;
use chernlocal::{QPoly, Rat};

fn ring(vars: &[&str]) -> Arc<PolyRing> {
    PolyRing::new(vars).unwrap()
}

fn p(text: &str, r: &Arc<PolyRing>) -> QPoly {
    parse_poly(text, r).unwrap()
}


const GOLDEN_FILE: &str = "\
ring x, y, z;
variety: y^2 - x^3;
dim 2;
normalization (t, z) -> (t^2, t^3, z);
collection k=1: (0, x^3, z^2), (z^3, 0, x^2);
collection k=1: (y^2, z^3, 0), (0, y^3, z^2);
";

fn golden() -> (VarietyInput<Rat>, FormCollection<Rat>) {
    let spec = chernlocal::cli::parse_input_file(GOLDEN_FILE).unwrap();
    (spec.variety, spec.collection)
}

/// Local (Mora) mutual-membership ideal equality, i.e. equality in the
/// localization at the origin: "up to unit" for principal ideals.
fn local_ideal_eq(a: &Ideal<Rat>, b: &Ideal<Rat>) -> bool {
    let sa = standard_basis(a, Mode::Local.order(), None).unwrap();
    let sb = standard_basis(b, Mode::Local.order(), None).unwrap();
    a.gens().iter().all(|g| sb.normal_form(g).is_zero())
        && b.gens().iter().all(|g| sa.normal_form(g).is_zero())
}

fn pass(name: &str) {
    println!("ACCEPTANCE {name}: pass");
}

#[test]
fn golden_example() {
    let start = Instant::now();
    let opt = ComputeOptions {
        seed: 7,
        trials: 3,
        bound: 10,
        route: Route::Normalization,
        method: None,
        format: Format::Json,
    };
    let out = cmd_compute(GOLDEN_FILE, &opt).unwrap();
    assert!(out.contains("\"final\": 47"), "report:\n{out}");
    assert!(out.contains("surface-normalization"));
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 10, "took {elapsed:?}");
    pass("golden example (normalization route, 47)");
}

#[test]
fn golden_intermediates() {
    let (x, c) = golden();
    let r = x.ring.clone();
    let jac = jacobian_matrix(&x.gens).unwrap();
    let d1 = jac.augment(&c.parts[0].forms).unwrap().det().unwrap();
    let e1 = p("-3x^7 + 2z^5 y", &r);
    assert!(d1 == e1 || d1 == -e1.clone(), "first determinant: {d1}");
    let d2 = jac.augment(&c.parts[1].forms).unwrap().det().unwrap();
    let e2 = p("z^2 (2y^3 + 3x^2 z^3)", &r);
    assert!(d2 == e2 || d2 == -e2.clone(), "second determinant: {d2}");

    // Pulled-back polar equations, up to unit in the local ring.
    let map = x.normalization.clone().unwrap();
    let src = map.source_ring.clone();
    let pull = |i: &Ideal<Rat>| -> Ideal<Rat> {
        Ideal::new(
            &src,
            i.gens()
                .iter()
                .map(|g| g.substitute(&map.images, &src).unwrap())
                .collect(),
        )
        .unwrap()
    };
    let p1 = pull(&polar_curve_ideal(&x, &c.parts[0].forms).unwrap());
    let p2 = pull(&polar_curve_ideal(&x, &c.parts[1].forms).unwrap());
    let e1 = Ideal::new(&src, vec![p("-3t^11 + 2z^5", &src)]).unwrap();
    let e2 = Ideal::new(&src, vec![p("z^2 (2t^5 + 3z^3)", &src)]).unwrap();
    assert!(local_ideal_eq(&p1, &e1), "first pulled-back polar ideal");
    assert!(local_ideal_eq(&p2, &e2), "second pulled-back polar ideal");
    pass("golden intermediates (determinants and pullbacks)");
}

#[test]
fn route_cross_check() {
    let (x, c) = golden();
    let rep = chern_surface(&x, &c, 7, 3, 10, Route::Both).unwrap();
    assert_eq!(rep.final_value, 47);
    let rc = chern_surface(&x, &c, 7, 3, 10, Route::Colength).unwrap();
    let rn = chern_surface(&x, &c, 7, 3, 10, Route::Normalization).unwrap();
    assert_eq!(rc.final_value, 47);
    assert_eq!(rn.final_value, 47);
    pass("route cross-check (both routes give 47)");
}

#[test]
fn morse_suite() {
    for d in 1u64..=3 {
        for n in d..=d + 2 {
            let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
            let r = PolyRing::new(&names).unwrap();
            let gens: Vec<QPoly> = (d..n).map(|i| QPoly::var(&r, i as usize)).collect();
            let x = VarietyInput::new(&r, gens, d).unwrap();
            // d(sum of squares): covector (2x_1, ..., 2x_n).
            let form: Vec<QPoly> = (0..n)
                .map(|i| QPoly::var(&r, i as usize).scale(&Rat::from_integer(2.into())))
                .collect();
            let c = FormCollection::new(
                vec![SubCollection {
                    k: d,
                    forms: vec![form],
                }],
                &x,
            )
            .unwrap();
            assert_eq!(
                ind_point(&x, &c).unwrap(),
                Colength::Finite(1),
                "ind at d={d}, n={n}"
            );
            let rep = chern_icis(&x, &c, 11, 3, 10).unwrap();
            assert_eq!(rep.final_value, 1, "Chern term at d={d}, n={n}");
        }
    }
    pass("Morse suite (ind = 1, Chern term = 1 for all d, n)");
}

#[test]
fn milnor_sanity() {
    let r = ring(&["x", "y"]);
    let x = VarietyInput::new(&r, vec![], 2).unwrap();
    for (f, expect) in [("x^2 + y^2", 1u64), ("x^3 + y^3", 4), ("x^3 - y^2", 2)] {
        let fp = p(f, &r);
        let c = FormCollection::new(
            vec![SubCollection {
                k: 2,
                forms: vec![vec![fp.derivative(0), fp.derivative(1)]],
            }],
            &x,
        )
        .unwrap();
        assert_eq!(
            ind_point(&x, &c).unwrap(),
            Colength::Finite(expect),
            "f = {f}"
        );
    }
    pass("Milnor-number sanity (1, 4, 2)");
}

#[test]
fn generic_zero() {
    // ICIS pipeline on the smooth plane.
    let r = ring(&["x", "y"]);
    let x = VarietyInput::new(&r, vec![], 2).unwrap();
    for seed in [31u64, 47, 93] {
        let c: FormCollection<Rat> =
            generic_linear_collection(&r, &[(2, 1)], seed, 10).unwrap();
        let rep = chern_icis(&x, &c, seed, 3, 10).unwrap();
        assert_eq!(rep.final_value, 0, "icis seed {seed}");
    }
    // Surface pipeline on the cusp surface.
    let (xs, _) = golden();
    for seed in [13u64, 27, 55] {
        let c: FormCollection<Rat> =
            generic_linear_collection(&xs.ring, &[(1, 2), (1, 2)], seed, 10).unwrap();
        let rep = chern_surface(&xs, &c, seed.wrapping_add(100), 3, 10, Route::Colength).unwrap();
        assert_eq!(rep.final_value, 0, "surface seed {seed}");
    }
    pass("generic-zero property (both pipelines, 3 seeds each)");
}

#[test]
fn cor_2_6_identity_suite() {
    let start = Instant::now();
    let r = ring(&["x", "y"]);
    let mut rng = SplitMix64::new(260);
    let mut done = 0;
    while done < 20 {
        // Rank-one presentations whose minors ideals sum to an m-primary
        // ideal by construction (pure powers of both variables present).
        let a1 = 1 + rng.index(3) as u32;
        let a2 = 1 + rng.index(2) as u32;
        let b1 = 1 + rng.index(3) as u32;
        let b2 = 1 + rng.index(2) as u32;
        let c1 = rng.int_in(3);
        let c2 = rng.int_in(3);
        let fa = format!("x^{a1} + ({c1}) y^{}", a2 + b2);
        let ga = format!("y^{a2}");
        let fb = format!("y^{b1} + ({c2}) x^{}", a1 + b1);
        let gb = format!("x^{b2}");
        let mat_a = PolyMatrix::new(&r, 1, 2, vec![p(&fa, &r), p(&ga, &r)]).unwrap();
        let mat_b = PolyMatrix::new(&r, 1, 2, vec![p(&fb, &r), p(&gb, &r)]).unwrap();
        let ma = ModulePresentation::new(mat_a.clone());
        let mb = ModulePresentation::new(mat_b.clone());
        let minors_sum = mat_a
            .maximal_minors()
            .sum(&mat_b.maximal_minors())
            .unwrap();
        let rhs = colength(&minors_sum, Mode::Local).unwrap();
        let Colength::Finite(rhs) = rhs else { continue };
        let lhs = module_colength(&tensor_presentation(&ma, &mb).unwrap()).unwrap();
        assert_eq!(lhs, Colength::Finite(rhs), "instance ({fa}; {ga}) vs ({fb}; {gb})");
        done += 1;
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}");
    pass("tensor-length identity suite (20 instances)");
}

#[test]
fn oracle_equivalence() {
    let r = ring(&["x", "y"]);
    let mut rng = SplitMix64::new(777);
    // Colength: 30 finite instances, m-primary by construction.
    let mut done = 0;
    while done < 30 {
        let a = 1 + rng.index(4) as u32;
        let b = 1 + rng.index(4) as u32;
        let extra = format!(
            "x^{} y^{} + ({}) x^{}",
            rng.index(3),
            rng.index(3),
            rng.int_in(3),
            rng.index(3)
        );
        let gens = vec![
            p(&format!("x^{a}"), &r),
            p(&format!("y^{b}"), &r),
            p(&extra, &r),
        ];
        let i = Ideal::new(&r, gens).unwrap();
        let main = colength(&i, Mode::Local).unwrap().finite().unwrap();
        let oracle = colength_truncation(&i, 40).unwrap().value;
        assert_eq!(main, oracle, "colength instance {done}");
        done += 1;
    }
    // Intersection multiplicity: 20 finite pairs.
    let rt = ring(&["t", "z"]);
    let mut done = 0;
    let mut attempts = 0;
    while done < 20 {
        attempts += 1;
        assert!(attempts < 400, "could not find enough finite pairs");
        let f = random_curve(&rt, &mut rng);
        let g = random_curve(&rt, &mut rng);
        let Colength::Finite(main) = imult_plane(&f, &g).unwrap() else {
            continue;
        };
        let oracle = imult_resultant(&f, &g, 1000 + done as u64).unwrap();
        assert_eq!(main, oracle, "imult pair ({f}, {g})");
        done += 1;
    }
    pass("oracle equivalence (30 colengths, 20 multiplicities)");
}

/// Random plane curve through the origin, small degree.
fn random_curve(r: &Arc<PolyRing>, rng: &mut SplitMix64) -> QPoly {
    loop {
        let mut f = QPoly::zero(r);
        for _ in 0..3 {
            let c = Rat::from_integer(rng.int_in(3).into());
            let e1 = rng.index(4) as u32;
            let e2 = rng.index(4) as u32;
            if e1 + e2 == 0 {
                continue;
            }
            f = &f + &QPoly::term(r, c, Monomial::from_exps(vec![e1, e2]));
        }
        if !f.is_zero() {
            return f;
        }
    }
}

#[test]
fn invariance_suite() {
    let mut rng = SplitMix64::new(4242);
    let r2 = ring(&["x", "y"]);

    // Minors-ideal invariance under unimodular row mixing (20 instances).
    for i in 0..20 {
        let entries: Vec<QPoly> = (0..6).map(|_| random_curve(&r2, &mut rng)).collect();
        let a = PolyMatrix::new(&r2, 2, 3, entries.clone()).unwrap();
        let c = Rat::from_integer(rng.int_in(4).into());
        let mixed: Vec<QPoly> = (0..3)
            .map(|j| &entries[j] + &entries[3 + j].scale(&c))
            .chain((0..3).map(|j| entries[3 + j].clone()))
            .collect();
        let b = PolyMatrix::new(&r2, 2, 3, mixed).unwrap();
        assert!(
            chernlocal::groebner::ideal_eq(&a.maximal_minors(), &b.maximal_minors()).unwrap(),
            "minors instance {i}"
        );
    }

    // ind invariance under form scaling and permutation (20 instances).
    let x = VarietyInput::new(&r2, vec![], 2).unwrap();
    for i in 0..20 {
        let base = vec![
            vec![p("x", &r2), random_curve(&r2, &mut rng)],
            vec![random_curve(&r2, &mut rng), p("y", &r2)],
        ];
        let part = |forms: Vec<Vec<QPoly>>| SubCollection { k: 1, forms };
        let c1 = FormCollection::new(
            vec![part(base.clone()), part(vec![
                vec![p("y", &r2), p("0", &r2)],
                vec![p("0", &r2), p("x", &r2)],
            ])],
            &x,
        )
        .unwrap();
        // Scale each covector by a nonzero rational and swap the two forms
        // of the first block.
        let s1 = Rat::new((1 + rng.index(5) as i64).into(), (1 + rng.index(3) as i64).into());
        let s2 = -Rat::new((1 + rng.index(5) as i64).into(), 1.into());
        let scaled = vec![
            base[1].iter().map(|e| e.scale(&s1)).collect::<Vec<_>>(),
            base[0].iter().map(|e| e.scale(&s2)).collect::<Vec<_>>(),
        ];
        let c2 = FormCollection::new(
            vec![part(scaled), part(vec![
                vec![p("0", &r2), p("x", &r2)],
                vec![p("y", &r2), p("0", &r2)],
            ])],
            &x,
        )
        .unwrap();
        assert_eq!(
            ind_point(&x, &c1).unwrap(),
            ind_point(&x, &c2).unwrap(),
            "ind instance {i}"
        );
    }

    // imult symmetry, additivity, and the ord-product bound (20 instances).
    let rt = ring(&["t", "z"]);
    let mut done = 0;
    let mut attempts = 0;
    while done < 20 {
        attempts += 1;
        assert!(attempts < 600, "could not find enough finite triples");
        let f = random_curve(&rt, &mut rng);
        let g = random_curve(&rt, &mut rng);
        let h = random_curve(&rt, &mut rng);
        let (Colength::Finite(fg), Colength::Finite(fh)) = (
            imult_plane(&f, &g).unwrap(),
            imult_plane(&f, &h).unwrap(),
        ) else {
            continue;
        };
        // Symmetry.
        assert_eq!(imult_plane(&g, &f).unwrap(), Colength::Finite(fg));
        // Additivity over products.
        let gh = &g * &h;
        assert_eq!(
            imult_plane(&f, &gh).unwrap(),
            Colength::Finite(fg + fh),
            "additivity for ({f}; {g}; {h})"
        );
        // Lower bound by the product of the orders of vanishing.
        let of = f.order_of_vanishing().unwrap();
        let og = g.order_of_vanishing().unwrap();
        assert!(fg >= of * og, "ord bound for ({f}; {g})");
        done += 1;
    }

    pass("invariance suite (minors, ind, imult; 20 instances each)");
}
