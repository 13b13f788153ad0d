use std::sync::Arc;

use proptest::prelude::*;

use crate::error::Error;
use crate::polyalg::{parse_poly, Monomial, MonomialOrder, PolyRing, Polynomial};
use crate::{QPoly, Rat};

fn ring(vars: &[&str]) -> Arc<PolyRing> {
    PolyRing::new(vars).unwrap()
}

fn p(text: &str, r: &Arc<PolyRing>) -> QPoly {
    parse_poly(text, r).unwrap()
}

#[test]
fn ring_validation() {
    assert!(PolyRing::new::<&str>(&[]).is_err());
    assert!(PolyRing::new(&["x", "x"]).is_err());
    assert!(PolyRing::new(&["x", ""]).is_err());
    assert!(PolyRing::new(&["x", "y"]).is_ok());
}

#[test]
fn parse_examples() {
    let r = ring(&["x", "y", "z"]);
    let f = p("y^2 - x^3", &r);
    assert_eq!(f.num_terms(), 2);
    assert_eq!(f.coeff(&Monomial::var(3, 1, 2)), Rat::from_integer(1.into()));
    assert_eq!(
        f.coeff(&Monomial::var(3, 0, 3)),
        Rat::from_integer((-1).into())
    );

    assert_eq!(p("(x+y)^2", &r), p("x^2 + 2x y + y^2", &r));
    assert_eq!(p("2xy", &r), p("2 * x * y", &r));
    assert_eq!(p("x/2", &r), p("1/2 x", &r));
    assert_eq!(p("-x", &r), -p("x", &r));

    match parse_poly::<Rat>("x + w", &r) {
        Err(Error::Parse { pos, .. }) => assert!(pos >= 4),
        other => panic!("expected positioned parse error, got {other:?}"),
    }
    assert!(parse_poly::<Rat>("x +", &r).is_err());
    assert!(parse_poly::<Rat>("x / y", &r).is_err());
    assert!(parse_poly::<Rat>("x ^ y", &r).is_err());
}

#[test]
fn arithmetic_examples() {
    let r = ring(&["x", "y"]);
    assert_eq!(&p("x + y", &r) * &p("x - y", &r), p("x^2 - y^2", &r));
    let f = p("y^2 - x^3", &r);
    assert_eq!(&f + &QPoly::zero(&r), f);
    assert_eq!(&f * &p("1", &r), f);
    assert_eq!(p("x", &r).pow(0), p("1", &r));
}

#[test]
fn derivative_examples() {
    let r = ring(&["x", "y", "z"]);
    let f = p("y^2 - x^3", &r);
    assert_eq!(f.derivative(0), p("-3x^2", &r));
    assert_eq!(f.derivative(1), p("2y", &r));
    assert!(p("5", &r).derivative(0).is_zero());
}

#[test]
fn substitution_is_the_normalization_pullback() {
    let r = ring(&["x", "y", "z"]);
    let src = ring(&["t", "z"]);
    let images = vec![p("t^2", &src), p("t^3", &src), p("z", &src)];
    assert!(p("y^2 - x^3", &r).substitute(&images, &src).unwrap().is_zero());
    assert_eq!(
        p("-3x y^3 + 2z^5", &r).substitute(&images, &src).unwrap(),
        p("-3t^11 + 2z^5", &src)
    );
    assert_eq!(
        p("2x y + 3z^3", &r).substitute(&images, &src).unwrap(),
        p("2t^5 + 3z^3", &src)
    );
    // Incomplete maps are rejected.
    assert!(matches!(
        p("x", &r).substitute(&images[..2], &src),
        Err(Error::IncompleteMap { .. })
    ));
}

#[test]
fn order_of_vanishing_examples() {
    let r = ring(&["t"]);
    assert_eq!(p("t^3 + t^5", &r).order_of_vanishing(), Some(3));
    assert_eq!(p("1 + t", &r).order_of_vanishing(), Some(0));
    assert_eq!(QPoly::zero(&r).order_of_vanishing(), None);
}

#[test]
fn leading_term_examples() {
    let r = ring(&["x", "y"]);
    let f = p("x^2 + y", &r);
    assert_eq!(
        f.leading_monomial(&MonomialOrder::DegRevLex).unwrap(),
        Monomial::var(2, 0, 2)
    );
    assert_eq!(
        f.leading_monomial(&MonomialOrder::NegDegRevLex).unwrap(),
        Monomial::var(2, 1, 1)
    );
    assert!(QPoly::zero(&r).leading_term(&MonomialOrder::DegRevLex).is_err());
}

#[test]
fn display_is_reparseable_on_examples() {
    let r = ring(&["x", "y", "z"]);
    for t in [
        "y^2 - x^3",
        "-3x^7 + 2z^5 y",
        "z^2 (2y^3 + 3x^2 z^3)",
        "1/2 x - 2/3",
        "0",
        "-1",
        "x y z",
    ] {
        let f = p(t, &r);
        assert_eq!(p(&f.to_string(), &r), f, "round-trip of '{t}'");
    }
}

// ---------------------------------------------------------------------------
// Randomized invariants.

fn arb_poly(r: Arc<PolyRing>) -> impl Strategy<Value = QPoly> {
    let n = r.nvars();
    proptest::collection::vec(
        (
            proptest::collection::vec(0u32..4, n),
            -6i64..=6,
            1i64..=3,
        ),
        0..6,
    )
    .prop_map(move |terms| {
        let mut acc = QPoly::zero(&r);
        for (exps, num, den) in terms {
            let c = Rat::new(num.into(), den.into());
            if num != 0 {
                acc = &acc + &QPoly::term(&r, c, Monomial::from_exps(exps));
            }
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((a, b, c) in (arb_poly(ring(&["x", "y", "z"])), arb_poly(ring(&["x", "y", "z"])), arb_poly(ring(&["x", "y", "z"])))) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, QPoly::zero(a.ring()));
    }

    #[test]
    fn print_parse_fixpoint(a in arb_poly(ring(&["x", "y", "z"]))) {
        let r = a.ring().clone();
        let printed = a.to_string();
        let reparsed = parse_poly::<Rat>(&printed, &r).unwrap();
        prop_assert_eq!(&reparsed, &a);
        prop_assert_eq!(reparsed.to_string(), printed);
    }

    #[test]
    fn substitute_is_a_ring_hom((a, b) in (arb_poly(ring(&["x", "y", "z"])), arb_poly(ring(&["x", "y", "z"])))) {
        let src = ring(&["t", "z"]);
        let images = vec![
            parse_poly::<Rat>("t^2", &src).unwrap(),
            parse_poly::<Rat>("t^3 + z", &src).unwrap(),
            parse_poly::<Rat>("z", &src).unwrap(),
        ];
        let lhs = (&a * &b).substitute(&images, &src).unwrap();
        let rhs = &a.substitute(&images, &src).unwrap() * &b.substitute(&images, &src).unwrap();
        prop_assert_eq!(lhs, rhs);
        let lhs = (&a + &b).substitute(&images, &src).unwrap();
        let rhs = &a.substitute(&images, &src).unwrap() + &b.substitute(&images, &src).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn leading_term_is_multiplicative((a, b) in (arb_poly(ring(&["x", "y"])), arb_poly(ring(&["x", "y"])))) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        for ord in [MonomialOrder::DegRevLex, MonomialOrder::NegDegRevLex, MonomialOrder::Elim { block: 1 }] {
            let (ca, ma) = a.leading_term(&ord).unwrap();
            let (cb, mb) = b.leading_term(&ord).unwrap();
            let (cab, mab) = (&a * &b).leading_term(&ord).unwrap();
            prop_assert_eq!(&mab, &ma.mul(&mb));
            prop_assert_eq!(cab, ca * cb);
        }
    }
}
