use polyfun_core::polyfun::{canonicalize, equal_as_functions, CanonicalPolyfunction};
use polyfun_core::{MultiPoly, Poly};
use proptest::prelude::*;

fn poly(max_n: u64, max_len: usize) -> impl Strategy<Value = Poly> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(0..n, 0..max_len).prop_map(move |c| Poly::new(n, c))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn divrem_recomposes(
        (a, b) in (2u64..=200).prop_flat_map(|n| (
            prop::collection::vec(0..n, 0..24).prop_map(move |c| Poly::new(n, c)),
            prop::collection::vec(0..n, 0..8).prop_map(move |mut c| { c.push(1); Poly::new(n, c) }),
        ))
    ) {
        let (q, r) = a.monic_divrem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
    }

    #[test]
    fn canonicalize_keeps_function(p in poly(100, 30)) {
        let n = p.modulus();
        let c = canonicalize(&p);
        prop_assert_eq!(c.to_poly().value_table(), p.value_table());
        let bounds = CanonicalPolyfunction::bounds(n).unwrap();
        for (coeff, bound) in c.coeffs().iter().zip(&bounds) {
            prop_assert!(coeff < bound);
        }
        prop_assert_eq!(canonicalize(&c.to_poly()), c.clone());
        prop_assert!(equal_as_functions(&p, &c.to_poly()));
    }

    #[test]
    fn equal_functions_share_canonical_form(p in poly(60, 12), q_shift in 0usize..4) {
        // adding a multiple of the monic null polynomial prod_{i=1}^{s} (x+i)
        let n = p.modulus();
        let s = polyfun_core::smarandache::smarandache(n).unwrap();
        let null = Poly::rising_product(n, s).shift(q_shift);
        prop_assert_eq!(canonicalize(&(&p + &null)), canonicalize(&p));
    }

    #[test]
    fn poly_text_round_trips(p in poly(1000, 20)) {
        prop_assert_eq!(Poly::parse(p.modulus(), &p.to_coeff_string()).unwrap(), p);
    }

    #[test]
    fn poly_parser_total(n in 1u64..1000, text in "[-+0-9, x]{0,40}") {
        let _ = Poly::parse(n, &text);
    }

    #[test]
    fn multipoly_parser_total(text in "(mod=[0-9]{1,3} d=[0-9]\n)?([0-9 ]{0,8}:? ?-?[0-9]{0,5}\n){0,6}") {
        if let Ok(p) = MultiPoly::parse(&text) {
            prop_assert_eq!(MultiPoly::parse(&p.to_text()).unwrap(), p);
        }
    }

    #[test]
    fn multipoly_parser_arbitrary_bytes(text in "\\PC{0,80}") {
        let _ = MultiPoly::parse(&text);
    }
}
