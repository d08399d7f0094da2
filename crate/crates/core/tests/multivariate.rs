use polyfun_core::multivar::{
    canonical_bounds, canonicalize_multi, extract_leading_coefficient, is_reducible_monomial,
    psi_d, psi_d_alt, psi_d_bruteforce, psi_d_general, reduce_monomial, ReductionSearch,
};
use polyfun_core::polyfun::psi_prime_power;
use polyfun_core::smarandache::{smarandache, smarandache_d};
use polyfun_core::{MultiIndex, MultiPoly};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

#[test]
fn two_formulas_agree() {
    for p in [2u64, 3, 5] {
        for m in 1..=3u32 {
            for d in 1..=3usize {
                assert_eq!(psi_d(p, m, d).unwrap(), psi_d_alt(p, m, d).unwrap(), "({p}, {m}, {d})");
            }
            assert_eq!(psi_d(p, m, 1).unwrap(), psi_prime_power(p, m).unwrap());
        }
    }
    for n in 1..=300 {
        assert_eq!(smarandache_d(n, 1).unwrap(), smarandache(n).unwrap());
    }
}

#[test]
fn general_formula_matches_span() {
    for (n, d) in [(2u64, 2usize), (3, 2), (4, 2), (2, 3), (6, 1), (8, 1)] {
        let formula = psi_d_general(n, d).unwrap().to_u64().unwrap();
        assert_eq!(formula, psi_d_bruteforce(n, d).unwrap(), "(n, d) = ({n}, {d})");
    }
}

fn factorial_product(k: &MultiIndex) -> BigUint {
    k.0.iter().flat_map(|&ki| 1..=ki as u64).map(BigUint::from).product()
}

#[test]
fn reducibility_three_ways() {
    let mut search = ReductionSearch::new();
    for n in 2..=6u64 {
        for d in 1..=2usize {
            for k in MultiIndex::box_iter(d, 5).filter(|k| k.total_degree() <= 4) {
                for a in 0..n {
                    let by_divisibility = is_reducible_monomial(n, a, &k).unwrap();
                    let exact = (BigUint::from(a) * factorial_product(&k)) % n == BigUint::from(0u32);
                    assert_eq!(by_divisibility, exact);
                    let mono = MultiPoly::monomial(n, a, k.clone());
                    let by_extraction = extract_leading_coefficient(&mono, &k).unwrap() == 0;
                    let by_search = search.is_reducible(n, a, &k).unwrap();
                    assert_eq!(by_divisibility, by_extraction, "n={n} a={a} k={k}");
                    assert_eq!(by_divisibility, by_search, "n={n} a={a} k={k}");
                    if by_divisibility {
                        let r = reduce_monomial(n, a, &k).unwrap();
                        let certificate = mono.sub(&r);
                        assert!(certificate.is_null().unwrap());
                        assert_eq!(extract_leading_coefficient(&certificate, &k).unwrap(), 0);
                    }
                }
            }
        }
    }
}

#[test]
fn reduction_lowers_degree() {
    for n in 2..=12u64 {
        for d in 1..=2usize {
            for k in MultiIndex::box_iter(d, 6).filter(|k| k.total_degree() <= 5) {
                for a in 0..n {
                    match reduce_monomial(n, a, &k) {
                        Ok(r) => {
                            assert!(r.total_degree().is_none_or(|t| t < k.total_degree().max(1)));
                            let mono = MultiPoly::monomial(n, a, k.clone());
                            if n.pow(d as u32) <= 10_000 {
                                assert_eq!(r.value_table().unwrap(), mono.value_table().unwrap());
                            }
                        }
                        Err(_) => assert!(!is_reducible_monomial(n, a, &k).unwrap()),
                    }
                }
            }
        }
    }
}

fn forms(p: u64, m: u32, d: usize) -> Vec<MultiPoly> {
    let pm = p.pow(m);
    let bounds = canonical_bounds(p, m, d).unwrap();
    let mut out = vec![MultiPoly::zero(pm, d)];
    for (k, bound) in bounds {
        out = out
            .into_iter()
            .flat_map(|base| {
                let k = k.clone();
                (0..bound).map(move |c| base.add(&MultiPoly::monomial(pm, c, k.clone())))
            })
            .collect();
    }
    out
}

#[test]
fn canonical_forms_are_distinct_functions() {
    for (p, m, d) in [(2u64, 1u32, 2usize), (2, 2, 2), (3, 1, 2)] {
        let all = forms(p, m, d);
        let expected = psi_d(p, m, d).unwrap().to_u64().unwrap();
        assert_eq!(all.len() as u64, expected);
        let mut tables = HashSet::new();
        for f in &all {
            assert_eq!(&canonicalize_multi(f).unwrap(), f);
            tables.insert(f.value_table().unwrap());
        }
        assert_eq!(tables.len() as u64, expected, "({p}, {m}, {d})");
    }
}

#[test]
fn canonicalization_preserves_functions() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for (p, m, d) in [(2u64, 1u32, 2usize), (2, 2, 2), (3, 1, 2), (2, 3, 2), (3, 2, 2), (5, 1, 2), (2, 2, 3)] {
        let pm = p.pow(m);
        let bounds: std::collections::HashMap<_, _> = canonical_bounds(p, m, d).unwrap().into_iter().collect();
        for _ in 0..40 {
            let terms = (0..rng.gen_range(0..8)).map(|_| {
                let k = MultiIndex::new((0..d).map(|_| rng.gen_range(0..9)).collect::<Vec<u32>>());
                (k, rng.gen_range(0..pm))
            });
            let f = MultiPoly::from_terms(pm, d, terms).unwrap();
            let c = canonicalize_multi(&f).unwrap();
            assert_eq!(c.value_table().unwrap(), f.value_table().unwrap());
            for (k, coeff) in c.terms() {
                assert!(coeff < bounds[k], "{k} coefficient {coeff} out of range");
            }
            assert_eq!(canonicalize_multi(&c).unwrap(), c);
        }
    }
}
