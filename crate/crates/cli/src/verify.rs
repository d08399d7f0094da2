//! Oracle comparisons run by `polyfun verify`.

use std::collections::HashSet;

use polyfun_core::arith::{binom, gcd_factorial, legendre_ep, mul_mod, stirling2};
use polyfun_core::multivar::{
    canonical_forms, canonicalize_multi, extract_leading_coefficient, is_reducible_monomial,
    psi_d, psi_d_alt, psi_d_bruteforce, psi_d_general, reduce_monomial, ReductionSearch,
};
use polyfun_core::polyfun::oracle::{
    group_structure_bruteforce, idempotents_in_r0, psi_bruteforce, unit_count_bruteforce,
    unit_criterion_mismatches, ORACLE_MAX_MODULUS,
};
use polyfun_core::polyfun::{
    basic_null_polys, decompose_null, ideal_basis_star, idempotents, in_ideal_ipm, null_count, psi,
    random_null_poly, recompose, unit_count_3k, annihilated_by_factorial,
};
use polyfun_core::smarandache::{basis_spec, smarandache, smarandache_star};
use polyfun_core::{FactoredCount, MultiIndex, MultiPoly, Poly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{CliError, Result};

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    pub psi_max: Option<u64>,
    pub group_max: Option<u64>,
    pub deco_samples: Option<usize>,
    pub multi_grid: bool,
    pub units: bool,
    pub idempotents: bool,
    /// Also runs the Smarandache scan and the binomial identities.
    pub all: bool,
    pub seed: u64,
    /// Adds 1 to one seeded decomposition sample so it is no longer null.
    pub inject_fault: bool,
}

impl VerifyOptions {
    /// `--all` semantics: every scope at its full default size.
    pub fn everything(seed: u64) -> Self {
        VerifyOptions {
            psi_max: Some(ORACLE_MAX_MODULUS),
            group_max: Some(ORACLE_MAX_MODULUS),
            deco_samples: Some(300),
            multi_grid: true,
            units: true,
            idempotents: true,
            all: true,
            seed,
            inject_fault: false,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.psi_max.is_none()
            && self.group_max.is_none()
            && self.deco_samples.is_none()
            && !self.multi_grid
            && !self.units
            && !self.idempotents
            && !self.all
            && !self.inject_fault
    }
}

/// A check that ran clean, with a short summary of what it covered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Passed {
    pub check: &'static str,
    pub summary: String,
}

/// The first disagreement found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub check: &'static str,
    pub detail: String,
}

pub enum Outcome {
    Clean(Vec<Passed>),
    Failed(Vec<Passed>, Discrepancy),
}

type Check = std::result::Result<String, String>;
type Step<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn ensure(cond: bool, detail: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond { Ok(()) } else { Err(detail()) }
}

fn core<T>(r: polyfun_core::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

pub fn run(opts: &VerifyOptions) -> Result<Outcome> {
    for (flag, v) in [("--psi-max", opts.psi_max), ("--group-max", opts.group_max)] {
        if let Some(v) = v {
            if !(2..=ORACLE_MAX_MODULUS).contains(&v) {
                return Err(CliError::Input(format!(
                    "{flag} must lie in 2..={ORACLE_MAX_MODULUS}, got {v}"
                )));
            }
        }
    }
    let mut plan: Vec<Step<'_>> = Vec::new();
    if opts.all {
        plan.push(("smarandache", Box::new(check_smarandache)));
    }
    if let Some(max) = opts.psi_max {
        plan.push(("psi", Box::new(move || check_psi(max))));
    }
    if let Some(max) = opts.group_max {
        plan.push(("group", Box::new(move || check_group(max))));
    }
    let samples = match (opts.deco_samples, opts.inject_fault) {
        (Some(k), true) => Some(k.max(1)),
        (None, true) => Some(1),
        (k, false) => k,
    };
    if let Some(k) = samples {
        plan.push(("decompose", Box::new(move || check_decompose(k, opts.seed, opts.inject_fault))));
        plan.push(("window", Box::new(move || check_window(k, opts.seed))));
    }
    if opts.units {
        plan.push(("units", Box::new(check_units)));
    }
    if opts.idempotents {
        plan.push(("idempotents", Box::new(check_idempotents)));
    }
    if opts.multi_grid {
        plan.push(("multivariate", Box::new(check_multivariate)));
    }
    if opts.all {
        plan.push(("identities", Box::new(check_identities)));
    }
    let mut passed = Vec::new();
    for (check, f) in plan {
        match f() {
            Ok(summary) => passed.push(Passed { check, summary }),
            Err(detail) => return Ok(Outcome::Failed(passed, Discrepancy { check, detail })),
        }
    }
    Ok(Outcome::Clean(passed))
}

fn check_smarandache() -> Check {
    for n in 1..=5000u64 {
        // incremental k! mod n
        let scan = if n == 1 {
            0
        } else {
            let mut fact = 1;
            (1..).find(|&k| {
                fact = mul_mod(fact, k, n);
                fact == 0
            }).unwrap_or(0)
        };
        let s = core(smarandache(n))?;
        ensure(s == scan, || format!("s({n}) = {s}, factorial scan gives {scan}"))?;
    }
    for p in [2u64, 3, 5, 7, 11, 13] {
        for m in 1..=6u32 {
            let star = core(smarandache_star(p, m as u64))?;
            let s = core(smarandache(p.pow(m)))?;
            ensure(p * star == s, || format!("{p} * s*({p}^{m}) = {} but s = {s}", p * star))?;
        }
    }
    Ok("n <= 5000 against the factorial scan; p * s* = s for p <= 13, m <= 6".into())
}

fn check_psi(max: u64) -> Check {
    let spec = core(basis_spec(90))?;
    ensure(spec.betas == [6, 5, 3, 2] && spec.alphas == [1, 3, 15, 45], || format!("basis of 90: {spec:?}"))?;
    let p90 = core(psi(90))?;
    ensure(core(p90.to_u64())? == 246_037_500, || format!("psi(90) = {p90}"))?;
    for n in 2..=max {
        let formula = core(core(psi(n))?.to_u64())?;
        let closure = core(psi_bruteforce(n))?;
        ensure(formula == closure, || format!("psi({n}) = {formula}, span closure has {closure}"))?;
    }
    for n in 2..=200u64 {
        let s = core(smarandache(n))?;
        let lhs = core(null_count(n))?.mul(&core(psi(n))?);
        let rhs = FactoredCount::from_u64(n).map(|f| f.pow(s as i64));
        ensure(Ok(lhs.clone()) == rhs, || format!("|N({n})| * psi({n}) = {lhs}, n^s = {rhs:?}"))?;
        let tuples = (0..s).try_fold(FactoredCount::one(), |acc, k| {
            FactoredCount::from_u64(n / gcd_factorial(n, k)).map(|f| acc.mul(&f))
        });
        ensure(tuples == psi(n), || format!("canonical tuple count differs from psi({n})"))?;
    }
    Ok(format!("formula = span closure for n <= {max}; null-count and tuple-count identities for n <= 200"))
}

fn check_group(max: u64) -> Check {
    for n in 2..=max {
        let formula = core(polyfun_core::polyfun::group_structure(n))?;
        let smith = core(group_structure_bruteforce(n))?;
        ensure(formula == smith, || format!("n = {n}: formula {formula}, Smith form {smith}"))?;
    }
    for n in 2..=200 {
        let g = core(polyfun_core::polyfun::group_structure(n))?;
        ensure(g.order() == core(psi(n))?, || format!("order of group for n = {n} is {}", g.order()))?;
    }
    Ok(format!("formula = Smith form for n <= {max}; order = psi for n <= 200"))
}

fn random_poly(n: u64, max_degree: usize, rng: &mut ChaCha8Rng) -> Poly {
    let deg = rng.gen_range(0..=max_degree);
    Poly::new(n, (0..=deg).map(|_| rng.gen_range(0..n)).collect::<Vec<_>>())
}

fn check_decompose(samples: usize, seed: u64, inject_fault: bool) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fault_at = inject_fault.then(|| (rng.gen_range(0..3usize), rng.gen_range(0..samples)));
    for (which, n) in [12u64, 36, 90].into_iter().enumerate() {
        let spec = core(basis_spec(n))?;
        let basis = core(basic_null_polys(n))?;
        let max_degree = 2 * spec.beta(1);
        for i in 0..samples {
            let mut p = if i % 2 == 0 {
                core(random_null_poly(n, max_degree, &mut rng))?
            } else {
                let room = (max_degree - spec.beta(1)) as usize;
                let mut p = &random_poly(n, room, &mut rng) * &basis[0];
                for b in &basis[1..] {
                    p = &p + &b.scale(rng.gen_range(0..n));
                }
                p
            };
            if fault_at == Some((which, i)) {
                p = &p + &Poly::constant(n, 1);
            }
            let d = decompose_null(&p).map_err(|e| format!("n = {n}, sample {i} ({}): {e}", p.to_coeff_string()))?;
            let back = core(recompose(&d))?;
            ensure(back == p, || format!("n = {n}, sample {i}: recomposition {back} differs from {p}"))?;
            let q1 = d.cofactor(1);
            let want = p.degree().and_then(|deg| (deg as u64).checked_sub(spec.beta(1)));
            ensure(q1.degree().map(|x| x as u64) == want, || format!("n = {n}, sample {i}: deg q_1 wrong"))?;
            for k in 2..=spec.t() {
                let width = spec.beta(k - 1) - spec.beta(k);
                ensure(
                    d.cofactor(k).degree().is_none_or(|x| (x as u64) < width),
                    || format!("n = {n}, sample {i}: deg q_{k} >= {width}"),
                )?;
            }
            let again = core(decompose_null(&back))?;
            ensure(again == d, || format!("n = {n}, sample {i}: re-decomposition differs"))?;
        }
    }
    Ok(format!("{samples} samples each over Z_12, Z_36, Z_90"))
}

fn check_window(samples: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    for n in [8u64, 12, 90] {
        let s = core(smarandache(n))?;
        for i in 0..samples {
            let r = rng.gen_range(1..=2 * s);
            let alpha = rng.gen_range(0..n);
            // sum_j c_j prod_{i<j} (x - alpha - i) with c_j * j! = 0
            let mut p = Poly::zero(n);
            let mut falling = Poly::constant(n, 1);
            for j in 0..=r {
                if j > 0 {
                    let root = (alpha + j - 1) % n;
                    falling = &falling * &Poly::new(n, vec![(n - root) % n, 1]);
                }
                let step = n / gcd_factorial(n, j);
                p = &p + &falling.scale(step * rng.gen_range(0..n / step));
            }
            ensure(p.vanishes_on_window(alpha, r), || format!("n = {n}, sample {i}: generator broken"))?;
            ensure(core(annihilated_by_factorial(&p, r))?, || format!("n = {n}, sample {i}: {p} vanishes on [{alpha}, {alpha}+{r}] but a_k r! != 0"))?;
        }
    }
    Ok(format!("{samples} window-vanishing samples each over Z_8, Z_12, Z_90"))
}

fn check_units() -> Check {
    for (k, expected) in [(1u32, 8u64), (2, 5832)] {
        let n = 3u64.pow(k);
        let scanned = core(unit_count_bruteforce(n))?;
        let formula = core(core(unit_count_3k(k))?.to_u64())?;
        ensure(scanned == expected && formula == expected, || {
            format!("3^{k}: scan {scanned}, formula {formula}, expected {expected}")
        })?;
    }
    for n in [2u64, 3, 4, 6, 9] {
        let bad = core(unit_criterion_mismatches(n))?;
        ensure(bad.is_empty(), || format!("n = {n}: {} tables disagree with the unit criterion", bad.len()))?;
    }
    Ok("unit counts 8 and 5832; inverse search agrees for n in {2, 3, 4, 6, 9}".into())
}

fn check_idempotents() -> Check {
    for (p, m) in [(2u64, 1u32), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)] {
        let pm = p.pow(m);
        let eps = core(idempotents(p, m))?;
        let tables: Vec<Vec<u64>> = eps.iter().map(Poly::value_table).collect();
        for x in 0..pm as usize {
            let mut total = 0;
            for (i, t) in tables.iter().enumerate() {
                total += t[x];
                ensure(mul_mod(t[x], t[x], pm) == t[x], || format!("({p}, {m}): eps_{i}^2 != eps_{i} at {x}"))?;
                for (j, u) in tables.iter().enumerate() {
                    ensure(i == j || mul_mod(t[x], u[x], pm) == 0, || format!("({p}, {m}): eps_{i} eps_{j} != 0 at {x}"))?;
                }
            }
            ensure(total % pm == 1 % pm, || format!("({p}, {m}): sum of eps at {x} is {total}"))?;
        }
    }
    for (p, m) in [(2u64, 2u32), (3, 1), (3, 2)] {
        let count = core(idempotents_in_r0(p, m))?;
        ensure(count == 2, || format!("({p}, {m}): {count} idempotents vanish off pZ"))?;
    }
    for p in [2u64, 3, 5, 7] {
        let mut m = 1;
        while p.pow(m) <= 81 {
            for (k, b) in core(ideal_basis_star(p, m))?.iter().enumerate() {
                ensure(core(in_ideal_ipm(b, p, m))?, || format!("b*_{} for {p}^{m} not in I", k + 1))?;
            }
            m += 1;
        }
    }
    Ok("idempotent laws for six prime powers; two idempotents in R_0; b*_k in I for p^m <= 81".into())
}

fn check_multivariate() -> Check {
    for p in [2u64, 3, 5] {
        for m in 1..=3u32 {
            for d in 1..=3usize {
                let a = core(psi_d(p, m, d))?;
                let b = core(psi_d_alt(p, m, d))?;
                ensure(a == b, || format!("({p}, {m}, {d}): {a} vs {b}"))?;
            }
        }
    }
    for (n, d) in [(2u64, 2usize), (3, 2), (4, 2), (2, 3)] {
        let formula = core(core(psi_d_general(n, d))?.to_u64())?;
        let span = core(psi_d_bruteforce(n, d))?;
        ensure(formula == span, || format!("({n}, {d}): formula {formula}, span {span}"))?;
    }
    let mut search = ReductionSearch::new();
    for n in 2..=6u64 {
        for d in 1..=2usize {
            for k in MultiIndex::box_iter(d, 5).filter(|k| k.total_degree() <= 4) {
                for a in 0..n {
                    let divides = core(is_reducible_monomial(n, a, &k))?;
                    let mono = MultiPoly::monomial(n, a, k.clone());
                    let extracted = core(extract_leading_coefficient(&mono, &k))? == 0;
                    let found = core(search.is_reducible(n, a, &k))?;
                    ensure(divides == extracted && divides == found, || {
                        format!("n = {n}, a = {a}, k = {k}: divisibility {divides}, extraction {extracted}, search {found}")
                    })?;
                    if divides {
                        let r = core(reduce_monomial(n, a, &k))?;
                        ensure(core(mono.sub(&r).is_null())?, || format!("reduction of {a} x^{k} mod {n} is not equivalent"))?;
                    }
                }
            }
        }
    }
    for (p, m, d) in [(2u64, 1u32, 2usize), (2, 2, 2), (3, 1, 2)] {
        let forms = core(canonical_forms(p, m, d))?;
        let mut tables = HashSet::new();
        for f in &forms {
            ensure(core(canonicalize_multi(f))? == *f, || format!("{f} is not a fixpoint"))?;
            tables.insert(core(f.value_table())?);
        }
        let expected = core(core(psi_d(p, m, d))?.to_u64())?;
        ensure(tables.len() as u64 == expected, || {
            format!("({p}, {m}, {d}): {} distinct canonical functions, psi_d = {expected}", tables.len())
        })?;
    }
    Ok("psi_d formulas, span counts, three-way reducibility, canonical form counts".into())
}

fn check_identities() -> Check {
    for r in 0..=12u64 {
        let r_fact: i128 = (1..=r as i128).product();
        for j in 0..=12u32 {
            let sum: i128 = (0..=r)
                .map(|i| {
                    let term = binom(r, i) as i128 * (i as i128).pow(j);
                    if (r - i) % 2 == 0 { term } else { -term }
                })
                .sum();
            let stirling = r_fact * stirling2(j as u64, r) as i128;
            ensure(sum == stirling, || format!("r = {r}, j = {j}: sum {sum}, r! S(j, r) = {stirling}"))?;
            if (j as u64) <= r {
                let delta = if j as u64 == r { r_fact } else { 0 };
                ensure(sum == delta, || format!("r = {r}, k = {j}: sum {sum}, expected {delta}"))?;
            }
        }
    }
    // legendre_ep agrees with counting factors one by one
    for p in [2u64, 3, 5, 7] {
        let mut e = 0;
        for k in 1..=2000u64 {
            let mut x = k;
            while x % p == 0 {
                x /= p;
                e += 1;
            }
            ensure(legendre_ep(p, k) == e, || format!("e_{p}({k}!) wrong"))?;
        }
    }
    Ok("alternating binomial sums for r, j <= 12; factorial valuations".into())
}
