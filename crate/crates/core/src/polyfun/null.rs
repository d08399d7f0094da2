use rand::Rng;

use crate::error::{Error, Result};
use crate::polynomial::Poly;
use crate::smarandache::{basis_spec, BasisSpec};

/// `b_k = alpha_k * prod_{i=1}^{beta_k} (x + i)` over `Z_n`, `k` 1-based.
pub fn basic_null_poly(n: u64, k: usize) -> Result<Poly> {
    let spec = basis_spec(n)?;
    if k == 0 || k > spec.t() {
        return Err(Error::OutOfRange(format!("k = {k} outside 1..={}", spec.t())));
    }
    Ok(basis_element(&spec, k))
}

fn basis_element(spec: &BasisSpec, k: usize) -> Poly {
    Poly::rising_product(spec.n, spec.beta(k)).scale(spec.alpha(k))
}

pub fn basic_null_polys(n: u64) -> Result<Vec<Poly>> {
    let spec = basis_spec(n)?;
    Ok((1..=spec.t()).map(|k| basis_element(&spec, k)).collect())
}

/// The cofactors `q_1, ..., q_t` with `p = sum q_k b_k`; `q_k` lives over
/// `Z_{n / alpha_k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullDecomposition {
    modulus: u64,
    cofactors: Vec<Poly>,
}

impl NullDecomposition {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn cofactors(&self) -> &[Poly] {
        &self.cofactors
    }

    /// `q_k`, 1-based.
    pub fn cofactor(&self, k: usize) -> &Poly {
        &self.cofactors[k - 1]
    }

    /// Builds a decomposition from raw cofactors, reducing each `q_k`
    /// modulo `n / alpha_k`. No degree bounds are imposed.
    pub fn from_cofactors(n: u64, cofactors: Vec<Poly>) -> Result<Self> {
        let spec = basis_spec(n)?;
        if cofactors.len() != spec.t() {
            return Err(Error::OutOfRange(format!(
                "expected {} cofactors, got {}",
                spec.t(),
                cofactors.len()
            )));
        }
        let cofactors = cofactors
            .into_iter()
            .enumerate()
            .map(|(i, q)| q.with_modulus(n / spec.alphas[i]))
            .collect();
        Ok(NullDecomposition { modulus: n, cofactors })
    }
}

/// Splits a null-polynomial along the basic null-polynomials.
///
/// Stage 1 divides by the normed `b_1`. Stage `l + 1` divides the running
/// remainder, whose coefficients are all multiples of `alpha_{l+1}`, by the
/// monic `prod_{i=1}^{beta_{l+1}} (x + i)` over `Z_{n / alpha_{l+1}}`.
///
/// # Panics
///
/// If the intermediate divisibility or the final zero remainder fails. Both
/// are guaranteed for null input, so either indicates a bug.
pub fn decompose_null(p: &Poly) -> Result<NullDecomposition> {
    let n = p.modulus();
    let spec = basis_spec(n)?;
    if !p.is_null() {
        return Err(Error::NotNull);
    }
    let mut cofactors = Vec::with_capacity(spec.t());
    let (q1, mut rem) = p.monic_divrem(&Poly::rising_product(n, spec.beta(1)))?;
    cofactors.push(q1);
    for k in 2..=spec.t() {
        let alpha = spec.alpha(k);
        let sub = n / alpha;
        let scaled: Vec<u64> = rem
            .coeffs()
            .iter()
            .map(|&a| {
                assert!(
                    a % alpha == 0,
                    "decompose_null: coefficient {a} of stage-{k} remainder not divisible by {alpha} (n = {n})"
                );
                a / alpha
            })
            .collect();
        let reduced = Poly::new(sub, scaled);
        let (q, r) = reduced.monic_divrem(&Poly::rising_product(sub, spec.beta(k)))?;
        cofactors.push(q);
        rem = r.with_modulus(n).scale(alpha);
    }
    assert!(
        rem.is_zero(),
        "decompose_null: nonzero final remainder {rem} for n = {n}"
    );
    Ok(NullDecomposition { modulus: n, cofactors })
}

/// `sum_k lift(q_k) * b_k` over `Z_n`.
pub fn recompose(d: &NullDecomposition) -> Result<Poly> {
    let n = d.modulus;
    let basis = basic_null_polys(n)?;
    Ok(d.cofactors
        .iter()
        .zip(&basis)
        .fold(Poly::zero(n), |acc, (q, b)| &acc + &(&q.with_modulus(n) * b)))
}

/// A random null-polynomial of degree at most `max_degree`: a random
/// combination `sum r_k b_k` with polynomial multipliers.
pub fn random_null_poly<R: Rng + ?Sized>(n: u64, max_degree: u64, rng: &mut R) -> Result<Poly> {
    let spec = basis_spec(n)?;
    let mut acc = Poly::zero(n);
    for k in 1..=spec.t() {
        let beta = spec.beta(k);
        if beta > max_degree {
            continue;
        }
        let room = (max_degree - beta) as usize;
        let deg = rng.gen_range(0..=room);
        let coeffs: Vec<u64> = (0..=deg).map(|_| rng.gen_range(0..n)).collect();
        let multiplier = Poly::new(n, coeffs);
        acc = &acc + &(&multiplier * &basis_element(&spec, k));
    }
    Ok(acc)
}
