//! The Smarandache function and the degree/scalar data of the basic
//! null-polynomials.

use std::fmt;

use crate::arith::{self, factorize, gcd_factorial, legendre_ep, require_prime};
use crate::error::{Error, Result};

/// Smallest `k >= 0` with `n | k!`.
///
/// Each prime power `p^a || n` needs the least multiple of `p` whose
/// factorial valuation reaches `a`; the answer is the maximum over primes.
pub fn smarandache(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.pairs()
        .iter()
        .map(|&(p, a)| smarandache_prime_power(p, a as u64))
        .max()
        .unwrap_or(0))
}

fn smarandache_prime_power(p: u64, a: u64) -> u64 {
    let mut k = 0;
    while legendre_ep(p, k) < a {
        k += p;
    }
    k
}

/// `min { x >= 1 : p^m | p^x * x! }`.
pub fn smarandache_star(p: u64, m: u64) -> Result<u64> {
    require_prime(p)?;
    if m == 0 {
        return Err(Error::OutOfRange("m must be >= 1".into()));
    }
    let mut x = 1;
    while x + legendre_ep(p, x) < m {
        x += 1;
    }
    Ok(x)
}

/// Exponent of `p` in the scalar of `b*_r`: `r + e_p(r)` below the top
/// index, capped at `m` for `r = s*(p^m)`.
pub fn valuation_star(p: u64, m: u64, r: u64) -> Result<u64> {
    let top = smarandache_star(p, m)?;
    if r == 0 || r > top {
        return Err(Error::OutOfRange(format!("r = {r} outside 1..={top}")));
    }
    Ok(if r == top { m } else { r + legendre_ep(p, r) })
}

/// Degrees `beta_1 > ... > beta_t` and scalars `alpha_k = n / gcd(n, beta_k!)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisSpec {
    pub n: u64,
    pub q: u64,
    pub betas: Vec<u64>,
    pub alphas: Vec<u64>,
}

impl BasisSpec {
    pub fn t(&self) -> usize {
        self.betas.len()
    }

    /// `beta_k` with 1-based `k`; `beta_0` and `beta_{t+1}` follow the usual
    /// conventions (`s(n)` sentinel is not needed, callers use 0 for both ends).
    pub fn beta(&self, k: usize) -> u64 {
        if k == 0 || k > self.t() {
            0
        } else {
            self.betas[k - 1]
        }
    }

    /// `alpha_k` with 1-based `k`; `alpha_{t+1} = n`.
    pub fn alpha(&self, k: usize) -> u64 {
        if k == self.t() + 1 {
            self.n
        } else {
            self.alphas[k - 1]
        }
    }
}

pub fn basis_spec(n: u64) -> Result<BasisSpec> {
    if n < 2 {
        return Err(Error::InvalidModulus(n));
    }
    let q = arith::smallest_prime_factor(n)?;
    let s = smarandache(n)?;
    let mut betas = Vec::new();
    for alpha in q..=s {
        let beta = smarandache(gcd_factorial(n, alpha))?;
        if beta >= q && !betas.contains(&beta) {
            betas.push(beta);
        }
    }
    betas.sort_unstable_by(|a, b| b.cmp(a));
    let alphas = betas.iter().map(|&b| n / gcd_factorial(n, b)).collect();
    Ok(BasisSpec { n, q, betas, alphas })
}

/// A multi-index `k = (k_1, ..., k_d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn new(components: impl Into<Vec<u32>>) -> Self {
        MultiIndex(components.into())
    }

    pub fn zero(d: usize) -> Self {
        MultiIndex(vec![0; d])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&k| k as u64).sum()
    }

    /// `e_p(k) = sum_i e_p(k_i)`, the valuation of `k! = prod k_i!`.
    pub fn factorial_valuation(&self, p: u64) -> u64 {
        self.0.iter().map(|&k| legendre_ep(p, k as u64)).sum()
    }

    /// Componentwise `self <= other`.
    pub fn le_componentwise(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// All indices in the box `{0..bound-1}^d`, last component varying fastest.
    pub fn box_iter(d: usize, bound: u32) -> impl Iterator<Item = MultiIndex> {
        let total = (bound as u64).checked_pow(d as u32).unwrap_or(0);
        (0..total).map(move |mut code| {
            let mut k = vec![0u32; d];
            for slot in k.iter_mut().rev() {
                *slot = (code % bound as u64) as u32;
                code /= bound as u64;
            }
            MultiIndex(k)
        })
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, ")")
    }
}

/// `n | a * k!`, decided per prime from valuations.
pub fn divides_scaled_factorial(n: u64, a: u64, k: &MultiIndex) -> Result<bool> {
    let f = factorize(n)?;
    let a = a % n;
    if a == 0 {
        return Ok(true);
    }
    Ok(f.pairs().iter().all(|&(p, e)| {
        arith::valuation(p, a) as u64 + k.factorial_valuation(p) >= e as u64
    }))
}

/// `S_d(n)`: multi-indices with `n` not dividing `k!`.
///
/// Any component `>= s(n)` already forces `n | k!`, so scanning the box
/// `{0..s(n)-1}^d` is exhaustive.
pub fn nondividing_indices(n: u64, d: usize) -> Result<Vec<MultiIndex>> {
    if n == 0 {
        return Err(Error::InvalidModulus(0));
    }
    if d == 0 {
        return Err(Error::OutOfRange("dimension must be >= 1".into()));
    }
    let s = smarandache(n)? as u32;
    let mut out = Vec::new();
    for k in MultiIndex::box_iter(d, s) {
        if !divides_scaled_factorial(n, 1, &k)? {
            out.push(k);
        }
    }
    Ok(out)
}

/// `s_d(n) = |S_d(n)|`.
pub fn smarandache_d(n: u64, d: usize) -> Result<u64> {
    Ok(nondividing_indices(n, d)?.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn smarandache_examples() {
        assert_eq!(smarandache(90).unwrap(), 6);
        assert_eq!(smarandache(1).unwrap(), 0);
        assert_eq!(smarandache(27).unwrap(), 9);
        assert!(smarandache(0).is_err());
    }

    #[test]
    fn smarandache_matches_factorial_scan() {
        // k! mod n accumulated exactly, one factor at a time.
        for n in 1..=5000u64 {
            let mut k = 0u64;
            let mut fact_mod = 1 % n;
            while fact_mod != 0 {
                k += 1;
                fact_mod = fact_mod * k % n;
            }
            assert_eq!(smarandache(n).unwrap(), k, "n = {n}");
        }
        // and with genuine big factorials on a smaller range
        let mut facts = vec![BigUint::from(1u32)];
        for k in 1..=300u32 {
            let next = facts.last().unwrap() * k;
            facts.push(next);
        }
        for n in 1..=300u64 {
            let big_n = BigUint::from(n);
            let naive = facts
                .iter()
                .position(|f| (f % &big_n) == BigUint::from(0u32))
                .unwrap() as u64;
            assert_eq!(smarandache(n).unwrap(), naive, "n = {n}");
        }
    }

    #[test]
    fn star_examples() {
        assert_eq!(smarandache_star(3, 2).unwrap(), 2);
        assert_eq!(smarandache_star(7, 1).unwrap(), 1);
        assert_eq!(smarandache_star(2, 4).unwrap(), 3);
        assert_eq!(valuation_star(3, 2, 1).unwrap(), 1);
        assert_eq!(valuation_star(3, 2, 2).unwrap(), 2);
        assert_eq!(valuation_star(2, 4, 2).unwrap(), 3);
        assert!(valuation_star(2, 4, 4).is_err());
        assert!(valuation_star(2, 4, 0).is_err());
        assert!(smarandache_star(4, 2).is_err());
    }

    #[test]
    fn star_scales_to_smarandache() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            for m in 1..=6u32 {
                let star = smarandache_star(p, m as u64).unwrap();
                assert_eq!(p * star, smarandache(p.pow(m)).unwrap());
            }
        }
    }

    #[test]
    fn prime_power_below_p() {
        for p in [2u64, 3, 5, 7] {
            for k in 1..=p as u32 {
                assert_eq!(smarandache(p.pow(k)).unwrap(), k as u64 * p);
            }
        }
    }

    #[test]
    fn basis_spec_examples() {
        let b = basis_spec(90).unwrap();
        assert_eq!(b.betas, vec![6, 5, 3, 2]);
        assert_eq!(b.alphas, vec![1, 3, 15, 45]);
        assert_eq!(b.t(), 4);
        assert_eq!(b.q, 2);
        for p in [2u64, 3, 5, 7, 11] {
            let b = basis_spec(p).unwrap();
            assert_eq!(b.betas, vec![p]);
            assert_eq!(b.alphas, vec![1]);
        }
        let b = basis_spec(4).unwrap();
        assert_eq!(b.betas, vec![4, 2]);
        assert_eq!(b.alphas, vec![1, 2]);
        assert!(basis_spec(1).is_err());
    }

    #[test]
    fn basis_spec_shape() {
        for n in 2..=500u64 {
            let b = basis_spec(n).unwrap();
            assert_eq!(b.betas[0], smarandache(n).unwrap());
            assert_eq!(*b.betas.last().unwrap(), b.q);
            assert!(b.betas.windows(2).all(|w| w[0] > w[1]));
            assert_eq!(b.alphas[0], 1);
            assert!(b.alphas.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn nondividing_examples() {
        for n in 2..=40u64 {
            assert_eq!(smarandache_d(n, 1).unwrap(), smarandache(n).unwrap());
        }
        let s2 = nondividing_indices(2, 2).unwrap();
        assert_eq!(
            s2,
            vec![
                MultiIndex::new([0, 0]),
                MultiIndex::new([0, 1]),
                MultiIndex::new([1, 0]),
                MultiIndex::new([1, 1])
            ]
        );
        assert_eq!(smarandache_d(4, 1).unwrap(), 4);
    }

    #[test]
    fn nondividing_monotone_under_divisibility() {
        for m in 2..=60u64 {
            for n in 2..=m {
                if m % n != 0 {
                    continue;
                }
                for d in 1..=2 {
                    let small = nondividing_indices(n, d).unwrap();
                    let big = nondividing_indices(m, d).unwrap();
                    assert!(small.iter().all(|k| big.contains(k)), "n={n} m={m} d={d}");
                }
            }
        }
    }
}
