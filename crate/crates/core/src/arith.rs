//! Exact modular and factored-integer arithmetic.
//!
//! Everything here works on word-sized integers. Counts that outgrow 64 bits
//! are kept as [`FactoredCount`]s and only turned into decimal strings at the
//! very end.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Prime factorization of a positive integer, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization(Vec<(u64, u32)>);

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().map(|&(p, _)| p)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Some((p, a))` when the factored number is `p^a` with `a >= 1`.
    pub fn as_prime_power(&self) -> Option<(u64, u32)> {
        match self.0.as_slice() {
            [single] => Some(*single),
            _ => None,
        }
    }

    pub fn product(&self) -> u64 {
        self.0.iter().map(|&(p, a)| p.pow(a)).product()
    }
}

/// Trial division; fine for the supported range `n <= 10^9`.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::OutOfRange("factorize requires n >= 1".into()));
    }
    let mut out = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p <= rest / p {
        if rest.is_multiple_of(p) {
            let mut a = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        out.push((rest, 1));
    }
    Ok(Factorization(out))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    factorize(n).is_ok_and(|f| f.pairs() == [(n, 1)])
}

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Smallest prime divisor of `n >= 2`.
pub fn smallest_prime_factor(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidModulus(n));
    }
    Ok(factorize(n)?.0[0].0)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

#[inline]
pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 + b as u128) % n as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, n: u64) -> u64 {
    add_mod(a, n - b % n, n)
}

pub fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

/// Reduces a signed value into `0..n`.
pub fn reduce_signed(v: i128, n: u64) -> u64 {
    v.rem_euclid(n as i128) as u64
}

/// p-adic valuation of `k!`, i.e. `sum_{i>=1} floor(k / p^i)`.
pub fn legendre_ep(p: u64, k: u64) -> u64 {
    debug_assert!(p >= 2);
    let mut total = 0;
    let mut rest = k;
    while rest > 0 {
        rest /= p;
        total += rest;
    }
    total
}

/// p-adic valuation of `a > 0`.
pub fn valuation(p: u64, mut a: u64) -> u32 {
    debug_assert!(a > 0);
    let mut v = 0;
    while a.is_multiple_of(p) {
        a /= p;
        v += 1;
    }
    v
}

/// `gcd(n, k!)` assembled prime by prime; `k!` is never formed.
pub fn gcd_factorial(n: u64, k: u64) -> u64 {
    let f = factorize(n).expect("n >= 1");
    f.pairs()
        .iter()
        .map(|&(p, a)| p.pow(legendre_ep(p, k).min(a as u64) as u32))
        .product()
}

pub fn euler_phi(n: u64) -> u64 {
    let f = factorize(n).expect("n >= 1");
    f.pairs()
        .iter()
        .map(|&(p, a)| (p - 1) * p.pow(a - 1))
        .product()
}

/// Stirling number of the second kind, `{0 over 0} = 1`.
pub fn stirling2(j: u64, r: u64) -> u128 {
    if r > j {
        return 0;
    }
    let r = r as usize;
    // row[i] = S(current j, i)
    let mut row = vec![0u128; r + 1];
    row[0] = 1;
    for jj in 1..=j as usize {
        for i in (1..=r.min(jj)).rev() {
            row[i] = (i as u128) * row[i] + row[i - 1];
        }
        row[0] = 0;
    }
    row[r]
}

pub fn binom(a: u64, b: u64) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Row `C(m, 0..=m)` reduced mod `n`, via Pascal's rule.
pub fn binom_row_mod(m: usize, n: u64) -> Vec<u64> {
    let mut row = vec![0u64; m + 1];
    row[0] = 1 % n;
    for i in 1..=m {
        for j in (1..=i).rev() {
            row[j] = add_mod(row[j], row[j - 1], n);
        }
    }
    row
}

/// An exact positive rational held as prime exponents.
///
/// Negative exponents are allowed while a product formula is being
/// assembled; [`FactoredCount::to_decimal`] insists on an integer.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FactoredCount {
    exponents: BTreeMap<u64, i64>,
}

impl FactoredCount {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn prime_power(p: u64, e: i64) -> Self {
        let mut out = Self::one();
        out.add_exponent(p, e);
        out
    }

    pub fn from_u64(n: u64) -> Result<Self> {
        let f = factorize(n)?;
        let mut out = Self::one();
        for &(p, a) in f.pairs() {
            out.add_exponent(p, a as i64);
        }
        Ok(out)
    }

    fn add_exponent(&mut self, p: u64, e: i64) {
        if e == 0 {
            return;
        }
        let slot = self.exponents.entry(p).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.exponents.remove(&p);
        }
    }

    pub fn exponent(&self, p: u64) -> i64 {
        self.exponents.get(&p).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.exponents.iter().map(|(&p, &e)| (p, e))
    }

    pub fn is_integer(&self) -> bool {
        self.exponents.values().all(|&e| e >= 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&p, &e) in &other.exponents {
            out.add_exponent(p, e);
        }
        out
    }

    pub fn pow(&self, e: i64) -> Self {
        let mut out = Self::one();
        for (&p, &a) in &self.exponents {
            out.add_exponent(p, a * e);
        }
        out
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    pub fn to_biguint(&self) -> Result<BigUint> {
        let mut acc = BigUint::from(1u32);
        for (&p, &e) in &self.exponents {
            if e < 0 {
                return Err(Error::NotAnInteger(p));
            }
            acc *= BigUint::from(p).pow(e as u32);
        }
        Ok(acc)
    }

    pub fn to_decimal(&self) -> Result<String> {
        Ok(self.to_biguint()?.to_string())
    }

    pub fn to_u64(&self) -> Result<u64> {
        let big = self.to_biguint()?;
        u64::try_from(&big).map_err(|_| Error::Overflow)
    }
}

impl fmt::Display for FactoredCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (&p, &e) in &self.exponents {
            if !first {
                write!(f, " * ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big_factorial(k: u64) -> BigUint {
        (1..=k).fold(BigUint::from(1u32), |acc, i| acc * i)
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(90).unwrap().pairs(), &[(2, 1), (3, 2), (5, 1)]);
        assert!(factorize(1).unwrap().is_empty());
        assert_eq!(factorize(1024).unwrap().pairs(), &[(2, 10)]);
        assert!(factorize(0).is_err());
    }

    #[test]
    fn factorize_reconstructs() {
        for n in 1..=100_000u64 {
            let f = factorize(n).unwrap();
            assert_eq!(f.product(), n);
            assert!(f.primes().all(is_prime));
            assert!(f.pairs().windows(2).all(|w| w[0].0 < w[1].0));
        }
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_ep(3, 9), 4);
        assert_eq!(legendre_ep(5, 0), 0);
        // 7! = 5040 = 2^4 * 315
        assert_eq!(valuation(2, 5040), 4);
        assert_eq!(legendre_ep(2, 7), 4);
    }

    #[test]
    fn legendre_against_exact_factorials() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            let mut fact = BigUint::from(1u32);
            let mut running = 0u64;
            for k in 0..=500u64 {
                if k > 0 {
                    running += valuation(p, k) as u64;
                }
                let e = legendre_ep(p, k);
                assert_eq!(e, running, "p={p} k={k}");
                if k <= 100 {
                    if k > 0 {
                        fact *= k;
                    }
                    let pe = BigUint::from(p).pow(e as u32);
                    assert_eq!(&fact % &pe, BigUint::from(0u32));
                    assert_ne!(&fact % (pe * p), BigUint::from(0u32));
                }
            }
        }
    }

    #[test]
    fn gcd_factorial_examples_and_oracle() {
        assert_eq!(gcd_factorial(90, 5), 30);
        assert_eq!(gcd_factorial(90, 6), 90);
        assert_eq!(gcd_factorial(77, 0), 1);
        for n in 1..=200u64 {
            for k in 0..=12u64 {
                let exact = num_integer::Integer::gcd(&BigUint::from(n), &big_factorial(k));
                assert_eq!(BigUint::from(gcd_factorial(n, k)), exact, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn euler_phi_examples() {
        assert_eq!(euler_phi(9), 6);
        assert_eq!(euler_phi(1), 1);
        let scan = (0..90u64).filter(|&a| gcd(a, 90) == 1).count() as u64;
        assert_eq!(scan, 24);
        assert_eq!(euler_phi(90), scan);
    }

    fn partitions_into_blocks(j: usize, r: usize) -> u128 {
        // Enumerate restricted growth strings of length j with exactly r blocks.
        fn rec(pos: usize, j: usize, used: usize, r: usize) -> u128 {
            if pos == j {
                return (used == r) as u128;
            }
            (0..=used.min(r.saturating_sub(1)))
                .map(|b| rec(pos + 1, j, used.max(b + 1), r))
                .sum()
        }
        if j == 0 {
            return (r == 0) as u128;
        }
        rec(0, j, 0, r)
    }

    #[test]
    fn stirling2_examples_and_enumeration() {
        assert_eq!(stirling2(3, 2), 3);
        assert_eq!(partitions_into_blocks(3, 2), 3);
        assert_eq!(stirling2(0, 0), 1);
        assert_eq!(stirling2(2, 3), 0);
        for j in 0..=8 {
            for r in 0..=8 {
                assert_eq!(stirling2(j, r), partitions_into_blocks(j as usize, r as usize));
            }
        }
    }

    #[test]
    fn binom_examples() {
        assert_eq!(binom(4, 2), 6);
        assert_eq!(binom(17, 0), 1);
        assert_eq!(binom(10, 3), 120);
        assert_eq!(binom(3, 5), 0);
        let row = binom_row_mod(10, 1000);
        assert_eq!(row[3], 120);
    }

    #[test]
    fn factored_count_basics() {
        let x = FactoredCount::from_u64(360).unwrap();
        assert_eq!(x.pow(0), FactoredCount::one());
        let a = FactoredCount::prime_power(2, 1);
        let b = FactoredCount::prime_power(2, -1);
        assert_eq!(a.mul(&b), FactoredCount::one());
        assert!(b.to_decimal().is_err());
        let psi90 = FactoredCount::prime_power(2, 2)
            .mul(&FactoredCount::prime_power(3, 9))
            .mul(&FactoredCount::prime_power(5, 5));
        assert_eq!(psi90.to_decimal().unwrap(), "246037500");
        assert_eq!(psi90.to_string(), "2^2 * 3^9 * 5^5");
    }

    #[test]
    fn factored_count_round_trip() {
        for n in 1..=100_000u64 {
            assert_eq!(FactoredCount::from_u64(n).unwrap().to_decimal().unwrap(), n.to_string());
        }
    }
}
