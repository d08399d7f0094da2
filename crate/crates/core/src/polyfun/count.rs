use crate::arith::{factorize, gcd_factorial, require_prime, FactoredCount};
use crate::error::{Error, Result};
use crate::smarandache::{basis_spec, smarandache};

/// Number of polyfunctions over `Z_n`:
/// `prod_{k=1}^{t} gcd(n, beta_k!)^(beta_k - beta_{k-1})` with `beta_0 = 0`.
pub fn psi(n: u64) -> Result<FactoredCount> {
    match n {
        0 => Err(Error::InvalidModulus(0)),
        1 => Ok(FactoredCount::one()),
        _ => {
            let spec = basis_spec(n)?;
            let mut acc = FactoredCount::one();
            for k in 1..=spec.t() {
                let base = FactoredCount::from_u64(gcd_factorial(n, spec.beta(k)))?;
                let exp = spec.beta(k) as i64 - spec.beta(k - 1) as i64;
                acc = acc.mul(&base.pow(exp));
            }
            Ok(acc)
        }
    }
}

/// `Psi(p^m) = p^(sum_{k=1}^m s(p^k))`.
pub fn psi_prime_power(p: u64, m: u32) -> Result<FactoredCount> {
    require_prime(p)?;
    let mut exp = 0i64;
    for k in 1..=m {
        let pk = p
            .checked_pow(k)
            .ok_or_else(|| Error::OutOfRange(format!("{p}^{k} overflows")))?;
        exp += smarandache(pk)? as i64;
    }
    Ok(FactoredCount::prime_power(p, exp))
}

/// Null-polynomials of degree `< s(n)`:
/// `prod_{i=2}^{t} (n / alpha_i)^(beta_{i-1} - beta_i)`.
pub fn null_count(n: u64) -> Result<FactoredCount> {
    let spec = basis_spec(n)?;
    let mut acc = FactoredCount::one();
    for i in 2..=spec.t() {
        let base = FactoredCount::from_u64(n / spec.alpha(i))?;
        acc = acc.mul(&base.pow(spec.beta(i - 1) as i64 - spec.beta(i) as i64));
    }
    Ok(acc)
}

/// Number of admissible canonical coefficient tuples, `prod_{k<s(n)} n / gcd(n, k!)`.
pub fn canonical_count(n: u64) -> Result<FactoredCount> {
    super::canonical::bounds_product(n)
}

/// Product of `Psi` over the prime-power constituents of `n`.
pub fn psi_by_crt(n: u64) -> Result<FactoredCount> {
    let mut acc = FactoredCount::one();
    for &(p, a) in factorize(n)?.pairs() {
        acc = acc.mul(&psi_prime_power(p, a)?);
    }
    Ok(acc)
}
