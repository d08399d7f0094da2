use crate::arith::{euler_phi, mul_mod, pow_mod, require_prime, sub_mod, valuation};
use crate::error::{Error, Result};
use crate::polynomial::Poly;
use crate::smarandache::{smarandache_star, valuation_star};

const RING_GUARD: u64 = 10_000;

fn guarded_prime_power(p: u64, m: u32) -> Result<u64> {
    require_prime(p)?;
    if m == 0 {
        return Err(Error::OutOfRange("m must be >= 1".into()));
    }
    match p.checked_pow(m) {
        Some(pm) if pm <= RING_GUARD => Ok(pm),
        _ => Err(Error::GuardExceeded(format!("{p}^{m} > {RING_GUARD}"))),
    }
}

/// Modular inverse of a unit via the extended Euclidean algorithm.
fn inverse_mod(a: u64, n: u64) -> u64 {
    let (mut r0, mut r1) = (n as i128, (a % n) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "{a} is not a unit mod {n}");
    t0.rem_euclid(n as i128) as u64
}

/// `C(big, i) mod p^m` for `i = 0..=big`, carrying the p-part separately so
/// that the row costs `O(big)` instead of Pascal's `O(big^2)`.
fn binom_row_prime_power(big: u64, p: u64, m: u32) -> Vec<u64> {
    let pm = p.pow(m);
    let mut out = Vec::with_capacity(big as usize + 1);
    let mut unit = 1 % pm;
    let mut pexp: i64 = 0;
    for i in 0..=big {
        let value = if pexp >= m as i64 {
            0
        } else {
            mul_mod(unit, p.pow(pexp as u32), pm)
        };
        out.push(value);
        if i == big {
            break;
        }
        // C(big, i+1) = C(big, i) * (big - i) / (i + 1)
        let (num, den) = (big - i, i + 1);
        let (vn, vd) = (valuation(p, num), valuation(p, den));
        pexp += vn as i64 - vd as i64;
        let num_unit = num / p.pow(vn);
        let den_unit = den / p.pow(vd);
        unit = mul_mod(mul_mod(unit, num_unit % pm, pm), inverse_mod(den_unit % pm, pm), pm);
    }
    out
}

/// `epsilon_j(x) = 1 - (x - j)^(m * phi(p^m))` for `j = 0..p`, expanded over
/// `Z_{p^m}`. As functions these are the indicators of `x = j (mod p)`.
pub fn idempotents(p: u64, m: u32) -> Result<Vec<Poly>> {
    let pm = guarded_prime_power(p, m)?;
    let exp = m as u64 * euler_phi(pm);
    let row = binom_row_prime_power(exp, p, m);
    let mut out = Vec::with_capacity(p as usize);
    for j in 0..p {
        // (x - j)^exp = sum_i C(exp, i) x^i (-j)^(exp - i)
        let neg_j = sub_mod(0, j, pm);
        let mut coeffs = vec![0u64; exp as usize + 1];
        for (i, c) in coeffs.iter_mut().enumerate() {
            let term = mul_mod(row[i], pow_mod(neg_j, exp - i as u64, pm), pm);
            *c = sub_mod(0, term, pm);
        }
        coeffs[0] = (coeffs[0] + 1) % pm;
        out.push(Poly::new(pm, coeffs));
    }
    Ok(out)
}

/// `b*_k = p^(m - e*(k)) * prod_{j=1}^k (x + j p)` for `k = 1..=s*(p^m)`.
pub fn ideal_basis_star(p: u64, m: u32) -> Result<Vec<Poly>> {
    let pm = guarded_prime_power(p, m)?;
    let top = smarandache_star(p, m as u64)?;
    (1..=top)
        .map(|k| {
            let e = valuation_star(p, m as u64, k)?;
            let scalar = p.pow(m - e as u32);
            Ok(Poly::shifted_product(pm, k, p).scale(scalar))
        })
        .collect()
}

/// Membership in `I_{p,m}`: `f` vanishes at every multiple of `p` in `Z_{p^m}`.
pub fn in_ideal_ipm(f: &Poly, p: u64, m: u32) -> Result<bool> {
    require_prime(p)?;
    let pm = p
        .checked_pow(m)
        .ok_or_else(|| Error::OutOfRange(format!("{p}^{m} overflows")))?;
    if f.modulus() != pm {
        return Err(Error::ModulusMismatch(f.modulus(), pm));
    }
    Ok((0..pm / p).all(|j| f.eval(j * p) == 0))
}

/// `a_k * r! = 0 (mod n)` for every coefficient of `p`, `deg p <= r`.
pub fn annihilated_by_factorial(p: &Poly, r: u64) -> Result<bool> {
    if p.degree().is_some_and(|d| d as u64 > r) {
        return Err(Error::OutOfRange(format!(
            "degree {} exceeds r = {r}",
            p.degree().unwrap_or(0)
        )));
    }
    let n = p.modulus();
    let r_fact = (1..=r).fold(1 % n, |acc, i| mul_mod(acc, i % n, n));
    Ok(p.coeffs().iter().all(|&a| mul_mod(a, r_fact, n) == 0))
}
