//! Dense univariate polynomials over `Z_n`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{add_mod, binom_row_mod, mul_mod, sub_mod};
use crate::error::{Error, Result};

/// `a_0 + a_1 x + ... + a_r x^r` over `Z_n`, ascending and trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    modulus: u64,
    coeffs: Vec<u64>,
}

impl Poly {
    pub fn new(modulus: u64, coeffs: impl Into<Vec<u64>>) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        let mut coeffs = coeffs.into();
        for c in coeffs.iter_mut() {
            *c %= modulus;
        }
        let mut p = Poly { modulus, coeffs };
        p.trim();
        p
    }

    pub fn from_signed(modulus: u64, coeffs: &[i64]) -> Self {
        let reduced: Vec<u64> = coeffs
            .iter()
            .map(|&c| crate::arith::reduce_signed(c as i128, modulus))
            .collect();
        Poly::new(modulus, reduced)
    }

    pub fn zero(modulus: u64) -> Self {
        Poly::new(modulus, Vec::new())
    }

    pub fn constant(modulus: u64, c: u64) -> Self {
        Poly::new(modulus, vec![c])
    }

    pub fn monomial(modulus: u64, degree: usize, c: u64) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        Poly::new(modulus, coeffs)
    }

    /// `prod_{i=1}^{count} (x + i * step)`, monic of degree `count`.
    pub fn shifted_product(modulus: u64, count: u64, step: u64) -> Self {
        let mut acc = Poly::constant(modulus, 1);
        for i in 1..=count {
            acc = acc.mul_linear(mul_mod(i % modulus, step % modulus, modulus));
        }
        acc
    }

    /// `prod_{i=1}^{k} (x + i)`.
    pub fn rising_product(modulus: u64, k: u64) -> Self {
        Poly::shifted_product(modulus, k, 1)
    }

    /// Multiplies by `(x + c)`.
    fn mul_linear(&self, c: u64) -> Poly {
        let n = self.modulus;
        let mut out = vec![0u64; self.coeffs.len() + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            out[i + 1] = add_mod(out[i + 1], a, n);
            out[i] = add_mod(out[i], mul_mod(a, c, n), n);
        }
        Poly::new(n, out)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Reinterprets the coefficient representatives over another modulus.
    pub fn with_modulus(&self, modulus: u64) -> Poly {
        Poly::new(modulus, self.coeffs.clone())
    }

    pub fn eval(&self, x: u64) -> u64 {
        let n = self.modulus;
        let x = x % n;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &a| add_mod(mul_mod(acc, x, n), a, n))
    }

    /// Values at `0, 1, ..., n-1`.
    pub fn value_table(&self) -> Vec<u64> {
        (0..self.modulus).map(|x| self.eval(x)).collect()
    }

    pub fn scale(&self, c: u64) -> Poly {
        let n = self.modulus;
        Poly::new(n, self.coeffs.iter().map(|&a| mul_mod(a, c, n)).collect::<Vec<_>>())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly::new(self.modulus, coeffs)
    }

    fn check_modulus(&self, other: &Poly) {
        assert_eq!(
            self.modulus, other.modulus,
            "polynomial moduli differ ({} vs {})",
            self.modulus, other.modulus
        );
    }

    /// Division with remainder by a normed divisor: `self = q * d + r`, `deg r < deg d`.
    pub fn monic_divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        if self.modulus != divisor.modulus {
            return Err(Error::ModulusMismatch(self.modulus, divisor.modulus));
        }
        let n = self.modulus;
        let Some(dd) = divisor.degree() else {
            return Err(Error::NotNormed);
        };
        if divisor.leading_coeff() != 1 % n {
            return Err(Error::NotNormed);
        }
        if n == 1 {
            return Ok((Poly::zero(1), Poly::zero(1)));
        }
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(n), self.clone()));
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd];
            if c == 0 {
                continue;
            }
            quot[i] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = sub_mod(rem[i + j], mul_mod(c, b, n), n);
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(n, quot), Poly::new(n, rem)))
    }

    /// True iff the polynomial vanishes at every point of `Z_n`.
    pub fn is_null(&self) -> bool {
        (0..self.modulus).all(|x| self.eval(x) == 0)
    }

    /// True iff `p(alpha + i) = 0` for `i = 0..=r`.
    pub fn vanishes_on_window(&self, alpha: u64, r: u64) -> bool {
        (0..=r).all(|i| self.eval(add_mod(alpha, i, self.modulus)) == 0)
    }

    /// Parses the ascending comma-separated coefficient format, e.g. `"2,0,1"`
    /// for `2 + x^2`. Whitespace is ignored, an optional leading `-` is
    /// allowed, and arbitrarily long digit strings are reduced mod `n`.
    pub fn parse(modulus: u64, text: &str) -> Result<Poly> {
        if modulus == 0 {
            return Err(Error::InvalidModulus(0));
        }
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Ok(Poly::zero(modulus));
        }
        let mut coeffs = Vec::new();
        for (i, field) in compact.split(',').enumerate() {
            coeffs.push(parse_residue(field, modulus).map_err(|e| match e {
                Error::Parse(msg) => Error::Parse(format!("coefficient {i}: {msg}")),
                other => other,
            })?);
        }
        Ok(Poly::new(modulus, coeffs))
    }

    /// The ascending coefficient string accepted by [`Poly::parse`].
    pub fn to_coeff_string(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Parses a signed decimal integer, reducing mod `n` digit by digit.
pub(crate) fn parse_residue(field: &str, n: u64) -> Result<u64> {
    let (negative, digits) = match field.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, field.strip_prefix('+').unwrap_or(field)),
    };
    if digits.is_empty() {
        return Err(Error::Parse(format!("empty number in {field:?}")));
    }
    let mut acc = 0u64;
    for ch in digits.chars() {
        let digit = ch
            .to_digit(10)
            .ok_or_else(|| Error::Parse(format!("invalid digit {ch:?}")))?;
        acc = add_mod(mul_mod(acc, 10, n), digit as u64, n);
    }
    Ok(if negative { sub_mod(0, acc, n) } else { acc })
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (k, 1) => write!(f, "x^{k}")?,
                (k, c) => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.check_modulus(rhs);
        let n = self.modulus;
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            n,
            (0..len)
                .map(|i| add_mod(self.coeff(i), rhs.coeff(i), n))
                .collect::<Vec<_>>(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.check_modulus(rhs);
        let n = self.modulus;
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            n,
            (0..len)
                .map(|i| sub_mod(self.coeff(i), rhs.coeff(i), n))
                .collect::<Vec<_>>(),
        )
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check_modulus(rhs);
        let n = self.modulus;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(n);
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = add_mod(out[i + j], mul_mod(a, b, n), n);
            }
        }
        Poly::new(n, out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        &Poly::zero(self.modulus) - self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// The alternating binomial sum `sum_{j=0}^m (-1)^{m-j} C(m, j) f(j)` mod `n`.
///
/// `values[j]` is `f(j)`; entries past `m` are ignored.
pub fn finite_difference(values: &[u64], m: usize, n: u64) -> Result<u64> {
    if values.len() <= m {
        return Err(Error::OutOfRange(format!(
            "function table has {} entries, need {}",
            values.len(),
            m + 1
        )));
    }
    let row = binom_row_mod(m, n);
    let mut acc = 0u64;
    for j in 0..=m {
        let term = mul_mod(row[j], values[j] % n, n);
        acc = if (m - j).is_multiple_of(2) {
            add_mod(acc, term, n)
        } else {
            sub_mod(acc, term, n)
        };
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{pow_mod, stirling2};

    fn factorial_mod(k: u64, n: u64) -> u64 {
        (1..=k).fold(1 % n, |acc, i| mul_mod(acc, i, n))
    }

    #[test]
    fn eval_examples() {
        assert_eq!(Poly::zero(7).eval(3), 0);
        assert_eq!(Poly::new(5, vec![1, 1]).eval(4), 0);
        let b1 = Poly::rising_product(90, 6);
        assert_eq!(b1.eval(7), 0);
    }

    #[test]
    fn ring_ops() {
        let p = Poly::new(6, vec![1, 2, 3]);
        assert_eq!(&p + &Poly::zero(6), p);
        assert!((&p - &p).is_zero());
        let prod = &Poly::new(6, vec![1, 1]) * &Poly::new(6, vec![2, 1]);
        assert_eq!(prod, Poly::new(6, vec![2, 3, 1]));
        assert_eq!(-&Poly::new(6, vec![1]), Poly::new(6, vec![5]));
    }

    #[test]
    fn divrem_examples() {
        let x3 = Poly::monomial(8, 3, 1);
        let d = Poly::new(8, vec![1, 1]);
        let (q, r) = x3.monic_divrem(&d).unwrap();
        assert_eq!(q, Poly::new(8, vec![1, 7, 1]));
        assert_eq!(r, Poly::new(8, vec![7]));
        assert_eq!(&(&q * &d) + &r, x3);

        let (q, r) = d.monic_divrem(&d).unwrap();
        assert_eq!(q, Poly::constant(8, 1));
        assert!(r.is_zero());

        let small = Poly::new(8, vec![3]);
        let (q, r) = small.monic_divrem(&d).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, small);

        assert_eq!(x3.monic_divrem(&Poly::new(8, vec![1, 2])), Err(Error::NotNormed));
        assert_eq!(x3.monic_divrem(&Poly::zero(8)), Err(Error::NotNormed));
    }

    #[test]
    fn null_examples() {
        assert!(Poly::rising_product(90, 6).is_null());
        for n in 2..20 {
            assert!(!Poly::monomial(n, 1, 1).is_null());
        }
        let b4 = Poly::rising_product(90, 2).scale(45);
        assert_eq!(b4, Poly::new(90, vec![0, 45, 45]));
        assert!(b4.is_null());
    }

    #[test]
    fn finite_difference_examples() {
        let n = 1_000_003;
        for m in 0..=10usize {
            let powers: Vec<u64> = (0..=m as u64).map(|x| pow_mod(x, m as u64, n)).collect();
            assert_eq!(finite_difference(&powers, m, n).unwrap(), factorial_mod(m as u64, n));
            if m >= 1 {
                assert_eq!(finite_difference(&vec![5; m + 1], m, n).unwrap(), 0);
            }
            for k in 0..m as u64 {
                let vals: Vec<u64> = (0..=m as u64).map(|x| pow_mod(x, k, n)).collect();
                assert_eq!(finite_difference(&vals, m, n).unwrap(), 0);
            }
        }
        assert!(finite_difference(&[1, 2], 2, 7).is_err());
    }

    #[test]
    fn finite_difference_is_stirling() {
        for n in [7u64, 12, 90, 1_000_003] {
            for j in 0..=10u64 {
                for m in 0..=10usize {
                    // 0^0 = 1 through pow_mod
                    let vals: Vec<u64> = (0..=m as u64).map(|x| pow_mod(x, j, n)).collect();
                    let expected = (factorial_mod(m as u64, n) as u128 * stirling2(j, m as u64)
                        % n as u128) as u64;
                    assert_eq!(finite_difference(&vals, m, n).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn window_examples() {
        let b1 = Poly::rising_product(12, 4);
        assert!(b1.vanishes_on_window(5, 11));
        assert!(Poly::monomial(6, 1, 1).vanishes_on_window(0, 0));
        // (x-1)(x-2) over Z_12
        let p = Poly::from_signed(12, &[2, -3, 1]);
        assert!(p.vanishes_on_window(1, 1));
        assert!(!p.vanishes_on_window(0, 1));
    }

    #[test]
    fn parse_format() {
        let p = Poly::parse(10, " 2, 0 ,1").unwrap();
        assert_eq!(p, Poly::new(10, vec![2, 0, 1]));
        assert_eq!(Poly::parse(10, "").unwrap(), Poly::zero(10));
        assert_eq!(Poly::parse(10, "-1").unwrap(), Poly::constant(10, 9));
        assert_eq!(Poly::parse(7, "123456789012345678901234567890").unwrap().coeff(0),
            (123456789012345678901234567890u128 % 7) as u64);
        assert!(Poly::parse(10, "1,,2").is_err());
        assert!(Poly::parse(10, "1,a").is_err());
        assert!(Poly::parse(0, "1").is_err());
        assert_eq!(p.to_coeff_string(), "2,0,1");
        assert_eq!(p.to_string(), "x^2 + 2");
    }
}
