use crate::arith::{gcd, FactoredCount};
use crate::error::{Error, Result};
use crate::polynomial::Poly;

use super::psi;

/// A polyfunction is invertible iff all of its values are units of `Z_n`.
pub fn is_unit(f: &Poly) -> bool {
    let n = f.modulus();
    (0..n).all(|x| gcd(f.eval(x), n) == 1)
}

/// `|U_{3^k}| = (2/3)^3 * Psi(3^k)`, exact.
pub fn unit_count_3k(k: u32) -> Result<FactoredCount> {
    if k == 0 {
        return Err(Error::OutOfRange("k must be >= 1".into()));
    }
    let n = 3u64
        .checked_pow(k)
        .ok_or_else(|| Error::OutOfRange(format!("3^{k} overflows")))?;
    let fraction = FactoredCount::prime_power(2, 3).mul(&FactoredCount::prime_power(3, -3));
    let count = psi(n)?.mul(&fraction);
    debug_assert!(count.is_integer());
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_examples() {
        assert!(is_unit(&Poly::constant(10, 1)));
        for n in 2..20 {
            assert!(!is_unit(&Poly::monomial(n, 1, 1)));
        }
        assert!(is_unit(&Poly::new(9, vec![1, 3])));
        assert!(!is_unit(&Poly::new(9, vec![1, 1])));
    }

    #[test]
    fn counts() {
        assert_eq!(unit_count_3k(1).unwrap().to_u64().unwrap(), 8);
        assert_eq!(unit_count_3k(2).unwrap().to_u64().unwrap(), 5832);
        assert_eq!(5832 * 27, 19683 * 8);
        for k in 1..=6 {
            let ratio = unit_count_3k(k).unwrap().mul(&psi(3u64.pow(k)).unwrap().inv());
            assert_eq!(
                ratio,
                FactoredCount::prime_power(2, 3).mul(&FactoredCount::prime_power(3, -3))
            );
        }
        assert!(unit_count_3k(0).is_err());
    }
}
