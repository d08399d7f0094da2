use crate::arith::{gcd_factorial, sub_mod, FactoredCount};
use crate::error::Result;
use crate::polynomial::Poly;
use crate::smarandache::smarandache;

/// The representative `sum_{k < s(n)} c_k x^k` with `0 <= c_k < n / gcd(n, k!)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalPolyfunction {
    modulus: u64,
    coeffs: Vec<u64>,
}

impl CanonicalPolyfunction {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Exactly `s(n)` entries.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(self.modulus, self.coeffs.clone())
    }

    /// Coefficient bounds `n / gcd(n, k!)` for `k = 0..s(n)`.
    pub fn bounds(n: u64) -> Result<Vec<u64>> {
        let s = smarandache(n)?;
        Ok((0..s).map(|k| n / gcd_factorial(n, k)).collect())
    }

    /// Every canonical representative over `Z_n`, in mixed-radix order with
    /// `c_0` varying fastest.
    pub fn enumerate(n: u64) -> Result<impl Iterator<Item = CanonicalPolyfunction>> {
        let bounds = Self::bounds(n)?;
        let mut current = Some(vec![0u64; bounds.len()]);
        Ok(std::iter::from_fn(move || {
            let out = current.clone()?;
            let mut next = out.clone();
            let mut carried = true;
            for (slot, &b) in next.iter_mut().zip(&bounds) {
                *slot += 1;
                if *slot < b {
                    carried = false;
                    break;
                }
                *slot = 0;
            }
            current = if carried { None } else { Some(next) };
            Some(CanonicalPolyfunction { modulus: n, coeffs: out })
        }))
    }
}

/// Reduces `p` to its canonical representative.
///
/// Walking degrees from the top, the part of `c_k` that is a multiple of
/// `n / gcd(n, k!)` (all of it once `k >= s(n)`) is removed with the null
/// polynomial `(n / gcd(n, k!)) * prod_{i=1}^k (x + i)`, which only touches
/// lower degrees.
pub fn canonicalize(p: &Poly) -> CanonicalPolyfunction {
    let n = p.modulus();
    let s = smarandache(n).expect("modulus >= 1") as usize;
    let mut coeffs = p.coeffs().to_vec();
    coeffs.resize(coeffs.len().max(s), 0);
    for k in (0..coeffs.len()).rev() {
        let bound = if k >= s { 1 } else { n / gcd_factorial(n, k as u64) };
        let quot = coeffs[k] / bound;
        if quot == 0 {
            continue;
        }
        let null = Poly::rising_product(n, k as u64).scale(quot * bound);
        for (i, &a) in null.coeffs().iter().enumerate() {
            coeffs[i] = sub_mod(coeffs[i], a, n);
        }
        debug_assert!(coeffs[k] < bound);
    }
    coeffs.truncate(s);
    CanonicalPolyfunction { modulus: n, coeffs }
}

/// Whether `p` and `q` induce the same function on `Z_n`.
pub fn equal_as_functions(p: &Poly, q: &Poly) -> bool {
    assert_eq!(p.modulus(), q.modulus(), "polynomial moduli differ");
    canonicalize(p) == canonicalize(q)
}

pub(crate) fn bounds_product(n: u64) -> Result<FactoredCount> {
    let mut acc = FactoredCount::one();
    for b in CanonicalPolyfunction::bounds(n)? {
        acc = acc.mul(&FactoredCount::from_u64(b)?);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let x6 = Poly::monomial(90, 6, 1);
        let c = canonicalize(&x6);
        assert!(c.to_poly().degree().unwrap() <= 5);
        assert_eq!(c.to_poly().value_table(), x6.value_table());
        // x^6 = x^6 - b_1 as functions
        let tail = &x6 - &Poly::rising_product(90, 6);
        assert_eq!(canonicalize(&tail), c);

        for n in 2..30 {
            let x = Poly::monomial(n, 1, 1);
            let c = canonicalize(&x);
            let mut expected = vec![0u64; smarandache(n).unwrap() as usize];
            expected[1] = 1;
            assert_eq!(c.coeffs(), expected.as_slice());
        }

        let b4 = Poly::new(90, vec![0, 45, 45]);
        assert!(canonicalize(&b4).coeffs().iter().all(|&c| c == 0));
    }

    #[test]
    fn function_equality() {
        let p = Poly::new(12, vec![3, 1, 4, 1, 5]);
        assert!(equal_as_functions(&p, &p));
        for prime in [2u64, 3, 5, 7, 11] {
            let xp = Poly::monomial(prime, prime as usize, 1);
            let x = Poly::monomial(prime, 1, 1);
            assert!(equal_as_functions(&xp, &x));
        }
        let x = Poly::monomial(10, 1, 1);
        assert!(!equal_as_functions(&x, &(&x + &Poly::constant(10, 1))));
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(CanonicalPolyfunction::enumerate(4).unwrap().count(), 64);
        assert_eq!(CanonicalPolyfunction::enumerate(1).unwrap().count(), 1);
        let all: Vec<_> = CanonicalPolyfunction::enumerate(6).unwrap().collect();
        assert_eq!(all.len(), 108);
        assert!(all.iter().all(|c| canonicalize(&c.to_poly()) == *c));
    }
}
