//! Multivariate polyfunctions over `Z_n`.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::arith::{
    add_mod, binom_row_mod, factorize, legendre_ep, mul_mod, pow_mod, require_prime, sub_mod,
    FactoredCount,
};
use crate::error::{Error, Result};
use crate::polyfun::oracle::{additive_span, SpanBasis, SPAN_CAP};
use crate::polynomial::{parse_residue, Poly};
use crate::smarandache::{divides_scaled_factorial, smarandache, smarandache_d, MultiIndex};

/// Largest `n^d` for which value-table scans are allowed.
pub const SCAN_GUARD: u64 = 1_000_000;

/// Largest box `prod_i (k_i + 1)` that [`canonicalize_multi`] will expand.
pub const EXPANSION_GUARD: u64 = 100_000;

/// Sparse `sum_k c_k x^k` over `Z_n` in `d` variables; zero terms are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    modulus: u64,
    dim: usize,
    terms: BTreeMap<MultiIndex, u64>,
}

impl MultiPoly {
    pub fn zero(modulus: u64, dim: usize) -> Self {
        assert!(modulus >= 1 && dim >= 1);
        MultiPoly { modulus, dim, terms: BTreeMap::new() }
    }

    pub fn monomial(modulus: u64, coeff: u64, k: MultiIndex) -> Self {
        let mut p = MultiPoly::zero(modulus, k.dim());
        p.add_term(k, coeff);
        p
    }

    pub fn from_terms(
        modulus: u64,
        dim: usize,
        terms: impl IntoIterator<Item = (MultiIndex, u64)>,
    ) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidModulus(0));
        }
        if dim == 0 {
            return Err(Error::OutOfRange("dimension must be >= 1".into()));
        }
        let mut p = MultiPoly::zero(modulus, dim);
        for (k, c) in terms {
            if k.dim() != dim {
                return Err(Error::OutOfRange(format!(
                    "index {k} has {} components, expected {dim}",
                    k.dim()
                )));
            }
            p.add_term(k, c);
        }
        Ok(p)
    }

    /// Embeds a univariate polynomial as a polynomial in `x_1` alone.
    pub fn from_univariate(p: &Poly, dim: usize) -> Self {
        let mut out = MultiPoly::zero(p.modulus(), dim);
        for (i, &c) in p.coeffs().iter().enumerate() {
            let mut k = vec![0u32; dim];
            k[0] = i as u32;
            out.add_term(MultiIndex(k), c);
        }
        out
    }

    fn add_term(&mut self, k: MultiIndex, c: u64) {
        let n = self.modulus;
        let c = c % n;
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(k.clone()).or_insert(0);
        *slot = add_mod(*slot, c, n);
        if *slot == 0 {
            self.terms.remove(&k);
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, u64)> {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn coeff(&self, k: &MultiIndex) -> u64 {
        self.terms.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(MultiIndex::total_degree).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.modulus, self.dim), (other.modulus, other.dim));
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.modulus, self.dim), (other.modulus, other.dim));
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k.clone(), sub_mod(0, c, self.modulus));
        }
        out
    }

    pub fn eval(&self, x: &[u64]) -> u64 {
        assert_eq!(x.len(), self.dim, "point dimension");
        let n = self.modulus;
        self.terms.iter().fold(0, |acc, (k, &c)| {
            let mono = k
                .0
                .iter()
                .zip(x)
                .fold(c, |m, (&e, &xi)| mul_mod(m, pow_mod(xi, e as u64, n), n));
            add_mod(acc, mono, n)
        })
    }

    fn check_scan(&self) -> Result<u64> {
        match self.modulus.checked_pow(self.dim as u32) {
            Some(points) if points <= SCAN_GUARD => Ok(points),
            _ => Err(Error::GuardExceeded(format!(
                "{}^{} points exceed {SCAN_GUARD}",
                self.modulus, self.dim
            ))),
        }
    }

    /// Values at every point of `Z_n^d`; point `x` sits at index
    /// `sum_i x_i n^(d-1-i)`.
    pub fn value_table(&self) -> Result<Vec<u64>> {
        let points = self.check_scan()?;
        Ok(grid_points(self.modulus, self.dim, points)
            .map(|x| self.eval(&x))
            .collect())
    }

    pub fn is_null(&self) -> Result<bool> {
        let points = self.check_scan()?;
        Ok(grid_points(self.modulus, self.dim, points).all(|x| self.eval(&x) == 0))
    }

    /// Parses the interchange format: a header `mod=<n> d=<d>` followed by one
    /// `k1 k2 ... kd : coefficient` record per line. Blank lines and lines
    /// starting with `#` are skipped; repeated indices accumulate.
    pub fn parse(text: &str) -> Result<MultiPoly> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing header line".into()))?;
        let (modulus, dim) = parse_header(header)?;
        let mut p = MultiPoly::zero(modulus, dim);
        for (lineno, line) in lines.enumerate() {
            let (idx, coeff) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("record {}: missing ':'", lineno + 1)))?;
            let comps = idx
                .split_whitespace()
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("record {}: bad exponent {t:?}", lineno + 1)))
                })
                .collect::<Result<Vec<u32>>>()?;
            if comps.len() != dim {
                return Err(Error::Parse(format!(
                    "record {}: expected {dim} exponents, found {}",
                    lineno + 1,
                    comps.len()
                )));
            }
            let c = parse_residue(coeff.trim(), modulus)
                .map_err(|e| Error::Parse(format!("record {}: {e}", lineno + 1)))?;
            p.add_term(MultiIndex(comps), c);
        }
        Ok(p)
    }

    /// Serializes in the format read by [`MultiPoly::parse`], terms in
    /// ascending index order.
    pub fn to_text(&self) -> String {
        let mut out = format!("mod={} d={}\n", self.modulus, self.dim);
        for (k, c) in self.terms() {
            let idx: Vec<String> = k.0.iter().map(u32::to_string).collect();
            out.push_str(&format!("{} : {c}\n", idx.join(" ")));
        }
        out
    }
}

fn parse_header(header: &str) -> Result<(u64, usize)> {
    let mut modulus = None;
    let mut dim = None;
    for field in header.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("bad header field {field:?}")))?;
        let number = value
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("bad header value {value:?}")))?;
        let slot = match key {
            "mod" => &mut modulus,
            "d" => &mut dim,
            _ => return Err(Error::Parse(format!("unknown header key {key:?}"))),
        };
        if slot.replace(number).is_some() {
            return Err(Error::Parse(format!("duplicate header key {key:?}")));
        }
    }
    let modulus = modulus.ok_or_else(|| Error::Parse("header lacks mod=".into()))?;
    let dim = dim.ok_or_else(|| Error::Parse("header lacks d=".into()))?;
    if modulus == 0 {
        return Err(Error::Parse("modulus must be >= 1".into()));
    }
    if dim == 0 || dim > 64 {
        return Err(Error::Parse("dimension must be in 1..=64".into()));
    }
    Ok((modulus, dim as usize))
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let vars: Vec<String> = k
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
                .collect();
            match (vars.is_empty(), c) {
                (true, c) => write!(f, "{c}")?,
                (false, 1) => write!(f, "{}", vars.join("*"))?,
                (false, c) => write!(f, "{c}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

fn grid_points(n: u64, d: usize, points: u64) -> impl Iterator<Item = Vec<u64>> {
    (0..points).map(move |mut code| {
        let mut x = vec![0u64; d];
        for slot in x.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        x
    })
}

/// `a x^k` is reducible mod `n` exactly when `n | a * k!`.
pub fn is_reducible_monomial(n: u64, a: u64, k: &MultiIndex) -> Result<bool> {
    divides_scaled_factorial(n, a, k)
}

/// `a * prod_i prod_{l=1}^{k_i} (x_i + l)`, expanded.
fn scaled_rising_product(n: u64, a: u64, k: &MultiIndex) -> MultiPoly {
    let factors: Vec<Poly> = k.0.iter().map(|&ki| Poly::rising_product(n, ki as u64)).collect();
    let mut out = MultiPoly::zero(n, k.dim());
    if a.is_multiple_of(n) {
        return out;
    }
    let bound: Vec<u32> = k.0.iter().map(|&ki| ki + 1).collect();
    let mut idx = vec![0u32; k.dim()];
    loop {
        let c = idx
            .iter()
            .zip(&factors)
            .fold(a % n, |acc, (&e, f)| mul_mod(acc, f.coeff(e as usize), n));
        out.add_term(MultiIndex(idx.clone()), c);
        // odometer over the box prod [0, k_i]
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return out;
            }
            idx[pos] += 1;
            if idx[pos] < bound[pos] {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// A polynomial of total degree `< |k|` equal to `a x^k` as a function:
/// `a x^k - q(x)` with the null polynomial
/// `q = a prod_i prod_{l=1}^{k_i} (x_i + l)`.
pub fn reduce_monomial(n: u64, a: u64, k: &MultiIndex) -> Result<MultiPoly> {
    if !is_reducible_monomial(n, a, k)? {
        return Err(Error::NotReducible(n));
    }
    let target = MultiPoly::monomial(n, a, k.clone());
    Ok(target.sub(&scaled_rising_product(n, a, k)))
}

/// Iterated alternating binomial sums over the box `prod [0, k_i]`.
///
/// For `q` with every monomial of total degree `<= |k|` the result is
/// `q_k * k! mod n`: all other monomials are annihilated in some coordinate.
pub fn extract_leading_coefficient(q: &MultiPoly, k: &MultiIndex) -> Result<u64> {
    if k.dim() != q.dim() {
        return Err(Error::OutOfRange("index dimension mismatch".into()));
    }
    let bound = k.total_degree();
    if q.total_degree().is_some_and(|d| d > bound) {
        return Err(Error::OutOfRange(format!(
            "polynomial has total degree above |k| = {bound}"
        )));
    }
    let n = q.modulus();
    let rows: Vec<Vec<u64>> = k.0.iter().map(|&ki| binom_row_mod(ki as usize, n)).collect();
    let mut acc = 0u64;
    let mut point = vec![0u64; k.dim()];
    loop {
        let mut weight = 1 % n;
        let mut negative = false;
        for (i, &j) in point.iter().enumerate() {
            weight = mul_mod(weight, rows[i][j as usize], n);
            negative ^= (k.0[i] as u64 - j) % 2 == 1;
        }
        let term = mul_mod(weight, q.eval(&point), n);
        acc = if negative { sub_mod(acc, term, n) } else { add_mod(acc, term, n) };
        let mut pos = 0;
        loop {
            if pos == point.len() {
                return Ok(acc);
            }
            point[pos] += 1;
            if point[pos] <= k.0[pos] as u64 {
                break;
            }
            point[pos] = 0;
            pos += 1;
        }
    }
}

fn prime_power_parts(n: u64) -> Result<(u64, u64)> {
    match factorize(n)?.as_prime_power() {
        Some((p, m)) => Ok((p, m as u64)),
        None => Err(Error::InvalidModulus(n)),
    }
}

/// Canonical representative over `Z_{p^m}`: coefficients of `x^k` restricted
/// to `0..p^(m - e_p(k))` and supported on `S_d(p^m)`.
///
/// Indices are processed by total degree descending (lexicographic
/// tie-break). Subtracting `c' p^(m-e_p(k)) prod_i prod_l (x_i + l)` only
/// creates terms of strictly smaller total degree, so each index is visited
/// once.
pub fn canonicalize_multi(p: &MultiPoly) -> Result<MultiPoly> {
    let n = p.modulus();
    let (prime, m) = prime_power_parts(n)?;
    for (k, _) in p.terms() {
        let size = k.0.iter().try_fold(1u64, |acc, &ki| acc.checked_mul(ki as u64 + 1));
        if size.is_none_or(|s| s > EXPANSION_GUARD) {
            return Err(Error::GuardExceeded(format!("expanding {k} exceeds {EXPANSION_GUARD} terms")));
        }
    }
    let mut work: BTreeMap<(u64, MultiIndex), u64> = p
        .terms()
        .map(|(k, c)| ((k.total_degree(), k.clone()), c))
        .collect();
    let mut out = MultiPoly::zero(n, p.dim());
    while let Some(((_, k), c)) = work.pop_last() {
        let e = k.factorial_valuation(prime).min(m);
        let bound = prime.pow((m - e) as u32);
        let quot = c / bound;
        out.add_term(k.clone(), c % bound);
        if quot == 0 {
            continue;
        }
        let null = scaled_rising_product(n, quot * bound, &k);
        for (l, a) in null.terms() {
            if *l == k {
                continue;
            }
            let key = (l.total_degree(), l.clone());
            let slot = work.entry(key.clone()).or_insert(0);
            *slot = sub_mod(*slot, a, n);
            if *slot == 0 {
                work.remove(&key);
            }
        }
    }
    Ok(out)
}

/// Coefficient bounds of the canonical form: `(k, p^(m - e_p(k)))` for
/// `k in S_d(p^m)`.
pub fn canonical_bounds(p: u64, m: u32, d: usize) -> Result<Vec<(MultiIndex, u64)>> {
    require_prime(p)?;
    let pm = p
        .checked_pow(m)
        .ok_or_else(|| Error::OutOfRange(format!("{p}^{m} overflows")))?;
    let s = smarandache(pm)? as u32;
    Ok(MultiIndex::box_iter(d, s)
        .filter_map(|k| {
            let e = k.factorial_valuation(p);
            (e < m as u64).then(|| (k, p.pow(m - e as u32)))
        })
        .collect())
}

/// Every polynomial inside the canonical coefficient box over `Z_{p^m}`.
/// Refuses to list more than `2^20` forms.
pub fn canonical_forms(p: u64, m: u32, d: usize) -> Result<Vec<MultiPoly>> {
    let bounds = canonical_bounds(p, m, d)?;
    let total = bounds
        .iter()
        .try_fold(1u64, |acc, (_, b)| acc.checked_mul(*b))
        .filter(|&t| t <= 1 << 20)
        .ok_or_else(|| Error::GuardExceeded(format!("more than 2^20 canonical forms for ({p}, {m}, {d})")))?;
    let pm = p.pow(m);
    let mut out = Vec::with_capacity(total as usize);
    let mut digits = vec![0u64; bounds.len()];
    loop {
        let terms = bounds.iter().zip(&digits).map(|((k, _), &c)| (k.clone(), c));
        out.push(MultiPoly::from_terms(pm, d, terms)?);
        let mut pos = 0;
        loop {
            if pos == digits.len() {
                return Ok(out);
            }
            digits[pos] += 1;
            if digits[pos] < bounds[pos].1 {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

/// `Psi_d(p^m) = prod_{e_p(k) < m} p^(m - e_p(k))`.
pub fn psi_d(p: u64, m: u32, d: usize) -> Result<FactoredCount> {
    if m == 0 || d == 0 {
        return Err(Error::OutOfRange("m and d must be >= 1".into()));
    }
    let exp: u64 = canonical_bounds(p, m, d)?
        .iter()
        .map(|(k, _)| m as u64 - k.factorial_valuation(p))
        .sum();
    Ok(FactoredCount::prime_power(p, exp as i64))
}

/// `Psi_d(p^m) = p^(sum_{k=1}^m s_d(p^k))`.
pub fn psi_d_alt(p: u64, m: u32, d: usize) -> Result<FactoredCount> {
    require_prime(p)?;
    if m == 0 || d == 0 {
        return Err(Error::OutOfRange("m and d must be >= 1".into()));
    }
    let mut exp = 0u64;
    for k in 1..=m {
        let pk = p
            .checked_pow(k)
            .ok_or_else(|| Error::OutOfRange(format!("{p}^{k} overflows")))?;
        exp += smarandache_d(pk, d)?;
    }
    Ok(FactoredCount::prime_power(p, exp as i64))
}

/// `Psi_d(n)` as the product over prime-power constituents of `n`.
pub fn psi_d_general(n: u64, d: usize) -> Result<FactoredCount> {
    if n == 0 {
        return Err(Error::InvalidModulus(0));
    }
    let mut acc = FactoredCount::one();
    for &(p, a) in factorize(n)?.pairs() {
        acc = acc.mul(&psi_d(p, a, d)?);
    }
    Ok(acc)
}

fn monomial_table(n: u64, k: &MultiIndex) -> Result<Vec<u64>> {
    MultiPoly::monomial(n, 1, k.clone()).value_table()
}

/// Size of the span of the value tables of `x^k`, `k in {0..s(n)-1}^d`,
/// inside `Z_n^(n^d)`.
pub fn psi_d_bruteforce(n: u64, d: usize) -> Result<u64> {
    if !(1..=8).contains(&n) || d == 0 || n.checked_pow(d as u32).is_none_or(|v| v > 512) {
        return Err(Error::GuardExceeded(format!("(n, d) = ({n}, {d}) outside n <= 8, n^d <= 512")));
    }
    let s = smarandache(n)? as u32;
    let gens = MultiIndex::box_iter(d, s)
        .map(|k| monomial_table(n, &k))
        .collect::<Result<Vec<_>>>()?;
    Ok(additive_span(n, n.pow(d as u32) as usize, &gens, SPAN_CAP)?.len() as u64)
}

/// Memoized spans of all monomials of total degree `< bound`, used to decide
/// reducibility by exhaustive search.
#[derive(Default)]
pub struct ReductionSearch {
    spans: HashMap<(u64, usize, u64), SpanBasis>,
}

impl ReductionSearch {
    pub fn new() -> Self {
        Self::default()
    }

    /// Whether some polynomial of total degree `< |k|` agrees with `a x^k`
    /// on all of `Z_n^d`. Requires `n^d <= 64`.
    pub fn is_reducible(&mut self, n: u64, a: u64, k: &MultiIndex) -> Result<bool> {
        let d = k.dim();
        let points = match n.checked_pow(d as u32) {
            Some(v) if n >= 1 && v <= 64 => v as usize,
            _ => return Err(Error::GuardExceeded(format!("n^d = {n}^{d} > 64"))),
        };
        let bound = k.total_degree();
        let span = match self.spans.entry((n, d, bound)) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => {
                let mut basis = SpanBasis::new(n, points);
                // total degree < bound; exponents beyond bound never occur
                for l in MultiIndex::box_iter(d, bound as u32).filter(|l| l.total_degree() < bound) {
                    basis.insert(&monomial_table(n, &l)?)?;
                }
                e.insert(basis)
            }
        };
        Ok(span.contains(&MultiPoly::monomial(n, a, k.clone()).value_table()?))
    }
}

/// `e_p` of a multi-index, exposed for callers that only hold components.
pub fn factorial_valuation(p: u64, k: &[u32]) -> u64 {
    k.iter().map(|&ki| legendre_ep(p, ki as u64)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(k: &[u32]) -> MultiIndex {
        MultiIndex::new(k.to_vec())
    }

    #[test]
    fn eval_examples() {
        assert_eq!(MultiPoly::zero(5, 2).eval(&[3, 4]), 0);
        assert_eq!(MultiPoly::monomial(5, 1, mi(&[1, 1])).eval(&[2, 3]), 1);
    }

    #[test]
    fn null_examples() {
        assert!(MultiPoly::zero(4, 2).is_null().unwrap());
        assert!(!MultiPoly::monomial(2, 1, mi(&[1])).is_null().unwrap());
        // 2 x1 x2 (x1 + 1)(x2 + 1) over Z_8
        let a = Poly::new(8, vec![0, 1, 1]);
        let p = MultiPoly::from_terms(
            8,
            2,
            (0..3).flat_map(|i| {
                let a = a.clone();
                (0..3).map(move |j| (mi(&[i, j]), 2 * a.coeff(i as usize) * a.coeff(j as usize)))
            }),
        )
        .unwrap();
        assert!(p.is_null().unwrap());
        assert!(MultiPoly::zero(1001, 2).is_null().is_err());
    }

    #[test]
    fn reducibility_examples() {
        assert!(is_reducible_monomial(4, 2, &mi(&[2])).unwrap());
        assert!(!is_reducible_monomial(6, 1, &mi(&[1, 1])).unwrap());
        for (p, m) in [(2u64, 2u32), (3, 2), (2, 3)] {
            let pm = p.pow(m);
            for k in MultiIndex::box_iter(2, 8) {
                let expected = k.factorial_valuation(p) >= m as u64;
                assert_eq!(is_reducible_monomial(pm, 1, &k).unwrap(), expected);
            }
        }
    }

    #[test]
    fn reduce_examples() {
        let r = reduce_monomial(2, 1, &mi(&[2])).unwrap();
        assert_eq!(r, MultiPoly::monomial(2, 1, mi(&[1])));
        assert!(reduce_monomial(7, 0, &mi(&[3, 2])).unwrap().is_zero());
        let r = reduce_monomial(4, 2, &mi(&[2])).unwrap();
        assert_eq!(r, MultiPoly::monomial(4, 2, mi(&[1])));
        assert_eq!(
            r.value_table().unwrap(),
            MultiPoly::monomial(4, 2, mi(&[2])).value_table().unwrap()
        );
        assert_eq!(reduce_monomial(6, 1, &mi(&[1, 1])), Err(Error::NotReducible(6)));
    }

    #[test]
    fn extraction_examples() {
        let n = 1_000_003;
        let k = mi(&[2, 3]);
        // 7 * 2! * 3! = 84
        assert_eq!(extract_leading_coefficient(&MultiPoly::monomial(n, 7, k.clone()), &k).unwrap(), 84);
        let lower = MultiPoly::from_terms(n, 2, [(mi(&[1, 3]), 5), (mi(&[2, 2]), 9), (mi(&[4, 0]), 3), (mi(&[0, 0]), 1)]);
        // (4,0) has |l| = 4 < 5 but is not below k componentwise; still annihilated in x2
        assert_eq!(extract_leading_coefficient(&lower.unwrap(), &k).unwrap(), 0);
        let q = scaled_rising_product(8, 2, &mi(&[2, 2]));
        assert!(q.is_null().unwrap());
        assert_eq!(extract_leading_coefficient(&q, &mi(&[2, 2])).unwrap(), 0);
        let too_big = MultiPoly::monomial(5, 1, mi(&[3, 3]));
        assert!(extract_leading_coefficient(&too_big, &mi(&[1, 1])).is_err());
    }

    #[test]
    fn canonical_examples() {
        let x1sq = MultiPoly::monomial(2, 1, mi(&[2, 0]));
        assert_eq!(canonicalize_multi(&x1sq).unwrap(), MultiPoly::monomial(2, 1, mi(&[1, 0])));
        let p = MultiPoly::monomial(4, 2, mi(&[1, 1]));
        assert_eq!(canonicalize_multi(&p).unwrap(), p);
        assert!(canonicalize_multi(&MultiPoly::zero(6, 2)).is_err());
        assert!(canonicalize_multi(&MultiPoly::monomial(4, 1, mi(&[400, 400]))).is_err());
    }

    #[test]
    fn canonical_form_listing() {
        assert_eq!(canonical_forms(2, 1, 2).unwrap().len(), 16);
        assert_eq!(canonical_forms(2, 1, 1).unwrap()[3], MultiPoly::from_terms(2, 1, [(mi(&[0]), 1), (mi(&[1]), 1)]).unwrap());
        assert!(canonical_forms(5, 2, 2).is_err());
    }

    #[test]
    fn counting_examples() {
        assert_eq!(psi_d(2, 1, 2).unwrap().to_u64().unwrap(), 16);
        assert_eq!(psi_d(3, 2, 1).unwrap(), FactoredCount::prime_power(3, 9));
        assert_eq!(psi_d_alt(2, 1, 2).unwrap().to_u64().unwrap(), 16);
        assert_eq!(
            psi_d_general(6, 2).unwrap(),
            FactoredCount::prime_power(2, 4).mul(&FactoredCount::prime_power(3, 9))
        );
        assert_eq!(psi_d_general(90, 1).unwrap().to_decimal().unwrap(), "246037500");
        assert_eq!(psi_d_bruteforce(2, 2).unwrap(), 16);
        assert_eq!(psi_d_bruteforce(3, 2).unwrap(), 19683);
        assert!(psi_d_bruteforce(9, 1).is_err());
        assert!(psi_d_bruteforce(8, 4).is_err());
    }

    #[test]
    fn kernel_growth() {
        for p in [2u64, 3] {
            for m in 1..=3u32 {
                for d in 1..=2 {
                    let ratio = psi_d_alt(p, m + 1, d).unwrap().mul(&psi_d_alt(p, m, d).unwrap().inv());
                    let sd = smarandache_d(p.pow(m + 1), d).unwrap();
                    assert_eq!(ratio, FactoredCount::prime_power(p, sd as i64));
                }
            }
        }
    }

    #[test]
    fn text_format() {
        let text = "mod=8 d=2\n# comment\n1 2 : 3\n0 0 : -1\n\n1 2 : 6\n";
        let p = MultiPoly::parse(text).unwrap();
        assert_eq!(p.coeff(&mi(&[1, 2])), 1);
        assert_eq!(p.coeff(&mi(&[0, 0])), 7);
        assert_eq!(p.to_text(), "mod=8 d=2\n0 0 : 7\n1 2 : 1\n");
        assert_eq!(MultiPoly::parse(&p.to_text()).unwrap(), p);
        for bad in ["", "mod=8", "d=2", "mod=0 d=1", "mod=8 d=2\n1 : 3", "mod=8 d=2\n1 2 3", "mod=8 d=2 e=1", "mod=8 d=2\na b : 1", "mod=8 d=2\n1 2 : x"] {
            assert!(MultiPoly::parse(bad).is_err(), "{bad:?}");
        }
    }
}
