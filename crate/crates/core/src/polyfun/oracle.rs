//! Exhaustive oracles. Everything here works from value tables and linear
//! algebra over `Z_n`, never from the basis data, so it can referee the
//! closed forms in the rest of [`crate::polyfun`].

use std::collections::HashSet;

use crate::arith::{gcd, mul_mod, pow_mod};
use crate::error::{Error, Result};
use crate::smarandache::smarandache;

use super::{psi, CanonicalPolyfunction, GroupDecomposition};

/// A function table `Z_n^N -> Z_n` stored compactly.
pub type Table = Box<[u32]>;

/// Largest modulus the univariate oracles accept.
pub const ORACLE_MAX_MODULUS: u64 = 16;

/// Default cap on the number of elements a span enumeration may hold.
pub const SPAN_CAP: usize = 1 << 20;

fn to_table(values: &[u64]) -> Table {
    values.iter().map(|&v| v as u32).collect()
}

fn add_tables(a: &[u32], b: &[u32], n: u64) -> Table {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| ((x as u64 + y as u64) % n) as u32)
        .collect()
}

/// The additive subgroup of `Z_n^len` generated by `generators`, enumerated
/// element by element. Fails rather than truncating once more than `cap`
/// elements would be needed.
pub fn additive_span(n: u64, len: usize, generators: &[Vec<u64>], cap: usize) -> Result<HashSet<Table>> {
    let mut set: HashSet<Table> = HashSet::new();
    set.insert(vec![0u32; len].into_boxed_slice());
    for g in generators {
        if g.len() != len {
            return Err(Error::OutOfRange("generator length mismatch".into()));
        }
        let g = to_table(&g.iter().map(|v| v % n).collect::<Vec<_>>());
        // smallest j >= 1 with j*g already in the span
        let mut j = 1usize;
        let mut multiple = g.clone();
        while !set.contains(&multiple) {
            j += 1;
            multiple = add_tables(&multiple, &g, n);
        }
        if j == 1 {
            continue;
        }
        if set.len().saturating_mul(j) > cap {
            return Err(Error::GuardExceeded(format!(
                "span would exceed {cap} elements"
            )));
        }
        let base: Vec<Table> = set.iter().cloned().collect();
        for s in base {
            let mut cur = s;
            for _ in 1..j {
                cur = add_tables(&cur, &g, n);
                set.insert(cur.clone());
            }
        }
    }
    Ok(set)
}

fn check_oracle_modulus(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidModulus(0));
    }
    if n > ORACLE_MAX_MODULUS {
        return Err(Error::GuardExceeded(format!(
            "n = {n} > {ORACLE_MAX_MODULUS}"
        )));
    }
    Ok(())
}

fn power_table(n: u64, k: u64) -> Vec<u64> {
    (0..n).map(|x| pow_mod(x, k, n)).collect()
}

/// Value tables of `x^0, ..., x^(count-1)`.
fn power_tables(n: u64, count: u64) -> Vec<Vec<u64>> {
    (0..count).map(|k| power_table(n, k)).collect()
}

/// Every polyfunction on `Z_n` as a value table: the span of the tables of
/// `x^0, ..., x^(s(n)-1)`.
pub fn polyfunction_tables(n: u64) -> Result<HashSet<Table>> {
    check_oracle_modulus(n)?;
    let s = smarandache(n)?;
    additive_span(n, n as usize, &power_tables(n, s), SPAN_CAP)
}

/// Number of polyfunctions on `Z_n`: the order of the additive closure of
/// the tables of `x^0, ..., x^(s(n)-1)`, built generator by generator in a
/// [`SpanBasis`].
pub fn psi_bruteforce(n: u64) -> Result<u64> {
    check_oracle_modulus(n)?;
    let s = smarandache(n)?;
    let mut basis = SpanBasis::new(n, n as usize);
    for g in power_tables(n, s) {
        basis.insert(&g)?;
    }
    u64::try_from(basis.order()).map_err(|_| Error::Overflow)
}

/// Number of polyfunctions on `Z_n` by listing every element of the span.
pub fn psi_enumerated(n: u64) -> Result<u64> {
    Ok(polyfunction_tables(n)?.len() as u64)
}

/// Subgroup of `Z_n^len` held as echelon rows with the Howell property:
/// pivots divide `n`, and `(n / pivot) * row` lies in the span of the rows
/// with later pivots. Each element is then `sum c_i r_i` with
/// `0 <= c_i < n / pivot_i` in exactly one way.
#[derive(Debug, Clone)]
pub struct SpanBasis {
    n: u64,
    len: usize,
    rows: std::collections::BTreeMap<usize, Vec<u64>>,
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

impl SpanBasis {
    pub fn new(n: u64, len: usize) -> Self {
        assert!(n >= 1);
        SpanBasis { n, len, rows: Default::default() }
    }

    fn combine(&self, a: u64, x: &[u64], b: u64, y: &[u64]) -> Vec<u64> {
        let n = self.n;
        x.iter()
            .zip(y)
            .map(|(&u, &v)| (mul_mod(a, u, n) + mul_mod(b, v, n)) % n)
            .collect()
    }

    fn signed(&self, v: i128) -> u64 {
        v.rem_euclid(self.n as i128) as u64
    }

    /// Scales `v` by a unit so that its entry at `col` becomes `gcd(v[col], n)`.
    fn normalize(&self, v: &mut [u64], col: usize) {
        let n = self.n;
        let a = v[col];
        let g = gcd(a, n);
        let m = n / g;
        let (_, inv, _) = ext_gcd((a / g) as i128, m as i128);
        let mut u = (inv.rem_euclid(m.max(1) as i128)) as u64;
        // lift to a unit of Z_n; one of u, u + m, ..., u + (g-1) m works
        while gcd(u, n) != 1 {
            u += m;
        }
        for x in v.iter_mut() {
            *x = mul_mod(*x, u, n);
        }
    }

    pub fn insert(&mut self, v: &[u64]) -> Result<()> {
        if v.len() != self.len {
            return Err(Error::OutOfRange("generator length mismatch".into()));
        }
        let n = self.n;
        let mut queue = vec![v.iter().map(|x| x % n).collect::<Vec<u64>>()];
        while let Some(mut v) = queue.pop() {
            let mut col = 0;
            while col < self.len {
                let a = v[col];
                if a == 0 {
                    col += 1;
                    continue;
                }
                let Some(row) = self.rows.get(&col) else {
                    self.normalize(&mut v, col);
                    let ann = n / v[col];
                    queue.push(self.combine(ann, &v, 0, &v));
                    self.rows.insert(col, v);
                    break;
                };
                let d = row[col];
                if a % d == 0 {
                    v = self.combine(1, &v, n - (a / d) % n, row);
                    v[col] = 0;
                    col += 1;
                    continue;
                }
                let (g, s, t) = ext_gcd(d as i128, a as i128);
                let g = g as u64;
                let merged = self.combine(self.signed(s), row, self.signed(t), &v);
                let rest = self.combine(a / g, row, n - (d / g), &v);
                queue.push(self.combine(n / g, &merged, 0, &merged));
                queue.push(rest);
                self.rows.insert(col, merged);
                break;
            }
        }
        Ok(())
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let n = self.n;
        let mut v: Vec<u64> = v.iter().map(|x| x % n).collect();
        for col in 0..self.len {
            if v[col] == 0 {
                continue;
            }
            match self.rows.get(&col) {
                Some(row) if v[col].is_multiple_of(row[col]) => {
                    let q = v[col] / row[col];
                    v = self.combine(1, &v, n - q % n, row);
                }
                _ => return false,
            }
        }
        true
    }

    /// `prod_i n / pivot_i`.
    pub fn order(&self) -> u128 {
        self.rows.iter().map(|(&c, r)| (self.n / r[c]) as u128).product()
    }
}

/// Diagonalizes an integer matrix with row and column operations carried
/// out mod `n` and returns the nonzero diagonal entries. Every operation is
/// invertible mod `n`, so the row span mod `n` is isomorphic to
/// `sum_i Z_{n / gcd(d_i, n)}`.
pub fn smith_diagonal_mod(mut a: Vec<Vec<u64>>, n: u64) -> Vec<u64> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    for row in a.iter_mut() {
        for v in row.iter_mut() {
            *v %= n;
        }
    }
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block
            let mut best: Option<(u64, usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, &v) in row.iter().enumerate().skip(t) {
                    if v != 0 && best.is_none_or(|(b, _, _)| v < b) {
                        best = Some((v, i, j));
                    }
                }
            }
            let Some((_, bi, bj)) = best else {
                return diag;
            };
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
            let pivot = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t] / pivot;
                if q != 0 {
                    let (top, bottom) = a.split_at_mut(i);
                    for (x, &y) in bottom[0][t..].iter_mut().zip(&top[t][t..]) {
                        *x = (*x + n - mul_mod(q, y, n)) % n;
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / pivot;
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        let sub = mul_mod(q, row[t], n);
                        row[j] = (row[j] + n - sub) % n;
                    }
                }
                clean &= a[t][j] == 0;
            }
            if clean {
                diag.push(pivot);
                break;
            }
        }
    }
    diag
}

/// The additive group of polyfunctions from the Smith form of the
/// `s(n) x n` matrix `M[k][x] = x^k`.
pub fn group_structure_bruteforce(n: u64) -> Result<GroupDecomposition> {
    check_oracle_modulus(n)?;
    if n < 2 {
        return Err(Error::InvalidModulus(n));
    }
    let s = smarandache(n)?;
    let diag = smith_diagonal_mod(power_tables(n, s), n);
    GroupDecomposition::from_cyclic_orders(diag.into_iter().map(|d| n / gcd(d, n)))
}

/// Additive order of `x^(k+1)` in `F(n) / F_k(n)`, where `F_k(n)` is spanned
/// by `x^0, ..., x^k`.
pub fn quotient_order_bruteforce(n: u64, k: u64) -> Result<u64> {
    check_oracle_modulus(n)?;
    let lower = additive_span(n, n as usize, &power_tables(n, k + 1), SPAN_CAP)?;
    let g = to_table(&power_table(n, k + 1));
    let mut multiple = g.clone();
    let mut c = 1;
    while !lower.contains(&multiple) {
        c += 1;
        multiple = add_tables(&multiple, &g, n);
    }
    Ok(c)
}

const UNIT_SCAN_GUARD: u64 = 1 << 16;

/// Units among all canonical representatives, by scanning every one.
pub fn unit_count_bruteforce(n: u64) -> Result<u64> {
    let total = psi(n)?.to_u64()?;
    if total > UNIT_SCAN_GUARD {
        return Err(Error::GuardExceeded(format!(
            "Psi({n}) = {total} > {UNIT_SCAN_GUARD}"
        )));
    }
    Ok(CanonicalPolyfunction::enumerate(n)?
        .filter(|c| super::is_unit(&c.to_poly()))
        .count() as u64)
}

fn inverse_mod_small(a: u64, n: u64) -> Option<u64> {
    (0..n).find(|&b| mul_mod(a, b, n) == 1 % n)
}

/// Tables where "all values are units" and "some polyfunction `g` has
/// `f * g = 1`" disagree. Any such `g` must be the pointwise inverse of `f`,
/// so the search reduces to a membership test in the polyfunction set.
pub fn unit_criterion_mismatches(n: u64) -> Result<Vec<Table>> {
    let tables = polyfunction_tables(n)?;
    let mut bad = Vec::new();
    for f in &tables {
        let criterion = f.iter().all(|&v| gcd(v as u64, n) == 1);
        let pointwise: Option<Table> = f
            .iter()
            .map(|&v| inverse_mod_small(v as u64, n).map(|w| w as u32))
            .collect::<Option<Vec<_>>>()
            .map(Vec::into_boxed_slice);
        let has_inverse = pointwise.is_some_and(|g| tables.contains(&g));
        if criterion != has_inverse {
            bad.push(f.clone());
        }
    }
    bad.sort();
    Ok(bad)
}

/// Idempotent polyfunctions supported on multiples of `p` in `Z_{p^m}`.
pub fn idempotents_in_r0(p: u64, m: u32) -> Result<usize> {
    crate::arith::require_prime(p)?;
    let pm = p
        .checked_pow(m)
        .ok_or_else(|| Error::OutOfRange(format!("{p}^{m} overflows")))?;
    let tables = polyfunction_tables(pm)?;
    Ok(tables
        .iter()
        .filter(|f| {
            f.iter()
                .enumerate()
                .all(|(x, &v)| (x as u64).is_multiple_of(p) || v == 0)
        })
        .filter(|f| f.iter().all(|&v| mul_mod(v as u64, v as u64, pm) == v as u64))
        .count())
}
