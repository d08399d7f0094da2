use std::fmt;

use crate::arith::{factorize, legendre_ep, require_prime, FactoredCount};
use crate::error::{Error, Result};
use crate::smarandache::{basis_spec, smarandache};

/// A finite abelian group as a multiset of prime-power cyclic orders.
///
/// Factors are kept sorted by prime ascending, then order descending, so two
/// decompositions compare equal exactly when the groups are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupDecomposition {
    factors: Vec<(u64, u64)>,
}

impl GroupDecomposition {
    /// Refines arbitrary cyclic orders into primary form; trivial factors vanish.
    pub fn from_cyclic_orders(orders: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut factors = Vec::new();
        for order in orders {
            if order == 0 {
                return Err(Error::OutOfRange("cyclic order 0".into()));
            }
            for &(p, a) in factorize(order)?.pairs() {
                factors.push((p, p.pow(a)));
            }
        }
        factors.sort_unstable_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
        Ok(GroupDecomposition { factors })
    }

    /// The prime-power orders in canonical order.
    pub fn orders(&self) -> Vec<u64> {
        self.factors.iter().map(|&(_, q)| q).collect()
    }

    pub fn order(&self) -> FactoredCount {
        self.factors
            .iter()
            .fold(FactoredCount::one(), |acc, &(p, q)| {
                acc.mul(&FactoredCount::prime_power(p, q.ilog(p) as i64))
            })
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        factors.sort_unstable_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
        GroupDecomposition { factors }
    }
}

impl fmt::Display for GroupDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.factors.iter().map(|(_, q)| format!("Z_{q}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Cyclic factors `(order, multiplicity)` of the additive group of
/// polyfunctions as produced by the basis data: `beta_k - beta_{k+1}` copies
/// of `Z_{alpha_{k+1}}`, with `beta_{t+1} = 0` and `alpha_{t+1} = n`.
/// Each order divides the next.
pub fn invariant_factors(n: u64) -> Result<Vec<(u64, u64)>> {
    let spec = basis_spec(n)?;
    Ok((1..=spec.t())
        .map(|k| (spec.alpha(k + 1), spec.beta(k) - spec.beta(k + 1)))
        .filter(|&(order, mult)| order > 1 && mult > 0)
        .collect())
}

pub fn group_structure(n: u64) -> Result<GroupDecomposition> {
    let factors = invariant_factors(n)?;
    GroupDecomposition::from_cyclic_orders(
        factors
            .into_iter()
            .flat_map(|(order, mult)| std::iter::repeat_n(order, mult as usize)),
    )
}

/// Closed form for prime powers: `p` copies of
/// `sum_{k=0}^{s(p^m)/p - 1} Z_{p^(m - e_p(pk))}`.
pub fn group_structure_prime_power(p: u64, m: u32) -> Result<GroupDecomposition> {
    require_prime(p)?;
    let pm = p
        .checked_pow(m)
        .ok_or_else(|| Error::OutOfRange(format!("{p}^{m} overflows")))?;
    let blocks = smarandache(pm)? / p;
    let mut orders = Vec::new();
    for _ in 0..p {
        for k in 0..blocks {
            let e = legendre_ep(p, p * k);
            orders.push(p.pow(m - e as u32));
        }
    }
    GroupDecomposition::from_cyclic_orders(orders)
}
