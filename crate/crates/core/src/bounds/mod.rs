//! Closed-form bounds and combinatorial tests on group orders, dimensions, and actions.

mod data;
mod partition;
mod subsets;

pub use data::{parse_maximal_indices, MaximalSubgroup, MaximalTable, RTable, REntry};
pub use partition::{associate, diagonal_count, splitting_partition, SplitPartition};
pub use subsets::{distinct_sum_feasible, nh_wh, subset_orbit_profile, SubsetOrbit, SubsetProfile, SUBSET_BOUND};

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::ff::is_prime;
use crate::perm::{ClassData, PermError};

/// `|L|` for `L = (C3 x C3) : Q8`.
pub const L_ORDER_G: u64 = 72;
/// `|L|` for `L = (C5 x C5) : Q8`.
pub const L_ORDER_H: u64 = 200;

#[derive(Debug, thiserror::Error)]
pub enum BoundError {
    #[error("dimension {0} must be even")]
    OddDimension(u64),
    #[error("r = {0} must be at least 2")]
    SmallR(u64),
    #[error("order {0} must be at least 2")]
    SmallOrder(u64),
    #[error("no maximal subgroup indices given")]
    NoIndices,
    #[error("{count} subsets exceed the bound {bound}")]
    SubsetBound { count: u128, bound: u64 },
    #[error("degree {0} is too large for subset enumeration")]
    Degree(usize),
    #[error("n = {0} is below 13")]
    PartitionTooSmall(u64),
    #[error("line {line}: {message}")]
    Data { line: usize, message: String },
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Counting {
    /// `(p^n - 1) - 4(p^a - 1)`.
    Eq1 { p: u64, n: u32, a: u32 },
    /// `p^n - 4 p^[n/2] - 21`.
    F { p: u64, n: u32 },
    /// `(q^m - 1) - 13 (q^{m/2} - 1) - 14 |L|`.
    G { q: u64, m: u32, l: u64 },
    /// `(q^m - 1) - 31 (q^{m/2} - 1) - 14 |L|`.
    H { q: u64, m: u32, l: u64 },
}

pub fn counting_function(kind: Counting) -> Result<BigInt, BoundError> {
    let pow = |b: u64, e: u32| -> BigInt { Pow::pow(BigInt::from(b), e) };
    let one = BigInt::one();
    Ok(match kind {
        Counting::Eq1 { p, n, a } => (pow(p, n) - &one) - 4 * (pow(p, a) - &one),
        Counting::F { p, n } => pow(p, n) - 4 * pow(p, n / 2) - 21,
        Counting::G { q, m, l } | Counting::H { q, m, l } => {
            if m % 2 != 0 {
                return Err(BoundError::OddDimension(m as u64));
            }
            let c = if matches!(kind, Counting::G { .. }) { 9 + 4 } else { 6 + 25 };
            (pow(q, m) - &one) - c * (pow(q, m / 2) - &one) - 14 * BigInt::from(l)
        }
    })
}

/// `floor(n (r - 1) / r)`.
pub fn fix_dim_upper(n: u64, r: u64) -> Result<u64, BoundError> {
    if r < 2 {
        return Err(BoundError::SmallR(r));
    }
    Ok(n * (r - 1) / r)
}

/// `(p^n - sum count * p^{floor(n (1 - 1/r))}) / |G|`, a lower bound for the number of
/// regular orbits when the spectrum lists every cyclic subgroup of prime order.
pub fn regular_orbit_lower_bound(order: u64, p: u64, n: u64, spectrum: &[(u64, u64)]) -> Result<BigRational, BoundError> {
    let pn = BigInt::from(BigUint::from(p).pow(n as u32));
    let mut fixed = BigInt::zero();
    for &(count, r) in spectrum {
        let e = fix_dim_upper(n, r)?;
        fixed += BigInt::from(count) * BigInt::from(BigUint::from(p).pow(e as u32));
    }
    Ok(BigRational::new(pn - fixed, BigInt::from(order)))
}

/// Number of cyclic subgroups of prime order: `sum_l #{g : o(g) = l} / (l - 1)`.
pub fn prime_order_cyclic_count(cd: &ClassData) -> u64 {
    prime_order_cyclic_count_from(&cd.element_orders, &cd.sizes)
}

/// [`prime_order_cyclic_count`] from parallel lists of element orders and class sizes.
pub fn prime_order_cyclic_count_from(orders: &[u64], sizes: &[u64]) -> u64 {
    let mut by_prime = std::collections::BTreeMap::<u64, u64>::new();
    for (&o, &s) in orders.iter().zip(sizes) {
        if is_prime(o) {
            *by_prime.entry(o).or_default() += s;
        }
    }
    by_prime.into_iter().map(|(l, c)| c / (l - 1)).sum()
}

/// `2^{n(1-1/r)} (2^{n/r} - pcount) > 5 |G|`, decided on integers: with `y = 2^n` and
/// `C = 5|G|`, this is `y > C` and `(y - C)^r > pcount^r y^{r-1}`.
pub fn threshold_holds(order: u64, pcount: u64, r: u64, n: u64) -> bool {
    let y = BigUint::one() << n;
    let c = BigUint::from(5u64) * BigUint::from(order);
    if y <= c {
        return false;
    }
    let lhs = Pow::pow(&y - &c, r as u32);
    let rhs = Pow::pow(BigUint::from(pcount), r as u32) * Pow::pow(&y, (r - 1) as u32);
    lhs > rhs
}

/// Least `n` from which the threshold inequality holds; it then holds for all larger `n`
/// because `x^{r-1}(x - pcount)` increases once `x > pcount`.
pub fn dimension_threshold(order: u64, pcount: u64, r: u64) -> Result<u64, BoundError> {
    if r < 2 {
        return Err(BoundError::SmallR(r));
    }
    Ok((1..).find(|&n| threshold_holds(order, pcount, r, n)).expect("the inequality holds eventually"))
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn central_binomial(a: u64) -> BigUint {
    let k = a / 2;
    let mut c = BigUint::one();
    for i in 0..k {
        c = c * BigUint::from(a - i) / BigUint::from(i + 1);
    }
    c
}

/// Largest divisor `a` of `order` with `sigma(order) - 1 >= binomial(a, floor(a/2))`.
pub fn b_of(order: u64) -> Result<u64, BoundError> {
    if order < 2 {
        return Err(BoundError::SmallOrder(order));
    }
    let ds = divisors(order);
    let sum = BigUint::from(ds.iter().map(|&d| d as u128).sum::<u128>() as u64 - 1);
    // binomial(a, a/2) >= 2^a / (a + 1), so larger a cannot qualify.
    let cap = |a: u64| a <= sum.bits() + 1 + u64::from((a + 1).ilog2());
    Ok(ds.into_iter().rev().filter(|&a| cap(a)).find(|&a| sum >= central_binomial(a)).unwrap_or(1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct N1 {
    pub b: u64,
    pub raw: BTreeSet<u64>,
    pub refined: BTreeSet<u64>,
}

/// `{ c |H:L| <= b(|H|) }` over maximal subgroups `L`; the refined set keeps a multiple
/// `c > 1` only when `L` has a proper subgroup of index at most `c` (a perfect `L` has none
/// of index 2).
pub fn n1_of(order: u64, maxes: &[MaximalSubgroup]) -> Result<N1, BoundError> {
    if maxes.is_empty() {
        return Err(BoundError::NoIndices);
    }
    let b = b_of(order)?;
    let mut raw = BTreeSet::new();
    let mut refined = BTreeSet::new();
    for m in maxes {
        let mut c = 1;
        while c * m.index <= b {
            raw.insert(c * m.index);
            if c == 1 || c >= m.min_index {
                refined.insert(c * m.index);
            }
            c += 1;
        }
    }
    Ok(N1 { b, raw, refined })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counting_examples() {
        assert_eq!(counting_function(Counting::F { p: 3, n: 2 }).unwrap(), BigInt::from(-24));
        assert_eq!(counting_function(Counting::G { q: 2, m: 8, l: L_ORDER_G }).unwrap(), BigInt::from(-948));
        let h = counting_function(Counting::H { q: 2, m: 24, l: L_ORDER_H }).unwrap();
        assert_eq!(h, BigInt::from(16777215 - 126945 - 2800));
        assert!(counting_function(Counting::G { q: 3, m: 3, l: 72 }).is_err());
        assert_eq!(counting_function(Counting::Eq1 { p: 5, n: 2, a: 1 }).unwrap(), BigInt::from(8));
    }

    #[test]
    fn fix_dims() {
        assert_eq!(fix_dim_upper(9, 3).unwrap(), 6);
        assert_eq!(fix_dim_upper(7, 2).unwrap(), 3);
        assert_eq!(fix_dim_upper(148, 3).unwrap(), 98);
        assert!(fix_dim_upper(5, 1).is_err());
    }

    #[test]
    fn thresholds() {
        assert_eq!(dimension_threshold(1, 0, 2).unwrap(), 3);
        assert_eq!(dimension_threshold(20160, 2227, 4).unwrap(), 45);
        assert_eq!(dimension_threshold(168, 57, 3).unwrap(), 18);
    }

    #[test]
    fn b_values() {
        assert_eq!(b_of(20160).unwrap(), 18);
        assert_eq!(b_of(168).unwrap(), 8);
        assert_eq!(b_of(1512).unwrap(), 14);
    }

    #[test]
    fn n1_refinement() {
        let maxes = [MaximalSubgroup { index: 8, min_index: 7 }, MaximalSubgroup { index: 15, min_index: 7 }];
        let n1 = n1_of(20160, &maxes).unwrap();
        assert_eq!(n1.raw, BTreeSet::from([8, 15, 16]));
        assert_eq!(n1.refined, BTreeSet::from([8, 15]));
    }

    #[test]
    fn lower_bound_with_full_spectrum() {
        // GL(3,2) on F_2^3: 21 involution subgroups (r = 3) and 36 others (r = 2).
        let b = regular_orbit_lower_bound(168, 2, 3, &[(21, 3), (36, 2)]).unwrap();
        assert!(b <= BigRational::zero());
    }
}
