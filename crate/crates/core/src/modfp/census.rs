use std::collections::BTreeMap;

use super::{FpModuleAction, ModError};

/// Default limit on `p^n`.
pub const CENSUS_BOUND: u64 = 1 << 27;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitCensus {
    /// `(orbit length, number of orbits)`, by increasing length.
    pub histogram: Vec<(u64, u64)>,
    /// Orbits of length `|G|`.
    pub regular_count: u64,
    /// Orbits of length `|G|/2`.
    pub half_regular_count: u64,
    pub group_order: u64,
}

impl OrbitCensus {
    pub fn total_points(&self) -> u64 {
        self.histogram.iter().map(|&(l, c)| l * c).sum()
    }

    pub fn orbit_count(&self) -> u64 {
        self.histogram.iter().map(|&(_, c)| c).sum()
    }
}

pub fn orbit_census(a: &FpModuleAction) -> Result<OrbitCensus, ModError> {
    orbit_census_with_bound(a, CENSUS_BOUND)
}

/// Exact orbit-length histogram of the action on all `p^n` vectors.
pub fn orbit_census_with_bound(a: &FpModuleAction, bound: u64) -> Result<OrbitCensus, ModError> {
    let size = (a.p as u128).checked_pow(a.n as u32).filter(|&s| s <= bound as u128);
    let Some(size) = size else {
        return Err(ModError::CensusBound { p: a.p, n: a.n, bound });
    };
    let size = size as u64;
    let mut lengths: BTreeMap<u64, u64> = BTreeMap::new();
    if a.n <= 16 && a.p < 128 {
        Packed::new(a).run(size, &mut lengths);
    } else {
        Plain::new(a).run(size, &mut lengths);
    }
    let order = a.group_order;
    if let Some(&length) = lengths.keys().find(|&&l| order % l != 0) {
        return Err(ModError::OrbitLength { length, order });
    }
    let regular_count = lengths.get(&order).copied().unwrap_or(0);
    let half_regular_count = if order % 2 == 0 { lengths.get(&(order / 2)).copied().unwrap_or(0) } else { 0 };
    Ok(OrbitCensus { histogram: lengths.into_iter().collect(), regular_count, half_regular_count, group_order: order })
}

struct Visited(Vec<u64>);

impl Visited {
    fn new(size: u64) -> Self {
        Visited(vec![0; size.div_ceil(64) as usize])
    }

    fn get(&self, i: u64) -> bool {
        self.0[(i >> 6) as usize] >> (i & 63) & 1 == 1
    }

    /// Set the bit; returns true if it was clear.
    fn mark(&mut self, i: u64) -> bool {
        let w = &mut self.0[(i >> 6) as usize];
        let bit = 1u64 << (i & 63);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }
}

/// Vectors with one byte per coordinate in a `u128`; addition mod `p` is lane-parallel.
struct Packed {
    p: u64,
    n: usize,
    /// `rows[g][i * p + c]` = `c` times row `i` of generator `g`.
    rows: Vec<Vec<u128>>,
    bias: u128,
    high: u128,
}

impl Packed {
    fn new(a: &FpModuleAction) -> Self {
        let (p, n) = (a.p, a.n);
        let pack = |v: &mut dyn Iterator<Item = u64>| v.enumerate().fold(0u128, |acc, (i, x)| acc | (x as u128) << (8 * i));
        let rows = a
            .generators
            .iter()
            .map(|g| {
                let mut t = Vec::with_capacity(n * p as usize);
                for i in 0..n {
                    for c in 0..p {
                        t.push(pack(&mut g.row(i).iter().map(|&x| x * c % p)));
                    }
                }
                t
            })
            .collect();
        let lanes = |b: u64| pack(&mut std::iter::repeat_n(b, n));
        Packed { p, n, rows, bias: lanes(128 - p), high: lanes(128) }
    }

    #[inline]
    fn add(&self, a: u128, b: u128) -> u128 {
        let s = a + b;
        let over = ((s + self.bias) & self.high) >> 7;
        s - over * self.p as u128
    }

    #[inline]
    fn apply(&self, g: usize, v: u128) -> u128 {
        let t = &self.rows[g];
        let p = self.p as usize;
        let mut acc = 0u128;
        for i in 0..self.n {
            let c = (v >> (8 * i)) as usize & 0xff;
            if c != 0 {
                acc = self.add(acc, t[i * p + c]);
            }
        }
        acc
    }

    fn index(&self, v: u128) -> u64 {
        let mut idx = 0u64;
        for i in (0..self.n).rev() {
            idx = idx * self.p + ((v >> (8 * i)) as u64 & 0xff);
        }
        idx
    }

    fn unindex(&self, mut idx: u64) -> u128 {
        let mut v = 0u128;
        for i in 0..self.n {
            v |= ((idx % self.p) as u128) << (8 * i);
            idx /= self.p;
        }
        v
    }

    fn run(&self, size: u64, lengths: &mut BTreeMap<u64, u64>) {
        let mut seen = Visited::new(size);
        let mut stack: Vec<u128> = Vec::new();
        for start in 0..size {
            if seen.get(start) {
                continue;
            }
            seen.mark(start);
            stack.push(self.unindex(start));
            let mut len = 0u64;
            while let Some(v) = stack.pop() {
                len += 1;
                for g in 0..self.rows.len() {
                    let w = self.apply(g, v);
                    if seen.mark(self.index(w)) {
                        stack.push(w);
                    }
                }
            }
            *lengths.entry(len).or_default() += 1;
        }
    }
}

/// Fallback for wide vectors or large primes.
struct Plain<'a> {
    a: &'a FpModuleAction,
}

impl<'a> Plain<'a> {
    fn new(a: &'a FpModuleAction) -> Self {
        Plain { a }
    }

    fn run(&self, size: u64, lengths: &mut BTreeMap<u64, u64>) {
        let (p, n) = (self.a.p, self.a.n);
        let index = |v: &[u64]| v.iter().rev().fold(0u64, |acc, &x| acc * p + x);
        let mut seen = Visited::new(size);
        let mut stack: Vec<Vec<u64>> = Vec::new();
        for start in 0..size {
            if seen.get(start) {
                continue;
            }
            seen.mark(start);
            let mut v = vec![0u64; n];
            let mut idx = start;
            for x in v.iter_mut() {
                *x = idx % p;
                idx /= p;
            }
            stack.push(v);
            let mut len = 0u64;
            while let Some(v) = stack.pop() {
                len += 1;
                for g in &self.a.generators {
                    let w = g.vec_mul(&v);
                    if seen.mark(index(&w)) {
                        stack.push(w);
                    }
                }
            }
            *lengths.entry(len).or_default() += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::Matrix;

    fn gl32() -> FpModuleAction {
        let a = Matrix::from_rows(2, &[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let b = Matrix::from_rows(2, &[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]);
        FpModuleAction::new(2, 3, vec![a, b], 168).unwrap()
    }

    #[test]
    fn gl32_natural_module() {
        let c = orbit_census(&gl32()).unwrap();
        assert_eq!(c.histogram, vec![(1, 1), (7, 1)]);
        assert_eq!(c.regular_count, 0);
        assert_eq!(c.total_points(), 8);
    }

    #[test]
    fn packed_and_plain_agree() {
        let g = Matrix::from_rows(131, &[vec![0, 1], vec![130, 0]]);
        let a = FpModuleAction::new(131, 2, vec![g], 4).unwrap();
        let c = orbit_census(&a).unwrap();
        assert_eq!(c.histogram, vec![(1, 1), (4, (131 * 131 - 1) / 4)]);
        let g = Matrix::from_rows(7, &[vec![0, 1], vec![6, 0]]);
        let a = FpModuleAction::new(7, 2, vec![g], 4).unwrap();
        let mut packed = BTreeMap::new();
        Packed::new(&a).run(49, &mut packed);
        let mut plain = BTreeMap::new();
        Plain::new(&a).run(49, &mut plain);
        assert_eq!(packed, plain);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(orbit_census_with_bound(&gl32(), 7), Err(ModError::CensusBound { .. })));
    }
}
