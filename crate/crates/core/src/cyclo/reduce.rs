//! Reduction of dense coefficient vectors to the Zumbroich basis at the minimal conductor.

use std::ops::{AddAssign, Neg, SubAssign};

use num_rational::BigRational;
use num_traits::Zero;

use super::Cyclotomic;
use crate::ff::{factorize, inv_mod_any};

pub(crate) trait Coef: Clone + Zero + PartialEq + Neg<Output = Self> + for<'a> AddAssign<&'a Self> + for<'a> SubAssign<&'a Self> {}

impl<T> Coef for T where T: Clone + Zero + PartialEq + Neg<Output = T> + for<'a> AddAssign<&'a T> + for<'a> SubAssign<&'a T> {}

struct PrimePart {
    p: u64,
    nu: u32,
    pnu: u64,
    /// `(n / p^nu)^-1 mod p^nu`
    minv: u64,
}

fn prime_parts(n: u64) -> Vec<PrimePart> {
    factorize(n)
        .into_iter()
        .map(|(p, nu)| {
            let pnu = p.pow(nu);
            let m = n / pnu;
            let minv = if pnu == 1 { 0 } else { inv_mod_any(m % pnu, pnu).expect("coprime cofactor") };
            PrimePart { p, nu, pnu, minv }
        })
        .collect()
}

/// Top (coarsest) digit of the `p`-component of exponent `j`, using balanced digits below it
/// for odd `p`.
fn top_digit(j: u64, part: &PrimePart) -> u64 {
    let u = ((j % part.pnu) as u128 * part.minv as u128 % part.pnu as u128) as i64;
    let p = part.p as i64;
    if p == 2 {
        return (u >> (part.nu - 1)) as u64 & 1;
    }
    let mut u = u;
    let half = (p - 1) / 2;
    for _ in 1..part.nu {
        let mut d = u.rem_euclid(p);
        if d > half {
            d -= p;
        }
        u = (u - d) / p;
    }
    u.rem_euclid(p) as u64
}

/// Rewrite `v` (length `n`) in the Zumbroich basis of `Q(zeta_n)`.
fn to_basis<T: Coef>(n: u64, v: &mut [T], parts: &[PrimePart]) {
    for part in parts {
        let step = n / part.p;
        for j in 0..n {
            if v[j as usize].is_zero() {
                continue;
            }
            let d = top_digit(j, part);
            if part.p == 2 {
                if d == 1 {
                    let c = std::mem::replace(&mut v[j as usize], T::zero());
                    v[((j + step) % n) as usize] -= &c;
                }
            } else if d == 0 {
                let c = std::mem::replace(&mut v[j as usize], T::zero());
                for t in 1..part.p {
                    v[((j + t * step) % n) as usize] -= &c;
                }
            }
        }
    }
}

/// Lower the conductor while the value lies in a proper subfield.
fn minimize<T: Coef>(mut n: u64, mut terms: Vec<(u64, T)>) -> (u64, Vec<(u64, T)>) {
    'outer: loop {
        if terms.is_empty() {
            return (1, terms);
        }
        if n == 1 {
            return (1, terms);
        }
        let parts = prime_parts(n);
        for part in &parts {
            let p = part.p;
            if p == 2 || part.nu >= 2 {
                if terms.iter().all(|(j, _)| j % p == 0) {
                    for t in terms.iter_mut() {
                        t.0 /= p;
                    }
                    n /= p;
                    continue 'outer;
                }
            } else {
                // odd p exactly dividing n: coefficients must be constant along each fibre
                let step = n / p;
                let mut groups: Vec<(u64, u64, T)> = Vec::with_capacity(terms.len());
                let mut ok = true;
                for (j, c) in &terms {
                    let d = top_digit(*j, part);
                    let rest = (j + n - (d * step) % n) % n;
                    groups.push((rest, d, c.clone()));
                }
                groups.sort_by_key(|a| (a.0, a.1));
                let mut contracted = Vec::new();
                let mut i = 0;
                while i < groups.len() {
                    let rest = groups[i].0;
                    let mut k = i;
                    while k < groups.len() && groups[k].0 == rest {
                        k += 1;
                    }
                    if (k - i) as u64 != p - 1 || groups[i..k].iter().any(|g| g.2 != groups[i].2) {
                        ok = false;
                        break;
                    }
                    contracted.push((rest / p, -groups[i].2.clone()));
                    i = k;
                }
                if ok {
                    contracted.sort_by_key(|t| t.0);
                    terms = contracted;
                    n /= p;
                    continue 'outer;
                }
            }
        }
        return (n, terms);
    }
}

fn canonical_generic<T: Coef>(n: u64, mut v: Vec<T>) -> (u64, Vec<(u64, T)>) {
    assert_eq!(v.len() as u64, n, "dense vector length must equal the conductor");
    if n > 1 {
        let parts = prime_parts(n);
        to_basis(n, &mut v, &parts);
    }
    let terms: Vec<(u64, T)> = v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| (j as u64, c)).collect();
    minimize(n, terms)
}

pub(crate) fn canonical(n: u64, v: Vec<BigRational>) -> (u64, Vec<(u64, BigRational)>) {
    canonical_generic(n, v)
}

pub(crate) fn canonical_i128(n: u64, v: Vec<i128>) -> (u64, Vec<(u64, i128)>) {
    canonical_generic(n, v)
}

/// Dense integer accumulator at a fixed conductor for long sums of products of
/// algebraic integers (orthogonality checks, class-function inner products).
#[derive(Clone, Debug)]
pub struct IntAccumulator {
    n: u64,
    v: Vec<i128>,
}

impl IntAccumulator {
    pub fn new(n: u64) -> Self {
        IntAccumulator { n, v: vec![0; n as usize] }
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    /// Integer basis terms of `x` at this conductor; `None` if `x` has a non-integral coefficient.
    pub fn terms_of(&self, x: &Cyclotomic) -> Option<Vec<(u64, i128)>> {
        use num_traits::ToPrimitive;
        x.terms_at(self.n)
            .into_iter()
            .map(|(j, c)| if c.is_integer() { c.to_integer().to_i128().map(|c| (j, c)) } else { None })
            .collect()
    }

    pub fn add_terms(&mut self, a: &[(u64, i128)], factor: i128) {
        for &(j, c) in a {
            let t = c.checked_mul(factor).expect("accumulator overflow");
            self.v[j as usize] = self.v[j as usize].checked_add(t).expect("accumulator overflow");
        }
    }

    /// Add `factor * a * b`.
    pub fn add_product(&mut self, a: &[(u64, i128)], b: &[(u64, i128)], factor: i128) {
        let n = self.n;
        for &(ja, ca) in a {
            let cf = ca.checked_mul(factor).expect("accumulator overflow");
            for &(jb, cb) in b {
                let k = ((ja + jb) % n) as usize;
                let t = cf.checked_mul(cb).expect("accumulator overflow");
                self.v[k] = self.v[k].checked_add(t).expect("accumulator overflow");
            }
        }
    }

    pub fn finish(self) -> Cyclotomic {
        Cyclotomic::from_dense_i128(self.n, self.v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_sizes_match_totient() {
        // A generic element has exactly phi(n) basis terms.
        for n in [3u64, 4, 5, 8, 9, 12, 15, 16, 20, 21, 24, 27, 36, 45, 60] {
            let mut v = vec![0i128; n as usize];
            for (j, x) in v.iter_mut().enumerate() {
                *x = (j as i128 * 7 + 3) % 11 + 1;
            }
            let mut w = v.clone();
            to_basis(n, &mut w, &prime_parts(n));
            let nonzero_positions: Vec<usize> = (0..n as usize).filter(|&j| {
                let mut e = vec![0i128; n as usize];
                e[j] = 1;
                let mut f = e.clone();
                to_basis(n, &mut f, &prime_parts(n));
                f == e
            }).collect();
            let phi = (1..=n).filter(|&k| crate::ff::gcd(k, n) == 1).count();
            assert_eq!(nonzero_positions.len(), phi, "n = {n}");
        }
    }

    #[test]
    fn accumulator_norm() {
        // |zeta_3 - 1|^2 = 3
        let a = Cyclotomic::root_of_unity(3, 1).sub(&Cyclotomic::one());
        let mut acc = IntAccumulator::new(3);
        let t = acc.terms_of(&a).unwrap();
        let tc = acc.terms_of(&a.conj()).unwrap();
        acc.add_product(&t, &tc, 1);
        assert_eq!(acc.finish(), Cyclotomic::from_integer(3));
    }
}
