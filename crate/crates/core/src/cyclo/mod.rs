//! Exact arithmetic in cyclotomic fields.
//!
//! Values are stored in the Zumbroich basis of `Q(zeta_n)` at their minimal conductor `n`, so
//! two values are equal exactly when their stored forms are.

mod reduce;
mod text;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ff::{gcd, lcm};

pub use reduce::IntAccumulator;
pub use text::{parse_value, CycloParseError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CycloError {
    #[error("{m} is not coprime to the conductor {conductor}")]
    NotCoprime { m: i64, conductor: u64 },
}

/// An element of some `Q(zeta_n)` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u64,
    /// Sorted by exponent; no zero coefficients.
    terms: Vec<(u64, BigRational)>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { conductor: 1, terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(c: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Cyclotomic { conductor: 1, terms: vec![(0, c)] }
        }
    }

    /// `zeta_n^j`.
    pub fn root_of_unity(n: u64, j: i64) -> Self {
        assert!(n > 0, "conductor must be positive");
        let mut v = vec![BigRational::zero(); n as usize];
        v[j.rem_euclid(n as i64) as usize] = BigRational::one();
        Self::from_dense(n, v)
    }

    /// `sum_j coeffs[j] * zeta_n^j`, where `coeffs.len() == n`.
    pub fn from_dense(n: u64, coeffs: Vec<BigRational>) -> Self {
        let (conductor, terms) = reduce::canonical(n, coeffs);
        Cyclotomic { conductor, terms }
    }

    pub fn from_dense_int(n: u64, coeffs: &[i64]) -> Self {
        let v: Vec<i128> = coeffs.iter().map(|&c| c as i128).collect();
        Self::from_dense_i128(n, v)
    }

    pub fn from_dense_i128(n: u64, coeffs: Vec<i128>) -> Self {
        let (conductor, terms) = reduce::canonical_i128(n, coeffs);
        Cyclotomic {
            conductor,
            terms: terms.into_iter().map(|(j, c)| (j, BigRational::from_integer(BigInt::from(c)))).collect(),
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Canonical `(exponent, coefficient)` pairs relative to [`Self::conductor`].
    pub fn terms(&self) -> &[(u64, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match (self.conductor, self.terms.as_slice()) {
            (1, []) => Some(BigRational::zero()),
            (1, [(0, c)]) => Some(c.clone()),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|c| c.to_i64())
    }

    /// All basis coefficients are integers, i.e. the value is an algebraic integer.
    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    /// Dense coefficients at conductor `n`, which must be a multiple of the own conductor.
    fn dense_at(&self, n: u64) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); n as usize];
        let s = n / self.conductor;
        for (j, c) in &self.terms {
            v[(j * s) as usize] += c;
        }
        v
    }

    /// Exponent/coefficient pairs rescaled to conductor `n` (a multiple of the own conductor).
    pub fn terms_at(&self, n: u64) -> Vec<(u64, BigRational)> {
        assert_eq!(n % self.conductor, 0, "conductor {} does not divide {}", self.conductor, n);
        let s = n / self.conductor;
        self.terms.iter().map(|(j, c)| (j * s, c.clone())).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let n = lcm(self.conductor, other.conductor);
        let mut v = self.dense_at(n);
        let s = n / other.conductor;
        for (j, c) in &other.terms {
            v[(j * s) as usize] += c;
        }
        Self::from_dense(n, v)
    }

    pub fn neg(&self) -> Self {
        Cyclotomic { conductor: self.conductor, terms: self.terms.iter().map(|(j, c)| (*j, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some(r) = self.as_rational() {
            return other.scale(&r);
        }
        if let Some(r) = other.as_rational() {
            return self.scale(&r);
        }
        let n = lcm(self.conductor, other.conductor);
        let (sa, sb) = (n / self.conductor, n / other.conductor);
        let mut v = vec![BigRational::zero(); n as usize];
        for (ja, ca) in &self.terms {
            for (jb, cb) in &other.terms {
                v[((ja * sa + jb * sb) % n) as usize] += ca * cb;
            }
        }
        Self::from_dense(n, v)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclotomic { conductor: self.conductor, terms: self.terms.iter().map(|(j, c)| (*j, c * r)).collect() }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }

    /// Apply `zeta_n -> zeta_n^m`.
    pub fn galois(&self, m: i64) -> Result<Self, CycloError> {
        let n = self.conductor;
        let mr = m.rem_euclid(n as i64) as u64;
        if gcd(mr, n) != 1 && n > 1 {
            return Err(CycloError::NotCoprime { m, conductor: n });
        }
        if n <= 2 {
            return Ok(self.clone());
        }
        let mut v = vec![BigRational::zero(); n as usize];
        for (j, c) in &self.terms {
            v[((j * mr) % n) as usize] += c;
        }
        Ok(Self::from_dense(n, v))
    }

    /// Galois image for any `m` coprime to `n`, where `n` is a multiple of the conductor.
    pub fn galois_mod(&self, m: i64, n: u64) -> Self {
        let c = self.conductor;
        debug_assert_eq!(n % c, 0);
        self.galois(m.rem_euclid(c as i64)).expect("exponent coprime to conductor")
    }

    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is always a unit")
    }

    pub fn is_real(&self) -> bool {
        self.conductor <= 2 || self.conj() == *self
    }

    /// Numerical value, for cross-checks only.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in &self.terms {
            let a = std::f64::consts::TAU * (*j as f64) / n;
            let c = c.to_f64().unwrap_or(f64::NAN);
            re += c * a.cos();
            im += c * a.sin();
        }
        (re, im)
    }

    /// Text form with exponents relative to conductor `n`.
    pub fn to_text(&self, n: u64) -> String {
        text::emit(self, n)
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(c: i64) -> Self {
        Self::from_integer(c)
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Rationals first, in numeric order; then by conductor and basis coefficients.
impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => a.cmp(&b),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => self.conductor.cmp(&other.conductor).then_with(|| self.terms.cmp(&other.terms)),
        }
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(self.conductor))
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc[{}]({})", self.conductor, self)
    }
}

impl std::ops::Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Self) -> Cyclotomic {
        Cyclotomic::add(self, rhs)
    }
}

impl std::ops::Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Self) -> Cyclotomic {
        Cyclotomic::sub(self, rhs)
    }
}

impl std::ops::Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Self) -> Cyclotomic {
        Cyclotomic::mul(self, rhs)
    }
}

impl std::ops::Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic::neg(self)
    }
}

/// Sign helper shared with the text module.
pub(crate) fn is_negative(c: &BigRational) -> bool {
    c.is_negative()
}
