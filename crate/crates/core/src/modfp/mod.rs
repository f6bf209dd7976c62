//! Modules over prime fields: constructors, fixed spaces, orbit censuses, and a small
//! MeatAxe for composition factors.
//!
//! Vectors are rows and act on the right, `v -> v g`, matching the permutation convention.

mod census;
mod chop;
mod space;

pub use census::{orbit_census, orbit_census_with_bound, OrbitCensus, CENSUS_BOUND};
pub use chop::{chop, chop_with, ChopOptions, CompositionFactor};
pub use space::{spin, Subspace};

use crate::cyclo::Cyclotomic;
use crate::ff::{f2_rank, Matrix};
use crate::perm::{Permutation, PermutationGroup};

pub type MatFp = Matrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModError {
    #[error("modules over F_{0} and F_{1} cannot be combined")]
    PrimeMismatch(u64, u64),
    #[error("generator lists differ in length ({0} vs {1})")]
    GeneratorMismatch(usize, usize),
    #[error("generator {index} is not an invertible {n}x{n} matrix")]
    BadGenerator { index: usize, n: usize },
    #[error("{p}^{n} vectors exceed the census bound of {bound}")]
    CensusBound { p: u64, n: usize, bound: u64 },
    #[error("orbit of length {length} does not divide the group order {order}")]
    OrbitLength { length: u64, order: u64 },
    #[error("dimension {n} exceeds the chop bound {bound}")]
    ChopBound { n: usize, bound: usize },
    #[error("no irreducibility certificate for a {dim}-dimensional module after {attempts} attempts")]
    ChopFailed { dim: usize, attempts: usize },
    #[error("Brauer average {0} is not a non-negative integer")]
    NonIntegral(String),
}

/// A group acting on `F_p^n` through one matrix per abstract generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpModuleAction {
    pub p: u64,
    pub n: usize,
    pub generators: Vec<MatFp>,
    pub group_order: u64,
}

impl FpModuleAction {
    pub fn new(p: u64, n: usize, generators: Vec<MatFp>, group_order: u64) -> Result<Self, ModError> {
        for (index, g) in generators.iter().enumerate() {
            if g.p != p || g.rows != n || g.cols != n || g.rank() != n {
                return Err(ModError::BadGenerator { index, n });
            }
        }
        Ok(FpModuleAction { p, n, generators, group_order })
    }

    /// Matrix of a word in the generators, given as generator indices.
    pub fn word(&self, letters: &[usize]) -> MatFp {
        letters.iter().fold(Matrix::identity(self.p, self.n), |acc, &i| acc.mul(&self.generators[i]))
    }
}

/// Permutation matrix of `g` over `F_p`: `e_i -> e_{g(i)}`.
pub fn permutation_matrix(g: &Permutation, p: u64) -> MatFp {
    let d = g.degree();
    let mut m = Matrix::zero(p, d, d);
    for i in 0..d {
        m.set(i, g.image(i), 1);
    }
    m
}

/// Action of `g` on the sum-zero section of the permutation module: the sum-zero
/// subspace when `p` does not divide the degree, and that subspace modulo the all-ones
/// vector otherwise.
pub fn deleted_permutation_matrix(g: &Permutation, p: u64) -> MatFp {
    let d = g.degree();
    // Sum-zero basis b_i = e_i - e_{d-1}; a sum-zero vector has coordinates v[0..d-1].
    let image = |i: usize| -> Vec<u64> {
        let mut v = vec![0u64; d];
        v[g.image(i)] = (v[g.image(i)] + 1) % p;
        v[g.image(d - 1)] = (v[g.image(d - 1)] + p - 1) % p;
        v
    };
    if d as u64 % p != 0 {
        let n = d - 1;
        let mut m = Matrix::zero(p, n, n);
        for i in 0..n {
            let v = image(i);
            for j in 0..n {
                m.set(i, j, v[j]);
            }
        }
        m
    } else {
        // The all-ones vector is b_0 + ... + b_{d-2}; drop b_{d-2} in the quotient.
        let n = d - 2;
        let mut m = Matrix::zero(p, n, n);
        for i in 0..n {
            let v = image(i);
            let last = v[d - 2];
            for j in 0..n {
                m.set(i, j, (v[j] + p - last) % p);
            }
        }
        m
    }
}

pub fn perm_module(group: &PermutationGroup, p: u64) -> FpModuleAction {
    let gens = group.generators().iter().map(|g| permutation_matrix(g, p)).collect();
    FpModuleAction { p, n: group.degree(), generators: gens, group_order: group.order_u64() }
}

pub fn deleted_perm_module(group: &PermutationGroup, p: u64) -> FpModuleAction {
    let gens: Vec<MatFp> = group.generators().iter().map(|g| deleted_permutation_matrix(g, p)).collect();
    let n = if group.degree() as u64 % p == 0 { group.degree() - 2 } else { group.degree() - 1 };
    FpModuleAction { p, n, generators: gens, group_order: group.order_u64() }
}

/// Inverse-transpose action.
pub fn dual(a: &FpModuleAction) -> FpModuleAction {
    let gens = a.generators.iter().map(|g| g.inverse().expect("generators are invertible").transpose()).collect();
    FpModuleAction { generators: gens, ..a.clone() }
}

pub fn kronecker(a: &MatFp, b: &MatFp) -> MatFp {
    let p = a.p;
    let (n1, n2) = (a.rows, b.rows);
    let mut m = Matrix::zero(p, n1 * n2, n1 * n2);
    for i in 0..n1 {
        for j in 0..n1 {
            let x = a.get(i, j);
            if x == 0 {
                continue;
            }
            for k in 0..n2 {
                for l in 0..n2 {
                    m.set(i * n2 + k, j * n2 + l, x * b.get(k, l) % p);
                }
            }
        }
    }
    m
}

/// Tensor product of two actions of the same abstract generators.
pub fn tensor(a: &FpModuleAction, b: &FpModuleAction) -> Result<FpModuleAction, ModError> {
    if a.p != b.p {
        return Err(ModError::PrimeMismatch(a.p, b.p));
    }
    if a.generators.len() != b.generators.len() {
        return Err(ModError::GeneratorMismatch(a.generators.len(), b.generators.len()));
    }
    let gens = a.generators.iter().zip(&b.generators).map(|(x, y)| kronecker(x, y)).collect();
    Ok(FpModuleAction { p: a.p, n: a.n * b.n, generators: gens, group_order: a.group_order.max(b.group_order) })
}

/// `dim ker(g - 1)`.
pub fn fixed_space_dim(g: &MatFp) -> usize {
    let mut d = g.clone();
    for i in 0..g.rows {
        let v = (d.get(i, i) + g.p - 1) % g.p;
        d.set(i, i, v);
    }
    let rank = if g.p == 2 { f2_rank(&d) } else { d.rank() };
    g.rows - rank
}

/// `(1/o) sum_i beta(g^i)` for Brauer character values on `<g>` (index `i` is `g^i`).
pub fn fixed_dim_from_brauer(values: &[Cyclotomic]) -> Result<u64, ModError> {
    let sum = values.iter().fold(Cyclotomic::zero(), |a, v| a.add(v));
    let avg = sum.scale(&crate::chartab::rational(1, values.len() as i64));
    match avg.as_i64() {
        Some(v) if v >= 0 => Ok(v as u64),
        _ => Err(ModError::NonIntegral(avg.to_string())),
    }
}
