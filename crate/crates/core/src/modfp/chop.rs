//! Composition factors by spinning kernels of random algebra elements, with Norton's
//! criterion as the irreducibility certificate.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::space::{spin, Subspace};
use super::{FpModuleAction, ModError};
use crate::ff::{poly, Matrix};

#[derive(Clone, Copy, Debug)]
pub struct ChopOptions {
    pub seed: u64,
    /// Random algebra elements tried per module before giving up.
    pub attempts: usize,
    pub max_dim: usize,
}

impl Default for ChopOptions {
    fn default() -> Self {
        ChopOptions { seed: 0, attempts: 64, max_dim: 64 }
    }
}

/// An algebra element `f(sum c_i w_i)`, replayable on any module for the same generators.
#[derive(Clone, Debug)]
struct Word {
    products: Vec<(usize, usize)>,
    coeffs: Vec<u64>,
    poly: poly::Poly,
}

impl Word {
    fn random<R: Rng>(gens: usize, p: u64, rng: &mut R) -> Self {
        let extra = if gens == 0 { 0 } else { 3 };
        let products = (0..extra).map(|i| (rng.gen_range(0..gens + i), rng.gen_range(0..gens + i))).collect();
        let coeffs = (0..gens + extra).map(|_| rng.gen_range(0..p)).collect();
        Word { products, coeffs, poly: Vec::new() }
    }

    fn sum(&self, gens: &[Matrix], p: u64, n: usize) -> Matrix {
        let mut words: Vec<Matrix> = gens.to_vec();
        for &(a, b) in &self.products {
            words.push(words[a].mul(&words[b]));
        }
        words.iter().zip(&self.coeffs).fold(Matrix::zero(p, n, n), |acc, (w, &c)| acc.add(&w.scale(c)))
    }

    fn evaluate(&self, gens: &[Matrix], p: u64, n: usize) -> Matrix {
        self.sum(gens, p, n).eval_poly(&self.poly)
    }
}

#[derive(Clone, Debug)]
pub struct CompositionFactor {
    pub module: FpModuleAction,
    pub multiplicity: usize,
    certificate: Word,
}

impl CompositionFactor {
    /// Whether `other` is isomorphic to this (irreducible) factor.
    pub fn is_isomorphic_to(&self, other: &FpModuleAction) -> bool {
        isomorphic(&self.module, &self.certificate, other)
    }
}

enum Outcome {
    Split(Subspace),
    Irreducible(Word),
}

pub fn chop(a: &FpModuleAction, seed: u64) -> Result<Vec<CompositionFactor>, ModError> {
    chop_with(a, ChopOptions { seed, ..ChopOptions::default() })
}

/// Composition factors with multiplicities, sorted by dimension.
pub fn chop_with(a: &FpModuleAction, opts: ChopOptions) -> Result<Vec<CompositionFactor>, ModError> {
    if a.n > opts.max_dim {
        return Err(ModError::ChopBound { n: a.n, bound: opts.max_dim });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut pending: Vec<FpModuleAction> = vec![a.clone()];
    let mut factors: Vec<CompositionFactor> = Vec::new();
    while let Some(m) = pending.pop() {
        if m.n == 0 {
            continue;
        }
        match examine(&m, &mut rng, opts.attempts)? {
            Outcome::Split(s) => {
                let sub = m.generators.iter().map(|g| s.restrict(g)).collect();
                let quo = m.generators.iter().map(|g| s.quotient(g)).collect();
                pending.push(FpModuleAction { n: m.n - s.dim(), generators: quo, ..m.clone() });
                pending.push(FpModuleAction { n: s.dim(), generators: sub, ..m });
            }
            Outcome::Irreducible(certificate) => {
                if let Some(f) = factors.iter_mut().find(|f| f.module.n == m.n && f.is_isomorphic_to(&m)) {
                    f.multiplicity += 1;
                } else {
                    factors.push(CompositionFactor { module: m, multiplicity: 1, certificate });
                }
            }
        }
    }
    factors.sort_by_key(|f| f.module.n);
    Ok(factors)
}

fn examine<R: Rng>(m: &FpModuleAction, rng: &mut R, attempts: usize) -> Result<Outcome, ModError> {
    let (p, n) = (m.p, m.n);
    let transposed: Vec<Matrix> = m.generators.iter().map(|g| g.transpose()).collect();
    for _ in 0..attempts {
        let mut word = Word::random(m.generators.len(), p, rng);
        let a = word.sum(&m.generators, p, n);
        for (f, _) in poly::factor(&a.charpoly(), p, rng) {
            let b = a.eval_poly(&f);
            let null = b.left_nullspace();
            if null.rows == 0 {
                continue;
            }
            let s = spin(&[null.row(0).to_vec()], &m.generators, p, n);
            if s.dim() < n {
                return Ok(Outcome::Split(s));
            }
            // Norton: if the kernel is exactly one copy of F_p[x]/(f), one vector per side
            // decides irreducibility.
            if null.rows != f.len() - 1 {
                continue;
            }
            let dual_null = b.right_nullspace();
            let t = spin(&[dual_null.row(0).to_vec()], &transposed, p, n);
            if t.dim() < n {
                let ann = t.to_matrix().transpose().left_nullspace();
                let mut u = Subspace::new(p, n);
                for i in 0..ann.rows {
                    u.insert(ann.row(i).to_vec());
                }
                return Ok(Outcome::Split(u));
            }
            word.poly = f;
            return Ok(Outcome::Irreducible(word));
        }
    }
    Err(ModError::ChopFailed { dim: n, attempts })
}

/// Standard-basis comparison: spin a kernel vector of the certificate word in `a`, replay
/// the same words from each candidate kernel vector in `b`, and test the resulting map.
fn isomorphic(a: &FpModuleAction, word: &Word, b: &FpModuleAction) -> bool {
    let (p, n) = (a.p, a.n);
    if b.p != p || b.n != n || b.generators.len() != a.generators.len() {
        return false;
    }
    let null_a = word.evaluate(&a.generators, p, n).left_nullspace();
    let null_b = word.evaluate(&b.generators, p, n).left_nullspace();
    if null_a.rows != null_b.rows || null_a.rows == 0 {
        return false;
    }
    let mut span = Subspace::new(p, n);
    let mut raw = vec![null_a.row(0).to_vec()];
    span.insert(raw[0].clone());
    let mut path = Vec::new();
    let mut i = 0;
    while i < raw.len() && raw.len() < n {
        for (gi, g) in a.generators.iter().enumerate() {
            let w = g.vec_mul(&raw[i]);
            if span.insert(w.clone()) {
                raw.push(w);
                path.push((i, gi));
            }
        }
        i += 1;
    }
    if raw.len() < n {
        return false;
    }
    let Some(inv_a) = Matrix::from_rows(p, &raw).inverse() else {
        return false;
    };
    let k = null_b.rows as u32;
    for code in 1..p.pow(k) {
        let digits: Vec<u64> = (0..k).map(|j| code / p.pow(j) % p).collect();
        if digits.iter().find(|&&d| d != 0) != Some(&1) {
            continue;
        }
        let mut v = vec![0u64; n];
        for (j, &d) in digits.iter().enumerate() {
            for (x, &y) in v.iter_mut().zip(null_b.row(j)) {
                *x = (*x + d * y) % p;
            }
        }
        let mut raw_b = vec![v];
        for &(src, gi) in &path {
            let w = b.generators[gi].vec_mul(&raw_b[src]);
            raw_b.push(w);
        }
        let phi = inv_a.mul(&Matrix::from_rows(p, &raw_b));
        if phi.rank() == n && a.generators.iter().zip(&b.generators).all(|(ga, gb)| ga.mul(&phi) == phi.mul(gb)) {
            return true;
        }
    }
    false
}
