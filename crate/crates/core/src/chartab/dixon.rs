//! Dixon–Schneider: common eigenvectors of the class matrices modulo a prime, lifted to
//! cyclotomic values through eigenvalue multiplicities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{CharacterTable, ChartabError};
use crate::cyclo::Cyclotomic;
use crate::ff::{inv_mod, is_prime, mod_pow, mul_mod, poly, primitive_root, Matrix};
use crate::perm::{classes_with_elements, ClassData, ElementClasses, PermutationGroup, CLASS_BOUND};

/// Least prime `q = 1 (mod exponent)` with `q > 2 sqrt(order)`.
pub fn modular_prime(exponent: u64, order: u64) -> u64 {
    let mut q = exponent + 1;
    loop {
        if (q as u128) * (q as u128) > 4 * order as u128 && is_prime(q) {
            return q;
        }
        q += exponent;
    }
}

pub fn dixon_schneider(group: &PermutationGroup, seed: u64) -> Result<CharacterTable, ChartabError> {
    let (cd, ec) = classes_with_elements(group, CLASS_BOUND)?;
    dixon_with_classes(cd, &ec, seed)
}

/// `counts[k][i][j] = #{ x in C_i : x^-1 g_k in C_j }`.
fn structure_constants(cd: &ClassData, ec: &ElementClasses) -> Vec<Vec<Vec<u64>>> {
    let k = cd.len();
    let n = ec.elements.len();
    let degree = ec.elements.degree();
    cd.reps
        .par_iter()
        .map(|g| {
            let gk = g.images();
            let mut counts = vec![vec![0u64; k]; k];
            let mut inv = vec![0u32; degree];
            let mut buf = vec![0u32; degree];
            for x in 0..n {
                let xi = ec.elements.get(x);
                for (p, &img) in xi.iter().enumerate() {
                    inv[img as usize] = p as u32;
                }
                for (b, &i) in buf.iter_mut().zip(&inv) {
                    *b = gk[i as usize];
                }
                let y = ec.elements.index_of(&buf).expect("product lies in the group");
                counts[ec.class_of[x] as usize][ec.class_of[y] as usize] += 1;
            }
            counts
        })
        .collect()
}

/// Echelon basis with its pivot columns.
struct Space {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Space {
    fn new(mut basis: Matrix) -> Self {
        let pivots = basis.rref();
        Space { basis, pivots }
    }

    fn dim(&self) -> usize {
        self.pivots.len()
    }
}

/// Split `w` into eigenspaces of the row action `v -> v m`.
fn split(w: &Space, m: &Matrix, q: u64) -> Vec<Space> {
    let d = w.dim();
    let mut r = Matrix::zero(q, d, d);
    for i in 0..d {
        let y = m.vec_mul(w.basis.row(i));
        for (s, &pc) in w.pivots.iter().enumerate() {
            r.set(i, s, y[pc]);
        }
    }
    let roots = poly::roots(&r.charpoly(), q);
    if roots.len() <= 1 {
        return vec![Space { basis: w.basis.clone(), pivots: w.pivots.clone() }];
    }
    roots
        .into_iter()
        .map(|lambda| {
            let coeffs = r.sub_scalar(lambda).left_nullspace();
            Space::new(coeffs.mul(&w.basis))
        })
        .collect()
}

pub fn dixon_with_classes(cd: ClassData, ec: &ElementClasses, seed: u64) -> Result<CharacterTable, ChartabError> {
    let k = cd.len();
    let order = cd.group_order;
    let exponent = cd.exponent();
    let q = modular_prime(exponent, order);
    let counts = structure_constants(&cd, ec);
    // b[i] acts on row vectors: (v b_i)_j = sum_k v_k c_{ijk}, whose common eigenvectors
    // are the central characters.
    let mats: Vec<Matrix> = (0..k)
        .map(|i| {
            let mut m = Matrix::zero(q, k, k);
            for (kk, ck) in counts.iter().enumerate() {
                for j in 0..k {
                    m.set(kk, j, ck[i][j] % q);
                }
            }
            m
        })
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut combo = Matrix::zero(q, k, k);
    for m in mats.iter().skip(1) {
        combo = combo.add(&m.scale(rng.gen_range(0..q)));
    }
    let mut spaces = vec![Space::new(Matrix::identity(q, k))];
    let schedule = std::iter::once(&combo).chain(mats.iter().skip(1));
    for m in schedule {
        if spaces.iter().all(|s| s.dim() == 1) {
            break;
        }
        spaces = spaces
            .into_iter()
            .flat_map(|s| if s.dim() == 1 { vec![s] } else { split(&s, m, q) })
            .collect();
    }
    if let Some(s) = spaces.iter().find(|s| s.dim() != 1) {
        return Err(ChartabError::SplitFailure { dim: s.dim() });
    }

    let id = cd.identity_class();
    let inv = cd.inverse_map();
    let g = primitive_root(q);
    let rows: Vec<Vec<Cyclotomic>> = spaces
        .par_iter()
        .map(|s| {
            let v = s.basis.row(0);
            if v[id] == 0 {
                return Err(ChartabError::LiftFailure { class: id, reason: "eigenvector vanishes at 1".into() });
            }
            let scale = inv_mod(v[id], q);
            let omega: Vec<u64> = v.iter().map(|&x| mul_mod(x, scale, q)).collect();
            // chi(1)^2 = |G| / sum_j omega_j omega_{j*} / |C_j|
            let mut sum = 0u64;
            for j in 0..k {
                let t = mul_mod(omega[j], omega[inv[j]], q);
                sum = (sum + mul_mod(t, inv_mod(cd.sizes[j] % q, q), q)) % q;
            }
            let dsq = mul_mod(order % q, inv_mod(sum, q), q);
            let degree = (1..).take_while(|d: &u64| d * d <= order).find(|d| mul_mod(*d, *d, q) == dsq).ok_or(
                ChartabError::LiftFailure { class: id, reason: "no degree matches".into() },
            )?;
            let chi: Vec<u64> = (0..k)
                .map(|j| mul_mod(mul_mod(degree, omega[j], q), inv_mod(cd.sizes[j] % q, q), q))
                .collect();
            (0..k).map(|j| lift(&cd, &chi, j, degree, q, g)).collect()
        })
        .collect::<Result<_, _>>()?;

    let mut table = CharacterTable::new("", cd, rows);
    table.compute_indicators()?;
    table.sort_rows();
    Ok(table)
}

/// Recover `chi(g_j)` from its residues on `<g_j>` via eigenvalue multiplicities.
fn lift(cd: &ClassData, chi: &[u64], j: usize, degree: u64, q: u64, g: u64) -> Result<Cyclotomic, ChartabError> {
    let o = cd.element_orders[j];
    let z = mod_pow(g, (q - 1) / o, q);
    let zinv = inv_mod(z, q);
    let oinv = inv_mod(o % q, q);
    let vals: Vec<u64> = (0..o).map(|l| chi[cd.power_of(j, l as i64)]).collect();
    let mut mult = vec![0i64; o as usize];
    let mut total = 0u64;
    for (s, m) in mult.iter_mut().enumerate() {
        let step = mod_pow(zinv, s as u64, q);
        let mut acc = 0u64;
        let mut w = 1u64;
        for &v in &vals {
            acc = (acc + mul_mod(v, w, q)) % q;
            w = mul_mod(w, step, q);
        }
        let ms = mul_mod(acc, oinv, q);
        if ms > degree {
            return Err(ChartabError::LiftFailure { class: j, reason: format!("multiplicity residue {ms}") });
        }
        total += ms;
        *m = ms as i64;
    }
    if total != degree {
        return Err(ChartabError::LiftFailure { class: j, reason: "multiplicities do not sum to the degree".into() });
    }
    Ok(Cyclotomic::from_dense_int(o, &mult))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn group(degree: usize, cycles: &[&[&[usize]]]) -> PermutationGroup {
        let gens = cycles
            .iter()
            .map(|c| Permutation::from_cycles(degree, &c.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap())
            .collect();
        PermutationGroup::new(degree, gens).unwrap()
    }

    #[test]
    fn prime_choice() {
        assert_eq!(modular_prime(6, 12), 7);
        assert_eq!(modular_prime(420, 20160), 421);
    }

    #[test]
    fn c3_table() {
        let t = dixon_schneider(&group(3, &[&[&[1, 2, 3]]]), 0).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 1]);
        t.validate().unwrap();
        assert_eq!(t.conductor, 3);
    }

    #[test]
    fn frobenius_group_21() {
        let t = dixon_schneider(&group(7, &[&[&[1, 2, 3, 4, 5, 6, 7]], &[&[1, 2, 4], &[3, 6, 5]]]), 0).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 1, 3, 3]);
        t.validate().unwrap();
    }

    #[test]
    fn s4_table() {
        let t = dixon_schneider(&group(4, &[&[&[1, 2, 3, 4]], &[&[1, 2]]]), 0).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 2, 3, 3]);
        assert_eq!(t.indicators.clone().unwrap(), vec![1, 1, 1, 1, 1]);
        t.validate().unwrap();
    }

    #[test]
    fn seeds_agree() {
        let g = group(4, &[&[&[1, 2, 3]], &[&[1, 2], &[3, 4]]]);
        let a = dixon_schneider(&g, 0).unwrap();
        let b = dixon_schneider(&g, 99).unwrap();
        assert_eq!(a.rows, b.rows);
    }
}
