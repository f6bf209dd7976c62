//! Constructions of the small and medium groups as permutation groups.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::ff::Matrix;
use crate::perm::{Permutation, PermutationGroup};

fn perm(images: Vec<usize>) -> Permutation {
    Permutation::from_images(images.into_iter().map(|x| x as u32).collect()).expect("recipe maps are bijections")
}

pub(super) fn cycles(degree: usize, cs: &[&[usize]]) -> Permutation {
    Permutation::from_cycles(degree, &cs.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).expect("valid cycles")
}

pub(super) fn group(degree: usize, gens: Vec<Permutation>) -> PermutationGroup {
    PermutationGroup::new(degree, gens).expect("generators share the degree")
}

/// Regular representation of `Q8 = {+-1, +-i, +-j, +-k}`.
pub(super) fn q8() -> PermutationGroup {
    // Element (s, u) = s * u with s in {0: +, 1: -} and u in {1, i, j, k}; index 4s + u.
    let table = [[(0, 0), (0, 1), (0, 2), (0, 3)], [(0, 1), (1, 0), (0, 3), (1, 2)], [(0, 2), (1, 3), (1, 0), (0, 1)], [(0, 3), (0, 2), (1, 1), (1, 0)]];
    let right = |g: usize| {
        perm((0..8)
            .map(|x| {
                let (s, t) = table[x % 4][g];
                ((x / 4 + s) % 2) * 4 + t
            })
            .collect())
    };
    group(8, vec![right(1), right(2)])
}

/// Multiplication table of `F_8 = F_2[a]/(a^3 + a + 1)` on 3-bit encodings.
fn f8_mul(x: usize, y: usize) -> usize {
    let mut r = 0;
    for i in 0..3 {
        if y >> i & 1 == 1 {
            r ^= x << i;
        }
    }
    for i in (3..5).rev() {
        if r >> i & 1 == 1 {
            r ^= 0b1011 << (i - 3);
        }
    }
    r
}

fn f8_inv(x: usize) -> usize {
    (1..8).find(|&y| f8_mul(x, y) == 1).expect("nonzero")
}

/// `x -> a x^s + b` on `F_8`.
pub(super) fn agammal_1_8() -> PermutationGroup {
    let alpha = 0b010;
    group(8, vec![perm((0..8).map(|x| x ^ 1).collect()), perm((0..8).map(|x| f8_mul(alpha, x)).collect()), perm((0..8).map(|x| f8_mul(x, x)).collect())])
}

/// Semilinear fractional maps on the projective line of `F_8`; point 8 is infinity.
pub(super) fn pgammal_2_8() -> PermutationGroup {
    const INF: usize = 8;
    let on = |f: &dyn Fn(usize) -> usize| perm((0..9).map(|x| if x == INF { INF } else { f(x) }).collect());
    let shift = on(&|x| x ^ 1);
    let scale = on(&|x| f8_mul(0b010, x));
    let frob = on(&|x| f8_mul(x, x));
    let inv = perm((0..9).map(|x| if x == 0 { INF } else if x == INF { 0 } else { f8_inv(x) }).collect());
    group(9, vec![shift, scale, frob, inv])
}

/// `PSL(2,7)` on the projective line of `F_7`; point 7 is infinity.
pub(super) fn psl_2_7() -> PermutationGroup {
    const INF: usize = 7;
    let shift = perm((0..8).map(|x| if x == INF { INF } else { (x + 1) % 7 }).collect());
    let square = perm((0..8).map(|x| if x == INF { INF } else { 2 * x % 7 }).collect());
    // x -> -1/x.
    let inv = perm((0..8).map(|x| if x == 0 { INF } else if x == INF { 0 } else { (1..7).find(|&y| x * y % 7 == 6).unwrap() }).collect());
    group(8, vec![shift, square, inv])
}

/// `x -> x + 1` and `x -> 2x` on `F_7`.
pub(super) fn c7_c3() -> PermutationGroup {
    group(7, vec![perm((0..7).map(|x| (x + 1) % 7).collect()), perm((0..7).map(|x| 2 * x % 7).collect())])
}

/// 2x2 matrices over `F_p` as `[a, b, c, d]` for rows `(a b), (c d)`.
pub type Mat2 = [u64; 4];

fn mul2(x: &Mat2, y: &Mat2, p: u64) -> Mat2 {
    [
        (x[0] * y[0] + x[1] * y[2]) % p,
        (x[0] * y[1] + x[1] * y[3]) % p,
        (x[2] * y[0] + x[3] * y[2]) % p,
        (x[2] * y[1] + x[3] * y[3]) % p,
    ]
}

fn det2(x: &Mat2, p: u64) -> u64 {
    (x[0] * x[3] + p * p - x[1] * x[2] % p) % p
}

fn inv2(x: &Mat2, p: u64) -> Mat2 {
    let d = crate::ff::inv_mod(det2(x, p), p);
    [x[3] * d % p, (p - x[1]) * d % p, (p - x[2]) * d % p, x[0] * d % p]
}

fn code(x: &Mat2, p: u64) -> u64 {
    x.iter().fold(0, |acc, &v| acc * p + v)
}

fn closure2(gens: &[Mat2], p: u64, cap: usize) -> Option<Vec<Mat2>> {
    let id = [1, 0, 0, 1];
    let mut seen: BTreeSet<u64> = BTreeSet::from([code(&id, p)]);
    let mut elems = vec![id];
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let h = mul2(&elems[i], g, p);
            if seen.insert(code(&h, p)) {
                elems.push(h);
                if elems.len() > cap {
                    return None;
                }
            }
        }
        i += 1;
    }
    Some(elems)
}

fn order2(x: &Mat2, p: u64) -> u64 {
    let id = [1, 0, 0, 1];
    let mut y = *x;
    let mut k = 1;
    while y != id {
        y = mul2(&y, x, p);
        k += 1;
    }
    k
}

/// Subgroups of `GL2(p)` (or `SL2(p)`) isomorphic to `SL2(3)`, one generator pair per
/// `GL2(p)`-conjugacy class, found by exhausting pairs of an element squaring to `-1` and
/// an element of order 3.
pub fn sl23_classes(p: u64, special: bool) -> Vec<[Mat2; 2]> {
    let all: Vec<Mat2> = (0..p.pow(4))
        .map(|c| [c / (p * p * p), c / (p * p) % p, c / p % p, c % p])
        .filter(|m| det2(m, p) != 0 && (!special || det2(m, p) == 1))
        .collect();
    let minus = [p - 1, 0, 0, p - 1];
    let fours: Vec<&Mat2> = all.iter().filter(|m| mul2(m, m, p) == minus).collect();
    let threes: Vec<&Mat2> = all.iter().filter(|m| order2(m, p) == 3).collect();
    let census = BTreeMap::from([(1, 1), (2, 1), (3, 8), (4, 6), (6, 8)]);
    let mut subgroups: BTreeMap<Vec<u64>, [Mat2; 2]> = BTreeMap::new();
    for a in &fours {
        for b in &threes {
            let Some(elems) = closure2(&[**a, **b], p, 24) else { continue };
            if elems.len() != 24 {
                continue;
            }
            let mut orders = BTreeMap::new();
            for e in &elems {
                *orders.entry(order2(e, p)).or_insert(0) += 1;
            }
            if orders != census {
                continue;
            }
            let mut key: Vec<u64> = elems.iter().map(|e| code(e, p)).collect();
            key.sort_unstable();
            subgroups.entry(key).or_insert([**a, **b]);
        }
    }
    // Conjugacy classes under GL2(p): conjugate each subgroup by generators and merge.
    let keys: Vec<Vec<u64>> = subgroups.keys().cloned().collect();
    let index: HashMap<&Vec<u64>, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let prim = crate::ff::primitive_root(p);
    let conjugators = [[prim, 0, 0, 1], [1, 1, 0, 1], [0, 1, 1, 0]];
    let mut parent: Vec<usize> = (0..keys.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for (i, key) in keys.iter().enumerate() {
        for t in &conjugators {
            let ti = inv2(t, p);
            let mut img: Vec<u64> = key
                .iter()
                .map(|&c| {
                    let m = [c / (p * p * p), c / (p * p) % p, c / p % p, c % p];
                    code(&mul2(&mul2(&ti, &m, p), t, p), p)
                })
                .collect();
            img.sort_unstable();
            let j = index[&img];
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            parent[ri.max(rj)] = ri.min(rj);
        }
    }
    let mut reps = Vec::new();
    for i in 0..keys.len() {
        if find(&mut parent, i) == i {
            reps.push(subgroups[&keys[i]]);
        }
    }
    // Classes inside SL2(p) first.
    reps.sort_by_key(|[a, b]| (det2(a, p) != 1 || det2(b, p) != 1) as u8);
    reps
}

/// `F_p^2 : H` on the `p^2` vectors (`x + p y`), for `H` given by matrices acting on rows.
pub fn affine_group(p: u64, linear: &[Mat2]) -> PermutationGroup {
    let n = (p * p) as usize;
    let point = |x: u64, y: u64| (x + p * y) as usize;
    let mut gens: Vec<Permutation> = linear
        .iter()
        .map(|m| perm((0..n as u64).map(|v| {
            let (x, y) = (v % p, v / p);
            point((x * m[0] + y * m[2]) % p, (x * m[1] + y * m[3]) % p)
        }).collect()))
        .collect();
    gens.push(perm((0..n as u64).map(|v| point((v % p + 1) % p, v / p)).collect()));
    group(n, gens)
}

pub fn mat2_to_matrix(m: &Mat2, p: u64) -> Matrix {
    Matrix::from_rows(p, &[vec![m[0], m[1]], vec![m[2], m[3]]])
}

/// Generators of `GL(4,2)`: a transvection and the 4-cycle permutation matrix.
pub fn gl42_matrices() -> Vec<Matrix> {
    let t = Matrix::from_rows(2, &[vec![1, 1, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]);
    let c = Matrix::from_rows(2, &[vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1], vec![1, 0, 0, 0]]);
    vec![t, c]
}

/// Action on the 15 nonzero vectors of `F_2^4` (vector with bits `b` is point `b - 1`).
pub fn gl42_points() -> PermutationGroup {
    let gens = gl42_matrices()
        .iter()
        .map(|m| {
            perm((1..16u64)
                .map(|b| {
                    let v: Vec<u64> = (0..4).map(|i| b >> i & 1).collect();
                    let w = m.vec_mul(&v);
                    (w.iter().enumerate().map(|(i, &x)| x << i).sum::<u64>() - 1) as usize
                })
                .collect())
        })
        .collect();
    group(15, gens)
}
