//! Brute-force oracles shared by the integration and acceptance tests. Nothing here calls
//! the library's algorithms beyond element enumeration and table construction.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, HashSet};

use num_complex::Complex64;
use repcheck::chartab::CharacterTable;
use repcheck::perm::PermutationGroup;

/// Elements as image vectors with a multiplication table (apply left factor first).
pub struct Brute {
    pub elems: Vec<Vec<u32>>,
    pub mul: Vec<usize>,
    pub inv: Vec<usize>,
    pub id: usize,
}

impl Brute {
    pub fn new(g: &PermutationGroup) -> Self {
        let table = g.elements(1 << 20).expect("small group");
        let elems: Vec<Vec<u32>> = (0..table.len()).map(|i| table.get(i).to_vec()).collect();
        let index: HashMap<&[u32], usize> = elems.iter().enumerate().map(|(i, e)| (e.as_slice(), i)).collect();
        let n = elems.len();
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let ab: Vec<u32> = elems[a].iter().map(|&i| elems[b][i as usize]).collect();
                mul[a * n + b] = index[ab.as_slice()];
            }
        }
        let id = (0..n).find(|&a| elems[a].iter().enumerate().all(|(i, &x)| i as u32 == x)).unwrap();
        let inv = (0..n).map(|a| (0..n).find(|&b| mul[a * n + b] == id).unwrap()).collect();
        Brute { elems, mul, inv, id }
    }

    pub fn n(&self) -> usize {
        self.elems.len()
    }

    pub fn m(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n() + b]
    }

    pub fn conj(&self, x: usize, y: usize) -> usize {
        self.m(self.m(self.inv[y], x), y)
    }

    pub fn order(&self, a: usize) -> u64 {
        let (mut x, mut k) = (a, 1);
        while x != self.id {
            x = self.m(x, a);
            k += 1;
        }
        k
    }

    pub fn index_of(&self, images: &[u32]) -> usize {
        self.elems.iter().position(|e| e == images).expect("element of the group")
    }

    /// Conjugacy class label of every element, given class representatives.
    pub fn classify(&self, reps: &[usize]) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n()];
        for (c, &r) in reps.iter().enumerate() {
            for y in 0..self.n() {
                label[self.conj(r, y)] = c;
            }
        }
        label
    }

    pub fn class_count(&self) -> usize {
        let mut seen = vec![false; self.n()];
        let mut count = 0;
        for x in 0..self.n() {
            if !seen[x] {
                count += 1;
                for y in 0..self.n() {
                    seen[self.conj(x, y)] = true;
                }
            }
        }
        count
    }
}

fn complex(v: &repcheck::cyclo::Cyclotomic) -> Complex64 {
    let (re, im) = v.to_complex();
    Complex64::new(re, im)
}

/// Checks that the table's rows give `k` orthogonal central idempotents
/// `e = chi(1)/|G| sum chi(g^-1) g` in the group algebra summing to 1, where `k` is the
/// brute-force class count, and that each has trace `chi(1)^2` on the regular module.
/// That pins the rows down as the irreducible characters.
pub fn regular_decomposition_oracle(g: &PermutationGroup, t: &CharacterTable) -> Result<(), String> {
    let b = Brute::new(g);
    let n = b.n();
    if t.rows.len() != b.class_count() {
        return Err(format!("{} rows, {} classes", t.rows.len(), b.class_count()));
    }
    let reps: Vec<usize> = t.classes.reps.iter().map(|r| b.index_of(r.images())).collect();
    let label = b.classify(&reps);
    if label.contains(&usize::MAX) {
        return Err("representatives miss a class".into());
    }
    let idem: Vec<Vec<Complex64>> = t
        .rows
        .iter()
        .map(|row| {
            let d = complex(&row[t.classes.identity_class()]).re;
            (0..n).map(|x| complex(&row[label[b.inv[x]]]) * (d / n as f64)).collect()
        })
        .collect();
    let product = |u: &[Complex64], v: &[Complex64]| {
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for x in 0..n {
            if u[x].norm() < 1e-12 {
                continue;
            }
            for y in 0..n {
                out[b.m(x, y)] += u[x] * v[y];
            }
        }
        out
    };
    let close = |u: &[Complex64], v: &[Complex64]| u.iter().zip(v).all(|(a, c)| (a - c).norm() < 1e-8);
    let zero = vec![Complex64::new(0.0, 0.0); n];
    let mut total = zero.clone();
    for (i, e) in idem.iter().enumerate() {
        for (j, f) in idem.iter().enumerate().skip(i) {
            let p = product(e, f);
            let expect = if i == j { e } else { &zero };
            if !close(&p, expect) {
                return Err(format!("rows {} and {} fail e_i e_j = delta e_i", i + 1, j + 1));
            }
        }
        let d = t.degree(i) as f64;
        if (e[b.id].re * n as f64 - d * d).abs() > 1e-8 {
            return Err(format!("row {} has regular trace {}, expected {}", i + 1, e[b.id].re * n as f64, d * d));
        }
        for (s, v) in total.iter_mut().zip(e) {
            *s += v;
        }
    }
    let mut one = zero;
    one[b.id] = Complex64::new(1.0, 0.0);
    if !close(&total, &one) {
        return Err("idempotents do not sum to 1".into());
    }
    Ok(())
}

pub type Bits = Vec<u64>;

fn bit(b: &Bits, i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

fn closure(b: &Brute, gens: &[usize]) -> Bits {
    let mut bits = vec![0u64; b.n().div_ceil(64)];
    let mut list = vec![b.id];
    bits[b.id / 64] |= 1 << (b.id % 64);
    let mut k = 0;
    while k < list.len() {
        for &g in gens {
            let y = b.m(list[k], g);
            if !bit(&bits, y) {
                bits[y / 64] |= 1 << (y % 64);
                list.push(y);
            }
        }
        k += 1;
    }
    bits
}

fn members(b: &Brute, s: &Bits) -> Vec<usize> {
    (0..b.n()).filter(|&i| bit(s, i)).collect()
}

/// One record per conjugacy class of subgroups: `(order, class size, |H/H'|)`, sorted.
/// Subgroups are found by adjoining every element to every subgroup found so far.
pub fn lattice_oracle(g: &PermutationGroup) -> Vec<(u64, u64, u64)> {
    let b = Brute::new(g);
    let trivial = closure(&b, &[]);
    let mut all: HashSet<Bits> = HashSet::from([trivial.clone()]);
    let mut queue = vec![trivial];
    while let Some(h) = queue.pop() {
        let hm = members(&b, &h);
        for x in 0..b.n() {
            if bit(&h, x) {
                continue;
            }
            let mut gens = hm.clone();
            gens.push(x);
            let k = closure(&b, &gens);
            if all.insert(k.clone()) {
                queue.push(k);
            }
        }
    }
    let mut seen: HashSet<Bits> = HashSet::new();
    let mut out = Vec::new();
    for h in &all {
        if seen.contains(h) {
            continue;
        }
        let hm = members(&b, h);
        let mut class: HashSet<Bits> = HashSet::new();
        for y in 0..b.n() {
            let conj: Vec<usize> = hm.iter().map(|&x| b.conj(x, y)).collect();
            class.insert(closure(&b, &conj));
        }
        let commutators: Vec<usize> = hm.iter().flat_map(|&x| hm.iter().map(move |&y| (x, y))).map(|(x, y)| b.m(b.m(b.inv[x], b.inv[y]), b.m(x, y))).collect();
        let derived = closure(&b, &commutators);
        let order = hm.len() as u64;
        out.push((order, class.len() as u64, order / members(&b, &derived).len() as u64));
        seen.extend(class);
    }
    out.sort_unstable();
    out
}

/// Sum of distinct pool entries hitting `target`, by enumerating every subset.
pub fn subset_sum_brute(target: u64, pool: &[u64]) -> bool {
    (0u64..1 << pool.len()).any(|mask| (0..pool.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pool[i]).sum::<u64>() == target)
}

/// Number of cyclic subgroups of prime order, from an element-order census.
pub fn prime_cyclic_census(g: &PermutationGroup) -> u64 {
    let table = g.elements(1 << 22).expect("enumerable");
    let mut by_order: BTreeMap<u64, u64> = BTreeMap::new();
    for i in 0..table.len() {
        *by_order.entry(table.perm(i).order()).or_insert(0) += 1;
    }
    by_order.iter().filter(|(&o, _)| o > 1 && (2..o).all(|d| o % d != 0)).map(|(&o, &c)| c / (o - 1)).sum()
}
