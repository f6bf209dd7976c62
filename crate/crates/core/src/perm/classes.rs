//! Conjugacy classes and power maps.

use std::collections::BTreeMap;

use super::{ElementTable, PermError, Permutation, PermutationGroup};
use crate::ff::{factorize, lcm};

/// Default cap on the group order for class computations.
pub const CLASS_BOUND: u64 = 500_000;

/// Class skeleton read by every character-theoretic formula.
///
/// `power_rows[k][l]` is the class of `g^l` for `g` in class `k` and `0 <= l < o(g)`, so any
/// power map is a lookup. Tables read from files carry no representatives, and `power_rows`
/// is empty when their power maps are incomplete.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassData {
    pub reps: Vec<Permutation>,
    pub sizes: Vec<u64>,
    pub element_orders: Vec<u64>,
    pub names: Vec<String>,
    pub group_order: u64,
    power_rows: Vec<Vec<usize>>,
}

impl ClassData {
    pub fn from_power_rows(
        reps: Vec<Permutation>,
        sizes: Vec<u64>,
        element_orders: Vec<u64>,
        names: Vec<String>,
        group_order: u64,
        power_rows: Vec<Vec<usize>>,
    ) -> Self {
        ClassData { reps, sizes, element_orders, names, group_order, power_rows }
    }

    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    pub fn exponent(&self) -> u64 {
        self.element_orders.iter().fold(1, |a, &o| lcm(a, o))
    }

    /// Index of the identity class (always 0 after sorting by element order).
    pub fn identity_class(&self) -> usize {
        self.element_orders.iter().position(|&o| o == 1).expect("identity class present")
    }

    /// False for file-loaded data whose power maps could not be completed.
    pub fn has_power_maps(&self) -> bool {
        self.power_rows.len() == self.sizes.len()
    }

    /// Class index of `rep_k^m`. Panics if power maps are unavailable.
    pub fn power_of(&self, k: usize, m: i64) -> usize {
        let o = self.element_orders[k] as i64;
        self.power_rows[k][m.rem_euclid(o) as usize]
    }

    /// The map `k -> class of rep_k^m`; `m` is reduced modulo each element order.
    pub fn power_class_map(&self, m: i64) -> Vec<usize> {
        (0..self.len()).map(|k| self.power_of(k, m)).collect()
    }

    pub fn inverse_map(&self) -> Vec<usize> {
        self.power_class_map(-1)
    }

    pub fn power_rows(&self) -> &[Vec<usize>] {
        &self.power_rows
    }

    /// Power maps for the primes dividing the group order.
    pub fn prime_power_maps(&self) -> BTreeMap<u64, Vec<usize>> {
        factorize(self.group_order)
            .into_iter()
            .map(|(p, _)| (p, self.power_class_map(p as i64)))
            .collect()
    }

    /// Number of elements of order exactly 2.
    pub fn involution_count(&self) -> u64 {
        self.sizes.iter().zip(&self.element_orders).filter(|(_, &o)| o == 2).map(|(s, _)| s).sum()
    }
}

/// Element-level class information kept alongside [`ClassData`].
#[derive(Clone, Debug)]
pub struct ElementClasses {
    pub elements: ElementTable,
    pub class_of: Vec<u32>,
}

pub fn conjugacy_data(group: &PermutationGroup) -> Result<ClassData, PermError> {
    Ok(classes_with_elements(group, CLASS_BOUND)?.0)
}

/// Classes by orbit refinement under conjugation by the generators.
pub fn classes_with_elements(
    group: &PermutationGroup,
    bound: u64,
) -> Result<(ClassData, ElementClasses), PermError> {
    let elements = group.elements(bound)?;
    let n = elements.len();
    let degree = group.degree();
    let gens: Vec<Permutation> = group.generators().to_vec();
    let gen_inv: Vec<Permutation> = gens.iter().map(|g| g.inverse()).collect();

    const UNSET: u32 = u32::MAX;
    let mut raw_class = vec![UNSET; n];
    let mut members: Vec<Vec<u32>> = Vec::new();
    let mut buf = vec![0u32; degree];
    for start in 0..n {
        if raw_class[start] != UNSET {
            continue;
        }
        let cid = members.len() as u32;
        raw_class[start] = cid;
        let mut orbit = vec![start as u32];
        let mut k = 0;
        while k < orbit.len() {
            let x = elements.get(orbit[k] as usize);
            for (g, gi) in gens.iter().zip(&gen_inv) {
                // g^-1 x g
                for i in 0..degree {
                    buf[i] = g.images()[x[gi.image(i)] as usize];
                }
                let idx = elements.index_of(&buf).expect("conjugate lies in the group");
                if raw_class[idx] == UNSET {
                    raw_class[idx] = cid;
                    orbit.push(idx as u32);
                }
            }
            k += 1;
        }
        members.push(orbit);
    }

    // Canonical order: (element order, size, minimal representative).
    let mut info: Vec<(u64, u64, usize, u32)> = members
        .iter()
        .enumerate()
        .map(|(cid, m)| {
            let min = *m.iter().min_by(|&&a, &&b| elements.get(a as usize).cmp(elements.get(b as usize))).unwrap();
            let order = elements.perm(min as usize).order();
            (order, m.len() as u64, min as usize, cid as u32)
        })
        .collect();
    info.sort_by(|a, b| (a.0, a.1, elements.get(a.2)).cmp(&(b.0, b.1, elements.get(b.2))));
    let mut relabel = vec![0u32; members.len()];
    for (new, entry) in info.iter().enumerate() {
        relabel[entry.3 as usize] = new as u32;
    }
    let class_of: Vec<u32> = raw_class.iter().map(|&c| relabel[c as usize]).collect();

    let reps: Vec<Permutation> = info.iter().map(|e| elements.perm(e.2)).collect();
    let sizes: Vec<u64> = info.iter().map(|e| e.1).collect();
    let orders: Vec<u64> = info.iter().map(|e| e.0).collect();
    let mut power_rows = Vec::with_capacity(reps.len());
    for (rep, &o) in reps.iter().zip(&orders) {
        let mut row = Vec::with_capacity(o as usize);
        let mut cur = Permutation::identity(degree);
        for _ in 0..o {
            let idx = elements.index_of_perm(&cur).unwrap();
            row.push(class_of[idx] as usize);
            cur = cur.mul(rep);
        }
        power_rows.push(row);
    }
    let names = class_names(&orders);
    let data = ClassData::from_power_rows(reps, sizes, orders, names, n as u64, power_rows);
    Ok((data, ElementClasses { elements, class_of }))
}

/// ATLAS-style names: element order followed by a letter per class of that order.
pub fn class_names(orders: &[u64]) -> Vec<String> {
    let mut seen: BTreeMap<u64, usize> = BTreeMap::new();
    orders
        .iter()
        .map(|&o| {
            let c = seen.entry(o).or_insert(0);
            let name = format!("{o}{}", letter_code(*c));
            *c += 1;
            name
        })
        .collect()
}

fn letter_code(mut i: usize) -> String {
    let mut s = Vec::new();
    loop {
        s.push((b'A' + (i % 26) as u8) as char);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    s.iter().rev().collect()
}

/// Number of elements whose order is a given prime, from class data.
pub fn elements_of_order(cd: &ClassData, order: u64) -> u64 {
    cd.sizes.iter().zip(&cd.element_orders).filter(|(_, &o)| o == order).map(|(s, _)| s).sum()
}
