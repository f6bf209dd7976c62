//! Explicit element lists for groups small enough to enumerate.

use std::hash::Hasher;

use rustc_hash::FxHasher;

use super::{Permutation, StabChain};

const EMPTY: u32 = u32::MAX;

/// All elements of a group, flat-packed, with an open-addressing index.
#[derive(Clone, Debug)]
pub struct ElementTable {
    degree: usize,
    data: Vec<u32>,
    slots: Vec<u32>,
    mask: usize,
}

fn hash_slice(s: &[u32]) -> usize {
    let mut h = FxHasher::default();
    for &x in s {
        h.write_u32(x);
    }
    h.finish() as usize
}

impl ElementTable {
    pub fn from_chain(chain: &StabChain) -> Self {
        let order: usize = chain.orbit_lengths().iter().product();
        let degree = chain.degree;
        let mut table = ElementTable::with_capacity(degree, order);
        chain.for_each_element(|g| {
            table.insert(g.images());
        });
        table
    }

    fn with_capacity(degree: usize, n: usize) -> Self {
        let cap = (2 * n.max(1)).next_power_of_two();
        ElementTable {
            degree,
            data: Vec::with_capacity(n * degree),
            slots: vec![EMPTY; cap],
            mask: cap - 1,
        }
    }

    fn insert(&mut self, images: &[u32]) -> usize {
        let mut s = hash_slice(images) & self.mask;
        loop {
            let v = self.slots[s];
            if v == EMPTY {
                let idx = self.len();
                self.slots[s] = idx as u32;
                self.data.extend_from_slice(images);
                return idx;
            }
            if self.get(v as usize) == images {
                return v as usize;
            }
            s = (s + 1) & self.mask;
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        if self.degree == 0 {
            // Degree-0 groups cannot occur; degree >= 1 everywhere.
            return 0;
        }
        self.data.len() / self.degree
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> &[u32] {
        &self.data[i * self.degree..(i + 1) * self.degree]
    }

    pub fn perm(&self, i: usize) -> Permutation {
        Permutation::from_images_unchecked(self.get(i).into())
    }

    pub fn index_of(&self, images: &[u32]) -> Option<usize> {
        if images.len() != self.degree {
            return None;
        }
        let mut s = hash_slice(images) & self.mask;
        loop {
            let v = self.slots[s];
            if v == EMPTY {
                return None;
            }
            if self.get(v as usize) == images {
                return Some(v as usize);
            }
            s = (s + 1) & self.mask;
        }
    }

    pub fn index_of_perm(&self, g: &Permutation) -> Option<usize> {
        self.index_of(g.images())
    }

    /// Index of the product `a * b` (apply `a` first).
    pub fn product_index(&self, a: usize, b: usize, scratch: &mut Vec<u32>) -> usize {
        let ga = self.get(a);
        let gb = self.get(b);
        scratch.clear();
        scratch.extend(ga.iter().map(|&i| gb[i as usize]));
        self.index_of(scratch).expect("product of group elements lies in the group")
    }

    pub fn identity_index(&self) -> usize {
        let id: Vec<u32> = (0..self.degree as u32).collect();
        self.index_of(&id).expect("identity is enumerated")
    }

    /// Full multiplication table `mul[a * n + b] = index(a * b)`; only sensible for small groups.
    pub fn multiplication_table(&self) -> Vec<u32> {
        let n = self.len();
        let mut out = vec![0u32; n * n];
        let mut scratch = Vec::with_capacity(self.degree);
        for a in 0..n {
            for b in 0..n {
                out[a * n + b] = self.product_index(a, b, &mut scratch) as u32;
            }
        }
        out
    }

    pub fn inverse_table(&self) -> Vec<u32> {
        let n = self.len();
        let mut out = vec![0u32; n];
        let mut inv = vec![0u32; self.degree];
        for a in 0..n {
            for (i, &j) in self.get(a).iter().enumerate() {
                inv[j as usize] = i as u32;
            }
            out[a] = self.index_of(&inv).unwrap() as u32;
        }
        out
    }
}
