//! Subgroups up to conjugacy by the cyclic extension method.

use std::collections::{HashMap, HashSet};

use super::{PermError, Permutation, PermutationGroup};

/// Largest group order accepted by [`subgroup_lattice`].
pub const LATTICE_BOUND: u64 = 2000;

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupNode {
    pub generators: Vec<Permutation>,
    pub order: u64,
    /// `|T / T'|`.
    pub abelianization_order: u64,
    /// The normal core is trivial.
    pub core_trivial: bool,
    pub index: u64,
    /// Number of conjugates.
    pub class_size: u64,
    pub is_normal: bool,
}

type Bits = Vec<u64>;

/// Multiplication-table view of a small group, used by the lattice code.
pub(crate) struct SmallGroup {
    pub n: usize,
    pub mul: Vec<u32>,
    pub inv: Vec<u32>,
    pub id: u32,
    pub gens: Vec<u32>,
    pub perms: Vec<Permutation>,
}

impl SmallGroup {
    pub fn new(group: &PermutationGroup, bound: u64) -> Result<Self, PermError> {
        let elements = group.elements(bound)?;
        let n = elements.len();
        let mul = elements.multiplication_table();
        let inv = elements.inverse_table();
        let id = elements.identity_index() as u32;
        let gens = group
            .generators()
            .iter()
            .map(|g| elements.index_of_perm(g).unwrap() as u32)
            .collect();
        let perms = (0..n).map(|i| elements.perm(i)).collect();
        Ok(SmallGroup { n, mul, inv, id, gens, perms })
    }

    #[inline]
    pub fn m(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.n + b as usize]
    }

    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.m(self.m(self.inv[g as usize], x), g)
    }

    fn empty(&self) -> Bits {
        vec![0; self.n.div_ceil(64)]
    }

    /// Subgroup generated by `gens`.
    pub fn closure(&self, gens: &[u32]) -> Bits {
        let mut bits = self.empty();
        let mut list = vec![self.id];
        set(&mut bits, self.id);
        let mut k = 0;
        while k < list.len() {
            let x = list[k];
            for &s in gens {
                let y = self.m(x, s);
                if !get(&bits, y) {
                    set(&mut bits, y);
                    list.push(y);
                }
            }
            k += 1;
        }
        bits
    }

    pub fn members(&self, bits: &Bits) -> Vec<u32> {
        (0..self.n as u32).filter(|&i| get(bits, i)).collect()
    }

    fn conjugate_set(&self, bits: &Bits, g: u32) -> Bits {
        let mut out = self.empty();
        for x in self.members(bits) {
            set(&mut out, self.conj(x, g));
        }
        out
    }

    /// All conjugates of a subgroup.
    fn conjugates(&self, bits: &Bits) -> Vec<Bits> {
        let mut seen: HashSet<Bits> = HashSet::new();
        let mut list = vec![bits.clone()];
        seen.insert(bits.clone());
        let mut k = 0;
        while k < list.len() {
            for &g in &self.gens {
                let c = self.conjugate_set(&list[k], g);
                if seen.insert(c.clone()) {
                    list.push(c);
                }
            }
            k += 1;
        }
        list
    }

    /// Order of the derived subgroup of the subgroup generated by `gens`.
    pub fn derived_order(&self, gens: &[u32]) -> u64 {
        let mut dgens: Vec<u32> = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                let c = self.m(self.m(self.inv[a as usize], self.inv[b as usize]), self.m(a, b));
                if c != self.id && !dgens.contains(&c) {
                    dgens.push(c);
                }
            }
        }
        let mut d = self.closure(&dgens);
        loop {
            let mut grew = false;
            let snapshot = dgens.clone();
            for &x in &snapshot {
                for &t in gens {
                    let c = self.conj(x, t);
                    if !get(&d, c) {
                        dgens.push(c);
                        d = self.closure(&dgens);
                        grew = true;
                    }
                }
            }
            if !grew {
                return popcount(&d);
            }
        }
    }
}

#[inline]
fn get(bits: &Bits, i: u32) -> bool {
    bits[(i / 64) as usize] >> (i % 64) & 1 == 1
}

#[inline]
fn set(bits: &mut Bits, i: u32) {
    bits[(i / 64) as usize] |= 1 << (i % 64);
}

fn popcount(bits: &Bits) -> u64 {
    bits.iter().map(|w| w.count_ones() as u64).sum()
}

fn is_subset(a: &Bits, b: &Bits) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

pub fn subgroup_lattice(group: &PermutationGroup) -> Result<Vec<SubgroupNode>, PermError> {
    let order = group.order_u64();
    if order > LATTICE_BOUND {
        return Err(PermError::OrderBound { order: order.to_string(), bound: LATTICE_BOUND });
    }
    let sg = SmallGroup::new(group, LATTICE_BOUND)?;

    // Cyclic subgroups, each with one generator.
    let mut cyclic: Vec<(Bits, u32)> = Vec::new();
    let mut cyclic_seen: HashSet<Bits> = HashSet::new();
    for x in 0..sg.n as u32 {
        let b = sg.closure(&[x]);
        if cyclic_seen.insert(b.clone()) {
            cyclic.push((b, x));
        }
    }

    let mut all: HashSet<Bits> = HashSet::new();
    let mut reps: Vec<(Bits, Vec<u32>, Vec<Bits>)> = Vec::new();
    let trivial = sg.closure(&[]);
    let conj = sg.conjugates(&trivial);
    all.extend(conj.iter().cloned());
    reps.push((trivial, Vec::new(), conj));
    let mut k = 0;
    while k < reps.len() {
        let (h, hgens) = (reps[k].0.clone(), reps[k].1.clone());
        for (c, cg) in &cyclic {
            if is_subset(c, &h) {
                continue;
            }
            let mut gens = hgens.clone();
            gens.push(*cg);
            let j = sg.closure(&gens);
            if all.contains(&j) {
                continue;
            }
            let conj = sg.conjugates(&j);
            all.extend(conj.iter().cloned());
            reps.push((j, gens, conj));
        }
        k += 1;
    }

    let mut nodes: Vec<(SubgroupNode, Bits)> = reps
        .into_iter()
        .map(|(bits, gens, conj)| {
            let ord = popcount(&bits);
            let mut core = bits.clone();
            for c in &conj {
                for (a, b) in core.iter_mut().zip(c) {
                    *a &= b;
                }
            }
            let node = SubgroupNode {
                generators: gens.iter().map(|&g| sg.perms[g as usize].clone()).collect(),
                order: ord,
                abelianization_order: ord / sg.derived_order(&gens),
                core_trivial: popcount(&core) == 1,
                index: order / ord,
                class_size: conj.len() as u64,
                is_normal: conj.len() == 1,
            };
            (node, bits)
        })
        .collect();
    nodes.sort_by(|a, b| {
        (a.0.order, a.0.class_size, a.0.abelianization_order, &a.1).cmp(&(
            b.0.order,
            b.0.class_size,
            b.0.abelianization_order,
            &b.1,
        ))
    });
    Ok(nodes.into_iter().map(|(n, _)| n).collect())
}

/// Normal subgroups (from the lattice), as generator lists.
pub fn normal_subgroups(group: &PermutationGroup) -> Result<Vec<SubgroupNode>, PermError> {
    Ok(subgroup_lattice(group)?.into_iter().filter(|n| n.is_normal).collect())
}

/// Count of subgroup classes by order, handy for summaries.
pub fn class_counts_by_order(nodes: &[SubgroupNode]) -> HashMap<u64, usize> {
    let mut out = HashMap::new();
    for n in nodes {
        *out.entry(n.order).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c3_lattice() {
        let g = PermutationGroup::new(3, vec![Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap()]).unwrap();
        let l = subgroup_lattice(&g).unwrap();
        assert_eq!(l.iter().map(|n| n.order).collect::<Vec<_>>(), vec![1, 3]);
    }

    #[test]
    fn a4_lattice() {
        let g = PermutationGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[vec![1, 2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap(),
            ],
        )
        .unwrap();
        let l = subgroup_lattice(&g).unwrap();
        assert_eq!(l.iter().map(|n| n.order).collect::<Vec<_>>(), vec![1, 2, 3, 4, 12]);
        let c3 = &l[2];
        assert_eq!(c3.class_size, 4);
        assert!(c3.core_trivial);
        assert_eq!(c3.abelianization_order, 3);
        assert!(l[3].is_normal);
        assert_eq!(l[4].abelianization_order, 3);
    }
}
