use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::BoundError;
use crate::perm::{derived_and_solvability, subgroup_lattice, Permutation, PermutationGroup};

/// Default limit on the number of `k`-subsets enumerated.
pub const SUBSET_BOUND: u64 = 10_000_000;

/// `(N(H), W(H))`: indices of non-trivial proper core-free subgroups `L` with `|L/L'| = 3`,
/// and indices of proper subgroups `T` with `|T/T'| = 3` together with `|H|`.
pub fn nh_wh(h: &PermutationGroup) -> Result<(BTreeSet<u64>, BTreeSet<u64>), BoundError> {
    let order = h.order_u64();
    let mut n = BTreeSet::new();
    let mut w = BTreeSet::from([order]);
    for node in subgroup_lattice(h)? {
        if node.order == order || node.abelianization_order != 3 {
            continue;
        }
        w.insert(node.index);
        if node.order > 1 && node.core_trivial {
            n.insert(node.index);
        }
    }
    Ok((n, w))
}

/// Whether `target` is a sum of pairwise distinct elements of `pool`.
pub fn distinct_sum_feasible(target: u64, pool: &BTreeSet<u64>) -> bool {
    let mut reach: BTreeSet<u64> = BTreeSet::from([0]);
    for &x in pool {
        let next: Vec<u64> = reach.iter().map(|&s| s + x).filter(|&s| s <= target).collect();
        reach.extend(next);
        if reach.contains(&target) {
            return true;
        }
    }
    reach.contains(&target)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetOrbit {
    pub size: u64,
    /// Smallest subset of the orbit, 0-based points.
    pub representative: Vec<usize>,
    pub stabilizer_order: u64,
    pub stabilizer_abelianization: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetProfile {
    pub k: usize,
    pub orbits: Vec<SubsetOrbit>,
    pub distinct_sizes: bool,
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |c, i| c * (n - i) as u128 / (i + 1) as u128)
}

/// Combinatorial number system on bitmask subsets.
struct Ranker {
    table: Vec<Vec<u64>>,
}

impl Ranker {
    fn new(n: usize, k: usize) -> Self {
        let table = (0..=n).map(|m| (0..=k).map(|j| binomial(m, j) as u64).collect()).collect();
        Ranker { table }
    }

    fn rank(&self, mut mask: u64) -> u64 {
        let mut r = 0;
        let mut j = 1;
        while mask != 0 {
            let c = mask.trailing_zeros() as usize;
            r += self.table[c][j];
            mask &= mask - 1;
            j += 1;
        }
        r
    }

    fn unrank(&self, mut r: u64, k: usize) -> u64 {
        let mut mask = 0u64;
        for j in (1..=k).rev() {
            let mut c = j - 1;
            while c + 1 < self.table.len() && self.table[c + 1][j] <= r {
                c += 1;
            }
            r -= self.table[c][j];
            mask |= 1 << c;
        }
        mask
    }
}

fn image_mask(g: &Permutation, mut mask: u64) -> u64 {
    let mut out = 0;
    while mask != 0 {
        let c = mask.trailing_zeros() as usize;
        out |= 1 << g.image(c);
        mask &= mask - 1;
    }
    out
}

/// Orbits of `H` on `k`-subsets of its points, with set-stabilizer data; the stabilizer is
/// generated from random Schreier generators until its order reaches `|H| / orbit size`.
pub fn subset_orbit_profile(h: &PermutationGroup, k: usize, bound: u64, seed: u64) -> Result<SubsetProfile, BoundError> {
    let n = h.degree();
    if n > 64 {
        return Err(BoundError::Degree(n));
    }
    let count = binomial(n, k);
    if count > bound as u128 {
        return Err(BoundError::SubsetBound { count, bound });
    }
    let ranker = Ranker::new(n, k);
    let gens = h.generators();
    let order = h.order_u64();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Schreier vector: for each rank, the (parent rank, generator) that reached it.
    let mut parent: Vec<(u32, u32)> = vec![(u32::MAX, u32::MAX); count as usize];
    let mut orbits = Vec::new();
    for start in 0..count as u64 {
        if parent[start as usize].0 != u32::MAX {
            continue;
        }
        parent[start as usize] = (start as u32, u32::MAX);
        let mut members = vec![start];
        let mut i = 0;
        while i < members.len() {
            let mask = ranker.unrank(members[i], k);
            for (gi, g) in gens.iter().enumerate() {
                let r = ranker.rank(image_mask(g, mask));
                if parent[r as usize].0 == u32::MAX {
                    parent[r as usize] = (members[i] as u32, gi as u32);
                    members.push(r);
                }
            }
            i += 1;
        }
        let size = members.len() as u64;
        let transversal = |mut r: u64| -> Permutation {
            let mut word = Vec::new();
            while r != start {
                let (pr, gi) = parent[r as usize];
                word.push(gi as usize);
                r = pr as u64;
            }
            word.iter().rev().fold(Permutation::identity(n), |acc, &gi| acc.mul(&gens[gi]))
        };
        let target = order / size;
        let mut stab = PermutationGroup::trivial(n);
        while stab.order_u64() < target {
            let mut batch = stab.generators().to_vec();
            for _ in 0..4 {
                let x = members[rng.gen_range(0..members.len())];
                let gi = rng.gen_range(0..gens.len());
                let y = ranker.rank(image_mask(&gens[gi], ranker.unrank(x, k)));
                let s = transversal(x).mul(&gens[gi]).mul(&transversal(y).inverse());
                if !s.is_identity() && !stab.contains(&s) {
                    batch.push(s);
                }
            }
            stab = PermutationGroup::new(n, batch)?;
        }
        let rep_mask = ranker.unrank(start, k);
        orbits.push(SubsetOrbit {
            size,
            representative: (0..n).filter(|&i| rep_mask >> i & 1 == 1).collect(),
            stabilizer_order: target,
            stabilizer_abelianization: derived_and_solvability(&stab).abelianization_order,
        });
    }
    let sizes: BTreeSet<u64> = orbits.iter().map(|o| o.size).collect();
    Ok(SubsetProfile { k, distinct_sizes: sizes.len() == orbits.len(), orbits })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> PermutationGroup {
        let c: Vec<usize> = (1..=n).collect();
        PermutationGroup::new(n, vec![Permutation::from_cycles(n, &[c]).unwrap()]).unwrap()
    }

    #[test]
    fn subset_sums() {
        assert!(!distinct_sum_feasible(35, &BTreeSet::from([7, 21])));
        assert!(!distinct_sum_feasible(6, &BTreeSet::from([4, 12])));
        assert!(distinct_sum_feasible(28, &BTreeSet::from([7, 21])));
        assert!(distinct_sum_feasible(0, &BTreeSet::new()));
    }

    #[test]
    fn ranks_roundtrip() {
        let r = Ranker::new(9, 3);
        for i in 0..binomial(9, 3) as u64 {
            let m = r.unrank(i, 3);
            assert_eq!(m.count_ones(), 3);
            assert_eq!(r.rank(m), i);
        }
    }

    #[test]
    fn regular_cyclic_profiles() {
        let p = subset_orbit_profile(&cyclic(5), 2, SUBSET_BOUND, 0).unwrap();
        assert_eq!(p.orbits.iter().map(|o| o.size).collect::<Vec<_>>(), vec![5, 5]);
        assert!(!p.distinct_sizes);
        let p = subset_orbit_profile(&cyclic(3), 2, SUBSET_BOUND, 0).unwrap();
        assert_eq!(p.orbits.len(), 1);
        assert!(p.distinct_sizes);
        assert_eq!(p.orbits[0].stabilizer_order, 1);
    }

    #[test]
    fn a4_sets() {
        let g = |c: Vec<usize>| Permutation::from_cycles(4, &[c]).unwrap();
        let a4 = PermutationGroup::new(4, vec![g(vec![1, 2, 3]), g(vec![2, 3, 4])]).unwrap();
        let (n, w) = nh_wh(&a4).unwrap();
        assert_eq!(n, BTreeSet::from([4]));
        assert_eq!(w, BTreeSet::from([4, 12]));
        let p = subset_orbit_profile(&a4, 2, SUBSET_BOUND, 1).unwrap();
        assert_eq!(p.orbits.len(), 1);
        assert_eq!(p.orbits[0].stabilizer_order, 2);
        assert_eq!(p.orbits[0].stabilizer_abelianization, 2);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(subset_orbit_profile(&cyclic(30), 15, 1000, 0), Err(BoundError::SubsetBound { .. })));
    }
}
