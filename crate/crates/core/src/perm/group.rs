use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::{ElementTable, PermError, Permutation, StabChain};

/// A permutation group given by generators; the stabilizer chain is built on first use.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl PermutationGroup {
    /// Close a generating set. An empty list gives the trivial group of the given degree.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::InconsistentDegree { expected: degree, found: g.degree() });
            }
        }
        Ok(PermutationGroup { degree, generators, chain: OnceLock::new() })
    }

    /// Degree taken from the first generator.
    pub fn from_generators(generators: Vec<Permutation>) -> Result<Self, PermError> {
        let degree = generators.first().map_or(1, |g| g.degree());
        Self::new(degree, generators)
    }

    pub fn trivial(degree: usize) -> Self {
        PermutationGroup { degree, generators: Vec::new(), chain: OnceLock::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| StabChain::new(self.degree, &self.generators))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// Order as `u64`; every group this crate enumerates fits.
    pub fn order_u64(&self) -> u64 {
        self.order().to_u64().expect("group order exceeds u64")
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(|g| g.is_identity())
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g[i].mul(&g[j]) == g[j].mul(&g[i])))
    }

    /// Enumerate all elements; refuses groups larger than `bound`.
    pub fn elements(&self, bound: u64) -> Result<ElementTable, PermError> {
        let order = self.order();
        if order > BigUint::from(bound) {
            return Err(PermError::OrderBound { order: order.to_string(), bound });
        }
        Ok(ElementTable::from_chain(self.chain()))
    }

    pub fn subgroup(&self, generators: Vec<Permutation>) -> Result<Self, PermError> {
        for g in &generators {
            if g.degree() != self.degree || !self.contains(g) {
                return Err(PermError::NotSubgroup);
            }
        }
        Self::new(self.degree, generators)
    }

    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// Smallest normal subgroup of `self` containing the given elements.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> PermutationGroup {
        let mut gens: Vec<Permutation> = seeds.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut current = PermutationGroup::new(self.degree, gens.clone()).unwrap();
        loop {
            let mut added = false;
            let snapshot = gens.clone();
            for n in &snapshot {
                for g in &self.generators {
                    let c = n.conjugate_by(g);
                    if !current.contains(&c) {
                        gens.push(c);
                        current = PermutationGroup::new(self.degree, gens.clone()).unwrap();
                        added = true;
                    }
                }
            }
            if !added {
                return current;
            }
        }
    }

    pub fn derived_subgroup(&self) -> PermutationGroup {
        let g = &self.generators;
        let mut comms = Vec::new();
        for i in 0..g.len() {
            for j in (i + 1)..g.len() {
                let c = g[i].inverse().mul(&g[j].inverse()).mul(&g[i]).mul(&g[j]);
                if !c.is_identity() && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    pub fn same_group(&self, other: &PermutationGroup) -> bool {
        self.degree == other.degree && self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// Orbit of a 0-based point.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut orbit = vec![point];
        seen[point] = true;
        let mut k = 0;
        while k < orbit.len() {
            for g in &self.generators {
                let c = g.image(orbit[k]);
                if !seen[c] {
                    seen[c] = true;
                    orbit.push(c);
                }
            }
            k += 1;
        }
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }
}
