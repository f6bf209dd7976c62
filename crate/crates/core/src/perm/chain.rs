//! Deterministic Schreier-Sims: base and strong generating set.

use num_bigint::BigUint;

use super::Permutation;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub point: usize,
    pub gens: Vec<Permutation>,
    /// Fundamental orbit in discovery order.
    pub orbit: Vec<usize>,
    /// `transversal[b]` maps `point` to `b`.
    pub transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        Level { point, gens: Vec::new(), orbit: Vec::new(), transversal: vec![None; degree] }
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.orbit.clear();
        self.transversal = vec![None; degree];
        self.transversal[self.point] = Some(Permutation::identity(degree));
        self.orbit.push(self.point);
        let mut k = 0;
        while k < self.orbit.len() {
            let b = self.orbit[k];
            let ub = self.transversal[b].clone().unwrap();
            for g in &self.gens {
                let c = g.image(b);
                if self.transversal[c].is_none() {
                    self.transversal[c] = Some(ub.mul(g));
                    self.orbit.push(c);
                }
            }
            k += 1;
        }
    }
}

/// Stabilizer chain `G = G_0 > G_1 > ... > G_k = 1` with transversals.
#[derive(Clone, Debug)]
pub struct StabChain {
    pub(crate) degree: usize,
    pub(crate) levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let gens: Vec<Permutation> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut chain = StabChain { degree, levels: Vec::new() };
        if gens.is_empty() {
            return chain;
        }
        // Initial base: extend until no generator fixes every base point.
        for g in &gens {
            if chain.levels.iter().all(|l| g.image(l.point) == l.point) {
                let pt = (0..degree).find(|&i| g.image(i) != i).unwrap();
                chain.levels.push(Level::new(pt, degree));
            }
        }
        let bases: Vec<usize> = chain.levels.iter().map(|l| l.point).collect();
        for i in 0..chain.levels.len() {
            let fixing: Vec<Permutation> = gens
                .iter()
                .filter(|g| bases[..i].iter().all(|&b| g.image(b) == b))
                .cloned()
                .collect();
            chain.levels[i].gens = fixing;
            chain.levels[i].rebuild_orbit(degree);
        }
        chain.complete();
        chain
    }

    /// Sift `g` through levels `from..`; returns the residue and the level where sifting
    /// stopped (`levels.len()` if it passed every level).
    pub(crate) fn strip(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let b = h.image(level.point);
            match &level.transversal[b] {
                None => return (h, l),
                Some(u) => h = h.mul(&u.inverse()),
            }
        }
        (h, self.levels.len())
    }

    fn complete(&mut self) {
        let degree = self.degree;
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            let mut jumped = false;
            'scan: for oi in 0..self.levels[iu].orbit.len() {
                let beta = self.levels[iu].orbit[oi];
                for si in 0..self.levels[iu].gens.len() {
                    let level = &self.levels[iu];
                    let s = &level.gens[si];
                    let ub = level.transversal[beta].as_ref().unwrap();
                    let gamma = s.image(beta);
                    let ubs = ub.mul(s);
                    let ug = level.transversal[gamma].as_ref().unwrap();
                    if &ubs == ug {
                        continue;
                    }
                    let schreier = ubs.mul(&ug.inverse());
                    let (h, mut j) = self.strip(&schreier, iu + 1);
                    let mut needs_add = j < self.levels.len();
                    if !needs_add && !h.is_identity() {
                        needs_add = true;
                        let pt = (0..degree).find(|&x| h.image(x) != x).unwrap();
                        self.levels.push(Level::new(pt, degree));
                        j = self.levels.len() - 1;
                    }
                    if needs_add {
                        for l in (iu + 1)..=j {
                            self.levels[l].gens.push(h.clone());
                            self.levels[l].rebuild_orbit(degree);
                        }
                        i = j as isize;
                        jumped = true;
                        break 'scan;
                    }
                }
            }
            if !jumped {
                i -= 1;
            }
        }
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, j) = self.strip(g, 0);
        j == self.levels.len() && h.is_identity()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Strong generators (union over all levels, deduplicated).
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Visit every group element exactly once, in a fixed order.
    pub fn for_each_element<F: FnMut(&Permutation)>(&self, mut f: F) {
        let id = Permutation::identity(self.degree);
        self.visit(self.levels.len(), &id, &mut f);
    }

    // Elements are t_{k-1} * ... * t_0 with t_l in the level-l transversal.
    fn visit<F: FnMut(&Permutation)>(&self, depth: usize, prefix: &Permutation, f: &mut F) {
        if depth == 0 {
            f(prefix);
            return;
        }
        let level = &self.levels[depth - 1];
        for &b in &level.orbit {
            let u = level.transversal[b].as_ref().unwrap();
            let next = prefix.mul(u);
            self.visit(depth - 1, &next, f);
        }
    }
}
