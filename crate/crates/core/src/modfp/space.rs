use crate::ff::{inv_mod, Matrix};

/// Subspace of `F_p^n` kept as a reduced echelon basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub p: u64,
    pub n: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(p: u64, n: usize) -> Self {
        Subspace { p, n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` against the basis in place; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &mut [u64]) {
        let p = self.p;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c == 0 {
                continue;
            }
            let f = p - c;
            for (x, &r) in v.iter_mut().zip(row) {
                *x = (*x + f * r) % p;
            }
        }
    }

    /// Add `v` to the span; returns false if it was already there.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        let p = self.p;
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(v[pc], p);
        for x in v.iter_mut() {
            *x = *x * inv % p;
        }
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                let f = p - c;
                for (x, &r) in row.iter_mut().zip(&v) {
                    *x = (*x + f * r) % p;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < pc);
        self.rows.insert(at, v);
        self.pivots.insert(at, pc);
        true
    }

    /// Coordinates of a vector of the span in the echelon basis.
    pub fn coords(&self, v: &[u64]) -> Vec<u64> {
        self.pivots.iter().map(|&pc| v[pc]).collect()
    }

    pub fn to_matrix(&self) -> Matrix {
        let mut m = Matrix::zero(self.p, self.rows.len(), self.n);
        for (i, r) in self.rows.iter().enumerate() {
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    /// Matrix of `g` restricted to this (invariant) subspace.
    pub fn restrict(&self, g: &Matrix) -> Matrix {
        let k = self.dim();
        let mut m = Matrix::zero(self.p, k, k);
        for (i, r) in self.rows.iter().enumerate() {
            for (j, x) in self.coords(&g.vec_mul(r)).into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    /// Matrix of `g` on the quotient by this (invariant) subspace, in the basis of unit
    /// vectors at non-pivot positions.
    pub fn quotient(&self, g: &Matrix) -> Matrix {
        let free: Vec<usize> = (0..self.n).filter(|c| !self.pivots.contains(c)).collect();
        let mut m = Matrix::zero(self.p, free.len(), free.len());
        for (i, &f) in free.iter().enumerate() {
            let mut v = g.row(f).to_vec();
            self.reduce(&mut v);
            for (j, &fj) in free.iter().enumerate() {
                m.set(i, j, v[fj]);
            }
        }
        m
    }
}

/// Smallest subspace containing `seeds` and closed under `v -> v g` for every generator.
pub fn spin(seeds: &[Vec<u64>], gens: &[Matrix], p: u64, n: usize) -> Subspace {
    let mut s = Subspace::new(p, n);
    let mut queue: Vec<Vec<u64>> = Vec::new();
    for v in seeds {
        if s.insert(v.clone()) {
            queue.push(v.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for g in gens {
            let w = g.vec_mul(&v);
            if s.insert(w.clone()) {
                if s.dim() == n {
                    return s;
                }
                queue.push(w);
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_of_fixed_vector() {
        // 3-cycle on F_5^3 fixes the all-ones line and spins e_1 to everything.
        let g = Matrix::from_rows(5, &[vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]);
        assert_eq!(spin(&[vec![1, 1, 1]], std::slice::from_ref(&g), 5, 3).dim(), 1);
        assert_eq!(spin(&[vec![1, 0, 0]], std::slice::from_ref(&g), 5, 3).dim(), 3);
        let s = spin(&[vec![1, 4, 0]], std::slice::from_ref(&g), 5, 3);
        assert_eq!(s.dim(), 2);
        assert_eq!(s.restrict(&g).rows, 2);
        assert_eq!(s.quotient(&g).get(0, 0), 1);
    }
}
