//! Prime fields `F_p` (p < 2^32), dense polynomials and dense matrices over them.
//!
//! Shared by the modular character-table solver and the module machinery.

use rand::Rng;

/// Deterministic primality test by trial division. Inputs here stay below 2^40.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorisation as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Inverse of `a` modulo the prime `p`. Panics on zero.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "zero has no inverse mod {p}");
    mod_pow(a, p - 2, p)
}

/// Smallest primitive root modulo the prime `p`.
/// Inverse of `a` modulo any `m`, if it exists.
pub fn inv_mod_any(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(m as i128) as u64)
}

pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let fac = factorize(p - 1);
    (2..p)
        .find(|&g| fac.iter().all(|&(q, _)| mod_pow(g, (p - 1) / q, p) != 1))
        .expect("every prime has a primitive root")
}

/// Dense polynomials over `F_p`, coefficients from low to high degree,
/// normalised so the leading coefficient is nonzero (zero is the empty vector).
pub mod poly {
    use super::*;

    pub type Poly = Vec<u64>;

    pub fn trim(mut f: Poly) -> Poly {
        while f.last() == Some(&0) {
            f.pop();
        }
        f
    }

    pub fn degree(f: &[u64]) -> Option<usize> {
        if f.is_empty() {
            None
        } else {
            Some(f.len() - 1)
        }
    }

    pub fn x() -> Poly {
        vec![0, 1]
    }

    pub fn one() -> Poly {
        vec![1]
    }

    pub fn add(f: &[u64], g: &[u64], p: u64) -> Poly {
        let n = f.len().max(g.len());
        let mut out = vec![0; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = f.get(i).copied().unwrap_or(0);
            let b = g.get(i).copied().unwrap_or(0);
            *o = (a + b) % p;
        }
        trim(out)
    }

    pub fn sub(f: &[u64], g: &[u64], p: u64) -> Poly {
        let n = f.len().max(g.len());
        let mut out = vec![0; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = f.get(i).copied().unwrap_or(0);
            let b = g.get(i).copied().unwrap_or(0);
            *o = (a + p - b) % p;
        }
        trim(out)
    }

    pub fn mul(f: &[u64], g: &[u64], p: u64) -> Poly {
        if f.is_empty() || g.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; f.len() + g.len() - 1];
        for (i, &a) in f.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in g.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        trim(out)
    }

    /// Quotient and remainder. Panics if `g` is zero.
    pub fn divrem(f: &[u64], g: &[u64], p: u64) -> (Poly, Poly) {
        let dg = degree(g).expect("division by the zero polynomial");
        let mut r: Poly = f.to_vec();
        if r.len() <= dg {
            return (Vec::new(), trim(r));
        }
        let lead_inv = inv_mod(g[dg], p);
        let mut q = vec![0u64; r.len() - dg];
        for i in (dg..r.len()).rev() {
            let c = mul_mod(r[i], lead_inv, p);
            if c == 0 {
                continue;
            }
            q[i - dg] = c;
            for (j, &b) in g.iter().enumerate() {
                let idx = i - dg + j;
                r[idx] = (r[idx] + p - mul_mod(c, b, p)) % p;
            }
        }
        r.truncate(dg);
        (trim(q), trim(r))
    }

    pub fn rem(f: &[u64], g: &[u64], p: u64) -> Poly {
        divrem(f, g, p).1
    }

    pub fn monic(f: &[u64], p: u64) -> Poly {
        match f.last() {
            None => Vec::new(),
            Some(&l) => {
                let li = inv_mod(l, p);
                f.iter().map(|&c| mul_mod(c, li, p)).collect()
            }
        }
    }

    pub fn gcd(f: &[u64], g: &[u64], p: u64) -> Poly {
        let mut a = f.to_vec();
        let mut b = g.to_vec();
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        monic(&a, p)
    }

    pub fn derivative(f: &[u64], p: u64) -> Poly {
        trim(
            f.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
                .collect(),
        )
    }

    pub fn powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Poly {
        let mut result = rem(&one(), m, p);
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                result = rem(&mul(&result, &b, p), m, p);
            }
            b = rem(&mul(&b, &b, p), m, p);
            e >>= 1;
        }
        result
    }

    pub fn eval(f: &[u64], x: u64, p: u64) -> u64 {
        f.iter().rev().fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p)
    }

    /// Roots in `F_p`, each listed once, in increasing order.
    pub fn roots(f: &[u64], p: u64) -> Vec<u64> {
        if f.len() <= 1 {
            return Vec::new();
        }
        // Split off the part made of linear factors: gcd(f, x^p - x).
        let f = monic(f, p);
        let xp = powmod(&x(), p, &f, p);
        let lin = gcd(&f, &sub(&xp, &x(), p), p);
        let mut out = Vec::new();
        split_linear(&lin, p, 1, &mut out);
        out.sort_unstable();
        out
    }

    fn split_linear(f: &[u64], p: u64, mut shift: u64, out: &mut Vec<u64>) {
        match degree(f) {
            None | Some(0) => {}
            Some(1) => out.push((p - f[0]) % p),
            Some(_) => {
                if p == 2 {
                    // Both elements of F_2 are candidates.
                    for r in 0..2 {
                        if eval(f, r, p) == 0 {
                            out.push(r);
                        }
                    }
                    return;
                }
                loop {
                    // gcd(f, (x + shift)^((p-1)/2) - 1) splits f with probability ~1/2.
                    let xs = vec![shift % p, 1];
                    let h = powmod(&xs, (p - 1) / 2, f, p);
                    let g = gcd(f, &sub(&h, &one(), p), p);
                    shift += 1;
                    let dg = degree(&g).unwrap_or(0);
                    if dg > 0 && dg < f.len() - 1 {
                        let (q, _) = divrem(f, &g, p);
                        split_linear(&g, p, shift, out);
                        split_linear(&q, p, shift, out);
                        return;
                    }
                }
            }
        }
    }

    /// Square-free factorisation: pairs `(g, m)` with `f = lead * prod g^m`, each `g` monic
    /// and square-free.
    pub fn square_free(f: &[u64], p: u64) -> Vec<(Poly, u32)> {
        let f = monic(f, p);
        let mut out = Vec::new();
        if f.len() <= 1 {
            return out;
        }
        let df = derivative(&f, p);
        let mut c = gcd(&f, &df, p);
        let mut w = divrem(&f, &c, p).0;
        let mut i = 1u32;
        while w.len() > 1 {
            let y = gcd(&w, &c, p);
            let fac = divrem(&w, &y, p).0;
            if fac.len() > 1 {
                out.push((monic(&fac, p), i));
            }
            w = y;
            c = divrem(&c, &w, p).0;
            i += 1;
        }
        if c.len() > 1 {
            // c is a p-th power: coefficients only at multiples of p.
            let root: Poly = c.iter().step_by(p as usize).copied().collect();
            for (g, m) in square_free(&root, p) {
                out.push((g, m * p as u32));
            }
        }
        out
    }

    /// Distinct-degree factorisation of a monic square-free polynomial.
    pub fn distinct_degree(f: &[u64], p: u64) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        let mut rest = f.to_vec();
        let mut h = rem(&x(), &rest, p);
        let mut d = 1usize;
        while rest.len() > 2 * d {
            h = powmod(&h, p, &rest, p);
            let g = gcd(&rest, &sub(&h, &x(), p), p);
            if g.len() > 1 {
                rest = divrem(&rest, &g, p).0;
                h = rem(&h, &rest, p);
                out.push((g, d));
            }
            d += 1;
        }
        if rest.len() > 1 {
            let deg = rest.len() - 1;
            out.push((rest, deg));
        }
        out
    }

    /// Equal-degree splitting (Cantor-Zassenhaus) of a product of distinct irreducibles of
    /// degree `d`.
    pub fn equal_degree<R: Rng>(f: &[u64], d: usize, p: u64, rng: &mut R) -> Vec<Poly> {
        let n = f.len() - 1;
        if n == d {
            return vec![f.to_vec()];
        }
        loop {
            let a: Poly = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
            if a.len() <= 1 {
                continue;
            }
            let b = if p == 2 {
                // Trace map a + a^2 + ... + a^(2^(d-1)).
                let mut t = a.clone();
                let mut s = a.clone();
                for _ in 1..d {
                    t = rem(&mul(&t, &t, p), f, p);
                    s = add(&s, &t, p);
                }
                s
            } else {
                // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
                let mut t = a.clone();
                let mut s = a.clone();
                for _ in 1..d {
                    t = powmod(&t, p, f, p);
                    s = rem(&mul(&s, &t, p), f, p);
                }
                sub(&powmod(&s, (p - 1) / 2, f, p), &one(), p)
            };
            let g = gcd(f, &b, p);
            let dg = g.len().saturating_sub(1);
            if dg > 0 && dg < n {
                let q = monic(&divrem(f, &g, p).0, p);
                let mut out = equal_degree(&g, d, p, rng);
                out.extend(equal_degree(&q, d, p, rng));
                return out;
            }
        }
    }

    /// Complete factorisation into monic irreducibles with multiplicities, sorted by
    /// (degree, coefficients).
    pub fn factor<R: Rng>(f: &[u64], p: u64, rng: &mut R) -> Vec<(Poly, u32)> {
        let mut out = Vec::new();
        for (g, m) in square_free(f, p) {
            for (h, d) in distinct_degree(&g, p) {
                for irr in equal_degree(&h, d, p, rng) {
                    out.push((irr, m));
                }
            }
        }
        out.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
        out
    }
}

/// Dense row-major matrix over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl Matrix {
    pub fn zero(p: u64, rows: usize, cols: usize) -> Self {
        Matrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zero(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            data.extend(row.iter().map(|&v| v % p));
        }
        Matrix { p, rows: r, cols: c, data }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let p = self.p;
        let mut out = Matrix::zero(p, self.rows, other.cols);
        let use_acc = (self.cols as u128) * (p as u128) * (p as u128) < u64::MAX as u128;
        for i in 0..self.rows {
            let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
            if use_acc {
                let mut acc = vec![0u64; other.cols];
                for k in 0..self.cols {
                    let a = self.data[i * self.cols + k];
                    if a == 0 {
                        continue;
                    }
                    let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                    for (s, &b) in acc.iter_mut().zip(brow) {
                        *s += a * b;
                    }
                }
                for (o, s) in orow.iter_mut().zip(acc) {
                    *o = s % p;
                }
            } else {
                for k in 0..self.cols {
                    let a = self.data[i * self.cols + k];
                    if a == 0 {
                        continue;
                    }
                    let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                    for (o, &b) in orow.iter_mut().zip(brow) {
                        *o = (*o + mul_mod(a, b, p)) % p;
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut out = vec![0u64; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let row = self.row(k);
            for (o, &b) in out.iter_mut().zip(row) {
                *o = (*o + mul_mod(a, b, p)) % p;
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        let p = self.p;
        Matrix {
            p,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| (a + b) % p).collect(),
        }
    }

    pub fn scale(&self, c: u64) -> Matrix {
        let p = self.p;
        Matrix {
            p,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| mul_mod(a, c % p, p)).collect(),
        }
    }

    /// `self - c * I`.
    pub fn sub_scalar(&self, c: u64) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let v = m.get(i, i);
            m.set(i, i, v + self.p - c % self.p);
        }
        m
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(piv) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if piv != r {
                for j in 0..self.cols {
                    self.data.swap(piv * self.cols + j, r * self.cols + j);
                }
            }
            let inv = inv_mod(self.get(r, c), p);
            for j in 0..self.cols {
                let v = mul_mod(self.get(r, j), inv, p);
                self.data[r * self.cols + j] = v;
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c);
                if f == 0 {
                    continue;
                }
                for j in c..self.cols {
                    let v = (self.get(i, j) + p - mul_mod(f, self.get(r, j), p)) % p;
                    self.data[i * self.cols + j] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.p == 2 {
            return crate::ff::f2_rank(self);
        }
        self.clone().rref().len()
    }

    /// Basis (as rows, in echelon form) of the left null space `{ v : v * self = 0 }`.
    pub fn left_nullspace(&self) -> Matrix {
        self.transpose().right_nullspace()
    }

    /// Basis (as rows) of the right null space `{ v : self * v^T = 0 }`.
    pub fn right_nullspace(&self) -> Matrix {
        let p = self.p;
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zero(p, free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                let v = (p - m.get(i, f)) % p;
                out.set(k, pc, v);
            }
        }
        out.rref();
        out
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Matrix::zero(self.p, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let piv = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let mut out = Matrix::zero(self.p, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j));
            }
        }
        Some(out)
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        let mut r = Matrix::identity(self.p, self.rows);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        r
    }

    /// Characteristic polynomial `det(x I - self)` via Hessenberg reduction.
    pub fn charpoly(&self) -> poly::Poly {
        assert!(self.is_square());
        let p = self.p;
        let n = self.rows;
        let mut h = self.clone();
        // Reduce to upper Hessenberg form by similarity transforms.
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| h.get(i, m - 1) != 0) else {
                continue;
            };
            if i != m {
                for j in 0..n {
                    h.data.swap(i * n + j, m * n + j);
                }
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + m);
                }
            }
            let inv = inv_mod(h.get(m, m - 1), p);
            for i in (m + 1)..n {
                let u = mul_mod(h.get(i, m - 1), inv, p);
                if u == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = (h.get(i, j) + p - mul_mod(u, h.get(m, j), p)) % p;
                    h.data[i * n + j] = v;
                }
                for r in 0..n {
                    let v = (h.get(r, m) + mul_mod(u, h.get(r, i), p)) % p;
                    h.data[r * n + m] = v;
                }
            }
        }
        // Recurrence on leading principal minors.
        let mut polys: Vec<poly::Poly> = vec![poly::one()];
        for m in 1..=n {
            let mut pm = poly::mul(&[(p - h.get(m - 1, m - 1)) % p, 1], &polys[m - 1], p);
            let mut t = 1u64;
            for i in 1..m {
                t = mul_mod(t, h.get(m - i, m - i - 1), p);
                let c = mul_mod(t, h.get(m - i - 1, m - 1), p);
                if c == 0 {
                    continue;
                }
                let term: poly::Poly = polys[m - i - 1].iter().map(|&a| mul_mod(a, c, p)).collect();
                pm = poly::sub(&pm, &term, p);
            }
            polys.push(pm);
        }
        polys.pop().unwrap()
    }

    /// Evaluate a polynomial at this matrix (Horner).
    pub fn eval_poly(&self, f: &[u64]) -> Matrix {
        let n = self.rows;
        let mut acc = Matrix::zero(self.p, n, n);
        for &c in f.iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                let v = acc.get(i, i) + c;
                acc.set(i, i, v);
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u64::from(i == j)))
    }
}

/// Rank over `F_2` with rows packed into 64-bit words.
pub fn f2_rank(m: &Matrix) -> usize {
    let words = m.cols.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = (0..m.rows)
        .map(|i| {
            let mut w = vec![0u64; words];
            for j in 0..m.cols {
                if m.get(i, j) & 1 == 1 {
                    w[j / 64] |= 1 << (j % 64);
                }
            }
            w
        })
        .collect();
    let mut rank = 0;
    for c in 0..m.cols {
        let (w, bit) = (c / 64, 1u64 << (c % 64));
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][w] & bit != 0) else {
            continue;
        };
        rows.swap(piv, rank);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[w] & bit != 0 {
                for (a, b) in row.iter_mut().zip(&pivot) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn primes_and_roots() {
        assert!(is_prime(421));
        assert!(!is_prime(1));
        assert_eq!(primitive_root(7), 3);
        assert_eq!(factorize(20160), vec![(2, 6), (3, 2), (5, 1), (7, 1)]);
    }

    #[test]
    fn roots_of_split_polynomial() {
        let p = 13;
        // (x-1)(x-5)(x-12)
        let f = poly::mul(&poly::mul(&[12, 1], &[8, 1], p), &[1, 1], p);
        assert_eq!(poly::roots(&f, p), vec![1, 5, 12]);
    }

    #[test]
    fn factor_recovers_product() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for &p in &[2u64, 3, 11] {
            // x^8 - x over F_p contains all linear factors and more.
            let mut f = vec![0u64; 9];
            f[8] = 1;
            f[1] = p - 1;
            let f = poly::mul(&f, &[1, 1], p);
            let facs = poly::factor(&f, p, &mut rng);
            let mut prod = poly::one();
            for (g, m) in &facs {
                for _ in 0..*m {
                    prod = poly::mul(&prod, g, p);
                }
            }
            assert_eq!(prod, poly::monic(&f, p));
        }
    }

    #[test]
    fn charpoly_of_companion() {
        let p = 7;
        // companion of x^3 + 2x + 5
        let m = Matrix::from_rows(p, &[vec![0, 1, 0], vec![0, 0, 1], vec![2, 5, 0]]);
        assert_eq!(m.charpoly(), vec![5, 2, 0, 1]);
        assert!(m.eval_poly(&m.charpoly()).data.iter().all(|&v| v == 0));
    }

    #[test]
    fn nullspace_and_rank() {
        let m = Matrix::from_rows(2, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.right_nullspace();
        assert_eq!(ns.rows, 1);
        assert_eq!(ns.row(0), &[1, 1, 1]);
        let inv = Matrix::from_rows(5, &[vec![2, 1], vec![1, 1]]).inverse().unwrap();
        assert_eq!(inv, Matrix::from_rows(5, &[vec![1, 4], vec![4, 2]]));
    }
}
