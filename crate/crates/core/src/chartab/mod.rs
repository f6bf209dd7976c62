//! Character tables: construction by Dixon–Schneider and the measurements read off them.

mod dixon;
mod ops;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cyclo::{Cyclotomic, IntAccumulator};
use crate::ff::lcm;
use crate::perm::{ClassData, PermError};

pub use dixon::{dixon_schneider, dixon_with_classes, modular_prime};
pub use ops::{conjugate_pairs, field_degree, frobenius_schur, induce, inner_product, Induced};

#[derive(Debug, thiserror::Error)]
pub enum ChartabError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("eigenspace splitting stalled with a space of dimension {dim}")]
    SplitFailure { dim: usize },
    #[error("lifting failed for class {class}: {reason}")]
    LiftFailure { class: usize, reason: String },
    #[error("power map for {0} is not available")]
    MissingPowerMap(i64),
    #[error("inconsistent fusion map: {0}")]
    Fusion(String),
    #[error("table `{name}` is invalid: {reason}")]
    Invalid { name: String, reason: String },
    #[error("row {row}: stored indicator {stored} but power maps give {computed}")]
    IndicatorMismatch { row: usize, stored: i8, computed: i8 },
}

/// Irreducible characters of a group, one row per character and one column per class.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub name: String,
    pub classes: ClassData,
    pub rows: Vec<Vec<Cyclotomic>>,
    /// Frobenius–Schur indicators in `{-1, 0, 1}`, when known.
    pub indicators: Option<Vec<i8>>,
    /// Least common conductor of all values.
    pub conductor: u64,
}

impl CharacterTable {
    pub fn new(name: impl Into<String>, classes: ClassData, rows: Vec<Vec<Cyclotomic>>) -> Self {
        let conductor = rows.iter().flatten().fold(1, |a, v| lcm(a, v.conductor()));
        CharacterTable { name: name.into(), classes, rows, indicators: None, conductor }
    }

    pub fn group_order(&self) -> u64 {
        self.classes.group_order
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn degree(&self, row: usize) -> u64 {
        let id = self.classes.identity_class();
        self.rows[row][id].as_i64().expect("degrees are positive integers") as u64
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.rows.len()).map(|i| self.degree(i)).collect()
    }

    /// Fill `indicators` from the squaring map, checking any stored values.
    pub fn compute_indicators(&mut self) -> Result<&[i8], ChartabError> {
        let computed: Vec<i8> = (0..self.rows.len()).map(|i| frobenius_schur(self, i)).collect::<Result<_, _>>()?;
        if let Some(stored) = &self.indicators {
            for (row, (&s, &c)) in stored.iter().zip(&computed).enumerate() {
                if s != c {
                    return Err(ChartabError::IndicatorMismatch { row, stored: s, computed: c });
                }
            }
        }
        self.indicators = Some(computed);
        Ok(self.indicators.as_deref().unwrap())
    }

    /// Class index of the inverse of each class, from the power maps or, failing that, from
    /// complex conjugation of the columns.
    pub fn inverse_classes(&self) -> Vec<usize> {
        if self.classes.has_power_maps() {
            return self.classes.inverse_map();
        }
        let k = self.num_classes();
        let cols: Vec<Vec<&Cyclotomic>> = (0..k).map(|c| self.rows.iter().map(|r| &r[c]).collect()).collect();
        (0..k)
            .map(|c| {
                let conj: Vec<Cyclotomic> = cols[c].iter().map(|v| v.conj()).collect();
                (0..k).find(|&d| cols[d].iter().zip(&conj).all(|(a, b)| *a == b)).unwrap_or(c)
            })
            .collect()
    }

    /// Check size sum, degree-square sum, divisibility, distinct rows, and both
    /// orthogonality relations, all exactly.
    pub fn validate(&self) -> Result<(), ChartabError> {
        let bad = |reason: String| ChartabError::Invalid { name: self.name.clone(), reason };
        let k = self.num_classes();
        let order = self.group_order();
        if self.rows.len() != k {
            return Err(bad(format!("{} rows for {} classes", self.rows.len(), k)));
        }
        if let Some(i) = self.rows.iter().position(|r| r.len() != k) {
            return Err(bad(format!("row {} has {} values, expected {}", i + 1, self.rows[i].len(), k)));
        }
        let size_sum: u128 = self.classes.sizes.iter().map(|&s| s as u128).sum();
        if size_sum != order as u128 {
            return Err(bad(format!("class sizes sum to {size_sum}, not {order}")));
        }
        if let Some(c) = self.classes.sizes.iter().position(|&s| s == 0 || order % s != 0) {
            return Err(bad(format!("class {} size does not divide the order", c + 1)));
        }
        let id = self.classes.identity_class();
        let mut sq: u128 = 0;
        for (i, r) in self.rows.iter().enumerate() {
            let d = r[id].as_i64().filter(|&d| d > 0).ok_or_else(|| bad(format!("row {} degree is not a positive integer", i + 1)))?;
            if order % d as u64 != 0 {
                return Err(bad(format!("row {} degree {} does not divide {}", i + 1, d, order)));
            }
            sq += (d as u128) * (d as u128);
        }
        if sq != order as u128 {
            return Err(bad(format!("sum of squared degrees is {sq}, not {order}")));
        }
        let mut sorted: Vec<&Vec<Cyclotomic>> = self.rows.iter().collect();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(bad("repeated row".into()));
        }
        let inv = self.inverse_classes();
        let acc = IntAccumulator::new(self.conductor);
        let terms: Vec<Vec<Vec<(u64, i128)>>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                r.iter()
                    .map(|v| acc.terms_of(v).ok_or_else(|| bad(format!("row {} has a non-integral value", i + 1))))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<_, _>>()?;
        for a in 0..k {
            for b in a..k {
                let mut acc = IntAccumulator::new(self.conductor);
                for c in 0..k {
                    acc.add_product(&terms[a][c], &terms[b][inv[c]], self.classes.sizes[c] as i128);
                }
                let expect = if a == b { order as i64 } else { 0 };
                if acc.finish() != Cyclotomic::from_integer(expect) {
                    return Err(bad(format!("rows {} and {} are not orthogonal", a + 1, b + 1)));
                }
            }
        }
        for c in 0..k {
            for d in c..k {
                let mut acc = IntAccumulator::new(self.conductor);
                for t in &terms {
                    acc.add_product(&t[c], &t[inv[d]], 1);
                }
                let expect = if c == d { (order / self.classes.sizes[c]) as i64 } else { 0 };
                if acc.finish() != Cyclotomic::from_integer(expect) {
                    return Err(bad(format!("columns {} and {} are not orthogonal", c + 1, d + 1)));
                }
            }
        }
        Ok(())
    }

    /// Number of elements `g` with `g^2 = 1`, counted from class data.
    pub fn square_roots_of_one(&self) -> u64 {
        self.classes
            .sizes
            .iter()
            .zip(&self.classes.element_orders)
            .filter(|(_, &o)| o <= 2)
            .map(|(s, _)| s)
            .sum()
    }

    /// Sort rows by degree and then by values.
    pub(crate) fn sort_rows(&mut self) {
        let id = self.classes.identity_class();
        let mut paired: Vec<(Vec<Cyclotomic>, Option<i8>)> = self
            .rows
            .drain(..)
            .enumerate()
            .map(|(i, r)| (r, self.indicators.as_ref().map(|v| v[i])))
            .collect();
        paired.sort_by(|a, b| (a.0[id].clone(), &a.0).cmp(&(b.0[id].clone(), &b.0)));
        if self.indicators.is_some() {
            self.indicators = Some(paired.iter().map(|p| p.1.unwrap()).collect());
        }
        self.rows = paired.into_iter().map(|p| p.0).collect();
    }
}

pub(crate) fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
