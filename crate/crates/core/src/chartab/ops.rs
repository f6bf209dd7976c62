use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::{rational, CharacterTable, ChartabError};
use crate::cyclo::{Cyclotomic, IntAccumulator};
use crate::ff::{gcd, lcm};

/// `(1/|G|) * sum_k |C_k| chi(g_k^2)`.
pub fn frobenius_schur(t: &CharacterTable, row: usize) -> Result<i8, ChartabError> {
    if !t.classes.has_power_maps() {
        return Err(ChartabError::MissingPowerMap(2));
    }
    let sq = t.classes.power_class_map(2);
    let mut acc = IntAccumulator::new(t.conductor);
    for (c, &s) in sq.iter().enumerate() {
        let terms = acc.terms_of(&t.rows[row][s]).ok_or_else(|| ChartabError::Invalid {
            name: t.name.clone(),
            reason: format!("row {} has a non-integral value", row + 1),
        })?;
        acc.add_terms(&terms, t.classes.sizes[c] as i128);
    }
    let sum = acc.finish();
    let order = t.group_order() as i64;
    match sum.as_i64() {
        Some(v) if v == order => Ok(1),
        Some(0) => Ok(0),
        Some(v) if v == -order => Ok(-1),
        _ => Err(ChartabError::Invalid {
            name: t.name.clone(),
            reason: format!("indicator sum for row {} is {}", row + 1, sum),
        }),
    }
}

/// For each row, the index of its complex-conjugate row.
pub fn conjugate_pairs(t: &CharacterTable) -> Result<Vec<usize>, ChartabError> {
    let inv = t.inverse_classes();
    (0..t.rows.len())
        .map(|a| {
            let conj: Vec<&Cyclotomic> = inv.iter().map(|&c| &t.rows[a][c]).collect();
            t.rows
                .iter()
                .position(|r| r.iter().zip(&conj).all(|(x, y)| x == *y))
                .ok_or_else(|| ChartabError::Invalid {
                    name: t.name.clone(),
                    reason: format!("row {} has no complex-conjugate row", a + 1),
                })
        })
        .collect()
}

/// Size of the Galois orbit of a row, i.e. `[Q(chi):Q]`.
pub fn field_degree(t: &CharacterTable, row: usize) -> usize {
    let r = &t.rows[row];
    let n = r.iter().fold(1, |a, v| lcm(a, v.conductor()));
    let mut orbit: BTreeSet<Vec<Cyclotomic>> = BTreeSet::new();
    for m in 1..=n.max(1) {
        if gcd(m, n) != 1 {
            continue;
        }
        orbit.insert(r.iter().map(|v| v.galois_mod(m as i64, n)).collect::<Vec<_>>());
    }
    orbit.len()
}

/// `<a, b> = (1/|G|) sum_k |C_k| a(g_k) conj(b(g_k))`.
pub fn inner_product(t: &CharacterTable, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
    let mut sum = Cyclotomic::zero();
    for (c, s) in t.classes.sizes.iter().enumerate() {
        sum = sum.add(&a[c].mul(&b[c].conj()).scale_int(*s as i64));
    }
    sum.scale(&rational(1, t.group_order() as i64))
}

#[derive(Clone, Debug)]
pub struct Induced {
    pub values: Vec<Cyclotomic>,
    pub norm: BigRational,
    pub irreducible: bool,
}

/// Induce row `row` of `sub` to `target` along `fusion` (sub-class index to class index).
pub fn induce(
    sub: &CharacterTable,
    fusion: &[usize],
    row: usize,
    target: &CharacterTable,
) -> Result<Induced, ChartabError> {
    let k = target.num_classes();
    let (h, g) = (sub.group_order(), target.group_order());
    if fusion.len() != sub.num_classes() {
        return Err(ChartabError::Fusion(format!("{} entries for {} classes", fusion.len(), sub.num_classes())));
    }
    if g % h != 0 {
        return Err(ChartabError::Fusion(format!("{h} does not divide {g}")));
    }
    let mut hit = vec![0u64; k];
    for (c, &f) in fusion.iter().enumerate() {
        if f >= k {
            return Err(ChartabError::Fusion(format!("class {} maps to {} of {}", c + 1, f + 1, k)));
        }
        if sub.classes.element_orders[c] != target.classes.element_orders[f] {
            return Err(ChartabError::Fusion(format!("class {} changes element order", c + 1)));
        }
        hit[f] += sub.classes.sizes[c];
    }
    if let Some(f) = (0..k).find(|&f| hit[f] > target.classes.sizes[f]) {
        return Err(ChartabError::Fusion(format!("too many elements fuse into class {}", f + 1)));
    }
    let mut values = vec![Cyclotomic::zero(); k];
    for (c, &f) in fusion.iter().enumerate() {
        values[f] = values[f].add(&sub.rows[row][c].scale_int(sub.classes.sizes[c] as i64));
    }
    for (f, v) in values.iter_mut().enumerate() {
        let factor = BigRational::new(BigInt::from(g), BigInt::from(h) * BigInt::from(target.classes.sizes[f]));
        *v = v.scale(&factor);
    }
    let norm = inner_product(target, &values, &values)
        .as_rational()
        .ok_or_else(|| ChartabError::Fusion("norm is not rational".into()))?;
    let irreducible = norm.is_one();
    debug_assert!(norm.to_f64().unwrap() > 0.0);
    Ok(Induced { values, norm, irreducible })
}
