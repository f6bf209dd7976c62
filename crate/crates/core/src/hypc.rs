//! Degree/indicator checks on character tables: Hypothesis C, uniqueness of real
//! irreducible degrees, and uniqueness of complex degrees.

use std::collections::BTreeMap;
use std::fmt;

use crate::chartab::{conjugate_pairs, CharacterTable, ChartabError};

#[derive(Debug, thiserror::Error)]
pub enum HypcError {
    #[error("table {0} has neither indicators nor a squaring map")]
    MissingIndicators(String),
    #[error(transparent)]
    Table(#[from] ChartabError),
}

/// A set of rows sharing a key that violates the property being checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// 0-based row indices.
    pub rows: Vec<usize>,
    pub degree: u64,
    pub indicator: Option<i8>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| format!("X.{}", r + 1)).collect();
        write!(f, "degree {} ", self.degree)?;
        if let Some(i) = self.indicator {
            write!(f, "indicator {} ", indicator_symbol(i))?;
        }
        write!(f, "rows {}", rows.join(","))
    }
}

pub fn indicator_symbol(i: i8) -> &'static str {
    match i {
        1 => "+",
        -1 => "-",
        _ => "o",
    }
}

/// One census line: how many rows carry `(degree, indicator)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileEntry {
    pub degree: u64,
    pub indicator: Option<i8>,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub pass: bool,
    pub witnesses: Vec<Witness>,
    pub profile: Vec<ProfileEntry>,
    /// Degrees carried by more than four rows.
    pub crowded_degrees: Vec<(u64, usize)>,
}

impl Verdict {
    fn new(witnesses: Vec<Witness>, profile: Vec<ProfileEntry>, crowded_degrees: Vec<(u64, usize)>) -> Self {
        Verdict { pass: witnesses.is_empty(), witnesses, profile, crowded_degrees }
    }
}

/// Stored indicators, or indicators computed from the squaring map.
pub fn indicators(t: &CharacterTable) -> Result<Vec<i8>, HypcError> {
    if let Some(ind) = &t.indicators {
        return Ok(ind.clone());
    }
    if !t.classes.has_power_maps() {
        return Err(HypcError::MissingIndicators(t.name.clone()));
    }
    let mut t = t.clone();
    Ok(t.compute_indicators()?.to_vec())
}

fn crowded(t: &CharacterTable) -> Vec<(u64, usize)> {
    let mut by_degree: BTreeMap<u64, usize> = BTreeMap::new();
    for d in t.degrees() {
        *by_degree.entry(d).or_default() += 1;
    }
    by_degree.into_iter().filter(|&(_, c)| c > 4).collect()
}

/// Distinct rows with equal degree and indicator must be complex conjugates.
pub fn check_hypothesis_c(t: &CharacterTable) -> Result<Verdict, HypcError> {
    let ind = indicators(t)?;
    let conj = conjugate_pairs(t)?;
    let degrees = t.degrees();
    let mut groups: BTreeMap<(u64, i8), Vec<usize>> = BTreeMap::new();
    for (r, (&d, &i)) in degrees.iter().zip(&ind).enumerate() {
        groups.entry((d, i)).or_default().push(r);
    }
    let mut witnesses = Vec::new();
    let mut profile = Vec::new();
    for ((degree, indicator), rows) in groups {
        profile.push(ProfileEntry { degree, indicator: Some(indicator), count: rows.len() });
        let ok = match rows.as_slice() {
            [_] => true,
            [a, b] => conj[*a] == *b,
            _ => false,
        };
        if !ok {
            witnesses.push(Witness { rows, degree, indicator: Some(indicator) });
        }
    }
    Ok(Verdict::new(witnesses, profile, crowded(t)))
}

/// Degrees of the real irreducible representations together with the uniqueness verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealProfile {
    /// Sorted multiset of real degrees.
    pub degrees: Vec<u64>,
    pub verdict: Verdict,
}

/// `chi(1)` for indicator `+`, `2 chi(1)` for `-`, and `2 chi(1)` once per pair of
/// non-real rows; passes iff all of these are distinct.
pub fn real_degree_profile(t: &CharacterTable) -> Result<RealProfile, HypcError> {
    let ind = indicators(t)?;
    let conj = conjugate_pairs(t)?;
    let degrees = t.degrees();
    let mut by_real: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for r in 0..degrees.len() {
        let real = match ind[r] {
            1 => degrees[r],
            -1 => 2 * degrees[r],
            _ if conj[r] > r => 2 * degrees[r],
            _ => continue,
        };
        by_real.entry(real).or_default().push(r);
    }
    let mut all = Vec::new();
    let mut witnesses = Vec::new();
    let mut profile = Vec::new();
    for (degree, rows) in by_real {
        all.extend(std::iter::repeat_n(degree, rows.len()));
        profile.push(ProfileEntry { degree, indicator: None, count: rows.len() });
        if rows.len() > 1 {
            witnesses.push(Witness { rows, degree, indicator: None });
        }
    }
    Ok(RealProfile { degrees: all, verdict: Verdict::new(witnesses, profile, crowded(t)) })
}

/// Passes iff all irreducible degrees are distinct.
pub fn complex_degree_uniqueness(t: &CharacterTable) -> Verdict {
    let mut by_degree: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (r, d) in t.degrees().into_iter().enumerate() {
        by_degree.entry(d).or_default().push(r);
    }
    let profile = by_degree
        .iter()
        .map(|(&degree, rows)| ProfileEntry { degree, indicator: None, count: rows.len() })
        .collect();
    let witnesses = by_degree
        .into_iter()
        .filter(|(_, rows)| rows.len() > 1)
        .map(|(degree, rows)| Witness { rows, degree, indicator: None })
        .collect();
    Verdict::new(witnesses, profile, crowded(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::dixon_schneider;
    use crate::perm::{Permutation, PermutationGroup};

    fn table(degree: usize, gens: &[&[&[usize]]]) -> CharacterTable {
        let gens = gens
            .iter()
            .map(|c| Permutation::from_cycles(degree, &c.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap())
            .collect();
        dixon_schneider(&PermutationGroup::new(degree, gens).unwrap(), 0).unwrap()
    }

    #[test]
    fn a4_passes_everything_but_complex_uniqueness() {
        let t = table(4, &[&[&[1, 2, 3]], &[&[1, 2], &[3, 4]]]);
        assert!(check_hypothesis_c(&t).unwrap().pass);
        let p = real_degree_profile(&t).unwrap();
        assert_eq!(p.degrees, vec![1, 2, 3]);
        assert!(p.verdict.pass);
        assert!(!complex_degree_uniqueness(&t).pass);
    }

    #[test]
    fn s4_fails_on_degree_three() {
        let t = table(4, &[&[&[1, 2, 3, 4]], &[&[1, 2]]]);
        let v = check_hypothesis_c(&t).unwrap();
        assert!(!v.pass);
        assert!(v.witnesses.iter().any(|w| w.degree == 3 && w.indicator == Some(1) && w.rows.len() == 2));
    }

    #[test]
    fn c2_fails_on_linear_rows() {
        let t = table(2, &[&[&[1, 2]]]);
        let v = check_hypothesis_c(&t).unwrap();
        assert_eq!(v.witnesses, vec![Witness { rows: vec![0, 1], degree: 1, indicator: Some(1) }]);
    }

    #[test]
    fn c1_has_unique_degrees() {
        let t = table(1, &[]);
        assert!(complex_degree_uniqueness(&t).pass);
        let c3 = table(3, &[&[&[1, 2, 3]]]);
        assert!(!complex_degree_uniqueness(&c3).pass);
    }
}
