use super::PermutationGroup;

/// Derived series data for a permutation group.
#[derive(Clone, Debug)]
pub struct DerivedInfo {
    /// `G = G^(0) > G^(1) > ...`, ending at the perfect residual.
    pub series: Vec<PermutationGroup>,
    pub is_solvable: bool,
    pub is_perfect: bool,
    /// `|G / G'|`.
    pub abelianization_order: u64,
}

impl DerivedInfo {
    pub fn orders(&self) -> Vec<u64> {
        self.series.iter().map(|g| g.order_u64()).collect()
    }
}

pub fn derived_and_solvability(group: &PermutationGroup) -> DerivedInfo {
    let mut series = vec![group.clone()];
    loop {
        let last = series.last().unwrap();
        let d = last.derived_subgroup();
        if d.order() == last.order() {
            break;
        }
        series.push(d);
    }
    let orders: Vec<u64> = series.iter().map(|g| g.order_u64()).collect();
    let is_solvable = *orders.last().unwrap() == 1;
    let is_perfect = series.len() == 1;
    let abelianization_order = if series.len() > 1 { orders[0] / orders[1] } else { 1 };
    DerivedInfo { series, is_solvable, is_perfect, abelianization_order }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    #[test]
    fn a4_series() {
        let g = PermutationGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[vec![1, 2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap(),
            ],
        )
        .unwrap();
        let info = derived_and_solvability(&g);
        assert_eq!(info.orders(), vec![12, 4, 1]);
        assert!(info.is_solvable);
        assert!(!info.is_perfect);
        assert_eq!(info.abelianization_order, 3);
    }

    #[test]
    fn c3_is_abelian() {
        let g = PermutationGroup::new(3, vec![Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap()]).unwrap();
        let info = derived_and_solvability(&g);
        assert_eq!(info.orders(), vec![3, 1]);
        assert_eq!(info.abelianization_order, 3);
    }
}
