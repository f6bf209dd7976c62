mod common;

use proptest::prelude::*;
use repcheck::bounds::{distinct_sum_feasible, prime_order_cyclic_count};
use repcheck::catalog::{self, Recipe};
use repcheck::chartab::dixon_schneider;
use repcheck::perm::{conjugacy_data, subgroup_lattice};

#[test]
fn dixon_matches_regular_decomposition() {
    for e in catalog::list().iter().filter(|e| e.order <= 100 && e.recipe == Recipe::Construct) {
        let g = catalog::build(e.name).unwrap();
        for seed in [0, 7] {
            let t = dixon_schneider(&g, seed).unwrap();
            common::regular_decomposition_oracle(&g, &t).unwrap_or_else(|m| panic!("{} seed {seed}: {m}", e.name));
        }
    }
}

#[test]
fn lattice_matches_exhaustive_closure() {
    for e in catalog::list().iter().filter(|e| e.order <= 200 && e.recipe == Recipe::Construct) {
        let g = catalog::build(e.name).unwrap();
        let mut ours: Vec<(u64, u64, u64)> = subgroup_lattice(&g).unwrap().iter().map(|n| (n.order, n.class_size, n.abelianization_order)).collect();
        ours.sort_unstable();
        assert_eq!(ours, common::lattice_oracle(&g), "{}", e.name);
    }
}

#[test]
fn prime_cyclic_count_matches_census() {
    for name in ["S4", "SL2(3)", "AGammaL(1,8)", "SL3(2)", "SL2(8).3"] {
        let g = catalog::build(name).unwrap();
        assert_eq!(prime_order_cyclic_count(&conjugacy_data(&g).unwrap()), common::prime_cyclic_census(&g), "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn subset_sums_match_enumeration(pool in prop::collection::vec(1u64..60, 0..=20), target in 0u64..400) {
        let set = pool.iter().copied().collect();
        let mut dedup = pool.clone();
        dedup.sort_unstable();
        dedup.dedup();
        prop_assert_eq!(distinct_sum_feasible(target, &set), common::subset_sum_brute(target, &dedup));
    }
}
