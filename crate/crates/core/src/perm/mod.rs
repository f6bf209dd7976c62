//! Permutation groups: stabilizer chains, element tables, classes, subgroups.

mod chain;
mod classes;
mod coset;
mod elements;
mod group;
mod lattice;
mod permutation;
mod series;

pub use chain::StabChain;
pub use classes::{
    class_names, classes_with_elements, conjugacy_data, elements_of_order, ClassData, ElementClasses,
    CLASS_BOUND,
};
pub use coset::{coset_action, CosetAction, INDEX_BOUND};
pub use elements::ElementTable;
pub use group::PermutationGroup;
pub use lattice::{class_counts_by_order, normal_subgroups, subgroup_lattice, SubgroupNode, LATTICE_BOUND};
pub use permutation::Permutation;
pub use series::{derived_and_solvability, DerivedInfo};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("image list is not a bijection")]
    NotBijective,
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("generator of degree {found}, expected {expected}")]
    InconsistentDegree { expected: usize, found: usize },
    #[error("group order {order} exceeds bound {bound}")]
    OrderBound { order: String, bound: u64 },
    #[error("elements do not lie in the group")]
    NotSubgroup,
    #[error("index {index} exceeds bound {bound}")]
    IndexBound { index: u64, bound: u64 },
}
