//! Exact integer linear algebra: normal forms, lattices and abelian groups.

pub mod abelian;
pub mod matrix;
pub mod normal_form;
pub mod sublattice;

pub use abelian::{
    hom_count_to_cyclic, kernel_is_cyclic, map_is_surjective, map_kernel, pushout, surjections_with_cyclic_kernel,
    FgAbGroup, GroupMap, Presentation, Pushout,
};
pub use matrix::{ext_gcd, IntMatrix};
pub use normal_form::{
    gcd_minors, hermite, hnf, integer_kernel, smith_diagonal, snf, solve_integer, solve_rational, Hermite,
};
pub use sublattice::{lattice_index, quotient, quotient_of, LatticeIndex, SubLattice};
