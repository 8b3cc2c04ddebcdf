//! Exact algorithms for semimatroids, arithmetic matroids, periodic arrangements
//! and the lattice-theoretic objects attached to them.

pub mod arith;
pub mod error;
pub mod exact_lattice;
pub mod geomsl;
pub mod periodic;
pub mod poly;
pub mod report;
pub mod semimatroid;
pub mod subset;
pub mod zmatroid;

pub use error::{Error, Result};
pub use exact_lattice::{FgAbGroup, GroupMap, IntMatrix, LatticeIndex, Presentation, SubLattice};
pub use geomsl::FinitePoset;
pub use poly::{BivariatePoly, UniPoly};
pub use report::{Report, Violation};
pub use semimatroid::{LocallyRankedTriple, Molecule};
pub use subset::{Subset, MAX_GROUND};
pub use arith::{AxiomReport, DelConCase, Layers, QuotientData};
pub use periodic::{Layer, LayerPoset, PeriodicArrangement};
pub use zmatroid::{complete_square, check_duality, check_zmatroid, SquareDiagram, SquareReport, ZMatroid};
