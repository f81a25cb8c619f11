//! Super vector spaces, Lie superalgebras with p-maps, and their modules.

mod algebra;
mod module;
mod report;
mod semidirect;
mod space;

pub use algebra::LieSuperAlgebra;
pub use module::{
    hom_module, invariants, semilinear_space, HomModule, Representation, SemiLinearMap,
};
pub use report::{Axiom, ValidationReport, Violation};
pub use semidirect::{extension_algebra, semidirect};
pub use space::{DirectSumLayout, Parity, SuperSpace};
