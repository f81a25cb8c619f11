//! Extensions of modules and of restricted Lie superalgebras, built from
//! cocycles and turned back into cocycles.
//!
//! Every construction uses the coordinate sections `a ↦ (0, a)` and
//! `x ↦ (x, 0)`, so the round trips are exact on cochains rather than only
//! on classes.

mod algebra_ext;
mod module_ext;
mod restricted;

pub use algebra_ext::{
    algebra_ext_from_2cocycle, automorphism_from_1cocycle, cocycle_from_algebra_ext,
    is_homomorphism, preserves_pmap, shear_matrix, AlgebraExtension,
};
pub use module_ext::{cocycle_from_module_ext, module_ext_from_1cocycle, ModuleExtension};
pub use restricted::{
    are_equivalent_restricted, assoc_2cocycle_from_restricted_ext, phi_cochain, psi_matrix,
    restricted_ext_from_assoc_2cocycle, restricted_structure_from_sigma, strongly_abelianize,
    trivial_restricted, twist_pmap, FxpReading, RestrictedExtension,
};
