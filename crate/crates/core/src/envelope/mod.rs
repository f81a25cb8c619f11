//! Enveloping algebras `u(g)` and degree-truncated `U(g)` on PBW bases.
//!
//! Products are computed by straightening: a monomial times a generator is
//! rewritten by swapping the generator leftwards past larger ones (Koszul sign
//! plus a bracket term of lower degree), replacing `x^p` by `x^[p]` for even
//! `x` in `u(g)`, and `y^2` by `½[y,y]` for odd `y`. Generator products are
//! memoized per algebra.

mod algebra;
mod commutators;
mod element;
mod maps;

pub use algebra::{Mode, UAlgebra};
pub use commutators::{check_commutator_identities, identity_one, identity_two};
pub use element::{Monomial, UElement};
pub use maps::{algebra_hom_extend, gamma_map, linear_section_extend, UMap};
