//! Exact cohomology of restricted Lie superalgebras over prime fields.

pub mod catalog;
pub mod cohomology;
pub mod envelope;
pub mod error;
pub mod extensions;
pub mod gflin;
pub mod sixterm;
pub mod superalg;

pub use error::{Error, Result};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/gflin.md")]
    mod gflin {}
    #[doc = include_str!("../../../book/src/superalgebras.md")]
    mod superalgebras {}
    #[doc = include_str!("../../../book/src/envelope.md")]
    mod envelope {}
    #[doc = include_str!("../../../book/src/cohomology.md")]
    mod cohomology {}
    #[doc = include_str!("../../../book/src/extensions.md")]
    mod extensions {}
    #[doc = include_str!("../../../book/src/sixterm.md")]
    mod sixterm {}
}
