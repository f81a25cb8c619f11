//! Lie-type and bar-type cochain complexes in degrees up to two, and their cohomology.

mod assoc;
mod compare;
mod lie;
mod result;
mod space;

pub use assoc::{AssocCochainSpace, AssocComplex};
pub use compare::{
    comparison_matrix, h1_star_via_pmap_condition, induced_map, permutations, sgn_marked,
};
pub use lie::{canonicalize, lie_differential, LieCochainSpace, LieComplex};
pub use result::{CohomologyResult, Kind};
pub use space::CochainBasis;

use crate::envelope::UAlgebra;
use crate::error::{Error, Result};
use crate::superalg::{LieSuperAlgebra, Representation};

fn degree_check(n: usize) -> Result<()> {
    if n > 2 {
        return Err(Error::Unsupported(format!("cohomology in degree {n}")));
    }
    Ok(())
}

/// `H^n` of the Lie-type complex from an already built complex.
pub fn lie_cohomology_of(
    g: &LieSuperAlgebra,
    cx: &LieComplex,
    n: usize,
) -> Result<CohomologyResult> {
    degree_check(n)?;
    let incoming = if n == 0 {
        None
    } else {
        Some(&cx.deltas[n - 1])
    };
    CohomologyResult::from_differentials(
        n,
        Kind::Lie,
        g.field(),
        cx.spaces[n].dim(),
        incoming,
        &cx.deltas[n],
    )
}

/// `H^n_*` of the bar complex from an already built complex.
pub fn restricted_cohomology_of(
    g: &LieSuperAlgebra,
    cx: &AssocComplex,
    n: usize,
) -> Result<CohomologyResult> {
    degree_check(n)?;
    let incoming = if n == 0 {
        None
    } else {
        Some(&cx.deltas[n - 1])
    };
    CohomologyResult::from_differentials(
        n,
        Kind::Restricted,
        g.field(),
        cx.spaces[n].dim(),
        incoming,
        &cx.deltas[n],
    )
}

pub fn lie_cohomology(
    g: &LieSuperAlgebra,
    m: &Representation,
    n: usize,
) -> Result<CohomologyResult> {
    degree_check(n)?;
    let cx = LieComplex::new(g, m, n)?;
    lie_cohomology_of(g, &cx, n)
}

pub fn restricted_cohomology(
    g: &LieSuperAlgebra,
    m: &Representation,
    n: usize,
) -> Result<CohomologyResult> {
    degree_check(n)?;
    let u = UAlgebra::restricted(g);
    let cx = AssocComplex::new(&u, m, n)?;
    restricted_cohomology_of(g, &cx, n)
}
