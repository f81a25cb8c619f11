//! The exact sequence
//!
//! ```text
//! 0 → H¹_* → H¹ → S(g₀, M₀^g) → H²_* → H² → S(g₀, H¹)
//! ```
//!
//! assembled as matrices between the representative bases fixed by the
//! cohomology module, with exactness decided by comparing echelon subspaces.

mod report;

pub use report::{Dims, SixTermMaps, SixTermReport, Telemetry, Timings, Verdicts, Witness};

use std::time::Instant;

use crate::cohomology::{
    comparison_matrix, induced_map, lie_cohomology_of, restricted_cohomology_of, AssocComplex,
    CohomologyResult, LieComplex,
};
use crate::envelope::UAlgebra;
use crate::error::{Error, Result};
use crate::extensions::{
    assoc_2cocycle_from_restricted_ext, phi_cochain, psi_matrix, trivial_restricted, twist_pmap,
    FxpReading,
};
use crate::gflin::{self, vec_ops, Coordinates, Field, MatGF, Subspace};
use crate::superalg::{
    invariants, semilinear_space, LieSuperAlgebra, Representation, SemiLinearMap,
};

/// Everything the five arrows share: both complexes up to degree three and
/// the four cohomology groups with their representatives.
pub struct SixTerm {
    pub g: LieSuperAlgebra,
    pub m: Representation,
    pub u: UAlgebra,
    pub lie: LieComplex,
    pub assoc: AssocComplex,
    pub h1s: CohomologyResult,
    pub h1: CohomologyResult,
    pub h2s: CohomologyResult,
    pub h2: CohomologyResult,
    /// `M₀^g`
    pub inv0: Subspace,
    /// basis of `S(g₀, M₀^g)`: `x_i ↦ w_j`, i major
    pub s_basis: Vec<SemiLinearMap>,
    s_coords: Coordinates,
    pub reading: FxpReading,
}

impl SixTerm {
    pub fn new(g: &LieSuperAlgebra, m: &Representation) -> Result<Self> {
        let u = UAlgebra::restricted(g);
        let lie = LieComplex::new(g, m, 2)?;
        let assoc = AssocComplex::new(&u, m, 2)?;
        let h1s = restricted_cohomology_of(g, &assoc, 1)?;
        let h2s = restricted_cohomology_of(g, &assoc, 2)?;
        let h1 = lie_cohomology_of(g, &lie, 1)?;
        let h2 = lie_cohomology_of(g, &lie, 2)?;
        let (_, inv0) = invariants(g, m);
        let s_basis = semilinear_space(g.n_even(), &inv0);
        let flat: Vec<Vec<u32>> = s_basis.iter().map(SemiLinearMap::flatten).collect();
        let s_coords = Coordinates::new(g.field(), g.n_even() * m.dim(), &flat)?;
        Ok(SixTerm {
            g: g.clone(),
            m: m.clone(),
            u,
            lie,
            assoc,
            h1s,
            h1,
            h2s,
            h2,
            inv0,
            s_basis,
            s_coords,
            reading: FxpReading::Standard,
        })
    }

    pub fn field(&self) -> Field {
        self.g.field()
    }

    pub fn dims(&self) -> Dims {
        Dims {
            h1s: self.h1s.dim(),
            h1: self.h1.dim(),
            s1: self.s_basis.len(),
            h2s: self.h2s.dim(),
            h2: self.h2.dim(),
            starget: self.g.n_even() * self.h1.dim(),
        }
    }

    /// `H¹_* → H¹`: restrict a bar 1-cocycle to the generators.
    pub fn map_i1(&self) -> Result<MatGF> {
        let c = comparison_matrix(&self.g, &self.u, &self.lie.spaces[1], &self.assoc.spaces[1]);
        induced_map(&c, &self.h1s, &self.h1)
    }

    /// `H¹ → S(g₀, M₀^g)`: `h ↦ (x ↦ x^{p−1}·h(x) − h(x^[p]))`.
    pub fn map_psibar(&self) -> Result<MatGF> {
        let psi = psi_matrix(&self.g, &self.m, &self.lie.spaces[1]);
        let cols = self
            .h1
            .reps
            .iter()
            .map(|h| {
                let v = psi.mul_vec(h);
                self.s_coords
                    .coords(&v)
                    .ok_or_else(|| Error::InvariantViolation("Ψ leaves S(g₀, M₀^g)".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MatGF::from_columns(self.field(), self.s_basis.len(), &cols))
    }

    /// Class in `H²_*` of the trivial extension with its p-map twisted by `s`.
    pub fn fg_class(&self, s: &SemiLinearMap) -> Result<Vec<u32>> {
        let s0 = trivial_restricted(&self.g, &self.m);
        let twisted = twist_pmap(&s0, s)?;
        let c = assoc_2cocycle_from_restricted_ext(&twisted, &self.u, &self.assoc.spaces[2], None)?;
        self.h2s.class_coords(&c)
    }

    /// `S(g₀, M₀^g) → H²_*`.
    pub fn map_fg(&self) -> Result<MatGF> {
        let cols = self
            .s_basis
            .iter()
            .map(|s| self.fg_class(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(MatGF::from_columns(self.field(), self.h2s.dim(), &cols))
    }

    /// `H²_* → H²`: antisymmetrize on `g ⊗ g`.
    pub fn map_pi(&self) -> Result<MatGF> {
        let c = comparison_matrix(&self.g, &self.u, &self.lie.spaces[2], &self.assoc.spaces[2]);
        induced_map(&c, &self.h2s, &self.h2)
    }

    /// H¹-class of `k_x + f_{x^[p]}` for a Lie 2-cocycle `f` and an even basis vector `x`.
    pub fn phi_value(&self, f: &[u32], x: usize) -> Result<Vec<u32>> {
        let k = phi_cochain(
            &self.g,
            &self.m,
            &self.lie.spaces[1],
            &self.lie.spaces[2],
            f,
            x,
            self.reading,
        );
        self.h1.class_coords(&k)
    }

    /// `H² → S(g₀, H¹)` evaluated on explicit representatives, one column
    /// each; rows are `x * dim H¹ + j`.
    pub fn map_phi_on(&self, reps: &[Vec<u32>]) -> Result<MatGF> {
        let cols = reps
            .iter()
            .map(|f| {
                let mut col = Vec::with_capacity(self.g.n_even() * self.h1.dim());
                for x in self.g.space().even_indices() {
                    col.extend(self.phi_value(f, x)?);
                }
                Ok(col)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MatGF::from_columns(
            self.field(),
            self.g.n_even() * self.h1.dim(),
            &cols,
        ))
    }

    pub fn map_phi(&self) -> Result<MatGF> {
        self.map_phi_on(&self.h2.reps)
    }

    /// All five arrows, optionally timed.
    pub fn maps(&self, timings: Option<&mut Timings>) -> Result<SixTermMaps> {
        let mut t = Timings::default();
        let mut clock = Instant::now();
        let mut lap = |slot: &mut f64| {
            *slot = clock.elapsed().as_secs_f64() * 1e3;
            clock = Instant::now();
        };
        let i1 = self.map_i1()?;
        lap(&mut t.i1_ms);
        let psibar = self.map_psibar()?;
        lap(&mut t.psibar_ms);
        let fg = self.map_fg()?;
        lap(&mut t.fg_ms);
        let pi = self.map_pi()?;
        lap(&mut t.pi_ms);
        let phi = self.map_phi()?;
        lap(&mut t.phi_ms);
        if let Some(out) = timings {
            *out = t;
        }
        Ok(SixTermMaps {
            i1,
            psibar,
            fg,
            pi,
            phi,
        })
    }

    pub fn telemetry(&self) -> Telemetry {
        Telemetry {
            u_dim: self.u.dim(),
            lie_cochain_dims: self.lie.spaces.iter().map(|s| s.dim()).collect(),
            bar_cochain_dims: self.assoc.spaces.iter().map(|s| s.dim()).collect(),
            bar_delta_nnz: self.assoc.deltas.iter().map(MatGF::nnz).collect(),
        }
    }
}

/// Whether `Ker(next) = Im(prev)`, with an element of the difference when not.
fn exact_at(prev: &MatGF, next: &MatGF, node: &str, witnesses: &mut Vec<Witness>) -> Result<bool> {
    let im = gflin::image(prev);
    let ker = gflin::nullspace(next);
    if im.equals(&ker)? {
        return Ok(true);
    }
    let (vector, kind) = match ker.witness_outside(&im) {
        Some(v) => (v, "kernel element outside the image"),
        None => (
            im.witness_outside(&ker).unwrap_or_default(),
            "image element outside the kernel",
        ),
    };
    witnesses.push(Witness {
        node: node.to_string(),
        kind: kind.to_string(),
        vector,
    });
    Ok(false)
}

/// Verdicts for a chain of five matrices.
pub fn exactness(maps: &SixTermMaps) -> Result<(Verdicts, Vec<Witness>)> {
    let f = maps.i1.field();
    let mut w = Vec::new();
    let zero_in = MatGF::zeros(f, maps.i1.cols(), 0);
    let i1_injective = exact_at(&zero_in, &maps.i1, "H1*", &mut w)?;
    let exact_at_h1 = exact_at(&maps.i1, &maps.psibar, "H1", &mut w)?;
    let exact_at_s = exact_at(&maps.psibar, &maps.fg, "S", &mut w)?;
    let exact_at_h2s = exact_at(&maps.fg, &maps.pi, "H2*", &mut w)?;
    let exact_at_h2 = exact_at(&maps.pi, &maps.phi, "H2", &mut w)?;
    let composites_zero = [
        (&maps.i1, &maps.psibar),
        (&maps.psibar, &maps.fg),
        (&maps.fg, &maps.pi),
        (&maps.pi, &maps.phi),
    ]
    .iter()
    .map(|(a, b)| b.mul(a).map(|c| c.is_zero()))
    .collect::<Result<Vec<_>>>()?
    .into_iter()
    .all(|z| z);
    Ok((
        Verdicts {
            i1_injective,
            exact_at_h1,
            exact_at_s,
            exact_at_h2s,
            exact_at_h2,
            composites_zero,
        },
        w,
    ))
}

/// Builds the sequence for `(g, M)` and checks it. The module is used as a
/// strongly abelian coefficient module whatever its own p-map was.
pub fn build_six_term(g: &LieSuperAlgebra, m: &Representation) -> Result<SixTermReport> {
    build_six_term_named(g, m, "g", "M", false)
}

pub fn build_six_term_named(
    g: &LieSuperAlgebra,
    m: &Representation,
    algebra: &str,
    module: &str,
    timed: bool,
) -> Result<SixTermReport> {
    let start = Instant::now();
    let st = SixTerm::new(g, m)?;
    let setup_ms = start.elapsed().as_secs_f64() * 1e3;
    let mut t = Timings::default();
    let maps = st.maps(Some(&mut t))?;
    t.setup_ms = setup_ms;
    let (verdicts, witnesses) = exactness(&maps)?;
    let dims = st.dims();
    let phi_rank = gflin::rank(&maps.phi);
    let euler =
        dims.h1s as i64 - dims.h1 as i64 + dims.s1 as i64 - dims.h2s as i64 + dims.h2 as i64;
    Ok(SixTermReport {
        algebra: algebra.to_string(),
        module: module.to_string(),
        p: g.field().p(),
        dims,
        ranks: [&maps.i1, &maps.psibar, &maps.fg, &maps.pi, &maps.phi]
            .iter()
            .map(|m| gflin::rank(m))
            .collect(),
        euler_consistent: euler == phi_rank as i64,
        maps,
        verdicts,
        witnesses,
        telemetry: st.telemetry(),
        timings: timed.then_some(t),
    })
}

/// Shifts each representative by coboundaries `δ(Σ c_k e_k)` with the given
/// coefficient vectors over `C¹`.
pub fn shift_representatives(st: &SixTerm, shifts: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let f = st.field();
    st.h2
        .reps
        .iter()
        .zip(shifts)
        .map(|(r, h)| vec_ops::add(f, r, &st.lie.deltas[1].mul_vec(h)))
        .collect()
}
