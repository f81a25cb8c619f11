use crate::error::{Error, Result};
use crate::gflin::{vec_ops, MatGF};
use crate::superalg::Representation;

use super::algebra::UAlgebra;
use super::element::{Monomial, UElement};

/// A linear map between enveloping algebras, stored as the image of each
/// PBW basis monomial of the source.
#[derive(Clone, Debug)]
pub struct UMap {
    pub images: Vec<UElement>,
}

impl UMap {
    pub fn apply_basis(&self, i: usize) -> &UElement {
        &self.images[i]
    }

    pub fn apply(&self, src: &UAlgebra, dst: &UAlgebra, u: &UElement) -> UElement {
        let mut out = UElement::zero();
        for (m, c) in u.terms() {
            let i = src.basis_index(m).expect("monomial of the source algebra");
            out = dst.add(&out, &dst.scale(c, &self.images[i]));
        }
        out
    }

    /// Matrix with one column per source basis monomial.
    pub fn matrix(&self, dst: &UAlgebra) -> MatGF {
        let cols: Vec<Vec<u32>> = self.images.iter().map(|u| dst.to_coords(u)).collect();
        MatGF::from_columns(dst.field(), dst.dim(), &cols)
    }
}

/// Sends each PBW monomial of `src` to the ordered product of the images of
/// its generators, where `gen_image(i)` is the image of basis vector `i` as a
/// vector of the destination Lie superalgebra.
fn extend_on_monomials(
    src: &UAlgebra,
    dst: &UAlgebra,
    gen_image: &dyn Fn(usize) -> Vec<u32>,
) -> Result<UMap> {
    let gens: Vec<UElement> = (0..src.lie().dim())
        .map(|i| dst.embed(&gen_image(i)))
        .collect();
    let mut images = Vec::with_capacity(src.dim());
    for m in src.pbw_basis() {
        let mut acc = dst.one();
        for (pos, &e) in m.exponents().iter().enumerate() {
            let g = &gens[src.order()[pos]];
            for _ in 0..e {
                acc = dst.multiply(&acc, g)?;
            }
        }
        images.push(acc);
    }
    Ok(UMap { images })
}

/// The algebra homomorphism extending a restricted morphism on generators.
pub fn algebra_hom_extend(
    src: &UAlgebra,
    dst: &UAlgebra,
    f: &dyn Fn(usize) -> Vec<u32>,
) -> Result<UMap> {
    extend_on_monomials(src, dst, f)
}

/// The linear map sending a PBW monomial to the product of section images of
/// its factors in canonical order.
pub fn linear_section_extend(
    src: &UAlgebra,
    dst: &UAlgebra,
    psi: &dyn Fn(usize) -> Vec<u32>,
) -> Result<UMap> {
    extend_on_monomials(src, dst, psi)
}

/// `Σ u_i m_i ↦ Σ φ'(u_i)·m_i` on the ideal generated by M in `u(g ⊕ M)`.
///
/// `e_alg` must order the generators with those of g first, in g's basis
/// order, then those of M; `g_positions` is the number of g generators.
pub fn gamma_map(
    e_alg: &UAlgebra,
    g_alg: &UAlgebra,
    m: &Representation,
    g_positions: usize,
    w: &UElement,
) -> Result<Vec<u32>> {
    let f = e_alg.field();
    let mut out = vec![0u32; m.dim()];
    for (mono, c) in w.terms() {
        let ex = mono.exponents();
        let m_deg: usize = ex[g_positions..].iter().map(|&e| e as usize).sum();
        match m_deg {
            0 => return Err(Error::NotInIdeal(format!("{mono:?} has no M factor"))),
            1 => {
                let j = ex[g_positions..]
                    .iter()
                    .position(|&e| e == 1)
                    .expect("one M factor");
                let ug = Monomial::from_exponents(&ex[..g_positions]);
                let v = g_alg.act_monomial(m, &ug, &vec_ops::unit(m.dim(), j));
                vec_ops::axpy(f, &mut out, c, &v);
            }
            _ => {}
        }
    }
    Ok(out)
}
