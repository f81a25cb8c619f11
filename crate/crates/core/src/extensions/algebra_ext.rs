use crate::cohomology::{LieCochainSpace, LieComplex};
use crate::error::{Error, Result};
use crate::gflin::{vec_ops, MatGF};
use crate::superalg::{extension_algebra, DirectSumLayout, LieSuperAlgebra, Representation};

/// `0 → M → E → g → 0` with M an abelian ideal and `E = g ⊕ M` as a space.
#[derive(Clone, Debug)]
pub struct AlgebraExtension {
    pub g: LieSuperAlgebra,
    pub m: Representation,
    pub e: LieSuperAlgebra,
    /// `first` = g, `second` = M
    pub layout: DirectSumLayout,
}

impl AlgebraExtension {
    /// `(x, 0)` for a vector of g.
    pub fn lift(&self, x: &[u32]) -> Vec<u32> {
        self.layout.join(x, &vec![0; self.m.dim()])
    }

    /// `(0, m)` for a vector of M.
    pub fn include(&self, m: &[u32]) -> Vec<u32> {
        self.layout.join(&vec![0; self.g.dim()], m)
    }

    /// Matrix of `φ : E → g`.
    pub fn projection(&self) -> MatGF {
        let d = self.layout.dim();
        let cols: Vec<Vec<u32>> = (0..d)
            .map(|c| self.layout.split(&vec_ops::unit(d, c)).0)
            .collect();
        MatGF::from_columns(self.g.field(), self.g.dim(), &cols)
    }

    /// Checks that φ is a morphism, that M is an abelian ideal, and that the
    /// induced action on M is the given one.
    pub fn check(&self) -> Result<()> {
        let (gd, md) = (self.g.dim(), self.m.dim());
        for i in 0..gd {
            for j in 0..gd {
                let br = self.e.bracket(
                    &self.lift(&vec_ops::unit(gd, i)),
                    &self.lift(&vec_ops::unit(gd, j)),
                );
                if self.layout.split(&br).0 != self.g.bracket_basis(i, j) {
                    return Err(Error::InvariantViolation(format!(
                        "projection is not a morphism on ({i}, {j})"
                    )));
                }
            }
            for a in 0..md {
                let br = self.e.bracket(
                    &self.lift(&vec_ops::unit(gd, i)),
                    &self.include(&vec_ops::unit(md, a)),
                );
                if br != self.include(&self.m.act(i, &vec_ops::unit(md, a))) {
                    return Err(Error::InvariantViolation(format!(
                        "induced action differs at ({i}, {a})"
                    )));
                }
            }
        }
        for a in 0..md {
            for b in 0..md {
                let br = self.e.bracket(
                    &self.include(&vec_ops::unit(md, a)),
                    &self.include(&vec_ops::unit(md, b)),
                );
                if !vec_ops::is_zero(&br) {
                    return Err(Error::InvariantViolation("M is not abelian".into()));
                }
            }
        }
        Ok(())
    }
}

/// `E_f` with `[(x1,m1),(x2,m2)] = ([x1,x2], x1·m2 − (−1)^{|x1||x2|} x2·m1 + f(x1,x2))`.
pub fn algebra_ext_from_2cocycle(
    g: &LieSuperAlgebra,
    m: &Representation,
    f: &[u32],
) -> Result<AlgebraExtension> {
    let cx = LieComplex::new(g, m, 2)?;
    if f.len() != cx.spaces[2].dim() {
        return Err(Error::DimensionMismatch("2-cochain length".into()));
    }
    if !vec_ops::is_zero(&cx.deltas[2].mul_vec(f)) {
        return Err(Error::NotACocycle(
            "δf ≠ 0 for the algebra extension".into(),
        ));
    }
    Ok(ext_unchecked(g, m, &cx.spaces[2], f))
}

pub(crate) fn ext_unchecked(
    g: &LieSuperAlgebra,
    m: &Representation,
    c2: &LieCochainSpace,
    f: &[u32],
) -> AlgebraExtension {
    let md = m.dim();
    let (e, layout) = extension_algebra(g, m, &|i, j| c2.eval(g, md, f, &[i, j]));
    AlgebraExtension {
        g: g.clone(),
        m: m.clone(),
        e,
        layout,
    }
}

/// `f(x1, x2) = [s x1, s x2] − s[x1, x2]` with `s(x) = (x, 0)`, read in M.
pub fn cocycle_from_algebra_ext(ext: &AlgebraExtension) -> Vec<u32> {
    let g = &ext.g;
    let c2 = LieCochainSpace::new(g, &ext.m, 2);
    let n = g.dim();
    c2.basis.from_values(|t| {
        let br = ext.e.bracket(
            &ext.lift(&vec_ops::unit(n, t[0])),
            &ext.lift(&vec_ops::unit(n, t[1])),
        );
        ext.layout.split(&br).1
    })
}

/// `α(x, m) = (x, m + h(x))` as a matrix on E, without checking `h`.
pub fn shear_matrix(ext: &AlgebraExtension, h: &[u32]) -> MatGF {
    let g = &ext.g;
    let md = ext.m.dim();
    let c1 = LieCochainSpace::new(g, &ext.m, 1);
    let d = ext.layout.dim();
    let cols: Vec<Vec<u32>> = (0..d)
        .map(|c| {
            let (x, mut mm) = ext.layout.split(&vec_ops::unit(d, c));
            for (i, &a) in x.iter().enumerate() {
                if a != 0 {
                    vec_ops::axpy(g.field(), &mut mm, a, &c1.basis.value(h, &[i], md));
                }
            }
            ext.layout.join(&x, &mm)
        })
        .collect();
    MatGF::from_columns(g.field(), d, &cols)
}

/// The automorphism of E fixing M and lying over g defined by a 1-cocycle.
pub fn automorphism_from_1cocycle(ext: &AlgebraExtension, h: &[u32]) -> Result<MatGF> {
    let cx = LieComplex::new(&ext.g, &ext.m, 1)?;
    if !vec_ops::is_zero(&cx.deltas[1].mul_vec(h)) {
        return Err(Error::NotACocycle("δh ≠ 0 for the automorphism".into()));
    }
    Ok(shear_matrix(ext, h))
}

/// `α[a, b] = [αa, αb]` for all basis pairs.
pub fn is_homomorphism(src: &LieSuperAlgebra, dst: &LieSuperAlgebra, alpha: &MatGF) -> bool {
    let n = src.dim();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let lhs = alpha.mul_vec(src.bracket_basis(i, j));
            let rhs = dst.bracket(&alpha.column(i), &alpha.column(j));
            lhs == rhs
        })
    })
}

/// `α(e^[p]) = α(e)^[p]` for every even basis vector of the source.
pub fn preserves_pmap(src: &LieSuperAlgebra, dst: &LieSuperAlgebra, alpha: &MatGF) -> bool {
    (0..src.n_even()).all(|i| alpha.mul_vec(src.pmap_basis(i)) == dst.pmap_apply(&alpha.column(i)))
}
