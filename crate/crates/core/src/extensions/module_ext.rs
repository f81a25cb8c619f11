use crate::cohomology::{LieCochainSpace, LieComplex};
use crate::error::{Error, Result};
use crate::gflin::{vec_ops, MatGF};
use crate::superalg::{hom_module, DirectSumLayout, HomModule, LieSuperAlgebra, Representation};

/// `0 → K → E → N → 0` with `E = K ⊕ N` as a vector space.
#[derive(Clone, Debug)]
pub struct ModuleExtension {
    pub rep: Representation,
    /// `first` = K, `second` = N
    pub layout: DirectSumLayout,
}

impl ModuleExtension {
    /// Matrix of the projection `E → N`.
    pub fn projection(&self) -> MatGF {
        let f = self.rep.field();
        let n = self.layout.second.len();
        let cols: Vec<Vec<u32>> = (0..self.layout.dim())
            .map(|c| self.layout.split(&vec_ops::unit(self.layout.dim(), c)).1)
            .collect();
        MatGF::from_columns(f, n, &cols)
    }

    /// Matrix of the inclusion `K → E`.
    pub fn embedding(&self) -> MatGF {
        let f = self.rep.field();
        let k = self.layout.first.len();
        let cols: Vec<Vec<u32>> = (0..k)
            .map(|a| {
                self.layout
                    .join(&vec_ops::unit(k, a), &vec![0; self.layout.second.len()])
            })
            .collect();
        MatGF::from_columns(f, self.layout.dim(), &cols)
    }
}

/// `x·(c + d) = x·c + x·d + f(x)(d)` on `K ⊕ N` for a 1-cocycle `f` with
/// values in `Hom(N, K)`.
pub fn module_ext_from_1cocycle(
    g: &LieSuperAlgebra,
    k: &Representation,
    n: &Representation,
    f: &[u32],
) -> Result<ModuleExtension> {
    let hm = hom_module(g, n, k);
    let cx = LieComplex::new(g, &hm.rep, 1)?;
    if f.len() != cx.spaces[1].dim() {
        return Err(Error::DimensionMismatch("1-cochain length".into()));
    }
    if !vec_ops::is_zero(&cx.deltas[1].mul_vec(f)) {
        return Err(Error::NotACocycle("δf ≠ 0 for the module extension".into()));
    }
    Ok(build(g, k, n, &hm, &cx.spaces[1], f))
}

fn build(
    g: &LieSuperAlgebra,
    k: &Representation,
    n: &Representation,
    hm: &HomModule,
    c1: &LieCochainSpace,
    f: &[u32],
) -> ModuleExtension {
    let fld = g.field();
    let layout = DirectSumLayout::new(k.space(), n.space());
    let d = layout.dim();
    let mut rho = Vec::with_capacity(g.dim());
    for i in 0..g.dim() {
        let fx = hm.to_matrix(fld, &c1.basis.value(f, &[i], hm.rep.dim()));
        let cols: Vec<Vec<u32>> = (0..d)
            .map(|c| {
                let (kc, nc) = layout.split(&vec_ops::unit(d, c));
                let mut kk = k.act(i, &kc);
                vec_ops::axpy(fld, &mut kk, 1, &fx.mul_vec(&nc));
                layout.join(&kk, &n.act(i, &nc))
            })
            .collect();
        rho.push(MatGF::from_columns(fld, d, &cols));
    }
    let rep = Representation::new(g, layout.space.clone(), rho).expect("shapes agree");
    ModuleExtension { rep, layout }
}

/// `f(x)(a) = x·s(a) − s(x·a)` with the section `s(a) = (0, a)`, read in K.
pub fn cocycle_from_module_ext(
    g: &LieSuperAlgebra,
    k: &Representation,
    n: &Representation,
    ext: &ModuleExtension,
) -> Vec<u32> {
    let fld = g.field();
    let hm = hom_module(g, n, k);
    let c1 = LieCochainSpace::new(g, &hm.rep, 1);
    let nd = n.dim();
    c1.basis.from_values(|t| {
        let i = t[0];
        let cols: Vec<Vec<u32>> = (0..nd)
            .map(|a| {
                let s = ext.layout.join(&vec![0; k.dim()], &vec_ops::unit(nd, a));
                let xs = ext.rep.act(i, &s);
                let (kpart, npart) = ext.layout.split(&xs);
                debug_assert_eq!(npart, n.act(i, &vec_ops::unit(nd, a)));
                kpart
            })
            .collect();
        hm.from_matrix(&MatGF::from_columns(fld, k.dim(), &cols))
    })
}
