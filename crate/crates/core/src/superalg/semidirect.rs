use crate::gflin::{vec_ops, Field};

use super::algebra::LieSuperAlgebra;
use super::module::Representation;
use super::space::DirectSumLayout;

/// The algebra on `g ⊕ M` with
/// `[(x1,m1),(x2,m2)] = ([x1,x2], x1·m2 − (−1)^{|x1||x2|} x2·m1 + f(x1,x2))`
/// and p-map `(x,0)^[p] = (x^[p], 0)`, `(0,m)^[p] = 0`.
///
/// `cocycle(i, j)` gives `f(x_i, x_j)` in M-coordinates.
pub fn extension_algebra(
    g: &LieSuperAlgebra,
    m: &Representation,
    cocycle: &dyn Fn(usize, usize) -> Vec<u32>,
) -> (LieSuperAlgebra, DirectSumLayout) {
    let f: Field = g.field();
    let layout = DirectSumLayout::new(g.space(), m.space());
    let n = layout.dim();
    let mut e = LieSuperAlgebra::abelian(f, layout.space.clone());
    let gs = g.space();
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            let v = layout.join(g.bracket_basis(i, j), &cocycle(i, j));
            e.set_bracket_raw(layout.first[i], layout.first[j], v);
        }
        for a in 0..m.dim() {
            // [(x_i,0),(0,m_a)] = (0, x_i·m_a)
            let xm = m.act(i, &vec_ops::unit(m.dim(), a));
            let v = layout.join(&vec![0; g.dim()], &xm);
            let sign = gs.parity(i).koszul(m.space().parity(a));
            let partner = vec_ops::scale(f, f.neg(f.sign(sign)), &v);
            e.set_bracket_raw(layout.first[i], layout.second[a], v);
            e.set_bracket_raw(layout.second[a], layout.first[i], partner);
        }
    }
    for i in gs.even_indices() {
        let v = layout.join(g.pmap_basis(i), &vec![0; m.dim()]);
        e.set_pmap(layout.first[i], v);
    }
    debug_assert_eq!(e.dim(), n);
    (e, layout)
}

/// The trivial extension `g ⋉ M` with M strongly abelian.
pub fn semidirect(g: &LieSuperAlgebra, m: &Representation) -> (LieSuperAlgebra, DirectSumLayout) {
    let zero = vec![0u32; m.dim()];
    extension_algebra(g, m, &|_, _| zero.clone())
}
