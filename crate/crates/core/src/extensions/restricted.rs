use crate::cohomology::{
    comparison_matrix, AssocCochainSpace, AssocComplex, LieCochainSpace, LieComplex,
};
use crate::envelope::{gamma_map, linear_section_extend, Mode, Monomial, UAlgebra};
use crate::error::{Error, Result};
use crate::gflin::{self, vec_ops, MatGF};
use crate::superalg::{
    invariants, semidirect, LieSuperAlgebra, Representation, SemiLinearMap, ValidationReport,
};

use super::algebra_ext::{ext_unchecked, AlgebraExtension};

/// An extension whose algebra `E` carries a p-map making `φ` restricted.
#[derive(Clone, Debug)]
pub struct RestrictedExtension {
    pub ext: AlgebraExtension,
}

impl RestrictedExtension {
    pub fn algebra(&self) -> &LieSuperAlgebra {
        &self.ext.e
    }

    /// M-component of `(x_i, 0)^[p]` for the even basis vector `x_i` of g.
    pub fn pmap_m_part(&self, i: usize) -> Vec<u32> {
        let pos = self.ext.layout.first[i];
        self.ext.layout.split(self.ext.e.pmap_basis(pos)).1
    }

    pub fn is_strongly_abelian(&self) -> bool {
        let m = &self.ext.m;
        m.space()
            .even_indices()
            .all(|a| vec_ops::is_zero(self.ext.e.pmap_basis(self.ext.layout.second[a])))
    }

    /// Axioms of E plus `φ(e^[p]) = φ(e)^[p]` on the even basis of g.
    pub fn validate(&self) -> ValidationReport {
        let mut rep = self.ext.e.validate_all();
        for i in self.ext.g.space().even_indices() {
            let pos = self.ext.layout.first[i];
            let (gp, _) = self.ext.layout.split(self.ext.e.pmap_basis(pos));
            if gp != self.ext.g.pmap_basis(i) {
                rep.push(
                    crate::superalg::Axiom::PmapAdjoint,
                    vec![i],
                    format!(
                        "projection does not commute with the p-map at {}",
                        self.ext.g.space().name(i)
                    ),
                );
            }
        }
        rep
    }

    fn set_pmap_m_part(&mut self, i: usize, v: &[u32]) {
        let pos = self.ext.layout.first[i];
        let gp = self.ext.g.pmap_basis(i).to_vec();
        let full = self.ext.layout.join(&gp, v);
        self.ext.e.set_pmap(pos, full);
    }
}

/// The semidirect product `g ⋉ M` with M strongly abelian.
pub fn trivial_restricted(g: &LieSuperAlgebra, m: &Representation) -> RestrictedExtension {
    let (e, layout) = semidirect(g, m);
    RestrictedExtension {
        ext: AlgebraExtension {
            g: g.clone(),
            m: m.clone(),
            e,
            layout,
        },
    }
}

/// `e^(p) = e^[p] − g(φ(e))` for a p-semilinear `g : g_0 → M_0^g`.
pub fn twist_pmap(r: &RestrictedExtension, gmap: &SemiLinearMap) -> Result<RestrictedExtension> {
    let g = &r.ext.g;
    let f = g.field();
    let (_, inv0) = invariants(g, &r.ext.m);
    if gmap.source_dim() != g.n_even() || gmap.target_dim != r.ext.m.dim() {
        return Err(Error::DimensionMismatch("semilinear map shape".into()));
    }
    for (i, v) in gmap.values.iter().enumerate() {
        if !inv0.contains(v) {
            return Err(Error::ValueNotInvariant(i));
        }
    }
    let mut out = r.clone();
    for i in g.space().even_indices() {
        let v = vec_ops::sub(f, &r.pmap_m_part(i), &gmap.values[i]);
        out.set_pmap_m_part(i, &v);
    }
    Ok(out)
}

/// Drops the p-map on the even part of M, leaving the rest untouched.
pub fn strongly_abelianize(r: &RestrictedExtension) -> RestrictedExtension {
    let mut out = r.clone();
    let n = out.ext.layout.dim();
    for a in r.ext.m.space().even_indices() {
        out.ext.e.set_pmap(r.ext.layout.second[a], vec![0; n]);
    }
    out
}

/// Which argument slot `x^[p]` occupies in `f_{x^[p]}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FxpReading {
    /// `f_{x^[p]}(x1) = f(x1, x^[p])`
    #[default]
    Standard,
    /// `f(x^[p], x1)`, for comparison only
    Swapped,
}

/// The 1-cochain `k_x + f_{x^[p]}` with
/// `k_x(x1) = Σ_{i<p} x^i · f(x, (ad x)^{p−1−i}(x1))`, for the even basis vector `x`.
pub fn phi_cochain(
    g: &LieSuperAlgebra,
    m: &Representation,
    c1: &LieCochainSpace,
    c2: &LieCochainSpace,
    f: &[u32],
    x: usize,
    reading: FxpReading,
) -> Vec<u32> {
    let fld = g.field();
    let p = fld.p() as usize;
    let n = g.dim();
    let md = m.dim();
    let ex = vec_ops::unit(n, x);
    let ad = g.ad_basis(x);
    let rho = m.action(x);
    let xp = g.pmap_basis(x).to_vec();
    c1.basis.from_values(|t| {
        let x1 = t[0];
        let mut iter_ad = vec![vec_ops::unit(n, x1)];
        for j in 1..p {
            let next = ad.mul_vec(&iter_ad[j - 1]);
            iter_ad.push(next);
        }
        let mut out = vec![0u32; md];
        for i in 0..p {
            let mut v = c2.eval_vectors(g, md, f, &[&ex, &iter_ad[p - 1 - i]]);
            for _ in 0..i {
                v = rho.mul_vec(&v);
            }
            vec_ops::axpy(fld, &mut out, 1, &v);
        }
        let e1 = vec_ops::unit(n, x1);
        let fx = match reading {
            FxpReading::Standard => c2.eval_vectors(g, md, f, &[&e1, &xp]),
            FxpReading::Swapped => c2.eval_vectors(g, md, f, &[&xp, &e1]),
        };
        vec_ops::axpy(fld, &mut out, 1, &fx);
        out
    })
}

/// Matrix of `h ↦ (x ↦ x^{p−1}·h(x) − h(x^[p]))` from 1-cochains to
/// `S(g_0, M)`, flattened as `i * dim M + r`.
pub fn psi_matrix(g: &LieSuperAlgebra, m: &Representation, c1: &LieCochainSpace) -> MatGF {
    let f = g.field();
    let md = m.dim();
    let n0 = g.n_even();
    let powers: Vec<MatGF> = (0..n0).map(|i| m.action(i).pow(f.p() as u64 - 1)).collect();
    let mut trip = Vec::new();
    for (col, (t, mm)) in c1.basis.entries().iter().enumerate() {
        let x = t[0];
        for i in 0..n0 {
            let xp = g.pmap_basis(i);
            for r in 0..md {
                let mut v = 0;
                if x == i {
                    v = powers[i].get(r, *mm);
                }
                if *mm == r {
                    v = f.sub(v, xp[x]);
                }
                if v != 0 {
                    trip.push((i * md + r, col, v));
                }
            }
        }
    }
    MatGF::from_triplets(f, n0 * md, c1.dim(), trip)
}

/// Equips `E_f` with `(x,0)^[p] = (x^[p], ρ(x))` where `x1·ρ(x) = −(k_x + f_{x^[p]})(x1)`.
///
/// With `sigma` given, its values are checked instead of solved for; without
/// it the first echelon solution is used.
pub fn restricted_structure_from_sigma(
    g: &LieSuperAlgebra,
    m: &Representation,
    f: &[u32],
    sigma: Option<&SemiLinearMap>,
) -> Result<RestrictedExtension> {
    let fld = g.field();
    let cx = LieComplex::new(g, m, 2)?;
    if f.len() != cx.spaces[2].dim() {
        return Err(Error::DimensionMismatch("2-cochain length".into()));
    }
    if !vec_ops::is_zero(&cx.deltas[2].mul_vec(f)) {
        return Err(Error::NotACocycle("δf ≠ 0".into()));
    }
    let md = m.dim();
    let m0: Vec<usize> = m.space().even_indices().collect();
    let mut r = RestrictedExtension {
        ext: ext_unchecked(g, m, &cx.spaces[2], f),
    };
    // rows (x1, r), unknowns the even coordinates of ρ(x)
    let mut trip = Vec::new();
    for x1 in 0..g.dim() {
        for (c, &mm) in m0.iter().enumerate() {
            for row in 0..md {
                let a = m.action(x1).get(row, mm);
                if a != 0 {
                    trip.push((x1 * md + row, c, a));
                }
            }
        }
    }
    let a = MatGF::from_triplets(fld, g.dim() * md, m0.len(), trip);
    for x in g.space().even_indices() {
        let k = phi_cochain(
            g,
            m,
            &cx.spaces[1],
            &cx.spaces[2],
            f,
            x,
            FxpReading::Standard,
        );
        let mut rhs = Vec::with_capacity(g.dim() * md);
        for x1 in 0..g.dim() {
            let v = cx.spaces[1].basis.value(&k, &[x1], md);
            rhs.extend(v.into_iter().map(|c| fld.neg(c)));
        }
        let rho_x: Vec<u32> = match sigma {
            Some(s) => {
                let v = s.values[x].clone();
                let ev: Vec<u32> = m0.iter().map(|&i| v[i]).collect();
                if a.mul_vec(&ev) != rhs || m.space().odd_indices().any(|i| v[i] != 0) {
                    return Err(Error::InvariantViolation(format!(
                        "the supplied ρ({}) does not solve the p-map equation",
                        g.space().name(x)
                    )));
                }
                v
            }
            None => {
                let sol = gflin::solve(&a, &rhs)?;
                let mut v = vec![0u32; md];
                for (c, &i) in m0.iter().enumerate() {
                    v[i] = sol[c];
                }
                v
            }
        };
        r.set_pmap_m_part(x, &rho_x);
    }
    r.validate().into_result()?;
    Ok(r)
}

/// Aug-ideal index of `x_i^e` in `u(g)`.
fn power_index(u: &UAlgebra, i: usize, e: u8) -> usize {
    let mono = Monomial::one(u.lie().dim());
    let mut ex = mono.exponents().to_vec();
    ex[u.position_of(i)] = e;
    u.basis_index(&Monomial::from_exponents(&ex))
        .expect("PBW monomial")
        - 1
}

/// The extension with bracket the antisymmetrization of `c` on g and
/// `(x,m)^[p] = (x^[p], x^{p−1}·m + c(x^{p−1}, x))`.
pub fn restricted_ext_from_assoc_2cocycle(
    g: &LieSuperAlgebra,
    m: &Representation,
    u: &UAlgebra,
    acx: &AssocComplex,
    c: &[u32],
) -> Result<RestrictedExtension> {
    if !vec_ops::is_zero(&acx.deltas[2].mul_vec(c)) {
        return Err(Error::NotACocycle("δc ≠ 0 in the bar complex".into()));
    }
    let c2 = LieCochainSpace::new(g, m, 2);
    let f = comparison_matrix(g, u, &c2, &acx.spaces[2]).mul_vec(c);
    let mut r = RestrictedExtension {
        ext: ext_unchecked(g, m, &c2, &f),
    };
    let p = g.field().p() as u8;
    for i in g.space().even_indices() {
        let a = power_index(u, i, p - 1);
        let b = power_index(u, i, 1);
        let v = acx.spaces[2].basis.value(c, &[a, b], m.dim());
        r.set_pmap_m_part(i, &v);
    }
    r.validate().into_result()?;
    Ok(r)
}

/// `c(u, v) = γ(ψ'(u)ψ'(v) − ψ'(uv))` on the aug-ideal basis of `u(g)`, with
/// section `ψ(x) = (x, h(x))` (`h = 0` when `perturb` is `None`).
pub fn assoc_2cocycle_from_restricted_ext(
    r: &RestrictedExtension,
    u: &UAlgebra,
    c2: &AssocCochainSpace,
    perturb: Option<&[u32]>,
) -> Result<Vec<u32>> {
    if !r.is_strongly_abelian() {
        return Err(Error::InvariantViolation(
            "M must be strongly abelian".into(),
        ));
    }
    let g = &r.ext.g;
    let m = &r.ext.m;
    let md = m.dim();
    let layout = &r.ext.layout;
    let order: Vec<usize> = layout.first.iter().chain(&layout.second).copied().collect();
    let ue = UAlgebra::with_order(&r.ext.e, Mode::Restricted, order);
    let c1 = LieCochainSpace::new(g, m, 1);
    let psi = |i: usize| {
        let h = match perturb {
            Some(h) => c1.basis.value(h, &[i], md),
            None => vec![0; md],
        };
        layout.join(&vec_ops::unit(g.dim(), i), &h)
    };
    let psi_prime = linear_section_extend(u, &ue, &psi)?;
    let a = u.aug_ideal_basis().len();
    let mut table = vec![vec![Vec::new(); a]; a];
    for (i, row) in table.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            let lhs = ue.multiply(psi_prime.apply_basis(i + 1), psi_prime.apply_basis(j + 1))?;
            let mut w = lhs;
            for (k, c) in u.mul_basis(i + 1, j + 1)? {
                w = ue.sub(&w, &ue.scale(c, psi_prime.apply_basis(k)));
            }
            *slot = gamma_map(&ue, u, m, g.dim(), &w)?;
        }
    }
    Ok(c2.basis.from_values(|t| table[t[0]][t[1]].clone()))
}

/// Decides whether two restricted structures on the same extension are
/// equivalent: the difference of their p-maps must lie in `Ψ(Z^1)`.
pub fn are_equivalent_restricted(
    e1: &RestrictedExtension,
    e2: &RestrictedExtension,
) -> Result<bool> {
    let (a, b) = (&e1.ext, &e2.ext);
    let n = a.e.dim();
    let same_shape = n == b.e.dim() && a.layout == b.layout && a.g == b.g && a.m == b.m;
    if !same_shape
        || (0..n).any(|i| (0..n).any(|j| a.e.bracket_basis(i, j) != b.e.bracket_basis(i, j)))
    {
        return Err(Error::DifferentUnderlying);
    }
    if !e1.is_strongly_abelian() || !e2.is_strongly_abelian() {
        return Err(Error::InvariantViolation(
            "M must be strongly abelian".into(),
        ));
    }
    let g = &a.g;
    let fld = g.field();
    let mut diff = Vec::new();
    for i in g.space().even_indices() {
        let (g1, m1) = a.layout.split(a.e.pmap_basis(a.layout.first[i]));
        let (g2, m2) = b.layout.split(b.e.pmap_basis(b.layout.first[i]));
        if g1 != g2 {
            return Err(Error::DifferentUnderlying);
        }
        diff.extend(vec_ops::sub(fld, &m1, &m2));
    }
    let cx = LieComplex::new(g, &a.m, 1)?;
    let z1 = gflin::nullspace(&cx.deltas[1]);
    let psi = psi_matrix(g, &a.m, &cx.spaces[1]);
    let im = gflin::Subspace::from_vectors(
        fld,
        psi.rows(),
        z1.basis_vectors()
            .iter()
            .map(|h| psi.mul_vec(h))
            .collect::<Vec<_>>(),
    );
    Ok(im.contains(&diff))
}
