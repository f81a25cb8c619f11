use crate::error::{Error, Result};
use crate::gflin::{self, vec_ops, Field, MatGF, Subspace};

use super::algebra::LieSuperAlgebra;
use super::report::{Axiom, ValidationReport};
use super::space::SuperSpace;

/// A g-module given by one action matrix per basis element of g.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    space: SuperSpace,
    rho: Vec<MatGF>,
    /// set when a supplied p-map on the module was dropped to make it strongly abelian
    pub coerced_strongly_abelian: bool,
}

impl Representation {
    pub fn new(g: &LieSuperAlgebra, space: SuperSpace, rho: Vec<MatGF>) -> Result<Self> {
        let d = space.dim();
        if rho.len() != g.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for a {}-dim algebra",
                rho.len(),
                g.dim()
            )));
        }
        for m in &rho {
            g.field().check_same(m.field())?;
            if m.rows() != d || m.cols() != d {
                return Err(Error::DimensionMismatch(format!(
                    "action matrix is {}x{}, module has dim {d}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation {
            space,
            rho,
            coerced_strongly_abelian: false,
        })
    }

    pub fn trivial(g: &LieSuperAlgebra, space: SuperSpace) -> Self {
        let d = space.dim();
        let rho = (0..g.dim())
            .map(|_| MatGF::zeros(g.field(), d, d))
            .collect();
        Representation {
            space,
            rho,
            coerced_strongly_abelian: false,
        }
    }

    /// The one-dimensional even trivial module `k`.
    pub fn trivial_k(g: &LieSuperAlgebra) -> Self {
        Self::trivial(g, SuperSpace::new(vec!["m".into()], vec![]).unwrap())
    }

    pub fn adjoint(g: &LieSuperAlgebra) -> Self {
        let rho = (0..g.dim()).map(|i| g.ad_basis(i)).collect();
        Representation {
            space: g.space().clone(),
            rho,
            coerced_strongly_abelian: false,
        }
    }

    /// The dual module `M^*` with `(x·φ)(m) = -(-1)^{|x||φ|} φ(x·m)`.
    pub fn dual(g: &LieSuperAlgebra, m: &Representation) -> Self {
        let k = Representation::trivial_k(g);
        hom_module(g, m, &k).rep
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn field(&self) -> Field {
        self.rho
            .first()
            .map(MatGF::field)
            .unwrap_or_else(|| Field::new(3).unwrap())
    }

    pub fn action(&self, i: usize) -> &MatGF {
        &self.rho[i]
    }

    pub fn actions(&self) -> &[MatGF] {
        &self.rho
    }

    /// `ρ(v)` for a vector of g.
    pub fn action_of(&self, f: Field, v: &[u32]) -> MatGF {
        let d = self.dim();
        let mut out = MatGF::zeros(f, d, d);
        for (i, &a) in v.iter().enumerate() {
            if a != 0 {
                out = out.add(&self.rho[i].scale(a)).expect("same shape");
            }
        }
        out
    }

    /// `x_i · m`
    pub fn act(&self, i: usize, m: &[u32]) -> Vec<u32> {
        self.rho[i].mul_vec(m)
    }

    pub fn is_trivial(&self) -> bool {
        self.rho.iter().all(MatGF::is_zero)
    }

    /// Grading, bracket compatibility and (optionally) `ρ(x)^p = ρ(x^[p])`.
    pub fn validate(&self, g: &LieSuperAlgebra, restricted: bool) -> ValidationReport {
        let f = g.field();
        let gs = g.space();
        let ms = &self.space;
        let mut rep = ValidationReport::default();
        for i in 0..g.dim() {
            for (r, row) in self.rho[i].sparse_rows().iter().enumerate() {
                for &(c, _) in row {
                    if ms.parity(r) != ms.parity(c).add(gs.parity(i)) {
                        rep.push(
                            Axiom::ModuleGrading,
                            vec![i, r, c],
                            format!(
                                "{} sends {} to a component of the wrong parity",
                                gs.name(i),
                                ms.name(c)
                            ),
                        );
                    }
                }
            }
        }
        for i in 0..g.dim() {
            for j in i..g.dim() {
                let lhs = self.action_of(f, g.bracket_basis(i, j));
                let ab = self.rho[i].mul(&self.rho[j]).expect("square");
                let ba = self.rho[j].mul(&self.rho[i]).expect("square");
                let s = f.sign(gs.parity(i).koszul(gs.parity(j)));
                let rhs = ab.sub(&ba.scale(s)).expect("square");
                if lhs != rhs {
                    rep.push(
                        Axiom::ModuleBracket,
                        vec![i, j],
                        format!(
                            "ρ([{a},{b}]) != ρ({a})ρ({b}) - (-1)^(|{a}||{b}|) ρ({b})ρ({a})",
                            a = gs.name(i),
                            b = gs.name(j)
                        ),
                    );
                }
            }
        }
        if restricted {
            for i in gs.even_indices() {
                let lhs = self.rho[i].pow(f.p() as u64);
                let rhs = self.action_of(f, g.pmap_basis(i));
                if lhs != rhs {
                    rep.push(
                        Axiom::ModuleRestricted,
                        vec![i],
                        format!("ρ({x})^p != ρ({x}^[p])", x = gs.name(i)),
                    );
                }
            }
        }
        rep
    }
}

/// `Hom_k(N, K)` as a g-module, with the matrix units as basis.
#[derive(Clone, Debug)]
pub struct HomModule {
    pub rep: Representation,
    /// basis vector `t` is the unit sending `N`-basis `units[t].1` to `K`-basis `units[t].0`
    pub units: Vec<(usize, usize)>,
    pub k_dim: usize,
    pub n_dim: usize,
}

impl HomModule {
    /// The linear map `N → K` with the given coordinates, as a `dim K × dim N` matrix.
    pub fn to_matrix(&self, f: Field, v: &[u32]) -> MatGF {
        let mut m = MatGF::zeros(f, self.k_dim, self.n_dim);
        for (t, &c) in v.iter().enumerate() {
            if c != 0 {
                let (r, s) = self.units[t];
                m.set(r, s, c);
            }
        }
        m
    }

    pub fn from_matrix(&self, m: &MatGF) -> Vec<u32> {
        self.units.iter().map(|&(r, s)| m.get(r, s)).collect()
    }
}

/// `(x·φ)(a) = x·φ(a) − (−1)^{|x||φ|} φ(x·a)`; grading-preserving units are even.
pub fn hom_module(g: &LieSuperAlgebra, n: &Representation, k: &Representation) -> HomModule {
    let f = g.field();
    let (ns, ks) = (n.space(), k.space());
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for r in 0..ks.dim() {
        for s in 0..ns.dim() {
            if ks.parity(r) == ns.parity(s) {
                even.push((r, s));
            } else {
                odd.push((r, s));
            }
        }
    }
    let units: Vec<(usize, usize)> = even.iter().chain(&odd).copied().collect();
    let n_even = even.len();
    let names_e = even
        .iter()
        .map(|&(r, s)| format!("{}<-{}", ks.name(r), ns.name(s)))
        .collect();
    let names_o = odd
        .iter()
        .map(|&(r, s)| format!("{}<-{}", ks.name(r), ns.name(s)))
        .collect();
    let space = SuperSpace::new(names_e, names_o).expect("unit names are unique");
    let hm = HomModule {
        rep: Representation::trivial(g, space),
        units: units.clone(),
        k_dim: ks.dim(),
        n_dim: ns.dim(),
    };
    let mut rho = Vec::with_capacity(g.dim());
    for i in 0..g.dim() {
        let xp = g.space().parity(i);
        let cols: Vec<Vec<u32>> = units
            .iter()
            .enumerate()
            .map(|(t, _)| {
                let phi = hm.to_matrix(f, &vec_ops::unit(units.len(), t));
                let phi_par = if t < n_even { 0 } else { 1 };
                let left = k.action(i).mul(&phi).expect("shape");
                let right = phi.mul(n.action(i)).expect("shape");
                let s = f.sign(xp.bit() * phi_par);
                let out = left.sub(&right.scale(s)).expect("shape");
                hm.from_matrix(&out)
            })
            .collect();
        rho.push(MatGF::from_columns(f, units.len(), &cols));
    }
    HomModule {
        rep: Representation { rho, ..hm.rep },
        units,
        k_dim: hm.k_dim,
        n_dim: hm.n_dim,
    }
}

/// `(M^g, M_0^g)`: the kernel of all action matrices, and its even part.
pub fn invariants(g: &LieSuperAlgebra, m: &Representation) -> (Subspace, Subspace) {
    let f = g.field();
    let d = m.dim();
    let mats: Vec<&MatGF> = m.actions().iter().collect();
    let stacked = MatGF::vstack(f, d, &mats).expect("same width");
    let all = gflin::nullspace(&stacked);
    let even = Subspace::coordinate(f, d, m.space().even_indices());
    let even_inv = all.intersect(&even).expect("same ambient");
    (all, even_inv)
}

/// A p-semilinear map from the even part of g into a subspace of a target
/// space, given by its values on the even basis.
///
/// Over a prime field `a^p = a`, so semilinear and linear maps coincide;
/// [`SemiLinearMap::apply`] still raises coefficients to the p-th power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiLinearMap {
    /// `values[i]` is the image of the i-th even basis vector, in target coordinates
    pub values: Vec<Vec<u32>>,
    pub target_dim: usize,
}

impl SemiLinearMap {
    pub fn zero(source_dim: usize, target_dim: usize) -> Self {
        SemiLinearMap {
            values: vec![vec![0; target_dim]; source_dim],
            target_dim,
        }
    }

    pub fn source_dim(&self) -> usize {
        self.values.len()
    }

    /// Image of the even vector whose first `source_dim` coordinates are `v`.
    pub fn apply(&self, f: Field, v: &[u32]) -> Vec<u32> {
        let mut out = vec![0u32; self.target_dim];
        for (i, val) in self.values.iter().enumerate() {
            vec_ops::axpy(f, &mut out, f.pow(v[i], f.p() as u64), val);
        }
        out
    }

    pub fn add(&self, f: Field, other: &SemiLinearMap) -> SemiLinearMap {
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| vec_ops::add(f, a, b))
            .collect();
        SemiLinearMap {
            values,
            target_dim: self.target_dim,
        }
    }

    pub fn scale(&self, f: Field, s: u32) -> SemiLinearMap {
        let values = self
            .values
            .iter()
            .map(|a| vec_ops::scale(f, s, a))
            .collect();
        SemiLinearMap {
            values,
            target_dim: self.target_dim,
        }
    }

    /// Flattened coordinates `values[i][j]` at position `i * target_dim + j`.
    pub fn flatten(&self) -> Vec<u32> {
        self.values.concat()
    }

    pub fn from_flat(flat: &[u32], source_dim: usize, target_dim: usize) -> Self {
        let values = (0..source_dim)
            .map(|i| flat[i * target_dim..(i + 1) * target_dim].to_vec())
            .collect();
        SemiLinearMap { values, target_dim }
    }
}

/// Basis of `S(V, W)`: the maps `e_i ↦ w_j`, ordered with `i` major.
pub fn semilinear_space(source_dim: usize, w: &Subspace) -> Vec<SemiLinearMap> {
    let ws = w.basis_vectors();
    let mut out = Vec::with_capacity(source_dim * ws.len());
    for i in 0..source_dim {
        for wj in &ws {
            let mut m = SemiLinearMap::zero(source_dim, w.ambient_dim());
            m.values[i] = wj.clone();
            out.push(m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::new(3).unwrap()
    }

    fn a3() -> LieSuperAlgebra {
        let sp = SuperSpace::new(vec!["z".into()], vec!["y".into()]).unwrap();
        let mut g = LieSuperAlgebra::abelian(f3(), sp);
        g.set_bracket(1, 1, vec![1, 0]);
        g
    }

    #[test]
    fn a3_adjoint_invariants() {
        let g = a3();
        let ad = Representation::adjoint(&g);
        assert!(ad.validate(&g, true).is_valid());
        let (inv, inv0) = invariants(&g, &ad);
        assert_eq!(inv.basis_vectors(), vec![vec![1, 0]]);
        assert_eq!(inv0, inv);
    }

    #[test]
    fn hom_into_trivial_is_restricted() {
        let g = a3();
        let ad = Representation::adjoint(&g);
        let k = Representation::trivial_k(&g);
        let hm = hom_module(&g, &ad, &k);
        assert_eq!(hm.rep.dim(), 2);
        assert!(
            hm.rep.validate(&g, true).is_valid(),
            "{}",
            hm.rep.validate(&g, true)
        );
    }

    #[test]
    fn broken_grading_is_reported() {
        let g = a3();
        let mut rho: Vec<MatGF> = Representation::adjoint(&g).actions().to_vec();
        // z acting as an odd map would move z to y
        rho[0].set(1, 0, 1);
        let bad = Representation::new(&g, g.space().clone(), rho).unwrap();
        assert!(bad.validate(&g, false).has(Axiom::ModuleGrading));
    }

    #[test]
    fn semilinear_dimensions() {
        let f = f3();
        assert_eq!(semilinear_space(2, &Subspace::full(f, 1)).len(), 2);
        assert_eq!(semilinear_space(1, &Subspace::zero(f, 3)).len(), 0);
    }
}
