use crate::error::{Error, Result};
use crate::gflin::{vec_ops, Field, MatGF};

use super::report::{Axiom, ValidationReport};
use super::space::SuperSpace;

/// A finite-dimensional Lie superalgebra with structure constants and a
/// p-map table on the even basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSuperAlgebra {
    field: Field,
    space: SuperSpace,
    /// `bracket[i][j]` is `[x_i, x_j]` in basis coordinates
    bracket: Vec<Vec<Vec<u32>>>,
    /// `pmap[i]` is `x_i^[p]` for even `i`
    pmap: Vec<Vec<u32>>,
}

impl LieSuperAlgebra {
    /// Abelian algebra with zero p-map.
    pub fn abelian(field: Field, space: SuperSpace) -> Self {
        let n = space.dim();
        let bracket = vec![vec![vec![0; n]; n]; n];
        let pmap = vec![vec![0; n]; space.n_even()];
        LieSuperAlgebra {
            field,
            space,
            bracket,
            pmap,
        }
    }

    pub fn new(
        field: Field,
        space: SuperSpace,
        bracket: Vec<Vec<Vec<u32>>>,
        pmap: Vec<Vec<u32>>,
    ) -> Result<Self> {
        let n = space.dim();
        let shape_ok = bracket.len() == n
            && bracket
                .iter()
                .all(|r| r.len() == n && r.iter().all(|v| v.len() == n))
            && pmap.len() == space.n_even()
            && pmap.iter().all(|v| v.len() == n);
        if !shape_ok {
            return Err(Error::DimensionMismatch(
                "structure constant table shape".into(),
            ));
        }
        let p = field.p();
        let bracket = bracket
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|v| v.into_iter().map(|x| x % p).collect())
                    .collect()
            })
            .collect();
        let pmap = pmap
            .into_iter()
            .map(|v| v.into_iter().map(|x| x % p).collect())
            .collect();
        Ok(LieSuperAlgebra {
            field,
            space,
            bracket,
            pmap,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn n_even(&self) -> usize {
        self.space.n_even()
    }

    /// Sets `[x_i, x_j] = v` together with its super-skew partner.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: Vec<u32>) {
        let f = self.field;
        let sign = self.space.parity(i).koszul(self.space.parity(j));
        // [x_j, x_i] = -(-1)^{|i||j|} [x_i, x_j]
        let partner = vec_ops::scale(f, f.neg(f.sign(sign)), &v);
        self.bracket[i][j] = v;
        self.bracket[j][i] = partner;
    }

    /// Sets one entry without touching the partner (used to build broken inputs).
    pub fn set_bracket_raw(&mut self, i: usize, j: usize, v: Vec<u32>) {
        self.bracket[i][j] = v;
    }

    pub fn set_pmap(&mut self, i: usize, v: Vec<u32>) {
        self.pmap[i] = v;
    }

    #[inline]
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[u32] {
        &self.bracket[i][j]
    }

    pub fn pmap_basis(&self, i: usize) -> &[u32] {
        &self.pmap[i]
    }

    pub fn pmap_table(&self) -> &[Vec<u32>] {
        &self.pmap
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.iter().flatten().all(|v| vec_ops::is_zero(v))
    }

    /// Bilinear extension of the bracket.
    pub fn bracket(&self, u: &[u32], v: &[u32]) -> Vec<u32> {
        let f = self.field;
        let n = self.dim();
        let mut out = vec![0u32; n];
        for (i, &a) in u.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in v.iter().enumerate() {
                if b != 0 {
                    vec_ops::axpy(f, &mut out, f.mul(a, b), &self.bracket[i][j]);
                }
            }
        }
        out
    }

    /// Matrix of `ad(v)`, acting on column vectors.
    pub fn ad(&self, v: &[u32]) -> MatGF {
        let n = self.dim();
        let cols: Vec<Vec<u32>> = (0..n)
            .map(|j| self.bracket(v, &vec_ops::unit(n, j)))
            .collect();
        MatGF::from_columns(self.field, n, &cols)
    }

    pub fn ad_basis(&self, i: usize) -> MatGF {
        self.ad(&vec_ops::unit(self.dim(), i))
    }

    /// `s_1(x,y), ..., s_{p-1}(x,y)` where `i s_i` is the coefficient of
    /// `λ^{i-1}` in `ad(λx + y)^{p-1}(x)`.
    pub fn jacobson_si(&self, x: &[u32], y: &[u32]) -> Vec<Vec<u32>> {
        let f = self.field;
        let p = f.p() as usize;
        let n = self.dim();
        // poly[k] is the λ^k coefficient
        let mut poly = vec![vec![0u32; n]; p];
        poly[0] = x.to_vec();
        for _ in 0..p - 1 {
            let mut next = vec![vec![0u32; n]; p];
            for k in 0..p {
                if vec_ops::is_zero(&poly[k]) {
                    continue;
                }
                let by = self.bracket(y, &poly[k]);
                vec_ops::axpy(f, &mut next[k], 1, &by);
                if k + 1 < p {
                    let bx = self.bracket(x, &poly[k]);
                    vec_ops::axpy(f, &mut next[k + 1], 1, &bx);
                }
            }
            poly = next;
        }
        (1..p)
            .map(|i| vec_ops::scale(f, f.inv(i as u32), &poly[i - 1]))
            .collect()
    }

    /// `v^[p]` for an even vector, folding axiom (c) left over ascending basis index.
    pub fn pmap_apply(&self, v: &[u32]) -> Vec<u32> {
        self.pmap_fold(v, 0..self.n_even())
    }

    /// `v^[p]` folding over the given even basis order.
    pub fn pmap_fold(&self, v: &[u32], order: impl IntoIterator<Item = usize>) -> Vec<u32> {
        let f = self.field;
        let n = self.dim();
        debug_assert!(self.space.is_even_vector(v), "p-map of a non-even vector");
        let mut acc = vec![0u32; n];
        let mut acc_p = vec![0u32; n];
        for i in order {
            let a = v[i];
            if a == 0 {
                continue;
            }
            let term = vec_ops::scale(f, a, &vec_ops::unit(n, i));
            let term_p = vec_ops::scale(f, f.pow(a, f.p() as u64), &self.pmap[i]);
            if !vec_ops::is_zero(&acc) {
                for s in self.jacobson_si(&acc, &term) {
                    vec_ops::axpy(f, &mut acc_p, 1, &s);
                }
            }
            vec_ops::axpy(f, &mut acc_p, 1, &term_p);
            vec_ops::axpy(f, &mut acc, 1, &term);
        }
        acc_p
    }

    /// Parity additivity, super skew-symmetry and the super Jacobi identity.
    pub fn validate(&self) -> ValidationReport {
        let f = self.field;
        let n = self.dim();
        let sp = &self.space;
        let mut rep = ValidationReport::default();
        for i in 0..n {
            for j in 0..n {
                let target = sp.parity(i).add(sp.parity(j));
                for (k, &c) in self.bracket[i][j].iter().enumerate() {
                    if c != 0 && sp.parity(k) != target {
                        rep.push(
                            Axiom::ParityAdditivity,
                            vec![i, j, k],
                            format!(
                                "[{},{}] has a component on {} of the wrong parity",
                                sp.name(i),
                                sp.name(j),
                                sp.name(k)
                            ),
                        );
                    }
                }
                if j >= i {
                    let s = f.neg(f.sign(sp.parity(i).koszul(sp.parity(j))));
                    if self.bracket[j][i] != vec_ops::scale(f, s, &self.bracket[i][j]) {
                        rep.push(
                            Axiom::SkewSymmetry,
                            vec![i, j],
                            format!(
                                "[{b},{a}] != -(-1)^(|{a}||{b}|) [{a},{b}]",
                                a = sp.name(i),
                                b = sp.name(j)
                            ),
                        );
                    }
                }
            }
        }
        // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ei = vec_ops::unit(n, i);
                    let ej = vec_ops::unit(n, j);
                    let lhs = self.bracket(&ei, &self.bracket[j][k]);
                    let mut rhs = self.bracket(&self.bracket[i][j], &vec_ops::unit(n, k));
                    let t = self.bracket(&ej, &self.bracket[i][k]);
                    vec_ops::axpy(f, &mut rhs, f.sign(sp.parity(i).koszul(sp.parity(j))), &t);
                    if lhs != rhs {
                        rep.push(
                            Axiom::Jacobi,
                            vec![i, j, k],
                            format!(
                                "Jacobi fails on ({}, {}, {})",
                                sp.name(i),
                                sp.name(j),
                                sp.name(k)
                            ),
                        );
                    }
                }
            }
        }
        rep
    }

    /// The restricted axioms: even images, `ad(x^[p]) = ad(x)^p`, and order
    /// independence of the additivity expansion on even pairs.
    pub fn validate_pmap(&self) -> ValidationReport {
        let n = self.dim();
        let n0 = self.n_even();
        let sp = &self.space;
        let p = self.field.p() as u64;
        let mut rep = ValidationReport::default();
        for i in 0..n0 {
            if !sp.is_even_vector(&self.pmap[i]) {
                rep.push(
                    Axiom::PmapParity,
                    vec![i],
                    format!("{}^[p] has odd components", sp.name(i)),
                );
            }
            let lhs = self.ad(&self.pmap[i]);
            let rhs = self.ad_basis(i).pow(p);
            for j in 0..n {
                if lhs.column(j) != rhs.column(j) {
                    rep.push(
                        Axiom::PmapAdjoint,
                        vec![i, j],
                        format!(
                            "[{x}^[p], {y}] != (ad {x})^p ({y})",
                            x = sp.name(i),
                            y = sp.name(j)
                        ),
                    );
                }
            }
        }
        for i in 0..n0 {
            for j in i + 1..n0 {
                let mut v = vec![0u32; n];
                v[i] = 1;
                v[j] = 1;
                if self.pmap_fold(&v, [i, j]) != self.pmap_fold(&v, [j, i]) {
                    rep.push(
                        Axiom::PmapAdditivity,
                        vec![i, j],
                        format!(
                            "({a}+{b})^[p] depends on the expansion order",
                            a = sp.name(i),
                            b = sp.name(j)
                        ),
                    );
                }
            }
        }
        rep
    }

    pub fn validate_all(&self) -> ValidationReport {
        let mut r = self.validate();
        r.merge(self.validate_pmap());
        r
    }

    pub fn check_vector(&self, v: &[u32]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in a {}-dim algebra",
                v.len(),
                self.dim()
            )));
        }
        Ok(())
    }
}
