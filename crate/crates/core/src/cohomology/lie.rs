use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gflin::{Field, MatGF};
use crate::superalg::{LieSuperAlgebra, Parity, Representation};

use super::space::CochainBasis;

/// Puts a tuple of basis indices in canonical order (ascending, so evens
/// first) and returns the sign picked up by super-alternation, or `None` when
/// an even index repeats and the value is zero.
pub fn canonicalize(g: &LieSuperAlgebra, args: &[usize]) -> Option<(bool, Vec<usize>)> {
    let sp = g.space();
    let mut v = args.to_vec();
    let mut negative = false;
    // bubble sort, one adjacent swap at a time
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] > v[j + 1] {
                // f(..,a,b,..) = −(−1)^{|a||b|} f(..,b,a,..)
                if sp.parity(v[j]).koszul(sp.parity(v[j + 1])) == 0 {
                    negative = !negative;
                }
                v.swap(j, j + 1);
            }
        }
    }
    for w in v.windows(2) {
        if w[0] == w[1] && sp.parity(w[0]) == Parity::Even {
            return None;
        }
    }
    Some((negative, v))
}

/// Canonical n-tuples: strictly increasing even indices, then weakly
/// increasing odd indices.
fn canonical_tuples(g: &LieSuperAlgebra, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let dim = g.dim();
    let n_even = g.n_even();
    fn rec(
        start: usize,
        left: usize,
        dim: usize,
        n_even: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..dim {
            cur.push(i);
            // an even index may not repeat; odd ones may
            let next = if i < n_even { i + 1 } else { i };
            rec(next, left - 1, dim, n_even, cur, out);
            cur.pop();
        }
    }
    rec(0, n, dim, n_even, &mut Vec::new(), &mut out);
    out
}

/// Even cochains on `Λ^{n0} g_0 ⊗ S^{n1} g_1` with values in M.
#[derive(Clone, Debug)]
pub struct LieCochainSpace {
    pub basis: CochainBasis,
}

impl LieCochainSpace {
    pub fn new(g: &LieSuperAlgebra, m: &Representation, n: usize) -> Self {
        let sp = g.space().clone();
        let tuples = canonical_tuples(g, n);
        let parity =
            move |t: &[usize]| Parity::from_bit(t.iter().map(|&i| sp.parity(i).bit()).sum());
        LieCochainSpace {
            basis: CochainBasis::new(n, tuples, parity, m.space()),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// `f(x_{a_1}, ..., x_{a_n})` for arbitrary basis arguments.
    pub fn eval(&self, g: &LieSuperAlgebra, m_dim: usize, f: &[u32], args: &[usize]) -> Vec<u32> {
        let fld = g.field();
        match canonicalize(g, args) {
            None => vec![0; m_dim],
            Some((neg, t)) => {
                let v = self.basis.value(f, &t, m_dim);
                if neg {
                    v.into_iter().map(|c| fld.neg(c)).collect()
                } else {
                    v
                }
            }
        }
    }

    /// `f(u_1, ..., u_n)` for arbitrary vectors of g, by multilinearity.
    pub fn eval_vectors(
        &self,
        g: &LieSuperAlgebra,
        m_dim: usize,
        f: &[u32],
        args: &[&[u32]],
    ) -> Vec<u32> {
        let mut out = vec![0u32; m_dim];
        let mut idx = vec![0usize; args.len()];
        #[allow(clippy::too_many_arguments)]
        fn rec(
            k: usize,
            coef: u32,
            idx: &mut Vec<usize>,
            args: &[&[u32]],
            this: &LieCochainSpace,
            g: &LieSuperAlgebra,
            m_dim: usize,
            f: &[u32],
            out: &mut Vec<u32>,
        ) {
            let fld = g.field();
            if k == args.len() {
                let v = this.eval(g, m_dim, f, idx);
                crate::gflin::vec_ops::axpy(fld, out, coef, &v);
                return;
            }
            for (i, &a) in args[k].iter().enumerate() {
                if a != 0 {
                    idx[k] = i;
                    rec(k + 1, fld.mul(coef, a), idx, args, this, g, m_dim, f, out);
                }
            }
        }
        rec(0, 1, &mut idx, args, self, g, m_dim, f, &mut out);
        out
    }
}

/// Accumulates sparse rows `(row, col) -> coefficient`.
pub(crate) struct RowBuilder {
    field: Field,
    rows: Vec<BTreeMap<usize, u32>>,
}

impl RowBuilder {
    pub fn new(field: Field, rows: usize) -> Self {
        RowBuilder {
            field,
            rows: vec![BTreeMap::new(); rows],
        }
    }

    pub fn add(&mut self, r: usize, c: usize, v: u32) {
        if v == 0 {
            return;
        }
        let e = self.rows[r].entry(c).or_insert(0);
        *e = self.field.add(*e, v);
    }

    pub fn finish(self, cols: usize) -> MatGF {
        let data = self
            .rows
            .into_iter()
            .map(|r| r.into_iter().filter(|e| e.1 != 0).collect())
            .collect();
        MatGF::from_sparse_rows(self.field, cols, data)
    }
}

/// Matrix of `δ_n : C^n → C^{n+1}` from the unified formula.
///
/// Rows are evaluated on every canonical `(n+1)`-tuple and every M-coordinate;
/// a nonzero value on a coordinate of the wrong parity would mean the
/// differential leaves the even cochains and is reported as an error.
pub fn lie_differential(
    g: &LieSuperAlgebra,
    m: &Representation,
    src: &LieCochainSpace,
    dst: &LieCochainSpace,
) -> Result<MatGF> {
    let f = g.field();
    let sp = g.space();
    let md = m.dim();
    let n1 = dst.basis.degree;
    // rows indexed by (tuple position, r) for all r; parity-mismatched rows kept aside
    let tuples = dst.basis.tuples();
    let mut full = RowBuilder::new(f, tuples.len() * md);
    for (ti, x) in tuples.iter().enumerate() {
        let par: Vec<usize> = x.iter().map(|&i| sp.parity(i).bit()).collect();
        let prefix: Vec<usize> = par
            .iter()
            .scan(0, |acc, &b| {
                let before = *acc;
                *acc += b;
                Some(before)
            })
            .collect();
        // action terms: (−1)^{s−1 + |x_s| Σ_{i<s}|x_i|} x_s · f(..x̂_s..)
        for s in 0..n1 {
            let e = s + par[s] * prefix[s];
            let sign = f.sign(e);
            let rest: Vec<usize> = x
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != s)
                .map(|(_, &v)| v)
                .collect();
            let Some((neg, t)) = canonicalize(g, &rest) else {
                continue;
            };
            let sgn = if neg { f.neg(sign) } else { sign };
            let rho = m.action(x[s]);
            for mm in 0..md {
                let Some(col) = src.basis.index_of(&t, mm) else {
                    continue;
                };
                for r in 0..md {
                    let a = rho.get(r, mm);
                    if a != 0 {
                        full.add(ti * md + r, col, f.mul(sgn, a));
                    }
                }
            }
        }
        // bracket terms, s < t (1-indexed exponent s + t equals 0-indexed s + t)
        for s in 0..n1 {
            for t in s + 1..n1 {
                let e = s + t + par[s] * prefix[s] + par[t] * prefix[t] + par[s] * par[t];
                let sign = f.sign(e);
                let rest: Vec<usize> = x
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != s && i != t)
                    .map(|(_, &v)| v)
                    .collect();
                for (k, &c) in g.bracket_basis(x[s], x[t]).iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let mut args = vec![k];
                    args.extend_from_slice(&rest);
                    let Some((neg, tt)) = canonicalize(g, &args) else {
                        continue;
                    };
                    let coef = f.mul(c, if neg { f.neg(sign) } else { sign });
                    for r in 0..md {
                        if let Some(col) = src.basis.index_of(&tt, r) {
                            full.add(ti * md + r, col, coef);
                        }
                    }
                }
            }
        }
    }
    let full = full.finish(src.dim());
    select_even_rows(f, &full, &dst.basis, md, src.dim())
}

/// Keeps rows `(tuple, r)` that are coordinates of the even cochain space,
/// checking that all others vanish.
pub(crate) fn select_even_rows(
    f: Field,
    full: &MatGF,
    dst: &CochainBasis,
    md: usize,
    cols: usize,
) -> Result<MatGF> {
    let mut data = vec![Vec::new(); dst.dim()];
    for (ti, t) in dst.tuples().iter().enumerate() {
        for r in 0..md {
            let row = full.row(ti * md + r);
            match dst.index_of(t, r) {
                Some(i) => data[i] = row.to_vec(),
                None if !row.is_empty() => {
                    return Err(Error::InvariantViolation(format!(
                        "differential has a component of the wrong parity at tuple {t:?}, coordinate {r}"
                    )))
                }
                None => {}
            }
        }
    }
    Ok(MatGF::from_sparse_rows(f, cols, data))
}

/// Cochain spaces `C^0..C^{top+1}` and differentials `δ_0..δ_top`.
#[derive(Clone, Debug)]
pub struct LieComplex {
    pub spaces: Vec<LieCochainSpace>,
    pub deltas: Vec<MatGF>,
}

impl LieComplex {
    pub fn new(g: &LieSuperAlgebra, m: &Representation, top: usize) -> Result<Self> {
        let spaces: Vec<LieCochainSpace> = (0..=top + 1)
            .map(|n| LieCochainSpace::new(g, m, n))
            .collect();
        let deltas = (0..=top)
            .map(|n| lie_differential(g, m, &spaces[n], &spaces[n + 1]))
            .collect::<Result<Vec<_>>>()?;
        Ok(LieComplex { spaces, deltas })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalg::SuperSpace;

    #[test]
    fn canonical_signs() {
        let f = Field::new(3).unwrap();
        let sp =
            SuperSpace::new(vec!["a".into(), "b".into()], vec!["y".into(), "w".into()]).unwrap();
        let g = LieSuperAlgebra::abelian(f, sp);
        assert_eq!(canonicalize(&g, &[1, 0]), Some((true, vec![0, 1])));
        assert_eq!(canonicalize(&g, &[0, 0]), None);
        assert_eq!(canonicalize(&g, &[2, 2]), Some((false, vec![2, 2])));
        assert_eq!(canonicalize(&g, &[3, 2]), Some((false, vec![2, 3])));
        assert_eq!(canonicalize(&g, &[2, 0]), Some((true, vec![0, 2])));
        assert_eq!(canonical_tuples(&g, 2).len(), 1 + 2 * 2 + 3);
    }
}
