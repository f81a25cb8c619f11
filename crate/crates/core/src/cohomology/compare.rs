use crate::envelope::UAlgebra;
use crate::error::Result;
use crate::gflin::{self, Field, MatGF};
use crate::superalg::{LieSuperAlgebra, Representation};

use super::assoc::AssocCochainSpace;
use super::lie::{LieCochainSpace, RowBuilder};
use super::result::{CohomologyResult, Kind};

/// `(−1)^{σ̄(1)+…+σ̄(n)}` with `σ̄(i) = #{j < n0 : j ∉ σ(0..i), j < σ(i)}`
/// (zero-indexed), returned as `true` when the sign is negative.
pub fn sgn_marked(sigma: &[usize], n0: usize) -> bool {
    let mut used = vec![false; sigma.len()];
    let mut total = 0usize;
    for &s in sigma {
        total += (0..n0.min(s)).filter(|&j| !used[j]).count();
        used[s] = true;
    }
    total % 2 == 1
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Matrix of the map sending an associative cochain `c` to the Lie-type
/// cochain `f'(x_1..x_n) = Σ_σ sgn_marked(σ, n0) c(x_σ(1), …, x_σ(n))`.
pub fn comparison_matrix(
    g: &LieSuperAlgebra,
    u: &UAlgebra,
    lie: &LieCochainSpace,
    assoc: &AssocCochainSpace,
) -> MatGF {
    let f = g.field();
    // aug-ideal index of each generator
    let gen_aug: Vec<usize> = (0..g.dim())
        .map(|i| {
            let mono = u.generator(i).terms().next().expect("generator").0.clone();
            u.basis_index(&mono).expect("generator monomial") - 1
        })
        .collect();
    let n = lie.basis.degree;
    let perms = permutations(n);
    let mut rows = RowBuilder::new(f, lie.dim());
    for (ri, (t, r)) in lie.basis.entries().iter().enumerate() {
        let n0 = t.iter().filter(|&&i| i < g.n_even()).count();
        for sigma in &perms {
            let args: Vec<usize> = sigma.iter().map(|&s| gen_aug[t[s]]).collect();
            if let Some(col) = assoc.basis.index_of(&args, *r) {
                let c = if sgn_marked(sigma, n0) { f.neg(1) } else { 1 };
                rows.add(ri, col, c);
            }
        }
    }
    rows.finish(assoc.dim())
}

/// Lie 1-cocycles with `x^{p−1}·f(x) = f(x^[p])`, imposed on each even basis
/// vector and each pairwise sum of them, modulo coboundaries.
pub fn h1_star_via_pmap_condition(
    g: &LieSuperAlgebra,
    m: &Representation,
    c1: &LieCochainSpace,
    delta0: &MatGF,
    delta1: &MatGF,
) -> Result<CohomologyResult> {
    let f = g.field();
    let n = g.dim();
    let md = m.dim();
    let mut probes: Vec<Vec<u32>> = (0..g.n_even())
        .map(|i| gflin::vec_ops::unit(n, i))
        .collect();
    for i in 0..g.n_even() {
        for j in i + 1..g.n_even() {
            let mut v = vec![0u32; n];
            v[i] = 1;
            v[j] = 1;
            probes.push(v);
        }
    }
    let mut rows: Vec<Vec<(usize, u32)>> = Vec::new();
    for v in &probes {
        let rho = m.action_of(f, v).pow(f.p() as u64 - 1);
        let vp = g.pmap_apply(v);
        // row r of   ρ(v)^{p−1} f(v) − f(v^[p])   as a functional on C^1
        let mut b = RowBuilder::new(f, md);
        for (col, (t, mm)) in c1.basis.entries().iter().enumerate() {
            let x = t[0];
            for r in 0..md {
                let a = f.mul(v[x], rho.get(r, *mm));
                b.add(r, col, a);
                if *mm == r {
                    b.add(r, col, f.neg(vp[x]));
                }
            }
        }
        rows.extend(b.finish(c1.dim()).sparse_rows().iter().cloned());
    }
    let cond = MatGF::from_sparse_rows(f, c1.dim(), rows);
    let stacked = MatGF::vstack(f, c1.dim(), &[delta1, &cond])?;
    let z = gflin::nullspace(&stacked);
    let b = gflin::image(delta0);
    CohomologyResult::new(1, Kind::Restricted, z, b)
}

/// `f ↦ f'` on cohomology coordinates: the matrix from one representative
/// basis to another through a cochain map.
pub fn induced_map(map: &MatGF, src: &CohomologyResult, dst: &CohomologyResult) -> Result<MatGF> {
    let f: Field = map.field();
    let cols = src
        .reps
        .iter()
        .map(|r| dst.class_coords(&map.mul_vec(r)))
        .collect::<Result<Vec<_>>>()?;
    Ok(MatGF::from_columns(f, dst.dim(), &cols))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classical_sign(s: &[usize]) -> bool {
        let mut inv = 0;
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                if s[i] > s[j] {
                    inv += 1;
                }
            }
        }
        inv % 2 == 1
    }

    #[test]
    fn marked_sign_limits() {
        for s in permutations(3) {
            assert_eq!(sgn_marked(&s, 3), classical_sign(&s));
            assert!(!sgn_marked(&s, 0));
        }
        assert!(!sgn_marked(&[0, 1, 2], 2));
    }
}
