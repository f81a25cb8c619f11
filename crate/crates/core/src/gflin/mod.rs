//! Exact linear algebra over prime fields.
//!
//! Everything downstream (cohomology dimensions, representative cocycles,
//! exactness verdicts) reduces to ranks, nullspaces and comparisons of
//! canonical echelon bases computed here. Elimination is deterministic: the
//! same input always yields the same reduced basis.

mod echelon;
mod field;
mod matrix;
mod subspace;

pub use field::{is_prime, Field};
pub use matrix::{MatGF, SparseRow};
pub use subspace::{Coordinates, Subspace};

pub(crate) use echelon::Echelon;

use crate::error::{Error, Result};

/// Reduced row echelon form, rank and pivot columns.
pub fn rref(m: &MatGF) -> (MatGF, usize, Vec<usize>) {
    let mut ech = Echelon::new(m.field(), m.cols());
    for row in m.sparse_rows() {
        ech.insert_sparse(row);
    }
    let rank = ech.rank();
    let (r, pivots) = ech.into_rref();
    (r, rank, pivots)
}

pub fn rank(m: &MatGF) -> usize {
    let mut ech = Echelon::new(m.field(), m.cols());
    for row in m.sparse_rows() {
        ech.insert_sparse(row);
        if ech.rank() == m.cols() {
            break;
        }
    }
    ech.rank()
}

/// Right kernel `{v : m v = 0}` as a subspace of GF(p)^cols.
pub fn nullspace(m: &MatGF) -> Subspace {
    let field = m.field();
    let (r, _, pivots) = rref(m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &pc in &pivots {
        is_pivot[pc] = true;
    }
    let mut vectors = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u32; n];
        v[free] = 1;
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = field.neg(r.get(i, free));
        }
        vectors.push(v);
    }
    Subspace::from_vectors(field, n, vectors)
}

/// Column space of `m` as a subspace of GF(p)^rows.
pub fn image(m: &MatGF) -> Subspace {
    let t = m.transpose();
    Subspace::from_sparse_rows(m.field(), m.rows(), t.sparse_rows())
}

/// Some `x` with `m x = rhs`; free variables are set to zero, so the answer
/// is the lexicographically first echelon solution.
pub fn solve(m: &MatGF, rhs: &[u32]) -> Result<Vec<u32>> {
    if rhs.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "rhs length {} vs {} rows",
            rhs.len(),
            m.rows()
        )));
    }
    let field = m.field();
    let n = m.cols();
    let mut ech = Echelon::new(field, n + 1);
    for (r, row) in m.sparse_rows().iter().enumerate() {
        let mut full = row.clone();
        if !rhs[r].is_multiple_of(field.p()) {
            full.push((n, rhs[r] % field.p()));
        }
        ech.insert_sparse(&full);
    }
    let (red, pivots) = ech.into_rref();
    if pivots.last() == Some(&n) {
        return Err(Error::NoSolution);
    }
    let mut x = vec![0u32; n];
    for (i, &pc) in pivots.iter().enumerate() {
        x[pc] = red.get(i, n);
    }
    Ok(x)
}

/// Dense vector helpers.
pub mod vec_ops {
    use super::Field;

    pub fn add(f: Field, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
    }

    pub fn sub(f: Field, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect()
    }

    pub fn scale(f: Field, s: u32, a: &[u32]) -> Vec<u32> {
        a.iter().map(|&x| f.mul(s, x)).collect()
    }

    /// `acc += s * a`
    pub fn axpy(f: Field, acc: &mut [u32], s: u32, a: &[u32]) {
        if s == 0 {
            return;
        }
        for (x, &y) in acc.iter_mut().zip(a) {
            *x = f.mul_add(*x, s, y);
        }
    }

    pub fn is_zero(a: &[u32]) -> bool {
        a.iter().all(|&x| x == 0)
    }

    pub fn unit(n: usize, i: usize) -> Vec<u32> {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::new(3).unwrap()
    }

    #[test]
    fn rref_examples() {
        let f = f3();
        let (_, r, _) = rref(&MatGF::zeros(f, 2, 2));
        assert_eq!(r, 0);
        let (m, r, piv) = rref(&MatGF::identity(f, 3));
        assert_eq!((r, piv), (3, vec![0, 1, 2]));
        assert_eq!(m, MatGF::identity(f, 3));
        // row2 = 2*row1 mod 3
        let (_, r, _) = rref(&MatGF::from_dense(f, 2, 2, &[vec![1, 2], vec![2, 1]]));
        assert_eq!(r, 1);
    }

    #[test]
    fn nullspace_examples() {
        let f = f3();
        assert_eq!(nullspace(&MatGF::identity(f, 4)).dim(), 0);
        assert_eq!(nullspace(&MatGF::zeros(f, 2, 3)).dim(), 3);
        let k = nullspace(&MatGF::from_dense(f, 1, 2, &[vec![1, 2]]));
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[1, 1]));
        assert_eq!(k.basis().to_dense(), vec![vec![1, 1]]);
    }

    #[test]
    fn image_examples() {
        let f = f3();
        assert_eq!(image(&MatGF::zeros(f, 3, 2)).dim(), 0);
        assert_eq!(image(&MatGF::identity(f, 3)), Subspace::full(f, 3));
        let im = image(&MatGF::from_dense(f, 2, 1, &[vec![1], vec![2]]));
        assert_eq!(im.dim(), 1);
        assert!(im.contains(&[1, 2]));
    }

    #[test]
    fn solve_examples() {
        let f = f3();
        assert_eq!(solve(&MatGF::identity(f, 2), &[2, 1]).unwrap(), vec![2, 1]);
        assert!(matches!(
            solve(&MatGF::zeros(f, 2, 2), &[1, 0]),
            Err(Error::NoSolution)
        ));
        assert_eq!(solve(&MatGF::zeros(f, 2, 2), &[0, 0]).unwrap(), vec![0, 0]);
        assert!(solve(&MatGF::zeros(f, 2, 2), &[0]).is_err());
    }
}
