use std::fmt;

use super::echelon::Echelon;
use super::field::Field;
use super::matrix::MatGF;
use crate::error::{Error, Result};

/// A linear subspace of GF(p)^n held by its canonical RREF basis.
///
/// Two subspaces are equal exactly when their echelon bases are identical,
/// so `==` is the exactness test used throughout.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: MatGF,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: MatGF::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: MatGF::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given dense vectors.
    pub fn from_vectors(
        field: Field,
        ambient: usize,
        vectors: impl IntoIterator<Item = Vec<u32>>,
    ) -> Self {
        let mut ech = Echelon::new(field, ambient);
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length");
            ech.insert_dense(v);
        }
        let (basis, pivots) = ech.into_rref();
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn from_sparse_rows(field: Field, ambient: usize, rows: &[Vec<(usize, u32)>]) -> Self {
        let mut ech = Echelon::new(field, ambient);
        for r in rows {
            ech.insert_sparse(r);
        }
        let (basis, pivots) = ech.into_rref();
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    /// Coordinate subspace spanned by the given standard basis vectors.
    pub fn coordinate(
        field: Field,
        ambient: usize,
        coords: impl IntoIterator<Item = usize>,
    ) -> Self {
        let rows: Vec<Vec<(usize, u32)>> = coords.into_iter().map(|c| vec![(c, 1)]).collect();
        Self::from_sparse_rows(field, ambient, &rows)
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Basis rows in reduced row echelon form.
    pub fn basis(&self) -> &MatGF {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u32>> {
        self.basis.to_dense()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        self.field().check_same(other.field())?;
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of GF(p)^{} and GF(p)^{}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    /// Remainder of `v` after reduction by the echelon basis (zero iff `v` is in the span).
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field();
        let mut acc = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let s = acc[pc];
            if s != 0 {
                let ns = f.neg(s);
                for &(c, b) in self.basis.row(i) {
                    acc[c] = f.mul_add(acc[c], ns, b);
                }
            }
        }
        acc
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length");
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis_vectors().iter().all(|v| other.contains(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        // In RREF the coordinate on basis row i is the entry at pivot i.
        let coords: Vec<u32> = self.pivots.iter().map(|&pc| v[pc]).collect();
        let f = self.field();
        let mut recon = vec![0u32; self.ambient];
        for (i, &c) in coords.iter().enumerate() {
            if c != 0 {
                for &(col, b) in self.basis.row(i) {
                    recon[col] = f.mul_add(recon[col], c, b);
                }
            }
        }
        (recon == v).then_some(coords)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut rows = self.basis.sparse_rows().to_vec();
        rows.extend(other.basis.sparse_rows().iter().cloned());
        Ok(Subspace::from_sparse_rows(
            self.field(),
            self.ambient,
            &rows,
        ))
    }

    /// Intersection via the nullspace of the stacked bases `[A^T | -B^T]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let f = self.field();
        let (da, db) = (self.dim(), other.dim());
        let at = self.basis.transpose();
        let bt = other.basis.transpose().scale(f.neg(1));
        let stacked = at.hstack(&bt)?;
        let kernel = super::nullspace(&stacked);
        let vectors = kernel.basis_vectors().into_iter().map(|k| {
            let mut v = vec![0u32; self.ambient];
            for (i, &c) in k[..da].iter().enumerate() {
                if c != 0 {
                    for &(col, b) in self.basis.row(i) {
                        v[col] = f.mul_add(v[col], c, b);
                    }
                }
            }
            debug_assert_eq!(k.len(), da + db);
            v
        });
        Ok(Subspace::from_vectors(
            f,
            self.ambient,
            vectors.collect::<Vec<_>>(),
        ))
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok(self == other)
    }

    /// Some vector of `self` that is not in `other`, if any (a witness of non-inclusion).
    pub fn witness_outside(&self, other: &Subspace) -> Option<Vec<u32>> {
        self.basis_vectors()
            .into_iter()
            .find(|v| !other.contains(v))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in {}; basis {:?})",
            self.dim(),
            self.ambient,
            self.basis.to_dense()
        )
    }
}

/// Coordinates with respect to an arbitrary list of linearly independent vectors.
///
/// Each generator is tagged with a unit vector while it is echelonized, so the
/// tags record how the reduced rows combine the original generators.
#[derive(Clone, Debug)]
pub struct Coordinates {
    field: Field,
    ambient: usize,
    count: usize,
    ech: Echelon,
}

impl Coordinates {
    pub fn new(field: Field, ambient: usize, generators: &[Vec<u32>]) -> Result<Self> {
        let k = generators.len();
        let mut ech = Echelon::new(field, ambient + k);
        for (i, g) in generators.iter().enumerate() {
            if g.len() != ambient {
                return Err(Error::DimensionMismatch("generator length".into()));
            }
            let mut row = g.clone();
            row.resize(ambient + k, 0);
            row[ambient + i] = 1;
            ech.insert_dense(row);
        }
        let me = Coordinates {
            field,
            ambient,
            count: k,
            ech,
        };
        // independence: no reduced row may have its pivot in the tag block
        for i in 0..k {
            if me.coords(&generators[i]).as_deref() != Some(&super::vec_ops::unit(k, i)[..]) {
                return Err(Error::InvariantViolation(
                    "generators are linearly dependent".into(),
                ));
            }
        }
        Ok(me)
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    /// Coefficients expressing `v` in the generators, or `None` if `v` is outside their span.
    pub fn coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        let mut acc = v.to_vec();
        acc.resize(self.ambient + self.count, 0);
        self.ech.reduce(&mut acc);
        if acc[..self.ambient].iter().any(|&x| x != 0) {
            return None;
        }
        Some(
            acc[self.ambient..]
                .iter()
                .map(|&x| self.field.neg(x))
                .collect(),
        )
    }
}
