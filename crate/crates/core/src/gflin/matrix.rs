use std::fmt;

use super::field::Field;
use crate::error::{Error, Result};

/// A sparse row: `(column, value)` pairs, strictly increasing columns, no zero values.
pub type SparseRow = Vec<(usize, u32)>;

/// Matrix over GF(p) stored as sparse rows.
///
/// Absent entries are zero and stored entries are always nonzero. The
/// bar-complex differentials this is built for have a handful of entries per
/// row, while the small action matrices of representations are cheap either
/// way.
#[derive(Clone, PartialEq, Eq)]
pub struct MatGF {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<SparseRow>,
}

impl MatGF {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        MatGF {
            field,
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let data = (0..n).map(|i| vec![(i, 1)]).collect();
        MatGF {
            field,
            rows: n,
            cols: n,
            data,
        }
    }

    /// Builds a matrix from dense rows; every row must have length `cols`.
    pub fn from_dense(field: Field, rows: usize, cols: usize, dense: &[Vec<u32>]) -> Self {
        assert_eq!(dense.len(), rows, "row count");
        let data = dense
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "row length");
                r.iter()
                    .enumerate()
                    .filter_map(|(c, &v)| {
                        let v = v % field.p();
                        (v != 0).then_some((c, v))
                    })
                    .collect()
            })
            .collect();
        MatGF {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix whose columns are the given dense vectors (each of length `rows`).
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = MatGF::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (r, &v) in col.iter().enumerate() {
                if v != 0 {
                    m.data[r].push((c, v));
                }
            }
        }
        m
    }

    /// Sums duplicate `(row, col)` triplets.
    pub fn from_triplets(
        field: Field,
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, u32)>,
    ) -> Self {
        let mut buckets: Vec<Vec<(usize, u32)>> = vec![Vec::new(); rows];
        for (r, c, v) in triplets {
            assert!(
                r < rows && c < cols,
                "triplet ({r},{c}) out of bounds {rows}x{cols}"
            );
            if v != 0 {
                buckets[r].push((c, v));
            }
        }
        let data = buckets
            .into_iter()
            .map(|b| normalize_row(field, b))
            .collect();
        MatGF {
            field,
            rows,
            cols,
            data,
        }
    }

    pub(crate) fn from_sparse_rows(field: Field, cols: usize, data: Vec<SparseRow>) -> Self {
        MatGF {
            field,
            rows: data.len(),
            cols,
            data,
        }
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[(usize, u32)] {
        &self.data[r]
    }

    pub fn sparse_rows(&self) -> &[SparseRow] {
        &self.data
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        match self.data[r].binary_search_by_key(&c, |&(col, _)| col) {
            Ok(i) => self.data[r][i].1,
            Err(_) => 0,
        }
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        assert!(r < self.rows && c < self.cols);
        let v = v % self.field.p();
        let row = &mut self.data[r];
        match row.binary_search_by_key(&c, |&(col, _)| col) {
            Ok(i) if v == 0 => {
                row.remove(i);
            }
            Ok(i) => row[i].1 = v,
            Err(i) if v != 0 => row.insert(i, (c, v)),
            Err(_) => {}
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<u32>> {
        self.data
            .iter()
            .map(|row| {
                let mut d = vec![0; self.cols];
                for &(c, v) in row {
                    d[c] = v;
                }
                d
            })
            .collect()
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> MatGF {
        let mut data: Vec<SparseRow> = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for &(c, v) in row {
                data[c].push((r, v));
            }
        }
        MatGF {
            field: self.field,
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "mul_vec length");
        let f = self.field;
        self.data
            .iter()
            .map(|row| row.iter().fold(0, |acc, &(c, a)| f.mul_add(acc, a, v[c])))
            .collect()
    }

    pub fn mul(&self, other: &MatGF) -> Result<MatGF> {
        self.field.check_same(other.field)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let mut acc = vec![0u32; other.cols];
        let mut touched = Vec::new();
        let data = self
            .data
            .iter()
            .map(|row| {
                for &(k, a) in row {
                    for &(c, b) in &other.data[k] {
                        if acc[c] == 0 {
                            touched.push(c);
                        }
                        acc[c] = f.mul_add(acc[c], a, b);
                    }
                }
                touched.sort_unstable();
                touched.dedup();
                let out: SparseRow = touched
                    .iter()
                    .filter_map(|&c| {
                        let v = acc[c];
                        acc[c] = 0;
                        (v != 0).then_some((c, v))
                    })
                    .collect();
                touched.clear();
                out
            })
            .collect();
        Ok(MatGF {
            field: f,
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    fn zip_with(&self, other: &MatGF, op: impl Fn(u32, u32) -> u32) -> Result<MatGF> {
        self.field.check_same(other.field)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    let (c, v) = if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                        i += 1;
                        (a[i - 1].0, op(a[i - 1].1, 0))
                    } else if i == a.len() || b[j].0 < a[i].0 {
                        j += 1;
                        (b[j - 1].0, op(0, b[j - 1].1))
                    } else {
                        i += 1;
                        j += 1;
                        (a[i - 1].0, op(a[i - 1].1, b[j - 1].1))
                    };
                    if v != 0 {
                        out.push((c, v));
                    }
                }
                out
            })
            .collect();
        Ok(MatGF {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn add(&self, other: &MatGF) -> Result<MatGF> {
        let f = self.field;
        self.zip_with(other, |a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &MatGF) -> Result<MatGF> {
        let f = self.field;
        self.zip_with(other, |a, b| f.sub(a, b))
    }

    pub fn scale(&self, s: u32) -> MatGF {
        let f = self.field;
        let s = s % f.p();
        let data = if s == 0 {
            vec![Vec::new(); self.rows]
        } else {
            self.data
                .iter()
                .map(|row| row.iter().map(|&(c, v)| (c, f.mul(v, s))).collect())
                .collect()
        };
        MatGF {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Square-matrix power by repeated squaring.
    pub fn pow(&self, mut k: u64) -> MatGF {
        assert_eq!(self.rows, self.cols, "pow of non-square matrix");
        let mut base = self.clone();
        let mut acc = MatGF::identity(self.field, self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("square");
            }
            base = base.mul(&base).expect("square");
            k >>= 1;
        }
        acc
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(field: Field, cols: usize, blocks: &[&MatGF]) -> Result<MatGF> {
        let mut data = Vec::new();
        for b in blocks {
            field.check_same(b.field)?;
            if b.cols != cols {
                return Err(Error::DimensionMismatch(format!(
                    "vstack: {} vs {cols} columns",
                    b.cols
                )));
            }
            data.extend(b.data.iter().cloned());
        }
        Ok(MatGF {
            field,
            rows: data.len(),
            cols,
            data,
        })
    }

    /// Block `[self | other]`.
    pub fn hstack(&self, other: &MatGF) -> Result<MatGF> {
        self.field.check_same(other.field)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row counts".into()));
        }
        let off = self.cols;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                a.iter()
                    .copied()
                    .chain(b.iter().map(|&(c, v)| (c + off, v)))
                    .collect()
            })
            .collect();
        Ok(MatGF {
            field: self.field,
            rows: self.rows,
            cols: self.cols + other.cols,
            data,
        })
    }

    /// Selects the given columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> MatGF {
        let mut pos = vec![usize::MAX; self.cols];
        for (i, &c) in cols.iter().enumerate() {
            pos[c] = i;
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut r: SparseRow = row
                    .iter()
                    .filter(|(c, _)| pos[*c] != usize::MAX)
                    .map(|&(c, v)| (pos[c], v))
                    .collect();
                r.sort_unstable_by_key(|e| e.0);
                r
            })
            .collect();
        MatGF {
            field: self.field,
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }
}

/// Sorts a row by column, merges duplicates and drops zeros.
pub(crate) fn normalize_row(field: Field, mut row: Vec<(usize, u32)>) -> SparseRow {
    row.sort_unstable_by_key(|e| e.0);
    let mut out: SparseRow = Vec::with_capacity(row.len());
    for (c, v) in row {
        let v = v % field.p();
        match out.last_mut() {
            Some(last) if last.0 == c => last.1 = field.add(last.1, v),
            _ => out.push((c, v)),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

impl fmt::Debug for MatGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "MatGF {}x{} over GF({})",
            self.rows,
            self.cols,
            self.field.p()
        )?;
        if self.rows * self.cols <= 400 {
            for row in self.to_dense() {
                writeln!(f, "  {:?}", row)?;
            }
        } else {
            writeln!(f, "  ({} nonzeros)", self.nnz())?;
        }
        Ok(())
    }
}


#[derive(serde::Serialize, serde::Deserialize)]
struct DenseForm {
    p: u32,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<u32>>,
}

impl serde::Serialize for MatGF {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DenseForm {
            p: self.field.p(),
            rows: self.rows,
            cols: self.cols,
            entries: self.to_dense(),
        }
        .serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for MatGF {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let form = DenseForm::deserialize(d)?;
        let field = Field::new(form.p).map_err(D::Error::custom)?;
        if form.entries.len() != form.rows || form.entries.iter().any(|r| r.len() != form.cols) {
            return Err(D::Error::custom(
                "matrix entries do not match the stated shape",
            ));
        }
        Ok(MatGF::from_dense(
            field,
            form.rows,
            form.cols,
            &form.entries,
        ))
    }
}
