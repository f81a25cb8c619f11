//! Incremental reduced row echelon form.
//!
//! Rows are inserted one at a time and the stored basis is kept fully
//! reduced, so reducing a new row touches only pivot rows whose pivot column
//! is present in it. Stored rows start sparse and switch to dense storage once
//! more than a quarter of their entries are nonzero.

use super::field::Field;
use super::matrix::{MatGF, SparseRow};

#[derive(Clone, Debug)]
enum Row {
    Sparse(SparseRow),
    Dense(Vec<u32>),
}

impl Row {
    fn get(&self, c: usize) -> u32 {
        match self {
            Row::Sparse(r) => match r.binary_search_by_key(&c, |e| e.0) {
                Ok(i) => r[i].1,
                Err(_) => 0,
            },
            Row::Dense(d) => d[c],
        }
    }

    fn nnz(&self) -> usize {
        match self {
            Row::Sparse(r) => r.len(),
            Row::Dense(d) => d.iter().filter(|&&v| v != 0).count(),
        }
    }

    /// `acc -= s * self`
    fn sub_scaled_into(&self, field: Field, s: u32, acc: &mut [u32]) {
        let ns = field.neg(s);
        match self {
            Row::Sparse(r) => {
                for &(c, v) in r {
                    acc[c] = field.mul_add(acc[c], ns, v);
                }
            }
            Row::Dense(d) => {
                for (a, &v) in acc.iter_mut().zip(d) {
                    if v != 0 {
                        *a = field.mul_add(*a, ns, v);
                    }
                }
            }
        }
    }

    fn to_sparse(&self) -> SparseRow {
        match self {
            Row::Sparse(r) => r.clone(),
            Row::Dense(d) => d
                .iter()
                .enumerate()
                .filter(|e| *e.1 != 0)
                .map(|(c, &v)| (c, v))
                .collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    field: Field,
    cols: usize,
    rows: Vec<Row>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: Field, cols: usize) -> Self {
        Echelon {
            field,
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn dense_threshold(&self) -> usize {
        // more than 25% fill goes dense
        self.cols / 4
    }

    fn store(&self, dense: Vec<u32>) -> Row {
        let nnz = dense.iter().filter(|&&v| v != 0).count();
        if nnz > self.dense_threshold() {
            Row::Dense(dense)
        } else {
            Row::Sparse(
                dense
                    .iter()
                    .enumerate()
                    .filter(|e| *e.1 != 0)
                    .map(|(c, &v)| (c, v))
                    .collect(),
            )
        }
    }

    /// Reduces `acc` in place against the stored basis.
    pub fn reduce(&self, acc: &mut [u32]) {
        debug_assert_eq!(acc.len(), self.cols);
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let s = acc[pc];
            if s != 0 {
                row.sub_scaled_into(self.field, s, acc);
            }
        }
    }

    /// Inserts a sparse row; returns true when the rank grew.
    pub fn insert_sparse(&mut self, row: &[(usize, u32)]) -> bool {
        let mut acc = vec![0u32; self.cols];
        for &(c, v) in row {
            acc[c] = self.field.add(acc[c], v);
        }
        self.insert_dense(acc)
    }

    pub fn insert_dense(&mut self, mut acc: Vec<u32>) -> bool {
        let f = self.field;
        self.reduce(&mut acc);
        let Some(lead) = acc.iter().position(|&v| v != 0) else {
            return false;
        };
        let inv = f.inv(acc[lead]);
        for v in acc.iter_mut() {
            *v = f.mul(*v, inv);
        }
        // clear the new pivot column from every stored row
        let new_row = self.store(acc);
        for i in 0..self.rows.len() {
            let s = self.rows[i].get(lead);
            if s == 0 {
                continue;
            }
            let mut dense = match &self.rows[i] {
                Row::Dense(d) => d.clone(),
                Row::Sparse(r) => {
                    let mut d = vec![0u32; self.cols];
                    for &(c, v) in r {
                        d[c] = v;
                    }
                    d
                }
            };
            new_row.sub_scaled_into(f, s, &mut dense);
            self.rows[i] = self.store(dense);
        }
        self.rows.push(new_row);
        self.pivots.push(lead);
        true
    }

    /// Rows sorted by pivot column: the canonical RREF.
    pub fn into_rref(self) -> (MatGF, Vec<usize>) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let pivots = order.iter().map(|&i| self.pivots[i]).collect();
        let data = order.iter().map(|&i| self.rows[i].to_sparse()).collect();
        (MatGF::from_sparse_rows(self.field, self.cols, data), pivots)
    }

    #[allow(dead_code)]
    pub fn fill(&self) -> usize {
        self.rows.iter().map(Row::nnz).sum()
    }
}
