use std::collections::HashMap;

use crate::superalg::{Parity, SuperSpace};

/// Basis of an even cochain space: an argument tuple paired with an
/// M-coordinate whose parity equals the tuple's total parity.
#[derive(Clone, Debug)]
pub struct CochainBasis {
    pub degree: usize,
    entries: Vec<(Vec<usize>, usize)>,
    index: HashMap<(Vec<usize>, usize), usize>,
    tuples: Vec<Vec<usize>>,
    tuple_parity: HashMap<Vec<usize>, Parity>,
}

impl CochainBasis {
    /// `tuples` in the order their coordinates should appear; `parity` gives
    /// each tuple's total parity.
    pub fn new(
        degree: usize,
        tuples: Vec<Vec<usize>>,
        parity: impl Fn(&[usize]) -> Parity,
        m: &SuperSpace,
    ) -> Self {
        let mut entries = Vec::new();
        let mut tuple_parity = HashMap::new();
        for t in &tuples {
            let par = parity(t);
            tuple_parity.insert(t.clone(), par);
            for r in 0..m.dim() {
                if m.parity(r) == par {
                    entries.push((t.clone(), r));
                }
            }
        }
        let index = entries
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        CochainBasis {
            degree,
            entries,
            index,
            tuples,
            tuple_parity,
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize) -> (&[usize], usize) {
        let (t, r) = &self.entries[i];
        (t, *r)
    }

    pub fn entries(&self) -> &[(Vec<usize>, usize)] {
        &self.entries
    }

    /// Every argument tuple, including those with no parity-matching coordinate.
    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    pub fn tuple_parity(&self, t: &[usize]) -> Parity {
        self.tuple_parity[t]
    }

    pub fn index_of(&self, t: &[usize], r: usize) -> Option<usize> {
        self.index.get(&(t.to_vec(), r)).copied()
    }

    /// Values of a cochain on the canonical tuple `t`, as an M-vector.
    pub fn value(&self, f: &[u32], t: &[usize], m_dim: usize) -> Vec<u32> {
        (0..m_dim)
            .map(|r| self.index_of(t, r).map(|i| f[i]).unwrap_or(0))
            .collect()
    }

    /// The cochain whose value on each tuple is `values(t)`; components of the
    /// wrong parity must vanish.
    pub fn from_values(&self, values: impl Fn(&[usize]) -> Vec<u32>) -> Vec<u32> {
        let mut out = vec![0u32; self.dim()];
        for t in &self.tuples {
            let v = values(t);
            for (r, &c) in v.iter().enumerate() {
                match self.index_of(t, r) {
                    Some(i) => out[i] = c,
                    None => assert_eq!(c, 0, "odd component in an even cochain"),
                }
            }
        }
        out
    }
}
