use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The Z/2 degree of a homogeneous element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    #[inline]
    pub fn bit(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    #[inline]
    pub fn from_bit(b: usize) -> Parity {
        if b.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    #[inline]
    pub fn add(self, other: Parity) -> Parity {
        Parity::from_bit(self.bit() + other.bit())
    }

    /// `|a||b|`, the exponent of the Koszul sign for swapping `a` past `b`.
    #[inline]
    pub fn koszul(self, other: Parity) -> usize {
        self.bit() * other.bit()
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "0"),
            Parity::Odd => write!(f, "1"),
        }
    }
}

/// A super vector space with a named basis: even basis vectors first, then odd ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuperSpace {
    names: Vec<String>,
    n_even: usize,
}

impl SuperSpace {
    pub fn new(even: Vec<String>, odd: Vec<String>) -> Result<Self> {
        let n_even = even.len();
        let names: Vec<String> = even.into_iter().chain(odd).collect();
        let mut seen = HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(Error::Parse(format!("duplicate basis name `{n}`")));
            }
        }
        Ok(SuperSpace { names, n_even })
    }

    /// Basis named `{prefix}0, {prefix}1, ...`.
    pub fn numbered(prefix: &str, n_even: usize, n_odd: usize) -> Self {
        let names = (0..n_even + n_odd)
            .map(|i| format!("{prefix}{i}"))
            .collect();
        SuperSpace { names, n_even }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn n_even(&self) -> usize {
        self.n_even
    }

    pub fn n_odd(&self) -> usize {
        self.names.len() - self.n_even
    }

    #[inline]
    pub fn parity(&self, i: usize) -> Parity {
        if i < self.n_even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn even_indices(&self) -> std::ops::Range<usize> {
        0..self.n_even
    }

    pub fn odd_indices(&self) -> std::ops::Range<usize> {
        self.n_even..self.names.len()
    }

    /// Parity of a vector, if it is homogeneous and nonzero.
    pub fn vector_parity(&self, v: &[u32]) -> Option<Parity> {
        let even = v[..self.n_even].iter().any(|&x| x != 0);
        let odd = v[self.n_even..].iter().any(|&x| x != 0);
        match (even, odd) {
            (true, false) => Some(Parity::Even),
            (false, true) => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn is_even_vector(&self, v: &[u32]) -> bool {
        v[self.n_even..].iter().all(|&x| x == 0)
    }
}

/// Coordinates of a direct sum `A ⊕ B` laid out as `A_0, B_0, A_1, B_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectSumLayout {
    pub space: SuperSpace,
    /// position of each basis vector of `A`
    pub first: Vec<usize>,
    /// position of each basis vector of `B`
    pub second: Vec<usize>,
}

impl DirectSumLayout {
    pub fn new(a: &SuperSpace, b: &SuperSpace) -> Self {
        let (a0, a1, b0, b1) = (a.n_even(), a.n_odd(), b.n_even(), b.n_odd());
        let first: Vec<usize> = (0..a0).chain((0..a1).map(|i| a0 + b0 + i)).collect();
        let second: Vec<usize> = (0..b0)
            .map(|i| a0 + i)
            .chain((0..b1).map(|i| a0 + b0 + a1 + i))
            .collect();
        let taken: HashSet<&str> = a.names().iter().map(String::as_str).collect();
        let rename = |n: &str| {
            let mut n = n.to_string();
            while taken.contains(n.as_str()) {
                n.push('\'');
            }
            n
        };
        let mut names = vec![String::new(); a.dim() + b.dim()];
        for (i, &pos) in first.iter().enumerate() {
            names[pos] = a.name(i).to_string();
        }
        for (i, &pos) in second.iter().enumerate() {
            names[pos] = rename(b.name(i));
        }
        let space = SuperSpace {
            names,
            n_even: a0 + b0,
        };
        DirectSumLayout {
            space,
            first,
            second,
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Embeds a pair of coordinate vectors.
    pub fn join(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut v = vec![0u32; self.dim()];
        for (i, &pos) in self.first.iter().enumerate() {
            v[pos] = a[i];
        }
        for (i, &pos) in self.second.iter().enumerate() {
            v[pos] = b[i];
        }
        v
    }

    pub fn split(&self, v: &[u32]) -> (Vec<u32>, Vec<u32>) {
        (
            self.first.iter().map(|&p| v[p]).collect(),
            self.second.iter().map(|&p| v[p]).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_puts_evens_first() {
        let a = SuperSpace::new(vec!["x".into()], vec!["y".into()]).unwrap();
        let b = SuperSpace::new(vec!["x".into()], vec!["n".into()]).unwrap();
        let l = DirectSumLayout::new(&a, &b);
        assert_eq!(l.first, vec![0, 2]);
        assert_eq!(l.second, vec![1, 3]);
        assert_eq!(l.space.names(), &["x", "x'", "y", "n"]);
        assert_eq!(l.space.n_even(), 2);
        let v = l.join(&[1, 2], &[3, 4]);
        assert_eq!(l.split(&v), (vec![1, 2], vec![3, 4]));
    }

    #[test]
    fn duplicate_names_rejected() {
        assert!(SuperSpace::new(vec!["a".into()], vec!["a".into()]).is_err());
    }
}
