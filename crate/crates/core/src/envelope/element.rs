use std::collections::BTreeMap;
use std::fmt;

/// A PBW monomial: one exponent per generator position of its algebra.
///
/// Positions follow the algebra's generator order, which need not be the
/// basis order of the underlying Lie superalgebra.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub(crate) Box<[u8]>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0u8; n].into_boxed_slice())
    }

    pub fn from_exponents(e: &[u8]) -> Self {
        Monomial(e.to_vec().into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Highest position with a nonzero exponent.
    pub fn last(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e != 0)
    }

    pub(crate) fn with_exponent(&self, pos: usize, e: u8) -> Self {
        let mut v = self.0.clone();
        v[pos] = e;
        Monomial(v)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.0[..])
    }
}

/// A linear combination of PBW monomials with nonzero coefficients.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct UElement {
    pub(crate) terms: BTreeMap<Monomial, u32>,
}

impl UElement {
    pub fn zero() -> Self {
        UElement::default()
    }

    pub fn monomial(m: Monomial, c: u32) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(m, c);
        }
        UElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u32)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, m: &Monomial) -> u32 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Scalar part (coefficient of the unit monomial).
    pub fn constant_term(&self) -> u32 {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, &c)| c)
            .unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, p: u32, m: Monomial, c: u32) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(m);
        match e {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = (*o.get() + c) % p;
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += s * other`
    pub(crate) fn axpy(&mut self, p: u32, s: u32, other: &UElement) {
        if s == 0 {
            return;
        }
        for (m, &c) in &other.terms {
            self.add_term(p, m.clone(), ((s as u64 * c as u64) % p as u64) as u32);
        }
    }
}

impl fmt::Debug for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("{c}*{m:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
