use std::collections::HashMap;
use std::sync::Mutex;

use rand::Rng;

use crate::error::{Error, Result};
use crate::gflin::{Field, MatGF};
use crate::superalg::{LieSuperAlgebra, Parity, Representation};

use super::element::{Monomial, UElement};

/// Which enveloping algebra is being modelled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// `u(g)`: even generators satisfy `x^p = x^[p]`.
    Restricted,
    /// `U(g)` with every monomial of degree above the bound rejected.
    Truncated(usize),
}

/// An enveloping algebra with a PBW basis and a memoized straightening product.
pub struct UAlgebra {
    g: LieSuperAlgebra,
    mode: Mode,
    /// `order[pos]` is the basis index of the generator at that position
    order: Vec<usize>,
    pos_of: Vec<usize>,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    gen_cache: Mutex<HashMap<(Monomial, usize), UElement>>,
    mono_cache: Mutex<HashMap<(Monomial, Monomial), UElement>>,
}

impl std::fmt::Debug for UAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("UAlgebra")
            .field("mode", &self.mode)
            .field("dim", &self.basis.len())
            .finish()
    }
}

impl UAlgebra {
    pub fn restricted(g: &LieSuperAlgebra) -> Self {
        Self::with_order(g, Mode::Restricted, (0..g.dim()).collect())
    }

    /// Truncated `U(g)` with the default degree bound `p + 2`.
    pub fn truncated(g: &LieSuperAlgebra) -> Self {
        Self::with_order(
            g,
            Mode::Truncated(g.field().p() as usize + 2),
            (0..g.dim()).collect(),
        )
    }

    /// Generators ordered by `order` (a permutation of the basis indices).
    pub fn with_order(g: &LieSuperAlgebra, mode: Mode, order: Vec<usize>) -> Self {
        let n = g.dim();
        assert_eq!(order.len(), n, "order must be a permutation");
        let mut pos_of = vec![usize::MAX; n];
        for (pos, &b) in order.iter().enumerate() {
            pos_of[b] = pos;
        }
        assert!(
            pos_of.iter().all(|&p| p != usize::MAX),
            "order must be a permutation"
        );
        let p = g.field().p() as usize;
        let bounds: Vec<usize> = order
            .iter()
            .map(|&b| match (g.space().parity(b), mode) {
                (Parity::Odd, _) => 1,
                (Parity::Even, Mode::Restricted) => p - 1,
                (Parity::Even, Mode::Truncated(d)) => d,
            })
            .collect();
        let max_deg = match mode {
            Mode::Restricted => usize::MAX,
            Mode::Truncated(d) => d,
        };
        let mut basis = Vec::new();
        let mut cur = vec![0u8; n];
        enumerate(&bounds, max_deg, 0, 0, &mut cur, &mut basis);
        // by degree, then descending exponent vector
        basis.sort_by(|a: &Monomial, b: &Monomial| {
            a.degree().cmp(&b.degree()).then_with(|| b.cmp(a))
        });
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        UAlgebra {
            g: g.clone(),
            mode,
            order,
            pos_of,
            basis,
            index,
            gen_cache: Mutex::new(HashMap::new()),
            mono_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn lie(&self) -> &LieSuperAlgebra {
        &self.g
    }

    pub fn field(&self) -> Field {
        self.g.field()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position_of(&self, basis_index: usize) -> usize {
        self.pos_of[basis_index]
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// PBW basis sorted by degree; the unit comes first.
    pub fn pbw_basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// Positive-degree PBW monomials.
    pub fn aug_ideal_basis(&self) -> &[Monomial] {
        &self.basis[1..]
    }

    pub fn basis_index(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Exponent of the generator with the given basis index.
    pub fn exponent(&self, m: &Monomial, basis_index: usize) -> u8 {
        m.0[self.pos_of[basis_index]]
    }

    /// Sum of odd exponents mod 2.
    pub fn parity(&self, m: &Monomial) -> Parity {
        let odd: usize =
            m.0.iter()
                .enumerate()
                .filter(|(pos, _)| self.pos_parity(*pos) == Parity::Odd)
                .map(|(_, &e)| e as usize)
                .sum();
        Parity::from_bit(odd)
    }

    #[inline]
    fn pos_parity(&self, pos: usize) -> Parity {
        self.g.space().parity(self.order[pos])
    }

    pub fn one(&self) -> UElement {
        UElement::monomial(Monomial::one(self.g.dim()), 1)
    }

    pub fn generator(&self, basis_index: usize) -> UElement {
        let m = Monomial::one(self.g.dim()).with_exponent(self.pos_of[basis_index], 1);
        UElement::monomial(m, 1)
    }

    /// The image of a vector of g as a degree-one element.
    pub fn embed(&self, v: &[u32]) -> UElement {
        let mut out = UElement::zero();
        for (i, &c) in v.iter().enumerate() {
            if c != 0 {
                let m = Monomial::one(self.g.dim()).with_exponent(self.pos_of[i], 1);
                out.add_term(self.field().p(), m, c);
            }
        }
        out
    }

    pub fn basis_element(&self, i: usize) -> UElement {
        UElement::monomial(self.basis[i].clone(), 1)
    }

    pub fn add(&self, a: &UElement, b: &UElement) -> UElement {
        let mut out = a.clone();
        out.axpy(self.field().p(), 1, b);
        out
    }

    pub fn sub(&self, a: &UElement, b: &UElement) -> UElement {
        let f = self.field();
        let mut out = a.clone();
        out.axpy(f.p(), f.neg(1), b);
        out
    }

    pub fn scale(&self, s: u32, a: &UElement) -> UElement {
        let mut out = UElement::zero();
        out.axpy(self.field().p(), s % self.field().p(), a);
        out
    }

    /// Coordinates in the PBW basis.
    pub fn to_coords(&self, u: &UElement) -> Vec<u32> {
        let mut v = vec![0u32; self.dim()];
        for (m, c) in u.terms() {
            v[self.index[m]] = c;
        }
        v
    }

    pub fn from_coords(&self, v: &[u32]) -> UElement {
        let mut out = UElement::zero();
        for (i, &c) in v.iter().enumerate() {
            if c != 0 {
                out.add_term(self.field().p(), self.basis[i].clone(), c);
            }
        }
        out
    }

    /// `m · x`, where `x` is the generator at position `j`, in normal form.
    fn mul_gen(&self, m: &Monomial, j: usize) -> Result<UElement> {
        let key = (m.clone(), j);
        if let Some(v) = self.gen_cache.lock().expect("cache lock").get(&key) {
            return Ok(v.clone());
        }
        let out = self.mul_gen_uncached(m, j)?;
        self.gen_cache
            .lock()
            .expect("cache lock")
            .insert(key, out.clone());
        Ok(out)
    }

    fn mul_gen_uncached(&self, m: &Monomial, j: usize) -> Result<UElement> {
        let f = self.field();
        let p = f.p();
        if let Mode::Truncated(d) = self.mode {
            if m.degree() + 1 > d {
                return Err(Error::DegreeOverflow(d));
            }
        }
        let last = match m.last() {
            None => return Ok(UElement::monomial(m.with_exponent(j, 1), 1)),
            Some(l) => l,
        };
        if j > last {
            return Ok(UElement::monomial(m.with_exponent(j, 1), 1));
        }
        if j == last {
            let e = m.0[j] as u32 + 1;
            let prefix = m.with_exponent(j, 0);
            return match self.pos_parity(j) {
                Parity::Odd => {
                    // y y = ½[y, y]
                    let b = self.g.bracket_basis(self.order[j], self.order[j]);
                    let half: Vec<u32> = b.iter().map(|&c| f.mul(c, f.half())).collect();
                    self.mul_mono_elem(&prefix, &self.embed(&half))
                }
                Parity::Even if self.mode == Mode::Restricted && e == p => {
                    let xp = self.g.pmap_basis(self.order[j]).to_vec();
                    self.mul_mono_elem(&prefix, &self.embed(&xp))
                }
                Parity::Even => Ok(UElement::monomial(m.with_exponent(j, e as u8), 1)),
            };
        }
        // m = m'' x_l with l = last > j:  x_l x_j = (−1)^{|l||j|} x_j x_l + [x_l, x_j]
        let mpp = m.with_exponent(last, m.0[last] - 1);
        let sign = f.sign(self.pos_parity(last).koszul(self.pos_parity(j)));
        let left = self.mul_gen(&mpp, j)?;
        let mut out = UElement::zero();
        for (mono, c) in left.terms() {
            let t = self.mul_gen(mono, last)?;
            out.axpy(p, f.mul(sign, c), &t);
        }
        let br = self
            .g
            .bracket_basis(self.order[last], self.order[j])
            .to_vec();
        if br.iter().any(|&c| c != 0) {
            let t = self.mul_mono_elem(&mpp, &self.embed(&br))?;
            out.axpy(p, 1, &t);
        }
        Ok(out)
    }

    /// `m · u` for a linear combination `u` of generators.
    fn mul_mono_elem(&self, m: &Monomial, u: &UElement) -> Result<UElement> {
        let p = self.field().p();
        let mut out = UElement::zero();
        for (mono, c) in u.terms() {
            let t = self.mul_mono(m, mono)?;
            out.axpy(p, c, &t);
        }
        Ok(out)
    }

    /// Product of two PBW monomials, folding over the generators of `b`.
    pub fn mul_mono(&self, a: &Monomial, b: &Monomial) -> Result<UElement> {
        if b.is_one() {
            return Ok(UElement::monomial(a.clone(), 1));
        }
        if a.is_one() {
            return Ok(UElement::monomial(b.clone(), 1));
        }
        let key = (a.clone(), b.clone());
        if let Some(v) = self.mono_cache.lock().expect("cache lock").get(&key) {
            return Ok(v.clone());
        }
        let p = self.field().p();
        let mut acc = UElement::monomial(a.clone(), 1);
        for (pos, &e) in b.0.iter().enumerate() {
            for _ in 0..e {
                let mut next = UElement::zero();
                for (mono, c) in acc.terms() {
                    let t = self.mul_gen(mono, pos)?;
                    next.axpy(p, c, &t);
                }
                acc = next;
            }
        }
        self.mono_cache
            .lock()
            .expect("cache lock")
            .insert(key, acc.clone());
        Ok(acc)
    }

    pub fn multiply(&self, u: &UElement, v: &UElement) -> Result<UElement> {
        let f = self.field();
        let mut out = UElement::zero();
        for (a, ca) in u.terms() {
            for (b, cb) in v.terms() {
                let t = self.mul_mono(a, b)?;
                out.axpy(f.p(), f.mul(ca, cb), &t);
            }
        }
        Ok(out)
    }

    pub fn power(&self, u: &UElement, k: u32) -> Result<UElement> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.multiply(&acc, u)?;
        }
        Ok(acc)
    }

    /// The plain commutator `wz − zw`.
    pub fn d_w(&self, w: &UElement, z: &UElement) -> Result<UElement> {
        Ok(self.sub(&self.multiply(w, z)?, &self.multiply(z, w)?))
    }

    /// Product of two basis monomials by PBW index, as sparse coordinates.
    pub fn mul_basis(&self, i: usize, j: usize) -> Result<Vec<(usize, u32)>> {
        let prod = self.mul_mono(&self.basis[i], &self.basis[j])?;
        Ok(prod.terms().map(|(m, c)| (self.index[m], c)).collect())
    }

    /// `ρ(m) v`: the monomial acting through a module, rightmost factor first.
    pub fn act_monomial(&self, rep: &Representation, m: &Monomial, v: &[u32]) -> Vec<u32> {
        let mut out = v.to_vec();
        for pos in (0..m.0.len()).rev() {
            for _ in 0..m.0[pos] {
                out = rep.act(self.order[pos], &out);
            }
        }
        out
    }

    /// `ρ(u) v` for an element of the enveloping algebra.
    pub fn act(&self, rep: &Representation, u: &UElement, v: &[u32]) -> Vec<u32> {
        let f = self.field();
        let mut out = vec![0u32; v.len()];
        for (m, c) in u.terms() {
            let w = self.act_monomial(rep, m, v);
            crate::gflin::vec_ops::axpy(f, &mut out, c, &w);
        }
        out
    }

    /// Matrix of `ρ(m)` on the module.
    pub fn monomial_matrix(&self, rep: &Representation, m: &Monomial) -> MatGF {
        let d = rep.dim();
        let cols: Vec<Vec<u32>> = (0..d)
            .map(|j| self.act_monomial(rep, m, &crate::gflin::vec_ops::unit(d, j)))
            .collect();
        MatGF::from_columns(self.field(), d, &cols)
    }

    /// A uniformly random element.
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> UElement {
        let p = self.field().p();
        let v: Vec<u32> = (0..self.dim()).map(|_| rng.gen_range(0..p)).collect();
        self.from_coords(&v)
    }

    /// Number of memoized generator products (telemetry).
    pub fn cache_size(&self) -> usize {
        self.gen_cache.lock().expect("cache lock").len()
            + self.mono_cache.lock().expect("cache lock").len()
    }
}

fn enumerate(
    bounds: &[usize],
    max_deg: usize,
    pos: usize,
    deg: usize,
    cur: &mut Vec<u8>,
    out: &mut Vec<Monomial>,
) {
    if pos == bounds.len() {
        out.push(Monomial::from_exponents(cur));
        return;
    }
    for e in 0..=bounds[pos] {
        if deg + e > max_deg {
            break;
        }
        cur[pos] = e as u8;
        enumerate(bounds, max_deg, pos + 1, deg + e, cur, out);
    }
    cur[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalg::SuperSpace;

    fn f3() -> Field {
        Field::new(3).unwrap()
    }

    fn a1(pmap: u32) -> LieSuperAlgebra {
        let mut g =
            LieSuperAlgebra::abelian(f3(), SuperSpace::new(vec!["x".into()], vec![]).unwrap());
        g.set_pmap(0, vec![pmap]);
        g
    }

    fn a3() -> LieSuperAlgebra {
        let mut g = LieSuperAlgebra::abelian(
            f3(),
            SuperSpace::new(vec!["z".into()], vec!["y".into()]).unwrap(),
        );
        g.set_bracket(1, 1, vec![1, 0]);
        g
    }

    #[test]
    fn basis_counts() {
        assert_eq!(UAlgebra::restricted(&a1(0)).dim(), 3);
        assert_eq!(UAlgebra::restricted(&a3()).dim(), 6);
        let u = UAlgebra::restricted(&a1(0));
        let degs: Vec<usize> = u.pbw_basis().iter().map(Monomial::degree).collect();
        assert_eq!(degs, vec![0, 1, 2]);
        assert_eq!(u.aug_ideal_basis().len(), 2);
    }

    #[test]
    fn a1_products() {
        let u = UAlgebra::restricted(&a1(0));
        let x = u.generator(0);
        let x2 = u.multiply(&x, &x).unwrap();
        assert!(u.multiply(&x2, &x2).unwrap().is_zero());
        let t = UAlgebra::restricted(&a1(1));
        let x = t.generator(0);
        assert_eq!(t.power(&x, 3).unwrap(), x);
    }

    #[test]
    fn odd_square_is_half_bracket() {
        let g = a3();
        let u = UAlgebra::restricted(&g);
        let y = u.generator(1);
        // ½ = 2 in GF(3)
        assert_eq!(u.multiply(&y, &y).unwrap(), u.scale(2, &u.generator(0)));
    }

    #[test]
    fn truncated_overflow() {
        let g = a1(0);
        let u = UAlgebra::with_order(&g, Mode::Truncated(2), vec![0]);
        let x = u.generator(0);
        let x2 = u.multiply(&x, &x).unwrap();
        assert!(matches!(u.multiply(&x2, &x), Err(Error::DegreeOverflow(2))));
    }
}
