//! Two commutator identities in associative algebras of characteristic p,
//! evaluated inside `u(g)` as a check on the straightening engine.

use rand::Rng;

use crate::error::Result;
use crate::superalg::{Axiom, ValidationReport};

use super::algebra::UAlgebra;
use super::element::UElement;

/// `Σ_{i<p} x^i y x^{p−1−i}` and `(ad x)^{p−1}(y)`.
pub fn identity_one(u: &UAlgebra, x: &UElement, y: &UElement) -> Result<(UElement, UElement)> {
    let p = u.field().p();
    let mut lhs = UElement::zero();
    for i in 0..p {
        let t = u.multiply(&u.multiply(&u.power(x, i)?, y)?, &u.power(x, p - 1 - i)?)?;
        lhs = u.add(&lhs, &t);
    }
    let mut rhs = y.clone();
    for _ in 0..p - 1 {
        rhs = u.d_w(x, &rhs)?;
    }
    Ok((lhs, rhs))
}

/// `Σ_{i<l} x^i D_x^{l−1−i}(y)` and `Σ_{j<l} (−1)^j C(l, j+1) x^{l−1−j} y x^j`.
pub fn identity_two(
    u: &UAlgebra,
    x: &UElement,
    y: &UElement,
    l: u32,
) -> Result<(UElement, UElement)> {
    let f = u.field();
    let mut iter_ad = vec![y.clone()];
    for k in 1..l {
        let next = u.d_w(x, &iter_ad[k as usize - 1])?;
        iter_ad.push(next);
    }
    let mut lhs = UElement::zero();
    for i in 0..l {
        let t = u.multiply(&u.power(x, i)?, &iter_ad[(l - 1 - i) as usize])?;
        lhs = u.add(&lhs, &t);
    }
    let mut rhs = UElement::zero();
    for j in 0..l {
        let c = f.mul(f.sign(j as usize), f.binomial(l as u64, j as u64 + 1));
        let t = u.multiply(&u.multiply(&u.power(x, l - 1 - j)?, y)?, &u.power(x, j)?)?;
        rhs = u.add(&rhs, &u.scale(c, &t));
    }
    Ok((lhs, rhs))
}

/// Checks both identities on `trials` random samples with `x` a random even
/// vector of g, `y` a random element of `u(g)` and `2 ≤ l ≤ p`.
pub fn check_commutator_identities<R: Rng>(
    u: &UAlgebra,
    trials: usize,
    rng: &mut R,
) -> Result<ValidationReport> {
    let f = u.field();
    let g = u.lie();
    let mut rep = ValidationReport::default();
    for t in 0..trials {
        let mut xv = vec![0u32; g.dim()];
        for c in xv.iter_mut().take(g.n_even()) {
            *c = rng.gen_range(0..f.p());
        }
        let x = u.embed(&xv);
        let y = u.random_element(rng);
        let l = rng.gen_range(2..=f.p());
        let (a, b) = identity_one(u, &x, &y)?;
        if a != b {
            rep.push(
                Axiom::CommutatorIdentity,
                vec![t, 1],
                format!("identity (1) fails for x = {x:?}, y = {y:?}"),
            );
        }
        let (a, b) = identity_two(u, &x, &y, l)?;
        if a != b {
            rep.push(
                Axiom::CommutatorIdentity,
                vec![t, 2, l as usize],
                format!("identity (2) fails for x = {x:?}, y = {y:?}, l = {l}"),
            );
        }
    }
    Ok(rep)
}
