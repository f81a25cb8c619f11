use crate::envelope::UAlgebra;
use crate::error::{Error, Result};
use crate::gflin::MatGF;
use crate::superalg::{Parity, Representation};

use super::lie::{select_even_rows, RowBuilder};
use super::space::CochainBasis;

/// Even cochains on n-tuples of positive-degree PBW monomials of `u(g)`.
///
/// Tuple entries are indices into [`UAlgebra::aug_ideal_basis`].
#[derive(Clone, Debug)]
pub struct AssocCochainSpace {
    pub basis: CochainBasis,
}

impl AssocCochainSpace {
    pub fn new(u: &UAlgebra, m: &Representation, n: usize) -> Self {
        let a = u.aug_ideal_basis().len();
        // all a^n tuples, last slot varying fastest
        let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..n {
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    (0..a).map(move |i| {
                        let mut t = t.clone();
                        t.push(i);
                        t
                    })
                })
                .collect();
        }
        let pars: Vec<Parity> = u
            .aug_ideal_basis()
            .iter()
            .map(|mono| u.parity(mono))
            .collect();
        let parity = move |t: &[usize]| Parity::from_bit(t.iter().map(|&i| pars[i].bit()).sum());
        AssocCochainSpace {
            basis: CochainBasis::new(n, tuples, parity, m.space()),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }
}

/// Structure constants of `u(g)^+` in aug-ideal indices, with the action
/// matrix of every aug-ideal monomial on M.
pub(crate) struct AugData {
    /// `prod[i][j]` = sparse coordinates of `s_i s_j` in aug-ideal indices
    prod: Vec<Vec<Vec<(usize, u32)>>>,
    act: Vec<MatGF>,
}

impl AugData {
    pub fn new(u: &UAlgebra, m: &Representation) -> Result<Self> {
        let a = u.aug_ideal_basis().len();
        let mut prod = vec![vec![Vec::new(); a]; a];
        for (i, row) in prod.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let terms = u.mul_basis(i + 1, j + 1)?;
                let mut out = Vec::with_capacity(terms.len());
                for (k, c) in terms {
                    if k == 0 {
                        return Err(Error::InvariantViolation(
                            "a product of augmentation-ideal monomials has a unit component".into(),
                        ));
                    }
                    out.push((k - 1, c));
                }
                *slot = out;
            }
        }
        let act = u
            .aug_ideal_basis()
            .iter()
            .map(|mono| u.monomial_matrix(m, mono))
            .collect();
        Ok(AugData { prod, act })
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, u32)] {
        &self.prod[i][j]
    }

    pub fn action(&self, i: usize) -> &MatGF {
        &self.act[i]
    }
}

/// `δf(s_1..s_{n+1}) = s_1·f(s_2..) + Σ_{i=1}^{n} (−1)^i f(.., s_i s_{i+1}, ..)`.
pub(crate) fn assoc_differential(
    u: &UAlgebra,
    data: &AugData,
    md: usize,
    src: &AssocCochainSpace,
    dst: &AssocCochainSpace,
) -> Result<MatGF> {
    let f = u.field();
    let n1 = dst.basis.degree;
    let tuples = dst.basis.tuples();
    let mut full = RowBuilder::new(f, tuples.len() * md);
    for (ti, s) in tuples.iter().enumerate() {
        let rest = &s[1..];
        let act = data.action(s[0]);
        for mm in 0..md {
            let Some(col) = src.basis.index_of(rest, mm) else {
                continue;
            };
            for r in 0..md {
                let a = act.get(r, mm);
                if a != 0 {
                    full.add(ti * md + r, col, a);
                }
            }
        }
        for i in 0..n1 - 1 {
            let sign = f.sign(i + 1);
            let mut args: Vec<usize> = Vec::with_capacity(n1 - 1);
            args.extend_from_slice(&s[..i]);
            args.push(0);
            args.extend_from_slice(&s[i + 2..]);
            for &(k, c) in data.product(s[i], s[i + 1]) {
                args[i] = k;
                let coef = f.mul(sign, c);
                for r in 0..md {
                    if let Some(col) = src.basis.index_of(&args, r) {
                        full.add(ti * md + r, col, coef);
                    }
                }
            }
        }
    }
    let full = full.finish(src.dim());
    select_even_rows(f, &full, &dst.basis, md, src.dim())
}

/// Bar-type cochain spaces `C^0..C^{top+1}` over `u(g)^+` and their differentials.
#[derive(Clone, Debug)]
pub struct AssocComplex {
    pub spaces: Vec<AssocCochainSpace>,
    pub deltas: Vec<MatGF>,
}

impl AssocComplex {
    pub fn new(u: &UAlgebra, m: &Representation, top: usize) -> Result<Self> {
        let data = AugData::new(u, m)?;
        let spaces: Vec<AssocCochainSpace> = (0..=top + 1)
            .map(|n| AssocCochainSpace::new(u, m, n))
            .collect();
        let deltas = (0..=top)
            .map(|n| assoc_differential(u, &data, m.dim(), &spaces[n], &spaces[n + 1]))
            .collect::<Result<Vec<_>>>()?;
        Ok(AssocComplex { spaces, deltas })
    }
}
