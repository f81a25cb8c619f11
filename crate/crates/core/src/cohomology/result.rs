use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gflin::{self, Coordinates, Field, MatGF, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    /// the Lie-type complex
    Lie,
    /// the bar-type complex over `u(g)^+`
    Restricted,
}

/// `Z^n`, `B^n`, and a fixed basis of representatives for `Z^n / B^n`.
#[derive(Clone, Debug)]
pub struct CohomologyResult {
    pub n: usize,
    pub kind: Kind,
    pub z: Subspace,
    pub b: Subspace,
    /// representative cocycles: echelon basis of `Z` reduced modulo `B`
    pub reps: Vec<Vec<u32>>,
    coords: Coordinates,
    b_dim: usize,
}

impl CohomologyResult {
    pub fn new(n: usize, kind: Kind, z: Subspace, b: Subspace) -> Result<Self> {
        if !b.is_subspace_of(&z) {
            let w = b.witness_outside(&z).unwrap_or_default();
            return Err(Error::InvariantViolation(format!(
                "coboundary {w:?} is not a cocycle in degree {n}"
            )));
        }
        let field = z.field();
        let ambient = z.ambient_dim();
        let reduced: Vec<Vec<u32>> = z.basis_vectors().iter().map(|v| b.reduce(v)).collect();
        let reps = Subspace::from_vectors(field, ambient, reduced).basis_vectors();
        let mut gens = b.basis_vectors();
        let b_dim = gens.len();
        gens.extend(reps.iter().cloned());
        let coords = Coordinates::new(field, ambient, &gens)?;
        Ok(CohomologyResult {
            n,
            kind,
            z,
            b,
            reps,
            coords,
            b_dim,
        })
    }

    /// Cohomology of `C^{n-1} → C^n → C^{n+1}` given the two differentials.
    pub fn from_differentials(
        n: usize,
        kind: Kind,
        field: Field,
        dim: usize,
        incoming: Option<&MatGF>,
        outgoing: &MatGF,
    ) -> Result<Self> {
        let z = gflin::nullspace(outgoing);
        let b = match incoming {
            Some(d) => gflin::image(d),
            None => Subspace::zero(field, dim),
        };
        Self::new(n, kind, z, b)
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn field(&self) -> Field {
        self.z.field()
    }

    pub fn cochain_dim(&self) -> usize {
        self.z.ambient_dim()
    }

    /// Class of a cocycle in the representative basis.
    pub fn class_coords(&self, v: &[u32]) -> Result<Vec<u32>> {
        match self.coords.coords(v) {
            Some(c) => Ok(c[self.b_dim..].to_vec()),
            None => Err(Error::NotACocycle(format!(
                "degree-{} cochain is not a cocycle",
                self.n
            ))),
        }
    }

    /// The cocycle `Σ c_i rep_i`.
    pub fn representative(&self, class: &[u32]) -> Vec<u32> {
        let f = self.field();
        let mut out = vec![0u32; self.cochain_dim()];
        for (c, r) in class.iter().zip(&self.reps) {
            gflin::vec_ops::axpy(f, &mut out, *c, r);
        }
        out
    }

    pub fn is_coboundary(&self, v: &[u32]) -> bool {
        self.b.contains(v)
    }
}
