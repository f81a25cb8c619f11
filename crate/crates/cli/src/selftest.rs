//! Invariant suites run by `supercoh selftest`.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};
use supercoh::catalog;
use supercoh::cohomology::{
    comparison_matrix, h1_star_via_pmap_condition, restricted_cohomology_of, AssocComplex,
    LieCochainSpace, LieComplex,
};
use supercoh::envelope::{check_commutator_identities, UAlgebra};
use supercoh::extensions::{
    algebra_ext_from_2cocycle, assoc_2cocycle_from_restricted_ext, cocycle_from_algebra_ext,
    cocycle_from_module_ext, is_homomorphism, module_ext_from_1cocycle,
    restricted_ext_from_assoc_2cocycle, shear_matrix,
};
use supercoh::gflin::{self, vec_ops, MatGF};
use supercoh::sixterm::{shift_representatives, SixTerm};
use supercoh::superalg::{hom_module, LieSuperAlgebra, Representation};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    /// number of individual assertions made
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &str) -> Self {
        SuiteResult {
            name: name.to_string(),
            ..Default::default()
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn error(&mut self, who: &str, e: supercoh::Error) {
        self.checks += 1;
        self.failures.push(format!("{who}: {e}"));
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn random_vec(rng: &mut StdRng, p: u32, n: usize) -> Vec<u32> {
    (0..n).map(|_| rng.gen_range(0..p)).collect()
}

fn squares_to_zero(out: &mut SuiteResult, who: &str, kind: &str, deltas: &[MatGF]) {
    for n in 0..2 {
        let zero = deltas[n + 1]
            .mul(&deltas[n])
            .map(|m| m.is_zero())
            .unwrap_or(false);
        out.check(zero, || format!("{who}: {kind} δ{}∘δ{n} ≠ 0", n + 1));
    }
}

fn complexes_square_to_zero(
    out: &mut SuiteResult,
    who: &str,
    g: &LieSuperAlgebra,
    m: &Representation,
) {
    match LieComplex::new(g, m, 2) {
        Ok(cx) => squares_to_zero(out, who, "Lie", &cx.deltas),
        Err(e) => out.error(who, e),
    }
    let u = UAlgebra::restricted(g);
    match AssocComplex::new(&u, m, 2) {
        Ok(cx) => squares_to_zero(out, who, "bar", &cx.deltas),
        Err(e) => out.error(who, e),
    }
}

/// `δ∘δ = 0` in degrees 0 and 1 for both complexes, on the catalog and on
/// `fuzz` random semidirect products.
pub fn delta_squared(seed: u64, fuzz: usize) -> SuiteResult {
    let mut out = SuiteResult::new("differentials square to zero");
    for e in catalog::entries() {
        complexes_square_to_zero(&mut out, e.id, &e.g, &e.m);
    }
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..fuzz {
        let (name, g) = catalog::fuzz_semidirect(&mut rng);
        complexes_square_to_zero(&mut out, &name, &g, &Representation::trivial_k(&g));
        match LieComplex::new(&g, &Representation::adjoint(&g), 2) {
            Ok(cx) => squares_to_zero(&mut out, &format!("{name} adjoint"), "Lie", &cx.deltas),
            Err(e) => out.error(&name, e),
        }
    }
    out
}

/// Restricted 1-cocycles cut out by `x^{p−1}·f(x) = f(x^[p])` have the same
/// dimension modulo coboundaries as `H¹_*` from the bar complex.
pub fn pmap_condition(_seed: u64) -> SuiteResult {
    let mut out = SuiteResult::new("p-map condition describes H¹_*");
    for e in catalog::entries() {
        let run = || -> supercoh::Result<(usize, usize)> {
            let cx = LieComplex::new(&e.g, &e.m, 1)?;
            let via = h1_star_via_pmap_condition(
                &e.g,
                &e.m,
                &cx.spaces[1],
                &cx.deltas[0],
                &cx.deltas[1],
            )?;
            let bar = supercoh::cohomology::restricted_cohomology(&e.g, &e.m, 1)?;
            Ok((via.dim(), bar.dim()))
        };
        match run() {
            Ok((a, b)) => out.check(a == b, || {
                format!("{}: p-map condition gives {a}, bar complex gives {b}", e.id)
            }),
            Err(err) => out.error(e.id, err),
        }
    }
    out
}

/// The two commutator identities in `u(g)` on `trials` random samples per catalog algebra.
pub fn commutator_identities(seed: u64, trials: usize) -> SuiteResult {
    let mut out = SuiteResult::new("commutator identities in u(g)");
    let mut rng = StdRng::seed_from_u64(seed);
    for e in catalog::entries() {
        let u = UAlgebra::restricted(&e.g);
        match check_commutator_identities(&u, trials, &mut rng) {
            Ok(rep) => {
                out.checks += 2 * trials;
                out.failures.extend(
                    rep.violations
                        .iter()
                        .map(|v| format!("{}: {}", e.id, v.detail)),
                );
            }
            Err(err) => out.error(e.id, err),
        }
    }
    out
}

fn module_round_trip(
    out: &mut SuiteResult,
    id: &str,
    g: &LieSuperAlgebra,
    m: &Representation,
) -> supercoh::Result<()> {
    let n = Representation::trivial_k(g);
    let hm = hom_module(g, &n, m);
    let cx = LieComplex::new(g, &hm.rep, 1)?;
    for f in gflin::nullspace(&cx.deltas[1]).basis_vectors() {
        let ext = module_ext_from_1cocycle(g, m, &n, &f)?;
        let rep = ext.rep.validate(g, false);
        out.check(rep.is_valid(), || {
            format!("{id}: module extension fails validation: {rep}")
        });
        out.check(cocycle_from_module_ext(g, m, &n, &ext) == f, || {
            format!("{id}: module 1-cocycle not recovered")
        });
    }
    Ok(())
}

fn algebra_round_trip(
    out: &mut SuiteResult,
    id: &str,
    g: &LieSuperAlgebra,
    m: &Representation,
    rng: &mut StdRng,
) -> supercoh::Result<()> {
    let p = g.field().p();
    let cx = LieComplex::new(g, m, 2)?;
    let mut cocycles = gflin::nullspace(&cx.deltas[2]).basis_vectors();
    cocycles.push(vec![0; cx.spaces[2].dim()]);
    for f in cocycles {
        let ext = algebra_ext_from_2cocycle(g, m, &f)?;
        let rep = ext.e.validate();
        out.check(rep.is_valid(), || {
            format!("{id}: extension algebra fails validation: {rep}")
        });
        out.check(ext.check().is_ok(), || {
            format!("{id}: extension maps are not a short exact sequence")
        });
        out.check(cocycle_from_algebra_ext(&ext) == f, || {
            format!("{id}: 2-cocycle not recovered")
        });
        let h = random_vec(rng, p, cx.spaces[1].dim());
        let f2 = vec_ops::sub(g.field(), &f, &cx.deltas[1].mul_vec(&h));
        let ext2 = algebra_ext_from_2cocycle(g, m, &f2)?;
        out.check(
            is_homomorphism(&ext.e, &ext2.e, &shear_matrix(&ext, &h)),
            || format!("{id}: cohomologous cocycles give non-isomorphic extensions"),
        );
    }
    Ok(())
}

fn restricted_round_trip(
    out: &mut SuiteResult,
    id: &str,
    g: &LieSuperAlgebra,
    m: &Representation,
    rng: &mut StdRng,
) -> supercoh::Result<()> {
    let p = g.field().p();
    let f = g.field();
    let u = UAlgebra::restricted(g);
    let cx = AssocComplex::new(&u, m, 2)?;
    let h2 = restricted_cohomology_of(g, &cx, 2)?;
    let c1 = LieCochainSpace::new(g, m, 1);
    let mut inputs = h2.reps.clone();
    let class = random_vec(rng, p, h2.dim());
    let b = cx.deltas[1].mul_vec(&random_vec(rng, p, cx.spaces[1].dim()));
    inputs.push(vec_ops::add(f, &h2.representative(&class), &b));
    let comp = comparison_matrix(g, &u, &LieCochainSpace::new(g, m, 2), &cx.spaces[2]);
    for c in inputs {
        let r = restricted_ext_from_assoc_2cocycle(g, m, &u, &cx, &c)?;
        let rep = r.validate();
        out.check(rep.is_valid(), || {
            format!("{id}: restricted extension fails validation: {rep}")
        });
        let want = h2.class_coords(&c)?;
        let back = assoc_2cocycle_from_restricted_ext(&r, &u, &cx.spaces[2], None)?;
        out.check(h2.class_coords(&back)? == want, || {
            format!("{id}: bar 2-cocycle lands in another class")
        });
        let shift = random_vec(rng, p, c1.dim());
        let back = assoc_2cocycle_from_restricted_ext(&r, &u, &cx.spaces[2], Some(&shift))?;
        out.check(h2.class_coords(&back)? == want, || {
            format!("{id}: class depends on the chosen section")
        });
        out.check(cocycle_from_algebra_ext(&r.ext) == comp.mul_vec(&c), || {
            format!("{id}: bracket of the extension is not the antisymmetrized cocycle")
        });
    }
    Ok(())
}

/// cocycle → extension → cocycle for module extensions, algebra extensions
/// and restricted extensions, with every constructed object validated.
pub fn round_trips(seed: u64) -> SuiteResult {
    let mut out = SuiteResult::new("extension round trips");
    let mut rng = StdRng::seed_from_u64(seed);
    for e in catalog::entries() {
        if let Err(err) = module_round_trip(&mut out, e.id, &e.g, &e.m) {
            out.error(e.id, err);
        }
        if let Err(err) = algebra_round_trip(&mut out, e.id, &e.g, &e.m, &mut rng) {
            out.error(e.id, err);
        }
        if let Err(err) = restricted_round_trip(&mut out, e.id, &e.g, &e.m, &mut rng) {
            out.error(e.id, err);
        }
    }
    out
}

/// The last map of the sequence is unchanged when every `H²` representative
/// is moved by a random coboundary, `shifts` times per catalog entry.
pub fn phi_independence(seed: u64, shifts: usize) -> SuiteResult {
    let mut out = SuiteResult::new("last map ignores representatives");
    let mut rng = StdRng::seed_from_u64(seed);
    for e in catalog::entries() {
        let run = |out: &mut SuiteResult, rng: &mut StdRng| -> supercoh::Result<()> {
            let st = SixTerm::new(&e.g, &e.m)?;
            let base = st.map_phi()?;
            let p = e.g.field().p();
            for k in 0..shifts {
                let hs: Vec<Vec<u32>> = st
                    .h2
                    .reps
                    .iter()
                    .map(|_| random_vec(rng, p, st.lie.spaces[1].dim()))
                    .collect();
                let moved = st.map_phi_on(&shift_representatives(&st, &hs))?;
                out.check(moved == base, || {
                    format!("{}: shift {k} changes the map", e.id)
                });
            }
            Ok(())
        };
        if let Err(err) = run(&mut out, &mut rng) {
            out.error(e.id, err);
        }
    }
    out
}

pub fn all(seed: u64) -> Vec<SuiteResult> {
    vec![
        delta_squared(seed, 50),
        pmap_condition(seed),
        commutator_identities(seed, 100),
        round_trips(seed),
        phi_independence(seed, 10),
    ]
}
