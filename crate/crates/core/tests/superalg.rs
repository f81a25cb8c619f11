use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use supercoh::catalog;
use supercoh::gflin::{vec_ops, Field, MatGF};
use supercoh::superalg::{
    hom_module, invariants, semidirect, semilinear_space, Axiom, LieSuperAlgebra, Representation,
    SuperSpace,
};

fn all_algebras() -> Vec<(String, LieSuperAlgebra)> {
    let mut out: Vec<(String, LieSuperAlgebra)> = catalog::entries()
        .into_iter()
        .map(|e| (e.id.to_string(), e.g))
        .collect();
    let mut rng = StdRng::seed_from_u64(99);
    for _ in 0..8 {
        out.push(catalog::fuzz_semidirect(&mut rng));
    }
    out
}

#[test]
fn catalog_algebras_validate() {
    for (name, g) in all_algebras() {
        assert!(g.validate_all().is_valid(), "{name}: {}", g.validate_all());
    }
}

#[test]
fn odd_bracket_landing_in_odd_part_is_reported() {
    let mut g = catalog::a3(3);
    g.set_bracket_raw(1, 1, vec![0, 1]);
    let rep = g.validate();
    assert!(rep.has(Axiom::ParityAdditivity));
    assert!(rep.violations.iter().any(|v| v.indices == vec![1, 1, 1]));
}

#[test]
fn broken_jacobi_names_the_triple() {
    // [e0,e1] = e2, [e1,e2] = e1: [e0,[e1,e2]] = e2 but [[e0,e1],e2] + [e1,[e0,e2]] = 0
    let f = Field::new(3).unwrap();
    let sp = SuperSpace::numbered("e", 3, 0);
    let mut g = LieSuperAlgebra::abelian(f, sp);
    g.set_bracket(0, 1, vec![0, 0, 1]);
    g.set_bracket(1, 2, vec![0, 1, 0]);
    let rep = g.validate();
    assert!(rep.has(Axiom::Jacobi), "{rep}");
    assert!(rep
        .violations
        .iter()
        .filter(|v| v.axiom == Axiom::Jacobi)
        .all(|v| v.indices.len() == 3));
}

#[test]
fn wrong_pmap_on_a4_fails_the_adjoint_axiom() {
    let mut g = catalog::a4(3);
    g.set_pmap(1, vec![1, 0]);
    let rep = g.validate_pmap();
    assert!(rep.has(Axiom::PmapAdjoint), "{rep}");
}

#[test]
fn jacobson_terms_on_a4() {
    // (ad(λh + x))²(h) = −λx, so s_1 = 0 and 2 s_2 = −x
    let g = catalog::a4(3);
    let s = g.jacobson_si(&[1, 0], &[0, 1]);
    assert_eq!(s, vec![vec![0, 0], vec![0, 1]]);
    assert_eq!(g.pmap_apply(&[1, 1]), vec![1, 1]);
    let ab = catalog::ab2(3, true);
    assert!(ab
        .jacobson_si(&[1, 0], &[0, 1])
        .iter()
        .all(|v| vec_ops::is_zero(v)));
    assert_eq!(ab.pmap_apply(&[1, 1]), vec![0, 1]);
    assert!(g
        .jacobson_si(&[1, 1], &[0, 0])
        .iter()
        .all(|v| vec_ops::is_zero(v)));
}

fn even_vector(g: &LieSuperAlgebra, seed: &[u32]) -> Vec<u32> {
    let p = g.field().p();
    (0..g.dim())
        .map(|i| {
            if i < g.n_even() {
                seed[i % seed.len()] % p
            } else {
                0
            }
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pmap_satisfies_jacobson_formula(idx in 0usize..23, a in prop::collection::vec(0u32..5, 4), b in prop::collection::vec(0u32..5, 4)) {
        let algs = all_algebras();
        let (name, g) = &algs[idx % algs.len()];
        let f = g.field();
        let v = even_vector(g, &a);
        let w = even_vector(g, &b);
        let lhs = g.pmap_apply(&vec_ops::add(f, &v, &w));
        let mut rhs = vec_ops::add(f, &g.pmap_apply(&v), &g.pmap_apply(&w));
        for s in g.jacobson_si(&v, &w) {
            rhs = vec_ops::add(f, &rhs, &s);
        }
        prop_assert_eq!(lhs, rhs, "{}", name);
    }

    #[test]
    fn adjoint_of_pmap_is_pth_power(idx in 0usize..23, a in prop::collection::vec(0u32..5, 4)) {
        let algs = all_algebras();
        let (name, g) = &algs[idx % algs.len()];
        let v = even_vector(g, &a);
        prop_assert_eq!(g.ad(&g.pmap_apply(&v)), g.ad(&v).pow(g.field().p() as u64), "{}", name);
    }

    #[test]
    fn pmap_is_semilinear(idx in 0usize..23, a in prop::collection::vec(0u32..5, 4), s in 0u32..5) {
        let algs = all_algebras();
        let (name, g) = &algs[idx % algs.len()];
        let f = g.field();
        let s = s % f.p();
        let v = even_vector(g, &a);
        prop_assert_eq!(g.pmap_apply(&vec_ops::scale(f, s, &v)), vec_ops::scale(f, f.pow(s, f.p() as u64), &g.pmap_apply(&v)), "{}", name);
    }
}

#[test]
fn modules_validate() {
    for e in catalog::entries() {
        assert!(e.m.validate(&e.g, true).is_valid(), "{}", e.id);
        let ad = Representation::adjoint(&e.g);
        assert!(ad.validate(&e.g, true).is_valid(), "{} adjoint", e.id);
    }
}

#[test]
fn grading_violation_is_reported() {
    let g = catalog::a3(3);
    let ad = Representation::adjoint(&g);
    // let the even z act by moving z into y
    let mut rho: Vec<MatGF> = ad.actions().to_vec();
    rho[0] = MatGF::from_dense(g.field(), 2, 2, &[vec![0, 0], vec![1, 0]]);
    let broken = Representation::new(&g, ad.space().clone(), rho).unwrap();
    assert!(broken.validate(&g, false).has(Axiom::ModuleGrading));
}

#[test]
fn hom_modules_are_restricted() {
    for e in catalog::entries() {
        let ad = Representation::adjoint(&e.g);
        for (n, k) in [(&ad, &e.m), (&e.m, &ad), (&ad, &ad)] {
            let h = hom_module(&e.g, n, k);
            assert!(h.rep.validate(&e.g, true).is_valid(), "{}", e.id);
            let f = e.g.field();
            for x in e.g.space().even_indices() {
                let r = h.rep.action(x);
                assert_eq!(
                    r.pow(f.p() as u64),
                    h.rep.action_of(f, e.g.pmap_basis(x)),
                    "{}",
                    e.id
                );
            }
        }
    }
    // trivial on both sides gives the trivial line
    let g = catalog::a4(3);
    let k = Representation::trivial_k(&g);
    let h = hom_module(&g, &k, &k);
    assert_eq!(h.rep.dim(), 1);
    assert!(h.rep.is_trivial());
}

#[test]
fn invariants_examples() {
    let g = catalog::a4(3);
    let (all, even) = invariants(&g, &Representation::adjoint(&g));
    assert_eq!((all.dim(), even.dim()), (0, 0));
    let g = catalog::a3(3);
    let (all, _) = invariants(&g, &Representation::adjoint(&g));
    assert_eq!(all.basis_vectors(), vec![vec![1, 0]]);
    let k = Representation::trivial_k(&g);
    assert_eq!(invariants(&g, &k).0.dim(), 1);
    let odd = Representation::trivial(&g, SuperSpace::new(vec![], vec!["n".into()]).unwrap());
    let (all, even) = invariants(&g, &odd);
    assert_eq!((all.dim(), even.dim()), (1, 0));
}

#[test]
fn semilinear_space_dimensions() {
    let f = Field::new(3).unwrap();
    use supercoh::gflin::Subspace;
    assert_eq!(semilinear_space(1, &Subspace::full(f, 1)).len(), 1);
    assert_eq!(semilinear_space(2, &Subspace::zero(f, 1)).len(), 0);
    assert_eq!(semilinear_space(2, &Subspace::full(f, 1)).len(), 2);
}

#[test]
fn semidirect_products_validate() {
    for e in catalog::entries() {
        let (s, layout) = semidirect(&e.g, &e.m);
        assert!(
            s.validate_all().is_valid(),
            "{}: {}",
            e.id,
            s.validate_all()
        );
        assert_eq!(s.dim(), e.g.dim() + e.m.dim());
        assert_eq!(layout.dim(), s.dim());
    }
    let g = catalog::a1(3);
    let (s, _) = semidirect(&g, &Representation::trivial_k(&g));
    assert!(s.is_abelian());
    assert!(s.pmap_table().iter().all(|v| vec_ops::is_zero(v)));
}
