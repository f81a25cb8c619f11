mod common;

use common::{a4_model, ab2_model, AugModel, NaiveLie};
use supercoh::catalog;
use supercoh::cohomology::{
    h1_star_via_pmap_condition, lie_cohomology, restricted_cohomology, AssocComplex, LieComplex,
};
use supercoh::envelope::UAlgebra;
use supercoh::superalg::Representation;

fn restricted_dims(g: &supercoh::superalg::LieSuperAlgebra, m: &Representation) -> [usize; 3] {
    [0, 1, 2].map(|n| restricted_cohomology(g, m, n).unwrap().dim())
}

fn lie_dims(g: &supercoh::superalg::LieSuperAlgebra, m: &Representation) -> [usize; 3] {
    [0, 1, 2].map(|n| lie_cohomology(g, m, n).unwrap().dim())
}

#[test]
fn bar_models_match_hand_values() {
    assert_eq!(
        AugModel::truncated(3, 3, false).bar_dims_trivial(),
        [1, 1, 1]
    );
    assert_eq!(AugModel::torus(3).bar_dims_trivial(), [1, 0, 0]);
    assert_eq!(
        AugModel::truncated(3, 6, true).bar_dims_trivial(),
        [1, 0, 1]
    );
    assert_eq!(a4_model().bar_dims_trivial(), [1, 0, 1]);
}

#[test]
fn restricted_cohomology_matches_independent_models() {
    let cases = [
        (catalog::a1(3), AugModel::truncated(3, 3, false)),
        (catalog::a2(3), AugModel::torus(3)),
        (catalog::a3(3), AugModel::truncated(3, 6, true)),
        (catalog::a4(3), a4_model()),
        (catalog::ab2(3, false), ab2_model(false)),
        (catalog::ab2(3, true), ab2_model(true)),
        (catalog::a1(5), AugModel::truncated(5, 5, false)),
        (catalog::a2(5), AugModel::torus(5)),
        (catalog::a3(5), AugModel::truncated(5, 10, true)),
    ];
    for (g, model) in cases {
        let k = Representation::trivial_k(&g);
        assert_eq!(restricted_dims(&g, &k), model.bar_dims_trivial(), "{g:?}");
    }
}

#[test]
fn lie_cohomology_matches_split_differential() {
    for e in catalog::entries() {
        assert_eq!(
            lie_dims(&e.g, &e.m),
            NaiveLie::new(&e.g, &e.m).dims(),
            "{}",
            e.id
        );
    }
}

#[test]
fn fixture_lie_dims() {
    let k = |g| Representation::trivial_k(g);
    let g = catalog::a1(3);
    assert_eq!(lie_dims(&g, &k(&g)), [1, 1, 0]);
    let g = catalog::a2(3);
    assert_eq!(lie_dims(&g, &k(&g)), [1, 1, 0]);
    let g = catalog::a3(3);
    assert_eq!(lie_dims(&g, &k(&g)), [1, 0, 0]);
    let g = catalog::a4(3);
    assert_eq!(lie_dims(&g, &k(&g)), [1, 1, 0]);
}

/// The unified differential agrees entry by entry with the split form.
#[test]
fn unified_and_split_differentials_agree() {
    for e in catalog::entries() {
        let naive = NaiveLie::new(&e.g, &e.m);
        let cx = LieComplex::new(&e.g, &e.m, 2).unwrap();
        for n in 0..3 {
            let src = &cx.spaces[n].basis;
            let dst = &cx.spaces[n + 1].basis;
            for (c, (t0, r0)) in src.entries().iter().enumerate() {
                let md = e.m.dim();
                let f = |t: &[usize]| -> Vec<u32> {
                    let mut v = vec![0; md];
                    if t == t0.as_slice() {
                        v[*r0] = 1;
                    }
                    v
                };
                for (r, (t, rr)) in dst.entries().iter().enumerate() {
                    assert_eq!(
                        cx.deltas[n].get(r, c),
                        naive.delta_at(&f, t)[*rr],
                        "{} δ_{n} at ({t:?},{rr}) on ({t0:?},{r0})",
                        e.id
                    );
                }
            }
        }
    }
}

#[test]
fn super_heisenberg_delta_of_z_star() {
    let g = catalog::a3(3);
    let k = Representation::trivial_k(&g);
    let cx = LieComplex::new(&g, &k, 1).unwrap();
    let z_star = cx.spaces[1].basis.index_of(&[0], 0).unwrap();
    let yy = cx.spaces[2].basis.index_of(&[1, 1], 0).unwrap();
    assert_eq!(cx.deltas[1].get(yy, z_star), 2);
    assert_eq!(
        cx.deltas[1]
            .column(z_star)
            .iter()
            .filter(|&&v| v != 0)
            .count(),
        1
    );
}

#[test]
fn one_cocycles_of_truncated_line() {
    // Z¹ = {f(x²) = 0} over k[x]/(x³)
    let g = catalog::a1(3);
    let k = Representation::trivial_k(&g);
    let h = restricted_cohomology(&g, &k, 1).unwrap();
    assert_eq!(h.z.dim(), 1);
    let u = UAlgebra::restricted(&g);
    let cx = AssocComplex::new(&u, &k, 1).unwrap();
    let x = cx.spaces[1].basis.index_of(&[0], 0).unwrap();
    let mut f = vec![0; cx.spaces[1].dim()];
    f[x] = 1;
    assert!(h.z.contains(&f));
    let h2 = restricted_cohomology(&g, &k, 2).unwrap();
    assert_eq!(h2.b.dim(), 1);
}

#[test]
fn differentials_square_to_zero_on_catalog() {
    for e in catalog::entries() {
        let cx = LieComplex::new(&e.g, &e.m, 2).unwrap();
        for n in 0..2 {
            assert!(
                cx.deltas[n + 1].mul(&cx.deltas[n]).unwrap().is_zero(),
                "{} lie δ{}δ{}",
                e.id,
                n + 1,
                n
            );
        }
        let u = UAlgebra::restricted(&e.g);
        let bx = AssocComplex::new(&u, &e.m, 2).unwrap();
        for n in 0..2 {
            assert!(
                bx.deltas[n + 1].mul(&bx.deltas[n]).unwrap().is_zero(),
                "{} bar δ{}δ{}",
                e.id,
                n + 1,
                n
            );
        }
    }
}

#[test]
fn restricted_one_cocycles_by_pmap_condition() {
    for e in catalog::entries() {
        let cx = LieComplex::new(&e.g, &e.m, 1).unwrap();
        let h = h1_star_via_pmap_condition(&e.g, &e.m, &cx.spaces[1], &cx.deltas[0], &cx.deltas[1])
            .unwrap();
        assert_eq!(
            h.dim(),
            restricted_cohomology(&e.g, &e.m, 1).unwrap().dim(),
            "{}",
            e.id
        );
    }
}

#[test]
fn degree_three_is_rejected() {
    let g = catalog::a1(3);
    let k = Representation::trivial_k(&g);
    assert!(matches!(
        lie_cohomology(&g, &k, 3),
        Err(supercoh::Error::Unsupported(_))
    ));
}

#[test]
fn comparison_commutes_with_differentials() {
    use supercoh::cohomology::comparison_matrix;
    for e in catalog::entries() {
        let u = UAlgebra::restricted(&e.g);
        let lx = LieComplex::new(&e.g, &e.m, 1).unwrap();
        let bx = AssocComplex::new(&u, &e.m, 1).unwrap();
        let comp: Vec<_> = (0..3)
            .map(|n| comparison_matrix(&e.g, &u, &lx.spaces[n], &bx.spaces[n]))
            .collect();
        for n in 0..2 {
            let lhs = comp[n + 1].mul(&bx.deltas[n]).unwrap();
            let rhs = lx.deltas[n].mul(&comp[n]).unwrap();
            assert_eq!(lhs, rhs, "{} degree {n}", e.id);
        }
    }
}

#[test]
fn degree_zero_is_the_invariants() {
    for e in catalog::entries() {
        let (_, even_inv) = supercoh::superalg::invariants(&e.g, &e.m);
        assert_eq!(
            lie_cohomology(&e.g, &e.m, 0).unwrap().dim(),
            even_inv.dim(),
            "{}",
            e.id
        );
        assert_eq!(
            restricted_cohomology(&e.g, &e.m, 0).unwrap().dim(),
            even_inv.dim(),
            "{}",
            e.id
        );
    }
}

#[test]
fn differentials_respect_parity() {
    // every basis cochain is an even map
    for e in catalog::entries() {
        let cx = LieComplex::new(&e.g, &e.m, 2).unwrap();
        for n in 0..3 {
            for sp in [&cx.spaces[n], &cx.spaces[n + 1]] {
                for (t, r) in sp.basis.entries() {
                    assert_eq!(sp.basis.tuple_parity(t), e.m.space().parity(*r), "{}", e.id);
                }
            }
        }
    }
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(16))]

    #[test]
    fn differentials_square_to_zero_on_fuzzed_products(seed in proptest::prelude::any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let (name, g) = catalog::fuzz_semidirect(&mut rng);
        for m in [Representation::trivial_k(&g), Representation::adjoint(&g)] {
            let cx = LieComplex::new(&g, &m, 2).unwrap();
            proptest::prop_assert!(cx.deltas[1].mul(&cx.deltas[0]).unwrap().is_zero(), "{}", name);
            proptest::prop_assert!(cx.deltas[2].mul(&cx.deltas[1]).unwrap().is_zero(), "{}", name);
        }
        let u = UAlgebra::restricted(&g);
        let bx = AssocComplex::new(&u, &Representation::trivial_k(&g), 1).unwrap();
        proptest::prop_assert!(bx.deltas[1].mul(&bx.deltas[0]).unwrap().is_zero(), "{}", name);
    }
}
