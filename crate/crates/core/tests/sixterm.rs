use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use supercoh::catalog;
use supercoh::cohomology::comparison_matrix;
use supercoh::envelope::{Monomial, UAlgebra};
use supercoh::extensions::{phi_cochain, FxpReading};
use supercoh::gflin::{self, vec_ops};
use supercoh::sixterm::{build_six_term, shift_representatives, SixTerm};
use supercoh::superalg::Representation;

fn k(g: &supercoh::superalg::LieSuperAlgebra) -> Representation {
    Representation::trivial_k(g)
}

#[test]
fn fixture_sequences() {
    // (h1s, h1, s1, h2s, h2) and the ranks of the five maps
    let cases = [
        (catalog::a1(3), (1, 1, 1, 1, 0), [1, 0, 1, 0, 0]),
        (catalog::a2(3), (0, 1, 1, 0, 0), [0, 1, 0, 0, 0]),
        (catalog::a3(3), (0, 0, 1, 1, 0), [0, 0, 1, 0, 0]),
        (catalog::a4(3), (0, 1, 2, 1, 0), [0, 1, 1, 0, 0]),
        (catalog::ab2(3, false), (2, 2, 2, 3, 1), [2, 0, 2, 1, 0]),
        (catalog::ab2(3, true), (1, 2, 2, 1, 1), [1, 1, 1, 0, 1]),
    ];
    for (g, dims, ranks) in cases {
        let r = build_six_term(&g, &k(&g)).unwrap();
        let d = r.dims;
        assert_eq!((d.h1s, d.h1, d.s1, d.h2s, d.h2), dims, "{g:?}");
        assert_eq!(d.starget, g.n_even() * d.h1);
        assert_eq!(r.ranks, ranks, "{g:?}");
        assert!(r.all_exact(), "{:?}", r.witnesses);
        assert!(r.euler_consistent);
    }
}

#[test]
fn psibar_examples() {
    // torus: Ψ̄h(x) = −h(x)
    let g = catalog::a2(3);
    let st = SixTerm::new(&g, &k(&g)).unwrap();
    let psi = st.map_psibar().unwrap();
    let h = &st.h1.reps[0];
    let s = st.s_basis[0].values[0][0];
    assert_eq!(psi.get(0, 0) * s % 3, (3 - h[0]) % 3);
    // A4: Ψ̄(h*) is (h ↦ −1, x ↦ 0)
    let g = catalog::a4(3);
    let st = SixTerm::new(&g, &k(&g)).unwrap();
    let psi = st.map_psibar().unwrap();
    let col: Vec<u32> = psi.column(0);
    let image = st
        .s_basis
        .iter()
        .zip(&col)
        .fold(vec![0u32; 2], |mut acc, (b, &c)| {
            for (i, v) in b.values.iter().enumerate() {
                acc[i] = (acc[i] + c * v[0]) % 3;
            }
            acc
        });
    let h = &st.h1.reps[0];
    assert_eq!(h, &vec![1, 0]);
    assert_eq!(image, vec![2, 0]);
}

#[test]
fn phi_on_abelian_plane_with_zero_pmap_vanishes() {
    let g = catalog::ab2(3, false);
    let st = SixTerm::new(&g, &k(&g)).unwrap();
    assert!(st.map_phi().unwrap().is_zero());
    for f in &st.h2.reps {
        for x in 0..2 {
            let c = phi_cochain(
                &g,
                &st.m,
                &st.lie.spaces[1],
                &st.lie.spaces[2],
                f,
                x,
                FxpReading::Standard,
            );
            assert!(vec_ops::is_zero(&c));
        }
    }
}

#[test]
fn phi_ignores_the_choice_of_representative() {
    let mut rng = StdRng::seed_from_u64(17);
    for e in catalog::entries() {
        let st = SixTerm::new(&e.g, &e.m).unwrap();
        let base = st.map_phi().unwrap();
        for _ in 0..10 {
            let shifts: Vec<Vec<u32>> = st
                .h2
                .reps
                .iter()
                .map(|_| {
                    (0..st.lie.spaces[1].dim())
                        .map(|_| rng.gen_range(0..e.g.field().p()))
                        .collect()
                })
                .collect();
            assert_eq!(
                st.map_phi_on(&shift_representatives(&st, &shifts)).unwrap(),
                base,
                "{}",
                e.id
            );
        }
        // coboundaries map to zero
        for h in gflin::Subspace::full(e.g.field(), st.lie.spaces[1].dim()).basis_vectors() {
            let f = st.lie.deltas[1].mul_vec(&h);
            for x in e.g.space().even_indices() {
                assert!(vec_ops::is_zero(&st.phi_value(&f, x).unwrap()), "{}", e.id);
            }
        }
    }
}

/// For the antisymmetrization `f` of a bar 2-cocycle `c`,
/// `k_x + f_{x^[p]} = −x1·c(x^{p−1}, x)`: the Lie-level Φ agrees with the
/// associative-level one.
#[test]
fn phi_matches_associative_level_formula() {
    let mut rng = StdRng::seed_from_u64(23);
    for e in catalog::entries() {
        let st = SixTerm::new(&e.g, &e.m).unwrap();
        let p = e.g.field().p();
        let fld = e.g.field();
        let c2 = &st.assoc.spaces[2];
        let comp = comparison_matrix(&e.g, &st.u, &st.lie.spaces[2], c2);
        let z = gflin::nullspace(&st.assoc.deltas[2]);
        for _ in 0..3 {
            let c = z
                .basis_vectors()
                .iter()
                .fold(vec![0u32; c2.dim()], |acc, b| {
                    vec_ops::add(fld, &acc, &vec_ops::scale(fld, rng.gen_range(0..p), b))
                });
            let f = comp.mul_vec(&c);
            for x in e.g.space().even_indices() {
                let kx = phi_cochain(
                    &e.g,
                    &e.m,
                    &st.lie.spaces[1],
                    &st.lie.spaces[2],
                    &f,
                    x,
                    FxpReading::Standard,
                );
                let mut ex = vec![0u8; e.g.dim()];
                ex[x] = (p - 1) as u8;
                let a = st.u.basis_index(&Monomial::from_exponents(&ex)).unwrap() - 1;
                let b =
                    st.u.basis_index(&Monomial::from_exponents(&{
                        let mut v = vec![0u8; e.g.dim()];
                        v[x] = 1;
                        v
                    }))
                    .unwrap()
                        - 1;
                let cv = c2.basis.value(&c, &[a, b], e.m.dim());
                let want = st.lie.spaces[1]
                    .basis
                    .from_values(|t| vec_ops::scale(fld, p - 1, &e.m.act(t[0], &cv)));
                assert_eq!(kx, want, "{} x = {x}", e.id);
            }
        }
    }
}

/// `x^p − x^[p]` is central in `U(g)`, which is what makes the
/// associative-level Φ a cocycle.
#[test]
fn pth_power_defect_is_central() {
    for e in catalog::entries() {
        let u = UAlgebra::truncated(&e.g);
        for x in e.g.space().even_indices() {
            let gx = u.generator(x);
            let w = u.sub(
                &u.power(&gx, e.g.field().p()).unwrap(),
                &u.embed(e.g.pmap_basis(x)),
            );
            for y in 0..e.g.dim() {
                let gy = u.generator(y);
                let comm = u.sub(&u.multiply(&w, &gy).unwrap(), &u.multiply(&gy, &w).unwrap());
                assert!(comm.is_zero(), "{} x{x} y{y}", e.id);
            }
        }
    }
}

/// `f(x^[p], x1) = −f(x1, x^[p])` since `x^[p]` is even, so the two readings
/// of `f_{x^[p]}` differ by `2 f(·, x^[p])`.
#[test]
fn swapped_reading_flips_the_pmap_term() {
    for e in catalog::entries() {
        let st = SixTerm::new(&e.g, &e.m).unwrap();
        let fld = e.g.field();
        let (c1, c2) = (&st.lie.spaces[1], &st.lie.spaces[2]);
        for f in gflin::nullspace(&st.lie.deltas[2]).basis_vectors() {
            for x in e.g.space().even_indices() {
                let a = phi_cochain(&e.g, &e.m, c1, c2, &f, x, FxpReading::Standard);
                let b = phi_cochain(&e.g, &e.m, c1, c2, &f, x, FxpReading::Swapped);
                let xp = e.g.pmap_basis(x).to_vec();
                let fx = c1.basis.from_values(|t| {
                    c2.eval_vectors(&e.g, e.m.dim(), &f, &[&vec_ops::unit(e.g.dim(), t[0]), &xp])
                });
                assert_eq!(
                    b,
                    vec_ops::sub(fld, &a, &vec_ops::scale(fld, 2, &fx)),
                    "{}",
                    e.id
                );
            }
        }
    }
}

#[test]
fn catalog_is_exact() {
    for e in catalog::entries() {
        let r = build_six_term(&e.g, &e.m).unwrap();
        assert!(r.all_exact(), "{}: {:?}", e.id, r.witnesses);
        assert!(r.euler_consistent, "{}", e.id);
        let m = &r.maps;
        for (a, b) in [
            (&m.i1, &m.psibar),
            (&m.psibar, &m.fg),
            (&m.fg, &m.pi),
            (&m.pi, &m.phi),
        ] {
            assert!(b.mul(a).unwrap().is_zero(), "{}", e.id);
        }
        // Ψ̄ vanishes on restricted classes
        assert!(m.psibar.mul(&m.i1).unwrap().is_zero());
    }
}

#[test]
fn fuzzed_semidirect_products_are_exact() {
    let mut rng = StdRng::seed_from_u64(2024);
    for _ in 0..12 {
        let (name, e) = catalog::fuzz_semidirect(&mut rng);
        assert!(e.validate_all().is_valid(), "{name}: {}", e.validate_all());
        let r = build_six_term(&e, &k(&e)).unwrap();
        assert!(r.all_exact(), "{name}: {:?}", r.witnesses);
    }
}

#[test]
fn report_serializes_losslessly() {
    let g = catalog::ab2(3, true);
    let r = build_six_term(&g, &k(&g)).unwrap();
    let text = serde_json::to_string(&r).unwrap();
    let back: supercoh::sixterm::SixTermReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
}
