//! Small algebra/module pairs with known cohomology, used by the tests and
//! by `supercoh examples`.

use rand::Rng;

use crate::extensions::{trivial_restricted, twist_pmap};
use crate::gflin::{Field, MatGF};
use crate::superalg::{
    invariants, semilinear_space, LieSuperAlgebra, Representation, SemiLinearMap, SuperSpace,
};

#[derive(Clone, Debug)]
pub struct Entry {
    pub id: &'static str,
    pub description: &'static str,
    pub g: LieSuperAlgebra,
    /// name of the module inside the algebra file
    pub module_name: &'static str,
    pub m: Representation,
}

fn space(even: &[&str], odd: &[&str]) -> SuperSpace {
    SuperSpace::new(
        even.iter().map(|s| s.to_string()).collect(),
        odd.iter().map(|s| s.to_string()).collect(),
    )
    .expect("distinct names")
}

fn abelian(p: u32, even: &[&str], odd: &[&str]) -> LieSuperAlgebra {
    LieSuperAlgebra::abelian(Field::new(p).expect("odd prime"), space(even, odd))
}

/// `⟨x⟩`, `x^[p] = 0`.
pub fn a1(p: u32) -> LieSuperAlgebra {
    abelian(p, &["x"], &[])
}

/// The torus `⟨x⟩`, `x^[p] = x`.
pub fn a2(p: u32) -> LieSuperAlgebra {
    let mut g = a1(p);
    g.set_pmap(0, vec![1]);
    g
}

/// Super Heisenberg `⟨z | y⟩` with `[y,y] = z`, `z^[p] = 0`.
pub fn a3(p: u32) -> LieSuperAlgebra {
    let mut g = abelian(p, &["z"], &["y"]);
    g.set_bracket(1, 1, vec![1, 0]);
    g
}

/// `⟨h, x⟩` with `[h,x] = x`, `h^[p] = h`, `x^[p] = 0`.
pub fn a4(p: u32) -> LieSuperAlgebra {
    let mut g = abelian(p, &["h", "x"], &[]);
    g.set_bracket(0, 1, vec![0, 1]);
    g.set_pmap(0, vec![1, 0]);
    g
}

/// `⟨h | y⟩` with `[h,y] = y`, `h^[p] = h`.
pub fn b1(p: u32) -> LieSuperAlgebra {
    let mut g = abelian(p, &["h"], &["y"]);
    g.set_bracket(0, 1, vec![0, 1]);
    g.set_pmap(0, vec![1, 0]);
    g
}

/// Abelian `⟨x1, x2⟩`, with `x1^[p] = x2` when `twisted`.
pub fn ab2(p: u32, twisted: bool) -> LieSuperAlgebra {
    let mut g = abelian(p, &["x1", "x2"], &[]);
    if twisted {
        g.set_pmap(0, vec![0, 1]);
    }
    g
}

/// Abelian `⟨x | y⟩` with zero p-map.
pub fn ab11(p: u32) -> LieSuperAlgebra {
    abelian(p, &["x"], &["y"])
}

/// One-dimensional even module on which the even basis vector `x_i` acts by `weights[i]`
/// and odd elements act by zero.
pub fn weight_module(g: &LieSuperAlgebra, weights: &[u32]) -> Representation {
    let f = g.field();
    let rho = (0..g.dim())
        .map(|i| MatGF::from_dense(f, 1, 1, &[vec![weights.get(i).copied().unwrap_or(0)]]))
        .collect();
    Representation::new(g, space(&["m"], &[]), rho).expect("1x1 matrices")
}

pub fn entries() -> Vec<Entry> {
    let k = |g: &LieSuperAlgebra| Representation::trivial_k(g);
    let mut out = Vec::new();
    let mut push = |id, description, g: LieSuperAlgebra, module_name, m: Representation| {
        out.push(Entry {
            id,
            description,
            g,
            module_name,
            m,
        })
    };
    let g = a1(3);
    push(
        "a1",
        "one even generator with zero p-map, trivial module",
        g.clone(),
        "k",
        k(&g),
    );
    let g = a2(3);
    push(
        "a2",
        "the one-dimensional torus, trivial module",
        g.clone(),
        "k",
        k(&g),
    );
    let g = a2(3);
    push(
        "a2-weight",
        "the torus acting by weight one",
        g.clone(),
        "w1",
        weight_module(&g, &[1]),
    );
    let g = a3(3);
    push(
        "a3",
        "super Heisenberg [y,y] = z, trivial module",
        g.clone(),
        "k",
        k(&g),
    );
    push(
        "a3-adjoint",
        "super Heisenberg on itself",
        g.clone(),
        "adjoint",
        Representation::adjoint(&g),
    );
    let g = a4(3);
    push(
        "a4",
        "[h,x] = x with h toral, trivial module",
        g.clone(),
        "k",
        k(&g),
    );
    push(
        "a4-adjoint",
        "[h,x] = x on itself",
        g.clone(),
        "adjoint",
        Representation::adjoint(&g),
    );
    let adj = Representation::adjoint(&g);
    push(
        "a4-coadjoint",
        "[h,x] = x on the dual of its adjoint module",
        g.clone(),
        "coadjoint",
        Representation::dual(&g, &adj),
    );
    let g = b1(3);
    push(
        "b1",
        "[h,y] = y with y odd, trivial module",
        g.clone(),
        "k",
        k(&g),
    );
    push(
        "b1-adjoint",
        "[h,y] = y with y odd, on itself",
        g.clone(),
        "adjoint",
        Representation::adjoint(&g),
    );
    let g = ab2(3, false);
    push(
        "ab2",
        "abelian of dimension two with zero p-map",
        g.clone(),
        "k",
        k(&g),
    );
    let g = ab2(3, true);
    push(
        "ab2-twisted",
        "abelian of dimension two with x1^[3] = x2",
        g.clone(),
        "k",
        k(&g),
    );
    let g = a1(5);
    push(
        "a1-p5",
        "one even generator over GF(5)",
        g.clone(),
        "k",
        k(&g),
    );
    let g = ab11(5);
    push(
        "ab11-p5",
        "abelian with one even and one odd generator over GF(5)",
        g.clone(),
        "k",
        k(&g),
    );
    let g = a3(5);
    push(
        "a3-p5",
        "super Heisenberg over GF(5)",
        g.clone(),
        "k",
        k(&g),
    );
    out
}

pub fn find(id: &str) -> Option<Entry> {
    entries().into_iter().find(|e| e.id == id)
}

/// A random `g ⋉ M` over GF(3) whose p-map is shifted by a random map into
/// `M₀^g`, small enough that its bar complex in degree three stays cheap.
pub fn fuzz_semidirect<R: Rng>(rng: &mut R) -> (String, LieSuperAlgebra) {
    let bases: [(&str, fn(u32) -> LieSuperAlgebra); 5] = [
        ("a1", a1),
        ("a2", a2),
        ("a3", a3),
        ("b1", b1),
        ("ab11", ab11),
    ];
    let (gname, make) = bases[rng.gen_range(0..bases.len())];
    let g = make(3);
    let toral = g.pmap_basis(0)[0] == 1;
    let (mname, m) = match rng.gen_range(0..4) {
        0 => ("k".to_string(), Representation::trivial_k(&g)),
        1 => (
            "odd-line".to_string(),
            Representation::trivial(&g, space(&[], &["n"])),
        ),
        2 if g.dim() == 1 => ("adjoint".to_string(), Representation::adjoint(&g)),
        _ => {
            let w = if toral { rng.gen_range(0..3) } else { 0 };
            (format!("weight{w}"), weight_module(&g, &[w]))
        }
    };
    let f = g.field();
    let (_, inv0) = invariants(&g, &m);
    let twist = semilinear_space(g.n_even(), &inv0)
        .iter()
        .fold(SemiLinearMap::zero(g.n_even(), m.dim()), |acc, b| {
            acc.add(f, &b.scale(f, rng.gen_range(0..3)))
        });
    let e = twist_pmap(&trivial_restricted(&g, &m), &twist).expect("values are invariant");
    (format!("{gname}⋉{mname}"), e.ext.e)
}
