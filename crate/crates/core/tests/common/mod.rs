//! Test-only oracles written without the library's linear algebra or
//! cochain machinery.
#![allow(dead_code)]

use std::collections::BTreeMap;

use supercoh::superalg::{LieSuperAlgebra, Representation};

pub fn inv(p: u32, a: u32) -> u32 {
    (1..p)
        .find(|&b| (a as u64 * b as u64) % p as u64 == 1)
        .expect("nonzero")
}

/// Rank by schoolbook elimination on dense rows.
pub fn naive_rank(p: u32, mut rows: Vec<Vec<u32>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][c].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, piv);
        let iv = inv(p, rows[rank][c] % p);
        for x in rows[rank].iter_mut() {
            *x = (*x as u64 * iv as u64 % p as u64) as u32;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_multiple_of(p) {
                let k = rows[r][c] as u64;
                for cc in 0..cols {
                    let v =
                        (rows[r][cc] as u64 + (p as u64 - k) * rows[rank][cc] as u64) % p as u64;
                    rows[r][cc] = v as u32;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// An augmentation ideal given by a multiplication table on a basis with parities.
pub struct AugModel {
    pub p: u32,
    pub parity: Vec<u8>,
    /// `mul[a][b]` = coordinates of `a·b`
    pub mul: Vec<Vec<Vec<u32>>>,
}

impl AugModel {
    /// Commutative truncated polynomial ring `k[t]/(t^n)` minus constants, with
    /// `t` of the given parity; basis `t, t², …, t^{n−1}`.
    pub fn truncated(p: u32, n: usize, odd: bool) -> Self {
        let a = n - 1;
        let parity = (1..n)
            .map(|e| if odd { (e % 2) as u8 } else { 0 })
            .collect();
        let mul = (1..n)
            .map(|i| {
                (1..n)
                    .map(|j| {
                        let mut v = vec![0; a];
                        if i + j < n {
                            v[i + j - 1] = 1;
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        AugModel { p, parity, mul }
    }

    /// `k[x]/(x^p − x)` minus constants: basis `x, …, x^{p−1}`.
    pub fn torus(p: u32) -> Self {
        let n = p as usize;
        let mul = (1..n)
            .map(|i| {
                (1..n)
                    .map(|j| {
                        let mut v = vec![0; n - 1];
                        let mut e = i + j;
                        if e >= n {
                            e -= n - 1;
                        }
                        v[e - 1] = 1;
                        v
                    })
                    .collect()
            })
            .collect();
        AugModel {
            p,
            parity: vec![0; n - 1],
            mul,
        }
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    /// Dimensions of `H^0, H^1, H^2` of the bar complex with trivial
    /// coefficients `k` (even).
    pub fn bar_dims_trivial(&self) -> [usize; 3] {
        let a = self.dim();
        let tuples = |n: usize| -> Vec<Vec<usize>> {
            let mut out = vec![vec![]];
            for _ in 0..n {
                out = out
                    .into_iter()
                    .flat_map(|t| (0..a).map(move |i| [t.clone(), vec![i]].concat()))
                    .collect();
            }
            out.into_iter()
                .filter(|t| t.iter().map(|&i| self.parity[i] as usize).sum::<usize>() % 2 == 0)
                .collect()
        };
        let c: Vec<Vec<Vec<usize>>> = (0..4).map(tuples).collect();
        // δf(s1..s_{n+1}) = Σ_{i=1}^{n} (−1)^i f(.., s_i s_{i+1}, ..)
        let delta = |n: usize| -> Vec<Vec<u32>> {
            let src = &c[n];
            c[n + 1]
                .iter()
                .map(|t| {
                    let mut row = vec![0u32; src.len()];
                    for i in 0..n {
                        let prod = &self.mul[t[i]][t[i + 1]];
                        for (k, &coef) in prod.iter().enumerate() {
                            if coef == 0 {
                                continue;
                            }
                            let mut args = t[..i].to_vec();
                            args.push(k);
                            args.extend_from_slice(&t[i + 2..]);
                            if let Some(col) = src.iter().position(|s| *s == args) {
                                let sgn = if (i + 1) % 2 == 1 { self.p - 1 } else { 1 };
                                row[col] = (row[col] + sgn * coef) % self.p;
                            }
                        }
                    }
                    row
                })
                .collect()
        };
        let r: Vec<usize> = (0..3).map(|n| naive_rank(self.p, delta(n))).collect();
        [
            c[0].len() - r[0],
            c[1].len() - r[1] - r[0],
            c[2].len() - r[2] - r[1],
        ]
    }
}

fn mulmod(p: u32, a: u32, b: u32) -> u32 {
    (a as u64 * b as u64 % p as u64) as u32
}

/// Super-alternating cochains on canonical tuples (evens strictly increasing,
/// then odds weakly increasing), with the differential in its split form.
pub struct NaiveLie<'a> {
    pub g: &'a LieSuperAlgebra,
    pub m: &'a Representation,
    pub p: u32,
    pub n_even: usize,
}

impl<'a> NaiveLie<'a> {
    pub fn new(g: &'a LieSuperAlgebra, m: &'a Representation) -> Self {
        NaiveLie {
            g,
            m,
            p: g.field().p(),
            n_even: g.n_even(),
        }
    }

    fn odd(&self, i: usize) -> bool {
        i >= self.n_even
    }

    pub fn tuples(&self, n: usize) -> Vec<Vec<usize>> {
        let d = self.g.dim();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(
            me: &NaiveLie,
            n: usize,
            d: usize,
            start: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for i in start..d {
                cur.push(i);
                let next = if me.odd(i) { i } else { i + 1 };
                rec(me, n, d, next, cur, out);
                cur.pop();
            }
        }
        rec(self, n, d, 0, &mut cur, &mut out);
        out
    }

    /// Sorts basis arguments into canonical order; `None` for a repeated even index.
    fn sort(&self, args: &[usize]) -> Option<(bool, Vec<usize>)> {
        let mut v = args.to_vec();
        let mut neg = false;
        for i in 0..v.len() {
            for j in 0..v.len() - 1 - i {
                if v[j] > v[j + 1] {
                    if !(self.odd(v[j]) && self.odd(v[j + 1])) {
                        neg = !neg;
                    }
                    v.swap(j, j + 1);
                }
            }
        }
        for w in v.windows(2) {
            if w[0] == w[1] && !self.odd(w[0]) {
                return None;
            }
        }
        Some((neg, v))
    }

    /// Value of the cochain `f` (map tuple → M-vector) on vector arguments.
    pub fn eval(&self, f: &dyn Fn(&[usize]) -> Vec<u32>, args: &[Vec<u32>]) -> Vec<u32> {
        let md = self.m.dim();
        let mut out = vec![0u32; md];
        let mut idx = vec![0usize; args.len()];
        let d = self.g.dim();
        if args.is_empty() {
            return f(&[]);
        }
        loop {
            let coef = idx
                .iter()
                .enumerate()
                .fold(1u32, |acc, (k, &i)| mulmod(self.p, acc, args[k][i]));
            if coef != 0 {
                if let Some((neg, t)) = self.sort(&idx) {
                    let c = if neg { self.p - coef } else { coef };
                    for (o, v) in out.iter_mut().zip(f(&t)) {
                        *o = (*o + mulmod(self.p, c, v)) % self.p;
                    }
                }
            }
            let mut k = 0;
            loop {
                if k == idx.len() {
                    return out;
                }
                idx[k] += 1;
                if idx[k] < d {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    fn unit(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.g.dim()];
        v[i] = 1;
        v
    }

    fn act(&self, i: usize, v: &[u32]) -> Vec<u32> {
        let a = self.m.action(i).to_dense();
        a.iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(0, |acc, (&x, &y)| (acc + mulmod(self.p, x, y)) % self.p)
            })
            .collect()
    }

    /// `δf` on a canonical tuple `(x_1..x_{n0}, y_1..y_{n1})`, split form.
    pub fn delta_at(&self, f: &dyn Fn(&[usize]) -> Vec<u32>, t: &[usize]) -> Vec<u32> {
        let p = self.p;
        let md = self.m.dim();
        let n0 = t.iter().filter(|&&i| !self.odd(i)).count();
        let xs: Vec<usize> = t[..n0].to_vec();
        let ys: Vec<usize> = t[n0..].to_vec();
        let mut out = vec![0u32; md];
        let mut add = |sign_neg: bool, v: Vec<u32>| {
            for (o, x) in out.iter_mut().zip(v) {
                let x = if sign_neg { (p - x) % p } else { x };
                *o = (*o + x) % p;
            }
        };
        let units =
            |ids: &[usize]| -> Vec<Vec<u32>> { ids.iter().map(|&i| self.unit(i)).collect() };
        let without = |v: &[usize], k: usize| -> Vec<usize> {
            v.iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, &x)| x)
                .collect()
        };
        let bracket = |a: usize, b: usize| self.g.bracket_basis(a, b).to_vec();
        // x_s · f(.., x̂_s, ..)
        for s in 0..n0 {
            let args = units(&[without(&xs, s), ys.clone()].concat());
            add(s % 2 == 1, self.act(xs[s], &self.eval(f, &args)));
        }
        // y_t · f(x, .., ŷ_t, ..)
        for tt in 0..ys.len() {
            let args = units(&[xs.clone(), without(&ys, tt)].concat());
            add(n0 % 2 == 1, self.act(ys[tt], &self.eval(f, &args)));
        }
        // f([x_s, x_t], ..)
        for s in 0..n0 {
            for u in s + 1..n0 {
                let rest: Vec<usize> = xs
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != s && j != u)
                    .map(|(_, &x)| x)
                    .collect();
                let mut args = vec![bracket(xs[s], xs[u])];
                args.extend(units(&[rest, ys.clone()].concat()));
                add((s + 1 + u + 1) % 2 == 1, self.eval(f, &args));
            }
        }
        // f(.., x̂_s, .., [x_s, y_t], ŷ_t, ..)
        for s in 0..n0 {
            for u in 0..ys.len() {
                let mut args = units(&without(&xs, s));
                args.push(bracket(xs[s], ys[u]));
                args.extend(units(&without(&ys, u)));
                add((s + 1) % 2 == 1, self.eval(f, &args));
            }
        }
        // −f([y_s, y_t], x, ..)
        for s in 0..ys.len() {
            for u in s + 1..ys.len() {
                let rest: Vec<usize> = ys
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != s && j != u)
                    .map(|(_, &x)| x)
                    .collect();
                let mut args = vec![bracket(ys[s], ys[u])];
                args.extend(units(&[xs.clone(), rest].concat()));
                add(true, self.eval(f, &args));
            }
        }
        out
    }

    /// `(tuple, r)` pairs with `|tuple| + |r|` even.
    pub fn entries(&self, n: usize) -> Vec<(Vec<usize>, usize)> {
        let mut out = Vec::new();
        for t in self.tuples(n) {
            let tp = t.iter().filter(|&&i| self.odd(i)).count() % 2;
            for r in 0..self.m.dim() {
                let rp = usize::from(r >= self.m.space().n_even());
                if tp == rp {
                    out.push((t.clone(), r));
                }
            }
        }
        out
    }

    /// Dense matrix of `δ_n` in the `entries` bases.
    pub fn delta_matrix(&self, n: usize) -> Vec<Vec<u32>> {
        let src = self.entries(n);
        let dst = self.entries(n + 1);
        let mut rows = vec![vec![0u32; src.len()]; dst.len()];
        for (c, (t0, r0)) in src.iter().enumerate() {
            let md = self.m.dim();
            let f = |t: &[usize]| -> Vec<u32> {
                let mut v = vec![0; md];
                if t == t0.as_slice() {
                    v[*r0] = 1;
                }
                v
            };
            for (r, (t, rr)) in dst.iter().enumerate() {
                rows[r][c] = self.delta_at(&f, t)[*rr];
            }
        }
        rows
    }

    /// `dim H^0, H^1, H^2`.
    pub fn dims(&self) -> [usize; 3] {
        let c: Vec<usize> = (0..3).map(|n| self.entries(n).len()).collect();
        let r: Vec<usize> = (0..3)
            .map(|n| naive_rank(self.p, self.delta_matrix(n)))
            .collect();
        [c[0] - r[0], c[1] - r[1] - r[0], c[2] - r[2] - r[1]]
    }
}

/// Augmentation ideal of a two-generator algebra with PBW basis `a^i b^j`
/// (`i, j < p`), given the product of two basis monomials as a polynomial.
pub fn two_gen_model(
    p: u32,
    mul: impl Fn((usize, usize), (usize, usize)) -> BTreeMap<(usize, usize), u32>,
) -> AugModel {
    let n = p as usize;
    let basis: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&e| e != (0, 0))
        .collect();
    let idx = |e: (usize, usize)| basis.iter().position(|&b| b == e).expect("aug monomial");
    let table = basis
        .iter()
        .map(|&a| {
            basis
                .iter()
                .map(|&b| {
                    let mut v = vec![0u32; basis.len()];
                    for (e, c) in mul(a, b) {
                        if c % p != 0 {
                            v[idx(e)] = (v[idx(e)] + c) % p;
                        }
                    }
                    v
                })
                .collect()
        })
        .collect();
    AugModel {
        p,
        parity: vec![0; basis.len()],
        mul: table,
    }
}

/// `u(A4)`: `x h = (h − 1) x`, `h^3 = h`, `x^3 = 0`, basis `h^a x^b`.
pub fn a4_model() -> AugModel {
    let p = 3u32;
    // polynomial in h as coefficient vector, reduced by h^3 = h
    let reduce = |mut c: Vec<u32>| -> Vec<u32> {
        while c.len() > 3 {
            let top = c.pop().unwrap();
            let d = c.len();
            // h^d = h^{d-2}
            c[d - 2] = (c[d - 2] + top) % p;
        }
        c.resize(3, 0);
        c
    };
    let mul_poly = |a: &[u32], b: &[u32]| -> Vec<u32> {
        let mut out = vec![0u32; a.len() + b.len()];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        reduce(out)
    };
    two_gen_model(p, |(a, b), (c, d)| {
        let mut out = BTreeMap::new();
        if b + d >= 3 {
            return out;
        }
        // h^a (h − b)^c
        let shift = vec![(p - b as u32 % p) % p, 1];
        let mut poly = vec![1u32];
        for _ in 0..c {
            poly = mul_poly(&poly, &shift);
        }
        let mut ha = vec![0u32; a + 1];
        ha[a] = 1;
        let poly = mul_poly(&reduce(ha), &poly);
        for (e, &coef) in poly.iter().enumerate() {
            if coef != 0 {
                out.insert((e, b + d), coef);
            }
        }
        out
    })
}

/// `k[x1, x2]` with `x1^3 = x2` (twisted) or `x1^3 = 0`, and `x2^3 = 0`.
pub fn ab2_model(twisted: bool) -> AugModel {
    two_gen_model(3, move |(a, b), (c, d)| {
        let (mut e1, mut e2) = (a + c, b + d);
        if e1 >= 3 {
            if !twisted {
                return BTreeMap::new();
            }
            e1 -= 3;
            e2 += 1;
        }
        if e2 >= 3 {
            return BTreeMap::new();
        }
        BTreeMap::from([((e1, e2), 1)])
    })
}
