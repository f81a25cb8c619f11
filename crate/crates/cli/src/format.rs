//! The JSON algebra file: structure constants, p-map and named modules.
//!
//! ```json
//! {
//!   "p": 3,
//!   "even": ["z"],
//!   "odd": ["y"],
//!   "brackets": { "[y,y]": { "z": 1 } },
//!   "pmap": {},
//!   "modules": [
//!     { "name": "k", "even": ["m"], "odd": [], "action": {} }
//!   ]
//! }
//! ```
//!
//! Each bracket is written once; its super-skew partner is filled in.
//! Missing brackets, p-map values and action matrices are zero.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use supercoh::gflin::{is_prime, Field, MatGF};
use supercoh::superalg::{LieSuperAlgebra, Representation, SuperSpace, ValidationReport};

pub const DEFAULT_P: u32 = 3;

type Coeffs = BTreeMap<String, i64>;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    pub even: Vec<String>,
    #[serde(default)]
    pub odd: Vec<String>,
    #[serde(default)]
    pub brackets: BTreeMap<String, Coeffs>,
    #[serde(default)]
    pub pmap: BTreeMap<String, Coeffs>,
    #[serde(default)]
    pub modules: Vec<ModuleFile>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub name: String,
    #[serde(default)]
    pub even: Vec<String>,
    #[serde(default)]
    pub odd: Vec<String>,
    /// row-major `dim M × dim M` matrix per algebra basis name
    #[serde(default)]
    pub action: BTreeMap<String, Vec<Vec<i64>>>,
    /// read and then discarded: coefficient modules are strongly abelian
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pmap: Option<BTreeMap<String, Coeffs>>,
}

/// A problem with the input, with the 1-based line it was traced to when known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

#[derive(Clone, Debug)]
pub enum LoadError {
    /// syntax, shape or naming problems
    Parse(Vec<Diagnostic>),
    /// the data parses but breaks an axiom; one report per failing object
    Validation(Vec<(String, ValidationReport)>),
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Parse(ds) => {
                for d in ds {
                    writeln!(f, "{d}")?;
                }
                Ok(())
            }
            LoadError::Validation(rs) => {
                for (who, r) in rs {
                    writeln!(f, "{who}:")?;
                    write!(f, "{r}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct Loaded {
    pub name: Option<String>,
    pub g: LieSuperAlgebra,
    pub modules: Vec<(String, Representation)>,
    pub warnings: Vec<String>,
}

impl Loaded {
    pub fn module(&self, name: &str) -> Option<&Representation> {
        self.modules.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }
}

/// First line mentioning `"needle"`, as a best-effort location.
fn line_of(text: &str, needle: &str) -> Option<usize> {
    let quoted = format!("\"{needle}\"");
    text.lines()
        .position(|l| l.contains(&quoted))
        .map(|i| i + 1)
}

struct Ctx<'a> {
    text: &'a str,
    diags: Vec<Diagnostic>,
}

impl Ctx<'_> {
    fn err(&mut self, anchor: &str, message: String) {
        let line = line_of(self.text, anchor);
        self.diags.push(Diagnostic { line, message });
    }
}

fn parse_key(key: &str) -> Option<(&str, &str)> {
    let inner = key.trim().strip_prefix('[')?.strip_suffix(']')?;
    let (a, b) = inner.split_once(',')?;
    Some((a.trim(), b.trim()))
}

fn coeff_vector(
    ctx: &mut Ctx,
    f: Field,
    names: &SuperSpace,
    coeffs: &Coeffs,
    anchor: &str,
) -> Vec<u32> {
    let mut v = vec![0u32; names.dim()];
    for (n, &c) in coeffs {
        match names.index_of(n) {
            Some(i) => v[i] = f.reduce(c),
            None => ctx.err(anchor, format!("unknown basis element `{n}` in `{anchor}`")),
        }
    }
    v
}

fn super_space(ctx: &mut Ctx, even: &[String], odd: &[String], what: &str) -> Option<SuperSpace> {
    match SuperSpace::new(even.to_vec(), odd.to_vec()) {
        Ok(s) => Some(s),
        Err(e) => {
            let anchor = even.first().or(odd.first()).cloned().unwrap_or_default();
            ctx.err(&anchor, format!("{what}: {e}"));
            None
        }
    }
}

/// Reads a file, picks the prime (`p_override` only if the file has none),
/// and validates the algebra and every module.
pub fn parse_algebra(text: &str, p_override: Option<u32>) -> Result<Loaded, LoadError> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| {
        LoadError::Parse(vec![Diagnostic {
            line: Some(e.line()),
            message: e.to_string(),
        }])
    })?;
    build(text, &file, p_override)
}

pub fn build(text: &str, file: &AlgebraFile, p_override: Option<u32>) -> Result<Loaded, LoadError> {
    let mut ctx = Ctx {
        text,
        diags: Vec::new(),
    };
    let p = match (file.p, p_override) {
        (Some(p), Some(q)) if p != q => {
            ctx.err(
                "p",
                format!("--p-override {q} conflicts with p = {p} fixed by the file"),
            );
            p
        }
        (Some(_), Some(_)) => {
            ctx.err(
                "p",
                "--p-override given but the file already fixes p".to_string(),
            );
            file.p.unwrap_or(DEFAULT_P)
        }
        (Some(p), None) | (None, Some(p)) => p,
        (None, None) => DEFAULT_P,
    };
    if p == 2 || !is_prime(p) {
        ctx.err("p", format!("p must be an odd prime (got {p})"));
        return Err(LoadError::Parse(ctx.diags));
    }
    let f = Field::new(p).expect("checked above");
    let Some(space) = super_space(&mut ctx, &file.even, &file.odd, "algebra basis") else {
        return Err(LoadError::Parse(ctx.diags));
    };
    let n = space.dim();
    let mut g = LieSuperAlgebra::abelian(f, space.clone());
    let mut given = vec![vec![false; n]; n];
    for (key, coeffs) in &file.brackets {
        let Some((a, b)) = parse_key(key) else {
            ctx.err(
                key,
                format!("bracket key `{key}` is not of the form \"[a,b]\""),
            );
            continue;
        };
        let (Some(i), Some(j)) = (space.index_of(a), space.index_of(b)) else {
            ctx.err(
                key,
                format!("bracket `{key}` names an unknown basis element"),
            );
            continue;
        };
        let v = coeff_vector(&mut ctx, f, &space, coeffs, key);
        g.set_bracket_raw(i, j, v);
        given[i][j] = true;
    }
    // complete partners of pairs written once
    for i in 0..n {
        for j in 0..n {
            if given[i][j] && !given[j][i] && i != j {
                let s = f.neg(f.sign(space.parity(i).koszul(space.parity(j))));
                let v: Vec<u32> = g.bracket_basis(i, j).iter().map(|&c| f.mul(s, c)).collect();
                g.set_bracket_raw(j, i, v);
            }
        }
    }
    for (name, coeffs) in &file.pmap {
        match space.index_of(name) {
            Some(i) if i < space.n_even() => {
                let v = coeff_vector(&mut ctx, f, &space, coeffs, name);
                g.set_pmap(i, v);
            }
            Some(_) => ctx.err(name, format!("p-map given on odd element `{name}`")),
            None => ctx.err(name, format!("p-map given on unknown element `{name}`")),
        }
    }
    let mut warnings = Vec::new();
    let mut modules = Vec::new();
    for mf in &file.modules {
        let Some(ms) = super_space(
            &mut ctx,
            &mf.even,
            &mf.odd,
            &format!("module `{}`", mf.name),
        ) else {
            continue;
        };
        let d = ms.dim();
        let mut rho = vec![MatGF::zeros(f, d, d); n];
        for (gname, rows) in &mf.action {
            let Some(i) = space.index_of(gname) else {
                ctx.err(
                    gname,
                    format!("module `{}` acts by unknown element `{gname}`", mf.name),
                );
                continue;
            };
            if rows.len() != d || rows.iter().any(|r| r.len() != d) {
                ctx.err(
                    gname,
                    format!("module `{}`: action of `{gname}` must be {d}x{d}", mf.name),
                );
                continue;
            }
            let dense: Vec<Vec<u32>> = rows
                .iter()
                .map(|r| r.iter().map(|&c| f.reduce(c)).collect())
                .collect();
            rho[i] = MatGF::from_dense(f, d, d, &dense);
        }
        if let Some(pm) = &mf.pmap {
            if pm.values().any(|c| c.values().any(|&v| f.reduce(v) != 0)) {
                warnings.push(format!(
                    "module `{}`: nonzero p-map ignored, coefficients are strongly abelian",
                    mf.name
                ));
            }
        }
        if modules
            .iter()
            .any(|(m, _): &(String, Representation)| *m == mf.name)
        {
            ctx.err(&mf.name, format!("module `{}` defined twice", mf.name));
            continue;
        }
        match Representation::new(&g, ms, rho) {
            Ok(r) => modules.push((mf.name.clone(), r)),
            Err(e) => ctx.err(&mf.name, format!("module `{}`: {e}", mf.name)),
        }
    }
    if !ctx.diags.is_empty() {
        return Err(LoadError::Parse(ctx.diags));
    }
    let mut failures = Vec::new();
    let rep = g.validate_all();
    if !rep.is_valid() {
        failures.push(("algebra".to_string(), rep));
    } else {
        for (name, m) in &modules {
            let r = m.validate(&g, true);
            if !r.is_valid() {
                failures.push((format!("module `{name}`"), r));
            }
        }
    }
    if !failures.is_empty() {
        return Err(LoadError::Validation(failures));
    }
    if p >= 7 {
        let dim_u = (p as f64).powi(g.n_even() as i32) * 2f64.powi((n - g.n_even()) as i32);
        for (name, m) in &modules {
            let entries = (dim_u - 1.0).powi(3) * m.dim() as f64;
            if entries > 1e7 {
                warnings.push(format!("module `{name}`: the degree-three bar cochains have about {entries:.1e} entries"));
            }
        }
    }
    Ok(Loaded {
        name: file.name.clone(),
        g,
        modules,
        warnings,
    })
}

/// The file describing `g` and the given modules; brackets are written once
/// per unordered pair and zero entries are left out.
pub fn to_file(
    name: Option<&str>,
    g: &LieSuperAlgebra,
    modules: &[(&str, &Representation)],
) -> AlgebraFile {
    let sp = g.space();
    let f = g.field();
    let coeffs = |names: &SuperSpace, v: &[u32]| -> Coeffs {
        v.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (names.name(k).to_string(), f.signed(c)))
            .collect()
    };
    let mut brackets = BTreeMap::new();
    for i in 0..g.dim() {
        for j in i..g.dim() {
            let v = g.bracket_basis(i, j);
            if v.iter().any(|&c| c != 0) {
                brackets.insert(format!("[{},{}]", sp.name(i), sp.name(j)), coeffs(sp, v));
            }
        }
    }
    let pmap = sp
        .even_indices()
        .filter(|&i| g.pmap_basis(i).iter().any(|&c| c != 0))
        .map(|i| (sp.name(i).to_string(), coeffs(sp, g.pmap_basis(i))))
        .collect();
    let modules = modules
        .iter()
        .map(|(mname, m)| {
            let ms = m.space();
            let action = (0..g.dim())
                .filter(|&i| !m.action(i).is_zero())
                .map(|i| {
                    let rows = m
                        .action(i)
                        .to_dense()
                        .iter()
                        .map(|r| r.iter().map(|&c| f.signed(c)).collect())
                        .collect();
                    (sp.name(i).to_string(), rows)
                })
                .collect();
            ModuleFile {
                name: mname.to_string(),
                even: ms.names()[..ms.n_even()].to_vec(),
                odd: ms.names()[ms.n_even()..].to_vec(),
                action,
                pmap: None,
            }
        })
        .collect();
    AlgebraFile {
        name: name.map(str::to_string),
        p: Some(f.p()),
        even: sp.names()[..sp.n_even()].to_vec(),
        odd: sp.names()[sp.n_even()..].to_vec(),
        brackets,
        pmap,
        modules,
    }
}

pub fn to_json(file: &AlgebraFile) -> String {
    let mut s = serde_json::to_string_pretty(file).expect("plain data serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_file() {
        let l = parse_algebra(
            r#"{"p":3,"even":["x"],"odd":[],"brackets":{},"pmap":{"x":{}}}"#,
            None,
        )
        .unwrap();
        assert_eq!(l.g, supercoh::catalog::a1(3));
        assert!(l.modules.is_empty());
    }

    #[test]
    fn partner_is_completed() {
        let l = parse_algebra(
            r#"{"even":["h","x"],"brackets":{"[h,x]":{"x":1}},"pmap":{"h":{"h":1}}}"#,
            None,
        )
        .unwrap();
        assert_eq!(l.g, supercoh::catalog::a4(3));
        assert_eq!(l.g.bracket_basis(1, 0), &[0, 2]);
    }

    #[test]
    fn p_two_is_rejected() {
        let err = parse_algebra(r#"{"p":2,"even":["x"]}"#, None).unwrap_err();
        assert!(err.to_string().contains("p must be an odd prime"), "{err}");
    }

    #[test]
    fn override_only_when_unpinned() {
        let l = parse_algebra(r#"{"even":["x"]}"#, Some(5)).unwrap();
        assert_eq!(l.g.field().p(), 5);
        assert!(matches!(
            parse_algebra(r#"{"p":3,"even":["x"]}"#, Some(5)),
            Err(LoadError::Parse(_))
        ));
    }

    #[test]
    fn syntax_errors_carry_lines() {
        let err = parse_algebra("{\n\"even\": [\"x\"],\n\"odd\": [,]\n}", None).unwrap_err();
        match err {
            LoadError::Parse(d) => assert_eq!(d[0].line, Some(3)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_names_point_at_their_line() {
        let text = "{\n  \"even\": [\"x\"],\n  \"brackets\": {\n    \"[x,q]\": {\"x\": 1}\n  }\n}";
        match parse_algebra(text, None).unwrap_err() {
            LoadError::Parse(d) => assert_eq!(d[0].line, Some(4)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn module_pmap_is_dropped_with_a_warning() {
        let text = r#"{"even":["x"],"modules":[{"name":"k","even":["m"],"pmap":{"m":{"m":1}}}]}"#;
        let l = parse_algebra(text, None).unwrap();
        assert_eq!(l.warnings.len(), 1);
        assert!(l.module("k").unwrap().is_trivial());
    }

    #[test]
    fn catalog_round_trips_through_text() {
        for e in supercoh::catalog::entries() {
            let file = to_file(Some(e.id), &e.g, &[(e.module_name, &e.m)]);
            let l = parse_algebra(&to_json(&file), None).unwrap();
            assert_eq!(l.g, e.g, "{}", e.id);
            assert_eq!(l.module(e.module_name).unwrap(), &e.m, "{}", e.id);
        }
    }
}
