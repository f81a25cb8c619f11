//! The subcommands, as functions from input text to a report and an exit code.

use std::fmt::Write as _;

use supercoh::catalog;
use supercoh::cohomology::{
    lie_cohomology_of, restricted_cohomology_of, AssocComplex, CochainBasis, Kind, LieComplex,
};
use supercoh::envelope::UAlgebra;
use supercoh::sixterm::{build_six_term_named, SixTermReport};
use supercoh::superalg::{LieSuperAlgebra, Representation};

use crate::format::{parse_algebra, to_file, to_json, LoadError, Loaded};
use crate::report::{
    CohomologyPayload, ExampleSummary, ExamplesPayload, Payload, Report, SelftestPayload,
    ValidationPayload,
};
use crate::selftest;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Parse = 2,
    Validation = 3,
    /// an exactness verdict or a self-test check failed
    Check = 4,
    Internal = 5,
}

/// What a command produced: human-readable text for stdout, messages for
/// stderr, an optional report and the exit code.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub report: Option<Report>,
    pub exit: Exit,
}

impl Outcome {
    fn fail(exit: Exit, stderr: String) -> Self {
        Outcome {
            stdout: String::new(),
            stderr,
            report: None,
            exit,
        }
    }
}

fn load_failure(e: LoadError) -> Outcome {
    let exit = match e {
        LoadError::Parse(_) => Exit::Parse,
        LoadError::Validation(_) => Exit::Validation,
    };
    Outcome::fail(exit, e.to_string())
}

fn warnings_text(l: &Loaded) -> String {
    l.warnings
        .iter()
        .map(|w| format!("warning: {w}\n"))
        .collect()
}

fn internal(e: supercoh::Error) -> Outcome {
    Outcome::fail(Exit::Internal, format!("internal error: {e}\n"))
}

pub fn validate(source: &str, text: &str, p_override: Option<u32>) -> Outcome {
    let mut payload = ValidationPayload::default();
    let (exit, stdout, stderr) = match parse_algebra(text, p_override) {
        Ok(l) => {
            payload.valid = true;
            payload.p = Some(l.g.field().p());
            payload.algebra_dim = Some((l.g.n_even(), l.g.dim() - l.g.n_even()));
            payload.modules = l.modules.iter().map(|(n, _)| n.clone()).collect();
            payload.warnings = l.warnings.clone();
            let out = format!(
                "{source}: valid, dimension ({}|{}) over GF({}), modules: {}\n",
                l.g.n_even(),
                l.g.dim() - l.g.n_even(),
                l.g.field().p(),
                if payload.modules.is_empty() {
                    "none".to_string()
                } else {
                    payload.modules.join(", ")
                }
            );
            (Exit::Ok, out, warnings_text(&l))
        }
        Err(LoadError::Parse(ds)) => {
            payload.diagnostics = ds.iter().map(|d| d.to_string()).collect();
            let err = LoadError::Parse(ds).to_string();
            (
                Exit::Parse,
                String::new(),
                format!("{source}: parse error\n{err}"),
            )
        }
        Err(LoadError::Validation(fs)) => {
            let err = LoadError::Validation(fs.clone()).to_string();
            payload.failures = fs;
            (
                Exit::Validation,
                String::new(),
                format!("{source}: invalid\n{err}"),
            )
        }
    };
    let report = Report::new("validate", text.as_bytes(), Payload::Validation(payload));
    Outcome {
        stdout,
        stderr,
        report: Some(report),
        exit,
    }
}

fn monomial_label(u: &UAlgebra, i: usize) -> String {
    let g = u.lie();
    let m = &u.aug_ideal_basis()[i];
    let mut parts = Vec::new();
    for (pos, &e) in m.exponents().iter().enumerate() {
        let name = g.space().name(u.order()[pos]);
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("")
}

fn cochain_labels(
    basis: &CochainBasis,
    m: &Representation,
    arg: impl Fn(usize) -> String,
) -> Vec<String> {
    basis
        .entries()
        .iter()
        .map(|(t, r)| {
            let args: Vec<String> = t.iter().map(|&a| arg(a)).collect();
            format!("({}) -> {}", args.join(", "), m.space().name(*r))
        })
        .collect()
}

fn pick_module<'a>(l: &'a Loaded, module: &str) -> Result<&'a Representation, Outcome> {
    l.module(module).ok_or_else(|| {
        let known: Vec<&str> = l.modules.iter().map(|(n, _)| n.as_str()).collect();
        Outcome::fail(
            Exit::Parse,
            format!(
                "no module named `{module}` (file defines: {})\n",
                known.join(", ")
            ),
        )
    })
}

pub fn cohomology(
    source: &str,
    text: &str,
    module: &str,
    degree: usize,
    kind: Kind,
    p_override: Option<u32>,
) -> Outcome {
    let l = match parse_algebra(text, p_override) {
        Ok(l) => l,
        Err(e) => return load_failure(e),
    };
    let m = match pick_module(&l, module) {
        Ok(m) => m,
        Err(o) => return o,
    };
    if degree > 2 {
        return Outcome::fail(
            Exit::Parse,
            format!("degree must be 0, 1 or 2 (got {degree})\n"),
        );
    }
    let g = &l.g;
    let computed = match kind {
        Kind::Lie => LieComplex::new(g, m, degree).and_then(|cx| {
            let h = lie_cohomology_of(g, &cx, degree)?;
            Ok((
                h,
                cochain_labels(&cx.spaces[degree].basis, m, |a| {
                    g.space().name(a).to_string()
                }),
            ))
        }),
        Kind::Restricted => {
            let u = UAlgebra::restricted(g);
            AssocComplex::new(&u, m, degree).and_then(|cx| {
                let h = restricted_cohomology_of(g, &cx, degree)?;
                Ok((
                    h,
                    cochain_labels(&cx.spaces[degree].basis, m, |a| monomial_label(&u, a)),
                ))
            })
        }
    };
    let (h, labels) = match computed {
        Ok(x) => x,
        Err(e) => return internal(e),
    };
    let algebra = l.name.clone().unwrap_or_else(|| source.to_string());
    let kind_name = match kind {
        Kind::Lie => "H",
        Kind::Restricted => "H_*",
    };
    let mut out = format!(
        "{kind_name}^{degree}({algebra}, {module}) over GF({}): dimension {}\n",
        g.field().p(),
        h.dim()
    );
    let _ = writeln!(
        out,
        "  cocycles {}, coboundaries {}, cochains {}",
        h.z.dim(),
        h.b.dim(),
        labels.len()
    );
    for (k, r) in h.reps.iter().enumerate() {
        let terms: Vec<String> = r
            .iter()
            .zip(&labels)
            .filter(|(&c, _)| c != 0)
            .map(|(c, l)| format!("{c}·{l}"))
            .collect();
        let _ = writeln!(out, "  class {k}: {}", terms.join(" + "));
    }
    let payload = CohomologyPayload {
        algebra,
        module: module.to_string(),
        p: g.field().p(),
        kind,
        degree,
        dim: h.dim(),
        cocycles_dim: h.z.dim(),
        coboundaries_dim: h.b.dim(),
        cochain_basis: labels,
        representatives: h.reps.clone(),
    };
    let report = Report::new("cohomology", text.as_bytes(), Payload::Cohomology(payload));
    Outcome {
        stdout: out,
        stderr: warnings_text(&l),
        report: Some(report),
        exit: Exit::Ok,
    }
}

pub fn sixterm_text(r: &SixTermReport) -> String {
    let d = &r.dims;
    let k = &r.ranks;
    let mut out = format!(
        "{} with coefficients {} over GF({})\n",
        r.algebra, r.module, r.p
    );
    let _ = writeln!(
        out,
        "  0 -> H1_* [{}] -> H1 [{}] -> S(g0, M0^g) [{}] -> H2_* [{}] -> H2 [{}] -> S(g0, H1) [{}]",
        d.h1s, d.h1, d.s1, d.h2s, d.h2, d.starget
    );
    let _ = writeln!(
        out,
        "  ranks: i1 {}, psi {}, FG {}, pi {}, phi {}",
        k[0], k[1], k[2], k[3], k[4]
    );
    if r.all_exact() {
        out.push_str("  exact at every node\n");
    } else {
        for w in &r.witnesses {
            let _ = writeln!(out, "  not exact at {}: {} {:?}", w.node, w.kind, w.vector);
        }
    }
    if let Some(t) = &r.timings {
        let _ = writeln!(
            out,
            "  timings (ms): setup {:.1}, i1 {:.1}, psi {:.1}, FG {:.1}, pi {:.1}, phi {:.1}",
            t.setup_ms, t.i1_ms, t.psibar_ms, t.fg_ms, t.pi_ms, t.phi_ms
        );
    }
    out
}

pub fn sixterm(
    source: &str,
    text: &str,
    module: &str,
    p_override: Option<u32>,
    timings: bool,
) -> Outcome {
    let l = match parse_algebra(text, p_override) {
        Ok(l) => l,
        Err(e) => return load_failure(e),
    };
    let m = match pick_module(&l, module) {
        Ok(m) => m,
        Err(o) => return o,
    };
    let algebra = l.name.clone().unwrap_or_else(|| source.to_string());
    let r = match build_six_term_named(&l.g, m, &algebra, module, timings) {
        Ok(r) => r,
        Err(e) => return internal(e),
    };
    let exit = if r.all_exact() { Exit::Ok } else { Exit::Check };
    let stdout = sixterm_text(&r);
    let report = Report::new("sixterm", text.as_bytes(), Payload::SixTerm(Box::new(r)));
    Outcome {
        stdout,
        stderr: warnings_text(&l),
        report: Some(report),
        exit,
    }
}

/// The catalog entry as an algebra file.
pub fn example_text(e: &catalog::Entry) -> String {
    to_json(&to_file(Some(e.id), &e.g, &[(e.module_name, &e.m)]))
}

pub fn examples_list() -> Outcome {
    let mut out = String::new();
    for e in catalog::entries() {
        let _ = writeln!(
            out,
            "{:<14} GF({})  {}",
            e.id,
            e.g.field().p(),
            e.description
        );
    }
    Outcome {
        stdout: out,
        stderr: String::new(),
        report: None,
        exit: Exit::Ok,
    }
}

pub fn examples_show(id: &str) -> Outcome {
    match catalog::find(id) {
        Some(e) => Outcome {
            stdout: example_text(&e),
            stderr: String::new(),
            report: None,
            exit: Exit::Ok,
        },
        None => Outcome::fail(
            Exit::Parse,
            format!("no example `{id}`; see `supercoh examples list`\n"),
        ),
    }
}

fn run_one(
    text: &str,
    module: &str,
    timings: bool,
) -> Result<(LieSuperAlgebra, SixTermReport), String> {
    let l = parse_algebra(text, None).map_err(|e| e.to_string())?;
    let m = l
        .module(module)
        .ok_or_else(|| format!("module `{module}` missing"))?;
    let name = l.name.clone().unwrap_or_default();
    let r = build_six_term_named(&l.g, m, &name, module, timings).map_err(|e| e.to_string())?;
    Ok((l.g, r))
}

/// Every catalog entry, written out as a file, read back and pushed through
/// the six-term sequence.
pub fn examples_run_all(timings: bool) -> Outcome {
    let mut all_text = String::new();
    let mut out = String::new();
    let mut err = String::new();
    let mut entries = Vec::new();
    let mut exit = Exit::Ok;
    for e in catalog::entries() {
        let text = example_text(&e);
        all_text.push_str(&text);
        match run_one(&text, e.module_name, timings) {
            Ok((g, r)) => {
                if g != e.g {
                    let _ = writeln!(
                        err,
                        "{}: algebra changed on the way through the file format",
                        e.id
                    );
                    exit = Exit::Internal;
                }
                if !r.all_exact() {
                    exit = exit.max_with(Exit::Check);
                }
                out.push_str(&sixterm_text(&r));
                entries.push(ExampleSummary {
                    id: e.id.to_string(),
                    p: r.p,
                    dims: r.dims,
                    ranks: r.ranks.clone(),
                    exact: r.all_exact(),
                });
            }
            Err(msg) => {
                let _ = writeln!(err, "{}: {msg}", e.id);
                exit = Exit::Internal;
            }
        }
    }
    let all_exact = entries.iter().all(|s| s.exact) && exit == Exit::Ok;
    let _ = writeln!(
        out,
        "{} of {} examples exact",
        entries.iter().filter(|s| s.exact).count(),
        catalog::entries().len()
    );
    let report = Report::new(
        "examples run-all",
        all_text.as_bytes(),
        Payload::Examples(ExamplesPayload { entries, all_exact }),
    );
    Outcome {
        stdout: out,
        stderr: err,
        report: Some(report),
        exit,
    }
}

impl Exit {
    /// the more severe of two codes
    fn max_with(self, other: Exit) -> Exit {
        if (other as i32) > (self as i32) {
            other
        } else {
            self
        }
    }
}

pub fn selftest(seed: u64) -> Outcome {
    let suites = selftest::all(seed);
    let mut out = String::new();
    for s in &suites {
        let mark = if s.passed() { "ok  " } else { "FAIL" };
        let _ = writeln!(out, "{mark} {} ({} checks)", s.name, s.checks);
        for f in s.failures.iter().take(5) {
            let _ = writeln!(out, "     {f}");
        }
    }
    let passed = suites.iter().all(|s| s.passed());
    let payload = SelftestPayload {
        seed,
        suites,
        passed,
    };
    let report = Report::new(
        "selftest",
        seed.to_string().as_bytes(),
        Payload::Selftest(payload),
    );
    Outcome {
        stdout: out,
        stderr: String::new(),
        report: Some(report),
        exit: if passed { Exit::Ok } else { Exit::Check },
    }
}
