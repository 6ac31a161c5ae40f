//! Command-line front end. Every command produces a [`Report`]; `--json` prints it, otherwise a
//! human-readable rendering is printed.

use std::collections::BTreeMap;
use std::path::Path as FsPath;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::coxeter::{build_weyl_group, cross_validate, WeylType};
use crate::error::{Error, Result};
use crate::format::{parse_algebra, parse_algebra_file};
use crate::homology::{default_cap, ext_quiver, global_dim, minimal_resolution, simple_pds, Pd, ResolutionStatus};
use crate::liecoh::{self, parse_lie_algebra, LieAlgebra};
use crate::pathalg::{PathAlgebra, DEFAULT_CAP};
use crate::presets::{quiver_preset, self_test, LieKind, LIE_PRESETS, QUIVER_PRESETS};
use crate::repcat::{indecomposable_projective, loewy_series, simple};
use crate::serre::{extension_fullness, guichardet, initial_segments, serre_subcategory, ComparisonReport, Fullness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    pub results: Value,
    pub notes: Vec<String>,
    pub status: BTreeMap<String, String>,
    pub exit_code: i32,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidArgument(e.to_string()))
    }
}

#[derive(Parser, Debug)]
#[command(name = "homquiver", version, about = "Homological invariants of quiver algebras with relations")]
struct Cli {
    /// Emit the machine-readable report
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct AlgebraArg {
    /// Algebra file, or a bundled preset name (optionally prefixed by `presets/`)
    algebra: String,
    /// Maximal path length for saturation
    #[arg(long, default_value_t = DEFAULT_CAP)]
    path_cap: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normal-form basis of the algebra
    Basis(AlgebraArg),
    /// Dimension vectors and Loewy layers of the indecomposable projectives
    Projectives(AlgebraArg),
    /// Minimal projective resolution of a simple module
    Resolve {
        #[command(flatten)]
        alg: AlgebraArg,
        simple: String,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// dim Ext^d(M, N) between simples
    Ext {
        #[command(flatten)]
        alg: AlgebraArg,
        m: String,
        n: String,
        #[arg(long, default_value_t = 3)]
        max: usize,
    },
    /// Projective dimensions of the simples
    Pd {
        #[command(flatten)]
        alg: AlgebraArg,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Global dimension
    Gldim {
        #[command(flatten)]
        alg: AlgebraArg,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Table of dim Ext^d(L_i, L_j)
    ExtQuiver {
        #[command(flatten)]
        alg: AlgebraArg,
        #[arg(long, default_value_t = 2)]
        max: usize,
    },
    /// Serre subcategory generated by simples
    Serre {
        #[command(flatten)]
        alg: AlgebraArg,
        /// Comma-separated simples, e.g. `L1,L3`
        #[arg(long, value_delimiter = ',')]
        simples: Vec<String>,
        #[arg(long)]
        check_fullness: bool,
        #[arg(long, default_value_t = 4)]
        cap: usize,
    },
    /// Initial segments
    InitialSegments(AlgebraArg),
    /// Guichardet verdict with per-segment comparison reports
    Guichardet {
        #[command(flatten)]
        alg: AlgebraArg,
        #[arg(long, default_value_t = 4)]
        cap: usize,
    },
    /// Weyl group combinatorics and closed-form evaluators
    Coxeter {
        #[arg(long = "type")]
        weyl_type: String,
        /// Comma-separated generators, e.g. `s1`
        #[arg(long, value_delimiter = ',')]
        parabolic: Vec<String>,
        #[arg(long, default_value = "summary")]
        eval: String,
        #[arg(long, default_value = "e")]
        element: String,
        #[arg(long)]
        base_pd: Option<usize>,
    },
    /// Chevalley–Eilenberg cohomology
    Liecoh {
        #[arg(long, conflicts_with = "file")]
        preset: Option<String>,
        #[arg(long)]
        file: Option<String>,
        #[arg(long, default_value = "trivial")]
        module: String,
        #[arg(long)]
        degree: Option<i64>,
    },
    /// Show a bundled preset
    Preset {
        name: String,
        #[arg(long)]
        self_test: bool,
    },
    /// Compare closed-form predictions with the engine on an annotated preset
    CrossValidate { preset: String },
}

/// Resolve an algebra argument: file, file with `.quiver`, then bundled preset.
pub fn load_algebra(arg: &str, path_cap: usize) -> Result<PathAlgebra> {
    let desc = if FsPath::new(arg).is_file() {
        parse_algebra_file(FsPath::new(arg))?
    } else if FsPath::new(&format!("{arg}.quiver")).is_file() {
        parse_algebra_file(FsPath::new(&format!("{arg}.quiver")))?
    } else {
        let name = arg.strip_prefix("presets/").unwrap_or(arg);
        match quiver_preset(name) {
            Ok(p) => parse_algebra(p.text)?,
            Err(_) => return Err(Error::Io(format!("no algebra file or preset named `{arg}`"))),
        }
    };
    desc.build(path_cap)
}

/// `L3`, `3` or `P3` to a vertex index.
fn vertex_arg(a: &PathAlgebra, s: &str) -> Result<usize> {
    let q = a.quiver();
    q.vertex_index(s)
        .or_else(|| s.strip_prefix(['L', 'P']).and_then(|t| q.vertex_index(t)))
        .ok_or_else(|| Error::InvalidArgument(format!("unknown simple `{s}`")))
}

fn lname(a: &PathAlgebra, v: usize) -> String {
    format!("L{}", a.quiver().vertices()[v])
}

fn term_name(a: &PathAlgebra, mult: &[usize]) -> String {
    let parts: Vec<String> = mult
        .iter()
        .enumerate()
        .filter(|(_, &m)| m > 0)
        .map(|(v, &m)| {
            let p = format!("P{}", a.quiver().vertices()[v]);
            if m == 1 {
                p
            } else {
                format!("{m}{p}")
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

fn pd_json(p: Pd) -> Value {
    match p {
        Pd::Finite(n) => json!(n),
        Pd::Infinite => json!("inf"),
    }
}

fn segment_names(a: &PathAlgebra, s: &[usize]) -> Vec<String> {
    s.iter().map(|&v| lname(a, v)).collect()
}

fn fullness_json(a: &PathAlgebra, r: &ComparisonReport) -> Value {
    let verdict = match r.verdict {
        Fullness::ExtensionFull => "extension full",
        Fullness::NotExtensionFull => "not extension full",
        Fullness::NoFailureUpToCap => "no failure up to cap",
    };
    json!({
        "simples": segment_names(a, &r.simples),
        "exponent": r.exponent,
        "gl_dim_ambient": r.gl_dim_ambient.map(pd_json),
        "gl_dim_sub": r.gl_dim_sub.map(pd_json),
        "checked_up_to": r.checked_up_to,
        "verdict": verdict,
        "certified": r.certified,
        "first_failure": r.first_failure.as_ref().map(|c| json!({
            "degree": c.degree,
            "pair": c.pair.map(|(i, j)| [lname(a, i), lname(a, j)]),
            "dim_sub": c.dim_sub,
            "dim_ambient": c.dim_ambient,
            "rank": c.rank,
        })),
        "entries": r.entries.iter().map(|c| json!({
            "degree": c.degree,
            "pair": c.pair.map(|(i, j)| [lname(a, i), lname(a, j)]),
            "dim_sub": c.dim_sub,
            "dim_ambient": c.dim_ambient,
            "rank": c.rank,
            "injective": c.injective,
            "surjective": c.surjective,
        })).collect::<Vec<_>>(),
    })
}

struct Out {
    results: Value,
    human: Vec<String>,
    notes: Vec<String>,
    status: BTreeMap<String, String>,
    exit_code: i32,
}

impl Out {
    fn new(results: Value, human: Vec<String>) -> Self {
        Out {
            results,
            human,
            notes: Vec::new(),
            status: BTreeMap::new(),
            exit_code: EXIT_OK,
        }
    }
}

fn cap_or_default(a: &PathAlgebra, cap: Option<usize>) -> usize {
    cap.unwrap_or_else(|| default_cap(a))
}

fn dispatch(cmd: Command) -> Result<Out> {
    match cmd {
        Command::Basis(alg) => {
            let a = load_algebra(&alg.algebra, alg.path_cap)?;
            let basis: Vec<String> = a.basis().iter().map(|p| a.write_path(p)).collect();
            let human = vec![
                format!("dimension {}", a.dim()),
                format!("saturation length {}", a.saturation_length()),
                format!("basis: {}", basis.join(", ")),
            ];
            Ok(Out::new(
                json!({"dim": a.dim(), "saturation_length": a.saturation_length(), "basis": basis}),
                human,
            ))
        }
        Command::Projectives(alg) => {
            let a = Arc::new(load_algebra(&alg.algebra, alg.path_cap)?);
            let mut rows = Vec::new();
            let mut human = Vec::new();
            for v in a.simples() {
                let p = indecomposable_projective(&a, v);
                let layers: Vec<String> = loewy_series(&p).iter().map(|l| term_name(&a, l).replace('P', "L")).collect();
                human.push(format!("P{}: dims {:?}  loewy [{}]", a.quiver().vertices()[v], p.dims(), layers.join("; ")));
                rows.push(json!({"vertex": a.quiver().vertices()[v], "dims": p.dims(), "loewy": layers}));
            }
            Ok(Out::new(json!({"projectives": rows, "dim": a.dim()}), human))
        }
        Command::Resolve { alg, simple: s, cap } => {
            let a = Arc::new(load_algebra(&alg.algebra, alg.path_cap)?);
            let v = vertex_arg(&a, &s)?;
            let res = minimal_resolution(&simple(&a, v), cap_or_default(&a, cap))?;
            let terms: Vec<String> = res.multiplicities().iter().map(|m| term_name(&a, m)).collect();
            let status = match res.status() {
                ResolutionStatus::Finite { length } => json!({"kind": "finite", "length": length}),
                ResolutionStatus::Periodic { earlier, later } => {
                    json!({"kind": "periodic", "earlier": earlier, "later": later})
                }
                ResolutionStatus::TruncatedAtCap { cap } => json!({"kind": "truncated", "cap": cap}),
            };
            let human = vec![
                format!("resolution of {}: [{}]", lname(&a, v), terms.join(", ")),
                format!("status: {status}"),
            ];
            Ok(Out::new(
                json!({"simple": lname(&a, v), "terms": terms, "multiplicities": res.multiplicities(), "status": status}),
                human,
            ))
        }
        Command::Ext { alg, m, n, max } => {
            let a = Arc::new(load_algebra(&alg.algebra, alg.path_cap)?);
            let (i, j) = (vertex_arg(&a, &m)?, vertex_arg(&a, &n)?);
            let res = minimal_resolution(&simple(&a, i), default_cap(&a).max(max + 1))?;
            let lj = simple(&a, j);
            let dims = (0..=max).map(|d| res.ext_dim(&lj, d)).collect::<Result<Vec<_>>>()?;
            let human = dims
                .iter()
                .enumerate()
                .map(|(d, x)| format!("Ext^{d}({}, {}) = {x}", lname(&a, i), lname(&a, j)))
                .collect();
            Ok(Out::new(json!({"m": lname(&a, i), "n": lname(&a, j), "dims": dims}), human))
        }
        Command::Pd { alg, cap } => {
            let a = Arc::new(load_algebra(&alg.algebra, alg.path_cap)?);
            let pds = simple_pds(&a, cap_or_default(&a, cap))?;
            let mut table = serde_json::Map::new();
            let mut human = Vec::new();
            for (v, p) in pds.iter().enumerate() {
                if let Some(p) = p {
                    table.insert(lname(&a, v), pd_json(*p));
                    human.push(format!("{}: {p}", lname(&a, v)));
                }
            }
            Ok(Out::new(json!({"pd": table}), human))
        }
        Command::Gldim { alg, cap } => {
            let a = Arc::new(load_algebra(&alg.algebra, alg.path_cap)?);
            let g = global_dim(&a, cap_or_default(&a, cap))?;
            Ok(Out::new(json!({"gl_dim": pd_json(g)}), vec![format!("global dimension {g}")]))
        }
        Command::ExtQuiver { alg, max } => {
            let a = Arc::new(load_algebra(&alg.algebra, alg.path_cap)?);
            let t = ext_quiver(&a, max)?;
            let names: Vec<String> = t.vertices.iter().map(|&v| lname(&a, v)).collect();
            let mut human = Vec::new();
            for (d, m) in t.entries.iter().enumerate() {
                human.push(format!("degree {d}:"));
                for (name, row) in names.iter().zip(m) {
                    human.push(format!("  {name}: {row:?}"));
                }
            }
            Ok(Out::new(json!({"simples": names, "entries": t.entries}), human))
        }
        Command::Serre { alg, simples, check_fullness, cap } => {
            let a = Arc::new(load_algebra(&alg.algebra, alg.path_cap)?);
            let s = simples.iter().map(|x| vertex_arg(&a, x)).collect::<Result<Vec<_>>>()?;
            let sub = serre_subcategory(&a, &s)?;
            let mut results = json!({
                "simples": segment_names(&a, sub.simples()),
                "exponent": sub.exponent(),
                "ideal_power_dims": sub.power_dims(),
                "quotient_dim": sub.quotient().dim(),
                "quotient_basis": sub.quotient().basis().iter().map(|p| a.write_path(p)).collect::<Vec<_>>(),
            });
            let mut human = vec![
                format!("simples {:?}", segment_names(&a, sub.simples())),
                format!("quotient dimension {} (exponent {})", sub.quotient().dim(), sub.exponent()),
            ];
            let mut out_status = BTreeMap::new();
            if check_fullness {
                let r = extension_fullness(&a, &s, cap)?;
                let fj = fullness_json(&a, &r);
                human.push(format!("verdict: {}", fj["verdict"].as_str().unwrap()));
                out_status.insert("certified".into(), r.certified.to_string());
                results["fullness"] = fj;
            }
            let mut out = Out::new(results, human);
            out.status = out_status;
            Ok(out)
        }
        Command::InitialSegments(alg) => {
            let a = Arc::new(load_algebra(&alg.algebra, alg.path_cap)?);
            let segs = initial_segments(&a, default_cap(&a))?;
            let named: Vec<Vec<String>> = segs.iter().map(|s| segment_names(&a, s)).collect();
            let human = named.iter().map(|s| format!("{{{}}}", s.join(", "))).collect();
            Ok(Out::new(json!({"initial_segments": named}), human))
        }
        Command::Guichardet { alg, cap } => {
            let a = Arc::new(load_algebra(&alg.algebra, alg.path_cap)?);
            let g = guichardet(&a, cap)?;
            let failing = g.segments.iter().find(|r| r.verdict == Fullness::NotExtensionFull);
            let mut human = vec![format!("guichardet: {}", g.is_guichardet)];
            if let Some(r) = failing {
                let f = r.first_failure.as_ref().unwrap();
                human.push(format!(
                    "failing segment {{{}}} at degree {}",
                    segment_names(&a, &r.simples).join(", "),
                    f.degree
                ));
            }
            let mut out = Out::new(
                json!({
                    "guichardet": g.is_guichardet,
                    "gl_dim": pd_json(g.gl_dim),
                    "failing_segment": failing.map(|r| json!({
                        "simples": segment_names(&a, &r.simples),
                        "degree": r.first_failure.as_ref().map(|f| f.degree),
                    })),
                    "segments": g.segments.iter().map(|r| fullness_json(&a, r)).collect::<Vec<_>>(),
                }),
                human,
            );
            out.status.insert("certified".into(), g.certified.to_string());
            Ok(out)
        }
        Command::Coxeter { weyl_type, parabolic, eval, element, base_pd } => {
            let w = build_weyl_group(WeylType::parse(&weyl_type)?)?;
            let j = parabolic
                .iter()
                .filter(|s| !s.is_empty())
                .map(|s| {
                    let e = w.parse_element(s)?;
                    w.reduced_word(e)
                        .first()
                        .copied()
                        .filter(|_| w.length(e) == 1)
                        .ok_or_else(|| Error::InvalidArgument(format!("`{s}` is not a simple reflection")))
                })
                .collect::<Result<Vec<_>>>()?;
            let x = w.parse_element(&element)?;
            let (results, human) = match eval.as_str() {
                "summary" => (
                    json!({"type": w.weyl_type().to_string(), "order": w.order(), "longest_length": w.num_positive_roots(), "longest": w.name(w.longest())}),
                    vec![format!("{}: order {}, l(w0) = {}", w.weyl_type(), w.order(), w.num_positive_roots())],
                ),
                "thm777" => {
                    let (a, b, c) = w.thm777_eval(&j)?;
                    (
                        json!({"pd_simple_verma": a, "gl_dim_block": b, "pd_dominant_simple": c}),
                        vec![format!("pd simple Verma {a}, gl.dim {b}, pd dominant simple {c}")],
                    )
                }
                "pdcor" | "oinf" => {
                    let f = w.oinf_formulas(x, base_pd);
                    (
                        serde_json::to_value(&f).unwrap(),
                        vec![format!(
                            "pd L = {}, pd M = {}, gl.dim = {}, min pd = {}",
                            f.pd_simple, f.pd_verma, f.gl_dim, f.min_pd
                        )],
                    )
                }
                "regular-pd" => {
                    let p = w.regular_pd_simple(x);
                    (json!({"element": w.name(x), "pd": p}), vec![format!("pd L({}) = {p}", w.name(x))])
                }
                "a" => {
                    let a = w.a_function(x);
                    (json!({"element": w.name(x), "a": a}), vec![format!("a({}) = {a}", w.name(x))])
                }
                "coideals" => {
                    let c: Vec<Vec<String>> = w.coideals()?.iter().map(|c| c.iter().map(|&e| w.name(e)).collect()).collect();
                    let human = vec![format!("{} coideals", c.len())];
                    (json!({"count": c.len(), "coideals": c}), human)
                }
                other => return Err(Error::InvalidArgument(format!("unknown evaluation `{other}`"))),
            };
            Ok(Out::new(results, human))
        }
        Command::Liecoh { preset, file, module, degree } => {
            let g: LieAlgebra = match (preset, file) {
                (_, Some(f)) => parse_lie_algebra(
                    &std::fs::read_to_string(&f).map_err(|e| Error::Io(format!("{f}: {e}")))?,
                )?,
                (Some(p), None) => LieKind::parse(&p)?.algebra(),
                (None, None) => return Err(Error::InvalidArgument("pass --preset or --file".into())),
            };
            let v = liecoh::named_module(&g, &module)?;
            let mut out = match degree {
                Some(d) => {
                    let h = liecoh::ce_cohomology(&g, &v, d)?;
                    Out::new(json!({"degree": d, "dim": h.dim}), vec![format!("dim H^{d} = {}", h.dim)])
                }
                None => {
                    let dims = liecoh::cohomology_dims(&g, &v);
                    let top = liecoh::top_degree_check(&g, &v);
                    let pc = liecoh::poincare_check(&g, &v);
                    let human = vec![
                        format!("cohomology {dims:?}"),
                        format!("top degree: H^n = {}, Hom(V,C) = {}, twisted Hom = {}", top.ce_dim, top.hom_trivial, top.hom_twisted),
                        match &pc.notice {
                            Some(n) => format!("poincare: skipped ({n})"),
                            None => format!("poincare: {}", pc.passes),
                        },
                    ];
                    Out::new(
                        json!({
                            "cohomology": dims,
                            "top_degree": serde_json::to_value(&top).unwrap(),
                            "poincare": serde_json::to_value(&pc).unwrap(),
                        }),
                        human,
                    )
                }
            };
            out.status.insert("unimodular".into(), g.is_unimodular().to_string());
            Ok(out)
        }
        Command::Preset { name, self_test: st } => {
            let mut results = json!({"name": name});
            let mut human = Vec::new();
            if let Ok(p) = quiver_preset(&name) {
                results["text"] = json!(p.text);
                human.push(p.text.trim_end().to_string());
            } else if let Ok(k) = LieKind::parse(&name) {
                let g = k.algebra();
                results["basis"] = json!(g.names());
                results["dim"] = json!(g.dim());
                human.push(format!("Lie algebra {} of dimension {}", k.name(), g.dim()));
            } else {
                return Err(Error::UnknownPreset(name));
            }
            let mut out_code = EXIT_OK;
            if st {
                let t = self_test(&name)?;
                for (c, ok) in &t.checks {
                    human.push(format!("{} {c}", if *ok { "ok  " } else { "FAIL" }));
                }
                results["self_test"] = json!(t.checks.iter().map(|(c, ok)| json!({"check": c, "passed": ok})).collect::<Vec<_>>());
                if !t.passes() {
                    out_code = EXIT_COMPUTATION;
                }
            }
            let mut out = Out::new(results, human);
            out.exit_code = out_code;
            Ok(out)
        }
        Command::CrossValidate { preset } => {
            let p = quiver_preset(&preset)?;
            let ann = p
                .annotations
                .coxeter
                .clone()
                .ok_or_else(|| Error::InvalidArgument(format!("preset `{preset}` has no Coxeter annotation")))?;
            let a = Arc::new(p.algebra());
            let cv = cross_validate(&a, &ann, default_cap(&a))?;
            let computed = format!(
                "({}, {}, {:?})",
                cv.computed_simple_verma,
                cv.computed_gl_dim,
                cv.computed_dominant.iter().map(|(_, p)| p.to_string()).collect::<Vec<_>>()
            );
            if !cv.matches {
                return Err(Error::Mismatch {
                    what: "closed-form prediction".into(),
                    predicted: format!("{:?}", cv.predicted),
                    computed,
                });
            }
            let human = vec![format!("predicted {:?}, computed {computed}: match", cv.predicted)];
            Ok(Out::new(serde_json::to_value(&cv).unwrap(), human))
        }
    }
}

/// Run a command line (including the program name) and return the report with a human
/// rendering.
pub fn execute<I, S>(argv: I) -> (Report, String)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = argv.into_iter().map(Into::into).collect();
    let command: Vec<String> = args.iter().skip(1).cloned().collect();
    let parsed = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let kind_ok = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let report = Report {
                command,
                results: Value::Null,
                notes: vec![],
                status: BTreeMap::new(),
                exit_code: if kind_ok { EXIT_OK } else { EXIT_USAGE },
            };
            return (report, e.render().to_string());
        }
    };
    let json_mode = parsed.json;
    let (report, human) = match dispatch(parsed.command) {
        Ok(out) => (
            Report {
                command,
                results: out.results,
                notes: out.notes,
                status: out.status,
                exit_code: out.exit_code,
            },
            out.human.join("\n"),
        ),
        Err(e) => (
            Report {
                command,
                results: Value::Null,
                notes: vec![format!("error: {e}")],
                status: BTreeMap::new(),
                exit_code: EXIT_COMPUTATION,
            },
            format!("error: {e}"),
        ),
    };
    let text = if json_mode { report.to_json() } else { human };
    (report, text)
}

pub fn run_command<I, S>(argv: I) -> Report
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    execute(argv).0
}

/// Bundled preset names, quiver and Lie.
pub fn preset_names() -> Vec<&'static str> {
    QUIVER_PRESETS.iter().chain(LIE_PRESETS.iter()).copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Report {
        run_command(std::iter::once("homquiver").chain(args.iter().copied()))
    }

    #[test]
    fn guichardet_on_sl3() {
        let r = run(&["guichardet", "presets/sl3_singular"]);
        assert_eq!(r.exit_code, 0);
        assert_eq!(r.results["guichardet"], json!(false));
        assert_eq!(r.results["failing_segment"]["simples"], json!(["L3"]));
        assert_eq!(r.results["failing_segment"]["degree"], json!(2));
    }

    #[test]
    fn resolve_and_pd() {
        let r = run(&["resolve", "sl3_singular", "L3", "--cap", "10"]);
        assert_eq!(r.results["terms"], json!(["P3", "P2", "P3"]));
        assert_eq!(r.results["status"]["kind"], json!("finite"));
        let r = run(&["pd", "sl2_principal"]);
        assert_eq!(r.results["pd"], json!({"L1": 1, "L2": 2}));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&["frobnicate"]).exit_code, EXIT_USAGE);
        assert_eq!(run(&["pd", "no_such_algebra"]).exit_code, EXIT_COMPUTATION);
        assert_eq!(run(&["preset", "sl3_singular", "--self-test"]).exit_code, EXIT_OK);
    }

    #[test]
    fn json_round_trip() {
        let r = run(&["serre", "sl3_singular", "--simples", "L3", "--check-fullness"]);
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
    }
}
