//! Command-line front end: input resolution, the `moritakit` subcommands and
//! their reports.

mod report;

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand};

pub use report::{
    simple_sum, AlgebraSummary, CoverMethods, CoverSection, DomdimSection, EndSection, InputEcho,
    MinimalFaithfulData, ModuleSection, ModuleShape, MoritaSection, Qf3Section, Report,
    ResolutionTerm, SummandRow, VertexRow,
};

use crate::algebra::{build_algebra, Algebra, Idempotent, QuiverPresentation};
use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::fixtures;
use crate::fuzz::{run_suite, FuzzConfig, FuzzReport};
use crate::homological::{
    dominant_dimension, is_injective, is_projective, minimal_injective_resolution,
    right_dominant_dimension, socle_multiplicities, top_multiplicities, DomDim, DEFAULT_DOMDIM_CAP,
};
use crate::krullschmidt::{decompose, is_isomorphic, lift_end_algebra};
use crate::modules::{
    end_algebra, injective_indecomposable, module_from_spec, projective_indecomposable,
    regular_module, simple_module, Module, Side,
};
use crate::morita::{
    cover_check_with, inverse_nakayama, is_frobenius_left, is_morita_algebra, is_self_injective,
    nakayama, CoverMode,
};

use report::labelled_sum;

/// Environment variable overriding the default dominant dimension cap.
pub const CAP_ENV: &str = "MORITAKIT_CAP";

#[derive(Debug, Parser)]
#[command(
    name = "moritakit",
    version,
    about = "Dominant dimension, covers and Morita algebras of bound quiver algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report: projectives, injectives, dominant dimension, QF-3 data
    /// and the Morita condition table.
    Analyze {
        /// Presentation JSON file or built-in fixture name.
        input: String,
        #[arg(long)]
        cap: Option<usize>,
        /// Also test these modules for the cover property.
        #[arg(long = "cover", value_name = "SPEC")]
        covers: Vec<String>,
        #[arg(long)]
        json: bool,
        /// Include wall-clock timings (output is then not reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Whether `(A, M)` is a cover for a projective module `M`.
    Cover {
        input: String,
        #[arg(long, value_name = "SPEC")]
        module: String,
        /// Evaluate only the canonical-map criterion.
        #[arg(long)]
        fast: bool,
        #[arg(long)]
        json: bool,
    },
    /// Dominant dimension of the algebra.
    Domdim {
        input: String,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Decomposition of `νM`, or of `ν⁻M` with `--inverse`.
    Nakayama {
        input: String,
        #[arg(long, value_name = "SPEC")]
        module: String,
        #[arg(long)]
        inverse: bool,
        #[arg(long)]
        json: bool,
    },
    /// Krull-Schmidt decomposition of a module.
    Decompose {
        input: String,
        #[arg(long, value_name = "SPEC")]
        module: String,
        #[arg(long)]
        json: bool,
    },
    /// `End_A(M)^op` with lifted primitive idempotents.
    Endalg {
        input: String,
        #[arg(long, value_name = "SPEC")]
        module: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the randomized invariant suite.
    Fuzz {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long)]
        no_shrink: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print a built-in fixture as presentation JSON.
    Fixture { name: String },
}

/// Outcome of one command: the text to print and the exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

/// Run one parsed command line.
pub fn run(cli: Cli) -> Result<Output> {
    let ok = |text: String| Ok(Output { text, code: 0 });
    let render = |r: Report, json: bool| if json { r.to_json() } else { r.to_text() };
    match cli.command {
        Command::Analyze {
            input,
            cap,
            covers,
            json,
            timings,
        } => ok(render(
            cmd_analyze(&input, resolve_cap(cap)?, &covers, timings)?,
            json,
        )),
        Command::Cover {
            input,
            module,
            fast,
            json,
        } => {
            let mode = if fast {
                CoverMode::Fast
            } else {
                CoverMode::Verify
            };
            ok(render(cmd_cover(&input, &module, mode)?, json))
        }
        Command::Domdim { input, cap, json } => {
            let r = cmd_domdim(&input, resolve_cap(cap)?)?;
            if json {
                ok(r.to_json())
            } else {
                let d = r.domdim.as_ref().expect("domdim section");
                ok(format!("domdim: {}\n", d.value))
            }
        }
        Command::Nakayama {
            input,
            module,
            inverse,
            json,
        } => ok(render(cmd_nakayama(&input, &module, inverse)?, json)),
        Command::Decompose {
            input,
            module,
            json,
        } => ok(render(cmd_decompose(&input, &module)?, json)),
        Command::Endalg {
            input,
            module,
            json,
        } => ok(render(cmd_endalg(&input, &module)?, json)),
        Command::Fuzz {
            seed,
            count,
            no_shrink,
            json,
        } => {
            let report = cmd_fuzz(seed, count, !no_shrink)?;
            let code = if report.violations.is_empty() { 0 } else { 4 };
            let text = if json {
                let mut s = serde_json::to_string_pretty(&report.to_json())
                    .expect("fuzz report serializes");
                s.push('\n');
                s
            } else {
                fuzz_text(&report)
            };
            Ok(Output { text, code })
        }
        Command::Fixture { name } => {
            let p = fixtures::named(&name, Field::Rationals)
                .ok_or_else(|| Error::Io(format!("unknown fixture {name:?}")))?;
            let mut s = serde_json::to_string_pretty(&p.to_json()).expect("json");
            s.push('\n');
            ok(s)
        }
    }
}

/// The cap from the flag, else from `MORITAKIT_CAP`, else the default.
pub fn resolve_cap(flag: Option<usize>) -> Result<usize> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var(CAP_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Error::schema(
                CAP_ENV,
                format!("expected a non-negative integer, got {v:?}"),
            )
        }),
        Err(_) => Ok(DEFAULT_DOMDIM_CAP),
    }
}

/// Read a presentation from a JSON file.
pub fn parse_input(path: &Path) -> Result<QuiverPresentation> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    QuiverPresentation::from_json_str(&text)
}

/// A file path if one exists, else a built-in fixture name.
pub fn resolve_input(input: &str) -> Result<QuiverPresentation> {
    let path = Path::new(input);
    if path.exists() {
        return parse_input(path);
    }
    fixtures::named(input, Field::Rationals).ok_or_else(|| {
        Error::Io(format!(
            "{input}: no such file, and not one of the fixtures {}",
            fixtures::NAMES.join(", ")
        ))
    })
}

struct Session {
    source: String,
    presentation: QuiverPresentation,
    algebra: Arc<Algebra>,
    timings: BTreeMap<String, u64>,
    clock: Instant,
}

impl Session {
    fn open(input: &str) -> Result<Self> {
        let clock = Instant::now();
        let presentation = resolve_input(input)?;
        let algebra = Arc::new(build_algebra(&presentation)?);
        let mut s = Session {
            source: input.to_string(),
            presentation,
            algebra,
            timings: BTreeMap::new(),
            clock,
        };
        s.lap("build");
        Ok(s)
    }

    fn lap(&mut self, stage: &str) {
        let us = self.clock.elapsed().as_micros() as u64;
        self.timings.insert(stage.to_string(), us);
        self.clock = Instant::now();
    }

    fn labels(&self) -> &[String] {
        self.algebra.vertex_labels()
    }

    fn report(&self, command: &str) -> Result<Report> {
        let a = &self.algebra;
        Ok(Report {
            command: command.to_string(),
            input: InputEcho {
                source: self.source.clone(),
                presentation: self.presentation.to_json(),
            },
            algebra: AlgebraSummary {
                field: a.field().to_string(),
                dim: a.dim(),
                vertices: a.vertex_labels().to_vec(),
                idempotents: a.num_idempotents(),
                radical_dim: a.radical()?.dim(),
                basis: a.basis_labels().to_vec(),
            },
            vertices: None,
            domdim: None,
            qf3: None,
            morita: None,
            covers: Vec::new(),
            modules: Vec::new(),
            timings_us: None,
        })
    }
}

fn shape(m: &Module) -> Result<ModuleShape> {
    Ok(ModuleShape {
        dim: m.dim(),
        dimension_vector: m.dimension_vector(),
        top: top_multiplicities(m)?,
        socle: socle_multiplicities(m)?,
    })
}

fn vertex_rows(a: &Arc<Algebra>) -> Result<Vec<VertexRow>> {
    (0..a.num_idempotents())
        .map(|v| {
            let p = projective_indecomposable(a, v, Side::Left)?;
            let i = injective_indecomposable(a, v, Side::Left)?;
            Ok(VertexRow {
                vertex: a.vertex_labels()[v].clone(),
                projective_is_injective: is_injective(&p)?,
                injective_is_projective: is_projective(&i)?,
                projective: shape(&p)?,
                injective: shape(&i)?,
            })
        })
        .collect()
}

fn domdim_section(s: &Session, cap: usize, with_right: bool) -> Result<DomdimSection> {
    let a = &s.algebra;
    let d = dominant_dimension(a, cap)?;
    let right_value = if with_right {
        Some(right_dominant_dimension(a, cap)?.value)
    } else {
        None
    };
    let len = match d.value {
        DomDim::Exact(n) => (n + 1).min(cap.max(1)),
        DomDim::AtLeast(n) => n.max(1),
    };
    let res = minimal_injective_resolution(&regular_module(a, Side::Left), len)?;
    // I(v) ≅ P(w) exactly when I(v) is projective, with w its top
    let mut as_projective: Vec<Option<usize>> = Vec::new();
    for v in 0..a.num_idempotents() {
        let i = injective_indecomposable(a, v, Side::Left)?;
        as_projective.push(if is_projective(&i)? {
            top_multiplicities(&i)?.iter().position(|&k| k > 0)
        } else {
            None
        });
    }
    let labels = s.labels();
    let resolution = res
        .terms
        .iter()
        .zip(&res.multiplicities)
        .map(|(t, mult)| {
            let projective = mult
                .iter()
                .enumerate()
                .all(|(v, &k)| k == 0 || as_projective[v].is_some());
            let as_projectives = projective.then(|| {
                let mut pm = vec![0; mult.len()];
                for (v, &k) in mult.iter().enumerate() {
                    if let Some(w) = as_projective[v] {
                        pm[w] += k;
                    }
                }
                labelled_sum("P", &pm, labels)
            });
            ResolutionTerm {
                dim: t.dim(),
                injectives: mult.clone(),
                name: labelled_sum("I", mult, labels),
                as_projectives,
            }
        })
        .collect();
    Ok(DomdimSection {
        cap,
        value: d.value,
        right_value,
        resolution,
        resolution_complete: res.complete,
    })
}

fn vertex_sum(e: &Idempotent, a: &Algebra) -> String {
    let mut mult = vec![0; a.num_idempotents()];
    for &v in e.vertices() {
        mult[v] = 1;
    }
    labelled_sum("P", &mult, a.vertex_labels())
}

/// `analyze`: the full report.
pub fn cmd_analyze(input: &str, cap: usize, covers: &[String], timings: bool) -> Result<Report> {
    let mut s = Session::open(input)?;
    let a = s.algebra.clone();
    let mut r = s.report("analyze")?;
    r.vertices = Some(vertex_rows(&a)?);
    s.lap("structure");
    r.domdim = Some(domdim_section(&s, cap, true)?);
    s.lap("domdim");

    let verdict = is_morita_algebra(&a, cap)?;
    let minimal_faithful = match (&verdict.chosen_p, &verdict.idempotent) {
        (Some(p), Some(e)) => {
            let b = lift_end_algebra(&end_algebra(p)?)?;
            Some(MinimalFaithfulData {
                idempotent: e.label(p.algebra()),
                module: vertex_sum(e, p.algebra()),
                dim: p.dim(),
                end_dim: b.algebra.dim(),
                end_self_injective: is_self_injective(&b.algebra)?,
            })
        }
        _ => None,
    };
    r.qf3 = Some(Qf3Section {
        qf3: verdict.qf3,
        minimal_faithful,
    });
    r.morita = Some(MoritaSection {
        morita: verdict.verdict,
        conditions: verdict
            .conditions
            .iter()
            .map(|(k, v)| (k.to_string(), *v))
            .collect(),
    });
    s.lap("morita");

    for spec in covers {
        r.covers.push(cover_section(&a, spec, CoverMode::Verify)?);
    }
    if !covers.is_empty() {
        s.lap("covers");
    }
    if timings {
        r.timings_us = Some(s.timings.clone());
    }
    Ok(r)
}

fn cover_section(a: &Arc<Algebra>, spec: &str, mode: CoverMode) -> Result<CoverSection> {
    let m = module_from_spec(a, spec)?;
    let v = cover_check_with(&m, mode)?;
    let reduced_to = v
        .certificate
        .reduced_to
        .as_ref()
        .map(|e| e.label(a))
        .unwrap_or_default();
    Ok(CoverSection {
        module: spec.to_string(),
        dim: m.dim(),
        mode: match mode {
            CoverMode::Fast => "fast",
            CoverMode::Verify => "verify",
        }
        .into(),
        cover: v.holds,
        methods: CoverMethods {
            canonical_map: v.methods[0],
            unit: v.methods[1],
            fully_faithful: v.methods[2],
        },
        reduced_to,
        dim_b: v.certificate.dim_b,
        dim_fa: v.certificate.dim_fa,
        dim_end_fa: v.certificate.dim_end_fa,
        rank_canonical: v.certificate.rank_canonical,
    })
}

/// `cover`: the cover test for one projective module.
pub fn cmd_cover(input: &str, module: &str, mode: CoverMode) -> Result<Report> {
    let s = Session::open(input)?;
    let mut r = s.report("cover")?;
    r.covers.push(cover_section(&s.algebra, module, mode)?);
    Ok(r)
}

/// `domdim`: dominant dimension with the leading resolution terms.
pub fn cmd_domdim(input: &str, cap: usize) -> Result<Report> {
    let s = Session::open(input)?;
    let mut r = s.report("domdim")?;
    r.domdim = Some(domdim_section(&s, cap, false)?);
    Ok(r)
}

/// Standard modules used to name indecomposables: every `P(v)`, then every
/// `I(v)`, then every `S(v)`.
struct Catalog {
    entries: Vec<(String, Module)>,
}

impl Catalog {
    fn new(a: &Arc<Algebra>) -> Result<Self> {
        let labels = a.vertex_labels();
        let n = a.num_idempotents();
        let mut entries = Vec::new();
        for v in 0..n {
            entries.push((
                format!("P({})", labels[v]),
                projective_indecomposable(a, v, Side::Left)?,
            ));
        }
        for v in 0..n {
            entries.push((
                format!("I({})", labels[v]),
                injective_indecomposable(a, v, Side::Left)?,
            ));
        }
        for v in 0..n {
            entries.push((
                format!("S({})", labels[v]),
                simple_module(a, v, Side::Left)?,
            ));
        }
        Ok(Catalog { entries })
    }

    /// Catalog positions of the modules isomorphic to the indecomposable `x`.
    fn matches(&self, x: &Module) -> Result<Vec<usize>> {
        let dv = x.dimension_vector();
        let mut out = Vec::new();
        for (k, (_, m)) in self.entries.iter().enumerate() {
            if m.dimension_vector() == dv && is_isomorphic(m, x)? {
                out.push(k);
            }
        }
        Ok(out)
    }
}

fn module_section(
    a: &Arc<Algebra>,
    operation: &str,
    spec: &str,
    m: &Module,
    certify: bool,
) -> Result<ModuleSection> {
    let catalog = Catalog::new(a)?;
    let d = decompose(m)?;
    let mut rows = Vec::new();
    for s in &d.summands {
        let hits = catalog.matches(&s.module)?;
        let (name, aliases) = match hits.split_first() {
            Some((&first, rest)) => (
                catalog.entries[first].0.clone(),
                rest.iter().map(|&k| catalog.entries[k].0.clone()).collect(),
            ),
            None => (format!("M{:?}", s.module.dimension_vector()), Vec::new()),
        };
        let key = hits.first().copied().unwrap_or(usize::MAX);
        rows.push((
            key,
            SummandRow {
                name,
                aliases,
                multiplicity: s.multiplicity,
                dim: s.module.dim(),
                dimension_vector: s.module.dimension_vector(),
                radical_layers: s.layers.clone(),
            },
        ));
    }
    rows.sort_by(|x, y| (x.0, &x.1.dimension_vector).cmp(&(y.0, &y.1.dimension_vector)));
    let summands: Vec<SummandRow> = rows.into_iter().map(|(_, r)| r).collect();
    let name = if summands.is_empty() {
        "0".to_string()
    } else {
        summands
            .iter()
            .map(|s| {
                if s.multiplicity > 1 {
                    format!("{}^{}", s.name, s.multiplicity)
                } else {
                    s.name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join("+")
    };
    Ok(ModuleSection {
        operation: operation.to_string(),
        spec: spec.to_string(),
        dim: m.dim(),
        dimension_vector: m.dimension_vector(),
        summands,
        name,
        certified: certify.then(|| d.verify()),
        end_algebra: None,
    })
}

/// `nakayama`: `νM` or `ν⁻M`, decomposed and named.
pub fn cmd_nakayama(input: &str, module: &str, inverse: bool) -> Result<Report> {
    let s = Session::open(input)?;
    let a = &s.algebra;
    let mut r = s.report("nakayama")?;
    let m = module_from_spec(a, module)?;
    let (op, image) = if inverse {
        ("inverse_nakayama", inverse_nakayama(&m)?)
    } else {
        ("nakayama", nakayama(&m)?)
    };
    r.modules
        .push(module_section(a, "module", module, &m, false)?);
    r.modules
        .push(module_section(a, op, module, &image, false)?);
    Ok(r)
}

/// `decompose`: Krull-Schmidt decomposition with its certificate checked.
pub fn cmd_decompose(input: &str, module: &str) -> Result<Report> {
    let s = Session::open(input)?;
    let mut r = s.report("decompose")?;
    let m = module_from_spec(&s.algebra, module)?;
    r.modules
        .push(module_section(&s.algebra, "decompose", module, &m, true)?);
    Ok(r)
}

/// `endalg`: `End_A(M)^op` and its basic properties.
pub fn cmd_endalg(input: &str, module: &str) -> Result<Report> {
    let s = Session::open(input)?;
    let mut r = s.report("endalg")?;
    let m = module_from_spec(&s.algebra, module)?;
    let mut section = module_section(&s.algebra, "endalg", module, &m, false)?;
    let b = lift_end_algebra(&end_algebra(&m)?)?.algebra;
    section.end_algebra = Some(EndSection {
        dim: b.dim(),
        idempotents: b.num_idempotents(),
        radical_dim: b.radical()?.dim(),
        self_injective: is_self_injective(&b)?,
        frobenius: is_frobenius_left(&b)?,
    });
    r.modules.push(section);
    Ok(r)
}

/// `fuzz`: the randomized invariant suite over the rationals.
pub fn cmd_fuzz(seed: u64, count: usize, shrink: bool) -> Result<FuzzReport> {
    let cfg = FuzzConfig {
        shrink,
        ..FuzzConfig::with_seed(seed, count)
    };
    run_suite(&cfg)
}

fn fuzz_text(r: &FuzzReport) -> String {
    let mut out = format!(
        "seed {}: {} cases, {} violations, {} skipped\n",
        r.seed,
        r.case_count,
        r.violations.len(),
        r.skipped
    );
    for (check, n) in r.violation_counts() {
        out.push_str(&format!("  {check}: {n}\n"));
    }
    for v in &r.violations {
        out.push_str(&format!("case {} [{}]: {}\n", v.case, v.check, v.message));
        if let Some(shrunk) = &v.shrunk {
            out.push_str(&format!("  shrunk: {shrunk}\n"));
        }
    }
    out
}
