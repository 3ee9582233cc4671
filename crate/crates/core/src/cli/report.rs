//! The structured report printed by every command except `fuzz`, with its
//! JSON and text renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::homological::DomDim;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: InputEcho,
    pub algebra: AlgebraSummary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<VertexRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domdim: Option<DomdimSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub qf3: Option<Qf3Section>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morita: Option<MoritaSection>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub covers: Vec<CoverSection>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub modules: Vec<ModuleSection>,
    /// Wall-clock microseconds per stage; only present when asked for.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_us: Option<BTreeMap<String, u64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InputEcho {
    pub source: String,
    pub presentation: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraSummary {
    pub field: String,
    pub dim: usize,
    pub vertices: Vec<String>,
    pub idempotents: usize,
    pub radical_dim: usize,
    pub basis: Vec<String>,
}

/// Multiplicities of simples, indexed by vertex.
pub type Multiplicities = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleShape {
    pub dim: usize,
    pub dimension_vector: Vec<usize>,
    pub top: Multiplicities,
    pub socle: Multiplicities,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexRow {
    pub vertex: String,
    pub projective: ModuleShape,
    pub injective: ModuleShape,
    /// `P(v)` is injective.
    pub projective_is_injective: bool,
    /// `I(v)` is projective.
    pub injective_is_projective: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResolutionTerm {
    pub dim: usize,
    /// Injective indecomposable multiplicities, indexed by vertex.
    pub injectives: Multiplicities,
    pub name: String,
    /// The same term as a sum of projectives, when it is projective.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub as_projectives: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DomdimSection {
    pub cap: usize,
    pub value: DomDim,
    pub right_value: Option<DomDim>,
    /// Leading terms of the minimal injective resolution of the regular
    /// module, through the first non-projective one.
    pub resolution: Vec<ResolutionTerm>,
    pub resolution_complete: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Qf3Section {
    pub qf3: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minimal_faithful: Option<MinimalFaithfulData>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinimalFaithfulData {
    pub idempotent: String,
    pub module: String,
    pub dim: usize,
    pub end_dim: usize,
    pub end_self_injective: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MoritaSection {
    pub morita: bool,
    pub conditions: BTreeMap<String, bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoverMethods {
    pub canonical_map: Option<bool>,
    pub unit: Option<bool>,
    pub fully_faithful: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoverSection {
    pub module: String,
    pub dim: usize,
    pub mode: String,
    pub cover: bool,
    pub methods: CoverMethods,
    pub reduced_to: String,
    pub dim_b: usize,
    pub dim_fa: usize,
    pub dim_end_fa: usize,
    pub rank_canonical: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SummandRow {
    pub name: String,
    /// Other standard names of the same module, such as `I(2)` for `P(1)`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub aliases: Vec<String>,
    pub multiplicity: usize,
    pub dim: usize,
    pub dimension_vector: Vec<usize>,
    /// Dimension vectors of the radical layers, top first.
    pub radical_layers: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EndSection {
    pub dim: usize,
    pub idempotents: usize,
    pub radical_dim: usize,
    pub self_injective: bool,
    pub frobenius: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleSection {
    pub operation: String,
    pub spec: String,
    pub dim: usize,
    pub dimension_vector: Vec<usize>,
    pub summands: Vec<SummandRow>,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certified: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub end_algebra: Option<EndSection>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::from_json_error(&e))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let labels = &self.algebra.vertices;
        let a = &self.algebra;
        let _ = writeln!(out, "input: {}", self.input.source);
        let _ = writeln!(
            out,
            "algebra: dim {} over {}, {} idempotents, radical dim {}",
            a.dim, a.field, a.idempotents, a.radical_dim
        );
        let _ = writeln!(out, "vertices: {}", a.vertices.join(" "));
        let _ = writeln!(out, "basis: {}", a.basis.join(" "));

        if let Some(rows) = &self.vertices {
            let _ = writeln!(out);
            let header = [
                "vertex", "dim P", "top P", "soc P", "dim I", "top I", "soc I", "P inj", "I proj",
            ];
            let mut table: Vec<Vec<String>> = vec![header.iter().map(|h| h.to_string()).collect()];
            for r in rows {
                table.push(vec![
                    r.vertex.clone(),
                    r.projective.dim.to_string(),
                    simple_sum(&r.projective.top, labels),
                    simple_sum(&r.projective.socle, labels),
                    r.injective.dim.to_string(),
                    simple_sum(&r.injective.top, labels),
                    simple_sum(&r.injective.socle, labels),
                    yes_no(r.projective_is_injective),
                    yes_no(r.injective_is_projective),
                ]);
            }
            write_table(&mut out, &table);
        }

        if let Some(d) = &self.domdim {
            let _ = writeln!(out);
            let _ = write!(out, "domdim: {}", d.value);
            if let Some(r) = d.right_value {
                let _ = write!(out, " (right {r})");
            }
            let _ = writeln!(out, " [cap {}]", d.cap);
            if !d.resolution.is_empty() {
                let _ = writeln!(out, "injective resolution of A:");
                for (t, term) in d.resolution.iter().enumerate() {
                    let _ = write!(out, "  I{t} = {}", term.name);
                    if let Some(p) = &term.as_projectives {
                        let _ = write!(out, " = {p}");
                    }
                    let _ = writeln!(out, "  (dim {})", term.dim);
                }
                if !d.resolution_complete {
                    let _ = writeln!(out, "  ...");
                }
            }
        }

        if let Some(q) = &self.qf3 {
            let _ = writeln!(out);
            match &q.minimal_faithful {
                Some(m) => {
                    let _ = writeln!(
                        out,
                        "qf3: yes, minimal faithful {} = A({}), dim {}",
                        m.module, m.idempotent, m.dim
                    );
                    let _ = writeln!(
                        out,
                        "End(P)^op: dim {}, self-injective {}",
                        m.end_dim, m.end_self_injective
                    );
                }
                None => {
                    let _ = writeln!(out, "qf3: no");
                }
            }
        }

        if let Some(m) = &self.morita {
            let _ = writeln!(out, "morita: {}", m.morita);
            for label in crate::morita::CONDITIONS {
                if let Some(v) = m.conditions.get(label) {
                    let _ = writeln!(out, "  ({label}) {v}");
                }
            }
        }

        for c in &self.covers {
            let _ = writeln!(out);
            let _ = writeln!(out, "module: {} (dim {})", c.module, c.dim);
            let _ = writeln!(out, "cover: {}", c.cover);
            let methods = [
                ("canonical map", c.methods.canonical_map),
                ("unit", c.methods.unit),
                ("fully faithful", c.methods.fully_faithful),
            ];
            for (name, v) in methods {
                if let Some(v) = v {
                    let _ = writeln!(out, "  {name}: {v}");
                }
            }
            let _ = writeln!(
                out,
                "  reduced to {}; dim B {}, dim FA {}, dim End_B(FA) {}, rank {}",
                c.reduced_to, c.dim_b, c.dim_fa, c.dim_end_fa, c.rank_canonical
            );
        }

        for m in &self.modules {
            let _ = writeln!(out);
            let _ = writeln!(
                out,
                "{} {}: {} (dim {}, dimension vector {:?})",
                m.operation, m.spec, m.name, m.dim, m.dimension_vector
            );
            for s in &m.summands {
                let mult = if s.multiplicity > 1 {
                    format!("^{}", s.multiplicity)
                } else {
                    String::new()
                };
                let aliases = if s.aliases.is_empty() {
                    String::new()
                } else {
                    format!(" (= {})", s.aliases.join(" = "))
                };
                let _ = writeln!(
                    out,
                    "  {}{mult}{aliases}  dim {}  {:?}  layers {:?}",
                    s.name, s.dim, s.dimension_vector, s.radical_layers
                );
            }
            if let Some(c) = m.certified {
                let _ = writeln!(out, "  certificate verified: {c}");
            }
            if let Some(e) = &m.end_algebra {
                let _ = writeln!(
                    out,
                    "  End(M)^op: dim {}, {} idempotents, radical dim {}, self-injective {}, frobenius {}",
                    e.dim, e.idempotents, e.radical_dim, e.self_injective, e.frobenius
                );
            }
        }

        if let Some(t) = &self.timings_us {
            let _ = writeln!(out);
            let _ = writeln!(out, "timings:");
            for (stage, us) in t {
                let _ = writeln!(out, "  {stage}: {:.3} ms", *us as f64 / 1000.0);
            }
        }
        out
    }
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

/// `S(1)+S(2)^2` style sum of simples.
pub fn simple_sum(mult: &[usize], labels: &[String]) -> String {
    labelled_sum("S", mult, labels)
}

pub(crate) fn labelled_sum(letter: &str, mult: &[usize], labels: &[String]) -> String {
    let parts: Vec<String> = mult
        .iter()
        .zip(labels)
        .filter(|(&k, _)| k > 0)
        .map(|(&k, l)| {
            if k == 1 {
                format!("{letter}({l})")
            } else {
                format!("{letter}({l})^{k}")
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

fn write_table(out: &mut String, rows: &[Vec<String>]) {
    let cols = rows[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:<w$}"))
            .collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
}
