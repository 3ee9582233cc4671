//! Random bound quiver algebras and a differential check suite over them.
//!
//! Every case is generated from its own ChaCha stream `(seed, index)`, so the
//! report does not depend on scheduling.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::algebra::{
    build_algebra, field_json, validate_algebra, Algebra, QuiverPresentation, Relation,
};
use crate::error::{Error, Result};
use crate::exactlin::sparse::sparsify;
use crate::exactlin::Field;
use crate::homological::{dominant_dimension, qf3_minimal_faithful, right_dominant_dimension};
use crate::krullschmidt::{decompose, is_isomorphic};
use crate::modules::{
    direct_sum, injective_indecomposable, projective_indecomposable, regular_module, Module, Side,
};
use crate::morita::{
    corner_bimodules, cover_check, cover_check_with, double_centralizer_check,
    idempotent_projective, inverse_nakayama, is_morita_algebra, nakayama,
    reduce_cover_to_idempotent, CoverMode,
};

#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub seed: u64,
    pub case_count: usize,
    pub max_vertices: usize,
    pub max_arrows: usize,
    pub max_relation_length: usize,
    pub field: Field,
    pub shrink: bool,
    /// Largest algebra dimension kept; longer surviving paths are killed
    /// until the bound holds.
    pub max_dim: usize,
    /// Dominant dimension cap used by the checks.
    pub cap: usize,
    /// Negative control: corrupt one structure constant of every case.
    pub corrupt_structure: bool,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            seed: 0,
            case_count: 200,
            max_vertices: 4,
            max_arrows: 5,
            max_relation_length: 3,
            field: Field::Rationals,
            shrink: true,
            max_dim: 40,
            cap: 6,
            corrupt_structure: false,
        }
    }
}

impl FuzzConfig {
    pub fn with_seed(seed: u64, case_count: usize) -> Self {
        FuzzConfig {
            seed,
            case_count,
            ..FuzzConfig::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_vertices == 0
            || self.max_relation_length == 0
            || self.max_dim == 0
            || self.cap < 2
        {
            return Err(Error::schema(
                "fuzz",
                "bounds must be positive and the cap at least 2",
            ));
        }
        Ok(())
    }
}

fn case_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Paths of exactly `len` arrows, as arrow indices, leftmost first.
fn paths_of_length(p: &QuiverPresentation, len: usize) -> Vec<Vec<usize>> {
    let mut paths: Vec<Vec<usize>> = (0..p.arrows.len()).map(|a| vec![a]).collect();
    for _ in 1..len {
        let mut next = Vec::new();
        for path in &paths {
            for (b, arrow) in p.arrows.iter().enumerate() {
                if arrow.from == p.arrows[path[0]].to {
                    let mut q = vec![b];
                    q.extend(path);
                    next.push(q);
                }
            }
        }
        paths = next;
    }
    paths
}

fn monomial(p: &QuiverPresentation, path: &[usize]) -> Relation {
    let names: Vec<&str> = path.iter().map(|&a| p.arrows[a].name.as_str()).collect();
    Relation::monomial(p.field, &names)
}

/// A random bound quiver: random arrows, a random set of monomial relations
/// of lengths `2..=L` and every path of length `L + 1`.
pub fn generate_case(rng: &mut ChaCha8Rng, cfg: &FuzzConfig) -> QuiverPresentation {
    let n = rng.gen_range(1..=cfg.max_vertices);
    let names: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let len = cfg.max_relation_length.max(1);
    let mut p = QuiverPresentation::new(cfg.field, &refs, len + 2);
    let arrows = rng.gen_range(0..=cfg.max_arrows);
    for k in 1..=arrows {
        let from = rng.gen_range(0..n);
        let to = rng.gen_range(0..n);
        p = p.arrow(&format!("x{k}"), &names[from], &names[to]);
    }
    for l in 2..=len {
        for path in paths_of_length(&p, l) {
            if rng.gen_bool(0.3) {
                p.relations.push(monomial(&p, &path));
            }
        }
    }
    for path in paths_of_length(&p, len + 1) {
        p.relations.push(monomial(&p, &path));
    }
    p
}

/// Build the case, killing random surviving paths while it is too large.
fn build_bounded(
    p: &mut QuiverPresentation,
    rng: &mut ChaCha8Rng,
    max_dim: usize,
) -> Result<Algebra> {
    loop {
        let a = build_algebra(p)?;
        if a.dim() <= max_dim {
            return Ok(a);
        }
        let long: Vec<&String> = a
            .basis_labels()
            .iter()
            .filter(|l| l.contains('*'))
            .collect();
        let Some(label) = long.choose(rng) else {
            return Ok(a);
        };
        let path: Vec<&str> = label.split('*').collect();
        let rel = Relation::monomial(p.field, &path);
        p.relations.push(rel);
    }
}

/// A check failure inside one case.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Violation {
    pub check: String,
    pub message: String,
}

fn violation(check: &str, message: impl Into<String>) -> Violation {
    Violation {
        check: check.into(),
        message: message.into(),
    }
}

/// Summary data of a case that ran to completion.
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct CaseData {
    pub dim: usize,
    pub domdim: String,
    pub qf3: bool,
    pub morita: Option<bool>,
}

struct Checked {
    data: CaseData,
    violations: Vec<Violation>,
    skipped: Option<String>,
}

fn is_unsupported(e: &Error) -> bool {
    matches!(
        e,
        Error::NotSplit(_) | Error::UnsupportedCharacteristic { .. }
    )
}

/// Record an error as a violation unless it signals an unsupported input.
fn absorb<T>(
    out: &mut Vec<Violation>,
    skipped: &mut Option<String>,
    check: &str,
    r: Result<T>,
) -> Option<T> {
    match r {
        Ok(v) => Some(v),
        Err(e) if is_unsupported(&e) => {
            skipped.get_or_insert_with(|| e.to_string());
            None
        }
        Err(e) => {
            out.push(violation(check, e.to_string()));
            None
        }
    }
}

fn corrupt(a: &Algebra) -> Algebra {
    let mut parts = a.parts();
    let field = parts.field;
    let mut twice = vec![field.zero(); a.dim()];
    twice[0] = field.from_i64(2);
    parts.table[0][0] = sparsify(&twice);
    Algebra::from_parts_unchecked(parts)
}

fn run_checks(p: &QuiverPresentation, cfg: &FuzzConfig, check_seed: u64) -> Checked {
    let mut out = Vec::new();
    let mut skipped = None;
    let mut data = CaseData::default();
    let built = match build_algebra(p) {
        Ok(a) => a,
        Err(e) => {
            out.push(violation("build", e.to_string()));
            return Checked {
                data,
                violations: out,
                skipped,
            };
        }
    };
    let built = if cfg.corrupt_structure {
        corrupt(&built)
    } else {
        built
    };
    data.dim = built.dim();

    let problems = validate_algebra(&built);
    if !problems.is_empty() {
        out.push(violation("validation", problems.join("; ")));
        return Checked {
            data,
            violations: out,
            skipped,
        };
    }
    let a = Arc::new(built);
    let reg = regular_module(&a, Side::Left);
    let da = regular_module(&a, Side::Right).dual();
    for (name, m) in [("regular", &reg), ("dual", &da)] {
        let v = m.violations();
        if !v.is_empty() {
            out.push(violation("validation", format!("{name}: {}", v.join("; "))));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(check_seed);
    let n = a.num_idempotents();

    // Krull-Schmidt certificates
    for (name, m) in [("regular", &reg), ("dual", &da)] {
        if let Some(d) = absorb(&mut out, &mut skipped, "krull_schmidt", decompose(m)) {
            if !d.verify() {
                out.push(violation(
                    "krull_schmidt",
                    format!("{name} decomposition certificate fails"),
                ));
            }
        }
    }

    // left and right dominant dimension
    let left = absorb(
        &mut out,
        &mut skipped,
        "domdim_sides",
        dominant_dimension(&a, cfg.cap),
    );
    let right = absorb(
        &mut out,
        &mut skipped,
        "domdim_sides",
        right_dominant_dimension(&a, cfg.cap),
    );
    if let (Some(l), Some(r)) = (&left, &right) {
        data.domdim = l.value.to_string();
        if l.value != r.value {
            out.push(violation(
                "domdim_sides",
                format!("left {} right {}", l.value, r.value),
            ));
        }
    }

    // ν(Ae_i) ≅ D(e_i A)
    for i in 0..n {
        let check = || -> Result<bool> {
            let nu = nakayama(&projective_indecomposable(&a, i, Side::Left)?)?;
            is_isomorphic(&nu, &injective_indecomposable(&a, i, Side::Left)?)
        };
        if let Some(false) = absorb(&mut out, &mut skipped, "nakayama", check()) {
            out.push(violation(
                "nakayama",
                format!("ν P({}) is not I({})", i + 1, i + 1),
            ));
        }
    }

    // the cover criteria agree, and agree after reduction to an idempotent
    for _ in 0..3 {
        let mut pieces: Vec<Module> = Vec::new();
        for i in 0..n {
            if rng.gen_bool(0.5) {
                if let Ok(q) = projective_indecomposable(&a, i, Side::Left) {
                    pieces.push(q);
                }
            }
        }
        if pieces.is_empty() {
            continue;
        }
        let check = || -> Result<Option<String>> {
            let p = direct_sum(&a, Side::Left, &pieces)?.module;
            let verdict = cover_check(&p)?;
            let e = reduce_cover_to_idempotent(&p)?;
            let reduced = cover_check_with(&idempotent_projective(&a, &e)?, CoverMode::Fast)?;
            Ok((verdict.holds != reduced.holds)
                .then(|| format!("cover {} but reduced {}", verdict.holds, reduced.holds)))
        };
        match check() {
            Ok(Some(msg)) => out.push(violation("reduction", msg)),
            Ok(None) => {}
            Err(Error::LemmaViolation(m)) => out.push(violation("lemma4", m)),
            Err(Error::TheoremViolation(m)) => out.push(violation("reduction", m)),
            Err(e) => {
                absorb::<()>(&mut out, &mut skipped, "lemma4", Err(e));
            }
        }
    }

    // the Morita condition table is constant
    match is_morita_algebra(&a, cfg.cap) {
        Ok(v) => {
            data.qf3 = v.qf3;
            data.morita = Some(v.verdict);
        }
        Err(Error::TheoremViolation(m)) => out.push(violation("theorem1", m)),
        Err(e) => {
            absorb::<()>(&mut out, &mut skipped, "theorem1", Err(e));
        }
    }

    // covers versus the double centralizer property on both corners
    let dd2 = left.as_ref().map(|l| l.value.at_least(2));
    if let (Some(dd2), Some(Some(mf))) = (
        dd2,
        absorb(&mut out, &mut skipped, "prop9", qf3_minimal_faithful(&a)),
    ) {
        let check = || -> Result<Vec<Violation>> {
            let mut v = Vec::new();
            let (ae, _) = corner_bimodules(mf.module.algebra(), &mf.idempotent)?;
            if double_centralizer_check(&ae) != dd2 {
                v.push(violation(
                    "morita_tachikawa",
                    format!("domdim ≥ 2 is {dd2} but DCP on Ae disagrees"),
                ));
            }
            if dd2 && !cover_check(&inverse_nakayama(&mf.module)?)?.holds {
                v.push(violation("prop9", "Hom_A(DA, Ae) does not give a cover"));
            }
            Ok(v)
        };
        if let Some(v) = absorb(&mut out, &mut skipped, "prop9", check()) {
            out.extend(v);
        }
    }

    Checked {
        data,
        violations: out,
        skipped,
    }
}

/// One generated case in the report.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CaseRecord {
    pub index: usize,
    pub vertices: usize,
    pub arrows: usize,
    pub relations: usize,
    #[serde(flatten)]
    pub data: CaseData,
    pub violations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ViolationRecord {
    pub case: usize,
    pub check: String,
    pub message: String,
    pub presentation: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shrunk: Option<Value>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct FuzzReport {
    pub seed: u64,
    pub case_count: usize,
    pub field: Value,
    pub cases: Vec<CaseRecord>,
    pub violations: Vec<ViolationRecord>,
    pub skipped: usize,
}

impl FuzzReport {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// Violations per check name.
    pub fn violation_counts(&self) -> std::collections::BTreeMap<String, usize> {
        let mut counts = std::collections::BTreeMap::new();
        for v in &self.violations {
            *counts.entry(v.check.clone()).or_insert(0) += 1;
        }
        counts
    }
}

/// Seed for the random choices made by the checks of one case, independent
/// of the generator stream so shrinking can replay them.
fn check_seed(seed: u64, index: usize) -> u64 {
    seed.rotate_left(17) ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Generate the case stream of `cfg` with the algebra bound applied.
pub fn generate_cases(cfg: &FuzzConfig) -> Vec<QuiverPresentation> {
    (0..cfg.case_count)
        .map(|index| bounded_case(cfg, index))
        .collect()
}

fn bounded_case(cfg: &FuzzConfig, index: usize) -> QuiverPresentation {
    let mut rng = case_rng(cfg.seed, index as u64);
    let mut p = generate_case(&mut rng, cfg);
    // a failed build is reported by the checks
    let _ = build_bounded(&mut p, &mut rng, cfg.max_dim);
    p
}

/// Generate and check case `index` of the stream, shrinking any violation.
pub fn run_case(cfg: &FuzzConfig, index: usize) -> (CaseRecord, Vec<ViolationRecord>) {
    let p = bounded_case(cfg, index);
    let seed = check_seed(cfg.seed, index);
    let checked = run_checks(&p, cfg, seed);
    let record = CaseRecord {
        index,
        vertices: p.vertices.len(),
        arrows: p.arrows.len(),
        relations: p.relations.len(),
        data: checked.data,
        violations: checked.violations.len(),
        skipped: checked.skipped,
    };
    let violations = checked
        .violations
        .into_iter()
        .map(|v| {
            let shrunk = cfg
                .shrink
                .then(|| shrink(&p, &v.check, cfg, seed).to_json());
            ViolationRecord {
                case: index,
                check: v.check,
                message: v.message,
                presentation: p.to_json(),
                shrunk,
            }
        })
        .collect();
    (record, violations)
}

pub fn run_suite(cfg: &FuzzConfig) -> Result<FuzzReport> {
    cfg.validate()?;
    let outcomes: Vec<(CaseRecord, Vec<ViolationRecord>)> = (0..cfg.case_count)
        .into_par_iter()
        .map(|index| run_case(cfg, index))
        .collect();
    let skipped = outcomes.iter().filter(|(c, _)| c.skipped.is_some()).count();
    let (cases, violations): (Vec<_>, Vec<_>) = outcomes.into_iter().unzip();
    Ok(FuzzReport {
        seed: cfg.seed,
        case_count: cfg.case_count,
        field: field_json(cfg.field),
        cases,
        violations: violations.into_iter().flatten().collect(),
        skipped,
    })
}

fn still_fails(p: &QuiverPresentation, check: &str, cfg: &FuzzConfig, seed: u64) -> bool {
    build_algebra(p).is_ok()
        && run_checks(p, cfg, seed)
            .violations
            .iter()
            .any(|v| v.check == check)
}

/// Greedily delete arrows, relations and isolated vertices while the named
/// check keeps failing.
pub fn shrink(
    p: &QuiverPresentation,
    check: &str,
    cfg: &FuzzConfig,
    seed: u64,
) -> QuiverPresentation {
    let mut cur = p.clone();
    loop {
        let mut candidates = Vec::new();
        for k in 0..cur.arrows.len() {
            let mut q = cur.clone();
            let name = q.arrows.remove(k).name;
            q.relations
                .retain(|r| r.terms.iter().all(|t| !t.path.contains(&name)));
            candidates.push(q);
        }
        for r in 0..cur.relations.len() {
            let mut q = cur.clone();
            q.relations.remove(r);
            candidates.push(q);
        }
        for v in 0..cur.vertices.len() {
            let name = &cur.vertices[v];
            if cur.vertices.len() > 1 && cur.arrows.iter().all(|a| &a.from != name && &a.to != name)
            {
                let mut q = cur.clone();
                q.vertices.remove(v);
                candidates.push(q);
            }
        }
        match candidates
            .into_iter()
            .find(|q| still_fails(q, check, cfg, seed))
        {
            Some(q) => cur = q,
            None => return cur,
        }
    }
}

#[cfg(test)]
mod tests;
