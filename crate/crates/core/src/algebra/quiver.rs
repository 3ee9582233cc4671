//! Bound quiver presentations and path-algebra quotients.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use serde_json::{json, Value};

use super::{Algebra, AlgebraParts};
use crate::error::{Error, Result};
use crate::exactlin::{Echelon, Field, Scalar, SparseVec, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub from: String,
    pub to: String,
}

/// One term of a relation: a coefficient times a path written right to left,
/// so `["a2", "a1"]` is `a2 ∘ a1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Scalar,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Relation {
    pub terms: Vec<Term>,
}

impl Relation {
    /// A single zero relation on a path.
    pub fn monomial(field: Field, path: &[&str]) -> Self {
        Relation {
            terms: vec![Term {
                coeff: field.one(),
                path: path.iter().map(|s| s.to_string()).collect(),
            }],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub field: Field,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    pub nilpotency_cap: usize,
}

impl QuiverPresentation {
    pub fn new(field: Field, vertices: &[&str], nilpotency_cap: usize) -> Self {
        QuiverPresentation {
            field,
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            arrows: Vec::new(),
            relations: Vec::new(),
            nilpotency_cap,
        }
    }

    pub fn arrow(mut self, name: &str, from: &str, to: &str) -> Self {
        self.arrows.push(Arrow {
            name: name.into(),
            from: from.into(),
            to: to.into(),
        });
        self
    }

    /// Add the zero relation `path = 0`.
    pub fn zero_relation(mut self, path: &[&str]) -> Self {
        self.relations.push(Relation::monomial(self.field, path));
        self
    }

    pub fn relation(mut self, terms: &[(i64, &[&str])]) -> Self {
        let field = self.field;
        self.relations.push(Relation {
            terms: terms
                .iter()
                .map(|(c, p)| Term {
                    coeff: field.from_i64(*c),
                    path: p.iter().map(|s| s.to_string()).collect(),
                })
                .collect(),
        });
        self
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::from_json_error(&e))?;
        // a second pass over the text locates malformed coefficients; shape
        // errors are left to the schema check
        if let Err(e) = serde_json::from_str::<CoeffScan>(text) {
            if e.to_string().starts_with(BAD_COEFF) {
                return Err(Error::from_json_error(&e));
            }
        }
        Self::from_json(&v)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::schema("$", "expected an object"))?;
        let field = parse_field(
            obj.get("field")
                .ok_or_else(|| Error::schema("field", "missing"))?,
        )?;
        let vertices = obj
            .get("vertices")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::schema("vertices", "expected an array of strings"))?
            .iter()
            .enumerate()
            .map(|(i, x)| {
                x.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| Error::schema(format!("vertices[{i}]"), "expected a string"))
            })
            .collect::<Result<Vec<_>>>()?;
        let arrows = match obj.get("arrows") {
            None => Vec::new(),
            Some(a) => a
                .as_array()
                .ok_or_else(|| Error::schema("arrows", "expected an array"))?
                .iter()
                .enumerate()
                .map(|(i, x)| {
                    let key = |k: &str| format!("arrows[{i}].{k}");
                    let get = |k: &str| {
                        x.get(k)
                            .and_then(Value::as_str)
                            .map(str::to_string)
                            .ok_or_else(|| Error::schema(key(k), "expected a string"))
                    };
                    Ok(Arrow {
                        name: get("name")?,
                        from: get("from")?,
                        to: get("to")?,
                    })
                })
                .collect::<Result<Vec<_>>>()?,
        };
        let relations = match obj.get("relations") {
            None => Vec::new(),
            Some(r) => r
                .as_array()
                .ok_or_else(|| Error::schema("relations", "expected an array"))?
                .iter()
                .enumerate()
                .map(|(i, rel)| parse_relation(field, rel, i))
                .collect::<Result<Vec<_>>>()?,
        };
        let cap = obj
            .get("nilpotency_cap")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::schema("nilpotency_cap", "expected a non-negative integer"))?;
        Ok(QuiverPresentation {
            field,
            vertices,
            arrows,
            relations,
            nilpotency_cap: cap as usize,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "field": field_json(self.field),
            "vertices": self.vertices,
            "arrows": self.arrows.iter().map(|a| json!({"name": a.name, "from": a.from, "to": a.to})).collect::<Vec<_>>(),
            "relations": self.relations.iter().map(|r| {
                r.terms.iter().map(|t| json!({"coeff": t.coeff.to_string(), "path": t.path})).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
            "nilpotency_cap": self.nilpotency_cap,
        })
    }
}

const BAD_COEFF: &str = "malformed coefficient";

#[derive(serde::Deserialize)]
struct CoeffScan {
    #[allow(dead_code)]
    relations: Vec<Vec<TermScan>>,
}

#[derive(serde::Deserialize)]
struct TermScan {
    #[allow(dead_code)]
    coeff: Option<CoeffText>,
}

struct CoeffText;

impl<'de> serde::Deserialize<'de> for CoeffText {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        if let Value::String(s) = Value::deserialize(d)? {
            Field::Rationals
                .parse(&s)
                .map_err(|m| serde::de::Error::custom(format!("{BAD_COEFF}: {m}")))?;
        }
        Ok(CoeffText)
    }
}

pub(crate) fn field_json(f: Field) -> Value {
    match f {
        Field::Rationals => json!({"kind": "rationals", "characteristic": 0}),
        Field::PrimeField { characteristic } => {
            json!({"kind": "prime", "characteristic": characteristic})
        }
    }
}

fn parse_field(v: &Value) -> Result<Field> {
    let kind = v
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::schema("field.kind", "expected a string"))?;
    let ch = v.get("characteristic").and_then(Value::as_u64);
    match kind {
        "rationals" | "rational" | "Q" => match ch {
            None | Some(0) => Ok(Field::Rationals),
            Some(_) => Err(Error::schema(
                "field.characteristic",
                "rationals have characteristic 0",
            )),
        },
        "prime" | "GF" | "finite" => {
            let p = ch.ok_or_else(|| Error::schema("field.characteristic", "missing prime"))?;
            Field::prime(p).map_err(|e| Error::schema("field.characteristic", e.to_string()))
        }
        other => Err(Error::schema(
            "field.kind",
            format!("unknown field kind `{other}`"),
        )),
    }
}

fn parse_relation(field: Field, v: &Value, i: usize) -> Result<Relation> {
    // A relation is either a list of terms or a single term object.
    let items: Vec<&Value> = match v {
        Value::Array(a) => a.iter().collect(),
        Value::Object(_) => vec![v],
        _ => {
            return Err(Error::schema(
                format!("relations[{i}]"),
                "expected a term list",
            ))
        }
    };
    let terms = items
        .into_iter()
        .enumerate()
        .map(|(j, t)| {
            let key = |k: &str| format!("relations[{i}][{j}].{k}");
            let coeff = match t.get("coeff") {
                None => field.one(),
                Some(Value::String(s)) => {
                    field.parse(s).map_err(|m| Error::schema(key("coeff"), m))?
                }
                Some(Value::Number(n)) if n.is_i64() => field.from_i64(n.as_i64().unwrap()),
                Some(_) => return Err(Error::schema(key("coeff"), "expected a rational string")),
            };
            let path = t
                .get("path")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::schema(key("path"), "expected an array of arrow names"))?
                .iter()
                .map(|x| {
                    x.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| Error::schema(key("path"), "expected arrow names"))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Term { coeff, path })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Relation { terms })
}

/// A path as arrow indices, leftmost (last applied) first.
type Path = Vec<usize>;

struct Quiver<'a> {
    names: Vec<&'a str>,
    src: Vec<usize>,
    tgt: Vec<usize>,
    nv: usize,
}

impl Quiver<'_> {
    fn source(&self, p: &Path) -> usize {
        self.src[*p.last().unwrap()]
    }

    fn target(&self, p: &Path) -> usize {
        self.tgt[p[0]]
    }

    fn label(&self, p: &Path) -> String {
        p.iter()
            .map(|&a| self.names[a])
            .collect::<Vec<_>>()
            .join("*")
    }

    fn cmp(&self, p: &Path, q: &Path) -> Ordering {
        p.len().cmp(&q.len()).then_with(|| {
            p.iter()
                .map(|&a| self.names[a])
                .cmp(q.iter().map(|&a| self.names[a]))
        })
    }

    /// All paths of each length `1..=max`, grouped by length.
    fn paths_up_to(&self, max: usize) -> Vec<Vec<Path>> {
        let mut out: Vec<Vec<Path>> = vec![Vec::new()];
        if max == 0 {
            return out;
        }
        out.push((0..self.names.len()).map(|a| vec![a]).collect());
        for len in 2..=max {
            let mut next = Vec::new();
            for p in &out[len - 1] {
                for a in 0..self.names.len() {
                    if self.src[a] == self.target(p) {
                        let mut q = vec![a];
                        q.extend_from_slice(p);
                        next.push(q);
                    }
                }
            }
            out.push(next);
        }
        out
    }

    /// Paths ending at `v` (for left multiplication) of length `< max`,
    /// including the trivial path.
    fn paths_from(&self, v: usize, max: usize, all: &[Vec<Path>]) -> Vec<Path> {
        let mut out = vec![Vec::new()];
        for len in 1..max.min(all.len()) {
            out.extend(all[len].iter().filter(|p| self.source(p) == v).cloned());
        }
        out
    }

    fn paths_to(&self, v: usize, max: usize, all: &[Vec<Path>]) -> Vec<Path> {
        let mut out = vec![Vec::new()];
        for len in 1..max.min(all.len()) {
            out.extend(all[len].iter().filter(|p| self.target(p) == v).cloned());
        }
        out
    }
}

/// A relation after name resolution.
struct Rel {
    terms: Vec<(Scalar, Path)>,
    source: usize,
    target: usize,
}

/// Build `kQ / I` for the ideal `I` generated by the relations.
///
/// Monomial presentations are handled by subpath avoidance. Otherwise the
/// ideal is spanned modulo paths of length `N` and a separate exact check
/// verifies that every path of length `N` lies in `I`.
pub fn build_algebra(p: &QuiverPresentation) -> Result<Algebra> {
    let field = p.field;
    let n_cap = p.nilpotency_cap;
    if n_cap < 2 {
        return Err(Error::schema("nilpotency_cap", "must be at least 2"));
    }
    let mut vindex: HashMap<&str, usize> = HashMap::new();
    for (i, v) in p.vertices.iter().enumerate() {
        if vindex.insert(v.as_str(), i).is_some() {
            return Err(Error::schema("vertices", format!("duplicate vertex `{v}`")));
        }
    }
    let mut aindex: HashMap<&str, usize> = HashMap::new();
    let mut q = Quiver {
        names: Vec::new(),
        src: Vec::new(),
        tgt: Vec::new(),
        nv: p.vertices.len(),
    };
    for a in &p.arrows {
        let s = *vindex.get(a.from.as_str()).ok_or_else(|| {
            Error::schema(
                "arrows",
                format!(
                    "arrow `{}` starts at undeclared vertex `{}`",
                    a.name, a.from
                ),
            )
        })?;
        let t = *vindex.get(a.to.as_str()).ok_or_else(|| {
            Error::schema(
                "arrows",
                format!("arrow `{}` ends at undeclared vertex `{}`", a.name, a.to),
            )
        })?;
        if aindex.insert(a.name.as_str(), q.names.len()).is_some() {
            return Err(Error::schema(
                "arrows",
                format!("duplicate arrow `{}`", a.name),
            ));
        }
        q.names.push(a.name.as_str());
        q.src.push(s);
        q.tgt.push(t);
    }
    let rels = resolve_relations(p, &q, &aindex)?;

    let monomial = rels.iter().all(|r| r.terms.len() == 1);
    let (paths, reduction): (Vec<Path>, Reduction) = if monomial {
        monomial_basis(&q, &rels, n_cap)?
    } else {
        general_basis(field, &q, &rels, n_cap)?
    };

    // Basis: vertices, then normal-form paths by (length, lex).
    let nv = q.nv;
    let dim = nv + paths.len();
    let index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, nv + i)).collect();
    let mut labels: Vec<String> = p.vertices.iter().map(|v| format!("e{v}")).collect();
    labels.extend(paths.iter().map(|p| q.label(p)));

    let one = field.one();
    let endpoints = |b: usize| -> (usize, usize) {
        if b < nv {
            (b, b)
        } else {
            let pth = &paths[b - nv];
            (q.target(pth), q.source(pth))
        }
    };
    let mut table: Vec<Vec<SparseVec>> = vec![vec![Vec::new(); dim]; dim];
    for i in 0..dim {
        let (_, si) = endpoints(i);
        for j in 0..dim {
            let (tj, _) = endpoints(j);
            if si != tj {
                continue;
            }
            table[i][j] = if i < nv {
                vec![(j, one.clone())]
            } else if j < nv {
                vec![(i, one.clone())]
            } else {
                let mut w = paths[i - nv].clone();
                w.extend_from_slice(&paths[j - nv]);
                reduction.reduce(&w, n_cap, &index, &one)
            };
        }
    }
    let unit = {
        let mut u = vec![field.zero(); dim];
        for x in u.iter_mut().take(nv) {
            *x = one.clone();
        }
        u
    };
    let idempotents = (0..nv)
        .map(|v| {
            let mut e = vec![field.zero(); dim];
            e[v] = one.clone();
            e
        })
        .collect();
    let rad_rows = (nv..dim)
        .map(|k| {
            let mut e = vec![field.zero(); dim];
            e[k] = one.clone();
            e
        })
        .collect();
    Algebra::from_parts(AlgebraParts {
        field,
        basis_labels: labels,
        table,
        unit,
        idempotents,
        vertex_labels: p.vertices.clone(),
        primitive: true,
        known_radical: Some(Subspace::from_rref_rows(field, dim, rad_rows)),
    })
}

fn resolve_relations(
    p: &QuiverPresentation,
    q: &Quiver,
    aindex: &HashMap<&str, usize>,
) -> Result<Vec<Rel>> {
    let mut rels = Vec::new();
    for (ri, r) in p.relations.iter().enumerate() {
        let mut terms: Vec<(Scalar, Path)> = Vec::new();
        for t in &r.terms {
            if t.coeff.field() != p.field {
                return Err(Error::schema(
                    format!("relations[{ri}]"),
                    "coefficient in a different field",
                ));
            }
            let path = t
                .path
                .iter()
                .map(|n| {
                    aindex.get(n.as_str()).copied().ok_or_else(|| {
                        Error::schema(format!("relations[{ri}]"), format!("unknown arrow `{n}`"))
                    })
                })
                .collect::<Result<Path>>()?;
            if path.len() < 2 {
                return Err(Error::NonAdmissible(format!(
                    "relation {ri} has a term of length {}",
                    path.len()
                )));
            }
            if path.windows(2).any(|w| q.src[w[0]] != q.tgt[w[1]]) {
                return Err(Error::schema(
                    format!("relations[{ri}]"),
                    format!("path `{}` is not composable", q.label(&path)),
                ));
            }
            if t.coeff.is_zero() {
                continue;
            }
            match terms.iter_mut().find(|(_, p)| *p == path) {
                Some((c, _)) => *c += &t.coeff,
                None => terms.push((t.coeff.clone(), path)),
            }
        }
        terms.retain(|(c, _)| !c.is_zero());
        let Some((_, first)) = terms.first() else {
            continue;
        };
        let (s, t) = (q.source(first), q.target(first));
        if terms
            .iter()
            .any(|(_, p)| q.source(p) != s || q.target(p) != t)
        {
            return Err(Error::schema(
                format!("relations[{ri}]"),
                "terms do not share source and target",
            ));
        }
        rels.push(Rel {
            terms,
            source: s,
            target: t,
        });
    }
    Ok(rels)
}

enum Reduction {
    /// Monomial ideal: a path is zero iff it is not a normal form.
    Monomial,
    /// `rows[w]` expresses the non-normal path `w` in normal forms.
    Linear(HashMap<Path, Vec<(Path, Scalar)>>),
}

impl Reduction {
    fn reduce(
        &self,
        w: &Path,
        cap: usize,
        index: &HashMap<&Path, usize>,
        one: &Scalar,
    ) -> SparseVec {
        if w.len() >= cap {
            return Vec::new();
        }
        if let Some(&k) = index.get(w) {
            return vec![(k, one.clone())];
        }
        match self {
            Reduction::Monomial => Vec::new(),
            Reduction::Linear(rows) => {
                let mut out: SparseVec = rows
                    .get(w)
                    .map(|terms| terms.iter().map(|(p, c)| (index[p], c.clone())).collect())
                    .unwrap_or_default();
                out.sort_by_key(|(k, _)| *k);
                out
            }
        }
    }
}

fn contains_subpath(w: &Path, rels: &HashSet<&Path>, max_rel: usize) -> bool {
    (0..w.len())
        .any(|s| (s + 2..=w.len().min(s + max_rel)).any(|e| rels.contains(&w[s..e].to_vec())))
}

fn monomial_basis(q: &Quiver, rels: &[Rel], cap: usize) -> Result<(Vec<Path>, Reduction)> {
    let zero: HashSet<&Path> = rels.iter().map(|r| &r.terms[0].1).collect();
    let max_rel = rels.iter().map(|r| r.terms[0].1.len()).max().unwrap_or(0);
    let mut layer: Vec<Path> = (0..q.names.len()).map(|a| vec![a]).collect();
    let mut out: Vec<Path> = Vec::new();
    let mut len = 1;
    while !layer.is_empty() {
        if len == cap {
            let w = &layer[0];
            return Err(Error::CapNotNilpotent {
                cap,
                path: q.label(w),
            });
        }
        let mut next = Vec::new();
        for p in &layer {
            for a in 0..q.names.len() {
                if q.src[a] != q.target(p) {
                    continue;
                }
                let mut w = vec![a];
                w.extend_from_slice(p);
                // only subpaths through the new arrow can be new
                let hit =
                    (2..=w.len().min(max_rel.max(2))).any(|e| zero.contains(&w[..e].to_vec()));
                if !hit {
                    next.push(w);
                }
            }
        }
        out.append(&mut layer);
        layer = next;
        len += 1;
    }
    debug_assert!(out
        .iter()
        .all(|w| !contains_subpath(w, &zero, max_rel.max(2))));
    out.sort_by(|a, b| q.cmp(a, b));
    Ok((out, Reduction::Monomial))
}

fn general_basis(
    field: Field,
    q: &Quiver,
    rels: &[Rel],
    cap: usize,
) -> Result<(Vec<Path>, Reduction)> {
    let min_len = rels
        .iter()
        .flat_map(|r| r.terms.iter().map(|t| t.1.len()))
        .min()
        .unwrap_or(2);
    let max_len = rels
        .iter()
        .flat_map(|r| r.terms.iter().map(|t| t.1.len()))
        .max()
        .unwrap_or(2);
    let cert_len = cap + (max_len - min_len);
    let all = q.paths_up_to(cert_len);

    // Columns are ordered so that larger paths come first and become pivots.
    let column_order = |upto: usize| -> (Vec<Path>, HashMap<Path, usize>) {
        let mut cols: Vec<Path> = all[2..=upto.min(all.len() - 1)]
            .iter()
            .flatten()
            .cloned()
            .collect();
        cols.sort_by(|a, b| q.cmp(b, a));
        let idx = cols
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        (cols, idx)
    };

    // Truncated span of I modulo paths of length >= cap.
    let (cols, idx) = column_order(cap - 1);
    let mut ech = Echelon::new(field, cols.len());
    for r in rels {
        for terms in ideal_multiples(q, r, cap - 1, Some(cap), &all) {
            ech.insert(to_sparse(&terms, &idx));
        }
    }

    // Exact certificate that every path of length cap lies in I.
    let (_, cidx) = column_order(cert_len);
    let mut cert = Echelon::new(field, cidx.len());
    for r in rels {
        for terms in ideal_multiples(q, r, cert_len, None, &all) {
            cert.insert(to_sparse(&terms, &cidx));
        }
    }
    if cap < all.len() {
        for w in &all[cap] {
            if !cert.contains(vec![(cidx[w], field.one())]) {
                return Err(Error::CapNotNilpotent {
                    cap,
                    path: q.label(w),
                });
            }
        }
    }

    let pivots: HashSet<usize> = ech.pivots().collect();
    let rows = ech.reduced_rows();
    let mut reductions: HashMap<Path, Vec<(Path, Scalar)>> = HashMap::new();
    for row in rows {
        let (pc, _) = &row[0];
        let w = cols[*pc].clone();
        let expr = row[1..]
            .iter()
            .map(|(c, x)| (cols[*c].clone(), -x))
            .collect();
        reductions.insert(w, expr);
    }
    let mut normal: Vec<Path> = all[1].clone();
    normal.extend(
        cols.iter()
            .enumerate()
            .filter(|(i, _)| !pivots.contains(i))
            .map(|(_, p)| p.clone()),
    );
    normal.sort_by(|a, b| q.cmp(a, b));
    Ok((normal, Reduction::Linear(reductions)))
}

/// Elements `l ρ r` with total length of the longest (or, when truncating,
/// shortest) term at most `limit`; with `truncate = Some(t)` terms of length
/// `>= t` are dropped.
fn ideal_multiples(
    q: &Quiver,
    r: &Rel,
    limit: usize,
    truncate: Option<usize>,
    all: &[Vec<Path>],
) -> Vec<Vec<(Path, Scalar)>> {
    let shortest = r.terms.iter().map(|t| t.1.len()).min().unwrap();
    let longest = r.terms.iter().map(|t| t.1.len()).max().unwrap();
    let base = if truncate.is_some() {
        shortest
    } else {
        longest
    };
    if base > limit {
        return Vec::new();
    }
    let room = limit - base + 1;
    let lefts = q.paths_from(r.target, room, all);
    let rights = q.paths_to(r.source, room, all);
    let mut out = Vec::new();
    for l in &lefts {
        for rt in &rights {
            if base + l.len() + rt.len() > limit {
                continue;
            }
            let terms: Vec<(Path, Scalar)> = r
                .terms
                .iter()
                .map(|(c, p)| {
                    let mut w = l.clone();
                    w.extend_from_slice(p);
                    w.extend_from_slice(rt);
                    (w, c.clone())
                })
                .filter(|(w, _)| truncate.is_none_or(|t| w.len() < t))
                .collect();
            if !terms.is_empty() {
                out.push(terms);
            }
        }
    }
    out
}

fn to_sparse(terms: &[(Path, Scalar)], idx: &HashMap<Path, usize>) -> SparseVec {
    let mut v: SparseVec = terms.iter().map(|(w, c)| (idx[w], c.clone())).collect();
    v.sort_by_key(|(k, _)| *k);
    v
}
