use std::cmp::Ordering;

use super::poly::{minimal_polynomial, roots_in_field};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Subspace};
use crate::modules::{hom_space, submodule, HomSpace, Module};

/// `End(M)` with the radical given by the trace form `(f, g) ↦ Tr(f g)` on `M`.
pub(crate) struct EndInfo {
    pub space: HomSpace,
    pub gram: Matrix,
    pub radical: Subspace,
}

pub(crate) fn end_info(m: &Module) -> Result<EndInfo> {
    let field = m.field();
    if !field.trace_form_ok(m.dim()) {
        return Err(Error::UnsupportedCharacteristic {
            characteristic: field.characteristic(),
            bound: m.dim(),
            what: "endomorphism radical",
        });
    }
    let space = hom_space(m, m)?;
    let d = space.dim();
    let mut gram = Matrix::zeros(field, d, d);
    for a in 0..d {
        for b in a..d {
            let t = space.basis()[a].trace_of_product(&space.basis()[b]);
            gram[(a, b)] = t.clone();
            gram[(b, a)] = t;
        }
    }
    let radical = gram.kernel();
    Ok(EndInfo {
        space,
        gram,
        radical,
    })
}

impl EndInfo {
    pub fn is_local(&self) -> bool {
        self.space.dim() - self.radical.dim() == 1
    }

    fn in_radical(&self, f: &Matrix) -> bool {
        self.radical.contains(&self.space.coordinates(f))
    }
}

/// Rank of `f^k` once the powers have stabilised.
fn stable_rank(f: &Matrix) -> (usize, Matrix) {
    let mut p = f.clone();
    let mut r = p.rank();
    loop {
        if r == 0 {
            return (0, p);
        }
        let q = p.mul(&p);
        let r2 = q.rank();
        if r2 == r {
            return (r, p);
        }
        p = q;
        r = r2;
    }
}

enum Kind {
    Splits(Matrix),
    Nilpotent,
    Invertible,
}

fn classify(f: &Matrix) -> Kind {
    let n = f.rows();
    let (r, p) = stable_rank(f);
    if r == 0 {
        Kind::Nilpotent
    } else if r == n {
        Kind::Invertible
    } else {
        Kind::Splits(p)
    }
}

/// An endomorphism that is neither nilpotent nor invertible, with its stable
/// power; `Ok(None)` when `End(M)` is local.
fn find_splitter(m: &Module, info: &EndInfo) -> Result<Option<Matrix>> {
    if info.is_local() {
        return Ok(None);
    }
    let basis = info.space.basis();
    let field = m.field();
    let id = Matrix::identity(field, m.dim());

    // A nilpotent f outside the radical pairs to a nonzero trace with some
    // basis element g, so f g is singular but not nilpotent.
    let trace_trick = |f: &Matrix| -> Option<Matrix> {
        let coords = info.space.coordinates(f);
        (0..basis.len()).find_map(|b| {
            let t = (0..basis.len()).fold(field.zero(), |mut acc, a| {
                acc.add_product(&coords[a], &info.gram[(a, b)]);
                acc
            });
            (!t.is_zero()).then(|| f.mul(&basis[b]))
        })
    };

    let try_candidate = |f: &Matrix| -> Option<Matrix> {
        match classify(f) {
            Kind::Splits(p) => Some(p),
            Kind::Nilpotent => {
                if info.in_radical(f) {
                    return None;
                }
                let g = trace_trick(f)?;
                match classify(&g) {
                    Kind::Splits(p) => Some(p),
                    _ => None,
                }
            }
            Kind::Invertible => {
                let roots = roots_in_field(&minimal_polynomial(f))?;
                for lambda in roots {
                    let shifted = f.sub(&id.scale(&lambda));
                    match classify(&shifted) {
                        Kind::Splits(p) => return Some(p),
                        Kind::Nilpotent if !info.in_radical(&shifted) => {
                            if let Some(g) = trace_trick(&shifted) {
                                if let Kind::Splits(p) = classify(&g) {
                                    return Some(p);
                                }
                            }
                        }
                        _ => {}
                    }
                }
                None
            }
        }
    };

    for f in basis {
        if let Some(p) = try_candidate(f) {
            return Ok(Some(p));
        }
    }
    for a in 0..basis.len() {
        for b in 0..basis.len() {
            let cands = [
                basis[a].mul(&basis[b]),
                basis[a].add(&basis[b]),
                basis[a].sub(&basis[b]),
            ];
            for f in &cands {
                if let Some(p) = try_candidate(f) {
                    return Ok(Some(p));
                }
            }
        }
    }
    Err(Error::NotSplit(format!(
        "endomorphism algebra of a {}-dimensional module has no splitting element over {}",
        m.dim(),
        field
    )))
}

/// One indecomposable piece: the summand with maps `inj: S → M`,
/// `proj: M → S`, `proj ∘ inj = id`.
#[derive(Clone, Debug)]
pub struct Piece {
    pub module: Module,
    pub inj: Matrix,
    pub proj: Matrix,
}

fn split_rec(m: &Module, out: &mut Vec<Piece>) -> Result<()> {
    if m.dim() == 0 {
        return Ok(());
    }
    let field = m.field();
    let info = end_info(m)?;
    let Some(p) = find_splitter(m, &info)? else {
        out.push(Piece {
            module: m.clone(),
            inj: Matrix::identity(field, m.dim()),
            proj: Matrix::identity(field, m.dim()),
        });
        return Ok(());
    };
    // Fitting: M = ker p ⊕ im p for p a stable power
    let k = p.kernel();
    let i = p.column_space();
    let (km, kinc) = submodule(m, &k)?;
    let (im, iinc) = submodule(m, &i)?;
    let t = kinc.matrix.hstack(&iinc.matrix);
    let tinv = t
        .inverse()
        .ok_or_else(|| Error::Internal("Fitting decomposition is not direct".into()))?;
    let all: Vec<usize> = (0..m.dim()).collect();
    let kproj = tinv.select(&(0..km.dim()).collect::<Vec<_>>(), &all);
    let iproj = tinv.select(&(km.dim()..m.dim()).collect::<Vec<_>>(), &all);
    for (sub, inc, pr) in [(km, kinc.matrix, kproj), (im, iinc.matrix, iproj)] {
        let mut pieces = Vec::new();
        split_rec(&sub, &mut pieces)?;
        for pc in pieces {
            out.push(Piece {
                module: pc.module,
                inj: inc.mul(&pc.inj),
                proj: pc.proj.mul(&pr),
            });
        }
    }
    Ok(())
}

/// Split `M` into indecomposable pieces (no grouping).
pub fn indecomposable_pieces(m: &Module) -> Result<Vec<Piece>> {
    let mut out = Vec::new();
    split_rec(m, &mut out)?;
    Ok(out)
}

/// An isomorphism `X → Y` between indecomposable modules, if one exists.
/// Some composite `g ∘ f` has nonzero trace iff it lies outside the radical of
/// the local ring `End(X)`, i.e. is invertible; then `f` is an isomorphism.
pub fn indecomposable_isomorphism(x: &Module, y: &Module) -> Result<Option<Matrix>> {
    x.check_same_category(y)?;
    if x.dim() != y.dim() || x.dimension_vector() != y.dimension_vector() {
        return Ok(None);
    }
    if x.dim() == 0 {
        return Ok(Some(Matrix::zeros(x.field(), 0, 0)));
    }
    let field = x.field();
    if !field.trace_form_ok(x.dim()) {
        return Err(Error::UnsupportedCharacteristic {
            characteristic: field.characteristic(),
            bound: x.dim(),
            what: "isomorphism test",
        });
    }
    let fs = hom_space(x, y)?;
    let gs = hom_space(y, x)?;
    for f in fs.basis() {
        for g in gs.basis() {
            if !g.mul(f).trace().is_zero() {
                return Ok(Some(f.clone()));
            }
        }
    }
    Ok(None)
}

/// Dimension vectors of the radical layers `J^k M / J^{k+1} M`.
pub fn radical_layers(m: &Module) -> Result<Vec<Vec<usize>>> {
    let field = m.field();
    let n = m.dim();
    let acts: Vec<Matrix> = m
        .algebra()
        .radical()?
        .vectors()
        .iter()
        .map(|r| m.act(r))
        .collect();
    // echelon bases of submodules are weight homogeneous
    let counts = |s: &Subspace| {
        let mut c = vec![0; m.algebra().num_idempotents()];
        for &p in s.pivots() {
            c[m.weights()[p]] += 1;
        }
        c
    };
    let mut layers = Vec::new();
    let mut cur = Subspace::full(field, n);
    while cur.dim() > 0 {
        let vs = cur.vectors();
        let next = Subspace::from_vectors(
            field,
            n,
            acts.iter()
                .flat_map(|a| vs.iter().map(|v| a.mul_vec(v)))
                .collect(),
        );
        if next.dim() == cur.dim() {
            return Err(Error::Internal(
                "radical of a nonzero module is everything".into(),
            ));
        }
        layers.push(
            counts(&cur)
                .iter()
                .zip(counts(&next))
                .map(|(a, b)| a - b)
                .collect(),
        );
        cur = next;
    }
    Ok(layers)
}

/// An indecomposable summand with its multiplicity. `injections[c]` and
/// `projections[c]` embed the `c`-th copy, in the coordinates of `module`.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    pub multiplicity: usize,
    pub injections: Vec<Matrix>,
    pub projections: Vec<Matrix>,
    pub layers: Vec<Vec<usize>>,
}

/// Krull-Schmidt decomposition with explicit splitting maps.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub module: Module,
    pub summands: Vec<Summand>,
}

impl Decomposition {
    pub fn num_indecomposables(&self) -> usize {
        self.summands.iter().map(|s| s.multiplicity).sum()
    }

    /// Check `Σ ι π = id` and `π_c ι_d = δ id` exactly, and that all maps are
    /// module homomorphisms.
    pub fn verify(&self) -> bool {
        let m = &self.module;
        let field = m.field();
        let n = m.dim();
        let mut total = Matrix::zeros(field, n, n);
        let maps: Vec<(&Module, &Matrix, &Matrix)> = self
            .summands
            .iter()
            .flat_map(|s| {
                s.injections
                    .iter()
                    .zip(&s.projections)
                    .map(move |(i, p)| (&s.module, i, p))
            })
            .collect();
        for (a, (sa, ia, pa)) in maps.iter().enumerate() {
            total = total.add(&ia.mul(pa));
            let inter_i = sa
                .actions()
                .iter()
                .zip(m.actions())
                .all(|(s, t)| ia.mul(s) == t.mul(ia));
            let inter_p = sa
                .actions()
                .iter()
                .zip(m.actions())
                .all(|(s, t)| pa.mul(t) == s.mul(pa));
            if !inter_i || !inter_p {
                return false;
            }
            for (b, (sb, ib, _)) in maps.iter().enumerate() {
                let prod = pa.mul(ib);
                let ok = if a == b {
                    prod.is_identity()
                } else {
                    prod.is_zero() && prod.rows() == sa.dim() && prod.cols() == sb.dim()
                };
                if !ok {
                    return false;
                }
            }
        }
        total.is_identity()
    }
}

fn layer_key(m: &Module) -> Vec<Vec<usize>> {
    radical_layers(m).unwrap_or_else(|_| vec![m.dimension_vector()])
}

pub fn decompose(m: &Module) -> Result<Decomposition> {
    let pieces = indecomposable_pieces(m)?;
    let mut summands: Vec<(usize, Summand)> = Vec::new();
    for (order, pc) in pieces.into_iter().enumerate() {
        let mut placed = false;
        for (_, s) in summands.iter_mut() {
            if let Some(f) = indecomposable_isomorphism(&s.module, &pc.module)? {
                // copy ≅ representative via f: inject through f, project through f⁻¹
                let finv = f
                    .inverse()
                    .ok_or_else(|| Error::Internal("isomorphism is not invertible".into()))?;
                s.injections.push(pc.inj.mul(&f));
                s.projections.push(finv.mul(&pc.proj));
                s.multiplicity += 1;
                placed = true;
                break;
            }
        }
        if !placed {
            let layers = layer_key(&pc.module);
            summands.push((
                order,
                Summand {
                    module: pc.module,
                    multiplicity: 1,
                    injections: vec![pc.inj],
                    projections: vec![pc.proj],
                    layers,
                },
            ));
        }
    }
    summands.sort_by(|(oa, a), (ob, b)| canonical_cmp(a, *oa, b, *ob));
    let d = Decomposition {
        module: m.clone(),
        summands: summands.into_iter().map(|(_, s)| s).collect(),
    };
    debug_assert!(d.verify(), "decomposition certificate failed");
    Ok(d)
}

fn canonical_cmp(a: &Summand, oa: usize, b: &Summand, ob: usize) -> Ordering {
    a.module
        .dim()
        .cmp(&b.module.dim())
        .then_with(|| a.layers.cmp(&b.layers))
        .then(oa.cmp(&ob))
}

/// Whether two modules are isomorphic: dimension data first, then matching
/// of indecomposable summands with multiplicities.
pub fn is_isomorphic(x: &Module, y: &Module) -> Result<bool> {
    x.check_same_category(y)?;
    if x.dim() != y.dim() || x.dimension_vector() != y.dimension_vector() {
        return Ok(false);
    }
    let dx = decompose(x)?;
    let dy = decompose(y)?;
    if dx.summands.len() != dy.summands.len() {
        return Ok(false);
    }
    let mut used = vec![false; dy.summands.len()];
    for s in &dx.summands {
        let mut found = false;
        for (k, t) in dy.summands.iter().enumerate() {
            if used[k] || t.multiplicity != s.multiplicity {
                continue;
            }
            if indecomposable_isomorphism(&s.module, &t.module)?.is_some() {
                used[k] = true;
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Representatives of the isomorphism classes of indecomposable summands.
pub fn indecomposable_types(m: &Module) -> Result<Vec<Module>> {
    Ok(decompose(m)?
        .summands
        .into_iter()
        .map(|s| s.module)
        .collect())
}

fn contained_in(xs: &[Module], ms: &[Module]) -> Result<bool> {
    for x in xs {
        let mut hit = false;
        for m in ms {
            if indecomposable_isomorphism(x, m)?.is_some() {
                hit = true;
                break;
            }
        }
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `X ∈ add M`: every indecomposable summand of `X` is a summand of `M`.
pub fn add_membership(x: &Module, m: &Module) -> Result<bool> {
    x.check_same_category(m)?;
    contained_in(&indecomposable_types(x)?, &indecomposable_types(m)?)
}

/// `add M = add N`.
pub fn add_equal(m: &Module, n: &Module) -> Result<bool> {
    m.check_same_category(n)?;
    let tm = indecomposable_types(m)?;
    let tn = indecomposable_types(n)?;
    Ok(contained_in(&tm, &tn)? && contained_in(&tn, &tm)?)
}
