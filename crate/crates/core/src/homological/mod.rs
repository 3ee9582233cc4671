//! Radicals and socles, projective covers, injective envelopes, minimal
//! injective resolutions and dominant dimension.
//!
//! Everything here needs split primitive idempotents; algebras without them
//! are passed through [`split_form`] where an algebra is the input, and
//! rejected with `NotSplit` where a module is.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Idempotent};
use crate::error::{Error, Result};
use crate::exactlin::{Echelon, Matrix, Scalar, Subspace};
use crate::krullschmidt::{ensure_split, split_form};
use crate::modules::{
    direct_sum, injective_indecomposable, is_faithful, projective_indecomposable, quotient,
    regular_module, Module, ModuleHom, Side,
};

pub use crate::modules::radical_submodule;

#[cfg(test)]
mod tests;

/// `soc M`, the vectors killed by the radical.
pub fn socle_submodule(m: &Module) -> Result<Subspace> {
    let j = m.algebra().radical()?;
    let field = m.field();
    if j.is_zero() || m.dim() == 0 {
        return Ok(Subspace::full(field, m.dim()));
    }
    let stacked = j
        .vectors()
        .iter()
        .map(|r| m.act(r))
        .reduce(|acc, x| acc.vstack(&x))
        .expect("radical is nonzero");
    Ok(stacked.kernel())
}

/// Dimension of `e_i S` for a submodule `S` given in echelon form. Echelon
/// bases of submodules are weight homogeneous, so pivots are counted.
fn weight_counts(m: &Module, s: &Subspace) -> Vec<usize> {
    let mut counts = vec![0; m.algebra().num_idempotents()];
    for &p in s.pivots() {
        counts[m.weights()[p]] += 1;
    }
    counts
}

/// `dim e_i (M / rad M)` for every vertex `i`.
pub fn top_multiplicities(m: &Module) -> Result<Vec<usize>> {
    let rad = radical_submodule(m)?;
    let total = m.dimension_vector();
    Ok(total
        .iter()
        .zip(weight_counts(m, &rad))
        .map(|(t, r)| t - r)
        .collect())
}

/// `dim e_i soc M` for every vertex `i`.
pub fn socle_multiplicities(m: &Module) -> Result<Vec<usize>> {
    let soc = socle_submodule(m)?;
    Ok(weight_counts(m, &soc))
}

fn class_representatives(a: &Algebra) -> Result<Vec<usize>> {
    Ok(a.vertex_classes()?.iter().map(|c| c[0]).collect())
}

/// A projective cover `P → M` or an injective envelope `M → E`, with the
/// number of copies of each indecomposable, indexed by vertex.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub module: Module,
    pub map: ModuleHom,
    pub multiplicities: Vec<usize>,
}

/// `⊕ P(i)^{m_i} → M`, sending the generator of each copy of `P(i)` to a
/// weight-`i` vector lifting a basis of the top.
pub fn projective_cover(m: &Module) -> Result<Approximation> {
    let a = m.algebra();
    ensure_split(a)?;
    let side = m.side();
    let rad = radical_submodule(m)?;
    let mut span = Echelon::new(m.field(), m.dim());
    for v in rad.vectors() {
        span.insert_dense(&v);
    }
    let mut pieces = Vec::new();
    let mut cols: Vec<Vec<Scalar>> = Vec::new();
    let mut multiplicities = vec![0; a.num_idempotents()];
    for i in class_representatives(a)? {
        let keep: Vec<usize> = (0..a.dim())
            .filter(|&k| {
                let (t, s) = a.peirce(k);
                match side {
                    Side::Left => s == i,
                    Side::Right => t == i,
                }
            })
            .collect();
        for x in m.weight_space(i) {
            let mut e = vec![m.field().zero(); m.dim()];
            e[x] = m.field().one();
            if !span.insert_dense(&e) {
                continue;
            }
            multiplicities[i] += 1;
            pieces.push(projective_indecomposable(a, i, side)?);
            cols.extend(keep.iter().map(|&b| m.action(b).column(x)));
        }
    }
    let cover = direct_sum(a, side, &pieces)?.module;
    let map = ModuleHom::new_unchecked(
        cover.clone(),
        m.clone(),
        Matrix::from_columns(m.field(), m.dim(), &cols),
    );
    debug_assert!(map.intertwines());
    if !map.is_surjective() {
        return Err(Error::Internal("projective cover is not surjective".into()));
    }
    Ok(Approximation {
        module: cover,
        map,
        multiplicities,
    })
}

/// `M → ⊕ I(i)^{s_i}`, the dual of the projective cover of `DM`.
pub fn injective_envelope(m: &Module) -> Result<Approximation> {
    let cover = projective_cover(&m.dual())?;
    let module = cover.module.dual();
    let map = ModuleHom::new_unchecked(m.clone(), module.clone(), cover.map.matrix.transpose());
    debug_assert!(map.intertwines());
    if !map.is_injective() {
        return Err(Error::Internal(
            "injective envelope is not injective".into(),
        ));
    }
    Ok(Approximation {
        module,
        map,
        multiplicities: cover.multiplicities,
    })
}

/// Compares `dim M` with the dimension of its projective cover, which is
/// read off the top without building the cover.
pub fn is_projective(m: &Module) -> Result<bool> {
    let a = m.algebra();
    ensure_split(a)?;
    let top = top_multiplicities(m)?;
    let mut cover = 0;
    for i in class_representatives(a)? {
        if top[i] > 0 {
            cover += top[i] * projective_dim(a, i, m.side());
        }
    }
    Ok(cover == m.dim())
}

fn projective_dim(a: &Algebra, i: usize, side: Side) -> usize {
    (0..a.dim())
        .filter(|&k| {
            let (t, s) = a.peirce(k);
            match side {
                Side::Left => s == i,
                Side::Right => t == i,
            }
        })
        .count()
}

pub fn is_injective(m: &Module) -> Result<bool> {
    is_projective(&m.dual())
}

/// `0 → M → I_0 → I_1 → ⋯`. `maps[0]` is `M → I_0` and `maps[t]` is
/// `I_{t-1} → I_t`. `complete` is set when the last cokernel vanished, so the
/// resolution stops at the last term.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub base: Module,
    pub terms: Vec<Module>,
    pub maps: Vec<ModuleHom>,
    pub multiplicities: Vec<Vec<usize>>,
    pub minimal: bool,
    pub complete: bool,
}

impl Resolution {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exactness at `M` and at every term but the last, which is exact only
    /// for complete resolutions.
    pub fn is_exact(&self) -> bool {
        if self.maps.is_empty() {
            return self.base.dim() == 0 && self.complete;
        }
        if !self.maps[0].is_injective() {
            return false;
        }
        for t in 1..self.maps.len() {
            let image = self.maps[t - 1].image();
            let kernel = self.maps[t].kernel();
            if image != kernel {
                return false;
            }
        }
        !self.complete || self.maps.last().unwrap().rank() == self.terms.last().unwrap().dim()
    }

    /// `Σ (−1)^t dim I_t`, equal to `dim M` for complete resolutions.
    pub fn euler_characteristic(&self) -> i64 {
        self.terms
            .iter()
            .enumerate()
            .map(|(t, m)| {
                if t % 2 == 0 {
                    m.dim() as i64
                } else {
                    -(m.dim() as i64)
                }
            })
            .sum()
    }
}

/// At most `cap` terms of the minimal injective resolution; `stop` is asked
/// after each term whether to continue.
/// `stop` sees the socle multiplicities of the next cokernel, which are the
/// multiplicities of the next term, before that term is built.
fn resolve(
    m: &Module,
    cap: usize,
    mut stop: impl FnMut(&[usize]) -> Result<bool>,
) -> Result<Resolution> {
    let mut res = Resolution {
        base: m.clone(),
        terms: Vec::new(),
        maps: Vec::new(),
        multiplicities: Vec::new(),
        minimal: true,
        complete: false,
    };
    // the current cokernel and the projection onto it from the last term
    let mut coker = m.clone();
    let mut proj: Option<ModuleHom> = None;
    loop {
        if coker.dim() == 0 && (proj.is_some() || m.dim() == 0) {
            res.complete = true;
            break;
        }
        if res.terms.len() >= cap || stop(&socle_multiplicities(&coker)?)? {
            break;
        }
        let env = injective_envelope(&coker)?;
        let map = match &proj {
            Some(p) => env.map.compose(p)?,
            None => env.map,
        };
        if let Some(prev) = res.maps.last() {
            if prev.image() != map.kernel() {
                return Err(Error::Internal("resolution is not exact".into()));
            }
        }
        let image = map.image();
        let (c, p) = quotient(&env.module, &image)?;
        res.terms.push(env.module.clone());
        res.maps.push(map);
        res.multiplicities.push(env.multiplicities);
        coker = c;
        proj = Some(p);
    }
    Ok(res)
}

pub fn minimal_injective_resolution(m: &Module, cap: usize) -> Result<Resolution> {
    resolve(m, cap, |_| Ok(false))
}

/// Dominant dimension, exact or bounded below by the cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum DomDim {
    Exact(usize),
    AtLeast(usize),
}

impl DomDim {
    /// Whether the dominant dimension is at least `n`.
    pub fn at_least(self, n: usize) -> bool {
        match self {
            DomDim::Exact(v) => v >= n,
            DomDim::AtLeast(v) => v >= n,
        }
    }

    /// Decided comparison against `n`: `None` when the cap hides the answer.
    pub fn decides_at_least(self, n: usize) -> Option<bool> {
        match self {
            DomDim::Exact(v) => Some(v >= n),
            DomDim::AtLeast(v) if v >= n => Some(true),
            DomDim::AtLeast(_) => None,
        }
    }
}

impl fmt::Display for DomDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomDim::Exact(v) => write!(f, "{v}"),
            DomDim::AtLeast(v) => write!(f, ">={v}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct DomdimResult {
    pub value: DomDim,
    pub witness: Resolution,
    pub first_nonprojective: Option<usize>,
}

pub const DEFAULT_DOMDIM_CAP: usize = 10;

/// Dominant dimension of a module: the number of leading projective terms in
/// its minimal injective resolution. The witness holds those terms only; the
/// first non-projective term is never built.
pub fn module_dominant_dimension(m: &Module, cap: usize) -> Result<DomdimResult> {
    let a = m.algebra();
    let mut proj_inj: Vec<Option<bool>> = vec![None; a.num_idempotents()];
    let mut first = None;
    let mut index = 0;
    let witness = resolve(m, cap, |mult| {
        for (i, &k) in mult.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let pi = match proj_inj[i] {
                Some(b) => b,
                None => {
                    let b = is_projective(&injective_indecomposable(a, i, m.side())?)?;
                    proj_inj[i] = Some(b);
                    b
                }
            };
            if !pi {
                first = Some(index);
                return Ok(true);
            }
        }
        index += 1;
        Ok(false)
    })?;
    let value = match first {
        Some(n) => DomDim::Exact(n),
        None => DomDim::AtLeast(cap),
    };
    Ok(DomdimResult {
        value,
        witness,
        first_nonprojective: first,
    })
}

/// Dominant dimension of the left regular module.
pub fn dominant_dimension(a: &Arc<Algebra>, cap: usize) -> Result<DomdimResult> {
    let a = split_form(a)?;
    module_dominant_dimension(&regular_module(&a, Side::Left), cap)
}

/// Dominant dimension of the right regular module, computed as a left module
/// over the opposite algebra.
pub fn right_dominant_dimension(a: &Arc<Algebra>, cap: usize) -> Result<DomdimResult> {
    dominant_dimension(&a.opposite(), cap)
}

/// The projective-injective minimal faithful module `Ae` of a QF-3 algebra.
#[derive(Clone, Debug)]
pub struct MinimalFaithful {
    pub module: Module,
    pub idempotent: Idempotent,
}

/// Sum of one copy of each projective-injective indecomposable, returned when
/// it is faithful. The module lives over [`split_form`] of `a`.
pub fn qf3_minimal_faithful(a: &Arc<Algebra>) -> Result<Option<MinimalFaithful>> {
    let a = split_form(a)?;
    let mut vertices = Vec::new();
    let mut pieces = Vec::new();
    for i in class_representatives(&a)? {
        let p = projective_indecomposable(&a, i, Side::Left)?;
        if is_injective(&p)? {
            vertices.push(i);
            pieces.push(p);
        }
    }
    let module = direct_sum(&a, Side::Left, &pieces)?.module;
    if !is_faithful(&module) {
        return Ok(None);
    }
    Ok(Some(MinimalFaithful {
        module,
        idempotent: Idempotent::new(vertices),
    }))
}
