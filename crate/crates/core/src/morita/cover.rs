use std::sync::Arc;

use super::functors::{left_part, matrix_rank, SchurFunctor};
use crate::algebra::{corner_algebra, Algebra, Idempotent};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};
use crate::homological::{is_projective, top_multiplicities};
use crate::krullschmidt::ensure_split;
use crate::modules::{
    direct_sum, hom_space, intertwiners, projective_indecomposable, Bimodule, HomBimodule, Module,
    Side,
};

/// Which of the equivalent cover criteria to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CoverMode {
    /// Only the canonical algebra map, on the multiplicity-free reduction.
    Fast,
    /// All three criteria, on the module as given and on its reduction.
    #[default]
    Verify,
}

/// Why the fully-faithful criterion failed for a pair of projectives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailingPair {
    pub source: usize,
    pub target: usize,
    pub faithful: bool,
    pub full: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoverCertificate {
    pub dim_a: usize,
    pub dim_b: usize,
    pub dim_fa: usize,
    pub dim_end_fa: usize,
    pub rank_canonical: usize,
    /// Vertices `i` with `η` not bijective on `A e_i`.
    pub unit_failures: Vec<usize>,
    pub failing_pair: Option<FailingPair>,
    /// The idempotent whose projective has the same additive closure.
    pub reduced_to: Option<Idempotent>,
}

/// Outcome of the cover test. `methods` holds the verdicts of the canonical
/// map, the unit and the fully-faithful criteria, `None` where not run.
#[derive(Clone, Debug)]
pub struct CoverVerdict {
    pub holds: bool,
    pub methods: [Option<bool>; 3],
    pub certificate: CoverCertificate,
}

/// The two multiplication maps of an `(A, B)`-bimodule: `A → End_B(M)` and
/// `B → End_A(M)^op`, each with rank and target dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerMaps {
    pub left_rank: usize,
    pub end_right_dim: usize,
    pub right_rank: usize,
    pub end_left_dim: usize,
}

impl CentralizerMaps {
    /// `A ≅ End_B(M)`.
    pub fn left_iso(&self, dim_a: usize) -> bool {
        self.left_rank == dim_a && self.end_right_dim == dim_a
    }

    /// `B ≅ End_A(M)^op`.
    pub fn right_iso(&self, dim_b: usize) -> bool {
        self.right_rank == dim_b && self.end_left_dim == dim_b
    }
}

pub fn centralizer_maps(m: &Bimodule) -> CentralizerMaps {
    let (a, b) = (m.left_algebra(), m.right_algebra());
    let field = m.field();
    let end_right = intertwiners(
        b,
        Side::Right,
        (m.right_actions(), m.right_weights()),
        (m.right_actions(), m.right_weights()),
    );
    let end_left = intertwiners(
        a,
        Side::Left,
        (m.left_actions(), m.left_weights()),
        (m.left_actions(), m.left_weights()),
    );
    CentralizerMaps {
        left_rank: matrix_rank(field, m.left_actions()),
        end_right_dim: end_right.dim(),
        right_rank: matrix_rank(field, m.right_actions()),
        end_left_dim: end_left.dim(),
    }
}

/// Whether both multiplication maps of the bimodule are isomorphisms.
pub fn double_centralizer_check(m: &Bimodule) -> bool {
    let maps = centralizer_maps(m);
    maps.left_iso(m.left_algebra().dim()) && maps.right_iso(m.right_algebra().dim())
}

/// `Ae` as an `(A, eAe)`-bimodule and `eA` as an `(eAe, A)`-bimodule.
pub fn corner_bimodules(a: &Arc<Algebra>, e: &Idempotent) -> Result<(Bimodule, Bimodule)> {
    let corner = corner_algebra(a, e)?;
    let ae: Vec<usize> = (0..a.dim())
        .filter(|&k| e.contains(a.peirce(k).1))
        .collect();
    let ea: Vec<usize> = (0..a.dim())
        .filter(|&k| e.contains(a.peirce(k).0))
        .collect();
    let on = |keep: &[usize], m: Matrix| m.select(keep, keep);
    let ae_left = (0..a.dim())
        .map(|b| on(&ae, a.left_mult_basis(b)))
        .collect();
    let ae_right = corner
        .inclusion
        .iter()
        .map(|&b| on(&ae, a.right_mult_basis(b)))
        .collect();
    let ea_left = corner
        .inclusion
        .iter()
        .map(|&b| on(&ea, a.left_mult_basis(b)))
        .collect();
    let ea_right = (0..a.dim())
        .map(|b| on(&ea, a.right_mult_basis(b)))
        .collect();
    Ok((
        Bimodule::from_actions(a.clone(), corner.algebra.clone(), ae_left, ae_right)?,
        Bimodule::from_actions(corner.algebra.clone(), a.clone(), ea_left, ea_right)?,
    ))
}

/// `⊕_{i ∈ e} A e_i`.
pub fn idempotent_projective(a: &Arc<Algebra>, e: &Idempotent) -> Result<Module> {
    let pieces = e
        .vertices()
        .iter()
        .map(|&i| projective_indecomposable(a, i, Side::Left))
        .collect::<Result<Vec<_>>>()?;
    Ok(direct_sum(a, Side::Left, &pieces)?.module)
}

/// An idempotent `e` with `add(Ae) = add(P)`: one vertex per isomorphism
/// class of indecomposable summands of `P`. A projective module is the sum
/// of the projective covers of its top, so the classes are read off the top.
pub fn reduce_cover_to_idempotent(p: &Module) -> Result<Idempotent> {
    let a = p.algebra();
    ensure_split(a)?;
    if p.side() != Side::Left || !is_projective(p)? {
        return Err(Error::NotProjective(
            "cover reduction needs a projective left module".into(),
        ));
    }
    let top = top_multiplicities(p)?;
    let vertices = a
        .vertex_classes()?
        .iter()
        .map(|c| c[0])
        .filter(|&i| top[i] > 0)
        .collect();
    Ok(Idempotent::new(vertices))
}

/// Whether `(A, P)` is a cover of `End_A(P)^op`.
pub fn cover_check(p: &Module) -> Result<CoverVerdict> {
    cover_check_with(p, CoverMode::Verify)
}

pub fn cover_check_with(p: &Module, mode: CoverMode) -> Result<CoverVerdict> {
    let a = p.algebra().clone();
    let e = reduce_cover_to_idempotent(p)?;
    let reduced = idempotent_projective(&a, &e)?;
    let collapsed = reduced.dim() != p.dim();
    let mut verdict = match mode {
        CoverMode::Fast => evaluate(&reduced, false)?,
        CoverMode::Verify => {
            let direct = evaluate(p, true)?;
            if collapsed {
                let other = evaluate(&reduced, true)?;
                if other.holds != direct.holds {
                    return Err(Error::TheoremViolation(format!(
                        "cover property changes when collapsing to {}",
                        e.label(&a)
                    )));
                }
            }
            direct
        }
    };
    verdict.certificate.reduced_to = Some(e);
    Ok(verdict)
}

fn evaluate(p: &Module, all: bool) -> Result<CoverVerdict> {
    let a = p.algebra().clone();
    let field = a.field();
    let schur = SchurFunctor::new(p)?;
    let b = schur.target().clone();
    let fa = schur.apply_regular()?;
    let maps = centralizer_maps(&fa.module);
    let canonical = maps.right_iso(a.dim());
    let mut certificate = CoverCertificate {
        dim_a: a.dim(),
        dim_b: b.dim(),
        dim_fa: fa.module.dim(),
        dim_end_fa: maps.end_left_dim,
        rank_canonical: maps.right_rank,
        ..CoverCertificate::default()
    };
    if !all {
        return Ok(CoverVerdict {
            holds: canonical,
            methods: [Some(canonical), None, None],
            certificate,
        });
    }

    let n = a.num_idempotents();
    let projectives = (0..n)
        .map(|i| projective_indecomposable(&a, i, Side::Left))
        .collect::<Result<Vec<_>>>()?;
    let images = projectives
        .iter()
        .map(|q| schur.apply(q))
        .collect::<Result<Vec<_>>>()?;
    let fa_left = left_part(&fa.module)?;

    // unit η_M : M → Hom_B(FA, FM), m ↦ (f ↦ (p ↦ f(p)·m))
    for (i, (q, fq)) in projectives.iter().zip(&images).enumerate() {
        let fq_left = Module::from_bimodule(fq.module.clone(), Side::Left)?;
        let target_dim = hom_space(&fa_left, &fq_left)?.dim();
        let etas: Vec<Matrix> = (0..q.dim()).map(|r| unit_at(q, r, &fa, fq)).collect();
        let injective = matrix_rank(field, &etas) == q.dim();
        if !(injective && target_dim == q.dim()) {
            certificate.unit_failures.push(i);
        }
    }
    let unit = certificate.unit_failures.is_empty();

    // F : Hom_A(Ae_i, Ae_j) → Hom_B(F Ae_i, F Ae_j)
    let mut fully_faithful = true;
    'pairs: for i in 0..n {
        for j in 0..n {
            let homs = hom_space(&projectives[i], &projectives[j])?;
            let fi = Module::from_bimodule(images[i].module.clone(), Side::Left)?;
            let fj = Module::from_bimodule(images[j].module.clone(), Side::Left)?;
            let target_dim = hom_space(&fi, &fj)?.dim();
            let applied: Vec<Matrix> = homs
                .basis()
                .iter()
                .map(|phi| schur.apply_hom(phi, &images[i], &images[j]))
                .collect();
            let faithful = matrix_rank(field, &applied) == homs.dim();
            let full = target_dim == homs.dim();
            if !(faithful && full) {
                fully_faithful = false;
                certificate.failing_pair = Some(FailingPair {
                    source: i,
                    target: j,
                    faithful,
                    full,
                });
                break 'pairs;
            }
        }
    }

    if canonical != unit || unit != fully_faithful {
        return Err(Error::LemmaViolation(format!(
            "canonical map {canonical}, unit {unit}, fully faithful {fully_faithful}"
        )));
    }
    Ok(CoverVerdict {
        holds: canonical,
        methods: [Some(canonical), Some(unit), Some(fully_faithful)],
        certificate,
    })
}

/// `η(m_r)` as a matrix from the basis of `FA` to the basis of `FM`.
fn unit_at(m: &Module, r: usize, fa: &HomBimodule, fm: &HomBimodule) -> Matrix {
    let field = m.field();
    // column k is b_k · m_r, so `orbit * x` is `x · m_r`
    let orbit_cols: Vec<Vec<Scalar>> = m.actions().iter().map(|l| l.column(r)).collect();
    let orbit = Matrix::from_columns(field, m.dim(), &orbit_cols);
    let cols: Vec<Vec<Scalar>> = fa
        .space
        .basis
        .iter()
        .map(|f| fm.space.coordinates(&orbit.mul(f)))
        .collect();
    Matrix::from_columns(field, fm.space.dim(), &cols)
}

/// One row of the commutative cover table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutativeCover {
    pub idempotent: Idempotent,
    pub cover: bool,
    pub dims_equal: bool,
}

/// For a commutative algebra, tests `(A, Ae)` for every nonempty subset of
/// the idempotents; a cover forces `A ≅ eAe`, checked through dimensions.
pub fn commutative_cover_check(a: &Arc<Algebra>) -> Result<Vec<CommutativeCover>> {
    if !a.is_commutative() {
        return Err(Error::NotCommutative);
    }
    ensure_split(a)?;
    let n = a.num_idempotents();
    if n > 16 {
        return Err(Error::DimensionMismatch(format!(
            "{n} idempotents give too many subsets"
        )));
    }
    let mut rows = Vec::new();
    for mask in 1u32..(1 << n) {
        let e = Idempotent::new((0..n).filter(|&v| mask & (1 << v) != 0).collect());
        let ae = idempotent_projective(a, &e)?;
        let cover = cover_check(&ae)?.holds;
        let corner_dim = corner_algebra(a, &e)?.algebra.dim();
        let dims_equal = corner_dim == a.dim();
        if cover && !dims_equal {
            return Err(Error::TheoremViolation(format!(
                "{} gives a cover but dim eAe = {corner_dim} differs from dim A = {}",
                e.label(a),
                a.dim()
            )));
        }
        rows.push(CommutativeCover {
            idempotent: e,
            cover,
            dims_equal,
        });
    }
    Ok(rows)
}
