use std::collections::BTreeMap;
use std::sync::Arc;

use super::cover::cover_check;
use super::functors::nakayama;
use crate::algebra::{Algebra, Idempotent};
use crate::error::{Error, Result};
use crate::homological::{dominant_dimension, qf3_minimal_faithful, DomDim};
use crate::krullschmidt::{
    add_equal, add_membership, indecomposable_types, is_isomorphic, lift_end_algebra, split_form,
};
use crate::modules::{end_algebra, regular_module, Module, Side};

/// `add B = add DB` for left modules: quasi-Frobenius.
pub fn is_self_injective(b: &Arc<Algebra>) -> Result<bool> {
    let b = split_form(b)?;
    let (reg, dual) = regular_and_dual(&b);
    add_equal(&reg, &dual)
}

/// `B ≅ DB` as left modules.
pub fn is_frobenius_left(b: &Arc<Algebra>) -> Result<bool> {
    let b = split_form(b)?;
    let (reg, dual) = regular_and_dual(&b);
    is_isomorphic(&reg, &dual)
}

fn regular_and_dual(b: &Arc<Algebra>) -> (Module, Module) {
    (
        regular_module(b, Side::Left),
        regular_module(b, Side::Right).dual(),
    )
}

/// Labels of the condition table, in report order. `ii` is the verdict.
pub const CONDITIONS: [&str; 7] = ["i", "ii", "iii", "iv", "v", "a'", "b'"];

#[derive(Clone, Debug)]
pub struct MoritaVerdict {
    pub qf3: bool,
    pub domdim: DomDim,
    /// The minimal faithful projective-injective module and its idempotent,
    /// over the split form of the algebra.
    pub chosen_p: Option<Module>,
    pub idempotent: Option<Idempotent>,
    pub conditions: BTreeMap<&'static str, bool>,
    pub verdict: bool,
}

/// Whether `A` is a Morita algebra, with every equivalent condition evaluated
/// independently on the minimal faithful projective-injective module.
pub fn is_morita_algebra(a: &Arc<Algebra>, cap: usize) -> Result<MoritaVerdict> {
    let a = split_form(a)?;
    let domdim = dominant_dimension(&a, cap.max(2))?.value;
    let Some(mf) = qf3_minimal_faithful(&a)? else {
        return Ok(MoritaVerdict {
            qf3: false,
            domdim,
            chosen_p: None,
            idempotent: None,
            conditions: BTreeMap::new(),
            verdict: false,
        });
    };
    let p = mf.module.clone();
    let dd2 = domdim.at_least(2);

    let (cover, (self_inj, (nu_add, (nu_each, (right_each, right_add))))) = rayon::join(
        || cover_check(&p).map(|v| v.holds),
        || {
            rayon::join(
                || -> Result<bool> {
                    let b = lift_end_algebra(&end_algebra(&p)?)?;
                    is_self_injective(&b.algebra)
                },
                || {
                    rayon::join(
                        || add_equal(&nakayama(&p)?, &p),
                        || {
                            rayon::join(
                                || nakayama_preserves_each(&p),
                                || {
                                    // right modules over A are left modules over A^op
                                    let dp = p.dual().to_opposite();
                                    rayon::join(
                                        || nakayama_preserves_each(&dp),
                                        || add_equal(&nakayama(&dp)?, &dp),
                                    )
                                },
                            )
                        },
                    )
                },
            )
        },
    );
    let mut conditions = BTreeMap::new();
    conditions.insert("i", cover?);
    conditions.insert("iii", self_inj? && dd2);
    conditions.insert("iv", dd2 && nu_add?);
    conditions.insert("v", dd2 && nu_each?);
    conditions.insert("a'", dd2 && right_each?);
    conditions.insert("b'", dd2 && right_add?);
    let verdict = conditions["i"];
    if conditions.values().any(|&c| c != verdict) {
        return Err(Error::TheoremViolation(format!("{conditions:?}")));
    }
    conditions.insert("ii", verdict);
    Ok(MoritaVerdict {
        qf3: true,
        domdim,
        chosen_p: Some(p),
        idempotent: Some(mf.idempotent),
        conditions,
        verdict,
    })
}

/// `ν X ∈ add P` for every indecomposable summand `X` of `P`.
fn nakayama_preserves_each(p: &Module) -> Result<bool> {
    for x in indecomposable_types(p)? {
        if !add_membership(&nakayama(&x)?, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}
