//! Textual module descriptions such as `P1+P2`, `I3`, `S(2)^2`, `regular`
//! and `D(regular)`, all as left modules.

use std::sync::Arc;

use super::build::{
    direct_sum, injective_indecomposable, projective_indecomposable, regular_module, simple_module,
};
use super::module::{Module, Side};
use crate::algebra::Algebra;
use crate::error::{Error, Result};

/// One summand of a module description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecTerm {
    Projective(usize),
    Injective(usize),
    Simple(usize),
    Regular,
    DualRegular,
}

/// A parsed description: summands with multiplicities, in input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSpec {
    pub terms: Vec<(SpecTerm, usize)>,
}

impl ModuleSpec {
    pub fn parse(a: &Algebra, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::ModuleSpec("empty module description".into()));
        }
        let terms = text
            .split('+')
            .map(|t| parse_term(a, t.trim()))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleSpec { terms })
    }

    pub fn build(&self, a: &Arc<Algebra>) -> Result<Module> {
        let mut pieces = Vec::new();
        for (term, mult) in &self.terms {
            let m = match *term {
                SpecTerm::Projective(v) => projective_indecomposable(a, v, Side::Left)?,
                SpecTerm::Injective(v) => injective_indecomposable(a, v, Side::Left)?,
                SpecTerm::Simple(v) => simple_module(a, v, Side::Left)?,
                SpecTerm::Regular => regular_module(a, Side::Left),
                SpecTerm::DualRegular => regular_module(a, Side::Right).dual(),
            };
            pieces.extend(std::iter::repeat_n(m, *mult));
        }
        if pieces.len() == 1 {
            return Ok(pieces.pop().unwrap());
        }
        Ok(direct_sum(a, Side::Left, &pieces)?.module)
    }
}

/// Parse and build in one step.
pub fn module_from_spec(a: &Arc<Algebra>, text: &str) -> Result<Module> {
    ModuleSpec::parse(a, text)?.build(a)
}

fn parse_term(a: &Algebra, t: &str) -> Result<(SpecTerm, usize)> {
    let (body, mult) = match t.rsplit_once('^') {
        Some((body, exp)) => {
            let n: usize = exp
                .trim()
                .parse()
                .map_err(|_| Error::ModuleSpec(format!("bad multiplicity in {t:?}")))?;
            if n == 0 {
                return Err(Error::ModuleSpec(format!("zero multiplicity in {t:?}")));
            }
            (body.trim(), n)
        }
        None => (t, 1),
    };
    let term = match body {
        "" => return Err(Error::ModuleSpec("empty summand".into())),
        "regular" | "A" => SpecTerm::Regular,
        "D(regular)" | "DA" | "D(A)" => SpecTerm::DualRegular,
        _ => {
            let mut chars = body.chars();
            let kind = chars.next().unwrap();
            let rest = chars.as_str();
            let label = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .unwrap_or(rest)
                .trim();
            let v = a.vertex_index(label).ok_or_else(|| {
                Error::ModuleSpec(format!("unknown vertex {label:?} in {body:?}"))
            })?;
            match kind {
                'P' => SpecTerm::Projective(v),
                'I' => SpecTerm::Injective(v),
                'S' => SpecTerm::Simple(v),
                _ => {
                    return Err(Error::ModuleSpec(format!(
                        "unknown summand {body:?}; expected P, I, S, regular or D(regular)"
                    )))
                }
            }
        }
    };
    Ok((term, mult))
}
