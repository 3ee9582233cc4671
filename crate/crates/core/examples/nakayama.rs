//! The Nakayama functor and its inverse on projective and injective modules.

use std::sync::Arc;

use moritakit::exactlin::Field;
use moritakit::fixtures;
use moritakit::krullschmidt::is_isomorphic;
use moritakit::modules::module_from_spec;
use moritakit::morita::{inverse_nakayama, nakayama};

fn main() -> moritakit::Result<()> {
    let a = Arc::new(fixtures::ex14(Field::Rationals)?);
    for v in ["1", "2", "3"] {
        let p = module_from_spec(&a, &format!("P{v}"))?;
        let i = module_from_spec(&a, &format!("I{v}"))?;
        let np = nakayama(&p)?;
        let back = inverse_nakayama(&np)?;
        println!(
            "nu(P{v}) ~ I{v}: {}; nu^-1(nu(P{v})) ~ P{v}: {}",
            is_isomorphic(&np, &i)?,
            is_isomorphic(&back, &p)?
        );
    }
    let m = inverse_nakayama(&module_from_spec(&a, "P1+P2")?)?;
    println!(
        "nu^-1(P1+P2): dim {}, dimension vector {:?}",
        m.dim(),
        m.dimension_vector()
    );
    Ok(())
}
