//! Krull-Schmidt decomposition with certified splitting maps, and
//! isomorphism tests between modules.

use std::sync::Arc;

use moritakit::exactlin::Field;
use moritakit::fixtures;
use moritakit::krullschmidt::{decompose, is_isomorphic};
use moritakit::modules::module_from_spec;

fn main() -> moritakit::Result<()> {
    let a = Arc::new(fixtures::ex14(Field::Rationals)?);
    let m = module_from_spec(&a, "D(regular)+P2^2")?;
    let d = decompose(&m)?;
    println!("{} indecomposable summands", d.num_indecomposables());
    for s in &d.summands {
        println!(
            "  multiplicity {}: dim {}, dimension vector {:?}, radical layers {:?}",
            s.multiplicity,
            s.module.dim(),
            s.module.dimension_vector(),
            s.layers
        );
    }
    println!("splitting maps verified: {}", d.verify());

    let i1 = module_from_spec(&a, "I1")?;
    let s1 = module_from_spec(&a, "S1")?;
    let p1 = module_from_spec(&a, "P1")?;
    println!("I1 ~ S1: {}", is_isomorphic(&i1, &s1)?);
    println!("I1 ~ P1: {}", is_isomorphic(&i1, &p1)?);
    Ok(())
}
