//! Modules from textual specs, Hom spaces and the vector space dual.

use std::sync::Arc;

use moritakit::exactlin::Field;
use moritakit::fixtures;
use moritakit::krullschmidt::lift_end_algebra;
use moritakit::modules::{end_algebra, hom_space, module_from_spec};

fn main() -> moritakit::Result<()> {
    let a = Arc::new(fixtures::ex14(Field::Rationals)?);
    for spec in [
        "P1",
        "P2",
        "P3",
        "I1",
        "S2",
        "regular",
        "D(regular)",
        "P2^2+S3",
    ] {
        let m = module_from_spec(&a, spec)?;
        println!(
            "{spec:>10}: dim {}, dimension vector {:?}",
            m.dim(),
            m.dimension_vector()
        );
    }
    let p1 = module_from_spec(&a, "P1")?;
    let p2 = module_from_spec(&a, "P2")?;
    println!("dim Hom(P1, P2) = {}", hom_space(&p1, &p2)?.dim());
    println!("dim Hom(P2, P1) = {}", hom_space(&p2, &p1)?.dim());
    let dual = hom_space(&p1.dual(), &p2.dual())?;
    println!("dim Hom(D P1, D P2) = {}", dual.dim());
    let e = lift_end_algebra(&end_algebra(&module_from_spec(&a, "P1+P2")?)?)?;
    println!("End(P1+P2): {}", e.algebra.describe());
    Ok(())
}
