//! Minimal injective resolutions and the dominant dimension of the built-in
//! algebras.

use std::sync::Arc;

use moritakit::algebra::build_algebra;
use moritakit::exactlin::Field;
use moritakit::fixtures;
use moritakit::homological::{
    dominant_dimension, minimal_injective_resolution, qf3_minimal_faithful,
    right_dominant_dimension,
};
use moritakit::modules::{regular_module, Side};

fn main() -> moritakit::Result<()> {
    let a = Arc::new(fixtures::ex14(Field::Rationals)?);
    let res = minimal_injective_resolution(&regular_module(&a, Side::Left), 4)?;
    for (i, m) in res.multiplicities.iter().enumerate() {
        println!(
            "I{i}: injective multiplicities {m:?} (dim {})",
            res.terms[i].dim()
        );
    }
    println!("resolution exact: {}", res.is_exact());

    for name in fixtures::NAMES {
        let a = Arc::new(build_algebra(
            &fixtures::named(name, Field::Rationals).unwrap(),
        )?);
        let left = dominant_dimension(&a, 6)?.value;
        let right = right_dominant_dimension(&a, 6)?.value;
        let qf3 = qf3_minimal_faithful(&a)?.is_some();
        println!("{name:>13}: domdim {left} (right {right}), QF-3 {qf3}");
    }
    Ok(())
}
