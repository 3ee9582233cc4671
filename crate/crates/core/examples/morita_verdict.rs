//! The Morita algebra condition table for each built-in algebra.

use std::sync::Arc;

use moritakit::algebra::build_algebra;
use moritakit::exactlin::Field;
use moritakit::fixtures;
use moritakit::morita::{is_morita_algebra, CONDITIONS};

fn main() -> moritakit::Result<()> {
    println!(
        "{:>13}  verdict  domdim  {}",
        "algebra",
        CONDITIONS.join(" ")
    );
    for name in fixtures::NAMES {
        let a = Arc::new(build_algebra(
            &fixtures::named(name, Field::Rationals).unwrap(),
        )?);
        let v = is_morita_algebra(&a, 6)?;
        let row: Vec<&str> = CONDITIONS
            .iter()
            .map(|c| match v.conditions.get(c) {
                Some(true) => "T",
                Some(false) => "F",
                None => "-",
            })
            .collect();
        println!(
            "{name:>13}  {:>7}  {:>6}  {}",
            v.verdict,
            v.domdim.to_string(),
            row.join(" ")
        );
    }
    Ok(())
}
