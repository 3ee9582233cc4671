//! Decide whether End_A(P)^op is covered by A through P, with all three
//! equivalent criteria and their certificates.

use std::sync::Arc;

use moritakit::exactlin::Field;
use moritakit::fixtures;
use moritakit::modules::module_from_spec;
use moritakit::morita::{cover_check, cover_check_with, CoverMode};

fn main() -> moritakit::Result<()> {
    let a = Arc::new(fixtures::ex14(Field::Rationals)?);
    for spec in ["P1+P2", "P2+P3", "P1+P2^2+P3", "P3"] {
        let p = module_from_spec(&a, spec)?;
        let v = cover_check(&p)?;
        let c = &v.certificate;
        println!(
            "{spec:>11}: cover {} methods {:?}; dim B {}, dim Hom(P, A) {}, rank {} of {}",
            v.holds, v.methods, c.dim_b, c.dim_fa, c.rank_canonical, c.dim_a
        );
        if let Some(pair) = &c.failing_pair {
            println!("             fully faithful fails on {pair:?}");
        }
    }
    let fast = cover_check_with(&module_from_spec(&a, "P2+P3")?, CoverMode::Fast)?;
    println!("fast mode: cover {} methods {:?}", fast.holds, fast.methods);
    Ok(())
}
