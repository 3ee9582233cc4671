//! Build a bound quiver algebra from a JSON presentation and inspect its
//! path basis, idempotents and radical.

use moritakit::algebra::{build_algebra, QuiverPresentation};

const PRESENTATION: &str = r#"{
  "field": {"kind": "rationals"},
  "vertices": ["1", "2", "3"],
  "arrows": [
    {"name": "a1", "from": "1", "to": "2"},
    {"name": "a2", "from": "2", "to": "3"},
    {"name": "b1", "from": "2", "to": "1"}
  ],
  "relations": [
    [{"coeff": "1", "path": ["a1", "b1"]}],
    [{"coeff": "1", "path": ["b1", "a1"]}],
    [{"coeff": "1", "path": ["a2", "a1"]}]
  ],
  "nilpotency_cap": 4
}"#;

fn main() -> moritakit::Result<()> {
    let p = QuiverPresentation::from_json_str(PRESENTATION)?;
    let a = build_algebra(&p)?;
    println!("{}", a.describe());
    println!("basis: {}", a.basis_labels().join(", "));
    println!("radical dimension: {}", a.radical()?.dim());
    let v = a.vertex_labels();
    for (k, b) in a.basis_labels().iter().enumerate() {
        let (j, i) = a.peirce(k);
        println!("  {b} lies in e{} A e{}", v[j], v[i]);
    }
    println!("commutative: {}", a.is_commutative());
    let op = std::sync::Arc::new(a).opposite();
    println!("opposite: {}", op.describe());
    Ok(())
}
