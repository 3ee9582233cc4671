//! Small named algebras used by the examples, tests and command line.

use crate::algebra::{build_algebra, Algebra, QuiverPresentation};
use crate::error::Result;
use crate::exactlin::Field;

/// `1 → 2 → 3` with the composite of the two arrows set to zero.
pub fn ex14_presentation(field: Field) -> QuiverPresentation {
    QuiverPresentation::new(field, &["1", "2", "3"], 3)
        .arrow("a1", "1", "2")
        .arrow("a2", "2", "3")
        .zero_relation(&["a2", "a1"])
}

/// Arrows `al: 1 → 2`, `be: 2 → 1`, `ga: 2 → 3`, `th: 3 → 2` with
/// `ga al = be th = al be = ga th = 0`.
pub fn ex15_presentation(field: Field) -> QuiverPresentation {
    QuiverPresentation::new(field, &["1", "2", "3"], 4)
        .arrow("al", "1", "2")
        .arrow("be", "2", "1")
        .arrow("ga", "2", "3")
        .arrow("th", "3", "2")
        .zero_relation(&["ga", "al"])
        .zero_relation(&["be", "th"])
        .zero_relation(&["al", "be"])
        .zero_relation(&["ga", "th"])
}

/// `k[x]/(x^n)`.
pub fn truncated_polynomial(field: Field, n: usize) -> QuiverPresentation {
    let path: Vec<&str> = vec!["x"; n];
    QuiverPresentation::new(field, &["1"], n)
        .arrow("x", "1", "1")
        .zero_relation(&path)
}

/// `k × k`.
pub fn two_points(field: Field) -> QuiverPresentation {
    QuiverPresentation::new(field, &["1", "2"], 2)
}

/// `k × k[x]/(x^2)`.
pub fn point_and_dual_numbers(field: Field) -> QuiverPresentation {
    QuiverPresentation::new(field, &["1", "2"], 2)
        .arrow("x", "2", "2")
        .zero_relation(&["x", "x"])
}

/// Linearly oriented `A_n` with all compositions of two arrows zero.
pub fn radical_square_zero_line(field: Field, n: usize) -> QuiverPresentation {
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut p = QuiverPresentation::new(field, &refs, 3);
    for i in 1..n {
        p = p.arrow(&format!("a{i}"), &names[i - 1], &names[i]);
    }
    for i in 2..n {
        p = p.zero_relation(&[&format!("a{i}"), &format!("a{}", i - 1)]);
    }
    p
}

/// The cyclic quiver with `n` vertices and all paths of length `len` zero:
/// a self-injective Nakayama algebra.
pub fn cyclic_nakayama(field: Field, n: usize, len: usize) -> QuiverPresentation {
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut p = QuiverPresentation::new(field, &refs, len.max(2));
    let arrows: Vec<String> = (1..=n).map(|i| format!("c{i}")).collect();
    for i in 0..n {
        p = p.arrow(&arrows[i], &names[i], &names[(i + 1) % n]);
    }
    for start in 0..n {
        let path: Vec<&str> = (0..len)
            .rev()
            .map(|k| arrows[(start + k) % n].as_str())
            .collect();
        p = p.zero_relation(&path);
    }
    p
}

/// `1 ⇄ 2` with arrows `p: 1 → 2`, `i: 2 → 1` and `p i = 0`: the Auslander
/// algebra of `k[x]/(x^2)`, with vertex 1 for the regular module and vertex 2
/// for the simple.
pub fn auslander_dual_numbers(field: Field) -> QuiverPresentation {
    QuiverPresentation::new(field, &["1", "2"], 3)
        .arrow("p", "1", "2")
        .arrow("i", "2", "1")
        .zero_relation(&["p", "i"])
}

/// Names accepted wherever a fixture can stand in for an input file.
pub const NAMES: [&str; 7] = [
    "ex14",
    "ex15",
    "selfinj-x2",
    "auslander-x2",
    "kxk",
    "x3",
    "k-x2",
];

/// A built-in presentation by name.
pub fn named(name: &str, field: Field) -> Option<QuiverPresentation> {
    Some(match name {
        "ex14" => ex14_presentation(field),
        "ex15" => ex15_presentation(field),
        "selfinj-x2" => truncated_polynomial(field, 2),
        "auslander-x2" => auslander_dual_numbers(field),
        "kxk" => two_points(field),
        "x3" => truncated_polynomial(field, 3),
        "k-x2" => point_and_dual_numbers(field),
        _ => return None,
    })
}

pub fn ex14(field: Field) -> Result<Algebra> {
    build_algebra(&ex14_presentation(field))
}

pub fn ex15(field: Field) -> Result<Algebra> {
    build_algebra(&ex15_presentation(field))
}
