use std::sync::Arc;

use super::*;
use crate::fixtures;

const Q: Field = Field::Rationals;

/// Count composable arrow words of length < cap avoiding every zero relation
/// as a contiguous block, by brute force over all words.
fn count_monomial_normal_forms(p: &QuiverPresentation) -> usize {
    let arrows = &p.arrows;
    let rels: Vec<Vec<String>> = p
        .relations
        .iter()
        .map(|r| r.terms[0].path.clone())
        .collect();
    let mut count = p.vertices.len();
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    for _len in 1..p.nilpotency_cap {
        let mut next = Vec::new();
        for w in &words {
            for a in 0..arrows.len() {
                let mut v = w.clone();
                v.push(a); // written left to right as composition order (leftmost applied last)
                next.push(v);
            }
        }
        for w in &next {
            let composable = w.windows(2).all(|x| arrows[x[0]].from == arrows[x[1]].to);
            let names: Vec<String> = w.iter().map(|&a| arrows[a].name.clone()).collect();
            let killed = rels
                .iter()
                .any(|r| names.windows(r.len()).any(|win| win == r.as_slice()));
            if composable && !killed {
                count += 1;
            }
        }
        words = next;
    }
    count
}

#[test]
fn one_vertex_is_the_field() {
    let a = build_algebra(&QuiverPresentation::new(Q, &["1"], 2)).unwrap();
    assert_eq!(a.dim(), 1);
    assert!(validate_algebra(&a).is_empty());
}

#[test]
fn ex14_has_dimension_five() {
    let a = fixtures::ex14(Q).unwrap();
    assert_eq!(a.dim(), 5);
    assert_eq!(a.basis_labels(), &["e1", "e2", "e3", "a1", "a2"]);
    assert_eq!(
        a.dim(),
        count_monomial_normal_forms(&fixtures::ex14_presentation(Q))
    );
    assert!(validate_algebra(&a).is_empty());
}

#[test]
fn ex15_has_dimension_nine() {
    let p = fixtures::ex15_presentation(Q);
    let a = build_algebra(&p).unwrap();
    assert_eq!(a.dim(), 9);
    assert_eq!(a.dim(), count_monomial_normal_forms(&p));
    assert!(validate_algebra(&a).is_empty());
    // projectives A e_i have dimensions 3, 4, 2
    let dims: Vec<usize> = (0..3)
        .map(|i| (0..a.dim()).filter(|&k| a.peirce(k).1 == i).count())
        .collect();
    assert_eq!(dims, vec![3, 4, 2]);
}

#[test]
fn corner_of_ex15() {
    let a = fixtures::ex15(Q).unwrap();
    let c = corner_algebra(&a, &Idempotent::new(vec![0, 1])).unwrap();
    assert_eq!(c.algebra.dim(), 6);
    let mut labels = c.algebra.basis_labels().to_vec();
    labels.sort();
    let mut expected = vec!["e1", "e2", "al", "be", "be*al", "th*ga"];
    expected.sort();
    assert_eq!(labels, expected);
    assert!(validate_algebra(&c.algebra).is_empty());
}

#[test]
fn corner_of_ex14_at_one_vertex() {
    let a = fixtures::ex14(Q).unwrap();
    let c = corner_algebra(&a, &Idempotent::new(vec![0])).unwrap();
    assert_eq!(c.algebra.dim(), 1);
    assert!(corner_algebra(&a, &Idempotent::new(vec![5])).is_err());
}

#[test]
fn full_corner_is_the_algebra() {
    let a = fixtures::ex15(Q).unwrap();
    let c = corner_algebra(&a, &Idempotent::unit(&a)).unwrap();
    assert!(c.algebra.same_as(&a));
}

#[test]
fn opposite_is_involutive() {
    let a = Arc::new(fixtures::ex14(Q).unwrap());
    let op = opposite_algebra(&a);
    assert!(!op.same_as(&a));
    assert!(Arc::ptr_eq(&opposite_algebra(&op), &a));
    assert!(op.opposite().same_as(&a));
    assert!(validate_algebra(&op).is_empty());
    assert_eq!(op.dim(), 5);
}

#[test]
fn opposite_of_ex14_is_reversed_quiver() {
    let a = Arc::new(fixtures::ex14(Q).unwrap());
    let rev = QuiverPresentation::new(Q, &["1", "2", "3"], 3)
        .arrow("a1", "2", "1")
        .arrow("a2", "3", "2")
        .zero_relation(&["a1", "a2"]);
    let b = build_algebra(&rev).unwrap();
    // same basis labels and same products after reversing each path
    let op = a.opposite();
    for i in 0..5 {
        for j in 0..5 {
            assert_eq!(op.product(i, j), b.product(i, j), "({i},{j})");
        }
    }
}

#[test]
fn commutative_opposite_has_same_table() {
    let a = Arc::new(fixtures::ex14(Q).unwrap());
    assert!(!a.is_commutative());
    let x2 = Arc::new(build_algebra(&fixtures::truncated_polynomial(Q, 2)).unwrap());
    assert!(x2.is_commutative());
    assert_eq!(x2.opposite().table(), x2.table());
}

#[test]
fn corrupted_table_is_detected() {
    let a = fixtures::ex15(Q).unwrap();
    let mut parts = a.parts();
    parts.table[0][0][0].1 = Q.from_i64(2);
    assert!(Algebra::from_parts(parts.clone()).is_err());
    let bad = Algebra::from_parts_unchecked(parts);
    assert!(!validate_algebra(&bad).is_empty());
}

#[test]
fn cap_too_small_is_reported() {
    let p = QuiverPresentation::new(Q, &["1"], 3)
        .arrow("x", "1", "1")
        .zero_relation(&["x", "x", "x", "x"]);
    assert!(matches!(
        build_algebra(&p),
        Err(Error::CapNotNilpotent { .. })
    ));
    let short = QuiverPresentation::new(Q, &["1", "2"], 3)
        .arrow("a", "1", "2")
        .relation(&[(1, &["a"])]);
    assert!(matches!(
        build_algebra(&short),
        Err(Error::NonAdmissible(_))
    ));
}

#[test]
fn commutativity_relation() {
    // square 1 → 2 → 4, 1 → 3 → 4 with the two paths equal
    let p = QuiverPresentation::new(Q, &["1", "2", "3", "4"], 3)
        .arrow("a", "1", "2")
        .arrow("b", "2", "4")
        .arrow("c", "1", "3")
        .arrow("d", "3", "4")
        .relation(&[(1, &["b", "a"]), (-1, &["d", "c"])]);
    let a = build_algebra(&p).unwrap();
    assert_eq!(a.dim(), 4 + 4 + 1);
    assert!(validate_algebra(&a).is_empty());
    // the larger path d*c is rewritten in terms of b*a
    assert!(a.basis_labels().contains(&"b*a".to_string()));
    assert!(!a.basis_labels().contains(&"d*c".to_string()));
}

#[test]
fn non_homogeneous_relation() {
    // x^2 = x^3 alone generates a non-admissible ideal: k[x]/(x^2 (1 - x))
    let p = QuiverPresentation::new(Q, &["1"], 3)
        .arrow("x", "1", "1")
        .relation(&[(1, &["x", "x"]), (-1, &["x", "x", "x"])]);
    assert!(matches!(
        build_algebra(&p),
        Err(Error::CapNotNilpotent { .. })
    ));
    let a = build_algebra(&p.zero_relation(&["x", "x", "x"])).unwrap();
    assert_eq!(a.dim(), 2);
    assert!(validate_algebra(&a).is_empty());
}

#[test]
fn build_is_deterministic() {
    let a = fixtures::ex15(Q).unwrap();
    let b = fixtures::ex15(Q).unwrap();
    assert_eq!(a.fingerprint(), b.fingerprint());
    assert_eq!(a.table(), b.table());
}

#[test]
fn json_round_trip() {
    let p = fixtures::ex15_presentation(Q);
    let text = p.to_json().to_string();
    assert_eq!(QuiverPresentation::from_json_str(&text).unwrap(), p);
    let err =
        QuiverPresentation::from_json_str("{\"field\": {\"kind\": \"rationals\"}}").unwrap_err();
    assert!(matches!(err, Error::Schema { ref key, .. } if key == "vertices"));
    assert!(matches!(
        QuiverPresentation::from_json_str("{"),
        Err(Error::Parse { .. })
    ));
}

#[test]
fn radical_matches_path_span() {
    let a = fixtures::ex15(Q).unwrap();
    let known = a.radical().unwrap();
    let computed = crate::krullschmidt::trace_form_radical(&a).unwrap();
    assert_eq!(known, computed);
}

#[test]
fn generators_are_arrows() {
    let a = fixtures::ex15(Q).unwrap();
    let labels: Vec<&str> = a
        .generators()
        .iter()
        .map(|&k| a.basis_labels()[k].as_str())
        .collect();
    assert_eq!(labels, vec!["al", "be", "ga", "th"]);
}

#[test]
fn prime_field_build() {
    let a = fixtures::ex15(Field::prime(3).unwrap()).unwrap();
    assert_eq!(a.dim(), 9);
    assert!(validate_algebra(&a).is_empty());
}
