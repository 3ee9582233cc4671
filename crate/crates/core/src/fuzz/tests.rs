use super::*;

#[test]
fn one_vertex_no_arrows_is_the_field() {
    let cfg = FuzzConfig {
        max_vertices: 1,
        max_arrows: 0,
        ..FuzzConfig::default()
    };
    let mut rng = case_rng(5, 0);
    let p = generate_case(&mut rng, &cfg);
    let a = build_algebra(&p).unwrap();
    assert_eq!(a.dim(), 1);
}

#[test]
fn generation_is_deterministic() {
    let cfg = FuzzConfig::with_seed(42, 30);
    assert_eq!(generate_cases(&cfg), generate_cases(&cfg));
    let other = FuzzConfig::with_seed(43, 30);
    assert_ne!(generate_cases(&cfg), generate_cases(&other));
}

#[test]
fn generated_cases_build_within_bounds() {
    let cfg = FuzzConfig::with_seed(3, 100);
    for p in generate_cases(&cfg) {
        let a = build_algebra(&p).unwrap();
        assert!(a.dim() <= cfg.max_dim);
        assert!(p.vertices.len() <= cfg.max_vertices && p.arrows.len() <= cfg.max_arrows);
    }
}

#[test]
fn empty_suite() {
    let report = run_suite(&FuzzConfig::with_seed(1, 0)).unwrap();
    assert!(report.cases.is_empty() && report.violations.is_empty());
}

#[test]
fn small_suite_is_clean_and_reproducible() {
    let cfg = FuzzConfig::with_seed(11, 12);
    let a = run_suite(&cfg).unwrap();
    assert!(a.violations.is_empty(), "{:?}", a.violations);
    let b = run_suite(&cfg).unwrap();
    assert_eq!(a.to_json().to_string(), b.to_json().to_string());
}

#[test]
fn corrupted_structure_is_caught_and_shrunk() {
    let cfg = FuzzConfig {
        corrupt_structure: true,
        ..FuzzConfig::with_seed(9, 3)
    };
    let report = run_suite(&cfg).unwrap();
    assert_eq!(report.violations.len(), 3);
    for v in &report.violations {
        assert_eq!(v.check, "validation");
        let shrunk = QuiverPresentation::from_json(v.shrunk.as_ref().unwrap()).unwrap();
        assert!(shrunk.arrows.is_empty());
        assert_eq!(shrunk.vertices.len(), 1);
        assert!(still_fails(&shrunk, "validation", &cfg, 0));
    }
}
