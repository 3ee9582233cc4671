use std::sync::Arc;

use super::*;
use crate::algebra::{build_algebra, Algebra};
use crate::exactlin::Field;
use crate::fixtures;
use crate::krullschmidt::{add_membership, is_isomorphic};
use crate::modules::{injective_indecomposable, simple_module};

const Q: Field = Field::Rationals;

fn alg(p: crate::algebra::QuiverPresentation) -> Arc<Algebra> {
    Arc::new(build_algebra(&p).unwrap())
}

fn proj(a: &Arc<Algebra>, i: usize) -> Module {
    projective_indecomposable(a, i, Side::Left).unwrap()
}

fn inj(a: &Arc<Algebra>, i: usize) -> Module {
    injective_indecomposable(a, i, Side::Left).unwrap()
}

fn sum(a: &Arc<Algebra>, ms: &[Module]) -> Module {
    direct_sum(a, Side::Left, ms).unwrap().module
}

fn fixture_algebras() -> Vec<Arc<Algebra>> {
    vec![
        alg(fixtures::ex14_presentation(Q)),
        alg(fixtures::ex15_presentation(Q)),
        alg(fixtures::truncated_polynomial(Q, 2)),
        alg(fixtures::truncated_polynomial(Q, 4)),
        alg(fixtures::cyclic_nakayama(Q, 3, 2)),
        alg(fixtures::cyclic_nakayama(Q, 2, 3)),
        alg(fixtures::radical_square_zero_line(Q, 4)),
        alg(fixtures::two_points(Q)),
        alg(fixtures::point_and_dual_numbers(Q)),
    ]
}

#[test]
fn simple_has_zero_radical() {
    let a = alg(fixtures::ex15_presentation(Q));
    for i in 0..3 {
        let s = simple_module(&a, i, Side::Left).unwrap();
        assert!(radical_submodule(&s).unwrap().is_zero());
        assert_eq!(socle_submodule(&s).unwrap().dim(), s.dim());
    }
}

#[test]
fn ex14_projective_one_has_loewy_structure_one_over_two() {
    let a = alg(fixtures::ex14_presentation(Q));
    let p1 = proj(&a, 0);
    assert_eq!(top_multiplicities(&p1).unwrap(), vec![1, 0, 0]);
    assert_eq!(socle_multiplicities(&p1).unwrap(), vec![0, 1, 0]);
}

#[test]
fn ex15_projective_two_has_two_dimensional_socle() {
    let a = alg(fixtures::ex15_presentation(Q));
    let p2 = proj(&a, 1);
    assert_eq!(socle_submodule(&p2).unwrap().dim(), 2);
    assert_eq!(socle_multiplicities(&p2).unwrap(), vec![1, 1, 0]);
}

#[test]
fn covers_of_projectives_and_simples() {
    for a in fixture_algebras() {
        for i in 0..a.num_idempotents() {
            let p = proj(&a, i);
            let c = projective_cover(&p).unwrap();
            assert!(c.map.is_isomorphism());
            let s = simple_module(&a, i, Side::Left).unwrap();
            let c = projective_cover(&s).unwrap();
            assert!(is_isomorphic(&c.module, &p).unwrap());
            let e = injective_envelope(&s).unwrap();
            assert!(is_isomorphic(&e.module, &inj(&a, i)).unwrap());
            let e = injective_envelope(&inj(&a, i)).unwrap();
            assert!(e.map.is_isomorphism());
        }
    }
}

#[test]
fn cover_kernel_lies_in_radical() {
    for a in fixture_algebras() {
        for i in 0..a.num_idempotents() {
            let c = projective_cover(&inj(&a, i)).unwrap();
            let rad = radical_submodule(&c.module).unwrap();
            assert!(rad.contains_subspace(&c.map.kernel()).unwrap());
        }
    }
}

#[test]
fn ex15_injective_two_is_not_projective() {
    let a = alg(fixtures::ex15_presentation(Q));
    let i2 = inj(&a, 1);
    assert_eq!(i2.dim(), 4);
    let c = projective_cover(&i2).unwrap();
    assert_eq!(c.multiplicities, vec![1, 1, 0]);
    assert_eq!(c.module.dim(), 7);
    assert!(!is_projective(&i2).unwrap());
    assert!(is_injective(&proj(&a, 0)).unwrap());
}

#[test]
fn ex14_regular_resolution() {
    let a = alg(fixtures::ex14_presentation(Q));
    let reg = regular_module(&a, Side::Left);
    let env = injective_envelope(&reg).unwrap();
    let i0 = sum(&a, &[proj(&a, 0), proj(&a, 1), proj(&a, 1)]);
    assert!(is_isomorphic(&env.module, &i0).unwrap());
    let res = minimal_injective_resolution(&reg, 3).unwrap();
    assert_eq!(res.len(), 3);
    assert!(res.complete);
    assert!(res.is_exact());
    assert!(is_isomorphic(&res.terms[1], &proj(&a, 0)).unwrap());
    assert!(is_isomorphic(&res.terms[2], &inj(&a, 0)).unwrap());
    assert!(!is_projective(&inj(&a, 0)).unwrap());
    assert_eq!(res.euler_characteristic(), 5);
}

#[test]
fn self_injective_resolution_stops() {
    let a = alg(fixtures::truncated_polynomial(Q, 2));
    let reg = regular_module(&a, Side::Left);
    let res = minimal_injective_resolution(&reg, 5).unwrap();
    assert_eq!(res.len(), 1);
    assert!(res.complete);
    assert!(res.maps[0].is_isomorphism());
}

#[test]
fn injective_module_has_length_zero_resolution() {
    let a = alg(fixtures::ex15_presentation(Q));
    let res = minimal_injective_resolution(&inj(&a, 2), 4).unwrap();
    assert_eq!(res.len(), 1);
    assert!(res.complete);
}

#[test]
fn dominant_dimensions() {
    let ex14 = alg(fixtures::ex14_presentation(Q));
    let d = dominant_dimension(&ex14, DEFAULT_DOMDIM_CAP).unwrap();
    assert_eq!(d.value, DomDim::Exact(2));
    assert_eq!(d.first_nonprojective, Some(2));
    assert_eq!(d.witness.len(), 2);
    let dual = alg(fixtures::truncated_polynomial(Q, 2));
    assert_eq!(
        dominant_dimension(&dual, 10).unwrap().value,
        DomDim::AtLeast(10)
    );
    let ex15 = alg(fixtures::ex15_presentation(Q));
    assert_eq!(
        dominant_dimension(&ex15, 10).unwrap().value,
        DomDim::Exact(0)
    );
    let p3 = proj(&ex15, 2);
    assert_eq!(
        module_dominant_dimension(&p3, 10).unwrap().value,
        DomDim::Exact(0)
    );
}

#[test]
fn left_and_right_dominant_dimension_agree() {
    for a in fixture_algebras() {
        let l = dominant_dimension(&a, 6).unwrap().value;
        let r = right_dominant_dimension(&a, 6).unwrap().value;
        assert_eq!(l, r);
    }
}

#[test]
fn resolutions_are_exact_with_alternating_sum() {
    for a in fixture_algebras() {
        let mut ms = vec![regular_module(&a, Side::Left)];
        for i in 0..a.num_idempotents() {
            ms.push(simple_module(&a, i, Side::Left).unwrap());
        }
        for m in ms {
            let res = minimal_injective_resolution(&m, 8).unwrap();
            assert!(res.is_exact());
            if res.complete {
                assert_eq!(res.euler_characteristic(), m.dim() as i64);
            }
        }
    }
}

#[test]
fn envelopes_are_essential() {
    for a in fixture_algebras() {
        let m = regular_module(&a, Side::Left);
        let e = injective_envelope(&m).unwrap();
        let soc_m = socle_submodule(&m).unwrap();
        let soc_e = socle_submodule(&e.module).unwrap();
        assert_eq!(soc_m.image_under(&e.map.matrix), soc_e);
    }
}

#[test]
fn projectivity_matches_add_of_regular() {
    for a in fixture_algebras() {
        let reg = regular_module(&a, Side::Left);
        for i in 0..a.num_idempotents() {
            for m in [inj(&a, i), simple_module(&a, i, Side::Left).unwrap()] {
                assert_eq!(
                    is_projective(&m).unwrap(),
                    add_membership(&m, &reg).unwrap()
                );
            }
        }
    }
}

#[test]
fn qf3() {
    let ex14 = alg(fixtures::ex14_presentation(Q));
    let mf = qf3_minimal_faithful(&ex14).unwrap().unwrap();
    assert_eq!(mf.idempotent.vertices(), &[0, 1]);
    assert!(is_isomorphic(&mf.module, &sum(&ex14, &[proj(&ex14, 0), proj(&ex14, 1)])).unwrap());
    let ex15 = alg(fixtures::ex15_presentation(Q));
    assert!(qf3_minimal_faithful(&ex15).unwrap().is_none());
    let dual = alg(fixtures::cyclic_nakayama(Q, 3, 2));
    let mf = qf3_minimal_faithful(&dual).unwrap().unwrap();
    assert_eq!(mf.idempotent.vertices(), &[0, 1, 2]);
}

#[test]
fn zero_module() {
    let a = alg(fixtures::ex14_presentation(Q));
    let z = Module::zero(a.clone(), Side::Left);
    assert_eq!(projective_cover(&z).unwrap().module.dim(), 0);
    assert_eq!(injective_envelope(&z).unwrap().module.dim(), 0);
    assert!(is_projective(&z).unwrap() && is_injective(&z).unwrap());
}

#[test]
fn lifted_end_algebra_is_accepted() {
    // End of P1 ⊕ P2 over ex14 has no primitive idempotents until lifted
    let a = alg(fixtures::ex14_presentation(Q));
    let m = sum(&a, &[proj(&a, 0), proj(&a, 1)]);
    let b = crate::modules::end_algebra(&m).unwrap();
    let reg = regular_module(&b.algebra, Side::Left);
    assert!(matches!(projective_cover(&reg), Err(Error::NotSplit(_))));
    let d = dominant_dimension(&b.algebra, 10).unwrap();
    assert!(d.value.at_least(1));
}
