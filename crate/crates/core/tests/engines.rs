mod common;

use std::collections::BTreeSet;

use mdlc::complexity::*;
use mdlc::constructions::*;
use mdlc::mdarray::pairwise_coprime;
use mdlc::{Field, FieldElement, MonomialOrder, PeriodicArray, Polynomial};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const ORDERS: [MonomialOrder; 2] = [MonomialOrder::Grlex, MonomialOrder::Lex];

fn cfg() -> EngineConfig {
    EngineConfig::default()
}

fn check_engines(a: &PeriodicArray) {
    let l = linear_complexity(a, &cfg()).unwrap();
    assert_eq!(l, circulant_rank(a, &cfg()).unwrap(), "rank oracle on {:?}", a.periods());
    if a.dims() == 1 {
        assert_eq!(l, berlekamp_massey(a).l);
    }
    if pairwise_coprime(a.periods()) {
        assert_eq!(l, unfolded_complexity(a).unwrap());
    }
}

fn divides(lead: &[usize], e: &[usize]) -> bool {
    lead.iter().zip(e).all(|(l, x)| l <= x)
}

fn check_structure(a: &PeriodicArray, order: MonomialOrder) {
    let r = staircase_groebner(a, order, &cfg()).unwrap();
    let (delta, basis) = staircase_generic(a, order);
    assert_eq!(r.delta_set, delta);
    assert_eq!(r.groebner_basis, basis);
    assert_eq!(staircase_delta(a, order, &cfg()).unwrap(), delta);

    let set: BTreeSet<_> = delta.iter().cloned().collect();
    for e in &delta {
        for k in 0..e.len() {
            if e[k] > 0 {
                let mut d = e.clone();
                d[k] -= 1;
                assert!(set.contains(&d), "delta not closed under division");
            }
        }
    }
    let leads: Vec<_> = basis.iter().map(|g| g.lead(order).unwrap().clone()).collect();
    for g in &basis {
        assert!(a.is_valid(g).unwrap(), "invalid basis element {}", g.display(order));
    }
    for e in &delta {
        assert!(!leads.iter().any(|l| divides(l, e)));
    }
    // every other monomial of the box is a multiple of some lead
    for idx in a.box_indices() {
        if !set.contains(&idx) {
            assert!(leads.iter().any(|l| divides(l, &idx)));
        }
    }
    for (k, &n) in a.periods().iter().enumerate() {
        let mut e = vec![0; a.dims()];
        e[k] = n;
        let f = a.field();
        let period_poly = Polynomial::from_terms(
            f.clone(),
            a.dims(),
            vec![(e, f.one()), (vec![0; a.dims()], f.neg(f.one()))],
        );
        assert!(a.is_valid(&period_poly).unwrap());
    }
}

#[test]
fn random_arrays_agree_across_engines() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..120 {
        let a = common::random_any(&mut rng, 200);
        check_engines(&a);
    }
}

#[test]
fn staircase_structure_on_random_arrays() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..80 {
        let a = common::random_any(&mut rng, 120);
        for order in ORDERS {
            check_structure(&a, order);
        }
        let l: Vec<_> = ORDERS
            .iter()
            .map(|&o| staircase_groebner(&a, o, &cfg()).unwrap().l)
            .collect();
        assert_eq!(l[0], l[1]);
    }
}

#[test]
fn larger_fields_use_generic_path() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for p in [7u32, 11] {
        for _ in 0..10 {
            let periods = common::random_periods(&mut rng, 2, 80);
            let a = common::random_array(&mut rng, common::field(p), periods);
            check_engines(&a);
            check_structure(&a, MonomialOrder::Grlex);
        }
    }
    let f9 = std::sync::Arc::new(Field::new(3, 2, None, None).unwrap());
    for _ in 0..10 {
        let periods = common::random_periods(&mut rng, 2, 60);
        let a = common::random_array(&mut rng, f9.clone(), periods);
        check_engines(&a);
    }
}

#[test]
fn presets_agree_across_engines() {
    let f9 = Field::new(3, 2, Some(&[2, 2]), None).unwrap();
    let f25 = Field::new(5, 2, None, None).unwrap();
    let mut arrays = vec![
        legendre_array_binary(&f9).unwrap(),
        legendre_array_ternary(&f25).unwrap(),
        a1(5).unwrap().array,
        a2(&f9, a2_default_coeffs(&f9)).unwrap().array,
        a3(&f9, FieldElement(0)).unwrap().array,
        a3(&f9, FieldElement(1)).unwrap().array,
        a4(&f9).unwrap().array,
        sidelnikov_column(&f25).unwrap(),
        legendre_column(13).unwrap(),
    ];
    for p in [7u32, 11, 13] {
        let f = Field::new(p, 2, None, None).unwrap();
        arrays.push(legendre_array_binary(&f).unwrap());
    }
    for a in &arrays {
        check_engines(a);
        for order in ORDERS {
            check_structure(a, order);
        }
    }
}

#[test]
fn cap_is_enforced() {
    let f = common::field(2);
    let a = PeriodicArray::zeros(f, vec![10, 10]).unwrap();
    let small = EngineConfig { cap: 99 };
    let err = mdlc::Error::CapExceeded { size: 100, cap: 99 };
    assert_eq!(linear_complexity(&a, &small).unwrap_err(), err);
    assert_eq!(circulant_rank(&a, &small).unwrap_err(), err);
    assert_eq!(linear_complexity(&a, &EngineConfig { cap: 100 }).unwrap(), 0);
}

#[test]
fn unfold_rejects_shared_factors() {
    let a = PeriodicArray::zeros(common::field(2), vec![6, 4]).unwrap();
    assert!(unfolded_complexity(&a).is_err());
}
