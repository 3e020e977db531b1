use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use super::*;
use crate::algebra::field::{Field, PrimeField, Rationals};
use crate::algebra::poly::Polynomial;
use crate::groebner::ModuleElement;

fn k() -> PrimeField {
    PrimeField::default()
}

fn line(a: [i64; 4], b: [i64; 4]) -> LineP3<PrimeField> {
    LineP3::from_ints(&k(), a, b).unwrap()
}

/// `{x2 = x3 = 0}`, `{x0 = x1 = 0}`, `{x0 + x2 = x1 + x3 = 0}`.
fn standard() -> [LineP3<PrimeField>; 3] {
    [line([1, 0, 0, 0], [0, 1, 0, 0]), line([0, 0, 1, 0], [0, 0, 0, 1]), line([1, 0, -1, 0], [0, 1, 0, -1])]
}

fn on_all(l: &LineP3<PrimeField>, others: &[&LineP3<PrimeField>]) -> bool {
    others.iter().all(|o| l.meets(o))
}

#[test]
fn plucker_coordinates() {
    let f = k();
    assert_eq!(line([1, 0, 0, 0], [0, 1, 0, 0]).plucker(), &[1, 0, 0, 0, 0, 0]);
    assert_eq!(line([0, 0, 1, 0], [0, 0, 0, 1]).plucker(), &[0, 0, 0, 0, 0, 1]);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let l = random_line(&f, &mut rng);
        assert_eq!(l.plucker_relation(), 0);
        let first = l.plucker().iter().find(|c| **c != 0).unwrap();
        assert_eq!(*first, 1);
    }
    let err = LineP3::from_ints(&f, [1, 2, 3, 4], [2, 4, 6, 8]).unwrap_err();
    assert!(matches!(err, crate::Error::Degenerate(_)));
}

#[test]
fn incidence() {
    let [l1, l2, _] = standard();
    assert!(!l1.meets(&l2));
    let l = line([1, 0, 0, 0], [0, 0, 0, 1]);
    assert!(l1.meets(&l));
    assert_eq!(l1.intersection_point(&l), Some([1, 0, 0, 0]));
    assert!(l1.meets(&l1));
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let (a, b) = (random_line(&k(), &mut rng), random_line(&k(), &mut rng));
        assert_eq!(a.meets(&b), a.pairing(&b) == 0);
        assert_eq!(a.meets(&b), !a.ideal().sum(&b.ideal()).unwrap().saturate_irrelevant().unwrap().is_unit());
    }
}

#[test]
fn line_ideals() {
    let f = k();
    let [l1, l2, l3] = standard();
    assert_eq!(l1.ideal(), crate::commalg::Ideal::parse(&f, &["x2", "x3"]).unwrap());
    assert_eq!(l2.ideal(), crate::commalg::Ideal::parse(&f, &["x0", "x1"]).unwrap());
    let [g, h] = l3.form_polynomials();
    assert_eq!((g.to_string(), h.to_string()), ("x0 + x2".into(), "x1 + x3".into()));
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let l = random_line(&f, &mut rng);
    for p in l.points() {
        for form in l.form_polynomials() {
            assert_eq!(form.eval(p), 0);
        }
    }
}

#[test]
fn quadric_of_standard_lines() {
    let [l1, l2, l3] = standard();
    let q = quadric_through(&l1, &l2, &l3).unwrap();
    let want = Polynomial::parse(&k(), "x0*x3 - x1*x2").unwrap();
    assert_eq!(q.equation(), &want.monic());
    assert!(q.is_nonsingular());
    let meeting = line([1, 0, 0, 0], [0, 0, 1, 0]);
    assert!(quadric_through(&l1, &l2, &meeting).is_err());
}

#[test]
fn quadric_through_random_lines() {
    let cfg = random_skew_config(&k(), 3, 5).unwrap();
    let [a, b, c] = [cfg.line(0), cfg.line(1), cfg.line(2)];
    let q = quadric_through(a, b, c).unwrap();
    for l in [a, b, c] {
        let gb = l.ideal();
        assert!(gb.contains(q.equation()).unwrap());
        assert!(gb.groebner().normal_form(&ModuleElement::scalar(q.equation().clone())).unwrap().is_zero());
    }
    let other = quadric_through_sampled([a, b, c], [[(2, 1), (1, 3), (5, -1)], [(1, 1), (1, 2), (1, 3)], [(0, 1), (1, 0), (7, 2)]]).unwrap();
    assert_eq!(other, q);
}

#[test]
fn transversal_cases() {
    let [l1, l2, l3] = standard();
    let l4 = line([1, 0, 1, 0], [0, 1, 0, 1]);
    assert_eq!(transversals_of_four([&l1, &l2, &l3, &l4]).unwrap(), Transversals::Infinite);

    let cfg = random_skew_config(&k(), 4, 99).unwrap();
    let ls: Vec<_> = cfg.lines().iter().collect();
    let t = transversals_of_four([ls[0], ls[1], ls[2], ls[3]]).unwrap();
    // the incidence count over the quadric: Q restricted to L4
    let q = cfg.quadric(0, 1, 2).unwrap();
    let disc_roots = q.restrict(ls[3]).rational_root_count().unwrap();
    match &t {
        Transversals::Two(pair) => {
            assert_ne!(pair[0], pair[1]);
            assert_eq!(disc_roots, 2);
            for m in pair {
                assert!(on_all(m, &ls));
            }
        }
        Transversals::Conjugate => assert_eq!(disc_roots, 0),
        other => panic!("unexpected {other:?}"),
    }

    // a line tangent to Q at a point
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let q = quadric_through(&l1, &l2, &l3).unwrap();
    let p = random_point_on(&q, &l1, &[&l2, &l3], &mut rng).unwrap();
    let tl = tangent_line(&q, &p, &mut rng).unwrap();
    assert!(![&l1, &l2, &l3].iter().any(|l| l.meets(&tl)));
    match transversals_of_four([&l1, &l2, &l3, &tl]).unwrap() {
        Transversals::Tangent(m) => {
            assert!(on_all(&m, &[&l1, &l2, &l3, &tl]));
            assert!(m.contains_point(&p));
        }
        other => panic!("unexpected {other:?}"),
    }
    let f = k();
    let restricted = q.restrict(&tl);
    let c = restricted.coeffs();
    let disc = f.sub(&f.mul(&c[1], &c[1]), &f.mul(&f.from_i64(4), &f.mul(&c[0], &c[2])));
    assert_eq!(disc, 0);
    assert!(transversals_of_four([&l1, &l1, &l2, &l3]).is_err());
}

#[test]
fn five_secant_witness() {
    let [l1, l2, l3] = standard();
    let m = line([1, 1, 0, 0], [0, 0, 1, 1]);
    assert!(on_all(&m, &[&l1, &l2, &l3]));
    let l4 = line([1, 1, 1, 1], [1, 2, 5, 3]);
    let l5 = line([1, 1, 2, 2], [3, -1, 4, 7]);
    let cfg = LineConfiguration::new(&k(), vec![l1, l2, l3, l4, l5]).unwrap();
    assert!(cfg.is_skew());
    match has_five_secant(&cfg).unwrap() {
        FiveSecant::Witness(w) => {
            assert_eq!(w, m);
            assert!(on_all(&w, &cfg.lines().iter().collect::<Vec<_>>()));
        }
        other => panic!("unexpected {other:?}"),
    }
    let four = LineConfiguration::new(&k(), cfg.lines()[..4].to_vec()).unwrap();
    assert!(has_five_secant(&four).is_err());
    let meeting = LineConfiguration::new(&k(), vec![cfg.line(0).clone(), cfg.line(0).clone(), cfg.line(1).clone(), cfg.line(2).clone(), cfg.line(3).clone()]).unwrap();
    assert!(has_five_secant(&meeting).is_err());
}

#[test]
fn random_configurations() {
    let f = k();
    let cfg = random_skew_config(&f, 5, 42).unwrap();
    assert!(cfg.is_skew());
    assert_eq!(has_five_secant(&cfg).unwrap(), FiveSecant::None);
    // no transversal of any four meets the fifth
    for sub in subsets(5, 4) {
        let fifth = (0..5).find(|i| !sub.contains(i)).unwrap();
        let ls: [&LineP3<PrimeField>; 4] = core::array::from_fn(|k| cfg.line(sub[k]));
        if let Some(lines) = transversals_of_four(ls).unwrap().rational_lines() {
            assert!(lines.iter().all(|t| !t.meets(cfg.line(fifth))));
        }
    }
    assert_eq!(random_skew_config(&f, 5, 42).unwrap(), cfg);
    assert_ne!(random_skew_config(&f, 5, 43).unwrap(), cfg);
    assert_eq!(random_skew_config(&f, 1, 9).unwrap().len(), 1);
    assert!(random_skew_config(&Rationals, 2, 1).is_err());
    let file = cfg.to_file();
    assert_eq!(LineConfiguration::from_file(&f, &file).unwrap(), cfg);
}

#[test]
fn rulings() {
    let f = k();
    let [l1, l2, l3] = standard();
    let q = quadric_through(&l1, &l2, &l3).unwrap();
    assert_eq!(ruling_line(&q, &l1, RulingFamily::A, &RulingParam::Value(0)).unwrap(), l1);
    let m = ruling_line(&q, &l1, RulingFamily::B, &RulingParam::Point([1, 1, 0, 0])).unwrap();
    assert_eq!(m, line([1, 1, 0, 0], [0, 0, 1, 1]));
    assert_eq!(ruling_line(&q, &l1, RulingFamily::B, &RulingParam::Value(1)).unwrap(), m);
    assert!(ruling_line(&q, &l1, RulingFamily::B, &RulingParam::Point([1, 0, 0, 1])).is_err());
    for t in 0..10u64 {
        let b = ruling_line(&q, &l1, RulingFamily::B, &RulingParam::Value(f.from_i64(t as i64 * 7 + 2))).unwrap();
        assert!(q.contains_line(&b));
        assert!(on_all(&b, &[&l1, &l2, &l3]));
        let a = ruling_line(&q, &l1, RulingFamily::A, &RulingParam::Value(f.from_i64(t as i64 + 3))).unwrap();
        assert!(q.contains_line(&a));
        assert!(!a.meets(&l1) && a.meets(&b));
    }
}
