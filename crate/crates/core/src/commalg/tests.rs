use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::*;
use crate::algebra::field::{Field, PrimeField};
use crate::algebra::linalg::Matrix;
use crate::algebra::monomial::Monomial;
use crate::algebra::poly::Polynomial;
use crate::groebner::{FreeModule, GradedMap, ModuleElement};

fn k() -> PrimeField {
    PrimeField::default()
}

fn p(s: &str) -> Polynomial<PrimeField> {
    Polynomial::parse(&k(), s).unwrap()
}

fn ideal(gens: &[&str]) -> Ideal<PrimeField> {
    Ideal::parse(&k(), gens).unwrap()
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Dimension of `I_d`, by linear algebra on monomial multiples of the generators.
fn degree_part(gens: &[Polynomial<PrimeField>], d: u16) -> Vec<Vec<u64>> {
    let basis = Monomial::all_of_degree(d);
    let mut rows = Vec::new();
    for g in gens {
        let Some(e) = g.homogeneous_degree() else { continue };
        if e > d {
            continue;
        }
        for m in Monomial::all_of_degree(d - e) {
            let prod = g.mul_term(&1, &m);
            rows.push(basis.iter().map(|b| prod.coefficient(b)).collect());
        }
    }
    rows
}

fn rank(rows: &[Vec<u64>]) -> usize {
    if rows.is_empty() {
        0
    } else {
        Matrix::from_rows(&k(), rows).rank()
    }
}

fn point_ideal(pt: [i64; 4]) -> Ideal<PrimeField> {
    let f = k();
    let row: Vec<u64> = pt.iter().map(|&c| f.from_i64(c)).collect();
    let forms: Vec<_> = Matrix::from_rows(&f, &[row])
        .nullspace()
        .into_iter()
        .map(|v| Polynomial::linear(&f, &[v[0], v[1], v[2], v[3]]))
        .collect();
    Ideal::new(&f, &forms).unwrap()
}

#[test]
fn intersection_of_skew_lines() {
    let i = ideal(&["x0", "x1"]);
    let j = ideal(&["x2", "x3"]);
    let got = i.intersection(&j).unwrap();
    assert_eq!(got, ideal(&["x0*x2", "x0*x3", "x1*x2", "x1*x3"]));
    // dim (I cap J)_d = dim I_d + dim J_d - dim (I + J)_d
    for d in 0..=4 {
        let a = degree_part(i.generators(), d);
        let b = degree_part(j.generators(), d);
        let both: Vec<_> = a.iter().chain(&b).cloned().collect();
        let want = rank(&a) + rank(&b) - rank(&both);
        assert_eq!(rank(&degree_part(got.generators(), d)), want);
    }
}

#[test]
fn colon_and_sum() {
    let x0 = ideal(&["x0"]);
    assert!(x0.quotient(&x0).unwrap().is_unit());
    let s = ideal(&["x2", "x3"]).combine(&ideal(&["x0", "x1"]), IdealOp::Sum).unwrap();
    assert_eq!(s, Ideal::irrelevant(&k()));
    let prod = ideal(&["x0", "x1"]).combine(&ideal(&["x2"]), IdealOp::Product).unwrap();
    assert_eq!(prod, ideal(&["x0*x2", "x1*x2"]));
    assert_eq!(ideal(&["x0*x1", "x0*x2"]).quotient_poly(&p("x0")).unwrap(), ideal(&["x1", "x2"]));
}

#[test]
fn saturation() {
    let i = ideal(&["x0^2", "x0*x1", "x0*x2", "x0*x3"]);
    let sat = i.saturate(&Ideal::irrelevant(&k())).unwrap();
    assert_eq!(sat, ideal(&["x0"]));
    let line = ideal(&["x0 + x2", "x1 + x3"]);
    assert_eq!(line.saturate_irrelevant().unwrap(), line);
    // the iterated-quotient route agrees
    let j = ideal(&["x0", "x1", "x2", "x3^2"]);
    assert_eq!(i.saturate(&j).unwrap(), ideal(&["x0"]));
    // an embedded point on a line
    let emb = ideal(&["x2^2", "x2*x3", "x3^2", "x0*x2", "x0*x3"]);
    assert_eq!(emb.saturate_irrelevant().unwrap(), ideal(&["x2^2", "x2*x3", "x3^2", "x0*x2", "x0*x3"]));
    assert!(!ideal(&["x2", "x3"]).product(&Ideal::irrelevant(&k())).unwrap().is_saturated().unwrap());
}

#[test]
fn hilbert_polynomials() {
    let line = ideal(&["x2", "x3"]).quotient_hilbert();
    assert_eq!(line.hilbert_polynomial, vec![q(1), q(1)]);
    let quadric = ideal(&["x0*x3 - x1*x2"]).quotient_hilbert();
    assert_eq!(quadric.hilbert_polynomial, vec![q(1), q(2), q(1)]);
    let lines = ["x2, x3", "x2 - x0, x3 - x1", "x2 - 2*x0, x3 - 3*x1", "x0, x1", "x2 - x1, x3 - x0 - x1"];
    let mut y = Ideal::unit(&k());
    for l in lines {
        let gens: Vec<_> = l.split(", ").collect();
        y = y.intersection(&ideal(&gens)).unwrap();
    }
    let h = y.quotient_hilbert();
    assert_eq!(h.hilbert_polynomial, vec![q(5), q(5)]);
    for d in 0..=8 {
        let want = Monomial::all_of_degree(d).len() - rank(&degree_part(y.generators(), d));
        assert_eq!(h.hilbert_function(d as i32), want as i64);
    }
    assert!(h.hilbert_function(h.regularity_bound) == 5 * h.regularity_bound as i64 + 5);
}

#[test]
fn omega_as_kernel() {
    let f = k();
    let vars: Vec<_> = (0..4).map(|i| ModuleElement::scalar(Polynomial::var(&f, i))).collect();
    let eval = GradedMap::new(&f, FreeModule::free(4), FreeModule::new(vec![1]), vars).unwrap();
    let omega = GradedModule::kernel(&eval).unwrap();
    assert_eq!(omega.hilbert_function(1).unwrap(), 6);
    assert_eq!(omega.hilbert_function(0).unwrap(), 0);
    assert_eq!(omega.minimalize().unwrap().generators().len(), 6);

    let b = GradedModule::quotient_ring(&ideal(&["x0", "x1^2"]), 0);
    let a = GradedModule::free(&f, FreeModule::new(vec![-3]));
    let zero = vec![ModuleElement::zero(&f, 1)];
    let coker = GradedModule::module_op(&a, &b, &zero, ModuleOp::Cokernel).unwrap();
    assert_eq!(coker.hilbert().unwrap(), b.hilbert().unwrap());
    // (x0, x1^2) S(-3)
    let ker = GradedModule::module_op(&a, &b, &[ModuleElement::scalar(p("x2^3"))], ModuleOp::Kernel).unwrap();
    assert_eq!(ker.hilbert_function(4).unwrap(), 1);
    assert_eq!(ker.hilbert_function(5).unwrap(), 5);
    let ker = GradedModule::module_op(&a, &b, &[ModuleElement::scalar(p("x1*x2^2"))], ModuleOp::Kernel).unwrap();
    // (x0, x1) S(-3)
    assert_eq!(ker.hilbert_function(4).unwrap(), 2);
}

#[test]
fn ext_modules() {
    let f = k();
    let hyper = GradedModule::quotient_ring(&ideal(&["x0"]), 0);
    let canon = GradedModule::free(&f, FreeModule::new(vec![-4]));
    let ext1 = graded_ext(&hyper, &canon, 1).unwrap();
    let want = GradedModule::quotient_ring(&ideal(&["x0"]), -3);
    assert_eq!(ext1.hilbert().unwrap(), want.hilbert().unwrap());
    assert!(graded_ext(&hyper, &canon, 0).unwrap().is_zero().unwrap());
    assert!(graded_ext(&hyper, &canon, 2).unwrap().is_zero().unwrap());

    let n = GradedModule::quotient_ring(&ideal(&["x1*x2", "x3^2"]), 2);
    let s = GradedModule::free(&f, FreeModule::free(1));
    assert_eq!(graded_hom(&s, &n).unwrap().hilbert().unwrap(), n.hilbert().unwrap());
}

#[test]
fn cohomology_of_line_bundles_and_lines() {
    let f = k();
    let o = GradedModule::free(&f, FreeModule::free(1));
    let t = CohomologyTable::new(&o).unwrap();
    assert_eq!(t.h(0, 3), 20);
    for d in -6..=6 {
        for i in 0..=3 {
            assert_eq!(t.h(i, d), t.h(3 - i, -4 - d), "h^{i}(O({d}))");
        }
    }
    assert_eq!(t.h(3, -4), 1);
    let line = GradedModule::quotient_ring(&ideal(&["x2", "x3"]), 0);
    assert_eq!(sheaf_cohomology_dim(&line, 1, -2).unwrap(), 1);
    assert_eq!(sheaf_cohomology_dim(&line, 0, 2).unwrap(), 3);
    // a module with a finite-length part has the same sheaf
    let junk = GradedModule::quotient_ring(&ideal(&["x2", "x3"]).product(&ideal(&["x0^2", "x1", "x2", "x3"])).unwrap(), 0);
    let tj = CohomologyTable::new(&junk).unwrap();
    for d in -3..4 {
        assert_eq!(tj.h(0, d), (d + 1).max(0) as i64);
    }
}

#[test]
fn chern_bookkeeping() {
    let f = chern_of_kernel(&ChernRecord::omega_one(), 3, 5, 5, 0).unwrap();
    assert_eq!((f.c1, f.c2, f.c3), (-4, 8, 0));
    let e = ChernRecord::new(3, 1, 2, 0);
    assert_eq!(chern_of_kernel(&e, 0, 0, 0, 0).unwrap().c1, e.c1);
    assert!(matches!(chern_of_kernel(&ChernRecord::omega_one(), 0, 0, 0, 0), Err(crate::Error::Inconsistent(_))));
    assert_eq!(chern_of_ideal_sheaf(3, 5, 5), ChernRecord::new(1, 3, 5, -5));
    // Whitney: c(F) c(I_Y(3)) = c(Omega(1))
    assert_eq!(f.whitney(&chern_of_ideal_sheaf(3, 5, 5)), ChernRecord::omega_one());
    assert_eq!(ChernRecord::line_bundle(0).twist(2), ChernRecord::line_bundle(2));
}

#[test]
fn chern_from_riemann_roch() {
    let f = k();
    let o = GradedModule::free(&f, FreeModule::new(vec![3]));
    assert_eq!(chern_from_hilbert(&o.hilbert().unwrap()).unwrap(), ChernRecord::line_bundle(3));
    let vars: Vec<_> = (0..4).map(|i| ModuleElement::scalar(Polynomial::var(&f, i))).collect();
    let eval = GradedMap::new(&f, FreeModule::free(4), FreeModule::new(vec![1]), vars).unwrap();
    let omega = GradedModule::kernel(&eval).unwrap();
    assert_eq!(chern_from_hilbert(&omega.hilbert().unwrap()).unwrap(), ChernRecord::omega_one());
    assert_eq!(ChernRecord::omega_one().twist(1), ChernRecord::new(3, 2, 2, 0));
}

#[test]
fn invariants_of_curves() {
    let lines = ["x2, x3", "x2 - x0, x3 - x1", "x2 - 2*x0, x3 - 3*x1", "x0, x1", "x2 - x1, x3 - x0 - x1"];
    let mut y = Ideal::unit(&k());
    for l in lines {
        let gens: Vec<_> = l.split(", ").collect();
        y = y.intersection(&ideal(&gens)).unwrap();
    }
    let inv = curve_invariants(&y).unwrap();
    assert_eq!((inv.degree, inv.chi, inv.chi_cm, inv.length_t), (5, 5, 5, 0));

    let mut z = ideal(&["x2", "x3"]);
    for pt in [[0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 1, 1], [1, 2, 3, 4]] {
        z = z.intersection(&point_ideal(pt)).unwrap();
    }
    assert_eq!(z.quotient_hilbert().hilbert_polynomial, vec![q(5), q(1)]);
    let inv = curve_invariants(&z).unwrap();
    assert_eq!((inv.degree, inv.chi, inv.chi_cm, inv.length_t), (1, 5, 1, 4));
    assert_eq!(cm_part(&z).unwrap(), ideal(&["x2", "x3"]));

    let double = ideal(&["x2^2", "x2*x3", "x3^2", "x0*x3 - x1*x2"]).saturate_irrelevant().unwrap();
    assert_eq!(curve_invariants(&double).unwrap().degree, 2);
    assert!(matches!(curve_invariants(&ideal(&["x0*x3 - x1*x2"])), Err(crate::Error::Dimension(_))));
}

#[test]
fn split_extension_is_direct_sum() {
    let f = k();
    let b = GradedModule::from_ideal(&ideal(&["x0*x2", "x0*x3", "x1*x2", "x1*x3"]), 1);
    let a = GradedModule::free(&f, FreeModule::new(vec![-1]));
    let data = SyzygyData::new(&b).unwrap();
    let zero: Vec<_> = data.syzygies.iter().map(|_| ModuleElement::zero(&f, 1)).collect();
    let e = extension_pushout(&b, &a, &data, &zero).unwrap();
    let sum = b.direct_sum(&a).unwrap();
    assert_eq!(e.free_resolution(true).unwrap().betti(), sum.free_resolution(true).unwrap().betti());

    let basis = cocycle_basis(&data, a.ambient(), &f).unwrap();
    let cob = coboundary_rank(&data, a.ambient(), &f);
    assert!(basis.len() > cob, "nonsplit classes exist");
    let class = &basis[0];
    assert!(is_cocycle(&data, &a, class).unwrap());
    let e = extension_pushout(&b, &a, &data, class).unwrap();
    let (he, ha, hb) = (e.hilbert().unwrap(), a.hilbert().unwrap(), b.hilbert().unwrap());
    for d in -2..8 {
        assert_eq!(he.hilbert_function(d), ha.hilbert_function(d) + hb.hilbert_function(d));
    }
    let bad: Vec<_> = data.syzygies.iter().enumerate().map(|(i, _)| ModuleElement::scalar(if i == 0 { p("x0") } else { p("0") })).collect();
    assert!(!is_cocycle(&data, &a, &bad).unwrap());
}

#[test]
fn module_json_round_trip() {
    let m = GradedModule::quotient_ring(&ideal(&["x0^2 - x1*x3", "x2"]), -1);
    let json = m.to_json();
    let back = GradedModule::from_json(&k(), &json).unwrap();
    assert_eq!(back.to_json(), json);
    assert_eq!(back.hilbert().unwrap(), m.hilbert().unwrap());
}
