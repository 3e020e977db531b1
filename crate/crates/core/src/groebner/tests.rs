use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::algebra::field::PrimeField;
use crate::algebra::linalg::Matrix;

fn k() -> PrimeField {
    PrimeField::default()
}

fn p(s: &str) -> Polynomial<PrimeField> {
    Polynomial::parse(&k(), s).unwrap()
}

fn ideal(gens: &[&str]) -> Vec<ModuleElement<PrimeField>> {
    gens.iter().map(|g| ModuleElement::scalar(p(g))).collect()
}

/// Dimension of the degree-`d` part of the ideal spanned by monomial multiples.
fn span_dim(gens: &[Polynomial<PrimeField>], d: u16) -> usize {
    let basis = Monomial::all_of_degree(d);
    let mut rows = Vec::new();
    for g in gens {
        let Some(e) = g.homogeneous_degree() else { continue };
        if e > d {
            continue;
        }
        for m in Monomial::all_of_degree(d - e) {
            let prod = g.mul_term(&1, &m);
            rows.push(basis.iter().map(|b| prod.coefficient(b)).collect::<Vec<_>>());
        }
    }
    if rows.is_empty() {
        return 0;
    }
    Matrix::from_rows(&k(), &rows).rank()
}

#[test]
fn already_reduced_inputs() {
    let gb = buchberger(&k(), &FreeModule::free(1), &ideal(&["x0", "x1"]), ModuleOrder::default()).unwrap();
    assert_eq!(gb.polynomials(), vec![p("x1"), p("x0")]);

    let quads = ["x0*x2", "x0*x3", "x1*x2", "x1*x3"];
    let gb = GroebnerBasis::of_ideal(&k(), &quads.map(p)).unwrap();
    let mut got = gb.polynomials();
    got.sort_by_key(|q| alloc::format!("{q}"));
    let mut want: Vec<_> = quads.map(p).to_vec();
    want.sort_by_key(|q| alloc::format!("{q}"));
    assert_eq!(got, want);
}

#[test]
fn normal_form_examples() {
    let gb = GroebnerBasis::of_ideal(&k(), &[p("x2"), p("x3")]).unwrap();
    assert!(gb.normal_form(&ModuleElement::scalar(p("x0*x3 - x1*x2"))).unwrap().is_zero());
    let gb = GroebnerBasis::of_ideal(&k(), &[p("x1"), p("x2"), p("x3")]).unwrap();
    assert_eq!(gb.normal_form(&ModuleElement::scalar(p("x0^2"))).unwrap(), ModuleElement::scalar(p("x0^2")));
    let wrong_rank = ModuleElement::zero(&k(), 2);
    assert!(matches!(gb.normal_form(&wrong_rank), Err(Error::AmbientMismatch { .. })));
}

#[test]
fn inhomogeneous_rejected() {
    let r = GroebnerBasis::of_ideal(&k(), &[p("x0 + x1^2")]);
    assert_eq!(r.unwrap_err(), Error::Inhomogeneous);
}

#[test]
fn reduced_basis_is_order_independent() {
    let a = ["x0^2 - x1*x3", "x1^2 - x0*x2", "x0*x1 - x2*x3"];
    let mut b = a;
    b.reverse();
    let ga = GroebnerBasis::of_ideal(&k(), &a.map(p)).unwrap();
    let gb = GroebnerBasis::of_ideal(&k(), &b.map(p)).unwrap();
    assert_eq!(ga, gb);
}

#[test]
fn basis_spans_match_linear_algebra() {
    let gens = ["x0^2 - x1*x3", "x1^2 - x0*x2", "x0*x1 - x2*x3"].map(p);
    let gb = GroebnerBasis::of_ideal(&k(), &gens).unwrap();
    for d in 0..=6 {
        let leads: Vec<_> = gb.lead_terms().iter().map(|(m, _)| Polynomial::term(&k(), 1, *m)).collect();
        // the lead-term ideal and the ideal have the same Hilbert function
        assert_eq!(span_dim(&leads, d), span_dim(&gens, d), "degree {d}");
    }
}

#[test]
fn koszul_syzygy() {
    let syz = syzygy_module(&k(), &FreeModule::free(1), &ideal(&["x0", "x1"])).unwrap();
    assert_eq!(syz.columns().len(), 1);
    let s = &syz.columns()[0];
    let want = ModuleElement::from_components(vec![p("x1"), p("-x0")]);
    assert!(s == &want || s == &want.neg());
}

#[test]
fn two_skew_lines_have_four_linear_syzygies() {
    let gens = ideal(&["x0*x2", "x0*x3", "x1*x2", "x1*x3"]);
    let syz = syzygy_module(&k(), &FreeModule::free(1), &gens).unwrap();
    let keep = minimal_generators(&k(), syz.target(), &[], syz.columns()).unwrap();
    assert_eq!(keep.len(), 4);
    for &j in &keep {
        assert_eq!(syz.source().gen_degree(j), 3);
    }
    let gens_map = GradedMap::from_generators(&k(), FreeModule::free(1), gens).unwrap();
    for c in syz.columns() {
        assert!(gens_map.apply(c).is_zero());
    }
}

#[test]
fn resolutions_of_lines() {
    let one = ideal(&["x2", "x3"]);
    let r = free_resolution_of_subquotient(&k(), &FreeModule::free(1), &one, &[], true).unwrap();
    assert_eq!(r.betti(), BettiTable::from([((0, 1), 2), ((1, 2), 1)]));
    assert!(r.verify_exact().unwrap());

    let two = ideal(&["x0*x2", "x0*x3", "x1*x2", "x1*x3"]);
    let r = free_resolution_of_subquotient(&k(), &FreeModule::free(1), &two, &[], true).unwrap();
    assert_eq!(r.betti(), BettiTable::from([((0, 2), 4), ((1, 3), 4), ((2, 4), 1)]));
    assert!(r.verify_exact().unwrap());
    assert!(!r.has_unit_entries());
    let gens: Vec<_> = two.iter().map(|g| g.component(0).clone()).collect();
    for d in 0..8 {
        assert_eq!(r.euler_characteristic(d), span_dim(&gens, d as u16) as i64);
    }
}

#[test]
fn quotient_resolution_and_nonminimal_mode() {
    // S/(x0, x1^2) as a cokernel of S
    let rels = ideal(&["x0", "x1^2"]);
    let one = ideal(&["1"]);
    let r = free_resolution_of_subquotient(&k(), &FreeModule::free(1), &one, &rels, true).unwrap();
    assert_eq!(r.betti(), BettiTable::from([((0, 0), 1), ((1, 1), 1), ((1, 2), 1), ((2, 3), 1)]));
    assert!(r.verify_exact().unwrap());

    let gens = ideal(&["x0*x1", "x0*x2", "x1*x2", "x0*x1 + x1*x2"]);
    let nm = free_resolution_of_subquotient(&k(), &FreeModule::free(1), &gens, &[], false).unwrap();
    assert!(nm.verify_exact().unwrap());
    let m = free_resolution_of_subquotient(&k(), &FreeModule::free(1), &gens, &[], true).unwrap();
    for d in 0..7 {
        assert_eq!(nm.euler_characteristic(d), m.euler_characteristic(d));
    }
    assert!(nm.betti().values().sum::<usize>() > m.betti().values().sum::<usize>());
}

#[test]
fn lift_expresses_members() {
    let gens = ideal(&["x0*x2", "x1*x3"]);
    let map = GradedMap::from_generators(&k(), FreeModule::free(1), gens).unwrap();
    let target = ModuleElement::scalar(p("x0^2*x2 + 3*x1*x3^2"));
    let res = lift(&map, &[target.clone(), ModuleElement::scalar(p("x0^3"))]).unwrap();
    let coeffs = res[0].clone().unwrap();
    assert_eq!(map.apply(&coeffs), target);
    assert!(res[1].is_none());
}

#[test]
fn module_basis_in_rank_two() {
    // submodule of S^2 generated by (x0, x1) and (x2, x3)
    let gens = vec![
        ModuleElement::from_components(vec![p("x0"), p("x1")]),
        ModuleElement::from_components(vec![p("x2"), p("x3")]),
    ];
    let f = FreeModule::free(2);
    let gb = buchberger(&k(), &f, &gens, ModuleOrder::PositionOverTerm).unwrap();
    let member = gens[0].mul_poly(&p("x2")).sub(&gens[1].mul_poly(&p("x0")));
    assert!(gb.contains(&member).unwrap());
    assert!(!gb.contains(&ModuleElement::from_components(vec![p("x0"), p("0")])).unwrap());
    let syz = syzygy_module(&k(), &f, &gens).unwrap();
    assert!(syz.columns().is_empty());
}
