use instanton_core::algebra::linalg::Matrix;
use instanton_core::commalg::{cocycle_basis, extension_pushout, CohomologyTable, GradedModule, Ideal, SyzygyData};
use instanton_core::constructions::{kernel_chern, sigma};
use instanton_core::geometry::{
    has_five_secant, quadric_through, quadric_through_sampled, random_line, random_skew_config, ruling_line, subsets,
    transversals_of_four, FiveSecant, LineP3, RulingFamily, RulingParam,
};
use instanton_core::groebner::{FreeModule, GroebnerBasis, ModuleElement};
use instanton_core::{Field, Monomial, Polynomial, PrimeField, Rationals};
use proptest::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

const P: u64 = 32003;

fn k() -> PrimeField {
    PrimeField::default()
}

/// Up to `n` terms of degree `d`, coefficients in GF(p).
fn homogeneous(d: u16, n: usize) -> impl Strategy<Value = Polynomial<PrimeField>> {
    let count = Monomial::all_of_degree(d).len();
    prop::collection::vec((0..count, 0..P), 1..=n).prop_map(move |terms| {
        let monos = Monomial::all_of_degree(d);
        Polynomial::from_terms(&k(), terms.into_iter().map(|(i, c)| (c, monos[i])))
    })
}

fn any_poly() -> impl Strategy<Value = Polynomial<PrimeField>> {
    (0u16..4).prop_flat_map(|d| homogeneous(d, 5))
}

fn small_ideal() -> impl Strategy<Value = Vec<Polynomial<PrimeField>>> {
    prop::collection::vec((1u16..=2).prop_flat_map(|d| homogeneous(d, 4)), 1..=3)
        .prop_map(|gens| gens.into_iter().filter(|g| !g.is_zero()).collect::<Vec<_>>())
        .prop_filter("nonzero generators", |g| !g.is_empty())
}

/// Coordinates of the degree-`d` multiples `m g` in the monomial basis of `S_d`.
fn multiples(gens: &[Polynomial<PrimeField>], d: u16) -> Vec<Vec<u64>> {
    let basis = Monomial::all_of_degree(d);
    let mut rows = Vec::new();
    for g in gens {
        let e = g.homogeneous_degree().unwrap();
        if e > d {
            continue;
        }
        for m in Monomial::all_of_degree(d - e) {
            let h = g.mul_term(&1, &m);
            rows.push(basis.iter().map(|b| h.coefficient(b)).collect());
        }
    }
    rows
}

/// `f` in the ideal by linear algebra in degree `deg f`.
fn in_span(gens: &[Polynomial<PrimeField>], f: &Polynomial<PrimeField>) -> bool {
    let d = f.homogeneous_degree().unwrap_or(0);
    let rows = multiples(gens, d);
    if rows.is_empty() {
        return f.is_zero();
    }
    let rank = Matrix::from_rows(&k(), &rows).rank();
    let basis = Monomial::all_of_degree(d);
    let mut with = rows.clone();
    with.push(basis.iter().map(|b| f.coefficient(b)).collect());
    Matrix::from_rows(&k(), &with).rank() == rank
}

fn hf_by_linear_algebra(gens: &[Polynomial<PrimeField>], d: u16) -> i64 {
    let total = Monomial::all_of_degree(d).len() as i64;
    let rows = multiples(gens, d);
    if rows.is_empty() {
        total
    } else {
        total - Matrix::from_rows(&k(), &rows).rank() as i64
    }
}

fn to_prime(f: &Polynomial<Rationals>) -> Option<Polynomial<PrimeField>> {
    let gf = k();
    let terms: Option<Vec<_>> = f.terms().iter().map(|(c, m)| gf.from_ratio(c.numer(), c.denom()).ok().map(|x| (x, *m))).collect();
    Some(Polynomial::from_terms(&gf, terms?))
}

fn small_rational() -> impl Strategy<Value = Polynomial<Rationals>> {
    (0u16..3).prop_flat_map(|d| {
        let count = Monomial::all_of_degree(d).len();
        prop::collection::vec((0..count, -9i64..=9, 1i64..=5), 1..=4).prop_map(move |terms| {
            let monos = Monomial::all_of_degree(d);
            Polynomial::from_terms(
                &Rationals,
                terms.into_iter().map(|(i, n, q)| {
                    let r = Rationals.div(&Rationals.from_i64(n), &Rationals.from_i64(q)).unwrap();
                    (r, monos[i])
                }),
            )
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(f in any_poly(), g in any_poly(), h in any_poly()) {
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
    }

    #[test]
    fn degrees_add(f in any_poly(), g in any_poly()) {
        let prod = &f * &g;
        match (f.homogeneous_degree(), g.homogeneous_degree()) {
            (Some(a), Some(b)) => prop_assert_eq!(prod.homogeneous_degree(), Some(a + b)),
            _ => prop_assert!(prod.is_zero()),
        }
    }

    #[test]
    fn rationals_reduce_mod_p(f in small_rational(), g in small_rational()) {
        let (fp, gp) = (to_prime(&f).unwrap(), to_prime(&g).unwrap());
        prop_assert_eq!(to_prime(&(&f * &g)).unwrap(), &fp * &gp);
        prop_assert_eq!(to_prime(&(&f + &g)).unwrap(), &fp + &gp);
    }

    #[test]
    fn membership_matches_linear_algebra(
        gens in small_ideal(),
        cofactors in prop::collection::vec(any_poly(), 3),
        noise in homogeneous(4, 3),
        mix in any::<bool>(),
    ) {
        let ideal = Ideal::new(&k(), &gens).unwrap();
        // a degree 4 combination, optionally perturbed
        let mut f = Polynomial::zero(&k());
        for (g, c) in gens.iter().zip(&cofactors) {
            let e = g.homogeneous_degree().unwrap();
            let c = c.terms().iter().filter(|(_, m)| m.degree() + e == 4).fold(Polynomial::zero(&k()), |acc, (x, m)| &acc + &Polynomial::term(&k(), *x, *m));
            f = &f + &(&c * g);
        }
        if mix {
            f = &f + &noise;
        }
        prop_assert_eq!(ideal.contains(&f).unwrap(), in_span(&gens, &f));
        prop_assert_eq!(ideal.contains(&noise).unwrap(), in_span(&gens, &noise));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn reduced_basis_is_unique(gens in small_ideal()) {
        let mut rev = gens.clone();
        rev.reverse();
        let a = GroebnerBasis::of_ideal(&k(), &gens).unwrap();
        let b = GroebnerBasis::of_ideal(&k(), &rev).unwrap();
        prop_assert!(a.is_reduced());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn hilbert_function_matches_linear_algebra(gens in small_ideal()) {
        let h = Ideal::new(&k(), &gens).unwrap().quotient_hilbert();
        for d in 0..=8u16 {
            prop_assert_eq!(h.hilbert_function(d as i32), hf_by_linear_algebra(&gens, d));
        }
    }

    #[test]
    fn resolutions_are_exact(gens in small_ideal()) {
        let m = GradedModule::quotient_ring(&Ideal::new(&k(), &gens).unwrap(), 0);
        let res = m.free_resolution(true).unwrap();
        prop_assert!(res.verify_exact().unwrap());
        prop_assert!(!res.has_unit_entries());
        let h = m.hilbert().unwrap();
        for d in -2..=10 {
            prop_assert_eq!(res.euler_characteristic(d), h.hilbert_function(d));
        }
    }

    #[test]
    fn saturation_is_idempotent_and_extensive(gens in small_ideal()) {
        let i = Ideal::new(&k(), &gens).unwrap();
        let s = i.saturate_irrelevant().unwrap();
        prop_assert!(i.is_subset(&s).unwrap());
        prop_assert_eq!(s.saturate_irrelevant().unwrap(), s.clone());
        prop_assert!(s.is_saturated().unwrap());
    }

    #[test]
    fn plucker_and_incidence(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (random_line(&k(), &mut rng), random_line(&k(), &mut rng));
        prop_assert_eq!(a.plucker_relation(), 0);
        prop_assert_eq!(a.meets(&b), a.pairing(&b) == 0);
        let meet = a.ideal().sum(&b.ideal()).unwrap().saturate_irrelevant().unwrap();
        prop_assert_eq!(a.meets(&b), !meet.is_unit());
        // a line through a point of `a` meets it
        let p = a.point(&1, &(seed % P));
        let q: [u64; 4] = core::array::from_fn(|i| (seed >> (8 * i)) % P);
        if let Ok(m) = LineP3::new(&k(), p, q) {
            prop_assert!(m.meets(&a));
            prop_assert_eq!(a.pairing(&m), 0);
        }
    }

    #[test]
    fn quadric_ignores_sample_points(seed in any::<u64>(), s in prop::array::uniform9((1i64..50, 1i64..50))) {
        let cfg = random_skew_config(&k(), 3, seed).unwrap();
        let ls = [cfg.line(0), cfg.line(1), cfg.line(2)];
        let samples = [[(1, 0), s[0], s[1]], [(0, 1), s[2], s[3]], [s[4], s[5], (1, 1)]];
        // repeated sample points make the system underdetermined, which is rejected
        match quadric_through_sampled(ls, samples) {
            Ok(q) => prop_assert_eq!(q, quadric_through(ls[0], ls[1], ls[2]).unwrap()),
            Err(_) => prop_assume!(false),
        }
    }

    #[test]
    fn opposite_rulings_meet_all_three(seed in any::<u64>(), t in 0..P) {
        let cfg = random_skew_config(&k(), 3, seed).unwrap();
        let q = cfg.quadric(0, 1, 2).unwrap();
        match ruling_line(&q, cfg.line(0), RulingFamily::B, &RulingParam::Value(t)) {
            Ok(m) => {
                for l in cfg.lines() {
                    prop_assert!(m.meets(l));
                }
            }
            // lines of one family are rational exactly when the other's are
            Err(_) => prop_assume!(false),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn no_five_secant_means_no_transversal_meets_the_fifth(seed in any::<u64>()) {
        let cfg = random_skew_config(&k(), 5, seed).unwrap();
        prop_assert_eq!(has_five_secant(&cfg).unwrap(), FiveSecant::None);
        for sub in subsets(5, 4) {
            let fifth = (0..5).find(|i| !sub.contains(i)).unwrap();
            let ls: [&LineP3<PrimeField>; 4] = core::array::from_fn(|i| cfg.line(sub[i]));
            if let Some(ts) = transversals_of_four(ls).unwrap().rational_lines() {
                prop_assert!(ts.iter().all(|t| !t.meets(cfg.line(fifth))));
            }
        }
    }

    #[test]
    fn sigma_image_always_in_ideal(seed in any::<u64>(), a in prop::array::uniform3(prop_oneof![Just(0u64), 1..P])) {
        let cfg = random_skew_config(&k(), 5, seed).unwrap();
        let iy = cfg.ideal().unwrap();
        let s = sigma(&cfg, a).unwrap();
        for v in s.values() {
            prop_assert!(iy.contains(v).unwrap());
        }
    }

    #[test]
    fn kernel_chern_on_onto_sigma(seed in any::<u64>()) {
        let cfg = random_skew_config(&k(), 5, seed).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let a = core::array::from_fn(|_| k().sample_nonzero(&mut rng));
        let s = sigma(&cfg, a).unwrap();
        let z = s.saturated_image().unwrap();
        prop_assert_eq!(&z, &cfg.ideal().unwrap());
        let c = kernel_chern(&z).unwrap();
        let inv = instanton_core::commalg::curve_invariants(&z).unwrap();
        prop_assert_eq!(c.c3 == 0, inv.length_t == 0);
        prop_assert_eq!(c.c3, 0);
    }

    #[test]
    fn extensions_are_additive(seed in any::<u64>(), coeffs in prop::collection::vec(0..P, 64)) {
        let cfg = random_skew_config(&k(), 2, seed).unwrap();
        let b = GradedModule::from_ideal(&cfg.ideal().unwrap(), 1).minimalize().unwrap();
        let a = GradedModule::free(&k(), FreeModule::new(vec![-1]));
        let data = SyzygyData::new(&b).unwrap();
        let basis = cocycle_basis(&data, a.ambient(), &k()).unwrap();
        let class: Vec<ModuleElement<PrimeField>> = (0..data.syzygies.len())
            .map(|i| {
                basis.iter().zip(coeffs.iter().cycle()).fold(ModuleElement::zero(&k(), 1), |acc, (v, c)| acc.add(&v[i].scale(c)))
            })
            .collect();
        let e = extension_pushout(&b, &a, &data, &class).unwrap();
        let (he, hb, ha) = (e.hilbert().unwrap(), b.hilbert().unwrap(), a.hilbert().unwrap());
        for d in -3..=10 {
            prop_assert_eq!(he.hilbert_function(d), hb.hilbert_function(d) + ha.hilbert_function(d));
        }
        let zero: Vec<_> = class.iter().map(|_| ModuleElement::zero(&k(), 1)).collect();
        let split = extension_pushout(&b, &a, &data, &zero).unwrap();
        let sum = b.direct_sum(&a).unwrap();
        prop_assert_eq!(split.free_resolution(true).unwrap().betti(), sum.free_resolution(true).unwrap().betti());
    }
}

fn binom3(n: i64) -> i64 {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

#[test]
fn serre_duality_on_line_bundles() {
    let o = GradedModule::free(&k(), FreeModule::new(vec![0]));
    let table = CohomologyTable::new(&o).unwrap();
    for d in -6..=6 {
        for i in 0..=3 {
            assert_eq!(table.h(i, d), table.h(3 - i, -4 - d), "h^{i}(O({d}))");
        }
        assert_eq!(table.h(0, d), binom3(d as i64 + 3));
        assert_eq!(table.h(3, d), binom3(-d as i64 - 1));
        assert_eq!(table.h(1, d), 0);
        assert_eq!(table.h(2, d), 0);
    }
}
