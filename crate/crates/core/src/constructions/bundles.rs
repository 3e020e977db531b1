//! The sheaf `G` of the existence argument, 't Hooft instantons, and the instanton and
//! global generation predicates.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::report::{betti_json, VerificationReport};
use super::sigma::SigmaMorphism;
use crate::algebra::field::Field;
use crate::algebra::monomial::Monomial;
use crate::algebra::poly::Polynomial;
use crate::commalg::hilbert::integer;
use crate::commalg::{chern_from_hilbert, cocycle_basis, extension_pushout, CohomologyTable, GradedModule, ModuleKind, SyzygyData};
use crate::error::{Error, Result};
use crate::geometry::{LineConfiguration, LineP3, PLUCKER_PAIRS};
use crate::groebner::{kernel_generators, minimal_generators, BettiTable, FreeModule, GradedMap, ModuleElement};

/// Extension classes tried before giving up on local freeness.
pub const CLASS_RETRIES: usize = 20;

fn binom3(k: i32) -> i64 {
    if k < 0 {
        0
    } else {
        let k = k as i64;
        (k + 1) * (k + 2) * (k + 3) / 6
    }
}

/// The submodule generated by the degree-`d` part of `m`.
pub fn degree_part_submodule<F: Field>(m: &GradedModule<F>, d: i32) -> Result<GradedModule<F>> {
    let field = m.field();
    let mut gens = Vec::new();
    for (g, e) in m.generators().iter().zip(m.generator_degrees()) {
        if e <= d {
            for mono in Monomial::all_of_degree((d - e) as u16) {
                gens.push(g.mul_poly(&Polynomial::term(field, field.one(), mono)));
            }
        }
    }
    GradedModule::new(field, m.ambient().clone(), gens, m.relations().to_vec(), m.kind())
}

fn global_generation_with<F: Field>(m: &GradedModule<F>, d: i32, table: &CohomologyTable) -> Result<bool> {
    if table.local(1, d) != 0 {
        return Err(Error::Unsupported(format!(
            "the module misses {} sections in degree {d}; pass its saturation",
            table.local(1, d)
        )));
    }
    let sub = degree_part_submodule(m, d)?;
    Ok(sub.hilbert()?.hilbert_polynomial == m.hilbert()?.hilbert_polynomial)
}

/// Whether `M~(d)` is generated by its global sections, for a module whose degree-`d`
/// part already contains all of them.
pub fn verify_global_generation<F: Field>(m: &GradedModule<F>, d: i32) -> Result<bool> {
    global_generation_with(m, d, &CohomologyTable::new(m)?)
}

/// The Koszul generators `x_p e_q - x_q e_p` of `Omega(1)` inside `S^4`.
pub fn koszul_map<F: Field>(field: &F) -> GradedMap<F> {
    let cols = PLUCKER_PAIRS
        .iter()
        .map(|&(p, q)| {
            let mut comps = vec![Polynomial::zero(field); 4];
            comps[q] = Polynomial::var(field, p);
            comps[p] = -Polynomial::var(field, q);
            ModuleElement::from_components(comps)
        })
        .collect();
    GradedMap::new(field, FreeModule::new(vec![-1; 6]), FreeModule::new(vec![0; 4]), cols).expect("degree one columns")
}

/// `G = S^4 / Ker(sigma)`, with `Ker(sigma)` inside `Omega(1) ⊂ S^4`.
pub fn build_g<F: Field>(sigma: &SigmaMorphism<F>) -> Result<(GradedModule<F>, VerificationReport)> {
    let field = sigma.field();
    let iy = sigma.config().ideal()?;
    let j = sigma.image_ideal()?;
    if j.saturate_irrelevant()? != iy {
        return Err(Error::Precondition("sigma is not an epimorphism onto I_Y(3)".into()));
    }
    let mut report = VerificationReport::new("build-g", field).with_a(field, &sigma.a);
    let koszul = koszul_map(field);
    let cols = sigma.values().iter().map(|v| ModuleElement::scalar(v.clone())).collect();
    let smap = GradedMap::new(field, FreeModule::new(vec![-1; 6]), FreeModule::new(vec![3]), cols)?;
    let kernel: Vec<_> = kernel_generators(&smap, &[])?.iter().map(|k| koszul.apply(k)).filter(|v| !v.is_zero()).collect();
    let s4 = FreeModule::new(vec![0; 4]);
    let kernel: Vec<_> = minimal_generators(field, &s4, &[], &kernel)?.into_iter().map(|k| kernel[k].clone()).collect();
    let g = GradedModule::new(field, FreeModule::new(vec![0; 4]), (0..4).map(|i| ModuleElement::unit(field, 4, i)).collect(), kernel, ModuleKind::Quotient)?;

    // 0 -> J(3) -> G -> m(1) -> 0 with J the unsaturated image
    let gh = g.hilbert()?;
    let jh = j.quotient_hilbert();
    let ih = iy.quotient_hilbert();
    let mut additive = true;
    let mut literal = Vec::new();
    for d in -2..=6 {
        let hf_j = binom3(d + 3) - jh.hilbert_function(d + 3);
        let hf_m = binom3(d + 1) - i64::from(d + 1 == 0);
        additive &= gh.hilbert_function(d) == hf_j + hf_m;
        let hf_iy = binom3(d + 3) - ih.hilbert_function(d + 3);
        literal.push((d, gh.hilbert_function(d) - hf_iy - binom3(d + 1)));
    }
    report.assert("hf_additivity", additive);
    report.detail("hf_minus_iy3_plus_o1", literal);
    let int = |n: i64| num_rational::BigRational::from_integer(n.into());
    let hp_ok = (0..4).all(|t: i32| {
        gh.hilbert_polynomial_at(t as i64) == int(binom3(t + 3)) - ih.hilbert_polynomial_at(t as i64 + 3) + int(binom3(t + 1))
    });
    report.assert("hp_additivity", hp_ok);

    let table = CohomologyTable::new(&g)?;
    let h0 = table.h(0, 0);
    let regular = [table.h(1, 0), table.h(2, -1), table.h(3, -2)];
    report.detail("h0_g", h0);
    report.detail("regularity_triple", regular);
    report.assert("h0_g_is_4", h0 == 4);
    report.assert("one_regular", regular == [0, 0, 0]);
    let sections_ok = (0..=6).all(|d| table.h(0, d) == binom3(d + 3) - ih.hilbert_function(d + 3) + binom3(d + 1));
    report.assert("h0_additivity", sections_ok);
    match global_generation_with(&g, 0, &table) {
        Ok(gg) => {
            report.assert("globally_generated", gg);
        }
        Err(e) => {
            report.detail("global_generation_error", e.to_string());
            report.assert("globally_generated", false);
        }
    }
    Ok((g, report))
}

fn general_shape() -> BettiTable {
    BettiTable::from([((0, 2), 4), ((0, 3), 4), ((1, 4), 10), ((2, 5), 4)])
}

fn instanton_report<F: Field>(m: &GradedModule<F>, check: &str) -> Result<(VerificationReport, CohomologyTable)> {
    let field = m.field();
    let h = m.hilbert()?;
    let chern = chern_from_hilbert(&h)?;
    if chern.rank != 2 {
        return Err(Error::Dimension(format!("expected a rank 2 sheaf, got rank {}", chern.rank)));
    }
    let mut report = VerificationReport::new(check, field);
    let res = m.free_resolution(true)?;
    let table = CohomologyTable::from_resolution(m, &res)?;
    report.detail("chern", chern);
    report.detail("c2", chern.c2);
    report.assert("c1_zero", chern.c1 == 0);
    let hi: Vec<i64> = (0..4).map(|i| table.h(i, -2)).collect();
    report.detail("h_f_minus_2", &hi);
    report.assert("h_f_minus_2_zero", hi.iter().all(|&x| x == 0));
    let chi = integer(&h.hilbert_polynomial_at(-2));
    report.detail("chi_f_minus_2", chi);
    report.assert("chi_f_minus_2_zero", chi == Some(0));
    let (h0m1, h0) = (table.h(0, -1), table.h(0, 0));
    report.detail("h0_f_minus_1", h0m1);
    report.detail("h0_f", h0);
    let branch = if h0m1 != 0 {
        "h0(F(-1)) != 0"
    } else if h0 != 0 {
        "h0(F) != 0"
    } else {
        "h0(F) = 0"
    };
    report.detail("branch", branch);
    report.assert("h0_f_zero", h0 == 0);
    let locally_free = (1..=3).all(|j| table.dual(j).dimension().is_none());
    report.assert("locally_free", locally_free);
    let betti = res.betti();
    report.detail("betti", betti_json(&betti));
    report.detail("general_resolution_shape", betti == general_shape());
    Ok((report, table))
}

/// Instanton conditions for the sheaf of a graded module of rank two.
pub fn verify_instanton<F: Field>(m: &GradedModule<F>) -> Result<VerificationReport> {
    Ok(instanton_report(m, "instanton")?.0)
}

fn thooft_setup<F: Field>(lines: &[LineP3<F>]) -> Result<(GradedModule<F>, GradedModule<F>, SyzygyData<F>)> {
    let Some(first) = lines.first() else {
        return Err(Error::Precondition("no lines given".into()));
    };
    let field = first.field();
    let cfg = LineConfiguration::new(field, lines.to_vec())?;
    cfg.require_skew()?;
    let b = GradedModule::from_ideal(&cfg.ideal()?, 1).minimalize()?;
    let a = GradedModule::free(field, FreeModule::new(vec![-1]));
    let data = SyzygyData::new(&b)?;
    Ok((b, a, data))
}

fn thooft_report<F: Field>(e: &GradedModule<F>, n: i64) -> Result<VerificationReport> {
    let (mut report, table) = instanton_report(e, "thooft")?;
    report.detail("n", n);
    report.assert("c2_is_n", report.details.get("c2").and_then(|v| v.as_i64()) == Some(n));
    let h0_1 = table.h(0, 1);
    report.detail("h0_f_1", h0_1);
    report.assert("h0_f_1_positive", h0_1 >= 1);
    Ok(report)
}

/// The extension `0 -> O(-1) -> F -> I_Y(1) -> 0` for a given class, one value in `S(-1)` per
/// syzygy of the generators of `I_Y(1)`.
pub fn thooft_from_class<F: Field>(lines: &[LineP3<F>], class: &[ModuleElement<F>]) -> Result<(GradedModule<F>, VerificationReport)> {
    let (b, a, data) = thooft_setup(lines)?;
    let e = extension_pushout(&b, &a, &data, class)?;
    let report = thooft_report(&e, lines.len() as i64 - 1)?;
    Ok((e, report))
}

/// Uniform over GF(p); small integers over the rationals, where larger ones make the
/// Gröbner bases of the extension explode.
fn class_coefficient<F: Field>(field: &F, rng: &mut ChaCha8Rng) -> F::Elem {
    if field.characteristic() == 0 {
        field.from_i64(i64::from(rng.next_u32() % 7) - 3)
    } else {
        field.sample(rng)
    }
}

/// A 't Hooft `n`-instanton from `n + 1` skew lines, with a random extension class drawn
/// from `class_seed` and redrawn until the sheaf is locally free.
pub fn thooft_instanton<F: Field>(lines: &[LineP3<F>], class_seed: u64) -> Result<(GradedModule<F>, VerificationReport)> {
    let (b, a, data) = thooft_setup(lines)?;
    let field = b.field();
    let basis = cocycle_basis(&data, a.ambient(), field)?;
    let mut rng = ChaCha8Rng::seed_from_u64(class_seed);
    let n = lines.len() as i64 - 1;
    for attempt in 0..CLASS_RETRIES {
        let coeffs: Vec<F::Elem> = basis.iter().map(|_| class_coefficient(field, &mut rng)).collect();
        let class: Vec<ModuleElement<F>> = (0..data.syzygies.len())
            .map(|k| {
                basis.iter().zip(&coeffs).fold(ModuleElement::zero(field, 1), |acc, (v, c)| acc.add(&v[k].scale(c)))
            })
            .collect();
        let e = extension_pushout(&b, &a, &data, &class)?;
        let mut report = thooft_report(&e, n)?;
        if report.assertion("locally_free") == Some(true) {
            report.seed = Some(class_seed);
            report.detail("class_attempts", attempt + 1);
            return Ok((e, report));
        }
    }
    Err(Error::Exhausted(CLASS_RETRIES))
}
