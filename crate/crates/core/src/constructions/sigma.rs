//! `sigma = a1 q345 theta12 + a2 q145 theta23 + a3 q125 theta34 : Omega(1) -> O(3)` and the
//! check that its image is the ideal sheaf of the five lines.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use super::report::VerificationReport;
use super::theta::{theta, ThetaMorphism};
use crate::algebra::field::Field;
use crate::algebra::poly::Polynomial;
use crate::commalg::{chern_of_kernel, curve_invariants, ChernRecord, Ideal};
use crate::error::{Error, Result};
use crate::geometry::{has_five_secant, LineConfiguration};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaMorphism<F: Field> {
    pub a: [F::Elem; 3],
    /// `q345, q145, q125`.
    pub quadrics: [Polynomial<F>; 3],
    /// `theta12, theta23, theta34`.
    pub thetas: [ThetaMorphism<F>; 3],
    values: Vec<Polynomial<F>>,
    config: LineConfiguration<F>,
}

impl<F: Field> SigmaMorphism<F> {
    /// Values on the Koszul generators `x_p ^ x_q`: quartics, i.e. sections of `I_Y(3)` in
    /// degree one.
    pub fn values(&self) -> &[Polynomial<F>] {
        &self.values
    }

    pub fn config(&self) -> &LineConfiguration<F> {
        &self.config
    }

    pub fn field(&self) -> &F {
        self.config.field()
    }

    /// The ideal generated by the six values, not saturated.
    pub fn image_ideal(&self) -> Result<Ideal<F>> {
        Ideal::new(self.field(), &self.values)
    }

    pub fn saturated_image(&self) -> Result<Ideal<F>> {
        self.image_ideal()?.saturate_irrelevant()
    }
}

pub(crate) fn require_five<F: Field>(cfg: &LineConfiguration<F>) -> Result<()> {
    if cfg.len() != 5 {
        return Err(Error::Precondition(format!("need five lines, got {}", cfg.len())));
    }
    cfg.require_skew()
}

/// Builds `sigma` for five skew lines without a 5-secant.
pub fn sigma<F: Field>(cfg: &LineConfiguration<F>, a: [F::Elem; 3]) -> Result<SigmaMorphism<F>> {
    require_five(cfg)?;
    if has_five_secant(cfg)?.exists() {
        return Err(Error::Precondition("the lines admit a 5-secant".into()));
    }
    let f = cfg.field();
    let quadrics = [
        cfg.quadric(2, 3, 4)?.equation().clone(),
        cfg.quadric(0, 3, 4)?.equation().clone(),
        cfg.quadric(0, 1, 4)?.equation().clone(),
    ];
    let thetas = [theta(cfg, 0, 1)?, theta(cfg, 1, 2)?, theta(cfg, 2, 3)?];
    let values = (0..6)
        .map(|k| {
            (0..3).fold(Polynomial::zero(f), |acc, t| acc + thetas[t].values()[k].scale(&a[t]) * quadrics[t].clone())
        })
        .collect();
    Ok(SigmaMorphism { a, quadrics, thetas, values, config: cfg.clone() })
}

/// Passes iff the saturated image equals `I_Y` and the kernel has `c3 = 0`.
pub fn sigma_is_epi<F: Field>(sigma: &SigmaMorphism<F>) -> Result<VerificationReport> {
    let f = sigma.field();
    let mut report = VerificationReport::new("sigma-epi", f).with_a(f, &sigma.a);
    let iy = sigma.config.ideal()?;
    let image = sigma.image_ideal()?;
    report.detail("image", sigma.values.iter().map(|p| p.to_string()).collect::<Vec<String>>());
    report.assert("image_in_ideal", image.is_subset(&iy)?);
    let sat = image.saturate_irrelevant()?;
    let equal = sat == iy;
    report.assert("saturated_image_equals_ideal", equal);
    report.detail("saturated_image_hilbert_polynomial", hp_strings(&sat));
    report.detail("ideal_hilbert_polynomial", hp_strings(&iy));
    report.detail("saturated_image_min_generators", sat.minimal_generators()?.len());
    if !equal {
        report.detail("strictly_smaller", sat.is_subset(&iy)?);
    }
    match kernel_chern(&sat) {
        Ok(record) => {
            report.detail("chern", record);
            report.assert("kernel_c3_zero", record.c3 == 0);
        }
        Err(e) => {
            report.detail("chern_error", e.to_string());
            report.assert("kernel_c3_zero", false);
        }
    }
    Ok(report)
}

/// Chern classes of the kernel of `Omega(1) -> I_Z(3)` for a saturated ideal `I_Z`.
pub fn kernel_chern<F: Field>(iz: &Ideal<F>) -> Result<ChernRecord> {
    let inv = curve_invariants(iz)?;
    chern_of_kernel(&ChernRecord::omega_one(), 3, inv.degree, inv.chi_cm, inv.length_t)
}

pub(crate) fn hp_strings<F: Field>(ideal: &Ideal<F>) -> Vec<String> {
    ideal.quotient_hilbert().hilbert_polynomial.iter().map(|c| c.to_string()).collect()
}

/// Coefficient triples drawn by [`general_sigma`] before it reports a failure.
pub const SIGMA_RETRIES: usize = 10;

/// `sigma` with random nonzero coefficients drawn from `seed`, redrawn while
/// [`sigma_is_epi`] fails. Returns the last attempt when none passes.
pub fn general_sigma<F: Field>(cfg: &LineConfiguration<F>, seed: u64) -> Result<(SigmaMorphism<F>, VerificationReport)> {
    let f = cfg.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = None;
    for attempt in 1..=SIGMA_RETRIES {
        let a = core::array::from_fn(|_| f.sample_nonzero(&mut rng));
        let s = sigma(cfg, a)?;
        let mut report = sigma_is_epi(&s)?.with_seed(seed);
        report.detail("attempts", attempt);
        if report.passed() {
            return Ok((s, report));
        }
        last = Some((s, report));
    }
    Ok(last.expect("at least one attempt"))
}
