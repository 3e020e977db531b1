//! Degeneracy loci, the residual divisor `X`, and the ideal-theoretic lemmas on four and
//! five skew lines.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use serde::Serialize;

use super::report::{betti_json, elem_json, VerificationReport};
use super::sigma::{hp_strings, require_five};
use super::theta::ThetaMorphism;
use crate::algebra::field::Field;
use crate::algebra::poly::Polynomial;
use crate::commalg::{curve_invariants, CohomologyTable, GradedModule, Ideal};
use crate::error::{Error, Result};
use crate::geometry::{has_five_secant, quadric_through, subsets, transversals_of_four, FiveSecant, LineConfiguration, LineP3, Transversals};
use crate::groebner::BettiTable;

fn det<F: Field>(m: &[Vec<&Polynomial<F>>]) -> Polynomial<F> {
    match m.len() {
        1 => m[0][0].clone(),
        n => {
            let field = m[0][0].field();
            let mut acc = Polynomial::zero(field);
            for c in 0..n {
                let minor: Vec<Vec<&Polynomial<F>>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, p)| *p).collect()).collect();
                let term = m[0][c] * &det(&minor);
                acc = if c % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

/// Maximal minors of the matrix whose rows are the values of the given morphisms.
pub fn maximal_minors<F: Field>(rows: &[&[Polynomial<F>]]) -> Vec<Polynomial<F>> {
    let k = rows.len();
    subsets(rows[0].len(), k)
        .into_iter()
        .map(|cols| det(&rows.iter().map(|r| cols.iter().map(|&c| &r[c]).collect()).collect::<Vec<_>>()))
        .filter(|p| !p.is_zero())
        .collect()
}

/// The degeneracy scheme of `(theta_1, ..., theta_k)^t : Omega(1) -> k O(1)` for `k = 2, 3`:
/// the saturated ideal of maximal minors of the values on the Koszul generators.
pub fn degeneracy_ideal<F: Field>(thetas: &[&ThetaMorphism<F>]) -> Result<Ideal<F>> {
    if !(2..=3).contains(&thetas.len()) {
        return Err(Error::Dimension(format!("need 2 or 3 morphisms, got {}", thetas.len())));
    }
    for (x, y) in subsets(thetas.len(), 2).into_iter().map(|s| (s[0], s[1])) {
        if thetas[x].values() == thetas[y].values() {
            return Err(Error::Degenerate("repeated morphism".into()));
        }
    }
    let field = thetas[0].field();
    let rows: Vec<&[Polynomial<F>]> = thetas.iter().map(|t| t.values()).collect();
    Ideal::new(field, &maximal_minors(&rows))?.saturate_irrelevant()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum XShape {
    /// Two lines of the other ruling of `Q`, defined over the base field.
    TwoLines,
    /// A conjugate pair of lines, not defined over the base field.
    ConjugateLines,
    /// The divisor `2L` on `Q`: the fourth line is tangent to `Q`.
    DoubleLine,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XDivisor<F: Field> {
    pub ideal: Ideal<F>,
    pub shape: XShape,
}

/// The residual `X` in `Q ∩ Q' = L2 ∪ L3 ∪ X`, where `Q ⊃ L1, L2, L3` and `Q' ⊃ L2, L3, L4`.
pub fn x_divisor<F: Field>(lines: [&LineP3<F>; 4]) -> Result<XDivisor<F>> {
    let [l1, l2, l3, l4] = lines;
    let q = quadric_through(l1, l2, l3)?;
    let q2 = quadric_through(l2, l3, l4)?;
    if q.equation() == q2.equation() {
        return Err(Error::Degenerate("the four lines lie on a quadric".into()));
    }
    let shape = match transversals_of_four(lines)? {
        Transversals::Two(_) => XShape::TwoLines,
        Transversals::Tangent(_) => XShape::DoubleLine,
        Transversals::Conjugate => XShape::ConjugateLines,
        Transversals::Infinite => return Err(Error::Degenerate("the four lines lie on a quadric".into())),
    };
    let field = l1.field();
    let ci = Ideal::new(field, &[q.equation().clone(), q2.equation().clone()])?;
    let ideal = ci.saturate(&l2.ideal().intersection(&l3.ideal())?)?.saturate_irrelevant()?;
    Ok(XDivisor { ideal, shape })
}

fn expected_l1l4x() -> BettiTable {
    BettiTable::from([((0, 0), 1), ((1, 3), 4), ((2, 4), 3)])
}

/// The ideal of `L1 ∪ ... ∪ L4 ∪ X` has the resolution `0 -> 3 S(-4) -> 4 S(-3)`.
pub fn check_l1l4x_resolution<F: Field>(lines: [&LineP3<F>; 4]) -> Result<VerificationReport> {
    let field = lines[0].field();
    let mut report = VerificationReport::new("resolution", field);
    let x = x_divisor(lines)?;
    report.detail("x_shape", x.shape);
    report.detail("x_ideal", x.ideal.generators().iter().map(|p| p.to_string()).collect::<Vec<_>>());
    let x_hp = x.ideal.quotient_hilbert();
    report.assert("x_degree_two", x_hp.dimension() == Some(1) && x_hp.degree() == 2);
    let mut four = Ideal::unit(field);
    for l in lines {
        four = four.intersection(&l.ideal())?;
    }
    let z = four.intersection(&x.ideal)?;
    let betti = GradedModule::quotient_ring(&z, 0).free_resolution(true)?.betti();
    report.detail("betti", betti_json(&betti));
    report.assert("betti_table", betti == expected_l1l4x());
    let h0 = |i: &Ideal<F>| 20 - i.quotient_hilbert().hilbert_function(3);
    let (h0_z, h0_four) = (h0(&z), h0(&four));
    report.detail("h0_iz_3", h0_z);
    report.detail("h0_i4_3", h0_four);
    report.assert("h0_iz_3_is_4", h0_z == 4);
    report.assert("same_cubics", h0_z == h0_four);
    Ok(report)
}

/// `h^0(I_Y(3)) = h^1(I_Y(3)) = 0` and `h^0(O_Y(3)) = 20` for five skew lines.
pub fn check_cohomology_iy3<F: Field>(cfg: &LineConfiguration<F>) -> Result<VerificationReport> {
    require_five(cfg)?;
    let field = cfg.field();
    let mut report = VerificationReport::new("cohomology", field);
    report.detail("five_secant", has_five_secant(cfg)?.exists());
    let iy = cfg.ideal()?;
    let ideal_table = CohomologyTable::new(&GradedModule::from_ideal(&iy, 0))?;
    let ring_table = CohomologyTable::new(&GradedModule::quotient_ring(&iy, 0))?;
    let (h0, h1, h0_oy) = (ideal_table.h(0, 3), ideal_table.h(1, 3), ring_table.h(0, 3));
    report.detail("h0_iy_3", h0);
    report.detail("h1_iy_3", h1);
    report.detail("h0_oy_3", h0_oy);
    report.assert("h0_iy_3_zero", h0 == 0);
    report.assert("h1_iy_3_zero", h1 == 0);
    report.assert("h0_oy_3_is_20", h0_oy == 20);
    Ok(report)
}

fn finite_length<F: Field>(i: &Ideal<F>) -> Option<i64> {
    let h = i.quotient_hilbert();
    match h.dimension() {
        None => Some(0),
        Some(0) => crate::commalg::hilbert::integer(&h.coefficient(0)),
        Some(_) => None,
    }
}

/// `Q125 ∩ Q235 ∩ Q345 = L5 ∪ Γ2 ∪ Γ3` with `Γ2 ⊂ L2`, `Γ3 ⊂ L3` of length two each.
/// `order` relabels the lines first: new line `k` is old line `order[k]`.
pub fn triple_quadric<F: Field>(cfg: &LineConfiguration<F>, order: [usize; 5]) -> Result<VerificationReport> {
    require_five(cfg)?;
    let cfg = cfg.permuted(&order)?;
    let field = cfg.field();
    let mut report = VerificationReport::new("triple-quadric", field);
    report.detail("order", order.map(|k| k + 1));
    let qs = [cfg.quadric(0, 1, 4)?, cfg.quadric(1, 2, 4)?, cfg.quadric(2, 3, 4)?];
    let l5 = cfg.line(4).ideal();
    let mut contained = true;
    for q in &qs {
        contained &= l5.contains(q.equation())?;
    }
    report.assert("l5_in_every_quadric", contained);
    let z = Ideal::new(field, &qs.iter().map(|q| q.equation().clone()).collect::<Vec<_>>())?.saturate_irrelevant()?;
    report.detail("hilbert_polynomial", hp_strings(&z));
    let hp = z.quotient_hilbert();
    let five = num_rational::BigRational::from_integer(5.into());
    let one = num_rational::BigRational::from_integer(1.into());
    report.assert("hilbert_polynomial_t_plus_5", hp.hilbert_polynomial == vec![five, one]);
    match curve_invariants(&z) {
        Ok(inv) => {
            report.detail("curve_invariants", inv);
            report.assert("residual_length_4", inv.degree == 1 && inv.chi_cm == 1 && inv.length_t == 4);
        }
        Err(e) => {
            report.detail("curve_invariants_error", e.to_string());
            report.assert("residual_length_4", false);
        }
    }
    let residual = z.saturate(&l5)?;
    let parts = [(1usize, 2usize), (2, 1)];
    let mut split = Vec::new();
    let mut ok = finite_length(&residual) == Some(4);
    for (on, off) in parts {
        let part = residual.saturate(&cfg.line(off).ideal())?;
        let len = finite_length(&part);
        let supported = cfg.line(on).ideal().is_subset(&part)?;
        split.push((len, supported));
        ok &= len == Some(2) && supported;
    }
    report.detail("residual_split", split);
    report.assert("residual_two_plus_two", ok);
    Ok(report)
}

fn first_four<F: Field>(cfg: &LineConfiguration<F>) -> Result<[&LineP3<F>; 4]> {
    if cfg.len() < 4 {
        return Err(Error::Precondition(format!("need four lines, got {}", cfg.len())));
    }
    Ok(core::array::from_fn(|i| cfg.line(i)))
}

/// `Q ∩ Q' = L2 ∪ L3 ∪ X` with `X` of degree two, on the first four lines.
pub fn check_x_divisor<F: Field>(cfg: &LineConfiguration<F>) -> Result<VerificationReport> {
    let lines = first_four(cfg)?;
    let field = cfg.field();
    let mut report = VerificationReport::new("x-divisor", field);
    let x = x_divisor(lines)?;
    report.detail("x_shape", x.shape);
    report.detail("x_ideal", x.ideal.generators().iter().map(|p| p.to_string()).collect::<Vec<_>>());
    let h = x.ideal.quotient_hilbert();
    report.assert("x_degree_two", h.dimension() == Some(1) && h.degree() == 2);
    let q = quadric_through(lines[0], lines[1], lines[2])?;
    let q2 = quadric_through(lines[1], lines[2], lines[3])?;
    let ci = Ideal::new(field, &[q.equation().clone(), q2.equation().clone()])?.saturate_irrelevant()?;
    let union = lines[1].ideal().intersection(&lines[2].ideal())?.intersection(&x.ideal)?;
    report.assert("intersection_is_l2_l3_x", ci == union);
    if x.shape == XShape::DoubleLine {
        // the double structure sits between I_L^2 and I_L for the tangent transversal
        let line = match transversals_of_four(lines)? {
            Transversals::Tangent(m) => m.ideal(),
            _ => return Err(Error::Inconsistent("double line without a tangent transversal".into())),
        };
        report.assert("double_structure", x.ideal.is_subset(&line)? && line.product(&line)?.is_subset(&x.ideal)?);
    }
    Ok(report)
}

/// The degeneracy loci of `(theta12, theta34)` and `(theta12, theta23, theta34)` on the first
/// four lines.
pub fn check_degeneracy<F: Field>(cfg: &LineConfiguration<F>) -> Result<VerificationReport> {
    let lines = first_four(cfg)?;
    let field = cfg.field();
    let mut report = VerificationReport::new("degeneracy", field);
    let t = |i, j| super::theta::theta(cfg, i, j);
    let (t12, t23, t34) = (t(0, 1)?, t(1, 2)?, t(2, 3)?);
    let x = x_divisor(lines)?;
    let mut z = x.ideal.clone();
    for l in lines {
        z = z.intersection(&l.ideal())?;
    }
    let two = degeneracy_ideal(&[&t12, &t34])?;
    report.detail("two_minors_hilbert_polynomial", hp_strings(&two));
    report.assert("two_minors_is_l1_l4_x", two == z);
    let q123 = cfg.quadric(0, 1, 2)?.equation().clone();
    let q234 = cfg.quadric(1, 2, 3)?.equation().clone();
    let three = degeneracy_ideal(&[&t12, &t23, &t34])?;
    report.assert("three_minors_is_q123_q234", three == Ideal::new(field, &[&q123 * &q234])?);
    Ok(report)
}

/// Passes iff no line meets five of the lines.
pub fn check_five_secant<F: Field>(cfg: &LineConfiguration<F>) -> Result<VerificationReport> {
    let field = cfg.field();
    let mut report = VerificationReport::new("five-secant", field);
    let found = has_five_secant(cfg)?;
    match &found {
        FiveSecant::Witness(w) => {
            report.detail("witness", w.to_string());
            report.detail("witness_plucker", w.plucker().iter().map(|c| elem_json(field, c)).collect::<Vec<_>>());
            report.detail("witness_meets", cfg.lines().iter().map(|l| l.meets(w)).collect::<Vec<_>>());
        }
        FiveSecant::OverExtension => report.detail("witness", "defined over a quadratic extension"),
        FiveSecant::None => {}
    }
    report.assert("no_five_secant", !found.exists());
    Ok(report)
}
