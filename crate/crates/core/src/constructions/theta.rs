//! The morphisms `theta_ij : Omega(1) -> O(1)` attached to two skew lines, given by their
//! values on the Koszul generators `x_p ^ x_q` of `Omega(2)`.

use alloc::vec::Vec;

use crate::algebra::field::Field;
use crate::algebra::linalg::Matrix;
use crate::algebra::poly::Polynomial;
use crate::commalg::Ideal;
use crate::error::{Error, Result};
use crate::geometry::{LineConfiguration, LineP3, Point, PLUCKER_PAIRS};

/// `Theta(h ^ h') = h alpha(h') - h' alpha(h)` with `alpha = -id` on the linear forms
/// vanishing on `L_i` and `+id` on those vanishing on `L_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaMorphism<F: Field> {
    /// Line indices, 0-based.
    pub i: usize,
    pub j: usize,
    field: F,
    basis: [Point<F>; 4],
    /// Row `k` is `alpha(x_k)`.
    alpha: Matrix<F>,
    values: Vec<Polynomial<F>>,
}

impl<F: Field> ThetaMorphism<F> {
    /// `h0, h1` are the canonical forms of `li`, `h2, h3` those of `lj`.
    pub fn from_lines(li: &LineP3<F>, lj: &LineP3<F>, i: usize, j: usize) -> Result<Self> {
        let field = li.field().clone();
        if field.characteristic() == 2 {
            return Err(Error::Unsupported("characteristic 2".into()));
        }
        let [h0, h1] = li.linear_forms().clone();
        let [h2, h3] = lj.linear_forms().clone();
        let basis = [h0, h1, h2, h3];
        let h = Matrix::from_rows(&field, &basis.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
        let Some(h_inv) = h.inverse() else {
            return Err(Error::Precondition("the lines meet, so their linear forms do not span".into()));
        };
        let mut d = Matrix::identity(&field, 4);
        d[(0, 0)] = field.neg(&field.one());
        d[(1, 1)] = field.neg(&field.one());
        let alpha = h_inv.mul(&d).mul(&h);
        let mut theta = ThetaMorphism { i, j, field, basis, alpha, values: Vec::new() };
        let e = |k: usize| -> Point<F> { core::array::from_fn(|m| if m == k { theta.field.one() } else { theta.field.zero() }) };
        let values = PLUCKER_PAIRS.iter().map(|&(p, q)| theta.apply(&e(p), &e(q))).collect();
        theta.values = values;
        Ok(theta)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// `h0, h1, h2, h3`.
    pub fn basis(&self) -> &[Point<F>; 4] {
        &self.basis
    }

    /// `alpha` applied to a linear form given by its coefficients.
    pub fn alpha(&self, form: &Point<F>) -> Point<F> {
        let f = &self.field;
        core::array::from_fn(|m| (0..4).fold(f.zero(), |acc, k| f.add(&acc, &f.mul(&form[k], &self.alpha[(k, m)]))))
    }

    /// `Theta(u ^ v)`, a quadric.
    pub fn apply(&self, u: &Point<F>, v: &Point<F>) -> Polynomial<F> {
        let f = &self.field;
        let lin = |c: &Point<F>| Polynomial::linear(f, c);
        &lin(u) * &lin(&self.alpha(v)) - &lin(v) * &lin(&self.alpha(u))
    }

    /// Values on `x_p ^ x_q` in the order of [`PLUCKER_PAIRS`]; they generate the image.
    pub fn values(&self) -> &[Polynomial<F>] {
        &self.values
    }

    /// Values on `h_a ^ h_b` in the order of [`PLUCKER_PAIRS`].
    pub fn basis_values(&self) -> Vec<Polynomial<F>> {
        PLUCKER_PAIRS.iter().map(|&(a, b)| self.apply(&self.basis[a], &self.basis[b])).collect()
    }
}

/// `theta_ij` for lines `i` and `j` (0-based) of a configuration.
pub fn theta<F: Field>(cfg: &LineConfiguration<F>, i: usize, j: usize) -> Result<ThetaMorphism<F>> {
    if i >= cfg.len() || j >= cfg.len() || i == j {
        return Err(Error::Dimension(alloc::format!("line indices {i}, {j} for {} lines", cfg.len())));
    }
    ThetaMorphism::from_lines(cfg.line(i), cfg.line(j), i, j)
}

/// The saturated ideal generated by the six values.
pub fn theta_image_ideal<F: Field>(theta: &ThetaMorphism<F>) -> Result<Ideal<F>> {
    Ideal::new(&theta.field, theta.values())?.saturate_irrelevant()
}
