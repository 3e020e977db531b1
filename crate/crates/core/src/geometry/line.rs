//! Lines of `P^3`: spanning points, Plücker coordinates, equations.

use alloc::vec::Vec;
use core::fmt;

use crate::algebra::field::Field;
use crate::algebra::linalg::Matrix;
use crate::algebra::poly::Polynomial;
use crate::commalg::Ideal;
use crate::error::{Error, Result};

/// Homogeneous coordinates of a point.
pub type Point<F> = [<F as Field>::Elem; 4];

/// Index pairs of the Plücker coordinates `p01, p02, p03, p12, p13, p23`.
pub const PLUCKER_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// The line spanned by two distinct points, with canonical Plücker coordinates and
/// two linear forms cutting it out.
#[derive(Clone, Debug)]
pub struct LineP3<F: Field> {
    field: F,
    a: Point<F>,
    b: Point<F>,
    plucker: [F::Elem; 6],
    forms: [Point<F>; 2],
}

impl<F: Field> PartialEq for LineP3<F> {
    fn eq(&self, other: &Self) -> bool {
        self.plucker == other.plucker
    }
}

impl<F: Field> Eq for LineP3<F> {}

pub(crate) fn det4<F: Field>(field: &F, rows: [&Point<F>; 4]) -> F::Elem {
    let rows: Vec<Vec<F::Elem>> = rows.iter().map(|r| r.to_vec()).collect();
    Matrix::from_rows(field, &rows).det()
}

pub(crate) fn lin_comb<F: Field>(field: &F, s: &F::Elem, a: &Point<F>, t: &F::Elem, b: &Point<F>) -> Point<F> {
    core::array::from_fn(|i| field.add(&field.mul(s, &a[i]), &field.mul(t, &b[i])))
}

pub(crate) fn dot<F: Field>(field: &F, u: &Point<F>, v: &Point<F>) -> F::Elem {
    (0..4).fold(field.zero(), |acc, i| field.add(&acc, &field.mul(&u[i], &v[i])))
}

fn to_point<F: Field>(v: &[F::Elem]) -> Point<F> {
    core::array::from_fn(|i| v[i].clone())
}

/// Scales so that the first nonzero coordinate is 1.
pub(crate) fn normalize<F: Field, const N: usize>(field: &F, v: &[F::Elem; N]) -> [F::Elem; N] {
    match v.iter().find(|c| !field.is_zero(c)) {
        None => v.clone(),
        Some(lead) => {
            let inv = field.inv(lead).expect("nonzero");
            core::array::from_fn(|i| field.mul(&v[i], &inv))
        }
    }
}

impl<F: Field> LineP3<F> {
    pub fn new(field: &F, a: Point<F>, b: Point<F>) -> Result<Self> {
        let raw: [F::Elem; 6] = core::array::from_fn(|k| {
            let (i, j) = PLUCKER_PAIRS[k];
            field.sub(&field.mul(&a[i], &b[j]), &field.mul(&a[j], &b[i]))
        });
        if raw.iter().all(|c| field.is_zero(c)) {
            return Err(Error::Degenerate("the spanning points coincide".into()));
        }
        let plucker = normalize(field, &raw);
        let null = Matrix::from_rows(field, &[a.to_vec(), b.to_vec()]).nullspace();
        let forms = [to_point::<F>(&null[0]), to_point::<F>(&null[1])];
        Ok(LineP3 { field: field.clone(), a, b, plucker, forms })
    }

    pub fn from_ints(field: &F, a: [i64; 4], b: [i64; 4]) -> Result<Self> {
        Self::new(field, a.map(|c| field.from_i64(c)), b.map(|c| field.from_i64(c)))
    }

    /// The line `{f = g = 0}` for two independent linear forms given by coefficients.
    pub fn from_forms(field: &F, f: Point<F>, g: Point<F>) -> Result<Self> {
        let null = Matrix::from_rows(field, &[f.to_vec(), g.to_vec()]).nullspace();
        if null.len() != 2 {
            return Err(Error::Degenerate("the linear forms are dependent".into()));
        }
        Self::new(field, to_point::<F>(&null[0]), to_point::<F>(&null[1]))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn points(&self) -> [&Point<F>; 2] {
        [&self.a, &self.b]
    }

    /// `s a + t b`.
    pub fn point(&self, s: &F::Elem, t: &F::Elem) -> Point<F> {
        lin_comb(&self.field, s, &self.a, t, &self.b)
    }

    /// `(p01, p02, p03, p12, p13, p23)` with the first nonzero entry equal to 1.
    pub fn plucker(&self) -> &[F::Elem; 6] {
        &self.plucker
    }

    /// `p01 p23 - p02 p13 + p03 p12`, zero for every line.
    pub fn plucker_relation(&self) -> F::Elem {
        let f = &self.field;
        let p = &self.plucker;
        f.add(&f.sub(&f.mul(&p[0], &p[5]), &f.mul(&p[1], &p[4])), &f.mul(&p[2], &p[3]))
    }

    /// The bilinear Plücker pairing; zero iff the lines meet.
    pub fn pairing(&self, other: &Self) -> F::Elem {
        let f = &self.field;
        let (p, q) = (&self.plucker, &other.plucker);
        let terms = [
            f.mul(&p[0], &q[5]),
            f.neg(&f.mul(&p[1], &q[4])),
            f.mul(&p[2], &q[3]),
            f.mul(&p[3], &q[2]),
            f.neg(&f.mul(&p[4], &q[1])),
            f.mul(&p[5], &q[0]),
        ];
        terms.iter().fold(f.zero(), |acc, t| f.add(&acc, t))
    }

    pub fn meets(&self, other: &Self) -> bool {
        self.field.is_zero(&det4(&self.field, [&self.a, &self.b, &other.a, &other.b]))
    }

    /// Coefficient vectors of two independent linear forms vanishing on the line.
    pub fn linear_forms(&self) -> &[Point<F>; 2] {
        &self.forms
    }

    pub fn form_polynomials(&self) -> [Polynomial<F>; 2] {
        [Polynomial::linear(&self.field, &self.forms[0]), Polynomial::linear(&self.field, &self.forms[1])]
    }

    /// The ideal of the line, generated by its two linear forms.
    pub fn ideal(&self) -> Ideal<F> {
        Ideal::new(&self.field, &self.form_polynomials()).expect("linear forms are homogeneous")
    }

    pub fn contains_point(&self, p: &Point<F>) -> bool {
        self.forms.iter().all(|f| self.field.is_zero(&dot(&self.field, f, p)))
    }

    /// The intersection point with a plane `u . x = 0`, if the line is not contained in it.
    pub fn meet_plane(&self, u: &Point<F>) -> Option<Point<F>> {
        let f = &self.field;
        let (ua, ub) = (dot(f, u, &self.a), dot(f, u, &self.b));
        if f.is_zero(&ua) && f.is_zero(&ub) {
            return None;
        }
        Some(lin_comb(f, &ub, &self.a, &f.neg(&ua), &self.b))
    }

    /// The intersection point with another line, if they meet in exactly one point.
    pub fn intersection_point(&self, other: &Self) -> Option<Point<F>> {
        if !self.meets(other) || self == other {
            return None;
        }
        // a plane containing `other` but not `self`
        other.forms.iter().find_map(|u| self.meet_plane(u))
    }
}

impl<F: Field> fmt::Display for LineP3<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [g, h] = self.form_polynomials();
        write!(f, "{{{g} = {h} = 0}}")
    }
}

/// Whether the given points are linearly dependent.
pub(crate) fn dependent<F: Field>(field: &F, pts: &[&Point<F>]) -> bool {
    let rows: Vec<Vec<F::Elem>> = pts.iter().map(|p| p.to_vec()).collect();
    Matrix::from_rows(field, &rows).rank() < pts.len()
}
