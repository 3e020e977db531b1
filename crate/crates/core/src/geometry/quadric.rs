//! Quadric surfaces, their rulings, and the quadric through three skew lines.

use alloc::vec::Vec;

use super::line::{dependent, dot, lin_comb, LineP3, Point};
use crate::algebra::field::Field;
use crate::algebra::linalg::Matrix;
use crate::algebra::monomial::Monomial;
use crate::algebra::poly::Polynomial;
use crate::algebra::univariate::{BinaryForm, BinaryRoots};
use crate::error::{Error, Result};

/// `x^T G x = 0` for a symmetric `4 x 4` matrix `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricSurface<F: Field> {
    field: F,
    gram: Matrix<F>,
    equation: Polynomial<F>,
}

impl<F: Field> QuadricSurface<F> {
    pub fn from_equation(equation: Polynomial<F>) -> Result<Self> {
        if equation.homogeneous_degree() != Some(2) {
            return Err(Error::DegreeMismatch("a quadric needs a nonzero form of degree 2".into()));
        }
        let field = equation.field().clone();
        let half = field.inv(&field.from_i64(2))?;
        let mut gram = Matrix::zeros(&field, 4, 4);
        for (c, m) in equation.terms() {
            let vars: Vec<usize> = (0..4).flat_map(|i| core::iter::repeat_n(i, m.exp(i) as usize)).collect();
            let (i, j) = (vars[0], vars[1]);
            if i == j {
                gram[(i, i)] = c.clone();
            } else {
                let h = field.mul(c, &half);
                gram[(i, j)] = h.clone();
                gram[(j, i)] = h;
            }
        }
        Ok(QuadricSurface { field, gram, equation })
    }

    pub fn from_gram(gram: Matrix<F>) -> Result<Self> {
        let field = gram.field().clone();
        if gram.rows() != 4 || gram.cols() != 4 || gram != gram.transpose() {
            return Err(Error::Dimension("a quadric needs a symmetric 4 x 4 matrix".into()));
        }
        let mut terms = Vec::new();
        for i in 0..4 {
            for j in i..4 {
                let c = if i == j { gram[(i, i)].clone() } else { field.add(&gram[(i, j)], &gram[(j, i)]) };
                terms.push((c, Monomial::var(i).mul(&Monomial::var(j))));
            }
        }
        let equation = Polynomial::from_terms(&field, terms);
        if equation.is_zero() {
            return Err(Error::Degenerate("the zero matrix defines no quadric".into()));
        }
        Ok(QuadricSurface { field, gram, equation })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn equation(&self) -> &Polynomial<F> {
        &self.equation
    }

    pub fn gram(&self) -> &Matrix<F> {
        &self.gram
    }

    pub fn is_nonsingular(&self) -> bool {
        !self.field.is_zero(&self.gram.det())
    }

    /// `u^T G v`.
    pub fn bilinear(&self, u: &Point<F>, v: &Point<F>) -> F::Elem {
        let gv: Vec<F::Elem> = self.gram.mul_vec(v);
        dot(&self.field, u, &core::array::from_fn(|i| gv[i].clone()))
    }

    pub fn eval(&self, p: &Point<F>) -> F::Elem {
        self.bilinear(p, p)
    }

    pub fn contains_point(&self, p: &Point<F>) -> bool {
        self.field.is_zero(&self.eval(p))
    }

    /// `Q(s a + t b)` as a binary quadratic form in `(s, t)`.
    pub fn restrict(&self, line: &LineP3<F>) -> BinaryForm<F> {
        let f = &self.field;
        let [a, b] = line.points();
        let two = f.from_i64(2);
        BinaryForm::new(f, alloc::vec![self.eval(a), f.mul(&two, &self.bilinear(a, b)), self.eval(b)])
    }

    pub fn contains_line(&self, line: &LineP3<F>) -> bool {
        self.restrict(line).is_zero()
    }

    /// Coefficients of the tangent plane at `p`.
    pub fn tangent_plane(&self, p: &Point<F>) -> Point<F> {
        let v = self.gram.mul_vec(p);
        core::array::from_fn(|i| v[i].clone())
    }

    /// The two lines of the quadric through a point of it, in no particular order.
    pub fn lines_through(&self, p: &Point<F>) -> Result<[LineP3<F>; 2]> {
        let f = &self.field;
        if !self.is_nonsingular() {
            return Err(Error::Degenerate("the quadric is singular".into()));
        }
        if !self.contains_point(p) {
            return Err(Error::Precondition("the point is not on the quadric".into()));
        }
        let u = self.tangent_plane(p);
        let plane = Matrix::from_rows(f, &[u.to_vec()]).nullspace();
        let plane: Vec<Point<F>> = plane.iter().map(|v| core::array::from_fn(|i| v[i].clone())).collect();
        // two points of the tangent plane which together with p span it
        let mut uv: Vec<&Point<F>> = Vec::new();
        for q in &plane {
            let mut pts = alloc::vec![p];
            pts.extend(uv.iter().copied());
            pts.push(q);
            if !dependent(f, &pts) {
                uv.push(q);
            }
            if uv.len() == 2 {
                break;
            }
        }
        let (u1, v1) = (uv[0], uv[1]);
        let aux = LineP3::new(f, u1.clone(), v1.clone())?;
        let roots = match self.restrict(&aux).roots() {
            BinaryRoots::Points(r) => r,
            BinaryRoots::All => return Err(Error::Degenerate("the tangent section is degenerate".into())),
        };
        let pts: Vec<Point<F>> = roots.iter().map(|(c, _)| lin_comb(f, &c[0], u1, &c[1], v1)).collect();
        match pts.len() {
            2 => Ok([LineP3::new(f, p.clone(), pts[0].clone())?, LineP3::new(f, p.clone(), pts[1].clone())?]),
            _ => Err(Error::Unsupported("the rulings are not defined over the base field".into())),
        }
    }
}

/// The quadric through three pairwise skew lines, each imposed at three sample points
/// `s a + t b` with `(s, t)` taken from `samples`.
pub fn quadric_through_sampled<F: Field>(lines: [&LineP3<F>; 3], samples: [[(i64, i64); 3]; 3]) -> Result<QuadricSurface<F>> {
    let f = lines[0].field();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if lines[i].meets(lines[j]) {
            return Err(Error::Precondition("the lines are not pairwise skew".into()));
        }
    }
    let monos = Monomial::all_of_degree(2);
    let mut rows = Vec::with_capacity(9);
    for (line, pts) in lines.iter().zip(samples) {
        for (s, t) in pts {
            let p = line.point(&f.from_i64(s), &f.from_i64(t));
            rows.push(monos.iter().map(|m| Polynomial::term(f, f.one(), *m).eval(&p)).collect::<Vec<_>>());
        }
    }
    let null = Matrix::from_rows(f, &rows).nullspace();
    if null.len() != 1 {
        return Err(Error::Degenerate("the three lines do not determine a unique quadric".into()));
    }
    let eq = Polynomial::from_terms(f, null[0].iter().cloned().zip(monos.iter().copied()));
    let eq = eq.monic();
    let q = QuadricSurface::from_equation(eq)?;
    if !q.is_nonsingular() || lines.iter().any(|l| !q.contains_line(l)) {
        return Err(Error::Degenerate("the quadric through the lines is singular".into()));
    }
    Ok(q)
}

/// The unique quadric containing three pairwise skew lines.
pub fn quadric_through<F: Field>(l1: &LineP3<F>, l2: &LineP3<F>, l3: &LineP3<F>) -> Result<QuadricSurface<F>> {
    quadric_through_sampled([l1, l2, l3], [[(1, 0), (0, 1), (1, 1)]; 3])
}

/// The family of a ruling line, relative to a reference line of the quadric.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RulingFamily {
    /// The family containing the reference line.
    A,
    /// The opposite family: lines meeting the reference line.
    B,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RulingParam<E> {
    /// Family B: the line through `a + t b` of the reference line. Family A: the line
    /// through the corresponding point of the B-line through `a`.
    Value(E),
    /// The line of the family through a point of the quadric.
    Point([E; 4]),
}

/// The ruling line of the given family through a point of the quadric.
fn line_of_family_through<F: Field>(
    q: &QuadricSurface<F>,
    reference: &LineP3<F>,
    family: RulingFamily,
    p: &Point<F>,
) -> Result<LineP3<F>> {
    let [m, n] = q.lines_through(p)?;
    let same = |l: &LineP3<F>| l == reference || !l.meets(reference);
    let (fa, fb) = if same(&m) && !same(&n) {
        (m, n)
    } else if same(&n) && !same(&m) {
        (n, m)
    } else if reference.contains_point(p) {
        if &m == reference {
            (m, n)
        } else {
            (n, m)
        }
    } else {
        return Err(Error::Degenerate("cannot separate the two rulings".into()));
    };
    Ok(match family {
        RulingFamily::A => fa,
        RulingFamily::B => fb,
    })
}

/// A line of the quadric in the given family, relative to a reference line on it.
pub fn ruling_line<F: Field>(
    q: &QuadricSurface<F>,
    reference: &LineP3<F>,
    family: RulingFamily,
    param: &RulingParam<F::Elem>,
) -> Result<LineP3<F>> {
    let f = q.field();
    if !q.is_nonsingular() {
        return Err(Error::Degenerate("the quadric is singular".into()));
    }
    if !q.contains_line(reference) {
        return Err(Error::Precondition("the reference line is not on the quadric".into()));
    }
    match param {
        RulingParam::Point(p) => line_of_family_through(q, reference, family, p),
        RulingParam::Value(t) => {
            let [a, b] = reference.points();
            match family {
                RulingFamily::B => line_of_family_through(q, reference, RulingFamily::B, &lin_comb(f, &f.one(), a, t, b)),
                RulingFamily::A => {
                    let m0 = line_of_family_through(q, reference, RulingFamily::B, a)?;
                    let other = m0.points().into_iter().find(|x| !dependent(f, &[a, x])).expect("two spanning points");
                    let p = lin_comb(f, &f.one(), a, t, other);
                    line_of_family_through(q, reference, RulingFamily::A, &p)
                }
            }
        }
    }
}
