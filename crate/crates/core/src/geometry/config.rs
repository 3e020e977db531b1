//! Configurations of lines: transversals, 5-secants and seeded random configurations.

use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};

use super::line::{dependent, det4, lin_comb, LineP3, Point};
use super::quadric::{quadric_through, QuadricSurface};
use crate::algebra::field::{Field, FieldSpec};
use crate::algebra::univariate::{BinaryForm, BinaryRoots};
use crate::commalg::Ideal;
use crate::error::{Error, Result};

/// Lines tried per slot before [`random_skew_config`] gives up.
pub const RETRIES_PER_LINE: usize = 1000;

/// Outcome of a 5-secant search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiveSecant<F: Field> {
    None,
    /// A line over the base field meeting five of the lines.
    Witness(LineP3<F>),
    /// 5-secants exist, but none is defined over the base field.
    OverExtension,
}

impl<F: Field> FiveSecant<F> {
    pub fn exists(&self) -> bool {
        !matches!(self, FiveSecant::None)
    }
}

/// An ordered list of lines with their pairwise incidences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineConfiguration<F: Field> {
    field: F,
    lines: Vec<LineP3<F>>,
    incidence: Vec<Vec<bool>>,
}

impl<F: Field> LineConfiguration<F> {
    pub fn new(field: &F, lines: Vec<LineP3<F>>) -> Result<Self> {
        if lines.iter().any(|l| l.field() != field) {
            return Err(Error::MixedFields);
        }
        let incidence = lines.iter().map(|l| lines.iter().map(|m| l.meets(m)).collect()).collect();
        Ok(LineConfiguration { field: field.clone(), lines, incidence })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn lines(&self) -> &[LineP3<F>] {
        &self.lines
    }

    pub fn line(&self, i: usize) -> &LineP3<F> {
        &self.lines[i]
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// `incidence[i][j]` is true iff lines `i` and `j` meet (always true on the diagonal).
    pub fn incidence(&self) -> &[Vec<bool>] {
        &self.incidence
    }

    pub fn is_skew(&self) -> bool {
        (0..self.len()).all(|i| (0..self.len()).all(|j| i == j || !self.incidence[i][j]))
    }

    pub fn require_skew(&self) -> Result<()> {
        if self.is_skew() {
            Ok(())
        } else {
            Err(Error::Precondition("the lines are not pairwise skew".into()))
        }
    }

    /// The quadric through lines `i`, `j`, `k` (0-based).
    pub fn quadric(&self, i: usize, j: usize, k: usize) -> Result<QuadricSurface<F>> {
        quadric_through(&self.lines[i], &self.lines[j], &self.lines[k])
    }

    /// The ideal of the union of the lines with the given indices.
    pub fn union_ideal(&self, indices: &[usize]) -> Result<Ideal<F>> {
        let mut acc = Ideal::unit(&self.field);
        for &i in indices {
            acc = acc.intersection(&self.lines[i].ideal())?;
        }
        Ok(acc)
    }

    /// The ideal of the union of all lines.
    pub fn ideal(&self) -> Result<Ideal<F>> {
        self.union_ideal(&(0..self.len()).collect::<Vec<_>>())
    }

    /// The configuration with lines reordered: `order[k]` is the old index of the new line `k`.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        Self::new(&self.field, order.iter().map(|&i| self.lines[i].clone()).collect())
    }

    pub fn to_file(&self) -> ConfigFile {
        let f = &self.field;
        // clear denominators, then read off integers
        let conv = |p: &Point<F>| -> [i64; 4] {
            let r: [num_rational::BigRational; 4] = core::array::from_fn(|i| f.to_ratio(&p[i]));
            let den = r.iter().fold(num_bigint::BigInt::from(1), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
            core::array::from_fn(|i| {
                let scaled = (&r[i] * num_rational::BigRational::from_integer(den.clone())).to_integer();
                num_traits::ToPrimitive::to_i64(&scaled).expect("coordinates fit in 64 bits")
            })
        };
        ConfigFile {
            field: f.spec(),
            lines: self.lines.iter().map(|l| [conv(l.points()[0]), conv(l.points()[1])]).collect(),
        }
    }

    pub fn from_file(field: &F, file: &ConfigFile) -> Result<Self> {
        let lines = file.lines.iter().map(|[a, b]| LineP3::from_ints(field, *a, *b)).collect::<Result<Vec<_>>>()?;
        Self::new(field, lines)
    }
}

/// Configuration file: `{"field": {"p": 32003}, "lines": [[[a0..a3], [b0..b3]], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigFile {
    pub field: FieldSpec,
    pub lines: Vec<[[i64; 4]; 2]>,
}

/// The family of lines meeting three pairwise skew lines, parametrized by their point
/// `s a_1 + t b_1` on the first.
struct Transversal3<'a, F: Field> {
    l1: &'a LineP3<F>,
    l2: &'a LineP3<F>,
    l3: &'a LineP3<F>,
}

impl<F: Field> Transversal3<'_, F> {
    /// The point of `L3` on the plane spanned by `p` and `L2`; linear in `p`.
    fn on_l3(&self, p: &Point<F>) -> Point<F> {
        let f = self.l1.field();
        let [a2, b2] = self.l2.points();
        let mut normal: Point<F> = core::array::from_fn(|_| f.zero());
        for (i, n) in normal.iter_mut().enumerate() {
            let mut e: Point<F> = core::array::from_fn(|_| f.zero());
            e[i] = f.one();
            *n = det4(f, [p, a2, b2, &e]);
        }
        let [a3, b3] = self.l3.points();
        let (na, nb) = (super::line::dot(f, &normal, a3), super::line::dot(f, &normal, b3));
        lin_comb(f, &nb, a3, &f.neg(&na), b3)
    }

    fn line_at(&self, c: &[F::Elem; 2]) -> Result<LineP3<F>> {
        let f = self.l1.field();
        let [a1, b1] = self.l1.points();
        let p = lin_comb(f, &c[0], a1, &c[1], b1);
        let r = self.on_l3(&p);
        LineP3::new(f, p, r)
    }

    /// The binary quadratic whose roots are the transversals meeting `l`.
    fn incidence_form(&self, l: &LineP3<F>) -> BinaryForm<F> {
        let f = self.l1.field();
        let [a1, b1] = self.l1.points();
        let (ra, rb) = (self.on_l3(a1), self.on_l3(b1));
        let [a, b] = l.points();
        let c0 = det4(f, [a1, &ra, a, b]);
        let c1 = f.add(&det4(f, [a1, &rb, a, b]), &det4(f, [b1, &ra, a, b]));
        let c2 = det4(f, [b1, &rb, a, b]);
        BinaryForm::new(f, alloc::vec![c0, c1, c2])
    }
}

/// Common transversals of four pairwise skew lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transversals<F: Field> {
    /// Two distinct lines over the base field.
    Two([LineP3<F>; 2]),
    /// The two transversals coincide.
    Tangent(LineP3<F>),
    /// The fourth line lies on the quadric through the first three: every line of the
    /// opposite ruling is a transversal.
    Infinite,
    /// Two transversals conjugate over a quadratic extension.
    Conjugate,
}

impl<F: Field> Transversals<F> {
    /// Lines over the base field, `None` for the infinite case.
    pub fn rational_lines(&self) -> Option<Vec<LineP3<F>>> {
        match self {
            Transversals::Two(ls) => Some(ls.to_vec()),
            Transversals::Tangent(l) => Some(alloc::vec![l.clone()]),
            Transversals::Conjugate => Some(Vec::new()),
            Transversals::Infinite => None,
        }
    }

    /// Number of transversals over the algebraic closure, with multiplicity.
    pub fn count(&self) -> Option<usize> {
        match self {
            Transversals::Infinite => None,
            _ => Some(2),
        }
    }
}

fn check_skew<F: Field>(lines: &[&LineP3<F>]) -> Result<()> {
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if lines[i].meets(lines[j]) {
                return Err(Error::Precondition("the lines are not pairwise skew".into()));
            }
        }
    }
    Ok(())
}

pub fn transversals_of_four<F: Field>(lines: [&LineP3<F>; 4]) -> Result<Transversals<F>> {
    check_skew(&lines)?;
    let t = Transversal3 { l1: lines[0], l2: lines[1], l3: lines[2] };
    match t.incidence_form(lines[3]).roots() {
        BinaryRoots::All => Ok(Transversals::Infinite),
        BinaryRoots::Points(pts) => match pts.as_slice() {
            [] => Ok(Transversals::Conjugate),
            [(c, 2)] => Ok(Transversals::Tangent(t.line_at(c)?)),
            [(c, 1), (d, 1)] => Ok(Transversals::Two([t.line_at(c)?, t.line_at(d)?])),
            _ => Err(Error::Inconsistent("a quadratic with an unexpected root pattern".into())),
        },
    }
}

/// Whether five given skew lines have a common transversal.
fn five_secant_of<F: Field>(lines: [&LineP3<F>; 5]) -> Result<FiveSecant<F>> {
    let t = Transversal3 { l1: lines[0], l2: lines[1], l3: lines[2] };
    let f = lines[0].field();
    let g4 = t.incidence_form(lines[3]);
    let g5 = t.incidence_form(lines[4]);
    let Some(g) = BinaryForm::gcd_all(f, &[g4, g5]) else {
        // both lines lie on the quadric: every opposite ruling line works
        return Ok(FiveSecant::Witness(t.line_at(&[f.one(), f.zero()])?));
    };
    if g.degree() == 0 {
        return Ok(FiveSecant::None);
    }
    match g.roots() {
        BinaryRoots::Points(pts) if !pts.is_empty() => Ok(FiveSecant::Witness(t.line_at(&pts[0].0)?)),
        _ => Ok(FiveSecant::OverExtension),
    }
}

/// Searches every 5-element subset of a configuration of pairwise skew lines for a common
/// transversal.
pub fn has_five_secant<F: Field>(cfg: &LineConfiguration<F>) -> Result<FiveSecant<F>> {
    if cfg.len() < 5 {
        return Err(Error::Precondition("a 5-secant needs at least five lines".into()));
    }
    cfg.require_skew()?;
    let n = cfg.len();
    let mut over_extension = false;
    for sub in subsets(n, 5) {
        let ls: [&LineP3<F>; 5] = core::array::from_fn(|k| cfg.line(sub[k]));
        match five_secant_of(ls)? {
            FiveSecant::Witness(w) => return Ok(FiveSecant::Witness(w)),
            FiveSecant::OverExtension => over_extension = true,
            FiveSecant::None => {}
        }
    }
    Ok(if over_extension { FiveSecant::OverExtension } else { FiveSecant::None })
}

/// All increasing `k`-subsets of `0..n`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// A line through two independent uniformly random points.
pub fn random_line<F: Field>(field: &F, rng: &mut dyn RngCore) -> LineP3<F> {
    loop {
        let a: Point<F> = core::array::from_fn(|_| field.sample(rng));
        let b: Point<F> = core::array::from_fn(|_| field.sample(rng));
        if let Ok(l) = LineP3::new(field, a, b) {
            return l;
        }
    }
}

/// `n` pairwise skew lines, deterministic in `(field, n, seed)`. From the fifth line on,
/// every 5-subset is also free of 5-secants, also over the algebraic closure.
pub fn random_skew_config<F: Field>(field: &F, n: usize, seed: u64) -> Result<LineConfiguration<F>> {
    if field.characteristic() == 0 {
        return Err(Error::Precondition("random configurations need a prime field".into()));
    }
    if n == 0 {
        return Err(Error::Precondition("at least one line is needed".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lines: Vec<LineP3<F>> = Vec::with_capacity(n);
    for slot in 0..n {
        let mut accepted = false;
        for _ in 0..RETRIES_PER_LINE {
            let cand = random_line(field, &mut rng);
            if lines.iter().any(|l| l.meets(&cand)) {
                continue;
            }
            if slot >= 4 && !no_five_secant_with(&lines, &cand)? {
                continue;
            }
            lines.push(cand);
            accepted = true;
            break;
        }
        if !accepted {
            return Err(Error::Exhausted(slot));
        }
    }
    LineConfiguration::new(field, lines)
}

fn no_five_secant_with<F: Field>(lines: &[LineP3<F>], cand: &LineP3<F>) -> Result<bool> {
    for sub in subsets(lines.len(), 4) {
        let ls = [&lines[sub[0]], &lines[sub[1]], &lines[sub[2]], &lines[sub[3]], cand];
        if five_secant_of(ls)?.exists() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A random point of a nonsingular quadric containing `reference`, off the given lines.
pub fn random_point_on<F: Field>(
    q: &QuadricSurface<F>,
    reference: &LineP3<F>,
    avoid: &[&LineP3<F>],
    rng: &mut dyn RngCore,
) -> Result<Point<F>> {
    use super::quadric::{ruling_line, RulingFamily, RulingParam};
    let f = q.field();
    for _ in 0..RETRIES_PER_LINE {
        let t = f.sample(rng);
        let m = ruling_line(q, reference, RulingFamily::B, &RulingParam::Value(t))?;
        let s = f.sample(rng);
        let p = m.point(&s, &f.one());
        if !reference.contains_point(&p) && avoid.iter().all(|l| !l.contains_point(&p)) {
            return Ok(p);
        }
    }
    Err(Error::Exhausted(0))
}

/// A line through `p` in the tangent plane of `q` at `p` which is not a ruling line, so it
/// meets the quadric only at `p`, with multiplicity two.
pub fn tangent_line<F: Field>(q: &QuadricSurface<F>, p: &Point<F>, rng: &mut dyn RngCore) -> Result<LineP3<F>> {
    use crate::algebra::linalg::Matrix;
    let f = q.field();
    let u = q.tangent_plane(p);
    let plane: Vec<Point<F>> = Matrix::from_rows(f, &[u.to_vec()])
        .nullspace()
        .iter()
        .map(|v| core::array::from_fn(|i| v[i].clone()))
        .collect();
    for _ in 0..RETRIES_PER_LINE {
        let c: Vec<F::Elem> = (0..3).map(|_| f.sample(rng)).collect();
        let mut d: Point<F> = core::array::from_fn(|_| f.zero());
        for (ci, v) in c.iter().zip(&plane) {
            d = lin_comb(f, &f.one(), &d, ci, v);
        }
        if dependent(f, &[p, &d]) || f.is_zero(&q.eval(&d)) {
            continue;
        }
        return LineP3::new(f, p.clone(), d);
    }
    Err(Error::Exhausted(0))
}
