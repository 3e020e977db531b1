//! Sparse multivariate polynomials in `x0..x3`.
//!
//! Terms are kept sorted strictly decreasing in grevlex, with no zero
//! coefficients; this is also the canonical text form.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder, NVARS};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<F: Field> {
    field: F,
    terms: Vec<(F::Elem, Monomial)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: &F) -> Self {
        Polynomial { field: field.clone(), terms: Vec::new() }
    }

    pub fn one(field: &F) -> Self {
        Self::constant(field, field.one())
    }

    pub fn constant(field: &F, c: F::Elem) -> Self {
        Self::term(field, c, Monomial::ONE)
    }

    pub fn var(field: &F, i: usize) -> Self {
        Self::term(field, field.one(), Monomial::var(i))
    }

    pub fn term(field: &F, c: F::Elem, m: Monomial) -> Self {
        if field.is_zero(&c) {
            return Self::zero(field);
        }
        Polynomial { field: field.clone(), terms: alloc::vec![(c, m)] }
    }

    /// The linear form `sum c_i x_i`.
    pub fn linear(field: &F, coeffs: &[F::Elem; NVARS]) -> Self {
        Self::from_terms(field, coeffs.iter().enumerate().map(|(i, c)| (c.clone(), Monomial::var(i))))
    }

    /// Builds a polynomial from arbitrary terms, merging repeats and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (F::Elem, Monomial)>>(field: &F, terms: I) -> Self {
        let mut v: Vec<(F::Elem, Monomial)> = terms.into_iter().collect();
        v.sort_by(|a, b| MonomialOrder::Grevlex.compare(&b.1, &a.1));
        let mut out: Vec<(F::Elem, Monomial)> = Vec::with_capacity(v.len());
        for (c, m) in v {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = field.add(&last.0, &c),
                _ => out.push((c, m)),
            }
        }
        out.retain(|(c, _)| !field.is_zero(c));
        Polynomial { field: field.clone(), terms: out }
    }

    /// Trusts that `terms` are already canonical.
    pub(crate) fn from_sorted_terms(field: &F, terms: Vec<(F::Elem, Monomial)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| MonomialOrder::Grevlex.compare(&w[0].1, &w[1].1) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(c, _)| !field.is_zero(c)));
        Polynomial { field: field.clone(), terms }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn terms(&self) -> &[(F::Elem, Monomial)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(F::Elem, Monomial)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(F::Elem, Monomial)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.1)
    }

    pub fn leading_coefficient(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn coefficient(&self, m: &Monomial) -> F::Elem {
        self.terms
            .iter()
            .find(|(_, t)| t == m)
            .map(|(c, _)| c.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u16> {
        self.terms.iter().map(|t| t.1.degree()).max()
    }

    /// The common degree of all terms, if the polynomial is nonzero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u16> {
        let d = self.terms.first()?.1.degree();
        self.terms.iter().all(|t| t.1.degree() == d).then_some(d)
    }

    /// The zero polynomial counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.combine(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.combine(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.product(other))
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let f = &self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let other_coeff = |c: &F::Elem| if negate { f.neg(c) } else { c.clone() };
        while i < a.len() && j < b.len() {
            match MonomialOrder::Grevlex.compare(&a[i].1, &b[j].1) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((other_coeff(&b[j].0), b[j].1));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { f.sub(&a[i].0, &b[j].0) } else { f.add(&a[i].0, &b[j].0) };
                    if !f.is_zero(&c) {
                        out.push((c, a[i].1));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(c, m)| (other_coeff(c), *m)));
        Polynomial { field: f.clone(), terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        let f = &self.field;
        let mut acc = Polynomial::zero(f);
        for (c, m) in &self.terms {
            acc = acc.combine(&other.mul_term(c, m), false);
        }
        acc
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Polynomial::zero(&self.field);
        }
        let terms = self.terms.iter().map(|(a, m)| (self.field.mul(a, c), *m)).collect();
        Polynomial { field: self.field.clone(), terms }
    }

    pub fn mul_term(&self, c: &F::Elem, m: &Monomial) -> Self {
        if self.field.is_zero(c) {
            return Polynomial::zero(&self.field);
        }
        // multiplying by a monomial preserves the grevlex order of terms
        let terms = self.terms.iter().map(|(a, t)| (self.field.mul(a, c), t.mul(m))).collect();
        Polynomial { field: self.field.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::one(&self.field);
        for _ in 0..e {
            acc = acc.product(self);
        }
        acc
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            Some(c) => {
                let inv = self.field.inv(c).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    pub fn eval(&self, point: &[F::Elem; NVARS]) -> F::Elem {
        let f = &self.field;
        let mut acc = f.zero();
        for (c, m) in &self.terms {
            let mut t = c.clone();
            for (i, p) in point.iter().enumerate() {
                t = f.mul(&t, &f.pow(p, m.exp(i) as u64));
            }
            acc = f.add(&acc, &t);
        }
        acc
    }

    /// Substitutes `x_i -> images[i]`.
    pub fn substitute(&self, images: &[Polynomial<F>; NVARS]) -> Self {
        let f = &self.field;
        let mut acc = Polynomial::zero(f);
        for (c, m) in &self.terms {
            let mut t = Polynomial::constant(f, c.clone());
            for (i, img) in images.iter().enumerate() {
                for _ in 0..m.exp(i) {
                    t = t.product(img);
                }
            }
            acc = acc.combine(&t, false);
        }
        acc
    }

    pub fn partial(&self, i: usize) -> Self {
        let f = &self.field;
        Polynomial::from_terms(
            f,
            self.terms.iter().filter(|(_, m)| m.exp(i) > 0).map(|(c, m)| {
                let mut e = m.exps();
                let k = e[i];
                e[i] -= 1;
                (f.mul(c, &f.from_i64(k as i64)), Monomial::new(e))
            }),
        )
    }

    /// Exact quotient `self / divisor`; fails when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        self.check_field(divisor)?;
        let f = &self.field;
        let (lc, lm) = divisor.leading_term().ok_or(Error::DivisionByZero)?.clone();
        let lc_inv = f.inv(&lc)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((c, m)) = rem.leading_term().cloned() {
            let q = lm.div(&m).ok_or(Error::NotInSubmodule)?;
            let qc = f.mul(&c, &lc_inv);
            rem = rem.combine(&divisor.mul_term(&qc, &q), true);
            quot.push((qc, q));
        }
        Ok(Polynomial::from_terms(f, quot))
    }

    /// Parses the text format `2*x0*x3 - 2*x1*x2`; whitespace is ignored.
    pub fn parse(field: &F, text: &str) -> Result<Self> {
        let cleaned: Vec<(usize, u8)> = text.bytes().enumerate().filter(|(_, b)| !b.is_ascii_whitespace()).collect();
        let mut p = Parser { field, src: &cleaned, i: 0 };
        if cleaned.is_empty() {
            return Err(p.error("empty polynomial"));
        }
        let poly = p.expr()?;
        if p.i != cleaned.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(poly)
    }
}

struct Parser<'a, F: Field> {
    field: &'a F,
    src: &'a [(usize, u8)],
    i: usize,
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.i).map(|t| t.1)
    }

    fn error(&self, msg: &str) -> Error {
        let pos = self.src.get(self.i).map(|t| t.0).unwrap_or_else(|| self.src.last().map_or(0, |t| t.0 + 1));
        Error::Parse { pos, msg: String::from(msg) }
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.i += 1;
                -&self.term()?
            }
            Some(b'+') => {
                self.i += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(op) = self.peek() {
            match op {
                b'+' => {
                    self.i += 1;
                    acc = &acc + &self.term()?;
                }
                b'-' => {
                    self.i += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.i += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<F>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.i += 1;
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial<F>> {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.i += 1;
                Ok(inner)
            }
            Some(b'x') => {
                self.i += 1;
                let v = self.integer()?;
                if v >= NVARS as u64 {
                    return Err(self.error("variable index out of range (x0..x3)"));
                }
                Ok(Polynomial::var(self.field, v as usize))
            }
            Some(b'0'..=b'9') => {
                let num = self.big_integer()?;
                let den = if self.peek() == Some(b'/') {
                    self.i += 1;
                    self.big_integer()?
                } else {
                    BigInt::one()
                };
                if den.is_zero() {
                    return Err(self.error("zero denominator"));
                }
                let c = self.field.from_ratio(&num, &den)?;
                Ok(Polynomial::constant(self.field, c))
            }
            Some(b'-') => {
                self.i += 1;
                Ok(-&self.factor()?)
            }
            _ => Err(self.error("expected a number, a variable or '('")),
        }
    }

    fn digits(&mut self) -> Result<&[(usize, u8)]> {
        let start = self.i;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.i += 1;
        }
        if start == self.i {
            return Err(self.error("expected digits"));
        }
        Ok(&self.src[start..self.i])
    }

    fn integer(&mut self) -> Result<u64> {
        let d = self.digits()?;
        let mut v: u64 = 0;
        for &(_, b) in d {
            v = v.checked_mul(10).and_then(|v| v.checked_add((b - b'0') as u64)).ok_or(Error::Parse {
                pos: d[0].0,
                msg: String::from("integer overflow"),
            })?;
        }
        Ok(v)
    }

    fn big_integer(&mut self) -> Result<BigInt> {
        let d = self.digits()?;
        let mut v = BigInt::zero();
        for &(_, b) in d {
            v = v * 10 + (b - b'0') as u32;
        }
        Ok(v)
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let r = self.field.to_ratio(c);
            let negative = r < num_rational::BigRational::zero();
            let abs = if negative { -r } else { r };
            if k == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let unit = abs.is_one();
            if !unit || m.is_one() {
                if abs.is_integer() {
                    write!(f, "{}", abs.numer())?;
                } else {
                    write!(f, "{}/{}", abs.numer(), abs.denom())?;
                }
                if !m.is_one() {
                    f.write_str("*")?;
                }
            }
            if !m.is_one() {
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.try_add(rhs).expect("polynomials over different fields")
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.try_sub(rhs).expect("polynomials over different fields")
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.try_mul(rhs).expect("polynomials over different fields")
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        let terms = self.terms.iter().map(|(c, m)| (self.field.neg(c), *m)).collect();
        Polynomial { field: self.field.clone(), terms }
    }
}

impl<F: Field> Add for Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        &self + &rhs
    }
}

impl<F: Field> Sub for Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        &self - &rhs
    }
}

impl<F: Field> Mul for Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        &self * &rhs
    }
}

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        -&self
    }
}
