//! Dense univariate polynomials and binary forms, with root finding in the base field.
//!
//! Over GF(p) roots are isolated with `gcd(f, x^p - x)` followed by
//! equal-degree splitting; over the rationals with the rational root test.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::field::Field;
use super::linalg::Matrix;

/// Coefficients from the constant term upwards, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(field: &F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &F) -> Self {
        UniPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn x(field: &F) -> Self {
        Self::new(field, vec![field.zero(), field.one()])
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = f.zero();
        let c = (0..n)
            .map(|i| f.add(self.coeffs.get(i).unwrap_or(&z), other.coeffs.get(i).unwrap_or(&z)))
            .collect();
        Self::new(f, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = &self.field;
        let neg = Self::new(f, other.coeffs.iter().map(|c| f.neg(c)).collect());
        self.add(&neg)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        let mut c = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.add(&c[i + j], &f.mul(a, b));
            }
        }
        Self::new(f, c)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = self.field.inv(l).expect("nonzero leading coefficient");
                Self::new(&self.field, self.coeffs.iter().map(|c| self.field.mul(c, &inv)).collect())
            }
        }
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let f = &self.field;
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = f.inv(d.leading().unwrap()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(f), self.clone());
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(&rem[k + dd], &inv);
            if f.is_zero(&c) {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(&rem[k + j], &f.mul(&c, dc));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(f, quot), Self::new(f, rem))
    }

    /// Monic gcd; the gcd of two zero polynomials is zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    fn pow_mod(&self, mut e: u64, modulus: &Self) -> Self {
        let f = &self.field;
        let mut base = self.div_rem(modulus).1;
        let mut acc = Self::new(f, vec![f.one()]).div_rem(modulus).1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).div_rem(modulus).1;
            }
            base = base.mul(&base).div_rem(modulus).1;
            e >>= 1;
        }
        acc
    }

    /// Distinct roots in the base field with their multiplicities, sorted by representative.
    pub fn roots(&self) -> Vec<(F::Elem, usize)> {
        let f = &self.field;
        assert!(!self.is_zero(), "roots of the zero polynomial");
        let distinct = if f.characteristic() == 0 { rational_roots(self) } else { prime_field_roots(self) };
        let mut out: Vec<(F::Elem, usize)> = distinct
            .into_iter()
            .map(|r| {
                let lin = Self::new(f, vec![f.neg(&r), f.one()]);
                let mut g = self.clone();
                let mut mult = 0;
                loop {
                    let (q, rem) = g.div_rem(&lin);
                    if !rem.is_zero() {
                        break;
                    }
                    g = q;
                    mult += 1;
                }
                (r, mult)
            })
            .collect();
        out.sort_by_key(|a| f.to_ratio(&a.0));
        out
    }
}

fn quadratic_roots<F: Field>(p: &UniPoly<F>) -> Vec<F::Elem> {
    let f = &p.field;
    match p.degree() {
        Some(0) | None => Vec::new(),
        Some(1) => vec![f.div(&f.neg(&p.coeffs[0]), &p.coeffs[1]).expect("nonzero leading coefficient")],
        Some(2) => {
            let (c, b, a) = (&p.coeffs[0], &p.coeffs[1], &p.coeffs[2]);
            let disc = f.sub(&f.mul(b, b), &f.mul(&f.from_i64(4), &f.mul(a, c)));
            let Some(s) = f.sqrt(&disc) else {
                return Vec::new();
            };
            let two_a_inv = f.inv(&f.mul(&f.from_i64(2), a)).expect("characteristic is odd");
            let r1 = f.mul(&f.sub(&s, b), &two_a_inv);
            let r2 = f.mul(&f.sub(&f.neg(&s), b), &two_a_inv);
            if r1 == r2 {
                vec![r1]
            } else {
                vec![r1, r2]
            }
        }
        _ => unreachable!("only used for degree at most 2"),
    }
}

fn prime_field_roots<F: Field>(p: &UniPoly<F>) -> Vec<F::Elem> {
    let f = &p.field;
    if p.degree().unwrap_or(0) <= 2 {
        return quadratic_roots(p);
    }
    let q = f.characteristic();
    let x = UniPoly::x(f);
    let frob = x.pow_mod(q, p).sub(&x);
    let split = p.gcd(&frob);
    let mut out = Vec::new();
    equal_degree_split(&split, q, &mut out);
    out
}

/// Collects the roots of a monic product of distinct linear factors.
fn equal_degree_split<F: Field>(h: &UniPoly<F>, q: u64, out: &mut Vec<F::Elem>) {
    let f = &h.field;
    let Some(deg) = h.degree() else { return };
    if deg <= 2 {
        out.extend(quadratic_roots(h));
        return;
    }
    if q <= 4096 {
        for v in 0..q as i64 {
            let e = f.from_i64(v);
            if f.is_zero(&h.eval(&e)) {
                out.push(e);
            }
        }
        return;
    }
    for delta in 0.. {
        let shifted = UniPoly::new(f, vec![f.from_i64(delta), f.one()]);
        let t = shifted.pow_mod((q - 1) / 2, h).sub(&UniPoly::new(f, vec![f.one()]));
        let g = h.gcd(&t);
        if let Some(dg) = g.degree() {
            if dg > 0 && dg < deg {
                let other = h.div_rem(&g).0.monic();
                equal_degree_split(&g, q, out);
                equal_degree_split(&other, q, out);
                return;
            }
        }
    }
}

fn rational_roots<F: Field>(p: &UniPoly<F>) -> Vec<F::Elem> {
    let f = &p.field;
    let mut out = Vec::new();
    let mut g = p.clone();
    if f.is_zero(&g.coeffs[0]) {
        out.push(f.zero());
        let first = g.coeffs.iter().position(|c| !f.is_zero(c)).unwrap();
        g = UniPoly::new(f, g.coeffs[first..].to_vec());
    }
    if g.degree().unwrap_or(0) <= 2 {
        out.extend(quadratic_roots(&g));
        return out;
    }
    // integer coefficients
    let ratios: Vec<_> = g.coeffs.iter().map(|c| f.to_ratio(c)).collect();
    let den = ratios.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = ratios.iter().map(|r| (r * &den).to_integer()).collect();
    let (Some(a0), Some(an)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
        return out;
    };
    let mut found: Vec<F::Elem> = Vec::new();
    for d in &a0 {
        for e in &an {
            for sign in [1i32, -1] {
                let num = BigInt::from(sign) * d;
                let cand = f.from_ratio(&num, e).expect("nonzero divisor");
                if !found.contains(&cand) && f.is_zero(&g.eval(&cand)) {
                    found.push(cand);
                }
            }
        }
    }
    out.extend(found);
    out
}

/// Positive divisors, for integers small enough to factor by trial division.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > 1 << 40 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Zeros of a binary form on the projective line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BinaryRoots<E> {
    /// The form vanishes identically.
    All,
    /// Points `(c0 : c1)` with multiplicities; the first nonzero coordinate is 1.
    Points(Vec<([E; 2], usize)>),
}

/// A binary form `sum_k a_k c0^(d-k) c1^k`, stored as `[a_0, ..., a_d]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> BinaryForm<F> {
    pub fn new(field: &F, coeffs: Vec<F::Elem>) -> Self {
        BinaryForm { field: field.clone(), coeffs }
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    pub fn eval(&self, c: &[F::Elem; 2]) -> F::Elem {
        let f = &self.field;
        let d = self.degree() as u64;
        let mut acc = f.zero();
        for (k, a) in self.coeffs.iter().enumerate() {
            let t = f.mul(a, &f.mul(&f.pow(&c[0], d - k as u64), &f.pow(&c[1], k as u64)));
            acc = f.add(&acc, &t);
        }
        acc
    }

    /// Dehomogenization at `c0 = 1`, in the variable `c1`.
    fn affine(&self) -> UniPoly<F> {
        UniPoly::new(&self.field, self.coeffs.clone())
    }

    /// Number of leading zero coefficients: the multiplicity of the root `(0 : 1)`.
    fn infinity_multiplicity(&self) -> usize {
        self.coeffs.iter().rev().take_while(|c| self.field.is_zero(c)).count()
    }

    pub fn roots(&self) -> BinaryRoots<F::Elem> {
        let f = &self.field;
        if self.is_zero() {
            return BinaryRoots::All;
        }
        let mut pts: Vec<([F::Elem; 2], usize)> =
            self.affine().roots().into_iter().map(|(r, m)| ([f.one(), r], m)).collect();
        let inf = self.infinity_multiplicity();
        if inf > 0 {
            pts.push(([f.zero(), f.one()], inf));
        }
        BinaryRoots::Points(pts)
    }

    /// Total number of roots over the algebraic closure counted with multiplicity is the
    /// degree; this returns how many of them (with multiplicity) lie in the base field.
    pub fn rational_root_count(&self) -> Option<usize> {
        match self.roots() {
            BinaryRoots::All => None,
            BinaryRoots::Points(p) => Some(p.iter().map(|(_, m)| m).sum()),
        }
    }

    /// Greatest common divisor of binary forms (up to scale); `None` if all vanish.
    pub fn gcd_all(field: &F, forms: &[BinaryForm<F>]) -> Option<BinaryForm<F>> {
        let nonzero: Vec<&BinaryForm<F>> = forms.iter().filter(|b| !b.is_zero()).collect();
        if nonzero.is_empty() {
            return None;
        }
        let inf = nonzero.iter().map(|b| b.infinity_multiplicity()).min().unwrap();
        let g = nonzero.iter().fold(UniPoly::zero(field), |acc, b| acc.gcd(&b.affine()));
        let deg = g.degree().unwrap() + inf;
        let mut coeffs = g.coeffs().to_vec();
        coeffs.resize(deg + 1, field.zero());
        Some(BinaryForm::new(field, coeffs))
    }

    /// Resultant via the Sylvester matrix; zero iff the forms share a root over the closure.
    pub fn resultant(&self, other: &Self) -> F::Elem {
        let f = &self.field;
        let (m, n) = (self.degree(), other.degree());
        let size = m + n;
        if size == 0 {
            return f.one();
        }
        let mut s = Matrix::zeros(f, size, size);
        for i in 0..n {
            for (k, a) in self.coeffs.iter().enumerate() {
                s[(i, i + k)] = a.clone();
            }
        }
        for i in 0..m {
            for (k, b) in other.coeffs.iter().enumerate() {
                s[(n + i, i + k)] = b.clone();
            }
        }
        s.det()
    }
}
