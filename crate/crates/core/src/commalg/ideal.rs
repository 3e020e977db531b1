//! Homogeneous ideals of `S = k[x0, x1, x2, x3]`.

use alloc::vec::Vec;
use core::fmt;

use super::hilbert::{quotient_numerator, HilbertData};
use crate::algebra::field::Field;
use crate::algebra::monomial::Monomial;
use crate::algebra::poly::Polynomial;
use crate::error::{Error, Result};
use crate::groebner::{kernel_generators, minimal_generators, FreeModule, GradedMap, GroebnerBasis, ModuleElement};

/// A homogeneous ideal together with its reduced grevlex Gröbner basis.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    field: F,
    gens: Vec<Polynomial<F>>,
    gb: GroebnerBasis<F>,
}

impl<F: Field> PartialEq for Ideal<F> {
    fn eq(&self, other: &Self) -> bool {
        self.gb == other.gb
    }
}

impl<F: Field> Eq for Ideal<F> {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealOp {
    Sum,
    Product,
    Intersection,
    Quotient,
}

fn scalars<F: Field>(ps: &[Polynomial<F>]) -> Vec<ModuleElement<F>> {
    ps.iter().map(|p| ModuleElement::scalar(p.clone())).collect()
}

fn swap_vars<F: Field>(f: &Polynomial<F>, v: usize) -> Polynomial<F> {
    if v == 3 {
        return f.clone();
    }
    let field = f.field();
    let mut img = [0, 1, 2, 3].map(|i| Polynomial::var(field, i));
    img.swap(v, 3);
    f.substitute(&img)
}

impl<F: Field> Ideal<F> {
    pub fn new(field: &F, gens: &[Polynomial<F>]) -> Result<Self> {
        let gens: Vec<_> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        let gb = GroebnerBasis::of_ideal(field, &gens)?;
        Ok(Ideal { field: field.clone(), gens, gb })
    }

    /// Parses each generator.
    pub fn parse(field: &F, gens: &[&str]) -> Result<Self> {
        let gens = gens.iter().map(|g| Polynomial::parse(field, g)).collect::<Result<Vec<_>>>()?;
        Self::new(field, &gens)
    }

    pub fn zero(field: &F) -> Self {
        Self::new(field, &[]).expect("the zero ideal")
    }

    pub fn unit(field: &F) -> Self {
        Self::new(field, &[Polynomial::one(field)]).expect("the unit ideal")
    }

    /// `(x0, x1, x2, x3)`.
    pub fn irrelevant(field: &F) -> Self {
        let vars: Vec<_> = (0..4).map(|i| Polynomial::var(field, i)).collect();
        Self::new(field, &vars).expect("linear forms are homogeneous")
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn groebner(&self) -> &GroebnerBasis<F> {
        &self.gb
    }

    /// A minimal homogeneous generating set chosen among the generators.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial<F>>> {
        let keep = minimal_generators(&self.field, &FreeModule::free(1), &[], &scalars(&self.gens))?;
        Ok(keep.into_iter().map(|k| self.gens[k].clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.gb.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb.lead_terms().iter().any(|(m, _)| m.is_one())
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        self.gb.contains_poly(f)
    }

    pub fn reduce(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        Ok(self.gb.normal_form(&ModuleElement::scalar(f.clone()))?.component(0).clone())
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.check_field(other)?;
        other.gb.contains_all(&scalars(&self.gens))
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        Ok(())
    }

    pub fn combine(&self, other: &Self, op: IdealOp) -> Result<Self> {
        match op {
            IdealOp::Sum => self.sum(other),
            IdealOp::Product => self.product(other),
            IdealOp::Intersection => self.intersection(other),
            IdealOp::Quotient => self.quotient(other),
        }
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Self::new(&self.field, &gens)
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f * g);
            }
        }
        Self::new(&self.field, &gens)
    }

    /// `{ sum a_i f_i : sum a_i f_i in J }` read off the kernel of `S^r -> S/J`.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.gens.is_empty() || other.gens.is_empty() {
            return Ok(Self::zero(&self.field));
        }
        let map = GradedMap::from_generators(&self.field, FreeModule::free(1), scalars(&self.gens))?;
        let ker = kernel_generators(&map, &scalars(other.gb.polynomials().as_slice()))?;
        let gens: Vec<_> = ker.iter().map(|a| map.apply(a).component(0).clone()).collect();
        Self::new(&self.field, &gens)
    }

    /// `I : (f)`.
    pub fn quotient_poly(&self, f: &Polynomial<F>) -> Result<Self> {
        if f.is_zero() {
            return Ok(Self::unit(&self.field));
        }
        let map = GradedMap::from_generators(&self.field, FreeModule::free(1), alloc::vec![ModuleElement::scalar(f.clone())])?;
        let ker = kernel_generators(&map, &scalars(&self.gb.polynomials()))?;
        let gens: Vec<_> = ker.into_iter().map(|a| a.into_components().remove(0)).collect();
        Self::new(&self.field, &gens)
    }

    /// `I : J`, the intersection of `I : (g)` over the generators of `J`.
    pub fn quotient(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let mut acc: Option<Self> = None;
        for g in other.gb.polynomials() {
            let q = self.quotient_poly(&g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersection(&q)?,
            });
            if acc.as_ref().is_some_and(|a| a.gb == self.gb) {
                // cannot shrink below I
                break;
            }
        }
        Ok(acc.unwrap_or_else(|| Self::unit(&self.field)))
    }

    /// `I : x_v^infinity`, from a grevlex basis in which `x_v` is the smallest variable.
    pub fn saturate_variable(&self, v: usize) -> Result<Self> {
        let swapped: Vec<_> = self.gb.polynomials().iter().map(|g| swap_vars(g, v)).collect();
        let gb = GroebnerBasis::of_ideal(&self.field, &swapped)?;
        let gens: Vec<_> = gb
            .polynomials()
            .iter()
            .map(|g| {
                let e = g.terms().iter().map(|(_, m)| m.exp(3)).min().unwrap_or(0);
                let mut exps = [0u16; 4];
                exps[3] = e;
                let divided = g.exact_div(&Polynomial::term(&self.field, self.field.one(), Monomial::new(exps)));
                swap_vars(&divided.expect("a monomial factor divides exactly"), v)
            })
            .collect();
        Self::new(&self.field, &gens)
    }

    /// `I : (x0, ..., x3)^infinity`, the intersection of the four variable saturations.
    pub fn saturate_irrelevant(&self) -> Result<Self> {
        let mut acc: Option<Self> = None;
        for v in 0..4 {
            let q = self.saturate_variable(v)?;
            acc = Some(match acc {
                None => q,
                Some(a) => {
                    if a.is_subset(&q)? {
                        a
                    } else if q.is_subset(&a)? {
                        q
                    } else {
                        a.intersection(&q)?
                    }
                }
            });
        }
        Ok(acc.expect("four variables"))
    }

    /// `I : J^infinity` by iterated quotients; the irrelevant ideal uses the faster
    /// variable-by-variable route.
    pub fn saturate(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if *other == Self::irrelevant(&self.field) {
            return self.saturate_irrelevant();
        }
        let mut cur = self.clone();
        loop {
            let next = cur.quotient(other)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    pub fn is_saturated(&self) -> Result<bool> {
        Ok(self.saturate_irrelevant()? == *self)
    }

    /// Hilbert data of `S / I`.
    pub fn quotient_hilbert(&self) -> HilbertData {
        HilbertData::from_numerator(quotient_numerator(&FreeModule::free(1), self.gb.lead_terms()))
    }

    /// Restriction of the generators to the line through `a` and `b`: binary forms in `(s, t)`
    /// for the point `s a + t b`.
    pub fn restrict_to_line(&self, a: &[F::Elem; 4], b: &[F::Elem; 4]) -> Vec<Vec<F::Elem>> {
        self.gens.iter().map(|g| restrict(g, a, b)).collect()
    }
}

/// Coefficients `c_k` of `s^(d-k) t^k` in `g(s a + t b)`.
pub(crate) fn restrict<F: Field>(g: &Polynomial<F>, a: &[F::Elem; 4], b: &[F::Elem; 4]) -> Vec<F::Elem> {
    let field = g.field();
    let d = g.degree().unwrap_or(0) as usize;
    let mut out = alloc::vec![field.zero(); d + 1];
    for (c, m) in g.terms() {
        // product over variables of (a_i s + b_i t)^e_i
        let mut acc = alloc::vec![c.clone()];
        for i in 0..4 {
            for _ in 0..m.exp(i) {
                let mut next = alloc::vec![field.zero(); acc.len() + 1];
                for (k, x) in acc.iter().enumerate() {
                    next[k] = field.add(&next[k], &field.mul(x, &a[i]));
                    next[k + 1] = field.add(&next[k + 1], &field.mul(x, &b[i]));
                }
                acc = next;
            }
        }
        for (k, x) in acc.into_iter().enumerate() {
            out[k] = field.add(&out[k], &x);
        }
    }
    out
}

impl<F: Field> fmt::Display for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}
