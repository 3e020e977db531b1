//! Graded free modules, their elements, and homogeneous maps between them.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::field::Field;
use crate::algebra::poly::Polynomial;
use crate::error::{Error, Result};

/// `S(t_0) + ... + S(t_{r-1})`; the basis vector `e_i` has degree `-t_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct FreeModule {
    twists: Vec<i32>,
}

impl FreeModule {
    pub fn new(twists: Vec<i32>) -> Self {
        FreeModule { twists }
    }

    /// `S^rank` with all basis vectors in degree 0.
    pub fn free(rank: usize) -> Self {
        FreeModule { twists: vec![0; rank] }
    }

    /// The free module whose basis vectors sit in the given degrees.
    pub fn from_degrees(degrees: impl IntoIterator<Item = i32>) -> Self {
        FreeModule { twists: degrees.into_iter().map(|d| -d).collect() }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    #[inline]
    pub fn gen_degree(&self, i: usize) -> i32 {
        -self.twists[i]
    }

    pub fn degrees(&self) -> Vec<i32> {
        self.twists.iter().map(|t| -t).collect()
    }

    pub fn direct_sum(&self, other: &FreeModule) -> FreeModule {
        let mut twists = self.twists.clone();
        twists.extend_from_slice(&other.twists);
        FreeModule { twists }
    }

    /// `F(d)`.
    pub fn twisted(&self, d: i32) -> FreeModule {
        FreeModule { twists: self.twists.iter().map(|t| t + d).collect() }
    }

    /// Dimension of the degree-`d` part.
    pub fn hilbert_function(&self, d: i32) -> u64 {
        self.twists.iter().map(|t| monomial_count(d + t)).sum()
    }
}

/// Number of monomials of degree `d` in four variables.
pub fn monomial_count(d: i32) -> u64 {
    if d < 0 {
        0
    } else {
        let d = d as u64;
        (d + 1) * (d + 2) * (d + 3) / 6
    }
}

impl fmt::Display for FreeModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twists.is_empty() {
            return f.write_str("0");
        }
        let mut runs: Vec<(i32, usize)> = Vec::new();
        for &t in &self.twists {
            match runs.last_mut() {
                Some((tt, n)) if *tt == t => *n += 1,
                _ => runs.push((t, 1)),
            }
        }
        for (k, (t, n)) in runs.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if *n > 1 {
                write!(f, "{n}")?;
            }
            if *t == 0 {
                f.write_str("S")?;
            } else {
                write!(f, "S({t})")?;
            }
        }
        Ok(())
    }
}

/// An element of a free module, one polynomial per basis position.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModuleElement<F: Field> {
    comps: Vec<Polynomial<F>>,
}

impl<F: Field> ModuleElement<F> {
    pub fn zero(field: &F, rank: usize) -> Self {
        ModuleElement { comps: vec![Polynomial::zero(field); rank] }
    }

    pub fn unit(field: &F, rank: usize, i: usize) -> Self {
        let mut e = Self::zero(field, rank);
        e.comps[i] = Polynomial::one(field);
        e
    }

    pub fn from_components(comps: Vec<Polynomial<F>>) -> Self {
        ModuleElement { comps }
    }

    /// An element of the rank-1 free module.
    pub fn scalar(p: Polynomial<F>) -> Self {
        ModuleElement { comps: vec![p] }
    }

    pub fn components(&self) -> &[Polynomial<F>] {
        &self.comps
    }

    pub fn into_components(self) -> Vec<Polynomial<F>> {
        self.comps
    }

    pub fn component(&self, i: usize) -> &Polynomial<F> {
        &self.comps[i]
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// Homogeneous degree with respect to the basis degrees of `ambient`; `None` if zero or
    /// inhomogeneous.
    pub fn degree_in(&self, ambient: &FreeModule) -> Option<i32> {
        let mut deg = None;
        for (i, c) in self.comps.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = c.homogeneous_degree()? as i32 + ambient.gen_degree(i);
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }

    pub fn is_homogeneous_in(&self, ambient: &FreeModule) -> bool {
        self.is_zero() || self.degree_in(ambient).is_some()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        ModuleElement { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        ModuleElement { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a - b).collect() }
    }

    pub fn neg(&self) -> Self {
        ModuleElement { comps: self.comps.iter().map(|a| -a).collect() }
    }

    pub fn mul_poly(&self, p: &Polynomial<F>) -> Self {
        ModuleElement { comps: self.comps.iter().map(|a| a * p).collect() }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        ModuleElement { comps: self.comps.iter().map(|a| a.scale(c)).collect() }
    }

    /// Concatenation, the element of the direct sum.
    pub fn concat(&self, other: &Self) -> Self {
        let mut comps = self.comps.clone();
        comps.extend(other.comps.iter().cloned());
        ModuleElement { comps }
    }

    pub fn slice(&self, range: core::ops::Range<usize>) -> Self {
        ModuleElement { comps: self.comps[range].to_vec() }
    }
}

impl<F: Field> fmt::Debug for ModuleElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> fmt::Display for ModuleElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.comps.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// A homogeneous map of degree zero between free modules, stored by columns:
/// `columns[j]` is the image of the `j`-th basis vector of the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap<F: Field> {
    field: F,
    source: FreeModule,
    target: FreeModule,
    columns: Vec<ModuleElement<F>>,
}

impl<F: Field> GradedMap<F> {
    pub fn new(field: &F, source: FreeModule, target: FreeModule, columns: Vec<ModuleElement<F>>) -> Result<Self> {
        if columns.len() != source.rank() {
            return Err(Error::AmbientMismatch { expected: source.rank(), found: columns.len() });
        }
        for (j, col) in columns.iter().enumerate() {
            if col.rank() != target.rank() {
                return Err(Error::AmbientMismatch { expected: target.rank(), found: col.rank() });
            }
            if col.is_zero() {
                continue;
            }
            match col.degree_in(&target) {
                Some(d) if d == source.gen_degree(j) => {}
                Some(d) => {
                    return Err(Error::DegreeMismatch(format!(
                        "column {j} has degree {d}, basis vector has degree {}",
                        source.gen_degree(j)
                    )))
                }
                None => return Err(Error::Inhomogeneous),
            }
        }
        Ok(GradedMap { field: field.clone(), source, target, columns })
    }

    /// The map whose columns are the given homogeneous elements, with the source degrees
    /// read off the columns; zero columns are rejected because their degree is unknown.
    pub fn from_generators(field: &F, target: FreeModule, columns: Vec<ModuleElement<F>>) -> Result<Self> {
        let mut degrees = Vec::with_capacity(columns.len());
        for col in &columns {
            if col.is_zero() {
                return Err(Error::Dimension("zero column has no degree".into()));
            }
            degrees.push(col.degree_in(&target).ok_or(Error::Inhomogeneous)?);
        }
        Self::new(field, FreeModule::from_degrees(degrees), target, columns)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn source(&self) -> &FreeModule {
        &self.source
    }

    pub fn target(&self) -> &FreeModule {
        &self.target
    }

    pub fn columns(&self) -> &[ModuleElement<F>] {
        &self.columns
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial<F> {
        self.columns[col].component(row)
    }

    pub fn apply(&self, v: &ModuleElement<F>) -> ModuleElement<F> {
        assert_eq!(v.rank(), self.source.rank(), "rank mismatch");
        let mut acc = ModuleElement::zero(&self.field, self.target.rank());
        for (c, col) in v.components().iter().zip(&self.columns) {
            if !c.is_zero() {
                acc = acc.add(&col.mul_poly(c));
            }
        }
        acc
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMap<F>) -> GradedMap<F> {
        assert_eq!(other.target, self.source, "maps are not composable");
        let columns = other.columns.iter().map(|c| self.apply(c)).collect();
        GradedMap { field: self.field.clone(), source: other.source.clone(), target: self.target.clone(), columns }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_zero())
    }

    /// True when some entry is a nonzero constant.
    pub fn has_unit_entry(&self) -> bool {
        self.columns.iter().any(|c| c.components().iter().any(|p| p.degree() == Some(0)))
    }

    /// Rows as lists of polynomials.
    pub fn rows(&self) -> Vec<Vec<Polynomial<F>>> {
        (0..self.target.rank())
            .map(|i| self.columns.iter().map(|c| c.component(i).clone()).collect())
            .collect()
    }
}
