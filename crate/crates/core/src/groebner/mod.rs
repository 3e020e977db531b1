//! Gröbner bases of homogeneous submodules of graded free modules, normal forms,
//! syzygies, minimal generators and free resolutions.

mod engine;
pub mod module;
pub mod resolution;

use alloc::vec::Vec;

pub use engine::ModuleOrder;
pub use module::{monomial_count, FreeModule, GradedMap, ModuleElement};
pub use resolution::{free_resolution_of_subquotient, BettiTable, Resolution};

use crate::algebra::field::Field;
use crate::algebra::monomial::Monomial;
use crate::algebra::poly::Polynomial;
use crate::error::{Error, Result};
use engine::{Engine, OrderCtx, SVec};

pub(crate) fn to_svec<F: Field>(ctx: &OrderCtx, v: &ModuleElement<F>) -> SVec<F> {
    let mut out: SVec<F> = Vec::new();
    for (i, c) in v.components().iter().enumerate() {
        out.extend(c.terms().iter().map(|(e, m)| (e.clone(), *m, i as u32)));
    }
    ctx.sort(&mut out);
    out
}

pub(crate) fn from_svec<F: Field>(field: &F, rank: usize, v: &SVec<F>, offset: usize) -> ModuleElement<F> {
    let mut comps: Vec<Vec<(F::Elem, Monomial)>> = alloc::vec![Vec::new(); rank];
    for (c, m, p) in v {
        comps[*p as usize - offset].push((c.clone(), *m));
    }
    ModuleElement::from_components(comps.into_iter().map(|t| Polynomial::from_sorted_terms(field, t)).collect())
}

fn validate<F: Field>(field: &F, ambient: &FreeModule, gens: &[ModuleElement<F>]) -> Result<()> {
    for g in gens {
        if g.rank() != ambient.rank() {
            return Err(Error::AmbientMismatch { expected: ambient.rank(), found: g.rank() });
        }
        if g.components().iter().any(|c| c.field() != field) {
            return Err(Error::MixedFields);
        }
        if !g.is_homogeneous_in(ambient) {
            return Err(Error::Inhomogeneous);
        }
    }
    Ok(())
}

/// A reduced Gröbner basis of a homogeneous submodule.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    field: F,
    ambient: FreeModule,
    order: ModuleOrder,
    elements: Vec<ModuleElement<F>>,
    leads: Vec<(Monomial, usize)>,
    reduced: bool,
}

impl<F: Field> PartialEq for GroebnerBasis<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.order == other.order && self.elements == other.elements
    }
}

impl<F: Field> Eq for GroebnerBasis<F> {}

/// The reduced Gröbner basis of the submodule generated by `gens`.
pub fn buchberger<F: Field>(
    field: &F,
    ambient: &FreeModule,
    gens: &[ModuleElement<F>],
    order: ModuleOrder,
) -> Result<GroebnerBasis<F>> {
    GroebnerBasis::compute(field, ambient, gens, order)
}

impl<F: Field> GroebnerBasis<F> {
    pub fn compute(field: &F, ambient: &FreeModule, gens: &[ModuleElement<F>], order: ModuleOrder) -> Result<Self> {
        validate(field, ambient, gens)?;
        let ctx = OrderCtx { order, degrees: ambient.degrees() };
        let mut engine = Engine::new(field, ctx.clone());
        engine.run(gens.iter().map(|g| to_svec(&ctx, g)).collect(), None);
        let basis = engine.into_reduced();
        let leads = basis.iter().map(|v| (v[0].1, v[0].2 as usize)).collect();
        let elements = basis.iter().map(|v| from_svec(field, ambient.rank(), v, 0)).collect();
        Ok(GroebnerBasis { field: field.clone(), ambient: ambient.clone(), order, elements, leads, reduced: true })
    }

    /// Gröbner basis of an ideal of `S`, in grevlex.
    pub fn of_ideal(field: &F, gens: &[Polynomial<F>]) -> Result<Self> {
        let gens: Vec<_> = gens.iter().map(|g| ModuleElement::scalar(g.clone())).collect();
        Self::compute(field, &FreeModule::free(1), &gens, ModuleOrder::default())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }

    pub fn order(&self) -> ModuleOrder {
        self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn elements(&self) -> &[ModuleElement<F>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Leading monomials with their positions.
    pub fn lead_terms(&self) -> &[(Monomial, usize)] {
        &self.leads
    }

    /// For an ideal basis, the generators as polynomials.
    pub fn polynomials(&self) -> Vec<Polynomial<F>> {
        self.elements.iter().map(|e| e.component(0).clone()).collect()
    }

    fn engine(&self) -> Engine<F> {
        let ctx = OrderCtx { order: self.order, degrees: self.ambient.degrees() };
        let mut e = Engine::new(&self.field, ctx.clone());
        for g in &self.elements {
            e.load(to_svec(&ctx, g));
        }
        e
    }

    pub fn normal_form(&self, f: &ModuleElement<F>) -> Result<ModuleElement<F>> {
        validate(&self.field, &self.ambient, core::slice::from_ref(f))?;
        let engine = self.engine();
        let r = engine.full_reduce(to_svec(engine.ctx(), f), None);
        Ok(from_svec(&self.field, self.ambient.rank(), &r, 0))
    }

    /// Normal forms of many elements, sharing one reducer table.
    pub fn normal_forms(&self, fs: &[ModuleElement<F>]) -> Result<Vec<ModuleElement<F>>> {
        validate(&self.field, &self.ambient, fs)?;
        let engine = self.engine();
        Ok(fs
            .iter()
            .map(|f| from_svec(&self.field, self.ambient.rank(), &engine.full_reduce(to_svec(engine.ctx(), f), None), 0))
            .collect())
    }

    pub fn contains(&self, f: &ModuleElement<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_all(&self, fs: &[ModuleElement<F>]) -> Result<bool> {
        Ok(self.normal_forms(fs)?.iter().all(|r| r.is_zero()))
    }

    pub fn contains_poly(&self, f: &Polynomial<F>) -> Result<bool> {
        self.contains(&ModuleElement::scalar(f.clone()))
    }
}

/// Generators of the kernel of `F_src -> F_tgt / <relations>`, returned as elements of the
/// source. They form a Gröbner basis of the kernel, not necessarily a minimal one.
pub fn kernel_generators<F: Field>(map: &GradedMap<F>, relations: &[ModuleElement<F>]) -> Result<Vec<ModuleElement<F>>> {
    let field = map.field();
    let (tgt, src) = (map.target(), map.source());
    validate(field, tgt, relations)?;
    let r = tgt.rank();
    let aug = tgt.direct_sum(src);
    let ctx = OrderCtx { order: ModuleOrder::Block { split: r }, degrees: aug.degrees() };
    let mut inputs = Vec::with_capacity(src.rank() + relations.len());
    for (j, col) in map.columns().iter().enumerate() {
        let e = ModuleElement::unit(field, src.rank(), j);
        inputs.push(to_svec(&ctx, &col.concat(&e)));
    }
    for rel in relations {
        inputs.push(to_svec(&ctx, &rel.concat(&ModuleElement::zero(field, src.rank()))));
    }
    let mut engine = Engine::new(field, ctx);
    engine.run(inputs, None);
    let basis = engine.into_reduced();
    Ok(basis
        .iter()
        .filter(|v| v[0].2 as usize >= r)
        .map(|v| from_svec(field, src.rank(), v, r))
        .collect())
}

/// The syzygies of a list of homogeneous generators: a map onto the kernel of
/// `sum_i S(-deg g_i) -> ambient`.
pub fn syzygy_module<F: Field>(field: &F, ambient: &FreeModule, gens: &[ModuleElement<F>]) -> Result<GradedMap<F>> {
    let map = GradedMap::from_generators(field, ambient.clone(), gens.to_vec())?;
    let syz = kernel_generators(&map, &[])?;
    GradedMap::from_generators(field, map.source().clone(), syz)
}

/// Indices of a minimal generating subset of `gens` for `(gens + relations) / relations`.
pub fn minimal_generators<F: Field>(
    field: &F,
    ambient: &FreeModule,
    relations: &[ModuleElement<F>],
    gens: &[ModuleElement<F>],
) -> Result<Vec<usize>> {
    validate(field, ambient, relations)?;
    validate(field, ambient, gens)?;
    let ctx = OrderCtx { order: ModuleOrder::default(), degrees: ambient.degrees() };
    let inputs = relations.iter().chain(gens).map(|g| to_svec(&ctx, g)).collect();
    let mut engine = Engine::new(field, ctx);
    let kept = engine.run(inputs, None);
    Ok((0..gens.len()).filter(|&k| kept[relations.len() + k]).collect())
}

/// Expresses each target as a combination of the columns of `map`, when possible.
pub fn lift<F: Field>(map: &GradedMap<F>, targets: &[ModuleElement<F>]) -> Result<Vec<Option<ModuleElement<F>>>> {
    let field = map.field();
    let (tgt, src) = (map.target(), map.source());
    validate(field, tgt, targets)?;
    let r = tgt.rank();
    let aug = tgt.direct_sum(src);
    let ctx = OrderCtx { order: ModuleOrder::Block { split: r }, degrees: aug.degrees() };
    let inputs = map
        .columns()
        .iter()
        .enumerate()
        .map(|(j, col)| to_svec(&ctx, &col.concat(&ModuleElement::unit(field, src.rank(), j))))
        .collect();
    let mut engine = Engine::new(field, ctx.clone());
    engine.run(inputs, None);
    let zero = ModuleElement::zero(field, src.rank());
    Ok(targets
        .iter()
        .map(|t| {
            let rem = engine.reduce_above(to_svec(&ctx, &t.concat(&zero)), r)?;
            Some(from_svec(field, src.rank(), &rem, r).neg())
        })
        .collect())
}

#[cfg(test)]
mod tests;
