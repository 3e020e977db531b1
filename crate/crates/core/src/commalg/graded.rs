//! Finitely generated graded modules, presented as subquotients of free modules.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::hilbert::{numerator_sub, quotient_numerator, HilbertData};
use super::ideal::Ideal;
use crate::algebra::field::Field;
use crate::algebra::poly::Polynomial;
use crate::error::{Error, Result};
use crate::groebner::{
    free_resolution_of_subquotient, kernel_generators, minimal_generators, FreeModule, GradedMap, GroebnerBasis,
    ModuleElement, ModuleOrder, Resolution,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModuleKind {
    Ideal,
    SubmoduleOfFree,
    Quotient,
    Extension,
}

/// `M = (<gens> + <relations>) / <relations>` inside a graded free module.
#[derive(Clone, Debug)]
pub struct GradedModule<F: Field> {
    field: F,
    ambient: FreeModule,
    gens: Vec<ModuleElement<F>>,
    relations: Vec<ModuleElement<F>>,
    kind: ModuleKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleOp {
    Kernel,
    Cokernel,
    Image,
}

fn check<F: Field>(field: &F, ambient: &FreeModule, elems: &[ModuleElement<F>]) -> Result<()> {
    for g in elems {
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

impl<F: Field> GradedModule<F> {
    pub fn new(
        field: &F,
        ambient: FreeModule,
        gens: Vec<ModuleElement<F>>,
        relations: Vec<ModuleElement<F>>,
        kind: ModuleKind,
    ) -> Result<Self> {
        check(field, &ambient, &gens)?;
        check(field, &ambient, &relations)?;
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let relations = relations.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(GradedModule { field: field.clone(), ambient, gens, relations, kind })
    }

    /// `I(twist)` as a submodule of `S(twist)`.
    pub fn from_ideal(ideal: &Ideal<F>, twist: i32) -> Self {
        let gens = ideal.generators().iter().map(|g| ModuleElement::scalar(g.clone())).collect();
        GradedModule {
            field: ideal.field().clone(),
            ambient: FreeModule::new(alloc::vec![twist]),
            gens,
            relations: Vec::new(),
            kind: ModuleKind::Ideal,
        }
    }

    /// `(S / I)(twist)`.
    pub fn quotient_ring(ideal: &Ideal<F>, twist: i32) -> Self {
        let field = ideal.field();
        GradedModule {
            field: field.clone(),
            ambient: FreeModule::new(alloc::vec![twist]),
            gens: alloc::vec![ModuleElement::unit(field, 1, 0)],
            relations: ideal.generators().iter().map(|g| ModuleElement::scalar(g.clone())).collect(),
            kind: ModuleKind::Quotient,
        }
    }

    pub fn free(field: &F, ambient: FreeModule) -> Self {
        let gens = (0..ambient.rank()).map(|i| ModuleElement::unit(field, ambient.rank(), i)).collect();
        GradedModule { field: field.clone(), ambient, gens, relations: Vec::new(), kind: ModuleKind::Quotient }
    }

    pub fn cokernel(map: &GradedMap<F>) -> Self {
        let field = map.field();
        let mut m = Self::free(field, map.target().clone());
        m.relations = map.columns().iter().filter(|c| !c.is_zero()).cloned().collect();
        m
    }

    pub fn image(map: &GradedMap<F>) -> Self {
        GradedModule {
            field: map.field().clone(),
            ambient: map.target().clone(),
            gens: map.columns().iter().filter(|c| !c.is_zero()).cloned().collect(),
            relations: Vec::new(),
            kind: ModuleKind::SubmoduleOfFree,
        }
    }

    pub fn kernel(map: &GradedMap<F>) -> Result<Self> {
        let gens = kernel_generators(map, &[])?;
        Self::new(map.field(), map.source().clone(), gens, Vec::new(), ModuleKind::SubmoduleOfFree)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }

    pub fn generators(&self) -> &[ModuleElement<F>] {
        &self.gens
    }

    pub fn relations(&self) -> &[ModuleElement<F>] {
        &self.relations
    }

    pub fn kind(&self) -> ModuleKind {
        self.kind
    }

    pub fn with_kind(mut self, kind: ModuleKind) -> Self {
        self.kind = kind;
        self
    }

    /// Degrees of the generators.
    pub fn generator_degrees(&self) -> Vec<i32> {
        self.gens.iter().map(|g| g.degree_in(&self.ambient).expect("nonzero homogeneous generator")).collect()
    }

    /// The map from the free module on the generators onto `<gens>`.
    pub fn generator_map(&self) -> Result<GradedMap<F>> {
        let src = FreeModule::from_degrees(self.generator_degrees());
        GradedMap::new(&self.field, src, self.ambient.clone(), self.gens.clone())
    }

    /// `M(d)`.
    pub fn twist(&self, d: i32) -> Self {
        let mut m = self.clone();
        m.ambient = self.ambient.twisted(d);
        m
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        let (r, s) = (self.ambient.rank(), other.ambient.rank());
        let zr = ModuleElement::zero(&self.field, r);
        let zs = ModuleElement::zero(&self.field, s);
        let left = |v: &ModuleElement<F>| v.concat(&zs);
        let right = |v: &ModuleElement<F>| zr.concat(v);
        let gens = self.gens.iter().map(left).chain(other.gens.iter().map(right)).collect();
        let rels = self.relations.iter().map(left).chain(other.relations.iter().map(right)).collect();
        Self::new(&self.field, self.ambient.direct_sum(&other.ambient), gens, rels, ModuleKind::Quotient)
    }

    fn relation_basis(&self) -> Result<GroebnerBasis<F>> {
        GroebnerBasis::compute(&self.field, &self.ambient, &self.relations, ModuleOrder::default())
    }

    fn total_basis(&self) -> Result<GroebnerBasis<F>> {
        let mut all = self.gens.clone();
        all.extend(self.relations.iter().cloned());
        GroebnerBasis::compute(&self.field, &self.ambient, &all, ModuleOrder::default())
    }

    /// Hilbert data from the lead terms: `HF(F / R) - HF(F / (G + R))`.
    pub fn hilbert(&self) -> Result<HilbertData> {
        let rel = quotient_numerator(&self.ambient, self.relation_basis()?.lead_terms());
        let tot = quotient_numerator(&self.ambient, self.total_basis()?.lead_terms());
        Ok(HilbertData::from_numerator(numerator_sub(&rel, &tot)))
    }

    pub fn hilbert_function(&self, d: i32) -> Result<i64> {
        Ok(self.hilbert()?.hilbert_function(d))
    }

    pub fn is_zero(&self) -> Result<bool> {
        self.relation_basis()?.contains_all(&self.gens)
    }

    /// Whether `v` (an element of the ambient module) lies in `<gens> + <relations>`.
    pub fn contains(&self, v: &ModuleElement<F>) -> Result<bool> {
        self.total_basis()?.contains(v)
    }

    /// Whether `v` represents zero in the module.
    pub fn is_zero_element(&self, v: &ModuleElement<F>) -> Result<bool> {
        self.relation_basis()?.contains(v)
    }

    /// The same module with a minimal set of generators taken from the current ones.
    pub fn minimalize(&self) -> Result<Self> {
        let keep = minimal_generators(&self.field, &self.ambient, &self.relations, &self.gens)?;
        let mut m = self.clone();
        m.gens = keep.into_iter().map(|k| self.gens[k].clone()).collect();
        Ok(m)
    }

    pub fn free_resolution(&self, minimal: bool) -> Result<Resolution<F>> {
        free_resolution_of_subquotient(&self.field, &self.ambient, &self.gens, &self.relations, minimal)
    }

    /// A minimal presentation `F_1 -> F_0 -> M -> 0`, returned as the map `F_1 -> F_0`.
    pub fn presentation(&self) -> Result<GradedMap<F>> {
        let res = self.free_resolution(true)?;
        match res.maps().first() {
            Some(m) => Ok(m.clone()),
            None => GradedMap::new(&self.field, FreeModule::default(), res.free_modules()[0].clone(), Vec::new()),
        }
    }

    /// The same module written as a cokernel of a free module.
    pub fn as_cokernel(&self) -> Result<Self> {
        let p = self.presentation()?;
        Ok(Self::cokernel(&p).with_kind(self.kind))
    }

    /// `ann(M)`, the intersection over generators `g` of `R : g`.
    pub fn annihilator(&self) -> Result<Ideal<F>> {
        let mut acc = Ideal::unit(&self.field);
        for g in &self.gens {
            let d = g.degree_in(&self.ambient).expect("nonzero homogeneous generator");
            let map = GradedMap::new(&self.field, FreeModule::from_degrees([d]), self.ambient.clone(), alloc::vec![g.clone()])?;
            let ker = kernel_generators(&map, &self.relations)?;
            let polys: Vec<Polynomial<F>> = ker.into_iter().map(|k| k.into_components().remove(0)).collect();
            acc = acc.intersection(&Ideal::new(&self.field, &polys)?)?;
        }
        Ok(acc)
    }

    /// Kernel, cokernel or image of the map `A -> B` sending the `j`-th generator of `A`
    /// to the `j`-th column of `f`, an element of the ambient module of `B`.
    pub fn module_op(a: &Self, b: &Self, f: &[ModuleElement<F>], op: ModuleOp) -> Result<Self> {
        if f.len() != a.gens.len() {
            return Err(Error::Dimension(alloc::format!(
                "{} columns for a module with {} generators",
                f.len(),
                a.gens.len()
            )));
        }
        let src = FreeModule::from_degrees(a.generator_degrees());
        let map = GradedMap::new(&a.field, src, b.ambient.clone(), f.to_vec())?;
        match op {
            ModuleOp::Image => Self::new(&a.field, b.ambient.clone(), f.to_vec(), b.relations.clone(), ModuleKind::Quotient),
            ModuleOp::Cokernel => {
                let mut rels = b.relations.clone();
                rels.extend(f.iter().cloned());
                Self::new(&a.field, b.ambient.clone(), b.gens.clone(), rels, ModuleKind::Quotient)
            }
            ModuleOp::Kernel => {
                let ker = kernel_generators(&map, &b.relations)?;
                let gmap = a.generator_map()?;
                let gens = ker.iter().map(|k| gmap.apply(k)).collect();
                Self::new(&a.field, a.ambient.clone(), gens, a.relations.clone(), ModuleKind::Quotient)
            }
        }
    }

    pub fn to_json(&self) -> ModuleJson {
        let conv = |v: &[ModuleElement<F>]| v.iter().map(|e| e.components().iter().map(|c| c.to_string()).collect()).collect();
        ModuleJson {
            twists: self.ambient.twists().to_vec(),
            generators: conv(&self.gens),
            relations: conv(&self.relations),
            kind: self.kind,
        }
    }

    pub fn from_json(field: &F, json: &ModuleJson) -> Result<Self> {
        let conv = |rows: &[Vec<String>]| -> Result<Vec<ModuleElement<F>>> {
            rows.iter()
                .map(|r| {
                    let comps = r.iter().map(|s| Polynomial::parse(field, s)).collect::<Result<Vec<_>>>()?;
                    Ok(ModuleElement::from_components(comps))
                })
                .collect()
        };
        Self::new(field, FreeModule::new(json.twists.clone()), conv(&json.generators)?, conv(&json.relations)?, json.kind)
    }
}

/// Serialized form: polynomial strings per component, with the ambient twists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub twists: Vec<i32>,
    pub generators: Vec<Vec<String>>,
    pub relations: Vec<Vec<String>>,
    pub kind: ModuleKind,
}
