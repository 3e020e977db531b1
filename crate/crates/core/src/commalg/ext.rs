//! Graded `Ext` modules and sheaf cohomology by local duality.

use alloc::vec::Vec;

use super::graded::{GradedModule, ModuleKind};
use super::hilbert::HilbertData;
use crate::algebra::field::Field;
use crate::error::Result;
use crate::groebner::{kernel_generators, FreeModule, GradedMap, ModuleElement, Resolution};

/// `Hom(F, N)` for a free module `F` with basis degrees `d_k`, realized inside
/// `sum_k A(d_k)` where `A` is the ambient module of `N`.
struct HomSpace<F: Field> {
    ambient: FreeModule,
    gens: Vec<ModuleElement<F>>,
    relations: Vec<ModuleElement<F>>,
}

fn block<F: Field>(field: &F, blocks: usize, a: usize, k: usize, v: &ModuleElement<F>) -> ModuleElement<F> {
    let mut comps = alloc::vec![crate::algebra::poly::Polynomial::zero(field); blocks * a];
    for (i, c) in v.components().iter().enumerate() {
        comps[k * a + i] = c.clone();
    }
    ModuleElement::from_components(comps)
}

fn hom_space<F: Field>(free: &FreeModule, n: &GradedModule<F>) -> HomSpace<F> {
    let field = n.field();
    let a = n.ambient().rank();
    let mut twists = Vec::with_capacity(free.rank() * a);
    for d in free.degrees() {
        twists.extend(n.ambient().twisted(d).twists());
    }
    let mut gens = Vec::new();
    let mut relations = Vec::new();
    for k in 0..free.rank() {
        gens.extend(n.generators().iter().map(|g| block(field, free.rank(), a, k, g)));
        relations.extend(n.relations().iter().map(|r| block(field, free.rank(), a, k, r)));
    }
    HomSpace { ambient: FreeModule::new(twists), gens, relations }
}

/// `phi -> phi o d` on ambient vectors, for `d : G -> F` and vectors in `Hom(F, A)`.
fn pull_back<F: Field>(d: &GradedMap<F>, a: usize, v: &ModuleElement<F>) -> ModuleElement<F> {
    let field = d.field();
    let (rows, cols) = (d.target().rank(), d.source().rank());
    let mut out = ModuleElement::zero(field, cols * a);
    for l in 0..cols {
        for k in 0..rows {
            let e = d.entry(k, l);
            if e.is_zero() {
                continue;
            }
            let piece = v.slice(k * a..(k + 1) * a).mul_poly(e);
            out = out.add(&block(field, cols, a, l, &piece));
        }
    }
    out
}

/// `Ext^i(M, N)` from a free resolution of `M`.
pub fn ext_from_resolution<F: Field>(res: &Resolution<F>, n: &GradedModule<F>, i: usize) -> Result<GradedModule<F>> {
    let field = n.field();
    let a = n.ambient().rank();
    let frees = res.free_modules();
    let Some(fi) = frees.get(i) else {
        return GradedModule::new(field, FreeModule::default(), Vec::new(), Vec::new(), ModuleKind::Quotient);
    };
    let hom_i = hom_space(fi, n);
    // cycles: elements of Hom(F_i, N) killed by composition with d_{i+1}
    let cycles = match res.maps().get(i) {
        None => hom_i.gens.clone(),
        Some(d) => {
            let hom_next = hom_space(d.source(), n);
            let images: Vec<_> = hom_i.gens.iter().map(|g| pull_back(d, a, g)).collect();
            let src = FreeModule::from_degrees(hom_i.gens.iter().map(|g| g.degree_in(&hom_i.ambient).expect("nonzero generator")));
            let map = GradedMap::new(field, src, hom_next.ambient.clone(), images)?;
            let ker = kernel_generators(&map, &hom_next.relations)?;
            let lift = GradedMap::new(field, map.source().clone(), hom_i.ambient.clone(), hom_i.gens.clone())?;
            ker.iter().map(|k| lift.apply(k)).collect()
        }
    };
    let mut boundaries = hom_i.relations.clone();
    if i > 0 {
        let d = &res.maps()[i - 1];
        let hom_prev = hom_space(d.target(), n);
        boundaries.extend(hom_prev.gens.iter().map(|g| pull_back(d, a, g)));
    }
    GradedModule::new(field, hom_i.ambient, cycles, boundaries, ModuleKind::Quotient)
}

/// The graded module `Ext^i(M, N)`, computed from a minimal free resolution of `M`.
pub fn graded_ext<F: Field>(m: &GradedModule<F>, n: &GradedModule<F>, i: usize) -> Result<GradedModule<F>> {
    let res = m.free_resolution(true)?;
    ext_from_resolution(&res, n, i)
}

/// `Hom(M, N) = Ext^0(M, N)`.
pub fn graded_hom<F: Field>(m: &GradedModule<F>, n: &GradedModule<F>) -> Result<GradedModule<F>> {
    graded_ext(m, n, 0)
}

/// Hilbert data of `Ext^j(M, S(-4))` for `j = 0..=4`, from which every `h^i(M~(d))` follows.
#[derive(Clone, Debug)]
pub struct CohomologyTable {
    module: HilbertData,
    duals: Vec<HilbertData>,
}

impl CohomologyTable {
    pub fn new<F: Field>(m: &GradedModule<F>) -> Result<Self> {
        Self::from_resolution(m, &m.free_resolution(true)?)
    }

    pub fn from_resolution<F: Field>(m: &GradedModule<F>, res: &Resolution<F>) -> Result<Self> {
        let canonical = GradedModule::free(m.field(), FreeModule::new(alloc::vec![-4]));
        let duals = (0..=4).map(|j| ext_from_resolution(res, &canonical, j)?.hilbert()).collect::<Result<Vec<_>>>()?;
        Ok(CohomologyTable { module: m.hilbert()?, duals })
    }

    /// `dim H^i_m(M)_d`, by local duality.
    pub fn local(&self, i: usize, d: i32) -> i64 {
        self.duals[4 - i].hilbert_function(-d)
    }

    /// `h^i(M~(d))` for `0 <= i <= 3`.
    pub fn h(&self, i: usize, d: i32) -> i64 {
        assert!(i <= 3, "cohomological degree above 3");
        if i == 0 {
            self.module.hilbert_function(d) - self.local(0, d) + self.local(1, d)
        } else {
            self.local(i + 1, d)
        }
    }

    /// Hilbert data of `Ext^j(M, S(-4))`.
    pub fn dual(&self, j: usize) -> &HilbertData {
        &self.duals[j]
    }

    pub fn module_hilbert(&self) -> &HilbertData {
        &self.module
    }
}

/// `dim H^i(M~(d))`.
pub fn sheaf_cohomology_dim<F: Field>(m: &GradedModule<F>, i: usize, d: i32) -> Result<i64> {
    Ok(CohomologyTable::new(m)?.h(i, d))
}
