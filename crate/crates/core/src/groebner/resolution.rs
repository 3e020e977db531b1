//! Graded free resolutions and Betti tables.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::module::{FreeModule, GradedMap, ModuleElement};
use super::{kernel_generators, minimal_generators, GroebnerBasis, ModuleOrder};
use crate::algebra::field::Field;
use crate::error::{Error, Result};

/// Ranks `beta_{i,j}`: homological degree `i`, internal degree `j`.
pub type BettiTable = BTreeMap<(usize, i32), usize>;

/// `0 <- M <- F_0 <- F_1 <- ... <- F_n <- 0`.
///
/// `maps[i]` is `d_{i+1} : F_{i+1} -> F_i`; `augmentation` lists the images in the
/// ambient module of the basis of `F_0`.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    field: F,
    ambient: FreeModule,
    augmentation: Vec<ModuleElement<F>>,
    relations: Vec<ModuleElement<F>>,
    f0: FreeModule,
    maps: Vec<GradedMap<F>>,
    minimal: bool,
}

/// A free resolution of `(gens + relations) / relations`, a subquotient of `ambient`.
///
/// With `minimal` set, generators are pruned by graded Nakayama at every step, so
/// the Betti table is the minimal one. Otherwise the Gröbner generators of each
/// syzygy module are used as they come for the first three steps.
pub fn free_resolution_of_subquotient<F: Field>(
    field: &F,
    ambient: &FreeModule,
    gens: &[ModuleElement<F>],
    relations: &[ModuleElement<F>],
    minimal: bool,
) -> Result<Resolution<F>> {
    let augmentation: Vec<ModuleElement<F>> = if minimal {
        minimal_generators(field, ambient, relations, gens)?.into_iter().map(|k| gens[k].clone()).collect()
    } else {
        gens.iter().filter(|g| !g.is_zero()).cloned().collect()
    };
    let eps = GradedMap::from_generators(field, ambient.clone(), augmentation.clone())?;
    let f0 = eps.source().clone();
    let mut current = kernel_generators(&eps, relations)?;
    let mut prev = f0.clone();
    let mut maps = Vec::new();
    let mut step = 1;
    loop {
        current = if minimal || step >= 4 {
            let keep = minimal_generators(field, &prev, &[], &current)?;
            keep.into_iter().map(|k| current[k].clone()).collect()
        } else {
            current.into_iter().filter(|g| !g.is_zero()).collect()
        };
        if current.is_empty() {
            break;
        }
        if step > 8 {
            return Err(Error::Unsupported("resolution did not terminate".into()));
        }
        let d = GradedMap::from_generators(field, prev.clone(), current)?;
        current = kernel_generators(&d, &[])?;
        prev = d.source().clone();
        maps.push(d);
        step += 1;
    }
    Ok(Resolution {
        field: field.clone(),
        ambient: ambient.clone(),
        augmentation,
        relations: relations.to_vec(),
        f0,
        maps,
        minimal,
    })
}

impl<F: Field> Resolution<F> {
    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// `d_{i+1} : F_{i+1} -> F_i`.
    pub fn maps(&self) -> &[GradedMap<F>] {
        &self.maps
    }

    pub fn augmentation(&self) -> &[ModuleElement<F>] {
        &self.augmentation
    }

    /// `F_0, F_1, ..., F_n`.
    pub fn free_modules(&self) -> Vec<FreeModule> {
        let mut out = alloc::vec![self.f0.clone()];
        out.extend(self.maps.iter().map(|m| m.source().clone()));
        out
    }

    pub fn betti(&self) -> BettiTable {
        let mut table = BettiTable::new();
        for (i, fm) in self.free_modules().iter().enumerate() {
            for d in fm.degrees() {
                *table.entry((i, d)).or_insert(0) += 1;
            }
        }
        table
    }

    /// Alternating sum of the ranks of the degree-`d` parts, which is `dim M_d`.
    pub fn euler_characteristic(&self, d: i32) -> i64 {
        self.free_modules()
            .iter()
            .enumerate()
            .map(|(i, fm)| if i % 2 == 0 { 1 } else { -1 } * fm.hilbert_function(d) as i64)
            .sum()
    }

    /// `max_i (max degree in F_i - i)`.
    pub fn regularity(&self) -> i32 {
        self.free_modules()
            .iter()
            .enumerate()
            .flat_map(|(i, fm)| fm.degrees().into_iter().map(move |d| d - i as i32))
            .max()
            .unwrap_or(0)
    }

    pub fn has_unit_entries(&self) -> bool {
        self.maps.iter().any(|m| m.has_unit_entry())
    }

    /// Checks `d_i d_{i+1} = 0`, `ker d_i = im d_{i+1}`, injectivity of the last map and
    /// exactness at `F_0` (kernel of the augmentation modulo relations equals `im d_1`).
    pub fn verify_exact(&self) -> Result<bool> {
        let field = &self.field;
        let eps = GradedMap::new(field, self.f0.clone(), self.ambient.clone(), self.augmentation.clone())?;
        let mut kernels = Vec::with_capacity(self.maps.len() + 1);
        kernels.push(kernel_generators(&eps, &self.relations)?);
        for d in &self.maps {
            kernels.push(kernel_generators(d, &[])?);
        }
        if let Some(first) = self.maps.first() {
            let rel_gb = GroebnerBasis::compute(field, &self.ambient, &self.relations, ModuleOrder::default())?;
            let images: Vec<_> = first.columns().iter().map(|c| eps.apply(c)).collect();
            if !rel_gb.contains_all(&images)? {
                return Ok(false);
            }
        }
        for w in self.maps.windows(2) {
            if !w[0].compose(&w[1]).is_zero() {
                return Ok(false);
            }
        }
        for (i, ker) in kernels.iter().enumerate() {
            let image_gb = match self.maps.get(i) {
                Some(d) => GroebnerBasis::compute(field, d.target(), d.columns(), ModuleOrder::default())?,
                None => {
                    if ker.iter().any(|k| !k.is_zero()) {
                        return Ok(false);
                    }
                    continue;
                }
            };
            if !image_gb.contains_all(ker)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
