//! Extensions `0 -> A -> E -> B -> 0` built from cocycles on the first syzygies of `B`.

use alloc::vec::Vec;

use super::graded::{GradedModule, ModuleKind};
use crate::algebra::field::Field;
use crate::algebra::linalg::Matrix;
use crate::algebra::monomial::Monomial;
use crate::algebra::poly::Polynomial;
use crate::error::{Error, Result};
use crate::groebner::{kernel_generators, minimal_generators, FreeModule, GradedMap, GroebnerBasis, ModuleElement, ModuleOrder};

/// The free cover `F_0 -> B` on the generators of `B` and generators of its kernel `Z_1`.
#[derive(Clone, Debug)]
pub struct SyzygyData<F: Field> {
    pub cover: GradedMap<F>,
    /// Elements of `F_0` generating `Z_1`.
    pub syzygies: Vec<ModuleElement<F>>,
    /// Relations among the syzygies, as elements of the free module on them.
    pub second: Vec<ModuleElement<F>>,
}

impl<F: Field> SyzygyData<F> {
    pub fn new(b: &GradedModule<F>) -> Result<Self> {
        let cover = b.generator_map()?;
        let all: Vec<_> = kernel_generators(&cover, b.relations())?.into_iter().filter(|z| !z.is_zero()).collect();
        let keep = minimal_generators(b.field(), cover.source(), &[], &all)?;
        let syzygies: Vec<_> = keep.into_iter().map(|k| all[k].clone()).collect();
        let z = GradedMap::from_generators(b.field(), cover.source().clone(), syzygies.clone())?;
        let second = kernel_generators(&z, &[])?;
        Ok(SyzygyData { cover, syzygies, second })
    }

    pub fn f0(&self) -> &FreeModule {
        self.cover.source()
    }

    pub fn syzygy_degrees(&self) -> Vec<i32> {
        self.syzygies.iter().map(|z| z.degree_in(self.f0()).expect("nonzero syzygy")).collect()
    }
}

/// Checks that `class` (one element of the ambient of `A` per syzygy) defines a homomorphism
/// `Z_1 -> A` of degree zero.
pub fn is_cocycle<F: Field>(data: &SyzygyData<F>, a: &GradedModule<F>, class: &[ModuleElement<F>]) -> Result<bool> {
    if class.len() != data.syzygies.len() {
        return Err(Error::Dimension(alloc::format!(
            "{} class values for {} syzygies",
            class.len(),
            data.syzygies.len()
        )));
    }
    for (c, d) in class.iter().zip(data.syzygy_degrees()) {
        if !c.is_zero() && c.degree_in(a.ambient()) != Some(d) {
            return Err(Error::DegreeMismatch(alloc::format!("class value of degree {:?}, expected {d}", c.degree_in(a.ambient()))));
        }
    }
    if !class.iter().all(|c| a.contains(c).unwrap_or(false)) {
        return Ok(false);
    }
    let rel = GroebnerBasis::compute(a.field(), a.ambient(), a.relations(), ModuleOrder::default())?;
    for s in &data.second {
        let mut acc = ModuleElement::zero(a.field(), a.ambient().rank());
        for (c, coef) in class.iter().zip(s.components()) {
            if !coef.is_zero() {
                acc = acc.add(&c.mul_poly(coef));
            }
        }
        if !rel.contains(&acc)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `E = (F_0 + A) / {(z, -class(z))}`, the pushout of `0 -> Z_1 -> F_0 -> B -> 0` along the class.
pub fn extension_pushout<F: Field>(
    b: &GradedModule<F>,
    a: &GradedModule<F>,
    data: &SyzygyData<F>,
    class: &[ModuleElement<F>],
) -> Result<GradedModule<F>> {
    if !is_cocycle(data, a, class)? {
        return Err(Error::Precondition("the class is not a homomorphism on the syzygies".into()));
    }
    let field = b.field();
    let f0 = data.f0();
    let (r0, ra) = (f0.rank(), a.ambient().rank());
    let zero0 = ModuleElement::zero(field, r0);
    let zeroa = ModuleElement::zero(field, ra);
    let mut gens: Vec<_> = (0..r0).map(|i| ModuleElement::unit(field, r0, i).concat(&zeroa)).collect();
    gens.extend(a.generators().iter().map(|g| zero0.concat(g)));
    let mut rels: Vec<_> = data.syzygies.iter().zip(class).map(|(z, c)| z.concat(&c.neg())).collect();
    rels.extend(a.relations().iter().map(|r| zero0.concat(r)));
    GradedModule::new(field, f0.direct_sum(a.ambient()), gens, rels, ModuleKind::Extension)
}

/// The monomial basis `(position, monomial)` of the degree-`d` part of a free module.
fn graded_basis(ambient: &FreeModule, d: i32) -> Vec<(usize, Monomial)> {
    let mut out = Vec::new();
    for (i, g) in ambient.degrees().into_iter().enumerate() {
        if d >= g {
            out.extend(Monomial::all_of_degree((d - g) as u16).into_iter().map(|m| (i, m)));
        }
    }
    out
}

fn coordinates<F: Field>(basis: &[(usize, Monomial)], v: &ModuleElement<F>) -> Vec<F::Elem> {
    basis.iter().map(|(i, m)| v.component(*i).coefficient(m)).collect()
}

/// A basis of the degree-zero homomorphisms `Z_1 -> A` for a free module `A`, each given by
/// its values on the syzygies.
pub fn cocycle_basis<F: Field>(data: &SyzygyData<F>, a: &FreeModule, field: &F) -> Result<Vec<Vec<ModuleElement<F>>>> {
    let degs = data.syzygy_degrees();
    // unknowns: coefficients of each class value in the monomial basis of A_{deg z_j}
    let blocks: Vec<Vec<(usize, Monomial)>> = degs.iter().map(|&d| graded_basis(a, d)).collect();
    let nvars: usize = blocks.iter().map(|b| b.len()).sum();
    if nvars == 0 {
        return Ok(Vec::new());
    }
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for s in &data.second {
        let Some(deg) = s.degree_in(&FreeModule::from_degrees(degs.iter().copied())) else { continue };
        let target = graded_basis(a, deg);
        // each unknown's contribution to the image, coordinate by coordinate
        let mut cols: Vec<Vec<F::Elem>> = Vec::with_capacity(nvars);
        for (j, block) in blocks.iter().enumerate() {
            let coef = s.component(j);
            for (pos, m) in block {
                let mut v = ModuleElement::zero(field, a.rank());
                if !coef.is_zero() {
                    let mut comps = v.into_components();
                    comps[*pos] = coef.mul_term(&field.one(), m);
                    v = ModuleElement::from_components(comps);
                }
                cols.push(coordinates(&target, &v));
            }
        }
        for r in 0..target.len() {
            rows.push(cols.iter().map(|c| c[r].clone()).collect());
        }
    }
    let null = if rows.is_empty() {
        (0..nvars).map(|i| (0..nvars).map(|j| if i == j { field.one() } else { field.zero() }).collect()).collect()
    } else {
        Matrix::from_rows(field, &rows).nullspace()
    };
    Ok(null
        .into_iter()
        .map(|vec| {
            let mut out = Vec::with_capacity(blocks.len());
            let mut k = 0;
            for block in &blocks {
                let mut comps = alloc::vec![Polynomial::zero(field); a.rank()];
                for (pos, m) in block {
                    if !field.is_zero(&vec[k]) {
                        comps[*pos] = &comps[*pos] + &Polynomial::term(field, vec[k].clone(), *m);
                    }
                    k += 1;
                }
                out.push(ModuleElement::from_components(comps));
            }
            out
        })
        .collect())
}

/// Dimension of the degree-zero coboundaries: restrictions to `Z_1` of maps `F_0 -> A`.
pub fn coboundary_rank<F: Field>(data: &SyzygyData<F>, a: &FreeModule, field: &F) -> usize {
    let degs = data.syzygy_degrees();
    let f0 = data.f0();
    let targets: Vec<Vec<(usize, Monomial)>> = degs.iter().map(|&d| graded_basis(a, d)).collect();
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for (k, g) in f0.degrees().into_iter().enumerate() {
        for (pos, m) in graded_basis(a, g) {
            // phi(e_k) = m e_pos, restricted to the syzygies
            let mut row = Vec::new();
            for (z, block) in data.syzygies.iter().zip(&targets) {
                let mut comps = alloc::vec![Polynomial::zero(field); a.rank()];
                comps[pos] = z.component(k).mul_term(&field.one(), &m);
                row.extend(coordinates(block, &ModuleElement::from_components(comps)));
            }
            rows.push(row);
        }
    }
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    Matrix::from_rows(field, &rows).rank()
}
