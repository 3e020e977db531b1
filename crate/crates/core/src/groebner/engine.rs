//! The homogeneous Buchberger engine shared by every Gröbner computation.
//!
//! Elements are sparse vectors of `(coefficient, monomial, position)` terms kept in
//! decreasing module order. Work proceeds degree by degree: at each degree the
//! critical pairs are reduced first and the pending inputs afterwards, so an input
//! that survives reduction is never redundant among the inputs of lower degree.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::algebra::field::Field;
use crate::algebra::monomial::{Monomial, MonomialOrder};

/// Orders on the monomials `m e_i` of a free module, always refining grevlex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ModuleOrder {
    /// Position first (lower index is larger), then grevlex.
    PositionOverTerm,
    /// Total degree, then grevlex, then position.
    #[default]
    TermOverPosition,
    /// Positions below `split` dominate every position at or above it; term over
    /// position inside each block. Used for elimination of the first block.
    Block { split: usize },
}

pub(crate) type Term<E> = (E, Monomial, u32);
pub(crate) type SVec<F> = Vec<Term<<F as Field>::Elem>>;

#[derive(Clone, Debug)]
pub(crate) struct OrderCtx {
    pub order: ModuleOrder,
    pub degrees: Vec<i32>,
}

impl OrderCtx {
    #[inline]
    pub fn cmp(&self, a: (&Monomial, u32), b: (&Monomial, u32)) -> Ordering {
        match self.order {
            ModuleOrder::PositionOverTerm => {
                b.1.cmp(&a.1).then_with(|| MonomialOrder::Grevlex.compare(a.0, b.0))
            }
            ModuleOrder::TermOverPosition => self.top(a, b),
            ModuleOrder::Block { split } => {
                let ba = (a.1 as usize >= split) as u8;
                let bb = (b.1 as usize >= split) as u8;
                bb.cmp(&ba).then_with(|| self.top(a, b))
            }
        }
    }

    #[inline]
    fn top(&self, a: (&Monomial, u32), b: (&Monomial, u32)) -> Ordering {
        let da = a.0.degree() as i32 + self.degrees[a.1 as usize];
        let db = b.0.degree() as i32 + self.degrees[b.1 as usize];
        da.cmp(&db)
            .then_with(|| MonomialOrder::Grevlex.compare(a.0, b.0))
            .then_with(|| b.1.cmp(&a.1))
    }

    pub fn sort<E>(&self, v: &mut [Term<E>]) {
        v.sort_by(|x, y| self.cmp((&y.1, y.2), (&x.1, x.2)));
    }

    pub fn degree_of<E>(&self, t: &Term<E>) -> i32 {
        t.1.degree() as i32 + self.degrees[t.2 as usize]
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    pos: u32,
}

pub(crate) struct Engine<F: Field> {
    field: F,
    ctx: OrderCtx,
    basis: Vec<SVec<F>>,
    leads: Vec<(Monomial, u32)>,
    by_pos: Vec<Vec<usize>>,
    pairs: BTreeMap<i32, Vec<Pair>>,
    product_criterion: bool,
}

impl<F: Field> Engine<F> {
    pub fn new(field: &F, ctx: OrderCtx) -> Self {
        let rank = ctx.degrees.len();
        Engine {
            field: field.clone(),
            product_criterion: rank == 1,
            ctx,
            basis: Vec::new(),
            leads: Vec::new(),
            by_pos: alloc::vec![Vec::new(); rank],
            pairs: BTreeMap::new(),
        }
    }

    pub fn ctx(&self) -> &OrderCtx {
        &self.ctx
    }

    /// `p - c * t * g`, merged in order.
    fn sub_mul(&self, p: &SVec<F>, c: &F::Elem, t: &Monomial, g: &SVec<F>) -> SVec<F> {
        let f = &self.field;
        let mut out = Vec::with_capacity(p.len() + g.len());
        let mut gi = g.iter().map(|(gc, gm, gp)| (f.mul(gc, c), gm.mul(t), *gp)).peekable();
        let mut pi = p.iter().peekable();
        loop {
            match (pi.peek(), gi.peek()) {
                (Some(a), Some(b)) => match self.ctx.cmp((&a.1, a.2), (&b.1, b.2)) {
                    Ordering::Greater => out.push(pi.next().unwrap().clone()),
                    Ordering::Less => {
                        let (bc, bm, bp) = gi.next().unwrap();
                        out.push((f.neg(&bc), bm, bp));
                    }
                    Ordering::Equal => {
                        let a = pi.next().unwrap();
                        let (bc, _, _) = gi.next().unwrap();
                        let v = f.sub(&a.0, &bc);
                        if !f.is_zero(&v) {
                            out.push((v, a.1, a.2));
                        }
                    }
                },
                (Some(_), None) => out.push(pi.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (bc, bm, bp) = gi.next().unwrap();
                    out.push((f.neg(&bc), bm, bp));
                }
                (None, None) => break,
            }
        }
        out
    }

    fn find_reducer(&self, m: &Monomial, pos: u32) -> Option<usize> {
        self.by_pos[pos as usize].iter().copied().find(|&k| self.leads[k].0.divides(m))
    }

    /// Reduces the leading term until it is not divisible by any basis lead.
    pub fn top_reduce(&self, mut p: SVec<F>) -> SVec<F> {
        while let Some((c, m, pos)) = p.first() {
            let Some(k) = self.find_reducer(m, *pos) else { break };
            let t = self.leads[k].0.div(m).unwrap();
            let c = c.clone();
            p = self.sub_mul(&p, &c, &t, &self.basis[k]);
        }
        p
    }

    /// Top reduction that stops as soon as the leading position reaches `split`.
    pub fn reduce_above(&self, mut p: SVec<F>, split: usize) -> Option<SVec<F>> {
        while let Some((c, m, pos)) = p.first() {
            if *pos as usize >= split {
                break;
            }
            let k = self.find_reducer(m, *pos)?;
            let t = self.leads[k].0.div(m).unwrap();
            let c = c.clone();
            p = self.sub_mul(&p, &c, &t, &self.basis[k]);
        }
        Some(p)
    }

    /// Reduces every term.
    pub fn full_reduce(&self, mut p: SVec<F>, skip: Option<usize>) -> SVec<F> {
        let mut done: SVec<F> = Vec::new();
        while let Some((c, m, pos)) = p.first() {
            let reducer = self.by_pos[*pos as usize]
                .iter()
                .copied()
                .find(|&k| Some(k) != skip && self.leads[k].0.divides(m));
            match reducer {
                Some(k) => {
                    let t = self.leads[k].0.div(m).unwrap();
                    let c = c.clone();
                    p = self.sub_mul(&p, &c, &t, &self.basis[k]);
                }
                None => {
                    done.push(p.remove(0));
                }
            }
        }
        done
    }

    fn make_monic(&self, p: &mut SVec<F>) {
        let f = &self.field;
        if let Some(lc) = p.first().map(|t| t.0.clone()) {
            if !f.is_one(&lc) {
                let inv = f.inv(&lc).expect("nonzero leading coefficient");
                for t in p.iter_mut() {
                    t.0 = f.mul(&t.0, &inv);
                }
            }
        }
    }

    fn add_element(&mut self, mut p: SVec<F>) {
        self.make_monic(&mut p);
        let h = self.basis.len();
        let (lm, pos) = (p[0].1, p[0].2);
        let coprime = |a: &Monomial| self.product_criterion && a.is_coprime(&lm);

        // Gebauer-Möller update
        let mut cands: Vec<(usize, Monomial, bool)> = self.by_pos[pos as usize]
            .iter()
            .map(|&g| (g, self.leads[g].0.lcm(&lm), coprime(&self.leads[g].0)))
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some(c) = cands.pop() {
            let dominated = !c.2
                && cands.iter().chain(kept.iter()).any(|o| o.1.divides(&c.1));
            if !dominated {
                kept.push(c);
            }
        }
        let leads = &self.leads;
        for list in self.pairs.values_mut() {
            list.retain(|pr| {
                !(pr.pos == pos
                    && lm.divides(&pr.lcm)
                    && leads[pr.i].0.lcm(&lm) != pr.lcm
                    && leads[pr.j].0.lcm(&lm) != pr.lcm)
            });
        }
        self.pairs.retain(|_, v| !v.is_empty());
        let gdeg = self.ctx.degrees[pos as usize];
        for (g, lcm, cop) in kept.into_iter().rev() {
            if cop {
                continue;
            }
            let d = lcm.degree() as i32 + gdeg;
            self.pairs.entry(d).or_default().push(Pair { i: g, j: h, lcm, pos });
        }

        self.leads.push((lm, pos));
        self.by_pos[pos as usize].push(h);
        self.basis.push(p);
    }

    fn spoly(&self, pr: &Pair) -> SVec<F> {
        let ti = self.leads[pr.i].0.div(&pr.lcm).unwrap();
        let tj = self.leads[pr.j].0.div(&pr.lcm).unwrap();
        let gi: SVec<F> = self.basis[pr.i].iter().map(|(c, m, p)| (c.clone(), m.mul(&ti), *p)).collect();
        self.sub_mul(&gi, &self.field.one(), &tj, &self.basis[pr.j])
    }

    /// Runs the computation; returns, per input, whether it was needed (did not reduce
    /// to zero when its turn came). `inputs` must be homogeneous and sorted.
    pub fn run(&mut self, inputs: Vec<SVec<F>>, max_degree: Option<i32>) -> Vec<bool> {
        let mut kept = alloc::vec![false; inputs.len()];
        let mut pending: BTreeMap<i32, Vec<(usize, SVec<F>)>> = BTreeMap::new();
        for (k, v) in inputs.into_iter().enumerate() {
            if let Some(t) = v.first() {
                let d = self.ctx.degree_of(t);
                pending.entry(d).or_default().push((k, v));
            }
        }
        loop {
            let next_pair = self.pairs.keys().next().copied();
            let next_input = pending.keys().next().copied();
            let d = match (next_pair, next_input) {
                (None, None) => break,
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (Some(a), Some(b)) => a.min(b),
            };
            if max_degree.is_some_and(|m| d > m) {
                break;
            }
            if let Some(mut batch) = self.pairs.remove(&d) {
                batch.sort_by(|a, b| {
                    self.ctx.cmp((&a.lcm, a.pos), (&b.lcm, b.pos)).then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
                });
                for pr in batch {
                    let s = self.top_reduce(self.spoly(&pr));
                    if !s.is_empty() {
                        self.add_element(s);
                    }
                }
            }
            if let Some(batch) = pending.remove(&d) {
                for (k, v) in batch {
                    let r = self.top_reduce(v);
                    if !r.is_empty() {
                        kept[k] = true;
                        self.add_element(r);
                    }
                }
            }
        }
        kept
    }

    /// Tail-reduces the basis; together with minimal leads this gives the reduced basis.
    pub fn into_reduced(mut self) -> Vec<SVec<F>> {
        for k in 0..self.basis.len() {
            let p = core::mem::take(&mut self.basis[k]);
            let head = p[0].clone();
            let tail = self.full_reduce(p[1..].to_vec(), Some(k));
            let mut q = Vec::with_capacity(tail.len() + 1);
            q.push(head);
            q.extend(tail);
            self.basis[k] = q;
        }
        let ctx = self.ctx.clone();
        let mut basis = self.basis;
        basis.sort_by(|a, b| ctx.cmp((&a[0].1, a[0].2), (&b[0].1, b[0].2)));
        basis
    }

    /// Installs an element of an already computed basis, without creating pairs.
    pub fn load(&mut self, mut p: SVec<F>) {
        self.make_monic(&mut p);
        let h = self.basis.len();
        self.leads.push((p[0].1, p[0].2));
        self.by_pos[p[0].2 as usize].push(h);
        self.basis.push(p);
    }
}
