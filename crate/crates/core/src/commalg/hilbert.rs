//! Hilbert series of graded modules from their lead-term modules.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::monomial::Monomial;
use crate::groebner::FreeModule;

/// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^4`, as `exponent -> coefficient`.
pub type KPolynomial = BTreeMap<i32, i64>;

/// Hilbert numerator of `S / (gens)` for a monomial ideal, as a dense coefficient list.
pub fn monomial_numerator(gens: &[Monomial]) -> Vec<i64> {
    let mut gens = minimalize(gens.to_vec());
    let mut out = numerator_rec(&mut gens);
    while out.len() > 1 && out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|o| o.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn poly_add(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
}

fn numerator_rec(gens: &mut [Monomial]) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![0];
    }
    // the variable occurring in the most generators
    let mut counts = [0usize; 4];
    for g in gens.iter() {
        for (v, c) in counts.iter_mut().enumerate() {
            if g.exp(v) > 0 {
                *c += 1;
            }
        }
    }
    let (v, &best) = counts.iter().enumerate().max_by_key(|(_, c)| **c).unwrap();
    if best <= 1 {
        // pairwise coprime: a regular sequence
        let mut out = vec![1i64];
        for g in gens.iter() {
            let d = g.degree() as usize;
            let mut next = vec![0; out.len() + d];
            poly_add(&mut next, &out, 0);
            for (i, c) in out.iter().enumerate() {
                next[i + d] -= c;
            }
            out = next;
        }
        return out;
    }
    let x = Monomial::var(v);
    // N(I) = N(I + (x)) + t N(I : x)
    let mut with_x: Vec<Monomial> = gens.iter().filter(|g| g.exp(v) == 0).copied().collect();
    with_x.push(x);
    let mut colon: Vec<Monomial> = gens.iter().map(|g| x.div(g).unwrap_or(*g)).collect();
    colon = minimalize(colon);
    let mut out = numerator_rec(&mut with_x);
    let rest = numerator_rec(&mut colon);
    poly_add(&mut out, &rest, 1);
    out
}

/// `N(t)` for `F / N` where `leads` are the lead terms (monomial, position) of a Gröbner
/// basis of `N` in a term order compatible with degree.
pub fn quotient_numerator(ambient: &FreeModule, leads: &[(Monomial, usize)]) -> KPolynomial {
    let mut out = KPolynomial::new();
    for i in 0..ambient.rank() {
        let mons: Vec<Monomial> = leads.iter().filter(|(_, p)| *p == i).map(|(m, _)| *m).collect();
        let shift = ambient.gen_degree(i);
        for (k, c) in monomial_numerator(&mons).into_iter().enumerate() {
            if c != 0 {
                *out.entry(k as i32 + shift).or_insert(0) += c;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn binom3(n: i64) -> i64 {
    // C(n + 3, 3) for n >= -3, zero below
    if n < 0 {
        0
    } else {
        (n + 1) * (n + 2) * (n + 3) / 6
    }
}

/// Hilbert function, Hilbert polynomial and the degree from which they agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    /// Coefficients of `N(t)` by exponent.
    pub numerator: KPolynomial,
    /// Coefficients of the Hilbert polynomial, constant term first.
    pub hilbert_polynomial: Vec<BigRational>,
    /// `HF(d) = HP(d)` for every `d >= regularity_bound`.
    pub regularity_bound: i32,
}

impl HilbertData {
    pub fn from_numerator(mut numerator: KPolynomial) -> Self {
        numerator.retain(|_, c| *c != 0);
        // (u + 1)(u + 2)(u + 3) / 6 with u = t - k
        let mut hp = vec![BigRational::zero(); 4];
        for (&k, &c) in &numerator {
            let mut p = vec![BigRational::one()];
            for a in 1..=3 {
                let shift = BigRational::from_integer(BigInt::from(a - k as i64));
                let mut next = vec![BigRational::zero(); p.len() + 1];
                for (i, q) in p.iter().enumerate() {
                    next[i + 1] += q;
                    next[i] += q * &shift;
                }
                p = next;
            }
            let scale = BigRational::new(BigInt::from(c), BigInt::from(6));
            for (i, q) in p.into_iter().enumerate() {
                hp[i] += q * &scale;
            }
        }
        while hp.last().is_some_and(|c| c.is_zero()) {
            hp.pop();
        }
        let regularity_bound = numerator.keys().next_back().map_or(i32::MIN / 2, |k| k - 3);
        HilbertData { numerator, hilbert_polynomial: hp, regularity_bound }
    }

    pub fn hilbert_function(&self, d: i32) -> i64 {
        self.numerator.iter().map(|(&k, &c)| c * binom3((d - k) as i64)).sum()
    }

    pub fn hilbert_polynomial_at(&self, t: i64) -> BigRational {
        let t = BigRational::from_integer(BigInt::from(t));
        self.hilbert_polynomial.iter().rev().fold(BigRational::zero(), |acc, c| acc * &t + c)
    }

    /// Degree of the Hilbert polynomial, `None` when it vanishes (finite length module).
    pub fn dimension(&self) -> Option<usize> {
        self.hilbert_polynomial.len().checked_sub(1)
    }

    /// Leading coefficient times `dim!`.
    pub fn degree(&self) -> i64 {
        let Some(n) = self.dimension() else { return 0 };
        let fact: i64 = (1..=n as i64).product();
        let lead = &self.hilbert_polynomial[n] * BigRational::from_integer(BigInt::from(fact));
        integer(&lead).expect("the degree is an integer")
    }

    /// The Hilbert polynomial's coefficient of `t^i`, as an integer when it is one.
    pub fn coefficient(&self, i: usize) -> BigRational {
        self.hilbert_polynomial.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `sum_d (HF(d) - HP(d))`; the length of the module when `HP = 0`.
    pub fn length(&self) -> i64 {
        let Some(&lo) = self.numerator.keys().next() else { return 0 };
        (lo..self.regularity_bound.max(lo))
            .map(|d| {
                let hp = integer(&self.hilbert_polynomial_at(d as i64)).expect("integer-valued");
                self.hilbert_function(d) - hp
            })
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }
}

pub(crate) fn integer(q: &BigRational) -> Option<i64> {
    use num_traits::ToPrimitive;
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}

/// `a - b` coefficientwise.
pub fn numerator_sub(a: &KPolynomial, b: &KPolynomial) -> KPolynomial {
    let mut out = a.clone();
    for (&k, &c) in b {
        *out.entry(k).or_insert(0) -= c;
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn numerator_add(a: &KPolynomial, b: &KPolynomial) -> KPolynomial {
    let mut out = a.clone();
    for (&k, &c) in b {
        *out.entry(k).or_insert(0) += c;
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `N(t) t^d`, the numerator of the twist `M(-d)`.
pub fn numerator_shift(a: &KPolynomial, d: i32) -> KPolynomial {
    a.iter().map(|(&k, &c)| (k + d, c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: [u16; 4]) -> Monomial {
        Monomial::new(e)
    }

    #[test]
    fn numerators() {
        assert_eq!(monomial_numerator(&[]), vec![1]);
        assert_eq!(monomial_numerator(&[m([0, 0, 1, 0]), m([0, 0, 0, 1])]), vec![1, -2, 1]);
        // two skew lines: 1 - 4t^2 + 4t^3 - t^4
        let two = [m([1, 0, 1, 0]), m([1, 0, 0, 1]), m([0, 1, 1, 0]), m([0, 1, 0, 1])];
        assert_eq!(monomial_numerator(&two), vec![1, 0, -4, 4, -1]);
    }

    #[test]
    fn line_polynomial() {
        let n = quotient_numerator(&FreeModule::free(1), &[(m([0, 0, 1, 0]), 0), (m([0, 0, 0, 1]), 0)]);
        let h = HilbertData::from_numerator(n);
        assert_eq!(h.hilbert_polynomial, vec![BigRational::one(), BigRational::one()]);
        assert_eq!(h.degree(), 1);
        for d in -3..10 {
            assert_eq!(h.hilbert_function(d), (d + 1).max(0) as i64);
        }
    }

    #[test]
    fn points_have_length() {
        // S / (x1, x2, x3^3): a triple point
        let n = quotient_numerator(&FreeModule::free(1), &[(m([0, 1, 0, 0]), 0), (m([0, 0, 1, 0]), 0), (m([0, 0, 0, 3]), 0)]);
        let h = HilbertData::from_numerator(n);
        assert_eq!(h.dimension(), Some(0));
        assert_eq!(h.coefficient(0), BigRational::from_integer(3.into()));
        // S / (x0, x1, x2, x3)^2 has length 5
        let mut gens = Vec::new();
        for mm in Monomial::all_of_degree(2) {
            gens.push((mm, 0));
        }
        let h = HilbertData::from_numerator(quotient_numerator(&FreeModule::free(1), &gens));
        assert!(h.hilbert_polynomial.is_empty());
        assert_eq!(h.length(), 5);
    }
}
