//! Exact coefficient fields: prime fields GF(p) with odd `p < 2^32`, and the rationals.
//!
//! A [`Field`] value is a small context object; elements are plain values of
//! [`Field::Elem`] and every operation goes through the context, which keeps
//! the modulus out of the element representation.

use alloc::string::{String, ToString};
use core::fmt;
use core::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand_core::RngCore;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Runtime description of a coefficient field, as it appears in files and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Prime { p: u64 },
    Rationals { rationals: bool },
}

impl FieldSpec {
    pub const DEFAULT_PRIME: u64 = 32003;

    pub fn prime(p: u64) -> Result<Self> {
        PrimeField::new(p).map(|f| f.spec())
    }

    pub fn rationals() -> Self {
        FieldSpec::Rationals { rationals: true }
    }

    pub fn is_prime(&self) -> bool {
        matches!(self, FieldSpec::Prime { .. })
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Prime { p: Self::DEFAULT_PRIME }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime { p } => write!(f, "GF({p})"),
            FieldSpec::Rationals { .. } => write!(f, "QQ"),
        }
    }
}

/// A commutative field with exact arithmetic.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + fmt::Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn spec(&self) -> FieldSpec;
    /// 0 for the rationals.
    fn characteristic(&self) -> u64;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Image of `num / den`; fails when the denominator vanishes in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem>;
    /// A rational representative: the symmetric residue in `(-p/2, p/2]` for prime fields.
    fn to_ratio(&self, a: &Self::Elem) -> BigRational;

    /// Uniform over GF(p); integers in `[-100, 100]` over the rationals.
    fn sample(&self, rng: &mut dyn RngCore) -> Self::Elem;

    fn sample_nonzero(&self, rng: &mut dyn RngCore) -> Self::Elem {
        loop {
            let x = self.sample(rng);
            if !self.is_zero(&x) {
                return x;
            }
        }
    }

    /// A square root in the field, if one exists.
    fn sqrt(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn elem_to_string(&self, a: &Self::Elem) -> String {
        let r = self.to_ratio(a);
        if r.is_integer() {
            r.numer().to_string()
        } else {
            alloc::format!("{}/{}", r.numer(), r.denom())
        }
    }
}

/// The prime field GF(p), elements stored as canonical residues in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p <= 2 || p >= 1 << 32 || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    fn reduce_i128(&self, n: i128) -> u64 {
        n.rem_euclid(self.p as i128) as u64
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: FieldSpec::DEFAULT_PRIME }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime { p: self.p }
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    #[inline]
    fn zero(&self) -> u64 {
        0
    }

    #[inline]
    fn one(&self) -> u64 {
        1
    }

    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        // both operands are below 2^32
        (a * b) % self.p
    }

    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.reduce_i128(t0 as i128))
    }

    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i128(n as i128)
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<u64> {
        let p = BigInt::from(self.p);
        let n = num.mod_floor(&p).to_u64().unwrap_or(0);
        let d = den.mod_floor(&p).to_u64().unwrap_or(0);
        if d == 0 {
            return Err(Error::DenominatorVanishes(self.p));
        }
        Ok(self.mul(&n, &self.inv(&d)?))
    }

    fn to_ratio(&self, a: &u64) -> BigRational {
        let v = if *a > self.p / 2 {
            *a as i64 - self.p as i64
        } else {
            *a as i64
        };
        BigRational::from_integer(BigInt::from(v))
    }

    fn sample(&self, rng: &mut dyn RngCore) -> u64 {
        // rejection sampling keeps the distribution exactly uniform
        let zone = u64::MAX - (u64::MAX % self.p);
        loop {
            let x = rng.next_u64();
            if x < zone {
                return x % self.p;
            }
        }
    }

    fn sqrt(&self, a: &u64) -> Option<u64> {
        tonelli_shanks(*a, self)
    }

    fn elem_to_string(&self, a: &u64) -> String {
        self.to_ratio(a).numer().to_string()
    }
}

fn tonelli_shanks(a: u64, f: &PrimeField) -> Option<u64> {
    let p = f.p;
    if a == 0 {
        return Some(0);
    }
    if f.pow(&a, (p - 1) / 2) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(f.pow(&a, (p + 1) / 4));
    }
    let mut q = p - 1;
    let mut s = 0;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while f.pow(&z, (p - 1) / 2) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = f.pow(&z, q);
    let mut t = f.pow(&a, q);
    let mut r = f.pow(&a, q.div_ceil(2));
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = f.mul(&t2, &t2);
            i += 1;
        }
        let b = f.pow(&c, 1 << (m - i - 1));
        m = i;
        c = f.mul(&b, &b);
        t = f.mul(&t, &c);
        r = f.mul(&r, &b);
    }
    Some(r)
}

/// The field of rational numbers with arbitrary-precision numerators and denominators.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::rationals()
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }

    fn to_ratio(&self, a: &BigRational) -> BigRational {
        a.clone()
    }

    fn sample(&self, rng: &mut dyn RngCore) -> BigRational {
        let v = (rng.next_u32() % 201) as i64 - 100;
        self.from_i64(v)
    }

    fn sqrt(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_negative() {
            return None;
        }
        let n = a.numer().sqrt();
        let d = a.denom().sqrt();
        if &(&n * &n) == a.numer() && &(&d * &d) == a.denom() {
            Some(BigRational::new(n, d))
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prime_field_examples() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.inv(&3).unwrap(), 5);
        let f = PrimeField::new(32003).unwrap();
        assert_eq!(f.neg(&1), 32002);
        assert_eq!(f.inv(&0), Err(Error::DivisionByZero));
    }

    #[test]
    fn rational_examples() {
        let q = Rationals;
        let half = BigRational::new(1.into(), 2.into());
        let third = BigRational::new(1.into(), 3.into());
        assert_eq!(q.add(&half, &third), BigRational::new(5.into(), 6.into()));
    }

    #[test]
    fn rejects_bad_moduli() {
        for p in [0, 1, 2, 4, 9, 32001, 1 << 32] {
            assert!(PrimeField::new(p).is_err(), "{p}");
        }
        assert!(PrimeField::new(3).is_ok());
    }

    #[test]
    fn ratio_maps_consistently() {
        let f = PrimeField::new(32003).unwrap();
        let x = f.from_ratio(&BigInt::from(-3), &BigInt::from(4)).unwrap();
        assert_eq!(f.mul(&x, &4), f.from_i64(-3));
        assert!(f.from_ratio(&1.into(), &32003.into()).is_err());
        assert_eq!(f.to_ratio(&32001), BigRational::from_integer((-2).into()));
    }

    #[test]
    fn square_roots() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for p in [3u64, 5, 13, 17, 97, 32003, 65537] {
            let f = PrimeField::new(p).unwrap();
            for _ in 0..50 {
                let x = f.sample(&mut rng);
                let sq = f.mul(&x, &x);
                let r = f.sqrt(&sq).expect("square has a root");
                assert_eq!(f.mul(&r, &r), sq);
            }
        }
        let q = Rationals;
        let r = q.sqrt(&BigRational::new(9.into(), 4.into())).unwrap();
        assert_eq!(r, BigRational::new(3.into(), 2.into()));
        assert!(q.sqrt(&BigRational::from_integer(2.into())).is_none());
    }
}
