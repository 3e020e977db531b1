//! Chern classes on `P^3` and numerical invariants of curves.

use alloc::format;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::ext::graded_ext;
use super::graded::GradedModule;
use super::hilbert::{integer, HilbertData};
use super::ideal::Ideal;
use crate::algebra::field::Field;
use crate::error::{Error, Result};
use crate::groebner::FreeModule;

/// Rank and Chern classes, as integer multiples of `h`, `h^2`, `h^3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChernRecord {
    pub rank: i64,
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
}

impl ChernRecord {
    pub const fn new(rank: i64, c1: i64, c2: i64, c3: i64) -> Self {
        ChernRecord { rank, c1, c2, c3 }
    }

    /// `Omega(1)`.
    pub const fn omega_one() -> Self {
        ChernRecord::new(3, -1, 1, -1)
    }

    /// `O(d)`.
    pub const fn line_bundle(d: i64) -> Self {
        ChernRecord::new(1, d, 0, 0)
    }

    /// The twist by `O(d)`.
    pub fn twist(&self, d: i64) -> Self {
        let (r, c1, c2, c3) = (self.rank, self.c1, self.c2, self.c3);
        ChernRecord {
            rank: r,
            c1: c1 + r * d,
            c2: c2 + (r - 1) * c1 * d + r * (r - 1) / 2 * d * d,
            c3: c3 + (r - 2) * c2 * d + (r - 1) * (r - 2) / 2 * c1 * d * d + r * (r - 1) * (r - 2) / 6 * d * d * d,
        }
    }

    /// Whitney sum formula.
    pub fn whitney(&self, other: &Self) -> Self {
        ChernRecord {
            rank: self.rank + other.rank,
            c1: self.c1 + other.c1,
            c2: self.c2 + self.c1 * other.c1 + other.c2,
            c3: self.c3 + self.c2 * other.c1 + self.c1 * other.c2 + other.c3,
        }
    }
}

/// `I_Z(m)` for a curve `Z` of degree `deg` with `chi(O_Z) = chi`.
pub fn chern_of_ideal_sheaf(m: i64, deg: i64, chi: i64) -> ChernRecord {
    ChernRecord::new(1, m, deg, (4 - m) * deg - 2 * chi)
}

/// Chern classes of `Ker(E -> I_Z(m))` for an epimorphism onto the twisted ideal sheaf of
/// a curve. `chi_cm` is `chi(O_{Z_CM})`; the third class must come out as `length_t`.
pub fn chern_of_kernel(e: &ChernRecord, m: i64, deg_z: i64, chi_cm: i64, length_t: i64) -> Result<ChernRecord> {
    if deg_z < 0 || length_t < 0 {
        return Err(Error::Precondition("degree and length must be nonnegative".into()));
    }
    if e.rank < 1 {
        return Err(Error::Precondition("the source must have positive rank".into()));
    }
    let c1 = e.c1 - m;
    let c2 = e.c2 - m * c1 - deg_z;
    let c3 = -e.c3 + m * c2 + (c1 - m + 4) * deg_z - 2 * chi_cm;
    if c3 != length_t {
        return Err(Error::Inconsistent(format!("third Chern class {c3} differs from the length {length_t}")));
    }
    Ok(ChernRecord::new(e.rank - 1, c1, c2, c3))
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rank and Chern classes from the Hilbert polynomial `chi(F(t))`, by Riemann–Roch.
pub fn chern_from_hilbert(h: &HilbertData) -> Result<ChernRecord> {
    let p = |i| h.coefficient(i);
    let ch0 = p(3) * q(6);
    let ch1 = (p(2) - &ch0) * q(2);
    let ch2 = p(1) - &ch0 * BigRational::new(11.into(), 6.into()) - &ch1 * q(2);
    let ch3 = p(0) - &ch0 - &ch1 * BigRational::new(11.into(), 6.into()) - &ch2 * q(2);
    let c1 = ch1.clone();
    let c2 = (&c1 * &c1 - &ch2 * q(2)) / q(2);
    let c3 = (&ch3 * q(6) - &c1 * &c1 * &c1 + &c1 * &c2 * q(3)) / q(3);
    let int = |x: &BigRational, what: &str| {
        integer(x).ok_or_else(|| Error::Inconsistent(format!("{what} = {x} is not an integer")))
    };
    Ok(ChernRecord::new(int(&ch0, "rank")?, int(&c1, "c1")?, int(&c2, "c2")?, int(&c3, "c3")?))
}

/// Numerical data of a closed subscheme of dimension at most one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveInvariants {
    pub degree: i64,
    pub chi: i64,
    pub chi_cm: i64,
    pub length_t: i64,
}

/// The one-dimensional part without embedded points: the intersection of the primary
/// components of codimension two, which is the annihilator of `Ext^2(S/I, S)`.
pub fn cm_part<F: Field>(ideal: &Ideal<F>) -> Result<Ideal<F>> {
    let field = ideal.field();
    let quotient = GradedModule::quotient_ring(ideal, 0);
    let s = GradedModule::free(field, FreeModule::free(1));
    let ext = graded_ext(&quotient, &s, 2)?;
    ext.annihilator()?.saturate_irrelevant()
}

/// `(deg Z, chi(O_Z), chi(O_{Z_CM}), chi(O_Z) - chi(O_{Z_CM}))` for a saturated ideal.
pub fn curve_invariants<F: Field>(ideal: &Ideal<F>) -> Result<CurveInvariants> {
    let h = ideal.quotient_hilbert();
    let int = |x: &BigRational| integer(x).ok_or_else(|| Error::Inconsistent(format!("non-integral coefficient {x}")));
    match h.dimension() {
        Some(d) if d >= 2 => Err(Error::Dimension(format!("the subscheme has dimension {d}"))),
        None => Ok(CurveInvariants { degree: 0, chi: 0, chi_cm: 0, length_t: 0 }),
        Some(0) => {
            let chi = int(&h.coefficient(0))?;
            Ok(CurveInvariants { degree: 0, chi, chi_cm: 0, length_t: chi })
        }
        Some(_) => {
            let degree = h.degree();
            let chi = int(&h.coefficient(0))?;
            let cm = cm_part(ideal)?;
            let chi_cm = int(&cm.quotient_hilbert().coefficient(0))?;
            Ok(CurveInvariants { degree, chi, chi_cm, length_t: chi - chi_cm })
        }
    }
}
