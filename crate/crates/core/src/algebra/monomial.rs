//! Monomials in `x0..x3` and the monomial orders used throughout.

use core::cmp::Ordering;
use core::fmt;

/// Number of variables of the coordinate ring `k[x0, x1, x2, x3]`.
pub const NVARS: usize = 4;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u16; NVARS],
    deg: u16,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; NVARS], deg: 0 };

    pub fn new(exps: [u16; NVARS]) -> Self {
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn var(i: usize) -> Self {
        let mut exps = [0; NVARS];
        exps[i] = 1;
        Monomial { exps, deg: 1 }
    }

    #[inline]
    pub fn exps(&self) -> [u16; NVARS] {
        self.exps
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    #[inline]
    pub fn degree(&self) -> u16 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps) {
            *e += o;
        }
        Monomial { exps, deg: self.deg + other.deg }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut exps = other.exps;
        for (e, s) in exps.iter_mut().zip(self.exps) {
            *e -= s;
        }
        Some(Monomial { exps, deg: other.deg - self.deg })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps) {
            *e = (*e).max(o);
        }
        Monomial::new(exps)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps) {
            *e = (*e).min(o);
        }
        Monomial::new(exps)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// All monomials of total degree `d`, in descending grevlex order.
    pub fn all_of_degree(d: u16) -> alloc::vec::Vec<Monomial> {
        let mut out = alloc::vec::Vec::new();
        for a in (0..=d).rev() {
            for b in (0..=d - a).rev() {
                for c in (0..=d - a - b).rev() {
                    out.push(Monomial::new([a, b, c, d - a - b - c]));
                }
            }
        }
        out.sort_by(|x, y| MonomialOrder::Grevlex.compare(y, x));
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Orders on monomials of the polynomial ring, all with `x0 > x1 > x2 > x3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    Grevlex,
    Lex,
    /// Block order: total degree in the first `k` variables decides first, then grevlex.
    Elimination(usize),
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex(a, b),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Elimination(k) => {
                let k = (*k).min(NVARS);
                let da: u16 = a.exps[..k].iter().sum();
                let db: u16 = b.exps[..k].iter().sum();
                da.cmp(&db).then_with(|| grevlex(a, b))
            }
        }
    }
}

#[inline]
fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.deg.cmp(&b.deg) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..NVARS).rev() {
        match a.exps[i].cmp(&b.exps[i]) {
            Ordering::Equal => continue,
            // a smaller trailing exponent makes the monomial larger
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}
