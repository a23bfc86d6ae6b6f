//! Sparse integer polynomials in `z`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::ser::{Serialize, SerializeMap, Serializer};

/// A polynomial `Σ c_k z^k` with integer coefficients. Zero coefficients are
/// never stored, so structural equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct GenusPolynomial {
    terms: BTreeMap<u32, i64>,
}

impl GenusPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exponent: u32, coefficient: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, coefficient);
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (u32, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// `counts[k]` is the coefficient of `z^k`.
    pub fn from_counts(counts: &[i64]) -> Self {
        Self::from_terms(counts.iter().enumerate().map(|(e, &c)| (e as u32, c)))
    }

    pub fn add_term(&mut self, exponent: u32, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert(0);
        *entry += coefficient;
        if *entry == 0 {
            self.terms.remove(&exponent);
        }
    }

    pub fn coefficient(&self, exponent: u32) -> i64 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exponent(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    /// Value at `z = 1`.
    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    /// True when the nonzero coefficients occupy a run of consecutive exponents.
    pub fn is_interpolating(&self) -> bool {
        match (self.min_exponent(), self.degree()) {
            (Some(lo), Some(hi)) => (hi - lo + 1) as usize == self.terms.len(),
            _ => true,
        }
    }

    pub fn scale(&self, factor: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e, c * factor)))
    }
}

impl Add for &GenusPolynomial {
    type Output = GenusPolynomial;

    fn add(self, rhs: &GenusPolynomial) -> GenusPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for GenusPolynomial {
    type Output = GenusPolynomial;

    fn add(mut self, rhs: GenusPolynomial) -> GenusPolynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&GenusPolynomial> for GenusPolynomial {
    fn add_assign(&mut self, rhs: &GenusPolynomial) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl Neg for &GenusPolynomial {
    type Output = GenusPolynomial;

    fn neg(self) -> GenusPolynomial {
        self.scale(-1)
    }
}

impl Neg for GenusPolynomial {
    type Output = GenusPolynomial;

    fn neg(self) -> GenusPolynomial {
        -&self
    }
}

impl Sub for &GenusPolynomial {
    type Output = GenusPolynomial;

    fn sub(self, rhs: &GenusPolynomial) -> GenusPolynomial {
        self + &(-rhs)
    }
}

impl Sub for GenusPolynomial {
    type Output = GenusPolynomial;

    fn sub(self, rhs: GenusPolynomial) -> GenusPolynomial {
        &self - &rhs
    }
}

impl Mul for &GenusPolynomial {
    type Output = GenusPolynomial;

    fn mul(self, rhs: &GenusPolynomial) -> GenusPolynomial {
        let mut out = GenusPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for GenusPolynomial {
    type Output = GenusPolynomial;

    fn mul(self, rhs: GenusPolynomial) -> GenusPolynomial {
        &self * &rhs
    }
}

/// Descending exponents, e.g. `1412z^7 + 1692z^6 + z^2` or `z - 1`.
impl fmt::Display for GenusPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let magnitude = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e == 0 || magnitude != 1 {
                write!(f, "{magnitude}")?;
            }
            match e {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GenusPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GenusPolynomial({self})")
    }
}

/// Serialized as a map from exponent (as a string key) to coefficient, in
/// ascending exponent order.
impl Serialize for GenusPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in self.terms() {
            map.serialize_entry(&e.to_string(), &c)?;
        }
        map.end()
    }
}
