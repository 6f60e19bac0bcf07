//! Sparse univariate polynomials with exact rational coefficients.
//!
//! Used for Euler characteristics as polynomials in the pullback degree and
//! for symbolic identities in the tilt parameter. Zero coefficients are never
//! stored, so structural equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::scalar::{format_rational, Rational};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: BTreeMap<u32, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(degree: u32, coeff: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(degree, coeff);
        }
        Polynomial { coeffs }
    }

    /// The indeterminate itself.
    pub fn variable() -> Self {
        Self::monomial(1, Rational::from_integer(1.into()))
    }

    pub fn from_coeffs(pairs: impl IntoIterator<Item = (u32, Rational)>) -> Self {
        let mut p = Self::zero();
        for (deg, c) in pairs {
            p.add_term(deg, c);
        }
        p
    }

    fn add_term(&mut self, degree: u32, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(degree).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, degree: u32) -> Rational {
        self.coeffs.get(&degree).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.values().next_back()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in &other.coeffs {
            out.add_term(*d, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Rational::from_integer((-1).into())))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (d1, c1) in &self.coeffs {
            for (d2, c2) in &other.coeffs {
                out.add_term(d1 + d2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { coeffs: self.coeffs.iter().map(|(d, v)| (*d, v * c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::constant(Rational::from_integer(1.into()));
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        // Horner over the sparse support
        let mut prev_deg = None;
        for (d, c) in self.coeffs.iter().rev() {
            if let Some(p) = prev_deg {
                let gap: u32 = p - d;
                for _ in 0..gap {
                    acc *= x;
                }
            }
            acc += c;
            prev_deg = Some(*d);
        }
        if let Some(p) = prev_deg {
            for _ in 0..p {
                acc *= x;
            }
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{}", format_rational(c))?,
                1 => write!(f, "({})*m", format_rational(c))?,
                _ => write!(f, "({})*m^{}", format_rational(c), d)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    #[test]
    fn cube_of_binomial() {
        // (2 - m)^3 = 8 - 12m + 6m^2 - m^3
        let p = Polynomial::from_coeffs([(0, rat_int(2)), (1, rat_int(-1))]);
        let cube = p.pow(3);
        assert_eq!(cube.coeff(0), rat_int(8));
        assert_eq!(cube.coeff(1), rat_int(-12));
        assert_eq!(cube.coeff(2), rat_int(6));
        assert_eq!(cube.coeff(3), rat_int(-1));
        assert_eq!(cube.degree(), Some(3));
    }

    #[test]
    fn eval_sparse() {
        let p = Polynomial::from_coeffs([(6, rat(1, 2)), (4, rat(3, 2)), (2, rat_int(1))]);
        assert_eq!(p.eval(&rat_int(1)), rat_int(3));
        assert_eq!(p.eval(&rat_int(2)), rat_int(32 + 24 + 4));
        assert_eq!(p.eval(&rat_int(0)), rat_int(0));
    }

    #[test]
    fn zero_terms_dropped() {
        let p = Polynomial::from_coeffs([(3, rat_int(5)), (3, rat_int(-5)), (1, rat_int(2))]);
        assert_eq!(p.degree(), Some(1));
        let q = p.sub(&Polynomial::monomial(1, rat_int(2)));
        assert!(q.is_zero());
    }
}
