//! Slope functions on twisted characters, the central charge, the
//! third-Chern-character inequality and its reduced form.
//!
//! Everything is a pure function of a projected character and an exact tilt
//! point `(alpha, beta)` with `alpha > 0`. Membership of an object in a
//! tilted heart is a categorical statement that a character cannot decide;
//! these functions therefore only expose values and sign flags, never heart
//! membership, and the semistability quantifier of the inequality is not
//! modeled.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::chern::{beta_bar, twist, ProjectedChern};
use crate::poly::Polynomial;
use crate::scalar::{quad_sqrt, rat, QuadraticNumber, Rational};
use crate::{Error, Result};

/// A point of the upper half plane of stability parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiltPoint {
    alpha: QuadraticNumber,
    beta: QuadraticNumber,
}

impl TiltPoint {
    pub fn new(alpha: QuadraticNumber, beta: QuadraticNumber) -> Result<Self> {
        if !alpha.is_positive() {
            return Err(Error::InvalidParameter("alpha must be positive".into()));
        }
        Ok(TiltPoint { alpha, beta })
    }

    pub fn from_rationals(alpha: Rational, beta: Rational) -> Result<Self> {
        Self::new(alpha.into(), beta.into())
    }

    pub fn alpha(&self) -> &QuadraticNumber {
        &self.alpha
    }

    pub fn beta(&self) -> &QuadraticNumber {
        &self.beta
    }
}

/// A slope value in `(-inf, +inf]`: the torsion convention makes the
/// infinite value larger than every finite one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Slope {
    Finite(QuadraticNumber),
    Infinite,
}

impl Slope {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Slope::Infinite)
    }

    pub fn finite(&self) -> Option<&QuadraticNumber> {
        match self {
            Slope::Finite(v) => Some(v),
            Slope::Infinite => None,
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Slope::Infinite, Slope::Infinite) => Some(Ordering::Equal),
            (Slope::Infinite, Slope::Finite(_)) => Some(Ordering::Greater),
            (Slope::Finite(_), Slope::Infinite) => Some(Ordering::Less),
            (Slope::Finite(a), Slope::Finite(b)) => a.partial_cmp(b),
        }
    }
}

/// Classical slope `e1^beta / e0`, infinite on rank zero.
pub fn mu_slope(p: &ProjectedChern, beta: &QuadraticNumber) -> Result<Slope> {
    if p.e0.is_zero() {
        return Ok(Slope::Infinite);
    }
    let tw = twist(p, beta)?;
    Ok(Slope::Finite(tw.e1.scale(&p.e0.recip())))
}

/// Tilt slope `(e2^beta - alpha^2 e0 / 2) / e1^beta`, infinite when the
/// denominator vanishes.
pub fn nu_slope(p: &ProjectedChern, t: &TiltPoint) -> Result<Slope> {
    let tw = twist(p, t.beta())?;
    if tw.e1.is_zero() {
        return Ok(Slope::Infinite);
    }
    let num = nu_numerator(&tw, &p.e0, t.alpha())?;
    Ok(Slope::Finite(num.try_div(&tw.e1)?))
}

fn nu_numerator(
    twisted: &ProjectedChern,
    e0: &Rational,
    alpha: &QuadraticNumber,
) -> Result<QuadraticNumber> {
    let alpha2 = alpha.try_mul(alpha)?;
    let half_rank: QuadraticNumber = (e0 * rat(1, 2)).into();
    twisted.e2.try_sub(&alpha2.try_mul(&half_rank)?)
}

/// Exact value of the central charge `-integral of exp(-i omega) . ch^B`
/// with `omega = alpha*sqrt(3)*H` and `B = beta*H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralChargeValue {
    pub re: QuadraticNumber,
    pub im: QuadraticNumber,
}

pub fn central_charge(p: &ProjectedChern, t: &TiltPoint) -> Result<CentralChargeValue> {
    let tw = twist(p, t.beta())?;
    let alpha2 = t.alpha().try_mul(t.alpha())?;
    let re = tw.e3.neg().try_add(&alpha2.try_mul(&tw.e1)?.scale(&rat(3, 2)))?;
    // im = sqrt(3) * alpha * (nu numerator); its sign is the numerator's
    // sign since sqrt(3)*alpha > 0
    let num = nu_numerator(&tw, &p.e0, t.alpha())?;
    let sqrt3 = QuadraticNumber::new(Rational::from_integer(0.into()), Rational::from_integer(1.into()), 3);
    let im = sqrt3.try_mul(t.alpha())?.try_mul(&num)?;
    Ok(CentralChargeValue { re, im })
}

/// Surplus of the third-Chern-character inequality:
/// `alpha^2 e1^beta / 6 - e3^beta`. The inequality asserts this is
/// non-negative for semistable objects on the vanishing locus of the tilt
/// slope; as a pure function of a character it carries no such quantifier.
pub fn bmt_surplus(p: &ProjectedChern, t: &TiltPoint) -> Result<QuadraticNumber> {
    let tw = twist(p, t.beta())?;
    let alpha2 = t.alpha().try_mul(t.alpha())?;
    alpha2.try_mul(&tw.e1)?.scale(&rat(1, 6)).try_sub(&tw.e3)
}

fn constant(r: &Rational) -> Polynomial {
    Polynomial::constant(r.clone())
}

fn rational_entries(p: &ProjectedChern) -> Result<(Rational, Rational, Rational, Rational)> {
    p.as_rationals().ok_or(Error::IrrationalRadicand)
}

/// Twisted entries as polynomials in the indeterminate of `beta`, which is
/// itself a polynomial (for instance `c - alpha` on a vanishing locus).
fn twisted_polys(p: &ProjectedChern, beta: &Polynomial) -> Result<[Polynomial; 4]> {
    let (e0, e1, e2, e3) = rational_entries(p)?;
    let b2 = beta.mul(beta);
    let b3 = b2.mul(beta);
    let e0p = constant(&e0);
    let e1b = constant(&e1).sub(&beta.mul(&e0p));
    let e2b = constant(&e2).sub(&beta.mul(&constant(&e1))).add(&b2.mul(&e0p).scale(&rat(1, 2)));
    let e3b = constant(&e3)
        .sub(&beta.mul(&constant(&e2)))
        .add(&b2.mul(&constant(&e1)).scale(&rat(1, 2)))
        .sub(&b3.mul(&e0p).scale(&rat(1, 6)));
    Ok([e0p, e1b, e2b, e3b])
}

/// The surplus as an exact polynomial in `alpha`, with `beta` given as a
/// polynomial in `alpha`. Requires a character with rational entries.
pub fn bmt_surplus_poly(p: &ProjectedChern, beta: &Polynomial) -> Result<Polynomial> {
    let [_, e1b, _, e3b] = twisted_polys(p, beta)?;
    let alpha2 = Polynomial::monomial(2, rat(1, 6));
    Ok(alpha2.mul(&e1b).sub(&e3b))
}

/// Numerator of the tilt slope as an exact polynomial in `alpha`.
pub fn nu_numerator_poly(p: &ProjectedChern, beta: &Polynomial) -> Result<Polynomial> {
    let [e0p, _, e2b, _] = twisted_polys(p, beta)?;
    let half_alpha2 = Polynomial::monomial(2, rat(1, 2));
    Ok(e2b.sub(&half_alpha2.mul(&e0p)))
}

/// Result of the reduced inequality check at the distinguished twist.
///
/// The theorem's hypotheses (`ch0 >= 0`, distinguished twist in `[0,1)`) are
/// reported as flags, not enforced: the check itself is a pure evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedCheck {
    pub holds: bool,
    pub value: QuadraticNumber,
    pub beta_bar: QuadraticNumber,
    pub ch0_nonneg: bool,
    pub beta_bar_in_unit_interval: bool,
}

/// Evaluates `e3` at the distinguished twist, exactly in its quadratic
/// extension, and reports whether the value is non-positive.
pub fn reduced_check(p: &ProjectedChern) -> Result<ReducedCheck> {
    let bb = beta_bar(p)?;
    let tw = twist(p, &bb)?;
    let value = tw.e3;
    let holds = value.sign() <= 0;
    let zero = QuadraticNumber::zero();
    let one = QuadraticNumber::one();
    let in_unit = bb.partial_cmp(&zero) != Some(Ordering::Less)
        && bb.partial_cmp(&one) == Some(Ordering::Less);
    Ok(ReducedCheck {
        holds,
        value,
        beta_bar: bb,
        ch0_nonneg: !p.e0.is_negative(),
        beta_bar_in_unit_interval: in_unit,
    })
}

/// Solution set of `nu_{alpha,beta} = 0` in `alpha` at a fixed `beta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NuZeroLocus {
    /// A single non-negative solution `alpha = sqrt(2 e2^beta / e0)`.
    Alpha(QuadraticNumber),
    /// Rank and twisted middle pairing both vanish: every `alpha` works.
    Independent,
    /// No solution at this `beta`.
    Empty,
}

pub fn nu_zero_alpha(p: &ProjectedChern, beta: &QuadraticNumber) -> Result<NuZeroLocus> {
    let tw = twist(p, beta)?;
    if p.e0.is_zero() {
        return Ok(if tw.e2.is_zero() { NuZeroLocus::Independent } else { NuZeroLocus::Empty });
    }
    let radicand = tw.e2.scale(&(rat(2, 1) / &p.e0));
    let Some(radicand) = radicand.as_rational() else {
        return Err(Error::IrrationalRadicand);
    };
    if radicand.is_negative() {
        return Ok(NuZeroLocus::Empty);
    }
    Ok(NuZeroLocus::Alpha(quad_sqrt(radicand)?))
}
