//! Projected Chern characters against a fixed ample polarization, their
//! twists, the discriminant, and the distinguished twist parameter at which
//! the middle pairing vanishes.
//!
//! A projected character is the quadruple `(H^3.ch0, H^2.ch1, H.ch2, ch3)`.
//! The rank entry is always rational; the other entries may live in one real
//! quadratic extension so that twists by the irrational distinguished
//! parameter stay exact.

use num_traits::Zero;

use crate::geometry::{CohVector, DivisorClass, ThreefoldModel};
use crate::scalar::{quad_sqrt, rat, QuadraticNumber, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectedChern {
    pub e0: Rational,
    pub e1: QuadraticNumber,
    pub e2: QuadraticNumber,
    pub e3: QuadraticNumber,
}

impl ProjectedChern {
    pub fn new(
        e0: Rational,
        e1: QuadraticNumber,
        e2: QuadraticNumber,
        e3: QuadraticNumber,
    ) -> Result<Self> {
        let entries = [&e1, &e2, &e3];
        let mut field = 0u64;
        for e in entries {
            match (field, e.radicand()) {
                (_, 0) => {}
                (0, d) => field = d,
                (d1, d2) if d1 == d2 => {}
                (d1, d2) => return Err(Error::MixedRadicals(d1, d2)),
            }
        }
        Ok(ProjectedChern { e0, e1, e2, e3 })
    }

    pub fn from_rationals(e0: Rational, e1: Rational, e2: Rational, e3: Rational) -> Self {
        ProjectedChern {
            e0,
            e1: e1.into(),
            e2: e2.into(),
            e3: e3.into(),
        }
    }

    pub fn zero() -> Self {
        Self::from_rationals(Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.e0.is_zero() && self.e1.is_zero() && self.e2.is_zero() && self.e3.is_zero()
    }

    /// All entries rational?
    pub fn is_rational(&self) -> bool {
        self.e1.is_rational() && self.e2.is_rational() && self.e3.is_rational()
    }

    pub fn as_rationals(&self) -> Option<(Rational, Rational, Rational, Rational)> {
        Some((
            self.e0.clone(),
            self.e1.as_rational()?.clone(),
            self.e2.as_rational()?.clone(),
            self.e3.as_rational()?.clone(),
        ))
    }

    pub fn neg(&self) -> Self {
        ProjectedChern { e0: -&self.e0, e1: self.e1.neg(), e2: self.e2.neg(), e3: self.e3.neg() }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Self::new(
            &self.e0 - &other.e0,
            self.e1.try_sub(&other.e1)?,
            self.e2.try_sub(&other.e2)?,
            self.e3.try_sub(&other.e3)?,
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ProjectedChern {
            e0: &self.e0 * c,
            e1: self.e1.scale(c),
            e2: self.e2.scale(c),
            e3: self.e3.scale(c),
        }
    }
}

/// Projection `(H^3.ch0, H^2.ch1, H.ch2, ch3)` of full Chern data against an
/// ample polarization.
pub fn project(model: &ThreefoldModel, h: &DivisorClass, v: &CohVector) -> Result<ProjectedChern> {
    if !model.is_ample(h)? {
        return Err(Error::NotAmple);
    }
    let h3 = model.intersect3(h, h, h)?;
    let e0 = &h3 * &v.ch0;
    let e1 = model.intersect3(h, h, &v.ch1)?;
    let e2: Rational = h.coeffs.iter().zip(&v.ch2).map(|(c, p)| c * p).sum();
    Ok(ProjectedChern::from_rationals(e0, e1, e2, v.ch3.clone()))
}

/// Twist by `beta`: the projection of `exp(-beta H) . ch`.
pub fn twist(p: &ProjectedChern, beta: &QuadraticNumber) -> Result<ProjectedChern> {
    let e0q: QuadraticNumber = (&p.e0).into();
    let beta2 = beta.try_mul(beta)?;
    let beta3 = beta2.try_mul(beta)?;
    let e1 = p.e1.try_sub(&beta.try_mul(&e0q)?)?;
    let e2 = p
        .e2
        .try_sub(&beta.try_mul(&p.e1)?)?
        .try_add(&beta2.try_mul(&e0q)?.scale(&rat(1, 2)))?;
    let e3 = p
        .e3
        .try_sub(&beta.try_mul(&p.e2)?)?
        .try_add(&beta2.try_mul(&p.e1)?.scale(&rat(1, 2)))?
        .try_sub(&beta3.try_mul(&e0q)?.scale(&rat(1, 6)))?;
    ProjectedChern::new(p.e0.clone(), e1, e2, e3)
}

/// Discriminant `e1^2 - 2 e0 e2`; twist-invariant.
pub fn delta_bar(p: &ProjectedChern) -> QuadraticNumber {
    let e0q: QuadraticNumber = (&p.e0).into();
    let sq = p.e1.try_mul(&p.e1).expect("same field");
    let cross = e0q.try_mul(&p.e2).expect("rational times entry");
    sq.try_sub(&cross.scale(&rat(2, 1))).expect("same field")
}

/// The distinguished twist parameter: the smaller root `(e1 - sqrt(D))/e0`
/// of the middle-pairing quadratic when the rank is nonzero, and `e2/e1`
/// when it vanishes. Undefined when both `e0` and `e1` vanish.
pub fn beta_bar(p: &ProjectedChern) -> Result<QuadraticNumber> {
    if p.e0.is_zero() {
        if p.e1.is_zero() {
            return Err(Error::BetaBarUndefined);
        }
        return p.e2.try_div(&p.e1);
    }
    let disc = delta_bar(p);
    if disc.is_negative() {
        return Err(Error::NegativeDiscriminant);
    }
    let disc = disc.as_rational().ok_or(Error::IrrationalRadicand)?;
    let root = quad_sqrt(disc)?;
    Ok(p.e1.try_sub(&root)?.scale(&p.e0.recip()))
}
