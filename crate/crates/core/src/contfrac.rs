//! Continued-fraction convergents of quadratic irrationals.
//!
//! Convergents `p_k/q_k` of an irrational `x` satisfy the Dirichlet bound
//! `|x - p_k/q_k| < 1/q_k^2`; for a rational input the exact fraction is
//! returned with a termination flag instead.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::scalar::{QuadraticNumber, Rational};
use crate::Error;

/// Convergents of a scalar, in order of computation.
///
/// `terminated` is set when the input was rational, in which case
/// `convergents` holds the single exact fraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirichletApproximation {
    pub convergents: Vec<Rational>,
    pub terminated: bool,
}

/// Computes the first `n` continued-fraction convergents of `x` by exact
/// floor-and-invert steps inside the quadratic extension of `x`.
///
/// The denominators are non-decreasing and strictly increasing from the
/// second convergent on, which is what the Dirichlet bound needs.
pub fn dirichlet_convergents(x: &QuadraticNumber, n: usize) -> Result<DirichletApproximation, Error> {
    if let Some(r) = x.as_rational() {
        return Ok(DirichletApproximation { convergents: vec![r.clone()], terminated: true });
    }
    let mut convergents = Vec::with_capacity(n);
    // standard recurrence p_k = a_k p_{k-1} + p_{k-2}, same for q
    let (mut p_prev, mut p_cur) = (BigInt::zero(), BigInt::one());
    let (mut q_prev, mut q_cur) = (BigInt::one(), BigInt::zero());
    let mut value = x.clone();
    for _ in 0..n {
        let digit = value.floor();
        let p_next = &digit * &p_cur + &p_prev;
        let q_next = &digit * &q_cur + &q_prev;
        p_prev = std::mem::replace(&mut p_cur, p_next);
        q_prev = std::mem::replace(&mut q_cur, q_next);
        convergents.push(Rational::new(p_cur.clone(), q_cur.clone()));
        let frac = value.try_sub(&QuadraticNumber::from_rational(Rational::from_integer(digit)))?;
        debug_assert!(!frac.is_zero(), "irrational input cannot terminate");
        value = frac.try_inv()?;
    }
    Ok(DirichletApproximation { convergents, terminated: false })
}

/// Exact check of `|x - p/q| < 1/q^2`, cross-multiplied inside the field of
/// `x`: equivalent to `-1 < q^2 x - p q < 1`.
pub fn dirichlet_bound_holds(x: &QuadraticNumber, approx: &Rational) -> Result<bool, Error> {
    let q = approx.denom();
    let p = approx.numer();
    let q2 = Rational::from_integer(q * q);
    let pq = Rational::from_integer(p * q);
    let spread = x.scale(&q2).try_sub(&QuadraticNumber::from_rational(pq))?;
    let one = QuadraticNumber::one();
    Ok(spread.try_add(&one)?.is_positive() && one.try_sub(&spread)?.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{quad_sqrt, rat, rat_int, QuadraticNumber};

    /// Independent oracle: convergents from a known digit sequence.
    fn convergents_from_digits(digits: &[i64]) -> Vec<Rational> {
        let (mut p_prev, mut p_cur) = (BigInt::zero(), BigInt::one());
        let (mut q_prev, mut q_cur) = (BigInt::one(), BigInt::zero());
        let mut out = Vec::new();
        for &a in digits {
            let p_next = BigInt::from(a) * &p_cur + &p_prev;
            let q_next = BigInt::from(a) * &q_cur + &q_prev;
            p_prev = std::mem::replace(&mut p_cur, p_next);
            q_prev = std::mem::replace(&mut q_cur, q_next);
            out.push(Rational::new(p_cur.clone(), q_cur.clone()));
        }
        out
    }

    #[test]
    fn sqrt2_first_convergents() {
        let s2 = quad_sqrt(&rat_int(2)).unwrap();
        let got = dirichlet_convergents(&s2, 4).unwrap();
        assert!(!got.terminated);
        assert_eq!(got.convergents, vec![rat(1, 1), rat(3, 2), rat(7, 5), rat(17, 12)]);
        // digit pattern of sqrt(2) is [1; 2, 2, 2, ...]
        let oracle = convergents_from_digits(&[1, 2, 2, 2, 2, 2, 2, 2, 2, 2]);
        let ten = dirichlet_convergents(&s2, 10).unwrap();
        assert_eq!(ten.convergents, oracle);
    }

    #[test]
    fn golden_ratio_fibonacci_convergents() {
        let golden = QuadraticNumber::new(rat(1, 2), rat(1, 2), 5);
        let got = dirichlet_convergents(&golden, 3).unwrap();
        assert_eq!(got.convergents, vec![rat(1, 1), rat(2, 1), rat(3, 2)]);
        let oracle = convergents_from_digits(&[1; 10]);
        assert_eq!(dirichlet_convergents(&golden, 10).unwrap().convergents, oracle);
    }

    #[test]
    fn rational_input_terminates() {
        let x = QuadraticNumber::from_rational(rat(3, 7));
        let got = dirichlet_convergents(&x, 5).unwrap();
        assert!(got.terminated);
        assert_eq!(got.convergents, vec![rat(3, 7)]);
    }

    #[test]
    fn negative_irrational() {
        let minus_s2 = quad_sqrt(&rat_int(2)).unwrap().neg();
        let got = dirichlet_convergents(&minus_s2, 8).unwrap();
        for c in &got.convergents {
            assert!(dirichlet_bound_holds(&minus_s2, c).unwrap(), "bound fails at {c}");
        }
    }

    #[test]
    fn denominators_grow() {
        let s7 = quad_sqrt(&rat_int(7)).unwrap();
        let got = dirichlet_convergents(&s7, 12).unwrap();
        let dens: Vec<_> = got.convergents.iter().map(|c| c.denom().clone()).collect();
        for w in dens.windows(2) {
            assert!(w[0] <= w[1]);
        }
        for w in dens[1..].windows(2) {
            assert!(w[0] < w[1], "strict growth expected after the first step");
        }
    }

    #[test]
    fn dirichlet_bound_exact() {
        for x in [
            quad_sqrt(&rat_int(2)).unwrap(),
            QuadraticNumber::new(rat(1, 2), rat(1, 2), 5),
            QuadraticNumber::new(rat(-3, 4), rat(2, 3), 7),
        ] {
            let got = dirichlet_convergents(&x, 10).unwrap();
            for c in &got.convergents {
                assert!(dirichlet_bound_holds(&x, c).unwrap(), "bound fails for {x} at {c}");
            }
        }
    }
}
