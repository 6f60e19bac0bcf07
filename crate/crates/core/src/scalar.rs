//! Exact scalars: arbitrary-precision rationals and real quadratic numbers
//! `a + b*sqrt(d)`.
//!
//! Every value is kept in a canonical form so that structural equality is
//! semantic equality: rationals are reduced with positive denominator
//! (enforced by `BigRational`), and a quadratic number stores a square-free
//! radicand `d` with `b == 0` forcing `d == 0`. Sign decisions are made by
//! integer arithmetic only; no floating point enters this module.
//!
//! Values in distinct quadratic extensions cannot be combined: operations
//! return [`Error::MixedRadicals`] instead of silently widening the field.
//! The one deliberate exception is multiplication of two pure radicals,
//! `b1*sqrt(d1) * b2*sqrt(d2) = b1*b2*sqrt(d1*d2)`, which stays inside a
//! single extension after square-free reduction.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Exact rational scalar. Always reduced, denominator positive.
pub type Rational = BigRational;

/// Shorthand for a small rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for a small integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses the `p/q` grammar (`"3"`, `"-9/4"`). Whitespace around the number
/// and the slash is tolerated.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let t = s.trim();
    let bad = || Error::ParseScalar(s.to_string());
    match t.split_once('/') {
        None => BigInt::from_str(t).map(Rational::from_integer).map_err(|_| bad()),
        Some((num, den)) => {
            let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Formats a rational as `p/q`, or plain `p` when the denominator is one.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Splits `n >= 0` as `k^2 * r` with `r` square-free; returns `(k, r)`.
fn extract_square(n: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(!n.is_negative());
    if n.is_zero() {
        return (BigInt::one(), BigInt::zero());
    }
    let mut rest = n.clone();
    let mut k = BigInt::one();
    let mut r = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            k *= p.pow(e / 2);
            if e % 2 == 1 {
                r *= &p;
            }
        }
        p += 1;
    }
    // whatever remains is prime (or one)
    r *= rest;
    (k, r)
}

/// An exact element `a + b*sqrt(d)` of a real quadratic extension of the
/// rationals. `d` is square-free and non-negative; `b == 0` implies `d == 0`,
/// so plain rationals embed canonically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    a: Rational,
    b: Rational,
    d: u64,
}

impl QuadraticNumber {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(a: Rational) -> Self {
        QuadraticNumber { a, b: Rational::zero(), d: 0 }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    /// Builds `a + b*sqrt(d)`, normalizing the radicand square-free and
    /// collapsing to the rational embedding when possible.
    pub fn new(a: Rational, b: Rational, d: u64) -> Self {
        if b.is_zero() || d == 0 {
            return Self::from_rational(a);
        }
        let (k, r) = extract_square(&BigInt::from(d));
        let b = b * Rational::from_integer(k);
        if r.is_one() {
            return Self::from_rational(a + b);
        }
        let d: u64 = u64::try_from(&r).expect("square-free part fits in u64");
        QuadraticNumber { a, b, d }
    }

    /// Exact square root of a non-negative rational. The result is rational
    /// exactly when the input is a square in the rationals.
    pub fn sqrt_of(x: &Rational) -> Result<Self, Error> {
        if x.is_negative() {
            return Err(Error::NegativeSqrt);
        }
        if x.is_zero() {
            return Ok(Self::zero());
        }
        // sqrt(p/q) = sqrt(p*q) / q
        let pq = x.numer() * x.denom();
        let (k, r) = extract_square(&pq);
        let coeff = Rational::new(k, x.denom().clone());
        if r.is_one() {
            Ok(Self::from_rational(coeff))
        } else {
            let d = u64::try_from(&r).map_err(|_| Error::ParseScalar(format!("radicand too large: {r}")))?;
            Ok(QuadraticNumber { a: Rational::zero(), b: coeff, d })
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn radical_coefficient(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.d == 0
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.a)
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign: -1, 0, or +1, decided by comparing `a^2` against `b^2 d`
    /// when the two terms disagree in sign.
    pub fn sign(&self) -> i32 {
        if self.b.is_zero() {
            return sign_of(&self.a);
        }
        if self.a.is_zero() {
            return sign_of(&self.b);
        }
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sa == sb {
            return sa;
        }
        // a and b*sqrt(d) compete: |a| vs |b|sqrt(d)  <=>  a^2 vs b^2 d
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * rat_int(self.d as i64);
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    pub fn neg(&self) -> Self {
        QuadraticNumber { a: -&self.a, b: -&self.b, d: self.d }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Scaling by a rational never leaves the extension.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QuadraticNumber { a: &self.a * c, b: &self.b * c, d: self.d }
    }

    fn same_field(&self, other: &Self) -> Result<u64, Error> {
        match (self.d, other.d) {
            (0, d) | (d, 0) => Ok(d),
            (d1, d2) if d1 == d2 => Ok(d1),
            (d1, d2) => Err(Error::MixedRadicals(d1, d2)),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, Error> {
        let d = self.same_field(other)?;
        Ok(Self::new(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, Error> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, Error> {
        // pure-radical * pure-radical lands in sqrt(d1*d2) after reduction
        if self.d != 0 && other.d != 0 && self.d != other.d {
            if self.a.is_zero() && other.a.is_zero() {
                let prod = (self.d as u128) * (other.d as u128);
                let prod = u64::try_from(prod)
                    .map_err(|_| Error::MixedRadicals(self.d, other.d))?;
                return Ok(Self::new(Rational::zero(), &self.b * &other.b, prod));
            }
            return Err(Error::MixedRadicals(self.d, other.d));
        }
        let d = self.same_field(other)?;
        let dd = rat_int(d as i64);
        let a = &self.a * &other.a + &self.b * &other.b * &dd;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::new(a, b, d))
    }

    /// Multiplicative inverse. `a^2 - b^2 d` is nonzero for every nonzero
    /// canonical value because `sqrt(d)` is irrational when `d > 1`.
    pub fn try_inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Self::from_rational(self.a.recip()));
        }
        let norm = &self.a * &self.a - &self.b * &self.b * rat_int(self.d as i64);
        debug_assert!(!norm.is_zero());
        Ok(QuadraticNumber { a: &self.a / &norm, b: -&self.b / &norm, d: self.d })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, Error> {
        self.try_mul(&other.try_inv()?)
    }

    /// Exact floor. Uses the integer square root of the cleared radicand.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return self.a.floor().to_integer();
        }
        // write self = (n1 + n2*sqrt(d)) / m with m > 0
        let m = self.a.denom().lcm(self.b.denom());
        let n1 = self.a.numer() * (&m / self.a.denom());
        let n2 = self.b.numer() * (&m / self.b.denom());
        let w = (&n2 * &n2 * BigInt::from(self.d)).sqrt();
        // sqrt(d) irrational, so n2*sqrt(d) lies strictly between consecutive
        // integers: (w, w+1) for n2 > 0, (-w-1, -w) for n2 < 0.
        let u = if n2.is_positive() { &n1 + w } else { &n1 - w - 1 };
        u.div_floor(&m)
    }
}

fn sign_of(x: &Rational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Exact sign of a quadratic number, as a free function.
pub fn quad_sign(x: &QuadraticNumber) -> i32 {
    x.sign()
}

/// Exact square root of a non-negative rational, as a free function.
pub fn quad_sqrt(x: &Rational) -> Result<QuadraticNumber, Error> {
    QuadraticNumber::sqrt_of(x)
}

impl From<Rational> for QuadraticNumber {
    fn from(a: Rational) -> Self {
        Self::from_rational(a)
    }
}

impl From<&Rational> for QuadraticNumber {
    fn from(a: &Rational) -> Self {
        Self::from_rational(a.clone())
    }
}

impl PartialOrd for QuadraticNumber {
    /// Ordering is decidable only inside a single extension; comparing values
    /// with distinct radicands yields `None`.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let diff = self.try_sub(other).ok()?;
        Some(match diff.sign() {
            0 => Ordering::Equal,
            s if s > 0 => Ordering::Greater,
            _ => Ordering::Less,
        })
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", format_rational(&self.a));
        }
        let radical = format!("{}*sqrt({})", format_rational(&self.b.abs()), self.d);
        if self.a.is_zero() {
            if self.b.is_negative() {
                write!(f, "-{radical}")
            } else {
                write!(f, "{radical}")
            }
        } else {
            let op = if self.b.is_negative() { '-' } else { '+' };
            write!(f, "{}{}{}", format_rational(&self.a), op, radical)
        }
    }
}

impl fmt::Debug for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadraticNumber({self})")
    }
}

impl FromStr for QuadraticNumber {
    type Err = Error;

    /// Parses the `a+b*sqrt(d)` grammar. Accepted forms include `"3/2"`,
    /// `"sqrt(2)"`, `"-sqrt(2)"`, `"3*sqrt(5)"`, `"1-1/2*sqrt(2)"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::ParseScalar(s.to_string());
        let Some(pos) = t.find("sqrt(") else {
            return parse_rational(&t).map(Self::from_rational);
        };
        if !t.ends_with(')') {
            return Err(bad());
        }
        let d: u64 = t[pos + 5..t.len() - 1].parse().map_err(|_| bad())?;
        // the part before "sqrt(" is "[a+|a-][b*]" with optional pieces
        let head = &t[..pos];
        let head = head.strip_suffix('*').unwrap_or(head);
        // split the trailing b-coefficient from an optional leading a-term
        let mut split = None;
        for (i, c) in head.char_indices().rev() {
            if (c == '+' || c == '-') && i > 0 && !head[..i].ends_with('/') && !head[..i].ends_with('e') {
                // a sign not at the start and not part of a fraction: term boundary
                split = Some(i);
                break;
            }
        }
        let (a_str, b_str) = match split {
            Some(i) => (&head[..i], &head[i..]),
            None => ("", head),
        };
        let a = if a_str.is_empty() { Rational::zero() } else { parse_rational(a_str)? };
        let b = match b_str {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            other => parse_rational(other)?,
        };
        Ok(Self::new(a, b, d))
    }
}
