//! Exact scalars: the rationals and quadratic extensions `Q(sqrt m)`.
//!
//! Both types are canonical, so structural equality is field equality.
//! [`FieldElement`] carries its radicand; an element whose irrational part
//! vanishes is stored as a plain rational and mixes with any radicand.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Coefficient field used by the polynomial types.
///
/// The arithmetic methods panic when two operands live in incompatible
/// extensions; callers that cannot rule this out use the `checked_*`
/// methods on [`FieldElement`].
pub trait Field: Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    /// The value as a rational number, if it is one.
    fn to_rational(&self) -> Option<Rational>;
    fn from_rational(q: Rational) -> Self;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }
}

/// Reduced fraction with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let d = denom.into();
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), d)))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn from_big(r: BigRational) -> Self {
        Rational(r)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn from_i64(n: i64) -> Self {
        Rational::integer(n)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }
    fn neg(&self) -> Self {
        Rational(-&self.0)
    }
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn from_rational(q: Rational) -> Self {
        q
    }
}

/// `a + b*sqrt(m)` with `m` squarefree and not 0 or 1.
///
/// Canonical form: when `b == 0` the radicand is stored as 0, so every
/// rational has exactly one representation regardless of context.
/// The derived ordering is structural and only used for sorting.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    a: Rational,
    b: Rational,
    m: i64,
}

fn is_squarefree(m: i64) -> bool {
    let mut n = m.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        if n.is_multiple_of(p) {
            n /= p;
        }
        p += 1;
    }
    true
}

impl FieldElement {
    pub fn rational(q: Rational) -> Self {
        FieldElement { a: q, b: Rational::zero(), m: 0 }
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(Rational::integer(n))
    }

    /// `a + b*sqrt(m)`.
    pub fn quadratic(a: Rational, b: Rational, m: i64) -> Result<Self> {
        if m == 0 || m == 1 || !is_squarefree(m) {
            return Err(Error::InvalidRadicand(m));
        }
        Ok(Self::canonical(a, b, m))
    }

    /// `sqrt(m)` itself.
    pub fn sqrt(m: i64) -> Result<Self> {
        Self::quadratic(Rational::zero(), Rational::one(), m)
    }

    fn canonical(a: Rational, b: Rational, m: i64) -> Self {
        if b.is_zero() {
            FieldElement { a, b, m: 0 }
        } else {
            FieldElement { a, b, m }
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn irrational_part(&self) -> &Rational {
        &self.b
    }

    /// Radicand of the extension this element needs, or `None` for rationals.
    pub fn radicand(&self) -> Option<i64> {
        (self.m != 0).then_some(self.m)
    }

    pub fn is_rational(&self) -> bool {
        self.m == 0
    }

    fn common_radicand(&self, rhs: &Self) -> Result<i64> {
        match (self.m, rhs.m) {
            (0, m) | (m, 0) => Ok(m),
            (m, n) if m == n => Ok(m),
            (m, n) => Err(Error::MixedRadicand(m, n)),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        let m = self.common_radicand(rhs)?;
        Ok(Self::canonical(Field::add(&self.a, &rhs.a), Field::add(&self.b, &rhs.b), m))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        let m = self.common_radicand(rhs)?;
        Ok(Self::canonical(Field::sub(&self.a, &rhs.a), Field::sub(&self.b, &rhs.b), m))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        let m = self.common_radicand(rhs)?;
        if m == 0 {
            return Ok(Self::rational(Field::mul(&self.a, &rhs.a)));
        }
        // (a + b r)(c + d r) = (ac + m bd) + (ad + bc) r
        let mq = Rational::integer(m);
        let re = Field::add(&Field::mul(&self.a, &rhs.a), &Field::mul(&mq, &Field::mul(&self.b, &rhs.b)));
        let im = Field::add(&Field::mul(&self.a, &rhs.b), &Field::mul(&self.b, &rhs.a));
        Ok(Self::canonical(re, im, m))
    }

    pub fn checked_inv(&self) -> Result<Self> {
        if self.m == 0 {
            return self.a.inv().map(Self::rational).ok_or(Error::DivisionByZero);
        }
        // 1/(a + b r) = (a - b r) / (a^2 - m b^2); the norm is nonzero since m is not a square.
        let norm = self.norm();
        let inv = norm.inv().ok_or(Error::DivisionByZero)?;
        Ok(Self::canonical(Field::mul(&self.a, &inv), Field::mul(&Field::neg(&self.b), &inv), self.m))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.common_radicand(rhs)?;
        self.checked_mul(&rhs.checked_inv()?)
    }

    /// Galois conjugate `a - b*sqrt(m)`.
    pub fn conjugate(&self) -> Self {
        Self::canonical(self.a.clone(), Field::neg(&self.b), self.m)
    }

    /// Field norm `a^2 - m b^2`.
    pub fn norm(&self) -> Rational {
        let mq = Rational::integer(self.m);
        Field::sub(&Field::mul(&self.a, &self.a), &Field::mul(&mq, &Field::mul(&self.b, &self.b)))
    }

    /// Multiplicative order if this is a root of unity.
    pub fn is_root_of_unity(&self) -> Option<u32> {
        self.as_root_of_unity().map(|(n, _)| n)
    }

    /// `(n, k)` with `self = exp(2*pi*i*k/n)` and `gcd(n, k) = 1`, using the
    /// embedding that sends `sqrt(m)` to `i*sqrt(|m|)` for negative `m`.
    pub fn as_root_of_unity(&self) -> Option<(u32, u32)> {
        let half = Rational::new(1, 2).expect("nonzero denominator");
        let neg_half = Field::neg(&half);
        if self.m == 0 {
            return if self.a.is_one() {
                Some((1, 0))
            } else if self.a == Rational::integer(-1) {
                Some((2, 1))
            } else {
                None
            };
        }
        match self.m {
            -1 if self.a.is_zero() => {
                if self.b.is_one() {
                    Some((4, 1))
                } else if self.b == Rational::integer(-1) {
                    Some((4, 3))
                } else {
                    None
                }
            }
            -3 => {
                let up = self.b == half;
                let down = self.b == neg_half;
                if self.a == half && up {
                    Some((6, 1))
                } else if self.a == neg_half && up {
                    Some((3, 1))
                } else if self.a == neg_half && down {
                    Some((3, 2))
                } else if self.a == half && down {
                    Some((6, 5))
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = FieldElement::integer(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = Field::mul(&acc, &base);
            }
            base = Field::mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

impl Default for FieldElement {
    fn default() -> Self {
        FieldElement::integer(0)
    }
}

impl From<Rational> for FieldElement {
    fn from(q: Rational) -> Self {
        FieldElement::rational(q)
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        FieldElement::integer(n)
    }
}

impl Field for FieldElement {
    fn zero() -> Self {
        FieldElement::integer(0)
    }
    fn one() -> Self {
        FieldElement::integer(1)
    }
    fn from_i64(n: i64) -> Self {
        FieldElement::integer(n)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        if rhs.m == 0 && self.m == 0 {
            return Self::rational(Field::add(&self.a, &rhs.a));
        }
        self.checked_add(rhs).expect("mixed quadratic extensions")
    }
    fn sub(&self, rhs: &Self) -> Self {
        if rhs.m == 0 && self.m == 0 {
            return Self::rational(Field::sub(&self.a, &rhs.a));
        }
        self.checked_sub(rhs).expect("mixed quadratic extensions")
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("mixed quadratic extensions")
    }
    fn neg(&self) -> Self {
        Self::canonical(Field::neg(&self.a), Field::neg(&self.b), self.m)
    }
    fn inv(&self) -> Option<Self> {
        self.checked_inv().ok()
    }
    fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }
    fn from_rational(q: Rational) -> Self {
        FieldElement::rational(q)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 0 {
            return write!(f, "{}", self.a);
        }
        let radical = if self.b.is_one() {
            format!("sqrt({})", self.m)
        } else if self.b == Rational::integer(-1) {
            format!("-sqrt({})", self.m)
        } else {
            format!("{}*sqrt({})", self.b, self.m)
        };
        if self.a.is_zero() {
            return write!(f, "{radical}");
        }
        if self.b.is_negative() {
            write!(f, "{} - {}", self.a, radical.trim_start_matches('-'))
        } else {
            write!(f, "{} + {}", self.a, radical)
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                Field::add(&self, &rhs)
            }
        }
        impl<'a> Add<&'a $t> for &'a $t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                Field::add(self, rhs)
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                Field::sub(&self, &rhs)
            }
        }
        impl<'a> Sub<&'a $t> for &'a $t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                Field::sub(self, rhs)
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                Field::mul(&self, &rhs)
            }
        }
        impl<'a> Mul<&'a $t> for &'a $t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                Field::mul(self, rhs)
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                Field::neg(&self)
            }
        }
    };
}

forward_ops!(Rational);
forward_ops!(FieldElement);
