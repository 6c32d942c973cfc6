//! Dense univariate polynomials over a [`Field`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;

use crate::field::{Field, Rational};
use crate::modular;

/// Coefficients indexed by degree, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| F::from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^deg`.
    pub fn monomial(c: F, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![F::zero(); n + 1];
        coeffs[0] = F::from_i64(-1);
        coeffs[n] = F::add(&coeffs[n], &F::one());
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Multiplicity of the root 0.
    pub fn x_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides out `x^k`; the caller guarantees `k <= x_valuation()`.
    pub fn shift_down(&self, k: usize) -> Self {
        UniPoly { coeffs: self.coeffs[k.min(self.coeffs.len())..].to_vec() }
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    /// Monic associate; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(F::neg).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Quotient and remainder with `self = q * divisor + r`, `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dlen = divisor.coeffs.len();
        if dlen == 0 {
            return Err(Error::DivisionByZero);
        }
        if self.coeffs.len() < dlen {
            return Ok((Self::zero(), self.clone()));
        }
        let lc = divisor.coeffs[dlen - 1].clone();
        let lc_inv = if lc.is_one() { None } else { Some(lc.inv().expect("nonzero")) };
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let q = match &lc_inv {
                Some(inv) => top.mul(inv),
                None => top.clone(),
            };
            for (j, d) in divisor.coeffs.iter().enumerate().take(dlen - 1) {
                if !d.is_zero() {
                    rem[k + j] = rem[k + j].sub(&q.mul(d));
                }
            }
            rem[k + dlen - 1] = F::zero();
            quot[k] = q;
        }
        rem.truncate(dlen - 1);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Quotient of an exact division, `None` if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Self) -> Result<Option<Self>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.mul(&F::from_i64(i as i64))).collect();
        Self::from_coeffs(coeffs)
    }

    /// `f(x^i)` for `i >= 1`.
    pub fn power_substitute(&self, i: usize) -> Result<Self> {
        if i == 0 {
            return Err(Error::BadSubstitutionIndex(0));
        }
        if i == 1 || self.is_constant() {
            return Ok(self.clone());
        }
        let mut coeffs = vec![F::zero(); (self.coeffs.len() - 1) * i + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * i] = c.clone();
        }
        Ok(UniPoly { coeffs })
    }

    /// Monic gcd; `gcd(f, 0) = monic(f)` and `gcd(0, 0)` is an error.
    pub fn gcd(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() && rhs.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (mut a, mut b) = (self.monic(), rhs.monic());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Monic lcm; `lcm(f, 0) = 0`.
    pub fn lcm(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero());
        }
        let g = self.gcd(rhs)?;
        let (q, _) = self.div_rem(&g)?;
        Ok(q.mul(rhs).monic())
    }

    /// Whether `self` divides `g`.
    pub fn divides(&self, g: &Self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(g.rem(self)?.is_zero())
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| acc.mul(x).add(c))
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> UniPoly<G> {
        UniPoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl UniPoly<Rational> {
    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    /// Monic gcd computed from images modulo word-sized primes.
    ///
    /// Agrees with [`UniPoly::gcd`] but avoids the coefficient growth of the
    /// Euclidean remainder sequence over Q.
    pub fn gcd_modular(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() || rhs.is_zero() {
            return self.gcd(rhs);
        }
        let a = modular::primitive_integers(self);
        let b = modular::primitive_integers(rhs);
        let (lead_a, lead_b) = (a.last().expect("nonzero"), b.last().expect("nonzero"));
        let lifted = modular::lift(
            &lead_a.gcd(lead_b),
            |p| modular::divisible(lead_a, p) || modular::divisible(lead_b, p),
            |p| modular::gcd(modular::reduce(&a, p), modular::reduce(&b, p), p),
            |h| modular::divides(h, &a) && modular::divides(h, &b),
        );
        Ok(Self::from_integers(&lifted).monic())
    }

    pub(crate) fn from_integers(coeffs: &[BigInt]) -> Self {
        Self::from_coeffs(coeffs.iter().cloned().map(Rational::integer).collect())
    }
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let simple = !text.contains(' ');
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) if simple => (true, rest.to_string()),
                _ => (false, if simple { text } else { format!("({text})") }),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = body == "1";
            match (k, unit) {
                (0, _) => write!(f, "{body}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{body}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{body}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a, F: Field> Add<&'a UniPoly<F>> for &'a UniPoly<F> {
    type Output = UniPoly<F>;
    fn add(self, rhs: &UniPoly<F>) -> UniPoly<F> {
        UniPoly::add(self, rhs)
    }
}

impl<'a, F: Field> Sub<&'a UniPoly<F>> for &'a UniPoly<F> {
    type Output = UniPoly<F>;
    fn sub(self, rhs: &UniPoly<F>) -> UniPoly<F> {
        UniPoly::sub(self, rhs)
    }
}

impl<'a, F: Field> Mul<&'a UniPoly<F>> for &'a UniPoly<F> {
    type Output = UniPoly<F>;
    fn mul(self, rhs: &UniPoly<F>) -> UniPoly<F> {
        UniPoly::mul(self, rhs)
    }
}

impl<F: Field> Neg for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn neg(self) -> UniPoly<F> {
        UniPoly::neg(self)
    }
}
