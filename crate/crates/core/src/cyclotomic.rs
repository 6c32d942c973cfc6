//! Cyclotomic polynomials and the split `f = unit * x^v * prod phi_n^k_n * r`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::arith::{divisors, euler_phi, mobius};
use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::unipoly::UniPoly;

pub type QPoly = UniPoly<Rational>;

fn cache() -> &'static RwLock<HashMap<u64, Arc<QPoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<QPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `phi_n` from the Möbius product `prod_{d | n} (x^d - 1)^mu(n/d)`.
pub fn cyclotomic_poly(n: u64) -> QPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache().read().expect("cache poisoned").get(&n) {
        return (**p).clone();
    }
    let mut num = QPoly::one();
    let mut den = QPoly::one();
    for d in divisors(n) {
        match mobius(n / d) {
            1 => num = num.mul(&QPoly::x_pow_minus_one(d as usize)),
            -1 => den = den.mul(&QPoly::x_pow_minus_one(d as usize)),
            _ => {}
        }
    }
    let phi = num.exact_div(&den).expect("nonzero denominator").expect("Möbius product divides exactly");
    cache().write().expect("cache poisoned").entry(n).or_insert_with(|| Arc::new(phi.clone()));
    phi
}

/// `prod phi_n^k` over an exponent map.
pub fn cyclotomic_product(exponents: &BTreeMap<u64, u32>) -> QPoly {
    exponents.iter().fold(QPoly::one(), |acc, (&n, &k)| acc.mul(&cyclotomic_poly(n).pow(k)))
}

/// `f = unit * x^v * prod phi_n^{k_n} * residual`, residual monic with no
/// cyclotomic factor and nonzero constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycFactorization {
    pub unit: Rational,
    pub x_valuation: usize,
    pub exponents: BTreeMap<u64, u32>,
    pub residual: QPoly,
}

impl CycFactorization {
    pub fn reconstruct(&self) -> QPoly {
        cyclotomic_product(&self.exponents).mul(&self.residual).shift_up(self.x_valuation).scale(&self.unit)
    }

    /// `x^v * prod phi_n^{k_n}`, the cyclotomic part without unit or residual.
    pub fn cyclotomic_part(&self) -> QPoly {
        cyclotomic_product(&self.exponents).shift_up(self.x_valuation)
    }

    pub fn has_constant_residual(&self) -> bool {
        self.residual.is_constant()
    }

    pub fn exponent(&self, n: u64) -> u32 {
        self.exponents.get(&n).copied().unwrap_or(0)
    }
}

impl fmt::Display for CycFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = vec![self.unit.to_string()];
        if self.x_valuation > 0 {
            parts.push(format!("x^{}", self.x_valuation));
        }
        for (n, k) in self.exponents.iter().rev() {
            parts.push(format!("phi_{n}^{k}"));
        }
        if !self.residual.is_constant() {
            parts.push(format!("[{}]", self.residual));
        }
        write!(f, "{}", parts.join(" * "))
    }
}

/// Converts to rational coefficients or fails.
pub fn to_rational_poly<F: Field>(f: &UniPoly<F>) -> Result<QPoly> {
    f.coeffs()
        .iter()
        .map(|c| c.to_rational().ok_or(Error::NonRationalCoefficients))
        .collect::<Result<Vec<_>>>()
        .map(QPoly::from_coeffs)
}

/// Cyclotomic split of a nonzero rational polynomial.
///
/// Candidates are all `n <= 2 deg^2` with `phi(n) <= deg`, which covers
/// every cyclotomic divisor since `phi(n) >= sqrt(n / 2)`.
pub fn factor_cyclotomic(f: &QPoly) -> Result<CycFactorization> {
    let unit = f.leading_coeff().ok_or(Error::ZeroPolynomial)?.clone();
    let v = f.x_valuation();
    let mut rest = f.shift_down(v).monic();
    let mut exponents = BTreeMap::new();
    let deg = rest.degree().unwrap_or(0) as u64;
    let bound = 2 * deg * deg;
    for n in 1..=bound {
        let remaining = rest.degree().unwrap_or(0) as u64;
        if remaining == 0 {
            break;
        }
        if euler_phi(n) > remaining {
            continue;
        }
        let phi = cyclotomic_poly(n);
        let mut k = 0;
        while let Some(q) = rest.exact_div(&phi)? {
            rest = q;
            k += 1;
        }
        if k > 0 {
            exponents.insert(n, k);
        }
    }
    Ok(CycFactorization { unit, x_valuation: v, exponents, residual: rest })
}
