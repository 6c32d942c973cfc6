//! Ideals of the polynomial ring and of the Laurent ring, and the closure
//! and interior operators on them.
//!
//! Laurent ideals are never handed to the Gröbner engine directly: they are
//! replaced by their contraction `(I : (x1...xd)^inf)` in the polynomial
//! ring, so membership and equality become polynomial questions.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::groebner::{groebner, GbConfig, GroebnerBasis};
use crate::multipoly::{Monomial, MultiPoly, TermOrder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RingMode {
    Polynomial,
    Laurent,
}

/// A finitely generated ideal together with the settings used to compute with it.
#[derive(Clone, Debug)]
pub struct Ideal {
    nvars: usize,
    mode: RingMode,
    generators: Vec<MultiPoly>,
    config: GbConfig,
}

impl PartialEq for Ideal {
    /// Structural equality of the generator lists; see [`Ideal::equals`] for
    /// equality of ideals.
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.mode == other.mode && self.generators == other.generators
    }
}

impl Ideal {
    /// Zero generators are dropped; the rest must live in `nvars` variables
    /// and, in polynomial mode, have nonnegative exponents.
    pub fn new(nvars: usize, mode: RingMode, generators: Vec<MultiPoly>) -> Result<Self> {
        let mut radicand = None;
        for g in &generators {
            if g.nvars() != nvars {
                return Err(Error::RingMismatch(format!("generator has {} variables, ring has {nvars}", g.nvars())));
            }
            if mode == RingMode::Polynomial && !g.is_polynomial() {
                return Err(Error::RingMismatch("negative exponent outside the Laurent ring".into()));
            }
            if let Some(m) = g.radicand()? {
                match radicand {
                    Some(r) if r != m => return Err(Error::MixedRadicand(r, m)),
                    _ => radicand = Some(m),
                }
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { nvars, mode, generators, config: GbConfig::default() })
    }

    pub fn polynomial(nvars: usize, generators: Vec<MultiPoly>) -> Result<Self> {
        Self::new(nvars, RingMode::Polynomial, generators)
    }

    pub fn laurent(nvars: usize, generators: Vec<MultiPoly>) -> Result<Self> {
        Self::new(nvars, RingMode::Laurent, generators)
    }

    pub fn with_config(mut self, config: GbConfig) -> Self {
        self.config = config;
        self
    }

    pub fn config(&self) -> &GbConfig {
        &self.config
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn mode(&self) -> RingMode {
        self.mode
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    fn derived(&self, generators: Vec<MultiPoly>) -> Ideal {
        Ideal {
            nvars: self.nvars,
            mode: self.mode,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            config: self.config.clone(),
        }
    }

    fn check_same_ring(&self, other: &Ideal) -> Result<()> {
        if self.nvars != other.nvars || self.mode != other.mode {
            return Err(Error::RingMismatch(format!(
                "{:?} ring in {} variables vs {:?} ring in {}",
                self.mode, self.nvars, other.mode, other.nvars
            )));
        }
        Ok(())
    }

    fn check_element(&self, f: &MultiPoly) -> Result<()> {
        if f.nvars() != self.nvars {
            return Err(Error::RingMismatch(format!("element has {} variables, ring has {}", f.nvars(), self.nvars)));
        }
        if self.mode == RingMode::Polynomial && !f.is_polynomial() {
            return Err(Error::RingMismatch("negative exponent outside the Laurent ring".into()));
        }
        Ok(())
    }

    /// Reduced Gröbner basis of a polynomial-ring ideal.
    pub fn groebner(&self, order: &TermOrder) -> Result<GroebnerBasis> {
        if self.mode == RingMode::Laurent {
            return Err(Error::RingMismatch("Gröbner bases are computed for the saturated polynomial ideal".into()));
        }
        groebner(self.nvars, &self.generators, order, &self.config)
    }

    /// The polynomial contraction of a Laurent ideal: generators are cleared
    /// of negative exponents, then saturated by the product of all variables.
    /// The result is a polynomial-mode ideal.
    pub fn laurent_saturate(&self) -> Result<Ideal> {
        let order = TermOrder::deglex(self.nvars);
        let mut gens = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            gens.push(g.laurent_normalize(&order)?.0);
        }
        let poly =
            Ideal { nvars: self.nvars, mode: RingMode::Polynomial, generators: gens, config: self.config.clone() };
        poly.saturate_by_variables(&(0..self.nvars).collect::<Vec<_>>())
    }

    /// `(I : (prod_{i in vars} x_i)^inf)` for a polynomial-mode ideal.
    pub fn saturate_by_variables(&self, vars: &[usize]) -> Result<Ideal> {
        if self.mode == RingMode::Laurent {
            return Err(Error::RingMismatch("saturate the polynomial contraction instead".into()));
        }
        let n = self.nvars;
        let mut m = Monomial::one(n + 1);
        let mut exps: Vec<i32> = m.exps().to_vec();
        for &v in vars {
            exps[v] = 1;
        }
        exps[n] = 1;
        m = Monomial::new(exps);
        let mut gens: Vec<MultiPoly> = self.generators.iter().map(|g| g.extend(1)).collect();
        gens.push(MultiPoly::monomial(n + 1, m, FieldElement::one()).sub(&MultiPoly::one(n + 1)));
        let gens = eliminate(n, 1, &gens, &self.config)?;
        Ok(Ideal { nvars: n, mode: RingMode::Polynomial, generators: gens, config: self.config.clone() })
    }

    /// The polynomial ideal on which membership and equality are decided.
    fn effective(&self) -> Result<Ideal> {
        match self.mode {
            RingMode::Polynomial => Ok(self.clone()),
            RingMode::Laurent => self.laurent_saturate(),
        }
    }

    /// Canonical form: the reduced deglex basis of the effective polynomial ideal.
    pub fn canonical_basis(&self) -> Result<GroebnerBasis> {
        self.effective()?.groebner(&TermOrder::deglex(self.nvars))
    }

    /// Elements are brought to polynomial form before testing; in the
    /// Laurent ring this multiplies by a unit and so does not change the answer.
    fn polynomial_form(&self, f: &MultiPoly) -> Result<MultiPoly> {
        self.check_element(f)?;
        if f.is_zero() {
            return Ok(f.clone());
        }
        Ok(match self.mode {
            RingMode::Polynomial => f.clone(),
            RingMode::Laurent => f.laurent_normalize(&TermOrder::deglex(self.nvars))?.0,
        })
    }

    pub fn contains(&self, f: &MultiPoly) -> Result<bool> {
        let g = self.polynomial_form(f)?;
        if g.is_zero() {
            return Ok(true);
        }
        Ok(self.canonical_basis()?.contains(&g))
    }

    pub fn contains_all(&self, fs: &[MultiPoly]) -> Result<bool> {
        let basis = self.canonical_basis()?;
        for f in fs {
            if !basis.contains(&self.polynomial_form(f)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.check_same_ring(other)?;
        other.contains_all(&self.generators)
    }

    /// Equality as ideals, by comparing canonical bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_same_ring(other)?;
        Ok(self.canonical_basis()?.elements() == other.canonical_basis()?.elements())
    }

    /// Substitution indices that generate the closure of `(f)`: `1..=lambda(f)`.
    /// In the Laurent ring any window of that length works; the one starting
    /// at 1 is used.
    fn closure_window(f: &MultiPoly) -> Result<std::ops::RangeInclusive<i64>> {
        Ok(1..=f.lambda()? as i64)
    }

    /// Generators of the power-closure: every `f^(i)` with `i` in the window of `f`.
    pub fn power_closure(&self) -> Result<Ideal> {
        let laurent = self.mode == RingMode::Laurent;
        let mut gens = Vec::new();
        for f in &self.generators {
            for i in Self::closure_window(f)? {
                gens.push(f.power_substitute(i, laurent)?);
            }
        }
        Ok(self.derived(gens))
    }

    /// Triangular generators of `(f)^(*)` obtained by eliminating the powers
    /// `f^(i)` against each other with the monomials treated as unknowns: the
    /// `k`-th one is `sum_{i>=k} a_i m_i prod_{j<k} (m_i - m_j)`.
    pub fn triangular_closure_generators(f: &MultiPoly) -> Result<Vec<MultiPoly>> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let n = f.nvars();
        let terms: Vec<(Monomial, FieldElement)> = f.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        let mono = |m: &Monomial| MultiPoly::monomial(n, m.clone(), FieldElement::one());
        Ok((0..terms.len())
            .map(|k| {
                terms[k..].iter().fold(MultiPoly::zero(n), |acc, (mi, ai)| {
                    let factor =
                        terms[..k].iter().fold(MultiPoly::monomial(n, mi.clone(), ai.clone()), |p, (mj, _)| {
                            p.mul(&mono(mi).sub(&mono(mj)))
                        });
                    acc.add(&factor)
                })
            })
            .collect())
    }

    /// Whether `f^(i)` lies in the ideal for every generator `f` and every `i`
    /// in its window.
    pub fn is_power_closed(&self) -> Result<bool> {
        let laurent = self.mode == RingMode::Laurent;
        let mut needed = Vec::new();
        for f in &self.generators {
            for i in Self::closure_window(f)?.skip(1) {
                needed.push(f.power_substitute(i, laurent)?);
            }
        }
        if needed.is_empty() {
            return Ok(true);
        }
        self.contains_all(&needed)
    }

    /// Whether `f^(i)` lies in the ideal for `1 <= i <= bound`. Necessary for
    /// `f` to lie in the power-interior, not sufficient.
    pub fn bounded_power_interior(&self, f: &MultiPoly, bound: u32) -> Result<bool> {
        if bound == 0 {
            return Err(Error::InvalidArgument("bound must be at least 1".into()));
        }
        self.check_element(f)?;
        let laurent = self.mode == RingMode::Laurent;
        let subs = (1..=bound as i64).map(|i| f.power_substitute(i, laurent)).collect::<Result<Vec<_>>>()?;
        self.contains_all(&subs)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        Ok(self.derived([self.generators.clone(), other.generators.clone()].concat()))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        let gens = self.generators.iter().flat_map(|f| other.generators.iter().map(move |g| f.mul(g))).collect();
        Ok(self.derived(gens))
    }

    pub fn power(&self, n: u32) -> Result<Ideal> {
        let mut acc = self.derived(vec![MultiPoly::one(self.nvars)]);
        for _ in 0..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I ∩ J` from `t*I + (1 - t)*J` by eliminating `t`. Laurent ideals are
    /// intersected through their contractions.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        let (a, b) = (self.effective()?, other.effective()?);
        let n = self.nvars;
        let t = MultiPoly::var(n + 1, n);
        let one_minus_t = MultiPoly::one(n + 1).sub(&t);
        let mut gens: Vec<MultiPoly> = a.generators.iter().map(|f| t.mul(&f.extend(1))).collect();
        gens.extend(b.generators.iter().map(|g| one_minus_t.mul(&g.extend(1))));
        let gens = eliminate(n, 1, &gens, &self.config)?;
        Ok(self.derived(gens))
    }

    /// Whether some power of `f` lies in the ideal: `1 ∈ I + (t*f - 1)`.
    pub fn radical_member(&self, f: &MultiPoly) -> Result<bool> {
        let g = self.polynomial_form(f)?;
        if g.is_zero() {
            return Ok(true);
        }
        let base = self.effective()?;
        let n = self.nvars;
        let mut gens: Vec<MultiPoly> = base.generators.iter().map(|h| h.extend(1)).collect();
        gens.push(MultiPoly::var(n + 1, n).mul(&g.extend(1)).sub(&MultiPoly::one(n + 1)));
        Ok(groebner(n + 1, &gens, &TermOrder::deglex(n + 1), &self.config)?.is_unit())
    }
}

/// Eliminates the last `extra` variables of a ring with `keep + extra`
/// variables; returns the basis elements free of them.
fn eliminate(keep: usize, extra: usize, gens: &[MultiPoly], cfg: &GbConfig) -> Result<Vec<MultiPoly>> {
    let total = keep + extra;
    let order = TermOrder::eliminate(total, &(keep..total).collect::<Vec<_>>());
    let gb = groebner(total, gens, &order, cfg)?;
    Ok(gb.elements().iter().filter_map(|g| g.restrict(keep)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn p(n: usize, t: &[(i64, &[i32])]) -> MultiPoly {
        MultiPoly::from_int_terms(n, t)
    }

    fn line(a: i64) -> MultiPoly {
        p(2, &[(1, &[0, 1]), (-a, &[1, 0])])
    }

    fn xsq() -> MultiPoly {
        p(2, &[(1, &[2, 0])])
    }

    #[test]
    fn closure_of_a_line() {
        let i = Ideal::polynomial(2, vec![line(2)]).unwrap();
        let c = i.power_closure().unwrap();
        assert_eq!(c.generators(), &[line(2), p(2, &[(1, &[0, 2]), (-2, &[2, 0])])]);
        assert_eq!(c.canonical_basis().unwrap().elements(), &[line(2), xsq()]);
        assert!(c.contains(&xsq()).unwrap());
        assert!(!i.is_power_closed().unwrap());
        assert!(c.is_power_closed().unwrap());
    }

    #[test]
    fn triangular_generators_match_substitutions() {
        let f = p(3, &[(2, &[1, 0, 0]), (-1, &[0, 1, 0]), (3, &[0, 0, 1])]);
        let tri = Ideal::triangular_closure_generators(&f).unwrap();
        assert_eq!(tri.len(), 3);
        let a = Ideal::polynomial(3, tri).unwrap();
        let b = Ideal::polynomial(3, vec![f]).unwrap().power_closure().unwrap();
        assert!(a.equals(&b).unwrap());
    }

    #[test]
    fn closure_does_not_commute_with_intersection() {
        let i = Ideal::polynomial(2, vec![line(2)]).unwrap();
        let j = Ideal::polynomial(2, vec![line(3)]).unwrap();
        let both = i.power_closure().unwrap().intersect(&j.power_closure().unwrap()).unwrap();
        let square = Ideal::polynomial(2, vec![xsq(), p(2, &[(1, &[1, 1])]), p(2, &[(1, &[0, 2])])]).unwrap();
        assert!(both.equals(&square).unwrap());
        assert!(both.contains(&xsq()).unwrap());

        let meet = i.intersect(&j).unwrap();
        assert!(meet.equals(&Ideal::polynomial(2, vec![line(2).mul(&line(3))]).unwrap()).unwrap());
        assert!(!meet.power_closure().unwrap().contains(&xsq()).unwrap());
        assert!(i.intersect(&i).unwrap().equals(&i).unwrap());
    }

    #[test]
    fn power_closed_families() {
        let mono = Ideal::polynomial(2, vec![p(2, &[(1, &[2, 1])]), p(2, &[(1, &[1, 2])])]).unwrap();
        assert!(mono.is_power_closed().unwrap());
        let toric = Ideal::polynomial(3, vec![p(3, &[(1, &[1, 0, 1]), (-1, &[0, 2, 0])])]).unwrap();
        assert!(toric.is_power_closed().unwrap());
        let sum = Ideal::polynomial(2, vec![p(2, &[(1, &[1, 0]), (1, &[0, 1])])]).unwrap();
        assert!(!sum.is_power_closed().unwrap());
        let bin = Ideal::polynomial(2, vec![p(2, &[(1, &[2, 1]), (-1, &[1, 2])])]).unwrap();
        assert!(bin.equals(&bin.power_closure().unwrap()).unwrap());
    }

    #[test]
    fn laurent_saturation() {
        let i = Ideal::laurent(2, vec![p(2, &[(1, &[1, 1]), (-1, &[1, 0])])]).unwrap();
        let s = i.laurent_saturate().unwrap();
        assert_eq!(s.canonical_basis().unwrap().elements(), &[p(2, &[(1, &[0, 1]), (-1, &[0, 0])])]);
        let unit = Ideal::laurent(2, vec![p(2, &[(1, &[1, 0])])]).unwrap();
        assert!(unit.canonical_basis().unwrap().is_unit());
        assert!(i.contains(&p(2, &[(1, &[0, 1]), (-1, &[0, 0])])).unwrap());
        assert!(i.contains(&p(2, &[(1, &[-3, 1]), (-1, &[-3, 0])])).unwrap());
    }

    #[test]
    fn laurent_plane_closure() {
        let alpha = FieldElement::quadratic(Rational::new(1, 2).unwrap(), Rational::integer(1), 2).unwrap();
        let beta = FieldElement::one().sub(&alpha);
        let f = MultiPoly::from_terms(
            3,
            [
                (Monomial::new([0, 0, 1]), FieldElement::one()),
                (Monomial::new([1, 0, 0]), alpha.neg()),
                (Monomial::new([0, 1, 0]), beta.neg()),
            ],
        );
        let i = Ideal::laurent(3, vec![f.clone()]).unwrap();
        let c = i.power_closure().unwrap();
        assert_eq!(c.generators().len(), 3);
        let y_minus_x = p(3, &[(1, &[0, 1, 0]), (-1, &[1, 0, 0])]);
        let expected = Ideal::laurent(3, vec![f, y_minus_x.pow(2)]).unwrap();
        assert!(c.equals(&expected).unwrap());
    }

    #[test]
    fn interior_tests() {
        let diff = Ideal::polynomial(2, vec![p(2, &[(1, &[1, 0]), (-1, &[0, 1])])]).unwrap();
        assert!(diff.bounded_power_interior(&p(2, &[(1, &[2, 0]), (-1, &[0, 2])]), 10).unwrap());
        let x_minus_2 = p(1, &[(1, &[1]), (-2, &[0])]);
        let i = Ideal::polynomial(1, vec![x_minus_2.clone()]).unwrap();
        assert!(!i.bounded_power_interior(&x_minus_2, 2).unwrap());
        assert!(i.bounded_power_interior(&x_minus_2, 0).is_err());
    }

    #[test]
    fn radical_membership() {
        let x = p(2, &[(1, &[1, 0])]);
        let i = Ideal::polynomial(2, vec![p(2, &[(1, &[1, 0]), (1, &[0, 1])]), p(2, &[(1, &[1, 1])])]).unwrap();
        assert!(i.radical_member(&x).unwrap());
        assert!(!i.contains(&x).unwrap());
        assert!(Ideal::polynomial(2, vec![xsq()]).unwrap().radical_member(&x).unwrap());
        assert!(!Ideal::polynomial(2, vec![p(2, &[(1, &[0, 1])])]).unwrap().radical_member(&x).unwrap());
    }

    #[test]
    fn products_and_powers() {
        let x = Ideal::polynomial(2, vec![p(2, &[(1, &[1, 0])])]).unwrap();
        let y = Ideal::polynomial(2, vec![p(2, &[(1, &[0, 1])])]).unwrap();
        assert_eq!(x.product(&y).unwrap().generators(), &[p(2, &[(1, &[1, 1])])]);
        let d = p(2, &[(1, &[1, 0]), (-1, &[0, 1])]);
        let di = Ideal::polynomial(2, vec![d.clone()]).unwrap();
        assert_eq!(di.power(2).unwrap().generators(), &[d.pow(2)]);
    }

    #[test]
    fn ring_mismatches() {
        let a = Ideal::polynomial(2, vec![]).unwrap();
        let b = Ideal::laurent(2, vec![]).unwrap();
        assert!(a.intersect(&b).is_err());
        assert!(Ideal::polynomial(2, vec![p(2, &[(1, &[-1, 0])])]).is_err());
        assert!(a.contains(&MultiPoly::zero(2)).unwrap());
        assert!(b.groebner(&TermOrder::deglex(2)).is_err());
    }
}
