//! Sparse multivariate polynomials and Laurent polynomials over
//! [`FieldElement`], together with term orders.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

/// Exponent vector. Entries may be negative only for Laurent polynomials.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(SmallVec<[i32; 8]>);

impl Monomial {
    pub fn new(exps: impl IntoIterator<Item = i32>) -> Self {
        Monomial(exps.into_iter().collect())
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }

    /// `self / rhs` as a Laurent monomial.
    pub fn div(&self, rhs: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }

    pub fn divides(&self, rhs: &Monomial) -> bool {
        self.0.iter().zip(&rhs.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, rhs: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&rhs.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, rhs: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&rhs.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn scale(&self, i: i32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * i).collect())
    }

    pub fn inverse(&self) -> Monomial {
        self.scale(-1)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
    }

    /// Positive and negative parts: `self = plus / minus`.
    pub fn split_signs(&self) -> (Monomial, Monomial) {
        (Monomial(self.0.iter().map(|&e| e.max(0)).collect()), Monomial(self.0.iter().map(|&e| (-e).max(0)).collect()))
    }

    /// Appends `extra` zero exponents.
    pub fn extend(&self, extra: usize) -> Monomial {
        let mut v = self.0.clone();
        v.extend(std::iter::repeat_n(0, extra));
        Monomial(v)
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// How monomials are compared once the variables are ranked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    DegLex,
    /// The first `k` ranked variables form a block that dominates the rest;
    /// each block is compared by degree, then lexicographically.
    Eliminate(usize),
}

/// A monomial order: `precedence[0]` is the most significant variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TermOrder {
    pub kind: OrderKind,
    pub precedence: Vec<usize>,
}

impl TermOrder {
    /// `x1 < x2 < ... < xn`: the last variable is the most significant.
    pub fn default_precedence(nvars: usize) -> Vec<usize> {
        (0..nvars).rev().collect()
    }

    pub fn deglex(nvars: usize) -> Self {
        TermOrder { kind: OrderKind::DegLex, precedence: Self::default_precedence(nvars) }
    }

    pub fn lex(nvars: usize) -> Self {
        TermOrder { kind: OrderKind::Lex, precedence: Self::default_precedence(nvars) }
    }

    /// Block order in which every monomial involving `vars` beats every
    /// monomial free of them.
    pub fn eliminate(nvars: usize, vars: &[usize]) -> Self {
        let mut precedence = vars.to_vec();
        precedence.extend(Self::default_precedence(nvars).into_iter().filter(|v| !vars.contains(v)));
        TermOrder { kind: OrderKind::Eliminate(vars.len()), precedence }
    }

    /// The same kind of order on a ring with `extra` new variables appended,
    /// the new ones ranked least significant.
    pub fn extended(&self, extra: usize) -> Self {
        let n = self.precedence.len();
        let mut precedence = self.precedence.clone();
        precedence.extend((n..n + extra).rev());
        TermOrder { kind: self.kind, precedence }
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let lex =
            |range: &[usize]| range.iter().map(|&v| a.0[v].cmp(&b.0[v])).find(|o| o.is_ne()).unwrap_or(Ordering::Equal);
        let deg = |range: &[usize]| {
            let da: i64 = range.iter().map(|&v| a.0[v] as i64).sum();
            let db: i64 = range.iter().map(|&v| b.0[v] as i64).sum();
            da.cmp(&db)
        };
        match self.kind {
            OrderKind::Lex => lex(&self.precedence),
            OrderKind::DegLex => deg(&self.precedence).then_with(|| lex(&self.precedence)),
            OrderKind::Eliminate(k) => {
                let (head, tail) = self.precedence.split_at(k);
                deg(head).then_with(|| lex(head)).then_with(|| deg(tail)).then_with(|| lex(tail))
            }
        }
    }
}

/// Sparse polynomial in `nvars` variables; exponents may be negative, in
/// which case it is a Laurent polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, FieldElement>,
}

/// A unit of the Laurent ring: a nonzero scalar times a Laurent monomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentUnit {
    pub scalar: FieldElement,
    pub monomial: Monomial,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: FieldElement) -> Self {
        Self::monomial(nvars, Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, FieldElement::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(nvars, Monomial::var(nvars, i), FieldElement::one())
    }

    pub fn monomial(nvars: usize, m: Monomial, c: FieldElement) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Sums the given terms, merging repeated monomials.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, FieldElement)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial length differs from variable count");
            p.add_term(m, c);
        }
        p
    }

    /// `sum coeffs[i] * x^exps[i]` from integer data; handy in tests.
    pub fn from_int_terms(nvars: usize, terms: &[(i64, &[i32])]) -> Self {
        Self::from_terms(
            nvars,
            terms.iter().map(|(c, e)| (Monomial::new(e.iter().copied()), FieldElement::integer(*c))),
        )
    }

    fn add_term(&mut self, m: Monomial, c: FieldElement) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElement {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Monomial::is_polynomial)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Number of monomials in the support.
    pub fn lambda(&self) -> Result<usize> {
        if self.is_zero() {
            Err(Error::ZeroPolynomial)
        } else {
            Ok(self.terms.len())
        }
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The common radicand of the coefficients, if any is irrational.
    pub fn radicand(&self) -> Result<Option<i64>> {
        let mut found: Option<i64> = None;
        for c in self.terms.values() {
            if let Some(m) = c.radicand() {
                match found {
                    Some(f) if f != m => return Err(Error::MixedRadicand(f, m)),
                    _ => found = Some(m),
                }
            }
        }
        Ok(found)
    }

    pub fn add(&self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn mul(&self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, c: &FieldElement) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    /// `f(x1^i, ..., xd^i)`. Negative `i` is only meaningful for Laurent
    /// polynomials and must be allowed explicitly.
    pub fn power_substitute(&self, i: i64, allow_negative: bool) -> Result<MultiPoly> {
        if i == 0 || (i < 0 && !allow_negative) || i32::try_from(i).is_err() {
            return Err(Error::BadSubstitutionIndex(i));
        }
        Ok(MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.scale(i as i32), c.clone())).collect(),
        })
    }

    /// Leading monomial and coefficient under `order`.
    pub fn leading_term(&self, order: &TermOrder) -> Option<(&Monomial, &FieldElement)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Scales so the leading coefficient under `order` is one.
    pub fn monic(&self, order: &TermOrder) -> MultiPoly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Componentwise minimum of the exponents over all terms.
    pub fn min_exponents(&self) -> Option<Monomial> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, m| acc.gcd(m)))
    }

    /// Splits `f = unit * g` where `g` is a polynomial that no variable
    /// divides and whose leading coefficient under `order` is one.
    pub fn laurent_normalize(&self, order: &TermOrder) -> Result<(MultiPoly, LaurentUnit)> {
        let shift = self.min_exponents().ok_or(Error::ZeroPolynomial)?;
        let shifted = self.mul_monomial(&shift.inverse());
        let scalar = shifted.leading_term(order).map(|(_, c)| c.clone()).expect("nonzero");
        let g = shifted.scale(&scalar.inv().expect("nonzero"));
        Ok((g, LaurentUnit { scalar, monomial: shift }))
    }

    /// Embeds into a ring with `extra` additional trailing variables.
    pub fn extend(&self, extra: usize) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars + extra,
            terms: self.terms.iter().map(|(m, c)| (m.extend(extra), c.clone())).collect(),
        }
    }

    /// Drops the trailing variables from `keep` on; `None` if any of them occurs.
    pub fn restrict(&self, keep: usize) -> Option<MultiPoly> {
        if self.terms.keys().any(|m| m.0[keep..].iter().any(|&e| e != 0)) {
            return None;
        }
        Some(MultiPoly {
            nvars: keep,
            terms: self.terms.iter().map(|(m, c)| (Monomial(m.0[..keep].into()), c.clone())).collect(),
        })
    }

    /// Reorders variables: variable `i` becomes variable `perm[i]`.
    pub fn permute(&self, perm: &[usize], nvars: usize) -> MultiPoly {
        MultiPoly::from_terms(
            nvars,
            self.terms.iter().map(|(m, c)| {
                let mut e = Monomial::one(nvars);
                for (i, &x) in m.0.iter().enumerate() {
                    e.0[perm[i]] += x;
                }
                (e, c.clone())
            }),
        )
    }

    /// Substitutes `images[i]` for variable `i`; exponents must be nonnegative
    /// unless the corresponding image is a monomial.
    pub fn compose(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.nvars {
            return Err(Error::LengthMismatch(images.len(), self.nvars));
        }
        let target = images.first().map_or(0, MultiPoly::nvars);
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e >= 0 {
                    t = t.mul(&images[i].pow(e as u32));
                } else if images[i].num_terms() == 1 {
                    let (mm, cc) = images[i].terms().next().expect("one term");
                    let inv = cc.inv().ok_or(Error::DivisionByZero)?;
                    t = t.mul(&MultiPoly::monomial(target, mm.scale(e), inv.pow((-e) as u32)));
                } else {
                    return Err(Error::InvalidArgument("negative power of a non-monomial".into()));
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Renders with the given variable names, terms in decreasing `order`.
    pub fn fmt_with(&self, names: &[String], order: &TermOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.cmp(b.0, a.0));
        let mut out = String::new();
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let (negative, mag) = split_sign(c);
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = m.fmt_with(names);
            let coef = if mag.is_rational() { mag.to_string() } else { format!("({mag})") };
            match (mag.is_one(), m.is_one()) {
                (_, true) => out.push_str(&coef),
                (true, false) => out.push_str(&mono),
                (false, false) => {
                    out.push_str(&coef);
                    out.push('*');
                    out.push_str(&mono);
                }
            }
        }
        out
    }
}

/// A coefficient prints with a leading minus when its first printed part is
/// negative; the magnitude is what remains.
fn split_sign(c: &FieldElement) -> (bool, FieldElement) {
    let lead_negative =
        if c.rational_part().is_zero() { c.irrational_part().is_negative() } else { c.rational_part().is_negative() };
    if lead_negative {
        (true, c.neg())
    } else {
        (false, c.clone())
    }
}

/// Default names `x1, ..., xn`.
pub fn default_names(nvars: usize) -> Vec<String> {
    (1..=nvars).map(|i| format!("x{i}")).collect()
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(&default_names(self.nvars), &TermOrder::deglex(self.nvars)))
    }
}

/// `sigma_k(x1, ..., xd)`; zero when `k > d`.
pub fn elementary_symmetric(d: usize, k: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(d);
    if k > d {
        return out;
    }
    let mut chosen: Vec<usize> = (0..k).collect();
    loop {
        let mut m = Monomial::one(d);
        for &i in &chosen {
            m.0[i] = 1;
        }
        out.add_term(m, FieldElement::one());
        // advance to the next k-subset in lexicographic order
        let mut pos = k;
        while pos > 0 && chosen[pos - 1] == d - k + pos - 1 {
            pos -= 1;
        }
        if pos == 0 {
            return out;
        }
        chosen[pos - 1] += 1;
        for j in pos..k {
            chosen[j] = chosen[j - 1] + 1;
        }
    }
}

/// Checks `x_l^n = sum_{i=0}^{d-1} (-1)^i x_l^{n-i-1} sigma_{i+1}(d)` by expansion.
pub fn newton_power_identity_check(d: usize, n: usize, l: usize) -> Result<bool> {
    if l == 0 || l > d {
        return Err(Error::InvalidArgument(format!("variable index {l} outside 1..={d}")));
    }
    if n < d + 1 {
        return Err(Error::InvalidArgument(format!("exponent {n} must be at least {}", d + 1)));
    }
    let x = MultiPoly::var(d, l - 1);
    let lhs = x.pow(n as u32);
    let rhs = (0..d).fold(MultiPoly::zero(d), |acc, i| {
        let term = x.pow((n - i - 1) as u32).mul(&elementary_symmetric(d, i + 1));
        if i % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        }
    });
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn show(f: &MultiPoly, vars: &[&str]) -> String {
        f.fmt_with(&names(vars), &TermOrder::deglex(f.nvars()))
    }

    #[test]
    fn substitution_examples() {
        let f = MultiPoly::from_int_terms(2, &[(1, &[0, 1]), (-2, &[1, 0])]);
        let f2 = f.power_substitute(2, false).unwrap();
        assert_eq!(show(&f2, &["x", "y"]), "y^2 - 2*x^2");
        assert_eq!(f.power_substitute(1, false).unwrap(), f);
        let g = MultiPoly::from_int_terms(2, &[(1, &[1, -1]), (-1, &[0, 0])]);
        let gi = g.power_substitute(-1, true).unwrap();
        assert_eq!(gi, MultiPoly::from_int_terms(2, &[(1, &[-1, 1]), (-1, &[0, 0])]));
        assert_eq!(f.power_substitute(0, true), Err(Error::BadSubstitutionIndex(0)));
        assert_eq!(f.power_substitute(-1, false), Err(Error::BadSubstitutionIndex(-1)));
    }

    #[test]
    fn symmetric_functions() {
        assert_eq!(show(&elementary_symmetric(2, 1), &["x1", "x2"]), "x2 + x1");
        assert_eq!(show(&elementary_symmetric(3, 3), &["x1", "x2", "x3"]), "x1*x2*x3");
        assert!(elementary_symmetric(2, 3).is_zero());
        assert_eq!(elementary_symmetric(4, 2).num_terms(), 6);
        assert!(elementary_symmetric(3, 0).is_constant());
    }

    #[test]
    fn power_identity() {
        assert!(newton_power_identity_check(2, 3, 1).unwrap());
        assert!(newton_power_identity_check(3, 4, 2).unwrap());
        assert!(newton_power_identity_check(2, 2, 1).is_err());
        assert!(newton_power_identity_check(2, 3, 3).is_err());
    }

    #[test]
    fn lambda_counts_terms() {
        assert_eq!(MultiPoly::from_int_terms(2, &[(1, &[0, 1]), (-2, &[1, 0])]).lambda(), Ok(2));
        assert_eq!(MultiPoly::from_int_terms(3, &[(1, &[1, 0, 0]), (1, &[0, 1, 0]), (1, &[0, 0, 1])]).lambda(), Ok(3));
        assert_eq!(MultiPoly::from_int_terms(2, &[(5, &[2, 3])]).lambda(), Ok(1));
        assert_eq!(MultiPoly::zero(2).lambda(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn laurent_normalization() {
        let ord = TermOrder::deglex(2);
        let f = MultiPoly::from_int_terms(2, &[(1, &[-1, 1]), (-1, &[0, 0])]);
        let (g, u) = f.laurent_normalize(&ord).unwrap();
        assert_eq!(show(&g, &["x", "y"]), "y - x");
        assert_eq!(u.monomial, Monomial::new([-1, 0]));
        assert!(u.scalar.is_one());

        let h = MultiPoly::from_int_terms(2, &[(3, &[0, 1]), (-3, &[1, 0])]);
        let (g, u) = h.laurent_normalize(&ord).unwrap();
        assert_eq!(show(&g, &["x", "y"]), "y - x");
        assert_eq!(u.scalar, FieldElement::integer(3));

        let m = MultiPoly::from_int_terms(2, &[(1, &[2, -3])]);
        let (g, u) = m.laurent_normalize(&ord).unwrap();
        assert_eq!(g, MultiPoly::one(2));
        assert_eq!(u.monomial, Monomial::new([2, -3]));
        assert!(MultiPoly::zero(2).laurent_normalize(&ord).is_err());
    }

    #[test]
    fn display_with_quadratic_coefficients() {
        let a = FieldElement::quadratic(crate::Rational::new(1, 2).unwrap(), crate::Rational::integer(1), 2).unwrap();
        let f = MultiPoly::from_terms(
            3,
            [(Monomial::new([0, 0, 1]), FieldElement::one()), (Monomial::new([1, 0, 0]), a.neg())],
        );
        assert_eq!(show(&f, &["x", "y", "z"]), "z - (1/2 + sqrt(2))*x");
    }

    #[test]
    fn orders() {
        let a = Monomial::new([2, 0]);
        let b = Monomial::new([0, 1]);
        assert_eq!(TermOrder::deglex(2).cmp(&a, &b), Ordering::Greater);
        assert_eq!(TermOrder::lex(2).cmp(&a, &b), Ordering::Less);
        let e = TermOrder::eliminate(3, &[2]);
        assert_eq!(e.cmp(&Monomial::new([0, 0, 1]), &Monomial::new([5, 5, 0])), Ordering::Greater);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn mono(d: usize) -> impl Strategy<Value = Monomial> {
            prop::collection::vec(0i32..4, d).prop_map(Monomial::new)
        }

        fn poly(d: usize) -> impl Strategy<Value = MultiPoly> {
            prop::collection::vec((-3i64..4, mono(d)), 0..4).prop_map(move |ts| {
                MultiPoly::from_terms(d, ts.into_iter().map(|(c, m)| (m, FieldElement::integer(c))))
            })
        }

        fn order(d: usize) -> impl Strategy<Value = TermOrder> {
            prop_oneof![
                Just(TermOrder::deglex(d)),
                Just(TermOrder::lex(d)),
                Just(TermOrder::eliminate(d, &[0])),
                Just(TermOrder::eliminate(d, &[1, 2])),
            ]
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn orders_are_total_and_multiplicative(o in order(3), a in mono(3), b in mono(3), w in mono(3)) {
                let ab = o.cmp(&a, &b);
                prop_assert_eq!(ab.reverse(), o.cmp(&b, &a));
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                prop_assert_eq!(o.cmp(&a.mul(&w), &b.mul(&w)), ab);
                prop_assert!(o.cmp(&a.mul(&w), &a) != Ordering::Less);
            }

            #[test]
            fn deglex_refines_degree(a in mono(3), b in mono(3)) {
                if a.degree() > b.degree() {
                    prop_assert_eq!(TermOrder::deglex(3).cmp(&a, &b), Ordering::Greater);
                }
            }

            #[test]
            fn substitution_is_a_ring_map(f in poly(3), g in poly(3), i in 1i64..5) {
                let s = |p: &MultiPoly| p.power_substitute(i, false).unwrap();
                prop_assert_eq!(s(&f.mul(&g)), s(&f).mul(&s(&g)));
                prop_assert_eq!(s(&f.add(&g)), s(&f).add(&s(&g)));
            }

            #[test]
            fn power_identity_holds(d in 1usize..=5, extra in 1usize..=4, l in 1usize..=5) {
                prop_assume!(l <= d);
                prop_assert!(newton_power_identity_check(d, d + extra, l).unwrap());
            }
        }
    }
}
