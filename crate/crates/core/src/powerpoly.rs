//! Powered univariate polynomials: the decision procedure, the generators of
//! the power-closure `(f)^(*)` and power-interior `(f)^(o)`, and the nested
//! decomposition into psi-polynomials `psi_A = lcm(x^a - 1 : a in A)`.
//!
//! Everything here works over Q. Each `phi_n` is irreducible over Q, so all
//! primitive n-th roots of unity share one multiplicity and the exponent map
//! of [`factor_cyclotomic`] carries all the information the procedures need.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::arith::{divisors, gcd};
use crate::cyclotomic::{cyclotomic_poly, cyclotomic_product, factor_cyclotomic, CycFactorization, QPoly};
use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::modular;

/// True iff `f` divides `f(x^i)` for every `i >= 1`.
///
/// Holds exactly when the residual is constant and, whenever `d | n`, the
/// multiplicity of `phi_d` is at least that of `phi_n`.
pub fn is_powered(f: &QPoly) -> Result<bool> {
    let fac = factor_cyclotomic(f)?;
    Ok(exponents_are_powered(&fac))
}

fn exponents_are_powered(fac: &CycFactorization) -> bool {
    fac.has_constant_residual()
        && fac.exponents.iter().all(|(&n, &k)| divisors(n).into_iter().all(|d| fac.exponent(d) >= k))
}

/// Monic generator of `(f)^(*)`: `x^v * prod phi_n^{p_n}` with
/// `p_n = min { k_d : d | n }`.
pub fn star(f: &QPoly) -> Result<QPoly> {
    let fac = factor_cyclotomic(f)?;
    Ok(cyclotomic_product(&star_exponents(&fac)).shift_up(fac.x_valuation))
}

fn star_exponents(fac: &CycFactorization) -> BTreeMap<u64, u32> {
    fac.exponents
        .keys()
        .filter_map(|&n| {
            let p = divisors(n).into_iter().map(|d| fac.exponent(d)).min().unwrap_or(0);
            (p > 0).then_some((n, p))
        })
        .collect()
}

/// `gcd(f, f^(2), ..., f^(deg f + 1))`, made monic.
///
/// Independent of the cyclotomic machinery; used to cross-check [`star`].
pub fn star_via_gcd(f: &QPoly) -> Result<QPoly> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    let integral = modular::primitive_integers(f);
    let lead = integral.last().expect("nonzero");
    let substituted = |coeffs: &[BigInt], i: usize| -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); deg * i + 1];
        for (k, c) in coeffs.iter().enumerate() {
            out[k * i] = c.clone();
        }
        out
    };
    let lifted = modular::lift(
        lead,
        |p| modular::divisible(lead, p),
        |p| {
            let reduced = modular::reduce(&integral, p);
            let mut g = modular::gcd(reduced.clone(), Vec::new(), p);
            for i in 2..=deg + 1 {
                if g.len() == 1 {
                    break;
                }
                let mut spread = vec![0; deg * i + 1];
                for (k, &c) in reduced.iter().enumerate() {
                    spread[k * i] = c;
                }
                g = modular::gcd(g.clone(), modular::rem(spread, &g, p), p);
            }
            g
        },
        |h| (1..=deg + 1).all(|i| modular::divides(h, &substituted(&integral, i))),
    );
    Ok(QPoly::from_integers(&lifted).monic())
}

/// Generator of the power-interior `(f)^(o)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PowerInterior {
    /// The interior is the zero ideal.
    Zero,
    Generator(QPoly),
}

impl PowerInterior {
    pub fn generator(&self) -> Option<&QPoly> {
        match self {
            PowerInterior::Zero => None,
            PowerInterior::Generator(g) => Some(g),
        }
    }
}

impl fmt::Display for PowerInterior {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PowerInterior::Zero => write!(f, "(0)"),
            PowerInterior::Generator(g) => write!(f, "{g}"),
        }
    }
}

/// `(f)^(o)`: zero if `f` has a root that is not zero or a root of unity,
/// otherwise `x^v * prod phi_n^{q_n}` with `q_n = max { k_m : n | m }`.
pub fn circle(f: &QPoly) -> Result<PowerInterior> {
    let fac = factor_cyclotomic(f)?;
    if !fac.has_constant_residual() {
        return Ok(PowerInterior::Zero);
    }
    let exps = circle_exponents(&fac);
    Ok(PowerInterior::Generator(cyclotomic_product(&exps).shift_up(fac.x_valuation)))
}

fn circle_exponents(fac: &CycFactorization) -> BTreeMap<u64, u32> {
    let mut q: BTreeMap<u64, u32> = BTreeMap::new();
    for (&m, &k) in &fac.exponents {
        for d in divisors(m) {
            let e = q.entry(d).or_insert(0);
            *e = (*e).max(k);
        }
    }
    q
}

/// Which divisor-closed index set bounds the psi-decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundMode {
    Star,
    Circle,
}

/// Star: every `n` with `phi_d | f` for all `d | n`.
/// Circle: every divisor of an index `n` with `phi_n | f`.
pub fn downset_bound(f: &QPoly, mode: BoundMode) -> Result<BTreeSet<u64>> {
    let fac = factor_cyclotomic(f)?;
    Ok(match mode {
        BoundMode::Star => {
            fac.exponents.keys().copied().filter(|&n| divisors(n).into_iter().all(|d| fac.exponent(d) > 0)).collect()
        }
        BoundMode::Circle => fac.exponents.keys().flat_map(|&n| divisors(n)).collect(),
    })
}

/// A finite set of positive integers, none dividing another.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Antichain(BTreeSet<u64>);

impl Antichain {
    pub fn new(elements: impl IntoIterator<Item = u64>) -> Result<Self> {
        let set: BTreeSet<u64> = elements.into_iter().collect();
        if set.contains(&0) {
            return Err(Error::InvalidArgument("antichain elements must be positive".into()));
        }
        for &a in &set {
            if let Some(&b) = set.iter().find(|&&b| b != a && a % b == 0) {
                return Err(Error::InvalidArgument(format!("{b} divides {a}")));
            }
        }
        Ok(Antichain(set))
    }

    /// The maximal elements of `set` under divisibility.
    pub fn maximal_of(set: &BTreeSet<u64>) -> Self {
        Antichain(set.iter().copied().filter(|&a| !set.iter().any(|&b| b != a && b % a == 0)).collect())
    }

    pub fn elements(&self) -> &BTreeSet<u64> {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All divisors of all elements.
    pub fn downset(&self) -> BTreeSet<u64> {
        downset_of(&self.0)
    }

    /// `D(self) ⊆ D(other)`.
    pub fn precedes(&self, other: &Antichain) -> bool {
        self.0.iter().all(|a| other.0.iter().any(|b| b % a == 0))
    }
}

impl fmt::Display for Antichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().rev().map(u64::to_string).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

pub fn downset_of(set: &BTreeSet<u64>) -> BTreeSet<u64> {
    set.iter().flat_map(|&a| divisors(a)).collect()
}

/// `psi_A = lcm(x^a - 1 : a in A)`.
pub fn psi_poly(a: &Antichain) -> Result<QPoly> {
    if a.is_empty() {
        return Err(Error::InvalidArgument("psi of an empty antichain".into()));
    }
    a.0.iter().try_fold(QPoly::one(), |acc, &n| acc.lcm(&QPoly::x_pow_minus_one(n as usize)))
}

/// `prod_{i in D(set)} phi_i` for an arbitrary finite set, i.e. psi of its downset.
pub fn psi_of_set(set: &BTreeSet<u64>) -> QPoly {
    downset_of(set).into_iter().fold(QPoly::one(), |acc, i| acc.mul(&cyclotomic_poly(i)))
}

/// A product of binomials `x^n - 1` divided by another such product.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BinomialQuotient {
    pub numerator: Vec<u64>,
    pub denominator: Vec<u64>,
}

impl BinomialQuotient {
    /// Inclusion-exclusion over the subsets `S` of `A`: the binomial
    /// `x^{gcd(S)} - 1` goes upstairs for odd `|S|` and downstairs for even.
    pub fn for_antichain(a: &Antichain) -> Self {
        let elems: Vec<u64> = a.0.iter().copied().collect();
        let mut out = BinomialQuotient::default();
        for mask in 1u64..(1 << elems.len()) {
            let g = elems.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(0, |acc, (_, &e)| gcd(acc, e));
            if mask.count_ones() % 2 == 1 {
                out.numerator.push(g);
            } else {
                out.denominator.push(g);
            }
        }
        out.cancel();
        out
    }

    fn cancel(&mut self) {
        self.numerator.sort_unstable_by(|a, b| b.cmp(a));
        self.denominator.sort_unstable_by(|a, b| b.cmp(a));
        let mut num = Vec::new();
        let mut den = std::mem::take(&mut self.denominator);
        for n in self.numerator.drain(..) {
            if let Some(pos) = den.iter().position(|&d| d == n) {
                den.remove(pos);
            } else {
                num.push(n);
            }
        }
        self.numerator = num;
        self.denominator = den;
    }

    pub fn pow(&self, e: u32) -> Self {
        let rep = |v: &Vec<u64>| v.iter().flat_map(|&n| std::iter::repeat_n(n, e as usize)).collect();
        BinomialQuotient { numerator: rep(&self.numerator), denominator: rep(&self.denominator) }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BinomialQuotient {
            numerator: [self.numerator.clone(), other.numerator.clone()].concat(),
            denominator: [self.denominator.clone(), other.denominator.clone()].concat(),
        };
        out.cancel();
        out
    }

    /// Performs the division; fails if it is not exact.
    pub fn evaluate(&self) -> Result<QPoly> {
        let prod = |v: &[u64]| v.iter().fold(QPoly::one(), |acc, &n| acc.mul(&QPoly::x_pow_minus_one(n as usize)));
        prod(&self.numerator)
            .exact_div(&prod(&self.denominator))?
            .ok_or_else(|| Error::InvalidArgument("binomial quotient is not a polynomial".into()))
    }
}

impl fmt::Display for BinomialQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |v: &[u64]| -> String {
            if v.is_empty() {
                return "1".into();
            }
            let mut grouped: Vec<(u64, usize)> = Vec::new();
            for &n in v {
                match grouped.last_mut() {
                    Some((m, c)) if *m == n => *c += 1,
                    _ => grouped.push((n, 1)),
                }
            }
            grouped
                .into_iter()
                .map(|(n, c)| {
                    let b = if n == 1 { "(x - 1)".to_string() } else { format!("(x^{n} - 1)") };
                    if c == 1 {
                        b
                    } else {
                        format!("{b}^{c}")
                    }
                })
                .collect::<Vec<_>>()
                .join("*")
        };
        if self.denominator.is_empty() {
            write!(f, "{}", side(&self.numerator))
        } else {
            write!(f, "{} / ({})", side(&self.numerator), side(&self.denominator))
        }
    }
}

/// `f = unit * x^v * prod psi_{A_i}^{e_i}` with strictly shrinking downsets
/// `D(A_1) ⊋ D(A_2) ⊋ ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiDecomposition {
    pub unit: Rational,
    pub x_valuation: usize,
    pub factors: Vec<(Antichain, u32)>,
}

impl PsiDecomposition {
    pub fn reconstruct(&self) -> Result<QPoly> {
        let mut f = QPoly::constant(self.unit.clone());
        for (a, e) in &self.factors {
            f = f.mul(&psi_poly(a)?.pow(*e));
        }
        Ok(f.shift_up(self.x_valuation))
    }

    /// The psi factors written as one quotient of binomials; unit and `x^v`
    /// are not included.
    pub fn binomial_quotient(&self) -> BinomialQuotient {
        self.factors
            .iter()
            .fold(BinomialQuotient::default(), |acc, (a, e)| acc.mul(&BinomialQuotient::for_antichain(a).pow(*e)))
    }
}

impl fmt::Display for PsiDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.unit.is_one() {
            parts.push(self.unit.to_string());
        }
        if self.x_valuation > 0 {
            parts.push(format!("x^{}", self.x_valuation));
        }
        for (a, e) in &self.factors {
            let base = format!("psi{a}");
            parts.push(if *e == 1 { base } else { format!("{base}^{e}") });
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        write!(f, "{}", parts.join(" * "))
    }
}

/// Nested psi-decomposition of a powered polynomial.
pub fn psi_decompose(f: &QPoly) -> Result<PsiDecomposition> {
    let fac = factor_cyclotomic(f)?;
    if !exponents_are_powered(&fac) {
        return Err(Error::NotPowered);
    }
    let levels: BTreeSet<u32> = fac.exponents.values().copied().collect();
    let mut factors = Vec::new();
    let mut prev = 0;
    for alpha in levels {
        let support: BTreeSet<u64> = fac.exponents.iter().filter(|(_, &k)| k >= alpha).map(|(&n, _)| n).collect();
        factors.push((Antichain::maximal_of(&support), alpha - prev));
        prev = alpha;
    }
    Ok(PsiDecomposition { unit: fac.unit, x_valuation: fac.x_valuation, factors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phis(exps: &[(u64, u32)]) -> QPoly {
        cyclotomic_product(&exps.iter().copied().collect())
    }

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    fn ac(v: &[u64]) -> Antichain {
        Antichain::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn powered_verdicts() {
        let f = phis(&[(12, 2), (8, 2), (6, 2), (4, 3), (3, 2), (2, 3), (1, 4)]);
        let g = phis(&[(12, 2), (8, 3), (6, 2), (4, 2), (3, 2), (2, 3), (1, 4)]);
        assert!(is_powered(&f).unwrap());
        assert!(!is_powered(&g).unwrap());
        assert!(!is_powered(&p(&[-2, 1])).unwrap());
        assert!(is_powered(&p(&[0, 0, 0, 5])).unwrap());
        assert_eq!(is_powered(&QPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn star_examples() {
        let f = phis(&[(12, 6), (8, 3), (6, 5), (4, 4), (3, 2), (2, 3), (1, 4)]);
        let want = phis(&[(12, 2), (8, 3), (6, 2), (4, 3), (3, 2), (2, 3), (1, 4)]);
        assert_eq!(star(&f).unwrap(), want);
        assert_eq!(star_via_gcd(&f).unwrap(), want);
        assert_eq!(star(&p(&[-2, 1])).unwrap(), QPoly::one());
        assert_eq!(star(&p(&[0, 0, 0, 1])).unwrap(), p(&[0, 0, 0, 1]));
    }

    #[test]
    fn circle_examples() {
        let f = phis(&[(12, 6), (8, 3), (6, 5), (4, 4), (3, 2), (2, 3), (1, 4)]);
        let want = phis(&[(12, 6), (8, 3), (6, 6), (4, 6), (3, 6), (2, 6), (1, 6)]);
        assert_eq!(circle(&f).unwrap(), PowerInterior::Generator(want));
        assert_eq!(circle(&p(&[-2, 1])).unwrap(), PowerInterior::Zero);
        assert_eq!(circle(&p(&[1, 1])).unwrap(), PowerInterior::Generator(p(&[-1, 0, 1])));
        assert_eq!(PowerInterior::Zero.to_string(), "(0)");
    }

    #[test]
    fn psi_polys() {
        assert_eq!(psi_poly(&ac(&[1])).unwrap(), p(&[-1, 1]));
        let a23 = (&QPoly::x_pow_minus_one(2) * &QPoly::x_pow_minus_one(3)).exact_div(&p(&[-1, 1])).unwrap().unwrap();
        assert_eq!(psi_poly(&ac(&[2, 3])).unwrap(), a23);
        let a128 = (&QPoly::x_pow_minus_one(12) * &QPoly::x_pow_minus_one(8))
            .exact_div(&QPoly::x_pow_minus_one(4))
            .unwrap()
            .unwrap();
        assert_eq!(psi_poly(&ac(&[12, 8])).unwrap(), a128);
        assert_eq!(BinomialQuotient::for_antichain(&ac(&[12, 8])).evaluate().unwrap(), a128);
        assert_eq!(BinomialQuotient::for_antichain(&ac(&[12, 8])).to_string(), "(x^12 - 1)*(x^8 - 1) / ((x^4 - 1))");
        assert!(psi_poly(&Antichain::new([]).unwrap()).is_err());
    }

    #[test]
    fn antichain_validation() {
        assert!(Antichain::new([2, 4]).is_err());
        assert!(Antichain::new([0]).is_err());
        assert!(ac(&[4]).precedes(&ac(&[12, 8])));
        assert!(!ac(&[12, 8]).precedes(&ac(&[4])));
        assert_eq!(ac(&[12, 8]).downset(), BTreeSet::from([1, 2, 3, 4, 6, 8, 12]));
    }

    #[test]
    fn decompositions() {
        let f = phis(&[(12, 2), (8, 2), (6, 2), (4, 3), (3, 2), (2, 3), (1, 4)]);
        let d = psi_decompose(&f).unwrap();
        assert_eq!(d.factors, vec![(ac(&[12, 8]), 2), (ac(&[4]), 1), (ac(&[1]), 1)]);
        assert_eq!(d.reconstruct().unwrap(), f);
        assert_eq!(d.binomial_quotient().evaluate().unwrap(), f);
        assert_eq!(d.binomial_quotient().to_string(), "(x^12 - 1)^2*(x^8 - 1)^2*(x - 1) / ((x^4 - 1))");

        let d = psi_decompose(&p(&[-1, 1])).unwrap();
        assert_eq!(d.factors, vec![(ac(&[1]), 1)]);

        let g = &p(&[-1, 0, 1]).pow(2) * &p(&[-1, 1]);
        let d = psi_decompose(&g).unwrap();
        assert_eq!(d.factors, vec![(ac(&[2]), 2), (ac(&[1]), 1)]);

        assert_eq!(psi_decompose(&p(&[-2, 1])), Err(Error::NotPowered));
    }

    #[test]
    fn downset_bounds() {
        let f = phis(&[(1, 1), (2, 1), (4, 1), (3, 1)]);
        assert_eq!(downset_bound(&f, BoundMode::Star).unwrap(), BTreeSet::from([1, 2, 3, 4]));
        assert_eq!(downset_bound(&phis(&[(8, 1)]), BoundMode::Circle).unwrap(), BTreeSet::from([1, 2, 4, 8]));
        assert!(downset_bound(&p(&[-2, 1]), BoundMode::Star).unwrap().is_empty());
    }

    #[test]
    fn strictness_witnesses() {
        let f = phis(&[(4, 2), (2, 1), (1, 2)]);
        let g = phis(&[(2, 2), (1, 1)]);
        let l = f.lcm(&g).unwrap();
        assert_eq!(star(&l).unwrap(), l);
        let ls = star(&f).unwrap().lcm(&star(&g).unwrap()).unwrap();
        assert_eq!(ls, phis(&[(4, 1), (2, 1), (1, 2)]));
        assert_ne!(star(&l).unwrap(), ls);

        let gg = f.gcd(&g).unwrap();
        assert_eq!(circle(&gg).unwrap(), PowerInterior::Generator(gg.clone()));
        let cf = circle(&f).unwrap().generator().unwrap().clone();
        let cg = circle(&g).unwrap().generator().unwrap().clone();
        assert_eq!(cf.gcd(&cg).unwrap(), phis(&[(2, 2), (1, 2)]));
        assert_ne!(cf.gcd(&cg).unwrap(), gg);
    }

    #[test]
    fn psi_product_identities() {
        // four products over the antichain {4, 6, 9}
        let s = |v: &[u64]| psi_of_set(&v.iter().copied().collect());
        let (a, b, c) = (4u64, 6u64, 9u64);
        let p1 = s(&[a, b]).mul(&s(&[c])).mul(&s(&[gcd(a, b)]));
        let p2 = s(&[a, c]).mul(&s(&[b])).mul(&s(&[gcd(a, c)]));
        let p3 = s(&[b, c]).mul(&s(&[a])).mul(&s(&[gcd(b, c)]));
        let p4 = s(&[a, b, c]).mul(&s(&[gcd(a, b), gcd(a, c), gcd(b, c)])).mul(&s(&[gcd(gcd(a, b), c)]));
        assert_eq!(p1, p2);
        assert_eq!(p2, p3);
        assert_eq!(p3, p4);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn cyclotomic_input() -> impl Strategy<Value = QPoly> {
            (
                prop::collection::vec((1u64..=24, 1u32..=4), 0..4),
                prop::sample::select(vec![vec![1i64], vec![-2, 1], vec![3, 0, 1], vec![1, 2]]),
                0usize..2,
            )
                .prop_map(|(factors, extra, v)| {
                    factors.into_iter().fold(p(&extra).shift_up(v), |acc, (n, k)| acc.mul(&cyclotomic_poly(n).pow(k)))
                })
        }

        fn powered_input() -> impl Strategy<Value = QPoly> {
            cyclotomic_input().prop_map(|f| star(&f).unwrap())
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(40))]

            #[test]
            fn star_matches_gcd_oracle(f in cyclotomic_input()) {
                prop_assert_eq!(star(&f).unwrap(), star_via_gcd(&f).unwrap());
            }

            #[test]
            fn powered_iff_own_star(f in cyclotomic_input()) {
                prop_assert_eq!(is_powered(&f).unwrap(), star(&f).unwrap() == f.monic());
            }

            #[test]
            fn powered_divides_substitutions(f in powered_input()) {
                prop_assert!(is_powered(&f).unwrap());
                for i in 1..=30 {
                    prop_assert!(f.divides(&f.power_substitute(i).unwrap()).unwrap());
                }
            }

            #[test]
            fn circle_is_minimal(f in cyclotomic_input()) {
                if let PowerInterior::Generator(c) = circle(&f).unwrap() {
                    prop_assert!(f.divides(&c).unwrap());
                    prop_assert!(is_powered(&c).unwrap());
                    for n in factor_cyclotomic(&c).unwrap().exponents.keys() {
                        let smaller = c.exact_div(&cyclotomic_poly(*n)).unwrap().unwrap();
                        prop_assert!(!is_powered(&smaller).unwrap() || !f.divides(&smaller).unwrap());
                    }
                } else {
                    prop_assert!(!factor_cyclotomic(&f).unwrap().has_constant_residual());
                }
            }

            #[test]
            fn lattice_operations_stay_powered(f in powered_input(), g in powered_input()) {
                prop_assert!(is_powered(&f.lcm(&g).unwrap()).unwrap());
                prop_assert!(is_powered(&f.gcd(&g).unwrap()).unwrap());
            }

            #[test]
            fn gcd_commutes_with_star(f in cyclotomic_input(), g in cyclotomic_input()) {
                let lhs = star(&f.gcd(&g).unwrap()).unwrap();
                let rhs = star(&f).unwrap().gcd(&star(&g).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn compositions(f in cyclotomic_input()) {
                let s = star(&f).unwrap();
                prop_assert_eq!(star(&s).unwrap(), s.clone());
                prop_assert_eq!(circle(&s).unwrap(), PowerInterior::Generator(s));
                if let PowerInterior::Generator(c) = circle(&f).unwrap() {
                    prop_assert_eq!(circle(&c).unwrap(), PowerInterior::Generator(c.clone()));
                    prop_assert_eq!(star(&c).unwrap(), c);
                }
            }

            #[test]
            fn decomposition_reconstructs(f in powered_input()) {
                let d = psi_decompose(&f).unwrap();
                prop_assert_eq!(d.reconstruct().unwrap(), f.clone());
                prop_assert_eq!(d.binomial_quotient().evaluate().unwrap().shift_up(d.x_valuation).scale(&d.unit), f);
                for w in d.factors.windows(2) {
                    prop_assert!(w[1].0.precedes(&w[0].0) && w[0].0 != w[1].0);
                }
            }

            #[test]
            fn inclusion_exclusion_matches_lcm(elems in prop::collection::btree_set(1u64..=30, 1..=3)) {
                let a = Antichain::maximal_of(&elems);
                prop_assert_eq!(BinomialQuotient::for_antichain(&a).evaluate().unwrap(), psi_poly(&a).unwrap());
                prop_assert_eq!(psi_of_set(&elems), psi_poly(&a).unwrap());
            }
        }
    }
}
