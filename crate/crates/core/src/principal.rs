//! Principal power-closed ideals.
//!
//! A principal ideal `(f)` is power-closed exactly when, after grouping the
//! linear factors `xi - rho` by their primitive Laurent monomial `xi`, every
//! group `prod (x - rho)` is a powered univariate polynomial. The input is
//! taken in factored form; roots of unity are kept as `(order, index)` so
//! no cyclotomic field arithmetic is needed.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::arith::{gcd, gcd_i64};
use crate::cyclotomic::{cyclotomic_product, QPoly};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::ideal::{Ideal, RingMode};
use crate::multipoly::{Monomial, MultiPoly, TermOrder};
use crate::powerpoly::is_powered;
use crate::unipoly::UniPoly;

/// Disjoint supports and coprime coordinates.
pub fn is_primitive_pair(p: &[i64], q: &[i64]) -> Result<bool> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch(p.len(), q.len()));
    }
    let disjoint = p.iter().zip(q).all(|(&a, &b)| a == 0 || b == 0);
    let g = p.iter().chain(q).fold(0, |acc, &x| gcd_i64(acc, x));
    Ok(disjoint && g == 1)
}

/// A root `rho` of a factor `xi - rho`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Root {
    /// `exp(2 pi i * index / order)` with `gcd(index, order) = 1` (or `order = 1`).
    Unity { order: u64, index: u64 },
    /// A field element that is not a root of unity.
    Scalar(#[serde(serialize_with = "display_string")] FieldElement),
}

fn display_string<S: serde::Serializer, T: fmt::Display>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl Root {
    pub fn unity(order: u64, index: u64) -> Result<Root> {
        if order == 0 {
            return Err(Error::InvalidArgument("root of unity order must be positive".into()));
        }
        let k = index % order;
        let g = gcd(order, k);
        Ok(Root::Unity { order: order / g, index: k / g })
    }

    /// Roots of unity inside the field are recognised and stored symbolically.
    pub fn scalar(c: FieldElement) -> Root {
        match c.as_root_of_unity() {
            Some((n, k)) => Root::unity(n as u64, k as u64).expect("positive order"),
            None => Root::Scalar(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Root::Scalar(c) if c.is_zero())
    }

    pub fn inverse(&self) -> Result<Root> {
        match self {
            Root::Unity { order, index } => Root::unity(*order, order - index),
            Root::Scalar(c) => Ok(Root::Scalar(c.inv().ok_or(Error::DivisionByZero)?)),
        }
    }

    /// `-rho`.
    pub fn negated(&self) -> Root {
        match self {
            Root::Unity { order, index } => Root::unity(2 * order, 2 * index + order).expect("positive order"),
            Root::Scalar(c) => Root::scalar(c.neg()),
        }
    }

    /// All `h`-th roots, if they can be represented.
    pub fn roots(&self, h: u64) -> Result<Vec<Root>> {
        if h == 1 {
            return Ok(vec![self.clone()]);
        }
        match self {
            Root::Unity { order, index } => (0..h).map(|j| Root::unity(order * h, index + order * j)).collect(),
            Root::Scalar(c) if c.is_zero() => Ok(vec![self.clone(); h as usize]),
            Root::Scalar(c) => Err(Error::InvalidArgument(format!("the {h}-th roots of {c} are not representable"))),
        }
    }

    /// The value as a field element with radicand `m`, when it lies there.
    pub fn in_field(&self, radicand: Option<i64>) -> Option<FieldElement> {
        let half = || crate::field::Rational::new(1, 2).expect("nonzero");
        match self {
            Root::Scalar(c) => Some(c.clone()),
            Root::Unity { order: 1, .. } => Some(FieldElement::one()),
            Root::Unity { order: 2, .. } => Some(FieldElement::integer(-1)),
            Root::Unity { order: 4, index } if radicand == Some(-1) => {
                let i = FieldElement::sqrt(-1).ok()?;
                Some(if *index == 1 { i } else { i.neg() })
            }
            Root::Unity { order: 3 | 6, index } if radicand == Some(-3) => {
                let (re, im) = match (self, index) {
                    (Root::Unity { order: 6, .. }, 1) => (half(), half()),
                    (Root::Unity { order: 3, .. }, 1) => (half().neg(), half()),
                    (Root::Unity { order: 3, .. }, _) => (half().neg(), half().neg()),
                    _ => (half(), half().neg()),
                };
                FieldElement::quadratic(re, im, -3).ok()
            }
            _ => None,
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Root::Unity { order, index } => write!(f, "zeta({order},{index})"),
            Root::Scalar(c) => write!(f, "{c}"),
        }
    }
}

/// `(xi - rho)^multiplicity` with `xi` a Laurent monomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    #[serde(serialize_with = "monomial_exps")]
    pub xi: Monomial,
    pub rho: Root,
    pub multiplicity: u32,
}

fn monomial_exps<S: serde::Serializer>(m: &Monomial, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(m.nvars()))?;
    for e in m.exps() {
        seq.serialize_element(e)?;
    }
    seq.end()
}

/// `scalar * monomial * prod (x^{q_j} - rho_j x^{p_j})^{m_j}` where
/// `xi_j = x^{q_j} / x^{p_j}` in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredPrincipal {
    pub nvars: usize,
    pub scalar: FieldElement,
    pub monomial: Monomial,
    pub factors: Vec<Factor>,
}

impl FactoredPrincipal {
    pub fn new(nvars: usize, scalar: FieldElement, monomial: Monomial, factors: Vec<Factor>) -> Result<Self> {
        if scalar.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if monomial.nvars() != nvars {
            return Err(Error::LengthMismatch(monomial.nvars(), nvars));
        }
        for f in &factors {
            if f.xi.nvars() != nvars {
                return Err(Error::LengthMismatch(f.xi.nvars(), nvars));
            }
            if f.xi.is_one() {
                return Err(Error::InvalidArgument("factor has a constant monomial".into()));
            }
        }
        Ok(FactoredPrincipal { nvars, scalar, monomial, factors })
    }

    /// The generator times the denominator of its monomial prefix: the
    /// polynomial-ring reading of a factored Laurent expression such as
    /// `x/y - 1`, which becomes `x - y`.
    pub fn numerator(&self) -> Self {
        let (plus, _) = self.monomial.split_signs();
        FactoredPrincipal { monomial: plus, ..self.clone() }
    }
}

/// `x^{c} * prod_j (x^{q} - rho_j x^{p})`: the splitting of a binomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialFactorization {
    pub scalar: FieldElement,
    pub content: Monomial,
    /// Primitive pair `(p, q)` with `x^q` the larger monomial.
    pub p: Monomial,
    pub q: Monomial,
    pub h: u64,
    pub roots: Vec<Root>,
}

fn two_terms(b: &MultiPoly) -> Result<[(Monomial, FieldElement); 2]> {
    let terms: Vec<_> = b.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    <[_; 2]>::try_from(terms).map_err(|v| Error::NotBinomial(format!("{} terms", v.len())))
}

fn exps_gcd(m: &Monomial) -> u64 {
    m.exps().iter().fold(0, |acc, &e| gcd_i64(acc, e as i64)) as u64
}

/// Splits `c1 x^a + c2 x^b` into linear factors in a primitive monomial ratio.
pub fn binomial_factor(b: &MultiPoly, order: &TermOrder) -> Result<BinomialFactorization> {
    let [(a, ca), (bm, cb)] = two_terms(b)?;
    let ((q, cq), (p, cp)) = if order.cmp(&a, &bm).is_gt() { ((a, ca), (bm, cb)) } else { ((bm, cb), (a, ca)) };
    let content = q.gcd(&p);
    let (q1, p1) = (q.div(&content), p.div(&content));
    let h = exps_gcd(&q1.div(&p1));
    let shrink = |m: &Monomial| Monomial::new(m.exps().iter().map(|&e| e / h as i32));
    let (q2, p2) = (shrink(&q1), shrink(&p1));
    let rho0 = Root::scalar(cp.neg().div(&cq).ok_or(Error::DivisionByZero)?);
    Ok(BinomialFactorization { scalar: cq, content, p: p2, q: q2, h, roots: rho0.roots(h)? })
}

/// Irreducible iff the exponent difference is primitive (over C).
pub fn binomial_irreducible(b: &MultiPoly) -> Result<bool> {
    let [(a, _), (bm, _)] = two_terms(b)?;
    let content = a.gcd(&bm);
    Ok(exps_gcd(&a.div(&content).div(&bm.div(&content))) == 1)
}

/// `(xi - c)` and `(xi' - c')` generate the same Laurent ideal iff
/// `(xi', c') = (xi, c)` or `(xi^{-1}, c^{-1})`.
pub fn associates(a: (&Monomial, &Root), b: (&Monomial, &Root)) -> Result<bool> {
    if a.0 == b.0 && a.1 == b.1 {
        return Ok(true);
    }
    if a.1.is_zero() || b.1.is_zero() {
        return Ok(false);
    }
    Ok(a.0.inverse() == *b.0 && a.1.inverse()? == *b.1)
}

/// Per-`xi` summary of the classifier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupSummary {
    #[serde(serialize_with = "monomial_exps")]
    pub xi: Monomial,
    /// Multiplicity of `phi_n` in the group polynomial, when it is defined over Q.
    pub cyclotomic_exponents: Option<BTreeMap<u64, u32>>,
    pub powered: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub power_closed: bool,
    pub witness: Option<String>,
    pub groups: Vec<GroupSummary>,
}

/// A linear factor in oriented, primitive form.
#[derive(Clone, Debug)]
struct Linear {
    xi: Monomial,
    rho: Root,
    mult: u32,
}

/// Splits every factor into primitive linear pieces and orients each so
/// that its monomial ratio is positive for `order`. Zero roots become part
/// of the monomial; the returned monomial is the accumulated prefix.
fn normalize(f: &FactoredPrincipal, order: &TermOrder) -> Result<(Monomial, Vec<Linear>)> {
    let mut monomial = f.monomial.clone();
    let mut out = Vec::new();
    for fac in &f.factors {
        if fac.rho.is_zero() {
            monomial = monomial.mul(&fac.xi.scale(fac.multiplicity as i32));
            continue;
        }
        let h = exps_gcd(&fac.xi);
        let base = Monomial::new(fac.xi.exps().iter().map(|&e| e / h as i32));
        // An h-th root of a non-root of unity is again not a root of unity,
        // which is all the classifier needs to know about it.
        let pieces = match &fac.rho {
            Root::Scalar(_) if h > 1 => vec![fac.rho.clone()],
            rho => rho.roots(h)?,
        };
        for rho in pieces {
            let (plus, minus) = base.split_signs();
            let (xi, rho) =
                if order.cmp(&plus, &minus).is_gt() { (base.clone(), rho) } else { (base.inverse(), rho.inverse()?) };
            out.push(Linear { xi, rho, mult: fac.multiplicity });
        }
    }
    Ok((monomial, out))
}

/// Decides whether `(f)` is power-closed. The verdict is the same in the
/// polynomial and Laurent rings once `f` is a polynomial; in the polynomial
/// ring the monomial prefix must have nonnegative exponents.
pub fn classify_principal(f: &FactoredPrincipal, mode: RingMode, order: &TermOrder) -> Result<Verdict> {
    classify_principal_named(f, mode, order, &crate::multipoly::default_names(f.nvars))
}

/// [`classify_principal`] with witnesses written in the given variable names.
pub fn classify_principal_named(
    f: &FactoredPrincipal,
    mode: RingMode,
    order: &TermOrder,
    names: &[String],
) -> Result<Verdict> {
    if names.len() != f.nvars {
        return Err(Error::LengthMismatch(names.len(), f.nvars));
    }
    let (monomial, linears) = normalize(f, order)?;
    if mode == RingMode::Polynomial && !monomial.is_polynomial() {
        return Err(Error::RingMismatch("monomial prefix has negative exponents".into()));
    }
    let mut groups: BTreeMap<Monomial, BTreeMap<Root, u32>> = BTreeMap::new();
    for l in &linears {
        *groups.entry(l.xi.clone()).or_default().entry(l.rho.clone()).or_insert(0) += l.mult;
    }
    let mut witness = None;
    let mut summaries = Vec::new();
    for (xi, roots) in &groups {
        let (exps, problem) = group_exponents(roots);
        let powered = match (&exps, &problem) {
            (Some(e), None) => is_powered(&cyclotomic_product(e))?,
            _ => false,
        };
        if !powered && witness.is_none() {
            let (plus, minus) = xi.split_signs();
            let ratio = if minus.is_one() {
                plus.fmt_with(names)
            } else {
                format!("{}/{}", plus.fmt_with(names), minus.fmt_with(names))
            };
            witness = Some(match problem {
                Some(p) => format!("group {ratio}: {p}"),
                None => format!(
                    "group {ratio}: polynomial {} is not powered",
                    describe_exponents(exps.as_ref().expect("set"))
                ),
            });
        }
        summaries.push(GroupSummary { xi: xi.clone(), cyclotomic_exponents: exps, powered });
    }
    Ok(Verdict { power_closed: witness.is_none(), witness, groups: summaries })
}

fn describe_exponents(e: &BTreeMap<u64, u32>) -> String {
    if e.is_empty() {
        return "1".into();
    }
    e.iter().rev().map(|(n, k)| format!("phi_{n}^{k}")).collect::<Vec<_>>().join("*")
}

/// Cyclotomic exponents of `prod (x - rho)^m`, or the reason it is not powered.
fn group_exponents(roots: &BTreeMap<Root, u32>) -> (Option<BTreeMap<u64, u32>>, Option<String>) {
    let mut by_order: BTreeMap<u64, BTreeMap<u64, u32>> = BTreeMap::new();
    for (rho, &m) in roots {
        match rho {
            Root::Scalar(c) => return (None, Some(format!("root {c} is not a root of unity"))),
            Root::Unity { order, index } => {
                by_order.entry(*order).or_default().insert(*index, m);
            }
        }
    }
    let mut exps = BTreeMap::new();
    for (n, idx) in by_order {
        let primitive: Vec<u64> = (0..n).filter(|&k| gcd(k, n) == 1).collect();
        let first = idx.get(&primitive[0]).copied().unwrap_or(0);
        if primitive.iter().any(|k| idx.get(k).copied().unwrap_or(0) != first) {
            return (None, Some(format!("primitive {n}-th roots of unity occur with different multiplicities")));
        }
        exps.insert(n, first);
    }
    (Some(exps), None)
}

/// The polynomial `scalar * monomial * prod (x^{q} - rho x^{p})^m` where
/// `xi = x^q / x^p`. Roots must lie in the coefficient field unless a whole
/// Galois orbit appears with equal multiplicity.
pub fn expand(f: &FactoredPrincipal) -> Result<MultiPoly> {
    let n = f.nvars;
    let mut radicand = f.scalar.radicand();
    for fac in &f.factors {
        if let Root::Scalar(c) = &fac.rho {
            if let Some(m) = c.radicand() {
                if radicand.is_some_and(|r| r != m) {
                    return Err(Error::MixedRadicand(radicand.expect("checked"), m));
                }
                radicand = Some(m);
            }
        }
    }
    let mut out = MultiPoly::monomial(n, f.monomial.clone(), f.scalar.clone());
    // collect roots per xi so full orbits can be expanded over Q
    let mut by_xi: BTreeMap<Monomial, BTreeMap<Root, u32>> = BTreeMap::new();
    for fac in &f.factors {
        *by_xi.entry(fac.xi.clone()).or_default().entry(fac.rho.clone()).or_insert(0) += fac.multiplicity;
    }
    for (xi, mut roots) in by_xi {
        let mut uni: UniPoly<FieldElement> = UniPoly::one();
        let mut orders: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for r in roots.keys() {
            if let Root::Unity { order, index } = r {
                orders.entry(*order).or_default().push(*index);
            }
        }
        for (ord, _) in orders {
            let primitive: Vec<u64> = (0..ord).filter(|&k| gcd(k, ord) == 1).collect();
            let full = primitive
                .iter()
                .map(|&k| roots.get(&Root::Unity { order: ord, index: k }).copied().unwrap_or(0))
                .min()
                .unwrap_or(0);
            if full > 0 {
                for &k in &primitive {
                    let e = roots.get_mut(&Root::Unity { order: ord, index: k }).expect("present");
                    *e -= full;
                }
                let phi = cyclotomic_product(&BTreeMap::from([(ord, full)]));
                uni = uni.mul(&phi.map_coeffs(|c: &crate::field::Rational| FieldElement::rational(c.clone())));
            }
        }
        for (r, m) in roots {
            if m == 0 {
                continue;
            }
            let v = r
                .in_field(radicand)
                .ok_or_else(|| Error::InvalidArgument(format!("root {r} is not in the coefficient field")))?;
            let lin = UniPoly::from_coeffs(vec![v.neg(), FieldElement::one()]);
            uni = uni.mul(&lin.pow(m));
        }
        out = out.mul(&homogenize(&uni, &xi, n));
    }
    Ok(out)
}

/// `g(x^q / x^p) * x^{p * deg g}` for `xi = x^q / x^p`.
fn homogenize(g: &UniPoly<FieldElement>, xi: &Monomial, n: usize) -> MultiPoly {
    let (q, p) = xi.split_signs();
    let deg = g.degree().unwrap_or(0) as i32;
    MultiPoly::from_terms(
        n,
        g.coeffs().iter().enumerate().map(|(j, c)| (q.scale(j as i32).mul(&p.scale(deg - j as i32)), c.clone())),
    )
}

/// Rational cyclotomic group polynomials, used by callers building inputs.
pub fn group_polynomial(exponents: &BTreeMap<u64, u32>) -> QPoly {
    cyclotomic_product(exponents)
}

/// `prod_{i<k} (x^{p_k} - x^{p_i})` over the monomials of `f`.
pub fn monomial_difference_product(f: &MultiPoly) -> MultiPoly {
    let monos: Vec<Monomial> = f.terms().map(|(m, _)| m.clone()).collect();
    let n = f.nvars();
    let mut out = MultiPoly::one(n);
    for k in 0..monos.len() {
        for i in 0..k {
            let d = MultiPoly::monomial(n, monos[k].clone(), FieldElement::one()).sub(&MultiPoly::monomial(
                n,
                monos[i].clone(),
                FieldElement::one(),
            ));
            out = out.mul(&d);
        }
    }
    out
}

/// Whether `f` divides `prod_{i<k} (x^{p_k} - x^{p_i})` in the Laurent ring.
pub fn divides_monomial_differences(f: &MultiPoly) -> Result<bool> {
    let ideal = Ideal::laurent(f.nvars(), vec![f.clone()])?;
    ideal.contains(&monomial_difference_product(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[i32]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    fn p(n: usize, t: &[(i64, &[i32])]) -> MultiPoly {
        MultiPoly::from_int_terms(n, t)
    }

    fn fac(xi: &[i32], rho: Root, m: u32) -> Factor {
        Factor { xi: mono(xi), rho, multiplicity: m }
    }

    fn principal(n: usize, factors: Vec<Factor>) -> FactoredPrincipal {
        FactoredPrincipal::new(n, FieldElement::one(), Monomial::one(n), factors).unwrap()
    }

    fn unity(n: u64, k: u64) -> Root {
        Root::unity(n, k).unwrap()
    }

    #[test]
    fn primitive_pairs() {
        assert!(is_primitive_pair(&[2, 0, 0], &[0, 3, 1]).unwrap());
        assert!(!is_primitive_pair(&[2, 0], &[0, 2]).unwrap());
        assert!(!is_primitive_pair(&[1, 0], &[1, 0]).unwrap());
        assert!(is_primitive_pair(&[1], &[1, 0]).is_err());
    }

    #[test]
    fn irreducibility() {
        assert!(binomial_irreducible(&p(3, &[(1, &[2, 1, 0]), (-1, &[0, 0, 3])])).unwrap());
        assert!(!binomial_irreducible(&p(2, &[(1, &[2, 0]), (-1, &[0, 2])])).unwrap());
        assert!(binomial_irreducible(&p(2, &[(1, &[1, 0]), (-1, &[0, 1])])).unwrap());
        assert!(binomial_irreducible(&p(2, &[(1, &[1, 0])])).is_err());
    }

    #[test]
    fn binomial_splitting() {
        let ord = TermOrder::deglex(2);
        let f = binomial_factor(&p(2, &[(1, &[2, 0]), (-1, &[0, 2])]), &ord).unwrap();
        assert_eq!(f.h, 2);
        assert_eq!(f.content, Monomial::one(2));
        assert_eq!((f.q.clone(), f.p.clone()), (mono(&[0, 1]), mono(&[1, 0])));
        assert_eq!(f.roots, vec![unity(1, 0), unity(2, 1)]);

        let g = binomial_factor(&p(2, &[(1, &[3, 1]), (-1, &[1, 3])]), &ord).unwrap();
        assert_eq!(g.content, mono(&[1, 1]));
        assert_eq!(g.h, 2);

        let l = binomial_factor(&p(2, &[(1, &[1, 0]), (-1, &[0, 1])]), &ord).unwrap();
        assert_eq!(l.h, 1);
        assert_eq!(l.roots, vec![unity(1, 0)]);
    }

    #[test]
    fn associate_factors() {
        let two = Root::scalar(FieldElement::integer(2));
        let half = Root::scalar(FieldElement::rational(crate::field::Rational::new(1, 2).unwrap()));
        let three = Root::scalar(FieldElement::integer(3));
        let xy = mono(&[1, -1]);
        assert!(associates((&xy, &two), (&xy.inverse(), &half)).unwrap());
        assert!(!associates((&xy, &two), (&xy, &three)).unwrap());
        assert!(associates((&xy, &two), (&xy, &two)).unwrap());
        assert!(associates((&xy, &unity(4, 1)), (&xy.inverse(), &unity(4, 3))).unwrap());
    }

    #[test]
    fn classifier_examples() {
        let ord = TermOrder::deglex(2);
        let f = principal(2, vec![fac(&[1, -1], unity(1, 0), 1), fac(&[1, -1], unity(2, 1), 1)]);
        assert!(classify_principal(&f, RingMode::Laurent, &ord).unwrap().power_closed);

        let g = principal(2, vec![fac(&[1, -1], Root::scalar(FieldElement::integer(2)), 1)]);
        let v = classify_principal(&g, RingMode::Polynomial, &ord).unwrap();
        assert!(!v.power_closed);
        assert!(v.witness.unwrap().contains("not a root of unity"));

        let h =
            FactoredPrincipal::new(2, FieldElement::one(), mono(&[1, 0]), vec![fac(&[1, -1], unity(1, 0), 1)]).unwrap();
        assert!(classify_principal(&h, RingMode::Polynomial, &ord).unwrap().power_closed);

        // (x/y + 1) alone: phi_2 without phi_1
        let k = principal(2, vec![fac(&[1, -1], unity(2, 1), 1)]);
        assert!(!classify_principal(&k, RingMode::Laurent, &ord).unwrap().power_closed);

        // a single primitive fourth root: the conjugate is missing
        let i = principal(1, vec![fac(&[1], unity(4, 1), 1), fac(&[1], unity(2, 1), 1), fac(&[1], unity(1, 0), 1)]);
        let v = classify_principal(&i, RingMode::Polynomial, &TermOrder::deglex(1)).unwrap();
        assert!(!v.power_closed);
        assert!(v.witness.unwrap().contains("different multiplicities"));
    }

    #[test]
    fn orientation_merges_inverse_factors() {
        let ord = TermOrder::deglex(2);
        // (x/y - 1)(y/x + 1) groups into x - 1 and x + 1 under one ratio
        let f = principal(2, vec![fac(&[1, -1], unity(1, 0), 1), fac(&[-1, 1], unity(2, 1), 1)]);
        let v = classify_principal(&f, RingMode::Laurent, &ord).unwrap();
        assert_eq!(v.groups.len(), 1);
        assert!(v.power_closed);
    }

    #[test]
    fn expansion_matches_groebner() {
        let ord = TermOrder::deglex(2);
        let f = principal(2, vec![fac(&[1, -1], unity(1, 0), 1), fac(&[1, -1], unity(2, 1), 1)]);
        let e = expand(&f).unwrap();
        assert_eq!(e, p(2, &[(1, &[2, 0]), (-1, &[0, 2])]));
        assert!(Ideal::polynomial(2, vec![e.clone()]).unwrap().is_power_closed().unwrap());
        assert!(divides_monomial_differences(&e).unwrap());

        let g = principal(2, vec![fac(&[1, -1], Root::scalar(FieldElement::integer(2)), 1)]);
        let eg = expand(&g).unwrap();
        assert!(!Ideal::polynomial(2, vec![eg]).unwrap().is_power_closed().unwrap());
        assert!(classify_principal(&g, RingMode::Laurent, &ord).is_ok());

        let i = principal(1, vec![fac(&[1], unity(4, 1), 1)]);
        assert!(expand(&i).is_err());
        let gi = FactoredPrincipal::new(
            1,
            FieldElement::sqrt(-1).unwrap(),
            Monomial::one(1),
            vec![fac(&[1], unity(4, 1), 1)],
        )
        .unwrap();
        assert_eq!(expand(&gi).unwrap().num_terms(), 2);
    }
}
