//! Buchberger's algorithm producing reduced monic Gröbner bases.
//!
//! Pairs are handled with the Gebauer–Möller update. Each round takes every
//! pending pair whose lcm has the smallest total degree, reduces the batch
//! through [`Exec`], then feeds the remainders back one at a time in a fixed
//! order. The reduced basis is unique for a given ideal and order, so the
//! result does not depend on the schedule or on the thread count.

use std::cmp::Ordering;
use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::{Field, FieldElement};
use crate::multipoly::{Monomial, MultiPoly, TermOrder};

/// Cooperative cancellation flag shared with long computations.
#[derive(Clone, Debug, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, AtomicOrdering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(AtomicOrdering::Relaxed)
    }
}

/// Execution settings for Gröbner computations.
#[derive(Clone, Debug, Default)]
pub struct GbConfig {
    pub exec: Exec,
    pub cancel: Option<CancelToken>,
}

impl GbConfig {
    pub fn sequential() -> Self {
        GbConfig { exec: Exec::Sequential, cancel: None }
    }

    fn check(&self) -> Result<()> {
        match &self.cancel {
            Some(c) if c.is_cancelled() => Err(Error::Cancelled),
            _ => Ok(()),
        }
    }
}

/// Terms sorted by decreasing monomial under the engine's order.
type Terms = Vec<(Monomial, FieldElement)>;

fn sorted_terms(p: &MultiPoly, order: &TermOrder) -> Terms {
    let mut t: Terms = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    t
}

fn to_multipoly(nvars: usize, t: &Terms) -> MultiPoly {
    MultiPoly::from_terms(nvars, t.iter().cloned())
}

fn make_monic(t: &mut Terms) {
    if let Some((_, lc)) = t.first() {
        if !lc.is_one() {
            let inv = lc.inv().expect("nonzero leading coefficient");
            for (_, c) in t.iter_mut() {
                *c = c.mul(&inv);
            }
        }
    }
}

/// `f - c * m * g`, merging two sorted term lists.
fn sub_scaled(
    order: &TermOrder,
    f: &[(Monomial, FieldElement)],
    c: &FieldElement,
    m: &Monomial,
    g: &[(Monomial, FieldElement)],
) -> Terms {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut fi = f.iter().peekable();
    let mut gi = g.iter().map(|(gm, gc)| (gm.mul(m), gc.mul(c))).peekable();
    loop {
        let ord = match (fi.peek(), gi.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some(a), Some(b)) => order.cmp(&a.0, &b.0),
        };
        match ord {
            Ordering::Greater => out.push(fi.next().expect("peeked").clone()),
            Ordering::Less => {
                let (gm, gc) = gi.next().expect("peeked");
                out.push((gm, gc.neg()));
            }
            Ordering::Equal => {
                let (fm, fc) = fi.next().expect("peeked");
                let (_, gc) = gi.next().expect("peeked");
                let s = fc.sub(&gc);
                if !s.is_zero() {
                    out.push((fm.clone(), s));
                }
            }
        }
    }
    out
}

/// Full reduction of `f` by monic polynomials `basis`.
fn reduce(order: &TermOrder, mut f: Terms, basis: &[&Terms], cfg: &GbConfig) -> Result<Terms> {
    let mut rem: Terms = Vec::new();
    let mut pos = 0;
    let mut steps = 0u32;
    while pos < f.len() {
        steps = steps.wrapping_add(1);
        if steps.is_multiple_of(64) {
            cfg.check()?;
        }
        let (lead, lc) = &f[pos];
        match basis.iter().find(|g| g[0].0.divides(lead)) {
            Some(g) => {
                let m = lead.div(&g[0].0);
                let c = lc.clone();
                f = sub_scaled(order, &f[pos + 1..], &c, &m, &g[1..]);
                pos = 0;
            }
            None => {
                rem.push(f[pos].clone());
                pos += 1;
            }
        }
    }
    Ok(rem)
}

/// Reduction of the leading term only: the result is zero or has a leading
/// monomial no basis element divides. Tails are left alone, which keeps
/// coefficients small until the final inter-reduction.
fn top_reduce(order: &TermOrder, mut f: Terms, basis: &[&Terms], cfg: &GbConfig) -> Result<Terms> {
    let mut steps = 0u32;
    while let Some((lead, lc)) = f.first() {
        steps = steps.wrapping_add(1);
        if steps.is_multiple_of(64) {
            cfg.check()?;
        }
        let Some(g) = basis.iter().find(|g| g[0].0.divides(lead)) else {
            break;
        };
        let m = lead.div(&g[0].0);
        let c = lc.clone();
        f = sub_scaled(order, &f[1..], &c, &m, &g[1..]);
    }
    Ok(f)
}

fn tail(g: &Terms) -> Terms {
    g[1..].to_vec()
}

fn coprime(a: &Monomial, b: &Monomial) -> bool {
    a.exps().iter().zip(b.exps()).all(|(&x, &y)| x == 0 || y == 0)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    /// Degree the S-polynomial would have if the input were homogenized.
    sugar: i64,
}

struct Engine<'a> {
    order: &'a TermOrder,
    cfg: &'a GbConfig,
    polys: Vec<Terms>,
    sugar: Vec<i64>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    /// Input generators not yet added, with their degree as sugar.
    pending: Vec<(Terms, i64)>,
}

impl<'a> Engine<'a> {
    fn lt(&self, i: usize) -> &Monomial {
        &self.polys[i][0].0
    }

    fn active_basis(&self) -> Vec<&Terms> {
        (0..self.polys.len()).filter(|&i| self.active[i]).map(|i| &self.polys[i]).collect()
    }

    fn pair(&self, i: usize, j: usize) -> Pair {
        let lcm = self.lt(i).lcm(self.lt(j));
        let lifted = |k: usize| self.sugar[k] + lcm.degree() - self.lt(k).degree();
        Pair { i, j, sugar: lifted(i).max(lifted(j)), lcm }
    }

    fn insert(&mut self, mut h: Terms, sugar: i64) {
        make_monic(&mut h);
        let hi = self.polys.len();
        self.polys.push(h);
        self.sugar.push(sugar);
        self.active.push(false);
        let lt_h = self.lt(hi).clone();

        let mut cands: Vec<Pair> = (0..hi).filter(|&g| self.active[g]).map(|g| self.pair(g, hi)).collect();
        let mut kept: Vec<(Pair, bool)> = Vec::new();
        while !cands.is_empty() {
            let p = cands.remove(0);
            let is_coprime = coprime(self.lt(p.i), &lt_h);
            let dominated = cands.iter().chain(kept.iter().map(|(q, _)| q)).any(|q| q.lcm.divides(&p.lcm));
            if is_coprime || !dominated {
                kept.push((p, is_coprime));
            }
        }
        let new_pairs: Vec<Pair> = kept.into_iter().filter(|(_, c)| !c).map(|(p, _)| p).collect();

        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(lt_h.divides(&p.lcm) && polys[p.i][0].0.lcm(&lt_h) != p.lcm && polys[p.j][0].0.lcm(&lt_h) != p.lcm)
        });
        self.pairs.extend(new_pairs);

        for g in 0..hi {
            if self.active[g] && lt_h.divides(self.lt(g)) {
                self.active[g] = false;
            }
        }
        self.active[hi] = true;
    }

    fn spoly(&self, p: &Pair) -> Terms {
        let (f, g) = (&self.polys[p.i], &self.polys[p.j]);
        let mf = p.lcm.div(&f[0].0);
        let mg = p.lcm.div(&g[0].0);
        let fm: Terms = f[1..].iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
        sub_scaled(self.order, &fm, &FieldElement::one(), &mg, &g[1..])
    }

    fn is_unit(&self) -> bool {
        self.polys.iter().zip(&self.active).any(|(p, &a)| a && p[0].0.is_one())
    }

    /// Pairs and pending inputs of minimal sugar.
    fn next_batch(&mut self) -> (Vec<Pair>, Vec<(Terms, i64)>) {
        let lowest = self.pairs.iter().map(|p| p.sugar).chain(self.pending.iter().map(|(_, s)| *s)).min();
        let Some(min_sugar) = lowest else {
            return (Vec::new(), Vec::new());
        };
        let (mut batch, rest): (Vec<Pair>, Vec<Pair>) =
            std::mem::take(&mut self.pairs).into_iter().partition(|p| p.sugar == min_sugar);
        self.pairs = rest;
        batch.sort_by(|a, b| self.order.cmp(&a.lcm, &b.lcm).then((a.i, a.j).cmp(&(b.i, b.j))));
        let (inputs, waiting): (Vec<_>, Vec<_>) =
            std::mem::take(&mut self.pending).into_iter().partition(|(_, s)| *s == min_sugar);
        self.pending = waiting;
        (batch, inputs)
    }

    fn run(&mut self) -> Result<()> {
        loop {
            self.cfg.check()?;
            if self.is_unit() {
                return Ok(());
            }
            let (batch, inputs) = self.next_batch();
            if batch.is_empty() && inputs.is_empty() {
                return Ok(());
            }
            let basis = self.active_basis();
            let reduced = self.cfg.exec.map(&batch, |p| top_reduce(self.order, self.spoly(p), &basis, self.cfg));
            drop(basis);
            let candidates =
                inputs.into_iter().map(Ok).chain(batch.iter().zip(reduced).map(|(p, r)| r.map(|r| (r, p.sugar))));
            for candidate in candidates {
                let (r, sugar) = candidate?;
                if r.is_empty() {
                    continue;
                }
                let again = top_reduce(self.order, r, &self.active_basis(), self.cfg)?;
                if !again.is_empty() {
                    self.insert(again, sugar);
                }
            }
        }
    }
}

/// A reduced, monic Gröbner basis, listed by increasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    order: TermOrder,
    elements: Vec<MultiPoly>,
    sorted: Vec<Terms>,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[MultiPoly] {
        &self.elements
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// True iff the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn normal_form(&self, f: &MultiPoly) -> MultiPoly {
        let basis: Vec<&Terms> = self.sorted.iter().collect();
        let r = reduce(&self.order, sorted_terms(f, &self.order), &basis, &GbConfig::sequential())
            .expect("uncancellable reduction");
        to_multipoly(self.nvars, &r)
    }

    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Leading monomials of the basis elements.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|t| t[0].0.clone()).collect()
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` (nonnegative
/// exponents only) with respect to `order`.
pub fn groebner(nvars: usize, gens: &[MultiPoly], order: &TermOrder, cfg: &GbConfig) -> Result<GroebnerBasis> {
    if order.nvars() != nvars {
        return Err(Error::RingMismatch(format!("order on {} variables, ring has {nvars}", order.nvars())));
    }
    for g in gens {
        if g.nvars() != nvars {
            return Err(Error::RingMismatch(format!("generator in {} variables, ring has {nvars}", g.nvars())));
        }
        if !g.is_polynomial() {
            return Err(Error::RingMismatch("negative exponent in a polynomial-ring generator".into()));
        }
        g.radicand()?;
    }
    let mut inputs: Vec<Terms> = gens.iter().filter(|g| !g.is_zero()).map(|g| sorted_terms(g, order)).collect();
    inputs.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0).then_with(|| a.len().cmp(&b.len())));

    let pending = inputs
        .into_iter()
        .map(|g| {
            let sugar = g.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
            (g, sugar)
        })
        .collect();
    let mut engine =
        Engine { order, cfg, polys: Vec::new(), sugar: Vec::new(), active: Vec::new(), pairs: Vec::new(), pending };
    engine.run()?;

    // inter-reduce the minimal basis
    let minimal: Vec<Terms> =
        (0..engine.polys.len()).filter(|&i| engine.active[i]).map(|i| engine.polys[i].clone()).collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for (k, g) in minimal.iter().enumerate() {
        let others: Vec<&Terms> = minimal.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, h)| h).collect();
        let mut t = vec![g[0].clone()];
        t.extend(reduce(order, tail(g), &others, cfg)?);
        reduced.push(t);
    }
    reduced.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    let elements = reduced.iter().map(|t| to_multipoly(nvars, t)).collect();
    Ok(GroebnerBasis { nvars, order: order.clone(), elements, sorted: reduced })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, t: &[(i64, &[i32])]) -> MultiPoly {
        MultiPoly::from_int_terms(n, t)
    }

    #[test]
    fn small_bases() {
        let ord = TermOrder::deglex(2);
        let f = p(2, &[(1, &[0, 1]), (-2, &[1, 0])]);
        let f2 = p(2, &[(1, &[0, 2]), (-2, &[2, 0])]);
        let gb = groebner(2, &[f.clone(), f2], &ord, &GbConfig::default()).unwrap();
        assert_eq!(gb.elements(), &[f, p(2, &[(1, &[2, 0])])]);

        let x = p(2, &[(1, &[1, 0])]);
        let gb = groebner(2, std::slice::from_ref(&x), &ord, &GbConfig::default()).unwrap();
        assert_eq!(gb.elements(), std::slice::from_ref(&x));

        let gb = groebner(
            2,
            &[p(2, &[(1, &[1, 0]), (1, &[0, 1])]), p(2, &[(1, &[1, 0]), (-1, &[0, 1])])],
            &ord,
            &GbConfig::default(),
        )
        .unwrap();
        assert_eq!(gb.elements(), &[x, p(2, &[(1, &[0, 1])])]);
    }

    #[test]
    fn unit_and_zero_ideals() {
        let ord = TermOrder::deglex(2);
        let gb =
            groebner(2, &[p(2, &[(1, &[1, 0])]), p(2, &[(1, &[1, 0]), (-1, &[0, 0])])], &ord, &GbConfig::default())
                .unwrap();
        assert!(gb.is_unit());
        let gb = groebner(2, &[MultiPoly::zero(2)], &ord, &GbConfig::default()).unwrap();
        assert!(gb.is_zero_ideal());
        assert!(gb.contains(&MultiPoly::zero(2)));
    }

    #[test]
    fn twisted_cubic_is_schedule_independent() {
        // x^2 - y, x^3 - z in lex with z > y > x
        let gens = [p(3, &[(1, &[2, 0, 0]), (-1, &[0, 1, 0])]), p(3, &[(1, &[3, 0, 0]), (-1, &[0, 0, 1])])];
        let ord = TermOrder::lex(3);
        let a = groebner(3, &gens, &ord, &GbConfig::sequential()).unwrap();
        let b = groebner(3, &gens, &ord, &GbConfig::default()).unwrap();
        let rev: Vec<_> = gens.iter().rev().cloned().collect();
        let c = groebner(3, &rev, &ord, &GbConfig::default()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert!(a.contains(&p(3, &[(1, &[0, 2, 0]), (-1, &[1, 0, 1])])));
    }

    #[test]
    fn cancellation_is_reported() {
        let token = CancelToken::new();
        token.cancel();
        let cfg = GbConfig { exec: Exec::Sequential, cancel: Some(token) };
        let gens = [p(2, &[(1, &[2, 0]), (-1, &[0, 1])]), p(2, &[(1, &[1, 1]), (-1, &[0, 0])])];
        assert_eq!(groebner(2, &gens, &TermOrder::deglex(2), &cfg), Err(Error::Cancelled));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn poly(d: usize) -> impl Strategy<Value = MultiPoly> {
            prop::collection::vec((-3i64..4, prop::collection::vec(0i32..3, d)), 1..4).prop_map(move |ts| {
                MultiPoly::from_terms(d, ts.into_iter().map(|(c, e)| (Monomial::new(e), FieldElement::integer(c))))
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(32))]

            #[test]
            fn basis_is_reduced_and_contains_generators(gens in prop::collection::vec(poly(3), 1..3)) {
                let ord = TermOrder::deglex(3);
                let gb = groebner(3, &gens, &ord, &GbConfig::default()).unwrap();
                for g in &gens {
                    prop_assert!(gb.contains(g));
                }
                let lts = gb.leading_monomials();
                for (k, e) in gb.elements().iter().enumerate() {
                    prop_assert!(e.leading_term(&ord).unwrap().1.is_one());
                    for (m, _) in e.terms() {
                        for (j, lt) in lts.iter().enumerate() {
                            prop_assert!(!(lt.divides(m) && (j != k || m != &lts[k])));
                        }
                    }
                }
                let seq = groebner(3, &gens, &ord, &GbConfig::sequential()).unwrap();
                prop_assert_eq!(seq, gb);
            }
        }
    }
}
