//! Text syntax for polynomials, factored principal generators, coefficient
//! vectors and torus points.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/')? unary)*        juxtaposition multiplies
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' '-'? INT)?
//! atom   := INT | NAME | 'sqrt(' '-'? INT ')' | 'phi(' INT ')' | '(' expr ')'
//! ```
//!
//! A name is one letter followed by optional digits, so `xy` reads as `x*y`.
//! Negative exponents and division by monomials need the Laurent ring.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::factorize;
use crate::cyclotomic::{cyclotomic_poly, QPoly};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement, Rational};
use crate::ideal::RingMode;
use crate::multipoly::{Monomial, MultiPoly, TermOrder};
use crate::principal::{Factor, FactoredPrincipal, Root};
use crate::variety::TorusPoint;

const RESERVED: [&str; 4] = ["sqrt", "phi", "zeta", "prod"];
const MAX_EXPONENT: u64 = 100_000;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Name(String),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    pos: usize,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { pos, msg: msg.into() })
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("digits");
            out.push(Token { tok: Tok::Num(n), pos: start });
        } else if c.is_ascii_alphabetic() {
            let start = i;
            let word_end = {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_alphabetic() {
                    j += 1;
                }
                j
            };
            if RESERVED.contains(&&text[start..word_end]) {
                i = word_end;
            } else {
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
            }
            out.push(Token { tok: Tok::Name(text[start..i].to_string()), pos: start });
        } else if "+-*/^(),".contains(c) {
            out.push(Token { tok: Tok::Sym(c), pos: i });
            i += 1;
        } else {
            return err(i, format!("unexpected character '{c}'"));
        }
    }
    out.push(Token { tok: Tok::End, pos: text.len() });
    Ok(out)
}

/// Letters compare first, then the numeric suffix; a bare letter comes first.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    let split = |s: &str| {
        let idx = s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len());
        (s[..idx].to_string(), s[idx..].parse::<u64>().ok())
    };
    split(a).cmp(&split(b))
}

/// Variable names occurring in `text`, naturally sorted. `phi(n)` with no
/// explicit variable contributes `x`.
pub fn infer_variables(text: &str) -> Result<Vec<String>> {
    let toks = tokenize(text)?;
    let mut names: BTreeSet<String> = BTreeSet::new();
    let mut uses_phi = false;
    for t in &toks {
        if let Tok::Name(n) = &t.tok {
            if n == "phi" {
                uses_phi = true;
            } else if !RESERVED.contains(&n.as_str()) {
                names.insert(n.clone());
            }
        }
    }
    if uses_phi && names.is_empty() {
        names.insert("x".into());
    }
    let mut v: Vec<String> = names.into_iter().collect();
    v.sort_by(|a, b| natural_cmp(a, b));
    Ok(v)
}

/// `sqrt(m)` as `s * sqrt(m')` with `m'` squarefree.
fn sqrt_value(m: i64, pos: usize) -> Result<FieldElement> {
    if m == 0 {
        return Ok(FieldElement::zero());
    }
    let mut outside = 1i64;
    let mut inside = m.signum();
    for (p, e) in factorize(m.unsigned_abs()) {
        outside *= (p as i64).pow(e / 2);
        if e % 2 == 1 {
            inside *= p as i64;
        }
    }
    let root = if inside == 1 {
        FieldElement::one()
    } else {
        FieldElement::sqrt(inside).or_else(|e| err(pos, e.to_string()))?
    };
    Ok(root.mul(&FieldElement::integer(outside)))
}

struct Parser<'a> {
    toks: Vec<Token>,
    at: usize,
    names: &'a [String],
    mode: RingMode,
    /// Extra variable standing for a `zeta(n, k)` atom, if allowed.
    zeta_slot: Option<usize>,
    zeta_seen: Option<(u64, u64)>,
}

impl<'a> Parser<'a> {
    fn nvars(&self) -> usize {
        self.names.len() + usize::from(self.zeta_slot.is_some())
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn pos(&self) -> usize {
        self.toks[self.at].pos
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == &Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            err(self.pos(), format!("expected '{c}'"))
        }
    }

    fn expect_int(&mut self) -> Result<BigInt> {
        let pos = self.pos();
        match self.bump().tok {
            Tok::Num(n) => Ok(n),
            _ => err(pos, "expected an integer"),
        }
    }

    fn small_int(&mut self) -> Result<i64> {
        let pos = self.pos();
        let negative = self.eat('-');
        let n = self.expect_int()?;
        let v = n.to_i64().filter(|v| v.unsigned_abs() <= MAX_EXPONENT);
        match v {
            Some(v) => Ok(if negative { -v } else { v }),
            None => err(pos, "integer out of range"),
        }
    }

    fn constant(&self, c: FieldElement) -> MultiPoly {
        MultiPoly::constant(self.nvars(), c)
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = checked(acc.add(&self.term()?), self.pos())?;
            } else if self.eat('-') {
                acc = checked(acc.sub(&self.term()?), self.pos())?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Tok::Num(_) | Tok::Name(_) | Tok::Sym('('))
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        loop {
            let pos = self.pos();
            if self.eat('*') || self.starts_atom() {
                let rhs = self.unary()?;
                acc = checked(acc.mul(&rhs), pos)?;
            } else if self.eat('/') {
                let rhs = self.unary()?;
                acc = self.divide(acc, rhs, pos)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn divide(&self, num: MultiPoly, den: MultiPoly, pos: usize) -> Result<MultiPoly> {
        if den.is_zero() {
            return err(pos, "division by zero");
        }
        if den.num_terms() != 1 {
            return err(pos, "can only divide by a scalar or a monomial");
        }
        let (m, c) = den.terms().next().map(|(m, c)| (m.clone(), c.clone())).expect("one term");
        if !m.is_one() && self.mode == RingMode::Polynomial {
            return err(pos, "division by a monomial requires the Laurent ring");
        }
        let inv = c.inv().expect("nonzero");
        checked(num.mul_monomial(&m.inverse()).scale(&inv), pos)
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        let pos = self.pos();
        if !self.eat('^') {
            return Ok(base);
        }
        let e = self.small_int()?;
        if e >= 0 {
            return checked(base.pow(e as u32), pos);
        }
        if base.num_terms() != 1 {
            return err(pos, "negative exponent on a non-monomial");
        }
        let (m, c) = base.terms().next().map(|(m, c)| (m.clone(), c.clone())).expect("one term");
        if !m.is_one() && self.mode == RingMode::Polynomial {
            return err(pos, "negative exponent requires the Laurent ring");
        }
        let inv = c.inv().expect("nonzero");
        Ok(MultiPoly::monomial(self.nvars(), m.scale(e as i32), inv.pow((-e) as u32)))
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        let pos = self.pos();
        match self.bump().tok {
            Tok::Num(n) => Ok(self.constant(FieldElement::rational(Rational::integer(n)))),
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Name(n) if n == "sqrt" => {
                self.expect('(')?;
                let m = self.small_int_unbounded()?;
                self.expect(')')?;
                Ok(self.constant(sqrt_value(m, pos)?))
            }
            Tok::Name(n) if n == "phi" => {
                self.expect('(')?;
                let k = self.expect_int()?;
                self.expect(')')?;
                let k = k.to_u64().filter(|&k| (1..=10_000).contains(&k));
                let Some(k) = k else { return err(pos, "phi index must be between 1 and 10000") };
                if self.names.len() != 1 {
                    return err(pos, "phi(n) needs exactly one variable");
                }
                let phi = cyclotomic_poly(k);
                let n = self.nvars();
                Ok(MultiPoly::from_terms(
                    n,
                    phi.coeffs().iter().enumerate().map(|(i, c)| {
                        let mut e = vec![0i32; n];
                        e[0] = i as i32;
                        (Monomial::new(e), FieldElement::rational(c.clone()))
                    }),
                ))
            }
            Tok::Name(n) if n == "zeta" => {
                let Some(slot) = self.zeta_slot else {
                    return err(pos, "zeta(n,k) is only allowed in factored input");
                };
                if self.zeta_seen.is_some() {
                    return err(pos, "at most one zeta per factor");
                }
                self.expect('(')?;
                let order = self.expect_int()?;
                self.expect(',')?;
                let index = self.expect_int()?;
                self.expect(')')?;
                let (Some(order), Some(index)) = (order.to_u64(), index.to_u64()) else {
                    return err(pos, "zeta arguments out of range");
                };
                if order == 0 {
                    return err(pos, "zeta order must be positive");
                }
                self.zeta_seen = Some((order, index));
                Ok(MultiPoly::var(self.nvars(), slot))
            }
            Tok::Name(n) if n == "prod" => err(pos, "prod(...) is only allowed in factored input"),
            Tok::Name(n) => match self.names.iter().position(|v| *v == n) {
                Some(i) => Ok(MultiPoly::var(self.nvars(), i)),
                None => err(pos, format!("unknown variable '{n}'")),
            },
            Tok::Sym(c) => err(pos, format!("unexpected '{c}'")),
            Tok::End => err(pos, "unexpected end of input"),
        }
    }

    fn small_int_unbounded(&mut self) -> Result<i64> {
        let pos = self.pos();
        let negative = self.eat('-');
        let n = self.expect_int()?;
        match n.to_i64() {
            Some(v) => Ok(if negative { -v } else { v }),
            None => err(pos, "integer out of range"),
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            Tok::End => Ok(()),
            _ => err(self.pos(), "unexpected trailing input"),
        }
    }
}

/// Arithmetic panics on mixed radicands; turn them into errors up front.
fn checked(p: MultiPoly, pos: usize) -> Result<MultiPoly> {
    p.radicand().or_else(|e| err(pos, e.to_string()))?;
    Ok(p)
}

fn parser<'a>(text: &str, names: &'a [String], mode: RingMode) -> Result<Parser<'a>> {
    Ok(Parser { toks: tokenize(text)?, at: 0, names, mode, zeta_slot: None, zeta_seen: None })
}

/// Scalars may not mix radicands; detect this before any arithmetic runs.
fn check_radicands(text: &str) -> Result<()> {
    let toks = tokenize(text)?;
    let mut seen: Option<(i64, usize)> = None;
    for w in toks.windows(4) {
        if let (Tok::Name(n), Tok::Sym('(')) = (&w[0].tok, &w[1].tok) {
            if n != "sqrt" {
                continue;
            }
            let (neg, num) = match (&w[2].tok, &w[3].tok) {
                (Tok::Sym('-'), Tok::Num(v)) => (true, v.clone()),
                (Tok::Num(v), _) => (false, v.clone()),
                _ => continue,
            };
            let Some(m) = num.to_i64() else { continue };
            let m = if neg { -m } else { m };
            if let Some(r) = sqrt_value(m, w[0].pos)?.radicand() {
                match seen {
                    Some((s, _)) if s != r => return err(w[0].pos, format!("cannot mix sqrt({s}) and sqrt({r})")),
                    _ => seen = Some((r, w[0].pos)),
                }
            }
        }
    }
    Ok(())
}

/// Parses a polynomial over the given variables.
pub fn parse_polynomial(text: &str, names: &[String], mode: RingMode) -> Result<MultiPoly> {
    check_radicands(text)?;
    let mut p = parser(text, names, mode)?;
    let f = p.expr()?;
    p.finish()?;
    Ok(f)
}

/// Parses with variables inferred from the text.
pub fn parse_inferred(text: &str, mode: RingMode) -> Result<(MultiPoly, Vec<String>)> {
    let names = infer_variables(text)?;
    Ok((parse_polynomial(text, &names, mode)?, names))
}

/// Prints with terms in decreasing deglex order (later variables larger).
pub fn format_polynomial(f: &MultiPoly, names: &[String]) -> String {
    f.fmt_with(names, &TermOrder::deglex(f.nvars()))
}

/// A univariate polynomial with rational coefficients.
pub fn parse_univariate(text: &str) -> Result<(QPoly, String)> {
    let names = infer_variables(text)?;
    if names.len() > 1 {
        return err(0, format!("expected one variable, found {}", names.join(", ")));
    }
    let names = if names.is_empty() { vec!["x".to_string()] } else { names };
    let f = parse_polynomial(text, &names, RingMode::Polynomial)?;
    let deg = f.total_degree().unwrap_or(0).max(0) as usize;
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (m, c) in f.terms() {
        coeffs[m.exps()[0] as usize] = c.to_rational().ok_or(Error::NonRationalCoefficients)?;
    }
    Ok((QPoly::from_coeffs(coeffs), names.into_iter().next().expect("one name")))
}

/// Comma-separated scalars, e.g. `1, -1, 1/2 + sqrt(2)`.
pub fn parse_scalars(text: &str) -> Result<Vec<FieldElement>> {
    check_radicands(text)?;
    let none: Vec<String> = Vec::new();
    let mut p = parser(text, &none, RingMode::Polynomial)?;
    let mut out = Vec::new();
    loop {
        let pos = p.pos();
        let e = p.expr()?;
        if !e.is_constant() {
            return err(pos, "expected a scalar");
        }
        out.push(e.coeff(&Monomial::one(0)));
        if !p.eat(',') {
            break;
        }
    }
    p.finish()?;
    Ok(out)
}

/// Comma-separated coordinates `0`, `1`, `-1` or `zeta(n,k)`.
pub fn parse_point(text: &str) -> Result<TorusPoint> {
    let toks = tokenize(text)?;
    let mut coords = Vec::new();
    let mut i = 0;
    loop {
        let pos = toks[i].pos;
        let (coord, used) = match (&toks[i].tok, toks.get(i + 1).map(|t| &t.tok)) {
            (Tok::Num(n), _) if n.is_zero() => (None, 1),
            (Tok::Num(n), _) if n == &BigInt::from(1) => (Some((1, 0)), 1),
            (Tok::Sym('-'), Some(Tok::Num(n))) if n == &BigInt::from(1) => (Some((2, 1)), 2),
            (Tok::Name(z), Some(Tok::Sym('('))) if z == "zeta" => {
                match (
                    toks.get(i + 2).map(|t| &t.tok),
                    toks.get(i + 3).map(|t| &t.tok),
                    toks.get(i + 4).map(|t| &t.tok),
                    toks.get(i + 5).map(|t| &t.tok),
                ) {
                    (Some(Tok::Num(n)), Some(Tok::Sym(',')), Some(Tok::Num(k)), Some(Tok::Sym(')'))) => {
                        let (Some(n), Some(k)) = (n.to_u64(), k.to_u64()) else {
                            return err(pos, "zeta arguments out of range");
                        };
                        if n == 0 {
                            return err(pos, "zeta order must be positive");
                        }
                        (Some((n, k)), 6)
                    }
                    _ => return err(pos, "expected zeta(n,k)"),
                }
            }
            _ => return err(pos, "expected 0, 1, -1 or zeta(n,k)"),
        };
        coords.push(coord);
        i += used;
        match &toks[i].tok {
            Tok::Sym(',') => i += 1,
            Tok::End => break,
            _ => return err(toks[i].pos, "expected ','"),
        }
    }
    TorusPoint::from_roots(&coords)
}

/// Parses `unit * prod((x^a*y^b/z^c - zeta(n,k))^m, ...)` and products of
/// such factors, scalars and monomials. Variables are inferred when `names`
/// is `None`.
pub fn parse_factored(text: &str, names: Option<&[String]>) -> Result<(FactoredPrincipal, Vec<String>)> {
    check_radicands(text)?;
    let names: Vec<String> = match names {
        Some(n) => n.to_vec(),
        None => infer_variables(text)?,
    };
    let product = factored_product(text, &names);
    match product {
        Err(Error::Parse { .. }) => single_factor(text, &names).or(product),
        _ => product,
    }
    .map(|f| (f, names))
}

/// A whole expression that is one binomial power, e.g. `x - 2y`.
fn single_factor(text: &str, names: &[String]) -> Result<FactoredPrincipal> {
    let d = names.len();
    let mut p = parser(text, names, RingMode::Laurent)?;
    p.zeta_slot = Some(d);
    p.zeta_seen = None;
    let value = p.expr()?;
    p.finish()?;
    let zeta = p.zeta_seen.take();
    let (mut scalar, mut monomial, mut factors) = (FieldElement::one(), Monomial::one(d), Vec::new());
    for item in classify_item(value, zeta, d, 0)? {
        match item {
            Item::Unit(c, m) => {
                scalar = scalar.mul(&c);
                monomial = monomial.mul(&m);
            }
            Item::Factor(f) => factors.push(f),
        }
    }
    FactoredPrincipal::new(d, scalar, monomial, factors)
}

fn factored_product(text: &str, names: &[String]) -> Result<FactoredPrincipal> {
    let d = names.len();
    let mut p = parser(text, names, RingMode::Laurent)?;
    p.zeta_slot = Some(d);
    let mut scalar = FieldElement::one();
    let mut monomial = Monomial::one(d);
    let mut factors = Vec::new();
    let mut first = true;
    loop {
        let pos = p.pos();
        let divide = if first {
            if p.eat('-') {
                scalar = scalar.neg();
            }
            false
        } else if p.eat('*') {
            false
        } else if p.eat('/') {
            true
        } else if p.starts_atom() {
            false
        } else {
            break;
        };
        first = false;
        let items = factored_item(&mut p, d)?;
        for item in items {
            match item {
                Item::Unit(c, m) if divide => {
                    scalar = scalar.mul(&c.inv().ok_or(Error::Parse { pos, msg: "division by zero".into() })?);
                    monomial = monomial.div(&m);
                }
                Item::Unit(c, m) => {
                    scalar = scalar.mul(&c);
                    monomial = monomial.mul(&m);
                }
                Item::Factor(_) if divide => return err(pos, "cannot divide by a factor"),
                Item::Factor(f) => factors.push(f),
            }
        }
    }
    p.finish()?;
    if scalar.is_zero() {
        return err(0, "the generator is zero");
    }
    FactoredPrincipal::new(d, scalar, monomial, factors)
}

enum Item {
    Unit(FieldElement, Monomial),
    Factor(Factor),
}

fn factored_item(p: &mut Parser<'_>, d: usize) -> Result<Vec<Item>> {
    let pos = p.pos();
    if matches!(p.peek(), Tok::Name(n) if n == "prod") {
        p.bump();
        p.expect('(')?;
        let mut out = Vec::new();
        loop {
            out.extend(factored_item(p, d)?);
            if !p.eat(',') {
                break;
            }
        }
        p.expect(')')?;
        return Ok(out);
    }
    p.zeta_seen = None;
    let value = p.power()?;
    let zeta = p.zeta_seen.take();
    classify_item(value, zeta, d, pos)
}

/// Splits a parsed item into a unit or a factor `c * (xi - rho)^m`.
fn classify_item(value: MultiPoly, zeta: Option<(u64, u64)>, d: usize, pos: usize) -> Result<Vec<Item>> {
    if value.is_zero() {
        return err(pos, "zero factor");
    }
    let strip = |m: &Monomial| Monomial::new(m.exps()[..d].iter().copied());
    if value.num_terms() == 1 {
        let (m, c) = value.terms().next().expect("one term");
        if m.exps()[d] != 0 {
            return err(pos, "zeta must appear inside a factor");
        }
        return Ok(vec![Item::Unit(c.clone(), strip(m))]);
    }
    // A power (...)^k of a binomial expands to many terms; recover it by
    // taking the k-th root structurally: find the binomial base first.
    let (base, mult) = binomial_root(&value)
        .ok_or(Error::Parse { pos, msg: "factor must have the form (monomial - root)^m".into() })?;
    // `c1*u + c2*v` with both monomials nonconstant is read as
    // `xi = u/v` and `rho = -c2/c1`; expansion multiplies back by the
    // denominator of `xi` in lowest terms, so only `gcd(u, v)` is kept aside.
    let shift = {
        let order = TermOrder::deglex(base.nvars());
        let mut ms: Vec<&Monomial> = base.terms().map(|(m, _)| m).collect();
        ms.sort_by(|a, b| order.cmp(a, b));
        let zeta_free = ms.iter().all(|m| m.exps()[d] == 0);
        if zeta_free && !ms[0].is_one() {
            ms[1].clone()
        } else {
            Monomial::one(base.nvars())
        }
    };
    let base = base.mul_monomial(&shift.inverse());
    let terms: Vec<(Monomial, FieldElement)> = base.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    let (var_term, other) = {
        let zeta_term = terms.iter().position(|(m, _)| m.exps()[d] != 0);
        let const_term = terms.iter().position(|(m, _)| m.is_one());
        match (zeta_term, const_term) {
            (Some(z), None) => (1 - z, z),
            (None, Some(c)) => (1 - c, c),
            _ => return err(pos, "factor must have the form (monomial - root)^m"),
        }
    };
    let (xi_full, c1) = &terms[var_term];
    if xi_full.exps()[d] != 0 {
        return err(pos, "zeta must be the constant part of a factor");
    }
    let (om, oc) = &terms[other];
    let ratio = oc.neg().div(c1).expect("nonzero");
    let rho = if om.exps()[d] != 0 {
        if om.exps()[d] != 1 || !om.exps()[..d].iter().all(|&e| e == 0) {
            return err(pos, "zeta must appear linearly");
        }
        let (n, k) = zeta.expect("zeta recorded");
        let z = Root::unity(n, k)?;
        if ratio.is_one() {
            z
        } else if ratio.neg().is_one() {
            z.negated()
        } else {
            return err(pos, "zeta must have coefficient 1 or -1 relative to the monomial");
        }
    } else {
        Root::scalar(ratio)
    };
    let floor = Monomial::new(strip(xi_full).exps().iter().map(|&e| e.min(0)));
    let kept = strip(&shift).mul(&floor);
    Ok(vec![
        Item::Unit(c1.pow(mult), kept.scale(mult as i32)),
        Item::Factor(Factor { xi: strip(xi_full), rho, multiplicity: mult }),
    ])
}

/// Finds `(b, m)` with `value = b^m` and `b` a two-term polynomial.
fn binomial_root(value: &MultiPoly) -> Option<(MultiPoly, u32)> {
    let n = value.nvars();
    let order = TermOrder::deglex(n);
    let terms: Vec<(Monomial, FieldElement)> = value.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    // For b = c1 u + c2 v and b^m, the extreme monomials (for a generic
    // weight) are u^m and v^m. Try every m dividing the exponents.
    let (hi_m, hi_c) = terms.iter().max_by(|a, b| order.cmp(&a.0, &b.0))?;
    let (lo_m, lo_c) = terms.iter().min_by(|a, b| order.cmp(&a.0, &b.0))?;
    for m in 1..=64u32 {
        if value.num_terms() as u32 > m + 1 {
            continue;
        }
        let root_mono = |x: &Monomial| -> Option<Monomial> {
            x.exps().iter().all(|&e| e % m as i32 == 0).then(|| Monomial::new(x.exps().iter().map(|&e| e / m as i32)))
        };
        let (Some(u), Some(v)) = (root_mono(hi_m), root_mono(lo_m)) else { continue };
        for c1 in nth_roots(hi_c, m) {
            for c2 in nth_roots(lo_c, m) {
                let b = MultiPoly::from_terms(n, [(u.clone(), c1.clone()), (v.clone(), c2.clone())]);
                if b.num_terms() == 2 && b.pow(m) == *value {
                    return Some((b, m));
                }
            }
        }
    }
    None
}

/// Candidate `m`-th roots of a coefficient among rational numbers, their
/// negatives and the element itself (for `m = 1`).
fn nth_roots(c: &FieldElement, m: u32) -> Vec<FieldElement> {
    if m == 1 {
        return vec![c.clone()];
    }
    let Some(q) = c.to_rational() else { return Vec::new() };
    let root = |n: &BigInt| -> Option<BigInt> {
        let r = n.abs().nth_root(m);
        (r.pow(m) == n.abs()).then_some(r)
    };
    let (Some(a), Some(b)) = (root(q.numer()), root(q.denom())) else { return Vec::new() };
    let r = FieldElement::rational(Rational::from_big(num_rational::BigRational::new(a, b)));
    if q.is_negative() {
        if m % 2 == 1 {
            vec![r.neg()]
        } else {
            Vec::new()
        }
    } else {
        vec![r.clone(), r.neg()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn polynomials() {
        let xy = names(&["x", "y"]);
        let f = parse_polynomial("y - 2*x", &xy, RingMode::Polynomial).unwrap();
        assert_eq!(f, MultiPoly::from_int_terms(2, &[(1, &[0, 1]), (-2, &[1, 0])]));
        assert_eq!(format_polynomial(&f, &xy), "y - 2*x");
        let g = parse_polynomial("2xy^2 + 3 (x - 1)", &xy, RingMode::Polynomial).unwrap();
        assert_eq!(format_polynomial(&g, &xy), "2*x*y^2 + 3*x - 3");
        assert_eq!(parse_polynomial("x^2/2", &xy, RingMode::Polynomial).unwrap().to_string(), "1/2*x1^2");
    }

    #[test]
    fn quadratic_coefficients() {
        let xyz = names(&["x", "y", "z"]);
        let f = parse_polynomial("z - (1/2 + sqrt(2))*x - (1/2 - sqrt(2))*y", &xyz, RingMode::Laurent).unwrap();
        assert_eq!(f.lambda().unwrap(), 3);
        assert_eq!(f.radicand().unwrap(), Some(2));
        assert_eq!(parse_polynomial("sqrt(8)", &xyz, RingMode::Polynomial).unwrap().to_string(), "(2*sqrt(2))");
        assert_eq!(parse_polynomial("sqrt(9)", &xyz, RingMode::Polynomial).unwrap().to_string(), "3");
        assert!(matches!(parse_polynomial("sqrt(2) + sqrt(3)", &xyz, RingMode::Polynomial), Err(Error::Parse { .. })));
    }

    #[test]
    fn laurent_syntax() {
        let xy = names(&["x", "y"]);
        let e = parse_polynomial("x^-1*y - 1", &xy, RingMode::Polynomial).unwrap_err();
        assert!(matches!(e, Error::Parse { pos: 1, .. }), "{e}");
        let f = parse_polynomial("x^-1*y - 1", &xy, RingMode::Laurent).unwrap();
        assert_eq!(f, MultiPoly::from_int_terms(2, &[(1, &[-1, 1]), (-1, &[0, 0])]));
        assert_eq!(parse_polynomial("y/x - 1", &xy, RingMode::Laurent).unwrap(), f);
        assert!(parse_polynomial("y/x", &xy, RingMode::Polynomial).is_err());
        assert!(parse_polynomial("y/(x+1)", &xy, RingMode::Laurent).is_err());
    }

    #[test]
    fn errors_carry_positions() {
        let xy = names(&["x", "y"]);
        assert_eq!(
            parse_polynomial("x + q", &xy, RingMode::Polynomial),
            Err(Error::Parse { pos: 4, msg: "unknown variable 'q'".into() })
        );
        assert!(matches!(parse_polynomial("x + ", &xy, RingMode::Polynomial), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_polynomial("x $ y", &xy, RingMode::Polynomial), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_polynomial("(x", &xy, RingMode::Polynomial), Err(Error::Parse { .. })));
        assert!(parse_polynomial("x/0", &xy, RingMode::Polynomial).is_err());
    }

    #[test]
    fn variable_inference() {
        assert_eq!(infer_variables("x10 + x2 + x1").unwrap(), names(&["x1", "x2", "x10"]));
        assert_eq!(infer_variables("y - 2x").unwrap(), names(&["x", "y"]));
        assert_eq!(infer_variables("phi(3)*phi(4)").unwrap(), names(&["x"]));
        assert_eq!(infer_variables("sqrt(2)").unwrap(), Vec::<String>::new());
    }

    #[test]
    fn univariate_input() {
        let (f, v) = parse_univariate("phi(12)^2*(x-2)").unwrap();
        assert_eq!(v, "x");
        assert_eq!(f, cyclotomic_poly(12).pow(2).mul(&QPoly::from_ints(&[-2, 1])));
        assert!(parse_univariate("x + y").is_err());
        assert!(parse_univariate("sqrt(2)*t").is_err());
        assert_eq!(parse_univariate("t^2 - 1").unwrap().1, "t");
    }

    #[test]
    fn scalars_and_points() {
        let v = parse_scalars("1, -1, 1/2 + sqrt(2)").unwrap();
        assert_eq!(v.len(), 3);
        assert_eq!(v[1], FieldElement::integer(-1));
        assert!(parse_scalars("x").is_err());
        let w = parse_point("zeta(4,1), zeta(4,3)").unwrap();
        assert_eq!((w.order, w.exponents.clone()), (4, vec![Some(1), Some(3)]));
        let w = parse_point("-1,-1").unwrap();
        assert_eq!((w.order, w.exponents.clone()), (2, vec![Some(1), Some(1)]));
        let w = parse_point("0, 1").unwrap();
        assert_eq!(w.exponents, vec![None, Some(0)]);
        assert!(parse_point("2").is_err());
    }

    #[test]
    fn factored_input() {
        let (f, n) = parse_factored("prod((x/y - 1), (x/y + 1))", None).unwrap();
        assert_eq!(n, names(&["x", "y"]));
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.factors[1].rho, Root::unity(2, 1).unwrap());

        let (f, _) = parse_factored("3*x^2 * prod((x^2*y/z - zeta(6,1))^2, (x - zeta(4,3)))", None).unwrap();
        assert_eq!(f.scalar, FieldElement::integer(3));
        assert_eq!(f.monomial, Monomial::new([2, 0, -2]));
        assert_eq!(f.factors[0].xi, Monomial::new([2, 1, -1]));
        assert_eq!(f.factors[0].multiplicity, 2);
        assert_eq!(f.factors[1].rho, Root::unity(4, 3).unwrap());

        let (f, _) = parse_factored("(x - 2y)", None).unwrap();
        assert_eq!(f.factors[0].rho, Root::scalar(FieldElement::integer(2)));
        assert_eq!(f.factors[0].xi, Monomial::new([1, -1]));

        let (f, _) = parse_factored("x * (x - y)", None).unwrap();
        assert_eq!(f.monomial, Monomial::new([1, 0]));
        assert_eq!(f.factors[0].rho, Root::unity(1, 0).unwrap());

        // expansion gives back exactly the polynomial that was typed
        for text in ["x * (x - y)", "x - 2y", "(x^2*y - 3*x*y^3)^2", "x/y - 1", "-(2x*z - y)^3 * y"] {
            let (f, n) = parse_factored(text, None).unwrap();
            let typed = parse_polynomial(text, &n, RingMode::Laurent).unwrap();
            assert_eq!(crate::principal::expand(&f).unwrap(), typed, "{text}");
        }

        let (f, _) = parse_factored("(2x - 2)^3", None).unwrap();
        assert_eq!(f.scalar, FieldElement::integer(8));
        assert_eq!(f.factors[0].multiplicity, 3);

        assert!(parse_factored("(x + y + 1)", None).is_err());
        assert!(parse_factored("(x - zeta(0,1))", None).is_err());
        assert!(parse_polynomial("zeta(3,1)", &names(&["x"]), RingMode::Polynomial).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn coefficient() -> impl Strategy<Value = FieldElement> {
            (-20i64..20, 1i64..6, -5i64..5, prop::bool::ANY).prop_map(|(a, d, b, irr)| {
                let r = Rational::new(a, d).unwrap();
                if irr && b != 0 {
                    FieldElement::quadratic(r, Rational::new(b, d).unwrap(), 2).unwrap()
                } else {
                    FieldElement::rational(r)
                }
            })
        }

        fn polynomial(laurent: bool) -> impl Strategy<Value = MultiPoly> {
            let lo = if laurent { -3 } else { 0 };
            prop::collection::vec((coefficient(), prop::collection::vec(lo..4i32, 3)), 0..6)
                .prop_map(|ts| MultiPoly::from_terms(3, ts.into_iter().map(|(c, e)| (Monomial::new(e), c))))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(1000))]

            #[test]
            fn print_parse_round_trip(f in polynomial(false), g in polynomial(true)) {
                let n = names(&["x", "y", "z"]);
                let s = format_polynomial(&f, &n);
                prop_assert_eq!(parse_polynomial(&s, &n, RingMode::Polynomial).unwrap(), f);
                let s = format_polynomial(&g, &n);
                prop_assert_eq!(parse_polynomial(&s, &n, RingMode::Laurent).unwrap(), g);
            }
        }
    }
}
