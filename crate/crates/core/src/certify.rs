//! Machine-checked reproductions of known results, grouped by topic.
//!
//! Every certificate recomputes its answer from scratch and compares it with
//! a literal expectation or with an independent algorithm. Randomised
//! certificates draw from a seeded generator, so a run is reproducible.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::mpsc;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::euler_phi;
use crate::cyclotomic::{cyclotomic_poly, cyclotomic_product, QPoly};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::expr::{format_polynomial, parse_polynomial};
use crate::field::{Field, FieldElement, Rational};
use crate::groebner::{CancelToken, GbConfig};
use crate::ideal::{Ideal, RingMode};
use crate::lattice::ExponentLattice;
use crate::multipoly::{newton_power_identity_check, Monomial, MultiPoly, TermOrder};
use crate::powerpoly::{
    circle, is_powered, psi_decompose, psi_of_set, psi_poly, star, star_via_gcd, Antichain, BinomialQuotient,
    PowerInterior,
};
use crate::principal::{classify_principal, expand, Factor, FactoredPrincipal, Root};
use crate::variety::{
    it_generators, radical_of_linear_closure, validate_linear_radical, IsoType, TorusPoint, TorusSubgroup,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Topic {
    /// Closures of explicit ideals and their generator sets.
    Explicit,
    /// Algebraic laws of the closure operator.
    Operators,
    /// Computations in the Laurent ring.
    Laurent,
    /// Powered polynomials in one variable.
    Univariate,
    /// Power-closed principal ideals.
    Principal,
    /// Radicals, zero loci and torus subgroups.
    Radical,
}

impl Topic {
    pub const ALL: [Topic; 6] =
        [Topic::Explicit, Topic::Operators, Topic::Laurent, Topic::Univariate, Topic::Principal, Topic::Radical];

    pub fn name(self) -> &'static str {
        match self {
            Topic::Explicit => "explicit",
            Topic::Operators => "operators",
            Topic::Laurent => "laurent",
            Topic::Univariate => "univariate",
            Topic::Principal => "principal",
            Topic::Radical => "radical",
        }
    }

    pub fn parse(s: &str) -> Option<Topic> {
        Topic::ALL.into_iter().find(|t| t.name() == s)
    }
}

impl fmt::Display for Topic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A stretch certificate that ran out of budget.
    Timeout,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Timeout => "TIMEOUT",
        })
    }
}

/// What a certificate body reports back.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Outcome { passed, detail: detail.into() }
    }
}

/// Inputs shared by every certificate body.
#[derive(Clone, Debug)]
pub struct Context {
    pub exec: Exec,
    pub seed: u64,
    /// Alter the literal expectation so that the certificate must fail.
    pub perturbed: bool,
    pub cancel: Option<CancelToken>,
}

impl Context {
    fn gb(&self) -> GbConfig {
        GbConfig { exec: self.exec, cancel: self.cancel.clone() }
    }

    fn ideal(&self, nvars: usize, mode: RingMode, gens: Vec<MultiPoly>) -> Result<Ideal> {
        Ok(Ideal::new(nvars, mode, gens)?.with_config(self.gb()))
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(stream))
    }
}

pub struct Certificate {
    pub id: &'static str,
    pub criterion: u8,
    pub topic: Topic,
    pub title: &'static str,
    /// Wall-clock limit that is part of the pass condition.
    pub limit: Option<Duration>,
    /// Stretch goals are cancelled at their budget and reported, not failed.
    pub stretch: bool,
    /// Whether the certificate has a literal expectation that can be perturbed.
    pub perturbable: bool,
    pub run: fn(&Context) -> Result<Outcome>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub id: &'static str,
    pub criterion: u8,
    pub topic: Topic,
    pub title: &'static str,
    pub status: Status,
    pub detail: String,
    pub millis: u128,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{:>2}] {:<10} {:<34} {:>9} ms  {}",
            self.status, self.criterion, self.topic, self.id, self.millis, self.detail
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub checks: Vec<CheckReport>,
}

impl Report {
    /// True when nothing failed; a stretch timeout is not a failure.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub only: Option<BTreeSet<Topic>>,
    pub ids: Option<BTreeSet<String>>,
    pub perturb: Option<String>,
    pub exec: Exec,
    pub seed: u64,
    pub stretch_budget: Duration,
    pub skip_stretch: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            only: None,
            ids: None,
            perturb: None,
            exec: Exec::default(),
            seed: 2024,
            stretch_budget: Duration::from_secs(30 * 60),
            skip_stretch: false,
        }
    }
}

pub fn certificates() -> &'static [Certificate] {
    const fn secs(s: u64) -> Option<Duration> {
        Some(Duration::from_secs(s))
    }
    static ALL: [Certificate; 11] = [
        Certificate {
            id: "line-closure-basis",
            criterion: 1,
            topic: Topic::Explicit,
            title: "closure of (y - 2x) has basis {y - 2x, x^2}",
            limit: secs(1),
            stretch: false,
            perturbable: true,
            run: line_closure_basis,
        },
        Certificate {
            id: "intersection-strictness",
            criterion: 2,
            topic: Topic::Explicit,
            title: "closure does not commute with intersection",
            limit: secs(5),
            stretch: false,
            perturbable: false,
            run: intersection_strictness,
        },
        Certificate {
            id: "star-circle-exponents",
            criterion: 3,
            topic: Topic::Univariate,
            title: "cyclotomic exponent formulas and strictness",
            limit: secs(1),
            stretch: false,
            perturbable: true,
            run: star_circle_exponents,
        },
        Certificate {
            id: "star-gcd-oracle",
            criterion: 4,
            topic: Topic::Univariate,
            title: "closure generator equals gcd of substitutions",
            limit: secs(60),
            stretch: false,
            perturbable: false,
            run: star_gcd_oracle,
        },
        Certificate {
            id: "psi-decomposition",
            criterion: 5,
            topic: Topic::Univariate,
            title: "psi decomposition and inclusion-exclusion",
            limit: None,
            stretch: false,
            perturbable: true,
            run: psi_decomposition,
        },
        Certificate {
            id: "laurent-plane-closure",
            criterion: 6,
            topic: Topic::Laurent,
            title: "Laurent closure of z - ax - by",
            limit: secs(30),
            stretch: false,
            perturbable: true,
            run: laurent_plane_closure,
        },
        Certificate {
            id: "laurent-intersection-strictness",
            criterion: 7,
            topic: Topic::Laurent,
            title: "(xy)^12 (y - x)^2 outside the closure of a product",
            limit: None,
            stretch: true,
            perturbable: false,
            run: laurent_intersection_strictness,
        },
        Certificate {
            id: "closure-operator-laws",
            criterion: 8,
            topic: Topic::Operators,
            title: "closure operator laws on random ideals",
            limit: secs(300),
            stretch: false,
            perturbable: false,
            run: closure_operator_laws,
        },
        Certificate {
            id: "principal-classifier",
            criterion: 9,
            topic: Topic::Principal,
            title: "classifier agrees with Groebner test",
            limit: secs(600),
            stretch: false,
            perturbable: false,
            run: principal_classifier,
        },
        Certificate {
            id: "radical-structure",
            criterion: 10,
            topic: Topic::Radical,
            title: "radicals, torus subgroups, vanishing ideals",
            limit: secs(300),
            stretch: false,
            perturbable: true,
            run: radical_structure,
        },
        Certificate {
            id: "symmetric-identity",
            criterion: 11,
            topic: Topic::Explicit,
            title: "power-sum identity and triangular generators",
            limit: secs(60),
            stretch: false,
            perturbable: false,
            run: symmetric_identity,
        },
    ];
    &ALL
}

/// Runs one certificate, enforcing its time limit or stretch budget.
pub fn run_certificate(cert: &Certificate, opts: &Options) -> CheckReport {
    let ctx = Context {
        exec: opts.exec,
        seed: opts.seed,
        perturbed: opts.perturb.as_deref() == Some(cert.id),
        cancel: cert.stretch.then(CancelToken::new),
    };
    let start = Instant::now();
    let result =
        if cert.stretch { run_with_budget(cert.run, ctx.clone(), opts.stretch_budget) } else { Some((cert.run)(&ctx)) };
    let elapsed = start.elapsed();
    let (status, detail) = match result {
        None => (Status::Timeout, format!("budget of {} s exhausted", opts.stretch_budget.as_secs())),
        Some(Err(e)) => (Status::Fail, format!("error: {e}")),
        Some(Ok(o)) => match cert.limit {
            Some(limit) if o.passed && elapsed > limit => {
                (Status::Fail, format!("{}; exceeded the {} ms limit", o.detail, limit.as_millis()))
            }
            _ => (if o.passed { Status::Pass } else { Status::Fail }, o.detail),
        },
    };
    CheckReport {
        id: cert.id,
        criterion: cert.criterion,
        topic: cert.topic,
        title: cert.title,
        status,
        detail,
        millis: elapsed.as_millis(),
    }
}

/// `None` when the budget ran out; the body is then cancelled and joined.
fn run_with_budget(run: fn(&Context) -> Result<Outcome>, ctx: Context, budget: Duration) -> Option<Result<Outcome>> {
    let (tx, rx) = mpsc::channel();
    let token = ctx.cancel.clone();
    let handle = std::thread::spawn(move || {
        let _ = tx.send(run(&ctx));
    });
    match rx.recv_timeout(budget) {
        Ok(r) => {
            let _ = handle.join();
            Some(r)
        }
        Err(_) => {
            if let Some(t) = token {
                t.cancel();
            }
            let _ = handle.join();
            None
        }
    }
}

/// Runs the selected certificates in order.
pub fn run_certificates(opts: &Options) -> Result<Report> {
    if let Some(id) = &opts.perturb {
        match certificates().iter().find(|c| c.id == id) {
            Some(c) if c.perturbable => {}
            Some(_) => {
                return Err(Error::InvalidArgument(format!("certificate '{id}' has no literal expectation to perturb")))
            }
            None => return Err(Error::InvalidArgument(format!("unknown certificate '{id}'"))),
        }
    }
    let checks = certificates()
        .iter()
        .filter(|c| opts.only.as_ref().is_none_or(|t| t.contains(&c.topic)))
        .filter(|c| opts.ids.as_ref().is_none_or(|ids| ids.contains(c.id)))
        .filter(|c| !(c.stretch && opts.skip_stretch))
        .map(|c| run_certificate(c, opts))
        .collect();
    Ok(Report { checks })
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn parse(text: &str, vars: &[&str], mode: RingMode) -> Result<MultiPoly> {
    parse_polynomial(text, &names(vars), mode)
}

fn list(fs: &[MultiPoly], vars: &[&str]) -> String {
    let n = names(vars);
    fs.iter().map(|f| format_polynomial(f, &n)).collect::<Vec<_>>().join(", ")
}

fn phis(exps: &[(u64, u32)]) -> QPoly {
    cyclotomic_product(&exps.iter().copied().collect())
}

/// Collects failures from a sample sweep; stops listing after a few.
fn summarize(total: usize, failures: Vec<String>, what: &str) -> Outcome {
    if failures.is_empty() {
        Outcome::new(true, format!("{total} {what} agree"))
    } else {
        let shown: Vec<&String> = failures.iter().take(3).collect();
        Outcome::new(false, format!("{}/{total} {what} disagree, e.g. {shown:?}", failures.len()))
    }
}

fn sweep<T: Sync>(
    ctx: &Context,
    items: &[T],
    check: impl Fn(&T) -> Result<Option<String>> + Sync + Send,
) -> Result<Vec<String>> {
    let results = ctx.exec.map(items, |item| check(item));
    let mut failures = Vec::new();
    for r in results {
        if let Some(f) = r? {
            failures.push(f);
        }
    }
    Ok(failures)
}

fn line_closure_basis(ctx: &Context) -> Result<Outcome> {
    const XY: [&str; 2] = ["x", "y"];
    let f = parse("y - 2*x", &XY, RingMode::Polynomial)?;
    let closure = ctx.ideal(2, RingMode::Polynomial, vec![f])?.power_closure()?;
    let basis = closure.canonical_basis()?;
    let want = if ctx.perturbed { "x^3" } else { "x^2" };
    let expected = vec![parse("y - 2*x", &XY, RingMode::Polynomial)?, parse(want, &XY, RingMode::Polynomial)?];
    Ok(Outcome::new(basis.elements() == expected.as_slice(), format!("basis {{{}}}", list(basis.elements(), &XY))))
}

fn intersection_strictness(ctx: &Context) -> Result<Outcome> {
    const XY: [&str; 2] = ["x", "y"];
    let poly = |s: &str| parse(s, &XY, RingMode::Polynomial);
    let i = ctx.ideal(2, RingMode::Polynomial, vec![poly("y - 2*x")?])?;
    let j = ctx.ideal(2, RingMode::Polynomial, vec![poly("y - 3*x")?])?;
    let x2 = poly("x^2")?;
    let closures_meet = i.power_closure()?.intersect(&j.power_closure()?)?;
    let square = ctx.ideal(2, RingMode::Polynomial, vec![poly("x^2")?, poly("x*y")?, poly("y^2")?])?;
    let meet = i.intersect(&j)?;
    let meet_is_product = meet.equals(&i.product(&j)?)?;
    let meet_closure = meet.power_closure()?;
    let in_meet_of_closures = closures_meet.contains(&x2)?;
    let in_closure_of_meet = meet_closure.contains(&x2)?;
    let equal_square = closures_meet.equals(&square)?;
    let passed = equal_square && meet_is_product && in_meet_of_closures && !in_closure_of_meet;
    Ok(Outcome::new(
        passed,
        format!(
            "closures meet = (x,y)^2: {equal_square}; x^2 in it: {in_meet_of_closures}; x^2 in closure of meet: {in_closure_of_meet}"
        ),
    ))
}

fn star_circle_exponents(ctx: &Context) -> Result<Outcome> {
    let f = phis(&[(12, 6), (8, 3), (6, 5), (4, 4), (3, 2), (2, 3), (1, 4)]);
    let star_want = phis(&[(12, if ctx.perturbed { 3 } else { 2 }), (8, 3), (6, 2), (4, 3), (3, 2), (2, 3), (1, 4)]);
    let circle_want = phis(&[(12, 6), (8, 3), (6, 6), (4, 6), (3, 6), (2, 6), (1, 6)]);
    let mut problems = Vec::new();
    if star(&f)? != star_want {
        problems.push("star exponents");
    }
    if circle(&f)? != PowerInterior::Generator(circle_want) {
        problems.push("circle exponents");
    }
    let powered = phis(&[(12, 2), (8, 2), (6, 2), (4, 3), (3, 2), (2, 3), (1, 4)]);
    let unpowered = phis(&[(12, 2), (8, 3), (6, 2), (4, 2), (3, 2), (2, 3), (1, 4)]);
    if !is_powered(&powered)? || is_powered(&unpowered)? {
        problems.push("powered verdicts");
    }
    let f = phis(&[(4, 2), (2, 1), (1, 2)]);
    let g = phis(&[(2, 2), (1, 1)]);
    let l = f.lcm(&g)?;
    let lcm_of_stars = star(&f)?.lcm(&star(&g)?)?;
    if star(&l)? != l || lcm_of_stars == l || lcm_of_stars != phis(&[(4, 1), (2, 1), (1, 2)]) {
        problems.push("lcm strictness");
    }
    let m = f.gcd(&g)?;
    let generator = |p: PowerInterior| p.generator().cloned().ok_or(Error::NotPowered);
    let gcd_of_circles = generator(circle(&f)?)?.gcd(&generator(circle(&g)?)?)?;
    if circle(&m)? != PowerInterior::Generator(m.clone())
        || gcd_of_circles == m
        || gcd_of_circles != phis(&[(2, 2), (1, 2)])
    {
        problems.push("gcd strictness");
    }
    Ok(if problems.is_empty() {
        Outcome::new(true, "star, circle, verdicts and both strict inclusions reproduced")
    } else {
        Outcome::new(false, format!("mismatch in {}", problems.join(", ")))
    })
}

fn random_cyclotomic_input(rng: &mut ChaCha8Rng) -> QPoly {
    let extras: [&[i64]; 5] = [&[1], &[-2, 1], &[3, 0, 1], &[1, 1, 2], &[5, -1, 0, 1]];
    let mut f = QPoly::from_ints(extras.choose(rng).expect("nonempty")).shift_up(rng.gen_range(0..2));
    for _ in 0..rng.gen_range(1..=4) {
        f = f.mul(&cyclotomic_poly(rng.gen_range(1..=24)).pow(rng.gen_range(1..=4)));
    }
    f
}

fn star_gcd_oracle(ctx: &Context) -> Result<Outcome> {
    let mut rng = ctx.rng(4);
    let inputs: Vec<QPoly> = (0..200).map(|_| random_cyclotomic_input(&mut rng)).collect();
    let failures = sweep(ctx, &inputs, |f| {
        let fast = star(f)?;
        let oracle = star_via_gcd(f)?;
        Ok((fast != oracle).then(|| format!("{f}")))
    })?;
    Ok(summarize(inputs.len(), failures, "random polynomials"))
}

fn psi_decomposition(ctx: &Context) -> Result<Outcome> {
    let f = phis(&[(12, 2), (8, 2), (6, 2), (4, 3), (3, 2), (2, 3), (1, 4)]);
    let d = psi_decompose(&f)?;
    let ac = |v: &[u64]| Antichain::new(v.iter().copied());
    let expected = vec![(ac(&[12, 8])?, if ctx.perturbed { 3 } else { 2 }), (ac(&[4])?, 1), (ac(&[1])?, 1)];
    let mut problems = Vec::new();
    if d.factors != expected {
        problems.push(format!("decomposition {d}"));
    }
    if d.binomial_quotient().evaluate()? != f {
        problems.push("quotient does not re-expand".into());
    }

    let mut rng = ctx.rng(5);
    for _ in 0..50 {
        let picks: BTreeSet<u64> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(1..=30)).collect();
        let a = Antichain::maximal_of(&picks);
        let by_lcm =
            a.elements().iter().try_fold(QPoly::one(), |acc, &n| acc.lcm(&QPoly::x_pow_minus_one(n as usize)))?;
        let quotient = BinomialQuotient::for_antichain(&a).evaluate()?;
        if quotient != by_lcm || psi_poly(&a)? != by_lcm {
            problems.push(format!("antichain {a}"));
        }
    }

    let s = |v: &[u64]| psi_of_set(&v.iter().copied().collect());
    let g = crate::arith::gcd;
    let (a, b, c) = (4u64, 6u64, 9u64);
    let products = [
        s(&[a, b]).mul(&s(&[c])).mul(&s(&[g(a, b)])),
        s(&[a, c]).mul(&s(&[b])).mul(&s(&[g(a, c)])),
        s(&[b, c]).mul(&s(&[a])).mul(&s(&[g(b, c)])),
        s(&[a, b, c]).mul(&s(&[g(a, b), g(a, c), g(b, c)])).mul(&s(&[g(g(a, b), c)])),
    ];
    if products.windows(2).any(|w| w[0] != w[1]) {
        problems.push("psi products over {4,6,9} differ".into());
    }
    Ok(if problems.is_empty() {
        Outcome::new(true, format!("{d}; 50 antichains re-expand; four products agree"))
    } else {
        Outcome::new(false, problems.join("; "))
    })
}

const XYZ: [&str; 3] = ["x", "y", "z"];
const PLANE: &str = "z - (1/2 + sqrt(2))*x - (1/2 - sqrt(2))*y";

fn laurent_plane_closure(ctx: &Context) -> Result<Outcome> {
    let f = parse(PLANE, &XYZ, RingMode::Laurent)?;
    let closure = ctx.ideal(3, RingMode::Laurent, vec![f.clone()])?.power_closure()?;
    let square = if ctx.perturbed { "(y - x)^3" } else { "(y - x)^2" };
    let target = ctx.ideal(3, RingMode::Laurent, vec![f, parse(square, &XYZ, RingMode::Laurent)?])?;
    let equal = closure.equals(&target)?;
    let basis = closure.canonical_basis()?;
    Ok(Outcome::new(equal, format!("saturated basis {{{}}}", list(basis.elements(), &XYZ))))
}

fn laurent_intersection_strictness(ctx: &Context) -> Result<Outcome> {
    const SECOND: &str = "z - (1/2 + 2*sqrt(2))*x - (1/2 - 2*sqrt(2))*y";
    // the carried generators with z = 1, as polynomials in x and y
    let mut carried = Vec::new();
    for i in 1..=6 {
        let a = format!("(1 - (1/2 + sqrt(2))*x^{i} - (1/2 - sqrt(2))*y^{i})");
        let b = format!("(1 - (1/2 + 2*sqrt(2))*x^{i} - (1/2 - 2*sqrt(2))*y^{i})");
        carried.push(parse(&format!("{a}*{b}"), &XYZ[..2], RingMode::Polynomial)?);
    }
    let target = parse("(x*y)^12*(y - x)^2", &XYZ[..2], RingMode::Polynomial)?;
    let in_carried = ctx.ideal(2, RingMode::Polynomial, carried)?.contains(&target)?;

    // the same question in the Laurent ring, through saturation
    let product = parse(PLANE, &XYZ, RingMode::Laurent)?.mul(&parse(SECOND, &XYZ, RingMode::Laurent)?);
    let closure = ctx.ideal(3, RingMode::Laurent, vec![product])?.power_closure()?;
    let in_laurent = closure.contains(&parse("(y - x)^2", &XYZ, RingMode::Laurent)?)?;
    let in_each = [PLANE, SECOND].iter().try_fold(true, |acc, s| -> Result<bool> {
        let c = ctx.ideal(3, RingMode::Laurent, vec![parse(s, &XYZ, RingMode::Laurent)?])?.power_closure()?;
        Ok(acc && c.contains(&parse("(y - x)^2", &XYZ, RingMode::Laurent)?)?)
    })?;
    Ok(Outcome::new(
        !in_carried && !in_laurent && in_each,
        format!(
            "in carried ideal: {in_carried}; (y-x)^2 in Laurent closure of product: {in_laurent}; in both closures: {in_each}"
        ),
    ))
}

fn random_poly(rng: &mut ChaCha8Rng, d: usize) -> MultiPoly {
    loop {
        let terms = (0..rng.gen_range(1..=3)).map(|_| {
            let mut e = vec![0i32; d];
            let deg = rng.gen_range(0..=3);
            for _ in 0..deg {
                e[rng.gen_range(0..d)] += 1;
            }
            let c = *[-3i64, -2, -1, 1, 2, 3].choose(rng).expect("nonempty");
            (Monomial::new(e), FieldElement::integer(c))
        });
        let f = MultiPoly::from_terms(d, terms);
        if !f.is_zero() && !f.is_constant() {
            return f;
        }
    }
}

fn closure_operator_laws(ctx: &Context) -> Result<Outcome> {
    let mut rng = ctx.rng(8);
    let samples: Vec<(usize, Vec<MultiPoly>, Vec<MultiPoly>)> = (0..100)
        .map(|_| {
            let d = rng.gen_range(1..=3);
            let i = (0..rng.gen_range(1..=2)).map(|_| random_poly(&mut rng, d)).collect();
            let j = (0..rng.gen_range(1..=2)).map(|_| random_poly(&mut rng, d)).collect();
            (d, i, j)
        })
        .collect();
    let mut failures = sweep(ctx, &samples, |(d, gi, gj)| {
        let inner = Context { exec: Exec::Sequential, ..ctx.clone() };
        let i = inner.ideal(*d, RingMode::Polynomial, gi.clone())?;
        let j = inner.ideal(*d, RingMode::Polynomial, gj.clone())?;
        let ic = i.power_closure()?;
        let jc = j.power_closure()?;
        let sum = i.sum(&j)?;
        let sc = sum.power_closure()?;
        let mut broken = Vec::new();
        if !i.is_subset_of(&ic)? {
            broken.push("extensive");
        }
        if !ic.power_closure()?.equals(&ic)? {
            broken.push("idempotent");
        }
        if !ic.is_subset_of(&sc)? {
            broken.push("monotone");
        }
        if !sc.equals(&ic.sum(&jc)?)? {
            broken.push("sum exchange");
        }
        if !ic.product(&jc)?.is_power_closed()? {
            broken.push("product closed");
        }
        Ok((!broken.is_empty()).then(|| format!("d={d} I={gi:?} J={gj:?}: {}", broken.join(","))))
    })?;

    // compositions in one variable, where the interior is exact
    let uni: Vec<QPoly> = (0..100).map(|_| random_cyclotomic_input(&mut rng)).collect();
    failures.extend(sweep(ctx, &uni, |f| {
        let s = star(f)?;
        let ok = match circle(f)? {
            PowerInterior::Zero => star(&s)? == s,
            PowerInterior::Generator(c) => {
                star(&c)? == c.monic()
                    && circle(&s)? == PowerInterior::Generator(s.clone())
                    && s.divides(f)?
                    && f.divides(&c)?
            }
        };
        Ok((!ok).then(|| format!("univariate {f}")))
    })?);
    Ok(summarize(200, failures, "samples (100 ideal pairs, 100 univariate)"))
}

/// Exponent maps `n -> e_n` over `1..=6` with `sum e_n phi(n) * step <= budget`.
fn cyclotomic_budgets(budget: u64, step: u64) -> Vec<BTreeMap<u64, u32>> {
    fn go(n: u64, left: u64, step: u64, cur: &mut BTreeMap<u64, u32>, out: &mut Vec<BTreeMap<u64, u32>>) {
        if n > 6 {
            out.push(cur.clone());
            return;
        }
        let cost = euler_phi(n) * step;
        let mut e = 0u32;
        loop {
            if e > 0 {
                cur.insert(n, e);
            }
            go(n + 1, left - u64::from(e) * cost, step, cur, out);
            cur.remove(&n);
            if (u64::from(e) + 1) * cost > left {
                break;
            }
            e += 1;
        }
    }
    let mut out = Vec::new();
    go(1, budget, step, &mut BTreeMap::new(), &mut out);
    out
}

/// Factors `(xi - zeta)` for every primitive root of every order present.
fn orbit_factors(xi: &Monomial, exps: &BTreeMap<u64, u32>) -> Result<Vec<Factor>> {
    let mut out = Vec::new();
    for (&n, &e) in exps {
        for k in (0..n).filter(|&k| crate::arith::gcd(k, n) == 1) {
            out.push(Factor { xi: xi.clone(), rho: Root::unity(n, k)?, multiplicity: e });
        }
    }
    Ok(out)
}

fn homogeneous_degree(xi: &Monomial) -> u64 {
    let (p, q) = xi.split_signs();
    p.degree().max(q.degree()) as u64
}

/// Classifier inputs over all small binomial products.
fn classifier_sweep() -> Result<Vec<FactoredPrincipal>> {
    let xis: [(usize, &[&[i32]]); 3] = [
        (1, &[&[1]]),
        (2, &[&[1, -1], &[2, -1], &[1, 1], &[1, -2]]),
        (3, &[&[1, -1, 0], &[1, 1, -1], &[1, 0, -1], &[0, 1, -1]]),
    ];
    let mut out = Vec::new();
    for (d, list) in xis {
        let monos: Vec<Monomial> = list.iter().map(|e| Monomial::new(e.iter().copied())).collect();
        // one group using the whole degree budget, plus a single in-field root
        for xi in &monos {
            let step = homogeneous_degree(xi);
            for exps in cyclotomic_budgets(6, step) {
                let base = orbit_factors(xi, &exps)?;
                let used: u64 = exps.iter().map(|(&n, &e)| euler_phi(n) * u64::from(e) * step).sum();
                out.push(FactoredPrincipal::new(d, FieldElement::one(), Monomial::one(d), base.clone())?);
                if used + step <= 6 {
                    for (m, n, k) in [(-1i64, 4u64, 1u64), (-3, 3, 1), (-3, 6, 5)] {
                        let mut factors = base.clone();
                        factors.push(Factor { xi: xi.clone(), rho: Root::unity(n, k)?, multiplicity: 1 });
                        out.push(FactoredPrincipal::new(d, FieldElement::sqrt(m)?, Monomial::one(d), factors)?);
                    }
                    let mut factors = base.clone();
                    factors.push(Factor {
                        xi: xi.clone(),
                        rho: Root::scalar(FieldElement::integer(2)),
                        multiplicity: 1,
                    });
                    out.push(FactoredPrincipal::new(d, FieldElement::one(), Monomial::one(d), factors)?);
                }
            }
        }
        // two groups with half the budget each, and a monomial prefix
        for (a, xa) in monos.iter().enumerate() {
            for xb in &monos[a + 1..] {
                for ea in cyclotomic_budgets(3, homogeneous_degree(xa)) {
                    for eb in cyclotomic_budgets(3, homogeneous_degree(xb)) {
                        let mut factors = orbit_factors(xa, &ea)?;
                        factors.extend(orbit_factors(xb, &eb)?);
                        out.push(FactoredPrincipal::new(d, FieldElement::one(), Monomial::var(d, 0), factors)?);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn random_factored(rng: &mut ChaCha8Rng) -> Result<FactoredPrincipal> {
    let d = rng.gen_range(1..=3);
    let radicand = *[None, Some(-1i64), Some(-3)].choose(rng).expect("nonempty");
    let scalar = match radicand {
        Some(m) => FieldElement::sqrt(m)?,
        None => FieldElement::one(),
    };
    let mut factors = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let xi = loop {
            let e: Vec<i32> = (0..d).map(|_| rng.gen_range(-2..=2)).collect();
            if e.iter().any(|&x| x != 0) {
                break Monomial::new(e);
            }
        };
        let multiplicity = rng.gen_range(1..=2);
        match rng.gen_range(0..4) {
            0 => {
                let n = rng.gen_range(1..=6);
                factors.extend(orbit_factors(&xi, &BTreeMap::from([(n, multiplicity)]))?);
            }
            1 => {
                let roots: Vec<(u64, u64)> = match radicand {
                    Some(-1) => vec![(1, 0), (2, 1), (4, 1), (4, 3)],
                    Some(_) => vec![(1, 0), (2, 1), (3, 1), (3, 2), (6, 1), (6, 5)],
                    None => vec![(1, 0), (2, 1)],
                };
                let (n, k) = *roots.choose(rng).expect("nonempty");
                factors.push(Factor { xi, rho: Root::unity(n, k)?, multiplicity });
            }
            2 => {
                let c = *[(2i64, 1i64), (-1, 2), (3, 1), (-5, 3)].choose(rng).expect("nonempty");
                let rho = Root::scalar(FieldElement::rational(Rational::new(c.0, c.1)?));
                factors.push(Factor { xi, rho, multiplicity });
            }
            _ => {
                let n = rng.gen_range(1..=6);
                factors.extend(orbit_factors(&xi, &BTreeMap::from([(n, 1)]))?);
                factors.extend(orbit_factors(&xi, &BTreeMap::from([(2 * n, 1)]))?);
            }
        }
    }
    let prefix = Monomial::new((0..d).map(|_| rng.gen_range(0..=1)));
    FactoredPrincipal::new(d, scalar, prefix, factors)
}

fn principal_classifier(ctx: &Context) -> Result<Outcome> {
    let mut inputs = classifier_sweep()?;
    let swept = inputs.len();
    let mut rng = ctx.rng(9);
    let mut randoms = Vec::new();
    while randoms.len() < 50 {
        let f = random_factored(&mut rng)?;
        if expand(&f)?.total_degree().unwrap_or(0) <= 12 {
            randoms.push(f);
        }
    }
    let non_root = randoms.iter().filter(|f| f.factors.iter().any(|x| matches!(x.rho, Root::Scalar(_)))).count();
    inputs.extend(randoms);
    let failures = sweep(ctx, &inputs, |f| {
        let inner = Context { exec: Exec::Sequential, ..ctx.clone() };
        let g = expand(f)?;
        let mut mismatches = Vec::new();
        for mode in [RingMode::Polynomial, RingMode::Laurent] {
            let verdict = classify_principal(f, mode, &TermOrder::deglex(f.nvars))?;
            let groebner = inner.ideal(f.nvars, mode, vec![g.clone()])?.is_power_closed()?;
            if verdict.power_closed != groebner {
                mismatches.push(format!("{mode:?}: classifier {} vs groebner {groebner}", verdict.power_closed));
            }
        }
        Ok((!mismatches.is_empty()).then(|| format!("{g}: {}", mismatches.join("; "))))
    })?;
    let mut out = summarize(inputs.len(), failures, "inputs");
    out.detail =
        format!("{} ({swept} swept, 50 random of which {non_root} have a non-root-of-unity factor)", out.detail);
    Ok(out)
}

fn radical_structure(ctx: &Context) -> Result<Outcome> {
    const XY: [&str; 2] = ["x", "y"];
    let poly = |s: &str| parse(s, &XY, RingMode::Polynomial);
    let mut problems = Vec::new();

    let i = ctx.ideal(2, RingMode::Polynomial, vec![poly("x + y")?, poly("x*y")?])?;
    let both_in_radical = i.radical_member(&poly("x")?)? && i.radical_member(&poly("y")?)?;
    let inside = i.is_subset_of(&ctx.ideal(2, RingMode::Polynomial, vec![poly("x")?, poly("y")?])?)?;
    if !both_in_radical || !inside || i.radical_member(&poly("x + 1")?)? {
        problems.push("sqrt(x + y, xy) is not (x, y)".to_string());
    }

    let mut rng = ctx.rng(10);
    let vectors: Vec<Vec<FieldElement>> = (0..50)
        .map(|_| {
            let d = rng.gen_range(1..=4);
            (0..d)
                .map(|_| {
                    let c = *[-2i64, -1, -1, 1, 1, 2].choose(&mut rng).expect("nonempty");
                    if rng.gen_bool(0.15) {
                        FieldElement::quadratic(Rational::integer(c), Rational::integer(1), 2).expect("radicand")
                    } else {
                        FieldElement::integer(c)
                    }
                })
                .collect()
        })
        .collect();
    let failures = sweep(ctx, &vectors, |a| {
        let radical = radical_of_linear_closure(a, Exec::Sequential)?;
        let check = validate_linear_radical(a, &radical, Exec::Sequential)?;
        Ok((!check.passed()).then(|| format!("{a:?}: {check:?}")))
    })?;
    if !failures.is_empty() {
        problems.push(summarize(vectors.len(), failures, "coefficient vectors").detail);
    }

    let group = TorusSubgroup::from_lattice(ExponentLattice::span(2, &[vec![2, -2]])?);
    let want = IsoType { torus_rank: 1, invariants: vec![if ctx.perturbed { 4 } else { 2 }] };
    let iso = group.iso_type();
    if iso != want {
        problems.push(format!("iso type {iso}"));
    }

    let point = TorusPoint::from_roots(&[Some((2, 1)), Some((2, 1))])?;
    let vanishing = it_generators(&point)?.with_config(ctx.gb());
    if !vanishing.contains(&poly("x - y")?)? {
        problems.push("x - y missing from the vanishing ideal of (-1,-1)".into());
    }
    Ok(if problems.is_empty() {
        Outcome::new(true, format!("radical (x,y); 50 linear radicals validated; iso type {iso}; x - y found"))
    } else {
        Outcome::new(false, problems.join("; "))
    })
}

fn symmetric_identity(ctx: &Context) -> Result<Outcome> {
    let mut problems = Vec::new();
    let mut count = 0;
    for d in 1..=5 {
        for l in 1..=d {
            for n in d + 1..=d + 4 {
                count += 1;
                if !newton_power_identity_check(d, n, l)? {
                    problems.push(format!("identity d={d} n={n} l={l}"));
                }
            }
        }
    }
    let mut rng = ctx.rng(11);
    let forms: Vec<MultiPoly> = (0..20)
        .map(|_| {
            let d = rng.gen_range(2..=4);
            MultiPoly::from_terms(
                d,
                (0..d).map(|j| {
                    let c = loop {
                        let c = rng.gen_range(-5i64..=5);
                        if c != 0 {
                            break c;
                        }
                    };
                    (Monomial::var(d, j), FieldElement::integer(c))
                }),
            )
        })
        .collect();
    let failures = sweep(ctx, &forms, |f| {
        let inner = Context { exec: Exec::Sequential, ..ctx.clone() };
        let d = f.nvars();
        let substitutions = (1..=d as i64).map(|i| f.power_substitute(i, false)).collect::<Result<Vec<_>>>()?;
        let a = inner.ideal(d, RingMode::Polynomial, substitutions)?.canonical_basis()?;
        let b = inner.ideal(d, RingMode::Polynomial, Ideal::triangular_closure_generators(f)?)?.canonical_basis()?;
        Ok((a.elements() != b.elements()).then(|| f.to_string()))
    })?;
    if !failures.is_empty() {
        problems.push(summarize(forms.len(), failures, "linear forms").detail);
    }
    Ok(if problems.is_empty() {
        Outcome::new(true, format!("{count} identities hold; 20 triangular generator sets match"))
    } else {
        Outcome::new(false, problems.join("; "))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budgets_respect_degree() {
        let all = cyclotomic_budgets(2, 1);
        // 1, phi1, phi1^2, phi2, phi2^2, phi1 phi2, phi3, phi4, phi6
        assert!(all.contains(&BTreeMap::new()));
        assert!(all.contains(&BTreeMap::from([(1, 2)])));
        assert!(all.contains(&BTreeMap::from([(4, 1)])));
        assert!(!all.contains(&BTreeMap::from([(5, 1)])));
        assert_eq!(all.len(), 9);
    }

    #[test]
    fn topics_round_trip() {
        for t in Topic::ALL {
            assert_eq!(Topic::parse(t.name()), Some(t));
        }
        assert_eq!(Topic::parse("sec5"), None);
    }

    #[test]
    fn perturbation_must_target_a_literal() {
        let opts = Options { perturb: Some("star-gcd-oracle".into()), ..Options::default() };
        assert!(run_certificates(&opts).is_err());
        let opts = Options { perturb: Some("nope".into()), ..Options::default() };
        assert!(run_certificates(&opts).is_err());
    }

    #[test]
    fn perturbed_expectation_fails() {
        let opts = Options {
            ids: Some(BTreeSet::from(["star-circle-exponents".to_string(), "line-closure-basis".to_string()])),
            perturb: Some("star-circle-exponents".into()),
            ..Options::default()
        };
        let report = run_certificates(&opts).unwrap();
        assert_eq!(report.checks.len(), 2);
        assert_eq!(report.checks[0].status, Status::Pass);
        assert_eq!(report.checks[1].status, Status::Fail);
        assert!(!report.all_passed());
    }
}
