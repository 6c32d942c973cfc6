//! Zero loci and radicals of power-closed ideals: the closure of a linear
//! form, torus subgroups cut out by binomials, and the ideals of finite
//! power-orbits of torus points.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::arith::gcd;
use crate::cyclotomic::{cyclotomic_poly, QPoly};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::{Field, FieldElement, Rational};
use crate::ideal::{Ideal, RingMode};
use crate::lattice::{left_kernel, ExponentLattice};
use crate::multipoly::{Monomial, MultiPoly, TermOrder};

/// Largest dimension for which subsets are enumerated.
pub const MAX_SUBSET_DIM: usize = 24;

/// Index sets `A` (zero-based) whose coefficients sum to zero. Each one
/// gives the line `t * sum_{i in A} e_i` inside the zero locus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineFamily {
    pub dim: usize,
    pub subsets: Vec<Vec<usize>>,
}

impl fmt::Display for LineFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sets: Vec<String> = self
            .subsets
            .iter()
            .map(|s| format!("{{{}}}", s.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{}", sets.join(" "))
    }
}

fn check_coefficients(a: &[FieldElement]) -> Result<()> {
    if a.is_empty() || a.iter().all(Field::is_zero) {
        return Err(Error::InvalidArgument("coefficient vector must be nonzero".into()));
    }
    if a.len() > MAX_SUBSET_DIM {
        return Err(Error::InvalidArgument(format!("at most {MAX_SUBSET_DIM} coefficients are supported")));
    }
    let mut rad = None;
    for c in a {
        if let Some(m) = c.radicand() {
            match rad {
                Some(r) if r != m => return Err(Error::MixedRadicand(r, m)),
                _ => rad = Some(m),
            }
        }
    }
    Ok(())
}

fn mask_to_set(mask: u64, d: usize) -> Vec<usize> {
    (0..d).filter(|i| mask >> i & 1 == 1).collect()
}

fn zero_sum_masks(a: &[FieldElement], exec: Exec) -> Vec<u64> {
    let d = a.len();
    exec.map_range(1..1u64 << d, |mask| {
        let s = (0..d).filter(|i| mask >> i & 1 == 1).fold(FieldElement::zero(), |acc, i| acc.add(&a[i]));
        s.is_zero().then_some(mask)
    })
    .into_iter()
    .flatten()
    .collect()
}

/// All nonempty subsets with zero coefficient sum, ordered by bitmask.
pub fn zero_sum_lines(a: &[FieldElement], exec: Exec) -> Result<LineFamily> {
    check_coefficients(a)?;
    let d = a.len();
    Ok(LineFamily { dim: d, subsets: zero_sum_masks(a, exec).into_iter().map(|m| mask_to_set(m, d)).collect() })
}

/// `sum a_i x_i` in `a.len()` variables.
pub fn linear_form(a: &[FieldElement]) -> MultiPoly {
    let d = a.len();
    MultiPoly::from_terms(d, a.iter().enumerate().map(|(i, c)| (Monomial::var(d, i), c.clone())))
}

/// Whether `f` vanishes identically on the line `t * sum_{i in A} e_i`.
pub fn vanishes_on_line(f: &MultiPoly, subset: &[usize]) -> Result<bool> {
    let images: Vec<MultiPoly> =
        (0..f.nvars()).map(|i| if subset.contains(&i) { MultiPoly::var(1, 0) } else { MultiPoly::zero(1) }).collect();
    Ok(f.compose(&images)?.is_zero())
}

/// An irreducible component of the zero locus of the closure of a linear
/// form: coordinates are equal inside each block and zero off the blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearComponent {
    pub blocks: Vec<Vec<usize>>,
}

impl LinearComponent {
    /// The prime ideal of the component.
    pub fn ideal_generators(&self, d: usize) -> Vec<MultiPoly> {
        let covered: Vec<usize> = self.blocks.iter().flatten().copied().collect();
        let mut gens: Vec<MultiPoly> = (0..d).filter(|j| !covered.contains(j)).map(|j| MultiPoly::var(d, j)).collect();
        for b in &self.blocks {
            for w in b.windows(2) {
                gens.push(MultiPoly::var(d, w[0]).sub(&MultiPoly::var(d, w[1])));
            }
        }
        gens
    }

    pub fn dimension(&self) -> usize {
        self.blocks.len()
    }
}

/// Components of `Z((f)^(*))` for `f = sum a_i x_i`.
///
/// A point lies in the zero locus iff, for each nonzero value `c`, the
/// coefficients at the coordinates equal to `c` sum to zero. Components are
/// therefore indexed by maximal families of pairwise disjoint, minimal
/// zero-sum subsets. With no zero-sum subset the locus is the origin.
pub fn linear_closure_components(a: &[FieldElement], exec: Exec) -> Result<Vec<LinearComponent>> {
    check_coefficients(a)?;
    let masks = zero_sum_masks(a, exec);
    let minimal: Vec<u64> = masks.iter().copied().filter(|&m| !masks.iter().any(|&s| s != m && s & m == s)).collect();
    let mut families: Vec<Vec<u64>> = Vec::new();
    let mut current = Vec::new();
    maximal_disjoint(&minimal, 0, 0, &mut current, &mut families);
    let d = a.len();
    Ok(families
        .into_iter()
        .map(|fam| LinearComponent { blocks: fam.into_iter().map(|m| mask_to_set(m, d)).collect() })
        .collect())
}

/// Enumerates maximal sets of pairwise disjoint masks from `sets[from..]`.
fn maximal_disjoint(sets: &[u64], from: usize, used: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    let next = (from..sets.len()).find(|&i| sets[i] & used == 0);
    let Some(i) = next else {
        // maximal only if no skipped set could still be added
        if sets.iter().all(|&s| s & used != 0) {
            out.push(current.clone());
        }
        return;
    };
    current.push(sets[i]);
    maximal_disjoint(sets, i + 1, used | sets[i], current, out);
    current.pop();
    maximal_disjoint(sets, i + 1, used, current, out);
}

/// Generators `f^(i)`, `1 <= i <= lambda(f)`, of the closure of `(f)`.
pub fn linear_closure(a: &[FieldElement]) -> Result<Ideal> {
    check_coefficients(a)?;
    Ideal::polynomial(a.len(), vec![linear_form(a)])?.power_closure()
}

/// `sqrt((f)^(*))` for a linear form, as the intersection of the primes of
/// [`linear_closure_components`].
pub fn radical_of_linear_closure(a: &[FieldElement], exec: Exec) -> Result<Ideal> {
    let d = a.len();
    let comps = linear_closure_components(a, exec)?;
    let mut primes = comps.iter().map(|c| Ideal::polynomial(d, c.ideal_generators(d)));
    let first = match primes.next() {
        Some(p) => p?,
        None => Ideal::polynomial(d, (0..d).map(|j| MultiPoly::var(d, j)).collect())?,
    };
    let mut acc = first;
    for p in primes {
        acc = acc.intersect(&p?)?;
    }
    let gb = acc.groebner(&TermOrder::deglex(d))?;
    Ideal::polynomial(d, gb.elements().to_vec())
}

/// Outcome of checking a candidate radical in both directions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadicalCheck {
    /// Every generator of the candidate has a power in the closure.
    pub candidate_in_radical: bool,
    /// Every generator of the closure lies in the candidate.
    pub closure_in_candidate: bool,
}

impl RadicalCheck {
    pub fn passed(&self) -> bool {
        self.candidate_in_radical && self.closure_in_candidate
    }
}

/// Checks `R ⊆ sqrt((f)^(*))` by Rabinowitsch and `(f)^(*) ⊆ R` by
/// membership; `R` is an intersection of primes, hence radical, so both
/// together give equality.
pub fn validate_linear_radical(a: &[FieldElement], radical: &Ideal, exec: Exec) -> Result<RadicalCheck> {
    let closure = linear_closure(a)?;
    let gens = radical.generators().to_vec();
    let in_radical = exec.map(&gens, |g| closure.radical_member(g));
    let candidate_in_radical = in_radical.into_iter().collect::<Result<Vec<_>>>()?.into_iter().all(|b| b);
    let closure_in_candidate = radical.contains_all(closure.generators())?;
    Ok(RadicalCheck { candidate_in_radical, closure_in_candidate })
}

/// `{w in T^d : w^v = 1 for all v in L}` for an exponent lattice `L`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TorusSubgroup {
    pub lattice: ExponentLattice,
}

/// `T^r × Z/n_1 × ... × Z/n_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoType {
    pub torus_rank: usize,
    pub invariants: Vec<i64>,
}

impl fmt::Display for IsoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.torus_rank > 0 {
            parts.push(format!("T^{}", self.torus_rank));
        }
        parts.extend(self.invariants.iter().map(|n| format!("Z/{n}")));
        if parts.is_empty() {
            parts.push("1".into());
        }
        write!(f, "{}", parts.join(" x "))
    }
}

/// Exponents and coefficients of a two-term Laurent polynomial.
fn binomial_parts(b: &MultiPoly) -> Result<((Monomial, FieldElement), (Monomial, FieldElement))> {
    let terms: Vec<_> = b.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    match <[_; 2]>::try_from(terms) {
        Ok([s, t]) => Ok((s, t)),
        Err(v) => Err(Error::NotBinomial(format!("{} terms", v.len()))),
    }
}

impl TorusSubgroup {
    /// The subgroup cut out by `x^p - x^q`.
    pub fn of_binomial(b: &MultiPoly) -> Result<Self> {
        let ((p, cp), (q, cq)) = binomial_parts(b)?;
        if !cp.add(&cq).is_zero() {
            return Err(Error::NotBinomial("coefficients must be opposite, as in x^p - x^q".into()));
        }
        let diff: Vec<i64> = p.div(&q).exps().iter().map(|&e| e as i64).collect();
        Ok(TorusSubgroup { lattice: ExponentLattice::span(b.nvars(), &[diff])? })
    }

    pub fn from_lattice(lattice: ExponentLattice) -> Self {
        TorusSubgroup { lattice }
    }

    pub fn whole(dim: usize) -> Self {
        TorusSubgroup { lattice: ExponentLattice::zero(dim) }
    }

    pub fn dim(&self) -> usize {
        self.lattice.dim()
    }

    /// Isomorphism type from the Smith form of the lattice.
    pub fn iso_type(&self) -> IsoType {
        IsoType {
            torus_rank: self.dim() - self.lattice.rank(),
            invariants: self.lattice.smith_invariants().into_iter().filter(|&n| n > 1).collect(),
        }
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        Ok(TorusSubgroup { lattice: self.lattice.sum(&other.lattice)? })
    }

    /// Subgroups shrink as lattices grow.
    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        self.lattice.contains(&other.lattice)
    }

    /// Binomials `x^{v+} - x^{v-}` for the lattice basis.
    pub fn binomials(&self) -> Vec<MultiPoly> {
        let d = self.dim();
        self.lattice
            .basis()
            .iter()
            .map(|v| {
                let (plus, minus) = Monomial::new(v.iter().map(|&e| e as i32)).split_signs();
                MultiPoly::monomial(d, plus, FieldElement::one()).sub(&MultiPoly::monomial(
                    d,
                    minus,
                    FieldElement::one(),
                ))
            })
            .collect()
    }
}

/// Removes members contained in another member; the first of equal members stays.
pub fn dedup_union(groups: &[TorusSubgroup]) -> Vec<TorusSubgroup> {
    groups
        .iter()
        .enumerate()
        .filter(|&(i, g)| {
            !groups.iter().enumerate().any(|(j, h)| j != i && g.is_subgroup_of(h) && (!h.is_subgroup_of(g) || j < i))
        })
        .map(|(_, g)| g.clone())
        .collect()
}

/// A point whose coordinates are zero or powers of a primitive `order`-th
/// root of unity `zeta`; `None` marks a zero coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusPoint {
    pub order: u64,
    pub exponents: Vec<Option<u64>>,
}

impl fmt::Display for TorusPoint {
    /// Coordinates as `0`, `1` or `zeta(n,k)` in lowest terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self
            .exponents
            .iter()
            .map(|e| match *e {
                None => "0".to_string(),
                Some(0) => "1".to_string(),
                Some(k) => {
                    let g = gcd(k, self.order);
                    format!("zeta({},{})", self.order / g, k / g)
                }
            })
            .collect();
        write!(f, "({})", coords.join(", "))
    }
}

impl TorusPoint {
    pub fn new(order: u64, exponents: Vec<Option<u64>>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidArgument("root of unity order must be positive".into()));
        }
        Ok(TorusPoint { order, exponents: exponents.into_iter().map(|e| e.map(|k| k % order)).collect() })
    }

    /// Builds a common-order point from coordinates `zeta_{n_j}^{k_j}`.
    pub fn from_roots(coords: &[Option<(u64, u64)>]) -> Result<Self> {
        let mut order = 1u64;
        for &(n, _) in coords.iter().flatten() {
            if n == 0 {
                return Err(Error::InvalidArgument("root of unity order must be positive".into()));
            }
            order = order / gcd(order, n) * n;
        }
        Self::new(order, coords.iter().map(|c| c.map(|(n, k)| k * (order / n))).collect())
    }

    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    /// Whether `f` vanishes at `w^(j) = (w_1^j, ..., w_d^j)`, using exact
    /// arithmetic in `Q(zeta)`.
    pub fn vanishes_at_power(&self, f: &MultiPoly, j: u64) -> Result<bool> {
        let n = self.order;
        let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
        for (m, c) in f.terms() {
            let c = c.to_rational().ok_or(Error::NonRationalCoefficients)?;
            let mut e: i128 = 0;
            let mut zero = false;
            for (i, &x) in m.exps().iter().enumerate() {
                match self.exponents[i] {
                    None if x > 0 => zero = true,
                    None if x < 0 => return Err(Error::DivisionByZero),
                    None => {}
                    Some(k) => e += x as i128 * k as i128 * j as i128,
                }
            }
            if !zero {
                let slot = e.rem_euclid(n as i128) as u64;
                let s = acc.entry(slot).or_insert_with(Rational::zero);
                *s = s.add(&c);
            }
        }
        let mut coeffs = vec![Rational::zero(); n as usize];
        for (k, c) in acc {
            coeffs[k as usize] = c;
        }
        Ok(QPoly::from_coeffs(coeffs).rem(&cyclotomic_poly(n))?.is_zero())
    }
}

/// Ideal of polynomials vanishing on every power `w^(j)`, `j >= 1`.
///
/// Zero coordinates contribute their variables. The nonzero coordinates
/// contribute binomials for a basis of the relation lattice
/// `{v : sum v_j k_j ≡ 0 mod n}`, and the result is saturated by those
/// variables so that it is the full lattice ideal.
pub fn it_generators(point: &TorusPoint) -> Result<Ideal> {
    let d = point.dim();
    let nonzero: Vec<usize> = (0..d).filter(|&j| point.exponents[j].is_some()).collect();
    let mut gens: Vec<MultiPoly> =
        (0..d).filter(|&j| point.exponents[j].is_none()).map(|j| MultiPoly::var(d, j)).collect();
    if !nonzero.is_empty() {
        let mut column: Vec<Vec<i64>> =
            nonzero.iter().map(|&j| vec![point.exponents[j].expect("nonzero") as i64]).collect();
        column.push(vec![point.order as i64]);
        let kernel = left_kernel(&column, 1)?;
        let s = nonzero.len();
        let projected: Vec<Vec<i64>> = kernel.basis().iter().map(|r| r[..s].to_vec()).collect();
        let relations = ExponentLattice::span(s, &projected)?;
        for v in relations.basis() {
            let mut full = vec![0i32; d];
            for (pos, &j) in nonzero.iter().enumerate() {
                full[j] = v[pos] as i32;
            }
            let (plus, minus) = Monomial::new(full).split_signs();
            gens.push(MultiPoly::monomial(d, plus, FieldElement::one()).sub(&MultiPoly::monomial(
                d,
                minus,
                FieldElement::one(),
            )));
        }
    }
    let ideal = Ideal::new(d, RingMode::Polynomial, gens)?;
    let saturated = ideal.saturate_by_variables(&nonzero)?;
    let gb = saturated.groebner(&TermOrder::deglex(d))?;
    Ideal::polynomial(d, gb.elements().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<FieldElement> {
        v.iter().map(|&x| FieldElement::integer(x)).collect()
    }

    fn p(n: usize, t: &[(i64, &[i32])]) -> MultiPoly {
        MultiPoly::from_int_terms(n, t)
    }

    #[test]
    fn points_print_in_lowest_terms() {
        let w = TorusPoint::from_roots(&[Some((2, 1)), Some((3, 1)), None, Some((4, 0))]).unwrap();
        assert_eq!(w.order, 12);
        assert_eq!(w.to_string(), "(zeta(2,1), zeta(3,1), 0, 1)");
    }

    #[test]
    fn lines_examples() {
        let seq = Exec::Sequential;
        assert_eq!(zero_sum_lines(&ints(&[1, -1]), seq).unwrap().subsets, vec![vec![0, 1]]);
        assert!(zero_sum_lines(&ints(&[1, 1]), seq).unwrap().subsets.is_empty());
        assert_eq!(zero_sum_lines(&ints(&[1, 1, -2]), seq).unwrap().subsets, vec![vec![0, 1, 2]]);
        assert!(zero_sum_lines(&ints(&[0, 0]), seq).is_err());
        assert!(zero_sum_lines(&ints(&[1; 25]), seq).is_err());
        assert_eq!(
            zero_sum_lines(&ints(&[1, -1, 1, -1]), Exec::Parallel).unwrap(),
            zero_sum_lines(&ints(&[1, -1, 1, -1]), seq).unwrap()
        );
    }

    #[test]
    fn radical_examples() {
        let seq = Exec::Sequential;
        let r = radical_of_linear_closure(&ints(&[1, 1]), seq).unwrap();
        assert_eq!(r.generators(), &[p(2, &[(1, &[1, 0])]), p(2, &[(1, &[0, 1])])]);
        let r = radical_of_linear_closure(&ints(&[1, -1]), seq).unwrap();
        assert_eq!(r.generators(), &[p(2, &[(1, &[0, 1]), (-1, &[1, 0])])]);
        let r = radical_of_linear_closure(&ints(&[1, 1, -2]), seq).unwrap();
        let expected = Ideal::polynomial(
            3,
            vec![p(3, &[(1, &[1, 0, 0]), (-1, &[0, 1, 0])]), p(3, &[(1, &[0, 1, 0]), (-1, &[0, 0, 1])])],
        )
        .unwrap();
        assert!(r.equals(&expected).unwrap());
        for a in [vec![1, 1], vec![1, -1], vec![1, 1, -2], vec![1, -1, 1, -1], vec![2, 0, -2]] {
            let r = radical_of_linear_closure(&ints(&a), seq).unwrap();
            assert!(validate_linear_radical(&ints(&a), &r, seq).unwrap().passed(), "a = {a:?}");
            assert!(r.is_power_closed().unwrap());
        }
    }

    #[test]
    fn alternating_form_has_planes() {
        let comps = linear_closure_components(&ints(&[1, -1, 1, -1]), Exec::Sequential).unwrap();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.dimension() == 2));
        // the plane (t, t, s, s) lies in the zero locus but in no line
        let closure = linear_closure(&ints(&[1, -1, 1, -1])).unwrap();
        let images = [MultiPoly::var(2, 0), MultiPoly::var(2, 0), MultiPoly::var(2, 1), MultiPoly::var(2, 1)];
        for g in closure.generators() {
            assert!(g.compose(&images).unwrap().is_zero());
        }
    }

    #[test]
    fn torus_examples() {
        let t = TorusSubgroup::of_binomial(&p(2, &[(1, &[1, 0]), (-1, &[0, 1])])).unwrap();
        assert_eq!(t.lattice.basis(), &[vec![1, -1]]);
        assert_eq!(t.iso_type(), IsoType { torus_rank: 1, invariants: vec![] });
        let t2 = TorusSubgroup::of_binomial(&p(2, &[(1, &[2, 0]), (-1, &[0, 2])])).unwrap();
        assert_eq!(t2.lattice.basis(), &[vec![2, -2]]);
        assert_eq!(t2.iso_type(), IsoType { torus_rank: 1, invariants: vec![2] });
        assert_eq!(t2.iso_type().to_string(), "T^1 x Z/2");
        let t3 = TorusSubgroup::of_binomial(&p(3, &[(1, &[2, 1, 0]), (-1, &[0, 0, 3])])).unwrap();
        assert_eq!(t3.lattice.basis(), &[vec![2, 1, -3]]);
        assert!(TorusSubgroup::of_binomial(&p(2, &[(1, &[1, 0]), (-2, &[0, 1])])).is_err());
        assert!(TorusSubgroup::of_binomial(&p(2, &[(1, &[1, 0])])).is_err());
        let full = TorusSubgroup::from_lattice(ExponentLattice::full(2));
        assert_eq!(full.iso_type(), IsoType { torus_rank: 0, invariants: vec![] });
    }

    #[test]
    fn subgroup_intersections() {
        let a = TorusSubgroup::of_binomial(&p(2, &[(1, &[1, 0]), (-1, &[0, 1])])).unwrap();
        let b = TorusSubgroup::of_binomial(&p(2, &[(1, &[1, 1]), (-1, &[0, 0])])).unwrap();
        let c = a.intersect(&b).unwrap();
        assert_eq!(c.lattice.rank(), 2);
        assert_eq!(c.lattice.smith_invariants(), vec![1, 2]);
        assert_eq!(c.iso_type(), IsoType { torus_rank: 0, invariants: vec![2] });
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert_eq!(a.intersect(&TorusSubgroup::whole(2)).unwrap(), a);
        assert_eq!(dedup_union(&[c.clone(), a.clone(), a.clone()]), vec![a]);
    }

    #[test]
    fn orbit_ideals() {
        let w = TorusPoint::new(2, vec![Some(1), Some(1)]).unwrap();
        let i = it_generators(&w).unwrap();
        assert!(i.contains(&p(2, &[(1, &[1, 0]), (-1, &[0, 1])])).unwrap());
        assert!(i.contains(&p(2, &[(1, &[1, 1]), (-1, &[0, 0])])).unwrap());
        assert!(i.is_power_closed().unwrap());

        let w = TorusPoint::new(1, vec![None, Some(0)]).unwrap();
        let i = it_generators(&w).unwrap();
        assert!(i.contains(&p(2, &[(1, &[1, 0])])).unwrap());
        assert!(i.contains(&p(2, &[(1, &[0, 1]), (-1, &[0, 0])])).unwrap());

        let w = TorusPoint::new(1, vec![Some(0), Some(0)]).unwrap();
        let expected =
            Ideal::polynomial(2, vec![p(2, &[(1, &[1, 0]), (-1, &[0, 0])]), p(2, &[(1, &[0, 1]), (-1, &[0, 0])])])
                .unwrap();
        assert!(it_generators(&w).unwrap().equals(&expected).unwrap());

        let w = TorusPoint::from_roots(&[Some((4, 1)), Some((4, 3))]).unwrap();
        let i = it_generators(&w).unwrap();
        for g in i.generators() {
            for j in 1..=8 {
                assert!(w.vanishes_at_power(g, j).unwrap());
            }
        }
        assert!(!w.vanishes_at_power(&p(2, &[(1, &[1, 0]), (-1, &[0, 1])]), 1).unwrap());
    }
}
