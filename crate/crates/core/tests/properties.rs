//! Randomized laws checked through the public API.

use proptest::prelude::*;

use powerclosed::principal::{
    classify_principal, divides_monomial_differences, expand, Factor, FactoredPrincipal, Root,
};
use powerclosed::variety::{
    it_generators, linear_closure, radical_of_linear_closure, validate_linear_radical, vanishes_on_line,
    zero_sum_lines, TorusPoint, TorusSubgroup,
};
use powerclosed::{Exec, Field, FieldElement, GbConfig, Ideal, Monomial, MultiPoly, RingMode, TermOrder};

fn poly(d: usize) -> impl Strategy<Value = MultiPoly> {
    let term = (prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]), prop::collection::vec(0i32..3, d));
    prop::collection::vec(term, 1..=3)
        .prop_map(move |ts| {
            MultiPoly::from_terms(d, ts.into_iter().map(|(c, e)| (Monomial::new(e), FieldElement::integer(c))))
        })
        .prop_filter("nonconstant", |f| !f.is_zero() && !f.is_constant())
}

fn ideal_pair() -> impl Strategy<Value = (Ideal, Ideal)> {
    (1usize..=3).prop_flat_map(|d| {
        let gens = || prop::collection::vec(poly(d), 1..=2);
        (gens(), gens()).prop_map(move |(i, j)| (Ideal::polynomial(d, i).unwrap(), Ideal::polynomial(d, j).unwrap()))
    })
}

fn coefficients() -> impl Strategy<Value = Vec<FieldElement>> {
    prop::collection::vec(-3i64..=3, 1..=5)
        .prop_filter("nonzero", |a| a.iter().any(|&c| c != 0))
        .prop_map(|a| a.into_iter().map(FieldElement::integer).collect())
}

/// Factors over the primitive roots of each order, all with the same
/// multiplicity, so the group polynomial has rational coefficients.
fn orbit(xi: &Monomial, order: u64, mult: u32) -> Vec<Factor> {
    (0..order)
        .filter(|&k| num_gcd(k, order) == 1)
        .map(|k| Factor { xi: xi.clone(), rho: Root::unity(order, k).unwrap(), multiplicity: mult })
        .collect()
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

fn factored() -> impl Strategy<Value = FactoredPrincipal> {
    let xi = prop::sample::select(vec![vec![1, 0], vec![0, 1], vec![1, -1], vec![2, -1], vec![1, 1]]);
    let orders = prop::collection::btree_map(prop::sample::select(vec![1u64, 2, 3, 4, 6]), 1u32..=2, 0..=2);
    (xi, orders, prop::bool::ANY).prop_map(|(xi, orders, with_two)| {
        let xi = Monomial::new(xi);
        let mut factors: Vec<Factor> = orders.iter().flat_map(|(&n, &m)| orbit(&xi, n, m)).collect();
        if with_two || factors.is_empty() {
            factors.push(Factor { xi: xi.clone(), rho: Root::scalar(FieldElement::integer(2)), multiplicity: 1 });
        }
        FactoredPrincipal::new(2, FieldElement::one(), Monomial::one(2), factors).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn closure_is_a_closure_operator((i, j) in ideal_pair()) {
        let ic = i.power_closure().unwrap();
        let jc = j.power_closure().unwrap();
        let sum = i.sum(&j).unwrap();
        let sc = sum.power_closure().unwrap();
        prop_assert!(i.is_subset_of(&ic).unwrap());
        prop_assert!(ic.power_closure().unwrap().equals(&ic).unwrap());
        prop_assert!(ic.is_subset_of(&sc).unwrap());
        prop_assert!(sc.equals(&ic.sum(&jc).unwrap()).unwrap());
        prop_assert!(ic.product(&jc).unwrap().is_power_closed().unwrap());
    }

    #[test]
    fn canonical_basis_ignores_schedule_and_generator_order((i, _j) in ideal_pair()) {
        let d = i.nvars();
        let order = TermOrder::deglex(d);
        let gens = i.power_closure().unwrap().generators().to_vec();
        let mut reversed = gens.clone();
        reversed.reverse();
        let run = |g: &[MultiPoly], exec| {
            Ideal::polynomial(d, g.to_vec()).unwrap().with_config(GbConfig { exec, cancel: None }).groebner(&order).unwrap()
        };
        let base = run(&gens, Exec::Sequential);
        prop_assert_eq!(&base, &run(&gens, Exec::Parallel));
        prop_assert_eq!(&base, &run(&reversed, Exec::Parallel));
    }

    #[test]
    fn classifier_matches_groebner(f in factored()) {
        let order = TermOrder::deglex(2);
        let g = expand(&f).unwrap();
        let verdict = classify_principal(&f, RingMode::Laurent, &order).unwrap();
        let closed = Ideal::laurent(2, vec![g.clone()]).unwrap().is_power_closed().unwrap();
        prop_assert_eq!(verdict.power_closed, closed, "{}", g);
        if verdict.power_closed {
            prop_assert!(divides_monomial_differences(&g).unwrap());
        }
    }

    #[test]
    fn zero_sum_lines_lie_in_the_zero_locus(a in coefficients()) {
        let closure = linear_closure(&a).unwrap();
        for subset in zero_sum_lines(&a, Exec::Sequential).unwrap().subsets {
            let sum = subset.iter().fold(FieldElement::integer(0), |acc, &i| acc.add(&a[i]));
            prop_assert!(sum.is_zero());
            for g in closure.generators() {
                prop_assert!(vanishes_on_line(g, &subset).unwrap());
            }
        }
    }

    #[test]
    fn linear_radicals_validate_and_are_closed(a in coefficients()) {
        let radical = radical_of_linear_closure(&a, Exec::Sequential).unwrap();
        prop_assert!(validate_linear_radical(&a, &radical, Exec::Sequential).unwrap().passed());
        prop_assert!(radical.is_power_closed().unwrap());
    }

    #[test]
    fn binomial_subgroups_have_corank_one(
        (p, q) in (1usize..=4).prop_flat_map(|d| (prop::collection::vec(0i32..4, d), prop::collection::vec(0i32..4, d)))
            .prop_filter("distinct", |(p, q)| p != q)
    ) {
        let d = p.len();
        let b = MultiPoly::from_terms(d, [
            (Monomial::new(p), FieldElement::integer(1)),
            (Monomial::new(q), FieldElement::integer(-1)),
        ]);
        prop_assert_eq!(TorusSubgroup::of_binomial(&b).unwrap().iso_type().torus_rank, d - 1);
    }

    #[test]
    fn point_ideals_are_closed_and_vanish_on_powers(
        coords in prop::collection::vec(prop::option::weighted(0.8, (1u64..=4, 0u64..4)), 1..=3)
    ) {
        let coords: Vec<Option<(u64, u64)>> = coords.into_iter().map(|c| c.map(|(n, k)| (n, k % n))).collect();
        let point = TorusPoint::from_roots(&coords).unwrap();
        let ideal = it_generators(&point).unwrap();
        prop_assert!(ideal.is_power_closed().unwrap());
        let period = coords.iter().flatten().map(|&(n, _)| n).fold(1, |acc, n| acc * n / num_gcd(acc, n));
        for g in ideal.generators() {
            for j in 1..=period {
                prop_assert!(point.vanishes_at_power(g, j).unwrap());
            }
        }
    }
}

#[test]
fn orbit_helper_builds_rational_groups() {
    let xi = Monomial::new([1, -1]);
    let f = FactoredPrincipal::new(2, FieldElement::one(), Monomial::one(2), orbit(&xi, 4, 1)).unwrap();
    let names: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
    let typed = powerclosed::expr::parse_polynomial("x^2 + y^2", &names, RingMode::Polynomial).unwrap();
    assert_eq!(expand(&f).unwrap(), typed);
}
