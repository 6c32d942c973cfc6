use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use powerclosed::cyclotomic::{cyclotomic_poly, QPoly};
use powerclosed::expr::parse_polynomial;
use powerclosed::groebner::groebner;
use powerclosed::powerpoly::star_via_gcd;
use powerclosed::variety::zero_sum_lines;
use powerclosed::{Exec, FieldElement, GbConfig, RingMode, TermOrder};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn gcd_oracle(c: &mut Criterion) {
    let inputs: Vec<QPoly> = (1..=24u64)
        .map(|n| cyclotomic_poly(n).pow(2).mul(&cyclotomic_poly(n % 7 + 1)).mul(&QPoly::from_ints(&[-2, 1])))
        .collect();
    let mut group = c.benchmark_group("gcd_oracle");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| exec.map(&inputs, |f| star_via_gcd(f).expect("nonzero")))
        });
    }
    group.finish();
}

fn zero_sums(c: &mut Criterion) {
    let a: Vec<FieldElement> = (0..18).map(|i| FieldElement::integer(if i % 2 == 0 { i + 1 } else { -i })).collect();
    let mut group = c.benchmark_group("zero_sum_lines");
    for (name, exec) in MODES {
        group
            .bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| zero_sum_lines(&a, exec).expect("valid")));
    }
    group.finish();
}

fn buchberger(c: &mut Criterion) {
    let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    let f = parse_polynomial("z - 2*x + 3*y - x*y", &names, RingMode::Polynomial).expect("parses");
    let gens: Vec<_> = (1..=4).map(|i| f.power_substitute(i, false).expect("positive")).collect();
    let order = TermOrder::deglex(3);
    let mut group = c.benchmark_group("groebner");
    group.sample_size(10);
    for (name, exec) in MODES {
        let cfg = GbConfig { exec, cancel: None };
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| groebner(3, &gens, &order, &cfg).expect("basis"))
        });
    }
    group.finish();
}

criterion_group!(benches, gcd_oracle, zero_sums, buchberger);
criterion_main!(benches);
