//! Multi-modular helpers for exact gcds over Q.
//!
//! Images are computed in `F_p[x]` for primes below `2^31`, combined by CRT,
//! and a lifted candidate is only returned once the caller has verified it
//! over Z.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::field::Rational;
use crate::unipoly::UniPoly;

/// Integer coefficients of a nonzero polynomial scaled to content one.
pub(crate) fn primitive_integers(f: &UniPoly<Rational>) -> Vec<BigInt> {
    let coeffs = f.coeffs();
    let denominators = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&denominators / c.denom())).collect();
    let content = scaled.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    scaled.into_iter().map(|c| c / &content).collect()
}

/// Primes descending from `2^31`.
pub(crate) fn primes() -> impl Iterator<Item = u64> {
    (3..1u64 << 31).rev().step_by(2).filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

pub(crate) fn divisible(n: &BigInt, p: u64) -> bool {
    (n % BigInt::from(p)).is_zero()
}

fn mul(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

fn inverse(a: u64, p: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a, p - 2, 1);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base, p);
        }
        base = mul(base, base, p);
        exp >>= 1;
    }
    acc
}

fn residue(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().expect("below p")
}

pub(crate) fn reduce(coeffs: &[BigInt], p: u64) -> Vec<u64> {
    coeffs.iter().map(|c| residue(c, p)).collect()
}

fn trim(f: &mut Vec<u64>) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

fn make_monic(f: &mut [u64], p: u64) {
    let inv = inverse(*f.last().expect("nonzero"), p);
    f.iter_mut().for_each(|c| *c = mul(*c, inv, p));
}

/// `f mod g` for monic `g`.
pub(crate) fn rem(mut f: Vec<u64>, g: &[u64], p: u64) -> Vec<u64> {
    let n = g.len() - 1;
    while f.len() > n {
        let lead = f.pop().expect("nonempty");
        if lead != 0 {
            let shift = f.len() - n;
            for (k, &c) in g[..n].iter().enumerate() {
                let t = &mut f[shift + k];
                *t = (*t + p - mul(lead, c, p)) % p;
            }
        }
    }
    trim(&mut f);
    f
}

/// Monic gcd in `F_p[x]`; `a` must be nonzero mod `p`.
pub(crate) fn gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    trim(&mut a);
    trim(&mut b);
    make_monic(&mut a, p);
    while !b.is_empty() {
        make_monic(&mut b, p);
        let r = rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Lift of a monic gcd over Q from its images mod `p`.
///
/// `gamma` is a multiple of the leading coefficient of the primitive integer
/// gcd; `skip` rejects primes where an input loses degree; `image` returns the
/// monic gcd mod `p`; `accept` verifies a primitive candidate over Z. Images of
/// excess degree are discarded, the others are combined until the symmetric
/// lift stops changing, and the verified candidate is returned primitive.
pub(crate) fn lift(
    gamma: &BigInt,
    skip: impl Fn(u64) -> bool,
    mut image: impl FnMut(u64) -> Vec<u64>,
    mut accept: impl FnMut(&[BigInt]) -> bool,
) -> Vec<BigInt> {
    let mut best: Option<(usize, Vec<BigInt>, BigInt)> = None;
    let mut previous: Option<Vec<BigInt>> = None;
    for p in primes().filter(|&p| !skip(p)) {
        let monic = image(p);
        let degree = monic.len() - 1;
        if degree == 0 {
            return vec![BigInt::one()];
        }
        if best.as_ref().is_some_and(|(d, _, _)| *d < degree) {
            continue;
        }
        let scale = residue(gamma, p);
        let scaled: Vec<u64> = monic.iter().map(|&c| mul(c, scale, p)).collect();
        best = Some(match best.take() {
            Some((d, residues, modulus)) if d == degree => {
                let combined = crt(&residues, &modulus, &scaled, p);
                (d, combined, modulus * BigInt::from(p))
            }
            _ => {
                previous = None;
                (degree, scaled.iter().map(|&c| BigInt::from(c)).collect(), BigInt::from(p))
            }
        });
        let (_, residues, modulus) = best.as_ref().expect("just set");
        let half: BigInt = modulus / 2;
        let lifted: Vec<BigInt> = residues.iter().map(|c| if c > &half { c - modulus } else { c.clone() }).collect();
        if previous.as_ref() == Some(&lifted) {
            let content = lifted.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
            let candidate: Vec<BigInt> = lifted.iter().map(|c| c / &content).collect();
            if accept(&candidate) {
                return candidate;
            }
        }
        previous = Some(lifted);
    }
    unreachable!("the prime supply outlasts any lift")
}

/// Combine residues mod `modulus` with residues mod `p`.
fn crt(residues: &[BigInt], modulus: &BigInt, image: &[u64], p: u64) -> Vec<BigInt> {
    let m_inv = inverse(residue(modulus, p), p);
    residues
        .iter()
        .zip(image)
        .map(|(c, &g)| {
            let t = mul((g + p - residue(c, p)) % p, m_inv, p);
            c + modulus * BigInt::from(t)
        })
        .collect()
}

/// Whether the primitive `divisor` divides `f` in Q[x], by exact long
/// division over Z (Gauss's lemma keeps every quotient coefficient integral).
pub(crate) fn divides(divisor: &[BigInt], f: &[BigInt]) -> bool {
    let small = |v: &[BigInt]| v.iter().map(|c| c.to_i64().map(i128::from)).collect::<Option<Vec<i128>>>();
    if let (Some(d), Some(g)) = (small(divisor), small(f)) {
        if let Some(answer) = divides_small(&d, g) {
            return answer;
        }
    }
    divides_big(divisor, f.to_vec())
}

/// `None` when an intermediate value leaves the safe range.
fn divides_small(divisor: &[i128], mut f: Vec<i128>) -> Option<bool> {
    const LIMIT: i128 = 1 << 100;
    let n = divisor.len() - 1;
    let lead = divisor[n];
    while f.len() > n {
        let top = f.pop().expect("nonempty");
        if top == 0 {
            continue;
        }
        if top % lead != 0 {
            return Some(false);
        }
        let q = top / lead;
        if q.abs() >= 1 << 62 {
            return None;
        }
        let shift = f.len() - n;
        for (k, &c) in divisor[..n].iter().enumerate() {
            let t = f[shift + k] - q * c;
            if t.abs() >= LIMIT {
                return None;
            }
            f[shift + k] = t;
        }
    }
    Some(f.iter().all(|&c| c == 0))
}

fn divides_big(divisor: &[BigInt], mut f: Vec<BigInt>) -> bool {
    let n = divisor.len() - 1;
    let lead = &divisor[n];
    while f.len() > n {
        let top = f.pop().expect("nonempty");
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lead);
        if !r.is_zero() {
            return false;
        }
        let shift = f.len() - n;
        for (k, c) in divisor[..n].iter().enumerate() {
            f[shift + k] -= &q * c;
        }
    }
    f.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn prime_supply_starts_below_two_to_the_31() {
        let first: Vec<u64> = primes().take(3).collect();
        assert_eq!(first, vec![2147483647, 2147483629, 2147483587]);
    }

    #[test]
    fn exact_division_over_the_integers() {
        // (2x + 1)(x - 3) = 2x^2 - 5x - 3
        assert!(divides(&big(&[1, 2]), &big(&[-3, -5, 2])));
        assert!(!divides(&big(&[1, 2]), &big(&[-3, -5, 3])));
        let huge = vec![BigInt::from(i64::MAX) * 4, BigInt::from(i64::MAX) * 4];
        assert!(divides(&big(&[1, 1]), &huge));
        assert!(!divides(&big(&[2, 1]), &huge));
    }

    #[test]
    fn gcd_mod_p() {
        let p = 101;
        // (x - 1)(x + 2) and (x - 1)(x - 5)
        let g = gcd(reduce(&big(&[-2, 1, 1]), p), reduce(&big(&[5, -6, 1]), p), p);
        assert_eq!(g, vec![p - 1, 1]);
    }
}
