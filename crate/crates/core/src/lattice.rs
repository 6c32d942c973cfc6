//! Integer lattices: Hermite and Smith normal forms, left kernels.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

type Mat = Vec<Vec<i128>>;

fn to_wide(rows: &[Vec<i64>]) -> Mat {
    rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect()
}

fn narrow(x: i128) -> i64 {
    i64::try_from(x).expect("lattice entry exceeds 64 bits")
}

/// `rows[target] += factor * rows[source]`, from column `from` on.
fn add_multiple(rows: &mut Mat, target: usize, source: usize, factor: i128, from: usize) {
    let src = rows[source][from..].to_vec();
    for (t, s) in rows[target][from..].iter_mut().zip(src) {
        *t += factor * s;
    }
}

/// Row-style Hermite normal form `H = U * A` with `U` unimodular. Nonzero
/// rows come first, pivots are positive, and entries above a pivot lie in
/// `[0, pivot)`. Returns `(H, U)`, both with the full row count.
fn hnf_with_transform(a: &Mat, ncols: usize) -> (Mat, Mat) {
    let m = a.len();
    let mut h = a.clone();
    let mut u: Mat = (0..m).map(|i| (0..m).map(|j| i128::from(i == j)).collect()).collect();
    let mut row = 0;
    for col in 0..ncols {
        if row == m {
            break;
        }
        // Euclid on column `col` among rows row..m
        loop {
            let pivot = (row..m).filter(|&r| h[r][col] != 0).min_by_key(|&r| h[r][col].abs());
            let Some(p) = pivot else { break };
            h.swap(row, p);
            u.swap(row, p);
            let mut done = true;
            for r in row + 1..m {
                if h[r][col] != 0 {
                    let q = h[r][col].div_euclid(h[row][col]);
                    add_multiple(&mut h, r, row, -q, 0);
                    add_multiple(&mut u, r, row, -q, 0);
                    if h[r][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if h[row][col] == 0 {
            continue;
        }
        if h[row][col] < 0 {
            h[row].iter_mut().for_each(|x| *x = -*x);
            u[row].iter_mut().for_each(|x| *x = -*x);
        }
        for r in 0..row {
            let q = h[r][col].div_euclid(h[row][col]);
            if q != 0 {
                add_multiple(&mut h, r, row, -q, 0);
                add_multiple(&mut u, r, row, -q, 0);
            }
        }
        row += 1;
    }
    (h, u)
}

/// A subgroup of `Z^d` given by a canonical (Hermite) basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ExponentLattice {
    dim: usize,
    basis: Vec<Vec<i64>>,
}

impl ExponentLattice {
    /// The lattice spanned by `rows`, each of length `dim`.
    pub fn span(dim: usize, rows: &[Vec<i64>]) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::LengthMismatch(r.len(), dim));
        }
        let (h, _) = hnf_with_transform(&to_wide(rows), dim);
        let basis =
            h.into_iter().filter(|r| r.iter().any(|&x| x != 0)).map(|r| r.into_iter().map(narrow).collect()).collect();
        Ok(ExponentLattice { dim, basis })
    }

    pub fn zero(dim: usize) -> Self {
        ExponentLattice { dim, basis: Vec::new() }
    }

    pub fn full(dim: usize) -> Self {
        let rows: Vec<Vec<i64>> = (0..dim).map(|i| (0..dim).map(|j| i64::from(i == j)).collect()).collect();
        ExponentLattice { dim, basis: rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::LengthMismatch(self.dim, other.dim));
        }
        Self::span(self.dim, &[self.basis.clone(), other.basis.clone()].concat())
    }

    pub fn contains_vector(&self, v: &[i64]) -> bool {
        v.len() == self.dim
            && self.sum(&Self::span(self.dim, &[v.to_vec()]).expect("length checked")).ok().as_ref() == Some(self)
    }

    pub fn contains(&self, other: &Self) -> bool {
        self.dim == other.dim && self.sum(other).ok().as_ref() == Some(self)
    }

    /// Nonzero diagonal entries of the Smith normal form, each dividing the next.
    pub fn smith_invariants(&self) -> Vec<i64> {
        smith_diagonal(&self.basis, self.dim)
    }
}

impl fmt::Display for ExponentLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|r| format!("({})", r.iter().map(i64::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Integer vectors `u` with `u * A = 0`, as an HNF basis.
pub fn left_kernel(rows: &[Vec<i64>], ncols: usize) -> Result<ExponentLattice> {
    if let Some(r) = rows.iter().find(|r| r.len() != ncols) {
        return Err(Error::LengthMismatch(r.len(), ncols));
    }
    let (h, u) = hnf_with_transform(&to_wide(rows), ncols);
    let kernel: Vec<Vec<i64>> = h
        .iter()
        .zip(&u)
        .filter(|(hr, _)| hr.iter().all(|&x| x == 0))
        .map(|(_, ur)| ur.iter().copied().map(narrow).collect())
        .collect();
    ExponentLattice::span(rows.len(), &kernel)
}

/// Nonzero Smith invariants `d_1 | d_2 | ...` of an integer matrix.
pub fn smith_diagonal(rows: &[Vec<i64>], ncols: usize) -> Vec<i64> {
    let mut a = to_wide(rows);
    let m = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < m.min(ncols) {
        // choose the smallest nonzero entry in the remaining block as pivot
        let pos = (t..m)
            .flat_map(|r| (t..ncols).map(move |c| (r, c)))
            .filter(|&(r, c)| a[r][c] != 0)
            .min_by_key(|&(r, c)| a[r][c].abs());
        let Some((pr, pc)) = pos else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let p = a[t][t];
            let mut clean = true;
            for r in t + 1..m {
                let q = a[r][t].div_euclid(p);
                if q != 0 {
                    add_multiple(&mut a, r, t, -q, t);
                }
                if a[r][t] != 0 {
                    clean = false;
                }
            }
            for c in t + 1..ncols {
                let q = a[t][c].div_euclid(p);
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[c] -= q * row[t];
                    }
                }
                if a[t][c] != 0 {
                    clean = false;
                }
            }
            if clean {
                // the pivot must divide the remaining block
                let bad = (t + 1..m).flat_map(|r| (t + 1..ncols).map(move |c| (r, c))).find(|&(r, c)| a[r][c] % p != 0);
                match bad {
                    None => break,
                    Some((r, _)) => {
                        add_multiple(&mut a, t, r, 1, t);
                        continue;
                    }
                }
            }
            // move the smallest entry of row/column t into the pivot
            let best = (t..m)
                .map(|r| (r, t))
                .chain((t..ncols).map(|c| (t, c)))
                .filter(|&(r, c)| a[r][c] != 0)
                .min_by_key(|&(r, c)| a[r][c].abs())
                .expect("pivot is nonzero");
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(narrow(a[t][t].abs()));
        t += 1;
    }
    diag
}
