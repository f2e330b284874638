//! Exact integer and rational matrix routines over small dense matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn to_big(m: &[Vec<i64>]) -> IntMatrix {
    m.iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Determinant by fraction-free Bareiss elimination.
pub fn det_bareiss(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Diagonal of the Smith normal form, non-negative, each dividing the next.
pub fn smith_diagonal(m: &IntMatrix) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a = m.clone();
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            // smallest non-zero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a[i][j].is_zero()
                        && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish_diag(diag, rows.min(cols));
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t].div_floor(&p);
                if !q.is_zero() {
                    for j in t..cols {
                        let v = &q * &a[t][j];
                        a[i][j] -= v;
                    }
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = a[t][j].div_floor(&p);
                if !q.is_zero() {
                    for i in t..rows {
                        let v = &q * &a[i][t];
                        a[i][j] -= v;
                    }
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // pivot must divide the rest of the block
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&a[i][j] % &p).is_zero());
            match bad {
                Some((i, _)) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

fn finish_diag(mut diag: Vec<BigInt>, len: usize) -> Vec<BigInt> {
    diag.resize(len, BigInt::zero());
    diag
}

/// Signature `(n_plus, n_minus)` of a symmetric matrix by congruence
/// diagonalization over the rationals. Zero eigen-directions are not counted.
pub fn signature(m: &IntMatrix) -> (usize, usize) {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| Rational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let (mut pos, mut neg) = (0, 0);
    let mut k = 0;
    while k < n {
        if a[k][k].is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !a[i][i].is_zero()) {
                swap_sym(&mut a, k, i);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // e_k + e_j has norm 2 a_kj, which is non-zero
                add_sym(&mut a, k, j);
            } else {
                k += 1;
                continue;
            }
        }
        let p = a[k][k].clone();
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            let f = &a[i][k] / &p;
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
            for j in k..n {
                let v = &f * &a[j][k];
                a[j][i] -= v;
            }
        }
        k += 1;
    }
    (pos, neg)
}

fn swap_sym(a: &mut [Vec<Rational>], i: usize, j: usize) {
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// Basis change e_k <- e_k + e_j applied on both sides.
fn add_sym(a: &mut [Vec<Rational>], k: usize, j: usize) {
    let n = a.len();
    for c in 0..n {
        let v = a[j][c].clone();
        a[k][c] += v;
    }
    for r in 0..n {
        let v = a[r][j].clone();
        a[r][k] += v;
    }
}

/// Basis (as columns listed as vectors) of the integer kernel of the row `a`.
pub fn integer_kernel(a: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut row: Vec<BigInt> = a.to_vec();
    // u holds the unimodular column transform, column-major
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    let Some(first) = (0..n).find(|&j| !row[j].is_zero()) else {
        return u;
    };
    row.swap(0, first);
    u.swap(0, first);
    for j in 1..n {
        if row[j].is_zero() {
            continue;
        }
        let e = row[0].extended_gcd(&row[j]);
        let (x, y, g) = (e.x, e.y, e.gcd);
        let p = &row[0] / &g;
        let q = &row[j] / &g;
        // [c0 cj] <- [x c0 + y cj, -q c0 + p cj], determinant x p + y q = 1
        let c0: Vec<BigInt> = (0..n).map(|i| &x * &u[0][i] + &y * &u[j][i]).collect();
        let cj: Vec<BigInt> = (0..n).map(|i| -&q * &u[0][i] + &p * &u[j][i]).collect();
        u[0] = c0;
        u[j] = cj;
        row[0] = g;
        row[j] = BigInt::zero();
    }
    u.into_iter().skip(1).collect()
}

/// Gram matrix of the vectors `basis` under `gram`.
pub fn restricted_gram(gram: &IntMatrix, basis: &[Vec<BigInt>]) -> IntMatrix {
    let gb: Vec<Vec<BigInt>> = basis.iter().map(|v| mat_vec(gram, v)).collect();
    basis
        .iter()
        .map(|v| gb.iter().map(|w| dot(v, w)).collect())
        .collect()
}

pub fn mat_vec(m: &IntMatrix, v: &[BigInt]) -> Vec<BigInt> {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Inverse over the rationals, `None` when singular.
pub fn rational_inverse(m: &IntMatrix) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<Rational> = r
                .iter()
                .map(|x| Rational::from_integer(x.clone()))
                .collect();
            row.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            row
        })
        .collect();
    for k in 0..n {
        let piv = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(k, piv);
        let p = a[k][k].clone();
        for v in a[k].iter_mut() {
            *v /= &p;
        }
        for i in 0..n {
            if i != k && !a[i][k].is_zero() {
                let f = a[i][k].clone();
                for j in 0..2 * n {
                    let v = &f * &a[k][j];
                    a[i][j] -= v;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}
