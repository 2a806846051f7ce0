//! Fraction-free Gaussian elimination over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

fn content(row: &[BigInt]) -> BigInt {
    row.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

fn primitive(row: &mut [BigInt]) {
    let g = content(row);
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// Reduced echelon form with integer rows: each pivot row is primitive with a positive pivot
/// and every other row vanishes in its pivot column. Returns the rows and pivot columns.
fn echelon(rows: &[Vec<BigInt>], ncols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        if m[r][col].is_negative() {
            for x in m[r].iter_mut() {
                *x = -x.clone();
            }
        }
        primitive(&mut m[r]);
        let pivot_row = m[r].clone();
        for i in 0..m.len() {
            if i == r || m[i][col].is_zero() {
                continue;
            }
            let f = m[i][col].clone();
            let p = &pivot_row[col];
            for j in 0..ncols {
                m[i][j] = p * &m[i][j] - &f * &pivot_row[j];
            }
            primitive(&mut m[i]);
        }
        pivots.push(col);
        r += 1;
    }
    m.truncate(r);
    for row in m.iter_mut() {
        primitive(row);
    }
    (m, pivots)
}

pub fn rank(rows: &[Vec<BigInt>], ncols: usize) -> usize {
    echelon(rows, ncols).1.len()
}

/// Basis of `{v : A·v = 0}` of primitive integer vectors, one per free column in increasing
/// order, each with a positive entry at its free column.
pub fn nullspace(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let (m, pivots) = echelon(rows, ncols);
    let l = m
        .iter()
        .zip(&pivots)
        .fold(BigInt::one(), |acc, (row, &c)| acc.lcm(&row[c]));
    let mut basis = Vec::new();
    for f in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigInt::zero(); ncols];
        v[f] = l.clone();
        for (row, &c) in m.iter().zip(&pivots) {
            v[c] = -(&row[f] * &l) / &row[c];
        }
        primitive(&mut v);
        basis.push(v);
    }
    basis
}
