//! Dense exact linear algebra over the rationals and the integers.
//!
//! Everything here is small and deterministic: Gaussian elimination with
//! exact rationals for rank/kernel/solve/inverse, and a fraction-free
//! Bareiss elimination over big integers for the rank of integer matrices
//! (the quiver and flag oracles feed it matrices with entries far outside
//! machine range after a few pivots).

use crate::rat::Rat;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type QMat = Vec<Vec<Rat>>;

pub fn identity_q(n: usize) -> QMat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul_q(a: &QMat, b: &QMat) -> QMat {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let mut out = vec![vec![Rat::zero(); m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[t][j].is_zero() {
                    let add = &a[i][t] * &b[t][j];
                    out[i][j] += add;
                }
            }
        }
    }
    out
}

pub fn mat_vec_q(a: &QMat, v: &[Rat]) -> Vec<Rat> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(Rat::zero(), |acc, (c, x)| acc + c * x)
        })
        .collect()
}

/// Row echelon elimination in place; returns pivot column indices.
fn echelon(m: &mut QMat) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for j in c..cols {
            let v = &m[r][j] / &inv;
            m[r][j] = v;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let sub = &f * &m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank_q(m: &QMat) -> usize {
    let mut work = m.clone();
    echelon(&mut work).len()
}

/// Basis of the right kernel {x : M x = 0}.
pub fn kernel_basis_q(m: &QMat) -> Vec<Vec<Rat>> {
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    let mut work = m.clone();
    let pivots = echelon(&mut work);
    let piv_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if piv_set.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); cols];
        v[free] = Rat::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -work[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// One solution of M x = b, if the system is consistent.
pub fn solve_q(m: &QMat, b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut work: QMat = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = echelon(&mut work);
    // Inconsistent iff a pivot lands in the appended column.
    if pivots.iter().any(|&c| c == cols) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = work[r][cols].clone();
    }
    Some(x)
}

pub fn invert_q(m: &QMat) -> Option<QMat> {
    let n = m.len();
    let mut work: QMat = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { Rat::one() } else { Rat::zero() });
            }
            r
        })
        .collect();
    let pivots = echelon(&mut work);
    if pivots.len() != n || pivots.iter().any(|&c| c >= n) {
        return None;
    }
    Some(work.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Rank of an integer matrix by fraction-free Bareiss elimination.
pub fn rank_bigint(m: &[Vec<BigInt>]) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Pick the absolutely smallest nonzero pivot to slow entry growth.
        let mut best: Option<usize> = None;
        for i in r..rows {
            if !a[i][c].is_zero() {
                match best {
                    None => best = Some(i),
                    Some(b) => {
                        if a[i][c].abs() < a[b][c].abs() {
                            best = Some(i);
                        }
                    }
                }
            }
        }
        let Some(p) = best else { continue };
        a.swap(r, p);
        for i in (r + 1)..rows {
            for j in (c + 1)..cols {
                let num = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = num / &prev; // exact by Bareiss identity
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

pub fn rank_i64(m: &[Vec<i64>]) -> usize {
    let big: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    rank_bigint(&big)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn qm(rows: &[&[i64]]) -> QMat {
        rows.iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect()
    }

    #[test]
    fn rank_kernel_solve() {
        let m = qm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank_q(&m), 2);
        let ker = kernel_basis_q(&m);
        assert_eq!(ker.len(), 1);
        for row in &m {
            let dot = row
                .iter()
                .zip(&ker[0])
                .fold(Rat::zero(), |a, (c, x)| a + c * x);
            assert!(dot.is_zero());
        }
        let b = vec![rat(6), rat(12), rat(2)];
        let x = solve_q(&m, &b).unwrap();
        assert_eq!(mat_vec_q(&m, &x), b);
        assert!(solve_q(&qm(&[&[1, 1], &[1, 1]]), &[rat(0), rat(1)]).is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = qm(&[&[2, 1], &[1, 1]]);
        let inv = invert_q(&m).unwrap();
        assert_eq!(mat_mul_q(&m, &inv), identity_q(2));
        assert!(invert_q(&qm(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn bareiss_matches_rational_rank() {
        let m = vec![
            vec![3i64, -1, 4, 1],
            vec![5, 9, -2, 6],
            vec![8, 8, 2, 7],
            vec![-1, 0, 0, 2],
        ];
        let q = qm(&[&[3, -1, 4, 1], &[5, 9, -2, 6], &[8, 8, 2, 7], &[-1, 0, 0, 2]]);
        assert_eq!(rank_i64(&m), rank_q(&q));
        let sing = vec![vec![1i64, 2], vec![2, 4], vec![3, 6]];
        assert_eq!(rank_i64(&sing), 1);
    }
}
