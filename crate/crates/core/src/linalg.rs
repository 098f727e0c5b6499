//! Exact linear algebra over the integers and rationals: fraction-free rank,
//! rational nullspaces, integer kernel lattice bases, and modular rank for
//! cross-checks.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn rank_bigint(matrix: &[Vec<BigInt>]) -> usize {
    let m = matrix.len();
    if m == 0 {
        return 0;
    }
    let n = matrix[0].len();
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..n {
        if row == m {
            break;
        }
        let pivot = (row..m).find(|&r| !a[r][col].is_zero());
        let Some(p) = pivot else { continue };
        a.swap(row, p);
        for r in row + 1..m {
            for c in col + 1..n {
                let v = (&a[row][col] * &a[r][c] - &a[r][col] * &a[row][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[row][col].clone();
        row += 1;
        rank += 1;
    }
    rank
}

/// Rank of an integer matrix over F_p.
pub fn rank_mod_p(matrix: &[Vec<BigInt>], p: u64) -> usize {
    let m = matrix.len();
    if m == 0 {
        return 0;
    }
    let n = matrix[0].len();
    let pb = BigInt::from(p);
    let mut a: Vec<Vec<u64>> = matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    let r = x.mod_floor(&pb);
                    let (_, digits) = r.to_u64_digits();
                    digits.first().copied().unwrap_or(0)
                })
                .collect()
        })
        .collect();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..n {
        if row == m {
            break;
        }
        let Some(pr) = (row..m).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, pr);
        let inv = mod_inv(a[row][col], p);
        for c in col..n {
            a[row][c] = mulmod(a[row][c], inv, p);
        }
        for r in 0..m {
            if r != row && a[r][col] != 0 {
                let f = a[r][col];
                for c in col..n {
                    let sub = mulmod(f, a[row][c], p);
                    a[r][c] = (a[r][c] + p - sub) % p;
                }
            }
        }
        row += 1;
        rank += 1;
    }
    rank
}

pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn powmod(mut a: u64, mut k: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while k > 0 {
        if k & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        k >>= 1;
    }
    acc
}

pub fn mod_inv(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

/// Basis of the rational nullspace {x : Mx = 0} by reduced row echelon form.
pub fn nullspace_rational(matrix: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let m = matrix.len();
    let n = if m == 0 { 0 } else { matrix[0].len() };
    if n == 0 {
        return Vec::new();
    }
    let mut a = matrix.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..n {
        if row == m {
            break;
        }
        let Some(pr) = (row..m).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, pr);
        let inv = a[row][col].recip();
        for c in col..n {
            a[row][c] = &a[row][c] * &inv;
        }
        for r in 0..m {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..n {
                    let sub = &f * &a[row][c];
                    a[r][c] = &a[r][c] - sub;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![BigRational::zero(); n];
        v[free] = BigRational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Basis of the integer kernel lattice {x ∈ Zⁿ : Mx = 0} of an integer
/// matrix, via unimodular row reduction of [Mᵀ | I].
pub fn kernel_basis_int(matrix: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let m = matrix.len();
    let n = if m == 0 { 0 } else { matrix[0].len() };
    // Working rows: (column i of M, e_i) for i < n.
    let mut rows: Vec<(Vec<BigInt>, Vec<BigInt>)> = (0..n)
        .map(|i| {
            let left: Vec<BigInt> = (0..m).map(|r| matrix[r][i].clone()).collect();
            let mut right = vec![BigInt::zero(); n];
            right[i] = BigInt::one();
            (left, right)
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..m {
        loop {
            // Find the row (from pivot_row on) with the smallest nonzero
            // absolute entry in this column and reduce the others by it.
            let mut best: Option<usize> = None;
            for r in pivot_row..rows.len() {
                if !rows[r].0[col].is_zero()
                    && best.is_none_or(|b| rows[r].0[col].abs() < rows[b].0[col].abs())
                {
                    best = Some(r);
                }
            }
            let Some(b) = best else { break };
            rows.swap(pivot_row, b);
            let mut any_left = false;
            for r in pivot_row + 1..rows.len() {
                if rows[r].0[col].is_zero() {
                    continue;
                }
                let q = div_round(&rows[r].0[col], &rows[pivot_row].0[col]);
                if !q.is_zero() {
                    let (pl, pr) = {
                        let (head, tail) = rows.split_at_mut(pivot_row + 1);
                        let pivot = &head[pivot_row];
                        let target = &mut tail[r - pivot_row - 1];
                        (pivot, target)
                    };
                    for c in 0..m {
                        let sub = &q * &pl.0[c];
                        pr.0[c] -= sub;
                    }
                    for c in 0..n {
                        let sub = &q * &pl.1[c];
                        pr.1[c] -= sub;
                    }
                }
                if !rows[r].0[col].is_zero() {
                    any_left = true;
                }
            }
            if !any_left {
                pivot_row += 1;
                break;
            }
        }
        if pivot_row == rows.len() {
            break;
        }
    }
    rows[pivot_row..]
        .iter()
        .filter(|(left, _)| left.iter().all(|x| x.is_zero()))
        .map(|(_, right)| right.clone())
        .collect()
}

fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    // Nearest-integer quotient keeps entries small during reduction.
    let two = BigInt::from(2);
    let (q, r) = a.div_rem(b);
    if &r.abs() * &two > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_bigint(&bi(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank_bigint(&bi(&[&[1, 0, 2], &[0, 1, 3], &[1, 1, 5]])), 2);
        assert_eq!(rank_bigint(&bi(&[&[2, 0], &[0, 3]])), 2);
        assert_eq!(rank_mod_p(&bi(&[&[2, 0], &[0, 3]]), 1000003), 2);
        assert_eq!(rank_mod_p(&bi(&[&[1, 2], &[2, 4]]), 1000003), 1);
    }

    #[test]
    fn kernel_lattice() {
        // x + y + z = 0 over Z: kernel rank 2, saturated.
        let m = bi(&[&[1, 1, 1]]);
        let k = kernel_basis_int(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            let s: BigInt = v.iter().sum();
            assert!(s.is_zero());
        }
        // 2x = 3y: kernel generated by (3, 2).
        let m2 = bi(&[&[2, -3]]);
        let k2 = kernel_basis_int(&m2);
        assert_eq!(k2.len(), 1);
        let g = num::integer::gcd(k2[0][0].clone(), k2[0][1].clone());
        assert!(g.is_one());
    }

    #[test]
    fn nullspace_dimension() {
        let m: Vec<Vec<BigRational>> = vec![
            vec![
                BigRational::from_integer(1.into()),
                BigRational::from_integer(2.into()),
                BigRational::from_integer(3.into()),
            ],
            vec![
                BigRational::from_integer(2.into()),
                BigRational::from_integer(4.into()),
                BigRational::from_integer(6.into()),
            ],
        ];
        let ns = nullspace_rational(&m);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot = &v[0]
                + &v[1] * BigRational::from_integer(2.into())
                + &v[2] * BigRational::from_integer(3.into());
            assert!(dot.is_zero());
        }
    }
}
