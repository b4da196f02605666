//! Fraction-free (Bareiss) elimination over the integers: exact rank and
//! determinant. Rational matrices are handled by clearing denominators
//! row by row, which leaves the rank unchanged.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rank of an integer matrix (rows of equal length).
pub fn bareiss_rank(mat: &[Vec<BigInt>]) -> usize {
    let rows = mat.len();
    if rows == 0 {
        return 0;
    }
    let cols = mat[0].len();
    let mut a: Vec<Vec<BigInt>> = mat.to_vec();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for step in 0..rows.min(cols) {
        // full pivoting keeps the division chain exact regardless of
        // zero rows/columns in the remaining block
        let mut pivot = None;
        'search: for i in step..rows {
            for j in step..cols {
                if !a[i][j].is_zero() {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(step, pi);
        if pj != step {
            for row in a.iter_mut() {
                row.swap(step, pj);
            }
        }
        for i in (step + 1)..rows {
            for j in (step + 1)..cols {
                let num = &a[step][step] * &a[i][j] - &a[i][step] * &a[step][j];
                a[i][j] = num / &prev; // exact by Sylvester's identity
            }
            a[i][step] = BigInt::zero();
        }
        prev = a[step][step].clone();
        rank += 1;
    }
    rank
}

/// Exact determinant of a square integer matrix via Bareiss; the last
/// pivot is the determinant (sign-corrected for swaps).
pub fn bareiss_det(mat: &[Vec<BigInt>]) -> BigInt {
    let n = mat.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(mat.iter().all(|r| r.len() == n), "matrix must be square");
    let mut a: Vec<Vec<BigInt>> = mat.to_vec();
    let mut prev = BigInt::one();
    let mut sign = 1;
    for step in 0..n {
        if a[step][step].is_zero() {
            let Some(pi) = ((step + 1)..n).find(|&i| !a[i][step].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(step, pi);
            sign = -sign;
        }
        for i in (step + 1)..n {
            for j in (step + 1)..n {
                let num = &a[step][step] * &a[i][j] - &a[i][step] * &a[step][j];
                a[i][j] = num / &prev;
            }
            a[i][step] = BigInt::zero();
        }
        prev = a[step][step].clone();
    }
    if sign < 0 {
        -prev
    } else {
        prev
    }
}

/// Exact rank of a rational matrix.
pub fn rational_rank(mat: &[Vec<BigRational>]) -> usize {
    let scaled: Vec<Vec<BigInt>> = mat
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();
    bareiss_rank(&scaled)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(
            bareiss_rank(&int_matrix(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]])),
            0
        );
        assert_eq!(
            bareiss_rank(&int_matrix(&[
                &[1, 0, 0, 0],
                &[0, 1, 0, 0],
                &[0, 0, 1, 0],
                &[0, 0, 0, 1]
            ])),
            4
        );
        // A(K_2)
        assert_eq!(bareiss_rank(&int_matrix(&[&[0, 1], &[1, 0]])), 2);
        // rank-deficient with a zero leading column
        assert_eq!(
            bareiss_rank(&int_matrix(&[&[0, 2, 4], &[0, 1, 2], &[0, 3, 6]])),
            1
        );
        assert_eq!(
            bareiss_rank(&int_matrix(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]])),
            2
        );
    }

    #[test]
    fn det_examples() {
        assert_eq!(
            bareiss_det(&int_matrix(&[&[0, 1], &[1, 0]])),
            BigInt::from(-1)
        );
        assert_eq!(
            bareiss_det(&int_matrix(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]])),
            BigInt::from(30)
        );
        assert_eq!(
            bareiss_det(&int_matrix(&[&[0, 1, 2], &[1, 0, 3], &[4, 5, 6]])),
            BigInt::from(16)
        );
        assert_eq!(
            bareiss_det(&int_matrix(&[&[1, 2], &[2, 4]])),
            BigInt::zero()
        );
    }

    #[test]
    fn rational_rank_examples() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        let one = BigRational::from(BigInt::from(1));
        // rows proportional: rank 1
        let m = vec![
            vec![half.clone(), third.clone()],
            vec![
                one.clone() * &half * BigRational::from(BigInt::from(6)),
                third * BigRational::from(BigInt::from(6)),
            ],
        ];
        assert_eq!(rational_rank(&m), 1);
        let id = vec![
            vec![one.clone(), BigRational::zero()],
            vec![BigRational::zero(), one],
        ];
        assert_eq!(rational_rank(&id), 2);
    }
}
