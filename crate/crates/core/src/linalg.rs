//! Small exact linear algebra over Q(q,t): Gaussian elimination for the
//! base-change and basis-expansion solves. Matrices here are tiny (at most
//! p(n) x p(n) for the working degree), so no pivoting strategy beyond
//! "first nonzero" is needed; arithmetic is exact.

use crate::qt::RatQT;

pub type Matrix = Vec<Vec<RatQT>>;

/// Solve A x = b for square A. Returns None when A is singular.
pub fn solve(a: &Matrix, b: &[RatQT]) -> Option<Vec<RatQT>> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n) && b.len() == n);
    let mut m: Matrix = a.to_vec();
    let mut rhs = b.to_vec();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = m[col][col].inv();
        for c in col..n {
            m[col][c] = &m[col][c] * &inv;
        }
        rhs[col] = &rhs[col] * &inv;
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..n {
                    m[r][c] = &m[r][c] - &(&f * &m[col][c]);
                }
                rhs[r] = &rhs[r] - &(&f * &rhs[col]);
            }
        }
    }
    Some(rhs)
}

/// Inverse of a square matrix. None when singular.
pub fn invert(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<RatQT> = (0..n)
            .map(|i| if i == j { RatQT::one() } else { RatQT::zero() })
            .collect();
        cols.push(solve(a, &e)?);
    }
    // cols[j] is the j-th column of the inverse.
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_2x2_with_qt_entries() {
        // [[1, q], [t, 1]] x = [1+q*t, 2t]  =>  x = [(1+qt-2qt)/(1-qt), ...]
        let a = vec![
            vec![RatQT::one(), RatQT::q()],
            vec![RatQT::t(), RatQT::one()],
        ];
        let x = vec![RatQT::from_int(3), RatQT::big_m()];
        let b = vec![
            &x[0] + &(&RatQT::q() * &x[1]),
            &(&RatQT::t() * &x[0]) + &x[1],
        ];
        assert_eq!(solve(&a, &b).unwrap(), x);
    }

    #[test]
    fn invert_round_trip() {
        let a = vec![
            vec![RatQT::one(), RatQT::q(), RatQT::zero()],
            vec![RatQT::zero(), RatQT::one(), RatQT::t()],
            vec![RatQT::qt(), RatQT::zero(), RatQT::one()],
        ];
        let inv = invert(&a).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let mut s = RatQT::zero();
                for k in 0..3 {
                    s = &s + &(&a[i][k] * &inv[k][j]);
                }
                let expect = if i == j { RatQT::one() } else { RatQT::zero() };
                assert_eq!(s, expect);
            }
        }
    }

    #[test]
    fn singular_matrix_rejected() {
        let a = vec![
            vec![RatQT::one(), RatQT::one()],
            vec![RatQT::q(), RatQT::q()],
        ];
        assert!(solve(&a, &[RatQT::one(), RatQT::zero()]).is_none());
    }
}
