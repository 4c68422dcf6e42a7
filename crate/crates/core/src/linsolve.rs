//! Exact Gauss-Jordan elimination over the rationals.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Solves `A X = B` for a square nonsingular `A` (`n × n`) and `B` given
/// as `n` rows of `k` right-hand-side entries.
pub fn solve_columns(
    a: &[Vec<BigRational>],
    b: &[Vec<BigRational>],
) -> Result<Vec<Vec<BigRational>>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(Error::RangeViolation("system shape mismatch".into()));
    }
    let k = b.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(r, s)| r.iter().chain(s.iter()).cloned().collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(Error::Singular)?;
        m.swap(col, pivot);
        let inv = BigRational::one() / &m[col][col];
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
    }
    Ok(m.into_iter().map(|row| row[n..n + k].to_vec()).collect())
}

/// Solves `A x = b` for a square nonsingular `A`.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Result<Vec<BigRational>> {
    let cols: Vec<Vec<BigRational>> = b.iter().map(|x| vec![x.clone()]).collect();
    Ok(solve_columns(a, &cols)?
        .into_iter()
        .map(|mut r| r.remove(0))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};
    use proptest::prelude::*;

    #[test]
    fn two_by_two() {
        let a = vec![vec![rat(2), rat(1)], vec![rat(1), rat(3)]];
        let x = solve(&a, &[rat(3), rat(5)]).unwrap();
        assert_eq!(x, vec![ratio(4, 5), ratio(7, 5)]);
    }

    #[test]
    fn needs_pivoting() {
        let a = vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]];
        assert_eq!(solve(&a, &[rat(7), rat(9)]).unwrap(), vec![rat(9), rat(7)]);
    }

    #[test]
    fn singular_is_reported() {
        let a = vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
        assert_eq!(solve(&a, &[rat(1), rat(1)]), Err(Error::Singular));
    }

    proptest! {
        #[test]
        fn residual_is_zero(entries in prop::collection::vec(-5i64..6, 9), rhs in prop::collection::vec(-5i64..6, 3)) {
            let a: Vec<Vec<BigRational>> = entries.chunks(3).map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
            let b: Vec<BigRational> = rhs.iter().map(|&x| rat(x)).collect();
            if let Ok(x) = solve(&a, &b) {
                for (row, bi) in a.iter().zip(&b) {
                    let s: BigRational = row.iter().zip(&x).map(|(p, q)| p * q).sum();
                    prop_assert_eq!(&s, bi);
                }
            }
        }
    }
}
