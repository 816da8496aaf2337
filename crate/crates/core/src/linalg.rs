//! Exact dense linear algebra over the rational-function field: solving
//! square systems and computing ranks.

use crate::scalars::Rf;

/// Solves A·X = B exactly for a square A given by rows; `b` holds the
/// right-hand sides as rows of the same height. Returns None when A is
/// singular over the function field.
pub fn solve_dense(a: &[Vec<Rf>], b: &[Vec<Rf>]) -> Option<Vec<Vec<Rf>>> {
    let n = a.len();
    let m = if n == 0 { 0 } else { b[0].len() };
    let mut aug: Vec<Vec<Rf>> = a
        .iter()
        .zip(b)
        .map(|(ar, br)| ar.iter().chain(br.iter()).cloned().collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = aug[col][col].inv().ok()?;
        for x in aug[col][col..].iter_mut() {
            *x = x.mul(&inv);
        }
        for r in 0..n {
            if r == col || aug[r][col].is_zero() {
                continue;
            }
            let f = aug[r][col].clone();
            for c in col..n + m {
                let delta = f.mul(&aug[col][c]);
                aug[r][c] = aug[r][c].sub(&delta);
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Exact rank of a rectangular matrix over the function field.
pub fn rank_dense(a: &[Vec<Rf>]) -> usize {
    let mut rows: Vec<Vec<Rf>> = a.to_vec();
    let nrows = rows.len();
    let ncols = if nrows == 0 { 0 } else { rows[0].len() };
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv().unwrap();
        for x in rows[rank][col..].iter_mut() {
            *x = x.mul(&inv);
        }
        for r in rank + 1..nrows {
            if rows[r][col].is_zero() {
                continue;
            }
            let f = rows[r][col].clone();
            for c in col..ncols {
                let delta = f.mul(&rows[rank][c]);
                rows[r][c] = rows[r][c].sub(&delta);
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::parse_scalar;

    fn rf(s: &str) -> Rf {
        parse_scalar(s).unwrap()
    }

    #[test]
    fn solve_2x2_symbolic() {
        // [[q, 1], [0, q]] x = [[1],[q]] -> x = [[(q-1)/q... ]] check via residual
        let a = vec![vec![rf("q"), rf("1")], vec![rf("0"), rf("q")]];
        let b = vec![vec![rf("1")], vec![rf("q")]];
        let x = solve_dense(&a, &b).unwrap();
        for i in 0..2 {
            let mut acc = Rf::zero();
            for k in 0..2 {
                acc = acc.add(&a[i][k].mul(&x[k][0]));
            }
            assert_eq!(acc, b[i][0]);
        }
    }

    #[test]
    fn singular_detected() {
        let a = vec![vec![rf("1"), rf("q")], vec![rf("q"), rf("q^2")]];
        let b = vec![vec![rf("1")], vec![rf("0")]];
        assert!(solve_dense(&a, &b).is_none());
    }

    #[test]
    fn rank_examples() {
        let a = vec![vec![rf("1"), rf("q")], vec![rf("q"), rf("q^2")]];
        assert_eq!(rank_dense(&a), 1);
        let b = vec![vec![rf("q"), rf("1")], vec![rf("1"), rf("q")]];
        assert_eq!(rank_dense(&b), 2);
        let z = vec![vec![Rf::zero(), Rf::zero()]];
        assert_eq!(rank_dense(&z), 0);
    }
}
