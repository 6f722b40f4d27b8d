//! Exact linear algebra over ℚ(params).

use super::RatFunc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("linear system has no solution")]
    Inconsistent,
    #[error("linear system has a {0}-dimensional solution space")]
    Underdetermined(usize),
    #[error("dimension mismatch: {0}")]
    Shape(String),
}

/// Reduces `m` in place to reduced row echelon form and returns the pivot
/// columns.  Among the candidate rows for a pivot the entry with the fewest
/// terms is chosen.
pub fn row_reduce(m: &mut Vec<Vec<RatFunc>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(best) = (r..m.len()).filter(|&i| !m[i][c].is_zero()).min_by_key(|&i| m[i][c].complexity()) else {
            continue;
        };
        m.swap(r, best);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        let row: Vec<RatFunc> = m[r].iter().map(|x| x * &inv).collect();
        m[r] = row;
        for i in 0..m.len() {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..ncols {
                if m[r][j].is_zero() {
                    continue;
                }
                let x = &m[i][j] - &(&f * &m[r][j]);
                m[i][j] = x;
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

/// Basis of {x : m x = 0}, one vector per free column, with that free
/// coordinate equal to 1.
pub fn nullspace(m: &[Vec<RatFunc>], ncols: usize) -> Vec<Vec<RatFunc>> {
    let mut a: Vec<Vec<RatFunc>> = m.to_vec();
    for row in &a {
        assert_eq!(row.len(), ncols, "ragged matrix");
    }
    let pivots = row_reduce(&mut a, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![RatFunc::zero(); ncols];
            v[f] = RatFunc::one();
            for (row, &p) in a.iter().zip(&pivots) {
                v[p] = -&row[f];
            }
            v
        })
        .collect()
}

/// The unique x with a x = b.
pub fn solve(a: &[Vec<RatFunc>], b: &[RatFunc]) -> Result<Vec<RatFunc>, LinAlgError> {
    if a.len() != b.len() {
        return Err(LinAlgError::Shape(format!("{} rows but {} right-hand sides", a.len(), b.len())));
    }
    let ncols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut aug: Vec<Vec<RatFunc>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return Err(LinAlgError::Inconsistent);
    }
    if pivots.len() < ncols {
        return Err(LinAlgError::Underdetermined(ncols - pivots.len()));
    }
    Ok(aug.iter().map(|r| r[ncols].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{param, Var};

    #[test]
    fn symbolic_solve() {
        let q = param(Var::Q);
        let t = param(Var::T);
        let one = RatFunc::one();
        // [1 q; t 1] x = [1, 0]
        let a = vec![vec![one.clone(), q.clone()], vec![t.clone(), one.clone()]];
        let x = solve(&a, &[one.clone(), RatFunc::zero()]).unwrap();
        let det = &one - &(&q * &t);
        assert_eq!(x[0], &one / &det);
        assert_eq!(x[1], -&(&t / &det));
    }

    #[test]
    fn nullspace_dimension() {
        let q = param(Var::Q);
        let a = vec![vec![q.clone(), RatFunc::one(), RatFunc::zero()], vec![q.clone(), RatFunc::one(), RatFunc::zero()]];
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let s = &(&q * &v[0]) + &v[1];
            assert!(s.is_zero());
        }
        assert_eq!(solve(&a, &[RatFunc::one(), RatFunc::zero()]), Err(LinAlgError::Inconsistent));
    }
}
