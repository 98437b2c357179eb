use super::Matrix;
use crate::error::{Error, Result};
use crate::scalar::ExactInt;

/// `U * A * V = D` with `U`, `V` unimodular and `D` diagonal, non-negative,
/// and divisibility-chained (`d_i | d_{i+1}`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smith<T> {
    pub u: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: ExactInt> Smith<T> {
    /// Diagonal entries `d_0, d_1, ...` (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<T> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Number of nonzero invariant factors, i.e. the rank over the rationals.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }

    /// Invariant factors greater than one: the torsion of the cokernel.
    pub fn torsion(&self) -> Vec<T> {
        self.diagonal().into_iter().filter(|d| *d > T::one()).collect()
    }
}

/// Smith normal form with deterministic pivoting: the pivot is the nonzero
/// entry of smallest absolute value in the active block, ties broken in
/// row-major order.
pub fn smith_normal_form<T: ExactInt>(a: &Matrix<T>) -> Smith<T> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = Matrix::identity(rows);
    let mut v = Matrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = smallest_entry(&d, t) else {
                return Smith { u, d, v };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&pivot);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&pivot);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = T::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    Smith { u, d, v }
}

fn smallest_entry<T: ExactInt>(m: &Matrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    for i in t..m.rows() {
        for j in t..m.cols() {
            let x = m[(i, j)].abs();
            if x.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(_, _, b)| x < *b) {
                best = Some((i, j, x));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Finds some integer `x` with `A x = v`, or `None` when no integer solution
/// exists.
pub fn solve_integer<T: ExactInt>(a: &Matrix<T>, rhs: &[T]) -> Result<Option<Vec<T>>> {
    if rhs.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!("right-hand side of length {} for {} rows", rhs.len(), a.rows())));
    }
    let smith = smith_normal_form(a);
    // D y = U v, x = V y
    let w = smith.u.apply(rhs)?;
    let diag = smith.diagonal();
    let mut y = vec![T::zero(); a.cols()];
    for (i, wi) in w.iter().enumerate() {
        match diag.get(i) {
            Some(di) if !di.is_zero() => {
                let (q, r) = wi.div_rem(di);
                if !r.is_zero() {
                    return Ok(None);
                }
                y[i] = q;
            }
            _ => {
                if !wi.is_zero() {
                    return Ok(None);
                }
            }
        }
    }
    Ok(Some(smith.v.apply(&y)?))
}
