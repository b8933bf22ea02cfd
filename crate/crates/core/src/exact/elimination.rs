//! Fraction-free elimination over an integral domain.
//!
//! Every intermediate entry is a minor of the input, so each division by the
//! previous pivot is exact. Pivot choice is deterministic: the first column
//! holding a nonzero entry among the unreduced rows, and in that column the
//! entry of smallest support (ties to the lowest row).

use rayon::prelude::*;

use super::gaussian::GaussianRational;
use super::ring::Ring;

/// Result of a full fraction-free Gauss-Jordan reduction.
#[derive(Clone, Debug)]
pub struct Reduction<R> {
    pub rank: usize,
    pub kernel: Vec<Vec<R>>,
}

// below this much work per step the thread-pool overhead dominates
const PARALLEL_THRESHOLD: usize = 4096;

fn choose_pivot<R: Ring>(rows: &[Vec<R>], from: usize, col: usize) -> Option<usize> {
    rows[from..]
        .iter()
        .enumerate()
        .filter(|(_, r)| !r[col].is_zero())
        .min_by_key(|(k, r)| (r[col].support(), *k))
        .map(|(k, _)| from + k)
}

/// `row[j] <- (p*row[j] - row[col]*pivot[j]) / d` for `j >= start`.
fn update_row<R: Ring>(row: &mut [R], pivot_row: &[R], col: usize, start: usize, p: &R, d: &R) {
    let factor = std::mem::replace(&mut row[col], R::zero());
    for j in start..row.len() {
        if j == col {
            continue;
        }
        let num = if factor.is_zero() || pivot_row[j].is_zero() {
            if row[j].is_zero() {
                continue;
            }
            row[j].times(p)
        } else {
            R::mul_sub_mul(p, &row[j], &factor, &pivot_row[j])
        };
        row[j] = num.div_exact(d).expect("fraction-free division must be exact");
    }
}

fn step_work<R: Ring>(rows: &[Vec<R>], pivot: usize) -> usize {
    let s: usize = rows[pivot].iter().map(Ring::support).sum();
    s * rows.len()
}

fn eliminate<R: Ring>(ncols: usize, mut rows: Vec<Vec<R>>, full: bool) -> (usize, Vec<usize>, Vec<Vec<R>>, R) {
    let mut d = R::one();
    let mut pivot_cols = Vec::new();
    let mut k = 0;
    for col in 0..ncols {
        if k == rows.len() {
            break;
        }
        let Some(pr) = choose_pivot(&rows, k, col) else { continue };
        rows.swap(k, pr);
        let pivot_row = rows[k].clone();
        let p = pivot_row[col].clone();
        // forward elimination only touches columns right of the pivot
        let start = if full { 0 } else { col };
        let work = |(i, row): (usize, &mut Vec<R>)| {
            if i == k || (!full && i < k) {
                return;
            }
            update_row(row, &pivot_row, col, start, &p, &d);
        };
        if step_work(&rows, k) >= PARALLEL_THRESHOLD {
            rows.par_iter_mut().enumerate().for_each(work);
        } else {
            rows.iter_mut().enumerate().for_each(work);
        }
        d = p;
        pivot_cols.push(col);
        k += 1;
    }
    (k, pivot_cols, rows, d)
}

/// Rank over the fraction field, by forward Bareiss elimination.
pub fn rank<R: Ring>(ncols: usize, rows: Vec<Vec<R>>) -> usize {
    eliminate(ncols, rows, false).0
}

/// Rank and a kernel basis with entries in the ring itself.
pub fn reduce<R: Ring>(ncols: usize, rows: Vec<Vec<R>>) -> Reduction<R> {
    let (rank, pivot_cols, rows, d) = eliminate(ncols, rows, true);
    // after a fraction-free Gauss-Jordan pass every pivot entry equals d
    let mut kernel = Vec::new();
    for f in (0..ncols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![R::zero(); ncols];
        v[f] = d.clone();
        for (k, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = rows[k][f].negate();
        }
        kernel.push(v);
    }
    Reduction { rank, kernel }
}

/// Determinant over Q(i) via forward elimination with fractions.
pub fn determinant(mut rows: Vec<Vec<GaussianRational>>) -> GaussianRational {
    let n = rows.len();
    let mut det = GaussianRational::one();
    for col in 0..n {
        let Some(pr) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
            return GaussianRational::zero();
        };
        if pr != col {
            rows.swap(pr, col);
            det = -det;
        }
        let inv = rows[col][col].inv().expect("nonzero pivot");
        det = &det * &rows[col][col];
        let pivot_row = rows[col].clone();
        for row in rows.iter_mut().skip(col + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] * &inv;
            for j in col..n {
                if !pivot_row[j].is_zero() {
                    row[j].sub_from(&(&f * &pivot_row[j]));
                }
            }
        }
    }
    det
}

/// Inverse over Q(i) by Gauss-Jordan with fractions; `None` if singular.
pub fn inverse(rows: Vec<Vec<GaussianRational>>) -> Option<Vec<Vec<GaussianRational>>> {
    let n = rows.len();
    let mut aug: Vec<Vec<GaussianRational>> = rows
        .into_iter()
        .enumerate()
        .map(|(r, mut row)| {
            row.extend((0..n).map(|c| if c == r { GaussianRational::one() } else { GaussianRational::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let pr = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(pr, col);
        let inv = aug[col][col].inv().ok()?;
        for v in aug[col].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    v.sub_from(&(&f * p));
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rows(v: &[&[i64]]) -> Vec<Vec<BigInt>> {
        v.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn kernel_of_rank_deficient_integer_matrix() {
        let m = rows(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[1, 0, 1, 0], &[0, 1, 1, 2]]);
        let red = reduce(4, m.clone());
        assert_eq!(red.rank, 2);
        assert_eq!(red.kernel.len(), 2);
        for v in &red.kernel {
            for r in &m {
                let dot: BigInt = r.iter().zip(v).map(|(a, b)| a * b).sum();
                assert_eq!(dot, BigInt::from(0));
            }
        }
        assert_eq!(rank(4, m), 2);
    }

    #[test]
    fn zero_columns_are_skipped() {
        let m = rows(&[&[0, 0, 5], &[0, 0, 7]]);
        let red = reduce(3, m);
        assert_eq!(red.rank, 1);
        assert_eq!(red.kernel.len(), 2);
    }
}
