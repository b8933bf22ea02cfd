//! Dense matrices over an exact ring, and the two concrete matrix kinds used
//! by the geometry: scalar entries in Q(i) and polynomial entries over Q(i).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::context::VariableContext;
use super::elimination::{self, Reduction};
use super::gaussian::GaussianRational;
use super::poly::MultiPoly;
use super::ring::{GaussInt, Ring};
use super::sparse::SparsePoly;
use crate::error::{Error, Result};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for (k, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Dimension(format!("row {k} has {} entries, expected {cols}", r.len())));
            }
            data.extend(r);
        }
        Ok(Matrix { rows: nrows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn map<S>(&self, f: impl Fn(&T) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Rows of `self` followed by the rows of `other`.
    pub fn stack(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != other.cols {
            return Err(Error::Dimension(format!("stacking {} and {} columns", self.cols, other.cols)));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn transpose(&self) -> Matrix<T> {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }
}

/// Rank and a kernel basis (right null space) of a matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct RankKernel<T> {
    pub rank: usize,
    pub kernel: Vec<Vec<T>>,
}

fn row_denominator_lcm(row: &[GaussianRational]) -> BigInt {
    row.iter().fold(<BigInt as One>::one(), |acc, v| acc.lcm(&v.denominator_lcm()))
}

fn content_reduce(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(<BigInt as Zero>::zero(), |acc, x| acc.gcd(x));
    if Zero::is_zero(&g) || g.is_one() {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

impl Matrix<GaussianRational> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { GaussianRational::one() } else { GaussianRational::zero() })
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(GaussianRational::is_real)
    }

    /// Each row scaled to Gaussian-integer entries (rank and kernel unchanged).
    fn cleared_gauss(&self) -> Vec<Vec<GaussInt>> {
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let l = row_denominator_lcm(row);
                row.iter().map(|v| v.to_gauss_int(&l)).collect()
            })
            .collect()
    }

    fn cleared_real(&self) -> Vec<Vec<BigInt>> {
        self.cleared_gauss().into_iter().map(|row| row.into_iter().map(|g| g.re).collect()).collect()
    }

    pub fn rank(&self) -> usize {
        if self.is_real() {
            elimination::rank(self.cols, self.cleared_real())
        } else {
            elimination::rank(self.cols, self.cleared_gauss())
        }
    }

    pub fn rank_kernel(&self) -> RankKernel<GaussianRational> {
        if self.is_real() {
            let Reduction { rank, kernel } = elimination::reduce(self.cols, self.cleared_real());
            let kernel = kernel
                .into_iter()
                .map(|v| content_reduce(v).into_iter().map(GaussianRational::from).collect())
                .collect();
            RankKernel { rank, kernel }
        } else {
            let Reduction { rank, kernel } = elimination::reduce(self.cols, self.cleared_gauss());
            let kernel = kernel.into_iter().map(|v| v.iter().map(GaussianRational::from_gauss_int).collect()).collect();
            RankKernel { rank, kernel }
        }
    }

    pub fn mul_vec(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = GaussianRational::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_to(&(a * b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows);
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = GaussianRational::zero();
            for k in 0..self.cols {
                let (a, b) = (self.get(r, k), rhs.get(k, c));
                if !a.is_zero() && !b.is_zero() {
                    acc.add_to(&(a * b));
                }
            }
            acc
        })
    }

    pub fn scale(&self, k: &GaussianRational) -> Self {
        self.map(|v| v * k)
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        elimination::inverse(self.to_rows()).map(|rows| Matrix::from_rows(self.cols, rows).expect("square"))
    }

    /// Determinant of a square matrix.
    pub fn determinant(&self) -> GaussianRational {
        assert_eq!(self.rows, self.cols);
        let rows: Vec<Vec<GaussianRational>> = self.to_rows();
        elimination::determinant(rows)
    }
}

impl Matrix<MultiPoly> {
    fn context(&self) -> Result<VariableContext> {
        let ctx = self.data.first().map(MultiPoly::ctx).ok_or_else(|| Error::Dimension("empty matrix".into()))?;
        if let Some(p) = self.data.iter().find(|p| p.ctx() != ctx) {
            return Err(Error::ContextMismatch(ctx.to_string(), p.ctx().to_string()));
        }
        Ok(ctx)
    }

    fn is_real(&self) -> bool {
        self.data.iter().all(|p| p.terms().iter().all(|(_, c)| c.is_real()))
    }

    fn cleared_gauss(&self) -> Vec<Vec<SparsePoly<GaussInt>>> {
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let l = row
                    .iter()
                    .flat_map(|p| p.terms().iter().map(|(_, c)| c.denominator_lcm()))
                    .fold(<BigInt as One>::one(), |acc, d| acc.lcm(&d));
                row.iter().map(|p| p.sparse().map_coefficients(|c| c.to_gauss_int(&l))).collect()
            })
            .collect()
    }

    fn cleared_real(&self) -> Vec<Vec<SparsePoly<BigInt>>> {
        self.cleared_gauss()
            .into_iter()
            .map(|row| row.into_iter().map(|p| p.map_coefficients(|g| g.re.clone())).collect())
            .collect()
    }

    /// Rank over the fraction field of the polynomial ring.
    pub fn rank(&self) -> Result<usize> {
        if self.rows == 0 || self.cols == 0 {
            return Ok(0);
        }
        self.context()?;
        Ok(if self.is_real() {
            elimination::rank(self.cols, self.cleared_real())
        } else {
            elimination::rank(self.cols, self.cleared_gauss())
        })
    }

    /// Rank and kernel with polynomial entries (denominators cleared).
    pub fn rank_kernel(&self) -> Result<RankKernel<MultiPoly>> {
        if self.rows == 0 || self.cols == 0 {
            return Ok(RankKernel { rank: 0, kernel: Vec::new() });
        }
        let ctx = self.context()?;
        let Reduction { rank, kernel } = elimination::reduce(self.cols, self.cleared_gauss());
        let kernel = kernel
            .into_iter()
            .map(|v| {
                v.iter()
                    .map(|p| MultiPoly::from_sparse(ctx, p.map_coefficients(GaussianRational::from_gauss_int)))
                    .collect()
            })
            .collect();
        Ok(RankKernel { rank, kernel })
    }

    /// Substitutes scalar values for every variable of every entry.
    pub fn specialize(&self, point: &[GaussianRational]) -> Result<Matrix<GaussianRational>> {
        let data = self.data.iter().map(|p| p.evaluate(point)).collect::<Result<_>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn mul_vec(&self, v: &[MultiPoly]) -> Result<Vec<MultiPoly>> {
        assert_eq!(v.len(), self.cols);
        let ctx = self.context()?;
        (0..self.rows)
            .map(|r| {
                let mut acc = MultiPoly::zero(ctx);
                for (a, b) in self.row(r).iter().zip(v) {
                    acc = acc.try_add(&a.try_mul(b)?)?;
                }
                Ok(acc)
            })
            .collect()
    }
}

/// A matrix whose entries all live in one coefficient ring.
#[derive(Clone, Debug, PartialEq)]
pub enum ExactMatrix {
    Scalar(Matrix<GaussianRational>),
    Poly(Matrix<MultiPoly>),
}

/// Kernel basis of an [`ExactMatrix`], in the entry ring of the matrix.
#[derive(Clone, Debug, PartialEq)]
pub enum Kernel {
    Scalar(Vec<Vec<GaussianRational>>),
    Poly(Vec<Vec<MultiPoly>>),
}

impl Kernel {
    pub fn len(&self) -> usize {
        match self {
            Kernel::Scalar(k) => k.len(),
            Kernel::Poly(k) => k.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl ExactMatrix {
    pub fn rows(&self) -> usize {
        match self {
            ExactMatrix::Scalar(m) => m.rows(),
            ExactMatrix::Poly(m) => m.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            ExactMatrix::Scalar(m) => m.cols(),
            ExactMatrix::Poly(m) => m.cols(),
        }
    }

    pub fn rank(&self) -> Result<usize> {
        match self {
            ExactMatrix::Scalar(m) => Ok(m.rank()),
            ExactMatrix::Poly(m) => m.rank(),
        }
    }

    /// Exact rank and kernel basis via fraction-free elimination.
    pub fn rank_kernel(&self) -> Result<(usize, Kernel)> {
        match self {
            ExactMatrix::Scalar(m) => {
                let rk = m.rank_kernel();
                Ok((rk.rank, Kernel::Scalar(rk.kernel)))
            }
            ExactMatrix::Poly(m) => {
                let rk = m.rank_kernel()?;
                Ok((rk.rank, Kernel::Poly(rk.kernel)))
            }
        }
    }
}

/// Free-function form of [`ExactMatrix::rank_kernel`].
pub fn rank_kernel(m: &ExactMatrix) -> Result<(usize, Kernel)> {
    m.rank_kernel()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    fn mat(rows: &[&[&str]]) -> Matrix<GaussianRational> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|s| q(s)).collect()).collect()).unwrap()
    }

    #[test]
    fn identity_has_full_rank() {
        let rk = Matrix::identity(3).rank_kernel();
        assert_eq!(rk.rank, 3);
        assert!(rk.kernel.is_empty());
    }

    #[test]
    fn empty_matrix() {
        let m: Matrix<GaussianRational> = Matrix::from_rows(3, vec![]).unwrap();
        let rk = m.rank_kernel();
        assert_eq!(rk.rank, 0);
        assert_eq!(rk.kernel.len(), 3);
    }

    #[test]
    fn complex_kernel_is_exact() {
        let m = mat(&[&["1", "i", "1/2+1/2i", "0"], &["2", "2i", "1+i", "0"], &["0", "1", "3", "1-2i"]]);
        let rk = m.rank_kernel();
        assert_eq!(rk.rank, 2);
        assert_eq!(rk.kernel.len(), 2);
        for v in &rk.kernel {
            assert!(m.mul_vec(v).iter().all(GaussianRational::is_zero));
        }
    }

    #[test]
    fn polynomial_rank() {
        let ctx = VariableContext::ABCD;
        let p = |s: &str| MultiPoly::parse(ctx, s).unwrap();
        // second row is a times the first; third is independent
        let m = Matrix::from_rows(
            3,
            vec![vec![p("a"), p("b"), p("c^2")], vec![p("a^2"), p("a*b"), p("a*c^2")], vec![p("d"), p("1"), p("i*a")]],
        )
        .unwrap();
        let rk = m.rank_kernel().unwrap();
        assert_eq!(rk.rank, 2);
        assert_eq!(rk.kernel.len(), 1);
        assert!(m.mul_vec(&rk.kernel[0]).unwrap().iter().all(MultiPoly::is_zero));
        // specialization can only lower the rank
        let at = m.specialize(&[0, 1, 0, 0].map(GaussianRational::from)).unwrap();
        assert!(at.rank() <= 2);
    }

    #[test]
    fn determinant_of_complex_matrix() {
        let m = mat(&[&["1", "i"], &["i", "1"]]);
        assert_eq!(m.determinant(), q("2"));
    }
}
