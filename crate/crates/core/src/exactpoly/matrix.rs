use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Dense matrix of rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: (0..rows * cols).map(|_| Rational::zero()).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, data }
    }

    /// Builds from rows; `cols` fixes the width when there are no rows.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::SizeMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                bad.len()
            )));
        }
        let nrows = rows.len();
        Ok(RationalMatrix {
            rows: nrows,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn sub(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    /// Stacks `other` below `self`.
    pub fn stack(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.cols {
            return Err(Error::SizeMismatch(format!(
                "cannot stack {} columns on {} columns",
                other.cols, self.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(RationalMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> RationalMatrix {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    /// Reduced row echelon form, pivot columns and rank.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>, usize) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let v = &m[(r, j)] * &f;
                    m[(i, j)] -= v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        let rank = pivots.len();
        (m, pivots, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().2
    }

    /// Basis of the right null space.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let (r, pivots, _) = self.rref();
        let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|c| !pivot_set.contains(c)) {
            let mut v: Vec<Rational> = (0..self.cols).map(|_| Rational::zero()).collect();
            v[f] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r[(row, f)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Determinant of the submatrix on the given rows and columns.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Rational> {
        if rows.len() != cols.len() {
            return Err(Error::SizeMismatch(format!(
                "minor with {} rows and {} columns",
                rows.len(),
                cols.len()
            )));
        }
        for (idx, bound, what) in [(rows, self.rows, "row"), (cols, self.cols, "column")] {
            if let Some(bad) = idx.iter().find(|&&i| i >= bound) {
                return Err(Error::SizeMismatch(format!("{what} index {bad} out of range")));
            }
            let distinct: BTreeSet<&usize> = idx.iter().collect();
            if distinct.len() != idx.len() {
                return Err(Error::SizeMismatch(format!("repeated {what} index")));
            }
        }
        Ok(bareiss(self.submatrix(rows, cols)))
    }

    pub fn determinant(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::SizeMismatch("determinant of a non-square matrix".into()));
        }
        Ok(bareiss(self.clone()))
    }

    /// Solves `self · x = rhs` for square invertible `self`.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        let inv = self.inverse()?;
        Some(inv.mul_vec(rhs))
    }

    pub fn inverse(&self) -> Option<RationalMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let (r, pivots, _) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Fraction-free elimination; every intermediate quotient is exact.
fn bareiss(mut m: RationalMatrix) -> Rational {
    let n = m.rows;
    if n == 0 {
        return Rational::one();
    }
    let mut sign = Rational::one();
    let mut prev = Rational::one();
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                return Rational::zero();
            };
            m.swap_rows(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                m[(i, j)] = v;
            }
        }
        prev = m[(k, k)].clone();
    }
    sign * m[(n - 1, n - 1)].clone()
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<alloc::string::String> =
                self.row(i).iter().map(|c| format!("{c}")).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::{int, rat};
    use alloc::vec;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        RationalMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect(),
            cols,
        )
        .unwrap()
    }

    #[test]
    fn rref_examples() {
        let id = RationalMatrix::identity(3);
        let (r, pivots, rank) = id.rref();
        assert_eq!((r, pivots, rank), (id.clone(), vec![0, 1, 2], 3));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        // two points of P^1 evaluated on x0^2, x0*x1, x1^2
        let ev = m(&[&[1, 1, 1], &[1, 2, 4]]);
        assert_eq!(ev.rank(), 2);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(RationalMatrix::zeros(2, 3).kernel().len(), 3);
        assert!(RationalMatrix::identity(4).kernel().is_empty());
        let k = m(&[&[1, 1, 0]]).kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m(&[&[1, 1, 0]]).mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn minor_examples() {
        let id = RationalMatrix::identity(2);
        assert_eq!(id.minor(&[0, 1], &[0, 1]).unwrap(), int(1));
        assert!(id.minor(&[0, 1], &[1, 1]).is_err());
        assert!(id.minor(&[0, 1], &[0]).is_err());
        assert!(id.minor(&[0, 2], &[0, 1]).is_err());
        assert_eq!(m(&[&[1, 2], &[3, 4]]).determinant().unwrap(), int(-2));
        assert_eq!(RationalMatrix::zeros(0, 0).determinant().unwrap(), int(1));
        // needs a row swap
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant().unwrap(), int(-1));
    }

    #[test]
    fn inverse_and_solve() {
        let a = RationalMatrix::from_rows(
            vec![vec![int(2), int(1)], vec![int(1), rat(1, 3)]],
            2,
        )
        .unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), RationalMatrix::identity(2));
        let x = a.solve(&[int(1), int(0)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![int(1), int(0)]);
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    fn arb_matrix() -> impl Strategy<Value = RationalMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..4, r * c).prop_map(move |v| {
                RationalMatrix::from_fn(r, c, |i, j| int(v[i * c + j]))
            })
        })
    }

    /// Cofactor expansion, independent of the elimination code.
    fn laplace(a: &RationalMatrix) -> Rational {
        let n = a.rows();
        if n == 0 {
            return int(1);
        }
        let mut acc = int(0);
        for j in 0..n {
            let rows: Vec<usize> = (1..n).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let sub = a.submatrix(&rows, &cols);
            let term = &a[(0, j)] * laplace(&sub);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    proptest! {
        #[test]
        fn rref_idempotent_and_rank_symmetric(a in arb_matrix()) {
            let (r, _, rank) = a.rref();
            prop_assert_eq!(r.rref().0, r.clone());
            prop_assert_eq!(rank, a.transpose().rank());
        }

        #[test]
        fn kernel_is_independent_and_annihilated(a in arb_matrix()) {
            let k = a.kernel();
            prop_assert_eq!(k.len(), a.cols() - a.rank());
            for v in &k {
                prop_assert!(a.mul_vec(v).iter().all(Zero::is_zero));
            }
            if !k.is_empty() {
                let km = RationalMatrix::from_rows(k.clone(), a.cols()).unwrap();
                prop_assert_eq!(km.rank(), k.len());
            }
        }

        #[test]
        fn bareiss_matches_laplace(n in 1usize..5, v in proptest::collection::vec(-4i64..5, 16)) {
            let a = RationalMatrix::from_fn(n, n, |i, j| rat(v[i * 4 + j], 1 + (i as i64 + j as i64) % 3));
            prop_assert_eq!(a.determinant().unwrap(), laplace(&a));
        }
    }
}
