//! Dense matrices with exact kernels.
//!
//! Matrices are dense and row-major. Determinants and ranks use one-step
//! fraction-free (Bareiss) elimination: every intermediate entry is a minor
//! of the original matrix, so each division is exact and values never leave
//! the scalar ring. Nothing here rounds.

use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{FrameError, Result};
use crate::scalar::Scalar;
use crate::{FrameMatrix, Int, Rational, RationalMatrix};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>, // row-major, length rows * cols
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(FrameError::BadShape);
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(FrameError::BadShape);
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scaled(&self, factor: &T) -> Self {
        self.map(|x| x.clone() * factor.clone())
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(FrameError::DimensionMismatch);
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j).clone() + a.clone() * rhs.get(k, j).clone();
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    fn row_dot(&self, a: usize, b: usize) -> T {
        let mut acc = T::zero();
        for k in 0..self.cols {
            acc = acc + self.get(a, k).clone() * self.get(b, k).clone();
        }
        acc
    }

    pub fn col_dot(&self, a: usize, b: usize) -> T {
        let mut acc = T::zero();
        for k in 0..self.rows {
            acc = acc + self.get(k, a).clone() * self.get(k, b).clone();
        }
        acc
    }

    /// The frame operator `A * A^T`: entry (i, j) is the exact inner product
    /// of rows i and j.
    pub fn frame_operator(&self) -> Self {
        let mut out = Self::zeros(self.rows, self.rows);
        for i in 0..self.rows {
            for j in i..self.rows {
                let v = self.row_dot(i, j);
                out.set(i, j, v.clone());
                out.set(j, i, v);
            }
        }
        out
    }

    /// The Gram matrix `A^T * A`: entry (i, j) is the exact inner product of
    /// columns i and j (of frame vectors i and j).
    pub fn gram(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.cols);
        for i in 0..self.cols {
            for j in i..self.cols {
                let v = self.col_dot(i, j);
                out.set(i, j, v.clone());
                out.set(j, i, v);
            }
        }
        out
    }

    /// Restriction to a set of rows, preserving column order. Dropping rows
    /// of a frame matrix yields a frame matrix again.
    pub fn row_restrict(&self, keep: &[usize]) -> Result<Self> {
        if keep.is_empty() {
            return Err(FrameError::EmptyRowSelection);
        }
        if keep.iter().any(|&r| r >= self.rows) {
            return Err(FrameError::IndexOutOfRange);
        }
        let mut data = Vec::with_capacity(keep.len() * self.cols);
        for &r in keep {
            data.extend_from_slice(self.row(r));
        }
        Ok(Self {
            rows: keep.len(),
            cols: self.cols,
            data,
        })
    }

    pub fn col_select(&self, keep: &[usize]) -> Result<Self> {
        if keep.iter().any(|&c| c >= self.cols) {
            return Err(FrameError::IndexOutOfRange);
        }
        Ok(Self::from_fn(self.rows, keep.len(), |i, j| {
            self.get(i, keep[j]).clone()
        }))
    }

    /// Column concatenation `[self, rhs]`.
    pub fn hconcat(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows {
            return Err(FrameError::DimensionMismatch);
        }
        let mut data = Vec::with_capacity((self.cols + rhs.cols) * self.rows);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(rhs.row(r));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols + rhs.cols,
            data,
        })
    }

    /// Block diagonal `[[self, 0], [0, rhs]]`.
    pub fn diag_concat(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows + rhs.rows, self.cols + rhs.cols, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j).clone()
            } else if i >= self.rows && j >= self.cols {
                rhs.get(i - self.rows, j - self.cols).clone()
            } else {
                T::zero()
            }
        })
    }

    /// The doubling pattern `[[cA, cA], [cA, -cA]]`, which takes a frame in
    /// dimension M to a frame in dimension 2M with twice the vectors.
    pub fn doubled(&self, c: &T) -> Self {
        Self::from_fn(2 * self.rows, 2 * self.cols, |i, j| {
            let v = c.clone() * self.get(i % self.rows, j % self.cols).clone();
            if i >= self.rows && j >= self.cols {
                -v
            } else {
                v
            }
        })
    }

    /// Exact determinant by one-step fraction-free elimination.
    ///
    /// Each elimination step divides by the previous pivot; the quotient is a
    /// minor of the original matrix, so over an integral domain the division
    /// is exact and intermediate growth stays polynomial.
    pub fn bareiss_det(&self) -> Result<T> {
        if self.rows != self.cols {
            return Err(FrameError::NotSquare);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut m = self.data.clone();
        let mut sign_flip = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i * n + k].is_zero()) else {
                    return Ok(T::zero());
                };
                for j in 0..n {
                    m.swap(k * n + j, p * n + j);
                }
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i * n + j].clone() * m[k * n + k].clone()
                        - m[i * n + k].clone() * m[k * n + j].clone();
                    m[i * n + j] = num / prev.clone();
                }
                m[i * n + k] = T::zero();
            }
            prev = m[k * n + k].clone();
        }
        let det = m[n * n - 1].clone();
        Ok(if sign_flip { -det } else { det })
    }

    /// Exact rank by fraction-free elimination with column skipping.
    pub fn rank(&self) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        let mut m = self.data.clone();
        let mut prev = T::one();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m[i * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    m.swap(r * cols + j, p * cols + j);
                }
            }
            for i in r + 1..rows {
                for j in c + 1..cols {
                    let num = m[i * cols + j].clone() * m[r * cols + c].clone()
                        - m[i * cols + c].clone() * m[r * cols + j].clone();
                    m[i * cols + j] = num / prev.clone();
                }
                m[i * cols + c] = T::zero();
            }
            prev = m[r * cols + c].clone();
            r += 1;
        }
        r
    }
}

impl<T: Scalar> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (r, c): (usize, usize)) -> &T {
        self.get(r, c)
    }
}

impl<T: Scalar> std::fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

impl FrameMatrix {
    pub fn to_rational(&self) -> RationalMatrix {
        self.map(|x| Rational::from_integer(x.clone()))
    }

    /// Lossy conversion for the numeric eigenvalue path.
    pub fn to_f64(&self) -> Matrix<f64> {
        self.map(|x| x.to_f64().unwrap_or(f64::INFINITY))
    }
}

/// An integer matrix together with the positive scale that was cleared out of
/// a rational matrix: dividing the entries by `scale` reproduces the source
/// exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct ScaledFrame {
    pub matrix: FrameMatrix,
    pub scale: Int,
}

impl ScaledFrame {
    pub fn to_rational(&self) -> RationalMatrix {
        self.matrix
            .map(|x| Rational::new(x.clone(), self.scale.clone()))
    }
}

impl RationalMatrix {
    /// Multiply by the least common multiple of all entry denominators,
    /// producing an integer matrix. No further common factor is removed.
    pub fn clear_denominators(&self) -> ScaledFrame {
        let mut scale = Int::one();
        for e in self.entries() {
            scale = scale.lcm(e.denom());
        }
        let matrix = self.map(|e| e.numer() * (&scale / e.denom()));
        ScaledFrame { matrix, scale }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::fm;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(Int::from(n), Int::from(d))
    }

    #[test]
    fn det_of_identity_case() {
        assert_eq!(fm(&[&[1]]).bareiss_det().unwrap(), Int::from(1));
    }

    #[test]
    fn det_of_two_square_block() {
        assert_eq!(fm(&[&[3, 4], &[4, -3]]).bareiss_det().unwrap(), Int::from(-25));
    }

    #[test]
    fn det_of_repeated_rows_is_zero() {
        assert_eq!(fm(&[&[1, 1], &[1, 1]]).bareiss_det().unwrap(), Int::from(0));
    }

    #[test]
    fn det_requires_square() {
        assert_eq!(fm(&[&[1, 2, 3], &[4, 5, 6]]).bareiss_det(), Err(FrameError::NotSquare));
    }

    #[test]
    fn det_with_zero_leading_pivot() {
        // forces a row swap inside the elimination
        let m = fm(&[&[0, 2, 1], &[1, 0, 0], &[0, 0, 3]]);
        assert_eq!(m.bareiss_det().unwrap(), Int::from(-6));
    }

    #[test]
    fn frame_operator_examples() {
        assert_eq!(fm(&[&[1, 0], &[0, 1]]).frame_operator(), fm(&[&[1, 0], &[0, 1]]));
        assert_eq!(
            fm(&[&[3, 4], &[4, -3]]).frame_operator(),
            fm(&[&[25, 0], &[0, 25]])
        );
        assert_eq!(
            fm(&[&[1, 0, 1], &[0, 1, 0]]).frame_operator(),
            fm(&[&[2, 0], &[0, 1]])
        );
    }

    #[test]
    fn gram_examples() {
        assert_eq!(fm(&[&[1, 0], &[0, 1]]).gram(), fm(&[&[1, 0], &[0, 1]]));
        assert_eq!(fm(&[&[2]]).gram(), fm(&[&[4]]));
        // tetrahedron columns (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1)
        let tetra = fm(&[&[1, 1, -1, -1], &[1, -1, 1, -1], &[1, -1, -1, 1]]);
        let g = tetra.gram();
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j { 3 } else { -1 };
                assert_eq!(g[(i, j)], Int::from(expect));
            }
        }
    }

    #[test]
    fn clear_denominators_examples() {
        let m = RationalMatrix::from_rows(vec![
            vec![rat(1, 4), rat(-1, 4)],
            vec![rat(-1, 4), rat(1, 4)],
        ])
        .unwrap();
        let cleared = m.clear_denominators();
        assert_eq!(cleared.scale, Int::from(4));
        assert_eq!(cleared.matrix, fm(&[&[1, -1], &[-1, 1]]));

        let m = RationalMatrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)]]).unwrap();
        let cleared = m.clear_denominators();
        assert_eq!(cleared.scale, Int::from(6));
        assert_eq!(cleared.matrix, fm(&[&[3, 2]]));

        let m = fm(&[&[7, -2], &[0, 5]]).to_rational();
        let cleared = m.clear_denominators();
        assert_eq!(cleared.scale, Int::from(1));
        assert_eq!(cleared.matrix, fm(&[&[7, -2], &[0, 5]]));
    }

    #[test]
    fn row_restrict_examples() {
        let h4 = fm(&[
            &[1, 1, 1, 1],
            &[1, -1, 1, -1],
            &[1, 1, -1, -1],
            &[1, -1, -1, 1],
        ]);
        let top = h4.row_restrict(&[0, 1, 2]).unwrap();
        assert_eq!(top.rows(), 3);
        assert_eq!(top.cols(), 4);
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { 4 } else { 0 };
                assert_eq!(top.frame_operator()[(i, j)], Int::from(expect));
            }
        }

        let m = fm(&[&[3, 4], &[4, -3]]);
        assert_eq!(m.row_restrict(&[0, 1]).unwrap(), m);
        assert_eq!(m.row_restrict(&[0]).unwrap(), fm(&[&[3, 4]]));
        assert_eq!(m.row_restrict(&[]), Err(FrameError::EmptyRowSelection));
        assert_eq!(m.row_restrict(&[2]), Err(FrameError::IndexOutOfRange));
    }

    #[test]
    fn restrict_then_frame_operator_is_principal_submatrix() {
        let a = fm(&[&[1, 2, 0, -3], &[4, 0, 1, 1], &[2, -2, 5, 0]]);
        let keep = [0usize, 2];
        let restricted = a.row_restrict(&keep).unwrap().frame_operator();
        let full = a.frame_operator();
        for (i, &ri) in keep.iter().enumerate() {
            for (j, &rj) in keep.iter().enumerate() {
                assert_eq!(restricted[(i, j)], full[(ri, rj)]);
            }
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(fm(&[&[1, 0], &[0, 1]]).rank(), 2);
        assert_eq!(fm(&[&[1, 1], &[1, 1]]).rank(), 1);
        assert_eq!(fm(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(fm(&[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]]).rank(), 2);
    }

    /// Independent oracle: plain Gaussian elimination over the rationals.
    fn rational_rank(m: &FrameMatrix) -> usize {
        let mut a: Vec<Vec<Rational>> = (0..m.rows())
            .map(|i| m.row(i).iter().map(|x| Rational::from_integer(x.clone())).collect())
            .collect();
        let (rows, cols) = (m.rows(), m.cols());
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..rows).find(|&i| !num_traits::Zero::is_zero(&a[i][c])) else {
                continue;
            };
            a.swap(rank, p);
            for i in rank + 1..rows {
                if num_traits::Zero::is_zero(&a[i][c]) {
                    continue;
                }
                let factor = &a[i][c] / &a[rank][c];
                for j in c..cols {
                    let sub = &factor * &a[rank][j];
                    a[i][j] -= sub;
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    #[test]
    fn rank_matches_rational_elimination_with_zero_columns() {
        // exercises the column-skipping path of the fraction-free pivoting
        let mut state = 0xdead_beef_cafe_f00du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..200 {
            let rows = 2 + (next() % 4) as usize;
            let cols = 2 + (next() % 5) as usize;
            let dead_col = (next() % cols as u64) as usize;
            let m = FrameMatrix::from_fn(rows, cols, |_, j| {
                if j == dead_col {
                    Int::from(0)
                } else {
                    Int::from((next() % 9) as i64 - 4)
                }
            });
            assert_eq!(m.rank(), rational_rank(&m), "matrix:\n{m}");
        }
    }

    #[test]
    fn doubled_matches_block_pattern() {
        let m = fm(&[&[1]]);
        assert_eq!(m.doubled(&Int::from(1)), fm(&[&[1, 1], &[1, -1]]));
        let d = fm(&[&[3, 4], &[4, -3]]).doubled(&Int::from(2));
        assert_eq!(
            d,
            fm(&[
                &[6, 8, 6, 8],
                &[8, -6, 8, -6],
                &[6, 8, -6, -8],
                &[8, -6, -8, 6],
            ])
        );
    }

    #[test]
    fn shared_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<FrameMatrix>();
        assert_send_sync::<RationalMatrix>();
        assert_send_sync::<ScaledFrame>();
    }

    proptest! {
        /// Independent oracle: cofactor expansion for 3x3 determinants.
        #[test]
        fn det_matches_cofactor_expansion(
            e in proptest::collection::vec(-9i64..10, 9)
        ) {
            let m = fm(&[&e[0..3], &e[3..6], &e[6..9]]);
            let cofactor = e[0] * (e[4] * e[8] - e[5] * e[7])
                - e[1] * (e[3] * e[8] - e[5] * e[6])
                + e[2] * (e[3] * e[7] - e[4] * e[6]);
            prop_assert_eq!(m.bareiss_det().unwrap(), Int::from(cofactor));
        }

        #[test]
        fn frame_operator_is_symmetric_with_row_square_sums(
            rows in proptest::collection::vec(proptest::collection::vec(-9i64..10, 4), 3)
        ) {
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let a = fm(&refs);
            let s = a.frame_operator();
            for i in 0..3 {
                let sq: i64 = rows[i].iter().map(|x| x * x).sum();
                prop_assert_eq!(s[(i, i)].clone(), Int::from(sq));
                for j in 0..3 {
                    prop_assert_eq!(s[(i, j)].clone(), s[(j, i)].clone());
                }
            }
        }

        #[test]
        fn det_negates_under_row_swap(
            rows in proptest::collection::vec(proptest::collection::vec(-9i64..10, 3), 3),
            a in 0usize..3,
            b in 0usize..3,
        ) {
            prop_assume!(a != b);
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let m = fm(&refs);
            let mut swapped = rows.clone();
            swapped.swap(a, b);
            let refs: Vec<&[i64]> = swapped.iter().map(|r| r.as_slice()).collect();
            let n = fm(&refs);
            prop_assert_eq!(m.bareiss_det().unwrap(), -n.bareiss_det().unwrap());
        }

        #[test]
        fn clear_denominators_round_trips(
            nums in proptest::collection::vec(-20i64..21, 6),
            dens in proptest::collection::vec(1i64..12, 6),
        ) {
            let entries: Vec<Rational> = nums.iter().zip(&dens)
                .map(|(&n, &d)| rat(n, d))
                .collect();
            let m = RationalMatrix::new(2, 3, entries).unwrap();
            let cleared = m.clear_denominators();
            prop_assert!(cleared.scale > Int::from(0));
            prop_assert_eq!(cleared.to_rational(), m);
        }
    }
}
