//! Exact verification of frame properties, parity bookkeeping, and the one
//! sanctioned numeric operation (eigenvalue bounds for nearly-tight frames).

use num_traits::{Signed, Zero};

use crate::error::{FrameError, Result};
use crate::matrix::Matrix;
use crate::{FrameMatrix, Int};

/// Exact verdict on every frame property we track. All fields are decided by
/// integer comparisons; nothing is approximated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameReport {
    pub dim: usize,
    pub count: usize,
    pub rank: usize,
    /// Full row rank: the columns span the whole space.
    pub is_frame: bool,
    pub rows_orthogonal: bool,
    /// Row square sums; these are the frame operator eigenvalues whenever
    /// the rows are orthogonal.
    pub eigen_diagonal: Vec<Int>,
    /// `A * A^T == tight_value * I` exactly, with a positive tight value.
    pub is_tight: bool,
    pub tight_value: Option<Int>,
    pub column_norms_sq: Vec<Int>,
    pub is_equal_norm: bool,
    pub equal_norm_sq: Option<Int>,
    /// All off-diagonal Gram entries equal to one constant.
    pub is_equiangular_signed: bool,
    /// All off-diagonal Gram entries equal in absolute value.
    pub is_equiangular_modulus: bool,
    /// The common off-diagonal Gram value, when the signed form holds.
    pub angle_value: Option<Int>,
    /// Size of the smallest linearly dependent column subset; `count + 1`
    /// when all columns are independent. Populated on request only.
    pub spark: Option<usize>,
}

impl FrameReport {
    /// Equal-norm tight integer frame.
    pub fn is_entif(&self) -> bool {
        self.is_frame && self.is_tight && self.is_equal_norm
    }

    /// Full spark: every `dim`-element column subset is independent.
    pub fn is_full_spark(&self) -> bool {
        self.spark == Some(self.dim + 1)
    }
}

/// Even/odd counts per row and per column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityProfile {
    /// `[evens, odds]` for each row.
    pub rows: Vec<[usize; 2]>,
    /// `[evens, odds]` for each column.
    pub columns: Vec<[usize; 2]>,
}

/// Compute the full exact report for a matrix. Any integer matrix is
/// analyzable; rank-deficient input simply reports `is_frame: false`.
pub fn analyze(a: &FrameMatrix, with_spark: bool) -> FrameReport {
    let dim = a.rows();
    let count = a.cols();
    let rank = a.rank();

    let s = a.frame_operator();
    let mut rows_orthogonal = true;
    for i in 0..dim {
        for j in i + 1..dim {
            if !s[(i, j)].is_zero() {
                rows_orthogonal = false;
            }
        }
    }
    let eigen_diagonal: Vec<Int> = (0..dim).map(|i| s[(i, i)].clone()).collect();
    let tight_candidate = eigen_diagonal.first().cloned();
    let is_tight = rows_orthogonal
        && !eigen_diagonal.is_empty()
        && eigen_diagonal.iter().all(|v| Some(v) == tight_candidate.as_ref())
        && tight_candidate.as_ref().is_some_and(|v| v.is_positive());
    let tight_value = if is_tight { tight_candidate } else { None };

    let column_norms_sq: Vec<Int> = (0..count).map(|j| a.col_dot(j, j)).collect();
    let norm_candidate = column_norms_sq.first().cloned();
    let is_equal_norm = !column_norms_sq.is_empty()
        && column_norms_sq.iter().all(|v| Some(v) == norm_candidate.as_ref());
    let equal_norm_sq = if is_equal_norm { norm_candidate } else { None };

    let (is_equiangular_signed, is_equiangular_modulus, angle_value) = equiangularity(a);

    FrameReport {
        dim,
        count,
        rank,
        is_frame: rank == dim,
        rows_orthogonal,
        eigen_diagonal,
        is_tight,
        tight_value,
        column_norms_sq,
        is_equal_norm,
        equal_norm_sq,
        is_equiangular_signed,
        is_equiangular_modulus,
        angle_value,
        spark: with_spark.then(|| spark(a)),
    }
}

fn equiangularity(a: &FrameMatrix) -> (bool, bool, Option<Int>) {
    let n = a.cols();
    if n < 2 {
        // no pairs to compare
        return (true, true, None);
    }
    let mut signed = true;
    let mut modulus = true;
    let mut first: Option<Int> = None;
    for i in 0..n {
        for j in i + 1..n {
            let d = a.col_dot(i, j);
            match &first {
                None => first = Some(d),
                Some(f) => {
                    if d != *f {
                        signed = false;
                    }
                    if d.abs() != f.abs() {
                        modulus = false;
                    }
                }
            }
        }
    }
    let angle = if signed { first } else { None };
    (signed, modulus, angle)
}

/// The spark: cardinality of the smallest linearly dependent column subset,
/// or `count + 1` when every subset is independent (possible only when
/// `count <= dim`).
///
/// Subsets are enumerated in increasing size with early exit. Subsets
/// smaller than `dim` are tested by exact rank; square subsets of size
/// `dim` by exact determinant. If every subset of size at most `dim` is
/// independent and `count > dim`, the spark is `dim + 1` since any `dim + 1`
/// vectors in `dim` dimensions are dependent.
pub fn spark(a: &FrameMatrix) -> usize {
    let dim = a.rows();
    let count = a.cols();
    for k in 1..=count.min(dim) {
        let mut dependent = false;
        for_each_subset(count, k, |cols| {
            let sub = a.col_select(cols).expect("subset indices are in range");
            let dep = if k == dim {
                sub.bareiss_det().expect("square subset").is_zero()
            } else {
                sub.rank() < k
            };
            if dep {
                dependent = true;
            }
            !dep // keep going while independent
        });
        if dependent {
            return k;
        }
    }
    if count > dim {
        dim + 1
    } else {
        count + 1
    }
}

/// Visit all k-subsets of `0..n` in lexicographic order until the callback
/// returns false.
fn for_each_subset(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !visit(&idx) {
            return;
        }
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Count even/odd entries per row and per column.
pub fn parity_profile(a: &FrameMatrix) -> ParityProfile {
    let two = Int::from(2);
    let odd = |x: &Int| (x % &two).abs() == Int::from(1);
    let rows = (0..a.rows())
        .map(|i| {
            let odds = a.row(i).iter().filter(|x| odd(x)).count();
            [a.cols() - odds, odds]
        })
        .collect();
    let columns = (0..a.cols())
        .map(|j| {
            let odds = (0..a.rows()).filter(|&i| odd(a.get(i, j))).count();
            [a.rows() - odds, odds]
        })
        .collect();
    ParityProfile { rows, columns }
}

/// Given two integer lists with equal square sums, return the difference
/// between their odd-entry counts. Equal square sums force the difference to
/// be a multiple of 4 (odd squares are 1 mod 8, even squares 0 mod 4), which
/// is asserted.
pub fn parity_obstruction_check(a: &[Int], b: &[Int]) -> Result<i64> {
    let sum_sq = |xs: &[Int]| -> Int { xs.iter().map(|x| x * x).sum() };
    if sum_sq(a) != sum_sq(b) {
        return Err(FrameError::SquareSumMismatch);
    }
    let two = Int::from(2);
    let odds = |xs: &[Int]| xs.iter().filter(|x| (*x % &two).abs() == Int::from(1)).count() as i64;
    let diff = odds(a) - odds(b);
    assert_eq!(diff.rem_euclid(4), 0, "odd-count difference must be divisible by 4");
    Ok(diff)
}

/// Floating-point approximations of the extreme eigenvalues of the frame
/// operator, certified to the requested relative accuracy through the
/// off-diagonal residual of a Jacobi iteration.
///
/// This is the single numeric operation in the crate; it exists for
/// (epsilon, A)-tightness checks where exact equality is not expected.
pub fn frame_bounds_numeric(a: &FrameMatrix, rel_tol: f64) -> Result<(f64, f64)> {
    if a.rank() < a.rows() {
        return Err(FrameError::NotAFrame);
    }
    let s = a.frame_operator().to_f64();
    Ok(jacobi_extremes(s, rel_tol))
}

/// Cyclic Jacobi iteration on a symmetric matrix. Rotations preserve the
/// spectrum; once the off-diagonal Frobenius norm is below `rel_tol` times
/// the diagonal scale, every diagonal entry is within that residual of an
/// eigenvalue.
fn jacobi_extremes(mut s: Matrix<f64>, rel_tol: f64) -> (f64, f64) {
    let n = s.rows();
    if n == 1 {
        return (s[(0, 0)], s[(0, 0)]);
    }
    for _sweep in 0..200 {
        let mut off = 0.0f64;
        let mut scale = 0.0f64;
        for i in 0..n {
            scale = scale.max(s[(i, i)].abs());
            for j in i + 1..n {
                off += 2.0 * s[(i, j)] * s[(i, j)];
            }
        }
        if off.sqrt() <= rel_tol * scale.max(f64::MIN_POSITIVE) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = s[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (s[(q, q)] - s[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * c;
                for k in 0..n {
                    let skp = s[(k, p)];
                    let skq = s[(k, q)];
                    s.set(k, p, c * skp - sn * skq);
                    s.set(k, q, sn * skp + c * skq);
                }
                for k in 0..n {
                    let spk = s[(p, k)];
                    let sqk = s[(q, k)];
                    s.set(p, k, c * spk - sn * sqk);
                    s.set(q, k, sn * spk + c * sqk);
                }
            }
        }
    }
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        lo = lo.min(s[(i, i)]);
        hi = hi.max(s[(i, i)]);
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::fm;
    use proptest::prelude::*;

    #[test]
    fn analyze_two_square_block() {
        let r = analyze(&fm(&[&[3, 4], &[4, -3]]), true);
        assert!(r.is_frame);
        assert!(r.is_tight);
        assert_eq!(r.tight_value, Some(Int::from(25)));
        assert_eq!(r.equal_norm_sq, Some(Int::from(25)));
        assert_eq!(r.spark, Some(3));
        assert!(r.is_full_spark());
    }

    #[test]
    fn analyze_equal_norm_not_tight() {
        let r = analyze(&fm(&[&[1, 0, 1], &[0, 1, 0]]), false);
        assert!(r.is_frame);
        assert!(!r.is_tight);
        assert_eq!(r.eigen_diagonal, vec![Int::from(2), Int::from(1)]);
        assert_eq!(r.equal_norm_sq, Some(Int::from(1)));
        assert_eq!(r.spark, None);
    }

    #[test]
    fn analyze_tetrahedron() {
        let tetra = fm(&[&[1, 1, -1, -1], &[1, -1, 1, -1], &[1, -1, -1, 1]]);
        let r = analyze(&tetra, true);
        assert!(r.is_entif());
        assert_eq!(r.tight_value, Some(Int::from(4)));
        assert_eq!(r.equal_norm_sq, Some(Int::from(3)));
        assert!(r.is_equiangular_signed);
        assert_eq!(r.angle_value, Some(Int::from(-1)));
        assert_eq!(r.spark, Some(4));
    }

    #[test]
    fn analyze_zero_matrix_is_not_a_frame() {
        let r = analyze(&fm(&[&[0, 0], &[0, 0]]), true);
        assert!(!r.is_frame);
        assert!(!r.is_tight);
        assert_eq!(r.spark, Some(1));
    }

    #[test]
    fn spark_examples() {
        assert_eq!(spark(&fm(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])), 4);
        assert_eq!(spark(&fm(&[&[7, 24, 15, 20], &[24, -7, 20, -15]])), 3);
        assert_eq!(spark(&fm(&[&[1, 0, 2], &[0, 0, 3]])), 1);
        // two proportional columns
        assert_eq!(spark(&fm(&[&[1, 2, 0], &[2, 4, 1]])), 2);
    }

    /// Independent oracle: test subsets strictly by rank, smallest first.
    fn spark_oracle(a: &FrameMatrix) -> usize {
        for k in 1..=a.cols() {
            let mut dependent = false;
            super::for_each_subset(a.cols(), k, |cols| {
                let sub = a.col_select(cols).unwrap();
                if sub.rank() < k {
                    dependent = true;
                }
                !dependent
            });
            if dependent {
                return k;
            }
        }
        a.cols() + 1
    }

    #[test]
    fn spark_matches_rank_oracle_on_small_matrices() {
        // deterministic pseudo-random small matrices
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for dims in [(2usize, 4usize), (2, 8), (3, 5), (3, 7), (4, 6), (4, 5)] {
            for _ in 0..30 {
                let (m, n) = dims;
                let a = FrameMatrix::from_fn(m, n, |_, _| Int::from((next() % 7) as i64 - 3));
                assert_eq!(spark(&a), spark_oracle(&a), "matrix:\n{a}");
            }
        }
    }

    #[test]
    fn parity_profile_examples() {
        let p = parity_profile(&fm(&[&[3, 4], &[4, -3]]));
        assert_eq!(p.rows, vec![[1, 1], [1, 1]]);
        assert_eq!(p.columns, vec![[1, 1], [1, 1]]);

        let p = parity_profile(&fm(&[&[2, 4], &[6, 0]]));
        assert_eq!(p.rows, vec![[2, 0], [2, 0]]);

        let p = parity_profile(&fm(&[&[1, 1], &[1, -1]]));
        assert_eq!(p.rows, vec![[0, 2], [0, 2]]);
        assert_eq!(p.columns, vec![[0, 2], [0, 2]]);
    }

    fn ints(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn parity_obstruction_examples() {
        assert_eq!(parity_obstruction_check(&ints(&[3, 4]), &ints(&[5, 0])).unwrap(), 0);
        assert_eq!(
            parity_obstruction_check(&ints(&[1, 1, 1, 1]), &ints(&[2, 0, 0, 0])).unwrap(),
            4
        );
        assert_eq!(parity_obstruction_check(&ints(&[7, -2]), &ints(&[7, -2])).unwrap(), 0);
        assert_eq!(
            parity_obstruction_check(&ints(&[1]), &ints(&[2])),
            Err(FrameError::SquareSumMismatch)
        );
    }

    proptest! {
        /// Trace identity: the row square sums and the column square sums
        /// add up to the same total.
        #[test]
        fn eigen_diagonal_and_column_norms_share_their_sum(
            rows in proptest::collection::vec(proptest::collection::vec(-9i64..10, 5), 3)
        ) {
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let r = analyze(&fm(&refs), false);
            let lhs: Int = r.eigen_diagonal.iter().sum();
            let rhs: Int = r.column_norms_sq.iter().sum();
            prop_assert_eq!(lhs, rhs);
        }

        /// Square-sum-preserving rewrites from Euclid triples: appending the
        /// two legs to one list and the hypotenuse to the other keeps the
        /// square sums equal, so the odd-count difference stays 0 mod 4.
        #[test]
        fn parity_obstruction_is_multiple_of_four(
            base in proptest::collection::vec(-12i64..13, 1..6),
            triples in proptest::collection::vec((1u32..6, 1u32..6), 1..5),
        ) {
            let mut a: Vec<i64> = base.clone();
            let mut b: Vec<i64> = base;
            for (m, n) in triples {
                let (m, n) = ((m + n) as i64, n.min(m) as i64);
                a.push(m * m - n * n);
                a.push(2 * m * n);
                b.push(m * m + n * n);
            }
            let d = parity_obstruction_check(&ints(&a), &ints(&b)).unwrap();
            prop_assert_eq!(d.rem_euclid(4), 0);
        }
    }

    #[test]
    fn bounds_of_exactly_tight_frame() {
        let (lo, hi) = frame_bounds_numeric(&fm(&[&[3, 4], &[4, -3]]), 1e-9).unwrap();
        assert!((lo - 25.0).abs() < 1e-6);
        assert!((hi - 25.0).abs() < 1e-6);
    }

    #[test]
    fn bounds_of_unequal_eigenvalues() {
        let (lo, hi) = frame_bounds_numeric(&fm(&[&[1, 0, 1], &[0, 1, 0]]), 1e-9).unwrap();
        assert!((lo - 1.0).abs() < 1e-6);
        assert!((hi - 2.0).abs() < 1e-6);
    }

    #[test]
    fn bounds_with_off_diagonal_operator() {
        // frame operator [[2, 1], [1, 2]]: eigenvalues 1 and 3
        let (lo, hi) = frame_bounds_numeric(&fm(&[&[1, 1, 0], &[1, 0, 1]]), 1e-12).unwrap();
        assert!((lo - 1.0).abs() < 1e-9);
        assert!((hi - 3.0).abs() < 1e-9);

        // circulant operator [[2,1,1],[1,2,1],[1,1,2]]: eigenvalues 4, 1, 1
        let a = fm(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let (lo, hi) = frame_bounds_numeric(&a, 1e-12).unwrap();
        assert!((lo - 1.0).abs() < 1e-9);
        assert!((hi - 4.0).abs() < 1e-9);
    }

    #[test]
    fn bounds_reject_rank_deficient_input() {
        assert_eq!(
            frame_bounds_numeric(&fm(&[&[1, 1], &[1, 1]]), 1e-9),
            Err(FrameError::NotAFrame)
        );
    }

    /// The direct algebraic conditions used by the exhaustive searches are
    /// exactly what analyze reports.
    #[test]
    fn analyze_agrees_with_direct_conditions_on_2x3_samples() {
        let mut state = 0x2545_f491_4f6c_dd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 11) as i64 - 5
        };
        for _ in 0..500 {
            let e: Vec<i64> = (0..6).map(|_| next()).collect();
            let (a, b, c, d, f, g) = (e[0], e[1], e[2], e[3], e[4], e[5]);
            let m = fm(&[&[a, b, c], &[d, f, g]]);
            let r = analyze(&m, false);
            let orth = a * d + b * f + c * g == 0;
            let row_sums_equal = a * a + b * b + c * c == d * d + f * f + g * g;
            let tight_direct = orth && row_sums_equal && a * a + b * b + c * c > 0;
            let equal_norm_direct =
                a * a + d * d == b * b + f * f && b * b + f * f == c * c + g * g;
            assert_eq!(r.is_tight, tight_direct, "{m}");
            assert_eq!(r.is_equal_norm, equal_norm_direct, "{m}");
        }
    }

    #[test]
    fn no_small_odd_entif_in_dim_two() {
        // every 2x3 integer matrix with entries in [-5, 5]: none is an
        // equal-norm tight frame
        let range = -5i64..=5;
        for a in range.clone() {
            for b in range.clone() {
                for c in range.clone() {
                    for d in range.clone() {
                        for e in range.clone() {
                            for f in -5i64..=5 {
                                let norm0 = a * a + d * d;
                                if norm0 == 0 { continue; }
                                if b * b + e * e != norm0 || c * c + f * f != norm0 {
                                    continue;
                                }
                                if a * d + b * e + c * f != 0 {
                                    continue;
                                }
                                let r1 = a * a + b * b + c * c;
                                let r2 = d * d + e * e + f * f;
                                assert_ne!(r1, r2, "unexpected ENTIF {:?}", (a, b, c, d, e, f));
                            }
                        }
                    }
                }
            }
        }
    }
}
