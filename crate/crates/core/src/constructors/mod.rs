//! Frame constructions, each returning an integer frame matrix ready for
//! [`crate::analysis::analyze`].

mod almost_tight;
mod simplex;

pub use almost_tight::{almost_tight, AlmostTightOutcome, AlmostTightRequest};
pub use simplex::{simplex_entif, SimplexCase, SimplexCertificate};

use num_traits::{One, Signed, Zero};

use crate::analysis;
use crate::error::{FrameError, Result};
use crate::numtheory;
use crate::{FrameMatrix, Int};

/// Column concatenation of two frames over the same space. Tightness factors
/// add; equal norms survive when they match.
pub fn hadjoin(a: &FrameMatrix, b: &FrameMatrix) -> Result<FrameMatrix> {
    a.hconcat(b)
}

/// Block-diagonal adjunction. The result is tight only when both inputs are
/// tight with the same factor, and equal-norm only when the norms match.
pub fn diag_adjoin(a: &FrameMatrix, b: &FrameMatrix) -> FrameMatrix {
    a.diag_concat(b)
}

/// `[[cA, cA], [cA, -cA]]`: twice the dimension, twice the vectors. A tight
/// input with factor t comes out tight with factor `2 c^2 t`.
pub fn double(a: &FrameMatrix, c: &Int) -> Result<FrameMatrix> {
    if c.is_zero() {
        return Err(FrameError::ZeroParameter);
    }
    Ok(a.doubled(c))
}

/// The first `dim` rows of a Hadamard matrix of the given order: an
/// equal-norm tight integer frame with tight value `order` and column norm
/// squared `dim`.
pub fn hadamard_entif(dim: usize, order: u64) -> Result<FrameMatrix> {
    if dim == 0 || (dim as u64) > order {
        return Err(FrameError::InvalidParameter(
            "dimension must satisfy 1 <= dim <= order",
        ));
    }
    let h = numtheory::hadamard(order)?;
    let keep: Vec<usize> = (0..dim).collect();
    h.row_restrict(&keep)
}

/// Full-spark equal-norm tight integer frame with `2 * pairs` vectors in two
/// dimensions, built from `pairs` distinct two-square representations of
/// `5^(2 * pairs)`.
///
/// Representations are consumed in decreasing order of the larger leg and
/// exactly `pairs` of them are used.
pub fn entif_2d(pairs: usize) -> Result<FrameMatrix> {
    if pairs == 0 {
        return Err(FrameError::InvalidParameter("pair count must be positive"));
    }
    let reps = five_power_two_square_reps(pairs);
    if cfg!(debug_assertions) && pairs <= 6 {
        // cross-check against plain enumeration while that stays cheap
        let brute: Vec<(Int, Int)> = numtheory::two_square_reps(5u64.pow(2 * pairs as u32))
            .reps
            .iter()
            .map(|&(a, b)| (Int::from(a), Int::from(b)))
            .collect();
        assert_eq!(reps, brute);
    }
    let mut top = Vec::with_capacity(2 * pairs);
    let mut bottom = Vec::with_capacity(2 * pairs);
    for (a, b) in reps.into_iter().take(pairs) {
        top.push(a.clone());
        top.push(b.clone());
        bottom.push(b);
        bottom.push(-a);
    }
    FrameMatrix::from_rows(vec![top, bottom])
}

/// The `N` two-square representations of `5^(2N)`, exactly, via Gaussian
/// integer factorization: the legs of `(2+i)^j (2-i)^(2N-j)` for
/// `j = 0..N-1` enumerate every unordered pair of unequal positive squares
/// summing to `5^(2N)` (the omitted `j = N` power is real and corresponds to
/// the excluded zero-leg representation). Sorted by decreasing larger leg.
fn five_power_two_square_reps(pairs: usize) -> Vec<(Int, Int)> {
    let mul = |x: &(Int, Int), y: &(Int, Int)| -> (Int, Int) {
        (&x.0 * &y.0 - &x.1 * &y.1, &x.0 * &y.1 + &x.1 * &y.0)
    };
    let plus = (Int::from(2), Int::from(1));
    let minus = (Int::from(2), Int::from(-1));
    // z_j for j = 0 is (2-i)^(2N); each j step multiplies by (2+i) and
    // divides by (2-i), i.e. multiplies by (2+i)^2 / 5
    let mut z = (Int::one(), Int::zero());
    for _ in 0..2 * pairs {
        z = mul(&z, &minus);
    }
    let plus_sq = mul(&plus, &plus);
    let five = Int::from(5);
    let mut reps = Vec::with_capacity(pairs);
    for _ in 0..pairs {
        let (a, b) = (z.0.abs(), z.1.abs());
        reps.push(if a > b { (a, b) } else { (b, a) });
        let w = mul(&z, &plus_sq);
        z = (w.0 / &five, w.1 / &five);
    }
    reps.sort_by(|x, y| y.0.cmp(&x.0));
    reps
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThreeDimFamily {
    /// Adjoined copies of the 3x3 identity: 3N vectors of norm squared 1.
    TimesThree,
    /// Adjoined copies of the 3-row truncation of the order-4 Hadamard
    /// matrix: 4N vectors of norm squared 3.
    TimesFour,
}

/// Equal-norm tight integer frames in three dimensions with `3 * copies` or
/// `4 * copies` vectors.
pub fn entif_3d(copies: usize, family: ThreeDimFamily) -> Result<FrameMatrix> {
    if copies == 0 {
        return Err(FrameError::InvalidParameter("copy count must be positive"));
    }
    let base = match family {
        ThreeDimFamily::TimesThree => FrameMatrix::identity(3),
        ThreeDimFamily::TimesFour => hadamard_entif(3, 4)?,
    };
    let mut out = base.clone();
    for _ in 1..copies {
        out = out.hconcat(&base)?;
    }
    Ok(out)
}

/// Adjoin copies of two same-dimension, same-norm, tight frames to reach
/// `gcd(N1, N2) * count` vectors, using the coin-problem representation
/// `gcd * count = p * N1 + q * N2`.
pub fn gcd_adjoin(a: &FrameMatrix, b: &FrameMatrix, count: u64) -> Result<FrameMatrix> {
    if a.rows() != b.rows() {
        return Err(FrameError::DimensionMismatch);
    }
    let ra = analysis::analyze(a, false);
    let rb = analysis::analyze(b, false);
    if !ra.is_tight || !rb.is_tight {
        return Err(FrameError::NotTight);
    }
    if !ra.is_equal_norm || !rb.is_equal_norm || ra.equal_norm_sq != rb.equal_norm_sq {
        return Err(FrameError::NormMismatch);
    }
    let rep = numtheory::coin_representation(a.cols() as u64, b.cols() as u64, count)?;
    let mut out: Option<FrameMatrix> = None;
    for _ in 0..rep.p {
        out = Some(match out {
            None => a.clone(),
            Some(acc) => acc.hconcat(a)?,
        });
    }
    for _ in 0..rep.q {
        out = Some(match out {
            None => b.clone(),
            Some(acc) => acc.hconcat(b)?,
        });
    }
    out.ok_or(FrameError::CoinInfeasible {
        a: a.cols() as u64,
        b: b.cols() as u64,
        m: count,
    })
}

/// The two five-dimensional even-count building blocks with `b = 2a`: a 5x8
/// frame and a 5x10 frame, both equal-norm tight with column norm squared
/// `5 a^2` and tight values `8 a^2` and `10 a^2`.
pub fn dim5_even_blocks(a: i64) -> Result<(FrameMatrix, FrameMatrix)> {
    if a == 0 {
        return Err(FrameError::ZeroParameter);
    }
    let b = 2 * a;
    let block_a = FrameMatrix::from_rows(
        vec![
            vec![a, a, a, a, a, a, a, a],
            vec![b, -b, 0, 0, 0, 0, 0, 0],
            vec![0, 0, b, -b, 0, 0, 0, 0],
            vec![0, 0, 0, 0, b, -b, 0, 0],
            vec![0, 0, 0, 0, 0, 0, b, -b],
        ]
        .into_iter()
        .map(|r| r.into_iter().map(Int::from).collect())
        .collect(),
    )?;
    let block_b = FrameMatrix::from_rows(
        vec![
            vec![a, -b, 0, 0, 0, 0, 0, 0, a, -b],
            vec![b, a, a, -b, 0, 0, 0, 0, 0, 0],
            vec![0, 0, b, a, a, -b, 0, 0, 0, 0],
            vec![0, 0, 0, 0, b, a, a, -b, 0, 0],
            vec![0, 0, 0, 0, 0, 0, b, a, b, a],
        ]
        .into_iter()
        .map(|r| r.into_iter().map(Int::from).collect())
        .collect(),
    )?;
    Ok((block_a, block_b))
}

/// The five block families of equal-norm tight integer frames built from a
/// free parameter `b` and `a = N b` (families 1-3) or `a = 2 N b`
/// (families 4-5):
///
/// 1. `4N^2` vectors in `N^2 + 1` dimensions, norm squared `(N^2+1) b^2`
/// 2. `4N^2` vectors in `2N^2 + 1` dimensions, norm squared `(2N^2+1) b^2`
/// 3. `4N^2` vectors in `3N^2 + 1` dimensions, norm squared `(3N^2+1) b^2`
/// 4. `8N^2` vectors in `4N^2 + 1` dimensions, norm squared `(4N^2+1) b^2`
/// 5. `8N^2` vectors in `4N^2 + 2` dimensions, norm squared `2 b^2 (1+2N^2)`
pub fn gensqr(family: u8, n: usize, b: i64) -> Result<FrameMatrix> {
    if n == 0 {
        return Err(FrameError::InvalidParameter("block parameter must be positive"));
    }
    if b == 0 {
        return Err(FrameError::ZeroParameter);
    }
    let nn = n * n;
    let bi = Int::from(b);
    let a = match family {
        1..=3 => Int::from(n as i64) * &bi,
        4 | 5 => Int::from(2 * n as i64) * &bi,
        _ => return Err(FrameError::InvalidParameter("family must be 1..=5")),
    };
    let (dim, blocks, width) = match family {
        1 => (nn + 1, nn, 4),
        2 => (2 * nn + 1, nn, 4),
        3 => (3 * nn + 1, nn, 4),
        4 => (4 * nn + 1, nn, 8),
        5 => (4 * nn + 2, 2 * nn, 4),
        _ => unreachable!(),
    };
    let mut out = FrameMatrix::zeros(dim, blocks * width);
    let set_row = |m: &mut FrameMatrix, row: usize, col0: usize, vals: &[Int]| {
        for (j, v) in vals.iter().enumerate() {
            m.set(row, col0 + j, v.clone());
        }
    };
    let pos = |x: &Int| x.clone();
    let neg = |x: &Int| -x.clone();
    for j in 1..=blocks {
        let col0 = (j - 1) * width;
        match family {
            1 => {
                set_row(&mut out, 0, col0, &[pos(&bi), pos(&bi), pos(&bi), neg(&bi)]);
                set_row(&mut out, j, col0, &[pos(&a), pos(&a), neg(&a), pos(&a)]);
            }
            2 => {
                set_row(&mut out, 0, col0, &[pos(&bi), pos(&bi), pos(&bi), neg(&bi)]);
                set_row(&mut out, 2 * j - 1, col0, &[pos(&a), pos(&a), neg(&a), pos(&a)]);
                set_row(&mut out, 2 * j, col0, &[pos(&a), neg(&a), pos(&a), pos(&a)]);
            }
            3 => {
                set_row(&mut out, 0, col0, &[pos(&bi), pos(&bi), pos(&bi), neg(&bi)]);
                set_row(&mut out, 3 * j - 2, col0, &[pos(&a), pos(&a), neg(&a), pos(&a)]);
                set_row(&mut out, 3 * j - 1, col0, &[pos(&a), neg(&a), pos(&a), pos(&a)]);
                set_row(&mut out, 3 * j, col0, &[neg(&a), pos(&a), pos(&a), pos(&a)]);
            }
            4 => {
                let z = Int::zero();
                set_row(&mut out, 0, col0, &vec![bi.clone(); 8]);
                set_row(&mut out, 4 * j - 3, col0, &[pos(&a), neg(&a), z.clone(), z.clone(), z.clone(), z.clone(), z.clone(), z.clone()]);
                set_row(&mut out, 4 * j - 2, col0, &[z.clone(), z.clone(), pos(&a), neg(&a), z.clone(), z.clone(), z.clone(), z.clone()]);
                set_row(&mut out, 4 * j - 1, col0, &[z.clone(), z.clone(), z.clone(), z.clone(), pos(&a), neg(&a), z.clone(), z.clone()]);
                set_row(&mut out, 4 * j, col0, &[z.clone(), z.clone(), z.clone(), z.clone(), z.clone(), z.clone(), pos(&a), neg(&a)]);
            }
            5 => {
                let z = Int::zero();
                set_row(&mut out, 0, col0, &[pos(&bi), pos(&bi), pos(&bi), pos(&bi)]);
                set_row(&mut out, 1, col0, &[pos(&bi), neg(&bi), pos(&bi), neg(&bi)]);
                set_row(&mut out, 2 * j, col0, &[pos(&a), z.clone(), neg(&a), z.clone()]);
                set_row(&mut out, 2 * j + 1, col0, &[z.clone(), pos(&a), z.clone(), neg(&a)]);
            }
            _ => unreachable!(),
        }
    }
    Ok(out)
}

/// Equal-norm integer frame with any `count >= dim`: repeated identity
/// blocks plus the first `count mod dim` columns of the identity. Tight
/// exactly when `dim` divides `count`.
pub fn equal_norm_any(dim: usize, count: usize) -> Result<FrameMatrix> {
    if dim == 0 {
        return Err(FrameError::InvalidParameter("dimension must be positive"));
    }
    if count < dim {
        return Err(FrameError::CountBelowDimension { dim, count });
    }
    Ok(FrameMatrix::from_fn(dim, count, |i, j| {
        if j % dim == i {
            Int::one()
        } else {
            Int::zero()
        }
    }))
}

/// Tight integer frame with any `count >= dim`.
///
/// A Pythagorean chain supplies `p` with `p^2` expressible as a sum of `i`
/// nonzero squares for every required `i`; two-square legs fill 2x2 blocks
/// `[[a, b], [b, -a]]`, one row carries a longer decomposition of `p^2`, and
/// for even `dim` a final row holds the single entry `p`. Every row square
/// sums to `p^2`, so the frame is tight with factor `p^2`.
pub fn tight_any(dim: usize, count: usize) -> Result<FrameMatrix> {
    if dim == 0 {
        return Err(FrameError::InvalidParameter("dimension must be positive"));
    }
    if count < dim {
        return Err(FrameError::CountBelowDimension { dim, count });
    }
    let even = dim % 2 == 0;
    let blocks = if even { (dim - 2) / 2 } else { (dim - 1) / 2 };
    let tail_len = if even {
        count - 2 * blocks - 1
    } else {
        count - 2 * blocks
    };
    let chain_depth = if blocks > 0 { tail_len.max(2) } else { tail_len };
    let chain = numtheory::pythagorean_chain(chain_depth);
    let p = chain.s.clone();
    let mut out = FrameMatrix::zeros(dim, count);
    if blocks > 0 {
        let pair = &chain.decompositions[1];
        let (a, b) = (pair[0].clone(), pair[1].clone());
        for i in 0..blocks {
            out.set(2 * i, 2 * i, a.clone());
            out.set(2 * i, 2 * i + 1, b.clone());
            out.set(2 * i + 1, 2 * i, b.clone());
            out.set(2 * i + 1, 2 * i + 1, -a.clone());
        }
    }
    let tail = &chain.decompositions[tail_len - 1];
    for (j, v) in tail.iter().enumerate() {
        out.set(2 * blocks, 2 * blocks + j, v.clone());
    }
    if even {
        out.set(dim - 1, count - 1, p);
    }
    Ok(out)
}
