//! Regular-simplex frames: `dim + 1` equiangular integer vectors in `dim`
//! dimensions.
//!
//! The construction finds a rational matrix `S` with `S^T S = I/m`
//! (`m = dim + 1`) that sends the all-ones vector to the last basis vector.
//! Columns of `S` then form an orthogonal set whose last coordinate is
//! constantly `1/m`; dropping that row and clearing denominators leaves an
//! equal-norm tight integer frame, and it is automatically equiangular.

use num_integer::Roots;
use num_traits::{One, Zero};

use crate::error::{FrameError, Result};
use crate::matrix::ScaledFrame;
use crate::numtheory::{self, OddSquareDecomposition};
use crate::{FrameMatrix, Int, Rational, RationalMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimplexCase {
    /// `m` is a perfect square; the seed operator is `I / sqrt(m)`.
    PerfectSquare { root: u64 },
    /// `m` is a sum of `k` odd squares; the seed operator is a block
    /// diagonal of orthogonal-scaled `k x k` blocks divided by `m`.
    OddSquares { k: usize },
}

/// Everything produced on the way to the simplex frame, with the exact
/// relations verified at construction time.
#[derive(Clone, Debug, PartialEq)]
pub struct SimplexCertificate {
    /// `dim + 1`.
    pub m: u64,
    pub case: SimplexCase,
    pub decomposition: Option<OddSquareDecomposition>,
    /// Seed operator with `U^T U = I/m`.
    pub u: RationalMatrix,
    /// Unnormalized reflection normal `U * ones - e_m` (zero when no
    /// reflection is needed).
    pub w: Vec<Rational>,
    /// `S = R * U` with `S^T S = I/m`, `S * ones = e_m`, and last row
    /// constantly `1/m`.
    pub s: RationalMatrix,
    /// The final integer frame together with the cleared denominator scale.
    pub result: ScaledFrame,
}

/// Build the `dim x (dim + 1)` equal-norm tight integer frame whose columns
/// form a regular simplex, or report infeasibility when `dim + 1` is not a
/// sum of 1, 2, 4 or 8 odd squares.
pub fn simplex_entif(dim: usize) -> Result<(FrameMatrix, SimplexCertificate)> {
    if dim == 0 {
        return Err(FrameError::InvalidParameter("dimension must be positive"));
    }
    let m = dim as u64 + 1;
    let witness =
        numtheory::simplex_feasible(dim as u64).ok_or(FrameError::SimplexInfeasible(dim as u64))?;

    let root = m.sqrt();
    let (case, decomposition, u) = if root * root == m {
        let inv = Rational::new(Int::one(), Int::from(root));
        let u = RationalMatrix::from_fn(m as usize, m as usize, |i, j| {
            if i == j {
                inv.clone()
            } else {
                Rational::zero()
            }
        });
        (SimplexCase::PerfectSquare { root }, None, u)
    } else {
        // the feasibility witness tried k ascending, and k = 1 would have
        // made m a perfect square, so k is 2, 4 or 8 here
        let k = witness.k;
        let block = orthogonal_block(&witness.parts);
        let mut a = block.clone();
        for _ in 1..(m as usize / k) {
            a = a.diag_concat(&block);
        }
        let u = a.map(|x| Rational::new(x.clone(), Int::from(m)));
        (SimplexCase::OddSquares { k }, Some(witness), u)
    };

    let ones = vec![Rational::one(); m as usize];
    let uv = mat_vec(&u, &ones);
    let mut w = uv.clone();
    w[m as usize - 1] -= Rational::one();

    let s = if w.iter().all(Zero::is_zero) {
        u.clone()
    } else {
        // reflection through the hyperplane normal to w maps U*ones to e_m;
        // both have norm 1/sqrt(m), so the reflection is well defined
        let wn: Rational = w.iter().map(|x| x * x).sum();
        let r = RationalMatrix::from_fn(m as usize, m as usize, |i, j| {
            let outer = Rational::from_integer(Int::from(2)) * &w[i] * &w[j] / &wn;
            if i == j {
                Rational::one() - outer
            } else {
                -outer
            }
        });
        r.matmul(&u).expect("square operands")
    };

    let inv_m = Rational::new(Int::one(), Int::from(m));
    let sts = s.transpose().matmul(&s).expect("square operands");
    for i in 0..m as usize {
        for j in 0..m as usize {
            let expect = if i == j { inv_m.clone() } else { Rational::zero() };
            assert_eq!(sts[(i, j)], expect, "S^T S must equal I/m exactly");
        }
    }
    let sv = mat_vec(&s, &ones);
    for (i, v) in sv.iter().enumerate() {
        let expect = if i == m as usize - 1 {
            Rational::one()
        } else {
            Rational::zero()
        };
        assert_eq!(*v, expect, "S must send the all-ones vector to e_m");
    }
    for j in 0..m as usize {
        assert_eq!(s[(m as usize - 1, j)], inv_m, "last row of S must be 1/m");
    }

    let keep: Vec<usize> = (0..dim).collect();
    let truncated = s.row_restrict(&keep).expect("dim >= 1 rows kept");
    let result = truncated.clear_denominators();
    let frame = result.matrix.clone();
    let cert = SimplexCertificate {
        m,
        case,
        decomposition,
        u,
        w,
        s,
        result,
    };
    Ok((frame, cert))
}

fn mat_vec(m: &RationalMatrix, v: &[Rational]) -> Vec<Rational> {
    (0..m.rows())
        .map(|i| {
            let mut acc = Rational::zero();
            for (j, vj) in v.iter().enumerate() {
                acc += m.get(i, j) * vj;
            }
            acc
        })
        .collect()
}

/// The scaled-orthogonal integer block whose rows and columns square-sum to
/// the sum of the squared parts: sizes 2, 4 and 8 wire the parts through the
/// complex, quaternion and octonion multiplication patterns.
fn orthogonal_block(parts: &[u64]) -> FrameMatrix {
    let p: Vec<Int> = parts.iter().map(|&x| Int::from(x)).collect();
    let rows: Vec<Vec<Int>> = match parts.len() {
        2 => {
            let (a, b) = (&p[0], &p[1]);
            vec![vec![a.clone(), -b.clone()], vec![b.clone(), a.clone()]]
        }
        4 => {
            let (a, b, c, d) = (&p[0], &p[1], &p[2], &p[3]);
            vec![
                vec![a.clone(), b.clone(), c.clone(), d.clone()],
                vec![-b.clone(), a.clone(), -d.clone(), c.clone()],
                vec![-c.clone(), d.clone(), a.clone(), -b.clone()],
                vec![-d.clone(), -c.clone(), b.clone(), a.clone()],
            ]
        }
        8 => {
            let (a, b, c, d) = (&p[0], &p[1], &p[2], &p[3]);
            let (e, f, g, h) = (&p[4], &p[5], &p[6], &p[7]);
            vec![
                vec![a.clone(), b.clone(), c.clone(), d.clone(), e.clone(), f.clone(), g.clone(), h.clone()],
                vec![-b.clone(), a.clone(), -d.clone(), c.clone(), -f.clone(), e.clone(), -h.clone(), g.clone()],
                vec![e.clone(), -f.clone(), g.clone(), -h.clone(), -a.clone(), b.clone(), -c.clone(), d.clone()],
                vec![-f.clone(), -e.clone(), h.clone(), g.clone(), b.clone(), a.clone(), -d.clone(), -c.clone()],
                vec![-d.clone(), -c.clone(), b.clone(), a.clone(), -h.clone(), -g.clone(), f.clone(), e.clone()],
                vec![c.clone(), -d.clone(), -a.clone(), b.clone(), -g.clone(), h.clone(), e.clone(), -f.clone()],
                vec![g.clone(), -h.clone(), -e.clone(), f.clone(), c.clone(), -d.clone(), -a.clone(), b.clone()],
                vec![-h.clone(), -g.clone(), -f.clone(), -e.clone(), d.clone(), c.clone(), b.clone(), a.clone()],
            ]
        }
        _ => unreachable!("witness part counts are 2, 4 or 8"),
    };
    FrameMatrix::from_rows(rows).expect("block rows are rectangular")
}
