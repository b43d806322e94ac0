//! Full-spark, equal-norm integer frames that are nearly tight.
//!
//! The construction tracks a reference unit-norm tight frame: each reference
//! vector is replaced by a nearby rational point on the unit sphere (via
//! stereographic projection, which parameterizes all of them), rejecting any
//! candidate that falls on a hyperplane spanned by previously accepted
//! vectors. Clearing one common denominator then yields an integer frame
//! whose columns share a single norm, and the perturbation bound keeps the
//! normalized frame bounds inside the requested bracket.

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::analysis;
use crate::error::{FrameError, Result};
use crate::{FrameMatrix, Int, Rational, RationalMatrix};

#[derive(Clone, Debug)]
pub struct AlmostTightRequest {
    pub dim: usize,
    pub count: usize,
    /// Tightness slack, strictly between 0 and 1.
    pub epsilon: f64,
    /// Seed for the deterministic retry jitter.
    pub seed: u64,
    /// Largest denominator tried for a single stereographic preimage
    /// coordinate before giving up.
    pub denominator_budget: u64,
}

impl AlmostTightRequest {
    pub fn new(dim: usize, count: usize, epsilon: f64) -> Self {
        Self {
            dim,
            count,
            epsilon,
            seed: 0,
            denominator_budget: 1 << 24,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(FrameError::InvalidParameter("dimension must be positive"));
        }
        if self.count < self.dim {
            return Err(FrameError::CountBelowDimension {
                dim: self.dim,
                count: self.count,
            });
        }
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(FrameError::InvalidParameter("epsilon must lie in (0, 1)"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct AlmostTightOutcome {
    pub matrix: FrameMatrix,
    /// Common denominator cleared from the rational unit vectors; every
    /// column norm squared equals `scale^2`.
    pub scale: Int,
    /// Certified numeric frame bounds after normalization by `scale^2`.
    pub lower: f64,
    pub upper: f64,
    /// The tight bound `count / dim` being approximated.
    pub target: f64,
}

struct XorShift64(u64);

impl XorShift64 {
    fn new(seed: u64) -> Self {
        Self(seed | 1)
    }

    fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    /// Uniformish value in [-1, 1].
    fn jitter(&mut self) -> f64 {
        (self.next() % 2048) as f64 / 1024.0 - 1.0
    }
}

pub fn almost_tight(req: &AlmostTightRequest) -> Result<AlmostTightOutcome> {
    req.validate()?;
    let (m, n) = (req.dim, req.count);

    if m == n {
        // a basis is exactly tight with bound 1
        let matrix = FrameMatrix::identity(m);
        return Ok(AlmostTightOutcome {
            matrix,
            scale: Int::one(),
            lower: 1.0,
            upper: 1.0,
            target: 1.0,
        });
    }

    let target = n as f64 / m as f64;
    // (1 - delta)^2 >= 1 - eps and (1 + delta)^2 <= 1 + eps
    let delta = ((1.0 + req.epsilon).sqrt() - 1.0).min(1.0 - (1.0 - req.epsilon).sqrt());
    // stay strictly inside the cap so float slop in the certification
    // cannot push the final bounds out of the bracket
    let cap = 0.999 * delta * (n as f64).sqrt() / m as f64;

    let psi = reference_untf(m, n);
    let mut rng = XorShift64::new(req.seed ^ 0x5851_f42d_4c95_7f2d);
    let mut chosen: Vec<Vec<Rational>> = Vec::with_capacity(n);

    for target_vec in &psi {
        let mut denom = 32u64;
        let mut accepted = false;
        let mut attempt = 0u32;
        while denom <= req.denominator_budget {
            let jitter = attempt > 0;
            let cand = rational_sphere_point(target_vec, denom, jitter.then_some(&mut rng));
            let dist = distance(&cand, target_vec);
            if dist <= cap && extends_full_spark(&chosen, &cand, m) {
                chosen.push(cand);
                accepted = true;
                break;
            }
            attempt += 1;
            if attempt % 4 == 0 {
                denom *= 2;
            }
        }
        if !accepted {
            return Err(FrameError::BudgetExhausted);
        }
    }

    let rational = RationalMatrix::from_fn(m, n, |i, j| chosen[j][i].clone());
    let cleared = rational.clear_denominators();
    let matrix = cleared.matrix;
    let scale = cleared.scale;

    // unit rational columns scale to one shared integer norm
    let norm_sq = &scale * &scale;
    for j in 0..n {
        assert_eq!(matrix.col_dot(j, j), norm_sq, "columns must share norm scale^2");
    }
    let spark = analysis::spark(&matrix);
    assert_eq!(spark, m + 1, "hyperplane avoidance must yield a full-spark frame");

    let (lo, hi) = analysis::frame_bounds_numeric(&matrix, 1e-12)?;
    let norm_f = norm_sq.to_f64().unwrap_or(f64::INFINITY);
    let (lower, upper) = (lo / norm_f, hi / norm_f);
    assert!(
        lower >= (1.0 - req.epsilon) * target - 1e-9 && upper <= (1.0 + req.epsilon) * target + 1e-9,
        "perturbation bound must keep normalized bounds inside the bracket \
         (got [{lower}, {upper}], target {target}, eps {})",
        req.epsilon
    );

    Ok(AlmostTightOutcome {
        matrix,
        scale,
        lower,
        upper,
        target,
    })
}

/// A real harmonic unit-norm tight frame of `n > m` vectors: trigonometric
/// coordinate pairs at distinct frequencies (plus a constant coordinate when
/// the dimension is odd).
fn reference_untf(m: usize, n: usize) -> Vec<Vec<f64>> {
    assert!(n > m && m >= 1);
    let tau = std::f64::consts::TAU;
    (0..n)
        .map(|i| {
            let angle = |k: usize| tau * (k * i % n) as f64 / n as f64;
            let mut v = Vec::with_capacity(m);
            if m % 2 == 1 {
                v.push(1.0 / (m as f64).sqrt());
            }
            let pairs = m / 2;
            let amp = (2.0 / m as f64).sqrt();
            for k in 1..=pairs {
                v.push(amp * angle(k).cos());
                v.push(amp * angle(k).sin());
            }
            v
        })
        .collect()
}

/// Rational point on the unit sphere near `target`: round the stereographic
/// preimage of `target` to the given denominator (optionally jittered) and
/// map it back. Projection is taken from whichever pole is farther from the
/// target so the preimage stays small.
fn rational_sphere_point(
    target: &[f64],
    denom: u64,
    mut rng: Option<&mut XorShift64>,
) -> Vec<Rational> {
    let m = target.len();
    let last = target[m - 1];
    let from_north = last <= 0.0; // project from the pole opposite the target
    let split = if from_north { 1.0 - last } else { 1.0 + last };
    let d = Int::from(denom);
    let y: Vec<Rational> = (0..m - 1)
        .map(|j| {
            let mut coord = target[j] / split;
            if let Some(r) = rng.as_deref_mut() {
                coord += r.jitter() / denom as f64;
            }
            let num = (coord * denom as f64).round();
            // clamp away pathological rounding of extreme values
            let num = if num.is_finite() { num as i64 } else { 0 };
            Rational::new(Int::from(num), d.clone())
        })
        .collect();
    let s: Rational = y.iter().map(|v| v * v).sum();
    let denom_term = &s + Rational::one();
    let mut point: Vec<Rational> = y
        .iter()
        .map(|v| Rational::from_integer(Int::from(2)) * v / &denom_term)
        .collect();
    let last_coord = (&s - Rational::one()) / &denom_term;
    point.push(if from_north { last_coord } else { -last_coord });
    point
}

fn distance(p: &[Rational], target: &[f64]) -> f64 {
    p.iter()
        .zip(target)
        .map(|(a, b)| {
            let af = ratio_to_f64(a);
            (af - b) * (af - b)
        })
        .sum::<f64>()
        .sqrt()
}

fn ratio_to_f64(r: &Rational) -> f64 {
    let num = r.numer().to_f64().unwrap_or(f64::INFINITY);
    let den = r.denom().to_f64().unwrap_or(f64::INFINITY);
    num / den
}

/// True when adding `cand` keeps every subset of size `<= m` linearly
/// independent: `cand` must avoid the span of every (m-1)-subset of the
/// accepted vectors (or of all of them while fewer than m-1 exist).
fn extends_full_spark(chosen: &[Vec<Rational>], cand: &[Rational], m: usize) -> bool {
    if cand.iter().all(Zero::is_zero) {
        return false;
    }
    if chosen.is_empty() {
        return true;
    }
    let take = (m - 1).min(chosen.len());
    let mut ok = true;
    for_each_subset_rec(chosen.len(), take, &mut |subset: &[usize]| {
        let mut cols: Vec<&[Rational]> = subset.iter().map(|&i| chosen[i].as_slice()).collect();
        cols.push(cand);
        if columns_rank(&cols) < cols.len() {
            ok = false;
        }
        ok
    });
    ok
}

fn for_each_subset_rec(n: usize, k: usize, visit: &mut impl FnMut(&[usize]) -> bool) {
    fn go(
        start: usize,
        n: usize,
        k: usize,
        cur: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == k {
            return visit(cur);
        }
        for i in start..n {
            cur.push(i);
            let keep_going = go(i + 1, n, k, cur, visit);
            cur.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
    let mut cur = Vec::with_capacity(k);
    go(0, n, k, &mut cur, visit);
}

/// Exact rank of a set of rational column vectors. Each column is scaled by
/// its denominator lcm (rank-preserving) to land in the integers.
fn columns_rank(cols: &[&[Rational]]) -> usize {
    let m = cols[0].len();
    let scaled: Vec<Vec<Int>> = cols
        .iter()
        .map(|col| {
            let mut l = Int::one();
            for v in col.iter() {
                l = l.lcm(v.denom());
            }
            col.iter().map(|v| v.numer() * (&l / v.denom())).collect()
        })
        .collect();
    FrameMatrix::from_fn(m, cols.len(), |i, j| scaled[j][i].clone()).rank()
}
