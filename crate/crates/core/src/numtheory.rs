//! Number-theoretic engines behind the frame constructions: two-square
//! representations, odd-square decompositions, Pythagorean chains, the coin
//! problem, and Hadamard matrix generation.
//!
//! Arguments are machine integers (trial division keeps everything at desk
//! scale); Pythagorean chains are the exception and carry arbitrary-precision
//! values because the hypotenuses grow doubly exponentially in the chain
//! length.

use num_integer::Roots;
use num_traits::One;

use crate::error::{FrameError, Result};
use crate::matrix::Matrix;
use crate::{FrameMatrix, Int};

/// All ways of writing `n` as a sum of two unequal positive squares,
/// together with the count predicted by the divisor formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoSquareRepSet {
    pub n: u64,
    /// Pairs `(a, b)` with `a > b >= 1` and `a^2 + b^2 = n`, in decreasing
    /// order of `a`.
    pub reps: Vec<(u64, u64)>,
    pub predicted_count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddSquareDecomposition {
    pub m: u64,
    /// Number of parts: 1, 2, 4 or 8.
    pub k: usize,
    /// Odd positive parts in non-increasing order; their squares sum to `m`.
    pub parts: Vec<u64>,
}

/// For each `1 <= i <= k`, a list of `i` nonzero integers whose squares sum
/// to `s^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PythagoreanChain {
    pub k: usize,
    pub s: Int,
    pub decompositions: Vec<Vec<Int>>,
}

/// Witness for the coin problem: `g * m = p * a + q * b` with `g = gcd(a, b)`
/// and `0 <= q < a / g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoinRep {
    pub a: u64,
    pub b: u64,
    pub g: u64,
    pub m: u64,
    pub p: u64,
    pub q: u64,
}

fn is_perfect_square(n: u64) -> Option<u64> {
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Enumerate the representations of `n` as a sum of two unequal positive
/// squares and cross-check the count against [`count_two_square_reps`].
pub fn two_square_reps(n: u64) -> TwoSquareRepSet {
    let mut reps = Vec::new();
    let mut b = 1;
    while 2 * b * b < n {
        let rest = n - b * b;
        if let Some(a) = is_perfect_square(rest) {
            reps.push((a, b));
        }
        b += 1;
    }
    let predicted = count_two_square_reps(n);
    assert_eq!(
        reps.len() as u64,
        predicted,
        "two-square enumeration disagrees with the divisor formula for n = {n}"
    );
    TwoSquareRepSet {
        n,
        reps,
        predicted_count: predicted,
    }
}

/// Count representations of `n` as a sum of two unequal positive squares via
/// the factorization of `n`: with `B` the product of `(exponent + 1)` over
/// the prime factors congruent to 1 mod 4, the count is `B/2` when `B` is
/// even and `(B-1)/2` when `B` is odd, and it is zero whenever some prime
/// factor congruent to 3 mod 4 occurs to an odd power.
pub fn count_two_square_reps(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut rest = n;
    while rest % 2 == 0 {
        rest /= 2;
    }
    let mut b = 1u64;
    let mut p = 3u64;
    while p * p <= rest {
        if rest % p == 0 {
            let mut exp = 0u64;
            while rest % p == 0 {
                rest /= p;
                exp += 1;
            }
            if p % 4 == 3 {
                if exp % 2 == 1 {
                    return 0;
                }
            } else {
                b *= exp + 1;
            }
        }
        p += 2;
    }
    if rest > 1 {
        if rest % 4 == 3 {
            return 0;
        }
        b *= 2;
    }
    if b % 2 == 0 {
        b / 2
    } else {
        (b - 1) / 2
    }
}

/// Write `m` as a sum of `k` odd positive squares, if possible. Parts are
/// found depth-first in non-increasing order, so the returned decomposition
/// is the lexicographically largest one.
pub fn odd_square_decompose(m: u64, k: usize) -> Option<OddSquareDecomposition> {
    assert!(matches!(k, 1 | 2 | 4 | 8), "part count must be 1, 2, 4 or 8");
    // odd squares are 1 mod 8, so k of them sum to k mod 8
    if m < k as u64 || m % 8 != (k % 8) as u64 {
        return None;
    }
    fn search(m: u64, k: usize, max_part: u64, parts: &mut Vec<u64>) -> bool {
        if k == 0 {
            return m == 0;
        }
        if m < k as u64 {
            return false;
        }
        let budget = m - (k as u64 - 1);
        let mut a = budget.sqrt();
        if a % 2 == 0 {
            a -= 1;
        }
        a = a.min(max_part);
        while a >= 1 {
            parts.push(a);
            if search(m - a * a, k - 1, a, parts) {
                return true;
            }
            parts.pop();
            if a < 3 {
                break;
            }
            a -= 2;
        }
        false
    }
    let mut parts = Vec::with_capacity(k);
    search(m, k, m.sqrt() | 1, &mut parts).then_some(OddSquareDecomposition { m, k, parts })
}

/// Decide whether a regular simplex with `dim + 1` integer vertices fits in
/// `dim` dimensions: `dim + 1` must be a sum of 1, 2, 4 or 8 odd squares.
/// Returns the first witness with the part count tried in ascending order.
pub fn simplex_feasible(dim: u64) -> Option<OddSquareDecomposition> {
    let m = dim + 1;
    [1usize, 2, 4, 8]
        .into_iter()
        .find_map(|k| odd_square_decompose(m, k))
}

/// A Pythagorean chain of depth `k` seeded at the smallest odd pair (3, 1).
///
/// For `k <= 2` the primitive triple (3, 4, 5) already provides `s = 5`, so
/// the iteration is skipped.
pub fn pythagorean_chain(k: usize) -> PythagoreanChain {
    assert!(k >= 1, "chain depth must be positive");
    if k <= 2 {
        let mut decompositions = vec![vec![Int::from(5)]];
        if k == 2 {
            decompositions.push(vec![Int::from(3), Int::from(4)]);
        }
        return PythagoreanChain {
            k,
            s: Int::from(5),
            decompositions,
        };
    }
    pythagorean_chain_from(3, 1, k).expect("(3, 1) is a valid odd seed")
}

/// A Pythagorean chain built by iterating Euclid's formula from an odd seed
/// pair `m0 > n0`.
///
/// With both seeds odd, every hypotenuse `c = m^2 + n^2` is 2 mod 8, i.e.
/// twice an odd number, so the next step can take `(c/2, 1)` as its
/// generator and the previous hypotenuse reappears as the even leg `2mn`.
/// Splitting that leg one step at a time turns `s^2` into a sum of `i`
/// nonzero squares for every `1 <= i <= k`.
pub fn pythagorean_chain_from(m0: u64, n0: u64, k: usize) -> Result<PythagoreanChain> {
    if k == 0 {
        return Err(FrameError::InvalidParameter("chain depth must be positive"));
    }
    if m0 <= n0 || n0 == 0 || m0 % 2 == 0 || n0 % 2 == 0 {
        return Err(FrameError::InvalidParameter(
            "seed must be odd integers m0 > n0 >= 1",
        ));
    }
    let steps = k.max(2) - 1;
    // triples[i] = (a, b, c) with a^2 + b^2 = c^2 and b = previous c
    let mut triples: Vec<(Int, Int, Int)> = Vec::with_capacity(steps);
    let mut m = Int::from(m0);
    let mut n = Int::from(n0);
    for _ in 0..steps {
        let a = &m * &m - &n * &n;
        let b = Int::from(2) * &m * &n;
        let c = &m * &m + &n * &n;
        m = &c / 2;
        n = Int::one();
        triples.push((a, b, c));
    }
    let last = triples.len() - 1;
    let s = triples[last].2.clone();
    let mut decompositions = vec![vec![s.clone()]];
    for i in 2..=k {
        let split = last + 2 - i; // the triple whose leg pair ends this decomposition
        let mut parts: Vec<Int> = (split + 1..=last).rev().map(|t| triples[t].0.clone()).collect();
        parts.push(triples[split].0.clone());
        parts.push(triples[split].1.clone());
        decompositions.push(parts);
    }
    Ok(PythagoreanChain {
        k,
        s,
        decompositions,
    })
}

/// Solve `g * m = p * a + q * b` with `g = gcd(a, b)`, `p, q >= 0` and
/// `q < a / g`. The solution is unique under the `q` bound and guaranteed to
/// exist for `m >= (a/g - 1)(b/g - 1)`; smaller `m` are answered when a
/// representation happens to exist.
pub fn coin_representation(a: u64, b: u64, m: u64) -> Result<CoinRep> {
    if a == 0 || b == 0 {
        return Err(FrameError::ZeroParameter);
    }
    let g = gcd(a, b);
    let (ar, br) = (a / g, b / g);
    for q in 0..ar {
        let used = (q as u128) * (br as u128);
        if used > m as u128 {
            break;
        }
        let rest = m as u128 - used;
        if rest % ar as u128 == 0 {
            let p = (rest / ar as u128) as u64;
            return Ok(CoinRep { a, b, g, m, p, q });
        }
    }
    Err(FrameError::CoinInfeasible { a, b, m })
}

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// True when [`hadamard`] can produce the order: 1, 2, or `2^j * t` where
/// `t` is 1 or a Paley order `q + 1` for a prime `q` congruent to 3 mod 4.
pub fn hadamard_order_supported(order: u64) -> bool {
    if order == 0 {
        return false;
    }
    if order.is_power_of_two() {
        return true;
    }
    (0..=order.trailing_zeros()).any(|j| {
        let t = order >> j;
        t % 4 == 0 && is_prime(t - 1) && (t - 1) % 4 == 3
    })
}

/// Construct a Hadamard matrix of the given order, or refuse with
/// [`FrameError::UnsupportedHadamardOrder`] when the order is outside the
/// implemented constructions. `H^T H = order * I` is verified exactly before
/// returning.
pub fn hadamard(order: u64) -> Result<FrameMatrix> {
    if order == 0 {
        return Err(FrameError::UnsupportedHadamardOrder(order));
    }
    let signs = if order.is_power_of_two() {
        sylvester_signs(order)
    } else {
        // fewest doublings first: try the largest candidate base order
        let base = (0..=order.trailing_zeros())
            .map(|j| order >> j)
            .find(|&t| t % 4 == 0 && is_prime(t - 1) && (t - 1) % 4 == 3)
            .ok_or(FrameError::UnsupportedHadamardOrder(order))?;
        let mut h = paley_signs(base);
        while (h.rows() as u64) < order {
            h = h.doubled(&1i64);
        }
        h
    };
    let n = signs.rows();
    let g = signs.gram();
    for i in 0..n {
        for j in 0..n {
            let expect = if i == j { order as i64 } else { 0 };
            assert_eq!(
                g[(i, j)],
                expect,
                "Hadamard construction for order {order} failed verification"
            );
        }
    }
    Ok(signs.map(|&x| Int::from(x)))
}

/// Sylvester Hadamard matrix; the order must be a power of two.
pub fn sylvester_hadamard(order: u64) -> Result<FrameMatrix> {
    if !order.is_power_of_two() {
        return Err(FrameError::UnsupportedHadamardOrder(order));
    }
    hadamard(order)
}

/// Paley I Hadamard matrix of order `q + 1` for a prime `q` congruent to
/// 3 mod 4, without any doubling.
pub fn paley_hadamard(order: u64) -> Result<FrameMatrix> {
    if order < 4 || order % 4 != 0 || !is_prime(order - 1) || (order - 1) % 4 != 3 {
        return Err(FrameError::UnsupportedHadamardOrder(order));
    }
    let signs = paley_signs(order);
    let g = signs.gram();
    for i in 0..signs.rows() {
        for j in 0..signs.rows() {
            let expect = if i == j { order as i64 } else { 0 };
            assert_eq!(g[(i, j)], expect, "Paley construction failed for order {order}");
        }
    }
    Ok(signs.map(|&x| Int::from(x)))
}

fn sylvester_signs(order: u64) -> Matrix<i64> {
    let mut h = Matrix::from_rows(vec![vec![1i64]]).unwrap();
    while (h.rows() as u64) < order {
        h = h.doubled(&1i64);
    }
    h
}

/// Core of the Paley I construction: `H = I + S` where `S` has a zero
/// corner, +1 top border, -1 left border, and the quadratic-residue
/// character table of `Z_q` inside.
fn paley_signs(order: u64) -> Matrix<i64> {
    let q = order - 1;
    let mut residue = vec![false; q as usize];
    for x in 1..q {
        residue[((x * x) % q) as usize] = true;
    }
    let chi = |x: u64| -> i64 {
        if x == 0 {
            0
        } else if residue[x as usize] {
            1
        } else {
            -1
        }
    };
    let n = order as usize;
    Matrix::from_fn(n, n, |i, j| {
        let s = match (i, j) {
            (0, 0) => 0,
            (0, _) => 1,
            (_, 0) => -1,
            (i, j) => chi(((i - 1) as u64 + q - (j - 1) as u64) % q),
        };
        s + if i == j { 1 } else { 0 }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_square_examples() {
        let r = two_square_reps(25);
        assert_eq!(r.reps, vec![(4, 3)]);
        assert_eq!(r.predicted_count, 1);

        let r = two_square_reps(625);
        assert_eq!(r.reps, vec![(24, 7), (20, 15)]);
        assert_eq!(r.predicted_count, 2);

        let r = two_square_reps(3);
        assert!(r.reps.is_empty());
        assert_eq!(r.predicted_count, 0);
    }

    #[test]
    fn two_square_count_examples() {
        assert_eq!(count_two_square_reps(625), 2);
        assert_eq!(count_two_square_reps(2), 0);
        assert_eq!(count_two_square_reps(45), 1);
        assert_eq!(two_square_reps(45).reps, vec![(6, 3)]);
    }

    #[test]
    fn two_square_formula_matches_enumeration_small() {
        for n in 1..=2000 {
            // two_square_reps asserts the agreement internally
            let _ = two_square_reps(n);
        }
    }

    #[test]
    fn odd_square_examples() {
        assert_eq!(
            odd_square_decompose(4, 4).unwrap().parts,
            vec![1, 1, 1, 1]
        );
        assert_eq!(odd_square_decompose(9, 1).unwrap().parts, vec![3]);
        for k in [1usize, 2, 4, 8] {
            assert_eq!(odd_square_decompose(7, k), None);
        }
        assert_eq!(odd_square_decompose(18, 2).unwrap().parts, vec![3, 3]);
    }

    #[test]
    fn simplex_feasibility_examples() {
        let w = simplex_feasible(3).unwrap();
        assert_eq!((w.k, w.parts.clone()), (4, vec![1, 1, 1, 1]));
        assert_eq!(simplex_feasible(4), None);
        let w = simplex_feasible(8).unwrap();
        assert_eq!((w.k, w.parts.clone()), (1, vec![3]));
    }

    #[test]
    fn simplex_witnesses_satisfy_the_mod8_residue() {
        // k odd squares sum to k mod 8, so any witness must match the
        // residue of dim + 1 and stay below it in size
        for dim in 1..=40u64 {
            let m = dim + 1;
            match simplex_feasible(dim) {
                Some(w) => {
                    assert_eq!(m % 8, (w.k % 8) as u64, "dim {dim}");
                    assert!(m >= w.k as u64);
                    assert!(w.parts.iter().all(|p| p % 2 == 1));
                    let sum: u64 = w.parts.iter().map(|p| p * p).sum();
                    assert_eq!(sum, m, "dim {dim}");
                }
                None => {
                    for k in [1usize, 2, 4, 8] {
                        assert!(odd_square_decompose(m, k).is_none(), "dim {dim} k {k}");
                    }
                }
            }
        }
    }

    #[test]
    fn chain_examples() {
        let c = pythagorean_chain(3);
        assert_eq!(c.s, Int::from(26));
        assert_eq!(
            c.decompositions,
            vec![
                vec![Int::from(26)],
                vec![Int::from(24), Int::from(10)],
                vec![Int::from(24), Int::from(8), Int::from(6)],
            ]
        );

        let c = pythagorean_chain(1);
        assert_eq!(c.s, Int::from(5));
        assert_eq!(c.decompositions, vec![vec![Int::from(5)]]);

        let c = pythagorean_chain(4);
        assert_eq!(c.s, Int::from(170));
        assert_eq!(
            c.decompositions[3],
            vec![Int::from(168), Int::from(24), Int::from(8), Int::from(6)]
        );
    }

    #[test]
    fn chain_sums_are_exact() {
        for k in 1..=10 {
            let c = pythagorean_chain(k);
            let target = &c.s * &c.s;
            for (i, dec) in c.decompositions.iter().enumerate() {
                assert_eq!(dec.len(), i + 1);
                let sum: Int = dec.iter().map(|x| x * x).sum();
                assert_eq!(sum, target, "chain k={k}, decomposition {}", i + 1);
                assert!(dec.iter().all(|x| !num_traits::Zero::is_zero(x)));
            }
        }
    }

    #[test]
    fn chain_rejects_bad_seeds() {
        assert!(pythagorean_chain_from(4, 1, 3).is_err());
        assert!(pythagorean_chain_from(3, 3, 3).is_err());
        assert!(pythagorean_chain_from(5, 3, 5).is_ok());
    }

    #[test]
    fn coin_examples() {
        let r = coin_representation(8, 10, 12).unwrap();
        assert_eq!((r.p, r.q, r.g), (3, 0, 2));
        let r = coin_representation(3, 5, 8).unwrap();
        assert_eq!((r.p, r.q), (1, 1));
        let r = coin_representation(1, 17, 9).unwrap();
        assert_eq!((r.p, r.q), (9, 0));
        assert_eq!(
            coin_representation(3, 5, 1),
            Err(FrameError::CoinInfeasible { a: 3, b: 5, m: 1 })
        );
    }

    #[test]
    fn coin_representation_is_unique_in_window() {
        for a in 2..=20u64 {
            for b in (a + 1)..=20u64 {
                if gcd(a, b) != 1 {
                    continue;
                }
                let bound = (a - 1) * (b - 1);
                for m in bound..bound + 50 {
                    let mut found = 0;
                    for q in 0..a {
                        if q * b <= m && (m - q * b) % a == 0 {
                            found += 1;
                        }
                    }
                    assert_eq!(found, 1, "a={a}, b={b}, m={m}");
                    let r = coin_representation(a, b, m).unwrap();
                    assert_eq!(r.p * a + r.q * b, m);
                    assert!(r.q < a);
                }
            }
        }
    }

    #[test]
    fn hadamard_examples() {
        let h2 = hadamard(2).unwrap();
        assert_eq!(h2, crate::testutil::fm(&[&[1, 1], &[1, -1]]));

        let h12 = hadamard(12).unwrap();
        assert_eq!(h12.rows(), 12);

        assert_eq!(hadamard(6), Err(FrameError::UnsupportedHadamardOrder(6)));
        assert_eq!(hadamard(28), Err(FrameError::UnsupportedHadamardOrder(28)));
    }

    #[test]
    fn hadamard_constructible_orders_verify() {
        for order in 1..=64u64 {
            if !hadamard_order_supported(order) {
                assert!(hadamard(order).is_err());
                continue;
            }
            // the constructor itself asserts H^T H == order * I
            let h = hadamard(order).unwrap();
            assert_eq!(h.rows(), order as usize);
            assert_eq!(h.cols(), order as usize);
        }
    }

    #[test]
    fn paley_and_sylvester_fronts() {
        assert!(paley_hadamard(12).is_ok());
        assert!(paley_hadamard(16).is_err());
        assert!(sylvester_hadamard(16).is_ok());
        assert!(sylvester_hadamard(12).is_err());
    }
}
