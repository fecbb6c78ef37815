//! Closed-form remoteness of two-element permutation codes.
//!
//! For the pair `{id, sigma}` the remoteness is `d/2` when the cycle lengths of
//! `sigma` split into two halves of equal sum, and `floor(d/2) + 1` otherwise.
//! The minimal permutation is assembled cycle by cycle: identity on some cycles,
//! `sigma` on the others, and one `tau_e` on the cycle that straddles the half.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::metric::{permutation_covering_radius, permutation_remoteness, MetricError};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairError {
    #[error("e = {e} must lie in 2..={max} for degree {n}")]
    EOutOfRange { n: usize, e: usize, max: usize },
    #[error("the pair is degenerate: sigma is the identity")]
    IdentitySigma,
    #[error("degree mismatch between the two codewords")]
    DegreeMismatch,
}

/// `tau_e` for the standard cycle `kappa: i -> i+1 (mod n)`: fixes `0..n-e`,
/// shifts `n-e..n-1` up by one and sends `n-1` back to `n-e`. It is at distance
/// `e` from the identity and `n + 1 - e` from `kappa`.
pub fn tau_e(n: usize, e: usize) -> Result<Permutation, PairError> {
    if n < 3 || e < 2 || e > n - 1 {
        return Err(PairError::EOutOfRange {
            n,
            e,
            max: n.saturating_sub(1),
        });
    }
    let images = (0..n).map(|j| {
        if j < n - e {
            j
        } else if j < n - 1 {
            j + 1
        } else {
            n - e
        }
    });
    Ok(Permutation::from_images(images).expect("tau_e is a bijection"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairAnalysis {
    /// `d(id, sigma)`.
    pub d: usize,
    /// The cycle lengths of `sigma` split into two halves of sum `d/2`.
    pub partitionable: bool,
    pub remoteness: usize,
    /// A permutation at distance at most `remoteness` from both codewords.
    pub minimal_permutation: Permutation,
    /// Index (in cycle order) of the cycle carrying the penalty, if one was paid.
    pub straddle: Option<usize>,
}

/// A subset of `lengths` summing to `target`, by exact subset-sum DP.
fn subset_with_sum(lengths: &[usize], target: usize) -> Option<Vec<bool>> {
    // reach[i][s]: some subset of the first i lengths sums to s.
    let k = lengths.len();
    let mut reach = vec![vec![false; target + 1]; k + 1];
    reach[0][0] = true;
    for i in 0..k {
        for s in 0..=target {
            if reach[i][s] {
                reach[i + 1][s] = true;
                if s + lengths[i] <= target {
                    reach[i + 1][s + lengths[i]] = true;
                }
            }
        }
    }
    if !reach[k][target] {
        return None;
    }
    let mut take = vec![false; k];
    let mut s = target;
    for i in (0..k).rev() {
        if !reach[i][s] {
            take[i] = true;
            s -= lengths[i];
        }
    }
    Some(take)
}

/// Places `local` (a permutation of `0..cycle.len()`) on the points of `cycle`,
/// identifying `cycle[i]` with `i`.
fn embed_on_cycle(images: &mut [usize], cycle: &[usize], local: &Permutation) {
    for (i, &point) in cycle.iter().enumerate() {
        images[point] = cycle[local.image(i)];
    }
}

/// Remoteness of `{id, sigma}` with a minimal permutation.
pub fn pair_remoteness(sigma: &Permutation) -> Result<PairAnalysis, PairError> {
    if sigma.is_identity() {
        return Err(PairError::IdentitySigma);
    }
    let n = sigma.degree();
    let cs = sigma.cycle_structure();
    let lengths: Vec<usize> = cs.lengths().collect();
    let d: usize = lengths.iter().sum();
    let mut images: Vec<usize> = (0..n).collect();

    let split = if d % 2 == 0 {
        subset_with_sum(&lengths, d / 2)
    } else {
        None
    };

    if let Some(keep_identity) = split {
        for (c, cycle) in cs.cycles.iter().enumerate() {
            if !keep_identity[c] {
                for &p in cycle {
                    images[p] = sigma.image(p);
                }
            }
        }
        return Ok(PairAnalysis {
            d,
            partitionable: true,
            remoteness: d / 2,
            minimal_permutation: Permutation::from_images(images).expect("bijection"),
            straddle: None,
        });
    }

    // Not partitionable: no prefix sum equals d/2, so some cycle straddles it.
    let half_up = d.div_ceil(2);
    let half_down = d / 2;
    let mut before = 0;
    let mut s = 0;
    while 2 * (before + lengths[s]) < d {
        before += lengths[s];
        s += 1;
    }
    let through = before + lengths[s];
    for cycle in &cs.cycles[s + 1..] {
        for &p in cycle {
            images[p] = sigma.image(p);
        }
    }
    let straddling = &cs.cycles[s];
    if before == half_up - 1 {
        for &p in straddling {
            images[p] = sigma.image(p);
        }
    } else if through == half_down + 1 {
        // identity on the straddling cycle
    } else {
        let e = through + 1 - half_up;
        let local = tau_e(lengths[s], e).expect("2 <= e <= l_s - 1 in the remaining case");
        embed_on_cycle(&mut images, straddling, &local);
    }
    Ok(PairAnalysis {
        d,
        partitionable: false,
        remoteness: half_down + 1,
        minimal_permutation: Permutation::from_images(images).expect("bijection"),
        straddle: Some(s),
    })
}

/// Remoteness of an arbitrary pair `{a, b}`, reduced to `{id, b a^-1}` by translation.
pub fn pair_remoteness_of(a: &Permutation, b: &Permutation) -> Result<PairAnalysis, PairError> {
    if a.degree() != b.degree() {
        return Err(PairError::DegreeMismatch);
    }
    let a_inv = a.inverse();
    let sigma = b.then(&a_inv);
    let mut analysis = pair_remoteness(&sigma)?;
    analysis.minimal_permutation = analysis.minimal_permutation.then(a);
    Ok(analysis)
}

/// Whether `r(C) + cr(C) >= n + 1`, evaluated by brute force over `S_n`.
/// Singletons and the whole group are exempt from the bound (they give `n`).
pub fn strict_triangle_check(code: &[Permutation]) -> Result<bool, MetricError> {
    let n = code.first().ok_or(MetricError::EmptyCode)?.degree();
    let (r, _) = permutation_remoteness(code)?;
    let cr = permutation_covering_radius(code)?;
    Ok(r + cr > n)
}
