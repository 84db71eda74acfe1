//! Depth over the continuous cube of score vectors.
//!
//! Voters assign each candidate a rank, but an evaluation point may sit
//! anywhere in `[1, m]^m`: component `c` is a hypothetical score for
//! candidate `c`, lower meaning more preferred. Depth at a point `x` is
//!
//! ```text
//! D_q(x) = 1 / (1 + (1/n) * sum over voters v, candidates c of |rank(c,v) - x_c|^q)
//! ```
//!
//! The deepest point under `q = 2` is the vector of per-candidate mean
//! ranks. Under `q = 1` the maximizers form a box: each coordinate ranges
//! over the (lower to upper) median of that candidate's ranks. Winner sets
//! read off the candidates that can be ranked first by some deepest point.

use crate::ranking::Profile;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContinuousError {
    #[error("evaluation point has {got} coordinates, profile has {expected} candidates")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("order q must be at least 1")]
    InvalidOrder,
}

/// A point of the score cube: one coordinate per candidate, lower is better.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluationPoint {
    pub coords: Vec<f64>,
}

/// Axis-aligned box of deepest points, coordinatewise bounds inclusive.
#[derive(Debug, Clone, PartialEq)]
pub struct DeepestBox {
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
}

/// Maximizers of continuous depth: a single point or a full box.
#[derive(Debug, Clone, PartialEq)]
pub enum ContinuousDeepest {
    Point(EvaluationPoint),
    Box(DeepestBox),
}

/// Depth of `x` against the profile at order `q` (`q = inf` takes the max
/// displacement per voter instead of a sum over candidates).
pub fn lq_depth(x: &EvaluationPoint, profile: &Profile, q: f64) -> Result<f64, ContinuousError> {
    if x.coords.len() != profile.m() {
        return Err(ContinuousError::DimensionMismatch {
            expected: profile.m(),
            got: x.coords.len(),
        });
    }
    if !(q >= 1.0) {
        return Err(ContinuousError::InvalidOrder);
    }
    let mut total = 0.0;
    for v in 0..profile.n() {
        if q.is_infinite() {
            let mut worst = 0.0_f64;
            for (c, xc) in x.coords.iter().enumerate() {
                worst = worst.max((profile.rank(c, v) as f64 - xc).abs());
            }
            total += worst;
        } else {
            for (c, xc) in x.coords.iter().enumerate() {
                total += (profile.rank(c, v) as f64 - xc).abs().powf(q);
            }
        }
    }
    Ok(1.0 / (1.0 + total / profile.n() as f64))
}

/// The unique maximizer of squared-displacement depth: per-candidate means.
pub fn l2_deepest(profile: &Profile) -> EvaluationPoint {
    let n = profile.n() as f64;
    let coords = (0..profile.m())
        .map(|c| (0..profile.n()).map(|v| profile.rank(c, v) as f64).sum::<f64>() / n)
        .collect();
    EvaluationPoint { coords }
}

/// The box of maximizers of absolute-displacement depth: per-candidate
/// medians, spanning lower to upper median when `n` is even.
pub fn l1_deepest_box(profile: &Profile) -> DeepestBox {
    let n = profile.n();
    let mut lower = Vec::with_capacity(profile.m());
    let mut upper = Vec::with_capacity(profile.m());
    for c in 0..profile.m() {
        let mut ranks: Vec<usize> = (0..n).map(|v| profile.rank(c, v)).collect();
        ranks.sort_unstable();
        lower.push(ranks[(n - 1) / 2] as f64);
        upper.push(ranks[n / 2] as f64);
    }
    DeepestBox { lower, upper }
}

/// Candidates rankable first by some deepest point.
///
/// For a single point these are the coordinatewise minimizers. For a box,
/// candidate `c` can be first iff its lowest achievable score does not
/// exceed the highest forced score of every rival, i.e.
/// `lower[c] <= min over c' of upper[c']`.
pub fn continuous_winner_set(deepest: &ContinuousDeepest) -> BTreeSet<usize> {
    match deepest {
        ContinuousDeepest::Point(point) => {
            let best = point
                .coords
                .iter()
                .copied()
                .fold(f64::INFINITY, f64::min);
            point
                .coords
                .iter()
                .enumerate()
                .filter(|(_, &x)| x == best)
                .map(|(c, _)| c)
                .collect()
        }
        ContinuousDeepest::Box(b) => {
            let threshold = b.upper.iter().copied().fold(f64::INFINITY, f64::min);
            b.lower
                .iter()
                .enumerate()
                .filter(|(_, &lo)| lo <= threshold)
                .map(|(c, _)| c)
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cases;

    #[test]
    fn l2_deepest_is_columnwise_means() {
        let p = cases::bucklin_footrule_gap();
        let point = l2_deepest(&p);
        assert_eq!(point.coords, vec![13.0 / 5.0, 10.0 / 5.0, 13.0 / 5.0, 14.0 / 5.0]);
        let winners = continuous_winner_set(&ContinuousDeepest::Point(point));
        assert_eq!(winners.into_iter().collect::<Vec<_>>(), [1]);
    }

    #[test]
    fn l1_box_spans_candidate_medians() {
        let p = cases::median_box();
        let b = l1_deepest_box(&p);
        assert_eq!(b.lower, vec![1.0, 1.0, 2.0]);
        assert_eq!(b.upper, vec![2.0, 3.0, 3.0]);
        let winners = continuous_winner_set(&ContinuousDeepest::Box(b));
        assert_eq!(winners.into_iter().collect::<Vec<_>>(), [0, 1, 2]);

        let l2 = l2_deepest(&p);
        assert_eq!(l2.coords, vec![1.5, 2.0, 2.5]);
        let winners = continuous_winner_set(&ContinuousDeepest::Point(l2));
        assert_eq!(winners.into_iter().collect::<Vec<_>>(), [0]);
    }

    #[test]
    fn odd_voter_count_degenerates_the_box() {
        let p = cases::kendall_power_flip();
        let b = l1_deepest_box(&p);
        assert_eq!(b.lower, b.upper);
        assert_eq!(b.lower, vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn depth_peaks_at_the_deepest_point() {
        let p = cases::median_box();
        let best = EvaluationPoint {
            coords: vec![1.5, 2.0, 2.5],
        };
        let at_best = lq_depth(&best, &p, 2.0).unwrap();
        let elsewhere = lq_depth(
            &EvaluationPoint {
                coords: vec![3.0, 1.0, 1.0],
            },
            &p,
            2.0,
        )
        .unwrap();
        assert!(at_best > elsewhere);
        assert!(at_best > 0.0 && at_best < 1.0);
    }

    #[test]
    fn max_order_depth_and_validation() {
        let p = cases::median_box();
        let x = EvaluationPoint {
            coords: vec![2.0, 2.0, 2.0],
        };
        let d = lq_depth(&x, &p, f64::INFINITY).unwrap();
        assert_eq!(d, 1.0 / 2.0);
        assert!(matches!(
            lq_depth(&EvaluationPoint { coords: vec![1.0] }, &p, 2.0),
            Err(ContinuousError::DimensionMismatch { .. })
        ));
        assert!(matches!(
            lq_depth(&x, &p, 0.5),
            Err(ContinuousError::InvalidOrder)
        ));
    }
}
