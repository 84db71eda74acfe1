//! Depth of a ranking in a profile and the deepest (consensus) rankings.
//!
//! For a distance `d` and exponent `p >= 1` the functional of a ranking `s`
//! against a profile with voters `s_1..s_n` is
//!
//! ```text
//! U(s) = (1/n) * sum over v of d(s, s_v)^p
//! ```
//!
//! Depth is `max_pairwise_distance^p - U(s)`, so deepest rankings are
//! exactly the minimizers of `U`. [`deepest_set`] enumerates all `m!`
//! rankings and returns every minimizer; winner sets collect the top
//! candidates of the minimizers and are never tie-broken.
//!
//! Totals are computed in integer arithmetic whenever the distance and `p`
//! allow it: counting distances with integer `p`, and Minkowski orders `q`
//! with `p` an integer multiple of `q`, where `d^p` is an integer power of
//! the displacement power sum. Everything else runs in floating point with
//! a relative tie tolerance of [`TIE_TOLERANCE`]; such results carry
//! `exact = false`. Float per-voter terms are summed in sorted order so a
//! total never depends on voter numbering.

use crate::metrics::{self, Distance, MetricError, WeightMatrix};
use crate::ranking::{for_each_ranking, Profile, Ranking, RankingError, DEFAULT_ENUMERATION_CAP};
use std::cmp::Ordering;
use std::collections::BTreeSet;
use thiserror::Error;

/// Relative tolerance under which two float functional values tie.
pub const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FrechetError {
    #[error("exponent p must be a finite number at least 1, got {p}")]
    InvalidExponent { p: f64 },
    #[error("deepest search over {m} candidates exceeds the cap of {cap}")]
    CapExceeded { m: usize, cap: usize },
    #[error("signed distance values require an integer exponent, got p={p}")]
    UndefinedPower { p: f64 },
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error(transparent)]
    Ranking(#[from] RankingError),
}

/// Distance and exponent defining one deepest-voting rule.
#[derive(Debug, Clone, PartialEq)]
pub struct FrechetParams {
    pub distance: Distance,
    pub p: f64,
}

impl FrechetParams {
    pub fn new(distance: Distance, p: f64) -> Result<Self, FrechetError> {
        if !p.is_finite() || p < 1.0 {
            return Err(FrechetError::InvalidExponent { p });
        }
        Ok(FrechetParams { distance, p })
    }

    /// Identifier naming the induced voting rule, e.g. `deepest(kendall, p=1)`.
    pub fn rule_label(&self) -> String {
        format!("deepest({}, p={})", self.distance.label(), self.p)
    }
}

/// All minimizers of the functional, their value, and the election outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct DeepestResult {
    /// Deepest rankings in lexicographic rank-vector order.
    pub deepest: Vec<Ranking>,
    /// Candidates ranked first by at least one deepest ranking.
    pub winners: BTreeSet<usize>,
    /// Minimum functional value.
    pub u_min: f64,
    /// Depth of the deepest rankings, `diameter^p - u_min`.
    pub depth_max: f64,
    pub unique_winner: bool,
    /// True when totals were compared in integer arithmetic.
    pub exact: bool,
}

/// Three-way comparison of functional values with its arithmetic class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FunctionalComparison {
    pub ordering: Ordering,
    pub exact: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kernel {
    Kendall,
    Hamming,
    Cayley,
    MaxGap,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Plan {
    /// `sum_v kernel(s, s_v)^exp`, exact.
    Count { kernel: Kernel, exp: u32 },
    /// `sum_v (sum_c |s(c)-s_v(c)|^q)^exp`, exact; requires `p = exp * q`.
    PowSum { q: u32, exp: u32 },
    Float,
}

fn plan_for(distance: &Distance, p: f64) -> Plan {
    let p_int = metrics::integer_order(p);
    let count = |kernel| {
        p_int
            .map(|exp| Plan::Count { kernel, exp })
            .unwrap_or(Plan::Float)
    };
    match distance {
        Distance::Kendall => count(Kernel::Kendall),
        Distance::Hamming => count(Kernel::Hamming),
        Distance::Cayley => count(Kernel::Cayley),
        Distance::Minkowski { q } if q.is_infinite() => count(Kernel::MaxGap),
        Distance::Minkowski { q } => match (metrics::integer_order(*q), p_int) {
            (Some(qi), Some(pi)) if pi % qi == 0 => Plan::PowSum {
                q: qi,
                exp: pi / qi,
            },
            _ => Plan::Float,
        },
        Distance::WeightedHamming { .. } | Distance::WeightedMinkowski { .. } => Plan::Float,
    }
}

/// Per-profile evaluation state: voter inverses, power tables, scratch
/// buffers. One instance serves every ranking probed against the profile.
struct Evaluator<'a> {
    profile: &'a Profile,
    distance: &'a Distance,
    p: f64,
    plan: Plan,
    /// Inverse of each voter column, candidates by rank, 1-based.
    col_invs: Vec<Vec<usize>>,
    /// `d^q` per displacement, for Minkowski float and weighted Minkowski.
    pow_q: Vec<f64>,
    /// Exponent applied to a displacement power sum on the float path.
    p_over_q: f64,
    /// `k^p` per count value, for counting kernels on the float path.
    count_pow: Vec<f64>,
    counts: Vec<u32>,
    terms: Vec<f64>,
    sigma_inv: Vec<usize>,
}

impl<'a> Evaluator<'a> {
    fn new(profile: &'a Profile, params: &'a FrechetParams) -> Result<Self, FrechetError> {
        if !params.p.is_finite() || params.p < 1.0 {
            return Err(FrechetError::InvalidExponent { p: params.p });
        }
        let m = profile.m();
        params.distance.validate_for(m)?;
        let plan = plan_for(&params.distance, params.p);
        let col_invs = match params.distance {
            Distance::Cayley => profile
                .columns()
                .iter()
                .map(|col| col.inverse().ranks().to_vec())
                .collect(),
            _ => Vec::new(),
        };
        let (pow_q, p_over_q) = match &params.distance {
            Distance::Minkowski { q } if q.is_finite() => {
                (metrics::displacement_powers(m, *q), params.p / *q)
            }
            Distance::WeightedMinkowski { q, .. } => {
                (metrics::displacement_powers(m, *q), params.p / *q)
            }
            _ => (Vec::new(), 0.0),
        };
        let count_pow = if plan == Plan::Float {
            let max_count = match params.distance {
                Distance::Kendall => m * (m - 1) / 2,
                Distance::Hamming => m,
                Distance::Cayley | Distance::Minkowski { .. } => m.saturating_sub(1),
                _ => 0,
            };
            (0..=max_count).map(|k| (k as f64).powf(params.p)).collect()
        } else {
            Vec::new()
        };
        Ok(Evaluator {
            profile,
            distance: &params.distance,
            p: params.p,
            plan,
            col_invs,
            pow_q,
            p_over_q,
            count_pow,
            counts: vec![0; m],
            terms: vec![0.0; profile.n()],
            sigma_inv: vec![0; m],
        })
    }

    fn kernel_count(&self, kernel: Kernel, sigma: &[usize], v: usize) -> u64 {
        let col = self.profile.column(v).ranks();
        match kernel {
            Kernel::Kendall => metrics::kendall_count(sigma, col),
            Kernel::Hamming => metrics::hamming_count(sigma, col),
            Kernel::Cayley => metrics::cayley_count_from_inv(sigma, &self.col_invs[v]),
            Kernel::MaxGap => metrics::max_abs_diff(sigma, col),
        }
    }

    /// Integer total `sum_v d(sigma, s_v)^p`, None on overflow or when the
    /// plan is float.
    fn exact_total(&mut self, sigma: &[usize]) -> Option<i128> {
        let mut acc: i128 = 0;
        for v in 0..self.profile.n() {
            let term = match self.plan {
                Plan::Count { kernel, exp } => {
                    (self.kernel_count(kernel, sigma, v) as i128).checked_pow(exp)?
                }
                Plan::PowSum { q, exp } => {
                    metrics::abs_pow_sum(sigma, self.profile.column(v).ranks(), q)?
                        .checked_pow(exp)?
                }
                Plan::Float => return None,
            };
            acc = acc.checked_add(term)?;
        }
        Some(acc)
    }

    /// Float total; NaN signals a signed base under a fractional exponent.
    fn float_total(&mut self, sigma: &[usize]) -> f64 {
        let needs_inverse = matches!(
            self.distance,
            Distance::WeightedHamming { .. } | Distance::WeightedMinkowski { .. }
        );
        if needs_inverse {
            for (c, &r) in sigma.iter().enumerate() {
                self.sigma_inv[r - 1] = c + 1;
            }
        }
        for v in 0..self.profile.n() {
            let col = self.profile.column(v).ranks();
            self.terms[v] = match self.distance {
                Distance::Kendall => self.count_pow[metrics::kendall_count(sigma, col) as usize],
                Distance::Hamming => self.count_pow[metrics::hamming_count(sigma, col) as usize],
                Distance::Cayley => {
                    self.count_pow[metrics::cayley_count_from_inv(sigma, &self.col_invs[v]) as usize]
                }
                Distance::Minkowski { q } if q.is_infinite() => {
                    self.count_pow[metrics::max_abs_diff(sigma, col) as usize]
                }
                Distance::Minkowski { .. } => {
                    metrics::abs_pow_sum_f64(sigma, col, &self.pow_q, &mut self.counts)
                        .powf(self.p_over_q)
                }
                Distance::WeightedHamming { weights } => {
                    metrics::weighted_hamming_value(&self.sigma_inv, col, weights).powf(self.p)
                }
                Distance::WeightedMinkowski { weights, .. } => {
                    metrics::weighted_pow_sum(&self.sigma_inv, col, weights, &self.pow_q)
                        .powf(self.p_over_q)
                }
            };
        }
        // Sorted accumulation keeps the total independent of voter order.
        self.terms.sort_unstable_by(f64::total_cmp);
        self.terms.iter().sum()
    }
}

fn weights_of(distance: &Distance) -> Option<&WeightMatrix> {
    match distance {
        Distance::WeightedHamming { weights } => Some(weights),
        Distance::WeightedMinkowski { weights, .. } => Some(weights),
        _ => None,
    }
}

/// Rejects parameter combinations whose per-voter term `d^p` is undefined:
/// a possibly negative distance raised to a fractional exponent.
fn check_power_defined(params: &FrechetParams) -> Result<(), FrechetError> {
    let signed = weights_of(&params.distance).is_some_and(|w| w.has_negative());
    if signed && metrics::integer_order(params.p).is_none() {
        return Err(FrechetError::UndefinedPower { p: params.p });
    }
    Ok(())
}

/// Mean functional value `U(sigma)` of one ranking against the profile.
pub fn frechet_functional(
    sigma: &Ranking,
    profile: &Profile,
    params: &FrechetParams,
) -> Result<f64, FrechetError> {
    if sigma.m() != profile.m() {
        return Err(MetricError::DimensionMismatch {
            expected: profile.m(),
            got: sigma.m(),
        }
        .into());
    }
    check_power_defined(params)?;
    let mut ev = Evaluator::new(profile, params)?;
    let total = match ev.exact_total(sigma.ranks()) {
        Some(t) => t as f64,
        None => ev.float_total(sigma.ranks()),
    };
    Ok(total / profile.n() as f64)
}

/// Depth of one ranking: `diameter^p - U(sigma)`.
pub fn depth_value(
    sigma: &Ranking,
    profile: &Profile,
    params: &FrechetParams,
) -> Result<f64, FrechetError> {
    let u = frechet_functional(sigma, profile, params)?;
    Ok(diameter_power(profile.m(), params, DEFAULT_ENUMERATION_CAP)? - u)
}

/// `diameter^p`, taken over the same integer path as the totals whenever
/// the plan allows it, so reported depths carry no rounding noise.
fn diameter_power(m: usize, params: &FrechetParams, cap: usize) -> Result<f64, FrechetError> {
    let powed = |base: i128, exp: u32| base.checked_pow(exp).map(|v| v as f64);
    match plan_for(&params.distance, params.p) {
        Plan::Count { kernel, exp } => {
            let count = match kernel {
                Kernel::Kendall => (m * (m - 1) / 2) as i128,
                Kernel::Hamming => {
                    if m < 2 {
                        0
                    } else {
                        m as i128
                    }
                }
                Kernel::Cayley | Kernel::MaxGap => (m - 1) as i128,
            };
            if let Some(v) = powed(count, exp) {
                return Ok(v);
            }
        }
        Plan::PowSum { q, exp } => {
            // The reversal maximizes the displacement sum, and any power of
            // the distance is monotone in it.
            let id = Ranking::identity(m);
            let rev = Ranking::from_ranks((1..=m).rev().collect())?;
            if let Some(v) =
                metrics::abs_pow_sum(id.ranks(), rev.ranks(), q).and_then(|sum| powed(sum, exp))
            {
                return Ok(v);
            }
        }
        Plan::Float => {}
    }
    Ok(params.distance.diameter_capped(m, cap)?.powf(params.p))
}

/// Orders `U(a)` against `U(b)`, exactly when the plan allows it and with
/// the relative tie tolerance otherwise.
pub fn compare_functional(
    a: &Ranking,
    b: &Ranking,
    profile: &Profile,
    params: &FrechetParams,
) -> Result<FunctionalComparison, FrechetError> {
    for s in [a, b] {
        if s.m() != profile.m() {
            return Err(MetricError::DimensionMismatch {
                expected: profile.m(),
                got: s.m(),
            }
            .into());
        }
    }
    check_power_defined(params)?;
    let mut ev = Evaluator::new(profile, params)?;
    if let (Some(ta), Some(tb)) = (ev.exact_total(a.ranks()), ev.exact_total(b.ranks())) {
        return Ok(FunctionalComparison {
            ordering: ta.cmp(&tb),
            exact: true,
        });
    }
    let ta = ev.float_total(a.ranks());
    let tb = ev.float_total(b.ranks());
    if ta.is_nan() || tb.is_nan() {
        return Err(FrechetError::UndefinedPower { p: params.p });
    }
    let ordering = if (ta - tb).abs() <= TIE_TOLERANCE * ta.abs().max(tb.abs()) {
        Ordering::Equal
    } else {
        ta.partial_cmp(&tb).expect("totals are not NaN")
    };
    Ok(FunctionalComparison {
        ordering,
        exact: false,
    })
}

/// Deepest rankings of the profile under the default enumeration cap.
pub fn deepest_set(profile: &Profile, params: &FrechetParams) -> Result<DeepestResult, FrechetError> {
    deepest_set_capped(profile, params, DEFAULT_ENUMERATION_CAP)
}

/// Deepest rankings with an explicit enumeration cap.
pub fn deepest_set_capped(
    profile: &Profile,
    params: &FrechetParams,
    cap: usize,
) -> Result<DeepestResult, FrechetError> {
    let m = profile.m();
    if m > cap {
        return Err(FrechetError::CapExceeded { m, cap });
    }
    check_power_defined(params)?;
    let mut ev = Evaluator::new(profile, params)?;

    if ev.plan != Plan::Float {
        if let Some((total, deepest)) = exact_search(&mut ev, m) {
            return assemble(profile, params, deepest, total as f64, true, cap);
        }
    }

    // Two float passes: find the minimum, then collect everything within
    // the relative tie tolerance of it. Identical arithmetic both times.
    let mut min = f64::INFINITY;
    let mut saw_nan = false;
    for_each_ranking(m, |sigma| {
        let t = ev.float_total(sigma);
        saw_nan |= t.is_nan();
        if t < min {
            min = t;
        }
    });
    if saw_nan {
        return Err(FrechetError::UndefinedPower { p: params.p });
    }
    let mut deepest = Vec::new();
    for_each_ranking(m, |sigma| {
        let t = ev.float_total(sigma);
        if t - min <= TIE_TOLERANCE * t.abs().max(min.abs()) {
            deepest.push(Ranking::from_ranks(sigma.to_vec()).expect("enumerated ranking"));
        }
    });
    assemble(profile, params, deepest, min, false, cap)
}

fn exact_search(ev: &mut Evaluator, m: usize) -> Option<(i128, Vec<Ranking>)> {
    let mut best: Option<i128> = None;
    let mut deepest: Vec<Ranking> = Vec::new();
    let mut overflow = false;
    for_each_ranking(m, |sigma| {
        if overflow {
            return;
        }
        match ev.exact_total(sigma) {
            None => overflow = true,
            Some(t) => {
                if best.is_none() || t < best.unwrap() {
                    best = Some(t);
                    deepest.clear();
                }
                if t == best.unwrap() {
                    deepest.push(Ranking::from_ranks(sigma.to_vec()).expect("enumerated ranking"));
                }
            }
        }
    });
    if overflow {
        None
    } else {
        Some((best.expect("at least one ranking"), deepest))
    }
}

fn assemble(
    profile: &Profile,
    params: &FrechetParams,
    deepest: Vec<Ranking>,
    min_total: f64,
    exact: bool,
    cap: usize,
) -> Result<DeepestResult, FrechetError> {
    let winners: BTreeSet<usize> = deepest.iter().map(|s| s.top_candidate()).collect();
    let u_min = min_total / profile.n() as f64;
    let depth_max = diameter_power(profile.m(), params, cap)? - u_min;
    Ok(DeepestResult {
        unique_winner: winners.len() == 1,
        deepest,
        winners,
        u_min,
        depth_max,
        exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cases;

    fn r(ranks: &[usize]) -> Ranking {
        Ranking::from_ranks(ranks.to_vec()).unwrap()
    }

    fn params(distance: Distance, p: f64) -> FrechetParams {
        FrechetParams::new(distance, p).unwrap()
    }

    fn winners(result: &DeepestResult) -> Vec<usize> {
        result.winners.iter().copied().collect()
    }

    #[test]
    fn kendall_exponent_flip() {
        let p = cases::kendall_power_flip();
        let k1 = params(Distance::Kendall, 1.0);
        assert_eq!(frechet_functional(&r(&[1, 2, 3]), &p, &k1).unwrap(), 4.0 / 5.0);
        assert_eq!(frechet_functional(&r(&[2, 1, 3]), &p, &k1).unwrap(), 1.0);
        let d1 = deepest_set(&p, &k1).unwrap();
        assert_eq!(d1.deepest, vec![r(&[1, 2, 3])]);
        assert_eq!(winners(&d1), [0]);
        assert!(d1.exact && d1.unique_winner);
        assert_eq!(d1.u_min, 4.0 / 5.0);

        let k2 = params(Distance::Kendall, 2.0);
        let d2 = deepest_set(&p, &k2).unwrap();
        assert_eq!(d2.deepest, vec![r(&[2, 1, 3])]);
        assert_eq!(winners(&d2), [1]);
        assert_eq!(d2.u_min, 7.0 / 5.0);
    }

    #[test]
    fn comparisons_report_exactness() {
        let p = cases::kendall_power_flip();
        let k1 = params(Distance::Kendall, 1.0);
        let cmp = compare_functional(&r(&[1, 2, 3]), &r(&[2, 1, 3]), &p, &k1).unwrap();
        assert_eq!(cmp.ordering, Ordering::Less);
        assert!(cmp.exact);
        let k2 = params(Distance::Kendall, 2.0);
        let cmp = compare_functional(&r(&[1, 2, 3]), &r(&[2, 1, 3]), &p, &k2).unwrap();
        assert_eq!(cmp.ordering, Ordering::Greater);
        assert!(cmp.exact);

        let g = cases::condorcet_rule_gap();
        let mk2 = params(Distance::minkowski(2.0).unwrap(), 1.0);
        let cmp = compare_functional(&r(&[2, 1, 3]), &r(&[1, 2, 3]), &g, &mk2).unwrap();
        assert_eq!(cmp.ordering, Ordering::Less);
        assert!(!cmp.exact);
        let cmp = compare_functional(&r(&[1, 2, 3]), &r(&[1, 2, 3]), &g, &mk2).unwrap();
        assert_eq!(cmp.ordering, Ordering::Equal);
    }

    #[test]
    fn condorcet_gap_winners() {
        let g = cases::condorcet_rule_gap();
        let hamming = deepest_set(&g, &params(Distance::Hamming, 1.0)).unwrap();
        assert_eq!(winners(&hamming), [1]);
        assert_eq!(hamming.u_min, 10.0 / 7.0);
        let cayley = deepest_set(&g, &params(Distance::Cayley, 1.0)).unwrap();
        assert_eq!(winners(&cayley), [1]);
        assert_eq!(cayley.u_min, 5.0 / 7.0);
        let footrule = deepest_set(&g, &params(Distance::minkowski(1.0).unwrap(), 1.0)).unwrap();
        assert_eq!(winners(&footrule), [1]);
        assert_eq!(footrule.u_min, 2.0);
        let spearman = deepest_set(&g, &params(Distance::minkowski(2.0).unwrap(), 1.0)).unwrap();
        assert_eq!(winners(&spearman), [1]);
        assert!(!spearman.exact);
    }

    #[test]
    fn boundary_weights_read_off_first_and_last_places() {
        let g = cases::condorcet_rule_gap();
        let plu = Distance::WeightedHamming {
            weights: WeightMatrix::plurality_weights(3),
        };
        let d = deepest_set(&g, &params(plu, 1.0)).unwrap();
        assert_eq!(d.deepest, vec![r(&[2, 1, 3]), r(&[3, 1, 2])]);
        assert_eq!(winners(&d), [1]);

        let anti = Distance::WeightedHamming {
            weights: WeightMatrix::antiplurality_weights(3),
        };
        let d = deepest_set(&g, &params(anti, 1.0)).unwrap();
        assert_eq!(d.deepest, vec![r(&[3, 1, 2]), r(&[3, 2, 1])]);
        let bottoms: BTreeSet<usize> = d.deepest.iter().map(|s| s.bottom_candidate()).collect();
        assert_eq!(bottoms.into_iter().collect::<Vec<_>>(), [0]);
    }

    #[test]
    fn footrule_prefers_global_consensus_over_bucklin() {
        let p = cases::bucklin_footrule_gap();
        for exp in [1.0, 2.0] {
            let d = deepest_set(&p, &params(Distance::minkowski(1.0).unwrap(), exp)).unwrap();
            assert_eq!(winners(&d), [0], "p={exp}");
            assert!(d.deepest.contains(&r(&[1, 2, 3, 4])));
            assert!(d.exact);
        }
    }

    #[test]
    fn max_displacement_keeps_unanimous_top_out_of_first_place() {
        let p = cases::maxnorm_unanimity_gap();
        let inf = Distance::minkowski(f64::INFINITY).unwrap();
        let d1 = deepest_set(&p, &params(inf.clone(), 1.0)).unwrap();
        assert_eq!(
            d1.deepest,
            vec![
                r(&[1, 4, 6, 3, 5, 2]),
                r(&[1, 5, 6, 3, 4, 2]),
                r(&[2, 5, 6, 3, 4, 1]),
            ]
        );
        assert_eq!(winners(&d1), [0, 5]);
        assert!(!d1.unique_winner && d1.exact);
        for exp in [2.0, 3.0] {
            let d = deepest_set(&p, &params(inf.clone(), exp)).unwrap();
            assert_eq!(
                d.deepest,
                vec![r(&[1, 5, 6, 3, 4, 2]), r(&[2, 5, 6, 3, 4, 1])],
                "p={exp}"
            );
            assert_eq!(winners(&d), [0, 5]);
        }
    }

    #[test]
    fn unanimous_profile_has_zero_functional() {
        let col = r(&[2, 1, 3]);
        let p = Profile::new(vec![col.clone(), col.clone(), col.clone()]).unwrap();
        let d = deepest_set(&p, &params(Distance::Kendall, 1.0)).unwrap();
        assert_eq!(d.deepest, vec![col]);
        assert_eq!(d.u_min, 0.0);
        assert_eq!(d.depth_max, 3.0);
    }

    #[test]
    fn exactness_by_parameter_class() {
        let p = cases::condorcet_rule_gap();
        let cases: &[(Distance, f64, bool)] = &[
            (Distance::Kendall, 1.0, true),
            (Distance::Kendall, 1.5, false),
            (Distance::minkowski(2.0).unwrap(), 2.0, true),
            (Distance::minkowski(2.0).unwrap(), 4.0, true),
            (Distance::minkowski(2.0).unwrap(), 3.0, false),
            (Distance::minkowski(3.0).unwrap(), 3.0, true),
            (Distance::minkowski(f64::INFINITY).unwrap(), 2.0, true),
            (Distance::minkowski(2.5).unwrap(), 2.5, false),
        ];
        for (distance, exp, expect) in cases {
            let d = deepest_set(&p, &params(distance.clone(), *exp)).unwrap();
            assert_eq!(d.exact, *expect, "{} p={exp}", distance.label());
        }
    }

    #[test]
    fn signed_weights_need_integer_exponents() {
        let g = cases::condorcet_rule_gap();
        let anti = Distance::WeightedHamming {
            weights: WeightMatrix::antiplurality_weights(3),
        };
        let err = deepest_set(&g, &FrechetParams::new(anti, 1.5).unwrap());
        assert!(matches!(err, Err(FrechetError::UndefinedPower { .. })));
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(
            FrechetParams::new(Distance::Kendall, 0.5),
            Err(FrechetError::InvalidExponent { .. })
        ));
        assert!(matches!(
            FrechetParams::new(Distance::Kendall, f64::NAN),
            Err(FrechetError::InvalidExponent { .. })
        ));
        let wide = Profile::new(vec![Ranking::identity(10)]).unwrap();
        assert!(matches!(
            deepest_set(&wide, &params(Distance::Kendall, 1.0)),
            Err(FrechetError::CapExceeded { m: 10, cap: 9 })
        ));
    }

    #[test]
    fn depth_is_diameter_power_minus_functional() {
        let p = cases::kendall_power_flip();
        let k1 = params(Distance::Kendall, 1.0);
        let depth = depth_value(&r(&[1, 2, 3]), &p, &k1).unwrap();
        assert_eq!(depth, 3.0 - 0.8);
    }
}
