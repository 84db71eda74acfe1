//! Distances and dissimilarities between rankings of a common candidate set.
//!
//! Unweighted kinds: Kendall (discordant pairs), Hamming (mismatched
//! positions), Cayley (transpositions needed to transform one ranking into
//! the other), and the Minkowski family over rank displacements with order
//! `q` in `[1, inf]` (`q = 1` is the footrule, `q = 2` the Spearman
//! displacement, `q = inf` the largest displacement).
//!
//! Weighted kinds score each position by a rank-pair weight `w[r][r']`.
//! Weighted Hamming admits signed weights and is then only a dissimilarity;
//! weighted Minkowski requires nonnegative weights because they sit under
//! the root. Strictly positive weights still satisfy a relaxed triangle
//! inequality with the constant from [`relaxation_constant`].
//!
//! Counting distances and integer power sums are computed in integer
//! arithmetic; roots are taken only at the end. Float accumulations iterate
//! in a canonical order (by displacement size or by rank) so a result never
//! depends on candidate or voter numbering.

use crate::ranking::{for_each_ranking, Ranking, DEFAULT_ENUMERATION_CAP};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MetricError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("order q must be at least 1, got {q}")]
    InvalidOrder { q: f64 },
    #[error("weighted Minkowski requires nonnegative weights under the root")]
    NegativeWeightUnderRoot,
    #[error("operation requires strictly positive weights")]
    NonPositiveWeight,
    #[error("weight matrix must be square and nonempty: row {row} has length {len}, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("weight entries must be finite")]
    NonFiniteWeight,
    #[error("diameter of {m} candidates needs enumeration past the cap of {cap}")]
    CapExceeded { m: usize, cap: usize },
}

/// A distance value together with an exactness marker. `exact` is true when
/// the value came off the integer path (counts, integer power sums, or their
/// trivial roots) with no floating point rounding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistanceValue {
    pub value: f64,
    pub exact: bool,
}

/// Square matrix of rank-pair weights, `m x m`, indexed by 1-based ranks.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightMatrix {
    m: usize,
    w: Vec<f64>,
    symmetric: bool,
    has_negative: bool,
}

impl WeightMatrix {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self, MetricError> {
        let m = rows.len();
        if m == 0 {
            return Err(MetricError::NotSquare {
                row: 0,
                len: 0,
                expected: 1,
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != m {
                return Err(MetricError::NotSquare {
                    row: i,
                    len: row.len(),
                    expected: m,
                });
            }
        }
        let w: Vec<f64> = rows.into_iter().flatten().collect();
        if w.iter().any(|x| !x.is_finite()) {
            return Err(MetricError::NonFiniteWeight);
        }
        let symmetric = (0..m).all(|r| (0..m).all(|s| w[r * m + s] == w[s * m + r]));
        let has_negative = w.iter().any(|&x| x < 0.0);
        Ok(WeightMatrix {
            m,
            w,
            symmetric,
            has_negative,
        })
    }

    /// Weights selecting the first place: `w[r][r'] = 1` when `r = 1` or
    /// `r' = 1`, else 0. Under these weights the weighted Hamming distance is
    /// 2 exactly when two rankings put different candidates first, which
    /// makes the induced election plurality.
    pub fn plurality_weights(m: usize) -> WeightMatrix {
        Self::boundary(m, 1, 1.0)
    }

    /// Weights selecting the last place with weight -1: the weighted Hamming
    /// distance is -2 exactly when two rankings put different candidates
    /// last, and minimizing its mean rewards agreement on the bottom. The
    /// induced election is antiplurality, read from the last position.
    pub fn antiplurality_weights(m: usize) -> WeightMatrix {
        Self::boundary(m, m, -1.0)
    }

    fn boundary(m: usize, rank: usize, value: f64) -> WeightMatrix {
        assert!(m >= 1 && rank >= 1 && rank <= m);
        let mut w = vec![0.0; m * m];
        for r in 0..m {
            w[r * m + (rank - 1)] = value;
            w[(rank - 1) * m + r] = value;
        }
        WeightMatrix {
            m,
            w,
            symmetric: true,
            has_negative: value < 0.0,
        }
    }

    /// Parses a header-free square CSV of numbers.
    pub fn from_csv_str(text: &str) -> Result<Self, MetricError> {
        let mut rows = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split(',')
                .map(|cell| cell.trim().parse::<f64>().map_err(|_| MetricError::NonFiniteWeight))
                .collect::<Result<Vec<f64>, _>>()?;
            rows.push(row);
        }
        WeightMatrix::new(rows)
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    /// Weight for the 1-based rank pair `(r, rp)`.
    pub fn get(&self, r: usize, rp: usize) -> f64 {
        self.w[(r - 1) * self.m + (rp - 1)]
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn has_negative(&self) -> bool {
        self.has_negative
    }
}

/// A distance specification, independent of any particular profile.
#[derive(Debug, Clone, PartialEq)]
pub enum Distance {
    Kendall,
    Hamming,
    Cayley,
    /// Rank displacement with order `q >= 1`; `f64::INFINITY` selects the
    /// maximum displacement.
    Minkowski { q: f64 },
    WeightedHamming { weights: WeightMatrix },
    WeightedMinkowski { q: f64, weights: WeightMatrix },
}

impl Distance {
    pub fn minkowski(q: f64) -> Result<Distance, MetricError> {
        if q.is_nan() || q < 1.0 {
            return Err(MetricError::InvalidOrder { q });
        }
        Ok(Distance::Minkowski { q })
    }

    pub fn weighted_minkowski(q: f64, weights: WeightMatrix) -> Result<Distance, MetricError> {
        if !q.is_finite() || q < 1.0 {
            return Err(MetricError::InvalidOrder { q });
        }
        if weights.has_negative() {
            return Err(MetricError::NegativeWeightUnderRoot);
        }
        Ok(Distance::WeightedMinkowski { q, weights })
    }

    /// Short self-describing name for reports and rule identifiers.
    pub fn label(&self) -> String {
        match self {
            Distance::Kendall => "kendall".into(),
            Distance::Hamming => "hamming".into(),
            Distance::Cayley => "cayley".into(),
            Distance::Minkowski { q } if q.is_infinite() => "minkowski(q=inf)".into(),
            Distance::Minkowski { q } => format!("minkowski(q={q})"),
            Distance::WeightedHamming { .. } => "weighted-hamming".into(),
            Distance::WeightedMinkowski { q, .. } => format!("weighted-minkowski(q={q})"),
        }
    }

    /// Checks the specification against a candidate count.
    pub fn validate_for(&self, m: usize) -> Result<(), MetricError> {
        match self {
            Distance::Kendall | Distance::Hamming | Distance::Cayley => Ok(()),
            Distance::Minkowski { q } => {
                if q.is_nan() || *q < 1.0 {
                    Err(MetricError::InvalidOrder { q: *q })
                } else {
                    Ok(())
                }
            }
            Distance::WeightedHamming { weights } => {
                if weights.dim() != m {
                    Err(MetricError::DimensionMismatch {
                        expected: m,
                        got: weights.dim(),
                    })
                } else {
                    Ok(())
                }
            }
            Distance::WeightedMinkowski { q, weights } => {
                if !q.is_finite() || *q < 1.0 {
                    return Err(MetricError::InvalidOrder { q: *q });
                }
                if weights.has_negative() {
                    return Err(MetricError::NegativeWeightUnderRoot);
                }
                if weights.dim() != m {
                    return Err(MetricError::DimensionMismatch {
                        expected: m,
                        got: weights.dim(),
                    });
                }
                Ok(())
            }
        }
    }

    /// Evaluates the distance between two rankings.
    pub fn evaluate(&self, a: &Ranking, b: &Ranking) -> Result<DistanceValue, MetricError> {
        check_dims(a, b)?;
        self.validate_for(a.m())?;
        let value = match self {
            Distance::Kendall => {
                return Ok(exact_value(kendall_count(a.ranks(), b.ranks()) as f64));
            }
            Distance::Hamming => {
                return Ok(exact_value(hamming_count(a.ranks(), b.ranks()) as f64));
            }
            Distance::Cayley => {
                return Ok(exact_value(cayley_count(a.ranks(), b.ranks()) as f64));
            }
            Distance::Minkowski { q } => {
                let d = minkowski_value(a.ranks(), b.ranks(), *q);
                let exact = *q == 1.0 || q.is_infinite() || d == 0.0;
                return Ok(DistanceValue { value: d, exact });
            }
            Distance::WeightedHamming { weights } => {
                weighted_hamming_value(a.inverse().ranks(), b.ranks(), weights)
            }
            Distance::WeightedMinkowski { q, weights } => {
                let pow = displacement_powers(a.m(), *q);
                let sum = weighted_pow_sum(a.inverse().ranks(), b.ranks(), weights, &pow);
                sum.powf(1.0 / q)
            }
        };
        Ok(DistanceValue {
            value,
            exact: value == 0.0,
        })
    }

    /// Largest distance between any two rankings of `m` candidates, under
    /// the default enumeration cap for kinds without a closed form.
    pub fn diameter(&self, m: usize) -> Result<f64, MetricError> {
        self.diameter_capped(m, DEFAULT_ENUMERATION_CAP)
    }

    pub fn diameter_capped(&self, m: usize, cap: usize) -> Result<f64, MetricError> {
        self.validate_for(m)?;
        match self {
            Distance::Kendall => Ok((m * (m - 1) / 2) as f64),
            Distance::Hamming => Ok(if m < 2 { 0.0 } else { m as f64 }),
            Distance::Cayley => Ok((m - 1) as f64),
            // Every kind here is invariant under composing both arguments
            // with one relabeling (weights index ranks, not candidates), so
            // the pairwise maximum is attained against the identity.
            Distance::Minkowski { .. }
            | Distance::WeightedHamming { .. }
            | Distance::WeightedMinkowski { .. } => {
                if m > cap {
                    return Err(MetricError::CapExceeded { m, cap });
                }
                let id = Ranking::identity(m);
                let mut max = f64::NEG_INFINITY;
                let mut err = None;
                for_each_ranking(m, |ranks| {
                    if err.is_some() {
                        return;
                    }
                    let s = Ranking::from_ranks(ranks.to_vec()).expect("enumerated ranking");
                    match self.evaluate(&s, &id) {
                        Ok(d) => max = max.max(d.value),
                        Err(e) => err = Some(e),
                    }
                });
                match err {
                    Some(e) => Err(e),
                    None => Ok(max),
                }
            }
        }
    }
}

fn exact_value(value: f64) -> DistanceValue {
    DistanceValue { value, exact: true }
}

fn check_dims(a: &Ranking, b: &Ranking) -> Result<(), MetricError> {
    if a.m() != b.m() {
        return Err(MetricError::DimensionMismatch {
            expected: a.m(),
            got: b.m(),
        });
    }
    Ok(())
}

/// Number of candidate pairs the two rankings order oppositely.
pub fn kendall(a: &Ranking, b: &Ranking) -> Result<u64, MetricError> {
    check_dims(a, b)?;
    Ok(kendall_count(a.ranks(), b.ranks()))
}

/// Number of candidates whose ranks disagree. Never 1 for permutations.
pub fn hamming(a: &Ranking, b: &Ranking) -> Result<u64, MetricError> {
    check_dims(a, b)?;
    Ok(hamming_count(a.ranks(), b.ranks()))
}

/// Minimum number of transpositions transforming one ranking into the
/// other: `m` minus the number of cycles of the quotient permutation.
pub fn cayley(a: &Ranking, b: &Ranking) -> Result<u64, MetricError> {
    check_dims(a, b)?;
    Ok(cayley_count(a.ranks(), b.ranks()))
}

/// `(sum over candidates of |a(c) - b(c)|^q)^(1/q)`, the maximum
/// displacement for infinite `q`.
pub fn minkowski(a: &Ranking, b: &Ranking, q: f64) -> Result<f64, MetricError> {
    check_dims(a, b)?;
    if q.is_nan() || q < 1.0 {
        return Err(MetricError::InvalidOrder { q });
    }
    Ok(minkowski_value(a.ranks(), b.ranks(), q))
}

/// Sum of `w[a(c)][b(c)]` over candidates ranked differently. Signed
/// weights are allowed; the result is then a dissimilarity, not a metric.
pub fn weighted_hamming(a: &Ranking, b: &Ranking, w: &WeightMatrix) -> Result<f64, MetricError> {
    check_dims(a, b)?;
    if w.dim() != a.m() {
        return Err(MetricError::DimensionMismatch {
            expected: a.m(),
            got: w.dim(),
        });
    }
    Ok(weighted_hamming_value(a.inverse().ranks(), b.ranks(), w))
}

/// `(sum of w[a(c)][b(c)] * |a(c) - b(c)|^q)^(1/q)` with nonnegative
/// weights.
pub fn weighted_minkowski(
    a: &Ranking,
    b: &Ranking,
    q: f64,
    w: &WeightMatrix,
) -> Result<f64, MetricError> {
    check_dims(a, b)?;
    if !q.is_finite() || q < 1.0 {
        return Err(MetricError::InvalidOrder { q });
    }
    if w.has_negative() {
        return Err(MetricError::NegativeWeightUnderRoot);
    }
    if w.dim() != a.m() {
        return Err(MetricError::DimensionMismatch {
            expected: a.m(),
            got: w.dim(),
        });
    }
    let pow = displacement_powers(a.m(), q);
    Ok(weighted_pow_sum(a.inverse().ranks(), b.ranks(), w, &pow).powf(1.0 / q))
}

/// Smallest `rho` with `w[ra][rb] <= rho * w[ra][rc]` over all rank
/// triples, the constant in the relaxed triangle inequality satisfied by
/// weighted Hamming with strictly positive weights.
pub fn relaxation_constant(w: &WeightMatrix) -> Result<f64, MetricError> {
    let m = w.dim();
    for r in 1..=m {
        for s in 1..=m {
            if w.get(r, s) <= 0.0 {
                return Err(MetricError::NonPositiveWeight);
            }
        }
    }
    let mut rho: f64 = 0.0;
    for ra in 1..=m {
        for rb in 1..=m {
            for rc in 1..=m {
                rho = rho.max(w.get(ra, rb) / w.get(ra, rc));
            }
        }
    }
    Ok(rho)
}

pub(crate) fn kendall_count(a: &[usize], b: &[usize]) -> u64 {
    let m = a.len();
    let mut count = 0;
    for i in 0..m {
        for j in (i + 1)..m {
            let da = a[i] as i64 - a[j] as i64;
            let db = b[i] as i64 - b[j] as i64;
            if da * db < 0 {
                count += 1;
            }
        }
    }
    count
}

pub(crate) fn hamming_count(a: &[usize], b: &[usize]) -> u64 {
    a.iter().zip(b).filter(|(x, y)| x != y).count() as u64
}

fn cayley_count(a: &[usize], b: &[usize]) -> u64 {
    let mut b_inv = vec![0usize; b.len()];
    for (c, &r) in b.iter().enumerate() {
        b_inv[r - 1] = c + 1;
    }
    cayley_count_from_inv(a, &b_inv)
}

/// Cayley distance given the inverse of the second ranking (1-based
/// candidate per rank). Counts cycles of `r -> a[b_inv[r]]`.
pub(crate) fn cayley_count_from_inv(a: &[usize], b_inv: &[usize]) -> u64 {
    let m = a.len();
    debug_assert!(m <= 128, "cycle mask supports at most 128 candidates");
    let mut visited: u128 = 0;
    let mut cycles = 0u64;
    for start in 0..m {
        if visited & (1 << start) != 0 {
            continue;
        }
        cycles += 1;
        let mut r = start;
        while visited & (1 << r) == 0 {
            visited |= 1 << r;
            r = a[b_inv[r] - 1] - 1;
        }
    }
    m as u64 - cycles
}

pub(crate) fn max_abs_diff(a: &[usize], b: &[usize]) -> u64 {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| x.abs_diff(y) as u64)
        .max()
        .unwrap_or(0)
}

/// Integer `sum |a(c) - b(c)|^q`, None on overflow.
pub(crate) fn abs_pow_sum(a: &[usize], b: &[usize], q: u32) -> Option<i128> {
    let mut acc: i128 = 0;
    for (&x, &y) in a.iter().zip(b) {
        let d = x.abs_diff(y) as i128;
        acc = acc.checked_add(d.checked_pow(q)?)?;
    }
    Some(acc)
}

/// Counts displacements by size. `counts[d]` is the number of candidates
/// with `|a(c) - b(c)| = d`; summing by size keeps float accumulation
/// independent of candidate numbering.
pub(crate) fn displacement_counts(a: &[usize], b: &[usize], counts: &mut [u32]) {
    counts.iter_mut().for_each(|c| *c = 0);
    for (&x, &y) in a.iter().zip(b) {
        counts[x.abs_diff(y)] += 1;
    }
}

/// `pow[d] = d^q` for displacements `0..m`.
pub(crate) fn displacement_powers(m: usize, q: f64) -> Vec<f64> {
    (0..m).map(|d| (d as f64).powf(q)).collect()
}

/// Float `sum |a(c) - b(c)|^q` accumulated in displacement order.
pub(crate) fn abs_pow_sum_f64(a: &[usize], b: &[usize], pow: &[f64], counts: &mut [u32]) -> f64 {
    displacement_counts(a, b, counts);
    counts
        .iter()
        .zip(pow)
        .map(|(&c, &p)| c as f64 * p)
        .sum()
}

fn minkowski_value(a: &[usize], b: &[usize], q: f64) -> f64 {
    let m = a.len();
    if q.is_infinite() {
        return max_abs_diff(a, b) as f64;
    }
    if q == 1.0 {
        let sum: u64 = a.iter().zip(b).map(|(&x, &y)| x.abs_diff(y) as u64).sum();
        return sum as f64;
    }
    if let Some(qi) = integer_order(q) {
        if let Some(sum) = abs_pow_sum(a, b, qi) {
            return (sum as f64).powf(1.0 / q);
        }
    }
    let pow = displacement_powers(m, q);
    let mut counts = vec![0u32; m];
    abs_pow_sum_f64(a, b, &pow, &mut counts).powf(1.0 / q)
}

pub(crate) fn integer_order(q: f64) -> Option<u32> {
    (q.is_finite() && q >= 1.0 && q.fract() == 0.0 && q <= u32::MAX as f64).then(|| q as u32)
}

/// Weighted Hamming accumulated by rank of the first argument, so the sum
/// order is independent of candidate numbering. `a_inv` lists candidates by
/// rank, 1-based, as produced by `Ranking::inverse`.
pub(crate) fn weighted_hamming_value(a_inv: &[usize], b: &[usize], w: &WeightMatrix) -> f64 {
    let m = b.len();
    let mut acc = 0.0;
    for r in 1..=m {
        let c = a_inv[r - 1] - 1;
        let rb = b[c];
        if r != rb {
            acc += w.get(r, rb);
        }
    }
    acc
}

/// Weighted displacement power sum accumulated by rank of the first
/// argument. `pow[d]` must hold `d^q`.
pub(crate) fn weighted_pow_sum(a_inv: &[usize], b: &[usize], w: &WeightMatrix, pow: &[f64]) -> f64 {
    let m = b.len();
    let mut acc = 0.0;
    for r in 1..=m {
        let c = a_inv[r - 1] - 1;
        let rb = b[c];
        acc += w.get(r, rb) * pow[r.abs_diff(rb)];
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cases;
    use crate::ranking::Profile;

    fn r(ranks: &[usize]) -> Ranking {
        Ranking::from_ranks(ranks.to_vec()).unwrap()
    }

    fn sum_over<F: Fn(&Ranking) -> f64>(p: &Profile, f: F) -> f64 {
        p.columns().iter().map(|col| f(col)).sum()
    }

    #[test]
    fn kendall_counts_discordant_pairs() {
        assert_eq!(kendall(&r(&[1, 2, 3]), &r(&[1, 2, 3])).unwrap(), 0);
        assert_eq!(kendall(&r(&[1, 2, 3]), &r(&[2, 1, 3])).unwrap(), 1);
        assert_eq!(kendall(&r(&[1, 2, 3]), &r(&[3, 2, 1])).unwrap(), 3);
        let p = cases::kendall_power_flip();
        let id = r(&[1, 2, 3]);
        let total = sum_over(&p, |col| kendall(&id, col).unwrap() as f64);
        assert_eq!(total, 4.0);
        let swapped = r(&[2, 1, 3]);
        let total = sum_over(&p, |col| kendall(&swapped, col).unwrap() as f64);
        assert_eq!(total, 5.0);
    }

    #[test]
    fn hamming_counts_moved_positions() {
        assert_eq!(hamming(&r(&[1, 2, 3]), &r(&[2, 1, 3])).unwrap(), 2);
        assert_eq!(hamming(&r(&[1, 2, 3]), &r(&[1, 2, 3])).unwrap(), 0);
        let p = cases::condorcet_rule_gap();
        let s = r(&[2, 1, 3]);
        let total = sum_over(&p, |col| hamming(&s, col).unwrap() as f64);
        assert_eq!(total, 10.0);
    }

    #[test]
    fn cayley_counts_transpositions() {
        assert_eq!(cayley(&r(&[1, 2, 3]), &r(&[2, 1, 3])).unwrap(), 1);
        assert_eq!(cayley(&r(&[1, 2, 3]), &r(&[2, 3, 1])).unwrap(), 2);
        assert_eq!(cayley(&r(&[2, 3, 1]), &r(&[2, 3, 1])).unwrap(), 0);
        let p = cases::condorcet_rule_gap();
        let s = r(&[2, 1, 3]);
        let total = sum_over(&p, |col| cayley(&s, col).unwrap() as f64);
        assert_eq!(total, 5.0);
    }

    #[test]
    fn minkowski_family() {
        assert_eq!(minkowski(&r(&[1, 2, 3]), &r(&[3, 2, 1]), 1.0).unwrap(), 4.0);
        assert_eq!(minkowski(&r(&[1, 2, 3]), &r(&[1, 2, 3]), 2.0).unwrap(), 0.0);
        let d = minkowski(&r(&[1, 2, 3]), &r(&[2, 1, 3]), 2.0).unwrap();
        assert!((d - 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(
            minkowski(&r(&[1, 2, 3]), &r(&[3, 2, 1]), f64::INFINITY).unwrap(),
            2.0
        );
        assert!(matches!(
            minkowski(&r(&[1, 2]), &r(&[2, 1]), 0.5),
            Err(MetricError::InvalidOrder { .. })
        ));
        let p = cases::condorcet_rule_gap();
        let id = r(&[1, 2, 3]);
        let s = r(&[2, 1, 3]);
        let t_id = sum_over(&p, |col| minkowski(&id, col, 1.0).unwrap());
        let t_s = sum_over(&p, |col| minkowski(&s, col, 1.0).unwrap());
        assert_eq!((t_id, t_s), (16.0, 14.0));
    }

    #[test]
    fn weighted_hamming_boundary_weights() {
        let w1 = WeightMatrix::plurality_weights(3);
        // Different first places contribute twice, once per side.
        assert_eq!(weighted_hamming(&r(&[1, 2, 3]), &r(&[2, 1, 3]), &w1).unwrap(), 2.0);
        assert_eq!(weighted_hamming(&r(&[1, 2, 3]), &r(&[1, 3, 2]), &w1).unwrap(), 0.0);
        let wm = WeightMatrix::antiplurality_weights(3);
        assert_eq!(weighted_hamming(&r(&[1, 2, 3]), &r(&[2, 1, 3]), &wm).unwrap(), 0.0);
        assert_eq!(weighted_hamming(&r(&[1, 2, 3]), &r(&[1, 3, 2]), &wm).unwrap(), -2.0);
        assert!(matches!(
            weighted_hamming(&r(&[1, 2]), &r(&[2, 1]), &w1),
            Err(MetricError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn weighted_minkowski_rejects_signed_weights() {
        let w = WeightMatrix::antiplurality_weights(3);
        assert_eq!(
            weighted_minkowski(&r(&[1, 2, 3]), &r(&[2, 1, 3]), 2.0, &w),
            Err(MetricError::NegativeWeightUnderRoot)
        );
        let ones = WeightMatrix::new(vec![vec![1.0; 3]; 3]).unwrap();
        let d = weighted_minkowski(&r(&[1, 2, 3]), &r(&[2, 1, 3]), 2.0, &ones).unwrap();
        assert!((d - 2f64.sqrt()).abs() < 1e-12);
        assert!(matches!(
            weighted_minkowski(&r(&[1, 2, 3]), &r(&[2, 1, 3]), f64::INFINITY, &ones),
            Err(MetricError::InvalidOrder { .. })
        ));
    }

    #[test]
    fn diameters() {
        assert_eq!(Distance::Kendall.diameter(4).unwrap(), 6.0);
        assert_eq!(Distance::Hamming.diameter(4).unwrap(), 4.0);
        assert_eq!(Distance::Hamming.diameter(1).unwrap(), 0.0);
        assert_eq!(Distance::Cayley.diameter(4).unwrap(), 3.0);
        let d = Distance::minkowski(2.0).unwrap().diameter(3).unwrap();
        assert!((d - 8f64.sqrt()).abs() < 1e-12);
        assert_eq!(
            Distance::minkowski(f64::INFINITY).unwrap().diameter(5).unwrap(),
            4.0
        );
        let w = Distance::WeightedHamming {
            weights: WeightMatrix::plurality_weights(3),
        };
        assert_eq!(w.diameter(3).unwrap(), 2.0);
        assert!(matches!(
            Distance::minkowski(2.0).unwrap().diameter(10),
            Err(MetricError::CapExceeded { .. })
        ));
    }

    #[test]
    fn relaxation_constant_of_padded_weights() {
        let m = 4;
        let mut rows = vec![vec![0.1; m]; m];
        for r in 0..m {
            rows[r][0] = 1.1;
            rows[0][r] = 1.1;
        }
        let w = WeightMatrix::new(rows).unwrap();
        let rho = relaxation_constant(&w).unwrap();
        assert!((rho - 11.0).abs() < 1e-12);
        assert_eq!(
            relaxation_constant(&WeightMatrix::plurality_weights(3)),
            Err(MetricError::NonPositiveWeight)
        );
    }

    #[test]
    fn weight_matrix_csv() {
        let w = WeightMatrix::from_csv_str("0,1\n1,0\n").unwrap();
        assert_eq!(w.dim(), 2);
        assert_eq!(w.get(1, 2), 1.0);
        assert!(w.is_symmetric());
        assert!(matches!(
            WeightMatrix::from_csv_str("0,1\n1\n"),
            Err(MetricError::NotSquare { .. })
        ));
        assert!(matches!(
            WeightMatrix::from_csv_str("0,x\n1,0\n"),
            Err(MetricError::NonFiniteWeight)
        ));
    }

    #[test]
    fn evaluate_reports_exactness() {
        let dv = Distance::Kendall.evaluate(&r(&[1, 2, 3]), &r(&[3, 2, 1])).unwrap();
        assert!(dv.exact && dv.value == 3.0);
        let dv = Distance::minkowski(2.0)
            .unwrap()
            .evaluate(&r(&[1, 2, 3]), &r(&[2, 1, 3]))
            .unwrap();
        assert!(!dv.exact);
        let dv = Distance::minkowski(1.0)
            .unwrap()
            .evaluate(&r(&[1, 2, 3]), &r(&[2, 1, 3]))
            .unwrap();
        assert!(dv.exact && dv.value == 2.0);
    }
}
