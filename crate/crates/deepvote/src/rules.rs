//! Classical voting rules, implemented directly from their textbook
//! definitions. None of them go through the distance machinery, so their
//! outcomes serve as independent cross-checks for the deepest-ranking
//! rules they are known to coincide with.

use crate::ranking::{for_each_ranking, Profile, Ranking, DEFAULT_ENUMERATION_CAP};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleError {
    CapExceeded { m: usize, cap: usize },
}

impl fmt::Display for RuleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleError::CapExceeded { m, cap } => {
                write!(f, "order enumeration over {m} candidates exceeds the cap of {cap}")
            }
        }
    }
}

impl std::error::Error for RuleError {}

/// Per-rule evidence accompanying a winner set.
#[derive(Debug, Clone, PartialEq)]
pub enum RuleDetail {
    /// Candidate rank sums; lower is better.
    RankSums(Vec<usize>),
    /// Candidate lower median ranks; lower is better.
    LowerMedians(Vec<usize>),
    /// Times each candidate is ranked first; higher is better.
    FirstPlaceCounts(Vec<usize>),
    /// Times each candidate is ranked last; lower is better.
    LastPlaceCounts(Vec<usize>),
    /// All orders minimizing total pairwise disagreement, lexicographic.
    OptimalOrders(Vec<Ranking>),
}

/// Winner set plus the scores it was read off from.
#[derive(Debug, Clone, PartialEq)]
pub struct RuleOutcome {
    pub winners: BTreeSet<usize>,
    /// One score per candidate; orientation is documented per rule.
    pub scores: Vec<f64>,
    pub detail: RuleDetail,
}

fn argmin_set(scores: &[usize]) -> BTreeSet<usize> {
    let best = *scores.iter().min().expect("at least one candidate");
    scores
        .iter()
        .enumerate()
        .filter(|(_, &s)| s == best)
        .map(|(c, _)| c)
        .collect()
}

fn argmax_set(scores: &[usize]) -> BTreeSet<usize> {
    let best = *scores.iter().max().expect("at least one candidate");
    scores
        .iter()
        .enumerate()
        .filter(|(_, &s)| s == best)
        .map(|(c, _)| c)
        .collect()
}

/// Borda: elect the candidates with the smallest rank sum.
pub fn borda(profile: &Profile) -> RuleOutcome {
    let sums: Vec<usize> = (0..profile.m())
        .map(|c| (0..profile.n()).map(|v| profile.rank(c, v)).sum())
        .collect();
    RuleOutcome {
        winners: argmin_set(&sums),
        scores: sums.iter().map(|&s| s as f64).collect(),
        detail: RuleDetail::RankSums(sums),
    }
}

/// Bucklin: elect the candidates with the best (lowest) median rank,
/// using the lower median when the voter count is even.
pub fn bucklin(profile: &Profile) -> RuleOutcome {
    let n = profile.n();
    let medians: Vec<usize> = (0..profile.m())
        .map(|c| {
            let mut ranks: Vec<usize> = (0..n).map(|v| profile.rank(c, v)).collect();
            ranks.sort_unstable();
            ranks[(n - 1) / 2]
        })
        .collect();
    RuleOutcome {
        winners: argmin_set(&medians),
        scores: medians.iter().map(|&s| s as f64).collect(),
        detail: RuleDetail::LowerMedians(medians),
    }
}

/// Plurality: elect the candidates ranked first most often.
pub fn plurality(profile: &Profile) -> RuleOutcome {
    let mut counts = vec![0usize; profile.m()];
    for col in profile.columns() {
        counts[col.top_candidate()] += 1;
    }
    RuleOutcome {
        winners: argmax_set(&counts),
        scores: counts.iter().map(|&s| s as f64).collect(),
        detail: RuleDetail::FirstPlaceCounts(counts),
    }
}

/// Antiplurality: elect the candidates ranked last least often.
pub fn antiplurality(profile: &Profile) -> RuleOutcome {
    let mut counts = vec![0usize; profile.m()];
    for col in profile.columns() {
        counts[col.bottom_candidate()] += 1;
    }
    RuleOutcome {
        winners: argmin_set(&counts),
        scores: counts.iter().map(|&s| s as f64).collect(),
        detail: RuleDetail::LastPlaceCounts(counts),
    }
}

/// `result[a][b]` = number of voters ranking candidate `a` before `b`.
pub fn pairwise_majority(profile: &Profile) -> Vec<Vec<usize>> {
    let m = profile.m();
    let mut pw = vec![vec![0usize; m]; m];
    for v in 0..profile.n() {
        for a in 0..m {
            for b in 0..m {
                if a != b && profile.rank(a, v) < profile.rank(b, v) {
                    pw[a][b] += 1;
                }
            }
        }
    }
    pw
}

/// Candidate beating every other by strict majority, if one exists.
pub fn condorcet_winner(profile: &Profile) -> Option<usize> {
    let pw = pairwise_majority(profile);
    let n = profile.n();
    (0..profile.m()).find(|&a| (0..profile.m()).all(|b| a == b || 2 * pw[a][b] > n))
}

/// Candidate losing to every other by strict majority, if one exists.
pub fn condorcet_loser(profile: &Profile) -> Option<usize> {
    let pw = pairwise_majority(profile);
    let n = profile.n();
    (0..profile.m()).find(|&a| (0..profile.m()).all(|b| a == b || 2 * pw[b][a] > n))
}

/// Kemeny under the default enumeration cap.
pub fn kemeny(profile: &Profile) -> Result<RuleOutcome, RuleError> {
    kemeny_capped(profile, DEFAULT_ENUMERATION_CAP)
}

/// Kemeny: elect the top candidates of the orders minimizing total
/// pairwise disagreement with the electorate. The objective of an order is
/// the number of (voter, candidate pair) combinations where the order and
/// the voter disagree, computed from the pairwise majority matrix alone.
/// `scores[c]` is the best objective achievable with `c` ranked first.
pub fn kemeny_capped(profile: &Profile, cap: usize) -> Result<RuleOutcome, RuleError> {
    let m = profile.m();
    if m > cap {
        return Err(RuleError::CapExceeded { m, cap });
    }
    let pw = pairwise_majority(profile);
    let mut best = u64::MAX;
    let mut optimal: Vec<Ranking> = Vec::new();
    let mut best_by_top = vec![u64::MAX; m];
    for_each_ranking(m, |sigma| {
        let mut objective = 0u64;
        for a in 0..m {
            for b in 0..m {
                if a != b && sigma[a] < sigma[b] {
                    objective += pw[b][a] as u64;
                }
            }
        }
        let top = sigma.iter().position(|&r| r == 1).expect("rank 1 present");
        if objective < best_by_top[top] {
            best_by_top[top] = objective;
        }
        if objective < best {
            best = objective;
            optimal.clear();
        }
        if objective == best {
            optimal.push(Ranking::from_ranks(sigma.to_vec()).expect("enumerated ranking"));
        }
    });
    let winners: BTreeSet<usize> = optimal.iter().map(|s| s.top_candidate()).collect();
    Ok(RuleOutcome {
        winners,
        scores: best_by_top.iter().map(|&s| s as f64).collect(),
        detail: RuleDetail::OptimalOrders(optimal),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cases;

    fn set(outcome: &RuleOutcome) -> Vec<usize> {
        outcome.winners.iter().copied().collect()
    }

    #[test]
    fn borda_rank_sums() {
        let o = borda(&cases::kendall_power_flip());
        assert_eq!(o.detail, RuleDetail::RankSums(vec![8, 9, 13]));
        assert_eq!(set(&o), [0]);
        let o = borda(&cases::bucklin_footrule_gap());
        assert_eq!(o.detail, RuleDetail::RankSums(vec![13, 10, 13, 14]));
        assert_eq!(set(&o), [1]);
    }

    #[test]
    fn bucklin_lower_medians() {
        let o = bucklin(&cases::bucklin_footrule_gap());
        assert_eq!(o.detail, RuleDetail::LowerMedians(vec![3, 2, 3, 4]));
        assert_eq!(set(&o), [1]);
        let o = bucklin(&cases::median_box());
        assert_eq!(o.detail, RuleDetail::LowerMedians(vec![1, 1, 2]));
        assert_eq!(set(&o), [0, 1]);
    }

    #[test]
    fn plurality_and_antiplurality_counts() {
        let g = cases::condorcet_rule_gap();
        let o = plurality(&g);
        assert_eq!(o.detail, RuleDetail::FirstPlaceCounts(vec![2, 3, 2]));
        assert_eq!(set(&o), [1]);
        let o = antiplurality(&g);
        assert_eq!(o.detail, RuleDetail::LastPlaceCounts(vec![1, 2, 4]));
        assert_eq!(set(&o), [0]);
    }

    #[test]
    fn kemeny_elects_condorcet_winner_where_one_exists() {
        let g = cases::condorcet_rule_gap();
        let o = kemeny(&g).unwrap();
        assert_eq!(set(&o), [0]);
        assert_eq!(condorcet_winner(&g), Some(0));
    }

    #[test]
    fn kemeny_on_majority_cycle() {
        let o = kemeny(&cases::loser_trio()).unwrap();
        assert_eq!(set(&o), [1]);
        let expected = Ranking::from_ranks(vec![3, 1, 2]).unwrap();
        assert_eq!(o.detail, RuleDetail::OptimalOrders(vec![expected]));
        assert_eq!(o.scores[1], 8.0);
    }

    #[test]
    fn condorcet_winner_and_loser() {
        let g = cases::condorcet_rule_gap();
        assert_eq!(condorcet_winner(&g), Some(0));
        assert_eq!(condorcet_loser(&g), Some(2));
        let pair = cases::loser_pair();
        assert_eq!(condorcet_winner(&pair), Some(0));
        assert_eq!(condorcet_loser(&pair), Some(1));
        let trio = cases::loser_trio();
        assert_eq!(condorcet_winner(&trio), None);
        assert_eq!(condorcet_loser(&trio), None);
    }

    #[test]
    fn pairwise_matrix_counts_voters() {
        let pw = pairwise_majority(&cases::loser_pair());
        assert_eq!(pw, vec![vec![0, 4], vec![3, 0]]);
    }

    #[test]
    fn kemeny_cap() {
        let wide = Profile::new(vec![Ranking::identity(10)]).unwrap();
        assert_eq!(
            kemeny(&wide),
            Err(RuleError::CapExceeded { m: 10, cap: 9 })
        );
    }
}
