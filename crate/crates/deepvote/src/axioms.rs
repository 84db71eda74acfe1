//! Fairness properties of winner-set voting rules, checked mechanically.
//!
//! Every check answers one question about one concrete profile: does the
//! rule's winner set react to a transformation the way the property
//! demands? A failed check yields a [`Witness`] holding the profile, the
//! transformation, and the expected versus observed winner sets, which
//! [`replay`] can re-verify from scratch. [`search_counterexample`] drives
//! the checks over seeded random profiles and greedily shrinks any
//! violation it finds, dropping voters first, then candidates.
//!
//! Property semantics, where `W(P)` is the winner set on profile `P`:
//!
//! * neutrality: relabeling candidates maps `W` through the relabeling
//! * anonymity: reordering voters leaves `W` unchanged
//! * universality: `W` is nonempty on every profile
//! * unanimity: a candidate ranked first by all voters wins alone
//! * monotonicity: a unique winner moved up one place by one voter stays
//!   a winner
//! * independence-to-losers: removing a non-winner leaves `W` unchanged
//! * condorcet-winner: a candidate beating all others pairwise wins alone
//! * condorcet-loser: a candidate losing all pairwise contests never wins
//!
//! Monotonicity deliberately asks for containment, not equality: moving a
//! winner up can enlarge the winner set through new ties without wronging
//! the promoted candidate. It is also checked only from profiles with a
//! unique winner. The one-place upgrade always demotes some other
//! candidate, and when that candidate is a tied co-winner the swap can
//! legitimately tip the election to a third party, so tied winner sets
//! carry no guarantee to exercise.

use crate::frechet::{deepest_set_capped, FrechetParams};
use crate::ranking::{Profile, Ranking, RankingError, DEFAULT_ENUMERATION_CAP};
use crate::rules;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AxiomError {
    #[error("rule evaluation failed: {0}")]
    Rule(String),
    #[error(transparent)]
    Ranking(#[from] RankingError),
}

/// Anything that maps a profile to a set of winning candidates.
pub trait VotingRule {
    /// Stable identifier used in verdicts and reports.
    fn id(&self) -> String;
    fn winners(&self, profile: &Profile) -> Result<BTreeSet<usize>, AxiomError>;
}

/// The rule electing the top candidates of the deepest rankings.
#[derive(Debug, Clone, PartialEq)]
pub struct DeepestRule {
    pub params: FrechetParams,
    pub cap: usize,
}

impl DeepestRule {
    pub fn new(params: FrechetParams) -> Self {
        DeepestRule {
            params,
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

impl VotingRule for DeepestRule {
    fn id(&self) -> String {
        self.params.rule_label()
    }

    fn winners(&self, profile: &Profile) -> Result<BTreeSet<usize>, AxiomError> {
        deepest_set_capped(profile, &self.params, self.cap)
            .map(|d| d.winners)
            .map_err(|e| AxiomError::Rule(e.to_string()))
    }
}

/// The classical rules viewed as winner-set rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classical {
    Borda,
    Bucklin,
    Plurality,
    Antiplurality,
    Kemeny,
}

impl VotingRule for Classical {
    fn id(&self) -> String {
        match self {
            Classical::Borda => "borda",
            Classical::Bucklin => "bucklin",
            Classical::Plurality => "plurality",
            Classical::Antiplurality => "antiplurality",
            Classical::Kemeny => "kemeny",
        }
        .to_string()
    }

    fn winners(&self, profile: &Profile) -> Result<BTreeSet<usize>, AxiomError> {
        let outcome = match self {
            Classical::Borda => rules::borda(profile),
            Classical::Bucklin => rules::bucklin(profile),
            Classical::Plurality => rules::plurality(profile),
            Classical::Antiplurality => rules::antiplurality(profile),
            Classical::Kemeny => {
                rules::kemeny(profile).map_err(|e| AxiomError::Rule(e.to_string()))?
            }
        };
        Ok(outcome.winners)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Neutrality,
    Anonymity,
    Universality,
    Unanimity,
    Monotonicity,
    IndependenceToLosers,
    CondorcetWinner,
    CondorcetLoser,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::Neutrality,
        Axiom::Anonymity,
        Axiom::Universality,
        Axiom::Unanimity,
        Axiom::Monotonicity,
        Axiom::IndependenceToLosers,
        Axiom::CondorcetWinner,
        Axiom::CondorcetLoser,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            Axiom::Neutrality => "neutrality",
            Axiom::Anonymity => "anonymity",
            Axiom::Universality => "universality",
            Axiom::Unanimity => "unanimity",
            Axiom::Monotonicity => "monotonicity",
            Axiom::IndependenceToLosers => "independence-to-losers",
            Axiom::CondorcetWinner => "condorcet-winner",
            Axiom::CondorcetLoser => "condorcet-loser",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Axiom {
    type Err = String;

    fn from_str(s: &str) -> Result<Axiom, String> {
        let wanted = s.to_ascii_lowercase().replace('_', "-");
        Axiom::ALL
            .into_iter()
            .find(|a| a.label() == wanted)
            .ok_or_else(|| format!("unknown axiom {s:?}"))
    }
}

/// The profile transformation a witness is built around.
#[derive(Debug, Clone, PartialEq)]
pub enum Transform {
    Relabel(Ranking),
    PermuteVoters(Vec<usize>),
    /// One voter moves one candidate up a single place.
    Upgrade { candidate: usize, voter: usize },
    RemoveCandidate(usize),
    None,
}

/// A re-checkable account of one property violation.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub profile: Profile,
    pub transform: Transform,
    pub transformed: Option<Profile>,
    pub expected: BTreeSet<usize>,
    pub observed: BTreeSet<usize>,
    pub note: String,
}

/// Result of checking one property on one profile.
#[derive(Debug, Clone, PartialEq)]
pub enum CheckOutcome {
    Pass,
    Fail(Witness),
    /// The profile cannot exercise the property (no unanimous top, no
    /// majority-dominant candidate, nothing to remove or upgrade).
    Skip,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    HoldsOnSample,
    Violated,
}

/// Outcome of a randomized search for one (rule, axiom) pair.
#[derive(Debug, Clone, PartialEq)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    pub rule: String,
    pub status: Status,
    pub witness: Option<Witness>,
    /// Trials performed, including the violating one.
    pub trials: u64,
    /// Trials that could not exercise the property.
    pub skipped: u64,
    pub seed: u64,
}

pub fn check_neutrality(
    rule: &dyn VotingRule,
    profile: &Profile,
    rho: &Ranking,
) -> Result<CheckOutcome, AxiomError> {
    let before = rule.winners(profile)?;
    let transformed = profile.relabel_candidates(rho)?;
    let expected: BTreeSet<usize> = before.iter().map(|&c| rho.rank_of(c) - 1).collect();
    let observed = rule.winners(&transformed)?;
    if observed == expected {
        return Ok(CheckOutcome::Pass);
    }
    Ok(CheckOutcome::Fail(Witness {
        profile: profile.clone(),
        transform: Transform::Relabel(rho.clone()),
        transformed: Some(transformed),
        expected,
        observed,
        note: "winner set does not follow the candidate relabeling".into(),
    }))
}

pub fn check_anonymity(
    rule: &dyn VotingRule,
    profile: &Profile,
    order: &[usize],
) -> Result<CheckOutcome, AxiomError> {
    let expected = rule.winners(profile)?;
    let transformed = profile.permute_voters(order)?;
    let observed = rule.winners(&transformed)?;
    if observed == expected {
        return Ok(CheckOutcome::Pass);
    }
    Ok(CheckOutcome::Fail(Witness {
        profile: profile.clone(),
        transform: Transform::PermuteVoters(order.to_vec()),
        transformed: Some(transformed),
        expected,
        observed,
        note: "winner set changed when voters were reordered".into(),
    }))
}

pub fn check_universality(
    rule: &dyn VotingRule,
    profile: &Profile,
) -> Result<CheckOutcome, AxiomError> {
    let observed = rule.winners(profile)?;
    if !observed.is_empty() {
        return Ok(CheckOutcome::Pass);
    }
    Ok(CheckOutcome::Fail(Witness {
        profile: profile.clone(),
        transform: Transform::None,
        transformed: None,
        expected: BTreeSet::new(),
        observed,
        note: "rule produced an empty winner set".into(),
    }))
}

pub fn check_unanimity(
    rule: &dyn VotingRule,
    profile: &Profile,
) -> Result<CheckOutcome, AxiomError> {
    let Some(top) = profile.unanimous_top() else {
        return Ok(CheckOutcome::Skip);
    };
    let observed = rule.winners(profile)?;
    let expected = BTreeSet::from([top]);
    if observed == expected {
        return Ok(CheckOutcome::Pass);
    }
    Ok(CheckOutcome::Fail(Witness {
        profile: profile.clone(),
        transform: Transform::None,
        transformed: None,
        expected,
        observed,
        note: "candidate ranked first by every voter is not the unique winner".into(),
    }))
}

/// Builds the profile where `voter` swaps `candidate` with the candidate
/// one rank above it; None when the candidate is already ranked first.
pub fn upgrade_in_column(
    profile: &Profile,
    candidate: usize,
    voter: usize,
) -> Result<Option<Profile>, AxiomError> {
    if candidate >= profile.m() || voter >= profile.n() {
        return Err(RankingError::DimensionMismatch {
            expected: profile.m(),
            got: candidate.max(voter),
        }
        .into());
    }
    let col = profile.column(voter);
    let r = col.rank_of(candidate);
    if r == 1 {
        return Ok(None);
    }
    let above = col
        .ranks()
        .iter()
        .position(|&x| x == r - 1)
        .expect("rank r-1 present");
    let mut ranks = col.ranks().to_vec();
    ranks.swap(candidate, above);
    let ranking = Ranking::from_ranks(ranks)?;
    Ok(Some(profile.with_column(voter, ranking)?))
}

pub fn check_monotonicity(
    rule: &dyn VotingRule,
    profile: &Profile,
) -> Result<CheckOutcome, AxiomError> {
    let winners = rule.winners(profile)?;
    // The guarantee binds only when the verdict is unambiguous: with tied
    // winners, upgrading one of them necessarily demotes another candidate
    // and may hand the election to a third. Ties are not exercisable.
    if winners.len() != 1 {
        return Ok(CheckOutcome::Skip);
    }
    let w = *winners.iter().next().expect("nonempty winner set");
    let mut eligible = false;
    for v in 0..profile.n() {
        let Some(upgraded) = upgrade_in_column(profile, w, v)? else {
            continue;
        };
        eligible = true;
        let observed = rule.winners(&upgraded)?;
        if !observed.contains(&w) {
            return Ok(CheckOutcome::Fail(Witness {
                profile: profile.clone(),
                transform: Transform::Upgrade {
                    candidate: w,
                    voter: v,
                },
                transformed: Some(upgraded),
                expected: BTreeSet::from([w]),
                observed,
                note: "winner dropped out after one voter moved it up one place".into(),
            }));
        }
    }
    if eligible {
        Ok(CheckOutcome::Pass)
    } else {
        Ok(CheckOutcome::Skip)
    }
}

pub fn check_independence_losers(
    rule: &dyn VotingRule,
    profile: &Profile,
) -> Result<CheckOutcome, AxiomError> {
    if profile.m() < 2 {
        return Ok(CheckOutcome::Skip);
    }
    let winners = rule.winners(profile)?;
    let losers: Vec<usize> = (0..profile.m()).filter(|c| !winners.contains(c)).collect();
    if losers.is_empty() {
        return Ok(CheckOutcome::Skip);
    }
    for &l in &losers {
        let reduced = profile.remove_candidate(l)?;
        let expected: BTreeSet<usize> = winners
            .iter()
            .map(|&c| if c > l { c - 1 } else { c })
            .collect();
        let observed = rule.winners(&reduced)?;
        if observed != expected {
            return Ok(CheckOutcome::Fail(Witness {
                profile: profile.clone(),
                transform: Transform::RemoveCandidate(l),
                transformed: Some(reduced),
                expected,
                observed,
                note: "removing a non-winner changed the winner set".into(),
            }));
        }
    }
    Ok(CheckOutcome::Pass)
}

pub fn check_condorcet_winner(
    rule: &dyn VotingRule,
    profile: &Profile,
) -> Result<CheckOutcome, AxiomError> {
    let Some(cw) = rules::condorcet_winner(profile) else {
        return Ok(CheckOutcome::Skip);
    };
    let observed = rule.winners(profile)?;
    let expected = BTreeSet::from([cw]);
    if observed == expected {
        return Ok(CheckOutcome::Pass);
    }
    Ok(CheckOutcome::Fail(Witness {
        profile: profile.clone(),
        transform: Transform::None,
        transformed: None,
        expected,
        observed,
        note: "candidate beating all others pairwise is not the unique winner".into(),
    }))
}

pub fn check_condorcet_loser(
    rule: &dyn VotingRule,
    profile: &Profile,
) -> Result<CheckOutcome, AxiomError> {
    let Some(cl) = rules::condorcet_loser(profile) else {
        return Ok(CheckOutcome::Skip);
    };
    let observed = rule.winners(profile)?;
    if !observed.contains(&cl) {
        return Ok(CheckOutcome::Pass);
    }
    let mut expected = observed.clone();
    expected.remove(&cl);
    Ok(CheckOutcome::Fail(Witness {
        profile: profile.clone(),
        transform: Transform::None,
        transformed: None,
        expected,
        observed,
        note: "candidate losing all pairwise contests is elected".into(),
    }))
}

/// Runs one axiom's check on one concrete profile, probing the systematic
/// transform family for the transform-based properties (every transposition
/// for neutrality; adjacent swaps and full reversal for anonymity; every
/// eligible upgrade for monotonicity; every loser removal).
pub fn check_axiom(
    rule: &dyn VotingRule,
    axiom: Axiom,
    profile: &Profile,
) -> Result<CheckOutcome, AxiomError> {
    probe(rule, axiom, profile, None)
}

/// Shape of the randomized search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub trials: u64,
    pub seed: u64,
    pub candidates: RangeInclusive<usize>,
    pub voters: RangeInclusive<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            trials: 200,
            seed: 0,
            candidates: 3..=5,
            voters: 3..=9,
        }
    }
}

/// Random profiles until a violation appears or the trial budget runs out.
/// Each trial draws from its own deterministic stream, so a verdict is a
/// pure function of the rule, the axiom, and the config. A found witness
/// is shrunk before being returned.
pub fn search_counterexample(
    rule: &dyn VotingRule,
    axiom: Axiom,
    config: &SearchConfig,
) -> Result<AxiomVerdict, AxiomError> {
    let mut skipped = 0;
    for trial in 0..config.trials {
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(config.seed, trial));
        let m = rng.random_range(config.candidates.clone());
        let n = rng.random_range(config.voters.clone());
        let mut profile = random_profile(m, n, &mut rng);
        if axiom == Axiom::Unanimity {
            let planted = rng.random_range(0..m);
            profile = plant_top(&profile, planted)?;
        }
        match probe(rule, axiom, &profile, Some(&mut rng))? {
            CheckOutcome::Pass => {}
            CheckOutcome::Skip => skipped += 1,
            CheckOutcome::Fail(witness) => {
                return Ok(AxiomVerdict {
                    axiom,
                    rule: rule.id(),
                    status: Status::Violated,
                    witness: Some(shrink(rule, axiom, witness)),
                    trials: trial + 1,
                    skipped,
                    seed: config.seed,
                });
            }
        }
    }
    Ok(AxiomVerdict {
        axiom,
        rule: rule.id(),
        status: Status::HoldsOnSample,
        witness: None,
        trials: config.trials,
        skipped,
        seed: config.seed,
    })
}

/// Re-derives the recorded violation from the witness; true when the rule
/// still misbehaves on it.
pub fn replay(
    rule: &dyn VotingRule,
    axiom: Axiom,
    witness: &Witness,
) -> Result<bool, AxiomError> {
    let before = rule.winners(&witness.profile)?;
    match axiom {
        Axiom::Neutrality => {
            let Transform::Relabel(rho) = &witness.transform else {
                return Ok(false);
            };
            let transformed = witness.profile.relabel_candidates(rho)?;
            let expected: BTreeSet<usize> = before.iter().map(|&c| rho.rank_of(c) - 1).collect();
            Ok(rule.winners(&transformed)? != expected)
        }
        Axiom::Anonymity => {
            let Transform::PermuteVoters(order) = &witness.transform else {
                return Ok(false);
            };
            let transformed = witness.profile.permute_voters(order)?;
            Ok(rule.winners(&transformed)? != before)
        }
        Axiom::Universality => Ok(before.is_empty()),
        Axiom::Unanimity => match witness.profile.unanimous_top() {
            Some(top) => Ok(before != BTreeSet::from([top])),
            None => Ok(false),
        },
        Axiom::Monotonicity => {
            let Transform::Upgrade { candidate, voter } = witness.transform else {
                return Ok(false);
            };
            if before != BTreeSet::from([candidate]) {
                return Ok(false);
            }
            let Some(upgraded) = upgrade_in_column(&witness.profile, candidate, voter)? else {
                return Ok(false);
            };
            Ok(!rule.winners(&upgraded)?.contains(&candidate))
        }
        Axiom::IndependenceToLosers => {
            let Transform::RemoveCandidate(l) = witness.transform else {
                return Ok(false);
            };
            if before.contains(&l) {
                return Ok(false);
            }
            let reduced = witness.profile.remove_candidate(l)?;
            let expected: BTreeSet<usize> = before
                .iter()
                .map(|&c| if c > l { c - 1 } else { c })
                .collect();
            Ok(rule.winners(&reduced)? != expected)
        }
        Axiom::CondorcetWinner => match rules::condorcet_winner(&witness.profile) {
            Some(cw) => Ok(before != BTreeSet::from([cw])),
            None => Ok(false),
        },
        Axiom::CondorcetLoser => match rules::condorcet_loser(&witness.profile) {
            Some(cl) => Ok(before.contains(&cl)),
            None => Ok(false),
        },
    }
}

/// Runs the axiom's check on one profile. With an rng the transform-based
/// properties probe one sampled transform; without one they probe a small
/// systematic family, which the shrinker relies on.
fn probe(
    rule: &dyn VotingRule,
    axiom: Axiom,
    profile: &Profile,
    rng: Option<&mut ChaCha8Rng>,
) -> Result<CheckOutcome, AxiomError> {
    match axiom {
        Axiom::Neutrality => {
            for rho in relabelings(profile.m(), rng) {
                match check_neutrality(rule, profile, &rho)? {
                    CheckOutcome::Pass => {}
                    other => return Ok(other),
                }
            }
            Ok(CheckOutcome::Pass)
        }
        Axiom::Anonymity => {
            for order in voter_orders(profile.n(), rng) {
                match check_anonymity(rule, profile, &order)? {
                    CheckOutcome::Pass => {}
                    other => return Ok(other),
                }
            }
            Ok(CheckOutcome::Pass)
        }
        Axiom::Universality => check_universality(rule, profile),
        Axiom::Unanimity => check_unanimity(rule, profile),
        Axiom::Monotonicity => check_monotonicity(rule, profile),
        Axiom::IndependenceToLosers => check_independence_losers(rule, profile),
        Axiom::CondorcetWinner => check_condorcet_winner(rule, profile),
        Axiom::CondorcetLoser => check_condorcet_loser(rule, profile),
    }
}

fn relabelings(m: usize, rng: Option<&mut ChaCha8Rng>) -> Vec<Ranking> {
    match rng {
        Some(rng) => vec![random_ranking(m, rng)],
        None => transpositions(m),
    }
}

fn transpositions(m: usize) -> Vec<Ranking> {
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let mut ranks: Vec<usize> = (1..=m).collect();
            ranks.swap(i, j);
            out.push(Ranking::from_ranks(ranks).expect("transposition"));
        }
    }
    out
}

fn voter_orders(n: usize, rng: Option<&mut ChaCha8Rng>) -> Vec<Vec<usize>> {
    match rng {
        Some(rng) => {
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(rng);
            vec![order]
        }
        None => {
            let mut out: Vec<Vec<usize>> = Vec::new();
            for i in 0..n.saturating_sub(1) {
                let mut order: Vec<usize> = (0..n).collect();
                order.swap(i, i + 1);
                out.push(order);
            }
            out.push((0..n).rev().collect());
            out
        }
    }
}

/// Greedy minimization: repeatedly drop the highest-indexed voter, then the
/// highest-indexed candidate, keeping any reduction that still violates.
/// Reductions are re-probed systematically, so the result stays a genuine
/// witness even though its transform may differ from the original one.
fn shrink(rule: &dyn VotingRule, axiom: Axiom, mut witness: Witness) -> Witness {
    loop {
        let profile = witness.profile.clone();
        let mut improved = None;
        if profile.n() > 1 {
            for v in (0..profile.n()).rev() {
                let columns: Vec<Ranking> = profile
                    .columns()
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != v)
                    .map(|(_, col)| col.clone())
                    .collect();
                let Ok(reduced) = Profile::new(columns) else {
                    continue;
                };
                if let Ok(CheckOutcome::Fail(w)) = probe(rule, axiom, &reduced, None) {
                    improved = Some(w);
                    break;
                }
            }
        }
        if improved.is_none() && profile.m() > 2 {
            for c in (0..profile.m()).rev() {
                let Ok(reduced) = profile.remove_candidate(c) else {
                    continue;
                };
                if let Ok(CheckOutcome::Fail(w)) = probe(rule, axiom, &reduced, None) {
                    improved = Some(w);
                    break;
                }
            }
        }
        match improved {
            Some(w) => witness = w,
            None => return witness,
        }
    }
}

/// Uniformly random ranking of `m >= 1` candidates.
pub fn random_ranking(m: usize, rng: &mut impl Rng) -> Ranking {
    let mut ranks: Vec<usize> = (1..=m).collect();
    ranks.shuffle(rng);
    Ranking::from_ranks(ranks).expect("shuffled permutation")
}

/// Profile of `n >= 1` independent uniform rankings over `m` candidates.
pub fn random_profile(m: usize, n: usize, rng: &mut impl Rng) -> Profile {
    let columns = (0..n).map(|_| random_ranking(m, rng)).collect();
    Profile::new(columns).expect("nonempty profile")
}

/// Forces `candidate` to rank 1 in every column by swapping it with each
/// column's current top.
pub fn plant_top(profile: &Profile, candidate: usize) -> Result<Profile, AxiomError> {
    let columns = profile
        .columns()
        .iter()
        .map(|col| {
            let r = col.rank_of(candidate);
            let mut ranks = col.ranks().to_vec();
            if r != 1 {
                ranks[col.top_candidate()] = r;
                ranks[candidate] = 1;
            }
            Ranking::from_ranks(ranks)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Profile::new(columns)?)
}

pub(crate) fn trial_seed(seed: u64, trial: u64) -> u64 {
    // splitmix64 of (seed, trial): independent stream per trial.
    let mut z = seed.wrapping_add((trial + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cases;
    use crate::metrics::Distance;

    /// Elects candidate 0 regardless of the ballots.
    struct FixedFirst;

    impl VotingRule for FixedFirst {
        fn id(&self) -> String {
            "fixed-first".into()
        }
        fn winners(&self, _: &Profile) -> Result<BTreeSet<usize>, AxiomError> {
            Ok(BTreeSet::from([0]))
        }
    }

    /// Elects the first voter's top candidate.
    struct Dictator;

    impl VotingRule for Dictator {
        fn id(&self) -> String {
            "dictator".into()
        }
        fn winners(&self, profile: &Profile) -> Result<BTreeSet<usize>, AxiomError> {
            Ok(BTreeSet::from([profile.column(0).top_candidate()]))
        }
    }

    /// Elects the pairwise-dominated candidate when one exists.
    struct LoserLover;

    impl VotingRule for LoserLover {
        fn id(&self) -> String {
            "loser-lover".into()
        }
        fn winners(&self, profile: &Profile) -> Result<BTreeSet<usize>, AxiomError> {
            match rules::condorcet_loser(profile) {
                Some(cl) => Ok(BTreeSet::from([cl])),
                None => Ok(rules::plurality(profile).winners),
            }
        }
    }

    fn deepest_rule(distance: Distance, p: f64) -> DeepestRule {
        DeepestRule::new(FrechetParams::new(distance, p).unwrap())
    }

    fn quick_config(trials: u64) -> SearchConfig {
        SearchConfig {
            trials,
            seed: 7,
            candidates: 3..=4,
            voters: 3..=7,
        }
    }

    #[test]
    fn neutrality_search_flags_label_bias() {
        let verdict =
            search_counterexample(&FixedFirst, Axiom::Neutrality, &quick_config(50)).unwrap();
        assert_eq!(verdict.status, Status::Violated);
        let witness = verdict.witness.unwrap();
        assert!(replay(&FixedFirst, Axiom::Neutrality, &witness).unwrap());
        // Shrinks to a single voter over two candidates.
        assert_eq!(witness.profile.n(), 1);
        assert_eq!(witness.profile.m(), 2);
    }

    #[test]
    fn anonymity_search_flags_dictatorship() {
        let verdict =
            search_counterexample(&Dictator, Axiom::Anonymity, &quick_config(50)).unwrap();
        assert_eq!(verdict.status, Status::Violated);
        let witness = verdict.witness.unwrap();
        assert!(replay(&Dictator, Axiom::Anonymity, &witness).unwrap());
        // A dictatorship is neutral, so that search comes back clean.
        let verdict =
            search_counterexample(&Dictator, Axiom::Neutrality, &quick_config(50)).unwrap();
        assert_eq!(verdict.status, Status::HoldsOnSample);
    }

    #[test]
    fn condorcet_loser_search_flags_loser_electing_rule() {
        let verdict =
            search_counterexample(&LoserLover, Axiom::CondorcetLoser, &quick_config(100)).unwrap();
        assert_eq!(verdict.status, Status::Violated);
        assert!(replay(&LoserLover, Axiom::CondorcetLoser, &verdict.witness.unwrap()).unwrap());
    }

    #[test]
    fn unanimity_holds_for_pair_disagreement_rule() {
        let rule = deepest_rule(Distance::Kendall, 1.0);
        let verdict =
            search_counterexample(&rule, Axiom::Unanimity, &quick_config(40)).unwrap();
        assert_eq!(verdict.status, Status::HoldsOnSample);
        assert_eq!(verdict.skipped, 0);
    }

    #[test]
    fn unanimity_fails_for_max_displacement() {
        let profile = cases::maxnorm_unanimity_gap();
        assert_eq!(profile.unanimous_top(), Some(0));
        let rule = deepest_rule(Distance::minkowski(f64::INFINITY).unwrap(), 1.0);
        let outcome = check_unanimity(&rule, &profile).unwrap();
        let CheckOutcome::Fail(witness) = outcome else {
            panic!("expected a violation, got {outcome:?}");
        };
        assert_eq!(witness.expected, BTreeSet::from([0]));
        assert_eq!(witness.observed, BTreeSet::from([0, 5]));
        assert!(replay(&rule, Axiom::Unanimity, &witness).unwrap());
    }

    #[test]
    fn pinned_monotonicity_violation() {
        let (before, _) = cases::upgrade_flip();
        let rule = deepest_rule(Distance::Hamming, 1.0);
        let outcome = check_monotonicity(&rule, &before).unwrap();
        let CheckOutcome::Fail(witness) = outcome else {
            panic!("expected a violation, got {outcome:?}");
        };
        let Transform::Upgrade { candidate, .. } = witness.transform else {
            panic!("expected an upgrade transform");
        };
        assert!(!witness.observed.contains(&candidate));
        assert!(replay(&rule, Axiom::Monotonicity, &witness).unwrap());
    }

    #[test]
    fn pinned_independence_violation() {
        let rule = deepest_rule(Distance::Kendall, 1.0);
        let outcome = check_independence_losers(&rule, &cases::loser_trio()).unwrap();
        let CheckOutcome::Fail(witness) = outcome else {
            panic!("expected a violation, got {outcome:?}");
        };
        assert_eq!(witness.transform, Transform::RemoveCandidate(2));
        assert_eq!(witness.transformed, Some(cases::loser_pair()));
        assert_eq!(witness.expected, BTreeSet::from([1]));
        assert_eq!(witness.observed, BTreeSet::from([0]));
        assert!(replay(&rule, Axiom::IndependenceToLosers, &witness).unwrap());
    }

    #[test]
    fn condorcet_checks_on_pinned_profiles() {
        let gap = cases::condorcet_rule_gap();
        let kendall = deepest_rule(Distance::Kendall, 1.0);
        assert_eq!(
            check_condorcet_winner(&kendall, &gap).unwrap(),
            CheckOutcome::Pass
        );
        let hamming = deepest_rule(Distance::Hamming, 1.0);
        let CheckOutcome::Fail(witness) = check_condorcet_winner(&hamming, &gap).unwrap() else {
            panic!("expected a violation");
        };
        assert_eq!(witness.expected, BTreeSet::from([0]));
        assert_eq!(witness.observed, BTreeSet::from([1]));
        assert!(replay(&hamming, Axiom::CondorcetWinner, &witness).unwrap());
        assert_eq!(
            check_condorcet_loser(&kendall, &cases::loser_pair()).unwrap(),
            CheckOutcome::Pass
        );
        // A majority cycle exercises neither direction.
        assert_eq!(
            check_condorcet_winner(&kendall, &cases::loser_trio()).unwrap(),
            CheckOutcome::Skip
        );
    }

    #[test]
    fn searches_are_deterministic() {
        let config = quick_config(60);
        let a = search_counterexample(&FixedFirst, Axiom::Neutrality, &config).unwrap();
        let b = search_counterexample(&FixedFirst, Axiom::Neutrality, &config).unwrap();
        assert_eq!(a, b);
        let rule = deepest_rule(Distance::Kendall, 1.0);
        let a = search_counterexample(&rule, Axiom::CondorcetLoser, &config).unwrap();
        let b = search_counterexample(&rule, Axiom::CondorcetLoser, &config).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.status, Status::HoldsOnSample);
    }

    #[test]
    fn axiom_labels_round_trip() {
        for axiom in Axiom::ALL {
            assert_eq!(axiom.label().parse::<Axiom>().unwrap(), axiom);
        }
        assert_eq!(
            "independence_to_losers".parse::<Axiom>().unwrap(),
            Axiom::IndependenceToLosers
        );
        assert!("deepness".parse::<Axiom>().is_err());
    }
}
