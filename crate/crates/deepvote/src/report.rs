//! Machine- and human-readable result reports.
//!
//! CLI output flows through one [`Report`]. JSON form is
//! `{"schema": 1, "items": [...]}`, each item tagged with a `kind`; text
//! form prints the same content as short labeled blocks. Winner sets and
//! score maps are emitted in candidate-index order, deepest rankings in
//! lexicographic rank-vector order, so equal inputs yield byte-equal
//! reports.

use crate::axioms::{AxiomVerdict, Status, Transform, Witness};
use crate::continuous::{DeepestBox, EvaluationPoint};
use crate::frechet::{DeepestResult, FrechetParams};
use crate::io;
use crate::ranking::{Profile, Ranking};
use crate::rules::RuleOutcome;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

/// Version of the JSON layout.
pub const REPORT_SCHEMA: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub items: Vec<ReportItem>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ReportItem {
    Deepest {
        rule: String,
        winners: Vec<String>,
        unique_winner: bool,
        deepest: Vec<String>,
        u_min: f64,
        depth_max: f64,
        exact: bool,
    },
    Rule {
        rule: String,
        winners: Vec<String>,
        scores: BTreeMap<String, f64>,
    },
    Comparison {
        rule: String,
        deepest_rule: String,
        rule_winners: Vec<String>,
        deepest_winners: Vec<String>,
        agree: bool,
    },
    Axiom {
        axiom: String,
        rule: String,
        status: String,
        trials: u64,
        skipped: u64,
        seed: u64,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness: Option<WitnessReport>,
    },
    ContinuousL2 {
        point: BTreeMap<String, f64>,
        winners: Vec<String>,
    },
    ContinuousL1 {
        lower: BTreeMap<String, f64>,
        upper: BTreeMap<String, f64>,
        winners: Vec<String>,
    },
    Profile {
        labels: Vec<String>,
        ballots: Vec<String>,
    },
    Replication {
        passed: bool,
        detail: serde_json::Value,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub ballots: Vec<String>,
    pub transform: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transformed_ballots: Option<Vec<String>>,
    pub expected: Vec<String>,
    pub observed: Vec<String>,
    pub note: String,
}

impl Default for Report {
    fn default() -> Self {
        Report::new()
    }
}

impl Report {
    pub fn new() -> Report {
        Report {
            schema: REPORT_SCHEMA,
            items: Vec::new(),
        }
    }

    pub fn push_deepest(
        &mut self,
        labels: &[String],
        params: &FrechetParams,
        result: &DeepestResult,
    ) {
        self.items.push(ReportItem::Deepest {
            rule: params.rule_label(),
            winners: label_set(&result.winners, labels),
            unique_winner: result.unique_winner,
            deepest: result
                .deepest
                .iter()
                .map(|s| order_string(s, labels))
                .collect(),
            u_min: result.u_min,
            depth_max: result.depth_max,
            exact: result.exact,
        });
    }

    pub fn push_rule(&mut self, labels: &[String], rule: &str, outcome: &RuleOutcome) {
        let scores = labels
            .iter()
            .cloned()
            .zip(outcome.scores.iter().copied())
            .collect();
        self.items.push(ReportItem::Rule {
            rule: rule.to_string(),
            winners: label_set(&outcome.winners, labels),
            scores,
        });
    }

    pub fn push_comparison(
        &mut self,
        labels: &[String],
        rule: &str,
        deepest_rule: &str,
        rule_winners: &BTreeSet<usize>,
        deepest_winners: &BTreeSet<usize>,
    ) {
        self.items.push(ReportItem::Comparison {
            rule: rule.to_string(),
            deepest_rule: deepest_rule.to_string(),
            rule_winners: label_set(rule_winners, labels),
            deepest_winners: label_set(deepest_winners, labels),
            agree: rule_winners == deepest_winners,
        });
    }

    /// Labels apply when they match the witness profile; shrinking can
    /// leave the witness smaller than the input election, in which case
    /// positional labels take over.
    pub fn push_axiom(&mut self, labels: Option<&[String]>, verdict: &AxiomVerdict) {
        let witness = verdict.witness.as_ref().map(|w| {
            let labels = match labels {
                Some(l) if l.len() == w.profile.m() => l.to_vec(),
                _ => io::default_labels(w.profile.m()),
            };
            witness_report(w, &labels)
        });
        self.items.push(ReportItem::Axiom {
            axiom: verdict.axiom.label().to_string(),
            rule: verdict.rule.clone(),
            status: match verdict.status {
                Status::HoldsOnSample => "holds-on-sample".to_string(),
                Status::Violated => "violated".to_string(),
            },
            trials: verdict.trials,
            skipped: verdict.skipped,
            seed: verdict.seed,
            witness,
        });
    }

    pub fn push_continuous_point(
        &mut self,
        labels: &[String],
        point: &EvaluationPoint,
        winners: &BTreeSet<usize>,
    ) {
        self.items.push(ReportItem::ContinuousL2 {
            point: coord_map(&point.coords, labels),
            winners: label_set(winners, labels),
        });
    }

    pub fn push_continuous_box(
        &mut self,
        labels: &[String],
        deepest: &DeepestBox,
        winners: &BTreeSet<usize>,
    ) {
        self.items.push(ReportItem::ContinuousL1 {
            lower: coord_map(&deepest.lower, labels),
            upper: coord_map(&deepest.upper, labels),
            winners: label_set(winners, labels),
        });
    }

    pub fn push_profile(&mut self, labels: &[String], profile: &Profile) {
        self.items.push(ReportItem::Profile {
            labels: labels.to_vec(),
            ballots: ballot_lines(labels, profile),
        });
    }

    pub fn push_replication(&mut self, passed: bool, detail: serde_json::Value) {
        self.items.push(ReportItem::Replication { passed, detail });
    }
}

/// Renders the report in the requested format, newline-terminated.
pub fn emit(report: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut out = serde_json::to_string_pretty(report).expect("serializable report");
            out.push('\n');
            out
        }
        ReportFormat::Text => render_text(report),
    }
}

/// Candidate labels for an index set, in index order.
pub fn label_set(candidates: &BTreeSet<usize>, labels: &[String]) -> Vec<String> {
    candidates.iter().map(|&c| labels[c].clone()).collect()
}

/// `A > B > C` form of one ranking.
pub fn order_string(ranking: &Ranking, labels: &[String]) -> String {
    let names: Vec<&str> = ranking
        .inverse()
        .ranks()
        .iter()
        .map(|&c| labels[c - 1].as_str())
        .collect();
    names.join(" > ")
}

/// `count: A > B > C` lines, consecutive equal ballots grouped.
pub fn ballot_lines(labels: &[String], profile: &Profile) -> Vec<String> {
    io::to_orders(labels, profile)
        .lines()
        .map(str::to_string)
        .collect()
}

fn coord_map(coords: &[f64], labels: &[String]) -> BTreeMap<String, f64> {
    labels
        .iter()
        .cloned()
        .zip(coords.iter().copied())
        .collect()
}

fn transform_string(transform: &Transform, labels: &[String]) -> String {
    match transform {
        Transform::Relabel(rho) => {
            let moves: Vec<String> = (0..rho.m())
                .map(|c| format!("{}->{}", labels[c], labels[rho.rank_of(c) - 1]))
                .collect();
            format!("relabel candidates: {}", moves.join(", "))
        }
        Transform::PermuteVoters(order) => {
            let shown: Vec<String> = order.iter().map(|v| (v + 1).to_string()).collect();
            format!("reorder voters to [{}]", shown.join(", "))
        }
        Transform::Upgrade { candidate, voter } => {
            format!("voter {} moves {} up one place", voter + 1, labels[*candidate])
        }
        Transform::RemoveCandidate(l) => format!("remove non-winner {}", labels[*l]),
        Transform::None => "none".to_string(),
    }
}

fn witness_report(witness: &Witness, labels: &[String]) -> WitnessReport {
    WitnessReport {
        ballots: ballot_lines(labels, &witness.profile),
        transform: transform_string(&witness.transform, labels),
        transformed_ballots: witness
            .transformed
            .as_ref()
            .map(|p| ballot_lines(labels, p)),
        expected: label_set(&witness.expected, labels),
        observed: label_set(&witness.observed, labels),
        note: witness.note.clone(),
    }
}

fn join(names: &[String]) -> String {
    if names.is_empty() {
        "(none)".to_string()
    } else {
        names.join(", ")
    }
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    for (i, item) in report.items.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        match item {
            ReportItem::Deepest {
                rule,
                winners,
                unique_winner,
                deepest,
                u_min,
                depth_max,
                exact,
            } => {
                writeln!(out, "{rule}").unwrap();
                let tie = if *unique_winner { "" } else { " (tied)" };
                writeln!(out, "  winners: {}{tie}", join(winners)).unwrap();
                writeln!(out, "  deepest rankings: {}", deepest.join("; ")).unwrap();
                let arithmetic = if *exact { "exact" } else { "float" };
                writeln!(out, "  mean functional: {u_min} ({arithmetic})").unwrap();
                writeln!(out, "  max depth: {depth_max}").unwrap();
            }
            ReportItem::Rule {
                rule,
                winners,
                scores,
            } => {
                writeln!(out, "{rule}").unwrap();
                writeln!(out, "  winners: {}", join(winners)).unwrap();
                let shown: Vec<String> =
                    scores.iter().map(|(l, s)| format!("{l}={s}")).collect();
                writeln!(out, "  scores: {}", shown.join(" ")).unwrap();
            }
            ReportItem::Comparison {
                rule,
                deepest_rule,
                rule_winners,
                deepest_winners,
                agree,
            } => {
                writeln!(out, "compare {rule} vs {deepest_rule}").unwrap();
                writeln!(out, "  {rule} winners: {}", join(rule_winners)).unwrap();
                writeln!(out, "  deepest winners: {}", join(deepest_winners)).unwrap();
                writeln!(out, "  agree: {}", if *agree { "yes" } else { "no" }).unwrap();
            }
            ReportItem::Axiom {
                axiom,
                rule,
                status,
                trials,
                skipped,
                seed,
                witness,
            } => {
                writeln!(
                    out,
                    "axiom {axiom} on {rule}: {status} ({trials} trials, {skipped} skipped, seed {seed})"
                )
                .unwrap();
                if let Some(w) = witness {
                    for line in &w.ballots {
                        writeln!(out, "  ballot {line}").unwrap();
                    }
                    writeln!(out, "  transform: {}", w.transform).unwrap();
                    if let Some(lines) = &w.transformed_ballots {
                        for line in lines {
                            writeln!(out, "  after {line}").unwrap();
                        }
                    }
                    writeln!(out, "  expected: {}", join(&w.expected)).unwrap();
                    writeln!(out, "  observed: {}", join(&w.observed)).unwrap();
                    writeln!(out, "  note: {}", w.note).unwrap();
                }
            }
            ReportItem::ContinuousL2 { point, winners } => {
                writeln!(out, "squared-displacement deepest point").unwrap();
                let shown: Vec<String> =
                    point.iter().map(|(l, x)| format!("{l}={x}")).collect();
                writeln!(out, "  point: {}", shown.join(" ")).unwrap();
                writeln!(out, "  winners: {}", join(winners)).unwrap();
            }
            ReportItem::ContinuousL1 {
                lower,
                upper,
                winners,
            } => {
                writeln!(out, "absolute-displacement deepest box").unwrap();
                for (label, lo) in lower {
                    let hi = upper[label];
                    writeln!(out, "  {label} in [{lo}, {hi}]").unwrap();
                }
                writeln!(out, "  winners: {}", join(winners)).unwrap();
            }
            ReportItem::Profile { labels, ballots } => {
                writeln!(out, "profile over {}", labels.join(", ")).unwrap();
                for line in ballots {
                    writeln!(out, "  {line}").unwrap();
                }
            }
            ReportItem::Replication { passed, detail } => {
                writeln!(
                    out,
                    "replication: {}",
                    if *passed { "pass" } else { "FAIL" }
                )
                .unwrap();
                let pretty =
                    serde_json::to_string_pretty(detail).expect("serializable detail");
                for line in pretty.lines() {
                    writeln!(out, "  {line}").unwrap();
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cases;
    use crate::frechet::deepest_set;
    use crate::metrics::Distance;
    use crate::rules;

    fn labels(m: usize) -> Vec<String> {
        io::default_labels(m)
    }

    #[test]
    fn json_shape_is_stable() {
        let profile = cases::kendall_power_flip();
        let params = FrechetParams::new(Distance::Kendall, 1.0).unwrap();
        let result = deepest_set(&profile, &params).unwrap();
        let mut report = Report::new();
        report.push_deepest(&labels(3), &params, &result);
        report.push_rule(&labels(3), "borda", &rules::borda(&profile));
        let json = emit(&report, ReportFormat::Json);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["schema"], 1);
        assert_eq!(value["items"][0]["kind"], "deepest");
        assert_eq!(value["items"][0]["winners"][0], "A");
        assert_eq!(value["items"][0]["u_min"], 0.8);
        assert_eq!(value["items"][1]["kind"], "rule");
        assert_eq!(value["items"][1]["scores"]["B"], 9.0);
    }

    #[test]
    fn deterministic_output() {
        let profile = cases::condorcet_rule_gap();
        let params = FrechetParams::new(Distance::Hamming, 1.0).unwrap();
        let result = deepest_set(&profile, &params).unwrap();
        let render = |fmt| {
            let mut report = Report::new();
            report.push_deepest(&labels(3), &params, &result);
            emit(&report, fmt)
        };
        assert_eq!(render(ReportFormat::Json), render(ReportFormat::Json));
        assert_eq!(render(ReportFormat::Text), render(ReportFormat::Text));
    }

    #[test]
    fn text_blocks_name_winners() {
        let profile = cases::bucklin_footrule_gap();
        let mut report = Report::new();
        report.push_rule(&labels(4), "bucklin", &rules::bucklin(&profile));
        let text = emit(&report, ReportFormat::Text);
        assert!(text.contains("bucklin"));
        assert!(text.contains("winners: B"));
        assert!(text.contains("B=2"));
    }

    #[test]
    fn order_strings_read_top_down() {
        let ranking = Ranking::from_ranks(vec![2, 1, 3]).unwrap();
        assert_eq!(order_string(&ranking, &labels(3)), "B > A > C");
    }

    #[test]
    fn axiom_item_with_witness() {
        use crate::axioms::{self, Axiom, CheckOutcome, DeepestRule};
        let rule = DeepestRule::new(FrechetParams::new(Distance::Kendall, 1.0).unwrap());
        let CheckOutcome::Fail(witness) =
            axioms::check_independence_losers(&rule, &cases::loser_trio()).unwrap()
        else {
            panic!("expected a violation");
        };
        let verdict = axioms::AxiomVerdict {
            axiom: Axiom::IndependenceToLosers,
            rule: rule.params.rule_label(),
            status: axioms::Status::Violated,
            witness: Some(witness),
            trials: 1,
            skipped: 0,
            seed: 0,
        };
        let mut report = Report::new();
        report.push_axiom(Some(&labels(3)), &verdict);
        let json = emit(&report, ReportFormat::Json);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        let item = &value["items"][0];
        assert_eq!(item["status"], "violated");
        assert_eq!(item["witness"]["transform"], "remove non-winner C");
        assert_eq!(item["witness"]["expected"][0], "B");
        let text = emit(&report, ReportFormat::Text);
        assert!(text.contains("remove non-winner C"));
    }
}
