//! Thin command-line front end over the deepvote library.
//!
//! Exit codes: 0 on success, 1 when a comparison disagrees or a property
//! is violated or the validation run fails, 2 on bad input.

use clap::{Args, Parser, Subcommand, ValueEnum};
use deepvote::axioms::{
    check_axiom, search_counterexample, Axiom, AxiomVerdict, CheckOutcome, Classical, DeepestRule,
    SearchConfig, Status, VotingRule,
};
use deepvote::frechet::deepest_set_capped;
use deepvote::io::{default_labels, detect_and_parse, to_matrix_csv, ProfileDocument};
use deepvote::ranking::DEFAULT_ENUMERATION_CAP;
use deepvote::replication;
use deepvote::report::{emit, Report, ReportFormat};
use deepvote::rules;
use deepvote::{Distance, FrechetParams, WeightMatrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::io::Read;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "deepvote",
    version,
    about = "Ranking aggregation by deepest voting",
    long_about = "Computes deepest-voting outcomes (minimizers of the averaged p-th power of a \
                  permutation distance), classical rule outcomes, and mechanical checks of \
                  their fairness properties."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Elect the winners of one deepest rule on one ballot file.
    Winner(RuleArgs),
    /// Print the full deepest set of one rule on one ballot file.
    Deepest(RuleArgs),
    /// Compare a classical rule with a deepest rule on one ballot file.
    Compare(CompareArgs),
    /// Check one fairness property, on a ballot file or by seeded search.
    Axioms(AxiomsArgs),
    /// Replay the frozen validation suite and report every outcome.
    ReproducePaper(ReproduceArgs),
    /// Generate a seeded random ballot file as matrix CSV.
    Gen(GenArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DistanceKind {
    Kendall,
    Hamming,
    Cayley,
    Minkowski,
    WeightedHamming,
    WeightedMinkowski,
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleName {
    Borda,
    Bucklin,
    Plurality,
    Antiplurality,
    Kemeny,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> ReportFormat {
        match f {
            Format::Text => ReportFormat::Text,
            Format::Json => ReportFormat::Json,
        }
    }
}

#[derive(Args)]
struct DistanceArgs {
    /// Distance between rankings.
    #[arg(long, value_enum, default_value_t = DistanceKind::Kendall)]
    distance: DistanceKind,
    /// Minkowski order q >= 1; "inf" selects the maximum displacement.
    #[arg(long, default_value_t = 1.0)]
    q: f64,
    /// Exponent p >= 1 applied to the distance inside the average.
    #[arg(long, default_value_t = 1.0)]
    p: f64,
    /// Weight matrix CSV, required by the weighted distances.
    #[arg(long)]
    weights: Option<String>,
    /// Largest candidate count the exhaustive enumeration accepts.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    max_m: usize,
}

#[derive(Args)]
struct RuleArgs {
    /// Ballot file, matrix CSV or count-prefixed orders; "-" reads stdin.
    input: String,
    #[command(flatten)]
    distance: DistanceArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct CompareArgs {
    /// Ballot file, matrix CSV or count-prefixed orders; "-" reads stdin.
    input: String,
    /// Classical rule to compare against.
    #[arg(long, value_enum)]
    rule: RuleName,
    #[command(flatten)]
    distance: DistanceArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct AxiomsArgs {
    /// Ballot file to check directly; omit it to search random profiles.
    input: Option<String>,
    /// Property to check: neutrality, anonymity, universality, unanimity,
    /// monotonicity, independence-to-losers, condorcet-winner,
    /// condorcet-loser.
    #[arg(long)]
    axiom: String,
    /// Check a classical rule instead of a deepest rule.
    #[arg(long, value_enum)]
    rule: Option<RuleName>,
    #[command(flatten)]
    distance: DistanceArgs,
    /// Random profiles to try when searching.
    #[arg(long, default_value_t = 200)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ReproduceArgs {
    /// Trials per randomized suite.
    #[arg(long, default_value_t = replication::DEFAULT_TRIALS)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct GenArgs {
    /// Number of candidates.
    #[arg(long, default_value_t = 4)]
    m: usize,
    /// Number of voters.
    #[arg(long, default_value_t = 7)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// Anything that should stop the run with exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> InputError {
        InputError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Winner(args) => run_deepest(&args, false),
        Command::Deepest(args) => run_deepest(&args, true),
        Command::Compare(args) => run_compare(&args),
        Command::Axioms(args) => run_axioms(&args),
        Command::ReproducePaper(args) => run_reproduce(&args),
        Command::Gen(args) => run_gen(&args),
    };
    match outcome {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_profile(path: &str) -> Result<ProfileDocument, InputError> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| InputError(format!("{path}: {e}")))?
    };
    Ok(detect_and_parse(&text)?)
}

fn build_distance(args: &DistanceArgs) -> Result<Distance, InputError> {
    let weights = match &args.weights {
        Some(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| InputError(format!("{path}: {e}")))?;
            Some(WeightMatrix::from_csv_str(&text)?)
        }
        None => None,
    };
    let needs_weights = matches!(
        args.distance,
        DistanceKind::WeightedHamming | DistanceKind::WeightedMinkowski
    );
    if weights.is_some() && !needs_weights {
        return Err(InputError(
            "--weights only applies to the weighted distances".into(),
        ));
    }
    let take_weights = || {
        weights
            .clone()
            .ok_or_else(|| InputError("this distance requires --weights".into()))
    };
    Ok(match args.distance {
        DistanceKind::Kendall => Distance::Kendall,
        DistanceKind::Hamming => Distance::Hamming,
        DistanceKind::Cayley => Distance::Cayley,
        DistanceKind::Minkowski => Distance::minkowski(args.q)?,
        DistanceKind::WeightedHamming => Distance::WeightedHamming {
            weights: take_weights()?,
        },
        DistanceKind::WeightedMinkowski => Distance::weighted_minkowski(args.q, take_weights()?)?,
    })
}

fn build_params(args: &DistanceArgs) -> Result<FrechetParams, InputError> {
    Ok(FrechetParams::new(build_distance(args)?, args.p)?)
}

fn run_deepest(args: &RuleArgs, echo_profile: bool) -> Result<ExitCode, InputError> {
    let doc = load_profile(&args.input)?;
    let params = build_params(&args.distance)?;
    let result = deepest_set_capped(&doc.profile, &params, args.distance.max_m)?;
    let mut report = Report::new();
    if echo_profile {
        report.push_profile(&doc.labels, &doc.profile);
    }
    report.push_deepest(&doc.labels, &params, &result);
    print!("{}", emit(&report, args.format.into()));
    Ok(ExitCode::SUCCESS)
}

fn classical_outcome(
    rule: RuleName,
    doc: &ProfileDocument,
    cap: usize,
) -> Result<(String, rules::RuleOutcome), InputError> {
    Ok(match rule {
        RuleName::Borda => ("borda".into(), rules::borda(&doc.profile)),
        RuleName::Bucklin => ("bucklin".into(), rules::bucklin(&doc.profile)),
        RuleName::Plurality => ("plurality".into(), rules::plurality(&doc.profile)),
        RuleName::Antiplurality => ("antiplurality".into(), rules::antiplurality(&doc.profile)),
        RuleName::Kemeny => ("kemeny".into(), rules::kemeny_capped(&doc.profile, cap)?),
    })
}

fn run_compare(args: &CompareArgs) -> Result<ExitCode, InputError> {
    let doc = load_profile(&args.input)?;
    let cap = args.distance.max_m;
    let (rule_id, outcome) = classical_outcome(args.rule, &doc, cap)?;
    let params = build_params(&args.distance)?;
    let result = deepest_set_capped(&doc.profile, &params, cap)?;
    // Antiplurality corresponds to the bottom of the deepest rankings, so
    // its comparison reads winners off the last place instead of the first.
    let (deepest_label, deepest_winners): (String, BTreeSet<usize>) =
        if matches!(args.rule, RuleName::Antiplurality) {
            (
                format!("last-ranked of {}", params.rule_label()),
                result.deepest.iter().map(|r| r.bottom_candidate()).collect(),
            )
        } else {
            (params.rule_label(), result.winners.clone())
        };
    let mut report = Report::new();
    report.push_rule(&doc.labels, &rule_id, &outcome);
    report.push_deepest(&doc.labels, &params, &result);
    report.push_comparison(
        &doc.labels,
        &rule_id,
        &deepest_label,
        &outcome.winners,
        &deepest_winners,
    );
    print!("{}", emit(&report, args.format.into()));
    if outcome.winners == deepest_winners {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn run_axioms(args: &AxiomsArgs) -> Result<ExitCode, InputError> {
    let axiom = Axiom::from_str(&args.axiom).map_err(InputError)?;
    let rule: Box<dyn VotingRule> = match args.rule {
        Some(RuleName::Borda) => Box::new(Classical::Borda),
        Some(RuleName::Bucklin) => Box::new(Classical::Bucklin),
        Some(RuleName::Plurality) => Box::new(Classical::Plurality),
        Some(RuleName::Antiplurality) => Box::new(Classical::Antiplurality),
        Some(RuleName::Kemeny) => Box::new(Classical::Kemeny),
        None => Box::new(DeepestRule {
            params: build_params(&args.distance)?,
            cap: args.distance.max_m,
        }),
    };
    let mut report = Report::new();
    let (verdict, labels) = match &args.input {
        Some(path) => {
            let doc = load_profile(path)?;
            let outcome = check_axiom(rule.as_ref(), axiom, &doc.profile)
                .map_err(|e| InputError(e.to_string()))?;
            let (status, witness, skipped) = match outcome {
                CheckOutcome::Pass => (Status::HoldsOnSample, None, 0),
                CheckOutcome::Skip => (Status::HoldsOnSample, None, 1),
                CheckOutcome::Fail(w) => (Status::Violated, Some(w), 0),
            };
            let verdict = AxiomVerdict {
                axiom,
                rule: rule.id(),
                status,
                witness,
                trials: 1,
                skipped,
                seed: args.seed,
            };
            (verdict, Some(doc.labels))
        }
        None => {
            let config = SearchConfig {
                trials: args.trials,
                seed: args.seed,
                ..SearchConfig::default()
            };
            let verdict = search_counterexample(rule.as_ref(), axiom, &config)
                .map_err(|e| InputError(e.to_string()))?;
            (verdict, None)
        }
    };
    let violated = verdict.status == Status::Violated;
    report.push_axiom(labels.as_deref(), &verdict);
    print!("{}", emit(&report, args.format.into()));
    if violated {
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn run_reproduce(args: &ReproduceArgs) -> Result<ExitCode, InputError> {
    let doc = replication::run(args.trials, args.seed);
    match args.format {
        Format::Text => print!("{}", replication::render_text(&doc)),
        Format::Json => {
            let mut report = Report::new();
            let detail = serde_json::to_value(&doc).expect("replication document serializes");
            report.push_replication(doc.passed, detail);
            print!("{}", emit(&report, ReportFormat::Json));
        }
    }
    if doc.passed {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn run_gen(args: &GenArgs) -> Result<ExitCode, InputError> {
    if args.m == 0 || args.n == 0 {
        return Err(InputError("--m and --n must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let profile = deepvote::axioms::random_profile(args.m, args.n, &mut rng);
    print!("{}", to_matrix_csv(&default_labels(args.m), &profile));
    Ok(ExitCode::SUCCESS)
}
