//! Randomized counterexample search over social choice properties.
//!
//! Some depth-based rules provably satisfy a property, some provably fail
//! it, and for some the answer depends on the exponent. This example runs
//! the searcher on three instructive cases, prints any shrunk witness it
//! finds, and replays the witness to confirm it still violates.
//!
//! Run with `cargo run -p deepvote --example axiom_search`.

use deepvote::axioms::{
    replay, search_counterexample, Axiom, DeepestRule, SearchConfig, Status, Transform,
};
use deepvote::io::default_labels;
use deepvote::{Distance, FrechetParams};

fn describe(transform: &Transform, labels: &[String]) -> String {
    match transform {
        Transform::Relabel(rho) => format!("relabel candidates by {:?}", rho.ranks()),
        Transform::PermuteVoters(order) => format!("permute voters by {order:?}"),
        Transform::Upgrade { candidate, voter } => format!(
            "voter {} moves {} up one place",
            voter + 1,
            labels[*candidate]
        ),
        Transform::RemoveCandidate(c) => format!("remove never-winning {}", labels[*c]),
        Transform::None => "none".into(),
    }
}

fn search(distance: Distance, p: f64, axiom: Axiom) -> Result<(), Box<dyn std::error::Error>> {
    let rule = DeepestRule::new(FrechetParams::new(distance, p)?);
    let config = SearchConfig {
        trials: 400,
        seed: 7,
        ..SearchConfig::default()
    };
    let verdict = search_counterexample(&rule, axiom, &config)?;

    println!("\n{} / {}:", verdict.rule, axiom.label());
    match verdict.status {
        Status::HoldsOnSample => println!(
            "  no violation in {} trials ({} could not exercise the property)",
            verdict.trials, verdict.skipped
        ),
        Status::Violated => {
            let w = verdict.witness.expect("violated verdicts carry a witness");
            let labels = default_labels(w.profile.m());
            println!("  violated at trial {} after shrinking:", verdict.trials);
            println!(
                "    profile: {} candidates, {} voters",
                w.profile.m(),
                w.profile.n()
            );
            for (c, row) in w.profile.rows().iter().enumerate() {
                println!("      {}: {row:?}", labels[c]);
            }
            println!("    transform: {}", describe(&w.transform, &labels));
            println!("    note: {}", w.note);
            assert!(replay(&rule, axiom, &w)?, "witness must replay");
            println!("    replayed: still violates");
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Absolute displacement at p = 1 is monotone; Kendall at p = 2 is not,
    // and moving a winner up one place can cost it the election.
    search(Distance::minkowski(1.0)?, 1.0, Axiom::Monotonicity)?;
    search(Distance::Kendall, 2.0, Axiom::Monotonicity)?;

    // No depth rule here survives dropping a never-winning candidate.
    search(Distance::Cayley, 1.0, Axiom::IndependenceToLosers)?;

    Ok(())
}
