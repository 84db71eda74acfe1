//! The classical rules side by side on one profile.
//!
//! Parses a ballot file in order notation, then reports Borda, Bucklin,
//! plurality, antiplurality, and Kemeny outcomes together with the pairwise
//! majority relation. The profile is chosen so that no two rules agree on
//! the full picture: medians, rank sums, and first places each tell a
//! different story.
//!
//! Run with `cargo run -p deepvote --example classical_rules`.

use deepvote::io::parse_orders;
use deepvote::rules::{
    self, condorcet_loser, condorcet_winner, pairwise_majority, RuleDetail, RuleOutcome,
};

const BALLOTS: &str = "\
# four candidates, five voters
2: A > B > C > D
2: D > B > C > A
1: C > B > A > D
";

fn report(name: &str, outcome: &RuleOutcome, labels: &[String]) {
    let winners: Vec<&str> = outcome.winners.iter().map(|&c| labels[c].as_str()).collect();
    let detail = match &outcome.detail {
        RuleDetail::RankSums(s) => format!("rank sums {s:?}"),
        RuleDetail::LowerMedians(s) => format!("lower median ranks {s:?}"),
        RuleDetail::FirstPlaceCounts(s) => format!("first places {s:?}"),
        RuleDetail::LastPlaceCounts(s) => format!("last places {s:?}"),
        RuleDetail::OptimalOrders(orders) => format!("{} optimal order(s)", orders.len()),
    };
    println!("  {name:<14} winners {{{}}}  {detail}", winners.join(", "));
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let doc = parse_orders(BALLOTS)?;
    let profile = doc.profile;
    let labels = doc.labels;

    println!("ballots:\n{BALLOTS}");
    report("borda", &rules::borda(&profile), &labels);
    report("bucklin", &rules::bucklin(&profile), &labels);
    report("plurality", &rules::plurality(&profile), &labels);
    report("antiplurality", &rules::antiplurality(&profile), &labels);
    report("kemeny", &rules::kemeny(&profile)?, &labels);

    println!("\nvoters preferring row over column:");
    let wins = pairwise_majority(&profile);
    print!("   ");
    for l in &labels {
        print!(" {l:>2}");
    }
    println!();
    for (a, row) in wins.iter().enumerate() {
        print!(" {:>2}", labels[a]);
        for (b, &w) in row.iter().enumerate() {
            if a == b {
                print!("  .");
            } else {
                print!(" {w:>2}");
            }
        }
        println!();
    }

    match condorcet_winner(&profile) {
        Some(c) => println!("pairwise majority winner: {}", labels[c]),
        None => println!("no candidate beats all others pairwise"),
    }
    match condorcet_loser(&profile) {
        Some(c) => println!("pairwise majority loser:  {}", labels[c]),
        None => println!("no candidate loses to all others pairwise"),
    }

    Ok(())
}
