//! Deepest rankings and how the exponent changes the outcome.
//!
//! Builds a 3-candidate, 5-voter profile with a Condorcet winner and
//! computes the Kendall-deepest rankings at p = 1 and p = 2. The minimizer
//! flips between the two exponents: averaging plain distances rewards the
//! majority side, averaging squared distances rewards the compromise.
//!
//! Run with `cargo run -p deepvote --example deepest_winner`.

use deepvote::io::default_labels;
use deepvote::rules::condorcet_winner;
use deepvote::{deepest_set, Distance, FrechetParams, Profile};

// Three voters back A > B > C, one backs C > B > A, one B > A > C. A wins
// head to head, but the lone reversed ballot is so far from A-first
// rankings that squaring distances hands the election to the compromise B.
fn profile() -> Profile {
    Profile::from_rows(&[
        vec![1, 1, 1, 3, 2],
        vec![2, 2, 2, 2, 1],
        vec![3, 3, 3, 1, 3],
    ])
    .expect("rows are a valid profile")
}

fn show(ranking: &deepvote::Ranking, labels: &[String]) -> String {
    let mut by_rank: Vec<(usize, usize)> = ranking
        .ranks()
        .iter()
        .enumerate()
        .map(|(c, &r)| (r, c))
        .collect();
    by_rank.sort();
    by_rank
        .iter()
        .map(|&(_, c)| labels[c].as_str())
        .collect::<Vec<_>>()
        .join(" > ")
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Rows are candidates, columns voters; entry (c, v) is voter v's rank
    // for candidate c, 1 = most preferred.
    let profile = profile();
    let labels = default_labels(profile.m());

    println!("profile: {} candidates, {} voters", profile.m(), profile.n());
    for v in 0..profile.n() {
        println!("  voter {}: {}", v + 1, show(profile.column(v), &labels));
    }
    match condorcet_winner(&profile) {
        Some(c) => println!("pairwise majority winner: {}", labels[c]),
        None => println!("no pairwise majority winner"),
    }

    for p in [1.0, 2.0] {
        let params = FrechetParams::new(Distance::Kendall, p)?;
        let result = deepest_set(&profile, &params)?;
        println!("\n{}", params.rule_label());
        println!("  minimum average distance^p: {}", result.u_min);
        println!("  depth of the minimizers:    {}", result.depth_max);
        for r in &result.deepest {
            println!("  deepest: {}", show(r, &labels));
        }
        let winners: Vec<&str> = result.winners.iter().map(|&c| labels[c].as_str()).collect();
        println!(
            "  winners: {}{}",
            winners.join(", "),
            if result.unique_winner { "" } else { " (tied)" }
        );
    }

    Ok(())
}
