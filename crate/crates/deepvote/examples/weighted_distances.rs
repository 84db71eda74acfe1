//! Position-weighted disagreement and the rules it induces.
//!
//! A weight matrix `W` prices each rank pair: two rankings are compared by
//! summing `W[r][r']` over candidates placed at `r` by one and `r'` by the
//! other. Concentrating all weight on first-place disagreement makes the
//! deepest ranking a plurality outcome; pricing only last-place splits, with
//! negative weight, elects the candidate ranked last the least often.
//! In between, custom matrices grade disagreement by position.
//!
//! Run with `cargo run -p deepvote --example weighted_distances`.

use deepvote::io::default_labels;
use deepvote::rules;
use deepvote::{deepest_set, Distance, FrechetParams, Profile, WeightMatrix};

fn winners_under(profile: &Profile, distance: Distance) -> Vec<String> {
    let labels = default_labels(profile.m());
    let params = FrechetParams::new(distance, 1.0).expect("p=1 is valid");
    let result = deepest_set(profile, &params).expect("small profile enumerates");
    result.winners.iter().map(|&c| labels[c].clone()).collect()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let profile = Profile::from_rows(&[
        vec![1, 1, 2, 3, 3],
        vec![2, 3, 1, 1, 2],
        vec![3, 2, 3, 2, 1],
    ])?;
    let labels = default_labels(profile.m());
    let m = profile.m();

    println!("first places per candidate: {:?}", match rules::plurality(&profile).detail {
        rules::RuleDetail::FirstPlaceCounts(c) => c,
        _ => unreachable!(),
    });
    println!("last places per candidate:  {:?}", match rules::antiplurality(&profile).detail {
        rules::RuleDetail::LastPlaceCounts(c) => c,
        _ => unreachable!(),
    });

    let top = WeightMatrix::plurality_weights(m);
    println!(
        "\nfirst-place weights ({}x{}, 2 when exactly one side is ranked first):",
        m, m
    );
    println!(
        "  deepest winners: {:?}  (plurality elects {:?})",
        winners_under(&profile, Distance::WeightedHamming { weights: top }),
        rules::plurality(&profile)
            .winners
            .iter()
            .map(|&c| &labels[c])
            .collect::<Vec<_>>()
    );

    let bottom = WeightMatrix::antiplurality_weights(m);
    let params = FrechetParams::new(Distance::WeightedHamming { weights: bottom }, 1.0)?;
    let result = deepest_set(&profile, &params)?;
    let bottoms: Vec<&String> = result
        .deepest
        .iter()
        .map(|r| &labels[r.bottom_candidate()])
        .collect();
    println!("\nlast-place weights (-2 when exactly one side is ranked last):");
    println!(
        "  last-ranked of the deepest rankings: {bottoms:?}  (antiplurality elects {:?})",
        rules::antiplurality(&profile)
            .winners
            .iter()
            .map(|&c| &labels[c])
            .collect::<Vec<_>>()
    );

    // A custom matrix from CSV: disagreement about adjacent ranks is cheap,
    // disagreement spanning the whole ballot expensive.
    let csv = "0,1,4\n1,0,1\n4,1,0\n";
    let spread = WeightMatrix::from_csv_str(csv)?;
    println!("\ncustom spread-priced matrix:\n{}", csv.trim_end());
    println!(
        "  weighted hamming deepest winners:   {:?}",
        winners_under(
            &profile,
            Distance::WeightedHamming {
                weights: spread.clone()
            }
        )
    );
    println!(
        "  weighted minkowski (q=2) winners:   {:?}",
        winners_under(&profile, Distance::weighted_minkowski(2.0, spread)?)
    );

    Ok(())
}
