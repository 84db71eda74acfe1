//! Depth over real-valued rank vectors instead of permutations.
//!
//! Dropping the requirement that a consensus be a permutation, every point
//! of the score cube gets a depth from the same average-distance idea. The
//! L2-deepest point is the coordinatewise mean rank (so its best coordinate
//! is the Borda winner), while the L1-deepest points form a whole box of
//! coordinatewise medians. The Bucklin winner always sits inside that box.
//!
//! Run with `cargo run -p deepvote --example median_box`.

use deepvote::continuous::{
    continuous_winner_set, l1_deepest_box, l2_deepest, lq_depth, ContinuousDeepest,
    EvaluationPoint,
};
use deepvote::io::default_labels;
use deepvote::rules;
use deepvote::Profile;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Even voter count, so the medians are genuinely intervals.
    let profile = Profile::from_rows(&[
        vec![1, 2, 1, 2],
        vec![2, 1, 3, 3],
        vec![3, 3, 2, 1],
    ])?;
    let labels = default_labels(profile.m());
    println!("profile rows (candidate ranks per voter):");
    for (c, row) in profile.rows().iter().enumerate() {
        println!("  {}: {row:?}", labels[c]);
    }

    let mean = l2_deepest(&profile);
    println!("\nL2-deepest point (mean ranks): {:?}", mean.coords);
    let l2_winners = continuous_winner_set(&ContinuousDeepest::Point(mean.clone()));
    println!(
        "  winners (best coordinate): {:?}",
        l2_winners.iter().map(|&c| &labels[c]).collect::<Vec<_>>()
    );
    let borda = rules::borda(&profile);
    println!(
        "  borda winners:             {:?}",
        borda.winners.iter().map(|&c| &labels[c]).collect::<Vec<_>>()
    );
    assert_eq!(l2_winners, borda.winners);

    let boxx = l1_deepest_box(&profile);
    println!("\nL1-deepest box (coordinatewise medians):");
    for c in 0..profile.m() {
        println!("  {}: [{}, {}]", labels[c], boxx.lower[c], boxx.upper[c]);
    }
    let l1_winners = continuous_winner_set(&ContinuousDeepest::Box(boxx.clone()));
    println!(
        "  winners (first at some box point): {:?}",
        l1_winners.iter().map(|&c| &labels[c]).collect::<Vec<_>>()
    );
    let bucklin = rules::bucklin(&profile);
    println!(
        "  bucklin winners: {:?}",
        bucklin.winners.iter().map(|&c| &labels[c]).collect::<Vec<_>>()
    );
    for &w in &bucklin.winners {
        assert!(l1_winners.contains(&w), "bucklin winner outside the box");
    }

    // Depth decreases when a point leaves the box.
    let inside = EvaluationPoint {
        coords: boxx.lower.clone(),
    };
    let outside = EvaluationPoint {
        coords: vec![3.0, 1.0, 2.0],
    };
    let d_in = lq_depth(&inside, &profile, 1.0)?;
    let d_out = lq_depth(&outside, &profile, 1.0)?;
    println!("\nL1 depth at a box corner: {d_in}");
    println!("L1 depth at (3, 1, 2):    {d_out}");
    assert!(d_in > d_out);

    Ok(())
}
