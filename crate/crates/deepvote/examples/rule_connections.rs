//! Classical rules recovered as depth minimizers.
//!
//! Each connection is checked on random profiles with both sides computed
//! independently: the classical rule by direct scoring, the depth side by
//! exhaustive minimization of the average distance^p.
//!
//!   kemeny        = deepest under kendall, p = 1 (full order sets agree)
//!   borda         = deepest winners under minkowski q = 2, p = 2
//!   plurality     = deepest winners under first-place disagreement weights
//!   antiplurality = last-ranked candidates of the deepest rankings under
//!                   last-place disagreement weights
//!
//! Run with `cargo run -p deepvote --example rule_connections`.

use std::collections::BTreeSet;

use deepvote::axioms::random_profile;
use deepvote::rules;
use deepvote::{deepest_set, Distance, FrechetParams, Profile, Ranking, WeightMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn deepest(profile: &Profile, distance: Distance, p: f64) -> deepvote::DeepestResult {
    let params = FrechetParams::new(distance, p).expect("valid parameters");
    deepest_set(profile, &params).expect("small profile enumerates")
}

fn bottoms(rankings: &[Ranking]) -> BTreeSet<usize> {
    rankings.iter().map(|r| r.bottom_candidate()).collect()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let trials = 300;
    let mut checked = 0;

    for _ in 0..trials {
        let m = rng.random_range(3..=5);
        let n = rng.random_range(3..=11);
        let profile = random_profile(m, n, &mut rng);

        let kemeny = rules::kemeny(&profile)?;
        let kendall = deepest(&profile, Distance::Kendall, 1.0);
        let rules::RuleDetail::OptimalOrders(orders) = &kemeny.detail else {
            unreachable!("kemeny reports its optimal orders");
        };
        assert_eq!(orders, &kendall.deepest, "kemeny orders differ");
        assert_eq!(kemeny.winners, kendall.winners, "kemeny winners differ");

        let borda = rules::borda(&profile);
        let squared = deepest(&profile, Distance::minkowski(2.0)?, 2.0);
        assert_eq!(borda.winners, squared.winners, "borda winners differ");

        let plurality = rules::plurality(&profile);
        let top = Distance::WeightedHamming {
            weights: WeightMatrix::plurality_weights(m),
        };
        assert_eq!(
            plurality.winners,
            deepest(&profile, top, 1.0).winners,
            "plurality winners differ"
        );

        let anti = rules::antiplurality(&profile);
        let bottom = Distance::WeightedHamming {
            weights: WeightMatrix::antiplurality_weights(m),
        };
        assert_eq!(
            anti.winners,
            bottoms(&deepest(&profile, bottom, 1.0).deepest),
            "antiplurality winners differ"
        );

        checked += 1;
    }

    println!("checked {checked} random profiles (m in 3..=5, n in 3..=11)");
    println!("  kemeny orders and winners match kendall-deepest at p=1");
    println!("  borda winners match minkowski(q=2)-deepest winners at p=2");
    println!("  plurality winners match first-place-weight deepest winners");
    println!("  antiplurality winners match last-place-weight deepest bottoms");
    println!("all four connections hold on every profile");

    Ok(())
}
