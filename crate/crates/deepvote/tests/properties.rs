//! Randomized invariants of the metrics, the enumerator, and the minimizer.
//!
//! Distances must behave like distances, enumeration must visit every
//! ranking exactly once, and the deepest set must be blind to voter order
//! and equivariant under candidate relabeling. All suites are seeded
//! through proptest and shrink to minimal failures.

use std::collections::BTreeSet;

use deepvote::frechet::deepest_set_capped;
use deepvote::io::{
    default_labels, parse_matrix_csv, parse_orders, to_matrix_csv, to_orders,
};
use deepvote::metrics::{self, relaxation_constant};
use deepvote::ranking::enumerate_rankings;
use deepvote::{deepest_set, Distance, FrechetParams, Profile, Ranking, WeightMatrix};
use itertools::Itertools;
use proptest::prelude::*;

const FLOAT_SLACK: f64 = 1e-9;

fn ranking_of(m: usize) -> impl Strategy<Value = Ranking> {
    Just((1..=m).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|ranks| Ranking::from_ranks(ranks).expect("shuffled permutation"))
}

fn profile_of(m: std::ops::RangeInclusive<usize>, n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Profile> {
    (m, n).prop_flat_map(|(m, n)| {
        proptest::collection::vec(ranking_of(m), n)
            .prop_map(|cols| Profile::new(cols).expect("equal-sized columns"))
    })
}

/// Strictly positive symmetric weights over rank pairs. Diagonal entries
/// never enter a distance value but must be positive for the relaxation
/// constant to be defined.
fn positive_weights(m: usize) -> impl Strategy<Value = WeightMatrix> {
    proptest::collection::vec(0.25f64..4.0, m * m).prop_map(move |cells| {
        let mut rows = vec![vec![0.0; m]; m];
        for r in 0..m {
            rows[r][r] = cells[r * m + r];
            for s in (r + 1)..m {
                let w = cells[r * m + s];
                rows[r][s] = w;
                rows[s][r] = w;
            }
        }
        WeightMatrix::new(rows).expect("square symmetric matrix")
    })
}

fn unweighted_kinds() -> Vec<Distance> {
    let mut kinds = vec![Distance::Kendall, Distance::Hamming, Distance::Cayley];
    for q in [1.0, 2.0, 3.0, f64::INFINITY] {
        kinds.push(Distance::minkowski(q).expect("valid order"));
    }
    kinds
}

fn eval(d: &Distance, a: &Ranking, b: &Ranking) -> f64 {
    match d {
        Distance::Kendall => metrics::kendall(a, b).expect("same size") as f64,
        Distance::Hamming => metrics::hamming(a, b).expect("same size") as f64,
        Distance::Cayley => metrics::cayley(a, b).expect("same size") as f64,
        Distance::Minkowski { q } => metrics::minkowski(a, b, *q).expect("same size"),
        Distance::WeightedHamming { weights } => {
            metrics::weighted_hamming(a, b, weights).expect("same size")
        }
        Distance::WeightedMinkowski { q, weights } => {
            metrics::weighted_minkowski(a, b, *q, weights).expect("same size")
        }
    }
}

/// Greedy cycle sort: swap each misplaced value directly home. The swap
/// count is the minimum transposition distance, derived without counting
/// cycles.
fn transposition_sort_count(a: &Ranking, b: &Ranking) -> u64 {
    let m = a.m();
    let b_inv = b.inverse();
    let mut q: Vec<usize> = (1..=m)
        .map(|r| a.ranks()[b_inv.ranks()[r - 1] - 1])
        .collect();
    let mut count = 0;
    for i in 0..m {
        while q[i] != i + 1 {
            let j = q[i] - 1;
            q.swap(i, j);
            count += 1;
        }
    }
    count
}

fn sorted_vectors(rankings: &[Ranking]) -> Vec<Vec<usize>> {
    let mut vs: Vec<Vec<usize>> = rankings.iter().map(|r| r.ranks().to_vec()).collect();
    vs.sort();
    vs
}

proptest! {
    /// d(a, a) = 0 and d(a, b) = 0 only when a = b, for every metric kind.
    #[test]
    fn metric_identity(
        (a, b) in (2usize..=6).prop_flat_map(|m| (ranking_of(m), ranking_of(m)))
    ) {
        for d in unweighted_kinds() {
            prop_assert_eq!(eval(&d, &a, &a), 0.0, "{} self-distance", d.label());
            let dab = eval(&d, &a, &b);
            prop_assert_eq!(dab == 0.0, a == b, "{} separates points", d.label());
            prop_assert!(dab >= 0.0, "{} nonnegative", d.label());
        }
    }

    /// d(a, b) = d(b, a) for every metric kind.
    #[test]
    fn metric_symmetry(
        (a, b) in (2usize..=6).prop_flat_map(|m| (ranking_of(m), ranking_of(m)))
    ) {
        for d in unweighted_kinds() {
            prop_assert_eq!(eval(&d, &a, &b), eval(&d, &b, &a), "{}", d.label());
        }
    }

    /// d(a, c) <= d(a, b) + d(b, c) for every metric kind, with float slack
    /// for fractional roots.
    #[test]
    fn metric_triangle(
        (a, b, c) in (2usize..=6).prop_flat_map(|m| (ranking_of(m), ranking_of(m), ranking_of(m)))
    ) {
        for d in unweighted_kinds() {
            let lhs = eval(&d, &a, &c);
            let rhs = eval(&d, &a, &b) + eval(&d, &b, &c);
            prop_assert!(
                lhs <= rhs + FLOAT_SLACK * rhs.max(1.0),
                "{}: {} > {} + {}", d.label(), lhs, eval(&d, &a, &b), eval(&d, &b, &c)
            );
        }
    }

    /// Relabeling candidates in both arguments leaves every distance alone.
    #[test]
    fn metric_relabel_invariance(
        (a, b, rho) in (2usize..=6).prop_flat_map(|m| (ranking_of(m), ranking_of(m), ranking_of(m)))
    ) {
        let ar = a.relabel(&rho).expect("same size");
        let br = b.relabel(&rho).expect("same size");
        for d in unweighted_kinds() {
            prop_assert_eq!(eval(&d, &a, &b), eval(&d, &ar, &br), "{}", d.label());
        }
        // Position weights price rank pairs, not candidates, so renaming
        // candidates cannot move any mass.
        let w = WeightMatrix::plurality_weights(a.m());
        let dw = Distance::WeightedHamming { weights: w };
        prop_assert_eq!(eval(&dw, &a, &b), eval(&dw, &ar, &br), "weighted");
    }

    /// Positive symmetric weights satisfy the relaxed triangle inequality
    /// with the advertised constant, over all ranking triples.
    #[test]
    fn weighted_relaxed_triangle(
        (m, w) in (3usize..=4).prop_flat_map(|m| (Just(m), positive_weights(m)))
    ) {
        let rho = relaxation_constant(&w).expect("positive weights");
        prop_assert!(rho >= 1.0, "relaxation constant is at least 1, got {rho}");
        let d = Distance::WeightedHamming { weights: w };
        let all: Vec<Ranking> = enumerate_rankings(m).expect("small m").collect();
        for a in &all {
            for b in &all {
                let dab = eval(&d, a, b);
                for c in &all {
                    let rhs = rho * (dab + eval(&d, b, c));
                    let lhs = eval(&d, a, c);
                    prop_assert!(
                        lhs <= rhs + FLOAT_SLACK * rhs.max(1.0),
                        "relaxed triangle: {lhs} > {rho} * sum"
                    );
                }
            }
        }
    }

    /// The transposition distance equals the swap count of an independent
    /// greedy cycle sort.
    #[test]
    fn cayley_matches_greedy_sort(
        (a, b) in (2usize..=6).prop_flat_map(|m| (ranking_of(m), ranking_of(m)))
    ) {
        prop_assert_eq!(
            metrics::cayley(&a, &b).expect("same size"),
            transposition_sort_count(&a, &b)
        );
    }

    /// Squared q=2 distances are integers: the root is cosmetic.
    #[test]
    fn squared_displacement_is_integral(
        (a, b) in (2usize..=6).prop_flat_map(|m| (ranking_of(m), ranking_of(m)))
    ) {
        let d = metrics::minkowski(&a, &b, 2.0).expect("same size");
        let squared: u64 = a
            .ranks()
            .iter()
            .zip(b.ranks())
            .map(|(&x, &y)| (x.abs_diff(y) as u64).pow(2))
            .sum();
        prop_assert!((d * d - squared as f64).abs() < 1e-6, "{} vs {}", d * d, squared);
    }

    /// q=1 and q=inf agree with hand-rolled displacement sums and maxima.
    #[test]
    fn displacement_extremes_match_manual_sums(
        (a, b) in (2usize..=6).prop_flat_map(|m| (ranking_of(m), ranking_of(m)))
    ) {
        let total: usize = a.ranks().iter().zip(b.ranks()).map(|(&x, &y)| x.abs_diff(y)).sum();
        let worst: usize = a.ranks().iter().zip(b.ranks()).map(|(&x, &y)| x.abs_diff(y)).max().unwrap_or(0);
        prop_assert_eq!(metrics::minkowski(&a, &b, 1.0).expect("same size"), total as f64);
        prop_assert_eq!(
            metrics::minkowski(&a, &b, f64::INFINITY).expect("same size"),
            worst as f64
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Reordering voters never changes the deepest set.
    #[test]
    fn deepest_ignores_voter_order(
        (profile, order_seed) in profile_of(2..=4, 2..=7).prop_flat_map(|p| {
            let n = p.n();
            (Just(p), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        })
    ) {
        let shuffled = profile.permute_voters(&order_seed).expect("valid order");
        for d in unweighted_kinds() {
            for p in [1.0, 2.0] {
                let params = FrechetParams::new(d.clone(), p).expect("valid");
                let lhs = deepest_set(&profile, &params).expect("small profile");
                let rhs = deepest_set(&shuffled, &params).expect("small profile");
                prop_assert_eq!(&lhs.deepest, &rhs.deepest, "{} p={}", d.label(), p);
                prop_assert_eq!(&lhs.winners, &rhs.winners, "{} p={}", d.label(), p);
                prop_assert!(
                    (lhs.u_min - rhs.u_min).abs() <= FLOAT_SLACK * lhs.u_min.abs().max(1.0),
                    "{} p={} minimum moved", d.label(), p
                );
            }
        }
    }

    /// Relabeling candidates relabels the deepest set, nothing more.
    #[test]
    fn deepest_follows_relabeling(
        (profile, rho) in (2usize..=4, 2usize..=7).prop_flat_map(|(m, n)| {
            (profile_of(m..=m, n..=n), ranking_of(m))
        })
    ) {
        let relabeled = profile.relabel_candidates(&rho).expect("same size");
        for d in unweighted_kinds() {
            for p in [1.0, 2.0] {
                let params = FrechetParams::new(d.clone(), p).expect("valid");
                let original = deepest_set(&profile, &params).expect("small profile");
                let transformed = deepest_set(&relabeled, &params).expect("small profile");
                let expected: Vec<Ranking> = original
                    .deepest
                    .iter()
                    .map(|r| r.relabel(&rho).expect("same size"))
                    .collect();
                prop_assert_eq!(
                    sorted_vectors(&transformed.deepest),
                    sorted_vectors(&expected),
                    "{} p={} deepest set", d.label(), p
                );
                let expected_winners: BTreeSet<usize> =
                    original.winners.iter().map(|&c| rho.rank_of(c) - 1).collect();
                prop_assert_eq!(
                    &transformed.winners, &expected_winners,
                    "{} p={} winners", d.label(), p
                );
            }
        }
    }

    /// Every ranking of the profile scores at least the reported minimum.
    #[test]
    fn reported_minimum_is_global(
        profile in profile_of(2..=4, 1..=6)
    ) {
        for d in unweighted_kinds() {
            let params = FrechetParams::new(d, 1.0).expect("valid");
            let result = deepest_set(&profile, &params).expect("small profile");
            for r in enumerate_rankings(profile.m()).expect("small m") {
                let u = deepvote::frechet::frechet_functional(&r, &profile, &params)
                    .expect("same size");
                prop_assert!(
                    u >= result.u_min - FLOAT_SLACK * result.u_min.abs().max(1.0),
                    "{} scored {} below reported minimum {}",
                    params.rule_label(), u, result.u_min
                );
            }
        }
    }

    /// Matrix and order files both reproduce the profile they were written
    /// from, labels included.
    #[test]
    fn ballot_files_round_trip(profile in profile_of(2..=5, 1..=9)) {
        let labels = default_labels(profile.m());
        let csv = to_matrix_csv(&labels, &profile);
        let doc = parse_matrix_csv(&csv).expect("own csv output parses");
        prop_assert_eq!(&doc.labels, &labels);
        prop_assert_eq!(&doc.profile, &profile);

        // Order files name candidates in first-appearance order, so the
        // reparse may permute indices; the denoted election is unchanged.
        let orders = to_orders(&labels, &profile);
        let doc = parse_orders(&orders).expect("own orders output parses");
        prop_assert_eq!(doc.profile.n(), profile.n());
        let mut sorted = doc.labels.clone();
        sorted.sort();
        prop_assert_eq!(&sorted, &labels, "labels survive as a set");
        for (c, label) in labels.iter().enumerate() {
            let c2 = doc
                .labels
                .iter()
                .position(|l| l == label)
                .expect("label survives");
            for v in 0..profile.n() {
                prop_assert_eq!(
                    doc.profile.rank(c2, v),
                    profile.rank(c, v),
                    "rank of {} for voter {}", label, v
                );
            }
        }
    }
}

#[test]
fn enumeration_is_exhaustive_and_lexicographic() {
    for m in 1..=6 {
        let ours: Vec<Vec<usize>> = enumerate_rankings(m)
            .expect("within cap")
            .map(|r| r.ranks().to_vec())
            .collect();
        let reference: Vec<Vec<usize>> = (1..=m).permutations(m).collect();
        assert_eq!(ours, reference, "m={m}");
    }
}

#[test]
fn diameter_matches_pairwise_maximum() {
    let spread = WeightMatrix::new(vec![
        vec![0.0, 2.0, 3.0, 5.0],
        vec![2.0, 0.0, 2.0, 3.0],
        vec![3.0, 2.0, 0.0, 2.0],
        vec![5.0, 3.0, 2.0, 0.0],
    ])
    .expect("square symmetric matrix");
    for m in 2..=4usize {
        let mut kinds = unweighted_kinds();
        kinds.push(Distance::WeightedHamming {
            weights: WeightMatrix::plurality_weights(m),
        });
        if m == 4 {
            kinds.push(Distance::WeightedHamming {
                weights: spread.clone(),
            });
            kinds.push(Distance::WeightedMinkowski {
                q: 2.0,
                weights: spread.clone(),
            });
        }
        let all: Vec<Ranking> = enumerate_rankings(m).expect("small m").collect();
        for d in kinds {
            let mut worst = 0.0f64;
            for a in &all {
                for b in &all {
                    worst = worst.max(eval(&d, a, b));
                }
            }
            let reported = d.diameter(m).expect("small m");
            assert!(
                (reported - worst).abs() <= FLOAT_SLACK * worst.max(1.0),
                "{} m={m}: reported {reported}, pairwise maximum {worst}",
                d.label()
            );
        }
    }
}

#[test]
fn enumeration_respects_the_cap() {
    use deepvote::ranking::enumerate_rankings_capped;
    assert!(enumerate_rankings_capped(5, 4).is_err());
    assert!(enumerate_rankings_capped(4, 4).is_ok());
    // The capped minimizer refuses rather than silently truncating.
    let profile = Profile::from_rows(&[
        vec![1, 2],
        vec![2, 1],
        vec![3, 3],
    ])
    .expect("valid profile");
    let params = FrechetParams::new(Distance::Kendall, 1.0).expect("valid");
    assert!(deepest_set_capped(&profile, &params, 2).is_err());
    assert!(deepest_set_capped(&profile, &params, 3).is_ok());
}
