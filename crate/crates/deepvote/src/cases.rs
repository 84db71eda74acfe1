//! Small pinned profiles with hand-checkable outcomes.
//!
//! Each profile demonstrates a specific gap or agreement between rules and
//! is exercised by unit tests, the acceptance suite, and the replication
//! report. Rows are candidates, columns voters.

use crate::ranking::{Profile, Ranking};

fn profile(rows: &[&[usize]]) -> Profile {
    let rows: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
    Profile::from_rows(&rows).expect("pinned profile is valid")
}

/// 4 candidates, 5 voters. Bucklin elects c2 (lower medians 3,2,3,4) while
/// the footrule-deepest ranking is (1,2,3,4), electing c1, for p in {1,2}.
/// Borda rank sums are (13,10,13,14).
pub fn bucklin_footrule_gap() -> Profile {
    profile(&[
        &[1, 1, 4, 4, 3],
        &[2, 2, 2, 2, 2],
        &[3, 3, 3, 3, 1],
        &[4, 4, 1, 1, 4],
    ])
}

/// 3 candidates, 5 voters with Condorcet winner c1. Kendall-deepest flips
/// with the exponent: totals 4 vs 5 at p = 1 (winner c1) and 10 vs 7 at
/// p = 2 (winner c2), comparing (1,2,3) against (2,1,3).
pub fn kendall_power_flip() -> Profile {
    profile(&[
        &[1, 1, 1, 3, 2],
        &[2, 2, 2, 2, 1],
        &[3, 3, 3, 1, 3],
    ])
}

/// 3 candidates, 7 voters with Condorcet winner c1, yet Hamming, Cayley,
/// and Minkowski deepest voting all elect c2 via the ranking (2,1,3).
pub fn condorcet_rule_gap() -> Profile {
    profile(&[
        &[1, 1, 2, 2, 2, 2, 3],
        &[2, 2, 1, 1, 3, 3, 1],
        &[3, 3, 3, 3, 1, 1, 2],
    ])
}

/// 6 candidates, 5 voters, all ranking c1 first. Under the maximum
/// displacement distance the deepest rankings do not all put c1 first, so
/// unanimity fails: the winner set is {c1, c6} for p in {1,2,3}.
pub fn maxnorm_unanimity_gap() -> Profile {
    profile(&[
        &[1, 1, 1, 1, 1],
        &[4, 6, 4, 2, 6],
        &[6, 4, 6, 4, 5],
        &[3, 5, 3, 6, 4],
        &[5, 2, 5, 5, 3],
        &[2, 3, 2, 3, 2],
    ])
}

/// 2 candidates, 7 voters: 4 prefer c1, 3 prefer c2. Deepest voting of any
/// kind elects c1.
pub fn loser_pair() -> Profile {
    profile(&[
        &[1, 1, 1, 1, 2, 2, 2],
        &[2, 2, 2, 2, 1, 1, 1],
    ])
}

/// The same electorate after a third candidate enters last in no one's
/// view of the contest between c1 and c2, yet removing c3 from this profile
/// gives exactly [`loser_pair`]. Minkowski and Hamming deepest voting elect
/// c2 via the ranking (3,1,2); Cayley produces a three-way tie. Either way
/// the winner set changes, so independence to losers fails.
pub fn loser_trio() -> Profile {
    profile(&[
        &[1, 1, 2, 2, 3, 3, 3],
        &[2, 2, 3, 3, 1, 1, 1],
        &[3, 3, 1, 1, 2, 2, 2],
    ])
}

/// 5 candidates, 5 voters. Hamming deepest voting at p = 1 elects A
/// (ranking `a`), but after voter 5 upgrades A one step the winner moves to
/// D, violating monotonicity. Returns the profiles before and after the
/// upgrade swap (A from rank 4 to 3 in the last column).
pub fn upgrade_flip() -> (Profile, Profile) {
    let a = vec![1, 2, 3, 4, 5];
    let b = vec![3, 4, 2, 1, 5];
    let c = vec![4, 5, 3, 2, 1];
    let c_up = vec![3, 5, 4, 2, 1];
    let cols = |last: &Vec<usize>| {
        Profile::new(
            [&a, &a, &b, &b, last]
                .iter()
                .map(|v| Ranking::from_ranks(v.to_vec()).unwrap())
                .collect(),
        )
        .unwrap()
    };
    (cols(&c), cols(&c_up))
}

/// 3 candidates, 4 voters split between two opposed camps. The
/// least-absolute-deviation deepest region is the box [1,2]x[1,3]x[2,3],
/// every candidate can top a ranking drawn from it, and Bucklin's winner
/// set {c1, c2} sits strictly inside the box winner set {c1, c2, c3}.
pub fn median_box() -> Profile {
    profile(&[
        &[2, 2, 1, 1],
        &[1, 1, 3, 3],
        &[3, 3, 2, 2],
    ])
}
