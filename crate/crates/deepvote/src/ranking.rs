//! Rankings, voter profiles, and permutation enumeration.
//!
//! A [`Ranking`] assigns each candidate a distinct rank in `1..=m`, rank 1
//! being the most preferred. Candidates are indexed `0..m`; display labels
//! belong to the I/O layer. A [`Profile`] is one ranking per voter, all over
//! the same candidate set, in a fixed voter order.

use std::fmt;
use thiserror::Error;

/// Largest `m` for which the m! rankings are enumerated unless a caller
/// raises the cap explicitly.
pub const DEFAULT_ENUMERATION_CAP: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RankingError {
    #[error("ranking or profile must be nonempty")]
    Empty,
    #[error("ranks {0:?} are not a permutation of 1..=m")]
    NotAPermutation(Vec<usize>),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("enumeration of {m}! rankings exceeds the cap of {cap} candidates")]
    CapExceeded { m: usize, cap: usize },
}

/// A full strict ranking, stored as the rank vector `ranks[c] = rank of
/// candidate c`. Ranks are a permutation of `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ranking {
    ranks: Vec<usize>,
}

impl Ranking {
    /// Validates that `ranks` uses every rank in `1..=m` exactly once.
    pub fn from_ranks(ranks: Vec<usize>) -> Result<Self, RankingError> {
        if ranks.is_empty() {
            return Err(RankingError::Empty);
        }
        let m = ranks.len();
        let mut seen = vec![false; m];
        for &r in &ranks {
            if r < 1 || r > m || seen[r - 1] {
                return Err(RankingError::NotAPermutation(ranks));
            }
            seen[r - 1] = true;
        }
        Ok(Ranking { ranks })
    }

    /// The ranking that places candidate `c` at rank `c + 1`.
    pub fn identity(m: usize) -> Self {
        Ranking {
            ranks: (1..=m).collect(),
        }
    }

    /// Number of candidates.
    pub fn m(&self) -> usize {
        self.ranks.len()
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Rank of candidate `c`, in `1..=m`.
    pub fn rank_of(&self, c: usize) -> usize {
        self.ranks[c]
    }

    /// Candidate holding rank 1.
    pub fn top_candidate(&self) -> usize {
        self.ranks.iter().position(|&r| r == 1).expect("rank 1 present")
    }

    /// Candidate holding rank m.
    pub fn bottom_candidate(&self) -> usize {
        let m = self.m();
        self.ranks.iter().position(|&r| r == m).expect("rank m present")
    }

    /// Inverse permutation: `inverse()[r - 1] = c + 1` where `rank_of(c) = r`.
    /// Read it as the list of candidates from most to least preferred,
    /// 1-based.
    pub fn inverse(&self) -> Ranking {
        let mut inv = vec![0usize; self.m()];
        for (c, &r) in self.ranks.iter().enumerate() {
            inv[r - 1] = c + 1;
        }
        Ranking { ranks: inv }
    }

    /// Function composition on rank vectors: `self.compose(inner)` maps `c`
    /// to `self(inner(c))`, both treated as permutations of `1..=m`.
    pub fn compose(&self, inner: &Ranking) -> Result<Ranking, RankingError> {
        if self.m() != inner.m() {
            return Err(RankingError::DimensionMismatch {
                expected: self.m(),
                got: inner.m(),
            });
        }
        let ranks = inner.ranks.iter().map(|&r| self.ranks[r - 1]).collect();
        Ok(Ranking { ranks })
    }

    /// Pushes the rank vector through a candidate relabeling: old candidate
    /// `c` becomes new candidate `rho.rank_of(c) - 1` and keeps its rank.
    pub fn relabel(&self, rho: &Ranking) -> Result<Ranking, RankingError> {
        if self.m() != rho.m() {
            return Err(RankingError::DimensionMismatch {
                expected: self.m(),
                got: rho.m(),
            });
        }
        let mut ranks = vec![0usize; self.m()];
        for (c, &r) in self.ranks.iter().enumerate() {
            ranks[rho.ranks[c] - 1] = r;
        }
        Ok(Ranking { ranks })
    }
}

impl fmt::Display for Ranking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.ranks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// Lexicographic stream over all rank vectors of `m` candidates, under the
/// default enumeration cap.
pub fn enumerate_rankings(m: usize) -> Result<RankingIter, RankingError> {
    enumerate_rankings_capped(m, DEFAULT_ENUMERATION_CAP)
}

/// Same as [`enumerate_rankings`] with an explicit cap.
pub fn enumerate_rankings_capped(m: usize, cap: usize) -> Result<RankingIter, RankingError> {
    if m == 0 {
        return Err(RankingError::Empty);
    }
    if m > cap {
        return Err(RankingError::CapExceeded { m, cap });
    }
    Ok(RankingIter {
        next: Some((1..=m).collect()),
    })
}

pub struct RankingIter {
    next: Option<Vec<usize>>,
}

impl Iterator for RankingIter {
    type Item = Ranking;

    fn next(&mut self) -> Option<Ranking> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        self.next = advance(&mut succ).then_some(succ);
        Some(Ranking { ranks: current })
    }
}

/// Steps `perm` to its lexicographic successor in place; false at the last.
fn advance(perm: &mut [usize]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Allocation-free visitor over all rank vectors of `m >= 1` candidates in
/// lexicographic order. Callers are responsible for cap checks.
pub(crate) fn for_each_ranking<F: FnMut(&[usize])>(m: usize, mut f: F) {
    debug_assert!(m >= 1);
    let mut v: Vec<usize> = (1..=m).collect();
    loop {
        f(&v);
        if !advance(&mut v) {
            break;
        }
    }
}

/// A voting situation: the rankings of `n` voters over `m` shared
/// candidates, voter order significant. Entry `(c, v)` is the rank voter `v`
/// gives candidate `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    m: usize,
    columns: Vec<Ranking>,
}

impl Profile {
    pub fn new(columns: Vec<Ranking>) -> Result<Self, RankingError> {
        let first = columns.first().ok_or(RankingError::Empty)?;
        let m = first.m();
        for col in &columns {
            if col.m() != m {
                return Err(RankingError::DimensionMismatch {
                    expected: m,
                    got: col.m(),
                });
            }
        }
        Ok(Profile { m, columns })
    }

    /// Builds a profile from candidate rows: `rows[c][v]` is the rank voter
    /// `v` gives candidate `c`.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, RankingError> {
        let m = rows.len();
        if m == 0 || rows[0].is_empty() {
            return Err(RankingError::Empty);
        }
        let n = rows[0].len();
        for row in rows {
            if row.len() != n {
                return Err(RankingError::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
        }
        let columns = (0..n)
            .map(|v| Ranking::from_ranks(rows.iter().map(|row| row[v]).collect()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Profile { m, columns })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Ranking] {
        &self.columns
    }

    pub fn column(&self, v: usize) -> &Ranking {
        &self.columns[v]
    }

    /// Rank that voter `v` gives candidate `c`.
    pub fn rank(&self, c: usize, v: usize) -> usize {
        self.columns[v].rank_of(c)
    }

    /// Candidate rows, the transpose of the column view.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.m)
            .map(|c| self.columns.iter().map(|col| col.rank_of(c)).collect())
            .collect()
    }

    /// The candidate every voter ranks first, if one exists.
    pub fn unanimous_top(&self) -> Option<usize> {
        let top = self.columns[0].top_candidate();
        self.columns
            .iter()
            .all(|col| col.rank_of(top) == 1)
            .then_some(top)
    }

    /// Reorders voters: new column `k` is old column `order[k]`.
    pub fn permute_voters(&self, order: &[usize]) -> Result<Profile, RankingError> {
        let n = self.n();
        let mut seen = vec![false; n];
        for &v in order {
            if v >= n || seen[v] {
                return Err(RankingError::NotAPermutation(order.to_vec()));
            }
            seen[v] = true;
        }
        if order.len() != n {
            return Err(RankingError::DimensionMismatch {
                expected: n,
                got: order.len(),
            });
        }
        let columns = order.iter().map(|&v| self.columns[v].clone()).collect();
        Ok(Profile { m: self.m, columns })
    }

    /// Applies one candidate relabeling to every column.
    pub fn relabel_candidates(&self, rho: &Ranking) -> Result<Profile, RankingError> {
        let columns = self
            .columns
            .iter()
            .map(|col| col.relabel(rho))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Profile { m: self.m, columns })
    }

    /// Removes candidate `c` and closes the rank gap in every column.
    pub fn remove_candidate(&self, c: usize) -> Result<Profile, RankingError> {
        if self.m < 2 {
            return Err(RankingError::Empty);
        }
        if c >= self.m {
            return Err(RankingError::DimensionMismatch {
                expected: self.m,
                got: c,
            });
        }
        let columns = self
            .columns
            .iter()
            .map(|col| {
                let gone = col.rank_of(c);
                let ranks = col
                    .ranks()
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != c)
                    .map(|(_, &r)| if r > gone { r - 1 } else { r })
                    .collect();
                Ranking::from_ranks(ranks)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Profile {
            m: self.m - 1,
            columns,
        })
    }

    /// Replaces voter `v`'s ranking.
    pub fn with_column(&self, v: usize, ranking: Ranking) -> Result<Profile, RankingError> {
        if ranking.m() != self.m {
            return Err(RankingError::DimensionMismatch {
                expected: self.m,
                got: ranking.m(),
            });
        }
        if v >= self.n() {
            return Err(RankingError::DimensionMismatch {
                expected: self.n(),
                got: v,
            });
        }
        let mut columns = self.columns.clone();
        columns[v] = ranking;
        Ok(Profile { m: self.m, columns })
    }
}
