//! Minimum distance: full enumeration for small dimensions, Brouwer–Zimmermann
//! over disjoint information sets otherwise.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::weights::weight_distribution;
use super::BinaryCode;

/// Dimension up to which [`min_distance`] enumerates the whole code.
pub const FULL_ENUMERATION_MAX_K: usize = 28;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DistanceEngine {
    Enumeration,
    BrouwerZimmermann,
}

impl std::fmt::Display for DistanceEngine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            DistanceEngine::Enumeration => "enumeration",
            DistanceEngine::BrouwerZimmermann => "Brouwer-Zimmermann",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistanceReport {
    /// Minimum nonzero weight; 0 for the zero code.
    pub distance: usize,
    pub engine: DistanceEngine,
    pub elapsed: Duration,
}

/// A generator matrix of the whole code that is systematic on `columns`
/// for its first `rank` rows; the remaining rows vanish on `columns`.
#[derive(Clone, Debug)]
pub(crate) struct InfoSet {
    pub columns: u128,
    pub rank: usize,
    pub rows: Vec<u128>,
}

/// Greedy pairwise disjoint information sets. Each set takes pivots at the
/// lowest-indexed columns not claimed by an earlier set; the last sets may be
/// rank deficient.
pub(crate) fn information_sets(code: &BinaryCode) -> Vec<InfoSet> {
    let k = code.k();
    let mut available = super::mask(code.n());
    let mut sets = Vec::new();
    while available != 0 && k > 0 {
        let mut rows = code.rows().to_vec();
        let mut columns = 0u128;
        let mut r = 0;
        let mut cols = available;
        while cols != 0 && r < k {
            let col = cols.trailing_zeros() as usize;
            cols &= cols - 1;
            let bit = 1u128 << col;
            let Some(p) = (r..k).find(|&i| rows[i] & bit != 0) else {
                continue;
            };
            rows.swap(r, p);
            let pivot = rows[r];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && *row & bit != 0 {
                    *row ^= pivot;
                }
            }
            columns |= bit;
            r += 1;
        }
        if r == 0 {
            break;
        }
        available &= !columns;
        sets.push(InfoSet {
            columns,
            rank: r,
            rows,
        });
    }
    sets
}

/// Calls `visit` on the XOR of every subset of `rows` whose smallest index is
/// `first` and whose size is at most `max_size`.
pub(crate) fn enumerate_subsets(rows: &[u128], first: usize, max_size: usize, mut visit: impl FnMut(u128)) {
    fn rec(rows: &[u128], start: usize, word: u128, left: usize, visit: &mut impl FnMut(u128)) {
        visit(word);
        if left == 0 {
            return;
        }
        for i in start..rows.len() {
            rec(rows, i + 1, word ^ rows[i], left - 1, visit);
        }
    }
    if max_size == 0 || first >= rows.len() {
        return;
    }
    rec(rows, first + 1, rows[first], max_size - 1, &mut visit);
}

/// Calls `visit` on the XOR of every subset of exactly `size` rows whose
/// smallest index is `first`.
fn enumerate_exact(rows: &[u128], first: usize, size: usize, mut visit: impl FnMut(u128)) {
    fn rec(rows: &[u128], start: usize, word: u128, left: usize, visit: &mut impl FnMut(u128)) {
        if left == 0 {
            visit(word);
            return;
        }
        if rows.len() - start < left {
            return;
        }
        for i in start..rows.len() {
            rec(rows, i + 1, word ^ rows[i], left - 1, visit);
        }
    }
    if size == 0 || first >= rows.len() {
        return;
    }
    rec(rows, first + 1, rows[first], size - 1, &mut visit);
}

/// Minimum distance by enumerating all codewords.
pub fn min_distance_enumeration(code: &BinaryCode) -> usize {
    if code.k() == 0 {
        return 0;
    }
    weight_distribution(code)
        .expect("dimension within the enumeration cap")
        .min_nonzero_weight()
        .expect("nonzero code")
}

/// Brouwer–Zimmermann minimum distance.
///
/// At level `w` every set enumerates the messages of exactly `w` rows. Once all
/// sets are done with level `w`, any codeword not yet seen has weight at least
/// `Σ max(0, w + 1 - (k - rank_j))` over the disjoint sets; the search stops
/// when that bound reaches the lightest codeword found.
pub fn min_distance_bz(code: &BinaryCode) -> usize {
    let k = code.k();
    if k == 0 {
        return 0;
    }
    let sets = information_sets(code);
    let mut best = code.rows().iter().map(|r| r.count_ones() as usize).min().expect("k > 0");
    for w in 1..=k {
        for (j, set) in sets.iter().enumerate() {
            let deficit = k - set.rank;
            if w <= deficit {
                continue;
            }
            let found = (0..k)
                .into_par_iter()
                .map(|first| {
                    let mut m = usize::MAX;
                    enumerate_exact(&set.rows, first, w, |word| {
                        let wt = word.count_ones() as usize;
                        if wt != 0 && wt < m {
                            m = wt;
                        }
                    });
                    m
                })
                .min()
                .unwrap_or(usize::MAX);
            best = best.min(found);
            let lower: usize = sets
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    let level = if i <= j { w + 1 } else { w };
                    level.saturating_sub(k - s.rank)
                })
                .sum();
            if lower >= best {
                return best;
            }
        }
    }
    best
}

/// Exact minimum distance, choosing the engine by dimension.
pub fn min_distance(code: &BinaryCode) -> DistanceReport {
    let start = Instant::now();
    let (distance, engine) = if code.k() <= FULL_ENUMERATION_MAX_K {
        (min_distance_enumeration(code), DistanceEngine::Enumeration)
    } else {
        (min_distance_bz(code), DistanceEngine::BrouwerZimmermann)
    };
    DistanceReport {
        distance,
        engine,
        elapsed: start.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::super::test_codes::*;
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn tiny_codes() {
        let rep = BinaryCode::from_rows(2, [bits("11")]).unwrap();
        assert_eq!(min_distance(&rep).distance, 2);
        assert_eq!(min_distance_bz(&rep), 2);
        let id = BinaryCode::from_rows(4, (0..4).map(|i| 1u128 << i)).unwrap();
        assert_eq!(min_distance(&id).distance, 1);
        assert_eq!(min_distance_bz(&hamming8()), 4);
        assert_eq!(min_distance(&BinaryCode::zero(5).unwrap()).distance, 0);
    }

    #[test]
    fn information_sets_are_disjoint() {
        let h = hamming8();
        let sets = information_sets(&h);
        assert_eq!(sets.len(), 2);
        assert_eq!(sets[0].columns & sets[1].columns, 0);
        assert!(sets.iter().all(|s| s.rank == 4));
    }

    #[test]
    fn bz_matches_enumeration_on_random_codes() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..30 {
            let n = rng.gen_range(8..60);
            let k = rng.gen_range(1..n.min(18));
            let rows: Vec<u128> = (0..k).map(|_| rng.gen::<u128>() & super::super::mask(n)).collect();
            // sparse rows give rank-deficient later sets
            let rows: Vec<u128> = rows.iter().map(|&r| r & rng.gen::<u128>()).collect();
            let c = BinaryCode::from_rows(n, rows).unwrap();
            if c.k() == 0 {
                continue;
            }
            assert_eq!(min_distance_bz(&c), min_distance_enumeration(&c), "n={n}");
        }
    }
}
