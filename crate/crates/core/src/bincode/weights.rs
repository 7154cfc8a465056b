use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::distance::{enumerate_subsets, information_sets};
use super::BinaryCode;
use crate::error::{Error, Result};

/// Largest dimension for which all `2^k` codewords are enumerated.
pub const ENUMERATION_CAP: usize = 34;

/// Rows folded into the inner lookup table of the enumeration kernel.
const INNER_BITS: usize = 10;

/// Number of codewords of each weight, `counts[w] = A_w` for `w = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub n: usize,
    pub counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn get(&self, w: usize) -> u64 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    pub fn min_nonzero_weight(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&w| self.counts[w] > 0)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..=self.n).all(|w| self.get(w) == self.get(self.n - w))
    }

    /// `w,A_w` lines, zero counts omitted.
    pub fn to_csv(&self) -> String {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, c)| format!("{w},{c}\n"))
            .collect()
    }
}

/// Exact weight distribution by enumerating every codeword.
///
/// The generator rows are split into an inner block of up to ten rows, whose
/// `2^10` combinations are tabulated once, and an outer block walked in
/// Gray-code order so each step XORs a single row into the running codeword.
pub fn weight_distribution(code: &BinaryCode) -> Result<WeightDistribution> {
    weight_distribution_with_threads(code, None)
}

/// [`weight_distribution`] on a dedicated pool of `threads` workers. The
/// result does not depend on the thread count.
pub fn weight_distribution_with_threads(
    code: &BinaryCode,
    threads: Option<usize>,
) -> Result<WeightDistribution> {
    let k = code.k();
    if k > ENUMERATION_CAP {
        return Err(Error::Capacity {
            k,
            cap: ENUMERATION_CAP,
        });
    }
    let run = || enumerate_all(code);
    let counts = match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .install(run),
        None => run(),
    };
    Ok(WeightDistribution { n: code.n(), counts })
}

fn enumerate_all(code: &BinaryCode) -> Vec<u64> {
    let n = code.n();
    let k = code.k();
    let rows = code.rows();
    let m = k.min(INNER_BITS);
    let (outer, inner) = rows.split_at(k - m);

    let mut table = vec![0u128; 1 << m];
    for j in 1..table.len() {
        table[j] = table[j & (j - 1)] ^ inner[j.trailing_zeros() as usize];
    }

    let outer_len: u64 = 1 << outer.len();
    let chunks = outer_len.min(1024);
    let per_chunk = outer_len / chunks;

    let hist = (0..chunks)
        .into_par_iter()
        .map(|ci| {
            let start = ci * per_chunk;
            let end = start + per_chunk;
            let gray = start ^ (start >> 1);
            let mut word = outer
                .iter()
                .enumerate()
                .filter(|(b, _)| gray >> b & 1 == 1)
                .fold(0u128, |acc, (_, &r)| acc ^ r);
            let mut h = vec![0u64; 129];
            let mut lanes = [[0u32; 129]; LANES];
            let mut pending = 0u64;
            let mut i = start;
            loop {
                accumulate(word, &table, &mut lanes);
                pending += table.len() as u64;
                i += 1;
                // u32 lane counters are flushed well before they can overflow
                if i == end || pending >= 1 << 30 {
                    for lane in lanes.iter_mut() {
                        for (acc, x) in h.iter_mut().zip(lane.iter_mut()) {
                            *acc += *x as u64;
                            *x = 0;
                        }
                    }
                    pending = 0;
                }
                if i == end {
                    break;
                }
                word ^= outer[i.trailing_zeros() as usize];
            }
            h
        })
        .reduce(
            || vec![0u64; 129],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(&b) {
                    *x += y;
                }
                a
            },
        );
    hist[..=n].to_vec()
}

const LANES: usize = 8;

#[inline(always)]
fn accumulate(word: u128, table: &[u128], lanes: &mut [[u32; 129]; LANES]) {
    let mut blocks = table.chunks_exact(LANES);
    for b in &mut blocks {
        for l in 0..LANES {
            lanes[l][(word ^ b[l]).count_ones() as usize] += 1;
        }
    }
    for &t in blocks.remainder() {
        lanes[0][(word ^ t).count_ones() as usize] += 1;
    }
}

/// Exact `A_0..=A_max_weight`.
///
/// Uses `m` pairwise disjoint information sets: a codeword of weight at most
/// `max_weight` has weight at most `t = max_weight / m` on at least one of
/// them, so enumerating the messages of weight `≤ t` on each set finds it. It
/// is counted on the first set where it appears. Falls back to full
/// enumeration when that is cheaper.
pub fn low_weight_counts(code: &BinaryCode, max_weight: usize) -> Result<Vec<u64>> {
    let k = code.k();
    let sets: Vec<_> = information_sets(code)
        .into_iter()
        .filter(|s| s.rank == k)
        .collect();
    let m = sets.len();
    let limit = max_weight.min(code.n());
    if m == 0 {
        let d = weight_distribution(code)?;
        return Ok(d.counts[..=limit].to_vec());
    }
    let t = max_weight / m;
    let cost: f64 = m as f64 * (0..=t.min(k)).map(|i| binomial(k, i)).sum::<f64>();
    if k <= ENUMERATION_CAP && cost >= (k as f64).exp2() {
        let d = weight_distribution(code)?;
        return Ok(d.counts[..=limit].to_vec());
    }

    let mut counts = vec![0u64; limit + 1];
    for (j, set) in sets.iter().enumerate() {
        let earlier: Vec<u128> = sets[..j].iter().map(|s| s.columns).collect();
        let local = (0..k)
            .into_par_iter()
            .map(|first| {
                let mut c = vec![0u64; limit + 1];
                if first == 0 && j == 0 {
                    // the zero codeword
                    c[0] += 1;
                }
                enumerate_subsets(&set.rows, first, t, |word| {
                    let w = word.count_ones() as usize;
                    if w <= limit && earlier.iter().all(|&cols| (word & cols).count_ones() as usize > t) {
                        c[w] += 1;
                    }
                });
                c
            })
            .reduce(
                || vec![0u64; limit + 1],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(&b) {
                        *x += y;
                    }
                    a
                },
            );
        for (x, y) in counts.iter_mut().zip(&local) {
            *x += y;
        }
    }
    Ok(counts)
}

/// Whether the code has a nonzero word of weight below `w`; a cheap screen
/// before classification.
pub fn has_word_below(code: &BinaryCode, w: usize) -> Result<bool> {
    if w <= 1 {
        return Ok(false);
    }
    Ok(low_weight_counts(code, w - 1)?[1..].iter().any(|&c| c > 0))
}

fn binomial(n: usize, r: usize) -> f64 {
    (0..r).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}
