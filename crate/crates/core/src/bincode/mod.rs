//! Binary codes: Gray images of ring codes, packed-bit linear algebra, weight
//! distributions, minimum distance, Type and extremality classification, and
//! weight-enumerator family identification.
//!
//! Codewords are packed into a `u128` (coordinate `i` is bit `i`), so lengths
//! up to 128 are supported.

mod distance;
mod enumerator;
mod registry;
mod shadow;
mod weights;

pub use distance::{min_distance, min_distance_bz, min_distance_enumeration, DistanceEngine, DistanceReport};
pub use enumerator::{
    classify, identify_enumerator, identify_from_counts, Classification, EnumeratorId, Family, W58Calibration,
};
pub use shadow::shadow_low_weights;
pub use registry::{KnownParamsRegistry, Novelty, RegistryEntry, RegistryLayer, Source};
pub use weights::{
    has_word_below, low_weight_counts, weight_distribution, weight_distribution_with_threads, WeightDistribution,
    ENUMERATION_CAP,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{LinearCode, RingMatrix};
use crate::rings::{GrayImage, F2};

pub const MAX_LENGTH: usize = 128;

/// Type of a binary (or ring) self-dual code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CodeType {
    #[serde(rename = "I")]
    TypeI,
    #[serde(rename = "II")]
    TypeII,
    #[serde(rename = "not self-dual")]
    NotSelfDual,
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodeType::TypeI => "Type I",
            CodeType::TypeII => "Type II",
            CodeType::NotSelfDual => "not self-dual",
        })
    }
}

/// A binary linear code held as the rows of its reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryCode {
    n: usize,
    rows: Vec<u128>,
    pivots: Vec<usize>,
}

#[inline]
pub(crate) fn mask(n: usize) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

pub fn pack(bits: &[F2]) -> u128 {
    bits.iter()
        .enumerate()
        .filter(|(_, b)| b.bit())
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

pub fn unpack(word: u128, n: usize) -> Vec<F2> {
    (0..n).map(|i| F2::new(word >> i & 1 == 1)).collect()
}

/// Reduced row echelon form, scanning columns left to right. Returns the
/// nonzero rows and their pivot columns.
fn rref(n: usize, mut rows: Vec<u128>) -> (Vec<u128>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let bit = 1u128 << col;
        let Some(p) = (r..rows.len()).find(|&i| rows[i] & bit != 0) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && *row & bit != 0 {
                *row ^= pivot_row;
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

impl BinaryCode {
    /// The code spanned by `rows` (dependent rows are dropped).
    pub fn from_rows(n: usize, rows: impl IntoIterator<Item = u128>) -> Result<Self> {
        if n > MAX_LENGTH {
            return Err(Error::InvalidArgument(format!(
                "length {n} exceeds the supported maximum {MAX_LENGTH}"
            )));
        }
        let rows: Vec<u128> = rows.into_iter().collect();
        if rows.iter().any(|r| r & !mask(n) != 0) {
            return Err(Error::InvalidArgument("row has bits beyond the code length".into()));
        }
        let (rows, pivots) = rref(n, rows);
        Ok(BinaryCode { n, rows, pivots })
    }

    pub fn from_matrix(m: &RingMatrix<F2>) -> Result<Self> {
        Self::from_rows(m.cols(), m.iter_rows().map(pack))
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::from_rows(n, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Rows of the reduced echelon generator.
    pub fn rows(&self) -> &[u128] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn to_matrix(&self) -> RingMatrix<F2> {
        if self.rows.is_empty() {
            return RingMatrix::zeros(0, self.n);
        }
        RingMatrix::from_rows(self.rows.iter().map(|&r| unpack(r, self.n)).collect())
            .expect("uniform rows")
    }

    pub fn contains(&self, word: u128) -> bool {
        let mut w = word;
        for (&row, &p) in self.rows.iter().zip(&self.pivots) {
            if w >> p & 1 == 1 {
                w ^= row;
            }
        }
        w == 0
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, &a)| {
            self.rows[i..]
                .iter()
                .all(|&b| (a & b).count_ones() % 2 == 0)
        })
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.k() == self.n && self.is_self_orthogonal()
    }

    /// Type II iff self-dual and every generator row has weight divisible by
    /// 4; in a self-orthogonal binary code that is enough for every codeword.
    pub fn classify_type(&self) -> CodeType {
        if !self.is_self_dual() {
            CodeType::NotSelfDual
        } else if self.rows.iter().all(|r| r.count_ones() % 4 == 0) {
            CodeType::TypeII
        } else {
            CodeType::TypeI
        }
    }

    /// Applies a coordinate permutation: coordinate `i` of the result is
    /// coordinate `perm[i]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument("permutation length mismatch".into()));
        }
        let rows = self.rows.iter().map(|&r| {
            perm.iter()
                .enumerate()
                .fold(0u128, |acc, (i, &src)| acc | ((r >> src & 1) << i))
        });
        Self::from_rows(self.n, rows.collect::<Vec<_>>())
    }

    /// Standard form `[I_k | A]`: Gaussian elimination taking the leftmost
    /// available pivot, swapping a column into place only when the current
    /// column has no pivot.
    pub fn standard_form(&self) -> StandardForm {
        let k = self.k();
        let mut perm: Vec<usize> = (0..self.n).collect();
        let mut rows = self.rows.clone();
        let swap_cols = |rows: &mut Vec<u128>, a: usize, b: usize| {
            for r in rows.iter_mut() {
                let (x, y) = (*r >> a & 1, *r >> b & 1);
                if x != y {
                    *r ^= (1 << a) | (1 << b);
                }
            }
        };
        for r in 0..k {
            let has_pivot = |rows: &[u128], col: usize| (r..k).find(|&i| rows[i] >> col & 1 == 1);
            let col = (r..self.n)
                .find(|&c| has_pivot(&rows, c).is_some())
                .expect("rows are independent");
            if col != r {
                swap_cols(&mut rows, r, col);
                perm.swap(r, col);
            }
            let p = has_pivot(&rows, r).expect("pivot present");
            rows.swap(r, p);
            let pivot_row = rows[r];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && *row >> r & 1 == 1 {
                    *row ^= pivot_row;
                }
            }
        }
        let a = rows.iter().map(|&row| row >> k).collect();
        StandardForm {
            n: self.n,
            k,
            rows,
            a,
            permutation: perm,
        }
    }

    pub fn min_distance(&self) -> usize {
        min_distance(self).distance
    }
}

/// A generator `[I_k | A]` for a column permutation of a code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    pub n: usize,
    pub k: usize,
    /// Full rows `[I_k | A]`.
    pub rows: Vec<u128>,
    /// Rows of `A`, each `n - k` bits wide.
    pub a: Vec<u128>,
    /// Coordinate `i` of the standard-form code is coordinate
    /// `permutation[i]` of the original.
    pub permutation: Vec<usize>,
}

impl StandardForm {
    pub fn code(&self) -> BinaryCode {
        BinaryCode::from_rows(self.n, self.rows.iter().copied()).expect("valid rows")
    }

    pub fn a_matrix(&self) -> RingMatrix<F2> {
        let w = self.n - self.k;
        RingMatrix::from_rows(self.a.iter().map(|&r| unpack(r, w)).collect()).expect("uniform")
    }
}

/// Binary Gray image of a code over one of the rings: the F2-span of the images
/// of `s·g` for every generator row `g` and every additive basis scalar `s`.
pub fn gray_image<R: GrayImage>(code: &LinearCode<R>) -> Result<BinaryCode> {
    let n = code.length() * R::KIND.binary_width();
    if n > MAX_LENGTH {
        return Err(Error::InvalidArgument(format!(
            "binary image length {n} exceeds the supported maximum {MAX_LENGTH}"
        )));
    }
    let mut rows = Vec::new();
    for g in code.generator().iter_rows() {
        for &s in R::ADDITIVE_BASIS {
            let scaled: Vec<R> = g.iter().map(|&x| s * x).collect();
            rows.push(pack(&R::to_binary(&scaled)));
        }
    }
    BinaryCode::from_rows(n, rows)
}

/// Rains' bound on the minimum distance of a binary self-dual code of length
/// `n`.
pub fn rains_bound(n: usize) -> usize {
    if n % 24 == 22 {
        4 * (n / 24) + 6
    } else {
        4 * (n / 24) + 4
    }
}

/// The distance an extremal code of length `n` is expected to reach. Length
/// 58 follows the literature convention `d = 10` used by its enumerator
/// families rather than the Rains value 12.
pub fn extremal_distance(n: usize) -> usize {
    if n == 58 {
        10
    } else {
        rains_bound(n)
    }
}

pub fn is_extremal(code: &BinaryCode) -> bool {
    code.is_self_dual() && code.min_distance() == extremal_distance(code.n())
}

/// `[n,k,d]` together with the Type of a binary code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSummary {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub code_type: CodeType,
}

impl fmt::Display for CodeSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]_2 {}", self.n, self.k, self.d, self.code_type)
    }
}

pub fn summarize(code: &BinaryCode) -> CodeSummary {
    CodeSummary {
        n: code.n(),
        k: code.k(),
        d: code.min_distance(),
        code_type: code.classify_type(),
    }
}
