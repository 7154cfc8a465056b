//! Duals, doubly-even subcodes and shadows of binary codes.

use super::{low_weight_counts, BinaryCode};
use crate::error::{Error, Result};

impl BinaryCode {
    /// The dual code, from the standard form `[I_k | A]` whose dual is
    /// `[Aᵀ | I_{n-k}]`.
    pub fn dual(&self) -> BinaryCode {
        let (n, k) = (self.n(), self.k());
        let sf = self.standard_form();
        let rows: Vec<u128> = (0..n - k)
            .map(|j| {
                let mut v = 1u128 << (k + j);
                for (i, &a) in sf.a.iter().enumerate() {
                    v |= (a >> j & 1) << i;
                }
                // undo the column permutation
                (0..n).fold(0u128, |acc, c| acc | ((v >> c & 1) << sf.permutation[c]))
            })
            .collect();
        BinaryCode::from_rows(n, rows).expect("same length")
    }

    /// Codewords of weight divisible by 4. For a self-orthogonal code this is
    /// a subcode of index 1 or 2.
    pub fn doubly_even_subcode(&self) -> Result<BinaryCode> {
        if !self.is_self_orthogonal() {
            return Err(Error::Precondition("doubly-even subcode needs a self-orthogonal code".into()));
        }
        let odd: Vec<usize> = (0..self.k()).filter(|&i| self.rows()[i].count_ones() % 4 == 2).collect();
        let Some((&first, rest)) = odd.split_first() else {
            return Ok(self.clone());
        };
        let fix = self.rows()[first];
        let rows = self.rows().iter().enumerate().filter(|&(i, _)| i != first).map(|(i, &r)| {
            if rest.contains(&i) {
                r ^ fix
            } else {
                r
            }
        });
        BinaryCode::from_rows(self.n(), rows.collect::<Vec<_>>())
    }
}

/// `B_0..=B_max_weight` of the shadow `C_0^⊥ \ C` of a Type I self-dual code.
///
/// When `n ≡ 2 (mod 8)` every shadow vector has odd weight, so the shadow
/// counts are the odd-weight counts of `C_0^⊥`.
pub fn shadow_low_weights(code: &BinaryCode, max_weight: usize) -> Result<Vec<u64>> {
    if !code.is_self_dual() {
        return Err(Error::Precondition("the shadow is defined for self-dual codes".into()));
    }
    if code.n() % 8 != 2 {
        return Err(Error::InvalidArgument(format!(
            "shadow counts from parity need n ≡ 2 (mod 8), got {}",
            code.n()
        )));
    }
    let c0 = code.doubly_even_subcode()?;
    if c0.k() == code.k() {
        return Err(Error::Precondition("Type II codes have no shadow".into()));
    }
    let counts = low_weight_counts(&c0.dual(), max_weight)?;
    Ok(counts
        .into_iter()
        .enumerate()
        .map(|(w, c)| if w % 2 == 1 { c } else { 0 })
        .collect())
}
