//! Fitting the `A_12` relation of the length-58 family 2 on constructed codes.
//!
//! For a Type I `[58,29,10]` code the shadow weights give `β = B_5` and
//! `γ = B_9` directly, so `(β, γ, A_12)` can be sampled without trusting any
//! printed parameters.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bincode::{gray_image, low_weight_counts, shadow_low_weights, W58Calibration};
use crate::error::{Error, Result};
use crate::extend::extend_free_binary;
use crate::lifts::BuiltinCode;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct W58Sample {
    pub base: BuiltinCode,
    pub x: u128,
    pub beta: i64,
    pub gamma: i64,
    pub a10: u64,
    pub a12: u64,
}

/// Random `c = 1` extensions of the `K_i` images (taken in turn) that are
/// extremal and lie in family 2 (`B_1 = 0`). Stops once `wanted` samples
/// covering at least two values of `β` are collected, or after
/// `max_attempts` extensions.
pub fn w58_samples(seed: u64, max_attempts: usize, wanted: usize) -> Result<Vec<W58Sample>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let images = BuiltinCode::K
        .iter()
        .map(|&b| Ok((b, gray_image(&b.code())?)))
        .collect::<Result<Vec<_>>>()?;
    let mut out: Vec<W58Sample> = Vec::new();
    for attempt in 0..max_attempts {
        if out.len() >= wanted && out.iter().any(|s| s.beta != out[0].beta) {
            break;
        }
        let (base, image) = &images[attempt % images.len()];
        let mut x = rng.gen::<u128>() & ((1u128 << image.n()) - 1);
        if x.count_ones().is_multiple_of(2) {
            x ^= 1;
        }
        let code = extend_free_binary(image, x)?;
        let a = low_weight_counts(&code, 12)?;
        if a[1..10].iter().any(|&v| v != 0) {
            continue;
        }
        let s = shadow_low_weights(&code, 9)?;
        if s[1] != 0 {
            continue;
        }
        out.push(W58Sample {
            base: *base,
            x,
            beta: s[5] as i64,
            gamma: s[9] as i64,
            a10: a[10],
            a12: a[12],
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct CalibrationReport {
    pub fitted: W58Calibration,
    pub training: [W58Sample; 3],
    pub validated: usize,
    pub mismatches: Vec<W58Sample>,
}

impl CalibrationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.validated > 0 && self.fitted == W58Calibration::FROZEN
    }
}

/// Fits on the first three affinely independent samples and checks the
/// remaining ones, including the `A_10` relation, out of sample.
pub fn calibrate_w58(samples: &[W58Sample]) -> Result<CalibrationReport> {
    let training = pick_independent(samples)
        .ok_or_else(|| Error::InvalidArgument("no three affinely independent samples".into()))?;
    let fitted = W58Calibration::fit(&training.map(|s| (s.beta, s.gamma, s.a12)))?;
    let rest: Vec<_> = samples.iter().filter(|s| !training.contains(s)).collect();
    let mismatches = rest
        .iter()
        .filter(|s| {
            fitted.a12(s.beta, s.gamma) != s.a12 as i64 || 319 - 24 * s.beta - 2 * s.gamma != s.a10 as i64
        })
        .map(|s| **s)
        .collect();
    Ok(CalibrationReport {
        fitted,
        training,
        validated: rest.len(),
        mismatches,
    })
}

fn pick_independent(samples: &[W58Sample]) -> Option<[W58Sample; 3]> {
    let n = samples.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (p, q, r) = (samples[i], samples[j], samples[k]);
                let det = (q.beta - p.beta) * (r.gamma - p.gamma) - (r.beta - p.beta) * (q.gamma - p.gamma);
                if det != 0 {
                    return Some([p, q, r]);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(beta: i64, gamma: i64) -> W58Sample {
        W58Sample {
            base: BuiltinCode::K1,
            x: 0,
            beta,
            gamma,
            a10: (319 - 24 * beta - 2 * gamma) as u64,
            a12: (3132 + 152 * beta + 2 * gamma) as u64,
        }
    }

    #[test]
    fn fit_recovers_synthetic_model() {
        let s = [sample(0, 50), sample(0, 50), sample(0, 52), sample(1, 44), sample(1, 60)];
        let r = calibrate_w58(&s).unwrap();
        assert_eq!(r.fitted, W58Calibration::FROZEN);
        assert_eq!(r.training[1].gamma, 52);
        assert!(r.passed());
    }

    #[test]
    fn collinear_samples_rejected() {
        let s = [sample(0, 50), sample(0, 52), sample(0, 54)];
        assert!(calibrate_w58(&s).is_err());
    }
}
