//! Fits the A_12 relation of the length-58 family from sampled extensions of the K images.

use selfdual::bincode::W58Calibration;
use selfdual::tables::{calibrate_w58, w58_samples};

fn main() {
    let samples = w58_samples(58, 20_000, 24).unwrap();
    println!("{} extremal samples", samples.len());
    for s in samples.iter().take(6) {
        println!("  {} beta={} gamma={} A10={} A12={}", s.base, s.beta, s.gamma, s.a10, s.a12);
    }
    let report = calibrate_w58(&samples).unwrap();
    println!("fitted {:?}", report.fitted);
    println!("shipped {:?}", W58Calibration::FROZEN);
    println!("validated on {}, mismatches {}", report.validated, report.mismatches.len());
}
