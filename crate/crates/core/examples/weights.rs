//! Weight distribution, shadow and minimum distance of binary images.

use std::time::Instant;

use selfdual::bincode::{classify, gray_image, min_distance, shadow_low_weights, weight_distribution};
use selfdual::extend::extend_free_binary;
use selfdual::lifts::BuiltinCode;
use selfdual::qdc::theorem5_codes;
use selfdual::tables::w58_samples;

fn main() {
    let k1 = gray_image(&BuiltinCode::K1.code()).unwrap();
    let dist = weight_distribution(&k1).unwrap();
    println!("K1 image: A_w for w <= 16");
    for (w, a) in dist.counts.iter().enumerate().take(17).filter(|(_, &a)| a > 0) {
        println!("  {w:>2} {a}");
    }

    let sample = w58_samples(58, 500, 1).unwrap().remove(0);
    let ext = extend_free_binary(&gray_image(&sample.base.code()).unwrap(), sample.x).unwrap();
    println!("extension of {} to length 58: shadow B_w for w <= 9 = {:?}", sample.base, shadow_low_weights(&ext, 9).unwrap());

    let l1 = gray_image(&BuiltinCode::L1.code()).unwrap();
    let class = classify(&l1).unwrap();
    println!("L1 image: {} {:?}", class.summary, class.id.map(|id| id.to_string()));

    let big = theorem5_codes(11).unwrap().remove(0);
    let bin = gray_image(&big.code).unwrap();
    let start = Instant::now();
    let report = min_distance(&bin);
    println!("{}: d = {} via {:?} in {:.2?}", big.label, report.distance, report.engine, start.elapsed());
}
