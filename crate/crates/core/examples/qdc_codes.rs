//! The explicit QDC families and an ad hoc pure code over F4.

use selfdual::bincode::{gray_image, summarize};
use selfdual::qdc::{build_p, is_self_dual, product_identity_check, theorem5_codes, QrCirculantSpec};
use selfdual::rings::{parse_vector, F4};

fn main() {
    for p in [3, 7, 11] {
        for code in theorem5_codes(p).unwrap() {
            let bin = gray_image(&code.code).unwrap();
            println!("{:<45} {}", code.label, summarize(&bin));
        }
    }

    let s = parse_vector::<F4>("0Ww").unwrap();
    let spec = QrCirculantSpec::new(7, s[0], s[1], s[2]).unwrap();
    let id = product_identity_check(&spec);
    println!("Q_7(0, W, w) Q^T closed form agrees = {}", id.agrees);
    let code = build_p(&spec);
    println!("P_7(0, W, w) self-dual = {}", is_self_dual(&code).unwrap());
    println!("binary image {}", summarize(&gray_image(&code).unwrap()));
}
