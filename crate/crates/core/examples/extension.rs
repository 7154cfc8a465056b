//! Extending self-dual codes by two coordinates, over F2 and over F2+uF2.

use selfdual::bincode::{classify, gray_image, KnownParamsRegistry};
use selfdual::extend::{extend_free_binary, extension_search, psi_code, SearchBase, SearchConfig};
use selfdual::lifts::BuiltinCode;
use selfdual::tables::{parse_binary_x, row_code, TABLE5, TABLE6};

fn main() {
    let row = &TABLE5[0];
    let base = gray_image(&row.base.code()).unwrap();
    let ext = extend_free_binary(&base, parse_binary_x(row.x).unwrap()).unwrap();
    let class = classify(&ext).unwrap();
    println!("{} with X = {}: {} {:?}", row.base, row.x, class.summary, class.id.map(|i| i.to_string()));

    let row = &TABLE6[0];
    let class = classify(&row_code(6, row).unwrap()).unwrap();
    println!("{} over F2+uF2, c = {}: {} {:?}", row.base, row.c, class.summary, class.id.map(|i| i.to_string()));

    let config = SearchConfig {
        name: BuiltinCode::K1.to_string(),
        targets: Default::default(),
        seed: 2,
        budget: 400,
    };
    let registry = KnownParamsRegistry::shipped();
    let out = extension_search(&SearchBase::Binary(gray_image(&BuiltinCode::K1.code()).unwrap()), &config, &registry).unwrap();
    println!("K1: {} random extensions, {} with parameters new to the registry", out.tried, out.records.len());

    let psi = psi_code(&BuiltinCode::L2.code());
    let out = extension_search(&SearchBase::OverF2u(psi), &SearchConfig { name: "L2".into(), ..config }, &registry).unwrap();
    println!("L2 over F2+uF2: {} random extensions, {} new", out.tried, out.records.len());
}
