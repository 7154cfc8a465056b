//! Arithmetic in F4+uF4 and the Gray maps down to F2.

use selfdual::rings::{format_vector, gray_phi, gray_psi, lee_weight, mu, parse_f4u_expr, Ring, F4u};

fn main() {
    let x = parse_f4u_expr("1+w+uw").unwrap();
    let y = parse_f4u_expr("u+w").unwrap();
    println!("x = {x}, y = {y}, x+y = {}, xy = {}, x^2 = {}", x + y, x * y, x.square());
    println!("mu(x) = {}, Lee weight of x = {}", mu(x), lee_weight(x));

    let units = F4u::elements().filter(|e| e.is_unit()).count();
    println!("F4+uF4 has {units} units out of {}", F4u::ORDER);

    let v = vec![x, y, F4u::ONE, F4u::U];
    let psi = gray_psi(&v);
    let bits = gray_phi(&psi);
    println!("v = {}", format_vector(&v));
    println!("psi(v) = {}", format_vector(&psi));
    println!("phi(psi(v)) = {}", format_vector(&bits));
    let lee: u32 = v.iter().map(|&e| lee_weight(e)).sum();
    let hamming = bits.iter().filter(|b| b.bit()).count();
    println!("Lee weight {lee} = Hamming weight {hamming}");
}
