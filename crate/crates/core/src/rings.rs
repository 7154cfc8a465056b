//! Arithmetic in the four characteristic-2 rings F2, F2+uF2, F4 and F4+uF4,
//! the Gray maps between them, and the projection/lift element maps.
//!
//! Every element is a small bit packing:
//!
//! | ring    | packing                                   | symbols            |
//! |---------|-------------------------------------------|--------------------|
//! | F2      | `a`                                       | `0 1`              |
//! | F2+uF2  | `a + 2b` for `a + b·u`                    | `0 1 u 3`          |
//! | F4      | `a0 + 2a1` for `a0 + a1·ω`                | `0 1 w W`          |
//! | F4+uF4  | `x0 + 2x1 + 4x2 + 8x3` for `(x0+x1ω)+(x2+x3ω)u` | hex digit `0-f` |
//!
//! Multiplication goes through lookup tables that are built at compile time.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which of the four supported rings a value lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RingKind {
    #[serde(rename = "F2")]
    F2,
    #[serde(rename = "F2uF2")]
    F2u,
    #[serde(rename = "F4")]
    F4,
    #[serde(rename = "F4uF4")]
    F4u,
}

impl RingKind {
    pub fn name(self) -> &'static str {
        match self {
            RingKind::F2 => "F2",
            RingKind::F2u => "F2uF2",
            RingKind::F4 => "F4",
            RingKind::F4u => "F4uF4",
        }
    }

    /// Number of binary coordinates one symbol of this ring occupies in the
    /// binary Gray image.
    pub fn binary_width(self) -> usize {
        match self {
            RingKind::F2 => 1,
            RingKind::F2u | RingKind::F4 => 2,
            RingKind::F4u => 4,
        }
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for RingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F2" => Ok(RingKind::F2),
            "F2uF2" | "F2+uF2" => Ok(RingKind::F2u),
            "F4" => Ok(RingKind::F4),
            "F4uF4" | "F4+uF4" => Ok(RingKind::F4u),
            other => Err(Error::Parse(format!("unknown ring `{other}`"))),
        }
    }
}

/// Common interface of the four element types.
///
/// All rings here have characteristic 2, so negation is the identity and
/// subtraction coincides with addition.
pub trait Ring:
    Copy
    + Eq
    + Ord
    + std::hash::Hash
    + fmt::Debug
    + fmt::Display
    + Default
    + Send
    + Sync
    + Add<Output = Self>
    + AddAssign
    + Sub<Output = Self>
    + Mul<Output = Self>
    + MulAssign
    + Neg<Output = Self>
    + 'static
{
    const KIND: RingKind;
    const ORDER: u8;
    const ZERO: Self;
    const ONE: Self;

    /// Builds an element from its bit packing. Bits above the ring's width
    /// are rejected.
    fn from_bits(bits: u8) -> Option<Self>;
    fn bits(self) -> u8;
    fn symbol(self) -> char;
    fn from_symbol(c: char) -> Option<Self>;

    /// Hamming weight of the element's binary Gray image.
    fn gray_weight(self) -> u32;

    fn elements() -> impl Iterator<Item = Self> {
        (0..Self::ORDER).map(|b| Self::from_bits(b).expect("in range"))
    }

    fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    fn square(self) -> Self {
        self * self
    }

    /// `n·x`, i.e. `x` added to itself `n` times.
    fn times(self, n: i64) -> Self {
        if n.rem_euclid(2) == 1 {
            self
        } else {
            Self::ZERO
        }
    }

    fn is_unit(self) -> bool {
        Self::elements().any(|y| self * y == Self::ONE)
    }
}

macro_rules! ring_ops {
    ($ty:ident, $mul:expr) => {
        #[allow(clippy::suspicious_arithmetic_impl)]
        impl Add for $ty {
            type Output = $ty;
            #[inline(always)]
            fn add(self, rhs: $ty) -> $ty {
                $ty(self.0 ^ rhs.0)
            }
        }

        #[allow(clippy::suspicious_op_assign_impl)]
        impl AddAssign for $ty {
            #[inline(always)]
            fn add_assign(&mut self, rhs: $ty) {
                self.0 ^= rhs.0;
            }
        }

        #[allow(clippy::suspicious_arithmetic_impl)]
        impl Sub for $ty {
            type Output = $ty;
            #[inline(always)]
            fn sub(self, rhs: $ty) -> $ty {
                $ty(self.0 ^ rhs.0)
            }
        }

        impl Neg for $ty {
            type Output = $ty;
            #[inline(always)]
            fn neg(self) -> $ty {
                self
            }
        }

        impl Mul for $ty {
            type Output = $ty;
            #[inline(always)]
            fn mul(self, rhs: $ty) -> $ty {
                let table: &[[u8; $ty::ORDER_USIZE]; $ty::ORDER_USIZE] = &$mul;
                $ty(table[self.0 as usize][rhs.0 as usize])
            }
        }

        impl MulAssign for $ty {
            #[inline(always)]
            fn mul_assign(&mut self, rhs: $ty) {
                *self = *self * rhs;
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.symbol())
            }
        }
    };
}

// ---------------------------------------------------------------------------
// F2

/// Element of the binary field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2(u8);

impl F2 {
    const ORDER_USIZE: usize = 2;
    pub const fn new(bit: bool) -> Self {
        F2(bit as u8)
    }
    pub fn bit(self) -> bool {
        self.0 == 1
    }
}

const F2_MUL: [[u8; 2]; 2] = [[0, 0], [0, 1]];
ring_ops!(F2, F2_MUL);

impl Ring for F2 {
    const KIND: RingKind = RingKind::F2;
    const ORDER: u8 = 2;
    const ZERO: Self = F2(0);
    const ONE: Self = F2(1);

    fn from_bits(bits: u8) -> Option<Self> {
        (bits < 2).then_some(F2(bits))
    }
    fn bits(self) -> u8 {
        self.0
    }
    fn symbol(self) -> char {
        if self.0 == 0 {
            '0'
        } else {
            '1'
        }
    }
    fn from_symbol(c: char) -> Option<Self> {
        match c {
            '0' => Some(F2(0)),
            '1' => Some(F2(1)),
            _ => None,
        }
    }
    fn gray_weight(self) -> u32 {
        self.0 as u32
    }
}

// ---------------------------------------------------------------------------
// F2 + uF2

/// Element `a + b·u` of F2+uF2 (u² = 0), packed as `a | b << 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2u(u8);

impl F2u {
    const ORDER_USIZE: usize = 4;
    pub const U: F2u = F2u(2);
    /// `1 + u`, written `3` in extension-vector strings.
    pub const ONE_PLUS_U: F2u = F2u(3);

    pub const fn new(a: bool, b: bool) -> Self {
        F2u(a as u8 | (b as u8) << 1)
    }
    /// The constant part `a`.
    pub fn a(self) -> bool {
        self.0 & 1 == 1
    }
    /// The `u` coefficient `b`.
    pub fn b(self) -> bool {
        self.0 & 2 == 2
    }
}

const fn f2u_mul_table() -> [[u8; 4]; 4] {
    let mut t = [[0u8; 4]; 4];
    let mut x = 0;
    while x < 4 {
        let mut y = 0;
        while y < 4 {
            let (a, b) = (x & 1, x >> 1);
            let (c, d) = (y & 1, y >> 1);
            // (a + bu)(c + du) = ac + (ad + bc)u
            t[x][y] = ((a & c) | (((a & d) ^ (b & c)) << 1)) as u8;
            y += 1;
        }
        x += 1;
    }
    t
}

const F2U_MUL: [[u8; 4]; 4] = f2u_mul_table();
ring_ops!(F2u, F2U_MUL);

impl Ring for F2u {
    const KIND: RingKind = RingKind::F2u;
    const ORDER: u8 = 4;
    const ZERO: Self = F2u(0);
    const ONE: Self = F2u(1);

    fn from_bits(bits: u8) -> Option<Self> {
        (bits < 4).then_some(F2u(bits))
    }
    fn bits(self) -> u8 {
        self.0
    }
    fn symbol(self) -> char {
        ['0', '1', 'u', '3'][self.0 as usize]
    }
    fn from_symbol(c: char) -> Option<Self> {
        match c {
            '0' => Some(F2u(0)),
            '1' => Some(F2u(1)),
            'u' => Some(F2u(2)),
            '3' => Some(F2u(3)),
            _ => None,
        }
    }
    fn gray_weight(self) -> u32 {
        // a + bu -> (b, a + b)
        let (a, b) = (self.0 & 1, self.0 >> 1);
        (b + (a ^ b)) as u32
    }
}

// ---------------------------------------------------------------------------
// F4

/// Element `a0 + a1·ω` of F4 (ω² = ω + 1), packed as `a0 | a1 << 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F4(u8);

impl F4 {
    const ORDER_USIZE: usize = 4;
    pub const W: F4 = F4(2);
    /// ω̄ = 1 + ω
    pub const W_BAR: F4 = F4(3);
}

const fn f4_mul_raw(x: usize, y: usize) -> usize {
    let (a0, a1) = (x & 1, x >> 1);
    let (b0, b1) = (y & 1, y >> 1);
    // (a0 + a1ω)(b0 + b1ω) = (a0b0 + a1b1) + (a0b1 + a1b0 + a1b1)ω
    let c0 = (a0 & b0) ^ (a1 & b1);
    let c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
    c0 | (c1 << 1)
}

const fn f4_mul_table() -> [[u8; 4]; 4] {
    let mut t = [[0u8; 4]; 4];
    let mut x = 0;
    while x < 4 {
        let mut y = 0;
        while y < 4 {
            t[x][y] = f4_mul_raw(x, y) as u8;
            y += 1;
        }
        x += 1;
    }
    t
}

const F4_MUL: [[u8; 4]; 4] = f4_mul_table();
ring_ops!(F4, F4_MUL);

impl Ring for F4 {
    const KIND: RingKind = RingKind::F4;
    const ORDER: u8 = 4;
    const ZERO: Self = F4(0);
    const ONE: Self = F4(1);

    fn from_bits(bits: u8) -> Option<Self> {
        (bits < 4).then_some(F4(bits))
    }
    fn bits(self) -> u8 {
        self.0
    }
    fn symbol(self) -> char {
        ['0', '1', 'w', 'W'][self.0 as usize]
    }
    fn from_symbol(c: char) -> Option<Self> {
        match c {
            '0' => Some(F4(0)),
            '1' => Some(F4(1)),
            'w' => Some(F4(2)),
            'W' => Some(F4(3)),
            _ => None,
        }
    }
    fn gray_weight(self) -> u32 {
        let (a, b) = f4_decompose(self);
        a.0 as u32 + b.0 as u32
    }
}

// ---------------------------------------------------------------------------
// F4 + uF4

/// Element `(x0 + x1ω) + (x2 + x3ω)u` of F4+uF4 (u² = 0), packed as
/// `x0 | x1 << 1 | x2 << 2 | x3 << 3`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F4u(u8);

impl F4u {
    const ORDER_USIZE: usize = 16;
    pub const U: F4u = F4u(4);
    pub const W: F4u = F4u(2);

    pub fn new(base: F4, u_part: F4) -> Self {
        F4u(base.0 | (u_part.0 << 2))
    }
    /// The F4 part `ā` of `ā + b̄u`.
    pub fn base(self) -> F4 {
        F4(self.0 & 3)
    }
    /// The coefficient `b̄` of `u`.
    pub fn u_part(self) -> F4 {
        F4(self.0 >> 2)
    }
}

impl From<F4> for F4u {
    fn from(x: F4) -> Self {
        F4u(x.0)
    }
}

impl From<F2u> for F4u {
    /// F2+uF2 sits inside F4+uF4 as the elements with no ω components.
    fn from(x: F2u) -> Self {
        F4u((x.0 & 1) | ((x.0 >> 1) << 2))
    }
}

impl From<F2> for F2u {
    fn from(x: F2) -> Self {
        F2u(x.0)
    }
}

const fn f4u_mul_table() -> [[u8; 16]; 16] {
    let mut t = [[0u8; 16]; 16];
    let mut x = 0;
    while x < 16 {
        let mut y = 0;
        while y < 16 {
            let (xa, xb) = (x & 3, x >> 2);
            let (ya, yb) = (y & 3, y >> 2);
            // (xa + xb u)(ya + yb u) = xa ya + (xa yb + xb ya) u
            let lo = f4_mul_raw(xa, ya);
            let hi = f4_mul_raw(xa, yb) ^ f4_mul_raw(xb, ya);
            t[x][y] = (lo | (hi << 2)) as u8;
            y += 1;
        }
        x += 1;
    }
    t
}

const F4U_MUL: [[u8; 16]; 16] = f4u_mul_table();
ring_ops!(F4u, F4U_MUL);

const HEX: [char; 16] = [
    '0', '1', '2', '3', '4', '5', '6', '7', '8', '9', 'a', 'b', 'c', 'd', 'e', 'f',
];

impl Ring for F4u {
    const KIND: RingKind = RingKind::F4u;
    const ORDER: u8 = 16;
    const ZERO: Self = F4u(0);
    const ONE: Self = F4u(1);

    fn from_bits(bits: u8) -> Option<Self> {
        (bits < 16).then_some(F4u(bits))
    }
    fn bits(self) -> u8 {
        self.0
    }
    fn symbol(self) -> char {
        HEX[self.0 as usize]
    }
    fn from_symbol(c: char) -> Option<Self> {
        c.to_digit(16).map(|d| F4u(d as u8))
    }
    fn gray_weight(self) -> u32 {
        LEE_WEIGHTS[self.0 as usize]
    }
}

// ---------------------------------------------------------------------------
// Gray maps

/// Splits `x ∈ F4+uF4` as `x = aω + bω̄` with `a, b ∈ F2+uF2`.
///
/// For `x = (x0 + x1ω) + (x2 + x3ω)u` this is
/// `a = (x0 + x1) + (x2 + x3)u`, `b = x0 + x2·u`.
#[inline]
pub fn psi_decompose(x: F4u) -> (F2u, F2u) {
    let b = x.0;
    let (x0, x1, x2, x3) = (b & 1, (b >> 1) & 1, (b >> 2) & 1, (b >> 3) & 1);
    (F2u((x0 ^ x1) | ((x2 ^ x3) << 1)), F2u(x0 | (x2 << 1)))
}

/// The restriction of [`psi_decompose`] to F4: `x = aω + bω̄` with `a, b ∈ F2`.
#[inline]
pub fn f4_decompose(x: F4) -> (F2, F2) {
    let (x0, x1) = (x.0 & 1, x.0 >> 1);
    (F2(x0 ^ x1), F2(x0))
}

/// `φ` on a single symbol: `a + bu ↦ (b, a + b)`.
#[inline]
pub fn phi_symbol(x: F2u) -> (F2, F2) {
    let (a, b) = (x.0 & 1, x.0 >> 1);
    (F2(b), F2(a ^ b))
}

/// `ψ : (F4+uF4)^n → (F2+uF2)^{2n}`, `aω + bω̄ ↦ (a | b)`.
pub fn gray_psi(v: &[F4u]) -> Vec<F2u> {
    let n = v.len();
    let mut out = vec![F2u::ZERO; 2 * n];
    for (i, &x) in v.iter().enumerate() {
        let (a, b) = psi_decompose(x);
        out[i] = a;
        out[n + i] = b;
    }
    out
}

/// `φ : (F2+uF2)^n → F2^{2n}`, `a + bu ↦ (b | a + b)`.
pub fn gray_phi(v: &[F2u]) -> Vec<F2> {
    let n = v.len();
    let mut out = vec![F2::ZERO; 2 * n];
    for (i, &x) in v.iter().enumerate() {
        let (hi, lo) = phi_symbol(x);
        out[i] = hi;
        out[n + i] = lo;
    }
    out
}

/// `ψ` restricted to F4: `F4^n → F2^{2n}`, `aω + bω̄ ↦ (a | b)`.
pub fn gray_f4(v: &[F4]) -> Vec<F2> {
    let n = v.len();
    let mut out = vec![F2::ZERO; 2 * n];
    for (i, &x) in v.iter().enumerate() {
        let (a, b) = f4_decompose(x);
        out[i] = a;
        out[n + i] = b;
    }
    out
}

/// Rings with a binary Gray image: the composite map from length-`n` vectors
/// to binary vectors of length `n · binary_width`.
pub trait GrayImage: Ring {
    /// Scalars `s` such that `{s·g}` spans the code generated by `g` over F2.
    const ADDITIVE_BASIS: &'static [Self];

    fn to_binary(v: &[Self]) -> Vec<F2>;
}

impl GrayImage for F2 {
    const ADDITIVE_BASIS: &'static [F2] = &[F2(1)];

    fn to_binary(v: &[F2]) -> Vec<F2> {
        v.to_vec()
    }
}

impl GrayImage for F2u {
    const ADDITIVE_BASIS: &'static [F2u] = &[F2u(1), F2u(2)];

    fn to_binary(v: &[F2u]) -> Vec<F2> {
        gray_phi(v)
    }
}

impl GrayImage for F4 {
    const ADDITIVE_BASIS: &'static [F4] = &[F4(1), F4(2)];

    fn to_binary(v: &[F4]) -> Vec<F2> {
        gray_f4(v)
    }
}

impl GrayImage for F4u {
    const ADDITIVE_BASIS: &'static [F4u] = &[F4u(1), F4u(2), F4u(4), F4u(8)];

    fn to_binary(v: &[F4u]) -> Vec<F2> {
        gray_phi(&gray_psi(v))
    }
}

const fn lee_weight_table() -> [u32; 16] {
    let mut t = [0u32; 16];
    let mut x = 0;
    while x < 16 {
        let (x0, x1, x2, x3) = (x & 1, (x >> 1) & 1, (x >> 2) & 1, (x >> 3) & 1);
        let (a0, a1) = (x0 ^ x1, x2 ^ x3);
        let (b0, b1) = (x0, x2);
        // φ(a0 + a1u) = (a1, a0 + a1)
        t[x] = (a1 + (a0 ^ a1) + b1 + (b0 ^ b1)) as u32;
        x += 1;
    }
    t
}

/// Hamming weight of `φ∘ψ(x)` for each of the 16 elements, indexed by packing.
pub const LEE_WEIGHTS: [u32; 16] = lee_weight_table();

/// Lee weight of an F4+uF4 element, i.e. the Hamming weight of its binary image.
pub fn lee_weight(x: F4u) -> u32 {
    LEE_WEIGHTS[x.0 as usize]
}

// ---------------------------------------------------------------------------
// projection and lifts

/// `μ(ā + b̄u) = ā`.
pub fn mu(x: F4u) -> F4 {
    x.base()
}

pub fn mu_vec(v: &[F4u]) -> Vec<F4> {
    v.iter().map(|&x| mu(x)).collect()
}

/// The four elements `a + b·u`, `b ∈ F4`, listed by increasing `b` packing.
pub fn lifts_of(a: F4) -> [F4u; 4] {
    [0, 1, 2, 3].map(|b| F4u::new(a, F4(b)))
}

/// Units `c` with `c² = 1`.
pub fn self_inverse_units<R: Ring>() -> Vec<R> {
    R::elements().filter(|&c| c * c == R::ONE).collect()
}

/// Euclidean inner product `Σ xᵢ yᵢ`.
pub fn inner<R: Ring>(x: &[R], y: &[R]) -> R {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).fold(R::ZERO, |acc, (&a, &b)| acc + a * b)
}

/// Parses an F4+uF4 element written as a sum of the terms `0`, `1`, `w`,
/// `u` and `uw`, e.g. `1+u+w+uw`. `ω` is accepted for `w`.
pub fn parse_f4u_expr(s: &str) -> Result<F4u> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().replace('ω', "w");
    if s.is_empty() {
        return Err(Error::Parse("empty F4+uF4 expression".into()));
    }
    s.split('+').try_fold(F4u::ZERO, |acc, term| {
        let t = match term {
            "0" => 0,
            "1" => 1,
            "w" => 2,
            "u" => 4,
            "uw" | "wu" => 8,
            other => return Err(Error::Parse(format!("bad F4+uF4 term `{other}`"))),
        };
        Ok(acc + F4u(t))
    })
}

/// Parses a symbol string in the ring's alphabet. ASCII whitespace is
/// skipped; anything else that is not a symbol is an error.
pub fn parse_vector<R: Ring>(s: &str) -> Result<Vec<R>> {
    s.chars()
        .filter(|c| !c.is_ascii_whitespace())
        .map(|c| {
            R::from_symbol(c)
                .ok_or_else(|| Error::Parse(format!("`{c}` is not a {} symbol", R::KIND)))
        })
        .collect()
}

pub fn format_vector<R: Ring>(v: &[R]) -> String {
    v.iter().map(|x| x.symbol()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4u(x0: u8, x1: u8, x2: u8, x3: u8) -> F4u {
        F4u(x0 | x1 << 1 | x2 << 2 | x3 << 3)
    }

    #[test]
    fn omega_squared() {
        assert_eq!(F4::W * F4::W, F4::W_BAR);
        assert_eq!(F4u::U * F4u::U, F4u::ZERO);
    }

    #[test]
    fn theorem_five_product_vanishes() {
        let u = F4u::U;
        let one_w = f4u(1, 1, 0, 0);
        let w_uw = f4u(0, 1, 0, 1);
        // the three printed off-diagonal terms sum to 1; with p = 8k+7 the
        // odd multiple of b² + c² (= 1) cancels it
        let printed = u * one_w + u * w_uw + one_w * w_uw;
        assert_eq!(printed, F4u::ONE);
        assert_eq!(one_w.square() + w_uw.square(), F4u::ONE);
        assert_eq!(printed + one_w.square() + w_uw.square(), F4u::ZERO);
        assert_eq!(u * u + one_w * one_w + w_uw * w_uw, F4u::ONE);
    }

    #[test]
    fn psi_examples() {
        assert_eq!(gray_psi(&[F4u::ONE]), vec![F2u::ONE, F2u::ONE]);
        assert_eq!(gray_psi(&[f4u(0, 1, 0, 1)]), vec![F2u::ONE_PLUS_U, F2u::ZERO]);
        assert_eq!(gray_psi(&[F4u::ZERO; 3]), vec![F2u::ZERO; 6]);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(gray_phi(&[F2u::ONE_PLUS_U]), vec![F2::ONE, F2::ZERO]);
        assert_eq!(gray_phi(&[F2u::U]), vec![F2::ONE, F2::ONE]);
        // block layout: (b-block | (a+b)-block) of ψ(1) = (1, 1)
        let img = F4u::to_binary(&[F4u::ONE]);
        assert_eq!(img, vec![F2::ZERO, F2::ZERO, F2::ONE, F2::ONE]);
        assert_eq!(img.iter().filter(|b| b.bit()).count(), 2);
    }

    #[test]
    fn lee_weights_from_maps() {
        assert_eq!(lee_weight(F4u::ONE), 2);
        assert_eq!(lee_weight(F4u::U), 4);
        assert_eq!(lee_weight(f4u(1, 1, 0, 0)), 1);
        // printed as 2 in the Theorem 5 proof; the maps give 1
        assert_eq!(lee_weight(f4u(0, 1, 0, 1)), 1);
        for x in F4u::elements() {
            let brute = F4u::to_binary(&[x]).iter().filter(|b| b.bit()).count() as u32;
            assert_eq!(lee_weight(x), brute);
        }
        assert_eq!(LEE_WEIGHTS.iter().sum::<u32>(), 32);
    }

    #[test]
    fn projection_and_lifts() {
        assert_eq!(mu(f4u(1, 1, 1, 0)), F4::W_BAR);
        assert_eq!(mu(f4u(0, 0, 0, 1)), F4::ZERO);
        assert_eq!(
            lifts_of(F4::ZERO),
            [F4u::ZERO, F4u::U, f4u(0, 0, 0, 1), f4u(0, 0, 1, 1)]
        );
        for a in F4::elements() {
            let l = lifts_of(a);
            for (i, x) in l.iter().enumerate() {
                assert_eq!(mu(*x), a);
                assert!(l[..i].iter().all(|y| y != x));
            }
        }
    }

    #[test]
    fn expressions() {
        assert_eq!(parse_f4u_expr("1+u+w+uw").unwrap(), F4u(15));
        assert_eq!(parse_f4u_expr("u+ω+uω").unwrap(), F4u(14));
        assert_eq!(parse_f4u_expr("0").unwrap(), F4u::ZERO);
        assert!(parse_f4u_expr("1+v").is_err());
    }

    #[test]
    fn symbols_round_trip() {
        assert_eq!(parse_vector::<F2u>("0 3u1").unwrap(), vec![F2u(0), F2u(3), F2u(2), F2u(1)]);
        assert_eq!(format_vector(&parse_vector::<F4>("01wW").unwrap()), "01wW");
        assert_eq!(format_vector(&parse_vector::<F4u>("09aF").unwrap()), "09af");
        assert!(parse_vector::<F2>("012").is_err());
    }

    fn frobenius_additive<R: Ring>() {
        for x in R::elements() {
            for y in R::elements() {
                assert_eq!((x + y).square(), x.square() + y.square());
            }
        }
    }

    fn ring_axioms<R: Ring>() {
        for x in R::elements() {
            assert_eq!(x + R::ZERO, x);
            assert_eq!(x * R::ONE, x);
            assert_eq!(x + x, R::ZERO);
            for y in R::elements() {
                assert_eq!(x * y, y * x);
                for z in R::elements() {
                    assert_eq!((x * y) * z, x * (y * z));
                    assert_eq!(x * (y + z), x * y + x * z);
                }
            }
        }
    }

    #[test]
    fn axioms_all_rings() {
        ring_axioms::<F2>();
        ring_axioms::<F2u>();
        ring_axioms::<F4>();
        ring_axioms::<F4u>();
        frobenius_additive::<F2>();
        frobenius_additive::<F2u>();
        frobenius_additive::<F4>();
        frobenius_additive::<F4u>();
    }

    #[test]
    fn units() {
        assert!(F4::elements().filter(|x| !x.is_zero()).all(|x| x.is_unit()));
        for x in F4u::elements() {
            assert_eq!(x.is_unit(), !x.base().is_zero());
        }
        let c2: Vec<F2u> = self_inverse_units();
        assert_eq!(c2, vec![F2u::ONE, F2u::ONE_PLUS_U]);
        let c4: Vec<F4u> = self_inverse_units();
        assert_eq!(c4, vec![F4u::ONE, f4u(1, 0, 1, 0), f4u(1, 0, 0, 1), f4u(1, 0, 1, 1)]);
    }
}
