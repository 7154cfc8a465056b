//! The extension tables as printed: base code, extension vector, unit and
//! claimed parameters per row.

use crate::lifts::BuiltinCode;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub base: BuiltinCode,
    /// `X` as printed: binary digits, or F2+uF2 symbols with `3 = 1+u`.
    pub x: &'static str,
    /// `c` as printed (`"1"` or `"1+u"`).
    pub c: &'static str,
    pub beta: i64,
    pub gamma: Option<i64>,
}

const fn row(base: BuiltinCode, x: &'static str, c: &'static str, beta: i64, gamma: Option<i64>) -> TableRow {
    TableRow { base, x, c, beta, gamma }
}

use BuiltinCode::{K1, K2, K3, L1, L2, L3, L4};

/// Extensions of the `K_i` images to length 58, family `W_{58,2}`.
pub const TABLE3: [TableRow; 7] = [
    row(K1, "10011100000111010110110110010100100100010011110101110000", "1", 1, Some(32)),
    row(K1, "10010010011100001101111010001111110011001111000101001111", "1", 1, Some(38)),
    row(K1, "00111010100110000101110000110100011111011000001011001000", "1", 1, Some(40)),
    row(K1, "00111111011100001001000010010000010000010000101010001000", "1", 2, Some(46)),
    row(K2, "11010000110101000111011001001100010010100011100111101010", "1", 0, Some(28)),
    row(K2, "01101011110110000100001101010100111100100100110110010111", "1", 1, Some(34)),
    row(K3, "01110000010011000101111110000111010100000010101001100110", "1", 1, Some(28)),
];

/// Standard-form extensions of the `L_i` images to length 66, family `W_{66,3}`.
pub const TABLE4: [TableRow; 13] = [
    row(L1, "01101010101010101101101110100100", "1", 35, None),
    row(L1, "00100101110100100000100110110001", "1", 36, None),
    row(L1, "10110000001001110101100111100001", "1", 37, None),
    row(L1, "11100001011100101111010110010001", "1", 38, None),
    row(L2, "01011001111111001001101010111001", "1", 43, None),
    row(L2, "10110110001011100111101100111001", "1", 44, None),
    row(L2, "00000010110011001100010111000011", "1", 47, None),
    row(L2, "01101001101001111110011111100100", "1", 48, None),
    row(L2, "10010010110101101101100111011110", "1", 51, None),
    row(L3, "11001001111101100011101001000101", "1", 60, None),
    row(L3, "01101001010111101100000011110011", "1", 67, None),
    row(L4, "01010111010000001100100111001110", "1", 70, None),
    row(L4, "00101101101000101100010011101100", "1", 75, None),
];

/// Free extensions of the `L_i` images to length 66, family `W_{66,3}`.
pub const TABLE5: [TableRow; 11] = [
    row(L2, "1100101011011100011110010011111101101001011100101110010100111111", "1", 45, None),
    row(L2, "0011110011001011010001000001101110011100101111000010000111011100", "1", 46, None),
    row(L3, "0000100000001000110000011100010000001011101000001000001011110011", "1", 61, None),
    row(L4, "0001101001010010010010111101111101111110010111100001000011010001", "1", 71, None),
    row(L4, "1111101001110110001000111011111101101101101011011000011111101110", "1", 73, None),
    row(L4, "1110011001010110000001010111001000001110011111010101110110010101", "1", 74, None),
    row(L4, "1010110101111010100111100111010001100000011100101110000000011001", "1", 76, None),
    row(L4, "0111111111011001001011011001001111010101011001011110110101000010", "1", 77, None),
    row(L4, "1100101100011101111011110101010011000001001010101111000111101111", "1", 78, None),
    row(L4, "1011110101001100001100101110011000001110100011010110001011110011", "1", 79, None),
    row(L4, "0000100100100100111100111011011010100100000001000101100111110110", "1", 80, None),
];

/// Extensions of `ψ(L_i)` over F2+uF2 whose images have length 68, family
/// `W_{68,2}`. Some printed vectors contain stray whitespace, kept here.
pub const TABLE6: [TableRow; 29] = [
    row(L1, "0300u01333u330uuu10011100131u111", "1+u", 67, Some(1)),
    row(L1, "33010u0u003u11u013331uu13u130031", "1", 69, Some(1)),
    row(L1, "u311uu0uu0101u01u0000u11310uu1u0", "1", 71, Some(1)),
    row(L1, "3u0uu1u33030110031u1330u0011uuu1", "1+u", 107, Some(2)),
    row(L1, "013311u1uuu1u103uu111300u3100u31", "1", 101, Some(3)),
    row(L1, "00311u000u0uu101u301u13030111000", "1", 110, Some(3)),
    row(L1, "0 u 1 1 1 u 0 0 0 u 0 0 0 3 u 1 0 3 u 3 u 1 1 0 3 0 1 3 1 u0 u", "1", 122, Some(3)),
    row(L1, "111u010u0u003u113001010103111031", "1", 123, Some(3)),
    row(L2, "u11u0303u3u0113330uuu3031110u130", "1+u", 117, Some(1)),
    row(L2, "30033u31u30301133uu13u311311101u", "1", 113, Some(2)),
    row(L2, "11101u3001100uu3u133u1u3001u1130", "1+u", 132, Some(3)),
    row(L3, "uu3113000031u11310011333u3u13u10", "1", 116, Some(1)),
    row(L3, "30113uuuuu33uu03u1u3uu311u00u0u1", "1", 124, Some(1)),
    row(L3, "313310uu3010u3003u003030u3031003", "1+u", 134, Some(1)),
    row(L4, "1003u10u1030u10101u1001u00uuuu1u", "1", 121, Some(1)),
    row(L4, "1000133u3010013uu13uuu11u031uuu1", "1", 122, Some(1)),
    row(L4, "130u31133u31uu30u100u03u3110u31u", "1+u", 127, Some(1)),
    row(L4, "101103310u133003000033u3uu111uu1", "1+u", 128, Some(1)),
    row(L4, "30u103313u031100u13uu101u03011u3", "1", 130, Some(1)),
    row(L4, "1u1u10uu0uu0u31u0u103u133u11333u", "1+u", 131, Some(1)),
    row(L4, "10u011u001u310300330u03uu3uuu101", "1+u", 136, Some(1)),
    row(L4, "330u0113u0uu3333u003u000uu010u33", "1", 157, Some(1)),
    row(L4, "011uu103103111u00030031u0110331u", "1", 143, Some(2)),
    row(L4, "00u1u0u1u1u30130u31u030011u00130", "1+u", 147, Some(2)),
    row(L4, "u u u 1 0 u u 3 0 1 0 3 u 3 1 0 u 3 1 0 u 3 u u 1 1 0 0 u 3 1 u", "1+u", 149, Some(2)),
    row(L4, "33uuu0u3uu110330u3010u110301u101", "1+u", 154, Some(2)),
    row(L4, "330uu003 0 0 3 3 0 3 1 0 0 1 0 1 0 u 3 1 0 1 0 3 u1 u 1", "1", 156, Some(2)),
    row(L4, "0 0 0 1 u u u 3 u 3 u 3 u 3 1 0 0 3 3 0 u 3 0 0 1 10 0 0 3 3 u", "1", 159, Some(2)),
    row(L4, "3031u111133u01u133u1u00113303301", "1+u", 156, Some(3)),
];
