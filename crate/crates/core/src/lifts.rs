//! F4+uF4 lifts of double circulant codes over F4: the projection `μ`, the
//! fixed lifted codes `K_1..K_3` and `L_1..L_4`, and an exhaustive or sampled
//! search over lifts.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bincode::{gray_image, BinaryCode};
use crate::error::{Error, Result};
use crate::matrix::LinearCode;
use crate::qdc::{bordered, double_circulant, BorderSpec, QrCirculantSpec};
use crate::rings::{lifts_of, mu, parse_f4u_expr, Ring, F4, F4u};

/// Applies `μ` entrywise to the generator.
pub fn project_code(code: &LinearCode<F4u>) -> LinearCode<F4> {
    let g = code.generator().map(mu);
    LinearCode::systematic(g.clone()).unwrap_or_else(|_| LinearCode::new(g))
}

/// The lifted codes given explicitly by their circulant first rows (and
/// borders).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BuiltinCode {
    K1,
    K2,
    K3,
    L1,
    L2,
    L3,
    L4,
}

const K_ROWS: [[&str; 7]; 3] = [
    ["uw", "1+w+uw", "1+u+w", "w+uw", "1+u+w+uw", "w", "u+w"],
    ["u+uw", "1+w+uw", "1+u+w+uw", "u+w", "1+w", "w", "u+w+uw"],
    ["uw", "1+w", "1+u+w", "w+uw", "1+w+uw", "u+w+uw", "w"],
];

const L_ROWS: [[&str; 7]; 4] = [
    ["1", "u+w+uw", "w", "1+w+uw", "w+uw", "1+w", "1+u+w"],
    ["1+uw", "u+w", "w", "1+u+w+uw", "u+w+uw", "1+u+w", "1+w"],
    ["1+u", "w", "w", "1+w", "w", "1+u+w+uw", "1+u+w"],
    ["1+u+uw", "w+uw", "w", "1+w+uw", "u+w", "1+w", "1+u+w"],
];

/// Borders `(a, b, c)`. The first entry uses `b = 1+uω`; see
/// [`L1_PRINTED_BORDER`].
const L_BORDERS: [[&str; 3]; 4] = [
    ["uw", "1+uw", "1+uw"],
    ["uw", "1+u+uw", "1+uw"],
    ["u+uw", "1+u+uw", "1+uw"],
    ["u+uw", "1+uw", "1+uw"],
];

/// The border of `L_1` as printed alongside its `β = 18`. It repeats the
/// border of `L_2` and also gives `β = 18`, but the length 66 and 68
/// extensions listed for `L_1` are extremal only over the code with
/// `b = 1+uω`, which is the one [`BuiltinCode::L1`] uses.
pub const L1_PRINTED_BORDER: [&str; 3] = ["uw", "1+u+uw", "1+uw"];

fn elems<const N: usize>(terms: &[&str; N]) -> Vec<F4u> {
    terms.iter().map(|t| parse_f4u_expr(t).expect("literal")).collect()
}

impl BuiltinCode {
    pub const ALL: [BuiltinCode; 7] = [
        BuiltinCode::K1,
        BuiltinCode::K2,
        BuiltinCode::K3,
        BuiltinCode::L1,
        BuiltinCode::L2,
        BuiltinCode::L3,
        BuiltinCode::L4,
    ];
    pub const K: [BuiltinCode; 3] = [BuiltinCode::K1, BuiltinCode::K2, BuiltinCode::K3];
    pub const L: [BuiltinCode; 4] = [BuiltinCode::L1, BuiltinCode::L2, BuiltinCode::L3, BuiltinCode::L4];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinCode::K1 => "K1",
            BuiltinCode::K2 => "K2",
            BuiltinCode::K3 => "K3",
            BuiltinCode::L1 => "L1",
            BuiltinCode::L2 => "L2",
            BuiltinCode::L3 => "L3",
            BuiltinCode::L4 => "L4",
        }
    }

    fn index(self) -> usize {
        match self {
            BuiltinCode::K1 | BuiltinCode::L1 => 0,
            BuiltinCode::K2 | BuiltinCode::L2 => 1,
            BuiltinCode::K3 | BuiltinCode::L3 => 2,
            BuiltinCode::L4 => 3,
        }
    }

    pub fn is_bordered(self) -> bool {
        matches!(self, BuiltinCode::L1 | BuiltinCode::L2 | BuiltinCode::L3 | BuiltinCode::L4)
    }

    pub fn first_row(self) -> Vec<F4u> {
        if self.is_bordered() {
            elems(&L_ROWS[self.index()])
        } else {
            elems(&K_ROWS[self.index()])
        }
    }

    pub fn border(self) -> Option<BorderSpec<F4u>> {
        self.is_bordered().then(|| {
            let b = elems(&L_BORDERS[self.index()]);
            BorderSpec::new(b[0], b[1], b[2])
        })
    }

    /// `[I_7 | circulant(R_i)]` for `K_i`; the `8 × 16` bordered form for `L_i`.
    pub fn code(self) -> LinearCode<F4u> {
        match self.border() {
            Some(b) => bordered(&self.first_row(), &b),
            None => double_circulant(&self.first_row()),
        }
    }

    /// The `β` of `W_{64,1}` reported for the binary image of `L_i`.
    pub fn reported_beta(self) -> Option<i64> {
        self.is_bordered().then(|| [18, 32, 46, 60][self.index()])
    }
}

impl fmt::Display for BuiltinCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for BuiltinCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('_', "").to_ascii_uppercase();
        BuiltinCode::ALL
            .into_iter()
            .find(|c| c.name() == norm)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown builtin code `{s}`")))
    }
}

/// The F4 code being lifted: a circulant first row and an optional border.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftBase {
    pub first_row: Vec<F4>,
    pub border: Option<BorderSpec<F4>>,
}

impl LiftBase {
    pub fn pure(first_row: Vec<F4>) -> Self {
        LiftBase {
            first_row,
            border: None,
        }
    }

    pub fn bordered(first_row: Vec<F4>, border: BorderSpec<F4>) -> Self {
        LiftBase {
            first_row,
            border: Some(border),
        }
    }

    /// `P_7(0, 1+ω, ω)`, the base of the `K_i`.
    pub fn p7() -> Self {
        let s = QrCirculantSpec::new(7, F4::ZERO, F4::W_BAR, F4::W).expect("7 is prime");
        LiftBase::pure(s.first_row())
    }

    /// `B_7(1, ω, 1+ω, 0, 1, 1)`, the base of the `L_i`.
    pub fn b7() -> Self {
        let s = QrCirculantSpec::new(7, F4::ONE, F4::W, F4::W_BAR).expect("7 is prime");
        LiftBase::bordered(s.first_row(), BorderSpec::new(F4::ZERO, F4::ONE, F4::ONE))
    }

    /// `P7-F4` or `B7-F4`.
    pub fn named(name: &str) -> Result<Self> {
        match name.trim().to_ascii_uppercase().as_str() {
            "P7-F4" | "P7" => Ok(Self::p7()),
            "B7-F4" | "B7" => Ok(Self::b7()),
            _ => Err(Error::InvalidArgument(format!("unknown lift base `{name}`; expected P7-F4 or B7-F4"))),
        }
    }

    pub fn code(&self) -> LinearCode<F4> {
        match &self.border {
            Some(b) => bordered(&self.first_row, b),
            None => double_circulant(&self.first_row),
        }
    }

    /// Number of lifted positions: the circulant first row, then `λ, β, γ`.
    pub fn free_positions(&self) -> usize {
        self.first_row.len() + if self.border.is_some() { 3 } else { 0 }
    }

    fn base_values(&self) -> Vec<F4> {
        let mut v = self.first_row.clone();
        if let Some(b) = &self.border {
            v.extend([b.lambda, b.beta_border, b.gamma_border]);
        }
        v
    }

    /// The lift whose `u`-parts are `u_parts`, in free-position order.
    pub fn lift(&self, u_parts: &[F4]) -> Result<LinearCode<F4u>> {
        if u_parts.len() != self.free_positions() {
            return Err(Error::InvalidArgument(format!(
                "expected {} u-parts, got {}",
                self.free_positions(),
                u_parts.len()
            )));
        }
        let vals: Vec<F4u> = self
            .base_values()
            .iter()
            .zip(u_parts)
            .map(|(&a, &b)| F4u::new(a, b))
            .collect();
        let p = self.first_row.len();
        Ok(match self.border {
            Some(_) => bordered(&vals[..p], &BorderSpec::new(vals[p], vals[p + 1], vals[p + 2])),
            None => double_circulant(&vals),
        })
    }

    /// The `u`-parts that turn this base into the given lifted row/border,
    /// if the values project onto the base.
    pub fn u_parts_of(&self, first_row: &[F4u], border: Option<&BorderSpec<F4u>>) -> Option<Vec<F4>> {
        let mut vals = first_row.to_vec();
        if let Some(b) = border {
            vals.extend([b.lambda, b.beta_border, b.gamma_border]);
        }
        let base = self.base_values();
        (vals.len() == base.len() && vals.iter().zip(&base).all(|(v, &b)| mu(*v) == b))
            .then(|| vals.iter().map(|v| v.u_part()).collect())
    }
}

/// A self-dual lift whose binary image satisfied the search predicate.
#[derive(Clone, Debug)]
pub struct LiftCandidate {
    /// Position of the assignment in lexicographic order (first free position
    /// most significant).
    pub index: u64,
    pub u_parts: Vec<F4>,
    pub code: LinearCode<F4u>,
    pub binary: BinaryCode,
}

impl LiftCandidate {
    /// `u`-parts as one hex digit per position (the F4 packing).
    pub fn assignment_hex(&self) -> String {
        self.u_parts.iter().map(|x| char::from_digit(x.bits() as u32, 16).expect("hex")).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LiftBudget {
    /// Upper bound on the number of assignments examined.
    pub max_candidates: u64,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub struct LiftSearchResult {
    pub candidates: Vec<LiftCandidate>,
    pub examined: u64,
    pub self_dual: u64,
    /// True when the assignment space was larger than the budget and was
    /// sampled instead of enumerated.
    pub truncated: bool,
}

fn assignment(index: u64, f: usize) -> Vec<F4> {
    (0..f)
        .map(|pos| F4::from_bits(((index >> (2 * (f - 1 - pos))) & 3) as u8).expect("2 bits"))
        .collect()
}

/// Searches the lifts of `base` for self-dual codes whose binary image
/// satisfies `predicate`.
///
/// All `4^f` assignments are tried in lexicographic order when they fit the
/// budget; otherwise `max_candidates` distinct assignments are drawn with a
/// ChaCha generator seeded by `seed` and examined in increasing order. The
/// self-duality filter runs before the predicate.
pub fn lift_search<P>(base: &LiftBase, predicate: P, budget: LiftBudget) -> Result<LiftSearchResult>
where
    P: Fn(&BinaryCode) -> bool + Sync,
{
    let f = base.free_positions();
    if f > 31 {
        return Err(Error::InvalidArgument(format!("{f} free positions is too many to index")));
    }
    let space = 1u64 << (2 * f);
    let (indices, truncated): (Vec<u64>, bool) = if space <= budget.max_candidates {
        ((0..space).collect(), false)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
        let mut set = BTreeSet::new();
        while (set.len() as u64) < budget.max_candidates {
            set.insert(rng.gen_range(0..space));
        }
        (set.into_iter().collect(), true)
    };

    let results: Vec<(bool, Option<LiftCandidate>)> = indices
        .par_iter()
        .map(|&index| {
            let u_parts = assignment(index, f);
            let code = base.lift(&u_parts).expect("length matches");
            if !code.is_self_orthogonal() {
                return (false, None);
            }
            let binary = gray_image(&code).expect("length within limits");
            let hit = predicate(&binary).then_some(LiftCandidate {
                index,
                u_parts,
                code,
                binary,
            });
            (true, hit)
        })
        .collect();

    Ok(LiftSearchResult {
        examined: indices.len() as u64,
        self_dual: results.iter().filter(|r| r.0).count() as u64,
        candidates: results.into_iter().filter_map(|r| r.1).collect(),
        truncated,
    })
}

/// All four lifts of every entry, for callers that want the raw lift sets.
pub fn entrywise_lifts(row: &[F4]) -> Vec<[F4u; 4]> {
    row.iter().map(|&a| lifts_of(a)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{parse_vector, F2};

    fn p7_base() -> LiftBase {
        LiftBase::named("P7-F4").unwrap()
    }

    fn b7_base() -> LiftBase {
        LiftBase::named("b7").unwrap()
    }

    #[test]
    fn k1_row_projects_to_q7() {
        let row = BuiltinCode::K1.first_row();
        assert_eq!(parse_vector::<F4u>("8b7af26").unwrap(), row);
        assert_eq!(crate::rings::mu_vec(&row), parse_vector::<F4>("0WWwWww").unwrap());
    }

    #[test]
    fn projections_recover_bases() {
        for k in BuiltinCode::K {
            assert_eq!(project_code(&k.code()), p7_base().code());
        }
        for l in BuiltinCode::L {
            assert_eq!(project_code(&l.code()), b7_base().code());
        }
        let border = BuiltinCode::L4.border().unwrap();
        assert_eq!(
            [border.lambda, border.beta_border, border.gamma_border],
            [parse_f4u_expr("u+uw").unwrap(), parse_f4u_expr("1+uw").unwrap(), parse_f4u_expr("1+uw").unwrap()]
        );
    }

    #[test]
    fn builtins_are_self_dual_and_theorem2_holds() {
        for c in BuiltinCode::ALL {
            let code = c.code();
            assert!(code.is_self_dual().unwrap(), "{c}");
            assert!(project_code(&code).is_self_orthogonal(), "{c}");
        }
    }

    #[test]
    fn printed_l1_border_differs_in_one_u_part() {
        let printed = elems(&L1_PRINTED_BORDER);
        let used = BuiltinCode::L1.border().unwrap();
        assert_eq!(printed[0], used.lambda);
        assert_eq!(printed[2], used.gamma_border);
        assert_eq!(mu(printed[1]), mu(used.beta_border));
        assert_ne!(printed[1], used.beta_border);
        let printed_code = bordered(&BuiltinCode::L1.first_row(), &BorderSpec::new(printed[0], printed[1], printed[2]));
        assert!(printed_code.is_self_dual().unwrap());
    }

    #[test]
    fn lift_recovers_builtins() {
        let base = b7_base();
        for l in BuiltinCode::L {
            let parts = base.u_parts_of(&l.first_row(), l.border().as_ref()).unwrap();
            assert_eq!(base.lift(&parts).unwrap(), l.code());
        }
        let zero = vec![F4::ZERO; 7];
        let lifted = p7_base().lift(&zero).unwrap();
        assert_eq!(project_code(&lifted), p7_base().code());
        assert_eq!(lifted.generator().map(mu), p7_base().code().generator().clone());
    }

    #[test]
    fn assignments_are_lexicographic() {
        assert_eq!(assignment(0, 3), vec![F4::ZERO; 3]);
        assert_eq!(assignment(1, 3), vec![F4::ZERO, F4::ZERO, F4::ONE]);
        assert_eq!(assignment(4, 3), vec![F4::ZERO, F4::ONE, F4::ZERO]);
        assert_eq!(entrywise_lifts(&[F4::ONE]).len(), 1);
    }

    #[test]
    fn search_toy_matches_brute_force() {
        // lifts of P_3(0, 1, 1) over F4, predicate: Type II
        let base = LiftBase::pure(vec![F4::ZERO, F4::ONE, F4::ONE]);
        let pred = |b: &BinaryCode| b.classify_type() == crate::bincode::CodeType::TypeII;
        let budget = LiftBudget { max_candidates: 1 << 20, seed: 0 };
        let res = lift_search(&base, pred, budget).unwrap();
        assert!(!res.truncated);
        assert_eq!(res.examined, 64);

        let mut brute = Vec::new();
        for idx in 0..64u64 {
            let parts: Vec<F4> = (0..3).map(|p| F4::from_bits(((idx >> (4 - 2 * p)) & 3) as u8).unwrap()).collect();
            let code = base.lift(&parts).unwrap();
            if code.generator().gram().is_zero() {
                let b = gray_image(&code).unwrap();
                if pred(&b) {
                    brute.push(idx);
                }
            }
        }
        let got: Vec<u64> = res.candidates.iter().map(|c| c.index).collect();
        assert_eq!(got, brute);

        let none = lift_search(&base, |_| false, budget).unwrap();
        assert!(none.candidates.is_empty());
    }

    #[test]
    fn sampled_search_is_reproducible() {
        let budget = LiftBudget { max_candidates: 300, seed: 11 };
        let a = lift_search(&p7_base(), |_| true, budget).unwrap();
        let b = lift_search(&p7_base(), |_| true, budget).unwrap();
        assert!(a.truncated);
        assert_eq!(a.examined, 300);
        let ia: Vec<u64> = a.candidates.iter().map(|c| c.index).collect();
        let ib: Vec<u64> = b.candidates.iter().map(|c| c.index).collect();
        assert_eq!(ia, ib);
        let _ = F2::ZERO;
    }
}
