//! Quadratic-residue circulant matrices and the pure and bordered quadratic
//! double circulant (QDC) codes built from them.
//!
//! `Q_p(a, b, c)` is the `p × p` circulant whose first row `r` has `r[0] = a`,
//! `r[i] = b` when `i` is a nonzero square mod `p`, and `r[i] = c` otherwise.
//! Positions are 0-based here; `r[i]` is the entry the usual 1-based notation
//! calls `r[i+1]`.

use std::collections::BTreeSet;

use crate::bincode::CodeType;
use crate::error::{Error, Result};
use crate::matrix::{LinearCode, RingMatrix};
use crate::rings::{Ring, F4u};

/// Recipe for `Q_p(a, b, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QrCirculantSpec<R> {
    pub p: usize,
    pub a: R,
    pub b: R,
    pub c: R,
}

/// The frame `(λ, β, γ)` of a bordered construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BorderSpec<R> {
    pub lambda: R,
    pub beta_border: R,
    pub gamma_border: R,
}

impl<R: Ring> QrCirculantSpec<R> {
    pub fn new(p: usize, a: R, b: R, c: R) -> Result<Self> {
        validate_prime(p)?;
        Ok(QrCirculantSpec { p, a, b, c })
    }

    pub fn first_row(&self) -> Vec<R> {
        let residues = quadratic_residues(self.p).expect("validated");
        (0..self.p)
            .map(|i| match i {
                0 => self.a,
                i if residues.contains(&i) => self.b,
                _ => self.c,
            })
            .collect()
    }
}

impl<R: Ring> BorderSpec<R> {
    pub fn new(lambda: R, beta_border: R, gamma_border: R) -> Self {
        BorderSpec {
            lambda,
            beta_border,
            gamma_border,
        }
    }
}

pub fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn validate_prime(p: usize) -> Result<()> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not an odd prime")));
    }
    Ok(())
}

/// The nonzero squares modulo an odd prime `p`.
pub fn quadratic_residues(p: usize) -> Result<BTreeSet<usize>> {
    validate_prime(p)?;
    Ok((1..p).map(|x| x * x % p).collect())
}

/// Circulant matrix whose row `i` is the first row cyclically shifted right
/// by `i` places.
pub fn circulant<R: Ring>(first_row: &[R]) -> RingMatrix<R> {
    let p = first_row.len();
    let mut m = RingMatrix::zeros(p, p);
    for i in 0..p {
        for j in 0..p {
            m[(i, j)] = first_row[(j + p - i) % p];
        }
    }
    m
}

pub fn build_q<R: Ring>(spec: &QrCirculantSpec<R>) -> RingMatrix<R> {
    circulant(&spec.first_row())
}

/// Outcome of comparing `Q Qᵀ` against the closed form of the circulant
/// product identity.
#[derive(Clone, Debug)]
pub struct ProductIdentity<R> {
    pub direct: RingMatrix<R>,
    pub predicted: QrCirculantSpec<R>,
    pub agrees: bool,
}

/// Evaluates the closed form for `Q_p(a,b,c) Q_p(a,b,c)ᵀ` with ring arithmetic
/// (so integer multiples like `2ab` vanish) and compares it to the directly
/// computed product.
pub fn product_identity_check<R: Ring>(spec: &QrCirculantSpec<R>) -> ProductIdentity<R> {
    let QrCirculantSpec { p, a, b, c } = *spec;
    let k = (p / 4) as i64;
    let predicted = if p % 4 == 1 {
        let s = (b + c).square();
        QrCirculantSpec {
            p,
            a: a.square() + (b.square() + c.square()).times(2 * k),
            b: (a * b).times(2) - b.square() + s.times(k),
            c: (a * c).times(2) - c.square() + s.times(k),
        }
    } else {
        let off = a * b + a * c + (b.square() + c.square()).times(k) + (b * c).times(2 * k + 1);
        QrCirculantSpec {
            p,
            a: a.square() + (b.square() + c.square()).times(2 * k + 1),
            b: off,
            c: off,
        }
    };
    let q = build_q(spec);
    let direct = q.gram();
    let agrees = direct == build_q(&predicted);
    ProductIdentity {
        direct,
        predicted,
        agrees,
    }
}

/// Generator `[I_p | Q_p(a,b,c)]` of the pure QDC code.
pub fn build_p<R: Ring>(spec: &QrCirculantSpec<R>) -> LinearCode<R> {
    let g = RingMatrix::identity(spec.p)
        .hstack(&build_q(spec))
        .expect("square blocks");
    LinearCode::systematic(g).expect("identity prefix")
}

/// Bordered generator
/// `[I_{p+1} | (λ, β·1) / (γ·1ᵀ, Q)]` given an arbitrary first row for the
/// circulant block.
pub fn bordered<R: Ring>(first_row: &[R], border: &BorderSpec<R>) -> LinearCode<R> {
    let p = first_row.len();
    let q = circulant(first_row);
    let mut right = RingMatrix::zeros(p + 1, p + 1);
    right[(0, 0)] = border.lambda;
    for j in 1..=p {
        right[(0, j)] = border.beta_border;
        right[(j, 0)] = border.gamma_border;
        for l in 1..=p {
            right[(j, l)] = q[(j - 1, l - 1)];
        }
    }
    let g = RingMatrix::identity(p + 1).hstack(&right).expect("square blocks");
    LinearCode::systematic(g).expect("identity prefix")
}

/// Generator of the bordered QDC code `B_p(a, b, c, λ, β, γ)`.
pub fn build_b<R: Ring>(spec: &QrCirculantSpec<R>, border: &BorderSpec<R>) -> LinearCode<R> {
    bordered(&spec.first_row(), border)
}

/// Generator `[I_p | circulant(first_row)]`.
pub fn double_circulant<R: Ring>(first_row: &[R]) -> LinearCode<R> {
    let g = RingMatrix::identity(first_row.len())
        .hstack(&circulant(first_row))
        .expect("square blocks");
    LinearCode::systematic(g).expect("identity prefix")
}

pub fn is_self_dual<R: Ring>(code: &LinearCode<R>) -> Result<bool> {
    code.is_self_dual()
}

/// Which family member a [`theorem5_codes`] entry is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem5Family {
    /// `P_p(u, 1+ω, ω+uω)`, `p ≡ 7 (mod 8)`.
    PureSeven,
    /// `B_p(1+u+uω, ω+uω, 1+ω, u, 1+uω, 1+uω)`, `p ≡ 7 (mod 8)`.
    BorderedSeven,
    /// `B_p(1, u+uω, 1, u+uω, 1+u+uω, 1+u+uω)`, `p ≡ 3 (mod 8)`.
    BorderedThreeTypeI,
    /// `B_p(1+ω, ω+uω, 1+ω, ω, 1+ω+uω, 1+u+ω)`, `p ≡ 3 (mod 8)`.
    BorderedThreeTypeII,
}

#[derive(Clone, Debug)]
pub struct Theorem5Code {
    pub family: Theorem5Family,
    pub label: String,
    pub code: LinearCode<F4u>,
    pub expected_type: CodeType,
}

fn f4u(s: &str) -> F4u {
    crate::rings::parse_vector::<F4u>(s).expect("literal")[0]
}

/// The explicit self-dual QDC families over F4+uF4 for `p ≡ 3, 7 (mod 8)`.
///
/// Hex symbols: `1` = 1, `2` = ω, `3` = 1+ω, `4` = u, `8` = uω, and sums
/// thereof, e.g. `a` = ω+uω.
pub fn theorem5_codes(p: usize) -> Result<Vec<Theorem5Code>> {
    validate_prime(p)?;
    let spec = |a, b, c| QrCirculantSpec::new(p, f4u(a), f4u(b), f4u(c));
    let border = |l, b, g| BorderSpec::new(f4u(l), f4u(b), f4u(g));
    match p % 8 {
        7 => Ok(vec![
            Theorem5Code {
                family: Theorem5Family::PureSeven,
                label: format!("P_{p}(u, 1+w, w+uw)"),
                code: build_p(&spec("4", "3", "a")?),
                expected_type: CodeType::TypeII,
            },
            Theorem5Code {
                family: Theorem5Family::BorderedSeven,
                label: format!("B_{p}(1+u+uw, w+uw, 1+w, u, 1+uw, 1+uw)"),
                code: build_b(&spec("d", "a", "3")?, &border("4", "9", "9")),
                expected_type: CodeType::TypeII,
            },
        ]),
        3 => Ok(vec![
            Theorem5Code {
                family: Theorem5Family::BorderedThreeTypeI,
                label: format!("B_{p}(1, u+uw, 1, u+uw, 1+u+uw, 1+u+uw)"),
                code: build_b(&spec("1", "c", "1")?, &border("c", "d", "d")),
                expected_type: CodeType::TypeI,
            },
            Theorem5Code {
                family: Theorem5Family::BorderedThreeTypeII,
                label: format!("B_{p}(1+w, w+uw, 1+w, w, 1+w+uw, 1+u+w)"),
                code: build_b(&spec("3", "a", "3")?, &border("2", "b", "7")),
                expected_type: CodeType::TypeII,
            },
        ]),
        _ => Err(Error::InvalidArgument(format!(
            "{p} is not congruent to 3 or 7 mod 8"
        ))),
    }
}
