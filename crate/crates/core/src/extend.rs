//! Extensions of self-dual codes by two coordinates: the free form with an
//! arbitrary vector `X`, the standard-form variant on `[I_n | A]`, and a
//! seeded search over extension vectors.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bincode::{
    classify, extremal_distance, has_word_below, BinaryCode, Classification, EnumeratorId, KnownParamsRegistry, Novelty, StandardForm,
};
use crate::error::{Error, Result};
use crate::matrix::{LinearCode, RingMatrix};
use crate::rings::{format_vector, gray_psi, inner, Ring, RingKind, F2u, F4u};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionMode {
    /// First row `(1, 0, X)`, then `(y_i, c·y_i, r_i)` with `y_i = ⟨r_i, X⟩`.
    Free,
    /// First row `(1, 0, X, 1, …, 1)` over `[I_n | A]`, `y_i = x_i + Σ_j A_ij`.
    Standard,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSpec<R> {
    pub x: Vec<R>,
    pub c: R,
    pub mode: ExtensionMode,
}

impl<R: Ring> ExtensionSpec<R> {
    pub fn free(x: Vec<R>, c: R) -> Self {
        ExtensionSpec {
            x,
            c,
            mode: ExtensionMode::Free,
        }
    }

    pub fn standard(x: Vec<R>, c: R) -> Self {
        ExtensionSpec {
            x,
            c,
            mode: ExtensionMode::Standard,
        }
    }

    /// Checks `c² = 1` and `⟨X, X⟩ = 1` (free) or `1 + n` (standard).
    pub fn validate(&self) -> Result<()> {
        if self.c * self.c != R::ONE {
            return Err(Error::Precondition(format!("c = {} is not a self-inverse unit", self.c)));
        }
        let want = match self.mode {
            ExtensionMode::Free => R::ONE,
            ExtensionMode::Standard => R::ONE + R::ONE.times(self.x.len() as i64),
        };
        let got = inner(&self.x, &self.x);
        if got != want {
            return Err(Error::Precondition(format!("⟨X,X⟩ = {got}, expected {want}")));
        }
        Ok(())
    }
}

fn check_self_dual<R: Ring>(generator: &RingMatrix<R>, n: usize, what: &str) -> Result<()> {
    if !generator.gram().is_zero() {
        return Err(Error::Precondition(format!("{what} is not self-orthogonal")));
    }
    if R::KIND == RingKind::F2 && 2 * generator.rows() != n {
        return Err(Error::Precondition(format!("{what} does not have dimension n/2")));
    }
    Ok(())
}

/// Free extension of a self-dual code. The result depends only on the code
/// spanned by `code`'s generator, `X` and `c`.
pub fn extend_free<R: Ring>(code: &LinearCode<R>, spec: &ExtensionSpec<R>) -> Result<LinearCode<R>> {
    let n = code.length();
    if spec.mode != ExtensionMode::Free {
        return Err(Error::InvalidArgument("extend_free needs a free-mode ExtensionSpec".into()));
    }
    if spec.x.len() != n {
        return Err(Error::InvalidArgument(format!("X has length {}, code has length {n}", spec.x.len())));
    }
    spec.validate()?;
    check_self_dual(code.generator(), n, "input code")?;

    let mut rows = Vec::with_capacity(code.generator().rows() + 1);
    let mut first = vec![R::ONE, R::ZERO];
    first.extend_from_slice(&spec.x);
    rows.push(first);
    for r in code.generator().iter_rows() {
        let y = inner(r, &spec.x);
        let mut row = vec![y, spec.c * y];
        row.extend_from_slice(r);
        rows.push(row);
    }
    let g = RingMatrix::from_rows(rows)?;
    if !g.gram().is_zero() {
        return Err(Error::Internal("free extension is not self-orthogonal".into()));
    }
    Ok(LinearCode::new(g))
}

/// Standard-form extension of the code generated by `[I_n | A]`.
pub fn extend_standard<R: Ring>(a: &RingMatrix<R>, spec: &ExtensionSpec<R>) -> Result<LinearCode<R>> {
    let n = a.rows();
    if spec.mode != ExtensionMode::Standard {
        return Err(Error::InvalidArgument("extend_standard needs a standard-mode ExtensionSpec".into()));
    }
    if spec.x.len() != n {
        return Err(Error::InvalidArgument(format!("X has length {}, A has {n} rows", spec.x.len())));
    }
    spec.validate()?;
    let base = RingMatrix::identity(n).hstack(a)?;
    check_self_dual(&base, base.cols(), "[I | A]")?;

    let mut rows = Vec::with_capacity(n + 1);
    let mut first = vec![R::ONE, R::ZERO];
    first.extend_from_slice(&spec.x);
    first.extend(std::iter::repeat_n(R::ONE, a.cols()));
    rows.push(first);
    for (i, r) in base.iter_rows().enumerate() {
        let sum = a.row(i).iter().fold(R::ZERO, |acc, &v| acc + v);
        let y = spec.x[i] + sum;
        let mut row = vec![y, spec.c * y];
        row.extend_from_slice(r);
        rows.push(row);
    }
    let g = RingMatrix::from_rows(rows)?;
    if !g.gram().is_zero() {
        return Err(Error::Internal("standard-form extension is not self-orthogonal".into()));
    }
    Ok(LinearCode::new(g))
}

/// [`extend_free`] over F2 on packed words; `x` holds coordinate `i` in bit `i`.
pub fn extend_free_binary(code: &BinaryCode, x: u128) -> Result<BinaryCode> {
    let n = code.n();
    if n + 2 > crate::bincode::MAX_LENGTH {
        return Err(Error::InvalidArgument(format!("length {} is too long to extend", n)));
    }
    if x >> n != 0 {
        return Err(Error::InvalidArgument("X has bits beyond the code length".into()));
    }
    if x.count_ones() % 2 != 1 {
        return Err(Error::Precondition("⟨X,X⟩ must be 1".into()));
    }
    if !code.is_self_dual() {
        return Err(Error::Precondition("input code is not self-dual".into()));
    }
    let mut rows = vec![1u128 | x << 2];
    for &r in code.rows() {
        let y = ((r & x).count_ones() & 1) as u128;
        rows.push(y | y << 1 | r << 2);
    }
    let out = BinaryCode::from_rows(n + 2, rows)?;
    if !out.is_self_dual() || out.k() != code.k() + 1 {
        return Err(Error::Internal("binary extension is not self-dual".into()));
    }
    Ok(out)
}

/// [`extend_standard`] over F2 on a packed standard form; `x` has `k` bits.
pub fn extend_standard_binary(sf: &StandardForm, x: u128) -> Result<BinaryCode> {
    let (n, k) = (sf.n, sf.k);
    if 2 * k != n {
        return Err(Error::Precondition("standard form is not of a self-dual code".into()));
    }
    if x >> k != 0 {
        return Err(Error::InvalidArgument("X has bits beyond k".into()));
    }
    if x.count_ones() as usize % 2 != (1 + k) % 2 {
        return Err(Error::Precondition("⟨X,X⟩ must equal 1 + n".into()));
    }
    let full = x | crate::bincode::mask(n - k) << k;
    let mut rows = vec![1u128 | full << 2];
    for (i, &r) in sf.rows.iter().enumerate() {
        let y = ((x >> i & 1) as u32 + sf.a[i].count_ones()) as u128 & 1;
        rows.push(y | y << 1 | r << 2);
    }
    let out = BinaryCode::from_rows(n + 2, rows)?;
    if !out.is_self_dual() {
        return Err(Error::Internal("standard-form extension is not self-dual".into()));
    }
    Ok(out)
}

/// `ψ(C)` over F2+uF2, generated by `ψ(g)` and `ψ(ω·g)` for each generator row.
pub fn psi_code(code: &LinearCode<F4u>) -> LinearCode<F2u> {
    let rows: Vec<Vec<F2u>> = code
        .generator()
        .iter_rows()
        .flat_map(|g| {
            let wg: Vec<F4u> = g.iter().map(|&x| F4u::W * x).collect();
            [gray_psi(g), gray_psi(&wg)]
        })
        .collect();
    LinearCode::new(RingMatrix::from_rows(rows).expect("uniform rows"))
}

/// Extension vectors and parameters found by a search, in a form that can be
/// written as JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub format: String,
    pub version: u32,
    pub length: usize,
    pub ring: RingKind,
    pub construction: String,
    pub parents: Vec<String>,
    #[serde(rename = "X")]
    pub x: String,
    pub c: String,
    pub d: usize,
    pub family: Option<String>,
    pub beta: Option<i64>,
    pub gamma: Option<i64>,
    pub new: bool,
    pub seed: Option<u64>,
}

impl CodeRecord {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        ring: RingKind,
        construction: &str,
        parents: Vec<String>,
        x: String,
        c: String,
        class: &Classification,
        new: bool,
        seed: Option<u64>,
    ) -> Self {
        CodeRecord {
            format: "selfdual-record".into(),
            version: 1,
            length: class.summary.n,
            ring,
            construction: construction.into(),
            parents,
            x,
            c,
            d: class.summary.d,
            family: class.id.map(|id| id.family.tag().to_string()),
            beta: class.id.map(|id| id.beta),
            gamma: class.id.and_then(|id| id.gamma),
            new,
            seed,
        }
    }
}

/// Base code for [`extension_search`].
#[derive(Clone, Debug)]
pub enum SearchBase {
    Binary(BinaryCode),
    OverF2u(LinearCode<F2u>),
}

impl SearchBase {
    fn length(&self) -> usize {
        match self {
            SearchBase::Binary(c) => c.n(),
            SearchBase::OverF2u(c) => c.length(),
        }
    }

    fn ring(&self) -> RingKind {
        match self {
            SearchBase::Binary(_) => RingKind::F2,
            SearchBase::OverF2u(_) => RingKind::F2u,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub name: String,
    /// Parameter sets to report; when empty, registry-new parameters are
    /// reported instead.
    pub targets: BTreeSet<EnumeratorId>,
    pub seed: u64,
    /// Number of extension vectors to try.
    pub budget: u64,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub records: Vec<CodeRecord>,
    pub tried: u64,
    /// True when the budget ran out; sampling has no natural end, so this is
    /// set whenever the budget was spent.
    pub truncated: bool,
}

fn random_binary_x(rng: &mut ChaCha8Rng, n: usize) -> u128 {
    let mut x = rng.gen::<u128>() & crate::bincode::mask(n);
    if x.count_ones().is_multiple_of(2) {
        // flip one uniformly chosen coordinate to fix the parity
        x ^= 1 << rng.gen_range(0..n);
    }
    x
}

fn random_f2u_x(rng: &mut ChaCha8Rng, n: usize) -> Vec<F2u> {
    loop {
        let mut x: Vec<F2u> = (0..n).map(|_| F2u::from_bits(rng.gen_range(0..4)).expect("2 bits")).collect();
        // ⟨X,X⟩ = Σ x_i² and squares of units are 1, of non-units 0
        let units = x.iter().filter(|v| v.is_unit()).count();
        if units % 2 == 0 {
            let i = rng.gen_range(0..n);
            x[i] = if x[i].is_unit() {
                [F2u::ZERO, F2u::U][rng.gen_range(0..2)]
            } else {
                [F2u::ONE, F2u::ONE_PLUS_U][rng.gen_range(0..2)]
            };
        }
        if inner(&x, &x) == F2u::ONE {
            return x;
        }
    }
}

/// Binary code of a free extension over F2+uF2.
pub fn f2u_extension_image(code: &LinearCode<F2u>, x: &[F2u], c: F2u) -> Result<BinaryCode> {
    let ext = extend_free(code, &ExtensionSpec::free(x.to_vec(), c))?;
    crate::bincode::gray_image(&ext)
}

/// Samples extension vectors for `base` and keeps the codes whose parameters
/// are targeted (or registry-new when no targets are given).
///
/// The `i`-th sample comes from a ChaCha stream seeded with `seed` and
/// positioned at `i`, so results do not depend on the thread count.
pub fn extension_search(
    base: &SearchBase,
    config: &SearchConfig,
    registry: &KnownParamsRegistry,
) -> Result<SearchOutcome> {
    Ok(SearchOutcome {
        records: extension_search_range(base, config, registry, 0..config.budget)?,
        tried: config.budget,
        truncated: true,
    })
}

/// The hits among samples `range` of [`extension_search`]; running
/// consecutive ranges gives the same records as one call.
pub fn extension_search_range(
    base: &SearchBase,
    config: &SearchConfig,
    registry: &KnownParamsRegistry,
    range: std::ops::Range<u64>,
) -> Result<Vec<CodeRecord>> {
    let n = base.length();
    let units: Vec<F2u> = crate::rings::self_inverse_units::<F2u>();
    let records: Vec<CodeRecord> = range
        .into_par_iter()
        .map(|i| -> Result<Vec<CodeRecord>> {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rng.set_stream(i);
            let candidates: Vec<(BinaryCode, String, String)> = match base {
                SearchBase::Binary(code) => {
                    let x = random_binary_x(&mut rng, n);
                    let s: String = (0..n).map(|j| if x >> j & 1 == 1 { '1' } else { '0' }).collect();
                    vec![(extend_free_binary(code, x)?, s, "1".into())]
                }
                SearchBase::OverF2u(code) => {
                    let x = random_f2u_x(&mut rng, n);
                    units
                        .iter()
                        .map(|&c| Ok((f2u_extension_image(code, &x, c)?, format_vector(&x), c.symbol().to_string())))
                        .collect::<Result<_>>()?
                }
            };
            let mut out = Vec::new();
            for (bin, xs, cs) in candidates {
                // only extremal codes carry a family, so anything lighter cannot be a hit
                if has_word_below(&bin, extremal_distance(bin.n()))? {
                    continue;
                }
                let class = classify(&bin)?;
                let Some(id) = class.id else { continue };
                let novelty = registry.check(&id).unwrap_or(Novelty::New);
                let hit = if config.targets.is_empty() {
                    novelty == Novelty::New
                } else {
                    config.targets.contains(&id)
                };
                if hit {
                    out.push(CodeRecord::new(
                        base.ring(),
                        "extend_free",
                        vec![config.name.clone()],
                        xs,
                        cs,
                        &class,
                        novelty == Novelty::New,
                        Some(config.seed),
                    ));
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bincode::gray_image;
    use crate::lifts::BuiltinCode;
    use crate::rings::{parse_vector, F2};

    fn h8() -> LinearCode<F2> {
        let rows = ["11110000", "00111100", "00001111", "10101010"];
        LinearCode::new(RingMatrix::from_rows(rows.iter().map(|r| parse_vector::<F2>(r).unwrap()).collect()).unwrap())
    }

    #[test]
    fn unit_vector_extension() {
        let mut x = vec![F2::ZERO; 8];
        x[0] = F2::ONE;
        let d = extend_free(&h8(), &ExtensionSpec::free(x, F2::ONE)).unwrap();
        let b = gray_image(&d).unwrap();
        assert_eq!((b.n(), b.k()), (10, 5));
        assert!(b.is_self_dual());
    }

    #[test]
    fn preconditions() {
        let x = vec![F2::ZERO; 8];
        assert!(matches!(extend_free(&h8(), &ExtensionSpec::free(x, F2::ONE)), Err(Error::Precondition(_))));
        let x: Vec<F2u> = parse_vector("1000").unwrap();
        let c = LinearCode::new(RingMatrix::from_rows(vec![parse_vector::<F2u>("11uu").unwrap()]).unwrap());
        assert!(matches!(extend_free(&c, &ExtensionSpec::free(x.clone(), F2u::U)), Err(Error::Precondition(_))));
        assert!(extend_free(&c, &ExtensionSpec::free(x, F2u::ONE_PLUS_U)).is_ok());
    }

    #[test]
    fn generator_independence() {
        let c = gray_image(&BuiltinCode::K1.code()).unwrap();
        let x = 0b1011u128;
        let a = extend_free_binary(&c, x).unwrap();
        // same code from a different generator (rows summed pairwise)
        let rows: Vec<u128> = c.rows().windows(2).map(|w| w[0] ^ w[1]).chain([c.rows()[0]]).collect();
        let c2 = BinaryCode::from_rows(c.n(), rows).unwrap();
        assert_eq!(c2, c);
        let b = extend_free_binary(&c2, x).unwrap();
        assert_eq!(a, b);
        // generic path agrees with the packed path
        let xs: Vec<F2> = (0..56).map(|i| F2::new(x >> i & 1 == 1)).collect();
        let g = LinearCode::new(c.to_matrix());
        let via = gray_image(&extend_free(&g, &ExtensionSpec::free(xs, F2::ONE)).unwrap()).unwrap();
        assert_eq!(via, a);
    }

    #[test]
    fn standard_parity_cases() {
        // [I_2 | I_2]: 1 + n = 1 over F2, so X = (1,0) works and (1,1) does not
        let a = RingMatrix::<F2>::identity(2);
        let ok = extend_standard(&a, &ExtensionSpec::standard(parse_vector("10").unwrap(), F2::ONE)).unwrap();
        assert_eq!(ok.length(), 6);
        assert!(gray_image(&ok).unwrap().is_self_dual());
        assert!(extend_standard(&a, &ExtensionSpec::standard(parse_vector("11").unwrap(), F2::ONE)).is_err());
    }

    #[test]
    fn standard_matches_free_with_ones() {
        let code = gray_image(&BuiltinCode::L1.code()).unwrap();
        let sf = code.standard_form();
        let x = 0b111u128;
        let std = extend_standard_binary(&sf, x).unwrap();
        let ones = crate::bincode::mask(sf.n - sf.k) << sf.k;
        let free = extend_free_binary(&sf.code(), x | ones).unwrap();
        assert_eq!(std, free);
        // generic matrix path agrees
        let xs: Vec<F2> = (0..sf.k).map(|i| F2::new(x >> i & 1 == 1)).collect();
        let g = extend_standard(&sf.a_matrix(), &ExtensionSpec::standard(xs, F2::ONE)).unwrap();
        assert_eq!(gray_image(&g).unwrap(), std);
    }

    #[test]
    fn psi_code_is_self_dual_and_maps_to_binary_image() {
        let l = BuiltinCode::L1.code();
        let p = psi_code(&l);
        assert_eq!(p.length(), 32);
        assert!(p.generator().gram().is_zero());
        assert_eq!(gray_image(&p).unwrap(), gray_image(&l).unwrap());
    }

    #[test]
    fn search_is_deterministic_and_budget_zero_is_empty() {
        let base = SearchBase::Binary(gray_image(&BuiltinCode::K2.code()).unwrap());
        let reg = KnownParamsRegistry::shipped();
        let cfg = SearchConfig {
            name: "K2".into(),
            targets: BTreeSet::new(),
            seed: 3,
            budget: 6,
        };
        let a = extension_search(&base, &cfg, &reg).unwrap();
        let b = extension_search(&base, &cfg, &reg).unwrap();
        assert_eq!(a.records, b.records);
        let none = extension_search(&base, &SearchConfig { budget: 0, ..cfg }, &reg).unwrap();
        assert!(none.records.is_empty() && none.truncated);
    }

    #[test]
    fn random_vectors_satisfy_preconditions() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            assert_eq!(random_binary_x(&mut rng, 56).count_ones() % 2, 1);
            let x = random_f2u_x(&mut rng, 32);
            assert_eq!(inner(&x, &x), F2u::ONE);
        }
    }
}
