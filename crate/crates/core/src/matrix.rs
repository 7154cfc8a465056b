//! Dense matrices over the rings of [`crate::rings`], linear codes given by a
//! generator matrix, and the plain-text matrix format.
//!
//! Text format: an optional `#` comment block, a header line `ring n k`, then
//! `k` lines of `n` symbols each with no separators.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::rings::{Ring, RingKind, F2, F2u, F4, F4u};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingMatrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> RingMatrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RingMatrix {
            rows,
            cols,
            data: vec![R::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = R::ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidArgument("ragged matrix rows".into()));
        }
        Ok(RingMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[R]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(l, j)];
                }
            }
        }
        Ok(out)
    }

    /// `M Mᵀ`, computed without materializing the transpose.
    pub fn gram(&self) -> Self {
        let mut out = Self::zeros(self.rows, self.rows);
        for i in 0..self.rows {
            for j in i..self.rows {
                let v = crate::rings::inner(self.row(i), self.row(j));
                out[(i, j)] = v;
                out[(j, i)] = v;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// `[self | rhs]`.
    pub fn hstack(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows {
            return Err(Error::InvalidArgument("hstack row mismatch".into()));
        }
        let rows = (0..self.rows)
            .map(|i| [self.row(i), rhs.row(i)].concat())
            .collect();
        Self::from_rows(rows)
    }

    /// Columns `start..end` as a new matrix.
    pub fn columns(&self, start: usize, end: usize) -> Self {
        let rows = (0..self.rows).map(|i| self.row(i)[start..end].to_vec()).collect();
        Self::from_rows(rows).expect("uniform slices")
    }

    pub fn map<S: Ring>(&self, f: impl Fn(R) -> S) -> RingMatrix<S> {
        RingMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{MATRIX_FORMAT} {MATRIX_VERSION}\n{} {} {}\n", R::KIND, self.cols, self.rows);
        for row in self.iter_rows() {
            for x in row {
                s.push(x.symbol());
            }
            s.push('\n');
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let (kind, n, k, body) = parse_header(text)?;
        if kind != R::KIND {
            return Err(Error::Parse(format!("expected a {} matrix, found {kind}", R::KIND)));
        }
        let rows = body
            .iter()
            .map(|line| crate::rings::parse_vector::<R>(line))
            .collect::<Result<Vec<_>>>()?;
        check_shape(&rows, n, k)?;
        if k == 0 {
            return Ok(Self::zeros(0, n));
        }
        Self::from_rows(rows)
    }
}

impl<R> std::ops::Index<(usize, usize)> for RingMatrix<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        &self.data[i * self.cols + j]
    }
}

impl<R> std::ops::IndexMut<(usize, usize)> for RingMatrix<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        &mut self.data[i * self.cols + j]
    }
}

/// First line of a matrix file. Files without it are read as version 1.
const MATRIX_FORMAT: &str = "selfdual-matrix";
const MATRIX_VERSION: u32 = 1;

fn parse_header(text: &str) -> Result<(RingKind, usize, usize, Vec<&str>)> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let mut header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    if let Some(version) = header.strip_prefix(MATRIX_FORMAT) {
        if version.trim() != MATRIX_VERSION.to_string() {
            return Err(Error::Parse(format!("unsupported matrix format version `{}`", version.trim())));
        }
        header = lines
            .next()
            .ok_or_else(|| Error::Parse("matrix file has no `ring n k` line".into()))?;
    }
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(Error::Parse(format!("bad header `{header}`; expected `ring n k`")));
    }
    let kind: RingKind = fields[0].parse()?;
    let n = fields[1]
        .parse()
        .map_err(|_| Error::Parse(format!("bad length `{}`", fields[1])))?;
    let k = fields[2]
        .parse()
        .map_err(|_| Error::Parse(format!("bad row count `{}`", fields[2])))?;
    Ok((kind, n, k, lines.collect()))
}

fn check_shape<R>(rows: &[Vec<R>], n: usize, k: usize) -> Result<()> {
    if rows.len() != k {
        return Err(Error::Parse(format!("header says {k} rows, found {}", rows.len())));
    }
    if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(Error::Parse(format!("row {i} has {} symbols, expected {n}", r.len())));
    }
    Ok(())
}

/// A linear code over one of the rings, given by a generator matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode<R> {
    generator: RingMatrix<R>,
    /// Rank of the code as a free module, when known from the construction.
    free_rank: Option<usize>,
}

impl<R: Ring> LinearCode<R> {
    pub fn new(generator: RingMatrix<R>) -> Self {
        LinearCode {
            generator,
            free_rank: None,
        }
    }

    /// A code whose generator has the systematic form `[I_k | M]`, which makes
    /// it free of rank `k`.
    pub fn systematic(generator: RingMatrix<R>) -> Result<Self> {
        let k = generator.rows();
        if generator.cols() < k || generator.columns(0, k) != RingMatrix::identity(k) {
            return Err(Error::UnsupportedForm("generator is not of the form [I | M]".into()));
        }
        Ok(LinearCode {
            generator,
            free_rank: Some(k),
        })
    }

    pub fn generator(&self) -> &RingMatrix<R> {
        &self.generator
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn free_rank(&self) -> Option<usize> {
        self.free_rank
    }

    pub fn is_systematic(&self) -> bool {
        let k = self.generator.rows();
        self.generator.cols() >= k && self.generator.columns(0, k) == RingMatrix::identity(k)
    }

    /// `G Gᵀ = 0`.
    pub fn is_self_orthogonal(&self) -> bool {
        self.generator.gram().is_zero()
    }

    /// Self-duality of a free code in `[I | M]` form: `G Gᵀ = 0` and rank `n/2`.
    pub fn is_self_dual(&self) -> Result<bool> {
        if !self.is_systematic() {
            return Err(Error::UnsupportedForm(
                "self-duality check needs a generator of the form [I | M]".into(),
            ));
        }
        Ok(2 * self.generator.rows() == self.length() && self.is_self_orthogonal())
    }
}

/// A matrix over whichever ring a text file declares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyMatrix {
    F2(RingMatrix<F2>),
    F2u(RingMatrix<F2u>),
    F4(RingMatrix<F4>),
    F4u(RingMatrix<F4u>),
}

impl AnyMatrix {
    pub fn parse_text(text: &str) -> Result<Self> {
        let (kind, ..) = parse_header(text)?;
        Ok(match kind {
            RingKind::F2 => AnyMatrix::F2(RingMatrix::parse_text(text)?),
            RingKind::F2u => AnyMatrix::F2u(RingMatrix::parse_text(text)?),
            RingKind::F4 => AnyMatrix::F4(RingMatrix::parse_text(text)?),
            RingKind::F4u => AnyMatrix::F4u(RingMatrix::parse_text(text)?),
        })
    }

    pub fn to_text(&self) -> String {
        match self {
            AnyMatrix::F2(m) => m.to_text(),
            AnyMatrix::F2u(m) => m.to_text(),
            AnyMatrix::F4(m) => m.to_text(),
            AnyMatrix::F4u(m) => m.to_text(),
        }
    }

    pub fn kind(&self) -> RingKind {
        match self {
            AnyMatrix::F2(_) => RingKind::F2,
            AnyMatrix::F2u(_) => RingKind::F2u,
            AnyMatrix::F4(_) => RingKind::F4,
            AnyMatrix::F4u(_) => RingKind::F4u,
        }
    }
}

/// Renders a matrix with a leading comment line.
pub fn to_text_with_comment<R: Ring>(m: &RingMatrix<R>, comment: &str) -> String {
    let mut s = String::new();
    for line in comment.lines() {
        let _ = writeln!(s, "# {line}");
    }
    s + &m.to_text()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::parse_vector;

    #[test]
    fn text_round_trip() {
        let m = RingMatrix::from_rows(vec![
            parse_vector::<F4u>("01af").unwrap(),
            parse_vector::<F4u>("8421").unwrap(),
        ])
        .unwrap();
        let text = m.to_text();
        assert_eq!(text, "selfdual-matrix 1\nF4uF4 4 2\n01af\n8421\n");
        assert_eq!(RingMatrix::<F4u>::parse_text(&text).unwrap(), m);
        let any = AnyMatrix::parse_text(&to_text_with_comment(&m, "demo")).unwrap();
        assert_eq!(any, AnyMatrix::F4u(m));
    }

    #[test]
    fn text_errors() {
        assert!(RingMatrix::<F2>::parse_text("F2 3 1\n01\n").is_err());
        assert!(RingMatrix::<F2>::parse_text("selfdual-matrix 2\nF2 2 1\n01\n").is_err());
        assert_eq!(RingMatrix::<F2>::parse_text("F2 2 1\n01\n").unwrap().cols(), 2);
        assert!(RingMatrix::<F2>::parse_text("F2 2 2\n01\n").is_err());
        assert!(RingMatrix::<F2>::parse_text("F4 2 1\n01\n").is_err());
        assert!(AnyMatrix::parse_text("Z7 2 1\n01\n").is_err());
        assert!(AnyMatrix::parse_text("").is_err());
    }

    #[test]
    fn identity_codes() {
        let i2 = RingMatrix::<F2>::identity(2);
        let c = LinearCode::systematic(i2.hstack(&i2).unwrap()).unwrap();
        assert!(c.is_self_dual().unwrap());
        let c = LinearCode::systematic(i2.hstack(&RingMatrix::zeros(2, 2)).unwrap()).unwrap();
        assert!(!c.is_self_dual().unwrap());
        let swapped = RingMatrix::<F2>::from_rows(vec![vec![F2::ZERO, F2::ONE], vec![F2::ONE, F2::ZERO]]).unwrap();
        assert!(LinearCode::new(swapped).is_self_dual().is_err());
    }

    #[test]
    fn product_matches_gram() {
        let m = RingMatrix::from_rows(vec![
            parse_vector::<F4u>("1a3").unwrap(),
            parse_vector::<F4u>("f07").unwrap(),
        ])
        .unwrap();
        assert_eq!(m.mul(&m.transpose()).unwrap(), m.gram());
    }
}
