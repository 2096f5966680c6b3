//! Symbolic matrices over the polynomial ring: determinants, adjugates,
//! Pfaffians, signed sub-Pfaffians, and the ideals of submaximal minors.

use std::collections::HashMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{ModuleBasis, MonomialOrder};
use crate::poly::{rat, Poly, SubstitutionMap};

/// Rectangular matrix of polynomials in a common ring, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            nvars,
            entries: vec![Poly::zero(nvars); rows * cols],
        }
    }

    pub fn identity(n: usize, nvars: usize) -> Self {
        let mut m = Self::zeros(n, n, nvars);
        for i in 0..n {
            m.set(i, i, Poly::one(nvars));
        }
        m
    }

    pub fn from_rows(nvars: usize, rows: Vec<Vec<Poly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::ShapeMismatch("ragged rows".into()));
            }
            for p in row {
                if p.nvars() != nvars {
                    return Err(Error::VarCountMismatch {
                        left: nvars,
                        right: p.nvars(),
                    });
                }
                entries.push(p);
            }
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            nvars,
            entries,
        })
    }

    /// Builds a `rows x columns.len()` matrix from column vectors.
    pub fn from_columns(rows: usize, nvars: usize, columns: &[Vec<Poly>]) -> Self {
        let mut m = Self::zeros(rows, columns.len(), nvars);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length must equal row count");
            for (i, p) in col.iter().enumerate() {
                m.set(i, j, p.clone());
            }
        }
        m
    }

    /// Constant integer matrix.
    pub fn from_ints(nvars: usize, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| Poly::int(nvars, v)).collect())
            .collect();
        Self::from_rows(nvars, rows).expect("rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        assert_eq!(p.nvars(), self.nvars);
        self.entries[i * self.cols + j] = p;
    }

    pub fn column(&self, j: usize) -> Vec<Poly> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Poly>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = Self::zeros(self.cols, self.rows, self.nvars);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_skew(&self) -> bool {
        self.is_square() && self.transpose() == self.neg()
    }

    pub fn checked_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols, self.nvars);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Poly::zero(self.nvars);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * b);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        self.checked_mul(other).expect("matrix shape mismatch")
    }

    fn zip_with(&self, other: &PolyMatrix, f: impl Fn(&Poly, &Poly) -> Poly) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix shape mismatch");
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars: self.nvars,
            entries: self
                .entries
                .iter()
                .zip(other.entries.iter())
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &PolyMatrix) -> PolyMatrix {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> PolyMatrix {
        let entries: Vec<Poly> = self.entries.iter().map(f).collect();
        let nvars = entries.first().map_or(self.nvars, |p| p.nvars());
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars,
            entries,
        }
    }

    pub fn neg(&self) -> PolyMatrix {
        self.map(|p| -p)
    }

    pub fn scale(&self, c: &BigRational) -> PolyMatrix {
        self.map(|p| p.scale(c))
    }

    pub fn scale_poly(&self, q: &Poly) -> PolyMatrix {
        self.map(|p| p * q)
    }

    pub fn trace(&self) -> Poly {
        (0..self.rows.min(self.cols)).fold(Poly::zero(self.nvars), |acc, i| &acc + self.get(i, i))
    }

    /// Entrywise partial derivative.
    pub fn partial(&self, index: usize) -> Result<PolyMatrix> {
        if index >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index,
                nvars: self.nvars,
            });
        }
        Ok(self.map(|p| p.partial(index).expect("checked")))
    }

    /// Entrywise substitution; the result lives in `map.nvars()` variables.
    pub fn substitute(&self, map: &SubstitutionMap) -> Result<PolyMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|p| p.substitute(map))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars: map.nvars(),
            entries,
        })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut out = Self::zeros(rows.len(), cols.len(), self.nvars);
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    /// Assembles a block matrix; `None` blocks are zero.
    pub fn block(
        row_sizes: &[usize],
        col_sizes: &[usize],
        nvars: usize,
        blocks: &[Vec<Option<&PolyMatrix>>],
    ) -> PolyMatrix {
        let rows: usize = row_sizes.iter().sum();
        let cols: usize = col_sizes.iter().sum();
        let mut out = Self::zeros(rows, cols, nvars);
        let mut r0 = 0;
        for (bi, &rs) in row_sizes.iter().enumerate() {
            let mut c0 = 0;
            for (bj, &cs) in col_sizes.iter().enumerate() {
                if let Some(b) = blocks[bi][bj] {
                    assert_eq!((b.rows, b.cols), (rs, cs), "block shape mismatch");
                    for i in 0..rs {
                        for j in 0..cs {
                            out.set(r0 + i, c0 + j, b.get(i, j).clone());
                        }
                    }
                }
                c0 += cs;
            }
            r0 += rs;
        }
        out
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Determinant by Laplace expansion with memoised minors.
pub fn determinant(m: &PolyMatrix) -> Result<Poly> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let cols: Vec<usize> = (0..m.cols).collect();
    let rows: Vec<usize> = (0..m.rows).collect();
    Ok(minor(m, &rows, &cols))
}

/// Determinant of the submatrix on the given rows and columns (equal lengths).
pub fn minor(m: &PolyMatrix, rows: &[usize], cols: &[usize]) -> Poly {
    assert_eq!(rows.len(), cols.len());
    let k = rows.len();
    // memo[mask] = det of rows[k-popcount(mask)..] against the columns in mask
    let mut memo: HashMap<u64, Poly> = HashMap::new();
    memo.insert(0, Poly::one(m.nvars));
    fn go(
        m: &PolyMatrix,
        rows: &[usize],
        cols: &[usize],
        mask: u64,
        memo: &mut HashMap<u64, Poly>,
    ) -> Poly {
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let used = mask.count_ones() as usize;
        let row = rows[rows.len() - used];
        let mut acc = Poly::zero(m.nvars);
        let mut sign_pos = 0usize;
        for (b, &c) in cols.iter().enumerate() {
            if mask & (1 << b) == 0 {
                continue;
            }
            let entry = m.get(row, c);
            if !entry.is_zero() {
                let sub = go(m, rows, cols, mask & !(1 << b), memo);
                let term = entry * &sub;
                acc = if sign_pos % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            sign_pos += 1;
        }
        memo.insert(mask, acc.clone());
        acc
    }
    let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    go(m, rows, cols, full, &mut memo)
}

/// Matrix of signed cofactors, transposed: `m · adj(m) = det(m) · I`.
pub fn adjugate(m: &PolyMatrix) -> Result<PolyMatrix> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let mut adj = PolyMatrix::zeros(n, n, m.nvars);
    if n == 1 {
        adj.set(0, 0, Poly::one(m.nvars));
        return Ok(adj);
    }
    for i in 0..n {
        for j in 0..n {
            let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
            let c = minor(m, &rows, &cols);
            adj.set(i, j, if (i + j) % 2 == 0 { c } else { -&c });
        }
    }
    Ok(adj)
}

fn check_skew(s: &PolyMatrix) -> Result<()> {
    if !s.is_square() {
        return Err(Error::NotSquare {
            rows: s.rows,
            cols: s.cols,
        });
    }
    if s.rows % 2 == 1 {
        return Err(Error::OddSize(s.rows));
    }
    if !s.is_skew() {
        return Err(Error::NotSkew);
    }
    Ok(())
}

/// Pfaffian of the principal submatrix on `idx` (even length), expanding along the first index.
fn pfaffian_on(s: &PolyMatrix, idx: &[usize], memo: &mut HashMap<Vec<usize>, Poly>) -> Poly {
    if idx.is_empty() {
        return Poly::one(s.nvars);
    }
    if let Some(p) = memo.get(idx) {
        return p.clone();
    }
    let first = idx[0];
    let mut acc = Poly::zero(s.nvars);
    for (pos, &j) in idx.iter().enumerate().skip(1) {
        let entry = s.get(first, j);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&k| k != j).collect();
        let sub = pfaffian_on(s, &rest, memo);
        let term = entry * &sub;
        // the sign is (-1)^(pos+1) for pos counted from 0 with pos >= 1
        acc = if pos % 2 == 1 { &acc + &term } else { &acc - &term };
    }
    memo.insert(idx.to_vec(), acc.clone());
    acc
}

pub fn pfaffian(s: &PolyMatrix) -> Result<Poly> {
    check_skew(s)?;
    let idx: Vec<usize> = (0..s.rows).collect();
    Ok(pfaffian_on(s, &idx, &mut HashMap::new()))
}

/// The skew matrix `S*` of signed order-`(n-2)` sub-Pfaffians with `S*·S = S·S* = Pf(S)·I`.
///
/// `S*[j][i] = ∂Pf/∂s_ij = (-1)^(i+j+1) Pf(S with rows/cols i, j removed)` for `i < j`.
pub fn sub_pfaffian_matrix(s: &PolyMatrix) -> Result<PolyMatrix> {
    check_skew(s)?;
    let n = s.rows;
    let mut out = PolyMatrix::zeros(n, n, s.nvars);
    let mut memo = HashMap::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let rest: Vec<usize> = (0..n).filter(|&k| k != i && k != j).collect();
            let p = pfaffian_on(s, &rest, &mut memo);
            let p = if (i + j) % 2 == 0 { -&p } else { p };
            out.set(i, j, -&p);
            out.set(j, i, p);
        }
    }
    Ok(out)
}

/// Symmetry type of a matrix family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    Symmetric,
    Skew,
    General,
}

impl MatrixKind {
    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::Symmetric => "symmetric",
            MatrixKind::Skew => "skew",
            MatrixKind::General => "general",
        }
    }

    pub fn space(self) -> MatrixSpace {
        match self {
            MatrixKind::Symmetric => MatrixSpace::Sym,
            MatrixKind::Skew => MatrixSpace::Skew,
            MatrixKind::General => MatrixSpace::Mat,
        }
    }

    /// Length of the relevant determinantal or Pfaffian resolution.
    pub fn resolution_length(self) -> usize {
        match self {
            MatrixKind::Symmetric => 3,
            MatrixKind::General => 4,
            MatrixKind::Skew => 6,
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for MatrixKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "symmetric" | "sym" => Ok(MatrixKind::Symmetric),
            "skew" => Ok(MatrixKind::Skew),
            "general" | "gen" => Ok(MatrixKind::General),
            other => Err(format!("unknown matrix kind `{other}`")),
        }
    }
}

/// Coordinate conventions for the matrix spaces appearing in the resolutions.
///
/// * `Mat`: `E_ij`, row-major.
/// * `Sym`: `E_ii` and `E_ij + E_ji` for `i < j`, upper triangle row-major.
/// * `Skew`: `E_ij - E_ji` for `i < j`, strict upper triangle row-major.
/// * `Sl`: off-diagonal `E_ij` row-major, then `E_ii - E_{i+1,i+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixSpace {
    Mat,
    Sym,
    Skew,
    Sl,
}

impl MatrixSpace {
    pub fn dim(self, n: usize) -> usize {
        match self {
            MatrixSpace::Mat => n * n,
            MatrixSpace::Sym => n * (n + 1) / 2,
            MatrixSpace::Skew => n * (n - 1) / 2,
            MatrixSpace::Sl => n * n - 1,
        }
    }

    pub fn basis(self, n: usize, nvars: usize) -> Vec<PolyMatrix> {
        let unit = |i: usize, j: usize| {
            let mut e = PolyMatrix::zeros(n, n, nvars);
            e.set(i, j, Poly::one(nvars));
            e
        };
        let mut out = Vec::new();
        match self {
            MatrixSpace::Mat => {
                for i in 0..n {
                    for j in 0..n {
                        out.push(unit(i, j));
                    }
                }
            }
            MatrixSpace::Sym => {
                for i in 0..n {
                    for j in i..n {
                        out.push(if i == j { unit(i, i) } else { unit(i, j).add(&unit(j, i)) });
                    }
                }
            }
            MatrixSpace::Skew => {
                for i in 0..n {
                    for j in (i + 1)..n {
                        out.push(unit(i, j).sub(&unit(j, i)));
                    }
                }
            }
            MatrixSpace::Sl => {
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            out.push(unit(i, j));
                        }
                    }
                }
                for i in 0..n.saturating_sub(1) {
                    out.push(unit(i, i).sub(&unit(i + 1, i + 1)));
                }
            }
        }
        out
    }

    /// Coordinates of `m` in [`MatrixSpace::basis`]; `m` must lie in the space.
    pub fn flatten(self, m: &PolyMatrix) -> Vec<Poly> {
        let n = m.rows();
        let mut out = Vec::with_capacity(self.dim(n));
        match self {
            MatrixSpace::Mat => {
                for i in 0..n {
                    for j in 0..n {
                        out.push(m.get(i, j).clone());
                    }
                }
            }
            MatrixSpace::Sym => {
                for i in 0..n {
                    for j in i..n {
                        out.push(m.get(i, j).clone());
                    }
                }
            }
            MatrixSpace::Skew => {
                for i in 0..n {
                    for j in (i + 1)..n {
                        out.push(m.get(i, j).clone());
                    }
                }
            }
            MatrixSpace::Sl => {
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            out.push(m.get(i, j).clone());
                        }
                    }
                }
                let mut partial = Poly::zero(m.nvars());
                for i in 0..n.saturating_sub(1) {
                    partial = &partial + m.get(i, i);
                    out.push(partial.clone());
                }
            }
        }
        out
    }

    /// Inverse of [`MatrixSpace::flatten`].
    pub fn unflatten(self, n: usize, nvars: usize, coords: &[Poly]) -> PolyMatrix {
        assert_eq!(coords.len(), self.dim(n));
        self.basis(n, nvars)
            .iter()
            .zip(coords)
            .fold(PolyMatrix::zeros(n, n, nvars), |acc, (b, c)| acc.add(&b.scale_poly(c)))
    }
}

/// A germ `(Q^m, 0) -> matrix space` given by an `n x n` matrix of polynomials in `m` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFamily {
    kind: MatrixKind,
    entries: PolyMatrix,
}

impl MatrixFamily {
    pub fn new(kind: MatrixKind, entries: PolyMatrix) -> Result<Self> {
        if !entries.is_square() {
            return Err(Error::NotSquare {
                rows: entries.rows(),
                cols: entries.cols(),
            });
        }
        match kind {
            MatrixKind::Symmetric if !entries.is_symmetric() => return Err(Error::NotSymmetric),
            MatrixKind::Skew if !entries.is_skew() => return Err(Error::NotSkew),
            _ => {}
        }
        Ok(MatrixFamily { kind, entries })
    }

    /// The identity germ of matrix space: entries are the coordinates of the space.
    pub fn generic(kind: MatrixKind, n: usize) -> Self {
        let space = kind.space();
        let nvars = space.dim(n);
        let coords: Vec<Poly> = (0..nvars).map(|i| Poly::var(nvars, i)).collect();
        let entries = space.unflatten(n, nvars, &coords);
        MatrixFamily { kind, entries }
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.entries.rows()
    }

    /// Number of parameters.
    pub fn m(&self) -> usize {
        self.entries.nvars()
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.entries
    }

    /// Dimension of the ambient matrix space.
    pub fn space_dim(&self) -> usize {
        self.kind.space().dim(self.n())
    }

    /// The family as a map into matrix-space coordinates.
    pub fn as_map(&self) -> SubstitutionMap {
        SubstitutionMap::general(self.m(), self.kind.space().flatten(&self.entries))
            .expect("entries share the parameter ring")
    }

    /// `det` (symmetric, general) or `Pf` (skew) of the family.
    pub fn function(&self) -> Result<Poly> {
        match self.kind {
            MatrixKind::Skew => pfaffian(&self.entries),
            _ => determinant(&self.entries),
        }
    }

    /// The generic function on matrix space whose pullback is [`MatrixFamily::function`].
    pub fn generic_function(&self) -> Result<Poly> {
        MatrixFamily::generic(self.kind, self.n()).function()
    }

    /// `S*`: adjugate, or signed sub-Pfaffian matrix in the skew case.
    pub fn star(&self) -> Result<PolyMatrix> {
        match self.kind {
            MatrixKind::Skew => sub_pfaffian_matrix(&self.entries),
            _ => adjugate(&self.entries),
        }
    }

    pub fn derivative(&self, i: usize) -> Result<PolyMatrix> {
        self.entries.partial(i)
    }

    /// Value at the origin as a rational matrix.
    pub fn at_origin(&self) -> Vec<Vec<BigRational>> {
        (0..self.n())
            .map(|i| (0..self.n()).map(|j| self.entries.get(i, j).constant_term()).collect())
            .collect()
    }

    /// Corank of the constant matrix `S(0)`.
    pub fn corank_at_origin(&self) -> usize {
        self.n() - rational_rank(self.at_origin())
    }
}

/// Rank of a rational matrix by exact row reduction.
pub fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = BigRational::one() / rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = &rows[r][col] * &inv;
                for c in col..ncols {
                    let delta = &factor * &rows[rank][c];
                    rows[r][c] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Generators of the ideal of submaximal minors (`size = n - 1`) or, for skew
/// families, of the order-`(n-2)` sub-Pfaffians (`size = n - 2`), with the local order.
pub fn minors_ideal(fam: &MatrixFamily, size: usize) -> Result<ModuleBasis> {
    let n = fam.n();
    let gens: Vec<Poly> = match fam.kind {
        MatrixKind::Skew if size + 2 == n => sub_pfaffian_matrix(fam.matrix())?.entries().to_vec(),
        MatrixKind::Symmetric | MatrixKind::General if size + 1 == n => adjugate(fam.matrix())?.entries().to_vec(),
        _ => {
            return Err(Error::Unsupported(format!(
                "ideal of size-{size} minors for a {} {n}x{n} family",
                fam.kind
            )))
        }
    };
    let mut seen = std::collections::HashSet::new();
    let gens: Vec<Poly> = gens
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let lead = p.terms().next().map(|(_, c)| c.clone()).unwrap();
            p.scale(&(BigRational::one() / lead))
        })
        .filter(|p| seen.insert(p.clone()))
        .collect();
    Ok(ModuleBasis::ideal(fam.m(), gens, MonomialOrder::local()))
}

/// `trace(A · B)` without forming the product.
pub fn trace_of_product(a: &PolyMatrix, b: &PolyMatrix) -> Poly {
    let mut acc = Poly::zero(a.nvars());
    for i in 0..a.rows() {
        for k in 0..a.cols() {
            let (x, y) = (a.get(i, k), b.get(k, i));
            if !x.is_zero() && !y.is_zero() {
                acc = &acc + &(x * y);
            }
        }
    }
    acc
}

pub(crate) fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

pub(crate) fn inv_int(n: usize) -> BigRational {
    BigRational::one() / rat(n as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dim::Dim;
    use crate::groebner::quotient_dimension;

    fn v(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    fn generic_gen2() -> PolyMatrix {
        PolyMatrix::from_rows(4, vec![vec![v(4, 0), v(4, 1)], vec![v(4, 2), v(4, 3)]]).unwrap()
    }

    #[test]
    fn determinant_examples() {
        let d = determinant(&generic_gen2()).unwrap();
        assert_eq!(d, &(&v(4, 0) * &v(4, 3)) - &(&v(4, 1) * &v(4, 2)));
        let s = PolyMatrix::from_rows(3, vec![vec![v(3, 0), v(3, 1)], vec![v(3, 1), v(3, 2)]]).unwrap();
        assert_eq!(determinant(&s).unwrap(), &(&v(3, 0) * &v(3, 2)) - &v(3, 1).pow(2));
        assert_eq!(determinant(&PolyMatrix::identity(4, 2)).unwrap(), Poly::one(2));
        assert!(matches!(
            determinant(&PolyMatrix::zeros(2, 3, 1)),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn adjugate_examples() {
        let m = generic_gen2();
        let adj = adjugate(&m).unwrap();
        let expect = PolyMatrix::from_rows(4, vec![vec![v(4, 3), -&v(4, 1)], vec![-&v(4, 2), v(4, 0)]]).unwrap();
        assert_eq!(adj, expect);
        assert_eq!(adjugate(&PolyMatrix::identity(3, 1)).unwrap(), PolyMatrix::identity(3, 1));
        let g3 = MatrixFamily::generic(MatrixKind::General, 3);
        let adj = adjugate(g3.matrix()).unwrap();
        let det = determinant(g3.matrix()).unwrap();
        let expect = PolyMatrix::identity(3, 9).scale_poly(&det);
        assert_eq!(g3.matrix().mul(&adj), expect);
        assert_eq!(adj.mul(g3.matrix()), expect);
    }

    #[test]
    fn pfaffian_examples() {
        let s = PolyMatrix::from_rows(1, vec![vec![Poly::zero(1), v(1, 0)], vec![-&v(1, 0), Poly::zero(1)]]).unwrap();
        assert_eq!(pfaffian(&s).unwrap(), v(1, 0));
        let g = MatrixFamily::generic(MatrixKind::Skew, 4);
        let x = |i| v(6, i);
        let expect = &(&(&x(0) * &x(5)) - &(&x(1) * &x(4))) + &(&x(2) * &x(3));
        assert_eq!(pfaffian(g.matrix()).unwrap(), expect);
        assert!(pfaffian(&PolyMatrix::zeros(4, 4, 2)).unwrap().is_zero());
        assert_eq!(pfaffian(&PolyMatrix::zeros(3, 3, 1)), Err(Error::OddSize(3)));
        assert_eq!(pfaffian(&PolyMatrix::identity(2, 1)), Err(Error::NotSkew));
    }

    #[test]
    fn sub_pfaffian_examples() {
        let s = PolyMatrix::from_rows(1, vec![vec![Poly::zero(1), v(1, 0)], vec![-&v(1, 0), Poly::zero(1)]]).unwrap();
        let star = sub_pfaffian_matrix(&s).unwrap();
        assert_eq!(star, PolyMatrix::from_ints(1, &[&[0, -1], &[1, 0]]));
        assert_eq!(star.mul(&s), PolyMatrix::identity(2, 1).scale_poly(&v(1, 0)));

        for n in [4, 6] {
            let g = MatrixFamily::generic(MatrixKind::Skew, n);
            let star = sub_pfaffian_matrix(g.matrix()).unwrap();
            let pf = pfaffian(g.matrix()).unwrap();
            let expect = PolyMatrix::identity(n, g.m()).scale_poly(&pf);
            assert_eq!(star.mul(g.matrix()), expect);
            assert_eq!(g.matrix().mul(&star), expect);
            assert!(star.is_skew());
        }

        // homogeneity: S*(cS) = c^{(n-2)/2} S*(S)
        let g = MatrixFamily::generic(MatrixKind::Skew, 6);
        let c = rat(3);
        let scaled = sub_pfaffian_matrix(&g.matrix().scale(&c)).unwrap();
        let base = sub_pfaffian_matrix(g.matrix()).unwrap();
        assert_eq!(scaled, base.scale(&(&c * &c)));
    }

    #[test]
    fn sub_pfaffians_are_gradient_of_pfaffian() {
        let g = MatrixFamily::generic(MatrixKind::Skew, 4);
        let pf = g.function().unwrap();
        let star = g.star().unwrap();
        let mut k = 0;
        for i in 0..4 {
            for j in (i + 1)..4 {
                assert_eq!(pf.partial(k).unwrap(), *star.get(j, i));
                k += 1;
            }
        }
    }

    #[test]
    fn adjugate_trace_is_derivative_of_det() {
        // trace(M* X) = Σ X_ij ∂det/∂M_ij for the generic symmetric family
        let g = MatrixFamily::generic(MatrixKind::Symmetric, 3);
        let det = g.function().unwrap();
        let adj = g.star().unwrap();
        for (k, b) in MatrixSpace::Sym.basis(3, g.m()).iter().enumerate() {
            assert_eq!(trace_of_product(&adj, b), det.partial(k).unwrap());
        }
    }

    #[test]
    fn minors_ideal_examples() {
        let sym2 = MatrixFamily::generic(MatrixKind::Symmetric, 2);
        let ideal = minors_ideal(&sym2, 1).unwrap();
        assert_eq!(quotient_dimension(&ideal).unwrap(), Dim::Finite(1));
        assert_eq!(ideal.generators().len(), 3);

        let x = v(1, 0);
        let diag = PolyMatrix::from_rows(1, vec![vec![x.clone(), Poly::zero(1)], vec![Poly::zero(1), x.pow(2)]]).unwrap();
        let fam = MatrixFamily::new(MatrixKind::Symmetric, diag).unwrap();
        assert_eq!(quotient_dimension(&minors_ideal(&fam, 1).unwrap()).unwrap(), Dim::Finite(1));

        let sk = MatrixFamily::generic(MatrixKind::Skew, 4);
        let ideal = minors_ideal(&sk, 2).unwrap();
        assert_eq!(ideal.generators().len(), 6);
        assert_eq!(quotient_dimension(&ideal).unwrap(), Dim::Finite(1));

        assert!(matches!(minors_ideal(&sk, 3), Err(Error::Unsupported(_))));
    }

    #[test]
    fn flatten_round_trip() {
        for space in [MatrixSpace::Mat, MatrixSpace::Sym, MatrixSpace::Skew, MatrixSpace::Sl] {
            for (k, b) in space.basis(3, 1).iter().enumerate() {
                let coords = space.flatten(b);
                for (i, c) in coords.iter().enumerate() {
                    assert_eq!(*c, Poly::int(1, (i == k) as i64), "{space:?}");
                }
                assert_eq!(space.unflatten(3, 1, &coords), *b);
            }
        }
    }

    #[test]
    fn family_validation() {
        let bad = PolyMatrix::from_rows(2, vec![vec![v(2, 0), v(2, 1)], vec![v(2, 0), v(2, 1)]]).unwrap();
        assert_eq!(MatrixFamily::new(MatrixKind::Symmetric, bad.clone()), Err(Error::NotSymmetric));
        assert_eq!(MatrixFamily::new(MatrixKind::Skew, bad), Err(Error::NotSkew));
        let g = MatrixFamily::generic(MatrixKind::Symmetric, 3);
        assert_eq!(g.m(), 6);
        assert_eq!(g.as_map(), SubstitutionMap::identity(6));
        assert_eq!(g.corank_at_origin(), 3);
    }
}
