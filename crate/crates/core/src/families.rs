//! Text format for matrix families and `(f, F)` pairs, and a catalog of standard examples.
//!
//! A file is a list of `key = value` items separated by newlines or `;`. Lines starting
//! with `#` are comments. Recognised keys:
//!
//! ```text
//! name = diag-sym(1,2)
//! kind = symmetric            # symmetric | skew | general
//! vars = x, y, z              # also ranges: x1..x6
//! matrix = [[x, y], [y, z]]   # full grid
//! upper = [[x, y], [z]]       # upper triangle (strict for skew), lower part filled in
//! target = x, y, z            # (f, F) mode: coordinates of the target
//! function = x^5*z + x^3*y^3 + y^5*z
//! map = [x, y, x + y]
//! expect.mu = 25
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::dim::Dim;
use crate::error::{Error, Result};
use crate::invariants::Germ;
use crate::matalg::{MatrixFamily, MatrixKind, PolyMatrix};
use crate::poly::{Poly, SubstitutionMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Body {
    /// Full `n × n` grid of entry expressions.
    Matrix { kind: MatrixKind, entries: Vec<Vec<String>> },
    /// A function on `target` coordinates and its pullback map from `vars`.
    Section {
        target: Vec<String>,
        function: String,
        map: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: Option<String>,
    /// Source variables.
    pub vars: Vec<String>,
    pub body: Body,
    /// Expected values of report fields (see `InvariantReport::value`).
    pub expected: BTreeMap<String, Dim>,
}

impl FamilySpec {
    pub fn kind(&self) -> Option<MatrixKind> {
        match &self.body {
            Body::Matrix { kind, .. } => Some(*kind),
            Body::Section { .. } => None,
        }
    }

    /// Matrix size, or the target dimension of a section.
    pub fn n(&self) -> usize {
        match &self.body {
            Body::Matrix { entries, .. } => entries.len(),
            Body::Section { target, .. } => target.len(),
        }
    }

    pub fn family(&self) -> Result<MatrixFamily> {
        match &self.body {
            Body::Matrix { kind, entries } => {
                let rows = entries
                    .iter()
                    .map(|r| r.iter().map(|e| parse_poly(e, &self.vars)).collect())
                    .collect::<Result<Vec<Vec<Poly>>>>()?;
                MatrixFamily::new(*kind, PolyMatrix::from_rows(self.vars.len(), rows)?)
            }
            Body::Section { .. } => Err(Error::WrongKind {
                expected: "matrix family".into(),
                got: "section".into(),
            }),
        }
    }

    pub fn germ(&self) -> Result<Germ> {
        match &self.body {
            Body::Matrix { .. } => Ok(Germ::Family(self.family()?)),
            Body::Section { target, function, map } => {
                let f = parse_poly(function, target)?;
                let images = map.iter().map(|e| parse_poly(e, &self.vars)).collect::<Result<Vec<_>>>()?;
                Germ::section(f, SubstitutionMap::new(self.vars.len(), images)?)
            }
        }
    }
}

fn grid(rows: &[Vec<String>]) -> String {
    let rows: Vec<String> = rows.iter().map(|r| format!("[{}]", r.join(", "))).collect();
    format!("[{}]", rows.join(", "))
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            writeln!(f, "name = {name}")?;
        }
        match &self.body {
            Body::Matrix { kind, entries } => {
                writeln!(f, "kind = {}", kind.name())?;
                writeln!(f, "vars = {}", self.vars.join(", "))?;
                writeln!(f, "matrix = {}", grid(entries))?;
            }
            Body::Section { target, function, map } => {
                writeln!(f, "target = {}", target.join(", "))?;
                writeln!(f, "function = {function}")?;
                writeln!(f, "vars = {}", self.vars.join(", "))?;
                writeln!(f, "map = [{}]", map.join(", "))?;
            }
        }
        for (k, v) in &self.expected {
            match v {
                Dim::Finite(d) => writeln!(f, "expect.{k} = {d}")?,
                Dim::Infinite => writeln!(f, "expect.{k} = inf")?,
            }
        }
        Ok(())
    }
}

/// Position-aware cursor over one value.
struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col0: usize,
    vars: &'a [String],
}

impl<'a> Cursor<'a> {
    fn new(text: &str, vars: &'a [String], line: usize, col0: usize) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
            line,
            col0,
            vars,
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.line,
            column: self.col0 + self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let msg = match self.peek() {
                Some(got) => format!("expected `{c}`, found `{got}`"),
                None => format!("expected `{c}`, found end of input"),
            };
            Err(self.err(msg))
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a non-negative integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits"))
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        if !matches!(self.chars.get(self.pos), Some(c) if c.is_alphabetic() || *c == '_') {
            return None;
        }
        while matches!(self.chars.get(self.pos), Some(c) if c.is_alphanumeric() || *c == '_') {
            self.pos += 1;
        }
        Some(self.chars[start..self.pos].iter().collect())
    }

    fn expr(&mut self) -> Result<Poly> {
        let n = self.vars.len();
        // a leading sign is accepted so that printed polynomials parse back
        let mut acc = if self.eat('-') {
            -&self.term()?
        } else {
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                break;
            }
        }
        debug_assert_eq!(acc.nvars(), n);
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.base()?;
        if self.eat('^') {
            if self.peek() == Some('-') {
                return Err(self.err("negative exponents are not allowed"));
            }
            let e = self.uint()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Poly> {
        let n = self.vars.len();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                let mut value = BigRational::from_integer(num);
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let den = self.uint()?;
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    value /= BigRational::from_integer(den);
                }
                Ok(Poly::constant(n, value))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let col = self.col0 + self.pos;
                let name = self.ident().expect("identifier start");
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(Poly::var(n, i)),
                    None => Err(Error::UnknownIdentifier {
                        name,
                        line: self.line,
                        column: col,
                    }),
                }
            }
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
            None => Err(self.err("unexpected end of expression")),
        }
    }

    /// `[e, e, ...]`
    fn list(&mut self) -> Result<Vec<Poly>> {
        self.expect('[')?;
        let mut out = Vec::new();
        if self.eat(']') {
            return Ok(out);
        }
        loop {
            if matches!(self.peek(), Some(',') | Some(']')) {
                return Err(self.err("empty entry"));
            }
            out.push(self.expr()?);
            if self.eat(']') {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    /// `[[...], [...]]`
    fn grid(&mut self) -> Result<Vec<Vec<Poly>>> {
        self.expect('[')?;
        let mut out = Vec::new();
        loop {
            out.push(self.list()?);
            if self.eat(']') {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    fn finish(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            let c = self.peek().unwrap();
            Err(self.err(format!("unexpected `{c}`")))
        }
    }
}

/// Parses a polynomial in the given variables.
pub fn parse_poly(text: &str, vars: &[String]) -> Result<Poly> {
    let mut c = Cursor::new(text, vars, 1, 1);
    let p = c.expr()?;
    c.finish()?;
    Ok(p)
}

fn parse_vars(text: &str, line: usize, col0: usize) -> Result<Vec<String>> {
    let err = |message: String| Error::Syntax {
        line,
        column: col0,
        message,
    };
    let mut out: Vec<String> = Vec::new();
    for item in text.split(',') {
        let item = item.trim();
        let valid = |s: &str| {
            let mut cs = s.chars();
            matches!(cs.next(), Some(c) if c.is_alphabetic() || c == '_') && cs.all(|c| c.is_alphanumeric() || c == '_')
        };
        if let Some((a, b)) = item.split_once("..") {
            let split = |s: &str| {
                let digits = s.trim_start_matches(|c: char| !c.is_ascii_digit()).len();
                let (stem, num) = s.split_at(s.len() - digits);
                (stem.to_string(), num.parse::<usize>().ok())
            };
            let ((sa, na), (sb, nb)) = (split(a.trim()), split(b.trim()));
            match (na, nb) {
                (Some(na), Some(nb)) if sa == sb && na <= nb && valid(&sa) => {
                    out.extend((na..=nb).map(|i| format!("{sa}{i}")));
                }
                _ => return Err(err(format!("bad variable range `{item}`"))),
            }
        } else if valid(item) {
            out.push(item.to_string());
        } else {
            return Err(err(format!("bad variable name `{item}`")));
        }
    }
    for (i, v) in out.iter().enumerate() {
        if out[..i].contains(v) {
            return Err(err(format!("duplicate variable `{v}`")));
        }
    }
    Ok(out)
}

struct Item {
    key: String,
    value: String,
    line: usize,
    col: usize,
}

fn split_items(text: &str) -> Result<Vec<Item>> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line_no = ln + 1;
        let code = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        let mut offset = 0;
        for piece in code.split(';') {
            let start = offset;
            offset += piece.chars().count() + 1;
            if piece.trim().is_empty() {
                continue;
            }
            let Some(eq) = piece.find('=') else {
                return Err(Error::Syntax {
                    line: line_no,
                    column: start + 1,
                    message: format!("expected `key = value`, found `{}`", piece.trim()),
                });
            };
            let key = piece[..eq].trim().to_string();
            let raw = &piece[eq + 1..];
            let lead = raw.len() - raw.trim_start().len();
            let col = start + piece[..eq + 1].chars().count() + raw[..lead].chars().count() + 1;
            out.push(Item {
                key,
                value: raw.trim().to_string(),
                line: line_no,
                col,
            });
        }
    }
    Ok(out)
}

fn expect_value(item: &Item) -> Result<Dim> {
    match item.value.as_str() {
        "inf" | "infinite" => Ok(Dim::Infinite),
        s => s.parse().map(Dim::Finite).map_err(|_| Error::Syntax {
            line: item.line,
            column: item.col,
            message: format!("expected an integer or `inf`, found `{s}`"),
        }),
    }
}

fn canonical(p: &Poly, vars: &[String]) -> String {
    p.display_with(vars)
}

/// Parses a family or section description.
pub fn parse_family(text: &str) -> Result<FamilySpec> {
    let items = split_items(text)?;
    let mut map: BTreeMap<&str, &Item> = BTreeMap::new();
    let mut expected = BTreeMap::new();
    for item in &items {
        if let Some(k) = item.key.strip_prefix("expect.") {
            expected.insert(k.to_string(), expect_value(item)?);
            continue;
        }
        if !matches!(
            item.key.as_str(),
            "name" | "kind" | "n" | "vars" | "matrix" | "upper" | "target" | "function" | "map"
        ) {
            return Err(Error::Syntax {
                line: item.line,
                column: 1,
                message: format!("unknown key `{}`", item.key),
            });
        }
        if map.insert(item.key.as_str(), item).is_some() {
            return Err(Error::Syntax {
                line: item.line,
                column: 1,
                message: format!("duplicate key `{}`", item.key),
            });
        }
    }
    let missing = |key: &str| Error::Syntax {
        line: items.last().map_or(1, |i| i.line),
        column: 1,
        message: format!("missing key `{key}`"),
    };
    let name = map.get("name").map(|i| i.value.clone());
    let vars_item = map.get("vars").ok_or_else(|| missing("vars"))?;
    let vars = parse_vars(&vars_item.value, vars_item.line, vars_item.col)?;

    let body = if let Some(fitem) = map.get("function") {
        let titem = map.get("target").ok_or_else(|| missing("target"))?;
        let target = parse_vars(&titem.value, titem.line, titem.col)?;
        let mut c = Cursor::new(&fitem.value, &target, fitem.line, fitem.col);
        let f = c.expr()?;
        c.finish()?;
        let mitem = map.get("map").ok_or_else(|| missing("map"))?;
        let mut c = Cursor::new(&mitem.value, &vars, mitem.line, mitem.col);
        let images = c.list()?;
        c.finish()?;
        if images.len() != target.len() {
            return Err(Error::ShapeMismatch(format!(
                "map has {} components, target has {} coordinates",
                images.len(),
                target.len()
            )));
        }
        Body::Section {
            function: canonical(&f, &target),
            map: images.iter().map(|p| canonical(p, &vars)).collect(),
            target,
        }
    } else {
        let kitem = map.get("kind").ok_or_else(|| missing("kind"))?;
        let kind: MatrixKind = kitem.value.parse().map_err(|e: String| Error::Syntax {
            line: kitem.line,
            column: kitem.col,
            message: e,
        })?;
        let rows = match (map.get("matrix"), map.get("upper")) {
            (Some(item), None) => {
                let mut c = Cursor::new(&item.value, &vars, item.line, item.col);
                let g = c.grid()?;
                c.finish()?;
                g
            }
            (None, Some(item)) => {
                let mut c = Cursor::new(&item.value, &vars, item.line, item.col);
                let g = c.grid()?;
                c.finish()?;
                fill_upper(kind, g, vars.len())?
            }
            (Some(_), Some(item)) => {
                return Err(Error::Syntax {
                    line: item.line,
                    column: 1,
                    message: "give either `matrix` or `upper`, not both".into(),
                })
            }
            (None, None) => return Err(missing("matrix")),
        };
        let n = rows.len();
        if let Some(item) = map.get("n") {
            let declared: usize = item.value.parse().map_err(|_| Error::Syntax {
                line: item.line,
                column: item.col,
                message: format!("expected an integer, found `{}`", item.value),
            })?;
            if declared != n {
                return Err(Error::ShapeMismatch(format!("n = {declared} but the matrix has {n} rows")));
            }
        }
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::ShapeMismatch(format!("row of length {} in a {n}-row matrix", r.len())));
        }
        for i in 0..n {
            for j in i..n {
                let ok = match kind {
                    MatrixKind::Symmetric => rows[i][j] == rows[j][i],
                    MatrixKind::Skew => rows[i][j] == -&rows[j][i],
                    MatrixKind::General => true,
                };
                if !ok {
                    return Err(Error::SymmetryViolation { row: j + 1, col: i + 1 });
                }
            }
        }
        MatrixFamily::new(kind, PolyMatrix::from_rows(vars.len(), rows.clone())?)?;
        Body::Matrix {
            kind,
            entries: rows.iter().map(|r| r.iter().map(|p| canonical(p, &vars)).collect()).collect(),
        }
    };
    Ok(FamilySpec {
        name,
        vars,
        body,
        expected,
    })
}

/// Completes an upper triangle (with diagonal for symmetric, strict for skew).
fn fill_upper(kind: MatrixKind, upper: Vec<Vec<Poly>>, nvars: usize) -> Result<Vec<Vec<Poly>>> {
    let (n, offset) = match kind {
        MatrixKind::Symmetric => (upper.len(), 0),
        MatrixKind::Skew => (upper.len() + 1, 1),
        MatrixKind::General => {
            return Err(Error::ShapeMismatch("`upper` needs a symmetric or skew kind".into()));
        }
    };
    let mut m = vec![vec![Poly::zero(nvars); n]; n];
    for (i, row) in upper.into_iter().enumerate() {
        if row.len() != n - i - offset {
            return Err(Error::ShapeMismatch(format!(
                "upper row {} has {} entries, expected {}",
                i + 1,
                row.len(),
                n - i - offset
            )));
        }
        for (k, p) in row.into_iter().enumerate() {
            let j = i + offset + k;
            m[j][i] = if kind == MatrixKind::Skew { -&p } else { p.clone() };
            m[i][j] = p;
        }
    }
    Ok(m)
}

fn names(stem: &str, k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("{stem}{i}")).collect()
}

fn matrix_spec(name: String, kind: MatrixKind, vars: Vec<String>, m: &PolyMatrix) -> FamilySpec {
    let entries = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| canonical(m.get(i, j), &vars)).collect())
        .collect();
    FamilySpec {
        name: Some(name),
        vars,
        body: Body::Matrix { kind, entries },
        expected: BTreeMap::new(),
    }
}

/// Normal form at a singular point of the generic family of the given kind and size:
/// a generic 2×2 (or 4×4 skew) block padded with a constant invertible block.
pub fn normal_form(kind: MatrixKind, n: usize) -> Result<FamilySpec> {
    let (block, nvars) = match kind {
        MatrixKind::Symmetric => (2, 3),
        MatrixKind::General => (2, 4),
        MatrixKind::Skew => (4, 6),
    };
    if n < block || (kind == MatrixKind::Skew && n % 2 == 1) {
        return Err(Error::ShapeMismatch(format!("no {} normal form of size {n}", kind.name())));
    }
    let x = |i: usize| Poly::var(nvars, i);
    let mut m = PolyMatrix::zeros(n, n, nvars);
    match kind {
        MatrixKind::Symmetric => {
            m.set(0, 0, x(0));
            m.set(0, 1, x(1));
            m.set(1, 0, x(1));
            m.set(1, 1, x(2));
        }
        MatrixKind::General => {
            m.set(0, 0, x(0));
            m.set(0, 1, x(1));
            m.set(1, 0, x(2));
            m.set(1, 1, x(3));
        }
        MatrixKind::Skew => {
            let mut k = 0;
            for i in 0..4 {
                for j in i + 1..4 {
                    m.set(i, j, x(k));
                    m.set(j, i, -&x(k));
                    k += 1;
                }
            }
        }
    }
    // constant block: identity, or the standard symplectic form for skew matrices
    let mut i = block;
    while i < n {
        if kind == MatrixKind::Skew {
            m.set(i, i + 1, Poly::one(nvars));
            m.set(i + 1, i, Poly::int(nvars, -1));
            i += 2;
        } else {
            m.set(i, i, Poly::one(nvars));
            i += 1;
        }
    }
    let short = match kind {
        MatrixKind::Symmetric => "sym",
        MatrixKind::General => "gen",
        MatrixKind::Skew => "skew",
    };
    let mut spec = matrix_spec(format!("normal-form-{short}({n})"), kind, names("x", nvars), &m);
    spec.expected.insert("mu".into(), Dim::Finite(1));
    spec.expected.insert("codim_minors".into(), Dim::Finite(1));
    spec.expected.insert("tau_ss".into(), Dim::Finite(0));
    Ok(spec)
}

/// `diag(x^{a_1}, ..., x^{a_n})` as a symmetric one-parameter family.
pub fn diag_sym(a: &[u16]) -> Result<FamilySpec> {
    if a.is_empty() || a.contains(&0) {
        return Err(Error::ShapeMismatch("diagonal exponents must be positive".into()));
    }
    let n = a.len();
    let mut m = PolyMatrix::zeros(n, n, 1);
    for (i, &e) in a.iter().enumerate() {
        m.set(i, i, Poly::var(1, 0).pow(u32::from(e)));
    }
    let list: Vec<String> = a.iter().map(|e| e.to_string()).collect();
    Ok(matrix_spec(
        format!("diag-sym({})", list.join(",")),
        MatrixKind::Symmetric,
        vec!["x".into()],
        &m,
    ))
}

fn section_spec(name: &str, target: &[&str], function: &str, vars: &[&str], map: &[&str]) -> Result<FamilySpec> {
    let text = format!(
        "name = {name}\ntarget = {}\nfunction = {function}\nvars = {}\nmap = [{}]\n",
        target.join(", "),
        vars.join(", "),
        map.join(", ")
    );
    parse_family(&text)
}

/// Names accepted by [`catalog`]; parameterised entries are shown with sample arguments.
pub const CATALOG: [&str; 11] = [
    "generic-sym-2",
    "generic-gen-2",
    "generic-skew-4",
    "normal-form-sym(3)",
    "normal-form-gen(3)",
    "normal-form-skew(6)",
    "diag-sym(1,2)",
    "diag-sym(2,3)",
    "diag-sym(1,1,2)",
    "remark-4-8-iii",
    "cross-ratio-example",
];

/// Looks up a built-in example by name, e.g. `generic-sym-2`, `normal-form-gen(3)`,
/// `diag-sym(1,2,2)`.
pub fn catalog(name: &str) -> Result<FamilySpec> {
    let unknown = || Error::UnknownCatalog(name.to_string());
    let name = name.trim();
    let (stem, args) = match name.split_once('(') {
        Some((stem, rest)) => {
            let inner = rest.strip_suffix(')').ok_or_else(unknown)?;
            let args = inner
                .split(',')
                .map(|s| s.trim().parse::<u16>().map_err(|_| unknown()))
                .collect::<Result<Vec<_>>>()?;
            (stem, args)
        }
        None => (name, Vec::new()),
    };
    let one_arg = || match args.as_slice() {
        [n] => Ok(*n as usize),
        _ => Err(unknown()),
    };
    let mut spec = match stem {
        "generic-sym-2" if args.is_empty() => rename(normal_form(MatrixKind::Symmetric, 2)?, stem),
        "generic-gen-2" if args.is_empty() => rename(normal_form(MatrixKind::General, 2)?, stem),
        "generic-skew-4" if args.is_empty() => rename(normal_form(MatrixKind::Skew, 4)?, stem),
        "normal-form-sym" => normal_form(MatrixKind::Symmetric, one_arg()?)?,
        "normal-form-gen" => normal_form(MatrixKind::General, one_arg()?)?,
        "normal-form-skew" => normal_form(MatrixKind::Skew, one_arg()?)?,
        "diag-sym" => diag_sym(&args)?,
        "remark-4-8-iii" if args.is_empty() => {
            let mut s = section_spec(
                stem,
                &["x", "y", "z"],
                "x^5*z + x^3*y^3 + y^5*z",
                &["x", "y"],
                &["x", "y", "x + y"],
            )?;
            s.expected.insert("mu".into(), Dim::Finite(25));
            s.expected.insert("tau_kf".into(), Dim::Finite(10));
            s.expected.insert("dim_pullback_jacobian".into(), Dim::Finite(19));
            s
        }
        "cross-ratio-example" if args.is_empty() => section_spec(
            stem,
            &["x", "y", "z"],
            "y*(x + y)*(x - y)*(x + z*y)",
            &["x", "y"],
            &["x", "y", "0"],
        )?,
        _ => return Err(unknown()),
    };
    if spec.name.is_none() {
        spec.name = Some(name.to_string());
    }
    Ok(spec)
}

fn rename(mut spec: FamilySpec, name: &str) -> FamilySpec {
    spec.name = Some(name.to_string());
    spec
}

/// Reads a spec from text that is either a file body or `catalog:<name>`.
pub fn load(text: &str) -> Result<FamilySpec> {
    match text.trim().strip_prefix("catalog:") {
        Some(name) => catalog(name),
        None => parse_family(text),
    }
}
