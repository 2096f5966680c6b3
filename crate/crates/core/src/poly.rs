//! Exact sparse multivariate polynomials over the rationals.
//!
//! A [`Poly`] is a map from exponent vectors to nonzero rational coefficients.
//! Terms are kept in a `BTreeMap` keyed by [`ExpVec`], so two polynomials are
//! equal exactly when their term maps are equal.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpVec(SmallVec<[u16; 8]>);

impl ExpVec {
    pub fn zero(nvars: usize) -> Self {
        ExpVec(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = Self::zero(nvars);
        e.0[index] = 1;
        e
    }

    pub fn from_slice(exps: &[u16]) -> Self {
        ExpVec(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `self | other` componentwise.
    pub fn divides(&self, other: &ExpVec) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming `other | self`.
    pub fn div(&self, other: &ExpVec) -> ExpVec {
        debug_assert!(other.divides(self));
        ExpVec(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &ExpVec) -> ExpVec {
        ExpVec(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn get(&self, index: usize) -> u16 {
        self.0[index]
    }

    pub fn set(&mut self, index: usize, value: u16) {
        self.0[index] = value;
    }
}

/// Exact sparse polynomial in `nvars` variables with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<ExpVec, BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::monomial(nvars, ExpVec::zero(nvars), c)
    }

    pub fn int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, rat(c))
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Self::monomial(nvars, ExpVec::var(nvars, index), BigRational::one())
    }

    pub fn monomial(nvars: usize, exp: ExpVec, c: BigRational) -> Self {
        assert_eq!(exp.len(), nvars, "exponent vector length must equal nvars");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Poly { nvars, terms }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExpVec, BigRational)>,
    {
        let mut p = Poly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length must equal nvars");
            p.add_term(e, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, exp: ExpVec, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &ExpVec) -> BigRational {
        self.terms.get(exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&ExpVec::zero(self.nvars))
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.total_degree()).max()
    }

    /// Smallest total degree of a term (the order at the origin).
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.total_degree()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.total_degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    fn check_same(&self, other: &Poly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        let mut acc: HashMap<ExpVec, BigRational> = HashMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.mul(e2);
                let c = c1 * c2;
                let slot = acc.entry(e).or_insert_with(BigRational::zero);
                *slot += c;
            }
        }
        Ok(Poly::from_terms(self.nvars, acc))
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, exp: &ExpVec, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.mul(exp), x * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut result = Poly::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative with respect to variable `index`.
    pub fn partial(&self, index: usize) -> Result<Poly> {
        if index >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index,
                nvars: self.nvars,
            });
        }
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e.get(index);
            if k == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2.set(index, k - 1);
            out.add_term(e2, c * rat(k as i64));
        }
        Ok(out)
    }

    /// All first partials.
    pub fn gradient(&self) -> Vec<Poly> {
        (0..self.nvars)
            .map(|i| self.partial(i).expect("index in range"))
            .collect()
    }

    /// Replaces variable `i` by `map.images()[i]` and expands.
    pub fn substitute(&self, map: &SubstitutionMap) -> Result<Poly> {
        if map.images.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: map.images.len(),
            });
        }
        let target = map.nvars;
        let mut powers: Vec<Vec<Poly>> = map.images.iter().map(|p| vec![Poly::one(target), p.clone()]).collect();
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (i, &k) in e.exponents().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= k as usize {
                    let next = &cache[cache.len() - 1] * &cache[1];
                    cache.push(next);
                }
                term = &term * &cache[k as usize];
                if term.is_zero() {
                    break;
                }
            }
            for (e2, c2) in term.terms {
                out.add_term(e2, c2);
            }
        }
        Ok(out)
    }

    /// `q(x) = p(x + a)`.
    pub fn translate(&self, point: &[BigRational]) -> Result<Poly> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let images = (0..self.nvars)
            .map(|i| &Poly::var(self.nvars, i) + &Poly::constant(self.nvars, point[i].clone()))
            .collect();
        self.substitute(&SubstitutionMap::unchecked(self.nvars, images))
    }

    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.exponents().iter().enumerate() {
                if k > 0 {
                    t *= num_traits::pow(point[i].clone(), k as usize);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Re-embeds into a ring with more variables; variable `i` goes to `positions[i]`.
    pub fn embed(&self, nvars: usize, positions: &[usize]) -> Poly {
        assert_eq!(positions.len(), self.nvars);
        let mut out = Poly::zero(nvars);
        for (e, c) in &self.terms {
            let mut e2 = ExpVec::zero(nvars);
            for (i, &k) in e.exponents().iter().enumerate() {
                e2.set(positions[i], e2.get(positions[i]) + k);
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Renders with the given variable names in a form accepted by the parser.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        // highest degree first, then reverse internal order for a stable layout
        let mut items: Vec<(&ExpVec, &BigRational)> = self.terms.iter().collect();
        items.sort_by(|a, b| b.0.total_degree().cmp(&a.0.total_degree()).then_with(|| b.0.cmp(a.0)));
        let mut out = String::new();
        for (idx, (e, c)) in items.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || e.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &k) in e.exponents().iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], k)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    pub fn default_names(nvars: usize) -> Vec<String> {
        (1..=nvars).map(|i| format!("x{i}")).collect()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&Poly::default_names(self.nvars)))
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        self.checked_add(rhs).expect("polynomial ring mismatch")
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self.checked_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        self.checked_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-BigRational::one())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// The components of a map `F: (Q^m, 0) -> (Q^n, 0)` as `n` polynomials in `m` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstitutionMap {
    nvars: usize,
    images: Vec<Poly>,
}

impl SubstitutionMap {
    /// A map germ at the origin: every image must have zero constant term.
    pub fn new(nvars: usize, images: Vec<Poly>) -> Result<Self> {
        let map = Self::general(nvars, images)?;
        if !map.is_based_at_origin() {
            return Err(Error::NotAtOrigin);
        }
        Ok(map)
    }

    /// A polynomial map with no base-point condition (matrix families may have constant blocks).
    pub fn general(nvars: usize, images: Vec<Poly>) -> Result<Self> {
        for p in &images {
            if p.nvars() != nvars {
                return Err(Error::VarCountMismatch {
                    left: nvars,
                    right: p.nvars(),
                });
            }
        }
        Ok(SubstitutionMap { nvars, images })
    }

    pub(crate) fn unchecked(nvars: usize, images: Vec<Poly>) -> Self {
        SubstitutionMap { nvars, images }
    }

    pub fn identity(nvars: usize) -> Self {
        SubstitutionMap {
            nvars,
            images: (0..nvars).map(|i| Poly::var(nvars, i)).collect(),
        }
    }

    /// Source dimension `m`.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Target dimension `n`.
    pub fn arity(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    pub fn is_based_at_origin(&self) -> bool {
        self.images.iter().all(|p| p.constant_term().is_zero())
    }

    /// `self ∘ inner`: substitute `inner` into every image.
    pub fn compose(&self, inner: &SubstitutionMap) -> Result<SubstitutionMap> {
        let images = self
            .images
            .iter()
            .map(|p| p.substitute(inner))
            .collect::<Result<Vec<_>>>()?;
        Ok(SubstitutionMap {
            nvars: inner.nvars,
            images,
        })
    }

    /// Jacobian as an `n x m` matrix of polynomials; column `j` is `∂F/∂x_j`.
    pub fn jacobian(&self) -> Vec<Vec<Poly>> {
        self.images.iter().map(|p| p.gradient()).collect()
    }
}
