//! Shared test helpers: a brute-force colength oracle working in jet spaces, and
//! seeded generators of random polynomials and families.
#![allow(dead_code)]

use std::collections::BTreeMap;

use matsing::matalg::{MatrixFamily, MatrixKind, PolyMatrix};
use matsing::poly::{rat, ExpVec, Poly};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Monomials of total degree `< k` in `n` variables.
fn monomials_below(n: usize, k: u32) -> Vec<Vec<u16>> {
    let mut out = vec![vec![0u16; n]];
    let mut frontier = out.clone();
    for _ in 1..k {
        let mut next = Vec::new();
        for m in &frontier {
            // extend only at or after the last nonzero exponent to avoid duplicates
            let last = m.iter().rposition(|&e| e > 0).unwrap_or(0);
            for i in last..n {
                let mut e = m.clone();
                e[i] += 1;
                next.push(e);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Incremental row echelon form over the rationals.
struct Echelon {
    rows: BTreeMap<usize, BTreeMap<usize, BigRational>>,
}

impl Echelon {
    fn insert(&mut self, mut row: BTreeMap<usize, BigRational>) {
        loop {
            let Some((&col, _)) = row.iter().next() else { return };
            match self.rows.get(&col) {
                Some(pivot) => {
                    let c = row[&col].clone();
                    for (j, v) in pivot {
                        let e = row.entry(*j).or_insert_with(BigRational::zero);
                        *e -= &c * v;
                        if e.is_zero() {
                            row.remove(j);
                        }
                    }
                }
                None => {
                    let inv = BigRational::one() / row[&col].clone();
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    self.rows.insert(col, row);
                    return;
                }
            }
        }
    }
}

/// `dim (O^rank / (M + m^k O^rank))` for the submodule generated by `gens`.
pub fn jet_codim(nvars: usize, rank: usize, gens: &[Vec<Poly>], k: u32) -> u64 {
    let monos = monomials_below(nvars, k);
    let index: BTreeMap<(usize, Vec<u16>), usize> = (0..rank)
        .flat_map(|c| monos.iter().map(move |m| (c, m.clone())))
        .enumerate()
        .map(|(i, key)| (key, i))
        .collect();
    let mut ech = Echelon { rows: BTreeMap::new() };
    for g in gens {
        for m in &monos {
            let shift = ExpVec::from_slice(m);
            let mut row = BTreeMap::new();
            for (c, p) in g.iter().enumerate() {
                for (e, coeff) in p.mul_monomial(&shift, &BigRational::one()).terms() {
                    if e.total_degree() < k {
                        row.insert(index[&(c, e.exponents().to_vec())], coeff.clone());
                    }
                }
            }
            if !row.is_empty() {
                ech.insert(row);
            }
        }
    }
    (index.len() - ech.rows.len()) as u64
}

/// Local colength by stabilisation in jet spaces: once the truncated codimension stops
/// growing from `k` to `k + 1`, Nakayama gives `m^k O^r ⊂ M`. `None` if no stabilisation
/// happens up to `max_k`.
pub fn jet_colength(nvars: usize, rank: usize, gens: &[Vec<Poly>], max_k: u32) -> Option<u64> {
    let mut prev = jet_codim(nvars, rank, gens, 1);
    for k in 2..=max_k {
        let cur = jet_codim(nvars, rank, gens, k);
        if cur == prev {
            return Some(cur);
        }
        prev = cur;
    }
    None
}

pub fn jet_colength_ideal(nvars: usize, gens: &[Poly], max_k: u32) -> Option<u64> {
    let gens: Vec<Vec<Poly>> = gens.iter().map(|g| vec![g.clone()]).collect();
    jet_colength(nvars, 1, &gens, max_k)
}

/// Random polynomial with terms of degree in `lo..=hi` and small integer coefficients.
pub fn random_poly(rng: &mut TestRng, nvars: usize, lo: u32, hi: u32, terms: usize) -> Poly {
    let mut p = Poly::zero(nvars);
    for _ in 0..terms {
        let deg = rng.gen_range(lo..=hi);
        let mut e = ExpVec::zero(nvars);
        for _ in 0..deg {
            let i = rng.gen_range(0..nvars);
            e.set(i, e.get(i) + 1);
        }
        let c = rng.gen_range(-3i64..=3);
        if c != 0 {
            p = &p + &Poly::monomial(nvars, e, rat(c));
        }
    }
    p
}

/// Random family of the given kind vanishing at the origin.
pub fn random_family(rng: &mut TestRng, kind: MatrixKind, n: usize, m: usize, max_deg: u32) -> MatrixFamily {
    let mut s = PolyMatrix::zeros(n, n, m);
    for i in 0..n {
        for j in 0..n {
            let upper = j > i || (j == i && kind != MatrixKind::Skew);
            if kind == MatrixKind::General || upper {
                let p = random_poly(rng, m, 1, max_deg, 2);
                if kind != MatrixKind::General && j != i {
                    let q = if kind == MatrixKind::Skew { -&p } else { p.clone() };
                    s.set(j, i, q);
                }
                s.set(i, j, p);
            }
        }
    }
    MatrixFamily::new(kind, s).expect("structurally valid")
}

/// `x_i` in `n` variables.
pub fn var(n: usize, i: usize) -> Poly {
    Poly::var(n, i)
}

/// Ideal of finite colength: pure powers with random perturbations, plus random extras.
pub fn random_finite_ideal(rng: &mut TestRng, nvars: usize) -> Vec<Poly> {
    let mut gens = Vec::new();
    for i in 0..nvars {
        let d = rng.gen_range(1..=4u32);
        let bump = random_poly(rng, nvars, 1, d + 1, 2);
        let pure = var(nvars, i).pow(d);
        // keep the pure power as the lowest-degree part only when the bump is of higher order
        let p = if bump.order().map_or(true, |o| o > d) { &pure + &bump } else { &pure + &random_poly(rng, nvars, d + 1, d + 2, 2) };
        gens.push(p);
    }
    for _ in 0..rng.gen_range(0..3) {
        gens.push(random_poly(rng, nvars, 1, 3, 3));
    }
    gens
}
