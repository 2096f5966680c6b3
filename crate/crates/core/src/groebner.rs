//! Gröbner bases (global orders) and standard bases (local orders) for submodules of
//! free modules `R^r`, with syzygies, lifting and quotient dimensions. Local standard
//! bases come from homogenizing and running Buchberger; Mora's weak normal form is only
//! used to reduce against a finished basis.

use std::cell::Cell;
use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::dim::Dim;
use crate::error::{Error, Result};
use crate::matalg::PolyMatrix;
use crate::poly::{ExpVec, Poly};

/// Monomial order on `Q[x_1..x_n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Graded reverse lexicographic (global).
    DegRevLex,
    /// Lexicographic with `x_1 > x_2 > ...` (global).
    Lex,
    /// Lower total degree is larger, ties broken reverse lexicographically (local).
    NegDegRevLex,
    /// On `Q[x_1..x_n, t]`: total degree first, then [`OrderKind::NegDegRevLex`] on the
    /// `x` part. Global; used on homogenized local problems.
    Homogenized,
}

/// How monomial order and component index combine on `R^r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleOrder {
    /// Position over term: component 0 dominates.
    Pot,
    /// Term over position.
    Top,
    /// Components below the index dominate the rest; term over position inside each block.
    Split(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub module: ModuleOrder,
}

impl MonomialOrder {
    pub fn global() -> Self {
        MonomialOrder {
            kind: OrderKind::DegRevLex,
            module: ModuleOrder::Pot,
        }
    }

    pub fn local() -> Self {
        MonomialOrder {
            kind: OrderKind::NegDegRevLex,
            module: ModuleOrder::Pot,
        }
    }

    pub fn lex() -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            module: ModuleOrder::Pot,
        }
    }

    pub fn with_module(self, module: ModuleOrder) -> Self {
        MonomialOrder { module, ..self }
    }

    pub fn is_local(self) -> bool {
        self.kind == OrderKind::NegDegRevLex
    }

    pub fn cmp_exp(self, a: &ExpVec, b: &ExpVec) -> Ordering {
        let revlex = || {
            for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
                if x != y {
                    return y.cmp(x);
                }
            }
            Ordering::Equal
        };
        match self.kind {
            OrderKind::DegRevLex => a.total_degree().cmp(&b.total_degree()).then_with(revlex),
            OrderKind::NegDegRevLex => b.total_degree().cmp(&a.total_degree()).then_with(revlex),
            OrderKind::Lex => a.exponents().cmp(b.exponents()),
            OrderKind::Homogenized => {
                let n = a.len() - 1;
                let (xa, xb) = (&a.exponents()[..n], &b.exponents()[..n]);
                let deg = |x: &[u16]| x.iter().map(|&e| u32::from(e)).sum::<u32>();
                a.total_degree()
                    .cmp(&b.total_degree())
                    .then_with(|| deg(xb).cmp(&deg(xa)))
                    .then_with(|| {
                        for (x, y) in xa.iter().zip(xb).rev() {
                            if x != y {
                                return y.cmp(x);
                            }
                        }
                        Ordering::Equal
                    })
            }
        }
    }

    /// Compares `x^a e_ca` with `x^b e_cb`.
    pub fn cmp_mon(self, ca: usize, a: &ExpVec, cb: usize, b: &ExpVec) -> Ordering {
        match self.module {
            ModuleOrder::Pot => cb.cmp(&ca).then_with(|| self.cmp_exp(a, b)),
            ModuleOrder::Top => self.cmp_exp(a, b).then_with(|| cb.cmp(&ca)),
            ModuleOrder::Split(k) => (cb >= k)
                .cmp(&(ca >= k))
                .then_with(|| self.cmp_exp(a, b))
                .then_with(|| cb.cmp(&ca)),
        }
    }
}

thread_local! {
    static STEP_LIMIT: Cell<Option<u64>> = const { Cell::new(None) };
    static STEPS: Cell<u64> = const { Cell::new(0) };
}

/// Runs `f` with a cap on the number of reduction steps of each basis computation.
pub fn with_step_limit<R>(limit: Option<u64>, f: impl FnOnce() -> R) -> R {
    let old = STEP_LIMIT.with(|l| l.replace(limit));
    let out = f();
    STEP_LIMIT.with(|l| l.set(old));
    out
}

pub fn step_limit() -> Option<u64> {
    STEP_LIMIT.with(|l| l.get())
}

fn reset_steps() {
    STEPS.with(|s| s.set(0));
}

fn tick() -> Result<()> {
    let n = STEPS.with(|s| {
        let n = s.get() + 1;
        s.set(n);
        n
    });
    match step_limit() {
        Some(limit) if n > limit => Err(Error::ResourceExhausted { limit }),
        _ => Ok(()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Term {
    comp: usize,
    exp: ExpVec,
    coeff: BigRational,
}

/// Module element as a list of terms in increasing order (leading term last).
type Vector = Vec<Term>;

fn cmp_terms(order: MonomialOrder, a: &Term, b: &Term) -> Ordering {
    order.cmp_mon(a.comp, &a.exp, b.comp, &b.exp)
}

fn to_vector(order: MonomialOrder, v: &[Poly]) -> Vector {
    let mut out: Vector = v
        .iter()
        .enumerate()
        .flat_map(|(comp, p)| {
            p.terms().map(move |(e, c)| Term {
                comp,
                exp: e.clone(),
                coeff: c.clone(),
            })
        })
        .collect();
    out.sort_by(|a, b| cmp_terms(order, a, b));
    out
}

fn from_vector(nvars: usize, rank: usize, v: &Vector) -> Vec<Poly> {
    let mut out = vec![Poly::zero(nvars); rank];
    for t in v {
        out[t.comp].add_term(t.exp.clone(), t.coeff.clone());
    }
    out
}

/// `h - c * x^m * g`.
fn sub_mul(order: MonomialOrder, h: &Vector, c: &BigRational, m: &ExpVec, g: &Vector) -> Vector {
    let mut out = Vec::with_capacity(h.len() + g.len());
    let mut i = 0;
    let mut gi = g.iter().map(|t| Term {
        comp: t.comp,
        exp: t.exp.mul(m),
        coeff: -(c * &t.coeff),
    });
    let mut next_g = gi.next();
    while i < h.len() || next_g.is_some() {
        match (h.get(i), next_g.as_ref()) {
            (Some(a), Some(b)) => match cmp_terms(order, a, b) {
                Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(next_g.take().unwrap());
                    next_g = gi.next();
                }
                Ordering::Equal => {
                    let s = &a.coeff + &b.coeff;
                    if !s.is_zero() {
                        out.push(Term {
                            comp: a.comp,
                            exp: a.exp.clone(),
                            coeff: s,
                        });
                    }
                    i += 1;
                    next_g = gi.next();
                }
            },
            (Some(a), None) => {
                out.push(a.clone());
                i += 1;
            }
            (None, Some(_)) => {
                out.push(next_g.take().unwrap());
                next_g = gi.next();
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

fn make_monic(v: &mut Vector) {
    if let Some(lc) = v.last().map(|t| t.coeff.clone()) {
        if !lc.is_one() {
            let inv = BigRational::one() / lc;
            for t in v.iter_mut() {
                t.coeff = &t.coeff * &inv;
            }
        }
    }
}

fn ecart(v: &Vector) -> u32 {
    let top = v.iter().map(|t| t.exp.total_degree()).max().unwrap_or(0);
    top - v.last().map_or(0, |t| t.exp.total_degree())
}

fn lead(v: &Vector) -> &Term {
    v.last().expect("nonzero vector")
}

fn divides(a: &Term, b: &Term) -> bool {
    a.comp == b.comp && a.exp.divides(&b.exp)
}

/// Reduces `h` by `g` at the leading term of `h` (which `lead(g)` must divide).
fn reduce_lead(order: MonomialOrder, h: &Vector, g: &Vector) -> Vector {
    let (lh, lg) = (lead(h), lead(g));
    let m = lh.exp.div(&lg.exp);
    let c = &lh.coeff / &lg.coeff;
    sub_mul(order, h, &c, &m, g)
}

/// Full normal form for a global order.
fn nf_global(order: MonomialOrder, f: Vector, basis: &[Vector]) -> Result<Vector> {
    let mut h = f;
    let mut rest: Vector = Vec::new();
    while let Some(lt) = h.last() {
        if let Some(g) = basis.iter().find(|g| divides(lead(g), lt)) {
            tick()?;
            h = reduce_lead(order, &h, g);
        } else {
            rest.push(h.pop().unwrap());
        }
    }
    rest.reverse();
    Ok(rest)
}

/// Top-reduces until the leading term is not divisible or `stop` says so.
fn top_reduce_global(
    order: MonomialOrder,
    f: Vector,
    basis: &[Vector],
    stop: impl Fn(&Term) -> bool,
) -> Result<Vector> {
    let mut h = f;
    while let Some(lt) = h.last() {
        if stop(lt) {
            break;
        }
        match basis.iter().find(|g| divides(lead(g), lt)) {
            Some(g) => {
                tick()?;
                h = reduce_lead(order, &h, g);
            }
            None => break,
        }
    }
    Ok(h)
}

/// Mora's weak normal form for a local order.
fn nf_mora(order: MonomialOrder, f: Vector, basis: &[Vector], stop: impl Fn(&Term) -> bool) -> Result<Vector> {
    let mut h = f;
    let mut extra: Vec<(Vector, u32)> = Vec::new();
    while let Some(lt) = h.last() {
        if stop(lt) {
            break;
        }
        let mut best: Option<(&Vector, u32)> = None;
        for g in basis.iter() {
            if divides(lead(g), lt) {
                let e = ecart(g);
                if best.map_or(true, |(_, b)| e < b) {
                    best = Some((g, e));
                }
            }
        }
        for (g, e) in extra.iter() {
            if divides(lead(g), lt) && best.map_or(true, |(_, b)| *e < b) {
                best = Some((g, *e));
            }
        }
        let Some((g, eg)) = best else { break };
        tick()?;
        let g = g.clone();
        let eh = ecart(&h);
        if eg > eh {
            extra.push((h.clone(), eh));
        }
        h = reduce_lead(order, &h, &g);
    }
    Ok(h)
}

fn spoly(order: MonomialOrder, a: &Vector, b: &Vector) -> Vector {
    let (la, lb) = (lead(a), lead(b));
    let l = la.exp.lcm(&lb.exp);
    let ma = l.div(&la.exp);
    let mb = l.div(&lb.exp);
    // a, b are monic
    let zero: Vector = Vec::new();
    let sa = sub_mul(order, &zero, &-BigRational::one(), &ma, a);
    sub_mul(order, &sa, &BigRational::one(), &mb, b)
}

/// Buchberger's algorithm; local orders go through homogenization.
fn complete(order: MonomialOrder, gens: Vec<Vector>, rank1: bool) -> Result<Vec<Vector>> {
    if order.is_local() {
        return complete_homogenized(order, gens, rank1);
    }
    let mut basis: Vec<Vector> = Vec::new();
    let mut queue: BTreeSet<(u32, usize, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let push = |basis: &mut Vec<Vector>,
                queue: &mut BTreeSet<(u32, usize, usize, usize)>,
                pending: &mut HashSet<(usize, usize)>,
                mut v: Vector| {
        make_monic(&mut v);
        let j = basis.len();
        let lv = lead(&v).clone();
        for (i, g) in basis.iter().enumerate() {
            let lg = lead(g);
            if lg.comp != lv.comp {
                continue;
            }
            let l = lg.exp.lcm(&lv.exp);
            queue.insert((l.total_degree(), lv.comp, j, i));
            pending.insert((i, j));
        }
        basis.push(v);
    };

    for g in gens {
        let g = nf_global(order, g, &basis)?;
        if !g.is_empty() {
            push(&mut basis, &mut queue, &mut pending, g);
        }
    }

    while let Some(key) = queue.pop_first() {
        let (_, _, j, i) = key;
        pending.remove(&(i, j));
        let (li, lj) = (lead(&basis[i]), lead(&basis[j]));
        let l = li.exp.lcm(&lj.exp);
        if rank1 && l.total_degree() == li.exp.total_degree() + lj.exp.total_degree() {
            continue;
        }
        let chain = basis.iter().enumerate().any(|(k, g)| {
            let lk = lead(g);
            k != i
                && k != j
                && lk.comp == li.comp
                && lk.exp.divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = spoly(order, &basis[i], &basis[j]);
        let h = nf_global(order, s, &basis)?;
        if !h.is_empty() {
            push(&mut basis, &mut queue, &mut pending, h);
        }
    }
    Ok(minimalize(order, basis, false))
}

/// Standard basis for a local order via homogenization: a Gröbner basis of the
/// homogenized generators for [`OrderKind::Homogenized`], dehomogenized.
fn complete_homogenized(order: MonomialOrder, gens: Vec<Vector>, rank1: bool) -> Result<Vec<Vector>> {
    let horder = MonomialOrder {
        kind: OrderKind::Homogenized,
        module: order.module,
    };
    let hgens = gens
        .into_iter()
        .map(|v| {
            let top = v.iter().map(|t| t.exp.total_degree()).max().unwrap_or(0);
            let mut h: Vector = v
                .into_iter()
                .map(|t| {
                    let mut e = t.exp.exponents().to_vec();
                    e.push((top - t.exp.total_degree()) as u16);
                    Term {
                        comp: t.comp,
                        exp: ExpVec::from_slice(&e),
                        coeff: t.coeff,
                    }
                })
                .collect();
            h.sort_by(|a, b| cmp_terms(horder, a, b));
            h
        })
        .collect();
    let elems = complete(horder, hgens, rank1)?;
    let dehom = elems
        .into_iter()
        .map(|h| {
            let mut v: Vector = h
                .into_iter()
                .map(|t| {
                    let e = t.exp.exponents();
                    Term {
                        comp: t.comp,
                        exp: ExpVec::from_slice(&e[..e.len() - 1]),
                        coeff: t.coeff,
                    }
                })
                .collect();
            v.sort_by(|a, b| cmp_terms(order, a, b));
            v
        })
        .collect();
    Ok(minimalize(order, dehom, true))
}

/// Drops elements whose leading term is divisible by another; tail-reduces in the global case.
fn minimalize(order: MonomialOrder, basis: Vec<Vector>, local: bool) -> Vec<Vector> {
    let mut keep: Vec<Vector> = Vec::new();
    // divisors come first: ascending for global orders, descending for local ones
    let mut sorted = basis;
    sorted.sort_by(|a, b| cmp_terms(order, lead(a), lead(b)));
    if local {
        sorted.reverse();
    }
    for v in sorted {
        if !keep.iter().any(|g| divides(lead(g), lead(&v))) {
            keep.push(v);
        }
    }
    if local {
        return keep;
    }
    let mut out = Vec::with_capacity(keep.len());
    for k in 0..keep.len() {
        let mut v = keep[k].clone();
        let lt = v.pop().unwrap();
        let others: Vec<Vector> = keep.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, g)| g.clone()).collect();
        // no budget check: tail reduction of a finished basis
        let mut tail = nf_global(order, v, &others).unwrap_or_else(|_| keep[k][..keep[k].len() - 1].to_vec());
        tail.push(lt);
        out.push(tail);
    }
    out.reverse();
    out
}

/// Generators of a submodule of `R^rank` together with the order used for its standard basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleBasis {
    nvars: usize,
    rank: usize,
    gens: Vec<Vec<Poly>>,
    order: MonomialOrder,
    is_reduced: bool,
}

impl ModuleBasis {
    pub fn new(nvars: usize, rank: usize, gens: Vec<Vec<Poly>>, order: MonomialOrder) -> Result<Self> {
        for g in &gens {
            if g.len() != rank {
                return Err(Error::ArityMismatch {
                    expected: rank,
                    got: g.len(),
                });
            }
            for p in g {
                if p.nvars() != nvars {
                    return Err(Error::VarCountMismatch {
                        left: nvars,
                        right: p.nvars(),
                    });
                }
            }
        }
        Ok(ModuleBasis {
            nvars,
            rank,
            gens,
            order,
            is_reduced: false,
        })
    }

    /// An ideal, viewed as a submodule of `R^1`.
    pub fn ideal(nvars: usize, gens: Vec<Poly>, order: MonomialOrder) -> Self {
        let gens = gens.into_iter().map(|g| vec![g]).collect();
        ModuleBasis::new(nvars, 1, gens, order).expect("ideal generators share the ring")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[Vec<Poly>] {
        &self.gens
    }

    /// Whether the generators are known to form an interreduced standard basis for the order.
    pub fn is_reduced(&self) -> bool {
        self.is_reduced
    }

    pub fn with_order(&self, order: MonomialOrder) -> ModuleBasis {
        ModuleBasis {
            order,
            is_reduced: self.is_reduced && order == self.order,
            ..self.clone()
        }
    }

    pub fn standard_basis(&self) -> Result<StandardBasis> {
        standard_basis(self)
    }
}

/// A Gröbner basis (global order) or standard basis (local order).
#[derive(Clone, Debug)]
pub struct StandardBasis {
    nvars: usize,
    rank: usize,
    order: MonomialOrder,
    elems: Vec<Vector>,
}

/// Interreduced Gröbner basis (global order) or minimal standard basis (local order).
pub fn groebner_basis(m: &ModuleBasis) -> Result<ModuleBasis> {
    let sb = standard_basis(m)?;
    Ok(ModuleBasis {
        nvars: m.nvars,
        rank: m.rank,
        gens: sb.elements(),
        order: m.order,
        is_reduced: true,
    })
}

/// Like [`groebner_basis`], keeping the internal representation for reductions.
pub fn standard_basis(m: &ModuleBasis) -> Result<StandardBasis> {
    if m.is_reduced {
        let elems = m.gens.iter().map(|g| to_vector(m.order, g)).filter(|v| !v.is_empty()).collect();
        return Ok(StandardBasis {
            nvars: m.nvars,
            rank: m.rank,
            order: m.order,
            elems,
        });
    }
    reset_steps();
    let gens = m.gens.iter().map(|g| to_vector(m.order, g)).filter(|v| !v.is_empty()).collect();
    let elems = complete(m.order, gens, m.rank == 1)?;
    Ok(StandardBasis {
        nvars: m.nvars,
        rank: m.rank,
        order: m.order,
        elems,
    })
}

impl StandardBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> Vec<Vec<Poly>> {
        self.elems.iter().map(|v| from_vector(self.nvars, self.rank, v)).collect()
    }

    /// Leading monomials as `(component, exponent)` pairs.
    pub fn leading_monomials(&self) -> Vec<(usize, ExpVec)> {
        self.elems.iter().map(|v| (lead(v).comp, lead(v).exp.clone())).collect()
    }

    /// Normal form (global) or weak normal form (local) of `v`.
    pub fn reduce(&self, v: &[Poly]) -> Result<Vec<Poly>> {
        if v.len() != self.rank {
            return Err(Error::ArityMismatch {
                expected: self.rank,
                got: v.len(),
            });
        }
        let f = to_vector(self.order, v);
        let r = if self.order.is_local() {
            nf_mora(self.order, f, &self.elems, |_| false)?
        } else {
            nf_global(self.order, f, &self.elems)?
        };
        Ok(from_vector(self.nvars, self.rank, &r))
    }

    pub fn contains(&self, v: &[Poly]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(Poly::is_zero))
    }

    pub fn quotient_dimension(&self) -> Dim {
        count_standard_monomials(self.nvars, self.rank, &self.leading_monomials())
    }
}

/// `dim_Q R^r / <leading monomials>`, or `Infinite`.
pub fn count_standard_monomials(nvars: usize, rank: usize, leads: &[(usize, ExpVec)]) -> Dim {
    let mut total = 0u64;
    for comp in 0..rank {
        let ls: Vec<&ExpVec> = leads.iter().filter(|(c, _)| *c == comp).map(|(_, e)| e).collect();
        if ls.iter().any(|e| e.is_one()) {
            continue;
        }
        let pure = (0..nvars).all(|i| {
            ls.iter()
                .any(|e| e.get(i) > 0 && (0..nvars).all(|k| k == i || e.get(k) == 0))
        });
        if !pure {
            return Dim::Infinite;
        }
        let mut seen: HashSet<ExpVec> = HashSet::new();
        let mut queue = VecDeque::new();
        let start = ExpVec::zero(nvars);
        seen.insert(start.clone());
        queue.push_back(start);
        while let Some(e) = queue.pop_front() {
            total += 1;
            for i in 0..nvars {
                let mut next = e.clone();
                next.set(i, e.get(i) + 1);
                if seen.contains(&next) || ls.iter().any(|l| l.divides(&next)) {
                    continue;
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Dim::Finite(total)
}

/// `dim_Q Z / B` over the local ring for submodules `B ⊂ Z` of `R^r`: the number of
/// monomials in the leading module of `Z` outside that of `B`.
pub fn subquotient_dimension(z: &ModuleBasis, b: &ModuleBasis) -> Result<Dim> {
    let order = MonomialOrder::local().with_module(ModuleOrder::Top);
    let lz = standard_basis(&z.with_order(order))?.leading_monomials();
    let lb = standard_basis(&b.with_order(order))?.leading_monomials();
    let nvars = z.nvars;
    let mut total = 0u64;
    for comp in 0..z.rank {
        let bs: Vec<&ExpVec> = lb.iter().filter(|(c, _)| *c == comp).map(|(_, e)| e).collect();
        let in_b = |e: &ExpVec| bs.iter().any(|l| l.divides(e));
        let mut seen: HashSet<ExpVec> = HashSet::new();
        let mut queue = VecDeque::new();
        for (_, g) in lz.iter().filter(|(c, _)| *c == comp) {
            if in_b(g) {
                continue;
            }
            // finitely many multiples of g avoid L(B) iff (L(B) : g) has a pure power of every variable
            let bounded = (0..nvars).all(|i| {
                bs.iter().any(|l| (0..nvars).all(|k| k == i || l.get(k) <= g.get(k)))
            });
            if !bounded {
                return Ok(Dim::Infinite);
            }
            if seen.insert(g.clone()) {
                queue.push_back(g.clone());
            }
        }
        while let Some(e) = queue.pop_front() {
            total += 1;
            for i in 0..nvars {
                let mut next = e.clone();
                next.set(i, e.get(i) + 1);
                if seen.contains(&next) || in_b(&next) {
                    continue;
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(Dim::Finite(total))
}

/// `dim_Q` of `R^r / N` for the ring determined by the order of `m`
/// (polynomial ring for global orders, local ring at the origin for local ones).
pub fn quotient_dimension(m: &ModuleBasis) -> Result<Dim> {
    if m.is_reduced || !m.order.is_local() {
        return Ok(standard_basis(m)?.quotient_dimension());
    }
    reset_steps();
    // only the leading monomials matter
    let order = m.order.with_module(ModuleOrder::Top);
    let gens = m.gens.iter().map(|g| to_vector(order, g)).filter(|v| !v.is_empty()).collect();
    let elems = complete(order, gens, m.rank == 1)?;
    let leads: Vec<(usize, ExpVec)> = elems.iter().map(|v| (lead(v).comp, lead(v).exp.clone())).collect();
    Ok(count_standard_monomials(m.nvars, m.rank, &leads))
}

/// `u · v = Σ coeffs_i · g_i` with `u(0) != 0` (and `u = 1` for global orders).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub unit: Poly,
    pub coeffs: Vec<Poly>,
}

impl Certificate {
    /// Checks the defining identity by expansion.
    pub fn verify(&self, gens: &[Vec<Poly>], v: &[Poly]) -> bool {
        if self.coeffs.len() != gens.len() || self.unit.constant_term().is_zero() {
            return false;
        }
        (0..v.len()).all(|k| {
            let rhs = gens
                .iter()
                .zip(&self.coeffs)
                .fold(Poly::zero(self.unit.nvars()), |acc, (g, c)| &acc + &(c * &g[k]));
            &self.unit * &v[k] == rhs
        })
    }
}

/// Standard basis of `{(g_i, e_i)} ⊂ R^{r+s}` (plus an optional tracking component),
/// used for syzygies, lifting and membership certificates.
#[derive(Clone, Debug)]
pub struct Lifter {
    nvars: usize,
    rank: usize,
    ngens: usize,
    order: MonomialOrder,
    track_unit: bool,
    elems: Vec<Vector>,
}

impl Lifter {
    /// Global lifter over the polynomial ring.
    pub fn new(nvars: usize, rank: usize, gens: &[Vec<Poly>]) -> Result<Self> {
        Self::with_order(nvars, rank, gens, MonomialOrder::global())
    }

    pub fn with_order(nvars: usize, rank: usize, gens: &[Vec<Poly>], order: MonomialOrder) -> Result<Self> {
        let order = order.with_module(ModuleOrder::Split(rank));
        let s = gens.len();
        let track_unit = order.is_local();
        let total = rank + s + usize::from(track_unit);
        let mut ext = Vec::with_capacity(s);
        for (i, g) in gens.iter().enumerate() {
            if g.len() != rank {
                return Err(Error::ArityMismatch {
                    expected: rank,
                    got: g.len(),
                });
            }
            let mut v = g.clone();
            v.resize(total, Poly::zero(nvars));
            v[rank + i] = Poly::one(nvars);
            ext.push(to_vector(order, &v));
        }
        reset_steps();
        let elems = complete(order, ext, false)?;
        Ok(Lifter {
            nvars,
            rank,
            ngens: s,
            order,
            track_unit,
            elems,
        })
    }

    /// Generators of the module of relations `Σ a_i g_i = 0`.
    pub fn syzygies(&self) -> Vec<Vec<Poly>> {
        self.elems
            .iter()
            .filter(|v| lead(v).comp >= self.rank)
            .map(|v| {
                let full = from_vector(self.nvars, self.total(), v);
                full[self.rank..self.rank + self.ngens].to_vec()
            })
            .collect()
    }

    /// The relations as a standard basis of the syzygy module for the order restricted to
    /// the relation block (term over position).
    pub fn syzygy_module(&self) -> ModuleBasis {
        ModuleBasis {
            nvars: self.nvars,
            rank: self.ngens,
            gens: self.syzygies(),
            order: self.order.with_module(ModuleOrder::Top),
            is_reduced: true,
        }
    }

    fn total(&self) -> usize {
        self.rank + self.ngens + usize::from(self.track_unit)
    }

    /// Certificate for `v ∈ <g_1..g_s>`, or `None` if `v` is not in the submodule.
    pub fn certificate(&self, v: &[Poly]) -> Result<Option<Certificate>> {
        if v.len() != self.rank {
            return Err(Error::ArityMismatch {
                expected: self.rank,
                got: v.len(),
            });
        }
        let mut w = v.to_vec();
        w.resize(self.total(), Poly::zero(self.nvars));
        if self.track_unit {
            w[self.total() - 1] = Poly::one(self.nvars);
        }
        let f = to_vector(self.order, &w);
        let rank = self.rank;
        let stop = |t: &Term| t.comp >= rank;
        let r = if self.order.is_local() {
            nf_mora(self.order, f, &self.elems, stop)?
        } else {
            top_reduce_global(self.order, f, &self.elems, stop)?
        };
        if r.last().is_some_and(|t| t.comp < rank) {
            return Ok(None);
        }
        let full = from_vector(self.nvars, self.total(), &r);
        let coeffs = full[rank..rank + self.ngens].iter().map(|p| -p).collect();
        let unit = if self.track_unit {
            full[self.total() - 1].clone()
        } else {
            Poly::one(self.nvars)
        };
        if unit.constant_term().is_zero() {
            return Err(Error::Internal("membership multiplier is not a unit".into()));
        }
        Ok(Some(Certificate { unit, coeffs }))
    }

    /// Coefficients `h` with `v = Σ h_i g_i` (global lifter only).
    pub fn lift(&self, v: &[Poly]) -> Result<Option<Vec<Poly>>> {
        if self.track_unit {
            return Err(Error::Unsupported("exact lifting over the local ring".into()));
        }
        Ok(self.certificate(v)?.map(|c| c.coeffs))
    }
}

/// Generators of the syzygy module of `gens ⊂ R^rank` over the polynomial ring.
pub fn syzygy_vectors(nvars: usize, rank: usize, gens: &[Vec<Poly>]) -> Result<Vec<Vec<Poly>>> {
    Ok(Lifter::new(nvars, rank, gens)?.syzygies())
}

/// Kernel of `m` as the column span of the returned matrix, so `m · syz = 0`.
pub fn syzygies(m: &PolyMatrix, order: MonomialOrder) -> Result<PolyMatrix> {
    let cols = m.columns();
    let syz = Lifter::with_order(m.nvars(), m.rows(), &cols, order)?.syzygies();
    Ok(PolyMatrix::from_columns(m.cols(), m.nvars(), &syz))
}

/// Membership of `v` in the submodule, with a certificate (over the ring selected by its order).
pub fn member(v: &[Poly], m: &ModuleBasis) -> Result<Option<Certificate>> {
    Lifter::with_order(m.nvars, m.rank, &m.gens, m.order)?.certificate(v)
}

/// Whether every generator of `a` lies in `b` (for the ring selected by `b`'s order).
pub fn submodule_contains(b: &ModuleBasis, a: &ModuleBasis) -> Result<bool> {
    if b.order.is_local() {
        // N ⊂ N' with equal leading modules forces N = N' over the local ring
        let mut gens = b.gens.clone();
        gens.extend(a.gens.iter().cloned());
        let order = b.order.with_module(ModuleOrder::Top);
        let sum = ModuleBasis::new(b.nvars, b.rank, gens, order)?;
        let small = standard_basis(&b.with_order(order))?.leading_monomials();
        let big = standard_basis(&sum)?.leading_monomials();
        return Ok(big.iter().all(|(c, e)| small.iter().any(|(d, f)| c == d && f.divides(e))));
    }
    let sb = standard_basis(b)?;
    for g in a.generators() {
        if !sb.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rational common zeros of a zero-dimensional ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalZeros {
    pub points: Vec<Vec<BigRational>>,
    /// `false` if some zero has an irrational coordinate.
    pub complete: bool,
}

/// Finds the rational zeros of a zero-dimensional ideal by lex elimination.
pub fn rational_zeros(nvars: usize, gens: &[Poly]) -> Result<Option<RationalZeros>> {
    let ideal = ModuleBasis::ideal(nvars, gens.to_vec(), MonomialOrder::global());
    if !quotient_dimension(&ideal)?.is_finite() {
        return Ok(None);
    }
    let mut out = RationalZeros {
        points: Vec::new(),
        complete: true,
    };
    solve_from(nvars, gens.to_vec(), Vec::new(), &mut out)?;
    out.points.sort();
    Ok(Some(out))
}

// Solves for the last unassigned variable, then recurses with it substituted.
fn solve_from(nvars: usize, gens: Vec<Poly>, fixed: Vec<BigRational>, out: &mut RationalZeros) -> Result<()> {
    let k = nvars - fixed.len();
    if k == 0 {
        if gens.iter().all(Poly::is_zero) {
            let mut p = fixed.clone();
            p.reverse();
            out.points.push(p);
        }
        return Ok(());
    }
    let sb = standard_basis(&ModuleBasis::ideal(nvars, gens, MonomialOrder::lex()))?;
    let elems: Vec<Poly> = sb.elements().into_iter().map(|mut v| v.remove(0)).collect();
    if elems.iter().any(|p| p.is_constant() && !p.is_zero()) {
        return Ok(());
    }
    let var = k - 1;
    let uni = elems
        .iter()
        .find(|p| !p.is_zero() && p.terms().all(|(e, _)| (0..nvars).all(|i| i == var || e.get(i) == 0)))
        .ok_or_else(|| Error::Internal("no eliminant in zero-dimensional ideal".into()))?;
    let coeffs: Vec<BigRational> = (0..=uni.total_degree().unwrap_or(0))
        .map(|d| {
            let mut e = ExpVec::zero(nvars);
            e.set(var, d as u16);
            uni.coeff(&e)
        })
        .collect();
    let (roots, complete) = rational_roots(&coeffs);
    if !complete {
        out.complete = false;
    }
    for r in roots {
        let mut point = vec![None; nvars];
        point[var] = Some(r.clone());
        let images: Vec<Poly> = (0..nvars)
            .map(|i| match &point[i] {
                Some(c) => Poly::constant(nvars, c.clone()),
                None => Poly::var(nvars, i),
            })
            .collect();
        let map = crate::poly::SubstitutionMap::unchecked(nvars, images);
        let next: Vec<Poly> = elems.iter().map(|p| p.substitute(&map)).collect::<Result<_>>()?;
        let mut f = fixed.clone();
        f.push(r);
        solve_from(nvars, next, f, out)?;
    }
    Ok(())
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    trim(&mut r);
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() {
        let c = r.last().unwrap() / &lb;
        let shift = r.len() - b.len();
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &c * bc;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn poly_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn poly_div_exact(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut q = vec![BigRational::zero(); r.len() + 1 - b.len()];
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() {
        let c = r.last().unwrap() / &lb;
        let shift = r.len() - b.len();
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &c * bc;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    q
}

fn eval_uni(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let other = &n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out
}

/// Distinct rational roots of a univariate polynomial (coefficients in increasing degree),
/// and whether they exhaust its complex roots.
pub fn rational_roots(coeffs: &[BigRational]) -> (Vec<BigRational>, bool) {
    let mut p = coeffs.to_vec();
    trim(&mut p);
    if p.len() <= 1 {
        return (Vec::new(), true);
    }
    let dp: Vec<BigRational> = p.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(BigInt::from(i))).collect();
    let g = poly_gcd(&p, &dp);
    let mut sq = poly_div_exact(&p, &g);
    let mut roots = Vec::new();
    if sq[0].is_zero() {
        roots.push(BigRational::zero());
        sq.remove(0);
    }
    let lcm = sq.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = sq.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    if ints.len() > 1 {
        for p in divisors(&ints[0]) {
            for q in divisors(ints.last().unwrap()) {
                for sign in [1, -1] {
                    let r = BigRational::new(&p * sign, q.clone());
                    if eval_uni(&sq, &r).is_zero() && !roots.contains(&r) {
                        roots.push(r);
                    }
                }
            }
        }
    }
    let degree = poly_div_exact(&p, &g).len() - 1;
    let complete = roots.len() == degree;
    roots.sort();
    (roots, complete)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};

    fn x(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    fn ideal_dim(nvars: usize, gens: Vec<Poly>, order: MonomialOrder) -> Dim {
        quotient_dimension(&ModuleBasis::ideal(nvars, gens, order)).unwrap()
    }

    #[test]
    fn order_comparisons() {
        let e = |v: &[u16]| ExpVec::from_slice(v);
        let g = MonomialOrder::global();
        assert_eq!(g.cmp_exp(&e(&[1, 0]), &e(&[0, 1])), Ordering::Greater);
        assert_eq!(g.cmp_exp(&e(&[0, 2]), &e(&[1, 0])), Ordering::Greater);
        assert_eq!(g.cmp_exp(&e(&[1, 1, 0]), &e(&[2, 0, 0])), Ordering::Less);
        let l = MonomialOrder::local();
        assert_eq!(l.cmp_exp(&e(&[0, 0]), &e(&[1, 0])), Ordering::Greater);
        assert_eq!(l.cmp_exp(&e(&[1, 0]), &e(&[0, 1])), Ordering::Greater);
        assert_eq!(l.cmp_exp(&e(&[2, 0]), &e(&[0, 1])), Ordering::Less);
        assert_eq!(g.cmp_mon(0, &e(&[0]), 1, &e(&[5])), Ordering::Greater);
        let top = g.with_module(ModuleOrder::Top);
        assert_eq!(top.cmp_mon(0, &e(&[0]), 1, &e(&[5])), Ordering::Less);
    }

    #[test]
    fn milnor_algebra_dimensions() {
        // gradient of x^3 + y^2
        let (a, b) = (x(2, 0), x(2, 1));
        let g = vec![a.pow(2).scale(&rat(3)), b.scale(&rat(2))];
        assert_eq!(ideal_dim(2, g, MonomialOrder::local()), Dim::Finite(2));
        // x^2 - x^3 has a unit factor locally: dim 2 locally, 3 globally
        let g = vec![&a.pow(2) - &a.pow(3), b.clone()];
        assert_eq!(ideal_dim(2, g.clone(), MonomialOrder::local()), Dim::Finite(2));
        assert_eq!(ideal_dim(2, g, MonomialOrder::global()), Dim::Finite(3));
        // non-isolated
        assert_eq!(ideal_dim(2, vec![a.clone()], MonomialOrder::local()), Dim::Infinite);
        assert_eq!(ideal_dim(2, vec![Poly::one(2)], MonomialOrder::local()), Dim::Finite(0));
        // a unit locally but not globally
        let u = &Poly::one(2) + &a;
        assert_eq!(ideal_dim(2, vec![u.clone()], MonomialOrder::local()), Dim::Finite(0));
        assert_eq!(ideal_dim(2, vec![u], MonomialOrder::global()), Dim::Infinite);
    }

    #[test]
    fn e6_and_d4_milnor_numbers() {
        let (a, b) = (x(2, 0), x(2, 1));
        // E6: x^3 + y^4 -> mu = 6
        let f = &a.pow(3) + &b.pow(4);
        assert_eq!(ideal_dim(2, f.gradient(), MonomialOrder::local()), Dim::Finite(6));
        // D4: x^2 y - y^3 -> mu = 4
        let f = &(&a.pow(2) * &b) - &b.pow(3);
        assert_eq!(ideal_dim(2, f.gradient(), MonomialOrder::local()), Dim::Finite(4));
    }

    #[test]
    fn module_quotient() {
        // R^2 / <(x, y), (y, x)> at the origin has dimension 3 (cokernel of [[x,y],[y,x]]: det x^2-y^2)
        let (a, b) = (x(2, 0), x(2, 1));
        let m = ModuleBasis::new(2, 2, vec![vec![a.clone(), b.clone()], vec![b.clone(), a.clone()]], MonomialOrder::local())
            .unwrap();
        assert_eq!(quotient_dimension(&m).unwrap(), Dim::Infinite);
        let m = ModuleBasis::new(
            2,
            2,
            vec![vec![a.clone(), b.clone()], vec![b.clone(), a.clone()], vec![a.pow(2), Poly::zero(2)]],
            MonomialOrder::local(),
        )
        .unwrap();
        let d = quotient_dimension(&m).unwrap();
        assert_eq!(d, quotient_dimension(&m.with_order(MonomialOrder::global())).unwrap());
        assert!(d.is_finite());
    }

    #[test]
    fn syzygies_of_monomials() {
        let (a, b) = (x(2, 0), x(2, 1));
        let gens = vec![vec![a.clone()], vec![b.clone()]];
        let syz = syzygy_vectors(2, 1, &gens).unwrap();
        assert_eq!(syz.len(), 1);
        let s = &syz[0];
        assert!((&(&s[0] * &a) + &(&s[1] * &b)).is_zero());
        assert!(!s[0].is_zero());
    }

    #[test]
    fn syzygies_twisted_cubic() {
        let n = 4;
        let v = |i| x(n, i);
        let gens: Vec<Vec<Poly>> = vec![
            vec![&(&v(0) * &v(2)) - &v(1).pow(2)],
            vec![&(&v(0) * &v(3)) - &(&v(1) * &v(2))],
            vec![&(&v(1) * &v(3)) - &v(2).pow(2)],
        ];
        let syz = syzygy_vectors(n, 1, &gens).unwrap();
        for s in &syz {
            let sum = (0..3).fold(Poly::zero(n), |acc, i| &acc + &(&s[i] * &gens[i][0]));
            assert!(sum.is_zero());
        }
        // the two linear syzygies are found
        assert!(syz.iter().filter(|s| s.iter().all(|p| p.total_degree().unwrap_or(0) <= 1)).count() >= 2);
    }

    #[test]
    fn lifting_and_certificates() {
        let (a, b) = (x(2, 0), x(2, 1));
        let gens = vec![vec![a.pow(2)], vec![&(&a * &b) - &b.pow(3)]];
        let lifter = Lifter::new(2, 1, &gens).unwrap();
        let target = vec![&(&a.pow(3) * &b) + &(&a.pow(3) * &b.pow(2))];
        let h = lifter.lift(&target).unwrap().unwrap();
        let back = &(&h[0] * &gens[0][0]) + &(&h[1] * &gens[1][0]);
        assert_eq!(back, target[0]);
        assert!(lifter.lift(&[b.clone()]).unwrap().is_none());

        // local: x lies in <x + x^2> only after inverting 1 + x
        let m = ModuleBasis::ideal(2, vec![&a + &a.pow(2)], MonomialOrder::local());
        let cert = member(&[a.clone()], &m).unwrap().unwrap();
        assert!(cert.verify(m.generators(), &[a.clone()]));
        assert!(!cert.unit.is_constant());
        assert!(member(&[b.clone()], &m).unwrap().is_none());
        let g = m.with_order(MonomialOrder::global());
        assert!(member(&[a.clone()], &g).unwrap().is_none());
    }

    #[test]
    fn basis_examples() {
        let a = x(1, 0);
        let one = Poly::one(1);
        let gb = groebner_basis(&ModuleBasis::ideal(1, vec![&a.pow(2) - &one, &a.pow(3) - &one], MonomialOrder::global()))
            .unwrap();
        assert_eq!(gb.generators(), &[vec![&a - &one]]);
        assert!(gb.is_reduced());

        let (u, v) = (x(2, 0), x(2, 1));
        let gb = groebner_basis(&ModuleBasis::ideal(2, vec![u.clone(), v.clone()], MonomialOrder::global())).unwrap();
        assert_eq!(gb.generators(), &[vec![u.clone()], vec![v.clone()]]);

        let sb = standard_basis(&ModuleBasis::ideal(1, vec![&a + &a.pow(2)], MonomialOrder::local())).unwrap();
        assert_eq!(sb.leading_monomials(), vec![(0, ExpVec::from_slice(&[1]))]);
    }

    #[test]
    fn quotient_dimension_examples() {
        let (u, v) = (x(2, 0), x(2, 1));
        for order in [MonomialOrder::global(), MonomialOrder::local()] {
            assert_eq!(ideal_dim(2, vec![u.clone(), v.clone()], order), Dim::Finite(1));
            assert_eq!(ideal_dim(2, vec![u.pow(2), &u * &v, v.pow(3)], order), Dim::Finite(4));
            assert_eq!(ideal_dim(2, vec![u.clone()], order), Dim::Infinite);
        }
    }

    #[test]
    fn syzygy_examples() {
        let (u, v) = (x(2, 0), x(2, 1));
        let m = PolyMatrix::from_rows(2, vec![vec![u.clone(), v.clone()]]).unwrap();
        let k = syzygies(&m, MonomialOrder::global()).unwrap();
        assert_eq!(k.cols(), 1);
        assert!(m.mul(&k).is_zero());
        let col = k.column(0);
        assert!(col == vec![v.clone(), -&u] || col == vec![-&v, u.clone()]);

        let m = PolyMatrix::from_rows(2, vec![vec![v.clone(), u.clone()]]).unwrap();
        let k = syzygies(&m, MonomialOrder::local()).unwrap();
        assert_eq!(k.cols(), 1);
        assert!(m.mul(&k).is_zero());

        let k = syzygies(&PolyMatrix::identity(2, 2), MonomialOrder::global()).unwrap();
        assert_eq!((k.rows(), k.cols()), (2, 0));
    }

    #[test]
    fn member_examples() {
        let (u, v) = (x(2, 0), x(2, 1));
        let ideal = ModuleBasis::ideal(2, vec![u.clone()], MonomialOrder::global());
        let cert = member(&[u.pow(2)], &ideal).unwrap().unwrap();
        assert_eq!(cert.coeffs, vec![u.clone()]);
        let max = ModuleBasis::ideal(2, vec![u.clone(), v.clone()], MonomialOrder::local());
        assert!(member(&[Poly::one(2)], &max).unwrap().is_none());
        let module = ModuleBasis::new(2, 2, vec![vec![v.clone(), -&u]], MonomialOrder::global()).unwrap();
        let target = vec![v.pow(2), -&(&u * &v)];
        let cert = member(&target, &module).unwrap().unwrap();
        assert_eq!(cert.coeffs, vec![v.clone()]);
        assert!(cert.verify(module.generators(), &target));
    }

    #[test]
    fn step_guard_triggers() {
        let n = 4;
        let v = |i| x(n, i);
        let gens = vec![
            &(&v(0).pow(3) * &v(1)) - &v(2).pow(4),
            &(&v(1).pow(3) * &v(2)) - &v(3).pow(4),
            &(&v(0) * &v(3).pow(3)) - &v(1).pow(4),
        ];
        let m = ModuleBasis::ideal(n, gens, MonomialOrder::global());
        let r = with_step_limit(Some(5), || standard_basis(&m).map(|_| ()));
        assert_eq!(r.unwrap_err(), Error::ResourceExhausted { limit: 5 });
        assert_eq!(step_limit(), None);
    }

    #[test]
    fn rational_roots_examples() {
        let c = |v: &[i64]| v.iter().map(|&k| rat(k)).collect::<Vec<_>>();
        // (x-1)(x+2)(2x-1)
        let p = c(&[2, -5, 1, 2]);
        let (r, complete) = rational_roots(&p);
        assert_eq!(r, vec![rat(-2), ratio(1, 2), rat(1)]);
        assert!(complete);
        let (r, complete) = rational_roots(&c(&[-2, 0, 1]));
        assert!(r.is_empty());
        assert!(!complete);
        let (r, complete) = rational_roots(&c(&[0, 0, 1, -1]));
        assert_eq!(r, vec![rat(0), rat(1)]);
        assert!(complete);
    }

    #[test]
    fn zeros_of_perturbed_ideal() {
        let (a, b) = (x(2, 0), x(2, 1));
        let gens = vec![&a.pow(2) - &Poly::one(2), &b - &a];
        let z = rational_zeros(2, &gens).unwrap().unwrap();
        assert!(z.complete);
        assert_eq!(z.points, vec![vec![rat(-1), rat(-1)], vec![rat(1), rat(1)]]);
        assert!(rational_zeros(2, &[a.clone()]).unwrap().is_none());
    }
}
