//! Numeric invariants of function germs, sections `f ∘ F` and matrix families, and
//! checkers for the identities relating them.

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize, Serializer};

use crate::complexes::{gradient_presentation, homology_dimension, koszul, pullback, resolution, FreeComplex};
use crate::dim::Dim;
use crate::error::{Error, Result};
use crate::groebner::{
    quotient_dimension, rational_zeros, standard_basis, submodule_contains, Lifter, ModuleBasis, MonomialOrder,
};
use crate::matalg::{minors_ideal, MatrixFamily, MatrixKind, MatrixSpace, PolyMatrix};
use crate::poly::{ExpVec, Poly, SubstitutionMap};

fn local_ideal_dim(nvars: usize, gens: Vec<Poly>) -> Result<Dim> {
    quotient_dimension(&ModuleBasis::ideal(nvars, gens, MonomialOrder::local()))
}

fn at_origin(g: &Poly) -> Result<()> {
    if g.constant_term().is_zero() {
        Ok(())
    } else {
        Err(Error::NotAtOrigin)
    }
}

/// `dim O/J_g` at the origin.
pub fn milnor_number(g: &Poly) -> Result<Dim> {
    at_origin(g)?;
    local_ideal_dim(g.nvars(), g.gradient())
}

/// `dim O/((g) + J_g)` at the origin.
pub fn tjurina_number_function(g: &Poly) -> Result<Dim> {
    at_origin(g)?;
    let mut gens = g.gradient();
    gens.push(g.clone());
    local_ideal_dim(g.nvars(), gens)
}

/// Vector fields annihilating `f`: syzygies of its partial derivatives.
pub fn der_log_f(f: &Poly) -> Result<ModuleBasis> {
    let n = f.nvars();
    let gens: Vec<Vec<Poly>> = f.gradient().into_iter().map(|p| vec![p]).collect();
    let syz = Lifter::new(n, 1, &gens)?.syzygies();
    ModuleBasis::new(n, n, syz, MonomialOrder::local())
}

/// Vector fields tangent to `f = 0`: the `ζ` with `ζ(f) + b f = 0` for some `b`.
pub fn der_log_v(f: &Poly) -> Result<ModuleBasis> {
    let n = f.nvars();
    let mut gens: Vec<Vec<Poly>> = f.gradient().into_iter().map(|p| vec![p]).collect();
    gens.push(vec![f.clone()]);
    let syz = Lifter::new(n, 1, &gens)?.syzygies();
    let fields = syz.into_iter().map(|mut s| {
        s.truncate(n);
        s
    });
    let fields: Vec<Vec<Poly>> = fields.filter(|s| s.iter().any(|p| !p.is_zero())).collect();
    ModuleBasis::new(n, n, fields, MonomialOrder::local())
}

fn jacobian_columns(map: &SubstitutionMap) -> Vec<Vec<Poly>> {
    let jac = map.jacobian();
    (0..map.nvars())
        .map(|j| jac.iter().map(|row| row[j].clone()).collect())
        .collect()
}

fn pulled_back(fields: &ModuleBasis, map: &SubstitutionMap) -> Result<Vec<Vec<Poly>>> {
    fields
        .generators()
        .iter()
        .map(|v| v.iter().map(|p| p.substitute(map)).collect())
        .collect()
}

fn check_section(f: &Poly, map: &SubstitutionMap) -> Result<()> {
    if map.arity() != f.nvars() {
        return Err(Error::ArityMismatch {
            expected: f.nvars(),
            got: map.arity(),
        });
    }
    Ok(())
}

/// `tF(θ_m) + F*(Der(-log f))` inside `O_m^n`.
pub fn tangent_space_kf(f: &Poly, map: &SubstitutionMap) -> Result<ModuleBasis> {
    check_section(f, map)?;
    let mut gens = jacobian_columns(map);
    gens.extend(pulled_back(&der_log_f(f)?, map)?);
    ModuleBasis::new(map.nvars(), map.arity(), gens, MonomialOrder::local())
}

/// `tF(θ_m) + F*(Der(-log V))` inside `O_m^n`.
pub fn tangent_space_kv(f: &Poly, map: &SubstitutionMap) -> Result<ModuleBasis> {
    check_section(f, map)?;
    let mut gens = jacobian_columns(map);
    gens.extend(pulled_back(&der_log_v(f)?, map)?);
    ModuleBasis::new(map.nvars(), map.arity(), gens, MonomialOrder::local())
}

/// `dim T¹` for deformations of `F` preserving the function `f`.
pub fn t1_kf(f: &Poly, map: &SubstitutionMap) -> Result<Dim> {
    quotient_dimension(&tangent_space_kf(f, map)?)
}

/// `dim T¹` for deformations of `F` preserving the zero set of `f`.
pub fn t1_kv(f: &Poly, map: &SubstitutionMap) -> Result<Dim> {
    quotient_dimension(&tangent_space_kv(f, map)?)
}

/// Special (`sl_n`) or general (`gl_n`) group acting on a matrix family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavour {
    Special,
    General,
}

fn group_basis(flavour: Flavour, n: usize, nvars: usize) -> Vec<PolyMatrix> {
    match flavour {
        Flavour::Special => MatrixSpace::Sl.basis(n, nvars),
        Flavour::General => MatrixSpace::Mat.basis(n, nvars),
    }
}

/// Extended tangent space to the orbit of a family: its partial derivatives plus the
/// infinitesimal group action (`AᵗS + SA`, or `AM + MB` for general matrices).
pub fn tangent_space_matrix(fam: &MatrixFamily, flavour: Flavour) -> Result<ModuleBasis> {
    let (n, m) = (fam.n(), fam.m());
    let space = fam.kind().space();
    let s = fam.matrix();
    let mut gens = (0..m)
        .map(|i| Ok(space.flatten(&fam.derivative(i)?)))
        .collect::<Result<Vec<_>>>()?;
    for a in group_basis(flavour, n, m) {
        match fam.kind() {
            MatrixKind::Symmetric | MatrixKind::Skew => {
                gens.push(space.flatten(&a.transpose().mul(s).add(&s.mul(&a))));
            }
            MatrixKind::General => {
                gens.push(space.flatten(&a.mul(s)));
                gens.push(space.flatten(&s.mul(&a)));
            }
        }
    }
    ModuleBasis::new(m, space.dim(n), gens, MonomialOrder::local())
}

/// Codimension of [`tangent_space_matrix`].
pub fn tau_matrix(fam: &MatrixFamily, flavour: Flavour) -> Result<Dim> {
    quotient_dimension(&tangent_space_matrix(fam, flavour)?)
}

/// `tS(θ) + S*(Der(-log f))` with the logarithmic fields read off the resolution of the family.
pub fn family_tangent_space_kf(fam: &MatrixFamily) -> Result<ModuleBasis> {
    let space = fam.kind().space();
    let mut gens = (0..fam.m())
        .map(|i| Ok(space.flatten(&fam.derivative(i)?)))
        .collect::<Result<Vec<_>>>()?;
    gens.extend(resolution(fam)?.differential(2).columns());
    ModuleBasis::new(fam.m(), space.dim(fam.n()), gens, MonomialOrder::local())
}

/// [`family_tangent_space_kf`] plus the pulled-back Euler field (the family itself).
pub fn family_tangent_space_kv(fam: &MatrixFamily) -> Result<ModuleBasis> {
    let base = family_tangent_space_kf(fam)?;
    let mut gens = base.generators().to_vec();
    gens.push(fam.kind().space().flatten(fam.matrix()));
    ModuleBasis::new(base.nvars(), base.rank(), gens, MonomialOrder::local())
}

/// Krull dimension of `O/I` at the origin, from the leading monomials of a standard basis.
pub fn local_krull_dimension(nvars: usize, gens: &[Poly]) -> Result<usize> {
    let sb = standard_basis(&ModuleBasis::ideal(nvars, gens.to_vec(), MonomialOrder::local()))?;
    let leads: Vec<ExpVec> = sb.leading_monomials().into_iter().map(|(_, e)| e).collect();
    if leads.iter().any(|e| e.is_one()) {
        return Ok(0);
    }
    // largest set of variables containing the support of no leading monomial
    let mut best = 0;
    for mask in 0u64..(1u64 << nvars) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let free = leads
            .iter()
            .all(|e| (0..nvars).any(|i| e.get(i) > 0 && mask & (1 << i) == 0));
        if free {
            best = size;
        }
    }
    Ok(best)
}

/// A germ to analyse: a matrix family, or a section `f ∘ F` of a function germ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Germ {
    Family(MatrixFamily),
    Section { f: Poly, map: SubstitutionMap },
}

impl Germ {
    pub fn section(f: Poly, map: SubstitutionMap) -> Result<Self> {
        check_section(&f, &map)?;
        Ok(Germ::Section { f, map })
    }

    /// Number of parameters.
    pub fn m(&self) -> usize {
        match self {
            Germ::Family(fam) => fam.m(),
            Germ::Section { map, .. } => map.nvars(),
        }
    }

    /// Dimension of the target space of `F`.
    pub fn target_dim(&self) -> usize {
        match self {
            Germ::Family(fam) => fam.space_dim(),
            Germ::Section { f, .. } => f.nvars(),
        }
    }

    pub fn map(&self) -> SubstitutionMap {
        match self {
            Germ::Family(fam) => fam.as_map(),
            Germ::Section { map, .. } => map.clone(),
        }
    }

    /// The function on the target whose pullback is studied.
    pub fn ambient_function(&self) -> Result<Poly> {
        match self {
            Germ::Family(fam) => fam.generic_function(),
            Germ::Section { f, .. } => Ok(f.clone()),
        }
    }

    /// `f ∘ F`.
    pub fn composite(&self) -> Result<Poly> {
        match self {
            Germ::Family(fam) => fam.function(),
            Germ::Section { f, map } => f.substitute(map),
        }
    }
}

/// Identities that can be checked on a germ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IdentityId {
    Betas,
    Imax,
    Submax,
    Gorenstein,
    Eqeq,
    Ck,
    Gorp,
    Diag,
}

impl IdentityId {
    pub const ALL: [IdentityId; 8] = [
        IdentityId::Betas,
        IdentityId::Imax,
        IdentityId::Submax,
        IdentityId::Gorenstein,
        IdentityId::Eqeq,
        IdentityId::Ck,
        IdentityId::Gorp,
        IdentityId::Diag,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Betas => "betas",
            IdentityId::Imax => "imax",
            IdentityId::Submax => "submax",
            IdentityId::Gorenstein => "gorenstein",
            IdentityId::Eqeq => "eqeq",
            IdentityId::Ck => "ck",
            IdentityId::Gorp => "gorp",
            IdentityId::Diag => "diag",
        }
    }

    /// One-line statement of the identity.
    pub fn statement(self) -> &'static str {
        match self {
            IdentityId::Betas => "tau_Kf = mu - beta0 + beta1 when f∘F is isolated",
            IdentityId::Imax => "tau = mu - dim O/F*(J_f) when m = m0",
            IdentityId::Submax => "tau = mu (and beta0 = beta1, higher betas 0) when m = m0 - 1",
            IdentityId::Gorenstein => "tau = mu + dim O/F*(J_f) when m = m0 - 2 and O/J_f is Gorenstein",
            IdentityId::Eqeq => "matrix tangent spaces equal the K_f and K_V tangent spaces",
            IdentityId::Ck => "tau = mu - beta0, mu, mu + beta0 for m = n, n - 1, n - 2 (isolated f)",
            IdentityId::Gorp => "beta_k = beta_(m0-m-k) for Gorenstein resolutions",
            IdentityId::Diag => "closed forms for diagonal symmetric one-parameter families",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = IdentityId::ALL.iter().map(|i| i.name()).collect();
                format!("unknown identity `{s}` (known: {})", known.join(", "))
            })
    }
}

/// Signed integer, infinite, or not computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    Int(i64),
    Infinite,
    Unknown,
}

impl Quantity {
    fn of(d: Dim) -> Self {
        match d {
            Dim::Finite(v) => Quantity::Int(v as i64),
            Dim::Infinite => Quantity::Infinite,
        }
    }

    /// `Σ sign_i · d_i`; infinite if any term is.
    fn combine(terms: &[(i64, Dim)]) -> Self {
        let mut acc = 0i64;
        for (sign, d) in terms {
            match d {
                Dim::Finite(v) => acc += sign * *v as i64,
                Dim::Infinite => return Quantity::Infinite,
            }
        }
        Quantity::Int(acc)
    }
}

impl From<Dim> for Quantity {
    fn from(d: Dim) -> Self {
        Quantity::of(d)
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Int(v) => write!(f, "{v}"),
            Quantity::Infinite => f.write_str("inf"),
            Quantity::Unknown => f.write_str("?"),
        }
    }
}

impl Serialize for Quantity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Quantity::Int(v) => s.serialize_i64(*v),
            Quantity::Infinite => s.serialize_str("infinite"),
            Quantity::Unknown => s.serialize_none(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "HOLDS")]
    Holds,
    #[serde(rename = "FAILS")]
    Fails,
    #[serde(rename = "NOT-APPLICABLE")]
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "HOLDS",
            Verdict::Fails => "FAILS",
            Verdict::NotApplicable => "NOT-APPLICABLE",
        })
    }
}

/// Outcome of one identity check. For applicable checks the verdict is `HOLDS` iff `lhs == rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub lhs: Quantity,
    pub rhs: Quantity,
    pub verdict: Verdict,
    pub note: String,
}

impl Check {
    pub fn compare(name: impl Into<String>, lhs: Quantity, rhs: Quantity, note: impl Into<String>) -> Self {
        let verdict = if lhs == rhs && lhs != Quantity::Unknown {
            Verdict::Holds
        } else {
            Verdict::Fails
        };
        Check {
            name: name.into(),
            lhs,
            rhs,
            verdict,
            note: note.into(),
        }
    }

    pub fn not_applicable(name: impl Into<String>, lhs: Quantity, rhs: Quantity, reason: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            lhs,
            rhs,
            verdict: Verdict::NotApplicable,
            note: reason.into(),
        }
    }

    /// Whether the verdict is consistent with the stored sides.
    pub fn is_consistent(&self) -> bool {
        match self.verdict {
            Verdict::NotApplicable => true,
            Verdict::Holds => self.lhs == self.rhs,
            Verdict::Fails => self.lhs != self.rhs || self.lhs == Quantity::Unknown,
        }
    }
}

fn indicator(b: bool) -> Quantity {
    Quantity::Int(i64::from(b))
}

/// Everything reported by `analyze`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    /// Number of parameters.
    pub m: usize,
    /// Dimension of the target of `F` (matrix-space dimension for families).
    pub n: usize,
    pub mu: Dim,
    /// Tjurina number of the function `f ∘ F`.
    pub tau: Dim,
    pub tau_function_right: Dim,
    pub tau_function_contact: Dim,
    pub tau_matrix_special: Option<Dim>,
    pub tau_matrix_general: Option<Dim>,
    pub betti: Vec<Dim>,
    /// `dim O/F*(J_f)`.
    pub dim_pullback_jacobian: Dim,
    /// `dim O/I_{n-1}` (or the sub-Pfaffian ideal) for families.
    pub codim_minors: Option<Dim>,
    pub m0: usize,
    pub cohen_macaulay: Option<bool>,
    pub checks: Vec<Check>,
    pub hypothesis_violations: Vec<String>,
}

impl InvariantReport {
    /// Looks up a reported number by name (`mu`, `tau`, `tau_kf`, `tau_kv`, `tau_ss`,
    /// `tau_sg`, `tau_gs`, `tau_gg`, `beta<k>`, `codim_minors`, `m0`).
    pub fn value(&self, key: &str) -> Option<Dim> {
        match key {
            "mu" => Some(self.mu),
            "tau" => Some(self.tau),
            "tau_kf" | "tau_function_right" => Some(self.tau_function_right),
            "tau_kv" | "tau_function_contact" => Some(self.tau_function_contact),
            "tau_ss" | "tau_sg" | "tau_matrix_special" => self.tau_matrix_special,
            "tau_gs" | "tau_gg" | "tau_matrix_general" => self.tau_matrix_general,
            "codim_minors" => self.codim_minors,
            "dim_pullback_jacobian" => Some(self.dim_pullback_jacobian),
            "m0" => Some(Dim::Finite(self.m0 as u64)),
            _ => {
                let k: usize = key.strip_prefix("beta")?.parse().ok()?;
                self.betti.get(k).copied()
            }
        }
    }
}

fn cached<T: Clone>(cell: &OnceCell<T>, f: impl FnOnce() -> Result<T>) -> Result<T> {
    if let Some(v) = cell.get() {
        return Ok(v.clone());
    }
    let v = f()?;
    let _ = cell.set(v.clone());
    Ok(v)
}

/// Lazily computed invariants of one germ; each quantity is computed at most once.
pub struct Analysis {
    germ: Germ,
    composite: OnceCell<Poly>,
    mu: OnceCell<Dim>,
    tau: OnceCell<Dim>,
    tau_kf: OnceCell<Dim>,
    tau_kv: OnceCell<Dim>,
    tau_special: OnceCell<Dim>,
    tau_general: OnceCell<Dim>,
    betti: OnceCell<Vec<Dim>>,
    beta0: OnceCell<Dim>,
    beta1: OnceCell<Dim>,
    ambient_mu: OnceCell<Dim>,
    m0: OnceCell<usize>,
    cm: OnceCell<Option<bool>>,
}

impl Analysis {
    pub fn new(germ: Germ) -> Self {
        Analysis {
            germ,
            composite: OnceCell::new(),
            mu: OnceCell::new(),
            tau: OnceCell::new(),
            tau_kf: OnceCell::new(),
            tau_kv: OnceCell::new(),
            tau_special: OnceCell::new(),
            tau_general: OnceCell::new(),
            betti: OnceCell::new(),
            beta0: OnceCell::new(),
            beta1: OnceCell::new(),
            ambient_mu: OnceCell::new(),
            m0: OnceCell::new(),
            cm: OnceCell::new(),
        }
    }

    pub fn germ(&self) -> &Germ {
        &self.germ
    }

    fn family(&self) -> Option<&MatrixFamily> {
        match &self.germ {
            Germ::Family(fam) => Some(fam),
            Germ::Section { .. } => None,
        }
    }

    pub fn composite(&self) -> Result<Poly> {
        cached(&self.composite, || self.germ.composite())
    }

    /// `dim O/J_{f∘F}` (no base-point condition: a nonsingular germ gives 0).
    pub fn mu(&self) -> Result<Dim> {
        cached(&self.mu, || {
            let g = self.composite()?;
            local_ideal_dim(g.nvars(), g.gradient())
        })
    }

    pub fn tau(&self) -> Result<Dim> {
        cached(&self.tau, || {
            let g = self.composite()?;
            let mut gens = g.gradient();
            gens.push(g.clone());
            local_ideal_dim(g.nvars(), gens)
        })
    }

    pub fn tau_kf(&self) -> Result<Dim> {
        cached(&self.tau_kf, || match &self.germ {
            Germ::Family(fam) => quotient_dimension(&family_tangent_space_kf(fam)?),
            Germ::Section { f, map } => t1_kf(f, map),
        })
    }

    pub fn tau_kv(&self) -> Result<Dim> {
        cached(&self.tau_kv, || match &self.germ {
            Germ::Family(fam) => quotient_dimension(&family_tangent_space_kv(fam)?),
            Germ::Section { f, map } => t1_kv(f, map),
        })
    }

    pub fn tau_special(&self) -> Result<Option<Dim>> {
        match self.family() {
            Some(fam) => cached(&self.tau_special, || tau_matrix(fam, Flavour::Special)).map(Some),
            None => Ok(None),
        }
    }

    pub fn tau_general(&self) -> Result<Option<Dim>> {
        match self.family() {
            Some(fam) => cached(&self.tau_general, || tau_matrix(fam, Flavour::General)).map(Some),
            None => Ok(None),
        }
    }

    /// The Tjurina number the identities are about: the special matrix one for
    /// families, `τ_Kf` for sections.
    pub fn tau_identity(&self) -> Result<Dim> {
        match self.tau_special()? {
            Some(t) => Ok(t),
            None => self.tau_kf(),
        }
    }

    /// Milnor number of the ambient function `f` at the origin.
    pub fn ambient_mu(&self) -> Result<Dim> {
        cached(&self.ambient_mu, || match &self.germ {
            Germ::Family(fam) => Ok(match (fam.kind(), fam.n()) {
                (MatrixKind::Symmetric, 2) | (MatrixKind::General, 2) | (MatrixKind::Skew, 4) => Dim::Finite(1),
                (MatrixKind::General, 1) | (MatrixKind::Symmetric, 1) => Dim::Finite(0),
                _ => Dim::Infinite,
            }),
            Germ::Section { f, .. } => local_ideal_dim(f.nvars(), f.gradient()),
        })
    }

    /// Codimension of the jacobian ideal of the ambient function.
    pub fn m0(&self) -> Result<usize> {
        cached(&self.m0, || match &self.germ {
            Germ::Family(fam) => Ok(match (fam.kind(), fam.n()) {
                (MatrixKind::General, 1) | (MatrixKind::Symmetric, 1) => 1,
                (MatrixKind::Skew, 2) => 1,
                (kind, _) => kind.resolution_length(),
            }),
            Germ::Section { f, .. } => Ok(f.nvars() - local_krull_dimension(f.nvars(), &f.gradient())?),
        })
    }

    /// Whether `O/J_f` is Cohen–Macaulay (`None` if undetermined).
    pub fn cohen_macaulay(&self) -> Result<Option<bool>> {
        cached(&self.cm, || match &self.germ {
            Germ::Family(_) => Ok(Some(true)),
            Germ::Section { f, .. } => {
                if self.ambient_mu()?.is_finite() {
                    return Ok(Some(true));
                }
                jacobian_cohen_macaulay(f, self.m0()?)
            }
        })
    }

    /// Whether `O/J_f` is Gorenstein.
    pub fn gorenstein(&self) -> Result<bool> {
        Ok(match &self.germ {
            Germ::Family(fam) => match fam.kind() {
                MatrixKind::General | MatrixKind::Skew => true,
                MatrixKind::Symmetric => fam.n() <= 2,
            },
            Germ::Section { .. } => self.ambient_mu()?.is_finite(),
        })
    }

    /// Pull-back of a resolution of `O/J_f`: the matrix-kind resolution for families, the
    /// Koszul complex for isolated `f`, otherwise only the presentation `O^k -> O^n -> O`.
    pub fn pulled_back_resolution(&self) -> Result<FreeComplex> {
        match &self.germ {
            Germ::Family(fam) => resolution(fam),
            Germ::Section { f, map } => {
                if self.ambient_mu()?.is_finite() {
                    pullback(&koszul(f), map)
                } else {
                    gradient_presentation(f, map)
                }
            }
        }
    }

    /// `dim O/F*(J_f)`.
    pub fn beta0(&self) -> Result<Dim> {
        cached(&self.beta0, || {
            if let Some(b) = self.betti.get() {
                return Ok(b[0]);
            }
            match &self.germ {
                Germ::Family(fam) => {
                    let size = if fam.kind() == MatrixKind::Skew { fam.n() - 2 } else { fam.n() - 1 };
                    quotient_dimension(&minors_ideal(fam, size)?)
                }
                Germ::Section { f, map } => {
                    let gens = f.gradient().iter().map(|p| p.substitute(map)).collect::<Result<Vec<_>>>()?;
                    local_ideal_dim(map.nvars(), gens)
                }
            }
        })
    }

    pub fn beta1(&self) -> Result<Dim> {
        cached(&self.beta1, || {
            if let Some(b) = self.betti.get() {
                return Ok(b.get(1).copied().unwrap_or(Dim::Finite(0)));
            }
            let c = self.pulled_back_resolution()?;
            homology_dimension(&c, 1)
        })
    }

    /// `β_k`: homology of the pulled-back resolution of `O/J_f`. For a non-isolated
    /// ambient `f` only `β_0, β_1` are available.
    pub fn betti(&self) -> Result<Vec<Dim>> {
        cached(&self.betti, || {
            let c = self.pulled_back_resolution()?;
            let top = match &self.germ {
                Germ::Section { .. } if !self.ambient_mu()?.is_finite() => 1,
                _ => c.length(),
            };
            let mut out = Vec::with_capacity(top + 1);
            for k in 0..=top {
                out.push(match k {
                    0 if self.beta0.get().is_some() => self.beta0()?,
                    1 if self.beta1.get().is_some() => self.beta1()?,
                    _ => homology_dimension(&c, k)?,
                });
            }
            Ok(out)
        })
    }

    /// `β_k` when the resolution represents degree `k`.
    fn beta(&self, k: usize) -> Result<Option<Dim>> {
        Ok(match k {
            0 => Some(self.beta0()?),
            1 => Some(self.beta1()?),
            _ => self.betti()?.get(k).copied(),
        })
    }

    pub fn hypothesis_violations(&self) -> Result<Vec<String>> {
        let mut out = Vec::new();
        if !self.mu()?.is_finite() {
            out.push("f∘F does not have an isolated singularity".to_string());
        }
        match self.cohen_macaulay()? {
            Some(false) => out.push("the jacobian algebra O/J_f is not Cohen-Macaulay".to_string()),
            None => out.push("could not decide whether O/J_f is Cohen-Macaulay".to_string()),
            Some(true) => {}
        }
        Ok(out)
    }

    pub fn report(&self) -> Result<InvariantReport> {
        let mut checks = Vec::new();
        for id in IdentityId::ALL {
            checks.extend(self.verify(id)?);
        }
        Ok(InvariantReport {
            m: self.germ.m(),
            n: self.germ.target_dim(),
            mu: self.mu()?,
            tau: self.tau()?,
            tau_function_right: self.tau_kf()?,
            tau_function_contact: self.tau_kv()?,
            tau_matrix_special: self.tau_special()?,
            tau_matrix_general: self.tau_general()?,
            betti: self.betti()?,
            dim_pullback_jacobian: self.beta0()?,
            codim_minors: match self.family() {
                Some(_) => Some(self.beta0()?),
                None => None,
            },
            m0: self.m0()?,
            cohen_macaulay: self.cohen_macaulay()?,
            checks,
            hypothesis_violations: self.hypothesis_violations()?,
        })
    }

    pub fn verify(&self, id: IdentityId) -> Result<Vec<Check>> {
        match id {
            IdentityId::Betas => self.verify_betas(),
            IdentityId::Imax => self.verify_regime(id, 0),
            IdentityId::Submax => self.verify_regime(id, 1),
            IdentityId::Gorenstein => self.verify_regime(id, 2),
            IdentityId::Eqeq => self.verify_eqeq(),
            IdentityId::Ck => self.verify_ck(),
            IdentityId::Gorp => self.verify_gorp(),
            IdentityId::Diag => self.verify_diag(),
        }
    }

    fn verify_betas(&self) -> Result<Vec<Check>> {
        let name = "betas";
        let lhs = Quantity::of(self.tau_kf()?);
        if !self.mu()?.is_finite() {
            return Ok(vec![Check::not_applicable(
                name,
                lhs,
                Quantity::Unknown,
                "f∘F does not have an isolated singularity",
            )]);
        }
        let rhs = Quantity::combine(&[(1, self.mu()?), (-1, self.beta0()?), (1, self.beta1()?)]);
        let note = match self.cohen_macaulay()? {
            Some(false) => "O/J_f is not Cohen-Macaulay; betas from the syzygy presentation",
            _ => "",
        };
        Ok(vec![Check::compare(name, lhs, rhs, note)])
    }

    /// `imax` (`m = m0`), `submax` (`m = m0 - 1`) and `gorenstein` (`m = m0 - 2`).
    fn verify_regime(&self, id: IdentityId, drop: usize) -> Result<Vec<Check>> {
        let name = id.name();
        let (m, m0) = (self.germ.m(), self.m0()?);
        let tau = Quantity::of(self.tau_identity()?);
        let mu = self.mu()?;
        let rhs = match drop {
            0 => Quantity::combine(&[(1, mu), (-1, self.beta0()?)]),
            1 => Quantity::of(mu),
            _ => Quantity::combine(&[(1, mu), (1, self.beta0()?)]),
        };
        if m + drop != m0 {
            return Ok(vec![Check::not_applicable(
                name,
                tau,
                rhs,
                format!("needs m = {}, have m = {m}", m0 as i64 - drop as i64),
            )]);
        }
        if !mu.is_finite() {
            return Ok(vec![Check::not_applicable(
                name,
                tau,
                rhs,
                "f∘F does not have an isolated singularity",
            )]);
        }
        if self.cohen_macaulay()? != Some(true) {
            return Ok(vec![Check::not_applicable(
                name,
                tau,
                rhs,
                "O/J_f is not Cohen-Macaulay",
            )]);
        }
        if drop == 2 && !self.gorenstein()? {
            return Ok(vec![Check::not_applicable(name, tau, rhs, "O/J_f is not Gorenstein")]);
        }
        let mut out = vec![Check::compare(name, tau, rhs, "")];
        match drop {
            1 => {
                let b = self.betti()?;
                out.push(Check::compare(
                    format!("{name}:beta0=beta1"),
                    Quantity::of(self.beta0()?),
                    Quantity::of(self.beta1()?),
                    "",
                ));
                if self.ambient_mu()?.is_finite() || self.family().is_some() {
                    let higher = b.iter().skip(2).fold(Dim::Finite(0), |acc, d| acc + *d);
                    out.push(Check::compare(
                        format!("{name}:higher-betas-vanish"),
                        Quantity::of(higher),
                        Quantity::Int(0),
                        "",
                    ));
                }
            }
            2 => {
                if let Some(b2) = self.beta(2)? {
                    out.push(Check::compare(
                        format!("{name}:beta0+beta2=beta1"),
                        Quantity::combine(&[(1, self.beta0()?), (1, b2)]),
                        Quantity::of(self.beta1()?),
                        "",
                    ));
                }
            }
            _ => {}
        }
        Ok(out)
    }

    fn verify_eqeq(&self) -> Result<Vec<Check>> {
        let Some(fam) = self.family() else {
            return Ok(vec![Check::not_applicable(
                "eqeq",
                Quantity::Unknown,
                Quantity::Unknown,
                "only defined for matrix families",
            )]);
        };
        let f = fam.generic_function()?;
        let map = fam.as_map();
        // logarithmic fields from syzygies when the ambient space is small, else from the resolution
        let small = fam.space_dim() <= 9;
        let (kf, kv, route) = if small {
            (tangent_space_kf(&f, &map)?, tangent_space_kv(&f, &map)?, "syzygies of the gradient")
        } else {
            (family_tangent_space_kf(fam)?, family_tangent_space_kv(fam)?, "resolution differential")
        };
        let mut out = Vec::new();
        for (label, flavour, other) in [("special", Flavour::Special, kf), ("general", Flavour::General, kv)] {
            let mat = tangent_space_matrix(fam, flavour)?;
            let local = |b: &ModuleBasis| b.with_order(MonomialOrder::local());
            let equal = submodule_contains(&local(&mat), &local(&other))? && submodule_contains(&local(&other), &local(&mat))?;
            out.push(Check::compare(
                format!("eqeq:{label}-containment"),
                indicator(equal),
                Quantity::Int(1),
                format!("mutual containment over the local ring; logarithmic fields via {route}"),
            ));
            let tau_mat = match flavour {
                Flavour::Special => self.tau_special()?.unwrap(),
                Flavour::General => self.tau_general()?.unwrap(),
            };
            out.push(Check::compare(
                format!("eqeq:{label}-codim"),
                Quantity::of(tau_mat),
                Quantity::of(quotient_dimension(&other)?),
                "",
            ));
        }
        Ok(out)
    }

    fn verify_ck(&self) -> Result<Vec<Check>> {
        let name = "ck";
        let (m, n) = (self.germ.m(), self.germ.target_dim());
        let tau = Quantity::of(self.tau_identity()?);
        if !self.ambient_mu()?.is_finite() {
            return Ok(vec![Check::not_applicable(
                name,
                tau,
                Quantity::Unknown,
                "the ambient function does not have an isolated singularity",
            )]);
        }
        let mu = self.mu()?;
        if !mu.is_finite() {
            return Ok(vec![Check::not_applicable(
                name,
                tau,
                Quantity::Unknown,
                "f∘F does not have an isolated singularity",
            )]);
        }
        let rhs = if m == n {
            Quantity::combine(&[(1, mu), (-1, self.beta0()?)])
        } else if m + 1 == n {
            Quantity::of(mu)
        } else if m + 2 == n {
            Quantity::combine(&[(1, mu), (1, self.beta0()?)])
        } else {
            return Ok(vec![Check::not_applicable(
                name,
                tau,
                Quantity::Unknown,
                format!("needs m in {{n, n-1, n-2}} with n = {n}, have m = {m}"),
            )]);
        };
        Ok(vec![Check::compare(name, tau, rhs, format!("m = n - {}", n - m))])
    }

    fn verify_gorp(&self) -> Result<Vec<Check>> {
        let name = "gorp";
        let applicable = match self.family() {
            Some(fam) => matches!(fam.kind(), MatrixKind::General | MatrixKind::Skew),
            None => false,
        };
        if !applicable {
            return Ok(vec![Check::not_applicable(
                name,
                Quantity::Unknown,
                Quantity::Unknown,
                "only defined for general and skew matrix families",
            )]);
        }
        let (m, m0) = (self.germ.m(), self.m0()?);
        if m >= m0 {
            return Ok(vec![Check::not_applicable(
                name,
                Quantity::Unknown,
                Quantity::Unknown,
                format!("needs m < {m0}, have m = {m}"),
            )]);
        }
        if !self.mu()?.is_finite() {
            return Ok(vec![Check::not_applicable(
                name,
                Quantity::Unknown,
                Quantity::Unknown,
                "f∘F does not have an isolated singularity",
            )]);
        }
        let b = self.betti()?;
        let c = m0 - m;
        let mut out = Vec::new();
        for k in 0..(c + 1) / 2 {
            out.push(Check::compare(
                format!("{name}:beta{k}=beta{}", c - k),
                Quantity::of(b[k]),
                Quantity::of(b[c - k]),
                "",
            ));
        }
        Ok(out)
    }

    fn verify_diag(&self) -> Result<Vec<Check>> {
        let na = |reason: &str| {
            Ok(vec![Check::not_applicable(
                "diag",
                Quantity::Unknown,
                Quantity::Unknown,
                reason,
            )])
        };
        let Some(fam) = self.family() else {
            return na("only defined for matrix families");
        };
        if fam.kind() != MatrixKind::Symmetric || fam.m() != 1 {
            return na("needs a one-parameter symmetric family");
        }
        let Some(mut a) = diagonal_exponents(fam.matrix()) else {
            return na("needs a diagonal family with monomial entries");
        };
        a.sort_unstable();
        let n = a.len() as i64;
        let tau_formula: i64 = a.iter().enumerate().map(|(i, &ai)| (n - i as i64) * ai as i64).sum::<i64>() - 1;
        let mu_formula: i64 = a.iter().map(|&ai| ai as i64).sum::<i64>() - 1;
        let beta0_formula: i64 = a[..a.len() - 1].iter().map(|&ai| ai as i64).sum();
        let tau = self.tau_special()?.unwrap();
        let (mu, beta0) = (self.mu()?, self.beta0()?);
        let corank = fam.corank_at_origin();
        let equal = Quantity::of(tau) == Quantity::combine(&[(1, mu), (1, beta0)]);
        Ok(vec![
            Check::compare("diag:tau_ss", Quantity::of(tau), Quantity::Int(tau_formula), ""),
            Check::compare("diag:mu", Quantity::of(mu), Quantity::Int(mu_formula), ""),
            Check::compare("diag:beta0", Quantity::of(beta0), Quantity::Int(beta0_formula), ""),
            Check::compare(
                "diag:corank",
                indicator(equal),
                indicator(corank <= 2),
                format!("[tau_ss = mu + beta0] vs [corank S(0) = {corank} <= 2]"),
            ),
        ])
    }
}

/// Exponents `a_i` if the matrix is `diag(c_i x^{a_i})` in one variable.
fn diagonal_exponents(s: &PolyMatrix) -> Option<Vec<u16>> {
    let n = s.rows();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        for j in 0..n {
            if i != j && !s.get(i, j).is_zero() {
                return None;
            }
        }
        let p = s.get(i, i);
        if p.num_terms() != 1 {
            return None;
        }
        let (e, _) = p.terms().next()?;
        out.push(e.get(0));
    }
    Some(out)
}

/// Decides Cohen–Macaulayness of `O/J_f` (of codimension `m0`) by cutting with linear
/// sections of dimension `m0`: for a section with finite-length `O/F*(J_f)`, the
/// quotient is Cohen–Macaulay iff the first Tor vanishes.
fn jacobian_cohen_macaulay(f: &Poly, m0: usize) -> Result<Option<bool>> {
    let n = f.nvars();
    let patterns: [i64; 4] = [0, 1, 2, -1];
    for keep in subsets(n, m0) {
        for &shift in &patterns {
            let images: Vec<Poly> = (0..n)
                .map(|k| match keep.iter().position(|&c| c == k) {
                    Some(pos) => Poly::var(m0, pos),
                    None => (0..m0).fold(Poly::zero(m0), |acc, j| {
                        let c = if shift == 0 { 0 } else { ((k + 2 * j) as i64 % 3 + shift) % 4 };
                        &acc + &Poly::var(m0, j).scale(&crate::poly::rat(c))
                    }),
                })
                .collect();
            let map = SubstitutionMap::new(m0, images)?;
            let pres = gradient_presentation(f, &map)?;
            if homology_dimension(&pres, 0)?.is_finite() {
                return Ok(Some(homology_dimension(&pres, 1)? == Dim::Finite(0)));
            }
        }
    }
    Ok(None)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize == k {
            out.push((0..n).filter(|&i| mask & (1 << i) != 0).collect());
        }
    }
    out
}

/// Runs every identity check on a germ.
pub fn verify_identity(germ: &Germ, id: IdentityId) -> Result<Vec<Check>> {
    Analysis::new(germ.clone()).verify(id)
}

/// Full invariant report for a germ.
pub fn analyze(germ: &Germ) -> Result<InvariantReport> {
    Analysis::new(germ.clone()).report()
}

/// β_j of the pulled-back resolution.
pub fn betti_numbers(germ: &Germ) -> Result<Vec<Dim>> {
    Analysis::new(germ.clone()).betti()
}

/// Colength of the minors ideal of a family at the origin compared with the sum of local
/// colengths of a perturbation over its (rational) zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conservation {
    pub central: Dim,
    pub perturbed_global: Dim,
    pub points: Vec<(Vec<BigRational>, Dim)>,
    /// `false` if the perturbed zero set has irrational points.
    pub complete: bool,
}

impl Conservation {
    pub fn local_sum(&self) -> Dim {
        self.points.iter().fold(Dim::Finite(0), |acc, (_, d)| acc + *d)
    }

    pub fn holds(&self) -> bool {
        self.complete && self.central == self.local_sum() && self.perturbed_global == self.local_sum()
    }
}

fn minors_generators(fam: &MatrixFamily) -> Result<Vec<Poly>> {
    let size = if fam.kind() == MatrixKind::Skew { fam.n() - 2 } else { fam.n() - 1 };
    Ok(minors_ideal(fam, size)?.generators().iter().map(|v| v[0].clone()).collect())
}

pub fn conservation(central: &MatrixFamily, perturbed: &MatrixFamily) -> Result<Conservation> {
    let m = perturbed.m();
    let central_dim = quotient_dimension(&ModuleBasis::ideal(
        central.m(),
        minors_generators(central)?,
        MonomialOrder::local(),
    ))?;
    let gens = minors_generators(perturbed)?;
    let global = quotient_dimension(&ModuleBasis::ideal(m, gens.clone(), MonomialOrder::global()))?;
    let Some(zeros) = rational_zeros(m, &gens)? else {
        return Ok(Conservation {
            central: central_dim,
            perturbed_global: global,
            points: Vec::new(),
            complete: false,
        });
    };
    let mut points = Vec::new();
    for p in zeros.points {
        let shifted = gens.iter().map(|g| g.translate(&p)).collect::<Result<Vec<_>>>()?;
        points.push((p, local_ideal_dim(m, shifted)?));
    }
    Ok(Conservation {
        central: central_dim,
        perturbed_global: global,
        points,
        complete: zeros.complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn v(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    fn remark_section() -> Germ {
        let (x, y, z) = (v(3, 0), v(3, 1), v(3, 2));
        let f = &(&(&x.pow(5) * &z) + &(&x.pow(3) * &y.pow(3))) + &(&y.pow(5) * &z);
        let (a, b) = (v(2, 0), v(2, 1));
        let map = SubstitutionMap::new(2, vec![a.clone(), b.clone(), &a + &b]).unwrap();
        Germ::section(f, map).unwrap()
    }

    fn sym2(a: Poly, b: Poly, c: Poly) -> MatrixFamily {
        let m = PolyMatrix::from_rows(a.nvars(), vec![vec![a, b.clone()], vec![b, c]]).unwrap();
        MatrixFamily::new(MatrixKind::Symmetric, m).unwrap()
    }

    #[test]
    fn milnor_examples() {
        let (x, y) = (v(2, 0), v(2, 1));
        assert_eq!(milnor_number(&(&x.pow(2) + &y.pow(2))).unwrap(), Dim::Finite(1));
        assert_eq!(milnor_number(&(&x.pow(3) + &y.pow(3))).unwrap(), Dim::Finite(4));
        assert_eq!(milnor_number(&Poly::one(2)), Err(Error::NotAtOrigin));
    }

    #[test]
    fn tjurina_examples() {
        let (x, y) = (v(2, 0), v(2, 1));
        assert_eq!(tjurina_number_function(&(&x.pow(2) + &y.pow(2))).unwrap(), Dim::Finite(1));
        assert_eq!(tjurina_number_function(&v(1, 0).pow(3)).unwrap(), Dim::Finite(2));
        let g = &(&x.pow(5) + &(&x.pow(2) * &y.pow(2))) + &y.pow(5);
        let (t, m) = (tjurina_number_function(&g).unwrap(), milnor_number(&g).unwrap());
        assert!(t <= m);
        assert!(t < m, "non-quasihomogeneous: tau {t} < mu {m}");
    }

    #[test]
    fn der_log_examples() {
        let (x, y) = (v(2, 0), v(2, 1));
        let d = der_log_f(&(&x * &y)).unwrap();
        assert_eq!(d.generators().len(), 1);
        let g = &d.generators()[0];
        assert!(g == &vec![x.clone(), -&y] || g == &vec![-&x, y.clone()]);

        let e = der_log_v(&(&x * &y)).unwrap();
        let sb = e.with_order(MonomialOrder::global());
        let gb = crate::groebner::standard_basis(&sb).unwrap();
        assert!(gb.contains(&[x.clone(), Poly::zero(2)]).unwrap());
        assert!(gb.contains(&[Poly::zero(2), y.clone()]).unwrap());
        assert!(!gb.contains(&[y.clone(), Poly::zero(2)]).unwrap());

        // Euler field for a homogeneous function
        let f = &x.pow(3) + &(&x * &y.pow(2));
        let gb = crate::groebner::standard_basis(&der_log_v(&f).unwrap().with_order(MonomialOrder::global())).unwrap();
        assert!(gb.contains(&[x.clone(), y.clone()]).unwrap());
    }

    #[test]
    fn der_log_of_remark_function_vanishes_on_axis() {
        let Germ::Section { f, .. } = remark_section() else { unreachable!() };
        let d = der_log_f(&f).unwrap();
        let z = v(1, 0);
        let axis = SubstitutionMap::general(1, vec![Poly::zero(1), Poly::zero(1), z]).unwrap();
        for g in d.generators() {
            for p in g {
                assert!(p.substitute(&axis).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn remark_section_numbers() {
        let a = Analysis::new(remark_section());
        assert_eq!(a.mu().unwrap(), Dim::Finite(25));
        assert_eq!(a.beta0().unwrap(), Dim::Finite(19));
        assert_eq!(a.tau_kf().unwrap(), Dim::Finite(10));
        assert_eq!(a.m0().unwrap(), 2);
        assert_eq!(a.cohen_macaulay().unwrap(), Some(false));
        let betas = a.verify(IdentityId::Betas).unwrap();
        assert_eq!(betas[0].verdict, Verdict::Holds);
        let imax = a.verify(IdentityId::Imax).unwrap();
        assert_eq!(imax[0].verdict, Verdict::NotApplicable);
        assert_eq!((imax[0].lhs, imax[0].rhs), (Quantity::Int(10), Quantity::Int(6)));
    }

    #[test]
    fn smooth_function_sections() {
        let (x, y, z) = (v(3, 0), v(3, 1), v(3, 2));
        let f = &(&x.pow(2) + &y.pow(2)) + &z.pow(2);
        let (a, b) = (v(2, 0), v(2, 1));
        let map = SubstitutionMap::new(2, vec![a.clone(), b.clone(), &a + &b]).unwrap();
        // rotations vanish at 0, so only tF contributes: codim 3 - 2
        assert_eq!(t1_kf(&f, &map).unwrap(), Dim::Finite(1));
        let g = v(1, 0);
        assert_eq!(t1_kv(&g, &SubstitutionMap::identity(1)).unwrap(), Dim::Finite(0));
        assert_eq!(t1_kf(&g, &SubstitutionMap::identity(1)).unwrap(), Dim::Finite(0));
    }

    #[test]
    fn tau_matrix_examples() {
        let x = v(1, 0);
        let z = Poly::zero(1);
        let diag = sym2(x.clone(), z.clone(), x.pow(2));
        assert_eq!(tau_matrix(&diag, Flavour::Special).unwrap(), Dim::Finite(3));
        let generic = MatrixFamily::generic(MatrixKind::Symmetric, 2);
        assert_eq!(tau_matrix(&generic, Flavour::Special).unwrap(), Dim::Finite(0));

        let mut m = PolyMatrix::zeros(3, 3, 1);
        m.set(0, 0, x.clone());
        m.set(1, 1, x.clone());
        m.set(2, 2, x.pow(2));
        let fam = MatrixFamily::new(MatrixKind::Symmetric, m).unwrap();
        assert_eq!(tau_matrix(&fam, Flavour::Special).unwrap(), Dim::Finite(6));
    }

    #[test]
    fn routes_agree_on_symmetric_family() {
        let (x, y) = (v(2, 0), v(2, 1));
        let fam = sym2(x.clone(), y.clone(), -&x);
        let a = Analysis::new(Germ::Family(fam.clone()));
        let f = fam.generic_function().unwrap();
        let t_ss = a.tau_special().unwrap().unwrap();
        assert_eq!(t_ss, t1_kf(&f, &fam.as_map()).unwrap());
        assert_eq!(t_ss, a.tau_kf().unwrap());
        assert_eq!(a.tau_general().unwrap().unwrap(), t1_kv(&f, &fam.as_map()).unwrap());
        assert_eq!(t_ss, a.mu().unwrap());
        assert_eq!(a.mu().unwrap(), Dim::Finite(1));
        let b = a.betti().unwrap();
        assert_eq!(b, vec![Dim::Finite(1), Dim::Finite(1), Dim::Finite(0), Dim::Finite(0)]);
        for check in a.verify(IdentityId::Submax).unwrap() {
            assert_eq!(check.verdict, Verdict::Holds, "{check:?}");
        }
        for check in a.verify(IdentityId::Eqeq).unwrap() {
            assert_eq!(check.verdict, Verdict::Holds, "{check:?}");
        }
        assert_eq!(a.verify(IdentityId::Imax).unwrap()[0].verdict, Verdict::NotApplicable);
    }

    #[test]
    fn diag_family_checks() {
        let x = v(1, 0);
        let fam = sym2(x.clone(), Poly::zero(1), x.pow(2));
        let checks = verify_identity(&Germ::Family(fam), IdentityId::Diag).unwrap();
        assert_eq!(checks.len(), 4);
        for c in &checks {
            assert_eq!(c.verdict, Verdict::Holds, "{c:?}");
            assert!(c.is_consistent());
        }
    }

    #[test]
    fn krull_dimension() {
        let (x, y, z) = (v(3, 0), v(3, 1), v(3, 2));
        assert_eq!(local_krull_dimension(3, &[x.clone(), y.clone()]).unwrap(), 1);
        assert_eq!(local_krull_dimension(3, &[&x * &y]).unwrap(), 2);
        assert_eq!(local_krull_dimension(3, &[x.clone(), y.clone(), z.clone()]).unwrap(), 0);
        assert_eq!(local_krull_dimension(3, &[&Poly::one(3) + &x]).unwrap(), 0);
    }

    #[test]
    fn conservation_for_split_point() {
        let (x, y, z) = (v(3, 0), v(3, 1), v(3, 2));
        let central = MatrixFamily::new(
            MatrixKind::Symmetric,
            PolyMatrix::from_rows(3, vec![vec![x.clone(), y.clone()], vec![y.clone(), z.pow(2)]]).unwrap(),
        )
        .unwrap();
        let perturbed = MatrixFamily::new(
            MatrixKind::Symmetric,
            PolyMatrix::from_rows(3, vec![vec![x.clone(), y.clone()], vec![y.clone(), &z.pow(2) - &Poly::one(3)]]).unwrap(),
        )
        .unwrap();
        let c = conservation(&central, &perturbed).unwrap();
        assert_eq!(c.central, Dim::Finite(2));
        assert_eq!(c.points.len(), 2);
        assert!(c.holds(), "{c:?}");
        assert_eq!(c.points[0].0, vec![rat(0), rat(0), rat(-1)]);
    }

    #[test]
    fn identity_names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
        }
        assert!("nope".parse::<IdentityId>().is_err());
    }
}
