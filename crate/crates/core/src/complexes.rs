//! Free complexes over the polynomial ring: Koszul complexes, the determinantal and
//! Pfaffian resolutions, pullbacks, the low-degree comparison morphisms, mapping cones
//! and homology dimensions over the local ring at the origin.

use crate::dim::Dim;
use crate::error::{Error, Result};
use crate::groebner::{quotient_dimension, subquotient_dimension, Lifter, ModuleBasis, MonomialOrder};
use crate::matalg::{half, inv_int, trace_of_product, MatrixFamily, MatrixKind, MatrixSpace, PolyMatrix};
use crate::poly::{Poly, SubstitutionMap};

/// `0 <- R^{r_0} <-d_1- R^{r_1} <- ... <-d_L- R^{r_L}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeComplex {
    nvars: usize,
    ranks: Vec<usize>,
    diffs: Vec<PolyMatrix>,
}

impl FreeComplex {
    /// `diffs[k - 1]` is `d_k`, of shape `ranks[k - 1] x ranks[k]`.
    pub fn new(nvars: usize, ranks: Vec<usize>, diffs: Vec<PolyMatrix>) -> Result<Self> {
        if ranks.len() != diffs.len() + 1 {
            return Err(Error::ShapeMismatch(format!(
                "{} ranks need {} differentials, got {}",
                ranks.len(),
                ranks.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate() {
            if (d.rows(), d.cols()) != (ranks[k], ranks[k + 1]) {
                return Err(Error::ShapeMismatch(format!(
                    "d_{} is {}x{}, expected {}x{}",
                    k + 1,
                    d.rows(),
                    d.cols(),
                    ranks[k],
                    ranks[k + 1]
                )));
            }
            if d.nvars() != nvars {
                return Err(Error::VarCountMismatch {
                    left: nvars,
                    right: d.nvars(),
                });
            }
        }
        Ok(FreeComplex { nvars, ranks, diffs })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Rank in degree `k` (zero outside the represented range).
    pub fn rank(&self, k: usize) -> usize {
        self.ranks.get(k).copied().unwrap_or(0)
    }

    pub fn length(&self) -> usize {
        self.diffs.len()
    }

    /// `d_k` for `1 <= k <= length`.
    pub fn differential(&self, k: usize) -> &PolyMatrix {
        &self.diffs[k - 1]
    }

    pub fn differentials(&self) -> &[PolyMatrix] {
        &self.diffs
    }

    /// `d_k`, or the zero map when `k` lies outside `1..=length`.
    fn diff_or_zero(&self, k: usize) -> PolyMatrix {
        if k >= 1 && k <= self.length() {
            self.diffs[k - 1].clone()
        } else {
            PolyMatrix::zeros(self.rank(k.wrapping_sub(1)), self.rank(k), self.nvars)
        }
    }
}

/// Checks `d_k ∘ d_{k+1} = 0` for every `k`.
pub fn verify_complex(c: &FreeComplex) -> bool {
    c.diffs.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
}

/// A chain map represented in degrees `0..=D` (possibly fewer than the complexes' lengths).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexMorphism {
    source: FreeComplex,
    target: FreeComplex,
    maps: Vec<PolyMatrix>,
}

impl ComplexMorphism {
    pub fn new(source: FreeComplex, target: FreeComplex, maps: Vec<PolyMatrix>) -> Result<Self> {
        for (k, phi) in maps.iter().enumerate() {
            if (phi.rows(), phi.cols()) != (target.rank(k), source.rank(k)) {
                return Err(Error::ShapeMismatch(format!(
                    "phi_{k} is {}x{}, expected {}x{}",
                    phi.rows(),
                    phi.cols(),
                    target.rank(k),
                    source.rank(k)
                )));
            }
        }
        Ok(ComplexMorphism { source, target, maps })
    }

    pub fn source(&self) -> &FreeComplex {
        &self.source
    }

    pub fn target(&self) -> &FreeComplex {
        &self.target
    }

    pub fn maps(&self) -> &[PolyMatrix] {
        &self.maps
    }

    /// Highest represented degree.
    pub fn top_degree(&self) -> usize {
        self.maps.len().saturating_sub(1)
    }
}

/// Checks `d^target_k φ_k = φ_{k-1} d^source_k` in every represented degree.
pub fn verify_chain_map(phi: &ComplexMorphism) -> bool {
    (1..phi.maps.len()).all(|k| {
        let lhs = phi.target.diff_or_zero(k).mul(&phi.maps[k]);
        let rhs = phi.maps[k - 1].mul(&phi.source.diff_or_zero(k));
        lhs == rhs
    })
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Koszul complex on arbitrary elements `p_1..p_s`, with
/// `d(e_{i_1} ∧ ... ∧ e_{i_k}) = Σ_j (-1)^{j+1} p_{i_j} e_{... î_j ...}`.
pub fn koszul_on(nvars: usize, elems: &[Poly]) -> FreeComplex {
    let s = elems.len();
    let bases: Vec<Vec<Vec<usize>>> = (0..=s).map(|k| subsets(s, k)).collect();
    let ranks = bases.iter().map(Vec::len).collect();
    let mut diffs = Vec::with_capacity(s);
    for k in 1..=s {
        let rows = &bases[k - 1];
        let mut d = PolyMatrix::zeros(rows.len(), bases[k].len(), nvars);
        for (col, set) in bases[k].iter().enumerate() {
            for (j, &i) in set.iter().enumerate() {
                let mut face = set.clone();
                face.remove(j);
                let row = rows.binary_search(&face).expect("faces are subsets");
                let p = &elems[i];
                d.set(row, col, if j % 2 == 0 { p.clone() } else { -p });
            }
        }
        diffs.push(d);
    }
    FreeComplex { nvars, ranks, diffs }
}

/// Koszul complex on the partial derivatives of `g`.
pub fn koszul(g: &Poly) -> FreeComplex {
    koszul_on(g.nvars(), &g.gradient())
}

/// Koszul complex on the partials of `g` followed by `g` itself.
pub fn koszul_augmented(g: &Poly) -> FreeComplex {
    let mut elems = g.gradient();
    elems.push(g.clone());
    koszul_on(g.nvars(), &elems)
}

fn column_matrix(rows: usize, nvars: usize, columns: Vec<Vec<Poly>>) -> PolyMatrix {
    PolyMatrix::from_columns(rows, nvars, &columns)
}

fn concat(mut a: Vec<Poly>, b: Vec<Poly>) -> Vec<Poly> {
    a.extend(b);
    a
}

/// `A - (tr(A)/n) I`.
fn traceless(a: &PolyMatrix) -> PolyMatrix {
    let n = a.rows();
    let t = a.trace().scale(&inv_int(n));
    a.sub(&PolyMatrix::identity(n, a.nvars()).scale_poly(&t))
}

fn expect_kind(fam: &MatrixFamily, kind: MatrixKind) -> Result<()> {
    if fam.kind() != kind {
        return Err(Error::WrongKind {
            expected: kind.name().into(),
            got: fam.kind().name().into(),
        });
    }
    Ok(())
}

/// Resolution of `O/J` for the submaximal minors of a general family:
/// ranks `(1, n², 2(n²-1), n², 1)`, with `sl_n ⊕ sl_n` in degree 2.
pub fn gn_complex(fam: &MatrixFamily) -> Result<FreeComplex> {
    expect_kind(fam, MatrixKind::General)?;
    let n = fam.n();
    if n < 2 {
        return Err(Error::Unsupported("general resolution needs n >= 2".into()));
    }
    let nv = fam.m();
    let m = fam.matrix();
    let star = fam.star()?;
    let (mat, sl) = (MatrixSpace::Mat, MatrixSpace::Sl);
    let mat_basis = mat.basis(n, nv);
    let sl_basis = sl.basis(n, nv);
    let nn = n * n;

    let d1 = column_matrix(1, nv, mat_basis.iter().map(|u| vec![trace_of_product(&star, u)]).collect());
    let mut cols = Vec::new();
    for x in &sl_basis {
        cols.push(mat.flatten(&m.mul(x)));
    }
    for y in &sl_basis {
        cols.push(mat.flatten(&y.mul(m).neg()));
    }
    let d2 = column_matrix(nn, nv, cols);
    let d3 = column_matrix(
        2 * (nn - 1),
        nv,
        mat_basis
            .iter()
            .map(|z| concat(sl.flatten(&traceless(&z.mul(m))), sl.flatten(&traceless(&m.mul(z)))))
            .collect(),
    );
    let d4 = column_matrix(nn, nv, vec![mat.flatten(&star)]);
    FreeComplex::new(nv, vec![1, nn, 2 * (nn - 1), nn, 1], vec![d1, d2, d3, d4])
}

/// Resolution of `O/J` for a symmetric family: ranks `(1, n(n+1)/2, n²-1, n(n-1)/2)`.
pub fn jozefiak_complex(fam: &MatrixFamily) -> Result<FreeComplex> {
    expect_kind(fam, MatrixKind::Symmetric)?;
    let n = fam.n();
    if n < 2 {
        return Err(Error::Unsupported("symmetric resolution needs n >= 2".into()));
    }
    let nv = fam.m();
    let s = fam.matrix();
    let star = fam.star()?;
    let (sym, sl, skew) = (MatrixSpace::Sym, MatrixSpace::Sl, MatrixSpace::Skew);
    let d1 = column_matrix(1, nv, sym.basis(n, nv).iter().map(|x| vec![trace_of_product(&star, x)]).collect());
    let d2 = column_matrix(
        sym.dim(n),
        nv,
        sl.basis(n, nv)
            .iter()
            .map(|y| sym.flatten(&s.mul(y).add(&y.transpose().mul(s))))
            .collect(),
    );
    let d3 = column_matrix(sl.dim(n), nv, skew.basis(n, nv).iter().map(|z| sl.flatten(&z.mul(s))).collect());
    FreeComplex::new(nv, vec![1, sym.dim(n), sl.dim(n), skew.dim(n)], vec![d1, d2, d3])
}

/// Resolution of `O/J` for a skew family (sub-Pfaffians of order `n-2`):
/// ranks `(1, n(n-1)/2, n²-1, n(n+1), n²-1, n(n-1)/2, 1)`.
pub fn jp_complex(fam: &MatrixFamily) -> Result<FreeComplex> {
    expect_kind(fam, MatrixKind::Skew)?;
    let n = fam.n();
    if n % 2 == 1 {
        return Err(Error::OddSize(n));
    }
    if n < 4 {
        return Err(Error::Unsupported("skew resolution needs n >= 4".into()));
    }
    let nv = fam.m();
    let s = fam.matrix();
    let star = fam.star()?;
    let (sym, sl, skew) = (MatrixSpace::Sym, MatrixSpace::Sl, MatrixSpace::Skew);
    let h = half();

    let d1 = column_matrix(
        1,
        nv,
        skew.basis(n, nv)
            .iter()
            .map(|u| vec![trace_of_product(&star, u).scale(&h)])
            .collect(),
    );
    let d2 = column_matrix(
        skew.dim(n),
        nv,
        sl.basis(n, nv)
            .iter()
            .map(|v| skew.flatten(&s.mul(v).add(&v.transpose().mul(s))))
            .collect(),
    );
    let mut cols = Vec::new();
    for w in sym.basis(n, nv) {
        cols.push(sl.flatten(&star.mul(&w)));
    }
    for x in sym.basis(n, nv) {
        cols.push(sl.flatten(&x.mul(s).neg()));
    }
    let d3 = column_matrix(sl.dim(n), nv, cols);
    let d4 = column_matrix(
        2 * sym.dim(n),
        nv,
        sl.basis(n, nv)
            .iter()
            .map(|y| {
                let sy = s.mul(y);
                let ys = y.mul(&star);
                concat(sym.flatten(&sy.add(&sy.transpose())), sym.flatten(&ys.add(&ys.transpose())))
            })
            .collect(),
    );
    let d5 = column_matrix(
        sl.dim(n),
        nv,
        skew.basis(n, nv).iter().map(|z| sl.flatten(&traceless(&z.mul(s)))).collect(),
    );
    let d6 = column_matrix(skew.dim(n), nv, vec![skew.flatten(&star)]);
    FreeComplex::new(
        nv,
        vec![1, skew.dim(n), sl.dim(n), 2 * sym.dim(n), sl.dim(n), skew.dim(n), 1],
        vec![d1, d2, d3, d4, d5, d6],
    )
}

/// The resolution matching the family's kind.
pub fn resolution(fam: &MatrixFamily) -> Result<FreeComplex> {
    match fam.kind() {
        MatrixKind::Symmetric => jozefiak_complex(fam),
        MatrixKind::General => gn_complex(fam),
        MatrixKind::Skew => jp_complex(fam),
    }
}

/// Substitutes `map` into every differential.
pub fn pullback(c: &FreeComplex, map: &SubstitutionMap) -> Result<FreeComplex> {
    if map.arity() != c.nvars {
        return Err(Error::ArityMismatch {
            expected: c.nvars,
            got: map.arity(),
        });
    }
    let diffs = c.diffs.iter().map(|d| d.substitute(map)).collect::<Result<Vec<_>>>()?;
    FreeComplex::new(map.nvars(), c.ranks.clone(), diffs)
}

fn matrix_side(kind: MatrixKind, dim: usize) -> Result<usize> {
    (1..=dim + 1)
        .find(|&n| kind.space().dim(n) == dim)
        .ok_or_else(|| Error::ShapeMismatch(format!("{dim} is not the dimension of a {kind} matrix space")))
}

/// Comparison morphism from the Koszul complex of `g = f ∘ F` to the pulled-back
/// resolution `L`, in degrees 0, 1 and 2.
///
/// `F` lists the family in matrix-space coordinates and `f` is the determinant or
/// Pfaffian matching `kind`.
pub fn phi_f(g: &Poly, map: &SubstitutionMap, l: &FreeComplex, kind: MatrixKind) -> Result<ComplexMorphism> {
    let n = matrix_side(kind, map.arity())?;
    let entries = kind.space().unflatten(n, map.nvars(), map.images());
    let fam = MatrixFamily::new(kind, entries)?;
    if fam.function()? != *g {
        return Err(Error::WrongKind {
            expected: format!("the {} function of the family", if kind == MatrixKind::Skew { "Pfaffian" } else { "determinant" }),
            got: g.to_string(),
        });
    }
    let k = koszul(g);
    let maps = family_phi_maps(&fam)?;
    ComplexMorphism::new(k, l.clone(), maps)
}

/// [`phi_f`] for a family, with the resolution built directly on it.
pub fn phi_f_family(fam: &MatrixFamily) -> Result<ComplexMorphism> {
    let g = fam.function()?;
    phi_f(&g, &fam.as_map(), &resolution(fam)?, fam.kind())
}

fn family_phi_maps(fam: &MatrixFamily) -> Result<Vec<PolyMatrix>> {
    let (n, m) = (fam.n(), fam.m());
    let space = fam.kind().space();
    let phi0 = PolyMatrix::identity(1, m);
    let partials = (0..m).map(|i| fam.derivative(i)).collect::<Result<Vec<_>>>()?;
    let phi1 = column_matrix(space.dim(n), m, partials.iter().map(|p| space.flatten(p)).collect());

    let star = fam.star()?;
    let star_partials = (0..m).map(|i| star.partial(i)).collect::<Result<Vec<_>>>()?;
    let h = half();
    let sl = MatrixSpace::Sl;
    let mut cols = Vec::new();
    for pair in subsets(m, 2) {
        let (i, j) = (pair[0], pair[1]);
        let (si, sj, ti, tj) = (&partials[i], &partials[j], &star_partials[i], &star_partials[j]);
        let col = match fam.kind() {
            MatrixKind::Symmetric | MatrixKind::Skew => sl.flatten(&ti.mul(sj).sub(&tj.mul(si)).scale(&h)),
            MatrixKind::General => concat(
                sl.flatten(&ti.mul(sj).sub(&tj.mul(si)).scale(&h)),
                sl.flatten(&si.mul(tj).sub(&sj.mul(ti)).scale(&h)),
            ),
        };
        cols.push(col);
    }
    let rows = match fam.kind() {
        MatrixKind::General => 2 * sl.dim(n),
        _ => sl.dim(n),
    };
    let phi2 = column_matrix(rows, m, cols);
    Ok(vec![phi0, phi1, phi2])
}

/// Two-step presentation `O <- O^n <- O^s` of `O/J_f` (first map the partials,
/// second map their syzygies) for an arbitrary `f`, pulled back by `F`.
pub fn gradient_presentation(f: &Poly, map: &SubstitutionMap) -> Result<FreeComplex> {
    presentation_of(f.nvars(), &f.gradient(), map)
}

/// As [`gradient_presentation`], for the row `[∂f/∂y_1, ..., ∂f/∂y_n, f]`.
pub fn augmented_presentation(f: &Poly, map: &SubstitutionMap) -> Result<FreeComplex> {
    let mut row = f.gradient();
    row.push(f.clone());
    presentation_of(f.nvars(), &row, map)
}

fn presentation_of(n: usize, row: &[Poly], map: &SubstitutionMap) -> Result<FreeComplex> {
    if map.arity() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            got: map.arity(),
        });
    }
    let gens: Vec<Vec<Poly>> = row.iter().map(|p| vec![p.clone()]).collect();
    let syz = Lifter::new(n, 1, &gens)?.syzygies();
    let d1 = PolyMatrix::from_rows(n, vec![row.to_vec()])?;
    let d2 = PolyMatrix::from_columns(row.len(), n, &syz);
    let c = FreeComplex::new(n, vec![1, row.len(), syz.len()], vec![d1, d2])?;
    pullback(&c, map)
}

/// Comparison morphism `K(f ∘ F) -> F*(presentation of O/J_f)` in degrees 0 and 1
/// (`φ_0 = id`, `φ_1 = dF`) for an arbitrary function germ `f`.
pub fn phi_f_general(f: &Poly, map: &SubstitutionMap) -> Result<ComplexMorphism> {
    let g = f.substitute(map)?;
    let target = gradient_presentation(f, map)?;
    let maps = vec![PolyMatrix::identity(1, map.nvars()), jacobian_matrix(map)];
    ComplexMorphism::new(koszul(&g), target, maps)
}

fn jacobian_matrix(map: &SubstitutionMap) -> PolyMatrix {
    PolyMatrix::from_rows(map.nvars(), map.jacobian()).expect("jacobian rows share the ring")
}

/// Comparison morphism from the augmented Koszul complex of `f ∘ F` to the pulled-back
/// presentation of `O/((f) + J_f)`, in degrees 0 and 1 (`φ_1 = dF ⊕ id`).
pub fn phi_v_general(f: &Poly, map: &SubstitutionMap) -> Result<ComplexMorphism> {
    let g = f.substitute(map)?;
    let target = augmented_presentation(f, map)?;
    ComplexMorphism::new(koszul_augmented(&g), target, phi_v_maps(map))
}

fn phi_v_maps(map: &SubstitutionMap) -> Vec<PolyMatrix> {
    let (n, m) = (map.arity(), map.nvars());
    let jac = jacobian_matrix(map);
    let mut phi1 = PolyMatrix::zeros(n + 1, m + 1, m);
    for i in 0..n {
        for j in 0..m {
            phi1.set(i, j, jac.get(i, j).clone());
        }
    }
    phi1.set(n, m, Poly::one(m));
    vec![PolyMatrix::identity(1, m), phi1]
}

/// [`phi_v_general`] for a family. The generic determinant or Pfaffian is homogeneous,
/// so the logarithmic fields of its zero set are those of the function plus the Euler field.
pub fn phi_v_family(fam: &MatrixFamily) -> Result<ComplexMorphism> {
    let map = fam.as_map();
    let g = fam.function()?;
    let l = resolution(fam)?;
    let (big_n, m) = (map.arity(), map.nvars());
    let degree = match fam.kind() {
        MatrixKind::Skew => fam.n() / 2,
        _ => fam.n(),
    };
    let d1 = PolyMatrix::from_rows(m, vec![concat(l.differential(1).columns().into_iter().map(|c| c[0].clone()).collect(), vec![g.clone()])])?;
    let l2 = l.differential(2);
    let mut d2 = PolyMatrix::zeros(big_n + 1, l2.cols() + 1, m);
    for i in 0..big_n {
        for j in 0..l2.cols() {
            d2.set(i, j, l2.get(i, j).clone());
        }
        d2.set(i, l2.cols(), map.images()[i].clone());
    }
    d2.set(big_n, l2.cols(), Poly::int(m, -(degree as i64)));
    let target = FreeComplex::new(m, vec![1, big_n + 1, l2.cols() + 1], vec![d1, d2])?;
    ComplexMorphism::new(koszul_augmented(&g), target, phi_v_maps(&map))
}

/// Mapping cone `C_k = A_{k-1} ⊕ B_k` with `d(a, b) = (-d a, d b - φ a)`, in degrees
/// `0..=through_degree`. Homology of the result is only meaningful below `through_degree`.
pub fn cone(phi: &ComplexMorphism, through_degree: usize) -> Result<FreeComplex> {
    let need = through_degree.saturating_sub(1);
    if phi.maps.len() < through_degree {
        return Err(Error::InsufficientMorphism {
            have: phi.top_degree(),
            need,
        });
    }
    let (a, b) = (&phi.source, &phi.target);
    let nv = b.nvars;
    let rank = |k: usize| (if k == 0 { 0 } else { a.rank(k - 1) }) + b.rank(k);
    let ranks: Vec<usize> = (0..=through_degree).map(rank).collect();
    let mut diffs = Vec::new();
    for k in 1..=through_degree {
        let a_rows = if k >= 2 { a.rank(k - 2) } else { 0 };
        let (a_cols, b_rows, b_cols) = (a.rank(k - 1), b.rank(k - 1), b.rank(k));
        let da = if k >= 2 { a.diff_or_zero(k - 1).neg() } else { PolyMatrix::zeros(0, a_cols, nv) };
        let mphi = phi.maps[k - 1].neg();
        let db = b.diff_or_zero(k);
        let d = PolyMatrix::block(
            &[a_rows, b_rows],
            &[a_cols, b_cols],
            nv,
            &[vec![Some(&da), None], vec![Some(&mphi), Some(&db)]],
        );
        diffs.push(d);
    }
    FreeComplex::new(nv, ranks, diffs)
}

/// `dim_Q H_k` of the complex localized at the origin.
pub fn homology_dimension(c: &FreeComplex, k: usize) -> Result<Dim> {
    if k > c.length() {
        return Ok(Dim::Finite(0));
    }
    let nv = c.nvars;
    let next = c.diff_or_zero(k + 1);
    if k == 0 {
        let m = ModuleBasis::new(nv, c.rank(0), next.columns(), MonomialOrder::local())?;
        return quotient_dimension(&m);
    }
    let local = MonomialOrder::local();
    let dk = c.differential(k);
    let z = Lifter::with_order(nv, dk.rows(), &dk.columns(), local)?.syzygy_module();
    if z.generators().is_empty() {
        return Ok(Dim::Finite(0));
    }
    let b = ModuleBasis::new(nv, c.rank(k), next.columns(), local)?;
    subquotient_dimension(&z, &b)
}

/// Alternating sum `Σ (-1)^k dim H_k` over the given degrees, or `None` if one is infinite.
pub fn euler_characteristic(dims: &[Dim]) -> Option<i64> {
    dims.iter()
        .enumerate()
        .try_fold(0i64, |acc, (k, d)| d.as_i64().map(|v| if k % 2 == 0 { acc + v } else { acc - v }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matalg::determinant;
    use crate::poly::rat;

    fn v(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    #[test]
    fn koszul_two_variables() {
        let (x, y) = (v(2, 0), v(2, 1));
        let g = &x.pow(2) + &y.pow(2);
        let k = koszul(&g);
        assert_eq!(k.ranks(), &[1, 2, 1]);
        let (p1, p2) = (g.partial(0).unwrap(), g.partial(1).unwrap());
        assert_eq!(k.differential(1), &PolyMatrix::from_rows(2, vec![vec![p1.clone(), p2.clone()]]).unwrap());
        assert_eq!(k.differential(2), &PolyMatrix::from_columns(2, 2, &[vec![-&p2, p1]]));
        assert!(verify_complex(&k));
        assert_eq!(homology_dimension(&k, 0).unwrap(), Dim::Finite(1));
        assert_eq!(homology_dimension(&k, 1).unwrap(), Dim::Finite(0));
        assert_eq!(homology_dimension(&k, 2).unwrap(), Dim::Finite(0));
    }

    #[test]
    fn koszul_augmented_examples() {
        let x = v(1, 0);
        let g = x.pow(2);
        let k = koszul_augmented(&g);
        assert_eq!(k.differential(1), &PolyMatrix::from_rows(1, vec![vec![x.scale(&rat(2)), x.pow(2)]]).unwrap());
        assert!(verify_complex(&k));
        assert_eq!(homology_dimension(&k, 0).unwrap(), Dim::Finite(1));
    }

    #[test]
    fn koszul_of_non_isolated_function() {
        // g = x^2 y: partials 2xy, x^2 share the factor x
        let (x, y) = (v(2, 0), v(2, 1));
        let k = koszul(&(&x.pow(2) * &y));
        assert_eq!(homology_dimension(&k, 0).unwrap(), Dim::Infinite);
        assert_eq!(homology_dimension(&k, 1).unwrap(), Dim::Infinite);
    }

    #[test]
    fn resolutions_are_complexes() {
        for (kind, n, ranks) in [
            (MatrixKind::General, 2, vec![1, 4, 6, 4, 1]),
            (MatrixKind::General, 3, vec![1, 9, 16, 9, 1]),
            (MatrixKind::Symmetric, 2, vec![1, 3, 3, 1]),
            (MatrixKind::Symmetric, 3, vec![1, 6, 8, 3]),
            (MatrixKind::Skew, 4, vec![1, 6, 15, 20, 15, 6, 1]),
        ] {
            let c = resolution(&MatrixFamily::generic(kind, n)).unwrap();
            assert_eq!(c.ranks(), ranks.as_slice(), "{kind} {n}");
            assert!(verify_complex(&c), "{kind} {n}");
        }
    }

    #[test]
    fn resolution_errors() {
        let g1 = MatrixFamily::generic(MatrixKind::General, 1);
        assert!(gn_complex(&g1).is_err());
        let s = MatrixFamily::generic(MatrixKind::Symmetric, 2);
        assert!(matches!(gn_complex(&s), Err(Error::WrongKind { .. })));
        assert!(matches!(jp_complex(&s), Err(Error::WrongKind { .. })));
        let k2 = MatrixFamily::generic(MatrixKind::Skew, 2);
        assert!(jp_complex(&k2).is_err());
    }

    #[test]
    fn generic_symmetric_two_is_acyclic() {
        let c = jozefiak_complex(&MatrixFamily::generic(MatrixKind::Symmetric, 2)).unwrap();
        let dims: Vec<Dim> = (0..=3).map(|k| homology_dimension(&c, k).unwrap()).collect();
        assert_eq!(dims, vec![Dim::Finite(1), Dim::Finite(0), Dim::Finite(0), Dim::Finite(0)]);
    }

    #[test]
    fn generic_general_two_is_acyclic() {
        let c = gn_complex(&MatrixFamily::generic(MatrixKind::General, 2)).unwrap();
        let dims: Vec<Dim> = (0..=4).map(|k| homology_dimension(&c, k).unwrap()).collect();
        assert_eq!(dims, vec![Dim::Finite(1), Dim::Finite(0), Dim::Finite(0), Dim::Finite(0), Dim::Finite(0)]);
    }

    #[test]
    fn pullback_matches_direct_construction() {
        let s = PolyMatrix::from_rows(2, vec![vec![v(2, 0), v(2, 1)], vec![v(2, 1), -&v(2, 0)]]).unwrap();
        let fam = MatrixFamily::new(MatrixKind::Symmetric, s).unwrap();
        let generic = jozefiak_complex(&MatrixFamily::generic(MatrixKind::Symmetric, 2)).unwrap();
        assert_eq!(pullback(&generic, &fam.as_map()).unwrap(), jozefiak_complex(&fam).unwrap());
        assert_eq!(pullback(&generic, &SubstitutionMap::identity(3)).unwrap(), generic);
        assert!(pullback(&generic, &SubstitutionMap::identity(2)).is_err());

        let c = jozefiak_complex(&fam).unwrap();
        assert_eq!(homology_dimension(&c, 0).unwrap(), Dim::Finite(1));
        assert_eq!(homology_dimension(&c, 1).unwrap(), Dim::Finite(1));
        assert_eq!(homology_dimension(&c, 2).unwrap(), Dim::Finite(0));
    }

    #[test]
    fn diagonal_symmetric_zeroth_homology() {
        let x = v(1, 0);
        let s = PolyMatrix::from_rows(1, vec![vec![x.clone(), Poly::zero(1)], vec![Poly::zero(1), x.pow(2)]]).unwrap();
        let c = jozefiak_complex(&MatrixFamily::new(MatrixKind::Symmetric, s).unwrap()).unwrap();
        assert_eq!(homology_dimension(&c, 0).unwrap(), Dim::Finite(1));
    }

    #[test]
    fn phi_f_commutes_for_each_kind() {
        let (x, y) = (v(2, 0), v(2, 1));
        let sym = PolyMatrix::from_rows(2, vec![vec![x.clone(), y.pow(2)], vec![y.pow(2), &x.pow(3) + &y]]).unwrap();
        let gen = PolyMatrix::from_rows(
            2,
            vec![vec![x.clone(), y.clone()], vec![&y.pow(2) + &x, x.pow(2)]],
        )
        .unwrap();
        for (kind, m) in [(MatrixKind::Symmetric, sym), (MatrixKind::General, gen)] {
            let fam = MatrixFamily::new(kind, m).unwrap();
            let phi = phi_f_family(&fam).unwrap();
            assert_eq!(phi.maps().len(), 3);
            assert!(verify_chain_map(&phi), "{kind}");
            assert_eq!(phi.maps()[0], PolyMatrix::identity(1, 2));
        }
    }

    #[test]
    fn phi_f_commutes_for_skew() {
        let m = 3;
        let x = |i| v(m, i);
        let z = Poly::zero(m);
        let entries = [x(0), x(1), x(2).pow(2), &x(2) + &x(0).pow(2), x(1).pow(3), x(0)];
        let mut s = PolyMatrix::zeros(4, 4, m);
        let mut k = 0;
        for i in 0..4 {
            s.set(i, i, z.clone());
            for j in (i + 1)..4 {
                s.set(i, j, entries[k].clone());
                s.set(j, i, -&entries[k]);
                k += 1;
            }
        }
        let fam = MatrixFamily::new(MatrixKind::Skew, s).unwrap();
        let phi = phi_f_family(&fam).unwrap();
        assert!(verify_chain_map(&phi));
        let c = cone(&phi, 3).unwrap();
        assert!(verify_complex(&c));
    }

    #[test]
    fn generic_skew_four_is_acyclic() {
        let c = jp_complex(&MatrixFamily::generic(MatrixKind::Skew, 4)).unwrap();
        let dims: Vec<Dim> = (0..=6).map(|k| homology_dimension(&c, k).unwrap()).collect();
        assert_eq!(dims[0], Dim::Finite(1));
        assert!(dims[1..].iter().all(|d| *d == Dim::Finite(0)), "{dims:?}");
    }

    #[test]
    fn phi_v_commutes() {
        let (x, y) = (v(2, 0), v(2, 1));
        let s = PolyMatrix::from_rows(2, vec![vec![x.clone(), y.clone()], vec![y.clone(), x.pow(2)]]).unwrap();
        let fam = MatrixFamily::new(MatrixKind::Symmetric, s).unwrap();
        let phi = phi_v_family(&fam).unwrap();
        assert!(verify_chain_map(&phi));
        assert!(verify_complex(phi.target()));
        let f = &x.pow(3) + &y.pow(2);
        let map = SubstitutionMap::new(2, vec![x.clone(), &y + &x.pow(2)]).unwrap();
        let phi = phi_v_general(&f, &map).unwrap();
        assert!(verify_chain_map(&phi));
        let phi = phi_f_general(&f, &map).unwrap();
        assert!(verify_chain_map(&phi));
        assert!(verify_complex(&cone(&phi, 2).unwrap()));
    }

    #[test]
    fn phi_f_rejects_wrong_function() {
        let fam = MatrixFamily::generic(MatrixKind::Symmetric, 2);
        let l = resolution(&fam).unwrap();
        assert!(phi_f(&v(3, 0), &fam.as_map(), &l, MatrixKind::Symmetric).is_err());
        let det = determinant(fam.matrix()).unwrap();
        assert!(phi_f(&det, &fam.as_map(), &l, MatrixKind::Symmetric).is_ok());
    }

    #[test]
    fn cone_of_zero_morphism() {
        let x = v(1, 0);
        let a = koszul_on(1, &[x.clone()]);
        let b = koszul_on(1, &[x.pow(2)]);
        let phi = ComplexMorphism::new(a, b, vec![PolyMatrix::zeros(1, 1, 1), PolyMatrix::zeros(1, 1, 1)]).unwrap();
        let c = cone(&phi, 2).unwrap();
        assert_eq!(c.ranks(), &[1, 2, 1]);
        assert_eq!(c.differential(1), &PolyMatrix::from_rows(1, vec![vec![Poly::zero(1), x.pow(2)]]).unwrap());
        assert_eq!(c.differential(2), &PolyMatrix::from_columns(2, 1, &[vec![-&x, Poly::zero(1)]]));
        assert!(verify_complex(&c));
        assert!(matches!(cone(&phi, 3), Err(Error::InsufficientMorphism { .. })));
    }

    #[test]
    fn euler_characteristic_sums() {
        assert_eq!(euler_characteristic(&[Dim::Finite(3), Dim::Finite(1)]), Some(2));
        assert_eq!(euler_characteristic(&[Dim::Finite(3), Dim::Infinite]), None);
    }
}
