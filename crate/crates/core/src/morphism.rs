//! Morphisms between bicrossed products.
//!
//! A Hopf algebra map `A ⋈ H → A' ⋈ H'` corresponds to a quadruple of
//! unitary coalgebra maps `u: A → A'`, `p: A → H'`, `r: H → A'`,
//! `v: H → H'` subject to eight compatibility conditions (see
//! [`solve_quadruples`]). The map itself is
//! `ψ(a ⋈ h) = u(a₁)(p(a₂) ⊳' r(h₁)) ⋈' (p(a₃) ⊲' r(h₂)) v(h₃)`.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::bicrossed::bicrossed_product;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::{HopfAlgebra, Violation};
use crate::linalg::{Matrix, SubspaceBasis, Vector};
use crate::matched_pair::{Action, MatchedPair};
use crate::presets::sweedler_h4;
use crate::probe::{group_likes, skew_primitives, SCAN_LIMIT};
use crate::report::{Check, Report};

/// `f(1) = 1`, `ε∘f = ε` and `Δ∘f = (f ⊗ f)∘Δ`.
pub fn is_unitary_coalgebra_map(src: &HopfAlgebra, dst: &HopfAlgebra, f: &Matrix) -> bool {
    if f.rows() != dst.dim() || f.cols() != src.dim() || f.apply(src.unit()) != *dst.unit() {
        return false;
    }
    (0..src.dim()).all(|j| {
        let img = f.column(j);
        if dst.counit_of(&img) != src.counit()[j] {
            return false;
        }
        let mut rhs = Matrix::zeros(src.field(), dst.dim(), dst.dim());
        for (j1, j2, c) in src.coproduct_terms(j) {
            rhs.add_scaled(c, &f.column(*j1).outer(&f.column(*j2)));
        }
        dst.comul(&img) == rhs
    })
}

/// `f(1) = 1` and `f(xy) = f(x) f(y)` on basis pairs.
pub fn is_algebra_map(src: &HopfAlgebra, dst: &HopfAlgebra, f: &Matrix) -> bool {
    f.apply(src.unit()) == *dst.unit()
        && (0..src.dim())
            .all(|i| (0..src.dim()).all(|j| f.apply(&src.mul_basis(i, j)) == dst.mul(&f.column(i), &f.column(j))))
}

/// Hopf algebra maps `src → dst` over `F_p`: the coalgebra maps that are
/// also multiplicative. Same restrictions on `src` as [`coalgebra_maps`].
pub fn hopf_morphisms(src: &HopfAlgebra, dst: &HopfAlgebra) -> Result<Vec<Matrix>> {
    Ok(coalgebra_maps(src, dst)?.into_iter().filter(|m| is_algebra_map(src, dst, m)).collect())
}

/// The map `x ↦ ε(x) 1`.
pub fn trivial_map(src: &HopfAlgebra, dst: &HopfAlgebra) -> Matrix {
    Matrix::from_fn(src.field(), dst.dim(), src.dim(), |i, j| &dst.unit()[i] * &src.counit()[j])
}

/// A basis of `src` made of group-likes and skew-primitives, with the pair
/// of group-likes (indices into `gl`) each skew-primitive is attached to.
struct AdaptedBasis {
    gl: Vec<Vector>,
    skew: Vec<(Vector, usize, usize)>,
}

fn adapted_basis(src: &HopfAlgebra) -> Result<AdaptedBasis> {
    let gl = group_likes(src, None)?;
    let mut span = SubspaceBasis::span(src.field(), src.dim(), gl.clone());
    let mut skew = Vec::new();
    for a in 0..gl.len() {
        for b in 0..gl.len() {
            for v in skew_primitives(src, &gl[a], &gl[b])?.vectors() {
                if !span.contains(v) {
                    skew.push((v.clone(), a, b));
                    let mut vs = span.vectors().to_vec();
                    vs.push(v.clone());
                    span = SubspaceBasis::span(src.field(), src.dim(), vs);
                }
            }
        }
    }
    if span.dim() != src.dim() {
        return Err(Error::Unsupported(format!(
            "group-likes and skew-primitives span only {} of {} dimensions",
            span.dim(),
            src.dim()
        )));
    }
    Ok(AdaptedBasis { gl, skew })
}

/// Every unitary coalgebra map `src → dst` over `F_p`.
///
/// `src` must be spanned by group-likes and skew-primitives (true for
/// pointed algebras of coradical filtration length two, such as `H₄`).
/// A coalgebra map sends group-likes to group-likes and `P_{a,b}` into
/// `P_{f(a),f(b)}`, so the maps are enumerated by choosing those images on
/// an adapted basis. Each result is re-checked.
pub fn coalgebra_maps(src: &HopfAlgebra, dst: &HopfAlgebra) -> Result<Vec<Matrix>> {
    if src.field() != dst.field() {
        return Err(Error::FieldMismatch(src.field(), dst.field()));
    }
    let field = src.field();
    let basis = adapted_basis(src)?;
    let gl_dst = group_likes(dst, None)?;
    let unit_src = basis
        .gl
        .iter()
        .position(|v| v == src.unit())
        .ok_or_else(|| Error::Internal("unit is not group-like".into()))?;
    let unit_dst =
        gl_dst.iter().position(|v| v == dst.unit()).ok_or_else(|| Error::Internal("unit is not group-like".into()))?;

    let mut columns = basis.gl.clone();
    columns.extend(basis.skew.iter().map(|(v, _, _)| v.clone()));
    let b_inv = Matrix::from_columns(field, src.dim(), &columns)
        .inverse()
        .ok_or_else(|| Error::Internal("adapted basis is singular".into()))?;

    let mut prim_cache: HashMap<(usize, usize), Vec<Vector>> = HashMap::new();
    let mut out = Vec::new();
    let mut visited: u64 = 0;
    let ng = basis.gl.len();
    for phi in assignments(ng, gl_dst.len()) {
        if phi[unit_src] != unit_dst {
            continue;
        }
        let mut choices: Vec<Vec<Vector>> = Vec::new();
        for (_, a, b) in &basis.skew {
            let key = (phi[*a], phi[*b]);
            let elems = match prim_cache.entry(key) {
                Entry::Occupied(e) => e.into_mut(),
                Entry::Vacant(e) => e.insert(skew_primitives(dst, &gl_dst[key.0], &gl_dst[key.1])?.elements()),
            };
            choices.push(elems.clone());
        }
        let sizes: Vec<usize> = choices.iter().map(Vec::len).collect();
        for pick in assignments_with_sizes(&sizes) {
            visited += 1;
            if visited > SCAN_LIMIT {
                return Err(Error::ScanBound { limit: SCAN_LIMIT });
            }
            let mut images: Vec<Vector> = phi.iter().map(|&g| gl_dst[g].clone()).collect();
            images.extend(pick.iter().enumerate().map(|(s, &c)| choices[s][c].clone()));
            let f = Matrix::from_columns(field, dst.dim(), &images).compose(&b_inv);
            if !is_unitary_coalgebra_map(src, dst, &f) {
                return Err(Error::Internal("enumerated map is not a coalgebra map".into()));
            }
            out.push(f);
        }
    }
    Ok(out)
}

/// All functions `{0..len} → {0..n}` in lexicographic order.
fn assignments(len: usize, n: usize) -> Vec<Vec<usize>> {
    assignments_with_sizes(&vec![n; len])
}

fn assignments_with_sizes(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &s in sizes {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..s).map(move |c| {
                    let mut p = prefix.clone();
                    p.push(c);
                    p
                })
            })
            .collect();
    }
    out
}

/// A unitary coalgebra endomorphism of `H₄`: either trivial, or
/// `g ↦ g`, `x ↦ α - αg + βx`, `gx ↦ γ - γg + δ gx`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoalgebraMap {
    #[serde(skip)]
    pub matrix: Matrix,
    pub parameters: Option<[Scalar; 4]>,
}

/// Reads `(α, β, γ, δ)` off a map in the parametric family on `(1, g, x, gx)`.
pub fn h4_map_parameters(m: &Matrix) -> Option<[Scalar; 4]> {
    let f = m.field();
    let z = f.zero();
    let col = |j: usize| m.column(j);
    if col(0) != Vector::unit(f, 4, 0) || col(1) != Vector::unit(f, 4, 1) {
        return None;
    }
    let (x, gx) = (col(2), col(3));
    let alpha = x[0].clone();
    let gamma = gx[0].clone();
    let x_ok = x[1] == -&alpha && x[3] == z;
    let gx_ok = gx[1] == -&gamma && gx[2] == z;
    (x_ok && gx_ok).then(|| [alpha, x[2].clone(), gamma, gx[3].clone()])
}

/// Unitary coalgebra endomorphisms of `H₄` over `F_p`: the trivial map and
/// `p⁴` parametric ones.
pub fn unitary_coalgebra_maps(p: u64) -> Result<Vec<CoalgebraMap>> {
    let field = Field::prime(p)?;
    let h = sweedler_h4(field)?;
    Ok(coalgebra_maps(&h, &h)?
        .into_iter()
        .map(|matrix| CoalgebraMap { parameters: h4_map_parameters(&matrix), matrix })
        .collect())
}

/// A candidate morphism `A ⋈ H → A' ⋈ H'`, with its assembled matrix once
/// computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadruple {
    pub u: Matrix,
    pub p: Matrix,
    pub r: Matrix,
    pub v: Matrix,
}

/// Columns of a map, so conditions can look images up instead of applying.
struct Cols(Vec<Vector>);

impl Cols {
    fn of(m: &Matrix) -> Self {
        Cols((0..m.cols()).map(|j| m.column(j)).collect())
    }

    fn apply(&self, v: &Vector, dim: usize, field: Field) -> Vector {
        let mut out = Vector::zeros(field, dim);
        for (i, c) in v.support() {
            out.add_scaled(c, &self.0[i]);
        }
        out
    }
}

/// Everything the conditions need about the source and target pairs.
struct Setting<'a> {
    src: &'a MatchedPair,
    dst: &'a MatchedPair,
    field: Field,
}

impl Setting<'_> {
    fn a(&self) -> &HopfAlgebra {
        self.src.a()
    }
    fn h(&self) -> &HopfAlgebra {
        self.src.h()
    }
    fn a2(&self) -> &HopfAlgebra {
        self.dst.a()
    }
    fn h2(&self) -> &HopfAlgebra {
        self.dst.h()
    }
    fn left2(&self) -> &Action {
        self.dst.left()
    }
    fn right2(&self) -> &Action {
        self.dst.right()
    }

    /// `f(x₁) ⊗ k(x₂) = f(x₂) ⊗ k(x₁)` for every basis `x` of `alg` (C1, C2).
    fn symmetric(&self, alg: &HopfAlgebra, f: &Cols, k: &Cols) -> bool {
        (0..alg.dim()).all(|i| {
            let terms = alg.coproduct_terms(i);
            let (rows, cols) = (f.0[0].len(), k.0[0].len());
            let mut l = Matrix::zeros(self.field, rows, cols);
            let mut r = Matrix::zeros(self.field, rows, cols);
            for (x1, x2, c) in terms {
                l.add_scaled(c, &f.0[*x1].outer(&k.0[*x2]));
                r.add_scaled(c, &f.0[*x2].outer(&k.0[*x1]));
            }
            l == r
        })
    }

    /// C3: `u(ab) = u(a₁)(p(a₂) ⊳' u(b))`.
    fn c3(&self, u: &Cols, p: &Cols) -> bool {
        let (a, a2) = (self.a(), self.a2());
        (0..a.dim()).all(|x| {
            (0..a.dim()).all(|y| {
                let lhs = u.apply(&a.mul_basis(x, y), a2.dim(), self.field);
                let mut rhs = a2.zero_vector();
                for (x1, x2, c) in a.coproduct_terms(x) {
                    let t = self.left2().apply(&p.0[*x2], &u.0[y]);
                    rhs.add_scaled(c, &a2.mul(&u.0[*x1], &t));
                }
                lhs == rhs
            })
        })
    }

    /// C4: `p(ab) = (p(a) ⊲' u(b₁)) p(b₂)`.
    fn c4(&self, u: &Cols, p: &Cols) -> bool {
        let (a, h2) = (self.a(), self.h2());
        (0..a.dim()).all(|x| {
            (0..a.dim()).all(|y| {
                let lhs = p.apply(&a.mul_basis(x, y), h2.dim(), self.field);
                let mut rhs = h2.zero_vector();
                for (y1, y2, c) in a.coproduct_terms(y) {
                    let t = self.right2().apply(&p.0[x], &u.0[*y1]);
                    rhs.add_scaled(c, &h2.mul(&t, &p.0[*y2]));
                }
                lhs == rhs
            })
        })
    }

    /// C5: `r(hg) = r(h₁)(v(h₂) ⊳' r(g))`.
    fn c5(&self, r: &Cols, v: &Cols) -> bool {
        let (h, a2) = (self.h(), self.a2());
        (0..h.dim()).all(|x| {
            (0..h.dim()).all(|y| {
                let lhs = r.apply(&h.mul_basis(x, y), a2.dim(), self.field);
                let mut rhs = a2.zero_vector();
                for (x1, x2, c) in h.coproduct_terms(x) {
                    let t = self.left2().apply(&v.0[*x2], &r.0[y]);
                    rhs.add_scaled(c, &a2.mul(&r.0[*x1], &t));
                }
                lhs == rhs
            })
        })
    }

    /// C6: `v(hg) = (v(h) ⊲' r(g₁)) v(g₂)`.
    fn c6(&self, r: &Cols, v: &Cols) -> bool {
        let (h, h2) = (self.h(), self.h2());
        (0..h.dim()).all(|x| {
            (0..h.dim()).all(|y| {
                let lhs = v.apply(&h.mul_basis(x, y), h2.dim(), self.field);
                let mut rhs = h2.zero_vector();
                for (y1, y2, c) in h.coproduct_terms(y) {
                    let t = self.right2().apply(&v.0[x], &r.0[*y1]);
                    rhs.add_scaled(c, &h2.mul(&t, &v.0[*y2]));
                }
                lhs == rhs
            })
        })
    }

    /// C7 and C8, the conditions coupling `(u, p)` with `(r, v)`.
    fn c7_c8(&self, u: &Cols, p: &Cols, r: &Cols, v: &Cols, triple: &Triples) -> bool {
        let (a, h, a2, h2) = (self.a(), self.h(), self.a2(), self.h2());
        let f = self.field;
        for hi in 0..h.dim() {
            for b in 0..a.dim() {
                let terms = &triple.0[hi * a.dim() + b];
                // C7: r(h₁)(v(h₂) ⊳' u(b)) = u(h₁ ⊳ b₁)(p(h₂ ⊳ b₂) ⊳' r(h₃ ⊲ b₃))
                let mut lhs = a2.zero_vector();
                for (h1, h2i, c) in h.coproduct_terms(hi) {
                    let t = self.left2().apply(&v.0[*h2i], &u.0[b]);
                    lhs.add_scaled(c, &a2.mul(&r.0[*h1], &t));
                }
                let mut rhs = a2.zero_vector();
                for (x, y, z, c) in terms {
                    let t = self.left2().apply(&p.apply(y, h2.dim(), f), &r.apply(z, a2.dim(), f));
                    rhs.add_scaled(c, &a2.mul(&u.apply(x, a2.dim(), f), &t));
                }
                if lhs != rhs {
                    return false;
                }
                // C8: (v(h) ⊲' u(b₁)) p(b₂) = (p(h₁ ⊳ b₁) ⊲' r(h₂ ⊲ b₂)) v(h₃ ⊲ b₃)
                let mut lhs = h2.zero_vector();
                for (b1, b2, c) in a.coproduct_terms(b) {
                    let t = self.right2().apply(&v.0[hi], &u.0[*b1]);
                    lhs.add_scaled(c, &h2.mul(&t, &p.0[*b2]));
                }
                let mut rhs = h2.zero_vector();
                for (x, y, z, c) in &triple.1[hi * a.dim() + b] {
                    let t = self.right2().apply(&p.apply(x, h2.dim(), f), &r.apply(y, a2.dim(), f));
                    rhs.add_scaled(c, &h2.mul(&t, &v.apply(z, h2.dim(), f)));
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

type Triple = Vec<(Vector, Vector, Vector, Scalar)>;

/// For each basis pair `(h, b)` of the source: the terms
/// `(h₁ ⊳ b₁, h₂ ⊳ b₂, h₃ ⊲ b₃)` used by C7 and `(h₁ ⊳ b₁, h₂ ⊲ b₂, h₃ ⊲ b₃)`
/// used by C8.
struct Triples(Vec<Triple>, Vec<Triple>);

impl Triples {
    fn new(src: &MatchedPair) -> Self {
        let (a, h) = (src.a(), src.h());
        let mut c7 = Vec::new();
        let mut c8 = Vec::new();
        for hi in 0..h.dim() {
            let dh = h.coproduct2_terms(hi);
            for b in 0..a.dim() {
                let db = a.coproduct2_terms(b);
                let mut t7 = Vec::new();
                let mut t8 = Vec::new();
                for (h1, h2, h3, c) in &dh {
                    for (b1, b2, b3, d) in &db {
                        let cd = c * d;
                        let l1 = src.act_left(*h1, *b1);
                        if l1.is_zero() {
                            continue;
                        }
                        let l2 = src.act_left(*h2, *b2);
                        let r2 = src.act_right(*h2, *b2);
                        let r3 = src.act_right(*h3, *b3);
                        if !l2.is_zero() && !r3.is_zero() {
                            t7.push((l1.clone(), l2, r3.clone(), cd.clone()));
                        }
                        if !r2.is_zero() && !r3.is_zero() {
                            t8.push((l1, r2, r3, cd));
                        }
                    }
                }
                c7.push(t7);
                c8.push(t8);
            }
        }
        Triples(c7, c8)
    }
}

fn check_pairs(src: &MatchedPair, dst: &MatchedPair) -> Result<Field> {
    if !src.is_verified() || !dst.is_verified() {
        return Err(Error::UnverifiedPair);
    }
    if src.field() != dst.field() {
        return Err(Error::FieldMismatch(src.field(), dst.field()));
    }
    if src.field().order().is_none() {
        return Err(Error::NeedsPrimeField(src.field()));
    }
    Ok(src.field())
}

/// All quadruples `(u, p, r, v)` of unitary coalgebra maps satisfying
///
/// * C1 `u(a₁) ⊗ p(a₂) = u(a₂) ⊗ p(a₁)`
/// * C2 `r(h₁) ⊗ v(h₂) = r(h₂) ⊗ v(h₁)`
/// * C3 `u(ab) = u(a₁)(p(a₂) ⊳' u(b))`
/// * C4 `p(ab) = (p(a) ⊲' u(b₁)) p(b₂)`
/// * C5 `r(hg) = r(h₁)(v(h₂) ⊳' r(g))`
/// * C6 `v(hg) = (v(h) ⊲' r(g₁)) v(g₂)`
/// * C7 `r(h₁)(v(h₂) ⊳' u(b)) = u(h₁ ⊳ b₁)(p(h₂ ⊳ b₂) ⊳' r(h₃ ⊲ b₃))`
/// * C8 `(v(h) ⊲' u(b₁)) p(b₂) = (p(h₁ ⊳ b₁) ⊲' r(h₂ ⊲ b₂)) v(h₃ ⊲ b₃)`
///
/// Solved in stages: `(u, p)` by C1, C3, C4; `(r, v)` by C2, C5, C6; then
/// the combinations by C7, C8.
pub fn solve_quadruples(src: &MatchedPair, dst: &MatchedPair) -> Result<Vec<Quadruple>> {
    MorphismSolver::default().solve(src, dst)
}

/// Caches coalgebra map enumerations between algebras across solves.
#[derive(Default)]
pub struct MorphismSolver {
    maps: Vec<(HopfAlgebra, HopfAlgebra, std::sync::Arc<Vec<Matrix>>)>,
}

impl MorphismSolver {
    pub fn new() -> Self {
        Self::default()
    }

    fn maps(&mut self, src: &HopfAlgebra, dst: &HopfAlgebra) -> Result<std::sync::Arc<Vec<Matrix>>> {
        if let Some((_, _, m)) = self.maps.iter().find(|(s, d, _)| s == src && d == dst) {
            return Ok(m.clone());
        }
        let m = std::sync::Arc::new(coalgebra_maps(src, dst)?);
        self.maps.push((src.clone(), dst.clone(), m.clone()));
        Ok(m)
    }

    pub fn solve(&mut self, src: &MatchedPair, dst: &MatchedPair) -> Result<Vec<Quadruple>> {
        let field = check_pairs(src, dst)?;
        let us = self.maps(src.a(), dst.a())?;
        let ps = self.maps(src.a(), dst.h())?;
        let rs = self.maps(src.h(), dst.a())?;
        let vs = self.maps(src.h(), dst.h())?;
        let setting = Setting { src, dst, field };
        let cols = |ms: &[Matrix]| ms.iter().map(Cols::of).collect::<Vec<_>>();
        let (uc, pc, rc, vc) = (cols(&us), cols(&ps), cols(&rs), cols(&vs));

        let stage_a: Vec<(usize, usize)> = (0..uc.len())
            .into_par_iter()
            .flat_map_iter(|i| {
                let setting = &setting;
                let (uc, pc) = (&uc, &pc);
                (0..pc.len())
                    .filter(move |&j| {
                        setting.symmetric(setting.a(), &uc[i], &pc[j])
                            && setting.c3(&uc[i], &pc[j])
                            && setting.c4(&uc[i], &pc[j])
                    })
                    .map(move |j| (i, j))
            })
            .collect();
        let stage_b: Vec<(usize, usize)> = (0..rc.len())
            .into_par_iter()
            .flat_map_iter(|i| {
                let setting = &setting;
                let (rc, vc) = (&rc, &vc);
                (0..vc.len())
                    .filter(move |&j| {
                        setting.symmetric(setting.h(), &rc[i], &vc[j])
                            && setting.c5(&rc[i], &vc[j])
                            && setting.c6(&rc[i], &vc[j])
                    })
                    .map(move |j| (i, j))
            })
            .collect();
        let triples = Triples::new(src);
        let solved: Vec<Quadruple> = stage_a
            .par_iter()
            .flat_map_iter(|&(ui, pi)| {
                let (setting, triples) = (&setting, &triples);
                let (uc, pc, rc, vc) = (&uc, &pc, &rc, &vc);
                let (us, ps, rs, vs) = (&us, &ps, &rs, &vs);
                stage_b.iter().filter(move |&&(ri, vi)| setting.c7_c8(&uc[ui], &pc[pi], &rc[ri], &vc[vi], triples)).map(
                    move |&(ri, vi)| Quadruple {
                        u: us[ui].clone(),
                        p: ps[pi].clone(),
                        r: rs[ri].clone(),
                        v: vs[vi].clone(),
                    },
                )
            })
            .collect();
        Ok(solved)
    }
}

/// `ψ(a ⋈ h) = u(a₁)(p(a₂) ⊳' r(h₁)) ⋈' (p(a₃) ⊲' r(h₂)) v(h₃)` as a matrix
/// on the `A`-major bases. Does not check that the result is a morphism.
pub fn assemble_morphism(q: &Quadruple, src: &MatchedPair, dst: &MatchedPair) -> Matrix {
    let (a, h, a2, h2) = (src.a(), src.h(), dst.a(), dst.h());
    let field = src.field();
    let n_src = a.dim() * h.dim();
    let n_dst = a2.dim() * h2.dim();
    let columns: Vec<Vector> = (0..n_src)
        .map(|k| {
            let (ai, hi) = (k / h.dim(), k % h.dim());
            let mut out = Vector::zeros(field, n_dst);
            for (a1, a2i, a3, c) in a.coproduct2_terms(ai) {
                let ua = q.u.column(a1);
                let pa2 = q.p.column(a2i);
                let pa3 = q.p.column(a3);
                for (h1, h2i, h3, d) in h.coproduct2_terms(hi) {
                    let left = a2.mul(&ua, &dst.left().apply(&pa2, &q.r.column(h1)));
                    let right = h2.mul(&dst.right().apply(&pa3, &q.r.column(h2i)), &q.v.column(h3));
                    out.add_scaled(&(&c * &d), &left.kron(&right));
                }
            }
            out
        })
        .collect();
    Matrix::from_columns(field, n_dst, &columns)
}

/// Unit, counit, multiplicativity and comultiplicativity of `psi` on bases.
pub fn check_bialgebra_map(src: &HopfAlgebra, dst: &HopfAlgebra, psi: &Matrix) -> Report {
    let mut report = Report::default();
    let name = |i: usize| src.basis_names()[i].clone();
    let mut unit = Vec::new();
    let got = psi.apply(src.unit());
    if got != *dst.unit() {
        unit.push(Violation { basis: vec![name(0)], detail: format!("1 maps to {}", dst.format_vector(&got)) });
    }
    let cols: Vec<Vector> = (0..src.dim()).map(|j| psi.column(j)).collect();
    let mut counit = Vec::new();
    let mut comult = Vec::new();
    for j in 0..src.dim() {
        let e = dst.counit_of(&cols[j]);
        if e != src.counit()[j] {
            counit.push(Violation { basis: vec![name(j)], detail: format!("got {e}, expected {}", src.counit()[j]) });
        }
        let mut rhs = Matrix::zeros(src.field(), dst.dim(), dst.dim());
        for (j1, j2, c) in src.coproduct_terms(j) {
            rhs.add_scaled(c, &cols[*j1].outer(&cols[*j2]));
        }
        let lhs = dst.comul(&cols[j]);
        if lhs != rhs {
            comult.push(Violation {
                basis: vec![name(j)],
                detail: format!(
                    "got {}, expected {}",
                    HopfAlgebra::format_tensor(dst, dst, &lhs),
                    HopfAlgebra::format_tensor(dst, dst, &rhs)
                ),
            });
        }
    }
    let mult: Vec<Violation> = (0..src.dim())
        .into_par_iter()
        .flat_map_iter(|i| {
            let cols = &cols;
            (0..src.dim()).filter_map(move |j| {
                let lhs = psi.apply(&src.mul_basis(i, j));
                let rhs = dst.mul(&cols[i], &cols[j]);
                (lhs != rhs).then(|| Violation {
                    basis: vec![name(i), name(j)],
                    detail: format!("got {}, expected {}", dst.format_vector(&lhs), dst.format_vector(&rhs)),
                })
            })
        })
        .collect();
    report.push(Check::new("unit", unit));
    report.push(Check::new("counit", counit));
    report.push(Check::new("multiplication", mult));
    report.push(Check::new("comultiplication", comult));
    report
}

/// [`assemble_morphism`] followed by the bialgebra check; a failure means
/// the quadruple was not a genuine solution.
pub fn assemble_checked(
    q: &Quadruple,
    src: &MatchedPair,
    dst: &MatchedPair,
    e: &HopfAlgebra,
    f: &HopfAlgebra,
) -> Result<Matrix> {
    let psi = assemble_morphism(q, src, dst);
    let report = check_bialgebra_map(e, f, &psi);
    match report.first_failure() {
        None => Ok(psi),
        Some((check, v)) => {
            Err(Error::Internal(format!("assembled map fails {check} at ({}): {}", v.basis.join(", "), v.detail)))
        }
    }
}

pub fn is_bijective(m: &Matrix) -> bool {
    m.rows() == m.cols() && m.rank() == m.rows()
}

#[derive(Clone, Debug, Serialize)]
pub struct Isomorphism {
    pub isomorphic: bool,
    #[serde(skip)]
    pub witness: Option<(Quadruple, Matrix)>,
    pub quadruples: usize,
}

/// Searches the solved quadruples for one assembling to a bijection.
pub fn are_isomorphic(src: &MatchedPair, dst: &MatchedPair) -> Result<Isomorphism> {
    MorphismSolver::default().are_isomorphic(src, dst)
}

impl MorphismSolver {
    pub fn are_isomorphic(&mut self, src: &MatchedPair, dst: &MatchedPair) -> Result<Isomorphism> {
        let qs = self.solve(src, dst)?;
        let (e, f) = (bicrossed_product(src)?, bicrossed_product(dst)?);
        for q in &qs {
            let psi = assemble_checked(q, src, dst, &e, &f)?;
            if is_bijective(&psi) {
                return Ok(Isomorphism { isomorphic: true, witness: Some((q.clone(), psi)), quadruples: qs.len() });
            }
        }
        Ok(Isomorphism { isomorphic: false, witness: None, quadruples: qs.len() })
    }

    /// Partitions `pairs` into isomorphism classes of their bicrossed
    /// products, in order of first appearance.
    pub fn iso_classes(&mut self, pairs: &[MatchedPair]) -> Result<Vec<Vec<usize>>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        'next: for (i, p) in pairs.iter().enumerate() {
            for class in classes.iter_mut() {
                if self.are_isomorphic(&pairs[class[0]], p)?.isomorphic {
                    class.push(i);
                    continue 'next;
                }
            }
            classes.push(vec![i]);
        }
        Ok(classes)
    }
}

/// Shape of an automorphism in terms of its quadruple.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AutKind {
    /// `u`, `v` nontrivial, `p`, `r` trivial; `u(X) = αX`, `v(x) = βx`.
    Diagonal,
    /// `p`, `r` nontrivial, `u`, `v` trivial; `p(X) = αx`, `r(x) = βX`.
    Swap,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AutLabel {
    pub kind: AutKind,
    pub alpha: Option<Scalar>,
    pub beta: Option<Scalar>,
}

impl fmt::Display for AutLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |x: &Option<Scalar>| x.as_ref().map(|v| v.to_string()).unwrap_or_else(|| "?".into());
        match self.kind {
            AutKind::Diagonal => write!(f, "φ({},{})", s(&self.alpha), s(&self.beta)),
            AutKind::Swap => write!(f, "ψ({},{})", s(&self.alpha), s(&self.beta)),
            AutKind::Other => f.write_str("other"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Automorphism {
    pub label: AutLabel,
    pub order: usize,
    #[serde(skip)]
    pub quadruple: Quadruple,
    #[serde(skip)]
    pub matrix: Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Parametrization {
    /// Every element has `β = α⁻¹`.
    OneParameter,
    TwoParameter,
    Unrecognized,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupReport {
    pub order: usize,
    pub abelian: bool,
    pub involutions: usize,
    pub parametrization: Parametrization,
    /// Products checked against the composition rules of the families.
    pub relations_checked: usize,
    pub relations_verified: bool,
    pub elements: Vec<Automorphism>,
}

impl GroupReport {
    pub fn identity_index(&self) -> Option<usize> {
        self.elements.iter().position(|e| e.order == 1)
    }

    /// `label(x∘y)` for every pair of labels.
    pub fn table_by_label(&self) -> Result<HashMap<(AutLabel, AutLabel), AutLabel>> {
        let index: HashMap<&Matrix, usize> = self.elements.iter().enumerate().map(|(i, e)| (&e.matrix, i)).collect();
        let mut out = HashMap::new();
        for x in &self.elements {
            for y in &self.elements {
                let z = x.matrix.compose(&y.matrix);
                let k = index.get(&z).ok_or_else(|| Error::Internal("composition escapes the group".into()))?;
                out.insert((x.label.clone(), y.label.clone()), self.elements[*k].label.clone());
            }
        }
        Ok(out)
    }
}

fn is_trivial_map(m: &Matrix, src: &HopfAlgebra, dst: &HopfAlgebra) -> bool {
    *m == trivial_map(src, dst)
}

fn label_of(q: &Quadruple, pair: &MatchedPair) -> AutLabel {
    let (a, h) = (pair.a(), pair.h());
    let tu = is_trivial_map(&q.u, a, a);
    let tp = is_trivial_map(&q.p, a, h);
    let tr = is_trivial_map(&q.r, h, a);
    let tv = is_trivial_map(&q.v, h, h);
    let (ix, ih) = match (a.index_of("X"), h.index_of("x")) {
        (Some(ix), Some(ih)) => (ix, ih),
        _ => return AutLabel { kind: AutKind::Other, alpha: None, beta: None },
    };
    if !tu && !tv && tp && tr {
        AutLabel { kind: AutKind::Diagonal, alpha: Some(q.u.get(ix, ix).clone()), beta: Some(q.v.get(ih, ih).clone()) }
    } else if tu && tv && !tp && !tr {
        AutLabel { kind: AutKind::Swap, alpha: Some(q.p.get(ih, ix).clone()), beta: Some(q.r.get(ix, ih).clone()) }
    } else {
        AutLabel { kind: AutKind::Other, alpha: None, beta: None }
    }
}

/// The label the composition rules predict for `x∘y`:
/// `φ(α,β)φ(γ,δ) = φ(αγ,βδ)`, `ψ(α,β)ψ(γ,δ) = φ(βγ,αδ)`,
/// `ψ(α,β)φ(γ,δ) = ψ(αγ,βδ)`, `φ(α,β)ψ(γ,δ) = ψ(βγ,αδ)`.
/// With `β = α⁻¹` these specialize to `ψ_α ψ_γ = φ_{α⁻¹γ}`,
/// `φ_α φ_γ = φ_{αγ}`, `ψ_α φ_γ = ψ_{αγ}`, `φ_α ψ_γ = ψ_{α⁻¹γ}`.
pub fn predicted_composition(x: &AutLabel, y: &AutLabel) -> Option<AutLabel> {
    let (a, b) = (x.alpha.as_ref()?, x.beta.as_ref()?);
    let (c, d) = (y.alpha.as_ref()?, y.beta.as_ref()?);
    let (kind, alpha, beta) = match (&x.kind, &y.kind) {
        (AutKind::Diagonal, AutKind::Diagonal) => (AutKind::Diagonal, a * c, b * d),
        (AutKind::Swap, AutKind::Swap) => (AutKind::Diagonal, b * c, a * d),
        (AutKind::Swap, AutKind::Diagonal) => (AutKind::Swap, a * c, b * d),
        (AutKind::Diagonal, AutKind::Swap) => (AutKind::Swap, b * c, a * d),
        _ => return None,
    };
    Some(AutLabel { kind, alpha: Some(alpha), beta: Some(beta) })
}

/// Bijective Hopf endomorphisms of `A ⋈ H`, checked to form a group, with
/// the family labels and their composition rules verified.
pub fn automorphism_group(pair: &MatchedPair) -> Result<GroupReport> {
    MorphismSolver::default().automorphism_group(pair)
}

impl MorphismSolver {
    pub fn automorphism_group(&mut self, pair: &MatchedPair) -> Result<GroupReport> {
        let qs = self.solve(pair, pair)?;
        let e = bicrossed_product(pair)?;
        let mut elements = Vec::new();
        for q in qs {
            let psi = assemble_checked(&q, pair, pair, &e, &e)?;
            if is_bijective(&psi) {
                elements.push((q, psi));
            }
        }
        let n = e.dim();
        let id = Matrix::identity(e.field(), n);
        let index: HashMap<Matrix, usize> = elements.iter().enumerate().map(|(i, (_, m))| (m.clone(), i)).collect();
        if !index.contains_key(&id) {
            return Err(Error::Internal("identity is not among the automorphisms".into()));
        }
        let mut abelian = true;
        let mut products = vec![vec![0usize; elements.len()]; elements.len()];
        for (i, (_, x)) in elements.iter().enumerate() {
            for (j, (_, y)) in elements.iter().enumerate() {
                let z = x.compose(y);
                let k =
                    *index.get(&z).ok_or_else(|| Error::Internal("composition escapes the enumerated set".into()))?;
                products[i][j] = k;
                if abelian && z != y.compose(x) {
                    abelian = false;
                }
            }
        }
        let id_idx = index[&id];
        let orders: Vec<usize> = (0..elements.len())
            .map(|i| {
                let (mut k, mut cur) = (1, i);
                while cur != id_idx {
                    cur = products[cur][i];
                    k += 1;
                }
                k
            })
            .collect();
        let labels: Vec<AutLabel> = elements.iter().map(|(q, _)| label_of(q, pair)).collect();

        let all_labelled = labels.iter().all(|l| l.kind != AutKind::Other);
        let parametrization = if !all_labelled {
            Parametrization::Unrecognized
        } else if labels.iter().all(|l| {
            let (a, b) = (l.alpha.as_ref().unwrap(), l.beta.as_ref().unwrap());
            (a * b).is_one()
        }) {
            Parametrization::OneParameter
        } else {
            Parametrization::TwoParameter
        };
        let mut relations_checked = 0;
        let mut relations_verified = all_labelled;
        if all_labelled {
            for i in 0..labels.len() {
                for j in 0..labels.len() {
                    relations_checked += 1;
                    if predicted_composition(&labels[i], &labels[j]).as_ref() != Some(&labels[products[i][j]]) {
                        relations_verified = false;
                    }
                }
            }
        }
        let involutions = orders.iter().filter(|&&o| o == 2).count();
        let elements = elements
            .into_iter()
            .zip(labels)
            .zip(&orders)
            .map(|(((quadruple, matrix), label), &order)| Automorphism { label, order, quadruple, matrix })
            .collect::<Vec<_>>();
        Ok(GroupReport {
            order: elements.len(),
            abelian,
            involutions,
            parametrization,
            relations_checked,
            relations_verified,
            elements,
        })
    }
}
