//! Matched pairs `(A, H, ⊳, ⊲)`: a left action `⊳ : H ⊗ A → A` and a right
//! action `⊲ : H ⊗ A → H`, both module coalgebra structures, subject to the
//! four compatibility conditions checked by [`check_matched_pair`].

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::{HopfAlgebra, Violation};
use crate::linalg::{Matrix, Tensor3, Vector};
use crate::morphism::coalgebra_maps;
use crate::presets::{sweedler_h4, sweedler_h4_capital};
use crate::report::{Check, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    Left,
    Right,
}

/// A bilinear map `H ⊗ A → target`, stored as `table[h][a][k]`. The target
/// is `A` for a left action `h ⊳ a` and `H` for a right action `h ⊲ a`.
#[derive(Clone, Debug, PartialEq)]
pub struct Action {
    side: Side,
    h: Arc<HopfAlgebra>,
    a: Arc<HopfAlgebra>,
    table: Tensor3,
}

impl Action {
    pub fn new(side: Side, h: Arc<HopfAlgebra>, a: Arc<HopfAlgebra>, table: Tensor3) -> Result<Self> {
        if h.field() != a.field() {
            return Err(Error::FieldMismatch(h.field(), a.field()));
        }
        if table.field() != h.field() {
            return Err(Error::FieldMismatch(table.field(), h.field()));
        }
        let target = match side {
            Side::Left => a.dim(),
            Side::Right => h.dim(),
        };
        if table.dims() != [h.dim(), a.dim(), target] {
            return Err(Error::Dimension(format!(
                "action table has dims {:?}, expected {:?}",
                table.dims(),
                [h.dim(), a.dim(), target]
            )));
        }
        Ok(Action { side, h, a, table })
    }

    /// Builds the table from the action on basis pairs.
    pub fn from_fn(
        side: Side,
        h: Arc<HopfAlgebra>,
        a: Arc<HopfAlgebra>,
        mut f: impl FnMut(usize, usize) -> Vector,
    ) -> Result<Self> {
        let target = match side {
            Side::Left => a.dim(),
            Side::Right => h.dim(),
        };
        let mut table = Tensor3::zeros(h.field(), [h.dim(), a.dim(), target]);
        for i in 0..h.dim() {
            for j in 0..a.dim() {
                let v = f(i, j);
                if v.len() != target {
                    return Err(Error::Dimension(format!("action value has length {}", v.len())));
                }
                table.set_fiber(i, j, &v);
            }
        }
        Action::new(side, h, a, table)
    }

    /// `h ⊳ a = ε(h) a` or `h ⊲ a = ε(a) h`.
    pub fn trivial(side: Side, h: Arc<HopfAlgebra>, a: Arc<HopfAlgebra>) -> Self {
        let (hh, aa) = (h.clone(), a.clone());
        Action::from_fn(side, h, a, |i, j| match side {
            Side::Left => aa.basis_vector(j).scale(&hh.counit()[i]),
            Side::Right => hh.basis_vector(i).scale(&aa.counit()[j]),
        })
        .expect("trivial action has consistent dimensions")
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn h(&self) -> &Arc<HopfAlgebra> {
        &self.h
    }

    pub fn a(&self) -> &Arc<HopfAlgebra> {
        &self.a
    }

    pub fn field(&self) -> Field {
        self.h.field()
    }

    /// The algebra the action lands in.
    pub fn target(&self) -> &HopfAlgebra {
        match self.side {
            Side::Left => &self.a,
            Side::Right => &self.h,
        }
    }

    pub fn table(&self) -> &Tensor3 {
        &self.table
    }

    pub fn on_basis(&self, h: usize, a: usize) -> Vector {
        self.table.fiber(h, a)
    }

    pub fn apply(&self, h: &Vector, a: &Vector) -> Vector {
        let mut out = self.target().zero_vector();
        for (i, x) in h.support() {
            for (j, y) in a.support() {
                let xy = x * y;
                for k in 0..out.len() {
                    let c = self.table.get(i, j, k);
                    if !c.is_zero() {
                        out.add_at(k, &(&xy * c));
                    }
                }
            }
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        *self == Action::trivial(self.side, self.h.clone(), self.a.clone())
    }
}

fn names(h: &HopfAlgebra, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| h.basis_names()[i].clone()).collect()
}

fn vec_violation(basis: Vec<String>, target: &HopfAlgebra, got: &Vector, want: &Vector) -> Violation {
    Violation { basis, detail: format!("got {}, expected {}", target.format_vector(got), target.format_vector(want)) }
}

fn tensor_violation(
    basis: Vec<String>,
    left: &HopfAlgebra,
    right: &HopfAlgebra,
    got: &Matrix,
    want: &Matrix,
) -> Violation {
    Violation {
        basis,
        detail: format!(
            "got {}, expected {}",
            HopfAlgebra::format_tensor(left, right, got),
            HopfAlgebra::format_tensor(left, right, want)
        ),
    }
}

/// Unit, associativity, counit and comultiplicativity of a single action.
pub fn check_module_coalgebra(act: &Action) -> Report {
    let (h, a) = (act.h.as_ref(), act.a.as_ref());
    let t = act.target();
    let f = act.field();
    let mut report = Report::default();
    let mut unit = Vec::new();
    let mut assoc = Vec::new();
    let mut counit = Vec::new();
    let mut comult = Vec::new();

    match act.side {
        Side::Left => {
            for j in 0..a.dim() {
                let got = act.apply(h.unit(), &a.basis_vector(j));
                if got != a.basis_vector(j) {
                    unit.push(vec_violation(names(a, &[j]), t, &got, &a.basis_vector(j)));
                }
            }
            for i in 0..h.dim() {
                for k in 0..h.dim() {
                    for j in 0..a.dim() {
                        let lhs = act.apply(&h.mul_basis(i, k), &a.basis_vector(j));
                        let rhs = act.apply(&h.basis_vector(i), &act.on_basis(k, j));
                        if lhs != rhs {
                            let mut b = names(h, &[i, k]);
                            b.extend(names(a, &[j]));
                            assoc.push(vec_violation(b, t, &lhs, &rhs));
                        }
                    }
                }
            }
        }
        Side::Right => {
            for i in 0..h.dim() {
                let got = act.apply(&h.basis_vector(i), a.unit());
                if got != h.basis_vector(i) {
                    unit.push(vec_violation(names(h, &[i]), t, &got, &h.basis_vector(i)));
                }
            }
            for i in 0..h.dim() {
                for j in 0..a.dim() {
                    for k in 0..a.dim() {
                        let lhs = act.apply(&h.basis_vector(i), &a.mul_basis(j, k));
                        let rhs = act.apply(&act.on_basis(i, j), &a.basis_vector(k));
                        if lhs != rhs {
                            let mut b = names(h, &[i]);
                            b.extend(names(a, &[j, k]));
                            assoc.push(vec_violation(b, t, &lhs, &rhs));
                        }
                    }
                }
            }
        }
    }

    for i in 0..h.dim() {
        for j in 0..a.dim() {
            let v = act.on_basis(i, j);
            let got = t.counit_of(&v);
            let want = &h.counit()[i] * &a.counit()[j];
            if got != want {
                let mut b = names(h, &[i]);
                b.extend(names(a, &[j]));
                counit.push(Violation { basis: b, detail: format!("got {got}, expected {want}") });
            }
            let lhs = t.comul(&v);
            let mut rhs = Matrix::zeros(f, t.dim(), t.dim());
            for (h1, h2, c) in h.coproduct_terms(i) {
                for (a1, a2, d) in a.coproduct_terms(j) {
                    let x = act.on_basis(*h1, *a1);
                    let y = act.on_basis(*h2, *a2);
                    rhs.add_scaled(&(c * d), &x.outer(&y));
                }
            }
            if lhs != rhs {
                let mut b = names(h, &[i]);
                b.extend(names(a, &[j]));
                comult.push(tensor_violation(b, t, t, &lhs, &rhs));
            }
        }
    }

    report.push(Check::new("unit", unit));
    report.push(Check::new("associativity", assoc));
    report.push(Check::new("counit", counit));
    report.push(Check::new("comultiplication", comult));
    report
}

/// A left action `⊳ : H ⊗ A → A` and right action `⊲ : H ⊗ A → H` on the
/// same pair of algebras. Only pairs that passed [`check_matched_pair`]
/// are marked verified; bicrossed products refuse the rest.
#[derive(Clone, Debug)]
pub struct MatchedPair {
    left: Action,
    right: Action,
    verified: bool,
}

impl PartialEq for MatchedPair {
    fn eq(&self, other: &Self) -> bool {
        self.left == other.left && self.right == other.right
    }
}

impl MatchedPair {
    pub fn new(left: Action, right: Action) -> Result<Self> {
        if left.side != Side::Left || right.side != Side::Right {
            return Err(Error::Input("expected a left and a right action".into()));
        }
        if left.h != right.h || left.a != right.a {
            return Err(Error::Input("actions are defined on different algebras".into()));
        }
        Ok(MatchedPair { left, right, verified: false })
    }

    /// Runs the full check and marks the pair verified, or returns the report.
    pub fn verify(mut self) -> Result<Self> {
        let report = check_matched_pair(&self);
        if !report.passed() {
            return Err(Error::PairCheckFailed(Box::new(report)));
        }
        self.verified = true;
        Ok(self)
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn a(&self) -> &Arc<HopfAlgebra> {
        &self.left.a
    }

    pub fn h(&self) -> &Arc<HopfAlgebra> {
        &self.left.h
    }

    pub fn left(&self) -> &Action {
        &self.left
    }

    pub fn right(&self) -> &Action {
        &self.right
    }

    pub fn field(&self) -> Field {
        self.left.field()
    }

    /// `h ⊳ a` on basis indices.
    pub fn act_left(&self, h: usize, a: usize) -> Vector {
        self.left.on_basis(h, a)
    }

    /// `h ⊲ a` on basis indices.
    pub fn act_right(&self, h: usize, a: usize) -> Vector {
        self.right.on_basis(h, a)
    }

    /// Cheap predicate for bulk enumeration: the four compatibility
    /// conditions with early exit. Assumes both actions already passed
    /// [`check_module_coalgebra`].
    pub fn satisfies_compatibility(&self) -> bool {
        let ctx = Ctx::new(self);
        ctx.mp4(1).is_empty() && ctx.mp1(1).is_empty() && ctx.mp2(1).is_empty() && ctx.mp3(1).is_empty()
    }

    pub(crate) fn mark_verified(mut self) -> Self {
        self.verified = true;
        self
    }
}

/// Action values on basis pairs, cached for the compatibility checks.
struct Ctx<'p> {
    pair: &'p MatchedPair,
    l: Vec<Vec<Vector>>,
    r: Vec<Vec<Vector>>,
}

impl<'p> Ctx<'p> {
    fn new(pair: &'p MatchedPair) -> Self {
        let (nh, na) = (pair.h().dim(), pair.a().dim());
        let l = (0..nh).map(|i| (0..na).map(|j| pair.act_left(i, j)).collect()).collect();
        let r = (0..nh).map(|i| (0..na).map(|j| pair.act_right(i, j)).collect()).collect();
        Ctx { pair, l, r }
    }

    fn both(&self, hi: &[usize], ai: &[usize]) -> Vec<String> {
        let mut b = names(self.pair.h(), hi);
        b.extend(names(self.pair.a(), ai));
        b
    }

    /// `h ⊳ 1 = ε(h) 1` and `1 ⊲ a = ε(a) 1`.
    fn mp1(&self, limit: usize) -> Vec<Violation> {
        let (a, h) = (self.pair.a().as_ref(), self.pair.h().as_ref());
        let mut out = Vec::new();
        for i in 0..h.dim() {
            let got = self.pair.left.apply(&h.basis_vector(i), a.unit());
            let want = a.unit().scale(&h.counit()[i]);
            if got != want {
                out.push(vec_violation(self.both(&[i], &[]), a, &got, &want));
                if out.len() >= limit {
                    return out;
                }
            }
        }
        for j in 0..a.dim() {
            let got = self.pair.right.apply(h.unit(), &a.basis_vector(j));
            let want = h.unit().scale(&a.counit()[j]);
            if got != want {
                out.push(vec_violation(self.both(&[], &[j]), h, &got, &want));
                if out.len() >= limit {
                    return out;
                }
            }
        }
        out
    }

    /// `g ⊳ (ab) = (g₁ ⊳ a₁)((g₂ ⊲ a₂) ⊳ b)`.
    fn mp2(&self, limit: usize) -> Vec<Violation> {
        let (a, h) = (self.pair.a().as_ref(), self.pair.h().as_ref());
        let mut out = Vec::new();
        for g in 0..h.dim() {
            for x in 0..a.dim() {
                // the part of the right side not depending on b
                let pieces: Vec<(Scalar, &Vector, &Vector)> = h
                    .coproduct_terms(g)
                    .iter()
                    .flat_map(|(g1, g2, c)| {
                        a.coproduct_terms(x)
                            .iter()
                            .map(move |(a1, a2, d)| (c * d, &self.l[*g1][*a1], &self.r[*g2][*a2]))
                    })
                    .collect();
                for y in 0..a.dim() {
                    let lhs = self.pair.left.apply(&h.basis_vector(g), &a.mul_basis(x, y));
                    let mut rhs = a.zero_vector();
                    for (c, l, r) in &pieces {
                        if l.is_zero() || r.is_zero() {
                            continue;
                        }
                        let t = self.pair.left.apply(r, &a.basis_vector(y));
                        rhs.add_scaled(c, &a.mul(l, &t));
                    }
                    if lhs != rhs {
                        out.push(vec_violation(self.both(&[g], &[x, y]), a, &lhs, &rhs));
                        if out.len() >= limit {
                            return out;
                        }
                    }
                }
            }
        }
        out
    }

    /// `(gh) ⊲ a = (g ⊲ (h₁ ⊳ a₁))(h₂ ⊲ a₂)`.
    fn mp3(&self, limit: usize) -> Vec<Violation> {
        let (a, h) = (self.pair.a().as_ref(), self.pair.h().as_ref());
        let mut out = Vec::new();
        for k in 0..h.dim() {
            for x in 0..a.dim() {
                let pieces: Vec<(Scalar, &Vector, &Vector)> = h
                    .coproduct_terms(k)
                    .iter()
                    .flat_map(|(h1, h2, c)| {
                        a.coproduct_terms(x)
                            .iter()
                            .map(move |(a1, a2, d)| (c * d, &self.l[*h1][*a1], &self.r[*h2][*a2]))
                    })
                    .collect();
                for g in 0..h.dim() {
                    let lhs = self.pair.right.apply(&h.mul_basis(g, k), &a.basis_vector(x));
                    let mut rhs = h.zero_vector();
                    for (c, l, r) in &pieces {
                        if l.is_zero() || r.is_zero() {
                            continue;
                        }
                        let t = self.pair.right.apply(&h.basis_vector(g), l);
                        rhs.add_scaled(c, &h.mul(&t, r));
                    }
                    if lhs != rhs {
                        out.push(vec_violation(self.both(&[g, k], &[x]), h, &lhs, &rhs));
                        if out.len() >= limit {
                            return out;
                        }
                    }
                }
            }
        }
        out
    }

    /// `g₁ ⊲ a₁ ⊗ g₂ ⊳ a₂ = g₂ ⊲ a₂ ⊗ g₁ ⊳ a₁`.
    fn mp4(&self, limit: usize) -> Vec<Violation> {
        let (a, h) = (self.pair.a().as_ref(), self.pair.h().as_ref());
        let f = self.pair.field();
        let mut out = Vec::new();
        for g in 0..h.dim() {
            for x in 0..a.dim() {
                let mut lhs = Matrix::zeros(f, h.dim(), a.dim());
                let mut rhs = Matrix::zeros(f, h.dim(), a.dim());
                for (g1, g2, c) in h.coproduct_terms(g) {
                    for (a1, a2, d) in a.coproduct_terms(x) {
                        let cd = c * d;
                        lhs.add_scaled(&cd, &self.r[*g1][*a1].outer(&self.l[*g2][*a2]));
                        rhs.add_scaled(&cd, &self.r[*g2][*a2].outer(&self.l[*g1][*a1]));
                    }
                }
                if lhs != rhs {
                    out.push(tensor_violation(self.both(&[g], &[x]), h, a, &lhs, &rhs));
                    if out.len() >= limit {
                        return out;
                    }
                }
            }
        }
        out
    }
}

/// Full report: module coalgebra checks for both actions, then `mp1`–`mp4`,
/// each listing every failing basis tuple.
pub fn check_matched_pair(pair: &MatchedPair) -> Report {
    let mut report = Report::default();
    report.extend("left ", check_module_coalgebra(&pair.left));
    report.extend("right ", check_module_coalgebra(&pair.right));
    let ctx = Ctx::new(pair);
    report.push(Check::new("mp1", ctx.mp1(usize::MAX)));
    report.push(Check::new("mp2", ctx.mp2(usize::MAX)));
    report.push(Check::new("mp3", ctx.mp3(usize::MAX)));
    report.push(Check::new("mp4", ctx.mp4(usize::MAX)));
    report
}

/// Both actions trivial; the bicrossed product is `A ⊗ H`.
pub fn trivial_pair_of(a: Arc<HopfAlgebra>, h: Arc<HopfAlgebra>) -> Result<MatchedPair> {
    let left = Action::trivial(Side::Left, h.clone(), a.clone());
    let right = Action::trivial(Side::Right, h, a);
    MatchedPair::new(left, right)?.verify()
}

/// The trivial pair on `A = ℍ₄` (basis `1, G, X, GX`) and `H = H₄`.
pub fn trivial_pair(field: Field) -> Result<MatchedPair> {
    trivial_pair_of(Arc::new(sweedler_h4_capital(field)?), Arc::new(sweedler_h4(field)?))
}

fn check_param_field(field: Field, params: &[&Scalar]) -> Result<()> {
    match params.iter().find(|s| s.field() != field) {
        Some(s) => Err(Error::FieldMismatch(s.field(), field)),
        None => Ok(()),
    }
}

/// Coordinates in the basis `(1, g, x, gx)` (or `(1, G, X, GX)`).
fn v4(f: Field, c: [&Scalar; 4]) -> Vector {
    Vector::from_scalars(f, c.iter().map(|s| (*s).clone()).collect()).expect("scalars share the field")
}

/// The matched pair with parameter `λ` on `A = ℍ₄`, `H = H₄`:
///
/// * `g ⊳ G = G`, `g ⊳ X = -X`, `x ⊳ X = x ⊳ GX = λ(1 - G)`, `x ⊳ G = 0`
/// * `x ⊲ G = -x`, `x ⊲ X = λ(1 - g)`, `g ⊲ X = 0`
///
/// with the other values forced by the module structure.
pub fn canonical_pair(field: Field, lambda: &Scalar) -> Result<MatchedPair> {
    check_param_field(field, &[lambda])?;
    let a = Arc::new(sweedler_h4_capital(field)?);
    let h = Arc::new(sweedler_h4(field)?);
    let (z, o) = (field.zero(), field.one());
    let m = -&o;
    let l = lambda.clone();
    let ml = -lambda;
    let left_rows: [[Vector; 4]; 4] = [
        [
            v4(field, [&o, &z, &z, &z]),
            v4(field, [&z, &o, &z, &z]),
            v4(field, [&z, &z, &o, &z]),
            v4(field, [&z, &z, &z, &o]),
        ],
        [
            v4(field, [&o, &z, &z, &z]),
            v4(field, [&z, &o, &z, &z]),
            v4(field, [&z, &z, &m, &z]),
            v4(field, [&z, &z, &z, &m]),
        ],
        [
            v4(field, [&z, &z, &z, &z]),
            v4(field, [&z, &z, &z, &z]),
            v4(field, [&l, &ml, &z, &z]),
            v4(field, [&l, &ml, &z, &z]),
        ],
        [
            v4(field, [&z, &z, &z, &z]),
            v4(field, [&z, &z, &z, &z]),
            v4(field, [&l, &ml, &z, &z]),
            v4(field, [&l, &ml, &z, &z]),
        ],
    ];
    let right_rows: [[Vector; 4]; 4] = [
        [
            v4(field, [&o, &z, &z, &z]),
            v4(field, [&o, &z, &z, &z]),
            v4(field, [&z, &z, &z, &z]),
            v4(field, [&z, &z, &z, &z]),
        ],
        [
            v4(field, [&z, &o, &z, &z]),
            v4(field, [&z, &o, &z, &z]),
            v4(field, [&z, &z, &z, &z]),
            v4(field, [&z, &z, &z, &z]),
        ],
        [
            v4(field, [&z, &z, &o, &z]),
            v4(field, [&z, &z, &m, &z]),
            v4(field, [&l, &ml, &z, &z]),
            v4(field, [&ml, &l, &z, &z]),
        ],
        [
            v4(field, [&z, &z, &z, &o]),
            v4(field, [&z, &z, &z, &m]),
            v4(field, [&ml, &l, &z, &z]),
            v4(field, [&l, &ml, &z, &z]),
        ],
    ];
    let left = Action::from_fn(Side::Left, h.clone(), a.clone(), |i, j| left_rows[i][j].clone())?;
    let right = Action::from_fn(Side::Right, h, a, |i, j| right_rows[i][j].clone())?;
    MatchedPair::new(left, right)?.verify()
}

/// Which of the four shapes a family action takes: `1` leaves both
/// generators acting trivially, `2` twists the second, `3` the first and
/// `4` both.
fn family_flags(kind: u8) -> Result<(bool, bool)> {
    match kind {
        1 => Ok((false, false)),
        2 => Ok((false, true)),
        3 => Ok((true, false)),
        4 => Ok((true, true)),
        _ => Err(Error::Input(format!("family kind must be 1..=4, got {kind}"))),
    }
}

/// Right actions of `ℍ₄` on `H₄` in closed form, parameters `[a, b, c, d]`:
/// with the first twist `x ⊲ G = a - ag - x`, `x ⊲ X = b(1 - g)`, and with
/// the second `gx ⊲ G = c - cg - gx`, `gx ⊲ X = d(1 - g)`. Unused
/// parameters are ignored.
pub fn right_family(field: Field, kind: u8, params: [&Scalar; 4]) -> Result<Action> {
    check_param_field(field, &params)?;
    let (first, second) = family_flags(kind)?;
    let [pa, pb, pc, pd] = params;
    let (z, o) = (field.zero(), field.one());
    let m = -&o;
    let a = Arc::new(sweedler_h4_capital(field)?);
    let h = Arc::new(sweedler_h4(field)?);
    let zero = v4(field, [&z, &z, &z, &z]);
    let mut rows: Vec<[Vector; 4]> = vec![
        [v4(field, [&o, &z, &z, &z]), v4(field, [&o, &z, &z, &z]), zero.clone(), zero.clone()],
        [v4(field, [&z, &o, &z, &z]), v4(field, [&z, &o, &z, &z]), zero.clone(), zero.clone()],
    ];
    let x = v4(field, [&z, &z, &o, &z]);
    rows.push(if first {
        [x.clone(), v4(field, [pa, &-pa, &m, &z]), v4(field, [pb, &-pb, &z, &z]), v4(field, [&-pb, pb, &z, &z])]
    } else {
        [x.clone(), x, zero.clone(), zero.clone()]
    });
    let gx = v4(field, [&z, &z, &z, &o]);
    rows.push(if second {
        [gx.clone(), v4(field, [pc, &-pc, &z, &m]), v4(field, [pd, &-pd, &z, &z]), v4(field, [&-pd, pd, &z, &z])]
    } else {
        [gx.clone(), gx, zero.clone(), zero]
    });
    Action::from_fn(Side::Right, h, a, |i, j| rows[i][j].clone())
}

/// Left actions of `H₄` on `ℍ₄` in closed form, parameters `[s, t, u, v]`:
/// with the first twist `g ⊳ X = s - sG - X`, `x ⊳ X = t(1 - G)`, and with
/// the second `g ⊳ GX = u - uG - GX`, `x ⊳ GX = v(1 - G)`.
pub fn left_family(field: Field, kind: u8, params: [&Scalar; 4]) -> Result<Action> {
    check_param_field(field, &params)?;
    let (first, second) = family_flags(kind)?;
    let [ps, pt, pu, pv] = params;
    let (z, o) = (field.zero(), field.one());
    let m = -&o;
    let a = Arc::new(sweedler_h4_capital(field)?);
    let h = Arc::new(sweedler_h4(field)?);
    let zero = v4(field, [&z, &z, &z, &z]);
    let one = v4(field, [&o, &z, &z, &z]);
    let big_g = v4(field, [&z, &o, &z, &z]);
    let big_x = v4(field, [&z, &z, &o, &z]);
    let big_gx = v4(field, [&z, &z, &z, &o]);
    let g_x = if first { v4(field, [ps, &-ps, &m, &z]) } else { big_x.clone() };
    let g_gx = if second { v4(field, [pu, &-pu, &z, &m]) } else { big_gx.clone() };
    let x_x = if first { v4(field, [pt, &-pt, &z, &z]) } else { zero.clone() };
    let x_gx = if second { v4(field, [pv, &-pv, &z, &z]) } else { zero.clone() };
    let x_row = [zero.clone(), zero.clone(), x_x, x_gx];
    let rows: [[Vector; 4]; 4] =
        [[one.clone(), big_g.clone(), big_x, big_gx], [one, big_g, g_x, g_gx], x_row.clone(), x_row];
    Action::from_fn(Side::Left, h, a, |i, j| rows[i][j].clone())
}

/// Every closed-form action of one side over `F_p`, in parameter order.
pub fn family_actions(field: Field, side: Side) -> Result<Vec<Action>> {
    let elems = field.elements();
    if elems.is_empty() {
        return Err(Error::NeedsPrimeField(field));
    }
    let z = field.zero();
    let build = |kind: u8, p: [&Scalar; 4]| match side {
        Side::Left => left_family(field, kind, p),
        Side::Right => right_family(field, kind, p),
    };
    let mut out = vec![build(1, [&z, &z, &z, &z])?];
    for c in &elems {
        for d in &elems {
            out.push(build(2, [&z, &z, c, d])?);
        }
    }
    for a in &elems {
        for b in &elems {
            out.push(build(3, [a, b, &z, &z])?);
        }
    }
    for a in &elems {
        for b in &elems {
            for c in &elems {
                for d in &elems {
                    out.push(build(4, [a, b, c, d])?);
                }
            }
        }
    }
    Ok(out)
}

/// Checks that `acting` has the shape of Sweedler's algebra on its basis:
/// `e₀ = 1`, `e₁ = t` group-like with `t² = 1`, `e₂ = y` with
/// `Δ(y) = y⊗1 + t⊗y`, `y² = 0`, `yt = -ty` and `e₃ = ty`.
fn check_sweedler_shape(acting: &HopfAlgebra) -> Result<()> {
    let bad = || Error::Unsupported(format!("{:?} is not presented like Sweedler's algebra", acting.basis_names()));
    if acting.dim() != 4 || *acting.unit() != acting.basis_vector(0) {
        return Err(bad());
    }
    let e = |i| acting.basis_vector(i);
    let mut dy = e(2).outer(&e(0));
    dy.add_scaled(&acting.field().one(), &e(1).outer(&e(2)));
    let ok = acting.comul(&e(1)) == e(1).outer(&e(1))
        && acting.comul(&e(2)) == dy
        && acting.mul_basis(1, 1) == e(0)
        && acting.mul_basis(2, 2).is_zero()
        && acting.mul_basis(1, 2) == e(3)
        && acting.mul_basis(2, 1) == e(3).scale(&-acting.field().one());
    if ok {
        Ok(())
    } else {
        Err(bad())
    }
}

/// All pairs `(ρ_t, ρ_y)` of linear endomorphisms of `target` that can be
/// the actions of the generators `t`, `y` of a Sweedler-shaped algebra in
/// a normalized module coalgebra structure:
///
/// * `ρ_t` is a unitary coalgebra map with `ρ_t² = id`;
/// * `Δ∘ρ_y = (ρ_y ⊗ id + ρ_t ⊗ ρ_y)∘Δ`, `ε∘ρ_y = 0`, `ρ_y(1) = 0`;
/// * `ρ_y² = 0` and `ρ_y ρ_t = -ρ_t ρ_y`.
pub fn generator_actions(acting: &HopfAlgebra, target: &HopfAlgebra) -> Result<Vec<(Matrix, Matrix)>> {
    check_sweedler_shape(acting)?;
    let f = target.field();
    let n = target.dim();
    let id = Matrix::identity(f, n);
    let grp: Vec<Matrix> = coalgebra_maps(target, target)?.into_iter().filter(|m| m.compose(m) == id).collect();

    // equations for ρ_y, linear in its n² entries
    let equations = |rho: &Matrix, r: &Matrix| -> Vector {
        let mut out = Vec::new();
        for j in 0..n {
            let rj = r.column(j);
            let mut d = target.comul(&rj);
            for (j1, j2, c) in target.coproduct_terms(j) {
                let t1 = r.column(*j1).outer(&target.basis_vector(*j2));
                let t2 = rho.column(*j1).outer(&r.column(*j2));
                d.add_scaled(&-c, &t1);
                d.add_scaled(&-c, &t2);
            }
            out.extend(d.flatten().into_coeffs());
            out.push(target.counit_of(&rj));
        }
        out.extend(r.apply(target.unit()).into_coeffs());
        Vector::from_scalars(f, out).expect("same field")
    };

    let mut result = Vec::new();
    for rho in grp {
        let columns: Vec<Vector> = (0..n * n)
            .map(|u| {
                let mut e = Matrix::zeros(f, n, n);
                e.set(u / n, u % n, f.one());
                equations(&rho, &e)
            })
            .collect();
        let system = Matrix::from_columns(f, columns[0].len(), &columns);
        for flat in system.kernel().elements() {
            let r = Matrix::from_fn(f, n, n, |i, j| flat[i * n + j].clone());
            if !r.compose(&r).is_zero() {
                continue;
            }
            let mut anti = r.compose(&rho);
            anti.add_scaled(&f.one(), &rho.compose(&r));
            if anti.is_zero() {
                result.push((rho.clone(), r));
            }
        }
    }
    Ok(result)
}

/// Every normalized module coalgebra action of one side between `ℍ₄` and
/// `H₄` over `F_p`, found from the generator images and re-checked in full.
pub fn enumerate_actions(field: Field, side: Side) -> Result<Vec<Action>> {
    if field.order().is_none() {
        return Err(Error::NeedsPrimeField(field));
    }
    let a = Arc::new(sweedler_h4_capital(field)?);
    let h = Arc::new(sweedler_h4(field)?);
    let (acting, target) = match side {
        Side::Left => (h.clone(), a.clone()),
        Side::Right => (a.clone(), h.clone()),
    };
    let gens = generator_actions(&acting, &target)?;
    let candidates: Vec<Action> = gens
        .iter()
        .map(|(rho, r)| {
            let ry = r.compose(rho);
            let yr = rho.compose(r);
            Action::from_fn(side, h.clone(), a.clone(), |i, j| match side {
                // h ⊳ a: acting index i
                Side::Left => match i {
                    0 => a.basis_vector(j),
                    1 => rho.column(j),
                    2 => r.column(j),
                    _ => yr.column(j),
                },
                // h ⊲ a: acting index j
                Side::Right => match j {
                    0 => h.basis_vector(i),
                    1 => rho.column(i),
                    2 => r.column(i),
                    _ => ry.column(i),
                },
            })
        })
        .collect::<Result<_>>()?;
    Ok(candidates.into_par_iter().filter(|act| check_module_coalgebra(act).passed()).collect())
}

/// How a pair on `(ℍ₄, H₄)` relates to the named ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum PairLabel {
    Trivial,
    Canonical(Scalar),
    Other,
}

impl PairLabel {
    fn sort_key(&self) -> (u8, Option<u64>) {
        match self {
            PairLabel::Trivial => (0, None),
            PairLabel::Canonical(l) => (1, l.residue()),
            PairLabel::Other => (2, None),
        }
    }
}

impl std::fmt::Display for PairLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PairLabel::Trivial => f.write_str("trivial"),
            PairLabel::Canonical(l) => write!(f, "canonical({l})"),
            PairLabel::Other => f.write_str("other"),
        }
    }
}

/// Compares a pair on `(ℍ₄, H₄)` with the trivial pair and with
/// `canonical_pair(λ)` for the `λ` read off `x ⊳ X`.
pub fn classify_pair(pair: &MatchedPair) -> Result<PairLabel> {
    let f = pair.field();
    if pair.left.is_trivial() && pair.right.is_trivial() {
        return Ok(PairLabel::Trivial);
    }
    if pair.a().dim() != 4 || pair.h().dim() != 4 {
        return Ok(PairLabel::Other);
    }
    let lambda = pair.left.table().get(2, 2, 0).clone();
    let c = canonical_pair(f, &lambda)?;
    Ok(if c == *pair { PairLabel::Canonical(lambda) } else { PairLabel::Other })
}

#[derive(Clone, Debug)]
pub struct Census {
    pub prime: u64,
    pub left_actions: Vec<Action>,
    pub right_actions: Vec<Action>,
    pub pairs: Vec<(PairLabel, MatchedPair)>,
}

/// Largest prime accepted by [`enumerate_matched_pairs_h4h4`]; the number
/// of candidate pairs grows like `p⁸`.
pub const CENSUS_MAX_PRIME: u64 = 7;

/// All matched pairs on `(ℍ₄, H₄)` over `F_p`: enumerates the module
/// coalgebra actions of each side, then filters every combination by the
/// compatibility conditions. Pairs are ordered trivial first, then by `λ`.
pub fn enumerate_matched_pairs_h4h4(p: u64) -> Result<Census> {
    let field = Field::prime(p)?;
    if p > CENSUS_MAX_PRIME {
        return Err(Error::Input(format!("census supports p ≤ {CENSUS_MAX_PRIME}, got {p}")));
    }
    let left_actions = enumerate_actions(field, Side::Left)?;
    let right_actions = enumerate_actions(field, Side::Right)?;
    let found: Vec<MatchedPair> = left_actions
        .par_iter()
        .flat_map_iter(|l| {
            right_actions.iter().filter_map(move |r| {
                let pair = MatchedPair::new(l.clone(), r.clone()).ok()?;
                pair.satisfies_compatibility().then(|| pair.mark_verified())
            })
        })
        .collect();
    let mut pairs = found.into_iter().map(|pair| Ok((classify_pair(&pair)?, pair))).collect::<Result<Vec<_>>>()?;
    pairs.sort_by_key(|(label, _)| label.sort_key());
    Ok(Census { prime: p, left_actions, right_actions, pairs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn canonical_pair_verifies_over_rationals() {
        let q = Field::rationals();
        for l in ["0", "1", "-2/3"] {
            let lambda = q.parse(l).unwrap();
            assert!(canonical_pair(q, &lambda).unwrap().is_verified());
        }
    }

    #[test]
    fn canonical_values() {
        let f = f5();
        let pair = canonical_pair(f, &f.from_i64(2)).unwrap();
        let (a, h) = (pair.a().clone(), pair.h().clone());
        let x = h.index_of("x").unwrap();
        let big_x = a.index_of("X").unwrap();
        let big_g = a.index_of("G").unwrap();
        assert_eq!(a.format_vector(&pair.act_left(x, big_x)), "2 + 3*G");
        assert_eq!(h.format_vector(&pair.act_right(x, big_g)), "4*x");
        assert_eq!(h.format_vector(&pair.act_right(x, big_x)), "2 + 3*g");
    }

    #[test]
    fn broken_mp4_is_reported_on_all_failing_pairs() {
        let f = f5();
        let (z, o) = (f.zero(), f.one());
        let left = left_family(f, 4, [&z, &o, &z, &o]).unwrap();
        let right = right_family(f, 1, [&z, &z, &z, &z]).unwrap();
        let pair = MatchedPair::new(left, right).unwrap();
        let report = check_matched_pair(&pair);
        assert!(report.get("left comultiplication").unwrap().passed());
        let mp4 = report.get("mp4").unwrap();
        assert!(!mp4.passed());
        assert!(mp4.violations.iter().any(|v| v.basis == ["x", "GX"]));
        assert_eq!(mp4.violations[0].basis, ["x", "X"]);
        assert!(matches!(pair.verify(), Err(Error::PairCheckFailed(_))));
    }

    #[test]
    fn field_mismatch_is_rejected() {
        let q = Field::rationals();
        assert!(matches!(canonical_pair(f5(), &q.one()), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn wrong_sides_are_rejected() {
        let p = trivial_pair(f5()).unwrap();
        assert!(MatchedPair::new(p.right().clone(), p.left().clone()).is_err());
    }

    #[test]
    fn classification() {
        let f = f5();
        assert_eq!(classify_pair(&trivial_pair(f).unwrap()).unwrap(), PairLabel::Trivial);
        let l = f.from_i64(3);
        assert_eq!(classify_pair(&canonical_pair(f, &l).unwrap()).unwrap(), PairLabel::Canonical(l));
    }
}
