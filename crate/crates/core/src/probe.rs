//! Structural invariants: group-like elements, skew-primitives, integrals
//! and semisimplicity.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::HopfAlgebra;
use crate::linalg::{Matrix, SubspaceBasis, Vector};
use crate::matched_pair::Side;

/// Upper bound on candidate evaluations in the exhaustive group-like search.
pub const SCAN_LIMIT: u64 = 100_000_000;

pub fn is_group_like(h: &HopfAlgebra, v: &Vector) -> bool {
    h.counit_of(v).is_one() && h.comul(v) == v.outer(v)
}

/// The group-like elements `Δ(c) = c ⊗ c`, `ε(c) = 1`.
///
/// With `candidates`, returns those candidates that are group-like (any
/// field). Without, searches `F_p` exhaustively; over `ℚ` that is refused.
/// The unit comes first.
pub fn group_likes(h: &HopfAlgebra, candidates: Option<&[Vector]>) -> Result<Vec<Vector>> {
    match candidates {
        Some(cs) => Ok(cs.iter().filter(|c| c.len() == h.dim() && is_group_like(h, c)).cloned().collect()),
        None => group_likes_with_limit(h, SCAN_LIMIT),
    }
}

/// Exhaustive search over `F_p` with an explicit bound on visited nodes.
///
/// Coordinates are fixed one at a time. A group-like `c` satisfies
/// `L_k c = c_k c` where `L_k = (e_k* ⊗ id)∘Δ`, so fixing `c_k = v` adds
/// the linear equations `(L_k - v) c = 0`; branches whose affine system
/// becomes inconsistent are dropped, and coordinates already determined
/// by the system are not branched on.
pub fn group_likes_with_limit(h: &HopfAlgebra, limit: u64) -> Result<Vec<Vector>> {
    let field = h.field();
    if field.order().is_none() {
        return Err(Error::NeedsPrimeField(field));
    }
    let n = h.dim();
    let lmats: Vec<Matrix> =
        (0..n).map(|k| Matrix::from_fn(field, n, n, |m, i| h.comult().get(i, k, m).clone())).collect();
    let mut search = Search { h, lmats, values: field.elements(), visited: 0, limit, found: Vec::new() };
    let rows = vec![h.counit().coeffs().to_vec()];
    let rhs = vec![field.one()];
    search.descend(rows, rhs)?;
    let mut found = search.found;
    found.sort_by_key(|v| v != h.unit());
    Ok(found)
}

struct Search<'a> {
    h: &'a HopfAlgebra,
    lmats: Vec<Matrix>,
    values: Vec<Scalar>,
    visited: u64,
    limit: u64,
    found: Vec<Vector>,
}

impl Search<'_> {
    fn descend(&mut self, rows: Vec<Vec<Scalar>>, rhs: Vec<Scalar>) -> Result<()> {
        let field = self.h.field();
        let n = self.h.dim();
        let system = Matrix::from_rows(field, rows.clone())?;
        let b = Vector::from_scalars(field, rhs.clone())?;
        let Some((x, kernel)) = system.solve(&b) else {
            return Ok(());
        };
        let free = (0..n).find(|&i| kernel.vectors().iter().any(|v| !v[i].is_zero()));
        let Some(k) = free else {
            if is_group_like(self.h, &x) {
                self.found.push(x);
            }
            return Ok(());
        };
        for v in self.values.clone() {
            self.visited += 1;
            if self.visited > self.limit {
                return Err(Error::ScanBound { limit: self.limit });
            }
            let mut rows = rows.clone();
            let mut rhs = rhs.clone();
            rows.push(Vector::unit(field, n, k).into_coeffs());
            rhs.push(v.clone());
            for m in 0..n {
                let mut row = self.lmats[k].row(m).into_coeffs();
                row[m] = &row[m] - &v;
                rows.push(row);
                rhs.push(field.zero());
            }
            self.descend(rows, rhs)?;
        }
        Ok(())
    }
}

/// `P_{a,b} = {c : Δ(c) = c ⊗ a + b ⊗ c}` for group-like `a`, `b`.
/// In `H₄`, `x ∈ P_{1,g}` and `gx ∈ P_{g,1}`.
pub fn skew_primitives(h: &HopfAlgebra, a: &Vector, b: &Vector) -> Result<SubspaceBasis> {
    for (name, v) in [("a", a), ("b", b)] {
        if v.len() != h.dim() || !is_group_like(h, v) {
            return Err(Error::Input(format!("{name} = {} is not group-like", h.format_vector(v))));
        }
    }
    let n = h.dim();
    let columns: Vec<Vector> = (0..n)
        .map(|i| {
            let e = h.basis_vector(i);
            let mut d = h.comul(&e);
            let minus = -h.field().one();
            d.add_scaled(&minus, &e.outer(a));
            d.add_scaled(&minus, &b.outer(&e));
            d.flatten()
        })
        .collect();
    Ok(Matrix::from_columns(h.field(), n * n, &columns).kernel())
}

#[derive(Clone, Debug, Serialize)]
pub struct Integrals {
    pub side: Side,
    /// Echelon basis of the one-dimensional space of integrals.
    #[serde(skip)]
    pub space: SubspaceBasis,
    /// Whether left and right integrals coincide.
    pub unimodular: bool,
}

impl Integrals {
    pub fn generator(&self) -> &Vector {
        &self.space.vectors()[0]
    }
}

fn integral_space(h: &HopfAlgebra, side: Side) -> Result<SubspaceBasis> {
    let n = h.dim();
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        let eps = &h.counit()[i];
        let m = Matrix::from_fn(h.field(), n, n, |r, j| {
            let prod = match side {
                Side::Left => h.mul_basis(i, j),
                Side::Right => h.mul_basis(j, i),
            };
            if r == j {
                &prod[r] - eps
            } else {
                prod[r].clone()
            }
        });
        rows.extend(m.row_vectors().into_iter().map(Vector::into_coeffs));
    }
    let space = Matrix::from_rows(h.field(), rows)?.kernel();
    if space.dim() != 1 {
        return Err(Error::Internal(format!("space of {side:?} integrals has dimension {}", space.dim())));
    }
    let t = &space.vectors()[0];
    for i in 0..n {
        let e = h.basis_vector(i);
        let prod = match side {
            Side::Left => h.mul(&e, t),
            Side::Right => h.mul(t, &e),
        };
        if prod != t.scale(&h.counit()[i]) {
            return Err(Error::Internal("integral fails re-verification".into()));
        }
    }
    Ok(space)
}

/// Left integrals `h t = ε(h) t` or right integrals `t h = ε(h) t`.
pub fn integrals(h: &HopfAlgebra, side: Side) -> Result<Integrals> {
    let space = integral_space(h, side)?;
    let other = match side {
        Side::Left => integral_space(h, Side::Right)?,
        Side::Right => integral_space(h, Side::Left)?,
    };
    let unimodular = other.contains(&space.vectors()[0]);
    Ok(Integrals { side, space, unimodular })
}

/// Maschke's criterion: semisimple iff `ε(Λ) ≠ 0` for a left integral `Λ`.
pub fn is_semisimple(h: &HopfAlgebra) -> Result<bool> {
    let space = integral_space(h, Side::Left)?;
    Ok(!h.counit_of(&space.vectors()[0]).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::presets::{group_algebra_c2, sweedler_h4};

    #[test]
    fn h4_group_likes_unit_first() {
        let f = Field::prime(5).unwrap();
        let h = sweedler_h4(f).unwrap();
        let g = group_likes(&h, None).unwrap();
        assert_eq!(g, vec![h.element("1"), h.element("g")]);
    }

    #[test]
    fn rationals_need_candidates() {
        let q = Field::rationals();
        let h = sweedler_h4(q).unwrap();
        assert!(matches!(group_likes(&h, None), Err(Error::NeedsPrimeField(_))));
        let cands = [h.element("g"), h.element("x"), &h.element("1") + &h.element("g")];
        assert_eq!(group_likes(&h, Some(&cands)).unwrap(), vec![h.element("g")]);
    }

    #[test]
    fn scan_bound_is_enforced() {
        let f = Field::prime(5).unwrap();
        let h = sweedler_h4(f).unwrap();
        assert!(matches!(group_likes_with_limit(&h, 2), Err(Error::ScanBound { limit: 2 })));
    }

    #[test]
    fn h4_skew_primitives() {
        let q = Field::rationals();
        let h = sweedler_h4(q).unwrap();
        let (one, g) = (h.element("1"), h.element("g"));
        let p = skew_primitives(&h, &one, &g).unwrap();
        assert_eq!(p.dim(), 2);
        assert!(p.contains(&h.element("x")));
        assert!(p.contains(&(&one - &g)));
        let p = skew_primitives(&h, &g, &one).unwrap();
        assert!(p.contains(&h.element("gx")));
        assert!(skew_primitives(&h, &h.element("x"), &one).is_err());
    }

    #[test]
    fn h4_integrals() {
        let q = Field::rationals();
        let h = sweedler_h4(q).unwrap();
        let left = integrals(&h, Side::Left).unwrap();
        assert!(left.space.contains(&(&h.element("x") + &h.element("gx"))));
        assert!(!left.unimodular);
        let right = integrals(&h, Side::Right).unwrap();
        assert!(right.space.contains(&(&h.element("x") - &h.element("gx"))));
        assert!(!is_semisimple(&h).unwrap());
    }

    #[test]
    fn group_algebra_is_semisimple() {
        let h = group_algebra_c2(Field::prime(3).unwrap()).unwrap();
        assert!(is_semisimple(&h).unwrap());
        assert!(integrals(&h, Side::Left).unwrap().unimodular);
    }
}
