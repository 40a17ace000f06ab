//! The Drinfel'd double `D(H) = (H*)^cop ⋈ H`.

use std::sync::Arc;

use crate::bicrossed::bicrossed_product;
use crate::error::{Error, Result};
use crate::hopf::{dual, twist, HopfAlgebra};
use crate::linalg::Vector;
use crate::matched_pair::{Action, MatchedPair, Side};

/// The matched pair behind the double, with `A = (H*)^cop` on the dual
/// basis and
///
/// * `(h ⊳ f)(a) = f(S⁻¹(h₂) a h₁)`
/// * `h ⊲ f = f(S⁻¹(h₃) h₁) h₂`
pub fn canonical_double_actions(h: &HopfAlgebra) -> Result<MatchedPair> {
    let s_inv = h.antipode().inverse().ok_or(Error::SingularAntipode)?;
    let a = Arc::new(twist(&dual(h)?, false, true)?);
    let hh = Arc::new(h.clone());
    let n = h.dim();
    let field = h.field();

    let left = Action::from_fn(Side::Left, hh.clone(), a.clone(), |i, f| {
        let mut out = Vector::zeros(field, n);
        for (h1, h2, c) in h.coproduct_terms(i) {
            let s = s_inv.column(*h2);
            for m in 0..n {
                let val = h.mul(&h.mul(&s, &h.basis_vector(m)), &h.basis_vector(*h1));
                out.add_at(m, &(c * &val[f]));
            }
        }
        out
    })?;
    let right = Action::from_fn(Side::Right, hh.clone(), a, |i, f| {
        let mut out = Vector::zeros(field, n);
        for (h1, h2, h3, c) in h.coproduct2_terms(i) {
            let val = h.mul(&s_inv.column(h3), &h.basis_vector(h1));
            out.add_at(h2, &(&c * &val[f]));
        }
        out
    })?;
    MatchedPair::new(left, right)?.verify()
}

/// `D(H)` as the bicrossed product of [`canonical_double_actions`].
pub fn drinfeld_double(h: &HopfAlgebra) -> Result<HopfAlgebra> {
    bicrossed_product(&canonical_double_actions(h)?)
}
