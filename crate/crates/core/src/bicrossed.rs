//! The bicrossed product `A ⋈ H` of a matched pair: the vector space
//! `A ⊗ H` with the tensor coalgebra and
//! `(a ⋈ g)(b ⋈ h) = a(g₁ ⊳ b₁) ⋈ (g₂ ⊲ b₂)h`.

use crate::error::{Error, Result};
use crate::hopf::{join_names, HopfAlgebra, StructureConstants};
use crate::linalg::{Matrix, Tensor3, Vector};
use crate::matched_pair::MatchedPair;

/// Builds `A ⋈ H` on the `A`-major basis `a_i ⋈ h_j` (index `i·dim H + j`),
/// with antipode `S(a ⋈ h) = (1 ⋈ S(h))(S(a) ⋈ 1)`, and checks every Hopf
/// axiom. Refuses pairs that were not verified.
pub fn bicrossed_product(pair: &MatchedPair) -> Result<HopfAlgebra> {
    if !pair.is_verified() {
        return Err(Error::UnverifiedPair);
    }
    let (a, h) = (pair.a().as_ref(), pair.h().as_ref());
    let field = pair.field();
    let (na, nh) = (a.dim(), h.dim());
    let n = na * nh;
    let idx = |i: usize, j: usize| i * nh + j;

    let left: Vec<Vec<Vector>> = (0..nh).map(|g| (0..na).map(|b| pair.act_left(g, b)).collect()).collect();
    let right: Vec<Vec<Vector>> = (0..nh).map(|g| (0..na).map(|b| pair.act_right(g, b)).collect()).collect();

    let mut mult = Tensor3::zeros(field, [n; 3]);
    for g in 0..nh {
        for b in 0..na {
            // (1 ⋈ g)(b ⋈ 1) as an element of A ⊗ H
            let mut cross = Matrix::zeros(field, na, nh);
            for (g1, g2, c) in h.coproduct_terms(g) {
                for (b1, b2, d) in a.coproduct_terms(b) {
                    cross.add_scaled(&(c * d), &left[*g1][*b1].outer(&right[*g2][*b2]));
                }
            }
            for i in 0..na {
                for l in 0..nh {
                    for (s, t, c) in cross.support() {
                        for (k, x) in a.product_terms(i, s) {
                            let cx = c * x;
                            for (m, y) in h.product_terms(t, l) {
                                mult.add_at(idx(i, g), idx(b, l), idx(*k, *m), &(&cx * y));
                            }
                        }
                    }
                }
            }
        }
    }

    let mut comult = Tensor3::zeros(field, [n; 3]);
    for i in 0..na {
        for (i1, i2, c) in a.coproduct_terms(i) {
            for j in 0..nh {
                for (j1, j2, d) in h.coproduct_terms(j) {
                    comult.add_at(idx(i, j), idx(*i1, *j1), idx(*i2, *j2), &(c * d));
                }
            }
        }
    }

    let product = |x: &Vector, y: &Vector| {
        let mut out = Vector::zeros(field, n);
        for (i, p) in x.support() {
            for (j, q) in y.support() {
                let pq = p * q;
                for k in 0..n {
                    let c = mult.get(i, j, k);
                    if !c.is_zero() {
                        out.add_at(k, &(&pq * c));
                    }
                }
            }
        }
        out
    };
    let one_a = a.unit();
    let one_h = h.unit();
    let columns: Vec<Vector> = (0..n)
        .map(|k| {
            let (i, j) = (k / nh, k % nh);
            let sh = one_a.kron(&h.apply_antipode(&h.basis_vector(j)));
            let sa = a.apply_antipode(&a.basis_vector(i)).kron(one_h);
            product(&sh, &sa)
        })
        .collect();
    let antipode = Matrix::from_columns(field, n, &columns);

    let names = (0..n).map(|k| join_names(&a.basis_names()[k / nh], &h.basis_names()[k % nh])).collect();
    let sc =
        StructureConstants { mult, unit: one_a.kron(one_h), comult, counit: a.counit().kron(h.counit()), antipode };
    HopfAlgebra::new(field, names, sc)?.verified()
}

/// `a ↦ a ⋈ 1` and `h ↦ 1 ⋈ h` as matrices into the bicrossed product.
pub fn embeddings(pair: &MatchedPair) -> (Matrix, Matrix) {
    let (a, h) = (pair.a().as_ref(), pair.h().as_ref());
    let field = pair.field();
    let n = a.dim() * h.dim();
    let ia =
        Matrix::from_columns(field, n, &(0..a.dim()).map(|i| a.basis_vector(i).kron(h.unit())).collect::<Vec<_>>());
    let ih =
        Matrix::from_columns(field, n, &(0..h.dim()).map(|j| a.unit().kron(&h.basis_vector(j))).collect::<Vec<_>>());
    (ia, ih)
}
