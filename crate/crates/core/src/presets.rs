//! Named Hopf algebras: Sweedler's `H₄`, the group algebra `k[C₂]`, the
//! tensor square and the 16-dimensional family `H₁₆,λ`, plus a checker for
//! generator-and-relation presentations.

use serde::Serialize;

use crate::bicrossed::bicrossed_product;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::{tensor_product, HopfAlgebra, StructureConstants};
use crate::linalg::{Matrix, Tensor3, Vector};
use crate::matched_pair::canonical_pair;

/// `(i, j, terms of e_i e_j)` rows of a multiplication table.
type ProductTable<'a> = &'a [(usize, usize, &'a [(usize, i64)])];

fn table_algebra(
    field: Field,
    names: &[&str],
    products: ProductTable,
    coproducts: &[&[(usize, usize, i64)]],
    counit: &[i64],
    antipode: &[&[(usize, i64)]],
) -> Result<HopfAlgebra> {
    let n = names.len();
    let mut mult = Tensor3::zeros(field, [n; 3]);
    for (i, j, terms) in products {
        for (k, c) in terms.iter() {
            mult.set(*i, *j, *k, field.from_i64(*c));
        }
    }
    let mut comult = Tensor3::zeros(field, [n; 3]);
    for (i, terms) in coproducts.iter().enumerate() {
        for (j, k, c) in terms.iter() {
            comult.set(i, *j, *k, field.from_i64(*c));
        }
    }
    let mut s = Matrix::zeros(field, n, n);
    for (j, terms) in antipode.iter().enumerate() {
        for (i, c) in terms.iter() {
            s.set(*i, j, field.from_i64(*c));
        }
    }
    let sc = StructureConstants {
        mult,
        unit: Vector::unit(field, n, 0),
        comult,
        counit: Vector::from_i64s(field, counit),
        antipode: s,
    };
    HopfAlgebra::new(field, names.iter().map(|s| s.to_string()).collect(), sc)?.verified()
}

/// Sweedler's algebra on the ordered basis `(1, g, x, gx)`:
/// `g² = 1`, `x² = 0`, `xg = -gx`, `g` group-like, `Δ(x) = x⊗1 + g⊗x`,
/// `S(g) = g`, `S(x) = -gx`.
pub fn sweedler_h4(field: Field) -> Result<HopfAlgebra> {
    const ONE: usize = 0;
    const G: usize = 1;
    const X: usize = 2;
    const GX: usize = 3;
    let products: ProductTable = &[
        (ONE, ONE, &[(ONE, 1)]),
        (ONE, G, &[(G, 1)]),
        (ONE, X, &[(X, 1)]),
        (ONE, GX, &[(GX, 1)]),
        (G, ONE, &[(G, 1)]),
        (G, G, &[(ONE, 1)]),
        (G, X, &[(GX, 1)]),
        (G, GX, &[(X, 1)]),
        (X, ONE, &[(X, 1)]),
        (X, G, &[(GX, -1)]),
        (GX, ONE, &[(GX, 1)]),
        (GX, G, &[(X, -1)]),
    ];
    let coproducts: &[&[(usize, usize, i64)]] =
        &[&[(ONE, ONE, 1)], &[(G, G, 1)], &[(X, ONE, 1), (G, X, 1)], &[(GX, G, 1), (ONE, GX, 1)]];
    let antipode: &[&[(usize, i64)]] = &[&[(ONE, 1)], &[(G, 1)], &[(GX, -1)], &[(X, 1)]];
    table_algebra(field, &["1", "g", "x", "gx"], products, coproducts, &[1, 1, 0, 0], antipode)
}

/// The copy of `H₄` written with generators `G`, `X`.
pub fn sweedler_h4_capital(field: Field) -> Result<HopfAlgebra> {
    sweedler_h4(field)?.renamed(&["1", "G", "X", "GX"])
}

/// Group algebra of the cyclic group of order 2 on `(1, g)`.
pub fn group_algebra_c2(field: Field) -> Result<HopfAlgebra> {
    let products: ProductTable = &[(0, 0, &[(0, 1)]), (0, 1, &[(1, 1)]), (1, 0, &[(1, 1)]), (1, 1, &[(0, 1)])];
    let coproducts: &[&[(usize, usize, i64)]] = &[&[(0, 0, 1)], &[(1, 1, 1)]];
    table_algebra(field, &["1", "g"], products, coproducts, &[1, 1], &[&[(0, 1)], &[(1, 1)]])
}

/// `ℍ₄ ⊗ H₄` on the basis `{a ⊗ h}` with `a ∈ (1, G, X, GX)` major.
pub fn tensor_square_h4(field: Field) -> Result<HopfAlgebra> {
    tensor_product(&sweedler_h4_capital(field)?, &sweedler_h4(field)?)
}

/// `H₁₆,λ`, built as the bicrossed product of [`canonical_pair`] on the
/// ordered basis `{a ⋈ h}`, `a ∈ (1, G, X, GX)`, `h ∈ (1, g, x, gx)`.
pub fn h16_lambda(field: Field, lambda: &Scalar) -> Result<HopfAlgebra> {
    bicrossed_product(&canonical_pair(field, lambda)?)
}

/// A formal word in generators, with coefficient. The empty word is `1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub coefficient: Scalar,
    pub word: Vec<usize>,
}

/// `Σ lhs = Σ rhs`, words indexing into a generator list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationRelation {
    pub label: String,
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
}

impl PresentationRelation {
    pub fn new(label: impl Into<String>, lhs: Vec<Term>, rhs: Vec<Term>) -> Self {
        PresentationRelation { label: label.into(), lhs, rhs }
    }
}

fn term(c: &Scalar, word: &[usize]) -> Term {
    Term { coefficient: c.clone(), word: word.to_vec() }
}

/// The defining relations of `H₁₆,λ` over generators `[g, x, G, X]`.
pub fn h16_relations(field: Field, lambda: &Scalar) -> Vec<PresentationRelation> {
    const G: usize = 0;
    const X: usize = 1;
    const CG: usize = 2;
    const CX: usize = 3;
    let one = field.one();
    let m1 = -field.one();
    let zero = Vec::new();
    vec![
        PresentationRelation::new("g² = 1", vec![term(&one, &[G, G])], vec![term(&one, &[])]),
        PresentationRelation::new("G² = 1", vec![term(&one, &[CG, CG])], vec![term(&one, &[])]),
        PresentationRelation::new("x² = 0", vec![term(&one, &[X, X])], zero.clone()),
        PresentationRelation::new("X² = 0", vec![term(&one, &[CX, CX])], zero.clone()),
        PresentationRelation::new("gx = -xg", vec![term(&one, &[G, X])], vec![term(&m1, &[X, G])]),
        PresentationRelation::new("GX = -XG", vec![term(&one, &[CG, CX])], vec![term(&m1, &[CX, CG])]),
        PresentationRelation::new("gG = Gg", vec![term(&one, &[G, CG])], vec![term(&one, &[CG, G])]),
        PresentationRelation::new("gX = -Xg", vec![term(&one, &[G, CX])], vec![term(&m1, &[CX, G])]),
        PresentationRelation::new("xG = -Gx", vec![term(&one, &[X, CG])], vec![term(&m1, &[CG, X])]),
        PresentationRelation::new(
            "xX + Xx = λ(1 - Gg)",
            vec![term(&one, &[X, CX]), term(&one, &[CX, X])],
            vec![term(lambda, &[]), term(&-lambda, &[CG, G])],
        ),
    ]
}

/// Basis indices of the generators `[g, x, G, X]` inside `H₁₆,λ` or `ℍ₄ ⊗ H₄`.
pub fn h16_generators(h: &HopfAlgebra) -> Result<Vec<usize>> {
    ["g", "x", "G", "X"]
        .iter()
        .map(|n| h.index_of(n).ok_or_else(|| Error::Input(format!("no generator named {n}"))))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationFailure {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationReport {
    pub checked: usize,
    pub failures: Vec<RelationFailure>,
}

impl PresentationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn evaluate(h: &HopfAlgebra, gens: &[usize], terms: &[Term]) -> Vector {
    let mut acc = h.zero_vector();
    for t in terms {
        let v = t.word.iter().fold(h.unit().clone(), |w, &g| h.mul(&w, &h.basis_vector(gens[g])));
        acc.add_scaled(&t.coefficient, &v);
    }
    acc
}

/// Evaluates both sides of every relation with the algebra's multiplication.
pub fn verify_presentation(
    h: &HopfAlgebra,
    gens: &[usize],
    rels: &[PresentationRelation],
) -> Result<PresentationReport> {
    if let Some(&bad) = gens.iter().find(|&&g| g >= h.dim()) {
        return Err(Error::Input(format!("generator index {bad} out of range")));
    }
    let max_word = rels.iter().flat_map(|r| r.lhs.iter().chain(&r.rhs)).flat_map(|t| t.word.iter()).max();
    if let Some(&w) = max_word {
        if w >= gens.len() {
            return Err(Error::Input(format!("relation uses generator {w} of {}", gens.len())));
        }
    }
    let failures = rels
        .iter()
        .filter_map(|r| {
            let l = evaluate(h, gens, &r.lhs);
            let rr = evaluate(h, gens, &r.rhs);
            (l != rr).then(|| RelationFailure {
                label: r.label.clone(),
                lhs: h.format_vector(&l),
                rhs: h.format_vector(&rr),
            })
        })
        .collect();
    Ok(PresentationReport { checked: rels.len(), failures })
}
