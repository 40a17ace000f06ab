//! Finite-dimensional Hopf algebras presented by structure constants.
//!
//! Conventions, for a basis `e_0, …, e_{n-1}`:
//!
//! * `mult[i][j][k]`: `e_i · e_j = Σ_k mult[i][j][k] e_k`
//! * `comult[i][j][k]`: `Δ(e_i) = Σ_{j,k} comult[i][j][k] e_j ⊗ e_k`
//! * `unit`: coordinates of `1`
//! * `counit[i] = ε(e_i)`
//! * `antipode`: matrix of `S` in the column convention.
//!
//! Basis order is part of the identity of an algebra: equality is
//! coefficient-wise. Isomorphism is a separate, searched notion (see
//! [`crate::morphism`]).

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{Matrix, Tensor3, Vector};

/// Everything needed to build a [`HopfAlgebra`] apart from the basis names.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    pub mult: Tensor3,
    pub unit: Vector,
    pub comult: Tensor3,
    pub counit: Vector,
    pub antipode: Matrix,
}

#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    field: Field,
    basis: Vec<String>,
    sc: StructureConstants,
    verified: bool,
    products: Vec<Vec<(usize, Scalar)>>,
    coproducts: Vec<Vec<(usize, usize, Scalar)>>,
}

impl PartialEq for HopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis && self.same_structure(other)
    }
}

impl Eq for HopfAlgebra {}

impl HopfAlgebra {
    /// Validates dimensions and fields; does not check the Hopf axioms.
    pub fn new(field: Field, basis: Vec<String>, sc: StructureConstants) -> Result<Self> {
        let n = basis.len();
        if n == 0 {
            return Err(Error::Dimension("dimension must be positive".into()));
        }
        let dims_ok = sc.mult.dims() == [n, n, n]
            && sc.comult.dims() == [n, n, n]
            && sc.unit.len() == n
            && sc.counit.len() == n
            && sc.antipode.rows() == n
            && sc.antipode.cols() == n;
        if !dims_ok {
            return Err(Error::Dimension(format!("structure constants do not match dimension {n}")));
        }
        for f in [sc.mult.field(), sc.comult.field(), sc.unit.field(), sc.counit.field(), sc.antipode.field()] {
            if f != field {
                return Err(Error::FieldMismatch(field, f));
            }
        }
        if field.characteristic() == 2 {
            return Err(Error::Characteristic2);
        }
        let mut products = vec![Vec::new(); n * n];
        for (i, j, k, c) in sc.mult.support() {
            products[i * n + j].push((k, c.clone()));
        }
        let mut coproducts = vec![Vec::new(); n];
        for (i, j, k, c) in sc.comult.support() {
            coproducts[i].push((j, k, c.clone()));
        }
        Ok(HopfAlgebra { field, basis, sc, verified: false, products, coproducts })
    }

    /// Runs [`check_hopf_axioms`] and marks the algebra verified on success.
    pub fn verified(mut self) -> Result<Self> {
        let report = check_hopf_axioms(&self);
        if !report.passed() {
            return Err(Error::AxiomsFailed(Box::new(report)));
        }
        self.verified = true;
        Ok(self)
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// Same data with new basis names; keeps the verified flag.
    pub fn renamed(mut self, names: &[&str]) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(Error::Dimension(format!("{} names for dimension {}", names.len(), self.dim())));
        }
        self.basis = names.iter().map(|s| s.to_string()).collect();
        Ok(self)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    pub fn structure(&self) -> &StructureConstants {
        &self.sc
    }

    pub fn mult(&self) -> &Tensor3 {
        &self.sc.mult
    }

    pub fn comult(&self) -> &Tensor3 {
        &self.sc.comult
    }

    pub fn unit(&self) -> &Vector {
        &self.sc.unit
    }

    pub fn counit(&self) -> &Vector {
        &self.sc.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.sc.antipode
    }

    pub fn same_structure(&self, other: &HopfAlgebra) -> bool {
        self.field == other.field
            && self.sc.mult == other.sc.mult
            && self.sc.unit == other.sc.unit
            && self.sc.comult == other.sc.comult
            && self.sc.counit == other.sc.counit
            && self.sc.antipode == other.sc.antipode
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::unit(self.field, self.dim(), i)
    }

    /// Basis vector by name. Panics on unknown names; meant for presets and tests.
    pub fn element(&self, name: &str) -> Vector {
        let i = self.index_of(name).unwrap_or_else(|| panic!("no basis element named {name:?}"));
        self.basis_vector(i)
    }

    pub fn zero_vector(&self) -> Vector {
        Vector::zeros(self.field, self.dim())
    }

    /// Nonzero terms of `e_i · e_j`.
    pub fn product_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i * self.dim() + j]
    }

    /// Nonzero terms `(j, k, c)` of `Δ(e_i)`.
    pub fn coproduct_terms(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.coproducts[i]
    }

    /// Terms `(j, k, l, c)` of `(Δ ⊗ id)Δ(e_i)`.
    pub fn coproduct2_terms(&self, i: usize) -> Vec<(usize, usize, usize, Scalar)> {
        let mut acc = Tensor3::zeros(self.field, [self.dim(); 3]);
        for (a, l, c) in self.coproduct_terms(i) {
            for (j, k, d) in self.coproduct_terms(*a) {
                acc.add_at(*j, *k, *l, &(c * d));
            }
        }
        acc.support().map(|(j, k, l, c)| (j, k, l, c.clone())).collect()
    }

    pub fn mul(&self, a: &Vector, b: &Vector) -> Vector {
        let mut out = self.zero_vector();
        for (i, x) in a.support() {
            for (j, y) in b.support() {
                let xy = x * y;
                for (k, c) in self.product_terms(i, j) {
                    out.add_at(*k, &(&xy * c));
                }
            }
        }
        out
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Vector {
        let mut out = self.zero_vector();
        for (k, c) in self.product_terms(i, j) {
            out.set(*k, c.clone());
        }
        out
    }

    /// `Δ(a)` as a `dim × dim` matrix.
    pub fn comul(&self, a: &Vector) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.dim(), self.dim());
        for (i, x) in a.support() {
            for (j, k, c) in self.coproduct_terms(i) {
                out.add_at(*j, *k, &(x * c));
            }
        }
        out
    }

    pub fn counit_of(&self, a: &Vector) -> Scalar {
        self.sc.counit.dot(a)
    }

    pub fn apply_antipode(&self, a: &Vector) -> Vector {
        self.sc.antipode.apply(a)
    }

    /// Product in `H ⊗ H` of two elements given as matrices.
    pub fn mul_tensor(&self, x: &Matrix, y: &Matrix) -> Matrix {
        let n = self.dim();
        let mut out = Matrix::zeros(self.field, n, n);
        for (a, b, c) in x.support() {
            for (d, e, f) in y.support() {
                let coef = c * f;
                for (k, s) in self.product_terms(a, d) {
                    let ks = &coef * s;
                    for (l, t) in self.product_terms(b, e) {
                        out.add_at(*k, *l, &(&ks * t));
                    }
                }
            }
        }
        out
    }

    /// Renders `v` in basis-name notation, e.g. `1 - g + 2*x`.
    pub fn format_vector(&self, v: &Vector) -> String {
        format_combination(v.support().map(|(i, c)| (c.clone(), self.basis[i].clone())))
    }

    /// Renders an element of `A ⊗ B` given as a matrix.
    pub fn format_tensor(left: &HopfAlgebra, right: &HopfAlgebra, t: &Matrix) -> String {
        format_combination(t.support().map(|(i, j, c)| (c.clone(), format!("{}⊗{}", left.basis[i], right.basis[j]))))
    }

    /// Parses a linear combination such as `1 - g + 2*x` or `1/2*gx`.
    /// A bare scalar is a multiple of the basis element named `1`.
    pub fn parse_vector(&self, text: &str) -> Result<Vector> {
        let mut out = self.zero_vector();
        let cleaned = text.replace(' ', "");
        if cleaned.is_empty() || cleaned == "0" {
            return Ok(out);
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        for (pos, ch) in cleaned.char_indices() {
            if (ch == '+' || ch == '-') && pos > 0 && !cur.is_empty() {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (-self.field.one(), rest.to_string()),
                None => (self.field.one(), term.trim_start_matches('+').to_string()),
            };
            let (coef, name) = match body.rsplit_once('*') {
                Some((c, n)) => (self.field.parse(c)?, n.to_string()),
                None => match self.field.parse(&body) {
                    Ok(c) => (c, "1".to_string()),
                    Err(_) => (self.field.one(), body.clone()),
                },
            };
            let idx = self.index_of(&name).ok_or_else(|| Error::Parse(format!("unknown basis element {name:?}")))?;
            out.add_at(idx, &(sign * coef));
        }
        Ok(out)
    }
}

pub(crate) fn format_combination(terms: impl Iterator<Item = (Scalar, String)>) -> String {
    let mut out = String::new();
    for (c, name) in terms {
        let neg = c.is_negative_rational();
        let mag = if neg { -&c } else { c };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if name == "1" {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&name);
        } else {
            out.push_str(&format!("{mag}*{name}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    ComultiplicationMultiplicative,
    CounitMultiplicative,
    AntipodeLeft,
    AntipodeRight,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::Associativity,
        Axiom::Unit,
        Axiom::Coassociativity,
        Axiom::Counit,
        Axiom::ComultiplicationMultiplicative,
        Axiom::CounitMultiplicative,
        Axiom::AntipodeLeft,
        Axiom::AntipodeRight,
    ];
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Associativity => "associativity",
            Axiom::Unit => "unit",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counit => "counit",
            Axiom::ComultiplicationMultiplicative => "comultiplication is an algebra map",
            Axiom::CounitMultiplicative => "counit is an algebra map",
            Axiom::AntipodeLeft => "antipode m(S⊗id)Δ = 1ε",
            Axiom::AntipodeRight => "antipode m(id⊗S)Δ = 1ε",
        };
        f.write_str(s)
    }
}

/// One violated instance of an axiom, on named basis elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub basis: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub violations: Vec<Violation>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn check(&self, axiom: Axiom) -> &AxiomCheck {
        self.checks.iter().find(|c| c.axiom == axiom).expect("every axiom is checked")
    }

    pub fn failed_axioms(&self) -> Vec<Axiom> {
        self.checks.iter().filter(|c| !c.passed()).map(|c| c.axiom).collect()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match c.violations.first() {
                None => writeln!(f, "  pass  {}", c.axiom)?,
                Some(v) => writeln!(
                    f,
                    "  FAIL  {} at ({}): {} ({} violation(s))",
                    c.axiom,
                    v.basis.join(", "),
                    v.detail,
                    c.violations.len()
                )?,
            }
        }
        Ok(())
    }
}

/// Checks every bialgebra and antipode axiom as an exact identity on basis
/// elements.
pub fn check_hopf_axioms(h: &HopfAlgebra) -> AxiomReport {
    let n = h.dim();
    let name = |i: usize| h.basis[i].clone();
    let one = h.unit();
    let mut checks = Vec::new();

    let mut v = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut left = Sparse::new();
                for (m, c) in h.product_terms(i, j) {
                    for (t, d) in h.product_terms(*m, k) {
                        left.add(*t, c * d);
                    }
                }
                let mut right = Sparse::new();
                for (m, c) in h.product_terms(j, k) {
                    for (t, d) in h.product_terms(i, *m) {
                        right.add(*t, c * d);
                    }
                }
                if left != right {
                    let (left, right) = (left.to_vector(h), right.to_vector(h));
                    v.push(Violation {
                        basis: vec![name(i), name(j), name(k)],
                        detail: format!("({}) ≠ ({})", h.format_vector(&left), h.format_vector(&right)),
                    });
                }
            }
        }
    }
    checks.push(AxiomCheck { axiom: Axiom::Associativity, violations: v });

    let mut v = Vec::new();
    for i in 0..n {
        let e = h.basis_vector(i);
        let l = h.mul(one, &e);
        let r = h.mul(&e, one);
        if l != e || r != e {
            v.push(Violation {
                basis: vec![name(i)],
                detail: format!("1·e = {}, e·1 = {}", h.format_vector(&l), h.format_vector(&r)),
            });
        }
    }
    checks.push(AxiomCheck { axiom: Axiom::Unit, violations: v });

    let mut v = Vec::new();
    for i in 0..n {
        let mut left = Tensor3::zeros(h.field, [n; 3]);
        let mut right = Tensor3::zeros(h.field, [n; 3]);
        for (a, b, c) in h.coproduct_terms(i) {
            for (x, y, d) in h.coproduct_terms(*a) {
                left.add_at(*x, *y, *b, &(c * d));
            }
            for (x, y, d) in h.coproduct_terms(*b) {
                right.add_at(*a, *x, *y, &(c * d));
            }
        }
        if left != right {
            v.push(Violation { basis: vec![name(i)], detail: "(Δ⊗id)Δ ≠ (id⊗Δ)Δ".into() });
        }
    }
    checks.push(AxiomCheck { axiom: Axiom::Coassociativity, violations: v });

    let mut v = Vec::new();
    for i in 0..n {
        let mut left = h.zero_vector();
        let mut right = h.zero_vector();
        for (a, b, c) in h.coproduct_terms(i) {
            left.add_at(*b, &(c * &h.counit()[*a]));
            right.add_at(*a, &(c * &h.counit()[*b]));
        }
        let e = h.basis_vector(i);
        if left != e || right != e {
            v.push(Violation {
                basis: vec![name(i)],
                detail: format!("(ε⊗id)Δ = {}, (id⊗ε)Δ = {}", h.format_vector(&left), h.format_vector(&right)),
            });
        }
    }
    checks.push(AxiomCheck { axiom: Axiom::Counit, violations: v });

    let mut v = Vec::new();
    let delta_one = h.comul(one);
    if delta_one != one.outer(one) {
        v.push(Violation { basis: vec!["1".into()], detail: "Δ(1) ≠ 1⊗1".into() });
    }
    for i in 0..n {
        for j in 0..n {
            let mut l = Sparse::new();
            for (m, c) in h.product_terms(i, j) {
                for (x, y, d) in h.coproduct_terms(*m) {
                    l.add(x * n + y, c * d);
                }
            }
            let mut r = Sparse::new();
            for (a, b, c) in h.coproduct_terms(i) {
                for (a2, b2, d) in h.coproduct_terms(j) {
                    let cd = c * d;
                    for (x, e) in h.product_terms(*a, *a2) {
                        for (y, f) in h.product_terms(*b, *b2) {
                            r.add(x * n + y, &(&cd * e) * f);
                        }
                    }
                }
            }
            if l != r {
                let left = h.comul(&h.mul_basis(i, j));
                let right = h.mul_tensor(&h.comul(&h.basis_vector(i)), &h.comul(&h.basis_vector(j)));
                v.push(Violation {
                    basis: vec![name(i), name(j)],
                    detail: format!(
                        "Δ(ab) = {} but Δ(a)Δ(b) = {}",
                        HopfAlgebra::format_tensor(h, h, &left),
                        HopfAlgebra::format_tensor(h, h, &right)
                    ),
                });
            }
        }
    }
    checks.push(AxiomCheck { axiom: Axiom::ComultiplicationMultiplicative, violations: v });

    let mut v = Vec::new();
    if !h.counit_of(one).is_one() {
        v.push(Violation { basis: vec!["1".into()], detail: "ε(1) ≠ 1".into() });
    }
    for i in 0..n {
        for j in 0..n {
            let left = h.counit_of(&h.mul_basis(i, j));
            let right = &h.counit()[i] * &h.counit()[j];
            if left != right {
                v.push(Violation {
                    basis: vec![name(i), name(j)],
                    detail: format!("ε(ab) = {left}, ε(a)ε(b) = {right}"),
                });
            }
        }
    }
    checks.push(AxiomCheck { axiom: Axiom::CounitMultiplicative, violations: v });

    let antipode_images: Vec<Vector> = (0..n).map(|i| h.antipode().column(i)).collect();
    for (axiom, left_side) in [(Axiom::AntipodeLeft, true), (Axiom::AntipodeRight, false)] {
        let mut v = Vec::new();
        for i in 0..n {
            let mut acc = h.zero_vector();
            for (a, b, c) in h.coproduct_terms(i) {
                let term = if left_side {
                    h.mul(&antipode_images[*a], &h.basis_vector(*b))
                } else {
                    h.mul(&h.basis_vector(*a), &antipode_images[*b])
                };
                acc.add_scaled(c, &term);
            }
            let expected = one.scale(&h.counit()[i]);
            if acc != expected {
                v.push(Violation {
                    basis: vec![name(i)],
                    detail: format!("got {}, expected {}", h.format_vector(&acc), h.format_vector(&expected)),
                });
            }
        }
        checks.push(AxiomCheck { axiom, violations: v });
    }

    AxiomReport { checks }
}

/// Sparse accumulator keyed by basis index; zero entries are dropped so
/// equality is equality of vectors.
#[derive(PartialEq)]
struct Sparse(BTreeMap<usize, Scalar>);

impl Sparse {
    fn new() -> Self {
        Sparse(BTreeMap::new())
    }

    fn add(&mut self, k: usize, c: Scalar) {
        match self.0.entry(k) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn to_vector(&self, h: &HopfAlgebra) -> Vector {
        let mut v = h.zero_vector();
        for (k, c) in &self.0 {
            v.set(*k, c.clone());
        }
        v
    }
}

/// Joins two basis names the way the presets print products: the unit `1`
/// is dropped, so `G` and `g` give `Gg` and `1` and `x` give `x`.
pub(crate) fn join_names(a: &str, b: &str) -> String {
    match (a, b) {
        ("1", "1") => "1".into(),
        ("1", _) => b.into(),
        (_, "1") => a.into(),
        _ => format!("{a}{b}"),
    }
}

/// `A ⊗ B` with componentwise product, tensor coalgebra and `S_A ⊗ S_B`.
/// Basis order is `A`-major: `a_i ⊗ b_j` has index `i·dim(B) + j`.
pub fn tensor_product(a: &HopfAlgebra, b: &HopfAlgebra) -> Result<HopfAlgebra> {
    if a.field != b.field {
        return Err(Error::FieldMismatch(a.field, b.field));
    }
    let field = a.field;
    let (na, nb) = (a.dim(), b.dim());
    let n = na * nb;
    let idx = |i: usize, j: usize| i * nb + j;

    let mut mult = Tensor3::zeros(field, [n; 3]);
    for i in 0..na {
        for k in 0..na {
            for (r, c) in a.product_terms(i, k) {
                for j in 0..nb {
                    for l in 0..nb {
                        for (s, d) in b.product_terms(j, l) {
                            mult.add_at(idx(i, j), idx(k, l), idx(*r, *s), &(c * d));
                        }
                    }
                }
            }
        }
    }
    let mut comult = Tensor3::zeros(field, [n; 3]);
    for i in 0..na {
        for (i1, i2, c) in a.coproduct_terms(i) {
            for j in 0..nb {
                for (j1, j2, d) in b.coproduct_terms(j) {
                    comult.add_at(idx(i, j), idx(*i1, *j1), idx(*i2, *j2), &(c * d));
                }
            }
        }
    }
    let antipode =
        Matrix::from_fn(field, n, n, |r, c| a.antipode().get(r / nb, c / nb) * b.antipode().get(r % nb, c % nb));
    let basis = (0..n).map(|k| join_names(&a.basis[k / nb], &b.basis[k % nb])).collect();
    let sc = StructureConstants {
        mult,
        unit: a.unit().kron(b.unit()),
        comult,
        counit: a.counit().kron(b.counit()),
        antipode,
    };
    let mut out = HopfAlgebra::new(field, basis, sc)?;
    out.verified = a.verified && b.verified;
    Ok(out)
}

fn dual_name(name: &str) -> String {
    match name.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{name}*"),
    }
}

/// The dual Hopf algebra on the dual basis `e_i*`.
pub fn dual(h: &HopfAlgebra) -> Result<HopfAlgebra> {
    let sc = StructureConstants {
        // e_i*·e_j* = Σ_k comult[k][i][j] e_k*
        mult: first_to_last(&h.sc.comult),
        unit: h.sc.counit.clone(),
        // Δ(e_k*) = Σ_{i,j} mult[i][j][k] e_i* ⊗ e_j*
        comult: last_to_first(&h.sc.mult),
        counit: h.sc.unit.clone(),
        antipode: h.sc.antipode.transpose(),
    };
    let basis = h.basis.iter().map(|b| dual_name(b)).collect();
    let mut out = HopfAlgebra::new(h.field, basis, sc)?;
    out.verified = h.verified;
    Ok(out)
}

/// `t'[a][b][c] = t[c][a][b]`: moves the first index to the end.
fn first_to_last(t: &Tensor3) -> Tensor3 {
    let [a, b, c] = t.dims();
    let mut out = Tensor3::zeros(t.field(), [b, c, a]);
    for (i, j, k, v) in t.support() {
        out.set(j, k, i, v.clone());
    }
    out
}

/// `t'[a][b][c] = t[b][c][a]`: moves the last index to the front.
fn last_to_first(t: &Tensor3) -> Tensor3 {
    let [a, b, c] = t.dims();
    let mut out = Tensor3::zeros(t.field(), [c, a, b]);
    for (i, j, k, v) in t.support() {
        out.set(k, i, j, v.clone());
    }
    out
}

/// `H^op` and/or `H^cop`. With exactly one flip the antipode becomes `S⁻¹`.
pub fn twist(h: &HopfAlgebra, flip_mult: bool, flip_comult: bool) -> Result<HopfAlgebra> {
    if !flip_mult && !flip_comult {
        return Ok(h.clone());
    }
    let antipode = if flip_mult && flip_comult {
        h.sc.antipode.clone()
    } else {
        h.sc.antipode.inverse().ok_or(Error::SingularAntipode)?
    };
    let sc = StructureConstants {
        mult: if flip_mult { h.sc.mult.swap_first() } else { h.sc.mult.clone() },
        unit: h.sc.unit.clone(),
        comult: if flip_comult { h.sc.comult.swap_last() } else { h.sc.comult.clone() },
        counit: h.sc.counit.clone(),
        antipode,
    };
    let mut out = HopfAlgebra::new(h.field, h.basis.clone(), sc)?;
    out.verified = h.verified;
    Ok(out)
}

/// The one-dimensional Hopf algebra `k`.
pub fn trivial_algebra(field: Field) -> Result<HopfAlgebra> {
    let mut mult = Tensor3::zeros(field, [1; 3]);
    mult.set(0, 0, 0, field.one());
    let mut comult = Tensor3::zeros(field, [1; 3]);
    comult.set(0, 0, 0, field.one());
    let sc = StructureConstants {
        mult,
        unit: Vector::from_i64s(field, &[1]),
        comult,
        counit: Vector::from_i64s(field, &[1]),
        antipode: Matrix::identity(field, 1),
    };
    HopfAlgebra::new(field, vec!["1".into()], sc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::sweedler_h4;

    #[test]
    fn one_dimensional_algebra_passes() {
        let k = trivial_algebra(Field::rationals()).unwrap();
        assert!(check_hopf_axioms(&k).passed());
    }

    #[test]
    fn corrupted_antipode_fails_on_x() {
        let q = Field::rationals();
        let h = sweedler_h4(q).unwrap();
        let mut sc = h.structure().clone();
        // S(x) = +gx instead of -gx
        sc.antipode.set(3, 2, q.one());
        let bad = HopfAlgebra::new(q, h.basis_names().to_vec(), sc).unwrap();
        let report = check_hopf_axioms(&bad);
        assert!(!report.passed());
        let left = report.check(Axiom::AntipodeLeft);
        assert_eq!(left.violations[0].basis, vec!["x".to_string()]);
        assert_eq!(left.violations[0].detail, "got 2*gx, expected 0");
        assert!(matches!(bad.verified(), Err(Error::AxiomsFailed(_))));
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let q = Field::rationals();
        let h = sweedler_h4(q).unwrap();
        let mut sc = h.structure().clone();
        sc.unit = Vector::from_i64s(q, &[1, 0, 0]);
        assert!(matches!(HopfAlgebra::new(q, h.basis_names().to_vec(), sc), Err(Error::Dimension(_))));
    }

    #[test]
    fn vector_text_round_trip() {
        let h = sweedler_h4(Field::rationals()).unwrap();
        let v = h.parse_vector("1 - g + 1/2*x - gx").unwrap();
        assert_eq!(h.format_vector(&v), "1 - g + 1/2*x - gx");
        assert_eq!(h.parse_vector(&h.format_vector(&v)).unwrap(), v);
        assert_eq!(h.format_vector(&h.zero_vector()), "0");
        assert!(h.parse_vector("y").is_err());
    }

    #[test]
    fn tensor_with_unit_object_is_a_copy() {
        let q = Field::rationals();
        let h = sweedler_h4(q).unwrap();
        let k = trivial_algebra(q).unwrap();
        let t = tensor_product(&k, &h).unwrap();
        assert_eq!(t, h);
    }

    #[test]
    fn field_mismatch_in_tensor_product() {
        let a = sweedler_h4(Field::rationals()).unwrap();
        let b = sweedler_h4(Field::prime(5).unwrap()).unwrap();
        assert!(matches!(tensor_product(&a, &b), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn dual_pairs_products_with_coproducts() {
        let q = Field::rationals();
        let h = sweedler_h4(q).unwrap();
        let d = dual(&h).unwrap();
        assert!(check_hopf_axioms(&d).passed());
        // (g*·x*)(y) = g*(y₁) x*(y₂) picks the g⊗x term of Δ(x)
        assert_eq!(d.mul(&d.element("g*"), &d.element("x*")), d.element("x*"));
        assert_eq!(d.mul(&d.element("x*"), &d.element("g*")), d.zero_vector());
        assert_eq!(dual(&d).unwrap(), h);
    }
}
