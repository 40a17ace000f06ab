//! Brute-force cross-checks written against hand-entered tables and plain
//! integer arithmetic.

use std::collections::BTreeSet;

use bicross_core::matched_pair::canonical_pair;
use bicross_core::morphism::{
    are_isomorphic, assemble_morphism, coalgebra_maps, hopf_morphisms, is_bijective, trivial_map, MorphismSolver,
    Quadruple,
};
use bicross_core::presets::sweedler_h4;
use bicross_core::{bicrossed_product, Field, HopfAlgebra, Matrix, Scalar};

/// `Δ` on `(1, g, x, gx)` as `(left, right, coefficient)` terms.
fn h4_coproducts() -> [Vec<(usize, usize, i64)>; 4] {
    [vec![(0, 0, 1)], vec![(1, 1, 1)], vec![(2, 0, 1), (1, 2, 1)], vec![(3, 1, 1), (0, 3, 1)]]
}

const H4_COUNIT: [i64; 4] = [1, 1, 0, 0];

/// `f` as four columns of residues.
type RawMap = [[u64; 4]; 4];

fn is_raw_coalgebra_map(f: &RawMap, p: u64) -> bool {
    let cop = h4_coproducts();
    let md = |v: i64| v.rem_euclid(p as i64) as u64;
    for j in 0..4 {
        // ε(f(e_j)) = ε(e_j)
        let eps: u64 = (0..4).map(|i| f[j][i] * md(H4_COUNIT[i])).sum::<u64>() % p;
        if eps != md(H4_COUNIT[j]) {
            return false;
        }
        // Δ(f(e_j)) = (f ⊗ f)(Δ e_j)
        let mut lhs = [[0u64; 4]; 4];
        for i in 0..4 {
            for &(a, b, c) in &cop[i] {
                lhs[a][b] = (lhs[a][b] + f[j][i] * md(c)) % p;
            }
        }
        let mut rhs = [[0u64; 4]; 4];
        for &(a, b, c) in &cop[j] {
            for k in 0..4 {
                for l in 0..4 {
                    rhs[k][l] = (rhs[k][l] + md(c) * f[a][k] % p * f[b][l]) % p;
                }
            }
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}

fn raw(m: &Matrix) -> RawMap {
    let mut out = [[0u64; 4]; 4];
    for (j, col) in out.iter_mut().enumerate() {
        for (i, c) in col.iter_mut().enumerate() {
            *c = m.get(i, j).residue().unwrap();
        }
    }
    out
}

#[test]
fn unitary_coalgebra_maps_by_exhaustion_at_p3() {
    let p = 3u64;
    let mut found = BTreeSet::new();
    for k in 0..p.pow(12) {
        let mut f = [[1, 0, 0, 0], [0; 4], [0; 4], [0; 4]];
        let mut rest = k;
        for col in f.iter_mut().skip(1) {
            for c in col.iter_mut() {
                *c = rest % p;
                rest /= p;
            }
        }
        if is_raw_coalgebra_map(&f, p) {
            found.insert(f);
        }
    }
    assert_eq!(found.len(), 82);
    let h = sweedler_h4(Field::prime(p).unwrap()).unwrap();
    let ours: BTreeSet<RawMap> = coalgebra_maps(&h, &h).unwrap().iter().map(raw).collect();
    assert_eq!(ours, found);
}

#[test]
fn hopf_endomorphisms_of_h4() {
    for p in [3, 5, 7] {
        let h = sweedler_h4(Field::prime(p).unwrap()).unwrap();
        let all = hopf_morphisms(&h, &h).unwrap();
        assert_eq!(all.len() as u64, p + 1);
        assert_eq!(all.iter().filter(|m| is_bijective(m)).count() as u64, p - 1);
    }
}

fn diag(f: Field, c: &Scalar) -> Matrix {
    let one = f.one();
    Matrix::from_fn(f, 4, 4, |i, j| match (i == j, i) {
        (false, _) => f.zero(),
        (true, 0 | 1) => one.clone(),
        (true, _) => c.clone(),
    })
}

/// `ψ(a ⋈ h)` checked against `ψ(ab) = ψ(a)ψ(b)` and `Δψ = (ψ⊗ψ)Δ`
/// straight from the structure tensors.
fn raw_bialgebra_check(src: &HopfAlgebra, dst: &HopfAlgebra, psi: &Matrix) -> bool {
    let n = src.dim();
    let f = src.field();
    let img = |i: usize| psi.column(i);
    for i in 0..n {
        for j in 0..n {
            let mut lhs = dst.zero_vector();
            for k in 0..n {
                let c = src.mult().get(i, j, k);
                if !c.is_zero() {
                    lhs.add_scaled(c, &img(k));
                }
            }
            let (a, b) = (img(i), img(j));
            let mut rhs = dst.zero_vector();
            for (s, x) in a.support() {
                for (t, y) in b.support() {
                    for k in 0..n {
                        let c = dst.mult().get(s, t, k);
                        if !c.is_zero() {
                            rhs.add_at(k, &(&(x * y) * c));
                        }
                    }
                }
            }
            if lhs != rhs {
                return false;
            }
        }
        let mut lhs = Matrix::zeros(f, n, n);
        for (s, x) in img(i).support() {
            for a in 0..n {
                for b in 0..n {
                    lhs.add_at(a, b, &(x * dst.comult().get(s, a, b)));
                }
            }
        }
        let mut rhs = Matrix::zeros(f, n, n);
        for a in 0..n {
            for b in 0..n {
                let c = src.comult().get(i, a, b);
                if !c.is_zero() {
                    for (s, x) in img(a).support() {
                        for (t, y) in img(b).support() {
                            rhs.add_at(s, t, &(&(c * x) * y));
                        }
                    }
                }
            }
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}

#[test]
fn rescaling_witnesses() {
    let f = Field::prime(7).unwrap();
    for l in 2..7 {
        let lambda = f.from_i64(l);
        let one = canonical_pair(f, &f.one()).unwrap();
        let other = canonical_pair(f, &lambda).unwrap();
        let (e1, el) = (bicrossed_product(&one).unwrap(), bicrossed_product(&other).unwrap());

        // 1 → λ: X ↦ λ⁻¹X on A, identity on H
        let q = Quadruple {
            u: diag(f, &lambda.inv().unwrap()),
            p: trivial_map(one.a(), other.h()),
            r: trivial_map(one.h(), other.a()),
            v: Matrix::identity(f, 4),
        };
        let psi = assemble_morphism(&q, &one, &other);
        assert!(raw_bialgebra_check(&e1, &el, &psi), "1 -> {l}");
        assert!(is_bijective(&psi));

        // λ → 1: identity on A, x ↦ λx on H
        let q = Quadruple {
            u: Matrix::identity(f, 4),
            p: trivial_map(other.a(), one.h()),
            r: trivial_map(other.h(), one.a()),
            v: diag(f, &lambda),
        };
        let psi = assemble_morphism(&q, &other, &one);
        assert!(raw_bialgebra_check(&el, &e1, &psi), "{l} -> 1");

        // λ → 1 keeping X ↦ λ⁻¹X forces x ↦ λ²x
        let q = Quadruple { u: diag(f, &lambda.inv().unwrap()), v: diag(f, &lambda.pow(2)), ..q };
        let psi = assemble_morphism(&q, &other, &one);
        assert!(raw_bialgebra_check(&el, &e1, &psi), "{l} -> 1 via λ⁻¹");
    }
}

#[test]
fn solver_recovers_the_rescaling() {
    let f = Field::prime(5).unwrap();
    let one = canonical_pair(f, &f.one()).unwrap();
    for l in 2..5 {
        let lambda = f.from_i64(l);
        let other = canonical_pair(f, &lambda).unwrap();
        let qs = MorphismSolver::new().solve(&one, &other).unwrap();
        assert!(qs.iter().any(|q| q.u == diag(f, &lambda.inv().unwrap()) && q.v == Matrix::identity(f, 4)));
    }
}

#[test]
fn searched_witness_passes_the_raw_check() {
    let f = Field::prime(5).unwrap();
    let (src, dst) = (canonical_pair(f, &f.from_i64(3)).unwrap(), canonical_pair(f, &f.one()).unwrap());
    let (_, psi) = are_isomorphic(&src, &dst).unwrap().witness.unwrap();
    assert!(raw_bialgebra_check(&bicrossed_product(&src).unwrap(), &bicrossed_product(&dst).unwrap(), &psi));
}
