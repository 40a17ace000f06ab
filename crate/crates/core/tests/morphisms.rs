use bicross_core::matched_pair::{canonical_pair, trivial_pair};
use bicross_core::morphism::{
    assemble_morphism, check_bialgebra_map, is_bijective, AutKind, MorphismSolver, Parametrization,
};
use bicross_core::{bicrossed_product, Field, MatchedPair};

fn f5() -> Field {
    Field::prime(5).unwrap()
}

fn canonical(l: i64) -> MatchedPair {
    let f = f5();
    canonical_pair(f, &f.from_i64(l)).unwrap()
}

#[test]
fn every_solved_quadruple_assembles_to_a_bialgebra_map() {
    let f = f5();
    let mut solver = MorphismSolver::new();
    let pairs = [trivial_pair(f).unwrap(), canonical(0), canonical(1)];
    for src in &pairs {
        for dst in &pairs {
            let e = bicrossed_product(src).unwrap();
            let g = bicrossed_product(dst).unwrap();
            for q in solver.solve(src, dst).unwrap() {
                let psi = assemble_morphism(&q, src, dst);
                assert!(check_bialgebra_map(&e, &g, &psi).passed());
            }
        }
    }
}

#[test]
fn bijective_solutions_swap_or_keep_both_halves() {
    let mut solver = MorphismSolver::new();
    let pair = canonical(1);
    let a = pair.a().clone();
    let h = pair.h().clone();
    let triv_u = bicross_core::morphism::trivial_map(&a, &a);
    let triv_v = bicross_core::morphism::trivial_map(&h, &h);
    for q in solver.solve(&pair, &pair).unwrap() {
        let psi = assemble_morphism(&q, &pair, &pair);
        if is_bijective(&psi) {
            assert_eq!(q.u == triv_u, q.v == triv_v);
        }
    }
}

#[test]
fn iso_classes_over_f5() {
    let f = f5();
    let mut pairs = vec![trivial_pair(f).unwrap()];
    pairs.extend((0..5).map(canonical));
    let mut solver = MorphismSolver::new();
    let classes = solver.iso_classes(&pairs).unwrap();
    assert_eq!(classes, vec![vec![0], vec![1], vec![2, 3, 4, 5]]);
}

#[test]
fn tensor_is_not_h16_0() {
    let mut solver = MorphismSolver::new();
    let r = solver.are_isomorphic(&trivial_pair(f5()).unwrap(), &canonical(0)).unwrap();
    assert!(!r.isomorphic);
    assert!(r.witness.is_none());
}

#[test]
fn h16_3_is_h16_1_with_witness() {
    let mut solver = MorphismSolver::new();
    let (src, dst) = (canonical(3), canonical(1));
    let r = solver.are_isomorphic(&src, &dst).unwrap();
    assert!(r.isomorphic);
    let (_, psi) = r.witness.unwrap();
    let e = bicrossed_product(&src).unwrap();
    let g = bicrossed_product(&dst).unwrap();
    assert!(check_bialgebra_map(&e, &g, &psi).passed());
    assert!(is_bijective(&psi));
}

#[test]
fn automorphisms_of_h16_1() {
    let mut solver = MorphismSolver::new();
    let g = solver.automorphism_group(&canonical(1)).unwrap();
    assert_eq!(g.order, 8);
    assert!(!g.abelian);
    // dihedral rather than quaternion: five involutions
    assert_eq!(g.involutions, 5);
    assert_eq!(g.parametrization, Parametrization::OneParameter);
    assert!(g.relations_verified);
    assert_eq!(g.elements.iter().filter(|e| e.label.kind == AutKind::Swap).count(), 4);
}

#[test]
fn automorphisms_of_h16_0_and_tensor() {
    let mut solver = MorphismSolver::new();
    let g0 = solver.automorphism_group(&canonical(0)).unwrap();
    let gt = solver.automorphism_group(&trivial_pair(f5()).unwrap()).unwrap();
    for g in [&g0, &gt] {
        assert_eq!(g.order, 32);
        assert!(!g.abelian);
        assert_eq!(g.parametrization, Parametrization::TwoParameter);
        assert!(g.relations_verified);
    }
    assert_eq!(g0.table_by_label().unwrap(), gt.table_by_label().unwrap());
}
