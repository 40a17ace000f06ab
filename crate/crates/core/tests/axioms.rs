use bicross_core::hopf::{check_hopf_axioms, dual, tensor_product, twist, Axiom};
use bicross_core::morphism::{hopf_morphisms, is_bijective};
use bicross_core::presets::{
    group_algebra_c2, h16_generators, h16_lambda, h16_relations, sweedler_h4, tensor_square_h4, verify_presentation,
    PresentationRelation, Term,
};
use bicross_core::{drinfeld_double, Error, Field, HopfAlgebra};

fn fields() -> Vec<Field> {
    let mut v = vec![Field::rationals()];
    v.extend([3, 5, 7].map(|p| Field::prime(p).unwrap()));
    v
}

#[test]
fn presets_pass_over_all_fields() {
    for f in fields() {
        let mut algebras: Vec<HopfAlgebra> = vec![
            sweedler_h4(f).unwrap(),
            group_algebra_c2(f).unwrap(),
            tensor_product(&sweedler_h4(f).unwrap(), &sweedler_h4(f).unwrap()).unwrap(),
            drinfeld_double(&sweedler_h4(f).unwrap()).unwrap(),
        ];
        for l in [0, 1, 3] {
            algebras.push(h16_lambda(f, &f.from_i64(l)).unwrap());
        }
        for h in &algebras {
            let r = check_hopf_axioms(h);
            assert!(r.passed(), "{f} {:?}\n{r}", h.basis_names());
        }
    }
}

#[test]
fn characteristic_two_is_rejected() {
    assert!(matches!(Field::prime(2), Err(Error::Characteristic2)));
}

#[test]
fn dual_of_h4_matches_the_hand_computation() {
    let q = Field::rationals();
    let d = dual(&sweedler_h4(q).unwrap()).unwrap();
    let big_g = &d.element("1*") - &d.element("g*");
    let big_x = &d.element("x*") + &d.element("gx*");
    assert_eq!(d.mul(&big_g, &big_g), *d.unit());
    assert!(d.mul(&big_x, &big_x).is_zero());
    let gx = d.mul(&big_g, &big_x);
    assert_eq!(gx, d.mul(&big_x, &big_g).scale(&-q.one()));
    // Δ(X) = 1⊗X + X⊗G
    let mut expected = d.unit().outer(&big_x);
    expected.add_scaled(&q.one(), &big_x.outer(&big_g));
    assert_eq!(d.comul(&big_x), expected);
}

#[test]
fn double_dual_is_the_original() {
    let h = sweedler_h4(Field::prime(7).unwrap()).unwrap();
    assert_eq!(dual(&dual(&h).unwrap()).unwrap(), h);
}

#[test]
fn twists() {
    let f = Field::prime(5).unwrap();
    let h = sweedler_h4(f).unwrap();
    assert_eq!(twist(&h, false, false).unwrap(), h);
    let cop = twist(&h, false, true).unwrap();
    assert!(check_hopf_axioms(&cop).passed());
    assert_eq!(twist(&cop, false, true).unwrap(), h);
    assert!(check_hopf_axioms(&twist(&h, true, false).unwrap()).passed());
    assert!(check_hopf_axioms(&twist(&h, true, true).unwrap()).passed());
    // H₄^cop ≅ H₄, found by search
    let isos: Vec<_> = hopf_morphisms(&cop, &h).unwrap().into_iter().filter(is_bijective).collect();
    assert!(!isos.is_empty());
}

#[test]
fn singular_antipode_cannot_be_twisted_once() {
    let q = Field::rationals();
    let h = sweedler_h4(q).unwrap();
    let mut sc = h.structure().clone();
    sc.antipode = bicross_core::Matrix::zeros(q, 4, 4);
    let bad = HopfAlgebra::new(q, h.basis_names().to_vec(), sc).unwrap();
    assert!(matches!(twist(&bad, false, true), Err(Error::SingularAntipode)));
    let report = check_hopf_axioms(&bad);
    assert!(!report.check(Axiom::AntipodeLeft).passed());
}

#[test]
fn h16_presentation() {
    let f = Field::prime(5).unwrap();
    let lambda = f.from_i64(3);
    let h = h16_lambda(f, &lambda).unwrap();
    let gens = h16_generators(&h).unwrap();
    let rels = h16_relations(f, &lambda);
    assert_eq!(rels.len(), 10);
    assert!(verify_presentation(&h, &gens, &rels).unwrap().passed());

    // corrupted: xX + Xx = λ(1 + Gg)
    let mut bad = rels.last().unwrap().clone();
    bad.rhs[1].coefficient = lambda.clone();
    let report = verify_presentation(&h, &gens, &[bad]).unwrap();
    assert_eq!(report.failures.len(), 1);
}

#[test]
fn h16_zero_is_not_the_tensor_product() {
    let f = Field::prime(5).unwrap();
    let h0 = h16_lambda(f, &f.zero()).unwrap();
    let t = tensor_square_h4(f).unwrap();
    assert_ne!(h0, t);
    let gens = h16_generators(&h0).unwrap();
    let one = f.one();
    let anti = PresentationRelation::new(
        "gX = -Xg",
        vec![Term { coefficient: one.clone(), word: vec![0, 3] }],
        vec![Term { coefficient: -&one, word: vec![3, 0] }],
    );
    assert!(verify_presentation(&h0, &gens, std::slice::from_ref(&anti)).unwrap().passed());
    assert!(!verify_presentation(&t, &h16_generators(&t).unwrap(), &[anti]).unwrap().passed());
    let rels = h16_relations(f, &f.zero());
    let cross = rels.last().unwrap();
    assert!(verify_presentation(&h0, &gens, std::slice::from_ref(cross)).unwrap().passed());
}

#[test]
fn h16_one_cross_relation_over_rationals() {
    let q = Field::rationals();
    let h = h16_lambda(q, &q.one()).unwrap();
    let (x, big_x) = (h.element("x"), h.element("X"));
    assert_eq!(h.format_vector(&h.mul(&x, &big_x)), "1 - Gg - Xx");
}
