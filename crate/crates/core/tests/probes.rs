use bicross_core::hopf::dual;
use bicross_core::matched_pair::{canonical_pair, Side};
use bicross_core::presets::{group_algebra_c2, h16_lambda, sweedler_h4, tensor_square_h4};
use bicross_core::probe::{group_likes, integrals, is_group_like, is_semisimple, skew_primitives};
use bicross_core::{drinfeld_double, Field, HopfAlgebra, Vector};

/// Plain scan of all `p^dim` vectors.
fn scan_group_likes(h: &HopfAlgebra) -> Vec<Vector> {
    let f = h.field();
    let elems = f.elements();
    let n = h.dim();
    let total = elems.len().pow(n as u32);
    (0..total)
        .filter_map(|mut k| {
            let coeffs = (0..n)
                .map(|_| {
                    let c = elems[k % elems.len()].clone();
                    k /= elems.len();
                    c
                })
                .collect();
            let v = Vector::from_scalars(f, coeffs).unwrap();
            (h.counit_of(&v).is_one() && h.comul(&v) == v.outer(&v)).then_some(v)
        })
        .collect()
}

fn sorted(mut v: Vec<Vector>) -> Vec<Vector> {
    v.sort_by_key(|x| x.iter().map(|c| c.residue().unwrap()).collect::<Vec<_>>());
    v
}

#[test]
fn h4_group_likes_agree_with_a_full_scan() {
    for p in [3, 5, 7] {
        let h = sweedler_h4(Field::prime(p).unwrap()).unwrap();
        let found = group_likes(&h, None).unwrap();
        assert_eq!(found, vec![h.element("1"), h.element("g")]);
        assert_eq!(sorted(found), sorted(scan_group_likes(&h)));
    }
    let k = group_algebra_c2(Field::prime(5).unwrap()).unwrap();
    assert_eq!(sorted(group_likes(&k, None).unwrap()), sorted(scan_group_likes(&k)));
}

#[test]
fn sixteen_dimensional_group_likes() {
    let f = Field::prime(5).unwrap();
    let t = tensor_square_h4(f).unwrap();
    assert_eq!(group_likes(&t, None).unwrap().len(), 4);

    let h = h16_lambda(f, &f.one()).unwrap();
    let found = group_likes(&h, None).unwrap();
    let expected: Vec<Vector> = ["1", "g", "G", "Gg"].iter().map(|n| h.element(n)).collect();
    assert_eq!(sorted(found.clone()), sorted(expected));
    // a Klein four-group: closed, every element squares to 1
    for a in &found {
        assert_eq!(h.mul(a, a), *h.unit());
        assert_eq!(h.apply_antipode(a), *a);
        for b in &found {
            assert!(found.contains(&h.mul(a, b)));
        }
    }
}

#[test]
fn candidate_mode_over_rationals() {
    let q = Field::rationals();
    let h = h16_lambda(q, &q.one()).unwrap();
    let cands: Vec<Vector> = h.basis_names().iter().map(|n| h.element(n)).collect();
    let found = group_likes(&h, Some(&cands)).unwrap();
    assert_eq!(found.len(), 4);
    assert!(found.iter().all(|v| is_group_like(&h, v)));
}

#[test]
fn h4_skew_primitive_bases() {
    let q = Field::rationals();
    let h = sweedler_h4(q).unwrap();
    let (one, g) = (h.element("1"), h.element("g"));
    let p1g = skew_primitives(&h, &one, &g).unwrap();
    assert_eq!(p1g.vectors(), &[&one - &g, h.element("x")]);
    let pg1 = skew_primitives(&h, &g, &one).unwrap();
    assert_eq!(pg1.vectors(), &[&one - &g, h.element("gx")]);
    assert_eq!(skew_primitives(&h, &one, &one).unwrap().dim(), 0);
    assert_eq!(skew_primitives(&h, &g, &g).unwrap().dim(), 0);
}

#[test]
fn primitives_are_mapped_into_the_predicted_spaces() {
    // g ⊳ x ∈ P_{g⊳a, g⊳b}(A) and g ⊲ x ∈ P_{g⊲a, g⊲b}(H) for group-likes g
    // of H and x ∈ P_{a,b}(A)
    let f = Field::prime(5).unwrap();
    for l in 0..5 {
        let pair = canonical_pair(f, &f.from_i64(l)).unwrap();
        let (a, h) = (pair.a().as_ref(), pair.h().as_ref());
        let gl_a = group_likes(a, None).unwrap();
        let gl_h = group_likes(h, None).unwrap();
        for g in &gl_h {
            for s in &gl_a {
                for t in &gl_a {
                    let space = skew_primitives(a, s, t).unwrap();
                    let (ls, lt) = (pair.left().apply(g, s), pair.left().apply(g, t));
                    let (rs, rt) = (pair.right().apply(g, s), pair.right().apply(g, t));
                    let left_target = skew_primitives(a, &ls, &lt).unwrap();
                    let right_target = skew_primitives(h, &rs, &rt).unwrap();
                    for x in space.vectors() {
                        assert!(left_target.contains(&pair.left().apply(g, x)));
                        assert!(right_target.contains(&pair.right().apply(g, x)));
                    }
                }
            }
        }
    }
}

#[test]
fn integrals_and_semisimplicity() {
    let f = Field::prime(5).unwrap();
    let h4 = sweedler_h4(f).unwrap();
    let left = integrals(&h4, Side::Left).unwrap();
    assert_eq!(left.space.vectors(), &[&h4.element("x") + &h4.element("gx")]);
    assert!(!left.unimodular);
    assert!(!is_semisimple(&h4).unwrap());

    let k = group_algebra_c2(f).unwrap();
    let ik = integrals(&k, Side::Left).unwrap();
    assert_eq!(ik.space.vectors(), &[&k.element("1") + &k.element("g")]);
    assert!(ik.unimodular);
    assert!(is_semisimple(&k).unwrap());

    for l in [0, 1, 3] {
        let h = h16_lambda(f, &f.from_i64(l)).unwrap();
        let t = h.mul(&(&h.element("X") + &h.element("GX")), &(&h.element("x") - &h.element("gx")));
        let li = integrals(&h, Side::Left).unwrap();
        let ri = integrals(&h, Side::Right).unwrap();
        assert!(li.unimodular);
        assert!(li.space.contains(&t) && ri.space.contains(&t));
        assert!(!is_semisimple(&h).unwrap());
        assert!(h.counit_of(li.generator()).is_zero());
    }
}

#[test]
fn double_of_h4_and_its_dual() {
    for f in [Field::rationals(), Field::prime(3).unwrap(), Field::prime(5).unwrap()] {
        let d = drinfeld_double(&sweedler_h4(f).unwrap()).unwrap();
        assert!(integrals(&d, Side::Left).unwrap().unimodular);
        assert!(!is_semisimple(&d).unwrap());
        let dd = dual(&d).unwrap();
        assert!(!integrals(&dd, Side::Left).unwrap().unimodular);
    }
    let f = Field::prime(5).unwrap();
    // the distinguished group-likes of H16,0 and H4⊗H4 are nontrivial, so
    // neither dual is unimodular
    let h0 = dual(&h16_lambda(f, &f.zero()).unwrap()).unwrap();
    assert!(!integrals(&h0, Side::Left).unwrap().unimodular);
    let t = dual(&tensor_square_h4(f).unwrap()).unwrap();
    assert!(!integrals(&t, Side::Left).unwrap().unimodular);
}
