use std::sync::Arc;

use bicrossed::hopf::{
    dual_group_algebra, dual_hopf, group_algebra, op_cop, sweedler_h4, tensor_hopf, trivial_hopf,
    verify_hopf_axioms,
};
use bicrossed::linalg;
use bicrossed::linmap::{convolve, grouplikes, Budget, LinMap};
use bicrossed::products::{bicrossed_product, MatchedPair};
use bicrossed::{FieldSpec, FiniteGroupTable, HopfAlgebra, Matrix, Scalar};
use proptest::prelude::*;

fn fp(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn fields() -> Vec<FieldSpec> {
    vec![fp(3), fp(5), fp(7), FieldSpec::Rationals]
}

fn groups() -> Vec<FiniteGroupTable> {
    vec![
        FiniteGroupTable::cyclic(1),
        FiniteGroupTable::cyclic(2),
        FiniteGroupTable::cyclic(3),
        FiniteGroupTable::cyclic(4),
        FiniteGroupTable::klein(),
        FiniteGroupTable::symmetric3(),
    ]
}

fn assert_hopf(h: &HopfAlgebra) {
    let r = verify_hopf_axioms(h);
    assert!(r.is_ok(), "{h:?}: {r}");
}

fn is_commutative(h: &HopfAlgebra) -> bool {
    let d = h.dim();
    (0..d).all(|i| (0..d).all(|j| (0..d).all(|k| h.mult_coeff(i, j, k) == h.mult_coeff(j, i, k))))
}

fn is_cocommutative(h: &HopfAlgebra) -> bool {
    let d = h.dim();
    (0..d).all(|i| (0..d).all(|j| (0..d).all(|k| h.comult_coeff(i, j, k) == h.comult_coeff(i, k, j))))
}

fn budget() -> Budget {
    Budget::new(1 << 40)
}

#[test]
fn every_constructor_gives_a_hopf_algebra() {
    for k in fields() {
        assert_hopf(&trivial_hopf(k));
        let h4 = sweedler_h4(k);
        assert_hopf(&h4);
        assert_hopf(&dual_hopf(&h4));
        for (a, b) in [(true, false), (false, true), (true, true)] {
            assert_hopf(&op_cop(&h4, a, b).unwrap());
        }
        for g in groups() {
            let kg = group_algebra(&g, k);
            assert_hopf(&kg);
            assert_hopf(&dual_hopf(&kg));
            assert_hopf(&dual_group_algebra(&g, k, false));
            assert_hopf(&dual_group_algebra(&g, k, true));
            assert_hopf(&tensor_hopf(&h4, &kg).unwrap());
        }
    }
}

#[test]
fn broken_antipode_is_reported() {
    let h4 = sweedler_h4(fp(3));
    let v = {
        let mut v = h4.to_json();
        v["antipode"] = serde_json::json!([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        v
    };
    let broken = HopfAlgebra::from_json(&v).unwrap();
    let r = verify_hopf_axioms(&broken);
    assert!(r.algebra.is_none() && r.coalgebra.is_none() && r.bialgebra.is_none());
    let f = r.antipode.as_ref().expect("antipode fails");
    // first failure at x, basis index 2
    assert_eq!(f.indices, vec![2]);
    assert_eq!(r.first_failure().unwrap().0, "antipode");
    // the report does not depend on scheduling
    assert_eq!(verify_hopf_axioms(&broken), r);
}

#[test]
fn broken_multiplication_is_reported() {
    let mut v = sweedler_h4(fp(5)).to_json();
    // x * x = g instead of 0
    v["mult"][2][2] = serde_json::json!([0, 1, 0, 0]);
    let r = verify_hopf_axioms(&HopfAlgebra::from_json(&v).unwrap());
    assert!(!r.is_ok());
    assert!(r.algebra.is_some() || r.bialgebra.is_some());
}

#[test]
fn group_algebra_examples() {
    let k = fp(3);
    let c2 = group_algebra(&FiniteGroupTable::cyclic(2), k);
    assert_eq!(c2.dim(), 2);
    assert_eq!(c2.antipode(), &Matrix::identity(k, 2));
    for n in 1..=6 {
        let h = group_algebra(&FiniteGroupTable::cyclic(n), k);
        assert!(is_commutative(&h) && is_cocommutative(&h));
    }
    let s3 = group_algebra(&FiniteGroupTable::symmetric3(), k);
    assert!(!is_commutative(&s3));
    assert!(is_cocommutative(&s3));
}

#[test]
fn invalid_group_tables_are_rejected() {
    let labels = |n: usize| (0..n).map(|i| i.to_string()).collect::<Vec<_>>();
    assert!(FiniteGroupTable::new(vec![], vec![]).is_err());
    assert!(FiniteGroupTable::new(vec![vec![0, 1], vec![1, 1]], labels(2)).is_err());
    assert!(FiniteGroupTable::new(vec![vec![1, 0], vec![1, 0]], labels(2)).is_err());
    // identity need not sit at index 0
    let g = FiniteGroupTable::new(vec![vec![1, 0], vec![0, 1]], labels(2)).unwrap();
    assert_eq!(g.identity(), 1);
    assert!(FiniteGroupTable::new(vec![vec![0, 1], vec![1, 2]], labels(2)).is_err());
    // a Latin square with identity 0 that is not associative
    let t = vec![
        vec![0, 1, 2, 3, 4],
        vec![1, 0, 3, 4, 2],
        vec![2, 4, 0, 1, 3],
        vec![3, 2, 4, 0, 1],
        vec![4, 3, 1, 2, 0],
    ];
    assert!(FiniteGroupTable::new(t, labels(5)).is_err());
    let g = FiniteGroupTable::new(vec![vec![0, 1], vec![1, 0]], labels(2)).unwrap();
    assert_eq!(g, FiniteGroupTable::from_json(&g.to_json()).unwrap());
}

#[test]
fn dual_group_algebra_examples() {
    let k = fp(5);
    let h = dual_group_algebra(&FiniteGroupTable::cyclic(2), k, false);
    let e1 = h.basis(0);
    let ec = h.basis(1);
    let expected: Vec<Scalar> = {
        let mut v = linalg::kron(&e1, &e1, k);
        linalg::axpy(&mut v, &k.one(), &linalg::kron(&ec, &ec, k));
        v
    };
    assert_eq!(h.comul(&e1), expected);
    assert_eq!(h.unit(), vec![k.one(), k.one()]);
    assert_eq!(h.counit(), &[k.one(), k.zero()]);
    // e_g e_h = delta e_g
    assert_eq!(h.mul(&e1, &ec), h.zero());
    assert_eq!(h.mul(&ec, &ec), ec);
}

#[test]
fn dual_group_algebra_cop_is_the_flip() {
    let k = fp(7);
    let g = FiniteGroupTable::symmetric3();
    let plain = dual_group_algebra(&g, k, false);
    let cop = dual_group_algebra(&g, k, true);
    assert!(!is_cocommutative(&plain));
    assert!(cop.same_structure(&op_cop(&plain, false, true).unwrap()));
}

#[test]
fn sweedler_examples() {
    for k in fields() {
        let h = sweedler_h4(k);
        let gx = h.basis(3);
        assert_eq!(h.mul(&gx, &gx), h.zero());
        let x = h.basis(2);
        // S^2 is conjugation by g: S^2(x) = g x g = -x, and S^4 = Id
        let g = h.basis(1);
        assert_eq!(h.s(&h.s(&x)), h.mul(&h.mul(&g, &x), &g));
        assert_eq!(h.s(&h.s(&x)), linalg::scale(&-k.one(), &x));
        assert_eq!(h.s(&h.s(&h.s(&h.s(&x)))), x);
        assert_eq!(h.s(&x), linalg::scale(&-k.one(), &h.basis(3)));
        assert!(h.eps(&gx).is_zero());
        // x g = -g x
        assert_eq!(h.mul(&x, &g), linalg::scale(&-k.one(), &h.mul(&g, &x)));
    }
}

#[test]
fn tensor_examples() {
    let k = fp(5);
    let h4 = sweedler_h4(k);
    let c2 = group_algebra(&FiniteGroupTable::cyclic(2), k);
    let t = tensor_hopf(&h4, &c2).unwrap();
    assert_eq!(t.dim(), 8);
    assert!(tensor_hopf(&h4, &trivial_hopf(k)).unwrap().same_structure(&h4));
    let mp = MatchedPair::trivial(Arc::new(h4.clone()), Arc::new(c2.clone())).unwrap();
    assert!(bicrossed_product(&mp).unwrap().same_structure(&t));
    assert!(tensor_hopf(&h4, &sweedler_h4(fp(7))).is_err());
}

#[test]
fn tensor_grouplikes_contain_products() {
    let k = fp(3);
    let b = budget();
    let pairs = [
        (sweedler_h4(k), group_algebra(&FiniteGroupTable::cyclic(3), k)),
        (group_algebra(&FiniteGroupTable::cyclic(2), k), group_algebra(&FiniteGroupTable::symmetric3(), k)),
    ];
    for (a, h) in pairs {
        let t = tensor_hopf(&a, &h).unwrap();
        assert_eq!(t.dim(), a.dim() * h.dim());
        let gt = grouplikes(&t, None, &b).unwrap();
        for x in grouplikes(&a, None, &b).unwrap() {
            for y in grouplikes(&h, None, &b).unwrap() {
                assert!(gt.contains(&linalg::kron(&x, &y, k)));
            }
        }
    }
}

#[test]
fn duals() {
    let b = budget();
    let k = fp(7);
    // C2 is self-dual: two grouplikes (e_1 ± e_c)
    let c2 = group_algebra(&FiniteGroupTable::cyclic(2), k);
    let d = dual_hopf(&c2);
    let gl = grouplikes(&d, None, &b).unwrap();
    assert_eq!(gl.len(), 2);
    assert!(gl.contains(&vec![k.one(), k.one()]));
    assert!(gl.contains(&vec![k.one(), -k.one()]));
    assert!(is_commutative(&d) && is_cocommutative(&d));

    let h4 = sweedler_h4(k);
    assert!(dual_hopf(&dual_hopf(&h4)).same_structure(&h4));
    for g in groups() {
        let kg = group_algebra(&g, k);
        assert!(dual_hopf(&dual_group_algebra(&g, k, false)).same_structure(&kg));
    }
}

#[test]
fn dual_exchanges_grouplikes_and_characters() {
    // over F_13 all characters of groups of exponent dividing 12 are defined
    let k = fp(13);
    let b = budget();
    for g in [FiniteGroupTable::cyclic(3), FiniteGroupTable::cyclic(4), FiniteGroupTable::klein(), FiniteGroupTable::cyclic(6)] {
        let kg = group_algebra(&g, k);
        let d = dual_hopf(&kg);
        let gl = grouplikes(&kg, None, &b).unwrap().len();
        let chars = grouplikes(&d, None, &b).unwrap().len();
        assert_eq!(gl, g.order());
        assert_eq!(chars, g.order());
    }
}

#[test]
fn op_cop_examples() {
    let k = fp(5);
    let kg = group_algebra(&FiniteGroupTable::symmetric3(), k);
    assert!(op_cop(&kg, false, true).unwrap().same_structure(&kg));
    let h4 = sweedler_h4(k);
    let cop = op_cop(&h4, false, true).unwrap();
    let s_inv = h4.antipode().inverse().unwrap();
    assert_eq!(cop.antipode(), &s_inv);
    // S(gx) = x on H4, so S^{-1}(x) = gx
    assert_eq!(s_inv.mul_vec(&h4.basis(2)), h4.basis(3));
    let op = op_cop(&h4, true, false).unwrap();
    assert!(op_cop(&op, true, false).unwrap().same_structure(&h4));
    assert!(op_cop(&cop, false, true).unwrap().same_structure(&h4));
}

#[test]
fn json_round_trip_of_fixtures() {
    for k in fields() {
        let mut all = vec![sweedler_h4(k), trivial_hopf(k)];
        for g in groups() {
            all.push(group_algebra(&g, k));
            all.push(dual_group_algebra(&g, k, true));
        }
        for h in all {
            let back = HopfAlgebra::from_json(&h.to_json()).unwrap();
            assert_eq!(back, h);
            assert_eq!(back.structure_hash(), h.structure_hash());
        }
    }
    let mut v = sweedler_h4(fp(3)).to_json();
    v["mult"] = serde_json::json!([[0]]);
    assert!(HopfAlgebra::from_json(&v).is_err());
}

fn random_map(h: &Arc<HopfAlgebra>, entries: &[i64]) -> LinMap {
    let k = h.field();
    let d = h.dim();
    let rows = (0..d).map(|i| (0..d).map(|j| k.from_i64(entries[i * d + j])).collect()).collect();
    LinMap::new(h.clone(), h.clone(), Matrix::from_rows(k, rows).unwrap()).unwrap()
}

proptest! {
    #[test]
    fn convolution_is_associative(
        p in prop::sample::select(vec![3u64, 5, 7]),
        e in prop::collection::vec(-3i64..4, 48),
    ) {
        let h = Arc::new(sweedler_h4(fp(p)));
        let (f, g, l) = (random_map(&h, &e[..16]), random_map(&h, &e[16..32]), random_map(&h, &e[32..]));
        let left = convolve(&convolve(&f, &g).unwrap(), &l).unwrap();
        let right = convolve(&f, &convolve(&g, &l).unwrap()).unwrap();
        prop_assert_eq!(left.matrix(), right.matrix());
        // unit∘ε is the neutral element
        let e1 = LinMap::trivial(h.clone(), h.clone()).unwrap();
        prop_assert_eq!(convolve(&f, &e1).unwrap().matrix().clone(), f.matrix().clone());
        prop_assert_eq!(convolve(&e1, &f).unwrap().matrix().clone(), f.matrix().clone());
    }

    #[test]
    fn antipode_is_the_convolution_inverse(
        p in prop::sample::select(vec![3u64, 5, 7, 11]),
        gi in 0usize..6,
    ) {
        let k = fp(p);
        let g = groups()[gi].clone();
        for h in [sweedler_h4(k), group_algebra(&g, k), dual_group_algebra(&g, k, true), dual_hopf(&sweedler_h4(k))] {
            let h = Arc::new(h);
            let id = LinMap::identity(h.clone());
            let s = LinMap::antipode(h.clone());
            let e = LinMap::trivial(h.clone(), h.clone()).unwrap();
            prop_assert_eq!(convolve(&s, &id).unwrap().matrix().clone(), e.matrix().clone());
            prop_assert_eq!(convolve(&id, &s).unwrap().matrix().clone(), e.matrix().clone());
        }
    }

    #[test]
    fn cyclic_group_algebras_round_trip(p in prop::sample::select(vec![3u64, 5, 7, 11, 13]), n in 1usize..9) {
        let h = group_algebra(&FiniteGroupTable::cyclic(n), fp(p));
        prop_assert!(verify_hopf_axioms(&h).is_ok());
        let back = HopfAlgebra::from_json(&serde_json::from_str(&h.to_json().to_string()).unwrap()).unwrap();
        prop_assert_eq!(back, h);
    }

    #[test]
    fn tensor_dimension_is_multiplicative(a in 1usize..5, b in 1usize..5) {
        let k = fp(5);
        let t = tensor_hopf(&group_algebra(&FiniteGroupTable::cyclic(a), k), &group_algebra(&FiniteGroupTable::cyclic(b), k)).unwrap();
        prop_assert_eq!(t.dim(), a * b);
        prop_assert!(verify_hopf_axioms(&t).is_ok());
    }
}
