use std::sync::Arc;

use bicrossed::hopf::{group_algebra, sweedler_h4, tensor_hopf};
use bicrossed::linalg;
use bicrossed::linmap::{
    convolve, coz1_group, exhaustive_unitary_coalgebra_maps, grouplikes, skew_primitives,
    unitary_coalgebra_maps, unitary_cocentral_maps, Budget, LinMap,
};
use bicrossed::{FieldSpec, FiniteGroupTable, HopfAlgebra, Scalar};

fn f3() -> FieldSpec {
    FieldSpec::prime(3).unwrap()
}

fn h4(field: FieldSpec) -> Arc<HopfAlgebra> {
    Arc::new(sweedler_h4(field))
}

fn cn(n: usize, field: FieldSpec) -> Arc<HopfAlgebra> {
    Arc::new(group_algebra(&FiniteGroupTable::cyclic(n), field))
}

fn maps(dom: &Arc<HopfAlgebra>, cod: &Arc<HopfAlgebra>, cols: Vec<Vec<Vec<Scalar>>>) -> Vec<LinMap> {
    cols.iter()
        .map(|c| LinMap::from_columns(dom.clone(), cod.clone(), c).unwrap())
        .collect()
}

#[test]
fn grouplikes_of_h4_are_one_and_g() {
    let h = h4(f3());
    let mut g = grouplikes(&h, None, &Budget::new(1_000)).unwrap();
    let mut expected = vec![h.basis(0), h.basis(1)];
    g.sort();
    expected.sort();
    assert_eq!(g, expected);
}

#[test]
fn grouplikes_of_h4_times_c2() {
    let h = tensor_hopf(&h4(f3()), &cn(2, f3())).unwrap();
    let g = grouplikes(&h, None, &Budget::new(1_000_000)).unwrap();
    assert_eq!(g.len(), 4);
    for x in &g {
        for y in &g {
            assert!(g.contains(&h.mul(x, y)));
        }
    }
}

#[test]
fn grouplikes_need_a_hint_over_q() {
    let h = h4(FieldSpec::Rationals);
    assert!(grouplikes(&h, None, &Budget::new(100)).is_err());
    let hint = vec![h.basis(1)];
    assert_eq!(grouplikes(&h, Some(&hint), &Budget::new(100)).unwrap(), hint);
    assert!(grouplikes(&h, Some(&[h.basis(2)]), &Budget::new(100)).is_err());
}

#[test]
fn skew_primitive_spaces_of_h4() {
    let h = h4(f3());
    let (one, g) = (h.basis(0), h.basis(1));
    assert!(skew_primitives(&h, &one, &one).unwrap().is_empty());
    let p = skew_primitives(&h, &one, &g).unwrap();
    assert_eq!(p.len(), 2);
    // each basis vector is a combination of 1 - g and x, and satisfies the defining identity
    let field = h.field();
    for v in &p {
        assert_eq!(v[0], -&v[1]);
        assert!(v[3].is_zero());
        let mut lhs = h.comul(v);
        linalg::axpy(&mut lhs, &-field.one(), &linalg::kron(v, &one, field));
        linalg::axpy(&mut lhs, &-field.one(), &linalg::kron(&g, v, field));
        assert!(linalg::is_zero(&lhs));
    }
    assert!(skew_primitives(&h, &one, &h.basis(2)).is_err());
}

#[test]
fn skew_primitives_of_cyclic_group_algebra() {
    let h = cn(4, f3());
    let p = skew_primitives(&h, &h.basis(1), &h.basis(3)).unwrap();
    assert_eq!(p.len(), 1);
    let mut expected = h.basis(1);
    linalg::axpy(&mut expected, &-f3().one(), &h.basis(3));
    let scale = &p[0][1];
    assert_eq!(linalg::scale(scale, &expected), p[0]);
}

#[test]
fn structured_enumeration_matches_exhaustive_oracle() {
    let budget = Budget::new(10_000_000);
    let pairs = [
        (h4(f3()), h4(f3())),
        (cn(2, f3()), h4(f3())),
        (h4(f3()), cn(2, f3())),
        (cn(3, f3()), cn(3, f3())),
        (cn(4, f3()), h4(f3())),
    ];
    for (dom, cod) in pairs {
        let mut fast = unitary_coalgebra_maps(&dom, &cod, &budget).unwrap();
        fast.sort();
        let slow = exhaustive_unitary_coalgebra_maps(&dom, &cod, &budget).unwrap();
        assert_eq!(fast, slow, "{:?} -> {:?}", dom.labels(), cod.labels());
    }
}

#[test]
fn convolution_identity_and_antipode() {
    let h = h4(f3());
    let id = LinMap::identity(h.clone());
    let s = LinMap::antipode(h.clone());
    let e = LinMap::trivial(h.clone(), h.clone()).unwrap();
    assert_eq!(convolve(&id, &s).unwrap(), e);
    assert_eq!(convolve(&s, &id).unwrap(), e);
    assert_eq!(convolve(&id, &e).unwrap(), id);
}

#[test]
fn characters_of_c2_multiply_pointwise() {
    let field = f3();
    let c2 = cn(2, field);
    let k = cn(1, field);
    let chi = |s: i64| {
        LinMap::from_columns(c2.clone(), k.clone(), &[vec![field.one()], vec![field.from_i64(s)]])
            .unwrap()
    };
    assert_eq!(convolve(&chi(-1), &chi(-1)).unwrap(), chi(1));
    assert_eq!(convolve(&chi(1), &chi(-1)).unwrap(), chi(-1));
}

#[test]
fn convolution_is_associative_on_h4_endomaps() {
    let h = h4(f3());
    let all = maps(&h, &h, unitary_coalgebra_maps(&h, &h, &Budget::new(1_000_000)).unwrap());
    // every seventh map keeps the triple loop small
    let mut extra: Vec<LinMap> = all.iter().step_by(7).cloned().collect();
    extra.push(LinMap::identity(h.clone()));
    extra.push(LinMap::antipode(h.clone()));
    for f in &extra {
        for g in &extra {
            for k in &extra {
                let l = convolve(&convolve(f, g).unwrap(), k).unwrap();
                let r = convolve(f, &convolve(g, k).unwrap()).unwrap();
                assert_eq!(l, r);
            }
        }
    }
}

#[test]
fn map_predicates() {
    let field = f3();
    let h = h4(field);
    let zero = LinMap::new(h.clone(), h.clone(), bicrossed::Matrix::zeros(field, 4, 4)).unwrap();
    assert!(!zero.is_coalgebra_map());
    let e = LinMap::trivial(h.clone(), h.clone()).unwrap();
    let flags = e.flags();
    assert!(flags.is_coalgebra_map && flags.is_algebra_map && flags.is_unitary && flags.is_counitary);
    assert!(e.is_cocentral());
}

#[test]
fn cocentrality() {
    let field = f3();
    let h = h4(field);
    // 1 -> 1, g -> g, x -> x, gx -> g - 1... the unitary coalgebra endomap with u(x) = x
    let all = maps(&h, &h, unitary_coalgebra_maps(&h, &h, &Budget::new(1_000_000)).unwrap());
    let u = all.iter().find(|f| f.column(2) == h.basis(2)).unwrap();
    assert!(!u.is_cocentral());
    let c3 = cn(3, field);
    for f in maps(&c3, &h, unitary_coalgebra_maps(&c3, &h, &Budget::new(1_000_000)).unwrap()) {
        assert!(f.is_cocentral());
    }
}

#[test]
fn coz1_orders() {
    let field = f3();
    let budget = Budget::new(10_000_000);
    let h = h4(field);
    for n in 1..=5 {
        let c = cn(n, field);
        let cands = unitary_cocentral_maps(&c, &h, &budget).unwrap();
        let grp = coz1_group(&c, &h, cands).unwrap();
        assert_eq!(grp.order(), 1 << (n - 1), "n = {n}");
        assert!(grp.is_abelian());
        let back = unitary_cocentral_maps(&h, &c, &budget).unwrap();
        assert_eq!(coz1_group(&h, &c, back).unwrap().order(), 1);
    }
    let cands = unitary_cocentral_maps(&h, &h, &budget).unwrap();
    assert_eq!(coz1_group(&h, &h, cands).unwrap().order(), 1);
}

#[test]
fn coz1_rejects_open_candidate_sets() {
    let field = f3();
    let h = h4(field);
    let c3 = cn(3, field);
    let mut cands = unitary_cocentral_maps(&c3, &h, &Budget::new(1_000_000)).unwrap();
    cands.remove(1);
    assert!(coz1_group(&c3, &h, cands).is_err());
}

#[test]
fn linmap_json_round_trip() {
    let h = h4(f3());
    let s = LinMap::antipode(h.clone());
    let back = LinMap::from_json(&s.to_json(), h.clone(), h.clone()).unwrap();
    assert_eq!(back, s);
    let c2 = cn(2, f3());
    assert!(LinMap::from_json(&s.to_json(), c2.clone(), h).is_err());
}
