use std::collections::{BTreeMap, BTreeSet};

use bicrossed::arith::{factorize, gcd, is_prime, units_mod};
use bicrossed::classify::*;
use bicrossed::hopf::{group_algebra, sweedler_h4, verify_hopf_axioms};
use bicrossed::linalg;
use bicrossed::linmap::Budget;
use bicrossed::products::{bicrossed_product, smash_product, SmashSide};
use bicrossed::{nu_order, roots_of_unity, Error, FieldSpec, FiniteGroupTable};
use proptest::prelude::*;

fn fp(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

/// Smallest odd prime `p` with `n | p - 1`, so that `nu(n) = n` over `F_p`.
fn full_root_prime(n: u64) -> u64 {
    (3..).find(|&p| is_prime(p) && (p - 1) % n == 0).unwrap()
}

fn budget() -> Budget {
    Budget::new(1 << 40)
}

#[test]
fn presentation_agrees_with_the_smash_product() {
    for (n, p) in [(1u64, 5u64), (2, 3), (3, 7), (4, 5), (5, 11), (6, 7), (6, 13)] {
        let field = fp(p);
        let (nu, _) = nu_order(field, n).unwrap();
        for t in 0..nu {
            let spec = H4nSpec::new(n, t, field).unwrap();
            let e = build_h4n(&spec).unwrap();
            assert_eq!(e.dim(), 4 * n as usize);
            assert!(verify_hopf_axioms(&e).is_ok(), "n={n} p={p} t={t}");
            let mp = h4n_pair(&spec).unwrap();
            assert!(mp.is_valid());
            assert!(e.same_structure(&bicrossed_product(&mp).unwrap()));
            let a = sweedler_h4(field);
            let h = group_algebra(&FiniteGroupTable::cyclic(n as usize), field);
            let smash = smash_product(&a, &h, mp.left_table(), SmashSide::Left).unwrap();
            assert!(e.same_structure(&smash), "n={n} p={p} t={t}");
        }
    }
}

#[test]
fn h4n_with_n_one_is_sweedler() {
    let field = fp(7);
    let e = build_h4n(&H4nSpec::new(1, 0, field).unwrap()).unwrap();
    assert!(e.same_structure(&sweedler_h4(field)));
}

#[test]
fn relations_of_the_presentation() {
    // index (a + 2b) n + i for g^a x^b c^i
    let q = FieldSpec::Rationals;
    let e = h4n_with_root(2, &q.from_i64(-1), q).unwrap();
    assert!(verify_hopf_axioms(&e).is_ok());
    let (c, x, xc) = (e.basis(1), e.basis(4), e.basis(5));
    assert_eq!(e.mul(&c, &x), linalg::scale(&q.from_i64(-1), &xc));
    assert_eq!(e.mul(&x, &c), xc);

    let f = fp(7);
    let e = build_h4n(&H4nSpec::new(3, 1, f).unwrap()).unwrap();
    let (c, c2, x, gx) = (e.basis(1), e.basis(2), e.basis(6), e.basis(9));
    assert_eq!(e.s(&c), c2);
    assert_eq!(e.s(&x), linalg::scale(&-f.one(), &gx));
    // ξ = 2 over F_7: cx = 2 xc
    assert_eq!(e.mul(&c, &x), linalg::scale(&f.from_i64(2), &e.basis(7)));
    let g = e.basis(3);
    assert_eq!(e.mul(&x, &g), linalg::scale(&-f.one(), &e.mul(&g, &x)));
    assert!(linalg::is_zero(&e.mul(&x, &x)));
    assert_eq!(e.mul(&c, &g), e.mul(&g, &c));
}

#[test]
fn invalid_parameters_are_rejected() {
    let f = fp(7);
    assert!(matches!(h4n_with_root(3, &f.from_i64(3), f), Err(Error::InvalidParameter(_))));
    assert!(matches!(H4nSpec::new(3, 3, f), Err(Error::InvalidParameter(_))));
    assert!(matches!(h4_cn_pair(4, &f.from_i64(2), f), Err(Error::InvalidParameter(_))));
    assert!(FieldSpec::prime(2).is_err());
}

#[test]
fn matched_pair_census_on_small_fields() {
    for p in [3u64, 5, 7] {
        for n in 1..=6u64 {
            let field = fp(p);
            let pairs = enumerate_matched_pairs_h4_cn(n, field).unwrap();
            assert_eq!(pairs.len() as u64, gcd(n, p - 1), "n={n} p={p}");
            let mut roots = Vec::new();
            for mp in &pairs {
                assert!(mp.is_right_trivial());
                let w = root_of_pair(mp).expect("diagonal action on x");
                let expected = h4_cn_pair(n, &w, field).unwrap();
                assert!(&expected == mp);
                roots.push(w);
            }
            roots.sort();
            assert_eq!(roots, roots_of_unity(field, n).unwrap());
        }
    }
}

#[test]
fn census_counts_its_candidates() {
    let s = matched_pairs_h4_group(&FiniteGroupTable::cyclic(3), fp(7), &budget()).unwrap();
    assert_eq!(s.pairs.len(), 3);
    // left actions with T^3 = Id that form a module: far more than the survivors
    assert!(s.left_actions > s.pairs.len());
    assert!(s.tables_checked >= s.pairs.len());
}

#[test]
fn census_over_the_rationals_needs_a_finite_field() {
    // over Q the skew-primitive candidate families are infinite
    let r = enumerate_matched_pairs_h4_cn(5, FieldSpec::Rationals);
    assert!(matches!(r, Err(Error::InfiniteFamily(_))));
    // with no nontrivial 5th root of unity the census has one pair
    for p in [3u64, 7, 13] {
        let pairs = enumerate_matched_pairs_h4_cn(5, fp(p)).unwrap();
        assert_eq!(pairs.len(), 1);
        assert!(pairs[0].is_left_trivial() && pairs[0].is_right_trivial());
    }
}

#[test]
fn criterion_examples() {
    let f = fp(13);
    for t in 0..6 {
        let v = iso_criterion(t, t, 6, f).unwrap();
        assert!(v.isomorphic);
        assert_eq!(v.witness_s, Some(1));
        assert!(!v.twisted);
    }
    // n = 7 over F_29: every H_{28, ξ^l}, l ≥ 1, is isomorphic to H_{28, ξ} via s = l
    let f = fp(29);
    assert_eq!(nu_order(f, 7).unwrap().0, 7);
    for l in 1..7 {
        let v = iso_criterion(l, 1, 7, f).unwrap();
        assert_eq!(v.witness_s, Some(l));
        assert!(!iso_criterion(l, 0, 7, f).unwrap().isomorphic);
    }
    // nu = 8 over F_17
    let f = fp(17);
    assert_eq!(nu_order(f, 8).unwrap().0, 8);
    assert!(!iso_criterion(1, 2, 8, f).unwrap().isomorphic);
    let v = iso_criterion(4, 0, 8, f).unwrap();
    assert!(v.isomorphic && v.twisted);
    assert!(matches!(iso_criterion(8, 0, 8, f), Err(Error::InvalidParameter(_))));
}

#[test]
fn class_count_spot_values() {
    for (nu, count) in [(1u64, 1usize), (2, 1), (3, 2), (4, 2), (5, 2), (6, 2), (7, 2), (8, 3), (9, 3)] {
        let p = full_root_prime(nu);
        let c = iso_classes(nu, fp(p)).unwrap();
        assert_eq!(c.nu, nu);
        assert_eq!(c.count, count, "nu={nu}");
    }
    let c = iso_classes(3, fp(7)).unwrap();
    assert_eq!(c.to_string(), "nu=3, classes=2, representatives=[1, xi]");
    assert_eq!(iso_classes(8, fp(17)).unwrap().representative_labels(), ["1", "xi", "xi^2"]);
    assert_eq!(iso_classes(9, fp(19)).unwrap().representative_labels(), ["1", "xi", "xi^3"]);
    assert_eq!(iso_classes(2, fp(3)).unwrap().representative_labels(), ["1"]);
}

/// Class count from the factorization of `nu`, written out independently.
fn divisor_count_formula(nu: u64) -> usize {
    let f = factorize(nu);
    let mut count = 1usize;
    for (p, a) in f {
        count *= if p == 2 { a as usize } else { a as usize + 1 };
    }
    count
}

/// Equivalence classes of `0..nu` under the criterion, by union-find.
fn criterion_partition(n: u64, nu: u64) -> Vec<BTreeSet<u64>> {
    let mut parent: Vec<usize> = (0..nu as usize).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for l in 0..nu {
        for t in 0..nu {
            if iso_criterion_arith(l, t, n, nu).isomorphic {
                let (a, b) = (find(&mut parent, l as usize), find(&mut parent, t as usize));
                parent[a] = b;
            }
        }
    }
    let mut classes: BTreeMap<usize, BTreeSet<u64>> = BTreeMap::new();
    for t in 0..nu as usize {
        let r = find(&mut parent, t);
        classes.entry(r).or_default().insert(t as u64);
    }
    classes.into_values().collect()
}

#[test]
fn class_counts_follow_the_factorization_up_to_thirty() {
    for n in 1..=30u64 {
        let p = full_root_prime(n);
        let c = iso_classes(n, fp(p)).unwrap();
        assert_eq!(c.nu, n);
        assert_eq!(c.count, divisor_count_formula(n), "n={n}");
        assert_eq!(c.count, predicted_class_count(n));
        // the criterion's partition is the representative assignment
        let parts = criterion_partition(n, n);
        assert_eq!(parts.len(), c.count, "n={n}");
        for part in &parts {
            let reps: BTreeSet<u64> = part.iter().map(|&t| c.class_of[t as usize]).collect();
            assert_eq!(reps.len(), 1, "n={n} class {part:?}");
            let r = *reps.iter().next().unwrap();
            assert!(c.representatives.contains(&r));
            assert!(part.contains(&r), "n={n}: representative {r} outside {part:?}");
        }
        let m = partition_matrix(n, fp(p)).unwrap();
        for l in 0..n as usize {
            for t in 0..n as usize {
                assert_eq!(m[l][t], c.class_of[l] == c.class_of[t], "n={n} l={l} t={t}");
            }
        }
    }
}

#[test]
fn canonical_form_is_idempotent_and_in_class() {
    for n in [4u64, 6, 8, 9, 12] {
        let p = full_root_prime(n);
        let c = iso_classes(n, fp(p)).unwrap();
        for t in 0..n {
            let d = c.canonical[t as usize];
            assert_eq!(gcd(d, n), d);
            assert!(iso_criterion_arith(t, d % n, n, n).isomorphic, "n={n} t={t}");
        }
    }
}

#[test]
fn partition_does_not_depend_on_the_generator() {
    // ξ' = ξ^k for a unit k of Z_nu; ω = ξ^l = ξ'^{l k⁻¹}
    for nu in [6u64, 8, 9, 12] {
        for k in units_mod(nu) {
            let kinv = (1..nu).find(|&y| (k * y) % nu == 1).unwrap();
            for l in 0..nu {
                for t in 0..nu {
                    let a = iso_criterion_arith(l, t, nu, nu).isomorphic;
                    let b = iso_criterion_arith(l * kinv % nu, t * kinv % nu, nu, nu).isomorphic;
                    assert_eq!(a, b, "nu={nu} k={k} l={l} t={t}");
                }
            }
        }
    }
}

#[test]
fn unit_lifts() {
    assert_eq!(unit_lift(1, 3, 12).unwrap(), 1);
    assert_eq!(unit_lift(2, 3, 6).unwrap(), 5);
    assert_eq!(unit_lift(1, 5, 5).unwrap(), 1);
    assert!(unit_lift(4, 6, 12).is_err());
    assert!(unit_lift(1, 5, 12).is_err());
    for n in 1..=40u64 {
        for m in (1..=n).filter(|m| n % m == 0) {
            for a in (0..m).filter(|&a| gcd(a, m) == 1) {
                let s = unit_lift(a, m, n).unwrap();
                assert!(s < n && gcd(s, n) == 1 && s % m == a % m);
            }
        }
    }
}

#[test]
fn unit_subgroups() {
    for (n, p) in [(3u64, 7u64), (4, 5), (6, 7), (8, 17), (12, 13)] {
        let (nu, _) = nu_order(fp(p), n).unwrap();
        for t in 0..nu {
            let a = ArithmeticProfile::new(n, t, nu);
            assert!(is_unit_subgroup(&a.u_t, n), "n={n} t={t}");
            assert!(is_unit_subgroup(&a.u_tilde, n), "n={n} t={t}");
            assert!(a.u_t.iter().all(|s| !a.v_t.contains(s)));
            if t == 0 {
                assert_eq!(a.u_t, units_mod(n));
            }
        }
    }
    assert!(is_unit_subgroup(&[1, 3], 8));
    assert!(!is_unit_subgroup(&[1, 3, 5], 8));
}

#[test]
fn automorphism_group_profiles() {
    let a = aut_group_profile(3, 1, fp(7)).unwrap();
    assert_eq!(a.to_string(), "structure = k* x U_1(Z_3), order = 6");
    let a = aut_group_profile(4, 1, fp(5)).unwrap();
    assert_eq!(a.structure, "k* x U~_1(Z_4)");
    assert_eq!(a.profile.v_t, [3]);
    assert_eq!(a.order, Some(8));
    let a = aut_group_profile(5, 0, fp(11)).unwrap();
    assert_eq!(a.order, Some(40));
    assert!(aut_group_profile(3, 1, FieldSpec::Rationals).is_err());
}

#[test]
fn automorphisms_have_the_predicted_shape() {
    for (n, p) in [(3u64, 7u64), (4, 5), (6, 7)] {
        let field = fp(p);
        let (nu, _) = nu_order(field, n).unwrap();
        for t in 0..nu {
            let prof = aut_group_profile(n, t, field).unwrap();
            let auts = brute_force_automorphisms(n, t, field, &budget()).unwrap();
            assert_eq!(Some(auts.len() as u64), prof.order, "n={n} p={p} t={t}");
            let mut seen = BTreeSet::new();
            for m in &auts {
                let shape = automorphism_shape(m).expect("automorphism of the expected shape");
                let set = if shape.twisted { &prof.profile.v_t } else { &prof.profile.u_t };
                assert!(set.contains(&shape.s), "n={n} t={t} {shape:?}");
                assert!(seen.insert((shape.gamma.clone(), shape.s)));
            }
        }
    }
}

#[test]
fn criterion_agrees_with_search_for_small_n() {
    for (n, p) in [(2u64, 3u64), (3, 7), (4, 5)] {
        let field = fp(p);
        let (nu, _) = nu_order(field, n).unwrap();
        for l in 0..nu {
            for t in 0..nu {
                let v = iso_criterion(l, t, n, field).unwrap();
                let b = brute_force_isomorphism(l, t, n, field, &budget()).unwrap();
                assert_eq!(v.isomorphic, b.iso.is_some(), "n={n} l={l} t={t}");
                let w = iso_witness(l, t, n, field).unwrap();
                assert_eq!(w.is_some(), v.isomorphic);
                if let Some(psi) = w {
                    assert!(psi.is_hopf_map() && psi.is_bijective());
                }
            }
        }
    }
}

#[test]
fn klein_group_pairs() {
    for p in [3u64, 5] {
        let field = fp(p);
        let survey = klein_survey(field, &budget()).unwrap();
        assert_eq!(survey.pairs.len(), 4);
        let trivial = survey.pairs.iter().filter(|mp| mp.is_left_trivial()).count();
        assert_eq!(trivial, 1);
        let mut matched: Vec<usize> = survey.table_match.iter().flatten().copied().collect();
        matched.sort();
        assert_eq!(matched, [0, 1, 2]);
        assert!(survey.pairs.iter().all(|mp| mp.is_right_trivial()));
        assert!(survey.all_products_trivial);
        for w in survey.witnesses.iter().flatten() {
            assert!(w.is_hopf_map() && w.is_bijective());
        }
    }
    // first listed table: b ▷ x = -x, a ▷ x = x
    let f = fp(5);
    let mp = klein_pair(KLEIN_SIGNS[0], f).unwrap();
    assert_eq!(mp.left(2, 2), linalg::scale(&-f.one(), &mp.a().basis(2)));
    assert_eq!(mp.left(1, 2), mp.a().basis(2));
    assert_eq!(mp.left(3, 3), linalg::scale(&-f.one(), &mp.a().basis(3)));
}

proptest! {
    #[test]
    fn criterion_is_an_equivalence(n in 1u64..=24, a in 0u64..24, b in 0u64..24, c in 0u64..24) {
        let nu = n;
        let (a, b, c) = (a % nu, b % nu, c % nu);
        prop_assert!(iso_criterion_arith(a, a, n, nu).isomorphic);
        let ab = iso_criterion_arith(a, b, n, nu).isomorphic;
        prop_assert_eq!(ab, iso_criterion_arith(b, a, n, nu).isomorphic);
        if ab && iso_criterion_arith(b, c, n, nu).isomorphic {
            prop_assert!(iso_criterion_arith(a, c, n, nu).isomorphic);
        }
    }

    #[test]
    fn representative_is_in_class(n in 1u64..=40, t in 0u64..40) {
        let t = t % n;
        let r = class_representative(t, n);
        prop_assert!(iso_criterion_arith(t, r, n, n).isomorphic);
        prop_assert_eq!(class_representative(r, n), r);
    }

    #[test]
    fn divisor_of_proper_root_order(p in prop::sample::select(vec![3u64, 5, 7, 11, 13, 17, 19]), n in 1u64..=20) {
        // nu(n) = gcd(n, p - 1) divides n, and the witness exponent stays a unit
        let (nu, _) = nu_order(fp(p), n).unwrap();
        prop_assert_eq!(nu, gcd(n, p - 1));
        for t in 0..nu {
            if let Some(s) = iso_criterion_arith(t, t, n, nu).witness_s {
                prop_assert_eq!(gcd(s, n), 1);
            }
        }
    }
}
