use bicrossed::field::{nu_order, roots_of_unity, FieldSpec, Scalar};
use bicrossed::Error;
use num_bigint::BigInt;
use proptest::prelude::*;
use serde_json::json;

fn fp(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn residues(v: &[Scalar]) -> Vec<u64> {
    v.iter().map(|s| s.residue().unwrap()).collect()
}

fn rat(n: i64, d: i64) -> Scalar {
    FieldSpec::Rationals.from_rational_parts(BigInt::from(n), BigInt::from(d)).unwrap()
}

#[test]
fn characteristic_two_and_composites_are_rejected() {
    assert!(FieldSpec::prime(2).is_err());
    assert!(FieldSpec::prime(9).is_err());
    assert!(FieldSpec::prime(1).is_err());
    assert!(FieldSpec::parse("F_2").is_err());
    assert!(FieldSpec::prime(101).is_ok());
}

#[test]
fn small_cyclotomic_conductors_are_the_rationals() {
    assert_eq!(FieldSpec::cyclotomic(1).unwrap(), FieldSpec::Rationals);
    assert_eq!(FieldSpec::cyclotomic(2).unwrap(), FieldSpec::Rationals);
    assert_eq!(FieldSpec::cyclotomic(8).unwrap().degree(), 4);
    assert_eq!(FieldSpec::cyclotomic(9).unwrap().degree(), 6);
    assert_eq!(FieldSpec::cyclotomic(12).unwrap().degree(), 4);
}

#[test]
fn field_spec_json_and_parsing() {
    for (spec, v) in [
        (fp(7), json!({"kind": "prime", "p": 7})),
        (FieldSpec::Rationals, json!({"kind": "rationals"})),
        (FieldSpec::cyclotomic(8).unwrap(), json!({"kind": "cyclotomic", "m": 8})),
    ] {
        assert_eq!(spec.to_json(), v);
        assert_eq!(FieldSpec::from_json(&v).unwrap(), spec);
    }
    assert_eq!(FieldSpec::parse("7").unwrap(), fp(7));
    assert_eq!(FieldSpec::parse("F13").unwrap(), fp(13));
    assert_eq!(FieldSpec::parse("Q").unwrap(), FieldSpec::Rationals);
    assert_eq!(FieldSpec::parse("cyc8").unwrap(), FieldSpec::cyclotomic(8).unwrap());
    assert!(FieldSpec::from_json(&json!({"kind": "reals"})).is_err());
}

#[test]
fn arithmetic_examples() {
    let k = fp(7);
    assert_eq!(&k.from_i64(3) * &k.from_i64(5), k.one());
    assert_eq!(&rat(1, 2) + &rat(1, 3), rat(5, 6));
    let c4 = FieldSpec::cyclotomic(4).unwrap();
    let z = c4.zeta().unwrap();
    assert_eq!(&z * &z, -c4.one());
}

#[test]
fn division_by_zero_and_mixed_fields_are_errors() {
    let k = fp(5);
    assert_eq!(k.one().checked_div(&k.zero()), Err(Error::DivisionByZero));
    assert_eq!(k.zero().inv(), Err(Error::DivisionByZero));
    assert!(rat(1, 2).checked_div(&FieldSpec::Rationals.zero()).is_err());
    assert!(matches!(k.one().checked_add(&fp(7).one()), Err(Error::FieldMismatch(..))));
    assert!(matches!(k.one().checked_mul(&FieldSpec::Rationals.one()), Err(Error::FieldMismatch(..))));
    assert!(FieldSpec::Rationals.from_rational_parts(BigInt::from(1), BigInt::from(0)).is_err());
}

#[test]
fn scalar_serial_forms() {
    assert_eq!(fp(7).from_i64(-1).to_json(), json!(6));
    assert_eq!(rat(-3, 6).to_json(), json!("-1/2"));
    assert_eq!(rat(4, 2).to_json(), json!(2));
    let c8 = FieldSpec::cyclotomic(8).unwrap();
    let z = c8.zeta().unwrap();
    let x = &(&z * &z) + &c8.from_i64(3);
    assert_eq!(x.to_json(), json!([3, 0, 1, 0]));
    assert_eq!(Scalar::from_json(c8, &x.to_json()).unwrap(), x);
    assert_eq!(Scalar::from_json(FieldSpec::Rationals, &json!("10/-4")).unwrap(), rat(-5, 2));
    assert_eq!(Scalar::from_json(fp(5), &json!("1/2")).unwrap(), fp(5).from_i64(3));
    assert!(Scalar::from_json(fp(5), &json!([1, 2])).is_err());
}

#[test]
fn cyclotomic_reduction() {
    // zeta^m = 1 and zeta^(m + k) = zeta^k, written as unreduced power-basis arrays
    for m in 3..=12u32 {
        let k = FieldSpec::cyclotomic(m).unwrap();
        let z = k.zeta().unwrap();
        let mut arr = vec![json!(0); m as usize + 3];
        arr[m as usize] = json!(1);
        assert_eq!(Scalar::from_json(k, &json!(arr)).unwrap(), k.one(), "m = {m}");
        let mut arr = vec![json!(0); m as usize + 3];
        arr[m as usize + 2] = json!(1);
        assert_eq!(Scalar::from_json(k, &json!(arr)).unwrap(), z.pow(2), "m = {m}");
        assert_eq!(z.multiplicative_order(100), Some(m as u64), "m = {m}");
    }
}

#[test]
fn roots_of_unity_examples() {
    assert_eq!(residues(&roots_of_unity(fp(7), 3).unwrap()), vec![1, 2, 4]);
    assert_eq!(roots_of_unity(FieldSpec::Rationals, 5).unwrap(), vec![FieldSpec::Rationals.one()]);
    assert_eq!(residues(&roots_of_unity(fp(5), 10).unwrap()), vec![1, 4]);
    assert_eq!(
        roots_of_unity(FieldSpec::Rationals, 6).unwrap(),
        vec![FieldSpec::Rationals.one(), FieldSpec::Rationals.from_i64(-1)]
    );
}

#[test]
fn nu_order_examples() {
    let (nu, xi) = nu_order(fp(7), 3).unwrap();
    assert_eq!(nu, 3);
    assert!(xi.residue() == Some(2) || xi.residue() == Some(4));
    let (nu, xi) = nu_order(fp(3), 9).unwrap();
    assert_eq!((nu, xi.is_one()), (1, true));
    let c8 = FieldSpec::cyclotomic(8).unwrap();
    let (nu, xi) = nu_order(c8, 8).unwrap();
    assert_eq!(nu, 8);
    assert_eq!(xi, c8.zeta().unwrap());
    // xi is deterministic: smallest residue of maximal order
    assert_eq!(nu_order(fp(13), 12).unwrap().1.residue(), Some(2));
    assert_eq!(nu_order(fp(7), 3).unwrap().1.residue(), Some(2));
}

#[test]
fn nu_is_gcd_over_prime_fields() {
    for p in [3u64, 5, 7, 11, 13, 17, 101] {
        let k = fp(p);
        let elements = k.elements().unwrap();
        for n in 1..=100u64 {
            let count = elements.iter().filter(|x| x.pow(n).is_one()).count() as u64;
            let (nu, xi) = nu_order(k, n).unwrap();
            assert_eq!(nu, gcd(n, p - 1), "p = {p}, n = {n}");
            assert_eq!(nu, count, "p = {p}, n = {n}");
            assert_eq!(xi.multiplicative_order(n), Some(nu));
        }
    }
}

#[test]
fn roots_form_a_cyclic_group() {
    let specs = [fp(7), fp(13), FieldSpec::Rationals, FieldSpec::cyclotomic(12).unwrap()];
    for spec in specs {
        for n in 1..=12u64 {
            let roots = roots_of_unity(spec, n).unwrap();
            let (nu, xi) = nu_order(spec, n).unwrap();
            assert_eq!(roots.len() as u64, nu);
            assert_eq!(n % nu, 0);
            let mut sorted = roots.clone();
            sorted.sort();
            assert_eq!(sorted, roots);
            for a in &roots {
                assert!(a.pow(n).is_one());
                assert!(roots.contains(&a.inv().unwrap()));
                for b in &roots {
                    assert!(roots.contains(&(a * b)));
                }
            }
            let mut powers: Vec<Scalar> = (0..nu).map(|e| xi.pow(e)).collect();
            powers.sort();
            assert_eq!(powers, roots, "{spec} n = {n}");
        }
    }
}

fn prime_strategy() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![3u64, 5, 7, 11, 13, 101, 65_521])
}

fn cyc_element(m: u32) -> impl Strategy<Value = Scalar> {
    let k = FieldSpec::cyclotomic(m).unwrap();
    prop::collection::vec((-6i64..=6, 1i64..=4), m as usize + 2).prop_map(move |cs| {
        let arr: Vec<String> = cs.iter().map(|(n, d)| format!("{n}/{d}")).collect();
        Scalar::from_json(k, &json!(arr)).unwrap()
    })
}

fn field_axioms(a: &Scalar, b: &Scalar, c: &Scalar) {
    let k = a.field();
    assert_eq!(&(a + b) + c, a + &(b + c));
    assert_eq!(&(a * b) * c, a * &(b * c));
    assert_eq!(a + b, b + a);
    assert_eq!(a * b, b * a);
    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    assert_eq!(a + &k.zero(), a.clone());
    assert_eq!(a * &k.one(), a.clone());
    assert!((a + &(-a)).is_zero());
    assert_eq!(a - b, a + &(-b));
    if !a.is_zero() {
        assert!((a * &a.inv().unwrap()).is_one());
        assert_eq!(&b.checked_div(a).unwrap() * a, b.clone());
    }
}

proptest! {
    #[test]
    fn prime_field_axioms(p in prime_strategy(), a in any::<i64>(), b in any::<i64>(), c in any::<i64>()) {
        let k = fp(p);
        field_axioms(&k.from_i64(a), &k.from_i64(b), &k.from_i64(c));
        let r = k.from_i64(a).residue().unwrap() as i128;
        prop_assert_eq!(r, (a as i128).rem_euclid(p as i128));
    }

    #[test]
    fn rational_axioms(a in (-50i64..50, 1i64..20), b in (-50i64..50, 1i64..20), c in (-50i64..50, 1i64..20)) {
        field_axioms(&rat(a.0, a.1), &rat(b.0, b.1), &rat(c.0, c.1));
        // a/b as a reduced fraction equals the cross-multiplied value
        prop_assert_eq!(&rat(a.0, a.1) * &rat(a.1, 1), rat(a.0, 1));
    }

    #[test]
    fn cyclotomic_axioms(
        (a, b, c) in prop::sample::select(vec![3u32, 4, 5, 8, 9, 12])
            .prop_flat_map(|m| (cyc_element(m), cyc_element(m), cyc_element(m)))
    ) {
        field_axioms(&a, &b, &c);
    }

    #[test]
    fn reduction_is_idempotent(x in cyc_element(12)) {
        let k = FieldSpec::cyclotomic(12).unwrap();
        let again = Scalar::from_json(k, &x.to_json()).unwrap();
        prop_assert_eq!(&again, &x);
        prop_assert!(x.to_json().as_array().unwrap().len() <= k.degree());
    }

    #[test]
    fn scalar_json_round_trip(p in prime_strategy(), a in any::<i64>(), n in -1000i64..1000, d in 1i64..1000) {
        let s = fp(p).from_i64(a);
        prop_assert_eq!(Scalar::from_json(fp(p), &s.to_json()).unwrap(), s);
        let q = rat(n, d);
        prop_assert_eq!(Scalar::from_json(FieldSpec::Rationals, &q.to_json()).unwrap(), q);
    }

    #[test]
    fn roots_are_closed(p in prime_strategy(), n in 1u64..60) {
        let roots = roots_of_unity(fp(p), n).unwrap();
        prop_assert_eq!(n % roots.len() as u64, 0);
        prop_assert_eq!(roots.len() as u64, gcd(n, p - 1));
        for a in &roots {
            for b in &roots {
                prop_assert!(roots.contains(&(a * b)));
            }
        }
    }
}
