//! Exact scalar fields.
//!
//! Three kinds are supported: prime fields `F_p` with `p` odd, the rationals,
//! and cyclotomic fields `Q(zeta_m)` stored in the power basis modulo `Phi_m`.
//! A [`Scalar`] carries its field, so mixing fields is caught at runtime.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value as Json;

use crate::arith;
use crate::error::{Error, Result};

const MAX_PRIME: u64 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
    Cyclotomic(u32),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::InvalidField(
                "characteristic 2 is not supported".into(),
            ));
        }
        if !arith::is_prime(p) || p >= MAX_PRIME {
            return Err(Error::InvalidField(format!("{p} is not an odd prime below 2^31")));
        }
        Ok(FieldSpec::Prime(p))
    }

    /// `Q(zeta_m)`; `m = 1` and `m = 2` give the rationals.
    pub fn cyclotomic(m: u32) -> Result<Self> {
        match m {
            0 => Err(Error::InvalidField("cyclotomic index must be positive".into())),
            1 | 2 => Ok(FieldSpec::Rationals),
            _ => Ok(FieldSpec::Cyclotomic(m)),
        }
    }

    /// Parses `7`, `F7`, `Q`, `rationals`, `cyc8`, `cyclotomic:8`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        if t == "q" || t == "rationals" {
            return Ok(FieldSpec::Rationals);
        }
        for prefix in ["cyclotomic:", "cyclotomic", "cyc:", "cyc"] {
            if let Some(rest) = t.strip_prefix(prefix) {
                let m = rest
                    .parse()
                    .map_err(|_| Error::InvalidField(format!("bad cyclotomic index in {s:?}")))?;
                return FieldSpec::cyclotomic(m);
            }
        }
        let digits = t.strip_prefix("f_").or_else(|| t.strip_prefix('f')).unwrap_or(&t);
        let p = digits
            .parse()
            .map_err(|_| Error::InvalidField(format!("cannot parse field {s:?}")))?;
        FieldSpec::prime(p)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime(p) => *p,
            _ => 0,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    pub fn size(&self) -> Option<u64> {
        match self {
            FieldSpec::Prime(p) => Some(*p),
            _ => None,
        }
    }

    /// Dimension over the prime field (degree of `Phi_m` for cyclotomic fields).
    pub fn degree(&self) -> usize {
        match self {
            FieldSpec::Cyclotomic(m) => arith::euler_phi(*m as u64) as usize,
            _ => 1,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_rational_parts(BigInt::zero(), BigInt::one())
            .expect("zero is representable")
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Prime(p) => Scalar::modp(*p, arith::rem_euclid(n, *p)),
            _ => self
                .from_rational_parts(BigInt::from(n), BigInt::one())
                .expect("integers are representable"),
        }
    }

    pub fn from_rational_parts(&self, num: BigInt, den: BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match *self {
            FieldSpec::Prime(p) => {
                let pb = BigInt::from(p);
                let n = reduce_big(&num, &pb);
                let d = reduce_big(&den, &pb);
                if d == 0 {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::modp(p, n).checked_mul(&Scalar::modp(p, d).inv()?)?)
            }
            FieldSpec::Rationals => Ok(Scalar {
                field: *self,
                value: Value::Rat(BigRational::new(num, den)),
            }),
            FieldSpec::Cyclotomic(_) => {
                let mut coeffs = vec![BigRational::zero(); self.degree()];
                coeffs[0] = BigRational::new(num, den);
                Ok(Scalar {
                    field: *self,
                    value: Value::Cyc(coeffs),
                })
            }
        }
    }

    /// All field elements in canonical order, for finite fields.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match *self {
            FieldSpec::Prime(p) => Some((0..p).map(|a| Scalar::modp(p, a)).collect()),
            _ => None,
        }
    }

    /// The generator `zeta_m` of a cyclotomic field.
    pub fn zeta(&self) -> Option<Scalar> {
        match *self {
            FieldSpec::Cyclotomic(m) => Some(cyc_from_poly(m, &[BigRational::zero(), BigRational::one()])),
            _ => None,
        }
    }

    pub fn to_json(&self) -> Json {
        match *self {
            FieldSpec::Prime(p) => serde_json::json!({"kind": "prime", "p": p}),
            FieldSpec::Rationals => serde_json::json!({"kind": "rationals"}),
            FieldSpec::Cyclotomic(m) => serde_json::json!({"kind": "cyclotomic", "m": m}),
        }
    }

    pub fn from_json(v: &Json) -> Result<Self> {
        let kind = v
            .get("kind")
            .and_then(Json::as_str)
            .ok_or_else(|| Error::Parse("field spec needs a \"kind\"".into()))?;
        match kind {
            "prime" => {
                let p = v
                    .get("p")
                    .and_then(Json::as_u64)
                    .ok_or_else(|| Error::Parse("prime field needs integer \"p\"".into()))?;
                FieldSpec::prime(p)
            }
            "rationals" => Ok(FieldSpec::Rationals),
            "cyclotomic" => {
                let m = v
                    .get("m")
                    .and_then(Json::as_u64)
                    .ok_or_else(|| Error::Parse("cyclotomic field needs integer \"m\"".into()))?;
                FieldSpec::cyclotomic(m as u32)
            }
            other => Err(Error::Parse(format!("unknown field kind {other:?}"))),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Cyclotomic(m) => write!(f, "Q(zeta_{m})"),
        }
    }
}

fn reduce_big(n: &BigInt, p: &BigInt) -> u64 {
    let r = ((n % p) + p) % p;
    r.to_u64().expect("residue fits in u64")
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Value {
    Mod(u64),
    Rat(BigRational),
    Cyc(Vec<BigRational>),
}

/// An element of one of the supported fields.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    field: FieldSpec,
    value: Value,
}

impl Scalar {
    fn modp(p: u64, a: u64) -> Scalar {
        Scalar {
            field: FieldSpec::Prime(p),
            value: Value::Mod(a % p),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Mod(a) => *a == 0,
            Value::Rat(q) => q.is_zero(),
            Value::Cyc(c) => c.iter().all(Zero::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Mod(a) => *a == 1,
            Value::Rat(q) => q.is_one(),
            Value::Cyc(c) => c[0].is_one() && c[1..].iter().all(Zero::is_zero),
        }
    }

    /// The residue of a prime-field element.
    pub fn residue(&self) -> Option<u64> {
        match self.value {
            Value::Mod(a) => Some(a),
            _ => None,
        }
    }

    fn check(&self, other: &Scalar) -> Result<()> {
        if self.field != other.field {
            Err(Error::FieldMismatch(self.field, other.field))
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Mod(a), Value::Mod(b)) => {
                let p = self.field.characteristic();
                Value::Mod((a + b) % p)
            }
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a + b),
            (Value::Cyc(a), Value::Cyc(b)) => {
                Value::Cyc(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            _ => unreachable!("representation always matches the field"),
        };
        Ok(Scalar {
            field: self.field,
            value,
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Mod(a), Value::Mod(b)) => {
                let p = self.field.characteristic();
                Value::Mod(a * b % p)
            }
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a * b),
            (Value::Cyc(a), Value::Cyc(b)) => {
                let FieldSpec::Cyclotomic(m) = self.field else {
                    unreachable!()
                };
                return Ok(cyc_from_poly(m, &poly_mul(a, b)));
            }
            _ => unreachable!("representation always matches the field"),
        };
        Ok(Scalar {
            field: self.field,
            value,
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        self.checked_mul(&other.inv()?)
    }

    fn neg_ref(&self) -> Scalar {
        let value = match &self.value {
            Value::Mod(a) => {
                let p = self.field.characteristic();
                Value::Mod((p - a) % p)
            }
            Value::Rat(q) => Value::Rat(-q),
            Value::Cyc(c) => Value::Cyc(c.iter().map(|x| -x).collect()),
        };
        Scalar {
            field: self.field,
            value,
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.value {
            Value::Mod(a) => {
                let p = self.field.characteristic();
                Scalar::modp(p, arith::mod_pow(*a, p - 2, p))
            }
            Value::Rat(q) => Scalar {
                field: self.field,
                value: Value::Rat(q.recip()),
            },
            Value::Cyc(c) => {
                let FieldSpec::Cyclotomic(m) = self.field else {
                    unreachable!()
                };
                let phi: Vec<BigRational> = arith::cyclotomic_polynomial(m)
                    .iter()
                    .map(|&x| BigRational::from_integer(x.into()))
                    .collect();
                let inv = poly_inverse_mod(c, &phi);
                cyc_from_poly(m, &inv)
            }
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order, if finite and at most `bound`.
    pub fn multiplicative_order(&self, bound: u64) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let mut x = self.clone();
        for k in 1..=bound {
            if x.is_one() {
                return Some(k);
            }
            x = &x * self;
        }
        None
    }

    /// Serial form: integers for prime fields, integers or `"num/den"` for
    /// rationals, coefficient arrays for cyclotomic fields.
    pub fn to_json(&self) -> Json {
        match &self.value {
            Value::Mod(a) => Json::from(*a),
            Value::Rat(q) => rational_to_json(q),
            Value::Cyc(c) => Json::Array(c.iter().map(rational_to_json).collect()),
        }
    }

    pub fn from_json(field: FieldSpec, v: &Json) -> Result<Scalar> {
        match (field, v) {
            (FieldSpec::Cyclotomic(m), Json::Array(items)) => {
                let coeffs = items
                    .iter()
                    .map(rational_from_json)
                    .collect::<Result<Vec<_>>>()?;
                Ok(cyc_from_poly(m, &coeffs))
            }
            (_, Json::Array(_)) => Err(Error::Parse(format!(
                "coefficient arrays are only valid for cyclotomic fields, not {field}"
            ))),
            _ => {
                let q = rational_from_json(v)?;
                field.from_rational_parts(q.numer().clone(), q.denom().clone())
            }
        }
    }

    fn order_key(&self, other: &Scalar) -> Ordering {
        match (&self.value, &other.value) {
            (Value::Mod(a), Value::Mod(b)) => a.cmp(b),
            (Value::Rat(a), Value::Rat(b)) => rational_key_cmp(a, b),
            (Value::Cyc(a), Value::Cyc(b)) => {
                let deg = |c: &[BigRational]| c.iter().rposition(|x| !x.is_zero());
                deg(a).cmp(&deg(b)).then_with(|| {
                    a.iter()
                        .rev()
                        .zip(b.iter().rev())
                        .map(|(x, y)| rational_key_cmp(x, y))
                        .find(|o| *o != Ordering::Equal)
                        .unwrap_or(Ordering::Equal)
                })
            }
            _ => Ordering::Equal,
        }
    }
}

/// Canonical order on rationals: by absolute value, positive before negative.
fn rational_key_cmp(a: &BigRational, b: &BigRational) -> Ordering {
    a.abs()
        .cmp(&b.abs())
        .then_with(|| a.is_negative().cmp(&b.is_negative()))
}

/// Canonical encoding order: residues for `F_p`; `0 < 1 < -1 < 2 < ...` for
/// the rationals; for cyclotomic elements lower degree first, then leading
/// coefficients compared as rationals.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .cmp(&other.field)
            .then_with(|| self.order_key(other))
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn rational_to_json(q: &BigRational) -> Json {
    if q.is_integer() {
        if let Some(n) = q.numer().to_i64() {
            return Json::from(n);
        }
    }
    Json::String(format_rational(q))
}

fn rational_from_json(v: &Json) -> Result<BigRational> {
    match v {
        Json::Number(n) => n
            .as_i64()
            .map(|n| BigRational::from_integer(n.into()))
            .ok_or_else(|| Error::Parse(format!("scalar {n} is not an integer"))),
        Json::String(s) => parse_rational(s),
        other => Err(Error::Parse(format!("cannot read scalar from {other}"))),
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("cannot read rational from {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn poly_trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Quotient and remainder of `a` by a nonzero `b`.
fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = poly_trim(b.to_vec());
    let mut r = poly_trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lead;
        for (j, bj) in b.iter().enumerate() {
            let t = &c * bj;
            r[shift + j] -= t;
        }
        q[shift] = c;
        r = poly_trim(r);
    }
    (q, r)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let z = BigRational::zero();
    (0..n)
        .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
        .collect()
}

/// Inverse of `a` modulo an irreducible `m` via the extended Euclidean algorithm.
fn poly_inverse_mod(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
    let (mut r0, mut r1) = (m.to_vec(), poly_trim(a.to_vec()));
    let (mut t0, mut t1) = (Vec::new(), vec![BigRational::one()]);
    while r1.len() > 1 {
        let (q, r) = poly_divrem(&r0, &r1);
        let t2 = poly_trim(poly_sub(&t0, &poly_mul(&q, &t1)));
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let c = r1[0].clone();
    t1.iter().map(|x| x / &c).collect()
}

fn cyc_from_poly(m: u32, p: &[BigRational]) -> Scalar {
    let phi = arith::cyclotomic_polynomial(m);
    let deg = phi.len() - 1;
    let mut c = p.to_vec();
    // Phi_m is monic with integer coefficients: reduce from the top.
    for i in (deg..c.len()).rev() {
        let lead = std::mem::replace(&mut c[i], BigRational::zero());
        if lead.is_zero() {
            continue;
        }
        for (j, &pj) in phi.iter().enumerate().take(deg) {
            if pj != 0 {
                c[i - deg + j] -= &lead * BigRational::from_integer(pj.into());
            }
        }
    }
    c.resize(deg, BigRational::zero());
    Scalar {
        field: FieldSpec::Cyclotomic(m),
        value: Value::Cyc(c),
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Mod(a) => write!(f, "{a}"),
            Value::Rat(q) => write!(f, "{}", format_rational(q)),
            Value::Cyc(c) => {
                let terms: Vec<String> = c
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(i, x)| match i {
                        0 => format_rational(x),
                        1 => format!("{}*z", format_rational(x)),
                        _ => format!("{}*z^{i}", format_rational(x)),
                    })
                    .collect();
                if terms.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", terms.join(" + "))
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident, $atr:ident, $am:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalars from different fields")
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $atr<&Scalar> for Scalar {
            fn $am(&mut self, rhs: &Scalar) {
                *self = (&*self).$m(rhs);
            }
        }
    };
}

binop!(Add, add, checked_add, AddAssign, add_assign);
binop!(Sub, sub, checked_sub, SubAssign, sub_assign);
binop!(Mul, mul, checked_mul, MulAssign, mul_assign);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

/// The n-th roots of unity of `field`, sorted in canonical order.
pub fn roots_of_unity(field: FieldSpec, n: u64) -> Result<Vec<Scalar>> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let (generator, nu) = cyclic_root_generator(field, n);
    let mut out: Vec<Scalar> = (0..nu).map(|k| generator.pow(k)).collect();
    out.sort();
    Ok(out)
}

/// `(nu, xi)`: the number of n-th roots of unity and the canonical generator,
/// an element of maximal order with the smallest canonical encoding.
pub fn nu_order(field: FieldSpec, n: u64) -> Result<(u64, Scalar)> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let (generator, nu) = cyclic_root_generator(field, n);
    let xi = (1..=nu.max(1))
        .filter(|&k| arith::gcd(k, nu) == 1)
        .map(|k| generator.pow(k))
        .min()
        .expect("the group of roots of unity is nonempty");
    Ok((nu, xi))
}

/// Some generator of the cyclic group of n-th roots of unity, and its order.
fn cyclic_root_generator(field: FieldSpec, n: u64) -> (Scalar, u64) {
    match field {
        FieldSpec::Prime(p) => {
            let nu = arith::gcd(n, p - 1);
            let g = arith::primitive_root(p);
            (Scalar::modp(p, arith::mod_pow(g, (p - 1) / nu, p)), nu)
        }
        FieldSpec::Rationals => {
            if n % 2 == 0 {
                (field.from_i64(-1), 2)
            } else {
                (field.one(), 1)
            }
        }
        FieldSpec::Cyclotomic(m) => {
            let zeta = field.zeta().unwrap();
            let (z, big) = if m % 2 == 0 {
                (zeta, m as u64)
            } else {
                (-zeta, 2 * m as u64)
            };
            let nu = arith::gcd(n, big);
            (z.pow(big / nu), nu)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn prime_arithmetic() {
        let k = f(7);
        let a = k.from_i64(3);
        assert_eq!((&a * &a.inv().unwrap()), k.one());
        assert_eq!(k.from_i64(-1).residue(), Some(6));
        assert!(FieldSpec::prime(2).is_err());
        assert!(FieldSpec::prime(9).is_err());
        assert_eq!(k.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mismatched_fields_are_errors() {
        let a = f(5).one();
        let b = f(7).one();
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch(_, _))));
    }

    #[test]
    fn rational_parsing() {
        let q = FieldSpec::Rationals;
        let s = Scalar::from_json(q, &Json::String("-3/6".into())).unwrap();
        assert_eq!(s, q.from_rational_parts((-1).into(), 2.into()).unwrap());
        assert_eq!(s.to_json(), Json::String("-1/2".into()));
        let t = Scalar::from_json(f(7), &Json::String("1/2".into())).unwrap();
        assert_eq!(t.residue(), Some(4));
    }

    #[test]
    fn cyclotomic_arithmetic() {
        let k = FieldSpec::cyclotomic(8).unwrap();
        let z = k.zeta().unwrap();
        assert_eq!(z.pow(4), -k.one());
        assert_eq!(z.pow(8), k.one());
        let w = &z + &k.from_i64(2);
        assert_eq!(&w * &w.inv().unwrap(), k.one());
        assert_eq!(FieldSpec::cyclotomic(2).unwrap(), FieldSpec::Rationals);
        let k3 = FieldSpec::cyclotomic(3).unwrap();
        let z3 = k3.zeta().unwrap();
        assert_eq!(&z3 * &z3 + &z3 + k3.one(), k3.zero());
    }

    #[test]
    fn roots_of_unity_examples() {
        let r: Vec<u64> = roots_of_unity(f(7), 3)
            .unwrap()
            .iter()
            .map(|s| s.residue().unwrap())
            .collect();
        assert_eq!(r, vec![1, 2, 4]);
        let r: Vec<u64> = roots_of_unity(f(5), 10)
            .unwrap()
            .iter()
            .map(|s| s.residue().unwrap())
            .collect();
        assert_eq!(r, vec![1, 4]);
        assert_eq!(roots_of_unity(FieldSpec::Rationals, 3).unwrap().len(), 1);
        assert!(roots_of_unity(f(7), 0).is_err());
    }

    #[test]
    fn nu_order_examples() {
        let (nu, xi) = nu_order(f(13), 4).unwrap();
        assert_eq!(nu, 4);
        assert_eq!(xi.residue(), Some(5));
        let (nu, xi) = nu_order(f(7), 3).unwrap();
        assert_eq!((nu, xi.residue()), (3, Some(2)));
        let k = FieldSpec::cyclotomic(8).unwrap();
        let (nu, xi) = nu_order(k, 8).unwrap();
        assert_eq!(nu, 8);
        assert_eq!(xi, k.zeta().unwrap());
        let (nu, xi) = nu_order(FieldSpec::Rationals, 4).unwrap();
        assert_eq!((nu, xi), (2, FieldSpec::Rationals.from_i64(-1)));
    }
}
