use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::arith::{divisors, factorize, gcd, rem_euclid, units_mod};
use crate::error::{Error, Result};
use crate::field::{nu_order, FieldSpec, Scalar};
use crate::linalg;
use crate::linmap::{Budget, LinMap};
use crate::morphisms::{assemble_psi, enumerate_morphisms, BicrossedMorphism, Quadruple};
use crate::products::MatchedPair;

use super::h4n::{h4n_pair, H4nSpec};

/// Verdict on `H_{4n,ξ^l} ≅ H_{4n,ξ^t}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsoVerdict {
    pub isomorphic: bool,
    /// The smallest unit `s` of `Z_n` that works.
    pub witness_s: Option<u64>,
    /// Whether the witness needs `r(c) = g`, i.e. `ξ^{l - ts} = -1`.
    pub twisted: bool,
}

fn check_exponent(e: u64, nu: u64) -> Result<()> {
    if e >= nu {
        return Err(Error::InvalidParameter(format!("exponent {e} must be below nu = {nu}")));
    }
    Ok(())
}

/// The arithmetic criterion for `H_{4n,ξ^l} ≅ H_{4n,ξ^t}` when the roots of
/// unity form a group of order `nu`: some unit `s` of `Z_n` has
/// `nu | l - ts`, or, when `n` and `nu` are both even, `2(l - ts) = nu q`
/// with `q` odd.
pub fn iso_criterion_arith(l: u64, t: u64, n: u64, nu: u64) -> IsoVerdict {
    let both_even = n % 2 == 0 && nu % 2 == 0;
    for s in 0..n {
        if gcd(s, n) != 1 {
            continue;
        }
        let diff = l as i64 - (t * s) as i64;
        if rem_euclid(diff, nu) == 0 {
            return IsoVerdict { isomorphic: true, witness_s: Some(s), twisted: false };
        }
        if both_even {
            let twice = 2 * diff;
            if rem_euclid(twice, nu) == 0 && (twice / nu as i64).rem_euclid(2) == 1 {
                return IsoVerdict { isomorphic: true, witness_s: Some(s), twisted: true };
            }
        }
    }
    IsoVerdict { isomorphic: false, witness_s: None, twisted: false }
}

/// [`iso_criterion_arith`] with `nu` the number of n-th roots of unity of
/// `field`. Exponents must lie in `0..nu`.
pub fn iso_criterion(l: u64, t: u64, n: u64, field: FieldSpec) -> Result<IsoVerdict> {
    let (nu, _) = nu_order(field, n)?;
    check_exponent(l, nu)?;
    check_exponent(t, nu)?;
    Ok(iso_criterion_arith(l, t, n, nu))
}

/// The isomorphism `H_{4n,ξ^l} → H_{4n,ξ^t}` predicted by the criterion:
/// `u = Id`, `p` trivial, `v(c) = c^s` and `r` trivial or `r(c) = g`. It is
/// assembled from its quadruple, which is verified along the way.
pub fn iso_witness(l: u64, t: u64, n: u64, field: FieldSpec) -> Result<Option<LinMap>> {
    let verdict = iso_criterion(l, t, n, field)?;
    let Some(s) = verdict.witness_s else {
        return Ok(None);
    };
    let mp = h4n_pair(&H4nSpec::new(n, l, field)?)?;
    let mp2 = h4n_pair(&H4nSpec::new(n, t, field)?)?;
    let q = power_quadruple(&mp, &mp2, &field.one(), s, verdict.twisted)?;
    let psi = assemble_psi(&q, &mp, &mp2)?;
    if !psi.is_bijective() {
        return Err(Error::AxiomViolation("predicted witness is not bijective".into()));
    }
    Ok(Some(psi))
}

/// `u(x) = γx`, `p` trivial, `v(c) = c^s`, and `r(c^i) = g^i` when
/// `twisted`, else `r` trivial.
pub fn power_quadruple(mp: &MatchedPair, mp2: &MatchedPair, gamma: &Scalar, s: u64, twisted: bool) -> Result<Quadruple> {
    let (a, h) = (mp.a().clone(), mp.h().clone());
    let (a2, h2) = (mp2.a().clone(), mp2.h().clone());
    let n = h.dim();
    let field = a.field();
    let u_cols: Vec<Vec<Scalar>> = (0..4)
        .map(|j| {
            let c = if j >= 2 { gamma.clone() } else { field.one() };
            linalg::scale(&c, &a2.basis(j))
        })
        .collect();
    let r_cols: Vec<Vec<Scalar>> = (0..n)
        .map(|i| a2.basis(if twisted { i % 2 } else { 0 }))
        .collect();
    let v_cols: Vec<Vec<Scalar>> = (0..n).map(|i| h2.basis((i * s as usize) % n)).collect();
    Ok(Quadruple {
        u: LinMap::from_columns(a.clone(), a2.clone(), &u_cols)?,
        p: LinMap::trivial(a, h2.clone())?,
        r: LinMap::from_columns(h.clone(), a2, &r_cols)?,
        v: LinMap::from_columns(h, h2, &v_cols)?,
    })
}

/// Outcome of a brute-force isomorphism search between two `H_{4n,ω}`.
#[derive(Clone, Debug)]
pub struct BruteVerdict {
    /// A Hopf isomorphism, if one was found.
    pub iso: Option<LinMap>,
    /// Number of Hopf maps between the two products that were examined.
    pub morphisms_examined: usize,
}

/// Looks for an isomorphism `H_{4n,ξ^l} → H_{4n,ξ^t}` among all Hopf maps
/// between the two bicrossed products.
pub fn brute_force_isomorphism(l: u64, t: u64, n: u64, field: FieldSpec, budget: &Budget) -> Result<BruteVerdict> {
    let mp = h4n_pair(&H4nSpec::new(n, l, field)?)?;
    let mp2 = h4n_pair(&H4nSpec::new(n, t, field)?)?;
    let all = enumerate_morphisms(&mp, &mp2, budget)?;
    let morphisms_examined = all.len();
    let iso = all
        .into_iter()
        .map(|m| m.psi)
        .find(|psi| psi.is_bijective() && psi.is_hopf_map());
    Ok(BruteVerdict { iso, morphisms_examined })
}

/// `1`, `xi`, `xi^e`.
pub fn exponent_label(e: u64) -> String {
    match e {
        0 => "1".into(),
        1 => "xi".into(),
        _ => format!("xi^{e}"),
    }
}

/// The isomorphism classes of the `H_{4n,ξ^t}`, `0 ≤ t < nu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoClasses {
    pub n: u64,
    pub nu: u64,
    pub count: usize,
    /// Exponents of the class representatives, sorted. They come from the
    /// divisors `d` of `nu` (odd `nu`) or of `nu/2` (even `nu`), with the
    /// largest divisor written as exponent 0.
    pub representatives: Vec<u64>,
    /// `canonical[t] = gcd(t, nu)`, with `gcd(0, nu) = nu`.
    pub canonical: Vec<u64>,
    /// `class_of[t]` is the representative exponent of the class of `t`.
    pub class_of: Vec<u64>,
}

impl IsoClasses {
    pub fn representative_labels(&self) -> Vec<String> {
        self.representatives.iter().map(|&e| exponent_label(e)).collect()
    }
}

impl fmt::Display for IsoClasses {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "nu={}, classes={}, representatives=[{}]",
            self.nu,
            self.count,
            self.representative_labels().join(", ")
        )
    }
}

fn top_divisor(nu: u64) -> u64 {
    if nu % 2 == 0 {
        nu / 2
    } else {
        nu
    }
}

/// The representative exponent of the class of `H_{4n,ξ^t}`: `d = gcd(t, nu)`,
/// halved when `nu` is even and `d` does not divide `nu/2`; the divisor
/// `nu` (odd) or `nu/2` (even) becomes exponent 0.
pub fn class_representative(t: u64, nu: u64) -> u64 {
    let top = top_divisor(nu);
    let mut d = gcd(t, nu);
    if d == 0 {
        d = nu;
    }
    if top % d != 0 {
        d /= 2;
    }
    if d == top {
        0
    } else {
        d
    }
}

/// The class count predicted from `nu = Π pᵢ^αᵢ`: `Π (αᵢ + 1)` for odd `nu`,
/// `α₁ Π_{i>1} (αᵢ + 1)` for even `nu` with `p₁ = 2`.
pub fn predicted_class_count(nu: u64) -> usize {
    factorize(nu)
        .iter()
        .map(|&(p, a)| if p == 2 { a as usize } else { a as usize + 1 })
        .product()
}

pub fn iso_classes(n: u64, field: FieldSpec) -> Result<IsoClasses> {
    let (nu, _) = nu_order(field, n)?;
    let top = top_divisor(nu);
    let mut representatives: Vec<u64> = divisors(top)
        .into_iter()
        .map(|d| if d == top { 0 } else { d })
        .collect();
    representatives.sort();
    let canonical = (0..nu).map(|t| if t == 0 { nu } else { gcd(t, nu) }).collect();
    let class_of = (0..nu).map(|t| class_representative(t, nu)).collect();
    Ok(IsoClasses { n, nu, count: representatives.len(), representatives, canonical, class_of })
}

/// `matrix[l][t]` is the criterion's verdict on `H_{4n,ξ^l} ≅ H_{4n,ξ^t}`.
pub fn partition_matrix(n: u64, field: FieldSpec) -> Result<Vec<Vec<bool>>> {
    let (nu, _) = nu_order(field, n)?;
    Ok((0..nu)
        .into_par_iter()
        .map(|l| (0..nu).map(|t| iso_criterion_arith(l, t, n, nu).isomorphic).collect())
        .collect())
}

/// The smallest unit `s` of `Z_n` with `s ≡ a (mod m)`.
pub fn unit_lift(a: u64, m: u64, n: u64) -> Result<u64> {
    if m == 0 || n == 0 || n % m != 0 {
        return Err(Error::InvalidParameter(format!("{m} must be a positive divisor of {n}")));
    }
    if gcd(a % m, m) != 1 {
        return Err(Error::InvalidParameter(format!("gcd({a}, {m}) != 1")));
    }
    (0..n / m)
        .map(|k| a % m + k * m)
        .find(|&s| gcd(s, n) == 1)
        .ok_or_else(|| Error::AxiomViolation(format!("no unit of Z_{n} above {a} mod {m}")))
}

/// The arithmetic data attached to `H_{4n,ξ^t}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArithmeticProfile {
    pub n: u64,
    pub t: u64,
    pub nu: u64,
    pub factorization: Vec<(u64, u32)>,
    /// `{s ∈ U(Z_n) : nu | t(s - 1)}`
    pub u_t: Vec<u64>,
    /// `{l ∈ U(Z_n) : 2t(l - 1) = nu q, q odd}`
    pub v_t: Vec<u64>,
    /// `U_t ∪ V_t`
    pub u_tilde: Vec<u64>,
}

impl ArithmeticProfile {
    pub fn new(n: u64, t: u64, nu: u64) -> Self {
        let units = units_mod(n);
        let u_t: Vec<u64> = units
            .iter()
            .copied()
            .filter(|&s| rem_euclid(t as i64 * (s as i64 - 1), nu) == 0)
            .collect();
        let v_t: Vec<u64> = units
            .iter()
            .copied()
            .filter(|&l| {
                let x = 2 * t as i64 * (l as i64 - 1);
                rem_euclid(x, nu) == 0 && (x / nu as i64).rem_euclid(2) == 1
            })
            .collect();
        let mut u_tilde: Vec<u64> = u_t.iter().chain(&v_t).copied().collect();
        u_tilde.sort();
        u_tilde.dedup();
        ArithmeticProfile { n, t, nu, factorization: factorize(nu), u_t, v_t, u_tilde }
    }

    /// Whether `n` and `nu` are both even, the case with `Ũ_t`.
    pub fn uses_tilde(&self) -> bool {
        self.n % 2 == 0 && self.nu % 2 == 0
    }
}

/// Whether a finite subset of `U(Z_n)` is a subgroup: it contains 1 and is
/// closed under multiplication.
pub fn is_unit_subgroup(set: &[u64], n: u64) -> bool {
    let one = 1 % n;
    set.contains(&one)
        && set
            .iter()
            .all(|&a| gcd(a, n) == 1 && set.iter().all(|&b| set.contains(&((a * b) % n))))
}

/// The predicted automorphism group of `H_{4n,ξ^t}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutProfile {
    pub profile: ArithmeticProfile,
    /// `k* x U_t(Z_n)` or `k* x U~_t(Z_n)`.
    pub structure: String,
    /// `(q - 1)` times the size of the unit group, over a finite field of
    /// size `q`.
    pub order: Option<u64>,
}

impl fmt::Display for AutProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "structure = {}", self.structure)?;
        if let Some(o) = self.order {
            write!(f, ", order = {o}")?;
        }
        Ok(())
    }
}

pub fn aut_group_profile(n: u64, t: u64, field: FieldSpec) -> Result<AutProfile> {
    let (nu, _) = nu_order(field, n)?;
    check_exponent(t, nu)?;
    let profile = ArithmeticProfile::new(n, t, nu);
    let (name, size) = if profile.uses_tilde() {
        ("U~", profile.u_tilde.len())
    } else {
        ("U", profile.u_t.len())
    };
    let structure = format!("k* x {name}_{t}(Z_{n})");
    let order = field.size().map(|q| (q - 1) * size as u64);
    Ok(AutProfile { profile, structure, order })
}

/// All Hopf automorphisms of `H_{4n,ξ^t}`, by search.
pub fn brute_force_automorphisms(n: u64, t: u64, field: FieldSpec, budget: &Budget) -> Result<Vec<BicrossedMorphism>> {
    let mp = h4n_pair(&H4nSpec::new(n, t, field)?)?;
    Ok(enumerate_morphisms(&mp, &mp, budget)?
        .into_iter()
        .filter(|m| m.psi.is_bijective())
        .collect())
}

/// The parameters `(γ, s)` of an automorphism and whether `r(c) = g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutShape {
    pub gamma: Scalar,
    pub s: u64,
    pub twisted: bool,
}

/// Reads an automorphism of `H_{4n,ω}` as `p` trivial, `u(x) = γx`,
/// `v(c) = c^s`, `r` trivial or `r(c) = g`; `None` if it has another shape.
pub fn automorphism_shape(m: &BicrossedMorphism) -> Option<AutShape> {
    let q = &m.quadruple;
    let a: &Arc<_> = q.u.dom();
    let h = q.v.dom();
    let n = h.dim();
    let field = a.field();
    if q.p != LinMap::trivial(a.clone(), q.p.cod().clone()).ok()? {
        return None;
    }
    let gamma = q.u.column(2)[2].clone();
    if gamma.is_zero() {
        return None;
    }
    for j in 0..4 {
        let c = if j >= 2 { gamma.clone() } else { field.one() };
        if q.u.column(j) != linalg::scale(&c, &a.basis(j)) {
            return None;
        }
    }
    let s = (0..n).find(|&s| q.v.column(1) == h.basis(s))? as u64;
    if (0..n).any(|i| q.v.column(i) != h.basis((i * s as usize) % n)) {
        return None;
    }
    let twisted = q.r.column(1) == a.basis(1);
    if (0..n).any(|i| q.r.column(i) != a.basis(if twisted { i % 2 } else { 0 })) {
        return None;
    }
    Some(AutShape { gamma, s, twisted })
}
