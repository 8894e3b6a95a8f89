use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{nu_order, FieldSpec, Scalar};
use crate::group::FiniteGroupTable;
use crate::hopf::{group_algebra, sweedler_h4, HopfAlgebra};
use crate::linalg;
use crate::products::MatchedPair;

/// Parameters of `H_{4n,ω}` with `ω = ξ^t` for the canonical generator `ξ`
/// of the n-th roots of unity.
#[derive(Clone, Debug, PartialEq)]
pub struct H4nSpec {
    pub n: u64,
    pub t: u64,
    pub field: FieldSpec,
    pub xi: Scalar,
}

impl H4nSpec {
    pub fn new(n: u64, t: u64, field: FieldSpec) -> Result<Self> {
        require_odd_characteristic(field)?;
        let (nu, xi) = nu_order(field, n)?;
        if t >= nu {
            return Err(Error::InvalidParameter(format!(
                "exponent t = {t} must be below nu({n}) = {nu}"
            )));
        }
        Ok(H4nSpec { n, t, field, xi })
    }

    pub fn nu(&self) -> u64 {
        nu_order(self.field, self.n).expect("n is positive").0
    }

    pub fn omega(&self) -> Scalar {
        self.xi.pow(self.t)
    }
}

pub(crate) fn require_odd_characteristic(field: FieldSpec) -> Result<()> {
    if field.characteristic() == 2 {
        return Err(Error::Precondition("the field must not have characteristic 2".into()));
    }
    Ok(())
}

fn h4n_labels(n: usize) -> Vec<String> {
    let c = |i: usize| match i {
        0 => String::new(),
        1 => "c".to_string(),
        _ => format!("c^{i}"),
    };
    ["", "g", "x", "gx"]
        .iter()
        .flat_map(|p| {
            (0..n).map(move |i| {
                let s = format!("{p}{}", c(i));
                if s.is_empty() {
                    "1".to_string()
                } else {
                    s
                }
            })
        })
        .collect()
}

/// `H_{4n,ω}` from its presentation: `g² = cⁿ = 1`, `x² = 0`, `xg = -gx`,
/// `cg = gc`, `cx = ω xc`, with `g, c` grouplike and `Δx = x⊗1 + g⊗x`.
/// The basis element `g^a x^b c^i` sits at `(a + 2b) n + i`.
pub fn build_h4n(spec: &H4nSpec) -> Result<HopfAlgebra> {
    h4n_with_root(spec.n, &spec.omega(), spec.field)
}

/// Same as [`build_h4n`] for an explicit root `ω`; fails unless `ωⁿ = 1`.
pub fn h4n_with_root(n: u64, omega: &Scalar, field: FieldSpec) -> Result<HopfAlgebra> {
    require_odd_characteristic(field)?;
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if omega.field() != field {
        return Err(Error::FieldMismatch(omega.field(), field));
    }
    if !omega.pow(n).is_one() {
        return Err(Error::InvalidParameter(format!("{omega} is not an {n}-th root of unity")));
    }
    let nn = n as usize;
    let one = field.one();
    let neg = -field.one();
    let idx = |a: usize, b: usize, i: usize| (a + 2 * b) * nn + i % nn;
    let split = |k: usize| ((k / nn) % 2, (k / nn) / 2, k % nn);
    let wpow = |e: usize| omega.pow(e as u64);
    // (g^a x^b c^i)(g^a' x^b' c^j) = ω^{i b'} (-1)^{b a'} g^{a+a'} x^{b+b'} c^{i+j}
    let mul = |k: usize, l: usize| -> Vec<(usize, Scalar)> {
        let (a, b, i) = split(k);
        let (a2, b2, j) = split(l);
        if b + b2 == 2 {
            return vec![];
        }
        let mut c = wpow(i * b2);
        if b * a2 == 1 {
            c = -c;
        }
        vec![(idx((a + a2) % 2, b + b2, i + j), c)]
    };
    let comul = |k: usize| -> Vec<(usize, usize, Scalar)> {
        let (a, b, i) = split(k);
        match (a, b) {
            (_, 0) => vec![(k, k, one.clone())],
            (0, _) => vec![(idx(0, 1, i), idx(0, 0, i), one.clone()), (idx(1, 0, i), idx(0, 1, i), one.clone())],
            _ => vec![(idx(1, 1, i), idx(1, 0, i), one.clone()), (idx(0, 0, i), idx(1, 1, i), one.clone())],
        }
    };
    // S(g^a x^b c^i) = c^{-i} S(g^a x^b) = ω^{-ib} S(g^a x^b) c^{-i}
    let antipode = |k: usize| -> Vec<(usize, Scalar)> {
        let (a, b, i) = split(k);
        let inv_i = (nn - i) % nn;
        let twist = wpow(inv_i * b);
        match (a, b) {
            (_, 0) => vec![(idx(a, 0, inv_i), one.clone())],
            (0, _) => vec![(idx(1, 1, inv_i), &neg * &twist)],
            _ => vec![(idx(0, 1, inv_i), twist)],
        }
    };
    let d = 4 * nn;
    let mut unit = linalg::zeros(field, d);
    unit[0] = one.clone();
    let counit = (0..d).map(|k| if split(k).1 == 0 { one.clone() } else { field.zero() }).collect();
    HopfAlgebra::from_sparse(field, h4n_labels(nn), mul, unit, comul, counit, antipode)
}

/// The matched pair `(H₄, k[Cₙ])` with trivial `◁` and `c ▷ x = ω x`,
/// `c ▷ gx = ω gx`, `c ▷ g = g`.
pub fn h4_cn_pair(n: u64, omega: &Scalar, field: FieldSpec) -> Result<MatchedPair> {
    require_odd_characteristic(field)?;
    if !omega.pow(n).is_one() {
        return Err(Error::InvalidParameter(format!("{omega} is not an {n}-th root of unity")));
    }
    let a = Arc::new(sweedler_h4(field));
    let h = Arc::new(group_algebra(&FiniteGroupTable::cyclic(n as usize), field));
    let w = omega.clone();
    let (a2, h2) = (a.clone(), h.clone());
    MatchedPair::from_fn(
        a,
        h,
        move |i, j| {
            let c = if j >= 2 { w.pow(i as u64) } else { field.one() };
            linalg::scale(&c, &a2.basis(j))
        },
        move |i, j| {
            let e = if j < 2 { field.one() } else { field.zero() };
            linalg::scale(&e, &h2.basis(i))
        },
    )
}

/// [`h4_cn_pair`] for `ω = ξ^t`.
pub fn h4n_pair(spec: &H4nSpec) -> Result<MatchedPair> {
    h4_cn_pair(spec.n, &spec.omega(), spec.field)
}
