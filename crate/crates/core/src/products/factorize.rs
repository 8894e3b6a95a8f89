use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{self, Matrix};
use crate::linmap::LinMap;

use super::{bicrossed_product, MatchedPair};

/// The matrix of `A ⊗ H → E`, `a ⊗ h ↦ i(a) j(h)`.
pub fn multiplication_map(i: &LinMap, j: &LinMap) -> Result<Matrix> {
    let e = i.cod();
    if !e.same_structure(j.cod()) {
        return Err(Error::Dimension("i and j must land in the same algebra".into()));
    }
    let (da, dh) = (i.dom().dim(), j.dom().dim());
    let cols: Vec<_> = (0..da * dh)
        .map(|p| e.mul(&i.column(p / dh), &j.column(p % dh)))
        .collect();
    Ok(Matrix::from_columns(e.field(), e.dim(), &cols))
}

/// Recovers the matched pair of a factorization `E = i(A) j(H)`: writing
/// `j(h) i(a) = Σ i(a_k) j(h_k)`, sets `h ◁ a = Σ ε(a_k) h_k` and
/// `h ▷ a = Σ ε(h_k) a_k`. The multiplication map `A ⋈ H → E` is then
/// checked to be a Hopf isomorphism.
pub fn factorize(e: &Arc<HopfAlgebra>, i: &LinMap, j: &LinMap) -> Result<MatchedPair> {
    for (name, f) in [("i", i), ("j", j)] {
        if !f.cod().same_structure(e) {
            return Err(Error::Dimension(format!("{name} does not land in E")));
        }
        if !f.is_hopf_map() {
            return Err(Error::AxiomViolation(format!("{name} is not a Hopf algebra map")));
        }
        if !f.is_injective() {
            return Err(Error::AxiomViolation(format!("{name} is not injective")));
        }
    }
    let (a, h) = (i.dom().clone(), j.dom().clone());
    let (da, dh) = (a.dim(), h.dim());
    let field = e.field();
    let m = multiplication_map(i, j)?;
    if m.rows() != m.cols() {
        return Err(Error::Singular("dim E differs from dim A · dim H".into()));
    }
    let m_inv = m
        .inverse()
        .ok_or_else(|| Error::Singular("a ⊗ h ↦ i(a) j(h) is not bijective".into()))?;
    let mut left = Vec::with_capacity(da * dh);
    let mut right = Vec::with_capacity(da * dh);
    for hi in 0..dh {
        for aj in 0..da {
            let coeffs = m_inv.mul_vec(&e.mul(&j.column(hi), &i.column(aj)));
            let mut l = linalg::zeros(field, da);
            let mut r = linalg::zeros(field, dh);
            for (p, c) in linalg::support(&coeffs) {
                let (ak, hk) = (p / dh, p % dh);
                linalg::axpy(&mut r, &(c * &a.counit()[ak]), &h.basis(hk));
                linalg::axpy(&mut l, &(c * &h.counit()[hk]), &a.basis(ak));
            }
            left.push(l);
            right.push(r);
        }
    }
    let mp = MatchedPair::new(a, h, left, right)?;
    if let Some((axiom, idx)) = mp.verify().first_failure() {
        return Err(Error::AxiomViolation(format!(
            "extracted actions: {axiom} fails at {idx:?}"
        )));
    }
    let prod = Arc::new(bicrossed_product(&mp)?);
    let iso = LinMap::new(prod, e.clone(), m)?;
    if !iso.is_hopf_map() || !iso.is_bijective() {
        return Err(Error::AxiomViolation(
            "multiplication map A ⋈ H → E is not a Hopf isomorphism".into(),
        ));
    }
    Ok(mp)
}

/// `a ↦ a ⋈ 1` and `h ↦ 1 ⋈ h` into the bicrossed product `e` of `mp`.
pub fn canonical_inclusions(mp: &MatchedPair, e: &Arc<HopfAlgebra>) -> Result<(LinMap, LinMap)> {
    let (a, h) = (mp.a(), mp.h());
    let field = e.field();
    let ia: Vec<_> = (0..a.dim())
        .map(|k| linalg::kron(&a.basis(k), &h.unit(), field))
        .collect();
    let ih: Vec<_> = (0..h.dim())
        .map(|k| linalg::kron(&a.unit(), &h.basis(k), field))
        .collect();
    Ok((
        LinMap::from_columns(a.clone(), e.clone(), &ia)?,
        LinMap::from_columns(h.clone(), e.clone(), &ih)?,
    ))
}
