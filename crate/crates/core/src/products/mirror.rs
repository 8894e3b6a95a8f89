use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::antipode_inverse;
use crate::linalg::{self, Matrix};
use crate::linmap::LinMap;

use super::{bicrossed_product, MatchedPair};

/// The matched pair `(H, A, ▷', ◁')` of the factorization `E = H A` of
/// `E = A ⋈ H`:
///
/// * `a ▷' h = S(S⁻¹(h) ◁ S⁻¹(a))`,
/// * `a ◁' h = S(S⁻¹(h) ▷ S⁻¹(a))`,
///
/// together with the Hopf isomorphism `ψ = φ ∘ S : A ⋈ H → H ⋈' A` where
/// `φ(a ⊗ h) = S(h) ⊗ S(a)`. Both the new pair and `ψ` are verified.
pub fn mirror_pair(mp: &MatchedPair) -> Result<(MatchedPair, LinMap)> {
    let (a, h) = (mp.a().clone(), mp.h().clone());
    let (da, dh) = (a.dim(), h.dim());
    let field = a.field();
    let sa_inv = antipode_inverse(&a)?;
    let sh_inv = antipode_inverse(&h)?;
    // indexed (a_i, h_j) in the mirrored pair
    let mirrored = MatchedPair::from_fn(
        h.clone(),
        a.clone(),
        |ai, hj| h.s(&mp.act_right(&sh_inv.column(hj), &sa_inv.column(ai))),
        |ai, hj| a.s(&mp.act_left(&sh_inv.column(hj), &sa_inv.column(ai))),
    )?;
    if let Some((axiom, idx)) = mirrored.verify().first_failure() {
        return Err(Error::AxiomViolation(format!(
            "mirrored actions: {axiom} fails at {idx:?}"
        )));
    }
    let e = Arc::new(bicrossed_product(mp)?);
    let e2 = Arc::new(bicrossed_product(&mirrored)?);
    let mut phi = Matrix::zeros(field, dh * da, da * dh);
    for ai in 0..da {
        for hj in 0..dh {
            let v = linalg::kron(&h.antipode().column(hj), &a.antipode().column(ai), field);
            for (k, c) in linalg::support(&v) {
                phi.set(k, ai * dh + hj, c.clone());
            }
        }
    }
    let psi = LinMap::new(e.clone(), e2, phi.mul(e.antipode())?)?;
    if !psi.is_hopf_map() || !psi.is_bijective() {
        return Err(Error::AxiomViolation("φ ∘ S is not a Hopf isomorphism".into()));
    }
    Ok((mirrored, psi))
}

/// The actions written as
///
/// * `a ▷' h = S(S⁻¹(h1) ◁ S⁻¹(a1)) ◁ S(S⁻¹(h2) ▷ S⁻¹(a2))`,
/// * `a ◁' h = S(S⁻¹(h1) ◁ S⁻¹(a1)) ▷ S(S⁻¹(h2) ▷ S⁻¹(a2))`,
///
/// unchecked. These read the product `S(X) S(Y)` in `E` through the actions
/// and in general differ from the factorization actions of [`mirror_pair`].
pub fn composed_mirror_actions(mp: &MatchedPair) -> Result<MatchedPair> {
    let (a, h) = (mp.a().clone(), mp.h().clone());
    let (da, dh) = (a.dim(), h.dim());
    let field = a.field();
    let sa_inv = antipode_inverse(&a)?;
    let sh_inv = antipode_inverse(&h)?;
    let x = |i: usize, j: usize| mp.act_right(&sh_inv.column(i), &sa_inv.column(j));
    let y = |i: usize, j: usize| mp.act_left(&sh_inv.column(i), &sa_inv.column(j));
    let build = |into_h: bool, aj: usize, hi: usize| -> Vec<Scalar> {
        let mut out = linalg::zeros(field, if into_h { dh } else { da });
        for (h1, h2, c) in h.comul_basis(hi) {
            for (a1, a2, d) in a.comul_basis(aj) {
                let sx = h.s(&x(*h1, *a1));
                let sy = a.s(&y(*h2, *a2));
                let v = if into_h { mp.act_right(&sx, &sy) } else { mp.act_left(&sx, &sy) };
                linalg::axpy(&mut out, &(c * d), &v);
            }
        }
        out
    };
    MatchedPair::from_fn(h.clone(), a.clone(), |ai, hj| build(true, ai, hj), |ai, hj| build(false, ai, hj))
}
