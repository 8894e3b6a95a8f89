use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::group::FiniteGroupTable;
use crate::hopf::{
    antipode_inverse, dual_group_algebra, dual_hopf, group_algebra, op_cop, HopfAlgebra,
};
use crate::linalg::{self, Matrix};

use super::{bicrossed_product, MatchedPair};

/// `D(H) = (H*)^cop ⋈ H` with
/// `h ◁ f = ⟨f, S⁻¹(h3) h1⟩ h2` and `h ▷ f = ⟨f, S⁻¹(h2) ? h1⟩`.
pub fn drinfeld_double(h: &HopfAlgebra) -> Result<(MatchedPair, HopfAlgebra)> {
    let sinv = antipode_inverse(h)?;
    let a = Arc::new(op_cop(&dual_hopf(h), false, true)?);
    let hh = Arc::new(h.clone());
    let d = h.dim();
    let field = h.field();
    let right = |i: usize, k: usize| -> Vec<Scalar> {
        let mut out = linalg::zeros(field, d);
        for (legs, c) in h.sweedler(i, 3) {
            let x = h.mul(&sinv.column(legs[2]), &h.basis(legs[0]));
            linalg::axpy(&mut out, &(&c * &x[k]), &h.basis(legs[1]));
        }
        out
    };
    let left = |i: usize, k: usize| -> Vec<Scalar> {
        let mut out = linalg::zeros(field, d);
        for (legs, c) in h.sweedler(i, 2) {
            let s2 = sinv.column(legs[1]);
            for (z, slot) in out.iter_mut().enumerate() {
                let x = h.mul(&h.mul(&s2, &h.basis(z)), &h.basis(legs[0]));
                *slot += &(&c * &x[k]);
            }
        }
        out
    };
    let mp = MatchedPair::from_fn(a, hh, left, right)?;
    let e = bicrossed_product(&mp)?;
    Ok((mp, e))
}

/// `D(k[G]) = (k[G]*)^cop # k[G]` with `g ▷ e_h = e_{ghg⁻¹}` and trivial `◁`.
pub fn drinfeld_double_group(g: &FiniteGroupTable, field: FieldSpec) -> Result<(MatchedPair, HopfAlgebra)> {
    let a = Arc::new(dual_group_algebra(g, field, true));
    let h = Arc::new(group_algebra(g, field));
    let n = g.order();
    let (a2, h2) = (a.clone(), h.clone());
    let mp = MatchedPair::from_fn(
        a,
        h,
        |x, k| a2.basis(g.mul(g.mul(x, k), g.inv(x))),
        |x, k| if k == g.identity() { h2.basis(x) } else { linalg::zeros(field, n) },
    )?;
    let e = bicrossed_product(&mp)?;
    Ok((mp, e))
}

/// Which axioms a [`SkewPairing`] is held to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairingConvention {
    /// `λ(hg, a) = λ(h, a1) λ(g, a2)`, `λ(h, ab) = λ(h2, a) λ(h1, b)`,
    /// `λ(1, a) = ε(a)`, `λ(h, 1) = ε(h)`.
    Standard,
    /// Only convolution invertibility; the derived actions must form a
    /// matched pair.
    MatchedPairOnly,
}

/// A convolution-invertible bilinear form `λ : H ⊗ A → k`;
/// `lambda[(i, j)] = λ(h_i, a_j)`.
#[derive(Clone, Debug)]
pub struct SkewPairing {
    a: Arc<HopfAlgebra>,
    h: Arc<HopfAlgebra>,
    lambda: Matrix,
    lambda_inv: Matrix,
    convention: PairingConvention,
}

impl SkewPairing {
    pub fn new(
        a: Arc<HopfAlgebra>,
        h: Arc<HopfAlgebra>,
        lambda: Matrix,
        convention: PairingConvention,
    ) -> Result<Self> {
        if a.field() != h.field() {
            return Err(Error::FieldMismatch(a.field(), h.field()));
        }
        if lambda.rows() != h.dim() || lambda.cols() != a.dim() {
            return Err(Error::Dimension("λ must be dim H × dim A".into()));
        }
        let lambda_inv = convolution_inverse(&a, &h, &lambda)?;
        let sp = SkewPairing {
            a,
            h,
            lambda,
            lambda_inv,
            convention,
        };
        if convention == PairingConvention::Standard {
            if let Some(what) = sp.axiom_failure() {
                return Err(Error::AxiomViolation(format!("skew pairing: {what}")));
            }
        }
        Ok(sp)
    }

    /// `λ = ε_H ⊗ ε_A`.
    pub fn trivial(a: Arc<HopfAlgebra>, h: Arc<HopfAlgebra>) -> Result<Self> {
        let field = a.field();
        let mut m = Matrix::zeros(field, h.dim(), a.dim());
        for i in 0..h.dim() {
            for j in 0..a.dim() {
                m.set(i, j, &h.counit()[i] * &a.counit()[j]);
            }
        }
        SkewPairing::new(a, h, m, PairingConvention::Standard)
    }

    /// `λ(h, f) = f(S⁻¹(h))` between `H` and `A = (H*)^cop`; its double is
    /// `D(H)`.
    pub fn evaluation(h: &HopfAlgebra, convention: PairingConvention) -> Result<Self> {
        let a = Arc::new(op_cop(&dual_hopf(h), false, true)?);
        let m = antipode_inverse(h)?.transpose();
        SkewPairing::new(a, Arc::new(h.clone()), m, convention)
    }

    pub fn a(&self) -> &Arc<HopfAlgebra> {
        &self.a
    }

    pub fn h(&self) -> &Arc<HopfAlgebra> {
        &self.h
    }

    pub fn lambda(&self) -> &Matrix {
        &self.lambda
    }

    pub fn lambda_inv(&self) -> &Matrix {
        &self.lambda_inv
    }

    pub fn convention(&self) -> PairingConvention {
        self.convention
    }

    /// `λ(x, y)` for arbitrary vectors.
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        bilinear(&self.lambda, x, y)
    }

    /// The first of the standard axioms that fails, if any.
    pub fn axiom_failure(&self) -> Option<&'static str> {
        let (a, h) = (&*self.a, &*self.h);
        let l = |i: usize, j: usize| self.lambda.get(i, j).clone();
        for j in 0..a.dim() {
            if self.eval(&h.unit(), &a.basis(j)) != a.counit()[j] {
                return Some("λ(1, a) = ε(a)");
            }
        }
        for i in 0..h.dim() {
            if self.eval(&h.basis(i), &a.unit()) != h.counit()[i] {
                return Some("λ(h, 1) = ε(h)");
            }
        }
        for i in 0..h.dim() {
            for g in 0..h.dim() {
                let hg = h.mul(&h.basis(i), &h.basis(g));
                for j in 0..a.dim() {
                    let mut rhs = a.field().zero();
                    for (a1, a2, c) in a.comul_basis(j) {
                        rhs += &(c * &(l(i, *a1) * l(g, *a2)));
                    }
                    if self.eval(&hg, &a.basis(j)) != rhs {
                        return Some("λ(hg, a) = λ(h, a1) λ(g, a2)");
                    }
                }
            }
        }
        for i in 0..h.dim() {
            for j in 0..a.dim() {
                for k in 0..a.dim() {
                    let ab = a.mul(&a.basis(j), &a.basis(k));
                    let mut rhs = a.field().zero();
                    for (h1, h2, c) in h.comul_basis(i) {
                        rhs += &(c * &(l(*h2, j) * l(*h1, k)));
                    }
                    if self.eval(&h.basis(i), &ab) != rhs {
                        return Some("λ(h, ab) = λ(h2, a) λ(h1, b)");
                    }
                }
            }
        }
        None
    }

    /// The actions `h ◁ a = h2 λ⁻¹(h1, a1) λ(h3, a2)` and
    /// `h ▷ a = a2 λ⁻¹(h1, a1) λ(h2, a3)`, unchecked.
    pub fn matched_pair(&self) -> Result<MatchedPair> {
        let (a, h) = (self.a.clone(), self.h.clone());
        let field = a.field();
        let (li, l) = (&self.lambda_inv, &self.lambda);
        let (a2, h2) = (a.clone(), h.clone());
        let (a3, h3) = (a.clone(), h.clone());
        MatchedPair::from_fn(
            a,
            h,
            |i, j| {
                let mut out = linalg::zeros(field, a2.dim());
                let hs = h2.sweedler(i, 2);
                for (al, c) in a2.sweedler(j, 3) {
                    for (hl, d) in &hs {
                        let coeff = &c * d * li.get(hl[0], al[0]) * l.get(hl[1], al[2]);
                        linalg::axpy(&mut out, &coeff, &a2.basis(al[1]));
                    }
                }
                out
            },
            |i, j| {
                let mut out = linalg::zeros(field, h3.dim());
                let as_ = a3.sweedler(j, 2);
                for (hl, c) in h3.sweedler(i, 3) {
                    for (al, d) in &as_ {
                        let coeff = &c * d * li.get(hl[0], al[0]) * l.get(hl[2], al[1]);
                        linalg::axpy(&mut out, &coeff, &h3.basis(hl[1]));
                    }
                }
                out
            },
        )
    }
}

fn bilinear(m: &Matrix, x: &[Scalar], y: &[Scalar]) -> Scalar {
    let mut acc = m.field().zero();
    for (i, c) in linalg::support(x) {
        for (j, d) in linalg::support(y) {
            acc += &(c * d * m.get(i, j));
        }
    }
    acc
}

/// Solves `λ(h1, a1) μ(h2, a2) = ε(h) ε(a)` for `μ`.
fn convolution_inverse(a: &HopfAlgebra, h: &HopfAlgebra, lambda: &Matrix) -> Result<Matrix> {
    let (da, dh) = (a.dim(), h.dim());
    let n = da * dh;
    let field = a.field();
    let mut sys = Matrix::zeros(field, n, n);
    let mut rhs = Vec::with_capacity(n);
    for i in 0..dh {
        for j in 0..da {
            let row = i * da + j;
            for (h1, h2, c) in h.comul_basis(i) {
                for (a1, a2, d) in a.comul_basis(j) {
                    let col = h2 * da + a2;
                    let v = sys.get(row, col) + &(c * d * lambda.get(*h1, *a1));
                    sys.set(row, col, v);
                }
            }
            rhs.push(&h.counit()[i] * &a.counit()[j]);
        }
    }
    let mu = sys
        .solve(&rhs)
        .ok_or_else(|| Error::Singular("λ is not convolution invertible".into()))?;
    let rows = mu.chunks(da).map(<[Scalar]>::to_vec).collect();
    Matrix::from_rows(field, rows)
}

/// The generalized quantum double `D_λ(A, H) = A ⋈_λ H`.
pub fn double_from_skew_pairing(sp: &SkewPairing) -> Result<(MatchedPair, HopfAlgebra)> {
    let mp = sp.matched_pair()?;
    if let Some((axiom, idx)) = mp.verify().first_failure() {
        return Err(Error::AxiomViolation(format!(
            "actions of the skew pairing do not form a matched pair: {axiom} fails at {idx:?}"
        )));
    }
    let e = bicrossed_product(&mp)?;
    Ok((mp, e))
}
