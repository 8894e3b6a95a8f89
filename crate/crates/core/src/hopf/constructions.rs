use super::HopfAlgebra;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::group::FiniteGroupTable;
use crate::linalg::Matrix;

/// Joins two basis labels, dropping unit factors.
pub(crate) fn join_labels(a: &str, h: &str) -> String {
    match (a, h) {
        ("1", _) => h.to_string(),
        (_, "1") => a.to_string(),
        _ => format!("{a}*{h}"),
    }
}

/// The one-dimensional Hopf algebra `k`.
pub fn trivial_hopf(field: FieldSpec) -> HopfAlgebra {
    let one = field.one();
    HopfAlgebra::from_sparse(
        field,
        vec!["1".into()],
        |_, _| vec![(0, one.clone())],
        vec![one.clone()],
        |_| vec![(0, 0, one.clone())],
        vec![one.clone()],
        |_| vec![(0, one.clone())],
    )
    .expect("k is a Hopf algebra")
}

/// The group algebra `k[G]` on the basis of group elements.
pub fn group_algebra(g: &FiniteGroupTable, field: FieldSpec) -> HopfAlgebra {
    let one = field.one();
    let n = g.order();
    let mut unit = vec![field.zero(); n];
    unit[g.identity()] = one.clone();
    HopfAlgebra::from_sparse(
        field,
        g.labels().to_vec(),
        |a, b| vec![(g.mul(a, b), one.clone())],
        unit,
        |a| vec![(a, a, one.clone())],
        vec![one.clone(); n],
        |a| vec![(g.inv(a), one.clone())],
    )
    .expect("group algebras are well formed")
}

/// The dual `k[G]*` on the dual basis `e_g`, with `e_g e_h = δ_{g,h} e_g`.
///
/// Without `co_opposite` the coproduct is the transpose of the group law,
/// `Δ(e_g) = Σ_x e_x ⊗ e_{x⁻¹g}`; with it, `Δ(e_g) = Σ_x e_x ⊗ e_{g x⁻¹}`,
/// which is the algebra `(k[G]*)^cop` used to build `D(k[G])`.
pub fn dual_group_algebra(g: &FiniteGroupTable, field: FieldSpec, co_opposite: bool) -> HopfAlgebra {
    let one = field.one();
    let n = g.order();
    let labels = g.labels().iter().map(|l| format!("e_{l}")).collect();
    let mut counit = vec![field.zero(); n];
    counit[g.identity()] = one.clone();
    HopfAlgebra::from_sparse(
        field,
        labels,
        |a, b| if a == b { vec![(a, one.clone())] } else { vec![] },
        vec![one.clone(); n],
        |a| {
            (0..n)
                .map(|x| {
                    let other = if co_opposite {
                        g.mul(a, g.inv(x))
                    } else {
                        g.mul(g.inv(x), a)
                    };
                    (x, other, one.clone())
                })
                .collect()
        },
        counit,
        |a| vec![(g.inv(a), one.clone())],
    )
    .expect("dual group algebras are well formed")
}

/// Sweedler's four-dimensional Hopf algebra on the basis `{1, g, x, gx}`:
/// `g² = 1`, `x² = 0`, `xg = -gx`, `g` grouplike and `Δ(x) = x⊗1 + g⊗x`.
pub fn sweedler_h4(field: FieldSpec) -> HopfAlgebra {
    let one = field.one();
    let neg = -field.one();
    // index = a + 2b for g^a x^b
    let mul = |i: usize, j: usize| -> Vec<(usize, Scalar)> {
        let (a, b) = (i % 2, i / 2);
        let (a2, b2) = (j % 2, j / 2);
        if b + b2 == 2 {
            return vec![];
        }
        let sign = if b * a2 == 1 { neg.clone() } else { one.clone() };
        vec![((a + a2) % 2 + 2 * (b + b2), sign)]
    };
    let comul = |i: usize| -> Vec<(usize, usize, Scalar)> {
        match i {
            0 => vec![(0, 0, one.clone())],
            1 => vec![(1, 1, one.clone())],
            2 => vec![(2, 0, one.clone()), (1, 2, one.clone())],
            _ => vec![(3, 1, one.clone()), (0, 3, one.clone())],
        }
    };
    let antipode = |i: usize| -> Vec<(usize, Scalar)> {
        match i {
            0 => vec![(0, one.clone())],
            1 => vec![(1, one.clone())],
            2 => vec![(3, neg.clone())],
            _ => vec![(2, one.clone())],
        }
    };
    let z = field.zero();
    HopfAlgebra::from_sparse(
        field,
        ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect(),
        mul,
        vec![one.clone(), z.clone(), z.clone(), z.clone()],
        comul,
        vec![one.clone(), one.clone(), z.clone(), z],
        antipode,
    )
    .expect("H4 is well formed")
}

/// `A ⊗ H` with componentwise structure, basis `(a, h)` at `a * dim H + h`.
pub fn tensor_hopf(a: &HopfAlgebra, h: &HopfAlgebra) -> Result<HopfAlgebra> {
    if a.field() != h.field() {
        return Err(Error::FieldMismatch(a.field(), h.field()));
    }
    let field = a.field();
    let dh = h.dim();
    let labels = a
        .labels()
        .iter()
        .flat_map(|x| h.labels().iter().map(move |y| join_labels(x, y)))
        .collect();
    let unit = crate::linalg::kron(&a.unit(), &h.unit(), field);
    let counit = crate::linalg::kron(a.counit(), h.counit(), field);
    HopfAlgebra::from_sparse(
        field,
        labels,
        |i, j| {
            let mut out = Vec::new();
            for (k, c) in a.mul_basis(i / dh, j / dh) {
                for (l, cc) in h.mul_basis(i % dh, j % dh) {
                    out.push((k * dh + l, c * cc));
                }
            }
            out
        },
        unit,
        |i| {
            let mut out = Vec::new();
            for (a1, a2, c) in a.comul_basis(i / dh) {
                for (h1, h2, cc) in h.comul_basis(i % dh) {
                    out.push((a1 * dh + h1, a2 * dh + h2, c * cc));
                }
            }
            out
        },
        counit,
        |i| {
            let sa = a.antipode().column(i / dh);
            let sh = h.antipode().column(i % dh);
            let mut out = Vec::new();
            for (k, c) in crate::linalg::support(&sa) {
                for (l, cc) in crate::linalg::support(&sh) {
                    out.push((k * dh + l, c * cc));
                }
            }
            out
        },
    )
}

/// The linear dual `H*` on the dual basis, structure tensors transposed.
pub fn dual_hopf(h: &HopfAlgebra) -> HopfAlgebra {
    let d = h.dim();
    let field = h.field();
    let mut mult = Vec::with_capacity(d * d * d);
    let mut comult = Vec::with_capacity(d * d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                mult.push(h.comult_coeff(k, i, j).clone());
                comult.push(h.mult_coeff(j, k, i).clone());
            }
        }
    }
    let labels = h.labels().iter().map(|l| format!("e_{l}")).collect();
    HopfAlgebra::new(
        field,
        labels,
        mult,
        h.counit().to_vec(),
        comult,
        h.unit(),
        h.antipode().transpose(),
    )
    .expect("dual tensors have the right shape")
}

/// `H^op`, `H^cop` or `H^{op,cop}`. When exactly one structure is flipped
/// the antipode becomes `S⁻¹`.
pub fn op_cop(h: &HopfAlgebra, flip_mult: bool, flip_comult: bool) -> Result<HopfAlgebra> {
    let d = h.dim();
    let mut mult = Vec::with_capacity(d * d * d);
    let mut comult = Vec::with_capacity(d * d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                mult.push(if flip_mult {
                    h.mult_coeff(j, i, k).clone()
                } else {
                    h.mult_coeff(i, j, k).clone()
                });
                comult.push(if flip_comult {
                    h.comult_coeff(i, k, j).clone()
                } else {
                    h.comult_coeff(i, j, k).clone()
                });
            }
        }
    }
    let antipode = if flip_mult != flip_comult {
        h.antipode()
            .inverse()
            .ok_or_else(|| Error::Singular("antipode is not invertible".into()))?
    } else {
        h.antipode().clone()
    };
    HopfAlgebra::new(
        h.field(),
        h.labels().to_vec(),
        mult,
        h.unit(),
        comult,
        h.counit().to_vec(),
        antipode,
    )
}

/// Inverse of the antipode as a matrix.
pub(crate) fn antipode_inverse(h: &HopfAlgebra) -> Result<Matrix> {
    h.antipode()
        .inverse()
        .ok_or_else(|| Error::Singular("antipode is not invertible".into()))
}
