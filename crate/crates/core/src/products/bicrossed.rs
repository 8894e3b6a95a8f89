use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::{join_labels, HopfAlgebra};
use crate::linalg;

use super::MatchedPair;

/// Labels `a*h` of `A ⊗ H`, `A` major.
fn product_labels(a: &HopfAlgebra, h: &HopfAlgebra) -> Vec<String> {
    a.labels()
        .iter()
        .flat_map(|x| h.labels().iter().map(move |y| join_labels(x, y)))
        .collect()
}

/// `x ⊗ y` as sparse terms on the basis of `A ⊗ H`.
fn pair_terms(x: &[Scalar], y: &[Scalar], dh: usize) -> Vec<(usize, Scalar)> {
    let mut out = Vec::new();
    for (i, c) in linalg::support(x) {
        for (j, d) in linalg::support(y) {
            out.push((i * dh + j, c * d));
        }
    }
    out
}

fn tensor_comul(a: &HopfAlgebra, h: &HopfAlgebra, p: usize) -> Vec<(usize, usize, Scalar)> {
    let dh = h.dim();
    let mut out = Vec::new();
    for (a1, a2, c) in a.comul_basis(p / dh) {
        for (h1, h2, d) in h.comul_basis(p % dh) {
            out.push((a1 * dh + h1, a2 * dh + h2, c * d));
        }
    }
    out
}

/// The bicrossed product `A ⋈ H` on `A ⊗ H` (basis `a_i ⋈ h_j` at
/// `i * dim H + j`) with the tensor coalgebra and
/// `(a ⋈ h)(c ⋈ g) = a (h1 ▷ c1) ⋈ (h2 ◁ c2) g`.
pub fn bicrossed_product(mp: &MatchedPair) -> Result<HopfAlgebra> {
    let report = mp.verify();
    if let Some((axiom, idx)) = report.first_failure() {
        return Err(Error::AxiomViolation(format!(
            "not a matched pair: {axiom} fails at {idx:?}"
        )));
    }
    bicrossed_product_unchecked(mp)
}

/// [`bicrossed_product`] without checking the matched-pair conditions.
pub fn bicrossed_product_unchecked(mp: &MatchedPair) -> Result<HopfAlgebra> {
    let (a, h) = (&**mp.a(), &**mp.h());
    let dh = h.dim();
    let field = a.field();
    HopfAlgebra::from_sparse(
        field,
        product_labels(a, h),
        |p, q| {
            let (ai, hj) = (p / dh, p % dh);
            let (ck, gl) = (q / dh, q % dh);
            let mut left = linalg::zeros(field, a.dim() * dh);
            for (h1, h2, c) in h.comul_basis(hj) {
                for (c1, c2, d) in a.comul_basis(ck) {
                    let x = a.mul(&a.basis(ai), mp.left(*h1, *c1));
                    let y = h.mul(mp.right(*h2, *c2), &h.basis(gl));
                    linalg::axpy(&mut left, &(c * d), &linalg::kron(&x, &y, field));
                }
            }
            linalg::support(&left).map(|(k, c)| (k, c.clone())).collect()
        },
        linalg::kron(&a.unit(), &h.unit(), field),
        |p| tensor_comul(a, h, p),
        linalg::kron(a.counit(), h.counit(), field),
        |p| {
            // S(a ⋈ h) = S(h2) ▷ S(a2) ⋈ S(h1) ◁ S(a1)
            let (ai, hj) = (p / dh, p % dh);
            let mut acc = linalg::zeros(field, a.dim() * dh);
            for (h1, h2, c) in h.comul_basis(hj) {
                for (a1, a2, d) in a.comul_basis(ai) {
                    let sh2 = h.antipode().column(*h2);
                    let sa2 = a.antipode().column(*a2);
                    let sh1 = h.antipode().column(*h1);
                    let sa1 = a.antipode().column(*a1);
                    let x = mp.act_left(&sh2, &sa2);
                    let y = mp.act_right(&sh1, &sa1);
                    linalg::axpy(&mut acc, &(c * d), &linalg::kron(&x, &y, field));
                }
            }
            linalg::support(&acc).map(|(k, c)| (k, c.clone())).collect()
        },
    )
}

/// Which factor acts in a smash product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmashSide {
    /// `H` acts on `A` from the left; `A # H`.
    Left,
    /// `A` acts on `H` from the right; `A #^r H`.
    Right,
}

/// The smash product built directly from one action; the action table is
/// `table[i * dim A + j] = h_i ▷ a_j` (left) or `h_i ◁ a_j` (right).
///
/// Checks the module, module-algebra and module-coalgebra conditions and
/// the cocommutativity-type compatibility before building.
pub fn smash_product(
    a: &HopfAlgebra,
    h: &HopfAlgebra,
    table: &[Vec<Scalar>],
    side: SmashSide,
) -> Result<HopfAlgebra> {
    if a.field() != h.field() {
        return Err(Error::FieldMismatch(a.field(), h.field()));
    }
    let (da, dh) = (a.dim(), h.dim());
    let field = a.field();
    let out_len = match side {
        SmashSide::Left => da,
        SmashSide::Right => dh,
    };
    if table.len() != da * dh || table.iter().any(|v| v.len() != out_len) {
        return Err(Error::Dimension("action table has the wrong shape".into()));
    }
    let act = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> {
        let mut out = linalg::zeros(field, out_len);
        for (i, c) in linalg::support(x) {
            for (j, d) in linalg::support(y) {
                linalg::axpy(&mut out, &(c * d), &table[i * da + j]);
            }
        }
        out
    };
    check_smash(a, h, &act, side)?;
    match side {
        SmashSide::Left => HopfAlgebra::from_sparse(
            field,
            product_labels(a, h),
            |p, q| {
                // (a # h)(c # g) = a (h1 ▷ c) # h2 g
                let (ai, hj, ck, gl) = (p / dh, p % dh, q / dh, q % dh);
                let mut acc = Vec::new();
                for (h1, h2, c) in h.comul_basis(hj) {
                    let x = a.mul(&a.basis(ai), &table[h1 * da + ck]);
                    let y = h.mul(&h.basis(*h2), &h.basis(gl));
                    for (k, d) in pair_terms(&x, &y, dh) {
                        acc.push((k, c * &d));
                    }
                }
                acc
            },
            linalg::kron(&a.unit(), &h.unit(), field),
            |p| tensor_comul(a, h, p),
            linalg::kron(a.counit(), h.counit(), field),
            |p| {
                // S(a # h) = S(h2) ▷ S(a) # S(h1)
                let (ai, hj) = (p / dh, p % dh);
                let sa = a.antipode().column(ai);
                let mut acc = Vec::new();
                for (h1, h2, c) in h.comul_basis(hj) {
                    let x = act(&h.antipode().column(*h2), &sa);
                    for (k, d) in pair_terms(&x, &h.antipode().column(*h1), dh) {
                        acc.push((k, c * &d));
                    }
                }
                acc
            },
        ),
        SmashSide::Right => HopfAlgebra::from_sparse(
            field,
            product_labels(a, h),
            |p, q| {
                // (a # h)(c # g) = a c1 # (h ◁ c2) g
                let (ai, hj, ck, gl) = (p / dh, p % dh, q / dh, q % dh);
                let mut acc = Vec::new();
                for (c1, c2, c) in a.comul_basis(ck) {
                    let x = a.mul(&a.basis(ai), &a.basis(*c1));
                    let y = h.mul(&table[hj * da + c2], &h.basis(gl));
                    for (k, d) in pair_terms(&x, &y, dh) {
                        acc.push((k, c * &d));
                    }
                }
                acc
            },
            linalg::kron(&a.unit(), &h.unit(), field),
            |p| tensor_comul(a, h, p),
            linalg::kron(a.counit(), h.counit(), field),
            |p| {
                // S(a # h) = S(a2) # S(h) ◁ S(a1)
                let (ai, hj) = (p / dh, p % dh);
                let sh = h.antipode().column(hj);
                let mut acc = Vec::new();
                for (a1, a2, c) in a.comul_basis(ai) {
                    let y = act(&sh, &a.antipode().column(*a1));
                    for (k, d) in pair_terms(&a.antipode().column(*a2), &y, dh) {
                        acc.push((k, c * &d));
                    }
                }
                acc
            },
        ),
    }
}

fn check_smash(
    a: &HopfAlgebra,
    h: &HopfAlgebra,
    act: &dyn Fn(&[Scalar], &[Scalar]) -> Vec<Scalar>,
    side: SmashSide,
) -> Result<()> {
    let (da, dh) = (a.dim(), h.dim());
    let field = a.field();
    let fail = |what: &str, idx: Vec<usize>| {
        Err(Error::AxiomViolation(format!("smash product: {what} fails at {idx:?}")))
    };
    match side {
        SmashSide::Left => {
            for j in 0..da {
                if act(&h.unit(), &a.basis(j)) != a.basis(j) {
                    return fail("unit acts trivially", vec![j]);
                }
            }
            for i in 0..dh {
                if act(&h.basis(i), &a.unit()) != linalg::scale(&h.counit()[i], &a.unit()) {
                    return fail("h ▷ 1 = ε(h) 1", vec![i]);
                }
                for j in 0..da {
                    let v = act(&h.basis(i), &a.basis(j));
                    if a.eps(&v) != &h.counit()[i] * &a.counit()[j] {
                        return fail("module coalgebra (counit)", vec![i, j]);
                    }
                    let mut rhs = linalg::zeros(field, da * da);
                    let mut left = linalg::zeros(field, dh * da);
                    let mut right = linalg::zeros(field, dh * da);
                    for (h1, h2, c) in h.comul_basis(i) {
                        for (a1, a2, d) in a.comul_basis(j) {
                            let t = linalg::kron(
                                &act(&h.basis(*h1), &a.basis(*a1)),
                                &act(&h.basis(*h2), &a.basis(*a2)),
                                field,
                            );
                            linalg::axpy(&mut rhs, &(c * d), &t);
                        }
                        let x = act(&h.basis(*h2), &a.basis(j));
                        linalg::axpy(&mut left, c, &linalg::kron(&h.basis(*h1), &x, field));
                        let y = act(&h.basis(*h1), &a.basis(j));
                        linalg::axpy(&mut right, c, &linalg::kron(&h.basis(*h2), &y, field));
                    }
                    if a.comul(&v) != rhs {
                        return fail("module coalgebra", vec![i, j]);
                    }
                    if left != right {
                        return fail("g1 ⊗ g2 ▷ a = g2 ⊗ g1 ▷ a", vec![i, j]);
                    }
                    for k in 0..dh {
                        let lhs = act(&h.mul(&h.basis(k), &h.basis(i)), &a.basis(j));
                        if lhs != act(&h.basis(k), &v) {
                            return fail("module", vec![k, i, j]);
                        }
                    }
                    for l in 0..da {
                        let lhs = act(&h.basis(i), &a.mul(&a.basis(j), &a.basis(l)));
                        let mut rhs = a.zero();
                        for (h1, h2, c) in h.comul_basis(i) {
                            let t = a.mul(&act(&h.basis(*h1), &a.basis(j)), &act(&h.basis(*h2), &a.basis(l)));
                            linalg::axpy(&mut rhs, c, &t);
                        }
                        if lhs != rhs {
                            return fail("module algebra", vec![i, j, l]);
                        }
                    }
                }
            }
        }
        SmashSide::Right => {
            for i in 0..dh {
                if act(&h.basis(i), &a.unit()) != h.basis(i) {
                    return fail("unit acts trivially", vec![i]);
                }
            }
            for j in 0..da {
                if act(&h.unit(), &a.basis(j)) != linalg::scale(&a.counit()[j], &h.unit()) {
                    return fail("1 ◁ a = ε(a) 1", vec![j]);
                }
            }
            for i in 0..dh {
                for j in 0..da {
                    let v = act(&h.basis(i), &a.basis(j));
                    if h.eps(&v) != &h.counit()[i] * &a.counit()[j] {
                        return fail("module coalgebra (counit)", vec![i, j]);
                    }
                    let mut rhs = linalg::zeros(field, dh * dh);
                    let mut left = linalg::zeros(field, dh * da);
                    let mut right = linalg::zeros(field, dh * da);
                    for (a1, a2, d) in a.comul_basis(j) {
                        for (h1, h2, c) in h.comul_basis(i) {
                            let t = linalg::kron(
                                &act(&h.basis(*h1), &a.basis(*a1)),
                                &act(&h.basis(*h2), &a.basis(*a2)),
                                field,
                            );
                            linalg::axpy(&mut rhs, &(c * d), &t);
                        }
                        let x = act(&h.basis(i), &a.basis(*a1));
                        linalg::axpy(&mut left, d, &linalg::kron(&x, &a.basis(*a2), field));
                        let y = act(&h.basis(i), &a.basis(*a2));
                        linalg::axpy(&mut right, d, &linalg::kron(&y, &a.basis(*a1), field));
                    }
                    if h.comul(&v) != rhs {
                        return fail("module coalgebra", vec![i, j]);
                    }
                    if left != right {
                        return fail("g ◁ a1 ⊗ a2 = g ◁ a2 ⊗ a1", vec![i, j]);
                    }
                    for l in 0..da {
                        let lhs = act(&h.basis(i), &a.mul(&a.basis(j), &a.basis(l)));
                        if lhs != act(&v, &a.basis(l)) {
                            return fail("module", vec![i, j, l]);
                        }
                    }
                    for k in 0..dh {
                        let lhs = act(&h.mul(&h.basis(i), &h.basis(k)), &a.basis(j));
                        let mut rhs = h.zero();
                        for (a1, a2, d) in a.comul_basis(j) {
                            let t = h.mul(&act(&h.basis(i), &a.basis(*a1)), &act(&h.basis(k), &a.basis(*a2)));
                            linalg::axpy(&mut rhs, d, &t);
                        }
                        if lhs != rhs {
                            return fail("module algebra", vec![i, k, j]);
                        }
                    }
                }
            }
        }
    }
    Ok(())
}
