use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use super::{add_term, HopfAlgebra};
use crate::field::Scalar;
use crate::linalg;

/// The first violated identity of an axiom group, with the basis indices
/// at which it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub identity: &'static str,
    pub indices: Vec<usize>,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.identity, self.indices)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub algebra: Option<Failure>,
    pub coalgebra: Option<Failure>,
    pub bialgebra: Option<Failure>,
    pub antipode: Option<Failure>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn first_failure(&self) -> Option<(&'static str, &Failure)> {
        [
            ("algebra", &self.algebra),
            ("coalgebra", &self.coalgebra),
            ("bialgebra", &self.bialgebra),
            ("antipode", &self.antipode),
        ]
        .into_iter()
        .find_map(|(name, f)| f.as_ref().map(|f| (name, f)))
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |name: &str, r: &Option<Failure>| match r {
            None => format!("{name}: ok"),
            Some(fail) => format!("{name}: FAILED ({fail})"),
        };
        write!(
            f,
            "{}, {}, {}, {}",
            part("algebra", &self.algebra),
            part("coalgebra", &self.coalgebra),
            part("bialgebra", &self.bialgebra),
            part("antipode", &self.antipode)
        )
    }
}

/// Checks every Hopf algebra axiom on all basis tuples.
pub fn verify_hopf_axioms(h: &HopfAlgebra) -> AxiomReport {
    AxiomReport {
        algebra: check_algebra(h),
        coalgebra: check_coalgebra(h),
        bialgebra: check_bialgebra(h),
        antipode: check_antipode(h),
    }
}

fn fail(identity: &'static str, indices: Vec<usize>) -> Option<Failure> {
    Some(Failure { identity, indices })
}

fn check_algebra(h: &HopfAlgebra) -> Option<Failure> {
    let d = h.dim();
    let one = h.unit();
    for i in 0..d {
        let b = h.basis(i);
        if h.mul(&one, &b) != b {
            return fail("1 x = x", vec![i]);
        }
        if h.mul(&b, &one) != b {
            return fail("x 1 = x", vec![i]);
        }
    }
    let bad = (0..d * d).into_par_iter().find_map_first(|ij| {
        let (i, j) = (ij / d, ij % d);
        let bij = h.mul(&h.basis(i), &h.basis(j));
        (0..d).find_map(|k| {
            let bk = h.basis(k);
            let left = h.mul(&bij, &bk);
            let right = h.mul(&h.basis(i), &h.mul(&h.basis(j), &bk));
            (left != right).then(|| vec![i, j, k])
        })
    });
    bad.and_then(|idx| fail("(xy)z = x(yz)", idx))
}

fn check_coalgebra(h: &HopfAlgebra) -> Option<Failure> {
    let d = h.dim();
    let field = h.field();
    for i in 0..d {
        let mut left: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
        let mut right: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
        for (j, k, c) in h.comul_basis(i) {
            for (a, b, cc) in h.comul_basis(*j) {
                add_term(&mut left, vec![*a, *b, *k], c * cc);
            }
            for (a, b, cc) in h.comul_basis(*k) {
                add_term(&mut right, vec![*j, *a, *b], c * cc);
            }
        }
        if left != right {
            return fail("(Δ⊗id)Δ = (id⊗Δ)Δ", vec![i]);
        }
        let mut l = linalg::zeros(field, d);
        let mut r = linalg::zeros(field, d);
        for (j, k, c) in h.comul_basis(i) {
            l[*k] += &(c * &h.counit()[*j]);
            r[*j] += &(c * &h.counit()[*k]);
        }
        if l != h.basis(i) {
            return fail("(ε⊗id)Δ = id", vec![i]);
        }
        if r != h.basis(i) {
            return fail("(id⊗ε)Δ = id", vec![i]);
        }
    }
    None
}

fn check_bialgebra(h: &HopfAlgebra) -> Option<Failure> {
    let d = h.dim();
    let field = h.field();
    let one = h.unit();
    if h.comul(&one) != linalg::kron(&one, &one, field) {
        return fail("Δ(1) = 1⊗1", vec![]);
    }
    if !h.eps(&one).is_one() {
        return fail("ε(1) = 1", vec![]);
    }
    let bad = (0..d * d).into_par_iter().find_map_first(|ij| {
        let (i, j) = (ij / d, ij % d);
        let prod = h.mul(&h.basis(i), &h.basis(j));
        if h.eps(&prod) != &h.counit()[i] * &h.counit()[j] {
            return Some(("ε(xy) = ε(x)ε(y)", vec![i, j]));
        }
        let left = h.comul(&prod);
        let mut right = linalg::zeros(field, d * d);
        for (a, b, c1) in h.comul_basis(i) {
            for (e, f, c2) in h.comul_basis(j) {
                let c = c1 * c2;
                for (k, m1) in h.mul_basis(*a, *e) {
                    let cm = &c * m1;
                    for (l, m2) in h.mul_basis(*b, *f) {
                        right[k * d + l] += &(&cm * m2);
                    }
                }
            }
        }
        (left != right).then(|| ("Δ(xy) = Δ(x)Δ(y)", vec![i, j]))
    });
    bad.and_then(|(id, idx)| fail(id, idx))
}

fn check_antipode(h: &HopfAlgebra) -> Option<Failure> {
    let d = h.dim();
    let one = h.unit();
    for i in 0..d {
        let target = linalg::scale(&h.counit()[i], &one);
        let mut left = h.zero();
        let mut right = h.zero();
        for (j, k, c) in h.comul_basis(i) {
            let sj = h.antipode().column(*j);
            let sk = h.antipode().column(*k);
            linalg::axpy(&mut left, c, &h.mul(&sj, &h.basis(*k)));
            linalg::axpy(&mut right, c, &h.mul(&h.basis(*j), &sk));
        }
        if left != target {
            return fail("S(x1)x2 = ε(x)1", vec![i]);
        }
        if right != target {
            return fail("x1 S(x2) = ε(x)1", vec![i]);
        }
    }
    None
}
