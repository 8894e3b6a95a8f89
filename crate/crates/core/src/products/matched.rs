use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value as Json};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::{read_tensor, HopfAlgebra};
use crate::linalg;

/// A pair of Hopf algebras `(A, H)` with actions `▷ : H ⊗ A → A` and
/// `◁ : H ⊗ A → H`, stored on basis pairs.
#[derive(Clone, PartialEq)]
pub struct MatchedPair {
    a: Arc<HopfAlgebra>,
    h: Arc<HopfAlgebra>,
    /// `left[i * dim A + j] = h_i ▷ a_j`
    left: Vec<Vec<Scalar>>,
    /// `right[i * dim A + j] = h_i ◁ a_j`
    right: Vec<Vec<Scalar>>,
}

impl fmt::Debug for MatchedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatchedPair(A = {:?}, H = {:?})", self.a, self.h)
    }
}

/// The conditions checked by [`MatchedPair::verify`], in checking order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MpAxiom {
    /// `◁` is a coalgebra map.
    RightCoalgebra,
    /// `▷` is a coalgebra map.
    LeftCoalgebra,
    /// `(A, ▷)` is a left `H`-module.
    LeftModule,
    /// `(H, ◁)` is a right `A`-module.
    RightModule,
    /// `h ▷ 1 = ε(h) 1` and `1 ◁ a = ε(a) 1`.
    Normalization,
    /// `g ▷ (ab) = (g1 ▷ a1)((g2 ◁ a2) ▷ b)`.
    LeftTwisted,
    /// `(gh) ◁ a = (g ◁ (h1 ▷ a1))(h2 ◁ a2)`.
    RightTwisted,
    /// `g1 ◁ a1 ⊗ g2 ▷ a2 = g2 ◁ a2 ⊗ g1 ▷ a1`.
    Symmetry,
}

impl MpAxiom {
    pub const ALL: [MpAxiom; 8] = [
        MpAxiom::RightCoalgebra,
        MpAxiom::LeftCoalgebra,
        MpAxiom::LeftModule,
        MpAxiom::RightModule,
        MpAxiom::Normalization,
        MpAxiom::LeftTwisted,
        MpAxiom::RightTwisted,
        MpAxiom::Symmetry,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MpAxiom::RightCoalgebra => "right action is a coalgebra map",
            MpAxiom::LeftCoalgebra => "left action is a coalgebra map",
            MpAxiom::LeftModule => "left module",
            MpAxiom::RightModule => "right module",
            MpAxiom::Normalization => "normalization",
            MpAxiom::LeftTwisted => "left twisted multiplicativity",
            MpAxiom::RightTwisted => "right twisted multiplicativity",
            MpAxiom::Symmetry => "symmetry",
        }
    }
}

impl fmt::Display for MpAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of each matched-pair condition; failures carry the basis
/// indices of the first counterexample found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairReport {
    pub results: Vec<(MpAxiom, Option<Vec<usize>>)>,
}

impl MatchedPairReport {
    pub fn is_ok(&self) -> bool {
        self.results.iter().all(|(_, r)| r.is_none())
    }

    pub fn first_failure(&self) -> Option<(MpAxiom, &[usize])> {
        self.results
            .iter()
            .find_map(|(a, r)| r.as_deref().map(|idx| (*a, idx)))
    }

    pub fn holds(&self, axiom: MpAxiom) -> bool {
        self.results.iter().any(|(a, r)| *a == axiom && r.is_none())
    }
}

impl fmt::Display for MatchedPairReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .results
            .iter()
            .map(|(a, r)| match r {
                None => format!("{a}: ok"),
                Some(idx) => format!("{a}: FAILED at {idx:?}"),
            })
            .collect();
        f.write_str(&parts.join(", "))
    }
}

impl MatchedPair {
    pub fn new(
        a: Arc<HopfAlgebra>,
        h: Arc<HopfAlgebra>,
        left: Vec<Vec<Scalar>>,
        right: Vec<Vec<Scalar>>,
    ) -> Result<Self> {
        if a.field() != h.field() {
            return Err(Error::FieldMismatch(a.field(), h.field()));
        }
        let n = a.dim() * h.dim();
        if left.len() != n || right.len() != n {
            return Err(Error::Dimension(format!("action tables need {n} entries")));
        }
        if left.iter().any(|v| v.len() != a.dim()) || right.iter().any(|v| v.len() != h.dim()) {
            return Err(Error::Dimension("action table entries have the wrong length".into()));
        }
        Ok(MatchedPair { a, h, left, right })
    }

    /// Builds the tables from functions of the basis indices `(h_i, a_j)`.
    pub fn from_fn(
        a: Arc<HopfAlgebra>,
        h: Arc<HopfAlgebra>,
        left: impl Fn(usize, usize) -> Vec<Scalar>,
        right: impl Fn(usize, usize) -> Vec<Scalar>,
    ) -> Result<Self> {
        let (da, dh) = (a.dim(), h.dim());
        let l = (0..dh * da).map(|p| left(p / da, p % da)).collect();
        let r = (0..dh * da).map(|p| right(p / da, p % da)).collect();
        MatchedPair::new(a, h, l, r)
    }

    /// Both actions trivial.
    pub fn trivial(a: Arc<HopfAlgebra>, h: Arc<HopfAlgebra>) -> Result<Self> {
        let (ea, eh) = (a.counit().to_vec(), h.counit().to_vec());
        let (a2, h2) = (a.clone(), h.clone());
        MatchedPair::from_fn(
            a,
            h,
            |i, j| linalg::scale(&eh[i], &a2.basis(j)),
            |i, j| linalg::scale(&ea[j], &h2.basis(i)),
        )
    }

    pub fn a(&self) -> &Arc<HopfAlgebra> {
        &self.a
    }

    pub fn h(&self) -> &Arc<HopfAlgebra> {
        &self.h
    }

    /// `h_i ▷ a_j`.
    pub fn left(&self, i: usize, j: usize) -> &[Scalar] {
        &self.left[i * self.a.dim() + j]
    }

    /// `h_i ◁ a_j`.
    pub fn right(&self, i: usize, j: usize) -> &[Scalar] {
        &self.right[i * self.a.dim() + j]
    }

    pub fn left_table(&self) -> &[Vec<Scalar>] {
        &self.left
    }

    pub fn right_table(&self) -> &[Vec<Scalar>] {
        &self.right
    }

    /// `h ▷ a` for arbitrary vectors.
    pub fn act_left(&self, h: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.a.zero();
        for (i, x) in linalg::support(h) {
            for (j, y) in linalg::support(a) {
                linalg::axpy(&mut out, &(x * y), self.left(i, j));
            }
        }
        out
    }

    /// `h ◁ a` for arbitrary vectors.
    pub fn act_right(&self, h: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.h.zero();
        for (i, x) in linalg::support(h) {
            for (j, y) in linalg::support(a) {
                linalg::axpy(&mut out, &(x * y), self.right(i, j));
            }
        }
        out
    }

    pub fn is_left_trivial(&self) -> bool {
        let eh = self.h.counit();
        (0..self.h.dim()).all(|i| {
            (0..self.a.dim()).all(|j| self.left(i, j) == linalg::scale(&eh[i], &self.a.basis(j)))
        })
    }

    pub fn is_right_trivial(&self) -> bool {
        let ea = self.a.counit();
        (0..self.h.dim()).all(|i| {
            (0..self.a.dim()).all(|j| self.right(i, j) == linalg::scale(&ea[j], &self.h.basis(i)))
        })
    }

    /// Checks every condition exhaustively on basis elements.
    pub fn verify(&self) -> MatchedPairReport {
        MatchedPairReport {
            results: MpAxiom::ALL.iter().map(|&ax| (ax, self.check(ax))).collect(),
        }
    }

    /// Same verdict as `verify().is_ok()`, stopping at the first failure.
    pub fn is_valid(&self) -> bool {
        MpAxiom::ALL.iter().all(|&ax| self.check(ax).is_none())
    }

    /// First counterexample to one condition.
    pub fn check(&self, axiom: MpAxiom) -> Option<Vec<usize>> {
        let (a, h) = (&*self.a, &*self.h);
        let (da, dh) = (a.dim(), h.dim());
        let field = a.field();
        let pairs = || (0..dh).flat_map(move |i| (0..da).map(move |j| (i, j)));
        match axiom {
            MpAxiom::RightCoalgebra | MpAxiom::LeftCoalgebra => {
                let right = axiom == MpAxiom::RightCoalgebra;
                let (target, table): (&HopfAlgebra, &[Vec<Scalar>]) =
                    if right { (h, &self.right) } else { (a, &self.left) };
                let dt = target.dim();
                pairs()
                    .find(|&(i, j)| {
                        let v = &table[i * da + j];
                        if target.eps(v) != &h.counit()[i] * &a.counit()[j] {
                            return true;
                        }
                        let mut rhs = linalg::zeros(field, dt * dt);
                        for (h1, h2, c) in h.comul_basis(i) {
                            for (a1, a2, d) in a.comul_basis(j) {
                                linalg::axpy(
                                    &mut rhs,
                                    &(c * d),
                                    &linalg::kron(&table[h1 * da + a1], &table[h2 * da + a2], field),
                                );
                            }
                        }
                        target.comul(v) != rhs
                    })
                    .map(|(i, j)| vec![i, j])
            }
            MpAxiom::LeftModule => {
                let one = h.unit();
                if let Some(j) = (0..da).find(|&j| self.act_left(&one, &a.basis(j)) != a.basis(j)) {
                    return Some(vec![j]);
                }
                (0..dh)
                    .flat_map(|g| (0..dh).flat_map(move |k| (0..da).map(move |j| (g, k, j))))
                    .find(|&(g, k, j)| {
                        let gk = h.mul(&h.basis(g), &h.basis(k));
                        self.act_left(&gk, &a.basis(j))
                            != self.act_left(&h.basis(g), self.left(k, j))
                    })
                    .map(|(g, k, j)| vec![g, k, j])
            }
            MpAxiom::RightModule => {
                let one = a.unit();
                if let Some(i) = (0..dh).find(|&i| self.act_right(&h.basis(i), &one) != h.basis(i)) {
                    return Some(vec![i]);
                }
                (0..dh)
                    .flat_map(|i| (0..da).flat_map(move |j| (0..da).map(move |l| (i, j, l))))
                    .find(|&(i, j, l)| {
                        let ab = a.mul(&a.basis(j), &a.basis(l));
                        self.act_right(&h.basis(i), &ab)
                            != self.act_right(self.right(i, j), &a.basis(l))
                    })
                    .map(|(i, j, l)| vec![i, j, l])
            }
            MpAxiom::Normalization => {
                let (one_a, one_h) = (a.unit(), h.unit());
                if let Some(i) = (0..dh)
                    .find(|&i| self.act_left(&h.basis(i), &one_a) != linalg::scale(&h.counit()[i], &one_a))
                {
                    return Some(vec![i]);
                }
                (0..da)
                    .find(|&j| self.act_right(&one_h, &a.basis(j)) != linalg::scale(&a.counit()[j], &one_h))
                    .map(|j| vec![j])
            }
            MpAxiom::LeftTwisted => (0..dh)
                .flat_map(|g| (0..da).flat_map(move |j| (0..da).map(move |l| (g, j, l))))
                .find(|&(g, j, l)| {
                    let lhs = self.act_left(&h.basis(g), &a.mul(&a.basis(j), &a.basis(l)));
                    let mut rhs = a.zero();
                    for (g1, g2, c) in h.comul_basis(g) {
                        for (a1, a2, d) in a.comul_basis(j) {
                            let t = a.mul(self.left(*g1, *a1), &self.act_left(self.right(*g2, *a2), &a.basis(l)));
                            linalg::axpy(&mut rhs, &(c * d), &t);
                        }
                    }
                    lhs != rhs
                })
                .map(|(g, j, l)| vec![g, j, l]),
            MpAxiom::RightTwisted => (0..dh)
                .flat_map(|g| (0..dh).flat_map(move |k| (0..da).map(move |j| (g, k, j))))
                .find(|&(g, k, j)| {
                    let lhs = self.act_right(&h.mul(&h.basis(g), &h.basis(k)), &a.basis(j));
                    let mut rhs = h.zero();
                    for (h1, h2, c) in h.comul_basis(k) {
                        for (a1, a2, d) in a.comul_basis(j) {
                            let t = h.mul(&self.act_right(&h.basis(g), self.left(*h1, *a1)), self.right(*h2, *a2));
                            linalg::axpy(&mut rhs, &(c * d), &t);
                        }
                    }
                    lhs != rhs
                })
                .map(|(g, k, j)| vec![g, k, j]),
            MpAxiom::Symmetry => pairs()
                .find(|&(g, j)| {
                    let mut lhs = linalg::zeros(field, dh * da);
                    let mut rhs = linalg::zeros(field, dh * da);
                    for (g1, g2, c) in h.comul_basis(g) {
                        for (a1, a2, d) in a.comul_basis(j) {
                            let cd = c * d;
                            linalg::axpy(&mut lhs, &cd, &linalg::kron(self.right(*g1, *a1), self.left(*g2, *a2), field));
                            linalg::axpy(&mut rhs, &cd, &linalg::kron(self.right(*g2, *a2), self.left(*g1, *a1), field));
                        }
                    }
                    lhs != rhs
                })
                .map(|(g, j)| vec![g, j]),
        }
    }

    /// `{"format": "matched-pair-v1", A, H, left_action, right_action}`;
    /// `left_action[i][j]` is the coordinate vector of `h_i ▷ a_j`.
    pub fn to_json(&self) -> Json {
        let (da, dh) = (self.a.dim(), self.h.dim());
        let table = |t: &[Vec<Scalar>]| -> Json {
            (0..dh)
                .map(|i| {
                    (0..da)
                        .map(|j| t[i * da + j].iter().map(Scalar::to_json).collect::<Vec<_>>())
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>()
                .into()
        };
        json!({
            "format": "matched-pair-v1",
            "A": self.a.to_json(),
            "H": self.h.to_json(),
            "left_action": table(&self.left),
            "right_action": table(&self.right),
        })
    }

    pub fn from_json(v: &Json) -> Result<Self> {
        let get = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("missing \"{k}\"")));
        let a = Arc::new(HopfAlgebra::from_json(get("A")?)?);
        let h = Arc::new(HopfAlgebra::from_json(get("H")?)?);
        let (da, dh) = (a.dim(), h.dim());
        let field = a.field();
        let left = read_tensor(field, get("left_action")?, &[dh, da, da], "left_action")?;
        let right = read_tensor(field, get("right_action")?, &[dh, da, dh], "right_action")?;
        MatchedPair::new(
            a,
            h,
            left.chunks(da).map(<[Scalar]>::to_vec).collect(),
            right.chunks(dh).map(<[Scalar]>::to_vec).collect(),
        )
    }
}
