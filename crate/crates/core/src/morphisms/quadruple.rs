use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value as Json};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::HopfAlgebra;
use crate::linalg::{self, Matrix};
use crate::linmap::LinMap;
use crate::products::{bicrossed_product, MatchedPair};

/// The four components `u : A → A'`, `p : A → H'`, `r : H → A'`,
/// `v : H → H'` of a Hopf map `A ⋈ H → A' ⋈' H'`.
#[derive(Clone, Debug, PartialEq)]
pub struct Quadruple {
    pub u: LinMap,
    pub p: LinMap,
    pub r: LinMap,
    pub v: LinMap,
}

impl Quadruple {
    /// `(Id_A, ε 1, ε 1, Id_H)`, the quadruple of the identity of `A ⋈ H`.
    pub fn identity(mp: &MatchedPair) -> Result<Self> {
        let (a, h) = (mp.a().clone(), mp.h().clone());
        Ok(Quadruple {
            u: LinMap::identity(a.clone()),
            p: LinMap::trivial(a.clone(), h.clone())?,
            r: LinMap::trivial(h.clone(), a)?,
            v: LinMap::identity(h),
        })
    }

    fn parts(&self) -> [(&'static str, &LinMap); 4] {
        [("u", &self.u), ("p", &self.p), ("r", &self.r), ("v", &self.v)]
    }

    pub fn to_json(&self) -> Json {
        json!({
            "u": self.u.to_json(),
            "p": self.p.to_json(),
            "r": self.r.to_json(),
            "v": self.v.to_json(),
        })
    }
}

/// The compatibility conditions between the components of a [`Quadruple`],
/// in checking order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadCondition {
    /// `u(a1) ⊗ p(a2) = u(a2) ⊗ p(a1)`
    UpSymmetric,
    /// `r(h1) ⊗ v(h2) = r(h2) ⊗ v(h1)`
    RvSymmetric,
    /// `u(ab) = u(a1) (p(a2) ▷' u(b))`
    UTwisted,
    /// `p(ab) = (p(a) ◁' u(b1)) p(b2)`
    PTwisted,
    /// `r(hg) = r(h1) (v(h2) ▷' r(g))`
    RTwisted,
    /// `v(hg) = (v(h) ◁' r(g1)) v(g2)`
    VTwisted,
    /// `r(h1)(v(h2) ▷' u(b)) = u(h1 ▷ b1) (p(h2 ▷ b2) ▷' r(h3 ◁ b3))`
    ExchangeA,
    /// `(v(h) ◁' u(b1)) p(b2) = (p(h1 ▷ b1) ◁' r(h2 ◁ b2)) v(h3 ◁ b3)`
    ExchangeH,
}

impl QuadCondition {
    pub const ALL: [QuadCondition; 8] = [
        QuadCondition::UpSymmetric,
        QuadCondition::RvSymmetric,
        QuadCondition::UTwisted,
        QuadCondition::PTwisted,
        QuadCondition::RTwisted,
        QuadCondition::VTwisted,
        QuadCondition::ExchangeA,
        QuadCondition::ExchangeH,
    ];

    pub fn formula(self) -> &'static str {
        match self {
            QuadCondition::UpSymmetric => "u(a1) ⊗ p(a2) = u(a2) ⊗ p(a1)",
            QuadCondition::RvSymmetric => "r(h1) ⊗ v(h2) = r(h2) ⊗ v(h1)",
            QuadCondition::UTwisted => "u(ab) = u(a1) (p(a2) ▷' u(b))",
            QuadCondition::PTwisted => "p(ab) = (p(a) ◁' u(b1)) p(b2)",
            QuadCondition::RTwisted => "r(hg) = r(h1) (v(h2) ▷' r(g))",
            QuadCondition::VTwisted => "v(hg) = (v(h) ◁' r(g1)) v(g2)",
            QuadCondition::ExchangeA => {
                "r(h1) (v(h2) ▷' u(b)) = u(h1 ▷ b1) (p(h2 ▷ b2) ▷' r(h3 ◁ b3))"
            }
            QuadCondition::ExchangeH => {
                "(v(h) ◁' u(b1)) p(b2) = (p(h1 ▷ b1) ◁' r(h2 ◁ b2)) v(h3 ◁ b3)"
            }
        }
    }
}

impl fmt::Display for QuadCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.formula())
    }
}

/// Outcome of [`verify_quadruple`]: for each condition, the first basis
/// indices where it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadrupleReport {
    pub results: Vec<(QuadCondition, Option<Vec<usize>>)>,
}

impl QuadrupleReport {
    pub fn is_ok(&self) -> bool {
        self.results.iter().all(|(_, r)| r.is_none())
    }

    pub fn first_failure(&self) -> Option<(QuadCondition, &[usize])> {
        self.results
            .iter()
            .find_map(|(c, r)| r.as_deref().map(|idx| (*c, idx)))
    }

    pub fn holds(&self, c: QuadCondition) -> bool {
        self.results.iter().any(|(d, r)| *d == c && r.is_none())
    }
}

impl fmt::Display for QuadrupleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, r) in &self.results {
            match r {
                None => writeln!(f, "{c}: ok")?,
                Some(idx) => writeln!(f, "{c}: fails at {idx:?}")?,
            }
        }
        Ok(())
    }
}

fn check_shapes(q: &Quadruple, mp: &MatchedPair, mp2: &MatchedPair) -> Result<()> {
    let expect = [
        ("u", &q.u, mp.a(), mp2.a()),
        ("p", &q.p, mp.a(), mp2.h()),
        ("r", &q.r, mp.h(), mp2.a()),
        ("v", &q.v, mp.h(), mp2.h()),
    ];
    for (name, f, dom, cod) in expect {
        if !f.dom().same_structure(dom) || !f.cod().same_structure(cod) {
            return Err(Error::Dimension(format!(
                "{name} does not go between the expected algebras"
            )));
        }
    }
    Ok(())
}

fn check_components(q: &Quadruple) -> Result<()> {
    for (name, f) in q.parts() {
        if !f.is_unitary() || !f.is_coalgebra_map() {
            return Err(Error::Precondition(format!(
                "{name} is not a unitary coalgebra map"
            )));
        }
    }
    Ok(())
}

/// Column images of the four components, plus both matched pairs.
struct Ctx<'a> {
    mp: &'a MatchedPair,
    mp2: &'a MatchedPair,
    u: Vec<Vec<Scalar>>,
    p: Vec<Vec<Scalar>>,
    r: Vec<Vec<Scalar>>,
    v: Vec<Vec<Scalar>>,
    field: FieldSpec,
}

fn columns(f: &LinMap) -> Vec<Vec<Scalar>> {
    (0..f.dom().dim()).map(|j| f.column(j)).collect()
}

/// `Σ x_k cols[k]`.
fn image(cols: &[Vec<Scalar>], x: &[Scalar], field: FieldSpec, dim: usize) -> Vec<Scalar> {
    let mut out = linalg::zeros(field, dim);
    for (k, c) in linalg::support(x) {
        linalg::axpy(&mut out, c, &cols[k]);
    }
    out
}

impl<'a> Ctx<'a> {
    fn new(q: &Quadruple, mp: &'a MatchedPair, mp2: &'a MatchedPair) -> Self {
        Ctx {
            mp,
            mp2,
            u: columns(&q.u),
            p: columns(&q.p),
            r: columns(&q.r),
            v: columns(&q.v),
            field: mp.a().field(),
        }
    }

    fn a(&self) -> &HopfAlgebra {
        self.mp.a()
    }

    fn h(&self) -> &HopfAlgebra {
        self.mp.h()
    }

    fn a2(&self) -> &HopfAlgebra {
        self.mp2.a()
    }

    fn h2(&self) -> &HopfAlgebra {
        self.mp2.h()
    }

    fn u_of(&self, x: &[Scalar]) -> Vec<Scalar> {
        image(&self.u, x, self.field, self.a2().dim())
    }

    fn p_of(&self, x: &[Scalar]) -> Vec<Scalar> {
        image(&self.p, x, self.field, self.h2().dim())
    }

    fn r_of(&self, x: &[Scalar]) -> Vec<Scalar> {
        image(&self.r, x, self.field, self.a2().dim())
    }

    fn v_of(&self, x: &[Scalar]) -> Vec<Scalar> {
        image(&self.v, x, self.field, self.h2().dim())
    }

    fn zeros(&self, n: usize) -> Vec<Scalar> {
        linalg::zeros(self.field, n)
    }

    fn check(&self, c: QuadCondition) -> Option<Vec<usize>> {
        let (da, dh) = (self.a().dim(), self.h().dim());
        let pairs_a = || (0..da).flat_map(move |i| (0..da).map(move |j| (i, j)));
        let pairs_h = || (0..dh).flat_map(move |i| (0..dh).map(move |j| (i, j)));
        let pairs_ha = || (0..dh).flat_map(move |i| (0..da).map(move |j| (i, j)));
        match c {
            QuadCondition::UpSymmetric => (0..da).find(|&i| !self.up_symmetric(i)).map(|i| vec![i]),
            QuadCondition::RvSymmetric => (0..dh).find(|&i| !self.rv_symmetric(i)).map(|i| vec![i]),
            QuadCondition::UTwisted => pairs_a().find(|&(i, j)| !self.u_twisted(i, j)).map(|(i, j)| vec![i, j]),
            QuadCondition::PTwisted => pairs_a().find(|&(i, j)| !self.p_twisted(i, j)).map(|(i, j)| vec![i, j]),
            QuadCondition::RTwisted => pairs_h().find(|&(i, j)| !self.r_twisted(i, j)).map(|(i, j)| vec![i, j]),
            QuadCondition::VTwisted => pairs_h().find(|&(i, j)| !self.v_twisted(i, j)).map(|(i, j)| vec![i, j]),
            QuadCondition::ExchangeA => pairs_ha().find(|&(i, j)| !self.exchange_a(i, j)).map(|(i, j)| vec![i, j]),
            QuadCondition::ExchangeH => pairs_ha().find(|&(i, j)| !self.exchange_h(i, j)).map(|(i, j)| vec![i, j]),
        }
    }

    fn up_symmetric(&self, i: usize) -> bool {
        let n = self.a2().dim() * self.h2().dim();
        let (mut l, mut r) = (self.zeros(n), self.zeros(n));
        for (j, k, c) in self.a().comul_basis(i) {
            linalg::axpy(&mut l, c, &linalg::kron(&self.u[*j], &self.p[*k], self.field));
            linalg::axpy(&mut r, c, &linalg::kron(&self.u[*k], &self.p[*j], self.field));
        }
        l == r
    }

    fn rv_symmetric(&self, i: usize) -> bool {
        let n = self.a2().dim() * self.h2().dim();
        let (mut l, mut r) = (self.zeros(n), self.zeros(n));
        for (j, k, c) in self.h().comul_basis(i) {
            linalg::axpy(&mut l, c, &linalg::kron(&self.r[*j], &self.v[*k], self.field));
            linalg::axpy(&mut r, c, &linalg::kron(&self.r[*k], &self.v[*j], self.field));
        }
        l == r
    }

    fn u_twisted(&self, i: usize, j: usize) -> bool {
        let (a, a2) = (self.a(), self.a2());
        let lhs = self.u_of(&a.mul(&a.basis(i), &a.basis(j)));
        let mut rhs = self.zeros(a2.dim());
        for (x, y, c) in a.comul_basis(i) {
            let t = a2.mul(&self.u[*x], &self.mp2.act_left(&self.p[*y], &self.u[j]));
            linalg::axpy(&mut rhs, c, &t);
        }
        lhs == rhs
    }

    fn p_twisted(&self, i: usize, j: usize) -> bool {
        let (a, h2) = (self.a(), self.h2());
        let lhs = self.p_of(&a.mul(&a.basis(i), &a.basis(j)));
        let mut rhs = self.zeros(h2.dim());
        for (x, y, c) in a.comul_basis(j) {
            let t = h2.mul(&self.mp2.act_right(&self.p[i], &self.u[*x]), &self.p[*y]);
            linalg::axpy(&mut rhs, c, &t);
        }
        lhs == rhs
    }

    fn r_twisted(&self, i: usize, j: usize) -> bool {
        let (h, a2) = (self.h(), self.a2());
        let lhs = self.r_of(&h.mul(&h.basis(i), &h.basis(j)));
        let mut rhs = self.zeros(a2.dim());
        for (x, y, c) in h.comul_basis(i) {
            let t = a2.mul(&self.r[*x], &self.mp2.act_left(&self.v[*y], &self.r[j]));
            linalg::axpy(&mut rhs, c, &t);
        }
        lhs == rhs
    }

    fn v_twisted(&self, i: usize, j: usize) -> bool {
        let (h, h2) = (self.h(), self.h2());
        let lhs = self.v_of(&h.mul(&h.basis(i), &h.basis(j)));
        let mut rhs = self.zeros(h2.dim());
        for (x, y, c) in h.comul_basis(j) {
            let t = h2.mul(&self.mp2.act_right(&self.v[i], &self.r[*x]), &self.v[*y]);
            linalg::axpy(&mut rhs, c, &t);
        }
        lhs == rhs
    }

    fn exchange_a(&self, hi: usize, bj: usize) -> bool {
        let (a, h, a2) = (self.a(), self.h(), self.a2());
        let mut lhs = self.zeros(a2.dim());
        for (x, y, c) in h.comul_basis(hi) {
            let t = a2.mul(&self.r[*x], &self.mp2.act_left(&self.v[*y], &self.u[bj]));
            linalg::axpy(&mut lhs, c, &t);
        }
        let mut rhs = self.zeros(a2.dim());
        let bs = a.sweedler(bj, 3);
        for (hl, c) in h.sweedler(hi, 3) {
            for (bl, d) in &bs {
                let u1 = self.u_of(self.mp.left(hl[0], bl[0]));
                let p2 = self.p_of(self.mp.left(hl[1], bl[1]));
                let r3 = self.r_of(self.mp.right(hl[2], bl[2]));
                let t = a2.mul(&u1, &self.mp2.act_left(&p2, &r3));
                linalg::axpy(&mut rhs, &(&c * d), &t);
            }
        }
        lhs == rhs
    }

    fn exchange_h(&self, hi: usize, bj: usize) -> bool {
        let (a, h, h2) = (self.a(), self.h(), self.h2());
        let mut lhs = self.zeros(h2.dim());
        for (x, y, c) in a.comul_basis(bj) {
            let t = h2.mul(&self.mp2.act_right(&self.v[hi], &self.u[*x]), &self.p[*y]);
            linalg::axpy(&mut lhs, c, &t);
        }
        let mut rhs = self.zeros(h2.dim());
        let bs = a.sweedler(bj, 3);
        for (hl, c) in h.sweedler(hi, 3) {
            for (bl, d) in &bs {
                let p1 = self.p_of(self.mp.left(hl[0], bl[0]));
                let r2 = self.r_of(self.mp.right(hl[1], bl[1]));
                let v3 = self.v_of(self.mp.right(hl[2], bl[2]));
                let t = h2.mul(&self.mp2.act_right(&p1, &r2), &v3);
                linalg::axpy(&mut rhs, &(&c * d), &t);
            }
        }
        lhs == rhs
    }

    /// `ψ(a ⋈ h) = u(a1)(p(a2) ▷' r(h1)) ⋈' (p(a3) ◁' r(h2)) v(h3)`.
    fn psi_matrix(&self) -> Matrix {
        let (a, h, a2, h2) = (self.a(), self.h(), self.a2(), self.h2());
        let (dh, n2) = (h.dim(), a2.dim() * h2.dim());
        let hs: Vec<_> = (0..dh).map(|j| h.sweedler(j, 3)).collect();
        let mut cols = Vec::with_capacity(a.dim() * dh);
        for ai in 0..a.dim() {
            let as_ = a.sweedler(ai, 3);
            for hsj in &hs {
                let mut col = self.zeros(n2);
                for (al, c) in &as_ {
                    for (hl, d) in hsj {
                        let left = a2.mul(
                            &self.u[al[0]],
                            &self.mp2.act_left(&self.p[al[1]], &self.r[hl[0]]),
                        );
                        let right = h2.mul(
                            &self.mp2.act_right(&self.p[al[2]], &self.r[hl[1]]),
                            &self.v[hl[2]],
                        );
                        linalg::axpy(&mut col, &(c * d), &linalg::kron(&left, &right, self.field));
                    }
                }
                cols.push(col);
            }
        }
        Matrix::from_columns(self.field, n2, &cols)
    }
}

/// Checks the eight compatibility conditions on all basis elements.
/// Components that are not unitary coalgebra maps give
/// [`Error::Precondition`].
pub fn verify_quadruple(q: &Quadruple, mp: &MatchedPair, mp2: &MatchedPair) -> Result<QuadrupleReport> {
    check_shapes(q, mp, mp2)?;
    check_components(q)?;
    let ctx = Ctx::new(q, mp, mp2);
    Ok(QuadrupleReport {
        results: QuadCondition::ALL.iter().map(|&c| (c, ctx.check(c))).collect(),
    })
}

/// The matrix of `ψ(a ⋈ h) = u(a1)(p(a2) ▷' r(h1)) ⋈' (p(a3) ◁' r(h2)) v(h3)`
/// without any checks beyond shapes.
pub fn assemble_psi_unchecked(q: &Quadruple, mp: &MatchedPair, mp2: &MatchedPair) -> Result<Matrix> {
    check_shapes(q, mp, mp2)?;
    Ok(Ctx::new(q, mp, mp2).psi_matrix())
}

/// Assembles `ψ : A ⋈ H → A' ⋈' H'` from a quadruple. The quadruple is
/// verified first and the result is checked to be a Hopf algebra map.
pub fn assemble_psi(q: &Quadruple, mp: &MatchedPair, mp2: &MatchedPair) -> Result<LinMap> {
    let e = Arc::new(bicrossed_product(mp)?);
    let e2 = Arc::new(bicrossed_product(mp2)?);
    assemble_between(q, mp, mp2, &e, &e2)
}

pub(crate) fn assemble_between(
    q: &Quadruple,
    mp: &MatchedPair,
    mp2: &MatchedPair,
    e: &Arc<HopfAlgebra>,
    e2: &Arc<HopfAlgebra>,
) -> Result<LinMap> {
    let report = verify_quadruple(q, mp, mp2)?;
    if let Some((c, idx)) = report.first_failure() {
        return Err(Error::AxiomViolation(format!("quadruple: {c} fails at {idx:?}")));
    }
    let psi = LinMap::new(e.clone(), e2.clone(), Ctx::new(q, mp, mp2).psi_matrix())?;
    if !psi.is_hopf_map() {
        return Err(Error::AxiomViolation(
            "assembled map is not a Hopf algebra map".into(),
        ));
    }
    Ok(psi)
}

/// `(Id ⊗ ε)` and `(ε ⊗ Id)` applied to a vector of `A' ⊗ H'`.
pub(crate) fn split(mp2: &MatchedPair, w: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
    let (a2, h2) = (mp2.a(), mp2.h());
    let dh = h2.dim();
    let field = a2.field();
    let mut x = linalg::zeros(field, a2.dim());
    let mut y = linalg::zeros(field, dh);
    for (k, c) in linalg::support(w) {
        let (i, j) = (k / dh, k % dh);
        x[i] += &(c * &h2.counit()[j]);
        y[j] += &(c * &a2.counit()[i]);
    }
    (x, y)
}

/// Reads `u, p` off `a ↦ ψ(a ⋈ 1)` and `r, v` off `h ↦ ψ(1 ⋈ h)`.
pub fn decompose_psi(psi: &LinMap, mp: &MatchedPair, mp2: &MatchedPair) -> Result<Quadruple> {
    let (a, h) = (mp.a(), mp.h());
    let (a2, h2) = (mp2.a(), mp2.h());
    if psi.dom().dim() != a.dim() * h.dim() || psi.cod().dim() != a2.dim() * h2.dim() {
        return Err(Error::Dimension("ψ does not fit the two bicrossed products".into()));
    }
    if !psi.is_hopf_map() {
        return Err(Error::Precondition("ψ is not a Hopf algebra map".into()));
    }
    let field = a.field();
    let (mut u, mut p, mut r, mut v) = (vec![], vec![], vec![], vec![]);
    for i in 0..a.dim() {
        let (x, y) = split(mp2, &psi.apply(&linalg::kron(&a.basis(i), &h.unit(), field)));
        u.push(x);
        p.push(y);
    }
    for j in 0..h.dim() {
        let (x, y) = split(mp2, &psi.apply(&linalg::kron(&a.unit(), &h.basis(j), field)));
        r.push(x);
        v.push(y);
    }
    Ok(Quadruple {
        u: LinMap::from_columns(a.clone(), a2.clone(), &u)?,
        p: LinMap::from_columns(a.clone(), h2.clone(), &p)?,
        r: LinMap::from_columns(h.clone(), a2.clone(), &r)?,
        v: LinMap::from_columns(h.clone(), h2.clone(), &v)?,
    })
}
