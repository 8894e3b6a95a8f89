use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::HopfAlgebra;
use crate::linalg::{self, Matrix};
use crate::linmap::{convolve, unitary_coalgebra_maps, unitary_cocentral_maps, Budget, LinMap};
use crate::products::{bicrossed_product, MatchedPair};

use super::enumerate::{enumerate_hopf_isomorphisms, enumerate_hopf_maps};

/// `r : H → A` and `v : H → H'` describing a Hopf map
/// `ψ(a ⋈ h) = a r(h1) ⋈' v(h2)` that fixes `A`.
#[derive(Clone, Debug, PartialEq)]
pub struct StabilizingPair {
    pub r: LinMap,
    pub v: LinMap,
}

impl StabilizingPair {
    /// `r = ε 1`, `v = Id`.
    pub fn identity(mp: &MatchedPair) -> Result<Self> {
        Ok(StabilizingPair {
            r: LinMap::trivial(mp.h().clone(), mp.a().clone())?,
            v: LinMap::identity(mp.h().clone()),
        })
    }

    /// The pair of `ψ' ∘ ψ`, where `self` gives `ψ` and `next` gives `ψ'`:
    /// `r = r * (r' ∘ v)`, `v = v' ∘ v`.
    pub fn then(&self, next: &StabilizingPair) -> Result<StabilizingPair> {
        Ok(StabilizingPair {
            r: convolve(&self.r, &next.r.compose(&self.v)?)?,
            v: next.v.compose(&self.v)?,
        })
    }

    /// The pair of `ψ⁻¹`: `(S_A ∘ r ∘ v⁻¹, v⁻¹)`.
    pub fn inverse(&self) -> Result<StabilizingPair> {
        let vinv = self
            .v
            .inverse()
            .ok_or_else(|| Error::Singular("v is not bijective".into()))?;
        let s = LinMap::antipode(self.r.cod().clone());
        Ok(StabilizingPair {
            r: s.compose(&self.r)?.compose(&vinv)?,
            v: vinv,
        })
    }
}

/// The conditions on a [`StabilizingPair`], in checking order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StabCondition {
    /// `r(h1) ⊗ v(h2) = r(h2) ⊗ v(h1)`
    RvSymmetric,
    /// `r(hg) = r(h1) (v(h2) ▷' r(g))`
    RTwisted,
    /// `v(hg) = (v(h) ◁' r(g1)) v(g2)`
    VTwisted,
    /// `h ▷ a = r(h1) (v(h2) ▷' a1) S(r(h3 ◁ a2))`
    LeftAction,
    /// `v(h ◁ a) = v(h) ◁' a`
    RightLinear,
}

impl StabCondition {
    pub const ALL: [StabCondition; 5] = [
        StabCondition::RvSymmetric,
        StabCondition::RTwisted,
        StabCondition::VTwisted,
        StabCondition::LeftAction,
        StabCondition::RightLinear,
    ];

    pub fn formula(self) -> &'static str {
        match self {
            StabCondition::RvSymmetric => "r(h1) ⊗ v(h2) = r(h2) ⊗ v(h1)",
            StabCondition::RTwisted => "r(hg) = r(h1) (v(h2) ▷' r(g))",
            StabCondition::VTwisted => "v(hg) = (v(h) ◁' r(g1)) v(g2)",
            StabCondition::LeftAction => "h ▷ a = r(h1) (v(h2) ▷' a1) S(r(h3 ◁ a2))",
            StabCondition::RightLinear => "v(h ◁ a) = v(h) ◁' a",
        }
    }
}

impl fmt::Display for StabCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.formula())
    }
}

/// Outcome of [`verify_stabilizing_pair`].
#[derive(Clone, Debug)]
pub struct StabilizingReport {
    /// First failing condition with its basis indices.
    pub failure: Option<(StabCondition, Vec<usize>)>,
    pub is_morphism: bool,
    pub is_isomorphism: bool,
    /// `ψ(a ⋈ h) = a r(h1) ⋈' v(h2)` when `is_morphism`.
    pub psi: Option<LinMap>,
    /// `ψ⁻¹(a ⋈' h') = a (S r v⁻¹)(h'1) ⋈ v⁻¹(h'2)` when `is_isomorphism`.
    pub inverse: Option<LinMap>,
}

fn image(cols: &[Vec<Scalar>], x: &[Scalar], field: FieldSpec, dim: usize) -> Vec<Scalar> {
    let mut out = linalg::zeros(field, dim);
    for (k, c) in linalg::support(x) {
        linalg::axpy(&mut out, c, &cols[k]);
    }
    out
}

fn columns(f: &LinMap) -> Vec<Vec<Scalar>> {
    (0..f.dom().dim()).map(|j| f.column(j)).collect()
}

/// `(r, v)` as column lists, with `S_A ∘ r` and, when it exists, `v⁻¹`.
struct Pair<'a> {
    mp: &'a MatchedPair,
    mp2: &'a MatchedPair,
    r: Vec<Vec<Scalar>>,
    sr: Vec<Vec<Scalar>>,
    v: Vec<Vec<Scalar>>,
    vinv: Option<Matrix>,
    field: FieldSpec,
}

impl<'a> Pair<'a> {
    fn new(mp: &'a MatchedPair, mp2: &'a MatchedPair, r: &LinMap, v: &LinMap) -> Self {
        let a = mp.a();
        let r = columns(r);
        let sr = r.iter().map(|c| a.s(c)).collect();
        Pair {
            mp,
            mp2,
            r,
            sr,
            v: columns(v),
            vinv: v.matrix().inverse(),
            field: a.field(),
        }
    }

    fn a(&self) -> &HopfAlgebra {
        self.mp.a()
    }

    fn h(&self) -> &HopfAlgebra {
        self.mp.h()
    }

    fn r_of(&self, x: &[Scalar]) -> Vec<Scalar> {
        image(&self.r, x, self.field, self.a().dim())
    }

    fn sr_of(&self, x: &[Scalar]) -> Vec<Scalar> {
        image(&self.sr, x, self.field, self.a().dim())
    }

    fn v_of(&self, x: &[Scalar]) -> Vec<Scalar> {
        image(&self.v, x, self.field, self.mp2.h().dim())
    }

    fn rv_symmetric(&self, i: usize) -> bool {
        let n = self.a().dim() * self.mp2.h().dim();
        let mut l = linalg::zeros(self.field, n);
        let mut r = linalg::zeros(self.field, n);
        for (j, k, c) in self.h().comul_basis(i) {
            linalg::axpy(&mut l, c, &linalg::kron(&self.r[*j], &self.v[*k], self.field));
            linalg::axpy(&mut r, c, &linalg::kron(&self.r[*k], &self.v[*j], self.field));
        }
        l == r
    }

    /// `r(hg) = r(h1) (v(h2) ▷' r(g))`
    fn r_twisted(&self, i: usize, j: usize) -> bool {
        let (a, h) = (self.a(), self.h());
        let lhs = self.r_of(&h.mul(&h.basis(i), &h.basis(j)));
        let mut rhs = linalg::zeros(self.field, a.dim());
        for (x, y, c) in h.comul_basis(i) {
            let t = a.mul(&self.r[*x], &self.mp2.act_left(&self.v[*y], &self.r[j]));
            linalg::axpy(&mut rhs, c, &t);
        }
        lhs == rhs
    }

    /// `v(hg) = (v(h) ◁' r(g1)) v(g2)`
    fn v_twisted(&self, i: usize, j: usize) -> bool {
        let (h, h2) = (self.h(), self.mp2.h());
        let lhs = self.v_of(&h.mul(&h.basis(i), &h.basis(j)));
        let mut rhs = linalg::zeros(self.field, h2.dim());
        for (x, y, c) in h.comul_basis(j) {
            let t = h2.mul(&self.mp2.act_right(&self.v[i], &self.r[*x]), &self.v[*y]);
            linalg::axpy(&mut rhs, c, &t);
        }
        lhs == rhs
    }

    /// `h ▷ a = r(h1) (v(h2) ▷' a1) S(r(h3 ◁ a2))`
    fn left_action(&self, hi: usize, aj: usize) -> bool {
        let (a, h) = (self.a(), self.h());
        let mut rhs = linalg::zeros(self.field, a.dim());
        for (hl, c) in h.sweedler(hi, 3) {
            for (a1, a2, d) in a.comul_basis(aj) {
                let mid = self.mp2.act_left(&self.v[hl[1]], &a.basis(*a1));
                let last = self.sr_of(self.mp.right(hl[2], *a2));
                let t = a.mul(&a.mul(&self.r[hl[0]], &mid), &last);
                linalg::axpy(&mut rhs, &(&c * d), &t);
            }
        }
        self.mp.left(hi, aj) == rhs.as_slice()
    }

    /// `v(h ◁ a) = v(h) ◁' a`
    fn right_linear(&self, hi: usize, aj: usize) -> bool {
        self.v_of(self.mp.right(hi, aj)) == self.mp2.act_right(&self.v[hi], &self.a().basis(aj))
    }

    /// `h ◁ a = v⁻¹(v(h) ◁' a)`; needs `v⁻¹`.
    fn right_implemented(&self, hi: usize, aj: usize) -> bool {
        let vinv = self.vinv.as_ref().expect("v is invertible");
        let w = self.mp2.act_right(&self.v[hi], &self.a().basis(aj));
        self.mp.right(hi, aj) == vinv.mul_vec(&w).as_slice()
    }

    /// `h ▷ a = r(h1) (v(h2) ▷' a1) (S r v⁻¹)(v(h3) ◁' a2)`; needs `v⁻¹`.
    fn left_implemented(&self, hi: usize, aj: usize) -> bool {
        let vinv = self.vinv.as_ref().expect("v is invertible");
        let (a, h) = (self.a(), self.h());
        let mut rhs = linalg::zeros(self.field, a.dim());
        for (hl, c) in h.sweedler(hi, 3) {
            for (a1, a2, d) in a.comul_basis(aj) {
                let mid = self.mp2.act_left(&self.v[hl[1]], &a.basis(*a1));
                let w = self.mp2.act_right(&self.v[hl[2]], &a.basis(*a2));
                let last = self.sr_of(&vinv.mul_vec(&w));
                let t = a.mul(&a.mul(&self.r[hl[0]], &mid), &last);
                linalg::axpy(&mut rhs, &(&c * d), &t);
            }
        }
        self.mp.left(hi, aj) == rhs.as_slice()
    }

    /// `h ▷ a = r(h1) (v(h2) ▷' a) S(r(h3))`
    fn left_smash_implemented(&self, hi: usize, aj: usize) -> bool {
        let (a, h) = (self.a(), self.h());
        let mut rhs = linalg::zeros(self.field, a.dim());
        for (hl, c) in h.sweedler(hi, 3) {
            let mid = self.mp2.act_left(&self.v[hl[1]], &a.basis(aj));
            let t = a.mul(&a.mul(&self.r[hl[0]], &mid), &self.sr[hl[2]]);
            linalg::axpy(&mut rhs, &c, &t);
        }
        self.mp.left(hi, aj) == rhs.as_slice()
    }

    fn all_h(&self, f: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
        (0..self.h().dim()).find(|&i| !f(i)).map(|i| vec![i])
    }

    fn all_hh(&self, f: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
        let dh = self.h().dim();
        (0..dh * dh).find(|&k| !f(k / dh, k % dh)).map(|k| vec![k / dh, k % dh])
    }

    fn all_ha(&self, f: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
        let da = self.a().dim();
        (0..self.h().dim() * da)
            .find(|&k| !f(k / da, k % da))
            .map(|k| vec![k / da, k % da])
    }

    fn check(&self, c: StabCondition) -> Option<Vec<usize>> {
        match c {
            StabCondition::RvSymmetric => self.all_h(|i| self.rv_symmetric(i)),
            StabCondition::RTwisted => self.all_hh(|i, j| self.r_twisted(i, j)),
            StabCondition::VTwisted => self.all_hh(|i, j| self.v_twisted(i, j)),
            StabCondition::LeftAction => self.all_ha(|i, j| self.left_action(i, j)),
            StabCondition::RightLinear => self.all_ha(|i, j| self.right_linear(i, j)),
        }
    }

    /// `ψ(a ⋈ h) = a r(h1) ⋈' v(h2)`
    fn psi_matrix(&self) -> Matrix {
        let (a, h) = (self.a(), self.h());
        let n2 = a.dim() * self.mp2.h().dim();
        let mut cols = Vec::with_capacity(a.dim() * h.dim());
        for ai in 0..a.dim() {
            for hj in 0..h.dim() {
                let mut col = linalg::zeros(self.field, n2);
                for (h1, h2, c) in h.comul_basis(hj) {
                    let x = a.mul(&a.basis(ai), &self.r[*h1]);
                    linalg::axpy(&mut col, c, &linalg::kron(&x, &self.v[*h2], self.field));
                }
                cols.push(col);
            }
        }
        Matrix::from_columns(self.field, n2, &cols)
    }

    /// `ψ⁻¹(a ⋈' h') = a (S r v⁻¹)(h'1) ⋈ v⁻¹(h'2)`
    fn inverse_matrix(&self) -> Matrix {
        let vinv = self.vinv.as_ref().expect("v is invertible");
        let (a, h2) = (self.a(), self.mp2.h());
        let n = a.dim() * self.h().dim();
        let mut cols = Vec::with_capacity(a.dim() * h2.dim());
        for ai in 0..a.dim() {
            for hj in 0..h2.dim() {
                let mut col = linalg::zeros(self.field, n);
                for (h1, h2i, c) in h2.comul_basis(hj) {
                    let x = a.mul(&a.basis(ai), &self.sr_of(&vinv.column(*h1)));
                    linalg::axpy(&mut col, c, &linalg::kron(&x, &vinv.column(*h2i), self.field));
                }
                cols.push(col);
            }
        }
        Matrix::from_columns(self.field, n, &cols)
    }
}

fn check_pair_shapes(sp: &StabilizingPair, mp: &MatchedPair, mp2: &MatchedPair) -> Result<()> {
    if !mp.a().same_structure(mp2.a()) {
        return Err(Error::Dimension("the two matched pairs must share A".into()));
    }
    if !sp.r.dom().same_structure(mp.h()) || !sp.r.cod().same_structure(mp.a()) {
        return Err(Error::Dimension("r must map H to A".into()));
    }
    if !sp.v.dom().same_structure(mp.h()) || !sp.v.cod().same_structure(mp2.h()) {
        return Err(Error::Dimension("v must map H to H'".into()));
    }
    for (name, f) in [("r", &sp.r), ("v", &sp.v)] {
        if !f.is_unitary() || !f.is_coalgebra_map() {
            return Err(Error::Precondition(format!("{name} is not a unitary coalgebra map")));
        }
    }
    Ok(())
}

/// Checks the conditions for `ψ(a ⋈ h) = a r(h1) ⋈' v(h2)` to be a Hopf map
/// `A ⋈ H → A ⋈' H'`. When they hold, `ψ` is built and checked; when `v` is
/// bijective, the explicit inverse is built and checked as well.
pub fn verify_stabilizing_pair(
    sp: &StabilizingPair,
    mp: &MatchedPair,
    mp2: &MatchedPair,
) -> Result<StabilizingReport> {
    check_pair_shapes(sp, mp, mp2)?;
    let pair = Pair::new(mp, mp2, &sp.r, &sp.v);
    let failure = StabCondition::ALL
        .iter()
        .find_map(|&c| pair.check(c).map(|idx| (c, idx)));
    if failure.is_some() {
        return Ok(StabilizingReport {
            failure,
            is_morphism: false,
            is_isomorphism: false,
            psi: None,
            inverse: None,
        });
    }
    let e = Arc::new(bicrossed_product(mp)?);
    let e2 = Arc::new(bicrossed_product(mp2)?);
    let psi = LinMap::new(e.clone(), e2.clone(), pair.psi_matrix())?;
    if !psi.is_hopf_map() {
        return Err(Error::AxiomViolation(
            "a r(h1) ⋈' v(h2) is not a Hopf algebra map although the conditions hold".into(),
        ));
    }
    let mut inverse = None;
    if sp.v.is_bijective() {
        let inv = LinMap::new(e2, e.clone(), pair.inverse_matrix())?;
        let id = LinMap::identity(e.clone());
        let back = inv.compose(&psi)?;
        let forth = psi.compose(&inv)?;
        if back.matrix() != id.matrix() || forth.matrix() != &Matrix::identity(e.field(), forth.dom().dim()) {
            return Err(Error::AxiomViolation("the explicit inverse does not invert ψ".into()));
        }
        inverse = Some(inv);
    }
    Ok(StabilizingReport {
        failure: None,
        is_morphism: true,
        is_isomorphism: inverse.is_some(),
        psi: Some(psi),
        inverse,
    })
}

fn bijective_coalgebra_maps(h: &Arc<HopfAlgebra>, budget: &Budget) -> Result<Vec<LinMap>> {
    let mut vs = Vec::new();
    for cols in unitary_coalgebra_maps(h, h, budget)? {
        let v = LinMap::from_columns(h.clone(), h.clone(), &cols)?;
        if v.is_bijective() {
            vs.push(v);
        }
    }
    vs.sort_by_key(columns);
    Ok(vs)
}

fn confirm_isomorphism(sp: &StabilizingPair, mp: &MatchedPair, mp2: &MatchedPair) -> Result<()> {
    let report = verify_stabilizing_pair(sp, mp, mp2)?;
    if !report.is_isomorphism {
        return Err(Error::AxiomViolation(format!(
            "witness does not give a stabilizing isomorphism: {:?}",
            report.failure
        )));
    }
    Ok(())
}

/// Searches unitary cocentral `r : H → A` and unitary coalgebra
/// automorphisms `v` of `H` for a pair implementing the actions of `mp`
/// from those of `mp2`:
///
/// * `r(hg) = r(h1) (v(h2) ▷' r(g))`, `v(hg) = (v(h) ◁' r(g1)) v(g2)`,
/// * `h ◁ a = v⁻¹(v(h) ◁' a)`,
/// * `h ▷ a = r(h1) (v(h2) ▷' a1) (S r v⁻¹)(v(h3) ◁' a2)`.
///
/// A witness is re-verified as a stabilizing isomorphism `A ⋈ H → A ⋈' H`.
/// `None` means the whole family was exhausted.
pub fn check_cohomologous(
    mp: &MatchedPair,
    mp2: &MatchedPair,
    budget: &Budget,
) -> Result<Option<StabilizingPair>> {
    if !mp.a().same_structure(mp2.a()) || !mp.h().same_structure(mp2.h()) {
        return Err(Error::Precondition("cohomology compares pairs on the same A and H".into()));
    }
    let (a, h) = (mp.a(), mp.h());
    let rs = unitary_cocentral_maps(h, a, budget)?;
    let vs = bijective_coalgebra_maps(h, budget)?;
    let (da, dh) = (a.dim(), h.dim());
    for v in &vs {
        let probe = Pair::new(mp, mp2, &rs[0], v);
        if probe.all_ha(|i, j| probe.right_implemented(i, j)).is_some() {
            continue;
        }
        for r in &rs {
            budget.charge(1)?;
            let pair = Pair::new(mp, mp2, r, v);
            let ok = pair.all_hh(|i, j| pair.r_twisted(i, j)).is_none()
                && pair.all_hh(|i, j| pair.v_twisted(i, j)).is_none()
                && (0..dh).all(|i| (0..da).all(|j| pair.left_implemented(i, j)));
            if ok {
                let sp = StabilizingPair { r: r.clone(), v: v.clone() };
                confirm_isomorphism(&sp, mp, mp2)?;
                return Ok(Some(sp));
            }
        }
    }
    Ok(None)
}

/// For `◁` trivial, a unitary cocentral Hopf map `r : H → A` with
/// `h ▷ a = r(h1) a S(r(h2))`; then `A ⋈ H ≅ A ⊗ H` fixing `A`.
/// `None` when `◁` is nontrivial or no such `r` exists.
pub fn is_coboundary(mp: &MatchedPair, budget: &Budget) -> Result<Option<LinMap>> {
    if !mp.is_right_trivial() {
        return Ok(None);
    }
    let (a, h) = (mp.a(), mp.h());
    let field = a.field();
    for r in unitary_cocentral_maps(h, a, budget)? {
        budget.charge(1)?;
        if !r.is_algebra_map() {
            continue;
        }
        let rc = columns(&r);
        let ok = (0..h.dim()).all(|hi| {
            (0..a.dim()).all(|aj| {
                let mut rhs = linalg::zeros(field, a.dim());
                for (h1, h2, c) in h.comul_basis(hi) {
                    let t = a.mul(&a.mul(&rc[*h1], &a.basis(aj)), &a.s(&rc[*h2]));
                    linalg::axpy(&mut rhs, c, &t);
                }
                mp.left(hi, aj) == rhs.as_slice()
            })
        });
        if ok {
            let trivial = MatchedPair::trivial(a.clone(), h.clone())?;
            let sp = StabilizingPair {
                r: r.clone(),
                v: LinMap::identity(h.clone()),
            };
            confirm_isomorphism(&sp, mp, &trivial)?;
            return Ok(Some(r));
        }
    }
    Ok(None)
}

/// Decides whether `A ⋈ H ≅ A #' H'` by an isomorphism fixing `A`, where
/// `smash` carries the left action of `H'` on `A` and a trivial right
/// action. A witness has `◁` trivial, `v : H → H'` a Hopf isomorphism and
/// `r` unitary cocentral with
///
/// * `h ▷ a = r(h1) (v(h2) ▷' a) S(r(h3))`,
/// * `r(hg) = r(h1) (v(h2) ▷' r(g))`.
pub fn check_schur_zassenhaus(
    mp: &MatchedPair,
    smash: &MatchedPair,
    budget: &Budget,
) -> Result<Option<StabilizingPair>> {
    if !mp.a().same_structure(smash.a()) {
        return Err(Error::Precondition("both products must share A".into()));
    }
    if !smash.is_right_trivial() || !smash.is_valid() {
        return Err(Error::Precondition(
            "the smash data must be a valid matched pair with trivial right action".into(),
        ));
    }
    if !mp.is_right_trivial() {
        return Ok(None);
    }
    let (a, h) = (mp.a(), mp.h());
    let rs = unitary_cocentral_maps(h, a, budget)?;
    let vs = enumerate_hopf_isomorphisms(h, smash.h(), budget)?;
    for v in &vs {
        for r in &rs {
            budget.charge(1)?;
            let pair = Pair::new(mp, smash, r, v);
            let ok = pair.all_hh(|i, j| pair.r_twisted(i, j)).is_none()
                && pair.all_ha(|i, j| pair.left_smash_implemented(i, j)).is_none();
            if ok {
                let sp = StabilizingPair { r: r.clone(), v: v.clone() };
                confirm_isomorphism(&sp, mp, smash)?;
                return Ok(Some(sp));
            }
        }
    }
    Ok(None)
}

/// Every pair `(r, v)` giving a left `A`-linear Hopf isomorphism
/// `A ⊗ H → A ⊗ H'`, `a ⊗ h ↦ a r(h1) ⊗ v(h2)`: `v` a Hopf isomorphism and
/// `r` a unitary cocentral Hopf map into the center of `A`. Each is
/// re-verified.
pub fn tensor_decomposition_witnesses(
    a: &Arc<HopfAlgebra>,
    h: &Arc<HopfAlgebra>,
    h2: &Arc<HopfAlgebra>,
    budget: &Budget,
) -> Result<Vec<StabilizingPair>> {
    if h.dim() != h2.dim() || a.field() != h.field() || h.field() != h2.field() {
        return Ok(Vec::new());
    }
    let vs = enumerate_hopf_isomorphisms(h, h2, budget)?;
    if vs.is_empty() {
        return Ok(Vec::new());
    }
    let central = |x: &[Scalar]| (0..a.dim()).all(|j| a.mul(x, &a.basis(j)) == a.mul(&a.basis(j), x));
    let rs: Vec<LinMap> = enumerate_hopf_maps(h, a, budget)?
        .into_iter()
        .filter(|r| r.is_cocentral() && (0..h.dim()).all(|i| central(&r.column(i))))
        .collect();
    let mp = MatchedPair::trivial(a.clone(), h.clone())?;
    let mp2 = MatchedPair::trivial(a.clone(), h2.clone())?;
    let mut out = Vec::new();
    for v in &vs {
        for r in &rs {
            let sp = StabilizingPair { r: r.clone(), v: v.clone() };
            confirm_isomorphism(&sp, &mp, &mp2)?;
            out.push(sp);
        }
    }
    Ok(out)
}

/// The first of [`tensor_decomposition_witnesses`].
pub fn check_tensor_decomposition(
    a: &Arc<HopfAlgebra>,
    h: &Arc<HopfAlgebra>,
    h2: &Arc<HopfAlgebra>,
    budget: &Budget,
) -> Result<Option<StabilizingPair>> {
    Ok(tensor_decomposition_witnesses(a, h, h2, budget)?.into_iter().next())
}
