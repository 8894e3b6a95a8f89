//! Matched pairs `(H₄, k[G])` for a finite group `G`, found by search.
//!
//! A grouplike `h` acts on `H₄` by `h ▷ -`, a unitary coalgebra
//! endomorphism of `H₄`, and `h ◁ -` is a coalgebra map `H₄ → k[G]` with
//! `1 ↦ h`. The left actions of a generating set are drawn from the unitary
//! coalgebra endomorphisms, extended to `G` and kept when they form a
//! module. For every group element the right action is drawn from the
//! coalgebra maps built on the grouplike/skew-primitive strata and pruned
//! by the symmetry condition at that element. Every surviving table pair
//! is then checked against all matched-pair axioms.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::group::FiniteGroupTable;
use crate::hopf::{group_algebra, sweedler_h4, tensor_hopf, HopfAlgebra};
use crate::linalg::{self, Matrix};
use crate::linmap::{skew_primitives, strata, unitary_coalgebra_maps, Budget, LinMap, Stratum};
use crate::morphisms::enumerate_morphisms;
use crate::products::MatchedPair;

use super::h4n::require_odd_characteristic;

/// Outcome of [`matched_pairs_h4_group`].
#[derive(Clone, Debug)]
pub struct PairSearch {
    pub pairs: Vec<MatchedPair>,
    /// Left actions of the whole group that are modules.
    pub left_actions: usize,
    /// Complete table pairs handed to the axiom check.
    pub tables_checked: usize,
}

/// A small generating set, chosen greedily in index order.
fn generators(g: &FiniteGroupTable) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = vec![g.identity()];
    for x in 0..g.order() {
        if span.contains(&x) {
            continue;
        }
        gens.push(x);
        let mut i = 0;
        while i < span.len() {
            for &s in &gens {
                let y = g.mul(span[i], s);
                if !span.contains(&y) {
                    span.push(y);
                }
            }
            i += 1;
        }
    }
    gens
}

fn mat_pow(m: &Matrix, e: usize) -> Matrix {
    let mut out = Matrix::identity(m.field(), m.rows());
    for _ in 0..e {
        out = out.mul(m).expect("square");
    }
    out
}

/// Extends images of the generators to a map `G → End(A)` with
/// `ρ(xs) = ρ(x)ρ(s)`; `None` unless the result is multiplicative.
fn extend_action(g: &FiniteGroupTable, gens: &[usize], images: &[&Matrix], dim: usize, field: FieldSpec) -> Option<Vec<Matrix>> {
    let mut rho: Vec<Option<Matrix>> = vec![None; g.order()];
    rho[g.identity()] = Some(Matrix::identity(field, dim));
    let mut queue = vec![g.identity()];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for (s, m) in gens.iter().zip(images) {
            let y = g.mul(x, *s);
            let img = rho[x].as_ref().unwrap().mul(m).expect("square");
            match &rho[y] {
                Some(old) if *old != img => return None,
                Some(_) => {}
                None => {
                    rho[y] = Some(img);
                    queue.push(y);
                }
            }
        }
    }
    let rho: Vec<Matrix> = rho.into_iter().collect::<Option<_>>()?;
    for x in 0..g.order() {
        for y in 0..g.order() {
            if rho[x].mul(&rho[y]).ok()? != rho[g.mul(x, y)] {
                return None;
            }
        }
    }
    Some(rho)
}

/// All vectors in the span of `basis` over a finite field.
fn span_elements(basis: &[Vec<Scalar>], len: usize, field: FieldSpec) -> Result<Vec<Vec<Scalar>>> {
    if basis.is_empty() {
        return Ok(vec![linalg::zeros(field, len)]);
    }
    let elems = field.elements().ok_or_else(|| {
        Error::InfiniteFamily(format!("skew-primitive space of dimension {} over {field}", basis.len()))
    })?;
    let mut out = Vec::new();
    let mut digits = vec![0usize; basis.len()];
    loop {
        let mut v = linalg::zeros(field, len);
        for (d, b) in digits.iter().zip(basis) {
            linalg::axpy(&mut v, &elems[*d], b);
        }
        out.push(v);
        let mut k = 0;
        loop {
            if k == digits.len() {
                return Ok(out);
            }
            digits[k] += 1;
            if digits[k] < elems.len() {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
    }
}

/// Every element of `P_{x,y}` for grouplike basis vectors `x, y` of `k[G]`.
struct SkewSpans {
    index: HashMap<Vec<Scalar>, usize>,
    spans: Vec<Vec<Result<Vec<Vec<Scalar>>>>>,
}

impl SkewSpans {
    fn new(kg: &HopfAlgebra) -> Result<Self> {
        let gl = strata(kg)
            .ok_or_else(|| Error::StrataUnavailable("group algebra".into()))?
            .grouplikes();
        let index = gl.iter().enumerate().map(|(k, &i)| (kg.basis(i), k)).collect();
        let spans = gl
            .iter()
            .map(|&i| {
                gl.iter()
                    .map(|&j| {
                        let basis = skew_primitives(kg, &kg.basis(i), &kg.basis(j))?;
                        span_elements(&basis, kg.dim(), kg.field())
                    })
                    .collect()
            })
            .collect();
        Ok(SkewSpans { index, spans })
    }

    fn get(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Vec<Scalar>>> {
        match (self.index.get(x), self.index.get(y)) {
            (Some(&i), Some(&j)) => self.spans[i][j].clone(),
            _ => Err(Error::AxiomViolation("right action sent a grouplike outside the basis".into())),
        }
    }
}

/// Right actions `h ◁ - : A → k[G]` of the grouplike basis element `h`
/// that are coalgebra maps with `1 ↦ h` and satisfy
/// `h ◁ a1 ⊗ h ▷ a2 = h ◁ a2 ⊗ h ▷ a1` for the given `h ▷ -`.
fn right_candidates(
    a: &HopfAlgebra,
    kg: &HopfAlgebra,
    spans: &SkewSpans,
    hi: usize,
    left: &Matrix,
    budget: &Budget,
) -> Result<Vec<Vec<Vec<Scalar>>>> {
    let st = strata(a).ok_or_else(|| Error::StrataUnavailable("first factor".into()))?;
    let field = a.field();
    let da = a.dim();
    let mut order = st.grouplikes();
    order.retain(|&i| i != st.unit);
    order.insert(0, st.unit);
    order.extend((0..da).filter(|&i| st.kinds[i] != Stratum::Grouplike));
    let pos: Vec<usize> = (0..da).map(|i| order.iter().position(|&o| o == i).unwrap()).collect();
    // the symmetry condition at a_j is checkable once all of Δ(a_j) is assigned
    let ready: Vec<usize> = (0..da)
        .map(|j| {
            a.comul_basis(j)
                .iter()
                .flat_map(|(x, y, _)| [pos[*x], pos[*y]])
                .chain([pos[j]])
                .max()
                .unwrap()
        })
        .collect();
    let symmetric = |sig: &[Option<Vec<Scalar>>], j: usize| {
        let dk = kg.dim();
        let mut lhs = linalg::zeros(field, dk * da);
        let mut rhs = linalg::zeros(field, dk * da);
        for (a1, a2, c) in a.comul_basis(j) {
            let (s1, s2) = (sig[*a1].as_ref().unwrap(), sig[*a2].as_ref().unwrap());
            linalg::axpy(&mut lhs, c, &linalg::kron(s1, &left.column(*a2), field));
            linalg::axpy(&mut rhs, c, &linalg::kron(s2, &left.column(*a1), field));
        }
        lhs == rhs
    };
    let kg_grouplikes: Vec<Vec<Scalar>> = strata(kg)
        .ok_or_else(|| Error::StrataUnavailable("group algebra".into()))?
        .grouplikes()
        .into_iter()
        .map(|i| kg.basis(i))
        .collect();
    let mut out = Vec::new();
    let mut sig: Vec<Option<Vec<Scalar>>> = vec![None; da];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        order: &[usize],
        a: &HopfAlgebra,
        kg: &HopfAlgebra,
        kinds: &[Stratum],
        grouplikes: &[Vec<Scalar>],
        spans: &SkewSpans,
        hi: usize,
        ready: &[usize],
        symmetric: &dyn Fn(&[Option<Vec<Scalar>>], usize) -> bool,
        sig: &mut Vec<Option<Vec<Scalar>>>,
        out: &mut Vec<Vec<Vec<Scalar>>>,
        budget: &Budget,
    ) -> Result<()> {
        if k == order.len() {
            out.push(sig.iter().map(|s| s.clone().unwrap()).collect());
            return Ok(());
        }
        let j = order[k];
        let cands = if k == 0 {
            vec![kg.basis(hi)]
        } else {
            match kinds[j] {
                Stratum::Grouplike => grouplikes.to_vec(),
                Stratum::SkewPrimitive { left, right } => {
                    let (l, r) = (sig[left].as_ref().unwrap(), sig[right].as_ref().unwrap());
                    spans.get(l, r)?
                }
            }
        };
        for c in cands {
            budget.charge(1)?;
            sig[j] = Some(c);
            let ok = (0..a.dim()).filter(|&i| ready[i] == k).all(|i| symmetric(sig, i));
            if ok {
                rec(k + 1, order, a, kg, kinds, grouplikes, spans, hi, ready, symmetric, sig, out, budget)?;
            }
            sig[j] = None;
        }
        Ok(())
    }
    rec(0, &order, a, kg, &st.kinds, &kg_grouplikes, spans, hi, &ready, &symmetric, &mut sig, &mut out, budget)?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// `h ▷ (ab) = (h ▷ a1)((h ◁ a2) ▷ b)` for a grouplike `h`, given all left
/// actions and the right action of `h` alone.
fn left_twisted_at(a: &HopfAlgebra, rho: &[Matrix], hi: usize, sig: &[Vec<Scalar>]) -> bool {
    let field = a.field();
    let da = a.dim();
    let act = |v: &[Scalar], l: usize| {
        let mut out = linalg::zeros(field, da);
        for (k, c) in linalg::support(v) {
            linalg::axpy(&mut out, c, &rho[k].column(l));
        }
        out
    };
    (0..da).all(|j| {
        (0..da).all(|l| {
            let lhs = rho[hi].mul_vec(&a.mul(&a.basis(j), &a.basis(l)));
            let mut rhs = linalg::zeros(field, da);
            for (a1, a2, c) in a.comul_basis(j) {
                linalg::axpy(&mut rhs, c, &a.mul(&rho[hi].column(*a1), &act(&sig[*a2], l)));
            }
            lhs == rhs
        })
    })
}

/// All matched pairs `(H₄, k[G])` over a finite field of odd
/// characteristic, sorted by their action tables.
pub fn matched_pairs_h4_group(g: &FiniteGroupTable, field: FieldSpec, budget: &Budget) -> Result<PairSearch> {
    require_odd_characteristic(field)?;
    let a = Arc::new(sweedler_h4(field));
    let kg = Arc::new(group_algebra(g, field));
    let da = a.dim();
    let gens = generators(g);
    let endos: Vec<Matrix> = unitary_coalgebra_maps(&a, &a, budget)?
        .iter()
        .map(|cols| Matrix::from_columns(field, da, cols))
        .collect();
    let spans = SkewSpans::new(&kg)?;
    let id = Matrix::identity(field, da);
    let per_gen: Vec<Vec<&Matrix>> = gens
        .iter()
        .map(|&s| endos.iter().filter(|m| mat_pow(m, g.element_order(s)) == id).collect())
        .collect();
    // all choices of generator images
    let mut combos: Vec<Vec<&Matrix>> = vec![vec![]];
    for cands in &per_gen {
        budget.charge((combos.len() * cands.len()) as u64)?;
        combos = combos
            .iter()
            .flat_map(|c| cands.iter().map(move |m| [c.clone(), vec![*m]].concat()))
            .collect();
    }
    let results: Vec<Result<(bool, usize, Vec<MatchedPair>)>> = combos
        .par_iter()
        .map(|imgs| {
            let Some(rho) = extend_action(g, &gens, imgs, da, field) else {
                return Ok((false, 0, vec![]));
            };
            let mut rights = vec![Vec::new(); g.order()];
            let mut visit: Vec<usize> = gens.clone();
            visit.extend((0..g.order()).filter(|x| !gens.contains(x)));
            for hi in visit {
                let mut c = right_candidates(&a, &kg, &spans, hi, &rho[hi], budget)?;
                if gens.contains(&hi) {
                    c.retain(|sig| left_twisted_at(&a, &rho, hi, sig));
                }
                if c.is_empty() {
                    return Ok((true, 0, vec![]));
                }
                rights[hi] = c;
            }
            let left: Vec<Vec<Scalar>> = (0..g.order())
                .flat_map(|hi| (0..da).map(|j| rho[hi].column(j)).collect::<Vec<_>>())
                .collect();
            let mut found = Vec::new();
            let mut checked = 0;
            let mut idx = vec![0usize; g.order()];
            loop {
                budget.charge(1)?;
                checked += 1;
                let right: Vec<Vec<Scalar>> = (0..g.order())
                    .flat_map(|hi| rights[hi][idx[hi]].clone())
                    .collect();
                let mp = MatchedPair::new(a.clone(), kg.clone(), left.clone(), right)?;
                if mp.is_valid() {
                    found.push(mp);
                }
                let mut k = 0;
                loop {
                    if k == idx.len() {
                        return Ok((true, checked, found));
                    }
                    idx[k] += 1;
                    if idx[k] < rights[k].len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
            }
        })
        .collect();
    let mut out = PairSearch { pairs: vec![], left_actions: 0, tables_checked: 0 };
    for r in results {
        let (module, checked, found) = r?;
        out.left_actions += module as usize;
        out.tables_checked += checked;
        out.pairs.extend(found);
    }
    out.pairs.sort_by(|x, y| {
        (x.left_table(), x.right_table()).cmp(&(y.left_table(), y.right_table()))
    });
    Ok(out)
}

/// All matched pairs `(H₄, k[Cₙ])`, with the budget from the environment.
pub fn enumerate_matched_pairs_h4_cn(n: u64, field: FieldSpec) -> Result<Vec<MatchedPair>> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let budget = Budget::from_env();
    Ok(matched_pairs_h4_group(&FiniteGroupTable::cyclic(n as usize), field, &budget)?.pairs)
}

/// `ω` with `c ▷ x = ω x`, read off a pair `(H₄, k[Cₙ])`.
pub fn root_of_pair(mp: &MatchedPair) -> Option<Scalar> {
    if mp.h().dim() < 2 {
        return Some(mp.a().field().one());
    }
    let v = mp.left(1, 2);
    let w = v[2].clone();
    (linalg::scale(&w, &mp.a().basis(2)) == v).then_some(w)
}

/// The sign tables listed for `(H₄, k[C₂ × C₂])` on the group basis
/// `[1, a, b, ab]`: `(sign of a, sign of b)` acting on `x` and `gx`.
pub const KLEIN_SIGNS: [(i64, i64); 3] = [(1, -1), (-1, 1), (-1, -1)];

/// The pair with trivial `◁` and `a ▷ x = σ_a x`, `b ▷ x = σ_b x`.
pub fn klein_pair(signs: (i64, i64), field: FieldSpec) -> Result<MatchedPair> {
    require_odd_characteristic(field)?;
    let a = Arc::new(sweedler_h4(field));
    let kg = Arc::new(group_algebra(&FiniteGroupTable::klein(), field));
    let (a2, h2) = (a.clone(), kg.clone());
    MatchedPair::from_fn(
        a,
        kg,
        move |i, j| {
            let mut c = field.one();
            if j >= 2 {
                if i & 1 == 1 {
                    c = &c * &field.from_i64(signs.0);
                }
                if i & 2 == 2 {
                    c = &c * &field.from_i64(signs.1);
                }
            }
            linalg::scale(&c, &a2.basis(j))
        },
        move |i, j| linalg::scale(&h4_counit(j, field), &h2.basis(i)),
    )
}

fn h4_counit(j: usize, field: FieldSpec) -> Scalar {
    if j < 2 {
        field.one()
    } else {
        field.zero()
    }
}

/// Result of [`klein_survey`].
#[derive(Clone, Debug)]
pub struct KleinSurvey {
    pub pairs: Vec<MatchedPair>,
    /// Which of the listed tables each nontrivial pair equals, as an index
    /// into [`KLEIN_SIGNS`]; `None` for the trivial pair or a pair matching
    /// no table.
    pub table_match: Vec<Option<usize>>,
    /// For each pair, a verified Hopf isomorphism onto `H₄ ⊗ k[C₂ × C₂]`.
    pub witnesses: Vec<Option<LinMap>>,
    pub all_products_trivial: bool,
}

/// Searches all matched pairs `(H₄, k[C₂ × C₂])` and looks for a Hopf
/// isomorphism from each bicrossed product onto the tensor product.
pub fn klein_survey(field: FieldSpec, budget: &Budget) -> Result<KleinSurvey> {
    let klein = FiniteGroupTable::klein();
    let pairs = matched_pairs_h4_group(&klein, field, budget)?.pairs;
    let listed: Vec<MatchedPair> = KLEIN_SIGNS
        .iter()
        .map(|&s| klein_pair(s, field))
        .collect::<Result<_>>()?;
    let table_match = pairs
        .iter()
        .map(|mp| listed.iter().position(|q| q == mp))
        .collect();
    let a = Arc::new(sweedler_h4(field));
    let kg = Arc::new(group_algebra(&klein, field));
    let trivial = MatchedPair::trivial(a.clone(), kg.clone())?;
    let tensor = tensor_hopf(&a, &kg)?;
    let witnesses: Vec<Option<LinMap>> = pairs
        .iter()
        .map(|mp| -> Result<Option<LinMap>> {
            let found = enumerate_morphisms(mp, &trivial, budget)?
                .into_iter()
                .map(|m| m.psi)
                .find(|psi| psi.is_bijective() && psi.is_hopf_map());
            Ok(found.filter(|psi| psi.cod().same_structure(&tensor)))
        })
        .collect::<Result<_>>()?;
    let all_products_trivial = witnesses.iter().all(Option::is_some);
    Ok(KleinSurvey { pairs, table_match, witnesses, all_products_trivial })
}
