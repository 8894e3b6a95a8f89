use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::HopfAlgebra;
use crate::linalg::{self, Matrix};
use crate::linmap::{Budget, LinMap, MapSearch};
use crate::products::{bicrossed_product, MatchedPair};

use super::quadruple::{assemble_between, split, verify_quadruple, Quadruple};

fn columns(f: &LinMap) -> Vec<Vec<Scalar>> {
    (0..f.dom().dim()).map(|j| f.column(j)).collect()
}

/// All Hopf algebra maps `dom → cod` in the structured family, each
/// re-verified, sorted by columns.
pub fn enumerate_hopf_maps(
    dom: &Arc<HopfAlgebra>,
    cod: &Arc<HopfAlgebra>,
    budget: &Budget,
) -> Result<Vec<LinMap>> {
    let sols = MapSearch::new(dom, cod, budget)?.multiplicative().collect()?;
    let mut maps = Vec::with_capacity(sols.len());
    for cols in &sols {
        let f = LinMap::from_columns(dom.clone(), cod.clone(), cols)?;
        if f.is_hopf_map() {
            maps.push(f);
        }
    }
    maps.sort_by_key(columns);
    maps.dedup_by(|x, y| x.matrix() == y.matrix());
    Ok(maps)
}

/// The bijective Hopf maps among [`enumerate_hopf_maps`].
pub fn enumerate_hopf_isomorphisms(
    dom: &Arc<HopfAlgebra>,
    cod: &Arc<HopfAlgebra>,
    budget: &Budget,
) -> Result<Vec<LinMap>> {
    if dom.dim() != cod.dim() {
        return Ok(Vec::new());
    }
    Ok(enumerate_hopf_maps(dom, cod, budget)?
        .into_iter()
        .filter(LinMap::is_bijective)
        .collect())
}

/// A Hopf map between bicrossed products together with its quadruple.
#[derive(Clone, Debug, PartialEq)]
pub struct BicrossedMorphism {
    pub quadruple: Quadruple,
    pub psi: LinMap,
}

/// All Hopf maps `A ⋈ H → A' ⋈' H'`. The restrictions `α = ψ i_A` and
/// `β = ψ i_H` are enumerated as Hopf maps into `A' ⋈' H'`; the pairs with
/// `β(h) α(b) = α(h1 ▷ b1) β(h2 ◁ b2)` are split into quadruples, which are
/// verified and reassembled. Sorted by the matrix of `ψ`.
pub fn enumerate_morphisms(
    mp: &MatchedPair,
    mp2: &MatchedPair,
    budget: &Budget,
) -> Result<Vec<BicrossedMorphism>> {
    if mp.a().field() != mp2.a().field() {
        return Err(Error::FieldMismatch(mp.a().field(), mp2.a().field()));
    }
    let e = Arc::new(bicrossed_product(mp)?);
    let e2 = Arc::new(bicrossed_product(mp2)?);
    let (a, h) = (mp.a(), mp.h());
    let alphas: Vec<Vec<Vec<Scalar>>> = enumerate_hopf_maps(a, &e2, budget)?.iter().map(columns).collect();
    let betas: Vec<Vec<Vec<Scalar>>> = enumerate_hopf_maps(h, &e2, budget)?.iter().map(columns).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for al in &alphas {
        for be in &betas {
            budget.charge(1)?;
            if !commute(mp, &e2, al, be) {
                continue;
            }
            let q = quadruple_of(mp, mp2, al, be)?;
            let report = verify_quadruple(&q, mp, mp2)?;
            if let Some((c, idx)) = report.first_failure() {
                return Err(Error::AxiomViolation(format!(
                    "restrictions of a Hopf map give a quadruple failing {c} at {idx:?}"
                )));
            }
            let psi = assemble_between(&q, mp, mp2, &e, &e2)?;
            if psi.matrix() != &product_matrix(&e2, al, be) {
                return Err(Error::AxiomViolation(
                    "assembled ψ differs from α(a) β(h)".into(),
                ));
            }
            if seen.insert(psi.matrix().clone()) {
                out.push(BicrossedMorphism { quadruple: q, psi });
            }
        }
    }
    out.sort_by_key(|m| columns(&m.psi));
    Ok(out)
}

/// `β(h) α(b) = α(h1 ▷ b1) β(h2 ◁ b2)` on basis elements.
fn commute(mp: &MatchedPair, e2: &HopfAlgebra, al: &[Vec<Scalar>], be: &[Vec<Scalar>]) -> bool {
    let (a, h) = (mp.a(), mp.h());
    let field = a.field();
    let img = |cols: &[Vec<Scalar>], x: &[Scalar]| {
        let mut out = linalg::zeros(field, e2.dim());
        for (k, c) in linalg::support(x) {
            linalg::axpy(&mut out, c, &cols[k]);
        }
        out
    };
    (0..h.dim()).all(|hi| {
        (0..a.dim()).all(|bj| {
            let lhs = e2.mul(&be[hi], &al[bj]);
            let mut rhs = linalg::zeros(field, e2.dim());
            for (h1, h2, c) in h.comul_basis(hi) {
                for (b1, b2, d) in a.comul_basis(bj) {
                    let t = e2.mul(&img(al, mp.left(*h1, *b1)), &img(be, mp.right(*h2, *b2)));
                    linalg::axpy(&mut rhs, &(c * d), &t);
                }
            }
            lhs == rhs
        })
    })
}

fn quadruple_of(
    mp: &MatchedPair,
    mp2: &MatchedPair,
    al: &[Vec<Scalar>],
    be: &[Vec<Scalar>],
) -> Result<Quadruple> {
    let (u, p): (Vec<_>, Vec<_>) = al.iter().map(|w| split(mp2, w)).unzip();
    let (r, v): (Vec<_>, Vec<_>) = be.iter().map(|w| split(mp2, w)).unzip();
    let (a, h, a2, h2) = (mp.a(), mp.h(), mp2.a(), mp2.h());
    Ok(Quadruple {
        u: LinMap::from_columns(a.clone(), a2.clone(), &u)?,
        p: LinMap::from_columns(a.clone(), h2.clone(), &p)?,
        r: LinMap::from_columns(h.clone(), a2.clone(), &r)?,
        v: LinMap::from_columns(h.clone(), h2.clone(), &v)?,
    })
}

fn product_matrix(e2: &HopfAlgebra, al: &[Vec<Scalar>], be: &[Vec<Scalar>]) -> Matrix {
    let cols: Vec<_> = al
        .iter()
        .flat_map(|x| be.iter().map(move |y| e2.mul(x, y)))
        .collect();
    Matrix::from_columns(e2.field(), e2.dim(), &cols)
}
