use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::HopfAlgebra;
use crate::linalg::{self, Matrix};

use super::search::Budget;

pub fn is_grouplike(h: &HopfAlgebra, x: &[Scalar]) -> bool {
    h.eps(x).is_one() && h.comul(x) == linalg::kron(x, x, h.field())
}

/// All grouplike elements. With a hint, the hinted elements are checked
/// and returned; without one, every vector of `F_p^dim` is tried, which is
/// allowed only while `p^dim` stays within the budget.
pub fn grouplikes(
    h: &HopfAlgebra,
    hint: Option<&[Vec<Scalar>]>,
    budget: &Budget,
) -> Result<Vec<Vec<Scalar>>> {
    if let Some(hint) = hint {
        for (i, x) in hint.iter().enumerate() {
            if x.len() != h.dim() || !is_grouplike(h, x) {
                return Err(Error::InvalidParameter(format!("hinted element {i} is not grouplike")));
            }
        }
        let mut out = hint.to_vec();
        out.sort();
        out.dedup();
        return Ok(out);
    }
    let field = h.field();
    let size = field.size().ok_or_else(|| {
        Error::HintRequired(format!("grouplikes over {field} need a hint"))
    })?;
    let total = (size as u128).checked_pow(h.dim() as u32).unwrap_or(u128::MAX);
    if total > budget.limit() as u128 {
        return Err(Error::HintRequired(format!(
            "{size}^{} candidates exceed the search budget; supply a hint",
            h.dim()
        )));
    }
    budget.charge(total as u64)?;
    let elems = field.elements().expect("finite field");
    let mut out = Vec::new();
    let mut digits = vec![0usize; h.dim()];
    loop {
        let x: Vec<Scalar> = digits.iter().map(|&k| elems[k].clone()).collect();
        if is_grouplike(h, &x) {
            out.push(x);
        }
        if !increment(&mut digits, elems.len()) {
            break;
        }
    }
    out.sort();
    Ok(out)
}

/// Odometer step over `base`-ary digits; false once it wraps around.
pub(crate) fn increment(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// A basis of `P_{g,h} = {x : Δx = x⊗g + h⊗x}`.
pub fn skew_primitives(
    hopf: &HopfAlgebra,
    g: &[Scalar],
    h: &[Scalar],
) -> Result<Vec<Vec<Scalar>>> {
    if !is_grouplike(hopf, g) || !is_grouplike(hopf, h) {
        return Err(Error::InvalidParameter("skew-primitives need grouplike g and h".into()));
    }
    let d = hopf.dim();
    let field = hopf.field();
    let cols: Vec<Vec<Scalar>> = (0..d)
        .map(|i| {
            let b = hopf.basis(i);
            let mut v = hopf.comul(&b);
            linalg::axpy(&mut v, &-field.one(), &linalg::kron(&b, g, field));
            linalg::axpy(&mut v, &-field.one(), &linalg::kron(h, &b, field));
            v
        })
        .collect();
    Ok(Matrix::from_columns(field, d * d, &cols).kernel())
}

/// How a basis element sits in the coalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stratum {
    Grouplike,
    /// `Δ(b) = b ⊗ b_left + b_right ⊗ b`, so `b ∈ P_{b_left, b_right}`.
    SkewPrimitive { left: usize, right: usize },
}

/// A description of a basis made of grouplikes and skew-primitives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strata {
    pub kinds: Vec<Stratum>,
    pub unit: usize,
}

impl Strata {
    pub fn grouplikes(&self) -> Vec<usize> {
        (0..self.kinds.len())
            .filter(|&i| self.kinds[i] == Stratum::Grouplike)
            .collect()
    }
}

/// Detects a basis of grouplikes and skew-primitives with a grouplike unit.
/// For such bases the grouplikes of the algebra are exactly the grouplike
/// basis vectors, which is what the structured searches rely on.
pub fn strata(h: &HopfAlgebra) -> Option<Strata> {
    let unit = h.unit_index()?;
    let d = h.dim();
    let one = |c: &Scalar| c.is_one();
    let grouplike: Vec<bool> = (0..d)
        .map(|i| matches!(h.comul_basis(i), [(j, k, c)] if *j == i && *k == i && one(c)) && h.counit()[i].is_one())
        .collect();
    let mut kinds = Vec::with_capacity(d);
    for i in 0..d {
        if grouplike[i] {
            kinds.push(Stratum::Grouplike);
            continue;
        }
        let terms = h.comul_basis(i);
        if terms.len() != 2 || !terms.iter().all(|(_, _, c)| one(c)) {
            return None;
        }
        let left = terms.iter().find(|(j, k, _)| *j == i && grouplike[*k]).map(|t| t.1)?;
        let right = terms.iter().find(|(j, k, _)| *k == i && grouplike[*j]).map(|t| t.0)?;
        kinds.push(Stratum::SkewPrimitive { left, right });
    }
    if !grouplike[unit] {
        return None;
    }
    Some(Strata { kinds, unit })
}
