use std::collections::HashMap;
use std::sync::Arc;

use serde_json::{json, Value as Json};

use super::search::{Budget, MapSearch, Partial};
use super::{convolve, format_vector, LinMap};
use crate::error::{Error, Result};
use crate::group::FiniteGroupTable;
use crate::hopf::HopfAlgebra;
use crate::linalg;

/// `r(h1) ⊗ h2 = r(h2) ⊗ h1` at basis element `i`, or `true` while some
/// image it needs is still missing.
fn cocentral_at(dom: &HopfAlgebra, cod: &HopfAlgebra, cols: &Partial, i: usize) -> bool {
    let field = dom.field();
    let n = cod.dim() * dom.dim();
    let mut left = linalg::zeros(field, n);
    let mut right = linalg::zeros(field, n);
    for (j, k, c) in dom.comul_basis(i) {
        let (Some(rj), Some(rk)) = (&cols[*j], &cols[*k]) else {
            return true;
        };
        linalg::axpy(&mut left, c, &linalg::kron(rj, &dom.basis(*k), field));
        linalg::axpy(&mut right, c, &linalg::kron(rk, &dom.basis(*j), field));
    }
    left == right
}

/// Unitary cocentral maps `dom -> cod` from the stratified search, sorted by
/// their columns.
pub fn unitary_cocentral_maps(
    dom: &Arc<HopfAlgebra>,
    cod: &Arc<HopfAlgebra>,
    budget: &Budget,
) -> Result<Vec<LinMap>> {
    let (d, c) = (dom.as_ref(), cod.as_ref());
    let sols = MapSearch::new(d, c, budget)?
        .check(move |cols, i| {
            // every basis element whose coproduct involves i
            (0..d.dim())
                .filter(|&b| b == i || d.comul_basis(b).iter().any(|(j, k, _)| *j == i || *k == i))
                .all(|b| cocentral_at(d, c, cols, b))
        })
        .collect()?;
    let mut maps = sols
        .iter()
        .map(|cols| LinMap::from_columns(dom.clone(), cod.clone(), cols))
        .collect::<Result<Vec<_>>>()?;
    maps.sort_by_key(columns);
    Ok(maps)
}

fn columns(f: &LinMap) -> Vec<Vec<crate::field::Scalar>> {
    (0..f.dom().dim()).map(|j| f.column(j)).collect()
}

/// A finite group of maps under convolution.
#[derive(Clone, Debug)]
pub struct ConvolutionGroupTable {
    elements: Vec<LinMap>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl ConvolutionGroupTable {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[LinMap] {
        &self.elements
    }

    /// `table[i][j]` is the index of `elements[i] * elements[j]`.
    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.table[i].iter().position(|&k| k == self.identity).expect("group table")
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (0..n).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// The abstract group, labelled `r0, r1, ...` with `r0` the identity.
    pub fn to_group(&self) -> Result<FiniteGroupTable> {
        let labels = (0..self.order()).map(|i| format!("r{i}")).collect();
        FiniteGroupTable::new(self.table.clone(), labels)
    }

    pub fn to_json(&self) -> Json {
        json!({
            "order": self.order(),
            "identity": self.identity,
            "table": self.table,
            "elements": self.elements.iter().map(LinMap::to_json).collect::<Vec<_>>(),
        })
    }

    /// One line per element, giving the images of the basis.
    pub fn describe(&self) -> Vec<String> {
        self.elements
            .iter()
            .enumerate()
            .map(|(n, f)| {
                let parts: Vec<String> = (0..f.dom().dim())
                    .map(|j| {
                        format!("{} -> {}", f.dom().labels()[j], format_vector(f.cod(), &f.column(j)))
                    })
                    .collect();
                format!("r{n}: {}", parts.join(", "))
            })
            .collect()
    }
}

/// `CoZ¹(H, A)`: the unitary cocentral maps among `candidates` under
/// convolution. Fails when the candidates are not closed under convolution
/// or inverses, or when some member has `S²∘r ≠ r`.
pub fn coz1_group(
    h: &Arc<HopfAlgebra>,
    a: &Arc<HopfAlgebra>,
    candidates: impl IntoIterator<Item = LinMap>,
) -> Result<ConvolutionGroupTable> {
    let trivial = LinMap::trivial(h.clone(), a.clone())?;
    let mut elements: Vec<LinMap> = candidates
        .into_iter()
        .filter(|f| f.is_unitary() && f.is_cocentral())
        .collect();
    elements.sort_by_key(columns);
    elements.dedup_by(|x, y| x.matrix() == y.matrix());
    // identity first
    let id_pos = elements
        .iter()
        .position(|f| f.matrix() == trivial.matrix())
        .ok_or_else(|| Error::AxiomViolation("unit∘counit is missing from the candidates".into()))?;
    let id = elements.remove(id_pos);
    elements.insert(0, id);

    let index: HashMap<_, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, f)| (f.matrix().clone(), i))
        .collect();
    let n = elements.len();
    let mut table = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let prod = convolve(&elements[i], &elements[j])?;
            table[i][j] = *index.get(prod.matrix()).ok_or_else(|| {
                Error::AxiomViolation(format!(
                    "convolution of members {i} and {j} leaves the candidate set"
                ))
            })?;
        }
    }
    for i in 0..n {
        if !table[i].contains(&0) || !(0..n).any(|j| table[j][i] == 0) {
            return Err(Error::AxiomViolation(format!("member {i} has no inverse")));
        }
    }
    let s = LinMap::antipode(a.clone());
    for (i, r) in elements.iter().enumerate() {
        if s.compose(&s)?.compose(r)?.matrix() != r.matrix() {
            return Err(Error::AxiomViolation(format!("S²∘r ≠ r for member {i}")));
        }
    }
    let out = ConvolutionGroupTable {
        elements,
        table,
        identity: 0,
    };
    out.to_group()?;
    Ok(out)
}
