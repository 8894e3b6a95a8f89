//! Linear maps between based Hopf algebras, convolution, and the
//! grouplike / skew-primitive machinery behind the morphism searches.

mod coz1;
mod search;
mod strata;

use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value as Json};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::HopfAlgebra;
use crate::linalg::{self, Matrix};

pub use coz1::{coz1_group, unitary_cocentral_maps, ConvolutionGroupTable};
pub use search::{
    exhaustive_unitary_coalgebra_maps, unitary_coalgebra_maps, Budget, MapSearch, Partial,
};
pub use strata::{grouplikes, is_grouplike, skew_primitives, strata, Strata, Stratum};

/// A linear map `dom -> cod`; column `j` of the matrix is the image of `b_j`.
#[derive(Clone)]
pub struct LinMap {
    dom: Arc<HopfAlgebra>,
    cod: Arc<HopfAlgebra>,
    matrix: Matrix,
}

impl PartialEq for LinMap {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
            && self.dom.same_structure(&other.dom)
            && self.cod.same_structure(&other.cod)
    }
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinMap(")?;
        let parts: Vec<String> = (0..self.dom.dim())
            .map(|j| {
                format!(
                    "{} -> {}",
                    self.dom.labels()[j],
                    format_vector(&self.cod, &self.matrix.column(j))
                )
            })
            .collect();
        write!(f, "{})", parts.join(", "))
    }
}

/// Renders a vector in terms of basis labels, e.g. `2*x + gx`.
pub fn format_vector(h: &HopfAlgebra, v: &[Scalar]) -> String {
    let terms: Vec<String> = linalg::support(v)
        .map(|(i, c)| {
            let l = &h.labels()[i];
            if c.is_one() {
                l.clone()
            } else {
                format!("{c}*{l}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// The four exhaustive checks on a linear map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MapFlags {
    pub is_coalgebra_map: bool,
    pub is_algebra_map: bool,
    pub is_unitary: bool,
    pub is_counitary: bool,
}

impl LinMap {
    pub fn new(dom: Arc<HopfAlgebra>, cod: Arc<HopfAlgebra>, matrix: Matrix) -> Result<Self> {
        if dom.field() != cod.field() {
            return Err(Error::FieldMismatch(dom.field(), cod.field()));
        }
        if matrix.field() != dom.field() {
            return Err(Error::FieldMismatch(dom.field(), matrix.field()));
        }
        if matrix.rows() != cod.dim() || matrix.cols() != dom.dim() {
            return Err(Error::Dimension(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                cod.dim(),
                dom.dim()
            )));
        }
        Ok(LinMap { dom, cod, matrix })
    }

    /// The map sending `b_j` to `columns[j]`.
    pub fn from_columns(
        dom: Arc<HopfAlgebra>,
        cod: Arc<HopfAlgebra>,
        columns: &[Vec<Scalar>],
    ) -> Result<Self> {
        if columns.len() != dom.dim() || columns.iter().any(|c| c.len() != cod.dim()) {
            return Err(Error::Dimension("column data does not fit the algebras".into()));
        }
        let m = Matrix::from_columns(dom.field(), cod.dim(), columns);
        LinMap::new(dom, cod, m)
    }

    pub fn identity(h: Arc<HopfAlgebra>) -> Self {
        let m = Matrix::identity(h.field(), h.dim());
        LinMap {
            dom: h.clone(),
            cod: h,
            matrix: m,
        }
    }

    /// `x ↦ ε(x) 1`.
    pub fn trivial(dom: Arc<HopfAlgebra>, cod: Arc<HopfAlgebra>) -> Result<Self> {
        let cols: Vec<Vec<Scalar>> = dom
            .counit()
            .iter()
            .map(|e| linalg::scale(e, &cod.unit()))
            .collect();
        LinMap::from_columns(dom, cod, &cols)
    }

    /// The antipode of `h` as a map.
    pub fn antipode(h: Arc<HopfAlgebra>) -> Self {
        let m = h.antipode().clone();
        LinMap {
            dom: h.clone(),
            cod: h,
            matrix: m,
        }
    }

    pub fn dom(&self) -> &Arc<HopfAlgebra> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<HopfAlgebra> {
        &self.cod
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        self.matrix.column(j)
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(x)
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinMap) -> Result<LinMap> {
        if !g.cod.same_structure(&self.dom) {
            return Err(Error::Dimension("composition of non-matching maps".into()));
        }
        LinMap::new(g.dom.clone(), self.cod.clone(), self.matrix.mul(&g.matrix)?)
    }

    pub fn inverse(&self) -> Option<LinMap> {
        let inv = self.matrix.inverse()?;
        Some(LinMap {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            matrix: inv,
        })
    }

    pub fn is_bijective(&self) -> bool {
        self.matrix.rows() == self.matrix.cols() && self.matrix.rank() == self.matrix.rows()
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.matrix.cols()
    }

    pub fn is_unitary(&self) -> bool {
        self.apply(&self.dom.unit()) == self.cod.unit()
    }

    pub fn is_counitary(&self) -> bool {
        (0..self.dom.dim()).all(|j| self.cod.eps(&self.column(j)) == self.dom.counit()[j])
    }

    /// `f(xy) = f(x) f(y)` on all basis pairs.
    pub fn is_multiplicative(&self) -> bool {
        let d = self.dom.dim();
        let cols: Vec<Vec<Scalar>> = (0..d).map(|j| self.column(j)).collect();
        (0..d).all(|i| {
            (0..d).all(|j| {
                let prod = self.dom.mul(&self.dom.basis(i), &self.dom.basis(j));
                self.apply(&prod) == self.cod.mul(&cols[i], &cols[j])
            })
        })
    }

    /// `Δ f(b) = (f⊗f) Δ(b)` on every basis element.
    pub fn is_comultiplicative(&self) -> bool {
        let d = self.dom.dim();
        let dc = self.cod.dim();
        let cols: Vec<Vec<Scalar>> = (0..d).map(|j| self.column(j)).collect();
        (0..d).all(|i| {
            let mut rhs = linalg::zeros(self.dom.field(), dc * dc);
            for (j, k, c) in self.dom.comul_basis(i) {
                linalg::axpy(&mut rhs, c, &linalg::kron(&cols[*j], &cols[*k], self.dom.field()));
            }
            self.cod.comul(&cols[i]) == rhs
        })
    }

    /// Comultiplicative and counitary.
    pub fn is_coalgebra_map(&self) -> bool {
        self.is_counitary() && self.is_comultiplicative()
    }

    /// Multiplicative and unitary.
    pub fn is_algebra_map(&self) -> bool {
        self.is_unitary() && self.is_multiplicative()
    }

    pub fn is_hopf_map(&self) -> bool {
        self.is_coalgebra_map() && self.is_algebra_map()
    }

    pub fn flags(&self) -> MapFlags {
        MapFlags {
            is_coalgebra_map: self.is_coalgebra_map(),
            is_algebra_map: self.is_algebra_map(),
            is_unitary: self.is_unitary(),
            is_counitary: self.is_counitary(),
        }
    }

    /// `r(h1) ⊗ h2 = r(h2) ⊗ h1` on every basis element of the domain.
    pub fn is_cocentral(&self) -> bool {
        if !self.is_coalgebra_map() {
            return false;
        }
        let (d, dc) = (self.dom.dim(), self.cod.dim());
        let field = self.dom.field();
        (0..d).all(|i| {
            let mut left = linalg::zeros(field, dc * d);
            let mut right = linalg::zeros(field, dc * d);
            for (j, k, c) in self.dom.comul_basis(i) {
                linalg::axpy(&mut left, c, &linalg::kron(&self.column(*j), &self.dom.basis(*k), field));
                linalg::axpy(&mut right, c, &linalg::kron(&self.column(*k), &self.dom.basis(*j), field));
            }
            left == right
        })
    }

    pub fn to_json(&self) -> Json {
        json!({
            "dom_hash": self.dom.structure_hash(),
            "cod_hash": self.cod.structure_hash(),
            "matrix": self.matrix.to_rows().iter()
                .map(|r| r.iter().map(Scalar::to_json).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }

    /// Reads a map between known algebras, checking both structure hashes.
    pub fn from_json(v: &Json, dom: Arc<HopfAlgebra>, cod: Arc<HopfAlgebra>) -> Result<Self> {
        for (key, h) in [("dom_hash", &dom), ("cod_hash", &cod)] {
            if let Some(hash) = v.get(key).and_then(Json::as_str) {
                if hash != h.structure_hash() {
                    return Err(Error::Parse(format!("{key} does not match the given algebra")));
                }
            }
        }
        let m = v
            .get("matrix")
            .ok_or_else(|| Error::Parse("missing \"matrix\"".into()))?;
        let flat = crate::hopf::read_tensor(dom.field(), m, &[cod.dim(), dom.dim()], "matrix")?;
        let rows = flat.chunks(dom.dim()).map(<[Scalar]>::to_vec).collect();
        LinMap::new(dom.clone(), cod, Matrix::from_rows(dom.field(), rows)?)
    }
}

/// `(f * g)(c) = f(c1) g(c2)`.
pub fn convolve(f: &LinMap, g: &LinMap) -> Result<LinMap> {
    if !f.dom.same_structure(&g.dom) || !f.cod.same_structure(&g.cod) {
        return Err(Error::Dimension("convolution needs equal domains and codomains".into()));
    }
    let d = f.dom.dim();
    let cols: Vec<Vec<Scalar>> = (0..d)
        .map(|i| {
            let mut acc = f.cod.zero();
            for (j, k, c) in f.dom.comul_basis(i) {
                linalg::axpy(&mut acc, c, &f.cod.mul(&f.column(*j), &g.column(*k)));
            }
            acc
        })
        .collect();
    LinMap::from_columns(f.dom.clone(), f.cod.clone(), &cols)
}
