//! Finite-dimensional Hopf algebras as structure constants over a fixed basis.

mod constructions;
mod verify;

use std::collections::BTreeMap;

use serde_json::{json, Value as Json};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{self, Matrix};

pub use constructions::{
    dual_group_algebra, dual_hopf, group_algebra, op_cop, sweedler_h4, tensor_hopf,
    trivial_hopf,
};
pub(crate) use constructions::{antipode_inverse, join_labels};
pub use verify::{verify_hopf_axioms, AxiomReport, Failure};

/// Sparse list of tensor terms `coefficient * b_{k_1} ⊗ ... ⊗ b_{k_r}`.
pub type Terms = Vec<(Vec<usize>, Scalar)>;

/// A Hopf algebra of dimension `d` over a basis `b_0 .. b_{d-1}`.
///
/// * `mult[(i*d + j)*d + k]` is the coefficient of `b_k` in `b_i b_j`;
/// * `comult[(i*d + j)*d + k]` is the coefficient of `b_j ⊗ b_k` in `Δ(b_i)`;
/// * column `j` of `antipode` is `S(b_j)`.
#[derive(Clone)]
pub struct HopfAlgebra {
    field: FieldSpec,
    dim: usize,
    labels: Vec<String>,
    mult: Vec<Scalar>,
    unit: Vec<Scalar>,
    comult: Vec<Scalar>,
    counit: Vec<Scalar>,
    antipode: Matrix,
    mult_nz: Vec<Vec<(usize, Scalar)>>,
    comult_nz: Vec<Vec<(usize, usize, Scalar)>>,
}

impl PartialEq for HopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.same_structure(other)
    }
}

impl std::fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "HopfAlgebra(dim {}, over {}, basis {:?})",
            self.dim, self.field, self.labels
        )
    }
}

impl HopfAlgebra {
    /// Builds an algebra from dense structure tensors, checking shapes and
    /// fields only. Use [`verify_hopf_axioms`] to check the axioms.
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        mult: Vec<Scalar>,
        unit: Vec<Scalar>,
        comult: Vec<Scalar>,
        counit: Vec<Scalar>,
        antipode: Matrix,
    ) -> Result<Self> {
        let d = labels.len();
        if d == 0 {
            return Err(Error::Dimension("a Hopf algebra needs a nonempty basis".into()));
        }
        let cube = d * d * d;
        if mult.len() != cube || comult.len() != cube {
            return Err(Error::Dimension(format!(
                "structure tensors must have {cube} entries for dimension {d}"
            )));
        }
        if unit.len() != d || counit.len() != d {
            return Err(Error::Dimension("unit and counit must have length dim".into()));
        }
        if antipode.rows() != d || antipode.cols() != d {
            return Err(Error::Dimension("antipode must be dim x dim".into()));
        }
        let all = mult.iter().chain(&unit).chain(&comult).chain(&counit);
        if let Some(s) = all.into_iter().find(|s| s.field() != field) {
            return Err(Error::FieldMismatch(field, s.field()));
        }
        if antipode.field() != field {
            return Err(Error::FieldMismatch(field, antipode.field()));
        }
        let mult_nz = (0..d * d)
            .map(|ij| {
                (0..d)
                    .filter_map(|k| {
                        let c = &mult[ij * d + k];
                        (!c.is_zero()).then(|| (k, c.clone()))
                    })
                    .collect()
            })
            .collect();
        let comult_nz = (0..d)
            .map(|i| {
                let mut v = Vec::new();
                for j in 0..d {
                    for k in 0..d {
                        let c = &comult[(i * d + j) * d + k];
                        if !c.is_zero() {
                            v.push((j, k, c.clone()));
                        }
                    }
                }
                v
            })
            .collect();
        Ok(HopfAlgebra {
            field,
            dim: d,
            labels,
            mult,
            unit,
            comult,
            counit,
            antipode,
            mult_nz,
            comult_nz,
        })
    }

    /// Builds an algebra from sparse descriptions of the basis products,
    /// coproducts and antipode images.
    pub fn from_sparse(
        field: FieldSpec,
        labels: Vec<String>,
        mul: impl Fn(usize, usize) -> Vec<(usize, Scalar)>,
        unit: Vec<Scalar>,
        comul: impl Fn(usize) -> Vec<(usize, usize, Scalar)>,
        counit: Vec<Scalar>,
        antipode: impl Fn(usize) -> Vec<(usize, Scalar)>,
    ) -> Result<Self> {
        let d = labels.len();
        let mut mult = vec![field.zero(); d * d * d];
        let mut comult = vec![field.zero(); d * d * d];
        let mut s = Matrix::zeros(field, d, d);
        for i in 0..d {
            for j in 0..d {
                for (k, c) in mul(i, j) {
                    mult[(i * d + j) * d + k] += &c;
                }
            }
            for (j, k, c) in comul(i) {
                comult[(i * d + j) * d + k] += &c;
            }
            for (k, c) in antipode(i) {
                let v = s.get(k, i) + &c;
                s.set(k, i, v);
            }
        }
        HopfAlgebra::new(field, labels, mult, unit, comult, counit, s)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim, "label count");
        self.labels = labels;
        self
    }

    pub fn mult_coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    pub fn comult_coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.comult[(i * self.dim + j) * self.dim + k]
    }

    pub fn unit(&self) -> Vec<Scalar> {
        self.unit.clone()
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn zero(&self) -> Vec<Scalar> {
        linalg::zeros(self.field, self.dim)
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        linalg::basis_vector(self.field, self.dim, i)
    }

    /// Nonzero terms of `b_i b_j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mult_nz[i * self.dim + j]
    }

    /// Nonzero terms `(j, k, c)` of `Δ(b_i) = Σ c b_j ⊗ b_k`.
    pub fn comul_basis(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comult_nz[i]
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero();
        for (i, ai) in linalg::support(a) {
            for (j, bj) in linalg::support(b) {
                let c = ai * bj;
                for (k, m) in self.mul_basis(i, j) {
                    out[*k] += &(&c * m);
                }
            }
        }
        out
    }

    /// `Δ(a)` as a dense vector of length `dim²`.
    pub fn comul(&self, a: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim;
        let mut out = linalg::zeros(self.field, d * d);
        for (i, ai) in linalg::support(a) {
            for (j, k, c) in self.comul_basis(i) {
                out[j * d + k] += &(ai * c);
            }
        }
        out
    }

    pub fn eps(&self, a: &[Scalar]) -> Scalar {
        let mut acc = self.field.zero();
        for (i, ai) in linalg::support(a) {
            if !self.counit[i].is_zero() {
                acc += &(ai * &self.counit[i]);
            }
        }
        acc
    }

    pub fn s(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.antipode.mul_vec(a)
    }

    /// Iterated coproduct of `b_i` with `legs` tensor factors.
    pub fn sweedler(&self, i: usize, legs: usize) -> Terms {
        assert!(legs >= 1, "at least one leg");
        let mut terms: Terms = vec![(vec![i], self.field.one())];
        for _ in 1..legs {
            let mut acc: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
            for (key, c) in &terms {
                let last = *key.last().unwrap();
                for (j, k, cc) in self.comul_basis(last) {
                    let mut nk = key[..key.len() - 1].to_vec();
                    nk.push(*j);
                    nk.push(*k);
                    add_term(&mut acc, nk, c * cc);
                }
            }
            terms = acc.into_iter().collect();
        }
        terms
    }

    /// The grouplike unit of the basis, if the unit is a basis vector.
    pub fn unit_index(&self) -> Option<usize> {
        let support: Vec<_> = linalg::support(&self.unit).collect();
        match support.as_slice() {
            [(i, c)] if c.is_one() => Some(*i),
            _ => None,
        }
    }

    /// Compares the structure tensors, ignoring labels.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }

    /// Short content hash of the structure constants (labels excluded).
    pub fn structure_hash(&self) -> String {
        let mut v = self.to_json();
        v.as_object_mut().unwrap().remove("labels");
        let digest = Sha256::digest(v.to_string().as_bytes());
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Serialises to the `hopf-v1` JSON layout.
    pub fn to_json(&self) -> Json {
        let d = self.dim;
        let cube = |t: &[Scalar]| -> Json {
            Json::Array(
                (0..d)
                    .map(|i| {
                        Json::Array(
                            (0..d)
                                .map(|j| {
                                    Json::Array(
                                        (0..d).map(|k| t[(i * d + j) * d + k].to_json()).collect(),
                                    )
                                })
                                .collect(),
                        )
                    })
                    .collect(),
            )
        };
        let vecj = |v: &[Scalar]| Json::Array(v.iter().map(Scalar::to_json).collect());
        json!({
            "format": "hopf-v1",
            "dim": d,
            "labels": self.labels,
            "field": self.field.to_json(),
            "mult": cube(&self.mult),
            "unit": vecj(&self.unit),
            "comult": cube(&self.comult),
            "counit": vecj(&self.counit),
            "antipode": Json::Array(self.antipode.to_rows().iter().map(|r| vecj(r)).collect()),
        })
    }

    pub fn from_json(v: &Json) -> Result<Self> {
        let field = FieldSpec::from_json(
            v.get("field")
                .ok_or_else(|| Error::Parse("missing \"field\"".into()))?,
        )?;
        let d = v
            .get("dim")
            .and_then(Json::as_u64)
            .ok_or_else(|| Error::Parse("missing integer \"dim\"".into()))? as usize;
        let labels = match v.get("labels") {
            Some(Json::Array(ls)) => ls
                .iter()
                .map(|l| {
                    l.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| Error::Parse("labels must be strings".into()))
                })
                .collect::<Result<Vec<_>>>()?,
            _ => (0..d).map(|i| format!("b{i}")).collect(),
        };
        if labels.len() != d {
            return Err(Error::Dimension(format!("{} labels for dim {d}", labels.len())));
        }
        let get = |name: &str| {
            v.get(name)
                .ok_or_else(|| Error::Parse(format!("missing \"{name}\"")))
        };
        let mult = read_tensor(field, get("mult")?, &[d, d, d], "mult")?;
        let comult = read_tensor(field, get("comult")?, &[d, d, d], "comult")?;
        let unit = read_tensor(field, get("unit")?, &[d], "unit")?;
        let counit = read_tensor(field, get("counit")?, &[d], "counit")?;
        let s = read_tensor(field, get("antipode")?, &[d, d], "antipode")?;
        let rows = s.chunks(d).map(<[Scalar]>::to_vec).collect();
        HopfAlgebra::new(
            field,
            labels,
            mult,
            unit,
            comult,
            counit,
            Matrix::from_rows(field, rows)?,
        )
    }
}

pub(crate) fn add_term(acc: &mut BTreeMap<Vec<usize>, Scalar>, key: Vec<usize>, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match acc.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let v = e.get() + &c;
            if v.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
    }
}

/// Reads a nested JSON array of the given shape into a flat row-major vector.
pub(crate) fn read_tensor(
    field: FieldSpec,
    v: &Json,
    shape: &[usize],
    name: &str,
) -> Result<Vec<Scalar>> {
    let mut out = Vec::new();
    fn walk(
        field: FieldSpec,
        v: &Json,
        shape: &[usize],
        name: &str,
        out: &mut Vec<Scalar>,
    ) -> Result<()> {
        if shape.is_empty() {
            out.push(Scalar::from_json(field, v)?);
            return Ok(());
        }
        // A cyclotomic scalar is itself an array, so check shape first.
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse(format!("\"{name}\" has the wrong shape")))?;
        if arr.len() != shape[0] {
            return Err(Error::Dimension(format!(
                "\"{name}\" has length {} where {} was expected",
                arr.len(),
                shape[0]
            )));
        }
        for item in arr {
            walk(field, item, &shape[1..], name, out)?;
        }
        Ok(())
    }
    walk(field, v, shape, name, &mut out)?;
    Ok(out)
}
