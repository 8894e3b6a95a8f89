use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value as Json};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::group::FiniteGroupTable;
use crate::hopf::read_tensor;
use crate::linalg::{self, Matrix};
use crate::linmap::LinMap;
use crate::products::{drinfeld_double_group, MatchedPair};

use super::quadruple::Quadruple;

/// Data of a Hopf map `D(k[G]) → D(k[H])`:
///
/// * `lambda[(g, y)] = λ(g, y)`, the coefficient of `y` in `p(e_g)`,
/// * `omega[(g, y)] = ω(g, y)`, the coefficient of `e_y` in `r(g)`,
/// * `theta[(h, g)] = θ(h, g) = u(e_g)(h)`,
/// * `v[g]`, a group homomorphism `G → H`.
#[derive(Clone, Debug, PartialEq)]
pub struct DoubleMorphismData {
    pub lambda: Matrix,
    pub omega: Matrix,
    pub theta: Matrix,
    pub v: Vec<usize>,
}

/// The conditions on [`DoubleMorphismData`], in checking order. Indices in
/// failures follow the free variables of the formula from left to right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DoubleCondition {
    ThetaUnit,
    ThetaSum,
    ThetaMultiplicative,
    OmegaUnit,
    OmegaMultiplicative,
    LambdaRowSum,
    LambdaColumnSum,
    LambdaIdempotent,
    LambdaGrouplike,
    ThetaLambdaCommute,
    ThetaLambdaExchange,
    OmegaTwisted,
    OmegaThetaExchange,
    LambdaEquivariant,
}

impl DoubleCondition {
    pub const ALL: [DoubleCondition; 14] = [
        DoubleCondition::ThetaUnit,
        DoubleCondition::ThetaSum,
        DoubleCondition::ThetaMultiplicative,
        DoubleCondition::OmegaUnit,
        DoubleCondition::OmegaMultiplicative,
        DoubleCondition::LambdaRowSum,
        DoubleCondition::LambdaColumnSum,
        DoubleCondition::LambdaIdempotent,
        DoubleCondition::LambdaGrouplike,
        DoubleCondition::ThetaLambdaCommute,
        DoubleCondition::ThetaLambdaExchange,
        DoubleCondition::OmegaTwisted,
        DoubleCondition::OmegaThetaExchange,
        DoubleCondition::LambdaEquivariant,
    ];

    pub fn formula(self) -> &'static str {
        match self {
            DoubleCondition::ThetaUnit => "θ(1, g) = δ(g, 1)",
            DoubleCondition::ThetaSum => "Σ_x θ(h, x) = 1",
            DoubleCondition::ThetaMultiplicative => "θ(hh', g) = Σ_x θ(h, x) θ(h', x⁻¹g)",
            DoubleCondition::OmegaUnit => "ω(1, h) = 1",
            DoubleCondition::OmegaMultiplicative => "ω(g, hh') = ω(g, h) ω(g, h')",
            DoubleCondition::LambdaRowSum => "Σ_y λ(g, y) = δ(g, 1)",
            DoubleCondition::LambdaColumnSum => "Σ_x λ(x, h) = δ(1, h)",
            DoubleCondition::LambdaIdempotent => "Σ_y λ(g, y) λ(g', y⁻¹h) = δ(g, g') λ(g, h)",
            DoubleCondition::LambdaGrouplike => "Σ_x λ(x, h) λ(gx⁻¹, h') = δ(h, h') λ(g, h)",
            DoubleCondition::ThetaLambdaCommute => {
                "Σ_x θ(h, x) λ(gx⁻¹, h') = Σ_x θ(h, x) λ(x⁻¹g, h')"
            }
            DoubleCondition::ThetaLambdaExchange => {
                "Σ_{x,y} λ(gx⁻¹, y) θ(h, x) θ(y⁻¹hy, g') = δ(g, g') θ(h, g)"
            }
            DoubleCondition::OmegaTwisted => "ω(g, h) ω(g', v(g)⁻¹ h v(g)) = ω(gg', h)",
            DoubleCondition::OmegaThetaExchange => {
                "Σ_{x,y} θ(h, xg⁻¹) ω(g, y⁻¹hy) λ(gg'x⁻¹, y) = ω(g, h) θ(v(g)⁻¹ h v(g), g')"
            }
            DoubleCondition::LambdaEquivariant => "λ(gg'g⁻¹, v(g) h v(g)⁻¹) = λ(g', h)",
        }
    }
}

impl fmt::Display for DoubleCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.formula())
    }
}

/// Outcome of [`check_double_morphism_data`].
#[derive(Clone, Debug)]
pub struct DoubleMorphismReport {
    pub failure: Option<(DoubleCondition, Vec<usize>)>,
    /// The assembled and verified map when all conditions hold.
    pub psi: Option<LinMap>,
}

impl DoubleMorphismReport {
    pub fn is_valid(&self) -> bool {
        self.failure.is_none()
    }
}

fn grid(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &d in dims {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..d).map(move |i| {
                    let mut q = p.clone();
                    q.push(i);
                    q
                })
            })
            .collect();
    }
    out
}

impl DoubleMorphismData {
    /// Reads the data off the quadruple of a map `D(k[G]) → D(k[H])`, where
    /// both doubles are as built by [`drinfeld_double_group`].
    pub fn from_quadruple(q: &Quadruple, g: &FiniteGroupTable, h: &FiniteGroupTable) -> Result<Self> {
        let (ng, nh) = (g.order(), h.order());
        if q.u.matrix().rows() != nh || q.u.matrix().cols() != ng || q.v.matrix().cols() != ng {
            return Err(Error::Dimension("quadruple does not fit D(k[G]) → D(k[H])".into()));
        }
        let field = q.u.dom().field();
        let mut v = Vec::with_capacity(ng);
        for x in 0..ng {
            let col = q.v.column(x);
            let support: Vec<_> = linalg::support(&col).collect();
            match support.as_slice() {
                [(k, c)] if **c == field.one() => v.push(*k),
                _ => return Err(Error::Precondition("v does not map group elements to group elements".into())),
            }
        }
        Ok(DoubleMorphismData {
            lambda: q.p.matrix().transpose(),
            omega: q.r.matrix().transpose(),
            theta: q.u.matrix().clone(),
            v,
        })
    }

    /// The quadruple `(u, p, r, v)` of the data between the given doubles.
    pub fn to_quadruple(&self, mp: &MatchedPair, mp2: &MatchedPair) -> Result<Quadruple> {
        let field = self.theta.field();
        let nh = mp2.h().dim();
        let vcols: Vec<_> = self.v.iter().map(|&k| linalg::basis_vector(field, nh, k)).collect();
        Ok(Quadruple {
            u: LinMap::new(mp.a().clone(), mp2.a().clone(), self.theta.clone())?,
            p: LinMap::new(mp.a().clone(), mp2.h().clone(), self.lambda.transpose())?,
            r: LinMap::new(mp.h().clone(), mp2.a().clone(), self.omega.transpose())?,
            v: LinMap::from_columns(mp.h().clone(), mp2.h().clone(), &vcols)?,
        })
    }

    /// Data of the identity of `D(k[G])`: `θ(h, g) = δ(h, g)`,
    /// `λ(g, y) = δ(g, 1) δ(y, 1)`, `ω = 1`, `v = Id`.
    pub fn identity(g: &FiniteGroupTable, field: FieldSpec) -> Self {
        let n = g.order();
        let e = g.identity();
        let mut lambda = Matrix::zeros(field, n, n);
        lambda.set(e, e, field.one());
        let mut omega = Matrix::zeros(field, n, n);
        for x in 0..n {
            for y in 0..n {
                omega.set(x, y, field.one());
            }
        }
        DoubleMorphismData {
            lambda,
            omega,
            theta: Matrix::identity(field, n),
            v: (0..n).collect(),
        }
    }

    pub fn to_json(&self) -> Json {
        let rows = |m: &Matrix| {
            m.to_rows()
                .iter()
                .map(|r| r.iter().map(Scalar::to_json).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        };
        json!({
            "lambda": rows(&self.lambda),
            "omega": rows(&self.omega),
            "theta": rows(&self.theta),
            "v": self.v,
        })
    }

    pub fn from_json(v: &Json, g: &FiniteGroupTable, h: &FiniteGroupTable, field: FieldSpec) -> Result<Self> {
        let (ng, nh) = (g.order(), h.order());
        let table = |key: &str, rows: usize, cols: usize| -> Result<Matrix> {
            let m = v.get(key).ok_or_else(|| Error::Parse(format!("missing \"{key}\"")))?;
            let flat = read_tensor(field, m, &[rows, cols], key)?;
            Matrix::from_rows(field, flat.chunks(cols).map(<[Scalar]>::to_vec).collect())
        };
        let vmap: Vec<usize> = v
            .get("v")
            .and_then(Json::as_array)
            .ok_or_else(|| Error::Parse("missing \"v\"".into()))?
            .iter()
            .map(|x| x.as_u64().map(|k| k as usize).filter(|&k| k < nh))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Parse("\"v\" must list elements of H".into()))?;
        if vmap.len() != ng {
            return Err(Error::Parse("\"v\" must have one entry per element of G".into()));
        }
        Ok(DoubleMorphismData {
            lambda: table("lambda", ng, nh)?,
            omega: table("omega", ng, nh)?,
            theta: table("theta", nh, ng)?,
            v: vmap,
        })
    }

    fn check(&self, c: DoubleCondition, g: &FiniteGroupTable, h: &FiniteGroupTable) -> Option<Vec<usize>> {
        let field = self.theta.field();
        let (ng, nh) = (g.order(), h.order());
        let (one, zero) = (field.one(), field.zero());
        let delta = |b: bool| if b { one.clone() } else { zero.clone() };
        let l = |x: usize, y: usize| self.lambda.get(x, y);
        let w = |x: usize, y: usize| self.omega.get(x, y);
        let t = |y: usize, x: usize| self.theta.get(y, x);
        let (e, eh) = (g.identity(), h.identity());
        let gm = |a: usize, b: usize| g.mul(a, b);
        let hm = |a: usize, b: usize| h.mul(a, b);
        let sum_g = |f: &dyn Fn(usize) -> Scalar| (0..ng).fold(zero.clone(), |acc, x| acc + f(x));
        let sum_h = |f: &dyn Fn(usize) -> Scalar| (0..nh).fold(zero.clone(), |acc, y| acc + f(y));
        let find = |dims: &[usize], holds: &dyn Fn(&[usize]) -> bool| {
            grid(dims).into_iter().find(|p| !holds(p))
        };
        match c {
            DoubleCondition::ThetaUnit => find(&[ng], &|p| *t(eh, p[0]) == delta(p[0] == e)),
            DoubleCondition::ThetaSum => find(&[nh], &|p| sum_g(&|x| t(p[0], x).clone()) == one),
            DoubleCondition::ThetaMultiplicative => find(&[nh, nh, ng], &|p| {
                let (y, y2, x0) = (p[0], p[1], p[2]);
                *t(hm(y, y2), x0) == sum_g(&|x| t(y, x) * t(y2, gm(g.inv(x), x0)))
            }),
            DoubleCondition::OmegaUnit => find(&[nh], &|p| *w(e, p[0]) == one),
            DoubleCondition::OmegaMultiplicative => find(&[ng, nh, nh], &|p| {
                *w(p[0], hm(p[1], p[2])) == w(p[0], p[1]) * w(p[0], p[2])
            }),
            DoubleCondition::LambdaRowSum => {
                find(&[ng], &|p| sum_h(&|y| l(p[0], y).clone()) == delta(p[0] == e))
            }
            DoubleCondition::LambdaColumnSum => {
                find(&[nh], &|p| sum_g(&|x| l(x, p[0]).clone()) == delta(p[0] == eh))
            }
            DoubleCondition::LambdaIdempotent => find(&[ng, ng, nh], &|p| {
                let (x0, x1, y0) = (p[0], p[1], p[2]);
                sum_h(&|y| l(x0, y) * l(x1, hm(h.inv(y), y0))) == delta(x0 == x1) * l(x0, y0)
            }),
            DoubleCondition::LambdaGrouplike => find(&[ng, nh, nh], &|p| {
                let (x0, y0, y1) = (p[0], p[1], p[2]);
                sum_g(&|x| l(x, y0) * l(gm(x0, g.inv(x)), y1)) == delta(y0 == y1) * l(x0, y0)
            }),
            DoubleCondition::ThetaLambdaCommute => find(&[nh, ng, nh], &|p| {
                let (y0, x0, y1) = (p[0], p[1], p[2]);
                sum_g(&|x| t(y0, x) * l(gm(x0, g.inv(x)), y1))
                    == sum_g(&|x| t(y0, x) * l(gm(g.inv(x), x0), y1))
            }),
            DoubleCondition::ThetaLambdaExchange => find(&[ng, ng, nh], &|p| {
                let (x0, x1, y0) = (p[0], p[1], p[2]);
                let lhs = sum_g(&|x| {
                    sum_h(&|y| {
                        l(gm(x0, g.inv(x)), y) * t(y0, x) * t(hm(hm(h.inv(y), y0), y), x1)
                    })
                });
                lhs == delta(x0 == x1) * t(y0, x0)
            }),
            DoubleCondition::OmegaTwisted => find(&[ng, ng, nh], &|p| {
                let (x0, x1, y0) = (p[0], p[1], p[2]);
                let vx = self.v[x0];
                let conj = hm(hm(h.inv(vx), y0), vx);
                w(x0, y0) * w(x1, conj) == *w(gm(x0, x1), y0)
            }),
            DoubleCondition::OmegaThetaExchange => find(&[ng, ng, nh], &|p| {
                let (x0, x1, y0) = (p[0], p[1], p[2]);
                let lhs = sum_g(&|x| {
                    sum_h(&|y| {
                        t(y0, gm(x, g.inv(x0)))
                            * w(x0, hm(hm(h.inv(y), y0), y))
                            * l(gm(gm(x0, x1), g.inv(x)), y)
                    })
                });
                let vx = self.v[x0];
                lhs == w(x0, y0) * t(hm(hm(h.inv(vx), y0), vx), x1)
            }),
            DoubleCondition::LambdaEquivariant => find(&[ng, ng, nh], &|p| {
                let (x0, x1, y0) = (p[0], p[1], p[2]);
                let vx = self.v[x0];
                *l(gm(gm(x0, x1), g.inv(x0)), hm(hm(vx, y0), h.inv(vx))) == *l(x1, y0)
            }),
        }
    }

    /// `ψ(e_g # g') = Σ_{x ∈ G, y, z ∈ H} λ(gx⁻¹, z) ω(g', y) θ(zyz⁻¹, x)
    /// e_{zyz⁻¹} # z v(g')` on the basis `e_a # b` at `a |G| + b`.
    pub fn psi_matrix(&self, g: &FiniteGroupTable, h: &FiniteGroupTable) -> Matrix {
        let field = self.theta.field();
        let (ng, nh) = (g.order(), h.order());
        let mut m = Matrix::zeros(field, nh * nh, ng * ng);
        for eg in 0..ng {
            for g2 in 0..ng {
                let col = eg * ng + g2;
                for x in 0..ng {
                    for y in 0..nh {
                        for z in 0..nh {
                            let c = self.lambda.get(g.mul(eg, g.inv(x)), z)
                                * self.omega.get(g2, y)
                                * self.theta.get(h.mul(h.mul(z, y), h.inv(z)), x);
                            if c.is_zero() {
                                continue;
                            }
                            let row = h.mul(h.mul(z, y), h.inv(z)) * nh + h.mul(z, self.v[g2]);
                            let v = m.get(row, col) + &c;
                            m.set(row, col, v);
                        }
                    }
                }
            }
        }
        m
    }
}

/// Checks every condition on the data; when all hold, assembles `ψ`
/// between `D(k[G])` and `D(k[H])` and verifies it is a Hopf algebra map.
pub fn check_double_morphism_data(
    d: &DoubleMorphismData,
    g: &FiniteGroupTable,
    h: &FiniteGroupTable,
) -> Result<DoubleMorphismReport> {
    let field = d.theta.field();
    let (ng, nh) = (g.order(), h.order());
    let shapes = [
        (&d.lambda, ng, nh, "λ"),
        (&d.omega, ng, nh, "ω"),
        (&d.theta, nh, ng, "θ"),
    ];
    for (m, r, c, name) in shapes {
        if m.rows() != r || m.cols() != c || m.field() != field {
            return Err(Error::Dimension(format!("{name} has the wrong shape or field")));
        }
    }
    if d.v.len() != ng || d.v.iter().any(|&k| k >= nh) {
        return Err(Error::Dimension("v must send each element of G into H".into()));
    }
    for a in 0..ng {
        for b in 0..ng {
            if d.v[g.mul(a, b)] != h.mul(d.v[a], d.v[b]) {
                return Err(Error::Precondition("v is not a group homomorphism".into()));
            }
        }
    }
    let failure = DoubleCondition::ALL
        .iter()
        .find_map(|&c| d.check(c, g, h).map(|idx| (c, idx)));
    if failure.is_some() {
        return Ok(DoubleMorphismReport { failure, psi: None });
    }
    let (_, dg) = drinfeld_double_group(g, field)?;
    let (_, dh) = drinfeld_double_group(h, field)?;
    let psi = LinMap::new(Arc::new(dg), Arc::new(dh), d.psi_matrix(g, h))?;
    if !psi.is_hopf_map() {
        return Err(Error::AxiomViolation(
            "the data satisfy every condition but ψ is not a Hopf algebra map".into(),
        ));
    }
    Ok(DoubleMorphismReport { failure: None, psi: Some(psi) })
}
