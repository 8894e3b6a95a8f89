//! Backtracking enumeration of coalgebra maps out of a basis of grouplikes
//! and skew-primitives.
//!
//! Grouplike basis elements are sent to grouplikes of the codomain and a
//! `(g,h)`-skew-primitive basis element to an element of `P_{f(g),f(h)}`.
//! Over a prime field these candidate sets are finite and the search is
//! exhaustive. Extra constraints prune partial assignments; in
//! multiplicative mode products of assigned basis elements are checked as
//! soon as they can be evaluated and images forced by `b_i b_j = c b_k` are
//! filled in. Every complete assignment is rechecked from scratch.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::HopfAlgebra;
use crate::linalg;

use super::strata::{increment, is_grouplike, skew_primitives, strata, Strata, Stratum};

/// Counter of candidate evaluations shared by the exhaustive searches.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    pub const DEFAULT: u64 = 100_000_000;

    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: AtomicU64::new(0),
        }
    }

    /// Reads `HOPF_SEARCH_BUDGET`, falling back to [`Budget::DEFAULT`].
    pub fn from_env() -> Self {
        let limit = std::env::var("HOPF_SEARCH_BUDGET")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(Self::DEFAULT);
        Budget::new(limit)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    pub fn charge(&self, n: u64) -> Result<()> {
        let before = self.used.fetch_add(n, Ordering::Relaxed);
        if before + n > self.limit {
            Err(Error::BudgetExceeded(self.limit))
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::from_env()
    }
}

/// Images assigned so far, indexed by domain basis element.
pub type Partial = [Option<Vec<Scalar>>];

type Check<'a> = Box<dyn Fn(&Partial, usize) -> bool + 'a>;

pub(crate) fn comultiplicative_at(
    dom: &HopfAlgebra,
    cod: &HopfAlgebra,
    cols: &Partial,
    i: usize,
) -> Option<bool> {
    let field = dom.field();
    let fi = cols[i].as_ref()?;
    let mut rhs = linalg::zeros(field, cod.dim() * cod.dim());
    for (j, k, c) in dom.comul_basis(i) {
        let (fj, fk) = (cols[*j].as_ref()?, cols[*k].as_ref()?);
        linalg::axpy(&mut rhs, c, &linalg::kron(fj, fk, field));
    }
    Some(cod.comul(fi) == rhs)
}

pub(crate) fn multiplicative_at(
    dom: &HopfAlgebra,
    cod: &HopfAlgebra,
    cols: &Partial,
    i: usize,
    j: usize,
) -> Option<bool> {
    let (fi, fj) = (cols[i].as_ref()?, cols[j].as_ref()?);
    let mut lhs = cod.zero();
    for (k, c) in dom.mul_basis(i, j) {
        linalg::axpy(&mut lhs, c, cols[*k].as_ref()?);
    }
    Some(lhs == cod.mul(fi, fj))
}

fn coalgebra_ok(dom: &HopfAlgebra, cod: &HopfAlgebra, cols: &Partial) -> bool {
    (0..dom.dim()).all(|i| {
        cols[i].as_ref().is_some_and(|f| cod.eps(f) == dom.counit()[i])
            && comultiplicative_at(dom, cod, cols, i) == Some(true)
    })
}

fn multiplicative_ok(dom: &HopfAlgebra, cod: &HopfAlgebra, cols: &Partial) -> bool {
    (0..dom.dim())
        .all(|i| (0..dom.dim()).all(|j| multiplicative_at(dom, cod, cols, i, j) == Some(true)))
}

/// Elements `Σ d_i v_i` of a span over a prime field, enumerated lazily.
struct SpanIter {
    basis: Rc<Vec<Vec<Scalar>>>,
    elems: Vec<Scalar>,
    digits: Vec<usize>,
    zero: Vec<Scalar>,
    done: bool,
}

impl Iterator for SpanIter {
    type Item = Vec<Scalar>;
    fn next(&mut self) -> Option<Vec<Scalar>> {
        if self.done {
            return None;
        }
        let mut v = self.zero.clone();
        for (d, b) in self.digits.iter().zip(self.basis.iter()) {
            linalg::axpy(&mut v, &self.elems[*d], b);
        }
        self.done = !increment(&mut self.digits, self.elems.len().max(1));
        Some(v)
    }
}

enum Undo {
    Val(usize),
    Pair(usize),
}

struct State {
    vals: Vec<Option<Vec<Scalar>>>,
    settled: Vec<bool>,
    trail: Vec<Undo>,
}

impl State {
    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                Undo::Val(v) => self.vals[v] = None,
                Undo::Pair(p) => self.settled[p] = false,
            }
        }
    }
}

/// Exhaustive search for coalgebra maps `dom -> cod` with optional
/// constraints. By default the map is unitary.
pub struct MapSearch<'a> {
    dom: &'a HopfAlgebra,
    cod: &'a HopfAlgebra,
    dom_strata: Strata,
    cod_grouplikes: Vec<Vec<Scalar>>,
    order: Vec<usize>,
    preset: Vec<Option<Vec<Scalar>>>,
    multiplicative: bool,
    checks: Vec<Check<'a>>,
    budget: &'a Budget,
    skew_cache: RefCell<HashMap<(Vec<Scalar>, Vec<Scalar>), Rc<Vec<Vec<Scalar>>>>>,
}

impl<'a> MapSearch<'a> {
    pub fn new(dom: &'a HopfAlgebra, cod: &'a HopfAlgebra, budget: &'a Budget) -> Result<Self> {
        if dom.field() != cod.field() {
            return Err(Error::FieldMismatch(dom.field(), cod.field()));
        }
        let dom_strata = strata(dom)
            .ok_or_else(|| Error::StrataUnavailable(format!("{dom:?}")))?;
        let cod_strata = strata(cod)
            .ok_or_else(|| Error::StrataUnavailable(format!("{cod:?}")))?;
        let cod_grouplikes = cod_strata
            .grouplikes()
            .into_iter()
            .map(|i| cod.basis(i))
            .collect();
        let mut order = dom_strata.grouplikes();
        order.extend((0..dom.dim()).filter(|i| dom_strata.kinds[*i] != Stratum::Grouplike));
        let mut preset = vec![None; dom.dim()];
        preset[dom_strata.unit] = Some(cod.unit());
        Ok(MapSearch {
            dom,
            cod,
            dom_strata,
            cod_grouplikes,
            order,
            preset,
            multiplicative: false,
            checks: Vec::new(),
            budget,
            skew_cache: RefCell::new(HashMap::new()),
        })
    }

    /// Fixes the image of basis element `i`.
    pub fn preset(mut self, i: usize, image: Vec<Scalar>) -> Self {
        self.preset[i] = Some(image);
        self
    }

    /// Restricts to maps that are also multiplicative.
    pub fn multiplicative(mut self) -> Self {
        self.multiplicative = true;
        self
    }

    /// Adds a constraint evaluated whenever basis element `i` receives an
    /// image. It must return `true` when it cannot be evaluated yet; it is
    /// evaluated once more for every `i` on each complete assignment.
    pub fn check(mut self, f: impl Fn(&Partial, usize) -> bool + 'a) -> Self {
        self.checks.push(Box::new(f));
        self
    }

    /// Visits every solution as its list of column images; stop by
    /// returning `false` from `visit`.
    pub fn for_each(&self, mut visit: impl FnMut(Vec<Vec<Scalar>>) -> bool) -> Result<()> {
        let d = self.dom.dim();
        let mut st = State {
            vals: vec![None; d],
            settled: vec![false; d * d],
            trail: Vec::new(),
        };
        for (i, p) in self.preset.iter().enumerate() {
            if let Some(v) = p {
                if v.len() != self.cod.dim() {
                    return Err(Error::Dimension("preset image has the wrong length".into()));
                }
                if !self.assign(&mut st, i, v.clone()) {
                    return Ok(());
                }
            }
        }
        if !self.propagate(&mut st) {
            return Ok(());
        }
        let mut stop = false;
        self.dfs(&mut st, &mut visit, &mut stop)
    }

    pub fn collect(&self) -> Result<Vec<Vec<Vec<Scalar>>>> {
        let mut out = Vec::new();
        self.for_each(|cols| {
            out.push(cols);
            true
        })?;
        Ok(out)
    }

    fn dfs(
        &self,
        st: &mut State,
        visit: &mut dyn FnMut(Vec<Vec<Scalar>>) -> bool,
        stop: &mut bool,
    ) -> Result<()> {
        let Some(&var) = self.order.iter().find(|&&v| st.vals[v].is_none()) else {
            if self.complete_ok(&st.vals) {
                let cols = st.vals.iter().map(|v| v.clone().unwrap()).collect();
                if !visit(cols) {
                    *stop = true;
                }
            }
            return Ok(());
        };
        for value in self.domain(st, var)? {
            self.budget.charge(1)?;
            let mark = st.trail.len();
            if self.assign(st, var, value) && self.propagate(st) {
                self.dfs(st, visit, stop)?;
            }
            st.undo(mark);
            if *stop {
                break;
            }
        }
        Ok(())
    }

    fn domain(&self, st: &State, var: usize) -> Result<Box<dyn Iterator<Item = Vec<Scalar>>>> {
        match self.dom_strata.kinds[var] {
            Stratum::Grouplike => Ok(Box::new(self.cod_grouplikes.clone().into_iter())),
            Stratum::SkewPrimitive { left, right } => {
                let (Some(g), Some(h)) = (&st.vals[left], &st.vals[right]) else {
                    return Err(Error::InvalidParameter(
                        "skew-primitive visited before its grouplikes".into(),
                    ));
                };
                let basis = self.skew_space(g, h)?;
                let field = self.dom.field();
                if basis.is_empty() {
                    return Ok(Box::new(std::iter::once(self.cod.zero())));
                }
                let elems = field.elements().ok_or_else(|| {
                    Error::InfiniteFamily(format!(
                        "image of {} ranges over a {}-dimensional space over {field}",
                        self.dom.labels()[var],
                        basis.len()
                    ))
                })?;
                let n = basis.len();
                Ok(Box::new(SpanIter {
                    basis,
                    elems,
                    digits: vec![0; n],
                    zero: self.cod.zero(),
                    done: false,
                }))
            }
        }
    }

    fn skew_space(&self, g: &[Scalar], h: &[Scalar]) -> Result<Rc<Vec<Vec<Scalar>>>> {
        let key = (g.to_vec(), h.to_vec());
        if let Some(b) = self.skew_cache.borrow().get(&key) {
            return Ok(b.clone());
        }
        let b = Rc::new(skew_primitives(self.cod, g, h)?);
        self.skew_cache.borrow_mut().insert(key, b.clone());
        Ok(b)
    }

    fn assign(&self, st: &mut State, var: usize, value: Vec<Scalar>) -> bool {
        if let Some(old) = &st.vals[var] {
            return *old == value;
        }
        st.vals[var] = Some(value);
        st.trail.push(Undo::Val(var));
        self.member_ok(st, var) && self.checks.iter().all(|c| c(&st.vals, var))
    }

    fn member_ok(&self, st: &State, var: usize) -> bool {
        let x = st.vals[var].as_ref().unwrap();
        match self.dom_strata.kinds[var] {
            Stratum::Grouplike => var == self.dom_strata.unit || is_grouplike(self.cod, x),
            Stratum::SkewPrimitive { left, right } => {
                match (&st.vals[left], &st.vals[right]) {
                    (Some(g), Some(h)) => {
                        let field = self.cod.field();
                        let mut rhs = linalg::kron(x, g, field);
                        linalg::axpy(&mut rhs, &field.one(), &linalg::kron(h, x, field));
                        self.cod.comul(x) == rhs
                    }
                    _ => true,
                }
            }
        }
    }

    /// Checks and forces products until nothing changes.
    fn propagate(&self, st: &mut State) -> bool {
        if !self.multiplicative {
            return true;
        }
        let d = self.dom.dim();
        loop {
            let mut changed = false;
            for p in 0..d * d {
                let (i, j) = (p / d, p % d);
                if st.settled[p] || st.vals[i].is_none() || st.vals[j].is_none() {
                    continue;
                }
                let terms = self.dom.mul_basis(i, j);
                let missing: Vec<&(usize, Scalar)> =
                    terms.iter().filter(|(k, _)| st.vals[*k].is_none()).collect();
                match missing.len() {
                    0 => {
                        if multiplicative_at(self.dom, self.cod, &st.vals, i, j) != Some(true) {
                            return false;
                        }
                    }
                    1 => {
                        let (k, c) = missing[0].clone();
                        let mut forced =
                            self.cod.mul(st.vals[i].as_ref().unwrap(), st.vals[j].as_ref().unwrap());
                        for (l, cl) in terms {
                            if *l != k {
                                linalg::axpy(&mut forced, &-cl, st.vals[*l].as_ref().unwrap());
                            }
                        }
                        let forced = linalg::scale(&c.inv().expect("nonzero"), &forced);
                        if !self.assign(st, k, forced) {
                            return false;
                        }
                        changed = true;
                    }
                    _ => continue,
                }
                st.settled[p] = true;
                st.trail.push(Undo::Pair(p));
            }
            if !changed {
                return true;
            }
        }
    }

    fn complete_ok(&self, cols: &Partial) -> bool {
        coalgebra_ok(self.dom, self.cod, cols)
            && (!self.multiplicative || multiplicative_ok(self.dom, self.cod, cols))
            && (0..self.dom.dim()).all(|i| self.checks.iter().all(|c| c(cols, i)))
    }
}

/// All unitary coalgebra maps `dom -> cod` from the stratified family.
pub fn unitary_coalgebra_maps(
    dom: &HopfAlgebra,
    cod: &HopfAlgebra,
    budget: &Budget,
) -> Result<Vec<Vec<Vec<Scalar>>>> {
    MapSearch::new(dom, cod, budget)?.collect()
}

/// Independent oracle: every matrix over a small prime field, filtered by
/// the unitary coalgebra-map identities. Columns are filled in order and
/// an identity is tested as soon as all columns it involves are known.
/// Limited to `dim(dom)·dim(cod) ≤ 16` and `p ≤ 5`.
pub fn exhaustive_unitary_coalgebra_maps(
    dom: &HopfAlgebra,
    cod: &HopfAlgebra,
    budget: &Budget,
) -> Result<Vec<Vec<Vec<Scalar>>>> {
    let field = dom.field();
    let p = match field.size() {
        Some(p) if p <= 5 => p,
        _ => {
            return Err(Error::InvalidParameter(
                "exhaustive enumeration needs F_3 or F_5".into(),
            ))
        }
    };
    if dom.dim() * cod.dim() > 16 {
        return Err(Error::InvalidParameter("exhaustive enumeration limited to 16 entries".into()));
    }
    let unit = dom
        .unit_index()
        .ok_or_else(|| Error::InvalidParameter("domain unit is not a basis vector".into()))?;
    let d = dom.dim();
    let deps: Vec<usize> = (0..d)
        .map(|i| {
            dom.comul_basis(i)
                .iter()
                .flat_map(|(j, k, _)| [*j, *k])
                .chain([i])
                .max()
                .unwrap()
        })
        .collect();
    let elems = field.elements().unwrap();
    let mut columns: Vec<Vec<Scalar>> = Vec::new();
    let mut digits = vec![0usize; cod.dim()];
    loop {
        columns.push(digits.iter().map(|&k| elems[k].clone()).collect());
        if !increment(&mut digits, p as usize) {
            break;
        }
    }
    let mut out = Vec::new();
    let mut cols: Vec<Option<Vec<Scalar>>> = vec![None; d];
    fn rec(
        j: usize,
        dom: &HopfAlgebra,
        cod: &HopfAlgebra,
        unit: usize,
        deps: &[usize],
        columns: &[Vec<Scalar>],
        cols: &mut Vec<Option<Vec<Scalar>>>,
        out: &mut Vec<Vec<Vec<Scalar>>>,
        budget: &Budget,
    ) -> Result<()> {
        if j == dom.dim() {
            out.push(cols.iter().map(|c| c.clone().unwrap()).collect());
            return Ok(());
        }
        let candidates: Vec<Vec<Scalar>> = if j == unit {
            vec![cod.unit()]
        } else {
            columns.to_vec()
        };
        for c in candidates {
            budget.charge(1)?;
            if cod.eps(&c) != dom.counit()[j] {
                continue;
            }
            cols[j] = Some(c);
            let ok = (0..dom.dim())
                .filter(|&i| deps[i] == j)
                .all(|i| comultiplicative_at(dom, cod, cols, i) == Some(true));
            if ok {
                rec(j + 1, dom, cod, unit, deps, columns, cols, out, budget)?;
            }
            cols[j] = None;
        }
        Ok(())
    }
    rec(0, dom, cod, unit, &deps, &columns, &mut cols, &mut out, budget)?;
    out.sort();
    Ok(out)
}
