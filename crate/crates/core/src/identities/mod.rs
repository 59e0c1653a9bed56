//! Registered identities and the machinery that checks them over
//! parameter grids, symbolically and at sampled rational points.

mod env;
mod registry;
mod report;
mod telescoping;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::ring::{Ctx, RingElem, Var};
use crate::sequences::SeqError;

pub use env::{Env, EvalResult};
pub use registry::{find, registry};
pub use report::{records_csv, records_json, records_text, reports_csv, reports_json, reports_text};
pub use telescoping::{reprove_case, reprove_grid, route, routes, TelescopeRoute};

/// One side of an identity.
pub type Side = Arc<dyn Fn(&Env) -> EvalResult + Send + Sync>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("unknown identity '{0}'")]
    UnknownIdentity(String),
    #[error("outside the domain: {0}")]
    Domain(String),
    #[error(transparent)]
    Seq(#[from] SeqError),
}

impl From<crate::ring::RingError> for CheckError {
    fn from(e: crate::ring::RingError) -> Self {
        CheckError::Seq(e.into())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Parity {
    Any,
    Odd,
    Even,
}

impl Parity {
    pub fn admits(self, m: i64) -> bool {
        match self {
            Parity::Any => true,
            Parity::Odd => m.rem_euclid(2) == 1,
            Parity::Even => m.rem_euclid(2) == 0,
        }
    }
}

/// A finite sum over `k` up to `n`, or a pointwise statement in `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Shape {
    Sum,
    Point,
}

/// Range of `n`: either relative to `c` or absolute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NRange {
    FromC(i64, i64),
    Fixed(i64, i64),
}

#[derive(Clone)]
pub struct IdentityRecord {
    pub id: &'static str,
    /// Human-readable origin of the statement.
    pub source: &'static str,
    /// ASCII rendering of the identity as checked.
    pub statement: &'static str,
    pub shape: Shape,
    /// Sums start at `c` (and pointwise statements take a second index
    /// `c`) instead of `0`.
    pub uses_c: bool,
    /// `None` when the statement has no `m` parameter.
    pub m: Option<Parity>,
    pub free_vars: Vec<Var>,
    pub ext: Option<i64>,
    pub n_range: NRange,
    pub lhs: Side,
    pub rhs: Side,
}

impl fmt::Debug for IdentityRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityRecord").field("id", &self.id).finish_non_exhaustive()
    }
}

impl IdentityRecord {
    pub fn ctx(&self) -> Ctx {
        match self.ext {
            Some(d) => Ctx::with_ext(d),
            None => Ctx::RATIONAL,
        }
    }

    /// Negative powers appear once indices or exponents can go below zero.
    pub fn needs_laurent(&self) -> bool {
        !self.free_vars.is_empty() && (self.uses_c || self.shape == Shape::Point)
    }

    pub fn domain(&self) -> String {
        let mut parts = Vec::new();
        match self.shape {
            Shape::Sum if self.uses_c => parts.push("n >= c - 1".into()),
            Shape::Sum => parts.push("n >= -1".into()),
            Shape::Point if self.uses_c => parts.push("n, c in Z".into()),
            Shape::Point => parts.push("n in Z".into()),
        }
        match self.m {
            Some(Parity::Odd) => parts.push("m odd".into()),
            Some(Parity::Even) => parts.push("m even".into()),
            Some(Parity::Any) => parts.push("m in Z".into()),
            None => {}
        }
        if !self.free_vars.is_empty() {
            let vs: Vec<_> = self.free_vars.iter().map(|v| v.name()).collect();
            parts.push(format!("{} nonzero", vs.join(",")));
        }
        if let Some(d) = self.ext {
            parts.push(format!("w^2 = {d}"));
        }
        if self.needs_laurent() {
            parts.push("Laurent".into());
        }
        parts.join("; ")
    }

    /// Copy of this record with replaced sides.
    pub fn with_sides(&self, lhs: Side, rhs: Side) -> Self {
        IdentityRecord { lhs, rhs, ..self.clone() }
    }

    fn default_n(&self, c: i64) -> (i64, i64) {
        match self.n_range {
            NRange::FromC(lo, hi) => (c + lo, c + hi),
            NRange::Fixed(lo, hi) => (lo, hi),
        }
    }

    fn admits(&self, n: i64, c: i64, m: i64) -> bool {
        (self.shape == Shape::Point || n >= c - 1) && self.m.is_none_or(|p| p.admits(m))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Binding {
    Symbolic,
    Value(RingElem),
}

impl fmt::Display for Binding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Binding::Symbolic => f.write_str("sym"),
            Binding::Value(v) => f.write_str(&v.render()),
        }
    }
}

/// Concrete indices plus a binding per free variable. Unbound free
/// variables stay symbolic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamAssignment {
    pub n: i64,
    pub c: i64,
    pub m: i64,
    pub bindings: BTreeMap<Var, Binding>,
}

impl ParamAssignment {
    pub fn new(n: i64) -> Self {
        ParamAssignment { n, c: 0, m: 0, bindings: BTreeMap::new() }
    }

    pub fn c(mut self, c: i64) -> Self {
        self.c = c;
        self
    }

    pub fn m(mut self, m: i64) -> Self {
        self.m = m;
        self
    }

    pub fn bind(mut self, v: Var, value: impl Into<RingElem>) -> Self {
        self.bindings.insert(v, Binding::Value(value.into()));
        self
    }
}

impl fmt::Display for ParamAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} c={} m={}", self.n, self.c, self.m)?;
        for (v, b) in &self.bindings {
            write!(f, " {v}={b}")?;
        }
        Ok(())
    }
}

/// Both sides of one evaluated case.
#[derive(Clone, Debug)]
pub struct CaseResult {
    pub lhs: RingElem,
    pub rhs: RingElem,
}

impl CaseResult {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub params: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub attempted: usize,
    pub passed: usize,
    pub failures: Vec<Failure>,
    pub millis: u64,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.passed == self.attempted
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    Symbolic,
    Numeric,
    #[default]
    Both,
}

/// Which cases to run. Fields left `None` fall back to each record's
/// defaults.
#[derive(Clone, Debug)]
pub struct Grid {
    pub n: Option<NRange>,
    pub c: (i64, i64),
    pub m: (i64, i64),
    pub mode: Mode,
    /// Random points per grid point in numeric mode.
    pub samples: usize,
    pub seed: u64,
    /// Explicit choices for free variables; these take part in the product
    /// and are never resampled.
    pub overrides: BTreeMap<Var, Vec<Binding>>,
}

impl Default for Grid {
    fn default() -> Self {
        Grid { n: None, c: (-3, 3), m: (-4, 6), mode: Mode::Both, samples: 3, seed: 0x5eed, overrides: BTreeMap::new() }
    }
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf29ce484222325, |h, b| (h ^ b as u64).wrapping_mul(0x100000001b3))
}

fn random_rational(rng: &mut impl Rng) -> RingElem {
    let mut num = 0;
    while num == 0 {
        num = rng.gen_range(-12i64..=12);
    }
    let den = rng.gen_range(1i64..=7);
    RingElem::from(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

/// Every case the grid produces for `rec`, in a fixed order.
pub fn cases(rec: &IdentityRecord, grid: &Grid) -> Vec<ParamAssignment> {
    let mut rng = ChaCha8Rng::seed_from_u64(grid.seed ^ fnv1a(rec.id));
    let cs: Vec<i64> = if rec.uses_c { (grid.c.0..=grid.c.1).collect() } else { vec![0] };
    let ms: Vec<i64> = match rec.m {
        Some(p) => (grid.m.0..=grid.m.1).filter(|&m| p.admits(m)).collect(),
        None => vec![0],
    };
    let fixed: Vec<Var> = rec.free_vars.iter().copied().filter(|v| grid.overrides.contains_key(v)).collect();
    let open: Vec<Var> = rec.free_vars.iter().copied().filter(|v| !grid.overrides.contains_key(v)).collect();

    let mut combos: Vec<BTreeMap<Var, Binding>> = vec![BTreeMap::new()];
    for v in &fixed {
        combos = combos
            .into_iter()
            .flat_map(|base| {
                grid.overrides[v].iter().map(move |b| {
                    let mut next = base.clone();
                    next.insert(*v, b.clone());
                    next
                })
            })
            .collect();
    }

    let mut out = Vec::new();
    for &c in &cs {
        let (lo, hi) = match grid.n {
            Some(NRange::FromC(a, b)) => (c + a, c + b),
            Some(NRange::Fixed(a, b)) => (a, b),
            None => rec.default_n(c),
        };
        for n in lo..=hi {
            for &m in &ms {
                if !rec.admits(n, c, m) {
                    continue;
                }
                for combo in &combos {
                    let base = ParamAssignment { n, c, m, bindings: combo.clone() };
                    if open.is_empty() {
                        out.push(base);
                        continue;
                    }
                    if grid.mode != Mode::Numeric {
                        let mut a = base.clone();
                        for v in &open {
                            a.bindings.insert(*v, Binding::Symbolic);
                        }
                        out.push(a);
                    }
                    if grid.mode != Mode::Symbolic {
                        for _ in 0..grid.samples {
                            let mut a = base.clone();
                            for v in &open {
                                a.bindings.insert(*v, Binding::Value(random_rational(&mut rng)));
                            }
                            out.push(a);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Environment for one case of `rec`.
pub fn make_env(rec: &IdentityRecord, a: &ParamAssignment) -> Result<Env, CheckError> {
    let (c, m) = (if rec.uses_c { a.c } else { 0 }, if rec.m.is_some() { a.m } else { 0 });
    if !rec.admits(a.n, c, m) {
        return Err(CheckError::Domain(format!("{} does not admit {a}", rec.id)));
    }
    let ctx = rec.ctx();
    let mut vals = Var::ALL.map(|v| ctx.var(v));
    for (v, b) in &a.bindings {
        if !rec.free_vars.contains(v) {
            return Err(CheckError::Domain(format!("{} has no free variable {v}", rec.id)));
        }
        if let Binding::Value(e) = b {
            let joint = ctx.unify(e.ctx()).map_err(|e| CheckError::Domain(e.to_string()))?;
            if e.is_zero() {
                return Err(CheckError::Domain(format!("{v} must be nonzero")));
            }
            vals[v.index()] = e.clone().in_ctx(joint);
        }
    }
    Ok(Env::new(ctx, a.n, c, m, vals))
}

pub fn check_record_case(rec: &IdentityRecord, a: &ParamAssignment) -> Result<CaseResult, CheckError> {
    let env = make_env(rec, a)?;
    let lhs = (rec.lhs)(&env)?;
    let rhs = (rec.rhs)(&env)?;
    Ok(CaseResult { lhs, rhs })
}

pub fn check_case(id: &str, a: &ParamAssignment) -> Result<CaseResult, CheckError> {
    check_record_case(find(id)?, a)
}

/// Evaluates a batch of cases in parallel, keeping the input order in the
/// report. Evaluation errors count as failures.
pub(crate) fn run_cases(
    id: &str,
    cases: &[ParamAssignment],
    eval: impl Fn(&ParamAssignment) -> Result<CaseResult, CheckError> + Sync,
) -> CheckReport {
    let start = Instant::now();
    let results: Vec<Option<Failure>> = cases
        .par_iter()
        .map(|a| match eval(a) {
            Ok(r) if r.holds() => None,
            Ok(r) => Some(Failure { params: a.to_string(), lhs: r.lhs.render(), rhs: r.rhs.render() }),
            Err(e) => Some(Failure { params: a.to_string(), lhs: format!("error: {e}"), rhs: String::new() }),
        })
        .collect();
    let failures: Vec<Failure> = results.into_iter().flatten().collect();
    CheckReport {
        id: id.to_string(),
        attempted: cases.len(),
        passed: cases.len() - failures.len(),
        failures,
        millis: start.elapsed().as_millis() as u64,
    }
}

pub fn check_record_grid(rec: &IdentityRecord, grid: &Grid) -> CheckReport {
    let cs = cases(rec, grid);
    run_cases(rec.id, &cs, |a| check_record_case(rec, a))
}

pub fn check_grid(id: &str, grid: &Grid) -> Result<CheckReport, CheckError> {
    Ok(check_record_grid(find(id)?, grid))
}

/// Every registered identity over `grid`, in registry order.
pub fn check_all(grid: &Grid) -> Vec<CheckReport> {
    registry().par_iter().map(|rec| check_record_grid(rec, grid)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> RingElem {
        RingElem::from(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn edgar_spot_value() {
        let r = check_case("EDG-1", &ParamAssignment::new(3).bind(Var::X, 2)).unwrap();
        assert!(r.holds());
        assert_eq!(r.lhs, RingElem::from(48));
    }

    #[test]
    fn alternating_spot_value() {
        let a = ParamAssignment::new(2).bind(Var::Y, 1).bind(Var::X, 3);
        let r = check_case("PROP3-F", &a).unwrap();
        assert!(r.holds());
        assert_eq!(r.rhs, RingElem::from(2));
    }

    #[test]
    fn jacobsthal_spot_value() {
        let a = ParamAssignment::new(2).c(0).bind(Var::R, 1).bind(Var::X, 1);
        let r = check_case("JAC-A", &a).unwrap();
        assert!(r.holds());
        assert_eq!(r.lhs, RingElem::from(3));
    }

    #[test]
    fn chebyshev_spot_value() {
        let a = ParamAssignment::new(2).c(0).bind(Var::R, 1).bind(Var::X, 1).bind(Var::Y, 2);
        let r = check_case("CHEB-THM-A", &a).unwrap();
        assert!(r.holds());
        assert_eq!(r.lhs, RingElem::from(30));
    }

    #[test]
    fn thm1_grid_size() {
        let grid = Grid { n: Some(NRange::FromC(-1, 8)), mode: Mode::Symbolic, ..Grid::default() };
        let rep = check_grid("THM1-A", &grid).unwrap();
        assert_eq!(rep.attempted, 70);
        assert!(rep.ok(), "{:?}", rep.failures);
    }

    #[test]
    fn parity_filter() {
        let grid = Grid { n: Some(NRange::Fixed(0, 6)), m: (1, 5), mode: Mode::Symbolic, ..Grid::default() };
        let rep = check_grid("PROP4-FO", &grid).unwrap();
        assert_eq!(rep.attempted, 21);
        assert!(rep.ok());
    }

    #[test]
    fn overrides_form_a_product() {
        let mut grid = Grid { n: Some(NRange::Fixed(0, 10)), ..Grid::default() };
        grid.overrides
            .insert(Var::X, vec![Binding::Value((-2).into()), Binding::Value(q(1, 3)), Binding::Value(7.into())]);
        let rep = check_grid("COR6-F", &grid).unwrap();
        assert_eq!(rep.attempted, 33);
        assert!(rep.ok());
    }

    #[test]
    fn empty_grid() {
        let grid = Grid { n: Some(NRange::Fixed(5, 2)), ..Grid::default() };
        let rep = check_grid("EDG-1", &grid).unwrap();
        assert_eq!((rep.attempted, rep.passed), (0, 0));
    }

    #[test]
    fn unknown_and_domain_errors() {
        assert!(matches!(check_case("NOPE", &ParamAssignment::new(0)), Err(CheckError::UnknownIdentity(_))));
        let a = ParamAssignment::new(2).m(2);
        assert!(matches!(check_case("PROP4-FO", &a), Err(CheckError::Domain(_))));
        let a = ParamAssignment::new(-5);
        assert!(matches!(check_case("EDG-1", &a), Err(CheckError::Domain(_))));
        let a = ParamAssignment::new(1).bind(Var::Z, 3);
        assert!(matches!(check_case("EDG-1", &a), Err(CheckError::Domain(_))));
    }

    #[test]
    fn corrupted_rhs_is_caught() {
        let rec = find("EDG-1").unwrap();
        let rhs = rec.rhs.clone();
        let bad = rec.with_sides(rec.lhs.clone(), Arc::new(move |e: &Env| Ok(-rhs(e)?)));
        let rep = check_record_grid(&bad, &Grid::default());
        assert!(rep.attempted > 0);
        assert!(!rep.failures.is_empty());
    }

    #[test]
    fn sampling_is_seeded() {
        let rec = find("THM1-B").unwrap();
        let g = Grid { mode: Mode::Numeric, ..Grid::default() };
        assert_eq!(cases(rec, &g), cases(rec, &g));
        let g2 = Grid { seed: 7, ..g.clone() };
        assert_ne!(cases(rec, &g), cases(rec, &g2));
    }

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = registry().iter().map(|r| r.id).collect();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }
}
