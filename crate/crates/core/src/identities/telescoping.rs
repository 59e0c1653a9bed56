//! Independent re-derivation of the weighted sums: each summand is checked
//! against a difference (or alternating sum) of a kernel sequence, and the
//! theorem's two sides against the telescoped and boundary forms.

use super::env::{Env, EvalResult};
use super::registry::*;
use super::{cases, find, make_env, run_cases, CaseResult, CheckError, CheckReport, Grid, ParamAssignment};
use crate::sequences::{telescope_closed_form, telescope_sum, AbstractSequence};

type Term = fn(&Env, i64) -> EvalResult;

#[derive(Clone, Copy)]
pub struct TelescopeRoute {
    pub theorem: &'static str,
    /// Pointwise statement that makes the summand telescope.
    pub lemma: &'static str,
    pub signed: bool,
    summand: Term,
    kernel: Term,
}

impl std::fmt::Debug for TelescopeRoute {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TelescopeRoute({} via {})", self.theorem, self.lemma)
    }
}

fn kernel_u_weighted(e: &Env, k: i64) -> EvalResult {
    Ok(e.y() * e.rp(e.n - k + 1)? * e.xp(k)? * e.u(k)?)
}

fn kernel_v_weighted(e: &Env, k: i64) -> EvalResult {
    Ok(e.y() * e.rp(e.n - k + 1)? * e.xp(k)? * e.v(k)?)
}

fn kernel_u_alt(e: &Env, k: i64) -> EvalResult {
    Ok(e.y() * e.rp(k)? * e.xp(e.n - k + 1)? * e.u(k)?)
}

fn kernel_v_alt(e: &Env, k: i64) -> EvalResult {
    Ok(e.y() * e.rp(k)? * e.xp(e.n - k + 1)? * e.v(k)?)
}

fn kernel_cheb_u(e: &Env, k: i64) -> EvalResult {
    Ok(e.y() * e.rp(e.n - k + 1)? * e.xp(k)? * e.cheb_u(k - 1)?)
}

fn kernel_cheb_t(e: &Env, k: i64) -> EvalResult {
    Ok(e.y() * e.rp(e.n - k + 1)? * e.xp(k)? * e.cheb_t(k - 1)?)
}

fn kernel_jac(e: &Env, k: i64) -> EvalResult {
    Ok(e.rp(e.n - k + 1)? * e.xp(k)? * e.jac(k)?)
}

fn kernel_jac_lucas(e: &Env, k: i64) -> EvalResult {
    Ok(e.rp(e.n - k + 1)? * e.xp(k)? * e.jac_lucas(k)?)
}

pub fn routes() -> Vec<TelescopeRoute> {
    let r = |theorem, lemma, signed, summand: Term, kernel: Term| TelescopeRoute {
        theorem,
        lemma,
        signed,
        summand,
        kernel,
    };
    vec![
        r("THM1-A", "LEM2-A", false, thm1_a_term, kernel_u_weighted),
        r("THM1-B", "LEM2-B", false, thm1_b_term, kernel_v_weighted),
        r("THM1-A-NEG", "LEM2-A", true, thm1_a_neg_term, kernel_u_weighted),
        r("THM1-B-NEG", "LEM2-B", true, thm1_b_neg_term, kernel_v_weighted),
        r("THM2-A", "LEM3-A", true, thm2_a_term, kernel_u_alt),
        r("THM2-B", "LEM3-B", true, thm2_b_term, kernel_v_alt),
        r("CHEB-THM-A", "CHEB-LEM-A", false, cheb_a_term, kernel_cheb_u),
        r("CHEB-THM-B", "CHEB-LEM-B", false, cheb_b_term, kernel_cheb_t),
        r("JAC-A", "LEM2-A", false, jac_a_term, kernel_jac),
        r("JAC-B", "LEM2-B", false, jac_b_term, kernel_jac_lucas),
    ]
}

pub fn route(theorem: &str) -> Result<TelescopeRoute, CheckError> {
    routes()
        .into_iter()
        .find(|r| r.theorem.eq_ignore_ascii_case(theorem))
        .ok_or_else(|| CheckError::UnknownIdentity(theorem.to_string()))
}

/// Re-derives one case. On success both sides of the result are the
/// telescoped value; otherwise they show the first disagreement found.
pub fn reprove_case(route: &TelescopeRoute, a: &ParamAssignment) -> Result<CaseResult, CheckError> {
    let rec = find(route.theorem)?;
    let env = make_env(rec, a)?;
    let (c, n) = (env.c, env.n);
    let f = AbstractSequence::new(c..=n + 1, |k| (route.kernel)(&env, k));
    for k in c..=n {
        let term = (route.summand)(&env, k)?;
        let diff = if route.signed { Env::sgn(k) * (f.at(k + 1)? + f.at(k)?) } else { f.at(k + 1)? - f.at(k)? };
        if term != diff {
            return Ok(CaseResult { lhs: term, rhs: diff });
        }
    }
    let folded = telescope_sum(&f, c, n, route.signed)?;
    let boundary = telescope_closed_form(&f, c, n, route.signed)?;
    let lhs = (rec.lhs)(&env)?;
    if lhs != folded {
        return Ok(CaseResult { lhs, rhs: folded });
    }
    let rhs = (rec.rhs)(&env)?;
    if rhs != boundary {
        return Ok(CaseResult { lhs: boundary, rhs });
    }
    Ok(CaseResult { lhs: folded, rhs: boundary })
}

pub fn reprove_grid(route: &TelescopeRoute, grid: &Grid) -> Result<CheckReport, CheckError> {
    let rec = find(route.theorem)?;
    let cs = cases(rec, grid);
    Ok(run_cases(rec.id, &cs, |a| reprove_case(route, a)))
}
