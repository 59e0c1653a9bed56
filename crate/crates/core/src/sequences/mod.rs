//! Lucas sequences `u_n(y, z)`, `v_n(y, z)`, Chebyshev polynomials and their
//! named specializations, for every integer index, over any ring context.
//!
//! Negative indices come from running the recurrence backwards with exact
//! division by `z`, so the same code serves symbolic and numeric arguments.

mod binet;
mod fast;
mod telescope;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::ring::{Ctx, RingElem, RingError, Var};

pub use binet::{binet_value, BinetContext};
pub use telescope::{telescope_closed_form, telescope_sum, AbstractSequence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("z = {0} is not invertible, negative indices are undefined")]
    NotInvertible(String),
    #[error("{0} needs an argument")]
    MissingArgument(SeqKind),
    #[error("{0} takes no argument")]
    UnexpectedArgument(SeqKind),
    #[error("y^2 - 4z = 0: the characteristic roots coincide")]
    DegenerateDiscriminant,
    #[error("index window error: {0}")]
    Window(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Arguments `(y, z)` of the recurrence `a_n = y a_{n-1} - z a_{n-2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqParams {
    pub y: RingElem,
    pub z: RingElem,
}

impl SeqParams {
    pub fn new(y: impl Into<RingElem>, z: impl Into<RingElem>) -> Self {
        SeqParams { y: y.into(), z: z.into() }
    }

    /// Free generators `y` and `z`.
    pub fn symbolic(ctx: Ctx) -> Self {
        SeqParams { y: ctx.var(Var::Y), z: ctx.var(Var::Z) }
    }

    fn integers(&self) -> Option<(BigInt, BigInt)> {
        Some((self.y.as_integer()?, self.z.as_integer()?))
    }

    fn check(&self) -> Result<(), SeqError> {
        self.y.checked_add(&self.z)?;
        Ok(())
    }
}

/// Which sequence to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeqKind {
    LucasU,
    LucasV,
    ChebT,
    ChebU,
    Fibonacci,
    Lucas,
    Pell,
    PellLucas,
    Jacobsthal,
    JacobsthalLucas,
    FibonacciPoly,
    LucasPoly,
}

/// First or second kind Lucas sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LucasKind {
    U,
    V,
}

impl SeqKind {
    pub const ALL: [SeqKind; 12] = [
        SeqKind::LucasU,
        SeqKind::LucasV,
        SeqKind::ChebT,
        SeqKind::ChebU,
        SeqKind::Fibonacci,
        SeqKind::Lucas,
        SeqKind::Pell,
        SeqKind::PellLucas,
        SeqKind::Jacobsthal,
        SeqKind::JacobsthalLucas,
        SeqKind::FibonacciPoly,
        SeqKind::LucasPoly,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeqKind::LucasU => "lucasu",
            SeqKind::LucasV => "lucasv",
            SeqKind::ChebT => "chebt",
            SeqKind::ChebU => "chebu",
            SeqKind::Fibonacci => "fibonacci",
            SeqKind::Lucas => "lucas",
            SeqKind::Pell => "pell",
            SeqKind::PellLucas => "pelllucas",
            SeqKind::Jacobsthal => "jacobsthal",
            SeqKind::JacobsthalLucas => "jacobsthallucas",
            SeqKind::FibonacciPoly => "fibonaccipoly",
            SeqKind::LucasPoly => "lucaspoly",
        }
    }

    /// Polynomial families take their argument from the caller.
    pub fn takes_argument(self) -> bool {
        matches!(self, SeqKind::ChebT | SeqKind::ChebU | SeqKind::FibonacciPoly | SeqKind::LucasPoly)
    }

    /// Integer sequences: fixed integer `(y, z)`.
    pub fn integer_params(self) -> Option<(LucasKind, i64, i64)> {
        match self {
            SeqKind::Fibonacci => Some((LucasKind::U, 1, -1)),
            SeqKind::Lucas => Some((LucasKind::V, 1, -1)),
            SeqKind::Pell => Some((LucasKind::U, 2, -1)),
            SeqKind::PellLucas => Some((LucasKind::V, 2, -1)),
            SeqKind::Jacobsthal => Some((LucasKind::U, 1, -2)),
            SeqKind::JacobsthalLucas => Some((LucasKind::V, 1, -2)),
            _ => None,
        }
    }

    /// The Lucas base and parameters this kind reduces to, for kinds that
    /// go through `u`/`v` (everything except Chebyshev).
    pub fn lucas_params(self, arg: Option<&RingElem>) -> Option<(LucasKind, SeqParams)> {
        if let Some((k, y, z)) = self.integer_params() {
            return Some((k, SeqParams::new(y, z)));
        }
        match self {
            SeqKind::FibonacciPoly => Some((LucasKind::U, SeqParams::new(arg?.clone(), -1))),
            SeqKind::LucasPoly => Some((LucasKind::V, SeqParams::new(arg?.clone(), -1))),
            SeqKind::LucasU => Some((LucasKind::U, SeqParams::symbolic(Ctx::RATIONAL))),
            SeqKind::LucasV => Some((LucasKind::V, SeqParams::symbolic(Ctx::RATIONAL))),
            _ => None,
        }
    }
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeqKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let key = s.to_ascii_lowercase().replace(['-', '_'], "");
        SeqKind::ALL.into_iter().find(|k| k.name() == key).ok_or_else(|| format!("unknown sequence kind '{s}'"))
    }
}

/// Contiguous run of `(u_k, v_k)` for `k` in `[lo, hi]`.
#[derive(Clone, Debug)]
pub struct LucasWindow {
    lo: i64,
    u: Vec<RingElem>,
    v: Vec<RingElem>,
}

impl LucasWindow {
    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.u.len() as i64 - 1
    }

    pub fn u(&self, k: i64) -> Option<&RingElem> {
        self.u.get(usize::try_from(k - self.lo).ok()?)
    }

    pub fn v(&self, k: i64) -> Option<&RingElem> {
        self.v.get(usize::try_from(k - self.lo).ok()?)
    }
}

fn z_error(p: &SeqParams) -> impl Fn(RingError) -> SeqError + '_ {
    move |e| match e {
        RingError::DivisionByZero | RingError::NotDivisible { .. } | RingError::NotInvertible(_) => {
            SeqError::NotInvertible(p.z.to_string())
        }
        other => SeqError::Ring(other),
    }
}

/// Runs the recurrence forward from the seeds and, if needed, backward
/// with `a_{k-2} = (y a_{k-1} - a_k) / z`.
fn recurrence_window(p: &SeqParams, seeds: (RingElem, RingElem), lo: i64, hi: i64) -> Result<Vec<RingElem>, SeqError> {
    let (y, z) = (&p.y, &p.z);
    let top = hi.max(1);
    let mut fwd = vec![seeds.0.clone(), seeds.1.clone()];
    for k in 2..=top as usize {
        let next = y.checked_mul(&fwd[k - 1])?.checked_sub(&z.checked_mul(&fwd[k - 2])?)?;
        fwd.push(next);
    }
    // back[j] holds a_{-(j+1)}
    let mut back = Vec::new();
    if lo < 0 {
        let (mut a1, mut a0) = (seeds.1, seeds.0);
        for _ in 0..(-lo) {
            let prev = y.checked_mul(&a0)?.checked_sub(&a1)?.exact_div(z).map_err(z_error(p))?;
            back.push(prev.clone());
            a1 = a0;
            a0 = prev;
        }
    }
    Ok((lo..=hi).map(|k| if k >= 0 { fwd[k as usize].clone() } else { back[(-k - 1) as usize].clone() }).collect())
}

/// `(u_k, v_k)` for all `k` in `[lo, hi]` in one pass.
pub fn lucas_window(p: &SeqParams, lo: i64, hi: i64) -> Result<LucasWindow, SeqError> {
    if lo > hi {
        return Err(SeqError::Window(format!("empty window [{lo}, {hi}]")));
    }
    p.check()?;
    let ctx = p.y.ctx();
    let u = recurrence_window(p, (ctx.int(0), ctx.int(1)), lo, hi)?;
    let v = recurrence_window(p, (ctx.int(2), p.y.clone()), lo, hi)?;
    Ok(LucasWindow { lo, u, v })
}

fn naive_integer(k: LucasKind, y: &BigInt, z: &BigInt, n: u64) -> BigInt {
    match k {
        LucasKind::U => fast::naive_int(y, z, 0.into(), 1.into(), n),
        LucasKind::V => fast::naive_int(y, z, 2.into(), y.clone(), n),
    }
}

fn lucas_naive(kind: LucasKind, p: &SeqParams, n: i64) -> Result<RingElem, SeqError> {
    if n >= 0 {
        if let Some((y, z)) = p.integers() {
            return Ok(RingElem::from(naive_integer(kind, &y, &z, n as u64)).in_ctx(p.y.ctx()));
        }
    }
    let w = lucas_window(p, n, n)?;
    Ok(match kind {
        LucasKind::U => w.u(n),
        LucasKind::V => w.v(n),
    }
    .unwrap()
    .clone())
}

/// `u_n(y, z)` by iterating the recurrence.
pub fn lucas_u(p: &SeqParams, n: i64) -> Result<RingElem, SeqError> {
    lucas_naive(LucasKind::U, p, n)
}

/// `v_n(y, z)` by iterating the recurrence.
pub fn lucas_v(p: &SeqParams, n: i64) -> Result<RingElem, SeqError> {
    lucas_naive(LucasKind::V, p, n)
}

/// `(u_n, v_n)` in `O(log |n|)` ring multiplications. Negative `n` is
/// reduced with `u_{-n} = -u_n / z^n`, `v_{-n} = v_n / z^n`.
pub fn lucas_uv_fast(p: &SeqParams, n: i64) -> Result<(RingElem, RingElem), SeqError> {
    p.check()?;
    let m = n.unsigned_abs();
    let ctx = p.y.ctx().unify(p.z.ctx())?;
    let (u, v) = match p.integers() {
        Some((y, z)) => {
            let (u, v) = fast::doubling(&y, &z, m);
            (RingElem::from(u).in_ctx(ctx), RingElem::from(v).in_ctx(ctx))
        }
        None => fast::doubling(&p.y.clone().in_ctx(ctx), &p.z.clone().in_ctx(ctx), m),
    };
    if n >= 0 {
        return Ok((u, v));
    }
    let zn = p.z.pow_int(m as i64)?;
    let u = (-u).exact_div(&zn).map_err(z_error(p))?;
    let v = v.exact_div(&zn).map_err(z_error(p))?;
    Ok((u, v))
}

/// Contiguous run of `(T_k, U_k)`.
#[derive(Clone, Debug)]
pub struct ChebWindow {
    lo: i64,
    t: Vec<RingElem>,
    u: Vec<RingElem>,
}

impl ChebWindow {
    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.t.len() as i64 - 1
    }

    pub fn t(&self, k: i64) -> Option<&RingElem> {
        self.t.get(usize::try_from(k - self.lo).ok()?)
    }

    pub fn u(&self, k: i64) -> Option<&RingElem> {
        self.u.get(usize::try_from(k - self.lo).ok()?)
    }
}

/// Chebyshev polynomials on `[lo, hi]`: `T_{-n} = T_n`, and `U` continued
/// below zero by `U_{k-2} = 2y U_{k-1} - U_k`.
pub fn cheb_window(y: &RingElem, lo: i64, hi: i64) -> Result<ChebWindow, SeqError> {
    if lo > hi {
        return Err(SeqError::Window(format!("empty window [{lo}, {hi}]")));
    }
    let ctx = y.ctx();
    let two_y = y * 2;
    let step = |a: &RingElem, b: &RingElem| two_y.checked_mul(a)?.checked_sub(b);
    let top = hi.max(-lo).max(1) as usize;
    let mut t = vec![ctx.int(1), y.clone()];
    let mut u = vec![ctx.int(1), two_y.clone()];
    for k in 2..=top {
        t.push(step(&t[k - 1], &t[k - 2])?);
        u.push(step(&u[k - 1], &u[k - 2])?);
    }
    let mut u_back = Vec::new();
    if lo < 0 {
        let (mut a1, mut a0) = (u[1].clone(), u[0].clone());
        for _ in 0..(-lo) {
            let prev = step(&a0, &a1)?;
            u_back.push(prev.clone());
            a1 = a0;
            a0 = prev;
        }
    }
    Ok(ChebWindow {
        lo,
        t: (lo..=hi).map(|k| t[k.unsigned_abs() as usize].clone()).collect(),
        u: (lo..=hi).map(|k| if k >= 0 { u[k as usize].clone() } else { u_back[(-k - 1) as usize].clone() }).collect(),
    })
}

pub fn cheb_t(y: &RingElem, n: i64) -> Result<RingElem, SeqError> {
    Ok(cheb_window(y, n, n)?.t(n).unwrap().clone())
}

pub fn cheb_u(y: &RingElem, n: i64) -> Result<RingElem, SeqError> {
    Ok(cheb_window(y, n, n)?.u(n).unwrap().clone())
}

/// Evaluation strategy for [`named_term_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Naive,
    Fast,
    /// Fast doubling once `|n| > 64`, plain iteration below.
    Auto,
}

/// Term `n` of a named sequence. Polynomial families need `arg`.
pub fn named_term(kind: SeqKind, arg: Option<&RingElem>, n: i64) -> Result<RingElem, SeqError> {
    named_term_with(kind, arg, n, Method::Auto)
}

pub fn named_term_with(kind: SeqKind, arg: Option<&RingElem>, n: i64, method: Method) -> Result<RingElem, SeqError> {
    match (kind.takes_argument(), arg) {
        (true, None) => return Err(SeqError::MissingArgument(kind)),
        (false, Some(_)) => return Err(SeqError::UnexpectedArgument(kind)),
        _ => {}
    }
    match kind {
        SeqKind::ChebT => return cheb_t(arg.unwrap(), n),
        SeqKind::ChebU => return cheb_u(arg.unwrap(), n),
        _ => {}
    }
    let (which, p) = kind.lucas_params(arg).expect("lucas-family kind");
    let fast = match method {
        Method::Naive => false,
        Method::Fast => true,
        Method::Auto => n.unsigned_abs() > 64,
    };
    if fast {
        let (u, v) = lucas_uv_fast(&p, n)?;
        return Ok(match which {
            LucasKind::U => u,
            LucasKind::V => v,
        });
    }
    lucas_naive(which, &p, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_expr;

    fn sym(s: &str) -> RingElem {
        parse_expr(s, Ctx::RATIONAL).unwrap()
    }

    /// Independent oracle: iterate the recurrence over plain i128.
    fn iterate(y: i128, z: i128, a0: i128, a1: i128, n: usize) -> i128 {
        let (mut p, mut c) = (a0, a1);
        if n == 0 {
            return p;
        }
        for _ in 1..n {
            let next = y * c - z * p;
            p = c;
            c = next;
        }
        c
    }

    #[test]
    fn lucas_spot_values() {
        let fib = SeqParams::new(1, -1);
        assert_eq!(iterate(1, -1, 0, 1, 10), 55);
        assert_eq!(iterate(1, -1, 2, 1, 10), 123);
        assert_eq!(lucas_u(&fib, 10).unwrap(), RingElem::from(55));
        assert_eq!(lucas_v(&fib, 10).unwrap(), RingElem::from(123));
        let s = SeqParams::symbolic(Ctx::RATIONAL);
        assert_eq!(lucas_u(&s, 2).unwrap(), sym("y"));
        assert_eq!(lucas_u(&s, -1).unwrap(), sym("-z^-1"));
        assert_eq!(lucas_v(&s, 2).unwrap(), sym("y^2 - 2*z"));
        assert_eq!(lucas_v(&s, -1).unwrap(), sym("y*z^-1"));
    }

    #[test]
    fn fast_doubling_spot_values() {
        assert_eq!((iterate(1, -1, 0, 1, 6), iterate(1, -1, 2, 1, 6)), (8, 18));
        assert_eq!((iterate(2, -1, 0, 1, 5), iterate(2, -1, 2, 2, 5)), (29, 82));
        let (u, v) = lucas_uv_fast(&SeqParams::new(1, -1), 6).unwrap();
        assert_eq!((u, v), (RingElem::from(8), RingElem::from(18)));
        let (u, v) = lucas_uv_fast(&SeqParams::new(2, -1), 5).unwrap();
        assert_eq!((u, v), (RingElem::from(29), RingElem::from(82)));
        for p in [SeqParams::new(1, -1), SeqParams::new(sym("3/2"), sym("-7")), SeqParams::symbolic(Ctx::RATIONAL)] {
            let (u, v) = lucas_uv_fast(&p, 0).unwrap();
            assert_eq!((u, v), (RingElem::from(0), RingElem::from(2)));
        }
    }

    #[test]
    fn fast_matches_naive_symbolically() {
        let s = SeqParams::symbolic(Ctx::RATIONAL);
        for n in -8..=20 {
            let (u, v) = lucas_uv_fast(&s, n).unwrap();
            assert_eq!(u, lucas_u(&s, n).unwrap(), "u_{n}");
            assert_eq!(v, lucas_v(&s, n).unwrap(), "v_{n}");
        }
    }

    #[test]
    fn negative_index_needs_invertible_z() {
        let p = SeqParams::new(1, 0);
        assert!(matches!(lucas_u(&p, -1), Err(SeqError::NotInvertible(_))));
        assert!(matches!(lucas_uv_fast(&p, -3), Err(SeqError::NotInvertible(_)) | Err(SeqError::Ring(_))));
        let poly = Ctx::RATIONAL.polynomial();
        let p = SeqParams::symbolic(poly);
        assert!(matches!(lucas_v(&p, -2), Err(SeqError::NotInvertible(_))));
        assert_eq!(lucas_v(&p, 3).unwrap(), sym("y^3 - 3*y*z"));
    }

    #[test]
    fn chebyshev_values() {
        let y = sym("y");
        assert_eq!(cheb_t(&y, 3).unwrap(), sym("4*y^3 - 3*y"));
        assert_eq!(cheb_u(&y, -1).unwrap(), RingElem::zero());
        assert_eq!(cheb_u(&y, -2).unwrap(), RingElem::from(-1));
        assert_eq!(cheb_t(&y, -4).unwrap(), cheb_t(&y, 4).unwrap());
        let w = cheb_window(&RingElem::from(2), 0, 2).unwrap();
        let t: Vec<_> = (0..=2).map(|k| w.t(k).unwrap().clone()).collect();
        let u: Vec<_> = (0..=2).map(|k| w.u(k).unwrap().clone()).collect();
        assert_eq!(t, [1, 2, 7].map(RingElem::from));
        assert_eq!(u, [1, 4, 15].map(RingElem::from));
    }

    #[test]
    fn named_terms() {
        assert_eq!(iterate(1, -2, 0, 1, 5), 11);
        assert_eq!(iterate(1, -2, 2, 1, 4), 17);
        assert_eq!(named_term(SeqKind::Jacobsthal, None, 5).unwrap(), RingElem::from(11));
        assert_eq!(named_term(SeqKind::JacobsthalLucas, None, 4).unwrap(), RingElem::from(17));
        let one = RingElem::from(1);
        for k in -8..=8 {
            assert_eq!(
                named_term(SeqKind::FibonacciPoly, Some(&one), k).unwrap(),
                named_term(SeqKind::Fibonacci, None, k).unwrap()
            );
        }
        assert_eq!(named_term(SeqKind::LucasPoly, Some(&sym("x")), 3).unwrap(), sym("x^3 + 3*x"));
        assert_eq!(named_term(SeqKind::LucasU, None, 3).unwrap(), sym("y^2 - z"));
    }

    #[test]
    fn argument_contract() {
        assert_eq!(named_term(SeqKind::ChebT, None, 2), Err(SeqError::MissingArgument(SeqKind::ChebT)));
        assert_eq!(
            named_term(SeqKind::Pell, Some(&RingElem::one()), 2),
            Err(SeqError::UnexpectedArgument(SeqKind::Pell))
        );
    }

    #[test]
    fn kind_names_round_trip() {
        for k in SeqKind::ALL {
            assert_eq!(k.name().parse::<SeqKind>().unwrap(), k);
        }
        assert_eq!("Pell-Lucas".parse::<SeqKind>().unwrap(), SeqKind::PellLucas);
        assert!("tribonacci".parse::<SeqKind>().is_err());
    }

    #[test]
    fn auto_method_switches_to_doubling() {
        let a = named_term_with(SeqKind::Lucas, None, 300, Method::Naive).unwrap();
        let b = named_term(SeqKind::Lucas, None, 300).unwrap();
        assert_eq!(a, b);
        let a = named_term_with(SeqKind::Jacobsthal, None, -70, Method::Naive).unwrap();
        let b = named_term(SeqKind::Jacobsthal, None, -70).unwrap();
        assert_eq!(a, b);
    }
}
