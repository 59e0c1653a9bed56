use std::cell::RefCell;
use std::collections::HashMap;

use crate::ring::{Ctx, RingElem, Var};
use crate::sequences::{
    cheb_window, lucas_window, named_term_with, ChebWindow, LucasKind, LucasWindow, Method, SeqError, SeqKind,
    SeqParams,
};

pub type EvalResult = Result<RingElem, SeqError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Key {
    /// `u, v` at the environment's `(y, z)`.
    Lucas,
    Named(SeqKind),
    /// Fibonacci/Lucas polynomials at one of the variables.
    PolyAt(Var),
    Cheb,
}

enum Window {
    Lucas(LucasWindow),
    Cheb(ChebWindow),
}

impl Window {
    fn bounds(&self) -> (i64, i64) {
        match self {
            Window::Lucas(w) => (w.lo(), w.hi()),
            Window::Cheb(w) => (w.lo(), w.hi()),
        }
    }
}

/// Everything an identity side can see for one parameter assignment:
/// the integer indices, the values (or generators) of `x, y, z, r`, and
/// memoized windows of the sequences evaluated at them.
pub struct Env {
    pub n: i64,
    pub c: i64,
    pub m: i64,
    ctx: Ctx,
    vals: [RingElem; 4],
    cache: RefCell<HashMap<Key, Window>>,
}

const PAD: i64 = 6;

impl Env {
    pub fn new(ctx: Ctx, n: i64, c: i64, m: i64, vals: [RingElem; 4]) -> Self {
        Env { n, c, m, ctx, vals, cache: RefCell::new(HashMap::new()) }
    }

    pub fn ctx(&self) -> Ctx {
        self.ctx
    }

    pub fn var(&self, v: Var) -> &RingElem {
        &self.vals[v.index()]
    }

    pub fn x(&self) -> &RingElem {
        self.var(Var::X)
    }

    pub fn y(&self) -> &RingElem {
        self.var(Var::Y)
    }

    pub fn z(&self) -> &RingElem {
        self.var(Var::Z)
    }

    pub fn r(&self) -> &RingElem {
        self.var(Var::R)
    }

    pub fn int(&self, k: i64) -> RingElem {
        self.ctx.int(k)
    }

    /// Extension generator (`i` when `w^2 = -1`, `sqrt 5` when `w^2 = 5`).
    pub fn w(&self) -> RingElem {
        self.ctx.w()
    }

    pub fn xp(&self, k: i64) -> EvalResult {
        Ok(self.x().pow_int(k)?)
    }

    pub fn rp(&self, k: i64) -> EvalResult {
        Ok(self.r().pow_int(k)?)
    }

    pub fn pow(&self, base: &RingElem, k: i64) -> EvalResult {
        Ok(base.pow_int(k)?)
    }

    pub fn sgn(k: i64) -> RingElem {
        RingElem::sign(k)
    }

    /// `sum_{k=lo}^{hi} f(k)`, zero when `hi < lo`.
    pub fn sum(&self, lo: i64, hi: i64, f: impl Fn(i64) -> EvalResult) -> EvalResult {
        let mut acc = self.int(0);
        for k in lo..=hi {
            acc = acc.checked_add(&f(k)?)?;
        }
        Ok(acc)
    }

    pub fn sum0(&self, f: impl Fn(i64) -> EvalResult) -> EvalResult {
        self.sum(0, self.n, f)
    }

    pub fn sum_c(&self, f: impl Fn(i64) -> EvalResult) -> EvalResult {
        self.sum(self.c, self.n, f)
    }

    fn build(&self, key: Key, lo: i64, hi: i64) -> Result<Window, SeqError> {
        Ok(match key {
            Key::Lucas => Window::Lucas(lucas_window(&SeqParams::new(self.y().clone(), self.z().clone()), lo, hi)?),
            Key::Named(kind) => {
                let (_, p) = kind.lucas_params(None).expect("integer kind");
                Window::Lucas(lucas_window(&p, lo, hi)?)
            }
            Key::PolyAt(v) => Window::Lucas(lucas_window(&SeqParams::new(self.var(v).clone(), -1), lo, hi)?),
            Key::Cheb => Window::Cheb(cheb_window(self.y(), lo, hi)?),
        })
    }

    fn lookup(&self, key: Key, k: i64, pick: impl Fn(&Window, i64) -> Option<RingElem>) -> EvalResult {
        let mut cache = self.cache.borrow_mut();
        if let Some(v) = cache.get(&key).and_then(|w| pick(w, k)) {
            return Ok(v);
        }
        let (lo, hi) = match cache.get(&key) {
            Some(w) => {
                let (lo, hi) = w.bounds();
                (lo.min(k - PAD), hi.max(k + PAD))
            }
            None => (k.min(0) - PAD, k.max(0) + PAD),
        };
        let w = self.build(key, lo, hi)?;
        let v = pick(&w, k).expect("window covers the index");
        cache.insert(key, w);
        Ok(v)
    }

    fn lucas(&self, key: Key, which: LucasKind, k: i64) -> EvalResult {
        self.lookup(key, k, |w, k| match (w, which) {
            (Window::Lucas(w), LucasKind::U) => w.u(k).cloned(),
            (Window::Lucas(w), LucasKind::V) => w.v(k).cloned(),
            _ => None,
        })
    }

    /// `u_k(y, z)`
    pub fn u(&self, k: i64) -> EvalResult {
        self.lucas(Key::Lucas, LucasKind::U, k)
    }

    /// `v_k(y, z)`
    pub fn v(&self, k: i64) -> EvalResult {
        self.lucas(Key::Lucas, LucasKind::V, k)
    }

    fn named(&self, kind: SeqKind, k: i64) -> EvalResult {
        let (which, _, _) = kind.integer_params().expect("integer kind");
        self.lucas(Key::Named(kind), which, k)
    }

    pub fn fib(&self, k: i64) -> EvalResult {
        self.named(SeqKind::Fibonacci, k)
    }

    pub fn luc(&self, k: i64) -> EvalResult {
        self.named(SeqKind::Lucas, k)
    }

    pub fn pell(&self, k: i64) -> EvalResult {
        self.named(SeqKind::Pell, k)
    }

    pub fn pell_lucas(&self, k: i64) -> EvalResult {
        self.named(SeqKind::PellLucas, k)
    }

    pub fn jac(&self, k: i64) -> EvalResult {
        self.named(SeqKind::Jacobsthal, k)
    }

    pub fn jac_lucas(&self, k: i64) -> EvalResult {
        self.named(SeqKind::JacobsthalLucas, k)
    }

    /// Fibonacci polynomial `F_k(var)`.
    pub fn fib_at(&self, var: Var, k: i64) -> EvalResult {
        self.lucas(Key::PolyAt(var), LucasKind::U, k)
    }

    /// Lucas polynomial `L_k(var)`.
    pub fn luc_at(&self, var: Var, k: i64) -> EvalResult {
        self.lucas(Key::PolyAt(var), LucasKind::V, k)
    }

    /// `F_k(arg)` for an arbitrary argument, not memoized.
    pub fn fib_poly(&self, arg: &RingElem, k: i64) -> EvalResult {
        named_term_with(SeqKind::FibonacciPoly, Some(arg), k, Method::Naive)
    }

    /// `L_k(arg)` for an arbitrary argument, not memoized.
    pub fn luc_poly(&self, arg: &RingElem, k: i64) -> EvalResult {
        named_term_with(SeqKind::LucasPoly, Some(arg), k, Method::Naive)
    }

    /// Chebyshev `T_k(y)`.
    pub fn cheb_t(&self, k: i64) -> EvalResult {
        self.lookup(Key::Cheb, k, |w, k| match w {
            Window::Cheb(w) => w.t(k).cloned(),
            _ => None,
        })
    }

    /// Chebyshev `U_k(y)`.
    pub fn cheb_u(&self, k: i64) -> EvalResult {
        self.lookup(Key::Cheb, k, |w, k| match w {
            Window::Cheb(w) => w.u(k).cloned(),
            _ => None,
        })
    }
}
