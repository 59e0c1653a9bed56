use std::sync::{Arc, OnceLock};

use super::env::{Env, EvalResult};
use super::{CheckError, IdentityRecord, NRange, Parity, Shape};
use crate::ring::Var::{self, R, X, Y, Z};

type F = fn(&Env) -> EvalResult;

struct Builder(Vec<IdentityRecord>);

impl Builder {
    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        id: &'static str,
        source: &'static str,
        statement: &'static str,
        shape: Shape,
        vars: &[Var],
        lhs: F,
        rhs: F,
    ) -> &mut IdentityRecord {
        let n_range = match shape {
            Shape::Sum => NRange::FromC(-1, 10),
            Shape::Point => NRange::Fixed(-8, 16),
        };
        self.0.push(IdentityRecord {
            id,
            source,
            statement,
            shape,
            uses_c: false,
            m: None,
            free_vars: vars.to_vec(),
            ext: None,
            n_range,
            lhs: Arc::new(lhs),
            rhs: Arc::new(rhs),
        });
        self.0.last_mut().unwrap()
    }

    fn sum(
        &mut self,
        id: &'static str,
        source: &'static str,
        st: &'static str,
        vars: &[Var],
        l: F,
        r: F,
    ) -> &mut IdentityRecord {
        self.push(id, source, st, Shape::Sum, vars, l, r)
    }

    fn point(
        &mut self,
        id: &'static str,
        source: &'static str,
        st: &'static str,
        vars: &[Var],
        l: F,
        r: F,
    ) -> &mut IdentityRecord {
        self.push(id, source, st, Shape::Point, vars, l, r)
    }
}

impl IdentityRecord {
    fn starts_at_c(&mut self) -> &mut Self {
        self.uses_c = true;
        self
    }

    fn ext(&mut self, d: i64) -> &mut Self {
        self.ext = Some(d);
        self
    }

    fn parity(&mut self, p: Parity) -> &mut Self {
        self.m = Some(p);
        self
    }

    fn n(&mut self, lo: i64, hi: i64) -> &mut Self {
        self.n_range = NRange::Fixed(lo, hi);
        self
    }
}

fn sgn(k: i64) -> crate::ring::RingElem {
    Env::sgn(k)
}

fn disc(e: &Env) -> crate::ring::RingElem {
    e.y() * e.y() - 4 * e.z()
}

// Summands of the telescoping sums. The re-proof in `telescoping` checks
// each against a difference of its kernel.

pub(crate) fn thm1_a_term(e: &Env, k: i64) -> EvalResult {
    let (x, y, r) = (e.x(), e.y(), e.r());
    Ok(e.rp(e.n - k)? * e.xp(k)? * (r * e.v(k)? + (x * y - 2 * r) * e.u(k + 1)?))
}

pub(crate) fn thm1_b_term(e: &Env, k: i64) -> EvalResult {
    let (x, y, r) = (e.x(), e.y(), e.r());
    Ok(e.rp(e.n - k)? * e.xp(k)? * (disc(e) * r * e.u(k)? + (x * y - 2 * r) * e.v(k + 1)?))
}

pub(crate) fn thm1_a_neg_term(e: &Env, k: i64) -> EvalResult {
    let (x, y, r) = (e.x(), e.y(), e.r());
    Ok(sgn(k) * e.rp(e.n - k)? * e.xp(k)? * ((x * y + 2 * r) * e.u(k + 1)? - r * e.v(k)?))
}

pub(crate) fn thm1_b_neg_term(e: &Env, k: i64) -> EvalResult {
    let (x, y, r) = (e.x(), e.y(), e.r());
    Ok(sgn(k) * e.rp(e.n - k)? * e.xp(k)? * ((x * y + 2 * r) * e.v(k + 1)? - disc(e) * r * e.u(k)?))
}

pub(crate) fn thm2_a_term(e: &Env, k: i64) -> EvalResult {
    let (x, y, z, r) = (e.x(), e.y(), e.z(), e.r());
    Ok(sgn(k) * e.xp(e.n - k)? * e.rp(k)? * (r * e.v(k + 1)? + (x * y + 2 * r * z) * e.u(k)?))
}

pub(crate) fn thm2_b_term(e: &Env, k: i64) -> EvalResult {
    let (x, y, z, r) = (e.x(), e.y(), e.z(), e.r());
    Ok(sgn(k) * e.xp(e.n - k)? * e.rp(k)? * (disc(e) * r * e.u(k + 1)? + (x * y + 2 * r * z) * e.v(k)?))
}

pub(crate) fn cheb_a_term(e: &Env, k: i64) -> EvalResult {
    let (x, y, r) = (e.x(), e.y(), e.r());
    Ok(e.rp(e.n - k)? * e.xp(k)? * (r * e.cheb_t(k)? + (x * y - r) * e.cheb_u(k)?))
}

pub(crate) fn cheb_b_term(e: &Env, k: i64) -> EvalResult {
    let (x, y, r) = (e.x(), e.y(), e.r());
    Ok(e.rp(e.n - k)? * e.xp(k)? * ((y * y - 1) * r * e.cheb_u(k - 2)? + (x * y - r) * e.cheb_t(k)?))
}

pub(crate) fn jac_a_term(e: &Env, k: i64) -> EvalResult {
    let (x, r) = (e.x(), e.r());
    Ok(e.rp(e.n - k)? * e.xp(k)? * (r * e.jac_lucas(k)? + (x - 2 * r) * e.jac(k + 1)?))
}

pub(crate) fn jac_b_term(e: &Env, k: i64) -> EvalResult {
    let (x, r) = (e.x(), e.r());
    Ok(e.rp(e.n - k)? * e.xp(k)? * (9 * r * e.jac(k)? + (x - 2 * r) * e.jac_lucas(k + 1)?))
}

fn build() -> Vec<IdentityRecord> {
    let mut b = Builder(Vec::new());

    // Integer Fibonacci/Lucas sums weighted by powers of x.
    b.sum(
        "EDG-1",
        "Edgar's Fibonacci-Lucas sum",
        "sum_{k=0}^{n} x^k (L_k + (x-2) F_{k+1}) = x^{n+1} F_{n+1}",
        &[X],
        |e| e.sum0(|k| Ok(e.xp(k)? * (e.luc(k)? + (e.x() - 2) * e.fib(k + 1)?))),
        |e| Ok(e.xp(e.n + 1)? * e.fib(e.n + 1)?),
    );
    b.sum(
        "DPL-2",
        "Dafnis-Philippou-Livieris alternating Fibonacci-Lucas sum",
        "sum_{k=0}^{n} (-1)^k x^{n-k} (L_{k+1} + (x-2) F_k) = (-1)^n F_{n+1}",
        &[X],
        |e| e.sum0(|k| Ok(sgn(k) * e.xp(e.n - k)? * (e.luc(k + 1)? + (e.x() - 2) * e.fib(k)?))),
        |e| Ok(sgn(e.n) * e.fib(e.n + 1)?),
    );

    // Pointwise kernels and the general sums in u_n(y,z), v_n(y,z).
    b.point(
        "LEM2-A",
        "difference kernel for u",
        "x^n r^-n (r v_n + (xy-2r) u_{n+1}) = y (x^{n+1} r^-n u_{n+1} - x^n r^{1-n} u_n)",
        &[X, Y, Z, R],
        |e| {
            let (x, y, r, k) = (e.x(), e.y(), e.r(), e.n);
            Ok(e.xp(k)? * e.rp(-k)? * (r * e.v(k)? + (x * y - 2 * r) * e.u(k + 1)?))
        },
        |e| {
            let k = e.n;
            Ok(e.y() * (e.xp(k + 1)? * e.rp(-k)? * e.u(k + 1)? - e.xp(k)? * e.rp(1 - k)? * e.u(k)?))
        },
    );
    b.point(
        "LEM2-B",
        "difference kernel for v",
        "x^n r^-n ((y^2-4z) r u_n + (xy-2r) v_{n+1}) = y (x^{n+1} r^-n v_{n+1} - x^n r^{1-n} v_n)",
        &[X, Y, Z, R],
        |e| {
            let (x, y, r, k) = (e.x(), e.y(), e.r(), e.n);
            Ok(e.xp(k)? * e.rp(-k)? * (disc(e) * r * e.u(k)? + (x * y - 2 * r) * e.v(k + 1)?))
        },
        |e| {
            let k = e.n;
            Ok(e.y() * (e.xp(k + 1)? * e.rp(-k)? * e.v(k + 1)? - e.xp(k)? * e.rp(1 - k)? * e.v(k)?))
        },
    );
    b.sum(
        "THM1-A",
        "general weighted sum for u",
        "sum_{k=c}^{n} r^{n-k} x^k (r v_k + (xy-2r) u_{k+1}) = x^{n+1} y u_{n+1} - r^{n-c+1} x^c y u_c",
        &[X, Y, Z, R],
        |e| e.sum_c(|k| thm1_a_term(e, k)),
        |e| {
            let (n, c, y) = (e.n, e.c, e.y());
            Ok(e.xp(n + 1)? * y * e.u(n + 1)? - e.rp(n - c + 1)? * e.xp(c)? * y * e.u(c)?)
        },
    )
    .starts_at_c();
    b.sum(
        "THM1-B",
        "general weighted sum for v",
        "sum_{k=c}^{n} r^{n-k} x^k ((y^2-4z) r u_k + (xy-2r) v_{k+1}) = x^{n+1} y v_{n+1} - r^{n-c+1} x^c y v_c",
        &[X, Y, Z, R],
        |e| e.sum_c(|k| thm1_b_term(e, k)),
        |e| {
            let (n, c, y) = (e.n, e.c, e.y());
            Ok(e.xp(n + 1)? * y * e.v(n + 1)? - e.rp(n - c + 1)? * e.xp(c)? * y * e.v(c)?)
        },
    )
    .starts_at_c();
    b.sum(
        "THM1-A-NEG",
        "THM1-A with x replaced by -x",
        "sum_{k=c}^{n} (-1)^k r^{n-k} x^k ((xy+2r) u_{k+1} - r v_k) = (-1)^n x^{n+1} y u_{n+1} + (-1)^c r^{n-c+1} x^c y u_c",
        &[X, Y, Z, R],
        |e| e.sum_c(|k| thm1_a_neg_term(e, k)),
        |e| {
            let (n, c, y) = (e.n, e.c, e.y());
            Ok(sgn(n) * e.xp(n + 1)? * y * e.u(n + 1)? + sgn(c) * e.rp(n - c + 1)? * e.xp(c)? * y * e.u(c)?)
        },
    )
    .starts_at_c();
    b.sum(
        "THM1-B-NEG",
        "THM1-B with x replaced by -x",
        "sum_{k=c}^{n} (-1)^k r^{n-k} x^k ((xy+2r) v_{k+1} - (y^2-4z) r u_k) = (-1)^n x^{n+1} y v_{n+1} + (-1)^c r^{n-c+1} x^c y v_c",
        &[X, Y, Z, R],
        |e| e.sum_c(|k| thm1_b_neg_term(e, k)),
        |e| {
            let (n, c, y) = (e.n, e.c, e.y());
            Ok(sgn(n) * e.xp(n + 1)? * y * e.v(n + 1)? + sgn(c) * e.rp(n - c + 1)? * e.xp(c)? * y * e.v(c)?)
        },
    )
    .starts_at_c();
    b.point(
        "LEM3-A",
        "sum kernel for u (alternating form)",
        "x^{n-c} r^c (r v_{c+1} + (xy+2rz) u_c) = y (r^{c+1} x^{n-c} u_{c+1} + r^c x^{n-c+1} u_c)",
        &[X, Y, Z, R],
        |e| {
            let (x, y, z, r, k) = (e.x(), e.y(), e.z(), e.r(), e.c);
            Ok(e.xp(e.n - k)? * e.rp(k)? * (r * e.v(k + 1)? + (x * y + 2 * r * z) * e.u(k)?))
        },
        |e| {
            let (n, k) = (e.n, e.c);
            Ok(e.y() * (e.rp(k + 1)? * e.xp(n - k)? * e.u(k + 1)? + e.rp(k)? * e.xp(n - k + 1)? * e.u(k)?))
        },
    )
    .starts_at_c()
    .n(-4, 8);
    b.point(
        "LEM3-B",
        "sum kernel for v (alternating form)",
        "x^{n-c} r^c ((y^2-4z) r u_{c+1} + (xy+2rz) v_c) = y (r^{c+1} x^{n-c} v_{c+1} + r^c x^{n-c+1} v_c)",
        &[X, Y, Z, R],
        |e| {
            let (x, y, z, r, k) = (e.x(), e.y(), e.z(), e.r(), e.c);
            Ok(e.xp(e.n - k)? * e.rp(k)? * (disc(e) * r * e.u(k + 1)? + (x * y + 2 * r * z) * e.v(k)?))
        },
        |e| {
            let (n, k) = (e.n, e.c);
            Ok(e.y() * (e.rp(k + 1)? * e.xp(n - k)? * e.v(k + 1)? + e.rp(k)? * e.xp(n - k + 1)? * e.v(k)?))
        },
    )
    .starts_at_c()
    .n(-4, 8);
    b.sum(
        "THM2-A",
        "general alternating sum for u",
        "sum_{k=c}^{n} (-1)^k x^{n-k} r^k (r v_{k+1} + (xy+2rz) u_k) = (-1)^n y r^{n+1} u_{n+1} + (-1)^c r^c y x^{n-c+1} u_c",
        &[X, Y, Z, R],
        |e| e.sum_c(|k| thm2_a_term(e, k)),
        |e| {
            let (n, c, y) = (e.n, e.c, e.y());
            Ok(sgn(n) * y * e.rp(n + 1)? * e.u(n + 1)? + sgn(c) * e.rp(c)? * y * e.xp(n - c + 1)? * e.u(c)?)
        },
    )
    .starts_at_c();
    b.sum(
        "THM2-B",
        "general alternating sum for v",
        "sum_{k=c}^{n} (-1)^k x^{n-k} r^k ((y^2-4z) r u_{k+1} + (xy+2rz) v_k) = (-1)^n y r^{n+1} v_{n+1} + (-1)^c r^c y x^{n-c+1} v_c",
        &[X, Y, Z, R],
        |e| e.sum_c(|k| thm2_b_term(e, k)),
        |e| {
            let (n, c, y) = (e.n, e.c, e.y());
            Ok(sgn(n) * y * e.rp(n + 1)? * e.v(n + 1)? + sgn(c) * e.rp(c)? * y * e.xp(n - c + 1)? * e.v(c)?)
        },
    )
    .starts_at_c();

    // Relations between u and v used by the kernels.
    b.point(
        "AUX-RECU",
        "defining recurrence",
        "u_{n+1} + z u_{n-1} = y u_n",
        &[Y, Z],
        |e| Ok(e.u(e.n + 1)? + e.z() * e.u(e.n - 1)?),
        |e| Ok(e.y() * e.u(e.n)?),
    );
    b.point(
        "AUX-VU",
        "v from neighbouring u",
        "v_n = u_{n+1} - z u_{n-1}",
        &[Y, Z],
        |e| e.v(e.n),
        |e| Ok(e.u(e.n + 1)? - e.z() * e.u(e.n - 1)?),
    );
    b.point(
        "AUX-NORM",
        "u from neighbouring v",
        "(y^2-4z) u_n = v_{n+1} - z v_{n-1}",
        &[Y, Z],
        |e| Ok(disc(e) * e.u(e.n)?),
        |e| Ok(e.v(e.n + 1)? - e.z() * e.v(e.n - 1)?),
    );
    b.point(
        "AUX-VALT",
        "v from u_n and u_{n-1}",
        "v_n = y u_n - 2z u_{n-1}",
        &[Y, Z],
        |e| e.v(e.n),
        |e| Ok(e.y() * e.u(e.n)? - 2 * e.z() * e.u(e.n - 1)?),
    );

    // Fibonacci and Lucas polynomials (z = -1, r = 1, c = 0).
    b.sum(
        "PROP1-F",
        "Fibonacci polynomial case of THM1-A",
        "sum_{k=0}^{n} x^k (L_k(y) + (xy-2) F_{k+1}(y)) = x^{n+1} y F_{n+1}(y)",
        &[X, Y],
        |e| e.sum0(|k| Ok(e.xp(k)? * (e.luc_at(Y, k)? + (e.x() * e.y() - 2) * e.fib_at(Y, k + 1)?))),
        |e| Ok(e.xp(e.n + 1)? * e.y() * e.fib_at(Y, e.n + 1)?),
    );
    b.sum(
        "PROP1-L",
        "Lucas polynomial case of THM1-B",
        "sum_{k=0}^{n} x^k ((y^2+4) F_k(y) + (xy-2) L_{k+1}(y)) = y (x^{n+1} L_{n+1}(y) - 2)",
        &[X, Y],
        |e| {
            let (x, y) = (e.x(), e.y());
            e.sum0(|k| Ok(e.xp(k)? * ((y * y + 4) * e.fib_at(Y, k)? + (x * y - 2) * e.luc_at(Y, k + 1)?)))
        },
        |e| Ok(e.y() * (e.xp(e.n + 1)? * e.luc_at(Y, e.n + 1)? - 2)),
    );
    b.sum(
        "DISC-F",
        "decoupled Fibonacci polynomial sum",
        "sum_{k=0}^{n} x^k (x F_{k+1}(y) - F_k(y)) = x^{n+1} F_{n+1}(y)",
        &[X, Y],
        |e| e.sum0(|k| Ok(e.xp(k)? * (e.x() * e.fib_at(Y, k + 1)? - e.fib_at(Y, k)?))),
        |e| Ok(e.xp(e.n + 1)? * e.fib_at(Y, e.n + 1)?),
    );
    b.sum(
        "DISC-L",
        "decoupled Lucas polynomial sum",
        "sum_{k=0}^{n} x^k (x L_{k+1}(y) - L_k(y)) = x^{n+1} L_{n+1}(y) - 2",
        &[X, Y],
        |e| e.sum0(|k| Ok(e.xp(k)? * (e.x() * e.luc_at(Y, k + 1)? - e.luc_at(Y, k)?))),
        |e| Ok(e.xp(e.n + 1)? * e.luc_at(Y, e.n + 1)? - 2),
    );
    b.point(
        "AUX-FLLINK",
        "Lucas polynomial from Fibonacci neighbours",
        "L_n(y) = F_{n-1}(y) + F_{n+1}(y)",
        &[Y],
        |e| e.luc_at(Y, e.n),
        |e| Ok(e.fib_at(Y, e.n - 1)? + e.fib_at(Y, e.n + 1)?),
    );
    b.point(
        "AUX-LFLINK",
        "Fibonacci polynomial from Lucas neighbours",
        "(y^2+4) F_n(y) = L_{n-1}(y) + L_{n+1}(y)",
        &[Y],
        |e| Ok((e.y() * e.y() + 4) * e.fib_at(Y, e.n)?),
        |e| Ok(e.luc_at(Y, e.n - 1)? + e.luc_at(Y, e.n + 1)?),
    );

    // Specializations y = 1 (Fibonacci), y = 2 (Pell).
    b.sum(
        "COR1-F1",
        "PROP1-F at y = 1",
        "sum_{k=0}^{n} x^k (L_k + (x-2) F_{k+1}) = x^{n+1} F_{n+1}",
        &[X],
        |e| e.sum0(|k| Ok(e.xp(k)? * (e.luc(k)? + (e.x() - 2) * e.fib(k + 1)?))),
        |e| Ok(e.xp(e.n + 1)? * e.fib(e.n + 1)?),
    );
    b.sum(
        "COR1-L1",
        "PROP1-L at y = 1",
        "sum_{k=0}^{n} x^k (5 F_k + (x-2) L_{k+1}) = x^{n+1} L_{n+1} - 2",
        &[X],
        |e| e.sum0(|k| Ok(e.xp(k)? * (5 * e.fib(k)? + (e.x() - 2) * e.luc(k + 1)?))),
        |e| Ok(e.xp(e.n + 1)? * e.luc(e.n + 1)? - 2),
    );
    b.sum(
        "COR1-P2",
        "PROP1-F at y = 2 (Pell)",
        "sum_{k=0}^{n} x^k (Q_k + 2(x-1) P_{k+1}) = 2 x^{n+1} P_{n+1}",
        &[X],
        |e| e.sum0(|k| Ok(e.xp(k)? * (e.pell_lucas(k)? + 2 * (e.x() - 1) * e.pell(k + 1)?))),
        |e| Ok(2 * e.xp(e.n + 1)? * e.pell(e.n + 1)?),
    );
    b.sum(
        "COR1-Q2",
        "PROP1-L at y = 2 (Pell-Lucas)",
        "sum_{k=0}^{n} x^k (4 P_k + (x-1) Q_{k+1}) = x^{n+1} Q_{n+1} - 2",
        &[X],
        |e| e.sum0(|k| Ok(e.xp(k)? * (4 * e.pell(k)? + (e.x() - 1) * e.pell_lucas(k + 1)?))),
        |e| Ok(e.xp(e.n + 1)? * e.pell_lucas(e.n + 1)? - 2),
    );
    b.sum(
        "COR2-F4",
        "PROP1-F at y = 4",
        "sum_{k=0}^{n} x^k (L_{3k} + (2x-1) F_{3k+3}) = 2 x^{n+1} F_{3n+3}",
        &[X],
        |e| e.sum0(|k| Ok(e.xp(k)? * (e.luc(3 * k)? + (2 * e.x() - 1) * e.fib(3 * k + 3)?))),
        |e| Ok(2 * e.xp(e.n + 1)? * e.fib(3 * e.n + 3)?),
    );
    b.sum(
        "COR2-L4",
        "PROP1-L at y = 4",
        "sum_{k=0}^{n} x^k (5 F_{3k} + (2x-1) L_{3k+3}) = 2 x^{n+1} L_{3n+3} - 4",
        &[X],
        |e| e.sum0(|k| Ok(e.xp(k)? * (5 * e.fib(3 * k)? + (2 * e.x() - 1) * e.luc(3 * k + 3)?))),
        |e| Ok(2 * e.xp(e.n + 1)? * e.luc(3 * e.n + 3)? - 4),
    );
    b.sum(
        "COR3-FX",
        "PROP1-F with y = x and x = 2/y, cleared by x^n",
        "sum_{k=0}^{n} 2^k L_k(x) x^{n-k} = 2^{n+1} F_{n+1}(x)",
        &[X],
        |e| e.sum0(|k| Ok(e.int(2).pow_int(k)? * e.luc_at(X, k)? * e.xp(e.n - k)?)),
        |e| Ok(e.int(2).pow_int(e.n + 1)? * e.fib_at(X, e.n + 1)?),
    );
    b.sum(
        "COR3-LX",
        "PROP1-L with y = x and x = 2/y, cleared by (x^2+4) x^n",
        "(x^2+4) sum_{k=0}^{n} 2^k F_k(x) x^{n-k} = 2^{n+1} L_{n+1}(x) - 2 x^{n+1}",
        &[X],
        |e| {
            let s = e.sum0(|k| Ok(e.int(2).pow_int(k)? * e.fib_at(X, k)? * e.xp(e.n - k)?))?;
            Ok((e.x() * e.x() + 4) * s)
        },
        |e| Ok(e.int(2).pow_int(e.n + 1)? * e.luc_at(X, e.n + 1)? - 2 * e.xp(e.n + 1)?),
    );
    b.sum(
        "COR4-F2",
        "even-index Fibonacci polynomial sum",
        "sum_{k=0}^{n} x^k (y L_{2k}(y) + (x(y^2+2)-2) F_{2k+2}(y)) = x^{n+1} (y^2+2) F_{2n+2}(y)",
        &[X, Y],
        |e| {
            let (x, y) = (e.x(), e.y());
            let a = x * (y * y + 2) - 2;
            e.sum0(|k| Ok(e.xp(k)? * (y * e.luc_at(Y, 2 * k)? + &a * e.fib_at(Y, 2 * k + 2)?)))
        },
        |e| Ok(e.xp(e.n + 1)? * (e.y() * e.y() + 2) * e.fib_at(Y, 2 * e.n + 2)?),
    );
    b.sum(
        "COR4-L2",
        "even-index Lucas polynomial sum",
        "sum_{k=0}^{n} x^k (y(y^2+4) F_{2k}(y) + (x(y^2+2)-2) L_{2k+2}(y)) = (y^2+2) (x^{n+1} L_{2n+2}(y) - 2)",
        &[X, Y],
        |e| {
            let (x, y) = (e.x(), e.y());
            let a = x * (y * y + 2) - 2;
            let b = y * (y * y + 4);
            e.sum0(|k| Ok(e.xp(k)? * (&b * e.fib_at(Y, 2 * k)? + &a * e.luc_at(Y, 2 * k + 2)?)))
        },
        |e| Ok((e.y() * e.y() + 2) * (e.xp(e.n + 1)? * e.luc_at(Y, 2 * e.n + 2)? - 2)),
    );
    b.sum(
        "COR5-F",
        "COR4-F2 at y = 1",
        "sum_{k=0}^{n} x^k (L_{2k} + (3x-2) F_{2k+2}) = 3 x^{n+1} F_{2n+2}",
        &[X],
        |e| e.sum0(|k| Ok(e.xp(k)? * (e.luc(2 * k)? + (3 * e.x() - 2) * e.fib(2 * k + 2)?))),
        |e| Ok(3 * e.xp(e.n + 1)? * e.fib(2 * e.n + 2)?),
    );
    b.sum(
        "COR5-L",
        "COR4-L2 at y = 1",
        "sum_{k=0}^{n} x^k (5 F_{2k} + (3x-2) L_{2k+2}) = 3 (x^{n+1} L_{2n+2} - 2)",
        &[X],
        |e| e.sum0(|k| Ok(e.xp(k)? * (5 * e.fib(2 * k)? + (3 * e.x() - 2) * e.luc(2 * k + 2)?))),
        |e| Ok(3 * (e.xp(e.n + 1)? * e.luc(2 * e.n + 2)? - 2)),
    );
    b.sum(
        "COR5-P",
        "COR4-F2 at y = 2 (Pell)",
        "sum_{k=0}^{n} x^k (Q_{2k} + (3x-1) P_{2k+2}) = 3 x^{n+1} P_{2n+2}",
        &[X],
        |e| e.sum0(|k| Ok(e.xp(k)? * (e.pell_lucas(2 * k)? + (3 * e.x() - 1) * e.pell(2 * k + 2)?))),
        |e| Ok(3 * e.xp(e.n + 1)? * e.pell(2 * e.n + 2)?),
    );
    b.sum(
        "COR5-Q",
        "COR4-L2 at y = 2 (Pell-Lucas)",
        "sum_{k=0}^{n} x^k (8 P_{2k} + (3x-1) Q_{2k+2}) = 3 (x^{n+1} Q_{2n+2} - 2)",
        &[X],
        |e| e.sum0(|k| Ok(e.xp(k)? * (8 * e.pell(2 * k)? + (3 * e.x() - 1) * e.pell_lucas(2 * k + 2)?))),
        |e| Ok(3 * (e.xp(e.n + 1)? * e.pell_lucas(2 * e.n + 2)? - 2)),
    );
    b.sum(
        "COR6-F",
        "COR4-F2 at y = sqrt 5",
        "sum_{k=0}^{n} x^k (3 L_{4k} + (7x-2) F_{4k+4}) = 7 x^{n+1} F_{4n+4}",
        &[X],
        |e| e.sum0(|k| Ok(e.xp(k)? * (3 * e.luc(4 * k)? + (7 * e.x() - 2) * e.fib(4 * k + 4)?))),
        |e| Ok(7 * e.xp(e.n + 1)? * e.fib(4 * e.n + 4)?),
    )
    .ext(5);
    b.sum(
        "COR6-L",
        "COR4-L2 at y = sqrt 5",
        "sum_{k=0}^{n} x^k (15 F_{4k} + (7x-2) L_{4k+4}) = 7 (x^{n+1} L_{4n+4} - 2)",
        &[X],
        |e| e.sum0(|k| Ok(e.xp(k)? * (15 * e.fib(4 * k)? + (7 * e.x() - 2) * e.luc(4 * k + 4)?))),
        |e| Ok(7 * (e.xp(e.n + 1)? * e.luc(4 * e.n + 4)? - 2)),
    )
    .ext(5);
    b.sum(
        "COR7-F",
        "COR4-F2 with y = x and x = 2/(y^2+2), cleared by x (x^2+2)^n",
        "x sum_{k=0}^{n} 2^k (x^2+2)^{n-k} L_{2k}(x) = 2^{n+1} F_{2n+2}(x)",
        &[X],
        |e| {
            let q = e.x() * e.x() + 2;
            let s = e.sum0(|k| Ok(e.int(2).pow_int(k)? * q.pow_int(e.n - k)? * e.luc_at(X, 2 * k)?))?;
            Ok(e.x() * s)
        },
        |e| Ok(e.int(2).pow_int(e.n + 1)? * e.fib_at(X, 2 * e.n + 2)?),
    );
    b.sum(
        "COR7-L",
        "COR4-L2 with y = x and x = 2/(y^2+2), cleared by x (x^2+4) (x^2+2)^n",
        "x (x^2+4) sum_{k=0}^{n} 2^k (x^2+2)^{n-k} F_{2k}(x) = 2^{n+1} L_{2n+2}(x) - 2 (x^2+2)^{n+1}",
        &[X],
        |e| {
            let x = e.x();
            let q = x * x + 2;
            let s = e.sum0(|k| Ok(e.int(2).pow_int(k)? * q.pow_int(e.n - k)? * e.fib_at(X, 2 * k)?))?;
            Ok(x * (x * x + 4) * s)
        },
        |e| {
            let q = e.x() * e.x() + 2;
            Ok(e.int(2).pow_int(e.n + 1)? * e.luc_at(X, 2 * e.n + 2)? - 2 * q.pow_int(e.n + 1)?)
        },
    );
    b.sum(
        "PROP2-F",
        "PROP1-F at y = L_m (m odd) or i L_m (m even)",
        "sum_{k=0}^{n} x^k (F_m L_{mk} + (x L_m - 2) F_{m(k+1)}) = x^{n+1} L_m F_{m(n+1)}",
        &[X],
        |e| {
            let m = e.m;
            let (fm, a) = (e.fib(m)?, e.x() * e.luc(m)? - 2);
            e.sum0(|k| Ok(e.xp(k)? * (&fm * e.luc(m * k)? + &a * e.fib(m * (k + 1))?)))
        },
        |e| Ok(e.xp(e.n + 1)? * e.luc(e.m)? * e.fib(e.m * (e.n + 1))?),
    )
    .parity(Parity::Any);
    b.sum(
        "PROP2-L",
        "PROP1-L at y = L_m (m odd) or i L_m (m even)",
        "sum_{k=0}^{n} x^k (5 F_m F_{mk} + (x L_m - 2) L_{m(k+1)}) = L_m (x^{n+1} L_{m(n+1)} - 2)",
        &[X],
        |e| {
            let m = e.m;
            let (fm, a) = (5 * e.fib(m)?, e.x() * e.luc(m)? - 2);
            e.sum0(|k| Ok(e.xp(k)? * (&fm * e.fib(m * k)? + &a * e.luc(m * (k + 1))?)))
        },
        |e| Ok(e.luc(e.m)? * (e.xp(e.n + 1)? * e.luc(e.m * (e.n + 1))? - 2)),
    )
    .parity(Parity::Any);

    // Alternating sums.
    b.sum(
        "PROP3-F",
        "Fibonacci polynomial case of THM2-A",
        "sum_{k=0}^{n} (-1)^k x^{n-k} (L_{k+1}(y) + (xy-2) F_k(y)) = (-1)^n y F_{n+1}(y)",
        &[X, Y],
        |e| {
            let a = e.x() * e.y() - 2;
            e.sum0(|k| Ok(sgn(k) * e.xp(e.n - k)? * (e.luc_at(Y, k + 1)? + &a * e.fib_at(Y, k)?)))
        },
        |e| Ok(sgn(e.n) * e.y() * e.fib_at(Y, e.n + 1)?),
    );
    b.sum(
        "PROP3-L",
        "Lucas polynomial case of THM2-B",
        "sum_{k=0}^{n} (-1)^k x^{n-k} ((y^2+4) F_{k+1}(y) + (xy-2) L_k(y)) = (-1)^n y L_{n+1}(y) + 2 y x^{n+1}",
        &[X, Y],
        |e| {
            let (a, d) = (e.x() * e.y() - 2, e.y() * e.y() + 4);
            e.sum0(|k| Ok(sgn(k) * e.xp(e.n - k)? * (&d * e.fib_at(Y, k + 1)? + &a * e.luc_at(Y, k)?)))
        },
        |e| Ok(sgn(e.n) * e.y() * e.luc_at(Y, e.n + 1)? + 2 * e.y() * e.xp(e.n + 1)?),
    );
    b.sum(
        "COR8-F",
        "PROP3-F at y = 1",
        "sum_{k=0}^{n} (-1)^k x^{n-k} (L_{k+1} + (x-2) F_k) = (-1)^n F_{n+1}",
        &[X],
        |e| e.sum0(|k| Ok(sgn(k) * e.xp(e.n - k)? * (e.luc(k + 1)? + (e.x() - 2) * e.fib(k)?))),
        |e| Ok(sgn(e.n) * e.fib(e.n + 1)?),
    );
    b.sum(
        "COR8-L",
        "PROP3-L at y = 1",
        "sum_{k=0}^{n} (-1)^k x^{n-k} (5 F_{k+1} + (x-2) L_k) = (-1)^n L_{n+1} + 2 x^{n+1}",
        &[X],
        |e| e.sum0(|k| Ok(sgn(k) * e.xp(e.n - k)? * (5 * e.fib(k + 1)? + (e.x() - 2) * e.luc(k)?))),
        |e| Ok(sgn(e.n) * e.luc(e.n + 1)? + 2 * e.xp(e.n + 1)?),
    );
    b.sum(
        "COR8-P",
        "PROP3-F at y = 2 (Pell)",
        "sum_{k=0}^{n} (-1)^k x^{n-k} (Q_{k+1} + 2(x-1) P_k) = 2 (-1)^n P_{n+1}",
        &[X],
        |e| e.sum0(|k| Ok(sgn(k) * e.xp(e.n - k)? * (e.pell_lucas(k + 1)? + 2 * (e.x() - 1) * e.pell(k)?))),
        |e| Ok(2 * sgn(e.n) * e.pell(e.n + 1)?),
    );
    b.sum(
        "COR8-Q",
        "PROP3-L at y = 2 (Pell-Lucas)",
        "sum_{k=0}^{n} (-1)^k x^{n-k} (4 P_{k+1} + (x-1) Q_k) = (-1)^n Q_{n+1} + 2 x^{n+1}",
        &[X],
        |e| e.sum0(|k| Ok(sgn(k) * e.xp(e.n - k)? * (4 * e.pell(k + 1)? + (e.x() - 1) * e.pell_lucas(k)?))),
        |e| Ok(sgn(e.n) * e.pell_lucas(e.n + 1)? + 2 * e.xp(e.n + 1)?),
    );
    b.sum(
        "PROP4-FO",
        "PROP3-F at y = L_m, m odd",
        "sum_{k=0}^{n} (-1)^k x^{n-k} (F_m L_{m(k+1)} + (x L_m - 2) F_{mk}) = (-1)^n L_m F_{m(n+1)}",
        &[X],
        |e| {
            let m = e.m;
            let (fm, a) = (e.fib(m)?, e.x() * e.luc(m)? - 2);
            e.sum0(|k| Ok(sgn(k) * e.xp(e.n - k)? * (&fm * e.luc(m * (k + 1))? + &a * e.fib(m * k)?)))
        },
        |e| Ok(sgn(e.n) * e.luc(e.m)? * e.fib(e.m * (e.n + 1))?),
    )
    .parity(Parity::Odd);
    b.sum(
        "PROP4-FE",
        "PROP3-F at y = i L_m, m even",
        "sum_{k=0}^{n} x^{n-k} (F_m L_{m(k+1)} - (x L_m - 2) F_{mk}) = L_m F_{m(n+1)}",
        &[X],
        |e| {
            let m = e.m;
            let (fm, a) = (e.fib(m)?, e.x() * e.luc(m)? - 2);
            e.sum0(|k| Ok(e.xp(e.n - k)? * (&fm * e.luc(m * (k + 1))? - &a * e.fib(m * k)?)))
        },
        |e| Ok(e.luc(e.m)? * e.fib(e.m * (e.n + 1))?),
    )
    .parity(Parity::Even);
    b.sum(
        "PROP4-LO",
        "PROP3-L at y = L_m, m odd",
        "sum_{k=0}^{n} (-1)^k x^{n-k} (5 F_m F_{m(k+1)} + (x L_m - 2) L_{mk}) = L_m ((-1)^n L_{m(n+1)} + 2 x^{n+1})",
        &[X],
        |e| {
            let m = e.m;
            let (fm, a) = (5 * e.fib(m)?, e.x() * e.luc(m)? - 2);
            e.sum0(|k| Ok(sgn(k) * e.xp(e.n - k)? * (&fm * e.fib(m * (k + 1))? + &a * e.luc(m * k)?)))
        },
        |e| Ok(e.luc(e.m)? * (sgn(e.n) * e.luc(e.m * (e.n + 1))? + 2 * e.xp(e.n + 1)?)),
    )
    .parity(Parity::Odd);
    b.sum(
        "PROP4-LE",
        "PROP3-L at y = i L_m, m even",
        "sum_{k=0}^{n} x^{n-k} (5 F_m F_{m(k+1)} - (x L_m - 2) L_{mk}) = L_m (L_{m(n+1)} - 2 x^{n+1})",
        &[X],
        |e| {
            let m = e.m;
            let (fm, a) = (5 * e.fib(m)?, e.x() * e.luc(m)? - 2);
            e.sum0(|k| Ok(e.xp(e.n - k)? * (&fm * e.fib(m * (k + 1))? - &a * e.luc(m * k)?)))
        },
        |e| Ok(e.luc(e.m)? * (e.luc(e.m * (e.n + 1))? - 2 * e.xp(e.n + 1)?)),
    )
    .parity(Parity::Even);

    // Chebyshev polynomials.
    b.point(
        "CHEB-LEM-A",
        "Chebyshev difference kernel for U",
        "x^n r^-n (r T_n + (xy-r) U_n) = y (x^{n+1} r^-n U_n - x^n r^{1-n} U_{n-1})",
        &[X, Y, R],
        |e| {
            let (x, y, r, k) = (e.x(), e.y(), e.r(), e.n);
            Ok(e.xp(k)? * e.rp(-k)? * (r * e.cheb_t(k)? + (x * y - r) * e.cheb_u(k)?))
        },
        |e| {
            let k = e.n;
            Ok(e.y() * (e.xp(k + 1)? * e.rp(-k)? * e.cheb_u(k)? - e.xp(k)? * e.rp(1 - k)? * e.cheb_u(k - 1)?))
        },
    );
    b.point(
        "CHEB-LEM-B",
        "Chebyshev difference kernel for T",
        "x^n r^-n ((y^2-1) r U_{n-2} + (xy-r) T_n) = y (x^{n+1} r^-n T_n - x^n r^{1-n} T_{n-1})",
        &[X, Y, R],
        |e| {
            let (x, y, r, k) = (e.x(), e.y(), e.r(), e.n);
            Ok(e.xp(k)? * e.rp(-k)? * ((y * y - 1) * r * e.cheb_u(k - 2)? + (x * y - r) * e.cheb_t(k)?))
        },
        |e| {
            let k = e.n;
            Ok(e.y() * (e.xp(k + 1)? * e.rp(-k)? * e.cheb_t(k)? - e.xp(k)? * e.rp(1 - k)? * e.cheb_t(k - 1)?))
        },
    );
    b.point(
        "AUX-CHEB1",
        "T from U",
        "2 T_n = U_n - U_{n-2}",
        &[Y],
        |e| Ok(2 * e.cheb_t(e.n)?),
        |e| Ok(e.cheb_u(e.n)? - e.cheb_u(e.n - 2)?),
    );
    b.point(
        "AUX-CHEB2",
        "U from T",
        "2 (y^2-1) U_{n-2} = T_n - T_{n-2}",
        &[Y],
        |e| Ok(2 * (e.y() * e.y() - 1) * e.cheb_u(e.n - 2)?),
        |e| Ok(e.cheb_t(e.n)? - e.cheb_t(e.n - 2)?),
    );
    b.sum(
        "CHEB-THM-A",
        "Chebyshev weighted sum for U",
        "sum_{k=c}^{n} r^{n-k} x^k (r T_k + (xy-r) U_k) = x^{n+1} y U_n - r^{n-c+1} x^c y U_{c-1}",
        &[X, Y, R],
        |e| e.sum_c(|k| cheb_a_term(e, k)),
        |e| {
            let (n, c, y) = (e.n, e.c, e.y());
            Ok(e.xp(n + 1)? * y * e.cheb_u(n)? - e.rp(n - c + 1)? * e.xp(c)? * y * e.cheb_u(c - 1)?)
        },
    )
    .starts_at_c();
    b.sum(
        "CHEB-THM-B",
        "Chebyshev weighted sum for T",
        "sum_{k=c}^{n} r^{n-k} x^k ((y^2-1) r U_{k-2} + (xy-r) T_k) = x^{n+1} y T_n - r^{n-c+1} x^c y T_{c-1}",
        &[X, Y, R],
        |e| e.sum_c(|k| cheb_b_term(e, k)),
        |e| {
            let (n, c, y) = (e.n, e.c, e.y());
            Ok(e.xp(n + 1)? * y * e.cheb_t(n)? - e.rp(n - c + 1)? * e.xp(c)? * y * e.cheb_t(c - 1)?)
        },
    )
    .starts_at_c();
    b.sum(
        "CHEB-PART-A",
        "CHEB-THM-A at r = 1, c = 0",
        "sum_{k=0}^{n} x^k (T_k + (xy-1) U_k) = x^{n+1} y U_n",
        &[X, Y],
        |e| {
            let a = e.x() * e.y() - 1;
            e.sum0(|k| Ok(e.xp(k)? * (e.cheb_t(k)? + &a * e.cheb_u(k)?)))
        },
        |e| Ok(e.xp(e.n + 1)? * e.y() * e.cheb_u(e.n)?),
    );
    b.sum(
        "CHEB-PART-B",
        "CHEB-THM-B at r = 1, c = 0",
        "sum_{k=0}^{n} x^k ((y^2-1) U_{k-2} + (xy-1) T_k) = x^{n+1} y T_n - y^2",
        &[X, Y],
        |e| {
            let (a, d) = (e.x() * e.y() - 1, e.y() * e.y() - 1);
            e.sum0(|k| Ok(e.xp(k)? * (&d * e.cheb_u(k - 2)? + &a * e.cheb_t(k)?)))
        },
        |e| Ok(e.xp(e.n + 1)? * e.y() * e.cheb_t(e.n)? - e.y() * e.y()),
    );

    // Jacobsthal (y = 1, z = -2).
    b.sum(
        "JAC-A",
        "THM1-A at y = 1, z = -2 (Jacobsthal)",
        "sum_{k=c}^{n} r^{n-k} x^k (r j_k + (x-2r) J_{k+1}) = x^{n+1} J_{n+1} - r^{n-c+1} x^c J_c",
        &[X, R],
        |e| e.sum_c(|k| jac_a_term(e, k)),
        |e| {
            let (n, c) = (e.n, e.c);
            Ok(e.xp(n + 1)? * e.jac(n + 1)? - e.rp(n - c + 1)? * e.xp(c)? * e.jac(c)?)
        },
    )
    .starts_at_c();
    b.sum(
        "JAC-B",
        "THM1-B at y = 1, z = -2 (Jacobsthal-Lucas)",
        "sum_{k=c}^{n} r^{n-k} x^k (9 r J_k + (x-2r) j_{k+1}) = x^{n+1} j_{n+1} - r^{n-c+1} x^c j_c",
        &[X, R],
        |e| e.sum_c(|k| jac_b_term(e, k)),
        |e| {
            let (n, c) = (e.n, e.c);
            Ok(e.xp(n + 1)? * e.jac_lucas(n + 1)? - e.rp(n - c + 1)? * e.xp(c)? * e.jac_lucas(c)?)
        },
    )
    .starts_at_c();

    // Negative indices: left sides come from running the recurrence
    // backwards, right sides from the reflection formulas.
    b.point(
        "NEG-F",
        "Fibonacci reflection",
        "F_{-n} = (-1)^{n-1} F_n",
        &[],
        |e| e.fib(-e.n),
        |e| Ok(sgn(e.n - 1) * e.fib(e.n)?),
    )
    .n(-16, 32);
    b.point("NEG-L", "Lucas reflection", "L_{-n} = (-1)^n L_n", &[], |e| e.luc(-e.n), |e| Ok(sgn(e.n) * e.luc(e.n)?))
        .n(-16, 32);
    b.point(
        "NEG-U",
        "reflection for u",
        "u_{-n} = -u_n z^-n",
        &[Y, Z],
        |e| e.u(-e.n),
        |e| Ok(-(e.u(e.n)? * e.z().pow_int(-e.n)?)),
    )
    .n(-16, 32);
    b.point(
        "NEG-V",
        "reflection for v",
        "v_{-n} = v_n z^-n",
        &[Y, Z],
        |e| e.v(-e.n),
        |e| Ok(e.v(e.n)? * e.z().pow_int(-e.n)?),
    )
    .n(-16, 32);
    b.point(
        "NEG-T",
        "Chebyshev T is even in its index",
        "T_{-n} = T_n",
        &[Y],
        |e| {
            // Step the recurrence T_{k-1} = 2y T_k - T_{k+1} down from T_1, T_0.
            let (n, y) = (e.n, e.y());
            let (mut hi, mut lo) = (e.cheb_t(1)?, e.cheb_t(0)?);
            let target = -n;
            if target >= 0 {
                return e.cheb_t(target);
            }
            for _ in 0..-target {
                let next = 2 * y * &lo - &hi;
                hi = lo;
                lo = next;
            }
            Ok(lo)
        },
        |e| e.cheb_t(e.n),
    )
    .n(-16, 32);
    b.point(
        "LUC-SQ",
        "Lucas square",
        "L_n^2 = 5 F_n^2 + 4 (-1)^n",
        &[],
        |e| Ok(e.luc(e.n)?.pow_int(2)?),
        |e| Ok(5 * e.fib(e.n)?.pow_int(2)? + 4 * sgn(e.n)),
    );

    // Fibonacci/Lucas polynomials at special arguments.
    b.point(
        "ARG-ODD-L",
        "Lucas polynomial at L_m, m odd",
        "L_n(L_m) = L_{mn}",
        &[],
        |e| e.luc_poly(&e.luc(e.m)?, e.n),
        |e| e.luc(e.m * e.n),
    )
    .parity(Parity::Odd)
    .n(0, 12);
    b.point(
        "ARG-ODD-F",
        "Fibonacci polynomial at L_m, m odd",
        "F_m F_n(L_m) = F_{mn}",
        &[],
        |e| Ok(e.fib(e.m)? * e.fib_poly(&e.luc(e.m)?, e.n)?),
        |e| e.fib(e.m * e.n),
    )
    .parity(Parity::Odd)
    .n(0, 12);
    b.point(
        "ARG-EVEN-L",
        "Lucas polynomial at i L_m, m even",
        "L_n(i L_m) = i^n L_{mn}",
        &[],
        |e| e.luc_poly(&(e.w() * e.luc(e.m)?), e.n),
        |e| Ok(e.w().pow_int(e.n)? * e.luc(e.m * e.n)?),
    )
    .parity(Parity::Even)
    .ext(-1)
    .n(0, 12);
    b.point(
        "ARG-EVEN-F",
        "Fibonacci polynomial at i L_m, m even",
        "F_m F_n(i L_m) = i^{n-1} F_{mn}",
        &[],
        |e| Ok(e.fib(e.m)? * e.fib_poly(&(e.w() * e.luc(e.m)?), e.n)?),
        |e| Ok(e.w().pow_int(e.n - 1)? * e.fib(e.m * e.n)?),
    )
    .parity(Parity::Even)
    .ext(-1)
    .n(0, 12);
    b.point(
        "ARG-DBL-L",
        "Lucas polynomial at i (x^2+2)",
        "L_n(i (x^2+2)) = i^n L_{2n}(x)",
        &[X],
        |e| e.luc_poly(&(e.w() * (e.x() * e.x() + 2)), e.n),
        |e| Ok(e.w().pow_int(e.n)? * e.luc_at(X, 2 * e.n)?),
    )
    .ext(-1)
    .n(0, 12);
    b.point(
        "ARG-DBL-F",
        "Fibonacci polynomial at i (x^2+2)",
        "x F_n(i (x^2+2)) = i^{n-1} F_{2n}(x)",
        &[X],
        |e| Ok(e.x() * e.fib_poly(&(e.w() * (e.x() * e.x() + 2)), e.n)?),
        |e| Ok(e.w().pow_int(e.n - 1)? * e.fib_at(X, 2 * e.n)?),
    )
    .ext(-1)
    .n(0, 12);
    b.point(
        "EVAL-4F",
        "Fibonacci polynomial at 4",
        "2 F_n(4) = F_{3n}",
        &[],
        |e| Ok(2 * e.fib_poly(&e.int(4), e.n)?),
        |e| e.fib(3 * e.n),
    )
    .n(0, 12);
    b.point(
        "EVAL-4L",
        "Lucas polynomial at 4",
        "L_n(4) = L_{3n}",
        &[],
        |e| e.luc_poly(&e.int(4), e.n),
        |e| e.luc(3 * e.n),
    )
    .n(0, 12);
    b.point(
        "EVAL-S5F",
        "Fibonacci polynomial at sqrt 5",
        "3 F_{2n}(sqrt 5) = sqrt 5 F_{4n}",
        &[],
        |e| Ok(3 * e.fib_poly(&e.w(), 2 * e.n)?),
        |e| Ok(e.w() * e.fib(4 * e.n)?),
    )
    .ext(5)
    .n(0, 12);
    b.point(
        "EVAL-S5L",
        "Lucas polynomial at sqrt 5",
        "L_{2n}(sqrt 5) = L_{4n}",
        &[],
        |e| e.luc_poly(&e.w(), 2 * e.n),
        |e| e.luc(4 * e.n),
    )
    .ext(5)
    .n(0, 12);

    b.0
}

/// All registered identities, in a fixed order.
pub fn registry() -> &'static [IdentityRecord] {
    static REG: OnceLock<Vec<IdentityRecord>> = OnceLock::new();
    REG.get_or_init(build)
}

pub fn find(id: &str) -> Result<&'static IdentityRecord, CheckError> {
    registry().iter().find(|r| r.id.eq_ignore_ascii_case(id)).ok_or_else(|| CheckError::UnknownIdentity(id.to_string()))
}
