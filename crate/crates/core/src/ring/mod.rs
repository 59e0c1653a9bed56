//! Exact commutative-ring arithmetic.
//!
//! Every value is a [`RingElem`]: a rational, an element of a quadratic
//! extension `Q(w)` with `w^2 = d`, or a Laurent polynomial in the fixed
//! variables `x, y, z, r` with coefficients in that extension. Values are
//! always kept in canonical form, so structural equality is ring equality.
//! Promotion rational -> extension -> Laurent happens implicitly, and results
//! are demoted again whenever they collapse to a constant.

mod laurent;
mod parse;
mod quad;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use laurent::{LaurentPoly, Monomial};
pub use parse::parse_expr;
pub use quad::QuadExtElem;

use laurent::Terms;
use quad::Coeff;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("ring context mismatch: w^2 = {left} vs w^2 = {right}")]
    ContextMismatch { left: i64, right: i64 },
    #[error("element is not invertible: {0}")]
    NotInvertible(String),
    #[error("no exact quotient of {num} by {den}")]
    NotDivisible { num: String, den: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot substitute {value} for {var}: it occurs with a negative exponent")]
    NonInvertibleSubstitution { var: Var, value: String },
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("extension discriminant does not fit in 64 bits")]
    DiscriminantOverflow,
}

/// The four ring variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    Z,
    R,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::X, Var::Y, Var::Z, Var::R];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::R => "r",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == s)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Ring configuration carried by every element.
///
/// `ext` is the square of the extension generator `w` (none: plain `Q`).
/// `polynomial_only` forbids negative exponents, turning the Laurent ring
/// into an ordinary polynomial ring.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Ctx {
    pub ext: Option<i64>,
    pub polynomial_only: bool,
}

impl Ctx {
    pub const RATIONAL: Ctx = Ctx { ext: None, polynomial_only: false };

    pub fn with_ext(d: i64) -> Ctx {
        Ctx { ext: Some(d), polynomial_only: false }
    }

    pub fn polynomial(self) -> Ctx {
        Ctx { polynomial_only: true, ..self }
    }

    fn d(&self) -> i64 {
        self.ext.unwrap_or(0)
    }

    /// Combined context of two operands.
    pub fn unify(self, o: Ctx) -> Result<Ctx, RingError> {
        let ext = match (self.ext, o.ext) {
            (Some(a), Some(b)) if a != b => return Err(RingError::ContextMismatch { left: a, right: b }),
            (a, b) => a.or(b),
        };
        Ok(Ctx { ext, polynomial_only: self.polynomial_only || o.polynomial_only })
    }

    /// Variable generator in this context.
    pub fn var(self, v: Var) -> RingElem {
        let mut t = Terms::new();
        t.insert(Monomial::var(v), Coeff::one());
        RingElem { ctx: self, val: Val::Poly(LaurentPoly { terms: t }) }
    }

    /// The extension generator `w`. Panics if the context has no extension.
    pub fn w(self) -> RingElem {
        let d = self.ext.expect("context has no quadratic extension");
        RingElem::from(QuadExtElem::generator(d)).in_ctx(self)
    }

    pub fn int(self, n: i64) -> RingElem {
        RingElem::from(n).in_ctx(self)
    }

    pub fn rational(self, q: BigRational) -> RingElem {
        RingElem::from(q).in_ctx(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Val {
    Rat(BigRational),
    Quad(Coeff),
    Poly(LaurentPoly),
}

/// Borrowed view of the tagged value inside a [`RingElem`].
#[derive(Debug)]
pub enum ElemView<'a> {
    Rational(&'a BigRational),
    Quad(QuadExtElem),
    Laurent(&'a LaurentPoly),
}

/// An exact ring element with its context.
#[derive(Clone, Debug)]
pub struct RingElem {
    ctx: Ctx,
    val: Val,
}

impl PartialEq for RingElem {
    fn eq(&self, o: &Self) -> bool {
        if self.val != o.val {
            return false;
        }
        !self.has_w() || self.ctx.ext == o.ctx.ext
    }
}

impl Eq for RingElem {}

fn normalize(t: Terms) -> Val {
    if t.is_empty() {
        return Val::Rat(BigRational::zero());
    }
    if t.len() == 1 && t.keys().next().unwrap().is_one() {
        let c = t.into_values().next().unwrap();
        return coeff_val(c);
    }
    Val::Poly(LaurentPoly { terms: t })
}

fn coeff_val(c: Coeff) -> Val {
    if c.has_w() {
        Val::Quad(c)
    } else {
        Val::Rat(c.a)
    }
}

impl RingElem {
    pub fn zero() -> Self {
        RingElem::from(0)
    }

    pub fn one() -> Self {
        RingElem::from(1)
    }

    pub fn ctx(&self) -> Ctx {
        self.ctx
    }

    /// Re-tag with a context (the value itself is unchanged).
    pub fn in_ctx(mut self, ctx: Ctx) -> Self {
        self.ctx = ctx;
        self
    }

    pub fn view(&self) -> ElemView<'_> {
        match &self.val {
            Val::Rat(q) => ElemView::Rational(q),
            Val::Quad(c) => ElemView::Quad(QuadExtElem::from_coeff(c.clone(), self.ctx.d())),
            Val::Poly(p) => ElemView::Laurent(p),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.val, Val::Rat(q) if q.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.val, Val::Rat(q) if q.is_one())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.val {
            Val::Rat(q) => Some(q),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// True if any coefficient has a nonzero `w` component.
    pub fn has_w(&self) -> bool {
        match &self.val {
            Val::Rat(_) => false,
            Val::Quad(_) => true,
            Val::Poly(p) => p.terms.values().any(Coeff::has_w),
        }
    }

    /// True if no variable occurs.
    pub fn is_constant(&self) -> bool {
        !matches!(self.val, Val::Poly(_))
    }

    fn terms(&self) -> std::borrow::Cow<'_, Terms> {
        use std::borrow::Cow;
        match &self.val {
            Val::Poly(p) => Cow::Borrowed(&p.terms),
            Val::Rat(q) => {
                let mut t = Terms::new();
                if !q.is_zero() {
                    t.insert(Monomial::ONE, Coeff::rational(q.clone()));
                }
                Cow::Owned(t)
            }
            Val::Quad(c) => Cow::Owned(std::iter::once((Monomial::ONE, c.clone())).collect()),
        }
    }

    fn coeff(&self) -> Option<Coeff> {
        match &self.val {
            Val::Rat(q) => Some(Coeff::rational(q.clone())),
            Val::Quad(c) => Some(c.clone()),
            Val::Poly(_) => None,
        }
    }

    pub fn checked_add(&self, o: &RingElem) -> Result<RingElem, RingError> {
        let ctx = self.ctx.unify(o.ctx)?;
        let val = match (&self.val, &o.val) {
            (Val::Rat(a), Val::Rat(b)) => Val::Rat(a + b),
            (Val::Poly(_), _) | (_, Val::Poly(_)) => normalize(laurent::add(&self.terms(), &o.terms())),
            _ => {
                let mut c = self.coeff().unwrap();
                c.add_assign(&o.coeff().unwrap());
                coeff_val(c)
            }
        };
        Ok(RingElem { ctx, val })
    }

    pub fn checked_sub(&self, o: &RingElem) -> Result<RingElem, RingError> {
        let ctx = self.ctx.unify(o.ctx)?;
        let val = match (&self.val, &o.val) {
            (Val::Rat(a), Val::Rat(b)) => Val::Rat(a - b),
            (Val::Poly(_), _) | (_, Val::Poly(_)) => normalize(laurent::sub(&self.terms(), &o.terms())),
            _ => {
                let mut c = self.coeff().unwrap();
                c.sub_assign(&o.coeff().unwrap());
                coeff_val(c)
            }
        };
        Ok(RingElem { ctx, val })
    }

    pub fn checked_mul(&self, o: &RingElem) -> Result<RingElem, RingError> {
        let ctx = self.ctx.unify(o.ctx)?;
        let d = ctx.d();
        let val = match (&self.val, &o.val) {
            (Val::Rat(a), Val::Rat(b)) => Val::Rat(a * b),
            (Val::Poly(p), other) | (other, Val::Poly(p)) if !matches!(other, Val::Poly(_)) => {
                let c = match other {
                    Val::Rat(q) => Coeff::rational(q.clone()),
                    Val::Quad(c) => c.clone(),
                    Val::Poly(_) => unreachable!(),
                };
                if c.is_zero() {
                    Val::Rat(BigRational::zero())
                } else {
                    normalize(laurent::scale(&p.terms, &Monomial::ONE, &c, d))
                }
            }
            (Val::Poly(a), Val::Poly(b)) => normalize(laurent::mul(&a.terms, &b.terms, d)),
            _ => coeff_val(self.coeff().unwrap().mul(&o.coeff().unwrap(), d)),
        };
        Ok(RingElem { ctx, val })
    }

    /// Multiplicative inverse, if one exists in the ring.
    pub fn inverse(&self) -> Result<RingElem, RingError> {
        let d = self.ctx.d();
        let not_inv = || RingError::NotInvertible(self.to_string());
        let val = match &self.val {
            Val::Rat(q) if q.is_zero() => return Err(not_inv()),
            Val::Rat(q) => Val::Rat(q.recip()),
            Val::Quad(c) => coeff_val(c.inverse(d).ok_or_else(not_inv)?),
            Val::Poly(p) => {
                if p.terms.len() != 1 || self.ctx.polynomial_only {
                    return Err(not_inv());
                }
                let (m, c) = p.terms.iter().next().unwrap();
                let inv = c.inverse(d).ok_or_else(not_inv)?;
                normalize(std::iter::once((m.inv(), inv)).collect())
            }
        };
        Ok(RingElem { ctx: self.ctx, val })
    }

    /// Integer power; negative exponents need an invertible base.
    pub fn pow_int(&self, e: i64) -> Result<RingElem, RingError> {
        if e < 0 {
            return self.inverse()?.pow_int(-e);
        }
        if let Val::Poly(p) = &self.val {
            // monomials power without multiplication
            if p.terms.len() == 1 {
                let (m, c) = p.terms.iter().next().unwrap();
                let c = RingElem { ctx: self.ctx, val: coeff_val(c.clone()) }.pow_int(e)?;
                let mono = RingElem {
                    ctx: self.ctx,
                    val: normalize(std::iter::once((m.pow(e as i32), Coeff::one())).collect()),
                };
                return c.checked_mul(&mono);
            }
        }
        let mut base = self.clone();
        let mut acc = RingElem::one().in_ctx(self.ctx);
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// The unique `q` with `q * b = self`.
    pub fn exact_div(&self, b: &RingElem) -> Result<RingElem, RingError> {
        let ctx = self.ctx.unify(b.ctx)?;
        if b.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let not_div = || RingError::NotDivisible { num: self.to_string(), den: b.to_string() };
        let d = ctx.d();
        let val = match (&self.val, &b.val) {
            (Val::Rat(x), Val::Rat(y)) => Val::Rat(x / y),
            (_, Val::Rat(_) | Val::Quad(_)) => {
                let inv = b.coeff().unwrap().inverse(d).ok_or_else(not_div)?;
                normalize(laurent::scale(&self.terms(), &Monomial::ONE, &inv, d))
            }
            (_, Val::Poly(bp)) => {
                let q = laurent::div(&self.terms(), &bp.terms, d).ok_or_else(not_div)?;
                if ctx.polynomial_only && q.keys().any(Monomial::has_negative) {
                    return Err(not_div());
                }
                normalize(q)
            }
        };
        Ok(RingElem { ctx, val })
    }

    /// Simultaneous substitution of the bound variables.
    pub fn substitute(&self, bindings: &BTreeMap<Var, RingElem>) -> Result<RingElem, RingError> {
        let Val::Poly(p) = &self.val else {
            return Ok(self.clone());
        };
        let mut ctx = self.ctx;
        for v in bindings.values() {
            ctx = ctx.unify(v.ctx)?;
        }
        let mut acc = RingElem::zero().in_ctx(ctx);
        for (m, c) in &p.terms {
            let mut term = RingElem { ctx, val: coeff_val(c.clone()) };
            let mut rest = *m;
            for (&var, value) in bindings {
                let e = m.exponent(var);
                if e == 0 {
                    continue;
                }
                rest.0[var.index()] = 0;
                let f = value.pow_int(e as i64).map_err(|err| match err {
                    RingError::NotInvertible(_) => {
                        RingError::NonInvertibleSubstitution { var, value: value.to_string() }
                    }
                    other => other,
                })?;
                term = term.checked_mul(&f)?;
            }
            if !rest.is_one() {
                let mono = RingElem { ctx, val: normalize(std::iter::once((rest, Coeff::one())).collect()) };
                term = term.checked_mul(&mono)?;
            }
            acc = acc.checked_add(&term)?;
        }
        Ok(acc)
    }

    /// Render in the canonical text form understood by [`parse_expr`].
    pub fn render(&self) -> String {
        parse::render(self)
    }

    /// `(-1)^k` as a ring element.
    pub fn sign(k: i64) -> RingElem {
        RingElem::from(if k.rem_euclid(2) == 0 { 1 } else { -1 })
    }

    pub fn is_negative_rational(&self) -> bool {
        matches!(&self.val, Val::Rat(q) if q.is_negative())
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl From<i64> for RingElem {
    fn from(n: i64) -> Self {
        RingElem::from(BigRational::from_integer(n.into()))
    }
}

impl From<BigInt> for RingElem {
    fn from(n: BigInt) -> Self {
        RingElem::from(BigRational::from_integer(n))
    }
}

impl From<BigRational> for RingElem {
    fn from(q: BigRational) -> Self {
        RingElem { ctx: Ctx::RATIONAL, val: Val::Rat(q) }
    }
}

impl From<QuadExtElem> for RingElem {
    fn from(q: QuadExtElem) -> Self {
        let d = q.d;
        RingElem { ctx: Ctx::with_ext(d), val: coeff_val(q.coeff()) }
    }
}

// Operator forms panic on a context mismatch; the `checked_*` methods
// report it instead.
macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&RingElem> for &RingElem {
            type Output = RingElem;
            fn $m(self, o: &RingElem) -> RingElem {
                self.$checked(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<RingElem> for &RingElem {
            type Output = RingElem;
            fn $m(self, o: RingElem) -> RingElem {
                self.$m(&o)
            }
        }
        impl $tr<&RingElem> for RingElem {
            type Output = RingElem;
            fn $m(self, o: &RingElem) -> RingElem {
                (&self).$m(o)
            }
        }
        impl $tr<RingElem> for RingElem {
            type Output = RingElem;
            fn $m(self, o: RingElem) -> RingElem {
                (&self).$m(&o)
            }
        }
        impl $tr<i64> for &RingElem {
            type Output = RingElem;
            fn $m(self, o: i64) -> RingElem {
                self.$m(&RingElem::from(o))
            }
        }
        impl $tr<i64> for RingElem {
            type Output = RingElem;
            fn $m(self, o: i64) -> RingElem {
                (&self).$m(&RingElem::from(o))
            }
        }
        impl $tr<&RingElem> for i64 {
            type Output = RingElem;
            fn $m(self, o: &RingElem) -> RingElem {
                (&RingElem::from(self)).$m(o)
            }
        }
        impl $tr<RingElem> for i64 {
            type Output = RingElem;
            fn $m(self, o: RingElem) -> RingElem {
                (&RingElem::from(self)).$m(&o)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        let val = match &self.val {
            Val::Rat(q) => Val::Rat(-q),
            Val::Quad(c) => Val::Quad(c.neg()),
            Val::Poly(p) => Val::Poly(LaurentPoly { terms: laurent::neg(&p.terms) }),
        };
        RingElem { ctx: self.ctx, val }
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}

impl std::iter::Sum for RingElem {
    fn sum<I: Iterator<Item = RingElem>>(iter: I) -> RingElem {
        iter.fold(RingElem::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> RingElem {
        RingElem::from(BigRational::new(n.into(), d.into()))
    }

    fn p(s: &str) -> RingElem {
        parse_expr(s, Ctx::RATIONAL).unwrap()
    }

    fn p5(s: &str) -> RingElem {
        parse_expr(s, Ctx::with_ext(5)).unwrap()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
        assert_eq!(-q(5, 6), q(-5, 6));
    }

    #[test]
    fn w_cancels_in_sum_and_product() {
        assert_eq!(p5("1 + w") + p5("1 - w"), RingElem::from(2));
        assert_eq!(p5("1 + w") * p5("1 - w"), RingElem::from(-4));
        assert!((p5("1 + w") + p5("1 - w")).is_constant());
    }

    #[test]
    fn laurent_identities() {
        assert_eq!(p("z^-2") + RingElem::zero(), p("z^-2"));
        assert_eq!(p("z^-2") * p("z^3"), p("z"));
        assert_eq!(p("(x+y)*(x-y)"), p("x^2 - y^2"));
        assert_eq!(p("x") - p("x"), RingElem::zero());
        assert_eq!(-p("z^-1"), p("-z^-1"));
    }

    #[test]
    fn powers() {
        assert_eq!(p("z").pow_int(-3).unwrap(), p("z^-3"));
        assert!(matches!(p("x + y").pow_int(-1), Err(RingError::NotInvertible(_))));
        assert_eq!(RingElem::from(2).pow_int(10).unwrap(), RingElem::from(1024));
        assert_eq!(p("x+y").pow_int(0).unwrap(), RingElem::one());
        assert!(matches!(RingElem::zero().pow_int(-1), Err(RingError::NotInvertible(_))));
        assert_eq!(p("(2*x*z^-1)").pow_int(-2).unwrap(), p("1/4*x^-2*z^2"));
    }

    #[test]
    fn exact_division() {
        assert_eq!(p("x^2 - y^2").exact_div(&p("x - y")).unwrap(), p("x + y"));
        assert_eq!(p("x*y").exact_div(&p("z")).unwrap(), p("x*y*z^-1"));
        let poly = Ctx::RATIONAL.polynomial();
        let xy = parse_expr("x*y", poly).unwrap();
        let z = parse_expr("z", poly).unwrap();
        assert!(matches!(xy.exact_div(&z), Err(RingError::NotDivisible { .. })));
        assert_eq!(q(6, 5).exact_div(&RingElem::from(3)).unwrap(), q(2, 5));
        assert_eq!(p("x").exact_div(&RingElem::zero()), Err(RingError::DivisionByZero));
        assert!(matches!(p("x^2 + 1").exact_div(&p("x + 1")), Err(RingError::NotDivisible { .. })));
    }

    #[test]
    fn division_with_laurent_content() {
        let a = p("(x^2 - y^2) * z^-3 * r");
        let b = p("(x - y) * x^-1");
        assert_eq!(a.exact_div(&b).unwrap(), p("(x + y) * x * z^-3 * r"));
    }

    #[test]
    fn division_in_extension() {
        let a = p5("(x + w)*(y - 2*w*x)");
        let b = p5("y - 2*w*x");
        assert_eq!(a.exact_div(&b).unwrap(), p5("x + w"));
    }

    #[test]
    fn substitution() {
        let b: BTreeMap<Var, RingElem> =
            [(Var::Y, RingElem::from(1)), (Var::Z, RingElem::from(-1))].into_iter().collect();
        assert_eq!(p("y^2 - 2*z").substitute(&b).unwrap(), RingElem::from(3));
        let zero: BTreeMap<Var, RingElem> = [(Var::Z, RingElem::zero())].into_iter().collect();
        assert!(matches!(p("z^-1").substitute(&zero), Err(RingError::NonInvertibleSubstitution { var: Var::Z, .. })));
        let y1: BTreeMap<Var, RingElem> = [(Var::Y, RingElem::from(1))].into_iter().collect();
        assert_eq!(p("x*(y^2 + 2) - 2").substitute(&y1).unwrap(), p("3*x - 2"));
    }

    #[test]
    fn substitution_is_simultaneous() {
        let b: BTreeMap<Var, RingElem> = [(Var::X, p("y")), (Var::Y, p("x"))].into_iter().collect();
        assert_eq!(p("x - 2*y").substitute(&b).unwrap(), p("y - 2*x"));
    }

    #[test]
    fn context_mismatch() {
        let a = Ctx::with_ext(5).w();
        let b = Ctx::with_ext(-1).w();
        assert_eq!(a.checked_add(&b), Err(RingError::ContextMismatch { left: 5, right: -1 }));
        // plain rationals combine with any context
        assert_eq!(a.checked_add(&RingElem::from(1)).unwrap(), p5("1 + w"));
    }

    #[test]
    fn equality_sees_discriminant_only_through_w() {
        assert_eq!(Ctx::with_ext(5).int(3), Ctx::with_ext(-1).int(3));
        assert_ne!(Ctx::with_ext(5).w(), Ctx::with_ext(-1).w());
    }
}
