//! Expression grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' int)?
//! int    := ['-'] digits | '(' ['-'] digits ')'
//! atom   := digits ['/' digits] | 'x' | 'y' | 'z' | 'r' | 'w' | '(' expr ')'
//! ```
//!
//! `w` is the extension generator and needs a context with `w^2 = d`.
//! There is no division operator and no implicit multiplication.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Ctx, Monomial, RingElem, RingError, Val, Var};

pub fn parse_expr(s: &str, ctx: Ctx) -> Result<RingElem, RingError> {
    let mut p = Parser { src: s.as_bytes(), pos: 0, ctx };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e.in_ctx(ctx))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ctx: Ctx,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> RingError {
        RingError::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RingElem, RingError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                let t = self.term()?;
                acc = acc.checked_add(&t)?;
            } else if self.eat(b'-') {
                let t = self.term()?;
                acc = acc.checked_sub(&t)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RingElem, RingError> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            let f = self.unary()?;
            acc = acc.checked_mul(&f)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RingElem, RingError> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<RingElem, RingError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let start = self.pos;
        let e = self.exponent()?;
        if self.ctx.polynomial_only && e < 0 && !base.is_constant() {
            self.pos = start;
            return Err(self.err("negative exponent in a polynomial-only context"));
        }
        base.pow_int(e)
    }

    fn exponent(&mut self) -> Result<i64, RingError> {
        let paren = self.eat(b'(');
        let neg = self.eat(b'-');
        self.skip_ws();
        let digits = self.digits().ok_or_else(|| self.err("expected an integer exponent"))?;
        let e: i64 = digits.try_into().map_err(|_| self.err("exponent out of range"))?;
        if paren && !self.eat(b')') {
            return Err(self.err("expected ')'"));
        }
        Ok(if neg { -e } else { e })
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn atom(&mut self) -> Result<RingElem, RingError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits().unwrap();
                let save = self.pos;
                if self.eat(b'/') {
                    self.skip_ws();
                    match self.digits() {
                        Some(den) if den.is_zero() => Err(self.err("zero denominator")),
                        Some(den) => Ok(RingElem::from(BigRational::new(num, den)).in_ctx(self.ctx)),
                        None => {
                            self.pos = save;
                            Err(self.err("'/' is only allowed inside a rational literal"))
                        }
                    }
                } else {
                    Ok(RingElem::from(num).in_ctx(self.ctx))
                }
            }
            Some(b'w') => {
                if self.ctx.ext.is_none() {
                    return Err(self.err("'w' needs an extension context"));
                }
                self.pos += 1;
                Ok(self.ctx.w())
            }
            Some(c) => match Var::from_name(&(c as char).to_string()) {
                Some(v) => {
                    self.pos += 1;
                    Ok(self.ctx.var(v))
                }
                None => Err(self.err(&format!("unexpected character '{}'", c as char))),
            },
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Canonical text: terms in descending lexicographic monomial order; each
/// coefficient `a + b*w` is split into a rational term and a `w` term.
pub(super) fn render(e: &RingElem) -> String {
    let items: Vec<(&BigRational, bool, Monomial)> = match &e.val {
        Val::Rat(q) => return q.to_string(),
        Val::Quad(c) => vec![(&c.a, false, Monomial::ONE), (&c.b, true, Monomial::ONE)],
        Val::Poly(p) => p.terms.iter().rev().flat_map(|(m, c)| [(&c.a, false, *m), (&c.b, true, *m)]).collect(),
    };
    let mut out = String::new();
    for (coef, w, m) in items.into_iter().filter(|(c, _, _)| !c.is_zero()) {
        let neg = coef.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        let mag = coef.abs();
        if !mag.is_one() {
            factors.push(mag.to_string());
        }
        if w {
            factors.push("w".into());
        }
        for v in Var::ALL {
            match m.exponent(v) {
                0 => {}
                1 => factors.push(v.name().into()),
                k => factors.push(format!("{}^{}", v.name(), k)),
            }
        }
        if factors.is_empty() {
            factors.push("1".into());
        }
        out.push_str(&factors.join("*"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_term_polynomial() {
        let e = parse_expr("x*y^2 - 2*z", Ctx::RATIONAL).unwrap();
        match e.view() {
            super::super::ElemView::Laurent(p) => assert_eq!(p.len(), 2),
            other => panic!("expected a polynomial, got {other:?}"),
        }
        assert_eq!(e.render(), "x*y^2 - 2*z");
    }

    #[test]
    fn laurent_monomial() {
        let e = parse_expr("z^-3", Ctx::RATIONAL).unwrap();
        assert_eq!(e.render(), "z^-3");
        assert_eq!(parse_expr("z^(-3)", Ctx::RATIONAL).unwrap(), e);
    }

    #[test]
    fn w_squared_reduces() {
        assert_eq!(parse_expr("w^2", Ctx::with_ext(-1)).unwrap(), RingElem::from(-1));
    }

    #[test]
    fn renders_mixed_coefficients() {
        let e = parse_expr("(1/2 - 3*w)*x^2*r^-1 + 7 - w", Ctx::with_ext(5)).unwrap();
        assert_eq!(e.render(), "1/2*x^2*r^-1 - 3*w*x^2*r^-1 + 7 - w");
        assert_eq!(parse_expr(&e.render(), Ctx::with_ext(5)).unwrap(), e);
    }

    #[test]
    fn unary_minus_binds_looser_than_power() {
        let e = parse_expr("-x^2", Ctx::RATIONAL).unwrap();
        assert_eq!(e.render(), "-x^2");
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_expr("x + * y", Ctx::RATIONAL).unwrap_err();
        assert_eq!(err, RingError::Syntax { pos: 4, msg: "unexpected character '*'".into() });
        assert!(matches!(parse_expr("x y", Ctx::RATIONAL), Err(RingError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_expr("x/2", Ctx::RATIONAL), Err(RingError::Syntax { .. })));
        assert!(matches!(parse_expr("w", Ctx::RATIONAL), Err(RingError::Syntax { pos: 0, .. })));
        assert!(matches!(parse_expr("1/0", Ctx::RATIONAL), Err(RingError::Syntax { .. })));
        assert!(matches!(parse_expr("(x", Ctx::RATIONAL), Err(RingError::Syntax { .. })));
        assert!(matches!(parse_expr("", Ctx::RATIONAL), Err(RingError::Syntax { .. })));
    }

    #[test]
    fn polynomial_only_rejects_negative_exponents() {
        assert!(parse_expr("z^-1", Ctx::RATIONAL.polynomial()).is_err());
        assert_eq!(parse_expr("2^-1", Ctx::RATIONAL.polynomial()).unwrap().render(), "1/2");
    }

    #[test]
    fn zero_renders() {
        assert_eq!(parse_expr("x - x", Ctx::RATIONAL).unwrap().render(), "0");
    }
}
