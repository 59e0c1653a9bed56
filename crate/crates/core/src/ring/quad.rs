use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficient `a + b*w` with `w^2 = d`. The discriminant is owned by the
/// surrounding context and passed in where multiplication needs it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Coeff {
    pub a: BigRational,
    pub b: BigRational,
}

impl Coeff {
    pub fn rational(a: BigRational) -> Self {
        Coeff { a, b: BigRational::zero() }
    }

    pub fn one() -> Self {
        Coeff::rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    #[cfg(test)]
    pub fn is_one(&self) -> bool {
        self.b.is_zero() && self.a.is_one()
    }

    pub fn has_w(&self) -> bool {
        !self.b.is_zero()
    }

    pub fn add_assign(&mut self, o: &Coeff) {
        self.a += &o.a;
        if !o.b.is_zero() {
            self.b += &o.b;
        }
    }

    pub fn sub_assign(&mut self, o: &Coeff) {
        self.a -= &o.a;
        if !o.b.is_zero() {
            self.b -= &o.b;
        }
    }

    pub fn neg(&self) -> Coeff {
        Coeff { a: -&self.a, b: -&self.b }
    }

    pub fn mul(&self, o: &Coeff, d: i64) -> Coeff {
        match (self.b.is_zero(), o.b.is_zero()) {
            (true, true) => Coeff::rational(&self.a * &o.a),
            (true, false) => Coeff { a: &self.a * &o.a, b: &self.a * &o.b },
            (false, true) => Coeff { a: &self.a * &o.a, b: &self.b * &o.a },
            (false, false) => {
                let dd = BigRational::from_integer(d.into());
                Coeff { a: &self.a * &o.a + dd * &self.b * &o.b, b: &self.a * &o.b + &self.b * &o.a }
            }
        }
    }

    pub fn norm(&self, d: i64) -> BigRational {
        if self.b.is_zero() {
            return &self.a * &self.a;
        }
        &self.a * &self.a - BigRational::from_integer(d.into()) * &self.b * &self.b
    }

    /// `None` when the norm vanishes (zero, or a zero divisor for square `d`).
    pub fn inverse(&self, d: i64) -> Option<Coeff> {
        let n = self.norm(d);
        if n.is_zero() {
            return None;
        }
        Some(Coeff { a: &self.a / &n, b: -&self.b / &n })
    }
}

/// An element `a + b*w` of the quadratic extension with `w^2 = d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExtElem {
    pub a: BigRational,
    pub b: BigRational,
    pub d: i64,
}

impl QuadExtElem {
    pub fn new(a: BigRational, b: BigRational, d: i64) -> Self {
        QuadExtElem { a, b, d }
    }

    /// The generator `w` itself.
    pub fn generator(d: i64) -> Self {
        QuadExtElem::new(BigRational::zero(), BigRational::one(), d)
    }

    pub fn conjugate(&self) -> Self {
        QuadExtElem::new(self.a.clone(), -&self.b, self.d)
    }

    pub fn norm(&self) -> BigRational {
        self.coeff().norm(self.d)
    }

    pub(crate) fn coeff(&self) -> Coeff {
        Coeff { a: self.a.clone(), b: self.b.clone() }
    }

    pub(crate) fn from_coeff(c: Coeff, d: i64) -> Self {
        QuadExtElem { a: c.a, b: c.b, d }
    }
}

impl fmt::Display for QuadExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = super::RingElem::from(self.clone());
        write!(f, "{e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn product_reduces_w_squared() {
        let a = Coeff { a: q(1, 1), b: q(1, 1) };
        let b = Coeff { a: q(1, 1), b: q(-1, 1) };
        assert_eq!(a.mul(&b, 5), Coeff::rational(q(-4, 1)));
    }

    #[test]
    fn inverse_round_trips() {
        let a = Coeff { a: q(3, 2), b: q(-2, 7) };
        let inv = a.inverse(-1).unwrap();
        assert!(a.mul(&inv, -1).is_one());
    }

    #[test]
    fn zero_divisor_has_no_inverse() {
        // (2 + w)(2 - w) = 0 when w^2 = 4
        let a = Coeff { a: q(2, 1), b: q(1, 1) };
        assert!(a.inverse(4).is_none());
    }
}
