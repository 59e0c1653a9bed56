use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{LucasKind, SeqError};
use crate::ring::{Ctx, QuadExtElem, RingElem, RingError};

/// The characteristic roots `tau, sigma` of `t^2 - y t + z` inside
/// `Q(w)`, `w^2 = d`.
///
/// `d` is the squarefree-reduced integer form of `y^2 - 4z = p/q`: with
/// `p*q = s^2 d` we have `sqrt(y^2 - 4z) = (s/q) w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinetContext {
    pub tau: QuadExtElem,
    pub sigma: QuadExtElem,
    pub discriminant: BigRational,
}

fn split_square(mut n: BigInt) -> (BigInt, BigInt) {
    let mut s = BigInt::one();
    let mut f = BigInt::from(2);
    while &f * &f <= n.abs() && f <= BigInt::from(10_000) {
        let sq = &f * &f;
        while n.mod_floor(&sq).is_zero() {
            n /= &sq;
            s *= &f;
        }
        f += 1;
    }
    (s, n)
}

impl BinetContext {
    pub fn new(y: &BigRational, z: &BigRational) -> Result<Self, SeqError> {
        let disc = y * y - BigRational::from_integer(4.into()) * z;
        if disc.is_zero() {
            return Err(SeqError::DegenerateDiscriminant);
        }
        let (s, d) = split_square(disc.numer() * disc.denom());
        let d = i64::try_from(d).map_err(|_| RingError::DiscriminantOverflow)?;
        let half_y = y / BigRational::from_integer(2.into());
        let half_root = BigRational::new(s, disc.denom() * 2);
        Ok(BinetContext {
            tau: QuadExtElem::new(half_y.clone(), half_root.clone(), d),
            sigma: QuadExtElem::new(half_y, -half_root, d),
            discriminant: disc,
        })
    }

    pub fn ctx(&self) -> Ctx {
        Ctx::with_ext(self.tau.d)
    }

    pub fn value(&self, kind: LucasKind, n: i64) -> Result<RingElem, SeqError> {
        let tau = RingElem::from(self.tau.clone());
        let sigma = RingElem::from(self.sigma.clone());
        let (tn, sn) = (tau.pow_int(n)?, sigma.pow_int(n)?);
        Ok(match kind {
            LucasKind::U => tn.checked_sub(&sn)?.exact_div(&tau.checked_sub(&sigma)?)?,
            LucasKind::V => tn.checked_add(&sn)?,
        })
    }
}

/// `u_n` or `v_n` from the closed forms `(tau^n - sigma^n)/(tau - sigma)`
/// and `tau^n + sigma^n`, evaluated in the quadratic extension.
pub fn binet_value(kind: LucasKind, y: &BigRational, z: &BigRational, n: i64) -> Result<RingElem, SeqError> {
    BinetContext::new(y, z)?.value(kind, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn lucas_and_fibonacci_values() {
        assert_eq!(binet_value(LucasKind::V, &q(1), &q(-1), 3).unwrap(), RingElem::from(4));
        assert_eq!(binet_value(LucasKind::U, &q(1), &q(-1), -3).unwrap(), RingElem::from(2));
        assert!(!binet_value(LucasKind::U, &q(1), &q(-1), 17).unwrap().has_w());
    }

    #[test]
    fn repeated_root_is_rejected() {
        assert_eq!(binet_value(LucasKind::U, &q(2), &q(1), 5), Err(SeqError::DegenerateDiscriminant));
    }

    #[test]
    fn root_relations() {
        let y = BigRational::new(3.into(), 7.into());
        let z = BigRational::new((-5).into(), 2.into());
        let b = BinetContext::new(&y, &z).unwrap();
        let (t, s) = (RingElem::from(b.tau.clone()), RingElem::from(b.sigma.clone()));
        assert_eq!(&t + &s, RingElem::from(y));
        assert_eq!(&t * &s, RingElem::from(z));
        let diff = &t - &s;
        assert_eq!(&diff * &diff, RingElem::from(b.discriminant.clone()));
    }

    #[test]
    fn rational_roots_still_work() {
        // y^2 - 4z = 1: roots 2 and 1, u_n = 2^n - 1
        for n in -4..10 {
            let u = binet_value(LucasKind::U, &q(3), &q(2), n).unwrap();
            let expect = RingElem::from(2).pow_int(n).unwrap() - 1;
            assert_eq!(u, expect, "n={n}");
        }
    }
}
