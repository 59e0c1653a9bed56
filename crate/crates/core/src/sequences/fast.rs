//! Index-doubling evaluation of `(u_n, v_n)` and the plain big-integer
//! kernels used when `y` and `z` are integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::ring::RingElem;

pub(crate) trait Doubling: Clone {
    fn from_small(n: i64) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    /// Exact halving; the doubling step only halves even quantities.
    fn halve(&self) -> Self;
}

impl Doubling for BigInt {
    fn from_small(n: i64) -> Self {
        BigInt::from(n)
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn halve(&self) -> Self {
        self / 2u32
    }
}

impl Doubling for RingElem {
    fn from_small(n: i64) -> Self {
        RingElem::from(n)
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn halve(&self) -> Self {
        self * RingElem::from(BigRational::new(1.into(), 2.into()))
    }
}

/// `(u_n, v_n)` for `n >= 0` by walking the bits of `n` from the top.
///
/// State is `(u_k, v_k, z^k)`:
///   doubling   u_2k = u_k v_k,              v_2k = v_k^2 - 2 z^k
///   increment  u_k+1 = (y u_k + v_k) / 2,   v_k+1 = ((y^2 - 4z) u_k + y v_k) / 2
pub(crate) fn doubling<T: Doubling>(y: &T, z: &T, n: u64) -> (T, T) {
    let two = T::from_small(2);
    let disc = y.mul(y).sub(&T::from_small(4).mul(z));
    let (mut u, mut v, mut zk) = (T::from_small(0), two.clone(), T::from_small(1));
    let bits = 64 - n.leading_zeros();
    for i in (0..bits).rev() {
        let u2 = u.mul(&v);
        let v2 = v.mul(&v).sub(&two.mul(&zk));
        zk = zk.mul(&zk);
        u = u2;
        v = v2;
        if (n >> i) & 1 == 1 {
            let u1 = y.mul(&u).add(&v).halve();
            let v1 = disc.mul(&u).add(&y.mul(&v)).halve();
            u = u1;
            v = v1;
            zk = zk.mul(z);
        }
    }
    (u, v)
}

/// `a_n` for `a_k = y a_{k-1} - z a_{k-2}` by straight iteration.
pub(crate) fn naive_int(y: &BigInt, z: &BigInt, a0: BigInt, a1: BigInt, n: u64) -> BigInt {
    if n == 0 {
        return a0;
    }
    let neg_z = -z;
    let (mut prev, mut cur) = (a0, a1);
    for _ in 1..n {
        if neg_z.is_zero() {
            prev.set_zero();
        } else if !neg_z.is_one() {
            prev *= &neg_z;
        }
        if y.is_one() {
            prev += &cur;
        } else {
            prev += &cur * y;
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    cur
}
