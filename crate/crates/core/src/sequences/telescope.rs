use std::ops::RangeInclusive;

use super::SeqError;
use crate::ring::RingElem;

type Eval<'a> = Box<dyn Fn(i64) -> Result<RingElem, SeqError> + 'a>;

/// A sequence `k -> f_k` known on a finite window of indices.
pub struct AbstractSequence<'a> {
    window: RangeInclusive<i64>,
    f: Eval<'a>,
}

impl<'a> AbstractSequence<'a> {
    pub fn new(window: RangeInclusive<i64>, f: impl Fn(i64) -> Result<RingElem, SeqError> + 'a) -> Self {
        AbstractSequence { window, f: Box::new(f) }
    }

    pub fn window(&self) -> &RangeInclusive<i64> {
        &self.window
    }

    pub fn at(&self, k: i64) -> Result<RingElem, SeqError> {
        if !self.window.contains(&k) {
            return Err(SeqError::Window(format!("f_{k} lies outside {:?}", self.window)));
        }
        (self.f)(k)
    }
}

fn check_bounds(c: i64, n: i64) -> Result<(), SeqError> {
    if n < c - 1 {
        return Err(SeqError::Window(format!("sum from {c} to {n} runs backwards")));
    }
    Ok(())
}

/// Direct summation of `sum_{k=c}^{n} (f_{k+1} - f_k)`, or of
/// `sum_{k=c}^{n} (-1)^k (f_{k+1} + f_k)` when `signed`.
pub fn telescope_sum(f: &AbstractSequence<'_>, c: i64, n: i64, signed: bool) -> Result<RingElem, SeqError> {
    check_bounds(c, n)?;
    if n == c - 1 {
        return Ok(RingElem::zero());
    }
    let values = (c..=n + 1).map(|k| f.at(k)).collect::<Result<Vec<_>, _>>()?;
    let mut acc = RingElem::zero();
    for (i, pair) in values.windows(2).enumerate() {
        let k = c + i as i64;
        let term = if signed {
            RingElem::sign(k).checked_mul(&pair[1].checked_add(&pair[0])?)?
        } else {
            pair[1].checked_sub(&pair[0])?
        };
        acc = acc.checked_add(&term)?;
    }
    Ok(acc)
}

/// Boundary form: `f_{n+1} - f_c`, or `(-1)^n f_{n+1} + (-1)^c f_c`.
pub fn telescope_closed_form(f: &AbstractSequence<'_>, c: i64, n: i64, signed: bool) -> Result<RingElem, SeqError> {
    check_bounds(c, n)?;
    let (hi, lo) = (f.at(n + 1)?, f.at(c)?);
    Ok(if signed {
        RingElem::sign(n).checked_mul(&hi)?.checked_add(&RingElem::sign(c).checked_mul(&lo)?)?
    } else {
        hi.checked_sub(&lo)?
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares_unsigned() {
        let f = AbstractSequence::new(-10..=10, |k| Ok(RingElem::from(k * k)));
        assert_eq!(telescope_sum(&f, 0, 4, false).unwrap(), RingElem::from(25));
    }

    #[test]
    fn identity_signed() {
        let f = AbstractSequence::new(-10..=10, |k| Ok(RingElem::from(k)));
        assert_eq!(telescope_sum(&f, 1, 3, true).unwrap(), RingElem::from(-5));
        assert_eq!(telescope_closed_form(&f, 1, 3, true).unwrap(), RingElem::from(-5));
    }

    #[test]
    fn empty_sum() {
        let f = AbstractSequence::new(-10..=10, |k| Ok(RingElem::from(k * k * k - 3)));
        for signed in [false, true] {
            assert_eq!(telescope_sum(&f, 4, 3, signed).unwrap(), RingElem::zero());
            assert_eq!(telescope_closed_form(&f, 4, 3, signed).unwrap(), RingElem::zero());
        }
    }

    #[test]
    fn window_errors() {
        let f = AbstractSequence::new(0..=5, |k| Ok(RingElem::from(k)));
        assert!(matches!(telescope_sum(&f, 0, 5, false), Err(SeqError::Window(_))));
        assert!(matches!(telescope_sum(&f, 3, 1, false), Err(SeqError::Window(_))));
    }

    #[test]
    fn matches_closed_form_on_random_sequences() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let vals: Vec<i64> = (0..41).map(|_| rng.gen_range(-1000..1000)).collect();
        let f = AbstractSequence::new(-20..=20, |k| Ok(RingElem::from(vals[(k + 20) as usize])));
        for c in -20..=10 {
            for n in (c - 1)..=19 {
                for signed in [false, true] {
                    assert_eq!(
                        telescope_sum(&f, c, n, signed).unwrap(),
                        telescope_closed_form(&f, c, n, signed).unwrap()
                    );
                }
            }
        }
    }
}
