use std::collections::BTreeMap;

use super::quad::Coeff;
use super::Var;

/// Exponent vector over `(x, y, z, r)`. The derived order is lexicographic
/// on that tuple and is the canonical term order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub [i32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn var(v: Var) -> Self {
        let mut e = [0; 4];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn exponent(&self, v: Var) -> i32 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn has_negative(&self) -> bool {
        self.0.iter().any(|&e| e < 0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(o.0) {
            *a += b;
        }
        Monomial(e)
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.map(|e| -e))
    }

    pub fn pow(&self, k: i32) -> Monomial {
        Monomial(self.0.map(|e| e * k))
    }

    fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(o.0).all(|(&a, b)| a <= b)
    }

    fn meet(&self, o: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(o.0) {
            *a = (*a).min(b);
        }
        Monomial(e)
    }
}

/// Canonical sparse term map: no zero coefficients are ever stored.
pub(crate) type Terms = BTreeMap<Monomial, Coeff>;

/// A Laurent polynomial in `x, y, z, r` with coefficients in the
/// surrounding context's quadratic extension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    pub(crate) terms: Terms,
}

impl LaurentPoly {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (ascending lexicographic) order, as
    /// `(monomial, rational part, w part)`.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &num_rational::BigRational, &num_rational::BigRational)> {
        self.terms.iter().map(|(m, c)| (m, &c.a, &c.b))
    }
}

pub(crate) fn add_term(t: &mut Terms, m: Monomial, c: Coeff) {
    if c.is_zero() {
        return;
    }
    match t.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            e.get_mut().add_assign(&c);
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

pub(crate) fn add(a: &Terms, b: &Terms) -> Terms {
    let (mut out, other) = if a.len() >= b.len() { (a.clone(), b) } else { (b.clone(), a) };
    for (m, c) in other {
        add_term(&mut out, *m, c.clone());
    }
    out
}

pub(crate) fn neg(a: &Terms) -> Terms {
    a.iter().map(|(m, c)| (*m, c.neg())).collect()
}

pub(crate) fn sub(a: &Terms, b: &Terms) -> Terms {
    let mut out = a.clone();
    for (m, c) in b {
        add_term(&mut out, *m, c.neg());
    }
    out
}

pub(crate) fn mul(a: &Terms, b: &Terms, d: i64) -> Terms {
    let mut out = Terms::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            add_term(&mut out, ma.mul(mb), ca.mul(cb, d));
        }
    }
    out
}

pub(crate) fn scale(a: &Terms, m: &Monomial, c: &Coeff, d: i64) -> Terms {
    a.iter().map(|(ma, ca)| (ma.mul(m), ca.mul(c, d))).filter(|(_, c)| !c.is_zero()).collect()
}

fn min_monomial(a: &Terms) -> Monomial {
    let mut it = a.keys();
    let first = *it.next().expect("nonempty");
    it.fold(first, |acc, m| acc.meet(m))
}

/// Exact quotient `a / b` in the Laurent ring, or `None` if `b` does not
/// divide `a` (or a needed leading coefficient is not invertible).
///
/// Both operands are shifted by monomials so that neither has negative
/// exponents and `b` has no monomial content; ordinary lex division on the
/// shifted pair then decides divisibility with remainder zero.
pub(crate) fn div(a: &Terms, b: &Terms, d: i64) -> Option<Terms> {
    if a.is_empty() {
        return Some(Terms::new());
    }
    if b.len() == 1 {
        let (mb, cb) = b.iter().next().unwrap();
        let inv = cb.inverse(d)?;
        return Some(scale(a, &mb.inv(), &inv, d));
    }
    let shift_a = min_monomial(a);
    let shift_b = min_monomial(b);
    let mut rem = scale(a, &shift_a.inv(), &Coeff::one(), d);
    let divisor = scale(b, &shift_b.inv(), &Coeff::one(), d);
    let (lead_m, lead_c) = divisor.iter().next_back().map(|(m, c)| (*m, c.clone())).unwrap();
    let lead_inv = lead_c.inverse(d)?;
    let mut quot = Terms::new();
    while let Some((rm, rc)) = rem.iter().next_back().map(|(m, c)| (*m, c.clone())) {
        if !lead_m.divides(&rm) {
            return None;
        }
        let qm = rm.mul(&lead_m.inv());
        let qc = rc.mul(&lead_inv, d);
        for (m, c) in &divisor {
            add_term(&mut rem, m.mul(&qm), c.mul(&qc, d).neg());
        }
        add_term(&mut quot, qm, qc);
    }
    Some(scale(&quot, &shift_a.mul(&shift_b.inv()), &Coeff::one(), d))
}
