//! Exact arithmetic in the Laurent ring and in Q(w).

use std::collections::BTreeMap;

use lucaslab::ring::{parse_expr, Ctx, RingElem, Var};

fn main() {
    let q = Ctx::RATIONAL;
    let a = parse_expr("x^2 + 3/2*x*z^-1", q).unwrap();
    let b = parse_expr("x - z^-1", q).unwrap();
    let prod = &a * &b;
    println!("({}) * ({}) = {}", a.render(), b.render(), prod.render());
    println!("divided back by the second factor: {}", prod.exact_div(&b).unwrap().render());
    println!("z^-3 squared: {}", q.var(Var::Z).pow_int(-3).unwrap().pow_int(2).unwrap().render());

    let at: BTreeMap<Var, RingElem> = [(Var::X, 2.into()), (Var::Z, (-4).into())].into_iter().collect();
    println!("at x=2, z=-4: {}", prod.substitute(&at).unwrap().render());

    let k = Ctx::with_ext(5);
    let phi = parse_expr("1/2 + 1/2*w", k).unwrap();
    let psi = parse_expr("1/2 - 1/2*w", k).unwrap();
    println!("in Q(w), w^2 = 5: phi + psi = {}, phi * psi = {}", (&phi + &psi).render(), (&phi * &psi).render());
    println!("phi^10 = {}", phi.pow_int(10).unwrap().render());
    println!("1/phi = {}", phi.inverse().unwrap().render());

    let mixed = Ctx::with_ext(2).int(1).checked_add(&k.int(1));
    println!("mixing Q(sqrt 2) with Q(sqrt 5): {}", mixed.unwrap_err());
}
