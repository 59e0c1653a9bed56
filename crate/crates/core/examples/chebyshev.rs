//! Chebyshev polynomials of both kinds and their link to the Lucas pair.

use lucaslab::ring::{parse_expr, Ctx};
use lucaslab::sequences::{cheb_window, lucas_u, lucas_v, SeqParams};

fn main() {
    let q = Ctx::RATIONAL;
    let y = parse_expr("y", q).unwrap();
    let w = cheb_window(&y, -2, 6).unwrap();
    for k in w.lo()..=w.hi() {
        println!("T_{k:<2} = {:<36} U_{k:<2} = {}", w.t(k).unwrap().render(), w.u(k).unwrap().render());
    }
    let p = SeqParams::new(parse_expr("2*y", q).unwrap(), 1);
    let ok = (0..=6)
        .all(|k| 2 * w.t(k).unwrap() == lucas_v(&p, k).unwrap() && *w.u(k).unwrap() == lucas_u(&p, k + 1).unwrap());
    println!("2 T_n = v_n(2y, 1) and U_n = u_(n+1)(2y, 1) for n = 0..6: {ok}");
    let half = parse_expr("1/2", q).unwrap();
    println!("T_6(1/2) = {}", cheb_window(&half, 6, 6).unwrap().t(6).unwrap().render());
}
