//! Symbolic u_n(y, z) and v_n(y, z); negative indices live in the Laurent
//! ring because stepping backwards divides by z.

use lucaslab::ring::Ctx;
use lucaslab::sequences::{lucas_window, SeqParams};

fn main() {
    let p = SeqParams::symbolic(Ctx::RATIONAL);
    let w = lucas_window(&p, -3, 5).unwrap();
    for k in w.lo()..=w.hi() {
        println!("u_{k:<2} = {:<32} v_{k:<2} = {}", w.u(k).unwrap().render(), w.v(k).unwrap().render());
    }

    let fib = SeqParams::new(1, -1);
    let w = lucas_window(&fib, 0, 12).unwrap();
    let last: Vec<String> = (0..=12).map(|k| w.u(k).unwrap().render()).collect();
    println!("u_n(1, -1): {}", last.join(" "));
}
