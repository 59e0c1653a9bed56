//! Terms of the named integer and polynomial sequences, including negative
//! indices.

use lucaslab::ring::{parse_expr, Ctx};
use lucaslab::sequences::{named_term, SeqKind};

fn main() {
    for kind in [
        SeqKind::Fibonacci,
        SeqKind::Lucas,
        SeqKind::Pell,
        SeqKind::PellLucas,
        SeqKind::Jacobsthal,
        SeqKind::JacobsthalLucas,
    ] {
        let terms: Vec<String> = (-5..=10).map(|n| named_term(kind, None, n).unwrap().render()).collect();
        println!("{:>16} n=-5..10: {}", kind.name(), terms.join(" "));
    }

    let x = parse_expr("x", Ctx::RATIONAL).unwrap();
    for n in [-3, 0, 1, 2, 5] {
        println!(
            "F_{n}(x) = {:<24} L_{n}(x) = {}",
            named_term(SeqKind::FibonacciPoly, Some(&x), n).unwrap().render(),
            named_term(SeqKind::LucasPoly, Some(&x), n).unwrap().render()
        );
    }
}
