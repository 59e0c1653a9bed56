//! Checking one identity: a single case, a grid, and a deliberately broken
//! copy that the checker rejects.

use std::sync::Arc;

use lucaslab::identities::{check_case, check_record_grid, find, reports_text, Grid, ParamAssignment};
use lucaslab::ring::Var;

fn main() {
    let rec = find("EDG-1").unwrap();
    println!("{}: {}  [{}]", rec.id, rec.statement, rec.domain());

    let r = check_case("EDG-1", &ParamAssignment::new(4).bind(Var::X, 2)).unwrap();
    println!("n=4 x=2: lhs={} rhs={} holds={}", r.lhs.render(), r.rhs.render(), r.holds());
    let r = check_case("EDG-1", &ParamAssignment::new(3)).unwrap();
    println!("n=3 symbolic: {}", r.rhs.render());

    let grid = Grid::default();
    print!("{}", reports_text(&[check_record_grid(rec, &grid)]));

    let rhs = rec.rhs.clone();
    let broken = rec.with_sides(rec.lhs.clone(), Arc::new(move |e| Ok(rhs(e)? + 1)));
    let rep = check_record_grid(&broken, &grid);
    println!("broken copy: {}/{} passed, first failure at {}", rep.passed, rep.attempted, rep.failures[0].params);
}
