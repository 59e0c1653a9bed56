//! Telescoping sums over an abstract sequence, and the registered routes
//! that re-derive sum identities from pointwise lemmas.

use lucaslab::identities::{reprove_grid, routes, Grid, Mode};
use lucaslab::ring::{parse_expr, Ctx};
use lucaslab::sequences::{telescope_closed_form, telescope_sum, AbstractSequence};

fn main() {
    let x = parse_expr("x", Ctx::RATIONAL).unwrap();
    let f = AbstractSequence::new(-10..=20, |k| Ok(x.pow_int(k).unwrap()));
    for signed in [false, true] {
        let s = telescope_sum(&f, -2, 3, signed).unwrap();
        let c = telescope_closed_form(&f, -2, 3, signed).unwrap();
        println!("signed={signed}: direct {} | closed {} | equal {}", s.render(), c.render(), s == c);
    }

    let grid = Grid { mode: Mode::Symbolic, ..Grid::default() };
    for r in routes() {
        let rep = reprove_grid(&r, &grid).unwrap();
        println!("{:<12} via {:<12} {}/{}", r.theorem, r.lemma, rep.passed, rep.attempted);
    }
}
