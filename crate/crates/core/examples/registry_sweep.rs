//! Sweep every registered identity over its default grid.

use lucaslab::identities::{check_all, registry, Grid};

fn main() {
    let reps = check_all(&Grid::default());
    let cases: usize = reps.iter().map(|r| r.attempted).sum();
    let passed: usize = reps.iter().map(|r| r.passed).sum();
    for (rec, rep) in registry().iter().zip(&reps) {
        let mark = if rep.ok() { "ok  " } else { "FAIL" };
        println!("{mark} {:<14} {:>4} cases {:>6} ms  {}", rep.id, rep.attempted, rep.millis, rec.source);
    }
    println!("{passed}/{cases} cases passed across {} identities", reps.len());
}
