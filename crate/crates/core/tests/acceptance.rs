//! Acceptance criteria, one PASS/FAIL line each. Run with
//! `cargo test --test acceptance`.

use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lucaslab::identities::{
    check_all, check_case, check_grid, reprove_grid, routes, Grid, Mode, NRange, ParamAssignment,
};
use lucaslab::ring::{parse_expr, Ctx, RingElem, Var};
use lucaslab::sequences::{binet_value, lucas_u, lucas_uv_fast, lucas_v, named_term, LucasKind, SeqKind, SeqParams};

const SWEEP_LIMIT: Duration = Duration::from_secs(300);
const BENCH_LIMIT: Duration = Duration::from_secs(10);
const AXIOM_LIMIT: Duration = Duration::from_secs(30);
const MIN_SPEEDUP: f64 = 10.0;
const AXIOM_CASES: usize = 1000;
const SEED: u64 = 20_240_611;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn random_q(rng: &mut ChaCha8Rng, nonzero: bool) -> BigRational {
    loop {
        let n = rng.gen_range(-12i64..=12);
        if !nonzero || n != 0 {
            return q(n, rng.gen_range(1..=7));
        }
    }
}

fn sweep() -> Outcome {
    let t = Instant::now();
    let reports = check_all(&Grid { mode: Mode::Both, ..Grid::default() });
    let elapsed = t.elapsed();
    let cases: usize = reports.iter().map(|r| r.attempted).sum();
    let bad: Vec<_> = reports.iter().filter(|r| !r.ok()).map(|r| r.id.clone()).collect();
    let msg = format!("{} identities, {cases} cases, {:.1}s", reports.len(), elapsed.as_secs_f64());
    if !bad.is_empty() {
        return Err(format!("{msg}; failing: {}", bad.join(", ")));
    }
    if elapsed > SWEEP_LIMIT {
        return Err(format!("{msg}; over {}s", SWEEP_LIMIT.as_secs()));
    }
    Ok(msg)
}

fn telescoping() -> Outcome {
    let mut total = 0;
    for r in routes() {
        let rep = reprove_grid(&r, &Grid::default()).map_err(|e| e.to_string())?;
        if !rep.ok() || rep.attempted == 0 {
            return Err(format!("{} via {}: {:?}", r.theorem, r.lemma, rep.failures.first()));
        }
        total += rep.attempted;
    }
    Ok(format!("{} theorems re-derived over {total} cases", routes().len()))
}

fn fast_vs_naive() -> Outcome {
    let mut checked = 0;
    for (y, z) in [(1, -1), (2, -1), (1, -2)] {
        let p = SeqParams::new(y, z);
        for n in -64..=256 {
            let (u, v) = lucas_uv_fast(&p, n).map_err(|e| e.to_string())?;
            if u != lucas_u(&p, n).unwrap() || v != lucas_v(&p, n).unwrap() {
                return Err(format!("mismatch at y={y} z={z} n={n}"));
            }
            checked += 1;
        }
    }
    let p = SeqParams::symbolic(Ctx::RATIONAL);
    for n in -8..=32 {
        let (u, v) = lucas_uv_fast(&p, n).map_err(|e| e.to_string())?;
        if u != lucas_u(&p, n).unwrap() || v != lucas_v(&p, n).unwrap() {
            return Err(format!("symbolic mismatch at n={n}"));
        }
        checked += 1;
    }
    Ok(format!("{checked} index/parameter pairs agree"))
}

fn negative_and_binet() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let grid = Grid { n: Some(NRange::Fixed(-16, 64)), ..Grid::default() };
    for id in ["NEG-F", "NEG-L", "NEG-T"] {
        let rep = check_grid(id, &grid).map_err(|e| e.to_string())?;
        if !rep.ok() {
            return Err(format!("{id}: {:?}", rep.failures.first()));
        }
    }
    let mut pairs = 0;
    let mut cases = 0;
    while pairs < 20 {
        let (y, z) = (random_q(&mut rng, true), random_q(&mut rng, true));
        if (&y * &y - q(4, 1) * &z) == q(0, 1) {
            continue;
        }
        pairs += 1;
        let p = SeqParams::new(y.clone(), z.clone());
        for n in -16..=64 {
            for id in ["NEG-U", "NEG-V"] {
                let a = ParamAssignment::new(n).bind(Var::Y, y.clone()).bind(Var::Z, z.clone());
                let r = check_case(id, &a).map_err(|e| e.to_string())?;
                if !r.holds() {
                    return Err(format!("{id} at {a}"));
                }
            }
            let bu = binet_value(LucasKind::U, &y, &z, n).map_err(|e| e.to_string())?;
            let bv = binet_value(LucasKind::V, &y, &z, n).map_err(|e| e.to_string())?;
            if bu != lucas_u(&p, n).unwrap() || bv != lucas_v(&p, n).unwrap() {
                return Err(format!("Binet disagrees at y={y} z={z} n={n}"));
            }
            cases += 1;
        }
    }
    Ok(format!("reflection laws and Binet forms hold on {cases} cases over {pairs} pairs"))
}

fn specializations() -> Outcome {
    let one = RingElem::from(1);
    let two = RingElem::from(2);
    for n in -16..=64 {
        let checks = [
            (
                named_term(SeqKind::FibonacciPoly, Some(&one), n),
                named_term(SeqKind::Fibonacci, None, n),
                "F_n(1) = F_n",
            ),
            (named_term(SeqKind::FibonacciPoly, Some(&two), n), named_term(SeqKind::Pell, None, n), "F_n(2) = P_n"),
            (named_term(SeqKind::LucasPoly, Some(&two), n), named_term(SeqKind::PellLucas, None, n), "L_n(2) = Q_n"),
        ];
        for (a, b, what) in checks {
            if a.map_err(|e| e.to_string())? != b.map_err(|e| e.to_string())? {
                return Err(format!("{what} fails at n={n}"));
            }
        }
    }
    let ids = [
        "EVAL-4F",
        "EVAL-4L",
        "EVAL-S5F",
        "EVAL-S5L",
        "ARG-ODD-L",
        "ARG-ODD-F",
        "ARG-EVEN-L",
        "ARG-EVEN-F",
        "ARG-DBL-L",
        "ARG-DBL-F",
    ];
    let mut cases = 0;
    for id in ids {
        let rep = check_grid(id, &Grid::default()).map_err(|e| e.to_string())?;
        if !rep.ok() || rep.attempted == 0 {
            return Err(format!("{id}: {:?}", rep.failures.first()));
        }
        cases += rep.attempted;
    }
    Ok(format!("3 specialization links on [-16, 64]; {} evaluation identities over {cases} cases", ids.len()))
}

fn spot_values() -> Outcome {
    let cases = [
        ("EDG-1", ParamAssignment::new(3).bind(Var::X, 2), 48),
        ("PROP3-F", ParamAssignment::new(2).bind(Var::Y, 1).bind(Var::X, 3), 2),
        ("JAC-A", ParamAssignment::new(2).bind(Var::R, 1).bind(Var::X, 1), 3),
        ("CHEB-THM-A", ParamAssignment::new(2).bind(Var::R, 1).bind(Var::X, 1).bind(Var::Y, 2), 30),
    ];
    for (id, a, want) in cases {
        let r = check_case(id, &a).map_err(|e| e.to_string())?;
        if !r.holds() || r.lhs != RingElem::from(want) {
            return Err(format!("{id} at {a}: lhs {} rhs {}, want {want}", r.lhs.render(), r.rhs.render()));
        }
    }
    Ok("EDG-1 = 48, PROP3-F = 2, JAC-A = 3, CHEB-THM-A = 30".into())
}

fn best_of(reps: usize, f: impl Fn() -> RingElem) -> (Duration, RingElem) {
    let mut best = Duration::MAX;
    let mut v = RingElem::zero();
    for _ in 0..reps {
        let t = Instant::now();
        v = f();
        best = best.min(t.elapsed());
    }
    (best, v)
}

fn performance() -> Outcome {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let t = Instant::now();
    let code = lucaslab::cli::run(["lucaslab", "bench", "fibonacci", "1000000", "--impl", "both"], &mut out, &mut err);
    let elapsed = t.elapsed();
    let text = String::from_utf8_lossy(&out);
    if code != 0 {
        return Err(format!("bench exited {code}: {}", String::from_utf8_lossy(&err)));
    }
    if !text.contains("equal=true") || text.matches("digits=208988").count() != 2 {
        return Err(format!("unexpected bench output: {text}"));
    }
    if elapsed > BENCH_LIMIT {
        return Err(format!("bench took {:.1}s", elapsed.as_secs_f64()));
    }
    let p = SeqParams::new(1, -1);
    let (naive, a) = best_of(3, || lucas_u(&p, 100_000).unwrap());
    let (fast, b) = best_of(10, || lucas_uv_fast(&p, 100_000).unwrap().0);
    if a != b {
        return Err("naive and fast disagree at n = 100000".into());
    }
    let speedup = naive.as_secs_f64() / fast.as_secs_f64().max(1e-9);
    let msg = format!("F_1000000 both ways in {:.2}s; speedup {speedup:.0}x at n = 100000", elapsed.as_secs_f64());
    if speedup < MIN_SPEEDUP {
        return Err(msg);
    }
    Ok(msg)
}

fn random_elem(rng: &mut ChaCha8Rng, ctx: Ctx) -> RingElem {
    let mut e = ctx.int(0);
    for _ in 0..rng.gen_range(0..=4) {
        let mut term = ctx.rational(random_q(rng, false));
        if ctx.ext.is_some() && rng.gen_bool(0.5) {
            term = term + ctx.w() * ctx.rational(random_q(rng, false));
        }
        for v in Var::ALL {
            term = term * ctx.var(v).pow_int(rng.gen_range(-2..=3)).unwrap();
        }
        e = e + term;
    }
    e
}

fn ring_axioms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let ctxs = [Ctx::RATIONAL, Ctx::with_ext(-1), Ctx::with_ext(5), Ctx::with_ext(-3)];
    let t = Instant::now();
    let mut failures = Vec::new();
    for i in 0..AXIOM_CASES {
        let ctx = ctxs[i % ctxs.len()];
        let (a, b, c) = (random_elem(&mut rng, ctx), random_elem(&mut rng, ctx), random_elem(&mut rng, ctx));
        if (&a * &b) * &c != &a * (&b * &c) || (&a + &b) + &c != &a + (&b + &c) {
            failures.push(format!("associativity #{i}"));
        }
        if &a * (&b + &c) != &a * &b + &a * &c {
            failures.push(format!("distributivity #{i}"));
        }
        if !b.is_zero() && (&a * &b).exact_div(&b).as_ref() != Ok(&a) {
            failures.push(format!("exact_div #{i}: ({}) / ({})", (&a * &b).render(), b.render()));
        }
        if parse_expr(&a.render(), ctx).as_ref() != Ok(&a) {
            failures.push(format!("parse(render) #{i}: {}", a.render()));
        }
    }
    let elapsed = t.elapsed();
    let msg = format!("{AXIOM_CASES} cases per axiom in {:.2}s", elapsed.as_secs_f64());
    if !failures.is_empty() {
        return Err(format!("{msg}; {} failures, first {}", failures.len(), failures[0]));
    }
    if elapsed > AXIOM_LIMIT {
        return Err(format!("{msg}; over {}s", AXIOM_LIMIT.as_secs()));
    }
    Ok(msg)
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("registry sweep, both modes, default grids", sweep),
        ("telescoping re-derivation of the weighted sums", telescoping),
        ("fast doubling equals naive recurrence", fast_vs_naive),
        ("negative indices and Binet forms", negative_and_binet),
        ("specializations and special arguments", specializations),
        ("spot values", spot_values),
        ("big-integer performance", performance),
        ("ring axioms on seeded random elements", ring_axioms),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS [{}] {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{}] {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
