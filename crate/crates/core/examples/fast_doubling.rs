//! Fast doubling against plain iteration, with timings.

use std::time::Instant;

use lucaslab::sequences::{named_term_with, Method, SeqKind};

fn main() {
    let n: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(200_000);
    let t = Instant::now();
    let fast = named_term_with(SeqKind::Fibonacci, None, n, Method::Fast).unwrap();
    let fast_ms = t.elapsed().as_secs_f64() * 1e3;
    let t = Instant::now();
    let naive = named_term_with(SeqKind::Fibonacci, None, n, Method::Naive).unwrap();
    let naive_ms = t.elapsed().as_secs_f64() * 1e3;
    let digits = fast.render().trim_start_matches('-').len();
    println!("F_{n}: {digits} digits, equal={}", fast == naive);
    println!("fast {fast_ms:.2} ms, naive {naive_ms:.2} ms, ratio {:.1}", naive_ms / fast_ms.max(1e-6));
    let neg = named_term_with(SeqKind::Lucas, None, -n, Method::Fast).unwrap();
    let pos = named_term_with(SeqKind::Lucas, None, n, Method::Fast).unwrap();
    println!("L_-n = (-1)^n L_n: {}", neg == if n % 2 == 0 { pos } else { -pos });
}
