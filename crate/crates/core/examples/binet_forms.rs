//! Closed forms through the characteristic roots in Q(w).

use lucaslab::ring::RingElem;
use lucaslab::sequences::{lucas_u, lucas_v, BinetContext, LucasKind, SeqParams};
use num_rational::BigRational;

fn main() {
    for (y, z) in [(1, -1), (2, -1), (1, -2), (3, 1), (1, 1)] {
        let (yq, zq) = (BigRational::from_integer(y.into()), BigRational::from_integer(z.into()));
        let b = BinetContext::new(&yq, &zq).unwrap();
        let ctx = b.ctx();
        println!(
            "y={y} z={z}: disc={} w^2={:?} tau={} sigma={}",
            b.discriminant,
            ctx.ext,
            RingElem::from(b.tau.clone()).in_ctx(ctx).render(),
            RingElem::from(b.sigma.clone()).in_ctx(ctx).render()
        );
        let p = SeqParams::new(y, z);
        for n in [-4, 0, 7, 20] {
            let (bu, bv) = (b.value(LucasKind::U, n).unwrap(), b.value(LucasKind::V, n).unwrap());
            let (ru, rv) = (lucas_u(&p, n).unwrap(), lucas_v(&p, n).unwrap());
            println!("  n={n:<3} u={:<12} v={:<12} agree={}", bu.render(), bv.render(), bu == ru && bv == rv);
        }
    }
}
