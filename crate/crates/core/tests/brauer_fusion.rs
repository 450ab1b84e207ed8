use bcd_yangian::brauer::brauer_checks;
use bcd_yangian::report::Status;
use bcd_yangian::AlgebraContext;

#[test]
fn fusion_grid() {
    for (ctx, m) in [
        (AlgebraContext::orthogonal(3).unwrap(), 3),
        (AlgebraContext::orthogonal(4).unwrap(), 3),
        (AlgebraContext::symplectic(4).unwrap(), 2),
    ] {
        let recs = brauer_checks(&ctx, m);
        assert_eq!(recs.len(), 3 * m);
        for r in recs {
            assert_eq!(r.status, Status::Pass, "{} {:?} {:?} {:?}", r.name, r.params, r.witness, r.message);
        }
    }
}
