use bcd_yangian::report::Status;
use bcd_yangian::tensor::checks::{fseries_checks, rbar_checks, rmatrix_checks};
use bcd_yangian::AlgebraContext;

fn assert_all(recs: Vec<bcd_yangian::report::CheckRecord>) {
    for r in recs {
        assert_eq!(r.status, Status::Pass, "{} {:?} {:?}", r.name, r.witness, r.message);
    }
}

#[test]
fn o3_rmatrix_identities() {
    assert_all(rmatrix_checks(&AlgebraContext::orthogonal(3).unwrap()));
}

#[test]
fn sp4_rmatrix_identities() {
    assert_all(rmatrix_checks(&AlgebraContext::symplectic(4).unwrap()));
}

#[test]
fn fseries_functional_equations() {
    for ctx in [AlgebraContext::orthogonal(5).unwrap(), AlgebraContext::symplectic(6).unwrap()] {
        assert_all(fseries_checks(&ctx, 12));
    }
}

#[test]
fn rbar_identities_o4() {
    assert_all(rbar_checks(&AlgebraContext::orthogonal(4).unwrap(), 4, 4));
}
