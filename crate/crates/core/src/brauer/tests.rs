use super::*;
use crate::scalar::rat::rat;
use crate::tensor::build_pq;

#[test]
fn o3_m2_closed_form() {
    let ctx = AlgebraContext::orthogonal(3).unwrap();
    let (p, q) = build_pq(&ctx, ("1", "2"), &int(0));
    let id = TensorOp::identity(&["1", "2"], 3, &int(0));
    let expect = id.add(&p).unwrap().scale(&rat(1, 2)).sub(&q.scale(&rat(1, 3))).unwrap();
    assert_eq!(symmetrizer(&ctx, 2).unwrap(), expect);
    assert_eq!(fusion_eval(&ctx, 2).unwrap(), expect);
}

#[test]
fn sp4_m2_closed_form() {
    // (1 - P)/2 - Q/N has trace dim of the degree-2 part of sp4 harmonic polys
    let ctx = AlgebraContext::symplectic(4).unwrap();
    let (p, q) = build_pq(&ctx, ("1", "2"), &int(0));
    let id = TensorOp::identity(&["1", "2"], 4, &int(0));
    let expect = id.sub(&p).unwrap().scale(&rat(1, 2)).sub(&q.scale(&rat(1, 4))).unwrap();
    let s = symmetrizer(&ctx, 2).unwrap();
    assert_eq!(s, expect);
    assert_eq!(s.trace(), int(5));
}

#[test]
fn trace_coefficients() {
    let o3 = AlgebraContext::orthogonal(3).unwrap();
    assert_eq!(trace_coefficient(&o3, 1).unwrap(), int(3));
    let sp4 = AlgebraContext::symplectic(4).unwrap();
    assert_eq!(trace_coefficient(&sp4, 1).unwrap(), int(4));
    // ranks of S_[m]: dimensions of traceless symmetric tensors
    let o3_s2 = symmetrizer(&o3, 2).unwrap();
    assert_eq!(o3_s2.trace(), int(5));
    assert_eq!(trace_coefficient(&o3, 2).unwrap() * int(3), int(5));
    let o2 = AlgebraContext::orthogonal(2).unwrap();
    assert!(trace_coefficient(&o2, 1).is_err());
}

#[test]
fn offsets() {
    assert_eq!(fusion_offsets(Kind::Orthogonal, 3), vec![-2, -1, 0]);
    assert_eq!(fusion_offsets(Kind::Symplectic, 3), vec![0, -1, -2]);
}
