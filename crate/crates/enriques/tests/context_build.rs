//! The context constructor performs every structural check itself; this
//! test exists to run it end to end and to pin a few headline facts.

use enriques_surface::build_context;

#[test]
fn context_builds_with_all_invariants() {
    let ctx = build_context();
    assert_eq!(ctx.dy.pairings.len(), 20);
    assert_eq!(ctx.aut_dy.len(), 120);
    assert_eq!(ctx.g_bar.len(), 10);
    // chamber classification of distinguished points
    use chamber_engine::PointClass;
    assert_eq!(ctx.dy.classify_point_i(&ctx.h_y), PointClass::Interior);
    let neg: Vec<i64> = ctx.h_y.iter().map(|&x| -x).collect();
    assert_eq!(ctx.dy.classify_point_i(&neg), PointClass::Outside);
    // a boundary point: 2*h_y + u_bar[3] lies on exactly the wall of
    // u_bar[3] (pairing 2*1 - 2 = 0) and strictly inside every other wall.
    let w = ctx.u_wall_index(3);
    let mut x: Vec<i64> = ctx.h_y.iter().map(|&v| 2 * v).collect();
    for (xi, ui) in x.iter_mut().zip(&ctx.u_bar[3]) {
        *xi += ui;
    }
    match ctx.dy.classify_point_i(&x) {
        PointClass::Boundary(active) => assert_eq!(active, vec![w]),
        other => panic!("expected boundary, got {other:?}"),
    }
}
