//! Timing probe: full face lattice of the chamber with class counts.

fn main() {
    let t0 = std::time::Instant::now();
    let ctx = enriques_surface::build_context();
    eprintln!("context: {:?}", t0.elapsed());
    let t1 = std::time::Instant::now();
    let fd = enriques_surface::compute_faces(&ctx);
    eprintln!("faces: {:?}", t1.elapsed());
    for dim in (1..10).rev() {
        let (o, i, oc, ic) = fd.table[dim];
        println!("dim {dim}: outer {o} (classes {oc}), inner {i} (classes {ic})");
    }
}
