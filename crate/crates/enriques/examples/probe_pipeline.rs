//! Timing probe for the full quotient-surface pipeline.

fn main() {
    let stage: String = std::env::args().nth(1).unwrap_or_else(|| "all".into());
    let t0 = std::time::Instant::now();
    let ctx = enriques_surface::build_context();
    eprintln!("context: {:?}", t0.elapsed());

    if stage == "vinberg" || stage == "all" {
        let t = std::time::Instant::now();
        let count = enriques_surface::vinberg_count(&ctx, 1_000_000);
        eprintln!("vinberg: {count} in {:?}", t.elapsed());
    }

    if stage == "curves" || stage == "all" {
        let t = std::time::Instant::now();
        let curves = enriques_surface::rational_curves(&ctx, 45);
        eprintln!("curves to 45: {:?}", t.elapsed());
        for d in 1..=45 {
            let c = curves.count(d);
            if c > 0 {
                println!("R_{d}: {c}");
            }
        }
    }

    if stage == "faces" || stage == "all" {
        let t = std::time::Instant::now();
        let fd = enriques_surface::compute_faces(&ctx);
        eprintln!("faces: {:?}", t.elapsed());

        let t = std::time::Instant::now();
        let rels = enriques_surface::defining_relations(&ctx, &fd);
        eprintln!(
            "relations: {} relators, {} commuting pairs, {} hexagon triples in {:?}",
            rels.relators.len(),
            rels.commuting_pairs.len(),
            rels.hexagon_triples.len(),
            t.elapsed()
        );

        let t = std::time::Instant::now();
        let need_fib = enriques_surface::max_fiber_degree(&ctx, &fd);
        let need_rdp = enriques_surface::rdp_degree_bound(&ctx, &fd);
        eprintln!("degree bounds: fibrations {need_fib}, rdp {need_rdp} in {:?}", t.elapsed());

        let t = std::time::Instant::now();
        let d_max = (need_fib - 1).max(need_rdp);
        let curves = enriques_surface::rational_curves(&ctx, d_max);
        eprintln!("curves to {d_max}: {:?}", t.elapsed());

        let t = std::time::Instant::now();
        let fibs = enriques_surface::elliptic_fibrations(&ctx, &fd, &curves);
        eprintln!("fibrations: {:?}", t.elapsed());
        for (full, half, count) in enriques_surface::fibration_table(&fibs) {
            println!("[{full}, {half}] x {count}");
        }

        let t = std::time::Instant::now();
        let rdp = enriques_surface::rdp_configurations(&ctx, &fd, &curves);
        eprintln!("rdp: total {} classes in {:?}", rdp.total_classes, t.elapsed());
        for (ty, count) in &rdp.rows {
            println!("{ty}: {count}");
        }

        let wit = enriques_surface::autinj_witnesses(&ctx, &curves, &fd);
        println!("witnesses ok: {}", wit.all_ok());
    }
}
