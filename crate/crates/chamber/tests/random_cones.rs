//! LP route against the brute-force vertex/facet enumerator on random
//! pointed cones in three dimensions.

use chamber_engine::{brute, defines_wall};
use lattice_core::mat::{dot, QMat};
use lattice_core::rat::{rat_i, Rat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_pointed_forms(rng: &mut ChaCha8Rng, n: usize, count: usize) -> Vec<Vec<i64>> {
    loop {
        let forms: Vec<Vec<i64>> = (0..count)
            .map(|_| (0..n).map(|_| rng.gen_range(-4i64..=4)).collect())
            .collect();
        if forms.iter().any(|f| f.iter().all(|&x| x == 0)) {
            continue;
        }
        // pointedness: forms must span the space
        let rows: Vec<Vec<Rat>> =
            forms.iter().map(|f| f.iter().map(|&x| rat_i(x)).collect()).collect();
        if QMat::from_rows(&rows).rank() != n {
            continue;
        }
        // no positive-proportional duplicates (distinct half-spaces)
        let mut prims = std::collections::BTreeSet::new();
        let mut ok = true;
        for f in &forms {
            let p = lattice_core::rat::primitive_part(f).unwrap();
            if !prims.insert(p) {
                ok = false;
                break;
            }
        }
        // full-dimensional: some point strictly inside all half-spaces;
        // search a small grid
        let mut interior = false;
        'grid: for a in -6i64..=6 {
            for b in -6i64..=6 {
                for c in -6i64..=6 {
                    let x = [a, b, c];
                    if forms.iter().all(|f| dot(f, &x) > 0) {
                        interior = true;
                        break 'grid;
                    }
                }
            }
        }
        if ok && interior {
            return forms;
        }
    }
}

#[test]
fn lp_walls_match_brute_force_on_random_cones() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0ddba11);
    for trial in 0..40 {
        let count = rng.gen_range(3..=8);
        let forms = random_pointed_forms(&mut rng, 3, count);
        let rays = brute::extreme_rays(&forms);
        assert!(!rays.is_empty(), "trial {trial}: pointed full cone must have rays");
        let brute_facets = brute::facet_indices(&forms, &rays);

        let rat_forms: Vec<Vec<Rat>> = forms
            .iter()
            .map(|f| f.iter().map(|&x| rat_i(x)).collect())
            .collect();
        let lp_facets: Vec<usize> =
            (0..forms.len()).filter(|&i| defines_wall(&rat_forms, i).is_wall()).collect();
        assert_eq!(lp_facets, brute_facets, "trial {trial}: facet sets differ");
    }
}

#[test]
fn face_counts_match_brute_force() {
    // Use a hyperbolic rank-3 lattice so the chamber/face machinery runs
    // end to end; compare counts against the combinatorial oracle.
    let lat = lattice_core::IntegerLattice::hyperbolic(lattice_core::mat::IMat::from_rows(&[
        vec![0, 1, 0],
        vec![1, 0, 0],
        vec![0, 0, -2],
    ]))
    .unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0ffee);
    let mut tested = 0;
    while tested < 12 {
        let count = rng.gen_range(3..=6);
        let forms = random_pointed_forms(&mut rng, 3, count);
        // interior point with positive lattice norm, pairing > 0 with all
        let mut interior = None;
        'grid: for a in -8i64..=8 {
            for b in -8i64..=8 {
                for c in -8i64..=8 {
                    let x = vec![a, b, c];
                    if lat.inner(&x, &x) > 0 && forms.iter().all(|f| dot(f, &x) > 0) {
                        interior = Some(x);
                        break 'grid;
                    }
                }
            }
        }
        let Some(interior) = interior else { continue };
        // The chamber must lie inside the closed positive cone, or the
        // face machinery rightly rejects it: check all brute rays have
        // nonnegative norm.
        let rays = brute::extreme_rays(&forms);
        if rays.iter().any(|r| lat.inner(r, r) < 0) {
            continue;
        }
        tested += 1;

        // forms are pairing covectors; defining vectors are forms * G^{-1}
        let ginv = lat.gram_inv();
        let defining: Vec<Vec<Rat>> = forms
            .iter()
            .map(|f| {
                let fq: Vec<Rat> = f.iter().map(|&x| rat_i(x)).collect();
                QMat::from_rows(&[fq]).mul(ginv).row(0).to_vec()
            })
            .collect();
        let chamber = chamber_engine::Chamber::new(&lat, &defining, interior);
        let walls = chamber.walls_of(&lat);
        let fl = chamber_engine::face_lattice(&lat, &walls);

        let brute_counts = brute::face_counts(&forms, &rays);
        assert_eq!(fl.count(2), brute_counts[2], "facet count");
        assert_eq!(fl.count(1), brute_counts[1], "ray count");
        // wall order invariance: shuffle defining vectors
        let mut shuffled = defining.clone();
        for i in (1..shuffled.len()).rev() {
            let j = rng.gen_range(0..=i);
            shuffled.swap(i, j);
        }
        let chamber2 = chamber_engine::Chamber::new(&lat, &shuffled, walls.interior.clone());
        let fl2 = chamber_engine::face_lattice(&lat, &chamber2.walls_of(&lat));
        assert_eq!(fl.count(2), fl2.count(2));
        assert_eq!(fl.count(1), fl2.count(1));
    }
}
