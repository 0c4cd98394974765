mod common;

use common::random_triangle_free;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use tfx_core::bounds::{c5_blowup_inequality, Rational};
use tfx_core::constructions::{g_family_all, h_n};
use tfx_core::invariants::verify::verify_certificate;
use tfx_core::invariants::{is_bipartite, max_matching, min_vertex_cover};
use tfx_core::lemmas::{
    check_degree_sum_inequality, classify_c5_structure, classify_nu3, greedy_bipartization,
    verify_verdict, ResidualClass,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn c5_inequality_holds(z in proptest::array::uniform5((1i128..200, 1i128..20)), frac in 0i128..=16) {
        let z = z.map(|(p, q)| Rational::new(p, q));
        let z0 = *z.iter().min().unwrap() * Rational::new(frac, 16);
        let c = c5_blowup_inequality(z, z0).unwrap();
        prop_assert!(c.holds, "lhs={} rhs={}", c.lhs, c.rhs);
    }
}

#[test]
fn h_n_bipartization_at_scale() {
    for n in 90..=120 {
        let g = h_n(n).unwrap();
        let t = greedy_bipartization(&g).unwrap();
        assert!(t.deleted.len() <= 15, "n={n}");
        assert_eq!(t.residual_class, ResidualClass::Bipartite);
    }
}

#[test]
fn degree_sum_holds_for_proper_subsets_at_scale() {
    for n in [90, 100, 120] {
        for g in g_family_all(n).step_by(997).take(20) {
            let t = greedy_bipartization(&g).unwrap();
            let deleted = t.deleted_vertices();
            for skip in 0..deleted.len() {
                let s: Vec<usize> = deleted
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                assert!(check_degree_sum_inequality(&t, &s).unwrap().holds, "n={n}");
            }
        }
    }
}

#[test]
fn bipartization_is_total_and_sound() {
    let mut rng = StdRng::seed_from_u64(21);
    for i in 0..300 {
        let n = 1 + i % 20;
        let g = random_triangle_free(&mut rng, n, 4 * n);
        let t = greedy_bipartization(&g).unwrap();
        assert_eq!(t.residual.n() + t.deleted.len(), n);
        if let Some(c) = &t.residual_certificate {
            verify_certificate(&t.residual, c).unwrap();
        }
        assert_eq!(
            t.residual_class == ResidualClass::Bipartite,
            is_bipartite(&t.residual).is_bipartite()
        );
        // below n = 90 the inequality is only evaluated, never guaranteed
        let empty = check_degree_sum_inequality(&t, &[]).unwrap();
        assert!(empty.holds && empty.lhs == empty.rhs);
        let deleted = t.deleted_vertices();
        let check = check_degree_sum_inequality(&t, &deleted).unwrap();
        assert_eq!(check.holds, check.lhs <= check.rhs);
    }
}

#[test]
fn structure_classifier_is_verified() {
    let mut rng = StdRng::seed_from_u64(22);
    for i in 0..300 {
        let n = 3 + i % 12;
        let g = random_triangle_free(&mut rng, n, 3 * n);
        let v = classify_c5_structure(&g).unwrap();
        verify_verdict(&g, &v).unwrap();
        let nu = max_matching(&g).nu;
        if g.min_degree() > 0 && nu == 3 && min_vertex_cover(&g).unwrap().tau >= 4 {
            let v = classify_nu3(&g).unwrap();
            verify_verdict(&g, &v).unwrap();
        } else {
            assert!(classify_nu3(&g).is_err());
        }
    }
}
