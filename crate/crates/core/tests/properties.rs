//! Randomized invariants over small integer simplices.

use proptest::prelude::*;
use simplicia::rational::ratio;
use simplicia::subdivision::FnChooser;
use simplicia::verify::{brute_mesh, check_contraction_pair, realization_equal};
use simplicia::{
    barycentric_coordinates, barycentric_flags, barycentric_subdivide, diameter, is_subdivision, mesh_value,
    subdivide_skeletonwise, validate_complex, ComplexBuilder, GeometricComplex, MetricKind, Point, Rational,
};

fn simplex_from(coords: &[Vec<i64>]) -> GeometricComplex {
    let mut b = ComplexBuilder::new(coords[0].len());
    let ids: Vec<_> =
        coords.iter().enumerate().map(|(i, c)| b.add_vertex(format!("v{i}"), Point::from_ints(c)).unwrap()).collect();
    b.add_simplex(&ids).unwrap();
    b.build()
}

fn nondegenerate(coords: &[Vec<i64>]) -> bool {
    let k = simplex_from(coords);
    validate_complex(&k).is_valid()
}

/// `n + 1` integer points in `R^n`, affinely independent.
fn simplex(n: usize) -> impl Strategy<Value = GeometricComplex> {
    prop::collection::vec(prop::collection::vec(-6i64..=6, n), n + 1)
        .prop_filter("affinely independent", |c| nondegenerate(c))
        .prop_map(|c| simplex_from(&c))
}

fn weights(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(1i64..=9, len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn barycentric_weights_round_trip(k in simplex(3), raw in weights(4)) {
        let total: i64 = raw.iter().sum();
        let lambda: Vec<Rational> = raw.iter().map(|&r| ratio(r, total)).collect();
        let top = &k.maximal()[0];
        let x = Point::affine_combination(&k.points_of(top), &lambda);
        let c = barycentric_coordinates(&k, top, &x).unwrap().unwrap();
        prop_assert_eq!(&c.weights, &lambda);
        prop_assert!(c.in_interior());
    }

    #[test]
    fn subdivision_preserves_the_realization(k in simplex(2)) {
        let (l, w) = barycentric_subdivide(&k);
        prop_assert!(validate_complex(&l).is_valid());
        prop_assert_eq!(is_subdivision(&l, &k).unwrap().witness(), Some(w));
        prop_assert!(realization_equal(&l, &k, 100).passed());
        prop_assert!(barycentric_flags(&k).geometrically_equal(&l));
    }

    #[test]
    fn skeleton_composition(k in simplex(3), p in 0usize..=4, q in 0usize..=4) {
        prop_assert_eq!(k.skeleton(p).skeleton(q), k.skeleton(p.min(q)));
        prop_assert_eq!(k.skeleton(p).len(), k.simplices().filter(|s| s.dim() <= p).count());
    }

    #[test]
    fn any_interior_apex_gives_a_subdivision(k in simplex(2), raw in weights(3)) {
        let chooser = FnChooser::new("r", move |pts: &[&Point]| {
            let used = &raw[..pts.len()];
            let total: i64 = used.iter().sum();
            let w: Vec<Rational> = used.iter().map(|&r| ratio(r, total)).collect();
            Point::affine_combination(pts, &w)
        });
        let (l, w) = subdivide_skeletonwise(&k, &chooser).unwrap();
        prop_assert_eq!(l.simplices_of_dim(2).len(), 6);
        prop_assert!(validate_complex(&l).is_valid());
        prop_assert_eq!(is_subdivision(&l, &k).unwrap().witness(), Some(w));
    }

    #[test]
    fn diameter_ignores_translation(k in simplex(3), shift in prop::collection::vec(-20i64..=20, 3)) {
        let offset: Vec<Rational> = shift.iter().map(|&s| ratio(s, 3)).collect();
        let mut b = ComplexBuilder::new(3);
        for v in k.vertex_ids() {
            b.add_vertex(k.label(v), k.point(v).translate(&offset)).unwrap();
        }
        b.add_simplex_by_labels(&k.labels_of(&k.maximal()[0])).unwrap();
        let moved = b.build();
        for metric in [MetricKind::Linf, MetricKind::L2] {
            for s in k.simplices() {
                let t = moved.simplex_by_labels(&k.labels_of(s)).unwrap();
                prop_assert_eq!(diameter(&k, s, metric), diameter(&moved, &t, metric));
            }
        }
    }

    #[test]
    fn mesh_shrinks_by_the_factor(k in simplex(3)) {
        let l = barycentric_subdivide(&k).0;
        for metric in [MetricKind::Linf, MetricKind::L2] {
            prop_assert!(check_contraction_pair(&k, &l, 1, metric).passed());
            prop_assert_eq!(mesh_value(&l, metric), brute_mesh(&l, metric));
        }
    }
}
