use proptest::prelude::*;
use segcover::geom::{
    clip_params, linf_dist, linf_point_segment, linf_segment_segment, segment_minus_square, square_covers_segment,
    square_hits_segment, AxisMap, Point, Segment, Square,
};

fn coord() -> impl Strategy<Value = f64> {
    (-1000i32..=1000).prop_map(|v| v as f64 / 4.0)
}

fn point() -> impl Strategy<Value = Point<f64>> {
    (coord(), coord()).prop_map(|(x, y)| Point::new(x, y))
}

fn segment() -> impl Strategy<Value = Segment<f64>> {
    (point(), point()).prop_map(|(a, b)| Segment::new(a, b))
}

fn square() -> impl Strategy<Value = Square<f64>> {
    (point(), 0i32..400).prop_map(|(p, s)| Square::new(p, s as f64 / 4.0))
}

fn sample(s: &Segment<f64>, k: usize) -> impl Iterator<Item = Point<f64>> + '_ {
    (0..=k).map(move |i| s.at(i as f64 / k as f64))
}

proptest! {
    #[test]
    fn linf_is_a_metric(p in point(), q in point(), r in point()) {
        prop_assert_eq!(linf_dist(p, q), linf_dist(q, p));
        prop_assert!(linf_dist(p, r) <= linf_dist(p, q) + linf_dist(q, r) + 1e-9);
        prop_assert_eq!(linf_dist(p, p), 0.0);
    }

    #[test]
    fn point_segment_distance_bounds_samples(p in point(), s in segment()) {
        let d = linf_point_segment(p, &s);
        let best = sample(&s, 400).map(|q| linf_dist(p, q)).fold(f64::INFINITY, f64::min);
        prop_assert!(d <= best + 1e-9);
        // Sampling step bounds how far the samples can be from the true minimum.
        let step = (s.b - s.a).norm2().sqrt() / 400.0;
        prop_assert!(best <= d + step + 1e-9);
    }

    #[test]
    fn segment_distance_is_symmetric_and_below_endpoint_distances(s in segment(), t in segment()) {
        let d = linf_segment_segment(&s, &t, 1e-12);
        prop_assert!((d - linf_segment_segment(&t, &s, 1e-12)).abs() <= 1e-9);
        for p in [s.a, s.b] {
            prop_assert!(d <= linf_point_segment(p, &t) + 1e-9);
        }
    }

    #[test]
    fn minus_square_partitions_the_segment(s in segment(), sq in square()) {
        let rest = segment_minus_square(&s, &sq, 0.0);
        for r in &rest {
            // Every leftover point outside the interior of the square.
            let mid = r.midpoint();
            prop_assert!(!sq.contains(mid, -1e-9) || r.is_degenerate());
        }
        for p in sample(&s, 64) {
            let inside = sq.contains(p, 1e-9);
            let covered = rest.iter().any(|r| linf_point_segment(p, r) <= 1e-9);
            prop_assert!(inside || covered);
        }
        prop_assert_eq!(rest.is_empty(), square_covers_segment(&sq, &s, 1e-12));
    }

    #[test]
    fn hit_agrees_with_clipping(s in segment(), sq in square()) {
        let hits = square_hits_segment(&sq, &s, 1e-9);
        prop_assert_eq!(hits, clip_params(&s, &sq.halfplanes(0.0), 1e-9).is_some());
        if sample(&s, 64).any(|p| sq.contains(p, 0.0)) {
            prop_assert!(hits);
        }
    }

    #[test]
    fn axis_maps_invert(p in point(), c in point(), swap in any::<bool>(), sx in any::<bool>(), sy in any::<bool>()) {
        let base = [
            AxisMap::translation(c),
            AxisMap::point_reflection(c),
            AxisMap::diagonal_reflection(c),
            AxisMap::reflect_y(c.y),
        ];
        let mut m = if swap { AxisMap::transpose() } else { AxisMap::identity() };
        if sx { m = base[1].compose(&m); }
        if sy { m = base[3].compose(&m); }
        for b in base {
            let n = b.compose(&m);
            let back = n.inverse().apply(n.apply(p));
            prop_assert!(linf_dist(back, p) <= 1e-9);
        }
    }

    #[test]
    fn axis_maps_are_linf_isometries(p in point(), q in point(), c in point()) {
        for m in [AxisMap::point_reflection(c), AxisMap::diagonal_reflection(c), AxisMap::reflect_y(c.y), AxisMap::transpose()] {
            prop_assert!((linf_dist(m.apply(p), m.apply(q)) - linf_dist(p, q)).abs() <= 1e-9);
        }
    }
}
