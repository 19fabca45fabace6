use proptest::prelude::*;
use segcover::geom::{square_hits_segment, Point, Segment, Square};
use segcover::oracle::{
    cover_feasible, hit_feasible, min_cover_square, min_hit_square, oracle_cover, oracle_partition,
    oracle_two_disk_cover, smallest_enclosing_radius, ConvexRegion, Kernel,
};

fn int_segment() -> impl Strategy<Value = Segment<f64>> {
    (0..=100, 0..=100, 0..=100, 0..=100).prop_map(|(a, b, c, d)| Segment::from_coords(a as f64, b as f64, c as f64, d as f64))
}

fn instance(max_n: usize) -> impl Strategy<Value = Vec<Segment<f64>>> {
    prop::collection::vec(int_segment(), 1..=max_n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn cover_feasibility_is_monotone(segs in instance(6), a in 0.0f64..120.0, b in 0.0f64..120.0) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        for c in [1, 2] {
            if cover_feasible(&segs, c, lo, 1e-9) {
                prop_assert!(cover_feasible(&segs, c, hi, 1e-9));
            }
        }
    }

    #[test]
    fn hit_feasibility_is_monotone(segs in instance(5), a in 0.0f64..120.0, b in 0.0f64..120.0) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        if hit_feasible(&segs, lo, 1e-9) {
            prop_assert!(hit_feasible(&segs, hi, 1e-9));
        }
    }

    #[test]
    fn placement_regions_are_convex(s in int_segment(), side in 0.5f64..50.0) {
        let r = ConvexRegion::placement(&s, side);
        prop_assert!(r.is_convex());
        prop_assert!((4..=6).contains(&r.vertices.len()));
        // Every vertex is a corner whose square touches the segment.
        for v in &r.vertices {
            prop_assert!(square_hits_segment(&Square::new(*v, side), &s, 1e-9));
        }
    }

    #[test]
    fn oracles_ignore_input_order(segs in instance(5)) {
        let mut rev = segs.clone();
        rev.reverse();
        prop_assert!((oracle_cover(&segs, 1e-9) - oracle_cover(&rev, 1e-9)).abs() <= 1e-7);
        for k in [Kernel::Cover, Kernel::Hit] {
            let (a, b) = (oracle_partition(&segs, k, 1e-9).unwrap(), oracle_partition(&rev, k, 1e-9).unwrap());
            prop_assert!((a - b).abs() <= 1e-7);
        }
        let (a, b) = (oracle_two_disk_cover(&segs, 1e-9).unwrap(), oracle_two_disk_cover(&rev, 1e-9).unwrap());
        prop_assert!((a - b).abs() <= 1e-9);
    }

    #[test]
    fn min_hit_square_is_tight(segs in instance(5)) {
        let s = min_hit_square(&segs, 1e-9);
        prop_assert!(s <= min_cover_square(&segs) + 1e-9);
        prop_assert!(hit_feasible(&segs, s + 1e-6, 1e-9));
        if s > 1e-6 {
            prop_assert!(!hit_feasible(&segs, s - 1e-6, 0.0));
        }
    }

    #[test]
    fn enclosing_radius_bounds(pts in prop::collection::vec((0..=100, 0..=100), 1..8)) {
        let pts: Vec<Point<f64>> = pts.into_iter().map(|(x, y)| Point::new(x as f64, y as f64)).collect();
        let r = smallest_enclosing_radius(&pts);
        let mut diam: f64 = 0.0;
        for p in &pts {
            for q in &pts {
                diam = diam.max((*p - *q).norm2().sqrt());
            }
        }
        prop_assert!(r >= diam / 2.0 - 1e-9);
        prop_assert!(r <= diam / 3f64.sqrt() + 1e-9);
    }
}
