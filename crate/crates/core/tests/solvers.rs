use proptest::prelude::*;
use segcover::frame::build_hit_frame;
use segcover::geom::{square_hits_segment, AxisMap, Point, Segment};
use segcover::lhit::HitConfiguration;
use segcover::oracle::{oracle_cover, oracle_partition, Kernel};
use segcover::verify::violations;
use segcover::{solve_cover, solve_hit, solve_rcover, Problem, SegmentSource, SliceSource, SourceStats};

fn int_segment(extent: i32) -> impl Strategy<Value = Segment<f64>> {
    (0..=extent, 0..=extent, 0..=extent, 0..=extent)
        .prop_map(|(a, b, c, d)| Segment::from_coords(a as f64, b as f64, c as f64, d as f64))
}

fn instance(max_n: usize) -> impl Strategy<Value = Vec<Segment<f64>>> {
    prop::collection::vec(int_segment(100), 1..=max_n)
}

fn solve(p: Problem, segs: &[Segment<f64>]) -> segcover::Solution {
    let mut src = SliceSource::new(segs);
    match p {
        Problem::Cover => solve_cover(&mut src, 1e-9),
        Problem::Hit => solve_hit(&mut src, 1e-9),
        Problem::RestrictedCover => solve_rcover(&mut src, 1e-9),
    }
    .unwrap()
}

fn feasible(p: Problem, segs: &[Segment<f64>], s: &segcover::Solution) -> bool {
    violations(&mut SliceSource::new(segs), p, &s.s1, &s.s2, 1e-7).unwrap().is_empty()
}

const ALL: [Problem; 3] = [Problem::Cover, Problem::Hit, Problem::RestrictedCover];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cover_matches_oracle(segs in instance(6)) {
        let s = solve(Problem::Cover, &segs);
        let o = oracle_cover(&segs, 1e-9);
        prop_assert!((s.sigma - o).abs() <= 1e-6 * s.sigma.max(1.0), "{} vs {}", s.sigma, o);
    }

    #[test]
    fn rcover_matches_oracle(segs in instance(6)) {
        let s = solve(Problem::RestrictedCover, &segs);
        let o = oracle_partition(&segs, Kernel::Cover, 1e-9).unwrap();
        prop_assert!((s.sigma - o).abs() <= 1e-9 * s.sigma.max(1.0), "{} vs {}", s.sigma, o);
    }

    #[test]
    fn hit_is_feasible_and_never_below_optimum(segs in instance(5)) {
        let s = solve(Problem::Hit, &segs);
        prop_assert!(feasible(Problem::Hit, &segs, &s));
        let o = oracle_partition(&segs, Kernel::Hit, 1e-9).unwrap();
        prop_assert!(s.sigma >= o - 1e-6 * o.max(1.0));
    }

    #[test]
    fn every_solution_is_feasible(segs in instance(12)) {
        for p in ALL {
            let s = solve(p, &segs);
            prop_assert!(feasible(p, &segs, &s), "{:?}", p);
            prop_assert_eq!(s.s1.side, s.sigma);
            prop_assert_eq!(s.s2.side, s.sigma);
        }
    }

    #[test]
    fn streams_twice(segs in instance(12)) {
        for p in ALL {
            let mut src = SliceSource::new(&segs);
            match p {
                Problem::Cover => solve_cover(&mut src, 1e-9),
                Problem::Hit => solve_hit(&mut src, 1e-9),
                Problem::RestrictedCover => solve_rcover(&mut src, 1e-9),
            }.unwrap();
            prop_assert_eq!(src.stats(), SourceStats { resets: 2, items_read: 2 * segs.len() });
        }
    }

    #[test]
    fn cover_ordering(segs in instance(8)) {
        // Splitting segments across squares can only help.
        let c = solve(Problem::Cover, &segs).sigma;
        let r = solve(Problem::RestrictedCover, &segs).sigma;
        prop_assert!(c <= r + 1e-9);
    }

    #[test]
    fn isometries_preserve_sigma(segs in instance(8), dx in -50i32..50, dy in -50i32..50) {
        let maps = [
            AxisMap::translation(Point::new(dx as f64, dy as f64)),
            AxisMap::transpose(),
            AxisMap::reflect_y(0.0),
        ];
        for p in [Problem::Cover, Problem::RestrictedCover] {
            let s = solve(p, &segs).sigma;
            for m in maps {
                let moved: Vec<_> = segs.iter().map(|x| m.apply_segment(x)).collect();
                let t = solve(p, &moved).sigma;
                prop_assert!((s - t).abs() <= 1e-9 * s.max(1.0), "{:?} {} vs {}", p, s, t);
            }
        }
    }

    #[test]
    fn permutation_leaves_cover_sigma(segs in instance(8)) {
        let mut rev = segs.clone();
        rev.reverse();
        for p in [Problem::Cover, Problem::RestrictedCover] {
            prop_assert_eq!(solve(p, &segs).sigma, solve(p, &rev).sigma);
        }
    }

    #[test]
    fn hit_greedy_identity(segs in instance(10)) {
        // The reported size is the better configuration's
        // max(base sizes, max over segments of the smaller event size).
        let f = build_hit_frame(&mut SliceSource::new(&segs)).unwrap();
        let to = f.to_frame();
        let mut best = f64::INFINITY;
        for c in [1, 2] {
            let hc = HitConfiguration::new(&f, c, 1e-9);
            let mut v = hc.d1.base_sigma().max(hc.d2.base_sigma());
            for s in &segs {
                let (a, b) = hc.events(&to.apply_segment(s));
                v = v.max(a.min(b));
            }
            best = best.min(v);
        }
        let s = solve(Problem::Hit, &segs);
        if best.is_finite() {
            prop_assert_eq!(s.sigma, best);
        }
    }

    #[test]
    fn hit_squares_hit_what_their_events_promise(segs in instance(8)) {
        let f = build_hit_frame(&mut SliceSource::new(&segs)).unwrap();
        let to = f.to_frame();
        for c in [1, 2] {
            let hc = HitConfiguration::new(&f, c, 1e-9);
            for s in &segs {
                let s = to.apply_segment(s);
                let (e1, e2) = hc.events(&s);
                for (k, e) in [e1, e2].into_iter().enumerate() {
                    if !e.is_finite() { continue; }
                    for grow in [0.0, 0.5, 3.0, 40.0] {
                        let sq = hc.squares(e + grow);
                        let sq = if k == 0 { sq.0 } else { sq.1 };
                        prop_assert!(square_hits_segment(&sq, &s, 1e-7), "config {} square {} at {}", c, k + 1, e + grow);
                    }
                }
            }
        }
    }
}

#[test]
fn generic_over_f32() {
    let segs: Vec<Segment<f32>> = vec![Segment::from_coords(0.0, 0.0, 4.0, 4.0), Segment::from_coords(6.0, 0.0, 10.0, 4.0)];
    assert_eq!(solve_cover(&mut SliceSource::new(&segs), 1e-4).unwrap().sigma, 4.0f32);
    assert_eq!(solve_rcover(&mut SliceSource::new(&segs), 1e-4).unwrap().sigma, 4.0f32);
    let h: Vec<Segment<f32>> =
        vec![Segment::from_coords(0.0, 0.0, 0.0, 10.0), Segment::from_coords(10.0, 0.0, 10.0, 10.0), Segment::from_coords(3.0, 5.0, 7.0, 5.0)];
    assert!((solve_hit(&mut SliceSource::new(&h), 1e-4).unwrap().sigma - 3.0).abs() < 1e-3);
}

#[test]
fn empty_instance_is_an_error() {
    let none: Vec<Segment<f64>> = Vec::new();
    for p in ALL {
        let mut src = SliceSource::new(&none);
        let r = match p {
            Problem::Cover => solve_cover(&mut src, 1e-9),
            Problem::Hit => solve_hit(&mut src, 1e-9),
            Problem::RestrictedCover => solve_rcover(&mut src, 1e-9),
        };
        assert!(matches!(r, Err(segcover::Error::EmptyInstance)));
    }
}

#[test]
fn non_finite_input_is_rejected() {
    let segs = [Segment::from_coords(0.0, 0.0, 1.0, 1.0), Segment::from_coords(f64::NAN, 0.0, 1.0, 1.0)];
    assert!(matches!(solve_cover(&mut SliceSource::new(&segs), 1e-9), Err(segcover::Error::NonFinite { index: 1 })));
}
