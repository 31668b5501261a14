use std::f64::consts::PI;

use bicycle_geodesics::geometry::{act, flip, from_st_model, normalize_angle, to_st_model};
use bicycle_geodesics::holonomy::transport_angles;
use bicycle_geodesics::io::{read_csv, to_csv_string};
use bicycle_geodesics::track::{FourierTrack, Line, Reparametrized};
use bicycle_geodesics::{
    flip_path, horizontal_lift, integrate_geodesic, path_length, BikeLength, ConfigPoint,
    ReducedState, RigidMotion,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn config() -> impl Strategy<Value = ConfigPoint> {
    (-20.0..20.0f64, -20.0..20.0f64, -PI..PI).prop_map(|(x, y, t)| ConfigPoint::new(x, y, t))
}

fn motion() -> impl Strategy<Value = RigidMotion> {
    (-PI..PI, -5.0..5.0f64, -5.0..5.0f64, any::<bool>()).prop_map(|(angle, x, y, reflect)| {
        let g = RigidMotion::rotation_about(angle, [x, y]);
        if reflect {
            g.compose(&RigidMotion::reflection_x_axis())
        } else {
            g
        }
    })
}

fn ell() -> impl Strategy<Value = BikeLength> {
    (0.1..4.0f64).prop_map(|l| BikeLength::new(l).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn flip_is_an_involution(p in config(), l in ell()) {
        prop_assert!(flip(&flip(&p, l), l).distance_to(&p) < 1e-12);
    }

    #[test]
    fn flip_moves_the_front_wheel_across_the_back(p in config(), l in ell()) {
        let q = flip(&p, l);
        let (b, mid) = (p.back(l), [(p.x + q.x) / 2.0, (p.y + q.y) / 2.0]);
        prop_assert!((b[0] - mid[0]).abs() < 1e-12 && (b[1] - mid[1]).abs() < 1e-12);
        prop_assert!((q.back(l)[0] - b[0]).abs() < 1e-12);
    }

    #[test]
    fn action_composes(g in motion(), h in motion(), p in config()) {
        let lhs = act(&g.compose(&h), &p);
        let rhs = act(&g, &act(&h, &p));
        prop_assert!(lhs.distance_to(&rhs) < 1e-12);
    }

    #[test]
    fn action_commutes_with_flip(g in motion(), p in config(), l in ell()) {
        let lhs = act(&g, &flip(&p, l));
        let rhs = flip(&act(&g, &p), l);
        prop_assert!(lhs.distance_to(&rhs) < 1e-12);
    }

    #[test]
    fn st_model_round_trip(p in config(), l in ell()) {
        let (b, v) = to_st_model(&p, l);
        prop_assert!(((v[0] * v[0] + v[1] * v[1]).sqrt() - 1.0).abs() < 1e-15);
        prop_assert!(from_st_model(b, v, l).distance_to(&p) < 1e-13);
    }

    #[test]
    fn normalized_angles_stay_in_range(t in -1e6..1e6f64) {
        let n = normalize_angle(t);
        prop_assert!(n > -PI && n <= PI);
        prop_assert!(((t - n) / (2.0 * PI)).round() * 2.0 * PI - (t - n) < 1e-6);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn length_is_invariant(a in 0.1..3.0f64, g in motion()) {
        let path = integrate_geodesic(ReducedState::at_vertex(a), 6.0, 1e-3).unwrap().path;
        let base = path_length(&path).unwrap();
        prop_assert!((path_length(&path.transformed(&g)).unwrap() - base).abs() < 1e-9);
        prop_assert!((path_length(&flip_path(&path).unwrap()).unwrap() - base).abs() < 1e-6);
    }

    #[test]
    fn csv_round_trip_is_exact(a in 0.1..3.0f64, l in ell()) {
        let path = integrate_geodesic(ReducedState::at_vertex(a), 2.0, 1e-2).unwrap().path;
        let path = path.dilated(l.get()).unwrap();
        let back = read_csv(to_csv_string(&path).as_bytes(), l).unwrap();
        prop_assert_eq!(back, path);
    }

    #[test]
    fn transport_preserves_cyclic_order(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let track = FourierTrack::random(&mut rng, 3.0);
        let starts: Vec<f64> = (0..12).map(|k| -PI + k as f64 * PI / 6.0).collect();
        let ends: Vec<f64> = transport_angles(&track, &starts, BikeLength::default(), 2e-3)
            .unwrap()
            .iter()
            .map(|s| s.theta_out)
            .collect();
        for w in ends.windows(2) {
            prop_assert!(w[1] > w[0]);
        }
        prop_assert!(ends[ends.len() - 1] - ends[0] < 2.0 * PI);
    }

    #[test]
    fn lift_ignores_reparametrization(theta0 in -3.0..3.0f64, k in 0.2..0.9f64) {
        let ell = BikeLength::default();
        let line = Line::x_axis(0.0, 4.0);
        let direct = horizontal_lift(&line, theta0, ell, 1e-3).unwrap();
        let s_end = ((1.0 + 16.0 * k).sqrt() - 1.0) / (2.0 * k);
        let warped = Reparametrized::new(line, move |s: f64| s + k * s * s, move |s: f64| 1.0 + 2.0 * k * s, 0.0, s_end);
        let lifted = horizontal_lift(&warped, theta0, ell, 1e-3).unwrap();
        let (a, b) = (direct.last().theta, lifted.last().theta);
        prop_assert!((a - b).abs() < 1e-9, "{} vs {}", a, b);
    }
}
