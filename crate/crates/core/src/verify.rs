//! Self-checks of every numerical property the library relies on, runnable
//! from the command line. Each suite integrates through a [`Dynamics`] so
//! the whole battery can be pointed at a deliberately broken vector field.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{
    back_width, canonical_orient, classify, elastica_params_from_a, energy_residual,
    find_vertices, fit_energy_params, flip_congruence, front_width, period_and_advance,
    predicted_back_width, predicted_front_width, ElasticaKind, VertexKind,
};
use crate::closed_forms::{line_lift_theta, soliton_point, tractrix_point};
use crate::error::Result;
use crate::geometry::{
    act, angle_distance, flip, from_st_model, to_st_model, BikeLength, ConfigPoint, RigidMotion,
};
use crate::holonomy::{correspondent, cross_ratio, fit_mobius, pressurized_fit, transport, transport_fiber};
use crate::integrate::{
    canonicalize, horizontal_lift, integrate_cotangent, integrate_geodesic_with, integrate_reduced,
    CotangentState, Dynamics, ReducedState,
};
use crate::io::{read_csv, to_csv_string};
use crate::metric_lines::{build_shortcut, shortcut_threshold};
use crate::path::{flip_path, horizontality_tolerance, path_length, SampledBikePath};
use crate::track::{Circle, Concat, FourierTrack, Line, Reparametrized};

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type SuiteFn = fn(&Dynamics) -> Result<(bool, String)>;

pub const SUITES: &[(&str, SuiteFn)] = &[
    ("energy", energy),
    ("curvature-momentum", curvature_momentum),
    ("unit-speed", unit_speed),
    ("reduced-full", reduced_full),
    ("convergence", convergence),
    ("elastica", elastica),
    ("extremes", extremes),
    ("widths", widths),
    ("vertices", vertices),
    ("flip-structure", flip_structure),
    ("classify-grid", classify_grid),
    ("dilation", dilation),
    ("tractrix-soliton", tractrix_soliton),
    ("shortcut", shortcut),
    ("mobius", mobius),
    ("transport-composition", transport_composition),
    ("correspondent-involution", correspondent_involution),
    ("pressurized", pressurized),
    ("isometry", isometry),
    ("group-law", group_law),
    ("csv-roundtrip", csv_roundtrip),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

/// Runs the named suites (all of them for `"all"`) concurrently and returns
/// their results in registration order. Unknown names yield `None`.
pub fn run_suites(selection: &str, dynamics: &Dynamics) -> Option<Vec<SuiteResult>> {
    let chosen: Vec<&(&str, SuiteFn)> = if selection == "all" {
        SUITES.iter().collect()
    } else {
        let s: Vec<_> = SUITES.iter().filter(|(n, _)| *n == selection).collect();
        if s.is_empty() {
            return None;
        }
        s
    };
    Some(std::thread::scope(|scope| {
        let handles: Vec<_> = chosen
            .iter()
            .map(|&&(name, f)| {
                scope.spawn(move || {
                    let outcome = std::panic::catch_unwind(|| f(dynamics));
                    let (passed, detail) = match outcome {
                        Ok(Ok(r)) => r,
                        Ok(Err(e)) => (false, format!("error: {e}")),
                        Err(_) => (false, "panicked".to_string()),
                    };
                    SuiteResult {
                        name,
                        passed,
                        detail,
                    }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    }))
}

pub fn summary_table(results: &[SuiteResult]) -> String {
    let width = results.iter().map(|r| r.name.len()).max().unwrap_or(5);
    let mut out = format!("{:<width$}  status  detail\n", "suite");
    for r in results {
        out.push_str(&format!(
            "{:<width$}  {}    {}\n",
            r.name,
            if r.passed { "pass" } else { "FAIL" },
            r.detail
        ));
    }
    let passed = results.iter().filter(|r| r.passed).count();
    out.push_str(&format!("{passed}/{} suites passed\n", results.len()));
    out
}

/// The reference dynamics with the sign of the curvature equation flipped.
pub fn mutated_dynamics() -> Dynamics {
    fn full(s: &CotangentState) -> [f64; 6] {
        let mut d = crate::integrate::hamiltonian_rhs(s);
        d[5] = -d[5];
        d
    }
    fn reduced(s: &ReducedState) -> [f64; 4] {
        let mut d = crate::integrate::reduced_rhs(s);
        d[3] = -d[3];
        d
    }
    Dynamics { full, reduced }
}

fn unit() -> BikeLength {
    BikeLength::default()
}

fn random_unit_state(rng: &mut ChaCha8Rng) -> CotangentState {
    let theta = rng.gen_range(-PI..PI);
    let phi = rng.gen_range(-PI..PI);
    let ptheta = rng.gen_range(-2.0..2.0);
    CotangentState {
        x: rng.gen_range(-5.0..5.0),
        y: rng.gen_range(-5.0..5.0),
        theta,
        px: phi.cos() + theta.sin() * ptheta,
        py: phi.sin() - theta.cos() * ptheta,
        ptheta,
    }
}

fn geodesic(d: &Dynamics, a: f64, t_end: f64) -> Result<SampledBikePath> {
    Ok(integrate_geodesic_with(ReducedState::at_vertex(a), t_end, 1e-3, d)?.path)
}

fn energy(d: &Dynamics) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let (mut worst, mut fixed) = (0.0f64, true);
    for _ in 0..20 {
        let s0 = random_unit_state(&mut rng);
        for (_, s) in integrate_cotangent(&s0, 100.0, 1e-3, d)? {
            worst = worst.max((s.hamiltonian() - s0.hamiltonian()).abs());
            fixed &= s.px.to_bits() == s0.px.to_bits() && s.py.to_bits() == s0.py.to_bits();
        }
    }
    Ok((
        worst <= 1e-9 && fixed,
        format!("drift {worst:.1e}, momenta fixed {fixed}"),
    ))
}

fn curvature_momentum(d: &Dynamics) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut worst: f64 = 0.0;
    for _ in 0..5 {
        let s0 = random_unit_state(&mut rng);
        let traj = integrate_cotangent(&s0, 20.0, 1e-3, d)?;
        let fronts: Vec<[f64; 2]> = traj.iter().map(|(_, s)| [s.x, s.y]).collect();
        let kappa = crate::diff::curvature_from_points(&fronts);
        for i in 1..traj.len() - 1 {
            worst = worst.max((kappa[i] - traj[i].1.ptheta).abs());
        }
    }
    Ok((worst <= 1e-5, format!("max |kappa - p_theta| {worst:.1e}")))
}

fn unit_speed(d: &Dynamics) -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    for &(a, k) in &[(0.3, 1.0), (0.5, 1.2), (1.0, 1.5), (2.0, 2.5), (3.0, 3.5)] {
        let s0 = ReducedState::from_shape(a, k)?;
        for (_, s) in integrate_reduced(&s0, 50.0, 1e-3, d)? {
            worst = worst.max(s.unit_speed_defect().abs());
        }
    }
    Ok((worst <= 1e-8, format!("max constraint defect {worst:.1e}")))
}

fn reduced_full(d: &Dynamics) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut worst: f64 = 0.0;
    for _ in 0..5 {
        let s0 = random_unit_state(&mut rng).normalized()?;
        let full = integrate_cotangent(&s0, 20.0, 1e-3, d)?;
        let (r0, g) = canonicalize(&s0)?;
        let reduced = integrate_reduced(&r0, 20.0, 1e-3, d)?;
        let back = g.inverse();
        for ((_, f), (_, r)) in full.iter().zip(&reduced) {
            let p = back.apply_point([r.x, r.y]);
            let th = back.apply_angle(r.theta);
            worst = worst
                .max((p[0] - f.x).abs())
                .max((p[1] - f.y).abs())
                .max(angle_distance(th, f.theta))
                .max((r.kappa - f.ptheta).abs());
        }
    }
    Ok((worst <= 1e-7, format!("max disagreement {worst:.1e}")))
}

fn convergence(d: &Dynamics) -> Result<(bool, String)> {
    let s0 = ReducedState::from_shape(0.6, 1.1)?;
    let end = |h: f64| -> Result<[f64; 3]> {
        let traj = integrate_reduced(&s0, 8.0, h, d)?;
        let s = traj.last().unwrap().1;
        Ok([s.x, s.y, s.theta])
    };
    let h = 0.08;
    let reference = end(h / 8.0)?;
    let err = |p: [f64; 3]| {
        p.iter()
            .zip(&reference)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    };
    let (e1, e2) = (err(end(h)?), err(end(h / 2.0)?));
    let ratio = e1 / e2;
    Ok((ratio >= 12.0, format!("error ratio on halving {ratio:.1}")))
}

fn elastica(d: &Dynamics) -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    for &a in &[0.3, 0.5, 0.7, 1.0, 1.5, 2.0, 3.0] {
        let p = geodesic(d, a, 50.0)?;
        worst = worst.max(energy_residual(&p, &elastica_params_from_a(a))?);
    }
    Ok((worst <= 1e-6, format!("max residual {worst:.1e}")))
}

fn extremes(d: &Dynamics) -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    for &a in &[0.3, 0.5, 0.8, 1.5, 2.0, 4.0] {
        let k = geodesic(d, a, 40.0)?.kappas();
        let (lo, hi) = k
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), &v| (l.min(v), h.max(v)));
        worst = worst.max((lo - (1.0 - a).abs()).abs()).max((hi - (1.0 + a)).abs());
    }
    Ok((worst <= 1e-5, format!("max extreme error {worst:.1e}")))
}

fn widths(d: &Dynamics) -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    for &a in &[0.3, 0.5, 0.8, 1.5, 2.0, 4.0] {
        let (p, _) = canonical_orient(&geodesic(d, a, 40.0)?)?;
        worst = worst
            .max((front_width(&p)? - predicted_front_width(a)).abs())
            .max((back_width(&p)? - predicted_back_width(a)).abs());
    }
    Ok((worst <= 1e-4, format!("max width error {worst:.1e}")))
}

fn vertices(d: &Dynamics) -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    let mut alternate = true;
    for &a in &[0.3, 0.5, 0.8, 1.5, 2.0, 4.0] {
        let (p, _) = canonical_orient(&geodesic(d, a, 40.0)?)?;
        let report = find_vertices(&p);
        alternate &= report.alternates() && report.vertices.len() >= 3;
        for v in &report.vertices {
            let (k, th) = match v.kind {
                VertexKind::Max => (1.0 + a, FRAC_PI_2),
                VertexKind::Min if a < 1.0 => (1.0 - a, -FRAC_PI_2),
                VertexKind::Min => (a - 1.0, FRAC_PI_2),
            };
            worst = worst
                .max(angle_distance(v.theta, th))
                .max((v.kappa - k).abs());
        }
    }
    Ok((
        worst <= 1e-4 && alternate,
        format!("max vertex error {worst:.1e}, alternating {alternate}"),
    ))
}

fn flip_structure(d: &Dynamics) -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    for &a in &[0.5, 0.8, 2.0, 3.0] {
        let p = geodesic(d, a, 40.0)?;
        let (t, l) = period_and_advance(&p)?;
        let f = flip_path(&p)?;
        worst = worst.max(flip_congruence(&p, &f, t, l, a > 1.0)?);
    }
    Ok((worst <= 1e-4, format!("max congruence error {worst:.1e}")))
}

/// Label a geodesic from its integrated curvature alone.
fn observed_kind(p: &SampledBikePath) -> Result<ElasticaKind> {
    let k = p.kappas();
    let (lo, hi) = k
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), &v| (l.min(v), h.max(v)));
    if hi.abs() < 1e-9 {
        return Ok(ElasticaKind::Line);
    }
    if hi - lo < 1e-9 {
        return Ok(ElasticaKind::Circle);
    }
    if lo.abs() < 1e-6 && find_vertices(p).maxima().count() == 1 {
        return Ok(ElasticaKind::Soliton);
    }
    let (c, _) = canonical_orient(p)?;
    Ok(if (front_width(&c)? - 2.0).abs() < 1e-3 {
        ElasticaKind::WideNie
    } else {
        ElasticaKind::NarrowNie
    })
}

fn classify_grid(d: &Dynamics) -> Result<(bool, String)> {
    let mut grid: Vec<f64> = (1..=47).map(|k| 0.085 * k as f64).collect();
    grid.extend([0.0, 1.0, 1.0]);
    let mut mismatches = Vec::new();
    for (i, &a) in grid.iter().enumerate() {
        let kappa0 = if i == grid.len() - 1 { 0.0 } else { 1.0 + a };
        let s0 = if kappa0 == 0.0 {
            ReducedState {
                theta: 0.0,
                kappa: 0.0,
                ..ReducedState::at_vertex(a)
            }
        } else {
            ReducedState::at_vertex(a)
        };
        let t_end = if (a - 1.0).abs() < 0.1 { 80.0 } else { 50.0 };
        let p = integrate_geodesic_with(s0, t_end, 2e-3, d)?.path;
        let seen = observed_kind(&p)?;
        if seen != classify(a, kappa0).kind {
            mismatches.push(format!("a={a:.3}"));
        }
    }
    Ok((
        mismatches.is_empty(),
        format!("{} of {} disagree {}", mismatches.len(), grid.len(), mismatches.join(" ")),
    ))
}

fn dilation(d: &Dynamics) -> Result<(bool, String)> {
    let (mut rel, mut mu): (f64, f64) = (0.0, 0.0);
    for &a in &[0.5, 2.0] {
        let p = geodesic(d, a, 30.0)?;
        let base = fit_energy_params(&p)?;
        for &lambda in &[0.5, 2.0] {
            let fit = fit_energy_params(&p.dilated(lambda)?)?;
            let want = base.dilated(lambda);
            rel = rel
                .max(((fit.coef_a - want.coef_a) / want.coef_a).abs())
                .max(((fit.coef_b - want.coef_b) / want.coef_b).abs());
            mu = mu.max((fit.mu.unwrap_or(f64::NAN) - base.mu.unwrap_or(f64::NAN)).abs());
        }
        let exact = elastica_params_from_a(a);
        rel = rel.max(((base.coef_a - exact.coef_a) / exact.coef_a).abs());
    }
    Ok((rel <= 1e-4 && mu <= 1e-6, format!("relative {rel:.1e}, mu {mu:.1e}")))
}

fn tractrix_soliton(d: &Dynamics) -> Result<(bool, String)> {
    let ell = BikeLength::new(1.3)?;
    let start = -10.0;
    let lift = horizontal_lift(&Line::x_axis(start, 20.0), line_lift_theta(start, 0.0, ell), ell, 1e-3)?;
    let mut worst: f64 = 0.0;
    for s in lift.samples() {
        let b = s.back(ell);
        let tr = tractrix_point(s.t, 0.0, ell);
        worst = worst.max((b[0] - tr[0]).abs()).max((b[1] - tr[1]).abs());
    }
    for s in flip_path(&lift)?.samples() {
        let so = soliton_point(s.t, 0.0, ell);
        worst = worst.max((s.front[0] - so[0]).abs()).max((s.front[1] - so[1]).abs());
    }
    let s0 = ReducedState {
        x: 0.0,
        y: 2.0,
        theta: FRAC_PI_2,
        kappa: 2.0,
        a: 1.0,
    };
    let geo = integrate_geodesic_with(s0, 15.0, 1e-3, d)?.path;
    for s in geo.samples() {
        let so = soliton_point(s.t, 0.0, unit());
        worst = worst.max((s.front[0] - so[0]).abs()).max((s.front[1] - so[1]).abs());
    }
    Ok((worst <= 1e-6, format!("max deviation {worst:.1e}")))
}

fn shortcut(d: &Dynamics) -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for &a in &[0.2, 0.5, 0.8, 1.5, 2.0, 4.0] {
        let probe = geodesic(d, a, 40.0)?;
        let (t, l) = period_and_advance(&probe)?;
        let n = shortcut_threshold(t, l, unit())?;
        let geo = geodesic(d, a, n as f64 * t + 0.5)?;
        let sc = build_shortcut(&ConfigPoint::new(0.0, 0.0, FRAC_PI_2), n, l, unit(), 1e-3)?;
        let (front, theta) = geo.interpolate(n as f64 * t).unwrap_or(([f64::NAN; 2], f64::NAN));
        let end = sc.last().config();
        let mismatch = end.distance_to(&ConfigPoint::new(front[0], front[1], theta));
        let margin = n as f64 * t - path_length(&sc)?;
        let horizontal = sc.horizontality_residual() <= horizontality_tolerance(1e-3);
        ok &= l < t && margin >= 1e-3 && mismatch <= 1e-4 && horizontal && !mismatch.is_nan();
        parts.push(format!("a={a}:N*={n}"));
    }
    Ok((ok, parts.join(" ")))
}

fn mobius(_: &Dynamics) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let (mut fit, mut cr): (f64, f64) = (0.0, 0.0);
    let mut check = |samples: &[crate::holonomy::TransportSample]| -> Result<()> {
        let (_, r) = fit_mobius(samples)?;
        fit = fit.max(r);
        let (a, b) = (samples[0], samples[3]);
        let (c, e) = (samples[6], samples[9]);
        let before = cross_ratio(a.theta_in, b.theta_in, c.theta_in, e.theta_in);
        let after = cross_ratio(a.theta_out, b.theta_out, c.theta_out, e.theta_out);
        cr = cr.max((before - after).abs());
        let mut sorted: Vec<_> = samples.to_vec();
        sorted.sort_by(|x, y| x.theta_in.total_cmp(&y.theta_in));
        let outs: Vec<f64> = sorted.iter().map(|s| s.theta_out.rem_euclid(TAU)).collect();
        let descents = (0..outs.len())
            .filter(|&i| outs[(i + 1) % outs.len()] < outs[i])
            .count();
        if descents != 1 {
            fit = f64::INFINITY;
        }
        Ok(())
    };
    for _ in 0..4 {
        let length = rng.gen_range(2.0..4.0);
        let track = FourierTrack::random(&mut rng, length);
        check(&transport_fiber(&track, 12, unit(), 1e-3)?)?;
    }
    let circle = Circle {
        radius: 1.4,
        end: 5.0,
        ..Circle::unit(1.0)
    };
    check(&transport_fiber(&circle, 12, unit(), 1e-3)?)?;
    let geo = geodesic(&Dynamics::default(), 0.5, 4.0)?;
    let times = geo.times();
    let velocities: Vec<[f64; 2]> = geo
        .samples()
        .iter()
        .map(|s| {
            let th = s.theta;
            let a = 0.5;
            [a - th.sin() * s.kappa, th.cos() * s.kappa]
        })
        .collect();
    let track = crate::track::HermiteTrack::new(times, geo.fronts(), velocities)?;
    check(&transport_fiber(&track, 12, unit(), 1e-3)?)?;
    Ok((
        fit <= 1e-6 && cr <= 1e-6,
        format!("fit residual {fit:.1e}, cross-ratio drift {cr:.1e}"),
    ))
}

fn transport_composition(_: &Dynamics) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let track = FourierTrack::random(&mut rng, 4.0);
    let first = FourierTrack {
        end: 2.0,
        ..track.clone()
    };
    let second = FourierTrack {
        start: 2.0,
        ..track.clone()
    };
    let mut worst: f64 = 0.0;
    for &theta0 in &[-2.0, 0.3, 1.9] {
        let whole = transport(&track, theta0, unit(), 1e-3)?;
        let mid = transport(&first, theta0, unit(), 1e-3)?;
        let split = transport(&second, mid, unit(), 1e-3)?;
        worst = worst.max(angle_distance(whole, split));
        let joined = Concat::new(first.clone(), second.clone());
        worst = worst.max(angle_distance(whole, transport(&joined, theta0, unit(), 1e-3)?));
        let slow = Reparametrized::new(
            track.clone(),
            |s: f64| s * s / 4.0 + s / 2.0,
            |s: f64| s / 2.0 + 0.5,
            0.0,
            (-1.0 + 17.0f64.sqrt()) * 1.0,
        );
        worst = worst.max(angle_distance(whole, transport(&slow, theta0, unit(), 1e-3)?));
    }
    Ok((worst <= 1e-8, format!("max discrepancy {worst:.1e}")))
}

fn correspondent_involution(_: &Dynamics) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let track = FourierTrack::random(&mut rng, 5.0);
    let theta0 = 0.4;
    let once = correspondent(&track, theta0, unit(), 1e-3)?;
    let twice = correspondent(&once.track, theta0 + PI, unit(), 1e-3)?;
    let worst = once
        .lift
        .samples()
        .iter()
        .zip(twice.flipped.samples())
        .map(|(a, b)| crate::geometry::dist(a.front, b.front))
        .fold(0.0, f64::max);
    let straight = correspondent(&Line::x_axis(0.0, 5.0), 0.0, unit(), 1e-3)?;
    let collinear = straight
        .flipped
        .samples()
        .iter()
        .map(|s| s.front[1].abs())
        .fold(0.0, f64::max);
    Ok((
        worst <= 1e-8 && collinear <= 1e-12,
        format!("round trip {worst:.1e}, collinear line offset {collinear:.1e}"),
    ))
}

fn pressurized(_: &Dynamics) -> Result<(bool, String)> {
    let circle = Circle {
        end: 12.0,
        ..Circle::unit(1.0)
    };
    let corr = correspondent(&circle, 0.6, unit(), 1e-3)?;
    let fit = pressurized_fit(&corr.flipped.fronts(), 1e-3)?;
    let sol: Vec<[f64; 2]> = (-8000..=8000)
        .map(|i| soliton_point(i as f64 * 1e-3, 0.0, unit()))
        .collect();
    let sfit = pressurized_fit(&sol, 1e-3)?;
    let ok = fit.residual <= 1e-5
        && fit.coef_c.abs() > 1e-3
        && sfit.coef_c.abs() <= 1e-5
        && (sfit.coef_a + 1.0).abs() <= 1e-5;
    Ok((
        ok,
        format!(
            "circle A={:.4} C={:.4} res {:.1e}; soliton A={:.4} C={:.1e}",
            fit.coef_a, fit.coef_c, fit.residual, sfit.coef_a, sfit.coef_c
        ),
    ))
}

fn isometry(d: &Dynamics) -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    let motions = [
        RigidMotion::rotation(1.1),
        RigidMotion::translation([-4.0, 2.5]),
        RigidMotion::reflection_x_axis(),
        RigidMotion::reflection_about_line([0.5, -1.0], 2.0),
    ];
    for &a in &[0.5, 2.0] {
        let p = integrate_geodesic_with(ReducedState::at_vertex(a), 20.0, 1e-4, d)?.path;
        let base = path_length(&p)?;
        worst = worst.max((path_length(&flip_path(&p)?)? - base).abs() / base);
        for g in &motions {
            worst = worst.max((path_length(&p.transformed(g))? - base).abs() / base);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let mut involution: f64 = 0.0;
    for _ in 0..500 {
        let p = ConfigPoint::new(rng.gen_range(-50.0..50.0), rng.gen_range(-50.0..50.0), rng.gen_range(-PI..PI));
        let ell = BikeLength::new(rng.gen_range(0.2..3.0))?;
        involution = involution.max(flip(&flip(&p, ell), ell).distance_to(&p));
    }
    Ok((
        worst <= 1e-9 && involution <= 1e-13,
        format!("relative length change {worst:.1e}, flip twice {involution:.1e}"),
    ))
}

fn group_law(_: &Dynamics) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut worst: f64 = 0.0;
    let mut st: f64 = 0.0;
    let random_motion = |rng: &mut ChaCha8Rng| {
        let g = RigidMotion::rotation_about(rng.gen_range(-PI..PI), [rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)]);
        if rng.gen_bool(0.5) {
            g.compose(&RigidMotion::reflection_about_line([rng.gen_range(-3.0..3.0), 0.0], rng.gen_range(0.0..PI)))
        } else {
            g
        }
    };
    for _ in 0..500 {
        let g = random_motion(&mut rng);
        let h = random_motion(&mut rng);
        let p = ConfigPoint::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0), rng.gen_range(-PI..PI));
        let lhs = act(&g.compose(&h), &p);
        let rhs = act(&g, &act(&h, &p));
        worst = worst.max(lhs.distance_to(&rhs));
        let ell = BikeLength::new(rng.gen_range(0.2..3.0))?;
        let (b, v) = to_st_model(&p, ell);
        st = st.max(from_st_model(b, v, ell).distance_to(&p));
    }
    Ok((
        worst <= 1e-12 && st <= 1e-13,
        format!("composition {worst:.1e}, model round trip {st:.1e}"),
    ))
}

fn csv_roundtrip(d: &Dynamics) -> Result<(bool, String)> {
    let p = geodesic(d, 0.7, 5.0)?;
    let text = to_csv_string(&p);
    let q = read_csv(text.as_bytes(), p.ell())?;
    let exact = p == q && to_csv_string(&q) == text;
    Ok((exact, format!("bit-exact {exact}")))
}
