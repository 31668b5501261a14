//! Elastica diagnostics for sampled front tracks.
//!
//! Geodesic front tracks are non-inflectional elasticae satisfying the
//! energy form `kappa'^2 / 2 + kappa^4 / 8 + A kappa^2 / 2 = B`. This module
//! measures that relation on samples, locates vertices (curvature extrema),
//! estimates period and advance, widths and the directrix, and brings paths
//! to a canonical position.

use nalgebra::{DMatrix, DVector};

use crate::diff;
use crate::error::{BikeError, Result};
use crate::geometry::{dist, RigidMotion, Vec2};
use crate::path::SampledBikePath;

/// Tolerance used to decide the exceptional classes from exact inputs.
pub const CLASSIFY_TOLERANCE: f64 = 1e-9;

/// Arc length over which a soliton is considered to have reached its width.
pub const SOLITON_WINDOW: f64 = 40.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElasticaParams {
    pub coef_a: f64,
    pub coef_b: f64,
    /// Momentum `a` of the geodesic the parameters came from, if any.
    pub momentum: Option<f64>,
    /// Shape parameter `-2B / A^2`, undefined when `A = 0`.
    pub mu: Option<f64>,
}

impl ElasticaParams {
    pub fn from_coefficients(coef_a: f64, coef_b: f64) -> Self {
        ElasticaParams {
            coef_a,
            coef_b,
            momentum: None,
            mu: (coef_a != 0.0).then(|| -2.0 * coef_b / (coef_a * coef_a)),
        }
    }

    /// Whether `2B + A^2 >= 0`, the condition for the energy form to have
    /// real solutions.
    pub fn is_feasible(&self) -> bool {
        2.0 * self.coef_b + self.coef_a * self.coef_a >= -1e-12
    }

    /// Parameters of the curve scaled by `lambda`.
    pub fn dilated(&self, lambda: f64) -> Self {
        ElasticaParams {
            coef_a: self.coef_a / (lambda * lambda),
            coef_b: self.coef_b / lambda.powi(4),
            momentum: None,
            mu: self.mu,
        }
    }
}

pub fn elastica_params_from_a(a: f64) -> ElasticaParams {
    let a2 = a * a;
    let coef_a = -(a2 + 1.0) / 2.0;
    let coef_b = -(a2 - 1.0) * (a2 - 1.0) / 8.0;
    ElasticaParams {
        coef_a,
        coef_b,
        momentum: Some(a),
        mu: Some((a2 - 1.0) * (a2 - 1.0) / ((a2 + 1.0) * (a2 + 1.0))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElasticaKind {
    Line,
    Circle,
    Soliton,
    WideNie,
    NarrowNie,
}

impl ElasticaKind {
    pub fn name(self) -> &'static str {
        match self {
            ElasticaKind::Line => "Line",
            ElasticaKind::Circle => "Circle",
            ElasticaKind::Soliton => "Soliton",
            ElasticaKind::WideNie => "WideNIE",
            ElasticaKind::NarrowNie => "NarrowNIE",
        }
    }
}

impl std::fmt::Display for ElasticaKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElasticaClass {
    pub kind: ElasticaKind,
    pub params: ElasticaParams,
}

/// Labels the front track of the unit-speed geodesic with momentum `a` and
/// initial curvature `kappa0`.
pub fn classify(a: f64, kappa0: f64) -> ElasticaClass {
    let kind = if kappa0.abs() <= CLASSIFY_TOLERANCE {
        ElasticaKind::Line
    } else if a <= CLASSIFY_TOLERANCE {
        ElasticaKind::Circle
    } else if (a - 1.0).abs() <= CLASSIFY_TOLERANCE {
        ElasticaKind::Soliton
    } else if a < 1.0 {
        ElasticaKind::WideNie
    } else {
        ElasticaKind::NarrowNie
    };
    ElasticaClass {
        kind,
        params: elastica_params_from_a(a),
    }
}

/// Front-track width predicted for momentum `a` with unit bike length.
pub fn predicted_front_width(a: f64) -> f64 {
    if a <= 1.0 {
        2.0
    } else {
        2.0 / a
    }
}

/// Back-track width predicted for momentum `a` with unit bike length.
pub fn predicted_back_width(a: f64) -> f64 {
    if a <= 1.0 {
        a / (1.0 + (1.0 - a * a).sqrt())
    } else {
        2.0 / a
    }
}

fn require_uniform(path: &SampledBikePath, min_len: usize) -> Result<f64> {
    if path.len() < min_len {
        return Err(BikeError::DegenerateInput(format!(
            "need at least {min_len} samples, got {}",
            path.len()
        )));
    }
    path.uniform_step().ok_or_else(|| {
        BikeError::DegenerateInput("curvature derivatives need uniform sampling".into())
    })
}

/// `(kappa, kappa')` at interior samples, with a fourth-order stencil.
fn kappa_and_slope(path: &SampledBikePath) -> Result<Vec<(f64, f64)>> {
    let h = require_uniform(path, 5)?;
    let k = path.kappas();
    Ok((2..k.len() - 2).map(|i| (k[i], diff::d1_5(&k, i, 1, h))).collect())
}

/// Largest defect of the energy form over interior samples.
pub fn energy_residual(path: &SampledBikePath, p: &ElasticaParams) -> Result<f64> {
    Ok(kappa_and_slope(path)?
        .into_iter()
        .map(|(k, dk)| {
            let k2 = k * k;
            (0.5 * dk * dk + 0.125 * k2 * k2 + 0.5 * p.coef_a * k2 - p.coef_b).abs()
        })
        .fold(0.0, f64::max))
}

/// Least-squares `(A, B)` of the energy form from samples.
pub fn fit_energy_params(path: &SampledBikePath) -> Result<ElasticaParams> {
    let rows = kappa_and_slope(path)?;
    let n = rows.len();
    let m = DMatrix::from_fn(n, 2, |i, j| if j == 0 { -0.5 * rows[i].0 * rows[i].0 } else { 1.0 });
    let rhs = DVector::from_iterator(
        n,
        rows.iter().map(|&(k, dk)| 0.5 * dk * dk + 0.125 * k.powi(4)),
    );
    let svd = m.svd(true, true);
    let smax = svd.singular_values.max();
    if svd.singular_values.min() <= 1e-12 * smax {
        return Err(BikeError::RankDeficient(
            "energy fit needs non-constant curvature".into(),
        ));
    }
    let x = svd
        .solve(&rhs, 0.0)
        .map_err(|e| BikeError::RankDeficient(e.to_string()))?;
    Ok(ElasticaParams::from_coefficients(x[0], x[1]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexKind {
    Max,
    Min,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vertex {
    pub t: f64,
    pub kind: VertexKind,
    pub kappa: f64,
    pub theta: f64,
    pub front: Vec2,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct VertexReport {
    pub vertices: Vec<Vertex>,
}

impl VertexReport {
    pub fn maxima(&self) -> impl Iterator<Item = &Vertex> {
        self.vertices.iter().filter(|v| v.kind == VertexKind::Max)
    }

    pub fn minima(&self) -> impl Iterator<Item = &Vertex> {
        self.vertices.iter().filter(|v| v.kind == VertexKind::Min)
    }

    pub fn alternates(&self) -> bool {
        self.vertices.windows(2).all(|w| w[0].kind != w[1].kind)
    }
}

fn quad_at(y: [f64; 3], d: f64) -> f64 {
    let c1 = 0.5 * (y[2] - y[0]);
    let c2 = 0.5 * (y[2] - 2.0 * y[1] + y[0]);
    y[1] + c1 * d + c2 * d * d
}

fn refined_vertex(path: &SampledBikePath, i: usize, kind: VertexKind) -> Vertex {
    let s = path.samples();
    let (a, b, c) = (&s[i - 1], &s[i], &s[i + 1]);
    let denom = a.kappa - 2.0 * b.kappa + c.kappa;
    let d = if denom != 0.0 {
        (0.5 * (a.kappa - c.kappa) / denom).clamp(-1.0, 1.0)
    } else {
        0.0
    };
    let h = if d >= 0.0 { c.t - b.t } else { b.t - a.t };
    Vertex {
        t: b.t + d * h,
        kind,
        kappa: quad_at([a.kappa, b.kappa, c.kappa], d),
        theta: quad_at([a.theta, b.theta, c.theta], d),
        front: [
            quad_at([a.front[0], b.front[0], c.front[0]], d),
            quad_at([a.front[1], b.front[1], c.front[1]], d),
        ],
    }
}

fn kappa_range(kappa: &[f64]) -> (f64, f64) {
    kappa
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &k| (lo.min(k), hi.max(k)))
}

/// Curvature extrema, including an endpoint where the one-sided slope of the
/// curvature vanishes. Extrema whose curvature varies by less than `1e-8`
/// within arc length `0.05` are treated as noise.
pub fn find_vertices(path: &SampledBikePath) -> VertexReport {
    let s = path.samples();
    let n = s.len();
    let k = path.kappas();
    if n < 5 {
        return VertexReport::default();
    }
    let (lo, hi) = kappa_range(&k);
    if hi - lo < 1e-7 * hi.abs().max(1.0) {
        return VertexReport::default();
    }
    let h = path.max_step();
    let window = ((0.05 / h).ceil() as usize).max(2);
    let prominent = |i: usize| {
        let a = i.saturating_sub(window);
        let b = (i + window).min(n - 1);
        (a..=b).any(|j| (k[j] - k[i]).abs() > 1e-8)
    };

    let mut vertices: Vec<Vertex> = Vec::new();
    let slope_tol = 1e-6 * hi.abs().max(1.0);
    let endpoint = |i0: usize, i1: usize, i2: usize| -> Option<Vertex> {
        let dt = s[i1].t - s[i0].t;
        let slope = (-3.0 * k[i0] + 4.0 * k[i1] - k[i2]) / (2.0 * dt);
        if slope.abs() > slope_tol || !prominent(i0) {
            return None;
        }
        let kind = if k[i0] >= k[i1] {
            VertexKind::Max
        } else {
            VertexKind::Min
        };
        Some(Vertex {
            t: s[i0].t,
            kind,
            kappa: k[i0],
            theta: s[i0].theta,
            front: s[i0].front,
        })
    };
    if let Some(v) = endpoint(0, 1, 2) {
        vertices.push(v);
    }
    for i in 1..n - 1 {
        let kind = if k[i] > k[i - 1] && k[i] >= k[i + 1] {
            VertexKind::Max
        } else if k[i] < k[i - 1] && k[i] <= k[i + 1] {
            VertexKind::Min
        } else {
            continue;
        };
        if !prominent(i) {
            continue;
        }
        let v = refined_vertex(path, i, kind);
        match vertices.last_mut() {
            Some(last) if last.kind == kind => {
                let better = match kind {
                    VertexKind::Max => v.kappa > last.kappa,
                    VertexKind::Min => v.kappa < last.kappa,
                };
                if better {
                    *last = v;
                }
            }
            _ => vertices.push(v),
        }
    }
    if let Some(v) = endpoint(n - 1, n - 2, n - 3) {
        if vertices.last().is_none_or(|last| last.kind != v.kind) {
            vertices.push(v);
        }
    }
    VertexReport { vertices }
}

fn is_constant_curvature(path: &SampledBikePath) -> bool {
    let (lo, hi) = kappa_range(&path.kappas());
    hi - lo < 1e-7 * hi.abs().max(lo.abs()).max(1.0)
}

/// Arc length `T` between consecutive curvature maxima and the distance `L`
/// the front advances over one such period.
pub fn period_and_advance(path: &SampledBikePath) -> Result<(f64, f64)> {
    if is_constant_curvature(path) {
        return Err(BikeError::NoPeriod);
    }
    let report = find_vertices(path);
    let maxima: Vec<&Vertex> = report.maxima().collect();
    if maxima.len() < 2 {
        return if report.minima().next().is_none() {
            Err(BikeError::NoPeriod)
        } else {
            Err(BikeError::InsufficientExtent {
                extent: path.duration(),
            })
        };
    }
    let (first, last) = (maxima[0], maxima[maxima.len() - 1]);
    let count = (maxima.len() - 1) as f64;
    let period = (last.t - first.t) / count;
    let advance = dist(first.front, last.front) / count;
    if advance >= period {
        return Err(BikeError::InvalidPeriod { period, advance });
    }
    Ok((period, advance))
}

fn has_full_period(path: &SampledBikePath) -> Result<()> {
    if is_constant_curvature(path) {
        let k = path.first().kappa.abs();
        if k == 0.0 || path.duration() >= std::f64::consts::TAU / k {
            return Ok(());
        }
        return Err(BikeError::InsufficientExtent {
            extent: path.duration(),
        });
    }
    let report = find_vertices(path);
    if report.maxima().count() >= 2 || path.duration() >= SOLITON_WINDOW {
        Ok(())
    } else {
        Err(BikeError::InsufficientExtent {
            extent: path.duration(),
        })
    }
}

fn y_extent(points: impl Iterator<Item = Vec2>) -> f64 {
    let (lo, hi) = points.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| {
        (lo.min(p[1]), hi.max(p[1]))
    });
    hi - lo
}

/// Vertical extent of the front track of a canonically oriented path.
pub fn front_width(path: &SampledBikePath) -> Result<f64> {
    has_full_period(path)?;
    Ok(y_extent(path.samples().iter().map(|s| s.front)))
}

/// Vertical extent of the back track of a canonically oriented path.
pub fn back_width(path: &SampledBikePath) -> Result<f64> {
    has_full_period(path)?;
    let ell = path.ell();
    Ok(y_extent(path.samples().iter().map(|s| s.back(ell))))
}

/// Straight-line fit `kappa = slope * (y - offset)` of curvature against
/// height; for a canonically oriented geodesic the slope is the momentum and
/// `y = offset` is the directrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectrixFit {
    pub slope: f64,
    pub offset: f64,
    pub residual: f64,
}

pub fn directrix_fit(path: &SampledBikePath) -> Result<DirectrixFit> {
    let n = path.len() as f64;
    let s = path.samples();
    let my = s.iter().map(|p| p.front[1]).sum::<f64>() / n;
    let mk = s.iter().map(|p| p.kappa).sum::<f64>() / n;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for p in s {
        sxy += (p.front[1] - my) * (p.kappa - mk);
        sxx += (p.front[1] - my) * (p.front[1] - my);
    }
    if !(sxx > 0.0) || sxy == 0.0 {
        return Err(BikeError::NoDirectrix);
    }
    let slope = sxy / sxx;
    let offset = my - mk / slope;
    let residual = s
        .iter()
        .map(|p| (p.kappa - slope * (p.front[1] - offset)).abs())
        .fold(0.0, f64::max);
    Ok(DirectrixFit {
        slope,
        offset,
        residual,
    })
}

fn tangent_angle_at(path: &SampledBikePath, t: f64) -> f64 {
    let s = path.samples();
    let i = s.partition_point(|p| p.t <= t).clamp(1, s.len() - 1);
    let (a, b) = (&s[i - 1], &s[i]);
    (b.front[1] - a.front[1]).atan2(b.front[0] - a.front[0])
}

/// Moves a path so that its directrix is horizontal, its curvature positive
/// and a curvature maximum sits at `x = 0`. For periodic tracks the maximum
/// is placed at the origin with the following maxima along the positive x
/// axis. A soliton is placed with its asymptote on the x axis and its apex
/// at `(0, 4 / kappa_max)`, heading in the negative x direction there.
pub fn canonical_orient(path: &SampledBikePath) -> Result<(SampledBikePath, RigidMotion)> {
    if is_constant_curvature(path) {
        return Err(BikeError::NoDirectrix);
    }
    let mean_kappa = path.kappas().iter().sum::<f64>() / path.len() as f64;
    let g0 = if mean_kappa < 0.0 {
        RigidMotion::reflection_x_axis()
    } else {
        RigidMotion::identity()
    };
    let p0 = path.transformed(&g0);
    let report = find_vertices(&p0);
    let maxima: Vec<&Vertex> = report.maxima().collect();
    let has_min = report.minima().next().is_some();

    let g1 = if maxima.len() >= 2 {
        let (v0, v1) = (maxima[0], maxima[1]);
        let phi = (v1.front[1] - v0.front[1]).atan2(v1.front[0] - v0.front[0]);
        let r = RigidMotion::rotation(-phi);
        let q = r.apply_point(v0.front);
        RigidMotion::translation([-q[0], -q[1]]).compose(&r)
    } else if maxima.len() == 1 {
        let apex = maxima[0];
        let r = RigidMotion::rotation(std::f64::consts::PI - tangent_angle_at(&p0, apex.t));
        let q = r.apply_point(apex.front);
        let height = if has_min { 0.0 } else { 4.0 / apex.kappa };
        let ends_small = {
            let k = p0.kappas();
            k[0] < 0.1 * apex.kappa && k[k.len() - 1] < 0.1 * apex.kappa
        };
        if !has_min && !ends_small {
            return Err(BikeError::InsufficientExtent {
                extent: path.duration(),
            });
        }
        RigidMotion::translation([-q[0], height - q[1]]).compose(&r)
    } else {
        return Err(BikeError::InsufficientExtent {
            extent: path.duration(),
        });
    };
    let g = g1.compose(&g0);
    Ok((path.transformed(&g), g))
}

/// Largest distance between the front track of `flipped` and the image of
/// the front track of `original` under the predicted congruence: half a
/// period later, shifted back by `L / 2` along the directrix, and for narrow
/// tracks also reflected in the directrix. Both paths must be canonically
/// oriented in the same frame.
pub fn flip_congruence(
    original: &SampledBikePath,
    flipped: &SampledBikePath,
    period: f64,
    advance: f64,
    narrow: bool,
) -> Result<f64> {
    let directrix = if narrow {
        Some(directrix_fit(original)?.offset)
    } else {
        None
    };
    let end = original.last().t;
    let mut worst: f64 = 0.0;
    let mut compared = 0usize;
    for s in flipped.samples() {
        let t = s.t + 0.5 * period;
        if t > end {
            break;
        }
        let (p, _) = original.interpolate(t).ok_or(BikeError::InsufficientExtent {
            extent: original.duration(),
        })?;
        let mut q = [p[0] - 0.5 * advance, p[1]];
        if let Some(yd) = directrix {
            q[1] = 2.0 * yd - q[1];
        }
        worst = worst.max(dist(q, s.front));
        compared += 1;
    }
    if compared == 0 {
        return Err(BikeError::InsufficientExtent {
            extent: original.duration(),
        });
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::BikeLength;
    use crate::integrate::{integrate_geodesic, ReducedState};
    use crate::path::PathSample;
    use std::f64::consts::FRAC_PI_2;

    fn geodesic(a: f64, t_end: f64) -> SampledBikePath {
        integrate_geodesic(ReducedState::at_vertex(a), t_end, 1e-3)
            .unwrap()
            .path
    }

    #[test]
    fn params_from_a() {
        let p = elastica_params_from_a(1.0);
        assert_eq!((p.coef_a, p.coef_b, p.mu), (-1.0, 0.0, Some(0.0)));
        let p = elastica_params_from_a(0.0);
        assert_eq!((p.coef_a, p.coef_b, p.mu), (-0.5, -0.125, Some(1.0)));
        let m2 = elastica_params_from_a(2.0).mu.unwrap();
        let mh = elastica_params_from_a(0.5).mu.unwrap();
        assert!((m2 - 9.0 / 25.0).abs() < 1e-15 && (mh - 9.0 / 25.0).abs() < 1e-15);
        for k in 0..50 {
            let p = elastica_params_from_a(0.1 * k as f64);
            assert!(p.is_feasible() && p.mu.unwrap() <= 1.0);
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(0.5, 1.2).kind, ElasticaKind::WideNie);
        assert_eq!(classify(3.0, 2.5).kind, ElasticaKind::NarrowNie);
        assert_eq!(classify(1.0, 0.0).kind, ElasticaKind::Line);
        assert_eq!(classify(1.0, 2.0).kind, ElasticaKind::Soliton);
        assert_eq!(classify(0.0, 1.0).kind, ElasticaKind::Circle);
        assert_eq!(classify(1.0 + 1e-10, 2.0).kind, ElasticaKind::Soliton);
        assert_eq!(classify(1.0 + 1e-8, 2.0).kind, ElasticaKind::NarrowNie);
    }

    #[test]
    fn residual_of_constant_curvature() {
        let ell = BikeLength::default();
        let samples = |kappa: f64| -> Vec<PathSample> {
            (0..20)
                .map(|i| PathSample {
                    t: i as f64 * 0.1,
                    front: [0.0, 0.0],
                    theta: 0.0,
                    kappa,
                })
                .collect()
        };
        let circle = SampledBikePath::new(samples(1.0), ell).unwrap();
        let r = energy_residual(&circle, &elastica_params_from_a(0.0)).unwrap();
        assert!(r < 1e-9);
        let line = SampledBikePath::new(samples(0.0), ell).unwrap();
        let any = ElasticaParams::from_coefficients(-3.7, 0.0);
        assert_eq!(energy_residual(&line, &any).unwrap(), 0.0);
        let short = SampledBikePath::new(samples(1.0)[..4].to_vec(), ell).unwrap();
        assert!(matches!(
            energy_residual(&short, &any),
            Err(BikeError::DegenerateInput(_))
        ));
    }

    #[test]
    fn geodesic_energy_residual() {
        let p = geodesic(0.7, 20.0);
        assert!(energy_residual(&p, &elastica_params_from_a(0.7)).unwrap() < 1e-6);
        let fit = fit_energy_params(&p).unwrap();
        let exact = elastica_params_from_a(0.7);
        assert!((fit.coef_a - exact.coef_a).abs() < 1e-6);
        assert!((fit.coef_b - exact.coef_b).abs() < 1e-6);
    }

    #[test]
    fn vertices_of_wide_geodesic() {
        let a = 0.5;
        let report = find_vertices(&geodesic(a, 30.0));
        assert!(report.vertices.len() >= 6 && report.alternates());
        assert_eq!(report.vertices[0].t, 0.0);
        for v in &report.vertices {
            let (kappa, theta) = match v.kind {
                VertexKind::Max => (1.0 + a, FRAC_PI_2),
                VertexKind::Min => (1.0 - a, -FRAC_PI_2),
            };
            assert!((v.kappa - kappa).abs() < 1e-5, "{v:?}");
            assert!(crate::geometry::angle_distance(v.theta, theta) < 1e-4, "{v:?}");
        }
    }

    #[test]
    fn period_and_widths() {
        let p = geodesic(0.5, 30.0);
        let (t, l) = period_and_advance(&p).unwrap();
        assert!(l < t && l > 0.0);
        assert!((front_width(&p).unwrap() - 2.0).abs() < 1e-4);
        assert!((back_width(&p).unwrap() - predicted_back_width(0.5)).abs() < 1e-4);
        let short = p.window(0.0, 1.0).unwrap();
        assert!(matches!(
            front_width(&short),
            Err(BikeError::InsufficientExtent { .. })
        ));
    }

    #[test]
    fn circle_has_no_period() {
        let c = integrate_geodesic(
            ReducedState {
                x: 0.0,
                y: 0.0,
                theta: 0.0,
                kappa: 1.0,
                a: 0.0,
            },
            20.0,
            1e-3,
        )
        .unwrap()
        .path;
        assert_eq!(period_and_advance(&c), Err(BikeError::NoPeriod));
        assert!(find_vertices(&c).vertices.is_empty());
    }

    #[test]
    fn canonical_orientation() {
        let p = geodesic(0.5, 30.0);
        let (_, g) = canonical_orient(&p).unwrap();
        assert!(g.rotation.abs() < 1e-6);
        assert!(g.translation[0].abs() < 1e-6 && g.translation[1].abs() < 1e-6);

        let moved = p.transformed(&RigidMotion::rotation(0.7));
        let (back, g) = canonical_orient(&moved).unwrap();
        assert!((g.rotation + 0.7).abs() < 1e-4);
        for (a, b) in p.samples().iter().zip(back.samples()) {
            assert!(dist(a.front, b.front) < 1e-5);
        }

        let mirrored = p.transformed(&RigidMotion::reflection_about_line([1.0, 2.0], 0.3));
        let (back, _) = canonical_orient(&mirrored).unwrap();
        assert!(back.kappas().iter().all(|&k| k > 0.0));
        for (a, b) in p.samples().iter().zip(back.samples()) {
            assert!(dist(a.front, b.front) < 1e-5);
        }
    }

    #[test]
    fn directrix_of_canonical_geodesic() {
        for &a in &[0.5, 2.0] {
            let fit = directrix_fit(&geodesic(a, 20.0)).unwrap();
            assert!((fit.slope - a).abs() < 1e-8);
            assert!((fit.offset + (1.0 + a) / a).abs() < 1e-8);
            assert!(fit.residual < 1e-8);
        }
    }

    #[test]
    fn flipped_tracks_are_congruent() {
        for &(a, narrow) in &[(0.5, false), (2.0, true)] {
            let p = geodesic(a, 40.0);
            let (t, l) = period_and_advance(&p).unwrap();
            let f = crate::path::flip_path(&p).unwrap();
            let err = flip_congruence(&p, &f, t, l, narrow).unwrap();
            assert!(err < 1e-5, "a={a}: {err}");
            let wrong = flip_congruence(&p, &f, t, l, !narrow).unwrap();
            assert!(wrong > 1e-2, "a={a}: {wrong}");
        }
    }
}
