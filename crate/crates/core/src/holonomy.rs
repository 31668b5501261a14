//! Bicycle holonomy and correspondence.
//!
//! Riding the front wheel along a fixed curve from `f0` to `f1` sends each
//! initial frame angle to a final one. This circle map is a Möbius
//! transformation: in the half-angle coordinate `tan(theta / 2)` it acts by a
//! real linear fractional map. Flipping the lift of a curve gives its
//! bicycle correspondent, a second front track over the same back track.

use nalgebra::{DMatrix, DVector, Matrix2};
use num_complex::Complex64;

use crate::diff;
use crate::error::{BikeError, Result};
use crate::geometry::{angle_distance, normalize_angle, BikeLength, Vec2};
use crate::integrate::horizontal_lift;
use crate::path::{flip_path, SampledBikePath};
use crate::track::{FrontTrack, HermiteTrack};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransportSample {
    pub theta_in: f64,
    pub theta_out: f64,
}

/// Final frame angle after riding `c` from the configuration with frame
/// angle `theta0` at its start. The angle is continuous in the ride, not
/// wrapped.
pub fn transport<C: FrontTrack + ?Sized>(
    c: &C,
    theta0: f64,
    ell: BikeLength,
    step: f64,
) -> Result<f64> {
    Ok(horizontal_lift(c, theta0, ell, step)?.last().theta)
}

/// Transports `count` equally spaced fiber angles in `[-pi, pi)`, one
/// thread per sample.
pub fn transport_fiber<C: FrontTrack + Sync + ?Sized>(
    c: &C,
    count: usize,
    ell: BikeLength,
    step: f64,
) -> Result<Vec<TransportSample>> {
    let angles: Vec<f64> = (0..count)
        .map(|k| -std::f64::consts::PI + std::f64::consts::TAU * k as f64 / count as f64)
        .collect();
    transport_angles(c, &angles, ell, step)
}

/// Transports each angle of `angles` concurrently.
pub fn transport_angles<C: FrontTrack + Sync + ?Sized>(
    c: &C,
    angles: &[f64],
    ell: BikeLength,
    step: f64,
) -> Result<Vec<TransportSample>> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = angles
            .iter()
            .map(|&theta_in| {
                scope.spawn(move || {
                    transport(c, theta_in, ell, step).map(|theta_out| TransportSample {
                        theta_in,
                        theta_out,
                    })
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("transport worker panicked"))
            .collect()
    })
}

/// A real linear fractional map `w -> (alpha w + beta) / (gamma w + delta)`
/// of `w = tan(theta / 2)`, normalized to `|det| = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusMap {
    pub matrix: Matrix2<f64>,
}

impl MobiusMap {
    pub fn identity() -> Self {
        MobiusMap {
            matrix: Matrix2::identity(),
        }
    }

    pub fn new(matrix: Matrix2<f64>) -> Result<Self> {
        let det = matrix.determinant();
        if !(det.abs() > 1e-300) || !det.is_finite() {
            return Err(BikeError::RankDeficient("singular Möbius matrix".into()));
        }
        Ok(MobiusMap {
            matrix: matrix / det.abs().sqrt(),
        })
    }

    pub fn determinant(&self) -> f64 {
        self.matrix.determinant()
    }

    /// Image of a frame angle, wrapped into `(-pi, pi]`.
    pub fn apply(&self, theta: f64) -> f64 {
        let (x1, x0) = (0.5 * theta).sin_cos();
        let m = &self.matrix;
        let y1 = m[(0, 0)] * x1 + m[(0, 1)] * x0;
        let y0 = m[(1, 0)] * x1 + m[(1, 1)] * x0;
        normalize_angle(2.0 * y1.atan2(y0))
    }

    pub fn compose(&self, other: &MobiusMap) -> MobiusMap {
        MobiusMap {
            matrix: self.matrix * other.matrix,
        }
    }

    /// The same map written on the unit circle `z = exp(i theta)`: a complex
    /// matrix `[[p, q], [r, s]]` with `z -> (p z + q) / (r z + s)`.
    pub fn disk_coefficients(&self) -> [[Complex64; 2]; 2] {
        let i = Complex64::i();
        let one = Complex64::new(1.0, 0.0);
        // z = (i w + 1) / (-i w + 1) sends tan(theta / 2) to exp(i theta).
        let c = [[i, one], [-i, one]];
        let c_inv_scale = one / (i * 2.0);
        let c_inv = [
            [c_inv_scale * one, c_inv_scale * -one],
            [c_inv_scale * i, c_inv_scale * i],
        ];
        let m = self.matrix.map(|v| Complex64::new(v, 0.0));
        let mm = [[m[(0, 0)], m[(0, 1)]], [m[(1, 0)], m[(1, 1)]]];
        let mul = |a: [[Complex64; 2]; 2], b: [[Complex64; 2]; 2]| {
            let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
            for r in 0..2 {
                for col in 0..2 {
                    out[r][col] = a[r][0] * b[0][col] + a[r][1] * b[1][col];
                }
            }
            out
        };
        mul(mul(c, mm), c_inv)
    }

    /// Image of a point on the unit circle through [`Self::disk_coefficients`].
    pub fn apply_disk(&self, z: Complex64) -> Complex64 {
        let [[p, q], [r, s]] = self.disk_coefficients();
        (p * z + q) / (r * z + s)
    }
}

/// Least-squares Möbius map through transport samples, with the largest
/// angular misfit.
pub fn fit_mobius(samples: &[TransportSample]) -> Result<(MobiusMap, f64)> {
    if samples.len() < 6 {
        return Err(BikeError::DegenerateInput(format!(
            "Möbius fit needs at least 6 samples, got {}",
            samples.len()
        )));
    }
    let mut distinct: Vec<f64> = samples.iter().map(|s| normalize_angle(s.theta_in)).collect();
    distinct.sort_by(f64::total_cmp);
    distinct.dedup_by(|a, b| angle_distance(*a, *b) < 1e-9);
    if distinct.len() >= 2 && angle_distance(distinct[0], distinct[distinct.len() - 1]) < 1e-9 {
        distinct.pop();
    }
    if distinct.len() < 6 {
        return Err(BikeError::RankDeficient(format!(
            "only {} distinct input angles",
            distinct.len()
        )));
    }

    let n = samples.len();
    let mut a = DMatrix::zeros(n, 4);
    for (i, s) in samples.iter().enumerate() {
        let (x1, x0) = (0.5 * s.theta_in).sin_cos();
        let (y1, y0) = (0.5 * s.theta_out).sin_cos();
        a[(i, 0)] = y0 * x1;
        a[(i, 1)] = y0 * x0;
        a[(i, 2)] = -y1 * x1;
        a[(i, 3)] = -y1 * x0;
    }
    let svd = a.svd(false, true);
    let v_t = svd.v_t.expect("requested right singular vectors");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&i, &j| svd.singular_values[i].total_cmp(&svd.singular_values[j]));
    let smax = svd.singular_values[order[order.len() - 1]];
    if svd.singular_values[order[1]] <= 1e-9 * smax {
        return Err(BikeError::RankDeficient(
            "transport samples do not determine a unique map".into(),
        ));
    }
    let v = v_t.row(order[0]);
    let map = MobiusMap::new(Matrix2::new(v[0], v[1], v[2], v[3]))?;
    let residual = samples
        .iter()
        .map(|s| angle_distance(map.apply(s.theta_in), s.theta_out))
        .fold(0.0, f64::max);
    Ok((map, residual))
}

/// Cross-ratio of four fiber points in the half-angle coordinate.
pub fn cross_ratio(t1: f64, t2: f64, t3: f64, t4: f64) -> f64 {
    let s = |a: f64, b: f64| (0.5 * (a - b)).sin();
    s(t1, t3) * s(t2, t4) / (s(t2, t3) * s(t1, t4))
}

/// A lift, its flip, and the flipped front track as a smooth curve.
#[derive(Debug, Clone)]
pub struct Correspondent {
    pub lift: SampledBikePath,
    pub flipped: SampledBikePath,
    pub track: HermiteTrack,
}

/// Front track `2 b - f` of the flipped lift of `c` started at `theta0`.
pub fn correspondent<C: FrontTrack + ?Sized>(
    c: &C,
    theta0: f64,
    ell: BikeLength,
    step: f64,
) -> Result<Correspondent> {
    let lift = horizontal_lift(c, theta0, ell, step)?;
    let flipped = flip_path(&lift)?;
    let l = ell.get();
    let velocities: Vec<Vec2> = lift
        .samples()
        .iter()
        .map(|s| {
            let v = c.velocity(s.t);
            let (sn, cs) = s.theta.sin_cos();
            let rate = (cs * v[1] - sn * v[0]) / l;
            [v[0] + 2.0 * l * rate * sn, v[1] - 2.0 * l * rate * cs]
        })
        .collect();
    let track = HermiteTrack::new(lift.times(), flipped.fronts(), velocities)?
        .with_arc_length(c.is_arc_length());
    Ok(Correspondent {
        lift,
        flipped,
        track,
    })
}

/// Least-squares fit of `kappa'' + kappa^3 / 2 + A kappa = C`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PressurizedFit {
    pub coef_a: f64,
    pub coef_c: f64,
    pub residual: f64,
    /// Set when the curvature is constant and `(A, C)` is only determined up
    /// to a line; the minimum-norm pair is returned.
    pub degenerate: bool,
}

/// Fits the pressurized elastica equation to a curve sampled at uniform arc
/// length `spacing`. Curvature and its second derivative come from
/// high-order central differences on a strided sub-grid.
pub fn pressurized_fit(points: &[Vec2], spacing: f64) -> Result<PressurizedFit> {
    if points.len() < 9 {
        return Err(BikeError::DegenerateInput(format!(
            "pressurized fit needs at least 9 samples, got {}",
            points.len()
        )));
    }
    if !(spacing > 0.0) {
        return Err(BikeError::DegenerateInput("spacing must be positive".into()));
    }
    let rough = diff::curvature_from_points(points)
        .into_iter()
        .fold(0.0f64, |m, k| m.max(k.abs()));
    let target = 0.03 / rough.max(1.0);
    let mut stride = ((target / spacing).round() as usize).max(1);
    while stride > 1 && (points.len() - 1) / stride + 1 < 13 {
        stride -= 1;
    }
    let sub: Vec<Vec2> = points.iter().step_by(stride).copied().collect();
    let m = sub.len();
    let h = spacing * stride as f64;
    let (wide, margin) = if m >= 13 { (true, 3) } else { (false, 2) };
    if m < 2 * 2 * margin + 1 {
        return Err(BikeError::DegenerateInput(
            "too few samples for curvature derivatives".into(),
        ));
    }
    let xs: Vec<f64> = sub.iter().map(|p| p[0]).collect();
    let ys: Vec<f64> = sub.iter().map(|p| p[1]).collect();
    let d1 = |y: &[f64], i: usize| if wide { diff::d1_7(y, i, 1, h) } else { diff::d1_5(y, i, 1, h) };
    let d2 = |y: &[f64], i: usize| if wide { diff::d2_7(y, i, 1, h) } else { diff::d2_5(y, i, 1, h) };
    let kappa: Vec<f64> = (margin..m - margin)
        .map(|i| {
            let (x1, y1, x2, y2) = (d1(&xs, i), d1(&ys, i), d2(&xs, i), d2(&ys, i));
            (x1 * y2 - y1 * x2) / (x1 * x1 + y1 * y1).powf(1.5)
        })
        .collect();
    let rows: Vec<(f64, f64)> = (margin..kappa.len() - margin)
        .map(|i| (kappa[i], d2(&kappa, i)))
        .collect();

    let (lo, hi) = rows
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| (lo.min(r.0), hi.max(r.0)));
    let degenerate = hi - lo <= 1e-9 * hi.abs().max(lo.abs()).max(1.0);
    let n = rows.len();
    let a = DMatrix::from_fn(n, 2, |i, j| if j == 0 { rows[i].0 } else { -1.0 });
    let b = DVector::from_iterator(n, rows.iter().map(|&(k, kdd)| -(kdd + 0.5 * k * k * k)));
    let svd = a.svd(true, true);
    let eps = if degenerate {
        1e-9 * svd.singular_values.max()
    } else {
        0.0
    };
    let x = svd
        .solve(&b, eps)
        .map_err(|e| BikeError::RankDeficient(e.to_string()))?;
    let (coef_a, coef_c) = (x[0], x[1]);
    let residual = rows
        .iter()
        .map(|&(k, kdd)| (kdd + 0.5 * k * k * k + coef_a * k - coef_c).abs())
        .fold(0.0, f64::max);
    Ok(PressurizedFit {
        coef_a,
        coef_c,
        residual,
        degenerate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::track::{Circle, Line, Stationary};
    use std::f64::consts::{PI, TAU};

    fn ell() -> BikeLength {
        BikeLength::default()
    }

    #[test]
    fn transport_rejects_stationary_curve() {
        let c = Stationary {
            point: [0.0, 0.0],
            start: 0.0,
            end: 1.0,
        };
        assert!(matches!(
            transport(&c, 0.0, ell(), 1e-2),
            Err(BikeError::Immersion { .. })
        ));
    }

    #[test]
    fn full_circle_with_centered_back_wheel() {
        let out = transport(&Circle::unit(1.0), 0.0, ell(), 1e-3).unwrap();
        assert!((out - TAU).abs() < 1e-9);
    }

    #[test]
    fn long_segment_forgets_initial_angle() {
        for k in 0..12 {
            let theta0 = -PI + 0.5 + k as f64 * 0.45;
            let out = transport(&Line::x_axis(0.0, 20.0), theta0, ell(), 1e-3).unwrap();
            assert!(normalize_angle(out).abs() < 1e-3, "{theta0} -> {out}");
        }
    }

    #[test]
    fn identity_fit() {
        let samples: Vec<TransportSample> = (0..8)
            .map(|k| {
                let t = -3.0 + 0.8 * k as f64;
                TransportSample {
                    theta_in: t,
                    theta_out: t,
                }
            })
            .collect();
        let (m, r) = fit_mobius(&samples).unwrap();
        assert!(r < 1e-12);
        let scale = m.matrix[(0, 0)];
        assert!((m.matrix / scale - Matrix2::identity()).norm() < 1e-12);
    }

    #[test]
    fn degenerate_samples_are_rejected() {
        let same = vec![
            TransportSample {
                theta_in: 0.3,
                theta_out: 1.0
            };
            8
        ];
        assert!(matches!(fit_mobius(&same), Err(BikeError::RankDeficient(_))));
        assert!(matches!(fit_mobius(&same[..3]), Err(BikeError::DegenerateInput(_))));
    }

    #[test]
    fn disk_form_agrees() {
        let m = MobiusMap::new(Matrix2::new(1.3, -0.4, 0.7, 0.9)).unwrap();
        for k in 0..20 {
            let t = -3.0 + 0.3 * k as f64;
            let z = m.apply_disk(Complex64::from_polar(1.0, t));
            assert!((z.norm() - 1.0).abs() < 1e-12);
            assert!(angle_distance(z.arg(), m.apply(t)) < 1e-12);
        }
    }

    #[test]
    fn cross_ratio_is_mobius_invariant() {
        let m = MobiusMap::new(Matrix2::new(2.0, 0.5, -1.0, 1.2)).unwrap();
        let t = [-2.5, -0.3, 0.9, 2.2];
        let before = cross_ratio(t[0], t[1], t[2], t[3]);
        let after = cross_ratio(m.apply(t[0]), m.apply(t[1]), m.apply(t[2]), m.apply(t[3]));
        assert!((before - after).abs() < 1e-12);
        assert!((cross_ratio(t[0] + TAU, t[1], t[2], t[3]) - before).abs() < 1e-12);
    }

    #[test]
    fn circle_transport_is_mobius() {
        let c = Circle {
            radius: 1.7,
            ..Circle::unit(0.6)
        };
        let samples = transport_fiber(&c, 12, ell(), 1e-3).unwrap();
        let (_, r) = fit_mobius(&samples).unwrap();
        assert!(r < 1e-6, "{r}");
    }

    #[test]
    fn pressurized_fit_of_circle_is_min_norm() {
        let r = 2.0;
        let pts: Vec<Vec2> = (0..400)
            .map(|i| {
                let s = i as f64 * 0.01 / r;
                [r * s.cos(), r * s.sin()]
            })
            .collect();
        let fit = pressurized_fit(&pts, 0.01).unwrap();
        assert!(fit.degenerate && fit.residual < 1e-7, "{fit:?}");
        let k: f64 = 0.5;
        let expected_a = -0.5 * k.powi(3) * k / (k * k + 1.0);
        let expected_c = 0.5 * k.powi(3) / (k * k + 1.0);
        assert!((fit.coef_a - expected_a).abs() < 1e-8, "{fit:?}");
        assert!((fit.coef_c - expected_c).abs() < 1e-8, "{fit:?}");
        assert!(pressurized_fit(&pts[..8], 0.01).is_err());
    }
}
