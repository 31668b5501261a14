//! Finite-difference helpers shared by the integrator and the diagnostics.

use std::f64::consts::{PI, TAU};

use crate::geometry::Vec2;

/// Removes `2 pi` jumps so consecutive angles differ by at most `pi`.
pub fn unwrap_angles(angles: &mut [f64]) {
    for i in 1..angles.len() {
        let mut d = angles[i] - angles[i - 1];
        while d > PI {
            angles[i] -= TAU;
            d -= TAU;
        }
        while d < -PI {
            angles[i] += TAU;
            d += TAU;
        }
    }
}

/// Derivative at `t` of the quadratic interpolating three points.
pub fn lagrange3_derivative(ts: [f64; 3], ys: [f64; 3], t: f64) -> f64 {
    let [t0, t1, t2] = ts;
    let [y0, y1, y2] = ys;
    y0 * ((t - t1) + (t - t2)) / ((t0 - t1) * (t0 - t2))
        + y1 * ((t - t0) + (t - t2)) / ((t1 - t0) * (t1 - t2))
        + y2 * ((t - t0) + (t - t1)) / ((t2 - t0) * (t2 - t1))
}

/// Second-order derivative estimate at every sample, valid for non-uniform
/// parameters. Needs at least three samples.
pub fn derivative_3pt(ts: &[f64], ys: &[f64]) -> Vec<f64> {
    let n = ts.len();
    assert!(n >= 3 && ys.len() == n, "derivative_3pt needs three samples");
    (0..n)
        .map(|i| {
            let c = i.clamp(1, n - 2);
            lagrange3_derivative(
                [ts[c - 1], ts[c], ts[c + 1]],
                [ys[c - 1], ys[c], ys[c + 1]],
                ts[i],
            )
        })
        .collect()
}

/// Signed curvature of a polyline from the turning of consecutive chords.
/// Second order for smooth curves sampled at a uniform arc-length step;
/// the two end values are linearly extrapolated.
pub fn curvature_from_points(points: &[Vec2]) -> Vec<f64> {
    let n = points.len();
    if n < 3 {
        return vec![0.0; n];
    }
    let chords: Vec<(f64, f64)> = points
        .windows(2)
        .map(|w| {
            let dx = w[1][0] - w[0][0];
            let dy = w[1][1] - w[0][1];
            (dy.atan2(dx), dx.hypot(dy))
        })
        .collect();
    let mut angles: Vec<f64> = chords.iter().map(|c| c.0).collect();
    unwrap_angles(&mut angles);
    let mut kappa = vec![0.0; n];
    for i in 1..n - 1 {
        let ds = 0.5 * (chords[i - 1].1 + chords[i].1);
        kappa[i] = (angles[i] - angles[i - 1]) / ds;
    }
    if n >= 4 {
        kappa[0] = 2.0 * kappa[1] - kappa[2];
        kappa[n - 1] = 2.0 * kappa[n - 2] - kappa[n - 3];
    } else {
        kappa[0] = kappa[1];
        kappa[n - 1] = kappa[1];
    }
    kappa
}

/// Fourth-order central first derivative with sample stride `k`.
#[inline]
pub fn d1_5(y: &[f64], i: usize, k: usize, h: f64) -> f64 {
    (y[i - 2 * k] - 8.0 * y[i - k] + 8.0 * y[i + k] - y[i + 2 * k]) / (12.0 * h)
}

/// Fourth-order central second derivative with sample stride `k`.
#[inline]
pub fn d2_5(y: &[f64], i: usize, k: usize, h: f64) -> f64 {
    (-y[i - 2 * k] + 16.0 * y[i - k] - 30.0 * y[i] + 16.0 * y[i + k] - y[i + 2 * k])
        / (12.0 * h * h)
}

/// Sixth-order central first derivative with sample stride `k`.
#[inline]
pub fn d1_7(y: &[f64], i: usize, k: usize, h: f64) -> f64 {
    (-y[i - 3 * k] + 9.0 * y[i - 2 * k] - 45.0 * y[i - k] + 45.0 * y[i + k]
        - 9.0 * y[i + 2 * k]
        + y[i + 3 * k])
        / (60.0 * h)
}

/// Sixth-order central second derivative with sample stride `k`.
#[inline]
pub fn d2_7(y: &[f64], i: usize, k: usize, h: f64) -> f64 {
    (2.0 * y[i - 3 * k] - 27.0 * y[i - 2 * k] + 270.0 * y[i - k] - 490.0 * y[i]
        + 270.0 * y[i + k]
        - 27.0 * y[i + 2 * k]
        + 2.0 * y[i + 3 * k])
        / (180.0 * h * h)
}
