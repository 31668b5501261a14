//! Exact tractrix and Euler soliton.
//!
//! The horizontal lift of the line `c(t) = (t, 0)` whose back wheel is
//! off the line has frame angle `theta(t) = -2 atan(exp(-(t - t0) / ell))`,
//! its back wheel traces a tractrix of width `ell`, and flipping it produces
//! a front track that is an Euler soliton of width `2 ell`. Both curves are
//! parametrized by the line parameter `t`.

use crate::error::Result;
use crate::geometry::{BikeLength, Vec2};
use crate::integrate::grid;
use crate::path::{PathSample, SampledBikePath};
use crate::track::FrontTrack;

/// Hyperbolic secant, exactly zero once `cosh` would overflow.
pub fn sech(x: f64) -> f64 {
    if x.abs() > 700.0 {
        0.0
    } else {
        1.0 / x.cosh()
    }
}

pub fn tractrix_point(t: f64, t0: f64, ell: BikeLength) -> Vec2 {
    let l = ell.get();
    let u = (t - t0) / l;
    [t - l * u.tanh(), l * sech(u)]
}

pub fn soliton_point(t: f64, t0: f64, ell: BikeLength) -> Vec2 {
    let l = ell.get();
    let u = (t - t0) / l;
    [t - 2.0 * l * u.tanh(), 2.0 * l * sech(u)]
}

/// Derivative of [`soliton_point`] with respect to the line parameter.
pub fn soliton_velocity(t: f64, t0: f64, ell: BikeLength) -> Vec2 {
    let u = (t - t0) / ell.get();
    let s = sech(u);
    [1.0 - 2.0 * s * s, -2.0 * s * u.tanh()]
}

/// Frame angle of the horizontal lift of `(t, 0)` whose back wheel passes
/// over `(t0, ell)`.
pub fn line_lift_theta(t: f64, t0: f64, ell: BikeLength) -> f64 {
    let u = (t - t0) / ell.get();
    -2.0 * (-u).exp().atan()
}

/// Signed curvature of the soliton at arc-length distance `s` from its apex.
pub fn soliton_curvature(s: f64, ell: BikeLength) -> f64 {
    let l = ell.get();
    2.0 / l * sech(s / l)
}

/// Soliton arc length between line parameters `t_from` and `t_to`, by
/// composite Simpson quadrature of the speed with `intervals` panels
/// (rounded up to even).
pub fn soliton_arc_length(t_from: f64, t_to: f64, t0: f64, ell: BikeLength, intervals: usize) -> f64 {
    let n = (intervals.max(2) + 1) & !1;
    let h = (t_to - t_from) / n as f64;
    let speed = |t: f64| {
        let v = soliton_velocity(t, t0, ell);
        v[0].hypot(v[1])
    };
    let mut acc = speed(t_from) + speed(t_to);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * speed(t_from + i as f64 * h);
    }
    acc * h / 3.0
}

/// Soliton arc length at each line parameter in `ts`, measured from `ts[0]`.
pub fn soliton_arc_lengths(ts: &[f64], t0: f64, ell: BikeLength) -> Vec<f64> {
    let mut out = Vec::with_capacity(ts.len());
    let mut s = 0.0;
    for (i, &t) in ts.iter().enumerate() {
        if i > 0 {
            s += soliton_arc_length(ts[i - 1], t, t0, ell, 8);
        }
        out.push(s);
    }
    out
}

/// The line `(t, 0)` ridden on `[start, end]` with the closed-form lift.
pub fn line_lift_path(
    start: f64,
    end: f64,
    t0: f64,
    ell: BikeLength,
    step: f64,
) -> Result<SampledBikePath> {
    let samples = grid(start, end, step)?
        .into_iter()
        .map(|t| PathSample {
            t,
            front: [t, 0.0],
            theta: line_lift_theta(t, t0, ell),
            kappa: 0.0,
        })
        .collect();
    SampledBikePath::new(samples, ell)
}

/// The flipped closed-form line lift: soliton front track, frame turned by
/// `pi`, exact curvature.
pub fn soliton_path(
    start: f64,
    end: f64,
    t0: f64,
    ell: BikeLength,
    step: f64,
) -> Result<SampledBikePath> {
    let samples = grid(start, end, step)?
        .into_iter()
        .map(|t| PathSample {
            t,
            front: soliton_point(t, t0, ell),
            theta: line_lift_theta(t, t0, ell) + std::f64::consts::PI,
            kappa: soliton_curvature(t - t0, ell),
        })
        .collect();
    SampledBikePath::new(samples, ell)
}

/// The soliton as a prescribed front track.
#[derive(Debug, Clone, Copy)]
pub struct SolitonTrack {
    pub t0: f64,
    pub ell: BikeLength,
    pub start: f64,
    pub end: f64,
}

impl FrontTrack for SolitonTrack {
    fn position(&self, t: f64) -> Vec2 {
        soliton_point(t, self.t0, self.ell)
    }
    fn velocity(&self, t: f64) -> Vec2 {
        soliton_velocity(t, self.t0, self.ell)
    }
    fn domain(&self) -> (f64, f64) {
        (self.start, self.end)
    }
    fn is_arc_length(&self) -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn ell(l: f64) -> BikeLength {
        BikeLength::new(l).unwrap()
    }

    #[test]
    fn apex_values() {
        assert_eq!(tractrix_point(3.0, 3.0, ell(1.0)), [3.0, 1.0]);
        assert_eq!(soliton_point(3.0, 3.0, ell(1.0)), [3.0, 2.0]);
        assert_eq!(soliton_point(0.0, 0.0, ell(1.5)), [0.0, 3.0]);
        assert!((line_lift_theta(2.0, 2.0, ell(0.7)) + FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn asymptotics() {
        let far = tractrix_point(1e4, 0.0, ell(2.0));
        assert_eq!(far[1], 0.0);
        assert!((far[0] - 1e4 + 2.0).abs() < 1e-9);
        assert!((line_lift_theta(-50.0, 0.0, ell(1.0)) + PI).abs() < 1e-15);
        let late = line_lift_theta(50.0, 0.0, ell(1.0));
        assert!(late < 0.0 && late > -1e-15);
        assert_eq!(sech(800.0), 0.0);
        assert_eq!(sech(-800.0), 0.0);
    }

    #[test]
    fn soliton_symmetry() {
        let (t0, l) = (1.3, ell(0.8));
        for k in 0..40 {
            let s = 0.1 * k as f64;
            let p = soliton_point(t0 + s, t0, l);
            let q = soliton_point(t0 - s, t0, l);
            assert!((p[0] + q[0] - 2.0 * t0).abs() < 1e-14);
            assert!((p[1] - q[1]).abs() < 1e-14);
        }
    }

    #[test]
    fn flip_of_line_lift_is_soliton() {
        let l = ell(1.25);
        for k in -100..100 {
            let t = 0.07 * k as f64;
            let b = tractrix_point(t, 0.4, l);
            let s = soliton_point(t, 0.4, l);
            assert!((2.0 * b[0] - t - s[0]).abs() < 1e-15);
            assert!((2.0 * b[1] - s[1]).abs() < 1e-15);
        }
    }

    #[test]
    fn lift_angle_solves_no_skid_equation() {
        let l = ell(1.7);
        let h = 1e-4;
        for k in -60..60 {
            let t = 0.1 * k as f64;
            let d = (line_lift_theta(t + h, 0.0, l) - line_lift_theta(t - h, 0.0, l)) / (2.0 * h);
            assert!((l.get() * d + line_lift_theta(t, 0.0, l).sin()).abs() < 1e-9);
        }
    }

    #[test]
    fn closed_form_lift_back_wheel_is_tractrix() {
        let l = ell(1.4);
        let p = line_lift_path(-10.0, 10.0, 0.5, l, 0.01).unwrap();
        for s in p.samples() {
            let b = s.back(l);
            let tr = tractrix_point(s.t, 0.5, l);
            assert!((b[0] - tr[0]).abs() < 1e-12 && (b[1] - tr[1]).abs() < 1e-12);
        }
    }

    #[test]
    fn soliton_is_unit_speed_in_line_parameter() {
        let l = ell(0.9);
        let ts: Vec<f64> = (0..200).map(|i| -5.0 + 0.05 * i as f64).collect();
        let s = soliton_arc_lengths(&ts, 0.0, l);
        for (t, s) in ts.iter().zip(s) {
            assert!((s - (t - ts[0])).abs() < 1e-12);
        }
    }

    #[test]
    fn widths() {
        let l = ell(1.0);
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut slo, mut shi) = (f64::INFINITY, f64::NEG_INFINITY);
        for k in 0..=80_000 {
            let t = -40.0 + 1e-3 * k as f64;
            let y = tractrix_point(t, 0.0, l)[1];
            let ys = soliton_point(t, 0.0, l)[1];
            lo = lo.min(y);
            hi = hi.max(y);
            slo = slo.min(ys);
            shi = shi.max(ys);
        }
        assert!(hi - lo <= 1.0 && hi - lo >= 1.0 - 1e-6);
        assert!(shi - slo <= 2.0 && shi - slo >= 2.0 - 1e-6);
    }
}
