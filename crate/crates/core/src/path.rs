//! Sampled horizontal curves in the configuration space.

use crate::diff;
use crate::error::{BikeError, Result};
use crate::geometry::{dist, flip, act, BikeLength, ConfigPoint, RigidMotion, Vec2};

/// One sample of a bike path. `theta` is continuous along the path, not
/// wrapped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathSample {
    pub t: f64,
    pub front: Vec2,
    pub theta: f64,
    pub kappa: f64,
}

impl PathSample {
    pub fn back(&self, ell: BikeLength) -> Vec2 {
        let l = ell.get();
        [
            self.front[0] - l * self.theta.cos(),
            self.front[1] - l * self.theta.sin(),
        ]
    }

    pub fn config(&self) -> ConfigPoint {
        ConfigPoint::new(self.front[0], self.front[1], self.theta)
    }
}

/// Default bound on the horizontality residual for a path whose largest
/// parameter step is `step`. The midpoint residual is second order in the
/// step.
pub fn horizontality_tolerance(step: f64) -> f64 {
    1e-9 + 50.0 * step * step
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampledBikePath {
    samples: Vec<PathSample>,
    ell: BikeLength,
}

impl SampledBikePath {
    pub fn new(samples: Vec<PathSample>, ell: BikeLength) -> Result<Self> {
        if samples.is_empty() {
            return Err(BikeError::DegenerateInput("path has no samples".into()));
        }
        for (i, s) in samples.iter().enumerate() {
            let finite = s.t.is_finite()
                && s.front.iter().all(|c| c.is_finite())
                && s.theta.is_finite()
                && !s.kappa.is_nan();
            if !finite {
                return Err(BikeError::DegenerateInput(format!(
                    "non-finite sample at index {i}"
                )));
            }
        }
        if let Some(i) = samples.windows(2).position(|w| w[1].t <= w[0].t) {
            return Err(BikeError::DegenerateInput(format!(
                "parameter not strictly increasing at index {}",
                i + 1
            )));
        }
        Ok(SampledBikePath { samples, ell })
    }

    /// Builds a path from front positions and frame angles, filling the
    /// curvature from the front track by finite differences.
    pub fn from_track(
        times: Vec<f64>,
        fronts: Vec<Vec2>,
        thetas: Vec<f64>,
        ell: BikeLength,
    ) -> Result<Self> {
        if times.len() != fronts.len() || times.len() != thetas.len() {
            return Err(BikeError::DegenerateInput("mismatched sample columns".into()));
        }
        let kappa = diff::curvature_from_points(&fronts);
        let samples = (0..times.len())
            .map(|i| PathSample {
                t: times[i],
                front: fronts[i],
                theta: thetas[i],
                kappa: kappa[i],
            })
            .collect();
        Self::new(samples, ell)
    }

    pub fn samples(&self) -> &[PathSample] {
        &self.samples
    }

    pub fn ell(&self) -> BikeLength {
        self.ell
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn first(&self) -> &PathSample {
        &self.samples[0]
    }

    pub fn last(&self) -> &PathSample {
        &self.samples[self.samples.len() - 1]
    }

    pub fn times(&self) -> Vec<f64> {
        self.samples.iter().map(|s| s.t).collect()
    }

    pub fn fronts(&self) -> Vec<Vec2> {
        self.samples.iter().map(|s| s.front).collect()
    }

    pub fn backs(&self) -> Vec<Vec2> {
        self.samples.iter().map(|s| s.back(self.ell)).collect()
    }

    pub fn kappas(&self) -> Vec<f64> {
        self.samples.iter().map(|s| s.kappa).collect()
    }

    pub fn thetas(&self) -> Vec<f64> {
        self.samples.iter().map(|s| s.theta).collect()
    }

    /// Parameter extent `t_end - t_start`.
    pub fn duration(&self) -> f64 {
        self.last().t - self.first().t
    }

    pub fn max_step(&self) -> f64 {
        self.samples
            .windows(2)
            .map(|w| w[1].t - w[0].t)
            .fold(0.0, f64::max)
    }

    /// Uniform step, if the samples are equally spaced to rounding.
    pub fn uniform_step(&self) -> Option<f64> {
        if self.samples.len() < 2 {
            return None;
        }
        let h = self.duration() / (self.samples.len() - 1) as f64;
        let uniform = self
            .samples
            .windows(2)
            .all(|w| ((w[1].t - w[0].t) - h).abs() <= 1e-9 * h.max(1.0));
        uniform.then_some(h)
    }

    /// Per-segment horizontality residuals
    /// `(ell dtheta - cos theta dy + sin theta dx) / dt` at segment midpoints.
    pub fn horizontality_residuals(&self) -> Vec<f64> {
        let l = self.ell.get();
        self.samples
            .windows(2)
            .map(|w| {
                let dt = w[1].t - w[0].t;
                let mid = 0.5 * (w[0].theta + w[1].theta);
                let (s, c) = mid.sin_cos();
                let dx = w[1].front[0] - w[0].front[0];
                let dy = w[1].front[1] - w[0].front[1];
                (l * (w[1].theta - w[0].theta) - c * dy + s * dx) / dt
            })
            .collect()
    }

    pub fn horizontality_residual(&self) -> f64 {
        self.horizontality_residuals()
            .into_iter()
            .fold(0.0, |m, r| m.max(r.abs()))
    }

    pub fn check_horizontal(&self, tolerance: f64) -> Result<()> {
        let worst = self
            .horizontality_residuals()
            .into_iter()
            .enumerate()
            .fold((0, 0.0f64), |acc, (i, r)| if r.abs() > acc.1 { (i, r.abs()) } else { acc });
        if worst.1 > tolerance {
            Err(BikeError::HorizontalityViolation {
                index: worst.0,
                residual: worst.1,
                tolerance,
            })
        } else {
            Ok(())
        }
    }

    /// Largest deviation of the chord speed `|df| / dt` from 1.
    pub fn speed_defect(&self) -> f64 {
        self.samples
            .windows(2)
            .map(|w| (dist(w[1].front, w[0].front) / (w[1].t - w[0].t) - 1.0).abs())
            .fold(0.0, f64::max)
    }

    /// Applies a plane isometry to the whole path.
    pub fn transformed(&self, g: &RigidMotion) -> SampledBikePath {
        let o = g.orientation.sign();
        let samples = self
            .samples
            .iter()
            .map(|s| PathSample {
                t: s.t,
                front: g.apply_point(s.front),
                theta: g.apply_angle(s.theta),
                kappa: o * s.kappa,
            })
            .collect();
        SampledBikePath {
            samples,
            ell: self.ell,
        }
    }

    /// Dilation by `lambda`: `c(t) -> lambda c(t / lambda)`, frame length
    /// scaled with it.
    pub fn dilated(&self, lambda: f64) -> Result<SampledBikePath> {
        let ell = BikeLength::new(self.ell.get() * lambda)?;
        let samples = self
            .samples
            .iter()
            .map(|s| PathSample {
                t: lambda * s.t,
                front: [lambda * s.front[0], lambda * s.front[1]],
                theta: s.theta,
                kappa: s.kappa / lambda,
            })
            .collect();
        Ok(SampledBikePath { samples, ell })
    }

    /// Keeps the samples with `t` in `[t0, t1]`.
    pub fn window(&self, t0: f64, t1: f64) -> Result<SampledBikePath> {
        let samples: Vec<_> = self
            .samples
            .iter()
            .filter(|s| s.t >= t0 && s.t <= t1)
            .copied()
            .collect();
        SampledBikePath::new(samples, self.ell)
    }

    /// Joins two paths; `next` is shifted in parameter so it starts where
    /// `self` ends, and its first sample is dropped.
    pub fn concat(&self, next: &SampledBikePath) -> Result<SampledBikePath> {
        let shift = self.last().t - next.first().t;
        let mut samples = self.samples.clone();
        samples.extend(next.samples.iter().skip(1).map(|s| PathSample {
            t: s.t + shift,
            ..*s
        }));
        SampledBikePath::new(samples, self.ell)
    }

    /// Linear interpolation of front position and frame angle at `t`.
    pub fn interpolate(&self, t: f64) -> Option<(Vec2, f64)> {
        let idx = self.samples.partition_point(|s| s.t <= t);
        if idx == 0 || (idx == self.samples.len() && t > self.last().t) {
            return None;
        }
        if idx == self.samples.len() {
            let s = self.last();
            return Some((s.front, s.theta));
        }
        let (a, b) = (&self.samples[idx - 1], &self.samples[idx]);
        let w = (t - a.t) / (b.t - a.t);
        let lerp = |p: f64, q: f64| p + w * (q - p);
        Some((
            [lerp(a.front[0], b.front[0]), lerp(a.front[1], b.front[1])],
            lerp(a.theta, b.theta),
        ))
    }
}

/// Euclidean length of the front track, as a sum of chords.
pub fn path_length(path: &SampledBikePath) -> Result<f64> {
    if path.len() < 2 {
        return Err(BikeError::DegenerateInput(
            "path length needs at least two samples".into(),
        ));
    }
    Ok(path
        .samples
        .windows(2)
        .map(|w| dist(w[0].front, w[1].front))
        .sum())
}

/// Flips every sample about its back wheel. The result shares its back
/// track with the input and is again horizontal.
pub fn flip_path(path: &SampledBikePath) -> Result<SampledBikePath> {
    let tol = horizontality_tolerance(path.max_step());
    let input_residual = path.horizontality_residual();
    if input_residual > tol {
        path.check_horizontal(tol)?;
    }
    let ell = path.ell;
    let l2 = 2.0 * ell.get();
    let fronts: Vec<Vec2> = path
        .samples
        .iter()
        .map(|s| [s.front[0] - l2 * s.theta.cos(), s.front[1] - l2 * s.theta.sin()])
        .collect();
    let kappa = diff::curvature_from_points(&fronts);
    let samples = path
        .samples
        .iter()
        .zip(fronts)
        .zip(kappa)
        .map(|((s, front), kappa)| PathSample {
            t: s.t,
            front,
            theta: s.theta + std::f64::consts::PI,
            kappa,
        })
        .collect();
    let flipped = SampledBikePath { samples, ell };
    flipped.check_horizontal(2.0 * tol.max(input_residual))?;
    Ok(flipped)
}

/// Configuration-level flip of a single sample, with the angle wrapped.
pub fn flip_sample(sample: &PathSample, ell: BikeLength) -> ConfigPoint {
    flip(&sample.config(), ell)
}

/// Moves every sample of a path by a lifted plane isometry, returning the
/// configurations with wrapped angles.
pub fn act_path(g: &RigidMotion, path: &SampledBikePath) -> Vec<ConfigPoint> {
    path.samples.iter().map(|s| act(g, &s.config())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{PI, TAU};

    fn circle_path(n: usize) -> SampledBikePath {
        // Back wheel pinned at the origin, front wheel on the unit circle.
        let samples = (0..=n)
            .map(|i| {
                let t = TAU * i as f64 / n as f64;
                PathSample {
                    t,
                    front: [t.cos(), t.sin()],
                    theta: t,
                    kappa: 1.0,
                }
            })
            .collect();
        SampledBikePath::new(samples, BikeLength::default()).unwrap()
    }

    fn line_path(len: f64, n: usize) -> SampledBikePath {
        let samples = (0..=n)
            .map(|i| {
                let t = len * i as f64 / n as f64;
                PathSample {
                    t,
                    front: [t, 0.0],
                    theta: 0.0,
                    kappa: 0.0,
                }
            })
            .collect();
        SampledBikePath::new(samples, BikeLength::default()).unwrap()
    }

    #[test]
    fn constructor_rejects_bad_parameters() {
        let s = PathSample {
            t: 0.0,
            front: [0.0, 0.0],
            theta: 0.0,
            kappa: 0.0,
        };
        assert!(SampledBikePath::new(vec![], BikeLength::default()).is_err());
        assert!(SampledBikePath::new(vec![s, s], BikeLength::default()).is_err());
        let nan = PathSample { theta: f64::NAN, ..s };
        assert!(SampledBikePath::new(vec![nan], BikeLength::default()).is_err());
    }

    #[test]
    fn line_length() {
        let p = line_path(5.0, 5000);
        assert!((path_length(&p).unwrap() - 5.0).abs() < 1e-9);
        assert!(p.horizontality_residual() < 1e-15);
    }

    #[test]
    fn circle_length() {
        let p = circle_path(6284);
        assert!((path_length(&p).unwrap() - TAU).abs() < 1e-6);
        assert!(p.check_horizontal(horizontality_tolerance(p.max_step())).is_ok());
    }

    #[test]
    fn path_length_needs_two_samples() {
        let p = line_path(1.0, 1).window(0.0, 0.5).unwrap();
        assert!(matches!(path_length(&p), Err(BikeError::DegenerateInput(_))));
    }

    #[test]
    fn flip_of_collinear_line_lift_is_same_line() {
        let p = line_path(5.0, 500);
        let f = flip_path(&p).unwrap();
        for (a, b) in p.samples().iter().zip(f.samples()) {
            assert!((b.front[0] - (a.front[0] - 2.0)).abs() < 1e-15);
            assert_eq!(b.front[1], 0.0);
            assert!((b.theta - a.theta - PI).abs() < 1e-15);
        }
        assert!((path_length(&f).unwrap() - path_length(&p).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn flip_shares_back_track_and_is_involutive() {
        let p = circle_path(2000);
        let f = flip_path(&p).unwrap();
        for (a, b) in p.backs().iter().zip(f.backs()) {
            assert!(dist(*a, b) < 1e-14);
        }
        let ff = flip_path(&f).unwrap();
        for (a, b) in p.samples().iter().zip(ff.samples()) {
            assert!(dist(a.front, b.front) < 1e-14);
        }
    }

    #[test]
    fn flip_rejects_skidding_path() {
        let mut samples = line_path(1.0, 10).samples().to_vec();
        samples[4].theta = 0.3;
        let p = SampledBikePath::new(samples, BikeLength::default()).unwrap();
        assert!(matches!(
            flip_path(&p),
            Err(BikeError::HorizontalityViolation { .. })
        ));
    }

    #[test]
    fn transform_preserves_length_and_horizontality() {
        let p = circle_path(3000);
        let g = RigidMotion::reflection_about_line([1.0, 2.0], 0.4)
            .compose(&RigidMotion::rotation(1.0));
        let q = p.transformed(&g);
        assert!((path_length(&q).unwrap() - path_length(&p).unwrap()).abs() < 1e-12);
        assert!(q.horizontality_residual() < 2.0 * p.horizontality_residual() + 1e-12);
        assert_eq!(q.first().kappa, -1.0);
    }

    #[test]
    fn dilation_scales_everything() {
        let p = circle_path(1000).dilated(2.0).unwrap();
        assert_eq!(p.ell().get(), 2.0);
        assert!((path_length(&p).unwrap() - 2.0 * TAU).abs() < 1e-4);
        assert_eq!(p.first().kappa, 0.5);
        assert!(p.horizontality_residual() < 1e-4);
    }

    #[test]
    fn interpolation_and_window() {
        let p = line_path(2.0, 20);
        let (f, th) = p.interpolate(0.55).unwrap();
        assert!((f[0] - 0.55).abs() < 1e-15 && th == 0.0);
        assert!(p.interpolate(-0.1).is_none());
        assert!(p.interpolate(2.1).is_none());
        assert!(p.interpolate(2.0).is_some());
        assert_eq!(p.window(0.5, 1.0).unwrap().len(), 6);
    }
}
