//! Shortcuts that beat periodic geodesics.
//!
//! Start a bike at a curvature maximum of a periodic geodesic front track,
//! front wheel at the origin and frame pointing up. After `N` periods the
//! geodesic has length `N T` and ends at the same placement shifted by
//! `N L` along the x axis. The competitor swings the front wheel a quarter
//! turn clockwise about the resting back wheel, rides east for `N L`, then
//! swings a quarter turn back, for a total length `pi ell + N L`. Once `N`
//! exceeds `pi ell / (T - L)` the competitor is shorter, so the geodesic is
//! not globally minimizing.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::analysis::{ElasticaClass, ElasticaKind};
use crate::error::{BikeError, Result};
use crate::geometry::{angle_distance, BikeLength, ConfigPoint};
use crate::integrate::grid;
use crate::path::{horizontality_tolerance, PathSample, SampledBikePath};

/// Default endpoint tolerance for [`check_endpoint`].
pub const ENDPOINT_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShortcutReport {
    pub period: f64,
    pub advance: f64,
    pub ell: f64,
    pub n_star: u64,
    pub geodesic_length: f64,
    pub shortcut_length: f64,
}

impl ShortcutReport {
    pub fn new(period: f64, advance: f64, ell: BikeLength) -> Result<Self> {
        let n_star = shortcut_threshold(period, advance, ell)?;
        let n = n_star as f64;
        Ok(ShortcutReport {
            period,
            advance,
            ell: ell.get(),
            n_star,
            geodesic_length: n * period,
            shortcut_length: PI * ell.get() + n * advance,
        })
    }

    pub fn margin(&self) -> f64 {
        self.geodesic_length - self.shortcut_length
    }
}

/// Smallest `N` with `pi ell + N L < N T`.
pub fn shortcut_threshold(period: f64, advance: f64, ell: BikeLength) -> Result<u64> {
    if !(advance > 0.0 && advance < period) || !period.is_finite() {
        return Err(BikeError::InvalidPeriod { period, advance });
    }
    Ok((PI * ell.get() / (period - advance)).floor() as u64 + 1)
}

/// Samples `[0, span]` at `step` and maps each parameter to a sample.
fn piece(span: f64, step: f64, f: impl Fn(f64) -> PathSample) -> Result<Vec<PathSample>> {
    Ok(grid(0.0, span, step)?.into_iter().map(f).collect())
}

/// Builds the competitor path for `n` periods of advance `advance`, starting
/// from the canonical vertex placement `start`.
pub fn build_shortcut(
    start: &ConfigPoint,
    n: u64,
    advance: f64,
    ell: BikeLength,
    step: f64,
) -> Result<SampledBikePath> {
    if start.x.abs() > 1e-12
        || start.y.abs() > 1e-12
        || angle_distance(start.theta(), FRAC_PI_2) > 1e-12
    {
        return Err(BikeError::NotCanonical(format!(
            "shortcut must start at (0, 0, pi/2), got ({}, {}, {})",
            start.x,
            start.y,
            start.theta()
        )));
    }
    if !(advance > 0.0) {
        return Err(BikeError::InvalidPeriod {
            period: f64::NAN,
            advance,
        });
    }
    let l = ell.get();
    let quarter = FRAC_PI_2 * l;
    let straight = n as f64 * advance;
    let pivot0 = [0.0, -l];
    let pivot1 = [straight, -l];

    let mut samples = piece(quarter, step, |s| {
        let theta = FRAC_PI_2 - s / l;
        PathSample {
            t: s,
            front: [pivot0[0] + l * theta.cos(), pivot0[1] + l * theta.sin()],
            theta,
            kappa: -1.0 / l,
        }
    })?;
    if straight > 0.0 {
        samples.extend(
            piece(straight, step, |s| PathSample {
                t: quarter + s,
                front: [l + s, -l],
                theta: 0.0,
                kappa: 0.0,
            })?
            .into_iter()
            .skip(1),
        );
    }
    let offset = quarter + straight;
    samples.extend(
        piece(quarter, step, |s| {
            let theta = s / l;
            PathSample {
                t: offset + s,
                front: [pivot1[0] + l * theta.cos(), pivot1[1] + l * theta.sin()],
                theta,
                kappa: 1.0 / l,
            }
        })?
        .into_iter()
        .skip(1),
    );
    let path = SampledBikePath::new(samples, ell)?;
    path.check_horizontal(horizontality_tolerance(path.max_step()))?;
    Ok(path)
}

/// Compares the end of `shortcut` with the geodesic end placement.
pub fn check_endpoint(
    shortcut: &SampledBikePath,
    geodesic_end: &ConfigPoint,
    tolerance: f64,
) -> Result<f64> {
    let error = shortcut.last().config().distance_to(geodesic_end);
    if error > tolerance {
        Err(BikeError::ConstructionMismatch { error })
    } else {
        Ok(error)
    }
}

pub fn is_metric_line_candidate(class: &ElasticaClass) -> bool {
    matches!(class.kind, ElasticaKind::Line | ElasticaKind::Soliton)
}
