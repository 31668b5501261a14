//! Ready-made plots of the main constructions.

use std::f64::consts::FRAC_PI_2;

use crate::analysis::{canonical_orient, period_and_advance};
use crate::closed_forms::line_lift_theta;
use crate::error::Result;
use crate::geometry::{BikeLength, ConfigPoint};
use crate::holonomy::correspondent;
use crate::integrate::{horizontal_lift, integrate_geodesic, ReducedState, DEFAULT_STEP};
use crate::io::{SvgPlot, BACK_COLOR, DIRECTRIX_COLOR, FRONT_COLOR};
use crate::metric_lines::{build_shortcut, shortcut_threshold};
use crate::path::{flip_path, SampledBikePath};
use crate::track::{Circle, Line};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Elastica,
    Geodesic,
    Kink,
    Shortcut,
    Pressurized,
}

impl Preset {
    pub const ALL: [Preset; 5] = [
        Preset::Elastica,
        Preset::Geodesic,
        Preset::Kink,
        Preset::Shortcut,
        Preset::Pressurized,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Elastica => "fig-elastica",
            Preset::Geodesic => "fig-geod",
            Preset::Kink => "fig-kink",
            Preset::Shortcut => "fig-shortcut",
            Preset::Pressurized => "fig-pressurized",
        }
    }

    pub fn from_name(name: &str) -> Option<Preset> {
        Preset::ALL.into_iter().find(|p| p.name() == name)
    }
}

fn arrow_times(path: &SampledBikePath, count: usize) -> Vec<f64> {
    let (t0, t1) = (path.first().t, path.last().t);
    (0..count)
        .map(|i| t0 + (t1 - t0) * i as f64 / (count - 1).max(1) as f64)
        .collect()
}

/// Renders `preset`. `a` selects the geodesic for the presets that draw one.
pub fn render(preset: Preset, a: f64) -> Result<SvgPlot> {
    match preset {
        Preset::Elastica => elastica_family(),
        Preset::Geodesic => geodesic(a),
        Preset::Kink => kink(),
        Preset::Shortcut => shortcut(a),
        Preset::Pressurized => pressurized(),
    }
}

fn elastica_family() -> Result<SvgPlot> {
    let mut plot = SvgPlot::new("front tracks of bicycle geodesics");
    let mut offset = 0.0;
    for &(a, t_end) in &[(0.5, 24.0), (1.0, 16.0), (2.0, 24.0)] {
        let raw = integrate_geodesic(ReducedState::at_vertex(a), t_end, DEFAULT_STEP)?.path;
        let (path, _) = canonical_orient(&raw)?;
        let fronts: Vec<_> = path.fronts().into_iter().map(|p| [p[0], p[1] - offset]).collect();
        let top = fronts.iter().map(|p| p[1]).fold(f64::NEG_INFINITY, f64::max);
        plot.polyline(fronts, FRONT_COLOR, 1.5);
        plot.label([-2.0, top + 0.4], format!("a = {a}"));
        offset += 4.5;
    }
    Ok(plot)
}

fn geodesic(a: f64) -> Result<SvgPlot> {
    let path = integrate_geodesic(ReducedState::at_vertex(a), 25.0, DEFAULT_STEP)?.path;
    let mut plot = SvgPlot::new(format!("geodesic with a = {a}"));
    plot.bike_path(&path, &arrow_times(&path, 26));
    if a > 0.0 {
        plot.directrix(-(1.0 + a) / a);
    }
    Ok(plot)
}

fn kink() -> Result<SvgPlot> {
    let ell = BikeLength::default();
    let start = -8.0;
    let lift = horizontal_lift(&Line::x_axis(start, 8.0), line_lift_theta(start, 0.0, ell), ell, DEFAULT_STEP)?;
    let flipped = flip_path(&lift)?;
    let mut plot = SvgPlot::new("tractrix and soliton");
    plot.polyline(lift.fronts(), FRONT_COLOR, 1.5);
    plot.polyline(lift.backs(), BACK_COLOR, 2.5);
    plot.bike_path(&flipped, &arrow_times(&flipped, 17));
    Ok(plot)
}

fn shortcut(a: f64) -> Result<SvgPlot> {
    let ell = BikeLength::default();
    let probe = integrate_geodesic(ReducedState::at_vertex(a), 40.0, DEFAULT_STEP)?.path;
    let (period, advance) = period_and_advance(&probe)?;
    let n = shortcut_threshold(period, advance, ell)?;
    let geo = integrate_geodesic(ReducedState::at_vertex(a), n as f64 * period, DEFAULT_STEP)?.path;
    let short = build_shortcut(&ConfigPoint::new(0.0, 0.0, FRAC_PI_2), n, advance, ell, DEFAULT_STEP)?;
    let mut plot = SvgPlot::new(format!("shortcut over {n} periods, a = {a}"));
    plot.polyline(geo.fronts(), FRONT_COLOR, 1.5);
    plot.polyline(geo.backs(), BACK_COLOR, 1.0);
    plot.polyline(short.fronts(), DIRECTRIX_COLOR, 2.0);
    plot.dashed(short.backs(), DIRECTRIX_COLOR, 1.0);
    Ok(plot)
}

fn pressurized() -> Result<SvgPlot> {
    let circle = Circle {
        end: 2.0 * std::f64::consts::TAU,
        ..Circle::unit(1.0)
    };
    let corr = correspondent(&circle, 0.6, BikeLength::default(), DEFAULT_STEP)?;
    let mut plot = SvgPlot::new("circle and its correspondent");
    plot.dashed(corr.lift.fronts(), FRONT_COLOR, 1.0);
    plot.polyline(corr.lift.backs(), BACK_COLOR, 1.0);
    plot.polyline(corr.flipped.fronts(), DIRECTRIX_COLOR, 1.8);
    Ok(plot)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_preset_renders() {
        for p in Preset::ALL {
            assert_eq!(Preset::from_name(p.name()), Some(p));
            let svg = render(p, 0.5).unwrap().render();
            assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
            assert!(svg.contains("<polyline"));
        }
        assert!(Preset::from_name("fig-none").is_none());
    }
}
