//! The `bikepath` command line.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::analysis::{
    classify, directrix_fit, find_vertices, period_and_advance, predicted_back_width,
    predicted_front_width,
};
use crate::closed_forms::line_lift_theta;
use crate::error::{BikeError, Result};
use crate::figures::{self, Preset};
use crate::geometry::{BikeLength, ConfigPoint};
use crate::holonomy::correspondent;
use crate::integrate::{horizontal_lift, integrate_geodesic, ReducedState, DEFAULT_STEP};
use crate::io::{write_csv, SvgPlot};
use crate::metric_lines::{build_shortcut, ShortcutReport};
use crate::path::{flip_path, SampledBikePath};
use crate::track::{Circle, FrontTrack, Line};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_DIVERGENCE: i32 = 3;

/// Environment variable naming a directory for default output files.
pub const OUT_DIR_VAR: &str = "BIKEPATH_OUT_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Integrate a unit-speed geodesic from a curvature shape.
    Geodesic,
    /// Lift a front track to a horizontal bike path.
    Lift,
    /// Integrate a geodesic and output its flip.
    Flip,
    /// Lift a front track and output the flipped path.
    Correspond,
    /// Report the elastica type of a geodesic.
    Classify,
    /// Build the shortcut competitor for a periodic geodesic.
    Shortcut,
    /// Run the self-check suites.
    Verify,
    /// Render a figure preset.
    Plot,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Geodesic => "geodesic",
            Command::Lift => "lift",
            Command::Flip => "flip",
            Command::Correspond => "correspond",
            Command::Classify => "classify",
            Command::Shortcut => "shortcut",
            Command::Verify => "verify",
            Command::Plot => "plot",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Curve {
    Line,
    Circle,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "bikepath", version, allow_negative_numbers = true, about = "Bicycle paths, geodesics and their flips")]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Constant momentum of the geodesic.
    #[arg(long, default_value_t = 0.5)]
    pub a: f64,
    /// Initial curvature; the curvature maximum `1 + a` when omitted.
    #[arg(long)]
    pub kappa0: Option<f64>,
    /// Initial frame angle for lifts.
    #[arg(long)]
    pub theta0: Option<f64>,
    /// Bike length.
    #[arg(long, default_value_t = 1.0)]
    pub ell: f64,
    /// Duration of the path.
    #[arg(long)]
    pub t_end: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_STEP)]
    pub step: f64,
    /// Start parameter of the lifted line.
    #[arg(long)]
    pub t0: Option<f64>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long, value_enum, default_value_t = Curve::Line)]
    pub curve: Curve,
    #[arg(long, default_value = "fig-geod")]
    pub preset: String,
    #[arg(long, default_value = "all")]
    pub suite: String,
}

enum Output {
    Path(SampledBikePath),
    Text(String),
    Svg(SvgPlot),
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code. Errors are reported on stderr as a single line.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&config) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("bikepath: {e}");
            match e {
                BikeError::Divergence { .. } => EXIT_DIVERGENCE,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn execute(config: &RunConfig) -> Result<i32> {
    let ell = BikeLength::new(config.ell)?;
    if !(config.step > 0.0 && config.step.is_finite()) {
        return Err(BikeError::DegenerateInput(format!("step must be positive, got {}", config.step)));
    }
    if let Some(t_end) = config.t_end {
        if !(t_end > 0.0 && t_end.is_finite()) {
            return Err(BikeError::DegenerateInput(format!("t-end must be positive, got {t_end}")));
        }
    }
    let mut code = EXIT_OK;
    let output = match config.command {
        Command::Geodesic => Output::Path(geodesic(config, ell)?),
        Command::Flip => Output::Path(flip_path(&geodesic(config, ell)?)?),
        Command::Lift => Output::Path(lift(config, ell)?),
        Command::Correspond => {
            let t_end = config.t_end.unwrap_or(8.0);
            let theta0 = config.theta0.unwrap_or(0.0);
            let corr = match config.curve {
                Curve::Line => correspondent(&line(config, t_end), theta0, ell, config.step)?,
                Curve::Circle => correspondent(&circle(t_end), theta0, ell, config.step)?,
            };
            Output::Path(corr.flipped)
        }
        Command::Classify => Output::Text(classify_report(config)),
        Command::Shortcut => {
            let (report, path) = shortcut(config, ell)?;
            eprintln!(
                "T = {:.9} L = {:.9} N* = {} geodesic {:.9} shortcut {:.9}",
                report.period,
                report.advance,
                report.n_star,
                report.geodesic_length,
                report.shortcut_length
            );
            Output::Path(path)
        }
        Command::Verify => {
            let results = verify::run_suites(&config.suite, &Default::default()).ok_or_else(|| {
                BikeError::DegenerateInput(format!(
                    "unknown suite {:?}; expected all or one of {}",
                    config.suite,
                    verify::suite_names().join(", ")
                ))
            })?;
            if results.iter().any(|r| !r.passed) {
                code = EXIT_VERIFY;
            }
            Output::Text(verify::summary_table(&results))
        }
        Command::Plot => {
            let preset = Preset::from_name(&config.preset).ok_or_else(|| {
                let names: Vec<_> = Preset::ALL.iter().map(|p| p.name()).collect();
                BikeError::DegenerateInput(format!(
                    "unknown preset {:?}; expected one of {}",
                    config.preset,
                    names.join(", ")
                ))
            })?;
            Output::Svg(figures::render(preset, config.a)?)
        }
    };
    emit(config, output)?;
    Ok(code)
}

fn geodesic(config: &RunConfig, ell: BikeLength) -> Result<SampledBikePath> {
    let l = ell.get();
    let t_end = config.t_end.unwrap_or(30.0);
    let kappa0 = config.kappa0.unwrap_or(1.0 + config.a);
    let start = ReducedState::from_shape(config.a, kappa0)?;
    let path = integrate_geodesic(start, t_end / l, config.step / l)?.path;
    if l == 1.0 {
        Ok(path)
    } else {
        path.dilated(l)
    }
}

fn line(config: &RunConfig, t_end: f64) -> Line {
    let start = config.t0.unwrap_or(-0.5 * t_end);
    Line::x_axis(start, start + t_end)
}

fn circle(t_end: f64) -> Circle {
    Circle {
        end: t_end,
        ..Circle::unit(1.0)
    }
}

fn lift(config: &RunConfig, ell: BikeLength) -> Result<SampledBikePath> {
    let t_end = config.t_end.unwrap_or(20.0);
    match config.curve {
        Curve::Line => {
            let track = line(config, t_end);
            let theta0 = config
                .theta0
                .unwrap_or_else(|| line_lift_theta(track.domain().0, 0.0, ell));
            horizontal_lift(&track, theta0, ell, config.step)
        }
        Curve::Circle => horizontal_lift(&circle(t_end), config.theta0.unwrap_or(0.0), ell, config.step),
    }
}

fn classify_report(config: &RunConfig) -> String {
    let kappa0 = config.kappa0.unwrap_or(1.0 + config.a);
    let class = classify(config.a, kappa0);
    let mut out = String::new();
    let _ = writeln!(out, "kind {}", class.kind);
    let _ = writeln!(out, "A {:?}", class.params.coef_a);
    let _ = writeln!(out, "B {:?}", class.params.coef_b);
    if let Some(mu) = class.params.mu {
        let _ = writeln!(out, "mu {mu:?}");
    }
    let _ = writeln!(out, "front_width {:?}", config.ell * predicted_front_width(config.a));
    let _ = writeln!(out, "back_width {:?}", config.ell * predicted_back_width(config.a));
    out
}

fn shortcut(config: &RunConfig, ell: BikeLength) -> Result<(ShortcutReport, SampledBikePath)> {
    let l = ell.get();
    let probe = integrate_geodesic(ReducedState::at_vertex(config.a), 40.0, DEFAULT_STEP)?.path;
    let (period, advance) = period_and_advance(&probe)?;
    let report = ShortcutReport::new(period * l, advance * l, ell)?;
    let start = ConfigPoint::new(0.0, 0.0, std::f64::consts::FRAC_PI_2);
    let path = build_shortcut(&start, report.n_star, report.advance, ell, config.step)?;
    Ok((report, path))
}

/// Vertex times, or evenly spaced times when the path has fewer than two
/// vertices.
fn arrow_times(path: &SampledBikePath) -> Vec<f64> {
    let vertices: Vec<f64> = find_vertices(path).vertices.iter().map(|v| v.t).collect();
    if vertices.len() >= 2 {
        return vertices;
    }
    let (t0, t1) = (path.first().t, path.last().t);
    (0..=20).map(|i| t0 + (t1 - t0) * i as f64 / 20.0).collect()
}

fn default_target(config: &RunConfig, ext: &str) -> Option<PathBuf> {
    if let Some(p) = &config.output {
        return Some(p.clone());
    }
    std::env::var_os(OUT_DIR_VAR).map(|dir| PathBuf::from(dir).join(format!("{}.{ext}", config.command.name())))
}

fn emit(config: &RunConfig, output: Output) -> Result<()> {
    let (bytes, ext) = match output {
        Output::Text(s) => (s.into_bytes(), "txt"),
        Output::Svg(plot) => (plot.render().into_bytes(), "svg"),
        Output::Path(path) => match config.format {
            Format::Csv => {
                let mut buf = Vec::new();
                write_csv(&path, &mut buf)?;
                (buf, "csv")
            }
            Format::Svg => {
                let mut plot = SvgPlot::new(config.command.name());
                plot.bike_path(&path, &arrow_times(&path));
                if let Ok(fit) = directrix_fit(&path) {
                    let scale = path.kappas().iter().fold(0.0f64, |m, k| m.max(k.abs()));
                    if fit.residual <= 1e-6 * scale.max(1.0) {
                        plot.directrix(fit.offset);
                    }
                }
                (plot.render().into_bytes(), "svg")
            }
        },
    };
    match default_target(config, ext) {
        Some(target) => std::fs::write(target, bytes)?,
        None => std::io::stdout().lock().write_all(&bytes)?,
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> RunConfig {
        RunConfig::try_parse_from(std::iter::once("bikepath").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn parses_flags() {
        let c = parse(&["geodesic", "--a", "2", "--kappa0", "2.5", "--t-end", "3", "--format", "svg"]);
        assert_eq!(c.command, Command::Geodesic);
        assert_eq!((c.a, c.kappa0, c.t_end), (2.0, Some(2.5), Some(3.0)));
        assert_eq!(c.format, Format::Svg);
        assert_eq!(c.command.name(), "geodesic");
    }

    #[test]
    fn geodesic_respects_length_and_step() {
        let c = parse(&["geodesic", "--ell", "2", "--t-end", "4", "--step", "0.01"]);
        let p = geodesic(&c, BikeLength::new(2.0).unwrap()).unwrap();
        assert_eq!(p.len(), 401);
        assert!((p.duration() - 4.0).abs() < 1e-12);
        assert!((p.first().kappa - 0.75).abs() < 1e-12);
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run(["bikepath", "nonsense"]), EXIT_USAGE);
        assert_eq!(run(["bikepath", "geodesic", "--ell", "-1"]), EXIT_USAGE);
        assert_eq!(run(["bikepath", "plot", "--preset", "fig-none"]), EXIT_USAGE);
    }

    #[test]
    fn classify_text() {
        let c = parse(&["classify", "--a", "1", "--kappa0", "2"]);
        assert!(classify_report(&c).starts_with("kind Soliton"));
    }
}
