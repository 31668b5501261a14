//! CSV and SVG output.
//!
//! CSV files carry one row per sample with the header
//! `t,fx,fy,bx,by,theta,kappa`. Numbers are written in the shortest form
//! that parses back to the same double, so a write/read cycle is lossless.
//! The bike length is not stored and must be supplied when reading.

use std::fmt::Write as _;
use std::io::{Read, Write};

use crate::error::{BikeError, Result};
use crate::geometry::{BikeLength, Vec2};
use crate::path::{PathSample, SampledBikePath};

pub const CSV_HEADER: [&str; 7] = ["t", "fx", "fy", "bx", "by", "theta", "kappa"];

fn csv_error(e: csv::Error) -> BikeError {
    let line = e.position().map_or(0, |p| p.line() as usize);
    BikeError::Parse {
        line,
        message: e.to_string(),
    }
}

pub fn write_csv<W: Write>(path: &SampledBikePath, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(csv_error)?;
    let ell = path.ell();
    for s in path.samples() {
        let b = s.back(ell);
        let row = [s.t, s.front[0], s.front[1], b[0], b[1], s.theta, s.kappa];
        w.write_record(row.iter().map(|v| format!("{v:?}")))
            .map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

pub fn to_csv_string(path: &SampledBikePath) -> String {
    let mut buf = Vec::new();
    write_csv(path, &mut buf).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("CSV output is ASCII")
}

/// Reads a path written by [`write_csv`]. The back-wheel columns are checked
/// for consistency with the front and frame columns.
pub fn read_csv<R: Read>(input: R, ell: BikeLength) -> Result<SampledBikePath> {
    let mut r = csv::Reader::from_reader(input);
    let header = r.headers().map_err(csv_error)?.clone();
    if header.iter().ne(CSV_HEADER.iter().copied()) {
        return Err(BikeError::Parse {
            line: 1,
            message: format!("expected header {}", CSV_HEADER.join(",")),
        });
    }
    let mut samples = Vec::new();
    for (i, record) in r.records().enumerate() {
        let line = i + 2;
        let record = record.map_err(csv_error)?;
        if record.len() != CSV_HEADER.len() {
            return Err(BikeError::Parse {
                line,
                message: format!("expected {} fields, got {}", CSV_HEADER.len(), record.len()),
            });
        }
        let mut v = [0.0; 7];
        for (k, field) in record.iter().enumerate() {
            v[k] = field.trim().parse().map_err(|e| BikeError::Parse {
                line,
                message: format!("column {}: {e}", CSV_HEADER[k]),
            })?;
        }
        let sample = PathSample {
            t: v[0],
            front: [v[1], v[2]],
            theta: v[5],
            kappa: v[6],
        };
        let b = sample.back(ell);
        let scale = 1.0 + v[1].abs().max(v[2].abs());
        if (b[0] - v[3]).abs() > 1e-9 * scale || (b[1] - v[4]).abs() > 1e-9 * scale {
            return Err(BikeError::Parse {
                line,
                message: "back wheel inconsistent with front, frame angle and bike length".into(),
            });
        }
        samples.push(sample);
    }
    SampledBikePath::new(samples, ell)
}

pub const SVG_WIDTH: f64 = 1200.0;
pub const SVG_HEIGHT: f64 = 600.0;
const MARGIN: f64 = 30.0;

pub const FRONT_COLOR: &str = "#1f4e9e";
pub const BACK_COLOR: &str = "#c0392b";
pub const DIRECTRIX_COLOR: &str = "#2e8b57";
pub const ARROW_COLOR: &str = "#222222";

#[derive(Debug, Clone)]
enum Item {
    Polyline {
        points: Vec<Vec2>,
        color: String,
        width: f64,
        dashed: bool,
    },
    Arrow {
        from: Vec2,
        to: Vec2,
    },
    Label {
        at: Vec2,
        text: String,
    },
}

/// A plot in world coordinates, mapped to a fixed 1200 by 600 canvas with
/// equal scales on both axes.
#[derive(Debug, Clone, Default)]
pub struct SvgPlot {
    title: String,
    items: Vec<Item>,
}

impl SvgPlot {
    pub fn new(title: impl Into<String>) -> Self {
        SvgPlot {
            title: title.into(),
            items: Vec::new(),
        }
    }

    pub fn polyline(&mut self, points: Vec<Vec2>, color: &str, width: f64) -> &mut Self {
        self.items.push(Item::Polyline {
            points,
            color: color.into(),
            width,
            dashed: false,
        });
        self
    }

    pub fn dashed(&mut self, points: Vec<Vec2>, color: &str, width: f64) -> &mut Self {
        self.items.push(Item::Polyline {
            points,
            color: color.into(),
            width,
            dashed: true,
        });
        self
    }

    pub fn arrow(&mut self, from: Vec2, to: Vec2) -> &mut Self {
        self.items.push(Item::Arrow { from, to });
        self
    }

    pub fn label(&mut self, at: Vec2, text: impl Into<String>) -> &mut Self {
        self.items.push(Item::Label {
            at,
            text: text.into(),
        });
        self
    }

    /// Front track, back track and a frame arrow (back wheel to front wheel)
    /// at each given parameter.
    pub fn bike_path(&mut self, path: &SampledBikePath, arrows_at: &[f64]) -> &mut Self {
        self.polyline(path.backs(), BACK_COLOR, 1.5);
        self.polyline(path.fronts(), FRONT_COLOR, 1.5);
        let ell = path.ell();
        for &t in arrows_at {
            if let Some((front, theta)) = path.interpolate(t) {
                let s = PathSample {
                    t,
                    front,
                    theta,
                    kappa: 0.0,
                };
                self.arrow(s.back(ell), front);
            }
        }
        self
    }

    /// Horizontal dashed line at height `y` across the plotted x range.
    pub fn directrix(&mut self, y: f64) -> &mut Self {
        let (lo, hi) = self.bounds();
        self.dashed(vec![[lo[0], y], [hi[0], y]], DIRECTRIX_COLOR, 1.2)
    }

    fn points(&self) -> impl Iterator<Item = &Vec2> {
        self.items.iter().flat_map(|it| match it {
            Item::Polyline { points, .. } => points.iter().collect::<Vec<_>>(),
            Item::Arrow { from, to } => vec![from, to],
            Item::Label { at, .. } => vec![at],
        })
    }

    fn bounds(&self) -> (Vec2, Vec2) {
        let mut lo = [f64::INFINITY; 2];
        let mut hi = [f64::NEG_INFINITY; 2];
        for p in self.points() {
            for k in 0..2 {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
        if !lo[0].is_finite() {
            return ([-1.0, -1.0], [1.0, 1.0]);
        }
        (lo, hi)
    }

    pub fn render(&self) -> String {
        let (lo, hi) = self.bounds();
        let span_x = (hi[0] - lo[0]).max(1e-9);
        let span_y = (hi[1] - lo[1]).max(1e-9);
        let scale = ((SVG_WIDTH - 2.0 * MARGIN) / span_x).min((SVG_HEIGHT - 2.0 * MARGIN) / span_y);
        let ox = 0.5 * (SVG_WIDTH - scale * span_x);
        let oy = 0.5 * (SVG_HEIGHT - scale * span_y);
        let map = |p: &Vec2| -> (f64, f64) {
            (ox + scale * (p[0] - lo[0]), SVG_HEIGHT - oy - scale * (p[1] - lo[1]))
        };

        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
            w = SVG_WIDTH,
            h = SVG_HEIGHT
        );
        let _ = writeln!(out, "<title>{}</title>", escape(&self.title));
        let _ = writeln!(
            out,
            r#"<defs><marker id="head" markerWidth="8" markerHeight="8" refX="7" refY="4" orient="auto"><path d="M0,0 L8,4 L0,8 z" fill="{ARROW_COLOR}"/></marker></defs>"#
        );
        let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
        for item in &self.items {
            match item {
                Item::Polyline {
                    points,
                    color,
                    width,
                    dashed,
                } => {
                    let mut d = String::new();
                    for (i, p) in points.iter().enumerate() {
                        let (x, y) = map(p);
                        let _ = write!(d, "{}{x:.2},{y:.2}", if i == 0 { "" } else { " " });
                    }
                    let dash = if *dashed {
                        r#" stroke-dasharray="8,6""#
                    } else {
                        ""
                    };
                    let _ = writeln!(
                        out,
                        r#"<polyline points="{d}" fill="none" stroke="{color}" stroke-width="{width}"{dash}/>"#
                    );
                }
                Item::Arrow { from, to } => {
                    let (x1, y1) = map(from);
                    let (x2, y2) = map(to);
                    let _ = writeln!(
                        out,
                        r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{ARROW_COLOR}" stroke-width="1.5" marker-end="url(#head)"/>"#
                    );
                }
                Item::Label { at, text } => {
                    let (x, y) = map(at);
                    let _ = writeln!(
                        out,
                        r#"<text x="{x:.2}" y="{y:.2}" font-family="sans-serif" font-size="14">{}</text>"#,
                        escape(text)
                    );
                }
            }
        }
        out.push_str("</svg>\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
