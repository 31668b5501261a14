//! Shows that periodic geodesics stop minimizing: after enough periods a
//! swing-ride-swing competitor is shorter.

use std::f64::consts::FRAC_PI_2;

use bicycle_geodesics::analysis::period_and_advance;
use bicycle_geodesics::metric_lines::{build_shortcut, ShortcutReport};
use bicycle_geodesics::{integrate_geodesic, path_length, BikeLength, ConfigPoint, ReducedState};

fn main() -> bicycle_geodesics::Result<()> {
    let ell = BikeLength::default();
    for a in [0.5, 2.0] {
        let probe = integrate_geodesic(ReducedState::at_vertex(a), 40.0, 1e-3)?.path;
        let (t, l) = period_and_advance(&probe)?;
        let report = ShortcutReport::new(t, l, ell)?;
        let path = build_shortcut(&ConfigPoint::new(0.0, 0.0, FRAC_PI_2), report.n_star, l, ell, 1e-3)?;
        println!(
            "a = {a}: N* = {}, geodesic {:.6}, shortcut {:.6} (measured {:.6}), margin {:.6}",
            report.n_star,
            report.geodesic_length,
            report.shortcut_length,
            path_length(&path)?,
            report.margin()
        );
    }
    Ok(())
}
