//! Builds the correspondent of a circle and fits the pressurized elastica
//! equation to it.

use bicycle_geodesics::holonomy::{correspondent, pressurized_fit};
use bicycle_geodesics::track::Circle;
use bicycle_geodesics::BikeLength;

fn main() -> bicycle_geodesics::Result<()> {
    let circle = Circle { end: 12.0, ..Circle::unit(1.0) };
    for theta0 in [0.3, 0.6, 1.2] {
        let corr = correspondent(&circle, theta0, BikeLength::default(), 1e-3)?;
        let fit = pressurized_fit(&corr.flipped.fronts(), 1e-3)?;
        println!(
            "theta0 = {theta0}: A = {:.6}, C = {:.6}, residual {:.2e}",
            fit.coef_a, fit.coef_c, fit.residual
        );
    }
    Ok(())
}
