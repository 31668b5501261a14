//! Integrates a unit-speed geodesic and prints its curvature range, period
//! and the energy drift of the integrator.

use bicycle_geodesics::analysis::period_and_advance;
use bicycle_geodesics::{integrate_geodesic, ReducedState};

fn main() -> bicycle_geodesics::Result<()> {
    let a = 0.5;
    let run = integrate_geodesic(ReducedState::at_vertex(a), 40.0, 1e-3)?;
    let kappas = run.path.kappas();
    let lo = kappas.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = kappas.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let (period, advance) = period_and_advance(&run.path)?;
    println!("a = {a}: {} samples", run.path.len());
    println!("curvature in [{lo:.6}, {hi:.6}]");
    println!("period T = {period:.6}, advance L = {advance:.6}");
    println!("energy drift {:.2e}", run.drift);
    Ok(())
}
