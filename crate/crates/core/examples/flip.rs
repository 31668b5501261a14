//! Flips a geodesic and checks that the flipped front track is a congruent
//! copy of the original, shifted by half a period.

use bicycle_geodesics::analysis::{flip_congruence, period_and_advance};
use bicycle_geodesics::{flip_path, integrate_geodesic, path_length, ReducedState};

fn main() -> bicycle_geodesics::Result<()> {
    for a in [0.5, 2.0] {
        let path = integrate_geodesic(ReducedState::at_vertex(a), 30.0, 1e-3)?.path;
        let flipped = flip_path(&path)?;
        let (t, l) = period_and_advance(&path)?;
        let err = flip_congruence(&path, &flipped, t, l, a > 1.0)?;
        println!(
            "a = {a}: length {:.6} -> {:.6}, congruence error {err:.2e}",
            path_length(&path)?,
            path_length(&flipped)?
        );
    }
    Ok(())
}
