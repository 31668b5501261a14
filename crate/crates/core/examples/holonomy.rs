//! Transports the whole circle of frame angles along a random closed-ish
//! front track and fits the resulting monodromy with a Möbius map.

use bicycle_geodesics::geometry::normalize_angle;
use bicycle_geodesics::holonomy::{cross_ratio, fit_mobius, transport_fiber};
use bicycle_geodesics::track::FourierTrack;
use bicycle_geodesics::BikeLength;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> bicycle_geodesics::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let track = FourierTrack::random(&mut rng, 3.0);
    let samples = transport_fiber(&track, 16, BikeLength::default(), 1e-3)?;
    let (map, residual) = fit_mobius(&samples)?;
    println!("fit residual {residual:.2e}, det {:.6}", map.determinant());
    for s in samples.iter().step_by(4) {
        println!("theta {:+.4} -> {:+.4} (map {:+.4})", s.theta_in, normalize_angle(s.theta_out), map.apply(s.theta_in));
    }
    let q = |i: usize| samples[i];
    let before = cross_ratio(q(0).theta_in, q(4).theta_in, q(8).theta_in, q(12).theta_in);
    let after = cross_ratio(q(0).theta_out, q(4).theta_out, q(8).theta_out, q(12).theta_out);
    println!("cross-ratio {before:.9} -> {after:.9}");
    Ok(())
}
