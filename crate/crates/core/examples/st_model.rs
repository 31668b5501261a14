//! Moves between the frame and the back-wheel models of the configuration
//! space, and applies the flip and a rigid motion.

use bicycle_geodesics::geometry::{act, flip, from_st_model, to_st_model};
use bicycle_geodesics::{BikeLength, ConfigPoint, RigidMotion};

fn main() -> bicycle_geodesics::Result<()> {
    let ell = BikeLength::new(1.5)?;
    let p = ConfigPoint::new(1.0, 2.0, 0.7);
    let (back, dir) = to_st_model(&p, ell);
    println!("front {:?} theta {:.4}", p.front(), p.theta());
    println!("back {back:?} direction {dir:?}");
    println!("round trip {:?}", from_st_model(back, dir, ell));
    let q = flip(&p, ell);
    println!("flip {:?}, flip twice {:?}", q, flip(&q, ell));
    let g = RigidMotion::rotation_about(0.5, [1.0, 0.0]);
    println!("rotated {:?}", act(&g, &p));
    Ok(())
}
