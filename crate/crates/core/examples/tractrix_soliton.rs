//! Lifts a straight line: the back wheel traces a tractrix, and the flipped
//! front wheel traces the bicycle soliton.

use bicycle_geodesics::closed_forms::{line_lift_theta, soliton_point, tractrix_point};
use bicycle_geodesics::track::Line;
use bicycle_geodesics::{flip_path, horizontal_lift, BikeLength};

fn main() -> bicycle_geodesics::Result<()> {
    let ell = BikeLength::default();
    let start = -10.0;
    let lift = horizontal_lift(&Line::x_axis(start, 10.0), line_lift_theta(start, 0.0, ell), ell, 1e-3)?;
    let soliton = flip_path(&lift)?;
    let mut worst = (0.0f64, 0.0f64);
    for (s, f) in lift.samples().iter().zip(soliton.samples()) {
        let (b, tr) = (s.back(ell), tractrix_point(s.t, 0.0, ell));
        let so = soliton_point(s.t, 0.0, ell);
        worst.0 = worst.0.max((b[0] - tr[0]).hypot(b[1] - tr[1]));
        worst.1 = worst.1.max((f.front[0] - so[0]).hypot(f.front[1] - so[1]));
    }
    println!("tractrix deviation {:.2e}, soliton deviation {:.2e}", worst.0, worst.1);
    let apex = soliton.interpolate(0.0).unwrap().0;
    println!("soliton apex at ({:.6}, {:.6})", apex[0], apex[1]);
    Ok(())
}
