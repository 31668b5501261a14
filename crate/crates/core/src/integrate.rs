//! Geodesic flow and horizontal lifts.
//!
//! The normal geodesics are integrated in two forms: the full Hamiltonian
//! system on the cotangent bundle with coordinates `(x, y, theta, px, py,
//! ptheta)`, and the reduced unit-speed system `(x, y, theta, kappa)` obtained
//! after rotating the constant momentum `(px, py)` onto `(a, 0)`. Both are
//! written for a unit bike length; other lengths follow by dilation.
//!
//! All integration is classical fixed-step RK4.

use crate::diff;
use crate::error::{BikeError, Result};
use crate::geometry::{BikeLength, RigidMotion};
use crate::path::{PathSample, SampledBikePath};
use crate::track::FrontTrack;

/// Default step in arc-length units.
pub const DEFAULT_STEP: f64 = 1e-3;

/// Phase-space point of the full geodesic flow.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CotangentState {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
    pub px: f64,
    pub py: f64,
    pub ptheta: f64,
}

impl CotangentState {
    pub fn to_array(&self) -> [f64; 6] {
        [self.x, self.y, self.theta, self.px, self.py, self.ptheta]
    }

    pub fn from_array(a: [f64; 6]) -> Self {
        CotangentState {
            x: a[0],
            y: a[1],
            theta: a[2],
            px: a[3],
            py: a[4],
            ptheta: a[5],
        }
    }

    /// Momenta dual to the orthonormal frame `X1 = dx - sin dtheta`,
    /// `X2 = dy + cos dtheta`.
    pub fn frame_momenta(&self) -> (f64, f64) {
        let (s, c) = self.theta.sin_cos();
        (self.px - s * self.ptheta, self.py + c * self.ptheta)
    }

    pub fn hamiltonian(&self) -> f64 {
        let (p1, p2) = self.frame_momenta();
        0.5 * (p1 * p1 + p2 * p2)
    }

    /// Rescales the momenta so that `H = 1/2`. Fails when all frame momenta
    /// vanish.
    pub fn normalized(&self) -> Result<Self> {
        let h = self.hamiltonian();
        if !(h > 0.0) || !h.is_finite() {
            return Err(BikeError::NotUnitSpeed { hamiltonian: h });
        }
        let k = 1.0 / (2.0 * h).sqrt();
        Ok(CotangentState {
            px: k * self.px,
            py: k * self.py,
            ptheta: k * self.ptheta,
            ..*self
        })
    }
}

/// State of the reduced unit-speed system, `a` fixed along a trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedState {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
    pub kappa: f64,
    pub a: f64,
}

impl ReducedState {
    /// Start at a curvature maximum: front at the origin, frame pointing up,
    /// `kappa = 1 + a`.
    pub fn at_vertex(a: f64) -> Self {
        ReducedState {
            x: 0.0,
            y: 0.0,
            theta: std::f64::consts::FRAC_PI_2,
            kappa: 1.0 + a,
            a,
        }
    }

    /// Front at the origin with curvature `kappa0`, frame angle chosen to
    /// satisfy the unit-speed constraint (`2 a sin(theta) kappa = kappa^2 +
    /// a^2 - 1`), on the branch with `cos(theta) >= 0`.
    pub fn from_shape(a: f64, kappa0: f64) -> Result<Self> {
        if !(a >= 0.0) || !a.is_finite() || !kappa0.is_finite() {
            return Err(BikeError::DegenerateInput(format!(
                "invalid shape parameters a={a}, kappa0={kappa0}"
            )));
        }
        let theta = if a == 0.0 || kappa0 == 0.0 {
            if (kappa0 * kappa0 + a * a - 1.0).abs() > 1e-12 {
                return Err(BikeError::NotUnitSpeed {
                    hamiltonian: 0.5 * (kappa0 * kappa0 + a * a),
                });
            }
            0.0
        } else {
            let s = (kappa0 * kappa0 + a * a - 1.0) / (2.0 * a * kappa0);
            if s.abs() > 1.0 + 1e-12 {
                return Err(BikeError::NotUnitSpeed {
                    hamiltonian: f64::NAN,
                });
            }
            s.clamp(-1.0, 1.0).asin()
        };
        Ok(ReducedState {
            x: 0.0,
            y: 0.0,
            theta,
            kappa: kappa0,
            a,
        })
    }

    /// `theta_dot^2 + a^2 cos^2(theta) - 1`.
    pub fn unit_speed_defect(&self) -> f64 {
        let (s, c) = self.theta.sin_cos();
        let td = self.kappa - self.a * s;
        td * td + self.a * self.a * c * c - 1.0
    }

    /// The full-system state with `(px, py) = (a, 0)` and `ptheta = kappa`.
    pub fn to_cotangent(&self) -> CotangentState {
        CotangentState {
            x: self.x,
            y: self.y,
            theta: self.theta,
            px: self.a,
            py: 0.0,
            ptheta: self.kappa,
        }
    }
}

/// Right-hand side of Hamilton's equations, ordered
/// `(x', y', theta', px', py', ptheta')`.
pub fn hamiltonian_rhs(s: &CotangentState) -> [f64; 6] {
    let (sn, cs) = s.theta.sin_cos();
    [
        s.px - sn * s.ptheta,
        s.py + cs * s.ptheta,
        s.ptheta + cs * s.py - sn * s.px,
        0.0,
        0.0,
        s.ptheta * (cs * s.px + sn * s.py),
    ]
}

/// Right-hand side of the reduced system, ordered `(x', y', theta', kappa')`.
pub fn reduced_rhs(s: &ReducedState) -> [f64; 4] {
    let (sn, cs) = s.theta.sin_cos();
    [
        s.a - sn * s.kappa,
        cs * s.kappa,
        s.kappa - s.a * sn,
        s.a * cs * s.kappa,
    ]
}

/// The pair of vector fields driving the geodesic integrators. Swappable so
/// verification suites can be run against deliberately broken dynamics.
#[derive(Clone, Copy)]
pub struct Dynamics {
    pub full: fn(&CotangentState) -> [f64; 6],
    pub reduced: fn(&ReducedState) -> [f64; 4],
}

impl Default for Dynamics {
    fn default() -> Self {
        Dynamics {
            full: hamiltonian_rhs,
            reduced: reduced_rhs,
        }
    }
}

impl std::fmt::Debug for Dynamics {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Dynamics").finish_non_exhaustive()
    }
}

/// One classical RK4 step of `y' = f(t, y)`.
pub fn rk4_step<const N: usize>(
    f: impl Fn(f64, &[f64; N]) -> [f64; N],
    t: f64,
    y: &[f64; N],
    h: f64,
) -> [f64; N] {
    let add = |y: &[f64; N], k: &[f64; N], w: f64| -> [f64; N] {
        std::array::from_fn(|i| y[i] + w * k[i])
    };
    let k1 = f(t, y);
    let k2 = f(t + 0.5 * h, &add(y, &k1, 0.5 * h));
    let k3 = f(t + 0.5 * h, &add(y, &k2, 0.5 * h));
    let k4 = f(t + h, &add(y, &k3, h));
    std::array::from_fn(|i| y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
}

/// Sample times `t0, t0 + h, ...` up to `t1`, the last step shortened if
/// `(t1 - t0) / h` is not an integer.
pub fn grid(t0: f64, t1: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || !step.is_finite() {
        return Err(BikeError::DegenerateInput(format!("step must be positive, got {step}")));
    }
    if !(t1 > t0) || !t1.is_finite() || !t0.is_finite() {
        return Err(BikeError::DegenerateInput(format!(
            "empty parameter interval [{t0}, {t1}]"
        )));
    }
    let ratio = (t1 - t0) / step;
    let n = (ratio - 1e-9).ceil().max(1.0) as usize;
    let mut ts: Vec<f64> = (0..n).map(|i| t0 + i as f64 * step).collect();
    ts.push(t1);
    Ok(ts)
}

fn check_finite<const N: usize>(y: &[f64; N], t: f64) -> Result<()> {
    if y.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(BikeError::Divergence { t })
    }
}

/// Integrates the full Hamiltonian system on `[0, t_end]`. Requires
/// `|H - 1/2| <= 1e-6`.
pub fn integrate_cotangent(
    s0: &CotangentState,
    t_end: f64,
    step: f64,
    dynamics: &Dynamics,
) -> Result<Vec<(f64, CotangentState)>> {
    let h0 = s0.hamiltonian();
    if (h0 - 0.5).abs() > 1e-6 {
        return Err(BikeError::NotUnitSpeed { hamiltonian: h0 });
    }
    let ts = grid(0.0, t_end, step)?;
    let rhs = dynamics.full;
    let mut out = Vec::with_capacity(ts.len());
    let mut y = s0.to_array();
    out.push((ts[0], *s0));
    for w in ts.windows(2) {
        y = rk4_step(|_, y| rhs(&CotangentState::from_array(*y)), w[0], &y, w[1] - w[0]);
        check_finite(&y, w[1])?;
        out.push((w[1], CotangentState::from_array(y)));
    }
    Ok(out)
}

/// Integrates the reduced unit-speed system on `[0, t_end]`.
pub fn integrate_reduced(
    s0: &ReducedState,
    t_end: f64,
    step: f64,
    dynamics: &Dynamics,
) -> Result<Vec<(f64, ReducedState)>> {
    let ts = grid(0.0, t_end, step)?;
    let rhs = dynamics.reduced;
    let a = s0.a;
    let pack = |y: &[f64; 4]| ReducedState {
        x: y[0],
        y: y[1],
        theta: y[2],
        kappa: y[3],
        a,
    };
    let mut out = Vec::with_capacity(ts.len());
    let mut y = [s0.x, s0.y, s0.theta, s0.kappa];
    out.push((ts[0], *s0));
    for w in ts.windows(2) {
        y = rk4_step(|_, y| rhs(&pack(y)), w[0], &y, w[1] - w[0]);
        check_finite(&y, w[1])?;
        out.push((w[1], pack(&y)));
    }
    Ok(out)
}

/// Initial data for [`integrate_geodesic`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeodesicStart {
    Full(CotangentState),
    Reduced(ReducedState),
}

impl From<CotangentState> for GeodesicStart {
    fn from(s: CotangentState) -> Self {
        GeodesicStart::Full(s)
    }
}

impl From<ReducedState> for GeodesicStart {
    fn from(s: ReducedState) -> Self {
        GeodesicStart::Reduced(s)
    }
}

/// A sampled geodesic together with the drift of its conserved quantity:
/// `max |H - H(0)|` for the full system, `max |theta'^2 + a^2 cos^2 - 1|` for
/// the reduced one.
#[derive(Debug, Clone)]
pub struct GeodesicRun {
    pub path: SampledBikePath,
    pub drift: f64,
}

pub fn integrate_geodesic(
    start: impl Into<GeodesicStart>,
    t_end: f64,
    step: f64,
) -> Result<GeodesicRun> {
    integrate_geodesic_with(start, t_end, step, &Dynamics::default())
}

pub fn integrate_geodesic_with(
    start: impl Into<GeodesicStart>,
    t_end: f64,
    step: f64,
    dynamics: &Dynamics,
) -> Result<GeodesicRun> {
    let ell = BikeLength::default();
    match start.into() {
        GeodesicStart::Full(s0) => {
            let traj = integrate_cotangent(&s0, t_end, step, dynamics)?;
            let h0 = s0.hamiltonian();
            let drift = traj
                .iter()
                .map(|(_, s)| (s.hamiltonian() - h0).abs())
                .fold(0.0, f64::max);
            let samples = traj
                .iter()
                .map(|(t, s)| PathSample {
                    t: *t,
                    front: [s.x, s.y],
                    theta: s.theta,
                    kappa: s.ptheta,
                })
                .collect();
            Ok(GeodesicRun {
                path: SampledBikePath::new(samples, ell)?,
                drift,
            })
        }
        GeodesicStart::Reduced(s0) => {
            let traj = integrate_reduced(&s0, t_end, step, dynamics)?;
            let drift = traj
                .iter()
                .map(|(_, s)| s.unit_speed_defect().abs())
                .fold(0.0, f64::max);
            let samples = traj
                .iter()
                .map(|(t, s)| PathSample {
                    t: *t,
                    front: [s.x, s.y],
                    theta: s.theta,
                    kappa: s.kappa,
                })
                .collect();
            Ok(GeodesicRun {
                path: SampledBikePath::new(samples, ell)?,
                drift,
            })
        }
    }
}

/// Rotates a unit-speed state about the origin so that its constant momentum
/// becomes `(a, 0)` with `a >= 0`, and reads off the reduced state
/// (`kappa = ptheta`). The returned motion maps the original picture to the
/// reduced one; its inverse maps reduced trajectories back.
pub fn canonicalize(s: &CotangentState) -> Result<(ReducedState, RigidMotion)> {
    let h = s.hamiltonian();
    if (h - 0.5).abs() > 1e-9 {
        return Err(BikeError::NotUnitSpeed { hamiltonian: h });
    }
    let a = s.px.hypot(s.py);
    let rotation = if a == 0.0 { 0.0 } else { -s.py.atan2(s.px) };
    let g = RigidMotion::rotation(rotation);
    let p = g.apply_point([s.x, s.y]);
    Ok((
        ReducedState {
            x: p[0],
            y: p[1],
            theta: g.apply_angle(s.theta),
            kappa: s.ptheta,
            a,
        },
        g,
    ))
}

/// Lifts a prescribed front track to a bike path by integrating the no-skid
/// condition `ell theta' = cos(theta) y' - sin(theta) x'` from `theta0`.
/// The curvature column is the signed curvature of the front track, from
/// centered differences of its tangent angle.
pub fn horizontal_lift<C: FrontTrack + ?Sized>(
    c: &C,
    theta0: f64,
    ell: BikeLength,
    step: f64,
) -> Result<SampledBikePath> {
    let (t0, t1) = c.domain();
    let ts = grid(t0, t1, step)?;
    let l = ell.get();
    let velocity = |t: f64| -> Result<[f64; 2]> {
        let v = c.velocity(t);
        let speed = v[0].hypot(v[1]);
        if !(speed > 1e-12) {
            return Err(BikeError::Immersion { t });
        }
        Ok(v)
    };

    let mut thetas = Vec::with_capacity(ts.len());
    let mut theta = theta0;
    thetas.push(theta);
    for w in ts.windows(2) {
        let (ta, tb) = (w[0], w[1]);
        let h = tb - ta;
        let vs = [velocity(ta)?, velocity(ta + 0.5 * h)?, velocity(tb)?];
        let rate = |v: [f64; 2], th: f64| (th.cos() * v[1] - th.sin() * v[0]) / l;
        let k1 = rate(vs[0], theta);
        let k2 = rate(vs[1], theta + 0.5 * h * k1);
        let k3 = rate(vs[1], theta + 0.5 * h * k2);
        let k4 = rate(vs[2], theta + h * k3);
        theta += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if !theta.is_finite() {
            return Err(BikeError::Divergence { t: tb });
        }
        thetas.push(theta);
    }

    let velocities: Vec<[f64; 2]> = ts.iter().map(|&t| c.velocity(t)).collect();
    let mut tangent: Vec<f64> = velocities.iter().map(|v| v[1].atan2(v[0])).collect();
    diff::unwrap_angles(&mut tangent);
    let kappa: Vec<f64> = if ts.len() >= 3 {
        diff::derivative_3pt(&ts, &tangent)
            .into_iter()
            .zip(&velocities)
            .map(|(d, v)| d / v[0].hypot(v[1]))
            .collect()
    } else {
        vec![0.0; ts.len()]
    };

    let samples = ts
        .iter()
        .zip(thetas)
        .zip(kappa)
        .map(|((&t, theta), kappa)| PathSample {
            t,
            front: c.position(t),
            theta,
            kappa,
        })
        .collect();
    SampledBikePath::new(samples, ell)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::dist;
    use crate::track::{Circle, Line, Stationary};
    use std::f64::consts::{FRAC_PI_2, PI, TAU};

    #[test]
    fn hamiltonian_rhs_examples() {
        let line = CotangentState {
            x: 0.0,
            y: 0.0,
            theta: 0.0,
            px: 1.0,
            py: 0.0,
            ptheta: 0.0,
        };
        assert_eq!(hamiltonian_rhs(&line), [1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let circle = CotangentState {
            px: 0.0,
            ptheta: 1.0,
            ..line
        };
        assert_eq!(hamiltonian_rhs(&circle), [0.0, 1.0, 1.0, 0.0, 0.0, 0.0]);
        let generic = CotangentState {
            x: 0.3,
            y: -2.0,
            theta: 1.1,
            px: 0.4,
            py: -0.7,
            ptheta: 1.9,
        };
        let d = hamiltonian_rhs(&generic);
        assert_eq!((d[3], d[4]), (0.0, 0.0));
    }

    #[test]
    fn reduced_rhs_examples() {
        let apex = ReducedState {
            x: 0.0,
            y: 0.0,
            theta: FRAC_PI_2,
            kappa: 2.0,
            a: 1.0,
        };
        let d = reduced_rhs(&apex);
        assert!((d[0] + 1.0).abs() < 1e-15 && d[1].abs() < 1e-15);
        assert!((d[2] - 1.0).abs() < 1e-15 && d[3].abs() < 1e-15);

        let circle = ReducedState {
            x: 0.0,
            y: 0.0,
            theta: 0.0,
            kappa: 1.0,
            a: 0.0,
        };
        assert_eq!(reduced_rhs(&circle), [0.0, 1.0, 1.0, 0.0]);

        let line = ReducedState {
            x: 0.0,
            y: 0.0,
            theta: 0.7,
            kappa: 0.0,
            a: 1.3,
        };
        let d = reduced_rhs(&line);
        assert_eq!(d, [1.3, 0.0, -1.3 * 0.7f64.sin(), 0.0]);
    }

    #[test]
    fn canonicalize_examples() {
        let base = CotangentState {
            x: 0.0,
            y: 0.0,
            theta: 0.0,
            px: 0.6,
            py: 0.8,
            ptheta: 0.0,
        };
        // Pick ptheta so that H = 1/2: (0.6)^2 + (0.8 + ptheta)^2 = 1.
        let s = CotangentState {
            ptheta: 0.0,
            ..base
        };
        let (r, g) = canonicalize(&s).unwrap();
        assert!((r.a - 1.0).abs() < 1e-15);
        assert!((g.rotation + 0.8f64.atan2(0.6)).abs() < 1e-15);

        let s = CotangentState {
            x: 1.0,
            y: 2.0,
            theta: 0.4,
            px: 1.0,
            py: 0.0,
            ptheta: 0.4f64.sin() * 2.0,
        };
        let s = s.normalized().unwrap();
        let (r, g) = canonicalize(&s).unwrap();
        assert_eq!(g, RigidMotion::rotation(0.0));
        assert_eq!((r.x, r.y, r.theta, r.kappa), (s.x, s.y, s.theta, s.ptheta));

        let s = CotangentState {
            x: 0.0,
            y: 0.0,
            theta: 0.3,
            px: 0.0,
            py: 0.0,
            ptheta: 1.0,
        };
        let (r, g) = canonicalize(&s).unwrap();
        assert_eq!(r.a, 0.0);
        assert_eq!(g.rotation, 0.0);

        let bad = CotangentState { ptheta: 2.0, ..s };
        assert!(matches!(canonicalize(&bad), Err(BikeError::NotUnitSpeed { .. })));
    }

    #[test]
    fn grid_shortens_last_step() {
        let g = grid(0.0, 1.0, 0.3).unwrap();
        assert_eq!(g.len(), 5);
        assert_eq!(*g.last().unwrap(), 1.0);
        assert_eq!(grid(0.0, 30.0, 1e-3).unwrap().len(), 30001);
        assert!(grid(0.0, 1.0, 0.0).is_err());
        assert!(grid(1.0, 1.0, 0.1).is_err());
    }

    #[test]
    fn straight_ride() {
        let s = ReducedState {
            x: 2.0,
            y: -1.0,
            theta: 0.0,
            kappa: 0.0,
            a: 1.0,
        };
        let run = integrate_geodesic(s, 10.0, 1e-2).unwrap();
        for p in run.path.samples() {
            assert!((p.front[0] - (2.0 + p.t)).abs() < 1e-12);
            assert_eq!(p.front[1], -1.0);
        }
    }

    #[test]
    fn circle_closes() {
        let s = ReducedState {
            x: 0.0,
            y: 0.0,
            theta: 0.0,
            kappa: 1.0,
            a: 0.0,
        };
        let run = integrate_geodesic(s, TAU, 1e-3).unwrap();
        let end = run.path.last();
        assert!(dist(end.front, [0.0, 0.0]) < 1e-6);
        assert!((end.theta - TAU).abs() < 1e-6);
        for p in run.path.samples() {
            assert!((dist(p.front, [-1.0, 0.0]) - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn full_system_requires_unit_speed() {
        let s = CotangentState {
            x: 0.0,
            y: 0.0,
            theta: 0.0,
            px: 2.0,
            py: 0.0,
            ptheta: 0.0,
        };
        assert!(matches!(
            integrate_geodesic(s, 1.0, 1e-3),
            Err(BikeError::NotUnitSpeed { .. })
        ));
    }

    #[test]
    fn divergence_is_reported() {
        fn blowup(s: &ReducedState) -> [f64; 4] {
            [0.0, 0.0, 0.0, s.kappa * s.kappa]
        }
        let dynamics = Dynamics {
            reduced: blowup,
            ..Dynamics::default()
        };
        let s = ReducedState {
            x: 0.0,
            y: 0.0,
            theta: 0.0,
            kappa: 1.0,
            a: 0.0,
        };
        let err = integrate_geodesic_with(s, 5.0, 1e-2, &dynamics).unwrap_err();
        match err {
            BikeError::Divergence { t } => assert!(t > 0.9 && t < 1.2, "t = {t}"),
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn from_shape_satisfies_constraint() {
        for &(a, k) in &[(0.5, 1.2), (2.0, 2.5), (3.0, 2.0), (1.0, 2.0), (0.3, 0.7)] {
            let s = ReducedState::from_shape(a, k).unwrap();
            assert!(s.unit_speed_defect().abs() < 1e-14, "a={a} k={k}");
        }
        assert!(ReducedState::from_shape(0.5, 3.0).is_err());
        assert_eq!(ReducedState::at_vertex(0.5).unit_speed_defect(), 0.0);
    }

    #[test]
    fn line_lift_with_collinear_back_wheel() {
        let c = Line::x_axis(0.0, 10.0);
        let p = horizontal_lift(&c, 0.0, BikeLength::new(1.5).unwrap(), 1e-3).unwrap();
        for s in p.samples() {
            let b = s.back(p.ell());
            assert!((b[0] - (s.t - 1.5)).abs() < 1e-15 && b[1] == 0.0);
        }
    }

    #[test]
    fn circle_lift_with_back_wheel_at_center() {
        let c = Circle::unit(1.0);
        let p = horizontal_lift(&c, 0.0, BikeLength::default(), 1e-3).unwrap();
        for s in p.samples() {
            let b = s.back(p.ell());
            assert!(b[0].abs() < 1e-12 && b[1].abs() < 1e-12);
            assert!((s.kappa - 1.0).abs() < 1e-9);
        }
        assert!((p.last().theta - TAU).abs() < 1e-12);
    }

    #[test]
    fn lift_rejects_stationary_curve() {
        let c = Stationary {
            point: [1.0, 1.0],
            start: 0.0,
            end: 1.0,
        };
        assert!(matches!(
            horizontal_lift(&c, 0.0, BikeLength::default(), 1e-2),
            Err(BikeError::Immersion { .. })
        ));
    }

    #[test]
    fn lift_of_clockwise_circle_has_negative_curvature() {
        let c = Circle {
            clockwise: true,
            radius: 2.0,
            ..Circle::unit(1.0)
        };
        let p = horizontal_lift(&c, PI, BikeLength::default(), 1e-3).unwrap();
        assert!(p.samples().iter().all(|s| (s.kappa + 0.5).abs() < 1e-9));
    }
}
