//! Configuration space of a bicycle: placements, plane isometries, the
//! frame flip, and the unit-tangent-bundle (back wheel, direction) model.
//!
//! A placement is stored as the front wheel position `(x, y)` and the frame
//! angle `theta`; the back wheel is always derived as
//! `b = f - ell * (cos theta, sin theta)`, so `|f - b| = ell` holds by
//! construction.

use std::f64::consts::{PI, TAU};

use crate::error::{BikeError, Result};

pub type Vec2 = [f64; 2];

/// Wraps an angle into `(-pi, pi]`.
pub fn normalize_angle(theta: f64) -> f64 {
    if theta > -PI && theta <= PI {
        return theta;
    }
    let r = theta.rem_euclid(TAU);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

/// Wraps an angle difference into `(-pi, pi]` and returns its magnitude.
pub fn angle_distance(a: f64, b: f64) -> f64 {
    normalize_angle(a - b).abs()
}

#[inline]
pub fn unit(theta: f64) -> Vec2 {
    [theta.cos(), theta.sin()]
}

#[inline]
pub fn dist(p: Vec2, q: Vec2) -> f64 {
    (p[0] - q[0]).hypot(p[1] - q[1])
}

/// Length of the bike frame, the distance between the wheel contact points.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct BikeLength(f64);

impl BikeLength {
    pub fn new(ell: f64) -> Result<Self> {
        if ell.is_finite() && ell > 0.0 {
            Ok(BikeLength(ell))
        } else {
            Err(BikeError::InvalidLength(ell))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

impl Default for BikeLength {
    fn default() -> Self {
        BikeLength(1.0)
    }
}

/// A point of the configuration space: front wheel position and frame angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfigPoint {
    pub x: f64,
    pub y: f64,
    theta: f64,
}

impl ConfigPoint {
    pub fn new(x: f64, y: f64, theta: f64) -> Self {
        ConfigPoint {
            x,
            y,
            theta: normalize_angle(theta),
        }
    }

    /// Frame angle in `(-pi, pi]`.
    #[inline]
    pub fn theta(&self) -> f64 {
        self.theta
    }

    #[inline]
    pub fn front(&self) -> Vec2 {
        [self.x, self.y]
    }

    /// Unit vector pointing from the back wheel to the front wheel.
    #[inline]
    pub fn direction(&self) -> Vec2 {
        unit(self.theta)
    }

    pub fn back(&self, ell: BikeLength) -> Vec2 {
        let v = self.direction();
        [self.x - ell.get() * v[0], self.y - ell.get() * v[1]]
    }

    /// Largest coordinate difference, with the angles compared modulo `2 pi`.
    pub fn distance_to(&self, other: &ConfigPoint) -> f64 {
        (self.x - other.x)
            .abs()
            .max((self.y - other.y).abs())
            .max(angle_distance(self.theta, other.theta))
    }
}

/// Whether a plane isometry preserves or reverses orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Preserving,
    Reversing,
}

impl Orientation {
    #[inline]
    pub fn sign(self) -> f64 {
        match self {
            Orientation::Preserving => 1.0,
            Orientation::Reversing => -1.0,
        }
    }

    fn compose(self, other: Orientation) -> Orientation {
        if self == other {
            Orientation::Preserving
        } else {
            Orientation::Reversing
        }
    }
}

/// An element of E(2): `z -> R(rotation) S z + translation`, where `S` is the
/// identity for orientation-preserving motions and the reflection
/// `(x, y) -> (x, -y)` otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RigidMotion {
    pub rotation: f64,
    pub translation: Vec2,
    pub orientation: Orientation,
}

impl Default for RigidMotion {
    fn default() -> Self {
        Self::identity()
    }
}

impl RigidMotion {
    pub fn identity() -> Self {
        RigidMotion {
            rotation: 0.0,
            translation: [0.0, 0.0],
            orientation: Orientation::Preserving,
        }
    }

    pub fn rotation(angle: f64) -> Self {
        RigidMotion {
            rotation: angle,
            ..Self::identity()
        }
    }

    pub fn translation(w: Vec2) -> Self {
        RigidMotion {
            translation: w,
            ..Self::identity()
        }
    }

    /// Rotation by `angle` about `center`.
    pub fn rotation_about(angle: f64, center: Vec2) -> Self {
        Self::translation(center)
            .compose(&Self::rotation(angle))
            .compose(&Self::translation([-center[0], -center[1]]))
    }

    /// Reflection about the x axis, `(x, y) -> (x, -y)`.
    pub fn reflection_x_axis() -> Self {
        RigidMotion {
            orientation: Orientation::Reversing,
            ..Self::identity()
        }
    }

    /// Reflection about the line through `point` with direction angle `angle`.
    pub fn reflection_about_line(point: Vec2, angle: f64) -> Self {
        Self::translation(point)
            .compose(&Self::rotation(angle))
            .compose(&Self::reflection_x_axis())
            .compose(&Self::rotation(-angle))
            .compose(&Self::translation([-point[0], -point[1]]))
    }

    /// Linear part applied to a vector.
    pub fn apply_vector(&self, v: Vec2) -> Vec2 {
        let vy = self.orientation.sign() * v[1];
        let (s, c) = self.rotation.sin_cos();
        [c * v[0] - s * vy, s * v[0] + c * vy]
    }

    pub fn apply_point(&self, p: Vec2) -> Vec2 {
        let q = self.apply_vector(p);
        [q[0] + self.translation[0], q[1] + self.translation[1]]
    }

    /// Image of a direction angle; not wrapped, so continuous angle
    /// histories stay continuous.
    #[inline]
    pub fn apply_angle(&self, theta: f64) -> f64 {
        self.rotation + self.orientation.sign() * theta
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &RigidMotion) -> RigidMotion {
        RigidMotion {
            rotation: self.rotation + self.orientation.sign() * other.rotation,
            translation: self.apply_point(other.translation),
            orientation: self.orientation.compose(other.orientation),
        }
    }

    pub fn inverse(&self) -> RigidMotion {
        // (R S)^-1 = S^-1 R^-1 = R(-o * rotation) S
        let rotation = -self.orientation.sign() * self.rotation;
        let linear = RigidMotion {
            rotation,
            translation: [0.0, 0.0],
            orientation: self.orientation,
        };
        let t = linear.apply_vector(self.translation);
        RigidMotion {
            translation: [-t[0], -t[1]],
            ..linear
        }
    }
}

/// Maps a placement to the unit tangent bundle model: back wheel position and
/// unit frame direction.
pub fn to_st_model(p: &ConfigPoint, ell: BikeLength) -> (Vec2, Vec2) {
    (p.back(ell), p.direction())
}

/// Inverse of [`to_st_model`]: `f = b + ell v`.
pub fn from_st_model(back: Vec2, v: Vec2, ell: BikeLength) -> ConfigPoint {
    let l = ell.get();
    ConfigPoint::new(back[0] + l * v[0], back[1] + l * v[1], v[1].atan2(v[0]))
}

/// Flips the frame about the back wheel: `(b, f) -> (b, 2b - f)`.
pub fn flip(p: &ConfigPoint, ell: BikeLength) -> ConfigPoint {
    let l2 = 2.0 * ell.get();
    let v = p.direction();
    let theta = if p.theta > 0.0 { p.theta - PI } else { p.theta + PI };
    ConfigPoint {
        x: p.x - l2 * v[0],
        y: p.y - l2 * v[1],
        theta,
    }
}

/// The same flip computed in the unit tangent bundle model, where it is
/// `(b, v) -> (b, -v)`.
pub fn flip_st(p: &ConfigPoint, ell: BikeLength) -> ConfigPoint {
    let (b, v) = to_st_model(p, ell);
    from_st_model(b, [-v[0], -v[1]], ell)
}

/// Lifts a plane isometry to the configuration space, moving both wheels.
pub fn act(g: &RigidMotion, p: &ConfigPoint) -> ConfigPoint {
    let f = g.apply_point(p.front());
    ConfigPoint::new(f[0], f[1], g.apply_angle(p.theta))
}

/// Contact form `d theta - cos theta dy + sin theta dx` scaled for a frame of
/// length `ell`, evaluated on a tangent vector `(dx, dy, dtheta)`.
pub fn contact_form(theta: f64, ell: BikeLength, velocity: [f64; 3]) -> f64 {
    let (s, c) = theta.sin_cos();
    ell.get() * velocity[2] - c * velocity[1] + s * velocity[0]
}

/// "Straight ahead" field of the tangent bundle model, pushed to `(x, y, theta)`
/// coordinates: both wheels move along the frame.
pub fn straight_ahead(p: &ConfigPoint) -> [f64; 3] {
    let v = p.direction();
    [v[0], v[1], 0.0]
}

/// "Turn" field: the back wheel stays put and the front wheel circles it.
pub fn turn(p: &ConfigPoint, ell: BikeLength) -> [f64; 3] {
    let v = p.direction();
    [-ell.get() * v[1], ell.get() * v[0], 1.0]
}

/// Sub-Riemannian norm of a horizontal vector: the speed of the front wheel.
pub fn horizontal_norm(velocity: [f64; 3]) -> f64 {
    velocity[0].hypot(velocity[1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ell(l: f64) -> BikeLength {
        BikeLength::new(l).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn bike_length_rejects_nonpositive() {
        assert!(BikeLength::new(0.0).is_err());
        assert!(BikeLength::new(-1.0).is_err());
        assert!(BikeLength::new(f64::NAN).is_err());
        assert_eq!(BikeLength::default().get(), 1.0);
    }

    #[test]
    fn angles_normalize_into_half_open_interval() {
        assert_eq!(normalize_angle(PI), PI);
        assert_eq!(normalize_angle(-PI), PI);
        assert!(close(normalize_angle(3.0 * PI / 2.0), -PI / 2.0, 1e-15));
        assert_eq!(normalize_angle(-1e-300), -1e-300);
        assert_eq!(ConfigPoint::new(0.0, 0.0, 7.0).theta(), normalize_angle(7.0));
    }

    #[test]
    fn st_model_examples() {
        let (b, v) = to_st_model(&ConfigPoint::new(0.0, 0.0, 0.0), ell(1.0));
        assert_eq!(b, [-1.0, 0.0]);
        assert_eq!(v, [1.0, 0.0]);

        let (b, v) = to_st_model(&ConfigPoint::new(0.0, 0.0, PI / 2.0), ell(1.0));
        assert!(close(b[0], 0.0, 1e-16) && close(b[1], -1.0, 1e-16));
        assert!(close(v[0], 0.0, 1e-16) && close(v[1], 1.0, 1e-16));

        let (b, v) = to_st_model(&ConfigPoint::new(2.0, 3.0, PI), ell(2.0));
        assert!(close(b[0], 4.0, 1e-15) && close(b[1], 3.0, 1e-15));
        assert!(close(v[0], -1.0, 1e-16) && close(v[1], 0.0, 1e-15));
    }

    #[test]
    fn flip_examples() {
        let q = flip(&ConfigPoint::new(0.0, 0.0, 0.0), ell(1.0));
        assert_eq!((q.x, q.y, q.theta()), (-2.0, 0.0, PI));
        let p = ConfigPoint::new(0.3, -1.2, 2.5);
        let q = flip(&p, ell(1.5));
        let (b0, b1) = (p.back(ell(1.5)), q.back(ell(1.5)));
        assert!(dist(b0, b1) < 1e-15);
        let twice = flip(&q, ell(1.5));
        assert!(twice.distance_to(&p) < 1e-15);
    }

    #[test]
    fn flip_agrees_with_tangent_bundle_flip() {
        for k in 0..50 {
            let theta = -3.1 + 0.13 * k as f64;
            let p = ConfigPoint::new(0.7 * k as f64 - 3.0, 1.1, theta);
            let a = flip(&p, ell(0.8));
            let b = flip_st(&p, ell(0.8));
            assert!(a.distance_to(&b) < 1e-14, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn act_examples() {
        let p = ConfigPoint::new(1.3, -0.4, 0.9);
        assert_eq!(act(&RigidMotion::identity(), &p), p);

        let q = act(&RigidMotion::reflection_x_axis(), &p);
        assert_eq!((q.x, q.y, q.theta()), (1.3, 0.4, -0.9));

        let q = act(&RigidMotion::rotation(PI / 2.0), &ConfigPoint::new(1.0, 0.0, 0.0));
        assert!(close(q.x, 0.0, 1e-15) && close(q.y, 1.0, 1e-15));
        assert!(close(q.theta(), PI / 2.0, 1e-15));
    }

    #[test]
    fn act_moves_back_wheel_by_the_same_isometry() {
        let l = ell(1.7);
        let motions = [
            RigidMotion::rotation_about(0.8, [1.0, -2.0]),
            RigidMotion::reflection_about_line([0.5, 0.2], 1.1),
            RigidMotion::reflection_x_axis().compose(&RigidMotion::translation([3.0, 1.0])),
        ];
        let p = ConfigPoint::new(-0.6, 2.2, -2.0);
        for g in &motions {
            let q = act(g, &p);
            let expected = g.apply_point(p.back(l));
            assert!(dist(q.back(l), expected) < 1e-14);
        }
    }

    #[test]
    fn reflection_about_line_fixes_the_line() {
        let g = RigidMotion::reflection_about_line([-1.0, 0.0], PI / 2.0);
        let p = g.apply_point([-1.0, 5.0]);
        assert!(dist(p, [-1.0, 5.0]) < 1e-14);
        let q = g.apply_point([0.0, 0.0]);
        assert!(dist(q, [-2.0, 0.0]) < 1e-14);
    }

    #[test]
    fn inverse_undoes_motion() {
        let g = RigidMotion {
            rotation: 0.7,
            translation: [1.0, -3.0],
            orientation: Orientation::Reversing,
        };
        let id = g.compose(&g.inverse());
        let p = [0.3, 0.9];
        assert!(dist(id.apply_point(p), p) < 1e-14);
        assert!(dist(g.inverse().compose(&g).apply_point(p), p) < 1e-14);
    }

    #[test]
    fn tangent_bundle_fields_are_horizontal_and_orthogonal() {
        let l = ell(1.3);
        for k in 0..12 {
            let p = ConfigPoint::new(0.1 * k as f64, -0.5, -3.0 + 0.5 * k as f64);
            let s = straight_ahead(&p);
            let t = turn(&p, l);
            assert!(contact_form(p.theta(), l, s).abs() < 1e-15);
            assert!(contact_form(p.theta(), l, t).abs() < 1e-15);
            assert!(close(horizontal_norm(s), 1.0, 1e-15));
            assert!(close(horizontal_norm(t), l.get(), 1e-15));
            assert!((s[0] * t[0] + s[1] * t[1]).abs() < 1e-15);
        }
    }
}
