//! Prescribed front-wheel curves.

use crate::error::{BikeError, Result};
use crate::geometry::{unit, Vec2};

/// A parametrized plane curve with its derivative, ridden by the front wheel.
pub trait FrontTrack {
    fn position(&self, t: f64) -> Vec2;
    fn velocity(&self, t: f64) -> Vec2;
    /// Parameter interval `[t0, t1]`.
    fn domain(&self) -> (f64, f64);
    fn is_arc_length(&self) -> bool {
        false
    }
}

impl<T: FrontTrack + ?Sized> FrontTrack for &T {
    fn position(&self, t: f64) -> Vec2 {
        (**self).position(t)
    }
    fn velocity(&self, t: f64) -> Vec2 {
        (**self).velocity(t)
    }
    fn domain(&self) -> (f64, f64) {
        (**self).domain()
    }
    fn is_arc_length(&self) -> bool {
        (**self).is_arc_length()
    }
}

impl<T: FrontTrack + ?Sized> FrontTrack for Box<T> {
    fn position(&self, t: f64) -> Vec2 {
        (**self).position(t)
    }
    fn velocity(&self, t: f64) -> Vec2 {
        (**self).velocity(t)
    }
    fn domain(&self) -> (f64, f64) {
        (**self).domain()
    }
    fn is_arc_length(&self) -> bool {
        (**self).is_arc_length()
    }
}

/// Unit-speed straight line `origin + t (cos heading, sin heading)`.
#[derive(Debug, Clone, Copy)]
pub struct Line {
    pub origin: Vec2,
    pub heading: f64,
    pub start: f64,
    pub end: f64,
}

impl Line {
    /// The x axis ridden eastwards, `c(t) = (t, 0)` on `[start, end]`.
    pub fn x_axis(start: f64, end: f64) -> Self {
        Line {
            origin: [0.0, 0.0],
            heading: 0.0,
            start,
            end,
        }
    }
}

impl FrontTrack for Line {
    fn position(&self, t: f64) -> Vec2 {
        let u = unit(self.heading);
        [self.origin[0] + t * u[0], self.origin[1] + t * u[1]]
    }
    fn velocity(&self, _t: f64) -> Vec2 {
        unit(self.heading)
    }
    fn domain(&self) -> (f64, f64) {
        (self.start, self.end)
    }
    fn is_arc_length(&self) -> bool {
        true
    }
}

/// Unit-speed circle, counterclockwise for positive radius orientation.
#[derive(Debug, Clone, Copy)]
pub struct Circle {
    pub center: Vec2,
    pub radius: f64,
    /// Polar angle of the point at `t = 0`.
    pub phase: f64,
    pub clockwise: bool,
    pub start: f64,
    pub end: f64,
}

impl Circle {
    pub fn unit(turns: f64) -> Self {
        Circle {
            center: [0.0, 0.0],
            radius: 1.0,
            phase: 0.0,
            clockwise: false,
            start: 0.0,
            end: turns * std::f64::consts::TAU,
        }
    }

    fn angle(&self, t: f64) -> f64 {
        let w = if self.clockwise { -1.0 } else { 1.0 };
        self.phase + w * t / self.radius
    }
}

impl FrontTrack for Circle {
    fn position(&self, t: f64) -> Vec2 {
        let u = unit(self.angle(t));
        [
            self.center[0] + self.radius * u[0],
            self.center[1] + self.radius * u[1],
        ]
    }
    fn velocity(&self, t: f64) -> Vec2 {
        let u = unit(self.angle(t));
        if self.clockwise {
            [u[1], -u[0]]
        } else {
            [-u[1], u[0]]
        }
    }
    fn domain(&self) -> (f64, f64) {
        (self.start, self.end)
    }
    fn is_arc_length(&self) -> bool {
        true
    }
}

/// A constant curve; never immersed, kept for exercising error paths.
#[derive(Debug, Clone, Copy)]
pub struct Stationary {
    pub point: Vec2,
    pub start: f64,
    pub end: f64,
}

impl FrontTrack for Stationary {
    fn position(&self, _t: f64) -> Vec2 {
        self.point
    }
    fn velocity(&self, _t: f64) -> Vec2 {
        [0.0, 0.0]
    }
    fn domain(&self) -> (f64, f64) {
        (self.start, self.end)
    }
}

/// Smooth curve `c(t) = (t + sum a_k sin(k w t + p_k), sum b_k sin(k w t + q_k))`.
#[derive(Debug, Clone)]
pub struct FourierTrack {
    pub x_terms: Vec<(f64, f64)>,
    pub y_terms: Vec<(f64, f64)>,
    pub frequency: f64,
    pub start: f64,
    pub end: f64,
}

impl FourierTrack {
    /// Draws a random immersed curve from `rng`. The `x` perturbation is small
    /// enough that `x'(t) >= 0.4` everywhere.
    pub fn random<R: rand::Rng>(rng: &mut R, length: f64) -> Self {
        let modes = 3;
        let frequency = rng.gen_range(0.6..1.6);
        let mut x_terms = Vec::with_capacity(modes);
        let mut y_terms = Vec::with_capacity(modes);
        for k in 1..=modes {
            let kw = k as f64 * frequency;
            let ax = rng.gen_range(-0.2..0.2) / (modes as f64 * kw);
            let ay = rng.gen_range(-1.2..1.2) / kw;
            x_terms.push((ax, rng.gen_range(0.0..std::f64::consts::TAU)));
            y_terms.push((ay, rng.gen_range(0.0..std::f64::consts::TAU)));
        }
        FourierTrack {
            x_terms,
            y_terms,
            frequency,
            start: 0.0,
            end: length,
        }
    }

    fn series(&self, terms: &[(f64, f64)], t: f64) -> (f64, f64) {
        terms.iter().enumerate().fold((0.0, 0.0), |(v, d), (i, &(amp, ph))| {
            let kw = (i + 1) as f64 * self.frequency;
            let (s, c) = (kw * t + ph).sin_cos();
            (v + amp * s, d + amp * kw * c)
        })
    }
}

impl FrontTrack for FourierTrack {
    fn position(&self, t: f64) -> Vec2 {
        [t + self.series(&self.x_terms, t).0, self.series(&self.y_terms, t).0]
    }
    fn velocity(&self, t: f64) -> Vec2 {
        [1.0 + self.series(&self.x_terms, t).1, self.series(&self.y_terms, t).1]
    }
    fn domain(&self) -> (f64, f64) {
        (self.start, self.end)
    }
}

/// Rides `first`, then `second` translated so that it starts where `first`
/// ends. The parameter of `second` is shifted to follow on.
pub struct Concat<A, B> {
    first: A,
    second: B,
    offset: Vec2,
    shift: f64,
}

impl<A: FrontTrack, B: FrontTrack> Concat<A, B> {
    pub fn new(first: A, second: B) -> Self {
        let (_, a1) = first.domain();
        let (b0, _) = second.domain();
        let end = first.position(a1);
        let start = second.position(b0);
        Concat {
            offset: [end[0] - start[0], end[1] - start[1]],
            shift: a1 - b0,
            first,
            second,
        }
    }

    fn split(&self) -> f64 {
        self.first.domain().1
    }
}

impl<A: FrontTrack, B: FrontTrack> FrontTrack for Concat<A, B> {
    fn position(&self, t: f64) -> Vec2 {
        if t <= self.split() {
            self.first.position(t)
        } else {
            let p = self.second.position(t - self.shift);
            [p[0] + self.offset[0], p[1] + self.offset[1]]
        }
    }
    fn velocity(&self, t: f64) -> Vec2 {
        if t <= self.split() {
            self.first.velocity(t)
        } else {
            self.second.velocity(t - self.shift)
        }
    }
    fn domain(&self) -> (f64, f64) {
        (self.first.domain().0, self.second.domain().1 + self.shift)
    }
    fn is_arc_length(&self) -> bool {
        self.first.is_arc_length() && self.second.is_arc_length()
    }
}

/// `inner` ridden with parameter `s -> inner(phi(s))`, `phi` increasing.
pub struct Reparametrized<T, F, D> {
    inner: T,
    phi: F,
    phi_prime: D,
    start: f64,
    end: f64,
}

impl<T, F, D> Reparametrized<T, F, D>
where
    T: FrontTrack,
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    /// `start` and `end` are the new parameter bounds; `phi` must map them to
    /// the inner domain.
    pub fn new(inner: T, phi: F, phi_prime: D, start: f64, end: f64) -> Self {
        Reparametrized {
            inner,
            phi,
            phi_prime,
            start,
            end,
        }
    }
}

impl<T, F, D> FrontTrack for Reparametrized<T, F, D>
where
    T: FrontTrack,
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    fn position(&self, s: f64) -> Vec2 {
        self.inner.position((self.phi)(s))
    }
    fn velocity(&self, s: f64) -> Vec2 {
        let v = self.inner.velocity((self.phi)(s));
        let d = (self.phi_prime)(s);
        [d * v[0], d * v[1]]
    }
    fn domain(&self) -> (f64, f64) {
        (self.start, self.end)
    }
}

/// Piecewise cubic Hermite curve through sampled positions and velocities.
#[derive(Debug, Clone)]
pub struct HermiteTrack {
    times: Vec<f64>,
    points: Vec<Vec2>,
    velocities: Vec<Vec2>,
    arc_length: bool,
}

impl HermiteTrack {
    pub fn new(times: Vec<f64>, points: Vec<Vec2>, velocities: Vec<Vec2>) -> Result<Self> {
        if times.len() < 2 || points.len() != times.len() || velocities.len() != times.len() {
            return Err(BikeError::DegenerateInput(
                "hermite track needs at least two matching samples".into(),
            ));
        }
        if times.windows(2).any(|w| w[1] <= w[0]) {
            return Err(BikeError::DegenerateInput(
                "hermite knots must increase".into(),
            ));
        }
        Ok(HermiteTrack {
            times,
            points,
            velocities,
            arc_length: false,
        })
    }

    pub fn with_arc_length(mut self, arc_length: bool) -> Self {
        self.arc_length = arc_length;
        self
    }

    fn segment(&self, t: f64) -> (usize, f64, f64) {
        let n = self.times.len();
        let i = self.times.partition_point(|&k| k <= t).clamp(1, n - 1) - 1;
        let h = self.times[i + 1] - self.times[i];
        (i, (t - self.times[i]) / h, h)
    }
}

impl FrontTrack for HermiteTrack {
    fn position(&self, t: f64) -> Vec2 {
        let (i, u, h) = self.segment(t);
        let (u2, u3) = (u * u, u * u * u);
        let h00 = 2.0 * u3 - 3.0 * u2 + 1.0;
        let h10 = u3 - 2.0 * u2 + u;
        let h01 = -2.0 * u3 + 3.0 * u2;
        let h11 = u3 - u2;
        let (p0, p1) = (self.points[i], self.points[i + 1]);
        let (m0, m1) = (self.velocities[i], self.velocities[i + 1]);
        std::array::from_fn(|k| h00 * p0[k] + h10 * h * m0[k] + h01 * p1[k] + h11 * h * m1[k])
    }

    fn velocity(&self, t: f64) -> Vec2 {
        let (i, u, h) = self.segment(t);
        let u2 = u * u;
        let d00 = 6.0 * u2 - 6.0 * u;
        let d10 = 3.0 * u2 - 4.0 * u + 1.0;
        let d01 = -6.0 * u2 + 6.0 * u;
        let d11 = 3.0 * u2 - 2.0 * u;
        let (p0, p1) = (self.points[i], self.points[i + 1]);
        let (m0, m1) = (self.velocities[i], self.velocities[i + 1]);
        std::array::from_fn(|k| (d00 * p0[k] + d01 * p1[k]) / h + d10 * m0[k] + d11 * m1[k])
    }

    fn domain(&self) -> (f64, f64) {
        (self.times[0], self.times[self.times.len() - 1])
    }

    fn is_arc_length(&self) -> bool {
        self.arc_length
    }
}
