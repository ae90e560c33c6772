//! Extended complex numbers, generalized circles and Möbius maps.
//!
//! Everything here is a plain `Copy` value. Finite arithmetic is delegated to
//! [`num_complex::Complex64`]; [`ExtComplex`] adds the single unsigned point at
//! infinity of the Riemann sphere.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// A point of the extended complex plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ExtComplex {
    Finite(C64),
    Infinity,
}

impl ExtComplex {
    pub const ZERO: ExtComplex = ExtComplex::Finite(C64::new(0.0, 0.0));
    pub const ONE: ExtComplex = ExtComplex::Finite(C64::new(1.0, 0.0));
    pub const I: ExtComplex = ExtComplex::Finite(C64::new(0.0, 1.0));

    pub fn new(re: f64, im: f64) -> Self {
        ExtComplex::Finite(C64::new(re, im))
    }

    pub fn finite(self) -> Option<C64> {
        match self {
            ExtComplex::Finite(z) => Some(z),
            ExtComplex::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, ExtComplex::Infinity)
    }

    pub fn conj(self) -> Self {
        match self {
            ExtComplex::Finite(z) => ExtComplex::Finite(z.conj()),
            ExtComplex::Infinity => ExtComplex::Infinity,
        }
    }

    /// Chordal distance on the unit Riemann sphere; handles infinity uniformly.
    pub fn chordal_distance(self, other: ExtComplex) -> f64 {
        match (self, other) {
            (ExtComplex::Infinity, ExtComplex::Infinity) => 0.0,
            (ExtComplex::Finite(z), ExtComplex::Infinity)
            | (ExtComplex::Infinity, ExtComplex::Finite(z)) => 2.0 / (1.0 + z.norm_sqr()).sqrt(),
            (ExtComplex::Finite(z), ExtComplex::Finite(w)) => {
                2.0 * (z - w).norm() / ((1.0 + z.norm_sqr()).sqrt() * (1.0 + w.norm_sqr()).sqrt())
            }
        }
    }
}

impl From<C64> for ExtComplex {
    fn from(z: C64) -> Self {
        ExtComplex::Finite(z)
    }
}

impl From<f64> for ExtComplex {
    fn from(x: f64) -> Self {
        ExtComplex::Finite(C64::new(x, 0.0))
    }
}

impl fmt::Display for ExtComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtComplex::Finite(z) => write!(f, "{z}"),
            ExtComplex::Infinity => f.write_str("∞"),
        }
    }
}

/// Reduces any finite angle into `[0, 2π)`.
pub fn wrap_angle(angle: f64) -> f64 {
    let a = angle.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if a >= TAU {
        0.0
    } else {
        a
    }
}

/// Argument of a nonzero finite point, on the branch `[0, 2π)`.
pub fn arg2pi(z: ExtComplex) -> Result<f64> {
    match z {
        ExtComplex::Infinity => Err(Error::UndefinedArgument("infinity")),
        ExtComplex::Finite(w) if w.re == 0.0 && w.im == 0.0 => Err(Error::UndefinedArgument("zero")),
        ExtComplex::Finite(w) => Ok(wrap_angle(w.im.atan2(w.re))),
    }
}

/// Euclidean circle with a finite center and positive radius.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Circle {
    center: C64,
    radius: f64,
}

impl Circle {
    pub fn new(center: C64, radius: f64) -> Result<Self> {
        if !(center.re.is_finite() && center.im.is_finite()) {
            return Err(Error::InvalidCircle(format!("center {center} is not finite")));
        }
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidCircle(format!("radius {radius} must be positive")));
        }
        Ok(Circle { center, radius })
    }

    pub fn center(&self) -> C64 {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }
}

/// Straight line through `base` making angle `angle ∈ [0, π)` with the real axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Line {
    base: C64,
    angle: f64,
}

impl Line {
    pub fn new(base: C64, angle: f64) -> Result<Self> {
        if !(base.re.is_finite() && base.im.is_finite() && angle.is_finite()) {
            return Err(Error::InvalidCircle(format!("line through {base} at {angle}")));
        }
        let mut angle = angle.rem_euclid(PI);
        if angle >= PI {
            angle = 0.0;
        }
        Ok(Line { base, angle })
    }

    /// The line `Re z = x`.
    pub fn vertical(x: f64) -> Self {
        Line {
            base: C64::new(x, 0.0),
            angle: FRAC_PI_2,
        }
    }

    pub fn base(&self) -> C64 {
        self.base
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    /// `e^{2iφ}`, exact for the axis-parallel cases.
    fn double_angle_rotor(&self) -> C64 {
        if self.angle == 0.0 {
            C64::new(1.0, 0.0)
        } else if self.angle == FRAC_PI_2 {
            C64::new(-1.0, 0.0)
        } else {
            C64::from_polar(1.0, 2.0 * self.angle)
        }
    }

    fn direction(&self) -> C64 {
        if self.angle == FRAC_PI_2 {
            C64::new(0.0, 1.0)
        } else {
            C64::from_polar(1.0, self.angle)
        }
    }
}

/// A Euclidean circle or straight line.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GenCircle {
    Circle(Circle),
    Line(Line),
}

impl GenCircle {
    pub fn circle(center: C64, radius: f64) -> Result<Self> {
        Circle::new(center, radius).map(GenCircle::Circle)
    }

    pub fn line(base: C64, angle: f64) -> Result<Self> {
        Line::new(base, angle).map(GenCircle::Line)
    }

    pub fn vertical(x: f64) -> Self {
        GenCircle::Line(Line::vertical(x))
    }

    /// Reflection (inversion for circles) in this curve.
    pub fn reflect(&self, z: ExtComplex) -> ExtComplex {
        match self {
            GenCircle::Circle(c) => invert_in_circle(c, z),
            GenCircle::Line(l) => reflect_in_line(l, z),
        }
    }

    /// Coefficients `[a, b, c, d]` of the reflection written as
    /// `z ↦ (a·z̄ + b) / (c·z̄ + d)`.
    pub(crate) fn antiholomorphic_matrix(&self) -> [C64; 4] {
        match self {
            GenCircle::Circle(c) => {
                let q = c.center;
                [
                    q,
                    C64::new(c.radius * c.radius - q.norm_sqr(), 0.0),
                    C64::new(1.0, 0.0),
                    -q.conj(),
                ]
            }
            GenCircle::Line(l) => {
                let rot = l.double_angle_rotor();
                [rot, l.base - rot * l.base.conj(), C64::new(0.0, 0.0), C64::new(1.0, 0.0)]
            }
        }
    }

    /// Point on the curve for parameter `t ∈ [0, 1)`. Lines are parametrized
    /// through the whole real line by `tan`, so `t = 0.5` is the base point.
    pub fn point_at(&self, t: f64) -> C64 {
        match self {
            GenCircle::Circle(c) => c.center + C64::from_polar(c.radius, TAU * t),
            GenCircle::Line(l) => l.base + l.direction() * (PI * (t - 0.5)).tan(),
        }
    }

    /// Euclidean distance from a finite point to the curve.
    pub fn distance(&self, z: C64) -> f64 {
        match self {
            GenCircle::Circle(c) => ((z - c.center).norm() - c.radius).abs(),
            GenCircle::Line(l) => {
                let d = z - l.base;
                let u = l.direction();
                (u.re * d.im - u.im * d.re).abs()
            }
        }
    }

    /// Whether two curves describe the same point set up to `tol`.
    pub fn same_curve(&self, other: &GenCircle, tol: f64) -> bool {
        match (self, other) {
            (GenCircle::Circle(a), GenCircle::Circle(b)) => {
                (a.center - b.center).norm() <= tol && (a.radius - b.radius).abs() <= tol
            }
            (GenCircle::Line(a), GenCircle::Line(b)) => {
                let da = (a.angle - b.angle).abs();
                (da <= tol || (PI - da) <= tol) && other.distance(a.base) <= tol
            }
            _ => false,
        }
    }
}

/// Inversion `z ↦ c + r² / conj(z − c)`; the center and infinity swap.
pub fn invert_in_circle(circle: &Circle, z: ExtComplex) -> ExtComplex {
    match z {
        ExtComplex::Infinity => ExtComplex::Finite(circle.center),
        ExtComplex::Finite(z) => {
            let d = (z - circle.center).conj();
            if d.re == 0.0 && d.im == 0.0 {
                ExtComplex::Infinity
            } else {
                ExtComplex::Finite(circle.center + (circle.radius * circle.radius) / d)
            }
        }
    }
}

/// Mirror image in a straight line, `z ↦ p + e^{2iφ}·conj(z − p)`.
pub fn reflect_in_line(line: &Line, z: ExtComplex) -> ExtComplex {
    match z {
        ExtComplex::Infinity => ExtComplex::Infinity,
        ExtComplex::Finite(z) => {
            ExtComplex::Finite(line.base + line.double_angle_rotor() * (z - line.base).conj())
        }
    }
}

/// `z ↦ (az + b) / (cz + d)` with `ad − bc ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mobius {
    a: C64,
    b: C64,
    c: C64,
    d: C64,
}

/// Scaled determinants at or below this are rejected.
pub const DEGENERACY_TOLERANCE: f64 = 1e-14;

impl Mobius {
    pub fn new(a: C64, b: C64, c: C64, d: C64) -> Result<Self> {
        let coeffs = [a, b, c, d];
        if coeffs.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::DegenerateMobius(f64::NAN));
        }
        let scale = coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if scale == 0.0 {
            return Err(Error::DegenerateMobius(0.0));
        }
        let scaled_det = ((a / scale) * (d / scale) - (b / scale) * (c / scale)).norm();
        if scaled_det <= DEGENERACY_TOLERANCE {
            return Err(Error::DegenerateMobius(scaled_det));
        }
        Ok(Mobius { a, b, c, d })
    }

    /// Real-coefficient convenience constructor.
    pub fn real(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        Self::new(C64::new(a, 0.0), C64::new(b, 0.0), C64::new(c, 0.0), C64::new(d, 0.0))
    }

    pub fn identity() -> Self {
        Mobius {
            a: C64::new(1.0, 0.0),
            b: C64::new(0.0, 0.0),
            c: C64::new(0.0, 0.0),
            d: C64::new(1.0, 0.0),
        }
    }

    pub fn coefficients(&self) -> [C64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn det(&self) -> C64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> C64 {
        self.a + self.d
    }

    /// Same map, rescaled so that `det = 1` (the square-root branch fixes the sign).
    pub fn normalized(&self) -> Self {
        let k = self.det().sqrt();
        Mobius {
            a: self.a / k,
            b: self.b / k,
            c: self.c / k,
            d: self.d / k,
        }
    }

    pub fn apply(&self, z: ExtComplex) -> ExtComplex {
        match z {
            ExtComplex::Infinity => {
                if self.c.re == 0.0 && self.c.im == 0.0 {
                    ExtComplex::Infinity
                } else {
                    ExtComplex::Finite(self.a / self.c)
                }
            }
            ExtComplex::Finite(z) => {
                let den = self.c * z + self.d;
                if den.re == 0.0 && den.im == 0.0 {
                    ExtComplex::Infinity
                } else {
                    ExtComplex::Finite((self.a * z + self.b) / den)
                }
            }
        }
    }

    /// Applies to a finite point, returning `None` at the pole.
    pub fn apply_finite(&self, z: C64) -> Option<C64> {
        self.apply(ExtComplex::Finite(z)).finite()
    }

    /// `self ∘ inner`: the result applies `inner` first.
    pub fn compose(&self, inner: &Mobius) -> Mobius {
        Mobius {
            a: self.a * inner.a + self.b * inner.c,
            b: self.a * inner.b + self.b * inner.d,
            c: self.c * inner.a + self.d * inner.c,
            d: self.c * inner.b + self.d * inner.d,
        }
    }

    pub fn inverse(&self) -> Mobius {
        Mobius {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// Whether the map is the identity up to projective scaling.
    pub fn is_identity(&self, tol: f64) -> bool {
        let scale = [self.a, self.b, self.c, self.d]
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        self.b.norm() <= tol * scale
            && self.c.norm() <= tol * scale
            && (self.a - self.d).norm() <= tol * scale
    }
}

impl fmt::Display for Mobius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z ↦ (({})z + {}) / (({})z + {})", self.a, self.b, self.c, self.d)
    }
}

/// `outer ∘ inner`.
pub fn mobius_compose(outer: &Mobius, inner: &Mobius) -> Mobius {
    outer.compose(inner)
}

pub fn mobius_apply(m: &Mobius, z: ExtComplex) -> ExtComplex {
    m.apply(z)
}
