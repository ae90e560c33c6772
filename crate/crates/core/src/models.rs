//! Maps between the representations of hyperbolic space and their 3D
//! embeddings.
//!
//! The upper half-plane is the hub: the pseudosphere reaches it through
//! `T_P`, the Poincaré disc through the inversion-and-conjugation map `T_D`,
//! and the Beltrami hemisphere and Klein disc hang off the Poincaré disc.

use std::f64::consts::{SQRT_2, TAU};

use crate::cplx::{invert_in_circle, Circle, ExtComplex, Mobius, C64};
use crate::error::{Error, Result};

/// Slack allowed past the unit circle for closure points of the disc models.
pub const BOUNDARY_SLACK: f64 = 1e-9;

/// Coordinates on the pseudosphere: rim angle and tractrix arclength above
/// the rim. Both may leave the physical surface (Beltrami unrolling, or
/// continuation below the rim).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PseudoCoord {
    pub theta: f64,
    pub sigma: f64,
}

impl PseudoCoord {
    pub fn new(theta: f64, sigma: f64) -> Self {
        PseudoCoord { theta, sigma }
    }

    pub fn on_physical_surface(&self) -> bool {
        self.sigma >= 0.0
    }

    pub fn on_visible_roll(&self) -> bool {
        (0.0..TAU).contains(&self.theta)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpherePoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl SpherePoint {
    /// Projects a nonzero vector radially onto the unit sphere.
    pub fn normalize(x: f64, y: f64, z: f64) -> Self {
        let n = (x * x + y * y + z * z).sqrt();
        SpherePoint { x: x / n, y: y / n, z: z / n }
    }

    pub const NORTH: SpherePoint = SpherePoint { x: 0.0, y: 0.0, z: 1.0 };
    pub const SOUTH: SpherePoint = SpherePoint { x: 0.0, y: 0.0, z: -1.0 };

    fn xy(&self) -> C64 {
        C64::new(self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Point3 { x, y, z }
    }

    pub fn sub(self, o: Point3) -> Point3 {
        Point3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }

    pub fn cross(self, o: Point3) -> Point3 {
        Point3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }
}

/// Stereographic projection from the north pole onto the unit sphere.
pub fn stereo_to_sphere(z: ExtComplex) -> SpherePoint {
    match z {
        ExtComplex::Infinity => SpherePoint::NORTH,
        ExtComplex::Finite(z) => {
            let m = z.norm_sqr();
            let xy = 2.0 * z / (1.0 + m);
            SpherePoint {
                x: xy.re,
                y: xy.im,
                z: (m - 1.0) / (m + 1.0),
            }
        }
    }
}

/// Inverse stereographic projection; the north pole goes to infinity.
pub fn sphere_to_plane(p: SpherePoint) -> ExtComplex {
    let den = 1.0 - p.z;
    if den <= 0.0 {
        return ExtComplex::Infinity;
    }
    // near the north pole 1 − Z cancels; use (X+iY)(1+Z)/(X²+Y²) there
    if p.z > 0.0 {
        let xy = p.xy();
        return ExtComplex::Finite(xy * (1.0 + p.z) / xy.norm_sqr());
    }
    ExtComplex::Finite(p.xy() / den)
}

/// `T_P(θ, σ) = θ + e^σ i`.
pub fn pseudo_to_halfplane(p: PseudoCoord) -> C64 {
    C64::new(p.theta, p.sigma.exp())
}

pub fn halfplane_to_pseudo(z: C64) -> Result<PseudoCoord> {
    if !(z.im > 0.0) {
        return Err(Error::out_of_domain("halfplane_to_pseudo", z, "Im z > 0"));
    }
    Ok(PseudoCoord {
        theta: z.re,
        sigma: z.im.ln(),
    })
}

/// The circle `K` of radius √2 about −i.
fn circle_k() -> Circle {
    Circle::new(C64::new(0.0, -1.0), SQRT_2).expect("constant circle")
}

/// Inversion in `K`; on its own it is the anticonformal half-plane-to-disc map.
pub fn invert_in_k(z: ExtComplex) -> ExtComplex {
    invert_in_circle(&circle_k(), z)
}

/// The half-plane/disc correspondence, optionally without the conjugation
/// step (both directions then reduce to inversion in `K`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiscChart {
    pub conjugate: bool,
}

impl Default for DiscChart {
    fn default() -> Self {
        DiscChart { conjugate: true }
    }
}

impl DiscChart {
    pub fn without_conjugation() -> Self {
        DiscChart { conjugate: false }
    }

    pub fn from_omit_flag(conjugation_omitted: bool) -> Self {
        DiscChart { conjugate: !conjugation_omitted }
    }

    /// Half-plane to disc: invert in `K`, then conjugate.
    pub fn to_disc(&self, z: ExtComplex) -> ExtComplex {
        let w = invert_in_k(z);
        if self.conjugate {
            w.conj()
        } else {
            w
        }
    }

    /// Disc to half-plane: conjugate, then invert in `K`.
    pub fn to_halfplane(&self, w: ExtComplex) -> ExtComplex {
        let w = if self.conjugate { w.conj() } else { w };
        invert_in_k(w)
    }
}

/// `T_D`, computed as conj ∘ inversion in `K`.
pub fn halfplane_to_disc(z: ExtComplex) -> ExtComplex {
    DiscChart::default().to_disc(z)
}

/// `T_D⁻¹`, computed as inversion in `K` ∘ conj. `i` maps to infinity.
pub fn disc_to_halfplane(w: ExtComplex) -> ExtComplex {
    DiscChart::default().to_halfplane(w)
}

/// Closed form of `T_D` as a Möbius map, `(iz + 1)/(z + i)`.
pub fn cayley_mobius() -> Mobius {
    Mobius::new(
        C64::new(0.0, 1.0),
        C64::new(1.0, 0.0),
        C64::new(1.0, 0.0),
        C64::new(0.0, 1.0),
    )
    .expect("nondegenerate")
}

fn check_in_disc(what: &'static str, w: C64) -> Result<()> {
    if w.norm() > 1.0 + BOUNDARY_SLACK || !w.norm().is_finite() {
        return Err(Error::out_of_domain(what, w, "|w| ≤ 1"));
    }
    Ok(())
}

/// `T_B`: lower stereographic projection (from the south pole) of the disc
/// onto the upper hemisphere.
pub fn disc_to_hemisphere(w: C64) -> Result<SpherePoint> {
    check_in_disc("disc_to_hemisphere", w)?;
    let m = w.norm_sqr();
    let xy = 2.0 * w / (1.0 + m);
    Ok(SpherePoint {
        x: xy.re,
        y: xy.im,
        z: ((1.0 - m) / (1.0 + m)).max(0.0),
    })
}

pub fn hemisphere_to_disc(p: SpherePoint) -> Result<C64> {
    if p.z < -BOUNDARY_SLACK {
        return Err(Error::out_of_domain("hemisphere_to_disc", p.z, "Z ≥ 0"));
    }
    Ok(p.xy() / (1.0 + p.z.max(0.0)))
}

/// `T_K`: vertical projection of the hemisphere onto the Klein disc.
pub fn hemisphere_to_klein(p: SpherePoint) -> C64 {
    p.xy()
}

pub fn klein_to_hemisphere(k: C64) -> Result<SpherePoint> {
    check_in_disc("klein_to_hemisphere", k)?;
    Ok(SpherePoint {
        x: k.re,
        y: k.im,
        z: (1.0 - k.norm_sqr()).max(0.0).sqrt(),
    })
}

/// Poincaré disc to Klein disc, `w ↦ 2w/(1 + |w|²)`.
pub fn disc_to_klein(w: C64) -> Result<C64> {
    disc_to_hemisphere(w).map(hemisphere_to_klein)
}

pub fn klein_to_disc(k: C64) -> Result<C64> {
    klein_to_hemisphere(k).and_then(hemisphere_to_disc)
}

/// Height of the tractrix at arclength `sigma` above the rim, for a rim of
/// radius 1. The profile radius is `e^{−σ}`.
fn tractrix_height(sigma: f64) -> f64 {
    sigma.exp().acosh() - (-(-2.0 * sigma).exp_m1()).sqrt()
}

/// Pseudosphere with unit rim radius sitting at height 0, opening along +z.
///
/// `sigma` is the arclength along the generating tractrix, so the profile
/// radius is `e^{−σ}` and `T_P` is an isometry onto its image.
pub fn embed_pseudosphere(p: PseudoCoord) -> Result<Point3> {
    if !(p.sigma >= 0.0) {
        return Err(Error::out_of_domain("embed_pseudosphere", p.sigma, "σ ≥ 0"));
    }
    let r = (-p.sigma).exp();
    Ok(Point3::new(r * p.theta.cos(), r * p.theta.sin(), tractrix_height(p.sigma)))
}

/// Dini's surface: the pseudosphere with `θ` unrolled and lifted by
/// `twist·θ` along the axis.
pub fn embed_dini(p: PseudoCoord, twist: f64) -> Result<Point3> {
    let mut q = embed_pseudosphere(p)?;
    q.z += twist * p.theta;
    Ok(q)
}

/// Hyperbolic length density `1/Im z` of the half-plane metric.
pub fn metric_scale(z: C64) -> Result<f64> {
    if !(z.im > 0.0) {
        return Err(Error::out_of_domain("metric_scale", z, "Im z > 0"));
    }
    Ok(1.0 / z.im)
}
