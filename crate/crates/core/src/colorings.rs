//! Color assignments.
//!
//! Every coloring reads a hue angle in `[0, 2π)` off a composite map. The
//! complex phase portrait colors by `arg f(z)`. The hyperbolic colorings
//! instead send each member of a family of parallel geodesics to one color:
//!
//! * pseudosphere: the real part of `f(T_P(p))` is read as a rim angle,
//!   black when it falls outside `[0, 2π]`;
//! * disc, asymptotic family: `arg T_D(Re f(T_D⁻¹(w)))`, constant on the
//!   preimages of vertical lines;
//! * disc, ultra-parallel family: `2·arg(i·T_D(|f(T_D⁻¹(w))|))`, constant on
//!   the preimages of semicircles about 0.
//!
//! The Beltrami and Klein colorings pull the disc colorings back through
//! `T_B⁻¹` and `T_K⁻¹`. Real outputs (`Re`, modulus) are reinterpreted as
//! boundary points of the half-plane before the outer `T_D` is applied.

use std::f64::consts::{PI, TAU};

use crate::cplx::{arg2pi, wrap_angle, ExtComplex, Mobius, C64};
use crate::error::Result;
use crate::models::{
    hemisphere_to_disc, klein_to_disc, klein_to_hemisphere, pseudo_to_halfplane,
    sphere_to_plane, DiscChart, PseudoCoord, SpherePoint,
};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum HueValue {
    Hue(f64),
    Black,
}

impl HueValue {
    /// Hue for any finite angle, wrapped into `[0, 2π)`.
    pub fn hue(angle: f64) -> Self {
        HueValue::Hue(wrap_angle(angle))
    }

    pub fn angle(self) -> Option<f64> {
        match self {
            HueValue::Hue(a) => Some(a),
            HueValue::Black => None,
        }
    }

    pub fn is_black(self) -> bool {
        matches!(self, HueValue::Black)
    }
}

/// Which family of parallel geodesics gets one color per line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LineFamily {
    /// Preimages of vertical lines, all meeting at the point at infinity.
    Asymptotic,
    /// Preimages of semicircles centered at 0.
    UltraParallel,
}

impl LineFamily {
    pub fn other(self) -> Self {
        match self {
            LineFamily::Asymptotic => LineFamily::UltraParallel,
            LineFamily::UltraParallel => LineFamily::Asymptotic,
        }
    }

    /// `1` or `2`.
    pub fn index(self) -> u8 {
        match self {
            LineFamily::Asymptotic => 1,
            LineFamily::UltraParallel => 2,
        }
    }

    pub fn from_index(i: u8) -> Option<Self> {
        match i {
            1 => Some(LineFamily::Asymptotic),
            2 => Some(LineFamily::UltraParallel),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coloring {
    ComplexPhase,
    Pseudo,
    DiscAsymptotic,
    DiscUltraparallel,
    BeltramiV1,
    BeltramiV2,
    KleinV1,
    KleinV2,
}

impl Coloring {
    pub const ALL: [Coloring; 8] = [
        Coloring::ComplexPhase,
        Coloring::Pseudo,
        Coloring::DiscAsymptotic,
        Coloring::DiscUltraparallel,
        Coloring::BeltramiV1,
        Coloring::BeltramiV2,
        Coloring::KleinV1,
        Coloring::KleinV2,
    ];

    /// The line family for the disc-derived colorings.
    pub fn family(self) -> Option<LineFamily> {
        match self {
            Coloring::DiscAsymptotic | Coloring::BeltramiV1 | Coloring::KleinV1 => Some(LineFamily::Asymptotic),
            Coloring::DiscUltraparallel | Coloring::BeltramiV2 | Coloring::KleinV2 => {
                Some(LineFamily::UltraParallel)
            }
            Coloring::ComplexPhase | Coloring::Pseudo => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Coloring::ComplexPhase => "complex",
            Coloring::Pseudo => "pseudo",
            Coloring::DiscAsymptotic => "disc1",
            Coloring::DiscUltraparallel => "disc2",
            Coloring::BeltramiV1 => "beltrami1",
            Coloring::BeltramiV2 => "beltrami2",
            Coloring::KleinV1 => "klein1",
            Coloring::KleinV2 => "klein2",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Coloring::ALL.into_iter().find(|c| c.name() == name)
    }
}

/// A coloring applied to a motion.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ColorSpec {
    pub coloring: Coloring,
    pub motion: Mobius,
    /// Route the disc colorings through plain inversion in `K`.
    pub conjugation_omitted: bool,
}

/// Where a color is requested: a point in one of the models.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Site {
    /// A point of the plane; hyperbolic colorings read it as a half-plane point.
    Plane(ExtComplex),
    /// A point of the Poincaré disc.
    Disc(C64),
    /// A point of the Klein disc.
    Klein(C64),
    /// A point of the unit sphere (the upper half is the Beltrami hemisphere).
    Sphere(SpherePoint),
    Pseudo(PseudoCoord),
}

impl ColorSpec {
    pub fn new(coloring: Coloring, motion: Mobius) -> Self {
        ColorSpec {
            coloring,
            motion,
            conjugation_omitted: false,
        }
    }

    pub fn with_conjugation_omitted(mut self, omitted: bool) -> Self {
        self.conjugation_omitted = omitted;
        self
    }

    fn chart(&self) -> DiscChart {
        DiscChart::from_omit_flag(self.conjugation_omitted)
    }

    /// Hue at a site, or `None` where the site lies outside the domain the
    /// coloring is defined on (rendered as background).
    pub fn hue_at(&self, site: Site) -> Option<HueValue> {
        let f = &self.motion;
        if self.coloring == Coloring::ComplexPhase {
            let z = match site {
                Site::Plane(z) => z,
                Site::Disc(w) | Site::Klein(w) => w.into(),
                Site::Sphere(p) => sphere_to_plane(p),
                Site::Pseudo(p) => pseudo_to_halfplane(p).into(),
            };
            return Some(color_complex(|z| f.apply(z), z));
        }
        if self.coloring == Coloring::Pseudo {
            let z = match site {
                Site::Plane(z) => z.finite().filter(|z| z.im > 0.0)?,
                Site::Pseudo(p) => pseudo_to_halfplane(p),
                Site::Disc(w) => self.chart().to_halfplane(w.into()).finite()?,
                Site::Klein(k) => self.chart().to_halfplane(klein_to_disc(k).ok()?.into()).finite()?,
                Site::Sphere(p) => self.chart().to_halfplane(hemisphere_to_disc(p).ok()?.into()).finite()?,
            };
            return Some(pseudo_hue(f, z));
        }
        let family = self.coloring.family()?;
        let omit = self.conjugation_omitted;
        let w = match site {
            Site::Disc(w) => w,
            Site::Klein(k) => return color_klein(f, k, family, omit).ok(),
            Site::Sphere(p) => return color_beltrami(f, p, family, omit).ok(),
            Site::Plane(z) => self.chart().to_disc(z.finite().filter(|z| z.im > 0.0)?.into()).finite()?,
            Site::Pseudo(p) => self.chart().to_disc(pseudo_to_halfplane(p).into()).finite()?,
        };
        Some(color_disc(f, w, family, omit))
    }
}

/// Phase portrait color `arg f(z)`; zeros and poles are black.
pub fn color_complex(f: impl Fn(ExtComplex) -> ExtComplex, z: ExtComplex) -> HueValue {
    arg2pi(f(z)).map_or(HueValue::Black, HueValue::Hue)
}

/// Rim coloring of a half-plane point: `Re f(z)` read as an angle when it
/// lies in `[0, 2π]`, black otherwise (including poles).
pub fn pseudo_hue(f: &Mobius, z: C64) -> HueValue {
    match f.apply(z.into()) {
        ExtComplex::Finite(w) if (0.0..=TAU).contains(&w.re) => HueValue::hue(w.re),
        _ => HueValue::Black,
    }
}

pub fn color_pseudosphere(f: &Mobius, p: PseudoCoord) -> HueValue {
    pseudo_hue(f, pseudo_to_halfplane(p))
}

fn boundary_hue(chart: DiscChart, boundary: ExtComplex) -> f64 {
    // boundary points of the half-plane land on the unit circle, never at 0
    arg2pi(chart.to_disc(boundary)).unwrap_or(0.0)
}

/// Unique color per preimage of a vertical line (tractrix).
pub fn color_disc_asymptotic(f: &Mobius, w: C64, conjugation_omitted: bool) -> HueValue {
    let chart = DiscChart::from_omit_flag(conjugation_omitted);
    let image = f.apply(chart.to_halfplane(w.into()));
    let boundary = match image {
        ExtComplex::Finite(z) => ExtComplex::from(z.re),
        ExtComplex::Infinity => ExtComplex::Infinity,
    };
    HueValue::hue(boundary_hue(chart, boundary))
}

/// Unique color per preimage of a semicircle about 0.
pub fn color_disc_ultraparallel(f: &Mobius, w: C64, conjugation_omitted: bool) -> HueValue {
    let chart = DiscChart::from_omit_flag(conjugation_omitted);
    let image = f.apply(chart.to_halfplane(w.into()));
    let boundary = match image {
        ExtComplex::Finite(z) => ExtComplex::from(z.norm()),
        ExtComplex::Infinity => ExtComplex::Infinity,
    };
    let rotated = match chart.to_disc(boundary) {
        ExtComplex::Finite(p) => C64::new(0.0, 1.0) * p,
        ExtComplex::Infinity => return HueValue::Hue(0.0),
    };
    let half = arg2pi(rotated.into()).unwrap_or(0.0);
    HueValue::hue(2.0 * half)
}

pub fn color_disc(f: &Mobius, w: C64, family: LineFamily, conjugation_omitted: bool) -> HueValue {
    match family {
        LineFamily::Asymptotic => color_disc_asymptotic(f, w, conjugation_omitted),
        LineFamily::UltraParallel => color_disc_ultraparallel(f, w, conjugation_omitted),
    }
}

/// Disc coloring pulled back to the Beltrami hemisphere.
pub fn color_beltrami(f: &Mobius, p: SpherePoint, family: LineFamily, conjugation_omitted: bool) -> Result<HueValue> {
    let w = hemisphere_to_disc(p)?;
    Ok(color_disc(f, w, family, conjugation_omitted))
}

/// Beltrami coloring pulled back to the Klein disc.
pub fn color_klein(f: &Mobius, k: C64, family: LineFamily, conjugation_omitted: bool) -> Result<HueValue> {
    let p = klein_to_hemisphere(k)?;
    color_beltrami(f, p, family, conjugation_omitted)
}

/// The family's hue rescaled to `[0, 1)`, for landscapes and contours.
pub fn height_disc(f: &Mobius, w: C64, family: LineFamily) -> f64 {
    // disc colorings never return black
    color_disc(f, w, family, false).angle().unwrap_or(0.0) / TAU
}

pub const DEFAULT_HEIGHT_CEILING: f64 = 6.0;

/// Analytic-landscape height `log(1 + |f(z)|)`, clamped at `ceiling`.
pub fn modulus_height(f: impl Fn(ExtComplex) -> ExtComplex, z: ExtComplex, ceiling: f64) -> f64 {
    match f(z) {
        ExtComplex::Finite(w) => w.norm().ln_1p().min(ceiling),
        ExtComplex::Infinity => ceiling,
    }
}

/// Fully saturated, full-value hue wheel with red at angle 0.
pub fn hue_to_rgb(h: HueValue) -> [u8; 3] {
    let angle = match h {
        HueValue::Black => return [0, 0, 0],
        HueValue::Hue(a) => wrap_angle(a),
    };
    let sector = angle / (PI / 3.0);
    let index = (sector.floor() as usize).min(5);
    let frac = sector - index as f64;
    let up = (frac * 255.0).round() as u8;
    let down = 255 - up;
    match index {
        0 => [255, up, 0],
        1 => [down, 255, 0],
        2 => [0, 255, up],
        3 => [0, down, 255],
        4 => [up, 0, 255],
        _ => [255, 0, down],
    }
}
