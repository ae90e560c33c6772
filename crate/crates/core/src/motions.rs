//! Direct motions of the upper half-plane built from pairs of reflections.

use std::f64::consts::{PI, TAU};

use crate::cplx::{ExtComplex, GenCircle, Mobius, C64};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MotionKind {
    Rotation,
    Translation,
    LimitRotation,
    Identity,
}

/// `|tr²/det − 4|` below this counts as parabolic.
pub const PARABOLIC_TOLERANCE: f64 = 1e-9;

/// Relative imaginary part of `tr²/det` tolerated before a map is rejected.
const REAL_TRACE_TOLERANCE: f64 = 1e-9;

/// The holomorphic map `z ↦ R_{l2}(R_{l1}(z))`: reflect in `l1` first, then `l2`.
///
/// Two anticonformal reflections compose to a Möbius map. Writing each
/// reflection as `z ↦ M·z̄`, the composition is `M₂·conj(M₁)`.
pub fn motion_from_reflections(l1: &GenCircle, l2: &GenCircle) -> Result<Mobius> {
    if l1.same_curve(l2, 1e-12) {
        return Err(Error::IdentityMotion);
    }
    let [a1, b1, c1, d1] = l1.antiholomorphic_matrix().map(|z| z.conj());
    let [a2, b2, c2, d2] = l2.antiholomorphic_matrix();
    let m = Mobius::new(
        a2 * a1 + b2 * c1,
        a2 * b1 + b2 * d1,
        c2 * a1 + d2 * c1,
        c2 * b1 + d2 * d1,
    )?;
    if m.is_identity(1e-14) {
        return Err(Error::IdentityMotion);
    }
    Ok(m)
}

/// Classifies an orientation-preserving isometry of the upper half-plane by
/// the invariant `tr²/det`.
pub fn classify(m: &Mobius) -> Result<MotionKind> {
    let t = m.trace() * m.trace() / m.det();
    if t.im.abs() > REAL_TRACE_TOLERANCE * t.norm().max(1.0) || t.re < -REAL_TRACE_TOLERANCE {
        return Err(Error::NotHyperbolicMotion(format!("tr²/det = {t}")));
    }
    // scaled to unit determinant, a half-plane motion has real entries
    let root = m.det().sqrt();
    let scaled = m.coefficients().map(|k| k / root);
    let size = scaled.iter().map(|k| k.norm()).fold(0.0, f64::max);
    if scaled.iter().any(|k| k.im.abs() > REAL_TRACE_TOLERANCE * size) {
        return Err(Error::NotHyperbolicMotion(format!("{m} has no real normalized form")));
    }
    let t = t.re;
    if (t - 4.0).abs() < PARABOLIC_TOLERANCE {
        if m.is_identity(1e-12) {
            Ok(MotionKind::Identity)
        } else {
            Ok(MotionKind::LimitRotation)
        }
    } else if t < 4.0 {
        Ok(MotionKind::Rotation)
    } else {
        Ok(MotionKind::Translation)
    }
}

/// Fixed points of a non-identity map: the roots of `cz² + (d−a)z − b = 0`,
/// plus infinity when `c = 0`.
pub fn fixed_points(m: &Mobius) -> Result<Vec<ExtComplex>> {
    if m.is_identity(1e-14) {
        return Err(Error::AllPointsFixed);
    }
    let m = m.normalized();
    let [a, b, c, d] = m.coefficients();
    let scale = [a, b, c, d].iter().map(|z| z.norm()).fold(0.0, f64::max);
    if c.norm() <= 1e-15 * scale {
        let shift = d - a;
        if shift.norm() <= 1e-14 * scale {
            return Ok(vec![ExtComplex::Infinity]);
        }
        return Ok(vec![ExtComplex::Finite(b / shift), ExtComplex::Infinity]);
    }
    let disc = (d - a) * (d - a) + 4.0 * b * c;
    let root = disc.sqrt();
    if root.norm() <= 1e-12 * scale {
        return Ok(vec![ExtComplex::Finite((a - d) / (2.0 * c))]);
    }
    // pick the numerically stable pairing of the quadratic formula
    let s = if ((a - d).conj() * root).re >= 0.0 { root } else { -root };
    let first = ((a - d) + s) / (2.0 * c);
    let second = if first.norm() > 0.0 {
        -b / (c * first)
    } else {
        ((a - d) - s) / (2.0 * c)
    };
    Ok(vec![ExtComplex::Finite(first), ExtComplex::Finite(second)])
}

/// How a preset's stored formula relates to the formula printed alongside
/// the figure it reproduces.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Discrepancy {
    /// The printed formula is `z ↦ −g(−z)` for the composed motion `g`; the
    /// stored `expected` is the printed map.
    MirroredFormula { printed: &'static str },
    /// The printed formula carries a wrong coefficient; the stored `expected`
    /// is the composed closed form.
    CoefficientTypo { printed: &'static str },
}

/// A named motion used by one of the figures.
#[derive(Clone, Debug, PartialEq)]
pub struct Preset {
    pub name: &'static str,
    pub l1: GenCircle,
    pub l2: GenCircle,
    pub expected: Option<Mobius>,
    pub figure: &'static str,
    pub discrepancy: Option<Discrepancy>,
}

impl Preset {
    pub fn motion(&self) -> Mobius {
        motion_from_reflections(&self.l1, &self.l2).expect("preset curves are distinct")
    }
}

fn circle(center: f64, radius: f64) -> GenCircle {
    GenCircle::circle(C64::new(center, 0.0), radius).expect("preset radius is positive")
}

fn real_mobius(a: f64, b: f64, c: f64, d: f64) -> Option<Mobius> {
    Some(Mobius::real(a, b, c, d).expect("preset matrix is nondegenerate"))
}

/// All motion presets, in figure order.
pub fn figure_presets() -> Vec<Preset> {
    let pi2 = PI * PI;
    vec![
        Preset {
            name: "fig8-rotation",
            l1: circle(0.0, TAU),
            l2: circle(TAU, TAU),
            expected: real_mobius(0.0, 4.0 * pi2, -1.0, TAU),
            figure: "fig8",
            discrepancy: None,
        },
        // Lines listed right-to-left: reflecting in x=1 then x=0 gives z ↦ z − 2.
        Preset {
            name: "fig10-limit-rotation",
            l1: GenCircle::vertical(1.0),
            l2: GenCircle::vertical(0.0),
            expected: real_mobius(1.0, -2.0, 0.0, 1.0),
            figure: "fig10",
            discrepancy: None,
        },
        Preset {
            name: "fig11-translation-down",
            l1: circle(0.0, 3f64.sqrt()),
            l2: circle(0.0, 1.0),
            expected: real_mobius(1.0, 0.0, 0.0, 3.0),
            figure: "fig11",
            discrepancy: None,
        },
        Preset {
            name: "fig12-translation-up",
            l1: circle(0.0, 1.0),
            l2: circle(0.0, 2.0),
            expected: real_mobius(4.0, 0.0, 0.0, 1.0),
            figure: "fig12",
            discrepancy: None,
        },
        Preset {
            name: "fig15-rotation",
            l1: circle(2.0, 13.0 / 8.0),
            l2: circle(-1.0, 21.0 / 8.0),
            expected: real_mobius(-249.0, -667.0, 192.0, 215.0),
            figure: "fig15",
            discrepancy: Some(Discrepancy::MirroredFormula {
                printed: "(-249z-667)/(192z+215)",
            }),
        },
        Preset {
            name: "fig16-dini-rotation",
            l1: circle(4.0 * PI + PI / 8.0, 4.0 * PI),
            l2: circle(PI / 8.0, 4.0 * PI),
            expected: real_mobius(-264.0 * PI, 1057.0 * pi2, -64.0, 8.0 * PI),
            figure: "fig16",
            discrepancy: Some(Discrepancy::CoefficientTypo {
                printed: "(-261πz+1057π²)/(-64z+8π)",
            }),
        },
        Preset {
            name: "fig16-dini-rotation-mirrored",
            l1: circle(TAU - (4.0 * PI + PI / 8.0), 4.0 * PI),
            l2: circle(TAU - PI / 8.0, 4.0 * PI),
            expected: real_mobius(-136.0 * PI, -769.0 * pi2, 64.0, -120.0 * PI),
            figure: "fig16",
            discrepancy: None,
        },
        Preset {
            name: "fig17-dini-translation",
            l1: circle(0.0, 3.0),
            l2: circle(0.0, 1.0),
            expected: real_mobius(1.0, 0.0, 0.0, 9.0),
            figure: "fig17",
            discrepancy: None,
        },
    ]
}

pub fn preset(name: &str) -> Result<Preset> {
    figure_presets()
        .into_iter()
        .find(|p| p.name == name)
        .ok_or_else(|| Error::UnknownPreset(name.to_string()))
}
