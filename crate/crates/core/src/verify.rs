//! Numeric self-checks: preset compositions, model round trips and the
//! geodesic constancy of the disc colorings.

use std::f64::consts::{PI, TAU};

use crate::colorings::{color_disc_asymptotic, color_disc_ultraparallel, HueValue};
use crate::cplx::{ExtComplex, Mobius, C64};
use crate::models::{
    disc_to_halfplane, disc_to_hemisphere, disc_to_klein, halfplane_to_disc, halfplane_to_pseudo, hemisphere_to_disc,
    hemisphere_to_klein, klein_to_disc, klein_to_hemisphere, pseudo_to_halfplane, sphere_to_plane, stereo_to_sphere,
    PseudoCoord,
};
use crate::motions::{classify, figure_presets, fixed_points, Discrepancy, MotionKind};

pub const COMPOSITION_TOLERANCE: f64 = 1e-10;
pub const ROUND_TRIP_TOLERANCE: f64 = 1e-12;
pub const CONSTANCY_TOLERANCE: f64 = 1e-9;
pub const SEPARATION: f64 = 1e-3;

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    fn bound(name: impl Into<String>, error: f64, tol: f64) -> Self {
        Check::new(name, error < tol, format!("max error {error:.3e} (limit {tol:.0e})"))
    }
}

/// Deterministic points in `[0, 1)²` (additive recurrence on the plastic
/// number), standing in for random samples.
fn unit_samples(n: usize) -> impl Iterator<Item = (f64, f64)> {
    let g = 1.324_717_957_244_746_f64;
    let (a1, a2) = (1.0 / g, 1.0 / (g * g));
    (1..=n).map(move |k| ((0.5 + a1 * k as f64).fract(), (0.5 + a2 * k as f64).fract()))
}

fn halfplane_samples(n: usize) -> Vec<C64> {
    unit_samples(n).map(|(s, t)| C64::new(20.0 * s - 10.0, 10f64.powf(4.0 * t - 2.0))).collect()
}

fn disc_samples(n: usize) -> Vec<C64> {
    unit_samples(n).map(|(s, t)| C64::from_polar(0.999 * s.sqrt(), TAU * t)).collect()
}

fn relative_gap(got: ExtComplex, want: ExtComplex) -> f64 {
    match (got, want) {
        (ExtComplex::Finite(a), ExtComplex::Finite(b)) => (a - b).norm() / b.norm().max(1.0),
        (ExtComplex::Infinity, ExtComplex::Infinity) => 0.0,
        _ => f64::INFINITY,
    }
}

fn preset_checks() -> Vec<Check> {
    let points = halfplane_samples(100);
    let mut checks = Vec::new();
    for p in figure_presets() {
        let m = p.motion();
        if let Some(expected) = p.expected {
            let err = points
                .iter()
                .map(|&z| {
                    let got = m.apply(z.into());
                    let want = match p.discrepancy {
                        // printed map is z ↦ −g(−z)
                        Some(Discrepancy::MirroredFormula { .. }) => match expected.apply((-z).into()) {
                            ExtComplex::Finite(w) => ExtComplex::Finite(-w),
                            inf => inf,
                        },
                        _ => expected.apply(z.into()),
                    };
                    relative_gap(got, want)
                })
                .fold(0.0, f64::max);
            checks.push(Check::bound(format!("compose {}", p.name), err, COMPOSITION_TOLERANCE));
        }
        let kind = classify(&m);
        checks.push(Check::new(
            format!("classify {}", p.name),
            kind.is_ok(),
            kind.map(|k| format!("{k:?}")).unwrap_or_else(|e| e.to_string()),
        ));
    }
    checks.push(fig15_fixed_points());
    checks
}

/// The rotation's fixed points are where its two circles cross.
fn fig15_fixed_points() -> Check {
    let name = "fig15-rotation fixed points";
    let Ok(p) = crate::motions::preset("fig15-rotation") else {
        return Check::new(name, false, "preset missing");
    };
    let m = p.motion();
    let want = [29.0 / 24.0, (145.0f64 / 72.0).sqrt()];
    let err = match fixed_points(&m) {
        Ok(fp) => want_pair(&fp, C64::new(want[0], want[1])),
        Err(_) => f64::INFINITY,
    };
    let rotation = matches!(classify(&m), Ok(MotionKind::Rotation));
    Check::new(
        name,
        err < 1e-9 && rotation,
        format!("max error {err:.3e}, rotation: {rotation}"),
    )
}

fn want_pair(fp: &[ExtComplex], z: C64) -> f64 {
    let finite: Vec<C64> = fp.iter().filter_map(|p| p.finite()).collect();
    if finite.len() != 2 {
        return f64::INFINITY;
    }
    let d = |a: C64, b: C64| (a - b).norm();
    let direct = d(finite[0], z).max(d(finite[1], z.conj()));
    let swapped = d(finite[1], z).max(d(finite[0], z.conj()));
    direct.min(swapped)
}

fn round_trip_checks() -> Vec<Check> {
    let n = 1000;
    let hp = halfplane_samples(n);
    let disc = disc_samples(n);
    let plane: Vec<C64> = unit_samples(n).map(|(s, t)| C64::new(8.0 * s - 4.0, 8.0 * t - 4.0)).collect();
    let max = |it: &mut dyn Iterator<Item = f64>| it.fold(0.0, f64::max);

    let sphere = max(&mut plane.iter().map(|&z| {
        let back = sphere_to_plane(stereo_to_sphere(z.into()));
        relative_gap(back, z.into())
    }));
    let pseudo = max(&mut unit_samples(n).map(|(s, t)| {
        let p = PseudoCoord::new(TAU * s, 4.0 * t);
        halfplane_to_pseudo(pseudo_to_halfplane(p))
            .map(|q| (q.theta - p.theta).abs().max((q.sigma - p.sigma).abs()))
            .unwrap_or(f64::INFINITY)
    }));
    let poincare = max(&mut hp.iter().map(|&z| {
        let there = halfplane_to_disc(z.into());
        relative_gap(disc_to_halfplane(there), z.into())
    }));
    let beltrami = max(&mut disc.iter().map(|&w| {
        disc_to_hemisphere(w)
            .and_then(hemisphere_to_disc)
            .map(|back| (back - w).norm())
            .unwrap_or(f64::INFINITY)
    }));
    let klein = max(&mut disc.iter().map(|&w| {
        let k = disc_to_hemisphere(w).map(hemisphere_to_klein);
        let composite = disc_to_klein(w);
        match (k, composite) {
            (Ok(k), Ok(c)) => {
                let back = klein_to_hemisphere(k).and_then(hemisphere_to_disc);
                let back2 = klein_to_disc(k);
                match (back, back2) {
                    (Ok(b), Ok(b2)) => (b - w).norm().max((b2 - w).norm()).max((k - c).norm()),
                    _ => f64::INFINITY,
                }
            }
            _ => f64::INFINITY,
        }
    }));
    let cayley = Mobius::new(C64::i(), C64::new(1.0, 0.0), C64::new(1.0, 0.0), C64::i()).expect("nondegenerate");
    let closed_form = max(&mut hp.iter().map(|&z| relative_gap(halfplane_to_disc(z.into()), cayley.apply(z.into()))));

    vec![
        Check::bound("round trip T_S", sphere, ROUND_TRIP_TOLERANCE),
        Check::bound("round trip T_P", pseudo, ROUND_TRIP_TOLERANCE),
        Check::bound("round trip T_D", poincare, ROUND_TRIP_TOLERANCE),
        Check::bound("round trip T_B", beltrami, ROUND_TRIP_TOLERANCE),
        Check::bound("round trip T_K composite", klein, ROUND_TRIP_TOLERANCE),
        Check::bound("T_D closed form (iz+1)/(z+i)", closed_form, ROUND_TRIP_TOLERANCE),
    ]
}

fn hue_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

/// Spread within each family and the smallest gap between family hues.
fn constancy(families: &[Vec<C64>], hue: impl Fn(C64) -> HueValue) -> (f64, f64) {
    let mut spread: f64 = 0.0;
    let mut hues = Vec::new();
    for family in families {
        let hs: Vec<f64> = family.iter().map(|&w| hue(w).angle().unwrap_or(f64::NAN)).collect();
        for h in &hs {
            spread = spread.max(if h.is_nan() { f64::INFINITY } else { hue_gap(*h, hs[0]) });
        }
        hues.push(hs[0]);
    }
    let mut separation = f64::INFINITY;
    for (i, a) in hues.iter().enumerate() {
        for b in &hues[i + 1..] {
            separation = separation.min(hue_gap(*a, *b));
        }
    }
    (spread, separation)
}

fn coverage(hues: impl Iterator<Item = f64>) -> usize {
    let mut bins = [false; 64];
    for h in hues {
        bins[((h / TAU * 64.0) as usize).min(63)] = true;
    }
    bins.iter().filter(|b| **b).count()
}

fn to_disc(z: C64) -> C64 {
    halfplane_to_disc(z.into()).finite().expect("half-plane points map into the disc")
}

/// Images in the disc of 20 vertical lines and 20 centered semicircles.
pub fn geodesic_families() -> (Vec<Vec<C64>>, Vec<Vec<C64>>) {
    let vertical = (0..20)
        .map(|k| {
            let c = -9.5 + k as f64;
            (0..50).map(|j| to_disc(C64::new(c, (-3.0 + 6.0 * j as f64 / 49.0).exp()))).collect()
        })
        .collect();
    let semicircles = (0..20)
        .map(|k| {
            let r = (-3.0 + 6.0 * k as f64 / 19.0).exp();
            (0..50)
                .map(|j| to_disc(C64::from_polar(r, PI * (j as f64 + 0.5) / 50.0)))
                .collect()
        })
        .collect();
    (vertical, semicircles)
}

fn geodesic_checks() -> Vec<Check> {
    let id = Mobius::identity();
    let (vertical, semicircles) = geodesic_families();
    let mut checks = Vec::new();
    let (spread, sep) = constancy(&vertical, |w| color_disc_asymptotic(&id, w, false));
    checks.push(Check::new(
        "C_D1 constant on asymptotic lines",
        spread < CONSTANCY_TOLERANCE && sep > SEPARATION,
        format!("spread {spread:.3e}, separation {sep:.3e}"),
    ));
    let (spread, sep) = constancy(&semicircles, |w| color_disc_ultraparallel(&id, w, false));
    checks.push(Check::new(
        "C_D2 constant on ultra-parallel lines",
        spread < CONSTANCY_TOLERANCE && sep > SEPARATION,
        format!("spread {spread:.3e}, separation {sep:.3e}"),
    ));

    let on_boundary = |x: f64| to_disc(C64::new(x, 1e-9));
    let c1 = coverage((0..1000).filter_map(|k| {
        let c = (PI * ((k as f64 + 0.5) / 1000.0 - 0.5)).tan();
        color_disc_asymptotic(&id, on_boundary(c), false).angle()
    }));
    let c2 = coverage((0..1000).filter_map(|k| {
        let r = (PI / 2.0 * (k as f64 + 0.5) / 1000.0).tan();
        color_disc_ultraparallel(&id, to_disc(C64::new(0.0, r)), false).angle()
    }));
    checks.push(Check::new("C_D1 hue coverage", c1 == 64, format!("{c1}/64 bins")));
    checks.push(Check::new("C_D2 hue coverage", c2 == 64, format!("{c2}/64 bins")));

    let gap = disc_samples(1000)
        .into_iter()
        .map(|w| {
            let a = color_disc_ultraparallel(&id, w, false).angle().unwrap_or(f64::NAN);
            let b = color_disc_ultraparallel(&id, w, true).angle().unwrap_or(f64::NAN);
            if a.is_nan() || b.is_nan() {
                f64::INFINITY
            } else {
                hue_gap(a, b)
            }
        })
        .fold(0.0, f64::max);
    checks.push(Check::bound("C_D2 unchanged without conjugation", gap, CONSTANCY_TOLERANCE));
    checks
}

/// Every check, in a stable order.
pub fn run_all() -> Vec<Check> {
    let mut checks = preset_checks();
    checks.extend(round_trip_checks());
    checks.extend(geodesic_checks());
    checks
}
