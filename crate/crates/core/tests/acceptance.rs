//! Acceptance suite. Runs every criterion at its stated tolerance, prints one
//! PASS/FAIL line per criterion and exits non-zero if any fails.

use std::f64::consts::{PI, TAU};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hyperphase::colorings::{
    color_disc_asymptotic, color_disc_ultraparallel, color_pseudosphere, ColorSpec, Coloring, HueValue,
};
use hyperphase::cplx::{ExtComplex, GenCircle, Mobius, C64};
use hyperphase::figures::{figure, Artifact, FigureOptions, Panel, FIGURES};
use hyperphase::mesh::{colorize, parse_ply, tessellate, Surface, DEFAULT_TWIST};
use hyperphase::models::{
    disc_to_halfplane, disc_to_hemisphere, disc_to_klein, halfplane_to_disc, halfplane_to_pseudo, hemisphere_to_disc,
    hemisphere_to_klein, klein_to_hemisphere, pseudo_to_halfplane, sphere_to_plane, stereo_to_sphere, PseudoCoord,
};
use hyperphase::motions::{classify, fixed_points, motion_from_reflections, preset, Discrepancy, MotionKind};
use hyperphase::raster::{encode_ppm, render, Image, SceneDomain};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random point of the upper half-plane, log-uniform in height.
fn upper(r: &mut ChaCha8Rng) -> C64 {
    c(r.gen_range(-10.0..10.0), 10f64.powf(r.gen_range(-2.0..2.0)))
}

fn in_disc(r: &mut ChaCha8Rng) -> C64 {
    C64::from_polar(0.999 * r.gen::<f64>().sqrt(), r.gen_range(0.0..TAU))
}

fn finite(z: ExtComplex) -> C64 {
    z.finite().expect("finite value")
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

fn circle(center: f64, radius: f64) -> GenCircle {
    GenCircle::circle(c(center, 0.0), radius).unwrap()
}

/// Largest relative error of `m` against `f` over 100 random half-plane points.
fn max_error(m: &Mobius, f: impl Fn(C64) -> C64, seed: u64) -> f64 {
    let mut r = rng(seed);
    (0..100)
        .map(|_| {
            let z = upper(&mut r);
            rel(finite(m.apply(z.into())), f(z))
        })
        .fold(0.0, f64::max)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let s3 = 3f64.sqrt();
    let cases: Vec<(&str, GenCircle, GenCircle, Box<dyn Fn(C64) -> C64>)> = vec![
        ("(√3,1) → z/3", circle(0.0, s3), circle(0.0, 1.0), Box::new(|z| z / 3.0)),
        ("(1,2) → 4z", circle(0.0, 1.0), circle(0.0, 2.0), Box::new(|z| 4.0 * z)),
        ("2π circles → 4π²/(2π−z)", circle(0.0, TAU), circle(TAU, TAU), Box::new(|z| 4.0 * PI * PI / (TAU - z))),
        ("(3,1) → z/9", circle(0.0, 3.0), circle(0.0, 1.0), Box::new(|z| z / 9.0)),
    ];
    let mut worst: f64 = 0.0;
    let mut failures = Vec::new();
    for (k, (name, l1, l2, f)) in cases.iter().enumerate() {
        let err = motion_from_reflections(l1, l2).map(|m| max_error(&m, f, k as u64)).unwrap_or(f64::INFINITY);
        worst = worst.max(err);
        if !(err < 1e-10) {
            failures.push(*name);
        }
    }
    let (x0, x1) = (GenCircle::vertical(0.0), GenCircle::vertical(1.0));
    let forward = motion_from_reflections(&x0, &x1).unwrap();
    let backward = motion_from_reflections(&x1, &x0).unwrap();
    let plus = |z: C64| z + 2.0;
    let minus = |z: C64| z - 2.0;
    let e1 = max_error(&forward, plus, 10).max(max_error(&backward, minus, 11));
    let e2 = max_error(&forward, minus, 10).max(max_error(&backward, plus, 11));
    let lines = e1.min(e2);
    worst = worst.max(lines);
    if !(lines < 1e-10) {
        failures.push("x=0,1 → z±2");
    }
    let elapsed = start.elapsed();
    outcome(
        failures.is_empty() && elapsed < Duration::from_secs(1),
        format!("max relative error {worst:.2e}, {:.1} ms, failing: {failures:?}", elapsed.as_secs_f64() * 1e3),
    )
}

fn criterion_2() -> Outcome {
    let p15 = preset("fig15-rotation").unwrap();
    let m15 = motion_from_reflections(&circle(2.0, 13.0 / 8.0), &circle(-1.0, 21.0 / 8.0)).unwrap();
    let want = c(29.0 / 24.0, (145.0f64 / 72.0).sqrt());
    let fp: Vec<C64> = fixed_points(&m15).unwrap().into_iter().filter_map(|p| p.finite()).collect();
    let fp_err = if fp.len() == 2 {
        let a = (fp[0] - want).norm().max((fp[1] - want.conj()).norm());
        let b = (fp[1] - want).norm().max((fp[0] - want.conj()).norm());
        a.min(b)
    } else {
        f64::INFINITY
    };
    let rotation = classify(&m15).ok() == Some(MotionKind::Rotation);
    // printed: (−249z−667)/(192z+215), which is z ↦ −g(−z) for the composed g
    let printed15 = |z: C64| (-249.0 * z - 667.0) / (192.0 * z + 215.0);
    let mirrored = max_error(&m15, |z| -printed15(-z), 20);
    let documented15 = matches!(p15.discrepancy, Some(Discrepancy::MirroredFormula { printed }) if printed.contains("249"));

    let p16 = preset("fig16-dini-rotation").unwrap();
    let m16 = motion_from_reflections(&circle(4.0 * PI + PI / 8.0, 4.0 * PI), &circle(PI / 8.0, 4.0 * PI)).unwrap();
    let closed16 = |z: C64| (-264.0 * PI * z + 1057.0 * PI * PI) / (-64.0 * z + 8.0 * PI);
    let printed16 = |z: C64| (-261.0 * PI * z + 1057.0 * PI * PI) / (-64.0 * z + 8.0 * PI);
    let e16 = max_error(&m16, closed16, 21);
    let printed_gap = max_error(&m16, printed16, 22);
    let documented16 = matches!(p16.discrepancy, Some(Discrepancy::CoefficientTypo { printed }) if printed.contains("261"));
    outcome(
        fp_err < 1e-9 && rotation && e16 < 1e-10 && mirrored < 1e-10 && documented15 && documented16,
        format!(
            "fig15 fixed points err {fp_err:.2e}, rotation {rotation}, printed map = −g(−z) to {mirrored:.2e}; \
             fig16 vs 264π form {e16:.2e} (printed 261π off by {printed_gap:.2e}); documented {documented15}/{documented16}"
        ),
    )
}

fn criterion_3() -> Outcome {
    let mut r = rng(30);
    let n = 1000;
    let mut s = 0.0f64;
    let mut p = 0.0f64;
    let mut d = 0.0f64;
    let mut b = 0.0f64;
    let mut k = 0.0f64;
    let mut closed = 0.0f64;
    for _ in 0..n {
        let z = c(r.gen_range(-4.0..4.0), r.gen_range(-4.0..4.0));
        s = s.max(rel(finite(sphere_to_plane(stereo_to_sphere(z.into()))), z));

        let q = PseudoCoord::new(r.gen_range(0.0..TAU), r.gen_range(-1.0..4.0));
        let back = halfplane_to_pseudo(pseudo_to_halfplane(q)).unwrap();
        p = p.max((back.theta - q.theta).abs().max((back.sigma - q.sigma).abs()));

        let h = upper(&mut r);
        let w = finite(halfplane_to_disc(h.into()));
        d = d.max(rel(finite(disc_to_halfplane(w.into())), h));
        closed = closed.max((w - (c(0.0, 1.0) * h + 1.0) / (h + c(0.0, 1.0))).norm());

        let w = in_disc(&mut r);
        let hemi = disc_to_hemisphere(w).unwrap();
        b = b.max((hemisphere_to_disc(hemi).unwrap() - w).norm());

        let kz = hemisphere_to_klein(hemi);
        let composite = 2.0 * w / (1.0 + w.norm_sqr());
        let via_klein = hemisphere_to_disc(klein_to_hemisphere(kz).unwrap()).unwrap();
        k = k.max((kz - composite).norm()).max((via_klein - w).norm()).max((disc_to_klein(w).unwrap() - composite).norm());
    }
    let worst = s.max(p).max(d).max(b).max(k);
    outcome(
        worst < 1e-12 && closed < 1e-12,
        format!("T_S {s:.1e}, T_P {p:.1e}, T_D {d:.1e}, T_B {b:.1e}, T_K {k:.1e}; T_D closed form {closed:.1e}"),
    )
}

fn hue_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

fn angle(h: HueValue) -> f64 {
    h.angle().unwrap_or(f64::NAN)
}

/// Spread within each family, smallest separation between families.
fn family_stats(families: &[Vec<C64>], hue: impl Fn(C64) -> f64) -> (f64, f64) {
    let mut spread: f64 = 0.0;
    let mut reps = Vec::new();
    for fam in families {
        let hs: Vec<f64> = fam.iter().map(|&w| hue(w)).collect();
        for h in &hs {
            spread = spread.max(hue_gap(*h, hs[0]));
            if h.is_nan() {
                spread = f64::INFINITY;
            }
        }
        reps.push(hs[0]);
    }
    let mut sep = f64::INFINITY;
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            sep = sep.min(hue_gap(reps[i], reps[j]));
        }
    }
    (spread, sep)
}

fn bins_filled(hues: impl Iterator<Item = f64>) -> usize {
    let mut bins = [false; 64];
    for h in hues {
        bins[((h / TAU * 64.0) as usize).min(63)] = true;
    }
    bins.iter().filter(|b| **b).count()
}

/// Independent closed form of the half-plane → disc map.
fn cayley(z: C64) -> C64 {
    (c(0.0, 1.0) * z + 1.0) / (z + c(0.0, 1.0))
}

fn criterion_4() -> Outcome {
    let id = Mobius::identity();
    let mut r = rng(40);
    let vertical: Vec<Vec<C64>> = (0..20)
        .map(|k| {
            let x = -9.5 + k as f64 + r.gen_range(-0.3..0.3);
            (0..50).map(|_| cayley(c(x, 10f64.powf(r.gen_range(-3.0..3.0))))).collect()
        })
        .collect();
    let semicircles: Vec<Vec<C64>> = (0..20)
        .map(|k| {
            let radius = (-3.0 + 6.0 * k as f64 / 19.0).exp();
            (0..50).map(|_| cayley(C64::from_polar(radius, r.gen_range(0.01..PI - 0.01)))).collect()
        })
        .collect();
    let (s1, sep1) = family_stats(&vertical, |w| angle(color_disc_asymptotic(&id, w, false)));
    let (s2, sep2) = family_stats(&semicircles, |w| angle(color_disc_ultraparallel(&id, w, false)));

    let cov1 = bins_filled((0..1000).map(|k| {
        let x = (PI * ((k as f64 + 0.5) / 1000.0 - 0.5)).tan();
        angle(color_disc_asymptotic(&id, cayley(c(x, 1.0)), false))
    }));
    let cov2 = bins_filled((0..1000).map(|k| {
        let radius = (PI / 2.0 * (k as f64 + 0.5) / 1000.0).tan();
        angle(color_disc_ultraparallel(&id, cayley(c(0.0, radius)), false))
    }));

    let omit = (0..1000)
        .map(|_| {
            let w = in_disc(&mut r);
            hue_gap(
                angle(color_disc_ultraparallel(&id, w, false)),
                angle(color_disc_ultraparallel(&id, w, true)),
            )
        })
        .fold(0.0, f64::max);
    outcome(
        s1 < 1e-9 && s2 < 1e-9 && sep1 > 1e-3 && sep2 > 1e-3 && cov1 == 64 && cov2 == 64 && omit < 1e-9,
        format!(
            "C_D1 spread {s1:.1e} sep {sep1:.2e} bins {cov1}/64; C_D2 spread {s2:.1e} sep {sep2:.2e} bins {cov2}/64; \
             conjugation-omitted C_D2 gap {omit:.1e}"
        ),
    )
}

fn criterion_5() -> Outcome {
    let shift = Mobius::real(1.0, -2.0, 0.0, 1.0).unwrap();
    let mut r = rng(50);
    let samples = 100_000;
    let colored = (0..samples)
        .filter(|_| !color_pseudosphere(&shift, PseudoCoord::new(r.gen_range(0.0..TAU), 0.0)).is_black())
        .count();
    let fraction = colored as f64 / samples as f64;
    let target = (TAU - 2.0) / TAU;
    let rel_err = (fraction - target).abs() / target;

    let ninth = preset("fig17-dini-translation").unwrap().motion();
    let mesh = tessellate(&Surface::Dini { twist: DEFAULT_TWIST }, (0.0, 15.0 * PI), (0.0, 3.0), 512, 128).unwrap();
    let mesh = colorize(mesh, &ColorSpec::new(Coloring::Pseudo, ninth)).unwrap();
    let black = mesh.black_vertices();
    outcome(
        rel_err < 0.01 && black == 0,
        format!("colored rim fraction {fraction:.4} vs {target:.4} ({:.2}% off); fig17 black vertices {black}", rel_err * 100.0),
    )
}

/// Algebraic least-squares circle `x² + y² + Dx + Ey + F = 0`; returns
/// center, radius and the largest distance of a point from the circle.
fn fit_circle(pts: &[C64]) -> (C64, f64, f64) {
    let mut m = [[0.0f64; 3]; 3];
    let mut v = [0.0f64; 3];
    for p in pts {
        let row = [p.re, p.im, 1.0];
        let rhs = -(p.norm_sqr());
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] += row[i] * row[j];
            }
            v[i] += row[i] * rhs;
        }
    }
    let det3 = |a: [[f64; 3]; 3]| {
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    };
    let det = det3(m);
    let solve = |k: usize| {
        let mut a = m;
        for i in 0..3 {
            a[i][k] = v[i];
        }
        det3(a) / det
    };
    let (d, e, f) = (solve(0), solve(1), solve(2));
    let center = c(-d / 2.0, -e / 2.0);
    let radius = (center.norm_sqr() - f).sqrt();
    let residual = pts.iter().map(|p| ((p - center).norm() - radius).abs()).fold(0.0, f64::max);
    (center, radius, residual)
}

fn line_residual(pts: &[C64]) -> f64 {
    let (a, b) = (pts[0], pts[pts.len() - 1]);
    let dir = (b - a) / (b - a).norm();
    pts.iter().map(|p| ((p - a) * dir.conj()).im.abs()).fold(0.0, f64::max)
}

fn criterion_6() -> Outcome {
    let mut r = rng(60);
    let mut circle_res: f64 = 0.0;
    let mut orth: f64 = 0.0;
    let mut chord: f64 = 0.0;
    let mut fitted = 0;
    while fitted < 40 {
        // half vertical lines, half real-centered semicircles
        let geodesic: Vec<C64> = if fitted % 2 == 0 {
            let x: f64 = r.gen_range(-5.0..5.0);
            if x.abs() < 0.2 {
                continue;
            }
            (0..50).map(|j| c(x, (-2.0 + 4.0 * j as f64 / 49.0).exp())).collect()
        } else {
            let center: f64 = r.gen_range(-5.0..5.0);
            let radius: f64 = r.gen_range(0.2..5.0);
            // circles through −i become diameters; keep away from them
            if (center * center + 1.0 - radius * radius).abs() < 0.5 {
                continue;
            }
            (0..50).map(|j| c(center, 0.0) + C64::from_polar(radius, PI * (j as f64 + 0.5) / 50.0)).collect()
        };
        let disc: Vec<C64> = geodesic.iter().map(|&z| finite(halfplane_to_disc(z.into()))).collect();
        let (center, radius, res) = fit_circle(&disc);
        circle_res = circle_res.max(res);
        // orthogonal to |w| = 1 exactly when |c|² = 1 + r²
        orth = orth.max((center.norm_sqr() - 1.0 - radius * radius).abs() / center.norm_sqr());
        let klein: Vec<C64> = disc.iter().map(|&w| disc_to_klein(w).unwrap()).collect();
        chord = chord.max(line_residual(&klein));
        fitted += 1;
    }
    outcome(
        circle_res < 1e-7 && orth < 1e-7 && chord < 1e-7,
        format!("disc circle residual {circle_res:.1e}, orthogonality {orth:.1e}; Klein chord residual {chord:.1e}"),
    )
}

fn panels() -> Vec<(&'static str, Panel)> {
    FIGURES
        .iter()
        .flat_map(|f| {
            let mut v = vec![(f.name, Panel::Left)];
            if f.right.is_some() {
                v.push((f.name, Panel::Right));
            }
            v
        })
        .collect()
}

fn criterion_7() -> Outcome {
    let mut problems = Vec::new();
    let mut images = 0;
    let mut meshes = 0;
    for (name, panel) in panels() {
        let options = FigureOptions {
            panel: Some(panel),
            ..FigureOptions::default()
        };
        let (Ok(a), Ok(b)) = (figure(name, &options), figure(name, &options)) else {
            problems.push(format!("{name} {panel:?} failed to build"));
            continue;
        };
        if a.encode() != b.encode() {
            problems.push(format!("{name} {panel:?} differs between runs"));
        }
        match &a {
            Artifact::Image(img) => {
                images += 1;
                let bytes = a.encode();
                let header = format!("P6 {} {} 255\n", img.width(), img.height());
                let payload: Vec<u8> = img.pixels().iter().flatten().copied().collect();
                if !bytes.starts_with(header.as_bytes()) || bytes[header.len()..] != payload[..] {
                    problems.push(format!("{name} {panel:?} PPM layout"));
                }
            }
            Artifact::Mesh(m) => {
                meshes += 1;
                match parse_ply(&String::from_utf8(a.encode()).unwrap()) {
                    Ok(back)
                        if back.vertices.len() == m.vertices.len()
                            && back.faces.len() == m.faces.len()
                            && back.colors == m.colors => {}
                    _ => problems.push(format!("{name} {panel:?} PLY does not re-parse identically")),
                }
            }
        }
    }
    let red = Image::new(1, 1, vec![[255, 0, 0]]).unwrap();
    if encode_ppm(&red) != b"P6 1 1 255\n\xFF\x00\x00" {
        problems.push("1×1 red PPM bytes".into());
    }
    let pair = Image::new(2, 1, vec![[1, 2, 3], [4, 5, 6]]).unwrap();
    if encode_ppm(&pair) != b"P6 2 1 255\n\x01\x02\x03\x04\x05\x06" {
        problems.push("2×1 PPM bytes".into());
    }
    outcome(
        problems.is_empty(),
        format!("{images} images and {meshes} meshes reproduced byte-identically; problems: {problems:?}"),
    )
}

fn criterion_8() -> Outcome {
    let spec = ColorSpec::new(Coloring::DiscAsymptotic, Mobius::identity());
    let start = Instant::now();
    let img = render(&spec, &SceneDomain::Disc { resolution: 512 }, 2);
    let raster = start.elapsed();

    let start = Instant::now();
    let options = FigureOptions {
        nu: Some(1024),
        nv: Some(256),
        ..FigureOptions::default()
    };
    let mesh = figure("fig16", &options).map(|a| a.encode().len());
    let dini = start.elapsed();
    let size_ok = matches!(mesh, Ok(n) if n < 50_000_000);
    outcome(
        img.is_ok() && size_ok && raster < Duration::from_secs(5) && dini < Duration::from_secs(10),
        format!(
            "512² disc ×2 supersample in {:.2} s; fig16 1024×256 mesh + PLY ({:.1} MB) in {:.2} s",
            raster.as_secs_f64(),
            mesh.map(|n| n as f64 / 1e6).unwrap_or(f64::NAN),
            dini.as_secs_f64()
        ),
    )
}

fn main() {
    // `cargo test -- --list` and similar probes expect no work.
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("reflection-composition oracle", criterion_1),
        ("discrepancy presets", criterion_2),
        ("round-trip suite", criterion_3),
        ("geodesic hue constancy", criterion_4),
        ("pseudosphere black measure", criterion_5),
        ("geodesic shape fits", criterion_6),
        ("determinism and formats", criterion_7),
        ("desk-scale performance", criterion_8),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.passed {
            failed += 1;
        }
        println!("{} criterion {} ({name}): {}", if o.passed { "PASS" } else { "FAIL" }, k + 1, o.detail);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
