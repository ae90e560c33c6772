//! Triangulated surfaces carrying per-vertex colors, with ASCII PLY I/O.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use rayon::prelude::*;

use crate::colorings::{height_disc, hue_to_rgb, modulus_height, ColorSpec, LineFamily, Site};
use crate::cplx::{ExtComplex, Mobius, C64};
use crate::error::{Error, Result};
use crate::models::{embed_dini, embed_pseudosphere, invert_in_k, stereo_to_sphere, Point3, PseudoCoord, SpherePoint};
use crate::raster::{with_pool, Rgb, WHITE};

/// Default height scale of disc landscapes, relative to the unit disc radius.
pub const DEFAULT_EXAGGERATION: f64 = 0.35;
pub const DEFAULT_TWIST: f64 = 0.15;

/// Area below which a triangle counts as degenerate and is dropped.
const DEGENERATE_AREA: f64 = 1e-14;
const WELD_TOLERANCE: f64 = 1e-12;

/// A map of the plane drawn as a modulus landscape.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PlaneMap {
    Mobius(Mobius),
    /// Inversion in the circle of radius √2 about −i.
    InversionK,
}

impl PlaneMap {
    pub fn apply(&self, z: ExtComplex) -> ExtComplex {
        match self {
            PlaneMap::Mobius(m) => m.apply(z),
            PlaneMap::InversionK => invert_in_k(z),
        }
    }
}

/// Parametrized surfaces. The `(u, v)` parameters are:
///
/// * `Pseudosphere`, `Dini`: `(θ, σ)`.
/// * `Hemisphere`, `Sphere`: azimuth and polar angle from the north pole.
/// * `DiscLandscape`: polar angle and radius in the Poincaré disc.
/// * `PlaneLandscape`: real and imaginary part.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Surface {
    Pseudosphere,
    Dini { twist: f64 },
    Hemisphere,
    Sphere,
    DiscLandscape {
        motion: Mobius,
        height: LineFamily,
        exaggeration: f64,
    },
    PlaneLandscape { map: PlaneMap, ceiling: f64 },
}

impl Surface {
    pub fn name(&self) -> &'static str {
        match self {
            Surface::Pseudosphere => "pseudosphere",
            Surface::Dini { .. } => "dini",
            Surface::Hemisphere => "hemisphere",
            Surface::Sphere => "sphere",
            Surface::DiscLandscape { .. } => "disc-landscape",
            Surface::PlaneLandscape { .. } => "plane-landscape",
        }
    }

    /// Whether `u` is an angle, so a full turn closes the surface up.
    fn periodic_u(&self) -> bool {
        !matches!(self, Surface::Dini { .. } | Surface::PlaneLandscape { .. })
    }

    fn check_ranges(&self, u: (f64, f64), v: (f64, f64)) -> Result<()> {
        let bad = |detail: String| {
            Err(Error::InvalidRange {
                what: "surface parameters",
                detail,
            })
        };
        if !(u.0.is_finite() && u.1.is_finite() && v.0.is_finite() && v.1.is_finite()) || u.0 >= u.1 || v.0 >= v.1 {
            return bad(format!("ranges [{}, {}] × [{}, {}] are not ordered", u.0, u.1, v.0, v.1));
        }
        let (lo, hi, label) = match self {
            Surface::Pseudosphere | Surface::Dini { .. } => (0.0, f64::INFINITY, "σ"),
            Surface::Hemisphere => (0.0, FRAC_PI_2, "polar angle"),
            Surface::Sphere => (0.0, PI, "polar angle"),
            Surface::DiscLandscape { .. } => (0.0, 1.0, "disc radius"),
            Surface::PlaneLandscape { .. } => (f64::NEG_INFINITY, f64::INFINITY, "Im"),
        };
        if v.0 < lo || v.1 > hi {
            return bad(format!("{label} range [{}, {}] leaves [{lo}, {hi}]", v.0, v.1));
        }
        if self.periodic_u() && u.1 - u.0 > TAU + WELD_TOLERANCE {
            return bad(format!("angle range [{}, {}] exceeds a full turn", u.0, u.1));
        }
        Ok(())
    }

    /// Embedded point and coloring site for a parameter pair.
    pub fn point(&self, u: f64, v: f64) -> Result<(Point3, Site)> {
        Ok(match *self {
            Surface::Pseudosphere => {
                let p = PseudoCoord::new(u, v);
                (embed_pseudosphere(p)?, Site::Pseudo(p))
            }
            Surface::Dini { twist } => {
                let p = PseudoCoord::new(u, v);
                (embed_dini(p, twist)?, Site::Pseudo(p))
            }
            Surface::Hemisphere | Surface::Sphere => {
                let (s, c) = v.sin_cos();
                let p = SpherePoint { x: s * u.cos(), y: s * u.sin(), z: c };
                (Point3::new(p.x, p.y, p.z), Site::Sphere(p))
            }
            Surface::DiscLandscape { motion, height, exaggeration } => {
                let w = C64::from_polar(v, u);
                let h = exaggeration * height_disc(&motion, w, height);
                (Point3::new(w.re, w.im, h), Site::Disc(w))
            }
            Surface::PlaneLandscape { map, ceiling } => {
                let z = ExtComplex::new(u, v);
                let h = modulus_height(|z| map.apply(z), z, ceiling);
                (Point3::new(u, v, h), Site::Plane(z))
            }
        })
    }
}

/// Sphere point over a plane point, handy for placing sites on the sphere.
pub fn sphere_site(z: ExtComplex) -> Site {
    Site::Sphere(stereo_to_sphere(z))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Mesh {
    pub vertices: Vec<Point3>,
    pub colors: Vec<Rgb>,
    pub faces: Vec<[u32; 3]>,
    /// Where each vertex sits in the model; empty for meshes read from disk.
    pub sites: Vec<Site>,
}

fn triangle_area(a: Point3, b: Point3, c: Point3) -> f64 {
    0.5 * b.sub(a).cross(c.sub(a)).norm()
}

fn distance(a: Point3, b: Point3) -> f64 {
    b.sub(a).norm()
}

/// Samples `surface` on an `nu × nv` grid over `u_range × v_range` and
/// triangulates it.
///
/// A full turn in an angular `u` welds the last column onto the first. Grid
/// rows that collapse to a single point (poles, the disc center) share one
/// vertex, and triangles with zero area are dropped.
pub fn tessellate(surface: &Surface, u_range: (f64, f64), v_range: (f64, f64), nu: usize, nv: usize) -> Result<Mesh> {
    if nu < 2 || nv < 2 {
        return Err(Error::InvalidRange {
            what: "grid size",
            detail: format!("need nu, nv ≥ 2, got {nu} × {nv}"),
        });
    }
    surface.check_ranges(u_range, v_range)?;
    let weld = surface.periodic_u() && (u_range.1 - u_range.0 - TAU).abs() <= WELD_TOLERANCE;
    let lerp = |(a, b): (f64, f64), k: usize, n: usize| a + (b - a) * k as f64 / (n - 1) as f64;

    let grid: Vec<Vec<(Point3, Site)>> = with_pool(|| {
        (0..nv)
            .into_par_iter()
            .map(|j| {
                let v = lerp(v_range, j, nv);
                (0..nu).map(|i| surface.point(lerp(u_range, i, nu), v)).collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()
    })?;

    let mut mesh = Mesh {
        vertices: Vec::with_capacity(nu * nv),
        colors: Vec::new(),
        faces: Vec::with_capacity(2 * (nu - 1) * (nv - 1)),
        sites: Vec::with_capacity(nu * nv),
    };
    let mut index = vec![vec![0u32; nu]; nv];
    for (j, row) in grid.iter().enumerate() {
        let collapsed = row.iter().all(|(p, _)| distance(*p, row[0].0) <= WELD_TOLERANCE);
        for (i, &(p, site)) in row.iter().enumerate() {
            index[j][i] = if i > 0 && collapsed {
                index[j][0]
            } else if weld && i == nu - 1 {
                index[j][0]
            } else {
                mesh.vertices.push(p);
                mesh.sites.push(site);
                (mesh.vertices.len() - 1) as u32
            };
        }
    }
    mesh.colors = vec![WHITE; mesh.vertices.len()];

    for j in 0..nv - 1 {
        for i in 0..nu - 1 {
            let a = index[j][i];
            let b = index[j][i + 1];
            let c = index[j + 1][i + 1];
            let d = index[j + 1][i];
            for tri in [[a, b, c], [a, c, d]] {
                let [p, q, r] = tri.map(|k| mesh.vertices[k as usize]);
                if tri[0] != tri[1] && tri[1] != tri[2] && tri[0] != tri[2] && triangle_area(p, q, r) > DEGENERATE_AREA {
                    mesh.faces.push(tri);
                }
            }
        }
    }
    Ok(mesh)
}

impl Mesh {
    fn require_sites(&self) -> Result<()> {
        if self.sites.len() != self.vertices.len() {
            return Err(Error::InvalidRange {
                what: "mesh",
                detail: "vertex sites are unknown; colorize needs a tessellated mesh".into(),
            });
        }
        Ok(())
    }

    /// Colors every vertex with an arbitrary site coloring.
    pub fn colorize_with<F>(mut self, color: F) -> Result<Mesh>
    where
        F: Fn(Site) -> Rgb + Sync,
    {
        self.require_sites()?;
        let sites = &self.sites;
        self.colors = with_pool(|| sites.par_iter().map(|&s| color(s)).collect());
        Ok(self)
    }

    /// Number of vertices whose color is pure black.
    pub fn black_vertices(&self) -> usize {
        self.colors.iter().filter(|c| **c == [0, 0, 0]).count()
    }
}

/// Colors each vertex by `spec` at its site; sites outside the coloring's
/// domain stay white.
pub fn colorize(mesh: Mesh, spec: &ColorSpec) -> Result<Mesh> {
    mesh.colorize_with(|site| spec.hue_at(site).map(hue_to_rgb).unwrap_or(WHITE))
}

/// ASCII PLY 1.0 text: float positions, uchar colors, triangle faces.
pub fn encode_ply(mesh: &Mesh) -> String {
    let mut out = String::with_capacity(32 * mesh.vertices.len() + 20 * mesh.faces.len() + 256);
    out.push_str("ply\nformat ascii 1.0\ncomment hyperphase mesh\n");
    let _ = writeln!(out, "element vertex {}", mesh.vertices.len());
    out.push_str("property float x\nproperty float y\nproperty float z\n");
    out.push_str("property uchar red\nproperty uchar green\nproperty uchar blue\n");
    let _ = writeln!(out, "element face {}", mesh.faces.len());
    out.push_str("property list uchar int vertex_indices\nend_header\n");
    for (p, c) in mesh.vertices.iter().zip(&mesh.colors) {
        let _ = writeln!(out, "{} {} {} {} {} {}", p.x as f32, p.y as f32, p.z as f32, c[0], c[1], c[2]);
    }
    for f in &mesh.faces {
        let _ = writeln!(out, "3 {} {} {}", f[0], f[1], f[2]);
    }
    out
}

pub fn write_ply(mesh: &Mesh, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, encode_ply(mesh)).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Parses the ASCII PLY layout written by [`encode_ply`].
pub fn parse_ply(text: &str) -> Result<Mesh> {
    let err = |msg: String| Error::Ply(msg);
    let mut lines = text.lines();
    if lines.next() != Some("ply") {
        return Err(err("missing ply magic".into()));
    }
    let mut n_vertices = None;
    let mut n_faces = None;
    for line in lines.by_ref() {
        let words: Vec<&str> = line.split_whitespace().collect();
        match words.as_slice() {
            ["end_header"] => break,
            ["format", fmt, _] if *fmt != "ascii" => return Err(err(format!("unsupported format {fmt}"))),
            ["element", "vertex", n] => n_vertices = n.parse::<usize>().ok(),
            ["element", "face", n] => n_faces = n.parse::<usize>().ok(),
            _ => {}
        }
    }
    let nv = n_vertices.ok_or_else(|| err("no vertex element".into()))?;
    let nf = n_faces.unwrap_or(0);
    let mut mesh = Mesh {
        vertices: Vec::with_capacity(nv),
        colors: Vec::with_capacity(nv),
        faces: Vec::with_capacity(nf),
        sites: Vec::new(),
    };
    for k in 0..nv {
        let line = lines.next().ok_or_else(|| err(format!("vertex {k} missing")))?;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 6 {
            return Err(err(format!("vertex {k}: expected 6 fields")));
        }
        let f = |s: &str| s.parse::<f32>().map_err(|e| err(format!("vertex {k}: {e}")));
        let b = |s: &str| s.parse::<u8>().map_err(|e| err(format!("vertex {k}: {e}")));
        mesh.vertices.push(Point3::new(f(fields[0])? as f64, f(fields[1])? as f64, f(fields[2])? as f64));
        mesh.colors.push([b(fields[3])?, b(fields[4])?, b(fields[5])?]);
    }
    for k in 0..nf {
        let line = lines.next().ok_or_else(|| err(format!("face {k} missing")))?;
        let idx: Vec<u32> = line
            .split_whitespace()
            .map(|s| s.parse::<u32>().map_err(|e| err(format!("face {k}: {e}"))))
            .collect::<Result<_>>()?;
        match idx.as_slice() {
            [3, a, b, c] if [a, b, c].iter().all(|&&i| (i as usize) < nv) => mesh.faces.push([*a, *b, *c]),
            _ => return Err(err(format!("face {k}: expected an in-range triangle"))),
        }
    }
    Ok(mesh)
}

pub fn read_ply(path: impl AsRef<Path>) -> Result<Mesh> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_ply(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings::{Coloring, HueValue};
    use std::collections::HashSet;

    #[test]
    fn welded_pseudosphere_counts() {
        let m = tessellate(&Surface::Pseudosphere, (0.0, TAU), (0.0, 1.0), 4, 3).unwrap();
        assert_eq!(m.vertices.len(), 9);
        assert_eq!(m.faces.len(), 12);
        assert_eq!(m.colors.len(), 9);
    }

    #[test]
    fn unwelded_grid_counts_and_euler_characteristic() {
        let (nu, nv) = (7, 5);
        let m = tessellate(&Surface::Pseudosphere, (0.0, PI), (0.0, 2.0), nu, nv).unwrap();
        assert_eq!(m.vertices.len(), nu * nv);
        assert_eq!(m.faces.len(), 2 * (nu - 1) * (nv - 1));
        let mut edges = HashSet::new();
        for f in &m.faces {
            for k in 0..3 {
                let (a, b) = (f[k], f[(k + 1) % 3]);
                edges.insert((a.min(b), a.max(b)));
            }
        }
        let chi = m.vertices.len() as i64 - edges.len() as i64 + m.faces.len() as i64;
        assert_eq!(chi, 1);
    }

    #[test]
    fn weld_leaves_no_duplicates() {
        let m = tessellate(&Surface::Pseudosphere, (0.0, TAU), (0.0, 2.0), 33, 9).unwrap();
        for (k, p) in m.vertices.iter().enumerate() {
            for q in &m.vertices[k + 1..] {
                assert!(distance(*p, *q) > 1e-9);
            }
        }
    }

    #[test]
    fn faces_in_range_and_nondegenerate() {
        for s in [Surface::Sphere, Surface::Hemisphere, Surface::Pseudosphere, Surface::Dini { twist: 0.2 }] {
            let (u, v) = match s {
                Surface::Sphere => ((0.0, TAU), (0.0, PI)),
                Surface::Hemisphere => ((0.0, TAU), (0.0, FRAC_PI_2)),
                Surface::Dini { .. } => ((0.0, 4.0 * PI), (0.0, 2.0)),
                _ => ((0.0, TAU), (0.0, 2.0)),
            };
            let m = tessellate(&s, u, v, 24, 12).unwrap();
            for f in &m.faces {
                assert!(f.iter().all(|&i| (i as usize) < m.vertices.len()));
                let [a, b, c] = f.map(|i| m.vertices[i as usize]);
                assert!(triangle_area(a, b, c) > DEGENERATE_AREA, "{}", s.name());
            }
        }
    }

    #[test]
    fn sphere_poles_collapse() {
        let m = tessellate(&Surface::Sphere, (0.0, TAU), (0.0, PI), 9, 5).unwrap();
        // 8 columns per inner row, one vertex per pole
        assert_eq!(m.vertices.len(), 8 * 3 + 2);
        assert_eq!(m.faces.len(), 2 * 8 * 4 - 2 * 8);
    }

    #[test]
    fn zero_twist_dini_is_pseudosphere() {
        let d = tessellate(&Surface::Dini { twist: 0.0 }, (0.0, TAU), (0.0, 2.0), 16, 8).unwrap();
        assert_eq!(d.vertices.len(), 16 * 8);
        for j in 0..8 {
            for i in 0..15 {
                let a = d.vertices[j * 16 + i];
                let b = embed_pseudosphere(PseudoCoord::new(TAU * i as f64 / 15.0, 2.0 * j as f64 / 7.0)).unwrap();
                assert!(distance(a, b) < 1e-12);
            }
        }
    }

    #[test]
    fn dini_helical_symmetry() {
        let twist = 0.15;
        let m = tessellate(&Surface::Dini { twist }, (0.0, 4.0 * PI), (0.0, 3.0), 33, 6).unwrap();
        // column i and i + 16 are one full turn apart
        for j in 0..6 {
            for i in 0..17 {
                let a = m.vertices[j * 33 + i];
                let b = m.vertices[j * 33 + i + 16];
                let d = b.sub(a);
                assert!(d.x.abs() < 1e-12 && d.y.abs() < 1e-12);
                assert!((d.z - TAU * twist).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn range_errors() {
        assert!(tessellate(&Surface::Pseudosphere, (0.0, TAU), (-1.0, 1.0), 4, 4).is_err());
        assert!(tessellate(&Surface::Pseudosphere, (0.0, TAU), (0.0, 1.0), 1, 4).is_err());
        assert!(tessellate(&Surface::Pseudosphere, (0.0, 3.0 * PI), (0.0, 1.0), 4, 4).is_err());
        assert!(tessellate(&Surface::Hemisphere, (0.0, TAU), (0.0, PI), 4, 4).is_err());
        assert!(tessellate(&Surface::Sphere, (1.0, 0.0), (0.0, PI), 4, 4).is_err());
        assert!(tessellate(&Surface::Dini { twist: 0.1 }, (0.0, 15.0 * PI), (0.0, 3.0), 4, 4).is_ok());
    }

    #[test]
    fn identity_pseudosphere_color_depends_on_theta_only() {
        let m = tessellate(&Surface::Pseudosphere, (0.0, TAU), (0.0, 3.0), 64, 16).unwrap();
        let m = colorize(m, &ColorSpec::new(Coloring::Pseudo, Mobius::identity())).unwrap();
        for j in 1..16 {
            for i in 0..63 {
                assert_eq!(m.colors[j * 63 + i], m.colors[i]);
            }
        }
    }

    #[test]
    fn rim_black_fraction_for_shift() {
        let shift = Mobius::real(1.0, -2.0, 0.0, 1.0).unwrap();
        let nu = 2049;
        let m = tessellate(&Surface::Pseudosphere, (0.0, TAU), (0.0, 1.0), nu, 2).unwrap();
        let m = colorize(m, &ColorSpec::new(Coloring::Pseudo, shift)).unwrap();
        let rim = &m.colors[..nu - 1];
        let black = rim.iter().filter(|c| **c == [0, 0, 0]).count() as f64 / rim.len() as f64;
        assert!((black - 1.0 / PI).abs() < 0.02, "{black}");
    }

    #[test]
    fn dini_translation_has_no_black() {
        let m = tessellate(&Surface::Dini { twist: DEFAULT_TWIST }, (0.0, 15.0 * PI), (0.0, 3.0), 512, 64).unwrap();
        let third = Mobius::real(1.0, 0.0, 0.0, 9.0).unwrap();
        let m = colorize(m, &ColorSpec::new(Coloring::Pseudo, third)).unwrap();
        assert_eq!(m.black_vertices(), 0);
    }

    #[test]
    fn adjacent_colors_are_continuous() {
        // the rotation's hue changes by up to ~40 rad per unit near (2π, i),
        // so the grid has to be fine for neighbors to stay within 0.2 rad
        let spec = ColorSpec::new(Coloring::Pseudo, crate::motions::preset("fig8-rotation").unwrap().motion());
        let m = tessellate(&Surface::Pseudosphere, (0.0, TAU), (0.0, 3.0), 3072, 384).unwrap();
        let hues: Vec<Option<f64>> = m.sites.iter().map(|&s| spec.hue_at(s).and_then(HueValue::angle)).collect();
        let mut checked = 0;
        for f in &m.faces {
            for k in 0..3 {
                let (a, b) = (f[k] as usize, f[(k + 1) % 3] as usize);
                let (Some(ha), Some(hb)) = (hues[a], hues[b]) else { continue };
                let (Site::Pseudo(pa), Site::Pseudo(pb)) = (m.sites[a], m.sites[b]) else { unreachable!() };
                if (pa.theta - pb.theta).abs() > PI {
                    // welded seam: Re f is not periodic in θ
                    continue;
                }
                let gap = (ha - hb).abs();
                assert!(gap.min(TAU - gap) < 0.2, "{gap} between {:?} and {:?}", m.sites[a], m.sites[b]);
                checked += 1;
            }
        }
        assert!(checked > 1_000_000);
    }

    #[test]
    fn disc_landscape_heights() {
        let s = Surface::DiscLandscape {
            motion: Mobius::identity(),
            height: LineFamily::UltraParallel,
            exaggeration: DEFAULT_EXAGGERATION,
        };
        let m = tessellate(&s, (0.0, TAU), (0.0, 0.99), 32, 8).unwrap();
        // center collapses to one vertex at height 0.35 · 1/2
        assert_eq!(m.vertices.len(), 1 + 31 * 7);
        assert!((m.vertices[0].z - 0.175).abs() < 1e-12);
    }

    #[test]
    fn plane_landscape_of_inversion() {
        let s = Surface::PlaneLandscape {
            map: PlaneMap::InversionK,
            ceiling: 6.0,
        };
        let m = tessellate(&s, (-2.0, 2.0), (-2.0, 2.0), 5, 5).unwrap();
        // z = 0 sits at the grid center; |I_K(0)| = 1
        assert!((m.vertices[12].z - 2f64.ln()).abs() < 1e-12);
        // z = −i is the pole
        assert_eq!(m.vertices[7].z, 6.0);
    }

    #[test]
    fn ply_round_trip() {
        let m = tessellate(&Surface::Dini { twist: 0.1 }, (0.0, 3.0 * PI), (0.0, 2.0), 20, 6).unwrap();
        let m = colorize(m, &ColorSpec::new(Coloring::Pseudo, Mobius::real(1.0, 0.0, 0.0, 3.0).unwrap())).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.ply");
        write_ply(&m, &path).unwrap();
        let back = read_ply(&path).unwrap();
        assert_eq!(back.vertices.len(), m.vertices.len());
        assert_eq!(back.colors, m.colors);
        assert_eq!(back.faces, m.faces);
        for (a, b) in back.vertices.iter().zip(&m.vertices) {
            assert!(distance(*a, *b) < 1e-5);
        }
        assert!(back.clone().colorize_with(|_| WHITE).is_err());
        assert_eq!(encode_ply(&m), fs::read_to_string(&path).unwrap());
    }

    #[test]
    fn single_triangle_header() {
        let m = Mesh {
            vertices: vec![Point3::new(0.0, 0.0, 0.0), Point3::new(1.0, 0.0, 0.0), Point3::new(0.0, 1.0, 0.0)],
            colors: vec![[255, 0, 0]; 3],
            faces: vec![[0, 1, 2]],
            sites: Vec::new(),
        };
        let text = encode_ply(&m);
        assert!(text.contains("element vertex 3\n"));
        assert!(text.contains("element face 1\n"));
        assert!(text.ends_with("3 0 1 2\n"));
        assert!(text.contains("\n1 0 0 255 0 0\n"));
    }

    #[test]
    fn malformed_ply_rejected() {
        assert!(parse_ply("nope").is_err());
        assert!(parse_ply("ply\nformat ascii 1.0\nelement vertex 1\nend_header\n").is_err());
        let bad_face = "ply\nformat ascii 1.0\nelement vertex 1\nelement face 1\nend_header\n0 0 0 1 2 3\n3 0 0 5\n";
        assert!(parse_ply(bad_face).is_err());
    }

    #[test]
    fn beltrami_hemisphere_apex() {
        let m = tessellate(&Surface::Hemisphere, (0.0, TAU), (0.0, FRAC_PI_2), 16, 8).unwrap();
        let m = colorize(m, &ColorSpec::new(Coloring::BeltramiV1, Mobius::identity())).unwrap();
        assert_eq!(m.colors[0], hue_to_rgb(HueValue::Hue(1.5 * PI)));
    }
}
