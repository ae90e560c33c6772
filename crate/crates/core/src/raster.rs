//! Sampling colorings over 2D domains into RGB images, plus PPM/PNG output.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use rayon::prelude::*;

use crate::colorings::{height_disc, hue_to_rgb, ColorSpec, Coloring, LineFamily, Site};
use crate::cplx::C64;
use crate::error::{Error, Result};
use crate::models::klein_to_hemisphere;

pub type Rgb = [u8; 3];

pub const WHITE: Rgb = [255, 255, 255];

/// Row-major RGB image; row 0 is the top of the domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Image {
    width: usize,
    height: usize,
    pixels: Vec<Rgb>,
}

impl Image {
    pub fn new(width: usize, height: usize, pixels: Vec<Rgb>) -> Result<Self> {
        if width == 0 || height == 0 || pixels.len() != width * height {
            return Err(Error::InvalidRange {
                what: "image",
                detail: format!("{width}×{height} with {} pixels", pixels.len()),
            });
        }
        Ok(Image { width, height, pixels })
    }

    pub fn filled(width: usize, height: usize, color: Rgb) -> Result<Self> {
        Image::new(width, height, vec![color; width * height])
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[Rgb] {
        &self.pixels
    }

    pub fn pixel(&self, col: usize, row: usize) -> Rgb {
        self.pixels[row * self.width + col]
    }
}

/// Region of the plane sampled by a render.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SceneDomain {
    /// The unit disc, framed by the square `[-1, 1]²` at `resolution²` pixels.
    Disc { resolution: usize },
    /// A window of the upper half-plane; `resolution` is the pixel width.
    HalfPlane {
        re_min: f64,
        re_max: f64,
        im_min: f64,
        im_max: f64,
        resolution: usize,
    },
    /// A window of the complex plane; `resolution` is the pixel width.
    Rectangle {
        re_min: f64,
        re_max: f64,
        im_min: f64,
        im_max: f64,
        resolution: usize,
    },
}

impl SceneDomain {
    fn bounds(&self) -> (f64, f64, f64, f64) {
        match *self {
            SceneDomain::Disc { .. } => (-1.0, 1.0, -1.0, 1.0),
            SceneDomain::HalfPlane { re_min, re_max, im_min, im_max, .. }
            | SceneDomain::Rectangle { re_min, re_max, im_min, im_max, .. } => (re_min, re_max, im_min, im_max),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (x0, x1, y0, y1) = self.bounds();
        let resolution = match *self {
            SceneDomain::Disc { resolution }
            | SceneDomain::HalfPlane { resolution, .. }
            | SceneDomain::Rectangle { resolution, .. } => resolution,
        };
        let bad = |detail: String| Err(Error::InvalidRange { what: "scene domain", detail });
        if resolution == 0 {
            return bad("resolution must be positive".into());
        }
        if !(x0.is_finite() && x1.is_finite() && y0.is_finite() && y1.is_finite() && x0 < x1 && y0 < y1) {
            return bad(format!("bounds [{x0}, {x1}] × [{y0}, {y1}] are not ordered"));
        }
        if matches!(self, SceneDomain::HalfPlane { .. }) && y0 <= 0.0 {
            return bad(format!("half-plane window needs im_min > 0, got {y0}"));
        }
        Ok(())
    }

    /// Pixel dimensions; the height follows the window's aspect ratio.
    pub fn dimensions(&self) -> (usize, usize) {
        match *self {
            SceneDomain::Disc { resolution } => (resolution, resolution),
            SceneDomain::HalfPlane { resolution, .. } | SceneDomain::Rectangle { resolution, .. } => {
                let (x0, x1, y0, y1) = self.bounds();
                let h = (resolution as f64 * (y1 - y0) / (x1 - x0)).round().max(1.0);
                (resolution, h as usize)
            }
        }
    }

    /// Domain point for fractional image coordinates (`fx, fy ∈ [0, 1]`,
    /// `fy = 0` at the top).
    pub fn point(&self, fx: f64, fy: f64) -> C64 {
        let (x0, x1, y0, y1) = self.bounds();
        C64::new(x0 + fx * (x1 - x0), y1 - fy * (y1 - y0))
    }

    pub fn is_disc(&self) -> bool {
        matches!(self, SceneDomain::Disc { .. })
    }
}

/// Which model a disc-domain pixel belongs to for a given coloring. The
/// Beltrami hemisphere is seen from straight above.
pub fn disc_site(coloring: Coloring, w: C64) -> Option<Site> {
    match coloring {
        Coloring::KleinV1 | Coloring::KleinV2 => Some(Site::Klein(w)),
        Coloring::BeltramiV1 | Coloring::BeltramiV2 => klein_to_hemisphere(w).ok().map(Site::Sphere),
        _ => Some(Site::Disc(w)),
    }
}

fn site_for(spec: &ColorSpec, domain: &SceneDomain, z: C64) -> Option<Site> {
    if domain.is_disc() {
        disc_site(spec.coloring, z)
    } else {
        Some(Site::Plane(z.into()))
    }
}

/// Threads used for rendering; `HYPERPHASE_THREADS` caps it (0 or unset = auto).
fn thread_cap() -> Option<usize> {
    std::env::var("HYPERPHASE_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

/// Runs `work` on a pool honoring the thread cap.
pub(crate) fn with_pool<T: Send>(work: impl FnOnce() -> T + Send) -> T {
    match thread_cap() {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(work),
            Err(_) => work(),
        },
        None => work(),
    }
}

/// Renders any per-point color function over a domain.
///
/// Each pixel averages `supersample²` samples at fixed stratified offsets.
/// `color` returns `None` for background; for the disc domain, pixels whose
/// center lies outside the unit circle are white regardless.
pub fn render_fn<F>(domain: &SceneDomain, supersample: usize, color: F) -> Result<Image>
where
    F: Fn(C64) -> Option<Rgb> + Sync,
{
    domain.validate()?;
    if supersample == 0 {
        return Err(Error::InvalidRange {
            what: "supersample",
            detail: "must be positive".into(),
        });
    }
    let (w, h) = domain.dimensions();
    let s = supersample;
    let render_row = |row: usize| -> Vec<Rgb> {
        (0..w)
            .map(|col| {
                let center = domain.point((col as f64 + 0.5) / w as f64, (row as f64 + 0.5) / h as f64);
                if domain.is_disc() && center.norm() > 1.0 {
                    return WHITE;
                }
                let mut sum = [0u32; 3];
                let mut count = 0u32;
                for sy in 0..s {
                    for sx in 0..s {
                        let fx = (col as f64 + (sx as f64 + 0.5) / s as f64) / w as f64;
                        let fy = (row as f64 + (sy as f64 + 0.5) / s as f64) / h as f64;
                        let z = domain.point(fx, fy);
                        if domain.is_disc() && z.norm() > 1.0 {
                            continue;
                        }
                        let rgb = color(z).unwrap_or(WHITE);
                        for k in 0..3 {
                            sum[k] += rgb[k] as u32;
                        }
                        count += 1;
                    }
                }
                if count == 0 {
                    return color(center).unwrap_or(WHITE);
                }
                sum.map(|v| ((v as f64 / count as f64).round()) as u8)
            })
            .collect()
    };
    let rows: Vec<Vec<Rgb>> = with_pool(|| (0..h).into_par_iter().map(render_row).collect());
    Image::new(w, h, rows.into_iter().flatten().collect())
}

/// Renders a coloring of a motion over a domain.
pub fn render(spec: &ColorSpec, domain: &SceneDomain, supersample: usize) -> Result<Image> {
    render_fn(domain, supersample, |z| {
        let site = site_for(spec, domain, z)?;
        spec.hue_at(site).map(hue_to_rgb)
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ContourStyle {
    pub bands: usize,
    /// Multiplier applied to contour pixels.
    pub darken: f64,
    pub supersample: usize,
}

impl Default for ContourStyle {
    fn default() -> Self {
        ContourStyle {
            bands: 12,
            darken: 0.45,
            supersample: 1,
        }
    }
}

/// Disc coloring overlaid with level curves of the other family's height.
pub fn render_contours(
    color_spec: &ColorSpec,
    height_family: LineFamily,
    bands: usize,
    domain: &SceneDomain,
) -> Result<Image> {
    let style = ContourStyle {
        bands,
        ..ContourStyle::default()
    };
    render_contours_styled(color_spec, height_family, &style, domain)
}

pub fn render_contours_styled(
    color_spec: &ColorSpec,
    height_family: LineFamily,
    style: &ContourStyle,
    domain: &SceneDomain,
) -> Result<Image> {
    if !domain.is_disc() {
        return Err(Error::InvalidRange {
            what: "contour domain",
            detail: "contours are drawn on the disc".into(),
        });
    }
    match color_spec.coloring.family() {
        Some(f) if f == height_family => return Err(Error::InvalidComposite),
        Some(_) => {}
        None => {
            return Err(Error::InvalidRange {
                what: "contour coloring",
                detail: format!("{} has no line family", color_spec.coloring.name()),
            })
        }
    }
    if style.bands == 0 {
        return Err(Error::InvalidRange {
            what: "bands",
            detail: "must be positive".into(),
        });
    }
    let base = render(color_spec, domain, style.supersample)?;
    let (w, h) = (base.width(), base.height());
    let f = color_spec.motion;
    let bands = style.bands;
    let band_rows: Vec<Vec<Option<usize>>> = with_pool(|| {
        (0..h)
            .into_par_iter()
            .map(|row| {
                (0..w)
                    .map(|col| {
                        let z = domain.point((col as f64 + 0.5) / w as f64, (row as f64 + 0.5) / h as f64);
                        (z.norm() <= 1.0).then(|| {
                            let height = height_disc(&f, z, height_family);
                            ((height * bands as f64).floor() as usize).min(bands - 1)
                        })
                    })
                    .collect()
            })
            .collect()
    });
    let band = |col: usize, row: usize| band_rows[row][col];
    let mut pixels = base.pixels().to_vec();
    for row in 0..h {
        for col in 0..w {
            let Some(here) = band(col, row) else { continue };
            let neighbors = [
                (col + 1 < w).then(|| band(col + 1, row)).flatten(),
                (row + 1 < h).then(|| band(col, row + 1)).flatten(),
                (col > 0).then(|| band(col - 1, row)).flatten(),
                (row > 0).then(|| band(col, row - 1)).flatten(),
            ];
            if neighbors.iter().flatten().any(|&b| b != here) {
                let p = &mut pixels[row * w + col];
                *p = p.map(|v| (v as f64 * style.darken).round() as u8);
            }
        }
    }
    Image::new(w, h, pixels)
}

/// Binary PPM bytes: `P6 <w> <h> 255\n` followed by row-major RGB.
pub fn encode_ppm(img: &Image) -> Vec<u8> {
    let header = format!("P6 {} {} 255\n", img.width, img.height);
    let mut out = Vec::with_capacity(header.len() + 3 * img.pixels.len());
    out.extend_from_slice(header.as_bytes());
    for p in &img.pixels {
        out.extend_from_slice(p);
    }
    out
}

pub fn write_ppm(img: &Image, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let io = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut file = BufWriter::new(File::create(path).map_err(io)?);
    file.write_all(&encode_ppm(img)).map_err(io)?;
    file.flush().map_err(io)
}

pub fn write_png(img: &Image, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let raw: Vec<u8> = img.pixels.iter().flatten().copied().collect();
    let buffer = image::RgbImage::from_raw(img.width as u32, img.height as u32, raw)
        .expect("pixel buffer matches dimensions");
    buffer.save(path).map_err(|source| Error::Image {
        path: path.to_path_buf(),
        source,
    })
}
