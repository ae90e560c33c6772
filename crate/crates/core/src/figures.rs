//! Canonical scenes for each reproduced figure, with fixed framing.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::path::Path;

use crate::colorings::{color_complex, hue_to_rgb, ColorSpec, Coloring, LineFamily, DEFAULT_HEIGHT_CEILING};
use crate::cplx::{ExtComplex, Mobius};
use crate::error::{Error, Result};
use crate::mesh::{colorize, encode_ply, tessellate, write_ply, Mesh, PlaneMap, Surface, DEFAULT_EXAGGERATION, DEFAULT_TWIST};
use crate::models::invert_in_k;
use crate::motions::preset;
use crate::raster::{encode_ppm, render, render_contours, render_fn, write_png, write_ppm, Image, SceneDomain, WHITE};

/// Default σ window for pseudosphere scenes.
pub const DEFAULT_SIGMA: (f64, f64) = (0.0, 3.0);
pub const DEFAULT_BANDS: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Ppm,
    Png,
    Ply,
}

impl OutputFormat {
    pub fn from_name(name: &str) -> Option<Self> {
        match name.to_ascii_lowercase().as_str() {
            "ppm" => Some(OutputFormat::Ppm),
            "png" => Some(OutputFormat::Png),
            "ply" => Some(OutputFormat::Ply),
            _ => None,
        }
    }

    pub fn from_path(path: &Path) -> Option<Self> {
        path.extension().and_then(|e| e.to_str()).and_then(OutputFormat::from_name)
    }

    pub fn is_mesh(self) -> bool {
        self == OutputFormat::Ply
    }
}

/// Result of a scene: a raster image or a colored mesh.
#[derive(Clone, Debug, PartialEq)]
pub enum Artifact {
    Image(Image),
    Mesh(Mesh),
}

impl Artifact {
    pub fn kind(&self) -> &'static str {
        match self {
            Artifact::Image(_) => "image",
            Artifact::Mesh(_) => "mesh",
        }
    }

    pub fn default_format(&self) -> OutputFormat {
        match self {
            Artifact::Image(_) => OutputFormat::Ppm,
            Artifact::Mesh(_) => OutputFormat::Ply,
        }
    }

    /// Encoded bytes for the byte-exact formats (PPM, PLY).
    pub fn encode(&self) -> Vec<u8> {
        match self {
            Artifact::Image(img) => encode_ppm(img),
            Artifact::Mesh(m) => encode_ply(m).into_bytes(),
        }
    }

    pub fn write(&self, path: impl AsRef<Path>, format: OutputFormat) -> Result<()> {
        let path = path.as_ref();
        match (self, format) {
            (Artifact::Image(img), OutputFormat::Ppm) => write_ppm(img, path),
            (Artifact::Image(img), OutputFormat::Png) => write_png(img, path),
            (Artifact::Mesh(m), OutputFormat::Ply) => write_ply(m, path),
            _ => Err(Error::InvalidRange {
                what: "output format",
                detail: format!("a {} cannot be written as {format:?}", self.kind()),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Panel {
    Left,
    Right,
}

impl Panel {
    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "left" | "l" => Some(Panel::Left),
            "right" | "r" => Some(Panel::Right),
            _ => None,
        }
    }
}

/// Sampling overrides; `None` keeps the figure's default.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct FigureOptions {
    pub resolution: Option<usize>,
    pub supersample: Option<usize>,
    pub nu: Option<usize>,
    pub nv: Option<usize>,
    pub panel: Option<Panel>,
}

pub struct FigureInfo {
    pub name: &'static str,
    pub left: &'static str,
    /// `None` for single-panel figures.
    pub right: Option<&'static str>,
}

pub const FIGURES: &[FigureInfo] = &[
    FigureInfo { name: "fig1", left: "phase portrait of the identity on [-2,2]²", right: None },
    FigureInfo { name: "fig2", left: "3D phase portrait of inversion in K with modulus height", right: None },
    FigureInfo { name: "fig3", left: "identity phase portrait on the Riemann sphere", right: None },
    FigureInfo { name: "fig4", left: "identity C_P coloring of the pseudosphere", right: None },
    FigureInfo { name: "fig5", left: "identity C_P coloring of the upper half-plane", right: None },
    FigureInfo { name: "fig6", left: "naive complex phase on the pseudosphere", right: Some("C_P coloring of the pseudosphere") },
    FigureInfo { name: "fig7", left: "phase portrait of inversion in K", right: None },
    FigureInfo { name: "fig8", left: "rotation 4π²/(2π−z) on the pseudosphere", right: Some("the same rotation in the upper half-plane") },
    FigureInfo { name: "fig9", left: "C_D1 of the identity without conjugation", right: Some("C_D1 of the identity") },
    FigureInfo { name: "fig10", left: "limit rotation z−2 on the disc", right: Some("limit rotation z−2 on the pseudosphere") },
    FigureInfo { name: "fig11", left: "translation z/3 on the disc", right: Some("translation z/3 on the pseudosphere") },
    FigureInfo { name: "fig12", left: "translation 4z on the disc", right: Some("translation 4z on the pseudosphere") },
    FigureInfo { name: "fig13", left: "landscape of z/3, C_D2 colors over C_D1 height", right: Some("landscape of 4z, C_D1 colors over C_D2 height") },
    FigureInfo { name: "fig14", left: "C_D2 of the translation z/3", right: Some("C_D2 of the translation 4z") },
    FigureInfo { name: "fig15", left: "C_D1 with C_D2 contours, identity", right: Some("C_D1 with C_D2 contours, rotation") },
    FigureInfo { name: "fig16", left: "rotation on Dini's surface, θ ∈ [0, 7π]", right: Some("mirrored rotation on Dini's surface, θ ∈ [−5π, 2π]") },
    FigureInfo { name: "fig17", left: "translation z/9 on Dini's surface, θ ∈ [0, 15π]", right: None },
    FigureInfo { name: "disc-ultraparallel", left: "C_D2 of the identity without conjugation", right: Some("C_D2 of the identity") },
    FigureInfo { name: "beltrami", left: "C_B1 of the identity on the hemisphere", right: Some("C_B2 of the identity on the hemisphere") },
    FigureInfo { name: "klein", left: "C_K1 of the identity", right: Some("C_K2 of the identity") },
];

pub fn figure_info(name: &str) -> Result<&'static FigureInfo> {
    FIGURES.iter().find(|f| f.name == name).ok_or_else(|| Error::UnknownPreset(name.to_string()))
}

struct Sampling {
    res: usize,
    ss: usize,
    nu: Option<usize>,
    nv: Option<usize>,
}

impl Sampling {
    fn disc(&self) -> SceneDomain {
        SceneDomain::Disc { resolution: self.res }
    }

    fn grid(&self, nu: usize, nv: usize) -> (usize, usize) {
        (self.nu.unwrap_or(nu), self.nv.unwrap_or(nv))
    }

    fn mesh(&self, surface: Surface, u: (f64, f64), v: (f64, f64), nu: usize, nv: usize, spec: &ColorSpec) -> Result<Artifact> {
        let (nu, nv) = self.grid(nu, nv);
        Ok(Artifact::Mesh(colorize(tessellate(&surface, u, v, nu, nv)?, spec)?))
    }

    fn pseudosphere(&self, spec: &ColorSpec) -> Result<Artifact> {
        self.mesh(Surface::Pseudosphere, (0.0, TAU), DEFAULT_SIGMA, 256, 64, spec)
    }

    fn dini(&self, twist: f64, theta: (f64, f64), spec: &ColorSpec) -> Result<Artifact> {
        self.mesh(Surface::Dini { twist }, theta, DEFAULT_SIGMA, 1024, 256, spec)
    }

    fn raster(&self, spec: &ColorSpec, domain: SceneDomain) -> Result<Artifact> {
        Ok(Artifact::Image(render(spec, &domain, self.ss)?))
    }

    fn landscape(&self, motion: Mobius, height: LineFamily) -> Result<Artifact> {
        let surface = Surface::DiscLandscape {
            motion,
            height,
            exaggeration: DEFAULT_EXAGGERATION,
        };
        let color = match height.other() {
            LineFamily::Asymptotic => Coloring::DiscAsymptotic,
            LineFamily::UltraParallel => Coloring::DiscUltraparallel,
        };
        self.mesh(surface, (0.0, TAU), (0.0, 0.995), 256, 128, &ColorSpec::new(color, motion))
    }
}

fn spec(coloring: Coloring, motion: Mobius) -> ColorSpec {
    ColorSpec::new(coloring, motion)
}

fn motion(name: &str) -> Result<Mobius> {
    Ok(preset(name)?.motion())
}

fn plane(re: (f64, f64), im: (f64, f64), resolution: usize) -> SceneDomain {
    SceneDomain::Rectangle {
        re_min: re.0,
        re_max: re.1,
        im_min: im.0,
        im_max: im.1,
        resolution,
    }
}

fn half_plane(re: (f64, f64), im: (f64, f64), resolution: usize) -> SceneDomain {
    SceneDomain::HalfPlane {
        re_min: re.0,
        re_max: re.1,
        im_min: im.0,
        im_max: im.1,
        resolution,
    }
}

/// Builds one panel of a figure. Rasters default to 512 px wide with 2×2
/// supersampling.
pub fn figure(name: &str, options: &FigureOptions) -> Result<Artifact> {
    let info = figure_info(name)?;
    let panel = options.panel.unwrap_or(Panel::Left);
    if panel == Panel::Right && info.right.is_none() {
        return Err(Error::InvalidRange {
            what: "panel",
            detail: format!("{name} has a single panel"),
        });
    }
    let s = Sampling {
        res: options.resolution.unwrap_or(512),
        ss: options.supersample.unwrap_or(2),
        nu: options.nu,
        nv: options.nv,
    };
    let id = Mobius::identity();
    let left = panel == Panel::Left;
    match name {
        "fig1" => s.raster(&spec(Coloring::ComplexPhase, id), plane((-2.0, 2.0), (-2.0, 2.0), s.res)),
        "fig2" => {
            let surface = Surface::PlaneLandscape {
                map: PlaneMap::InversionK,
                ceiling: DEFAULT_HEIGHT_CEILING,
            };
            let (nu, nv) = s.grid(256, 256);
            let mesh = tessellate(&surface, (-3.0, 3.0), (-3.0, 3.0), nu, nv)?;
            let mesh = mesh.colorize_with(|site| match site {
                crate::colorings::Site::Plane(z) => hue_to_rgb(color_complex(invert_in_k, z)),
                _ => WHITE,
            })?;
            Ok(Artifact::Mesh(mesh))
        }
        "fig3" => s.mesh(Surface::Sphere, (0.0, TAU), (0.0, PI), 256, 128, &spec(Coloring::ComplexPhase, id)),
        "fig4" => s.pseudosphere(&spec(Coloring::Pseudo, id)),
        "fig5" => s.raster(&spec(Coloring::Pseudo, id), half_plane((-PI, 3.0 * PI), (0.02, 2.0 * PI), s.res)),
        "fig6" => s.pseudosphere(&spec(if left { Coloring::ComplexPhase } else { Coloring::Pseudo }, id)),
        "fig7" => {
            let img = render_fn(&plane((-3.0, 3.0), (-3.0, 3.0), s.res), s.ss, |z| {
                Some(hue_to_rgb(color_complex(invert_in_k, ExtComplex::Finite(z))))
            })?;
            Ok(Artifact::Image(img))
        }
        "fig8" => {
            let spec = spec(Coloring::Pseudo, motion("fig8-rotation")?);
            if left {
                s.pseudosphere(&spec)
            } else {
                s.raster(&spec, half_plane((-2.0 * PI, 4.0 * PI), (0.02, 3.0 * PI), s.res))
            }
        }
        "fig9" | "disc-ultraparallel" => {
            let coloring = if name == "fig9" { Coloring::DiscAsymptotic } else { Coloring::DiscUltraparallel };
            s.raster(&spec(coloring, id).with_conjugation_omitted(left), s.disc())
        }
        "fig10" | "fig11" | "fig12" => {
            let m = motion(match name {
                "fig10" => "fig10-limit-rotation",
                "fig11" => "fig11-translation-down",
                _ => "fig12-translation-up",
            })?;
            if left {
                s.raster(&spec(Coloring::DiscAsymptotic, m), s.disc())
            } else {
                s.pseudosphere(&spec(Coloring::Pseudo, m))
            }
        }
        "fig13" => {
            if left {
                s.landscape(motion("fig11-translation-down")?, LineFamily::Asymptotic)
            } else {
                s.landscape(motion("fig12-translation-up")?, LineFamily::UltraParallel)
            }
        }
        "fig14" => {
            let m = motion(if left { "fig11-translation-down" } else { "fig12-translation-up" })?;
            s.raster(&spec(Coloring::DiscUltraparallel, m), s.disc())
        }
        "fig15" => {
            let m = if left { id } else { motion("fig15-rotation")? };
            let img = render_contours(&spec(Coloring::DiscAsymptotic, m), LineFamily::UltraParallel, DEFAULT_BANDS, &s.disc())?;
            Ok(Artifact::Image(img))
        }
        "fig16" => {
            if left {
                s.dini(DEFAULT_TWIST, (0.0, 7.0 * PI), &spec(Coloring::Pseudo, motion("fig16-dini-rotation")?))
            } else {
                let m = motion("fig16-dini-rotation-mirrored")?;
                s.dini(-DEFAULT_TWIST, (-5.0 * PI, 2.0 * PI), &spec(Coloring::Pseudo, m))
            }
        }
        "fig17" => s.dini(DEFAULT_TWIST, (0.0, 15.0 * PI), &spec(Coloring::Pseudo, motion("fig17-dini-translation")?)),
        "beltrami" => {
            let coloring = if left { Coloring::BeltramiV1 } else { Coloring::BeltramiV2 };
            s.mesh(Surface::Hemisphere, (0.0, TAU), (0.0, FRAC_PI_2), 256, 64, &spec(coloring, id))
        }
        "klein" => {
            let coloring = if left { Coloring::KleinV1 } else { Coloring::KleinV2 };
            s.raster(&spec(coloring, id), s.disc())
        }
        _ => unreachable!("figure table and builder disagree on {name}"),
    }
}
