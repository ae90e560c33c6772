//! Scene settings: a flat key=value map built from a config file and flags,
//! validated into a [`SceneConfig`].

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use hyperphase::colorings::{ColorSpec, Coloring, LineFamily, DEFAULT_HEIGHT_CEILING};
use hyperphase::cplx::Mobius;
use hyperphase::figures::{Artifact, OutputFormat, DEFAULT_SIGMA};
use hyperphase::mesh::{colorize, tessellate, PlaneMap, Surface, DEFAULT_EXAGGERATION, DEFAULT_TWIST};
use hyperphase::raster::{render, render_contours_styled, ContourStyle, SceneDomain};

use crate::expr::{parse_range, parse_real, Parser};
use crate::motion::{parse_list, parse_motion};

/// Every recognised setting; flags use the same names with a `--` prefix.
pub const KEYS: &[&str] = &[
    "out",
    "format",
    "surface",
    "domain",
    "coloring",
    "mobius",
    "motion",
    "twist",
    "theta",
    "sigma",
    "re",
    "im",
    "res",
    "supersample",
    "bands",
    "height-variant",
    "no-conj",
    "nu",
    "nv",
    "exaggeration",
    "ceiling",
];

pub type Settings = BTreeMap<String, String>;

/// Parses `key = value` lines; `#` starts a comment.
pub fn parse_config(text: &str) -> Result<Settings> {
    let mut out = Settings::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| anyhow!("config line {}: expected key = value", n + 1))?;
        let key = key.trim();
        if !KEYS.contains(&key) {
            bail!("config line {}: unknown key '{key}'", n + 1);
        }
        out.insert(key.to_string(), value.trim().to_string());
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Scene {
    Raster {
        domain: SceneDomain,
        supersample: usize,
        contours: Option<(LineFamily, usize)>,
    },
    Mesh {
        surface: Surface,
        u: (f64, f64),
        v: (f64, f64),
        nu: usize,
        nv: usize,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct SceneConfig {
    pub out: PathBuf,
    pub format: OutputFormat,
    pub scene: Scene,
    pub spec: ColorSpec,
}

struct Lookup<'a>(&'a Settings);

impl Lookup<'_> {
    fn raw(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(String::as_str)
    }

    fn real(&self, key: &str) -> Result<Option<f64>> {
        self.raw(key)
            .map(|v| parse_real(v).with_context(|| format!("--{key} {v}")))
            .transpose()
    }

    fn range(&self, key: &str) -> Result<Option<(f64, f64)>> {
        self.raw(key)
            .map(|v| parse_range(v).with_context(|| format!("--{key} {v}")))
            .transpose()
    }

    fn count(&self, key: &str) -> Result<Option<usize>> {
        self.raw(key)
            .map(|v| {
                v.parse::<usize>()
                    .ok()
                    .filter(|&n| n > 0)
                    .ok_or_else(|| anyhow!("--{key} expects a positive integer, got '{v}'"))
            })
            .transpose()
    }

    fn flag(&self, key: &str) -> Result<bool> {
        match self.raw(key) {
            None | Some("false") | Some("0") | Some("no") => Ok(false),
            Some("true") | Some("1") | Some("yes") | Some("") => Ok(true),
            Some(v) => bail!("--{key} expects true or false, got '{v}'"),
        }
    }
}

fn family(v: &str) -> Result<LineFamily> {
    match v {
        "1" => Ok(LineFamily::Asymptotic),
        "2" => Ok(LineFamily::UltraParallel),
        _ => bail!("--height-variant expects 1 or 2, got '{v}'"),
    }
}

/// Reads the single motion source, defaulting to the identity.
fn motion(s: &Lookup<'_>) -> Result<Mobius> {
    match (s.raw("mobius"), s.raw("motion")) {
        (Some(_), Some(_)) => bail!("give either --mobius or --motion, not both"),
        (Some(text), None) => {
            let mut p = Parser::new(text, 0);
            let k = parse_list(&mut p, 4).and_then(|k| p.finish().map(|_| k));
            let k = k.with_context(|| format!("--mobius {text}"))?;
            Ok(Mobius::new(k[0], k[1], k[2], k[3]).with_context(|| format!("--mobius {text}"))?)
        }
        (None, Some(text)) => Ok(parse_motion(text).with_context(|| format!("--motion {text}"))?),
        (None, None) => Ok(Mobius::identity()),
    }
}

fn default_coloring(surface: Option<&str>, domain: &str) -> &'static str {
    match surface {
        Some("pseudosphere") | Some("dini") => "pseudo",
        Some("hemisphere") => "beltrami1",
        Some("sphere") | Some("plane-landscape") => "complex",
        Some(_) => "disc1",
        None => match domain {
            "halfplane" => "pseudo",
            "plane" => "complex",
            _ => "disc1",
        },
    }
}

impl SceneConfig {
    pub fn from_settings(settings: &Settings) -> Result<Self> {
        let s = Lookup(settings);
        let out = PathBuf::from(s.raw("out").ok_or_else(|| anyhow!("--out is required"))?);
        let surface_name = s.raw("surface");
        let domain_name = s.raw("domain").unwrap_or("disc");
        let coloring_name = s.raw("coloring").unwrap_or(default_coloring(surface_name, domain_name));
        let coloring = Coloring::from_name(coloring_name).ok_or_else(|| {
            let names: Vec<_> = Coloring::ALL.iter().map(|c| c.name()).collect();
            anyhow!("unknown coloring '{coloring_name}' (expected one of {})", names.join(", "))
        })?;
        let motion = motion(&s)?;
        let spec = ColorSpec::new(coloring, motion).with_conjugation_omitted(s.flag("no-conj")?);
        let height = s.raw("height-variant").map(family).transpose()?;

        let scene = match surface_name {
            None => {
                let res = s.count("res")?.unwrap_or(512);
                let re = s.range("re")?;
                let im = s.range("im")?;
                let domain = match domain_name {
                    "disc" => SceneDomain::Disc { resolution: res },
                    "halfplane" | "plane" => {
                        let (re, im) = if domain_name == "halfplane" {
                            (re.unwrap_or((-PI, 3.0 * PI)), im.unwrap_or((0.02, TAU)))
                        } else {
                            (re.unwrap_or((-2.0, 2.0)), im.unwrap_or((-2.0, 2.0)))
                        };
                        let (re_min, re_max, im_min, im_max) = (re.0, re.1, im.0, im.1);
                        if domain_name == "halfplane" {
                            SceneDomain::HalfPlane { re_min, re_max, im_min, im_max, resolution: res }
                        } else {
                            SceneDomain::Rectangle { re_min, re_max, im_min, im_max, resolution: res }
                        }
                    }
                    other => bail!("unknown domain '{other}' (expected disc, halfplane or plane)"),
                };
                let contours = match s.count("bands")? {
                    Some(bands) => {
                        let color_family = coloring
                            .family()
                            .ok_or_else(|| anyhow!("contours need a disc coloring, not {coloring_name}"))?;
                        Some((height.unwrap_or(color_family.other()), bands))
                    }
                    None => None,
                };
                Scene::Raster {
                    domain,
                    supersample: s.count("supersample")?.unwrap_or(2),
                    contours,
                }
            }
            Some(name) => {
                let theta = s.range("theta")?;
                let sigma = s.range("sigma")?;
                let full = theta.unwrap_or((0.0, TAU));
                let (surface, u, v, nu, nv) = match name {
                    "pseudosphere" => (Surface::Pseudosphere, full, sigma.unwrap_or(DEFAULT_SIGMA), 256, 64),
                    "dini" => {
                        let twist = s.real("twist")?.unwrap_or(DEFAULT_TWIST);
                        let theta = theta.unwrap_or((0.0, 7.0 * PI));
                        (Surface::Dini { twist }, theta, sigma.unwrap_or(DEFAULT_SIGMA), 1024, 256)
                    }
                    "hemisphere" => (Surface::Hemisphere, full, (0.0, FRAC_PI_2), 256, 64),
                    "sphere" => (Surface::Sphere, full, (0.0, PI), 256, 128),
                    "disc-landscape" => {
                        let color_family = coloring.family().unwrap_or(LineFamily::Asymptotic);
                        let surface = Surface::DiscLandscape {
                            motion,
                            height: height.unwrap_or(color_family.other()),
                            exaggeration: s.real("exaggeration")?.unwrap_or(DEFAULT_EXAGGERATION),
                        };
                        (surface, full, (0.0, 0.995), 256, 128)
                    }
                    "plane-landscape" => {
                        let surface = Surface::PlaneLandscape {
                            map: PlaneMap::Mobius(motion),
                            ceiling: s.real("ceiling")?.unwrap_or(DEFAULT_HEIGHT_CEILING),
                        };
                        let re = s.range("re")?.unwrap_or((-3.0, 3.0));
                        let im = s.range("im")?.unwrap_or((-3.0, 3.0));
                        (surface, re, im, 256, 256)
                    }
                    other => bail!(
                        "unknown surface '{other}' (expected pseudosphere, dini, hemisphere, sphere, disc-landscape or plane-landscape)"
                    ),
                };
                Scene::Mesh {
                    surface,
                    u,
                    v,
                    nu: s.count("nu")?.unwrap_or(nu),
                    nv: s.count("nv")?.unwrap_or(nv),
                }
            }
        };

        let is_mesh = matches!(scene, Scene::Mesh { .. });
        let format = match s.raw("format") {
            Some(f) => OutputFormat::from_name(f).ok_or_else(|| anyhow!("unknown format '{f}' (expected ppm, png or ply)"))?,
            None => OutputFormat::from_path(&out).unwrap_or(if is_mesh { OutputFormat::Ply } else { OutputFormat::Ppm }),
        };
        if format.is_mesh() != is_mesh {
            bail!(
                "format {format:?} does not fit a {} scene",
                if is_mesh { "mesh" } else { "raster" }
            );
        }
        Ok(SceneConfig { out, format, scene, spec })
    }

    pub fn build(&self) -> hyperphase::Result<Artifact> {
        match &self.scene {
            Scene::Raster {
                domain,
                supersample,
                contours: None,
            } => Ok(Artifact::Image(render(&self.spec, domain, *supersample)?)),
            Scene::Raster {
                domain,
                supersample,
                contours: Some((family, bands)),
            } => {
                let style = ContourStyle {
                    bands: *bands,
                    supersample: *supersample,
                    ..ContourStyle::default()
                };
                Ok(Artifact::Image(render_contours_styled(&self.spec, *family, &style, domain)?))
            }
            Scene::Mesh { surface, u, v, nu, nv } => {
                Ok(Artifact::Mesh(colorize(tessellate(surface, *u, *v, *nu, *nv)?, &self.spec)?))
            }
        }
    }
}
