//! Command-line front end: render scenes, reproduce figures and run the
//! numeric self-checks.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use hyperphase::figures::{figure, OutputFormat, Panel, FigureOptions, FIGURES};
use hyperphase::motions::figure_presets;
use hyperphase::verify::run_all;

pub mod expr;
pub mod motion;
pub mod scene;

pub use motion::parse_motion;
use scene::{parse_config, SceneConfig, Settings};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SCENE_ERROR: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Parser)]
#[command(name = "hyperphase", version, about = "Phase portraits of hyperbolic motions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Render one scene described by flags and/or a config file.
    Render(RenderArgs),
    /// Reproduce a figure preset.
    Figure(FigureArgs),
    /// Run the numeric self-checks and print a pass/fail table.
    Verify,
    /// List motion presets and figures.
    ListPresets,
}

#[derive(Args)]
struct RenderArgs {
    /// Flat key = value file; flags given on the command line win.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    out: Option<String>,
    /// ppm, png or ply; inferred from the output extension by default.
    #[arg(long)]
    format: Option<String>,
    /// pseudosphere, dini, hemisphere, sphere, disc-landscape or plane-landscape.
    #[arg(long)]
    surface: Option<String>,
    /// disc, halfplane or plane (raster scenes).
    #[arg(long)]
    domain: Option<String>,
    /// complex, pseudo, disc1, disc2, beltrami1, beltrami2, klein1 or klein2.
    #[arg(long)]
    coloring: Option<String>,
    /// Coefficients a,b,c,d of z ↦ (az+b)/(cz+d).
    #[arg(long, allow_hyphen_values = true)]
    mobius: Option<String>,
    /// mobius:…, reflect:…;… or preset:<name>.
    #[arg(long, allow_hyphen_values = true)]
    motion: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    twist: Option<String>,
    /// θ window a:b, e.g. 0:15pi.
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    sigma: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    re: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    im: Option<String>,
    #[arg(long)]
    res: Option<String>,
    #[arg(long)]
    supersample: Option<String>,
    /// Overlay contour bands of the other disc coloring's height.
    #[arg(long)]
    bands: Option<String>,
    /// 1 or 2: line family used for heights.
    #[arg(long)]
    height_variant: Option<String>,
    /// Use plain inversion in K for the disc colorings.
    #[arg(long)]
    no_conj: bool,
    #[arg(long)]
    nu: Option<String>,
    #[arg(long)]
    nv: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    exaggeration: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    ceiling: Option<String>,
}

impl RenderArgs {
    fn settings(&self) -> Result<Settings> {
        let mut settings = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                parse_config(&text).with_context(|| path.display().to_string())?
            }
            None => Settings::new(),
        };
        let flags = [
            ("out", &self.out),
            ("format", &self.format),
            ("surface", &self.surface),
            ("domain", &self.domain),
            ("coloring", &self.coloring),
            ("mobius", &self.mobius),
            ("motion", &self.motion),
            ("twist", &self.twist),
            ("theta", &self.theta),
            ("sigma", &self.sigma),
            ("re", &self.re),
            ("im", &self.im),
            ("res", &self.res),
            ("supersample", &self.supersample),
            ("bands", &self.bands),
            ("height-variant", &self.height_variant),
            ("nu", &self.nu),
            ("nv", &self.nv),
            ("exaggeration", &self.exaggeration),
            ("ceiling", &self.ceiling),
        ];
        for (key, value) in flags {
            if let Some(v) = value {
                settings.insert(key.to_string(), v.clone());
            }
        }
        // a motion flag replaces whichever source the file chose
        if self.mobius.is_some() {
            settings.remove("motion");
        } else if self.motion.is_some() {
            settings.remove("mobius");
        }
        if self.no_conj {
            settings.insert("no-conj".into(), "true".into());
        }
        Ok(settings)
    }
}

#[derive(Args)]
struct FigureArgs {
    /// Figure name; see `list-presets`.
    name: String,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    res: Option<usize>,
    #[arg(long)]
    supersample: Option<usize>,
    #[arg(long)]
    nu: Option<usize>,
    #[arg(long)]
    nv: Option<usize>,
    /// left or right.
    #[arg(long, default_value = "left")]
    panel: String,
}

fn render_cmd(args: &RenderArgs) -> Result<i32> {
    let config = SceneConfig::from_settings(&args.settings()?)?;
    let artifact = config.build()?;
    artifact.write(&config.out, config.format)?;
    println!("wrote {}", config.out.display());
    Ok(EXIT_OK)
}

fn figure_cmd(args: &FigureArgs) -> Result<i32> {
    let Some(panel) = Panel::from_name(&args.panel) else {
        bail!("--panel expects left or right, got '{}'", args.panel);
    };
    for (flag, v) in [("res", args.res), ("supersample", args.supersample), ("nu", args.nu), ("nv", args.nv)] {
        if v == Some(0) {
            bail!("--{flag} must be positive");
        }
    }
    let options = FigureOptions {
        resolution: args.res,
        supersample: args.supersample,
        nu: args.nu,
        nv: args.nv,
        panel: Some(panel),
    };
    let artifact = figure(&args.name, &options)?;
    let explicit = match &args.format {
        Some(f) => Some(OutputFormat::from_name(f).with_context(|| format!("unknown format '{f}'"))?),
        None => None,
    };
    let format = explicit
        .or_else(|| args.out.as_deref().and_then(OutputFormat::from_path))
        .unwrap_or(artifact.default_format());
    let out = args.out.clone().unwrap_or_else(|| {
        let suffix = if panel == Panel::Right { "-right" } else { "" };
        let ext = format!("{format:?}").to_ascii_lowercase();
        PathBuf::from(format!("{}{suffix}.{ext}", args.name))
    });
    artifact.write(&out, format)?;
    println!("wrote {}", out.display());
    Ok(EXIT_OK)
}

fn verify_cmd() -> i32 {
    let checks = run_all();
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for c in &checks {
        let mark = if c.passed { "PASS" } else { "FAIL" };
        println!("{mark}  {:width$}  {}", c.name, c.detail);
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    println!("{} checks, {failed} failed", checks.len());
    if failed == 0 {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

fn list_presets() {
    println!("motion presets (use --motion preset:<name>):");
    for p in figure_presets() {
        println!("  {:30} {}  [{}]", p.name, p.motion(), p.figure);
    }
    println!("figures (use `figure <name> [--panel right]`):");
    for f in FIGURES {
        match f.right {
            Some(right) => println!("  {:20} left: {}; right: {}", f.name, f.left, right),
            None => println!("  {:20} {}", f.name, f.left),
        }
    }
}

/// Runs the program on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_SCENE_ERROR } else { EXIT_OK };
        }
    };
    let result = match &cli.command {
        Command::Render(args) => render_cmd(args),
        Command::Figure(args) => figure_cmd(args),
        Command::Verify => Ok(verify_cmd()),
        Command::ListPresets => {
            list_presets();
            Ok(EXIT_OK)
        }
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        EXIT_SCENE_ERROR
    })
}
