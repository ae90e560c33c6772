//! Textual motion descriptions:
//!
//! ```text
//! mobius:a,b,c,d
//! reflect:circle(c,r);line(x)
//! reflect:line(p,angle);circle(c,r)
//! preset:<name>
//! ```

use std::fmt;

use hyperphase::cplx::{GenCircle, Mobius, C64};
use hyperphase::motions::{motion_from_reflections, preset};

use crate::expr::{ParseError, Parser};

#[derive(Debug)]
pub enum MotionError {
    Parse(ParseError),
    Invalid(hyperphase::Error),
}

impl fmt::Display for MotionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MotionError::Parse(e) => write!(f, "cannot parse motion {e}"),
            MotionError::Invalid(e) => write!(f, "invalid motion: {e}"),
        }
    }
}

impl std::error::Error for MotionError {}

impl From<ParseError> for MotionError {
    fn from(e: ParseError) -> Self {
        MotionError::Parse(e)
    }
}

impl From<hyperphase::Error> for MotionError {
    fn from(e: hyperphase::Error) -> Self {
        MotionError::Invalid(e)
    }
}

/// Reads `n` comma-separated expressions.
pub fn parse_list(p: &mut Parser<'_>, n: usize) -> Result<Vec<C64>, ParseError> {
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        if k > 0 {
            p.expect(',')?;
        }
        out.push(p.expr()?);
    }
    Ok(out)
}

fn real(p: &Parser<'_>, v: C64, what: &str) -> Result<f64, ParseError> {
    if v.im != 0.0 {
        return Err(p.error(format!("{what} must be real")));
    }
    Ok(v.re)
}

fn curve(p: &mut Parser<'_>) -> Result<GenCircle, MotionError> {
    p.peek();
    let err_at = p.error("");
    let kind = p.ident();
    p.expect('(')?;
    let c = match kind {
        "circle" => {
            let center = p.expr()?;
            p.expect(',')?;
            let radius = p.expr()?;
            let radius = real(p, radius, "radius")?;
            GenCircle::circle(center, radius)?
        }
        "line" => {
            let base = p.expr()?;
            if p.eat(',') {
                let angle = p.expr()?;
                let angle = real(p, angle, "angle")?;
                GenCircle::line(base, angle)?
            } else {
                GenCircle::vertical(real(p, base, "line position")?)
            }
        }
        other => {
            return Err(ParseError {
                message: format!("expected 'circle' or 'line', found '{other}'"),
                ..err_at
            }
            .into())
        }
    };
    p.expect(')')?;
    Ok(c)
}

/// Parses a motion description into a nondegenerate Möbius map.
pub fn parse_motion(text: &str) -> Result<Mobius, MotionError> {
    let Some((kind, body)) = text.split_once(':') else {
        return Err(ParseError {
            position: 0,
            message: "expected 'mobius:', 'reflect:' or 'preset:'".into(),
        }
        .into());
    };
    let offset = kind.len() + 1;
    let mut p = Parser::new(body, offset);
    match kind.trim() {
        "mobius" => {
            let k = parse_list(&mut p, 4)?;
            p.finish()?;
            Ok(Mobius::new(k[0], k[1], k[2], k[3])?)
        }
        "reflect" => {
            let l1 = curve(&mut p)?;
            p.expect(';')?;
            let l2 = curve(&mut p)?;
            p.finish()?;
            Ok(motion_from_reflections(&l1, &l2)?)
        }
        "preset" => Ok(preset(body.trim())?.motion()),
        other => Err(ParseError {
            position: 0,
            message: format!("unknown motion kind '{other}'"),
        }
        .into()),
    }
}
