//! Reading instances from files, stdin or inline text.

use std::fmt;
use std::io::Read;
use std::path::Path;

use clap::ValueEnum;
use petrial_core::{Bouquet, RibbonGraph, SignedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Auto,
    /// `v1: 1 -2 3` records, one per vertex
    Rotation,
    /// a single line of signed chord labels
    Chord,
    /// `signs:` and `edges:` lines
    Signed,
}

#[derive(Clone, Debug)]
pub enum Instance {
    Ribbon(RibbonGraph),
    Bouquet(Bouquet),
    Signed(SignedGraph),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Ribbon(_) => "ribbon graph",
            Instance::Bouquet(_) => "chord diagram",
            Instance::Signed(_) => "signed graph",
        }
    }

    /// The ribbon graph behind a rotation system or chord diagram.
    pub fn ribbon(&self) -> Option<RibbonGraph> {
        match self {
            Instance::Ribbon(g) => Some(g.clone()),
            Instance::Bouquet(b) => Some(b.as_graph().clone()),
            Instance::Signed(_) => None,
        }
    }

    /// A chord diagram, or a rotation system with one vertex.
    pub fn bouquet(&self) -> Option<Bouquet> {
        match self {
            Instance::Bouquet(b) => Some(b.clone()),
            Instance::Ribbon(g) => Bouquet::try_from(g.clone()).ok(),
            Instance::Signed(_) => None,
        }
    }
}

#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

/// Text of `path` (`-` for stdin) or of `inline`.
pub fn read_text(
    path: Option<&Path>,
    inline: Option<&str>,
) -> Result<(String, String), InputError> {
    match (path, inline) {
        (_, Some(text)) => Ok((text.to_string(), "<inline>".into())),
        (Some(p), None) if p == Path::new("-") => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| InputError(format!("reading stdin: {e}")))?;
            Ok((text, "<stdin>".into()))
        }
        (Some(p), None) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| InputError(format!("{}: {e}", p.display())))?;
            Ok((text, p.display().to_string()))
        }
        (None, None) => Err(InputError(
            "no input: give a path, `-` for stdin, or --inline".into(),
        )),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
}

pub fn detect(text: &str) -> InputFormat {
    let lines: Vec<&str> = content_lines(text).collect();
    if lines
        .iter()
        .any(|l| l.starts_with("signs:") || l.starts_with("edges:"))
    {
        InputFormat::Signed
    } else if lines.len() == 1 && !lines[0].contains(':') && !lines[0].contains('/') {
        InputFormat::Chord
    } else {
        InputFormat::Rotation
    }
}

pub fn parse(text: &str, format: InputFormat, source: &str) -> Result<Instance, InputError> {
    let format = match format {
        InputFormat::Auto => detect(text),
        f => f,
    };
    let wrap = |e: petrial_core::Error| InputError(format!("{source}: {e}"));
    Ok(match format {
        InputFormat::Rotation | InputFormat::Auto => {
            Instance::Ribbon(RibbonGraph::parse(text).map_err(wrap)?)
        }
        InputFormat::Chord => Instance::Bouquet(Bouquet::parse(text).map_err(wrap)?),
        InputFormat::Signed => Instance::Signed(SignedGraph::parse(text).map_err(wrap)?),
    })
}
