use std::fmt;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(name = "stonework", version, about = "Finite-stage Stone duality computations")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    Interval,
    Circle,
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::Interval => "interval",
            Space::Circle => "circle",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Subcommand)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// List the spectrum points of a presentation (`gens:` and `rels:` lines).
    Spectrum { file: PathBuf },
    /// Check that evaluation into subsets of the spectrum is a bijection.
    Duality { file: PathBuf },
    /// Kernel and dual point map of a morphism
    /// (`src.gens`, `src.rels`, `dst.gens`, `dst.rels`, `map`).
    Morphism { file: PathBuf },
    /// The LLPO splitting map at a finite stage.
    Llpo {
        #[arg(long)]
        stage: usize,
    },
    /// Refute a term over g0, g1, ... as a decider of "all zero".
    Wlpo { term: String },
    /// Least k such that the join of seq[0..=k] is 1 (`gens`, `rels`, `seq`).
    #[command(name = "markov")]
    #[serde(rename = "markov")]
    MarkovSearch {
        file: PathBuf,
        #[arg(long)]
        bound: usize,
    },
    /// Separate two disjoint closed sets by a decidable one
    /// (`gens`, `rels`, `f`, `g`).
    Separate { file: PathBuf },
    /// Spectra of the truncation tower of a countable presentation
    /// (`gens` or `gens: *`, `rels`, `family`).
    Tower {
        file: PathBuf,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Čech cohomology of one level of the interval or circle tower.
    Cohomology {
        #[arg(value_enum)]
        space: Space,
        #[arg(long)]
        level: usize,
    },
    /// Image in [0,1] of a union of cylinder sets.
    IntervalImage {
        #[arg(long, value_delimiter = ',')]
        cylinders: Vec<String>,
    },
    /// Whether the tower maps induce isomorphisms on cohomology.
    Stabilize {
        #[arg(value_enum)]
        space: Space,
        #[arg(long)]
        depth: usize,
    },
}

impl Command {
    /// The input file, for commands that read one.
    pub fn file(&self) -> Option<&PathBuf> {
        match self {
            Command::Spectrum { file }
            | Command::Duality { file }
            | Command::Morphism { file }
            | Command::MarkovSearch { file, .. }
            | Command::Separate { file }
            | Command::Tower { file, .. } => Some(file),
            _ => None,
        }
    }

    /// Checks arguments that clap cannot.
    pub fn validate(&self) -> Result<(), String> {
        match self {
            Command::Llpo { stage: 0 } => Err("--stage must be at least 1".into()),
            Command::IntervalImage { cylinders } => {
                for w in cylinders {
                    if !w.chars().all(|c| c == '0' || c == '1') {
                        return Err(format!("cylinder `{w}` is not a bit-string"));
                    }
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Spectrum { file } => write!(f, "spectrum {}", file.display()),
            Command::Duality { file } => write!(f, "duality {}", file.display()),
            Command::Morphism { file } => write!(f, "morphism {}", file.display()),
            Command::Llpo { stage } => write!(f, "llpo --stage {stage}"),
            Command::Wlpo { term } => write!(f, "wlpo {term:?}"),
            Command::MarkovSearch { file, bound } => write!(f, "markov {} --bound {bound}", file.display()),
            Command::Separate { file } => write!(f, "separate {}", file.display()),
            Command::Tower { file, depth: Some(d) } => write!(f, "tower {} --depth {d}", file.display()),
            Command::Tower { file, depth: None } => write!(f, "tower {}", file.display()),
            Command::Cohomology { space, level } => write!(f, "cohomology {space} --level {level}"),
            Command::IntervalImage { cylinders } => write!(f, "interval-image --cylinders {:?}", cylinders.join(",")),
            Command::Stabilize { space, depth } => write!(f, "stabilize {space} --depth {depth}"),
        }
    }
}
