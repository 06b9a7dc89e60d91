//! Reading files and resolving group, subgroup and tangle arguments.

use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use quandles::group::{center, normal_subgroups, FiniteGroup, GroupSpec, Subgroup};
use quandles::quandle::FiniteQuandle;
use quandles::tangle::{builtin_tangle, TangleDiagram};

use crate::error::CliError;

pub const OUTPUT_CAP_VAR: &str = "QUANDLE_OUTPUT_CAP";

/// Reads a whole file, or standard input for `-`.
pub fn read_text(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::input(format!("<stdin>: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| CliError::input(format!("{path}: {e}")))
}

/// Writer for `--output`; `-` is standard output.
pub fn open_output(path: &str) -> Result<Box<dyn Write>, CliError> {
    if path == "-" {
        return Ok(Box::new(io::BufWriter::new(io::stdout().lock())));
    }
    let file = fs::File::create(path).map_err(|e| CliError::input(format!("{path}: {e}")))?;
    Ok(Box::new(io::BufWriter::new(file)))
}

pub fn read_quandle(path: &str) -> Result<FiniteQuandle, CliError> {
    read_text(path)?
        .parse()
        .map_err(|e| CliError::input(format!("{path}: {e}")))
}

/// A catalog name such as `quaternion8`, or else a group table file.
pub fn resolve_group(arg: &str) -> Result<FiniteGroup, CliError> {
    match arg.parse::<GroupSpec>() {
        Ok(spec) => spec.build().map_err(CliError::usage),
        Err(spec_err) => {
            if arg != "-" && !Path::new(arg).exists() {
                return Err(CliError::usage(format!("{arg:?} is neither a catalog group ({spec_err}) nor a file")));
            }
            read_text(arg)?
                .parse()
                .map_err(|e| CliError::input(format!("{arg}: {e}")))
        }
    }
}

/// `builtin:<name>` or a tangle file.
pub fn resolve_tangle(arg: &str) -> Result<TangleDiagram, CliError> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        return builtin_tangle(name).map_err(CliError::usage);
    }
    read_text(arg)?
        .parse()
        .map_err(|e| CliError::input(format!("{arg}: {e}")))
}

/// `center`, `whole`, `trivial`, `index:<k>` into the normal subgroup list,
/// or `elements:<a>,<b>,...`.
pub fn resolve_normal<'g>(g: &'g FiniteGroup, spec: &str) -> Result<Subgroup<'g>, CliError> {
    let all = || Subgroup::new(g, g.elements()).map_err(CliError::internal);
    let n = match spec {
        "center" => center(g),
        "whole" => all()?,
        "trivial" => Subgroup::new(g, [g.identity()]).map_err(CliError::internal)?,
        _ => {
            if let Some(k) = spec.strip_prefix("index:") {
                let k: usize = k.parse().map_err(|_| CliError::usage(format!("bad subgroup index {k:?}")))?;
                let mut normals = normal_subgroups(g);
                let count = normals.len();
                if k >= count {
                    return Err(CliError::usage(format!("subgroup index {k} out of range; group has {count} normal subgroups")));
                }
                normals.swap_remove(k)
            } else if let Some(list) = spec.strip_prefix("elements:") {
                let elems = parse_list(list)?;
                Subgroup::new(g, elems).map_err(CliError::usage)?
            } else {
                return Err(CliError::usage(format!("unknown subgroup spec {spec:?}")));
            }
        }
    };
    if !n.is_normal() {
        return Err(CliError::usage(format!("subgroup {spec:?} is not normal")));
    }
    Ok(n)
}

/// Comma- or whitespace-separated indices.
pub fn parse_list(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError::usage(format!("bad element index {t:?}"))))
        .collect()
}

/// The list cap from the environment, defaulting to one million.
pub fn output_cap() -> Result<usize, CliError> {
    match std::env::var(OUTPUT_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("{OUTPUT_CAP_VAR} must be a non-negative integer, got {v:?}"))),
        Err(std::env::VarError::NotPresent) => Ok(quandles::tangle::DEFAULT_OUTPUT_CAP),
        Err(e) => Err(CliError::usage(format!("{OUTPUT_CAP_VAR}: {e}"))),
    }
}
