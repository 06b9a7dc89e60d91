use std::io::Write;

use quandles::criteria::{associated_group_presentation, census_galex, WitnessKind, CENSUS_HEADER};
use quandles::group::{automorphisms, standard_catalog, FiniteGroup, GroupAutomorphism, GroupFileError, GroupSpec, DEFAULT_MAX_ORDER};
use quandles::quandle::{conj_quandle, galex, hopf_extension, FiniteQuandle, NamedQuandle, QuandleFileError};
use quandles::tangle::{
    builtin_tangle, enumerate_colorings, Admissibility, ColoringMode, ColoringOutcome, SolverOptions, TangleDiagram,
    TangleError,
};

use crate::error::{CliError, Status};
use crate::inputs::{output_cap, parse_list, read_quandle, read_text, resolve_group, resolve_normal, resolve_tangle};
use crate::{CheckKind, ColorMode, ConstructKind, PresentKind, ValidateKind};

type Out<'a> = &'a mut dyn Write;

fn io_err(e: std::io::Error) -> CliError {
    CliError::input(format!("write failed: {e}"))
}

pub fn validate(kind: ValidateKind, path: &str, out: Out) -> Result<Status, CliError> {
    let text = read_text(path)?;
    let problem = match kind {
        ValidateKind::Quandle => match text.parse::<FiniteQuandle>() {
            Ok(_) => None,
            Err(QuandleFileError::Invalid(e)) => Some(e.to_string()),
            Err(e @ QuandleFileError::Syntax(_)) => return Err(CliError::input(format!("{path}: {e}"))),
        },
        ValidateKind::Group => match text.parse::<FiniteGroup>() {
            Ok(_) => None,
            Err(GroupFileError::Invalid(e)) => Some(e.to_string()),
            Err(e @ GroupFileError::Syntax(_)) => return Err(CliError::input(format!("{path}: {e}"))),
        },
        ValidateKind::Tangle => match text.parse::<TangleDiagram>() {
            Ok(_) => None,
            Err(e @ TangleError::Syntax(_)) => return Err(CliError::input(format!("{path}: {e}"))),
            Err(e) => Some(e.to_string()),
        },
    };
    match problem {
        None => {
            writeln!(out, "OK").map_err(io_err)?;
            Ok(Status::Ok)
        }
        Some(msg) => {
            writeln!(out, "INVALID {msg}").map_err(io_err)?;
            Ok(Status::Invalid)
        }
    }
}

fn pick_automorphism<'g>(g: &'g FiniteGroup, index: Option<usize>, map: Option<&str>) -> Result<GroupAutomorphism<'g>, CliError> {
    match (index, map) {
        (Some(k), None) => {
            let mut auts = automorphisms(g);
            let count = auts.len();
            if k >= count {
                return Err(CliError::usage(format!("automorphism index {k} out of range; group has {count}")));
            }
            Ok(auts.swap_remove(k))
        }
        (None, Some(m)) => GroupAutomorphism::new(g, parse_list(m)?).map_err(CliError::usage),
        _ => Err(CliError::usage("galex needs exactly one of --aut or --aut-map")),
    }
}

pub fn construct(kind: &ConstructKind, out: Out) -> Result<Status, CliError> {
    let text = match kind {
        ConstructKind::Conj { group } => conj_quandle(&resolve_group(group)?).to_string(),
        ConstructKind::Galex { group, aut, aut_map } => {
            let g = resolve_group(group)?;
            let sigma = pick_automorphism(&g, *aut, aut_map.as_deref())?;
            galex(&g, &sigma).map_err(CliError::internal)?.to_string()
        }
        ConstructKind::HopfExt { group, normal } => {
            let g = resolve_group(group)?;
            let n = resolve_normal(&g, normal)?;
            hopf_extension(&g, &n).map_err(CliError::internal)?.to_string()
        }
        ConstructKind::CatalogQuandle { name } => name.parse::<NamedQuandle>().map_err(CliError::usage)?.build().to_string(),
        ConstructKind::Tangle { name } => builtin_tangle(name).map_err(CliError::usage)?.to_string(),
    };
    out.write_all(text.as_bytes()).map_err(io_err)?;
    Ok(Status::Ok)
}

fn admissibility_line(verdict: &Admissibility) -> String {
    match verdict {
        Admissibility::Admissible => "ADMISSIBLE".to_string(),
        Admissibility::NonAdmissible(c) => format!("NON-ADMISSIBLE coloring {c}"),
    }
}

pub fn color(tangle: &str, quandle: &str, mode: ColorMode, out: Out) -> Result<Status, CliError> {
    let d = resolve_tangle(tangle)?;
    let q = read_quandle(quandle)?;
    let options = SolverOptions { cap: output_cap()?, parallel: rayon::current_num_threads() > 1 };
    let mode = match mode {
        ColorMode::Count => ColoringMode::Count,
        ColorMode::List => ColoringMode::List,
        ColorMode::Admissible => ColoringMode::Admissibility,
    };
    let outcome = enumerate_colorings(&d, &q, mode, options).map_err(CliError::usage)?;
    let status = match outcome {
        ColoringOutcome::Count(n) => {
            writeln!(out, "{n}").map_err(io_err)?;
            Status::Ok
        }
        ColoringOutcome::List(cs) => {
            for c in cs {
                writeln!(out, "{c}").map_err(io_err)?;
            }
            Status::Ok
        }
        ColoringOutcome::Verdict(v) => {
            writeln!(out, "{}", admissibility_line(&v)).map_err(io_err)?;
            if v.is_admissible() {
                Status::Ok
            } else {
                Status::NonAdmissible
            }
        }
    };
    Ok(status)
}

pub fn check(kind: CheckKind, quandle: &str, out: Out) -> Result<Status, CliError> {
    let q = read_quandle(quandle)?;
    let kind = match kind {
        CheckKind::Hopf => WitnessKind::Hopf,
        CheckKind::Trefoil => WitnessKind::Trefoil,
    };
    match kind.find(&q) {
        None => {
            writeln!(out, "ADMISSIBLE").map_err(io_err)?;
            Ok(Status::Ok)
        }
        Some(w) => {
            if !w.holds(&q) {
                return Err(CliError::internal(format!("witness ({}, {}) failed to re-validate", w.x, w.y)));
            }
            writeln!(out, "NON-ADMISSIBLE witness x={} y={}", w.x, w.y).map_err(io_err)?;
            Ok(Status::NonAdmissible)
        }
    }
}

pub fn present(kind: &PresentKind, out: Out) -> Result<Status, CliError> {
    let p = match kind {
        PresentKind::As { quandle } => associated_group_presentation(&read_quandle(quandle)?),
        PresentKind::Fundamental { tangle } => resolve_tangle(tangle)?.fundamental_quandle_presentation(),
    };
    if !p.references_only_generators() {
        return Err(CliError::internal("presentation references an undeclared generator"));
    }
    write!(out, "{p}").map_err(io_err)?;
    Ok(Status::Ok)
}

pub fn census(max_order: usize, dedup: bool, out: Out) -> Result<Status, CliError> {
    let records = census_galex(max_order, dedup).map_err(CliError::usage)?;
    writeln!(out, "{CENSUS_HEADER}").map_err(io_err)?;
    for r in &records {
        writeln!(out, "{r}").map_err(io_err)?;
    }
    Ok(Status::Ok)
}

pub fn catalog(name: Option<&str>, out: Out) -> Result<Status, CliError> {
    let Some(name) = name else {
        writeln!(out, "# group\torder\tautomorphisms").map_err(io_err)?;
        for spec in standard_catalog(DEFAULT_MAX_ORDER) {
            let g = spec.build().map_err(CliError::internal)?;
            writeln!(out, "{spec}\t{}\t{}", g.order(), automorphisms(&g).len()).map_err(io_err)?;
        }
        return Ok(Status::Ok);
    };
    let (order, label): (usize, Box<dyn Fn(usize) -> String>) = if let Ok(spec) = name.parse::<GroupSpec>() {
        let g = spec.build().map_err(CliError::usage)?;
        (g.order(), Box::new(move |x| g.label(x)))
    } else if let Ok(named) = name.parse::<NamedQuandle>() {
        let q = named.build();
        match named {
            NamedQuandle::GalexQ8Ijk => {
                let g = GroupSpec::Quaternion8.build().map_err(CliError::internal)?;
                (q.order(), Box::new(move |x| g.label(x)))
            }
            _ => (q.order(), Box::new(|x: usize| x.to_string())),
        }
    } else {
        return Err(CliError::usage(format!("{name:?} is not a catalog group or named quandle")));
    };
    writeln!(out, "# index\tlabel").map_err(io_err)?;
    for x in 0..order {
        writeln!(out, "{x}\t{}", label(x)).map_err(io_err)?;
    }
    Ok(Status::Ok)
}
