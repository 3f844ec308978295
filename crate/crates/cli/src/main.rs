//! `zinbiel`: check, construct and convert structures stored as JSON files.
//!
//! Exit status 0 means success, 1 a failed check (the report lists the
//! violations) and 2 an input error.


use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use zinbiel::algebra::{check_bimodule, check_zinbiel, regular_bimodule, truncated_shuffle, Bimodule};
use zinbiel::cohomology::{cochain_dim, cohomology_dim, random_cocycle};
use zinbiel::crossed::{check_crossed_module, crossed_from_strict, strict_from_crossed};
use zinbiel::dendriform::{check_ainf, check_cinf, check_rota_baxter, dendrify, symmetrize_zinf, totalize, zinf_from_rb};
use zinbiel::extension::{check_extension, extension_from_crossed, same_class, xi_with, SectionStrategy};
use zinbiel::two_vect::{check_functor, check_naturality, check_zinbielator_identity, functor_s, functor_t};
use zinbiel::zinf::{check_zinf, check_zinf_morphism, skeletal_from_cocycle};
use zinbiel::{Error, Q};

use zinbiel_cli::format::{self, InputError, Structure, StructureFile};
use zinbiel_cli::objects::{self, Mismatch};
use zinbiel_cli::report::ReportFile;

#[derive(Parser)]
#[command(name = "zinbiel", version, about = "Exact checks and constructions for Zinbiel algebras and their 2-term relatives")]
struct Cli {
    /// Write the report or structure here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an identity checker on a structure file.
    Check {
        what: CheckKind,
        file: String,
        /// Source structure (for `morphism`).
        #[arg(long)]
        source: Option<String>,
        /// Target structure (for `morphism`).
        #[arg(long)]
        target: Option<String>,
    },
    /// Dimensions of Zⁿ, Bⁿ and Hⁿ.
    Cohomology {
        #[arg(long)]
        degree: usize,
        /// An algebra or bimodule file.
        file: String,
        /// For an algebra file: `regular`, `zero`, `zero:N`, or a bimodule file.
        bimodule: Option<String>,
    },
    /// Build a structure file.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Apply one of the bridges between structure kinds.
    Convert { how: Conversion, file: String },
    /// The class of a crossed-module extension.
    Xi {
        file: String,
        #[arg(long, value_enum, default_value_t = Sections::Pivot)]
        sections: Sections,
    },
    /// Whether two 3-cochains (cochain files or `xi` reports) are cohomologous
    /// over the extension's quotient.
    SameClass { extension: String, first: String, second: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Zinbiel,
    Bimodule,
    Zinf,
    Morphism,
    Crossed,
    Ainf,
    Cinf,
    Rb,
    Zinbiel2,
}

#[derive(Subcommand)]
enum Construct {
    /// The truncated shuffle algebra on `x1..xN`.
    Shuffle { n: usize },
    /// The regular bimodule of an algebra.
    RegularBimodule { algebra: String },
    /// A seeded combination of the canonical cocycle basis.
    RandomCocycle {
        bimodule: String,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long)]
        seed: u64,
    },
    /// The skeletal structure of a bimodule and a 3-cocycle.
    Skeletal { bimodule: String, cochain: String },
    /// The strict structure of a crossed module.
    Strict { crossed: String },
    /// The crossed module of a strict structure.
    Crossed { zinf: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Conversion {
    Symmetrize,
    Dendrify,
    Totalize,
    RbZinf,
    #[value(name = "T", alias = "t")]
    T,
    #[value(name = "S", alias = "s")]
    S,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sections {
    Pivot,
    Shifted,
}

enum Output {
    Report(ReportFile),
    Structure(Structure),
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("{0}")]
    Usage(String),
    /// A precondition or check inside a computation; reported with exit 1.
    #[error("{1}")]
    Computation(String, String),
}

impl From<Mismatch> for Failure {
    fn from(m: Mismatch) -> Self {
        Failure::Usage(m.0)
    }
}

fn computation(command: &str) -> impl Fn(Error) -> Failure + '_ {
    move |e| match e {
        Error::DimensionMismatch(_) | Error::UnsupportedDegree(_) => Failure::Usage(e.to_string()),
        _ => Failure::Computation(command.to_string(), e.to_string()),
    }
}

fn read(path: &str) -> Result<Structure, Failure> {
    Ok(format::read(path)?)
}

/// A cochain file, or the `representative` of an `xi` report.
fn read_cochain(path: &str) -> Result<zinbiel::cohomology::Cochain<Q>, Failure> {
    let io = |m: String| InputError::Io { path: path.to_string(), message: m };
    let text = std::fs::read_to_string(path).map_err(|e| io(e.to_string()))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| InputError::Syntax { path: path.to_string(), message: e.to_string() })?;
    let s = match value.get("representative") {
        Some(rep) => {
            let file: StructureFile = serde_json::from_value(rep.clone())
                .map_err(|e| InputError::Syntax { path: path.to_string(), message: format!("representative: {e}") })?;
            format::validate(path, file)?
        }
        None => format::parse_str(path, &text)?,
    };
    Ok(objects::cochain(&s)?)
}

fn check(what: CheckKind, file: &str, source: Option<&str>, target: Option<&str>) -> Result<Output, Failure> {
    let s = read(file)?;
    let name = match what {
        CheckKind::Zinbiel => "check zinbiel",
        CheckKind::Bimodule => "check bimodule",
        CheckKind::Zinf => "check zinf",
        CheckKind::Morphism => "check morphism",
        CheckKind::Crossed => "check crossed",
        CheckKind::Ainf => "check ainf",
        CheckKind::Cinf => "check cinf",
        CheckKind::Rb => "check rb",
        CheckKind::Zinbiel2 => "check zinbiel2",
    };
    let err = computation(name);
    let r = ReportFile::new(name);
    let r = match what {
        CheckKind::Zinbiel => r.check("zinbiel", &check_zinbiel(&objects::algebra(&s)?)),
        CheckKind::Bimodule => {
            let (a, v) = objects::bimodule(&s)?;
            r.check("zinbiel", &check_zinbiel(&a)).check("bimodule", &check_bimodule(&a, &v).map_err(&err)?)
        }
        CheckKind::Zinf => r.check("zinf", &check_zinf(&objects::zinf(&s)?)),
        CheckKind::Morphism => {
            let (Some(src), Some(tgt)) = (source, target) else {
                return Err(Failure::Usage("check morphism needs --source and --target".into()));
            };
            let f = objects::morphism(&s)?;
            let l = objects::zinf(&read(src)?)?;
            let lp = objects::zinf(&read(tgt)?)?;
            r.check("morphism", &check_zinf_morphism(&f, &l, &lp).map_err(&err)?)
        }
        CheckKind::Crossed => {
            let x = objects::crossed(&s)?;
            let r = r.check("crossed", &check_crossed_module(&x).map_err(&err)?);
            if s.kind == format::Kind::Extension && r.passed() {
                let e = extension_from_crossed(&x).map_err(&err)?;
                r.check("extension", &check_extension(&e).map_err(&err)?)
            } else {
                r
            }
        }
        CheckKind::Ainf => r.check("ainf", &check_ainf(&objects::ainf(&s)?)),
        CheckKind::Cinf => r.check("cinf", &check_cinf(&objects::ainf(&s)?)),
        CheckKind::Rb => {
            let (a, op) = objects::rota_baxter(&s)?;
            r.check("rota-baxter", &check_rota_baxter(&op, &a).map_err(&err)?)
        }
        CheckKind::Zinbiel2 => {
            let z = objects::zinbiel2(&s)?;
            r.check("functor", &check_functor(&z))
                .check("naturality", &check_naturality(&z))
                .check("zinbielator-identity", &check_zinbielator_identity(&z))
        }
    };
    Ok(Output::Report(r))
}

fn cohomology(degree: usize, file: &str, bimodule: Option<&str>) -> Result<Output, Failure> {
    let s = read(file)?;
    let name = format!("cohomology --degree {degree}");
    let err = computation(&name);
    let (a, v) = if s.kind == format::Kind::Bimodule {
        if bimodule.is_some() {
            return Err(Failure::Usage("a bimodule file takes no second argument".into()));
        }
        objects::bimodule(&s)?
    } else {
        let a = objects::algebra(&s)?;
        let v = match bimodule.unwrap_or("regular") {
            "regular" => regular_bimodule(&a).map_err(&err)?,
            "zero" => Bimodule::zero(a.dim(), 1),
            other => match other.strip_prefix("zero:") {
                Some(n) => {
                    let n = n.parse().map_err(|_| Failure::Usage(format!("bad module dimension in {other:?}")))?;
                    Bimodule::zero(a.dim(), n)
                }
                None => objects::bimodule(&read(other)?)?.1,
            },
        };
        (a, v)
    };
    let h = cohomology_dim(&a, &v, degree).map_err(&err)?;
    Ok(Output::Report(
        ReportFile::new(name.clone())
            .derive("degree", h.degree)
            .derive("cochains", cochain_dim(a.dim(), v.module_dim(), degree))
            .derive("cocycles", h.cocycles)
            .derive("coboundaries", h.coboundaries)
            .derive("cohomology", h.cohomology),
    ))
}

fn construct(what: &Construct) -> Result<Output, Failure> {
    let s = match what {
        Construct::Shuffle { n } => {
            if !(1..=12).contains(n) {
                return Err(Failure::Usage(format!("shuffle dimension {n} outside 1..=12")));
            }
            objects::from_algebra(&truncated_shuffle(*n))
        }
        Construct::RegularBimodule { algebra } => {
            let a = objects::algebra(&read(algebra)?)?;
            let v = regular_bimodule(&a).map_err(computation("construct regular-bimodule"))?;
            objects::from_bimodule(&a, &v)
        }
        Construct::RandomCocycle { bimodule, degree, seed } => {
            let (a, v) = objects::bimodule(&read(bimodule)?)?;
            let w = random_cocycle(&a, &v, *degree, *seed).map_err(computation("construct random-cocycle"))?;
            let mut s = objects::from_cochain(&w);
            s.seed = Some(*seed);
            s
        }
        Construct::Skeletal { bimodule, cochain } => {
            let (a, v) = objects::bimodule(&read(bimodule)?)?;
            let w = objects::cochain(&read(cochain)?)?;
            objects::from_zinf(&skeletal_from_cocycle(&a, &v, &w).map_err(computation("construct skeletal"))?)
        }
        Construct::Strict { crossed } => {
            let x = objects::crossed(&read(crossed)?)?;
            objects::from_zinf(&strict_from_crossed(&x).map_err(computation("construct strict"))?)
        }
        Construct::Crossed { zinf } => {
            let l = objects::zinf(&read(zinf)?)?;
            objects::from_crossed(&crossed_from_strict(&l).map_err(computation("construct crossed"))?)
        }
    };
    Ok(Output::Structure(s))
}

fn convert(how: Conversion, file: &str) -> Result<Output, Failure> {
    let s = read(file)?;
    let out = match how {
        Conversion::Symmetrize => objects::from_ainf(&symmetrize_zinf(&objects::zinf(&s)?)),
        Conversion::Dendrify => objects::from_dend(&dendrify(&objects::zinf(&s)?)),
        Conversion::Totalize => objects::from_ainf(&totalize(&objects::dend(&s)?)),
        Conversion::RbZinf => {
            let (a, r) = objects::rota_baxter(&s)?;
            objects::from_zinf(&zinf_from_rb(&a, &r).map_err(computation("convert rb-zinf"))?)
        }
        Conversion::T => objects::from_zinbiel2(&functor_t(&objects::zinf(&s)?)),
        Conversion::S => objects::from_zinf(&functor_s(&objects::zinbiel2(&s)?).map_err(computation("convert S"))?),
    };
    Ok(Output::Structure(out))
}

fn xi(file: &str, sections: Sections) -> Result<Output, Failure> {
    let (strategy, label) = match sections {
        Sections::Pivot => (SectionStrategy::Pivot, "pivot"),
        Sections::Shifted => (SectionStrategy::Shifted, "shifted"),
    };
    let name = format!("xi --sections {label}");
    let err = computation(&name);
    let x = objects::crossed(&read(file)?)?;
    let e = extension_from_crossed(&x).map_err(&err)?;
    let result = xi_with(&e, strategy).map_err(&err)?;
    let w = result.witness;
    let zero = zinbiel::cohomology::Cochain::zero(3, e.quotient_dim(), e.kernel_dim());
    let trivial = same_class(&result.representative, &zero, e.quotient(), e.module()).map_err(&err)?;
    let mut r = ReportFile::new(name.clone())
        .check("extension", &check_extension(&e).map_err(&err)?)
        .derive("sections", label)
        .derive("kernel_dim", e.kernel_dim())
        .derive("quotient_dim", e.quotient_dim())
        .derive("h3", json!({ "cocycles": w.cocycles, "coboundaries": w.coboundaries, "cohomology": w.cohomology }))
        .derive("class_is_zero", trivial);
    r.representative = Some(objects::from_cochain(&result.representative).to_file());
    Ok(Output::Report(r))
}

fn same_class_command(extension: &str, first: &str, second: &str) -> Result<Output, Failure> {
    let name = "same-class";
    let err = computation(name);
    let x = objects::crossed(&read(extension)?)?;
    let e = extension_from_crossed(&x).map_err(&err)?;
    let a = read_cochain(first)?;
    let b = read_cochain(second)?;
    let same = same_class(&a, &b, e.quotient(), e.module()).map_err(&err)?;
    let mut r = ReportFile::new(name).derive("same_class", same);
    if !same {
        r.status = "fail";
    }
    Ok(Output::Report(r))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Check { what, file, source, target } => check(*what, file, source.as_deref(), target.as_deref()),
        Command::Cohomology { degree, file, bimodule } => cohomology(*degree, file, bimodule.as_deref()),
        Command::Construct { what } => construct(what),
        Command::Convert { how, file } => convert(*how, file),
        Command::Xi { file, sections } => xi(file, *sections),
        Command::SameClass { extension, first, second } => same_class_command(extension, first, second),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), String> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = match run(&cli) {
        Ok(Output::Report(r)) => {
            let code = if r.passed() { 0 } else { 1 };
            (r.to_json(), code)
        }
        Ok(Output::Structure(s)) => (s.to_json(), 0),
        Err(Failure::Computation(command, message)) => (ReportFile::failed(command, message).to_json(), 1),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&cli, &text) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
