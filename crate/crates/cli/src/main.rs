use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use actfield::actions::{from_binary, to_binary, Variance};
use actfield::affine::verify_preaffine;
use actfield::groups::{catalog, elementary_abelian, FiniteGroup, VectorGroup};
use actfield::malcev::Identity;
use actfield::workbench::{
    emit, mine, mine_report, parse, run_affine, run_classify, run_deform, run_field, run_malcev, shipped, DeformTarget,
    Family, Filter, MalcevCommand, Measure, MineOptions, Report, Status, Structure, DEFAULT_BUDGET, SHIPPED,
};

/// Verification workbench for finite actions, generalized affine spaces and
/// Malcev operations.
///
/// FILE arguments are paths, or `catalog:<name>` for a shipped example.
#[derive(Parser)]
#[command(name = "actfield", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum VarianceArg {
    Covariant,
    Contravariant,
}

#[derive(Clone, Copy, ValueEnum)]
enum MalcevOp {
    Check,
    Closure,
    Recover,
    Pointed,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum FamilyArg {
    PreaffineBijections,
    MultiaffineAutomorphismFields,
    PremonoidalFields,
    Malcev,
}

#[derive(Subcommand)]
enum Command {
    /// Classify an action: set and group flags with witnesses.
    Classify {
        file: String,
        #[arg(long, value_enum, default_value = "covariant")]
        variance: VarianceArg,
    },
    /// Verify an action of a vector group as an affine or preaffine space.
    Affine {
        file: String,
        /// Group file the action's domain must match.
        #[arg(long)]
        vectors: Option<String>,
    },
    /// Summarize an action field and its induced action.
    Field { file: String },
    /// Tabulate a torsion, curvature or transport measure.
    Deform {
        file: String,
        /// torsion0, torsion1, torsion1_star, torsion0_star, curvature0,
        /// curvature1, dstar or holonomy.
        #[arg(long)]
        measure: String,
        /// Print every value regardless of the argument-space size.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Check identities, translation closure, recovered groups or pointed sums.
    Malcev {
        file: String,
        #[arg(value_enum)]
        op: MalcevOp,
        /// Base point for `recover` and `pointed`.
        #[arg(long)]
        base: Option<String>,
    },
    /// Enumerate a family of structures through a filter.
    Mine {
        #[arg(value_enum)]
        family: FamilyArg,
        /// Vector group, e.g. Z3, Z2^2, Z2^3.
        #[arg(long)]
        vectors: Option<String>,
        /// Target group from the catalog.
        #[arg(long)]
        target: Option<String>,
        /// Carrier size for the malcev family.
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated identities for the malcev family.
        #[arg(long, default_value = "A1,A2")]
        constraints: String,
        #[arg(long, default_value = "any")]
        filter: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Stop after this many structures pass.
        #[arg(long)]
        limit: Option<u64>,
        /// Passing structures printed.
        #[arg(long, default_value_t = 3)]
        keep: usize,
    },
    /// Convert an action file to a binary table or back.
    Convert { file: String },
    /// List the shipped examples, or print one.
    Catalog { name: Option<String> },
}

/// A failure before any report exists: exit with status 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn read(file: &str) -> Result<String, Usage> {
    if let Some(name) = file.strip_prefix("catalog:") {
        return shipped(name)
            .map(str::to_string)
            .ok_or_else(|| Usage(format!("no shipped example `{name}`")));
    }
    std::fs::read_to_string(file).map_err(|e| Usage(format!("{file}: {e}")))
}

fn load(file: &str) -> Result<Structure, Usage> {
    let text = read(file)?;
    parse(&text).map_err(|e| Usage(format!("{file}: {e}")))
}

fn vector_group(name: &str) -> Result<VectorGroup, Usage> {
    if let Ok(g) = catalog(name) {
        return Ok(VectorGroup::certify(g)?);
    }
    let parsed = name.strip_prefix('Z').and_then(|rest| {
        let (p, n) = rest.split_once('^').unwrap_or((rest, "1"));
        Some((p.parse::<usize>().ok()?, n.parse::<usize>().ok()?))
    });
    match parsed {
        Some((p, n)) => Ok(elementary_abelian(p, n)?),
        None => Err(Usage(format!("unknown vector group `{name}`"))),
    }
}

fn target_group(name: &str) -> Result<FiniteGroup, Usage> {
    Ok(catalog(name)?)
}

fn point(carrier: &actfield::FiniteSet, label: Option<&str>) -> Result<usize, Usage> {
    match label {
        None => Ok(0),
        Some(l) => carrier
            .index_of(l)
            .ok_or_else(|| Usage(format!("unknown base point `{l}`"))),
    }
}

fn wrong(file: &str, want: &str, got: &Structure) -> Usage {
    Usage(format!("{file}: expected a {want} file, found kind `{}`", got.kind()))
}

fn execute(cmd: Command) -> Result<(String, Status), Usage> {
    let report = |r: Report| Ok((r.render(), r.status));
    match cmd {
        Command::Classify { file, variance } => match load(&file)? {
            Structure::Action(a) => {
                let v = match variance {
                    VarianceArg::Covariant => Variance::Covariant,
                    VarianceArg::Contravariant => Variance::Contravariant,
                };
                report(run_classify(&a, v))
            }
            other => Err(wrong(&file, "action", &other)),
        },
        Command::Affine { file, vectors } => {
            let v = match vectors {
                Some(vf) => match load(&vf)? {
                    Structure::Group(g) => Some(g),
                    other => return Err(wrong(&vf, "group", &other)),
                },
                None => None,
            };
            match load(&file)? {
                Structure::Action(a) => report(run_affine(v.as_ref(), &a)),
                other => Err(wrong(&file, "action", &other)),
            }
        }
        Command::Field { file } => match load(&file)? {
            Structure::Field(f) => report(run_field(&f)),
            other => Err(wrong(&file, "field", &other)),
        },
        Command::Deform {
            file,
            measure,
            exhaustive,
        } => {
            let m = Measure::parse(&measure).ok_or_else(|| Usage(format!("unknown measure `{measure}`")))?;
            match load(&file)? {
                Structure::Field(f) => report(run_deform(DeformTarget::Field(&f), m, exhaustive)),
                Structure::Action(a) => {
                    let dom = a
                        .domain()
                        .group()
                        .ok_or_else(|| Usage(format!("{file}: action domain is not a group")))?;
                    let v = VectorGroup::certify(dom.clone())?;
                    match verify_preaffine(&v, &a) {
                        Ok(s) => report(run_deform(DeformTarget::Space(&s), m, exhaustive)),
                        Err(e) => {
                            let mut r = Report::new();
                            r.push("measure", m.name());
                            r.push("error", e);
                            r.fail(Status::VerificationFailure);
                            report(r)
                        }
                    }
                }
                other => Err(wrong(&file, "action or field", &other)),
            }
        }
        Command::Malcev { file, op, base } => match load(&file)? {
            Structure::Malcev(k) => {
                let e = point(k.carrier(), base.as_deref())?;
                let c = match op {
                    MalcevOp::Check => MalcevCommand::Check,
                    MalcevOp::Closure => MalcevCommand::Closure,
                    MalcevOp::Recover => MalcevCommand::Recover(e),
                    MalcevOp::Pointed => MalcevCommand::Pointed(e),
                };
                report(run_malcev(&k, c))
            }
            other => Err(wrong(&file, "malcev", &other)),
        },
        Command::Mine {
            family,
            vectors,
            target,
            n,
            constraints,
            filter,
            budget,
            limit,
            keep,
        } => {
            let need = |o: Option<String>, what: &str| o.ok_or_else(|| Usage(format!("--{what} is required")));
            let fam = match family {
                FamilyArg::PreaffineBijections => Family::PreaffineBijections {
                    vectors: vector_group(&need(vectors, "vectors")?)?,
                    target: target_group(&need(target, "target")?)?,
                },
                FamilyArg::MultiaffineAutomorphismFields => Family::AutomorphismFields {
                    vectors: vector_group(&need(vectors, "vectors")?)?,
                },
                FamilyArg::PremonoidalFields => Family::PremonoidalFields {
                    vectors: vector_group(&need(vectors, "vectors")?)?,
                    target: target_group(&need(target, "target")?)?,
                },
                FamilyArg::Malcev => {
                    let ids = constraints
                        .split(',')
                        .filter(|s| !s.is_empty())
                        .map(|s| Identity::parse(s.trim()).ok_or_else(|| Usage(format!("unknown identity `{s}`"))))
                        .collect::<Result<Vec<_>, _>>()?;
                    Family::Malcev {
                        n: n.ok_or_else(|| Usage("--n is required".into()))?,
                        constraints: ids,
                    }
                }
            };
            let flt = Filter::parse(&filter).ok_or_else(|| Usage(format!("unknown filter `{filter}`")))?;
            let opts = MineOptions { budget, limit, keep };
            let res = mine(&fam, flt, opts)?;
            report(mine_report(&res, budget))
        }
        Command::Convert { file } => match load(&file)? {
            Structure::Action(a) => Ok((emit(&Structure::Binary(to_binary(&a))), Status::Ok)),
            Structure::Binary(b) => Ok((emit(&Structure::Action(from_binary(&b)?)), Status::Ok)),
            other => Err(wrong(&file, "action or binary", &other)),
        },
        Command::Catalog { name: None } => {
            let list: String = SHIPPED.iter().map(|(n, _)| format!("{n}\n")).collect();
            Ok((list, Status::Ok))
        }
        Command::Catalog { name: Some(n) } => Ok((read(&format!("catalog:{n}"))?, Status::Ok)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok((out, status)) => {
            print!("{out}");
            ExitCode::from(status.code() as u8)
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(Status::ParseError.code() as u8)
        }
    }
}
