use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use numsgp::families::conjecture_probe;
use numsgp::{
    ChildRule, Error, Explorer, FamilyDescriptor, FamilyKind, NumericalSemigroup, PatternSet,
};

mod render;

#[derive(Parser, Debug)]
#[command(
    name = "numsgp",
    version,
    about = "Numerical semigroups and modular Frobenius pseudo-varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test whether <gens> belongs to a pseudo-variety and report its invariants.
    Check {
        /// Comma-separated generators, e.g. 5,7,9.
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<i64>,
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List every member of a given genus.
    Enumerate {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        genus: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Build the tree from the ordinary semigroup down to a genus.
    Tree {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        max_genus: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Experimental: compare strong-distinct:<n> and strong-nondiag:<n> level by level.
    Probe {
        #[arg(short = 'm', long = "multiplicity")]
        m: i64,
        #[arg(short = 'n', long = "arity")]
        n: usize,
        #[arg(long)]
        genus_cap: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct Source {
    /// Pattern file path, or inline JSON {"m": .., "tuples": [[..], ..]}.
    #[arg(long, conflicts_with = "family", required_unless_present = "family")]
    pattern: Option<String>,
    /// level:<n>, thin:<n>, strong, strong-distinct:<n> or strong-nondiag:<n>.
    #[arg(long)]
    family: Option<String>,
    /// Multiplicity for --family.
    #[arg(short = 'm', long = "multiplicity")]
    m: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotAMember
            | Error::NotRemovable(_)
            | Error::NotAnElement(_)
            | Error::WholeNaturals
            | Error::InsufficientBound(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

enum Rule {
    Pattern(PatternSet),
    Family(numsgp::FamilyRule),
}

impl Rule {
    fn as_child_rule(&self) -> &dyn ChildRule {
        match self {
            Rule::Pattern(p) => p,
            Rule::Family(f) => f,
        }
    }

    fn is_member(&self, s: &NumericalSemigroup) -> bool {
        match self {
            Rule::Pattern(p) => p.is_member(s),
            Rule::Family(f) => f.is_member(s),
        }
    }

    fn describe(&self) -> String {
        match self {
            Rule::Pattern(p) => format!("C({}, A) with |A| = {}", p.modulus(), p.len()),
            Rule::Family(f) => f.family().to_string(),
        }
    }
}

fn load_pattern(arg: &str) -> Result<PatternSet, Failure> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg)
            .map_err(|e| Failure::Input(format!("cannot read pattern file {arg}: {e}")))?
    };
    Ok(PatternSet::from_json(&text)?)
}

/// `default_m` is used when --family comes without -m.
fn resolve(source: &Source, default_m: Option<i64>) -> Result<Rule, Failure> {
    match (&source.pattern, &source.family) {
        (Some(p), None) => {
            let pattern = load_pattern(p)?;
            if let Some(m) = source.m {
                if m != pattern.modulus() as i64 {
                    return Err(Failure::Input(format!(
                        "-m {m} disagrees with the pattern modulus {}",
                        pattern.modulus()
                    )));
                }
            }
            Ok(Rule::Pattern(pattern))
        }
        (None, Some(f)) => {
            let kind: FamilyKind = f.parse()?;
            let m = source
                .m
                .or(default_m)
                .ok_or_else(|| Failure::Input("--family needs -m <multiplicity>".into()))?;
            Ok(Rule::Family(FamilyDescriptor::new(kind, m)?.rule()?))
        }
        _ => Err(Failure::Input(
            "exactly one of --pattern and --family is required".into(),
        )),
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    match cli.command {
        Command::Check {
            gens,
            source,
            format,
        } => {
            let s = NumericalSemigroup::from_generators(&gens)?;
            let rule = resolve(&source, Some(s.multiplicity()))?;
            let member = rule.is_member(&s);
            let doc = match format {
                Format::Json => render::check_json(&s, member),
                Format::Text => render::check_text(&s, member, &rule.describe()),
                Format::Dot => {
                    return Err(Failure::Input(
                        "dot output is only available for `tree`".into(),
                    ))
                }
            };
            writeln!(out, "{doc}")?;
        }
        Command::Enumerate {
            source,
            genus,
            format,
            jobs,
        } => {
            let rule = resolve(&source, None)?;
            let semigroups = Explorer::new(rule.as_child_rule())
                .with_jobs(jobs)?
                .enumerate_genus(genus)?;
            let doc = match format {
                Format::Json => render::enumerate_json(genus, &semigroups),
                Format::Text => render::enumerate_text(genus, &semigroups),
                Format::Dot => {
                    return Err(Failure::Input(
                        "dot output is only available for `tree`".into(),
                    ))
                }
            };
            write!(out, "{doc}")?;
        }
        Command::Tree {
            source,
            max_genus,
            format,
            jobs,
        } => {
            let rule = resolve(&source, None)?;
            let levels = Explorer::new(rule.as_child_rule())
                .with_jobs(jobs)?
                .build_tree(max_genus)?;
            let doc = match format {
                Format::Json => render::tree_json(&levels),
                Format::Text => render::tree_text(&levels),
                Format::Dot => render::tree_dot(&levels),
            };
            write!(out, "{doc}")?;
        }
        Command::Probe {
            m,
            n,
            genus_cap,
            format,
        } => {
            let report = conjecture_probe(m, n, genus_cap)?;
            let doc = match format {
                Format::Json => render::to_json(&report),
                Format::Text => report.to_string(),
                Format::Dot => {
                    return Err(Failure::Input(
                        "dot output is only available for `tree`".into(),
                    ))
                }
            };
            writeln!(out, "{doc}")?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(2)
        }
    }
}
