//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when validation finds errors or a scheme id
//! is unknown, 2 on usage, I/O or parse failures.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::benefit::{SchemeId, SchemeProfile};
use crate::catalog::{parse_catalog_named, reference_catalog, serialize_catalog, Catalog};
use crate::chart::{render_svg, ChartConfig};
use crate::combine::{combine_profiles, CombinedScheme};
use crate::placement::place;
use crate::report::{
    placement_rows, render_diff, render_placement_rows, render_table, Symbols, TableFormat, TableSpec,
};
use crate::validate::{validate, Severity};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FINDINGS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "udsmap", version, about = "Place authentication schemes on the exposure/mimicry chart")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Source {
    /// Catalog file
    catalog: Option<PathBuf>,
    /// Use the built-in reference catalog
    #[arg(long, conflicts_with = "catalog")]
    builtin: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lint a catalog; findings go to stderr
    Validate {
        #[command(flatten)]
        source: Source,
    },
    /// Print computed placements
    Place {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        scheme: Option<String>,
    },
    /// Combine two or more schemes into one profile
    Combine {
        #[command(flatten)]
        source: Source,
        /// Comma-separated scheme ids
        #[arg(long, value_delimiter = ',', required = true)]
        schemes: Vec<String>,
        #[arg(long)]
        name: Option<String>,
        /// Also print a `[combined]` record for the catalog
        #[arg(long)]
        emit_record: bool,
    },
    /// Render the chart as SVG
    Chart {
        #[command(flatten)]
        source: Source,
        /// Output file; stdout when omitted
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        ascii_labels: bool,
        /// Also draw combined schemes
        #[arg(long)]
        combined: bool,
        #[arg(long)]
        no_captions: bool,
    },
    /// Print the benefit table
    Table {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "text")]
        format: String,
        /// `*` and `o` instead of filled and hollow circles
        #[arg(long)]
        ascii: bool,
    },
    /// List benefits rated differently by two schemes
    Diff {
        /// `[CATALOG] A B`
        #[arg(num_args = 2..=3, required = true)]
        args: Vec<String>,
        #[arg(long)]
        builtin: bool,
    },
}

/// Failure that ends the command with a message on stderr.
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn unknown_scheme(id: &str) -> Failure {
    Failure {
        code: EXIT_FINDINGS,
        message: format!("unknown scheme `{id}`"),
    }
}

fn load(path: Option<&PathBuf>, builtin: bool) -> Result<Catalog, Failure> {
    match (path, builtin) {
        (_, true) => Ok(reference_catalog()),
        (Some(p), false) => {
            let text = fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
            parse_catalog_named(&text, p.display().to_string()).map_err(|e| usage(format!("{}: {e}", p.display())))
        }
        (None, false) => Err(usage("a catalog path or --builtin is required")),
    }
}

fn lookup(catalog: &Catalog, id: &str) -> Result<SchemeProfile, Failure> {
    catalog
        .profile(id)
        .map_err(|e| usage(e.to_string()))?
        .ok_or_else(|| unknown_scheme(id))
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn io(e: std::io::Error) -> Failure {
    usage(e.to_string())
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Validate { source } => {
            let catalog = load(source.catalog.as_ref(), source.builtin)?;
            let findings = validate(&catalog);
            for f in &findings {
                writeln!(err, "{f}").map_err(io)?;
            }
            let count = |s: Severity| findings.iter().filter(|f| f.severity == s).count();
            let errors = count(Severity::Error);
            writeln!(
                out,
                "{}: {errors} error(s), {} warning(s), {} info",
                catalog.source,
                count(Severity::Warning),
                count(Severity::Info)
            )
            .map_err(io)?;
            Ok(if errors > 0 { EXIT_FINDINGS } else { EXIT_OK })
        }
        Command::Place { source, scheme } => {
            let catalog = load(source.catalog.as_ref(), source.builtin)?;
            let mut rows = placement_rows(&catalog).map_err(|e| usage(e.to_string()))?;
            if let Some(id) = scheme {
                rows.retain(|r| r.id == id);
                if rows.is_empty() {
                    return Err(unknown_scheme(&id));
                }
            }
            write!(out, "{}", render_placement_rows(&rows)).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Combine {
            source,
            schemes,
            name,
            emit_record,
        } => {
            let catalog = load(source.catalog.as_ref(), source.builtin)?;
            if schemes.len() < 2 {
                return Err(usage("--schemes needs at least two ids"));
            }
            let parts = schemes.iter().map(|id| lookup(&catalog, id)).collect::<Result<Vec<_>, _>>()?;
            let id = SchemeId::new(schemes.join("_")).map_err(|e| usage(e.to_string()))?;
            let refs: Vec<&SchemeProfile> = parts.iter().collect();
            let profile = combine_profiles(id.clone(), name.as_deref(), &refs, &[]).map_err(|e| usage(e.to_string()))?;
            let p = place(&profile);
            writeln!(out, "{} ({})", profile.name, profile.category).map_err(io)?;
            writeln!(out, "placement: {} {} {} {} x={} y={}", p.vseg, p.vsub, p.hseg, p.hsub, p.x, p.y).map_err(io)?;
            for (b, r) in profile.vector.iter() {
                writeln!(out, "{b}={r}").map_err(io)?;
            }
            if emit_record {
                let record = Catalog {
                    combined: vec![CombinedScheme {
                        id,
                        name,
                        parts: parts.iter().map(|p| p.id.clone()).collect(),
                        overrides: Vec::new(),
                    }],
                    ..Catalog::default()
                };
                write!(out, "\n{}", serialize_catalog(&record)).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Chart {
            source,
            output,
            ascii_labels,
            combined,
            no_captions,
        } => {
            let catalog = load(source.catalog.as_ref(), source.builtin)?;
            let config = ChartConfig {
                ascii_labels,
                include_combined: combined,
                captions: !no_captions,
                ..ChartConfig::default()
            };
            let svg = render_svg(&catalog, &config).map_err(|e| usage(e.to_string()))?;
            match output {
                Some(path) => fs::write(&path, svg).map_err(|e| usage(format!("{}: {e}", path.display())))?,
                None => out.write_all(svg.as_bytes()).map_err(io)?,
            }
            Ok(EXIT_OK)
        }
        Command::Table { source, format, ascii } => {
            let format: TableFormat = format.parse().map_err(|e: crate::report::UnknownFormat| usage(e.to_string()))?;
            let catalog = load(source.catalog.as_ref(), source.builtin)?;
            let spec = TableSpec {
                format,
                symbols: if ascii { Symbols::Ascii } else { Symbols::Unicode },
            };
            let table = render_table(&catalog, spec).map_err(|e| usage(e.to_string()))?;
            write!(out, "{table}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Diff { args, builtin } => {
            let (path, a, b) = match (builtin, args.as_slice()) {
                (true, [a, b]) => (None, a, b),
                (false, [p, a, b]) => (Some(PathBuf::from(p)), a, b),
                (true, _) => return Err(usage("diff --builtin takes two scheme ids")),
                (false, _) => return Err(usage("diff takes a catalog path and two scheme ids")),
            };
            let catalog = load(path.as_ref(), builtin)?;
            let (a, b) = (lookup(&catalog, a)?, lookup(&catalog, b)?);
            write!(out, "{}", render_diff(&a, &b)).map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}
