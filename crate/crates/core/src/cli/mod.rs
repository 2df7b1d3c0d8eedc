//! Command-line front end. [`run`] drives everything so the binary is a
//! one-liner and tests can call commands in-process.

mod scan;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

pub use scan::{analyse_file, qnd_files, scan_dir, ScanRecord, ScanSummary, SCHEMA};

use crate::construct::{counterexample_skeleton, DEFAULT_SIZE_CAP};
use crate::grp::criteria::DEFAULT_STAR_CAP;
use crate::grp::{
    has_normal_p_complement_for_sylow, o_pi_prime, star_property, theorem_opprime_check, ExplicitGroup,
    StarOutcome,
};
use crate::io::{self, build, load_group, ConstructSpec, Constructed, IoError};
use crate::quandle::{validate_rows, QuandleClassReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

const DEFAULT_GROUP_CAP: usize = 100_000;

#[derive(Debug, Parser)]
#[command(name = "quandlekit", version, about = "Finite quandles and the groups behind them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a `.qnd` table as left quasigroup, rack or quandle.
    Validate { path: PathBuf },
    /// Connectivity, faithfulness, simplicity and group data of a quandle.
    Props {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build a quandle from a spec such as `affine:Z5:f=2` or `tensor:a5.grp:t=2:theta=id`.
    Construct {
        spec: String,
        #[arg(short, long)]
        output: PathBuf,
        /// Largest quandle to materialize.
        #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
        cap: usize,
        /// Largest group to enumerate from generators.
        #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
        group_cap: usize,
        /// Directory group files are resolved against.
        #[arg(long, default_value = ".")]
        groups: PathBuf,
    },
    /// Analyse every `.qnd` file in a directory.
    Scan {
        dir: PathBuf,
        /// Evaluate the conjecture on superconnected quandles; exit 2 on a counterexample.
        #[arg(long)]
        conjecture: bool,
        #[arg(long)]
        json: bool,
    },
    /// Criteria on a single group.
    #[command(subcommand)]
    Group(GroupCommand),
    /// Check the permutation skeleton of `(L, t, 1)` for a nonsolvable `L`.
    Skeleton {
        group: PathBuf,
        #[arg(short)]
        t: u64,
        #[arg(long)]
        json: bool,
    },
    /// Convert a 1-based GAP matrix into a `.qnd` file.
    Convert {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Read entry (i, j) as j * i.
        #[arg(long)]
        transpose: bool,
    },
}

#[derive(Debug, Args)]
struct GroupArgs {
    group: PathBuf,
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
    group_cap: usize,
}

#[derive(Debug, Subcommand)]
enum GroupCommand {
    /// Whether the class of an element has the ⋆-property.
    Star {
        #[command(flatten)]
        args: GroupArgs,
        #[arg(long)]
        element: String,
        #[arg(long, default_value_t = DEFAULT_STAR_CAP)]
        cap: usize,
    },
    /// The largest normal subgroup of order prime to the given primes.
    Opprime {
        #[command(flatten)]
        args: GroupArgs,
        #[arg(short, value_delimiter = ',', required = true)]
        p: Vec<u64>,
    },
    /// Whether a cyclic Sylow subgroup has a normal complement.
    Pcomplement {
        #[command(flatten)]
        args: GroupArgs,
        #[arg(long)]
        element: String,
        #[arg(short)]
        p: u64,
    },
    /// The three conditions on a p-element, evaluated independently.
    TheoremOpp {
        #[command(flatten)]
        args: GroupArgs,
        #[arg(long)]
        element: String,
        #[arg(short)]
        p: u64,
    },
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_cap_exceeded() {
                EXIT_CAP
            } else {
                EXIT_INVALID
            }
        }
    }
}

/// Captures the output of [`run`].
pub fn run_to_string<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(args, &mut out, &mut err);
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}

fn emit(out: &mut dyn Write, text: impl std::fmt::Display) -> Result<(), IoError> {
    writeln!(out, "{text}").map_err(|source| IoError::File {
        path: PathBuf::from("<stdout>"),
        source,
    })
}

fn emit_json(out: &mut dyn Write, value: &impl serde::Serialize) -> Result<(), IoError> {
    emit(out, serde_json::to_string_pretty(value).expect("serializable"))
}

fn write_file(path: &Path, contents: &str) -> Result<(), IoError> {
    std::fs::write(path, contents).map_err(|source| IoError::File {
        path: path.to_path_buf(),
        source,
    })
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, IoError> {
    match command {
        Command::Validate { path } => {
            let rows = io::parse_qnd_rows(&read_text(&path)?)?;
            let v = validate_rows(&rows);
            emit(out, v.classification)?;
            for violation in &v.violations {
                emit(out, violation)?;
            }
            Ok(if v.is_quandle() { EXIT_OK } else { EXIT_INVALID })
        }
        Command::Props { path, json } => {
            let q = io::read_qnd(&path)?;
            let report = QuandleClassReport::of(&q);
            if json {
                emit_json(out, &json!({ "schema": SCHEMA, "path": path, "report": report }))?;
            } else {
                emit(out, props_text(&report))?;
            }
            Ok(if report.is_quandle { EXIT_OK } else { EXIT_INVALID })
        }
        Command::Construct {
            spec,
            output,
            cap,
            group_cap,
            groups,
        } => {
            let parsed: ConstructSpec = spec.parse()?;
            match build(&parsed, &groups, cap, group_cap)? {
                Constructed::Table(q) => {
                    write_file(&output, &io::write_qnd(&q))?;
                    emit(out, format_args!("wrote {}-element quandle to {}", q.len(), output.display()))?;
                    Ok(EXIT_OK)
                }
                Constructed::Companion(g) => {
                    let path = output.with_extension("grp");
                    write_file(&path, &io::write_grp_perm(&g))?;
                    emit(
                        out,
                        format_args!(
                            "size cap {cap} exceeded; wrote L^t x| Z_t on {} points to {}",
                            g.degree(),
                            path.display()
                        ),
                    )?;
                    Ok(EXIT_CAP)
                }
            }
        }
        Command::Scan { dir, conjecture, json } => {
            let (records, summary) = scan_dir(&dir, conjecture).map_err(|source| IoError::File {
                path: dir.clone(),
                source,
            })?;
            for r in &records {
                if json {
                    emit(out, serde_json::to_string(r).expect("serializable"))?;
                } else {
                    emit(out, scan_line(r))?;
                }
            }
            if json {
                emit(out, serde_json::to_string(&json!({ "summary": summary })).expect("serializable"))?;
            } else {
                emit(
                    out,
                    format_args!(
                        "{} files, {} errors, {} superconnected, {} counterexamples",
                        summary.files, summary.errors, summary.superconnected, summary.counterexamples
                    ),
                )?;
            }
            Ok(if summary.counterexamples > 0 { EXIT_COUNTEREXAMPLE } else { EXIT_OK })
        }
        Command::Group(cmd) => group_command(cmd, out),
        Command::Skeleton { group, t, json } => {
            let l = load_group(&group.to_string_lossy(), Path::new("."))?.to_perm()?;
            let report = counterexample_skeleton(&l, t)?;
            if json {
                emit_json(out, &report)?;
            } else {
                for line in &report.lines {
                    emit(out, line)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Convert {
            input,
            output,
            transpose,
        } => {
            let rows = io::parse_gap_matrix(&read_text(&input)?, transpose)?;
            let v = validate_rows(&rows);
            let q = crate::quandle::QuandleTable::from_rows(rows)?;
            write_file(&output, &io::write_qnd(&q))?;
            emit(out, format_args!("wrote {} ({})", output.display(), v.classification))?;
            Ok(if v.is_quandle() { EXIT_OK } else { EXIT_INVALID })
        }
    }
}

fn read_text(path: &Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|source| IoError::File {
        path: path.to_path_buf(),
        source,
    })
}

fn props_text(r: &QuandleClassReport) -> String {
    let mut lines = vec![
        format!("n = {}", r.n),
        format!("classification = {}", r.classification),
    ];
    for (name, value) in [
        ("connected", r.connected),
        ("faithful", r.faithful),
        ("latin", r.latin),
        ("superfaithful", r.superfaithful),
        ("superconnected", r.superconnected),
        ("simple", r.simple),
        ("primitive", r.primitive),
        ("solvable_dis", r.solvable_dis),
        ("abelian_dis", r.abelian_dis),
    ] {
        lines.push(format!("{name} = {value}"));
    }
    lines.push(format!("|LMlt| = {}", r.lmlt_order));
    lines.push(format!("|Dis| = {}", r.dis_order));
    lines.push(format!("orbit sizes = {:?}", r.orbit_sizes));
    lines.push(format!("|Q/λ| = {}", r.cayley_quotient_size));
    for (name, w) in &r.witnesses {
        lines.push(format!("witness {name}: {}", serde_json::to_string(w).expect("serializable")));
    }
    lines.join("\n")
}

fn scan_line(r: &ScanRecord) -> String {
    let path = r.path.display();
    if let Some(e) = &r.error {
        return format!("{path}: error: {e}");
    }
    let report = r.report.as_ref().expect("report without error");
    let mut line = format!(
        "{path}: n={} connected={} superconnected={} solvable_dis={}",
        report.n, report.connected, report.superconnected, report.solvable_dis
    );
    if r.is_counterexample() {
        line.push_str(" COUNTEREXAMPLE");
    }
    line
}

fn load_explicit(args: &GroupArgs) -> Result<ExplicitGroup, IoError> {
    load_group(&args.group.to_string_lossy(), Path::new("."))?.to_explicit(args.group_cap)
}

fn group_command(cmd: GroupCommand, out: &mut dyn Write) -> Result<i32, IoError> {
    match cmd {
        GroupCommand::Star { args, element, cap } => {
            let g = load_explicit(&args)?;
            let x = g.parse_element(&element)?;
            let outcome = star_property(&g, x, cap);
            if args.json {
                emit_json(out, &json!({ "schema": SCHEMA, "element": g.label(x), "star": outcome }))?;
            } else {
                match &outcome {
                    StarOutcome::Holds => emit(out, "holds")?,
                    StarOutcome::Fails { witness } => {
                        emit(out, format_args!("fails: witness {}", g.label(*witness)))?
                    }
                    StarOutcome::Exceeded { cap } => emit(out, format_args!("undecided: class exceeds {cap}"))?,
                }
            }
            Ok(match outcome {
                StarOutcome::Exceeded { .. } => EXIT_CAP,
                _ => EXIT_OK,
            })
        }
        GroupCommand::Opprime { args, p } => {
            let g = load_explicit(&args)?;
            let o = o_pi_prime(&g, &p);
            let labels: Vec<String> = o.elements().iter().map(|&e| g.label(e)).collect();
            if args.json {
                emit_json(out, &json!({ "schema": SCHEMA, "primes": p, "order": o.order(), "elements": labels }))?;
            } else {
                emit(out, format_args!("order {}", o.order()))?;
                emit(out, labels.join(" "))?;
            }
            Ok(EXIT_OK)
        }
        GroupCommand::Pcomplement { args, element, p } => {
            let g = load_explicit(&args)?;
            let x = g.parse_element(&element)?;
            let verdict = has_normal_p_complement_for_sylow(&g, x, p)?;
            if args.json {
                emit_json(out, &json!({ "schema": SCHEMA, "element": g.label(x), "p": p, "normal_complement": verdict }))?;
            } else {
                emit(out, verdict)?;
            }
            Ok(EXIT_OK)
        }
        GroupCommand::TheoremOpp { args, element, p } => {
            let g = load_explicit(&args)?;
            let x = g.parse_element(&element)?;
            let report = theorem_opprime_check(&g, x, p)?;
            if args.json {
                emit_json(out, &json!({ "schema": SCHEMA, "element": g.label(x), "p": p, "report": report }))?;
            } else {
                emit(out, format_args!("class meets centralizer only in x: {}", report.cond_i))?;
                emit(out, format_args!("G = O_p'(G) C_G(x): {}", report.cond_ii_opc))?;
                emit(out, format_args!("star property: {}", report.cond_iii_star))?;
                emit(out, format_args!("consistent: {}", report.consistent))?;
            }
            Ok(if report.consistent { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
        }
    }
}
