//! Command-line front end.
//!
//! ```text
//! czcss generate  --kind gcp|czcp|czcp-mate|czcss --q Q --m M [--n N] [--pi 1,0,2] [--c C] ...
//! czcss verify    FILE [--z Z] [--as auto|zcp|czcp|czcs|szccs|czcss] [--format text|json]
//! czcss export    FILE [--format text|json|csv] [--a SET:IDX --b SET:IDX]
//! czcss reproduce 1|2 [--format text|json]
//! czcss sweep     [--q 2,4] [--m 4,5,6] [--n 1,2] [--draws D] [--seed S] [--jobs J] [--timing]
//! czcss project   --q Q --vars M --expr "2*x0*x1 + x2" [--trim L]
//! ```
//!
//! Exit status is 0 when every check passes, 1 when a check fails and 2 for
//! usage, parameter and I/O errors.
//!
//! Relative `--out` paths are resolved against `$CZCSS_OUTPUT_DIR` when it
//! is set.
//!
//! # Expression grammar for `project`
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := integer | 'x' ['_'] integer
//! ```
//!
//! Variables are `x0 .. x{M-1}`; `x_j` is bit `j` (least significant first)
//! of the sequence index. Coefficients are reduced modulo `q`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::constructions::{
    czcp_mate_pair, czcp_pair, czcss, standard_gcp, ConstructionParams, CodeFamily, Permutation, SequencePair,
};
use crate::correlation::{accf, write_correlation_csv, CyclotomicValue};
use crate::fixtures;
use crate::gbf::{Gbf, PhaseSequence};
use crate::io::{FileKind, SequenceFile};
use crate::sweep::{self, SweepConfig};
use crate::verify::{
    check_complementary_mate, check_czcp, check_czcs, check_czcss, check_mate_cross, check_szccs, check_zcp,
    mate_swap_sum, max_czcz, max_czcz_float, VerificationReport,
};

pub const OUTPUT_DIR_ENV: &str = "CZCSS_OUTPUT_DIR";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] crate::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("write failed: {0}")]
    Output(#[from] std::io::Error),
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "czcss", version, about = "Construct and verify cross Z-complementary sequence sets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a pair or family and write it as a sequence file.
    Generate(GenerateArgs),
    /// Check a sequence file against a complementarity definition.
    Verify(VerifyArgs),
    /// Print sequences or a correlation table from a sequence file.
    Export(ExportArgs),
    /// Rebuild a published example and diff it against the listed values.
    Reproduce(ReproduceArgs),
    /// Build and verify the construction over a parameter grid.
    Sweep(SweepArgs),
    /// Print the phase sequence of a generalized Boolean function.
    Project(ProjectArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckAs {
    Auto,
    Zcp,
    Czcp,
    Czcs,
    Szccs,
    Czcss,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub kind: FileKind,
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub m: usize,
    /// Number of extra variables (family size `2^(n+1)`); `czcss` only.
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    /// Comma-separated permutation; defaults to the identity.
    #[arg(long)]
    pub pi: Option<Permutation>,
    #[arg(long, default_value_t = 0)]
    pub c: u32,
    /// Constant added to the second sequence of a Golay pair.
    #[arg(long, default_value_t = 0)]
    pub c_prime: u32,
    /// Linear coefficients `c_0,..,c_{m-1}` of a Golay pair.
    #[arg(long, value_delimiter = ',')]
    pub coeffs: Option<Vec<u32>>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub input: PathBuf,
    /// Zone width; defaults to the width recorded in the file.
    #[arg(long)]
    pub z: Option<usize>,
    #[arg(long = "as", value_enum, default_value_t = CheckAs::Auto)]
    pub check_as: CheckAs,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = ExportFormat::Text)]
    pub format: ExportFormat,
    /// First sequence of a correlation table, as `set:index`.
    #[arg(long, requires = "b")]
    pub a: Option<String>,
    /// Second sequence of a correlation table, as `set:index`.
    #[arg(long, requires = "a")]
    pub b: Option<String>,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    /// 1 for the pair example, 2 for the family example.
    #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
    pub example: u8,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_delimiter = ',', default_value = "2,4")]
    pub q: Vec<u32>,
    #[arg(long, value_delimiter = ',', default_value = "4,5,6")]
    pub m: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "1,2")]
    pub n: Vec<usize>,
    #[arg(long, default_value_t = 50)]
    pub max_perms: usize,
    #[arg(long, default_value_t = 1)]
    pub draws: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Append a wall-time column; output is then no longer reproducible.
    #[arg(long)]
    pub timing: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ProjectArgs {
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub vars: usize,
    #[arg(long)]
    pub expr: String,
    #[arg(long, default_value_t = 0)]
    pub trim: usize,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CliResult<bool> {
    match command {
        Command::Generate(a) => generate(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Export(a) => export(a, out),
        Command::Reproduce(a) => reproduce(a, out),
        Command::Sweep(a) => run_sweep(a, out),
        Command::Project(a) => project(a, out),
    }
}

fn resolve_out(path: &Path) -> PathBuf {
    match std::env::var_os(OUTPUT_DIR_ENV) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

fn emit(text: &str, dest: Option<&Path>, out: &mut dyn Write) -> CliResult<()> {
    match dest {
        Some(p) => {
            let p = resolve_out(p);
            fs::write(&p, text).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            })?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn read_file(path: &Path) -> CliResult<SequenceFile> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(SequenceFile::from_json(&text)?)
}

/// Builds the sequence file a `generate` invocation describes.
pub fn build_file(a: &GenerateArgs) -> CliResult<SequenceFile> {
    let perm_len = match a.kind {
        FileKind::Gcp => a.m,
        _ => a.m.checked_sub(2).ok_or_else(|| CliError::Usage(format!("m = {} is below 4", a.m)))?,
    };
    let pi = a.pi.clone().unwrap_or_else(|| Permutation::identity(perm_len));
    let mut params = ConstructionParams::new(a.q, a.m, a.n, pi.clone());
    params.c = a.c;
    let file = match a.kind {
        FileKind::Gcp => {
            let coeffs = a.coeffs.clone().unwrap_or_else(|| vec![0; a.m]);
            let (ab, cd) = standard_gcp(a.q, a.m, &pi, &coeffs, a.c, a.c_prime)?;
            params.c_prime = a.c_prime;
            params.linear_coeffs = Some(coeffs);
            SequenceFile::from_pairs(FileKind::Gcp, &[("pair", &ab), ("mate", &cd)], Some(params))?
        }
        FileKind::Czcp => {
            let ab = czcp_pair(a.q, a.m, &pi, a.c)?;
            SequenceFile::from_pairs(FileKind::Czcp, &[("pair", &ab)], Some(params))?
        }
        FileKind::CzcpMate => {
            let cd = czcp_mate_pair(a.q, a.m, &pi, a.c)?;
            SequenceFile::from_pairs(FileKind::CzcpMate, &[("mate", &cd)], Some(params))?
        }
        FileKind::Czcss => {
            let family = czcss(a.q, a.m, a.n, &pi, a.c)?;
            SequenceFile::from_family(FileKind::Czcss, &family, Some(params))
        }
    };
    Ok(file)
}

fn generate(a: GenerateArgs, out: &mut dyn Write) -> CliResult<bool> {
    let file = build_file(&a)?;
    let text = match a.format {
        OutputFormat::Json => file.to_json(),
        OutputFormat::Text => file.to_rows(),
    };
    emit(&text, a.out.as_deref(), out)?;
    Ok(true)
}

#[derive(Debug, Serialize)]
struct LabeledReport {
    label: String,
    report: VerificationReport,
}

fn pairs_of(family: &CodeFamily, z: usize) -> CliResult<Vec<(String, SequencePair)>> {
    family
        .sets
        .iter()
        .map(|s| {
            if s.sequences.len() != 2 {
                return Err(CliError::Usage(format!(
                    "set '{}' has {} sequences; pair checks need exactly 2",
                    s.label,
                    s.sequences.len()
                )));
            }
            Ok((
                s.label.clone(),
                SequencePair::new(s.sequences[0].clone(), s.sequences[1].clone(), z)?,
            ))
        })
        .collect()
}

/// Runs the checks `verify` would run on `file`.
pub fn verify_file(file: &SequenceFile, z: Option<usize>, check_as: CheckAs) -> CliResult<Vec<(String, VerificationReport)>> {
    let family = file.to_family()?;
    let check_as = match (check_as, file.kind) {
        (CheckAs::Auto, FileKind::Gcp) => CheckAs::Zcp,
        (CheckAs::Auto, FileKind::Czcp | FileKind::CzcpMate) => CheckAs::Czcp,
        (CheckAs::Auto, FileKind::Czcss) => CheckAs::Czcss,
        (other, _) => other,
    };
    let z = match z.unwrap_or(file.claimed.zcz) {
        0 => return Err(CliError::Usage("zone width must be at least 1".into())),
        z => z,
    };
    let mut reports = Vec::new();
    match check_as {
        CheckAs::Zcp => {
            let pairs = pairs_of(&family, z)?;
            for (label, p) in &pairs {
                reports.push((label.clone(), check_zcp(p, z)?));
            }
            if file.kind == FileKind::Gcp && pairs.len() == 2 {
                reports.push(("pair/mate".into(), check_complementary_mate(&pairs[0].1, &pairs[1].1)?));
            }
        }
        CheckAs::Czcp => {
            let pairs = pairs_of(&family, z)?;
            for (label, p) in &pairs {
                reports.push((label.clone(), check_czcp(p, z)?));
            }
            if pairs.len() == 2 {
                if let Some(params) = &file.params {
                    let r = check_mate_cross(&pairs[0].1, &pairs[1].1, params.m, &params.pi)?;
                    reports.push(("pair/mate".into(), r));
                }
            }
        }
        CheckAs::Czcs => {
            for s in &family.sets {
                reports.push((s.label.clone(), check_czcs(s, z)?));
            }
        }
        CheckAs::Szccs => reports.push(("family".into(), check_szccs(&family, z)?)),
        CheckAs::Czcss => reports.push(("family".into(), check_czcss(&family, z)?)),
        CheckAs::Auto => unreachable!("resolved above"),
    }
    Ok(reports)
}

fn print_reports(reports: Vec<(String, VerificationReport)>, format: OutputFormat, out: &mut dyn Write) -> CliResult<bool> {
    let pass = reports.iter().all(|(_, r)| r.pass);
    match format {
        OutputFormat::Text => {
            for (label, r) in &reports {
                writeln!(out, "== {label} ==")?;
                out.write_all(r.to_text().as_bytes())?;
            }
            if reports.len() > 1 {
                writeln!(out, "all: {}", if pass { "PASS" } else { "FAIL" })?;
            }
        }
        OutputFormat::Json => {
            let labeled: Vec<LabeledReport> = reports
                .into_iter()
                .map(|(label, report)| LabeledReport { label, report })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&labeled).expect("serializable"))?;
        }
    }
    Ok(pass)
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> CliResult<bool> {
    let file = read_file(&a.input)?;
    let reports = verify_file(&file, a.z, a.check_as)?;
    print_reports(reports, a.format, out)
}

fn locate<'f>(family: &'f CodeFamily, locator: &str) -> CliResult<&'f PhaseSequence> {
    let bad = || CliError::Usage(format!("'{locator}' is not of the form set:index"));
    let (s, i) = locator.split_once(':').ok_or_else(bad)?;
    let s: usize = s.trim().parse().map_err(|_| bad())?;
    let i: usize = i.trim().parse().map_err(|_| bad())?;
    family
        .sets
        .get(s)
        .and_then(|set| set.sequences.get(i))
        .ok_or_else(|| CliError::Usage(format!("no sequence {i} in set {s}")))
}

fn export(a: ExportArgs, out: &mut dyn Write) -> CliResult<bool> {
    let file = read_file(&a.input)?;
    let family = file.to_family()?;
    match (&a.a, &a.b) {
        (Some(sa), Some(sb)) => {
            let (x, y) = (locate(&family, sa)?, locate(&family, sb)?);
            let n = x.len() as i64;
            let rows = (-(n - 1)..n)
                .map(|t| Ok((t, accf(x, y, t)?)))
                .collect::<crate::Result<Vec<(i64, CyclotomicValue)>>>()?;
            match a.format {
                ExportFormat::Csv => write_correlation_csv(&mut *out, file.q, &rows)?,
                ExportFormat::Json => {
                    let v: Vec<_> = rows
                        .iter()
                        .map(|(t, c)| {
                            serde_json::json!({
                                "tau": t,
                                "counts": c.counts(),
                                "magnitude": c.magnitude(),
                                "is_zero": c.is_zero(),
                            })
                        })
                        .collect();
                    writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))?;
                }
                ExportFormat::Text => {
                    for (t, c) in &rows {
                        writeln!(out, "{t:>6} {:>12.6}", c.magnitude())?;
                    }
                }
            }
        }
        _ => match a.format {
            ExportFormat::Text => out.write_all(file.to_rows().as_bytes())?,
            ExportFormat::Json => out.write_all(file.to_json().as_bytes())?,
            ExportFormat::Csv => {
                let mut w = csv::Writer::from_writer(&mut *out);
                let mut header = vec!["set".to_string(), "index".to_string()];
                header.extend((0..file.length).map(|k| format!("t{k}")));
                w.write_record(&header).map_err(std::io::Error::from)?;
                for s in &file.sets {
                    for (i, p) in s.sequences.iter().enumerate() {
                        let mut rec = vec![s.label.clone(), i.to_string()];
                        rec.extend(p.iter().map(|v| v.to_string()));
                        w.write_record(&rec).map_err(std::io::Error::from)?;
                    }
                }
                w.flush()?;
            }
        },
    }
    Ok(true)
}

fn example_pi() -> Permutation {
    Permutation::new(fixtures::PI.to_vec()).expect("valid permutation")
}

fn diff_line(out: &mut dyn Write, name: &str, got: &[u32], want: &[u32]) -> CliResult<bool> {
    let ok = got == want;
    writeln!(out, "{name}: {}", if ok { "match" } else { "MISMATCH" })?;
    if !ok {
        writeln!(out, "  expected {want:?}")?;
        writeln!(out, "  got      {got:?}")?;
    }
    Ok(ok)
}

fn magnitudes_match(values: &[CyclotomicValue], listed: &[u64]) -> Vec<usize> {
    values
        .iter()
        .zip(listed)
        .enumerate()
        .filter(|(_, (v, &k))| !v.has_magnitude(k))
        .map(|(i, _)| i)
        .collect()
}

fn reproduce_pairs(format: OutputFormat, out: &mut dyn Write) -> CliResult<bool> {
    let pi = example_pi();
    let (q, m) = (fixtures::Q, fixtures::M);
    let ab = czcp_pair(q, m, &pi, 0)?;
    let cd = czcp_mate_pair(q, m, &pi, 0)?;
    let z = fixtures::ZCZ;
    let r_ab = check_czcp(&ab, z)?;
    let r_cd = check_czcp(&cd, z)?;
    let mate = check_mate_cross(&ab, &cd, m, &pi)?;
    if format == OutputFormat::Json {
        return print_reports(
            vec![("(a,b)".into(), r_ab), ("(c,d)".into(), r_cd), ("(a,b)/(c,d)".into(), mate)],
            format,
            out,
        );
    }
    let mut ok = true;
    ok &= diff_line(out, "a", ab.first.phases(), &fixtures::SEQ_A)?;
    ok &= diff_line(out, "b", ab.second.phases(), &fixtures::SEQ_B)?;
    ok &= diff_line(out, "c", cd.first.phases(), &fixtures::SEQ_C)?;
    ok &= diff_line(out, "d", cd.second.phases(), &fixtures::SEQ_D)?;
    let (m_ab, m_cd) = (max_czcz(&ab), max_czcz(&cd));
    writeln!(
        out,
        "(a,b) CZCP at Z={z}: {}  max_z={m_ab} (float {})",
        if r_ab.pass { "pass" } else { "FAIL" },
        max_czcz_float(&ab)
    )?;
    writeln!(out, "(c,d) CZCP at Z={z}: {}  max_z={m_cd}", if r_cd.pass { "pass" } else { "FAIL" })?;
    ok &= r_ab.pass && r_cd.pass && m_ab == z;
    for p in &mate.properties {
        writeln!(out, "{} on {}: {}", p.property, p.window, if p.pass { "pass" } else { "FAIL" })?;
    }
    ok &= mate.pass;

    let first = fixtures::MATE_SWAP_FIRST_TAU;
    let taus: Vec<i64> = (first..first + fixtures::MATE_SWAP_MAGNITUDES.len() as i64).collect();
    let values = taus
        .iter()
        .map(|&t| mate_swap_sum(&ab, &cd, t))
        .collect::<crate::Result<Vec<_>>>()?;
    let listed = &fixtures::MATE_SWAP_MAGNITUDES;
    let bad = magnitudes_match(&values, listed);
    writeln!(
        out,
        "|C(a,d)+C(b,c)| listing, tau={}..={}: {}",
        taus[0],
        taus[taus.len() - 1],
        if bad.is_empty() { "match".to_string() } else { format!("{} MISMATCHES", bad.len()) }
    )?;
    for &i in &bad {
        writeln!(out, "  tau={:>3} listed {:>2} computed {:.0}", taus[i], listed[i], values[i].magnitude())?;
    }
    if !bad.is_empty() {
        let reversed: Vec<CyclotomicValue> = values.iter().rev().cloned().collect();
        if magnitudes_match(&reversed, listed).is_empty() {
            writeln!(out, "  note: the listing equals the computed values read from tau={} down", taus[taus.len() - 1])?;
        }
    }
    ok &= bad.is_empty();
    writeln!(out, "overall: {}", if ok { "PASS" } else { "FAIL" })?;
    Ok(ok)
}

fn reproduce_family(format: OutputFormat, out: &mut dyn Write) -> CliResult<bool> {
    let family = czcss(fixtures::Q, fixtures::M, fixtures::N_FAMILY, &example_pi(), 0)?;
    let report = check_czcss(&family, fixtures::ZCZ)?;
    if format == OutputFormat::Json {
        return print_reports(vec![("family".into(), report)], format, out);
    }
    let c = family.claimed;
    let shape = (c.set_size, c.flock_size, c.length, c.zcz);
    let shape_ok = shape == fixtures::FAMILY_SHAPE;
    writeln!(
        out,
        "shape (K,M,N,Z) = {shape:?}: {}",
        if shape_ok { "match" } else { "MISMATCH" }
    )?;
    out.write_all(report.to_text().as_bytes())?;
    Ok(shape_ok && report.pass)
}

fn reproduce(a: ReproduceArgs, out: &mut dyn Write) -> CliResult<bool> {
    match a.example {
        1 => reproduce_pairs(a.format, out),
        _ => reproduce_family(a.format, out),
    }
}

fn run_sweep(a: SweepArgs, out: &mut dyn Write) -> CliResult<bool> {
    let config = SweepConfig {
        qs: a.q,
        ms: a.m,
        ns: a.n,
        max_perms: a.max_perms,
        draws: a.draws,
        seed: a.seed,
        jobs: a.jobs,
        timing: a.timing,
    };
    let rows = sweep::run(&config)?;
    let mut buf = Vec::new();
    sweep::write_csv(&mut buf, &rows, config.timing)?;
    emit(&String::from_utf8(buf).expect("csv is utf-8"), a.out.as_deref(), out)?;
    Ok(rows.iter().all(|r| r.pass))
}

fn project(a: ProjectArgs, out: &mut dyn Write) -> CliResult<bool> {
    let f = Gbf::parse(&a.expr, a.q, a.vars)?;
    let seq = f.project_truncated(a.trim)?;
    writeln!(out, "{seq}")?;
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut o = Vec::new();
        let mut e = Vec::new();
        let code = run(std::iter::once("czcss").chain(args.iter().copied()), &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn project_prints_phases() {
        let (code, out, _) = call(&["project", "--q", "2", "--vars", "2", "--expr", "x0*x1"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "0 0 0 1");
        let (code, _, err) = call(&["project", "--q", "2", "--vars", "2", "--expr", "x5"]);
        assert_eq!(code, 2);
        assert!(err.contains("error"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&[]).0, 2);
        assert_eq!(call(&["reproduce", "3"]).0, 2);
        assert_eq!(call(&["generate", "--kind", "czcp", "--q", "3", "--m", "5"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn generate_to_stdout() {
        let (code, out, _) = call(&["generate", "--kind", "czcp", "--q", "4", "--m", "5", "--pi", "1,0,2", "--format", "text"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("# pair\n0 0 0 0 2 0 2 0 0 2 2 0 2 2 0 0 0 2\n"));
    }

    #[test]
    fn reproduce_family_passes() {
        let (code, out, _) = call(&["reproduce", "2"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("overall: PASS"));
    }

    #[test]
    fn reproduce_pairs_reports_listing_orientation() {
        let (code, out, _) = call(&["reproduce", "1"]);
        assert!(out.contains("a: match") && out.contains("d: match"), "{out}");
        assert!(out.contains("MATE_ALL") && out.contains("MATE_TAIL"));
        assert!(out.contains("read from tau=17 down"), "{out}");
        assert_eq!(code, 1);
    }

    #[test]
    fn zero_zone_is_a_usage_error() {
        let file = build_file(&GenerateArgs {
            kind: FileKind::Czcp,
            q: 4,
            m: 5,
            n: 1,
            pi: None,
            c: 0,
            c_prime: 0,
            coeffs: None,
            out: None,
            format: OutputFormat::Json,
        })
        .unwrap();
        assert!(matches!(verify_file(&file, Some(0), CheckAs::Auto), Err(CliError::Usage(_))));
        assert!(verify_file(&file, None, CheckAs::Auto).unwrap()[0].1.pass);
    }
}
