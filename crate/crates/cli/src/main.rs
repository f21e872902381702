use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serre_core::invariants::graded_betti;
use serre_core::monomial::{alexander_dual_ideal, complex_of_ideal, polarize, stanley_reisner_ideal};
use serre_core::report::{InputDescriptor, InvariantBlock, ProfileRecord, Report, VerdictRecord};
use serre_core::serre::{alexander_data, evaluate_cell, serre_profile, Status, Witness};
use serre_core::verify::{parse_range_list, run_suite, SuiteConfig, SuiteReport};
use serre_core::{parse_input, Criterion, Error, Face, Input, PrimeField, SimplicialComplex};

/// Generalized Serre conditions for Stanley-Reisner rings.
#[derive(Parser, Debug)]
#[command(name = "serre", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Prime field characteristic.
    #[arg(long, global = true, default_value_t = 2)]
    field: u64,

    /// Write the output to this file (atomically) instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CriterionArg {
    Definition,
    Reisner,
    DualGraph,
    Alexander,
    Lemma63,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide (S_ell^j) for the given grid cells.
    Check(CheckArgs),
    /// The full (S_ell^j) grid for 1 <= ell <= d, 0 <= j <= d.
    Profile(ProfileArgs),
    /// Graded Betti numbers of the Stanley-Reisner ideal, as rows "i b dim".
    Betti {
        input: String,
        /// Use the Alexander dual ideal instead.
        #[arg(long)]
        dual: bool,
    },
    /// Depth, projective dimension and regularity.
    Depth { input: String },
    /// Alexander dual of a complex or squarefree ideal.
    Dual { input: String },
    /// Polarization of a monomial ideal.
    Polarize { input: String },
    /// The i-skeleton of a complex.
    Skeleton {
        input: String,
        #[arg(long)]
        dim: isize,
    },
    /// Run the property suites of a configuration file.
    Verify { config: PathBuf },
}

#[derive(Args, Debug)]
struct CheckArgs {
    input: String,
    /// Values of ell: repeatable, comma separated or ranges like 2..4.
    #[arg(long = "ell", default_value = "2")]
    ells: Vec<String>,
    /// Values of j: repeatable, comma separated or ranges like 0..3.
    #[arg(long = "j", default_value = "0")]
    js: Vec<String>,
    #[arg(long = "criterion", value_enum, default_values_t = [CriterionArg::Definition])]
    criteria: Vec<CriterionArg>,
}

#[derive(Args, Debug)]
struct ProfileArgs {
    input: String,
    #[arg(long = "criterion", value_enum, default_values_t = [CriterionArg::All])]
    criteria: Vec<CriterionArg>,
}

const EXIT_OK: i32 = 0;
const EXIT_NOT_SATISFIED: i32 = 1;
const EXIT_NOT_APPLICABLE: i32 = 2;
const EXIT_DISAGREEMENT: i32 = 3;

struct Run {
    report: Report,
    text: String,
}

fn criteria(args: &[CriterionArg]) -> Vec<Criterion> {
    let mut out = Vec::new();
    for a in args {
        let add: &[Criterion] = match a {
            CriterionArg::Definition => &[Criterion::Definition],
            CriterionArg::Reisner => &[Criterion::ReisnerGen],
            CriterionArg::DualGraph => &[Criterion::DualGraph],
            CriterionArg::Alexander => &[Criterion::AlexanderDual],
            CriterionArg::Lemma63 => &[Criterion::Lemma63Necessary],
            CriterionArg::All => &Criterion::ALL,
        };
        for c in add {
            if !out.contains(c) {
                out.push(*c);
            }
        }
    }
    out.sort();
    out
}

fn ranges(values: &[String], what: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for v in values {
        out.extend(parse_range_list(v).with_context(|| format!("--{what} {v}"))?);
    }
    out.sort_unstable();
    out.dedup();
    if out.is_empty() {
        bail!("--{what} selects no values");
    }
    Ok(out)
}

fn read_source(source: &str) -> Result<String> {
    if source == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(source).with_context(|| format!("cannot read {source}"))
    }
}

fn read_input(source: &str) -> Result<Input> {
    parse_input(&read_source(source)?).with_context(|| source.to_string())
}

/// The complex of a facet file, or of a squarefree ideal file.
fn read_complex(source: &str) -> Result<SimplicialComplex> {
    match read_input(source)? {
        Input::Complex(c) => Ok(c),
        Input::Ideal(i) => {
            let sq = i
                .to_squarefree()
                .map_err(|_| anyhow!("{source}: requires a squarefree ideal (run 'serre polarize' first)"))?;
            Ok(complex_of_ideal(&sq))
        }
    }
}

fn label(c: &SimplicialComplex, face: Face) -> String {
    let names: Vec<String> = face.iter().map(|v| c.name(v)).collect();
    format!("{{{}}}", names.join(","))
}

fn witness_text(c: &SimplicialComplex, w: &Witness) -> String {
    match w {
        Witness::Face { face } => format!("face {}", label(c, *face)),
        Witness::Homology { face, index } => format!("face {} with H~_{index} != 0", label(c, *face)),
        Witness::Tor { gamma, beta } => format!("Tor_{gamma} nonzero in degree {beta}"),
    }
}

fn status_text(s: Status) -> &'static str {
    match s {
        Status::Satisfied => "satisfied",
        Status::NotSatisfied => "not satisfied",
        Status::NotApplicable => "not applicable",
    }
}

fn verdict_line(c: &SimplicialComplex, v: &VerdictRecord) -> String {
    let mut line = format!("{} ell={} j={}: {}", v.criterion, v.ell, v.j, status_text(v.status));
    if let Some(w) = &v.witness {
        write!(line, ", witness {}", witness_text(c, w)).unwrap();
    }
    if let Some(note) = &v.note {
        write!(line, " ({note})").unwrap();
    }
    line
}

fn na<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "n/a".to_string(), |x| x.to_string())
}

fn invariants_text(b: &InvariantBlock) -> String {
    let fv = b.f_vector.0.as_ref().map_or("n/a".to_string(), |f| {
        f.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    });
    format!(
        "kind {}, dim {}, krull dim {}, depth {}, pd {}, reg {}, f-vector ({fv}), cohen-macaulay {}\n",
        b.kind,
        na(&b.dim.0),
        na(&b.krull_dim.0),
        na(&b.depth.0),
        na(&b.pd.0),
        na(&b.reg.0),
        na(&b.cohen_macaulay.0),
    )
}

fn header(report: &Report) -> String {
    let mut s = String::new();
    if let Some(input) = &report.input {
        writeln!(s, "input: {} ({}, n={})", input.source, input.kind, input.n).unwrap();
    }
    writeln!(s, "field: GF({})", report.field).unwrap();
    s
}

fn cmd_check(args: &CheckArgs, field: PrimeField) -> Result<Run> {
    let c = read_complex(&args.input)?;
    let ells = ranges(&args.ells, "ell")?;
    let js = ranges(&args.js, "j")?;
    let wanted = criteria(&args.criteria);
    let mut report = Report::new("check", field);
    report.input = Some(InputDescriptor::complex(&args.input, &c));
    report.invariants = Some(InvariantBlock::compute(&c, field)?);
    let alexander = if wanted.contains(&Criterion::AlexanderDual) && c.is_pure() && !c.is_void() {
        alexander_data(&c, field)?
    } else {
        None
    };
    let mut disagreements = Vec::new();
    for &ell in &ells {
        for &j in &js {
            let cell = evaluate_cell(&c, ell, j, field, &wanted, alexander.as_ref())?;
            if cell.disagreement {
                disagreements.push((ell, j));
            }
            for v in &cell.verdicts {
                if wanted.contains(&v.criterion) {
                    report.verdicts.push(v.into());
                }
            }
        }
    }
    let applicable: Vec<&VerdictRecord> = report.verdicts.iter().filter(|v| v.status != Status::NotApplicable).collect();
    report.exit_code = if !disagreements.is_empty() {
        for (ell, j) in &disagreements {
            report.messages.push(format!("criteria disagreement at ell={ell} j={j}"));
        }
        EXIT_DISAGREEMENT
    } else if c.is_void() {
        report.messages.push("void complex: vacuously true".into());
        EXIT_OK
    } else if applicable.is_empty() {
        let mut notes: Vec<String> = report.verdicts.iter().filter_map(|v| v.note.clone()).collect();
        notes.dedup();
        report.messages.push(format!("not applicable: {}", notes.join("; ")));
        EXIT_NOT_APPLICABLE
    } else if applicable.iter().any(|v| v.status == Status::NotSatisfied) {
        EXIT_NOT_SATISFIED
    } else {
        EXIT_OK
    };
    let mut text = header(&report);
    text += &invariants_text(report.invariants.as_ref().expect("set above"));
    for v in &report.verdicts {
        writeln!(text, "{}", verdict_line(&c, v)).unwrap();
    }
    for m in &report.messages {
        writeln!(text, "{m}").unwrap();
    }
    let result = match report.exit_code {
        EXIT_OK => "satisfied",
        EXIT_NOT_SATISFIED => "not satisfied",
        EXIT_NOT_APPLICABLE => "not applicable",
        _ => "disagreement",
    };
    writeln!(text, "result: {result}").unwrap();
    Ok(Run { report, text })
}

fn profile_text(c: &SimplicialComplex, p: &ProfileRecord) -> String {
    let mut s = String::new();
    let js: Vec<usize> = (0..=p.krull_dim).collect();
    write!(s, "ell\\j").unwrap();
    for j in &js {
        write!(s, " {j:>2}").unwrap();
    }
    s.push('\n');
    for ell in 1..=p.krull_dim {
        write!(s, "{ell:>5}").unwrap();
        for &j in &js {
            let cell = p.cells.iter().find(|x| x.ell == ell && x.j == j).expect("full grid");
            write!(s, " {:>2}", if cell.satisfied { "T" } else { "F" }).unwrap();
        }
        s.push('\n');
    }
    for cell in p.cells.iter().filter(|x| x.disagreement) {
        writeln!(s, "disagreement at ell={} j={}:", cell.ell, cell.j).unwrap();
        for v in &cell.verdicts {
            writeln!(s, "  {}", verdict_line(c, v)).unwrap();
        }
    }
    s
}

fn cmd_profile(args: &ProfileArgs, field: PrimeField) -> Result<Run> {
    let c = read_complex(&args.input)?;
    let wanted = criteria(&args.criteria);
    let mut report = Report::new("profile", field);
    report.input = Some(InputDescriptor::complex(&args.input, &c));
    report.invariants = Some(InvariantBlock::compute(&c, field)?);
    let profile = serre_profile(&c, field, &wanted)?;
    let record = ProfileRecord::from(&profile);
    let disagreements = record.cells.iter().filter(|x| x.disagreement).count();
    if disagreements > 0 {
        report.messages.push(format!("{disagreements} cells with criteria disagreement"));
        report.exit_code = EXIT_DISAGREEMENT;
    }
    let mut text = header(&report);
    text += &invariants_text(report.invariants.as_ref().expect("set above"));
    text += &profile_text(&c, &record);
    report.profile = Some(record);
    Ok(Run { report, text })
}

fn cmd_betti(input: &str, dual: bool, field: PrimeField) -> Result<Run> {
    let c = read_complex(input)?;
    let mut report = Report::new("betti", field);
    report.input = Some(InputDescriptor::complex(input, &c));
    let ideal = stanley_reisner_ideal(&c);
    let ideal = if dual { alexander_dual_ideal(&ideal) } else { ideal };
    let rows = match graded_betti(&ideal, field) {
        Ok(t) => t.to_rows(),
        Err(e @ (Error::ZeroIdeal | Error::UnitIdeal)) => {
            report.messages.push(format!("{e}: no Betti numbers"));
            String::new()
        }
        Err(e) => return Err(e.into()),
    };
    let text = rows.clone();
    report.output = Some(rows);
    Ok(Run { report, text })
}

fn cmd_depth(input: &str, field: PrimeField) -> Result<Run> {
    let c = read_complex(input)?;
    let mut report = Report::new("depth", field);
    report.input = Some(InputDescriptor::complex(input, &c));
    let block = InvariantBlock::compute(&c, field)?;
    let line = format!("depth {} pd {} reg {}\n", na(&block.depth.0), na(&block.pd.0), na(&block.reg.0));
    report.invariants = Some(block);
    report.output = Some(line.clone());
    Ok(Run { report, text: line })
}

fn cmd_dual(input: &str, field: PrimeField) -> Result<Run> {
    let mut report = Report::new("dual", field);
    let out = match read_input(input)? {
        Input::Complex(c) => {
            report.input = Some(InputDescriptor::complex(input, &c));
            if c.is_full_simplex() {
                report.messages.push("full simplex: the dual is the void complex".into());
            } else if c.is_void() {
                report.messages.push("void complex: the dual is the full simplex".into());
            }
            c.alexander_dual().to_string()
        }
        Input::Ideal(i) => {
            let sq = i.to_squarefree().map_err(|_| anyhow!("{input}: requires a squarefree ideal"))?;
            report.input = Some(ideal_descriptor(input, &i));
            alexander_dual_ideal(&sq).to_string()
        }
    };
    report.output = Some(out.clone());
    Ok(Run { report, text: out })
}

fn ideal_descriptor(source: &str, i: &serre_core::MonomialIdeal) -> InputDescriptor {
    InputDescriptor {
        source: source.to_string(),
        kind: "ideal".into(),
        n: i.n(),
        vertex_names: i.names().to_vec(),
        canonical: i.to_string(),
    }
}

fn cmd_polarize(input: &str, field: PrimeField) -> Result<Run> {
    let Input::Ideal(i) = read_input(input)? else {
        bail!("{input}: polarize expects an ideal file (with a 'vars:' header)");
    };
    let mut report = Report::new("polarize", field);
    report.input = Some(ideal_descriptor(input, &i));
    let pol = polarize(&i)?;
    let (_, dropped) = pol.restrict_to_used();
    if !dropped.is_empty() {
        report.messages.push(format!("unused polarized variables, dropped from Serre checks: {}", dropped.join(" ")));
    }
    let out = pol.ideal.to_string();
    report.output = Some(out.clone());
    Ok(Run { report, text: out })
}

fn cmd_skeleton(input: &str, dim: isize, field: PrimeField) -> Result<Run> {
    let c = read_complex(input)?;
    let mut report = Report::new("skeleton", field);
    report.input = Some(InputDescriptor::complex(input, &c));
    let out = c.skeleton(dim).to_string();
    report.output = Some(out.clone());
    Ok(Run { report, text: out })
}

fn suite_text(s: &SuiteReport) -> String {
    let mut text = String::new();
    for section in &s.sections {
        for r in &section.reports {
            let verdict = if r.passed() {
                "PASS"
            } else if r.is_vacuous() {
                "VACUOUS"
            } else {
                "FAIL"
            };
            writeln!(
                text,
                "[{}] {}: {verdict} ({} checked, {} skipped, {} failures, {} informational, {} ms)",
                section.name,
                r.property,
                r.checked,
                r.skipped,
                r.failures.len(),
                r.informational.len(),
                r.runtime_ms
            )
            .unwrap();
            for f in &r.failures {
                writeln!(text, "  failure: {}\n{}", f.detail, f.instance).unwrap();
            }
        }
    }
    text
}

fn cmd_verify(path: &Path) -> Result<Run> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let config = SuiteConfig::parse(&text).with_context(|| path.display().to_string())?;
    let suite = run_suite(&config)?;
    let mut report = Report::new("verify", config.fields.main);
    report.properties = suite.reports().cloned().collect();
    for (section, r) in suite.vacuous() {
        report.messages.push(format!("vacuous suite: [{section}] {} checked nothing", r.property));
    }
    report.exit_code = if suite.passed() { EXIT_OK } else { EXIT_NOT_SATISFIED };
    let mut out = suite_text(&suite);
    for m in &report.messages {
        writeln!(out, "{m}").unwrap();
    }
    writeln!(out, "result: {}", if suite.passed() { "pass" } else { "fail" }).unwrap();
    if let Some(target) = &config.output {
        let target = path.parent().unwrap_or(Path::new(".")).join(target);
        write_atomic(&target, &serde_json::to_string_pretty(&report)?)?;
    }
    Ok(Run { report, text: out })
}

fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).with_context(|| format!("cannot write into {}", dir.display()))?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path).with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}

fn execute(cli: &Cli) -> Result<Run> {
    if let Command::Verify { config } = &cli.command {
        return cmd_verify(config);
    }
    let field = PrimeField::new(cli.field)?;
    match &cli.command {
        Command::Check(a) => cmd_check(a, field),
        Command::Profile(a) => cmd_profile(a, field),
        Command::Betti { input, dual } => cmd_betti(input, *dual, field),
        Command::Depth { input } => cmd_depth(input, field),
        Command::Dual { input } => cmd_dual(input, field),
        Command::Polarize { input } => cmd_polarize(input, field),
        Command::Skeleton { input, dim } => cmd_skeleton(input, *dim, field),
        Command::Verify { .. } => unreachable!("handled above"),
    }
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("SERRE_THREADS") {
        let n: usize = v.trim().parse().map_err(|_| anyhow!("SERRE_THREADS must be a positive integer, got '{v}'"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|_| {
        let run = execute(&cli)?;
        let body = match cli.format {
            Format::Text => run.text,
            Format::Json => serde_json::to_string_pretty(&run.report)? + "\n",
        };
        match &cli.output {
            Some(path) => write_atomic(path, &body)?,
            None => std::io::stdout().write_all(body.as_bytes())?,
        }
        Ok(run.report.exit_code)
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_NOT_APPLICABLE as u8)
        }
    }
}
