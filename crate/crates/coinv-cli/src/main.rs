//! Command line driver: identity verification suites, straightening of
//! single monomials, and table export for bases, characters, and
//! multiplicities.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails,
//! 2 on usage, parse, or capacity errors.  Payloads on stdout (or `--out`)
//! are byte-identical across identical invocations; observed wall times go
//! to stderr only.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Mutex;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use coinv::groups::{enumerate_bn, enumerate_sn};
use coinv::polyring::{descent_monomial, signed_descent_monomial, MPoly, Monomial};
use coinv::reptheory::{
    bn_character, class_table_a, class_table_b, descent_character_table_a,
    descent_character_table_b, inner_product, sn_character,
};
use coinv::series::{
    verify_basis_a, verify_basis_b, verify_cor_abr, verify_cor_gessel, verify_lemma_tau,
    verify_lemma_tau_b, verify_phi_a, verify_phi_b, verify_thm_4_1, verify_thm_5_2,
    verify_thm_7_1, verify_thm_7_2, verify_thm_7_3, verify_thm_7_4, verify_trace_claims,
    VerifyReport,
};
use coinv::shapes::{
    bipartitions_of, enumerate_syt, enumerate_syt_bi, lambda_s1s2, partitions_of,
    subsets_of_interval, Bipartition, Partition,
};
use coinv::straighten::{DescentFamily, Straightener, TypeA, TypeB};
use coinv::{Int, Rat};

#[derive(Parser)]
#[command(
    name = "coinv",
    version,
    about = "Descent bases of coinvariant algebras: verification, straightening, tables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites by name (or `all`); each returns a report.
    Verify {
        /// Names: thm7.1 thm7.2 thm7.3 thm7.4 cor-gessel cor-abr lemma-tau
        /// lemma-tau-b traces thm4.1 thm5.2 basis-a basis-b phi-a phi-b,
        /// or `all`.
        names: Vec<String>,
        /// Size parameter override (rank, or shape size cap for phi-*).
        #[arg(long)]
        n: Option<usize>,
        /// Cutoff override (truncation degree, r bound for cor-gessel,
        /// entry bound for phi-*).
        #[arg(long)]
        cutoff: Option<usize>,
        /// Restrict lemma-tau to one shape, e.g. "2,1".
        #[arg(long)]
        shape: Option<String>,
        /// Restrict lemma-tau-b to one shape pair, e.g. "2|1".
        #[arg(long)]
        shape2: Option<String>,
        /// Worker threads for independent verifications.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the JSON payload to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expand one monomial over the descent basis, with re-expansion check.
    Straighten {
        /// Exponent vector, e.g. "2,1,1".
        #[arg(long)]
        monomial: String,
        /// Basis family.
        #[arg(long = "type", value_enum, default_value_t = Family::A)]
        family: Family,
        /// Write the JSON payload to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export a table deterministically as JSON or CSV.
    Table {
        /// Which table to export.
        what: TableKind,
        /// Rank: number of variables, equal to the symbol count of the group.
        #[arg(long)]
        n: usize,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Basis family for the multiplicities table.
        #[arg(long = "type", value_enum, default_value_t = Family::A)]
        family: Family,
        /// Restrict multiplicities to one descent set, e.g. "1,3" or "".
        #[arg(long)]
        set: Option<String>,
        /// Restrict type B multiplicities to one sign set.
        #[arg(long)]
        set2: Option<String>,
        /// Restrict multiplicities to one shape.
        #[arg(long)]
        shape: Option<String>,
        /// Write the payload to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    A,
    B,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    DescentBasis,
    SignedDescentBasis,
    CharactersA,
    CharactersB,
    Multiplicities,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Verify {
            names,
            n,
            cutoff,
            shape,
            shape2,
            jobs,
            out,
        } => {
            let overrides = Overrides {
                n,
                cutoff,
                shape: parse_optional(shape.as_deref())?,
                shape2: parse_optional(shape2.as_deref())?,
            };
            run_verify(&names, &overrides, jobs, out.as_deref())
        }
        Command::Straighten {
            monomial,
            family,
            out,
        } => {
            run_straighten(&monomial, family, out.as_deref())?;
            Ok(true)
        }
        Command::Table {
            what,
            n,
            format,
            family,
            set,
            set2,
            shape,
            out,
        } => {
            run_table(what, n, format, family, set, set2, shape, out.as_deref())?;
            Ok(true)
        }
    }
}

fn parse_optional<T: std::str::FromStr>(raw: Option<&str>) -> Result<Option<T>, String>
where
    T::Err: std::fmt::Display,
{
    match raw {
        None => Ok(None),
        Some(s) => s
            .parse()
            .map(Some)
            .map_err(|e: T::Err| format!("cannot parse {s:?}: {e}")),
    }
}

fn emit(out: Option<&std::path::Path>, payload: &str) -> Result<(), String> {
    match out {
        None => {
            use std::io::Write;
            // A consumer like `head` may close the pipe early; that is not
            // an error worth a panic or a nonzero exit.
            match writeln!(std::io::stdout().lock(), "{payload}") {
                Ok(()) => Ok(()),
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                Err(e) => Err(format!("cannot write to stdout: {e}")),
            }
        }
        Some(path) => {
            fs::write(path, format!("{payload}\n")).map_err(|e| format!("cannot write {path:?}: {e}"))
        }
    }
}

struct Overrides {
    n: Option<usize>,
    cutoff: Option<usize>,
    shape: Option<Partition>,
    shape2: Option<Bipartition>,
}

/// One verification invocation with fully resolved parameters.
enum Job {
    Thm71 { n: usize },
    Thm72 { n: usize, cutoff: usize },
    Thm73 { n: usize, cutoff: usize },
    Thm74 { n: usize, cutoff: usize },
    Gessel { n: usize, r_max: usize },
    Abr { n: usize },
    Tau { shape: Partition, cutoff: usize },
    TauB { shape: Bipartition, cutoff: usize },
    Traces { n: usize, cutoff: usize },
    Thm41 { n: usize },
    Thm52 { n: usize },
    BasisA { n: usize },
    BasisB { n: usize },
    PhiA { max_size: usize, max_entry: usize },
    PhiB { max_size: usize, max_entry: usize },
}

const VERIFY_NAMES: [&str; 15] = [
    "thm7.1",
    "thm7.2",
    "thm7.3",
    "thm7.4",
    "cor-gessel",
    "cor-abr",
    "lemma-tau",
    "lemma-tau-b",
    "traces",
    "thm4.1",
    "thm5.2",
    "basis-a",
    "basis-b",
    "phi-a",
    "phi-b",
];

fn expand_jobs(name: &str, over: &Overrides) -> Result<Vec<Job>, String> {
    let jobs = match name {
        "thm7.1" => vec![Job::Thm71 {
            n: over.n.unwrap_or(5),
        }],
        "thm7.2" => vec![Job::Thm72 {
            n: over.n.unwrap_or(4),
            cutoff: over.cutoff.unwrap_or(8),
        }],
        "thm7.3" => vec![Job::Thm73 {
            n: over.n.unwrap_or(4),
            cutoff: over.cutoff.unwrap_or(8),
        }],
        "thm7.4" => vec![Job::Thm74 {
            n: over.n.unwrap_or(4),
            cutoff: over.cutoff.unwrap_or(8),
        }],
        "cor-gessel" => vec![Job::Gessel {
            n: over.n.unwrap_or(5),
            r_max: over.cutoff.unwrap_or(5),
        }],
        "cor-abr" => vec![Job::Abr {
            n: over.n.unwrap_or(5),
        }],
        "lemma-tau" => {
            let cutoff = over.cutoff.unwrap_or(6);
            match &over.shape {
                Some(shape) => vec![Job::Tau {
                    shape: shape.clone(),
                    cutoff,
                }],
                None => (1..=over.n.unwrap_or(5))
                    .flat_map(partitions_of)
                    .map(|shape| Job::Tau { shape, cutoff })
                    .collect(),
            }
        }
        "lemma-tau-b" => {
            let cutoff = over.cutoff.unwrap_or(6);
            match &over.shape2 {
                Some(shape) => vec![Job::TauB {
                    shape: shape.clone(),
                    cutoff,
                }],
                None => (1..=over.n.unwrap_or(4))
                    .flat_map(bipartitions_of)
                    .map(|shape| Job::TauB { shape, cutoff })
                    .collect(),
            }
        }
        "traces" => vec![Job::Traces {
            n: over.n.unwrap_or(3),
            cutoff: over.cutoff.unwrap_or(6),
        }],
        "thm4.1" => vec![Job::Thm41 {
            n: over.n.unwrap_or(4),
        }],
        "thm5.2" => vec![Job::Thm52 {
            n: over.n.unwrap_or(3),
        }],
        "basis-a" => vec![Job::BasisA {
            n: over.n.unwrap_or(7),
        }],
        "basis-b" => vec![Job::BasisB {
            n: over.n.unwrap_or(5),
        }],
        "phi-a" => vec![Job::PhiA {
            max_size: over.n.unwrap_or(5),
            max_entry: over.cutoff.unwrap_or(7),
        }],
        "phi-b" => vec![Job::PhiB {
            max_size: over.n.unwrap_or(5),
            max_entry: over.cutoff.unwrap_or(7),
        }],
        other => return Err(format!("unknown verification name {other:?}")),
    };
    Ok(jobs)
}

fn run_job(job: &Job) -> coinv::Result<VerifyReport> {
    match job {
        Job::Thm71 { n } => verify_thm_7_1(*n),
        Job::Thm72 { n, cutoff } => verify_thm_7_2(*n, *cutoff),
        Job::Thm73 { n, cutoff } => verify_thm_7_3(*n, *cutoff),
        Job::Thm74 { n, cutoff } => verify_thm_7_4(*n, *cutoff),
        Job::Gessel { n, r_max } => verify_cor_gessel(*n, *r_max),
        Job::Abr { n } => verify_cor_abr(*n),
        Job::Tau { shape, cutoff } => verify_lemma_tau(shape, *cutoff),
        Job::TauB { shape, cutoff } => verify_lemma_tau_b(shape, *cutoff),
        Job::Traces { n, cutoff } => verify_trace_claims(*n, *cutoff),
        Job::Thm41 { n } => verify_thm_4_1(*n),
        Job::Thm52 { n } => verify_thm_5_2(*n),
        Job::BasisA { n } => verify_basis_a(*n),
        Job::BasisB { n } => verify_basis_b(*n),
        Job::PhiA {
            max_size,
            max_entry,
        } => verify_phi_a(*max_size, *max_entry),
        Job::PhiB {
            max_size,
            max_entry,
        } => verify_phi_b(*max_size, *max_entry),
    }
}

fn run_verify(
    names: &[String],
    over: &Overrides,
    jobs: usize,
    out: Option<&std::path::Path>,
) -> Result<bool, String> {
    if names.is_empty() {
        return Err("no verification names given (try `all`)".into());
    }
    let expanded: Vec<&str> = if names.len() == 1 && names[0] == "all" {
        VERIFY_NAMES.to_vec()
    } else {
        names.iter().map(String::as_str).collect()
    };
    let mut queue: Vec<Job> = Vec::new();
    for name in expanded {
        queue.extend(expand_jobs(name, over)?);
    }
    let workers = jobs.max(1).min(queue.len().max(1));
    let slots: Mutex<Vec<Option<coinv::Result<VerifyReport>>>> =
        Mutex::new((0..queue.len()).map(|_| None).collect());
    let next: Mutex<usize> = Mutex::new(0);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let index = {
                    let mut guard = next.lock().expect("queue lock");
                    if *guard >= queue.len() {
                        break;
                    }
                    let i = *guard;
                    *guard += 1;
                    i
                };
                let result = run_job(&queue[index]);
                slots.lock().expect("slot lock")[index] = Some(result);
            });
        }
    });
    let mut reports = Vec::with_capacity(queue.len());
    for slot in slots.into_inner().expect("slot lock") {
        match slot.expect("every job ran") {
            Ok(report) => reports.push(report),
            Err(e) => return Err(e.to_string()),
        }
    }
    let all_passed = reports.iter().all(VerifyReport::passed);
    for report in &reports {
        let params: Vec<String> = report
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        eprintln!(
            "{} {} [{}] ({} elements, {} ms)",
            if report.passed() { "PASS" } else { "FAIL" },
            report.name,
            params.join(", "),
            report.elements,
            report.wall_time_ms,
        );
    }
    // Zero the wall times in the payload so identical invocations emit
    // identical bytes; observed timings are on stderr.
    let stable: Vec<VerifyReport> = reports
        .into_iter()
        .map(|mut r| {
            r.wall_time_ms = 0;
            r
        })
        .collect();
    let payload =
        serde_json::to_string_pretty(&stable).map_err(|e| format!("serialization: {e}"))?;
    emit(out, &payload)?;
    Ok(all_passed)
}

#[derive(Serialize)]
struct StraightenTerm {
    coeff: String,
    mu: String,
    perm: String,
}

#[derive(Serialize)]
struct StraightenPayload {
    target: String,
    family: String,
    terms: Vec<StraightenTerm>,
    verified: bool,
}

fn run_straighten(
    monomial: &str,
    family: Family,
    out: Option<&std::path::Path>,
) -> Result<(), String> {
    let m: Monomial = monomial
        .parse()
        .map_err(|e: coinv::Error| format!("cannot parse monomial {monomial:?}: {e}"))?;
    let n = m.n();
    let payload = match family {
        Family::A => straighten_payload::<TypeA>(&m, n, "a"),
        Family::B => straighten_payload::<TypeB>(&m, n, "b"),
    }
    .map_err(|e| e.to_string())?;
    let text =
        serde_json::to_string_pretty(&payload).map_err(|e| format!("serialization: {e}"))?;
    emit(out, &text)
}

fn straighten_payload<F: DescentFamily>(
    m: &Monomial,
    n: usize,
    family: &str,
) -> coinv::Result<StraightenPayload> {
    let mut straightener = Straightener::<F>::new(n)?;
    let expansion = straightener.straighten(m)?;
    let back = expansion.expand::<F>(n);
    let verified = back == MPoly::monomial(m.clone(), Int::from(1));
    Ok(StraightenPayload {
        target: m.to_string(),
        family: family.to_string(),
        terms: expansion
            .terms
            .iter()
            .map(|t| StraightenTerm {
                coeff: t.coeff.to_string(),
                mu: t.mu.to_string(),
                perm: t.elem.to_string(),
            })
            .collect(),
        verified,
    })
}

#[derive(Serialize)]
struct BasisRow {
    element: String,
    monomial: String,
}

#[derive(Serialize)]
struct CharacterRow {
    shape: String,
    values: Vec<String>,
}

#[derive(Serialize)]
struct CharacterTable {
    n: usize,
    classes: Vec<String>,
    class_sizes: Vec<String>,
    rows: Vec<CharacterRow>,
}

#[derive(Serialize)]
struct MultiplicityRow {
    set: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    set2: Option<String>,
    shape: String,
    tableau_count: usize,
    inner_product: String,
    agrees: bool,
}

fn csv_quote(field: &str) -> String {
    format!("\"{}\"", field.replace('"', "\"\""))
}

fn csv_line(fields: &[String]) -> String {
    fields
        .iter()
        .map(|f| csv_quote(f))
        .collect::<Vec<_>>()
        .join(",")
}

#[allow(clippy::too_many_arguments)]
fn run_table(
    what: TableKind,
    n: usize,
    format: Format,
    family: Family,
    set: Option<String>,
    set2: Option<String>,
    shape: Option<String>,
    out: Option<&std::path::Path>,
) -> Result<(), String> {
    let text = match what {
        TableKind::DescentBasis => {
            let rows: Vec<BasisRow> = enumerate_sn(n)
                .map_err(|e| e.to_string())?
                .iter()
                .map(|w| BasisRow {
                    element: w.to_string(),
                    monomial: descent_monomial(w).to_string(),
                })
                .collect();
            render_rows(&rows, format, &["element", "monomial"], |r| {
                vec![r.element.clone(), r.monomial.clone()]
            })?
        }
        TableKind::SignedDescentBasis => {
            let rows: Vec<BasisRow> = enumerate_bn(n)
                .map_err(|e| e.to_string())?
                .iter()
                .map(|w| BasisRow {
                    element: w.to_string(),
                    monomial: signed_descent_monomial(w).to_string(),
                })
                .collect();
            render_rows(&rows, format, &["element", "monomial"], |r| {
                vec![r.element.clone(), r.monomial.clone()]
            })?
        }
        TableKind::CharactersA => {
            let table = class_table_a(n).map_err(|e| e.to_string())?;
            let classes: Vec<String> = table.entries().iter().map(|(l, _)| l.to_string()).collect();
            let class_sizes: Vec<String> =
                table.entries().iter().map(|(_, s)| s.to_string()).collect();
            let mut shapes = partitions_of(n);
            shapes.sort();
            let mut rows = Vec::new();
            for lambda in shapes {
                let chi = sn_character(&lambda).map_err(|e| e.to_string())?;
                let values = table
                    .entries()
                    .iter()
                    .map(|(label, _)| chi.value(label).expect("tabulated on all classes").to_string())
                    .collect();
                rows.push(CharacterRow {
                    shape: lambda.to_string(),
                    values,
                });
            }
            render_characters(n, classes, class_sizes, rows, format)?
        }
        TableKind::CharactersB => {
            let table = class_table_b(n).map_err(|e| e.to_string())?;
            let classes: Vec<String> = table.entries().iter().map(|(l, _)| l.to_string()).collect();
            let class_sizes: Vec<String> =
                table.entries().iter().map(|(_, s)| s.to_string()).collect();
            let mut shapes = bipartitions_of(n);
            shapes.sort();
            let mut rows = Vec::new();
            for bp in shapes {
                let chi = bn_character(&bp).map_err(|e| e.to_string())?;
                let values = table
                    .entries()
                    .iter()
                    .map(|(label, _)| chi.value(label).expect("tabulated on all classes").to_string())
                    .collect();
                rows.push(CharacterRow {
                    shape: bp.to_string(),
                    values,
                });
            }
            render_characters(n, classes, class_sizes, rows, format)?
        }
        TableKind::Multiplicities => {
            let set_filter = parse_set_filter(set.as_deref())?;
            let set2_filter = parse_set_filter(set2.as_deref())?;
            let rows = match family {
                Family::A => multiplicity_rows_a(n, &set_filter, shape.as_deref())?,
                Family::B => multiplicity_rows_b(n, &set_filter, &set2_filter, shape.as_deref())?,
            };
            let header: &[&str] = match family {
                Family::A => &["set", "shape", "tableau_count", "inner_product", "agrees"],
                Family::B => &[
                    "set",
                    "set2",
                    "shape",
                    "tableau_count",
                    "inner_product",
                    "agrees",
                ],
            };
            render_rows(&rows, format, header, |r| {
                let mut fields = vec![r.set.clone()];
                if let Some(s2) = &r.set2 {
                    fields.push(s2.clone());
                }
                fields.extend([
                    r.shape.clone(),
                    r.tableau_count.to_string(),
                    r.inner_product.clone(),
                    r.agrees.to_string(),
                ]);
                fields
            })?
        }
    };
    emit(out, &text)
}

fn parse_set_filter(raw: Option<&str>) -> Result<Option<BTreeSet<usize>>, String> {
    match raw {
        None => Ok(None),
        Some("") => Ok(Some(BTreeSet::new())),
        Some(s) => {
            let mut parsed = BTreeSet::new();
            for piece in s.split(',') {
                let v: usize = piece
                    .trim()
                    .parse()
                    .map_err(|e| format!("cannot parse set element {piece:?}: {e}"))?;
                parsed.insert(v);
            }
            Ok(Some(parsed))
        }
    }
}

fn set_string(s: &[usize]) -> String {
    s.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn multiplicity_rows_a(
    n: usize,
    set_filter: &Option<BTreeSet<usize>>,
    shape_filter: Option<&str>,
) -> Result<Vec<MultiplicityRow>, String> {
    let reps = descent_character_table_a(n).map_err(|e| e.to_string())?;
    let table = class_table_a(n).map_err(|e| e.to_string())?;
    let shape_filter: Option<Partition> = parse_optional(shape_filter)?;
    let mut rows = Vec::new();
    for s in subsets_of_interval(n.saturating_sub(1)) {
        if let Some(filter) = set_filter {
            if *filter != s {
                continue;
            }
        }
        let s_vec: Vec<usize> = s.iter().copied().collect();
        let rep = reps.get(&s_vec).expect("every subset is a descent set");
        for mu in partitions_of(n) {
            if let Some(filter) = &shape_filter {
                if *filter != mu {
                    continue;
                }
            }
            let chi = sn_character(&mu).map_err(|e| e.to_string())?;
            let ip = inner_product(&table, rep, &chi).map_err(|e| e.to_string())?;
            let count = enumerate_syt(&mu)
                .map_err(|e| e.to_string())?
                .iter()
                .filter(|t| t.des_set() == s_vec)
                .count();
            let agrees = ip == Rat::from_integer(Int::from(count as u64));
            rows.push(MultiplicityRow {
                set: set_string(&s_vec),
                set2: None,
                shape: mu.to_string(),
                tableau_count: count,
                inner_product: ip.to_string(),
                agrees,
            });
        }
    }
    Ok(rows)
}

fn multiplicity_rows_b(
    n: usize,
    set_filter: &Option<BTreeSet<usize>>,
    set2_filter: &Option<BTreeSet<usize>>,
    shape_filter: Option<&str>,
) -> Result<Vec<MultiplicityRow>, String> {
    let reps = descent_character_table_b(n).map_err(|e| e.to_string())?;
    let table = class_table_b(n).map_err(|e| e.to_string())?;
    let shape_filter: Option<Bipartition> = parse_optional(shape_filter)?;
    let zero = coinv::reptheory::ClassFunction::from_values(
        n,
        table
            .entries()
            .iter()
            .map(|(l, _)| (l.clone(), Rat::from_integer(Int::from(0))))
            .collect(),
    );
    let mut rows = Vec::new();
    for s1 in subsets_of_interval(n.saturating_sub(1)) {
        if let Some(filter) = set_filter {
            if *filter != s1 {
                continue;
            }
        }
        for s2 in subsets_of_interval(n) {
            if let Some(filter) = set2_filter {
                if *filter != s2 {
                    continue;
                }
            }
            if !lambda_s1s2(&s1, &s2, n).map_err(|e| e.to_string())?.1 {
                continue;
            }
            let key = (
                s1.iter().copied().collect::<Vec<usize>>(),
                s2.iter().copied().collect::<Vec<usize>>(),
            );
            let rep = reps.get(&key).unwrap_or(&zero);
            for bp in bipartitions_of(n) {
                if let Some(filter) = &shape_filter {
                    if *filter != bp {
                        continue;
                    }
                }
                let chi = bn_character(&bp).map_err(|e| e.to_string())?;
                let ip = inner_product(&table, rep, &chi).map_err(|e| e.to_string())?;
                let count = enumerate_syt_bi(&bp.first, &bp.second)
                    .map_err(|e| e.to_string())?
                    .iter()
                    .filter(|t| t.des_set() == key.0 && t.neg_set() == key.1)
                    .count();
                let agrees = ip == Rat::from_integer(Int::from(count as u64));
                rows.push(MultiplicityRow {
                    set: set_string(&key.0),
                    set2: Some(set_string(&key.1)),
                    shape: bp.to_string(),
                    tableau_count: count,
                    inner_product: ip.to_string(),
                    agrees,
                });
            }
        }
    }
    Ok(rows)
}

fn render_rows<R: Serialize>(
    rows: &[R],
    format: Format,
    header: &[&str],
    fields: impl Fn(&R) -> Vec<String>,
) -> Result<String, String> {
    match format {
        Format::Json => {
            serde_json::to_string_pretty(rows).map_err(|e| format!("serialization: {e}"))
        }
        Format::Csv => {
            let mut lines = vec![csv_line(
                &header.iter().map(|h| h.to_string()).collect::<Vec<_>>(),
            )];
            for row in rows {
                lines.push(csv_line(&fields(row)));
            }
            Ok(lines.join("\n"))
        }
    }
}

fn render_characters(
    n: usize,
    classes: Vec<String>,
    class_sizes: Vec<String>,
    rows: Vec<CharacterRow>,
    format: Format,
) -> Result<String, String> {
    match format {
        Format::Json => {
            let table = CharacterTable {
                n,
                classes,
                class_sizes,
                rows,
            };
            serde_json::to_string_pretty(&table).map_err(|e| format!("serialization: {e}"))
        }
        Format::Csv => {
            let mut header = vec!["shape".to_string()];
            header.extend(classes);
            let mut lines = vec![csv_line(&header)];
            let mut size_line = vec!["class_size".to_string()];
            size_line.extend(class_sizes);
            lines.push(csv_line(&size_line));
            for row in rows {
                let mut fields = vec![row.shape];
                fields.extend(row.values);
                lines.push(csv_line(&fields));
            }
            Ok(lines.join("\n"))
        }
    }
}

// Keep the params map type in one place for the report printer above.
#[allow(dead_code)]
type Params = BTreeMap<String, String>;
