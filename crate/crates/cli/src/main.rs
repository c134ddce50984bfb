use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use derivant_core::integrability::{integrable_within, Options, Status};
use derivant_core::normalizer::{normalizer_in, Strategy};
use derivant_core::report::{group_record, Record};
use derivant_core::spec::{parse_ambient, parse_group};
use derivant_core::structure::{derived_series, derived_subgroup, socle};
use derivant_core::{verify, Budgets, Error, PermGroup};

#[derive(Parser, Debug)]
#[command(name = "derivant", version, about = "Relative integrability of permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Largest group whose elements may be listed.
    #[arg(long, global = true, value_name = "N")]
    budget_elements: Option<usize>,

    /// Largest index for coset quotients and candidate enumeration.
    #[arg(long, global = true, value_name = "N")]
    budget_index: Option<usize>,

    /// Emit bracketed records instead of key=value lines.
    #[arg(long, global = true)]
    json_like: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structural queries on one or more group spec files.
    Query(QueryArgs),
    /// Decide whether G is the derived subgroup of some H <= U.
    Integrable(IntegrableArgs),
    /// Run a verification suite, or `all`.
    Verify {
        suite: String,
    },
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("query").required(true).multiple(true).args(["order", "derived", "series", "socle", "homogeneity", "normalizer_in", "elements"])))]
struct QueryArgs {
    #[arg(required = true)]
    files: Vec<PathBuf>,
    #[arg(long)]
    order: bool,
    #[arg(long)]
    derived: bool,
    #[arg(long)]
    series: bool,
    #[arg(long)]
    socle: bool,
    /// Test k-homogeneity and k-transitivity.
    #[arg(long, value_name = "K")]
    homogeneity: Option<usize>,
    /// Normalizer inside the ambient group given by --ambient or --within.
    #[arg(long)]
    normalizer_in: bool,
    #[arg(long)]
    elements: bool,
    #[arg(long, value_name = "sym:N", conflicts_with = "within")]
    ambient: Option<String>,
    #[arg(long, value_name = "FILE")]
    within: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct IntegrableArgs {
    g: PathBuf,
    #[arg(required_unless_present = "ambient", conflicts_with = "ambient")]
    u: Option<PathBuf>,
    #[arg(long, value_name = "sym:N")]
    ambient: Option<String>,
    /// Direct search only.
    #[arg(long)]
    no_reductions: bool,
    /// Print every witness H.
    #[arg(long)]
    witnesses: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut budgets = Budgets::from_env();
    if let Some(n) = cli.budget_elements {
        budgets.elements = n;
    }
    if let Some(n) = cli.budget_index {
        budgets.index = n;
        budgets.candidates = n;
    }
    let mut out = Vec::new();
    let code = match run(&cli, &budgets, &mut out) {
        Ok(code) => code,
        Err(e) => {
            out.push(Record::new("error").status(error_class(&e)).with("message", &e));
            eprintln!("derivant: {e}");
            exit_code(&e)
        }
    };
    for r in &out {
        println!("{}", r.render(cli.json_like));
    }
    ExitCode::from(code)
}

fn error_class(e: &Error) -> &'static str {
    match exit_code(e) {
        3 => "budget",
        4 => "not-subgroup",
        _ => "invalid",
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotSubgroup(_) => 4,
        e if e.is_budget() => 3,
        _ => 2,
    }
}

fn load(path: &Path) -> Result<PermGroup, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_group(&text)
}

fn ambient(sym: &Option<String>, file: &Option<PathBuf>) -> Result<PermGroup, Error> {
    match (sym, file) {
        (Some(s), _) => parse_ambient(s),
        (None, Some(f)) => load(f),
        (None, None) => Err(Error::InvalidParameter("an ambient group is required: --ambient sym:<n> or a file".into())),
    }
}

fn run(cli: &Cli, b: &Budgets, out: &mut Vec<Record>) -> Result<u8, Error> {
    match &cli.command {
        Command::Query(q) => query(q, b, out).map(|_| 0),
        Command::Integrable(a) => integrable(a, b, out),
        Command::Verify { suite } => {
            let reports = verify::run(suite, b)?;
            let failed = reports.iter().filter(|r| !r.passed()).count();
            for r in &reports {
                out.extend(r.records());
            }
            out.push(
                Record::new("verify")
                    .status(if failed == 0 { "pass" } else { "fail" })
                    .with("suite", suite)
                    .with("suites", reports.len())
                    .with("failed_suites", failed),
            );
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}

fn query(q: &QueryArgs, b: &Budgets, out: &mut Vec<Record>) -> Result<(), Error> {
    let amb = if q.normalizer_in { Some(ambient(&q.ambient, &q.within)?) } else { None };
    for path in &q.files {
        let g = load(path)?;
        let file = path.display().to_string();
        if q.order {
            out.push(Record::new("order").order(g.order_big()).with("file", &file));
        }
        if q.derived {
            out.push(group_record("derived", &derived_subgroup(&g)).with("file", &file));
        }
        if q.series {
            let s = derived_series(&g);
            let orders: Vec<String> = s.orders().iter().map(ToString::to_string).collect();
            out.push(
                Record::new("series")
                    .order(g.order_big())
                    .with("file", &file)
                    .with("orders", orders.join(","))
                    .with("length", s.length())
                    .with("solvable", s.is_solvable()),
            );
        }
        if q.socle {
            out.push(group_record("socle", &socle(&g, b.elements)?).with("file", &file));
        }
        if let Some(k) = q.homogeneity {
            out.push(
                Record::new("homogeneity")
                    .order(g.order_big())
                    .with("file", &file)
                    .with("k", k)
                    .with("homogeneous", g.is_k_homogeneous(k)?)
                    .with("transitive", g.is_k_transitive(k)?),
            );
        }
        if let Some(u) = &amb {
            let (n, prov) = normalizer_in(u, &g, Strategy::Auto, b)?;
            let mut r = group_record("normalizer", &n).with("file", &file);
            r.provenance = Some(prov.to_string());
            out.push(r);
        }
        if q.elements {
            let mut elems = g.elements(b.elements)?;
            elems.sort();
            out.push(Record::new("elements").order(elems.len()).with("file", &file));
            for (i, x) in elems.iter().enumerate() {
                out.push(Record::new("element").with("index", i + 1).with("cycles", x));
            }
        }
    }
    Ok(())
}

fn integrable(a: &IntegrableArgs, b: &Budgets, out: &mut Vec<Record>) -> Result<u8, Error> {
    let g = load(&a.g)?;
    let u = ambient(&a.ambient, &a.u)?;
    let base = if a.no_reductions { Options::no_reductions() } else { Options::default() };
    let opts = Options { budgets: *b, ..base };
    let v = integrable_within(&g, &u, &opts)?;
    out.push(Record::new("integrable").verdict(&v).order(g.order_big()).with("ambient_order", u.order_big()));
    if a.witnesses {
        for h in &v.witnesses {
            out.push(group_record("witness", h));
        }
    }
    Ok(if v.status == Status::Inconclusive { 3 } else { 0 })
}
