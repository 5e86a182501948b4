//! `conorbit`: constacyclic code constructions, weight spectra, orbit
//! oracles and closed-form bounds from the command line.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use conorbit::catalog::{self, CatalogRow, Grid};
use conorbit::code::DEFAULT_ENUM_CAP;
use conorbit::gf::DEFAULT_FIELD_CAP;
use conorbit::group::{self, CodewordSet, GroupKind, DEFAULT_ORBIT_CAP};
use conorbit::report::{self, Caps};
use conorbit::{build_code, Code, ConstaRing, LambdaSpec, PrimePower};

use render::{Doc, Format};

#[derive(Parser, Debug)]
#[command(name = "conorbit", version, about = "Constacyclic codes: weights, orbits and orbit-count bounds")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// q-cyclotomic cosets modulo rn
    Cosets(Common),
    /// Generator polynomial and generator matrix
    Code(Common),
    /// Weight distribution by exhaustive enumeration
    Weights(Common),
    /// Brute-force orbit counts
    Orbits(Common),
    /// Closed-form orbit counts and bounds, without enumeration
    Bounds(Common),
    /// Enumerate, run the orbit oracles and compare with every formula
    Verify(Common),
    /// Sweep a grid for codes meeting the two- and three-weight conditions
    Search(SearchArgs),
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Fmt::Json)]
    format: Fmt,
    /// Write to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Field-size cap for the splitting field
    #[arg(long = "cap-field", env = "CONORBIT_CAP_FIELD", default_value_t = DEFAULT_FIELD_CAP)]
    cap_field: u64,
    #[arg(long = "cap-enum", default_value_t = DEFAULT_ENUM_CAP)]
    cap_enum: u64,
    #[arg(long = "cap-orbit", default_value_t = DEFAULT_ORBIT_CAP)]
    cap_orbit: u64,
}

#[derive(Args, Debug)]
struct Common {
    /// Field size, as `9` or `3^2`
    #[arg(long)]
    q: String,
    #[arg(long)]
    n: u64,
    /// `1`, `-1`, another integer, `xi` or `xi^J`
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    lambda: String,
    /// Coset indices (`0,9`) or `all`
    #[arg(long)]
    cosets: Option<String>,
    /// Orbit groups, comma separated; defaults to every group acting on the code
    #[arg(long)]
    group: Option<String>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Field sizes, comma separated
    #[arg(long, value_delimiter = ',')]
    q: Vec<String>,
    #[arg(long = "n-min", default_value_t = 1)]
    n_min: u64,
    #[arg(long = "n-max")]
    n_max: u64,
    /// Orders of lambda, comma separated; defaults to every divisor of q-1
    #[arg(long, value_delimiter = ',')]
    orders: Vec<u64>,
    /// CSV catalog to merge results into; a JSON sidecar is written next to it
    #[arg(long)]
    catalog: Option<PathBuf>,
    #[command(flatten)]
    output: Output,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Fmt {
    Json,
    Csv,
    Text,
}

impl From<Fmt> for Format {
    fn from(f: Fmt) -> Format {
        match f {
            Fmt::Json => Format::Json,
            Fmt::Csv => Format::Csv,
            Fmt::Text => Format::Text,
        }
    }
}

/// Failure classes with their exit codes.
#[derive(Debug)]
enum Failure {
    Param(anyhow::Error),
    Cap(anyhow::Error),
    Verify(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Param(_) => 2,
            Failure::Cap(_) => 3,
            Failure::Verify(_) => 4,
        }
    }
}

impl From<conorbit::Error> for Failure {
    fn from(e: conorbit::Error) -> Self {
        if e.is_cap() {
            Failure::Cap(e.into())
        } else {
            Failure::Param(e.into())
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast_ref::<conorbit::Error>() {
            Some(c) if c.is_cap() => Failure::Cap(e),
            _ => Failure::Param(e),
        }
    }
}

type Res<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Failure::Param(e) | Failure::Cap(e) | Failure::Verify(e)) = &f;
            eprintln!("error: {e:#}");
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: Cli) -> Res<()> {
    match cli.cmd {
        Cmd::Cosets(c) => cmd_cosets(&c),
        Cmd::Code(c) => cmd_code(&c),
        Cmd::Weights(c) => cmd_weights(&c),
        Cmd::Orbits(c) => cmd_orbits(&c),
        Cmd::Bounds(c) => cmd_bounds(&c),
        Cmd::Verify(c) => cmd_verify(&c),
        Cmd::Search(s) => cmd_search(&s),
    }
}

fn ring_of(c: &Common) -> Res<Arc<ConstaRing>> {
    if c.output.cap_field == 0 || c.output.cap_enum == 0 || c.output.cap_orbit == 0 {
        return Err(Failure::Param(anyhow!("caps must be positive")));
    }
    let q: PrimePower = c.q.parse()?;
    let lambda: LambdaSpec = c.lambda.parse()?;
    Ok(Arc::new(ConstaRing::new(q, c.n, lambda, c.output.cap_field)?))
}

fn parse_cosets(spec: Option<&str>, ring: &ConstaRing) -> Res<Vec<usize>> {
    let spec = spec.ok_or_else(|| Failure::Param(anyhow!("--cosets is required")))?;
    if spec.trim() == "all" {
        return Ok((0..ring.table.len()).collect());
    }
    spec.split(|ch: char| ch == ',' || ch.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().with_context(|| format!("bad coset index '{s}'")).map_err(Failure::Param))
        .collect()
}

fn code_of(c: &Common) -> Res<Code> {
    let ring = ring_of(c)?;
    let sel = parse_cosets(c.cosets.as_deref(), &ring)?;
    Ok(build_code(&ring, &sel)?)
}

fn emit(doc: Doc, out: &Output) -> Res<()> {
    let text = doc.render(out.format.into()).map_err(Failure::Param)?;
    match &out.out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_cosets(c: &Common) -> Res<()> {
    let ring = ring_of(c)?;
    emit(render::cosets(&ring), &c.output)
}

fn cmd_code(c: &Common) -> Res<()> {
    let code = code_of(c)?;
    emit(render::code(&code), &c.output)
}

fn cmd_weights(c: &Common) -> Res<()> {
    let code = code_of(c)?;
    let w = code.enumerate_weights(c.output.cap_enum)?;
    emit(render::weights(&code, &w), &c.output)
}

fn groups_for(c: &Common, code: &Code) -> Res<Vec<GroupKind>> {
    match c.group.as_deref() {
        None | Some("all") => Ok(report::oracle_groups(code)),
        Some(s) => s
            .split(',')
            .filter(|g| !g.trim().is_empty())
            .map(|g| g.parse::<GroupKind>().map_err(Failure::from))
            .collect(),
    }
}

fn cmd_orbits(c: &Common) -> Res<()> {
    let code = code_of(c)?;
    let kinds = groups_for(c, &code)?;
    code.check_cap("enumeration", c.output.cap_enum)?;
    let set = CodewordSet::new(&code, c.output.cap_orbit)?;
    let reports = kinds
        .into_iter()
        .map(|k| group::orbit_report(&code, k, &set))
        .collect::<conorbit::Result<Vec<_>>>()?;
    emit(render::orbits(&code, &reports), &c.output)
}

fn cmd_bounds(c: &Common) -> Res<()> {
    let ring = ring_of(c)?;
    let sel = parse_cosets(c.cosets.as_deref(), &ring)?;
    let rep = report::compare_report(&ring, &ring.selection(&sel)?, None, &[])?;
    emit(render::bound_report(&rep), &c.output)
}

fn cmd_verify(c: &Common) -> Res<()> {
    let code = code_of(c)?;
    let caps = Caps { enumeration: c.output.cap_enum, orbit: c.output.cap_orbit };
    let rep = report::verify_code(&code, caps)?;
    emit(render::bound_report(&rep), &c.output)?;
    if rep.passed() {
        Ok(())
    } else {
        let failed = rep.verdicts.iter().filter(|v| v.required && !v.pass).count();
        Err(Failure::Verify(anyhow!("{failed} required checks failed")))
    }
}

fn read_catalog(path: &PathBuf) -> Res<Vec<CatalogRow>> {
    if !path.exists() {
        return Ok(Vec::new());
    }
    let mut rd = csv::Reader::from_path(path).with_context(|| format!("reading {}", path.display()))?;
    let rows = rd
        .deserialize::<render::CatalogCsv>()
        .map(|r| r.map(CatalogRow::from))
        .collect::<std::result::Result<Vec<_>, _>>()
        .with_context(|| format!("parsing {}", path.display()))?;
    Ok(rows)
}

fn cmd_search(s: &SearchArgs) -> Res<()> {
    let qs = s
        .q
        .iter()
        .filter(|q| !q.trim().is_empty())
        .map(|q| q.parse::<PrimePower>().map(|p| p.q as u64).map_err(Failure::from))
        .collect::<Res<Vec<_>>>()?;
    let grid = Grid {
        qs,
        n_min: s.n_min,
        n_max: s.n_max,
        orders: (!s.orders.is_empty()).then(|| s.orders.clone()),
    };
    let found = catalog::search(&grid, s.output.cap_field, s.output.cap_enum);
    for w in &found.warnings {
        eprintln!("warning: {w}");
    }
    let mut rows = found.rows;
    if let Some(path) = &s.catalog {
        rows = catalog::merge_rows(read_catalog(path)?, rows);
        let doc = render::catalog(&rows);
        let csv = doc.render(Format::Csv).map_err(Failure::Param)?;
        std::fs::write(path, csv).with_context(|| format!("writing {}", path.display()))?;
        let meta = render::sidecar(&grid, &s.output_caps(), rows.len(), &found.warnings);
        let side = sidecar_path(path);
        std::fs::write(&side, meta).with_context(|| format!("writing {}", side.display()))?;
    }
    emit(render::catalog(&rows), &s.output)
}

fn sidecar_path(path: &std::path::Path) -> PathBuf {
    let mut name = path.as_os_str().to_owned();
    name.push(".json");
    PathBuf::from(name)
}

impl SearchArgs {
    fn output_caps(&self) -> (u64, u64) {
        (self.output.cap_field, self.output.cap_enum)
    }
}
