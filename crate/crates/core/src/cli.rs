//! Command-line front end.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on
//! unreadable or invalid input.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bicomplex::DoubleComplex;
use crate::cochain::CochainComplex;
use crate::error::{Error, Result};
use crate::geomodels::{
    blowup_predict, kunneth_predict, leray_hirsch_predict, lie_model, product_model,
    projective_bundle_predict, torus_model, LieModelSpec, ModelDoubleComplex,
};
use crate::report::Report;
use crate::spectral;
use crate::truncation::{frolicher_inequality, hodge_filtration_dims, hypercohomology_all, Window};
use crate::verify::{run_suite, Suite};

/// Default cap on the dimension of any complex the CLI will build.
pub const DEFAULT_MAX_DIM: usize = 4096;
pub const MAX_DIM_VAR: &str = "SPECTRA_DR_MAX_DIM";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "spectra-dr",
    version,
    about = "Exact cohomology of double complexes and truncated de Rham models"
)]
pub struct RunConfig {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// A complex, double complex, model dump or model specification (JSON).
    #[arg(long, alias = "model")]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct WindowArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub s: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub t: i64,
}

impl WindowArgs {
    fn window(&self) -> Window {
        Window::new(self.s, self.t)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cohomology of a complex, or of the total complex of a double complex.
    Cohomology(Input),
    /// Pages of the column-filtration spectral sequence.
    Spectral {
        #[command(flatten)]
        input: Input,
        /// Last page to print; defaults to the limit page.
        #[arg(long)]
        pages: Option<usize>,
    },
    /// Hypercohomology of column truncations. Without `--s/--t`, a table over
    /// all windows inside the columns.
    Truncate {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true, requires = "t")]
        s: Option<i64>,
        #[arg(long, allow_hyphen_values = true, requires = "s")]
        t: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
    },
    /// Hodge numbers, the Frölicher inequality and the Hodge filtration.
    Hodge {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
    },
    /// Randomized and model verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
    /// Dimension predictors.
    #[command(subcommand)]
    Predict(Predict),
    /// Build and dump a model.
    #[command(subcommand)]
    Model(ModelCommand),
}

#[derive(Debug, Subcommand)]
pub enum Predict {
    Kunneth {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
        #[command(flatten)]
        window: WindowArgs,
    },
    LerayHirsch {
        #[arg(long)]
        x: PathBuf,
        /// Fiber class bidegrees as `u,v;u,v;...`.
        #[arg(long)]
        degrees: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[command(flatten)]
        window: WindowArgs,
    },
    Projective {
        #[arg(long)]
        x: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[command(flatten)]
        window: WindowArgs,
    },
    Blowup {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[command(flatten)]
        window: WindowArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum ModelCommand {
    Torus {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        twist_rank: usize,
    },
    Lie {
        #[arg(long)]
        spec: PathBuf,
    },
    Product {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
    },
}

/// Exit status and the text written to stdout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

/// A loaded input file.
#[derive(Debug, Clone)]
pub enum Loaded {
    Complex(CochainComplex),
    Double(DoubleComplex),
    Model(Box<ModelDoubleComplex>),
}

impl Loaded {
    fn double(&self) -> Result<&DoubleComplex> {
        match self {
            Loaded::Double(k) => Ok(k),
            Loaded::Model(m) => Ok(m.base()),
            Loaded::Complex(_) => Err(Error::Parse(
                "expected a double complex or a model, got a complex".into(),
            )),
        }
    }
}

fn parse_cap(value: Option<&str>) -> usize {
    value
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_DIM)
}

fn max_dim() -> usize {
    parse_cap(std::env::var(MAX_DIM_VAR).ok().as_deref())
}

fn check_size(what: &str, dim: usize) -> Result<()> {
    let cap = max_dim();
    if dim > cap {
        return Err(Error::PreconditionViolation(format!(
            "{what} has dimension {dim}, above the {MAX_DIM_VAR} cap of {cap}"
        )));
    }
    Ok(())
}

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        Error::Parse(format!(
            "{}: line {}, column {}: {e}",
            path.display(),
            e.line(),
            e.column()
        ))
    })
}

fn typed<T: serde::de::DeserializeOwned>(path: &Path, v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Builds a model from a specification, checking the size cap first.
fn model_from_spec(spec: &LieModelSpec) -> Result<ModelDoubleComplex> {
    let dim = spec
        .twist_rank
        .saturating_mul(1usize.checked_shl(2 * spec.n as u32).unwrap_or(usize::MAX));
    check_size("model", dim)?;
    lie_model(spec)
}

/// Recognizes the file by its keys: `lo` for a complex, `support` for a
/// double complex, `base` for a model dump and `n` for a model
/// specification.
pub fn load(path: &Path) -> Result<Loaded> {
    let v = read_json(path)?;
    let has = |k: &str| v.get(k).is_some();
    let loaded = if has("lo") {
        Loaded::Complex(typed(path, v)?)
    } else if has("support") {
        Loaded::Double(typed(path, v)?)
    } else if has("base") {
        Loaded::Double(typed(path, v["base"].clone())?)
    } else if has("n") {
        let spec: LieModelSpec = typed(path, v)?;
        Loaded::Model(Box::new(model_from_spec(&spec)?))
    } else {
        return Err(Error::Parse(format!(
            "{}: not a complex, double complex or model",
            path.display()
        )));
    };
    let dim = match &loaded {
        Loaded::Complex(k) => k.total_dim(),
        Loaded::Double(k) => k.total_dim(),
        Loaded::Model(m) => m.base().total_dim(),
    };
    check_size("input", dim)?;
    Ok(loaded)
}

/// Loads a model specification.
pub fn load_model(path: &Path) -> Result<ModelDoubleComplex> {
    let spec: LieModelSpec = typed(path, read_json(path)?)?;
    model_from_spec(&spec)
}

/// A header plus rows, rendered as CSV or aligned text.
struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    fn text(&self) -> String {
        let widths: Vec<usize> = (0..self.header.len())
            .map(|i| {
                self.rows
                    .iter()
                    .map(|r| r[i].chars().count())
                    .chain([self.header[i].chars().count()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: &[String]| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        let mut out = line(&self.header);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&line(r));
            out.push('\n');
        }
        out
    }
}

fn render<T: Serialize>(format: Format, json_value: &T, table: &Table) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(json_value).expect("serializable");
            s.push('\n');
            s
        }
        Format::Csv => table.csv(),
        Format::Text => table.text(),
    }
}

fn parse_degrees(s: &str) -> Result<Vec<(i64, i64)>> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|pair| {
            let parts: Vec<&str> = pair.split(',').map(str::trim).collect();
            match parts.as_slice() {
                [u, v] => Ok((
                    u.parse()
                        .map_err(|_| Error::Parse(format!("bad degree {u:?}")))?,
                    v.parse()
                        .map_err(|_| Error::Parse(format!("bad degree {v:?}")))?,
                )),
                _ => Err(Error::Parse(format!("expected u,v in {pair:?}"))),
            }
        })
        .collect()
}

fn cohomology(format: Format, loaded: &Loaded) -> String {
    let total = match loaded {
        Loaded::Complex(k) => k.clone(),
        Loaded::Double(k) => k.total(),
        Loaded::Model(m) => m.base().total(),
    };
    let mut table = Table::new(&["k", "dim"]);
    let mut map = serde_json::Map::new();
    for k in total.degrees() {
        table.push(vec![k.to_string(), total.betti(k).to_string()]);
        map.insert(k.to_string(), json!(total.betti(k)));
    }
    render(format, &json!({ "cohomology": map }), &table)
}

fn spectral_pages(format: Format, k: &DoubleComplex, last: Option<usize>) -> String {
    let pages: Vec<spectral::SpectralPage> = match last {
        Some(r) => {
            let mut v = vec![spectral::first_page(k)];
            while v.len() < r.max(1) {
                let next = spectral::next_page(v.last().expect("nonempty"), k);
                v.push(next);
            }
            v
        }
        None => {
            let limit = spectral::limit_page(k).r();
            spectral::pages(k).into_iter().take(limit).collect()
        }
    };
    let mut table = Table::new(&["r", "p", "q", "dim", "d_r rank"]);
    for page in &pages {
        for ((p, q), d) in page.dims() {
            table.push(vec![
                page.r().to_string(),
                p.to_string(),
                q.to_string(),
                d.to_string(),
                page.differential_rank(p, q).to_string(),
            ]);
        }
    }
    let summaries: Vec<_> = pages.iter().map(|p| p.summary()).collect();
    render(format, &summaries, &table)
}

fn truncate_cmd(
    format: Format,
    k: &DoubleComplex,
    window: Option<Window>,
    deg: Option<i64>,
) -> String {
    let s = k.support();
    let windows: Vec<Window> = match window {
        Some(w) => vec![w],
        None => s
            .columns()
            .flat_map(|a| (a..=s.p1).map(move |b| Window::new(a, b)))
            .collect(),
    };
    let degrees: Vec<i64> = match deg {
        Some(d) => vec![d],
        None => s.total_degrees().collect(),
    };
    let dims: Vec<_> = windows.iter().map(|&w| hypercohomology_all(k, w)).collect();
    let at = |i: usize, d: i64| dims[i].get(&d).copied().unwrap_or(0);
    if let (Some(w), Some(d), Format::Text) = (window, deg, format) {
        return format!("b^{d}({w}) = {}\n", at(0, d));
    }
    let labels: Vec<String> = windows.iter().map(|w| w.to_string()).collect();
    let mut header = vec!["k"];
    header.extend(labels.iter().map(String::as_str));
    let mut table = Table::new(&header);
    let mut rows = Vec::new();
    for &d in &degrees {
        let row: Vec<usize> = (0..windows.len()).map(|i| at(i, d)).collect();
        let mut cells = vec![d.to_string()];
        cells.extend(row.iter().map(usize::to_string));
        table.push(cells);
        rows.push(json!({ "k": d, "dims": row }));
    }
    render(format, &json!({ "windows": windows, "rows": rows }), &table)
}

fn hodge_cmd(format: Format, k: &DoubleComplex, deg: Option<i64>) -> Result<String> {
    let s = k.support();
    let e1 = spectral::first_page(k);
    let full = Window::new(s.p0, s.p1);
    let fr = frolicher_inequality(k, full);
    let degrees: Vec<i64> = match deg {
        Some(d) => vec![d],
        None => s.total_degrees().collect(),
    };
    let mut hodge = serde_json::Map::new();
    let mut table = Table::new(&["kind", "index", "value"]);
    for ((p, q), d) in e1.dims() {
        hodge.insert(format!("{p},{q}"), json!(d));
        table.push(vec!["h".into(), format!("{p},{q}"), d.to_string()]);
    }
    let mut filtrations = serde_json::Map::new();
    for &d in &degrees {
        let f = hodge_filtration_dims(k, d)?;
        for (i, dim) in f.dims.iter().enumerate() {
            table.push(vec![
                format!("F H^{d}"),
                (f.start + i as i64).to_string(),
                dim.to_string(),
            ]);
        }
        filtrations.insert(d.to_string(), json!(f));
    }
    for row in fr.rows.iter().filter(|r| degrees.contains(&r.k)) {
        table.push(vec!["b".into(), row.k.to_string(), row.betti.to_string()]);
        table.push(vec![
            "sum h".into(),
            row.k.to_string(),
            row.hodge_sum.to_string(),
        ]);
    }
    table.push(vec![
        "degenerates".into(),
        String::new(),
        fr.degenerates.to_string(),
    ]);
    let value = json!({
        "hodge_numbers": hodge,
        "frolicher": fr,
        "hodge_filtration": filtrations,
    });
    Ok(render(format, &value, &table))
}

fn report_output(format: Format, report: &Report) -> String {
    let mut table = Table::new(&["check", "degree", "lhs", "rhs", "pass"]);
    for c in report.checks() {
        table.push(vec![
            c.check.clone(),
            c.degree.to_string(),
            c.lhs.to_string(),
            c.rhs.to_string(),
            c.pass.to_string(),
        ]);
    }
    match format {
        Format::Text => {
            let failures: Vec<_> = report.failures().collect();
            let mut out = String::new();
            for c in &failures {
                let _ = writeln!(out, "{c}");
            }
            let _ = writeln!(out, "{} checks, {} failed", report.len(), failures.len());
            out
        }
        _ => render(format, report, &table),
    }
}

fn predict(format: Format, name: &str, value: usize) -> String {
    let mut table = Table::new(&["predictor", "value"]);
    table.push(vec![name.into(), value.to_string()]);
    match format {
        Format::Text => format!("{value}\n"),
        _ => render(
            format,
            &json!({ "predictor": name, "value": value }),
            &table,
        ),
    }
}

fn model_output(format: Format, m: &ModelDoubleComplex) -> String {
    let mut table = Table::new(&["p", "q", "dim", "basis"]);
    for (p, q) in m.base().support().bidegrees() {
        table.push(vec![
            p.to_string(),
            q.to_string(),
            m.base().dim(p, q).to_string(),
            m.basis_labels(p, q).join(" "),
        ]);
    }
    render(format, m, &table)
}

fn execute(config: &RunConfig) -> Result<Outcome> {
    let f = config.format;
    let ok = |output: String| Outcome { code: 0, output };
    Ok(match &config.command {
        Command::Cohomology(input) => ok(cohomology(f, &load(&input.input)?)),
        Command::Spectral { input, pages } => {
            ok(spectral_pages(f, load(&input.input)?.double()?, *pages))
        }
        Command::Truncate { input, s, t, k } => {
            let window = s.zip(*t).map(|(s, t)| Window::new(s, t));
            ok(truncate_cmd(f, load(&input.input)?.double()?, window, *k))
        }
        Command::Hodge { input, k } => ok(hodge_cmd(f, load(&input.input)?.double()?, *k)?),
        Command::Verify { suite, seed, count } => {
            let suite: Suite = suite.parse()?;
            let report = run_suite(suite, *seed, *count)?;
            Outcome {
                code: if report.passed() { 0 } else { 1 },
                output: report_output(f, &report),
            }
        }
        Command::Predict(p) => ok(match p {
            Predict::Kunneth { x, y, c, window } => {
                let v = kunneth_predict(&load_model(x)?, &load_model(y)?, *c, window.window());
                predict(f, "kunneth", v)
            }
            Predict::LerayHirsch {
                x,
                degrees,
                k,
                window,
            } => {
                let v = leray_hirsch_predict(
                    &load_model(x)?,
                    &parse_degrees(degrees)?,
                    *k,
                    window.window(),
                );
                predict(f, "leray-hirsch", v)
            }
            Predict::Projective { x, r, k, window } => {
                let v = projective_bundle_predict(&load_model(x)?, *r, *k, window.window())?;
                predict(f, "projective", v)
            }
            Predict::Blowup { x, y, r, k, window } => {
                let v = blowup_predict(&load_model(x)?, &load_model(y)?, *r, *k, window.window())?;
                predict(f, "blowup", v)
            }
        }),
        Command::Model(m) => {
            let model = match m {
                ModelCommand::Torus { n, twist_rank } => {
                    model_from_spec(&LieModelSpec::abelian(*n, *twist_rank))?;
                    torus_model(*n, *twist_rank)?
                }
                ModelCommand::Lie { spec } => load_model(spec)?,
                ModelCommand::Product { x, y } => {
                    let (x, y) = (load_model(x)?, load_model(y)?);
                    check_size("product", x.base().total_dim() * y.base().total_dim())?;
                    product_model(&x, &y)?
                }
            };
            ok(model_output(f, &model))
        }
    })
}

/// Exit status for an error: invalid input is 2, anything else 1.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::InvalidComplex(_)
        | Error::Shape(_)
        | Error::PreconditionViolation(_)
        | Error::JacobiViolation(_)
        | Error::NotIntegrable(_)
        | Error::NotClosed(_) => 2,
        _ => 1,
    }
}

/// Runs one command. Errors become a diagnostic on the output and a nonzero
/// status.
pub fn run(config: &RunConfig) -> Outcome {
    execute(config).unwrap_or_else(|e| Outcome {
        code: exit_code(&e),
        output: format!("error: {e}\n"),
    })
}

/// Parses `args`, runs, prints and returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = run(&config);
    if outcome.code == 0 || matches!(config.command, Command::Verify { .. }) {
        print!("{}", outcome.output);
    } else {
        eprint!("{}", outcome.output);
    }
    outcome.code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write(dir: &tempfile::TempDir, name: &str, body: &str) -> PathBuf {
        let p = dir.path().join(name);
        std::fs::write(&p, body).unwrap();
        p
    }

    fn run_args(args: &[&str]) -> Outcome {
        let mut full = vec!["spectra-dr"];
        full.extend_from_slice(args);
        run(&RunConfig::try_parse_from(full).unwrap())
    }

    #[test]
    fn truncate_iwasawa_b1() {
        let dir = tempfile::tempdir().unwrap();
        let spec = serde_json::to_string(&LieModelSpec::iwasawa()).unwrap();
        let p = write(&dir, "iw.json", &spec);
        let out = run_args(&[
            "truncate",
            "--model",
            p.to_str().unwrap(),
            "--s",
            "0",
            "--t",
            "3",
            "--k",
            "1",
        ]);
        assert_eq!(out.code, 0);
        assert_eq!(out.output, "b^1([0,3]) = 4\n");
    }

    #[test]
    fn blowup_prediction() {
        let dir = tempfile::tempdir().unwrap();
        let x = write(&dir, "t2.json", r#"{"n":2}"#);
        let y = write(&dir, "pt.json", r#"{"n":0}"#);
        let out = run_args(&[
            "predict",
            "blowup",
            "--x",
            x.to_str().unwrap(),
            "--y",
            y.to_str().unwrap(),
            "--r",
            "2",
            "--k",
            "2",
            "--s",
            "0",
            "--t",
            "2",
        ]);
        assert_eq!(
            out,
            Outcome {
                code: 0,
                output: "7\n".into()
            }
        );
    }

    #[test]
    fn invalid_input_exits_2() {
        let dir = tempfile::tempdir().unwrap();
        let bad = write(&dir, "bad.json", "{\"support\": [0,");
        let out = run_args(&["cohomology", "--input", bad.to_str().unwrap()]);
        assert_eq!(out.code, 2);
        assert!(out.output.contains("line 1"), "{}", out.output);
        let not_anti = write(
            &dir,
            "k.json",
            r#"{"support":[0,1,0,1],"dims":{"0,0":1,"1,0":1,"0,1":1,"1,1":1},
                "d1":{"0,0":{"rows":1,"cols":1,"entries":[["1"]]},"0,1":{"rows":1,"cols":1,"entries":[["1"]]}},
                "d2":{"0,0":{"rows":1,"cols":1,"entries":[["1"]]},"1,0":{"rows":1,"cols":1,"entries":[["1"]]}}}"#,
        );
        let out = run_args(&["cohomology", "--input", not_anti.to_str().unwrap()]);
        assert_eq!(out.code, 2);
        assert!(
            out.output.contains("anticommute at (0,0)"),
            "{}",
            out.output
        );
    }

    #[test]
    fn size_cap_is_enforced() {
        assert_eq!(parse_cap(None), DEFAULT_MAX_DIM);
        assert_eq!(parse_cap(Some("10")), 10);
        assert_eq!(parse_cap(Some("x")), DEFAULT_MAX_DIM);
        // 4^7 monomials exceed the default cap.
        let out = run_args(&["model", "torus", "--n", "7"]);
        assert_eq!(out.code, 2);
        assert!(out.output.contains(MAX_DIM_VAR));
    }

    #[test]
    fn json_output_is_deterministic() {
        let a = run_args(&[
            "--format", "json", "verify", "--suite", "spectral", "--seed", "3", "--count", "5",
        ]);
        let b = run_args(&[
            "--format", "json", "verify", "--suite", "spectral", "--seed", "3", "--count", "5",
        ]);
        assert_eq!(a, b);
        assert_eq!(a.code, 0);
    }

    #[test]
    fn csv_model_table() {
        let out = run_args(&["--format", "csv", "model", "torus", "--n", "1"]);
        assert!(
            out.output.starts_with("p,q,dim,basis\n0,0,1,1\n"),
            "{}",
            out.output
        );
    }

    #[test]
    fn degree_lists() {
        assert_eq!(parse_degrees("0,0;1,1").unwrap(), vec![(0, 0), (1, 1)]);
        assert!(parse_degrees("0").is_err());
    }
}
