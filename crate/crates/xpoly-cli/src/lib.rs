//! Thin command-line front end: compute classified zeros, regenerate the
//! published flow tables, sweep a parameter, and run verification suites.
//! All output is assembled in memory and written in one shot, so a failing
//! run never leaves a partial file behind.

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::path::PathBuf;
use xpoly::{
    classify_zeros, exceptional_poly, extra_zero_flow, extra_zeros, find_roots, golden_specs,
    newton_residual, ordinary_zeros, run_suite, verify_counts, verify_ell_flow, verify_extra_flow,
    verify_h_clustering, verify_interlacing, verify_large_param, verify_structure_rules,
    ClassifiedZeros, ClassifyConfig, Domain, Family, FamilySpec, Precision, RootConfig,
    VerificationReport,
};

#[derive(Parser, Debug)]
#[command(name = "xpoly", version, about = "Zeros of exceptional Laguerre and Jacobi polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Compute and classify every zero of one family member
    Zeros(CommonArgs),
    /// Regenerate one of the seven published zero-flow tables
    Table {
        /// Table number, 1..7
        id: usize,
        #[command(flatten)]
        args: CommonArgs,
    },
    /// Evaluate zeros across one varying parameter (g, h, ell or n as a:b:step)
    Sweep(CommonArgs),
    /// Run verification suites over the published parameter grid
    Verify {
        /// counts | interlacing | flow | structure | ell-flow | large-param | clustering | all
        #[arg(long)]
        suite: String,
        #[command(flatten)]
        args: CommonArgs,
    },
}

#[derive(Args, Debug, Default, Clone)]
pub struct CommonArgs {
    /// Family: L1, L2, J1 or J2
    #[arg(long)]
    pub family: Option<String>,
    /// First continuous parameter (single value, or a:b:step in sweep)
    #[arg(long)]
    pub g: Option<String>,
    /// Second continuous parameter, Jacobi families only
    #[arg(long)]
    pub h: Option<String>,
    /// Deformation degree
    #[arg(long)]
    pub ell: Option<String>,
    /// Member index
    #[arg(long)]
    pub n: Option<String>,
    /// Rootfinder precision mode used where coefficient-form root finding runs
    #[arg(long, env = "XPOLY_PRECISION", default_value = "standard")]
    pub precision: String,
    /// json, csv or text
    #[arg(long, default_value = "text")]
    pub format: String,
    /// Write here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Real zeros are collapsed when |Im z| <= tol * (1 + |z|)
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Run(xpoly::Error),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Run(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<xpoly::Error> for CliError {
    fn from(e: xpoly::Error) -> Self {
        CliError::Run(e)
    }
}

impl CliError {
    /// 2 for anything the caller got wrong, 1 for a run that failed.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Run(
                xpoly::Error::ParameterViolation(_)
                | xpoly::Error::DegreeZero { .. }
                | xpoly::Error::DegenerateDegree { .. },
            ) => 2,
            _ => 1,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

// ---- value-or-range parsing ----------------------------------------------

pub fn parse_f64_values(s: &str, name: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = s.split(':').collect();
    let p = |x: &str| {
        x.parse::<f64>()
            .map_err(|_| usage(format!("--{name}: cannot parse {x:?} as a real number")))
    };
    match parts.as_slice() {
        [one] => Ok(vec![p(one)?]),
        [a, b, step] => {
            let (a, b, step) = (p(a)?, p(b)?, p(step)?);
            if !(step > 0.0) || b < a {
                return Err(usage(format!(
                    "--{name}: range must be ascending with positive step, got {s}"
                )));
            }
            let mut out = Vec::new();
            let mut k = 0usize;
            loop {
                let v = a + step * k as f64;
                if v > b + 1e-9 * step {
                    break;
                }
                out.push(v);
                k += 1;
            }
            Ok(out)
        }
        _ => Err(usage(format!("--{name}: expected VALUE or A:B:STEP, got {s:?}"))),
    }
}

pub fn parse_usize_values(s: &str, name: &str) -> Result<Vec<usize>, CliError> {
    let parts: Vec<&str> = s.split(':').collect();
    let p = |x: &str| {
        x.parse::<usize>()
            .map_err(|_| usage(format!("--{name}: cannot parse {x:?} as a non-negative integer")))
    };
    match parts.as_slice() {
        [one] => Ok(vec![p(one)?]),
        [a, b, step] => {
            let (a, b, step) = (p(a)?, p(b)?, p(step)?);
            if step == 0 || b < a {
                return Err(usage(format!(
                    "--{name}: range must be ascending with positive step, got {s}"
                )));
            }
            Ok((a..=b).step_by(step).collect())
        }
        _ => Err(usage(format!("--{name}: expected VALUE or A:B:STEP, got {s:?}"))),
    }
}

fn single<T: Copy>(values: &[T], name: &str) -> Result<T, CliError> {
    if values.len() == 1 {
        Ok(values[0])
    } else {
        Err(usage(format!("--{name} must be a single value for this command")))
    }
}

fn parse_family(s: &Option<String>) -> Result<Family, CliError> {
    let s = s
        .as_deref()
        .ok_or_else(|| usage("--family is required"))?;
    s.parse::<Family>().map_err(|e| usage(e.to_string()))
}

fn parse_precision(s: &str) -> Result<Precision, CliError> {
    match s {
        "standard" => Ok(Precision::Standard),
        "extended" => Ok(Precision::Extended),
        _ => Err(usage(format!(
            "--precision must be standard or extended, got {s:?}"
        ))),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Text,
}

fn parse_format(s: &str) -> Result<Format, CliError> {
    match s {
        "json" => Ok(Format::Json),
        "csv" => Ok(Format::Csv),
        "text" => Ok(Format::Text),
        _ => Err(usage(format!("--format must be json, csv or text, got {s:?}"))),
    }
}

fn resolve_single_spec(args: &CommonArgs) -> Result<FamilySpec, CliError> {
    let family = parse_family(&args.family)?;
    let g = single(
        &parse_f64_values(args.g.as_deref().ok_or_else(|| usage("--g is required"))?, "g")?,
        "g",
    )?;
    let ell = single(
        &parse_usize_values(
            args.ell.as_deref().ok_or_else(|| usage("--ell is required"))?,
            "ell",
        )?,
        "ell",
    )?;
    let n = single(
        &parse_usize_values(args.n.as_deref().ok_or_else(|| usage("--n is required"))?, "n")?,
        "n",
    )?;
    let h = match &args.h {
        Some(s) => Some(single(&parse_f64_values(s, "h")?, "h")?),
        None => None,
    };
    if family.is_laguerre() && h.is_some() {
        return Err(usage("--h does not apply to the Laguerre families"));
    }
    if family.is_jacobi() && h.is_none() {
        return Err(usage("--h is required for the Jacobi families"));
    }
    Ok(FamilySpec::new(family, g, h, ell, n)?)
}

// ---- output documents -----------------------------------------------------

/// Complex value in the fixed {"re", "im"} JSON form.
#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexJson {
    fn from(z: Complex64) -> Self {
        ComplexJson { re: z.re, im: z.im }
    }
}

impl From<ComplexJson> for Complex64 {
    fn from(z: ComplexJson) -> Self {
        Complex64::new(z.re, z.im)
    }
}

/// Defaults and parameters echoed into every output for provenance.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct ConfigEcho {
    pub family: Option<String>,
    pub g: Option<f64>,
    pub h: Option<f64>,
    pub ell: Option<usize>,
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub swept: Option<String>,
    pub precision: String,
    pub format: String,
    pub tol: f64,
}

impl ConfigEcho {
    fn comment_lines(&self) -> String {
        let mut s = String::new();
        if let Some(f) = &self.family {
            s.push_str(&format!(
                "# family={f} g={} h={} ell={} n={}\n",
                self.g.map_or(String::new(), |v| v.to_string()),
                self.h.map_or(String::new(), |v| v.to_string()),
                self.ell.map_or(String::new(), |v| v.to_string()),
                self.n.map_or(String::new(), |v| v.to_string()),
            ));
        }
        if let Some(sw) = &self.swept {
            s.push_str(&format!("# swept {sw}\n"));
        }
        s.push_str(&format!(
            "# precision={} format={} tol={}\n",
            self.precision, self.format, self.tol
        ));
        s
    }
}

fn echo_of(spec: &FamilySpec, args: &CommonArgs, fmt: &str) -> ConfigEcho {
    ConfigEcho {
        family: Some(spec.family.to_string()),
        g: Some(spec.g),
        h: spec.h,
        ell: Some(spec.ell),
        n: Some(spec.n),
        swept: None,
        precision: args.precision.clone(),
        format: fmt.to_string(),
        tol: args.tol,
    }
}

/// One zero as a flat record; the shared row schema of every dataset.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct ZeroRecord {
    pub family: String,
    pub g: f64,
    pub h: Option<f64>,
    pub ell: usize,
    pub n: usize,
    pub zero_index: usize,
    pub re: f64,
    pub im: f64,
    pub class: String,
    pub residual: f64,
}

pub const CSV_HEADER: &str = "family,g,h,ell,n,zero_index,re,im,class,residual";

impl ZeroRecord {
    fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.family,
            self.g,
            self.h.map_or(String::new(), |v| v.to_string()),
            self.ell,
            self.n,
            self.zero_index,
            self.re,
            self.im,
            self.class,
            self.residual
        )
    }
}

/// Full result of the zeros command in its JSON form.
#[derive(Serialize, Deserialize, Debug)]
pub struct ZerosDocument {
    pub config: ConfigEcho,
    pub domain: Domain,
    pub ordinary: Vec<f64>,
    pub extra: Vec<ComplexJson>,
    pub extra_real: Vec<f64>,
    /// Location-error estimates, index-aligned: ordinary first, then extra.
    pub residuals: Vec<f64>,
}

impl ZerosDocument {
    /// Rebuild the in-memory classification this document serializes.
    pub fn to_classified(&self) -> ClassifiedZeros {
        ClassifiedZeros {
            ordinary: self.ordinary.clone(),
            extra: self.extra.iter().map(|&z| z.into()).collect(),
            extra_real: self.extra_real.clone(),
            domain: self.domain,
        }
    }
}

// ---- zero extraction ------------------------------------------------------

/// Hybrid classified zeros: ordinary ones from the stable sign scan, extra
/// ones from Newton continuation. Reliable at any degree the published
/// tables use, unlike classification of coefficient-form roots.
pub fn classified_hybrid(
    spec: &FamilySpec,
    tol: f64,
) -> Result<(ClassifiedZeros, Vec<f64>), CliError> {
    let ordinary = ordinary_zeros(spec)?;
    let mut extra = extra_zeros(spec)?;
    extra.sort_by(|a, b| {
        a.re.total_cmp(&b.re)
            .then(a.im.abs().total_cmp(&b.im.abs()))
            .then(a.im.total_cmp(&b.im))
    });
    let extra_real: Vec<f64> = extra
        .iter()
        .filter(|z| z.im.abs() <= tol * (1.0 + z.norm()))
        .map(|z| z.re)
        .collect();
    let mut residuals = Vec::with_capacity(ordinary.len() + extra.len());
    // bisection converges the bracket to this width
    residuals.extend(ordinary.iter().map(|x| 1e-15 * (1.0 + x.abs())));
    for z in &extra {
        residuals.push(newton_residual(spec, *z)?);
    }
    Ok((
        ClassifiedZeros {
            ordinary,
            extra,
            extra_real,
            domain: Domain::of(spec.family),
        },
        residuals,
    ))
}

/// Direct route for comparison and for the standard/extended mode contract:
/// coefficient-form roots plus classification. Used when the caller forces
/// it; trustworthy only at modest degree.
pub fn classified_direct(
    spec: &FamilySpec,
    precision: Precision,
    tol: f64,
) -> Result<ClassifiedZeros, CliError> {
    let cfg = RootConfig {
        precision,
        ..RootConfig::default()
    };
    let roots = find_roots(&exceptional_poly(spec)?, &cfg)?;
    let ccfg = ClassifyConfig {
        imag_eps: tol,
        ..ClassifyConfig::default()
    };
    Ok(classify_zeros(&roots, spec, &ccfg)?)
}

fn records_for(
    spec: &FamilySpec,
    cz: &ClassifiedZeros,
    residuals: &[f64],
) -> Vec<ZeroRecord> {
    let mut out = Vec::with_capacity(cz.ordinary.len() + cz.extra.len());
    let base = |idx: usize, re: f64, im: f64, class: &str, residual: f64| ZeroRecord {
        family: spec.family.to_string(),
        g: spec.g,
        h: spec.h,
        ell: spec.ell,
        n: spec.n,
        zero_index: idx,
        re,
        im,
        class: class.to_string(),
        residual,
    };
    for (k, x) in cz.ordinary.iter().enumerate() {
        out.push(base(k, *x, 0.0, "ordinary", residuals[k]));
    }
    for (k, z) in cz.extra.iter().enumerate() {
        let real = z.im.abs() <= 1e-8 * (1.0 + z.norm()) && cz.extra_real.contains(&z.re);
        let class = if real { "extra_real" } else { "extra" };
        out.push(base(
            cz.ordinary.len() + k,
            z.re,
            z.im,
            class,
            residuals[cz.ordinary.len() + k],
        ));
    }
    out
}

/// "a ± b i" for the upper member of a conjugate pair, plain real otherwise.
fn format_entry(re: f64, im: f64, decimals: usize) -> String {
    if im == 0.0 {
        format!("{re:.decimals$}")
    } else {
        format!("{re:.decimals$} \u{b1} {:.decimals$} i", im.abs())
    }
}

/// Collapse a zero set into display entries: conjugate pairs become one
/// "a ± b i" entry, near-real members print as reals. Sorted by (re, |im|).
fn collapse_pairs(zeros: &[Complex64], tol: f64) -> Vec<(f64, f64)> {
    let mut entries: Vec<(f64, f64)> = Vec::new();
    for z in zeros {
        if z.im.abs() <= tol * (1.0 + z.norm()) {
            entries.push((z.re, 0.0));
        } else if z.im > 0.0 {
            entries.push((z.re, z.im));
        }
    }
    entries.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    entries
}

// ---- commands -------------------------------------------------------------

fn cmd_zeros(args: &CommonArgs) -> Result<String, CliError> {
    let spec = resolve_single_spec(args)?;
    parse_precision(&args.precision)?;
    let format = parse_format(&args.format)?;
    let (cz, residuals) = classified_hybrid(&spec, args.tol)?;
    let config = echo_of(&spec, args, &args.format);
    match format {
        Format::Json => {
            let doc = ZerosDocument {
                config,
                domain: cz.domain,
                ordinary: cz.ordinary.clone(),
                extra: cz.extra.iter().map(|&z| z.into()).collect(),
                extra_real: cz.extra_real.clone(),
                residuals,
            };
            Ok(serde_json::to_string_pretty(&doc).expect("serialize") + "\n")
        }
        Format::Csv => {
            let mut s = config.comment_lines();
            s.push_str(CSV_HEADER);
            s.push('\n');
            for r in records_for(&spec, &cz, &residuals) {
                s.push_str(&r.csv_line());
                s.push('\n');
            }
            Ok(s)
        }
        Format::Text => {
            let mut s = config.comment_lines();
            s.push_str(&format!("# domain {}\n", cz.domain));
            s.push_str(&format!("ordinary ({}):\n", cz.ordinary.len()));
            for x in &cz.ordinary {
                s.push_str(&format!("  {x}\n"));
            }
            s.push_str(&format!("extra ({}):\n", cz.extra.len()));
            for (re, im) in collapse_pairs(&cz.extra, args.tol) {
                s.push_str(&format!("  {}\n", format_entry(re, im, 6)));
            }
            Ok(s)
        }
    }
}

/// Row labels and flow data of one published table.
struct TableData {
    spec: FamilySpec,
    decimals: usize,
    labels: Vec<String>,
    rows: Vec<Vec<Complex64>>,
}

fn table_data(id: usize) -> Result<TableData, CliError> {
    if !(1..=7).contains(&id) {
        return Err(usage(format!("table id must be 1..7, got {id}")));
    }
    let spec = golden_specs()[id - 1].clone();
    let n_list = [0usize, 10, 20, 30, 40, 50, 60];
    let flow = extra_zero_flow(&spec, &n_list)?;
    let mut labels = vec!["Xi".to_string()];
    labels.extend((1..n_list.len()).map(|i| format!("n={}", n_list[i])));
    labels.push("xi".to_string());
    let mut rows = flow.beta.clone();
    rows.push(flow.xi.clone());
    Ok(TableData {
        spec,
        decimals: if id <= 2 { 4 } else { 5 },
        labels,
        rows,
    })
}

#[derive(Serialize, Deserialize)]
struct TableRowJson {
    label: String,
    entries: Vec<ComplexJson>,
}

fn cmd_table(id: usize, args: &CommonArgs) -> Result<String, CliError> {
    parse_precision(&args.precision)?;
    let format = parse_format(&args.format)?;
    let t = table_data(id)?;
    let mut config = echo_of(&t.spec, args, &args.format);
    config.n = None; // rows carry their own n
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc {
                config: ConfigEcho,
                table: usize,
                rows: Vec<TableRowJson>,
            }
            let rows = t
                .labels
                .iter()
                .zip(&t.rows)
                .map(|(label, row)| TableRowJson {
                    label: label.clone(),
                    entries: collapse_pairs(row, 1e-8)
                        .into_iter()
                        .map(|(re, im)| ComplexJson { re, im })
                        .collect(),
                })
                .collect();
            let doc = Doc {
                config,
                table: id,
                rows,
            };
            Ok(serde_json::to_string_pretty(&doc).expect("serialize") + "\n")
        }
        Format::Csv => {
            // flow rows as records; the limit row has no member index, its
            // class says what it is
            let mut s = config.comment_lines();
            s.push_str(&format!("# table {id}\n"));
            s.push_str(CSV_HEADER);
            s.push('\n');
            let n_list = [0usize, 10, 20, 30, 40, 50, 60];
            for (i, row) in t.rows.iter().enumerate() {
                let last = i + 1 == t.rows.len();
                for (k, z) in row.iter().enumerate() {
                    let r = ZeroRecord {
                        family: t.spec.family.to_string(),
                        g: t.spec.g,
                        h: t.spec.h,
                        ell: t.spec.ell,
                        n: if last { 0 } else { n_list[i] },
                        zero_index: k,
                        re: z.re,
                        im: z.im,
                        class: if last { "deforming_limit" } else { "extra" }.to_string(),
                        residual: 0.0,
                    };
                    s.push_str(&r.csv_line());
                    s.push('\n');
                }
            }
            Ok(s)
        }
        Format::Text => {
            let mut s = config.comment_lines();
            s.push_str(&format!("# table {id}\n"));
            let body: Vec<(String, Vec<String>)> = t
                .labels
                .iter()
                .zip(&t.rows)
                .map(|(label, row)| {
                    let entries = collapse_pairs(row, 1e-8)
                        .into_iter()
                        .map(|(re, im)| format_entry(re, im, t.decimals))
                        .collect();
                    (label.clone(), entries)
                })
                .collect();
            let cols = body.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
            let mut widths = vec![0usize; cols];
            for (_, entries) in &body {
                for (j, e) in entries.iter().enumerate() {
                    widths[j] = widths[j].max(e.len());
                }
            }
            let label_w = body.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
            for (label, entries) in &body {
                s.push_str(&format!("{label:<label_w$}"));
                for (j, e) in entries.iter().enumerate() {
                    s.push_str(&format!("  {e:>w$}", w = widths[j]));
                }
                s.push('\n');
            }
            Ok(s)
        }
    }
}

fn cmd_sweep(args: &CommonArgs) -> Result<String, CliError> {
    let family = parse_family(&args.family)?;
    parse_precision(&args.precision)?;
    let format = parse_format(&args.format)?;
    let g = parse_f64_values(args.g.as_deref().ok_or_else(|| usage("--g is required"))?, "g")?;
    let h = match &args.h {
        Some(s) => parse_f64_values(s, "h")?,
        None => vec![],
    };
    if family.is_jacobi() && h.is_empty() {
        return Err(usage("--h is required for the Jacobi families"));
    }
    if family.is_laguerre() && !h.is_empty() {
        return Err(usage("--h does not apply to the Laguerre families"));
    }
    let ell = parse_usize_values(
        args.ell.as_deref().ok_or_else(|| usage("--ell is required"))?,
        "ell",
    )?;
    let n = parse_usize_values(args.n.as_deref().ok_or_else(|| usage("--n is required"))?, "n")?;

    let mut swept: Vec<&str> = Vec::new();
    if g.len() > 1 {
        swept.push("g");
    }
    if h.len() > 1 {
        swept.push("h");
    }
    if ell.len() > 1 {
        swept.push("ell");
    }
    if n.len() > 1 {
        swept.push("n");
    }
    if swept.len() != 1 {
        return Err(usage(format!(
            "sweep needs exactly one varying parameter, got {}",
            if swept.is_empty() { "none".to_string() } else { swept.join(", ") }
        )));
    }
    let swept_desc = format!(
        "{}={}",
        swept[0],
        match swept[0] {
            "g" => args.g.clone().unwrap(),
            "h" => args.h.clone().unwrap(),
            "ell" => args.ell.clone().unwrap(),
            _ => args.n.clone().unwrap(),
        }
    );

    let mut specs = Vec::new();
    for &gv in &g {
        let hv: Vec<Option<f64>> = if h.is_empty() {
            vec![None]
        } else {
            h.iter().map(|&x| Some(x)).collect()
        };
        for hv in hv {
            for &ev in &ell {
                for &nv in &n {
                    specs.push(FamilySpec::new(family, gv, hv, ev, nv)?);
                }
            }
        }
    }

    // fan the points out over a few threads; records are sorted afterwards
    // so the schedule never changes the output bytes
    let tol = args.tol;
    let results: Vec<Result<Vec<ZeroRecord>, CliError>> = std::thread::scope(|scope| {
        let workers = specs.len().min(8).max(1);
        let chunk = specs.len().div_ceil(workers);
        let handles: Vec<_> = specs
            .chunks(chunk.max(1))
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .map(|sp| {
                            let (cz, residuals) = classified_hybrid(sp, tol)?;
                            Ok(records_for(sp, &cz, &residuals))
                        })
                        .collect::<Vec<Result<Vec<ZeroRecord>, CliError>>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|jh| jh.join().expect("sweep worker panicked"))
            .collect()
    });
    let mut records = Vec::new();
    for r in results {
        records.extend(r?);
    }
    records.sort_by(|a, b| {
        a.g.total_cmp(&b.g)
            .then(a.h.unwrap_or(f64::NEG_INFINITY).total_cmp(&b.h.unwrap_or(f64::NEG_INFINITY)))
            .then(a.ell.cmp(&b.ell))
            .then(a.n.cmp(&b.n))
            .then(a.zero_index.cmp(&b.zero_index))
    });

    let config = ConfigEcho {
        family: Some(family.to_string()),
        g: if g.len() == 1 { Some(g[0]) } else { None },
        h: if h.len() == 1 { Some(h[0]) } else { None },
        ell: if ell.len() == 1 { Some(ell[0]) } else { None },
        n: if n.len() == 1 { Some(n[0]) } else { None },
        swept: Some(swept_desc),
        precision: args.precision.clone(),
        format: args.format.clone(),
        tol: args.tol,
    };
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc {
                config: ConfigEcho,
                records: Vec<ZeroRecord>,
            }
            Ok(serde_json::to_string_pretty(&Doc { config, records }).expect("serialize") + "\n")
        }
        // the record rows ARE the text form
        Format::Csv | Format::Text => {
            let mut s = config.comment_lines();
            s.push_str(CSV_HEADER);
            s.push('\n');
            for r in &records {
                s.push_str(&r.csv_line());
                s.push('\n');
            }
            Ok(s)
        }
    }
}

fn flow_ladder(n: usize) -> Vec<usize> {
    let mut list: Vec<usize> = (0..).map(|k| 10 * k).take_while(|&v| v < n).collect();
    list.push(n.max(10));
    list
}

fn cmd_verify(suite: &str, args: &CommonArgs) -> Result<(String, bool), CliError> {
    parse_precision(&args.precision)?;
    let format = parse_format(&args.format)?;
    if format == Format::Csv {
        return Err(usage("--format csv applies to zero datasets; use json or text"));
    }
    let mut resolved: Option<FamilySpec> = None;
    let reports: Vec<VerificationReport> = if args.family.is_none() {
        run_suite(suite)?
    } else {
        let spec = resolve_single_spec(args)?;
        resolved = Some(spec.clone());
        let known = [
            "counts", "interlacing", "flow", "structure", "ell-flow", "large-param", "clustering",
        ];
        if suite != "all" && !known.contains(&suite) {
            return Err(CliError::Run(xpoly::Error::ParameterViolation(format!(
                "unknown suite '{suite}', expected one of {known:?} or 'all'"
            ))));
        }
        let mut out = Vec::new();
        let pick = |name: &str| suite == "all" || suite == name;
        if pick("counts") {
            out.push(verify_counts(&spec));
        }
        if pick("interlacing") {
            out.push(verify_interlacing(&spec, spec.n.max(2)));
        }
        if pick("flow") {
            out.push(verify_extra_flow(&spec, &flow_ladder(spec.n)));
        }
        if pick("structure") {
            out.push(verify_structure_rules(&spec, spec.ell.max(1)));
        }
        if pick("ell-flow") {
            out.push(verify_ell_flow(&spec, spec.ell.max(2)));
        }
        if pick("large-param") {
            out.push(verify_large_param(&spec, &[10.0, 100.0, 1000.0]));
        }
        if pick("clustering") {
            if spec.family == Family::J2 {
                out.push(verify_h_clustering(
                    spec.g,
                    &[spec.h.unwrap(), spec.h.unwrap() * 2.0],
                    spec.ell,
                    spec.n,
                ));
            } else if suite == "clustering" {
                return Err(usage("clustering applies to J2 only"));
            }
        }
        out
    };
    let all_passed = reports.iter().all(|r| r.passed);
    let config = ConfigEcho {
        family: resolved.as_ref().map(|s| s.family.to_string()),
        g: resolved.as_ref().map(|s| s.g),
        h: resolved.as_ref().and_then(|s| s.h),
        ell: resolved.as_ref().map(|s| s.ell),
        n: resolved.as_ref().map(|s| s.n),
        swept: None,
        precision: args.precision.clone(),
        format: args.format.clone(),
        tol: args.tol,
    };
    let out = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc {
                config: ConfigEcho,
                suite: String,
                passed: bool,
                reports: Vec<VerificationReport>,
            }
            serde_json::to_string_pretty(&Doc {
                config,
                suite: suite.to_string(),
                passed: all_passed,
                reports,
            })
            .expect("serialize")
                + "\n"
        }
        _ => {
            let mut s = config.comment_lines();
            s.push_str(&format!("# suite {suite}\n"));
            for r in &reports {
                if r.passed {
                    s.push_str(&format!("PASS {} [{}]\n", r.check_name, r.params));
                } else {
                    s.push_str(&format!("FAIL {} [{}]\n", r.check_name, r.params));
                    for (what, value) in &r.evidence {
                        s.push_str(&format!("     {what}: {value}\n"));
                    }
                }
            }
            s.push_str(&format!(
                "{} of {} checks passed\n",
                reports.iter().filter(|r| r.passed).count(),
                reports.len()
            ));
            s
        }
    };
    Ok((out, all_passed))
}

// ---- entry point ----------------------------------------------------------

fn write_output(args: &CommonArgs, body: &str) -> Result<(), CliError> {
    match &args.out {
        Some(path) => std::fs::write(path, body).map_err(CliError::Io),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

/// Run one parsed command line; returns the process exit code.
pub fn run(cli: Cli) -> Result<i32, CliError> {
    match &cli.cmd {
        Cmd::Zeros(args) => {
            let body = cmd_zeros(args)?;
            write_output(args, &body)?;
            Ok(0)
        }
        Cmd::Table { id, args } => {
            let body = cmd_table(*id, args)?;
            write_output(args, &body)?;
            Ok(0)
        }
        Cmd::Sweep(args) => {
            let body = cmd_sweep(args)?;
            write_output(args, &body)?;
            Ok(0)
        }
        Cmd::Verify { suite, args } => {
            let (body, passed) = cmd_verify(suite, args)?;
            write_output(args, &body)?;
            Ok(if passed { 0 } else { 1 })
        }
    }
}
