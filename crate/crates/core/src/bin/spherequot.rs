use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use serde_json::json;

use spherequot::catalog::{canonical_cyclic, Family, GroupSpec};
use spherequot::hj::{cf_value, dual_type, hj_string};
use spherequot::report::{
    describe, export_dot, file_stem, parse_families, parse_key_values, parse_tolerance, verify, DescribeOptions,
    GraphKind, InvariantReport, SweepConfig,
};
use spherequot::resolution::to_dot;
use spherequot::{rational, Error};

#[derive(Parser, Debug)]
#[command(name = "spherequot", version, about = "Invariants of free finite quotients of S^3")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_parser = parse_family)]
    family: Option<Family>,
    #[arg(long, global = true)]
    m: Option<i64>,
    #[arg(long, global = true)]
    n: Option<i64>,
    #[arg(long, global = true)]
    q: Option<i64>,
    #[arg(long, global = true)]
    p: Option<i64>,
    /// Snap tolerance, in (0, 1e-3].
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Output directory.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Flat key = value file; flags override its entries.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// η for the selected spec (`r`), or for any spec (`family:a,b=r`). Repeatable.
    #[arg(long, global = true, allow_hyphen_values = true)]
    eta: Vec<String>,
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full invariant report for one spec.
    Describe,
    /// Hirzebruch-Jung string of L(q,p).
    Hj { q: i64, p: i64 },
    /// Resolution graph of one spec.
    Resolve,
    /// Compactification graph of one non-cyclic spec.
    Compactify,
    /// Sweep every spec within the configured bounds.
    Verify {
        #[arg(long)]
        families: Option<String>,
        #[arg(long)]
        m_max: Option<i64>,
        #[arg(long)]
        n_max: Option<i64>,
        #[arg(long)]
        p_max: Option<i64>,
        #[arg(long)]
        hj_max: Option<i64>,
        #[arg(long)]
        eisenstein_max: Option<i64>,
    },
    /// Write a graph of one spec as DOT.
    Export {
        #[arg(long, value_enum, default_value_t = Graph::Resolution)]
        graph: Graph,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Graph {
    Resolution,
    Compactification,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: spherequot::catalog::CatalogError| e.to_string())
}

enum Failure {
    Usage(String),
    Identity(String),
}

impl<E: Into<Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        let e: Error = e.into();
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Identity(e.to_string())
        }
    }
}

type Outcome = Result<bool, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Settings after merging the config file with flags.
struct Settings {
    family: Option<Family>,
    m: Option<i64>,
    n: Option<i64>,
    q: Option<i64>,
    p: Option<i64>,
    tolerance: f64,
    format: Option<Format>,
    out: Option<PathBuf>,
    file: BTreeMap<String, String>,
    bare_eta: Option<Ratio<i64>>,
    eta: BTreeMap<GroupSpec, Ratio<i64>>,
}

fn int_key(map: &BTreeMap<String, String>, key: &str) -> Result<Option<i64>, Failure> {
    map.get(key)
        .map(|v| v.parse().map_err(|_| usage(format!("config {key}: expected an integer, got '{v}'"))))
        .transpose()
}

fn settings(cli: &Cli) -> Result<Settings, Failure> {
    let file = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| usage(format!("reading {}: {e}", path.display())))?;
            parse_key_values(&text)?
        }
        None => BTreeMap::new(),
    };
    let family = match (cli.family, file.get("family")) {
        (Some(f), _) => Some(f),
        (None, Some(v)) => Some(v.parse().map_err(Error::from)?),
        (None, None) => None,
    };
    let tolerance = match (cli.tolerance, file.get("tolerance")) {
        (Some(t), _) => t,
        (None, Some(v)) => parse_tolerance(v)?,
        (None, None) => 1e-6,
    };
    let format = match (cli.format, file.get("format")) {
        (Some(f), _) => Some(f),
        (None, Some(v)) => Some(Format::from_str(v, true).map_err(|_| usage(format!("unknown format '{v}'")))?),
        (None, None) => None,
    };
    let mut bare_eta = None;
    let mut eta = BTreeMap::new();
    for entry in &cli.eta {
        match entry.rsplit_once('=') {
            Some((spec, r)) => {
                let spec: GroupSpec = spec.trim().parse().map_err(Error::from)?;
                let r = rational::parse(r).ok_or_else(|| usage(format!("--eta: bad rational in '{entry}'")))?;
                eta.insert(spec, r);
            }
            None => bare_eta = Some(rational::parse(entry).ok_or_else(|| usage(format!("--eta: bad rational '{entry}'")))?),
        }
    }
    Ok(Settings {
        family,
        m: cli.m.or(int_key(&file, "m")?),
        n: cli.n.or(int_key(&file, "n")?),
        q: cli.q.or(int_key(&file, "q")?),
        p: cli.p.or(int_key(&file, "p")?),
        tolerance,
        format,
        out: cli.out.clone().or_else(|| file.get("out").map(PathBuf::from)),
        file,
        bare_eta,
        eta,
    })
}

impl Settings {
    fn spec(&self) -> Result<GroupSpec, Failure> {
        let family = self.family.ok_or_else(|| usage("--family is required"))?;
        let spec = GroupSpec::from_parts(family, self.m, self.n, self.q, self.p).map_err(Error::from)?;
        spec.validate().map_err(Error::from)?;
        Ok(spec)
    }

    fn check_tolerance(&self) -> Result<(), Failure> {
        if self.tolerance > 0.0 && self.tolerance <= 1e-3 {
            Ok(())
        } else {
            Err(usage(format!("tolerance {} outside (0, 1e-3]", self.tolerance)))
        }
    }

    fn report(&self) -> Result<InvariantReport, Failure> {
        self.check_tolerance()?;
        let spec = self.spec()?;
        let mut file_config = SweepConfig::default();
        file_config.apply(&self.file)?;
        let eta = self
            .bare_eta
            .or_else(|| self.eta.get(&spec).copied())
            .or_else(|| file_config.eta.get(&spec).copied());
        let report = describe(
            &spec,
            &DescribeOptions {
                tolerance: self.tolerance,
                eta,
            },
        )?;
        for c in report.failures() {
            log::error!("{}: check {} failed: {}", report.spec, c.name, c.detail);
        }
        Ok(report)
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| usage(format!("creating {}: {e}", dir.display())))?;
    }
    std::fs::write(path, text).map_err(|e| usage(format!("writing {}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&Path>, file_name: &str) -> Result<(), Failure> {
    match out {
        Some(dir) => {
            let path = dir.join(file_name);
            write_file(&path, text)?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn run_describe(s: &Settings) -> Outcome {
    let report = s.report()?;
    match s.format.unwrap_or(Format::Text) {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => print!("{}\n", report.to_json()),
        Format::Dot => print!("{}", export_dot(&report, GraphKind::Resolution)?),
    }
    if let Some(dir) = &s.out {
        let path = dir.join(format!("{}.json", file_stem(&report.spec)));
        write_file(&path, &report.to_json())?;
    }
    Ok(report.all_pass())
}

fn run_hj(s: &Settings, q: i64, p: i64) -> Outcome {
    if p < 2 {
        return Err(usage(format!("hj: p must be at least 2, got {p}")));
    }
    let t = canonical_cyclic(q, p).map_err(Error::from)?;
    let string = hj_string(t)?;
    let dual = dual_type(t);
    let dual_string = hj_string(dual)?;
    let value = cf_value(&string.entries);
    let round_trip = value == Some(Ratio::new(t.alpha, t.beta));
    let text = match s.format.unwrap_or(Format::Text) {
        Format::Json => pretty(&json!({
            "type": t,
            "entries": string.entries,
            "length": string.len(),
            "value": value.map(|v| json!({"num": v.numer(), "den": v.denom()})),
            "dual_type": dual,
            "dual_entries": dual_string.entries,
            "round_trip": round_trip,
        })),
        Format::Text => format!(
            "{t}: {:?}\nlength {}\ndual {dual}: {:?}\n",
            string.entries,
            string.len(),
            dual_string.entries
        ),
        Format::Dot => {
            let chain = spherequot::resolution::PlumbingGraph::chain(
                &string.entries.iter().map(|e| -e).collect::<Vec<_>>(),
            )?;
            to_dot(&t.to_string(), &[chain])
        }
    };
    emit(&text, s.out.as_deref(), &format!("hj_{}_{}.txt", t.alpha, t.beta))?;
    Ok(round_trip)
}

fn run_resolve(s: &Settings) -> Outcome {
    let report = s.report()?;
    let r = &report.resolution;
    let stem = file_stem(&report.spec);
    match s.format.unwrap_or(Format::Text) {
        Format::Json => emit(&pretty(r), s.out.as_deref(), &format!("{stem}.resolution.json"))?,
        Format::Dot => emit(
            &export_dot(&report, GraphKind::Resolution)?,
            s.out.as_deref(),
            &format!("{stem}.resolution.dot"),
        )?,
        Format::Text => {
            let mut text = format!("spec     {}\nweights  {:?}\n", report.spec, r.graph.weights());
            for st in &r.strings {
                text += &format!("string   {}: {:?}\n", st.source, st.entries);
            }
            text += &format!(
                "k_gamma  {}\ntau      {}\nnegative definite {}\n",
                report.k_gamma, report.signature, r.negative_definite
            );
            if let Some(e) = r.seifert_euler {
                text += &format!("seifert euler {e}\n");
            }
            emit(&text, s.out.as_deref(), &format!("{stem}.resolution.txt"))?;
        }
    }
    Ok(report.all_pass())
}

fn run_compactify(s: &Settings) -> Outcome {
    let report = s.report()?;
    let stem = file_stem(&report.spec);
    let c = report
        .compactification
        .as_ref()
        .ok_or_else(|| usage(format!("{} is cyclic; no compactification graph", report.spec)))?;
    match s.format.unwrap_or(Format::Text) {
        Format::Json => emit(&pretty(c), s.out.as_deref(), &format!("{stem}.compactification.json"))?,
        Format::Dot => emit(
            &export_dot(&report, GraphKind::Compactification)?,
            s.out.as_deref(),
            &format!("{stem}.compactification.dot"),
        )?,
        Format::Text => {
            let mut text = format!(
                "spec     {}\nb'       {}\nkappa    {}\ncurves   {}\nweights  {:?}\n",
                report.spec,
                c.b_prime,
                c.kappa,
                c.curve_count,
                c.graph.weights()
            );
            for st in &c.dual_strings {
                text += &format!("dual     {}: {:?}\n", st.source, st.entries);
            }
            text += &format!(
                "inertia  ({}, {}, {})\ndet      {}\n",
                c.total_inertia.positive, c.total_inertia.negative, c.total_inertia.zero, c.total_determinant
            );
            emit(&text, s.out.as_deref(), &format!("{stem}.compactification.txt"))?;
        }
    }
    Ok(report.all_pass())
}

fn run_export(s: &Settings, graph: Graph) -> Outcome {
    if s.format.is_some_and(|f| f != Format::Dot) {
        return Err(usage("export writes DOT only"));
    }
    let report = s.report()?;
    let (kind, suffix) = match graph {
        Graph::Resolution => (GraphKind::Resolution, "resolution"),
        Graph::Compactification => (GraphKind::Compactification, "compactification"),
    };
    let text = export_dot(&report, kind).map_err(|e| usage(e.to_string()))?;
    emit(&text, s.out.as_deref(), &format!("{}.{suffix}.dot", file_stem(&report.spec)))?;
    Ok(report.all_pass())
}

struct VerifyFlags {
    families: Option<String>,
    m_max: Option<i64>,
    n_max: Option<i64>,
    p_max: Option<i64>,
    hj_max: Option<i64>,
    eisenstein_max: Option<i64>,
}

fn run_verify(s: &Settings, flags: VerifyFlags, tolerance_flag: Option<f64>) -> Outcome {
    let mut config = SweepConfig::default();
    config.apply(&s.file)?;
    if let Some(f) = s.family {
        config.families = vec![f];
    }
    if let Some(f) = &flags.families {
        config.families = parse_families(f)?;
    }
    for (slot, v) in [
        (&mut config.m_max, flags.m_max),
        (&mut config.n_max, flags.n_max),
        (&mut config.p_max, flags.p_max),
        (&mut config.hj_max, flags.hj_max),
        (&mut config.eisenstein_max, flags.eisenstein_max),
    ] {
        if let Some(v) = v {
            *slot = v;
        }
    }
    if let Some(t) = tolerance_flag {
        config.tolerance = t;
    }
    if s.out.is_some() {
        config.out_dir = s.out.clone();
    }
    config.eta.extend(s.eta.iter().map(|(k, v)| (*k, *v)));
    config.validate()?;
    let start = std::time::Instant::now();
    let summary = verify(&config)?;
    log::info!("sweep took {:.2?}", start.elapsed());
    match s.format.unwrap_or(Format::Text) {
        Format::Json => print!("{}", pretty(&summary)),
        Format::Text => print!("{}", summary.to_text()),
        Format::Dot => return Err(usage("verify has no DOT output")),
    }
    Ok(summary.exit_code() == 0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();

    let outcome = settings(&cli).and_then(|s| match cli.command {
        Command::Describe => run_describe(&s),
        Command::Hj { q, p } => run_hj(&s, q, p),
        Command::Resolve => run_resolve(&s),
        Command::Compactify => run_compactify(&s),
        Command::Export { graph } => run_export(&s, graph),
        Command::Verify {
            families,
            m_max,
            n_max,
            p_max,
            hj_max,
            eisenstein_max,
        } => run_verify(
            &s,
            VerifyFlags {
                families,
                m_max,
                n_max,
                p_max,
                hj_max,
                eisenstein_max,
            },
            cli.tolerance,
        ),
    });
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Identity(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
