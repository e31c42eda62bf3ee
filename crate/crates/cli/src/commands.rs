//! Subcommands. Each returns an [`Outcome`] rather than exiting so tests can
//! drive them in-process.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use gluck_core::fiber::{self, CableOfTwistSpun, KnotName, SeifertMatrix};
use gluck_core::groups::{self, abelianization, complement_presentation, hom_count, MAX_HOM_GENERATORS};
use gluck_core::kirby::KirbyDiagram;
use gluck_core::random::rng;
use gluck_core::satellite::{
    cable_with_crosscap, classify_gluck, crosscap_reduce, pipeline_kirby, pipeline_split, random_satellite,
    unit_knot_reduce, viro_family, CompanionDescriptor, KnotExpression, PatternKind, SatelliteSpec,
};
use gluck_core::Error;

use crate::format::{self, DiagramFile};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "gluck", version, about = "Gluck twists along satellite 2-knots")]
pub struct Cli {
    /// Print `key=value` lines instead of a table.
    #[arg(long, global = true)]
    pub kv: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Split into pattern plus copies, cancel copies in pairs.
    Split,
    /// Push a crosscap along the cable and cancel.
    Crosscap,
    /// Unit 2-knot rewrite.
    Unit,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Surface and group invariants of a diagram file (`-` for stdin).
    Invariants {
        file: PathBuf,
        /// Largest symmetric group for homomorphism counts.
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u8).range(3..=5))]
        max_sym: u8,
    },
    /// Gluck twist along a satellite: +1 circle, slide gamma off, classify.
    Gluck { file: PathBuf },
    /// Rewriting reductions with a step trace.
    Reduce {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
    /// Branched cover and cable fiber homology.
    Fiber {
        #[arg(long, default_value = "trefoil")]
        knot: String,
        /// Seifert matrix as rows separated by `;`, overriding --knot.
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
        /// Cover degree, also the twist of the spin.
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Report the fiber of this cable of the twist spin.
        #[arg(long)]
        cable_degree: Option<usize>,
    },
    /// Even cables of the 2-twist spin of a knot.
    Viro {
        #[arg(long, default_value = "trefoil")]
        knot: String,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
    /// Three-pipeline agreement on random satellites.
    Verify {
        #[arg(long, default_value_t = 200)]
        cases: u64,
        #[arg(long, env = "GLUCK_SEED", default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: u8, stdout: String, msg: impl Into<String>) -> Self {
        Outcome { code, stdout, stderr: format!("error: {}\n", msg.into()) }
    }
}

struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Consistency(_)) { EXIT_FAILED } else { EXIT_USAGE };
        Fail(code, e.to_string())
    }
}

/// Ordered report rows, rendered as an aligned table or `key=value` lines.
#[derive(Default)]
struct Report {
    rows: Vec<(String, String)>,
}

impl Report {
    fn add(&mut self, key: &str, value: impl ToString) {
        self.rows.push((key.to_string(), value.to_string()));
    }

    fn render(&self, kv: bool) -> String {
        let mut out = String::new();
        let w = self.rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in &self.rows {
            if kv {
                let _ = writeln!(out, "{k}={v}");
            } else {
                let _ = writeln!(out, "{k:<w$}  {v}");
            }
        }
        out
    }
}

fn load(path: &PathBuf) -> Result<DiagramFile, Fail> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Fail(EXIT_USAGE, format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Fail(EXIT_USAGE, format!("{}: {e}", path.display())))?
    };
    format::parse(&text).map_err(|e| Fail(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn spec_of(f: &DiagramFile) -> Result<SatelliteSpec, Fail> {
    let companion = f.companion.clone().unwrap_or_else(|| CompanionDescriptor::opaque("C"));
    let pattern = f.pattern.clone().unwrap_or_else(|| PatternKind::opaque("P"));
    Ok(SatelliteSpec::new(f.diagram.clone(), pattern, companion)?)
}

fn knot_matrix(knot: &str, matrix: &Option<String>) -> Result<(String, SeifertMatrix), Fail> {
    match matrix {
        Some(m) => {
            let text = format!("companion twist-spun 2 matrix \"{m}\"\ncomponent c\n");
            let f = format::parse(&text).map_err(|e| Fail(EXIT_USAGE, format!("--matrix: {}", e.kind)))?;
            match f.companion {
                Some(CompanionDescriptor::TwistSpun { knot, .. }) => Ok(("matrix".into(), knot.seifert()?)),
                _ => unreachable!("companion line always parses to a twist spin"),
            }
        }
        None => {
            let k: KnotName = knot.parse()?;
            Ok((k.to_string(), k.seifert()?))
        }
    }
}

fn invariants(f: &DiagramFile, max_sym: u8, kv: bool) -> Result<String, Fail> {
    let d = &f.diagram;
    let mut r = Report::default();
    if let Some(n) = &f.name {
        r.add("name", n);
    }
    r.add("unlink_components", d.num_components());
    r.add("bands", d.num_bands());
    r.add("surface_components", d.surface_components());
    r.add("euler_characteristic", d.euler_characteristic()?);
    r.add("orientable", d.orientable());
    let two_knot = d.is_two_knot()?;
    r.add("two_knot", two_knot);
    if d.gamma.is_some() {
        r.add("degree", d.degree()?);
    }
    let p = complement_presentation(d)?;
    r.add("presentation", &p);
    r.add("h1", abelianization(&p));
    for n in 3..=max_sym as usize {
        let v = if p.generators <= MAX_HOM_GENERATORS {
            hom_count(&p, n)?.to_string()
        } else {
            format!("skipped (more than {MAX_HOM_GENERATORS} generators)")
        };
        r.add(&format!("hom_s{n}"), v);
    }
    let alex = match groups::fox_alexander(&p) {
        Ok(a) => a.to_string(),
        Err(e) => format!("n/a ({e})"),
    };
    r.add("alexander", alex);
    Ok(r.render(kv))
}

fn gluck(f: &DiagramFile, kv: bool) -> Result<String, Fail> {
    let spec = spec_of(f)?;
    let kd = KirbyDiagram::handle_decomposition(&spec.pattern)?.gluck_twist(0)?;
    let gamma = kd.gamma.clone().expect("validated spec has gamma");
    let n = kd.gamma_normalize()?;
    let report = classify_gluck(&spec)?;
    let parity = (n.diagram.gamma.as_ref().unwrap().framing - gamma.framing).rem_euclid(2);
    let mut r = Report::default();
    if let Some(name) = &f.name {
        r.add("name", name);
    }
    r.add("dotted_circles", kd.dotted.len());
    r.add("two_handles", kd.handles.len());
    r.add("gluck_circle", format!("+1 on a meridian of {}", kd.dotted[0]));
    r.add("gamma_word", format::word_text(&spec.pattern, &gamma.word));
    r.add("gamma_framing", gamma.framing);
    r.add("degree", spec.degree());
    r.add("slides", n.slides);
    r.add("final_framing", n.diagram.gamma.as_ref().unwrap().framing);
    r.add("parity", parity);
    r.add("class", &report.class);
    r.add("pipelines_agree", true);
    r.add("trivial", report.trivial);
    let mut out = r.render(kv);
    if !kv {
        let _ = writeln!(out, "parity {parity}; Gluck twist ≅ Gluck along {}", report.class.knot);
    }
    Ok(out)
}

fn trace(out: &mut String, title: &str, steps: &[String], result: &str, kv: bool) {
    if kv {
        let key = title.replace(' ', "_");
        let _ = writeln!(out, "{key}.steps={}", steps.len());
        for (i, s) in steps.iter().enumerate() {
            let _ = writeln!(out, "{key}.step{}={s}", i + 1);
        }
        let _ = writeln!(out, "{key}.result={result}");
    } else {
        let _ = writeln!(out, "{title}:");
        for (i, s) in steps.iter().enumerate() {
            let _ = writeln!(out, "  {:>2}. {s}", i + 1);
        }
        let _ = writeln!(out, "  => {result}");
    }
}

fn reduce(f: &DiagramFile, method: Method, kv: bool) -> Result<String, Fail> {
    let mut out = String::new();
    let companion = f.companion.clone().unwrap_or_else(|| CompanionDescriptor::opaque("C"));
    if !f.diagram.crosscaps().is_empty() {
        if !matches!(method, Method::Crosscap | Method::All) {
            return Err(Fail(EXIT_USAGE, "a diagram with a crosscap only supports --method crosscap".into()));
        }
        let run = crosscap_reduce(&f.diagram, &companion)?;
        let mut steps = run.steps.clone();
        steps.push(format!("untwists: {}, cancellations: {}", run.untwists, run.cancels));
        trace(&mut out, "crosscap", &steps, &run.expression.to_string(), kv);
        return Ok(out);
    }
    let spec = spec_of(f)?;
    if matches!(method, Method::Split | Method::All) {
        let t = pipeline_split(&spec)?;
        trace(&mut out, "split", &t.steps, &t.value.to_string(), kv);
    }
    if matches!(method, Method::Crosscap | Method::All) {
        let run = crosscap_reduce(&cable_with_crosscap(spec.degree())?, &companion)?;
        let mut steps = vec![format!("cable({}, C) # R", spec.degree())];
        steps.extend(run.steps.iter().cloned());
        steps.push(format!("untwists: {}, cancellations: {}", run.untwists, run.cancels));
        trace(&mut out, "crosscap", &steps, &run.expression.to_string(), kv);
    }
    if matches!(method, Method::Unit | Method::All) {
        let t = unit_knot_reduce(&spec)?;
        trace(&mut out, "unit", &t.steps, &t.value.to_string(), kv);
    }
    if method == Method::All {
        let k = pipeline_kirby(&spec)?;
        trace(&mut out, "kirby", &k.steps, &k.value.to_string(), kv);
    }
    Ok(out)
}

fn fiber_cmd(knot: &str, matrix: &Option<String>, n: usize, cable: Option<usize>, kv: bool) -> Result<String, Fail> {
    let (name, v) = knot_matrix(knot, matrix)?;
    let h = fiber::branched_cover_homology(&v, n)?;
    let mut r = Report::default();
    r.add("knot", name);
    r.add("n", n);
    r.add("alexander", v.alexander());
    r.add("cover_h1", &h);
    r.add(
        "cover_order",
        match fiber::order_via_alexander(&v.alexander(), n)? {
            fiber::CoverOrder::Finite(o) => o.to_string(),
            fiber::CoverOrder::Infinite => "infinite".into(),
        },
    );
    if let Some(m) = cable {
        let fh = fiber::cable_fiber_homology(&CableOfTwistSpun::new(n, m, v)?)?;
        r.add("cable_degree", m);
        r.add("fiber_h1", &fh);
        r.add("not_ribbon", fiber::ribbon_obstruction(&fh));
    }
    Ok(r.render(kv))
}

fn verify(cases: u64, seed: u64, kv: bool) -> (bool, String) {
    let mut g = rng(seed);
    let mut failures = Vec::new();
    for i in 0..cases {
        let spec = random_satellite(&mut g);
        let mut expect = vec![spec.pattern_kind.summand()];
        if spec.degree().rem_euclid(2) == 1 {
            expect.push(spec.companion.summand());
        }
        match classify_gluck(&spec) {
            Ok(r) if r.class.knot == KnotExpression::new(expect.clone()) => {}
            Ok(r) => failures.push(format!("case {i}: got {} expected {}", r.class, KnotExpression::new(expect))),
            Err(e) => failures.push(format!("case {i}: {e}")),
        }
    }
    let mut r = Report::default();
    r.add("cases", cases);
    r.add("seed", seed);
    r.add("passed", cases - failures.len() as u64);
    r.add("failed", failures.len());
    if let Some(first) = failures.first() {
        r.add("first_failure", first);
    }
    (failures.is_empty(), r.render(kv))
}

fn dispatch(cli: &Cli) -> Result<Outcome, Fail> {
    let kv = cli.kv;
    Ok(match &cli.command {
        Command::Invariants { file, max_sym } => Outcome::ok(invariants(&load(file)?, *max_sym, kv)?),
        Command::Gluck { file } => Outcome::ok(gluck(&load(file)?, kv)?),
        Command::Reduce { file, method } => Outcome::ok(reduce(&load(file)?, *method, kv)?),
        Command::Fiber { knot, matrix, n, cable_degree } => Outcome::ok(fiber_cmd(knot, matrix, *n, *cable_degree, kv)?),
        Command::Viro { knot, max_n } => {
            let k: KnotName = knot.parse()?;
            let report = viro_family(k, *max_n)?;
            let text = if kv { report.machine_lines() } else { report.table() };
            if report.passed() {
                Outcome::ok(text)
            } else {
                Outcome::fail(EXIT_FAILED, text, "family checks failed")
            }
        }
        Command::Verify { cases, seed } => {
            let (ok, text) = verify(*cases, *seed, kv);
            if ok {
                Outcome::ok(text)
            } else {
                Outcome::fail(EXIT_FAILED, text, "pipeline disagreement")
            }
        }
    })
}

/// Runs one invocation.
pub fn run(cli: &Cli) -> Outcome {
    dispatch(cli).unwrap_or_else(|Fail(code, msg)| Outcome::fail(code, String::new(), msg))
}
