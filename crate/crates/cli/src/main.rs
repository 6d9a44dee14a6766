use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mcg_core::harness::{run_all, run_check, Report};
use mcg_core::presentation::{
    export, rewrite_two_generator, verify_presentation, wajnryb_presentation, RelatorStatus,
};
use mcg_core::{Calibration, CurveName, Engine, Error};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "mcg",
    version,
    about = "Mapping class group computations on a surface with one boundary component"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Genus of the surface.
    #[arg(long, value_parser = parse_genus)]
    genus: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Twist handedness; `mirror` inverts every twist.
    #[arg(long, default_value = "standard")]
    calibration: Calibration,
    /// Seed for the random pre-screen words used by equality tests.
    #[arg(long)]
    seed: Option<u64>,
}

fn parse_genus(s: &str) -> Result<u64, String> {
    match s.parse::<u64>() {
        Ok(g) if g >= 1 => Ok(g),
        _ => Err("genus must be an integer >= 1".into()),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Wajnryb,
    TwoGenerator,
}

#[derive(Subcommand)]
enum Command {
    /// Run one check or the whole verification suite.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        check: Option<String>,
        /// Include per-check timings in text output.
        #[arg(long)]
        timings: bool,
        /// Write the report here; defaults to $MCG_OUT_DIR if set, else stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a verified presentation (genus >= 3).
    Present {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = SchemeArg::TwoGenerator)]
        scheme: SchemeArg,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip verification and emit anyway.
        #[arg(long)]
        unverified: bool,
    },
    /// Order of an element modulo the boundary twist.
    Order {
        #[command(flatten)]
        common: Common,
        expr: String,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        cap: u64,
    },
    /// Image of a named curve.
    Apply {
        #[command(flatten)]
        common: Common,
        expr: String,
        curve: String,
    },
    /// Iterate an element on a named curve.
    Orbit {
        #[command(flatten)]
        common: Common,
        expr: String,
        curve: String,
        #[arg(long, default_value_t = 4)]
        steps: usize,
    },
}

/// Failure with the exit code it maps to.
struct Exit(u8, String);

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::WordTooLong { .. } | Error::Certification(_) | Error::NotAutomorphism(_) => 1,
            _ => 2,
        };
        Exit(code, e.to_string())
    }
}

fn engine(c: &Common) -> Result<Engine, Exit> {
    let g = c.genus as usize;
    let e = match c.seed {
        Some(s) => Engine::with_seed(g, c.calibration, s)?,
        None => Engine::new(g, c.calibration)?,
    };
    Ok(e)
}

/// Write to `out`, else to `$MCG_OUT_DIR/default_name`, else stdout.
fn emit(body: &str, out: Option<PathBuf>, default_name: &str) -> Result<(), Exit> {
    let path = out.or_else(|| {
        std::env::var_os("MCG_OUT_DIR")
            .filter(|d| !d.is_empty())
            .map(|d| PathBuf::from(d).join(default_name))
    });
    match path {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir)
                    .map_err(|e| Exit(2, format!("{}: {e}", dir.display())))?;
            }
            std::fs::write(&p, body).map_err(|e| Exit(2, format!("{}: {e}", p.display())))?;
            eprintln!("wrote {}", p.display());
        }
        None => print!("{body}"),
    }
    Ok(())
}

fn ext(f: Format) -> &'static str {
    match f {
        Format::Text => "txt",
        Format::Json => "json",
    }
}

fn to_json(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn verify(
    c: Common,
    check: Option<String>,
    timings: bool,
    out: Option<PathBuf>,
) -> Result<u8, Exit> {
    let e = engine(&c)?;
    let report = match check {
        Some(name) => Report {
            genus: e.genus(),
            calibration: e.calibration().to_string(),
            results: vec![run_check(&e, &name)?],
        },
        None => run_all(&e, true),
    };
    let body = match c.format {
        Format::Text => report.to_text(timings),
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
    };
    emit(
        &body,
        out,
        &format!("report-g{}.{}", c.genus, ext(c.format)),
    )?;
    Ok(u8::from(report.failures() > 0))
}

fn present(
    c: Common,
    scheme: SchemeArg,
    out: Option<PathBuf>,
    unverified: bool,
) -> Result<u8, Exit> {
    if c.genus < 3 {
        return Err(Exit(
            2,
            format!("present needs --genus >= 3, got {}", c.genus),
        ));
    }
    let base = wajnryb_presentation(c.genus as usize)?;
    let p = match scheme {
        SchemeArg::Wajnryb => base,
        SchemeArg::TwoGenerator => rewrite_two_generator(&base)?,
    };
    if !unverified {
        let e = engine(&c)?;
        let bad: Vec<String> = verify_presentation(&p, &e)?
            .into_iter()
            .filter(|r| r.status != RelatorStatus::Exact)
            .map(|r| format!("{}: {:?}", r.label, r.status))
            .collect();
        if !bad.is_empty() {
            return Err(Exit(
                1,
                format!(
                    "refusing to emit: {} relators do not verify (use --unverified)\n{}",
                    bad.len(),
                    bad.join("\n")
                ),
            ));
        }
    }
    let fmt = match c.format {
        Format::Text => "text",
        Format::Json => "json",
    };
    let name = format!("{}-g{}.{}", p.scheme.as_str(), c.genus, ext(c.format));
    emit(&export(&p, fmt)?, out, &name)?;
    Ok(0)
}

fn order(c: Common, expr: &str, cap: u64) -> Result<u8, Exit> {
    let e = engine(&c)?;
    let m = e.eval_str(expr)?;
    let hom = m.matrix().order(cap);
    let ord = e.order_mod_boundary(&m, cap);
    let body = match c.format {
        Format::Text => {
            let first = ord.map_or(format!("exceeds cap {cap}"), |n| n.to_string());
            let second = hom.map_or(format!("homology order: exceeds cap {cap}"), |n| {
                format!("homology order: {n}")
            });
            format!("{first}\n{second}\n")
        }
        Format::Json => to_json(&json!({
            "genus": c.genus,
            "expression": expr,
            "cap": cap,
            "order": ord,
            "homology_order": hom,
        })),
    };
    print!("{body}");
    Ok(0)
}

fn parse_curve(e: &Engine, s: &str) -> Result<CurveName, Exit> {
    let name: CurveName = s.parse()?;
    e.resolve_curve(name)?;
    Ok(name)
}

fn names(v: &[CurveName]) -> Vec<String> {
    v.iter().map(|n| n.to_string()).collect()
}

fn apply(c: Common, expr: &str, curve: &str) -> Result<u8, Exit> {
    let e = engine(&c)?;
    let name = parse_curve(&e, curve)?;
    let img = e.apply_to_curve(expr, name)?;
    let matches = names(&e.named_matches(&img));
    let word = img.cyclic_reduce().to_string();
    let body = match c.format {
        Format::Text => {
            let m = if matches.is_empty() {
                "none".to_string()
            } else {
                matches.join(" ")
            };
            format!("{word}\nmatches: {m}\n")
        }
        Format::Json => to_json(&json!({
            "genus": c.genus,
            "expression": expr,
            "curve": name.to_string(),
            "image": word,
            "matches": matches,
        })),
    };
    print!("{body}");
    Ok(0)
}

fn orbit(c: Common, expr: &str, curve: &str, steps: usize) -> Result<u8, Exit> {
    let e = engine(&c)?;
    let name = parse_curve(&e, curve)?;
    let f = e.eval_str(expr)?;
    let mut cur = e.resolve_curve(name)?.word().clone();
    let mut rows = Vec::with_capacity(steps);
    for step in 1..=steps {
        cur = f.apply(&cur)?;
        rows.push((
            step,
            names(&e.named_matches(&cur)),
            cur.cyclic_reduce().to_string(),
        ));
    }
    let body = match c.format {
        Format::Text => rows
            .iter()
            .map(|(s, m, w)| {
                let m = if m.is_empty() {
                    "-".to_string()
                } else {
                    m.join(",")
                };
                format!("{s}  {m}  {w}\n")
            })
            .collect(),
        Format::Json => to_json(&json!({
            "genus": c.genus,
            "expression": expr,
            "curve": name.to_string(),
            "steps": rows
                .iter()
                .map(|(s, m, w)| json!({"step": s, "matches": m, "image": w}))
                .collect::<Vec<_>>(),
        })),
    };
    print!("{body}");
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match cli.command {
        Command::Verify {
            common,
            check,
            timings,
            out,
        } => verify(common, check, timings, out),
        Command::Present {
            common,
            scheme,
            out,
            unverified,
        } => present(common, scheme, out, unverified),
        Command::Order { common, expr, cap } => order(common, &expr, cap),
        Command::Apply {
            common,
            expr,
            curve,
        } => apply(common, &expr, &curve),
        Command::Orbit {
            common,
            expr,
            curve,
            steps,
        } => orbit(common, &expr, &curve, steps),
    };
    match r {
        Ok(code) => ExitCode::from(code),
        Err(Exit(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
