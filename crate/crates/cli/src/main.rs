use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use twisted_floer::complexes::ComplexDoc;
use twisted_floer::excision::{derive, Derivation, Family, FamilySpec};
use twisted_floer::rings::parse_coefficient;
use twisted_floer::snf::{signature, smith_normal_form};
use twisted_floer::verify::{render_markdown, run_all};
use twisted_floer::{Error, IntMatrix, Result, Q, Z};

/// Twisted Heegaard Floer homology of 0-surgeries, computed exactly.
#[derive(Debug, Parser)]
#[command(name = "twisted-floer", version)]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Markdown)]
    format: Format,

    /// Write the report to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Markdown,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// 0-surgery on the twist knot D_-(U, n); negative n gives the mirror.
    TwistKnot(OneParam),
    /// 0-surgery on the n-twisted Whitehead link.
    Whitehead(OneParam),
    /// 0-surgery on the (m, n)-twisted Borromean rings.
    Borromean(TwoParams),
    /// 0-surgery on the 2-bridge link C(m, clasp, n).
    TwoBridge(TwoBridgeParams),
    /// Run the acceptance sweep and print a pass/fail table.
    Verify,
    /// Smith normal form and signature of an integer matrix.
    Snf(SnfArgs),
    /// Homology of a complex given as a JSON document.
    ComplexHomology {
        /// JSON complex document.
        input: PathBuf,
    },
}

#[derive(Debug, Args)]
struct Common {
    /// Weight of the twisting class, an integer or "p/q".
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    d: String,

    /// Include the derivation log in the report.
    #[arg(long)]
    log: bool,

    /// Read the family from a TOML or JSON document instead of the flags.
    #[arg(long, value_name = "FILE")]
    spec: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct OneParam {
    #[arg(long, allow_hyphen_values = true, required_unless_present = "spec")]
    n: Option<i64>,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct TwoParams {
    #[arg(long, allow_hyphen_values = true, required_unless_present = "spec")]
    m: Option<i64>,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "spec")]
    n: Option<i64>,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct TwoBridgeParams {
    #[arg(long, allow_hyphen_values = true, required_unless_present = "spec")]
    m: Option<i64>,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "spec")]
    n: Option<i64>,
    #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
    clasp: i64,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct SnfArgs {
    /// Matrix as a JSON array of rows, e.g. "[[-1,1],[1,0]]".
    #[arg(long, allow_hyphen_values = true, conflicts_with = "input")]
    matrix: Option<String>,
    /// File holding the matrix as JSON.
    input: Option<PathBuf>,
}

#[derive(Debug, Serialize, Deserialize)]
struct SnfReport {
    diagonal: Vec<String>,
    rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    signature: Option<i64>,
}

#[derive(Debug, Serialize, Deserialize)]
struct ErrorReport {
    error: String,
    message: String,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::Spec(format!("cannot read {}: {e}", path.display())))
}

fn load_spec(path: &Path) -> Result<FamilySpec> {
    let text = read(path)?;
    if path.extension().is_some_and(|e| e == "json") {
        FamilySpec::from_json(&text)
    } else {
        FamilySpec::from_toml(&text)
    }
}

fn family_spec(family: Option<Family>, common: &Common, expected: &str) -> Result<FamilySpec> {
    if let Some(path) = &common.spec {
        let spec = load_spec(path)?;
        let name = serde_json::to_value(&spec.family)?["family"].clone();
        if name != expected {
            return Err(Error::Spec(format!(
                "{} describes {name}, not {expected}",
                path.display()
            )));
        }
        return Ok(spec);
    }
    let family = family.expect("clap requires the parameters without --spec");
    let weight: Q = parse_coefficient(&common.d)?;
    let spec = FamilySpec::new(family, weight);
    spec.validate()?;
    Ok(spec)
}

fn derivation_markdown(d: &Derivation, log: bool) -> String {
    let mut out = format!("## {}\n\n{}\n", d.spec.family.name(), d.result);
    if log {
        out.push_str("\n| step | anchor | input | output |\n|---|---|---|---|\n");
        for s in d.log.steps() {
            out.push_str(&format!(
                "| {} | {} | {} | {} |\n",
                s.step, s.anchor, s.input_summary, s.output_summary
            ));
        }
    }
    out
}

fn run_family(spec: FamilySpec, log: bool, format: Format) -> Result<(String, bool)> {
    let d = derive(&spec)?;
    let text = match (format, log) {
        (Format::Json, false) => serde_json::to_string(&d.result)?,
        (Format::Json, true) => serde_json::to_string(&d)?,
        (Format::Markdown, _) => derivation_markdown(&d, log),
    };
    Ok((text, true))
}

fn snf(args: &SnfArgs, format: Format) -> Result<String> {
    let text = match (&args.matrix, &args.input) {
        (Some(m), _) => m.clone(),
        (None, Some(path)) => read(path)?,
        (None, None) => return Err(Error::Spec("snf needs --matrix or an input file".into())),
    };
    let rows: Vec<Vec<i64>> = serde_json::from_str(&text)?;
    let rows: Vec<Vec<Z>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(Z::from).collect())
        .collect();
    let m = IntMatrix::try_from_rows(rows)?;
    let f = smith_normal_form(&m);
    let symmetric = m.is_square() && m == m.transpose();
    let report = SnfReport {
        diagonal: f.diagonal.iter().map(ToString::to_string).collect(),
        rank: f.rank,
        signature: if symmetric {
            Some(signature(&m)?)
        } else {
            None
        },
    };
    Ok(match format {
        Format::Json => serde_json::to_string(&report)?,
        Format::Markdown => {
            let mut out = format!(
                "diag({})\nrank {}\n",
                report.diagonal.join(", "),
                report.rank
            );
            if let Some(s) = report.signature {
                out.push_str(&format!("signature {s}\n"));
            }
            out
        }
    })
}

fn execute(cli: &Cli) -> Result<(String, bool)> {
    let format = cli.format;
    match &cli.command {
        Command::TwistKnot(p) => {
            let spec = family_spec(
                p.n.map(|n| Family::TwistKnotZeroSurgery { n }),
                &p.common,
                "twist_knot_zero_surgery",
            )?;
            run_family(spec, p.common.log, format)
        }
        Command::Whitehead(p) => {
            let spec = family_spec(
                p.n.map(|n| Family::WhiteheadZeroSurgery { n }),
                &p.common,
                "whitehead_zero_surgery",
            )?;
            run_family(spec, p.common.log, format)
        }
        Command::Borromean(p) => {
            let family =
                p.m.zip(p.n)
                    .map(|(m, n)| Family::BorromeanZeroSurgery { m, n });
            let spec = family_spec(family, &p.common, "borromean_zero_surgery")?;
            run_family(spec, p.common.log, format)
        }
        Command::TwoBridge(p) => {
            let clasp = p.clasp;
            let family = p.m.zip(p.n).map(|(m, n)| Family::TwoBridge { m, clasp, n });
            let spec = family_spec(family, &p.common, "two_bridge")?;
            run_family(spec, p.common.log, format)
        }
        Command::Verify => {
            let results = run_all();
            let ok = results.iter().all(|r| r.passed);
            let text = match format {
                Format::Json => serde_json::to_string(&results)?,
                Format::Markdown => render_markdown(&results),
            };
            Ok((text, ok))
        }
        Command::Snf(args) => Ok((snf(args, format)?, true)),
        Command::ComplexHomology { input } => {
            let h = ComplexDoc::from_json(&read(input)?)?.homology()?;
            let text = match format {
                Format::Json => serde_json::to_string(&h)?,
                Format::Markdown => format!("{h}\n"),
            };
            Ok((text, true))
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    let text = if text.ends_with('\n') {
        text.to_string()
    } else {
        format!("{text}\n")
    };
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::Spec(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = execute(&cli).and_then(|(text, ok)| {
        emit(&text, cli.out.as_deref())?;
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            match cli.format {
                Format::Json => {
                    let report = ErrorReport {
                        error: e.kind().into(),
                        message: e.to_string(),
                    };
                    eprintln!(
                        "{}",
                        serde_json::to_string(&report).expect("report serializes")
                    );
                }
                Format::Markdown => eprintln!("error ({}): {e}", e.kind()),
            }
            ExitCode::FAILURE
        }
    }
}
