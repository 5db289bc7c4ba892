mod render;

use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use tunnelcalc::{
    coincident, middle_tunnel_sequence, multiple_splittings, normalize, position_word, split,
    torus_braid_word, torus_middle_matches, SlopeInvariants, SplittingKind, SplittingSpec,
    TorusKnot, DEFAULT_SEARCH_BOUND,
};

#[derive(Parser)]
#[command(
    name = "tunnelcalc",
    version,
    about = "Invariants of middle tunnels of torus knots and of their splittings"
)]
struct Cli {
    /// Print line-delimited JSON records instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cabling sequence and invariants of the middle tunnel of T(a,b).
    #[command(allow_negative_numbers = true)]
    Middle { a: i64, b: i64 },

    /// A splitting construction on the middle tunnel of T(a,b).
    #[command(allow_negative_numbers = true)]
    Split {
        a: i64,
        b: i64,
        /// drop-lambda, lift-lambda, drop-rho or lift-rho
        kind: SplittingKind,
        /// Number of half-twists; must be nonzero.
        n: i64,
    },

    /// Decide whether two splittings on T(a,b) produce the same tunnel.
    #[command(allow_negative_numbers = true)]
    Classify {
        a: i64,
        b: i64,
        kind1: SplittingKind,
        n1: i64,
        kind2: SplittingKind,
        n2: i64,
    },

    /// Every family of coinciding splittings on normalized bases T(a,b), a <= max-a.
    Atlas {
        #[arg(long, default_value_t = 30)]
        max_a: i64,
        /// Twist counts range over [-twists, twists] without 0.
        #[arg(long, default_value_t = 3)]
        twists: i64,
    },

    /// Braid word of T(a,b), or with KIND and N the position word of a splitting.
    #[command(allow_negative_numbers = true)]
    Braid {
        a: i64,
        b: i64,
        kind: Option<SplittingKind>,
        #[arg(requires = "kind")]
        n: Option<i64>,
        /// Print omega(K_U) s^n omega(K_L)^-1 instead of the software input form.
        #[arg(long)]
        formula: bool,
    },

    /// Find the torus knot whose middle tunnel has the given slope invariants.
    #[command(allow_negative_numbers = true)]
    Identify {
        /// Slope invariants, e.g. "[1/3], 5" or `[1/3] 5`.
        #[arg(required = true, num_args = 1..)]
        slopes: Vec<String>,
        /// Largest first parameter searched.
        #[arg(long, env = "TUNNELCALC_SEARCH_BOUND", default_value_t = DEFAULT_SEARCH_BOUND)]
        bound: i64,
    },

    /// Normal form T(a,b) with a > b >= 1 of a torus knot.
    #[command(allow_negative_numbers = true)]
    Normalize { a: i64, b: i64 },
}

fn knot(a: i64, b: i64) -> Result<TorusKnot> {
    TorusKnot::new(a, b).with_context(|| format!("invalid knot parameters a = {a}, b = {b}"))
}

fn splitting(base: TorusKnot, kind: SplittingKind, n: i64, name: &str) -> Result<SplittingSpec> {
    SplittingSpec::new(base, kind, n).with_context(|| format!("invalid twist count {name} = {n}"))
}

fn emit(json: bool, record: serde_json::Value, text: impl FnOnce() -> String) {
    if json {
        println!("{record}");
    } else {
        println!("{}", text());
    }
}

fn run(cli: Cli) -> Result<()> {
    let json = cli.json;
    match cli.command {
        Command::Middle { a, b } => {
            let k = knot(a, b)?;
            let mt = middle_tunnel_sequence(&k)
                .with_context(|| format!("cannot build the middle tunnel of {k}"))?;
            let d = mt.descriptor()?;
            let record = json!({
                "command": "middle",
                "knot": k,
                "continued_fraction": mt.associated.continued_fraction,
                "continued_fraction_text": mt.associated.continued_fraction.to_string(),
                "word": mt.associated.word.to_string(),
                "word_factored": mt.associated.word.factored(),
                "matrix": mt.associated.matrix,
                "negative_branch": mt.associated.negative_branch,
                "steps": d.steps,
                "invariants": d.invariants,
                "classification": d.classification,
            });
            emit(json, record, || render::middle(&mt, &d));
        }
        Command::Split { a, b, kind, n } => {
            let spec = splitting(knot(a, b)?, kind, n, "n")?;
            let d = split(&spec)?;
            let record = json!({
                "command": "split",
                "spec": spec,
                "descriptor": d,
            });
            emit(json, record, || render::split(&spec, &d));
        }
        Command::Classify {
            a,
            b,
            kind1,
            n1,
            kind2,
            n2,
        } => {
            let base = knot(a, b)?;
            let first = splitting(base, kind1, n1, "n1")?;
            let second = splitting(base, kind2, n2, "n2")?;
            let verdict = coincident(&first, &second)?;
            let record = json!({
                "command": "classify",
                "first": first,
                "second": second,
                "same": verdict.same_tunnel(),
                "result": verdict,
            });
            emit(json, record, || render::verdict(&verdict));
        }
        Command::Atlas { max_a, twists } => {
            if twists < 1 {
                bail!("--twists must be at least 1, got {twists}");
            }
            for a in 3..=max_a {
                for b in 2..a {
                    let Ok(base) = TorusKnot::new(a, b) else {
                        continue;
                    };
                    for family in multiple_splittings(&base, -twists..=twists)? {
                        let record = json!({ "command": "atlas", "base": base, "family": family });
                        emit(json, record, || render::family(&base, &family));
                    }
                }
            }
        }
        Command::Braid {
            a,
            b,
            kind,
            n,
            formula,
        } => match kind {
            None => {
                let w = torus_braid_word(a, b)
                    .with_context(|| format!("invalid braid parameters a = {a}, b = {b}"))?;
                let record = json!({ "command": "braid", "a": a, "b": b, "word": w });
                emit(json, record, || w.to_string());
            }
            Some(kind) => {
                let Some(n) = n else {
                    bail!("missing twist count N for splitting kind {kind}")
                };
                let spec = SplittingSpec {
                    base: knot(a, b)?,
                    kind,
                    n,
                };
                let pw = position_word(&spec)?;
                if pw.unverified && !json {
                    eprintln!("note: only the drop-rho position word has been checked against reference output");
                }
                let record = json!({
                    "command": "braid",
                    "spec": spec,
                    "input": pw.to_string(),
                    "formula": pw.formula_text(),
                    "reduced": pw.word(),
                    "position": pw,
                });
                emit(json, record, || {
                    if formula {
                        pw.formula_text()
                    } else {
                        pw.to_string()
                    }
                });
            }
        },
        Command::Identify { slopes, bound } => {
            if bound < 3 {
                bail!("search bound must be at least 3, got {bound}");
            }
            let text = slopes.join(",");
            let target: SlopeInvariants = text
                .parse()
                .with_context(|| format!("cannot parse slope invariants `{text}`"))?;
            if target.is_empty() {
                bail!("no slope invariants given");
            }
            let matches = torus_middle_matches(&target, bound);
            let record = json!({
                "command": "identify",
                "slopes": target,
                "bound": bound,
                "matches": matches,
                "identified": (matches.len() == 1).then(|| matches[0]),
            });
            emit(json, record, || render::identify(&target, bound, &matches));
        }
        Command::Normalize { a, b } => {
            let k = knot(a, b)?;
            let nf = normalize(&k);
            let record = json!({ "command": "normalize", "input": k, "normalization": nf });
            emit(json, record, || render::normalization(&k, &nf));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
