//! `mindeg`: command line for dominance-order minimal degenerations, their
//! singularity invariants, and the quasi-minimal Weyl-module data.
//!
//! Every command emits one JSON document `{command, input, result}` on
//! standard output (keys sorted, newline-terminated, byte-stable across
//! runs). Usage problems exit 2 with a message on standard error; domain
//! errors exit 3 with `{"error": …}` on standard output.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mindeg::degeneration::{classify_pair, enumerate_minimal_degenerations_below, MinimalDegeneration};
use mindeg::root::IrreducibleType;
use mindeg::singularity::{
    catalog, classify_singularity, codimension, conjecture_audit, decomposition_profile,
    equivalence_obstruction, ic_polynomial, minimal_orbit_torsion_primes,
    nonsmoothness_certificate, NonSmoothnessWitness, Obstruction, SingularityInvariants,
};
use mindeg::weyl::{ac_gram_matrix, decomposition_number_ac, elementary_divisors, linkage_bound};
use mindeg::{build_root_datum, Error, Weight};

#[derive(Parser)]
#[command(
    name = "mindeg",
    version,
    about = "Minimal degenerations of dominant weights: classification, stalk \
             polynomials, decomposition profiles, linkage and torsion audits"
)]
struct Cli {
    /// Output rendering; the table form is derived from the same JSON document
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct PairArgs {
    /// Root datum label, e.g. B4, G2 or A2xA1
    #[arg(long = "type")]
    datum: String,

    /// Comma-separated coefficients of λ in the fundamental-weight basis
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,

    /// Comma-separated coefficients of μ
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether λ ⤳ μ is a minimal degeneration and name its case
    Classify {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// List every minimal degeneration downward from λ
    Degenerations {
        /// Root datum label, e.g. B4, G2 or A2xA1
        #[arg(long = "type")]
        datum: String,
        /// Comma-separated coefficients of λ
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Decomposition-number profile of a minimal degeneration
    Profile {
        #[command(flatten)]
        pair: PairArgs,
        /// Bound for the reported nonzero primes
        #[arg(long, default_value_t = 100)]
        max_prime: u64,
    },
    /// Rational stalk polynomial of a minimal degeneration
    Ic {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Produce a witness that the degeneration is not smooth
    CertifyNonsmooth {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Search for an invariant separating two named singularities
    Distinguish {
        /// a2, c2, ac2, ag2, cg2, an:<n> or acn:<n>
        #[arg(long)]
        left: String,
        /// Same names as --left
        #[arg(long)]
        right: String,
    },
    /// Gram matrix of the distinguished weight-space basis in type Bₙ
    Gram {
        #[arg(long)]
        n: usize,
    },
    /// Decomposition number of the quasi-minimal Bₙ pair at a prime
    DecompAc {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: u64,
    },
    /// Strong-linkage divisibility bound ⟨λ+ρ, β∨⟩ − 1
    Linkage {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Torsion primes of the minimal orbit against the bad primes of the type
    TorsionAudit {
        /// Irreducible type label, e.g. E8
        #[arg(long = "type")]
        datum: String,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::RankMismatch { .. } | Error::NotPrime(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Domain(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli.command) {
        Ok(doc) => {
            match cli.format {
                Format::Json => println!("{doc}"),
                Format::Table => print!("{}", render_table(&doc)),
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            println!("{}", json!({ "error": msg }));
            ExitCode::from(3)
        }
    }
}

fn parse_coeffs(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Failure::Usage(format!("bad weight literal {s:?}")))
        })
        .collect()
}

/// Parses `--type/--lambda/--mu` into weights, echoing the normalized input.
fn parse_pair(p: &PairArgs) -> Result<(Weight, Weight, Value), Failure> {
    let datum = build_root_datum(&p.datum)?;
    let lam = parse_coeffs(&p.lambda)?;
    let mu = parse_coeffs(&p.mu)?;
    let lambda = datum.weight(&lam)?;
    let mu_w = datum.weight(&mu)?;
    let input = json!({ "type": datum.spec(), "lambda": lam, "mu": mu });
    Ok((lambda, mu_w, input))
}

fn classified(lambda: &Weight, mu: &Weight) -> Result<MinimalDegeneration, Failure> {
    classify_pair(lambda, mu)?.ok_or_else(|| Error::NotMinimalDegeneration.into())
}

fn degeneration_value(deg: &MinimalDegeneration) -> Result<Value, Failure> {
    Ok(json!({
        "case": deg.case().label(),
        "beta": deg.beta().coeffs(),
        "support": deg.support().iter().copied().collect::<Vec<usize>>(),
        "support_type": deg.support_type().label(),
        "singularity": classify_singularity(deg).to_string(),
        "codimension": codimension(deg)?,
    }))
}

fn named_invariants(name: &str) -> Result<SingularityInvariants, Failure> {
    let built = match name {
        "a2" => catalog::minimal_a(2),
        "c2" => catalog::minimal_c2(),
        "ac2" => catalog::quasi_ac(2),
        "ag2" => catalog::quasi_ag2(),
        "cg2" => catalog::quasi_cg2(),
        other => {
            let parsed = other
                .strip_prefix("an:")
                .map(|n| (n, true))
                .or_else(|| other.strip_prefix("acn:").map(|n| (n, false)));
            let Some((digits, is_a)) = parsed else {
                return Err(Failure::Usage(format!(
                    "unknown singularity {name:?}; expected a2, c2, ac2, ag2, cg2, an:<n> or acn:<n>"
                )));
            };
            let n: usize = digits
                .parse()
                .map_err(|_| Failure::Usage(format!("bad rank in {name:?}")))?;
            if is_a {
                catalog::minimal_a(n)
            } else {
                catalog::quasi_ac(n)
            }
        }
    };
    built.map_err(Failure::from)
}

fn dispatch(command: &Command) -> Result<Value, Failure> {
    match command {
        Command::Classify { pair } => {
            let (lambda, mu, input) = parse_pair(pair)?;
            let result = match classify_pair(&lambda, &mu)? {
                Some(deg) => {
                    let mut v = degeneration_value(&deg)?;
                    v.as_object_mut()
                        .expect("object")
                        .insert("minimal".into(), json!(true));
                    v
                }
                None => json!({ "minimal": false }),
            };
            Ok(json!({ "command": "classify", "input": input, "result": result }))
        }
        Command::Degenerations { datum, lambda } => {
            let datum = build_root_datum(datum)?;
            let lam = parse_coeffs(lambda)?;
            let lambda = datum.weight(&lam)?;
            let list = enumerate_minimal_degenerations_below(&lambda)?
                .iter()
                .map(|deg| {
                    let mut v = degeneration_value(deg)?;
                    v.as_object_mut()
                        .expect("object")
                        .insert("mu".into(), json!(deg.mu().coeffs()));
                    Ok(v)
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            let input = json!({ "type": datum.spec(), "lambda": lam });
            Ok(json!({ "command": "degenerations", "input": input, "result": list }))
        }
        Command::Profile { pair, max_prime } => {
            let (lambda, mu, input) = parse_pair(pair)?;
            let deg = classified(&lambda, &mu)?;
            let profile = decomposition_profile(&deg);
            let result = json!({
                "case": deg.case().label(),
                "modulus_data": profile.moduli(),
                "nonzero_primes": profile.nonzero_primes_upto(*max_prime),
                "nonzero_primes_upto": max_prime,
            });
            Ok(json!({ "command": "profile", "input": input, "result": result }))
        }
        Command::Ic { pair } => {
            let (lambda, mu, input) = parse_pair(pair)?;
            let deg = classified(&lambda, &mu)?;
            let ic = ic_polynomial(&deg);
            let result = json!({
                "case": deg.case().label(),
                "coefficients": ic.coeffs(),
                "rendered": ic.to_string(),
            });
            Ok(json!({ "command": "ic", "input": input, "result": result }))
        }
        Command::CertifyNonsmooth { pair } => {
            let (lambda, mu, input) = parse_pair(pair)?;
            let deg = classified(&lambda, &mu)?;
            let result = match nonsmoothness_certificate(&deg)? {
                NonSmoothnessWitness::Modular(p) => {
                    json!({ "witness_kind": "modular", "prime": p })
                }
                NonSmoothnessWitness::Rational => json!({ "witness_kind": "rational" }),
            };
            Ok(json!({ "command": "certify-nonsmooth", "input": input, "result": result }))
        }
        Command::Distinguish { left, right } => {
            let l = named_invariants(left)?;
            let r = named_invariants(right)?;
            let result = match equivalence_obstruction(&l, &r) {
                Some(Obstruction::Modular(p)) => {
                    json!({ "obstruction_kind": "modular", "prime": p })
                }
                Some(Obstruction::Rational) => json!({ "obstruction_kind": "rational" }),
                None => json!({ "obstruction_kind": "none" }),
            };
            let input = json!({ "left": left, "right": right });
            Ok(json!({ "command": "distinguish", "input": input, "result": result }))
        }
        Command::Gram { n } => {
            let (lambda, gram) = ac_gram_matrix(*n)?;
            let result = json!({
                "type": lambda.datum().spec(),
                "lambda": lambda.coeffs(),
                "entries": gram.entries_i64(),
                "elementary_divisors": elementary_divisors(&gram).divisors_u64(),
            });
            Ok(json!({ "command": "gram", "input": { "n": n }, "result": result }))
        }
        Command::DecompAc { n, ell } => {
            let value = decomposition_number_ac(*n, *ell)?;
            let input = json!({ "n": n, "ell": ell });
            Ok(json!({ "command": "decomp-ac", "input": input, "result": { "value": value } }))
        }
        Command::Linkage { pair } => {
            let (lambda, mu, input) = parse_pair(pair)?;
            let bound = linkage_bound(&lambda, &mu)?;
            Ok(json!({ "command": "linkage", "input": input, "result": { "bound": bound } }))
        }
        Command::TorsionAudit { datum } => {
            let t = IrreducibleType::parse(datum)?;
            let result = json!({
                "torsion": minimal_orbit_torsion_primes(t),
                "bad": t.bad_primes(),
                "conjecture_consistent": conjecture_audit(t),
            });
            let input = json!({ "type": t.label() });
            Ok(json!({ "command": "torsion-audit", "input": input, "result": result }))
        }
    }
}

/// One scalar per line, `key: value` for objects, `- value` for arrays;
/// arrays of scalars are joined inline.
fn render_table(v: &Value) -> String {
    let mut out = String::new();
    push_table(&mut out, v, 0);
    out
}

fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => items
            .iter()
            .map(|x| match x {
                Value::Array(_) | Value::Object(_) => None,
                other => inline(other),
            })
            .collect::<Option<Vec<_>>>()
            .map(|parts| parts.join(", ")),
        Value::Object(_) => None,
    }
}

fn push_table(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                if let Some(s) = inline(val) {
                    out.push_str(&format!("{pad}{k}: {s}\n"));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    push_table(out, val, indent + 1);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if let Some(s) = inline(item) {
                    out.push_str(&format!("{pad}- {s}\n"));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    push_table(out, item, indent + 1);
                }
            }
        }
        other => {
            let s = inline(other).expect("scalar");
            out.push_str(&format!("{pad}{s}\n"));
        }
    }
}
