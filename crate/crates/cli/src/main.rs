//! `quintic-aut`: command-line access to the quintic automorphism kernels.
//!
//! Results go to stdout as JSON (or aligned text with `--format text`),
//! diagnostics to stderr. Exit codes: 0 success, 1 verification or
//! computation failure, 2 usage or input error.

mod text;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use quintic_core::catalog::{classify_curve_at, verify_all, Verdict};
use quintic_core::groupid::{fingerprint, identify};
use quintic_core::projlinear::{closure, FinGroup};
use quintic_core::smoothness::smoothness_certificate;
use quintic_core::typeclassifier::{
    canonical_type, default_pool, eigenclasses, enumerate_types_within, full_conductor, matches_reference,
    quintic_reference_types, type_of, CyclicType, FamilyStatus,
};
use quintic_core::{Error, HomPoly, ProjMat};

#[derive(Parser)]
#[command(name = "quintic-aut", version, about = "Automorphism groups of smooth plane quintics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for every randomized search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Root-of-unity order for stabilizer searches (default: lcm of the
    /// admissible orders of the degree, 3120 for quintics).
    #[arg(long, global = true)]
    conductor: Option<u32>,
    /// Largest group a closure may build.
    #[arg(long, global = true, default_value_t = 2000)]
    cap: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct CurveInput {
    /// A homogeneous form, e.g. "X^5+Y^5+Z^5".
    #[arg(long)]
    curve: Option<String>,
    /// File with one form per line.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct MatrixInput {
    /// A matrix as "[L0;L1;L2]" or "diag(a,b,c)"; repeatable.
    #[arg(long)]
    matrix: Vec<String>,
    /// File with one matrix per line.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenclasses of degree-d monomials under a cyclic type.
    Invariants {
        #[arg(long, default_value_t = 5)]
        degree: u32,
        /// Type "m,(a,b)".
        #[arg(long = "type")]
        ty: String,
        /// Only this class.
        #[arg(long)]
        class: Option<u32>,
    },
    /// Cyclic types carrying smooth curves, one family per eigenclass.
    EnumerateTypes {
        #[arg(long, default_value_t = 5)]
        degree: u32,
        /// Largest number of candidates tried per family.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Smoothness, monomial stabilizer, group label and stratum of a curve.
    Classify(CurveInput),
    /// Closure of a set of generators.
    Closure(MatrixInput),
    /// Identifies the group generated by the matrices.
    Identify(MatrixInput),
    /// Smoothness certificate of a curve.
    Smooth(CurveInput),
    /// Substitutes a linear change of variables into a curve.
    Transform {
        #[command(flatten)]
        input: CurveInput,
        #[arg(long)]
        matrix: String,
    },
    /// Terms of greatest exponent.
    Core(CurveInput),
    /// Canonical cyclic type of a monomial matrix.
    TypeOf(MatrixInput),
    /// Checks every built-in stratum and the global facts.
    VerifyTable2,
}

enum Failure {
    Usage(String),
    Compute(String),
}

type Outcome = Result<(Value, bool), Failure>;

fn show_input_error(flag: &str, text: &str, e: &Error) -> Failure {
    let near = match e {
        Error::Syntax { pos, .. } => {
            let rest: String = text.get(*pos..).unwrap_or("").chars().take(8).collect();
            if rest.is_empty() { " (at end of input)".to_string() } else { format!(" (near `{rest}`)") }
        }
        _ => String::new(),
    };
    Failure::Usage(format!("{flag} `{text}`: {e}{near}"))
}

fn compute(e: Error) -> Failure {
    Failure::Compute(e.to_string())
}

fn lines(flag: &str, inline: Vec<String>, file: &Option<PathBuf>) -> Result<Vec<(String, String)>, Failure> {
    let mut out: Vec<(String, String)> = inline.into_iter().map(|s| (flag.to_string(), s)).collect();
    if let Some(path) = file {
        let body = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("--file {}: {e}", path.display())))?;
        for (k, line) in body.lines().enumerate() {
            let t = line.trim();
            if !t.is_empty() && !t.starts_with('#') {
                out.push((format!("{}:{}", path.display(), k + 1), t.to_string()));
            }
        }
    }
    if out.is_empty() {
        return Err(Failure::Usage(format!("no input: pass {flag} or --file")));
    }
    Ok(out)
}

fn curves(input: &CurveInput) -> Result<Vec<HomPoly>, Failure> {
    lines("--curve", input.curve.iter().cloned().collect(), &input.file)?
        .into_iter()
        .map(|(src, t)| HomPoly::parse(&t).map_err(|e| show_input_error(&src, &t, &e)))
        .collect()
}

fn matrices(input: &MatrixInput) -> Result<Vec<ProjMat>, Failure> {
    lines("--matrix", input.matrix.clone(), &input.file)?
        .into_iter()
        .map(|(src, t)| ProjMat::parse(&t).map_err(|e| show_input_error(&src, &t, &e)))
        .collect()
}

fn one_or_many(mut values: Vec<Value>) -> Value {
    if values.len() == 1 { values.pop().unwrap() } else { Value::Array(values) }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn numeric(f: &HomPoly, text: &str) -> Result<(), Failure> {
    if f.is_numeric() {
        Ok(())
    } else {
        Err(Failure::Usage(format!("--curve `{text}`: {}", Error::NotNumeric)))
    }
}

fn invariants(degree: u32, ty: &str, class: Option<u32>) -> Outcome {
    let t: CyclicType = ty.parse().map_err(|e: Error| show_input_error("--type", ty, &e))?;
    let canonical = canonical_type(t.m, t.a, t.b).map_err(|e| show_input_error("--type", ty, &e))?;
    let classes: Vec<Value> = eigenclasses(degree, &t)
        .into_iter()
        .filter(|(c, _)| class.is_none_or(|k| k % t.m == *c))
        .map(|(c, basis)| json!({ "class": c, "size": basis.len(), "basis": basis }))
        .collect();
    Ok((
        json!({
            "degree": degree,
            "type": t,
            "canonical_type": canonical,
            "matrix": t.matrix(),
            "classes": classes,
        }),
        true,
    ))
}

fn enumerate(degree: u32, seed: u64, budget: Option<u64>) -> Outcome {
    let pool = default_pool();
    let fams = enumerate_types_within(degree, &pool, seed, budget).map_err(|e| Failure::Usage(e.to_string()))?;
    let pick = |f: &dyn Fn(&FamilyStatus) -> bool| -> Vec<Value> {
        fams.iter().filter(|x| f(&x.status)).map(to_value).collect()
    };
    let smooth = pick(&|s| *s == FamilyStatus::Smooth);
    let excluded = pick(&|s| s.is_proof_of_exclusion());
    let unresolved = pick(&|s| *s == FamilyStatus::NoWitness);
    let mut out = json!({
        "degree": degree,
        "seed": seed,
        "pool": pool.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "summary": {
            "smooth": smooth.len(),
            "excluded": excluded.len(),
            "unresolved": unresolved.len(),
        },
        "families": smooth,
        "excluded": excluded,
        "unresolved": unresolved,
    });
    if degree == 5 {
        let rows: Vec<Value> = quintic_reference_types()
            .iter()
            .map(|r| {
                let hit = fams.iter().find(|f| matches_reference(f, r));
                json!({
                    "type": r.ty,
                    "family": r.family.to_string(),
                    "matched_type": hit.map(|f| f.ty),
                    "matched_class": hit.map(|f| f.class),
                    "status": hit.map(|f| to_value(&f.status)["status"].clone()),
                })
            })
            .collect();
        out["reference"] = Value::Array(rows);
    }
    Ok((out, true))
}

fn group_summary(g: &FinGroup) -> Value {
    let mut orders: BTreeMap<usize, usize> = BTreeMap::new();
    for o in g.element_orders() {
        *orders.entry(o).or_default() += 1;
    }
    json!({
        "order": g.order(),
        "conductor": g.conductor(),
        "generators": g.generators(),
        "element_orders": orders,
    })
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Invariants { degree, ty, class } => invariants(*degree, ty, *class),
        Command::EnumerateTypes { degree, budget } => enumerate(*degree, cli.seed, *budget),
        Command::Classify(input) => {
            let mut out = Vec::new();
            for f in curves(input)? {
                numeric(&f, &f.to_string())?;
                let n = match cli.conductor {
                    Some(n) => n,
                    None => full_conductor(f.degree().max(4)).map_err(compute)?,
                };
                out.push(to_value(&classify_curve_at(&f, n, cli.cap).map_err(compute)?));
            }
            Ok((one_or_many(out), true))
        }
        Command::Closure(input) => {
            let g = closure(&matrices(input)?, cli.cap).map_err(compute)?;
            let mut v = group_summary(&g);
            v["elements"] = to_value(&g.elements());
            Ok((v, true))
        }
        Command::Identify(input) => {
            let g = closure(&matrices(input)?, cli.cap).map_err(compute)?;
            Ok((json!({ "order": g.order(), "label": identify(&g), "fingerprint": fingerprint(&g) }), true))
        }
        Command::Smooth(input) => {
            let mut out = Vec::new();
            for f in curves(input)? {
                numeric(&f, &f.to_string())?;
                let c = smoothness_certificate(&f).map_err(compute)?;
                let mut v = json!({ "curve": f.to_string() });
                if let (Value::Object(m), Value::Object(c)) = (&mut v, to_value(&c)) {
                    m.extend(c);
                }
                out.push(v);
            }
            Ok((one_or_many(out), true))
        }
        Command::Transform { input, matrix } => {
            let m = ProjMat::parse(matrix).map_err(|e| show_input_error("--matrix", matrix, &e))?;
            let out = curves(input)?
                .into_iter()
                .map(|f| json!({ "curve": f.to_string(), "matrix": m, "result": f.substitute_linear(&m).to_string() }))
                .collect();
            Ok((one_or_many(out), true))
        }
        Command::Core(input) => {
            let mut out = Vec::new();
            for f in curves(input)? {
                let core = f.core().map_err(compute)?;
                out.push(json!({ "curve": f.to_string(), "core": core.to_string() }));
            }
            Ok((one_or_many(out), true))
        }
        Command::TypeOf(input) => {
            let mut out = Vec::new();
            for m in matrices(input)? {
                let t = type_of(&m).map_err(|e| Failure::Usage(format!("--matrix `{m}`: {e}")))?;
                out.push(json!({ "matrix": m, "type": t, "order": t.m, "homology": t.is_homology() }));
            }
            Ok((one_or_many(out), true))
        }
        Command::VerifyTable2 => {
            let r = verify_all(cli.seed);
            Ok((to_value(&r), r.verdict == Verdict::Pass))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((v, ok)) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&v).expect("values serialize")),
                Format::Text => print!("{}", text::render(&v)),
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification failed");
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
