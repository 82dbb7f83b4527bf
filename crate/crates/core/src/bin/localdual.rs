//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage, 2 parse or semantic error, 3 not a
//! member, 4 precondition violation.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use localdual::decomp::{localized_excess, noetherian_certificate_with, Membership};
use localdual::dualspace::format_operator;
use localdual::io::{
    certificate_from_json, certificate_to_json, format_polynomial, parse_polynomial, parse_problem, ProblemFile,
};
use localdual::localize::{extend_scalars, lift_to_weyl};
use localdual::{
    free_variables, membership, ortiz_component, truncated_dual, Error, MonomialOrder, QIdeal, RationalPoint,
    ResidueField, Splitting,
};

#[derive(Parser, Debug)]
#[command(
    name = "localdual",
    version,
    about = "Local dual spaces, Noetherian operators and Ortiz components"
)]
struct Cli {
    /// Problem file declaring the ring, ideals, points and primes.
    #[arg(short = 'f', long = "file", global = true)]
    file: Option<PathBuf>,

    /// Name of the ideal to work with.
    #[arg(long, global = true, default_value = "I")]
    ideal: String,

    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Order {
    Lex,
    Grevlex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Gröbner basis of the ideal.
    Gb {
        #[arg(long, value_enum, default_value = "grevlex")]
        order: Order,
    },
    /// Truncated local dual space at a point or prime.
    Dual {
        #[arg(long)]
        at: String,
        #[arg(long)]
        order: u32,
    },
    /// Excess dual space at a prime.
    Excess {
        #[arg(long)]
        prime: String,
        /// Named ideal to use as the saturation instead of computing it.
        #[arg(long)]
        sat: Option<String>,
        /// Extra orders over which the excess must stay constant.
        #[arg(long, default_value_t = 1)]
        stall: u32,
    },
    /// Noetherian operator certificate (JSON).
    Noetherian {
        /// Comma-separated prime names; defaults to the file's `primes`.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<String>,
        /// Free variables for a prime, as `name=x2` or `name=x1:x3`.
        #[arg(long = "free-vars")]
        free_vars: Vec<String>,
    },
    /// Differential membership test against a certificate.
    Member {
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        poly: String,
    },
    /// Canonical primary component at a prime.
    Ortiz {
        #[arg(long)]
        prime: String,
    },
}

enum Failure {
    Usage(String),
    Input(String),
    Precondition(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::Semantic(_) => Failure::Input(e.to_string()),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (1, m),
                Failure::Input(m) => (2, m),
                Failure::Precondition(m) => (4, m),
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn load(cli: &Cli) -> std::result::Result<ProblemFile, Failure> {
    let path = cli
        .file
        .as_ref()
        .ok_or_else(|| Failure::Usage("this command needs a problem file (--file)".into()))?;
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_problem(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn named_ideal(file: &ProblemFile, name: &str) -> std::result::Result<QIdeal, Failure> {
    file.ideal_or_point(name)
        .ok_or_else(|| Failure::Input(format!("no ideal or point named '{name}'")))
}

fn emit(lines: &[String]) {
    let mut out = std::io::stdout().lock();
    for l in lines {
        let _ = writeln!(out, "{l}");
    }
}

fn emit_json(v: serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(&v).expect("json"));
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Member { cert, poly } => member(cli, cert, poly),
        cmd => {
            let file = load(cli)?;
            let ideal = named_ideal(&file, &cli.ideal)?;
            match cmd {
                Command::Gb { order } => gb(cli, &file, &ideal, *order),
                Command::Dual { at, order } => dual(cli, &file, &ideal, at, *order),
                Command::Excess { prime, sat, stall } => excess(cli, &file, &ideal, prime, sat.as_deref(), *stall),
                Command::Noetherian { primes, free_vars } => noetherian(&file, &ideal, primes, free_vars),
                Command::Ortiz { prime } => ortiz(cli, &file, &ideal, prime),
                Command::Member { .. } => unreachable!(),
            }
        }
    }
}

fn gb(cli: &Cli, file: &ProblemFile, ideal: &QIdeal, order: Order) -> Outcome {
    let ord = match order {
        Order::Lex => MonomialOrder::Lex,
        Order::Grevlex => MonomialOrder::GrevLex,
    };
    let polys: Vec<String> = ideal
        .groebner(ord)
        .polys()
        .iter()
        .map(|p| format_polynomial(p, &file.vars))
        .collect();
    if cli.json {
        emit_json(json!({ "order": format!("{order:?}").to_lowercase(), "basis": polys }));
    } else {
        emit(&polys);
    }
    Ok(ExitCode::SUCCESS)
}

fn dual(cli: &Cli, file: &ProblemFile, ideal: &QIdeal, at: &str, order: u32) -> Outcome {
    let (ops, free): (Vec<String>, Vec<String>) = if let Some(p) = file.point(at) {
        let b = truncated_dual(ideal, &RationalPoint::new(p.to_vec()), order)?;
        (
            b.operators().iter().map(|o| format_operator(o, &file.vars)).collect(),
            vec![],
        )
    } else {
        let m = named_ideal(file, at)?;
        let s = free_variables(&m)?;
        if s.free().is_empty() {
            let kappa = ResidueField::new(&m)?;
            let b = truncated_dual(ideal, &kappa, order)?;
            let ops = b
                .operators()
                .iter()
                .map(|o| lift_to_weyl_q(o, &s).format_with(&file.vars))
                .collect();
            (ops, vec![])
        } else {
            let li = extend_scalars(ideal, &s);
            let kappa = ResidueField::new(&extend_scalars(&m, &s).ideal)?;
            let b = truncated_dual(&li.ideal, &kappa, order)?;
            let ops = b
                .operators()
                .iter()
                .map(|o| lift_to_weyl(o, &s).format_with(&file.vars))
                .collect();
            (ops, s.free().iter().map(|&i| file.vars[i].clone()).collect())
        }
    };
    if cli.json {
        emit_json(json!({ "at": at, "order": order, "free_vars": free, "dimension": ops.len(), "operators": ops }));
    } else {
        emit(&ops);
    }
    Ok(ExitCode::SUCCESS)
}

/// Lifts an operator over the residue field of a zero-dimensional prime of
/// `Q[x]` by passing through the (trivial) localization.
fn lift_to_weyl_q(
    op: &localdual::DiffOperator<localdual::Residue<localdual::Q>>,
    s: &Splitting,
) -> localdual::WeylOperator {
    let n = s.nvars();
    let reps = op.terms().map(|(a, k)| {
        let rep = match k.as_base() {
            Some(c) => localdual::QPoly::constant(n, c),
            None => k.representative().with_nvars(n),
        };
        (a.clone(), rep)
    });
    localdual::WeylOperator::from_terms(n, reps)
}

fn excess(cli: &Cli, file: &ProblemFile, ideal: &QIdeal, prime: &str, sat: Option<&str>, stall: u32) -> Outcome {
    let p = named_ideal(file, prime)?;
    let s = free_variables(&p)?;
    let ex = match sat {
        None => localized_excess(ideal, &p, &s, stall)?.0,
        Some(name) => {
            let sat = named_ideal(file, name)?;
            let li = extend_scalars(ideal, &s);
            let lp = extend_scalars(&p, &s);
            let ls = extend_scalars(&sat, &s);
            localdual::excess_dual(&li.ideal, &lp.ideal, &ls.ideal, stall)?
        }
    };
    let reps: Vec<String> = ex
        .representatives
        .iter()
        .map(|o| lift_to_weyl(o, &s).format_with(&file.vars))
        .collect();
    if cli.json {
        let history: Vec<_> = ex
            .history
            .iter()
            .map(|&(d, a, b)| json!({ "order": d, "dual": a, "sat_dual": b }))
            .collect();
        emit_json(json!({
            "prime": prime,
            "free_vars": s.free().iter().map(|&i| file.vars[i].clone()).collect::<Vec<_>>(),
            "order": ex.order,
            "dimension": ex.dim(),
            "representatives": reps,
            "history": history,
        }));
    } else {
        let mut lines = vec![format!("order = {}", ex.order), format!("dimension = {}", ex.dim())];
        lines.extend(reps);
        emit(&lines);
    }
    Ok(ExitCode::SUCCESS)
}

fn noetherian(file: &ProblemFile, ideal: &QIdeal, primes: &[String], free_vars: &[String]) -> Outcome {
    let names: Vec<String> = if primes.is_empty() {
        file.primes.clone()
    } else {
        primes.to_vec()
    };
    let mut overrides: Vec<(String, Vec<usize>)> = Vec::new();
    for spec in free_vars {
        let (name, vars) = spec
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("--free-vars expects name=vars, got '{spec}'")))?;
        let idx = vars
            .split(':')
            .filter(|v| !v.is_empty())
            .map(|v| {
                file.vars
                    .iter()
                    .position(|w| w == v)
                    .ok_or_else(|| Failure::Input(format!("unknown variable '{v}'")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        overrides.push((name.to_string(), idx));
    }
    let mut list = Vec::new();
    for name in &names {
        let p = named_ideal(file, name)?;
        let s = match overrides.iter().find(|(n, _)| n == name) {
            Some((_, idx)) => Some(Splitting::with_free(&p, idx)?),
            None => None,
        };
        list.push((p, s));
    }
    let mut cert = noetherian_certificate_with(ideal, &list)?;
    cert.vars = file.vars.clone();
    print!("{}", certificate_to_json(&cert));
    Ok(ExitCode::SUCCESS)
}

fn member(cli: &Cli, cert: &PathBuf, poly: &str) -> Outcome {
    let text = fs::read_to_string(cert).map_err(|e| Failure::Input(format!("{}: {e}", cert.display())))?;
    let cert = certificate_from_json(&text).map_err(|e| Failure::Input(format!("{}: {e}", cert.display())))?;
    let f = parse_polynomial(poly, &cert.vars)?;
    let v = &cert.vars;
    match membership(&f, &cert)? {
        Membership::Member => {
            if cli.json {
                emit_json(json!({ "member": true }));
            } else {
                emit(&["member".to_string()]);
            }
            Ok(ExitCode::SUCCESS)
        }
        Membership::NotMember(w) => {
            let c = &cert.components[w.component];
            let prime: Vec<String> = c.prime.gens().iter().map(|g| format_polynomial(g, v)).collect();
            let op = c.operators[w.operator].format_with(v);
            let value = format_polynomial(&w.value, v);
            if cli.json {
                emit_json(json!({ "member": false, "witness": { "prime": prime, "operator": op, "value": value } }));
            } else {
                emit(&["not a member".to_string()]);
            }
            eprintln!(
                "witness: prime <{}>, operator {}, normal form {}",
                prime.join(", "),
                op,
                value
            );
            Ok(ExitCode::from(3))
        }
    }
}

fn ortiz(cli: &Cli, file: &ProblemFile, ideal: &QIdeal, prime: &str) -> Outcome {
    let p = named_ideal(file, prime)?;
    let o = ortiz_component(ideal, &p)?;
    let v = &file.vars;
    let (gens, localized) = match &o.global {
        Some(q) => (
            q.gb()
                .polys()
                .iter()
                .map(|g| format_polynomial(g, v))
                .collect::<Vec<_>>(),
            false,
        ),
        None => {
            let s = &o.localized.splitting;
            let gens = o
                .localized
                .ideal
                .gb()
                .polys()
                .iter()
                .map(|g| format_polynomial(&s.clear_denominators(g).0, v))
                .collect();
            (gens, true)
        }
    };
    if cli.json {
        emit_json(json!({ "prime": prime, "nil": o.nil, "localized": localized, "generators": gens }));
    } else {
        let mut lines = vec![format!("nil = {}", o.nil)];
        if localized {
            lines.push("# generators of the component in the localized ring".into());
        }
        lines.extend(gens);
        emit(&lines);
    }
    Ok(ExitCode::SUCCESS)
}
