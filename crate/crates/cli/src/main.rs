//! `rbs`: normal forms, products and Hopf operations in the free
//! Rota-Baxter system from the command line.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on usage
//! or parse errors.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use rbs_kernel::algebra::format_scalar;
use rbs_kernel::hopf::Hopf;
use rbs_kernel::rewriting::basis_by_degree;
use rbs_kernel::{verify_gsb, verify_hopf, GsbBounds, Poly, Rewriter, RuleSet, Signature};
use serde_json::{json, Value};

const DEFAULT_SEED: u64 = 20_240_229;

#[derive(Parser, Debug)]
#[command(name = "rbs", version, about = "Free Rota-Baxter system calculator")]
struct Cli {
    /// Comma-separated generator names, smallest first.
    #[arg(long, global = true, default_value = "x,y,z", value_delimiter = ',')]
    generators: Vec<String>,

    /// Comma-separated operator names, highest rank first.
    #[arg(long, global = true, default_value = "R,S", value_delimiter = ',')]
    operators: Vec<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Print tensors with `(x)` instead of `⊗`.
    #[arg(long, global = true)]
    ascii: bool,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Flip one sign of a relation, as `OP:TERM` with TERM in 0..=2.
    #[arg(long, global = true, hide = true, value_parser = parse_mutation)]
    mutate: Option<(String, usize)>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduce an expression to its normal form.
    Normalize {
        expr: String,
        /// Also print every reduction step.
        #[arg(long)]
        trace: bool,
    },
    /// Diamond product of two expressions.
    Mul { left: String, right: String },
    /// Coproduct of an expression.
    Coprod { expr: String },
    /// Counit of an expression.
    Counit { expr: String },
    /// Right antipode of an expression.
    Antipode { expr: String },
    /// List the basis words by degree.
    Basis {
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
    },
    /// Run the verification suites.
    Verify {
        #[arg(value_enum)]
        target: Target,
        /// Degree bounds for the composition check, as `uvw=N,pi=M`.
        #[arg(long, default_value = "uvw=1,pi=1", value_parser = parse_bounds)]
        bounds: GsbBounds,
        /// Degree bound for the Hopf suites.
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Gsb,
    Hopf,
    All,
}

fn parse_bounds(text: &str) -> Result<GsbBounds, String> {
    let mut bounds = GsbBounds::default();
    for part in text.split(',') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got `{part}`"))?;
        let value = usize::from_str(value.trim()).map_err(|e| format!("`{value}`: {e}"))?;
        match key.trim() {
            "uvw" => bounds.uvw_degree = value,
            "pi" => bounds.pi_degree = value,
            other => return Err(format!("unknown bound `{other}`")),
        }
    }
    Ok(bounds)
}

fn parse_mutation(text: &str) -> Result<(String, usize), String> {
    let (op, term) = text.split_once(':').ok_or("expected OP:TERM")?;
    let term = usize::from_str(term).map_err(|e| e.to_string())?;
    if term > 2 {
        return Err("TERM must be 0, 1 or 2".into());
    }
    Ok((op.to_string(), term))
}

struct Context {
    sig: Signature,
    rules: RuleSet,
    format: Format,
    ascii: bool,
    seed: u64,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<rbs_kernel::Error> for Failure {
    fn from(e: rbs_kernel::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl Context {
    fn emit(&self, text: String, value: Value) {
        match self.format {
            Format::Text => println!("{text}"),
            Format::Json => println!(
                "{}",
                serde_json::to_string_pretty(&value).expect("serializable")
            ),
        }
    }

    fn rewriter(&self) -> Rewriter {
        Rewriter::new(self.rules.clone())
    }

    fn normalized(&self, rw: &Rewriter, expr: &str) -> Result<Poly, Failure> {
        Ok(rw.normal_form(&self.sig.parse_poly(expr)?))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let sig = Signature::new(&cli.generators, &cli.operators)?;
    let mut rules = RuleSet::rota_baxter(&sig);
    if let Some((op, term)) = &cli.mutate {
        rules = rules.with_flipped_sign(sig.operator(op)?, *term);
    }
    let ctx = Context {
        sig,
        rules,
        format: cli.format,
        ascii: cli.ascii,
        seed: cli.seed,
    };
    let sig = &ctx.sig;
    match cli.command {
        Command::Normalize { expr, trace } => {
            let rw = ctx.rewriter();
            let input = sig.parse_poly(&expr)?;
            let t = rw.normal_form_traced(&input);
            let result = rw.normal_form(&input);
            debug_assert_eq!(t.result, result);
            let mut text = String::new();
            if trace {
                for s in &t.steps {
                    text.push_str(&format!(
                        "{}  at {} with {}(u) {}(v), u = {}, v = {}  ->  {}\n",
                        sig.format_poly(&Poly::term(s.coefficient.clone(), s.word.clone())),
                        sig.format_star(&s.redex.context),
                        sig.operator_name(s.redex.op),
                        sig.operator_name(s.redex.op),
                        sig.format_word(&s.redex.left),
                        sig.format_word(&s.redex.right),
                        sig.format_poly(&s.replacement),
                    ));
                }
            }
            text.push_str(&sig.format_poly(&result));
            let mut value = json!({ "result": sig.poly_to_json(&result) });
            if trace {
                value["trace"] = serde_json::to_value(t.to_json(sig)).expect("serializable");
            }
            ctx.emit(text, value);
        }
        Command::Mul { left, right } => {
            let rw = ctx.rewriter();
            let a = ctx.normalized(&rw, &left)?;
            let b = ctx.normalized(&rw, &right)?;
            let p = rw.diamond_poly(&a, &b)?;
            ctx.emit(
                sig.format_poly(&p),
                json!({ "result": sig.poly_to_json(&p) }),
            );
        }
        Command::Coprod { expr } => {
            let h = Hopf::with_rewriter(ctx.rewriter());
            let p = ctx.normalized(h.rewriter(), &expr)?;
            let t = h.coproduct_poly(&p)?;
            ctx.emit(
                sig.format_tensor(&t, ctx.ascii),
                json!({ "result": sig.tensor_to_json(&t) }),
            );
        }
        Command::Counit { expr } => {
            let rw = ctx.rewriter();
            let c = Hopf::counit(&ctx.normalized(&rw, &expr)?);
            ctx.emit(format_scalar(&c), json!({ "result": format_scalar(&c) }));
        }
        Command::Antipode { expr } => {
            let h = Hopf::with_rewriter(ctx.rewriter());
            let p = ctx.normalized(h.rewriter(), &expr)?;
            let t = h.antipode_poly(&p)?;
            ctx.emit(
                sig.format_poly(&t),
                json!({ "result": sig.poly_to_json(&t) }),
            );
        }
        Command::Basis { max_degree } => {
            let buckets = basis_by_degree(sig, max_degree);
            let mut text = Vec::new();
            let mut degrees = Vec::new();
            for (d, words) in buckets.iter().enumerate() {
                let names: Vec<String> = words.iter().rev().map(|w| sig.format_word(w)).collect();
                text.push(format!(
                    "degree {d} ({}): {}",
                    words.len(),
                    names.join(", ")
                ));
                degrees.push(json!({ "degree": d, "count": words.len(), "words": names }));
            }
            ctx.emit(
                text.join("\n"),
                json!({ "max_degree": max_degree, "degrees": degrees }),
            );
        }
        Command::Verify {
            target,
            bounds,
            max_degree,
        } => return verify(&ctx, target, bounds, max_degree),
    }
    Ok(())
}

fn verify(
    ctx: &Context,
    target: Target,
    bounds: GsbBounds,
    max_degree: usize,
) -> Result<(), Failure> {
    let sig = &ctx.sig;
    let mut text = Vec::new();
    let mut value = json!({});
    let mut passed = true;
    if matches!(target, Target::Gsb | Target::All) {
        let report = verify_gsb(sig, &ctx.rules, bounds);
        passed &= report.passed();
        text.push(format!(
            "compositions (uvw={}, pi={})",
            bounds.uvw_degree, bounds.pi_degree
        ));
        for f in &report.families {
            text.push(format!(
                "  {:<4} {:<24} instances {:>5}  compositions {:>5}  failures {}",
                f.family,
                f.ambiguity,
                f.instances_checked,
                f.compositions_checked,
                f.failures.len()
            ));
            if let Some(first) = f.failures.first() {
                text.push(format!(
                    "       first: u = {}, v = {}, w = {}, pi = {}: {}",
                    first.u,
                    first.v,
                    first.w,
                    first.pi.as_deref().unwrap_or("-"),
                    first.reason
                ));
            }
        }
        value["gsb"] = serde_json::to_value(&report).expect("serializable");
    }
    if matches!(target, Target::Hopf | Target::All) {
        let report = verify_hopf(sig, max_degree, ctx.seed);
        passed &= report.passed();
        text.push(format!("hopf (max degree {max_degree}, seed {})", ctx.seed));
        for s in &report.suites {
            text.push(format!(
                "  {:<24} checked {:>5}  failures {}",
                s.suite,
                s.checked,
                s.failures.len()
            ));
        }
        if let Some(w) = &report.right_counit_witness {
            text.push(format!(
                "  right counit witness: (id⊗ε)Δ({}) = {}, not {}",
                w.input, w.id_tensor_counit, w.beta_r
            ));
        }
        text.push(format!(
            "  left antipode holds: {}",
            report.informational.left_antipode_holds
        ));
        value["hopf"] = serde_json::to_value(&report).expect("serializable");
    }
    text.push(if passed { "PASS" } else { "FAIL" }.to_string());
    value["passed"] = json!(passed);
    ctx.emit(text.join("\n"), value);
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(var) = std::env::var("RBS_KERNEL_THREADS") else {
        return Ok(());
    };
    let n = usize::from_str(var.trim())
        .map_err(|_| format!("RBS_KERNEL_THREADS: `{var}` is not a number"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
