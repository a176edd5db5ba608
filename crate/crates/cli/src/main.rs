mod args;
mod output;

use args::{parse_complex, parse_complex_list, parse_real_list, Cli, Command, EvalArgs, Function, RunArgs};
use clap::Parser;
use hyperval::hyperfun::{Evaluator, HyperSpec, HyperValue, DEFAULT_QUAD_TOL};
use hyperval::identities::{self, PlanContext};
use hyperval::reductions;
use hyperval::report::EvalReport;
use hyperval::{ComplexValue, DEFAULT_SIDE};
use std::process::ExitCode;

const EXIT_FAIL: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_EVAL: u8 = 3;

/// Smallest quadrature tolerance the integrator accepts.
const MIN_QUAD_TOL: f64 = 1e-13;

enum Failure {
    Parse(String),
    Eval(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(EXIT_PARSE);
    }
    let result = match &cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Verify(r) => cmd_verify(r),
        Command::Reduce(r) => cmd_reduce(r),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Parse(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_PARSE)
        }
        Err(Failure::Eval(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_EVAL)
        }
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("HYPER_THREADS") else { return Ok(()) };
    let n: usize = v.trim().parse().map_err(|_| format!("HYPER_THREADS must be a positive integer, got `{v}`"))?;
    if n == 0 {
        return Err("HYPER_THREADS must be a positive integer, got `0`".into());
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn quad_tol(explicit: Option<f64>, tol: Option<f64>) -> Result<f64, Failure> {
    match explicit {
        Some(q) => {
            if !(q > 0.0) {
                return Err(Failure::Parse(format!("--quad-tol must be positive, got {q}")));
            }
            if let Some(t) = tol {
                if q > t / 10.0 {
                    return Err(Failure::Parse(format!("--quad-tol {q} must be at most --tol/10 = {}", t / 10.0)));
                }
            }
            Ok(q)
        }
        None => Ok(tol.map_or(DEFAULT_QUAD_TOL, |t| (t / 10.0).clamp(MIN_QUAD_TOL, DEFAULT_QUAD_TOL))),
    }
}

fn run_context(r: &RunArgs) -> Result<PlanContext, Failure> {
    if let Some(t) = r.tol {
        if !(t > 0.0) {
            return Err(Failure::Parse(format!("--tol must be positive, got {t}")));
        }
    }
    Ok(PlanContext::new(Evaluator::new(quad_tol(r.quad_tol, r.tol)?), DEFAULT_SIDE))
}

fn cmd_eval(a: &EvalArgs) -> Result<u8, Failure> {
    let side = a.side.map_or(DEFAULT_SIDE, Into::into);
    let ev = Evaluator::new(quad_tol(a.quad_tol, None)?);
    let p = |flag: &str, v: &Option<String>| -> Result<ComplexValue, Failure> {
        let s = v.as_deref().ok_or_else(|| Failure::Parse(format!("missing --{flag}")))?;
        parse_complex(s).map_err(|e| Failure::Parse(format!("--{flag}: {e}")))
    };
    let spec = match a.function {
        Function::Hyp2f1 => HyperSpec::new(p("a", &a.a)?, vec![p("b", &a.b)?], p("c", &a.c)?, vec![p("x", &a.x)?]),
        Function::F1 | Function::Fd => {
            let xs_src = a.xs.as_deref().ok_or_else(|| Failure::Parse("missing --xs".into()))?;
            let xs = parse_complex_list(xs_src).map_err(|e| Failure::Parse(format!("--xs: {e}")))?;
            let bs = match (&a.bs, &a.b) {
                (Some(s), _) => parse_real_list(s).map_err(|e| Failure::Parse(format!("--bs: {e}")))?,
                (None, Some(_)) => vec![p("b", &a.b)?; xs.len()],
                (None, None) => return Err(Failure::Parse("missing --bs".into())),
            };
            if a.function == Function::F1 && xs.len() != 2 {
                return Err(Failure::Parse(format!("f1 takes two arguments, got {}", xs.len())));
            }
            HyperSpec::new(p("a", &a.a)?, bs, p("c", &a.c)?, xs)
        }
    }
    .map_err(|e| Failure::Eval(e.to_string()))?;
    let value: HyperValue = ev.lauricella_fd(&spec, side).map_err(|e| Failure::Eval(e.to_string()))?;
    let text = output::eval_output(&value, a.format);
    output::emit(&text, a.out.as_deref()).map_err(Failure::Eval)?;
    Ok(0)
}

fn finish(reports: &[EvalReport], r: &RunArgs) -> Result<u8, Failure> {
    let text = output::reports(reports, r.format).map_err(Failure::Eval)?;
    output::emit(&text, r.out.as_deref()).map_err(Failure::Eval)?;
    Ok(if reports.iter().any(|x| x.status.is_fail()) { EXIT_FAIL } else { 0 })
}

fn cmd_verify(r: &RunArgs) -> Result<u8, Failure> {
    let ctx = run_context(r)?;
    let reports = identities::verify_all_with(r.filter.as_deref(), r.tol, &ctx).map_err(|e| Failure::Parse(e.to_string()))?;
    finish(&reports, r)
}

fn cmd_reduce(r: &RunArgs) -> Result<u8, Failure> {
    let ctx = run_context(r)?;
    let reports = reductions::run_suite(r.filter.as_deref(), r.tol, &ctx).map_err(|e| Failure::Eval(e.to_string()))?;
    finish(&reports, r)
}
