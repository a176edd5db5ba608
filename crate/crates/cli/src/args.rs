use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperval::{BranchSide, ComplexValue};

#[derive(Debug, Parser)]
#[command(name = "hyperval", version, about = "Evaluate hypergeometric functions and verify closed forms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate 2F1, Appell F1 or Lauricella F_D at one point.
    Eval(EvalArgs),
    /// Verify the identity catalog.
    Verify(RunArgs),
    /// Check the hyperelliptic reductions and integral representations.
    Reduce(RunArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    #[value(name = "2f1")]
    Hyp2f1,
    F1,
    Fd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Above,
    Below,
}

impl From<Side> for BranchSide {
    fn from(s: Side) -> Self {
        match s {
            Side::Above => BranchSide::Above,
            Side::Below => BranchSide::Below,
        }
    }
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(value_enum)]
    pub function: Function,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Single lower parameter; replicated for F1 and F_D when --bs is absent.
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    /// Comma-separated reals, or `;`-separated complex values.
    #[arg(long, allow_hyphen_values = true)]
    pub bs: Option<String>,
    /// `;`-separated arguments, each `re` or `re,im`.
    #[arg(long, allow_hyphen_values = true)]
    pub xs: Option<String>,
    /// Side of the cut for arguments on (1, inf).
    #[arg(long, value_enum)]
    pub side: Option<Side>,
    #[arg(long)]
    pub quad_tol: Option<f64>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Relative tolerance; overrides the per-record tolerance.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub quad_tol: Option<f64>,
    /// Glob over record ids or base ids.
    #[arg(long)]
    pub filter: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<String>,
}

fn parse_real(s: &str) -> Result<f64, String> {
    let t = s.trim();
    let v: f64 = t.parse().map_err(|_| format!("`{t}` is not a number"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{t}` is not finite"))
    }
}

/// `re` or `re,im`.
pub fn parse_complex(s: &str) -> Result<ComplexValue, String> {
    let parts: Vec<&str> = s.split(',').collect();
    match parts.as_slice() {
        [re] => Ok(ComplexValue::new(parse_real(re)?, 0.0)),
        [re, im] => Ok(ComplexValue::new(parse_real(re)?, parse_real(im)?)),
        _ => Err(format!("`{s}` is not of the form re or re,im")),
    }
}

/// `;`-separated complex values.
/// A trailing `;` is allowed, so `1,2;` is a one-element list.
pub fn parse_complex_list(s: &str) -> Result<Vec<ComplexValue>, String> {
    let body = s.trim().strip_suffix(';').unwrap_or(s.trim());
    if body.is_empty() {
        return Err("empty list".into());
    }
    body.split(';').map(parse_complex).collect()
}

/// Comma-separated reals; a list containing `;` is read as complex values.
pub fn parse_real_list(s: &str) -> Result<Vec<ComplexValue>, String> {
    if s.contains(';') {
        return parse_complex_list(s);
    }
    if s.trim().is_empty() {
        return Err("empty list".into());
    }
    s.split(',').map(|t| parse_real(t).map(|v| ComplexValue::new(v, 0.0))).collect()
}
