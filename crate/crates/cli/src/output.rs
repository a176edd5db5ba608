use crate::args::Format;
use hyperval::hyperfun::HyperValue;
use hyperval::report::{EvalReport, Status};
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Serialize)]
struct EvalJson {
    value: hyperval::report::JsonComplex,
    error_estimate: f64,
    method: &'static str,
}

fn sig15(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        let decimals = (14 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        format!("{x:.14e}")
    }
}

fn complex15(re: f64, im: f64) -> String {
    if im == 0.0 {
        sig15(re)
    } else {
        let sign = if im < 0.0 { '-' } else { '+' };
        format!("{} {sign} {}i", sig15(re), sig15(im.abs()))
    }
}

pub fn eval_output(v: &HyperValue, format: Format) -> String {
    match format {
        Format::Text => format!(
            "{}\nerror estimate: {:.1e} ({})\n",
            complex15(v.value.re, v.value.im),
            v.error_estimate,
            v.method.as_str()
        ),
        Format::Json => {
            let j = EvalJson { value: v.value.into(), error_estimate: v.error_estimate, method: v.method.as_str() };
            serde_json::to_string_pretty(&j).expect("plain data serializes") + "\n"
        }
    }
}

pub fn reports(reports: &[EvalReport], format: Format) -> Result<String, String> {
    match format {
        Format::Json => serde_json::to_string_pretty(reports).map(|s| s + "\n").map_err(|e| e.to_string()),
        Format::Text => Ok(table(reports)),
    }
}

fn table(reports: &[EvalReport]) -> String {
    let w = reports.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
    let mut out = String::new();
    let _ = writeln!(out, "{:<w$}  {:<17}  {:>9}  {:>9}  {:>8}  lhs", "id", "status", "abs_err", "rel_err", "ms");
    for r in reports {
        let _ = writeln!(
            out,
            "{:<w$}  {:<17}  {:>9.2e}  {:>9.2e}  {:>8.2}  {}",
            r.id,
            r.status.as_str(),
            r.abs_err,
            r.rel_err,
            r.elapsed_ms,
            complex15(r.lhs.re, r.lhs.im)
        );
        if let Some(e) = &r.erratum {
            let _ = writeln!(out, "{:<w$}    erratum: {} (printed/lhs = {})", "", e.note, complex15(e.ratio.re, e.ratio.im));
        }
        if let Some(n) = &r.note {
            let _ = writeln!(out, "{:<w$}    note: {n}", "");
        }
    }
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let _ = writeln!(
        out,
        "{} records: {} pass, {} pass_with_erratum, {} fail",
        reports.len(),
        count(Status::Pass),
        count(Status::PassWithErratum),
        count(Status::Fail)
    );
    out
}

pub fn emit(text: &str, out: Option<&str>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("cannot write {path}: {e}")),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifteen_digits() {
        assert_eq!(sig15(std::f64::consts::FRAC_PI_4), "0.785398163397448");
        assert_eq!(sig15(1.0), "1");
        assert_eq!(sig15(-2.5), "-2.5");
        assert_eq!(sig15(1.5e-9), "1.50000000000000e-9");
        assert_eq!(complex15(1.0, -0.5), "1 - 0.5i");
    }
}
