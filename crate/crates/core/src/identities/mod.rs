//! Catalog of closed-form identities and the double-evaluation verifier.
//!
//! Every record carries two evaluation plans. A plan composes library
//! operations (hypergeometric evaluation, Gamma, elliptic integrals) and
//! exact algebraic constants; no plan embeds an expected floating-point
//! result.

mod catalog;

use crate::hyperfun::{Evaluator, HyperSpec};
use crate::numerics::{principal_pow, real, BranchSide, ComplexValue, DEFAULT_SIDE};
use crate::report::{agrees, Comparison, ErratumInfo, EvalError, EvalReport, Status};
use rayon::prelude::*;
use std::sync::Arc;
use std::time::Instant;

pub use catalog::{hermite_h, maier_l};

/// Default relative tolerance.
pub const DEFAULT_TOL: f64 = 1e-8;
/// Threshold above which a failing record triggers the factor search.
pub const ERRATUM_SEARCH_TOL: f64 = 1e-6;
/// Candidate correction factors for the erratum search.
pub const ERRATUM_FACTORS: [f64; 14] =
    [1.0, -1.0, 0.5, -0.5, 1.0 / 3.0, -1.0 / 3.0, 2.0, -2.0, 3.0, -3.0, 0.25, -0.25, 4.0, -4.0];

/// Inputs shared by every plan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanContext {
    pub evaluator: Evaluator,
    pub side: BranchSide,
}

impl Default for PlanContext {
    fn default() -> Self {
        PlanContext { evaluator: Evaluator::default(), side: DEFAULT_SIDE }
    }
}

impl PlanContext {
    pub fn new(evaluator: Evaluator, side: BranchSide) -> Self {
        PlanContext { evaluator, side }
    }

    pub fn with_side(self, side: BranchSide) -> Self {
        PlanContext { side, ..self }
    }

    pub fn hyp2f1(&self, a: f64, b: f64, c: f64, x: ComplexValue) -> Result<ComplexValue, EvalError> {
        Ok(self.evaluator.hyp2f1(real(a), real(b), real(c), x, self.side)?.value)
    }

    #[allow(clippy::too_many_arguments)]
    pub fn appell_f1(
        &self,
        a: f64,
        b1: f64,
        b2: f64,
        c: f64,
        x1: ComplexValue,
        x2: ComplexValue,
    ) -> Result<ComplexValue, EvalError> {
        let v = self.evaluator.appell_f1(real(a), real(b1), real(b2), real(c), x1, x2, self.side)?;
        Ok(v.value)
    }

    /// `F_D(a; b, ..., b; c | xs)`.
    pub fn fd(&self, a: f64, b: f64, c: f64, xs: Vec<ComplexValue>) -> Result<ComplexValue, EvalError> {
        self.fd_spec(&HyperSpec::uniform(a, b, c, xs)?)
    }

    pub fn fd_spec(&self, spec: &HyperSpec) -> Result<ComplexValue, EvalError> {
        Ok(self.evaluator.lauricella_fd(spec, self.side)?.value)
    }

    /// `base^e` on the principal branch, cut side from the context.
    pub fn pow(&self, base: ComplexValue, e: f64) -> Result<ComplexValue, EvalError> {
        Ok(principal_pow(base, real(e), self.side)?)
    }
}

/// An evaluation plan: a deterministic recipe producing one value.
pub type Plan = Arc<dyn Fn(&PlanContext) -> Result<ComplexValue, EvalError> + Send + Sync>;

pub fn plan(f: impl Fn(&PlanContext) -> Result<ComplexValue, EvalError> + Send + Sync + 'static) -> Plan {
    Arc::new(f)
}

/// Printed form of an identity that does not hold as stated.
#[derive(Clone)]
pub struct Erratum {
    pub as_printed_rhs: Plan,
    pub note: &'static str,
}

/// One identity, or one grid point of an identity family.
#[derive(Clone)]
pub struct IdentityRecord {
    /// Unique id; grid points are written `base(name=value,...)`.
    pub id: String,
    pub base: &'static str,
    pub anchor: &'static str,
    pub tolerance: f64,
    pub parameters: Vec<(&'static str, f64)>,
    pub lhs: Plan,
    pub rhs: Plan,
    pub erratum: Option<Erratum>,
    /// Both sides are real because the arguments are closed under conjugation.
    pub real_by_symmetry: bool,
}

impl std::fmt::Debug for IdentityRecord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityRecord")
            .field("id", &self.id)
            .field("anchor", &self.anchor)
            .field("tolerance", &self.tolerance)
            .field("parameters", &self.parameters)
            .field("erratum", &self.erratum.as_ref().map(|e| e.note))
            .finish()
    }
}

impl IdentityRecord {
    pub(crate) fn new(base: &'static str, anchor: &'static str, lhs: Plan, rhs: Plan) -> Self {
        IdentityRecord {
            id: base.to_string(),
            base,
            anchor,
            tolerance: DEFAULT_TOL,
            parameters: Vec::new(),
            lhs,
            rhs,
            erratum: None,
            real_by_symmetry: false,
        }
    }

    pub(crate) fn tol(mut self, tol: f64) -> Self {
        self.tolerance = tol;
        self
    }

    pub(crate) fn real(mut self) -> Self {
        self.real_by_symmetry = true;
        self
    }

    pub(crate) fn printed(mut self, as_printed_rhs: Plan, note: &'static str) -> Self {
        self.erratum = Some(Erratum { as_printed_rhs, note });
        self
    }

    pub(crate) fn params(mut self, params: Vec<(&'static str, f64)>) -> Self {
        let args: Vec<String> = params.iter().map(|(k, v)| format!("{k}={}", fmt_rational(*v))).collect();
        self.id = format!("{}({})", self.base, args.join(","));
        self.parameters = params;
        self
    }

    pub fn is_family_member(&self) -> bool {
        !self.parameters.is_empty()
    }
}

/// `3/4`, `-2`, or the decimal form when no small denominator fits.
pub fn fmt_rational(x: f64) -> String {
    for q in 1..=12u32 {
        let p = x * q as f64;
        if (p - p.round()).abs() < 1e-12 {
            let p = p.round() as i64;
            return if q == 1 { p.to_string() } else { format!("{p}/{q}") };
        }
    }
    x.to_string()
}

/// All identity records, grid points expanded, in catalog order.
pub fn registry() -> Vec<IdentityRecord> {
    catalog::build()
}

/// Distinct base ids in catalog order.
pub fn base_ids() -> Vec<&'static str> {
    let mut out: Vec<&'static str> = Vec::new();
    for r in registry() {
        if !out.contains(&r.base) {
            out.push(r.base);
        }
    }
    out
}

/// Record with the given id. A base id resolves when it has a single case.
pub fn lookup(id: &str) -> Result<IdentityRecord, EvalError> {
    let all = registry();
    if let Some(r) = all.iter().find(|r| r.id == id) {
        return Ok(r.clone());
    }
    let family: Vec<&IdentityRecord> = all.iter().filter(|r| r.base == id).collect();
    match family.len() {
        0 => Err(EvalError::UnknownId(id.to_string())),
        1 => Ok(family[0].clone()),
        _ => Err(EvalError::Ambiguous {
            id: id.to_string(),
            cases: family.iter().map(|r| r.id.as_str()).collect::<Vec<_>>().join(", "),
        }),
    }
}

/// Verifies one record with the default context.
pub fn verify(id: &str, tol_override: Option<f64>) -> Result<EvalReport, EvalError> {
    verify_record(&lookup(id)?, tol_override, &PlanContext::default())
}

/// Evaluates both sides of `record` and classifies the outcome.
pub fn verify_record(
    record: &IdentityRecord,
    tol_override: Option<f64>,
    ctx: &PlanContext,
) -> Result<EvalReport, EvalError> {
    let start = Instant::now();
    let tol = tol_override.unwrap_or(record.tolerance);
    let lhs = (record.lhs)(ctx).map_err(|e| e.context(format!("{}: lhs", record.id)))?;
    let rhs = (record.rhs)(ctx).map_err(|e| e.context(format!("{}: rhs", record.id)))?;
    let mut report = EvalReport::compare(&record.id, record.anchor, lhs, rhs, tol);

    if let Some(err) = &record.erratum {
        let printed = (err.as_printed_rhs)(ctx).map_err(|e| e.context(format!("{}: as-printed rhs", record.id)))?;
        if agrees(lhs, printed, tol) {
            report.append_note("the printed form also holds at this point");
        } else {
            report.erratum = Some(erratum_info(lhs, printed, err.note.to_string()));
            if report.status == Status::Pass {
                report.status = Status::PassWithErratum;
            }
        }
    } else if report.status == Status::Fail {
        let judged = Comparison::new(lhs, rhs).judged(rhs);
        if judged > ERRATUM_SEARCH_TOL {
            if let Some((corrected, how)) = search_factor(lhs, rhs, tol) {
                let mut fixed = EvalReport::compare(&record.id, record.anchor, lhs, corrected, tol);
                fixed.status = Status::PassWithErratum;
                fixed.erratum = Some(erratum_info(lhs, rhs, format!("detected: rhs {how}")));
                report = fixed;
            }
        }
    }

    if report.status == Status::Fail {
        let other = ctx.with_side(ctx.side.opposite());
        if let (Ok(l), Ok(r)) = ((record.lhs)(&other), (record.rhs)(&other)) {
            if agrees(l, r, tol) {
                report.append_note("passes with the opposite branch side");
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}

fn erratum_info(lhs: ComplexValue, printed: ComplexValue, note: String) -> ErratumInfo {
    let cmp = Comparison::new(lhs, printed);
    ErratumInfo { printed: printed.into(), printed_rel_err: cmp.judged(printed), ratio: (printed / lhs).into(), note }
}

/// Searches small rational multiples of `rhs` and of its conjugate.
fn search_factor(lhs: ComplexValue, rhs: ComplexValue, tol: f64) -> Option<(ComplexValue, String)> {
    for (conj, base) in [(false, rhs), (true, rhs.conj())] {
        for f in ERRATUM_FACTORS {
            if !conj && f == 1.0 {
                continue;
            }
            let cand = base * f;
            if agrees(lhs, cand, tol) {
                let how = match (conj, f == 1.0) {
                    (true, true) => "conjugated".to_string(),
                    (true, false) => format!("conjugated and multiplied by {}", fmt_rational(f)),
                    _ => format!("multiplied by {}", fmt_rational(f)),
                };
                return Some((cand, how));
            }
        }
    }
    None
}

/// Glob over record ids; a pattern also selects a family through its base id.
#[derive(Debug, Clone)]
pub struct IdFilter(Option<glob::Pattern>);

impl IdFilter {
    pub fn new(filter: Option<&str>) -> Result<Self, EvalError> {
        let pat = filter
            .map(|f| glob::Pattern::new(f).map_err(|e| EvalError::Other(format!("bad filter `{f}`: {e}"))))
            .transpose()?;
        Ok(IdFilter(pat))
    }

    pub fn matches(&self, id: &str) -> bool {
        let base = id.split('(').next().unwrap_or(id);
        self.0.as_ref().is_none_or(|p| p.matches(id) || p.matches(base))
    }
}

/// Records selected by the glob `filter`.
pub fn select(filter: Option<&str>) -> Result<Vec<IdentityRecord>, EvalError> {
    let f = IdFilter::new(filter)?;
    Ok(registry().into_iter().filter(|r| f.matches(&r.id)).collect())
}

/// Verifies every matching record in parallel; reports are sorted by id.
pub fn verify_all(filter: Option<&str>, tol_override: Option<f64>) -> Result<Vec<EvalReport>, EvalError> {
    verify_all_with(filter, tol_override, &PlanContext::default())
}

pub fn verify_all_with(
    filter: Option<&str>,
    tol_override: Option<f64>,
    ctx: &PlanContext,
) -> Result<Vec<EvalReport>, EvalError> {
    let records = select(filter)?;
    let mut reports: Vec<EvalReport> = records
        .par_iter()
        .map(|r| {
            let start = Instant::now();
            verify_record(r, tol_override, ctx).unwrap_or_else(|e| {
                let mut rep = EvalReport::failed(&r.id, r.anchor, &e);
                rep.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
                rep
            })
        })
        .collect();
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn rational_labels() {
        assert_eq!(fmt_rational(0.5), "1/2");
        assert_eq!(fmt_rational(1.5), "3/2");
        assert_eq!(fmt_rational(2.0), "2");
        assert_eq!(fmt_rational(-0.25), "-1/4");
    }

    #[test]
    fn ids_are_unique() {
        let reg = registry();
        let mut ids: Vec<&str> = reg.iter().map(|r| r.id.as_str()).collect();
        ids.sort();
        let n = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn lookup_rules() {
        assert_eq!(lookup("enu5-1").unwrap().tolerance, 1e-8);
        assert!(lookup("bg00").unwrap().erratum.is_some());
        assert!(matches!(lookup("kummer"), Err(EvalError::Ambiguous { .. })));
        assert!(matches!(lookup("nope"), Err(EvalError::UnknownId(_))));
        assert!(verify("nope", None).is_err());
    }

    #[test]
    fn kummer_quarter_pi() {
        let r = verify("kummer(a=1,b=1/2)", None).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!((r.lhs.re - PI / 4.0).abs() < 1e-12);
        assert!((r.rhs.re - PI / 4.0).abs() < 1e-14);
    }

    #[test]
    fn factor_search() {
        let l = real(0.467);
        let (v, how) = search_factor(l, real(3.0 * 0.467), 1e-8).unwrap();
        assert!((v - l).norm() < 1e-12);
        assert_eq!(how, "multiplied by 1/3");
        let z = crate::numerics::c(1.0, 2.0);
        let (_, how) = search_factor(z, z.conj() * -1.0, 1e-8).unwrap();
        assert_eq!(how, "conjugated and multiplied by -1");
        assert!(search_factor(l, real(0.5), 1e-8).is_none());
    }
}
