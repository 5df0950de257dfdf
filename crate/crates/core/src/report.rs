//! Serialized forms of engine results.
//!
//! Every integer that can outgrow 53 bits (z, class sizes, coefficients,
//! histogram counts) is written as a decimal string.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::engine::{CycleCountHistogram, Parity, Skipped, SweepOutcome, SweepSummary, Timings, VerificationReport};
use crate::error::Result;
use crate::partition::Partition;
use crate::poly::IntPolynomial;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

fn decimal_coeffs(p: &IntPolynomial) -> Vec<String> {
    p.coeffs().iter().map(BigInt::to_string).collect()
}

fn decimal_histogram(h: &CycleCountHistogram) -> BTreeMap<usize, String> {
    h.iter().map(|(k, c)| (k, c.to_string())).collect()
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ChecksJson {
    pub parity: bool,
    pub identity: bool,
    pub f_log_concave: bool,
    pub f_log_concave_witness: Option<usize>,
    pub f_internal_zeros: bool,
    pub f_real_rooted: bool,
    pub p_purely_imaginary: bool,
    pub oracle: Option<bool>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct TimingsJson {
    pub histogram: f64,
    pub polynomials: f64,
    pub analysis: f64,
    pub oracle: Option<f64>,
}

impl From<&Timings> for TimingsJson {
    fn from(t: &Timings) -> Self {
        let ms = |d: std::time::Duration| d.as_secs_f64() * 1e3;
        TimingsJson {
            histogram: ms(t.histogram),
            polynomials: ms(t.polynomials),
            analysis: ms(t.analysis),
            oracle: t.oracle.map(ms),
        }
    }
}

/// One verification report. `timings_ms` is null unless timings were
/// requested, which keeps default output reproducible byte for byte.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ReportJson {
    pub n: usize,
    pub lambda: Vec<usize>,
    pub z: String,
    pub class_size: String,
    pub parity_case: Parity,
    pub representative: String,
    #[serde(rename = "F")]
    pub f: String,
    #[serde(rename = "P")]
    pub p: String,
    #[serde(rename = "F_coeffs")]
    pub f_coeffs: Vec<String>,
    #[serde(rename = "P_coeffs")]
    pub p_coeffs: Vec<String>,
    pub checks: ChecksJson,
    pub histogram: BTreeMap<usize, String>,
    pub timings_ms: Option<TimingsJson>,
}

impl ReportJson {
    pub fn new(r: &VerificationReport, with_timings: bool) -> Self {
        ReportJson {
            n: r.n(),
            lambda: r.lambda.parts().to_vec(),
            z: r.z.to_string(),
            class_size: r.class_size.to_string(),
            parity_case: r.parity_case,
            representative: r.representative.to_string(),
            f: r.f.to_string(),
            p: r.p.to_string(),
            f_coeffs: decimal_coeffs(&r.f),
            p_coeffs: decimal_coeffs(&r.p),
            checks: ChecksJson {
                parity: r.parity_ok,
                identity: r.identity_ok,
                f_log_concave: r.f_log_concave(),
                f_log_concave_witness: r.f_log_concavity.witness(),
                f_internal_zeros: r.f_internal_zeros,
                f_real_rooted: r.f_real_rooted,
                p_purely_imaginary: r.p_purely_imaginary,
                oracle: r.oracle_ok(),
            },
            histogram: decimal_histogram(&r.histogram),
            timings_ms: with_timings.then(|| TimingsJson::from(&r.timings)),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TallyJson {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SummaryJson {
    pub reports: usize,
    pub skipped: usize,
    pub failures: usize,
    pub parity: TallyJson,
    pub identity: TallyJson,
    pub f_log_concave: TallyJson,
    pub f_real_rooted: TallyJson,
    pub p_purely_imaginary: TallyJson,
    pub oracle: TallyJson,
    pub f_internal_zeros: usize,
}

impl From<&SweepSummary> for SummaryJson {
    fn from(s: &SweepSummary) -> Self {
        let t = |c: crate::engine::CheckTally| TallyJson {
            pass: c.pass,
            fail: c.fail,
        };
        SummaryJson {
            reports: s.reports,
            skipped: s.skipped,
            failures: s.failures(),
            parity: t(s.parity),
            identity: t(s.identity),
            f_log_concave: t(s.f_log_concave),
            f_real_rooted: t(s.f_real_rooted),
            p_purely_imaginary: t(s.p_purely_imaginary),
            oracle: t(s.oracle),
            f_internal_zeros: s.f_internal_zeros,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SkippedJson {
    pub lambda: Vec<usize>,
    pub reason: String,
}

impl From<&Skipped> for SkippedJson {
    fn from(s: &Skipped) -> Self {
        SkippedJson {
            lambda: s.lambda.parts().to_vec(),
            reason: s.reason.clone(),
        }
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct SweepJson {
    pub max_n: usize,
    pub oracle: bool,
    pub summary: SummaryJson,
    pub skipped: Vec<SkippedJson>,
    pub reports: Vec<ReportJson>,
}

/// Output of `compute`: the polynomials without any verdicts.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ComputeJson {
    pub n: usize,
    pub lambda: Vec<usize>,
    pub z: String,
    pub class_size: String,
    pub parity_case: Parity,
    pub representative: String,
    #[serde(rename = "F")]
    pub f: String,
    #[serde(rename = "P")]
    pub p: String,
    #[serde(rename = "F_coeffs")]
    pub f_coeffs: Vec<String>,
    #[serde(rename = "P_coeffs")]
    pub p_coeffs: Vec<String>,
    pub histogram: BTreeMap<usize, String>,
}

impl ComputeJson {
    pub fn new(h: &CycleCountHistogram, f: &IntPolynomial, p: &IntPolynomial) -> Self {
        let lam = h.partition();
        ComputeJson {
            n: lam.n(),
            lambda: lam.parts().to_vec(),
            z: lam.z().to_string(),
            class_size: lam.class_size().to_string(),
            parity_case: crate::engine::parity_case(lam),
            representative: lam.canonical_permutation().to_string(),
            f: f.to_string(),
            p: p.to_string(),
            f_coeffs: decimal_coeffs(f),
            p_coeffs: decimal_coeffs(p),
            histogram: decimal_histogram(h),
        }
    }
}

/// Output of `oracle`: P by all three routes.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct OracleJson {
    pub n: usize,
    pub lambda: Vec<usize>,
    pub p_histogram: Vec<String>,
    pub p_class_sum: Option<Vec<String>>,
    pub p_conjugation: Option<Vec<String>>,
    pub agree: bool,
}

impl OracleJson {
    pub fn new(
        lam: &Partition,
        from_histogram: &IntPolynomial,
        class_sum: Option<&IntPolynomial>,
        conjugation: Option<&IntPolynomial>,
    ) -> Self {
        let agree = [class_sum, conjugation].into_iter().flatten().all(|q| q == from_histogram);
        OracleJson {
            n: lam.n(),
            lambda: lam.parts().to_vec(),
            p_histogram: decimal_coeffs(from_histogram),
            p_class_sum: class_sum.map(decimal_coeffs),
            p_conjugation: conjugation.map(decimal_coeffs),
            agree,
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn join(items: &[String]) -> String {
    items.join(";")
}

fn opt_bool(b: Option<bool>) -> String {
    b.map_or_else(String::new, |b| b.to_string())
}

#[derive(Serialize)]
struct ReportRow<'a> {
    n: usize,
    lambda: String,
    z: &'a str,
    class_size: &'a str,
    parity_case: Parity,
    #[serde(rename = "F_coeffs")]
    f_coeffs: String,
    #[serde(rename = "P_coeffs")]
    p_coeffs: String,
    parity: bool,
    identity: bool,
    f_log_concave: bool,
    f_log_concave_witness: String,
    f_internal_zeros: bool,
    f_real_rooted: bool,
    p_purely_imaginary: bool,
    oracle: String,
    histogram: String,
}

/// One row per report, coefficient arrays joined by `;`.
pub fn reports_to_csv(reports: &[ReportJson]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in reports {
        let lambda = r.lambda.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        w.serialize(ReportRow {
            n: r.n,
            lambda,
            z: &r.z,
            class_size: &r.class_size,
            parity_case: r.parity_case,
            f_coeffs: join(&r.f_coeffs),
            p_coeffs: join(&r.p_coeffs),
            parity: r.checks.parity,
            identity: r.checks.identity,
            f_log_concave: r.checks.f_log_concave,
            f_log_concave_witness: r.checks.f_log_concave_witness.map_or_else(String::new, |k| k.to_string()),
            f_internal_zeros: r.checks.f_internal_zeros,
            f_real_rooted: r.checks.f_real_rooted,
            p_purely_imaginary: r.checks.p_purely_imaginary,
            oracle: opt_bool(r.checks.oracle),
            histogram: r
                .histogram
                .iter()
                .map(|(k, c)| format!("{k}:{c}"))
                .collect::<Vec<_>>()
                .join(";"),
        })?;
    }
    csv_string(w)
}

fn csv_string(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn compute_to_csv(c: &ComputeJson) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["n", "lambda", "z", "class_size", "parity_case", "F_coeffs", "P_coeffs"])?;
    let lambda = c.lambda.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    w.write_record([
        c.n.to_string(),
        lambda,
        c.z.clone(),
        c.class_size.clone(),
        c.parity_case.to_string(),
        join(&c.f_coeffs),
        join(&c.p_coeffs),
    ])?;
    csv_string(w)
}

pub fn oracle_to_csv(o: &OracleJson) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["n", "lambda", "p_histogram", "p_class_sum", "p_conjugation", "agree"])?;
    let lambda = o.lambda.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    let opt = |v: &Option<Vec<String>>| v.as_deref().map(join).unwrap_or_default();
    w.write_record([
        o.n.to_string(),
        lambda,
        join(&o.p_histogram),
        opt(&o.p_class_sum),
        opt(&o.p_conjugation),
        o.agree.to_string(),
    ])?;
    csv_string(w)
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

fn case_label(case: Parity) -> &'static str {
    match case {
        Parity::Even => "even case: P = (n/z)·q·F(q²)",
        Parity::Odd => "odd case: P = (n/z)·q²·F(q²)",
    }
}

pub fn report_to_text(r: &ReportJson) -> String {
    let lambda = r.lambda.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    let mut s = String::new();
    let _ = writeln!(s, "λ = ({lambda})  n = {}  z = {}  class size = {}", r.n, r.z, r.class_size);
    let _ = writeln!(s, "  π = {}", r.representative);
    let _ = writeln!(s, "  {}", case_label(r.parity_case));
    let hist = r
        .histogram
        .iter()
        .map(|(k, c)| format!("κ={k}: {c}"))
        .collect::<Vec<_>>()
        .join(", ");
    let _ = writeln!(s, "  histogram of κ(ζπ): {hist}");
    let _ = writeln!(s, "  F(q) = {}", r.f);
    let _ = writeln!(s, "  P(q) = {}", r.p);
    let c = &r.checks;
    let lc = match c.f_log_concave_witness {
        Some(k) => format!("FAILED at k={k}"),
        None => "ok".into(),
    };
    let _ = writeln!(s, "  parity of κ(ζπ): {}", verdict(c.parity));
    let _ = writeln!(s, "  identity: {}", verdict(c.identity));
    let _ = writeln!(s, "  F log-concave: {lc}");
    let _ = writeln!(s, "  F internal zeros: {}", if c.f_internal_zeros { "yes" } else { "no" });
    let _ = writeln!(s, "  F real-rooted: {}", verdict(c.f_real_rooted));
    let _ = writeln!(s, "  P purely imaginary roots: {}", verdict(c.p_purely_imaginary));
    let _ = writeln!(s, "  oracle: {}", c.oracle.map_or("not run", verdict));
    if let Some(t) = &r.timings_ms {
        let _ = writeln!(
            s,
            "  timings (ms): histogram {:.3}, polynomials {:.3}, analysis {:.3}{}",
            t.histogram,
            t.polynomials,
            t.analysis,
            t.oracle.map(|o| format!(", oracle {o:.3}")).unwrap_or_default()
        );
    }
    s
}

pub fn sweep_to_text(sweep: &SweepJson) -> String {
    let mut s = String::new();
    for r in &sweep.reports {
        s.push_str(&report_to_text(r));
    }
    for k in &sweep.skipped {
        let lambda = k.lambda.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        let _ = writeln!(s, "skipped λ = ({lambda}): {}", k.reason);
    }
    let m = &sweep.summary;
    let _ = writeln!(
        s,
        "summary: {} reports, {} skipped, {} failed checks (n <= {})",
        m.reports, m.skipped, m.failures, sweep.max_n
    );
    for (name, t) in [
        ("parity", &m.parity),
        ("identity", &m.identity),
        ("F log-concave", &m.f_log_concave),
        ("F real-rooted", &m.f_real_rooted),
        ("P purely imaginary", &m.p_purely_imaginary),
        ("oracle", &m.oracle),
    ] {
        let _ = writeln!(s, "  {name}: {} pass, {} fail", t.pass, t.fail);
    }
    let _ = writeln!(s, "  F with internal zeros: {}", m.f_internal_zeros);
    s
}

pub fn compute_to_text(c: &ComputeJson) -> String {
    let lambda = c.lambda.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    format!(
        "λ = ({lambda})  n = {}  z = {}  class size = {}\n  π = {}\n  {}\n  F(q) = {}\n  P(q) = {}\n",
        c.n,
        c.z,
        c.class_size,
        c.representative,
        case_label(c.parity_case),
        c.f,
        c.p
    )
}

pub fn oracle_to_text(o: &OracleJson) -> String {
    let lambda = o.lambda.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    let show = |v: &Option<Vec<String>>| v.as_ref().map_or("skipped (budget)".to_string(), |c| c.join(" "));
    format!(
        "λ = ({lambda})  n = {}\n  P from histogram:   {}\n  P by class sum:     {}\n  P by conjugation:   {}\n  agree: {}\n",
        o.n,
        o.p_histogram.join(" "),
        show(&o.p_class_sum),
        show(&o.p_conjugation),
        o.agree
    )
}

impl SweepJson {
    pub fn new(outcome: &SweepOutcome, max_n: usize, oracle: bool, with_timings: bool) -> Self {
        SweepJson {
            max_n,
            oracle,
            summary: SummaryJson::from(&outcome.summary),
            skipped: outcome.skipped.iter().map(SkippedJson::from).collect(),
            reports: outcome.reports.iter().map(|r| ReportJson::new(r, with_timings)).collect(),
        }
    }
}
