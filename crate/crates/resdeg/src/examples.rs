//! The worked examples: each names a field, a checker and the residue degrees
//! asserted for it, and the runner confirms the assertions.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use resdeg_core::aut::DEFAULT_CEILING;
use resdeg_core::criteria::{
    check_cmain, check_pvaluation, check_two_power_counting, cmain_maximal_f, RCertificate,
};
use serde::Serialize;

use crate::data::{parse_records, DataError, FieldRecord};

pub const EXAMPLES_CSV: &str = include_str!("../data/examples.csv");
pub const REAL_PLUS_TABLE_CSV: &str = include_str!("../data/real_plus_table.csv");
pub const REAL_PLUS_EXAMPLES_CSV: &str = include_str!("../data/real_plus_examples.csv");
pub const CYCLOTOMIC_CSV: &str = include_str!("../data/cyclotomic.csv");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `Q(ζ_ℓ)^+`.
    Plus,
    /// `Q(ζ_ℓ)`.
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    CMain,
    PValuation(u64),
    TwoPower,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExampleSpec {
    pub no: u32,
    pub family: Family,
    pub ell: u64,
    pub method: Method,
    pub asserted: Vec<u64>,
}

pub fn parse_examples(text: &str) -> Result<Vec<ExampleSpec>, DataError> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).comment(Some(b'#')).from_reader(text.as_bytes());
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec?;
        let line = rec.position().map_or(0, |p| p.line());
        let err = |message: String| DataError::Line { line, message };
        let get = |i: usize| rec.get(i).unwrap_or("");
        let num = |s: &str| s.parse::<u64>().map_err(|e| err(format!("`{s}`: {e}")));
        let family = match get(1) {
            "plus" => Family::Plus,
            "full" => Family::Full,
            other => return Err(err(format!("unknown family `{other}`"))),
        };
        let method = match get(3) {
            "cmain" => Method::CMain,
            "pvaluation" => Method::PValuation(num(get(4))?),
            "two_power" => Method::TwoPower,
            other => return Err(err(format!("unknown method `{other}`"))),
        };
        let asserted = get(5).split_whitespace().map(num).collect::<Result<_, _>>()?;
        out.push(ExampleSpec { no: num(get(0))? as u32, family, ell: num(get(2))?, method, asserted });
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleOutcome {
    pub spec: ExampleSpec,
    pub field: String,
    pub h: u64,
    pub certificate: Option<RCertificate>,
    /// Asserted degrees the certificate confirms.
    pub confirmed: Vec<u64>,
    /// Asserted degrees it does not.
    pub missing: Vec<u64>,
    /// Certified degrees beyond the assertion.
    pub extra: Vec<u64>,
    /// Earlier example with the same field and method, if any.
    pub duplicate_of: Option<u32>,
    pub error: Option<String>,
}

impl ExampleOutcome {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.missing.is_empty()
    }
}

fn certify(spec: &ExampleSpec, rec: &FieldRecord) -> Result<(String, RCertificate), resdeg_core::Error> {
    let field = match spec.family {
        Family::Plus => rec.real_plus_field()?,
        Family::Full => rec.cyclotomic_field()?,
    };
    let cert = match spec.method {
        Method::CMain => check_cmain(&field, cmain_maximal_f(&field))?,
        Method::PValuation(p) => check_pvaluation(&field, p)?,
        Method::TwoPower => check_two_power_counting(&field, DEFAULT_CEILING)?,
    };
    Ok((field.label.clone(), cert))
}

/// Runs every example against the given records.
pub fn run_examples(specs: &[ExampleSpec], plus: &[FieldRecord], full: &[FieldRecord]) -> Vec<ExampleOutcome> {
    let mut seen: BTreeMap<(u64, bool, String), u32> = BTreeMap::new();
    specs
        .iter()
        .map(|spec| {
            let pool = if spec.family == Family::Plus { plus } else { full };
            let key = (spec.ell, spec.family == Family::Plus, format!("{:?}", spec.method));
            let duplicate_of = seen.get(&key).copied();
            seen.entry(key).or_insert(spec.no);
            let mut out = ExampleOutcome {
                spec: spec.clone(),
                field: String::new(),
                h: 0,
                certificate: None,
                confirmed: Vec::new(),
                missing: spec.asserted.clone(),
                extra: Vec::new(),
                duplicate_of,
                error: None,
            };
            let Some(rec) = pool.iter().find(|r| r.ell == spec.ell) else {
                out.error = Some(format!("no class-number record for {}", spec.ell));
                return out;
            };
            out.h = rec.h;
            match certify(spec, rec) {
                Ok((label, cert)) => {
                    let got = cert.nontrivial();
                    out.field = label;
                    out.confirmed = spec.asserted.iter().copied().filter(|f| got.contains(f)).collect();
                    out.missing = spec.asserted.iter().copied().filter(|f| !got.contains(f)).collect();
                    out.extra = got.into_iter().filter(|f| !spec.asserted.contains(f)).collect();
                    out.certificate = Some(cert);
                }
                Err(e) => out.error = Some(e.to_string()),
            }
            out
        })
        .collect()
}

/// The bundled examples against the bundled data.
pub fn run_bundled() -> Result<Vec<ExampleOutcome>, DataError> {
    let specs = parse_examples(EXAMPLES_CSV)?;
    let mut plus = parse_records(REAL_PLUS_TABLE_CSV)?;
    plus.extend(parse_records(REAL_PLUS_EXAMPLES_CSV)?);
    let full = parse_records(CYCLOTOMIC_CSV)?;
    Ok(run_examples(&specs, &plus, &full))
}

pub const TSV_HEADER: &str = "example\tfield\th\ttheorem\tR";

fn method_name(m: Method) -> String {
    match m {
        Method::CMain => "CMain".into(),
        Method::PValuation(p) => format!("PValuation(p={p})"),
        Method::TwoPower => "TwoPowerCounting".into(),
    }
}

/// Confirmed memberships per example, the golden-compared form.
pub fn to_tsv(outcomes: &[ExampleOutcome]) -> String {
    let mut out = String::from(TSV_HEADER);
    out.push('\n');
    for o in outcomes {
        let r = if o.confirmed.is_empty() {
            "-".to_string()
        } else {
            o.confirmed.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
        };
        let _ = writeln!(out, "{}\t{}\t{}\t{}\t{}", o.spec.no, o.field, o.h, method_name(o.spec.method), r);
    }
    out
}

/// Human-readable report with extras, duplicates and failures.
pub fn report(outcomes: &[ExampleOutcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        let status = if o.passed() { "ok" } else { "MISMATCH" };
        let _ = write!(out, "example {:>2}  {:<16} {:<20} {status}", o.spec.no, o.field, method_name(o.spec.method));
        if let Some(d) = o.duplicate_of {
            let _ = write!(out, "  (same field and method as example {d})");
        }
        if !o.extra.is_empty() {
            let _ = write!(out, "  also certified: {:?}", o.extra);
        }
        if !o.missing.is_empty() {
            let _ = write!(out, "  not certified: {:?}", o.missing);
        }
        if let Some(e) = &o.error {
            let _ = write!(out, "  error: {e}");
        }
        out.push('\n');
        if !o.passed() {
            if let Some(line) = o.certificate.as_ref().and_then(|c| c.failing_line()) {
                let _ = writeln!(out, "    failing hypothesis: {} {:?}", line.condition, line.witnesses);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_examples_confirm() {
        let out = run_bundled().unwrap();
        assert_eq!(out.len(), 11);
        assert!(out.iter().all(ExampleOutcome::passed), "{}", report(&out));
        assert_eq!(out[4].duplicate_of, Some(4));
        assert_eq!(out[7].extra, [27]);
        assert_eq!(out[10].confirmed, [2]);
    }
}
