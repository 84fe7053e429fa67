use std::collections::BTreeMap;
use std::path::Path;

use distab_core::certify::{Certificate, EnumerationReport, Verdict};
use distab_core::duality::DualityCertificate;
use distab_core::ideal::RadicalMethod;
use serde::Serialize;

use crate::suite::SuiteCheck;
use crate::{CliError, EXIT_INCONSISTENT, EXIT_OK, EXIT_SUITE_FAILURE};

pub const REPORT_FORMAT: u32 = 1;
pub const TOOL: &str = "distab";

#[derive(Debug, Serialize)]
pub struct Report {
    pub format: u32,
    pub tool: String,
    pub version: String,
    pub command: String,
    pub seed: u64,
    /// SHA-256 of the scene file bytes; absent for `verify-suite`.
    pub input_digest: Option<String>,
    pub scene: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analysis: Option<Analysis>,
    pub certificates: Vec<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub enumeration: Option<EnumerationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<Vec<SuiteCheck>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct Analysis {
    pub algebra: String,
    pub modulus: u32,
    pub dim: usize,
    pub commutative: bool,
    pub center_dim: usize,
    pub radical_method: RadicalMethod,
    /// `dim A, dim J, dim J^2, …, 0`.
    pub radical_series: Vec<usize>,
    /// `dim soc^1, dim soc^2, …, dim A`.
    pub socle_series: Vec<usize>,
    pub dim_top: usize,
    pub frobenius: DualityCertificate,
    pub symmetric: DualityCertificate,
    pub ideals: BTreeMap<String, usize>,
    pub modules: BTreeMap<String, usize>,
}

#[derive(Serialize)]
struct CertificateRow<'a> {
    theorem_tag: &'a str,
    verdict: Verdict,
    consistent: bool,
    inputs: &'a str,
}

#[derive(Serialize)]
struct SuiteRow<'a> {
    criterion: u8,
    name: &'a str,
    passed: bool,
}

impl Report {
    pub fn new(command: &str, seed: u64) -> Self {
        Report {
            format: REPORT_FORMAT,
            tool: TOOL.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            seed,
            input_digest: None,
            scene: None,
            analysis: None,
            certificates: Vec::new(),
            enumeration: None,
            suite: None,
            timing_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn is_inconsistent(&self) -> bool {
        self.certificates
            .iter()
            .any(|c| c.verdict == Verdict::Inconsistent)
            || self
                .enumeration
                .as_ref()
                .is_some_and(|e| e.inconsistent > 0)
    }

    pub fn suite_failed(&self) -> bool {
        self.suite
            .as_ref()
            .is_some_and(|s| s.iter().any(|c| !c.passed))
    }

    pub fn exit_code(&self) -> i32 {
        if self.is_inconsistent() {
            EXIT_INCONSISTENT
        } else if self.suite_failed() {
            EXIT_SUITE_FAILURE
        } else {
            EXIT_OK
        }
    }

    /// Enumeration rows when present, else suite rows, else one row per certificate.
    pub fn write_csv(&self, path: &Path) -> Result<(), CliError> {
        let fail =
            |e: &dyn std::fmt::Display| CliError::Output(path.display().to_string(), e.to_string());
        let mut w = csv::Writer::from_path(path).map_err(|e| fail(&e))?;
        if let Some(e) = &self.enumeration {
            for row in &e.rows {
                w.serialize(row).map_err(|e| fail(&e))?;
            }
        } else if let Some(s) = &self.suite {
            for c in s {
                w.serialize(SuiteRow {
                    criterion: c.criterion,
                    name: &c.name,
                    passed: c.passed,
                })
                .map_err(|e| fail(&e))?;
            }
        } else {
            for c in &self.certificates {
                w.serialize(CertificateRow {
                    theorem_tag: &c.theorem_tag,
                    verdict: c.verdict,
                    consistent: c.is_consistent(),
                    inputs: &c.inputs,
                })
                .map_err(|e| fail(&e))?;
            }
        }
        w.flush().map_err(|e| fail(&e))
    }

    pub fn write_json(&self, path: &Path) -> Result<(), CliError> {
        std::fs::write(path, self.to_json())
            .map_err(|e| CliError::Output(path.display().to_string(), e.to_string()))
    }

    /// One line per certificate, enumeration row or suite check.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        if let Some(a) = &self.analysis {
            out += &format!(
                "{}: dim {}, center {}, radical series {:?}, socle series {:?}, frobenius {:?}, symmetric {:?}\n",
                a.algebra, a.dim, a.center_dim, a.radical_series, a.socle_series, a.frobenius.kind, a.symmetric.kind
            );
        }
        for c in &self.certificates {
            out += &format!(
                "{:<28} {:<13} {}\n",
                c.theorem_tag,
                format!("{:?}", c.verdict).to_lowercase(),
                c.inputs
            );
        }
        if let Some(e) = &self.enumeration {
            out += &format!(
                "{} ideals ({}), {} positive, {} inconsistent\n",
                e.records.len(),
                if e.exhaustive {
                    "exhaustive"
                } else if e.partial {
                    "partial"
                } else {
                    "sampled"
                },
                e.positives,
                e.inconsistent
            );
            for r in &e.rows {
                out += &format!(
                    "  dim {:>3}: {} ideals, {} positive\n",
                    r.dim, r.ideals, r.positives
                );
            }
        }
        if let Some(s) = &self.suite {
            for c in s {
                out += &format!(
                    "{} {:>2} {}\n",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.criterion,
                    c.name
                );
                if !c.passed {
                    for d in &c.details {
                        out += &format!("     {d}\n");
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use distab_core::certify::CrossCheck;

    fn cert(verdict: Verdict, equal: bool) -> Certificate {
        Certificate {
            theorem_tag: "quotient-embedding".into(),
            claim: String::new(),
            inputs: String::new(),
            conditions: BTreeMap::new(),
            verdict,
            cross_checks: vec![CrossCheck {
                name: "x".into(),
                lhs: "1".into(),
                rhs: if equal { "1" } else { "2" }.into(),
                equal,
            }],
        }
    }

    #[test]
    fn exit_codes() {
        let mut r = Report::new("certify", 0);
        assert_eq!(r.exit_code(), EXIT_OK);
        r.certificates.push(cert(Verdict::Negative, true));
        assert_eq!(r.exit_code(), EXIT_OK);
        r.certificates.push(cert(Verdict::Inconsistent, false));
        assert_eq!(r.exit_code(), EXIT_INCONSISTENT);
        let mut s = Report::new("verify-suite", 0);
        s.suite = Some(vec![SuiteCheck {
            criterion: 1,
            name: "x".into(),
            passed: false,
            details: Vec::new(),
        }]);
        assert_eq!(s.exit_code(), EXIT_SUITE_FAILURE);
    }

    #[test]
    fn json_ends_with_newline_and_omits_empty_sections() {
        let j = Report::new("analyze", 3).to_json();
        assert!(j.ends_with("}\n"));
        assert!(!j.contains("enumeration") && !j.contains("timing_ms"));
        assert!(j.contains("\"seed\": 3"));
    }
}
