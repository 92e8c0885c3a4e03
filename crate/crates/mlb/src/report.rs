//! Deterministic machine- and human-readable reports.
//!
//! The verdict is pass exactly when every check flag is true.  JSON output
//! is schema-stable and byte-identical across runs for identical input;
//! rationals render as "p/q", never as decimals.

use std::collections::BTreeMap;

use serde::Serialize;

use mocklie::matrix::Matrix;
use mocklie::scalar::{format_scalar, Scalar};
use mocklie::tensor::{Tensor2, Tensor3};

use crate::bundle::BundleFile;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub verdict: &'static str,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bundle: Option<BundleFile>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub flag: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// First-violation data: the basis tuple where a check failed and the
/// nonzero residual coefficients there (truncated to the leading entry
/// unless the command ran with --verbose).
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    /// 1-based basis indices of the failing site.
    pub at: Vec<usize>,
    pub residual: Vec<ResidualEntry>,
    pub truncated: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ResidualEntry {
    /// 1-based component indices.
    pub index: Vec<usize>,
    pub value: String,
}

impl Report {
    pub fn new(command: &str, checks: Vec<Check>) -> Self {
        let verdict = if checks.iter().all(|c| c.flag) {
            "pass"
        } else {
            "fail"
        };
        Report {
            command: command.to_string(),
            verdict,
            checks,
            details: BTreeMap::new(),
            bundle: None,
        }
    }

    pub fn with_detail(mut self, key: &str, value: impl Into<String>) -> Self {
        self.details.insert(key.to_string(), value.into());
        self
    }

    pub fn with_bundle(mut self, bundle: BundleFile) -> Self {
        self.bundle = Some(bundle);
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn emit(&self, format: crate::Format) -> String {
        match format {
            crate::Format::Json => {
                let mut s =
                    serde_json::to_string_pretty(self).expect("report serialization is total");
                s.push('\n');
                s
            }
            crate::Format::Text => self.emit_text(),
        }
    }

    fn emit_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("verdict: {}\n", self.verdict));
        for check in &self.checks {
            if check.flag {
                out.push_str(&format!("check {}: pass\n", check.name));
            } else {
                match &check.witness {
                    Some(w) => {
                        let at = w
                            .at
                            .iter()
                            .map(ToString::to_string)
                            .collect::<Vec<_>>()
                            .join(",");
                        let residual = w
                            .residual
                            .iter()
                            .map(|e| {
                                format!(
                                    "({})={}",
                                    e.index
                                        .iter()
                                        .map(ToString::to_string)
                                        .collect::<Vec<_>>()
                                        .join(","),
                                    e.value
                                )
                            })
                            .collect::<Vec<_>>()
                            .join(", ");
                        let more = if w.truncated { ", ..." } else { "" };
                        out.push_str(&format!(
                            "check {}: FAIL at ({at}); residual: {residual}{more}\n",
                            check.name
                        ));
                    }
                    None => out.push_str(&format!("check {}: FAIL\n", check.name)),
                }
            }
        }
        for (key, value) in &self.details {
            out.push_str(&format!("detail {key}: {value}\n"));
        }
        if let Some(bundle) = &self.bundle {
            let mut sections = Vec::new();
            let mut list = |label: &str, names: Vec<&String>| {
                if !names.is_empty() {
                    sections.push(format!(
                        "{label}[{}]",
                        names
                            .iter()
                            .map(|s| s.as_str())
                            .collect::<Vec<_>>()
                            .join(",")
                    ));
                }
            };
            list("algebra", bundle.algebra.keys().collect());
            list("representation", bundle.representation.keys().collect());
            list("cobracket", bundle.cobracket.keys().collect());
            list("r_tensor", bundle.r_tensor.keys().collect());
            list("linear_map", bundle.linear_map.keys().collect());
            list("bilinear_form", bundle.bilinear_form.keys().collect());
            list("prelie", bundle.prelie.keys().collect());
            out.push_str(&format!(
                "bundle: {} (use --format json to capture it)\n",
                sections.join(", ")
            ));
        }
        out
    }
}

pub fn check(name: &'static str, flag: bool) -> Check {
    Check {
        name,
        flag,
        witness: None,
    }
}

pub fn check_with(name: &'static str, flag: bool, witness: Option<Witness>) -> Check {
    Check {
        name,
        flag,
        witness: if flag { None } else { witness },
    }
}

fn truncate(entries: Vec<ResidualEntry>, verbose: bool) -> (Vec<ResidualEntry>, bool) {
    if verbose || entries.len() <= 1 {
        (entries, false)
    } else {
        (entries.into_iter().take(1).collect(), true)
    }
}

/// Witness from a coefficient-vector residual.
pub fn vector_witness(at: &[usize], residual: &[Scalar], verbose: bool) -> Witness {
    let entries: Vec<ResidualEntry> = residual
        .iter()
        .enumerate()
        .filter(|(_, c)| !mocklie::scalar::is_zero(c))
        .map(|(k, c)| ResidualEntry {
            index: vec![k + 1],
            value: format_scalar(c),
        })
        .collect();
    let (residual, truncated) = truncate(entries, verbose);
    Witness {
        at: at.iter().map(|i| i + 1).collect(),
        residual,
        truncated,
    }
}

pub fn matrix_witness(at: &[usize], residual: &Matrix, verbose: bool) -> Witness {
    let mut entries = Vec::new();
    for i in 0..residual.rows() {
        for j in 0..residual.cols() {
            let c = residual.get(i, j);
            if !mocklie::scalar::is_zero(c) {
                entries.push(ResidualEntry {
                    index: vec![i + 1, j + 1],
                    value: format_scalar(c),
                });
            }
        }
    }
    let (residual, truncated) = truncate(entries, verbose);
    Witness {
        at: at.iter().map(|i| i + 1).collect(),
        residual,
        truncated,
    }
}

pub fn tensor2_witness(at: &[usize], residual: &Tensor2, verbose: bool) -> Witness {
    let entries: Vec<ResidualEntry> = residual
        .support()
        .into_iter()
        .map(|(i, j, c)| ResidualEntry {
            index: vec![i + 1, j + 1],
            value: format_scalar(&c),
        })
        .collect();
    let (residual, truncated) = truncate(entries, verbose);
    Witness {
        at: at.iter().map(|i| i + 1).collect(),
        residual,
        truncated,
    }
}

/// Witness for a nonzero 3-tensor, anchored at its first support index.
pub fn tensor3_witness(residual: &Tensor3, verbose: bool) -> Witness {
    let support = residual.support();
    let at = support
        .first()
        .map(|(idx, _)| vec![idx[0] + 1, idx[1] + 1, idx[2] + 1])
        .unwrap_or_default();
    let entries: Vec<ResidualEntry> = support
        .into_iter()
        .map(|(idx, c)| ResidualEntry {
            index: vec![idx[0] + 1, idx[1] + 1, idx[2] + 1],
            value: format_scalar(&c),
        })
        .collect();
    let (residual, truncated) = truncate(entries, verbose);
    Witness {
        at,
        residual,
        truncated,
    }
}

/// Witness from a scalar residual at a basis triple.
pub fn scalar_witness(at: &[usize], residual: &Scalar) -> Witness {
    Witness {
        at: at.iter().map(|i| i + 1).collect(),
        residual: vec![ResidualEntry {
            index: vec![],
            value: format_scalar(residual),
        }],
        truncated: false,
    }
}
