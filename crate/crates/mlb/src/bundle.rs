//! Bundle file schema and loading.
//!
//! A bundle is a UTF-8 JSON file with optional sections, each a map of
//! named entries.  All rationals are strings ("p/q" or "p"), all indices
//! are 1-based, and structure constants are listed sparsely: unlisted
//! entries are zero.  The loader symmetrizes nothing — a mock-Lie algebra
//! section must list both (i,j,k) and (j,i,k) explicitly.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use mocklie::algebra::{MockLieAlgebra, StructureConstants};
use mocklie::bialgebra::Cobracket;
use mocklie::matrix::Matrix;
use mocklie::prelie::MockPreLieAlgebra;
use mocklie::rep::{BilinearForm, Representation};
use mocklie::scalar::{format_scalar, parse_scalar, Scalar};
use mocklie::tensor::Tensor2;
use mocklie::ybe::RTensor;

use crate::CliError;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleFile {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub algebra: BTreeMap<String, AlgebraSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub representation: BTreeMap<String, RepSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub cobracket: BTreeMap<String, CobracketSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub r_tensor: BTreeMap<String, TensorSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub linear_map: BTreeMap<String, MatrixSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bilinear_form: BTreeMap<String, MatrixSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub prelie: BTreeMap<String, AlgebraSpec>,
}

/// Structure constants as sparse records: e_i ∘ e_j = Σ c · e_k.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub products: Vec<ProductEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

/// One square matrix per algebra basis element, row-major string entries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepSpec {
    pub module_dim: usize,
    pub action: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CobracketSpec {
    /// One tensor per basis element, in basis order.
    pub images: Vec<TensorSpec>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorSpec {
    #[serde(default)]
    pub entries: Vec<TensorEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorEntry {
    pub i: usize,
    pub j: usize,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixSpec {
    pub entries: Vec<Vec<String>>,
}

pub fn parse_bundle(text: &str) -> Result<BundleFile, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("bundle does not match the schema: {e}")))
}

fn scalar_at(ctx: &str, s: &str) -> Result<Scalar, CliError> {
    parse_scalar(s).map_err(|e| CliError::Validation(format!("{ctx}: {e}")))
}

/// Picks the single entry of a section, or the named one.
pub fn pick<'a, T>(
    section: &'a BTreeMap<String, T>,
    section_name: &str,
    requested: Option<&str>,
) -> Result<(&'a str, &'a T), CliError> {
    match requested {
        Some(name) => section
            .get_key_value(name)
            .map(|(k, v)| (k.as_str(), v))
            .ok_or_else(|| {
                CliError::Validation(format!("no entry named {name:?} in section {section_name:?}"))
            }),
        None => {
            let mut iter = section.iter();
            match (iter.next(), iter.next()) {
                (Some((k, v)), None) => Ok((k.as_str(), v)),
                (None, _) => Err(CliError::Validation(format!(
                    "missing required section {section_name:?}"
                ))),
                _ => Err(CliError::Validation(format!(
                    "section {section_name:?} has several entries; pick one by name"
                ))),
            }
        }
    }
}

/// Raw structure constants of an algebra section entry.  Commutativity of
/// the *listing* is required: the loader symmetrizes nothing.
pub fn algebra_constants(name: &str, spec: &AlgebraSpec) -> Result<StructureConstants, CliError> {
    let sc = sparse_constants(name, spec, true)?;
    Ok(sc)
}

/// Raw structure constants of a prelie section entry (no symmetry rule).
pub fn prelie_constants(name: &str, spec: &AlgebraSpec) -> Result<StructureConstants, CliError> {
    sparse_constants(name, spec, false)
}

fn sparse_constants(
    name: &str,
    spec: &AlgebraSpec,
    require_symmetric_listing: bool,
) -> Result<StructureConstants, CliError> {
    let dim = spec.dim;
    if let Some(basis) = &spec.basis {
        if basis.len() != dim {
            return Err(CliError::Validation(format!(
                "{name:?}: {} basis labels for dim {dim}",
                basis.len()
            )));
        }
    }
    let mut sc = StructureConstants::zeros(dim);
    let mut seen = BTreeMap::new();
    for (pos, entry) in spec.products.iter().enumerate() {
        let ctx = format!("{name:?}: product entry {}", pos + 1);
        for (label, idx) in [("i", entry.i), ("j", entry.j), ("k", entry.k)] {
            if idx == 0 || idx > dim {
                return Err(CliError::Validation(format!(
                    "{ctx}: index {label}={idx} out of range 1..={dim}"
                )));
            }
        }
        let c = scalar_at(&ctx, &entry.c)?;
        let key = (entry.i, entry.j, entry.k);
        if seen.insert(key, c.clone()).is_some() {
            return Err(CliError::Validation(format!(
                "{ctx}: duplicate entry for ({}, {}, {})",
                entry.i, entry.j, entry.k
            )));
        }
        sc.set(entry.i - 1, entry.j - 1, entry.k - 1, c);
    }
    if require_symmetric_listing {
        for (&(i, j, k), c) in &seen {
            if i != j {
                match seen.get(&(j, i, k)) {
                    Some(other) if other == c => {}
                    _ => {
                        return Err(CliError::Validation(format!(
                            "{name:?}: asymmetric listing: ({i}, {j}, {k}) has no matching ({j}, {i}, {k}) entry with the same coefficient"
                        )))
                    }
                }
            }
        }
    }
    Ok(sc)
}

/// The validated algebra of a bundle (used by every verb whose subject is
/// something else; an invalid algebra is an input error here).
pub fn validated_algebra(bundle: &BundleFile) -> Result<(String, MockLieAlgebra), CliError> {
    let (name, spec) = pick(&bundle.algebra, "algebra", None)?;
    let sc = algebra_constants(name, spec)?;
    let algebra = MockLieAlgebra::with_basis_names(sc, spec.basis.clone())
        .map_err(|e| CliError::Validation(format!("algebra {name:?}: {e}")))?;
    Ok((name.to_string(), algebra))
}

pub fn validated_prelie(bundle: &BundleFile) -> Result<(String, MockPreLieAlgebra), CliError> {
    let (name, spec) = pick(&bundle.prelie, "prelie", None)?;
    let sc = prelie_constants(name, spec)?;
    let p = MockPreLieAlgebra::new(sc)
        .map_err(|e| CliError::Validation(format!("prelie {name:?}: {e}")))?;
    Ok((name.to_string(), p))
}

pub fn matrix_from_spec(name: &str, spec: &MatrixSpec) -> Result<Matrix, CliError> {
    let rows = spec.entries.len();
    let cols = spec.entries.first().map_or(0, Vec::len);
    if spec.entries.iter().any(|r| r.len() != cols) {
        return Err(CliError::Validation(format!("{name:?}: ragged matrix rows")));
    }
    let mut m = Matrix::zeros(rows, cols);
    for (i, row) in spec.entries.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            let ctx = format!("{name:?}: entry ({}, {})", i + 1, j + 1);
            m.set(i, j, scalar_at(&ctx, s)?);
        }
    }
    Ok(m)
}

pub fn tensor2_from_spec(
    name: &str,
    spec: &TensorSpec,
    dim: usize,
) -> Result<Tensor2, CliError> {
    let mut t = Tensor2::zeros(dim, dim);
    for (pos, e) in spec.entries.iter().enumerate() {
        let ctx = format!("{name:?}: tensor entry {}", pos + 1);
        for (label, idx) in [("i", e.i), ("j", e.j)] {
            if idx == 0 || idx > dim {
                return Err(CliError::Validation(format!(
                    "{ctx}: index {label}={idx} out of range 1..={dim}"
                )));
            }
        }
        t.set(e.i - 1, e.j - 1, scalar_at(&ctx, &e.c)?);
    }
    Ok(t)
}

pub fn r_tensor(
    bundle: &BundleFile,
    algebra: &MockLieAlgebra,
    requested: Option<&str>,
) -> Result<(String, RTensor), CliError> {
    let (name, spec) = pick(&bundle.r_tensor, "r_tensor", requested)?;
    let t = tensor2_from_spec(name, spec, algebra.dim())?;
    let r = RTensor::new(algebra.clone(), t)
        .map_err(|e| CliError::Validation(format!("r_tensor {name:?}: {e}")))?;
    Ok((name.to_string(), r))
}

pub fn bilinear_form(
    bundle: &BundleFile,
    algebra: &MockLieAlgebra,
    requested: Option<&str>,
) -> Result<(String, BilinearForm), CliError> {
    let (name, spec) = pick(&bundle.bilinear_form, "bilinear_form", requested)?;
    let gram = matrix_from_spec(name, spec)?;
    let w = BilinearForm::new(algebra.clone(), gram)
        .map_err(|e| CliError::Validation(format!("bilinear_form {name:?}: {e}")))?;
    Ok((name.to_string(), w))
}

pub fn linear_map(
    bundle: &BundleFile,
    requested: Option<&str>,
) -> Result<(String, Matrix), CliError> {
    let (name, spec) = pick(&bundle.linear_map, "linear_map", requested)?;
    let m = matrix_from_spec(name, spec)?;
    Ok((name.to_string(), m))
}

/// Raw action matrices of a representation entry (shape-checked, not
/// validated against the anticommutator identity).
pub fn rep_action(
    name: &str,
    spec: &RepSpec,
    algebra: &MockLieAlgebra,
) -> Result<Vec<Matrix>, CliError> {
    if spec.action.len() != algebra.dim() {
        return Err(CliError::Validation(format!(
            "representation {name:?}: {} matrices for a dim-{} algebra",
            spec.action.len(),
            algebra.dim()
        )));
    }
    let mut out = Vec::with_capacity(spec.action.len());
    for (idx, rows) in spec.action.iter().enumerate() {
        let m = matrix_from_spec(&format!("{name}[{}]", idx + 1), &MatrixSpec {
            entries: rows.clone(),
        })?;
        if m.rows() != spec.module_dim || m.cols() != spec.module_dim {
            return Err(CliError::Validation(format!(
                "representation {name:?}: matrix {} is {}x{}, expected {}x{}",
                idx + 1,
                m.rows(),
                m.cols(),
                spec.module_dim,
                spec.module_dim
            )));
        }
        out.push(m);
    }
    Ok(out)
}

/// A validated representation: the named entry, or the adjoint when the
/// bundle has no representation section and no name was requested.
pub fn representation(
    bundle: &BundleFile,
    algebra: &MockLieAlgebra,
    requested: Option<&str>,
) -> Result<(String, Representation), CliError> {
    if requested.is_none() && bundle.representation.is_empty() {
        return Ok(("adjoint".to_string(), algebra.adjoint_rep()));
    }
    let (name, spec) = pick(&bundle.representation, "representation", requested)?;
    let action = rep_action(name, spec, algebra)?;
    let rep = Representation::new(algebra.clone(), action)
        .map_err(|e| CliError::Validation(format!("representation {name:?}: {e}")))?;
    Ok((name.to_string(), rep))
}

pub fn cobracket(
    bundle: &BundleFile,
    algebra: &MockLieAlgebra,
) -> Result<(String, Cobracket), CliError> {
    let (name, spec) = pick(&bundle.cobracket, "cobracket", None)?;
    if spec.images.len() != algebra.dim() {
        return Err(CliError::Validation(format!(
            "cobracket {name:?}: {} images for a dim-{} algebra",
            spec.images.len(),
            algebra.dim()
        )));
    }
    let mut images = Vec::with_capacity(spec.images.len());
    for (idx, t) in spec.images.iter().enumerate() {
        images.push(tensor2_from_spec(
            &format!("{name}[{}]", idx + 1),
            t,
            algebra.dim(),
        )?);
    }
    let d = Cobracket::new(algebra.clone(), images)
        .map_err(|e| CliError::Validation(format!("cobracket {name:?}: {e}")))?;
    Ok((name.to_string(), d))
}

// ---------------------------------------------------------------------
// emission: constructed objects back into bundle specs
// ---------------------------------------------------------------------

pub fn algebra_to_spec(a: &MockLieAlgebra) -> AlgebraSpec {
    let n = a.dim();
    let mut products = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in a.multiply_basis(i, j).iter().enumerate() {
                if !num_traits_is_zero(c) {
                    products.push(ProductEntry {
                        i: i + 1,
                        j: j + 1,
                        k: k + 1,
                        c: format_scalar(c),
                    });
                }
            }
        }
    }
    AlgebraSpec {
        dim: n,
        basis: Some(a.basis_names().to_vec()),
        products,
    }
}

pub fn prelie_to_spec(p: &MockPreLieAlgebra) -> AlgebraSpec {
    let n = p.dim();
    let mut products = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in p.multiply_basis(i, j).iter().enumerate() {
                if !num_traits_is_zero(c) {
                    products.push(ProductEntry {
                        i: i + 1,
                        j: j + 1,
                        k: k + 1,
                        c: format_scalar(c),
                    });
                }
            }
        }
    }
    AlgebraSpec {
        dim: n,
        basis: None,
        products,
    }
}

pub fn tensor2_to_spec(t: &Tensor2) -> TensorSpec {
    TensorSpec {
        entries: t
            .support()
            .into_iter()
            .map(|(i, j, c)| TensorEntry {
                i: i + 1,
                j: j + 1,
                c: format_scalar(&c),
            })
            .collect(),
    }
}

pub fn matrix_to_spec(m: &Matrix) -> MatrixSpec {
    MatrixSpec {
        entries: (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| format_scalar(m.get(i, j))).collect())
            .collect(),
    }
}

pub fn rep_to_spec(r: &Representation) -> RepSpec {
    RepSpec {
        module_dim: r.module_dim(),
        action: r
            .matrices()
            .iter()
            .map(|m| matrix_to_spec(m).entries)
            .collect(),
    }
}

pub fn cobracket_to_spec(d: &Cobracket) -> CobracketSpec {
    CobracketSpec {
        images: d.images().iter().map(tensor2_to_spec).collect(),
    }
}

fn num_traits_is_zero(c: &Scalar) -> bool {
    mocklie::scalar::is_zero(c)
}
