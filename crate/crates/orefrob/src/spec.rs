//! JSON descriptions of extensions, witnesses, and analysis reports.
//!
//! An extension file carries four sections: the field (characteristic,
//! degree, modulus), the algebra (dimension, unit, structure constants,
//! optional labels and trace functional), sigma as a square matrix whose
//! column `j` is the image of the `j`-th basis element, and delta either as
//! such a matrix or as `{"kind": "inner", "element": [...]}`.
//!
//! Field elements serialize as ascending integer coefficient arrays with
//! entries in `[0, p)`; algebra elements as arrays of field elements;
//! skew polynomials as arrays of algebra elements in ascending degree.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraElement, AlgebraError, LinMap, MapDefect, TensorSquareElement};
use crate::decide::{
    AnalysisReport, Entry, LinearFunctional, SecondKindWitness, SeparabilityChecks, Status,
};
use crate::field::{FieldElement, FieldError, FiniteField};
use crate::linalg::Matrix;
use crate::ore::{OreError, OreExtension, OrePoly};

/// Errors while loading a description file. Each validation stage has its
/// own variant so failures are reported at the level that caused them.
#[derive(Debug, Error)]
pub enum SpecError {
    /// The file could not be read.
    #[error("cannot read the description: {0}")]
    Io(#[from] std::io::Error),
    /// The JSON is malformed or has the wrong overall shape.
    #[error("malformed JSON: {0}")]
    Parse(#[from] serde_json::Error),
    /// The field section is invalid (bad prime, reducible modulus, ...).
    #[error("invalid field description: {0}")]
    Field(#[from] FieldError),
    /// The algebra section is invalid (unit axiom, associativity, ...).
    #[error("invalid algebra description: {0}")]
    Algebra(#[from] AlgebraError),
    /// The sigma matrix is not an algebra automorphism.
    #[error("sigma is not an algebra automorphism: {0}")]
    Sigma(MapDefect),
    /// The delta data is not a sigma-derivation.
    #[error("delta is not a sigma-derivation: {0}")]
    Delta(MapDefect),
    /// A section has inconsistent dimensions.
    #[error("inconsistent shape: {0}")]
    Shape(String),
}

impl From<OreError> for SpecError {
    fn from(e: OreError) -> SpecError {
        match e {
            OreError::SigmaInvalid(d) => SpecError::Sigma(d),
            OreError::DeltaInvalid(d) => SpecError::Delta(d),
        }
    }
}

type ElementDto = Vec<u64>;
type VectorDto = Vec<ElementDto>;
type MatrixDto = Vec<VectorDto>;

#[derive(Serialize, Deserialize)]
struct FieldDto {
    p: u64,
    degree: usize,
    modulus: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct AlgebraDto {
    dim: usize,
    unit: VectorDto,
    structure_constants: Vec<Vec<VectorDto>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace_hint: Option<VectorDto>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum DeltaDto {
    Matrix { matrix: MatrixDto },
    Inner { element: VectorDto },
}

#[derive(Serialize, Deserialize)]
struct ExtensionDto {
    field: FieldDto,
    algebra: AlgebraDto,
    sigma: MatrixDto,
    delta: DeltaDto,
}

fn element_from_dto(field: &FiniteField, dto: &[u64]) -> Result<FieldElement, SpecError> {
    Ok(field.element(dto)?)
}

fn vector_from_dto(
    field: &FiniteField,
    dim: usize,
    dto: &VectorDto,
    what: &str,
) -> Result<AlgebraElement, SpecError> {
    if dto.len() != dim {
        return Err(SpecError::Shape(format!(
            "{what} must list {dim} coordinates, got {}",
            dto.len()
        )));
    }
    let coords = dto
        .iter()
        .map(|c| element_from_dto(field, c))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AlgebraElement::new(coords))
}

fn matrix_from_dto(
    field: &FiniteField,
    dim: usize,
    dto: &MatrixDto,
    what: &str,
) -> Result<Matrix, SpecError> {
    if dto.len() != dim || dto.iter().any(|row| row.len() != dim) {
        return Err(SpecError::Shape(format!("{what} must be a {dim} x {dim} matrix")));
    }
    let mut entries = Vec::with_capacity(dim * dim);
    for row in dto {
        for e in row {
            entries.push(element_from_dto(field, e)?);
        }
    }
    Ok(Matrix::new(dim, dim, entries))
}

fn element_to_dto(e: &FieldElement) -> ElementDto {
    e.coeffs().to_vec()
}

fn vector_to_dto(v: &AlgebraElement) -> VectorDto {
    v.coords().iter().map(element_to_dto).collect()
}

fn matrix_to_dto(m: &Matrix) -> MatrixDto {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| element_to_dto(m.at(i, j))).collect())
        .collect()
}

fn extension_from_dto(dto: &ExtensionDto) -> Result<OreExtension, SpecError> {
    let field = FiniteField::new(dto.field.p, dto.field.modulus.clone())?;
    if field.degree() != dto.field.degree {
        return Err(SpecError::Shape(format!(
            "declared degree {} does not match the modulus (degree {})",
            dto.field.degree,
            field.degree()
        )));
    }
    let a = &dto.algebra;
    let dim = a.dim;
    if dim == 0 {
        return Err(SpecError::Algebra(AlgebraError::ZeroDimension));
    }
    if a.structure_constants.len() != dim
        || a.structure_constants.iter().any(|row| row.len() != dim)
    {
        return Err(SpecError::Shape(format!(
            "structure constants must form a {dim} x {dim} table"
        )));
    }
    let mut products = Vec::with_capacity(dim * dim);
    for (i, row) in a.structure_constants.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            products.push(vector_from_dto(
                &field,
                dim,
                entry,
                &format!("structure constant [{i}][{j}]"),
            )?);
        }
    }
    let unit = vector_from_dto(&field, dim, &a.unit, "the unit")?;
    let mut algebra = Algebra::new(field.clone(), dim, products, unit)?;
    if let Some(labels) = &a.labels {
        if labels.len() != dim {
            return Err(SpecError::Shape(format!(
                "labels must list {dim} names, got {}",
                labels.len()
            )));
        }
        algebra = algebra.with_labels(labels.clone());
    }
    if let Some(hint) = &a.trace_hint {
        let hint = vector_from_dto(&field, dim, hint, "the trace functional")?;
        algebra = algebra.with_trace_hint(hint.coords().to_vec());
    }
    let sigma = LinMap::new(matrix_from_dto(&field, dim, &dto.sigma, "sigma")?);
    let delta = match &dto.delta {
        DeltaDto::Matrix { matrix } => LinMap::new(matrix_from_dto(&field, dim, matrix, "delta")?),
        DeltaDto::Inner { element } => {
            let b = vector_from_dto(&field, dim, element, "the inner delta generator")?;
            // the generator formula needs sigma validated first
            algebra
                .validate_automorphism(&sigma)
                .map_err(SpecError::Sigma)?;
            algebra.inner_derivation(&sigma, &b)
        }
    };
    Ok(OreExtension::new(algebra, sigma, delta)?)
}

fn extension_to_dto(ore: &OreExtension) -> ExtensionDto {
    let alg = ore.algebra();
    let field = alg.field();
    let dim = alg.dim();
    ExtensionDto {
        field: FieldDto {
            p: field.characteristic(),
            degree: field.degree(),
            modulus: field.modulus().to_vec(),
        },
        algebra: AlgebraDto {
            dim,
            unit: vector_to_dto(&alg.one()),
            structure_constants: (0..dim)
                .map(|i| (0..dim).map(|j| vector_to_dto(alg.basis_product(i, j))).collect())
                .collect(),
            labels: alg.labels().map(<[String]>::to_vec),
            trace_hint: alg
                .trace_hint()
                .map(|h| h.iter().map(element_to_dto).collect()),
        },
        sigma: matrix_to_dto(ore.sigma().matrix()),
        delta: DeltaDto::Matrix {
            matrix: matrix_to_dto(ore.delta().matrix()),
        },
    }
}

/// Parse an extension description from a JSON string.
pub fn extension_from_json(json: &str) -> Result<OreExtension, SpecError> {
    let dto: ExtensionDto = serde_json::from_str(json)?;
    extension_from_dto(&dto)
}

/// Load an extension description from a file.
pub fn extension_from_path(path: &Path) -> Result<OreExtension, SpecError> {
    extension_from_json(&fs::read_to_string(path)?)
}

/// Serialize an extension to its description JSON (delta in matrix form).
pub fn extension_to_json(ore: &OreExtension) -> String {
    let mut out = serde_json::to_string_pretty(&extension_to_dto(ore)).expect("plain data");
    out.push('\n');
    out
}

/// Parse a tensor-square element (an r x r table of field elements, row
/// index = left leg) from a JSON string.
pub fn tensor_from_json(alg: &Algebra, json: &str) -> Result<TensorSquareElement, SpecError> {
    let dto: MatrixDto = serde_json::from_str(json)?;
    Ok(TensorSquareElement::from_matrix(matrix_from_dto(
        alg.field(),
        alg.dim(),
        &dto,
        "the tensor element",
    )?))
}

/// Load a tensor-square element from a file.
pub fn tensor_from_path(alg: &Algebra, path: &Path) -> Result<TensorSquareElement, SpecError> {
    tensor_from_json(alg, &fs::read_to_string(path)?)
}

/// Serialize a tensor-square element as its coefficient table.
pub fn tensor_to_json(p: &TensorSquareElement) -> String {
    let mut out = serde_json::to_string_pretty(&matrix_to_dto(p.coeffs())).expect("plain data");
    out.push('\n');
    out
}

/// Parse a skew polynomial (ascending coefficient list) from a JSON string.
pub fn poly_from_json(alg: &Algebra, json: &str) -> Result<OrePoly, SpecError> {
    let dto: Vec<VectorDto> = serde_json::from_str(json)?;
    let coeffs = dto
        .iter()
        .enumerate()
        .map(|(i, c)| vector_from_dto(alg.field(), alg.dim(), c, &format!("coefficient {i}")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(OrePoly::new(coeffs))
}

/// Serialize a skew polynomial as its ascending coefficient list.
pub fn poly_to_json(f: &OrePoly) -> String {
    let dto: Vec<VectorDto> = f.coeffs().iter().map(vector_to_dto).collect();
    let mut out = serde_json::to_string_pretty(&dto).expect("plain data");
    out.push('\n');
    out
}

/// Report statuses as they appear in JSON.
#[derive(Serialize, Deserialize, Clone, Copy, PartialEq, Eq, Debug)]
#[serde(rename_all = "kebab-case")]
pub enum StatusDto {
    /// Property holds.
    Yes,
    /// Property provably fails.
    No,
    /// The one-directional certificate is absent.
    NoCertificate,
    /// Enumeration was stopped by the budget.
    BudgetExceeded,
}

impl From<Status> for StatusDto {
    fn from(s: Status) -> StatusDto {
        match s {
            Status::Yes => StatusDto::Yes,
            Status::No => StatusDto::No,
            Status::NoCertificate => StatusDto::NoCertificate,
            Status::BudgetExceeded => StatusDto::BudgetExceeded,
        }
    }
}

impl StatusDto {
    /// The string used in JSON output.
    pub fn as_str(self) -> &'static str {
        match self {
            StatusDto::Yes => "yes",
            StatusDto::No => "no",
            StatusDto::NoCertificate => "no-certificate",
            StatusDto::BudgetExceeded => "budget-exceeded",
        }
    }
}

/// Report entry whose witness is a linear functional (its basis values).
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct FunctionalEntryDto {
    /// Decision status.
    pub status: StatusDto,
    /// Functional values on the basis.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<VectorDto>,
    /// Human-readable context.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Witness of the second-kind property.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct SecondKindWitnessDto {
    /// Scale on sigma.
    pub m: ElementDto,
    /// Scale on delta.
    pub n: ElementDto,
    /// Functional values on the basis.
    pub functional: VectorDto,
}

/// Report entry for the second-kind property.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct SecondKindEntryDto {
    /// Decision status.
    pub status: StatusDto,
    /// Twist pair and functional.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<SecondKindWitnessDto>,
    /// Human-readable context.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Report entry whose witness is a tensor-square element (its coefficient
/// table).
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct TensorEntryDto {
    /// Decision status.
    pub status: StatusDto,
    /// Coefficient table of the tensor witness.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<MatrixDto>,
    /// Human-readable context.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// JSON form of an analysis report. Fields are omitted when the
/// corresponding check was not requested.
#[derive(Serialize, Deserialize, Clone, PartialEq, Debug, Default)]
pub struct ReportDto {
    /// Frobenius decision.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frobenius: Option<FunctionalEntryDto>,
    /// Semi-Frobenius decision.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semi_frobenius: Option<FunctionalEntryDto>,
    /// The equivalent base-algebra decision.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_frobenius: Option<StatusDto>,
    /// Second-kind decision.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub second_kind: Option<SecondKindEntryDto>,
    /// Split certificate.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split_certificate: Option<FunctionalEntryDto>,
    /// Base-algebra separability.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_separable: Option<TensorEntryDto>,
    /// Extension separability certificate.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separability_certificate: Option<TensorEntryDto>,
    /// Derivations and implications applied while assembling the report.
    pub notes: Vec<String>,
}

fn functional_entry(
    e: &Entry<LinearFunctional>,
    include_witness: bool,
) -> FunctionalEntryDto {
    FunctionalEntryDto {
        status: e.status.into(),
        witness: e
            .witness
            .as_ref()
            .filter(|_| include_witness)
            .map(|w| w.values().iter().map(element_to_dto).collect()),
        detail: e.detail.clone(),
    }
}

fn second_kind_entry(
    e: &Entry<SecondKindWitness>,
    include_witness: bool,
) -> SecondKindEntryDto {
    SecondKindEntryDto {
        status: e.status.into(),
        witness: e.witness.as_ref().filter(|_| include_witness).map(|w| {
            SecondKindWitnessDto {
                m: element_to_dto(&w.m),
                n: element_to_dto(&w.n),
                functional: w.functional.values().iter().map(element_to_dto).collect(),
            }
        }),
        detail: e.detail.clone(),
    }
}

fn tensor_entry(e: &Entry<TensorSquareElement>, include_witness: bool) -> TensorEntryDto {
    TensorEntryDto {
        status: e.status.into(),
        witness: e
            .witness
            .as_ref()
            .filter(|_| include_witness)
            .map(|w| matrix_to_dto(w.coeffs())),
        detail: e.detail.clone(),
    }
}

/// Convert a report to its JSON form, optionally stripping witnesses.
pub fn report_to_dto(report: &AnalysisReport, include_witness: bool) -> ReportDto {
    ReportDto {
        frobenius: report
            .frobenius
            .as_ref()
            .map(|e| functional_entry(e, include_witness)),
        semi_frobenius: report
            .semi_frobenius
            .as_ref()
            .map(|e| functional_entry(e, include_witness)),
        base_frobenius: report.base_frobenius.map(StatusDto::from),
        second_kind: report
            .second_kind
            .as_ref()
            .map(|e| second_kind_entry(e, include_witness)),
        split_certificate: report
            .split_certificate
            .as_ref()
            .map(|e| functional_entry(e, include_witness)),
        base_separable: report
            .base_separable
            .as_ref()
            .map(|e| tensor_entry(e, include_witness)),
        separability_certificate: report
            .separability_certificate
            .as_ref()
            .map(|e| tensor_entry(e, include_witness)),
        notes: report.notes.clone(),
    }
}

/// Serialize a report JSON form.
pub fn report_to_json(dto: &ReportDto) -> String {
    let mut out = serde_json::to_string_pretty(dto).expect("plain data");
    out.push('\n');
    out
}

/// Parse a report JSON form back.
pub fn report_from_json(json: &str) -> Result<ReportDto, SpecError> {
    Ok(serde_json::from_str(json)?)
}

/// JSON form of the four certificate checks.
#[derive(Serialize, Deserialize, Clone, Copy, PartialEq, Eq, Debug)]
pub struct ChecksDto {
    /// `mu(p) = 1`.
    pub mu_is_one: bool,
    /// All Casimir defects vanish.
    pub is_casimir: bool,
    /// `(sigma (x) sigma)(p) = p`.
    pub sigma_fixed: bool,
    /// `(sigma (x) delta + delta (x) id)(p) = 0`.
    pub delta_killed: bool,
    /// Conjunction of the four checks.
    pub all_pass: bool,
}

impl From<SeparabilityChecks> for ChecksDto {
    fn from(c: SeparabilityChecks) -> ChecksDto {
        ChecksDto {
            mu_is_one: c.mu_is_one,
            is_casimir: c.is_casimir,
            sigma_fixed: c.sigma_fixed,
            delta_killed: c.delta_killed,
            all_pass: c.all_pass(),
        }
    }
}
