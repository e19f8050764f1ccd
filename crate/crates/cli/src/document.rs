//! The JSON output document and the sweep CSV format, both readable back.

use std::io;

use num_bigint::BigInt;
use psl2cov_core::covering::{ClaimFinding, CoveringReport};
use psl2cov_core::cyclotomic::Cyclotomic;
use psl2cov_core::oracle::OracleReport;
use psl2cov_core::rootsums::LemmaSweepReport;
use psl2cov_core::tables::{CharLabel, CharacterTable, ClassLabel, ParityCase, TableValidity};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Bumped on any change to the payload shapes below.
pub const SCHEMA_VERSION: &str = "1.0.0";

#[derive(Debug, Error)]
pub enum DecodeError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
    pub payload: Payload,
}

impl OutputDocument {
    pub fn new(payload: Payload, reproducible: bool) -> Self {
        let timestamp = (!reproducible)
            .then(|| chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true));
        OutputDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            timestamp,
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, DecodeError> {
        let doc: OutputDocument = serde_json::from_str(s)?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(DecodeError::Invalid(format!(
                "unsupported schema_version {}",
                doc.schema_version
            )));
        }
        Ok(doc)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Table(TableDoc),
    Decomposition(DecompositionDoc),
    CoveringReport(CoveringReport),
    VerificationReport(VerificationDoc),
    SweepRows(SweepDoc),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Approx {
    pub re: f64,
    pub im: f64,
}

/// An exact cyclotomic integer as `sum coeff * E(conductor)^exp`, with the
/// coefficients as decimal strings. `approx` is for human readers only and
/// is ignored when decoding.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CyclotomicJson {
    pub conductor: u64,
    pub terms: Vec<(u64, String)>,
    pub approx: Approx,
}

fn round10(x: f64) -> f64 {
    let r = (x * 1e10).round() / 1e10;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

impl From<&Cyclotomic> for CyclotomicJson {
    fn from(x: &Cyclotomic) -> Self {
        let c = x.canonical();
        let (re, im) = c.approx();
        CyclotomicJson {
            conductor: c.conductor(),
            terms: c.terms().map(|(e, k)| (e, k.to_string())).collect(),
            approx: Approx {
                re: round10(re),
                im: round10(im),
            },
        }
    }
}

impl CyclotomicJson {
    pub fn decode(&self) -> Result<Cyclotomic, DecodeError> {
        let terms = self
            .terms
            .iter()
            .map(|(e, k)| {
                k.parse::<BigInt>()
                    .map(|k| (*e, k))
                    .map_err(|_| DecodeError::Invalid(format!("bad coefficient `{k}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Cyclotomic::from_terms(self.conductor, terms)
            .map_err(|e| DecodeError::Invalid(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Cyclotomic, DecodeError> {
        serde_json::from_str::<CyclotomicJson>(s)?.decode()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassDoc {
    pub label: ClassLabel,
    pub size: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub param: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharacterDoc {
    pub label: CharLabel,
    pub degree: u64,
    pub values: Vec<CyclotomicJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableDoc {
    pub q: u64,
    pub case: ParityCase,
    pub order: u64,
    pub conductor: u64,
    pub classes: Vec<ClassDoc>,
    pub characters: Vec<CharacterDoc>,
}

impl From<&CharacterTable> for TableDoc {
    fn from(t: &CharacterTable) -> Self {
        TableDoc {
            q: t.params.q,
            case: t.params.case,
            order: t.params.order,
            conductor: t.params.conductor,
            classes: t
                .classes
                .iter()
                .map(|c| ClassDoc {
                    label: c.label,
                    size: c.size,
                    param: c.param,
                })
                .collect(),
            characters: t
                .characters
                .iter()
                .map(|c| CharacterDoc {
                    label: c.label,
                    degree: c.degree,
                    values: c.values.iter().map(CyclotomicJson::from).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multiplicity {
    pub label: CharLabel,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionDoc {
    pub q: u64,
    pub character: CharLabel,
    pub power: u32,
    pub multiplicities: Vec<Multiplicity>,
    pub complete: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ClaimSummary {
    pub matched: usize,
    pub mismatched: usize,
    pub not_applicable: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum OracleSection {
    NotRequested,
    Skipped { reason: String },
    Ran(OracleReport),
    Failed { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationDoc {
    pub q: u64,
    pub case: ParityCase,
    pub table_validity: TableValidity,
    pub lemma_sweep: LemmaSweepReport,
    pub claim_summary: ClaimSummary,
    pub claims: Vec<ClaimFinding>,
    pub oracle: OracleSection,
    /// Problems with the computation itself, as opposed to claim mismatches.
    pub internal_failures: Vec<String>,
}

impl VerificationDoc {
    pub fn passed(&self) -> bool {
        self.internal_failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub q: u64,
    pub case: ParityCase,
    /// `None` when the computation failed; see `error`.
    pub covering_number: Option<u32>,
    pub theorem_expected: Option<u32>,
    #[serde(rename = "match")]
    pub matches: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepDoc {
    pub q_min: u64,
    pub q_max: u64,
    pub tmax: u32,
    pub rows: Vec<SweepRow>,
}

pub const CSV_HEADER: [&str; 5] = ["q", "case", "covering_number", "theorem_expected", "match"];
const ERROR: &str = "ERROR";
const NA: &str = "NA";

/// Writes sweep rows as CSV. Failed rows carry `ERROR` in the result columns;
/// the error message itself is only kept in the JSON form.
pub fn write_sweep_csv<W: io::Write>(out: W, rows: &[SweepRow]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        let opt = |v: Option<u32>, missing: &str| v.map_or(missing.to_string(), |v| v.to_string());
        let covering = opt(r.covering_number, ERROR);
        let expected = opt(r.theorem_expected, NA);
        let matches = match (r.covering_number, r.matches) {
            (None, _) => ERROR.to_string(),
            (Some(_), None) => NA.to_string(),
            (Some(_), Some(m)) => m.to_string(),
        };
        w.write_record([
            r.q.to_string(),
            r.case.to_string(),
            covering,
            expected,
            matches,
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn sweep_csv_string(rows: &[SweepRow]) -> String {
    let mut buf = Vec::new();
    write_sweep_csv(&mut buf, rows).expect("writing to memory");
    String::from_utf8(buf).expect("CSV output is UTF-8")
}

/// Reads rows written by [`write_sweep_csv`]. `error` is `Some("ERROR")` for
/// failed rows.
pub fn read_sweep_csv<R: io::Read>(input: R) -> Result<Vec<SweepRow>, DecodeError> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(input);
    let header: Vec<String> = r.headers()?.iter().map(str::to_string).collect();
    if header != CSV_HEADER {
        return Err(DecodeError::Invalid(format!(
            "unexpected header {header:?}"
        )));
    }
    let bad = |what: &str, v: &str| DecodeError::Invalid(format!("bad {what} `{v}`"));
    let mut rows = Vec::new();
    for record in r.records() {
        let rec = record?;
        if rec.len() != CSV_HEADER.len() {
            return Err(DecodeError::Invalid(format!(
                "expected 5 fields, got {}",
                rec.len()
            )));
        }
        let q: u64 = rec[0].parse().map_err(|_| bad("q", &rec[0]))?;
        let case: ParityCase = match &rec[1] {
            "even" => ParityCase::Even,
            "1mod4" => ParityCase::OneMod4,
            "3mod4" => ParityCase::ThreeMod4,
            other => return Err(bad("case", other)),
        };
        let theorem_expected = match &rec[3] {
            NA => None,
            v => Some(v.parse().map_err(|_| bad("theorem_expected", v))?),
        };
        let row = match (&rec[2], &rec[4]) {
            (ERROR, ERROR) => SweepRow {
                q,
                case,
                covering_number: None,
                theorem_expected,
                matches: None,
                error: Some(ERROR.to_string()),
            },
            (c, m) => {
                let covering: u32 = c.parse().map_err(|_| bad("covering_number", c))?;
                let matches = match m {
                    NA => None,
                    "true" => Some(true),
                    "false" => Some(false),
                    other => return Err(bad("match", other)),
                };
                if matches.is_some() != theorem_expected.is_some()
                    || matches.is_some_and(|m| m != (Some(covering) == theorem_expected))
                {
                    return Err(DecodeError::Invalid(format!(
                        "inconsistent row for q = {q}"
                    )));
                }
                SweepRow {
                    q,
                    case,
                    covering_number: Some(covering),
                    theorem_expected,
                    matches,
                    error: None,
                }
            }
        };
        rows.push(row);
    }
    Ok(rows)
}
