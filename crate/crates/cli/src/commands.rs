use std::fs;

use psl2cov_core::covering::{
    compare_claims, covering_report, decompose, pointwise_power, stated_claims, ClaimOutcome,
};
use psl2cov_core::error::Error;
use psl2cov_core::numtheory::prime_power;
use psl2cov_core::oracle;
use psl2cov_core::rootsums::lemma_sweep;
use psl2cov_core::tables::{character_table, group_params, CharLabel, CharacterTable};
use rayon::prelude::*;
use thiserror::Error;

use crate::args::{Cli, Command, Common, Format};
use crate::document::*;
use crate::render;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

/// Root-sum sweep range used by `verify`.
const VERIFY_T_RANGE: std::ops::RangeInclusive<u64> = 1..=12;

#[derive(Debug, Error)]
#[error("{message}")]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotAPrimePower(_)
            | Error::CaseMismatch { .. }
            | Error::InvalidSumSpec(_)
            | Error::InvalidCyclotomic(_)
            | Error::UnknownCharacter(_)
            | Error::UnknownClass(_)
            | Error::CharacterNotInTable { .. }
            | Error::MultiplicityOverflow { .. } => EXIT_USAGE,
            Error::ExponentCapExceeded { .. } => EXIT_CAP,
            Error::IntegralityViolation { .. }
            | Error::NegativeMultiplicity { .. }
            | Error::CapExceeded { .. }
            | Error::MatchFailure { .. } => EXIT_VERIFY,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// What a command prints and the exit code it asks for.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub document: OutputDocument,
    pub stdout: String,
    pub code: i32,
}

fn finish(
    payload: Payload,
    common: &Common,
    text: impl FnOnce(&Payload) -> String,
    code: i32,
) -> Outcome {
    let document = OutputDocument::new(payload, common.reproducible);
    let stdout = match common.format {
        Format::Json => document.to_json() + "\n",
        Format::Text => text(&document.payload),
    };
    Outcome {
        document,
        stdout,
        code,
    }
}

pub fn table_for(q: u64) -> Result<CharacterTable, CliError> {
    Ok(character_table(&group_params(q)?))
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Table { q, common } => {
            let table = table_for(*q)?;
            Ok(finish(
                Payload::Table(TableDoc::from(&table)),
                common,
                |_| render::table(&table),
                EXIT_OK,
            ))
        }
        Command::Decompose {
            q,
            character,
            power,
            common,
        } => {
            let doc = decomposition(*q, character, *power)?;
            Ok(finish(
                Payload::Decomposition(doc),
                common,
                render::payload,
                EXIT_OK,
            ))
        }
        Command::Covering { q, tmax, common } => {
            let report = covering_report(&table_for(*q)?, *tmax)?;
            Ok(finish(
                Payload::CoveringReport(report),
                common,
                render::payload,
                EXIT_OK,
            ))
        }
        Command::Verify { q, oracle, common } => {
            let doc = verification(*q, *oracle)?;
            let code = if doc.passed() { EXIT_OK } else { EXIT_VERIFY };
            Ok(finish(
                Payload::VerificationReport(doc),
                common,
                render::payload,
                code,
            ))
        }
        Command::Sweep {
            q_min,
            q_max,
            tmax,
            out,
            jobs,
            common,
        } => {
            let doc = sweep(*q_min, *q_max, *tmax, *jobs)?;
            if let Some(path) = out {
                fs::write(path, sweep_csv_string(&doc.rows))
                    .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            }
            let code = if doc.rows.iter().any(|r| r.error.is_some()) {
                EXIT_CAP
            } else {
                EXIT_OK
            };
            Ok(finish(
                Payload::SweepRows(doc),
                common,
                render::payload,
                code,
            ))
        }
    }
}

pub fn decomposition(q: u64, character: &str, power: u32) -> Result<DecompositionDoc, CliError> {
    if power == 0 {
        return Err(usage("--power must be at least 1"));
    }
    let table = table_for(q)?;
    let label: CharLabel = character.parse()?;
    let chi = table.require(label)?;
    let d = decompose(&pointwise_power(&table, chi, power))?;
    Ok(DecompositionDoc {
        q,
        character: label,
        power,
        multiplicities: table
            .labels()
            .map(|l| Multiplicity {
                label: l,
                multiplicity: d.multiplicity(l),
            })
            .collect(),
        complete: d.is_complete(&table),
    })
}

pub fn verification(q: u64, with_oracle: bool) -> Result<VerificationDoc, CliError> {
    let table = table_for(q)?;
    let params = table.params;
    let mut internal_failures = Vec::new();

    let table_validity = table.validate();
    if !table_validity.all_pass() {
        internal_failures.push(format!("table validity: {:?}", table_validity.failures));
    }
    let lemma = lemma_sweep(&params, VERIFY_T_RANGE);
    for c in &lemma.counterexamples {
        internal_failures.push(format!(
            "root sum {:?} t = {} index = {}: closed form {} but direct sum {}",
            c.kind, c.t, c.index, c.expected, c.direct
        ));
    }
    let claims = compare_claims(&table, &stated_claims(&params))?;
    let mut claim_summary = ClaimSummary::default();
    for f in &claims {
        match f.result {
            ClaimOutcome::Match => claim_summary.matched += 1,
            ClaimOutcome::Mismatch { .. } => claim_summary.mismatched += 1,
            ClaimOutcome::NotApplicable { .. } => claim_summary.not_applicable += 1,
        }
    }
    let oracle = if !with_oracle {
        OracleSection::NotRequested
    } else {
        match oracle::cross_validate(&table) {
            Ok(report) => {
                if !report.all_pass() {
                    internal_failures.push("explicit group disagrees with the table".to_string());
                }
                OracleSection::Ran(report)
            }
            Err(e @ Error::CapExceeded { .. }) => OracleSection::Skipped {
                reason: e.to_string(),
            },
            Err(e) => {
                internal_failures.push(e.to_string());
                OracleSection::Failed {
                    reason: e.to_string(),
                }
            }
        }
    };
    Ok(VerificationDoc {
        q,
        case: params.case,
        table_validity,
        lemma_sweep: lemma,
        claim_summary,
        claims,
        oracle,
        internal_failures,
    })
}

fn sweep_row(q: u64, tmax: u32) -> SweepRow {
    let params = group_params(q).expect("sweep only visits prime powers");
    match covering_report(&character_table(&params), tmax) {
        Ok(r) => SweepRow {
            q,
            case: params.case,
            covering_number: Some(r.covering_number),
            theorem_expected: r.theorem_expected,
            matches: r.matches_theorem,
            error: None,
        },
        Err(e) => SweepRow {
            q,
            case: params.case,
            covering_number: None,
            theorem_expected: psl2cov_core::covering::theorem_expected(q),
            matches: None,
            error: Some(e.to_string()),
        },
    }
}

pub fn sweep(q_min: u64, q_max: u64, tmax: u32, jobs: Option<usize>) -> Result<SweepDoc, CliError> {
    if q_min < 4 || q_min > q_max {
        return Err(usage(format!(
            "need 4 <= q-min <= q-max, got {q_min}..{q_max}"
        )));
    }
    if jobs == Some(0) {
        return Err(usage("--jobs must be at least 1"));
    }
    let qs: Vec<u64> = (q_min..=q_max)
        .filter(|&q| prime_power(q).is_some())
        .collect();
    let compute = || {
        qs.par_iter()
            .map(|&q| sweep_row(q, tmax))
            .collect::<Vec<_>>()
    };
    let rows = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| usage(e.to_string()))?
            .install(compute),
        None => compute(),
    };
    Ok(SweepDoc {
        q_min,
        q_max,
        tmax,
        rows,
    })
}
