//! Plain-text renderings. Values use GAP notation, `E(n)^k` for `zeta_n^k`.

use std::fmt::Write;

use psl2cov_core::covering::ClaimOutcome;
use psl2cov_core::tables::CharacterTable;

use crate::document::*;

fn grid(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// Classes as columns with their sizes, characters as rows.
pub fn table(t: &CharacterTable) -> String {
    let p = &t.params;
    let mut rows = vec![
        std::iter::once("class".to_string())
            .chain(t.classes.iter().map(|c| c.label.to_string()))
            .collect(),
        std::iter::once("size".to_string())
            .chain(t.classes.iter().map(|c| c.size.to_string()))
            .collect(),
    ];
    for chi in &t.characters {
        rows.push(
            std::iter::once(chi.label.to_string())
                .chain(chi.values.iter().map(|v| v.canonical().to_string()))
                .collect(),
        );
    }
    format!(
        "PSL2({}), order {}, case {}\n\n{}",
        p.q,
        p.order,
        p.case,
        grid(&rows)
    )
}

pub fn payload(p: &Payload) -> String {
    match p {
        Payload::Table(t) => table_doc(t),
        Payload::Decomposition(d) => decomposition(d),
        Payload::CoveringReport(r) => {
            let mut rows = vec![vec![
                "character".to_string(),
                "e".to_string(),
                "t".to_string(),
            ]];
            rows.extend(
                r.characters
                    .iter()
                    .map(|c| vec![c.label.to_string(), c.e.to_string(), c.t.to_string()]),
            );
            let expected = r
                .theorem_expected
                .map_or("n/a (q < 8)".to_string(), |e| e.to_string());
            let matches = r
                .matches_theorem
                .map_or("n/a".to_string(), |m| m.to_string());
            format!(
                "PSL2({}), case {}, tmax {}\n\n{}\ncovering number: {}\ntheorem expects: {}\nmatches theorem: {}\n",
                r.q,
                r.case,
                r.tmax,
                grid(&rows),
                r.covering_number,
                expected,
                matches
            )
        }
        Payload::VerificationReport(v) => verification(v),
        Payload::SweepRows(s) => sweep_csv_string(&s.rows),
    }
}

fn table_doc(t: &TableDoc) -> String {
    let mut rows = vec![
        std::iter::once("class".to_string())
            .chain(t.classes.iter().map(|c| c.label.to_string()))
            .collect(),
        std::iter::once("size".to_string())
            .chain(t.classes.iter().map(|c| c.size.to_string()))
            .collect(),
    ];
    for chi in &t.characters {
        let values = chi
            .values
            .iter()
            .map(|v| v.decode().map_or_else(|e| e.to_string(), |x| x.to_string()));
        rows.push(
            std::iter::once(chi.label.to_string())
                .chain(values)
                .collect(),
        );
    }
    format!(
        "PSL2({}), order {}, case {}\n\n{}",
        t.q,
        t.order,
        t.case,
        grid(&rows)
    )
}

fn decomposition(d: &DecompositionDoc) -> String {
    let mut rows = vec![vec!["constituent".to_string(), "multiplicity".to_string()]];
    rows.extend(
        d.multiplicities
            .iter()
            .map(|m| vec![m.label.to_string(), m.multiplicity.to_string()]),
    );
    format!(
        "PSL2({}): {}^{}\n\n{}\ncomplete: {}\n",
        d.q,
        d.character,
        d.power,
        grid(&rows),
        d.complete
    )
}

fn verification(v: &VerificationDoc) -> String {
    let mut s = String::new();
    let pass = |b: bool| if b { "pass" } else { "FAIL" };
    let tv = &v.table_validity;
    writeln!(s, "PSL2({}), case {}", v.q, v.case).unwrap();
    writeln!(s).unwrap();
    writeln!(s, "row orthogonality      {}", pass(tv.row_orthogonality)).unwrap();
    writeln!(
        s,
        "column orthogonality   {}",
        pass(tv.column_orthogonality)
    )
    .unwrap();
    writeln!(s, "degree sum             {}", pass(tv.degree_sum)).unwrap();
    writeln!(s, "class size sum         {}", pass(tv.class_size_sum)).unwrap();
    writeln!(s, "class count            {}", pass(tv.class_count)).unwrap();
    let ls = &v.lemma_sweep;
    writeln!(
        s,
        "root sums              {} ({} checked, {} counterexamples)",
        pass(ls.counterexamples.is_empty()),
        ls.checked,
        ls.counterexamples.len()
    )
    .unwrap();
    for d in &ls.printed_deviations {
        writeln!(
            s,
            "  quoted closed form differs: {:?} t={} index={}: quoted {}, direct {}",
            d.kind, d.t, d.index, d.expected, d.direct
        )
        .unwrap();
    }
    let cs = &v.claim_summary;
    writeln!(
        s,
        "stated inner products  {} matched, {} mismatched, {} not applicable",
        cs.matched, cs.mismatched, cs.not_applicable
    )
    .unwrap();
    for f in &v.claims {
        if let ClaimOutcome::Mismatch { claimed, computed } = f.result {
            writeln!(
                s,
                "  mismatch {}: <{}^{}, {}> stated {}, computed {}",
                f.claim.location, f.claim.base, f.claim.power, f.claim.target, claimed, computed
            )
            .unwrap();
        }
    }
    match &v.oracle {
        OracleSection::NotRequested => writeln!(s, "explicit group         not requested").unwrap(),
        OracleSection::Skipped { reason } => {
            writeln!(s, "explicit group         skipped: {reason}").unwrap()
        }
        OracleSection::Failed { reason } => {
            writeln!(s, "explicit group         FAIL: {reason}").unwrap()
        }
        OracleSection::Ran(r) => {
            writeln!(
                s,
                "explicit group         {} (order {}, {} classes, column norms {})",
                pass(r.all_pass()),
                r.group_order,
                r.class_count,
                pass(r.orthogonality.all_pass())
            )
            .unwrap();
        }
    }
    writeln!(s).unwrap();
    writeln!(s, "status: {}", if v.passed() { "pass" } else { "FAIL" }).unwrap();
    for f in &v.internal_failures {
        writeln!(s, "  {f}").unwrap();
    }
    s
}
