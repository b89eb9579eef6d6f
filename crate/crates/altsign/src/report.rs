//! Structured results for identity checks. Every check produces a
//! `CheckReport`; a report that stays free of witnesses passes. Reports
//! serialize to single-line JSON (for JSON-lines streams) or key-value CSV.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::poly::{LaurentPoly, VarSet};
use crate::rational::Rat;

/// Upper bound on stored witnesses per report; beyond this the report only
/// counts suppressed ones, keeping output bounded when an identity is badly
/// violated.
pub const MAX_WITNESSES: usize = 10;

/// One concrete violation of a checked claim.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Witness {
    /// Two polynomials disagree at a monomial: the exact coefficients on each
    /// side are recorded.
    #[serde(rename_all = "camelCase")]
    MonomialMismatch {
        comparison: String,
        monomial: String,
        lhs: String,
        rhs: String,
    },
    /// Two scalar evaluations disagree at a sampled point.
    #[serde(rename_all = "camelCase")]
    ValueMismatch {
        trial: u64,
        point: BTreeMap<String, String>,
        lhs: String,
        rhs: String,
        context: String,
    },
    /// A counted or computed quantity differs from its claimed value.
    #[serde(rename_all = "camelCase")]
    ClaimMismatch {
        claim: String,
        claimed: String,
        observed: String,
        context: String,
    },
}

/// Outcome of one identity check.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckReport {
    pub identity: String,
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub pass: bool,
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub suppressed_witnesses: u64,
    pub notes: String,
}

fn is_zero(v: &u64) -> bool {
    *v == 0
}

impl CheckReport {
    pub fn new(identity: &str, n: usize, trials: u64, seed: u64) -> Self {
        Self {
            identity: identity.to_string(),
            n,
            trials,
            seed,
            pass: true,
            witnesses: Vec::new(),
            suppressed_witnesses: 0,
            notes: String::new(),
        }
    }

    /// Records a violation. The report fails from the first witness on.
    pub fn push(&mut self, witness: Witness) {
        self.pass = false;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness);
        } else {
            self.suppressed_witnesses += 1;
        }
    }

    /// Appends free-form context (normalization decisions, scope notes).
    pub fn note(&mut self, text: impl AsRef<str>) {
        if !self.notes.is_empty() {
            self.notes.push_str("; ");
        }
        self.notes.push_str(text.as_ref());
    }

    pub fn pass(&self) -> bool {
        self.pass
    }

    /// Total violations observed, including suppressed ones.
    pub fn witness_count(&self) -> u64 {
        self.witnesses.len() as u64 + self.suppressed_witnesses
    }

    /// 0 when the identity held, 1 when a witness was found.
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }

    /// Key-value CSV: a header row, one row per scalar field, then one row
    /// per witness with the witness JSON as the value.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["field", "value"]).unwrap();
        w.write_record(["identity", &self.identity]).unwrap();
        w.write_record(["n", &self.n.to_string()]).unwrap();
        w.write_record(["trials", &self.trials.to_string()]).unwrap();
        w.write_record(["seed", &self.seed.to_string()]).unwrap();
        w.write_record(["pass", &self.pass.to_string()]).unwrap();
        w.write_record(["witnessCount", &self.witness_count().to_string()]).unwrap();
        for (i, witness) in self.witnesses.iter().enumerate() {
            let json = serde_json::to_string(witness).unwrap();
            w.write_record([format!("witness{}", i + 1).as_str(), json.as_str()]).unwrap();
        }
        w.write_record(["notes", &self.notes]).unwrap();
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }
}

/// Renders a sampled evaluation point for witness records.
pub fn format_point<'a>(
    assignments: impl IntoIterator<Item = (&'a str, &'a Rat)>,
) -> BTreeMap<String, String> {
    assignments
        .into_iter()
        .map(|(name, value)| (name.to_string(), value.to_string()))
        .collect()
}

/// Compares two polynomials term by term, pushing one witness per monomial
/// whose coefficients differ.
pub fn compare_polynomials(
    report: &mut CheckReport,
    comparison: &str,
    lhs: &LaurentPoly,
    rhs: &LaurentPoly,
    vars: &VarSet,
) {
    let diff = lhs.sub(rhs);
    for (monomial, _) in diff.terms() {
        report.push(Witness::MonomialMismatch {
            comparison: comparison.to_string(),
            monomial: monomial.display_with(vars),
            lhs: lhs.coefficient(monomial).to_string(),
            rhs: rhs.coefficient(monomial).to_string(),
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{LaurentMonomial, VarId};
    use crate::rational::{int, rat};

    #[test]
    fn fresh_report_passes_and_witnesses_flip_it() {
        let mut r = CheckReport::new("demo", 3, 10, 42);
        assert!(r.pass());
        assert_eq!(r.exit_code(), 0);
        r.push(Witness::ClaimMismatch {
            claim: "count".into(),
            claimed: "7".into(),
            observed: "6".into(),
            context: "order 3".into(),
        });
        assert!(!r.pass());
        assert_eq!(r.exit_code(), 1);
        assert_eq!(r.witness_count(), 1);
    }

    #[test]
    fn witnesses_beyond_the_cap_are_counted_not_stored() {
        let mut r = CheckReport::new("demo", 2, 0, 0);
        for i in 0..(MAX_WITNESSES as u64 + 5) {
            r.push(Witness::ClaimMismatch {
                claim: format!("c{i}"),
                claimed: "0".into(),
                observed: "1".into(),
                context: String::new(),
            });
        }
        assert_eq!(r.witnesses.len(), MAX_WITNESSES);
        assert_eq!(r.suppressed_witnesses, 5);
        assert_eq!(r.witness_count(), MAX_WITNESSES as u64 + 5);
        assert!(r.to_json().contains("\"suppressedWitnesses\":5"));
    }

    #[test]
    fn json_round_trips_and_uses_stable_field_names() {
        let mut r = CheckReport::new("borchardt", 4, 10, 7);
        r.note("sampled points avoid vanishing denominators");
        r.push(Witness::ValueMismatch {
            trial: 3,
            point: format_point([("x1", &rat(1, 2))]),
            lhs: "5".into(),
            rhs: "6".into(),
            context: "determinant vs permanent".into(),
        });
        let json = r.to_json();
        assert!(json.contains("\"identity\":\"borchardt\""));
        assert!(json.contains("\"kind\":\"valueMismatch\""));
        assert!(json.contains("\"x1\":\"1/2\""));
        let back: CheckReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn csv_escapes_embedded_quotes_and_commas() {
        let mut r = CheckReport::new("demo", 1, 0, 0);
        r.note(r#"contains "quotes", commas"#);
        let csv = r.to_csv();
        let last = csv.lines().last().unwrap();
        assert_eq!(last, r#"notes,"contains ""quotes"", commas""#);
    }

    #[test]
    fn polynomial_comparison_lists_each_differing_monomial() {
        let x = VarId(0);
        let vars = VarSet::new(["x"]);
        let lhs = LaurentPoly::from_terms([
            (LaurentMonomial::unit(), int(1)),
            (LaurentMonomial::var(x), int(2)),
        ]);
        let rhs = LaurentPoly::from_terms([
            (LaurentMonomial::unit(), int(1)),
            (LaurentMonomial::var(x), int(3)),
            (LaurentMonomial::var_pow(x, 2), int(1)),
        ]);

        let mut same = CheckReport::new("demo", 1, 0, 0);
        compare_polynomials(&mut same, "p vs p", &lhs, &lhs, &vars);
        assert!(same.pass());

        let mut diff = CheckReport::new("demo", 1, 0, 0);
        compare_polynomials(&mut diff, "p vs q", &lhs, &rhs, &vars);
        assert_eq!(diff.witness_count(), 2);
        assert!(matches!(
            &diff.witnesses[0],
            Witness::MonomialMismatch { monomial, lhs, rhs, .. }
                if monomial == "x" && lhs == "2" && rhs == "3"
        ));
        assert!(matches!(
            &diff.witnesses[1],
            Witness::MonomialMismatch { monomial, lhs, rhs, .. }
                if monomial == "x^2" && lhs == "0" && rhs == "1"
        ));
    }
}
