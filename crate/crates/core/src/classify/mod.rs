//! Attainability of epr-sequences over GF(2) and of pr-sequences over
//! fields of characteristic 2.
//!
//! ```
//! use eprseq::{classify_epr_z2, EprSequence};
//!
//! let v = classify_epr_z2(&"NSNA".parse::<EprSequence>().unwrap());
//! assert_eq!(v.render(), "ATTAINABLE N4");
//! let v = classify_epr_z2(&"NSA".parse::<EprSequence>().unwrap());
//! assert_eq!(v.render(), "NOT ATTAINABLE NSA-prohibition");
//! ```

mod forms;
mod rules;

use std::collections::BTreeSet;

use serde::Serialize;

pub use forms::FormId;
pub use rules::{rule_violations, RuleHit, RULES};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::sequence::{EprSequence, PrSequence};

/// Outcome of a classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    /// The sequence as given.
    pub sequence: String,
    pub attainable: bool,
    /// Every form the sequence matches.
    pub matched: Vec<FormId>,
    /// Rules the sequence breaks. Always empty for pr-sequences.
    pub violations: Vec<RuleHit>,
    /// Order-1 pr-sequences, which the pr forms do not cover and which are
    /// decided directly from the definitions.
    pub extension: bool,
}

impl Verdict {
    /// One line: `ATTAINABLE <forms>` or `NOT ATTAINABLE <rules>`.
    ///
    /// The rule list names each rule that flags a position no earlier rule
    /// flagged, so overlapping consequences of one defect collapse to the
    /// first rule. [`Verdict::violations`] keeps all of them.
    pub fn render(&self) -> String {
        if self.attainable {
            let forms: Vec<&str> = self.matched.iter().map(|f| f.name()).collect();
            let mut line = format!("ATTAINABLE {}", forms.join(","));
            if self.extension {
                line.push_str(" (order-1 extension)");
            }
            return line;
        }
        let shown = self.leading_rules();
        if shown.is_empty() {
            "NOT ATTAINABLE no form matches".into()
        } else {
            format!("NOT ATTAINABLE {}", shown.join(","))
        }
    }

    fn leading_rules(&self) -> Vec<&'static str> {
        let mut covered = BTreeSet::new();
        let mut out = Vec::new();
        for hit in &self.violations {
            if hit.positions.iter().any(|p| !covered.contains(p)) {
                out.push(hit.rule);
            }
            covered.extend(hit.positions.iter().copied());
        }
        out
    }
}

fn matching_forms(candidates: &[FormId], r0: Option<u8>, body: &[u8]) -> Vec<FormId> {
    candidates
        .iter()
        .copied()
        .filter(|f| f.matches_body(r0, body))
        .collect()
}

/// Decides whether `e` is the epr-sequence of some symmetric GF(2) matrix.
pub fn classify_epr_z2(e: &EprSequence) -> Verdict {
    let body = e.to_string();
    let matched = matching_forms(&FormId::EPR, None, body.as_bytes());
    let attainable = !matched.is_empty();
    Verdict {
        sequence: body,
        attainable,
        matched,
        violations: if attainable { Vec::new() } else { rule_violations(e) },
        extension: false,
    }
}

/// [`classify_epr_z2`] for a named field. Only GF(2) has a known
/// characterization; other fields are refused.
pub fn classify_epr(e: &EprSequence, field: Field) -> Result<Verdict> {
    if field.is_gf2() {
        Ok(classify_epr_z2(e))
    } else {
        Err(Error::Unsupported(format!(
            "epr attainability over {field} is not characterized; only gf2 is supported"
        )))
    }
}

/// Decides whether `p` is the pr-sequence of a symmetric matrix over a
/// field of characteristic 2.
pub fn classify_pr_char2(p: &PrSequence) -> Verdict {
    let text = p.to_string();
    let r0 = p.r0() as u8;
    let body: Vec<u8> = p.bits().iter().map(|&b| if b { b'1' } else { b'0' }).collect();
    let (matched, extension) = if p.len() == 1 {
        // [1] and [0] are the only order-1 matrices up to a nonzero scalar.
        let m = match (r0, body[0]) {
            (0, b'1') => vec![FormId::P1],
            (1, b'0') => vec![FormId::P2],
            _ => Vec::new(),
        };
        (m, true)
    } else {
        (matching_forms(&FormId::PR, Some(r0), &body), false)
    };
    Verdict {
        sequence: text,
        attainable: !matched.is_empty(),
        matched,
        violations: Vec::new(),
        extension,
    }
}

/// Every epr-sequence of length `n` matching some form, sorted.
pub fn accepted_epr(n: usize) -> Vec<EprSequence> {
    let set: BTreeSet<String> = FormId::EPR.iter().flat_map(|f| f.instances(n)).collect();
    set.into_iter().map(|s| s.parse().expect("template letters")).collect()
}

/// Every pr-sequence of length `n` classified attainable, sorted.
pub fn accepted_pr(n: usize) -> Vec<PrSequence> {
    if n == 1 {
        return vec!["0]1".parse().expect("literal"), "1]0".parse().expect("literal")];
    }
    let set: BTreeSet<String> = FormId::PR.iter().flat_map(|f| f.instances(n)).collect();
    set.into_iter().map(|s| s.parse().expect("template bits")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verdict(s: &str) -> Verdict {
        classify_epr_z2(&s.parse().unwrap())
    }

    fn pr_verdict(s: &str) -> Verdict {
        classify_pr_char2(&s.parse().unwrap())
    }

    #[test]
    fn epr_examples() {
        let v = verdict("NSNA");
        assert!(v.attainable);
        assert_eq!(v.matched, [FormId::N4]);
        let v = verdict("NSA");
        assert!(!v.attainable);
        assert!(v.violations.iter().any(|h| h.rule == "NSA-prohibition"));
        let v = verdict("AAN");
        assert!(!v.attainable);
        assert!(v.violations.iter().any(|h| h.rule == "AA-non-terminal"));
        assert!(!verdict("ASSAN").attainable);
        assert!(!verdict("SASSA").attainable);
        assert!(verdict("ASSSAN").attainable);
    }

    #[test]
    fn order_one() {
        assert_eq!(verdict("A").matched, [FormId::A1]);
        assert_eq!(verdict("N").matched, [FormId::N3]);
        assert!(!verdict("S").attainable);
    }

    #[test]
    fn pr_examples() {
        assert_eq!(pr_verdict("0]110").matched, [FormId::P1]);
        assert_eq!(pr_verdict("1]010").matched, [FormId::P2]);
        assert!(!pr_verdict("0]01").attainable);
        assert_eq!(pr_verdict("0]01").render(), "NOT ATTAINABLE no form matches");
        assert_eq!(pr_verdict("1]00").matched, [FormId::P2]);
    }

    #[test]
    fn pr_order_one_extension() {
        let v = pr_verdict("0]1");
        assert!(v.attainable && v.extension);
        assert!(pr_verdict("1]0").attainable);
        assert!(!pr_verdict("1]1").attainable);
        assert!(!pr_verdict("0]0").attainable);
        assert_eq!(v.render(), "ATTAINABLE P1 (order-1 extension)");
    }

    #[test]
    fn several_forms_can_match() {
        // SSA is S2; SAA is S3; SAN is S7 only.
        assert_eq!(verdict("SAN").matched, [FormId::S7]);
        assert_eq!(verdict("AAAA").render(), "ATTAINABLE A1");
    }

    #[test]
    fn rendering_collapses_overlaps() {
        assert_eq!(verdict("NSA").render(), "NOT ATTAINABLE NSA-prohibition");
        let v = verdict("NSA");
        assert!(v.violations.len() > 1);
    }

    #[test]
    fn non_binary_fields_refused() {
        let e: EprSequence = "AAN".parse().unwrap();
        assert!(classify_epr(&e, Field::GF4).is_err());
        assert!(classify_epr(&e, Field::GF2).is_ok());
    }

    #[test]
    fn accepted_sets_small() {
        let s: Vec<String> = accepted_epr(3).iter().map(|e| e.to_string()).collect();
        assert_eq!(
            s,
            ["AAA", "ANN", "ASA", "ASN", "NAN", "NNN", "NSN", "SAA", "SAN", "SNN", "SSA", "SSN"]
        );
        assert_eq!(accepted_epr(1).len(), 2);
        assert_eq!(accepted_epr(2).len(), 6);
    }
}
