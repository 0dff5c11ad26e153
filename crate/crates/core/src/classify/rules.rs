//! Prohibitions on epr-sequences, checked one rule at a time.
//!
//! Each rule is a necessary condition for attainability (over any field of
//! characteristic 2, or over GF(2) specifically). Together they do not
//! decide attainability; the templates do. Rules report the first place they
//! fail, as 1-based positions.

use serde::Serialize;

use crate::sequence::EprSequence;

/// A rule that `e` breaks, with the positions involved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleHit {
    pub rule: &'static str,
    pub positions: Vec<usize>,
}

/// Rule names in reporting order.
pub const RULES: [&str; 14] = [
    "terminal-S",
    "NSA-prohibition",
    "NN",
    "AA-non-terminal",
    "NA-Lemma",
    "SAXN",
    "ASS-non-initial",
    "ASA-position",
    "ASA-forms",
    "SA-start",
    "AN-parity",
    "N-even",
    "N-absorbing",
    "NA-NS",
];

type Check = fn(&[u8]) -> Option<Vec<usize>>;

const CHECKS: [Check; 14] = [
    terminal_s,
    nsa,
    nn,
    aa_non_terminal,
    na_lemma,
    saxn,
    ass_non_initial,
    asa_position,
    asa_forms,
    sa_start,
    an_parity,
    n_even,
    n_absorbing,
    na_ns,
];

/// Every rule `e` violates, in [`RULES`] order.
pub fn rule_violations(e: &EprSequence) -> Vec<RuleHit> {
    let s: Vec<u8> = e.letters().iter().map(|l| l.as_char() as u8).collect();
    RULES
        .iter()
        .zip(CHECKS)
        .filter_map(|(rule, check)| check(&s).map(|positions| RuleHit { rule, positions }))
        .collect()
}

/// 0-based start of each occurrence of `pat`.
fn occurrences<'a>(s: &'a [u8], pat: &'a [u8]) -> impl Iterator<Item = usize> + 'a {
    (0..s.len().saturating_sub(pat.len() - 1)).filter(move |&k| s[k..].starts_with(pat))
}

fn span(k: usize, len: usize) -> Vec<usize> {
    (k + 1..=k + len).collect()
}

/// First 0-based position at or after `from` holding something other than `c`.
fn first_not(s: &[u8], from: usize, c: u8) -> Option<usize> {
    (from..s.len()).find(|&j| s[j] != c)
}

fn terminal_s(s: &[u8]) -> Option<Vec<usize>> {
    (s.last() == Some(&b'S')).then(|| vec![s.len()])
}

fn nsa(s: &[u8]) -> Option<Vec<usize>> {
    if let Some(k) = occurrences(s, b"NSA").next() {
        return Some(span(k, 3));
    }
    // ...ASN...A...
    occurrences(s, b"ASN").find_map(|k| {
        (k + 3..s.len()).find(|&j| s[j] == b'A').map(|j| {
            let mut p = span(k, 3);
            p.push(j + 1);
            p
        })
    })
}

fn nn(s: &[u8]) -> Option<Vec<usize>> {
    occurrences(s, b"NN").find_map(|k| {
        first_not(s, k + 2, b'N').map(|j| {
            let mut p = span(k, 2);
            p.push(j + 1);
            p
        })
    })
}

fn aa_non_terminal(s: &[u8]) -> Option<Vec<usize>> {
    let k = occurrences(s, b"AA").find(|&k| k + 2 < s.len())?;
    first_not(s, 0, b'A').map(|j| {
        let mut p = span(k, 2);
        p.push(j + 1);
        p.sort_unstable();
        p
    })
}

fn na_lemma(s: &[u8]) -> Option<Vec<usize>> {
    occurrences(s, b"NA").find_map(|k| {
        (k..s.len())
            .find(|&t| s[t] != if (t - k) % 2 == 0 { b'N' } else { b'A' })
            .map(|t| vec![k + 1, k + 2, t + 1])
    })
}

fn saxn(s: &[u8]) -> Option<Vec<usize>> {
    (0..s.len().saturating_sub(3))
        .find(|&k| s[k] == b'S' && s[k + 1] == b'A' && s[k + 3] == b'N')
        .map(|k| span(k, 4))
}

fn ass_non_initial(s: &[u8]) -> Option<Vec<usize>> {
    occurrences(s, b"ASS").find(|&k| k > 0).map(|k| span(k, 3))
}

fn asa_position(s: &[u8]) -> Option<Vec<usize>> {
    occurrences(s, b"ASA")
        .find(|&k| {
            // `k` is 0-based, so the 1-based start is odd when `k` is even.
            match s[0] {
                b'A' => k % 2 == 1,
                b'S' => k % 2 == 0,
                _ => true,
            }
        })
        .map(|k| span(k, 3))
}

fn asa_forms(s: &[u8]) -> Option<Vec<usize>> {
    let k = occurrences(s, b"ASA").next()?;
    let body = if s.starts_with(b"ASA") {
        &s[3..]
    } else if s.starts_with(b"SASA") {
        &s[4..]
    } else {
        return Some(span(k, 3));
    };
    (!sa_tail_ok(body)).then(|| span(k, 3))
}

/// `(SA)*`, `(SA)*A` or `(SA)*N`.
fn sa_tail_ok(mut t: &[u8]) -> bool {
    while t.starts_with(b"SA") {
        t = &t[2..];
    }
    matches!(t, [] | [b'A'] | [b'N'])
}

fn sa_start(s: &[u8]) -> Option<Vec<usize>> {
    if !s.starts_with(b"SA") {
        return None;
    }
    (!sa_tail_ok(&s[2..])).then(|| vec![1, 2])
}

fn an_parity(s: &[u8]) -> Option<Vec<usize>> {
    let n = s.len();
    (n >= 3 && n % 2 == 1 && s[0] == b'A' && s.ends_with(b"AN")).then(|| vec![1, n - 1, n])
}

fn n_even(s: &[u8]) -> Option<Vec<usize>> {
    (1..s.len()).step_by(2).find_map(|k| {
        if s[k] != b'N' {
            return None;
        }
        first_not(s, k + 1, b'N').map(|j| vec![k + 1, j + 1])
    })
}

fn n_absorbing(s: &[u8]) -> Option<Vec<usize>> {
    if s[0] == b'N' {
        return None;
    }
    let k = s.iter().position(|&c| c == b'N')?;
    first_not(s, k + 1, b'N').map(|j| vec![k + 1, j + 1])
}

fn na_ns(s: &[u8]) -> Option<Vec<usize>> {
    (0..s.len().saturating_sub(1))
        .filter(|&k| s[k] == b'N' && s[k + 1] != b'N')
        .find_map(|k| {
            // 1-based k + 1 must be odd, and every odd position must be N.
            if k % 2 == 1 {
                return Some(span(k, 2));
            }
            (0..s.len()).step_by(2).find(|&j| s[j] != b'N').map(|j| {
                let mut p = span(k, 2);
                p.push(j + 1);
                p.sort_unstable();
                p
            })
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hits(s: &str) -> Vec<&'static str> {
        rule_violations(&s.parse().unwrap())
            .into_iter()
            .map(|h| h.rule)
            .collect()
    }

    #[test]
    fn documented_hits() {
        let h = hits("ANSA");
        assert!(h.contains(&"NSA-prohibition") && h.contains(&"N-even"), "{h:?}");
        assert!(hits("NANN").contains(&"NA-Lemma"));
        assert!(hits("NANA").is_empty());
        assert!(hits("NSA").contains(&"NSA-prohibition"));
        assert!(hits("AAN").contains(&"AA-non-terminal"));
    }

    #[test]
    fn positions_are_one_based() {
        let v = rule_violations(&"ANSA".parse().unwrap());
        assert_eq!(
            v[0],
            RuleHit {
                rule: "NSA-prohibition",
                positions: vec![2, 3, 4]
            }
        );
        let v = rule_violations(&"ASNNA".parse().unwrap());
        assert!(v.contains(&RuleHit {
            rule: "NSA-prohibition",
            positions: vec![1, 2, 3, 5]
        }));
        assert_eq!(rule_violations(&"AS".parse().unwrap())[0].positions, vec![2]);
    }

    #[test]
    fn individual_rules() {
        assert!(hits("SASSA").contains(&"ASS-non-initial"));
        assert!(hits("SANN").contains(&"SA-start"));
        assert!(hits("SAAN").contains(&"SAXN"));
        assert!(hits("AASA").contains(&"AA-non-terminal"));
        assert!(hits("SAASA").contains(&"ASA-position"));
        assert!(hits("ASASN").contains(&"ASA-forms"));
        assert!(hits("ASAAN").contains(&"AN-parity"));
        assert!(hits("SNA").contains(&"N-absorbing"));
        let h = hits("NSNSA");
        assert!(h.contains(&"NSA-prohibition") && h.contains(&"NA-NS"));
        assert!(hits("ANA").contains(&"NA-NS"));
        assert!(hits("NNA").contains(&"NN"));
    }
}
