//! The attainable forms as anchored templates.
//!
//! A template is a list of literal blocks and starred blocks; a starred
//! block repeats zero or more times. Matching is anchored at both ends.

use std::fmt;

use serde::{Serialize, Serializer};

#[derive(Clone, Copy, Debug)]
enum Seg {
    Lit(&'static str),
    Star(&'static str),
}

use Seg::{Lit, Star};

/// One of the 20 epr forms over GF(2) or the 3 pr forms in characteristic 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormId {
    N1,
    N2,
    N3,
    N4,
    N5,
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    A8,
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
    S7,
    P1,
    P2,
    P3,
}

struct Template {
    /// Required `r0` for pr forms.
    r0: Option<u8>,
    segs: &'static [Seg],
    even_only: bool,
}

const fn epr(segs: &'static [Seg]) -> Template {
    Template {
        r0: None,
        segs,
        even_only: false,
    }
}

const fn pr(r0: u8, segs: &'static [Seg]) -> Template {
    Template {
        r0: Some(r0),
        segs,
        even_only: false,
    }
}

impl FormId {
    pub const EPR: [FormId; 20] = [
        FormId::N1,
        FormId::N2,
        FormId::N3,
        FormId::N4,
        FormId::N5,
        FormId::A1,
        FormId::A2,
        FormId::A3,
        FormId::A4,
        FormId::A5,
        FormId::A6,
        FormId::A7,
        FormId::A8,
        FormId::S1,
        FormId::S2,
        FormId::S3,
        FormId::S4,
        FormId::S5,
        FormId::S6,
        FormId::S7,
    ];

    pub const PR: [FormId; 3] = [FormId::P1, FormId::P2, FormId::P3];

    fn template(self) -> Template {
        match self {
            FormId::N1 => epr(&[Lit("NA"), Star("NA")]),
            FormId::N2 => epr(&[Lit("NA"), Star("NA"), Lit("N")]),
            FormId::N3 => epr(&[Star("NS"), Lit("N"), Star("N")]),
            FormId::N4 => epr(&[Lit("NS"), Star("NS"), Lit("NA")]),
            FormId::N5 => epr(&[Lit("NS"), Star("NS"), Lit("NAN")]),
            FormId::A1 => epr(&[Lit("A"), Star("A")]),
            FormId::A2 => epr(&[Lit("A"), Star("S"), Lit("N"), Star("N")]),
            FormId::A3 => epr(&[Lit("ASS"), Star("S"), Lit("A")]),
            FormId::A4 => epr(&[Lit("ASS"), Star("S"), Lit("AA")]),
            FormId::A5 => Template {
                even_only: true,
                ..epr(&[Lit("ASSS"), Star("S"), Lit("AN")])
            },
            FormId::A6 => epr(&[Lit("ASA"), Star("SA")]),
            FormId::A7 => epr(&[Lit("ASA"), Star("SA"), Lit("A")]),
            FormId::A8 => epr(&[Lit("ASA"), Star("SA"), Lit("N")]),
            FormId::S1 => epr(&[Lit("S"), Star("S"), Lit("N"), Star("N")]),
            FormId::S2 => epr(&[Lit("S"), Star("S"), Lit("A")]),
            FormId::S3 => epr(&[Lit("S"), Star("S"), Lit("AA")]),
            FormId::S4 => epr(&[Lit("SS"), Star("S"), Lit("AN")]),
            FormId::S5 => epr(&[Lit("SASA"), Star("SA")]),
            FormId::S6 => epr(&[Lit("SASA"), Star("SA"), Lit("A")]),
            FormId::S7 => epr(&[Lit("SA"), Star("SA"), Lit("N")]),
            FormId::P1 => pr(0, &[Lit("1"), Star("1"), Star("0")]),
            FormId::P2 => pr(1, &[Star("01"), Star("0")]),
            FormId::P3 => pr(1, &[Lit("1"), Star("1"), Star("0")]),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FormId::N1 => "N1",
            FormId::N2 => "N2",
            FormId::N3 => "N3",
            FormId::N4 => "N4",
            FormId::N5 => "N5",
            FormId::A1 => "A1",
            FormId::A2 => "A2",
            FormId::A3 => "A3",
            FormId::A4 => "A4",
            FormId::A5 => "A5",
            FormId::A6 => "A6",
            FormId::A7 => "A7",
            FormId::A8 => "A8",
            FormId::S1 => "S1",
            FormId::S2 => "S2",
            FormId::S3 => "S3",
            FormId::S4 => "S4",
            FormId::S5 => "S5",
            FormId::S6 => "S6",
            FormId::S7 => "S7",
            FormId::P1 => "P1",
            FormId::P2 => "P2",
            FormId::P3 => "P3",
        }
    }

    pub fn is_pr(self) -> bool {
        matches!(self, FormId::P1 | FormId::P2 | FormId::P3)
    }

    /// The template in the notation `(NS)* N N*`; pr forms carry their `r0]`.
    pub fn pattern(self) -> String {
        let t = self.template();
        let mut out = t.r0.map(|r| format!("{r}]")).unwrap_or_default();
        for (i, seg) in t.segs.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            match seg {
                Lit(s) => out.push_str(s),
                Star(s) if s.len() == 1 => {
                    out.push_str(s);
                    out.push('*');
                }
                Star(s) => {
                    out.push('(');
                    out.push_str(s);
                    out.push_str(")*");
                }
            }
        }
        if t.even_only {
            out.push_str(", n even");
        }
        out
    }

    /// Shortest length an instance can have.
    pub fn min_len(self) -> usize {
        let t = self.template();
        t.segs
            .iter()
            .map(|s| match s {
                Lit(s) => s.len(),
                Star(_) => 0,
            })
            .sum()
    }

    /// Whether the letters (or the pr bits after `]`) match this form.
    pub(crate) fn matches_body(self, r0: Option<u8>, body: &[u8]) -> bool {
        let t = self.template();
        if t.r0 != r0 {
            return false;
        }
        if t.even_only && !body.len().is_multiple_of(2) {
            return false;
        }
        match_segs(t.segs, body)
    }

    /// Every instance of length `n`, in increasing string order. epr
    /// instances are bare letters; pr instances include `r0]`.
    pub fn instances(self, n: usize) -> Vec<String> {
        let t = self.template();
        if t.even_only && !n.is_multiple_of(2) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut buf = Vec::new();
        generate(t.segs, n, &mut buf, &mut out);
        let prefix = t.r0.map(|r| format!("{r}]")).unwrap_or_default();
        let mut out: Vec<String> = out.into_iter().map(|s| format!("{prefix}{s}")).collect();
        out.sort();
        out.dedup();
        out
    }
}

fn match_segs(segs: &[Seg], s: &[u8]) -> bool {
    match segs.split_first() {
        None => s.is_empty(),
        Some((Lit(lit), rest)) => s.starts_with(lit.as_bytes()) && match_segs(rest, &s[lit.len()..]),
        Some((Star(block), rest)) => {
            let b = block.as_bytes();
            let mut tail = s;
            loop {
                if match_segs(rest, tail) {
                    return true;
                }
                if !tail.starts_with(b) {
                    return false;
                }
                tail = &tail[b.len()..];
            }
        }
    }
}

fn generate(segs: &[Seg], left: usize, buf: &mut Vec<u8>, out: &mut Vec<String>) {
    match segs.split_first() {
        None => {
            if left == 0 {
                out.push(String::from_utf8(buf.clone()).expect("ascii"));
            }
        }
        Some((Lit(lit), rest)) => {
            if lit.len() <= left {
                buf.extend_from_slice(lit.as_bytes());
                generate(rest, left - lit.len(), buf, out);
                buf.truncate(buf.len() - lit.len());
            }
        }
        Some((Star(block), rest)) => {
            let mark = buf.len();
            let mut used = 0;
            loop {
                generate(rest, left - used, buf, out);
                if used + block.len() > left {
                    break;
                }
                buf.extend_from_slice(block.as_bytes());
                used += block.len();
            }
            buf.truncate(mark);
        }
    }
}

impl fmt::Display for FormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for FormId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_lengths() {
        assert_eq!(FormId::A5.min_len(), 6);
        assert_eq!(FormId::A3.min_len(), 4);
        assert_eq!(FormId::N4.min_len(), 4);
        assert_eq!(FormId::N3.min_len(), 1);
        assert_eq!(FormId::S5.min_len(), 4);
    }

    #[test]
    fn generated_instances() {
        assert_eq!(FormId::N3.instances(3), ["NNN", "NSN"]);
        assert_eq!(FormId::A2.instances(3), ["ANN", "ASN"]);
        assert_eq!(FormId::A5.instances(7), Vec::<String>::new());
        assert_eq!(FormId::A5.instances(8), ["ASSSSSAN"]);
        assert_eq!(FormId::P2.instances(3), ["1]000", "1]010"]);
        assert_eq!(FormId::A6.instances(4), Vec::<String>::new());
    }

    #[test]
    fn instances_match_their_form() {
        for f in FormId::EPR {
            for n in 1..=10 {
                for s in f.instances(n) {
                    assert!(f.matches_body(None, s.as_bytes()), "{f} {s}");
                    assert_eq!(s.len(), n);
                }
            }
        }
    }

    #[test]
    fn pattern_text() {
        assert_eq!(FormId::N3.pattern(), "(NS)* N N*");
        assert_eq!(FormId::A5.pattern(), "ASSS S* AN, n even");
        assert_eq!(FormId::P2.pattern(), "1](01)* 0*");
    }
}
