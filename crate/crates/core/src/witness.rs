//! Explicit GF(2) matrices attaining every attainable sequence.
//!
//! Each form has a construction: a named starting matrix followed by direct
//! sums, inversion, Schur complements or row appends. The matrix is rebuilt
//! from its [`Recipe`] and checked against the requested sequence before it
//! is returned.

use std::fmt;

use serde::Serialize;

use crate::classify::{classify_epr_z2, classify_pr_char2, FormId};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{construct_named, IndexSet, NamedKind, SymMatrix};
use crate::sequence::{compute_epr, compute_pr, EprSequence, Letter, PrSequence};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Step {
    /// Start from a named matrix.
    Named {
        kind: NamedKind,
        params: Vec<usize>,
    },
    /// Direct sum with a named matrix on the right.
    DirectSum {
        kind: NamedKind,
        params: Vec<usize>,
    },
    Inverse,
    /// Schur complement of the principal submatrix on these 1-based positions.
    Schur {
        pivot: Vec<usize>,
    },
    /// Copy the last row down and the last column across.
    AppendDuplicateLast,
    /// Direct sum with `[0]`.
    AppendZero,
}

/// How a witness was built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Recipe {
    pub form: FormId,
    pub steps: Vec<Step>,
}

/// A witness matrix and the recipe that produced it.
#[derive(Clone, Debug)]
pub struct Witness {
    pub matrix: SymMatrix,
    pub recipe: Recipe,
}

impl Witness {
    /// The matrix file with a `# recipe:` comment line on top.
    pub fn to_text(&self) -> Result<String> {
        Ok(format!("# recipe: {}\n{}", self.recipe, self.matrix.to_text()?))
    }
}

fn named_label(kind: NamedKind, params: &[usize]) -> String {
    if params.is_empty() {
        kind.name().to_string()
    } else {
        let p: Vec<String> = params.iter().map(|p| p.to_string()).collect();
        format!("{}({})", kind.name(), p.join(","))
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Named { kind, params } => f.write_str(&named_label(*kind, params)),
            Step::DirectSum { kind, params } => write!(f, "(+) {}", named_label(*kind, params)),
            Step::Inverse => f.write_str("inverse"),
            Step::Schur { pivot } => {
                let p: Vec<String> = pivot.iter().map(|p| p.to_string()).collect();
                write!(f, "schur{{{}}}", p.join(","))
            }
            Step::AppendDuplicateLast => f.write_str("append_duplicate_last"),
            Step::AppendZero => f.write_str("append_zero"),
        }
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.form)?;
        let mut i = 0;
        while i < self.steps.len() {
            let step = &self.steps[i];
            let run = self.steps[i..].iter().take_while(|s| *s == step).count();
            let sep = match (i, step) {
                (0, _) | (_, Step::DirectSum { .. }) => " ",
                _ => " -> ",
            };
            // Runs of appends are written once with a count.
            let run = if matches!(step, Step::AppendZero | Step::AppendDuplicateLast) {
                run
            } else {
                1
            };
            if run > 1 {
                write!(f, "{sep}{step} x{run}")?;
            } else {
                write!(f, "{sep}{step}")?;
            }
            i += run;
        }
        Ok(())
    }
}

impl Recipe {
    /// Executes the steps over GF(2).
    pub fn build(&self) -> Result<SymMatrix> {
        let f = Field::GF2;
        let mut m = SymMatrix::zeros(f, 0);
        for step in &self.steps {
            m = match step {
                Step::Named { kind, params } => construct_named(*kind, params, f)?,
                Step::DirectSum { kind, params } => m.direct_sum(&construct_named(*kind, params, f)?)?,
                Step::Inverse => m.inverse()?,
                Step::Schur { pivot } => m.schur_complement(&IndexSet::from_one_based(pivot)?)?.matrix,
                Step::AppendDuplicateLast => m.append_duplicate_last()?,
                Step::AppendZero => m.append_zero(),
            };
        }
        Ok(m)
    }
}

struct Builder(Vec<Step>);

impl Builder {
    fn new() -> Builder {
        Builder(Vec::new())
    }

    /// Adds a summand, skipping empty ones.
    fn sum(mut self, kind: NamedKind, params: &[usize]) -> Builder {
        let empty = matches!(
            kind,
            NamedKind::Identity | NamedKind::Zero | NamedKind::AllOnes | NamedKind::M1
        ) && params[0] == 0;
        if !empty {
            let params = params.to_vec();
            self.0.push(if self.0.is_empty() {
                Step::Named { kind, params }
            } else {
                Step::DirectSum { kind, params }
            });
        }
        self
    }

    fn then(mut self, step: Step, times: usize) -> Builder {
        self.0.extend(std::iter::repeat_n(step, times));
        self
    }

    fn done(self, form: FormId) -> Recipe {
        Recipe { form, steps: self.0 }
    }
}

fn count(e: &EprSequence, l: Letter) -> usize {
    e.letters().iter().filter(|&&x| x == l).count()
}

/// Recipe for an instance `e` of `form`.
fn epr_recipe(form: FormId, e: &EprSequence) -> Recipe {
    use NamedKind as K;
    let n = e.len();
    let b = Builder::new();
    let nn = count(e, Letter::N);
    let b = match form {
        FormId::N1 | FormId::N2 => b.sum(K::CompleteGraph, &[n]),
        FormId::N3 => {
            // (NS)^a N^(n - 2a)
            let a = count(e, Letter::S);
            if a == 0 {
                b.sum(K::Zero, &[n])
            } else {
                b.sum(K::CompleteGraph, &[2 * a]).then(Step::AppendZero, n - 2 * a)
            }
        }
        FormId::N4 => b.sum(K::M1, &[n]),
        FormId::N5 => b.sum(K::M2, &[n]),
        FormId::A1 => b.sum(K::Identity, &[n]),
        FormId::A2 => b.sum(K::Identity, &[n - nn]).then(Step::AppendDuplicateLast, nn),
        FormId::A3 => b.sum(K::Identity, &[n - 3]).sum(K::MAsa, &[]),
        FormId::A4 => b.sum(K::Identity, &[n - 4]).sum(K::MAsaa, &[]),
        FormId::A5 if n % 4 == 2 => b.sum(K::Block4k2, &[n]),
        FormId::A5 => b.sum(K::Block4k, &[n]),
        FormId::A6 => b.sum(K::R, &[n, 1]).then(Step::Inverse, 1),
        FormId::A7 => b.sum(K::BorderedIdentity, &[n]),
        FormId::A8 => b.sum(K::R, &[n + 1, 2]).then(Step::Schur { pivot: vec![1] }, 1),
        FormId::S1 => b.sum(K::Identity, &[n - nn]).then(Step::AppendZero, nn),
        FormId::S2 => b.sum(K::F, &[2]).sum(K::Identity, &[n - 2]),
        // Inverse of the A S^(n-2) A construction; at n = 3 that is M_ASA.
        FormId::S3 => b.sum(K::Identity, &[n - 3]).sum(K::MAsa, &[]).then(Step::Inverse, 1),
        FormId::S4 if n.is_multiple_of(2) => b.sum(K::G, &[n]),
        FormId::S4 => {
            let kind = if (n + 1) % 4 == 2 { K::Block4k2 } else { K::Block4k };
            b.sum(kind, &[n + 1]).then(Step::Schur { pivot: vec![n + 1] }, 1)
        }
        FormId::S5 | FormId::S6 => b.sum(K::R, &[n, 1]),
        FormId::S7 => b.sum(K::R, &[n, 2]),
        FormId::P1 | FormId::P2 | FormId::P3 => unreachable!("pr form in epr recipe"),
    };
    b.done(form)
}

fn pr_recipe(form: FormId, p: &PrSequence) -> Recipe {
    use NamedKind as K;
    let ones = p.bits().iter().filter(|&&b| b).count();
    let zeros = p.len() - ones;
    let b = Builder::new();
    let b = match form {
        FormId::P1 => b.sum(K::Identity, &[ones - 1]).sum(K::AllOnes, &[zeros + 1]),
        FormId::P2 => b.sum(K::M1, &[2 * ones]).sum(K::Zero, &[p.len() - 2 * ones]),
        FormId::P3 if zeros > 0 => b.sum(K::Identity, &[ones]).sum(K::Zero, &[zeros]),
        FormId::P3 => b.sum(K::F, &[2]).sum(K::Identity, &[ones - 2]),
        _ => unreachable!("epr form in pr recipe"),
    };
    b.done(form)
}

/// A symmetric GF(2) matrix whose epr-sequence is `e`.
///
/// ```
/// use eprseq::{witness_epr_z2, EprSequence};
///
/// let w = witness_epr_z2(&"SSAN".parse::<EprSequence>().unwrap()).unwrap();
/// assert_eq!(w.recipe.to_string(), "S4: G(4)");
/// assert!(witness_epr_z2(&"NSA".parse::<EprSequence>().unwrap()).is_err());
/// ```
pub fn witness_epr_z2(e: &EprSequence) -> Result<Witness> {
    let verdict = classify_epr_z2(e);
    let Some(&form) = verdict.matched.first() else {
        return Err(Error::NotAttainable(Box::new(verdict)));
    };
    let recipe = epr_recipe(form, e);
    let matrix = recipe.build()?;
    let got = compute_epr(&matrix)?;
    if &got != e {
        return Err(Error::InternalMismatch {
            form: recipe.to_string(),
            expected: e.to_string(),
            got: got.to_string(),
        });
    }
    Ok(Witness { matrix, recipe })
}

/// A symmetric GF(2) matrix whose pr-sequence is `p`.
pub fn witness_pr_char2(p: &PrSequence) -> Result<Witness> {
    let verdict = classify_pr_char2(p);
    let Some(&form) = verdict.matched.first() else {
        return Err(Error::NotAttainable(Box::new(verdict)));
    };
    let recipe = pr_recipe(form, p);
    let matrix = recipe.build()?;
    let got = compute_pr(&matrix)?;
    if &got != p {
        return Err(Error::InternalMismatch {
            form: recipe.to_string(),
            expected: p.to_string(),
            got: got.to_string(),
        });
    }
    Ok(Witness { matrix, recipe })
}
