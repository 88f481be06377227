//! Sign certification by recursive bisection.

use std::io::{self, Write};

use crate::error::Result;
use crate::interval::{Interval, SignOutcome};

pub const DEFAULT_MIN_WIDTH: f64 = 2e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExpectedSign {
    Positive,
    Negative,
}

impl ExpectedSign {
    pub fn outcome(self) -> SignOutcome {
        match self {
            ExpectedSign::Positive => SignOutcome::AllPositive,
            ExpectedSign::Negative => SignOutcome::AllNegative,
        }
    }

    fn holds(self, e: Interval) -> bool {
        match self {
            ExpectedSign::Positive => e.is_positive(),
            ExpectedSign::Negative => e.is_negative(),
        }
    }

    fn violated(self, e: Interval) -> bool {
        match self {
            ExpectedSign::Positive => e.hi() <= 0.0,
            ExpectedSign::Negative => e.lo() >= 0.0,
        }
    }
}

pub struct SignTask<'a> {
    pub f: &'a (dyn Fn(Interval) -> Result<Interval> + Sync),
    pub domain: Interval,
    pub min_width: f64,
    pub expected: ExpectedSign,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertEntry {
    pub sub: Interval,
    pub enclosure: Interval,
}

/// A subinterval on which the expected sign could not be established.
/// `enclosure` is `None` when `f` itself failed there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub sub: Interval,
    pub enclosure: Option<Interval>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SignReport {
    pub outcome: SignOutcome,
    /// Sign-definite pieces in left-to-right order. They tile the domain
    /// when the outcome matches the expectation.
    pub certificate: Vec<CertEntry>,
    pub witness: Option<Witness>,
}

/// Bisects until every piece has the expected sign or a piece narrower than
/// `min_width` remains undecided. Pieces with the opposite sign are not split
/// further; they are reported only if no undecided piece is found.
pub fn validate_sign(task: &SignTask<'_>) -> SignReport {
    assert!(task.min_width > 0.0, "min_width must be positive");
    let mut stack = vec![task.domain];
    let mut certificate = Vec::new();
    let mut wrong_sign: Option<Witness> = None;

    while let Some(x) = stack.pop() {
        let enc = (task.f)(x).ok();
        match enc {
            Some(e) if task.expected.holds(e) => {
                certificate.push(CertEntry { sub: x, enclosure: e });
                continue;
            }
            Some(e) if task.expected.violated(e) => {
                wrong_sign.get_or_insert(Witness {
                    sub: x,
                    enclosure: Some(e),
                });
                continue;
            }
            _ => {}
        }
        let halves = if x.width() < task.min_width {
            None
        } else {
            x.bisect()
        };
        match halves {
            Some((l, r)) => {
                stack.push(r);
                stack.push(l);
            }
            None => {
                return SignReport {
                    outcome: SignOutcome::Indeterminate,
                    certificate,
                    witness: Some(Witness {
                        sub: x,
                        enclosure: enc,
                    }),
                };
            }
        }
    }

    match wrong_sign {
        Some(w) => SignReport {
            outcome: SignOutcome::Indeterminate,
            certificate,
            witness: Some(w),
        },
        None => SignReport {
            outcome: task.expected.outcome(),
            certificate,
            witness: None,
        },
    }
}

pub const CERTIFICATE_HEADER: &str = "name,sub_lo,sub_hi,enc_lo,enc_hi";

pub fn write_certificate_csv<W: Write>(out: &mut W, name: &str, cert: &[CertEntry]) -> io::Result<()> {
    for e in cert {
        writeln!(
            out,
            "{},{:.16e},{:.16e},{:.16e},{:.16e}",
            name,
            e.sub.lo(),
            e.sub.hi(),
            e.enclosure.lo(),
            e.enclosure.hi()
        )?;
    }
    Ok(())
}
