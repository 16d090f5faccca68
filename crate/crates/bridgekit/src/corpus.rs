//! The bundled catalog of minimal bridge presentations for the 552 prime
//! 11-crossing knots, its file format, and the verification passes that
//! check the catalog against the diagram machinery.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;
use thiserror::Error;

use crate::dt::{parse_dt, DtCode, DtError};
use crate::invariants::same_alexander;
use crate::realize::realize;
use crate::tangles::MontesinosForm;

/// A line of the catalog file could not be parsed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {reason}")]
pub struct FormatError {
    pub line: usize,
    pub reason: String,
}

/// An entry carried a syntactically well-formed but invalid code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("entry {name}: {source}")]
pub struct ValidationError {
    pub name: String,
    pub source: DtError,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Validation(#[from] ValidationError),
}

/// One catalog row: a knot name, its bridge number, the code of a standard
/// minimal-crossing diagram, and the code of a diagram realizing the bridge
/// number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub bridge_number: usize,
    pub knot_code: DtCode,
    pub bridge_code: DtCode,
}

/// Parse catalog text. Each entry is one line,
/// `name : bridges | knot code | bridge code`; blank lines and lines
/// starting with `#` are skipped.
pub fn load_corpus(text: &str) -> Result<Vec<CorpusEntry>, CorpusError> {
    let mut entries = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let fail = |reason: String| FormatError { line, reason };
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (name, rest) = trimmed
            .split_once(':')
            .ok_or_else(|| fail("expected ':' after the knot name".into()))?;
        let name = name.trim();
        if name.is_empty() {
            return Err(fail("empty knot name".into()).into());
        }
        let mut fields = rest.split('|');
        let bridges = fields.next().expect("split yields at least one field");
        let knot = fields
            .next()
            .ok_or_else(|| fail("expected '|' before the knot code".into()))?;
        let bridge = fields
            .next()
            .ok_or_else(|| fail("expected '|' before the bridge code".into()))?;
        if fields.next().is_some() {
            return Err(fail("too many '|' fields".into()).into());
        }
        let bridge_number: usize = bridges
            .trim()
            .parse()
            .map_err(|_| fail(format!("{:?} is not a bridge count", bridges.trim())))?;
        let code = |text: &str| {
            parse_dt(text).map_err(|source| ValidationError { name: name.to_string(), source })
        };
        entries.push(CorpusEntry {
            name: name.to_string(),
            bridge_number,
            knot_code: code(knot)?,
            bridge_code: code(bridge)?,
        });
    }
    Ok(entries)
}

/// The catalog compiled into the library.
pub fn builtin_corpus() -> &'static [CorpusEntry] {
    static CORPUS: OnceLock<Vec<CorpusEntry>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        load_corpus(include_str!("../data/corpus.txt")).expect("the bundled catalog is well formed")
    })
}

/// The 91 two-bridge knots among the 11-crossing primes.
pub const TWO_BRIDGE: [&str; 91] = [
    "11a13", "11a59", "11a65", "11a75", "11a77", "11a84", "11a85", "11a89", "11a90", "11a91",
    "11a93", "11a95", "11a96", "11a98", "11a110", "11a111", "11a117", "11a119", "11a120",
    "11a121", "11a140", "11a144", "11a145", "11a154", "11a159", "11a166", "11a174", "11a175",
    "11a176", "11a177", "11a178", "11a179", "11a180", "11a182", "11a183", "11a184", "11a185",
    "11a186", "11a188", "11a190", "11a191", "11a192", "11a193", "11a195", "11a203", "11a204",
    "11a205", "11a206", "11a207", "11a208", "11a210", "11a211", "11a220", "11a224", "11a225",
    "11a226", "11a229", "11a230", "11a234", "11a235", "11a236", "11a238", "11a242", "11a243",
    "11a246", "11a247", "11a306", "11a307", "11a308", "11a309", "11a310", "11a311", "11a333",
    "11a334", "11a335", "11a336", "11a337", "11a339", "11a341", "11a342", "11a343", "11a355",
    "11a356", "11a357", "11a358", "11a359", "11a360", "11a363", "11a364", "11a365", "11a367",
];

/// The 15 four-bridge knots among the 11-crossing primes.
pub const FOUR_BRIDGE: [&str; 15] = [
    "11a43", "11a44", "11a47", "11a57", "11a231", "11a263", "11n71", "11n72", "11n73", "11n74",
    "11n75", "11n76", "11n77", "11n78", "11n81",
];

/// A knot name together with a Montesinos form presenting it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MontesinosTableEntry {
    pub name: &'static str,
    pub form: MontesinosForm,
}

/// Montesinos forms for the fifteen four-bridge knots.
pub fn montesinos_table() -> &'static [MontesinosTableEntry] {
    static TABLE: OnceLock<Vec<MontesinosTableEntry>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let rows: [(&str, &str); 15] = [
            ("11a43", "(0; -1/2, -2/3, -2/3, -2/3)"),
            ("11a44", "(0; -1/2, -1/3, -2/3, -2/3)"),
            ("11a47", "(0; -1/2, -2/3, -1/3, -2/3)"),
            ("11a57", "(0; -1/2, -1/3, -1/3, -2/3)"),
            ("11a231", "(0; -1/3, -1/2, -1/3, -2/3)"),
            ("11a263", "(0; 1/3, 1/2, 1/3, 1/3)"),
            ("11n71", "(0; -1/2, -2/3, 2/3, -2/3)"),
            ("11n72", "(0; 1/2, -2/3, -2/3, -2/3)"),
            ("11n73", "(0; 1/2, 2/3, -2/3, -2/3)"),
            ("11n74", "(0; 1/2, -2/3, 2/3, -2/3)"),
            ("11n75", "(0; 1/2, 2/3, 2/3, -2/3)"),
            ("11n76", "(0; -1/2, -1/3, 2/3, -2/3)"),
            ("11n77", "(0; 1/2, 1/3, -2/3, -2/3)"),
            ("11n78", "(0; 1/2, 1/3, 2/3, -2/3)"),
            ("11n81", "(0; 1/2, 1/3, 1/3, -2/3)"),
        ];
        rows.iter()
            .map(|&(name, text)| MontesinosTableEntry {
                name,
                form: MontesinosForm::parse(text).expect("the built-in table is well formed"),
            })
            .collect()
    })
}

/// How deep a verification pass goes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum VerifyLevel {
    /// Codes are well formed (established at load time).
    Structural,
    /// Bridge counts match the stated bridge number.
    Bridges,
    /// Both codes realize diagrams of the same knot, per the Alexander
    /// polynomial.
    Full,
}

impl FromStr for VerifyLevel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "structural" => Ok(VerifyLevel::Structural),
            "bridges" => Ok(VerifyLevel::Bridges),
            "full" => Ok(VerifyLevel::Full),
            other => Err(format!("unknown level {other:?}, expected structural, bridges or full")),
        }
    }
}

impl fmt::Display for VerifyLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerifyLevel::Structural => "structural",
            VerifyLevel::Bridges => "bridges",
            VerifyLevel::Full => "full",
        })
    }
}

/// Outcome of verifying one entry. `failures` is empty exactly when the
/// entry passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub name: String,
    pub level: VerifyLevel,
    pub failures: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check one catalog entry to the requested level.
pub fn verify_entry(entry: &CorpusEntry, level: VerifyLevel) -> VerificationReport {
    let mut failures = Vec::new();

    if level >= VerifyLevel::Bridges {
        let stated = entry.bridge_number;
        let got = entry.bridge_code.diagram_bridges();
        if got != stated {
            failures.push(format!("bridge code presents {got} bridges, stated {stated}"));
        }
        let knot_bridges = entry.knot_code.diagram_bridges();
        if knot_bridges < stated {
            failures.push(format!(
                "knot code presents {knot_bridges} bridges, below the stated {stated}"
            ));
        }
    }

    if level >= VerifyLevel::Full {
        let knot_diagram = realize(&entry.knot_code).into_diagram();
        let bridge_diagram = realize(&entry.bridge_code).into_diagram();
        if knot_diagram.is_none() {
            failures.push("knot code is not realizable".into());
        }
        if bridge_diagram.is_none() {
            failures.push("bridge code is not realizable".into());
        }
        if let (Some(k), Some(b)) = (knot_diagram, bridge_diagram) {
            if !same_alexander(&k, &b) {
                failures.push("the two codes have different Alexander polynomials".into());
            }
        }
    }

    VerificationReport { name: entry.name.clone(), level, failures }
}

/// Verify many entries in parallel, preserving order.
pub fn verify_all(entries: &[CorpusEntry], level: VerifyLevel) -> Vec<VerificationReport> {
    entries.par_iter().map(|e| verify_entry(e, level)).collect()
}
