//! The embedded catalog of small transitive groups and the table check.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use remoteness_core::group::{transitive_remoteness, Decision};
use remoteness_core::{PermError, Permutation, PermutationGroup};

/// The shipped data file.
pub const EMBEDDED_CATALOG: &str = include_str!("../data/transitive_groups.txt");

/// Transitive groups of degree below 10 with remoteness `n - 1`, as
/// `(degree, index, order)`.
pub const REMOTE_GROUPS: &[(usize, usize, u128)] = &[
    (3, 1, 3),
    (4, 2, 4),
    (5, 1, 5),
    (5, 2, 10),
    (7, 1, 7),
    (7, 2, 14),
    (7, 3, 21),
    (8, 2, 8),
    (8, 3, 8),
    (8, 4, 8),
    (8, 5, 8),
    (8, 9, 16),
    (8, 10, 16),
    (8, 11, 16),
    (9, 1, 9),
    (9, 2, 9),
    (9, 4, 18),
    (9, 5, 18),
    (9, 6, 27),
    (9, 7, 27),
    (9, 8, 36),
    (9, 9, 36),
    (9, 16, 72),
    (9, 17, 81),
];

/// Number of transitive groups of degree 6 up to conjugacy.
pub const DEGREE_SIX_CLASSES: usize = 16;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: bad generator: {source}")]
    Generator { line: usize, source: PermError },
    #[error("{label}: generators give order {found}, expected {expected}")]
    OrderMismatch { label: String, expected: u128, found: u128 },
    #[error("{label}: generators do not act transitively")]
    NotTransitive { label: String },
    #[error("{label}: expected remoteness {r} is not n-1 or n")]
    BadExpectation { label: String, r: usize },
    #[error("{label}: table flag disagrees with expected remoteness {r}")]
    TableFlag { label: String, r: usize },
    #[error("{label}: {message}")]
    Group { label: String, message: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NoteTag {
    Cyclic,
    RegularNoncyclicSylow2,
    Dihedral,
    OddOrder,
    Paley,
    Computed,
}

impl NoteTag {
    pub fn as_str(self) -> &'static str {
        match self {
            NoteTag::Cyclic => "cyclic",
            NoteTag::RegularNoncyclicSylow2 => "regular-noncyclic-sylow2",
            NoteTag::Dihedral => "dihedral",
            NoteTag::OddOrder => "odd-order",
            NoteTag::Paley => "paley",
            NoteTag::Computed => "computed",
        }
    }
}

impl FromStr for NoteTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "cyclic" => NoteTag::Cyclic,
            "regular-noncyclic-sylow2" => NoteTag::RegularNoncyclicSylow2,
            "dihedral" => NoteTag::Dihedral,
            "odd-order" => NoteTag::OddOrder,
            "paley" => NoteTag::Paley,
            "computed" => NoteTag::Computed,
            other => return Err(format!("unknown note `{other}`")),
        })
    }
}

impl fmt::Display for NoteTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub degree: usize,
    pub index: usize,
    pub name: String,
    pub generators: Vec<Permutation>,
    pub expected_order: u128,
    pub expected_remoteness: usize,
    pub note: NoteTag,
    pub in_table: bool,
    pub group: PermutationGroup,
}

impl CatalogEntry {
    pub fn label(&self) -> String {
        format!("({},{}) {}", self.degree, self.index, self.name)
    }
}

struct Header {
    line: usize,
    degree: usize,
    index: usize,
    order: u128,
    r: usize,
    note: NoteTag,
    name: String,
    table: bool,
}

fn parse_header(line_no: usize, body: &str) -> Result<Header, CatalogError> {
    let err = |message: String| CatalogError::Parse { line: line_no, message };
    let mut fields = std::collections::BTreeMap::new();
    for token in body.split_whitespace() {
        let (k, v) = token.split_once('=').ok_or_else(|| err(format!("expected key=value, got `{token}`")))?;
        fields.insert(k, v);
    }
    let get = |k: &str| fields.get(k).copied().ok_or_else(|| err(format!("missing field `{k}`")));
    let num = |k: &str| -> Result<u128, CatalogError> {
        get(k)?.parse::<u128>().map_err(|_| err(format!("field `{k}` is not a number")))
    };
    let table = match get("table")? {
        "yes" => true,
        "no" => false,
        other => return Err(err(format!("table must be yes or no, got `{other}`"))),
    };
    Ok(Header {
        line: line_no,
        degree: num("n")? as usize,
        index: num("idx")? as usize,
        order: num("order")?,
        r: num("r")? as usize,
        note: get("note")?.parse().map_err(err)?,
        name: get("name")?.to_string(),
        table,
    })
}

fn finish(header: Header, gens: Vec<Permutation>) -> Result<CatalogEntry, CatalogError> {
    let label = format!("({},{}) {}", header.degree, header.index, header.name);
    let group = PermutationGroup::new(header.degree, gens.clone()).map_err(|e| CatalogError::Group {
        label: label.clone(),
        message: e.to_string(),
    })?;
    if group.order() != header.order {
        return Err(CatalogError::OrderMismatch {
            label,
            expected: header.order,
            found: group.order(),
        });
    }
    if !group.is_transitive() {
        return Err(CatalogError::NotTransitive { label });
    }
    let n = header.degree;
    if header.r + 1 != n && header.r != n {
        return Err(CatalogError::BadExpectation { label, r: header.r });
    }
    if header.table != (header.r + 1 == n) {
        return Err(CatalogError::TableFlag { label, r: header.r });
    }
    let _ = header.line;
    Ok(CatalogEntry {
        degree: n,
        index: header.index,
        name: header.name,
        generators: gens,
        expected_order: header.order,
        expected_remoteness: header.r,
        note: header.note,
        in_table: header.table,
        group,
    })
}

/// Parses catalog text, verifying order, transitivity and expectations of each entry.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, CatalogError> {
    let mut entries = Vec::new();
    let mut current: Option<(Header, Vec<Permutation>)> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(body) = line.strip_prefix('[') {
            let body = body.strip_suffix(']').ok_or(CatalogError::Parse {
                line: line_no,
                message: "unterminated header".into(),
            })?;
            if let Some((h, g)) = current.take() {
                entries.push(finish(h, g)?);
            }
            current = Some((parse_header(line_no, body)?, Vec::new()));
            continue;
        }
        let Some((header, gens)) = current.as_mut() else {
            return Err(CatalogError::Parse {
                line: line_no,
                message: "generator before any header".into(),
            });
        };
        let g = Permutation::parse(line, Some(header.degree)).map_err(|source| CatalogError::Generator { line: line_no, source })?;
        gens.push(g);
    }
    if let Some((h, g)) = current.take() {
        entries.push(finish(h, g)?);
    }
    Ok(entries)
}

pub fn load_catalog() -> Result<Vec<CatalogEntry>, CatalogError> {
    parse_catalog(EMBEDDED_CATALOG)
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub degree: usize,
    pub index: usize,
    pub name: String,
    pub order: u128,
    pub note: NoteTag,
    pub in_table: bool,
    pub expected: usize,
    pub computed: usize,
    pub decision: &'static str,
    /// Witness in image notation when the computed remoteness is `n - 1`.
    pub witness: Option<Vec<usize>>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimCheck {
    pub description: String,
    pub groups_checked: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub rows: Vec<TableRow>,
    /// Table rows with no shipped entry of the same (degree, index, order).
    pub missing_rows: Vec<(usize, usize, u128)>,
    /// `(degree, order)` multiset of computed `n - 1` groups equals that of the table.
    pub multiset_match: bool,
    pub degree_six: ClaimCheck,
    pub pass: bool,
}

fn check_entry(e: &CatalogEntry) -> TableRow {
    let (computed, decision, witness) = match transitive_remoteness(&e.group) {
        Ok(a) => (a.remoteness, a.decision.name(), a.witness.map(|w| w.to_vec())),
        Err(err) => {
            eprintln!("{}: {err}", e.label());
            (0, "error", None)
        }
    };
    TableRow {
        degree: e.degree,
        index: e.index,
        name: e.name.clone(),
        order: e.expected_order,
        note: e.note,
        in_table: e.in_table,
        expected: e.expected_remoteness,
        computed,
        decision,
        witness,
        pass: computed == e.expected_remoteness,
    }
}

/// Recomputes every entry's remoteness (entries in parallel) and compares it with
/// the expectation, the table multiset and the degree-6 claim.
pub fn verify_table(entries: &[CatalogEntry]) -> TableReport {
    let rows: Vec<TableRow> = entries.par_iter().map(check_entry).collect();
    let missing_rows: Vec<(usize, usize, u128)> = REMOTE_GROUPS
        .iter()
        .copied()
        .filter(|&(n, k, o)| !rows.iter().any(|r| r.degree == n && r.index == k && r.order == o && r.in_table))
        .collect();
    let mut computed: Vec<(usize, u128)> = rows
        .iter()
        .filter(|r| r.computed + 1 == r.degree)
        .map(|r| (r.degree, r.order))
        .collect();
    let mut expected: Vec<(usize, u128)> = REMOTE_GROUPS.iter().map(|&(n, _, o)| (n, o)).collect();
    computed.sort_unstable();
    expected.sort_unstable();
    let multiset_match = computed == expected;
    let six: Vec<&TableRow> = rows.iter().filter(|r| r.degree == 6).collect();
    let degree_six = ClaimCheck {
        description: "no transitive group of degree 6 has remoteness 5".into(),
        groups_checked: six.len(),
        holds: six.len() == DEGREE_SIX_CLASSES && six.iter().all(|r| r.computed == 6),
    };
    let pass = rows.iter().all(|r| r.pass) && missing_rows.is_empty() && multiset_match && degree_six.holds;
    TableReport {
        rows,
        missing_rows,
        multiset_match,
        degree_six,
        pass,
    }
}

impl TableReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:>2} {:>3} {:<14} {:>6} {:<25} {:>5} {:>3} {:>3} {:<15} ok",
            "n", "idx", "name", "order", "note", "table", "exp", "r", "decided by"
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:>2} {:>3} {:<14} {:>6} {:<25} {:>5} {:>3} {:>3} {:<15} {}",
                r.degree,
                r.index,
                r.name,
                r.order,
                r.note.as_str(),
                if r.in_table { "yes" } else { "no" },
                r.expected,
                r.computed,
                r.decision,
                if r.pass { "ok" } else { "MISMATCH" }
            );
        }
        let _ = writeln!(
            out,
            "table rows present: {}/{}",
            REMOTE_GROUPS.len() - self.missing_rows.len(),
            REMOTE_GROUPS.len()
        );
        let _ = writeln!(out, "(degree, order) multiset of remoteness n-1 groups matches: {}", self.multiset_match);
        let _ = writeln!(
            out,
            "{}: {} ({} groups checked)",
            self.degree_six.description,
            if self.degree_six.holds { "holds" } else { "FAILS" },
            self.degree_six.groups_checked
        );
        let _ = writeln!(out, "overall: {}", if self.pass { "pass" } else { "FAIL" });
        out
    }
}

/// Which entries were settled without the witness search.
pub fn decided_by_shortcut(row: &TableRow) -> bool {
    row.decision != Decision::WitnessSearch.name()
}
