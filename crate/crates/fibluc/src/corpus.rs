//! The identity corpus: catalog identities written in the identity language.

use std::collections::BTreeMap;

use fibluc_core::idlang::{parse, CheckError, Identity, ParseError, Ranges};
use fibluc_core::report::{CellRecord, CheckReport, Status};

use crate::runner::check_identity;

/// The corpus shipped with the crate (`data/identities.txt`).
pub const DEFAULT_CORPUS: &str = include_str!("../data/identities.txt");

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusEntry {
    pub id: String,
    pub n_min: u32,
    pub k_min: u32,
    /// Source line number and parsed identity for each line of the entry.
    pub identities: Vec<(usize, Identity)>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CorpusError {
    #[error("corpus line {line}: {message}")]
    Header { line: usize, message: String },
    #[error("corpus line {line}: identity outside any `# id:` entry")]
    Orphan { line: usize },
    #[error("corpus line {line}: {source}")]
    Parse { line: usize, source: ParseError },
    #[error("corpus entry {0} has no identities")]
    Empty(String),
    #[error("corpus has no entry `{0}`")]
    UnknownId(String),
}

impl Corpus {
    pub fn parse(text: &str) -> Result<Self, CorpusError> {
        let mut entries: Vec<CorpusEntry> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() {
                continue;
            }
            if let Some(comment) = trimmed.strip_prefix('#') {
                if let Some(header) = comment.trim().strip_prefix("id:") {
                    entries.push(parse_header(header, line)?);
                }
                continue;
            }
            let entry = entries.last_mut().ok_or(CorpusError::Orphan { line })?;
            let identity = parse(trimmed).map_err(|source| CorpusError::Parse { line, source })?;
            entry.identities.push((line, identity));
        }
        if let Some(e) = entries.iter().find(|e| e.identities.is_empty()) {
            return Err(CorpusError::Empty(e.id.clone()));
        }
        Ok(Corpus { entries })
    }

    pub fn get(&self, id: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// Entries named in `filter` (all when `None`), in corpus order.
    pub fn select(&self, filter: Option<&[&str]>) -> Result<Vec<&CorpusEntry>, CorpusError> {
        match filter {
            None => Ok(self.entries.iter().collect()),
            Some(ids) => ids
                .iter()
                .map(|id| self.get(id).ok_or_else(|| CorpusError::UnknownId(id.to_string())))
                .collect(),
        }
    }
}

fn parse_header(header: &str, line: usize) -> Result<CorpusEntry, CorpusError> {
    let bad = |message: String| CorpusError::Header { line, message };
    let mut words = header.split_whitespace();
    let id = words.next().ok_or_else(|| bad("missing id".into()))?;
    let mut entry = CorpusEntry {
        id: id.to_string(),
        n_min: 0,
        k_min: 1,
        identities: Vec::new(),
    };
    for w in words {
        let (var, min) = w
            .split_once(">=")
            .ok_or_else(|| bad(format!("expected `n>=N` or `k>=K`, found `{w}`")))?;
        let min: u32 = min.parse().map_err(|_| bad(format!("bad minimum in `{w}`")))?;
        match var {
            "n" => entry.n_min = min,
            "k" => entry.k_min = min,
            _ => return Err(bad(format!("unknown index `{var}`"))),
        }
    }
    Ok(entry)
}

impl CorpusEntry {
    /// `ranges` with each lower bound raised to the entry's minimum.
    pub fn clamp(&self, ranges: &Ranges) -> Ranges {
        let mut out = ranges.clone();
        for (var, min) in [("n", self.n_min), ("k", self.k_min)] {
            if let Some((lo, _)) = out.get_mut(var) {
                *lo = (*lo).max(min);
            }
        }
        out
    }

    /// Checks every line on the clamped grid. A cell passes only if every
    /// line passes there; otherwise it carries the first non-passing line's
    /// sides or note.
    pub fn check(&self, ranges: &Ranges) -> Result<CheckReport, CheckError> {
        let ranges = self.clamp(ranges);
        let mut cells: BTreeMap<(Option<u32>, Option<u32>), CellRecord> = BTreeMap::new();
        for (_, identity) in &self.identities {
            for r in check_identity(identity, &ranges, &self.id)?.records {
                match cells.get_mut(&(r.n, r.k)) {
                    None => {
                        cells.insert((r.n, r.k), r);
                    }
                    Some(acc) => {
                        acc.elapsed_ms += r.elapsed_ms;
                        if acc.status == Status::Pass && r.status != Status::Pass {
                            let elapsed_ms = acc.elapsed_ms;
                            *acc = CellRecord { elapsed_ms, ..r };
                        }
                    }
                }
            }
        }
        Ok(CheckReport::from_records(cells.into_values().collect()))
    }
}

/// Checks the selected entries and merges their reports.
pub fn check_entries(entries: &[&CorpusEntry], ranges: &Ranges) -> Result<CheckReport, CheckError> {
    let mut report = CheckReport::default();
    for e in entries {
        report.merge(e.check(ranges)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_corpus_parses() {
        let c = Corpus::parse(DEFAULT_CORPUS).unwrap();
        let ids: Vec<_> = c.entries.iter().map(|e| e.id.as_str()).collect();
        let mut expected = vec!["EQ04".to_string()];
        expected.extend((11..=31).map(|i| format!("EQ{i}")));
        assert_eq!(ids, expected);
        assert_eq!(c.get("EQ14").unwrap().identities.len(), 3);
        assert_eq!(c.get("EQ20").unwrap().n_min, 1);
        assert_eq!(c.get("EQ12").unwrap().k_min, 1);
    }

    #[test]
    fn render_is_a_fixed_point_on_the_corpus() {
        for e in Corpus::parse(DEFAULT_CORPUS).unwrap().entries {
            for (_, id) in e.identities {
                let text = id.to_string();
                let again = parse(&text).unwrap();
                assert_eq!(again, id);
                assert_eq!(again.to_string(), text);
            }
        }
    }

    #[test]
    fn malformed_corpora() {
        assert!(matches!(Corpus::parse("x = x"), Err(CorpusError::Orphan { line: 1 })));
        assert!(matches!(Corpus::parse("# id: E1\n"), Err(CorpusError::Empty(_))));
        assert!(matches!(
            Corpus::parse("# id: E1 m>=2\nx = x"),
            Err(CorpusError::Header { line: 1, .. })
        ));
        let err = Corpus::parse("# id: E1\n\nx = (y").unwrap_err();
        assert!(matches!(err, CorpusError::Parse { line: 3, .. }));
        assert!(err.to_string().starts_with("corpus line 3: line 1, column"));
    }

    #[test]
    fn multi_line_entry_fails_if_any_line_fails() {
        let c = Corpus::parse("# id: T\nF[n] = F[n]\nF[n] = L[n]\nL[n] = L[n]").unwrap();
        let ranges: Ranges = [("n".to_string(), (0, 2))].into_iter().collect();
        let r = c.entries[0].check(&ranges).unwrap();
        assert_eq!(r.records.len(), 3);
        assert_eq!(r.records[0].status, Status::Fail);
        assert_eq!(r.records[0].lhs.as_deref(), Some("0"));
        assert_eq!(r.records[0].rhs.as_deref(), Some("2"));
    }

    #[test]
    fn minima_clamp_ranges() {
        let c = Corpus::parse(DEFAULT_CORPUS).unwrap();
        let ranges: Ranges = [("n".to_string(), (0, 3)), ("k".to_string(), (0, 2))]
            .into_iter()
            .collect();
        let r = c.get("EQ20").unwrap().check(&ranges).unwrap();
        assert_eq!(r.records.len(), 3);
        assert!(r.all_passed());
    }
}
