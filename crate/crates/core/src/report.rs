//! Per-cell verdicts for identity checks and their text rendering.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

/// Millisecond clock injected by the caller; the core crate has no time
/// source of its own.
pub trait Clock {
    fn now_ms(&self) -> f64;
}

/// A clock that always reads zero.
#[derive(Debug, Default, Clone, Copy)]
pub struct NoClock;

impl Clock for NoClock {
    fn now_ms(&self) -> f64 {
        0.0
    }
}

impl<F: Fn() -> f64> Clock for F {
    fn now_ms(&self) -> f64 {
        self()
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// Evaluation was impossible at this cell (negative subscript, etc.).
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One grid cell. `lhs`/`rhs` carry rendered sides only on failure;
/// `note` carries the message for [`Status::Error`].
#[derive(Clone, Debug, PartialEq)]
pub struct CellRecord {
    pub id: String,
    pub n: Option<u32>,
    pub k: Option<u32>,
    pub status: Status,
    pub elapsed_ms: f64,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub note: Option<String>,
}

impl CellRecord {
    pub fn sort_key(&self) -> (&str, Option<u32>, Option<u32>) {
        (&self.id, self.n, self.k)
    }

    /// `n=3 k=2`, `n=3`, or `-` for index-free cases.
    pub fn indices(&self) -> String {
        let mut s = String::new();
        if let Some(n) = self.n {
            let _ = write!(s, "n={n}");
        }
        if let Some(k) = self.k {
            if !s.is_empty() {
                s.push(' ');
            }
            let _ = write!(s, "k={k}");
        }
        if s.is_empty() {
            s.push('-');
        }
        s
    }
}

/// Records ordered by `(id, n, k)`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CheckReport {
    pub records: Vec<CellRecord>,
}

impl CheckReport {
    /// Builds a report, sorting records into `(id, n, k)` order.
    pub fn from_records(mut records: Vec<CellRecord>) -> Self {
        records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        CheckReport { records }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.records.extend(other.records);
        self.records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    }

    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.status == Status::Pass)
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CellRecord> {
        self.records.iter().filter(|r| r.status != Status::Pass)
    }

    pub fn first_failure(&self) -> Option<&CellRecord> {
        self.failures().next()
    }

    /// Line-oriented table: one row per cell, failing sides indented below
    /// their row, then a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let _ = writeln!(
                out,
                "{:<6} {:<10} {:<5} {:>10.3}ms",
                r.id,
                r.indices(),
                r.status.as_str().to_ascii_uppercase(),
                r.elapsed_ms
            );
            if let Some(l) = &r.lhs {
                let _ = writeln!(out, "    lhs: {l}");
            }
            if let Some(rh) = &r.rhs {
                let _ = writeln!(out, "    rhs: {rh}");
            }
            if let Some(note) = &r.note {
                let _ = writeln!(out, "    note: {note}");
            }
        }
        let _ = writeln!(
            out,
            "{} cells: {} pass, {} fail, {} error",
            self.records.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Error)
        );
        out
    }
}
