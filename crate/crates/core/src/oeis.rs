//! OEIS b-files: parsing, serialization and diffing against computed sequences.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;

use crate::sequences::{SequenceError, SequenceId};
use crate::verify::{tally, CheckReport, Mismatch};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BFileError {
    #[error("line {line}: expected \"index value\", got {content:?}")]
    Malformed { line: usize, content: String },
    #[error("line {line}: gap at index {expected} (found {found})")]
    Gap {
        line: usize,
        expected: i64,
        found: i64,
    },
    #[error("b-file has no entries")]
    Empty,
    #[error("invalid A-number {0:?}")]
    InvalidId(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiffError {
    #[error("no overlap between {sequence} and {bfile} under shift {shift}")]
    EmptyOverlap {
        sequence: SequenceId,
        bfile: String,
        shift: i64,
    },
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

/// Checks the `A` + six digits shape and returns the id normalized to uppercase.
pub fn normalize_id(id: &str) -> Result<String, BFileError> {
    let upper = id.trim().to_ascii_uppercase();
    let digits = upper.strip_prefix('A').unwrap_or("");
    if digits.len() == 6 && digits.bytes().all(|b| b.is_ascii_digit()) {
        Ok(upper)
    } else {
        Err(BFileError::InvalidId(id.into()))
    }
}

/// A parsed b-file: contiguous `(index, value)` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    id: String,
    entries: Vec<(i64, BigInt)>,
}

impl BFile {
    /// Validates contiguity and non-emptiness.
    pub fn new(id: &str, entries: Vec<(i64, BigInt)>) -> Result<Self, BFileError> {
        let id = normalize_id(id)?;
        check_contiguous(entries.iter().map(|(i, _)| *i).enumerate())?;
        if entries.is_empty() {
            return Err(BFileError::Empty);
        }
        Ok(BFile { id, entries })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn entries(&self) -> &[(i64, BigInt)] {
        &self.entries
    }

    /// Index of the first entry.
    pub fn offset(&self) -> i64 {
        self.entries[0].0
    }

    /// Index of the last entry.
    pub fn last_index(&self) -> i64 {
        self.offset() + self.entries.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: i64) -> Option<&BigInt> {
        let pos = index.checked_sub(self.offset())?;
        usize::try_from(pos)
            .ok()
            .and_then(|p| self.entries.get(p))
            .map(|(_, v)| v)
    }

    /// Replaces the value at `index`; for fault-injection tests.
    pub fn set(&mut self, index: i64, value: BigInt) -> bool {
        let offset = self.offset();
        match usize::try_from(index - offset)
            .ok()
            .and_then(|p| self.entries.get_mut(p))
        {
            Some(slot) => {
                slot.1 = value;
                true
            }
            None => false,
        }
    }
}

fn check_contiguous(indices: impl Iterator<Item = (usize, i64)>) -> Result<(), BFileError> {
    let mut prev: Option<i64> = None;
    for (line, index) in indices {
        if let Some(p) = prev {
            if index != p + 1 {
                return Err(BFileError::Gap {
                    line: line + 1,
                    expected: p + 1,
                    found: index,
                });
            }
        }
        prev = Some(index);
    }
    Ok(())
}

/// Parses b-file text. Lines starting with `#` and blank lines are skipped.
pub fn parse_bfile(id: &str, text: &str) -> Result<BFile, BFileError> {
    let id = normalize_id(id)?;
    let mut entries: Vec<(i64, BigInt)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let malformed = || BFileError::Malformed {
            line,
            content: raw.into(),
        };
        let mut fields = trimmed.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(malformed());
        };
        let index: i64 = index.parse().map_err(|_| malformed())?;
        let value: BigInt = value.parse().map_err(|_| malformed())?;
        if let Some(&(prev, _)) = entries.last() {
            if index != prev + 1 {
                return Err(BFileError::Gap {
                    line,
                    expected: prev + 1,
                    found: index,
                });
            }
        }
        entries.push((index, value));
    }
    if entries.is_empty() {
        return Err(BFileError::Empty);
    }
    Ok(BFile { id, entries })
}

/// `index value` lines, newline-terminated, no comments.
pub fn serialize(bfile: &BFile) -> String {
    let mut out = String::new();
    for (i, v) in &bfile.entries {
        let _ = writeln!(out, "{i} {v}");
    }
    out
}

/// Computed index `n` corresponds to b-file index `n + shift`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct OffsetMap {
    pub shift: i64,
}

impl OffsetMap {
    pub fn new(shift: i64) -> Self {
        OffsetMap { shift }
    }
}

/// Present when the requested number of terms exceeded the overlap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Truncation {
    pub requested: u64,
    pub available: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffOutcome {
    pub report: CheckReport,
    pub truncated: Option<Truncation>,
}

/// Computed indices `(start, available)` in the overlap of `seq` and `bfile`.
pub fn overlap(seq: SequenceId, bfile: &BFile, map: OffsetMap) -> Option<(u64, u64)> {
    let lo = (seq.first_index() as i64).max(bfile.offset() - map.shift);
    let hi = bfile.last_index() - map.shift;
    (lo <= hi).then(|| (lo as u64, (hi - lo + 1) as u64))
}

/// Compares up to `limit` terms (all of the overlap when `None`), starting at
/// the first index both sides define. Report indices are computed-sequence
/// indices.
pub fn diff(
    seq: SequenceId,
    bfile: &BFile,
    map: OffsetMap,
    limit: Option<u64>,
) -> Result<DiffOutcome, DiffError> {
    let Some((start, available)) = overlap(seq, bfile, map) else {
        return Err(DiffError::EmptyOverlap {
            sequence: seq,
            bfile: bfile.id().into(),
            shift: map.shift,
        });
    };
    let requested = limit.unwrap_or(available);
    if requested == 0 {
        return Err(DiffError::EmptyOverlap {
            sequence: seq,
            bfile: bfile.id().into(),
            shift: map.shift,
        });
    }
    let count = requested.min(available);
    let truncated = (requested > available).then_some(Truncation {
        requested,
        available,
    });
    let mut generator = seq.generator()?;
    let detail = format!("{seq} = {}", bfile.id());
    let report = tally(
        format!("oeis_diff[{seq} vs {}]", bfile.id()),
        start,
        start + count - 1,
        |n| {
            let expected = bfile
                .get(n as i64 + map.shift)
                .expect("index lies in the overlap");
            let actual = BigInt::from(generator.term(n)?);
            if *expected == actual {
                Ok(())
            } else {
                Err(Mismatch::new(expected, actual, detail.as_str()))
            }
        },
    );
    Ok(DiffOutcome { report, truncated })
}
