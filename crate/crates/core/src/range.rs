//! Inclusive index ranges written `a..b` (or a single `n`).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexRange {
    pub start: usize,
    pub end: usize,
}

impl IndexRange {
    pub fn iter(&self) -> std::ops::RangeInclusive<usize> {
        self.start..=self.end
    }

    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

fn number(s: &str, whole: &str) -> Result<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("bad range {whole:?}: expected a..b")));
    }
    s.parse().map_err(|_| Error::Parse(format!("bad range {whole:?}: bound out of range")))
}

impl FromStr for IndexRange {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (number(a, s)?, number(b, s)?),
            None => {
                let n = number(s, s)?;
                (n, n)
            }
        };
        if start > end {
            return Err(Error::Parse(format!("bad range {s:?}: start exceeds end")));
        }
        Ok(IndexRange { start, end })
    }
}

impl fmt::Display for IndexRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

pub fn parse_range(s: &str) -> Result<IndexRange> {
    s.parse()
}
