//! Factorizations of finite words and of finite prefixes of infinite words.
//!
//! Three greedy schemes are provided:
//!
//! * **LZ** ([`lz_factorize`]): the first phrase is the first letter; each
//!   later phrase is the *shortest* prefix of the remaining text that has no
//!   earlier occurrence. This is not the longest-match LZ77 used by
//!   compressors.
//! * **Lyndon** ([`lyndon_factorize`]): the Chen-Fox-Lyndon factorization into
//!   a non-increasing sequence of Lyndon words, computed with Duval's
//!   algorithm.
//! * **Crochemore** ([`crochemore_factorize`]): each phrase is a fresh letter
//!   or the *longest* prefix of the remaining text with an earlier
//!   occurrence.
//!
//! Earlier occurrences may overlap the current phrase. When the input is a
//! prefix of a longer word, trailing phrases that could still change if more
//! text arrived are flagged as incomplete.
//!
//! The LZ and Crochemore entry points use a suffix-array index; the quadratic
//! definitions live in [`reference`] and serve as the oracle.

mod lpf;
pub mod reference;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::words::LetterOrder;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Shortest-new-phrase Lempel-Ziv variant.
    Lz,
    Lyndon(LetterOrder),
    Crochemore,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Lz => "lz-paper",
            Method::Lyndon(LetterOrder::ZeroLess) => "lyndon-01",
            Method::Lyndon(LetterOrder::OneLess) => "lyndon-10",
            Method::Crochemore => "crochemore",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lz" | "lz-paper" => Ok(Method::Lz),
            "lyndon" | "lyndon-01" => Ok(Method::Lyndon(LetterOrder::ZeroLess)),
            "lyndon-10" => Ok(Method::Lyndon(LetterOrder::OneLess)),
            "crochemore" => Ok(Method::Crochemore),
            other => Err(Error::UnknownMethod(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Span {
    pub start: usize,
    pub len: usize,
}

impl Span {
    pub fn end(&self) -> usize {
        self.start + self.len
    }

    pub fn of<'a>(&self, source: &'a [u8]) -> &'a [u8] {
        &source[self.start..self.end()]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Factor {
    pub span: Span,
    /// False when the factor could still grow or merge given more input.
    pub complete: bool,
}

/// Factors of a source, as spans. Spans tile `0..source_len` without gaps and
/// the incomplete factors, if any, form a suffix of the list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub method: Method,
    pub source_len: usize,
    pub factors: Vec<Factor>,
}

impl Factorization {
    fn new(method: Method, source_len: usize) -> Self {
        Factorization {
            method,
            source_len,
            factors: Vec::new(),
        }
    }

    fn push(&mut self, start: usize, len: usize, complete: bool) {
        self.factors.push(Factor {
            span: Span { start, len },
            complete,
        });
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn complete_factors(&self) -> impl Iterator<Item = &Factor> {
        self.factors.iter().filter(|f| f.complete)
    }

    pub fn incomplete_factors(&self) -> impl Iterator<Item = &Factor> {
        self.factors.iter().filter(|f| !f.complete)
    }

    pub fn slices<'a>(&self, source: &'a [u8]) -> Vec<&'a [u8]> {
        self.factors.iter().map(|f| f.span.of(source)).collect()
    }

    /// Checks the structural invariants: gapless tiling from offset 0 and
    /// incomplete factors only at the end.
    pub fn is_well_formed(&self) -> bool {
        let mut pos = 0;
        let mut seen_incomplete = false;
        for f in &self.factors {
            if f.span.start != pos || f.span.len == 0 || (seen_incomplete && f.complete) {
                return false;
            }
            seen_incomplete |= !f.complete;
            pos = f.span.end();
        }
        pos == self.source_len
    }
}

/// Cooperative cancellation flag, polled between factor emissions.
#[derive(Debug, Clone, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, AtomicOrdering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(AtomicOrdering::Relaxed)
    }

    fn check(&self) -> Result<()> {
        if self.is_cancelled() {
            Err(Error::Cancelled)
        } else {
            Ok(())
        }
    }
}

/// All start offsets of `pattern` in `text`, overlaps included, ascending.
pub fn occurrence_positions(text: &[u8], pattern: &[u8]) -> Result<Vec<usize>> {
    if pattern.is_empty() {
        return Err(Error::EmptyInput("occurrence_positions pattern"));
    }
    if pattern.len() > text.len() {
        return Ok(Vec::new());
    }
    Ok(text
        .windows(pattern.len())
        .enumerate()
        .filter(|(_, w)| *w == pattern)
        .map(|(i, _)| i)
        .collect())
}

pub fn factorize(method: Method, source: &[u8], cancel: &CancelToken) -> Result<Factorization> {
    match method {
        Method::Lz => lz_with(source, cancel),
        Method::Lyndon(order) => lyndon_with(source, order, cancel),
        Method::Crochemore => crochemore_with(source, cancel),
    }
}

pub fn lz_factorize(source: &[u8]) -> Result<Factorization> {
    lz_with(source, &CancelToken::new())
}

pub fn lyndon_factorize(source: &[u8], order: LetterOrder) -> Result<Factorization> {
    lyndon_with(source, order, &CancelToken::new())
}

pub fn crochemore_factorize(source: &[u8]) -> Result<Factorization> {
    crochemore_with(source, &CancelToken::new())
}

fn lz_with(source: &[u8], cancel: &CancelToken) -> Result<Factorization> {
    if source.is_empty() {
        return Err(Error::EmptyInput("lz_factorize"));
    }
    let n = source.len();
    let lpf = lpf::longest_previous_factor(source);
    let mut out = Factorization::new(Method::Lz, n);
    let mut p = 0;
    while p < n {
        cancel.check()?;
        // the shortest prefix without an earlier occurrence is one symbol
        // longer than the longest one with an earlier occurrence
        let want = lpf[p] + 1;
        if p + want <= n {
            out.push(p, want, true);
            p += want;
        } else {
            out.push(p, n - p, false);
            p = n;
        }
    }
    Ok(out)
}

fn crochemore_with(source: &[u8], cancel: &CancelToken) -> Result<Factorization> {
    if source.is_empty() {
        return Err(Error::EmptyInput("crochemore_factorize"));
    }
    let n = source.len();
    let lpf = lpf::longest_previous_factor(source);
    let mut out = Factorization::new(Method::Crochemore, n);
    let mut p = 0;
    while p < n {
        cancel.check()?;
        let len = lpf[p];
        if len == 0 {
            out.push(p, 1, true);
            p += 1;
        } else {
            // a repeat reaching the end of the input might extend further
            out.push(p, len, p + len < n);
            p += len;
        }
    }
    Ok(out)
}

/// Duval's algorithm. Factors of a run that was closed by a strictly smaller
/// letter are final; the run still open at the end of the input (a power of
/// a Lyndon word followed by one of its prefixes) can merge into longer
/// Lyndon words once more text is known, so all of its factors are flagged
/// incomplete.
fn lyndon_with(source: &[u8], order: LetterOrder, cancel: &CancelToken) -> Result<Factorization> {
    if source.is_empty() {
        return Err(Error::EmptyInput("lyndon_factorize"));
    }
    let n = source.len();
    let rank = |i: usize| order.rank(source[i]);
    let mut out = Factorization::new(Method::Lyndon(order), n);
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && rank(k) <= rank(j) {
            if rank(k) < rank(j) {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        let closed = j < n;
        let period = j - k;
        while i <= k {
            cancel.check()?;
            out.push(i, period, closed);
            i += period;
        }
    }
    Ok(out)
}
