//! Standard sequences and standard Sturmian words.
//!
//! Given directives `d_1, d_2, ...` (all `>= 1`), the standard sequence is
//! `s_1 = 1`, `s_2 = 0`, `s_n = s_{n-1}^{d_{n-2}} s_{n-2}`. Its limit is the
//! standard Sturmian word whose slope has continued fraction
//! `[0; d_1 + 1, d_2, d_3, ...]`. All-ones directives give the Fibonacci word.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::words::{Word, WordStream};

/// Directive sequence. A finite list is either used as-is (asking for a
/// directive past its end is an error) or cycled indefinitely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Directives {
    values: Vec<u64>,
    cycle: bool,
}

impl Directives {
    pub fn new(values: Vec<u64>, cycle: bool) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput("directives"));
        }
        if let Some(pos) = values.iter().position(|&d| d == 0) {
            return Err(Error::InvalidDirective {
                index: pos + 1,
                value: 0,
            });
        }
        Ok(Directives { values, cycle })
    }

    /// `1, 1, 1, ...`: the Fibonacci case.
    pub fn all_ones() -> Self {
        Directives {
            values: vec![1],
            cycle: true,
        }
    }

    pub fn cycled(mut self) -> Self {
        self.cycle = true;
        self
    }

    pub fn is_unbounded(&self) -> bool {
        self.cycle
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// `d_index`, 1-based.
    pub fn get(&self, index: usize) -> Result<u64> {
        if index == 0 {
            return Err(Error::IndexOutOfDomain {
                what: "directive",
                index,
                min: 1,
            });
        }
        if self.cycle {
            Ok(self.values[(index - 1) % self.values.len()])
        } else {
            self.values
                .get(index - 1)
                .copied()
                .ok_or(Error::DirectivesExhausted {
                    index,
                    available: self.values.len(),
                })
        }
    }
}

/// Parses a comma-separated list such as `"2,1,1"` (not cycled).
impl FromStr for Directives {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .enumerate()
            .map(|(i, t)| {
                t.parse::<u64>().map_err(|_| Error::InvalidDirective {
                    index: i + 1,
                    value: 0,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Directives::new(values, false)
    }
}

/// `s_n` of the standard sequence.
pub fn standard_sequence(dirs: &Directives, n: usize) -> Result<Word> {
    match n {
        0 => Err(Error::IndexOutOfDomain {
            what: "standard_sequence",
            index: 0,
            min: 1,
        }),
        1 => Ok(Word::from_raw(vec![1])),
        2 => Ok(Word::from_raw(vec![0])),
        _ => {
            let mut older = Word::from_raw(vec![1]);
            let mut newer = Word::from_raw(vec![0]);
            for level in 3..=n {
                let d = dirs.get(level - 2)?;
                let next = newer.pow(d as usize).concat(&older);
                older = std::mem::replace(&mut newer, next);
            }
            Ok(newer)
        }
    }
}

/// Standard Sturmian word as a stream. Requires unbounded (cycled)
/// directives; see [`sturmian_prefix`] for finite lists.
pub fn sturmian_stream(dirs: &Directives) -> Result<SturmianStream> {
    if !dirs.is_unbounded() {
        return Err(Error::DirectivesExhausted {
            index: dirs.values().len() + 1,
            available: dirs.values().len(),
        });
    }
    SturmianStream::new(dirs.clone())
}

/// The first `k` letters of the standard Sturmian word. Works with finite
/// directive lists as long as they reach far enough.
pub fn sturmian_prefix(dirs: &Directives, k: usize) -> Result<Word> {
    let mut s = SturmianStream::new(dirs.clone())?;
    s.try_grow_to(k)?;
    Ok(s.take(k))
}

/// Buffer holds `s_level`; since `s_{level-1}` is a prefix of it, the next
/// level only appends copies of prefixes of the buffer.
#[derive(Debug, Clone)]
pub struct SturmianStream {
    dirs: Directives,
    buf: Vec<u8>,
    prev_len: usize,
    level: usize,
    pos: usize,
}

impl SturmianStream {
    fn new(dirs: Directives) -> Result<Self> {
        let d1 = dirs.get(1)? as usize;
        // s_3 = 0^{d_1} 1
        let mut buf = vec![0u8; d1];
        buf.push(1);
        Ok(SturmianStream {
            dirs,
            buf,
            prev_len: 1,
            level: 3,
            pos: 0,
        })
    }

    fn try_grow_to(&mut self, len: usize) -> Result<()> {
        while self.buf.len() < len {
            let d = self.dirs.get(self.level - 1)? as usize;
            let cur = self.buf.len();
            for _ in 1..d {
                self.buf.extend_from_within(..cur);
            }
            self.buf.extend_from_within(..self.prev_len);
            self.prev_len = cur;
            self.level += 1;
        }
        Ok(())
    }
}

impl WordStream for SturmianStream {
    fn next_symbol(&mut self) -> u8 {
        self.try_grow_to(self.pos + 1)
            .expect("sturmian stream requires unbounded directives");
        self.pos += 1;
        self.buf[self.pos - 1]
    }

    fn take(&mut self, k: usize) -> Word {
        self.try_grow_to(self.pos + k)
            .expect("sturmian stream requires unbounded directives");
        let out = self.buf[self.pos..self.pos + k].to_vec();
        self.pos += k;
        Word::from_raw(out)
    }
}

/// Exact value of the truncated continued fraction
/// `[0; d_1 + 1, d_2, ..., d_depth]`.
pub fn slope(dirs: &Directives, depth: usize) -> Result<BigRational> {
    if depth == 0 {
        return Err(Error::IndexOutOfDomain {
            what: "slope depth",
            index: 0,
            min: 1,
        });
    }
    let mut tail = BigRational::zero();
    for i in (1..=depth).rev() {
        let mut a = BigInt::from(dirs.get(i)?);
        if i == 1 {
            a += 1;
        }
        let term = BigRational::from_integer(a) + tail;
        tail = term.recip();
    }
    Ok(tail)
}

/// [`slope`] together with an upper bound on its distance to the limit slope:
/// a convergent `p/q` is within `1/q^2` of the irrational it approximates.
pub fn slope_with_bound(dirs: &Directives, depth: usize) -> Result<(BigRational, BigRational)> {
    let value = slope(dirs, depth)?;
    let q = value.denom().clone();
    let bound = BigRational::new(BigInt::one(), &q * &q);
    Ok((value, bound))
}
