//! Fibonacci numbers and the Zeckendorf numeration system.
//!
//! Indexing follows `F_1 = F_2 = 1`. A Zeckendorf representation is stored
//! most significant digit first; the `i`-th digit from the right (counting
//! from 1) records whether `F_{i+1}` takes part in the sum, so `F_1` is never
//! used.

use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision natural number.
pub type FibNat = BigUint;

// Append-only cache of F_0, F_1, F_2, ...
static FIB_TABLE: OnceLock<RwLock<Vec<BigUint>>> = OnceLock::new();

fn table() -> &'static RwLock<Vec<BigUint>> {
    FIB_TABLE.get_or_init(|| RwLock::new(vec![BigUint::zero(), BigUint::one()]))
}

fn ensure_len(len: usize) {
    if table().read().unwrap().len() >= len {
        return;
    }
    let mut t = table().write().unwrap();
    while t.len() < len {
        let next = &t[t.len() - 1] + &t[t.len() - 2];
        t.push(next);
    }
}

fn fib_unchecked(n: usize) -> BigUint {
    ensure_len(n + 1);
    table().read().unwrap()[n].clone()
}

/// The `n`-th Fibonacci number, `F_1 = F_2 = 1`.
pub fn fib(n: usize) -> Result<FibNat> {
    if n == 0 {
        return Err(Error::IndexOutOfDomain {
            what: "fib",
            index: n,
            min: 1,
        });
    }
    Ok(fib_unchecked(n))
}

/// `F_n` as a machine word, for use as a length. Panics if it does not fit.
pub fn fib_usize(n: usize) -> usize {
    let mut a: usize = 0;
    let mut b: usize = 1;
    for _ in 0..n {
        let c = a.checked_add(b).expect("Fibonacci number overflows usize");
        a = b;
        b = c;
    }
    a
}

/// Both sides of `1 + F_1 + ... + F_n = F_{n+2}`.
pub fn fib_sum_identity(n: usize) -> Result<(FibNat, FibNat)> {
    if n == 0 {
        return Err(Error::IndexOutOfDomain {
            what: "fib_sum_identity",
            index: n,
            min: 1,
        });
    }
    let mut lhs = BigUint::one();
    for i in 1..=n {
        lhs += fib(i)?;
    }
    Ok((lhs, fib(n + 2)?))
}

/// Canonical Zeckendorf digits of a natural number.
///
/// Never contains two adjacent ones and never starts with a zero; zero is the
/// empty digit string (displayed as `"0"`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ZeckRep {
    bits: Vec<u8>,
}

impl ZeckRep {
    /// Validates `digits` (values 0/1, most significant first). Leading
    /// zeros are accepted and stripped.
    pub fn from_digits(digits: &[u8]) -> Result<Self> {
        for (i, &d) in digits.iter().enumerate() {
            if d > 1 {
                return Err(Error::InvalidSymbol {
                    symbol: char::from(b'0'.wrapping_add(d)),
                    position: i,
                });
            }
            if d == 1 && i + 1 < digits.len() && digits[i + 1] == 1 {
                return Err(Error::AdjacentOnes { position: i });
            }
        }
        let first = digits.iter().position(|&d| d == 1).unwrap_or(digits.len());
        Ok(ZeckRep {
            bits: digits[first..].to_vec(),
        })
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Number of digits; zero for the representation of 0.
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn value(&self) -> FibNat {
        let len = self.bits.len();
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b == 1)
            // digit i from the right (1-based) carries F_{i+1}
            .map(|(pos, _)| fib_unchecked(len - pos + 1))
            .sum()
    }

    /// Left-pads with zeros to `width` digits (never truncates).
    pub fn to_padded(&self, width: usize) -> String {
        let body = self.to_string();
        if self.bits.is_empty() {
            return "0".repeat(width.max(1));
        }
        format!("{body:0>width$}")
    }
}

impl fmt::Display for ZeckRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits.is_empty() {
            return f.write_str("0");
        }
        for &b in &self.bits {
            f.write_str(if b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for ZeckRep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::EmptyInput("zeckendorf digits"));
        }
        let digits = s
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::InvalidSymbol {
                    symbol: c,
                    position: i,
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        ZeckRep::from_digits(&digits)
    }
}

/// Greedy Zeckendorf encoding: repeatedly take the largest `F_k <= rest`,
/// `k >= 2`.
pub fn zeckendorf(n: &FibNat) -> ZeckRep {
    if n.is_zero() {
        return ZeckRep::default();
    }
    // find the largest k >= 2 with F_k <= n
    let mut k = 2;
    while fib_unchecked(k + 1) <= *n {
        k += 1;
    }
    let mut bits = vec![0u8; k - 1];
    let mut rest = n.clone();
    let mut idx = k;
    while idx >= 2 && !rest.is_zero() {
        let f = fib_unchecked(idx);
        if f <= rest {
            rest -= f;
            bits[k - idx] = 1;
            if idx < 4 {
                break;
            }
            idx -= 2;
        } else {
            idx -= 1;
        }
    }
    debug_assert!(rest.is_zero());
    ZeckRep { bits }
}

/// Inverse of [`zeckendorf`] on raw digits. Leading zeros are tolerated;
/// adjacent ones are rejected.
pub fn from_zeckendorf(digits: &[u8]) -> Result<FibNat> {
    Ok(ZeckRep::from_digits(digits)?.value())
}

/// Rightmost Zeckendorf digit of `n`, i.e. the `n`-th letter of the
/// Fibonacci infinite word. The empty representation of 0 reads as 0.
pub fn parity_bit(n: &FibNat) -> u8 {
    zeckendorf(n).bits().last().copied().unwrap_or(0)
}

/// All digit strings of length `width` without two consecutive ones, in
/// lexicographic order. These are the padded representations of
/// `0 .. F_{width+2} - 1`.
pub fn zeck_enumerate(width: usize) -> Result<Vec<String>> {
    if width == 0 {
        return Err(Error::IndexOutOfDomain {
            what: "zeck_enumerate",
            index: width,
            min: 1,
        });
    }
    fn go(buf: &mut Vec<u8>, width: usize, out: &mut Vec<String>) {
        if buf.len() == width {
            out.push(String::from_utf8(buf.clone()).unwrap());
            return;
        }
        buf.push(b'0');
        go(buf, width, out);
        buf.pop();
        if buf.last() != Some(&b'1') {
            buf.push(b'1');
            go(buf, width, out);
            buf.pop();
        }
    }
    let mut out = Vec::with_capacity(fib_usize(width + 2));
    go(&mut Vec::with_capacity(width), width, &mut out);
    Ok(out)
}
