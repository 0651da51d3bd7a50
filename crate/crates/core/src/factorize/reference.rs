//! Quadratic implementations that follow the phrase definitions literally by
//! counting occurrences with [`occurrence_positions`]. Slow; used as the
//! oracle for the indexed versions.

use super::{occurrence_positions, Factorization, Method};
use crate::error::{Error, Result};

fn occurrences_up_to(source: &[u8], start: usize, len: usize) -> usize {
    occurrence_positions(&source[..start + len], &source[start..start + len])
        .map(|v| v.len())
        .unwrap_or(0)
}

/// Each phrase is the shortest prefix of the remaining text that occurs
/// exactly once in the text up to and including itself.
pub fn lz_factorize(source: &[u8]) -> Result<Factorization> {
    if source.is_empty() {
        return Err(Error::EmptyInput("lz_factorize"));
    }
    let n = source.len();
    let mut out = Factorization::new(Method::Lz, n);
    let mut p = 0;
    while p < n {
        let mut len = 1;
        loop {
            if p + len > n {
                out.push(p, n - p, false);
                p = n;
                break;
            }
            if occurrences_up_to(source, p, len) == 1 {
                out.push(p, len, true);
                p += len;
                break;
            }
            len += 1;
        }
    }
    Ok(out)
}

/// Each phrase is the longest prefix of the remaining text that occurs at
/// least twice in the text up to and including itself, or a single fresh
/// letter.
pub fn crochemore_factorize(source: &[u8]) -> Result<Factorization> {
    if source.is_empty() {
        return Err(Error::EmptyInput("crochemore_factorize"));
    }
    let n = source.len();
    let mut out = Factorization::new(Method::Crochemore, n);
    let mut p = 0;
    while p < n {
        let mut best = 0;
        while p + best < n && occurrences_up_to(source, p, best + 1) >= 2 {
            best += 1;
        }
        if best == 0 {
            out.push(p, 1, true);
            p += 1;
        } else {
            out.push(p, best, p + best < n);
            p += best;
        }
    }
    Ok(out)
}
