//! Binary words and the word families built from the Fibonacci word.
//!
//! Symbols are stored one per byte with values `0` and `1`; the textual form
//! uses ASCII `'0'` / `'1'`.

mod lattice;
mod stream;

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use lattice::{christoffel_path, LatticePath, PathKind};
pub use stream::{fibonacci_prefix, fibonacci_stream, FibonacciStream, WordStream};

/// Immutable finite word over `{0, 1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    symbols: Vec<u8>,
}

impl Word {
    pub fn new(symbols: Vec<u8>) -> Result<Self> {
        if let Some(position) = symbols.iter().position(|&s| s > 1) {
            return Err(Error::InvalidSymbol {
                symbol: char::from(symbols[position].wrapping_add(b'0')),
                position,
            });
        }
        Ok(Word { symbols })
    }

    pub(crate) fn from_raw(symbols: Vec<u8>) -> Self {
        debug_assert!(symbols.iter().all(|&s| s <= 1));
        Word { symbols }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.symbols
    }

    pub fn into_vec(self) -> Vec<u8> {
        self.symbols
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.symbols);
        symbols.extend_from_slice(&other.symbols);
        Word { symbols }
    }

    pub fn concat_all<'a>(parts: impl IntoIterator<Item = &'a Word>) -> Word {
        let mut symbols = Vec::new();
        for p in parts {
            symbols.extend_from_slice(&p.symbols);
        }
        Word { symbols }
    }

    /// `self` repeated `k` times.
    pub fn pow(&self, k: usize) -> Word {
        Word {
            symbols: self.symbols.repeat(k),
        }
    }

    pub fn is_palindrome(&self) -> bool {
        self.symbols.iter().eq(self.symbols.iter().rev())
    }

    pub fn is_prefix_of(&self, other: &[u8]) -> bool {
        other.starts_with(&self.symbols)
    }

    /// Drops the last `k` symbols (saturating).
    pub fn truncate_end(&self, k: usize) -> Word {
        Word {
            symbols: self.symbols[..self.len().saturating_sub(k)].to_vec(),
        }
    }
}

impl Deref for Word {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.symbols
    }
}

impl AsRef<[u8]> for Word {
    fn as_ref(&self) -> &[u8] {
        &self.symbols
    }
}

impl TryFrom<&[u8]> for Word {
    type Error = Error;

    fn try_from(symbols: &[u8]) -> Result<Self> {
        Word::new(symbols.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.symbols.iter().map(|&b| char::from(b + b'0')).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}

/// Parses ASCII `'0'`/`'1'`. Whitespace anywhere is ignored; the position
/// in an error refers to the original string.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut symbols = Vec::with_capacity(s.len());
        for (position, c) in s.chars().enumerate() {
            match c {
                '0' => symbols.push(0),
                '1' => symbols.push(1),
                c if c.is_whitespace() => {}
                symbol => return Err(Error::InvalidSymbol { symbol, position }),
            }
        }
        Ok(Word { symbols })
    }
}

/// Which letter is the smaller one in lexicographic comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum LetterOrder {
    /// `0 < 1`
    #[default]
    ZeroLess,
    /// `1 < 0`
    OneLess,
}

impl LetterOrder {
    /// Sort key of a symbol. `OneLess` reverses the natural byte order, so it
    /// also makes sense for alphabets larger than `{0, 1}`.
    #[inline]
    pub fn rank(self, symbol: u8) -> u8 {
        match self {
            LetterOrder::ZeroLess => symbol,
            LetterOrder::OneLess => u8::MAX - symbol,
        }
    }

    /// Lexicographic comparison; a proper prefix is smaller.
    pub fn compare(self, a: &[u8], b: &[u8]) -> Ordering {
        a.iter()
            .map(|&s| self.rank(s))
            .cmp(b.iter().map(|&s| self.rank(s)))
    }
}

fn require_index(what: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::IndexOutOfDomain {
            what,
            index: n,
            min,
        })
    } else {
        Ok(())
    }
}

/// `f_n`: `f_1 = 1`, `f_2 = 0`, `f_n = f_{n-1} f_{n-2}`.
pub fn fibonacci_word(n: usize) -> Result<Word> {
    require_index("fibonacci_word", n, 1)?;
    let mut older = vec![1u8];
    let mut newer = vec![0u8];
    if n == 1 {
        return Ok(Word::from_raw(older));
    }
    for _ in 2..n {
        let mut next = Vec::with_capacity(newer.len() + older.len());
        next.extend_from_slice(&newer);
        next.extend_from_slice(&older);
        older = std::mem::replace(&mut newer, next);
    }
    Ok(Word::from_raw(newer))
}

/// Central word `p_n`: `f_n` without its last two letters. A palindrome.
pub fn central_word(n: usize) -> Result<Word> {
    require_index("central_word", n, 3)?;
    Ok(fibonacci_word(n)?.truncate_end(2))
}

/// Co-Fibonacci word `f'_n = f_{n-2} f_{n-1}`, which is `f_n` with its last
/// two letters exchanged.
pub fn cofibonacci_word(n: usize) -> Result<Word> {
    require_index("cofibonacci_word", n, 3)?;
    Ok(fibonacci_word(n - 2)?.concat(&fibonacci_word(n - 1)?))
}

/// Singular word: the left rotation of `f_n` with its first letter
/// complemented.
pub fn singular_word(n: usize) -> Result<Word> {
    require_index("singular_word", n, 1)?;
    complement_first(&rotate_left(&fibonacci_word(n)?)?)
}

/// Lower Christoffel word `0 p_n 1`.
pub fn christoffel_lower(n: usize) -> Result<Word> {
    require_index("christoffel_lower", n, 3)?;
    let p = central_word(n)?;
    let mut symbols = Vec::with_capacity(p.len() + 2);
    symbols.push(0);
    symbols.extend_from_slice(&p);
    symbols.push(1);
    Ok(Word::from_raw(symbols))
}

/// Upper Christoffel word `1 p_n 0`, the reversal of the lower one.
pub fn christoffel_upper(n: usize) -> Result<Word> {
    require_index("christoffel_upper", n, 3)?;
    let p = central_word(n)?;
    let mut symbols = Vec::with_capacity(p.len() + 2);
    symbols.push(1);
    symbols.extend_from_slice(&p);
    symbols.push(0);
    Ok(Word::from_raw(symbols))
}

pub fn reverse(w: &Word) -> Word {
    let mut symbols = w.symbols.clone();
    symbols.reverse();
    Word { symbols }
}

/// `w_1 ... w_n  ->  w_n w_1 ... w_{n-1}`
pub fn rotate_left(w: &Word) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyInput("rotate_left"));
    }
    let mut symbols = w.symbols.clone();
    symbols.rotate_right(1);
    Ok(Word { symbols })
}

/// `w_1 ... w_n  ->  w_2 ... w_n w_1`
pub fn rotate_right(w: &Word) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyInput("rotate_right"));
    }
    let mut symbols = w.symbols.clone();
    symbols.rotate_left(1);
    Ok(Word { symbols })
}

pub fn complement_first(w: &Word) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyInput("complement_first"));
    }
    let mut symbols = w.symbols.clone();
    symbols[0] ^= 1;
    Ok(Word { symbols })
}

/// True iff `w` is non-empty and strictly smaller than each of its proper
/// suffixes under `order`.
pub fn is_lyndon(w: &[u8], order: LetterOrder) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| order.compare(w, &w[i..]) == Ordering::Less)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn fibonacci_word_examples() {
        assert_eq!(fibonacci_word(1).unwrap(), w("1"));
        assert_eq!(fibonacci_word(2).unwrap(), w("0"));
        assert_eq!(fibonacci_word(6).unwrap(), w("01001010"));
        assert_eq!(
            fibonacci_word(9).unwrap(),
            w("0100101001001010010100100101001001")
        );
        assert!(fibonacci_word(0).is_err());
    }

    #[test]
    fn central_word_examples() {
        assert_eq!(central_word(3).unwrap(), Word::empty());
        assert_eq!(central_word(6).unwrap(), w("010010"));
        assert_eq!(central_word(8).unwrap(), w("0100101001001010010"));
        assert!(matches!(
            central_word(2),
            Err(Error::IndexOutOfDomain {
                index: 2,
                min: 3,
                ..
            })
        ));
    }

    #[test]
    fn cofibonacci_examples_and_dual_definition() {
        assert_eq!(cofibonacci_word(4).unwrap(), w("001"));
        assert_eq!(cofibonacci_word(5).unwrap(), w("01010"));
        assert_eq!(cofibonacci_word(8).unwrap(), w("010010100100101001001"));
        assert!(cofibonacci_word(2).is_err());
        for n in 3..=22 {
            let f = fibonacci_word(n).unwrap();
            let len = f.len();
            let mut swapped = f.clone().into_vec();
            swapped.swap(len - 2, len - 1);
            let complemented: Vec<u8> = f[..len - 2]
                .iter()
                .copied()
                .chain(f[len - 2..].iter().map(|s| s ^ 1))
                .collect();
            let cf = cofibonacci_word(n).unwrap();
            assert_eq!(cf.as_slice(), &swapped[..], "n = {n}");
            assert_eq!(cf.as_slice(), &complemented[..], "n = {n}");
        }
    }

    #[test]
    fn singular_examples_and_dual_definition() {
        assert_eq!(singular_word(1).unwrap(), w("0"));
        assert_eq!(singular_word(2).unwrap(), w("1"));
        assert_eq!(singular_word(3).unwrap(), w("00"));
        assert_eq!(singular_word(4).unwrap(), w("101"));
        assert_eq!(singular_word(5).unwrap(), w("00100"));
        assert_eq!(singular_word(6).unwrap(), w("10100101"));
        assert!(singular_word(0).is_err());
        for n in 3..=22 {
            let p = central_word(n).unwrap();
            let edge = if n % 2 == 1 { w("0") } else { w("1") };
            let framed = Word::concat_all([&edge, &p, &edge]);
            let s = singular_word(n).unwrap();
            assert_eq!(s, framed, "n = {n}");
            assert!(s.is_palindrome());
        }
    }

    #[test]
    fn christoffel_examples() {
        assert_eq!(christoffel_lower(3).unwrap(), w("01"));
        assert_eq!(christoffel_lower(5).unwrap(), w("00101"));
        assert_eq!(christoffel_lower(7).unwrap(), w("0010010100101"));
        assert_eq!(christoffel_upper(6).unwrap(), w("10100100"));
        assert_eq!(christoffel_upper(7).unwrap(), w("1010010100100"));
        assert!(christoffel_lower(2).is_err());
        assert!(christoffel_upper(1).is_err());
        for n in 3..=20 {
            let lower = christoffel_lower(n).unwrap();
            assert_eq!(christoffel_upper(n).unwrap(), reverse(&lower));
        }
    }

    #[test]
    fn elementary_operators() {
        assert_eq!(rotate_left(&w("01001")).unwrap(), w("10100"));
        assert_eq!(rotate_right(&w("01001")).unwrap(), w("10010"));
        assert_eq!(reverse(&w("10010")), w("01001"));
        assert_eq!(reverse(&Word::empty()), Word::empty());
        assert_eq!(complement_first(&w("0110")).unwrap(), w("1110"));
        assert_eq!(
            complement_first(&rotate_left(&fibonacci_word(6).unwrap()).unwrap()).unwrap(),
            singular_word(6).unwrap()
        );
        assert!(rotate_left(&Word::empty()).is_err());
        assert!(rotate_right(&Word::empty()).is_err());
        assert!(complement_first(&Word::empty()).is_err());
    }

    #[test]
    fn lyndon_predicate() {
        assert!(is_lyndon(&w("00101"), LetterOrder::ZeroLess));
        assert!(is_lyndon(&w("10100100"), LetterOrder::OneLess));
        assert!(!is_lyndon(&w("010"), LetterOrder::ZeroLess));
        assert!(!is_lyndon(&w("0101"), LetterOrder::ZeroLess));
        assert!(is_lyndon(&w("0"), LetterOrder::ZeroLess));
        assert!(!is_lyndon(&[], LetterOrder::ZeroLess));
        for n in 3..=20 {
            assert!(is_lyndon(
                &christoffel_lower(n).unwrap(),
                LetterOrder::ZeroLess
            ));
            assert!(is_lyndon(
                &christoffel_upper(n).unwrap(),
                LetterOrder::OneLess
            ));
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w(" 01\n10 ").to_string(), "0110");
        assert_eq!(
            "0120".parse::<Word>(),
            Err(Error::InvalidSymbol {
                symbol: '2',
                position: 2
            })
        );
        assert!(Word::new(vec![0, 2]).is_err());
        assert_eq!(format!("{:?}", w("01")), "Word(\"01\")");
    }
}
