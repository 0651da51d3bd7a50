//! Catalog of factorizations of the Fibonacci infinite word `f`, and checks
//! that compare them (and the generic factorization algorithms) with finite
//! prefixes of `f`.
//!
//! Infinite-word equality cannot be decided by a finite computation; every
//! report records how many symbols were compared, and a pass only means the
//! two words agree on that prefix.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::factorize::{factorize, CancelToken, Factorization, Method};
use crate::words::{
    christoffel_lower, christoffel_upper, cofibonacci_word, fibonacci_prefix, fibonacci_word,
    reverse, singular_word, LetterOrder, Word,
};

pub const DEFAULT_CHECK_LENGTH: usize = 75_025;

/// One of the sixteen catalogued identities, `I1` to `I16`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdentityId(u8);

impl IdentityId {
    pub fn new(number: u8) -> Result<Self> {
        if (1..=16).contains(&number) {
            Ok(IdentityId(number))
        } else {
            Err(Error::UnknownIdentity(format!("I{number}")))
        }
    }

    pub fn number(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = IdentityId> {
        (1..=16).map(IdentityId)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I{}", self.0)
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .strip_prefix('I')
            .or_else(|| s.strip_prefix('i'))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))?;
        let n: u8 = digits
            .parse()
            .map_err(|_| Error::UnknownIdentity(s.to_string()))?;
        IdentityId::new(n).map_err(|_| Error::UnknownIdentity(s.to_string()))
    }
}

/// `k`-th factor (0-based) of the infinite product.
pub type FactorGen = Arc<dyn Fn(usize) -> Word + Send + Sync>;

/// `f = prefix_word · factor(0) · factor(1) · ...`
#[derive(Clone)]
pub struct IdentitySpec {
    pub id: IdentityId,
    pub prefix_word: Word,
    pub factor_generator: FactorGen,
    /// Factors per bracketed group of the product (1, 2 or 3).
    pub group_size: usize,
    /// The identity written out, e.g. `f = 0 · Π_{n≥1} f_n`.
    pub formula: &'static str,
}

impl IdentitySpec {
    pub fn factor(&self, k: usize) -> Word {
        (self.factor_generator)(k)
    }

    pub fn factors(&self) -> impl Iterator<Item = Word> + '_ {
        (0..).map(|k| self.factor(k))
    }

    /// The `g`-th bracketed group, concatenated.
    pub fn group(&self, g: usize) -> Word {
        let parts: Vec<Word> = (0..self.group_size)
            .map(|i| self.factor(g * self.group_size + i))
            .collect();
        Word::concat_all(&parts)
    }
}

impl fmt::Debug for IdentitySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentitySpec")
            .field("id", &self.id)
            .field("prefix_word", &self.prefix_word)
            .field("group_size", &self.group_size)
            .field("formula", &self.formula)
            .finish_non_exhaustive()
    }
}

fn fw(n: usize) -> Word {
    fibonacci_word(n).expect("index in domain")
}
fn cofib(n: usize) -> Word {
    cofibonacci_word(n).expect("index in domain")
}
fn sing(n: usize) -> Word {
    singular_word(n).expect("index in domain")
}
fn lower(n: usize) -> Word {
    christoffel_lower(n).expect("index in domain")
}
fn upper(n: usize) -> Word {
    christoffel_upper(n).expect("index in domain")
}
fn rev_fw(n: usize) -> Word {
    reverse(&fw(n))
}

/// Product over `n >= first` of the group `parts(n)`, flattened.
fn grouped<const G: usize>(first: usize, parts: fn(usize) -> [Word; G]) -> FactorGen {
    Arc::new(move |k| {
        let n = first + k / G;
        parts(n)[k % G].clone()
    })
}

fn spec(
    number: u8,
    prefix: &str,
    group_size: usize,
    formula: &'static str,
    factor_generator: FactorGen,
) -> IdentitySpec {
    IdentitySpec {
        id: IdentityId(number),
        prefix_word: prefix.parse().expect("valid literal"),
        factor_generator,
        group_size,
        formula,
    }
}

/// The sixteen identities, in order `I1..I16`.
pub fn catalog() -> Vec<IdentitySpec> {
    vec![
        spec(1, "0", 1, "f = 0 · Π_{n≥1} f_n", grouped(1, |n| [fw(n)])),
        spec(
            2,
            "01001",
            3,
            "f = 01001 · Π_{n≥2} f_n f_{n-1} f_n",
            grouped(2, |n| [fw(n), fw(n - 1), fw(n)]),
        ),
        spec(
            3,
            "0100",
            3,
            "f = 0100 · Π_{n≥2} f_{n-1} f_n f_{n-1}",
            grouped(2, |n| [fw(n - 1), fw(n), fw(n - 1)]),
        ),
        spec(
            4,
            "0",
            1,
            "f = 0 · Π_{n≥1} f'_{2n+1}",
            grouped(1, |n| [cofib(2 * n + 1)]),
        ),
        spec(
            5,
            "01",
            1,
            "f = 01 · Π_{n≥1} f'_{2n+2}",
            grouped(1, |n| [cofib(2 * n + 2)]),
        ),
        spec(
            6,
            "",
            1,
            "f = Π_{n≥1} ŝ_n (singular words)",
            grouped(1, |n| [sing(n)]),
        ),
        spec(
            7,
            "0100",
            3,
            "f = 0100 · Π_{n≥2} ŝ_n ŝ_{n-1} ŝ_n",
            grouped(2, |n| [sing(n), sing(n - 1), sing(n)]),
        ),
        spec(
            8,
            "010",
            3,
            "f = 010 · Π_{n≥2} ŝ_{n-1} ŝ_n ŝ_{n-1}",
            grouped(2, |n| [sing(n - 1), sing(n), sing(n - 1)]),
        ),
        spec(
            9,
            "",
            1,
            "f = Π_{n≥1} c_{2n+1} (lower Christoffel)",
            grouped(1, |n| [lower(2 * n + 1)]),
        ),
        spec(
            10,
            "0",
            1,
            "f = 0 · Π_{n≥2} ~c_{2n} (upper Christoffel)",
            grouped(2, |n| [upper(2 * n)]),
        ),
        spec(
            11,
            "010",
            3,
            "f = 010 · Π_{n≥1} c_{2n+1} c_{2n+1} c_{2n+2}",
            grouped(1, |n| {
                [lower(2 * n + 1), lower(2 * n + 1), lower(2 * n + 2)]
            }),
        ),
        spec(
            12,
            "0100",
            3,
            "f = 0100 · Π_{n≥1} ~c_{2n+1} ~c_{2n+2} ~c_{2n+2}",
            grouped(1, |n| {
                [upper(2 * n + 1), upper(2 * n + 2), upper(2 * n + 2)]
            }),
        ),
        spec(
            13,
            "",
            1,
            "f = Π_{n≥2} rev(f_n)",
            grouped(2, |n| [rev_fw(n)]),
        ),
        spec(
            14,
            "",
            1,
            "f = Π_{n≥2} rev(f_{2n})",
            grouped(2, |n| [rev_fw(2 * n)]),
        ),
        spec(
            15,
            "0",
            1,
            "f = 0 · Π_{n≥2} rev(f_{2n+1})",
            grouped(2, |n| [rev_fw(2 * n + 1)]),
        ),
        spec(
            16,
            "01",
            2,
            "f = 01 · Π_{n≥2} rev(f_n) rev(f_n)",
            grouped(2, |n| [rev_fw(n), rev_fw(n)]),
        ),
    ]
}

pub fn lookup(id: IdentityId) -> IdentitySpec {
    catalog()
        .into_iter()
        .nth(usize::from(id.number()) - 1)
        .expect("catalog has sixteen entries")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerificationStatus {
    Pass,
    /// First position where the produced word differs from `f`.
    Fail {
        position: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// `I1`..`I16` or an algorithm name.
    pub id: String,
    pub checked_length: usize,
    pub factors_consumed: usize,
    pub status: VerificationStatus,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == VerificationStatus::Pass
    }
}

fn first_difference(a: &[u8], b: &[u8]) -> Option<usize> {
    a.iter().zip(b).position(|(x, y)| x != y)
}

/// Checks `spec` against the first `length` letters of `f`.
pub fn verify_spec(spec: &IdentitySpec, length: usize) -> Result<VerificationReport> {
    if length == 0 {
        return Err(Error::IndexOutOfDomain {
            what: "verification length",
            index: 0,
            min: 1,
        });
    }
    let expected = fibonacci_prefix(length);
    let mut report = VerificationReport {
        id: spec.id.to_string(),
        checked_length: length,
        factors_consumed: 0,
        status: VerificationStatus::Pass,
    };
    let mut pos = 0;
    let compare = |chunk: &[u8], pos: &mut usize| -> Option<usize> {
        let end = (*pos + chunk.len()).min(length);
        let found = first_difference(&chunk[..end - *pos], &expected[*pos..end]).map(|d| *pos + d);
        *pos = end;
        found
    };
    if let Some(position) = compare(&spec.prefix_word, &mut pos) {
        report.status = VerificationStatus::Fail { position };
        return Ok(report);
    }
    let mut k = 0;
    while pos < length {
        let factor = spec.factor(k);
        k += 1;
        report.factors_consumed += 1;
        if factor.is_empty() {
            // an empty factor would never make progress
            report.status = VerificationStatus::Fail { position: pos };
            return Ok(report);
        }
        if let Some(position) = compare(&factor, &mut pos) {
            report.status = VerificationStatus::Fail { position };
            return Ok(report);
        }
    }
    Ok(report)
}

pub fn verify_identity(id: IdentityId, length: usize) -> Result<VerificationReport> {
    verify_spec(&lookup(id), length)
}

/// Verifies every catalog entry; entries run on separate threads and the
/// reports come back in catalog order.
pub fn verify_all(length: usize) -> Result<Vec<VerificationReport>> {
    let specs = catalog();
    std::thread::scope(|s| {
        let handles: Vec<_> = specs
            .iter()
            .map(|spec| s.spawn(move || verify_spec(spec, length)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread panicked"))
            .collect()
    })
}

/// The factor sequence each algorithm is expected to produce on `f`.
pub fn expected_algorithm_factor(method: Method, k: usize) -> Word {
    match method {
        Method::Lz => sing(k + 1),
        Method::Lyndon(LetterOrder::ZeroLess) => lower(2 * k + 3),
        Method::Lyndon(LetterOrder::OneLess) => {
            if k == 0 {
                Word::from_raw(vec![0])
            } else {
                upper(2 * k + 2)
            }
        }
        Method::Crochemore => match k {
            0 | 2 => Word::from_raw(vec![0]),
            1 => Word::from_raw(vec![1]),
            _ => rev_fw(k + 1),
        },
    }
}

/// Runs `method` on the first `length` letters of `f` and compares its
/// complete factors with [`expected_algorithm_factor`]; the trailing
/// incomplete part must be a prefix of the expected continuation.
pub fn verify_algorithmic_match(method: Method, length: usize) -> Result<VerificationReport> {
    if length < 2 {
        return Err(Error::IndexOutOfDomain {
            what: "verification length",
            index: length,
            min: 2,
        });
    }
    let source = fibonacci_prefix(length);
    let fz = factorize(method, &source, &CancelToken::new())?;
    Ok(compare_with_expected(method, &source, &fz))
}

fn compare_with_expected(method: Method, source: &[u8], fz: &Factorization) -> VerificationReport {
    let mut report = VerificationReport {
        id: method.name().to_string(),
        checked_length: source.len(),
        factors_consumed: 0,
        status: VerificationStatus::Pass,
    };
    let mut k = 0;
    let mut tail_start = source.len();
    for f in &fz.factors {
        if !f.complete {
            tail_start = f.span.start;
            break;
        }
        let got = f.span.of(source);
        let want = expected_algorithm_factor(method, k);
        if got != want.as_slice() {
            let d = first_difference(got, &want).unwrap_or(got.len().min(want.len()));
            report.status = VerificationStatus::Fail {
                position: f.span.start + d,
            };
            return report;
        }
        k += 1;
        report.factors_consumed += 1;
    }
    let tail = &source[tail_start..];
    let mut continuation = Vec::with_capacity(tail.len());
    while continuation.len() < tail.len() {
        continuation.extend_from_slice(&expected_algorithm_factor(method, k));
        k += 1;
    }
    if let Some(d) = first_difference(tail, &continuation) {
        report.status = VerificationStatus::Fail {
            position: tail_start + d,
        };
    }
    report
}

/// `k`-th factor of the even-reversal product, `rev(f_{2k+4})`.
fn even_reversal_factor(k: usize) -> Word {
    rev_fw(2 * k + 4)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinimalityOutcome {
    /// Every transposition produced a strictly greater word.
    Confirmed { transpositions: usize },
    /// Swapping factors `i` and `j` produced a smaller word.
    Violated { i: usize, j: usize },
    /// Swapping `i` and `j` agreed with `f` on the whole probe.
    Inconclusive { i: usize, j: usize },
}

impl MinimalityOutcome {
    pub fn holds(self) -> bool {
        matches!(self, MinimalityOutcome::Confirmed { .. })
    }
}

/// The word obtained from the even-reversal product by applying `perm` to its
/// first `perm.len()` factors, cut to `len` letters.
pub fn permuted_even_reversal_prefix(perm: &[usize], len: usize) -> Word {
    let mut out = Vec::with_capacity(len);
    for &idx in perm {
        if out.len() >= len {
            break;
        }
        out.extend_from_slice(&even_reversal_factor(idx));
    }
    let mut k = perm.len();
    while out.len() < len {
        out.extend_from_slice(&even_reversal_factor(k));
        k += 1;
    }
    out.truncate(len);
    Word::from_raw(out)
}

/// Swaps each pair among the first `k` factors of `f = Π_{n≥2} rev(f_{2n})`
/// and checks that the result is lexicographically greater than `f`.
///
/// Only transpositions are tried, not all `k!` permutations. Each comparison
/// looks at `min(probe_length, |first k factors| + longest of them)` letters;
/// a tie over that depth is reported as inconclusive.
pub fn deluca_minimality_check(k: usize, probe_length: usize) -> Result<MinimalityOutcome> {
    if k < 2 {
        return Err(Error::IndexOutOfDomain {
            what: "minimality factor count",
            index: k,
            min: 2,
        });
    }
    let lens: Vec<usize> = (0..k).map(|i| even_reversal_factor(i).len()).collect();
    let depth = probe_length.min(lens.iter().sum::<usize>() + lens.iter().max().unwrap());
    let reference = fibonacci_prefix(depth);
    let mut count = 0;
    for i in 0..k {
        for j in i + 1..k {
            let mut perm: Vec<usize> = (0..k).collect();
            perm.swap(i, j);
            let candidate = permuted_even_reversal_prefix(&perm, depth);
            match candidate.as_slice().cmp(reference.as_slice()) {
                Ordering::Greater => count += 1,
                Ordering::Less => return Ok(MinimalityOutcome::Violated { i, j }),
                Ordering::Equal => return Ok(MinimalityOutcome::Inconclusive { i, j }),
            }
        }
    }
    Ok(MinimalityOutcome::Confirmed {
        transpositions: count,
    })
}

/// Factor lengths of `f = 010 · Π_{n≥2} ŝ_{n-1} ŝ_n ŝ_{n-1}` when the leading
/// `010` is split as `01 · 0` and each bracketed triple counts as one factor:
/// `2, 1, 3, 4, 7, 11, ...`.
pub fn lucas_lengths(count: usize) -> Vec<usize> {
    let spec = lookup(IdentityId(8));
    debug_assert_eq!(spec.prefix_word.to_string(), "010");
    let mut out = vec![2, 1];
    let mut g = 0;
    while out.len() < count {
        out.push(spec.group(g).len());
        g += 1;
    }
    out.truncate(count);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeration::fib_usize;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn catalog_shape() {
        let cat = catalog();
        assert_eq!(cat.len(), 16);
        for (i, s) in cat.iter().enumerate() {
            assert_eq!(usize::from(s.id.number()), i + 1);
            for k in 0..12 {
                assert!(!s.factor(k).is_empty(), "{} factor {k}", s.id);
            }
        }
    }

    #[test]
    fn catalog_examples() {
        let i6 = lookup("I6".parse().unwrap());
        assert_eq!(i6.prefix_word, Word::empty());
        let first: Vec<Word> = i6.factors().take(4).collect();
        assert_eq!(first, vec![w("0"), w("1"), w("00"), w("101")]);

        let i11 = lookup("I11".parse().unwrap());
        assert_eq!(i11.prefix_word, w("010"));
        assert_eq!(i11.group(0), w("0101001"));
        assert_eq!(
            i11.factors().take(3).collect::<Vec<_>>(),
            vec![w("01"), w("01"), w("001")]
        );

        let i16 = lookup("I16".parse().unwrap());
        assert_eq!(i16.prefix_word, w("01"));
        assert_eq!(
            i16.factors().take(4).collect::<Vec<_>>(),
            vec![w("0"), w("0"), w("10"), w("10")]
        );

        let i12 = lookup(IdentityId::new(12).unwrap());
        assert_eq!(
            i12.factors().take(6).collect::<Vec<_>>(),
            vec![
                w("10"),
                w("100"),
                w("100"),
                w("10100"),
                w("10100100"),
                w("10100100")
            ]
        );
    }

    #[test]
    fn identity_ids() {
        assert_eq!("I1".parse::<IdentityId>().unwrap().number(), 1);
        assert_eq!("i16".parse::<IdentityId>().unwrap().to_string(), "I16");
        for bad in ["I0", "I17", "17", "Ix", ""] {
            assert!(bad.parse::<IdentityId>().is_err(), "{bad}");
        }
        assert_eq!(IdentityId::all().count(), 16);
    }

    #[test]
    fn singular_product_short_prefix() {
        let r = verify_identity(IdentityId::new(6).unwrap(), 19).unwrap();
        assert!(r.passed());
        assert_eq!(r.factors_consumed, 6);
    }

    #[test]
    fn every_identity_on_a_medium_prefix() {
        for r in verify_all(fib_usize(18)).unwrap() {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn wrong_prefix_word_fails_at_zero() {
        let mut spec = lookup(IdentityId::new(1).unwrap());
        spec.prefix_word = w("1");
        let r = verify_spec(&spec, 10).unwrap();
        assert_eq!(r.status, VerificationStatus::Fail { position: 0 });
        assert!(verify_spec(&spec, 0).is_err());
    }

    #[test]
    fn first_product_factor_offsets() {
        // in f = 0 f_1 f_2 ..., the factor f_k starts at F_{k+1}
        let spec = lookup(IdentityId::new(1).unwrap());
        let mut pos = spec.prefix_word.len();
        for k in 1..=20 {
            assert_eq!(pos, fib_usize(k + 1), "k = {k}");
            pos += spec.factor(k - 1).len();
        }
    }

    #[test]
    fn algorithm_matches_short() {
        for m in ["lz", "lyndon-01", "lyndon-10", "crochemore"] {
            let r = verify_algorithmic_match(m.parse().unwrap(), 1000).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        let r = verify_algorithmic_match(Method::Lyndon(LetterOrder::ZeroLess), 20).unwrap();
        assert!(r.passed());
        assert_eq!(r.factors_consumed, 2);
        let r = verify_algorithmic_match(Method::Lyndon(LetterOrder::ZeroLess), 2).unwrap();
        assert!(r.passed());
        assert!(verify_algorithmic_match(Method::Lz, 1).is_err());
    }

    #[test]
    fn minimality_small() {
        // swapping 010 and 01010010 gives 01010010 010 ... > 010 01010010 ...
        assert_eq!(
            deluca_minimality_check(2, 200).unwrap(),
            MinimalityOutcome::Confirmed { transpositions: 1 }
        );
        assert_eq!(
            deluca_minimality_check(4, 10_000).unwrap(),
            MinimalityOutcome::Confirmed { transpositions: 6 }
        );
        assert!(deluca_minimality_check(1, 100).is_err());
    }

    #[test]
    fn unpermuted_product_is_f() {
        let perm: Vec<usize> = (0..5).collect();
        assert_eq!(
            permuted_even_reversal_prefix(&perm, 5000),
            fibonacci_prefix(5000)
        );
    }

    #[test]
    fn short_probe_is_inconclusive() {
        // 010 01010010 vs 01010010 010 first differ at offset 3
        assert!(matches!(
            deluca_minimality_check(2, 3).unwrap(),
            MinimalityOutcome::Inconclusive { i: 0, j: 1 }
        ));
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas_lengths(6), vec![2, 1, 3, 4, 7, 11]);
        assert_eq!(lucas_lengths(1), vec![2]);
        assert_eq!(lucas_lengths(8), vec![2, 1, 3, 4, 7, 11, 18, 29]);
    }
}
