//! Longest-previous-factor table from a suffix array.
//!
//! `lpf[i]` is the length of the longest prefix of `s[i..]` that also starts
//! at some `j < i` (the occurrence at `j` may overlap `i`). Among the earlier
//! suffixes, the best match is one of the two rank-neighbours with a smaller
//! start position, so the table follows from the suffix array, the LCP array
//! and a previous/next-smaller-value pass.

use std::cmp::Ordering;

fn suffix_array(s: &[u8]) -> Vec<usize> {
    let n = s.len();
    let mut sa: Vec<usize> = (0..n).collect();
    let mut rank: Vec<usize> = s.iter().map(|&c| c as usize).collect();
    let mut next = vec![0usize; n];
    let mut k = 1;
    loop {
        // key of suffix i at this round: (rank[i], rank[i + k] + 1 or 0)
        let key = |i: usize, rank: &[usize]| (rank[i], if i + k < n { rank[i + k] + 1 } else { 0 });
        sa.sort_unstable_by_key(|&i| key(i, &rank));
        next[sa[0]] = 0;
        for r in 1..n {
            let bump = usize::from(key(sa[r - 1], &rank) != key(sa[r], &rank));
            next[sa[r]] = next[sa[r - 1]] + bump;
        }
        std::mem::swap(&mut rank, &mut next);
        if rank[sa[n - 1]] == n - 1 || k >= n {
            break;
        }
        k *= 2;
    }
    sa
}

/// Kasai et al.: `lcp[r]` = lcp of the suffixes of rank `r - 1` and `r`;
/// `lcp[0] = 0`.
fn lcp_array(s: &[u8], sa: &[usize]) -> Vec<usize> {
    let n = s.len();
    let mut rank = vec![0usize; n];
    for (r, &i) in sa.iter().enumerate() {
        rank[i] = r;
    }
    let mut lcp = vec![0usize; n];
    let mut h = 0usize;
    for i in 0..n {
        if rank[i] == 0 {
            h = 0;
            continue;
        }
        let j = sa[rank[i] - 1];
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[rank[i]] = h;
        h = h.saturating_sub(1);
    }
    lcp
}

struct RangeMin {
    levels: Vec<Vec<usize>>,
}

impl RangeMin {
    fn new(values: &[usize]) -> Self {
        let mut levels = vec![values.to_vec()];
        let mut width = 1;
        while 2 * width <= values.len() {
            let prev = levels.last().unwrap();
            let level = (0..=values.len() - 2 * width)
                .map(|i| prev[i].min(prev[i + width]))
                .collect();
            levels.push(level);
            width *= 2;
        }
        RangeMin { levels }
    }

    /// Minimum over `lo..=hi`.
    fn query(&self, lo: usize, hi: usize) -> usize {
        let span = hi - lo + 1;
        let lvl = (usize::BITS - 1 - span.leading_zeros()) as usize;
        let table = &self.levels[lvl];
        table[lo].min(table[hi + 1 - (1 << lvl)])
    }
}

pub(crate) fn longest_previous_factor(s: &[u8]) -> Vec<usize> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    let sa = suffix_array(s);
    let lcp = lcp_array(s, &sa);
    let rmq = RangeMin::new(&lcp);
    // lcp between the suffixes of ranks a < b
    let lcp_between = |a: usize, b: usize| rmq.query(a + 1, b);

    let mut prev_smaller = vec![None; n];
    let mut next_smaller = vec![None; n];
    let mut stack: Vec<usize> = Vec::new();
    for r in 0..n {
        while let Some(&top) = stack.last() {
            match sa[top].cmp(&sa[r]) {
                Ordering::Greater => {
                    next_smaller[top] = Some(r);
                    stack.pop();
                }
                _ => break,
            }
        }
        prev_smaller[r] = stack.last().copied();
        stack.push(r);
    }

    let mut lpf = vec![0usize; n];
    for r in 0..n {
        let left = prev_smaller[r].map_or(0, |p| lcp_between(p, r));
        let right = next_smaller[r].map_or(0, |q| lcp_between(r, q));
        lpf[sa[r]] = left.max(right);
    }
    lpf
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lpf_naive(s: &[u8]) -> Vec<usize> {
        (0..s.len())
            .map(|i| {
                (0..i)
                    .map(|j| {
                        s[i..]
                            .iter()
                            .zip(&s[j..])
                            .take_while(|(a, b)| a == b)
                            .count()
                    })
                    .max()
                    .unwrap_or(0)
            })
            .collect()
    }

    #[test]
    fn suffix_array_small() {
        // banana -> a, ana, anana, banana, na, nana
        assert_eq!(suffix_array(b"banana"), vec![5, 3, 1, 0, 4, 2]);
        assert_eq!(
            lcp_array(b"banana", &[5, 3, 1, 0, 4, 2]),
            vec![0, 1, 3, 0, 0, 2]
        );
    }

    #[test]
    fn lpf_matches_quadratic_scan() {
        let words: [&[u8]; 6] = [
            b"abaababaabaab",
            b"0000000",
            b"0",
            b"0101001",
            b"abcabcabcd",
            &[0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0],
        ];
        for w in words {
            assert_eq!(longest_previous_factor(w), lpf_naive(w), "{w:?}");
        }
        assert!(longest_previous_factor(&[]).is_empty());
    }

    #[test]
    fn lpf_exhaustive_small_binary() {
        for len in 1..=10usize {
            for bits in 0u32..(1 << len) {
                let w: Vec<u8> = (0..len).map(|i| ((bits >> i) & 1) as u8).collect();
                assert_eq!(longest_previous_factor(&w), lpf_naive(&w), "{w:?}");
            }
        }
    }
}
