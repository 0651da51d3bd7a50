use crate::error::Result;
use crate::numeration::fib_usize;

use super::{christoffel_lower, christoffel_upper, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathKind {
    Lower,
    Upper,
}

/// Monotone lattice path from the origin; `0` is a step right, `1` a step up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePath {
    points: Vec<(u64, u64)>,
}

impl LatticePath {
    pub fn from_word(word: &Word) -> Self {
        let mut points = Vec::with_capacity(word.len() + 1);
        let (mut x, mut y) = (0u64, 0u64);
        points.push((x, y));
        for &s in word.iter() {
            if s == 0 {
                x += 1;
            } else {
                y += 1;
            }
            points.push((x, y));
        }
        LatticePath { points }
    }

    pub fn points(&self) -> &[(u64, u64)] {
        &self.points
    }

    pub fn steps(&self) -> usize {
        self.points.len() - 1
    }

    pub fn end(&self) -> (u64, u64) {
        *self.points.last().unwrap()
    }

    /// The word spelled by the path.
    pub fn word(&self) -> Word {
        Word::from_raw(
            self.points
                .windows(2)
                .map(|p| u8::from(p[1].1 > p[0].1))
                .collect(),
        )
    }

    /// True iff every vertex lies weakly below the segment from the origin to
    /// the end point.
    pub fn weakly_below_chord(&self) -> bool {
        let (w, h) = self.end();
        self.points.iter().all(|&(x, y)| y * w <= x * h)
    }

    pub fn weakly_above_chord(&self) -> bool {
        let (w, h) = self.end();
        self.points.iter().all(|&(x, y)| y * w >= x * h)
    }
}

/// Path of the lower or upper Christoffel word of index `n`; it ends at
/// `(F_{n-1}, F_{n-2})`.
pub fn christoffel_path(n: usize, kind: PathKind) -> Result<LatticePath> {
    let word = match kind {
        PathKind::Lower => christoffel_lower(n)?,
        PathKind::Upper => christoffel_upper(n)?,
    };
    let path = LatticePath::from_word(&word);
    debug_assert_eq!(
        path.end(),
        (fib_usize(n - 1) as u64, fib_usize(n - 2) as u64)
    );
    Ok(path)
}
