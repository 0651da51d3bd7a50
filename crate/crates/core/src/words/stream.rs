use super::Word;

/// Pull-based, unbounded source of binary symbols.
///
/// A stream is a single-consumer cursor: every call advances it. On a freshly
/// constructed stream `take(k)` therefore returns the length-`k` prefix of the
/// infinite word.
pub trait WordStream {
    fn next_symbol(&mut self) -> u8;

    /// The next `k` symbols as a word.
    fn take(&mut self, k: usize) -> Word {
        Word::from_raw((0..k).map(|_| self.next_symbol()).collect())
    }

    /// Borrowing iterator over the remaining (infinite) symbols.
    fn symbols(&mut self) -> impl Iterator<Item = u8> + '_
    where
        Self: Sized,
    {
        std::iter::from_fn(move || Some(self.next_symbol()))
    }
}

impl<S: WordStream + ?Sized> WordStream for Box<S> {
    fn next_symbol(&mut self) -> u8 {
        (**self).next_symbol()
    }

    fn take(&mut self, k: usize) -> Word {
        (**self).take(k)
    }
}

/// The Fibonacci infinite word, produced by iterating `f_{n+1} = f_n f_{n-1}`
/// in place: `f_{n-1}` is a prefix of `f_n`, so each step appends a prefix of
/// the buffer to itself.
#[derive(Debug, Clone)]
pub struct FibonacciStream {
    buf: Vec<u8>,
    // |f_{n-1}| when buf holds f_n
    prev_len: usize,
    pos: usize,
}

impl FibonacciStream {
    fn new() -> Self {
        // f_3 = 01, f_2 = 0
        FibonacciStream {
            buf: vec![0, 1],
            prev_len: 1,
            pos: 0,
        }
    }

    fn grow_to(&mut self, len: usize) {
        while self.buf.len() < len {
            let cur = self.buf.len();
            self.buf.extend_from_within(..self.prev_len);
            self.prev_len = cur;
        }
    }
}

impl WordStream for FibonacciStream {
    fn next_symbol(&mut self) -> u8 {
        self.grow_to(self.pos + 1);
        self.pos += 1;
        self.buf[self.pos - 1]
    }

    fn take(&mut self, k: usize) -> Word {
        self.grow_to(self.pos + k);
        let out = self.buf[self.pos..self.pos + k].to_vec();
        self.pos += k;
        Word::from_raw(out)
    }
}

pub fn fibonacci_stream() -> FibonacciStream {
    FibonacciStream::new()
}

/// The length-`k` prefix of the Fibonacci infinite word.
pub fn fibonacci_prefix(k: usize) -> Word {
    fibonacci_stream().take(k)
}
