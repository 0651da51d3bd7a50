//! Combinatorics on the Fibonacci infinite word.
//!
//! The crate is organised in layers:
//!
//! * [`numeration`]: Fibonacci numbers and Zeckendorf representations.
//! * [`words`]: binary words, the Fibonacci word and its relatives
//!   (central, co-Fibonacci, singular and Christoffel words), lattice paths.
//! * [`factorize`]: generic Lempel-Ziv, Lyndon (Duval) and Crochemore
//!   factorizations of arbitrary words.
//! * [`identities`]: a catalog of sixteen factorizations of the Fibonacci
//!   word, checked against prefixes of the word itself.
//! * [`sturmian`]: standard sequences and standard Sturmian words built from
//!   continued-fraction directives.

pub mod error;
pub mod factorize;
pub mod identities;
pub mod numeration;
pub mod sturmian;
pub mod words;

pub use error::{Error, Result};
pub use words::{Word, WordStream};
