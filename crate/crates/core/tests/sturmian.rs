use fibword::sturmian::{
    slope, slope_with_bound, standard_sequence, sturmian_prefix, sturmian_stream, Directives,
};
use fibword::words::{fibonacci_prefix, WordStream};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use proptest::prelude::*;

fn dirs_strategy() -> impl Strategy<Value = Directives> {
    proptest::collection::vec(1u64..5, 1..6).prop_map(|v| Directives::new(v, true).unwrap())
}

#[test]
fn all_ones_stream_is_fibonacci() {
    let mut stream = sturmian_stream(&Directives::all_ones()).unwrap();
    assert_eq!(stream.take(50_000), fibonacci_prefix(50_000));
}

/// (3 - sqrt 5) / 2 lies between consecutive convergents.
#[test]
fn all_ones_slope_brackets_the_golden_value() {
    let dirs = Directives::all_ones();
    // 5 < (3 - 2x)^2 with x = p/q  iff  5 q^2 < (3q - 2p)^2 (for 3q > 2p)
    let above_limit = |r: &BigRational| {
        let (p, q) = (r.numer(), r.denom());
        let lhs = BigInt::from(5) * q * q;
        let t: BigInt = BigInt::from(3) * q - BigInt::from(2) * p;
        t.clone() * t < lhs
    };
    let mut prev: Option<BigRational> = None;
    for depth in 1..60 {
        let (r, bound) = slope_with_bound(&dirs, depth).unwrap();
        assert_eq!(above_limit(&r), depth % 2 == 1, "depth {depth}");
        if let Some(p) = prev {
            let gap: BigRational = (r.clone() - p).abs();
            assert!(gap <= bound.clone() * BigRational::from_integer(BigInt::from(4)));
        }
        prev = Some(r);
    }
}

proptest! {
    #[test]
    fn standard_sequence_lengths(dirs in dirs_strategy()) {
        for n in 3..12 {
            let s = standard_sequence(&dirs, n).unwrap();
            let a = standard_sequence(&dirs, n - 1).unwrap();
            let b = standard_sequence(&dirs, n - 2).unwrap();
            let d = dirs.get(n - 2).unwrap() as usize;
            prop_assert_eq!(s.len(), d * a.len() + b.len());
            prop_assert_eq!(s, a.pow(d).concat(&b));
        }
    }

    #[test]
    fn levels_are_prefixes_of_the_limit(dirs in dirs_strategy()) {
        let limit = sturmian_prefix(&dirs, 20_000).unwrap();
        for n in 3..14 {
            let s = standard_sequence(&dirs, n).unwrap();
            if s.len() > limit.len() { break; }
            prop_assert!(s.is_prefix_of(&limit));
        }
    }

    #[test]
    fn letter_frequency_tracks_slope(dirs in dirs_strategy()) {
        let w = sturmian_prefix(&dirs, 5000).unwrap();
        let ones = w.iter().filter(|&&b| b == 1).count() as i64;
        let r = slope(&dirs, 30).unwrap();
        // balanced words: |ones - k * slope| <= 1
        let diff = BigRational::from_integer(BigInt::from(ones))
            - r * BigRational::from_integer(BigInt::from(5000));
        prop_assert!(diff.abs() <= BigRational::one() + BigRational::one());
    }
}

#[test]
fn finite_directives_run_out() {
    let dirs: Directives = "2,1".parse().unwrap();
    assert!(standard_sequence(&dirs, 4).is_ok());
    assert!(standard_sequence(&dirs, 5).is_err());
    assert!(sturmian_stream(&dirs).is_err());
    assert!(sturmian_stream(&dirs.cycled()).is_ok());
}
