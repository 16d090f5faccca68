//! The gadget-based realizer against the brute-force rotation oracle, on
//! every valid code up to six crossings.

mod common;

use bridgekit::{is_realizable, parse_dt};
use common::{all_codes, oracle_realizable};

fn sweep(n: usize) -> (usize, usize) {
    let codes = all_codes(n);
    let mut realizable = 0;
    for code in &codes {
        let oracle = oracle_realizable(code);
        let lib = is_realizable(code);
        assert_eq!(oracle, lib, "oracle and realizer disagree on {code}");
        realizable += usize::from(lib);
    }
    (realizable, codes.len())
}

#[test]
fn all_one_and_two_crossing_codes_realize() {
    assert_eq!(sweep(1), (2, 2));
    assert_eq!(sweep(2), (8, 8));
}

#[test]
fn all_three_crossing_codes_realize() {
    assert_eq!(sweep(3), (48, 48));
}

#[test]
fn all_four_crossing_codes_realize() {
    assert_eq!(sweep(4), (384, 384));
}

#[test]
fn five_crossing_sweep() {
    assert_eq!(sweep(5), (3616, 3840));
}

#[test]
fn six_crossing_sweep() {
    assert_eq!(sweep(6), (37888, 46080));
}

#[test]
fn least_nonrealizable_five_crossing_code() {
    let least = all_codes(5)
        .into_iter()
        .filter(|c| !is_realizable(c))
        .min_by(|a, b| a.values().cmp(b.values()))
        .unwrap();
    assert_eq!(least, parse_dt("-8 -10 -2 -4 -6").unwrap());

    let positive = parse_dt("8 10 2 4 6").unwrap();
    assert!(!oracle_realizable(&positive));
    assert!(!is_realizable(&positive));
}

#[test]
fn oracle_accepts_named_knots() {
    for text in ["4 6 2", "4 6 8 2", "2", "2 4", "4 6 2 10 12 8"] {
        let code = parse_dt(text).unwrap();
        assert!(oracle_realizable(&code), "{text}");
        assert!(is_realizable(&code), "{text}");
    }
}
