//! Replays the fuzz corpus through the parsers with the fuzz targets' checks.

use std::fs;
use std::path::PathBuf;

use cfhankel::algebra::{Poly, Rational};
use cfhankel::cf::Chain;
use cfhankel::guess::GuessResult;
use cfhankel::range::parse_range;

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let p = e.unwrap().path();
            (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read_to_string(&p).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

/// Parses every seed; returns how many were accepted.
fn replay<T>(target: &str, parse: impl Fn(&str) -> Option<T>, check: impl Fn(&T)) -> usize {
    let mut ok = 0;
    for (_, text) in seeds(target) {
        if let Some(v) = parse(&text) {
            check(&v);
            ok += 1;
        }
    }
    ok
}

#[test]
fn rational_seeds() {
    let n = replay("rational", |s| s.parse::<Rational>().ok(), |q| assert_eq!(&q.to_string().parse::<Rational>().unwrap(), q));
    assert_eq!(n, 6);
}

#[test]
fn poly_seeds() {
    let n = replay(
        "poly_json",
        |s| Poly::<Rational>::from_json(s).ok(),
        |p| assert_eq!(&Poly::<Rational>::from_json(&p.to_json()).unwrap(), p),
    );
    assert_eq!(n, 4);
}

#[test]
fn chain_seeds() {
    let n = replay(
        "chain_json",
        |s| Chain::from_json(s).ok(),
        |c| {
            let text = c.to_json(true);
            assert_eq!(Chain::from_json(&text).unwrap().to_json(true), text);
        },
    );
    assert_eq!(n, 3);
}

#[test]
fn guess_seeds() {
    let n = replay(
        "guess_json",
        |s| GuessResult::from_json(s).ok(),
        |g| assert_eq!(&GuessResult::from_json(&g.to_json()).unwrap(), g),
    );
    assert_eq!(n, 3);
}

#[test]
fn range_seeds() {
    let n = replay("range", |s| parse_range(s).ok(), |r| assert_eq!(parse_range(&r.to_string()).unwrap(), *r));
    assert_eq!(n, 3);
}
