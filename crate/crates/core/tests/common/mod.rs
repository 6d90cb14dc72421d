#![allow(dead_code)]

use std::sync::Arc;

use idealiz::{FieldSpec, FractionalIdeal, NumericalSemigroup, RelativeIdeal, TruncatedSeries};
use num_integer::Integer;
use rand::Rng;

pub fn h(gens: &[i64]) -> Arc<NumericalSemigroup> {
    NumericalSemigroup::shared(gens).unwrap()
}

/// A random numerical semigroup with 2 to `max_gens` generators in
/// `[2, max_value]`.
pub fn random_semigroup(rng: &mut impl Rng, max_value: i64, max_gens: usize) -> Arc<NumericalSemigroup> {
    loop {
        let n = rng.gen_range(2..=max_gens);
        let gens: Vec<i64> = (0..n).map(|_| rng.gen_range(2..=max_value)).collect();
        if gens.iter().fold(0, |g, &x| g.gcd(&x)) == 1 {
            return NumericalSemigroup::shared(&gens).unwrap();
        }
    }
}

/// A random monomial fractional ideal with 1 to 3 generators near `[0, c + e]`.
pub fn random_monomial_ideal(rng: &mut impl Rng, hs: &Arc<NumericalSemigroup>) -> RelativeIdeal {
    let top = hs.conductor() + hs.multiplicity();
    let n = rng.gen_range(1..=3);
    let exps: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=top)).collect();
    RelativeIdeal::from_exponents(hs.clone(), &exps).unwrap()
}

/// A random polynomial with 1 to `terms` terms with exponents in `[lo, hi]`.
pub fn random_polynomial(rng: &mut impl Rng, field: FieldSpec, lo: i64, hi: i64, terms: usize) -> TruncatedSeries {
    let p = match field {
        FieldSpec::Prime(p) => p as i64,
        FieldSpec::Rationals => 7,
    };
    loop {
        let mut x = TruncatedSeries::zero(field);
        for _ in 0..rng.gen_range(1..=terms) {
            let e = rng.gen_range(lo..=hi);
            let c = field.from_int(rng.gen_range(1..p));
            x = x.add(&TruncatedSeries::term(field, e, c)).unwrap();
        }
        if !x.is_zero() {
            return x;
        }
    }
}

/// A random series ideal with 1 to 3 polynomial generators of up to 3 terms.
pub fn random_series_ideal(rng: &mut impl Rng, hs: &Arc<NumericalSemigroup>, field: FieldSpec) -> FractionalIdeal {
    let top = hs.conductor() + hs.multiplicity();
    let n = rng.gen_range(1..=3);
    let gens: Vec<TruncatedSeries> = (0..n).map(|_| random_polynomial(rng, field, 0, top, 3)).collect();
    FractionalIdeal::from_generators(hs.clone(), field, &gens, 0).unwrap()
}

pub fn parse_ideal(hs: &Arc<NumericalSemigroup>, field: FieldSpec, text: &str) -> FractionalIdeal {
    let gens = idealiz::serieside::parse_generator_list(text, field).unwrap();
    FractionalIdeal::from_generators(hs.clone(), field, &gens, 0).unwrap()
}

/// Prints one line per criterion and fails the test if anything went wrong.
pub fn conclude(criterion: u32, title: &str, tolerance: &str, checks: usize, failures: &[String]) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {criterion}: {status} [{title}] {checks} checks, {} failures, tolerance: {tolerance}", failures.len());
    for f in failures {
        println!("  - {f}");
    }
    assert!(failures.is_empty(), "criterion {criterion} failed: {failures:#?}");
}

/// Records `what` as a failure unless `expected == computed`.
pub fn expect<T: PartialEq + std::fmt::Debug>(failures: &mut Vec<String>, checks: &mut usize, what: &str, expected: T, computed: T) {
    *checks += 1;
    if expected != computed {
        failures.push(format!("{what}: expected {expected:?}, computed {computed:?}"));
    }
}
