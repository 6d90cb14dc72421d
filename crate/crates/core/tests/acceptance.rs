//! Acceptance criteria 1-10. Each test prints one PASS/FAIL line.
//! Run with `cargo test -p idealiz-core --test acceptance -- --nocapture`.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use common::{conclude, expect, h, parse_ideal, random_monomial_ideal, random_semigroup, random_series_ideal};
use idealiz::constructions::{
    blowup_ring, dual_family_ideal, med_family_ideal, pf_family_ideal, sup_search, DEFAULT_ENUMERATION_CAP,
};
use idealiz::typecalc::{
    classify, cokernel_formula, idealization_type, is_closed, is_residually_faithful, is_trace, is_ulrich_ideal,
    is_ulrich_module_wrt_m, module_type, quotient_type, socle_formula, IdealOps,
};
use idealiz::{FieldSpec, FractionalIdeal, IdealReport, RelativeIdeal, TruncatedSeries};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EXACT: &str = "exact integer equality";

#[test]
fn criterion_01_types_over_3_4_5() {
    let hs = h(&[3, 4, 5]);
    let (mut f, mut n) = (Vec::new(), 0);
    expect(&mut f, &mut n, "r(R)", 2, hs.cm_type());
    let i = RelativeIdeal::from_exponents(hs.clone(), &[3, 4]).unwrap();
    let ri = classify(&i).unwrap();
    expect(&mut f, &mut n, "I = (t^3,t^4): r(R⋉I), r_R(I)", (1, 1), (ri.r_idealization, ri.module_type));
    expect(&mut f, &mut n, "I = (t^3,t^4) closed", true, ri.closed);
    let j = RelativeIdeal::from_exponents(hs.clone(), &[3, 5]).unwrap();
    let rj = classify(&j).unwrap();
    expect(&mut f, &mut n, "J = (t^3,t^5): r(R⋉J), r_R(J)", (3, 2), (rj.r_idealization, rj.module_type));
    let m = RelativeIdeal::maximal_ideal(hs.clone());
    let rm = classify(&m).unwrap();
    expect(&mut f, &mut n, "m: r_R(m), r(R⋉m)", (3, 5), (rm.module_type, rm.r_idealization));
    for rep in [&ri, &rj, &rm] {
        expect(&mut f, &mut n, &format!("verdicts for {}", rep.ideal), true, rep.all_passed());
    }
    conclude(1, "types over <3,4,5>", EXACT, n, &f);
}

#[test]
fn criterion_02_non_closed_ideal_of_4_5_6() {
    let i = RelativeIdeal::from_exponents(h(&[4, 5, 6]), &[8, 9]).unwrap();
    let (mut f, mut n) = (Vec::new(), 0);
    expect(&mut f, &mut n, "r(R/I)", 2, quotient_type(&i).unwrap());
    expect(&mut f, &mut n, "r_R(I)", 2, module_type(&i).unwrap());
    expect(&mut f, &mut n, "r(R⋉I)", 3, idealization_type(&i).unwrap().value);
    let series = FractionalIdeal::from_relative(&i, FieldSpec::Rationals);
    expect(&mut f, &mut n, "series engine r(R⋉I)", 3, idealization_type(&series).unwrap().value);
    conclude(2, "(t^8,t^9) over <4,5,6>", EXACT, n, &f);
}

fn trace_checks<I: IdealOps>(i: &I, f: &mut Vec<String>, n: &mut usize) {
    let r = i.ring();
    expect(f, n, &format!("R:I = I:I for {i}"), r.colon(i).unwrap(), i.colon(i).unwrap());
    expect(f, n, &format!("trace flag for {i}"), true, is_trace(i).unwrap());
    let rq = quotient_type(i).unwrap();
    expect(f, n, &format!("r(R⋉I) = 2 + r(R/I) for {i}"), 2 + rq, idealization_type(i).unwrap().value);
}

#[test]
fn criterion_03_trace_ideals_of_4_5_6() {
    let hs = h(&[4, 5, 6]);
    let (mut f, mut n) = (Vec::new(), 0);
    for exps in [&[8, 9, 10, 11][..], &[6, 8, 9], &[5, 6, 8], &[4, 5, 6], &[4, 6]] {
        trace_checks(&RelativeIdeal::from_exponents(hs.clone(), exps).unwrap(), &mut f, &mut n);
    }
    let f5 = FieldSpec::Prime(5);
    let family: Vec<FractionalIdeal> = (0..5)
        .map(|a| parse_ideal(&hs, f5, &format!("t^4 - {a}*t^5, t^6")))
        .collect();
    for i in &family[1..] {
        trace_checks(i, &mut f, &mut n);
    }
    let i0 = RelativeIdeal::from_exponents(hs.clone(), &[4, 6]).unwrap();
    expect(&mut f, &mut n, "I_0 agrees with (t^4, t^6)", FractionalIdeal::from_relative(&i0, f5), family[0].clone());
    for a in 0..5 {
        for b in 0..5 {
            if a != b {
                expect(&mut f, &mut n, &format!("I_{a} ≠ I_{b}"), false, family[a] == family[b]);
            }
        }
    }
    conclude(3, "trace ideals of <4,5,6>", EXACT, n, &f);
}

#[test]
fn criterion_04_ulrich_ideals() {
    let (mut f, mut n) = (Vec::new(), 0);
    let hs = h(&[3, 7]);
    let f5 = FieldSpec::Prime(5);
    for a in 1..5 {
        let i = parse_ideal(&hs, f5, &format!("t^6 - {a}*t^7, t^10"));
        let rep = classify(&i).unwrap();
        expect(&mut f, &mut n, &format!("a = {a}: Ulrich, r(R⋉I)"), (true, 3), (rep.ulrich_ideal, rep.r_idealization));
        expect(&mut f, &mut n, &format!("a = {a}: verdicts"), true, rep.all_passed());
    }
    let i = parse_ideal(&hs, f5, "t^6, t^10");
    expect(&mut f, &mut n, "(t^6, t^10) not Ulrich", false, is_ulrich_ideal(&i).unwrap().is_ulrich);

    let hs = h(&[6, 13, 28]);
    let f3 = FieldSpec::Prime(3);
    let c = "t^24, t^26, t^28";
    let mut reps = Vec::new();
    for a in 0..3 {
        reps.push(format!("t^6 + {a}*t^13, {c}"));
        reps.push(format!("t^18 + {a}*t^25, {c}"));
        for b in 0..3 {
            reps.push(format!("t^12 + {a}*t^13 + {b}*t^19, {c}"));
        }
    }
    for gens in &reps {
        let rep = classify(&parse_ideal(&hs, f3, gens)).unwrap();
        expect(
            &mut f,
            &mut n,
            &format!("({gens}): Ulrich, μ, r(R/I), r(R⋉I)"),
            (true, 3, Some(1), 5),
            (rep.ulrich_ideal, rep.mu, rep.quotient_type, rep.r_idealization),
        );
    }
    conclude(4, "Ulrich ideals over <3,7> (fp:5) and <6,13,28> (fp:3)", EXACT, n, &f);
}

#[test]
fn criterion_05_canonical_ideal_of_9_10_11_12_15() {
    let hs = h(&[9, 10, 11, 12, 15]);
    let (mut f, mut n) = (Vec::new(), 0);
    let k = hs.canonical_relative_ideal();
    expect(&mut f, &mut n, "μ(K)", 4, k.mu());
    expect(&mut f, &mut n, "K = R + Rt + Rt^3 + Rt^4", RelativeIdeal::from_exponents(hs.clone(), &[0, 1, 3, 4]).unwrap(), k.clone());
    let i = RelativeIdeal::from_exponents(hs.clone(), &[0, 1]).unwrap();
    expect(&mut f, &mut n, "μ(I)", 2, i.mu());
    expect(&mut f, &mut n, "(K:I)·I = K", k.clone(), k.colon(&i).unwrap().product(&i).unwrap());
    expect(&mut f, &mut n, "residually faithful", true, is_residually_faithful(&i).unwrap());
    expect(&mut f, &mut n, "r(R⋉I) = r_R(I)", module_type(&i).unwrap(), idealization_type(&i).unwrap().value);
    expect(&mut f, &mut n, "μ(C)", 0, cokernel_formula(&i).unwrap().correction);
    conclude(5, "R + Rt over <9,10,11,12,15>", EXACT, n, &f);
}

#[test]
fn criterion_06_maximal_ideal_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut f, mut n) = (Vec::new(), 0);
    let mut seen = BTreeSet::new();
    while seen.len() < 25 {
        let hs = random_semigroup(&mut rng, 30, 4);
        if hs.is_dvr() || !seen.insert(hs.generators().to_vec()) {
            continue;
        }
        let m = RelativeIdeal::maximal_ideal(hs.clone());
        let r = hs.cm_type();
        expect(&mut f, &mut n, &format!("{hs}: r_R(m)"), r + 1, module_type(&m).unwrap());
        expect(&mut f, &mut n, &format!("{hs}: r(R⋉m)"), 2 * r + 1, idealization_type(&m).unwrap().value);
    }
    conclude(6, "maximal ideal over 25 random semigroups (generators ≤ 30)", EXACT, n, &f);
}

#[test]
fn criterion_07_blowup_and_supremum() {
    let (mut f, mut n) = (Vec::new(), 0);
    for gens in [&[3, 4, 5][..], &[3, 7], &[4, 5, 6], &[6, 13, 28]] {
        let hs = h(gens);
        let e = hs.multiplicity() as usize;
        let a = blowup_ring(&hs).unwrap();
        expect(&mut f, &mut n, &format!("{hs}: μ(A)"), e, a.mu());
        expect(&mut f, &mut n, &format!("{hs}: A Ulrich w.r.t. m"), true, is_ulrich_module_wrt_m(&a).unwrap());
        expect(&mut f, &mut n, &format!("{hs}: r(R⋉A)"), hs.cm_type() + e, idealization_type(&a).unwrap().value);
        let s = sup_search(&hs, hs.conductor() + hs.multiplicity(), DEFAULT_ENUMERATION_CAP).unwrap();
        expect(&mut f, &mut n, &format!("{hs}: sup-search"), hs.cm_type() + e, s.value);
    }
    let s = sup_search(&h(&[1]), 1, DEFAULT_ENUMERATION_CAP).unwrap();
    expect(&mut f, &mut n, "<1>: sup-search", 1, s.value);
    conclude(7, "blow-up ring and supremum r(R) + e", EXACT, n, &f);
}

#[test]
fn criterion_08_families() {
    let (mut f, mut n) = (Vec::new(), 0);
    for gens in [&[3, 4, 5][..], &[5, 6, 7, 8, 9]] {
        let hs = h(gens);
        let r = hs.cm_type();
        for p in 1..=r {
            let i = pf_family_ideal(&hs, p).unwrap();
            let rr = module_type(&i).unwrap();
            expect(&mut f, &mut n, &format!("{hs}, p = {p}: r(R⋉I)"), (r - p + 1) + rr, idealization_type(&i).unwrap().value);
            let dual = dual_family_ideal(&hs, p).unwrap();
            let v = idealization_type(&dual).unwrap().value;
            expect(&mut f, &mut n, &format!("{hs}, p = {p}: r(R⋉I^∨)"), 2 * r + 3 - 2 * p, v);
            expect(&mut f, &mut n, &format!("{hs}, p = {p}: r(R⋉I^∨) = (r−p+1) + μ(I)"), (r - p + 1) + i.mu(), v);
        }
        let l = gens.len();
        for p in 2..=l {
            let i = med_family_ideal(&hs, p).unwrap();
            let rr = if p == 2 { l } else { l - 1 };
            expect(&mut f, &mut n, &format!("{hs}, MED p = {p}: r_R(I_p)"), rr, module_type(&i).unwrap());
            expect(&mut f, &mut n, &format!("{hs}, MED p = {p}: r(R⋉I_p)"), (l - p + 1) + rr, idealization_type(&i).unwrap().value);
        }
    }
    conclude(8, "pseudo-Frobenius, MED and dual families", EXACT, n, &f);
}

/// Properties (a)-(g) on one ideal; `report` is its classification.
fn property_checks<I: IdealOps>(i: &I, report: &IdealReport, rng: &mut impl Rng, f: &mut Vec<String>, n: &mut usize) {
    let hs = i.semigroup().clone();
    let label = report.ideal.clone();
    // (a)
    expect(f, n, &format!("(a) {label}"), report.socle_method.value, report.cokernel_method.value);
    // (b)
    let mut params = vec![hs.multiplicity(), hs.conductor() + hs.multiplicity()];
    params.extend(hs.generators().iter().copied());
    let extra = rng.gen_range(1..=hs.conductor() + 10);
    params.push(if hs.contains(extra) { extra } else { hs.conductor() + extra });
    for a in params {
        expect(f, n, &format!("(b) {label}, a = {a}"), report.r_idealization, socle_formula(i, a).unwrap().value);
    }
    // (c)
    let (rr, r, rh) = (report.module_type, report.r_idealization, hs.cm_type());
    expect(f, n, &format!("(c) {label}"), true, rr <= r && r <= rh + rr);
    // (e)
    let closed = is_closed(i).unwrap();
    expect(f, n, &format!("(e) {label}"), (closed, closed), (is_residually_faithful(i).unwrap(), r == rr));
    // (f)
    if hs.is_symmetric() && closed {
        expect(f, n, &format!("(f) {label}"), true, report.principal);
    }
    // (g)
    if hs.is_symmetric() && report.proper {
        let rq = report.quotient_type.unwrap();
        expect(f, n, &format!("(g) bounds {label}"), true, rq <= rr && rr <= 1 + rq);
        if report.mu > 1 {
            expect(f, n, &format!("(g) μ > 1 {label}"), 1 + rr, r);
        }
    }
}

#[test]
fn criterion_09_property_suites() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut f, mut n) = (Vec::new(), 0);
    let fields = [FieldSpec::Prime(2), FieldSpec::Prime(3), FieldSpec::Prime(5), FieldSpec::Prime(7)];
    for k in 0..200 {
        let hs = random_semigroup(&mut rng, 9, 3);
        let i = random_monomial_ideal(&mut rng, &hs);
        let rep = classify(&i).unwrap();
        property_checks(&i, &rep, &mut rng, &mut f, &mut n);
        // (d)
        let field = if k % 5 == 0 { FieldSpec::Rationals } else { fields[k % 4] };
        let s = FractionalIdeal::from_relative(&i, field);
        let srep = classify(&s).unwrap();
        expect(&mut f, &mut n, &format!("(d) {}", rep.ideal), true, rep.same_values(&srep));
    }
    for k in 0..50 {
        let hs = random_semigroup(&mut rng, 8, 3);
        let i = random_series_ideal(&mut rng, &hs, fields[k % 4]);
        let rep = classify(&i).unwrap();
        property_checks(&i, &rep, &mut rng, &mut f, &mut n);
        if i.is_monomial() {
            let mono = classify(&i.monomial_support()).unwrap();
            expect(&mut f, &mut n, &format!("(d) {}", rep.ideal), true, rep.same_values(&mono));
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    expect(&mut f, &mut n, "runtime under 60 s", true, elapsed < 60.0);
    conclude(9, &format!("200 monomial + 50 series random ideals in {elapsed:.1} s"), "zero violations", n, &f);
}

/// Brute-force membership of `E + F`, `E : F` and the minimal generators,
/// from the set definitions over a finite range.
mod set_oracle {
    use idealiz::RelativeIdeal;

    pub fn in_product(e: &RelativeIdeal, f: &RelativeIdeal, x: i64) -> bool {
        (e.delta()..=x - f.delta()).any(|a| e.contains(a) && f.contains(x - a))
    }

    pub fn in_colon(e: &RelativeIdeal, f: &RelativeIdeal, x: i64) -> bool {
        let c = e.semigroup().conductor();
        let hi = e.tail_start().max(f.tail_start()) - x + c + 1;
        (f.delta()..=hi.max(f.delta())).all(|b| !f.contains(b) || e.contains(x + b))
    }

    pub fn minimal_generators(e: &RelativeIdeal) -> Vec<i64> {
        let h = e.semigroup();
        (e.delta()..e.tail_start() + h.multiplicity())
            .filter(|&x| e.contains(x))
            .filter(|&x| !(1..=x - e.delta()).any(|s| h.contains(s) && e.contains(x - s)))
            .collect()
    }
}

/// All vectors of `F_p^w` as coefficient lists.
fn all_vectors(p: u32, w: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..w {
        out = out
            .into_iter()
            .flat_map(|v| (0..p as i64).map(move |c| [v.clone(), vec![c]].concat()))
            .collect();
    }
    out
}

#[test]
fn criterion_10_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let (mut f, mut n) = (Vec::new(), 0);
    for _ in 0..100 {
        let hs = random_semigroup(&mut rng, 11, 3);
        let e = random_monomial_ideal(&mut rng, &hs);
        let g = random_monomial_ideal(&mut rng, &hs);
        let c = hs.conductor().max(1);
        let prod = e.product(&g).unwrap();
        let colon = e.colon(&g).unwrap();
        let lo = prod.delta() - 1;
        for x in lo..lo + 2 * c {
            expect(&mut f, &mut n, &format!("{e}·{g} at {x}"), set_oracle::in_product(&e, &g, x), prod.contains(x));
        }
        let lo = colon.delta() - 1;
        for x in lo..lo + 2 * c {
            expect(&mut f, &mut n, &format!("{e}:{g} at {x}"), set_oracle::in_colon(&e, &g, x), colon.contains(x));
        }
        expect(&mut f, &mut n, &format!("generators of {e}"), set_oracle::minimal_generators(&e), e.minimal_generators());
    }

    let semigroups = [h(&[2, 3]), h(&[2, 5]), h(&[3, 4]), h(&[3, 4, 5]), h(&[3, 5]), h(&[4, 5, 6, 7])];
    let mut instances = 0;
    while instances < 40 {
        let hs = semigroups[rng.gen_range(0..semigroups.len())].clone();
        let field = if rng.gen_bool(0.5) { FieldSpec::Prime(2) } else { FieldSpec::Prime(3) };
        let p = match field {
            FieldSpec::Prime(p) => p,
            FieldSpec::Rationals => unreachable!(),
        };
        let i = random_series_ideal(&mut rng, &hs, field);
        let j = random_series_ideal(&mut rng, &hs, field);
        let lo = i.delta() - j.delta();
        let width = (i.gamma() - i.delta()) as usize;
        if width > 8 || p.pow(width as u32) > 7000 {
            continue;
        }
        instances += 1;
        let colon = i.colon(&j).unwrap();
        let mut members = 0u64;
        for v in all_vectors(p, width) {
            let mut x = TruncatedSeries::zero(field);
            for (k, &cf) in v.iter().enumerate() {
                x = x.add(&TruncatedSeries::term(field, lo + k as i64, field.from_int(cf))).unwrap();
            }
            let oracle = j
                .generators()
                .iter()
                .all(|y| i.contains_element(&x.mul(y).unwrap()).unwrap());
            members += u64::from(oracle);
            expect(&mut f, &mut n, &format!("{i} : {j} contains {x}"), oracle, colon.contains_element(&x).unwrap());
        }
        // Members of the window span a subspace of dimension dim(colon ∩ window).
        let dim = colon.dim_below(lo + width as i64) as u32;
        expect(&mut f, &mut n, &format!("{i} : {j} window size"), (p as u64).pow(dim), members);
        expect(&mut f, &mut n, &format!("{i} : {j} tail"), true, colon.gamma() <= lo + width as i64);
    }
    conclude(10, "set-definition and exhaustive-window oracles", "zero mismatches", n, &f);
}
