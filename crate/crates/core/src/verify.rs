//! Built-in suite of worked examples with known answers.

use std::fmt::Debug;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{
    blowup_ring, dual_family_ideal, med_family_ideal, pf_family_ideal, sup_search, DEFAULT_ENUMERATION_CAP,
};
use crate::error::{Error, Result};
use crate::exactalg::FieldSpec;
use crate::relideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;
use crate::serieside::{parse_generator_list, FractionalIdeal};
use crate::typecalc::{
    classify, cokernel_formula, idealization_type, is_trace, is_ulrich_ideal, is_ulrich_module_wrt_m,
    module_type, quotient_type, IdealOps, IdealReport,
};

/// Result of one case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub group: &'static str,
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub filter: String,
    pub total: usize,
    pub failures: usize,
    pub cases: Vec<CaseResult>,
}

impl SuiteResult {
    pub fn all_passed(&self) -> bool {
        self.failures == 0
    }
}

type Check = Box<dyn Fn() -> Result<(String, String)> + Send + Sync>;

struct Case {
    group: &'static str,
    name: String,
    check: Check,
}

pub const GROUPS: &[&str] = &[
    "closing-example",
    "remark-4-5-6",
    "trace-4-5-6",
    "ulrich-3-7",
    "ulrich-6-13-28",
    "canonical-9-10-11-12-15",
    "maximal-ideal",
    "blowup",
    "pf-family",
];

/// Semigroups used by the `maximal-ideal` group.
pub const MAXIMAL_IDEAL_SEMIGROUPS: &[&[i64]] = &[
    &[2, 3],
    &[3, 4, 5],
    &[3, 5],
    &[3, 7],
    &[4, 5, 6],
    &[4, 5, 6, 7],
    &[4, 6, 9],
    &[5, 6, 7, 8, 9],
    &[5, 7, 9],
    &[6, 13, 28],
    &[7, 9, 11, 13],
    &[9, 10, 11, 12, 15],
];

fn pair<T: Debug + PartialEq>(expected: T, computed: T) -> Result<(String, String)> {
    Ok((format!("{expected:?}"), format!("{computed:?}")))
}

fn h(gens: &[i64]) -> Result<Arc<NumericalSemigroup>> {
    NumericalSemigroup::shared(gens)
}

fn mono(gens: &[i64], exps: &[i64]) -> Result<RelativeIdeal> {
    RelativeIdeal::from_exponents(h(gens)?, exps)
}

fn series(gens: &[i64], field: FieldSpec, text: &str) -> Result<FractionalIdeal> {
    let g = parse_generator_list(text, field)?;
    FractionalIdeal::from_generators(h(gens)?, field, &g, 0)
}

fn case(group: &'static str, name: impl Into<String>, check: impl Fn() -> Result<(String, String)> + Send + Sync + 'static) -> Case {
    Case {
        group,
        name: name.into(),
        check: Box::new(check),
    }
}

/// Trace ideal with `r(R⋉I) = 2 + r(R/I)`.
fn trace_values<I: IdealOps>(i: &I) -> Result<(bool, usize, usize)> {
    let rq = quotient_type(i)?;
    Ok((is_trace(i)?, idealization_type(i)?.value, 2 + rq))
}

fn ulrich_values(rep: &IdealReport) -> (bool, usize, Option<usize>, usize) {
    (rep.ulrich_ideal, rep.mu, rep.quotient_type, rep.r_idealization)
}

fn catalog() -> Vec<Case> {
    let mut cases = Vec::new();

    // ⟨3,4,5⟩: the ring, (t³,t⁴), (t³,t⁵) and m.
    cases.push(case("closing-example", "r(R) for <3,4,5>", || pair(2, h(&[3, 4, 5])?.cm_type())));
    cases.push(case("closing-example", "I = (t^3, t^4): r(R⋉I), r_R(I), closed", || {
        let i = mono(&[3, 4, 5], &[3, 4])?;
        let rep = classify(&i)?;
        pair((1, 1, true), (rep.r_idealization, rep.module_type, rep.closed))
    }));
    cases.push(case("closing-example", "J = (t^3, t^5): r(R⋉J), r_R(J)", || {
        let j = mono(&[3, 4, 5], &[3, 5])?;
        pair((3, 2), (idealization_type(&j)?.value, module_type(&j)?))
    }));
    cases.push(case("closing-example", "m: r_R(m), r(R⋉m)", || {
        let m = RelativeIdeal::maximal_ideal(h(&[3, 4, 5])?);
        pair((3, 5), (module_type(&m)?, idealization_type(&m)?.value))
    }));

    cases.push(case("remark-4-5-6", "I = (t^8, t^9): r(R/I), r_R(I), r(R⋉I)", || {
        let i = mono(&[4, 5, 6], &[8, 9])?;
        pair((2, 2, 3), (quotient_type(&i)?, module_type(&i)?, idealization_type(&i)?.value))
    }));

    for exps in [&[8, 9, 10, 11][..], &[6, 8, 9], &[5, 6, 8], &[4, 5, 6], &[4, 6]] {
        let name = format!("{} is trace, r(R⋉I) = 2 + r(R/I)", mono(&[4, 5, 6], exps).map(|i| i.to_string()).unwrap_or_default());
        cases.push(case("trace-4-5-6", name, move || {
            let (trace, r, predicted) = trace_values(&mono(&[4, 5, 6], exps)?)?;
            pair((true, predicted), (trace, r))
        }));
    }
    let f5 = FieldSpec::Prime(5);
    for a in 1..5 {
        cases.push(case("trace-4-5-6", format!("I_{a} = (t^4 - {a}*t^5, t^6) over fp:5 is trace, r(R⋉I) = 2 + r(R/I)"), move || {
            let (trace, r, predicted) = trace_values(&series(&[4, 5, 6], f5, &format!("t^4 - {a}*t^5, t^6"))?)?;
            pair((true, predicted), (trace, r))
        }));
    }
    cases.push(case("trace-4-5-6", "I_a = I_b over fp:5 only when a = b", move || {
        let ideals = (0..5)
            .map(|a| series(&[4, 5, 6], f5, &format!("t^4 - {a}*t^5, t^6")))
            .collect::<Result<Vec<_>>>()?;
        let coincidences = (0..5)
            .flat_map(|a| (0..5).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && ideals[a] == ideals[b])
            .count();
        pair(0, coincidences)
    }));

    for a in 1..5 {
        cases.push(case("ulrich-3-7", format!("(t^6 - {a}*t^7, t^10) over fp:5 is Ulrich, r(R⋉I) = 3"), move || {
            let rep = classify(&series(&[3, 7], f5, &format!("t^6 - {a}*t^7, t^10"))?)?;
            pair((true, 3, true), (rep.ulrich_ideal, rep.r_idealization, rep.all_passed()))
        }));
    }
    cases.push(case("ulrich-3-7", "(t^6, t^10) is not Ulrich", || {
        let i = mono(&[3, 7], &[6, 10])?;
        pair(false, is_ulrich_ideal(&i)?.is_ulrich)
    }));

    let f3 = FieldSpec::Prime(3);
    let conductor_gens = "t^24, t^26, t^28";
    let mut families: Vec<String> = Vec::new();
    for a in 0..3 {
        families.push(format!("t^6 + {a}*t^13, {conductor_gens}"));
        families.push(format!("t^18 + {a}*t^25, {conductor_gens}"));
        for b in 0..3 {
            families.push(format!("t^12 + {a}*t^13 + {b}*t^19, {conductor_gens}"));
        }
    }
    for gens in families {
        cases.push(case("ulrich-6-13-28", format!("({gens}) over fp:3 is Ulrich, μ = 3, r(R/I) = 1, r(R⋉I) = 5"), move || {
            let rep = classify(&series(&[6, 13, 28], f3, &gens)?)?;
            pair((true, 3, Some(1), 5), ulrich_values(&rep))
        }));
    }

    cases.push(case("canonical-9-10-11-12-15", "μ(K) = 4", || {
        pair(4, h(&[9, 10, 11, 12, 15])?.canonical_relative_ideal().mu())
    }));
    cases.push(case("canonical-9-10-11-12-15", "I = R + Rt: μ(I), (K:I)·I = K, residually faithful, r(R⋉I) = r_R(I)", || {
        let hs = h(&[9, 10, 11, 12, 15])?;
        let i = RelativeIdeal::from_exponents(hs.clone(), &[0, 1])?;
        let k = hs.canonical_relative_ideal();
        let image = k.colon(&i)?.product(&i)?;
        let rep = classify(&i)?;
        pair(
            (2, true, true, rep.module_type, 0),
            (rep.mu, image == k, rep.residually_faithful, rep.r_idealization, cokernel_formula(&i)?.correction),
        )
    }));

    for gens in MAXIMAL_IDEAL_SEMIGROUPS {
        cases.push(case("maximal-ideal", format!("<{}>: r_R(m) = r + 1, r(R⋉m) = 2r + 1", join(gens)), move || {
            let hs = h(gens)?;
            let m = RelativeIdeal::maximal_ideal(hs.clone());
            let r = hs.cm_type();
            pair((r + 1, 2 * r + 1), (module_type(&m)?, idealization_type(&m)?.value))
        }));
    }

    for gens in [&[3, 4, 5][..], &[3, 7], &[4, 5, 6], &[6, 13, 28]] {
        cases.push(case("blowup", format!("<{}>: μ(A) = e, A Ulrich w.r.t. m, r(R⋉A) = r + e", join(gens)), move || {
            let hs = h(gens)?;
            let a = blowup_ring(&hs)?;
            let e = hs.multiplicity() as usize;
            pair((e, true, hs.cm_type() + e), (a.mu(), is_ulrich_module_wrt_m(&a)?, idealization_type(&a)?.value))
        }));
        cases.push(case("blowup", format!("<{}>: sup-search with bound c + e gives r + e", join(gens)), move || {
            let hs = h(gens)?;
            let s = sup_search(&hs, hs.conductor() + hs.multiplicity(), DEFAULT_ENUMERATION_CAP)?;
            pair(hs.cm_type() + hs.multiplicity() as usize, s.value)
        }));
    }
    cases.push(case("blowup", "<1>: sup-search gives 1", || pair(1, sup_search(&h(&[1])?, 1, DEFAULT_ENUMERATION_CAP)?.value)));

    for gens in [&[3, 4, 5][..], &[5, 6, 7, 8, 9]] {
        let r = NumericalSemigroup::new(gens).map(|s| s.cm_type()).unwrap_or(0);
        for p in 1..=r {
            cases.push(case("pf-family", format!("<{}>, p = {p}: r(R⋉I) = (r − p + 1) + r_R(I)", join(gens)), move || {
                let hs = h(gens)?;
                let i = pf_family_ideal(&hs, p)?;
                pair((r - p + 1) + module_type(&i)?, idealization_type(&i)?.value)
            }));
            cases.push(case("pf-family", format!("<{}>, p = {p}: dual family r(R⋉I^∨) = 2r − 2p + 3 = (r − p + 1) + μ(I)", join(gens)), move || {
                let hs = h(gens)?;
                let i = pf_family_ideal(&hs, p)?;
                let v = idealization_type(&dual_family_ideal(&hs, p)?)?.value;
                pair((2 * r + 3 - 2 * p, (r - p + 1) + i.mu()), (v, v))
            }));
        }
        let l = gens.len();
        for p in 2..=l {
            cases.push(case("pf-family", format!("<{}>, MED p = {p}: r_R(I_p), r(R⋉I_p)", join(gens)), move || {
                let hs = h(gens)?;
                let i = med_family_ideal(&hs, p)?;
                let rr = if p == 2 { l } else { l - 1 };
                pair((rr, (l - p + 1) + rr), (module_type(&i)?, idealization_type(&i)?.value))
            }));
        }
    }

    cases
}

fn join(gens: &[i64]) -> String {
    gens.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

/// Runs every case whose group equals `filter` (all cases for `"all"`).
pub fn verify_paper(filter: &str) -> Result<SuiteResult> {
    if filter != "all" && !GROUPS.contains(&filter) {
        return Err(Error::Argument(format!("unknown filter `{filter}`; expected all or one of {}", GROUPS.join(", "))));
    }
    let cases: Vec<Case> = catalog().into_iter().filter(|c| filter == "all" || c.group == filter).collect();
    let results: Vec<CaseResult> = cases
        .par_iter()
        .map(|c| {
            let (expected, computed, passed) = match (c.check)() {
                Ok((exp, got)) => {
                    let ok = exp == got;
                    (exp, got, ok)
                }
                Err(e) => ("no error".to_string(), format!("error: {e}"), false),
            };
            CaseResult {
                group: c.group,
                name: c.name.clone(),
                expected,
                computed,
                passed,
            }
        })
        .collect();
    let failures = results.iter().filter(|r| !r.passed).count();
    Ok(SuiteResult {
        filter: filter.to_string(),
        total: results.len(),
        failures,
        cases: results,
    })
}
