//! Cohen-Macaulay types and ideal classifications, generic over the two
//! ideal engines.
//!
//! `r(R⋉I)` is computed twice: through the socle of `R/(t^a)` meeting the
//! annihilator of `I/t^a I`, and through the number of generators of the
//! cokernel `K/((K:I)·I)`. The two must agree.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::FieldSpec;
use crate::relideal::RelativeIdeal;
use crate::semigroup::{NumericalSemigroup, SemigroupInvariants};
use crate::serieside::{FractionalIdeal, TruncatedSeries};

/// The operations the formulas need from an ideal engine.
pub trait IdealOps: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + Sized {
    type Element: Clone + PartialEq + fmt::Display;

    const ENGINE: &'static str;

    fn semigroup(&self) -> &Arc<NumericalSemigroup>;
    /// `R`, `m` and `K` in the same engine (and field) as `self`.
    fn ring(&self) -> Self;
    fn maximal_ideal(&self) -> Self;
    fn canonical(&self) -> Self;
    fn monomial(&self, a: i64) -> Self::Element;
    fn principal(&self, x: &Self::Element) -> Result<Self>;
    fn sum(&self, other: &Self) -> Result<Self>;
    fn product(&self, other: &Self) -> Result<Self>;
    fn colon(&self, other: &Self) -> Result<Self>;
    fn intersect(&self, other: &Self) -> Result<Self>;
    fn contains_ideal(&self, sub: &Self) -> Result<bool>;
    /// `ℓ(self / sub)`; requires `sub ⊆ self`.
    fn quotient_length(&self, sub: &Self) -> Result<usize>;
    fn mu(&self) -> usize;
    fn reduction_candidates(&self) -> Vec<Self::Element>;
}

/// A monomial `t^a`, the element type of the monomial engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub i64);

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "1"),
            1 => write!(f, "t"),
            a => write!(f, "t^{a}"),
        }
    }
}

impl IdealOps for RelativeIdeal {
    type Element = Monomial;

    const ENGINE: &'static str = "monomial";

    fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        RelativeIdeal::semigroup(self)
    }
    fn ring(&self) -> Self {
        RelativeIdeal::ring(self.semigroup().clone())
    }
    fn maximal_ideal(&self) -> Self {
        RelativeIdeal::maximal_ideal(self.semigroup().clone())
    }
    fn canonical(&self) -> Self {
        self.semigroup().canonical_relative_ideal()
    }
    fn monomial(&self, a: i64) -> Monomial {
        Monomial(a)
    }
    fn principal(&self, x: &Monomial) -> Result<Self> {
        RelativeIdeal::from_exponents(self.semigroup().clone(), &[x.0])
    }
    fn sum(&self, other: &Self) -> Result<Self> {
        RelativeIdeal::sum(self, other)
    }
    fn product(&self, other: &Self) -> Result<Self> {
        RelativeIdeal::product(self, other)
    }
    fn colon(&self, other: &Self) -> Result<Self> {
        RelativeIdeal::colon(self, other)
    }
    fn intersect(&self, other: &Self) -> Result<Self> {
        RelativeIdeal::intersect(self, other)
    }
    fn contains_ideal(&self, sub: &Self) -> Result<bool> {
        if self.semigroup() != sub.semigroup() {
            return Err(Error::SemigroupMismatch(self.semigroup().to_string(), sub.semigroup().to_string()));
        }
        Ok(sub.is_subset(self))
    }
    fn quotient_length(&self, sub: &Self) -> Result<usize> {
        RelativeIdeal::quotient_length(self, sub)
    }
    fn mu(&self) -> usize {
        RelativeIdeal::mu(self)
    }
    fn reduction_candidates(&self) -> Vec<Monomial> {
        vec![Monomial(self.delta())]
    }
}

impl IdealOps for FractionalIdeal {
    type Element = TruncatedSeries;

    const ENGINE: &'static str = "series";

    fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        FractionalIdeal::semigroup(self)
    }
    fn ring(&self) -> Self {
        FractionalIdeal::ring(self.semigroup().clone(), self.field())
    }
    fn maximal_ideal(&self) -> Self {
        FractionalIdeal::maximal_ideal(self.semigroup().clone(), self.field())
    }
    fn canonical(&self) -> Self {
        FractionalIdeal::canonical(self.semigroup().clone(), self.field())
    }
    fn monomial(&self, a: i64) -> TruncatedSeries {
        TruncatedSeries::monomial(self.field(), a)
    }
    fn principal(&self, x: &TruncatedSeries) -> Result<Self> {
        FractionalIdeal::principal(self, x)
    }
    fn sum(&self, other: &Self) -> Result<Self> {
        FractionalIdeal::sum(self, other)
    }
    fn product(&self, other: &Self) -> Result<Self> {
        FractionalIdeal::product(self, other)
    }
    fn colon(&self, other: &Self) -> Result<Self> {
        FractionalIdeal::colon(self, other)
    }
    fn intersect(&self, other: &Self) -> Result<Self> {
        FractionalIdeal::intersect(self, other)
    }
    fn contains_ideal(&self, sub: &Self) -> Result<bool> {
        FractionalIdeal::contains_ideal(self, sub)
    }
    fn quotient_length(&self, sub: &Self) -> Result<usize> {
        FractionalIdeal::quotient_length(self, sub)
    }
    fn mu(&self) -> usize {
        FractionalIdeal::mu(self)
    }
    fn reduction_candidates(&self) -> Vec<TruncatedSeries> {
        FractionalIdeal::reduction_candidates(self)
    }
}

/// Either engine, chosen at run time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyIdeal {
    Monomial(RelativeIdeal),
    Series(FractionalIdeal),
}

impl AnyIdeal {
    pub fn classify(&self) -> Result<IdealReport> {
        match self {
            AnyIdeal::Monomial(i) => classify(i),
            AnyIdeal::Series(i) => classify(i),
        }
    }

    pub fn engine(&self) -> &'static str {
        match self {
            AnyIdeal::Monomial(_) => RelativeIdeal::ENGINE,
            AnyIdeal::Series(_) => FractionalIdeal::ENGINE,
        }
    }

    /// The same ideal in the series engine over `field`.
    pub fn to_series(&self, field: FieldSpec) -> FractionalIdeal {
        match self {
            AnyIdeal::Monomial(i) => FractionalIdeal::from_relative(i, field),
            AnyIdeal::Series(i) => i.clone(),
        }
    }
}

impl fmt::Display for AnyIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyIdeal::Monomial(i) => i.fmt(f),
            AnyIdeal::Series(i) => i.fmt(f),
        }
    }
}

fn is_contained_in_ring<I: IdealOps>(i: &I) -> Result<bool> {
    i.ring().contains_ideal(i)
}

fn require_proper<I: IdealOps>(i: &I) -> Result<I> {
    let r = i.ring();
    if !r.contains_ideal(i)? {
        return Err(Error::Containment(format!("{i} is not contained in R")));
    }
    if *i == r {
        return Err(Error::Argument("R/I is zero for I = R".into()));
    }
    Ok(r)
}

/// `r_R(I) = μ(K : I)`.
pub fn module_type<I: IdealOps>(i: &I) -> Result<usize> {
    Ok(i.canonical().colon(i)?.mu())
}

/// `r(R/I) = ℓ(((I : m) ∩ R)/I)` for `0 ≠ I ⊊ R`.
pub fn quotient_type<I: IdealOps>(i: &I) -> Result<usize> {
    let r = require_proper(i)?;
    let socle = i.colon(&i.maximal_ideal())?.intersect(&r)?;
    socle.quotient_length(i)
}

/// `ℓ(R/I)` for `I ⊆ R`.
pub fn colength<I: IdealOps>(i: &I) -> Result<usize> {
    i.ring().quotient_length(i)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaValue {
    /// Socle excess or `μ(C)`, depending on the method.
    pub correction: usize,
    pub value: usize,
}

/// `ℓ(soc(R/(t^a)) ∩ Ann(I/t^a I)) + r_R(I)`.
pub fn socle_formula<I: IdealOps>(i: &I, a: i64) -> Result<FormulaValue> {
    let h = i.semigroup();
    if a <= 0 || !h.contains(a) {
        return Err(Error::Argument(format!("parameter exponent {a} must be a positive element of {h}")));
    }
    let r = i.ring();
    let q = r.principal(&r.monomial(a))?;
    let socle = q.colon(&i.maximal_ideal())?.intersect(&r)?;
    let qi = q.product(i)?;
    let ann = qi.colon(i)?.intersect(&r)?;
    let excess = socle.intersect(&ann)?.quotient_length(&q)?;
    Ok(FormulaValue {
        correction: excess,
        value: excess + module_type(i)?,
    })
}

/// `μ(K/((K:I)·I)) + r_R(I)`.
pub fn cokernel_formula<I: IdealOps>(i: &I) -> Result<FormulaValue> {
    let k = i.canonical();
    let dual = k.colon(i)?;
    let image = dual.product(i)?;
    let mk = i.maximal_ideal().product(&k)?;
    let mu_c = k.quotient_length(&image.sum(&mk)?)?;
    Ok(FormulaValue {
        correction: mu_c,
        value: dual.mu() + mu_c,
    })
}

/// Both computations of `r(R⋉I)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IdealizationType {
    pub value: usize,
    pub socle: FormulaValue,
    pub cokernel: FormulaValue,
}

/// `r(R⋉I)`, by both methods with `a = e`. Disagreement, a violated type
/// bound or a DVR value other than 1 is an [`Error::Inconsistent`].
pub fn idealization_type<I: IdealOps>(i: &I) -> Result<IdealizationType> {
    let h = i.semigroup();
    let socle = socle_formula(i, h.multiplicity())?;
    let cokernel = cokernel_formula(i)?;
    if socle.value != cokernel.value {
        return Err(Error::Inconsistent(format!(
            "r(R⋉I) for I = {i}: socle method gives {}, cokernel method gives {}",
            socle.value, cokernel.value
        )));
    }
    let value = socle.value;
    let rr = value - socle.correction;
    if value < rr || value > h.cm_type() + rr {
        return Err(Error::Inconsistent(format!(
            "r(R⋉I) = {value} outside [{rr}, {}] for I = {i}",
            h.cm_type() + rr
        )));
    }
    if h.is_dvr() && value != 1 {
        return Err(Error::Inconsistent(format!("r(R⋉I) = {value} over a DVR")));
    }
    Ok(IdealizationType { value, socle, cokernel })
}

/// `I : I = R`.
pub fn is_closed<I: IdealOps>(i: &I) -> Result<bool> {
    Ok(i.colon(i)? == i.ring())
}

/// `R : I = I : I`. Fractional ideals are tested the same way; the report
/// flag additionally requires `I ⊆ R`.
pub fn is_trace<I: IdealOps>(i: &I) -> Result<bool> {
    Ok(i.ring().colon(i)? == i.colon(i)?)
}

/// `(t^e I : I) ∩ R = t^e R`.
pub fn is_residually_faithful<I: IdealOps>(i: &I) -> Result<bool> {
    let r = i.ring();
    let q = r.principal(&r.monomial(i.semigroup().multiplicity()))?;
    Ok(q.product(i)?.colon(i)?.intersect(&r)? == q)
}

/// First candidate `x` with `I² = xI`.
pub fn find_reduction<I: IdealOps>(i: &I) -> Result<Option<I::Element>> {
    let square = i.product(i)?;
    for x in i.reduction_candidates() {
        if i.principal(&x)?.product(i)? == square {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq)]
pub struct UlrichWitness<E> {
    pub is_ulrich: bool,
    pub reduction: Option<E>,
}

/// `I ⊋ (x)`, `I² = xI` and `I/I²` free over `R/I`, freeness decided by
/// `ℓ(I/I²) = μ(I)·ℓ(R/I)`. Ideals not properly inside `R` are not Ulrich.
pub fn is_ulrich_ideal<I: IdealOps>(i: &I) -> Result<UlrichWitness<I::Element>> {
    let r = i.ring();
    if !r.contains_ideal(i)? || *i == r {
        return Ok(UlrichWitness {
            is_ulrich: false,
            reduction: None,
        });
    }
    let Some(x) = find_reduction(i)? else {
        return Ok(UlrichWitness {
            is_ulrich: false,
            reduction: None,
        });
    };
    let square = i.product(i)?;
    let is_ulrich = i.principal(&x)? != *i && i.quotient_length(&square)? == i.mu() * colength(i)?;
    Ok(UlrichWitness {
        is_ulrich,
        reduction: Some(x),
    })
}

/// `m·M = t^e·M`.
pub fn is_ulrich_module_wrt_m<I: IdealOps>(m: &I) -> Result<bool> {
    let t_e = m.principal(&m.monomial(m.semigroup().multiplicity()))?;
    Ok(m.maximal_ideal().product(m)? == t_e.product(m)?)
}

/// `M` Ulrich with respect to `I`. For `I = m` this is the `m·M = t^e·M`
/// test; otherwise `I·M = x·M` for a reduction `x` of `I` and
/// `ℓ(M/IM) = μ(M)·ℓ(R/I)`.
pub fn is_ulrich_module_wrt<I: IdealOps>(m: &I, i: &I) -> Result<bool> {
    if *i == i.maximal_ideal() {
        return is_ulrich_module_wrt_m(m);
    }
    require_proper(i)?;
    let Some(x) = find_reduction(i)? else {
        return Err(Error::Undecidable(format!(
            "no reduction of {i} among the generators of least order and the first basis element"
        )));
    };
    let im = i.product(m)?;
    Ok(im == i.principal(&x)?.product(m)? && m.quotient_length(&im)? == m.mu() * colength(i)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictStatus {
    Pass,
    Fail,
    Inapplicable,
}

/// One identity check recorded in a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: &'static str,
    pub status: VerdictStatus,
    pub detail: String,
}

impl Verdict {
    fn new(name: &'static str, applicable: bool, holds: bool, detail: String) -> Self {
        let status = match (applicable, holds) {
            (false, _) => VerdictStatus::Inapplicable,
            (true, true) => VerdictStatus::Pass,
            (true, false) => VerdictStatus::Fail,
        };
        Verdict { name, status, detail }
    }

    pub fn passed(&self) -> bool {
        self.status != VerdictStatus::Fail
    }
}

/// The `M` Ulrich with respect to Ulrich `I` identity
/// `r(R⋉M) = r(R/I)·(μ(M) + μ(I) − 1) = r(R) + r_R(M)`, for a fractional
/// ideal `M`. Inapplicable unless both hypotheses hold.
pub fn ulrich_pair<I: IdealOps>(m: &I, i: &I) -> Result<Verdict> {
    let ui = is_ulrich_ideal(i)?;
    let applicable = ui.is_ulrich && is_ulrich_module_wrt(m, i)?;
    if !applicable {
        return Ok(Verdict::new("ulrich-pair", false, true, format!("M = {m}, I = {i}")));
    }
    let r = idealization_type(m)?.value;
    let rq = quotient_type(i)?;
    let predicted = rq * (m.mu() + i.mu() - 1);
    let other = i.semigroup().cm_type() + module_type(m)?;
    Ok(Verdict::new(
        "ulrich-pair",
        true,
        r == predicted && r == other,
        format!("r(R⋉M) = {r}, r(R/I)·(μ(M)+μ(I)−1) = {predicted}, r(R)+r_R(M) = {other}"),
    ))
}

/// Everything computed for one ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealReport {
    pub engine: &'static str,
    pub ideal: String,
    pub semigroup: SemigroupInvariants,
    pub mu: usize,
    pub module_type: usize,
    /// `r(R/I)`, when `0 ≠ I ⊊ R`.
    pub quotient_type: Option<usize>,
    /// `ℓ(R/I)`, when `I ⊆ R`.
    pub colength: Option<usize>,
    pub r_idealization: usize,
    pub socle_method: FormulaValue,
    pub cokernel_method: FormulaValue,
    pub socle_excess: usize,
    pub contained_in_ring: bool,
    pub proper: bool,
    pub maximal_ideal: bool,
    pub closed: bool,
    pub trace: bool,
    pub residually_faithful: bool,
    pub ulrich_ideal: bool,
    pub ulrich_wrt_m: bool,
    pub canonical: bool,
    pub principal: bool,
    pub reduction: Option<String>,
    pub verdicts: Vec<Verdict>,
}

impl IdealReport {
    pub fn all_passed(&self) -> bool {
        self.verdicts.iter().all(Verdict::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.passed())
    }

    pub fn verdict(&self, name: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.name == name)
    }

    /// Equal mathematical content, ignoring the engine, the rendering of
    /// the ideal and the chosen reduction.
    pub fn same_values(&self, other: &Self) -> bool {
        let strip = |r: &Self| IdealReport {
            engine: "",
            ideal: String::new(),
            reduction: r.reduction.as_ref().map(|_| String::new()),
            ..r.clone()
        };
        strip(self) == strip(other)
    }
}

/// Full report with every applicable identity evaluated.
pub fn classify<I: IdealOps>(i: &I) -> Result<IdealReport> {
    let h = i.semigroup().clone();
    let semigroup = h.invariants()?;
    let rr = module_type(i)?;
    let ty = idealization_type(i)?;
    let r = ty.value;
    let mu = i.mu();
    let ring = i.ring();
    let contained = is_contained_in_ring(i)?;
    let proper = contained && *i != ring;
    let (quotient_type, colength) = if proper {
        (Some(quotient_type(i)?), Some(colength(i)?))
    } else if contained {
        (None, Some(0))
    } else {
        (None, None)
    };
    let maximal_ideal = *i == i.maximal_ideal();
    let closed = is_closed(i)?;
    let trace = contained && is_trace(i)?;
    let residually_faithful = is_residually_faithful(i)?;
    let ulrich = is_ulrich_ideal(i)?;
    let ulrich_wrt_m = is_ulrich_module_wrt_m(i)?;
    let principal = mu == 1;
    let gorenstein = semigroup.symmetric;
    let dvr = semigroup.dvr;
    let rh = semigroup.cm_type;
    let rq = quotient_type.unwrap_or(0);

    let mut verdicts = vec![
        Verdict::new(
            "type-bounds",
            true,
            rr <= r && r <= rh + rr,
            format!("r_R(I) = {rr} ≤ r(R⋉I) = {r} ≤ r(R) + r_R(I) = {}", rh + rr),
        ),
        Verdict::new(
            "closed-residually-faithful",
            true,
            closed == residually_faithful && closed == (r == rr) && residually_faithful == (ty.socle.correction == 0),
            format!("closed = {closed}, residually faithful = {residually_faithful}, r(R⋉I) − r_R(I) = {}", r - rr),
        ),
    ];
    verdicts.push(Verdict::new(
        "(i) ulrich-ideal",
        ulrich.is_ulrich,
        r == (2 * mu - 1) * rq && r == rh + rr,
        format!("r(R⋉I) = {r}, (2μ−1)·r(R/I) = {}, r(R) + r_R(I) = {}", (2 * mu).saturating_sub(1) * rq, rh + rr),
    ));
    verdicts.push(Verdict::new(
        "(ii) ulrich-wrt-m",
        ulrich_wrt_m && !dvr,
        rr == mu && r == rh + rr,
        format!("r_R(I) = {rr}, μ(I) = {mu}, r(R⋉I) = {r}, r(R) + r_R(I) = {}", rh + rr),
    ));
    verdicts.push(Verdict::new(
        "(ii) med-converse",
        semigroup.med && !dvr,
        ulrich_wrt_m == (r == rh + rr),
        format!("ulrich w.r.t. m = {ulrich_wrt_m}, r(R⋉I) = {r}, r(R) + r_R(I) = {}", rh + rr),
    ));
    verdicts.push(Verdict::new(
        "(iii) gorenstein-bounds",
        gorenstein && proper,
        rq <= rr && rr <= 1 + rq && (mu == 1 || r == 1 + rr),
        format!("r(R/I) = {rq}, r_R(I) = {rr}, μ(I) = {mu}, r(R⋉I) = {r}"),
    ));
    verdicts.push(Verdict::new(
        "(iv) gorenstein-trace",
        gorenstein && trace && proper,
        r == 2 + rq,
        format!("r(R⋉I) = {r}, 2 + r(R/I) = {}", 2 + rq),
    ));
    verdicts.push(Verdict::new(
        "(v) closed-type",
        true,
        closed == (r == rr) && (!(closed && proper) || (r == rq && rq == rr)),
        format!(
            "closed = {closed}, r(R⋉I) = {r}, r_R(I) = {rr}, r(R/I) = {}",
            quotient_type.map_or("-".to_string(), |q| q.to_string())
        ),
    ));
    verdicts.push(Verdict::new(
        "(vi) maximal-ideal",
        maximal_ideal && !dvr,
        rr == rh + 1 && r == 2 * rh + 1 && trace,
        format!("r_R(m) = {rr}, r(R⋉m) = {r}, r(R) = {rh}, trace = {trace}"),
    ));
    verdicts.push(Verdict::new(
        "(vii) gorenstein-closed-principal",
        gorenstein && closed,
        principal,
        format!("μ(I) = {mu}"),
    ));
    verdicts.push(Verdict::new(
        "supremum-bound",
        true,
        if dvr { r == 1 } else { r <= rh + h.multiplicity() as usize },
        format!("r(R⋉I) = {r}, r(R) + e = {}", rh + h.multiplicity() as usize),
    ));

    Ok(IdealReport {
        engine: I::ENGINE,
        ideal: i.to_string(),
        semigroup,
        mu,
        module_type: rr,
        quotient_type,
        colength,
        r_idealization: r,
        socle_method: ty.socle,
        cokernel_method: ty.cokernel,
        socle_excess: ty.socle.correction,
        contained_in_ring: contained,
        proper,
        maximal_ideal,
        closed,
        trace,
        residually_faithful,
        ulrich_ideal: ulrich.is_ulrich,
        ulrich_wrt_m,
        canonical: rr == 1,
        principal,
        reduction: ulrich.reduction.map(|x| x.to_string()),
        verdicts,
    })
}
