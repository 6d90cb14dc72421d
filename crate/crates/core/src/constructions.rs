//! Explicit ideal families, the blow-up ring, and exhaustive enumeration of
//! monomial ideals.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::relideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;
use crate::typecalc::{idealization_type, is_ulrich_module_wrt_m};

fn require_not_dvr(h: &NumericalSemigroup) -> Result<()> {
    if h.is_dvr() {
        return Err(Error::Argument("the family needs e ≥ 2 (R is a DVR)".into()));
    }
    Ok(())
}

/// `(t^e) + (t^(α_j + e) | p ≤ j ≤ r)` where `PF(H) = {α_1 < … < α_r}`.
/// The identity `I² = t^e I` is checked on the way out.
pub fn pf_family_ideal(h: &Arc<NumericalSemigroup>, p: usize) -> Result<RelativeIdeal> {
    require_not_dvr(h)?;
    let pf = h.pseudo_frobenius();
    if p == 0 || p > pf.len() {
        return Err(Error::Argument(format!("p = {p} outside 1..={}", pf.len())));
    }
    let e = h.multiplicity();
    let mut gens = vec![e];
    gens.extend(pf[p - 1..].iter().map(|a| a + e));
    let i = RelativeIdeal::from_exponents(h.clone(), &gens)?;
    let te = RelativeIdeal::from_exponents(h.clone(), &[e])?;
    if i.product(&i)? != te.product(&i)? {
        return Err(Error::Inconsistent(format!("I² ≠ t^{e} I for I = {i}")));
    }
    Ok(i)
}

/// `I_p = (t^(a_1)) + (t^(a_p), …, t^(a_ℓ))` for `H` of maximal embedding
/// dimension with generators `a_1 < … < a_ℓ`.
pub fn med_family_ideal(h: &Arc<NumericalSemigroup>, p: usize) -> Result<RelativeIdeal> {
    require_not_dvr(h)?;
    if !h.is_med() {
        return Err(Error::Argument(format!("{h} does not have maximal embedding dimension")));
    }
    let a = h.generators();
    if p < 2 || p > a.len() {
        return Err(Error::Argument(format!("p = {p} outside 2..={}", a.len())));
    }
    let mut gens = vec![a[0]];
    gens.extend_from_slice(&a[p - 1..]);
    RelativeIdeal::from_exponents(h.clone(), &gens)
}

/// `K : I` for `I = pf_family_ideal(H, p)`.
pub fn dual_family_ideal(h: &Arc<NumericalSemigroup>, p: usize) -> Result<RelativeIdeal> {
    pf_family_ideal(h, p)?.canonical_dual()
}

/// `R[m/t^e]`: the semigroup generated by `H` and `a_i − e`.
pub fn blowup_closed_form(h: &Arc<NumericalSemigroup>) -> Result<RelativeIdeal> {
    let e = h.multiplicity();
    let mut gens: Vec<i64> = h.generators().to_vec();
    gens.extend(h.generators().iter().map(|a| a - e).filter(|&x| x > 0));
    let s = NumericalSemigroup::new(&gens)?;
    RelativeIdeal::from_predicate(h.clone(), 0, |x| s.contains(x))
}

/// The blow-up `A = ⋃ m^n : m^n`, computed by iterating until
/// `m^(n+1) = t^e m^n`, and compared with [`blowup_closed_form`].
pub fn blowup_ring(h: &Arc<NumericalSemigroup>) -> Result<RelativeIdeal> {
    let m = RelativeIdeal::maximal_ideal(h.clone());
    let te = RelativeIdeal::from_exponents(h.clone(), &[h.multiplicity()])?;
    let mut power = m.clone();
    let limit = h.conductor().max(1) + 1;
    let mut stable = false;
    for _ in 0..limit {
        let next = power.product(&m)?;
        if next == te.product(&power)? {
            stable = true;
            break;
        }
        power = next;
    }
    if !stable {
        return Err(Error::Inconsistent(format!("powers of m did not stabilize within {limit} steps")));
    }
    let a = power.colon(&power)?;
    let oracle = blowup_closed_form(h)?;
    if a != oracle {
        return Err(Error::Inconsistent(format!("blow-up {a} differs from R[m/t^e] = {oracle}")));
    }
    Ok(a)
}

/// Default limit on the number of ideals an enumeration may produce.
pub const DEFAULT_ENUMERATION_CAP: usize = 250_000;

/// All relative ideals `E` with `min E = 0` whose minimal generators are at
/// most `span_bound`, in a fixed order. Fails once more than `cap` ideals
/// with `min E = 0` have been visited.
pub fn enumerate_monomial_ideals(
    h: &Arc<NumericalSemigroup>,
    span_bound: i64,
    cap: usize,
) -> Result<Vec<RelativeIdeal>> {
    if span_bound < 1 {
        return Err(Error::Argument(format!("span bound must be ≥ 1, got {span_bound}")));
    }
    let c = h.conductor();
    let mut member: Vec<bool> = (0..c).map(|x| h.contains(x)).collect();
    let mut gaps = h.gaps();
    gaps.reverse();
    let mut walker = Walker {
        h,
        gaps: &gaps,
        span_bound,
        cap,
        visited: 0,
        out: Vec::new(),
    };
    walker.walk(0, &mut member)?;
    Ok(walker.out)
}

struct Walker<'a> {
    h: &'a Arc<NumericalSemigroup>,
    gaps: &'a [i64],
    span_bound: i64,
    cap: usize,
    visited: usize,
    out: Vec<RelativeIdeal>,
}

impl Walker<'_> {
    fn walk(&mut self, k: usize, member: &mut Vec<bool>) -> Result<()> {
        let c = member.len() as i64;
        let Some(&g) = self.gaps.get(k) else {
            self.visited += 1;
            if self.visited > self.cap {
                return Err(Error::Resource(format!(
                    "more than {} ideals for {}; raise the cap or lower the bound",
                    self.cap, self.h
                )));
            }
            if self.max_generator(member) <= self.span_bound {
                let set = member.clone();
                let e = RelativeIdeal::from_predicate(self.h.clone(), 0, |x| set[x as usize])?;
                self.out.push(e);
            }
            return Ok(());
        };
        self.walk(k + 1, member)?;
        let stable = self
            .h
            .generators()
            .iter()
            .all(|&a| g + a >= c || member[(g + a) as usize]);
        if stable {
            member[g as usize] = true;
            self.walk(k + 1, member)?;
            member[g as usize] = false;
        }
        Ok(())
    }

    /// Largest minimal generator of `member ∪ [c, ∞)`.
    fn max_generator(&self, member: &[bool]) -> i64 {
        let c = member.len() as i64;
        let gens = self.h.generators();
        let inside = |x: i64| x >= c || (x >= 0 && member[x as usize]);
        (0..c + self.h.multiplicity())
            .filter(|&x| inside(x) && gens.iter().all(|&a| !inside(x - a)))
            .max()
            .unwrap_or(0)
    }
}

/// Outcome of a supremum search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupSearch {
    pub value: usize,
    pub witness: String,
    pub witness_mu: usize,
    pub witness_ulrich_wrt_m: bool,
    pub witness_is_blowup: bool,
    /// `r(R) + e`, or 1 for a DVR.
    pub predicted: usize,
    pub examined: usize,
}

/// Largest `r(R⋉I)` over [`enumerate_monomial_ideals`]; ties go to the
/// first ideal in enumeration order.
pub fn sup_search(h: &Arc<NumericalSemigroup>, span_bound: i64, cap: usize) -> Result<SupSearch> {
    let ideals = enumerate_monomial_ideals(h, span_bound, cap)?;
    let values: Vec<usize> = ideals
        .par_iter()
        .map(|i| idealization_type(i).map(|t| t.value))
        .collect::<Result<_>>()?;
    let (best, value) = values
        .iter()
        .enumerate()
        .fold((0, 0), |acc, (k, &v)| if v > acc.1 { (k, v) } else { acc });
    let witness = &ideals[best];
    let predicted = if h.is_dvr() {
        1
    } else {
        h.cm_type() + h.multiplicity() as usize
    };
    Ok(SupSearch {
        value,
        witness: witness.to_string(),
        witness_mu: witness.mu(),
        witness_ulrich_wrt_m: is_ulrich_module_wrt_m(witness)?,
        witness_is_blowup: *witness == blowup_ring(h)?,
        predicted,
        examined: ideals.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::typecalc::module_type;

    fn h(gens: &[i64]) -> Arc<NumericalSemigroup> {
        NumericalSemigroup::shared(gens).unwrap()
    }

    fn count(gens: &[i64]) -> usize {
        let hs = h(gens);
        enumerate_monomial_ideals(&hs, i64::MAX, DEFAULT_ENUMERATION_CAP).unwrap().len()
    }

    #[test]
    fn pf_family() {
        let hs = h(&[3, 4, 5]);
        assert_eq!(pf_family_ideal(&hs, 1).unwrap(), RelativeIdeal::maximal_ideal(hs.clone()));
        assert_eq!(
            pf_family_ideal(&hs, 2).unwrap(),
            RelativeIdeal::from_exponents(hs.clone(), &[3, 5]).unwrap()
        );
        assert!(pf_family_ideal(&hs, 3).is_err());
        assert!(pf_family_ideal(&hs, 0).is_err());
        let hs = h(&[3, 7]);
        assert_eq!(
            pf_family_ideal(&hs, 1).unwrap(),
            RelativeIdeal::from_exponents(hs.clone(), &[3, 14]).unwrap()
        );
        assert!(pf_family_ideal(&h(&[1]), 1).is_err());
    }

    #[test]
    fn med_family() {
        let hs = h(&[4, 5, 6, 7]);
        let i3 = med_family_ideal(&hs, 3).unwrap();
        assert_eq!(module_type(&i3).unwrap(), 3);
        assert_eq!(idealization_type(&i3).unwrap().value, 5);
        assert!(med_family_ideal(&h(&[3, 7]), 2).is_err());
        assert!(med_family_ideal(&hs, 1).is_err());
    }

    #[test]
    fn dual_family_totals() {
        let hs = h(&[3, 4, 5]);
        assert_eq!(idealization_type(&dual_family_ideal(&hs, 2).unwrap()).unwrap().value, 3);
        assert_eq!(idealization_type(&dual_family_ideal(&hs, 1).unwrap()).unwrap().value, 5);
    }

    #[test]
    fn blowups() {
        let hs = h(&[1]);
        assert_eq!(blowup_ring(&hs).unwrap(), RelativeIdeal::ring(hs.clone()));
        let hs = h(&[3, 4, 5]);
        let a = blowup_ring(&hs).unwrap();
        assert_eq!(a, RelativeIdeal::from_exponents(hs.clone(), &[0, 1, 2]).unwrap());
        assert_eq!(a.mu(), 3);
        let hs = h(&[3, 7]);
        let a = blowup_ring(&hs).unwrap();
        assert_eq!(a.mu(), 3);
        assert_eq!(idealization_type(&a).unwrap().value, 4);
        assert_eq!(a.colon(&a).unwrap(), a);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(count(&[1]), 1);
        assert_eq!(count(&[3, 4, 5]), 4);
        assert_eq!(count(&[3, 7]), 12);
        assert_eq!(count(&[4, 5, 6]), 9);
        assert_eq!(count(&[5, 6, 7, 8, 9]), 16);
        assert_eq!(count(&[6, 13, 28]), 1099);
    }

    #[test]
    fn enumeration_bound_and_cap() {
        let hs = h(&[3, 4, 5]);
        let small = enumerate_monomial_ideals(&hs, 1, DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(small.iter().all(|e| e.minimal_generators().iter().all(|&g| g <= 1)));
        assert_eq!(small.len(), 2);
        assert!(enumerate_monomial_ideals(&hs, 0, 10).is_err());
        assert!(matches!(enumerate_monomial_ideals(&h(&[6, 13, 28]), 100, 50), Err(Error::Resource(_))));
    }

    #[test]
    fn sup_searches() {
        let s = sup_search(&h(&[1]), 1, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!((s.value, s.predicted), (1, 1));
        let s = sup_search(&h(&[3, 4, 5]), 9, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(s.value, 5);
        assert_eq!(s.witness_mu, 3);
        assert!(s.witness_ulrich_wrt_m);
        let s = sup_search(&h(&[3, 7]), 14, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(s.value, 4);
    }
}
