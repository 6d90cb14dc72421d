//! The monomial engine.
//!
//! A monomial fractional ideal of `R = k[[t^H]]` is determined by its set of
//! exponents `E ⊆ ℤ`, a relative ideal of `H`: `E + H ⊆ E` and `E` is bounded
//! below. Every integer `≥ min E + c` lies in `E` (`c` the conductor), so a
//! relative ideal is stored as its minimum `δ` plus a membership window on
//! `[δ, δ + c)`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RelativeIdeal {
    semigroup: Arc<NumericalSemigroup>,
    delta: i64,
    /// Membership of `delta + i` for `0 <= i < c`.
    window: Vec<bool>,
}

impl RelativeIdeal {
    /// `R` itself: `E = H`.
    pub fn ring(h: Arc<NumericalSemigroup>) -> Self {
        Self::from_exponents(h, &[0]).expect("non-empty")
    }

    /// `m = H \ {0}`. For the DVR this is `1 + ℤ≥0`.
    pub fn maximal_ideal(h: Arc<NumericalSemigroup>) -> Self {
        let gens = h.generators().to_vec();
        Self::from_exponents(h, &gens).expect("non-empty")
    }

    /// `E = ∪ (g + H)`.
    pub fn from_exponents(h: Arc<NumericalSemigroup>, gens: &[i64]) -> Result<Self> {
        let Some(&lo) = gens.iter().min() else {
            return Err(Error::Argument("empty exponent set".into()));
        };
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let hh = h.clone();
        Self::from_predicate(h, lo, move |x| gens.iter().any(|&g| hh.contains(x - g)))
    }

    /// Builds the set whose members in `[lo, lo + c)` are given by `pred` and
    /// which contains every integer `≥ lo + c`. Fails if that set is not
    /// `H`-stable.
    pub(crate) fn from_predicate(
        h: Arc<NumericalSemigroup>,
        lo: i64,
        pred: impl Fn(i64) -> bool,
    ) -> Result<Self> {
        let c = h.conductor();
        let delta = (lo..lo + c).find(|&x| pred(x)).unwrap_or(lo + c);
        let window = (delta..delta + c).map(|x| x >= lo + c || pred(x)).collect();
        let e = RelativeIdeal {
            semigroup: h,
            delta,
            window,
        };
        e.check_invariants()?;
        Ok(e)
    }

    pub fn check_invariants(&self) -> Result<()> {
        let c = self.conductor();
        if c > 0 && !self.window[0] {
            return Err(Error::Inconsistent(format!("{self}: minimum not a member")));
        }
        for x in self.delta..self.delta + c {
            if self.contains(x) {
                for &a in self.semigroup.generators() {
                    if !self.contains(x + a) {
                        return Err(Error::Argument(format!(
                            "exponent set is not H-stable: {x} present, {} missing",
                            x + a
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        &self.semigroup
    }

    fn conductor(&self) -> i64 {
        self.semigroup.conductor()
    }

    /// `min E`.
    pub fn delta(&self) -> i64 {
        self.delta
    }

    /// Every integer at or above this is a member.
    pub fn tail_start(&self) -> i64 {
        self.delta + self.conductor()
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < self.delta {
            return false;
        }
        let i = x - self.delta;
        if i >= self.conductor() {
            return true;
        }
        self.window[i as usize]
    }

    /// Members in `[lo, hi)`.
    pub fn members(&self, lo: i64, hi: i64) -> impl Iterator<Item = i64> + '_ {
        (lo..hi).filter(move |&x| self.contains(x))
    }

    fn same_semigroup(&self, other: &RelativeIdeal) -> Result<()> {
        if self.semigroup.generators() != other.semigroup.generators() {
            return Err(Error::SemigroupMismatch(
                self.semigroup.to_string(),
                other.semigroup.to_string(),
            ));
        }
        Ok(())
    }

    pub fn is_subset(&self, other: &RelativeIdeal) -> bool {
        self.delta >= other.delta
            && self
                .members(self.delta, self.tail_start().max(other.tail_start()))
                .all(|x| other.contains(x))
    }

    /// `E ∪ F`.
    pub fn sum(&self, other: &RelativeIdeal) -> Result<Self> {
        self.same_semigroup(other)?;
        let lo = self.delta.min(other.delta);
        Self::from_predicate(self.semigroup.clone(), lo, |x| {
            self.contains(x) || other.contains(x)
        })
    }

    /// `E ∩ F`.
    pub fn intersect(&self, other: &RelativeIdeal) -> Result<Self> {
        self.same_semigroup(other)?;
        let lo = self.delta.max(other.delta);
        Self::from_predicate(self.semigroup.clone(), lo, |x| {
            self.contains(x) && other.contains(x)
        })
    }

    /// `E + F = { x + y }`, generated by sums of minimal generators.
    pub fn product(&self, other: &RelativeIdeal) -> Result<Self> {
        self.same_semigroup(other)?;
        let a = self.minimal_generators();
        let b = other.minimal_generators();
        let sums: Vec<i64> = a.iter().flat_map(|x| b.iter().map(move |y| x + y)).collect();
        Self::from_exponents(self.semigroup.clone(), &sums)
    }

    /// `E − F = { z : z + F ⊆ E }`.
    ///
    /// Members satisfy `z ≥ δ_E − δ_F` (since `z + δ_F ∈ E`), and every
    /// `z ≥ δ_E − δ_F + c` is a member (then `z + F` lies in the tail of `E`),
    /// so scanning one conductor-width window decides everything.
    pub fn colon(&self, other: &RelativeIdeal) -> Result<Self> {
        self.same_semigroup(other)?;
        let gens = other.minimal_generators();
        let lo = self.delta - other.delta;
        let test = |z: i64| gens.iter().all(|&f| self.contains(z + f));
        let hi = lo + self.conductor();
        if !test(hi) || test(lo - 1) {
            return Err(Error::Inconsistent(format!("colon scan window [{lo}, {hi}) is not sufficient")));
        }
        Self::from_predicate(self.semigroup.clone(), lo, test)
    }

    /// `E \ (E + M)` with `M = H \ {0}`: the exponents of a minimal monomial
    /// generating set, all inside `[δ, δ + max(c, 1))`.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let gens = self.semigroup.generators();
        let hi = self.delta + self.conductor().max(1);
        self.members(self.delta, hi)
            .filter(|&x| gens.iter().all(|&a| !self.contains(x - a)))
            .collect()
    }

    pub fn mu(&self) -> usize {
        self.minimal_generators().len()
    }

    /// `ℓ_R(E / F) = |E \ F|` for `F ⊆ E`.
    pub fn quotient_length(&self, sub: &RelativeIdeal) -> Result<usize> {
        self.same_semigroup(sub)?;
        if !sub.is_subset(self) {
            return Err(Error::Containment(format!("{sub} is not contained in {self}")));
        }
        let hi = self.tail_start().max(sub.tail_start());
        Ok(self.members(self.delta, hi).filter(|&x| !sub.contains(x)).count())
    }

    /// `K − E`, the exponent set of `Hom_R(I, K_R)`.
    pub fn canonical_dual(&self) -> Result<Self> {
        self.semigroup.canonical_relative_ideal().colon(self)
    }

    /// `a + E`, i.e. multiplication by `t^a`.
    pub fn shift(&self, a: i64) -> Self {
        RelativeIdeal {
            semigroup: self.semigroup.clone(),
            delta: self.delta + a,
            window: self.window.clone(),
        }
    }

    /// Translate so that the minimum is 0.
    pub fn normalized(&self) -> Self {
        self.shift(-self.delta)
    }

    /// The set of gaps `x ∉ E` with `x ≥ δ`.
    pub fn holes(&self) -> Vec<i64> {
        (self.delta..self.tail_start()).filter(|&x| !self.contains(x)).collect()
    }

    /// All members below the tail.
    pub fn window_members(&self) -> BTreeSet<i64> {
        self.members(self.delta, self.tail_start()).collect()
    }
}

impl fmt::Display for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.minimal_generators().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "t^{g}")?;
        }
        write!(f, ") over {}", self.semigroup)
    }
}

impl fmt::Debug for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RelativeIdeal{{δ={}, members={:?}, tail≥{}}}", self.delta, self.window_members(), self.tail_start())
    }
}
