//! Numerical semigroups `H = ⟨a_1, …, a_ℓ⟩ ⊆ ℤ≥0` and the invariants of the
//! ring `R = k[[t^H]]` that can be read off them.

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::relideal::RelativeIdeal;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    frobenius: i64,
    /// `member[x]` for `0 <= x < conductor`.
    member: Vec<bool>,
}

/// Ring invariants of `k[[t^H]]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemigroupInvariants {
    pub generators: Vec<i64>,
    pub multiplicity: i64,
    pub embedding_dimension: usize,
    pub frobenius: i64,
    pub conductor: i64,
    pub genus: usize,
    #[serde(rename = "type")]
    pub cm_type: usize,
    pub pseudo_frobenius: Vec<i64>,
    pub symmetric: bool,
    pub med: bool,
    pub dvr: bool,
}

impl NumericalSemigroup {
    /// Builds `H` from any generating set with gcd 1, reducing it to the
    /// minimal generating set.
    pub fn new(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Argument("empty generator list".into()));
        }
        if let Some(bad) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::Argument(format!("generator {bad} is not positive")));
        }
        let g = gens.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::NotNumericalSemigroup(g as u64));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();

        // Frobenius number is below (a_1 - 1)(a_ℓ - 1) (Schur's bound).
        let a1 = sorted[0];
        let al = *sorted.last().unwrap();
        let bound = ((a1 - 1) * (al - 1)).max(0) as usize + 1;
        let mut table = vec![false; bound + 1];
        table[0] = true;
        for x in 1..=bound {
            table[x] = sorted.iter().any(|&a| a as usize <= x && table[x - a as usize]);
        }
        let frobenius = (0..=bound).rev().find(|&x| !table[x]).map_or(-1, |x| x as i64);
        let conductor = (frobenius + 1) as usize;
        table.truncate(conductor);

        let in_h = |x: i64| x >= conductor as i64 || (x >= 0 && table[x as usize]);
        // a is a minimal generator iff it is not a sum of two nonzero members.
        let minimal: Vec<i64> = sorted
            .iter()
            .copied()
            .filter(|&a| !(1..a).any(|y| in_h(y) && in_h(a - y)))
            .collect();

        Ok(NumericalSemigroup {
            generators: minimal,
            frobenius,
            member: table,
        })
    }

    pub fn shared(gens: &[i64]) -> Result<Arc<Self>> {
        Self::new(gens).map(Arc::new)
    }

    /// Minimal generators, increasing.
    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    pub fn is_dvr(&self) -> bool {
        self.multiplicity() == 1
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < 0 {
            return false;
        }
        if z >= self.conductor() {
            return true;
        }
        self.member[z as usize]
    }

    pub fn gaps(&self) -> Vec<i64> {
        (0..self.conductor()).filter(|&x| !self.contains(x)).collect()
    }

    /// Least member of `H` in each residue class mod `n`, indexed by residue.
    pub fn apery(&self, n: i64) -> Result<Vec<i64>> {
        if n <= 0 || !self.contains(n) {
            return Err(Error::Argument(format!("{n} is not a nonzero element of {self}")));
        }
        let mut out = vec![None; n as usize];
        let mut missing = n as usize;
        let mut x = 0;
        while missing > 0 {
            if self.contains(x) && out[(x % n) as usize].is_none() {
                out[(x % n) as usize] = Some(x);
                missing -= 1;
            }
            x += 1;
        }
        Ok(out.into_iter().map(Option::unwrap).collect())
    }

    /// Pseudo-Frobenius numbers: `x ∉ H` with `x + a ∈ H` for every minimal
    /// generator `a`. Only the DVR has a negative one (`-1`).
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        (-1..=self.frobenius)
            .filter(|&x| !self.contains(x))
            .filter(|&x| self.generators.iter().all(|&a| self.contains(x + a)))
            .collect()
    }

    pub fn cm_type(&self) -> usize {
        self.pseudo_frobenius().len()
    }

    /// Symmetry by the `z ↔ F − z` partition scan; independent of
    /// [`Self::pseudo_frobenius`].
    pub fn is_symmetric(&self) -> bool {
        (0..=self.frobenius.max(0)).all(|z| self.contains(z) != self.contains(self.frobenius - z))
    }

    pub fn is_med(&self) -> bool {
        self.embedding_dimension() as i64 == self.multiplicity()
    }

    pub fn invariants(&self) -> Result<SemigroupInvariants> {
        let pf = self.pseudo_frobenius();
        let symmetric = self.is_symmetric();
        if symmetric != (pf.len() == 1) {
            return Err(Error::Inconsistent(format!(
                "{self}: symmetry scan says {symmetric} but type is {}",
                pf.len()
            )));
        }
        if pf.last() != Some(&self.frobenius) {
            return Err(Error::Inconsistent(format!(
                "{self}: largest pseudo-Frobenius number differs from F"
            )));
        }
        let e = self.multiplicity();
        if self.is_med() && e >= 2 && pf.len() as i64 != e - 1 {
            return Err(Error::Inconsistent(format!(
                "{self}: maximal embedding dimension but type {} != e - 1",
                pf.len()
            )));
        }
        Ok(SemigroupInvariants {
            generators: self.generators.clone(),
            multiplicity: e,
            embedding_dimension: self.embedding_dimension(),
            frobenius: self.frobenius,
            conductor: self.conductor(),
            genus: self.gaps().len(),
            cm_type: pf.len(),
            pseudo_frobenius: pf,
            symmetric,
            med: self.is_med(),
            dvr: self.is_dvr(),
        })
    }

    /// The canonical relative ideal `K = { x : F − x ∉ H }`, with
    /// `H ⊆ K ⊆ ℤ≥0`.
    pub fn canonical_relative_ideal(self: &Arc<Self>) -> RelativeIdeal {
        let f = self.frobenius;
        RelativeIdeal::from_predicate(self.clone(), 0, |x| !self.contains(f - x))
            .expect("0 is a member of K")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩")
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{self}")
    }
}
