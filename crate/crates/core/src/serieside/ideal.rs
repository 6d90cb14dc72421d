use std::fmt;
use std::sync::Arc;

use super::TruncatedSeries;
use crate::error::{Error, Result};
use crate::exactalg::{CoeffMatrix, FieldSpec, Scalar};
use crate::relideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

/// A fractional ideal `I` of `R = k[[t^H]]` with
/// `t^γ k[[t]] ⊆ I ⊆ t^δ k[[t]]`, stored as the reduced basis of
/// `I / t^γ k[[t]]` on the exponent window `[δ, γ)`.
///
/// The stored form is canonical: `δ` is the least order of an element of
/// `I` and `γ` the least exponent with `t^γ k[[t]] ⊆ I`, so two ideals are
/// equal exactly when their stored forms are.
#[derive(Clone)]
pub struct FractionalIdeal {
    semigroup: Arc<NumericalSemigroup>,
    field: FieldSpec,
    delta: i64,
    gamma: i64,
    basis: CoeffMatrix,
    generators: Vec<TruncatedSeries>,
}

impl PartialEq for FractionalIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.semigroup.generators() == other.semigroup.generators()
            && self.delta == other.delta
            && self.gamma == other.gamma
            && self.basis == other.basis
    }
}

impl Eq for FractionalIdeal {}

/// Coefficients of `poly` on `[lo, hi)`, dropping everything at or above
/// `hi`. Terms below `lo` are a caller bug.
fn row_on(poly: &TruncatedSeries, lo: i64, hi: i64) -> Vec<Scalar> {
    let field = poly.field();
    let mut row = vec![field.zero(); (hi - lo).max(0) as usize];
    for (e, c) in poly.terms() {
        debug_assert!(e >= lo, "term t^{e} below window start {lo}");
        if e < hi {
            row[(e - lo) as usize] = c.clone();
        }
    }
    row
}

/// Row shifted right by `a` places inside a window of the same width.
fn shift_row(row: &[Scalar], a: usize, zero: &Scalar) -> Vec<Scalar> {
    let n = row.len();
    let mut out = vec![zero.clone(); n];
    if a < n {
        out[a..].clone_from_slice(&row[..n - a]);
    }
    out
}

impl FractionalIdeal {
    /// The ideal `span(rows) + t^hi k[[t]]`, rows given on `[lo, hi)`,
    /// brought to canonical form. The caller guarantees the span is an
    /// `R`-module modulo `t^hi`.
    pub(crate) fn from_window(
        semigroup: Arc<NumericalSemigroup>,
        field: FieldSpec,
        lo: i64,
        hi: i64,
        rows: Vec<Vec<Scalar>>,
        generators: Vec<TruncatedSeries>,
    ) -> Result<Self> {
        let width = (hi - lo).max(0) as usize;
        let reduced = CoeffMatrix::new(field, width, rows)?.reduce_echelon();
        let mut pivots = reduced.pivots();
        let mut rows = reduced.into_rows();
        let mut width = width;
        // A pivot in the last column is the unit row e_{hi-1}: absorb it into
        // the tail.
        while width > 0 && pivots.last() == Some(&(width - 1)) {
            pivots.pop();
            rows.pop();
            width -= 1;
            for r in rows.iter_mut() {
                r.truncate(width);
            }
        }
        let gamma = lo + width as i64;
        let (delta, rows) = match pivots.first() {
            None => (gamma, Vec::new()),
            Some(&p0) => (
                lo + p0 as i64,
                rows.into_iter().map(|r| r[p0..].to_vec()).collect(),
            ),
        };
        let basis = CoeffMatrix::new(field, (gamma - delta) as usize, rows)?;
        Ok(FractionalIdeal {
            semigroup,
            field,
            delta,
            gamma,
            basis,
            generators,
        })
    }

    /// `I = Σ R g_i`. The window is `[δ, δ + c + slack)` with `δ` the least
    /// generator order; a generator `g` of order `δ` is `t^δ` times a unit of
    /// `k[[t]]`, so `g · t^c k[[t]] = t^(δ+c) k[[t]]` lies in `I`. That bound
    /// is re-checked on a wider window before the ideal is returned.
    pub fn from_generators(
        semigroup: Arc<NumericalSemigroup>,
        field: FieldSpec,
        generators: &[TruncatedSeries],
        slack: i64,
    ) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.field() != field) {
            return Err(Error::FieldMismatch(field.to_string(), g.field().to_string()));
        }
        let gens: Vec<TruncatedSeries> = generators.iter().filter(|g| !g.is_zero()).cloned().collect();
        let Some(delta) = gens.iter().filter_map(TruncatedSeries::ord).min() else {
            return Err(Error::Argument("all generators are zero".into()));
        };
        if slack < 0 {
            return Err(Error::Argument(format!("negative slack {slack}")));
        }
        let gamma = delta + semigroup.conductor() + slack;
        let spanned = |hi: i64| -> Result<Vec<Vec<Scalar>>> {
            let mut rows = Vec::new();
            for g in &gens {
                let ord = g.ord().expect("nonzero");
                for h in (0..hi - ord).filter(|&h| semigroup.contains(h)) {
                    rows.push(g.shift(h).window(delta, hi)?);
                }
            }
            Ok(rows)
        };
        let ideal = Self::from_window(semigroup.clone(), field, delta, gamma, spanned(gamma)?, gens.clone())?;

        let wider = gamma + semigroup.multiplicity();
        let check = Self::from_window(semigroup.clone(), field, delta, wider, spanned(wider)?, gens)?;
        if check != ideal {
            return Err(Error::Certification(format!(
                "t^{gamma} k[[t]] is not contained in the ideal generated by {:?}",
                ideal.generators
            )));
        }
        Ok(ideal)
    }

    pub fn principal(&self, x: &TruncatedSeries) -> Result<Self> {
        Self::from_generators(self.semigroup.clone(), self.field, std::slice::from_ref(x), 0)
    }

    /// The monomial ideal with exponent set `E`.
    pub fn from_relative(e: &RelativeIdeal, field: FieldSpec) -> Self {
        let h = e.semigroup().clone();
        let lo = e.delta();
        let hi = e.tail_start();
        let rows = e
            .members(lo, hi)
            .map(|x| {
                let mut r = vec![field.zero(); (hi - lo) as usize];
                r[(x - lo) as usize] = field.one();
                r
            })
            .collect();
        let gens = e
            .minimal_generators()
            .into_iter()
            .map(|x| TruncatedSeries::monomial(field, x))
            .collect();
        Self::from_window(h, field, lo, hi, rows, gens).expect("unit rows have the right width")
    }

    pub fn ring(semigroup: Arc<NumericalSemigroup>, field: FieldSpec) -> Self {
        Self::from_relative(&RelativeIdeal::ring(semigroup), field)
    }

    pub fn maximal_ideal(semigroup: Arc<NumericalSemigroup>, field: FieldSpec) -> Self {
        Self::from_relative(&RelativeIdeal::maximal_ideal(semigroup), field)
    }

    pub fn canonical(semigroup: Arc<NumericalSemigroup>, field: FieldSpec) -> Self {
        Self::from_relative(&semigroup.canonical_relative_ideal(), field)
    }

    pub fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        &self.semigroup
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn delta(&self) -> i64 {
        self.delta
    }

    pub fn gamma(&self) -> i64 {
        self.gamma
    }

    pub fn basis(&self) -> &CoeffMatrix {
        &self.basis
    }

    /// Generators the ideal was built from, if any.
    pub fn generators(&self) -> &[TruncatedSeries] {
        &self.generators
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        if self.semigroup.generators() != other.semigroup.generators() {
            return Err(Error::SemigroupMismatch(
                self.semigroup.to_string(),
                other.semigroup.to_string(),
            ));
        }
        Ok(())
    }

    /// Reduced spanning rows of `I / t^hi k[[t]]` on `[lo, hi)`.
    /// Requires `lo <= δ` and `hi >= γ`.
    pub fn padded(&self, lo: i64, hi: i64) -> CoeffMatrix {
        assert!(lo <= self.delta && hi >= self.gamma, "window [{lo},{hi}) too narrow");
        let width = (hi - lo) as usize;
        let zero = self.field.zero();
        let left = (self.delta - lo) as usize;
        let mut rows: Vec<Vec<Scalar>> = self
            .basis
            .rows()
            .iter()
            .map(|r| {
                let mut v = vec![zero.clone(); width];
                v[left..left + r.len()].clone_from_slice(r);
                v
            })
            .collect();
        for x in self.gamma..hi {
            let mut v = vec![zero.clone(); width];
            v[(x - lo) as usize] = self.field.one();
            rows.push(v);
        }
        CoeffMatrix::new(self.field, width, rows).expect("consistent widths")
    }

    /// `dim_k I / t^hi k[[t]]` for `hi >= γ`.
    pub fn dim_below(&self, hi: i64) -> usize {
        self.basis.nrows() + (hi - self.gamma) as usize
    }

    /// Basis rows as exact polynomials (elements of `I`).
    fn basis_elements(&self) -> impl Iterator<Item = TruncatedSeries> + '_ {
        self.basis
            .rows()
            .iter()
            .map(|r| TruncatedSeries::from_row(self.field, self.delta, r))
    }

    pub fn contains_element(&self, x: &TruncatedSeries) -> Result<bool> {
        if x.field() != self.field {
            return Err(Error::FieldMismatch(self.field.to_string(), x.field().to_string()));
        }
        let Some(ord) = x.ord() else {
            return Ok(true);
        };
        if ord < self.delta {
            return Ok(false);
        }
        if ord >= self.gamma {
            return Ok(true);
        }
        let row = x.window(self.delta, self.gamma)?;
        self.basis.contains(&row)
    }

    /// `J ⊆ I`, tested by membership of every spanning row on a common
    /// window.
    pub fn contains_ideal(&self, sub: &Self) -> Result<bool> {
        self.compatible(sub)?;
        if sub.delta < self.delta {
            return Ok(false);
        }
        let hi = self.gamma.max(sub.gamma);
        let mine = self.padded(self.delta, hi);
        for row in sub.padded(self.delta, hi).rows() {
            if !mine.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let lo = self.delta.min(other.delta);
        let hi = self.gamma.max(other.gamma);
        let rows = self.padded(lo, hi).stack(&other.padded(lo, hi))?.into_rows();
        let mut gens = self.generators.clone();
        if !gens.is_empty() && !other.generators.is_empty() {
            gens.extend(other.generators.iter().cloned());
        } else {
            gens.clear();
        }
        Self::from_window(self.semigroup.clone(), self.field, lo, hi, rows, gens)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let lo = self.delta.min(other.delta);
        let hi = self.gamma.max(other.gamma);
        let meet = self.padded(lo, hi).intersect(&other.padded(lo, hi))?;
        Self::from_window(self.semigroup.clone(), self.field, lo, hi, meet.into_rows(), Vec::new())
    }

    /// Exact elements of `I` whose classes form a basis of `I / mI`.
    ///
    /// `mI = Σ t^a I` over the minimal generators `a` of `H`, and
    /// `t^(γ+e) k[[t]] ⊆ t^e I ⊆ mI`, so the window `[δ, γ + e)` sees all of
    /// `I / mI`.
    pub fn local_generators(&self) -> Vec<TruncatedSeries> {
        let lo = self.delta;
        let hi = self.gamma + self.semigroup.multiplicity();
        let padded = self.padded(lo, hi);
        let zero = self.field.zero();
        let mut span_rows = Vec::new();
        for &a in self.semigroup.generators() {
            for r in padded.rows() {
                span_rows.push(shift_row(r, a as usize, &zero));
            }
        }
        let width = (hi - lo) as usize;
        let mut span = CoeffMatrix::new(self.field, width, span_rows)
            .expect("consistent widths")
            .reduce_echelon();
        let mut chosen = Vec::new();
        for r in padded.rows() {
            if span.contains(r).expect("width") {
                continue;
            }
            chosen.push(TruncatedSeries::from_row(self.field, lo, r));
            let single = CoeffMatrix::new(self.field, width, vec![r.clone()]).expect("width");
            span = span.stack(&single).expect("width").reduce_echelon();
        }
        chosen
    }

    /// `μ_R(I) = dim_k I / mI`.
    pub fn mu(&self) -> usize {
        self.local_generators().len()
    }

    /// `I · J`. With `δ_P = δ_I + δ_J`, the product contains
    /// `t^(δ_I + γ_J) k[[t]]` and `t^(δ_J + γ_I) k[[t]]`, and modulo the
    /// smaller of the two it is spanned by `v · y` for `v` a basis element of
    /// `I` and `y` a local generator of `J`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let lo = self.delta + other.delta;
        let hi = (self.delta + other.gamma).min(other.delta + self.gamma);
        let gens_j = other.local_generators();
        let mut rows = Vec::new();
        for v in self.basis_elements() {
            for y in &gens_j {
                rows.push(row_on(&v.mul(y)?, lo, hi));
            }
        }
        let mut gens = Vec::new();
        if !self.generators.is_empty() && !other.generators.is_empty() {
            for a in &self.generators {
                for b in &other.generators {
                    gens.push(a.mul(b)?);
                }
            }
        }
        Self::from_window(self.semigroup.clone(), self.field, lo, hi, rows, gens)
    }

    /// `I : J = { z : zJ ⊆ I }`.
    ///
    /// Every solution has order `≥ δ_I − δ_J`, and `t^(γ_I − δ_J) k[[t]]`
    /// lies in the colon, so the unknowns are the coefficients of `z` on
    /// `[δ_I − δ_J, γ_I − δ_J)`. The constraints say `z · y` reduces to zero
    /// against the basis of `I` for every local generator `y` of `J`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let lo = self.delta - other.delta;
        let hi = self.gamma - other.delta;
        let n = (hi - lo) as usize;
        let gens_j = other.local_generators();
        let width_i = (self.gamma - self.delta) as usize;

        // columns[x] = stacked residuals of t^(lo+x) · y_j for all j
        let mut columns: Vec<Vec<Scalar>> = Vec::with_capacity(n);
        for x in 0..n {
            let mut col = Vec::with_capacity(gens_j.len() * width_i);
            for y in &gens_j {
                let prod = y.shift(lo + x as i64);
                let row = row_on(&prod, self.delta, self.gamma);
                col.extend(self.basis.residual(&row)?);
            }
            columns.push(col);
        }
        let neq = gens_j.len() * width_i;
        let equations: Vec<Vec<Scalar>> = (0..neq)
            .map(|q| columns.iter().map(|c| c[q].clone()).collect())
            .filter(|r: &Vec<Scalar>| r.iter().any(|s| !s.is_zero()))
            .collect();
        let system = CoeffMatrix::new(self.field, n, equations)?;
        let solutions = system.kernel();
        Self::from_window(self.semigroup.clone(), self.field, lo, hi, solutions.into_rows(), Vec::new())
    }

    /// `ℓ_R(I / J)` for `J ⊆ I`.
    pub fn quotient_length(&self, sub: &Self) -> Result<usize> {
        if !self.contains_ideal(sub)? {
            return Err(Error::Containment(format!("{sub} is not contained in {self}")));
        }
        let hi = self.gamma.max(sub.gamma);
        Ok(self.dim_below(hi) - sub.dim_below(hi))
    }

    pub fn is_principal(&self) -> bool {
        self.mu() == 1
    }

    /// Exponents `x` with `t^x ∈ I`.
    pub fn monomial_support(&self) -> RelativeIdeal {
        let width = (self.gamma - self.delta) as usize;
        let units: Vec<i64> = self
            .basis
            .rows()
            .iter()
            .filter(|r| r.iter().filter(|s| !s.is_zero()).count() == 1)
            .map(|r| self.delta + r.iter().position(|s| !s.is_zero()).unwrap() as i64)
            .collect();
        debug_assert!(units.iter().all(|&u| u - self.delta < width as i64));
        let mut gens = units;
        gens.push(self.gamma);
        let h = self.semigroup.clone();
        let support = {
            let tail = self.gamma;
            let set: std::collections::BTreeSet<i64> = gens.iter().copied().collect();
            RelativeIdeal::from_predicate(h.clone(), gens.iter().copied().min().unwrap(), move |x| {
                x >= tail || set.contains(&x)
            })
        };
        // A unit row in reduced form is exactly a monomial of I, and such
        // monomials form an H-stable set.
        support.expect("monomials of an ideal are H-stable")
    }

    /// Orders of the nonzero elements: `{ ord(x) : 0 ≠ x ∈ I }`.
    pub fn valuations(&self) -> RelativeIdeal {
        let pivots: std::collections::BTreeSet<i64> =
            self.basis.pivots().into_iter().map(|p| self.delta + p as i64).collect();
        let tail = self.gamma;
        let lo = self.delta;
        RelativeIdeal::from_predicate(self.semigroup.clone(), lo, move |x| {
            x >= tail || pivots.contains(&x)
        })
        .expect("valuations of an ideal are H-stable")
    }

    pub fn is_monomial(&self) -> bool {
        Self::from_relative(&self.monomial_support(), self.field) == *self
    }

    /// Candidate reductions: given generators of least order, then the basis
    /// element with pivot at `δ`.
    pub fn reduction_candidates(&self) -> Vec<TruncatedSeries> {
        let mut out: Vec<TruncatedSeries> = self
            .generators
            .iter()
            .filter(|g| g.ord() == Some(self.delta))
            .cloned()
            .collect();
        if let Some(first) = self.basis_elements().next() {
            if !out.contains(&first) {
                out.push(first);
            }
        } else if out.is_empty() {
            out.push(TruncatedSeries::monomial(self.field, self.delta));
        }
        out
    }

    /// Canonical-form and `R`-closure checks.
    pub fn check_invariants(&self) -> Result<()> {
        if !self.basis.is_reduced() {
            return Err(Error::Inconsistent("basis not reduced".into()));
        }
        let pivots = self.basis.pivots();
        let width = (self.gamma - self.delta) as usize;
        if width > 0 && pivots.first() != Some(&0) {
            return Err(Error::Inconsistent("δ is not the least order".into()));
        }
        if width > 0 && pivots.last() == Some(&(width - 1)) {
            return Err(Error::Inconsistent("γ is not minimal".into()));
        }
        if self.gamma - self.delta > self.semigroup.conductor() {
            return Err(Error::Inconsistent("window wider than the conductor".into()));
        }
        let zero = self.field.zero();
        for r in self.basis.rows() {
            for &a in self.semigroup.generators() {
                if !self.basis.contains(&shift_row(r, a as usize, &zero))? {
                    return Err(Error::Inconsistent(format!("not stable under t^{a}")));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for FractionalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        if self.generators.is_empty() {
            write!(f, "basis of rank {} on [t^{}, t^{})", self.basis.nrows(), self.delta, self.gamma)?;
        } else {
            for (i, g) in self.generators.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{g}")?;
            }
        }
        write!(f, ") over {} / {}", self.semigroup, self.field)
    }
}

impl fmt::Debug for FractionalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FractionalIdeal{{{}, δ={}, γ={}, rows={:?}}}",
            self.field,
            self.delta,
            self.gamma,
            self.basis
                .rows()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
                .collect::<Vec<_>>()
        )
    }
}
