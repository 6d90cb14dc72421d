use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{FieldSpec, Scalar};

/// A Laurent series over `k` known modulo `t^precision`.
///
/// `precision = None` means the series is an exact Laurent polynomial.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    field: FieldSpec,
    coeffs: BTreeMap<i64, Scalar>,
    precision: Option<i64>,
}

impl TruncatedSeries {
    pub fn zero(field: FieldSpec) -> Self {
        TruncatedSeries {
            field,
            coeffs: BTreeMap::new(),
            precision: None,
        }
    }

    pub fn monomial(field: FieldSpec, exponent: i64) -> Self {
        Self::term(field, exponent, field.one())
    }

    pub fn term(field: FieldSpec, exponent: i64, coeff: Scalar) -> Self {
        let mut s = Self::zero(field);
        s.add_term(exponent, coeff);
        s
    }

    /// Exact polynomial `Σ row[i] t^(base + i)`.
    pub fn from_row(field: FieldSpec, base: i64, row: &[Scalar]) -> Self {
        let mut s = Self::zero(field);
        for (i, c) in row.iter().enumerate() {
            s.add_term(base + i as i64, c.clone());
        }
        s
    }

    pub fn with_precision(mut self, precision: i64) -> Self {
        self.coeffs.retain(|&e, _| e < precision);
        self.precision = Some(match self.precision {
            Some(p) => p.min(precision),
            None => precision,
        });
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn precision(&self) -> Option<i64> {
        self.precision
    }

    pub fn is_exact(&self) -> bool {
        self.precision.is_none()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exponent of the lowest nonzero term; `None` for zero.
    pub fn ord(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn coeff(&self, exponent: i64) -> Scalar {
        self.coeffs.get(&exponent).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub(crate) fn add_term(&mut self, exponent: i64, coeff: Scalar) {
        if self.precision.is_some_and(|p| exponent >= p) {
            return;
        }
        let sum = &self.coeff(exponent) + &coeff;
        if sum.is_zero() {
            self.coeffs.remove(&exponent);
        } else {
            self.coeffs.insert(exponent, sum);
        }
    }

    /// Coefficients on `[lo, hi)`; fails if the series is not known that far.
    pub fn window(&self, lo: i64, hi: i64) -> Result<Vec<Scalar>> {
        if let Some(p) = self.precision {
            if p < hi {
                return Err(Error::Precision { needed: hi, have: p });
            }
        }
        if let Some(o) = self.ord() {
            if o < lo {
                return Err(Error::Argument(format!("series has a term t^{o} below window start {lo}")));
            }
        }
        Ok((lo..hi).map(|e| self.coeff(e)).collect())
    }

    pub fn shift(&self, a: i64) -> Self {
        TruncatedSeries {
            field: self.field,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + a, c.clone())).collect(),
            precision: self.precision.map(|p| p + a),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return TruncatedSeries {
                coeffs: BTreeMap::new(),
                ..self.clone()
            };
        }
        TruncatedSeries {
            field: self.field,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * s)).collect(),
            precision: self.precision,
        }
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let precision = match (self.precision, other.precision) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let mut out = TruncatedSeries {
            field: self.field,
            coeffs: BTreeMap::new(),
            precision,
        };
        for (e, c) in self.terms().chain(other.terms()) {
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-&self.field.one()))
    }

    /// Lower bound on the valuation: `ord` for nonzero series, the
    /// precision for a truncated zero.
    fn valuation_bound(&self) -> Option<i64> {
        self.ord().or(self.precision)
    }

    /// Product, known modulo `t^min(prec(x) + ord(y), prec(y) + ord(x))`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let from_self = self
            .precision
            .and_then(|p| other.valuation_bound().map(|v| p + v));
        let from_other = other
            .precision
            .and_then(|p| self.valuation_bound().map(|v| p + v));
        let precision = match (from_self, from_other) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let mut out = TruncatedSeries {
            field: self.field,
            coeffs: BTreeMap::new(),
            precision,
        };
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let negative = c.is_negative();
            let mag = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = match *e {
                0 => String::new(),
                1 => "t".to_string(),
                e => format!("t^{e}"),
            };
            match (mag.is_one(), mono.is_empty()) {
                (true, false) => write!(f, "{mono}")?,
                (_, true) => write!(f, "{mag}")?,
                (false, false) => write!(f, "{mag}*{mono}")?,
            }
        }
        if let Some(p) = self.precision {
            write!(f, " + O(t^{p})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries[{}]({self})", self.field)
    }
}
