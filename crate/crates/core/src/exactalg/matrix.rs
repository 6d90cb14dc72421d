use super::{FieldSpec, Scalar};
use crate::error::{Error, Result};

/// A dense matrix over a [`FieldSpec`], read as a list of row vectors.
///
/// Column `j` stands for the exponent `base + j` of whatever window the
/// caller is working on; the matrix itself does not store the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffMatrix {
    field: FieldSpec,
    ncols: usize,
    rows: Vec<Vec<Scalar>>,
}

impl CoeffMatrix {
    pub fn new(field: FieldSpec, ncols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        for row in &rows {
            if row.len() != ncols {
                return Err(Error::Dimension {
                    expected: ncols,
                    found: row.len(),
                });
            }
            if let Some(bad) = row.iter().find(|s| !field.contains(s)) {
                return Err(Error::FieldMismatch(field.to_string(), bad.field().to_string()));
            }
        }
        Ok(CoeffMatrix { field, ncols, rows })
    }

    /// Integer entries, mostly for tests and fixtures.
    pub fn from_ints(field: FieldSpec, rows: &[Vec<i64>]) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_int(x)).collect())
            .collect();
        Self::new(field, ncols, rows)
    }

    pub fn empty(field: FieldSpec, ncols: usize) -> Self {
        CoeffMatrix {
            field,
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<Scalar>> {
        self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Unique reduced row-echelon form of the row span.
    pub fn reduce_echelon(&self) -> CoeffMatrix {
        let mut a = self.rows.clone();
        let m = a.len();
        let mut pivot_row = 0;
        for col in 0..self.ncols {
            if pivot_row >= m {
                break;
            }
            let Some(found) = (pivot_row..m).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(found, pivot_row);
            let inv = a[pivot_row][col].inv();
            if !inv.is_one() {
                for x in a[pivot_row][col..].iter_mut() {
                    *x = &*x * &inv;
                }
            }
            let pivot = a[pivot_row].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r == pivot_row || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for j in col..self.ncols {
                    if !pivot[j].is_zero() {
                        row[j] = &row[j] - &(&factor * &pivot[j]);
                    }
                }
            }
            pivot_row += 1;
        }
        a.truncate(pivot_row);
        CoeffMatrix {
            field: self.field,
            ncols: self.ncols,
            rows: a,
        }
    }

    /// Checks the reduced-form invariant.
    pub fn is_reduced(&self) -> bool {
        let mut last: Option<usize> = None;
        for row in &self.rows {
            let Some(p) = row.iter().position(|x| !x.is_zero()) else {
                return false;
            };
            if last.is_some_and(|l| p <= l) || !row[p].is_one() {
                return false;
            }
            for other in &self.rows {
                if !std::ptr::eq(other, row) && !other[p].is_zero() {
                    return false;
                }
            }
            last = Some(p);
        }
        true
    }

    /// Pivot columns of a reduced matrix, one per row.
    pub fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("zero row in reduced matrix"))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.reduce_echelon().nrows()
    }

    fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.ncols {
            return Err(Error::Dimension {
                expected: self.ncols,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// `v` minus its projection along the pivots of this (reduced) basis.
    /// Zero exactly when `v` lies in the row span.
    pub fn residual(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_len(v)?;
        if !self.is_reduced() {
            return Err(Error::Argument("residual needs a reduced echelon basis".into()));
        }
        let mut out = v.to_vec();
        for (row, p) in self.rows.iter().zip(self.pivots()) {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for j in p..self.ncols {
                if !row[j].is_zero() {
                    out[j] = &out[j] - &(&c * &row[j]);
                }
            }
        }
        Ok(out)
    }

    /// Coordinates of `v` in this reduced basis, or `None` when `v` is not
    /// in the row span.
    pub fn member(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        let res = self.residual(v)?;
        if res.iter().any(|x| !x.is_zero()) {
            return Ok(None);
        }
        Ok(Some(self.pivots().into_iter().map(|p| v[p].clone()).collect()))
    }

    /// Row-span membership; reduces a copy first if needed.
    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        if self.is_reduced() {
            Ok(self.member(v)?.is_some())
        } else {
            self.reduce_echelon().contains(v)
        }
    }

    /// Rows of both matrices, unreduced.
    pub fn stack(&self, other: &CoeffMatrix) -> Result<CoeffMatrix> {
        self.compatible(other)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(CoeffMatrix {
            field: self.field,
            ncols: self.ncols,
            rows,
        })
    }

    fn compatible(&self, other: &CoeffMatrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        if self.ncols != other.ncols {
            return Err(Error::Dimension {
                expected: self.ncols,
                found: other.ncols,
            });
        }
        Ok(())
    }

    /// Reduced basis of the intersection of the two row spans (Zassenhaus).
    pub fn intersect(&self, other: &CoeffMatrix) -> Result<CoeffMatrix> {
        self.compatible(other)?;
        let n = self.ncols;
        let zero = self.field.zero();
        let mut rows = Vec::with_capacity(self.nrows() + other.nrows());
        for r in &self.rows {
            let mut w = r.clone();
            w.extend(r.iter().cloned());
            rows.push(w);
        }
        for r in &other.rows {
            let mut w = r.clone();
            w.extend(std::iter::repeat_n(zero.clone(), n));
            rows.push(w);
        }
        let big = CoeffMatrix {
            field: self.field,
            ncols: 2 * n,
            rows,
        }
        .reduce_echelon();
        let meet = big
            .rows
            .into_iter()
            .filter(|r| r[..n].iter().all(Scalar::is_zero))
            .map(|r| r[n..].to_vec())
            .collect();
        Ok(CoeffMatrix {
            field: self.field,
            ncols: n,
            rows: meet,
        }
        .reduce_echelon())
    }

    /// Reduced basis of `{ x : A x = 0 }`, where the rows of `self` are the
    /// equations and the columns are the unknowns.
    pub fn kernel(&self) -> CoeffMatrix {
        let rref = self.reduce_echelon();
        let pivots = rref.pivots();
        let mut is_pivot = vec![false; self.ncols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let zero = self.field.zero();
        let one = self.field.one();
        let mut basis = Vec::new();
        for free in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![zero.clone(); self.ncols];
            v[free] = one.clone();
            for (row, &p) in rref.rows.iter().zip(&pivots) {
                v[p] = -&row[free];
            }
            basis.push(v);
        }
        CoeffMatrix {
            field: self.field,
            ncols: self.ncols,
            rows: basis,
        }
        .reduce_echelon()
    }
}
