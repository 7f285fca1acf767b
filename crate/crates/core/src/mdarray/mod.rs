//! Periodic arrays, multivariate polynomials, and their text formats.

pub(crate) mod io;
mod poly;

use std::sync::Arc;

use num_integer::Integer;

pub use io::{read_array, read_array_str, write_array, write_array_string};
pub use poly::{Exponent, MonomialOrder, Polynomial};

use crate::error::{Error, Result};
use crate::ff::{Field, FieldElement};

/// An `m`-dimensional periodic array over a finite field.
///
/// Entries are stored for one fundamental box `[0, n_1) x ... x [0, n_m)`
/// with the first coordinate varying fastest. For 2-D arrays the first
/// coordinate is the horizontal (column) index and the second the vertical.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PeriodicArray {
    field: Arc<Field>,
    periods: Vec<usize>,
    data: Vec<FieldElement>,
}

impl PeriodicArray {
    pub fn new(field: Arc<Field>, periods: Vec<usize>, data: Vec<FieldElement>) -> Result<Self> {
        if periods.is_empty() || periods.contains(&0) {
            return Err(Error::BadPeriods);
        }
        let size: usize = periods.iter().product();
        if data.len() != size {
            return Err(Error::EntryCount {
                expected: size,
                got: data.len(),
            });
        }
        if let Some(e) = data.iter().find(|e| e.0 >= field.order()) {
            return Err(Error::ElementOutOfRange {
                element: e.0 as u64,
                order: field.order(),
            });
        }
        Ok(PeriodicArray {
            field,
            periods,
            data,
        })
    }

    /// Builds an array by evaluating `f` at every index of the fundamental box.
    pub fn from_fn<F>(field: Arc<Field>, periods: Vec<usize>, mut f: F) -> Result<Self>
    where
        F: FnMut(&[usize]) -> FieldElement,
    {
        if periods.is_empty() || periods.contains(&0) {
            return Err(Error::BadPeriods);
        }
        let size: usize = periods.iter().product();
        let mut data = Vec::with_capacity(size);
        let mut idx = vec![0usize; periods.len()];
        for _ in 0..size {
            data.push(f(&idx));
            advance(&mut idx, &periods);
        }
        PeriodicArray::new(field, periods, data)
    }

    pub fn zeros(field: Arc<Field>, periods: Vec<usize>) -> Result<Self> {
        let size = periods.iter().product();
        PeriodicArray::new(field, periods, vec![FieldElement::ZERO; size])
    }

    /// A one-dimensional array from a list of encodings.
    pub fn sequence(field: Arc<Field>, values: &[u32]) -> Result<Self> {
        let data = values.iter().map(|&v| FieldElement(v)).collect();
        PeriodicArray::new(field, vec![values.len()], data)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn periods(&self) -> &[usize] {
        &self.periods
    }

    pub fn dims(&self) -> usize {
        self.periods.len()
    }

    /// Number of cells in one period, `n_1 n_2 ... n_m`.
    pub fn size(&self) -> usize {
        self.data.len()
    }

    pub fn data(&self) -> &[FieldElement] {
        &self.data
    }

    /// Entry at an arbitrary non-negative index, reduced by the periods.
    pub fn get(&self, idx: &[usize]) -> Result<FieldElement> {
        if idx.len() != self.periods.len() {
            return Err(Error::DimensionMismatch {
                expected: self.periods.len(),
                got: idx.len(),
            });
        }
        Ok(self.data[self.flat_index(idx)])
    }

    /// Offset into the dense storage for `idx mod periods`.
    pub fn flat_index(&self, idx: &[usize]) -> usize {
        let mut off = 0;
        let mut stride = 1;
        for (&i, &n) in idx.iter().zip(&self.periods) {
            off += (i % n) * stride;
            stride *= n;
        }
        off
    }

    /// Box index corresponding to a flat storage offset.
    pub fn unflatten(&self, mut off: usize) -> Vec<usize> {
        self.periods
            .iter()
            .map(|&n| {
                let i = off % n;
                off /= n;
                i
            })
            .collect()
    }

    /// Iterator over all indices of the fundamental box in storage order.
    pub fn box_indices(&self) -> BoxIter {
        BoxIter::new(&self.periods)
    }

    /// Whether `f` annihilates the array at every shift.
    pub fn is_valid(&self, f: &Polynomial) -> Result<bool> {
        if **f.field() != *self.field {
            return Err(Error::FieldMismatch);
        }
        if f.nvars() != self.dims() {
            return Err(Error::DimensionMismatch {
                expected: self.dims(),
                got: f.nvars(),
            });
        }
        let field = &*self.field;
        let terms: Vec<(&Exponent, FieldElement)> = f.terms().collect();
        let mut shifted = vec![0usize; self.dims()];
        for beta in self.box_indices() {
            let mut acc = FieldElement::ZERO;
            for (e, c) in &terms {
                for k in 0..shifted.len() {
                    shifted[k] = e[k] + beta[k];
                }
                acc = field.add(acc, field.mul(*c, self.data[self.flat_index(&shifted)]));
            }
            if !acc.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Diagonal CRT unfolding `s_t = a_{(t, t, ..., t)}` into one sequence of
    /// period `n_1 ... n_m`. Requires pairwise coprime periods.
    pub fn unfold(&self) -> Result<PeriodicArray> {
        if !pairwise_coprime(&self.periods) {
            return Err(Error::NotCoprime(self.periods.clone()));
        }
        let n = self.size();
        let mut data = Vec::with_capacity(n);
        let mut idx = vec![0usize; self.dims()];
        for t in 0..n {
            idx.iter_mut().for_each(|i| *i = t);
            data.push(self.data[self.flat_index(&idx)]);
        }
        PeriodicArray::new(self.field.clone(), vec![n], data)
    }

    /// The 1-D sequence obtained by fixing every coordinate except `axis`.
    pub fn line(&self, axis: usize, fixed: &[usize]) -> Vec<FieldElement> {
        let mut idx = fixed.to_vec();
        (0..self.periods[axis])
            .map(|t| {
                idx[axis] = t;
                self.data[self.flat_index(&idx)]
            })
            .collect()
    }
}

pub fn pairwise_coprime(periods: &[usize]) -> bool {
    periods
        .iter()
        .enumerate()
        .all(|(i, a)| periods[i + 1..].iter().all(|b| a.gcd(b) == 1))
}

fn advance(idx: &mut [usize], periods: &[usize]) {
    for (i, &n) in idx.iter_mut().zip(periods) {
        *i += 1;
        if *i < n {
            return;
        }
        *i = 0;
    }
}

/// Iterates the fundamental box with the first coordinate varying fastest.
pub struct BoxIter {
    periods: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl BoxIter {
    pub fn new(periods: &[usize]) -> Self {
        let next = if periods.contains(&0) {
            None
        } else {
            Some(vec![0; periods.len()])
        };
        BoxIter {
            periods: periods.to_vec(),
            next,
        }
    }
}

impl Iterator for BoxIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        advance(&mut succ, &self.periods);
        if succ.iter().any(|&i| i != 0) {
            self.next = Some(succ);
        }
        Some(cur)
    }
}
