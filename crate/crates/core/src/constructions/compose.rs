//! The composition method: placing cyclic shifts of a column (or translated
//! copies of a floor array) according to a shift sequence or shift array.

use super::shift::{ShiftArray, ShiftSequence, VectorShiftSequence};
use crate::error::{Error, Result};
use crate::ff::FieldElement;
use crate::mdarray::PeriodicArray;

fn require_column(c: &PeriodicArray, modulus: usize) -> Result<usize> {
    if c.dims() != 1 {
        return Err(Error::WrongDimension {
            expected: 1,
            got: c.dims(),
        });
    }
    let n = c.periods()[0];
    if n != modulus {
        return Err(Error::LengthMismatch(format!(
            "shift modulus {modulus} but column period {n}"
        )));
    }
    Ok(n)
}

/// `a_{i,j} = c_{j - s_i mod n_2}`; columns with `s_i = *` are constant `fill`.
pub fn compose_2d(
    s: &ShiftSequence,
    c: &PeriodicArray,
    fill: FieldElement,
) -> Result<PeriodicArray> {
    let n2 = require_column(c, s.modulus())?;
    let field = c.field().clone();
    field.element(fill.0 as u64)?;
    let col = c.data();
    PeriodicArray::from_fn(field, vec![s.period(), n2], |idx| {
        match s.entries()[idx[0]] {
            Some(shift) => col[(idx[1] + n2 - shift) % n2],
            None => fill,
        }
    })
}

/// `a_{i,j,k} = c_{k - sa_{i,j} mod n_3}`; starred cells get a constant column.
pub fn compose_3d_shift_array(
    sa: &ShiftArray,
    c: &PeriodicArray,
    fill: FieldElement,
) -> Result<PeriodicArray> {
    let n3 = require_column(c, sa.modulus())?;
    let field = c.field().clone();
    field.element(fill.0 as u64)?;
    let col = c.data();
    let (n1, n2) = sa.dims();
    PeriodicArray::from_fn(field, vec![n1, n2, n3], |idx| {
        match sa.get(idx[0], idx[1]) {
            Some(shift) => col[(idx[2] + n3 - shift) % n3],
            None => fill,
        }
    })
}

/// `a_{i,j,k} = f_{(i,j) - s_k}` with the difference taken mod `(n_1, n_2)`.
pub fn compose_3d_vector_shift(
    s: &VectorShiftSequence,
    floor: &PeriodicArray,
) -> Result<PeriodicArray> {
    if floor.dims() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            got: floor.dims(),
        });
    }
    let (n1, n2) = (floor.periods()[0], floor.periods()[1]);
    if s.moduli() != (n1, n2) {
        return Err(Error::LengthMismatch(format!(
            "shift moduli {:?} but floor periods ({n1}, {n2})",
            s.moduli()
        )));
    }
    PeriodicArray::from_fn(floor.field().clone(), vec![n1, n2, s.period()], |idx| {
        let (si, sj) = s.entries()[idx[2]];
        floor.data()[(idx[0] + n1 - si) % n1 + n1 * ((idx[1] + n2 - sj) % n2)]
    })
}
