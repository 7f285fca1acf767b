//! Array constructions: index tables, Legendre arrays, column sequences,
//! shift sequences, and 2-D/3-D composition.
//!
//! The named families built from these pieces:
//!
//! | tag | shift data                         | column / floor          | periods            |
//! |-----|------------------------------------|-------------------------|--------------------|
//! | A1  | shortened Moreno-Maric over `Z_p`  | Legendre column         | `(p, p)`           |
//! | A2  | logarithmic quadratic over `F_q`   | Sidelnikov column       | `(q-1, q-1)`       |
//! | A3  | index table of `F_{p^2}`           | Sidelnikov column       | `(p, p, p^2-1)`    |
//! | A4  | vector sequence from index table   | binary Legendre floor   | `(p, p, p^2-1)`    |
//! | A5  | vector sequence from index table   | ternary Legendre floor  | `(p, p, p^2-1)`    |

mod compose;
mod generators;
mod shift;

pub use compose::{compose_2d, compose_3d_shift_array, compose_3d_vector_shift};
pub use generators::{
    exp_quadratic_shift, index_table, legendre_array_binary, legendre_array_ternary,
    legendre_column, log_quadratic_shift, moreno_maric_alpha, moreno_maric_cycle,
    moreno_maric_field, moreno_maric_prime, sidelnikov_column,
};
pub use shift::{
    read_shift, read_shift_str, vector_shift_from_table, write_shift, write_shift_string, Shift,
    ShiftArray, ShiftData, ShiftSequence, VectorShiftSequence,
};

use crate::error::Result;
use crate::ff::{Field, FieldElement};
use crate::mdarray::PeriodicArray;

/// A composed array together with the column or floor it was built from.
#[derive(Clone, Debug)]
pub struct Composed {
    pub array: PeriodicArray,
    pub reference: PeriodicArray,
}

/// Shortened Moreno-Maric sequence (first primitive root with a full cycle)
/// composed with the Legendre column of `Z_p`.
pub fn a1(p: u32) -> Result<Composed> {
    let f = Field::prime(p)?;
    let alpha = moreno_maric_alpha(&f)?;
    let s = moreno_maric_prime(p, alpha.0)?.shortened();
    let c = legendre_column(p)?;
    Ok(Composed {
        array: compose_2d(&s, &c, FieldElement::ZERO)?,
        reference: c,
    })
}

/// Logarithmic quadratic shift of `a x^2 + b x + c` composed with the
/// Sidelnikov column of the same field; starred columns are zero.
pub fn a2(f: &Field, coeffs: [FieldElement; 3]) -> Result<Composed> {
    let s = log_quadratic_shift(f, coeffs[0], coeffs[1], coeffs[2])?;
    let c = sidelnikov_column(f)?;
    Ok(Composed {
        array: compose_2d(&s, &c, FieldElement::ZERO)?,
        reference: c,
    })
}

/// Coefficients of `x^2 + x + 2 alpha`.
pub fn a2_default_coeffs(f: &Field) -> [FieldElement; 3] {
    [f.one(), f.one(), f.mul(f.from_int(2), f.alpha())]
}

/// Index table of `F_{p^2}` as shift array over the Sidelnikov column.
pub fn a3(f: &Field, fill: FieldElement) -> Result<Composed> {
    let w = index_table(f)?;
    let c = sidelnikov_column(f)?;
    Ok(Composed {
        array: compose_3d_shift_array(&w, &c, fill)?,
        reference: c,
    })
}

/// Vector shift sequence of `F_{p^2}` over the binary Legendre floor.
pub fn a4(f: &Field) -> Result<Composed> {
    let s = vector_shift_from_table(&index_table(f)?)?;
    let floor = legendre_array_binary(f)?;
    Ok(Composed {
        array: compose_3d_vector_shift(&s, &floor)?,
        reference: floor,
    })
}

/// Vector shift sequence of `F_{p^2}` over the ternary Legendre floor.
pub fn a5(f: &Field) -> Result<Composed> {
    let s = vector_shift_from_table(&index_table(f)?)?;
    let floor = legendre_array_ternary(f)?;
    Ok(Composed {
        array: compose_3d_vector_shift(&s, &floor)?,
        reference: floor,
    })
}
