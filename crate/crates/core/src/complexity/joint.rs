//! Joint linear complexity of a 2-D array read as a multisequence.

use std::sync::Arc;

use num_rational::Ratio;

use super::bm::minimal_polynomial_coeffs;
use crate::error::{Error, Result};
use crate::ff::{Field, FieldElement};
use crate::mdarray::{PeriodicArray, Polynomial};

type Dense = Vec<FieldElement>;

fn trim(mut a: Dense) -> Dense {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn monic(f: &Field, a: Dense) -> Dense {
    let a = trim(a);
    match a.last() {
        None => a,
        Some(&lc) => {
            let inv = f.inv(lc).unwrap();
            a.into_iter().map(|c| f.mul(c, inv)).collect()
        }
    }
}

fn mul(f: &Field, a: &[FieldElement], b: &[FieldElement]) -> Dense {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![FieldElement::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn divrem(f: &Field, a: &[FieldElement], b: &[FieldElement]) -> (Dense, Dense) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let inv = f.inv(b[db]).unwrap();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![FieldElement::ZERO; r.len() - db];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = f.mul(*r.last().unwrap(), inv);
        q[shift] = c;
        for (k, &bk) in b.iter().enumerate() {
            r[shift + k] = f.sub(r[shift + k], f.mul(c, bk));
        }
        r.pop();
        r = trim(r);
        if r.len() <= db {
            break;
        }
    }
    (trim(q), r)
}

pub(crate) fn gcd(f: &Field, a: &[FieldElement], b: &[FieldElement]) -> Dense {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let (_, r) = divrem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, x)
}

pub(crate) fn lcm(f: &Field, a: &[FieldElement], b: &[FieldElement]) -> Dense {
    let g = gcd(f, a, b);
    let (q, _) = divrem(f, a, &g);
    monic(f, mul(f, &q, b))
}

/// Joint minimal polynomial and its degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JointResult {
    pub polynomial: Polynomial,
    pub jl: usize,
    /// `JL / (length of each sequence)`
    pub normalized: Ratio<u64>,
}

/// Reads the array as the multisequence indexed by coordinate `fold_axis`;
/// each member sequence runs along the other coordinate. The joint minimal
/// polynomial is the LCM of the members' minimal polynomials.
pub fn joint_linear_complexity(a: &PeriodicArray, fold_axis: usize) -> Result<JointResult> {
    if a.dims() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            got: a.dims(),
        });
    }
    if fold_axis > 1 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: fold_axis + 1,
        });
    }
    let along = 1 - fold_axis;
    let field = a.field();
    let mut acc: Dense = vec![FieldElement::ONE];
    for k in 0..a.periods()[fold_axis] {
        let mut fixed = vec![0, 0];
        fixed[fold_axis] = k;
        let line = a.line(along, &fixed);
        let m = minimal_polynomial_coeffs(field, &line);
        acc = lcm(field, &acc, &m);
    }
    let jl = acc.len() - 1;
    let len = a.periods()[along] as u64;
    Ok(JointResult {
        polynomial: Polynomial::univariate(Arc::clone(field), &acc),
        jl,
        normalized: Ratio::new(jl as u64, len),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(v: &[u32]) -> Dense {
        v.iter().map(|&x| FieldElement(x)).collect()
    }

    #[test]
    fn gcd_lcm_over_f2() {
        let f = Field::prime(2).unwrap();
        // (x+1)(x^2+x+1) = x^3 + 1 ; gcd with x^2+1 = (x+1)^2 is x+1
        assert_eq!(gcd(&f, &el(&[1, 0, 0, 1]), &el(&[1, 0, 1])), el(&[1, 1]));
        assert_eq!(
            lcm(&f, &el(&[1, 0, 0, 1]), &el(&[1, 0, 1])),
            el(&[1, 1, 0, 1, 1])
        );
        assert_eq!(lcm(&f, &el(&[1]), &el(&[1, 1])), el(&[1, 1]));
    }

    #[test]
    fn divrem_identity() {
        let f = Field::prime(5).unwrap();
        let a = el(&[3, 1, 4, 1, 2]);
        let b = el(&[2, 0, 3]);
        let (q, r) = divrem(&f, &a, &b);
        let mut back = mul(&f, &q, &b);
        back.resize(a.len(), FieldElement::ZERO);
        for (i, c) in r.iter().enumerate() {
            back[i] = f.add(back[i], *c);
        }
        assert_eq!(back, a);
        assert!(r.len() < b.len());
    }

    #[test]
    fn zero_array_has_joint_complexity_zero() {
        let f = Arc::new(Field::prime(3).unwrap());
        let a = PeriodicArray::zeros(f, vec![4, 5]).unwrap();
        let j = joint_linear_complexity(&a, 0).unwrap();
        assert_eq!(j.jl, 0);
    }

    #[test]
    fn rejects_non_2d() {
        let f = Arc::new(Field::prime(3).unwrap());
        let a = PeriodicArray::zeros(f, vec![4]).unwrap();
        assert!(matches!(
            joint_linear_complexity(&a, 0),
            Err(Error::WrongDimension { .. })
        ));
    }
}
