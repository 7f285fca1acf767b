use std::sync::Arc;

use crate::ff::{Field, FieldElement};
use crate::mdarray::{PeriodicArray, Polynomial};

/// Minimal polynomial of a periodic sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BmResult {
    /// Monic, in the forward-shift convention: `Σ m_i s_{i+β} = 0`.
    pub minimal_polynomial: Polynomial,
    pub l: usize,
}

/// Connection polynomial `C(D) = 1 + c_1 D + ... + c_L D^L` and `L` for a
/// finite sequence, by the Berlekamp-Massey algorithm.
pub fn connection_polynomial(field: &Field, s: &[FieldElement]) -> (Vec<FieldElement>, usize) {
    let mut c = vec![FieldElement::ONE];
    let mut b = vec![FieldElement::ONE];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut last = FieldElement::ONE;
    for n in 0..s.len() {
        let mut d = s[n];
        for i in 1..=l.min(c.len() - 1) {
            d = field.add(d, field.mul(c[i], s[n - i]));
        }
        if d.is_zero() {
            m += 1;
            continue;
        }
        let coef = field.div(d, last).expect("discrepancy base is nonzero");
        let prev = c.clone();
        if c.len() < b.len() + m {
            c.resize(b.len() + m, FieldElement::ZERO);
        }
        for (i, &bi) in b.iter().enumerate() {
            c[i + m] = field.sub(c[i + m], field.mul(coef, bi));
        }
        if 2 * l <= n {
            l = n + 1 - l;
            b = prev;
            last = d;
            m = 1;
        } else {
            m += 1;
        }
    }
    c.resize(l + 1, FieldElement::ZERO);
    (c, l)
}

/// Minimal polynomial coefficients (lowest degree first) of a periodic
/// sequence given by one period, computed on two periods.
pub fn minimal_polynomial_coeffs(field: &Field, period: &[FieldElement]) -> Vec<FieldElement> {
    let doubled: Vec<FieldElement> = period.iter().chain(period).copied().collect();
    let (c, l) = connection_polynomial(field, &doubled);
    // m(x) = x^L C(1/x)
    (0..=l).map(|i| c[l - i]).collect()
}

pub fn berlekamp_massey(s: &PeriodicArray) -> BmResult {
    assert_eq!(
        s.dims(),
        1,
        "Berlekamp-Massey takes a one-dimensional array"
    );
    let coeffs = minimal_polynomial_coeffs(s.field(), s.data());
    let l = coeffs.len() - 1;
    BmResult {
        minimal_polynomial: Polynomial::univariate(Arc::clone(s.field()), &coeffs),
        l,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mdarray::MonomialOrder;

    fn seq(p: u32, v: &[u32]) -> PeriodicArray {
        PeriodicArray::sequence(Arc::new(Field::prime(p).unwrap()), v).unwrap()
    }

    #[test]
    fn example_column_has_complexity_four() {
        assert_eq!(berlekamp_massey(&seq(2, &[0, 0, 1, 1, 0])).l, 4);
    }

    #[test]
    fn zero_sequence() {
        let r = berlekamp_massey(&seq(3, &[0, 0, 0, 0]));
        assert_eq!(r.l, 0);
        assert_eq!(r.minimal_polynomial.display(MonomialOrder::Grlex), "1");
    }

    #[test]
    fn sequence_011() {
        let s = seq(2, &[0, 1, 1]);
        let r = berlekamp_massey(&s);
        assert_eq!(r.l, 2);
        assert_eq!(
            r.minimal_polynomial.display(MonomialOrder::Grlex),
            "x^2 + x + 1"
        );
        assert!(s.is_valid(&r.minimal_polynomial).unwrap());
    }

    // Exhaustive oracle: smallest degree d with a monic valid polynomial.
    fn brute_force_l(p: u32, v: &[u32]) -> usize {
        let f = Arc::new(Field::prime(p).unwrap());
        let s = PeriodicArray::sequence(f.clone(), v).unwrap();
        for d in 0..=v.len() {
            let count = (p as usize).pow(d as u32);
            for t in 0..count {
                let mut coeffs: Vec<FieldElement> = Vec::with_capacity(d + 1);
                let mut x = t;
                for _ in 0..d {
                    coeffs.push(FieldElement((x % p as usize) as u32));
                    x /= p as usize;
                }
                coeffs.push(FieldElement::ONE);
                if s.is_valid(&Polynomial::univariate(f.clone(), &coeffs))
                    .unwrap()
                {
                    return d;
                }
            }
        }
        unreachable!("x^n - 1 is always valid")
    }

    #[test]
    fn matches_exhaustive_search() {
        let mut state = 12345u64;
        for p in [2u32, 3, 5] {
            for n in 1..=7 {
                for _ in 0..6 {
                    let v: Vec<u32> = (0..n)
                        .map(|_| {
                            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                            ((state >> 33) % p as u64) as u32
                        })
                        .collect();
                    let r = berlekamp_massey(&seq(p, &v));
                    assert_eq!(r.l, brute_force_l(p, &v), "p={p} seq={v:?}");
                    assert!(seq(p, &v).is_valid(&r.minimal_polynomial).unwrap());
                }
            }
        }
    }

    #[test]
    fn extension_field_sequence() {
        // powers of alpha in F_9 satisfy s_{t+1} = alpha s_t
        let f = Arc::new(Field::new(3, 2, Some(&[2, 2]), None).unwrap());
        let v: Vec<u32> = (0..8).map(|k| f.pow_alpha(k).0).collect();
        let s = PeriodicArray::sequence(f.clone(), &v).unwrap();
        let r = berlekamp_massey(&s);
        assert_eq!(r.l, 1);
        assert!(s.is_valid(&r.minimal_polynomial).unwrap());
    }
}
