//! Arithmetic in prime fields and their small extensions.
//!
//! Elements are stored by their canonical integer encoding
//! `e = c_0 + c_1 p + ... + c_{r-1} p^{r-1}`, where `c_i` are the coefficients
//! of the element in the polynomial basis `1, x, ..., x^{r-1}` modulo the
//! field's defining polynomial. Multiplication, inversion and discrete
//! logarithms go through precomputed power/log tables of the designated
//! primitive element.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 20;

/// A field element, held as its canonical integer encoding.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn encoding(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Coefficients in the polynomial basis, lowest degree first.
    pub fn coeffs(self, field: &Field) -> Vec<u32> {
        let mut out = Vec::with_capacity(field.r as usize);
        let mut e = self.0;
        for _ in 0..field.r {
            out.push(e % field.p);
            e /= field.p;
        }
        out
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite field `F_{p^r}` with a fixed primitive element.
#[derive(Clone, PartialEq, Eq)]
pub struct Field {
    p: u32,
    r: u32,
    q: u32,
    /// Low-order coefficients of the monic modulus; empty when `r == 1`.
    modulus: Vec<u32>,
    alpha: FieldElement,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("r", &self.r)
            .field("modulus", &self.modulus)
            .field("alpha", &self.alpha.0)
            .finish()
    }
}

/// Splits `q = p^r` with `p` prime, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut rest, mut r) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        r += 1;
    }
    (rest == 1).then_some((p as u32, r))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Multiplies two residue polynomials modulo the monic polynomial whose
/// low-order coefficients are `modulus`.
fn mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let r = modulus.len();
    let mut prod = vec![0u64; 2 * r];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai as u64 * bj as u64) % p as u64;
        }
    }
    // x^r = -(c_0 + c_1 x + ... + c_{r-1} x^{r-1})
    for d in (r..2 * r).rev() {
        let top = prod[d];
        if top == 0 {
            continue;
        }
        prod[d] = 0;
        for (k, &c) in modulus.iter().enumerate() {
            let sub = top * c as u64 % p as u64;
            prod[d - r + k] = (prod[d - r + k] + p as u64 - sub) % p as u64;
        }
    }
    prod.truncate(r);
    prod.into_iter().map(|v| v as u32).collect()
}

fn digits(mut e: u32, p: u32, r: u32) -> Vec<u32> {
    (0..r)
        .map(|_| {
            let d = e % p;
            e /= p;
            d
        })
        .collect()
}

fn encode(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Powers of `alpha` in the ring `F_p[x]/(modulus)` until they first return
/// to 1. Returns `None` when the walk hits zero or exceeds `q - 1` steps.
fn power_cycle(alpha: u32, modulus: &[u32], p: u32, r: u32, q: u32) -> Option<Vec<u32>> {
    let a = digits(alpha, p, r);
    let mut cur = digits(1, p, r);
    let mut out = Vec::new();
    loop {
        let e = encode(&cur, p);
        if e == 0 || out.len() >= (q - 1) as usize {
            return None;
        }
        out.push(e);
        cur = if r == 1 {
            vec![(cur[0] as u64 * alpha as u64 % p as u64) as u32]
        } else {
            mul_mod(&cur, &a, modulus, p)
        };
        if encode(&cur, p) == 1 {
            return Some(out);
        }
    }
}

/// Trial division by every monic polynomial of degree `1..=r/2`.
pub fn is_irreducible(p: u32, modulus: &[u32]) -> bool {
    let r = modulus.len();
    if r <= 1 {
        return true;
    }
    let mut f: Vec<u32> = modulus.to_vec();
    f.push(1);
    for deg in 1..=r / 2 {
        let count = (p as u64).pow(deg as u32);
        for t in 0..count {
            let mut g: Vec<u32> = digits(t as u32, p, deg as u32);
            g.push(1);
            if poly_rem(&f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_rem(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    // g monic
    let mut rem = f.to_vec();
    let dg = g.len() - 1;
    while rem.len() > dg {
        let top = *rem.last().unwrap() as u64;
        let shift = rem.len() - 1 - dg;
        if top != 0 {
            for (k, &c) in g.iter().enumerate() {
                let sub = top * c as u64 % p as u64;
                rem[shift + k] = ((rem[shift + k] as u64 + p as u64 - sub) % p as u64) as u32;
            }
        }
        rem.pop();
    }
    rem
}

impl Field {
    /// Builds `F_{p^r}`.
    ///
    /// Without a modulus, the lexicographically smallest coefficient tuple
    /// `(c_0, ..., c_{r-1})` whose polynomial has `x` as a primitive root is
    /// chosen. Without `alpha`, the class of `x` is used when it is
    /// primitive, otherwise the smallest primitive encoding. For `r == 1`
    /// the default is the smallest primitive root mod `p`.
    pub fn new(p: u32, r: u32, modulus: Option<&[u32]>, alpha: Option<u32>) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if r == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u64).checked_pow(r).filter(|&q| q <= MAX_ORDER);
        let q = q.ok_or(Error::FieldTooLarge { p, r })? as u32;

        let modulus: Vec<u32> = match modulus {
            _ if r == 1 => {
                if let Some(m) = modulus {
                    if m.len() > 1 {
                        return Err(Error::ModulusLength {
                            expected: 1,
                            got: m.len(),
                        });
                    }
                }
                Vec::new()
            }
            Some(m) => {
                if m.len() != r as usize {
                    return Err(Error::ModulusLength {
                        expected: r as usize,
                        got: m.len(),
                    });
                }
                if let Some(&c) = m.iter().find(|&&c| c >= p) {
                    return Err(Error::ModulusCoefficient(c));
                }
                if !is_irreducible(p, m) {
                    return Err(Error::ReducibleModulus(m.to_vec()));
                }
                m.to_vec()
            }
            None => Self::default_modulus(p, r, q)?,
        };

        let x = if r == 1 { None } else { Some(p) };
        let (alpha, exp) = match alpha {
            Some(a) => {
                if a >= q {
                    return Err(Error::ElementOutOfRange {
                        element: a as u64,
                        order: q,
                    });
                }
                let exp = power_cycle(a, &modulus, p, r, q)
                    .filter(|e| e.len() == (q - 1) as usize)
                    .ok_or(Error::NotPrimitive(a))?;
                (a, exp)
            }
            None => {
                let candidates = x.into_iter().chain(1..q);
                let mut found = None;
                for a in candidates {
                    if let Some(e) = power_cycle(a, &modulus, p, r, q) {
                        if e.len() == (q - 1) as usize {
                            found = Some((a, e));
                            break;
                        }
                    }
                }
                found.ok_or_else(|| Error::ReducibleModulus(modulus.clone()))?
            }
        };

        let mut log = vec![u32::MAX; q as usize];
        for (k, &e) in exp.iter().enumerate() {
            log[e as usize] = k as u32;
        }
        Ok(Field {
            p,
            r,
            q,
            modulus,
            alpha: FieldElement(alpha),
            exp,
            log,
        })
    }

    /// Prime field `F_p` with its default primitive root.
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, None, None)
    }

    fn default_modulus(p: u32, r: u32, q: u32) -> Result<Vec<u32>> {
        // c_0 is the most significant position of the lexicographic order
        for t in 0..q {
            let mut m = digits(t, p, r);
            m.reverse();
            if m[0] == 0 {
                continue;
            }
            if let Some(e) = power_cycle(p, &m, p, r, q) {
                if e.len() == (q - 1) as usize {
                    return Ok(m);
                }
            }
        }
        Err(Error::NoPrimitiveModulus { p, r })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.r
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn alpha(&self) -> FieldElement {
        self.alpha
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// Checks that an encoding names an element of this field.
    pub fn element(&self, e: u64) -> Result<FieldElement> {
        if e < self.q as u64 {
            Ok(FieldElement(e as u32))
        } else {
            Err(Error::ElementOutOfRange {
                element: e,
                order: self.q,
            })
        }
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.r as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::ElementOutOfRange {
                element: encode(coeffs, self.p) as u64,
                order: self.q,
            });
        }
        Ok(FieldElement(encode(coeffs, self.p)))
    }

    /// Image of an integer under `Z -> F_p ⊆ F_q`.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.r == 1 {
            let s = a.0 + b.0;
            return FieldElement(if s >= self.p { s - self.p } else { s });
        }
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0;
        let mut place = 1;
        while x > 0 || y > 0 {
            out += (x % self.p + y % self.p) % self.p * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.r == 1 {
            return FieldElement(if a.0 == 0 { 0 } else { self.p - a.0 });
        }
        if self.p == 2 {
            return a;
        }
        let mut x = a.0;
        let mut out = 0;
        let mut place = 1;
        while x > 0 {
            out += (self.p - x % self.p) % self.p * place;
            x /= self.p;
            place *= self.p;
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        if self.r == 1 {
            return FieldElement((a.0 as u64 * b.0 as u64 % self.p as u64) as u32);
        }
        let k = self.log[a.0 as usize] as u64 + self.log[b.0 as usize] as u64;
        FieldElement(self.exp[(k % (self.q as u64 - 1)) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::InverseOfZero);
        }
        let k = self.log[a.0 as usize];
        Ok(FieldElement(
            self.exp[((self.q - 1 - k) % (self.q - 1)) as usize],
        ))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `alpha^k`, with `k` reduced mod `q - 1`.
    pub fn pow_alpha(&self, k: i64) -> FieldElement {
        FieldElement(self.exp[k.rem_euclid(self.q as i64 - 1) as usize])
    }

    pub fn pow(&self, a: FieldElement, k: u64) -> FieldElement {
        if k == 0 {
            return FieldElement::ONE;
        }
        if a.0 == 0 {
            return FieldElement::ZERO;
        }
        let l = self.log[a.0 as usize] as u64 * (k % (self.q as u64 - 1));
        FieldElement(self.exp[(l % (self.q as u64 - 1)) as usize])
    }

    /// Discrete logarithm to the base `alpha`, in `0..q-1`.
    pub fn dlog(&self, a: FieldElement) -> Result<u32> {
        if a.0 == 0 {
            return Err(Error::LogOfZero);
        }
        Ok(self.log[a.0 as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn order_of(&self, a: FieldElement) -> Result<u32> {
        let k = self.dlog(a)?;
        Ok((self.q - 1) / num_integer::gcd(k, self.q - 1))
    }

    pub fn is_primitive(&self, a: FieldElement) -> bool {
        matches!(self.order_of(a), Ok(o) if o == self.q - 1)
    }

    /// Whether `a` has a square root in the field. Zero counts as a square.
    pub fn is_square(&self, a: FieldElement) -> bool {
        if a.0 == 0 || self.p == 2 {
            return true;
        }
        self.log[a.0 as usize] % 2 == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> Field {
        Field::new(3, 2, Some(&[2, 2]), None).unwrap()
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(64), Some((2, 6)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn f7_with_alpha_three() {
        let f = Field::new(7, 1, None, Some(3)).unwrap();
        assert_eq!(f.alpha(), FieldElement(3));
        let three = FieldElement(3);
        assert_eq!(f.mul(three, f.inv(three).unwrap()), f.one());
    }

    #[test]
    fn f9_with_modulus_x2_2x_2() {
        let f = f9();
        // class of x is primitive
        assert_eq!(f.alpha(), FieldElement(3));
        assert_eq!(f.pow_alpha(4), FieldElement(2));
        assert_eq!(f.pow_alpha(4).coeffs(&f), vec![2, 0]);
        // alpha + 1 has coeffs [1, 1]
        let a1 = f.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(f.dlog(a1).unwrap(), 2);
    }

    #[test]
    fn f2_is_trivial() {
        let f = Field::prime(2).unwrap();
        assert_eq!(f.alpha(), FieldElement(1));
        assert_eq!(f.dlog(FieldElement(1)).unwrap(), 0);
        assert_eq!(f.order(), 2);
    }

    #[test]
    fn default_f9_modulus_is_x2_x_2() {
        let f = Field::new(3, 2, None, None).unwrap();
        assert_eq!(f.modulus(), &[2, 1]);
    }

    #[test]
    fn default_prime_roots() {
        assert_eq!(Field::prime(7).unwrap().alpha(), FieldElement(3));
        assert_eq!(Field::prime(5).unwrap().alpha(), FieldElement(2));
        assert_eq!(Field::prime(3).unwrap().alpha(), FieldElement(2));
    }

    #[test]
    fn squares() {
        let f7 = Field::prime(7).unwrap();
        assert!(f7.is_square(FieldElement(2)));
        let f5 = Field::prime(5).unwrap();
        assert!(f5.is_square(FieldElement(0)));
        assert!(!f5.is_square(FieldElement(3)));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(
            Field::new(6, 1, None, None).unwrap_err(),
            Error::NotPrime(6)
        );
        assert_eq!(Field::new(3, 0, None, None).unwrap_err(), Error::ZeroDegree);
        // x^2 + 1 over F_2 = (x+1)^2
        assert!(matches!(
            Field::new(2, 2, Some(&[1, 0]), None),
            Err(Error::ReducibleModulus(_))
        ));
        // 2 is not a primitive root mod 7
        assert_eq!(
            Field::new(7, 1, None, Some(2)).unwrap_err(),
            Error::NotPrimitive(2)
        );
        assert!(matches!(
            Field::new(2, 21, None, None),
            Err(Error::FieldTooLarge { .. })
        ));
        let f = Field::prime(5).unwrap();
        assert_eq!(f.inv(FieldElement(0)).unwrap_err(), Error::InverseOfZero);
        assert_eq!(f.dlog(FieldElement(0)).unwrap_err(), Error::LogOfZero);
    }

    #[test]
    fn user_modulus_with_non_primitive_x_picks_another_alpha() {
        // x^2 + 1 over F_3 is irreducible but x has order 4
        let f = Field::new(3, 2, Some(&[1, 0]), None).unwrap();
        assert!(f.is_primitive(f.alpha()));
        assert_ne!(f.alpha(), FieldElement(3));
    }

    #[test]
    fn log_table_round_trip_small_fields() {
        for (p, r) in [
            (2, 1),
            (2, 4),
            (3, 3),
            (5, 2),
            (7, 2),
            (2, 8),
            (11, 2),
            (13, 1),
        ] {
            let f = Field::new(p, r, None, None).unwrap();
            for a in f.elements().skip(1) {
                assert_eq!(f.pow_alpha(f.dlog(a).unwrap() as i64), a);
            }
        }
    }

    #[test]
    fn log_table_round_trip_2_16() {
        let f = Field::new(2, 16, None, None).unwrap();
        for a in f.elements().skip(1) {
            assert_eq!(f.pow_alpha(f.dlog(a).unwrap() as i64), a);
        }
    }

    #[test]
    fn half_of_nonzero_elements_are_squares() {
        for (p, r) in [(3, 1), (5, 1), (3, 2), (7, 2), (5, 3)] {
            let f = Field::new(p, r, None, None).unwrap();
            let count = f.elements().skip(1).filter(|&a| f.is_square(a)).count() as u32;
            assert_eq!(count, (f.order() - 1) / 2);
            // brute-force cross-check
            let squares: std::collections::HashSet<_> = f.elements().map(|b| f.mul(b, b)).collect();
            for a in f.elements() {
                assert_eq!(f.is_square(a), squares.contains(&a));
            }
        }
    }

    #[test]
    fn deterministic_defaults() {
        assert_eq!(
            Field::new(5, 3, None, None).unwrap(),
            Field::new(5, 3, None, None).unwrap()
        );
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn fields() -> Vec<Field> {
            vec![
                Field::prime(2).unwrap(),
                Field::prime(7).unwrap(),
                Field::new(3, 2, Some(&[2, 2]), None).unwrap(),
                Field::new(2, 5, None, None).unwrap(),
                Field::new(5, 2, None, None).unwrap(),
            ]
        }

        proptest! {
            #[test]
            fn field_axioms(idx in 0usize..5, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
                let f = &fields()[idx];
                let q = f.order();
                let (a, b, c) = (FieldElement(a % q), FieldElement(b % q), FieldElement(c % q));
                prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
                if !a.is_zero() {
                    prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
            }
        }
    }
}
