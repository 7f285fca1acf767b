//! Index tables, Legendre/Sidelnikov columns and shift sequence generators.

use std::sync::Arc;

use super::shift::{ShiftArray, ShiftSequence};
use crate::error::{Error, Result};
use crate::ff::{is_prime, Field, FieldElement};
use crate::mdarray::PeriodicArray;

fn require_degree_two(f: &Field) -> Result<()> {
    if f.degree() != 2 {
        return Err(Error::WrongDegree {
            expected: 2,
            got: f.degree(),
        });
    }
    Ok(())
}

fn gf(p: u32) -> Arc<Field> {
    Arc::new(Field::prime(p).expect("small prime"))
}

/// `p x p` table with `w_{i,j} = k` when `alpha^k = i alpha + j`, and `*`
/// at `(0, 0)`.
pub fn index_table(f: &Field) -> Result<ShiftArray> {
    require_degree_two(f)?;
    let p = f.characteristic() as usize;
    let alpha = f.alpha();
    let mut entries = Vec::with_capacity(p * p);
    for j in 0..p {
        for i in 0..p {
            let el = f.add(f.mul(f.from_int(i as i64), alpha), f.from_int(j as i64));
            entries.push(if el.is_zero() {
                None
            } else {
                Some(f.dlog(el)? as usize)
            });
        }
    }
    ShiftArray::new((p, p), (f.order() - 1) as usize, entries)
}

fn legendre_array(f: &Field, target: u32, map: impl Fn(usize) -> u32) -> Result<PeriodicArray> {
    let w = index_table(f)?;
    let p = f.characteristic() as usize;
    PeriodicArray::from_fn(gf(target), vec![p, p], |idx| {
        FieldElement(w.get(idx[0], idx[1]).map_or(0, &map))
    })
}

/// Binary Legendre array: `f_{0,0} = 0`, otherwise `w_{i,j} mod 2`.
pub fn legendre_array_binary(f: &Field) -> Result<PeriodicArray> {
    legendre_array(f, 2, |w| (w % 2) as u32)
}

/// Ternary Legendre array: `f_{0,0} = 0`, even `w` to 1 and odd `w` to -1.
pub fn legendre_array_ternary(f: &Field) -> Result<PeriodicArray> {
    legendre_array(f, 3, |w| if w % 2 == 0 { 1 } else { 2 })
}

/// Binary Legendre sequence of period `p`: `c_i = 1` iff `i` is a nonzero
/// square mod `p`.
pub fn legendre_column(p: u32) -> Result<PeriodicArray> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if p == 2 {
        return Err(Error::EvenOrder(p));
    }
    let mut squares = vec![false; p as usize];
    for b in 1..p as u64 {
        squares[(b * b % p as u64) as usize] = true;
    }
    let values: Vec<u32> = squares.iter().map(|&s| s as u32).collect();
    PeriodicArray::sequence(gf(2), &values)
}

/// Binary Sidelnikov sequence of period `q - 1`: `c_i = 1` iff
/// `alpha^i + 1` is a nonsquare.
pub fn sidelnikov_column(f: &Field) -> Result<PeriodicArray> {
    if f.order() % 2 == 0 {
        return Err(Error::EvenOrder(f.order()));
    }
    let values: Vec<u32> = (0..f.order() as i64 - 1)
        .map(|i| !f.is_square(f.add(f.pow_alpha(i), f.one())) as u32)
        .collect();
    PeriodicArray::sequence(gf(2), &values)
}

fn order_mod(a: u64, p: u64) -> u64 {
    let mut x = a % p;
    let mut k = 1;
    while x != 1 {
        if x == 0 || k > p {
            return 0;
        }
        x = x * a % p;
        k += 1;
    }
    k
}

/// `S = f(alpha^0), ..., f(alpha^{p-2})` for `f = a x^2 + b x + c` over `Z_p`.
pub fn exp_quadratic_shift(p: u32, alpha: u32, a: u32, b: u32, c: u32) -> Result<ShiftSequence> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let p = p as u64;
    if a as u64 % p == 0 {
        return Err(Error::ZeroLeadingCoefficient);
    }
    if order_mod(alpha as u64, p) != p - 1 {
        return Err(Error::NotPrimitive(alpha));
    }
    let (a, b, c) = (a as u64 % p, b as u64 % p, c as u64 % p);
    let mut x = 1u64;
    let mut values = Vec::with_capacity(p as usize - 1);
    for _ in 0..p - 1 {
        values.push(((a * x % p * x + b * x + c) % p) as usize);
        x = x * alpha as u64 % p;
    }
    ShiftSequence::from_values(p as usize, &values)
}

/// `s_i = log_alpha f(alpha^i)` for `i = 0..q-2`, with `*` where `f` vanishes.
pub fn log_quadratic_shift(
    f: &Field,
    a: FieldElement,
    b: FieldElement,
    c: FieldElement,
) -> Result<ShiftSequence> {
    if a.is_zero() {
        return Err(Error::ZeroLeadingCoefficient);
    }
    for e in [a, b, c] {
        f.element(e.0 as u64)?;
    }
    let n = f.order() as usize - 1;
    let entries = (0..n as i64)
        .map(|i| {
            let x = f.pow_alpha(i);
            let v = f.add(f.add(f.mul(a, f.mul(x, x)), f.mul(b, x)), c);
            f.dlog(v).ok().map(|k| k as usize)
        })
        .collect();
    ShiftSequence::new(n, entries)
}

/// Orbit `0, g(0), ..., g^{q-1}(0)` of `g(x) = alpha / (x + 1)` on
/// `F_q ∪ {∞}`, verified to be a single cycle of length `q + 1`; the point
/// at infinity is the final step and is not returned.
pub fn moreno_maric_cycle(f: &Field, alpha: FieldElement) -> Result<Vec<FieldElement>> {
    let q = f.order() as usize;
    let mut orbit = vec![FieldElement::ZERO];
    let mut cur = Some(FieldElement::ZERO);
    loop {
        // None is the point at infinity; g(∞) = 0
        let next = match cur {
            None => Some(FieldElement::ZERO),
            Some(x) => {
                let d = f.add(x, f.one());
                if d.is_zero() {
                    None
                } else {
                    Some(f.div(alpha, d)?)
                }
            }
        };
        if next == Some(FieldElement::ZERO) {
            let cycle = orbit.len() + usize::from(cur.is_none());
            if cycle != q + 1 || cur.is_some() {
                return Err(Error::ShortCycle {
                    cycle,
                    expected: q + 1,
                });
            }
            orbit.truncate(q);
            return Ok(orbit);
        }
        if let Some(x) = next {
            orbit.push(x);
            if orbit.len() > q {
                return Err(Error::ShortCycle {
                    cycle: orbit.len(),
                    expected: q + 1,
                });
            }
        }
        cur = next;
    }
}

/// Moreno-Maric sequence over `Z_p`: `0, g(0), ..., g^{p-1}(0), *`.
pub fn moreno_maric_prime(p: u32, alpha: u32) -> Result<ShiftSequence> {
    let f = Field::prime(p)?;
    let alpha = f.element(alpha as u64)?;
    let orbit = moreno_maric_cycle(&f, alpha)?;
    let mut entries: Vec<Option<usize>> = orbit.iter().map(|x| Some(x.0 as usize)).collect();
    entries.push(None);
    ShiftSequence::new(p as usize, entries)
}

/// Moreno-Maric sequence over `F_q`: `*, log g(0), ..., log g^{q-1}(0), *`.
pub fn moreno_maric_field(f: &Field, alpha: FieldElement) -> Result<ShiftSequence> {
    let orbit = moreno_maric_cycle(f, alpha)?;
    let mut entries = vec![None];
    for x in &orbit[1..] {
        entries.push(Some(f.dlog(*x)? as usize));
    }
    entries.push(None);
    ShiftSequence::new(f.order() as usize - 1, entries)
}

/// First primitive element, in encoding order, whose map has a full cycle.
pub fn moreno_maric_alpha(f: &Field) -> Result<FieldElement> {
    f.elements()
        .filter(|&a| f.is_primitive(a))
        .find(|&a| moreno_maric_cycle(f, a).is_ok())
        .ok_or(Error::NoFullCycle(f.order() as usize + 1))
}
