//! Delta set and reduced Gröbner basis of the ideal of valid polynomials.
//!
//! The map `x^e -> row(e) = (a_{e+β})_β` over the fundamental box is linear
//! with kernel `Val(A)`. Scanning box exponents in increasing monomial order,
//! an exponent belongs to the delta set exactly when its row is independent
//! of the rows of the delta exponents found before it. Exponents outside the
//! box are never in the delta set because `x^e - x^{e - n_k u_k}` is valid.

use std::collections::HashSet;
use std::sync::Arc;

use super::rows::{Generic, Gf2, Gf3, RowArith};
use super::{check_cap, ComplexityResult, EngineConfig};
use crate::error::Result;
use crate::ff::FieldElement;
use crate::mdarray::{Exponent, MonomialOrder, PeriodicArray, Polynomial};

struct Pivot<R: RowArith> {
    col: usize,
    row: R::Row,
    /// `row = Σ coeffs[j] * row(delta[j])`; empty when no basis is wanted.
    coeffs: Option<R::Row>,
}

struct Echelon<'a, R: RowArith> {
    arith: &'a R,
    size: usize,
    pivots: Vec<Pivot<R>>,
    track: bool,
}

impl<'a, R: RowArith> Echelon<'a, R> {
    /// Reduces `v` against the stored pivots. Returns the residual and the
    /// coefficients `u` with `residual = v + Σ u_j row(delta_j)`.
    fn reduce(&self, mut v: R::Row) -> (R::Row, Option<R::Row>) {
        let mut u = self.track.then(|| self.arith.zero_row(self.size));
        for p in &self.pivots {
            let c = self.arith.get(&v, p.col);
            if c == 0 {
                continue;
            }
            let factor = self.arith.neg(c);
            self.arith.axpy(&mut v, factor, &p.row);
            if let (Some(u), Some(t)) = (u.as_mut(), p.coeffs.as_ref()) {
                self.arith.axpy(u, factor, t);
            }
        }
        (v, u)
    }

    /// Adds a residual known to be nonzero as the row of delta exponent `index`.
    fn push(&mut self, mut v: R::Row, mut u: Option<R::Row>, index: usize) {
        let col = self.arith.first_nonzero(&v).expect("residual is nonzero");
        let s = self.arith.inv(self.arith.get(&v, col));
        self.arith.scale(&mut v, s);
        if let Some(u) = u.as_mut() {
            self.arith.set(u, index, 1);
            self.arith.scale(u, s);
        }
        self.pivots.push(Pivot {
            col,
            row: v,
            coeffs: u,
        });
    }
}

/// Row of `x^e`: entry `β` (in storage order) is `a_{e+β}`.
fn eval_row<R: RowArith>(arith: &R, a: &PeriodicArray, e: &[usize]) -> R::Row {
    let periods = a.periods();
    let data = a.data();
    let mut row = arith.zero_row(a.size());
    let mut beta = vec![0usize; periods.len()];
    for col in 0..a.size() {
        let mut off = 0;
        let mut stride = 1;
        for k in 0..periods.len() {
            off += ((e[k] + beta[k]) % periods[k]) * stride;
            stride *= periods[k];
        }
        let v = data[off].0;
        if v != 0 {
            arith.set(&mut row, col, v);
        }
        for k in 0..periods.len() {
            beta[k] += 1;
            if beta[k] < periods[k] {
                break;
            }
            beta[k] = 0;
        }
    }
    row
}

pub(crate) fn sorted_box(periods: &[usize], order: MonomialOrder) -> Vec<Exponent> {
    let mut exps: Vec<Exponent> = crate::mdarray::BoxIter::new(periods).collect();
    exps.sort_by(|a, b| order.cmp(a, b));
    exps
}

/// Minimal exponents outside a downward-closed set.
pub(crate) fn border_generators(delta: &[Exponent], nvars: usize) -> Vec<Exponent> {
    if delta.is_empty() {
        return vec![vec![0; nvars]];
    }
    let set: HashSet<&Exponent> = delta.iter().collect();
    let mut out: HashSet<Exponent> = HashSet::new();
    for d in delta {
        for i in 0..nvars {
            let mut c = d.clone();
            c[i] += 1;
            if set.contains(&c) {
                continue;
            }
            let minimal = (0..nvars).filter(|&k| c[k] > 0).all(|k| {
                let mut below = c.clone();
                below[k] -= 1;
                set.contains(&below)
            });
            if minimal {
                out.insert(c);
            }
        }
    }
    out.into_iter().collect()
}

fn run<R: RowArith>(
    arith: &R,
    a: &PeriodicArray,
    order: MonomialOrder,
    with_basis: bool,
) -> (Vec<Exponent>, Vec<Polynomial>) {
    let n = a.size();
    let mut ech = Echelon {
        arith,
        size: n,
        pivots: Vec::new(),
        track: with_basis,
    };
    let mut delta: Vec<Exponent> = Vec::new();
    for e in sorted_box(a.periods(), order) {
        let (v, u) = ech.reduce(eval_row(arith, a, &e));
        if !arith.is_zero(&v) {
            ech.push(v, u, delta.len());
            delta.push(e);
        }
    }
    if !with_basis {
        return (delta, Vec::new());
    }

    let field: Arc<_> = a.field().clone();
    let m = a.dims();
    let mut basis = Vec::new();
    for c in border_generators(&delta, m) {
        let (v, u) = ech.reduce(eval_row(arith, a, &c));
        debug_assert!(arith.is_zero(&v), "box rows lie in the span of delta rows");
        let u = u.expect("tracking enabled");
        // row(c) + Σ u_j row(delta_j) = 0, so x^c + Σ u_j x^{delta_j} is valid
        let mut terms = vec![(c.clone(), FieldElement::ONE)];
        for (j, d) in delta.iter().enumerate() {
            let coeff = arith.get(&u, j);
            if coeff != 0 {
                terms.push((d.clone(), FieldElement(coeff)));
            }
        }
        basis.push(Polynomial::from_terms(field.clone(), m, terms));
    }
    basis.sort_by(|f, g| order.cmp(f.lead(order).unwrap(), g.lead(order).unwrap()));
    (delta, basis)
}

fn dispatch(
    a: &PeriodicArray,
    order: MonomialOrder,
    with_basis: bool,
) -> (Vec<Exponent>, Vec<Polynomial>) {
    match a.field().order() {
        2 => run(&Gf2, a, order, with_basis),
        3 => run(&Gf3, a, order, with_basis),
        _ => run(&Generic(a.field()), a, order, with_basis),
    }
}

/// Full result: delta set plus the reduced Gröbner basis of `Val(A)`.
pub fn staircase_groebner(
    a: &PeriodicArray,
    order: MonomialOrder,
    cfg: &EngineConfig,
) -> Result<ComplexityResult> {
    check_cap(a, cfg)?;
    let (mut delta, basis) = dispatch(a, order, true);
    delta.sort_by(|x, y| order.cmp(x, y));
    Ok(ComplexityResult::new(a, delta, basis, order))
}

/// Delta set only, skipping the coefficient bookkeeping needed for the basis.
pub fn staircase_delta(
    a: &PeriodicArray,
    order: MonomialOrder,
    cfg: &EngineConfig,
) -> Result<Vec<Exponent>> {
    check_cap(a, cfg)?;
    Ok(dispatch(a, order, false).0)
}

/// `L(A)` under the default order.
pub fn linear_complexity(a: &PeriodicArray, cfg: &EngineConfig) -> Result<usize> {
    Ok(staircase_delta(a, MonomialOrder::Grlex, cfg)?.len())
}

/// Staircase on the unpacked path regardless of the field; used to check
/// that the packed kernels give identical results.
pub fn staircase_generic(
    a: &PeriodicArray,
    order: MonomialOrder,
) -> (Vec<Exponent>, Vec<Polynomial>) {
    run(&Generic(a.field()), a, order, true)
}
