//! Exact checks of the upper bounds on `L_n` for 2-D compositions.

use num_rational::Ratio;

use super::{berlekamp_massey, joint_linear_complexity, linear_complexity, EngineConfig};
use crate::constructions::{compose_2d, ShiftSequence};
use crate::error::Result;
use crate::ff::FieldElement;
use crate::mdarray::PeriodicArray;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub l: usize,
    pub ln_array: Ratio<i64>,
    pub ln_column: Ratio<i64>,
    pub jl_n: Ratio<i64>,
    /// Starred columns are zero (or there are no stars).
    pub thm1_hypothesis: bool,
    /// `L_n(A) <= L_n(C)`
    pub thm1_holds: bool,
    /// `L_n(C) - (n_1 - 1)/(n_1 n_2)` when `(y - 1) | m(y)` and `S` is star-free.
    pub refined_bound: Option<Ratio<i64>>,
    pub refined_holds: Option<bool>,
    /// `L_n(A) <= JL_n(A)`
    pub joint_holds: bool,
}

/// Builds `A = compose_2d(s, c, fill)` and evaluates every applicable bound.
pub fn check_bounds(
    s: &ShiftSequence,
    c: &PeriodicArray,
    fill: FieldElement,
    cfg: &EngineConfig,
) -> Result<BoundReport> {
    let a = compose_2d(s, c, fill)?;
    let (n1, n2) = (a.periods()[0] as i64, a.periods()[1] as i64);
    let l = linear_complexity(&a, cfg)?;
    let ln_array = Ratio::new(l as i64, n1 * n2);

    let bm = berlekamp_massey(c);
    let ln_column = Ratio::new(bm.l as i64, n2);
    let field = c.field();
    let m_at_one = bm
        .minimal_polynomial
        .terms()
        .fold(FieldElement::ZERO, |acc, (_, k)| field.add(acc, k));

    let joint = joint_linear_complexity(&a, 0)?;
    let jl_n = Ratio::new(joint.jl as i64, n2);

    let refined_bound =
        (!s.has_stars() && m_at_one.is_zero()).then(|| ln_column - Ratio::new(n1 - 1, n1 * n2));
    Ok(BoundReport {
        l,
        ln_array,
        ln_column,
        jl_n,
        thm1_hypothesis: !s.has_stars() || fill.is_zero(),
        thm1_holds: ln_array <= ln_column,
        refined_holds: refined_bound.map(|b| ln_array <= b),
        refined_bound,
        joint_holds: ln_array <= jl_n,
    })
}
