//! Multidimensional linear complexity and the engines that compute it.
//!
//! * [`staircase_groebner`]: delta set and reduced Gröbner basis of `Val(A)`
//!   by ordered linear algebra on shift rows. This is the primary engine.
//! * [`circulant_rank`]: rank of the matrix of all cyclic shifts, an oracle.
//! * [`berlekamp_massey`] and [`unfolded_complexity`]: the 1-D route, usable
//!   directly on sequences or on arrays with coprime periods.

mod bm;
mod bounds;
mod joint;
mod rank;
mod rows;
mod staircase;

use std::fmt::Write as _;

use num_rational::Ratio;

pub use bm::{berlekamp_massey, connection_polynomial, minimal_polynomial_coeffs, BmResult};
pub use bounds::{check_bounds, BoundReport};
pub use joint::{joint_linear_complexity, JointResult};
pub use rank::{circulant_rank, rank_generic, rank_gf2};
pub use staircase::{linear_complexity, staircase_delta, staircase_generic, staircase_groebner};

use crate::error::{Error, Result};
use crate::mdarray::{Exponent, MonomialOrder, PeriodicArray, Polynomial};

/// Default bound on `n_1 ... n_m` for the quadratic-memory engines.
pub const DEFAULT_CAP: usize = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    pub cap: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig { cap: DEFAULT_CAP }
    }
}

pub(crate) fn check_cap(a: &PeriodicArray, cfg: &EngineConfig) -> Result<()> {
    if a.size() > cfg.cap {
        return Err(Error::CapExceeded {
            size: a.size(),
            cap: cfg.cap,
        });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexityResult {
    /// `L(A) = |Δ|`
    pub l: usize,
    /// `L(A) / (n_1 ... n_m)`
    pub normalized: Ratio<u64>,
    /// Sorted increasingly under `order`.
    pub delta_set: Vec<Exponent>,
    /// Reduced basis, sorted by lead under `order`.
    pub groebner_basis: Vec<Polynomial>,
    pub order: MonomialOrder,
}

impl ComplexityResult {
    pub(crate) fn new(
        a: &PeriodicArray,
        delta_set: Vec<Exponent>,
        groebner_basis: Vec<Polynomial>,
        order: MonomialOrder,
    ) -> Self {
        let l = delta_set.len();
        ComplexityResult {
            l,
            normalized: Ratio::new(l as u64, a.size() as u64),
            delta_set,
            groebner_basis,
            order,
        }
    }

    /// Text report: `L=..`, `Ln=../..`, then optionally delta set and basis.
    pub fn report(&self, show_basis: bool) -> String {
        let mut out = format!("L={} Ln={}\n", self.l, fmt_ratio(&self.normalized));
        if show_basis {
            writeln!(out, "order={}", self.order.name()).unwrap();
            let delta: Vec<String> = self.delta_set.iter().map(|e| fmt_exponent(e)).collect();
            writeln!(out, "delta={}", delta.join(" ")).unwrap();
            writeln!(out, "basis:").unwrap();
            for g in &self.groebner_basis {
                writeln!(out, "  {}", g.display(self.order)).unwrap();
            }
        }
        out
    }
}

pub fn fmt_ratio<T: std::fmt::Display + Clone + num_integer::Integer>(r: &Ratio<T>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn fmt_exponent(e: &[usize]) -> String {
    let parts: Vec<String> = e.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Berlekamp-Massey complexity of the CRT unfolding of `A`.
pub fn unfolded_complexity(a: &PeriodicArray) -> Result<usize> {
    Ok(berlekamp_massey(&a.unfold()?).l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::{Field, FieldElement};
    use std::sync::Arc;

    #[test]
    fn zero_ratio_prints_reduced() {
        let f = Arc::new(Field::prime(2).unwrap());
        let a = PeriodicArray::zeros(f, vec![3, 2]).unwrap();
        let r = staircase_groebner(&a, MonomialOrder::Grlex, &EngineConfig::default()).unwrap();
        assert_eq!(r.report(false), "L=0 Ln=0/1\n");
    }

    #[test]
    fn report_lists_basis() {
        let f = Arc::new(Field::prime(2).unwrap());
        let a = PeriodicArray::sequence(f, &[0, 1, 1]).unwrap();
        let r = staircase_groebner(&a, MonomialOrder::Grlex, &EngineConfig::default()).unwrap();
        assert_eq!(
            r.report(true),
            "L=2 Ln=2/3\norder=grlex\ndelta=(0) (1)\nbasis:\n  x^2 + x + 1\n"
        );
    }

    #[test]
    fn unfolded_zero_and_coprimality() {
        let f = Arc::new(Field::prime(3).unwrap());
        let z = PeriodicArray::zeros(f.clone(), vec![4, 5]).unwrap();
        assert_eq!(unfolded_complexity(&z).unwrap(), 0);
        let bad =
            PeriodicArray::from_fn(f, vec![4, 6], |i| FieldElement((i[0] % 3) as u32)).unwrap();
        assert!(matches!(
            unfolded_complexity(&bad),
            Err(Error::NotCoprime(_))
        ));
    }
}
