//! Rank of the multidimensional circulant matrix `M[β][e] = a_{e+β}`.
//!
//! A box-supported polynomial `f` is valid iff `M f = 0`, so the rank of `M`
//! is the dimension of the quotient by `Val(A)`, which is `L(A)`. This is
//! kept separate from the staircase engine so the two can check each other.

use super::{check_cap, EngineConfig};
use crate::error::Result;
use crate::ff::{Field, FieldElement};
use crate::mdarray::PeriodicArray;

fn materialize(a: &PeriodicArray) -> Vec<Vec<u32>> {
    let boxes: Vec<Vec<usize>> = a.box_indices().collect();
    let mut shifted = vec![0usize; a.dims()];
    boxes
        .iter()
        .map(|beta| {
            boxes
                .iter()
                .map(|e| {
                    for k in 0..shifted.len() {
                        shifted[k] = e[k] + beta[k];
                    }
                    a.data()[a.flat_index(&shifted)].0
                })
                .collect()
        })
        .collect()
}

/// Gaussian elimination with field operations on plain encodings.
pub fn rank_generic(field: &Field, mut m: Vec<Vec<u32>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let inv = field
            .inv(FieldElement(m[rank][col]))
            .expect("pivot nonzero");
        let pivot: Vec<u32> = m[rank]
            .iter()
            .map(|&v| field.mul(FieldElement(v), inv).0)
            .collect();
        for row in m.iter_mut().skip(rank + 1) {
            let c = row[col];
            if c == 0 {
                continue;
            }
            let factor = field.neg(FieldElement(c));
            for (x, &y) in row.iter_mut().zip(&pivot).skip(col) {
                if y != 0 {
                    *x = field
                        .add(FieldElement(*x), field.mul(factor, FieldElement(y)))
                        .0;
                }
            }
        }
        m[rank] = pivot;
        rank += 1;
    }
    rank
}

/// Rank over `F_2` with rows packed into 64-bit words.
pub fn rank_gf2(m: &[Vec<u32>]) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    let words = cols.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = m
        .iter()
        .map(|r| {
            let mut w = vec![0u64; words];
            for (i, &v) in r.iter().enumerate() {
                if v & 1 == 1 {
                    w[i / 64] |= 1 << (i % 64);
                }
            }
            w
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let (k, bit) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][k] & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut() {
            if row[k] & bit != 0 {
                row.iter_mut().zip(pivot).for_each(|(x, y)| *x ^= y);
            }
        }
        rank += 1;
    }
    rank
}

/// `L(A)` as the rank of the circulant matrix of all cyclic shifts of `A`.
pub fn circulant_rank(a: &PeriodicArray, cfg: &EngineConfig) -> Result<usize> {
    check_cap(a, cfg)?;
    let m = materialize(a);
    Ok(if a.field().order() == 2 {
        rank_gf2(&m)
    } else {
        rank_generic(a.field(), m)
    })
}
