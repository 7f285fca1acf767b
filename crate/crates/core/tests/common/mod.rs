#![allow(dead_code)]

use std::sync::Arc;

use mdlc::{Field, FieldElement, PeriodicArray};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn field(p: u32) -> Arc<Field> {
    Arc::new(Field::prime(p).unwrap())
}

/// Periods with `m` coordinates, each at least 1, product at most `max_n`.
pub fn random_periods(rng: &mut impl Rng, m: usize, max_n: usize) -> Vec<usize> {
    loop {
        let limit = match m {
            1 => max_n.min(60),
            2 => 24,
            _ => 9,
        };
        let periods: Vec<usize> = (0..m).map(|_| rng.gen_range(1..=limit)).collect();
        if periods.iter().product::<usize>() <= max_n {
            return periods;
        }
    }
}

/// Uniform entries, or a random block tiled over a divisor of each period,
/// or a sparse array, so that low complexities show up as well.
pub fn random_array(rng: &mut impl Rng, f: Arc<Field>, periods: Vec<usize>) -> PeriodicArray {
    let q = f.order();
    match rng.gen_range(0..3) {
        0 => PeriodicArray::from_fn(f, periods, |_| FieldElement(rng.gen_range(0..q))).unwrap(),
        1 => {
            let block: Vec<usize> = periods
                .iter()
                .map(|&n| *(1..=n).filter(|d| n % d == 0).collect::<Vec<_>>().choose(rng).unwrap())
                .collect();
            let size: usize = block.iter().product();
            let vals: Vec<u32> = (0..size).map(|_| rng.gen_range(0..q)).collect();
            PeriodicArray::from_fn(f, periods, |idx| {
                let mut off = 0;
                for k in (0..idx.len()).rev() {
                    off = off * block[k] + idx[k] % block[k];
                }
                FieldElement(vals[off])
            })
            .unwrap()
        }
        _ => PeriodicArray::from_fn(f, periods, |_| {
            if rng.gen_bool(0.1) {
                FieldElement(rng.gen_range(1..q))
            } else {
                FieldElement(0)
            }
        })
        .unwrap(),
    }
}

pub fn random_any(rng: &mut impl Rng, max_n: usize) -> PeriodicArray {
    let p = *[2u32, 3, 5].choose(rng).unwrap();
    let m = rng.gen_range(1..=3);
    let periods = random_periods(rng, m, max_n);
    random_array(rng, field(p), periods)
}
