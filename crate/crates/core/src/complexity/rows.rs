//! Row storage for the elimination in the staircase engine.
//!
//! `F_2` rows are bitsets, `F_3` rows are pairs of bit planes (one plane for
//! entries equal to 1, one for entries equal to 2), and every other field
//! uses one `u32` encoding per entry.

use crate::ff::{Field, FieldElement};

pub(crate) trait RowArith: Sync {
    type Row: Clone + Send;

    fn zero_row(&self, len: usize) -> Self::Row;
    fn get(&self, row: &Self::Row, i: usize) -> u32;
    fn set(&self, row: &mut Self::Row, i: usize, v: u32);
    fn first_nonzero(&self, row: &Self::Row) -> Option<usize>;
    /// `dst += c * src`
    fn axpy(&self, dst: &mut Self::Row, c: u32, src: &Self::Row);
    fn scale(&self, row: &mut Self::Row, c: u32);
    fn neg(&self, c: u32) -> u32;
    fn inv(&self, c: u32) -> u32;

    fn is_zero(&self, row: &Self::Row) -> bool {
        self.first_nonzero(row).is_none()
    }
}

pub(crate) struct Gf2;

impl RowArith for Gf2 {
    type Row = Vec<u64>;

    fn zero_row(&self, len: usize) -> Vec<u64> {
        vec![0; len.div_ceil(64)]
    }

    fn get(&self, row: &Vec<u64>, i: usize) -> u32 {
        ((row[i / 64] >> (i % 64)) & 1) as u32
    }

    fn set(&self, row: &mut Vec<u64>, i: usize, v: u32) {
        let bit = 1u64 << (i % 64);
        if v & 1 == 1 {
            row[i / 64] |= bit;
        } else {
            row[i / 64] &= !bit;
        }
    }

    fn first_nonzero(&self, row: &Vec<u64>) -> Option<usize> {
        row.iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    fn axpy(&self, dst: &mut Vec<u64>, c: u32, src: &Vec<u64>) {
        if c & 1 == 1 {
            dst.iter_mut().zip(src).for_each(|(d, s)| *d ^= s);
        }
    }

    fn scale(&self, row: &mut Vec<u64>, c: u32) {
        if c & 1 == 0 {
            row.iter_mut().for_each(|w| *w = 0);
        }
    }

    fn neg(&self, c: u32) -> u32 {
        c
    }

    fn inv(&self, c: u32) -> u32 {
        c
    }
}

pub(crate) struct Gf3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Planes {
    one: Vec<u64>,
    two: Vec<u64>,
}

impl Gf3 {
    #[inline]
    fn add_words(a1: u64, a2: u64, b1: u64, b2: u64) -> (u64, u64) {
        let t = (a1 | b2) ^ (a2 | b1);
        ((a2 | b2) ^ t, (a1 | b1) ^ t)
    }
}

impl RowArith for Gf3 {
    type Row = Planes;

    fn zero_row(&self, len: usize) -> Planes {
        let w = len.div_ceil(64);
        Planes {
            one: vec![0; w],
            two: vec![0; w],
        }
    }

    fn get(&self, row: &Planes, i: usize) -> u32 {
        let (k, b) = (i / 64, i % 64);
        ((row.one[k] >> b) & 1) as u32 + 2 * ((row.two[k] >> b) & 1) as u32
    }

    fn set(&self, row: &mut Planes, i: usize, v: u32) {
        let (k, bit) = (i / 64, 1u64 << (i % 64));
        row.one[k] &= !bit;
        row.two[k] &= !bit;
        match v % 3 {
            1 => row.one[k] |= bit,
            2 => row.two[k] |= bit,
            _ => {}
        }
    }

    fn first_nonzero(&self, row: &Planes) -> Option<usize> {
        row.one
            .iter()
            .zip(&row.two)
            .enumerate()
            .find(|(_, (a, b))| (**a | **b) != 0)
            .map(|(k, (a, b))| k * 64 + (a | b).trailing_zeros() as usize)
    }

    fn axpy(&self, dst: &mut Planes, c: u32, src: &Planes) {
        let (s1, s2) = match c % 3 {
            0 => return,
            1 => (&src.one, &src.two),
            _ => (&src.two, &src.one),
        };
        for k in 0..dst.one.len() {
            let (x, y) = Self::add_words(dst.one[k], dst.two[k], s1[k], s2[k]);
            dst.one[k] = x;
            dst.two[k] = y;
        }
    }

    fn scale(&self, row: &mut Planes, c: u32) {
        match c % 3 {
            0 => {
                row.one.iter_mut().for_each(|w| *w = 0);
                row.two.iter_mut().for_each(|w| *w = 0);
            }
            1 => {}
            _ => std::mem::swap(&mut row.one, &mut row.two),
        }
    }

    fn neg(&self, c: u32) -> u32 {
        (3 - c % 3) % 3
    }

    fn inv(&self, c: u32) -> u32 {
        c
    }
}

pub(crate) struct Generic<'a>(pub &'a Field);

impl RowArith for Generic<'_> {
    type Row = Vec<u32>;

    fn zero_row(&self, len: usize) -> Vec<u32> {
        vec![0; len]
    }

    fn get(&self, row: &Vec<u32>, i: usize) -> u32 {
        row[i]
    }

    fn set(&self, row: &mut Vec<u32>, i: usize, v: u32) {
        row[i] = v;
    }

    fn first_nonzero(&self, row: &Vec<u32>) -> Option<usize> {
        row.iter().position(|&v| v != 0)
    }

    fn axpy(&self, dst: &mut Vec<u32>, c: u32, src: &Vec<u32>) {
        if c == 0 {
            return;
        }
        let f = self.0;
        let c = FieldElement(c);
        for (d, &s) in dst.iter_mut().zip(src) {
            if s != 0 {
                *d = f.add(FieldElement(*d), f.mul(c, FieldElement(s))).0;
            }
        }
    }

    fn scale(&self, row: &mut Vec<u32>, c: u32) {
        let f = self.0;
        row.iter_mut()
            .for_each(|v| *v = f.mul(FieldElement(*v), FieldElement(c)).0);
    }

    fn neg(&self, c: u32) -> u32 {
        self.0.neg(FieldElement(c)).0
    }

    fn inv(&self, c: u32) -> u32 {
        self.0.inv(FieldElement(c)).expect("pivot is nonzero").0
    }
}
