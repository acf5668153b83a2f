//! Exact rank of sparse integer matrices by fraction-free row reduction.
//!
//! Rows are reduced against an echelon of pivot rows keyed by leading
//! column: `r ← p₀·r − r₀·p`, followed by dividing out the row content, so
//! every intermediate stays integral. Arithmetic runs in `i128` with checked
//! operations and restarts in `BigInt` on the first overflow.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A sparse row: `(column, value)` pairs; order and zero entries are irrelevant.
pub type SparseRow = Vec<(usize, i64)>;

trait Exact: Clone + PartialEq + Zero + Integer + Signed {
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn lift(v: i64) -> Self;
}

impl Exact for i128 {
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn lift(v: i64) -> Self {
        v as i128
    }
}

impl Exact for BigInt {
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn lift(v: i64) -> Self {
        BigInt::from(v)
    }
}

fn normalize<T: Exact>(row: &[(usize, i64)]) -> Vec<(usize, T)> {
    let mut acc: std::collections::BTreeMap<usize, T> = Default::default();
    for &(c, v) in row {
        let e = acc.entry(c).or_insert_with(T::zero);
        *e = e.clone() + T::lift(v);
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

fn primitive<T: Exact>(row: &mut [(usize, T)]) {
    let mut g = T::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if row.first().is_some_and(|(_, v)| v.is_negative()) {
        g = -g;
    }
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = v.div_floor(&g);
        }
    }
}

/// `p₀·r − r₀·p` on sorted sparse rows sharing a leading column.
fn eliminate<T: Exact>(r: &[(usize, T)], p: &[(usize, T)]) -> Option<Vec<(usize, T)>> {
    let (rl, pl) = (&r[0].1, &p[0].1);
    let zero = T::zero();
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (1, 1);
    while i < r.len() || j < p.len() {
        let (c, x, y) = match (r.get(i), p.get(j)) {
            (Some(a), Some(b)) if a.0 == b.0 => {
                i += 1;
                j += 1;
                (a.0, &a.1, &b.1)
            }
            (Some(a), Some(b)) if a.0 < b.0 => {
                i += 1;
                (a.0, &a.1, &zero)
            }
            (Some(a), None) => {
                i += 1;
                (a.0, &a.1, &zero)
            }
            (_, Some(b)) => {
                j += 1;
                (b.0, &zero, &b.1)
            }
            (None, None) => unreachable!(),
        };
        let v = T::mul_sub(pl, x, rl, y)?;
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    Some(out)
}

fn rank_in<T: Exact>(rows: &[SparseRow]) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for raw in rows {
        let mut r = normalize::<T>(raw);
        primitive(&mut r);
        while let Some(&(lead, _)) = r.first() {
            match pivots.get(&lead) {
                Some(p) => {
                    r = eliminate(&r, p)?;
                    primitive(&mut r);
                }
                None => {
                    pivots.insert(lead, r);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

pub(crate) fn rank_i128(rows: &[SparseRow]) -> Option<usize> {
    rank_in::<i128>(rows)
}

pub(crate) fn rank_big(rows: &[SparseRow]) -> usize {
    rank_in::<BigInt>(rows).expect("BigInt elimination cannot overflow")
}

/// Exact rank of a sparse integer matrix.
pub fn exact_rank(rows: &[SparseRow]) -> usize {
    rank_i128(rows).unwrap_or_else(|| rank_big(rows))
}

/// Exact rank of a dense integer matrix.
pub fn exact_rank_dense(rows: &[Vec<i64>]) -> usize {
    let sparse: Vec<SparseRow> =
        rows.iter().map(|r| r.iter().enumerate().filter(|(_, &v)| v != 0).map(|(c, &v)| (c, v)).collect()).collect();
    exact_rank(&sparse)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    // Gaussian elimination over the rationals.
    fn rational_rank(rows: &[Vec<i64>]) -> usize {
        let mut m: Vec<Vec<BigRational>> =
            rows.iter().map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect()).collect();
        let ncols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..ncols {
            let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
            m.swap(rank, p);
            for i in 0..m.len() {
                if i != rank && !m[i][c].is_zero() {
                    let f = &m[i][c] / &m[rank][c];
                    for k in 0..ncols {
                        let d = &f * &m[rank][k];
                        m[i][k] -= d;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn small_cases() {
        assert_eq!(exact_rank_dense(&[]), 0);
        assert_eq!(exact_rank_dense(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(exact_rank_dense(&[vec![1, 1]]), 1);
        assert_eq!(exact_rank_dense(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(exact_rank_dense(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]), 2);
        assert_eq!(exact_rank(&[vec![(3, 1), (3, -1)], vec![(5, 2)]]), 1);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let m = i64::MAX;
        // the third row reduces to (1 − m², 1) and then needs (1 − m²)·m
        let dense = vec![vec![1, m, 0], vec![0, 1, m], vec![m, 1, 1]];
        let rows: Vec<SparseRow> = dense.iter().map(|r| r.iter().copied().enumerate().collect()).collect();
        assert_eq!(rank_i128(&rows), None);
        assert_eq!(exact_rank(&rows), 3);
        assert_eq!(rational_rank(&dense), 3);
        let dependent = vec![vec![1, m, 0], vec![0, 1, m], vec![1, m + 0, 0], vec![m, 1, 1]];
        assert_eq!(exact_rank_dense(&dependent), rational_rank(&dependent));
    }

    proptest! {
        #[test]
        fn agrees_with_rational_elimination(
            rows in prop::collection::vec(prop::collection::vec(-4i64..=4, 5), 0..7)
        ) {
            prop_assert_eq!(exact_rank_dense(&rows), rational_rank(&rows));
        }

        #[test]
        fn zero_one_matrices(rows in prop::collection::vec(prop::collection::vec(0i64..=1, 6), 0..8)) {
            prop_assert_eq!(exact_rank_dense(&rows), rational_rank(&rows));
        }
    }
}
