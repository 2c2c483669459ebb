//! Exact elimination: ranks, Smith normal form, inverses.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::{rational_mod, Scalar};
use super::sparse::SparseLinearMap;
use super::LinAlgError;

/// Scales every column by the lcm of its denominators.
pub fn clear_denominators(map: &SparseLinearMap<BigRational>) -> SparseLinearMap<BigInt> {
    let cols = (0..map.cols())
        .map(|c| {
            let col = map.column(c);
            let l = col.iter().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
            col.iter()
                .map(|(r, v)| (*r, v.numer() * (&l / v.denom())))
                .collect()
        })
        .collect();
    SparseLinearMap::from_sparse_columns(map.rows(), cols)
}

/// Rows of a map as sorted `(col, value)` lists.
fn to_rows<T: Clone>(rows: usize, cols: usize, column: impl Fn(usize) -> Vec<(usize, T)>) -> Vec<Vec<(usize, T)>> {
    let mut out: Vec<Vec<(usize, T)>> = vec![Vec::new(); rows];
    for c in 0..cols {
        for (r, v) in column(c) {
            out[r].push((c, v));
        }
    }
    out
}

/// Pivot with the cheapest Markowitz cost, preferring unit entries.
fn choose_pivot<T>(
    rows: &[Vec<(usize, T)>],
    active: &[bool],
    col_count: &[BTreeSet<usize>],
    is_unit: impl Fn(&T) -> bool,
) -> Option<(usize, usize)> {
    let mut best: Option<((u8, usize), usize, usize)> = None;
    for (r, row) in rows.iter().enumerate() {
        if !active[r] || row.is_empty() {
            continue;
        }
        for (c, v) in row {
            let fill = (row.len() - 1) * (col_count[*c].len() - 1);
            let key = (u8::from(!is_unit(v)), fill);
            if best.as_ref().is_none_or(|(k, _, _)| key < *k) {
                best = Some((key, r, *c));
                if key == (0, 0) {
                    return Some((r, *c));
                }
            }
        }
    }
    best.map(|(_, r, c)| (r, c))
}

/// Replaces `target` by `a*target + b*pivot_row`, updating column membership.
fn update_row<T: Clone>(
    target: &mut Vec<(usize, T)>,
    target_index: usize,
    pivot_row: &[(usize, T)],
    col_rows: &mut [BTreeSet<usize>],
    combine: impl Fn(Option<&T>, Option<&T>) -> Option<T>,
) {
    let old = std::mem::take(target);
    let mut out = Vec::with_capacity(old.len() + pivot_row.len());
    let (mut i, mut j) = (0, 0);
    while i < old.len() || j < pivot_row.len() {
        let (c, x, y) = if j >= pivot_row.len() || (i < old.len() && old[i].0 < pivot_row[j].0) {
            i += 1;
            (old[i - 1].0, Some(&old[i - 1].1), None)
        } else if i >= old.len() || pivot_row[j].0 < old[i].0 {
            j += 1;
            (pivot_row[j - 1].0, None, Some(&pivot_row[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (old[i - 1].0, Some(&old[i - 1].1), Some(&pivot_row[j - 1].1))
        };
        match combine(x, y) {
            Some(v) => {
                if x.is_none() {
                    col_rows[c].insert(target_index);
                }
                out.push((c, v));
            }
            None => {
                if x.is_some() {
                    col_rows[c].remove(&target_index);
                }
            }
        }
    }
    *target = out;
}

fn lookup<T>(row: &[(usize, T)], c: usize) -> Option<&T> {
    row.binary_search_by_key(&c, |(k, _)| *k).ok().map(|k| &row[k].1)
}

/// Rank of an integer matrix by fraction-free elimination with row-content reduction.
pub fn integer_rank(map: &SparseLinearMap<BigInt>) -> usize {
    let mut rows = to_rows(map.rows(), map.cols(), |c| map.column(c).to_vec());
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); map.cols()];
    for (r, row) in rows.iter().enumerate() {
        for (c, _) in row {
            col_rows[*c].insert(r);
        }
    }
    let mut active = vec![true; rows.len()];
    let mut rank = 0;
    while let Some((r, c)) = choose_pivot(&rows, &active, &col_rows, |v: &BigInt| v.abs().is_one()) {
        let pivot_row = std::mem::take(&mut rows[r]);
        let p = lookup(&pivot_row, c).expect("pivot present").clone();
        let unit = p.abs().is_one();
        let targets: Vec<usize> = col_rows[c].iter().copied().filter(|i| *i != r).collect();
        for i in targets {
            let a = lookup(&rows[i], c).expect("column member").clone();
            let mut row = std::mem::take(&mut rows[i]);
            if unit {
                let q = &a * &p;
                update_row(&mut row, i, &pivot_row, &mut col_rows, |x, y| {
                    let v = match (x, y) {
                        (Some(x), Some(y)) => x - &q * y,
                        (Some(x), None) => x.clone(),
                        (None, Some(y)) => -(&q * y),
                        (None, None) => unreachable!(),
                    };
                    (!v.is_zero()).then_some(v)
                });
            } else {
                update_row(&mut row, i, &pivot_row, &mut col_rows, |x, y| {
                    let v = match (x, y) {
                        (Some(x), Some(y)) => &p * x - &a * y,
                        (Some(x), None) => &p * x,
                        (None, Some(y)) => -(&a * y),
                        (None, None) => unreachable!(),
                    };
                    (!v.is_zero()).then_some(v)
                });
                let g = row.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
                if !g.is_zero() && !g.is_one() {
                    for (_, v) in row.iter_mut() {
                        *v = &*v / &g;
                    }
                }
            }
            rows[i] = row;
        }
        for (k, _) in &pivot_row {
            col_rows[*k].remove(&r);
        }
        active[r] = false;
        rank += 1;
    }
    rank
}

/// Rank over `F_p` of a matrix given by columns of residues.
pub fn modular_rank(nrows: usize, columns: &[Vec<(usize, u64)>], p: u64) -> usize {
    let mut rows = to_rows(nrows, columns.len(), |c| {
        columns[c].iter().filter(|(_, v)| v % p != 0).map(|(r, v)| (*r, v % p)).collect()
    });
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); columns.len()];
    for (r, row) in rows.iter().enumerate() {
        for (c, _) in row {
            col_rows[*c].insert(r);
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let mut active = vec![true; rows.len()];
    let mut rank = 0;
    while let Some((r, c)) = choose_pivot(&rows, &active, &col_rows, |_| true) {
        let pivot_row = std::mem::take(&mut rows[r]);
        let pv = *lookup(&pivot_row, c).expect("pivot present");
        let pinv = super::scalar::inverse_mod(pv, p).expect("nonzero residue mod prime");
        let targets: Vec<usize> = col_rows[c].iter().copied().filter(|i| *i != r).collect();
        for i in targets {
            let a = *lookup(&rows[i], c).expect("column member");
            let q = mulmod(a, pinv);
            let mut row = std::mem::take(&mut rows[i]);
            update_row(&mut row, i, &pivot_row, &mut col_rows, |x, y| {
                let x = x.copied().unwrap_or(0);
                let y = y.copied().unwrap_or(0);
                let v = (x + p - mulmod(q, y)) % p;
                (v != 0).then_some(v)
            });
            rows[i] = row;
        }
        for (k, _) in &pivot_row {
            col_rows[*k].remove(&r);
        }
        active[r] = false;
        rank += 1;
    }
    rank
}

/// Rank over `F_p` of a rational matrix; fails if a denominator vanishes mod `p`.
pub fn rank_mod_p(map: &SparseLinearMap<BigRational>, p: u64) -> Result<usize, LinAlgError> {
    let mut cols = Vec::with_capacity(map.cols());
    for c in 0..map.cols() {
        let mut col = Vec::new();
        for (r, v) in map.column(c) {
            let x = rational_mod(v, p).ok_or(LinAlgError::NotReducible { row: *r, col: c, modulus: p })?;
            if x != 0 {
                col.push((*r, x));
            }
        }
        cols.push(col);
    }
    Ok(modular_rank(map.rows(), &cols, p))
}

/// Nonzero invariant factors `d_1 | d_2 | …` of an integer matrix.
pub fn smith_invariant_factors(map: &SparseLinearMap<BigInt>) -> Vec<BigInt> {
    let mut rows = to_rows(map.rows(), map.cols(), |c| map.column(c).to_vec());
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); map.cols()];
    for (r, row) in rows.iter().enumerate() {
        for (c, _) in row {
            col_rows[*c].insert(r);
        }
    }
    let mut active = vec![true; rows.len()];
    let mut diagonal = Vec::new();
    while let Some((r0, c0)) = choose_smith_pivot(&rows, &active, &col_rows) {
        let (r, c) = clear_cross(&mut rows, &mut col_rows, r0, c0);
        let p = lookup(&rows[r], c).expect("pivot present").abs();
        debug_assert_eq!(rows[r].len(), 1);
        debug_assert_eq!(col_rows[c].len(), 1);
        col_rows[c].clear();
        rows[r].clear();
        active[r] = false;
        diagonal.push(p);
    }
    divisibility_chain(diagonal)
}

fn choose_smith_pivot(
    rows: &[Vec<(usize, BigInt)>],
    active: &[bool],
    col_rows: &[BTreeSet<usize>],
) -> Option<(usize, usize)> {
    let mut best: Option<((BigInt, usize), usize, usize)> = None;
    for (r, row) in rows.iter().enumerate() {
        if !active[r] {
            continue;
        }
        for (c, v) in row {
            let key = (v.abs(), (row.len() - 1) * (col_rows[*c].len() - 1));
            if best.as_ref().is_none_or(|(k, _, _)| key < *k) {
                best = Some((key, r, *c));
            }
        }
    }
    best.map(|(_, r, c)| (r, c))
}

/// Row and column operations until the pivot's row and column are otherwise zero.
fn clear_cross(
    rows: &mut [Vec<(usize, BigInt)>],
    col_rows: &mut [BTreeSet<usize>],
    mut r: usize,
    mut c: usize,
) -> (usize, usize) {
    loop {
        let p = lookup(&rows[r], c).expect("pivot present").clone();
        let pivot_row = rows[r].clone();
        let targets: Vec<usize> = col_rows[c].iter().copied().filter(|i| *i != r).collect();
        let mut smaller: Option<(BigInt, usize)> = None;
        for i in targets {
            let a = lookup(&rows[i], c).expect("column member").clone();
            let q = a.div_floor(&p);
            let mut row = std::mem::take(&mut rows[i]);
            update_row(&mut row, i, &pivot_row, col_rows, |x, y| {
                let v = match (x, y) {
                    (Some(x), Some(y)) => x - &q * y,
                    (Some(x), None) => x.clone(),
                    (None, Some(y)) => -(&q * y),
                    (None, None) => unreachable!(),
                };
                (!v.is_zero()).then_some(v)
            });
            if let Some(rem) = lookup(&row, c) {
                if smaller.as_ref().is_none_or(|(m, _)| rem.abs() < *m) {
                    smaller = Some((rem.abs(), i));
                }
            }
            rows[i] = row;
        }
        if let Some((_, i)) = smaller {
            r = i;
            continue;
        }
        // Column c is now clean, so column operations only touch row r.
        let mut smaller: Option<(BigInt, usize)> = None;
        let old = std::mem::take(&mut rows[r]);
        let mut new_row = Vec::with_capacity(old.len());
        for (j, a) in old {
            if j == c {
                new_row.push((j, a));
                continue;
            }
            let rem = a.mod_floor(&p);
            if rem.is_zero() {
                col_rows[j].remove(&r);
            } else {
                if smaller.as_ref().is_none_or(|(m, _)| rem.abs() < *m) {
                    smaller = Some((rem.abs(), j));
                }
                new_row.push((j, rem));
            }
        }
        rows[r] = new_row;
        match smaller {
            Some((_, j)) => c = j,
            None => return (r, c),
        }
    }
}

/// Turns a list of nonzero diagonal entries into the invariant-factor chain.
pub fn divisibility_chain(diagonal: Vec<BigInt>) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = diagonal.into_iter().map(|d| d.abs()).collect();
    out.sort();
    let first = out.iter().position(|d| !d.is_one()).unwrap_or(out.len());
    for i in first..out.len() {
        for j in i + 1..out.len() {
            let g = out[i].gcd(&out[j]);
            let l = &out[i] / &g * &out[j];
            out[i] = g;
            out[j] = l;
        }
    }
    out.sort();
    out
}

/// Two-sided inverse over a field by Gauss–Jordan elimination.
pub fn field_inverse<R: Scalar>(map: &SparseLinearMap<R>) -> Option<SparseLinearMap<R>> {
    let n = map.rows();
    if n != map.cols() {
        return None;
    }
    let mut a = map.to_dense();
    let mut inv = SparseLinearMap::<R>::identity(n).to_dense();
    for col in 0..n {
        let piv = (col..n).find(|r| a[r * n + col].is_unit())?;
        if piv != col {
            for k in 0..n {
                a.swap(piv * n + k, col * n + k);
                inv.swap(piv * n + k, col * n + k);
            }
        }
        let s = a[col * n + col].inverse()?;
        for k in 0..n {
            a[col * n + k] = a[col * n + k].clone() * s.clone();
            inv[col * n + k] = inv[col * n + k].clone() * s.clone();
        }
        for r in 0..n {
            if r == col || a[r * n + col].is_zero() {
                continue;
            }
            let f = a[r * n + col].clone();
            for k in 0..n {
                let ak = a[col * n + k].clone();
                let ik = inv[col * n + k].clone();
                a[r * n + k] = a[r * n + k].clone() - f.clone() * ak;
                inv[r * n + k] = inv[r * n + k].clone() - f.clone() * ik;
            }
        }
    }
    Some(SparseLinearMap::from_dense(n, n, &inv))
}
