//! Exact combinatorial matrices: the h-vs-k inclusion matrix, the
//! balanced-cut crossing matrix M and its anchored submatrix N, with rank
//! computed in exact arithmetic.
//!
//! Rank is a theorem, not an estimate: the primary route is fraction-free
//! integer elimination (promoted to big integers on overflow), always
//! cross-checked by elimination modulo two random 62-bit primes. A modular
//! rank equal to min(rows, cols) is itself an exact certificate (rank can
//! only drop modulo a prime), which is what makes the large full-rank
//! sweeps cheap.

use crate::combin::{binomial, multinomial, subsets_colex, AssignmentStream};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Row/column labels of a combinatorial matrix.
#[derive(Clone, Debug, PartialEq)]
pub enum Labels {
    /// k-subsets of [t], colexicographic order.
    Subsets(Vec<Vec<usize>>),
    /// Ordered balanced cuts as assignment vectors, lexicographic order.
    Cuts(Vec<Vec<u8>>),
    /// Plain indices (used after row dedup).
    Indices(usize),
}

impl Labels {
    pub fn len(&self) -> usize {
        match self {
            Labels::Subsets(v) => v.len(),
            Labels::Cuts(v) => v.len(),
            Labels::Indices(n) => *n,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn describe(&self, i: usize) -> String {
        match self {
            Labels::Subsets(v) => format!(
                "{{{}}}",
                v[i].iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            Labels::Cuts(v) => v[i]
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(""),
            Labels::Indices(_) => i.to_string(),
        }
    }
}

/// Dense integer matrix with combinatorial labels; entries of the built-in
/// families are 0/1, which machine integers represent exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix {
    pub rows: usize,
    pub cols: usize,
    /// Row-major entries.
    pub entries: Vec<i64>,
    pub row_labels: Labels,
    pub col_labels: Labels,
    /// Set when the matrix was built outside the stated parameter range.
    pub note: Option<String>,
}

/// Materialized matrices are capped at this many entries.
pub const MATERIALIZE_LIMIT: u128 = 200_000_000;

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
            row_labels: Labels::Indices(rows),
            col_labels: Labels::Indices(cols),
            note: None,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.entries[r * self.cols + c] = v;
    }

    /// Removes duplicate rows, keeping the first occurrence of each
    /// distinct row (rank is unchanged).
    pub fn dedup_rows(&self) -> ExactMatrix {
        let mut seen: std::collections::HashSet<&[i64]> = std::collections::HashSet::new();
        let mut kept_rows: Vec<usize> = Vec::new();
        for r in 0..self.rows {
            let row = &self.entries[r * self.cols..(r + 1) * self.cols];
            if seen.insert(row) {
                kept_rows.push(r);
            }
        }
        let mut entries = Vec::with_capacity(kept_rows.len() * self.cols);
        for &r in &kept_rows {
            entries.extend_from_slice(&self.entries[r * self.cols..(r + 1) * self.cols]);
        }
        ExactMatrix {
            rows: kept_rows.len(),
            cols: self.cols,
            entries,
            row_labels: Labels::Indices(kept_rows.len()),
            col_labels: self.col_labels.clone(),
            note: self.note.clone(),
        }
    }

    /// Sparse triplet text: one `row_label col_label value` line per
    /// nonzero entry, row-major.
    pub fn to_triplets(&self) -> String {
        let mut out = String::new();
        use std::fmt::Write as _;
        let _ = writeln!(out, "{} {}", self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if v != 0 {
                    let _ = writeln!(
                        out,
                        "{} {} {}",
                        self.row_labels.describe(r),
                        self.col_labels.describe(c),
                        v
                    );
                }
            }
        }
        out
    }

    /// Matrix-vector product over f64 (used for density-vector identities).
    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = 0.0;
                for c in 0..self.cols {
                    acc += self.get(r, c) as f64 * v[c];
                }
                acc
            })
            .collect()
    }
}

/// The h-vs-k inclusion matrix of [t]: rows are h-subsets, columns are
/// k-subsets, entry (I,J) = 1 iff J is a subset of I. Stated range is
/// t > h >= k >= 2; k = 1 is accepted with a note.
pub fn inclusion_matrix(t: usize, h: usize, k: usize) -> Result<ExactMatrix> {
    if k == 0 {
        return Err(Error::InvalidParam("k must be >= 1".into()));
    }
    if h < k {
        return Err(Error::InvalidParam(format!("need h >= k, got h = {h}, k = {k}")));
    }
    if t <= h {
        return Err(Error::InvalidParam(format!("need t > h, got t = {t}, h = {h}")));
    }
    if t > 63 {
        return Err(Error::InvalidParam("t too large for subset masks".into()));
    }
    let rows_subs = subsets_colex(t, h);
    let cols_subs = subsets_colex(t, k);
    let row_masks: Vec<u64> = rows_subs.iter().map(|s| mask_of(s)).collect();
    let col_masks: Vec<u64> = cols_subs.iter().map(|s| mask_of(s)).collect();
    let mut m = ExactMatrix::zero(rows_subs.len(), cols_subs.len());
    for (r, &rm) in row_masks.iter().enumerate() {
        for (c, &cm) in col_masks.iter().enumerate() {
            if cm & rm == cm {
                m.entries[r * m.cols + c] = 1;
            }
        }
    }
    m.row_labels = Labels::Subsets(rows_subs);
    m.col_labels = Labels::Subsets(cols_subs);
    if k < 2 {
        m.note = Some("k below stated range (k >= 2)".into());
    }
    Ok(m)
}

fn mask_of(subset: &[usize]) -> u64 {
    subset.iter().fold(0u64, |acc, &v| acc | (1u64 << v))
}

fn check_crossing_params(t: usize, r: usize, k: usize, budget: u128) -> Result<Vec<usize>> {
    if r == 0 || t % r != 0 {
        return Err(Error::InvalidParam(format!("r = {r} must divide t = {t}")));
    }
    if k < 2 || k > t {
        return Err(Error::InvalidParam(format!("k = {k} out of range")));
    }
    let sizes = vec![t / r; r];
    let count = multinomial(&sizes);
    if count > budget {
        return Err(Error::BudgetExceeded {
            what: "balanced cut enumeration",
            count,
            budget,
        });
    }
    Ok(sizes)
}

/// Crossing matrix M: rows are ordered balanced r-cuts of [t]
/// (lexicographic assignment order), columns are k-subsets of [t]
/// (colex order); entry 1 iff the subset has at most one element per part.
pub fn crossing_matrix(t: usize, r: usize, k: usize, budget: u128) -> Result<ExactMatrix> {
    let sizes = check_crossing_params(t, r, k, budget)?;
    let rows = multinomial(&sizes);
    let cols = binomial(t, k);
    if rows * cols > MATERIALIZE_LIMIT {
        return Err(Error::BudgetExceeded {
            what: "crossing matrix entries",
            count: rows * cols,
            budget: MATERIALIZE_LIMIT,
        });
    }
    let col_subs = subsets_colex(t, k);
    let mut entries = Vec::with_capacity((rows * cols) as usize);
    let mut row_labels = Vec::with_capacity(rows as usize);
    for assignment in AssignmentStream::new(&sizes) {
        for sub in &col_subs {
            entries.push(crosses(&assignment, sub) as i64);
        }
        row_labels.push(assignment);
    }
    Ok(ExactMatrix {
        rows: row_labels.len(),
        cols: col_subs.len(),
        entries,
        row_labels: Labels::Cuts(row_labels),
        col_labels: Labels::Subsets(col_subs),
        note: None,
    })
}

/// True iff the subset has pairwise distinct parts under the assignment.
fn crosses(assignment: &[u8], subset: &[usize]) -> bool {
    for (i, &a) in subset.iter().enumerate() {
        for &b in &subset[i + 1..] {
            if assignment[a] == assignment[b] {
                return false;
            }
        }
    }
    true
}

/// Anchored submatrix N of M: rows restricted to cuts separating elements
/// 0 and 1, columns restricted to k-subsets containing both 0 and 1.
pub fn anchored_crossing_submatrix(
    t: usize,
    r: usize,
    k: usize,
    budget: u128,
) -> Result<ExactMatrix> {
    let sizes = check_crossing_params(t, r, k, budget)?;
    let col_subs: Vec<Vec<usize>> = subsets_colex(t, k)
        .into_iter()
        .filter(|s| s.contains(&0) && s.contains(&1))
        .collect();
    let cols = col_subs.len();
    let mut entries = Vec::new();
    let mut row_labels = Vec::new();
    for assignment in AssignmentStream::new(&sizes) {
        if assignment[0] == assignment[1] {
            continue;
        }
        for sub in &col_subs {
            entries.push(crosses(&assignment, sub) as i64);
        }
        row_labels.push(assignment);
        if (row_labels.len() * cols) as u128 > MATERIALIZE_LIMIT {
            return Err(Error::BudgetExceeded {
                what: "anchored submatrix entries",
                count: (row_labels.len() * cols) as u128,
                budget: MATERIALIZE_LIMIT,
            });
        }
    }
    Ok(ExactMatrix {
        rows: row_labels.len(),
        cols,
        entries,
        row_labels: Labels::Cuts(row_labels),
        col_labels: Labels::Subsets(col_subs),
        note: None,
    })
}

/// Distinct rows of the anchored submatrix, streamed without materializing
/// the duplicates (first-occurrence order). Same row set as
/// `anchored_crossing_submatrix(..).dedup_rows()`.
pub fn anchored_distinct_rows(t: usize, r: usize, k: usize, budget: u128) -> Result<ExactMatrix> {
    let sizes = check_crossing_params(t, r, k, budget)?;
    let col_subs: Vec<Vec<usize>> = subsets_colex(t, k)
        .into_iter()
        .filter(|s| s.contains(&0) && s.contains(&1))
        .collect();
    let cols = col_subs.len();
    if cols > 64 {
        return Err(Error::InvalidParam(
            "anchored submatrix too wide for packed dedup".into(),
        ));
    }
    let mut seen = std::collections::HashSet::new();
    let mut packed_rows: Vec<u64> = Vec::new();
    for assignment in AssignmentStream::new(&sizes) {
        if assignment[0] == assignment[1] {
            continue;
        }
        let mut packed = 0u64;
        for (c, sub) in col_subs.iter().enumerate() {
            if crosses(&assignment, sub) {
                packed |= 1u64 << c;
            }
        }
        if seen.insert(packed) {
            packed_rows.push(packed);
        }
    }
    let mut entries = Vec::with_capacity(packed_rows.len() * cols);
    for packed in &packed_rows {
        for c in 0..cols {
            entries.push((packed >> c & 1) as i64);
        }
    }
    Ok(ExactMatrix {
        rows: packed_rows.len(),
        cols,
        entries,
        row_labels: Labels::Indices(packed_rows.len()),
        col_labels: Labels::Subsets(col_subs),
        note: None,
    })
}

/// Exact rank over the rationals.
///
/// Fraction-free integer elimination (big-integer arithmetic on overflow)
/// cross-checked modulo two 62-bit primes; for large matrices where the
/// modular rank already equals min(rows, cols), that is returned directly
/// (modular rank never exceeds the rational rank, so equality with the
/// dimension bound is exact). Any disagreement is an internal fault.
pub fn rank_exact(m: &ExactMatrix) -> Result<usize> {
    if m.rows == 0 || m.cols == 0 {
        return Ok(0);
    }
    // duplicate rows never affect rank and dominate the crossing matrices
    let work = m.dedup_rows();
    let p1 = prime_for(0x9D3A_1F4B ^ (m.rows as u64) << 20 ^ m.cols as u64);
    let p2 = prime_for(0x51C6_A2E7 ^ (m.cols as u64) << 20 ^ m.rows as u64);
    let r1 = rank_mod_p(&work, p1);
    let r2 = rank_mod_p(&work, p2);
    if r1 != r2 {
        return Err(Error::InternalFault(format!(
            "modular ranks disagree: {r1} (mod {p1}) vs {r2} (mod {p2})"
        )));
    }
    let min_dim = work.rows.min(work.cols);
    if r1 == min_dim && (work.rows as u128) * (work.cols as u128) > 40_000 {
        // full rank modulo a prime certifies full rational rank
        return Ok(r1);
    }
    let exact = rank_fraction_free(&work);
    if exact != r1 {
        return Err(Error::InternalFault(format!(
            "exact rank {exact} disagrees with modular rank {r1} (primes {p1}, {p2})"
        )));
    }
    Ok(exact)
}

/// First prime at or above a seeded 62-bit odd start value.
fn prime_for(seed: u64) -> u64 {
    let mut state = seed;
    let mut x = {
        let mut s = state;
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        state = s;
        s
    };
    let _ = state;
    x = (x | 1) | (1 << 61);
    x &= (1 << 62) - 1;
    while !is_prime_u64(x) {
        x += 2;
    }
    x
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    // deterministic Miller-Rabin for u64
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Gaussian elimination over Z/p; returns the rank mod p.
fn rank_mod_p(m: &ExactMatrix, p: u64) -> usize {
    let rows = m.rows;
    let cols = m.cols;
    let mut a: Vec<u64> = m
        .entries
        .iter()
        .map(|&v| v.rem_euclid(p as i64) as u64)
        .collect();
    let mut rank = 0usize;
    for col in 0..cols {
        // first nonzero at or below `rank`
        let pivot = (rank..rows).find(|&r| a[r * cols + col] != 0);
        let Some(pivot) = pivot else { continue };
        a.swap_unchecked_rows(pivot, rank, cols);
        let inv = pow_mod(a[rank * cols + col], p - 2, p);
        for r in (rank + 1)..rows {
            let factor = a[r * cols + col];
            if factor == 0 {
                continue;
            }
            let scale = mul_mod(factor, inv, p);
            for c in col..cols {
                let sub = mul_mod(scale, a[rank * cols + c], p);
                let entry = &mut a[r * cols + c];
                *entry = (*entry + p - sub) % p;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

trait SwapRows {
    fn swap_unchecked_rows(&mut self, r1: usize, r2: usize, cols: usize);
}

impl SwapRows for Vec<u64> {
    fn swap_unchecked_rows(&mut self, r1: usize, r2: usize, cols: usize) {
        if r1 == r2 {
            return;
        }
        for c in 0..cols {
            self.swap(r1 * cols + c, r2 * cols + c);
        }
    }
}

/// Integer-preserving elimination: rows are combined with integer
/// multipliers and reduced by their gcd after each step. Works in i128
/// and promotes the whole computation to BigInt on overflow.
fn rank_fraction_free(m: &ExactMatrix) -> usize {
    match rank_i128(m) {
        Some(rank) => rank,
        None => rank_bigint(m),
    }
}

fn rank_i128(m: &ExactMatrix) -> Option<usize> {
    let rows = m.rows;
    let cols = m.cols;
    let mut a: Vec<i128> = m.entries.iter().map(|&v| v as i128).collect();
    let mut rank = 0usize;
    for col in 0..cols {
        // deterministic pivot: largest absolute value, lowest row on ties
        let mut pivot: Option<(usize, i128)> = None;
        for r in rank..rows {
            let v = a[r * cols + col].abs();
            if v != 0 && pivot.map(|(_, pv)| v > pv).unwrap_or(true) {
                pivot = Some((r, v));
            }
        }
        let Some((pr, _)) = pivot else { continue };
        for c in 0..cols {
            a.swap(pr * cols + c, rank * cols + c);
        }
        let pv = a[rank * cols + col];
        for r in (rank + 1)..rows {
            let f = a[r * cols + col];
            if f == 0 {
                continue;
            }
            let mut g: i128 = 0;
            for c in col..cols {
                let lhs = a[r * cols + c].checked_mul(pv)?;
                let rhs = a[rank * cols + c].checked_mul(f)?;
                let v = lhs.checked_sub(rhs)?;
                a[r * cols + c] = v;
                g = gcd_i128(g, v);
            }
            if g > 1 {
                for c in col..cols {
                    a[r * cols + c] /= g;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Some(rank)
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn rank_bigint(m: &ExactMatrix) -> usize {
    let rows = m.rows;
    let cols = m.cols;
    let mut a: Vec<BigInt> = m.entries.iter().map(|&v| BigInt::from(v)).collect();
    let mut rank = 0usize;
    for col in 0..cols {
        let mut pivot: Option<(usize, BigInt)> = None;
        for r in rank..rows {
            let v = a[r * cols + col].abs();
            if !v.is_zero() && pivot.as_ref().map(|(_, pv)| v > *pv).unwrap_or(true) {
                pivot = Some((r, v));
            }
        }
        let Some((pr, _)) = pivot else { continue };
        for c in 0..cols {
            a.swap(pr * cols + c, rank * cols + c);
        }
        let pv = a[rank * cols + col].clone();
        for r in (rank + 1)..rows {
            let f = a[r * cols + col].clone();
            if f.is_zero() {
                continue;
            }
            let mut g = BigInt::zero();
            for c in col..cols {
                let v = &a[r * cols + c] * &pv - &a[rank * cols + c] * &f;
                g = g.gcd(&v);
                a[r * cols + c] = v;
            }
            if g > BigInt::from(1) {
                for c in col..cols {
                    a[r * cols + c] = &a[r * cols + c] / &g;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inclusion_examples() {
        // B([4],2,2) is the 6x6 identity
        let b = inclusion_matrix(4, 2, 2).unwrap();
        assert_eq!((b.rows, b.cols), (6, 6));
        assert_eq!(b.entries, ExactMatrix::identity(6).entries);

        // B([5],3,2): every row has C(3,2) = 3 ones
        let b = inclusion_matrix(5, 3, 2).unwrap();
        for r in 0..b.rows {
            let ones: i64 = (0..b.cols).map(|c| b.get(r, c)).sum();
            assert_eq!(ones, 3);
        }

        // B([6],3,2) has full column rank C(6,2) = 15
        let b = inclusion_matrix(6, 3, 2).unwrap();
        assert_eq!(rank_exact(&b).unwrap(), 15);
    }

    #[test]
    fn inclusion_range_checks() {
        assert!(inclusion_matrix(4, 4, 2).is_err());
        assert!(inclusion_matrix(4, 2, 3).is_err());
        let flagged = inclusion_matrix(4, 2, 1).unwrap();
        assert!(flagged.note.is_some());
    }

    #[test]
    fn rank_basics() {
        assert_eq!(rank_exact(&ExactMatrix::identity(6)).unwrap(), 6);
        assert_eq!(rank_exact(&ExactMatrix::zero(4, 5)).unwrap(), 0);

        // B([4],3,2): 4x6, rank 4 (below the full-column-rank regime)
        let b = inclusion_matrix(4, 3, 2).unwrap();
        assert_eq!((b.rows, b.cols), (4, 6));
        assert_eq!(rank_exact(&b).unwrap(), 4);
    }

    #[test]
    fn crossing_matrix_examples() {
        // t=6, r=3, k=3: 90x20, every row sum 8
        let m = crossing_matrix(6, 3, 3, 10_000_000).unwrap();
        assert_eq!((m.rows, m.cols), (90, 20));
        for r in 0..m.rows {
            let sum: i64 = (0..m.cols).map(|c| m.get(r, c)).sum();
            assert_eq!(sum, 8);
        }

        // t=4, r=2, k=2: row sum 4
        let m = crossing_matrix(4, 2, 2, 10_000_000).unwrap();
        for r in 0..m.rows {
            let sum: i64 = (0..m.cols).map(|c| m.get(r, c)).sum();
            assert_eq!(sum, 4);
        }
    }

    #[test]
    fn crossing_matrix_constant_vector() {
        // constant density vector maps to a constant vector
        let m = crossing_matrix(6, 3, 3, 10_000_000).unwrap();
        let d = vec![1.0; m.cols];
        let out = m.mul_vec(&d);
        assert!(out.iter().all(|&v| (v - out[0]).abs() < 1e-12));
        assert_eq!(out[0], 8.0);
    }

    #[test]
    fn anchored_submatrix_examples() {
        // t=6, r=3, k=3: columns C(4,1) = 4, full column rank
        let n = anchored_crossing_submatrix(6, 3, 3, 10_000_000).unwrap();
        assert_eq!(n.cols, 4);
        assert_eq!(rank_exact(&n).unwrap(), 4);

        // dedup preserves rank and matches the streamed builder
        let dedup = n.dedup_rows();
        assert_eq!(rank_exact(&dedup).unwrap(), 4);
        let streamed = anchored_distinct_rows(6, 3, 3, 10_000_000).unwrap();
        assert_eq!(dedup.rows, streamed.rows);
        let mut a: Vec<&[i64]> = (0..dedup.rows)
            .map(|r| &dedup.entries[r * dedup.cols..(r + 1) * dedup.cols])
            .collect();
        let mut b: Vec<&[i64]> = (0..streamed.rows)
            .map(|r| &streamed.entries[r * streamed.cols..(r + 1) * streamed.cols])
            .collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn anchored_submatrix_8_4_4() {
        let n = anchored_distinct_rows(8, 4, 4, 10_000_000).unwrap();
        assert_eq!(rank_exact(&n).unwrap(), 15); // C(6,2)
    }

    #[test]
    fn budget_rejected_with_count() {
        let err = crossing_matrix(12, 12, 3, 10_000_000).unwrap_err();
        match err {
            Error::BudgetExceeded { count, .. } => assert_eq!(count, 479_001_600),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn primes_are_prime() {
        for s in 0..5u64 {
            let p = prime_for(s.wrapping_mul(0xABCD_EF12_3456_789B));
            assert!(is_prime_u64(p));
            assert!(p > 1 << 61);
        }
    }
}
