//! Small combinatorial helpers: binomials, colexicographic subset
//! ranking and lexicographic enumeration of balanced assignments.

/// Binomial coefficient as u128, exact for the parameter ranges used here.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 1..=k {
        result = result * (n - (k - i)) as u128 / i as u128;
    }
    result
}

/// Multinomial coefficient n! / (sizes[0]! * ... * sizes[r-1]!).
/// Saturates at u128::MAX (the budgets we compare against are far below that).
pub fn multinomial(sizes: &[usize]) -> u128 {
    let mut result: u128 = 1;
    let mut seen = 0usize;
    for &s in sizes {
        for i in 1..=s {
            seen += 1;
            result = match result.checked_mul(seen as u128) {
                Some(v) => v / i as u128,
                None => return u128::MAX,
            };
        }
    }
    result
}

/// All k-subsets of {0..t-1} in colexicographic order.
///
/// Colex: A < B iff the largest differing element lies in B. The first
/// subset is {0,..,k-1} and the last is {t-k,..,t-1}.
pub fn subsets_colex(t: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(t, k) as usize);
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    if k > t {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // next in colex: increment the first element that can move without
        // passing the one after it
        let mut i = 0;
        while i + 1 < k && cur[i] + 1 == cur[i + 1] {
            i += 1;
        }
        if cur[i] + 1 >= t && i + 1 == k {
            break;
        }
        cur[i] += 1;
        for j in 0..i {
            cur[j] = j;
        }
        if cur[k - 1] >= t {
            break;
        }
    }
    out
}

/// Colex rank of a sorted k-subset: sum of C(a_i, i+1).
pub fn colex_rank(subset: &[usize]) -> usize {
    subset
        .iter()
        .enumerate()
        .map(|(i, &a)| binomial(a, i + 1) as usize)
        .sum()
}

/// Lexicographic enumeration of assignment vectors with prescribed part
/// sizes: every vector a in {0..r-1}^n with |{i : a_i = j}| = sizes[j],
/// visited in lexicographic order of the vector.
pub struct AssignmentStream {
    current: Option<Vec<u8>>,
}

impl AssignmentStream {
    pub fn new(sizes: &[usize]) -> Self {
        let mut first = Vec::new();
        for (part, &s) in sizes.iter().enumerate() {
            first.extend(std::iter::repeat(part as u8).take(s));
        }
        AssignmentStream {
            current: Some(first),
        }
    }
}

impl Iterator for AssignmentStream {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        let cur = self.current.take()?;
        let mut next = cur.clone();
        if next_multiset_permutation(&mut next) {
            self.current = Some(next);
        }
        Some(cur)
    }
}

/// Standard next-permutation step; returns false after the last one.
fn next_multiset_permutation(a: &mut [u8]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(12, 6), 924);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(4, 5), 0);
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(&[2, 2, 2]), 90);
        assert_eq!(multinomial(&[2, 2]), 6);
        assert_eq!(multinomial(&[7, 7]), 3432);
        assert_eq!(multinomial(&[1; 12]), 479_001_600);
    }

    #[test]
    fn colex_order_and_rank() {
        let subs = subsets_colex(5, 3);
        assert_eq!(subs.len(), 10);
        assert_eq!(subs[0], vec![0, 1, 2]);
        assert_eq!(subs[1], vec![0, 1, 3]);
        assert_eq!(subs[2], vec![0, 2, 3]);
        assert_eq!(subs[9], vec![2, 3, 4]);
        for (r, s) in subs.iter().enumerate() {
            assert_eq!(colex_rank(s), r);
        }
    }

    #[test]
    fn assignment_stream_lexicographic_and_complete() {
        let all: Vec<_> = AssignmentStream::new(&[2, 2]).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 0, 1, 1]);
        assert_eq!(all[5], vec![1, 1, 0, 0]);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 6);
        assert!(all.windows(2).all(|w| w[0] < w[1]));

        assert_eq!(AssignmentStream::new(&[2, 2, 2]).count(), 90);
    }
}
