//! Index-tuple combinatorics for alternating and symmetric slots.
//!
//! Cochain components are stored on canonical basis tuples: strictly
//! increasing tuples for alternating (wedge) arguments and weakly increasing
//! tuples for symmetric arguments.  This module enumerates and ranks those
//! tuples and normalizes arbitrary tuples to canonical form.

use std::collections::HashMap;

/// Binomial coefficient `C(n, k)` as `usize` (exact; sizes here are small).
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of weakly increasing `k`-tuples over `{0, .., n-1}`:
/// `C(n + k - 1, k)`.
pub fn multiset_count(n: usize, k: usize) -> usize {
    if k == 0 {
        return 1;
    }
    if n == 0 {
        return 0;
    }
    binomial(n + k - 1, k)
}

/// All strictly increasing `k`-tuples over `{0, .., n-1}`, lexicographic.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, k));
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let remaining = k - cur.len();
        for i in start..=(n.saturating_sub(remaining)) {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    if k <= n {
        rec(n, k, 0, &mut cur, &mut out);
    }
    out
}

/// All weakly increasing `k`-tuples over `{0, .., n-1}`, lexicographic.
pub fn weakly_increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(multiset_count(n, k));
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    if n == 0 {
        return out;
    }
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// Lexicographic rank of the strictly increasing pair `(i, j)` among pairs
/// over `{0, .., n-1}`.
pub fn pair_rank(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n, "not a strictly increasing pair in range");
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Lexicographic rank of the strictly increasing triple `(i, j, k)` among
/// triples over `{0, .., n-1}`.
pub fn triple_rank(n: usize, i: usize, j: usize, k: usize) -> usize {
    debug_assert!(i < j && j < k && k < n, "not a strictly increasing triple in range");
    let offset: usize = (0..i).map(|a| binomial(n - 1 - a, 2)).sum();
    offset + pair_rank(n - i - 1, j - i - 1, k - i - 1)
}

/// Sorts an alternating-slot tuple into strictly increasing order.
///
/// Returns `None` when two entries coincide (the alternating value is zero),
/// otherwise `Some((sign, sorted))` where `sign` is the parity of the
/// permutation applied.
pub fn sort_alternating(tuple: &[usize]) -> Option<(i32, Vec<usize>)> {
    let mut v = tuple.to_vec();
    let mut sign = 1i32;
    // Insertion sort with swap counting; tuples here have length <= 4.
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    for w in v.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some((sign, v))
}

/// Sorts a symmetric-slot tuple into weakly increasing order (no sign).
pub fn sort_symmetric(tuple: &[usize]) -> Vec<usize> {
    let mut v = tuple.to_vec();
    v.sort_unstable();
    v
}

/// An indexed table of canonical tuples with O(1) rank lookup.
#[derive(Clone, Debug)]
pub struct TupleTable {
    tuples: Vec<Vec<usize>>,
    rank: HashMap<Vec<usize>, usize>,
}

impl TupleTable {
    /// Table of strictly increasing `k`-tuples over `{0, .., n-1}`.
    pub fn alternating(n: usize, k: usize) -> Self {
        Self::from_tuples(increasing_tuples(n, k))
    }

    /// Table of weakly increasing `k`-tuples over `{0, .., n-1}`.
    pub fn symmetric(n: usize, k: usize) -> Self {
        Self::from_tuples(weakly_increasing_tuples(n, k))
    }

    fn from_tuples(tuples: Vec<Vec<usize>>) -> Self {
        let rank = tuples
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        TupleTable { tuples, rank }
    }

    /// Number of canonical tuples.
    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    /// Whether the table is empty.
    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    /// The canonical tuple of a given rank.
    pub fn tuple(&self, rank: usize) -> &[usize] {
        &self.tuples[rank]
    }

    /// All canonical tuples in rank order.
    pub fn iter(&self) -> impl Iterator<Item = &[usize]> {
        self.tuples.iter().map(|t| t.as_slice())
    }

    /// Rank of a canonical tuple (must already be sorted appropriately).
    pub fn rank(&self, tuple: &[usize]) -> Option<usize> {
        self.rank.get(tuple).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(multiset_count(3, 2), 6);
        assert_eq!(multiset_count(1, 4), 1);
        assert_eq!(multiset_count(0, 0), 1);
        assert_eq!(multiset_count(0, 2), 0);
    }

    #[test]
    fn tuple_enumeration_is_lexicographic_and_complete() {
        let w = increasing_tuples(4, 2);
        assert_eq!(
            w,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        let s = weakly_increasing_tuples(2, 2);
        assert_eq!(s, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(increasing_tuples(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(increasing_tuples(2, 3), Vec::<Vec<usize>>::new());
    }

    #[test]
    fn alternating_sort_signs() {
        assert_eq!(sort_alternating(&[2, 0, 1]), Some((1, vec![0, 1, 2])));
        assert_eq!(sort_alternating(&[1, 0]), Some((-1, vec![0, 1])));
        assert_eq!(sort_alternating(&[0, 1, 2]), Some((1, vec![0, 1, 2])));
        assert_eq!(sort_alternating(&[3, 1]), Some((-1, vec![1, 3])));
        assert_eq!(sort_alternating(&[1, 1]), None);
        assert_eq!(sort_alternating(&[2, 0, 2]), None);
        // 4-tuple: reverse of (0,1,2,3) needs 6 swaps -> even.
        assert_eq!(
            sort_alternating(&[3, 2, 1, 0]),
            Some((1, vec![0, 1, 2, 3]))
        );
        assert_eq!(
            sort_alternating(&[1, 0, 2, 3]),
            Some((-1, vec![0, 1, 2, 3]))
        );
    }

    #[test]
    fn closed_form_ranks_agree_with_enumeration() {
        for n in 2..7 {
            for (r, t) in increasing_tuples(n, 2).iter().enumerate() {
                assert_eq!(pair_rank(n, t[0], t[1]), r);
            }
        }
        for n in 3..7 {
            for (r, t) in increasing_tuples(n, 3).iter().enumerate() {
                assert_eq!(triple_rank(n, t[0], t[1], t[2]), r);
            }
        }
    }

    #[test]
    fn tuple_table_ranks() {
        let t = TupleTable::alternating(4, 3);
        assert_eq!(t.len(), 4);
        assert_eq!(t.rank(&[0, 2, 3]), Some(2));
        assert_eq!(t.tuple(2), &[0, 2, 3]);
        assert_eq!(t.rank(&[0, 0, 1]), None);
        let s = TupleTable::symmetric(3, 2);
        assert_eq!(s.len(), 6);
        assert_eq!(s.rank(&[1, 1]), Some(3));
    }
}
