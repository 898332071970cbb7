//! The finite symmetric group `S_n` sitting inside the affine group as the
//! subgroup generated by `s_1, ..., s_{n-1}`.
//!
//! Permutations are stored in one-line notation on `{1, ..., n}`. The
//! generator `w_i` is the transposition `(i, i+1)` for `1 <= i < n` and
//! `w_0 = s_theta` is `(1, n)`. Composition is functional:
//! `(u.compose(v))(i) = u(v(i))`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinitePerm {
    oneline: Vec<usize>,
}

impl FinitePerm {
    pub fn identity(n: usize) -> Self {
        FinitePerm {
            oneline: (1..=n).collect(),
        }
    }

    pub fn from_oneline(oneline: Vec<usize>) -> Result<Self> {
        let n = oneline.len();
        let mut seen = alloc::vec![false; n + 1];
        for &v in &oneline {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation(n));
            }
            seen[v] = true;
        }
        Ok(FinitePerm { oneline })
    }

    /// Build from a 0-based image table `p(r)` on `{0, ..., n-1}`.
    pub(crate) fn from_zero_based(images: &[usize]) -> Self {
        FinitePerm {
            oneline: images.iter().map(|&v| v + 1).collect(),
        }
    }

    /// The transposition `(i, j)`; this is the reflection `s_alpha` for the
    /// root `alpha = e_i - e_j`.
    pub fn transposition(i: usize, j: usize, n: usize) -> Result<Self> {
        if i == j || i == 0 || j == 0 || i > n || j > n {
            return Err(Error::InvalidTransposition { i, j, n });
        }
        let mut p = Self::identity(n);
        p.oneline.swap(i - 1, j - 1);
        Ok(p)
    }

    /// `w_i`: `(i, i+1)` for `1 <= i < n`, and `(1, n)` for `i = 0`.
    pub fn simple(i: usize, n: usize) -> Result<Self> {
        match i {
            0 => Self::transposition(1, n, n),
            i if i < n => Self::transposition(i, i + 1, n),
            _ => Err(Error::GeneratorOutOfRange { index: i, n }),
        }
    }

    /// Product `w_{i_1} w_{i_2} ... w_{i_k}` of the listed generators.
    pub fn from_word(word: &[usize], n: usize) -> Result<Self> {
        let mut acc = Self::identity(n);
        for &i in word {
            acc = acc.compose(&Self::simple(i, n)?)?;
        }
        Ok(acc)
    }

    pub fn n(&self) -> usize {
        self.oneline.len()
    }

    pub fn oneline(&self) -> &[usize] {
        &self.oneline
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.oneline[i - 1]
    }

    /// 0-based view: residue `r` maps to `w(r+1) - 1`.
    pub(crate) fn apply0(&self, r: usize) -> usize {
        self.oneline[r] - 1
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch(self.n(), other.n()));
        }
        Ok(FinitePerm {
            oneline: other.oneline.iter().map(|&v| self.oneline[v - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0; self.n()];
        for (i, &v) in self.oneline.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        FinitePerm { oneline: inv }
    }

    /// `self * other * self^{-1}`.
    pub fn conjugate(&self, other: &Self) -> Result<Self> {
        self.compose(other)?.compose(&self.inverse())
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.oneline;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// A reduced word in `w_1, ..., w_{n-1}` (bubble sort on right descents).
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.oneline.clone();
        let mut word = Vec::new();
        // w = (w s_i) s_i; peel right descents, collecting letters right to left
        while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
            w.swap(i, i + 1);
            word.push(i + 1);
        }
        word.reverse();
        word
    }

    /// All of `S_n` in lexicographic order of one-line words.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(crate::factorial(n));
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(FinitePerm {
                oneline: cur.clone(),
            });
            // next permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Debug for FinitePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinitePerm{:?}", self.oneline)
    }
}

impl fmt::Display for FinitePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.oneline.iter().enumerate() {
            if i > 0 && self.n() >= 10 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A set of transpositions `X` together with `n`; generates `G_X`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TranspositionSet {
    n: usize,
    pairs: BTreeSet<(usize, usize)>,
}

/// Blocks of a set partition of `{1, ..., n}`, each sorted, ordered by least
/// element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn block_of(&self, x: usize) -> &[usize] {
        self.blocks.iter().find(|b| b.contains(&x)).unwrap()
    }

    /// `|G_X|`: product of factorials of block sizes.
    pub fn group_order(&self) -> usize {
        self.blocks.iter().map(|b| crate::factorial(b.len())).product()
    }
}

impl TranspositionSet {
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in pairs {
            if a == b || a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidTransposition { i: a, j: b, n });
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(TranspositionSet { n, pairs: set })
    }

    pub fn empty(n: usize) -> Self {
        TranspositionSet {
            n,
            pairs: BTreeSet::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.pairs.contains(&(i.min(j), i.max(j)))
    }

    pub fn transpositions(&self) -> Vec<FinitePerm> {
        self.pairs
            .iter()
            .map(|&(i, j)| FinitePerm::transposition(i, j, self.n).unwrap())
            .collect()
    }

    /// Finest set partition with `i` and `j` in one block for every `(i, j)`.
    pub fn closure_partition(&self) -> SetPartition {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(i, j) in &self.pairs {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            parent[a.max(b)] = a.min(b);
        }
        let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for x in 1..=self.n {
            let root = find(&mut parent, x);
            blocks.entry(root).or_default().push(x);
        }
        let mut blocks: Vec<Vec<usize>> = blocks.into_values().collect();
        blocks.sort_by_key(|b| b[0]);
        SetPartition { blocks }
    }

    /// The unique minimal-length representative of the left coset `w G_X`:
    /// the entries in each block of positions are sorted increasingly.
    pub fn coset_min(&self, w: &FinitePerm) -> FinitePerm {
        let mut oneline = w.oneline.clone();
        for block in self.closure_partition().blocks {
            let mut values: Vec<usize> = block.iter().map(|&p| oneline[p - 1]).collect();
            values.sort_unstable();
            for (&p, v) in block.iter().zip(values) {
                oneline[p - 1] = v;
            }
        }
        FinitePerm { oneline }
    }

    /// Minimal-length left coset representatives of `G_X` in `S_n`, sorted.
    pub fn min_coset_reps(&self) -> Vec<FinitePerm> {
        let reps: BTreeSet<FinitePerm> = FinitePerm::all(self.n)
            .iter()
            .map(|w| self.coset_min(w))
            .collect();
        reps.into_iter().collect()
    }

    /// Elements of `G_X`, by closing `X` under composition.
    pub fn generated_group(&self) -> Vec<FinitePerm> {
        let gens = self.transpositions();
        let e = FinitePerm::identity(self.n);
        let mut seen = BTreeSet::from([e.clone()]);
        let mut queue = VecDeque::from([e]);
        while let Some(g) = queue.pop_front() {
            for x in &gens {
                let h = g.compose(x).unwrap();
                if seen.insert(h.clone()) {
                    queue.push_back(h);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// `l(w x) > l(w)` for every `x` in `X` (the classical descent test).
    pub fn in_gx_descent_free(&self, w: &FinitePerm) -> bool {
        // right multiplication by (i, j) swaps positions i and j
        self.pairs.iter().all(|&(i, j)| w.apply(i) < w.apply(j))
    }

    /// `{ w : l(w x) > l(w) for all x in X }`, sorted.
    pub fn descent_free_elements(&self) -> Vec<FinitePerm> {
        FinitePerm::all(self.n)
            .into_iter()
            .filter(|w| self.in_gx_descent_free(w))
            .collect()
    }

    /// No two transpositions `(i, j)`, `(k, j)` with `i != k` share the right
    /// endpoint `j`.
    pub fn ordered_condition(&self) -> bool {
        let mut rights = BTreeSet::new();
        self.pairs.iter().all(|&(_, j)| rights.insert(j))
    }

    /// Every block `b_1 < ... < b_k` of the closure partition has all of
    /// `(b_1, b_2), ..., (b_{k-1}, b_k)` in `X`.
    ///
    /// This is the hypothesis under which the descent test picks out exactly
    /// the minimal coset representatives; `ordered_condition` alone is not
    /// enough (`{(1,2), (1,3)}` is ordered but admits `132`).
    pub fn chain_condition(&self) -> bool {
        self.closure_partition()
            .blocks
            .iter()
            .all(|b| b.windows(2).all(|p| self.contains(p[0], p[1])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(v: &[usize]) -> FinitePerm {
        FinitePerm::from_oneline(v.to_vec()).unwrap()
    }

    fn s(i: usize, n: usize) -> FinitePerm {
        FinitePerm::simple(i, n).unwrap()
    }

    /// Minimum over each coset, found by walking the coset with `G_X`.
    fn brute_min_reps(x: &TranspositionSet) -> Vec<FinitePerm> {
        let group = x.generated_group();
        let mut reps = BTreeSet::new();
        for w in FinitePerm::all(x.n()) {
            let best = group
                .iter()
                .map(|h| w.compose(h).unwrap())
                .min_by_key(|u| (u.length(), u.clone()))
                .unwrap();
            reps.insert(best);
        }
        reps.into_iter().collect()
    }

    fn all_transposition_sets(n: usize) -> Vec<TranspositionSet> {
        let all: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        (0u32..1 << all.len())
            .map(|mask| {
                TranspositionSet::new(
                    n,
                    all.iter()
                        .enumerate()
                        .filter(|(b, _)| mask >> b & 1 == 1)
                        .map(|(_, &pr)| pr),
                )
                .unwrap()
            })
            .collect()
    }

    #[test]
    fn compose_examples() {
        assert_eq!(s(2, 3).compose(&s(1, 3)).unwrap(), p(&[3, 1, 2]));
        let u = p(&[2, 3, 1]);
        assert_eq!(u.compose(&FinitePerm::identity(3)).unwrap(), u);
        assert!(s(1, 3).compose(&s(1, 3)).unwrap().is_identity());
        assert_eq!(
            s(1, 3).compose(&s(1, 4)),
            Err(Error::RankMismatch(3, 4))
        );
    }

    #[test]
    fn length_examples() {
        assert_eq!(FinitePerm::identity(4).length(), 0);
        assert_eq!(p(&[3, 2, 1]).length(), 3);
        // inversions of 312: (3,1) and (3,2)
        assert_eq!(p(&[3, 1, 2]).length(), 2);
    }

    #[test]
    fn reflections_of_roots() {
        assert_eq!(FinitePerm::transposition(1, 3, 3).unwrap(), p(&[3, 2, 1]));
        assert_eq!(FinitePerm::transposition(1, 2, 3).unwrap(), s(1, 3));
        assert_eq!(FinitePerm::transposition(2, 3, 3).unwrap(), s(2, 3));
        assert_eq!(s(0, 3), p(&[3, 2, 1]));
        assert!(FinitePerm::transposition(0, 2, 3).is_err());
        assert!(FinitePerm::transposition(2, 4, 3).is_err());
        assert!(FinitePerm::transposition(2, 2, 3).is_err());
    }

    #[test]
    fn s_theta_is_palindromic_word() {
        for n in 3..=6 {
            let mut word: Vec<usize> = (1..n).collect();
            word.extend((1..n - 1).rev());
            assert_eq!(FinitePerm::from_word(&word, n).unwrap(), s(0, n));
        }
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(FinitePerm::from_oneline(vec![1, 1, 2]).is_err());
        assert!(FinitePerm::from_oneline(vec![0, 1, 2]).is_err());
        assert!(FinitePerm::from_oneline(vec![1, 2, 4]).is_err());
    }

    #[test]
    fn reduced_words_round_trip() {
        for w in FinitePerm::all(5) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(FinitePerm::from_word(&word, 5).unwrap(), w);
        }
    }

    #[test]
    fn closure_partition_examples() {
        let x = TranspositionSet::new(4, [(3, 4), (1, 4)]).unwrap();
        assert_eq!(x.closure_partition().blocks, vec![vec![1, 3, 4], vec![2]]);
        assert_eq!(
            TranspositionSet::empty(3).closure_partition().blocks,
            vec![vec![1], vec![2], vec![3]]
        );
        let x = TranspositionSet::new(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(x.closure_partition().blocks, vec![vec![1, 2, 3]]);
    }

    #[test]
    fn min_coset_reps_examples() {
        let x = TranspositionSet::new(4, [(3, 4), (1, 4)]).unwrap();
        let mut expected = vec![
            FinitePerm::identity(4),
            s(1, 4),
            s(2, 4),
            s(3, 4).compose(&s(2, 4)).unwrap(),
        ];
        expected.sort();
        assert_eq!(x.min_coset_reps(), expected);

        assert_eq!(TranspositionSet::empty(3).min_coset_reps(), FinitePerm::all(3));

        let x = TranspositionSet::new(3, [(2, 3)]).unwrap();
        let mut expected = vec![FinitePerm::identity(3), s(1, 3), s(2, 3).compose(&s(1, 3)).unwrap()];
        expected.sort();
        assert_eq!(x.min_coset_reps(), expected);
        assert_eq!(brute_min_reps(&x), expected);
    }

    #[test]
    fn descent_test_examples() {
        let x = TranspositionSet::new(3, [(2, 3)]).unwrap();
        assert_eq!(x.descent_free_elements(), x.min_coset_reps());

        let x = TranspositionSet::new(4, [(3, 4), (1, 4)]).unwrap();
        let w = FinitePerm::from_word(&[1, 2, 1], 4).unwrap();
        assert_eq!(w, p(&[3, 2, 1, 4]));
        assert!(x.in_gx_descent_free(&w));
        assert!(!x.min_coset_reps().contains(&w));

        for x in all_transposition_sets(4) {
            assert!(x.in_gx_descent_free(&FinitePerm::identity(4)));
        }
    }

    #[test]
    fn ordered_condition_examples() {
        assert!(!TranspositionSet::new(4, [(3, 4), (1, 4)]).unwrap().ordered_condition());
        assert!(TranspositionSet::new(4, [(1, 3), (3, 4)]).unwrap().ordered_condition());
        assert!(TranspositionSet::empty(4).ordered_condition());
    }

    #[test]
    fn ordered_condition_alone_is_not_sufficient() {
        let x = TranspositionSet::new(3, [(1, 2), (1, 3)]).unwrap();
        assert!(x.ordered_condition());
        assert!(!x.chain_condition());
        let w = p(&[1, 3, 2]);
        assert!(x.in_gx_descent_free(&w));
        assert!(!x.min_coset_reps().contains(&w));
    }

    #[test]
    fn block_sorting_matches_brute_force() {
        for n in 3..=4 {
            for x in all_transposition_sets(n) {
                assert_eq!(x.min_coset_reps(), brute_min_reps(&x), "{x:?}");
            }
        }
    }

    #[test]
    fn coset_counts_and_uniqueness() {
        for n in 3..=5 {
            for x in all_transposition_sets(n) {
                let reps = x.min_coset_reps();
                let order = x.closure_partition().group_order();
                let group = x.generated_group();
                assert_eq!(order, group.len());
                assert_eq!(reps.len() * order, crate::factorial(n));
                // each coset meets the representative set exactly once
                let reps: BTreeSet<_> = reps.into_iter().collect();
                for w in FinitePerm::all(n) {
                    let hits = group
                        .iter()
                        .filter(|h| reps.contains(&w.compose(h).unwrap()))
                        .count();
                    assert_eq!(hits, 1);
                }
            }
        }
    }

    #[test]
    fn descent_test_exact_under_chain_condition() {
        for n in 3..=5 {
            for x in all_transposition_sets(n) {
                let agree = x.descent_free_elements() == x.min_coset_reps();
                if x.chain_condition() {
                    assert!(agree, "{x:?}");
                }
                // the descent test characterizes coset minima exactly when each
                // block is a chain of consecutive transpositions
                assert_eq!(agree, x.chain_condition(), "{x:?}");
            }
        }
    }
}
