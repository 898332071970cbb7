//! Partitions, n-cores, and the four encodings of an n-core: Young diagram,
//! abacus, n-vector and n-set.
//!
//! Rows and columns of a diagram are 1-based, and the box in row `r`,
//! column `c` has content `c - r`. The bead set of a partition with `l`
//! parts is `{ lambda_r + l - r }` together with every negative integer, so
//! its positive beads are the first-column hook lengths.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write;

use crate::affperm::AffinePerm;
use crate::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition);
        }
        Ok(Partition { parts })
    }

    fn from_trailing_zeros(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// `lambda_r`, zero beyond the last row.
    pub fn row(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    pub fn col_len(&self, c: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= c).count()
    }

    pub fn conjugate(&self) -> Self {
        let first = self.row(1);
        Partition {
            parts: (1..=first).map(|c| self.col_len(c)).collect(),
        }
    }

    pub fn contains_box(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.row(row)
    }

    pub fn hook(&self, row: usize, col: usize) -> Result<usize> {
        if !self.contains_box(row, col) {
            return Err(Error::BoxOutside { row, col });
        }
        Ok(self.row(row) - col + self.col_len(col) - row + 1)
    }

    pub fn content(row: usize, col: usize) -> i64 {
        col as i64 - row as i64
    }

    /// Hook lengths row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        (1..=self.len())
            .map(|r| (1..=self.row(r)).map(|c| self.hook(r, c).unwrap()).collect())
            .collect()
    }

    pub fn first_column_hooks(&self) -> Vec<usize> {
        let l = self.len();
        self.parts
            .iter()
            .enumerate()
            .map(|(r, &p)| p + l - r - 1)
            .collect()
    }

    pub fn is_core(&self, n: usize) -> bool {
        self.hook_lengths()
            .iter()
            .flatten()
            .all(|&h| h % n != 0)
    }

    /// Remove the rim hook whose hook length is measured at `(row, col)`.
    pub fn remove_rim_hook_at(&self, row: usize, col: usize) -> Result<Self> {
        if !self.contains_box(row, col) {
            return Err(Error::BoxOutside { row, col });
        }
        let leg = self.col_len(col) - row;
        let mut parts = self.parts.clone();
        for r in row..row + leg {
            parts[r - 1] = self.row(r + 1) - 1;
        }
        parts[row + leg - 1] = col - 1;
        Ok(Self::from_trailing_zeros(parts))
    }

    /// Every partition obtained by removing one rim hook of length `n`.
    pub fn rim_hook_removals(&self, n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for r in 1..=self.len() {
            for c in 1..=self.row(r) {
                if self.hook(r, c).unwrap() == n {
                    out.push(self.remove_rim_hook_at(r, c).unwrap());
                }
            }
        }
        out
    }

    /// The n-core, by sliding beads up their runners.
    pub fn core_of(&self, n: usize) -> Self {
        let mut beads: BTreeSet<usize> = self.first_column_hooks().into_iter().collect();
        loop {
            let movable = beads
                .iter()
                .copied()
                .find(|&b| b >= n && !beads.contains(&(b - n)));
            match movable {
                Some(b) => {
                    beads.remove(&b);
                    beads.insert(b - n);
                }
                None => break,
            }
        }
        Self::from_beads(&beads)
    }

    /// The partition whose bead set is `beads` together with every negative
    /// integer.
    fn from_beads(beads: &BTreeSet<usize>) -> Self {
        let mut parts: Vec<usize> = beads
            .iter()
            .enumerate()
            .map(|(k, &b)| b - k)
            .filter(|&p| p > 0)
            .collect();
        parts.reverse();
        Partition { parts }
    }

    /// `(row, col)` boxes that can be added.
    pub fn addable_boxes(&self) -> Vec<(usize, usize)> {
        (1..=self.len() + 1)
            .filter(|&r| r == 1 || self.row(r - 1) > self.row(r))
            .map(|r| (r, self.row(r) + 1))
            .collect()
    }

    pub fn removable_boxes(&self) -> Vec<(usize, usize)> {
        (1..=self.len())
            .filter(|&r| self.row(r) > self.row(r + 1))
            .map(|r| (r, self.row(r)))
            .collect()
    }

    /// `s_i` acting on an n-core: add every addable box of content `i` mod
    /// `n`, else remove every removable one, else do nothing.
    pub fn level1_act(&self, i: usize, n: usize) -> Self {
        let matches = |&(r, c): &(usize, usize)| {
            Self::content(r, c).rem_euclid(n as i64) == i as i64
        };
        let add: Vec<_> = self.addable_boxes().into_iter().filter(matches).collect();
        let mut parts = self.parts.clone();
        if !add.is_empty() {
            for (r, _) in add {
                if r > parts.len() {
                    parts.push(0);
                }
                parts[r - 1] += 1;
            }
            return Partition { parts };
        }
        for (r, _) in self.removable_boxes().into_iter().filter(matches) {
            parts[r - 1] -= 1;
        }
        Self::from_trailing_zeros(parts)
    }

    /// `w . partition` under the level-1 action, via n-sets.
    pub fn act(&self, w: &AffinePerm) -> Result<Self> {
        Ok(self.n_set(w.n())?.act_level1(w).to_partition())
    }

    pub fn positive_abacus(&self, n: usize) -> Result<Abacus> {
        Abacus::from_beads(n, &self.first_column_hooks())
    }

    pub fn balanced_abacus(&self, n: usize) -> Result<Abacus> {
        Ok(self.positive_abacus(n)?.balanced())
    }

    pub fn n_set(&self, n: usize) -> Result<NSet> {
        if !self.is_core(n) {
            return Err(Error::NotCore(n));
        }
        Ok(self.balanced_abacus(n)?.to_nset())
    }

    pub fn n_vector(&self, n: usize) -> Result<NVector> {
        Ok(self.n_set(n)?.to_nvector())
    }

    /// `X(lambda)`: the n-set in increasing order.
    pub fn n_window(&self, n: usize) -> Result<Vec<i64>> {
        Ok(self.n_set(n)?.sorted())
    }

    /// All partitions of `k`, in reverse lexicographic order.
    pub fn all_of_size(k: usize) -> Vec<Self> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(k, k, &mut Vec::new(), &mut out);
        out
    }

    /// Young diagram, one line per row.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for &p in &self.parts {
            for _ in 0..p {
                s.push('#');
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// A flush abacus with `n` runners, stored by the position of the first gap
/// on each runner: the beads are exactly the integers `p < gaps[p mod n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Abacus {
    gaps: Vec<i64>,
}

impl Abacus {
    /// Abacus with beads at the given nonnegative positions and at every
    /// negative integer.
    pub fn from_beads(n: usize, beads: &[usize]) -> Result<Self> {
        let ni = n as i64;
        let set: BTreeSet<i64> = beads.iter().map(|&b| b as i64).collect();
        let mut gaps = alloc::vec![0i64; n];
        for (r, g) in gaps.iter_mut().enumerate() {
            let mut p = r as i64;
            while set.contains(&p) {
                p += ni;
            }
            *g = p;
        }
        if set.iter().any(|&b| b >= gaps[b.rem_euclid(ni) as usize]) {
            return Err(Error::NotFlush);
        }
        Ok(Abacus { gaps })
    }

    /// From first-gap positions; `gaps[r]` must be congruent to `r`.
    pub fn from_gaps(gaps: Vec<i64>) -> Result<Self> {
        let n = gaps.len() as i64;
        if gaps.iter().enumerate().any(|(r, g)| g.rem_euclid(n) != r as i64) {
            return Err(Error::NotTransversal(gaps.len()));
        }
        Ok(Abacus { gaps })
    }

    pub fn n(&self) -> usize {
        self.gaps.len()
    }

    pub fn first_gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn is_bead(&self, p: i64) -> bool {
        let n = self.n() as i64;
        p < self.gaps[p.rem_euclid(n) as usize]
    }

    /// Row of the first gap on each runner.
    pub fn runner_levels(&self) -> Vec<i64> {
        let n = self.n() as i64;
        self.gaps.iter().map(|g| g.div_euclid(n)).collect()
    }

    pub fn balance_number(&self) -> i64 {
        self.runner_levels().iter().sum()
    }

    /// Shift every bead by minus the balance number.
    pub fn balanced(&self) -> Self {
        let b = self.balance_number();
        let n = self.n() as i64;
        let mut gaps = alloc::vec![0; self.n()];
        for &g in &self.gaps {
            let h = g - b;
            gaps[h.rem_euclid(n) as usize] = h;
        }
        Abacus { gaps }
    }

    pub fn to_nset(&self) -> NSet {
        NSet {
            entries: self.gaps.clone(),
        }
    }

    /// Text picture: one line per row, `o` for a bead and `.` for a gap,
    /// rows from one above the lowest first gap to the highest.
    pub fn render(&self) -> String {
        let levels = self.runner_levels();
        let lo = levels.iter().min().unwrap() - 1;
        let hi = *levels.iter().max().unwrap();
        let n = self.n() as i64;
        let mut s = String::new();
        for row in lo..=hi {
            let _ = write!(s, "{row:>4} ");
            for r in 0..n {
                s.push(if self.is_bead(row * n + r) { 'o' } else { '.' });
            }
            s.push('\n');
        }
        s
    }
}

/// Balanced runner levels of an n-core; entries sum to zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NVector {
    entries: Vec<i64>,
}

impl NVector {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        let sum: i64 = entries.iter().sum();
        if sum != 0 {
            return Err(Error::BadSum { got: sum, expected: 0 });
        }
        Ok(NVector { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn to_nset(&self) -> NSet {
        let n = self.entries.len() as i64;
        NSet {
            entries: self
                .entries
                .iter()
                .enumerate()
                .map(|(r, a)| n * a + r as i64)
                .collect(),
        }
    }

    /// Every n-vector with entries in `[-bound, bound]`.
    pub fn all_bounded(n: usize, bound: i64) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur = alloc::vec![-bound; n - 1];
        loop {
            let last = -cur.iter().sum::<i64>();
            if last.abs() <= bound {
                let mut entries = cur.clone();
                entries.push(last);
                out.push(NVector { entries });
            }
            let mut k = 0;
            loop {
                if k == cur.len() {
                    return out;
                }
                if cur[k] < bound {
                    cur[k] += 1;
                    break;
                }
                cur[k] = -bound;
                k += 1;
            }
        }
    }
}

/// The n-set of an n-core: `entries[r]` is the element congruent to `r`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NSet {
    entries: Vec<i64>,
}

impl NSet {
    /// Accepts the elements in any order; checks transversality and the sum
    /// `n(n-1)/2`.
    pub fn new(elements: &[i64]) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::NotTransversal(0));
        }
        let ni = n as i64;
        let mut entries = alloc::vec![None; n];
        for &v in elements {
            let slot = &mut entries[v.rem_euclid(ni) as usize];
            if slot.is_some() {
                return Err(Error::NotTransversal(n));
            }
            *slot = Some(v);
        }
        let sum: i64 = elements.iter().sum();
        let expected = crate::binomial2(n);
        if sum != expected {
            return Err(Error::BadSum { got: sum, expected });
        }
        Ok(NSet {
            entries: entries.into_iter().map(Option::unwrap).collect(),
        })
    }

    pub fn empty_core(n: usize) -> Self {
        NSet {
            entries: (0..n as i64).collect(),
        }
    }

    pub(crate) fn from_residue_keyed(entries: Vec<i64>) -> Self {
        NSet { entries }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// Element congruent to `r` mod n.
    pub fn get(&self, r: usize) -> i64 {
        self.entries[r]
    }

    pub fn by_residue(&self) -> &[i64] {
        &self.entries
    }

    pub fn sorted(&self) -> Vec<i64> {
        let mut v = self.entries.clone();
        v.sort_unstable();
        v
    }

    pub fn spread(&self) -> i64 {
        self.entries.iter().max().unwrap() - self.entries.iter().min().unwrap()
    }

    pub fn to_nvector(&self) -> NVector {
        let n = self.n() as i64;
        NVector {
            entries: self.entries.iter().map(|s| s.div_euclid(n)).collect(),
        }
    }

    pub fn to_abacus(&self) -> Abacus {
        Abacus {
            gaps: self.entries.clone(),
        }
    }

    /// The n-core whose balanced abacus has these first gaps.
    pub fn to_partition(&self) -> Partition {
        let lo = *self.entries.iter().min().unwrap();
        let hi = *self.entries.iter().max().unwrap();
        let abacus = self.to_abacus();
        let mut gaps_below = 0;
        let mut parts = Vec::new();
        for p in lo..hi {
            if abacus.is_bead(p) {
                parts.push(gaps_below);
            } else {
                gaps_below += 1;
            }
        }
        parts.retain(|&p| p > 0);
        parts.reverse();
        Partition { parts }
    }

    /// `w . S = { w(s) : s in S }`.
    pub fn act_level1(&self, w: &AffinePerm) -> Self {
        let n = self.n() as i64;
        let mut entries = alloc::vec![0; self.n()];
        for &s in &self.entries {
            let v = w.act_on_int(s);
            entries[v.rem_euclid(n) as usize] = v;
        }
        NSet { entries }
    }
}

impl fmt::Display for NSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    /// Every n-core reachable by removing rim hooks in any order.
    fn all_removal_results(l: &Partition, n: usize, out: &mut BTreeSet<Partition>) {
        let next = l.rim_hook_removals(n);
        if next.is_empty() {
            out.insert(l.clone());
        }
        for m in next {
            all_removal_results(&m, n, out);
        }
    }

    #[test]
    fn hooks_and_contents() {
        let l = part(&[5, 3, 1, 1]);
        assert_eq!(l.hook_lengths()[0], vec![8, 5, 4, 2, 1]);
        assert_eq!(part(&[1]).hook(1, 1), Ok(1));
        assert_eq!(Partition::content(1, 1), 0);
        assert_eq!(part(&[3, 1, 1]).first_column_hooks(), vec![5, 2, 1]);
        assert_eq!(l.hook(2, 4), Err(Error::BoxOutside { row: 2, col: 4 }));
        assert_eq!(Partition::content(2, 5), 3);
    }

    #[test]
    fn core_tests() {
        assert!(part(&[5, 3, 1, 1]).is_core(3));
        assert!(Partition::empty().is_core(3));
        assert!(!part(&[5, 3, 1, 1]).is_core(4));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn core_of_examples() {
        assert_eq!(part(&[2, 2]).core_of(2), Partition::empty());
        let l = part(&[5, 3, 1, 1]);
        assert_eq!(l.core_of(3), l);
        assert_eq!(part(&[3]).core_of(2), part(&[1]));
    }

    #[test]
    fn rim_hook_removal_is_order_independent() {
        for k in 0..=12 {
            for l in Partition::all_of_size(k) {
                for n in 2..=4 {
                    let mut results = BTreeSet::new();
                    all_removal_results(&l, n, &mut results);
                    assert_eq!(results.len(), 1, "{l} n={n}");
                    let core = results.into_iter().next().unwrap();
                    assert!(core.is_core(n));
                    assert_eq!(core, l.core_of(n), "{l} n={n}");
                }
            }
        }
    }

    #[test]
    fn rim_hook_shapes() {
        // removing the 8-hook at (1,1) of (5,3,1,1) leaves (2)
        assert_eq!(part(&[5, 3, 1, 1]).remove_rim_hook_at(1, 1).unwrap(), part(&[2]));
        assert_eq!(part(&[5, 3, 1, 1]).remove_rim_hook_at(1, 2).unwrap(), part(&[2, 1, 1, 1]));
        assert_eq!(part(&[3, 3]).remove_rim_hook_at(1, 2).unwrap(), part(&[2, 1]));
    }

    #[test]
    fn abaci_of_example() {
        let l = part(&[5, 3, 1, 1]);
        let ab = l.positive_abacus(3).unwrap();
        for p in -6..12 {
            assert_eq!(ab.is_bead(p), p < 0 || [1, 2, 5, 8].contains(&p), "{p}");
        }
        assert_eq!(ab.first_gaps(), &[0, 4, 11]);
        assert_eq!(ab.balance_number(), 4);
        assert_eq!(ab.balanced().runner_levels(), vec![0, 2, -2]);
        assert_eq!(l.n_vector(3).unwrap().entries(), &[0, 2, -2]);
        assert_eq!(l.n_set(3).unwrap(), NSet::new(&[0, 7, -4]).unwrap());

        let e = Partition::empty().positive_abacus(3).unwrap();
        assert_eq!(e.first_gaps(), &[0, 1, 2]);
        assert_eq!(Partition::empty().balanced_abacus(3).unwrap().runner_levels(), vec![0, 0, 0]);

        let two = part(&[2]).positive_abacus(3).unwrap();
        assert!(two.is_bead(2) && !two.is_bead(0) && !two.is_bead(1) && !two.is_bead(3));
        assert_eq!(part(&[2]).n_set(3).unwrap(), NSet::new(&[0, 4, -1]).unwrap());
        assert_eq!(part(&[1]).n_set(3).unwrap(), NSet::new(&[3, 1, -1]).unwrap());
    }

    #[test]
    fn encodings_reject_non_cores() {
        assert_eq!(part(&[3]).n_set(3), Err(Error::NotCore(3)));
        assert_eq!(part(&[3]).positive_abacus(3), Err(Error::NotFlush));
    }

    #[test]
    fn empty_encodings() {
        let e = Partition::empty();
        assert_eq!(e.n_vector(3).unwrap().entries(), &[0, 0, 0]);
        assert_eq!(e.n_set(3).unwrap().by_residue(), &[0, 1, 2]);
        assert_eq!(e.n_window(3).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn nset_validation() {
        assert_eq!(NSet::new(&[0, 3, 0]), Err(Error::NotTransversal(3)));
        assert_eq!(
            NSet::new(&[0, 1, 5]),
            Err(Error::BadSum { got: 6, expected: 3 })
        );
        assert!(NVector::new(vec![1, 1, -1]).is_err());
    }

    #[test]
    fn encoding_round_trips() {
        for n in 3..=4 {
            for v in NVector::all_bounded(n, 3) {
                let s = v.to_nset();
                let l = s.to_partition();
                assert!(l.is_core(n), "{l}");
                assert_eq!(l.n_set(n).unwrap(), s);
                assert_eq!(l.n_vector(n).unwrap(), v);
                assert_eq!(s.to_nvector(), v);
                assert_eq!(l.balanced_abacus(n).unwrap().to_nset(), s);
                assert_eq!(NSet::new(&s.sorted()).unwrap(), s);
            }
        }
    }

    #[test]
    fn level1_examples() {
        assert_eq!(Partition::empty().level1_act(0, 3), part(&[1]));
        assert_eq!(part(&[1]).level1_act(1, 3), part(&[2]));
        assert_eq!(part(&[2]).level1_act(0, 3), part(&[2]));
        assert_eq!(part(&[1]).level1_act(0, 3), Partition::empty());
    }

    #[test]
    fn level1_matches_nset_action() {
        for n in 3..=4 {
            for v in NVector::all_bounded(n, 2) {
                let s = v.to_nset();
                let l = s.to_partition();
                for i in 0..n {
                    let g = AffinePerm::generator(i, n).unwrap();
                    let moved = l.level1_act(i, n);
                    assert!(moved.is_core(n));
                    assert_eq!(moved.n_set(n).unwrap(), s.act_level1(&g), "{l} i={i}");
                    assert_eq!(moved.level1_act(i, n), l);
                }
            }
        }
    }

    #[test]
    fn render_is_stable() {
        assert_eq!(part(&[3, 1]).render(), "###\n#\n");
        let ab = part(&[2]).balanced_abacus(3).unwrap();
        assert_eq!(ab.render(), "  -2 ooo\n  -1 oo.\n   0 .o.\n   1 ...\n");
        assert_eq!(part(&[5, 3, 1, 1]).to_string(), "(5,3,1,1)");
        assert_eq!(NSet::new(&[0, 7, -4]).unwrap().to_string(), "{0,7,-4}");
    }
}
