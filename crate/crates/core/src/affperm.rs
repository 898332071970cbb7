//! The affine symmetric group `~S_n`, stored by n-windows.
//!
//! An affine permutation `phi` of `Z` with `phi(j + n) = phi(j) + n` is
//! determined by its window `(phi(0), ..., phi(n-1))`. The generator `s_0`
//! has window `(-1, 1, 2, ..., n-2, n)` and `s_i` (`1 <= i < n`) swaps the
//! window entries at positions `i-1` and `i`.

use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::finperm::FinitePerm;
use crate::geometry::AffineRoot;
use crate::{Error, Rational, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffinePerm {
    window: Vec<i64>,
}

/// A point of `V = { a : a_1 + ... + a_n = 0 }` with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    coords: Vec<Rational>,
}

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.iter().fold(Rational::zero(), |a, &b| a + b) != Rational::zero() {
            return Err(Error::PointNotInV);
        }
        Ok(RationalPoint { coords })
    }

    pub(crate) fn new_unchecked(coords: Vec<Rational>) -> Self {
        RationalPoint { coords }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    /// `<p | e_i - e_j>` for 1-based `i`, `j`.
    pub fn pair(&self, i: usize, j: usize) -> Rational {
        self.coords[i - 1] - self.coords[j - 1]
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

fn check_rank(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::RankTooSmall(n));
    }
    Ok(())
}

impl AffinePerm {
    pub fn identity(n: usize) -> Result<Self> {
        check_rank(n)?;
        Ok(AffinePerm {
            window: (0..n as i64).collect(),
        })
    }

    /// Validates transversality and the window sum `n(n-1)/2`.
    pub fn from_window(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        check_rank(n)?;
        let ni = n as i64;
        let mut seen = alloc::vec![false; n];
        for &v in &window {
            let r = v.rem_euclid(ni) as usize;
            if seen[r] {
                return Err(Error::NotTransversal(n));
            }
            seen[r] = true;
        }
        let sum: i64 = window.iter().sum();
        let expected = crate::binomial2(n);
        if sum != expected {
            return Err(Error::BadSum { got: sum, expected });
        }
        Ok(AffinePerm { window })
    }

    pub fn generator(i: usize, n: usize) -> Result<Self> {
        check_rank(n)?;
        if i >= n {
            return Err(Error::GeneratorOutOfRange { index: i, n });
        }
        let mut window: Vec<i64> = (0..n as i64).collect();
        if i == 0 {
            window[0] = -1;
            window[n - 1] = n as i64;
        } else {
            window.swap(i - 1, i);
        }
        Ok(AffinePerm { window })
    }

    /// `s_{i_1} s_{i_2} ... s_{i_k}`.
    pub fn from_word(word: &[usize], n: usize) -> Result<Self> {
        let mut w = Self::identity(n)?;
        for &i in word {
            if i >= n {
                return Err(Error::GeneratorOutOfRange { index: i, n });
            }
            w = w.right_mul_generator(i);
        }
        Ok(w)
    }

    /// `g` as an element of `~S_n`; its window is a permutation of `0..n`.
    pub fn from_finite(g: &FinitePerm) -> Result<Self> {
        check_rank(g.n())?;
        Ok(AffinePerm {
            window: (0..g.n()).map(|r| g.apply0(r) as i64).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i as i64)
    }

    /// `w(j)` for any integer `j`.
    pub fn act_on_int(&self, j: i64) -> i64 {
        let n = self.n() as i64;
        let r = j.rem_euclid(n);
        self.window[r as usize] + (j - r)
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch(self.n(), other.n()));
        }
        Ok(AffinePerm {
            window: other.window.iter().map(|&v| self.act_on_int(v)).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let n = self.n() as i64;
        let mut inv = alloc::vec![0; self.n()];
        for (r, &v) in self.window.iter().enumerate() {
            let s = v.rem_euclid(n);
            inv[s as usize] = r as i64 - (v - s);
        }
        AffinePerm { window: inv }
    }

    /// `w * s_i`.
    pub fn right_mul_generator(&self, i: usize) -> Self {
        let n = self.n();
        let mut window = self.window.clone();
        if i == 0 {
            let (first, last) = (window[0], window[n - 1]);
            window[0] = last - n as i64;
            window[n - 1] = first + n as i64;
        } else {
            window.swap(i - 1, i);
        }
        AffinePerm { window }
    }

    /// `l(w s_i) < l(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let n = self.n();
        if i == 0 {
            self.window[n - 1] - n as i64 > self.window[0]
        } else {
            self.window[i - 1] > self.window[i]
        }
    }

    /// Coxeter length, counted over pairs of window positions.
    pub fn length(&self) -> usize {
        let n = self.n() as i64;
        let w = &self.window;
        let mut total = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                total += (w[j] - w[i]).div_euclid(n).unsigned_abs() as usize;
            }
        }
        total
    }

    /// A reduced word `[i_1, ..., i_k]` with `w = s_{i_1} ... s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(i) = (0..w.n()).find(|&i| w.has_right_descent(i)) {
            w = w.right_mul_generator(i);
            word.push(i);
        }
        word.reverse();
        word
    }

    /// `f_n(w)`: the permutation `r + 1 -> (w(r) mod n) + 1` of residues.
    pub fn f_n(&self) -> FinitePerm {
        let n = self.n() as i64;
        let images: Vec<usize> = self
            .window
            .iter()
            .map(|&v| v.rem_euclid(n) as usize)
            .collect();
        FinitePerm::from_zero_based(&images)
    }

    /// `w = g y` with `g` in the finite subgroup and `y^{-1}` having an
    /// ascending window, so `y A_0` is dominant.
    pub fn coset_decompose(&self) -> (FinitePerm, AffinePerm) {
        let x = self.inverse().window;
        let mut sorted = x.clone();
        sorted.sort_unstable();
        let n = self.n();
        // g^{-1}(r) is the rank of x[r]
        let mut g = alloc::vec![0usize; n];
        for (r, v) in x.iter().enumerate() {
            let rank = sorted.binary_search(v).unwrap();
            g[rank] = r;
        }
        let y = AffinePerm { window: sorted }.inverse();
        (FinitePerm::from_zero_based(&g), y)
    }

    /// Window of `w^{-1}` is ascending.
    pub fn is_min_coset_rep(&self) -> bool {
        self.inverse().window.windows(2).all(|p| p[0] < p[1])
    }

    /// The point action on `V`: `(w a)_{w(r) mod n} = a_r + floor(w(r) / n)`
    /// in 0-based coordinates.
    pub fn act_on_point(&self, p: &RationalPoint) -> Result<RationalPoint> {
        if self.n() != p.n() {
            return Err(Error::RankMismatch(self.n(), p.n()));
        }
        let n = self.n() as i64;
        let mut out = alloc::vec![Rational::zero(); self.n()];
        for (r, &v) in self.window.iter().enumerate() {
            let target = v.rem_euclid(n) as usize;
            out[target] = p.coords[r] + Rational::from_integer(v.div_euclid(n));
        }
        Ok(RationalPoint::new_unchecked(out))
    }

    /// Image of an affine root under the level-0 action.
    pub fn act_on_affine_root(&self, root: &AffineRoot) -> Result<AffineRoot> {
        if self.n() != root.n() {
            return Err(Error::RankMismatch(self.n(), root.n()));
        }
        let (p, q) = root.as_integer_pair();
        Ok(AffineRoot::from_integer_pair(
            self.act_on_int(p),
            self.act_on_int(q),
            self.n(),
        ))
    }
}

impl fmt::Debug for AffinePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffinePerm{:?}", self.window)
    }
}

impl fmt::Display for AffinePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::{BTreeMap, VecDeque};
    use alloc::vec;

    fn s(i: usize, n: usize) -> AffinePerm {
        AffinePerm::generator(i, n).unwrap()
    }

    fn word(w: &[usize], n: usize) -> AffinePerm {
        AffinePerm::from_word(w, n).unwrap()
    }

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    fn pt(c: &[Rational]) -> RationalPoint {
        RationalPoint::new(c.to_vec()).unwrap()
    }

    /// Cayley-graph distances from the identity.
    fn bfs_lengths(n: usize, depth: usize) -> BTreeMap<AffinePerm, usize> {
        let e = AffinePerm::identity(n).unwrap();
        let mut dist = BTreeMap::from([(e.clone(), 0)]);
        let mut queue = VecDeque::from([e]);
        while let Some(w) = queue.pop_front() {
            let d = dist[&w];
            if d == depth {
                continue;
            }
            for i in 0..n {
                let v = w.compose(&s(i, n)).unwrap();
                if !dist.contains_key(&v) {
                    dist.insert(v.clone(), d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    #[test]
    fn generator_windows() {
        assert_eq!(s(0, 3).window(), &[-1, 1, 3]);
        assert_eq!(s(1, 3).window(), &[1, 0, 2]);
        assert_eq!(s(2, 3).window(), &[0, 2, 1]);
        assert_eq!(s(0, 5).window(), &[-1, 1, 2, 3, 5]);
        assert!(AffinePerm::generator(3, 3).is_err());
        assert_eq!(AffinePerm::generator(0, 2), Err(Error::RankTooSmall(2)));
    }

    #[test]
    fn window_validation() {
        assert!(AffinePerm::from_window(vec![-1, 0, 4]).is_ok());
        assert_eq!(
            AffinePerm::from_window(vec![0, 3, 2]),
            Err(Error::NotTransversal(3))
        );
        assert_eq!(
            AffinePerm::from_window(vec![3, 1, 2]),
            Err(Error::BadSum { got: 6, expected: 3 })
        );
    }

    #[test]
    fn compose_inverse_act() {
        let w = word(&[0, 1], 3);
        assert_eq!(w.inverse().window(), &[-1, 0, 4]);
        assert_eq!(word(&[1, 0], 3).window(), &[-1, 0, 4]);
        let e = AffinePerm::identity(3).unwrap();
        assert_eq!(e.inverse(), e);
        assert_eq!(s(0, 3).act_on_int(0), -1);
        assert_eq!(s(0, 3).act_on_int(3), 2);
        assert_eq!(
            s(0, 3).compose(&s(0, 4)),
            Err(Error::RankMismatch(3, 4))
        );
    }

    #[test]
    fn lengths_match_bfs() {
        assert_eq!(AffinePerm::identity(3).unwrap().length(), 0);
        assert_eq!(word(&[0, 1], 3).length(), 2);
        assert_eq!(word(&[1, 0, 1], 3).length(), 3);
        for n in 3..=4 {
            for (w, d) in bfs_lengths(n, 6) {
                assert_eq!(w.length(), d, "{w:?}");
                let rw = w.reduced_word();
                assert_eq!(rw.len(), d);
                assert_eq!(AffinePerm::from_word(&rw, n).unwrap(), w);
            }
        }
    }

    #[test]
    fn point_action() {
        let c = pt(&[q(1, 3), q(0, 1), q(-1, 3)]);
        assert_eq!(
            s(0, 3).act_on_point(&c).unwrap(),
            pt(&[q(2, 3), q(0, 1), q(-2, 3)])
        );
        assert_eq!(
            s(1, 3).act_on_point(&c).unwrap(),
            pt(&[q(0, 1), q(1, 3), q(-1, 3)])
        );
        assert_eq!(AffinePerm::identity(3).unwrap().act_on_point(&c).unwrap(), c);
        assert!(RationalPoint::new(vec![q(1, 1), q(0, 1), q(0, 1)]).is_err());
    }

    #[test]
    fn s0_point_formula() {
        // s_0 . (a_1, ..., a_n) = (a_n + 1, a_2, ..., a_{n-1}, a_1 - 1)
        let a = pt(&[q(1, 2), q(1, 5), q(-3, 10), q(-2, 5)]);
        let b = s(0, 4).act_on_point(&a).unwrap();
        assert_eq!(b.coords(), &[q(3, 5), q(1, 5), q(-3, 10), q(-1, 2)]);
    }

    #[test]
    fn point_action_is_a_group_action() {
        let a = pt(&[q(1, 2), q(1, 5), q(-3, 10), q(-2, 5)]);
        for (u, _) in bfs_lengths(4, 3) {
            for (v, _) in bfs_lengths(4, 2) {
                let lhs = u.compose(&v).unwrap().act_on_point(&a).unwrap();
                let rhs = u.act_on_point(&v.act_on_point(&a).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn f_n_examples() {
        assert_eq!(
            word(&[1, 0], 3).f_n(),
            FinitePerm::from_oneline(vec![3, 1, 2]).unwrap()
        );
        assert_eq!(s(0, 3).f_n(), FinitePerm::simple(0, 3).unwrap());
        assert!(AffinePerm::identity(3).unwrap().f_n().is_identity());
        for n in 3..=5 {
            for i in 1..n {
                assert_eq!(s(i, n).f_n(), FinitePerm::simple(i, n).unwrap());
            }
        }
    }

    #[test]
    fn coset_decomposition_examples() {
        let w = word(&[0, 1], 3);
        let (g, y) = w.coset_decompose();
        assert!(g.is_identity());
        assert_eq!(y, w);

        let (g, y) = word(&[1, 0, 1], 3).coset_decompose();
        assert_eq!(g, FinitePerm::simple(1, 3).unwrap());
        assert_eq!(y, word(&[0, 1], 3));

        let (g, y) = s(1, 3).coset_decompose();
        assert_eq!(g, FinitePerm::simple(1, 3).unwrap());
        assert!(y.is_identity());
    }

    #[test]
    fn coset_decomposition_round_trip() {
        for n in 3..=4 {
            for (w, _) in bfs_lengths(n, 6) {
                let (g, y) = w.coset_decompose();
                let ga = AffinePerm::from_finite(&g).unwrap();
                assert_eq!(ga.compose(&y).unwrap(), w);
                assert!(y.is_min_coset_rep());
                assert!(y.length() <= w.length());
            }
        }
    }

    #[test]
    fn affine_root_images() {
        let a0 = AffineRoot::simple(0, 3).unwrap();
        assert_eq!(s(0, 3).act_on_affine_root(&a0).unwrap(), a0.negate());
        let a2 = AffineRoot::simple(2, 3).unwrap();
        // -theta + 2 delta
        assert_eq!(
            word(&[0, 1], 3).act_on_affine_root(&a2).unwrap(),
            AffineRoot::new(3, 3, 1, 2).unwrap()
        );
        let e = AffinePerm::identity(3).unwrap();
        assert_eq!(e.act_on_affine_root(&a2).unwrap(), a2);
    }
}
