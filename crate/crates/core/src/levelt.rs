//! Level-t actions of `~S_n` on integers and n-sets for `t = mn + 1` and
//! `t = mn - 1`, the sets `C_n^(t)`, and orbits of the finite group on
//! `=_t` classes.
//!
//! With `e = +1` for `t = mn + 1` and `e = -1` for `t = mn - 1`, an affine
//! or finite permutation `w` acts by `w . j = j + e t (w(c) - c)` where
//! `c = j mod n`. Since `e t = 1 mod n` the image lies in class `w(c)`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::affperm::AffinePerm;
use crate::cores::{NSet, NVector};
use crate::finperm::{FinitePerm, TranspositionSet};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    /// `t = mn + 1`
    Plus,
    /// `t = mn - 1`
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LevelTContext {
    n: usize,
    m: usize,
    sign: Sign,
}

impl fmt::Display for LevelTContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} m={} t={}", self.n, self.m, self.t())
    }
}

impl LevelTContext {
    pub fn new(n: usize, m: usize, sign: Sign) -> Result<Self> {
        if n < 3 {
            return Err(Error::RankTooSmall(n));
        }
        if m == 0 {
            return Err(Error::ZeroM);
        }
        Ok(LevelTContext { n, m, sign })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn t(&self) -> i64 {
        (self.m * self.n) as i64 + self.sign.value()
    }

    /// `e t`, the signed step.
    fn step(&self) -> i64 {
        self.sign.value() * self.t()
    }

    fn modulus(&self) -> i64 {
        self.n as i64 * self.t()
    }

    /// `n o t = (n-1)(t-1)/2`.
    pub fn n_circ_t(&self) -> i64 {
        (self.n as i64 - 1) * (self.t() - 1) / 2
    }

    /// Fayers' `s_i * j`.
    pub fn fayers_act(&self, i: usize, j: i64) -> i64 {
        let n = self.n as i64;
        let t = self.t();
        let i = i as i64;
        let nt = self.n_circ_t();
        if j.rem_euclid(n) == ((i - 1) * t - nt).rem_euclid(n) {
            j + t
        } else if j.rem_euclid(n) == (i * t - nt).rem_euclid(n) {
            j - t
        } else {
            j
        }
    }

    /// `w_i . j` for the finite generators, `w_0 = s_theta`.
    pub fn act_int(&self, i: usize, j: i64) -> Result<i64> {
        Ok(self.act_int_finite(&FinitePerm::simple(i, self.n)?, j))
    }

    pub fn act_int_finite(&self, g: &FinitePerm, j: i64) -> i64 {
        let c = j.rem_euclid(self.n as i64) as usize;
        j + self.step() * (g.apply0(c) as i64 - c as i64)
    }

    pub fn act_int_affine(&self, w: &AffinePerm, j: i64) -> i64 {
        let c = j.rem_euclid(self.n as i64);
        j + self.step() * (w.act_on_int(c) - c)
    }

    fn act_entries(&self, s: &NSet, image: impl Fn(i64) -> i64) -> NSet {
        let n = self.n as i64;
        let mut entries = alloc::vec![0; self.n];
        for &j in s.by_residue() {
            let v = image(j);
            entries[v.rem_euclid(n) as usize] = v;
        }
        NSet::from_residue_keyed(entries)
    }

    pub fn act_finite(&self, g: &FinitePerm, s: &NSet) -> Result<NSet> {
        if g.n() != s.n() || s.n() != self.n {
            return Err(Error::RankMismatch(g.n(), s.n()));
        }
        Ok(self.act_entries(s, |j| self.act_int_finite(g, j)))
    }

    pub fn act_affine(&self, w: &AffinePerm, s: &NSet) -> Result<NSet> {
        if w.n() != s.n() || s.n() != self.n {
            return Err(Error::RankMismatch(w.n(), s.n()));
        }
        Ok(self.act_entries(s, |j| self.act_int_affine(w, j)))
    }

    /// `w_{i_1} ... w_{i_k} . S`, letters in `0..n` with `0` meaning `w_0`.
    pub fn act_word(&self, word: &[usize], s: &NSet) -> Result<NSet> {
        self.act_finite(&FinitePerm::from_word(word, self.n)?, s)
    }

    /// All elements pairwise closer than `nt`.
    pub fn in_c(&self, s: &NSet) -> bool {
        s.spread() < self.modulus()
    }

    /// Same residues mod `nt`.
    pub fn equivalent(&self, a: &NSet, b: &NSet) -> bool {
        let key = |s: &NSet| {
            let mut v: Vec<i64> = s
                .by_residue()
                .iter()
                .map(|x| x.rem_euclid(self.modulus()))
                .collect();
            v.sort_unstable();
            v
        };
        a.n() == b.n() && key(a) == key(b)
    }

    /// The unique member of `C_n^(t)` equivalent to `s`.
    pub fn canonical_rep(&self, s: &NSet) -> NSet {
        let nt = self.modulus();
        let mut entries = s.by_residue().to_vec();
        loop {
            let (imax, &max) = entries.iter().enumerate().max_by_key(|p| *p.1).unwrap();
            let (imin, &min) = entries.iter().enumerate().min_by_key(|p| *p.1).unwrap();
            if max - min < nt {
                return NSet::from_residue_keyed(entries);
            }
            entries[imax] -= nt;
            entries[imin] += nt;
        }
    }

    /// Every element of `C_n^(t)`, sorted.
    pub fn enumerate_c(&self) -> Vec<NSet> {
        let mut out: Vec<NSet> = NVector::all_bounded(self.n, self.t())
            .iter()
            .map(NVector::to_nset)
            .filter(|s| self.in_c(s))
            .collect();
        out.sort();
        out
    }

    /// The n-core with n-set `s` is also a t-core: every gap `g` has
    /// `g + t` a gap.
    pub fn is_t_core(&self, s: &NSet) -> bool {
        let n = self.n as i64;
        (0..self.n).all(|r| {
            let shifted = s.get(r) + self.t();
            shifted >= s.get(shifted.rem_euclid(n) as usize)
        })
    }

    /// Elements of `C_n^(t)` whose partition is an `(n, t)`-core.
    pub fn nt_cores(&self) -> Vec<NSet> {
        self.enumerate_c()
            .into_iter()
            .filter(|s| self.is_t_core(s))
            .collect()
    }

    /// `canonical_rep(g . s)`.
    pub fn act_class(&self, g: &FinitePerm, s: &NSet) -> Result<NSet> {
        Ok(self.canonical_rep(&self.act_finite(g, s)?))
    }

    /// Orbit of the class of `s` under `w_1, ..., w_{n-1}`, sorted.
    pub fn orbit(&self, s: &NSet) -> Vec<NSet> {
        let start = self.canonical_rep(s);
        let gens: Vec<FinitePerm> = (1..self.n)
            .map(|i| FinitePerm::simple(i, self.n).unwrap())
            .collect();
        let mut seen = BTreeSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = self.act_class(g, &x).unwrap();
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Every `g` in `S_n` fixing the class of `s`.
    pub fn stabilizer(&self, s: &NSet) -> Vec<FinitePerm> {
        let s = self.canonical_rep(s);
        FinitePerm::all(self.n)
            .into_iter()
            .filter(|g| self.act_class(g, &s).unwrap() == s)
            .collect()
    }

    /// Transpositions `(a, b)` of residue classes with
    /// `S_a - e t a = S_b - e t b (mod nt)`. They generate the stabilizer of
    /// the class of `s`.
    pub fn stabilizer_transpositions(&self, s: &NSet) -> TranspositionSet {
        let key = |r: usize| (s.get(r) - self.step() * r as i64).rem_euclid(self.modulus());
        let pairs = (0..self.n).flat_map(|a| (a + 1..self.n).map(move |b| (a, b)));
        TranspositionSet::new(
            self.n,
            pairs.filter(|&(a, b)| key(a) == key(b)).map(|(a, b)| (a + 1, b + 1)),
        )
        .unwrap()
    }

    /// Generators `w_i` picked out by differences of consecutive n-set
    /// entries; see [`GeneratorRule`].
    pub fn stabilizer_generators(&self, s: &NSet, rule: GeneratorRule) -> Vec<usize> {
        let s = self.canonical_rep(s);
        let step = self.step();
        let diff = |i: usize| s.get(i) - s.get(i - 1);
        match rule {
            GeneratorRule::ExactStep => (1..self.n).filter(|&i| diff(i) == step).collect(),
            GeneratorRule::ExactNegatedStep => (1..self.n).filter(|&i| diff(i) == -step).collect(),
            GeneratorRule::CyclicCongruence => (0..self.n)
                .filter(|&i| {
                    let d = s.get(i) - s.get((i + self.n - 1) % self.n);
                    (d - step).rem_euclid(self.modulus()) == 0
                })
                .collect(),
        }
    }
}

/// Ways of reading off stabilizer generators from an n-set `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorRule {
    /// `w_i`, `1 <= i < n`, with `S_i - S_{i-1} = e t`.
    ExactStep,
    /// `w_i`, `1 <= i < n`, with `S_i - S_{i-1} = -e t`.
    ExactNegatedStep,
    /// `w_i`, `0 <= i < n`, with `S_i - S_{i-1} = e t (mod nt)`, indices
    /// mod n, so `i = 0` compares `S_0` with `S_{n-1}` and means `w_0`.
    CyclicCongruence,
}

/// Closure of the listed generators `w_i` (with `w_0 = s_theta`).
pub fn generated_subgroup(n: usize, generators: &[usize]) -> Vec<FinitePerm> {
    let gens: Vec<FinitePerm> = generators
        .iter()
        .map(|&i| FinitePerm::simple(i, n).unwrap())
        .collect();
    let e = FinitePerm::identity(n);
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
