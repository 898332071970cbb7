//! Parking functions of m-Shi regions via arc diagrams.
//!
//! At a point `x` of a region list the `mn` values `x_i + k`
//! (`1 <= i <= n`, `0 <= k < m`) in decreasing order. Join `x_i + k` to
//! `x_i + k - 1`, and join `x_i` to `x_j + m - 1` whenever `i < j` and the
//! region lies on the positive side of `H_{e_i - e_j, m}`. Then drop every
//! arc that strictly contains another. The chains left over are the
//! connected components, and `f(i)` is the leftmost position in the chain
//! of `x_i`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::affperm::AffinePerm;
use crate::finperm::FinitePerm;
use crate::geometry::centroid;
use crate::{Error, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcDiagram {
    pub n: usize,
    pub m: usize,
    /// `(i, k)` standing for `x_i + k`, 1-based `i`, by position.
    pub symbols: Vec<(usize, usize)>,
    /// Arcs as 1-based `(left, right)` positions before pruning.
    pub raw_arcs: BTreeSet<(usize, usize)>,
    pub arcs: BTreeSet<(usize, usize)>,
}

fn strictly_contains(a: (usize, usize), b: (usize, usize)) -> bool {
    a != b && a.0 <= b.0 && b.1 <= a.1
}

/// Arcs of `arcs` not strictly containing another arc of `arcs`.
pub fn prune(arcs: &BTreeSet<(usize, usize)>) -> BTreeSet<(usize, usize)> {
    arcs.iter()
        .copied()
        .filter(|&a| !arcs.iter().any(|&b| strictly_contains(a, b)))
        .collect()
}

impl ArcDiagram {
    pub fn position(&self, i: usize, k: usize) -> usize {
        self.symbols.iter().position(|&s| s == (i, k)).unwrap() + 1
    }

    /// Leftmost position of each chain, for `x_1, ..., x_n`.
    pub fn chain_heads(&self) -> Vec<usize> {
        let size = self.n * self.m;
        let mut parent: Vec<usize> = (0..=size).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in &self.arcs {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            // keep the smaller position as the root
            parent[ra.max(rb)] = ra.min(rb);
        }
        (1..=self.n)
            .map(|i| {
                let p = self.position(i, 0);
                find(&mut parent, p)
            })
            .collect()
    }
}

pub fn arc_diagram(w: &AffinePerm, m: usize) -> ArcDiagram {
    let n = w.n();
    let c = centroid(w);
    let value = |&(i, k): &(usize, usize)| c.coords()[i - 1] + Rational::from_integer(k as i64);
    let mut symbols: Vec<(usize, usize)> = (1..=n).flat_map(|i| (0..m).map(move |k| (i, k))).collect();
    symbols.sort_by_key(|s| core::cmp::Reverse(value(s)));
    let pos = |s: (usize, usize)| symbols.iter().position(|&x| x == s).unwrap() + 1;
    let mut raw_arcs = BTreeSet::new();
    for i in 1..=n {
        for k in 1..m {
            raw_arcs.insert((pos((i, k)), pos((i, k - 1))));
        }
    }
    let level = Rational::from_integer(m as i64);
    for i in 1..=n {
        for j in i + 1..=n {
            if c.pair(i, j) > level {
                raw_arcs.insert((pos((i, 0)), pos((j, m - 1))));
            }
        }
    }
    let arcs = prune(&raw_arcs);
    ArcDiagram {
        n,
        m,
        symbols,
        raw_arcs,
        arcs,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParkingFunction {
    values: Vec<usize>,
}

impl ParkingFunction {
    pub fn new(values: Vec<usize>) -> Self {
        ParkingFunction { values }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Sorted values `b_1 <= ... <= b_n` satisfy `b_i <= m(i - 1) + 1`.
    pub fn is_m_parking(&self, m: usize) -> bool {
        let mut b = self.values.clone();
        b.sort_unstable();
        b.iter().enumerate().all(|(i, &v)| v >= 1 && v <= m * i + 1)
    }

    /// `(pi . f)(i) = f(pi^{-1}(i))`.
    pub fn act(&self, pi: &FinitePerm) -> Result<Self> {
        if pi.n() != self.values.len() {
            return Err(Error::RankMismatch(pi.n(), self.values.len()));
        }
        let inv = pi.inverse();
        Ok(ParkingFunction {
            values: (1..=pi.n()).map(|i| self.values[inv.apply(i) - 1]).collect(),
        })
    }

    /// `{ pi in S_n : pi . f = f }`.
    pub fn stabilizer(&self) -> Vec<FinitePerm> {
        FinitePerm::all(self.values.len())
            .into_iter()
            .filter(|pi| self.act(pi).unwrap() == *self)
            .collect()
    }

    /// Every m-parking function of length `n`, sorted.
    pub fn all(n: usize, m: usize) -> Vec<Self> {
        let top = m * (n - 1) + 1;
        let mut out = Vec::new();
        let mut cur = alloc::vec![1usize; n];
        loop {
            let f = ParkingFunction { values: cur.clone() };
            if f.is_m_parking(m) {
                out.push(f);
            }
            let mut k = n;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if cur[k] < top {
                    cur[k] += 1;
                    break;
                }
                cur[k] = 1;
            }
        }
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

pub fn parking_function(w: &AffinePerm, m: usize) -> ParkingFunction {
    ParkingFunction::new(arc_diagram(w, m).chain_heads())
}
