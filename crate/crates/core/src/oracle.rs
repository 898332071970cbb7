//! Brute-force ground truth: Cayley-graph search over alcoves, regions
//! grouped by signature, and full sweeps of `S_n` for orbits.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::affperm::AffinePerm;
use crate::cores::NSet;
use crate::finperm::FinitePerm;
use crate::geometry::RegionSignature;
use crate::levelt::LevelTContext;

/// Elements of each length `0, 1, 2, ...`, one layer at a time.
pub struct Layers {
    n: usize,
    current: Vec<AffinePerm>,
    length: usize,
}

impl Layers {
    pub fn new(n: usize) -> Self {
        Layers {
            n,
            current: alloc::vec![AffinePerm::identity(n).expect("n >= 3")],
            length: 0,
        }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn current(&self) -> &[AffinePerm] {
        &self.current
    }

    /// Move to the next layer: every `w s_i` one longer than `w`.
    pub fn advance(&mut self) {
        let mut next = BTreeSet::new();
        for w in &self.current {
            for i in 0..self.n {
                if !w.has_right_descent(i) {
                    next.insert(w.right_mul_generator(i));
                }
            }
        }
        self.current = next.into_iter().collect();
        self.length += 1;
    }
}

/// Every alcove of length at most `radius`, ordered by length then window.
pub fn bfs_alcoves(n: usize, radius: usize) -> Vec<AffinePerm> {
    let mut layers = Layers::new(n);
    let mut out = layers.current().to_vec();
    while layers.length() < radius {
        layers.advance();
        out.extend_from_slice(layers.current());
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionData {
    pub min: AffinePerm,
    pub min_length: usize,
    /// Longest alcove seen so far and its length.
    pub max: AffinePerm,
    pub max_length: usize,
    pub alcoves: usize,
}

#[derive(Clone, Debug)]
pub struct Regions {
    pub n: usize,
    pub m: usize,
    pub regions: BTreeMap<RegionSignature, RegionData>,
    /// Largest length searched.
    pub radius: usize,
    pub saturated: bool,
}

impl Regions {
    /// Regions with no alcove at the final radius.
    pub fn bounded(&self) -> impl Iterator<Item = (&RegionSignature, &RegionData)> {
        self.regions.iter().filter(move |(_, d)| d.max_length < self.radius)
    }

    pub fn minimal_alcoves(&self) -> BTreeSet<AffinePerm> {
        self.regions.values().map(|d| d.min.clone()).collect()
    }

    pub fn maximal_alcoves(&self) -> BTreeSet<AffinePerm> {
        self.bounded().map(|(_, d)| d.max.clone()).collect()
    }

    pub fn bounded_count(&self) -> usize {
        self.bounded().count()
    }
}

/// `m(n choose 2) + n`.
pub fn default_radius(n: usize, m: usize) -> usize {
    m * n * (n - 1) / 2 + n
}

/// Group alcoves of length at most `radius` by region. `saturated` reports
/// whether the last two layers brought no new region and met the same set
/// of regions.
pub fn regions_by_signature(n: usize, m: usize, radius: usize) -> Regions {
    search(n, m, Some(radius))
}

/// Like [`regions_by_signature`] from the default radius, continuing until
/// saturated.
pub fn regions_saturated(n: usize, m: usize) -> Regions {
    search(n, m, None)
}

fn search(n: usize, m: usize, radius: Option<usize>) -> Regions {
    let mut layers = Layers::new(n);
    let mut regions: BTreeMap<RegionSignature, RegionData> = BTreeMap::new();
    let floor = radius.unwrap_or_else(|| default_radius(n, m));
    let mut quiet = 0;
    let mut last_present: BTreeSet<RegionSignature> = BTreeSet::new();
    loop {
        let len = layers.length();
        let mut present = BTreeSet::new();
        let mut fresh = false;
        for w in layers.current() {
            let sig = RegionSignature::of(w, m);
            match regions.get_mut(&sig) {
                Some(d) => {
                    d.alcoves += 1;
                    if d.max_length < len {
                        d.max = w.clone();
                        d.max_length = len;
                    }
                }
                None => {
                    fresh = true;
                    regions.insert(
                        sig.clone(),
                        RegionData {
                            min: w.clone(),
                            min_length: len,
                            max: w.clone(),
                            max_length: len,
                            alcoves: 1,
                        },
                    );
                }
            }
            present.insert(sig);
        }
        quiet = if !fresh && present == last_present { quiet + 1 } else { 0 };
        last_present = present;
        let saturated = quiet >= 2;
        let stop = match radius {
            Some(r) => len >= r,
            None => len >= floor && saturated,
        };
        if stop {
            return Regions {
                n,
                m,
                regions,
                radius: len,
                saturated,
            };
        }
        layers.advance();
    }
}

/// Orbit of the class of `s` and its stabilizer, by acting with all of `S_n`.
pub fn brute_orbit(s: &NSet, ctx: &LevelTContext) -> (Vec<NSet>, Vec<FinitePerm>) {
    let start = ctx.canonical_rep(s);
    let mut orbit = BTreeSet::new();
    let mut stabilizer = Vec::new();
    for g in FinitePerm::all(ctx.n()) {
        let image = ctx.act_class(&g, &start).unwrap();
        if image == start {
            stabilizer.push(g);
        }
        orbit.insert(image);
    }
    (orbit.into_iter().collect(), stabilizer)
}
