//! Affine roots, hyperplanes and alcoves of the affine Coxeter arrangement,
//! and regions of the m-Shi arrangement.
//!
//! The affine root `e_i - e_j + k delta` is the affine function
//! `x -> x_i - x_j + k` on `V`; `H_{a,k}` is the hyperplane `<x|a> = k`.
//! The alcove `w A_0` is identified with `w`. Its centroid `c` satisfies
//! `c_i - c_j = (X_j - X_i) / n` where `X` is the window of `w^{-1}`, so
//! every question about where an alcove sits relative to a hyperplane is an
//! integer floor division.

use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::affperm::{AffinePerm, RationalPoint};
use crate::{Error, Rational, Result};

/// `e_i - e_j + k delta` with `1 <= i, j <= n`, `i != j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineRoot {
    n: usize,
    i: usize,
    j: usize,
    k: i64,
}

impl AffineRoot {
    pub fn new(n: usize, i: usize, j: usize, k: i64) -> Result<Self> {
        if i == j || i == 0 || j == 0 || i > n || j > n {
            return Err(Error::InvalidTransposition { i, j, n });
        }
        Ok(AffineRoot { n, i, j, k })
    }

    /// `alpha_i = e_i - e_{i+1}` for `1 <= i < n`; `alpha_0 = delta - theta`.
    pub fn simple(i: usize, n: usize) -> Result<Self> {
        match i {
            0 => Self::new(n, n, 1, 1),
            i if i < n => Self::new(n, i, i + 1, 0),
            _ => Err(Error::GeneratorOutOfRange { index: i, n }),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Indices `(i, j)` of the real part `e_i - e_j`.
    pub fn real_part(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    /// Coefficient of `delta`.
    pub fn delta_coefficient(&self) -> i64 {
        self.k
    }

    pub fn negate(&self) -> Self {
        AffineRoot {
            n: self.n,
            i: self.j,
            j: self.i,
            k: -self.k,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.k > 0 || (self.k == 0 && self.i < self.j)
    }

    /// The root as a pair `(p, q)` of integers: `e_{p mod n} - e_{q mod n}`
    /// plus `(floor(q/n) - floor(p/n)) delta`, 0-based residues.
    pub(crate) fn as_integer_pair(&self) -> (i64, i64) {
        let n = self.n as i64;
        (self.i as i64 - 1, self.j as i64 - 1 + self.k * n)
    }

    pub(crate) fn from_integer_pair(p: i64, q: i64, n: usize) -> Self {
        let ni = n as i64;
        AffineRoot {
            n,
            i: p.rem_euclid(ni) as usize + 1,
            j: q.rem_euclid(ni) as usize + 1,
            k: q.div_euclid(ni) - p.div_euclid(ni),
        }
    }

    /// `H_{a,-k}` with `a` normalized positive, and the side (`+1` or `-1`)
    /// on which the root is positive.
    pub fn zero_set(&self) -> (Hyperplane, i8) {
        if self.i < self.j {
            (Hyperplane::new_unchecked(self.n, self.i, self.j, -self.k), 1)
        } else {
            (Hyperplane::new_unchecked(self.n, self.j, self.i, self.k), -1)
        }
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-e{}", self.i, self.j)?;
        match self.k {
            0 => Ok(()),
            k if k > 0 => write!(f, "+{k}d"),
            k => write!(f, "{k}d"),
        }
    }
}

/// `H_{e_i - e_j, k}` with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperplane {
    n: usize,
    i: usize,
    j: usize,
    level: i64,
}

impl Hyperplane {
    pub fn new(n: usize, i: usize, j: usize, level: i64) -> Result<Self> {
        if i == 0 || j > n || i >= j {
            return Err(Error::InvalidTransposition { i, j, n });
        }
        Ok(Self::new_unchecked(n, i, j, level))
    }

    fn new_unchecked(n: usize, i: usize, j: usize, level: i64) -> Self {
        Hyperplane { n, i, j, level }
    }

    pub fn root(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn is_shi(&self, m: usize) -> bool {
        -(m as i64) < self.level && self.level <= m as i64
    }

    /// `<x|a> - k` for a point of `V`.
    pub fn evaluate(&self, x: &RationalPoint) -> Rational {
        x.pair(self.i, self.j) - Rational::from_integer(self.level)
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H(e{}-e{},{})", self.i, self.j, self.level)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WallKind {
    Floor,
    Ceiling,
    /// Level-0 walls are neither floors nor ceilings.
    ThroughOrigin,
}

impl fmt::Display for WallKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WallKind::Floor => "floor",
            WallKind::Ceiling => "ceiling",
            WallKind::ThroughOrigin => "through-origin",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Wall {
    pub hyperplane: Hyperplane,
    /// `i` when the wall is the zero set of `w(alpha_i)`.
    pub label: usize,
    pub kind: WallKind,
    /// `+1` if the alcove lies where `<x|a> > level`, else `-1`.
    pub side: i8,
}

/// Vertices `0, omega_1, ..., omega_{n-1}` of `A_0` and their average.
pub fn fundamental_alcove_data(n: usize) -> Result<(Vec<RationalPoint>, RationalPoint)> {
    if n < 3 {
        return Err(Error::RankTooSmall(n));
    }
    let ni = n as i64;
    let mut vertices = alloc::vec![RationalPoint::new_unchecked(alloc::vec![Rational::zero(); n])];
    for i in 1..n {
        let coords = (0..n)
            .map(|r| {
                let top = if r < i { ni - i as i64 } else { -(i as i64) };
                Rational::new(top, ni)
            })
            .collect();
        vertices.push(RationalPoint::new_unchecked(coords));
    }
    let mut sum = alloc::vec![Rational::zero(); n];
    for v in &vertices {
        for (s, c) in sum.iter_mut().zip(v.coords()) {
            *s += c;
        }
    }
    let centroid = sum.into_iter().map(|s| s / Rational::from_integer(ni)).collect();
    Ok((vertices, RationalPoint::new_unchecked(centroid)))
}

/// Centroid of `w A_0`.
///
/// Panics if a coordinate difference is an integer, which would put the
/// point on a hyperplane of the arrangement.
pub fn centroid(w: &AffinePerm) -> RationalPoint {
    let (_, c0) = fundamental_alcove_data(w.n()).unwrap();
    let c = w.act_on_point(&c0).unwrap();
    let coords = c.coords();
    for a in 0..coords.len() {
        for b in a + 1..coords.len() {
            assert!(!(coords[a] - coords[b]).is_integer(), "centroid on a hyperplane");
        }
    }
    c
}

/// `floor(<c|e_i - e_j>)` at the centroid, 0-based `i`, `j`, given the
/// window `x` of `w^{-1}`.
fn floor_pair(x: &[i64], i: usize, j: usize) -> i64 {
    (x[j] - x[i]).div_euclid(x.len() as i64)
}

/// The `n` walls of `w A_0`, by label.
pub fn walls(w: &AffinePerm) -> Vec<Wall> {
    let n = w.n();
    (0..n)
        .map(|label| {
            let image = w.act_on_affine_root(&AffineRoot::simple(label, n).unwrap()).unwrap();
            let (hyperplane, side) = image.zero_set();
            let level = hyperplane.level;
            let kind = if level == 0 {
                WallKind::ThroughOrigin
            } else {
                let origin_side = if level < 0 { 1 } else { -1 };
                if origin_side != side {
                    WallKind::Floor
                } else {
                    WallKind::Ceiling
                }
            };
            Wall {
                hyperplane,
                label,
                kind,
                side,
            }
        })
        .collect()
}

pub fn floors(w: &AffinePerm) -> Vec<Wall> {
    walls(w).into_iter().filter(|x| x.kind == WallKind::Floor).collect()
}

pub fn ceilings(w: &AffinePerm) -> Vec<Wall> {
    walls(w).into_iter().filter(|x| x.kind == WallKind::Ceiling).collect()
}

/// What the gap `X_j - X_i` in an ascending window says about the walls of
/// the dominant alcove along `e_i - e_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WindowWallTest {
    /// The alcove lies strictly between `H_{a,k}` and `H_{a,k+1}`.
    pub k: i64,
    /// `X_j - X_i = nk + 1`.
    pub wall_at_k: bool,
    /// `X_j - X_i = n(k+1) - 1`.
    pub wall_at_k_plus_1: bool,
}

/// `i < j` are 1-based positions in the ascending window `x`.
pub fn window_wall_test(x: &[i64], i: usize, j: usize) -> Result<WindowWallTest> {
    let n = x.len();
    if i == 0 || i >= j || j > n {
        return Err(Error::InvalidTransposition { i, j, n });
    }
    if x.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::NotAscending);
    }
    let ni = n as i64;
    let d = x[j - 1] - x[i - 1];
    let k = d.div_euclid(ni);
    Ok(WindowWallTest {
        k,
        wall_at_k: d == ni * k + 1,
        wall_at_k_plus_1: d == ni * (k + 1) - 1,
    })
}

/// `w A_0` lies in the dominant chamber.
pub fn is_dominant(w: &AffinePerm) -> bool {
    w.is_min_coset_rep()
}

/// Which side of each m-Shi hyperplane a region lies on, recorded per
/// positive root `e_i - e_j` (pairs in lexicographic order) as
/// `floor(<x|e_i - e_j>)` clamped to `[-m, m]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RegionSignature {
    n: usize,
    m: i64,
    values: Vec<i64>,
}

impl RegionSignature {
    pub fn of(w: &AffinePerm, m: usize) -> Self {
        let n = w.n();
        let m = m as i64;
        let x = w.inverse();
        let x = x.window();
        let mut values = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                values.push(floor_pair(x, i, j).clamp(-m, m));
            }
        }
        RegionSignature { n, m, values }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `+1` if the region lies on the side `<x|e_i - e_j> > k` of a Shi
    /// hyperplane, `-1` otherwise.
    pub fn side(&self, h: &Hyperplane) -> i8 {
        let v = self.value(h.i - 1, h.j - 1);
        if v >= h.level {
            1
        } else {
            -1
        }
    }

    fn value(&self, i: usize, j: usize) -> i64 {
        // index of (i, j) in lexicographic pair order
        let idx = i * (2 * self.n - i - 1) / 2 + (j - i - 1);
        self.values[idx]
    }

    /// Every `<x|e_i - e_j>` is bounded above and below on the region.
    ///
    /// The region is cut out by difference constraints `lo <= x_i - x_j <= hi`;
    /// it is bounded iff shortest paths in the constraint graph are finite
    /// in both directions for every pair.
    pub fn is_bounded(&self) -> bool {
        let n = self.n;
        let inf = i64::MAX / 4;
        let mut upper = alloc::vec![alloc::vec![inf; n]; n];
        for (i, row) in upper.iter_mut().enumerate() {
            row[i] = 0;
        }
        for i in 0..n {
            for j in i + 1..n {
                let f = self.value(i, j);
                if f != self.m {
                    upper[i][j] = upper[i][j].min(f + 1);
                }
                if f != -self.m {
                    upper[j][i] = upper[j][i].min(-f);
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if upper[i][k] < inf && upper[k][j] < inf {
                        upper[i][j] = upper[i][j].min(upper[i][k] + upper[k][j]);
                    }
                }
            }
        }
        upper.iter().flatten().all(|&u| u < inf)
    }
}

pub fn region_signature(w: &AffinePerm, m: usize) -> RegionSignature {
    RegionSignature::of(w, m)
}

pub fn same_region(a: &AffinePerm, b: &AffinePerm, m: usize) -> bool {
    RegionSignature::of(a, m) == RegionSignature::of(b, m)
}

/// The alcove has minimal length in its Shi region: every floor is a Shi
/// hyperplane.
pub fn is_m_minimal(w: &AffinePerm, m: usize) -> bool {
    floors(w).iter().all(|f| f.hyperplane.is_shi(m))
}

/// The region is bounded and the alcove has maximal length in it: every
/// ceiling is a Shi hyperplane.
pub fn is_m_maximal(w: &AffinePerm, m: usize) -> bool {
    is_bounded_region(w, m) && ceilings(w).iter().all(|c| c.hyperplane.is_shi(m))
}

pub fn is_bounded_region(w: &AffinePerm, m: usize) -> bool {
    RegionSignature::of(w, m).is_bounded()
}

/// Number of hyperplanes `H_{a,k}` separating `w A_0` from `A_0`, counted
/// from the centroid.
pub fn separating_hyperplanes(w: &AffinePerm) -> usize {
    let c = centroid(w);
    let n = w.n();
    let mut total = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            total += c.pair(i, j).floor().to_integer().unsigned_abs() as usize;
        }
    }
    total
}
