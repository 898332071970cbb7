//! Bijections between extremal alcoves of the m-Shi arrangement and n-sets.
//!
//! Write an alcove as `w = g y` with `g` finite and `y` dominant, let `X` be
//! the ascending window of `y^{-1}` and `sigma = f_n(y^{-1})`. Then
//!
//! * m-minimal alcoves correspond to `C_n^(mn+1)` and
//! * m-maximal alcoves (one per bounded region) to `C_n^(mn-1)`
//!
//! by sending `w` to the class of `sigma g sigma^{-1} . X` under the level-t
//! action. The dominant extremal alcoves are indexed by `(n, t)`-cores, and
//! every other extremal alcove is `rho y` for a minimal coset representative
//! `rho` of the group generated by the level-m floors (or ceilings) of `y`.

use alloc::vec::Vec;
use core::fmt;

use crate::affperm::AffinePerm;
use crate::cores::NSet;
use crate::finperm::{FinitePerm, TranspositionSet};
use crate::geometry::{self, WallKind};
use crate::levelt::{LevelTContext, Sign};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Minimal,
    Maximal,
}

impl Kind {
    pub fn sign(self) -> Sign {
        match self {
            Kind::Minimal => Sign::Plus,
            Kind::Maximal => Sign::Minus,
        }
    }

    pub fn of_sign(sign: Sign) -> Self {
        match sign {
            Sign::Plus => Kind::Minimal,
            Sign::Minus => Kind::Maximal,
        }
    }

    pub fn context(self, n: usize, m: usize) -> Result<LevelTContext> {
        LevelTContext::new(n, m, self.sign())
    }

    /// Floors for minimal alcoves, ceilings for maximal ones.
    pub fn wall_kind(self) -> WallKind {
        match self {
            Kind::Minimal => WallKind::Floor,
            Kind::Maximal => WallKind::Ceiling,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Minimal => "minimal",
            Kind::Maximal => "maximal",
        })
    }
}

pub fn is_extremal(w: &AffinePerm, m: usize, kind: Kind) -> bool {
    match kind {
        Kind::Minimal => geometry::is_m_minimal(w, m),
        Kind::Maximal => geometry::is_m_maximal(w, m),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiRegionRecord {
    pub w: AffinePerm,
    pub g: FinitePerm,
    pub y: AffinePerm,
    pub sigma: FinitePerm,
    pub core: NSet,
    pub kind: Kind,
}

impl ShiRegionRecord {
    pub fn from_alcove(w: &AffinePerm, ctx: &LevelTContext) -> Result<Self> {
        let kind = Kind::of_sign(ctx.sign());
        if ctx.n() != w.n() {
            return Err(Error::RankMismatch(ctx.n(), w.n()));
        }
        if !is_extremal(w, ctx.m(), kind) {
            return Err(Error::NotExtremal(kind));
        }
        let (g, y) = w.coset_decompose();
        let sigma = y.inverse().f_n();
        let core = core_of_parts(&g, &y, &sigma, ctx);
        Ok(ShiRegionRecord {
            w: w.clone(),
            g,
            y,
            sigma,
            core,
            kind,
        })
    }

    /// Ascending window of `y^{-1}`.
    pub fn x(&self) -> Vec<i64> {
        self.y.inverse().window().to_vec()
    }
}

fn core_of_parts(g: &FinitePerm, y: &AffinePerm, sigma: &FinitePerm, ctx: &LevelTContext) -> NSet {
    let x = NSet::new(y.inverse().window()).unwrap();
    let h = sigma.conjugate(g).unwrap();
    ctx.canonical_rep(&ctx.act_finite(&h, &x).unwrap())
}

/// The n-set in `C_n^(t)` attached to an extremal alcove.
pub fn alcove_to_core(w: &AffinePerm, ctx: &LevelTContext) -> Result<NSet> {
    Ok(ShiRegionRecord::from_alcove(w, ctx)?.core)
}

/// Transpositions `(i, j)` with `H_{e_i - e_j, m}` a floor (minimal) or a
/// ceiling (maximal) of the dominant alcove `y A_0`.
pub fn level_m_floor_set(y: &AffinePerm, m: usize, kind: Kind) -> Result<TranspositionSet> {
    if !geometry::is_dominant(y) {
        return Err(Error::NotDominant);
    }
    let wanted = kind.wall_kind();
    TranspositionSet::new(
        y.n(),
        geometry::walls(y)
            .into_iter()
            .filter(|x| x.kind == wanted && x.hyperplane.level() == m as i64)
            .map(|x| x.hyperplane.root()),
    )
}

/// Dominant extremal alcoves: `y` with `y^{-1}` having window `X(mu)` for
/// each `(n, t)`-core `mu`.
pub fn dominant_extremal(ctx: &LevelTContext) -> Vec<AffinePerm> {
    let mut out: Vec<AffinePerm> = ctx
        .nt_cores()
        .iter()
        .map(|s| dominant_of_window(&s.sorted()))
        .collect();
    out.sort_by_key(|w| (w.length(), w.clone()));
    out
}

fn dominant_of_window(x: &[i64]) -> AffinePerm {
    AffinePerm::from_window(x.to_vec()).unwrap().inverse()
}

/// One record per region (minimal) or bounded region (maximal), sorted by
/// length and then window.
pub fn enumerate_extremal(n: usize, m: usize, kind: Kind) -> Result<Vec<ShiRegionRecord>> {
    let ctx = kind.context(n, m)?;
    let mut out = Vec::new();
    for y in dominant_extremal(&ctx) {
        let x = level_m_floor_set(&y, m, kind)?;
        for rho in x.min_coset_reps() {
            let w = AffinePerm::from_finite(&rho)?.compose(&y)?;
            out.push(ShiRegionRecord::from_alcove(&w, &ctx)?);
        }
    }
    out.sort_by(|a, b| (a.w.length(), &a.w).cmp(&(b.w.length(), &b.w)));
    Ok(out)
}

/// The extremal alcove whose n-set is the class of `s`.
///
/// Panics if the level-t orbit of `s` does not contain exactly one
/// `(n, t)`-core.
pub fn core_to_alcove(s: &NSet, ctx: &LevelTContext) -> Result<AffinePerm> {
    if s.n() != ctx.n() {
        return Err(Error::RankMismatch(ctx.n(), s.n()));
    }
    if !ctx.in_c(s) {
        return Err(Error::OutsideFundamentalSet {
            spread: s.spread(),
            bound: ctx.n() as i64 * ctx.t(),
        });
    }
    let kind = Kind::of_sign(ctx.sign());
    let cores: Vec<NSet> = ctx
        .orbit(s)
        .into_iter()
        .filter(|x| ctx.is_t_core(x))
        .collect();
    assert_eq!(cores.len(), 1, "orbit of {s} meets {} (n,t)-cores", cores.len());
    let x = cores[0].sorted();
    let y = dominant_of_window(&x);
    let sigma = y.inverse().f_n();
    let floors = level_m_floor_set(&y, ctx.m(), kind)?;
    for rho in floors.min_coset_reps() {
        if core_of_parts(&rho, &y, &sigma, ctx) == *s {
            return AffinePerm::from_finite(&rho)?.compose(&y);
        }
    }
    unreachable!("no coset representative reaches {s}")
}

/// `sigma w_p sigma^{-1}` acting at level t on a tuple indexed by window
/// position: position `q` holds the entry in class `sigma(q) - 1`, and the
/// entries at positions `p` and `p + 1` trade places while moving by
/// multiples of `t`.
pub fn twisted_position_act(
    p: usize,
    tuple: &[i64],
    sigma: &FinitePerm,
    ctx: &LevelTContext,
) -> Result<Vec<i64>> {
    let n = ctx.n();
    if p == 0 || p >= n {
        return Err(Error::IndexOutOfRange { index: p, max: n - 1 });
    }
    let step = ctx.sign().value() * ctx.t();
    let (a, b) = (sigma.apply(p) as i64, sigma.apply(p + 1) as i64);
    let mut out = tuple.to_vec();
    out[p] = tuple[p - 1] + step * (b - a);
    out[p - 1] = tuple[p] + step * (a - b);
    Ok(out)
}

/// `sigma g sigma^{-1} . X` for `g = w_{p_1} ... w_{p_k}`, with `sigma` read
/// off the residues of the ascending window `x`; canonicalized.
pub fn twisted_word_act(word: &[usize], x: &[i64], ctx: &LevelTContext) -> Result<NSet> {
    let y = AffinePerm::from_window(x.to_vec())?;
    let sigma = y.f_n();
    let mut tuple = x.to_vec();
    for &p in word.iter().rev() {
        tuple = twisted_position_act(p, &tuple, &sigma, ctx)?;
    }
    Ok(ctx.canonical_rep(&NSet::new(&tuple)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cores::Partition;
    use alloc::collections::BTreeSet;
    use alloc::vec;

    fn word(w: &[usize], n: usize) -> AffinePerm {
        AffinePerm::from_word(w, n).unwrap()
    }

    fn nset(v: &[i64]) -> NSet {
        NSet::new(v).unwrap()
    }

    fn ctx(n: usize, m: usize, kind: Kind) -> LevelTContext {
        kind.context(n, m).unwrap()
    }

    #[test]
    fn alcove_to_core_examples() {
        let c = ctx(3, 1, Kind::Minimal);
        assert_eq!(alcove_to_core(&word(&[0, 1], 3), &c).unwrap(), nset(&[0, 4, -1]));
        assert_eq!(alcove_to_core(&word(&[1, 0, 1], 3), &c).unwrap(), nset(&[-4, 4, 3]));
        let s = alcove_to_core(&word(&[2, 1, 0, 1], 3), &c).unwrap();
        assert_eq!(s, nset(&[-4, 0, 7]));
        assert_eq!(s.to_partition(), Partition::new(vec![5, 3, 1, 1]).unwrap());
        for kind in [Kind::Minimal, Kind::Maximal] {
            for (n, m) in [(3, 1), (4, 2)] {
                let e = AffinePerm::identity(n).unwrap();
                assert_eq!(alcove_to_core(&e, &ctx(n, m, kind)).unwrap(), NSet::empty_core(n));
            }
        }
    }

    #[test]
    fn rejects_non_extremal() {
        let c = ctx(3, 1, Kind::Minimal);
        let w = word(&[0, 1, 2, 0], 3);
        assert_eq!(alcove_to_core(&w, &c), Err(Error::NotExtremal(Kind::Minimal)));
        let c = ctx(3, 1, Kind::Maximal);
        assert_eq!(
            alcove_to_core(&word(&[0, 1], 3), &c),
            Err(Error::NotExtremal(Kind::Maximal))
        );
    }

    #[test]
    fn core_to_alcove_examples() {
        let c = ctx(3, 1, Kind::Minimal);
        assert_eq!(core_to_alcove(&nset(&[3, 4, -4]), &c).unwrap(), word(&[1, 0, 1], 3));
        assert!(core_to_alcove(&NSet::empty_core(3), &c).unwrap().is_identity());
        assert!(matches!(
            core_to_alcove(&nset(&[8, 0, -5]), &c),
            Err(Error::OutsideFundamentalSet { spread: 13, bound: 12 })
        ));
    }

    #[test]
    fn floor_sets() {
        let x = level_m_floor_set(&word(&[0, 1], 3), 1, Kind::Minimal).unwrap();
        assert_eq!(x, TranspositionSet::new(3, [(2, 3)]).unwrap());
        let x = level_m_floor_set(&word(&[0], 3), 1, Kind::Minimal).unwrap();
        assert_eq!(x, TranspositionSet::new(3, [(1, 3)]).unwrap());
        let x = level_m_floor_set(&word(&[0], 3), 1, Kind::Maximal).unwrap();
        assert_eq!(x, TranspositionSet::new(3, [(1, 2), (2, 3)]).unwrap());
        assert_eq!(level_m_floor_set(&word(&[1], 3), 1, Kind::Minimal), Err(Error::NotDominant));
    }

    #[test]
    fn enumerations_at_3_1() {
        let min = enumerate_extremal(3, 1, Kind::Minimal).unwrap();
        assert_eq!(min.len(), 16);
        assert_eq!(min.iter().filter(|r| r.g.is_identity()).count(), 5);
        let cores: BTreeSet<NSet> = min.iter().map(|r| r.core.clone()).collect();
        assert_eq!(cores.len(), 16);

        let max = enumerate_extremal(3, 1, Kind::Maximal).unwrap();
        let got: Vec<(AffinePerm, NSet)> = max.iter().map(|r| (r.w.clone(), r.core.clone())).collect();
        assert_eq!(
            got,
            vec![
                (word(&[], 3), nset(&[0, 1, 2])),
                (word(&[0], 3), nset(&[3, 1, -1])),
                (word(&[2], 3), nset(&[0, -1, 4])),
                (word(&[1], 3), nset(&[-2, 3, 2])),
            ]
        );
        assert_eq!(enumerate_extremal(3, 2, Kind::Minimal).unwrap().len(), 49);
    }

    #[test]
    fn round_trips() {
        for (n, m) in [(3, 1), (3, 2), (4, 1)] {
            for kind in [Kind::Minimal, Kind::Maximal] {
                let c = ctx(n, m, kind);
                let records = enumerate_extremal(n, m, kind).unwrap();
                let cores: BTreeSet<NSet> = records.iter().map(|r| r.core.clone()).collect();
                assert_eq!(cores.into_iter().collect::<Vec<_>>(), c.enumerate_c());
                for r in &records {
                    assert_eq!(core_to_alcove(&r.core, &c).unwrap(), r.w);
                }
            }
        }
    }

    #[test]
    fn twisted_examples() {
        let c = ctx(3, 1, Kind::Minimal);
        let x = [-1, 0, 4];
        let sigma = FinitePerm::from_oneline(vec![3, 1, 2]).unwrap();
        let one = twisted_position_act(1, &x, &sigma, &c).unwrap();
        let mut sorted = c.canonical_rep(&nset(&one)).sorted();
        sorted.sort();
        assert_eq!(sorted, vec![-4, 3, 4]);
        let two = twisted_position_act(2, &one, &sigma, &c).unwrap();
        assert_eq!(c.canonical_rep(&nset(&two)).sorted(), vec![-4, 0, 7]);
        assert_eq!(twisted_word_act(&[2, 1], &x, &c).unwrap(), nset(&[-4, 0, 7]));
        assert!(twisted_position_act(0, &x, &sigma, &c).is_err());
    }

    #[test]
    fn twisted_swaps_positions_mod_n() {
        let c = ctx(4, 1, Kind::Minimal);
        let x = [-2, 1, 3, 4];
        let sigma = AffinePerm::from_window(x.to_vec()).unwrap().f_n();
        for p in 1..4 {
            let out = twisted_position_act(p, &x, &sigma, &c).unwrap();
            for q in 0..4 {
                let src = if q == p - 1 { p } else if q == p { p - 1 } else { q };
                assert_eq!(out[q].rem_euclid(4), x[q].rem_euclid(4));
                if src == q {
                    assert_eq!(out[q], x[q]);
                } else {
                    assert_eq!((out[q] - x[src]).rem_euclid(5), 0);
                }
            }
        }
    }

    #[test]
    fn twisted_matches_alcove_to_core() {
        for (n, m) in [(3, 1), (4, 1)] {
            for kind in [Kind::Minimal, Kind::Maximal] {
                let c = ctx(n, m, kind);
                for r in enumerate_extremal(n, m, kind).unwrap() {
                    let got = twisted_word_act(&r.g.reduced_word(), &r.x(), &c).unwrap();
                    assert_eq!(got, r.core);
                }
            }
        }
    }
}
