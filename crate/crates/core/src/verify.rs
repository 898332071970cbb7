//! Named checks of every structural claim at a given `(n, m)`, each run
//! against brute force.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::affperm::AffinePerm;
use crate::bijection::{self, Kind, ShiRegionRecord};
use crate::cores::NSet;
use crate::finperm::{FinitePerm, TranspositionSet};
use crate::geometry;
use crate::levelt::{generated_subgroup, GeneratorRule, LevelTContext};
use crate::oracle::{self, Regions};
use crate::parking::{self, ParkingFunction};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// A finding reported for the record; never fails a run.
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: &'static str,
    pub statement: &'static str,
    pub status: Status,
    pub witness: String,
}

fn check(id: &'static str, statement: &'static str, ok: bool, witness: String) -> Check {
    Check {
        id,
        statement,
        status: if ok { Status::Pass } else { Status::Fail },
        witness,
    }
}

fn info(id: &'static str, statement: &'static str, witness: String) -> Check {
    Check {
        id,
        statement,
        status: Status::Info,
        witness,
    }
}

/// Everything computed once and shared by the checks.
pub struct Atlas {
    pub n: usize,
    pub m: usize,
    pub regions: Regions,
    pub minimal: Vec<ShiRegionRecord>,
    pub maximal: Vec<ShiRegionRecord>,
}

impl Atlas {
    pub fn build(n: usize, m: usize) -> Result<Self> {
        Ok(Atlas {
            n,
            m,
            regions: oracle::regions_saturated(n, m),
            minimal: bijection::enumerate_extremal(n, m, Kind::Minimal)?,
            maximal: bijection::enumerate_extremal(n, m, Kind::Maximal)?,
        })
    }

    pub fn records(&self, kind: Kind) -> &[ShiRegionRecord] {
        match kind {
            Kind::Minimal => &self.minimal,
            Kind::Maximal => &self.maximal,
        }
    }

    fn ctx(&self, kind: Kind) -> LevelTContext {
        kind.context(self.n, self.m).unwrap()
    }

    fn dominant(&self, kind: Kind) -> impl Iterator<Item = &ShiRegionRecord> {
        self.records(kind).iter().filter(|r| r.g.is_identity())
    }
}

/// Run every check at `(n, m)`.
pub fn run(n: usize, m: usize) -> Result<Vec<Check>> {
    let atlas = Atlas::build(n, m)?;
    let mut out = Vec::new();
    out.push(oracle_saturated(&atlas));
    for kind in [Kind::Minimal, Kind::Maximal] {
        out.push(region_count(&atlas, kind));
        out.push(fundamental_set_size(&atlas, kind));
        out.push(round_trip(&atlas, kind));
        out.push(orbit_characterization(&atlas, kind));
        out.push(stabilizer_conjugacy(&atlas, kind));
        out.push(unique_core_per_orbit(&atlas, kind));
        out.push(floor_set_shape(&atlas, kind));
        out.push(dominant_representative(&atlas, kind));
        out.push(twisted_action(&atlas, kind));
        out.push(dominant_cores(&atlas, kind));
        out.push(class_action(&atlas, kind));
    }
    out.push(fast_extremal_tests(&atlas));
    out.push(window_wall_criteria(n));
    out.push(wall_label_conjugation(n));
    out.push(length_counts_hyperplanes(n));
    out.push(parking_bijection(&atlas));
    out.push(parking_stabilizer(&atlas));
    out.push(parking_region_constant(&atlas));
    out.push(coset_descent_test(n));
    out.push(stabilizer_generator_rule(&atlas));
    out.push(orbit_wording(&atlas));
    Ok(out)
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.status != Status::Fail)
}

fn oracle_saturated(a: &Atlas) -> Check {
    check(
        "oracle-saturation",
        "brute-force region search stopped with no new regions for two layers",
        a.regions.saturated,
        format!(
            "radius {} (default {}), {} regions, {} bounded",
            a.regions.radius,
            oracle::default_radius(a.n, a.m),
            a.regions.regions.len(),
            a.regions.bounded_count()
        ),
    )
}

fn region_count(a: &Atlas, kind: Kind) -> Check {
    let t = a.ctx(kind).t() as usize;
    let expected = t.pow(a.n as u32 - 1);
    let got: BTreeSet<AffinePerm> = a.records(kind).iter().map(|r| r.w.clone()).collect();
    let oracle = match kind {
        Kind::Minimal => a.regions.minimal_alcoves(),
        Kind::Maximal => a.regions.maximal_alcoves(),
    };
    let (id, statement) = match kind {
        Kind::Minimal => (
            "region-count-minimal",
            "enumerated minimal alcoves are the oracle's, (mn+1)^(n-1) of them",
        ),
        Kind::Maximal => (
            "region-count-maximal",
            "enumerated maximal alcoves are the oracle's, (mn-1)^(n-1) of them",
        ),
    };
    let ok = got == oracle && got.len() == expected && a.records(kind).len() == expected;
    let witness = match got.symmetric_difference(&oracle).next() {
        Some(w) => format!("{} records, oracle {}, formula {expected}; differs at {w}", got.len(), oracle.len()),
        None => format!("{} records, oracle {}, formula {expected}", got.len(), oracle.len()),
    };
    check(id, statement, ok, witness)
}

fn fundamental_set_size(a: &Atlas, kind: Kind) -> Check {
    let ctx = a.ctx(kind);
    let t = ctx.t() as usize;
    let got = ctx.enumerate_c().len();
    check(
        match kind {
            Kind::Minimal => "fundamental-set-size-plus",
            Kind::Maximal => "fundamental-set-size-minus",
        },
        "C_n^(t) has t^(n-1) elements",
        got == t.pow(a.n as u32 - 1),
        format!("t={t}: {got}"),
    )
}

fn round_trip(a: &Atlas, kind: Kind) -> Check {
    let ctx = a.ctx(kind);
    let cores: BTreeSet<NSet> = a.records(kind).iter().map(|r| r.core.clone()).collect();
    let all = ctx.enumerate_c();
    let mut bad = None;
    if cores.len() != a.records(kind).len() || cores.iter().ne(all.iter()) {
        bad = Some("image differs from C_n^(t)".to_string());
    }
    for r in a.records(kind) {
        if bad.is_some() {
            break;
        }
        match bijection::core_to_alcove(&r.core, &ctx) {
            Ok(w) if w == r.w => {}
            other => bad = Some(format!("{} -> {} -> {:?}", r.w, r.core, other)),
        }
    }
    check(
        match kind {
            Kind::Minimal => "bijection-round-trip-minimal",
            Kind::Maximal => "bijection-round-trip-maximal",
        },
        "alcove-to-core is a bijection onto C_n^(t) with core-to-alcove as inverse",
        bad.is_none(),
        bad.unwrap_or_else(|| format!("{} records", a.records(kind).len())),
    )
}

/// First `rho` where extremality of `rho y` and membership in `G^X`
/// disagree, using `test` for extremality.
fn orbit_counterexample(
    a: &Atlas,
    kind: Kind,
    test: impl Fn(&AffinePerm) -> bool,
) -> Option<String> {
    for r in a.dominant(kind) {
        let x = bijection::level_m_floor_set(&r.y, a.m, kind).unwrap();
        let reps: BTreeSet<FinitePerm> = x.min_coset_reps().into_iter().collect();
        for rho in FinitePerm::all(a.n) {
            let w = AffinePerm::from_finite(&rho).unwrap().compose(&r.y).unwrap();
            if test(&w) != reps.contains(&rho) {
                return Some(format!("y={} rho={} X={:?}", r.y, rho, x.pairs().collect::<Vec<_>>()));
            }
        }
    }
    None
}

fn orbit_characterization(a: &Atlas, kind: Kind) -> Check {
    let bad = orbit_counterexample(a, kind, |w| bijection::is_extremal(w, a.m, kind));
    check(
        match kind {
            Kind::Minimal => "orbit-characterization-minimal",
            Kind::Maximal => "orbit-characterization-maximal",
        },
        "for dominant extremal y, rho y is extremal exactly when rho is a minimal coset representative of G_X",
        bad.is_none(),
        bad.unwrap_or_else(|| format!("{} dominant alcoves", a.dominant(kind).count())),
    )
}

fn orbit_wording(a: &Atlas) -> Check {
    let bad = orbit_counterexample(a, Kind::Maximal, |w| geometry::is_m_minimal(w, a.m));
    info(
        "maximal-orbit-wording",
        "the ceiling version of the orbit statement holds with 'maximal', not 'minimal'",
        match bad {
            Some(w) => format!("'minimal' reading fails at {w}; 'maximal' reading verified separately"),
            None => "'minimal' reading also holds at this size".to_string(),
        },
    )
}

fn stabilizer_conjugacy(a: &Atlas, kind: Kind) -> Check {
    let ctx = a.ctx(kind);
    let mut bad = None;
    for r in a.dominant(kind) {
        let x = bijection::level_m_floor_set(&r.y, a.m, kind).unwrap();
        let (orbit, stab) = oracle::brute_orbit(&r.core, &ctx);
        let conj: BTreeSet<FinitePerm> = x
            .generated_group()
            .iter()
            .map(|h| r.sigma.conjugate(h).unwrap())
            .collect();
        let stab: BTreeSet<FinitePerm> = stab.into_iter().collect();
        if conj != stab || orbit.len() * stab.len() != crate::factorial(a.n) {
            bad = Some(format!("y={} core={}", r.y, r.core));
            break;
        }
    }
    check(
        match kind {
            Kind::Minimal => "stabilizer-conjugacy-minimal",
            Kind::Maximal => "stabilizer-conjugacy-maximal",
        },
        "the stabilizer of a dominant core is sigma G_X sigma^-1 and orbit size is n!/|G_X|",
        bad.is_none(),
        bad.unwrap_or_default(),
    )
}

fn unique_core_per_orbit(a: &Atlas, kind: Kind) -> Check {
    let ctx = a.ctx(kind);
    let mut seen = BTreeSet::new();
    let mut bad = None;
    for s in ctx.enumerate_c() {
        if seen.contains(&s) {
            continue;
        }
        let orbit = ctx.orbit(&s);
        let cores = orbit.iter().filter(|x| ctx.is_t_core(x)).count();
        if cores != 1 {
            bad = Some(format!("orbit of {s} holds {cores} (n,t)-cores"));
            break;
        }
        seen.extend(orbit);
    }
    check(
        match kind {
            Kind::Minimal => "unique-core-per-orbit-plus",
            Kind::Maximal => "unique-core-per-orbit-minus",
        },
        "every level-t orbit in C_n^(t) contains exactly one (n,t)-core",
        bad.is_none(),
        bad.unwrap_or_default(),
    )
}

fn floor_set_shape(a: &Atlas, kind: Kind) -> Check {
    let bad = a.dominant(kind).find_map(|r| {
        let x = bijection::level_m_floor_set(&r.y, a.m, kind).unwrap();
        (!x.ordered_condition() || !x.chain_condition())
            .then(|| format!("y={} X={:?}", r.y, x.pairs().collect::<Vec<_>>()))
    });
    check(
        match kind {
            Kind::Minimal => "floor-set-shape",
            Kind::Maximal => "ceiling-set-shape",
        },
        "level-m wall transpositions of a dominant extremal alcove have distinct right endpoints and chain each block",
        bad.is_none(),
        bad.unwrap_or_default(),
    )
}

fn dominant_representative(a: &Atlas, kind: Kind) -> Check {
    let bad = a
        .records(kind)
        .iter()
        .find(|r| !bijection::is_extremal(&r.y, a.m, kind))
        .map(|r| format!("w={} y={}", r.w, r.y));
    check(
        match kind {
            Kind::Minimal => "dominant-representative-minimal",
            Kind::Maximal => "dominant-representative-maximal",
        },
        "the dominant alcove in the finite orbit of an extremal alcove is extremal",
        bad.is_none(),
        bad.unwrap_or_default(),
    )
}

fn twisted_action(a: &Atlas, kind: Kind) -> Check {
    let ctx = a.ctx(kind);
    let bad = a.records(kind).iter().find_map(|r| {
        let got = bijection::twisted_word_act(&r.g.reduced_word(), &r.x(), &ctx).unwrap();
        (got != r.core).then(|| format!("w={} got {} expected {}", r.w, got, r.core))
    });
    check(
        match kind {
            Kind::Minimal => "twisted-action-minimal",
            Kind::Maximal => "twisted-action-maximal",
        },
        "acting on window positions along a reduced word of g reproduces the core",
        bad.is_none(),
        bad.unwrap_or_default(),
    )
}

fn dominant_cores(a: &Atlas, kind: Kind) -> Check {
    let ctx = a.ctx(kind);
    let t = ctx.t() as usize;
    let mut cores = BTreeSet::new();
    let bad = a.dominant(kind).find_map(|r| {
        let s = NSet::empty_core(a.n).act_level1(&r.y.inverse());
        let l = r.core.to_partition();
        cores.insert(r.core.clone());
        (s != r.core || !l.is_core(a.n) || !l.is_core(t)).then(|| format!("y={} core={}", r.y, r.core))
    });
    let expected: BTreeSet<NSet> = ctx.nt_cores().into_iter().collect();
    let ok = bad.is_none() && cores == expected;
    check(
        match kind {
            Kind::Minimal => "dominant-cores-minimal",
            Kind::Maximal => "dominant-cores-maximal",
        },
        "dominant extremal alcoves y carry the (n,t)-cores y^-1 . empty",
        ok,
        bad.unwrap_or_else(|| format!("{} (n,{t})-cores", cores.len())),
    )
}

fn class_action(a: &Atlas, kind: Kind) -> Check {
    let ctx = a.ctx(kind);
    let n = a.n;
    let s0 = AffinePerm::generator(0, n).unwrap();
    let w: Vec<FinitePerm> = (0..n).map(|i| FinitePerm::simple(i, n).unwrap()).collect();
    let act = |g: &FinitePerm, s: &NSet| ctx.act_class(g, s).unwrap();
    let bad = ctx.enumerate_c().into_iter().find_map(|s| {
        if ctx.canonical_rep(&ctx.act_affine(&s0, &s).unwrap()) != act(&w[0], &s) {
            return Some(format!("s_0 and w_0 differ at {s}"));
        }
        for i in 1..n {
            if act(&w[i], &act(&w[i], &s)) != s {
                return Some(format!("w_{i} not an involution at {s}"));
            }
            for j in i + 1..n {
                let lhs;
                let rhs;
                if j == i + 1 {
                    lhs = act(&w[i], &act(&w[j], &act(&w[i], &s)));
                    rhs = act(&w[j], &act(&w[i], &act(&w[j], &s)));
                } else {
                    lhs = act(&w[i], &act(&w[j], &s));
                    rhs = act(&w[j], &act(&w[i], &s));
                }
                if lhs != rhs {
                    return Some(format!("relation between w_{i} and w_{j} fails at {s}"));
                }
            }
        }
        None
    });
    check(
        match kind {
            Kind::Minimal => "class-action-plus",
            Kind::Maximal => "class-action-minus",
        },
        "the level-t action on classes satisfies the Coxeter relations and s_0, w_0 agree",
        bad.is_none(),
        bad.unwrap_or_default(),
    )
}

fn fast_extremal_tests(a: &Atlas) -> Check {
    let min = a.regions.minimal_alcoves();
    let max = a.regions.maximal_alcoves();
    let mut checked = 0;
    let bad = oracle::bfs_alcoves(a.n, a.regions.radius - 1).into_iter().find_map(|w| {
        checked += 1;
        let fast_min = geometry::is_m_minimal(&w, a.m);
        let fast_max = geometry::is_m_maximal(&w, a.m);
        let bounded = geometry::is_bounded_region(&w, a.m);
        let oracle_bounded = a
            .regions
            .regions
            .get(&geometry::region_signature(&w, a.m))
            .is_some_and(|d| d.max_length < a.regions.radius);
        (fast_min != min.contains(&w) || fast_max != max.contains(&w) || bounded != oracle_bounded)
            .then(|| format!("{w}"))
    });
    check(
        "fast-extremal-tests",
        "floor, ceiling and boundedness tests agree with the oracle on every alcove searched",
        bad.is_none(),
        bad.unwrap_or_else(|| format!("{checked} alcoves")),
    )
}

fn window_wall_criteria(n: usize) -> Check {
    let mut count = 0;
    let bad = oracle::bfs_alcoves(n, 12)
        .into_iter()
        .filter(geometry::is_dominant)
        .find_map(|y| {
            count += 1;
            let x = y.inverse().window().to_vec();
            let walls: BTreeSet<((usize, usize), i64)> = geometry::walls(&y)
                .iter()
                .map(|w| (w.hyperplane.root(), w.hyperplane.level()))
                .collect();
            let mut predicted = BTreeSet::new();
            for i in 1..=n {
                for j in i + 1..=n {
                    let t = geometry::window_wall_test(&x, i, j).unwrap();
                    if t.wall_at_k {
                        predicted.insert(((i, j), t.k));
                    }
                    if t.wall_at_k_plus_1 {
                        predicted.insert(((i, j), t.k + 1));
                    }
                }
            }
            (predicted != walls).then(|| format!("y={y}"))
        });
    check(
        "window-wall-criteria",
        "for dominant alcoves, gaps nk+1 and n(k+1)-1 in the window of y^-1 are exactly the walls",
        bad.is_none(),
        bad.unwrap_or_else(|| format!("{count} dominant alcoves of length <= 12")),
    )
}

fn wall_label_conjugation(n: usize) -> Check {
    let bad = oracle::bfs_alcoves(n, 10).into_iter().find_map(|w| {
        let f = w.f_n();
        geometry::walls(&w).into_iter().find_map(|wall| {
            let (i, j) = wall.hyperplane.root();
            let lhs = f.conjugate(&FinitePerm::simple(wall.label, n).unwrap()).unwrap();
            (lhs != FinitePerm::transposition(i, j, n).unwrap()).then(|| format!("w={w} label {}", wall.label))
        })
    });
    check(
        "wall-label-conjugation",
        "the wall labelled i has reflection f_n(w) w_i f_n(w)^-1",
        bad.is_none(),
        bad.unwrap_or_default(),
    )
}

fn length_counts_hyperplanes(n: usize) -> Check {
    let bad = oracle::bfs_alcoves(n, 8)
        .into_iter()
        .find(|w| geometry::separating_hyperplanes(w) != w.length())
        .map(|w| format!("{w}"));
    check(
        "length-separating-hyperplanes",
        "length equals the number of hyperplanes separating the alcove from A_0",
        bad.is_none(),
        bad.unwrap_or_default(),
    )
}

fn parking_bijection(a: &Atlas) -> Check {
    let got: BTreeSet<ParkingFunction> = a
        .regions
        .minimal_alcoves()
        .iter()
        .map(|w| parking::parking_function(w, a.m))
        .collect();
    let all = ParkingFunction::all(a.n, a.m);
    check(
        "parking-bijection",
        "regions map injectively onto m-parking functions",
        got.len() == a.regions.regions.len() && got.iter().eq(all.iter()),
        format!("{} distinct of {} parking functions", got.len(), all.len()),
    )
}

fn parking_stabilizer(a: &Atlas) -> Check {
    let bad = a.dominant(Kind::Minimal).find_map(|r| {
        let x = bijection::level_m_floor_set(&r.y, a.m, Kind::Minimal).unwrap();
        let f = parking::parking_function(&r.y, a.m);
        (f.stabilizer() != x.generated_group()).then(|| format!("y={} f={f}", r.y))
    });
    check(
        "parking-stabilizer",
        "for dominant minimal alcoves the parking function's stabilizer is G_X",
        bad.is_none(),
        bad.unwrap_or_default(),
    )
}

fn parking_region_constant(a: &Atlas) -> Check {
    let bad = oracle::bfs_alcoves(a.n, a.regions.radius.min(10)).into_iter().find_map(|w| {
        let sig = geometry::region_signature(&w, a.m);
        let min = &a.regions.regions[&sig].min;
        (parking::parking_function(&w, a.m) != parking::parking_function(min, a.m)).then(|| format!("{w}"))
    });
    check(
        "parking-region-constant",
        "every alcove of a region yields the same arc diagram chains",
        bad.is_none(),
        bad.unwrap_or_default(),
    )
}

fn coset_descent_test(n: usize) -> Check {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    let mut ordered_only = None;
    let mut bad = None;
    for mask in 0u32..1 << pairs.len() {
        let x = TranspositionSet::new(
            n,
            pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p),
        )
        .unwrap();
        let agree = x.descent_free_elements() == x.min_coset_reps();
        if x.chain_condition() && !agree {
            bad = Some(format!("{:?}", x.pairs().collect::<Vec<_>>()));
            break;
        }
        if ordered_only.is_none() && x.ordered_condition() && !agree {
            ordered_only = Some(format!("{:?}", x.pairs().collect::<Vec<_>>()));
        }
    }
    let witness = match (&bad, ordered_only) {
        (Some(b), _) => b.clone(),
        (None, Some(o)) => format!("distinct right endpoints alone are not enough: {o}"),
        (None, None) => String::new(),
    };
    check(
        "coset-descent-test",
        "when each block of X is chained by X, the length-increase test picks out exactly the minimal coset representatives",
        bad.is_none(),
        witness,
    )
}

fn stabilizer_generator_rule(a: &Atlas) -> Check {
    let mut exact = Vec::new();
    let mut negated = 0;
    let mut cyclic_bad = None;
    let mut cyclic_misses = 0;
    let mut keyed_misses = 0;
    let mut total = 0;
    for kind in [Kind::Minimal, Kind::Maximal] {
        let ctx = a.ctx(kind);
        for s in ctx.nt_cores() {
            total += 1;
            let brute = ctx.stabilizer(&s);
            let by = |rule| generated_subgroup(a.n, &ctx.stabilizer_generators(&s, rule));
            if by(GeneratorRule::ExactStep) != brute {
                exact.push(format!("{s} at t={}", ctx.t()));
            }
            if by(GeneratorRule::ExactNegatedStep) != brute {
                negated += 1;
            }
            if by(GeneratorRule::CyclicCongruence) != brute {
                cyclic_misses += 1;
                cyclic_bad.get_or_insert_with(|| format!("{s} at t={}", ctx.t()));
            }
            if ctx.stabilizer_transpositions(&s).generated_group() != brute {
                keyed_misses += 1;
            }
        }
    }
    let witness = format!(
        "of {total} (n,t)-cores: rule S_i - S_(i-1) = +t (t=mn+1) / -t (t=mn-1) misses {} ({}); opposite sign misses {negated}; cyclic congruence rule with w_0 misses {}; transpositions (a,b) with S_a - e*t*a = S_b - e*t*b (mod nt) miss {keyed_misses}",
        exact.len(),
        if exact.is_empty() { "none".to_string() } else { exact.iter().take(4).cloned().collect::<Vec<_>>().join(", ") },
        match cyclic_bad {
            None => "none".to_string(),
            Some(w) => format!("{cyclic_misses} (first {w})"),
        },
    );
    info(
        "stabilizer-generator-rule",
        "stabilizers are generated by the w_i with S_i - S_(i-1) = +-t, once the wraparound w_0 is included",
        witness,
    )
}

/// `(n, t)`-cores and orbit sizes for `t = mn + 1`, as partitions.
pub fn core_orbit_sizes(n: usize, m: usize) -> Result<Vec<(crate::cores::Partition, usize)>> {
    let ctx = Kind::Minimal.context(n, m)?;
    Ok(ctx
        .nt_cores()
        .iter()
        .map(|s| (s.to_partition(), oracle::brute_orbit(s, &ctx).0.len()))
        .collect())
}
