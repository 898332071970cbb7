#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use shi_core::{AffinePerm, FinitePerm, LevelTContext, NSet, NVector, Partition, Sign};

pub type Outcome = Result<(), TestCaseError>;

pub fn word(w: &[usize], n: usize) -> AffinePerm {
    AffinePerm::from_word(w, n).unwrap()
}

pub fn nset(v: &[i64]) -> NSet {
    NSet::new(v).unwrap()
}

pub fn ctx(n: usize, m: usize, sign: Sign) -> LevelTContext {
    LevelTContext::new(n, m, sign).unwrap()
}

/// `(n, word)` with letters in `0..n`.
pub fn rank_and_word(max_len: usize) -> impl Strategy<Value = (usize, Vec<usize>)> {
    (3usize..=5).prop_flat_map(move |n| (Just(n), prop::collection::vec(0..n, 0..=max_len)))
}

pub fn rank_and_two_words(max_len: usize) -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>)> {
    (3usize..=5).prop_flat_map(move |n| {
        (
            Just(n),
            prop::collection::vec(0..n, 0..=max_len),
            prop::collection::vec(0..n, 0..=max_len),
        )
    })
}

/// An n-vector with entries bounded by `bound` (the last entry absorbs the sum).
pub fn nvector(n: usize, bound: i64) -> impl Strategy<Value = NVector> {
    prop::collection::vec(-bound..=bound, n - 1).prop_map(|mut v| {
        let s: i64 = v.iter().sum();
        v.push(-s);
        NVector::new(v).unwrap()
    })
}

pub fn level_t_case() -> impl Strategy<Value = (LevelTContext, NSet)> {
    (3usize..=5, 1usize..=2, any::<bool>()).prop_flat_map(|(n, m, plus)| {
        let sign = if plus { Sign::Plus } else { Sign::Minus };
        (Just(ctx(n, m, sign)), nvector(n, 12).prop_map(|v| v.to_nset()))
    })
}

/// Partitions of size at most `k`.
pub fn partition(k: usize) -> impl Strategy<Value = Partition> {
    (0..=k).prop_flat_map(|size| {
        let all = Partition::all_of_size(size);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

pub fn fn_homomorphism(n: usize, a: &[usize], b: &[usize]) -> Outcome {
    let (u, v) = (word(a, n), word(b, n));
    let lhs = u.compose(&v).unwrap().f_n();
    let rhs = u.f_n().compose(&v.f_n()).unwrap();
    prop_assert_eq!(lhs, rhs);
    let letters = a
        .iter()
        .map(|&i| FinitePerm::simple(i, n).unwrap())
        .fold(FinitePerm::identity(n), |acc, s| acc.compose(&s).unwrap());
    prop_assert_eq!(u.f_n(), letters);
    Ok(())
}

/// Coxeter relations of the affine generators, checked after multiplying
/// an arbitrary element on the left.
pub fn affine_braid(n: usize, prefix: &[usize], i: usize) -> Outcome {
    let u = word(prefix, n);
    let j = (i + 1) % n;
    prop_assert_eq!(u.right_mul_generator(i).right_mul_generator(i), u.clone());
    let iji = u.right_mul_generator(i).right_mul_generator(j).right_mul_generator(i);
    let jij = u.right_mul_generator(j).right_mul_generator(i).right_mul_generator(j);
    prop_assert_eq!(iji, jij);
    for k in 0..n {
        if k != i && k != j && k != (i + n - 1) % n {
            let ik = u.right_mul_generator(i).right_mul_generator(k);
            let ki = u.right_mul_generator(k).right_mul_generator(i);
            prop_assert_eq!(ik, ki);
        }
    }
    Ok(())
}

/// Coxeter relations for the level-t action: exactly on n-sets for the
/// affine generators, and on classes for `w_1, ..., w_{n-1}`.
pub fn level_t_braid(c: &LevelTContext, s: &NSet, i: usize) -> Outcome {
    let n = c.n();
    let i = i % n;
    let j = (i + 1) % n;
    let act = |letters: &[usize]| c.act_affine(&word(letters, n), s).unwrap();
    let step = |x: &NSet, k: usize| c.act_affine(&AffinePerm::generator(k, n).unwrap(), x).unwrap();
    prop_assert_eq!(step(&step(s, i), i), s.clone());
    prop_assert_eq!(act(&[i, j, i]), act(&[j, i, j]));
    prop_assert_eq!(step(&step(&step(s, i), j), i), act(&[i, j, i]));
    let class = |letters: &[usize]| c.canonical_rep(&c.act_word(letters, s).unwrap());
    let base = c.canonical_rep(s);
    for a in 1..n {
        prop_assert_eq!(class(&[a, a]), base.clone());
        if a + 1 < n {
            prop_assert_eq!(class(&[a, a + 1, a]), class(&[a + 1, a, a + 1]));
        }
        for b in a + 2..n {
            prop_assert_eq!(class(&[a, b]), class(&[b, a]));
        }
    }
    Ok(())
}

pub fn canonical_rep_unique(c: &LevelTContext, s: &NSet, a: usize, b: usize, times: i64) -> Outcome {
    let n = c.n();
    let nt = n as i64 * c.t();
    let rep = c.canonical_rep(s);
    prop_assert!(c.in_c(&rep));
    prop_assert!(c.equivalent(&rep, s));
    prop_assert_eq!(c.canonical_rep(&rep), rep.clone());
    let (a, b) = (a % n, b % n);
    if a != b {
        let mut moved: Vec<i64> = s.by_residue().to_vec();
        moved[a] += times * nt;
        moved[b] -= times * nt;
        let moved = NSet::new(&moved).unwrap();
        prop_assert!(c.equivalent(&moved, s));
        prop_assert_eq!(c.canonical_rep(&moved), rep);
    }
    Ok(())
}

/// Removing rim n-hooks in any order ends at the same core.
pub fn core_order_independent(p: &Partition, n: usize, choices: &[usize]) -> Outcome {
    let target = p.core_of(n);
    prop_assert!(target.is_core(n));
    let mut cur = p.clone();
    let mut picks = choices.iter().cycle();
    loop {
        let next = cur.rim_hook_removals(n);
        if next.is_empty() {
            break;
        }
        let k = picks.next().copied().unwrap_or(0) % next.len();
        prop_assert_eq!(next[k].size() + n, cur.size());
        cur = next[k].clone();
    }
    prop_assert_eq!(cur, target);
    Ok(())
}

pub fn core_encodings_round_trip(v: &NVector) -> Outcome {
    let n = v.entries().len();
    let s = v.to_nset();
    prop_assert_eq!(s.to_nvector(), v.clone());
    let p = s.to_partition();
    prop_assert!(p.is_core(n));
    prop_assert_eq!(p.n_set(n).unwrap(), s.clone());
    prop_assert_eq!(p.n_vector(n).unwrap(), v.clone());
    prop_assert_eq!(p.n_window(n).unwrap(), s.sorted());
    prop_assert_eq!(p.balanced_abacus(n).unwrap().to_nset(), s.clone());
    prop_assert_eq!(s.to_abacus().to_nset(), s.clone());
    prop_assert_eq!(NSet::new(&s.sorted()).unwrap(), s);
    Ok(())
}

pub fn affine_encodings_round_trip(n: usize, letters: &[usize]) -> Outcome {
    let w = word(letters, n);
    let reduced = w.reduced_word();
    prop_assert_eq!(reduced.len(), w.length());
    prop_assert!(reduced.len() <= letters.len());
    prop_assert_eq!(word(&reduced, n), w.clone());
    prop_assert_eq!(AffinePerm::from_window(w.window().to_vec()).unwrap(), w.clone());
    prop_assert_eq!(w.inverse().inverse(), w.clone());
    prop_assert!(w.compose(&w.inverse()).unwrap().is_identity());
    let (g, y) = w.coset_decompose();
    prop_assert_eq!(AffinePerm::from_finite(&g).unwrap().compose(&y).unwrap(), w);
    Ok(())
}
