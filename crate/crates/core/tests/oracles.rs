//! Independent ground truth for the bijections: Pascal-triangle counts,
//! brute-force inverses found by search, and a point-wise geometric version
//! of the reflection step.

use std::collections::BTreeMap;

use lattice_bijections_core::enumerate::{
    enumerate_ank, enumerate_bnk, enumerate_d, enumerate_free, enumerate_marked_tie, enumerate_t,
    enumerate_x, enumerate_y,
};
use lattice_bijections_core::hockey::{self, TripleClass};
use lattice_bijections_core::path::{GridPoint, NEPath, StepNE, UDPath};
use lattice_bijections_core::verify::verify_bijection;
use lattice_bijections_core::warmup::{self, StepOutcome};
use lattice_bijections_core::{MarkedPath, PathTriple};

fn pascal(rows: usize) -> Vec<Vec<u128>> {
    let mut t: Vec<Vec<u128>> = vec![vec![1]];
    for r in 1..=rows {
        let prev = &t[r - 1];
        let mut row = vec![1u128; r + 1];
        for k in 1..r {
            row[k] = prev[k - 1] + prev[k];
        }
        t.push(row);
    }
    t
}

#[test]
fn enumerated_sizes_match_pascal_counts() {
    let c = pascal(20);
    let central = |m: usize| c[2 * m][m];
    for n in 0..=8usize {
        let triple_sum: u128 = (0..=n)
            .flat_map(|i| (0..=n - i).map(move |j| (i, j, n - i - j)))
            .map(|(i, j, k)| central(i) * central(j) * central(k))
            .sum();
        assert_eq!(enumerate_t(n).count() as u128, triple_sum, "T_{n}");
        assert_eq!(enumerate_d(n).count() as u128, (2 * n as u128 + 1) * central(n), "D_{n}");
        assert_eq!(triple_sum, (2 * n as u128 + 1) * central(n));
    }
    for n in 0..=7usize {
        let pair_sum: u128 = (0..=n).map(|i| central(i) * central(n - i)).sum();
        assert_eq!(enumerate_free(n).count() as u128, 1u128 << (2 * n));
        assert_eq!(enumerate_marked_tie(n).count() as u128, pair_sum);
        assert_eq!(enumerate_x(n).count() as u128, central(n));
        assert_eq!(enumerate_y(n).count() as u128, central(n));
    }
    for n in 1..=6usize {
        for k in n..=2 * n {
            let a = enumerate_ank(n, k).unwrap().count() as u128;
            assert_eq!(a, c[2 * n - 1][k - 1], "A({n},{k})");
            // reflection-principle count of paths from (1,0) that meet x = y
            let touching = if k > n { c[2 * n - 1].get(k).copied().unwrap_or(0) } else { a };
            let b = enumerate_bnk(n, k).unwrap().count() as u128;
            assert_eq!(b, a - touching, "B({n},{k})");
        }
    }
}

#[test]
fn triple_counts_for_small_n() {
    assert_eq!(enumerate_t(0).count(), 1);
    assert_eq!(enumerate_t(1).count(), 6);
    assert_eq!(enumerate_t(2).count(), 30);
    assert_eq!(enumerate_d(2).count(), 30);
}

/// The reflection step computed on coordinates: reflect every visited point up
/// to the first diagonal point through `x = y`, then shift all points.
fn geometric_step(p: &NEPath) -> Option<NEPath> {
    let points: Vec<GridPoint> = p.points().collect();
    let touch = points.iter().position(|q| q.x == q.y)?;
    let moved: Vec<GridPoint> = points
        .iter()
        .enumerate()
        .map(|(i, q)| if i <= touch { GridPoint::new(q.y, q.x) } else { *q })
        .map(|q| GridPoint::new(q.x + 1, q.y - 1))
        .collect();
    let steps = moved
        .windows(2)
        .map(|w| {
            if w[1].x == w[0].x + 1 && w[1].y == w[0].y {
                StepNE::East
            } else {
                assert!(w[1].x == w[0].x && w[1].y == w[0].y + 1, "not a lattice step");
                StepNE::North
            }
        })
        .collect();
    Some(NEPath::new(moved[0], steps))
}

#[test]
fn reflection_step_matches_pointwise_reflection() {
    for n in 1..=6 {
        for k in n..=2 * n {
            for p in enumerate_ank(n, k).unwrap() {
                match (warmup::reflect_step(&p), geometric_step(p.path())) {
                    (StepOutcome::InB(q), None) => assert_eq!(q, p),
                    (StepOutcome::Advanced(q), Some(g)) => {
                        assert_eq!(q.path(), &g);
                        assert_eq!(q.k(), k + 1);
                    }
                    (o, g) => panic!("{p}: {o} vs {g:?}"),
                }
            }
        }
    }
}

#[test]
fn inverses_agree_with_brute_force_search() {
    for n in 0..=4 {
        let forward: BTreeMap<MarkedPath, PathTriple> = enumerate_t(n)
            .map(|t| (hockey::triple_to_marked(&t), t))
            .collect();
        for m in enumerate_d(n) {
            assert_eq!(hockey::marked_to_triple(&m), forward[&m], "{m}");
        }

        let forward: BTreeMap<_, _> = enumerate_x(n)
            .map(|p| (warmup::tie_to_avoiding(&p), p))
            .collect();
        for u in enumerate_y(n) {
            assert_eq!(warmup::avoiding_to_tie(&u), forward[&u], "{u}");
        }

        let forward: BTreeMap<_, _> = enumerate_free(n)
            .map(|p| (warmup::free_to_marked_tie(&p).unwrap(), p))
            .collect();
        for m in enumerate_marked_tie(n) {
            assert_eq!(warmup::marked_tie_to_free(&m), forward[&m], "{m}");
        }
    }
    for n in 1..=4 {
        for k in n..2 * n {
            let forward: BTreeMap<_, _> = enumerate_ank(n, k)
                .unwrap()
                .filter_map(|p| match warmup::reflect_step(&p) {
                    StepOutcome::Advanced(q) => Some((q, p)),
                    StepOutcome::InB(_) => None,
                })
                .collect();
            for q in enumerate_ank(n, k + 1).unwrap() {
                assert_eq!(warmup::reflect_step_inv(&q).as_ref(), Ok(&forward[&q]), "{q}");
            }
        }
    }
}

/// Splice built directly from the leftmost lowest point of `c`, without the
/// reflection conjugation.
fn direct_valley_splice(t: &PathTriple) -> MarkedPath {
    let profile = t.c().height_profile();
    let low = *profile.iter().min().unwrap();
    let cut = profile.iter().position(|&h| h == low).unwrap();
    let (c1, c2) = t.c().split_at(cut);
    MarkedPath::new(UDPath::concat(&[&c1, t.a(), t.b(), &c2]), cut + t.a().len()).unwrap()
}

#[test]
fn valley_splice_is_the_conjugated_peak_splice() {
    for n in 0..=8 {
        for t in enumerate_t(n) {
            if hockey::classify(&t) == TripleClass::VMinusU || hockey::is_in_i(&t) {
                let conj = hockey::peak_splice(&t.reflect_horizontal())
                    .unwrap()
                    .reflect_horizontal();
                let v = hockey::valley_splice(&t).unwrap();
                assert_eq!(v, conj);
                assert_eq!(v, direct_valley_splice(&t));
                assert!(v.mark_height() < 0);
            }
        }
    }
}

#[test]
fn class_sizes_balance() {
    // |R| = |D0|, |U| = |D+|, |V| = |D-|, |J| = |I|
    for n in 0..=7 {
        let mut count = BTreeMap::new();
        let mut in_i = 0;
        for t in enumerate_t(n) {
            let key = match hockey::classify(&t) {
                TripleClass::J(_) => "J",
                TripleClass::R => "R",
                TripleClass::U => "U",
                TripleClass::VMinusU => "V-U",
            };
            *count.entry(key).or_insert(0usize) += 1;
            in_i += hockey::is_in_i(&t) as usize;
        }
        let mut sides = [0usize; 3];
        for m in enumerate_d(n) {
            sides[(m.mark_height().signum() + 1) as usize] += 1;
        }
        let get = |k| count.get(k).copied().unwrap_or(0);
        assert_eq!(get("R"), sides[1], "n={n}");
        assert_eq!(get("U"), sides[2], "n={n}");
        assert_eq!(get("V-U") + in_i, sides[0], "n={n}");
        assert_eq!(get("J"), in_i, "n={n}");
    }
}

#[test]
fn negative_control_is_reported() {
    // forget the triple structure: (a, b, c) -> (abc, 0)
    let n = 2;
    let report = verify_bijection(
        enumerate_t(n),
        |t: &PathTriple| MarkedPath::new(UDPath::concat(&[t.a(), t.b(), t.c()]), 0).ok(),
        |m: &MarkedPath| Some(hockey::marked_to_triple(m)),
        enumerate_d(n),
    );
    assert!(!report.passed());
    assert!(report.round_trip_failures > 0);
    assert!(report.image < report.domain);
    assert!(!report.counterexamples.is_empty());
}

#[test]
fn semilengths_after_merge() {
    for n in 0..=6 {
        for t in enumerate_t(n) {
            if let Ok(m) = hockey::merge_middle(&t) {
                assert_eq!(m.a().len(), t.a().len());
                assert!(m.b().is_empty());
                assert_eq!(m.c().len(), t.b().len() + t.c().len());
            }
        }
    }
}
