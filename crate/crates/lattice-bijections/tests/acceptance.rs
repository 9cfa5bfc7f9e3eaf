//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so that criteria execute one after the
//! other and their timings are not distorted by concurrent tests. Exits
//! non-zero if any criterion fails.

use std::time::{Duration, Instant};

use lattice_bijections::core::enumerate::{enumerate_d, enumerate_free, enumerate_marked_tie, enumerate_t, enumerate_x};
use lattice_bijections::core::hockey;
use lattice_bijections::core::identity::{binomial, IdentitySweep};
use lattice_bijections::core::suites::{hockey_suite, soccer_suite, Check, Runner, Sequential};
use lattice_bijections::core::trace::Stage;
use lattice_bijections::core::warmup;
use lattice_bijections::core::{Bijection, Value, ValueKind};
use lattice_bijections::sample::spot_check_triples;

const IDENTITY_N: usize = 500;
const IDENTITY_SOCCER_BUDGET: Duration = Duration::from_secs(5);
const IDENTITY_HOCKEY_BUDGET: Duration = Duration::from_secs(30);
const HOCKEY_N: usize = 8;
const HOCKEY_BUDGET: Duration = Duration::from_secs(120);
const WARMUP_N: usize = 6;
const SOCCER_N: usize = 7;
const SPOT_N: usize = 100_000;
const SPOT_COUNT: usize = 1000;
const SPOT_SEED: u64 = 0x5eed;
const SPOT_BUDGET: Duration = Duration::from_secs(10);

type Verdict = Result<String, String>;

struct Tally {
    passed: usize,
    total: usize,
}

impl Tally {
    fn run(&mut self, id: usize, title: &str, budget: Option<Duration>, check: impl FnOnce() -> Verdict) {
        let start = Instant::now();
        let verdict = check();
        let elapsed = start.elapsed();
        let verdict = match (verdict, budget) {
            (Ok(_), Some(b)) if elapsed > b => {
                Err(format!("took {elapsed:.2?}, budget {b:?}"))
            }
            (v, _) => v,
        };
        let budget = budget.map(|b| format!(" / {b:?}")).unwrap_or_default();
        let (tag, detail) = match &verdict {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("[{tag}] {id}. {title} ({elapsed:.2?}{budget}): {detail}");
        self.total += 1;
        self.passed += verdict.is_ok() as usize;
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn identity_soccer() -> Verdict {
    let sweep = IdentitySweep::new(IDENTITY_N);
    for v in sweep.iter() {
        ensure(v.soccer.0 == v.soccer.1, || format!("n={}: {} != {}", v.n, v.soccer.0, v.soccer.1))?;
    }
    Ok(format!("exact equality for n = 0..={IDENTITY_N}"))
}

fn identity_hockey() -> Verdict {
    let sweep = IdentitySweep::new(IDENTITY_N);
    for v in sweep.iter() {
        ensure(v.hockey.0 == v.hockey.1, || format!("n={}: {} != {}", v.n, v.hockey.0, v.hockey.1))?;
    }
    Ok(format!("exact equality for n = 0..={IDENTITY_N}"))
}

fn hockey_exhaustive() -> Verdict {
    let mut sizes = Vec::new();
    for n in 0..=HOCKEY_N {
        let r = Sequential.verify(
            || enumerate_t(n),
            |t| Some(hockey::triple_to_marked(t)),
            |m| Some(hockey::marked_to_triple(m)),
            || enumerate_d(n),
        );
        let closed = binomial(2 * n as u64, n as u64) * (2 * n as u64 + 1);
        ensure(r.passed(), || format!("n={n}\n{r}"))?;
        ensure(closed == r.domain.into(), || format!("n={n}: |T_n| = {} but closed form {closed}", r.domain))?;
        sizes.push(r.domain);
    }
    Ok(format!("|T_n| = |D_n| = {sizes:?}, both round trips exact"))
}

fn class_laws() -> Verdict {
    let mut summary = Vec::new();
    for n in 0..=HOCKEY_N {
        let results = hockey_suite(n, &Sequential);
        let domain = |name: &str| -> Result<(u64, u64), String> {
            let r = results.iter().find(|r| r.name == name).expect("suite check present");
            ensure(r.passed(), || format!("{r}"))?;
            Ok(match &r.check {
                Check::Bijection(b) => (b.domain, b.codomain),
                Check::Law(l) => (l.checked, l.checked),
                Check::Identity(_) => unreachable!(),
            })
        };
        let (r, d0) = domain("axis")?;
        let (u, dplus) = domain("peak")?;
        let (v_and_i, dminus) = domain("valley")?;
        let (j, i) = domain("merge-middle")?;
        let (t, _) = domain("classes")?;
        ensure(r + u + (v_and_i - i) + j == t, || format!("n={n}: classes do not partition T_n"))?;
        ensure(d0 + dplus + dminus == t, || format!("n={n}: mark sides do not partition D_n"))?;
        summary.push(format!("{r}/{u}/{}/{j}", v_and_i - i));
    }
    Ok(format!("R/U/V-U/J sizes: {}", summary.join(" ")))
}

fn warmup_steps() -> Verdict {
    let mut checks = 0;
    for n in 0..=WARMUP_N {
        for r in soccer_suite(n, &Sequential) {
            if r.name.starts_with("f_step") || r.name.starts_with("tie-to-avoiding") {
                ensure(r.passed(), || format!("{r}"))?;
                checks += 1;
            }
        }
    }
    let x6 = enumerate_x(WARMUP_N).count();
    ensure(x6 == 924, || format!("|X_6| = {x6}"))?;
    Ok(format!("{checks} checks, |X_6| = |Y_6| = {x6}"))
}

fn soccer_composite() -> Verdict {
    let mut sizes = Vec::new();
    for n in 0..=SOCCER_N {
        let r = Sequential.verify(
            || enumerate_free(n),
            |p| warmup::free_to_marked_tie(p).ok(),
            |m| Some(warmup::marked_tie_to_free(m)),
            || enumerate_marked_tie(n),
        );
        ensure(r.passed(), || format!("n={n}\n{r}"))?;
        ensure(r.domain == 1 << (2 * n), || format!("n={n}: {} free paths", r.domain))?;
        sizes.push(r.domain);
    }
    Ok(format!("free paths {sizes:?} onto marked tie paths"))
}

fn golden_trace() -> Verdict {
    let input = ValueKind::Path.parse("(0,0):EENNNNEE").map_err(|e| e.to_string())?;
    let (out, events) = Bijection::F.trace(&input).map_err(|e| e.to_string())?;
    let steps: Vec<_> = events
        .iter()
        .filter_map(|e| match e.stage {
            Stage::FStep { k, advanced } => Some((k, advanced)),
            _ => None,
        })
        .collect();
    ensure(steps == [(4, true), (5, true), (6, false)], || format!("f_step sequence {steps:?}"))?;
    ensure(out.to_string() == "(0,0):EEEENNEE", || format!("output {out}"))?;
    // the golden is only trusted if the exhaustive n = 4 check holds
    let back = Bijection::FInv.apply(&out).map_err(|e| e.to_string())?;
    ensure(back == input, || format!("inverse gives {back}"))?;
    let certified = soccer_suite(4, &Sequential)
        .iter()
        .filter(|r| r.name == "tie-to-avoiding")
        .all(|r| r.passed());
    ensure(certified, || "n = 4 oracle failed".into())?;
    let Value::Path(p) = &out else { unreachable!() };
    Ok(format!("k=4 advance, k=5 advance, k=6 in-B; output {p}"))
}

fn loop_bound() -> Verdict {
    let mut worst = Vec::new();
    for n in 0..=WARMUP_N {
        let mut max = 0;
        for x in enumerate_x(n) {
            let (_, advances) = warmup::tie_to_avoiding_counted(&x);
            ensure(advances <= n, || format!("{x}: {advances} advances > n={n}"))?;
            max = max.max(advances);
        }
        worst.push(max);
    }
    Ok(format!("max advances for n = 0..={WARMUP_N}: {worst:?}"))
}

fn large_round_trip() -> Verdict {
    let r = spot_check_triples(SPOT_N, SPOT_COUNT, SPOT_SEED);
    ensure(r.passed(), || format!("{r:?}"))?;
    Ok(format!("{} triples at n={SPOT_N}, seed {SPOT_SEED:#x}", r.checked))
}

fn main() {
    let mut tally = Tally { passed: 0, total: 0 };
    tally.run(1, "4^n identity, exact, n <= 500", Some(IDENTITY_SOCCER_BUDGET), identity_soccer);
    tally.run(2, "(2n+1)C(2n,n) identity, exact, n <= 500", Some(IDENTITY_HOCKEY_BUDGET), identity_hockey);
    tally.run(3, "g bijective on T_n, n <= 8, single thread", Some(HOCKEY_BUDGET), hockey_exhaustive);
    tally.run(4, "class images and partition, z bijective, n <= 8", None, class_laws);
    tally.run(5, "f_step onto B + A(k+1), F onto Y_n, n <= 6", None, warmup_steps);
    tally.run(6, "soccer composite on free paths, n <= 7", None, soccer_composite);
    tally.run(7, "EENNNNEE trace: two advances, then stop", None, golden_trace);
    tally.run(8, "at most n advances, n <= 6 exhaustive", None, loop_bound);
    tally.run(9, "1000 random triples round-trip at n = 10^5", Some(SPOT_BUDGET), large_round_trip);
    println!("acceptance: {}/{} criteria passed", tally.passed, tally.total);
    if tally.passed != tally.total {
        std::process::exit(1);
    }
}
