//! The verification suites: every bijection and class law checked
//! exhaustively at a given size, through a pluggable [`Runner`].

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::enumerate::{
    enumerate_ank, enumerate_bnk, enumerate_d, enumerate_free, enumerate_marked_tie, enumerate_t,
    enumerate_x, enumerate_y,
};
use crate::hockey::{self, MarkedPath, PathTriple, Side, TripleClass};
use crate::identity::{IdentitySweep, IdentityValues};
use crate::path::{StepNE, StepUD, UDPath};
use crate::verify::{verify_bijection, BijectionReport, MAX_COUNTEREXAMPLES};
use crate::warmup::{self, StepOutcome};

/// Element types flowing through a runner.
pub trait Item: fmt::Display + Send + Sync {}
impl<T: fmt::Display + Send + Sync> Item for T {}

/// Executes checks over re-creatable streams. `stream()` may be called more
/// than once; every call must yield the same sequence.
pub trait Runner {
    fn verify<D, C, I, J>(
        &self,
        domain: impl Fn() -> I + Sync,
        map: impl Fn(&D) -> Option<C> + Sync,
        inverse: impl Fn(&C) -> Option<D> + Sync,
        codomain: impl Fn() -> J + Sync,
    ) -> BijectionReport
    where
        D: Item + PartialEq,
        C: Item + Ord + Clone,
        I: Iterator<Item = D>,
        J: Iterator<Item = C>;

    /// Checks `law` on every element of `stream`.
    fn check_law<D, I>(
        &self,
        stream: impl Fn() -> I + Sync,
        law: impl Fn(&D) -> Result<(), String> + Sync,
    ) -> LawReport
    where
        D: Item,
        I: Iterator<Item = D>;
}

/// Runs everything on the calling thread.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl Runner for Sequential {
    fn verify<D, C, I, J>(
        &self,
        domain: impl Fn() -> I + Sync,
        map: impl Fn(&D) -> Option<C> + Sync,
        inverse: impl Fn(&C) -> Option<D> + Sync,
        codomain: impl Fn() -> J + Sync,
    ) -> BijectionReport
    where
        D: Item + PartialEq,
        C: Item + Ord + Clone,
        I: Iterator<Item = D>,
        J: Iterator<Item = C>,
    {
        verify_bijection(domain(), map, inverse, codomain())
    }

    fn check_law<D, I>(
        &self,
        stream: impl Fn() -> I + Sync,
        law: impl Fn(&D) -> Result<(), String> + Sync,
    ) -> LawReport
    where
        D: Item,
        I: Iterator<Item = D>,
    {
        let mut report = LawReport::default();
        for (i, d) in stream().enumerate() {
            report.observe(i as u64, &d, &law);
        }
        report
    }
}

/// Outcome of checking a per-element law.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LawReport {
    pub checked: u64,
    pub violations: u64,
    counterexamples: Vec<(u64, String)>,
}

impl LawReport {
    pub fn observe<D: fmt::Display>(&mut self, index: u64, d: &D, law: &impl Fn(&D) -> Result<(), String>) {
        self.checked += 1;
        if let Err(why) = law(d) {
            self.violations += 1;
            self.counterexamples.push((index, alloc::format!("{d}: {why}")));
            self.trim();
        }
    }

    pub fn merge(mut self, other: LawReport) -> Self {
        self.checked += other.checked;
        self.violations += other.violations;
        self.counterexamples.extend(other.counterexamples);
        self.trim();
        self
    }

    fn trim(&mut self) {
        self.counterexamples.sort();
        self.counterexamples.truncate(MAX_COUNTEREXAMPLES);
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &str> {
        self.counterexamples.iter().map(|(_, s)| s.as_str())
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "checked={}", self.checked)?;
        writeln!(f, "violations={}", self.violations)?;
        write!(f, "counterexamples=[")?;
        for (i, c) in self.counterexamples().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(c)?;
        }
        f.write_str("]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    Bijection(BijectionReport),
    Law(LawReport),
    Identity(IdentityValues),
}

impl Check {
    pub fn passed(&self) -> bool {
        match self {
            Check::Bijection(r) => r.passed(),
            Check::Law(r) => r.passed(),
            Check::Identity(v) => v.holds(),
        }
    }
}

/// One report block: a named check of a suite at one size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: String,
    pub n: usize,
    pub check: Check,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.check.passed()
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{} n={} {}]", self.suite, self.n, self.name)?;
        match &self.check {
            Check::Bijection(r) => writeln!(f, "{r}")?,
            Check::Law(r) => writeln!(f, "{r}")?,
            Check::Identity(v) => {
                writeln!(f, "soccer_lhs={}", v.soccer.0)?;
                writeln!(f, "soccer_rhs={}", v.soccer.1)?;
                writeln!(f, "hockey_lhs={}", v.hockey.0)?;
                writeln!(f, "hockey_rhs={}", v.hockey.1)?;
            }
        }
        write!(f, "status={}", if self.passed() { "pass" } else { "FAIL" })
    }
}

fn result(suite: &'static str, n: usize, name: impl Into<String>, check: Check) -> CheckResult {
    CheckResult {
        suite,
        name: name.into(),
        n,
        check,
    }
}

/// Class membership restated directly from the height profiles, without
/// going through [`hockey::classify`].
struct Membership {
    c_empty: bool,
    in_u: bool,
    in_v: bool,
    in_j: bool,
}

fn membership(t: &PathTriple) -> Membership {
    let c_above = t.c().heights().any(|h| h > 0);
    let c_below = t.c().heights().any(|h| h < 0);
    let b_last = t.b().last();
    let c_empty = t.c().is_empty();
    let in_u = (b_last == Some(StepUD::Down) && c_above) || (t.b().is_empty() && c_above);
    let in_v = (b_last == Some(StepUD::Up) && c_below) || (t.b().is_empty() && c_below);
    // weakly below / weakly above
    let in_j = !c_empty
        && ((b_last == Some(StepUD::Down) && !c_above) || (b_last == Some(StepUD::Up) && !c_below));
    Membership {
        c_empty,
        in_u,
        in_v,
        in_j,
    }
}

fn class_law(t: &PathTriple) -> Result<(), String> {
    let m = membership(t);
    let r = m.c_empty;
    let u = !r && m.in_u;
    let v_minus_u = !r && m.in_v && !m.in_u;
    let j = m.in_j;
    let hits = [r, u, v_minus_u, j].iter().filter(|&&x| x).count();
    if hits != 1 {
        return Err(alloc::format!("in {hits} classes"));
    }
    let expected = match (r, u, v_minus_u) {
        (true, _, _) => TripleClass::R,
        (_, true, _) => TripleClass::U,
        (_, _, true) => TripleClass::VMinusU,
        _ if t.b().last() == Some(StepUD::Down) => TripleClass::J(Side::Below),
        _ => TripleClass::J(Side::Above),
    };
    let got = hockey::classify(t);
    if got != expected {
        return Err(alloc::format!("classified {got}, expected {expected}"));
    }
    let in_i = hockey::is_in_i(t);
    if in_i != (m.in_u && m.in_v && !r) {
        return Err(alloc::format!("in-I predicate {in_i} disagrees with U and V"));
    }
    if in_i && got != TripleClass::U {
        return Err("member of I not routed through U".into());
    }

    let image = hockey::triple_to_marked(t);
    let steps = t.a().len() + t.b().len() + t.c().len();
    if image.path().len() != steps {
        return Err(alloc::format!("{image} does not have {steps} steps"));
    }
    let height = image.mark_height();
    let ok = match got {
        TripleClass::R => height == 0,
        TripleClass::U => height > 0 && height == t.c().max_height(),
        TripleClass::VMinusU => height < 0 && height == t.c().min_height(),
        // the merged third path is b c
        TripleClass::J(_) => {
            let bc = UDPath::concat(&[t.b(), t.c()]);
            height < 0 && height == bc.min_height()
        }
    };
    if !ok {
        return Err(alloc::format!("class {got} sent to {image} with mark height {height}"));
    }
    Ok(())
}

fn mark_height_is(sign: i64) -> impl Fn(&MarkedPath) -> bool + Clone {
    move |m| m.mark_height().signum() == sign
}

/// Bijection and class-law checks for triples of total semilength `n`.
pub fn hockey_suite(n: usize, runner: &impl Runner) -> Vec<CheckResult> {
    let class_is = |want: fn(&PathTriple) -> bool| move || enumerate_t(n).filter(want);
    let g = runner.verify(
        || enumerate_t(n),
        |t| Some(hockey::triple_to_marked(t)),
        |m| Some(hockey::marked_to_triple(m)),
        || enumerate_d(n),
    );
    let r = runner.verify(
        class_is(|t| hockey::classify(t) == TripleClass::R),
        |t| hockey::join_at_axis(t).ok(),
        |m| hockey::split_at_axis(m).ok(),
        || enumerate_d(n).filter(mark_height_is(0)),
    );
    let s = runner.verify(
        class_is(|t| hockey::classify(t) == TripleClass::U),
        |t| hockey::peak_splice(t).ok(),
        |m| hockey::peak_unsplice(m).ok(),
        || enumerate_d(n).filter(mark_height_is(1)),
    );
    let t = runner.verify(
        class_is(|t| hockey::classify(t) == TripleClass::VMinusU || hockey::is_in_i(t)),
        |t| hockey::valley_splice(t).ok(),
        |m| hockey::valley_unsplice(m).ok(),
        || enumerate_d(n).filter(mark_height_is(-1)),
    );
    let z = runner.verify(
        class_is(|t| matches!(hockey::classify(t), TripleClass::J(_))),
        |t| hockey::merge_middle(t).ok(),
        |t| hockey::split_at_crossing(t).ok(),
        class_is(hockey::is_in_i),
    );
    let laws = runner.check_law(|| enumerate_t(n), class_law);
    vec![
        result("hockey", n, "composite", Check::Bijection(g)),
        result("hockey", n, "axis", Check::Bijection(r)),
        result("hockey", n, "peak", Check::Bijection(s)),
        result("hockey", n, "valley", Check::Bijection(t)),
        result("hockey", n, "merge-middle", Check::Bijection(z)),
        result("hockey", n, "classes", Check::Law(laws)),
    ]
}

fn tie_law(p: &warmup::TiePath) -> Result<(), String> {
    let n = p.n();
    let (out, advances) = warmup::tie_to_avoiding_counted(p);
    if advances > n {
        return Err(alloc::format!("{advances} advances exceed n={n}"));
    }
    let strictly = |below: bool| {
        out.path()
            .points()
            .skip(1)
            .all(|q| if below { q.x > q.y } else { q.x < q.y })
    };
    let side_ok = match p.path().first() {
        None => out.path().is_empty(),
        Some(StepNE::East) => strictly(true),
        Some(StepNE::North) => strictly(false),
    };
    if !side_ok {
        return Err(alloc::format!("{out} is on the wrong side of the diagonal"));
    }
    let flipped = warmup::TiePath::new(p.path().reflect_diagonal()).expect("transpose of a tie path");
    if *warmup::tie_to_avoiding(&flipped).path() != out.path().reflect_diagonal() {
        return Err("does not commute with the diagonal reflection".into());
    }
    Ok(())
}

/// Bijection checks for the north/east construction at size `n`. Covers the
/// composite on free paths, the tie-to-avoiding map and each reflection step.
pub fn soccer_suite(n: usize, runner: &impl Runner) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let composite = runner.verify(
        || enumerate_free(n),
        |p| warmup::free_to_marked_tie(p).ok(),
        |m| Some(warmup::marked_tie_to_free(m)),
        || enumerate_marked_tie(n),
    );
    out.push(result("soccer", n, "composite", Check::Bijection(composite)));
    let big = runner.verify(
        || enumerate_x(n),
        |p| Some(warmup::tie_to_avoiding(p)),
        |u| Some(warmup::avoiding_to_tie(u)),
        || enumerate_y(n),
    );
    out.push(result("soccer", n, "tie-to-avoiding", Check::Bijection(big)));
    let laws = runner.check_law(|| enumerate_x(n), tie_law);
    out.push(result("soccer", n, "tie-to-avoiding-laws", Check::Law(laws)));
    if n > 0 {
        for k in n..=2 * n {
            let step = runner.verify(
                || enumerate_ank(n, k).expect("n <= k <= 2n"),
                |p| Some(warmup::reflect_step(p)),
                |o: &StepOutcome| match o {
                    StepOutcome::InB(p) => Some(p.clone()),
                    StepOutcome::Advanced(q) => warmup::reflect_step_inv(q).ok(),
                },
                || {
                    let in_b = enumerate_bnk(n, k).expect("n <= k <= 2n").map(StepOutcome::InB);
                    let next = (k < 2 * n)
                        .then(|| enumerate_ank(n, k + 1).expect("k + 1 <= 2n"))
                        .into_iter()
                        .flatten()
                        .map(StepOutcome::Advanced);
                    in_b.chain(next)
                },
            );
            out.push(result("soccer", n, alloc::format!("f_step k={k}"), Check::Bijection(step)));
        }
    }
    out
}

/// Exact evaluation of both identities for every `n` in `0..=n_max`.
pub fn identity_suite(n_max: usize) -> Vec<CheckResult> {
    IdentitySweep::new(n_max)
        .iter()
        .map(|v| result("identities", v.n, "exact", Check::Identity(v)))
        .collect()
}
