//! The reflection bijection between tie paths and diagonal-avoiding paths,
//! and the last-diagonal-point decomposition that turns it into a bijection
//! from all `2n`-step north/east paths onto tie paths with a marked diagonal
//! point.
//!
//! `A(n, k)` is the set of north/east paths from `(1, 0)` to `(k, 2n - k)`,
//! `n <= k <= 2n`; `B(n, k)` is its subset of paths with no point on the
//! diagonal. A single [`reflect_step`] maps `A(n, k)` bijectively onto
//! `B(n, k) ⊎ A(n, k + 1)`; iterating it from `k = n` ends in some `B(n, k)`
//! after at most `n` advances, because `A(n, 2n) = B(n, 2n)`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{mismatch, ContractError, Error, ParseError};
use crate::path::{GridPoint, NEPath, Step, StepNE};
use crate::trace::{Stage, Tracer};

const A_START: GridPoint = GridPoint::new(1, 0);
const REFLECTED_START: GridPoint = GridPoint::new(0, 1);
const ADVANCE: GridPoint = GridPoint::new(1, -1);

/// An element of `A(n, k)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AnkPath {
    n: usize,
    k: usize,
    path: NEPath,
}

impl AnkPath {
    pub fn new(n: usize, k: usize, path: NEPath) -> Result<Self, ContractError> {
        if n == 0 || k < n || k > 2 * n {
            return Err(mismatch("1 <= n <= k <= 2n", alloc::format!("n={n}, k={k}")));
        }
        let end = GridPoint::new(k as i64, (2 * n - k) as i64);
        if path.start() != A_START || path.len() != 2 * n - 1 || path.end() != end {
            return Err(mismatch(
                alloc::format!("path from {A_START} to {end}"),
                alloc::format!("{path}"),
            ));
        }
        Ok(AnkPath { n, k, path })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn path(&self) -> &NEPath {
        &self.path
    }

    pub fn into_path(self) -> NEPath {
        self.path
    }

    /// Membership in `B(n, k)`: no visited point lies on the diagonal.
    pub fn in_b(&self) -> bool {
        self.path.first_diagonal_touch().is_none()
    }
}

impl fmt::Display for AnkPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={},k={} {}", self.n, self.k, self.path)
    }
}

impl FromStr for AnkPath {
    type Err = Error;

    /// `n=4,k=5 (1,0):NEENNEE`
    fn from_str(s: &str) -> Result<Self, Error> {
        let malformed = || ParseError::Malformed {
            what: "A(n,k) path",
            detail: s.into(),
        };
        let (params, path) = s.trim().split_once(' ').ok_or_else(malformed)?;
        let (n, k) = params.split_once(',').ok_or_else(malformed)?;
        let n = n
            .strip_prefix("n=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(malformed)?;
        let k = k
            .strip_prefix("k=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(malformed)?;
        Ok(AnkPath::new(n, k, path.parse()?)?)
    }
}

/// Result of one reflection step on `A(n, k)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StepOutcome {
    /// The input already avoided the diagonal; returned unchanged.
    InB(AnkPath),
    /// The reflected and translated image, an element of `A(n, k + 1)`.
    Advanced(AnkPath),
}

impl StepOutcome {
    pub fn path(&self) -> &AnkPath {
        match self {
            StepOutcome::InB(p) | StepOutcome::Advanced(p) => p,
        }
    }
}

impl fmt::Display for StepOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepOutcome::InB(p) => write!(f, "in-B {p}"),
            StepOutcome::Advanced(p) => write!(f, "advance {p}"),
        }
    }
}

fn mirror_prefix(steps: &mut [StepNE], t: usize) {
    for s in &mut steps[..t] {
        *s = s.mirror();
    }
}

/// Maps `A(n, k)` onto `B(n, k) ⊎ A(n, k + 1)`.
///
/// A path that never meets the diagonal is returned as [`StepOutcome::InB`].
/// Otherwise the part up to the first diagonal point is reflected through
/// `x = y` (the path now starts at `(0, 1)`) and the whole path is shifted by
/// `(1, -1)`.
pub fn reflect_step(p: &AnkPath) -> StepOutcome {
    reflect_step_traced(p, &mut ())
}

pub(crate) fn reflect_step_traced<T: Tracer>(p: &AnkPath, tr: &mut T) -> StepOutcome {
    let Some(touch) = p.path.first_diagonal_touch() else {
        tr.record(Stage::FStep { k: p.k, advanced: false }, p, p);
        return StepOutcome::InB(p.clone());
    };
    // A(n, 2n) = B(n, 2n)
    assert!(p.k < 2 * p.n, "a path in A(n, 2n) cannot meet the diagonal");

    let mut steps = p.path.steps().to_vec();
    mirror_prefix(&mut steps, touch);
    let reflected = NEPath::new(REFLECTED_START, steps);
    let moved = reflected.translate(ADVANCE);
    let q = AnkPath {
        n: p.n,
        k: p.k + 1,
        path: moved,
    };
    tr.record(Stage::FStep { k: p.k, advanced: true }, p, &q);
    tr.record(Stage::ReflectPrefix, p, &reflected);
    tr.record(Stage::Translate(ADVANCE), &reflected, q.path());
    StepOutcome::Advanced(q)
}

/// Inverse of the advancing branch of [`reflect_step`]: takes an element of
/// `A(n, k + 1)` back to the unique element of `A(n, k)` that advances to it.
pub fn reflect_step_inv(q: &AnkPath) -> Result<AnkPath, ContractError> {
    reflect_step_inv_traced(q, &mut ())
}

pub(crate) fn reflect_step_inv_traced<T: Tracer>(
    q: &AnkPath,
    tr: &mut T,
) -> Result<AnkPath, ContractError> {
    if q.k <= q.n {
        return Err(mismatch(
            "k > n",
            alloc::format!("n={}, k={}", q.n, q.k),
        ));
    }
    let back = q.path.translate(-ADVANCE);
    tr.record(Stage::Translate(-ADVANCE), q.path(), &back);
    // starts above the diagonal at (0, 1) and ends on or below it
    let touch = back
        .first_diagonal_touch()
        .expect("shifted A(n, k+1) path crosses the diagonal");
    let mut steps = back.steps().to_vec();
    mirror_prefix(&mut steps, touch);
    let p = AnkPath {
        n: q.n,
        k: q.k - 1,
        path: NEPath::new(A_START, steps),
    };
    tr.record(Stage::ReflectPrefix, &back, p.path());
    tr.record(Stage::FStepInv { k: q.k }, q, &p);
    Ok(p)
}

/// A north/east path from `(0, 0)` to `(n, n)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TiePath(NEPath);

impl TiePath {
    pub fn new(path: NEPath) -> Result<Self, ContractError> {
        if path.start() != GridPoint::ORIGIN || path.easts() != path.norths() {
            return Err(mismatch("path from (0,0) to (n,n)", alloc::format!("{path}")));
        }
        Ok(TiePath(path))
    }

    pub fn n(&self) -> usize {
        self.0.len() / 2
    }

    pub fn path(&self) -> &NEPath {
        &self.0
    }

    pub fn into_path(self) -> NEPath {
        self.0
    }
}

impl fmt::Display for TiePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A `2n`-step north/east path from the origin that never returns to the
/// diagonal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AvoidPath(NEPath);

impl AvoidPath {
    pub fn new(path: NEPath) -> Result<Self, ContractError> {
        if path.start() != GridPoint::ORIGIN
            || !path.len().is_multiple_of(2)
            || !path.avoids_diagonal_after_start()
        {
            return Err(mismatch(
                "even-length path from (0,0) avoiding the diagonal",
                alloc::format!("{path}"),
            ));
        }
        Ok(AvoidPath(path))
    }

    pub fn n(&self) -> usize {
        self.0.len() / 2
    }

    pub fn path(&self) -> &NEPath {
        &self.0
    }

    pub fn into_path(self) -> NEPath {
        self.0
    }
}

impl fmt::Display for AvoidPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A tie path together with one of its diagonal points `(i, i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedTiePath {
    path: TiePath,
    mark: usize,
}

impl MarkedTiePath {
    pub fn new(path: TiePath, mark: usize) -> Result<Self, ContractError> {
        let i = mark as i64;
        if mark > path.n() || path.path().point_at(2 * mark) != GridPoint::new(i, i) {
            return Err(mismatch(
                alloc::format!("path visiting ({mark},{mark})"),
                alloc::format!("{path}"),
            ));
        }
        Ok(MarkedTiePath { path, mark })
    }

    pub fn path(&self) -> &TiePath {
        &self.path
    }

    pub fn mark(&self) -> usize {
        self.mark
    }

    pub fn n(&self) -> usize {
        self.path.n()
    }
}

impl fmt::Display for MarkedTiePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.path, self.mark)
    }
}

impl FromStr for MarkedTiePath {
    type Err = Error;

    /// `(0,0):ENNE#1`; the start may be omitted.
    fn from_str(s: &str) -> Result<Self, Error> {
        let (path, mark) = s.trim().rsplit_once('#').ok_or_else(|| ParseError::Malformed {
            what: "marked tie path",
            detail: s.into(),
        })?;
        let mark = mark.parse().map_err(|_| ParseError::Malformed {
            what: "marked tie path",
            detail: s.into(),
        })?;
        Ok(MarkedTiePath::new(TiePath::new(path.parse()?)?, mark)?)
    }
}

fn prepend_east(p: &AnkPath) -> NEPath {
    let mut steps = Vec::with_capacity(p.path.len() + 1);
    steps.push(StepNE::East);
    steps.extend_from_slice(p.path.steps());
    NEPath::from_origin(steps)
}

fn strip_east(path: &NEPath, n: usize) -> AnkPath {
    let (_, rest) = path.split_at(1);
    let k = rest.end().x as usize;
    AnkPath::new(n, k, rest).expect("east-first path minus its first step lies in A(n,k)")
}

/// Tie paths onto diagonal-avoiding paths of the same length.
///
/// East-first inputs land strictly below the diagonal, north-first inputs
/// strictly above.
pub fn tie_to_avoiding(p: &TiePath) -> AvoidPath {
    tie_to_avoiding_counted(p).0
}

/// [`tie_to_avoiding`] together with the number of advancing reflection steps
/// it took, which never exceeds `n`.
pub fn tie_to_avoiding_counted(p: &TiePath) -> (AvoidPath, usize) {
    tie_to_avoiding_traced(p, &mut ())
}

pub(crate) fn tie_to_avoiding_traced<T: Tracer>(p: &TiePath, tr: &mut T) -> (AvoidPath, usize) {
    let n = p.n();
    match p.path().first() {
        None => (AvoidPath(p.path().clone()), 0),
        Some(StepNE::North) => {
            let flipped = p.path().reflect_diagonal();
            tr.record(Stage::ReflectDiagonal, p.path(), &flipped);
            let (out, advances) = east_tie_to_avoiding(&flipped, n, tr);
            let back = out.reflect_diagonal();
            tr.record(Stage::ReflectDiagonal, &out, &back);
            (AvoidPath(back), advances)
        }
        Some(StepNE::East) => {
            let (out, advances) = east_tie_to_avoiding(p.path(), n, tr);
            (AvoidPath(out), advances)
        }
    }
}

fn east_tie_to_avoiding<T: Tracer>(path: &NEPath, n: usize, tr: &mut T) -> (NEPath, usize) {
    let mut current = strip_east(path, n);
    tr.record(Stage::StripFirstStep, path, &current);
    let mut advances = 0;
    let last = loop {
        match reflect_step_traced(&current, tr) {
            StepOutcome::InB(p) => break p,
            StepOutcome::Advanced(q) => {
                advances += 1;
                assert!(advances <= n, "more than n advances");
                current = q;
            }
        }
    };
    let out = prepend_east(&last);
    tr.record(Stage::PrependEast, &last, &out);
    (out, advances)
}

/// Inverse of [`tie_to_avoiding`].
pub fn avoiding_to_tie(u: &AvoidPath) -> TiePath {
    avoiding_to_tie_traced(u, &mut ())
}

pub(crate) fn avoiding_to_tie_traced<T: Tracer>(u: &AvoidPath, tr: &mut T) -> TiePath {
    let n = u.n();
    match u.path().first() {
        None => TiePath(u.path().clone()),
        Some(StepNE::North) => {
            let flipped = u.path().reflect_diagonal();
            tr.record(Stage::ReflectDiagonal, u.path(), &flipped);
            let out = east_avoiding_to_tie(&flipped, n, tr);
            let back = out.reflect_diagonal();
            tr.record(Stage::ReflectDiagonal, &out, &back);
            TiePath(back)
        }
        Some(StepNE::East) => TiePath(east_avoiding_to_tie(u.path(), n, tr)),
    }
}

fn east_avoiding_to_tie<T: Tracer>(path: &NEPath, n: usize, tr: &mut T) -> NEPath {
    let mut current = strip_east(path, n);
    tr.record(Stage::StripFirstStep, path, &current);
    while current.k > n {
        current = reflect_step_inv_traced(&current, tr).expect("k > n");
    }
    let out = prepend_east(&current);
    tr.record(Stage::PrependEast, &current, &out);
    out
}

fn check_free(p: &NEPath) -> Result<usize, ContractError> {
    if p.start() != GridPoint::ORIGIN || !p.len().is_multiple_of(2) {
        return Err(mismatch(
            "even-length path from (0,0)",
            alloc::format!("{p}"),
        ));
    }
    Ok(p.len() / 2)
}

/// All `2n`-step paths from the origin onto tie paths with a marked diagonal
/// point.
///
/// The input is cut at its last diagonal point `(i, i)`. The tail, which never
/// meets the diagonal again, is replaced by the tie path that
/// [`tie_to_avoiding`] sends to it, and the result is marked at `i`.
pub fn free_to_marked_tie(p: &NEPath) -> Result<MarkedTiePath, ContractError> {
    free_to_marked_tie_traced(p, &mut ())
}

pub(crate) fn free_to_marked_tie_traced<T: Tracer>(
    p: &NEPath,
    tr: &mut T,
) -> Result<MarkedTiePath, ContractError> {
    check_free(p)?;
    let cut = p.last_diagonal_touch().expect("the origin is on the diagonal");
    let i = (cut / 2) as i64;
    let (head, tail) = p.split_at(cut);
    tr.record(Stage::LastDiagonalSplit, p, &Pair(&head, &tail));
    let shifted = tail.translate(GridPoint::new(-i, -i));
    tr.record(Stage::Translate(GridPoint::new(-i, -i)), &tail, &shifted);
    let tie = avoiding_to_tie_traced(&AvoidPath(shifted), tr);
    let restored = tie.path().translate(GridPoint::new(i, i));
    tr.record(Stage::Translate(GridPoint::new(i, i)), tie.path(), &restored);
    let joined = head.concat(&restored);
    tr.record(Stage::Join, &Pair(&head, &restored), &joined);
    let out = MarkedTiePath {
        path: TiePath(joined),
        mark: cut / 2,
    };
    tr.record(Stage::Mark { i: out.mark }, out.path.path(), &out);
    Ok(out)
}

/// Inverse of [`free_to_marked_tie`].
pub fn marked_tie_to_free(m: &MarkedTiePath) -> NEPath {
    marked_tie_to_free_traced(m, &mut ())
}

pub(crate) fn marked_tie_to_free_traced<T: Tracer>(m: &MarkedTiePath, tr: &mut T) -> NEPath {
    let i = m.mark as i64;
    // a monotone path visits (i, i) once, at index 2i
    let (head, tail) = m.path.path().split_at(2 * m.mark);
    tr.record(Stage::SplitAtMark, m, &Pair(&head, &tail));
    let shifted = tail.translate(GridPoint::new(-i, -i));
    tr.record(Stage::Translate(GridPoint::new(-i, -i)), &tail, &shifted);
    let avoiding = tie_to_avoiding_traced(&TiePath(shifted), tr).0;
    let restored = avoiding.path().translate(GridPoint::new(i, i));
    tr.record(Stage::Translate(GridPoint::new(i, i)), avoiding.path(), &restored);
    let joined = head.concat(&restored);
    tr.record(Stage::Join, &Pair(&head, &restored), &joined);
    joined
}

/// Two paths written as `first|second`.
pub(crate) struct Pair<'a, P>(pub &'a P, pub &'a P);

impl<P: fmt::Display> fmt::Display for Pair<'_, P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.0, self.1)
    }
}
