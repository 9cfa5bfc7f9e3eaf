//! Step-by-step traces of the bijections.
//!
//! Every traced stage is itself a function of its `before` value, so a trace
//! can be checked event by event with [`replay`].

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{mismatch, Error, ParseError};
use crate::hockey::{self, MarkedPath, PathTriple};
use crate::path::{GridPoint, NEPath, Step};
use crate::warmup::{self, AnkPath, MarkedTiePath, Pair, StepOutcome};

/// One stage of an algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    /// Reflection step on `A(n, k)`; `advanced` tells which branch was taken.
    FStep { k: usize, advanced: bool },
    /// Inverse reflection step out of `A(n, k)`.
    FStepInv { k: usize },
    /// Mirror the steps up to the first diagonal point, transposing the start.
    ReflectPrefix,
    Translate(GridPoint),
    ReflectDiagonal,
    /// Drop the leading east step of an origin path, giving an `A(n, k)` path.
    StripFirstStep,
    PrependEast,
    /// Cut a free path at its last diagonal point into `head|tail`.
    LastDiagonalSplit,
    /// Cut a marked tie path at its mark into `head|tail`.
    SplitAtMark,
    /// Join `head|tail` north/east paths.
    Join,
    /// Mark a tie path at `(i, i)`.
    Mark { i: usize },
    Classify,
    /// Join `a` and `b` of a triple with empty third path.
    Concatenate,
    /// Cut the third path at its leftmost highest point into `c1|c2`.
    SplitAtPeak,
    Splice,
    Unsplice,
    ReflectTriple,
    ReflectMarked,
    MergeMiddle,
    SplitAtCrossing,
    SplitAtAxis,
    /// Side of the axis the mark lies on.
    Dispatch,
    /// Whether a triple has an empty middle path and a third path on both
    /// sides of the axis.
    IsInI,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stage::FStep { k, advanced: true } => write!(f, "f_step k={k} advance"),
            Stage::FStep { k, advanced: false } => write!(f, "f_step k={k} in-B"),
            Stage::FStepInv { k } => write!(f, "f_step-inv k={k}"),
            Stage::ReflectPrefix => f.write_str("reflect-prefix"),
            Stage::Translate(v) => write!(f, "translate {v}"),
            Stage::ReflectDiagonal => f.write_str("reflect-diagonal"),
            Stage::StripFirstStep => f.write_str("strip-first-step"),
            Stage::PrependEast => f.write_str("prepend-east"),
            Stage::LastDiagonalSplit => f.write_str("split-at-last-diagonal"),
            Stage::SplitAtMark => f.write_str("split-at-mark"),
            Stage::Join => f.write_str("join"),
            Stage::Mark { i } => write!(f, "mark i={i}"),
            Stage::Classify => f.write_str("classify"),
            Stage::Concatenate => f.write_str("concatenate"),
            Stage::SplitAtPeak => f.write_str("split-at-K"),
            Stage::Splice => f.write_str("splice"),
            Stage::Unsplice => f.write_str("unsplice"),
            Stage::ReflectTriple | Stage::ReflectMarked => f.write_str("reflect"),
            Stage::MergeMiddle => f.write_str("merge-middle"),
            Stage::SplitAtCrossing => f.write_str("split-at-crossing"),
            Stage::SplitAtAxis => f.write_str("split-at-axis"),
            Stage::Dispatch => f.write_str("dispatch"),
            Stage::IsInI => f.write_str("in-I"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEvent {
    pub stage: Stage,
    pub before: String,
    pub after: String,
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.stage, self.before, self.after)
    }
}

/// Sink for trace events. `()` discards them.
pub trait Tracer {
    fn record(&mut self, stage: Stage, before: &dyn fmt::Display, after: &dyn fmt::Display);
}

impl Tracer for () {
    #[inline(always)]
    fn record(&mut self, _: Stage, _: &dyn fmt::Display, _: &dyn fmt::Display) {}
}

impl Tracer for Vec<TraceEvent> {
    fn record(&mut self, stage: Stage, before: &dyn fmt::Display, after: &dyn fmt::Display) {
        self.push(TraceEvent {
            stage,
            before: before.to_string(),
            after: after.to_string(),
        });
    }
}

/// Parses a north/east path, also accepting the `n=..,k=.. ` prefix of an
/// `A(n, k)` path.
fn loose_ne(s: &str) -> Result<NEPath, ParseError> {
    let s = s.trim();
    let s = match s.split_once(' ') {
        Some((params, path)) if params.starts_with("n=") => path,
        _ => s,
    };
    NEPath::parse(s)
}

fn ne_pair(s: &str) -> Result<(NEPath, NEPath), ParseError> {
    let (a, b) = s.split_once('|').ok_or_else(|| ParseError::Malformed {
        what: "path pair",
        detail: s.into(),
    })?;
    Ok((NEPath::parse(a)?, NEPath::parse(b)?))
}

/// Recomputes the `after` value of a stage from its `before` value.
pub fn replay(stage: Stage, before: &str) -> Result<String, Error> {
    let out = match stage {
        Stage::FStep { k, advanced } => {
            let p: AnkPath = before.parse()?;
            if p.k() != k {
                return Err(mismatch(alloc::format!("k={k}"), before).into());
            }
            let outcome = warmup::reflect_step(&p);
            if matches!(outcome, StepOutcome::Advanced(_)) != advanced {
                return Err(mismatch(stage.to_string(), outcome.to_string()).into());
            }
            outcome.path().to_string()
        }
        Stage::FStepInv { .. } => warmup::reflect_step_inv(&before.parse()?)?.to_string(),
        Stage::ReflectPrefix => {
            let p = loose_ne(before)?;
            let t = p
                .first_diagonal_touch()
                .ok_or_else(|| mismatch("path meeting the diagonal", before))?;
            let mut steps = p.steps().to_vec();
            for s in &mut steps[..t] {
                *s = s.mirror();
            }
            NEPath::new(p.start().transposed(), steps).to_string()
        }
        Stage::Translate(v) => loose_ne(before)?.translate(v).to_string(),
        Stage::ReflectDiagonal => NEPath::parse(before)?.reflect_diagonal().to_string(),
        Stage::StripFirstStep => {
            let p = NEPath::parse(before)?;
            let (_, rest) = p.split_at(1.min(p.len()));
            AnkPath::new(p.len() / 2, rest.end().x.max(0) as usize, rest)?.to_string()
        }
        Stage::PrependEast => {
            let p: AnkPath = before.parse()?;
            let mut steps = alloc::vec![crate::path::StepNE::East];
            steps.extend_from_slice(p.path().steps());
            NEPath::from_origin(steps).to_string()
        }
        Stage::LastDiagonalSplit => {
            let p = NEPath::parse(before)?;
            let t = p.last_diagonal_touch().unwrap_or(0);
            let (a, b) = p.split_at(t);
            Pair(&a, &b).to_string()
        }
        Stage::SplitAtMark => {
            let m: MarkedTiePath = before.parse()?;
            let (a, b) = m.path().path().split_at(2 * m.mark());
            Pair(&a, &b).to_string()
        }
        Stage::Join => {
            let (a, b) = ne_pair(before)?;
            if a.end() != b.start() {
                return Err(mismatch(alloc::format!("path from {}", a.end()), b.to_string()).into());
            }
            a.concat(&b).to_string()
        }
        Stage::Mark { i } => {
            let tie = warmup::TiePath::new(NEPath::parse(before)?)?;
            MarkedTiePath::new(tie, i)?.to_string()
        }
        Stage::Classify => hockey::classify(&before.parse()?).to_string(),
        Stage::Concatenate => hockey::join_at_axis(&before.parse()?)?.to_string(),
        Stage::SplitAtPeak => {
            let t: PathTriple = before.parse()?;
            let (peak, _) = t.c().leftmost_extreme(crate::path::Extreme::Max);
            let (c1, c2) = t.c().split_at(peak);
            alloc::format!("{c1}|{c2}")
        }
        Stage::Splice => hockey::peak_splice(&before.parse()?)?.to_string(),
        Stage::Unsplice => hockey::peak_unsplice(&before.parse()?)?.to_string(),
        Stage::ReflectTriple => before.parse::<PathTriple>()?.reflect_horizontal().to_string(),
        Stage::ReflectMarked => before.parse::<MarkedPath>()?.reflect_horizontal().to_string(),
        Stage::MergeMiddle => hockey::merge_middle(&before.parse()?)?.to_string(),
        Stage::SplitAtCrossing => hockey::split_at_crossing(&before.parse()?)?.to_string(),
        Stage::SplitAtAxis => hockey::split_at_axis(&before.parse()?)?.to_string(),
        Stage::Dispatch => hockey::mark_side(&before.parse()?).to_string(),
        Stage::IsInI => hockey::is_in_i(&before.parse()?).to_string(),
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hockey::triple_to_marked_traced;
    use crate::warmup::{tie_to_avoiding_traced, TiePath};

    #[test]
    fn tie_trace_has_two_advances_then_stops() {
        let p = TiePath::new(NEPath::parse("EENNNNEE").unwrap()).unwrap();
        let mut events = Vec::new();
        let (out, advances) = tie_to_avoiding_traced(&p, &mut events);
        assert_eq!(out.to_string(), "(0,0):EEEENNEE");
        assert_eq!(advances, 2);
        let steps: Vec<_> = events
            .iter()
            .filter(|e| matches!(e.stage, Stage::FStep { .. }))
            .map(|e| e.stage)
            .collect();
        assert_eq!(
            steps,
            [
                Stage::FStep { k: 4, advanced: true },
                Stage::FStep { k: 5, advanced: true },
                Stage::FStep { k: 6, advanced: false },
            ]
        );
        for e in &events {
            assert_eq!(replay(e.stage, &e.before).unwrap(), e.after, "{e}");
        }
    }

    #[test]
    fn composite_trace_stages() {
        let t: PathTriple = "|UD|DU".parse().unwrap();
        let mut events = Vec::new();
        triple_to_marked_traced(&t, &mut events);
        let labels: Vec<_> = events.iter().map(|e| e.stage.to_string()).collect();
        assert_eq!(
            labels,
            ["classify", "merge-middle", "reflect", "split-at-K", "splice", "reflect"]
        );
        assert_eq!(events[0].after, "J-below");
        assert_eq!(events.last().unwrap().after, "UDDU@3");

        let mut events = Vec::new();
        triple_to_marked_traced(&"UD||".parse().unwrap(), &mut events);
        let labels: Vec<_> = events.iter().map(|e| e.stage.to_string()).collect();
        assert_eq!(labels, ["classify", "concatenate"]);
        assert_eq!(events[0].after, "R");
    }

    #[test]
    fn replay_rejects_wrong_branch() {
        assert!(replay(Stage::FStep { k: 4, advanced: false }, "n=4,k=4 (1,0):ENNNNEE").is_err());
        assert!(replay(Stage::FStep { k: 5, advanced: true }, "n=4,k=4 (1,0):ENNNNEE").is_err());
    }
}
