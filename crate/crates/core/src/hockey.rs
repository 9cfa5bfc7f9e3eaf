//! The bijection between ordered triples of balanced up/down paths whose
//! semilengths sum to `n` and balanced paths of semilength `n` with one marked
//! lattice point.
//!
//! The triples are split into four classes, each handled by its own map:
//!
//! | class        | condition on `(a, b, c)`                                    | map                         |
//! |--------------|-------------------------------------------------------------|-----------------------------|
//! | `R`          | `c` empty                                                   | [`join_at_axis`]            |
//! | `U`          | `b` empty or ends down, `c` rises above the axis            | [`peak_splice`]             |
//! | `V ∖ U`      | `b` empty or ends up, `c` dips below the axis, not in `U`   | [`valley_splice`]           |
//! | `J`          | everything else                                             | [`merge_middle`] then [`valley_splice`] |
//!
//! The first map marks a point on the axis. The splices mark a point off the
//! axis, the peak splice above it and the valley splice below it. `U` and `V`
//! overlap in `I`: triples with `b` empty and `c` on both sides of the axis.
//! Those are sent to the positive side, and [`merge_middle`] moves the
//! leftover class `J` onto `I` so that the negative side is covered exactly
//! once.

use core::fmt;
use core::str::FromStr;

use crate::error::{mismatch, ContractError, Error, ParseError};
use crate::path::{Extreme, StepUD, UDPath};
use crate::trace::{Stage, Tracer};

fn balanced(p: UDPath) -> Result<UDPath, ContractError> {
    if p.is_balanced() {
        Ok(p)
    } else {
        Err(ContractError::NotBalanced(alloc::format!("{p}")))
    }
}

/// Three balanced paths `(a, b, c)`; `n` is the sum of their semilengths.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PathTriple {
    a: UDPath,
    b: UDPath,
    c: UDPath,
}

impl PathTriple {
    pub fn new(a: UDPath, b: UDPath, c: UDPath) -> Result<Self, ContractError> {
        Ok(PathTriple {
            a: balanced(a)?,
            b: balanced(b)?,
            c: balanced(c)?,
        })
    }

    pub(crate) fn new_unchecked(a: UDPath, b: UDPath, c: UDPath) -> Self {
        debug_assert!(a.is_balanced() && b.is_balanced() && c.is_balanced());
        PathTriple { a, b, c }
    }

    pub fn a(&self) -> &UDPath {
        &self.a
    }

    pub fn b(&self) -> &UDPath {
        &self.b
    }

    pub fn c(&self) -> &UDPath {
        &self.c
    }

    pub fn n(&self) -> usize {
        (self.a.len() + self.b.len() + self.c.len()) / 2
    }

    /// Reflects every component through the horizontal axis.
    pub fn reflect_horizontal(&self) -> Self {
        PathTriple {
            a: self.a.reflect_horizontal(),
            b: self.b.reflect_horizontal(),
            c: self.c.reflect_horizontal(),
        }
    }
}

impl fmt::Display for PathTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}|{}", self.a, self.b, self.c)
    }
}

impl FromStr for PathTriple {
    type Err = Error;

    /// `A|B|C`, empty segments allowed.
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut parts = s.trim().split('|');
        let (Some(a), Some(b), Some(c), None) = (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(ParseError::Malformed {
                what: "path triple",
                detail: alloc::format!("expected A|B|C, got {s:?}"),
            }
            .into());
        };
        let mut offset = 0;
        let mut segment = |text: &str| -> Result<UDPath, ParseError> {
            let p = UDPath::parse(text).map_err(|e| match e {
                ParseError::InvalidChar { index, found } => ParseError::InvalidChar {
                    index: index + offset,
                    found,
                },
                other => other,
            });
            offset += text.len() + 1;
            p
        };
        let (a, b, c) = (segment(a)?, segment(b)?, segment(c)?);
        Ok(PathTriple::new(a, b, c)?)
    }
}

/// A balanced path `h` of semilength `n` with a mark index `x` in `0..=2n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MarkedPath {
    h: UDPath,
    x: usize,
}

impl MarkedPath {
    pub fn new(h: UDPath, x: usize) -> Result<Self, ContractError> {
        if x > h.len() {
            return Err(ContractError::MarkOutOfRange {
                index: x,
                len: h.len(),
            });
        }
        Ok(MarkedPath { h: balanced(h)?, x })
    }

    pub fn path(&self) -> &UDPath {
        &self.h
    }

    pub fn mark(&self) -> usize {
        self.x
    }

    pub fn n(&self) -> usize {
        self.h.len() / 2
    }

    pub fn mark_height(&self) -> i64 {
        self.h.height_at(self.x)
    }

    /// Reflects the path through the horizontal axis, keeping the mark index.
    pub fn reflect_horizontal(&self) -> Self {
        MarkedPath {
            h: self.h.reflect_horizontal(),
            x: self.x,
        }
    }
}

impl fmt::Display for MarkedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.h, self.x)
    }
}

impl FromStr for MarkedPath {
    type Err = Error;

    /// `H@x`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let malformed = || ParseError::Malformed {
            what: "marked path",
            detail: alloc::format!("expected H@x, got {s:?}"),
        };
        let (h, x) = s.trim().split_once('@').ok_or_else(malformed)?;
        let x = x.parse().map_err(|_| malformed())?;
        Ok(MarkedPath::new(UDPath::parse(h)?, x)?)
    }
}

/// Which side `c` stays on for a triple of class `J`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    /// `b` ends with a down step and `c` never rises above the axis.
    Below,
    /// `b` ends with an up step and `c` never dips below the axis.
    Above,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TripleClass {
    R,
    U,
    VMinusU,
    J(Side),
}

impl fmt::Display for TripleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TripleClass::R => "R",
            TripleClass::U => "U",
            TripleClass::VMinusU => "V-minus-U",
            TripleClass::J(Side::Below) => "J-below",
            TripleClass::J(Side::Above) => "J-above",
        })
    }
}

impl FromStr for TripleClass {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        Ok(match s {
            "R" => TripleClass::R,
            "U" => TripleClass::U,
            "V-minus-U" => TripleClass::VMinusU,
            "J-below" => TripleClass::J(Side::Below),
            "J-above" => TripleClass::J(Side::Above),
            _ => {
                return Err(ParseError::Malformed {
                    what: "triple class",
                    detail: s.into(),
                })
            }
        })
    }
}

fn in_u(t: &PathTriple) -> bool {
    !t.c.is_empty() && matches!(t.b.last(), None | Some(StepUD::Down)) && t.c.max_height() > 0
}

fn in_v(t: &PathTriple) -> bool {
    !t.c.is_empty() && matches!(t.b.last(), None | Some(StepUD::Up)) && t.c.min_height() < 0
}

/// Assigns the class that decides which map handles `t`.
pub fn classify(t: &PathTriple) -> TripleClass {
    if t.c.is_empty() {
        TripleClass::R
    } else if in_u(t) {
        TripleClass::U
    } else if in_v(t) {
        TripleClass::VMinusU
    } else if t.b.last() == Some(StepUD::Down) {
        TripleClass::J(Side::Below)
    } else {
        TripleClass::J(Side::Above)
    }
}

/// `b` is empty and `c` has points strictly on both sides of the axis.
pub fn is_in_i(t: &PathTriple) -> bool {
    t.b.is_empty() && in_u(t) && in_v(t)
}

fn expect_class(t: &PathTriple, ok: bool, expected: &str) -> Result<(), ContractError> {
    if ok {
        Ok(())
    } else {
        Err(mismatch(
            expected,
            alloc::format!("{t} of class {}", classify(t)),
        ))
    }
}

/// Class `R`: concatenates `a` and `b`, marking the point where they meet.
pub fn join_at_axis(t: &PathTriple) -> Result<MarkedPath, ContractError> {
    expect_class(t, t.c.is_empty(), "triple with empty third path")?;
    Ok(MarkedPath {
        h: UDPath::concat(&[&t.a, &t.b]),
        x: t.a.len(),
    })
}

/// Inverse of [`join_at_axis`] for marks on the axis.
pub fn split_at_axis(m: &MarkedPath) -> Result<PathTriple, ContractError> {
    let height = m.mark_height();
    if height != 0 {
        return Err(mismatch("mark at height 0", alloc::format!("{m} at height {height}")));
    }
    let (a, b) = m.h.split_at(m.x);
    Ok(PathTriple::new_unchecked(a, b, UDPath::empty()))
}

/// Class `U` (including `I`): cuts `c` at its leftmost highest point `K` into
/// `c1 c2` and returns `c1 a b c2`, marked where `a` meets `b`. The mark sits
/// at the height of `K`, which is positive.
pub fn peak_splice(t: &PathTriple) -> Result<MarkedPath, ContractError> {
    peak_splice_traced(t, &mut ())
}

pub(crate) fn peak_splice_traced<T: Tracer>(
    t: &PathTriple,
    tr: &mut T,
) -> Result<MarkedPath, ContractError> {
    expect_class(t, in_u(t), "triple in U")?;
    let (peak, _) = t.c.leftmost_extreme(Extreme::Max);
    let (c1, c2) = t.c.split_at(peak);
    tr.record(Stage::SplitAtPeak, t, &SplitDisplay(&c1, &c2));
    let m = MarkedPath {
        h: UDPath::concat(&[&c1, &t.a, &t.b, &c2]),
        x: peak + t.a.len(),
    };
    tr.record(Stage::Splice, t, &m);
    Ok(m)
}

/// Inverse of [`peak_splice`] for marks strictly above the axis.
///
/// With `k` the mark height: `K` is the leftmost point at height `k`, `a` runs
/// from `K` to the mark, and `b` ends at `Z`, the rightmost point after the
/// mark at height `k` that is entered and left by down steps. Without such a
/// `Z`, `b` is empty.
pub fn peak_unsplice(m: &MarkedPath) -> Result<PathTriple, ContractError> {
    let profile = m.h.height_profile();
    let k = profile[m.x];
    if k <= 0 {
        return Err(mismatch("mark above the axis", alloc::format!("{m} at height {k}")));
    }
    let steps = m.h.steps();
    let peak = profile
        .iter()
        .position(|&h| h == k)
        .expect("the mark itself is at height k");
    // 0 < z < len, so both neighbouring steps exist
    let z = (m.x + 1..steps.len())
        .rev()
        .find(|&z| profile[z] == k && steps[z - 1] == StepUD::Down && steps[z] == StepUD::Down);
    let cut = z.unwrap_or(m.x);
    let a = m.h.slice(peak..m.x);
    let b = m.h.slice(m.x..cut);
    let c = UDPath::concat(&[&m.h.slice(0..peak), &m.h.slice(cut..steps.len())]);
    Ok(PathTriple::new_unchecked(a, b, c))
}

/// Class `V ∖ U` and the image of `J` under [`merge_middle`]: the mirror image
/// of [`peak_splice`], computed by conjugating it with the horizontal
/// reflection. The mark lands strictly below the axis.
pub fn valley_splice(t: &PathTriple) -> Result<MarkedPath, ContractError> {
    valley_splice_traced(t, &mut ())
}

pub(crate) fn valley_splice_traced<T: Tracer>(
    t: &PathTriple,
    tr: &mut T,
) -> Result<MarkedPath, ContractError> {
    expect_class(t, in_v(t), "triple in V")?;
    let flipped = t.reflect_horizontal();
    tr.record(Stage::ReflectTriple, t, &flipped);
    let m = peak_splice_traced(&flipped, tr)?;
    let back = m.reflect_horizontal();
    tr.record(Stage::ReflectMarked, &m, &back);
    Ok(back)
}

/// Inverse of [`valley_splice`] for marks strictly below the axis.
pub fn valley_unsplice(m: &MarkedPath) -> Result<PathTriple, ContractError> {
    valley_unsplice_traced(m, &mut ())
}

fn valley_unsplice_traced<T: Tracer>(m: &MarkedPath, tr: &mut T) -> Result<PathTriple, ContractError> {
    let height = m.mark_height();
    if height >= 0 {
        return Err(mismatch("mark below the axis", alloc::format!("{m} at height {height}")));
    }
    let flipped = m.reflect_horizontal();
    tr.record(Stage::ReflectMarked, m, &flipped);
    let t = peak_unsplice(&flipped)?;
    tr.record(Stage::Unsplice, &flipped, &t);
    let back = t.reflect_horizontal();
    tr.record(Stage::ReflectTriple, &t, &back);
    Ok(back)
}

/// Class `J` onto `I`: `(a, b, c) ↦ (a, ∅, b c)`.
pub fn merge_middle(t: &PathTriple) -> Result<PathTriple, ContractError> {
    expect_class(t, matches!(classify(t), TripleClass::J(_)), "triple in J")?;
    Ok(PathTriple::new_unchecked(
        t.a.clone(),
        UDPath::empty(),
        UDPath::concat(&[&t.b, &t.c]),
    ))
}

/// Inverse of [`merge_middle`]: splits `c` at its rightmost crossing of the
/// axis, an interior point at height 0 whose incoming and outgoing steps are
/// equal.
pub fn split_at_crossing(t: &PathTriple) -> Result<PathTriple, ContractError> {
    expect_class(t, is_in_i(t), "triple in I")?;
    let steps = t.c.steps();
    let profile = t.c.height_profile();
    let y = (1..steps.len())
        .rev()
        .find(|&y| profile[y] == 0 && steps[y - 1] == steps[y])
        .expect("a path on both sides of the axis crosses it");
    let (b, c) = t.c.split_at(y);
    Ok(PathTriple::new_unchecked(t.a.clone(), b, c))
}

/// The bijection from path triples onto marked paths.
pub fn triple_to_marked(t: &PathTriple) -> MarkedPath {
    triple_to_marked_traced(t, &mut ())
}

pub(crate) fn triple_to_marked_traced<T: Tracer>(t: &PathTriple, tr: &mut T) -> MarkedPath {
    let class = classify(t);
    tr.record(Stage::Classify, t, &class);
    let out = match class {
        TripleClass::R => {
            let m = join_at_axis(t);
            if let Ok(m) = &m {
                tr.record(Stage::Concatenate, t, m);
            }
            m
        }
        TripleClass::U => peak_splice_traced(t, tr),
        TripleClass::VMinusU => valley_splice_traced(t, tr),
        TripleClass::J(_) => merge_middle(t).and_then(|i| {
            tr.record(Stage::MergeMiddle, t, &i);
            valley_splice_traced(&i, tr)
        }),
    };
    out.expect("every class has a map defined on it")
}

/// Inverse of [`triple_to_marked`].
pub fn marked_to_triple(m: &MarkedPath) -> PathTriple {
    marked_to_triple_traced(m, &mut ())
}

/// Sign of the mark height, as reported by the dispatch trace stage.
pub fn mark_side(m: &MarkedPath) -> &'static str {
    match m.mark_height() {
        0 => "axis",
        h if h > 0 => "above",
        _ => "below",
    }
}

pub(crate) fn marked_to_triple_traced<T: Tracer>(m: &MarkedPath, tr: &mut T) -> PathTriple {
    tr.record(Stage::Dispatch, m, &mark_side(m));
    let height = m.mark_height();
    let out = if height == 0 {
        split_at_axis(m).inspect(|t| tr.record(Stage::SplitAtAxis, m, t))
    } else if height > 0 {
        peak_unsplice(m).inspect(|t| tr.record(Stage::Unsplice, m, t))
    } else {
        valley_unsplice_traced(m, tr).and_then(|v| {
            let in_i = is_in_i(&v);
            tr.record(Stage::IsInI, &v, &in_i);
            if in_i {
                split_at_crossing(&v).inspect(|t| tr.record(Stage::SplitAtCrossing, &v, t))
            } else {
                Ok(v)
            }
        })
    };
    out.expect("every mark height has an inverse defined on it")
}

/// Two up/down paths written as `first|second`.
pub(crate) struct SplitDisplay<'a>(pub &'a UDPath, pub &'a UDPath);

impl fmt::Display for SplitDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.0, self.1)
    }
}
