//! Lattice paths over the two step alphabets, with the geometric queries and
//! symmetries the bijections are assembled from.
//!
//! A point on a path is always addressed by its step index `0..=len`: the
//! `t`-th visited point is the one reached after `t` steps. Coordinates are
//! derived from the index, never the other way round, because a path may pass
//! through the same height (or, for up/down paths, the same grid point) more
//! than once.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::ParseError;

/// A two-letter step alphabet.
pub trait Step: Copy + Eq + Ord + fmt::Debug {
    /// Both letters, in enumeration order.
    const ALPHABET: [Self; 2];

    fn to_char(self) -> char;

    fn from_char(c: char) -> Option<Self>;

    /// The image of this step under the alphabet's reflection.
    fn mirror(self) -> Self;
}

/// `Up` is the step `(1, 1)`, `Down` is `(1, -1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StepUD {
    Up,
    Down,
}

impl StepUD {
    pub fn delta(self) -> i64 {
        match self {
            StepUD::Up => 1,
            StepUD::Down => -1,
        }
    }
}

impl Step for StepUD {
    const ALPHABET: [Self; 2] = [StepUD::Up, StepUD::Down];

    fn to_char(self) -> char {
        match self {
            StepUD::Up => 'U',
            StepUD::Down => 'D',
        }
    }

    fn from_char(c: char) -> Option<Self> {
        match c {
            'U' => Some(StepUD::Up),
            'D' => Some(StepUD::Down),
            _ => None,
        }
    }

    /// Reflection through the horizontal axis.
    fn mirror(self) -> Self {
        match self {
            StepUD::Up => StepUD::Down,
            StepUD::Down => StepUD::Up,
        }
    }
}

/// `East` is the step `(1, 0)`, `North` is `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StepNE {
    East,
    North,
}

impl Step for StepNE {
    const ALPHABET: [Self; 2] = [StepNE::East, StepNE::North];

    fn to_char(self) -> char {
        match self {
            StepNE::East => 'E',
            StepNE::North => 'N',
        }
    }

    fn from_char(c: char) -> Option<Self> {
        match c {
            'E' => Some(StepNE::East),
            'N' => Some(StepNE::North),
            _ => None,
        }
    }

    /// Reflection through the diagonal `x = y`.
    fn mirror(self) -> Self {
        match self {
            StepNE::East => StepNE::North,
            StepNE::North => StepNE::East,
        }
    }
}

/// Parses a step string, reporting the index of the first foreign character.
pub fn parse_steps<S: Step>(text: &str) -> Result<Vec<S>, ParseError> {
    text.chars()
        .enumerate()
        .map(|(index, c)| S::from_char(c).ok_or(ParseError::InvalidChar { index, found: c }))
        .collect()
}

pub fn format_steps<S: Step>(steps: &[S]) -> String {
    steps.iter().map(|s| s.to_char()).collect()
}

/// A point of the integer grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GridPoint {
    pub x: i64,
    pub y: i64,
}

impl GridPoint {
    pub const ORIGIN: GridPoint = GridPoint { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        GridPoint { x, y }
    }

    pub fn on_diagonal(self) -> bool {
        self.x == self.y
    }

    pub fn offset(self, v: GridPoint) -> Self {
        GridPoint::new(self.x + v.x, self.y + v.y)
    }

    pub fn transposed(self) -> Self {
        GridPoint::new(self.y, self.x)
    }

    fn step(self, s: StepNE) -> Self {
        match s {
            StepNE::East => GridPoint::new(self.x + 1, self.y),
            StepNE::North => GridPoint::new(self.x, self.y + 1),
        }
    }
}

impl core::ops::Neg for GridPoint {
    type Output = GridPoint;

    fn neg(self) -> GridPoint {
        GridPoint::new(-self.x, -self.y)
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl FromStr for GridPoint {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || ParseError::Malformed {
            what: "grid point",
            detail: s.into(),
        };
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(malformed)?;
        let (x, y) = inner.split_once(',').ok_or_else(malformed)?;
        let x = x.trim().parse().map_err(|_| malformed())?;
        let y = y.trim().parse().map_err(|_| malformed())?;
        Ok(GridPoint::new(x, y))
    }
}

/// Which extreme height [`UDPath::leftmost_extreme`] looks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extreme {
    Max,
    Min,
}

/// A path of up and down steps starting at height 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct UDPath(Vec<StepUD>);

impl UDPath {
    pub fn new(steps: Vec<StepUD>) -> Self {
        UDPath(steps)
    }

    pub fn empty() -> Self {
        UDPath(Vec::new())
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        parse_steps(text).map(UDPath)
    }

    pub fn steps(&self) -> &[StepUD] {
        &self.0
    }

    pub fn into_steps(self) -> Vec<StepUD> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<StepUD> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<StepUD> {
        self.0.last().copied()
    }

    pub fn final_height(&self) -> i64 {
        self.0.iter().map(|s| s.delta()).sum()
    }

    /// `#Up == #Down`.
    pub fn is_balanced(&self) -> bool {
        self.final_height() == 0
    }

    /// Number of up steps, which is the semilength of a balanced path.
    pub fn ups(&self) -> usize {
        self.0.iter().filter(|&&s| s == StepUD::Up).count()
    }

    /// Heights `h(0) = 0, h(1), ..., h(len)`.
    pub fn height_profile(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.len() + 1);
        out.push(0);
        out.extend(self.heights().skip(1));
        out
    }

    /// Lazy version of [`height_profile`](Self::height_profile).
    pub fn heights(&self) -> impl Iterator<Item = i64> + '_ {
        core::iter::once(0).chain(self.0.iter().scan(0i64, |h, s| {
            *h += s.delta();
            Some(*h)
        }))
    }

    pub fn height_at(&self, t: usize) -> i64 {
        self.0[..t].iter().map(|s| s.delta()).sum()
    }

    pub fn max_height(&self) -> i64 {
        self.heights().max().unwrap_or(0)
    }

    pub fn min_height(&self) -> i64 {
        self.heights().min().unwrap_or(0)
    }

    /// Smallest index whose height is the maximum (resp. minimum) of the
    /// profile, together with that height.
    pub fn leftmost_extreme(&self, mode: Extreme) -> (usize, i64) {
        let mut best = (0, 0);
        for (t, h) in self.heights().enumerate() {
            let better = match mode {
                Extreme::Max => h > best.1,
                Extreme::Min => h < best.1,
            };
            if better {
                best = (t, h);
            }
        }
        best
    }

    /// Swaps up and down steps; negates the height profile.
    pub fn reflect_horizontal(&self) -> Self {
        UDPath(self.0.iter().map(|s| s.mirror()).collect())
    }

    /// Splits after `t` steps.
    ///
    /// # Panics
    ///
    /// If `t > self.len()`.
    pub fn split_at(&self, t: usize) -> (UDPath, UDPath) {
        let (a, b) = self.0.split_at(t);
        (UDPath(a.to_vec()), UDPath(b.to_vec()))
    }

    pub fn slice(&self, range: core::ops::Range<usize>) -> UDPath {
        UDPath(self.0[range].to_vec())
    }

    pub fn concat(parts: &[&UDPath]) -> UDPath {
        let mut steps = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
        for p in parts {
            steps.extend_from_slice(&p.0);
        }
        UDPath(steps)
    }
}

impl fmt::Display for UDPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            fmt::Write::write_char(f, s.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for UDPath {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        UDPath::parse(s)
    }
}

/// A path of north and east steps with an explicit start point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NEPath {
    start: GridPoint,
    steps: Vec<StepNE>,
}

impl NEPath {
    pub fn new(start: GridPoint, steps: Vec<StepNE>) -> Self {
        NEPath { start, steps }
    }

    pub fn from_origin(steps: Vec<StepNE>) -> Self {
        NEPath::new(GridPoint::ORIGIN, steps)
    }

    /// Parses `(x,y):STEPS`. A bare `STEPS` starts at the origin.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        match text.split_once(':') {
            Some((start, steps)) => Ok(NEPath::new(start.parse()?, parse_steps(steps)?)),
            None => Ok(NEPath::from_origin(parse_steps(text)?)),
        }
    }

    pub fn start(&self) -> GridPoint {
        self.start
    }

    pub fn steps(&self) -> &[StepNE] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn first(&self) -> Option<StepNE> {
        self.steps.first().copied()
    }

    pub fn easts(&self) -> usize {
        self.steps.iter().filter(|&&s| s == StepNE::East).count()
    }

    pub fn norths(&self) -> usize {
        self.len() - self.easts()
    }

    pub fn end(&self) -> GridPoint {
        self.start
            .offset(GridPoint::new(self.easts() as i64, self.norths() as i64))
    }

    /// Visited points, `len + 1` of them, starting with `start`.
    pub fn points(&self) -> impl Iterator<Item = GridPoint> + '_ {
        core::iter::once(self.start).chain(self.steps.iter().scan(self.start, |p, &s| {
            *p = p.step(s);
            Some(*p)
        }))
    }

    pub fn point_at(&self, t: usize) -> GridPoint {
        let easts = self.steps[..t].iter().filter(|&&s| s == StepNE::East).count() as i64;
        self.start.offset(GridPoint::new(easts, t as i64 - easts))
    }

    /// Smallest index whose point lies on `x = y`. Index 0 (the start) counts.
    pub fn first_diagonal_touch(&self) -> Option<usize> {
        self.points().position(GridPoint::on_diagonal)
    }

    /// Largest index whose point lies on `x = y`.
    pub fn last_diagonal_touch(&self) -> Option<usize> {
        self.points()
            .enumerate()
            .filter(|(_, p)| p.on_diagonal())
            .map(|(t, _)| t)
            .last()
    }

    /// True if no visited point after the start lies on `x = y`.
    pub fn avoids_diagonal_after_start(&self) -> bool {
        self.points().skip(1).all(|p| !p.on_diagonal())
    }

    /// Swaps the coordinates of the start and every north/east step.
    pub fn reflect_diagonal(&self) -> Self {
        NEPath::new(
            self.start.transposed(),
            self.steps.iter().map(|s| s.mirror()).collect(),
        )
    }

    pub fn translate(&self, v: GridPoint) -> Self {
        NEPath::new(self.start.offset(v), self.steps.clone())
    }

    /// Splits after `t` steps; the suffix starts at the `t`-th point.
    ///
    /// # Panics
    ///
    /// If `t > self.len()`.
    pub fn split_at(&self, t: usize) -> (NEPath, NEPath) {
        let (a, b) = self.steps.split_at(t);
        (
            NEPath::new(self.start, a.to_vec()),
            NEPath::new(self.point_at(t), b.to_vec()),
        )
    }

    /// Appends `tail`, which must start where `self` ends.
    ///
    /// # Panics
    ///
    /// If the endpoints do not meet.
    pub fn concat(&self, tail: &NEPath) -> NEPath {
        assert_eq!(self.end(), tail.start, "concatenated paths must meet");
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&tail.steps);
        NEPath::new(self.start, steps)
    }
}

impl fmt::Display for NEPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.start)?;
        for s in &self.steps {
            fmt::Write::write_char(f, s.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for NEPath {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NEPath::parse(s)
    }
}
