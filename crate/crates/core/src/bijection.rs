//! Uniform entry point over the six directed maps, working on parsed values.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{mismatch, Error, ParseError};
use crate::hockey::{self, MarkedPath, PathTriple};
use crate::path::NEPath;
use crate::trace::{TraceEvent, Tracer};
use crate::warmup::{self, AvoidPath, MarkedTiePath, TiePath};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bijection {
    /// Free `2n`-step paths to marked tie paths.
    Soccer,
    SoccerInv,
    /// Tie paths to diagonal-avoiding paths.
    F,
    FInv,
    /// Path triples to marked up/down paths.
    G,
    GInv,
}

impl Bijection {
    pub const ALL: [Bijection; 6] = [
        Bijection::Soccer,
        Bijection::SoccerInv,
        Bijection::F,
        Bijection::FInv,
        Bijection::G,
        Bijection::GInv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Bijection::Soccer => "soccer",
            Bijection::SoccerInv => "soccer-inv",
            Bijection::F => "F",
            Bijection::FInv => "F-inv",
            Bijection::G => "g",
            Bijection::GInv => "g-inv",
        }
    }

    pub fn inverse(self) -> Bijection {
        match self {
            Bijection::Soccer => Bijection::SoccerInv,
            Bijection::SoccerInv => Bijection::Soccer,
            Bijection::F => Bijection::FInv,
            Bijection::FInv => Bijection::F,
            Bijection::G => Bijection::GInv,
            Bijection::GInv => Bijection::G,
        }
    }

    /// The kind of value this map accepts.
    pub fn input_kind(self) -> ValueKind {
        match self {
            Bijection::Soccer | Bijection::F | Bijection::FInv => ValueKind::Path,
            Bijection::SoccerInv => ValueKind::MarkedTie,
            Bijection::G => ValueKind::Triple,
            Bijection::GInv => ValueKind::Marked,
        }
    }

    pub fn parse_input(self, text: &str) -> Result<Value, Error> {
        self.input_kind().parse(text)
    }

    pub fn apply(self, input: &Value) -> Result<Value, Error> {
        self.run(input, &mut ())
    }

    /// Applies the map and records every stage it goes through.
    pub fn trace(self, input: &Value) -> Result<(Value, Vec<TraceEvent>), Error> {
        let mut events = Vec::new();
        let out = self.run(input, &mut events)?;
        Ok((out, events))
    }

    fn run<T: Tracer>(self, input: &Value, tr: &mut T) -> Result<Value, Error> {
        let wrong = || mismatch(self.input_kind().name(), input.kind().name());
        Ok(match (self, input) {
            (Bijection::Soccer, Value::Path(p)) => {
                Value::MarkedTie(warmup::free_to_marked_tie_traced(p, tr)?)
            }
            (Bijection::SoccerInv, Value::MarkedTie(m)) => {
                Value::Path(warmup::marked_tie_to_free_traced(m, tr))
            }
            (Bijection::F, Value::Path(p)) => {
                let tie = TiePath::new(p.clone())?;
                Value::Path(warmup::tie_to_avoiding_traced(&tie, tr).0.into_path())
            }
            (Bijection::FInv, Value::Path(p)) => {
                let avoiding = AvoidPath::new(p.clone())?;
                Value::Path(warmup::avoiding_to_tie_traced(&avoiding, tr).into_path())
            }
            (Bijection::G, Value::Triple(t)) => Value::Marked(hockey::triple_to_marked_traced(t, tr)),
            (Bijection::GInv, Value::Marked(m)) => Value::Triple(hockey::marked_to_triple_traced(m, tr)),
            _ => return Err(wrong().into()),
        })
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Bijection {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        Bijection::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| ParseError::Malformed {
                what: "bijection name",
                detail: s.into(),
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValueKind {
    Path,
    MarkedTie,
    Triple,
    Marked,
}

impl ValueKind {
    pub fn name(self) -> &'static str {
        match self {
            ValueKind::Path => "north/east path",
            ValueKind::MarkedTie => "marked tie path",
            ValueKind::Triple => "path triple",
            ValueKind::Marked => "marked path",
        }
    }

    pub fn parse(self, text: &str) -> Result<Value, Error> {
        let text = text.trim();
        Ok(match self {
            ValueKind::Path => Value::Path(text.parse()?),
            ValueKind::MarkedTie => Value::MarkedTie(text.parse()?),
            ValueKind::Triple => Value::Triple(text.parse()?),
            ValueKind::Marked => Value::Marked(text.parse()?),
        })
    }
}

/// Any input or output of a [`Bijection`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    Path(NEPath),
    MarkedTie(MarkedTiePath),
    Triple(PathTriple),
    Marked(MarkedPath),
}

impl Value {
    pub fn kind(&self) -> ValueKind {
        match self {
            Value::Path(_) => ValueKind::Path,
            Value::MarkedTie(_) => ValueKind::MarkedTie,
            Value::Triple(_) => ValueKind::Triple,
            Value::Marked(_) => ValueKind::Marked,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Path(p) => p.fmt(f),
            Value::MarkedTie(m) => m.fmt(f),
            Value::Triple(t) => t.fmt(f),
            Value::Marked(m) => m.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn run(b: &str, input: &str) -> Result<alloc::string::String, Error> {
        let b: Bijection = b.parse().unwrap();
        Ok(b.apply(&b.parse_input(input)?)?.to_string())
    }

    #[test]
    fn apply_examples() {
        assert_eq!(run("g", "|UD|DU").unwrap(), "UDDU@3");
        assert_eq!(run("g-inv", "UDDU@3").unwrap(), "|UD|DU");
        assert_eq!(run("F", "(0,0):EENNNNEE").unwrap(), "(0,0):EEEENNEE");
        assert_eq!(run("F-inv", "(0,0):EEEENNEE").unwrap(), "(0,0):EENNNNEE");
        assert_eq!(run("soccer", "(0,0):EE").unwrap(), "(0,0):EN#0");
        assert_eq!(run("soccer-inv", "(0,0):EN#0").unwrap(), "(0,0):EE");
    }

    #[test]
    fn apply_errors() {
        assert!(matches!(run("g", "UDX||"), Err(Error::Parse(_))));
        assert!(matches!(run("g-inv", "UD@7"), Err(Error::Contract(_))));
        assert!(matches!(run("F", "(0,0):EE"), Err(Error::Contract(_))));
        assert!(matches!(run("F-inv", "(0,0):EN"), Err(Error::Contract(_))));
        assert!("G".parse::<Bijection>().is_err());
        let p = Value::Path(NEPath::parse("EN").unwrap());
        assert!(Bijection::G.apply(&p).is_err());
    }
}
