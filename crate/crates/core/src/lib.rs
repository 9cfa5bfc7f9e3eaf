//! Constructive bijections on lattice paths behind two convolution identities
//! for central binomial coefficients:
//!
//! * `4^n = Σ_i C(2i,i) C(2(n-i),n-i)`, realised by [`warmup`] as a bijection
//!   from all `2n`-step north/east paths onto tie paths with a marked diagonal
//!   point;
//! * `(2n+1) C(2n,n) = Σ_{i+j+k=n} C(2i,i) C(2j,j) C(2k,k)`, realised by
//!   [`hockey`] as a bijection from triples of balanced up/down paths onto
//!   balanced paths with a marked point.
//!
//! Both come with inverses, step traces ([`trace`]), exhaustive enumerators
//! ([`enumerate`]) and a bijectivity checker ([`verify`], [`suites`]). Exact
//! counts live in [`identity`].
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod bijection;
pub mod enumerate;
pub mod error;
pub mod hockey;
pub mod identity;
pub mod path;
pub mod suites;
pub mod trace;
pub mod verify;
pub mod warmup;

pub use bijection::{Bijection, Value, ValueKind};
pub use error::{ContractError, Error, ParseError};
pub use hockey::{MarkedPath, PathTriple, TripleClass};
pub use path::{GridPoint, NEPath, StepNE, StepUD, UDPath};
pub use warmup::{AnkPath, AvoidPath, MarkedTiePath, TiePath};
