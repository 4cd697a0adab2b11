//! Exact computational library for Thompson-like fraction groups
//! `G = L(Gamma) x| V`.
//!
//! The crate represents Thompson's group V by reduced prefix-replacement
//! tables, discrete loop groups of finite (and one built-in infinite)
//! coefficient groups, the twisted Jones action, cocycles and elementary
//! automorphisms, and the constructive isomorphisms and classification
//! criteria between fraction groups. Everything is exact: integer and
//! dyadic arithmetic only.

pub mod automorphisms;
pub mod cantor;
pub mod classification;
pub mod coeff;
pub mod dyadic;
pub mod error;
pub mod fraction;
pub mod loop_group;
pub mod sampling;
pub mod suites;
pub mod thompson;

pub use cantor::{CPoint, Sdi, SdiUnion, Sdp, Word};
pub use coeff::{Coefficients, DyadicPairTriple, FiniteGroup, GroupMap, Triple};
pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use fraction::{FractionElement, LabelledTree, WreathElement};
pub use loop_group::{IntLoop, LoopElement};
pub use thompson::{NormalizerElement, VElement};
